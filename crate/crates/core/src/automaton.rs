//! Aho-Corasick construction and the pruned avoidance DFA.
//!
//! The automaton states are the trie nodes of the pattern set; failure
//! links point to the longest proper suffix that is also a trie node, and
//! goto transitions are failure-completed so every state has exactly one
//! transition per letter. A state is terminal when a pattern ends there,
//! directly or through its failure chain. Removing terminal states yields
//! a deterministic automaton whose every state is accepting and whose
//! language is exactly the set of words avoiding all patterns; word counts
//! come from iterating its adjacency matrix.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::words::{Letter, Word};
use crate::Result;

const ALPHABET: [Letter; 2] = [Letter::L, Letter::S];

/// Failure-completed Aho-Corasick automaton over `{L, S}`.
///
/// State 0 is the root; states are indexed in trie insertion order with
/// breadth-first failure computation.
#[derive(Debug, Clone)]
pub struct AcAutomaton {
    labels: Vec<Word>,
    goto_: Vec<[usize; 2]>,
    fail: Vec<usize>,
    out: Vec<Vec<usize>>,
    patterns: Vec<Word>,
}

impl AcAutomaton {
    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    /// Trie prefix labelling each state.
    pub fn labels(&self) -> &[Word] {
        &self.labels
    }

    pub fn patterns(&self) -> &[Word] {
        &self.patterns
    }

    pub fn failure(&self, state: usize) -> usize {
        self.fail[state]
    }

    pub fn next_state(&self, state: usize, letter: Letter) -> usize {
        self.goto_[state][letter.bit() as usize]
    }

    /// Pattern indices matched when entering `state`, including matches
    /// reached through the failure chain.
    pub fn outputs(&self, state: usize) -> &[usize] {
        &self.out[state]
    }

    pub fn is_terminal(&self, state: usize) -> bool {
        !self.out[state].is_empty()
    }

    pub fn terminal_count(&self) -> usize {
        (0..self.state_count()).filter(|&q| self.is_terminal(q)).count()
    }
}

/// Build the failure-completed Aho-Corasick automaton for a pattern set.
pub fn build_ac(patterns: &[Word]) -> Result<AcAutomaton> {
    if patterns.is_empty() {
        return Err(Error::InvalidParameter("pattern set must be nonempty".into()));
    }
    if patterns.iter().any(Word::is_empty) {
        return Err(Error::EmptyPattern);
    }

    // Trie.
    let mut labels: Vec<Word> = vec![Word::default()];
    let mut children: Vec<[Option<usize>; 2]> = vec![[None; 2]];
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for (pi, pattern) in patterns.iter().enumerate() {
        let mut state = 0usize;
        for &letter in pattern.letters() {
            let slot = letter.bit() as usize;
            state = match children[state][slot] {
                Some(next) => next,
                None => {
                    let mut label = labels[state].letters().to_vec();
                    label.push(letter);
                    labels.push(Word::new(label));
                    children.push([None; 2]);
                    out.push(Vec::new());
                    let next = labels.len() - 1;
                    children[state][slot] = Some(next);
                    next
                }
            };
        }
        out[state].push(pi);
    }

    // Failure links and goto completion, breadth-first.
    let n = labels.len();
    let mut fail = vec![0usize; n];
    let mut goto_ = vec![[0usize; 2]; n];
    let mut queue = VecDeque::new();
    for letter in ALPHABET {
        let slot = letter.bit() as usize;
        match children[0][slot] {
            Some(next) => {
                fail[next] = 0;
                goto_[0][slot] = next;
                queue.push_back(next);
            }
            None => goto_[0][slot] = 0,
        }
    }
    while let Some(state) = queue.pop_front() {
        let suffix_out = out[fail[state]].clone();
        out[state].extend(suffix_out);
        for letter in ALPHABET {
            let slot = letter.bit() as usize;
            match children[state][slot] {
                Some(next) => {
                    fail[next] = goto_[fail[state]][slot];
                    goto_[state][slot] = next;
                    queue.push_back(next);
                }
                None => goto_[state][slot] = goto_[fail[state]][slot],
            }
        }
    }

    Ok(AcAutomaton {
        labels,
        goto_,
        fail,
        out,
        patterns: patterns.to_vec(),
    })
}

/// Deterministic avoidance automaton: the nonterminal states of an
/// Aho-Corasick automaton with the induced (partial) transitions.
///
/// Every state is accepting; the start state is the image of the root.
/// States unreachable from the start are dropped, states without outgoing
/// transitions are kept (finite valid words may end there).
#[derive(Debug, Clone, Serialize)]
pub struct AvoidanceDfa {
    labels: Vec<Word>,
    transitions: Vec<[Option<usize>; 2]>,
    start: usize,
    adjacency: Vec<Vec<u8>>,
}

impl AvoidanceDfa {
    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn labels(&self) -> &[Word] {
        &self.labels
    }

    pub fn transition(&self, state: usize, letter: Letter) -> Option<usize> {
        self.transitions[state][letter.bit() as usize]
    }

    /// Entry `(p, q)` counts the letters taking `p` to `q`; values lie in
    /// `{0, 1, 2}` and row sums are at most 2.
    pub fn adjacency(&self) -> &[Vec<u8>] {
        &self.adjacency
    }

    /// True iff `word` avoids every pattern of the automaton.
    pub fn accepts(&self, word: &Word) -> bool {
        let mut state = self.start;
        for &letter in word.letters() {
            match self.transition(state, letter) {
                Some(next) => state = next,
                None => return false,
            }
        }
        true
    }
}

/// Restrict an Aho-Corasick automaton to its nonterminal states.
pub fn prune_to_avoidance(ac: &AcAutomaton) -> AvoidanceDfa {
    let n = ac.state_count();
    let keep: Vec<bool> = (0..n).map(|q| !ac.is_terminal(q)).collect();

    // Reachability from the root over kept states only.
    let mut reach = vec![false; n];
    if keep[0] {
        reach[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(state) = queue.pop_front() {
            for letter in ALPHABET {
                let next = ac.next_state(state, letter);
                if keep[next] && !reach[next] {
                    reach[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }

    let mut index = vec![usize::MAX; n];
    let mut labels = Vec::new();
    for q in 0..n {
        if keep[q] && reach[q] {
            index[q] = labels.len();
            labels.push(ac.labels()[q].clone());
        }
    }

    let m = labels.len();
    let mut transitions = vec![[None; 2]; m];
    let mut adjacency = vec![vec![0u8; m]; m];
    for q in 0..n {
        if index[q] == usize::MAX {
            continue;
        }
        for letter in ALPHABET {
            let next = ac.next_state(q, letter);
            if index[next] != usize::MAX {
                transitions[index[q]][letter.bit() as usize] = Some(index[next]);
                adjacency[index[q]][index[next]] += 1;
            }
        }
    }

    AvoidanceDfa {
        labels,
        transitions,
        start: 0,
        adjacency,
    }
}

/// Exact number of length-`n` words accepted by the automaton, by iterated
/// integer matrix-vector products on the adjacency matrix.
pub fn count_words(dfa: &AvoidanceDfa, n: usize) -> BigUint {
    let m = dfa.state_count();
    if m == 0 {
        return if n == 0 { BigUint::one() } else { BigUint::zero() };
    }
    // v[q] = number of length-t paths from the start ending at q.
    let mut v = vec![BigUint::zero(); m];
    v[dfa.start()] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); m];
        for (p, row) in dfa.adjacency().iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            for (q, &count) in row.iter().enumerate() {
                if count > 0 {
                    next[q] += &v[p] * count;
                }
            }
        }
        v = next;
    }
    v.into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::boundary_flip_mffs;

    fn patterns(words: &[&str]) -> Vec<Word> {
        words.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn single_pattern_trie_shape() {
        let ac = build_ac(&patterns(&["SS"])).unwrap();
        assert_eq!(ac.state_count(), 3);
        assert_eq!(ac.terminal_count(), 1);
    }

    #[test]
    fn two_pattern_trie_shape() {
        let ac = build_ac(&patterns(&["SS", "LLL"])).unwrap();
        assert_eq!(ac.state_count(), 6);
        assert_eq!(ac.terminal_count(), 2);
    }

    #[test]
    fn one_terminal_per_mff() {
        // No MFF is a factor of another, so terminals are exactly the leaves.
        let mffs = boundary_flip_mffs(5).unwrap();
        let ac = build_ac(mffs.members()).unwrap();
        assert_eq!(ac.terminal_count(), 3);
    }

    #[test]
    fn empty_pattern_is_rejected() {
        let pats = vec![Word::default()];
        assert!(matches!(build_ac(&pats), Err(Error::EmptyPattern)));
    }

    #[test]
    fn golden_mean_dfa_is_the_two_state_machine() {
        let ac = build_ac(&patterns(&["SS"])).unwrap();
        let dfa = prune_to_avoidance(&ac);
        assert_eq!(dfa.state_count(), 2);
        assert_eq!(dfa.adjacency(), &[vec![1, 1], vec![1, 0]]);
        assert_eq!(dfa.transition(0, Letter::L), Some(0));
        assert_eq!(dfa.transition(0, Letter::S), Some(1));
        assert_eq!(dfa.transition(1, Letter::L), Some(0));
        assert_eq!(dfa.transition(1, Letter::S), None);
    }

    #[test]
    fn everything_forbidden_leaves_only_the_empty_word() {
        let ac = build_ac(&patterns(&["L", "S"])).unwrap();
        let dfa = prune_to_avoidance(&ac);
        assert_eq!(dfa.state_count(), 1);
        assert_eq!(count_words(&dfa, 0), BigUint::from(1u32));
        assert_eq!(count_words(&dfa, 1), BigUint::from(0u32));
    }

    #[test]
    fn counts_match_the_reported_ground_state_degeneracies() {
        let dfa3 = prune_to_avoidance(&build_ac(boundary_flip_mffs(3).unwrap().members()).unwrap());
        assert_eq!(count_words(&dfa3, 12), BigUint::from(377u32));
        let dfa4 = prune_to_avoidance(&build_ac(boundary_flip_mffs(4).unwrap().members()).unwrap());
        assert_eq!(count_words(&dfa4, 12), BigUint::from(49u32));
        assert_eq!(count_words(&dfa4, 0), BigUint::from(1u32));
    }

    #[test]
    fn counts_agree_with_brute_force_for_small_rungs() {
        for k in 3..=6u32 {
            let mffs = boundary_flip_mffs(k).unwrap();
            let dfa = prune_to_avoidance(&build_ac(mffs.members()).unwrap());
            for n in 0..=16usize {
                let brute = (0..(1u64 << n))
                    .filter(|&bits| {
                        let w = Word::from_bits(bits, n);
                        mffs.members().iter().all(|m| !w.contains_factor(m))
                    })
                    .count();
                assert_eq!(
                    count_words(&dfa, n),
                    BigUint::from(brute),
                    "K={k} N={n}"
                );
            }
        }
    }

    #[test]
    fn languages_nest_as_rungs_increase() {
        let dfas: Vec<AvoidanceDfa> = (3..=6)
            .map(|k| prune_to_avoidance(&build_ac(boundary_flip_mffs(k).unwrap().members()).unwrap()))
            .collect();
        for n in 0..=20usize {
            for w in dfas.windows(2) {
                assert!(count_words(&w[1], n) <= count_words(&w[0], n));
            }
        }
    }

    #[test]
    fn adjacency_entries_are_letter_counts() {
        for k in 3..=6u32 {
            let dfa = prune_to_avoidance(&build_ac(boundary_flip_mffs(k).unwrap().members()).unwrap());
            for row in dfa.adjacency() {
                assert!(row.iter().all(|&e| e <= 2));
                assert!(row.iter().map(|&e| e as u32).sum::<u32>() <= 2);
            }
        }
    }

    #[test]
    fn acceptance_matches_naive_search() {
        let mffs = boundary_flip_mffs(6).unwrap();
        let dfa = prune_to_avoidance(&build_ac(mffs.members()).unwrap());
        for n in 0..=14usize {
            for bits in 0..(1u64 << n) {
                let w = Word::from_bits(bits, n);
                let naive = mffs.members().iter().all(|m| !w.contains_factor(m));
                assert_eq!(dfa.accepts(&w), naive, "word {w}");
            }
        }
    }
}
