//! Forbidden-factor chain hierarchy for the Fibonacci word.
//!
//! The library builds, for each rung `K >= 3`, the family of minimal
//! forbidden factors of the infinite Fibonacci word up to length `F_K`,
//! and everything downstream of it:
//!
//! * [`words`] — the Fibonacci word, factor enumeration, and two
//!   independent generators for the minimal forbidden factors (exhaustive
//!   scan and the boundary-flip recursion).
//! * [`automaton`] — Aho-Corasick construction, pruning to the avoidance
//!   DFA, and exact word counting from its adjacency matrix.
//! * [`growth`] — growth constants, the entropy staircase and energy
//!   scales, and the closed-form analysis of the `SS`/`LLL` chain
//!   (recurrence, root constants, rounding-identity scan).
//! * [`spectrum`] — the diagonal window-penalty energy function, exact
//!   spectra and ground spaces at small sizes, and three-site sector ranks.
//! * [`hobo`] — the energy as a multilinear pseudo-Boolean polynomial,
//!   quadratization with ancilla penalties, exact reduction verification,
//!   and coordinate-format export.
//! * [`anneal`] — a deterministic Metropolis harness: forward annealing,
//!   reverse-style refinement from a supplied state, and success
//!   statistics validated against the avoidance DFA.

pub mod anneal;
pub mod automaton;
pub mod error;
pub mod growth;
pub mod hobo;
pub mod precision;
pub mod spectrum;
pub mod words;

pub use anneal::{forward_anneal, reverse_refine, success_statistics, AnnealConfig, AnnealReport, ReverseSchedule, ValidityOracle};
pub use automaton::{build_ac, count_words, prune_to_avoidance, AcAutomaton, AvoidanceDfa};
pub use error::Error;
pub use growth::{perron_root, plastic_closed_form, plastic_sequence, rounding_identity_scan, staircase, GrowthReport, PerronEstimate, PlasticClosedForm, RoundingScan};
pub use hobo::{build_hobo, quadratize, verify_reduction, HoboPolynomial, QuboModel, ReductionVerdict};
pub use spectrum::{energy, full_spectrum, kernel_equals_language, local_sector_rank, CouplingScheme, HamiltonianSpec, KernelWitness, SpectrumReport};
pub use words::{boundary_flip_mffs, factor_set, fibonacci_numbers, fibonacci_word_prefix, scan_mffs, scan_mffs_auto, Letter, MffSet, Word};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
