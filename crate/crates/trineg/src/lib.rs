//! Fuzzy sets and a three-valued propositional logic with three kinds of
//! negation — contradictory, opposite, and intermediary — plus the
//! machinery to audit their algebra, check Hilbert-style derivations,
//! and run a threshold-gated fuzzy decision pipeline.
//!
//! Modules:
//!
//! * [`degree`] — membership degrees and the three pointwise negations;
//! * [`set`] — fuzzy sets over finite universes with the min/max lattice;
//! * [`trichotomy`] — crisp species/opposite/intermediary partitions;
//! * [`audit`] — grid and sample based property auditing of the algebra;
//! * [`syntax`] — formula AST, parser, and printer;
//! * [`semantics`] — three-valued evaluation, validity, and entailment;
//! * [`proof`] — axiom schemas, proof checking, and the theorem corpus;
//! * [`decision`] — the multi-attribute fuzzy decision pipeline.

pub mod audit;
pub mod decision;
pub mod degree;
pub mod error;
pub mod proof;
pub mod semantics;
pub mod set;
pub mod syntax;
pub mod trichotomy;

pub use degree::{
    con_neg, degree_grid, int_neg, opp_neg, Lambda, NegationConfig, NegationVariant, TruthDegree,
};
pub use error::{ScoiError, TrichotomyError};
pub use set::{FuzzySet, NegationKind, SetKind};
pub use syntax::{parse, render, Formula};
