//! Exact evaluation of t-norm based propositional logics over chains of
//! truth values, with checkers for the one-set equivalence principle (P1)
//! and the zero-separation principle (P2, with variants P2′ and P2″).

pub mod algebra;
pub mod error;
pub mod formula;
pub mod mcnaughton;
pub mod parser;
pub mod principles;
pub mod rational;
pub mod semantics;

pub use algebra::{enumerate_finite_chains, Algebra, ChainTable, Summand, TruthValue};
pub use error::{Error, Result};
pub use formula::{BasicLiteral, Formula, Step};
pub use parser::parse_formula;
pub use rational::Rational;
pub use mcnaughton::{literal_to_pwl, pwl_zero_set, separate_points, threshold_literal, PwlFunction, Separation, ZeroSet};
pub use principles::{
    census, check_p1, check_p2, check_p2_on_pairs, classify_chain, indiscernible_pair, verify_report, ChainClass,
    Classification, Principle, PrincipleReport, Verdict, Witness,
};
pub use semantics::{
    all_valuations, are_equivalent, enumerate_formulas, eval, is_tautology, one_set, semantic_consequence, Connectives,
    Judgment, OneSet, Valuation,
};
