//! Exact scalar arithmetic: arbitrary-precision rationals, binomial
//! coefficients, certified dyadic enclosures of k-th roots, and an exact
//! comparison engine for finite sums of radicals.

mod dyadic;
mod radical;
mod rational;

pub use dyadic::{root_enclosure, DyadicInterval};
pub use radical::{
    compare_radical_sums, compare_radical_sums_with_cap, RadicalSum, RadicalTerm,
    DEFAULT_PRECISION_CAP,
};
pub use rational::{binomial, format_rational, parse_rational, rat, rat_int, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("domain error: {0}")]
    Domain(String),
    /// The radical comparison engine could not separate the two sides
    /// within the precision budget and the canonical forms differ.
    #[error("indeterminate at {precision_bits} fractional bits")]
    Indeterminate { precision_bits: u32 },
}
