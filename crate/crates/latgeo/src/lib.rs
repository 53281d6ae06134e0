//! Exact workbench for the lattice point enumerator `G_n` over rational
//! polytope expressions, and mechanical verification of discrete
//! Rogers-Shephard type inequalities (difference body, sum body,
//! projection-section, refined forms, a planar comparison, a discrete
//! Berwald inequality), including convergence studies that recover the
//! continuous inequalities under dilation.
//!
//! Everything is exact: rational arithmetic throughout, an exact rational
//! simplex as the single geometric membership oracle, and a certified
//! radical-sum comparison engine for the inequalities that involve n-th
//! roots of counts. No floating point enters any decision path.
//!
//! The crate surface is organized like the mathematics:
//!
//! - [`exact`]: rationals, binomial coefficients, dyadic root enclosures,
//!   and exact comparison of sums of radicals.
//! - [`lp`]: exact rational linear programming (Bland's rule).
//! - [`polytope`]: rational V-polytopes and planar (2D) exact subroutines.
//! - [`region`]: set expressions (dilate/erode/intersect/slice) with exact
//!   membership, lattice counting, and rigorous volume intervals.
//! - [`concave`]: concave piecewise-affine functions, the diamond
//!   extension, cone functions, power sums and superlevel counts.
//! - [`checks`]: one operation per inequality, producing [`checks::Verdict`]s.
//! - [`instances`]: seeded random instances and the fixed fixture corpus.
//! - [`suite`]: the deterministic verification suite and report records.
//! - [`format`]: text serialization (rationals as `"p/q"`, polytopes,
//!   regions, functions, instance specs).
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod exact;
pub mod lp;
pub mod polytope;
pub mod region;
pub mod concave;
pub mod checks;
pub mod instances;
pub mod suite;
pub mod format;

pub use exact::{binomial, compare_radical_sums, DyadicInterval, RadicalSum, Rational};
pub use polytope::{LatticePolygon, RationalPolytope};
pub use region::{Region, SublatticeMask, VolumeInterval};
