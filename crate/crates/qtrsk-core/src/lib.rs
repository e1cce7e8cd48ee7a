//! Exact-arithmetic engine for a randomized dual Robinson–Schensted–Knuth
//! correspondence in the Macdonald (q,t) setting.
//!
//! The crate is `no_std` (with `alloc`) and is organised in five layers:
//!
//! * [`algebra`] — arbitrary-precision rationals, sparse Laurent polynomials in
//!   (q,t), factored (q,t)-rational functions built from binomials
//!   `1 - q^a t^b`, and univariate rational functions in the Jack parameter α.
//! * [`partition`] — integer partitions, cell geometry (arms, legs, hooks),
//!   strips, corners, and the weight atoms `b_λ(c)`.
//! * [`weights`] — branching coefficients ψ, φ*, φ, tableau weights, and
//!   finite-variable monomial expansions of the Macdonald polynomials P and Q.
//! * [`local`] — corner frames, the forward/backward local transition
//!   probabilities, their hook-length reformulation, lattice-path monomials,
//!   specialisations (q-Whittaker, Hall–Littlewood, Jack), and the classical
//!   deterministic corner bijections.
//! * [`growth`] — dual growth diagrams over 0/1-matrices, exact outcome
//!   distributions, classical dual RSK, randomized insertion, word insertion,
//!   skew growths, and seeded sampling.
//!
//! All values are immutable after construction and safe to share across
//! threads; the crate holds no global state.

#![no_std]
#![deny(missing_docs)]

extern crate alloc;

pub mod algebra;
pub mod growth;
pub mod local;
pub mod partition;
pub mod weights;

pub use algebra::{
    AlphaRational, LaurentPoly2, LimitDirection, MonomialQT, QTFactored, QTSum, Rat,
};
pub use partition::{Cell, Partition, SkewCellSets};

use alloc::string::String;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two points that were expected to differ are equal.
    EqualPoints,
    /// Neither exponent pair dominates the other in the product order.
    IncomparablePoints,
    /// Division by zero in exact arithmetic.
    DivideByZero,
    /// A denominator factor vanishes at the evaluation point.
    PoleAtPoint,
    /// The requested limit diverges.
    LimitDiverges,
    /// Jack limit is 0 or ∞ because factor counts are unbalanced.
    JackLimitUndefined,
    /// A cell lies outside the shape it was queried against.
    CellOutsideShape,
    /// A partition is not contained in another as required.
    NotContained,
    /// A skew shape is not a horizontal strip.
    NotHorizontalStrip,
    /// A skew shape is not a vertical strip.
    NotVerticalStrip,
    /// The pair of partitions fails the compatibility condition.
    IncompatiblePair,
    /// A partition cannot be obtained by toggling frame corners.
    NotDecomposable,
    /// Subset cardinalities violate the local-rule constraint.
    BadSubsetSizes,
    /// Tableau boundary data does not match the requested grid.
    BoundaryMismatch,
    /// Tableaux have different shapes where equal shapes are required.
    ShapeMismatch,
    /// A matrix violates the at-most-one-entry-per-column restriction.
    ColumnConstraintViolated,
    /// A sampling parameter is outside the supported range.
    ParameterOutOfRange,
    /// Free-form invariant violation with a short description.
    Invalid(String),
}

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
