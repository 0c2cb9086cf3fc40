//! Exact computation of the generalized symmetry group of a linear flow on
//! the n-torus.
//!
//! A flow `θ ↦ θ + t·a` on `T^n` with rationally independent frequencies
//! `a = (a_1, …, a_n)` has, as generalized symmetries, exactly the affine
//! maps `x ↦ Bx + c` with `B` unimodular and `B·a = α·a`. This crate works
//! with such lifts over a fixed real number field: it finds multipliers,
//! reconstructs their matrices, and checks the semidirect-product structure
//! of the symmetry group on finite torsion models.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod error;
pub mod field;
pub mod flow;
pub mod group;
pub mod lift;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod search;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub use error::{Error, Result};
pub use field::{ratio, AlgebraicNumber, Field, FieldSpec};
pub use flow::{FrequencyVector, Multiplier};
pub use lift::{AffineLift, SymmetryClass};
pub use matrix::IntMatrix;
