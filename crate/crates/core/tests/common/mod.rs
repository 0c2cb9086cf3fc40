#![allow(dead_code)]

use num_bigint::BigInt;
use quasiflow_core::{ratio, AlgebraicNumber, Field, FieldSpec, FrequencyVector};

pub fn field(coeffs: &[i64], lo: i64, hi: i64) -> Field {
    FieldSpec::new(
        coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        ratio(lo, 1),
        ratio(hi, 1),
    )
    .unwrap()
}

/// z^2 - z - 1, β = φ.
pub fn golden() -> Field {
    field(&[-1, -1, 1], 1, 2)
}

/// z^2 - 2, β = √2.
pub fn sqrt2() -> Field {
    field(&[-2, 0, 1], 1, 2)
}

/// z^3 - z - 1, β the plastic number.
pub fn plastic() -> Field {
    field(&[-1, -1, 0, 1], 1, 2)
}

pub fn flow(f: &Field) -> FrequencyVector {
    FrequencyVector::power_basis(f).unwrap()
}

pub fn el(f: &Field, coords: &[i64]) -> AlgebraicNumber {
    AlgebraicNumber::from_ints(f, coords).unwrap()
}
