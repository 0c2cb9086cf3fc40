//! Enumeration of multipliers up to a coefficient height, and the
//! continued-fraction unit solver for real quadratic fields.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{AlgebraicNumber, Field};
use crate::flow::{matrix_from_multiplier, FrequencyVector, Multiplier};
use crate::Rational;

/// Bound on continued-fraction steps before giving up on finding a period.
const MAX_CF_STEPS: usize = 100_000;

/// Every multiplier `α = Σ e_k β^k` with integer `|e_k| ≤ height`, in
/// lexicographic order of `(e_0, …, e_{d-1})`.
///
/// Only elements with integral power-basis coordinates are tried; multipliers
/// outside `Z[β]` are not searched for.
pub fn search_multipliers(a: &FrequencyVector, height: u64) -> Vec<Multiplier> {
    let field = a.field();
    let d = field.degree();
    let h = i64::try_from(height).expect("height fits in i64");
    let mut coeffs = vec![-h; d];
    let mut found = Vec::new();
    loop {
        if coeffs.iter().any(|&c| c != 0) {
            let alpha = AlgebraicNumber::from_ints(field, &coeffs).expect("length matches degree");
            if let Ok(witness) = matrix_from_multiplier(&alpha, a) {
                found.push(Multiplier {
                    value: alpha,
                    witness,
                });
            }
        }
        // Odometer increment, last coordinate fastest.
        let mut k = d;
        loop {
            if k == 0 {
                return found;
            }
            k -= 1;
            if coeffs[k] < h {
                coeffs[k] += 1;
                break;
            }
            coeffs[k] = -h;
        }
    }
}

/// The fundamental unit `ε > 1` of `Z[β]` for a real quadratic field.
///
/// Expands `β` as a continued fraction `ξ_{k+1} = 1/(ξ_k - ⌊ξ_k⌋)` until a
/// complete quotient repeats; the product of the complete quotients over one
/// period generates the units of the lattice `Z + Zβ`, whose multiplier ring
/// is `Z[β]`.
pub fn quadratic_fundamental_unit(field: &Field) -> Result<AlgebraicNumber> {
    if field.degree() != 2 {
        return Err(Error::NotQuadratic);
    }
    let p = field.min_poly();
    let disc: BigInt = &p[1] * &p[1] - BigInt::from(4) * &p[0];
    if !disc.is_positive() {
        return Err(Error::NotRealQuadratic);
    }
    let mut quotients: Vec<AlgebraicNumber> = vec![AlgebraicNumber::generator(field)];
    for _ in 0..MAX_CF_STEPS {
        let xi = quotients.last().expect("nonempty");
        let whole = AlgebraicNumber::from_rational(field, Rational::from_integer(xi.floor()));
        let next = (xi - &whole).inv()?;
        if let Some(start) = quotients.iter().position(|q| *q == next) {
            let mut unit = next.clone();
            for q in &quotients[start + 1..] {
                unit = &unit * q;
            }
            let basis = FrequencyVector::power_basis(field)?;
            matrix_from_multiplier(&unit, &basis)?;
            return Ok(unit);
        }
        quotients.push(next);
    }
    Err(Error::InvalidArgument(
        "continued fraction period not found",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ratio, FieldSpec};
    use alloc::string::ToString;

    fn field(c: &[i64], lo: i64, hi: i64) -> Field {
        FieldSpec::new(
            c.iter().map(|&x| BigInt::from(x)).collect(),
            ratio(lo, 1),
            ratio(hi, 1),
        )
        .unwrap()
    }

    fn coords(ms: &[Multiplier]) -> Vec<Vec<Rational>> {
        ms.iter().map(|m| m.value.coords().to_vec()).collect()
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| ratio(x, 1)).collect())
            .collect()
    }

    #[test]
    fn height_zero_is_empty() {
        let a = FrequencyVector::power_basis(&field(&[-1, -1, 1], 1, 2)).unwrap();
        assert!(search_multipliers(&a, 0).is_empty());
    }

    #[test]
    fn golden_height_one() {
        let a = FrequencyVector::power_basis(&field(&[-1, -1, 1], 1, 2)).unwrap();
        let found = search_multipliers(&a, 1);
        assert_eq!(
            coords(&found),
            ints(&[
                &[-1, -1],
                &[-1, 0],
                &[-1, 1],
                &[0, -1],
                &[0, 1],
                &[1, -1],
                &[1, 0],
                &[1, 1]
            ])
        );
    }

    #[test]
    fn sqrt2_height_one() {
        let a = FrequencyVector::power_basis(&field(&[-2, 0, 1], 1, 2)).unwrap();
        let found = search_multipliers(&a, 1);
        assert_eq!(
            coords(&found),
            ints(&[&[-1, -1], &[-1, 0], &[-1, 1], &[1, -1], &[1, 0], &[1, 1]])
        );
        let unit = found
            .iter()
            .find(|m| m.value.coords() == ints(&[&[1, 1]])[0])
            .unwrap();
        assert_eq!(unit.witness.to_string(), "1,1;2,1");
    }

    #[test]
    fn fundamental_units() {
        let cases: [(&[i64], &[i64]); 4] = [
            (&[-1, -1, 1], &[0, 1]),
            (&[-2, 0, 1], &[1, 1]),
            (&[-3, 0, 1], &[2, 1]),
            // z^2 - 7: 8 + 3√7
            (&[-7, 0, 1], &[8, 3]),
        ];
        for (poly, unit) in cases {
            let f = field(poly, 1, 3);
            let u = quadratic_fundamental_unit(&f).unwrap();
            assert_eq!(u, AlgebraicNumber::from_ints(&f, unit).unwrap());
        }
    }

    #[test]
    fn fundamental_unit_rejects_other_degrees() {
        let f = field(&[-1, -1, 0, 1], 1, 2);
        assert_eq!(quadratic_fundamental_unit(&f), Err(Error::NotQuadratic));
    }
}
