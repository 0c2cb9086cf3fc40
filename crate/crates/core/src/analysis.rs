//! Checks of the analytic facts behind the classification: the
//! characteristic form of a symmetry lift, the lifted symmetry equation
//! `Σ_j a_j ∂f_i/∂x_j = α a_i`, and the density of the set
//! `J = {(m_1 − (a_1/a_n)m_n, …, m_{n-1} − (a_{n-1}/a_n)m_n)}` mod 1.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::AlgebraicNumber;
use crate::flow::{multiplier_from_matrix, FrequencyVector};
use crate::lift::AffineLift;
use crate::Rational;

/// A symmetry lift written through the free data of the general solution:
/// the first `n-1` columns of `B`, the constants `c_i`, and `α`. The last
/// column is determined by
/// `b_in = α a_i/a_n − Σ_{j<n} b_ij a_j/a_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacteristicForm {
    pub alpha: AlgebraicNumber,
    /// `b_ij` for `j < n`, row by row.
    pub h_coeffs: Vec<Vec<AlgebraicNumber>>,
    pub h_consts: Vec<AlgebraicNumber>,
    pub derived_last_column: Vec<AlgebraicNumber>,
}

/// Splits a lift into its characteristic form and checks that the last
/// column recomputed from `α` and the free columns matches the matrix.
pub fn decompose_lift(f: &AffineLift, a: &FrequencyVector) -> Result<CharacteristicForm> {
    let alpha = multiplier_from_matrix(f.matrix(), a)?.value;
    let field = a.field();
    let n = a.dim();
    let freqs = a.components();
    let inv_last = freqs[n - 1].inv()?;
    let mut h_coeffs = Vec::with_capacity(n);
    let mut derived_last_column = Vec::with_capacity(n);
    for i in 0..n {
        let row: Vec<AlgebraicNumber> = f.matrix().row(i)[..n - 1]
            .iter()
            .map(|b| AlgebraicNumber::from_rational(field, Rational::from_integer(b.clone())))
            .collect();
        let mut last = &(&alpha * &freqs[i]) * &inv_last;
        for (b, aj) in row.iter().zip(freqs) {
            last = &last - &(&(b * aj) * &inv_last);
        }
        let actual = AlgebraicNumber::from_rational(
            field,
            Rational::from_integer(f.matrix().get(i, n - 1).clone()),
        );
        if last != actual {
            return Err(Error::RelationViolated);
        }
        h_coeffs.push(row);
        derived_last_column.push(last);
    }
    Ok(CharacteristicForm {
        alpha,
        h_coeffs,
        h_consts: f.translation().to_vec(),
        derived_last_column,
    })
}

/// `(Σ_j b_ij a_j − α a_i)_i`. For an affine lift `∂f_i/∂x_j = b_ij`, so
/// this is zero exactly when the lift satisfies the lifted symmetry
/// equation with multiplier `α`.
pub fn pde_residual(
    f: &AffineLift,
    alpha: &AlgebraicNumber,
    a: &FrequencyVector,
) -> Result<Vec<AlgebraicNumber>> {
    let image = a.image(f.matrix())?;
    image
        .iter()
        .zip(a.components())
        .map(|(lhs, ai)| lhs.checked_sub(&alpha.checked_mul(ai)?))
        .collect()
}

/// Fixed-point scale `2^bits` large enough that `2·(M+1)` rounding errors of
/// one unit each stay below `eps/2`.
fn scale_bits(max_m: u64, eps: &Rational) -> Result<u32> {
    let target = Rational::from_integer(BigInt::from(4) * BigInt::from(max_m + 1)) / eps;
    let mut bits = 0u32;
    while Rational::from_integer(BigInt::one() << bits) < target {
        bits += 1;
        if bits > 120 {
            return Err(Error::InvalidArgument("eps too small for the point count"));
        }
    }
    Ok(bits)
}

/// Residues `m·r mod 1`, `|m| ≤ max_m`, for each ratio `r = a_i/a_n`,
/// `i < n`, as integers scaled by `2^bits`.
fn j_points(a: &FrequencyVector, max_m: u64, bits: u32) -> Result<Vec<Vec<u128>>> {
    let n = a.dim();
    let freqs = a.components();
    let last = &freqs[n - 1];
    let modulus = BigInt::one() << bits;
    let ratios = freqs[..n - 1]
        .iter()
        .map(|ai| {
            let r = ai.checked_div(last)?;
            Ok(r.approximate_scaled(bits))
        })
        .collect::<Result<Vec<BigInt>>>()?;
    let m = i64::try_from(max_m).map_err(|_| Error::InvalidArgument("M too large"))?;
    let mut points = Vec::with_capacity((2 * max_m + 1) as usize);
    for k in -m..=m {
        let point = ratios
            .iter()
            .map(|r| {
                let v = (r * BigInt::from(k)) % &modulus;
                let v = if v < BigInt::zero() { v + &modulus } else { v };
                v.to_u128().expect("residue below 2^120")
            })
            .collect();
        points.push(point);
    }
    Ok(points)
}

/// Largest gap between consecutive points of `{frac(m·a_1/a_2) : |m| ≤ M}`
/// on the circle, accurate to within `eps`. Only defined for `n = 2`.
pub fn density_gap(a: &FrequencyVector, max_m: u64, eps: &Rational) -> Result<Rational> {
    if a.dim() != 2 {
        return Err(Error::DimensionUnsupported(a.dim()));
    }
    if *eps <= Rational::zero() {
        return Err(Error::InvalidArgument("eps must be positive"));
    }
    let bits = scale_bits(max_m, eps)?;
    let mut residues: Vec<u128> = j_points(a, max_m, bits)?
        .into_iter()
        .map(|p| p[0])
        .collect();
    residues.sort_unstable();
    residues.dedup();
    let full = 1u128 << bits;
    let mut gap = full - residues[residues.len() - 1] + residues[0];
    for w in residues.windows(2) {
        gap = gap.max(w[1] - w[0]);
    }
    Ok(Rational::new(BigInt::from(gap), BigInt::from(full)))
}

fn torus_distance(x: u128, y: u128, full: u128) -> u128 {
    let d = x.abs_diff(y);
    d.min(full - d)
}

/// Covering radius of the `J`-points with `|m_n| ≤ M` in the torus
/// `[0,1)^{n-1}` under the max-coordinate torus metric.
///
/// For `n = 2` this is the exact supremum over the circle, half of
/// [`density_gap`]. For `n ≥ 3` it is the largest distance from one of the
/// `grid^{n-1}` probe points `k/grid` to its nearest `J`-point.
pub fn density_covering_radius(
    a: &FrequencyVector,
    max_m: u64,
    grid: u64,
    eps: &Rational,
) -> Result<Rational> {
    if grid == 0 {
        return Err(Error::InvalidArgument("grid must be positive"));
    }
    if a.dim() == 2 {
        return Ok(density_gap(a, max_m, eps)? / Rational::from_integer(BigInt::from(2)));
    }
    if *eps <= Rational::zero() {
        return Err(Error::InvalidArgument("eps must be positive"));
    }
    let bits = scale_bits(max_m, eps)?;
    let points = j_points(a, max_m, bits)?;
    let full = 1u128 << bits;
    let dims = a.dim() - 1;
    let probe_coord = |k: u64| (BigInt::from(k) << bits) / BigInt::from(grid);
    let coords: Vec<u128> = (0..grid)
        .map(|k| probe_coord(k).to_u128().expect("below 2^120"))
        .collect();
    let probes = grid
        .checked_pow(dims as u32)
        .ok_or(Error::InvalidArgument("too many probe points"))?;
    let mut radius = 0u128;
    let mut index = alloc::vec![0usize; dims];
    for _ in 0..probes {
        let probe: Vec<u128> = index.iter().map(|&k| coords[k]).collect();
        let nearest = points
            .iter()
            .map(|p| {
                p.iter()
                    .zip(&probe)
                    .map(|(&x, &y)| torus_distance(x, y, full))
                    .max()
                    .unwrap_or(0)
            })
            .min()
            .unwrap_or(full);
        radius = radius.max(nearest);
        for slot in index.iter_mut() {
            *slot += 1;
            if *slot < grid as usize {
                break;
            }
            *slot = 0;
        }
    }
    Ok(Rational::new(BigInt::from(radius), BigInt::from(full)))
}
