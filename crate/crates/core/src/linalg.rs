//! Gaussian elimination over the rationals.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::Rational;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == height {
            break;
        }
        let Some(p) = (r..height).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work).len()
}

/// Inverse of a square matrix, `None` when singular.
pub fn invert(square: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = square.len();
    let mut aug: Vec<Vec<Rational>> = square
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `row · matrix` for a row vector.
pub fn row_times(row: &[Rational], matrix: &[Vec<Rational>]) -> Vec<Rational> {
    let width = matrix.first().map_or(0, Vec::len);
    (0..width)
        .map(|j| {
            row.iter()
                .zip(matrix)
                .fold(Rational::zero(), |acc, (x, m)| acc + x * &m[j])
        })
        .collect()
}
