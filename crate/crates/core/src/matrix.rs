//! Square integer matrices and the unimodular operations the symmetry
//! routines need.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::AlgebraicNumber;

/// An `n × n` matrix of big integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        Ok(IntMatrix { n, entries })
    }

    /// Builds a matrix from rows of machine integers. Panics on ragged input.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, BigInt::one())
    }

    pub fn scalar(n: usize, k: BigInt) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = k.clone();
        }
        IntMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// `self == k·I`.
    pub fn is_scalar(&self, k: &BigInt) -> bool {
        *self == Self::scalar(self.n, k.clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    fn add_scaled_identity(&self, k: &BigInt) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.entries[i * self.n + i] += k;
        }
        out
    }

    fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v.div_floor(&prev);
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Characteristic polynomial `det(zI - B)`, low-to-high, by the
    /// Faddeev–LeVerrier recurrence (all divisions are exact).
    pub fn char_poly(&self) -> Vec<BigInt> {
        let n = self.n;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        };
        for k in 1..=n {
            m = self
                .mul(&m)
                .expect("same dimension")
                .add_scaled_identity(&coeffs[n - k + 1]);
            let am = self.mul(&m).expect("same dimension");
            coeffs[n - k] = -am.trace() / BigInt::from(k);
        }
        coeffs
    }

    /// Inverse of a unimodular matrix via Cayley–Hamilton.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let cp = self.char_poly();
        let c0 = &cp[0];
        if !c0.abs().is_one() {
            return Err(Error::NotUnimodular);
        }
        // B^{-1} = -(B^{n-1} + c_{n-1}B^{n-2} + … + c_1 I) / c_0
        let mut acc = IntMatrix::identity(n);
        for k in (1..n).rev() {
            acc = self
                .mul(&acc)
                .expect("same dimension")
                .add_scaled_identity(&cp[k]);
        }
        let scale = -c0;
        Ok(IntMatrix {
            n,
            entries: acc.entries.into_iter().map(|x| x * &scale).collect(),
        })
    }

    /// `B·v` for a vector of field elements.
    pub fn apply(&self, v: &[AlgebraicNumber]) -> Result<Vec<AlgebraicNumber>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        let field = v[0].field();
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .try_fold(AlgebraicNumber::zero(field), |acc, (b, x)| {
                        acc.checked_add(&x.scale_int(b))
                    })
            })
            .collect()
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut base = if exp < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = IntMatrix::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Display for IntMatrix {
    /// Row-major, `;` between rows and `,` between entries: `0,1;1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ints(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(
            IntMatrix::from_rows(&[&[0, 1], &[1, 1]]).det(),
            BigInt::from(-1)
        );
        assert_eq!(
            IntMatrix::from_rows(&[&[2, 0], &[0, 2]]).det(),
            BigInt::from(4)
        );
        let m = IntMatrix::from_rows(&[&[0, 2, 1], &[1, 0, 3], &[4, 1, 0]]);
        // cofactor expansion: 0 - 2(0 - 12) + 1(1 - 0) = 25
        assert_eq!(m.det(), BigInt::from(25));
        let singular = IntMatrix::from_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
        assert_eq!(singular.det(), BigInt::zero());
    }

    #[test]
    fn char_poly_of_fibonacci_matrix() {
        let b = IntMatrix::from_rows(&[&[0, 1], &[1, 1]]);
        assert_eq!(b.char_poly(), ints(&[-1, -1, 1]));
        let c = IntMatrix::from_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]);
        assert_eq!(c.char_poly(), ints(&[-1, -1, 0, 1]));
    }

    #[test]
    fn unimodular_inverse() {
        let b = IntMatrix::from_rows(&[&[0, 1], &[1, 1]]);
        let inv = b.inverse().unwrap();
        assert_eq!(inv, IntMatrix::from_rows(&[&[-1, 1], &[1, 0]]));
        assert!(b.mul(&inv).unwrap().is_identity());
        assert_eq!(
            IntMatrix::from_rows(&[&[2, 0], &[0, 1]]).inverse(),
            Err(Error::NotUnimodular)
        );
        let c = IntMatrix::from_rows(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        assert!(c.mul(&c.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn powers_and_display() {
        let b = IntMatrix::from_rows(&[&[0, 1], &[1, 1]]);
        assert_eq!(b.pow(3).unwrap(), IntMatrix::from_rows(&[&[1, 2], &[2, 3]]));
        assert!(b
            .pow(-2)
            .unwrap()
            .mul(&b.pow(2).unwrap())
            .unwrap()
            .is_identity());
        assert_eq!(b.to_string(), "0,1;1,1");
    }
}
