//! Frequency vectors of linear torus flows and the correspondence between
//! multipliers and unimodular matrices.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{AlgebraicNumber, Field, FieldSpec};
use crate::linalg;
use crate::matrix::IntMatrix;
use crate::Rational;

/// True iff no nonzero integer vector `m` has `Σ m_j a_j = 0`.
///
/// The `a_j` are independent over `Q` exactly when their power-basis
/// coordinate rows have full rank.
pub fn check_rational_independence(a: &[AlgebraicNumber]) -> bool {
    let Some(first) = a.first() else {
        return true;
    };
    if a.iter()
        .any(|x| !FieldSpec::same_field(x.field(), first.field()))
    {
        return false;
    }
    let rows: Vec<Vec<Rational>> = a.iter().map(|x| x.coords().to_vec()).collect();
    linalg::rank(&rows) == a.len()
}

/// The frequencies `(a_1, …, a_n)` of the constant vector field generating
/// a quasiperiodic flow.
#[derive(Debug, Clone)]
pub struct FrequencyVector {
    field: Field,
    a: Vec<AlgebraicNumber>,
    // Columns of the coordinate matrix forming an invertible n×n block,
    // and that block's inverse; used to solve `b · C = v` for a row `b`.
    pivots: Vec<usize>,
    pivot_inverse: Vec<Vec<Rational>>,
}

impl PartialEq for FrequencyVector {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
    }
}

impl FrequencyVector {
    pub fn new(field: &Field, a: Vec<AlgebraicNumber>) -> Result<Self> {
        let n = a.len();
        if n < 2 {
            return Err(Error::InvalidArgument(
                "a flow needs at least two frequencies",
            ));
        }
        if a.iter().any(|x| !FieldSpec::same_field(x.field(), field)) {
            return Err(Error::FieldMismatch);
        }
        if n > field.degree() || !check_rational_independence(&a) {
            return Err(Error::DependentFrequencies);
        }
        if a[n - 1].is_zero() {
            return Err(Error::DependentFrequencies);
        }
        let mut rows: Vec<Vec<Rational>> = a.iter().map(|x| x.coords().to_vec()).collect();
        let pivots = linalg::rref(&mut rows);
        let block: Vec<Vec<Rational>> = a
            .iter()
            .map(|x| pivots.iter().map(|&k| x.coords()[k].clone()).collect())
            .collect();
        let pivot_inverse = linalg::invert(&block).ok_or(Error::DependentFrequencies)?;
        Ok(FrequencyVector {
            field: field.clone(),
            a,
            pivots,
            pivot_inverse,
        })
    }

    /// The flow whose frequencies are the power basis `1, β, …, β^{d-1}`.
    pub fn power_basis(field: &Field) -> Result<Self> {
        let beta = AlgebraicNumber::generator(field);
        let mut a = Vec::with_capacity(field.degree());
        let mut p = AlgebraicNumber::one(field);
        for _ in 0..field.degree() {
            a.push(p.clone());
            p = &p * &beta;
        }
        Self::new(field, a)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn components(&self) -> &[AlgebraicNumber] {
        &self.a
    }

    /// Rational row `b` with `Σ_j b_j a_j = target`, if one exists.
    /// Unique by independence.
    pub fn solve_combination(&self, target: &AlgebraicNumber) -> Option<Vec<Rational>> {
        let picked: Vec<Rational> = self
            .pivots
            .iter()
            .map(|&k| target.coords()[k].clone())
            .collect();
        let b = linalg::row_times(&picked, &self.pivot_inverse);
        let coord_rows: Vec<Vec<Rational>> = self.a.iter().map(|x| x.coords().to_vec()).collect();
        (linalg::row_times(&b, &coord_rows) == target.coords()).then_some(b)
    }

    /// `Σ_j b_ij a_j` for each row of `matrix`.
    pub fn image(&self, matrix: &IntMatrix) -> Result<Vec<AlgebraicNumber>> {
        matrix.apply(&self.a)
    }
}

/// A scalar `α` together with the unimodular matrix `B` satisfying `B·a = α·a`.
#[derive(Debug, Clone, PartialEq)]
pub struct Multiplier {
    pub value: AlgebraicNumber,
    pub witness: IntMatrix,
}

/// The multiplier of the linear part `matrix`: the common value of the
/// ratios `(Σ_j b_ij a_j) / a_i`.
pub fn multiplier_from_matrix(matrix: &IntMatrix, a: &FrequencyVector) -> Result<Multiplier> {
    let n = a.dim();
    if matrix.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: matrix.dim(),
        });
    }
    let image = a.image(matrix)?;
    let alpha = image[n - 1].checked_div(&a.a[n - 1])?;
    for (img, ai) in image.iter().zip(&a.a) {
        if *img != &alpha * ai {
            return Err(Error::NotAnEigenvector);
        }
    }
    if !matrix.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    Ok(Multiplier {
        value: alpha,
        witness: matrix.clone(),
    })
}

/// The unique matrix `B` with `B·a = α·a`, provided it is integral and
/// unimodular.
pub fn matrix_from_multiplier(alpha: &AlgebraicNumber, a: &FrequencyVector) -> Result<IntMatrix> {
    if !FieldSpec::same_field(alpha.field(), &a.field) {
        return Err(Error::FieldMismatch);
    }
    let n = a.dim();
    let mut entries: Vec<BigInt> = Vec::with_capacity(n * n);
    for ai in &a.a {
        let row = a
            .solve_combination(&(alpha * ai))
            .ok_or(Error::NoIntegerSolution)?;
        for x in row {
            if !x.is_integer() {
                return Err(Error::NoIntegerSolution);
            }
            entries.push(x.to_integer());
        }
    }
    let matrix = IntMatrix::new(n, entries)?;
    if !matrix.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    Ok(matrix)
}

/// Evaluates `det(zI - B)` at `α` exactly.
pub fn char_poly_at(matrix: &IntMatrix, alpha: &AlgebraicNumber) -> AlgebraicNumber {
    let mut acc = AlgebraicNumber::zero(alpha.field());
    for c in matrix.char_poly().iter().rev() {
        acc = &(&acc * alpha)
            + &AlgebraicNumber::from_rational(alpha.field(), Rational::from_integer(c.clone()));
    }
    acc
}

impl Multiplier {
    /// `char_poly(B)(α) = 0`.
    pub fn is_char_poly_root(&self) -> bool {
        char_poly_at(&self.witness, &self.value).is_zero()
    }

    pub fn is_trivial(&self) -> bool {
        self.value.is_one()
    }
}
