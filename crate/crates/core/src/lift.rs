//! Affine lifts `x ↦ Bx + c` of torus symmetries.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{AlgebraicNumber, Field, FieldSpec};
use crate::flow::{multiplier_from_matrix, FrequencyVector, Multiplier};
use crate::matrix::IntMatrix;
use crate::Rational;

/// A lift `x ↦ Bx + c` of a torus diffeomorphism with `B` unimodular.
///
/// Lifts of the same torus map differ by an integer translation, so the
/// translation is kept reduced into `[0, 1)^n`; equal torus maps then have
/// equal lifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLift {
    matrix: IntMatrix,
    translation: Vec<AlgebraicNumber>,
}

/// What kind of symmetry a lift is, by its multiplier.
#[derive(Debug, Clone, PartialEq)]
pub enum SymmetryClass {
    Symmetry,
    ReversingSymmetry,
    Generalized(AlgebraicNumber),
}

impl SymmetryClass {
    pub fn name(&self) -> &'static str {
        match self {
            SymmetryClass::Symmetry => "Symmetry",
            SymmetryClass::ReversingSymmetry => "Reversing",
            SymmetryClass::Generalized(_) => "Generalized",
        }
    }
}

fn canonical(c: &[AlgebraicNumber]) -> Vec<AlgebraicNumber> {
    c.iter().map(AlgebraicNumber::fract).collect()
}

impl AffineLift {
    /// Builds the lift with translation reduced mod `Z^n`.
    pub fn new(matrix: IntMatrix, translation: Vec<AlgebraicNumber>) -> Result<Self> {
        let n = matrix.dim();
        if translation.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: translation.len(),
            });
        }
        if let Some(first) = translation.first() {
            if translation
                .iter()
                .any(|x| !FieldSpec::same_field(x.field(), first.field()))
            {
                return Err(Error::FieldMismatch);
            }
        }
        if !matrix.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        Ok(AffineLift {
            translation: canonical(&translation),
            matrix,
        })
    }

    /// The zero-translation lift `x ↦ Bx`.
    pub fn linear(matrix: IntMatrix, field: &Field) -> Result<Self> {
        let zero = (0..matrix.dim())
            .map(|_| AlgebraicNumber::zero(field))
            .collect();
        Self::new(matrix, zero)
    }

    /// The pure translation `x ↦ x + c`.
    pub fn translation_by(c: Vec<AlgebraicNumber>) -> Result<Self> {
        Self::new(IntMatrix::identity(c.len()), c)
    }

    pub fn identity(n: usize, field: &Field) -> Self {
        Self::linear(IntMatrix::identity(n), field).expect("identity is unimodular")
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Translation part in canonical form, each coordinate in `[0, 1)`.
    pub fn translation(&self) -> &[AlgebraicNumber] {
        &self.translation
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity() && self.is_linear()
    }

    pub fn is_linear(&self) -> bool {
        self.translation.iter().all(AlgebraicNumber::is_zero)
    }

    pub fn is_translation(&self) -> bool {
        self.matrix.is_identity()
    }

    /// `self ∘ other`: `x ↦ B_f B_g x + (B_f c_g + c_f)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let matrix = self.matrix.mul(&other.matrix)?;
        let moved = self.matrix.apply(&other.translation)?;
        let translation = moved
            .iter()
            .zip(&self.translation)
            .map(|(x, c)| x.checked_add(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(AffineLift {
            translation: canonical(&translation),
            matrix,
        })
    }

    /// `x ↦ B^{-1}x - B^{-1}c`.
    pub fn invert(&self) -> Self {
        let inv = self.matrix.inverse().expect("lift matrices are unimodular");
        let moved = inv.apply(&self.translation).expect("dimensions agree");
        let translation: Vec<AlgebraicNumber> = moved.iter().map(|x| -x).collect();
        AffineLift {
            translation: canonical(&translation),
            matrix: inv,
        }
    }

    /// Multiplier of the symmetry this lift covers.
    pub fn multiplier(&self, a: &FrequencyVector) -> Result<Multiplier> {
        multiplier_from_matrix(&self.matrix, a)
    }

    /// Symmetry for `α = 1`, reversing symmetry for `α = -1`, generalized
    /// otherwise.
    pub fn classify(&self, a: &FrequencyVector) -> Result<SymmetryClass> {
        let m = self.multiplier(a)?;
        if let Some(q) = m.value.as_rational() {
            if q == &Rational::from_integer(1.into()) {
                debug_assert!(self.matrix.is_identity());
                return Ok(SymmetryClass::Symmetry);
            }
            if q == &Rational::from_integer((-1).into()) {
                debug_assert!(self.matrix.is_scalar(&(-1).into()));
                return Ok(SymmetryClass::ReversingSymmetry);
            }
        }
        Ok(SymmetryClass::Generalized(m.value))
    }

    /// Applies the lift to a point of `R^n` given in field coordinates.
    pub fn apply(&self, x: &[AlgebraicNumber]) -> Result<Vec<AlgebraicNumber>> {
        self.matrix
            .apply(x)?
            .iter()
            .zip(&self.translation)
            .map(|(y, c)| y.checked_add(c))
            .collect()
    }
}

/// The time-`t` map of the flow, `x ↦ x + t·a`, as a lift.
pub fn flow_translation(t: &Rational, a: &FrequencyVector) -> AffineLift {
    let c = a.components().iter().map(|x| x.scale(t)).collect();
    AffineLift::translation_by(c).expect("identity is unimodular")
}

impl PartialOrd for AffineLift {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AffineLift {
    /// Structural order (matrix entries, then translation coordinates);
    /// used for sets, not a numeric order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.matrix.cmp(&other.matrix).then_with(|| {
            let lhs = self.translation.iter().flat_map(|x| x.coords());
            let rhs = other.translation.iter().flat_map(|x| x.coords());
            lhs.cmp(rhs)
        })
    }
}

impl fmt::Display for AffineLift {
    /// `B=<rows> c=<coords>|<coords>…`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B={} c=", self.matrix)?;
        for (i, x) in self.translation.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
