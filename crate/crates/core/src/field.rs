//! Exact arithmetic in a real number field `Q(β) = Q[z]/(p)`.
//!
//! Elements are coordinate vectors in the power basis `1, β, …, β^{d-1}`.
//! The real embedding is fixed by an interval isolating one real root of
//! `p`; signs and approximations are decided by bisecting that interval with
//! exact rational evaluation.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::Rational;

/// Width the stored root enclosure is refined to at construction.
const ENCLOSURE_BITS: u32 = 100;
/// Trial division bound for the rational-root screen.
const ROOT_SCREEN_LIMIT: u64 = 1_000_000;

/// Shared handle to a validated field description.
pub type Field = Arc<FieldSpec>;

/// A real number field given by a monic integer minimal polynomial and an
/// interval isolating the chosen real root `β`.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    min_poly: Vec<BigInt>,
    poly: Poly,
    root_interval: (Rational, Rational),
    enclosure: (Rational, Rational),
}

impl FieldSpec {
    /// Validates `min_poly` (low-to-high coefficients) and the isolating
    /// interval `(lo, hi)`.
    ///
    /// Irreducibility is not proven here. The polynomial must be squarefree
    /// and, for degree at least two, free of small rational roots; any
    /// remaining factorization shows up later as [`Error::ReduciblePolynomial`]
    /// when a zero divisor is inverted.
    pub fn new(min_poly: Vec<BigInt>, lo: Rational, hi: Rational) -> Result<Field> {
        let mut min_poly = min_poly;
        while min_poly.len() > 1 && min_poly.last().is_some_and(Zero::is_zero) {
            min_poly.pop();
        }
        if min_poly.len() < 2 {
            return Err(Error::InvalidPolynomial("degree must be at least 1"));
        }
        if !min_poly.last().unwrap().is_one() {
            return Err(Error::InvalidPolynomial("polynomial must be monic"));
        }
        if lo >= hi {
            return Err(Error::NotIsolating);
        }
        let poly = Poly::from_ints(&min_poly);
        let s_lo = poly.sign_at(&lo);
        let s_hi = poly.sign_at(&hi);
        if s_lo == Ordering::Equal || s_hi == Ordering::Equal || s_lo == s_hi {
            return Err(Error::NotIsolating);
        }
        if poly.gcd(&poly.derivative()).degree() != Some(0) {
            return Err(Error::NotSquarefree);
        }
        if poly.count_roots(&lo, &hi) != 1 {
            return Err(Error::NotIsolating);
        }
        let degree = min_poly.len() - 1;
        if degree >= 2 && has_rational_root(&min_poly, &poly, &lo, &hi) {
            return Err(Error::RationalRoot);
        }

        let enclosure = if degree == 1 {
            let root = Rational::from_integer(-min_poly[0].clone());
            (root.clone(), root)
        } else {
            let tol = Rational::new(BigInt::one(), BigInt::one() << ENCLOSURE_BITS);
            let (mut a, mut b) = (lo.clone(), hi.clone());
            while &b - &a > tol {
                bisect(&poly, &mut a, &mut b);
            }
            (a, b)
        };
        Ok(Arc::new(FieldSpec {
            min_poly,
            poly,
            root_interval: (lo, hi),
            enclosure,
        }))
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    /// Minimal polynomial coefficients, low-to-high.
    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    /// The isolating interval as supplied.
    pub fn root_interval(&self) -> (&Rational, &Rational) {
        (&self.root_interval.0, &self.root_interval.1)
    }

    /// A rational interval of width at most `2^-100` containing `β`.
    pub fn enclosure(&self) -> (&Rational, &Rational) {
        (&self.enclosure.0, &self.enclosure.1)
    }

    pub(crate) fn poly(&self) -> &Poly {
        &self.poly
    }

    /// Whether two specs describe the same embedded field: equal polynomials
    /// and intervals that isolate the same root.
    pub fn same_field(a: &Field, b: &Field) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        if self.min_poly != other.min_poly {
            return false;
        }
        let lo = (&self.enclosure.0).max(&other.enclosure.0);
        let hi = (&self.enclosure.1).min(&other.enclosure.1);
        match lo.cmp(hi) {
            Ordering::Greater => false,
            Ordering::Equal => self.poly.sign_at(lo) == Ordering::Equal,
            Ordering::Less => {
                let s_lo = self.poly.sign_at(lo);
                let s_hi = self.poly.sign_at(hi);
                s_lo == Ordering::Equal || s_hi == Ordering::Equal || s_lo != s_hi
            }
        }
    }
}

impl Eq for FieldSpec {}

fn bisect(poly: &Poly, lo: &mut Rational, hi: &mut Rational) {
    let mid = (&*lo + &*hi) / Rational::from_integer(BigInt::from(2));
    let s_mid = poly.sign_at(&mid);
    if s_mid == Ordering::Equal {
        *lo = mid.clone();
        *hi = mid;
    } else if s_mid == poly.sign_at(lo) {
        *lo = mid;
    } else {
        *hi = mid;
    }
}

/// Screens for integer roots; rational roots of a monic integer polynomial
/// are integers dividing the constant term.
fn has_rational_root(coeffs: &[BigInt], poly: &Poly, lo: &Rational, hi: &Rational) -> bool {
    let c0 = coeffs[0].abs();
    if c0.is_zero() {
        return true;
    }
    let is_root = |r: &BigInt| poly.eval(&Rational::from_integer(r.clone())).is_zero();
    match c0.to_u64() {
        Some(c) if c <= ROOT_SCREEN_LIMIT * ROOT_SCREEN_LIMIT => {
            let mut k = 1u64;
            while k * k <= c {
                if c % k == 0 {
                    for r in [k, c / k] {
                        let r = BigInt::from(r);
                        if is_root(&r) || is_root(&-r) {
                            return true;
                        }
                    }
                }
                k += 1;
            }
            false
        }
        _ => {
            // Too large to factor; check the integers inside the isolating interval.
            let mut r = lo.ceil().to_integer();
            let end = hi.floor().to_integer();
            let mut checked = 0u64;
            while r <= end && checked < ROOT_SCREEN_LIMIT {
                if is_root(&r) {
                    return true;
                }
                r += 1;
                checked += 1;
            }
            false
        }
    }
}

/// An element of `Q(β)` in power-basis coordinates.
#[derive(Debug, Clone)]
pub struct AlgebraicNumber {
    field: Field,
    coords: Vec<Rational>,
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && FieldSpec::same_field(&self.field, &other.field)
    }
}

impl Eq for AlgebraicNumber {}

impl AlgebraicNumber {
    pub fn new(field: &Field, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != field.degree() {
            return Err(Error::DimensionMismatch {
                expected: field.degree(),
                found: coords.len(),
            });
        }
        Ok(AlgebraicNumber {
            field: field.clone(),
            coords,
        })
    }

    /// Integer power-basis coordinates.
    pub fn from_ints(field: &Field, coords: &[i64]) -> Result<Self> {
        Self::new(
            field,
            coords
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_rational(field: &Field, value: Rational) -> Self {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = value;
        AlgebraicNumber {
            field: field.clone(),
            coords,
        }
    }

    pub fn from_int(field: &Field, value: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(value)))
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: &Field) -> Self {
        Self::from_int(field, 1)
    }

    /// The generator `β`.
    pub fn generator(field: &Field) -> Self {
        if field.degree() == 1 {
            return Self::from_rational(field, field.enclosure.0.clone());
        }
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[1] = Rational::one();
        AlgebraicNumber {
            field: field.clone(),
            coords,
        }
    }

    fn from_poly(field: &Field, p: &Poly) -> Self {
        let mut coords = vec![Rational::zero(); field.degree()];
        for (slot, c) in coords.iter_mut().zip(p.coeffs()) {
            *slot = c.clone();
        }
        AlgebraicNumber {
            field: field.clone(),
            coords,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element is the rational `q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    /// True when every coordinate is an integer.
    pub fn has_integer_coords(&self) -> bool {
        self.coords.iter().all(Rational::is_integer)
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if FieldSpec::same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(AlgebraicNumber {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(AlgebraicNumber {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Product reduced modulo the minimal polynomial.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.field.degree() == 1 {
            return Ok(Self::from_rational(
                &self.field,
                &self.coords[0] * &other.coords[0],
            ));
        }
        let prod = self.to_poly().mul(&other.to_poly());
        Ok(Self::from_poly(&self.field, &prod.rem(self.field.poly())))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// the minimal polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, q.recip()));
        }
        let (g, s) = self.to_poly().gcd_cofactor(self.field.poly());
        if g.degree() != Some(0) {
            return Err(Error::ReduciblePolynomial);
        }
        Ok(Self::from_poly(&self.field, &s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        AlgebraicNumber {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn scale_int(&self, s: &BigInt) -> Self {
        self.scale(&Rational::from_integer(s.clone()))
    }

    /// Integer power; negative exponents go through [`AlgebraicNumber::inv`].
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Degree of the element over `Q`: the rank of its powers `1, x, …, x^{d-1}`.
    pub fn degree_over_q(&self) -> usize {
        let d = self.field.degree();
        let mut rows = Vec::with_capacity(d);
        let mut p = Self::one(&self.field);
        for _ in 0..d {
            rows.push(p.coords.clone());
            p = &p * self;
        }
        crate::linalg::rank(&rows)
    }

    /// Sign of the real embedding: -1, 0 or +1.
    pub fn sign(&self) -> i8 {
        if let Some(q) = self.as_rational() {
            return ordering_sign(q.cmp(&Rational::zero()));
        }
        let x = self.to_poly();
        let (mut lo, mut hi) = self.field.enclosure.clone();
        if lo == hi {
            return ordering_sign(x.sign_at(&lo));
        }
        let mut checked_divisor = false;
        loop {
            let (center, radius) = enclose_on(&x, &lo, &hi);
            if center.abs() > radius {
                return ordering_sign(center.cmp(&Rational::zero()));
            }
            if !checked_divisor {
                // Only a reducible minimal polynomial lets a nonzero
                // coordinate vector vanish at β; detect that instead of
                // bisecting forever.
                checked_divisor = true;
                let g = x.gcd(self.field.poly());
                if g.degree().is_some_and(|d| d > 0) {
                    let (s_lo, s_hi) = (g.sign_at(&lo), g.sign_at(&hi));
                    if s_lo != s_hi || s_lo == Ordering::Equal {
                        return 0;
                    }
                }
            }
            bisect(self.field.poly(), &mut lo, &mut hi);
            if lo == hi {
                return ordering_sign(x.sign_at(&lo));
            }
        }
    }

    /// Compares the real embeddings of two elements.
    pub fn cmp_value(&self, other: &Self) -> Result<Ordering> {
        Ok(match self.checked_sub(other)?.sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        })
    }

    /// A rational interval `(lo, hi)` containing the element with
    /// `hi - lo < 2·eps`. Intervals from shrinking `eps` are nested.
    pub fn enclose(&self, eps: &Rational) -> (Rational, Rational) {
        assert!(eps.is_positive(), "eps must be positive");
        if let Some(q) = self.as_rational() {
            return (q.clone(), q.clone());
        }
        let x = self.to_poly();
        let (mut lo, mut hi) = self.field.enclosure.clone();
        loop {
            if lo == hi {
                let v = x.eval(&lo);
                return (v.clone(), v);
            }
            let (center, radius) = enclose_on(&x, &lo, &hi);
            if &radius < eps {
                return (&center - &radius, &center + &radius);
            }
            bisect(self.field.poly(), &mut lo, &mut hi);
        }
    }

    /// A rational `q` with `|q - x| < eps`.
    pub fn approximate(&self, eps: &Rational) -> Rational {
        let (lo, hi) = self.enclose(eps);
        (lo + hi) / Rational::from_integer(BigInt::from(2))
    }

    /// Integer `k` with `|k - x·2^bits| < 1`.
    pub fn approximate_scaled(&self, bits: u32) -> BigInt {
        let scale = Rational::from_integer(BigInt::one() << bits);
        let eps = Rational::new(BigInt::one(), BigInt::from(4) << bits);
        (self.approximate(&eps) * scale).round().to_integer()
    }

    /// Exact floor of the real embedding.
    pub fn floor(&self) -> BigInt {
        if let Some(q) = self.as_rational() {
            return q.floor().to_integer();
        }
        let guess = self
            .approximate(&Rational::new(BigInt::one(), BigInt::from(4)))
            .floor()
            .to_integer();
        let shifted = |k: &BigInt| {
            self.checked_sub(&Self::from_rational(
                &self.field,
                Rational::from_integer(k.clone()),
            ))
            .expect("same field")
            .sign()
        };
        let next = &guess + 1;
        if shifted(&next) >= 0 {
            next
        } else if shifted(&guess) >= 0 {
            guess
        } else {
            guess - 1
        }
    }

    /// `x - floor(x)`, the representative in `[0, 1)`.
    pub fn fract(&self) -> Self {
        let k = self.floor();
        if k.is_zero() {
            return self.clone();
        }
        let mut coords = self.coords.clone();
        coords[0] -= Rational::from_integer(k);
        AlgebraicNumber {
            field: self.field.clone(),
            coords,
        }
    }
}

/// Center `x(m)` and radius `L·(hi-lo)/2` of an enclosure of `x(β)` for
/// `β ∈ [lo, hi]`.
fn enclose_on(x: &Poly, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let two = Rational::from_integer(BigInt::from(2));
    let mid = (lo + hi) / &two;
    let half = (hi - lo) / two;
    let r = lo.abs().max(hi.abs());
    (x.eval(&mid), x.lipschitz_bound(&r) * half)
}

fn ordering_sign(o: Ordering) -> i8 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

impl fmt::Display for AlgebraicNumber {
    /// Comma-separated power-basis coordinates, e.g. `-1,1` for `β - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

// Operator forms panic on a field mismatch; use the `checked_*` methods
// where operands may come from different fields.
impl<'a> Add<&'a AlgebraicNumber> for &'a AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn add(self, rhs: &'a AlgebraicNumber) -> AlgebraicNumber {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl<'a> Sub<&'a AlgebraicNumber> for &'a AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn sub(self, rhs: &'a AlgebraicNumber) -> AlgebraicNumber {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl<'a> Mul<&'a AlgebraicNumber> for &'a AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn mul(self, rhs: &'a AlgebraicNumber) -> AlgebraicNumber {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        AlgebraicNumber {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        -&self
    }
}

/// Rational helper used across the crate: `n/d` from machine integers.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
