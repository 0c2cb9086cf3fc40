//! Subgroups of the multiplier group, the splitting map, and exhaustive
//! certification of the semidirect-product structure on finite torsion
//! models.
//!
//! The preimage of a multiplier subgroup `Λ` is `T^n ⋊ Λ`: translations form
//! the kernel, and `α ↦ (ν⁻¹(α), 0)` splits the projection. The torus is
//! infinite, so the checks run on the finite subgroup whose translations lie
//! in `(1/q)Z^n / Z^n` and whose linear parts are words of bounded length in
//! the generators of `Λ`. Integer matrices preserve `(1/q)Z^n`, so this is a
//! genuine subgroup whenever `Λ` is finite, and a truncation of one
//! otherwise.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::AlgebraicNumber;
use crate::flow::{matrix_from_multiplier, multiplier_from_matrix, FrequencyVector, Multiplier};
use crate::lift::AffineLift;
use crate::matrix::IntMatrix;
use crate::Rational;

/// Largest model [`build_torsion_model`] builds unless told otherwise.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// A subgroup `Λ` of the multiplier group given by generators, each with
/// its unimodular witness.
#[derive(Debug, Clone)]
pub struct MultiplierSubgroup {
    flow: FrequencyVector,
    generators: Vec<Multiplier>,
}

/// A distinct element of `Λ` reached by a word in the generators.
#[derive(Debug, Clone)]
pub struct WordElement {
    pub value: AlgebraicNumber,
    pub matrix: IntMatrix,
    /// Length of the shortest word reaching it.
    pub length: usize,
}

impl MultiplierSubgroup {
    /// Validates each generator as a multiplier of `flow`.
    pub fn new(flow: &FrequencyVector, generators: &[AlgebraicNumber]) -> Result<Self> {
        let generators = generators
            .iter()
            .map(|alpha| {
                let witness = matrix_from_multiplier(alpha, flow)?;
                Ok(Multiplier {
                    value: alpha.clone(),
                    witness,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiplierSubgroup {
            flow: flow.clone(),
            generators,
        })
    }

    /// `Λ = {1}`.
    pub fn trivial(flow: &FrequencyVector) -> Self {
        MultiplierSubgroup {
            flow: flow.clone(),
            generators: Vec::new(),
        }
    }

    pub fn flow(&self) -> &FrequencyVector {
        &self.flow
    }

    pub fn generators(&self) -> &[Multiplier] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Multiplier::is_trivial)
    }

    fn letters(&self) -> Vec<(AlgebraicNumber, IntMatrix)> {
        let mut letters = Vec::with_capacity(2 * self.generators.len());
        for g in &self.generators {
            letters.push((g.value.clone(), g.witness.clone()));
            letters.push((
                g.value.inv().expect("multipliers are nonzero"),
                g.witness.inverse().expect("witnesses are unimodular"),
            ));
        }
        letters
    }

    /// Distinct elements reached by words of length at most `bound` in the
    /// generators and their inverses, in breadth-first order. The flag is
    /// true when longer words would reach further elements.
    pub fn words(&self, bound: usize) -> (Vec<WordElement>, bool) {
        let letters = self.letters();
        let field = self.flow.field();
        let n = self.flow.dim();
        let mut seen: BTreeSet<IntMatrix> = BTreeSet::new();
        let mut out = vec![WordElement {
            value: AlgebraicNumber::one(field),
            matrix: IntMatrix::identity(n),
            length: 0,
        }];
        seen.insert(IntMatrix::identity(n));
        let mut layer = 0..1;
        for length in 1..=bound + 1 {
            let mut next = Vec::new();
            for w in &out[layer.clone()] {
                for (value, matrix) in &letters {
                    let m = w.matrix.mul(matrix).expect("same dimension");
                    if seen.contains(&m) {
                        continue;
                    }
                    if length > bound {
                        return (out, true);
                    }
                    seen.insert(m.clone());
                    next.push(WordElement {
                        value: &w.value * value,
                        matrix: m,
                        length,
                    });
                }
            }
            let start = out.len();
            out.extend(next);
            layer = start..out.len();
        }
        (out, false)
    }
}

/// `Λ = {1, -1}`: the reversing symmetry group's multipliers.
pub fn reversing_group(a: &FrequencyVector) -> MultiplierSubgroup {
    let minus_one = AlgebraicNumber::from_int(a.field(), -1);
    MultiplierSubgroup::new(a, &[minus_one]).expect("-1 is a multiplier of every flow")
}

/// `h_Λ(α)`: the zero-translation lift `x ↦ ν⁻¹(α)x`.
pub fn splitting_map(alpha: &AlgebraicNumber, group: &MultiplierSubgroup) -> Result<AffineLift> {
    let matrix = matrix_from_multiplier(alpha, &group.flow)?;
    AffineLift::linear(matrix, group.flow.field())
}

/// Checks that `h_Λ` is a homomorphism and a section of the multiplier map
/// on every pair of words of length at most `bound`.
pub fn verify_splitting(group: &MultiplierSubgroup, bound: usize) -> bool {
    let (words, _) = group.words(bound);
    let mut images = Vec::with_capacity(words.len());
    for w in &words {
        let Ok(h) = splitting_map(&w.value, group) else {
            return false;
        };
        match multiplier_from_matrix(h.matrix(), &group.flow) {
            Ok(m) if m.value == w.value => {}
            _ => return false,
        }
        images.push(h);
    }
    for (x, hx) in words.iter().zip(&images) {
        for (y, hy) in words.iter().zip(&images) {
            let Ok(product) = hx.compose(hy) else {
                return false;
            };
            match splitting_map(&(&x.value * &y.value), group) {
                Ok(h) if h == product => {}
                _ => return false,
            }
        }
    }
    true
}

/// The finite subgroup of lifts with translations in `(1/q)Z^n` and linear
/// parts among the word-truncated witnesses of `Λ`.
#[derive(Debug, Clone)]
pub struct TorsionModel {
    q: u64,
    word_length_bound: usize,
    group: MultiplierSubgroup,
    /// Linear parts present, with their multipliers and word lengths.
    linear_parts: BTreeMap<IntMatrix, (AlgebraicNumber, usize)>,
    truncated: bool,
    elements: BTreeSet<AffineLift>,
}

impl TorsionModel {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn word_length_bound(&self) -> usize {
        self.word_length_bound
    }

    pub fn group(&self) -> &MultiplierSubgroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &AffineLift> {
        self.elements.iter()
    }

    pub fn contains(&self, x: &AffineLift) -> bool {
        self.elements.contains(x)
    }

    /// Whether words longer than the bound were cut off.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Multiplier of an element's linear part, if that part is in the model.
    pub fn multiplier_of(&self, x: &AffineLift) -> Option<&AlgebraicNumber> {
        self.linear_parts.get(x.matrix()).map(|(v, _)| v)
    }

    /// Pure translations in the model.
    pub fn translations(&self) -> impl Iterator<Item = &AffineLift> {
        self.elements.iter().filter(|x| x.is_translation())
    }

    /// Zero-translation elements `h_Λ(α)`.
    pub fn linear_elements(&self) -> impl Iterator<Item = &AffineLift> {
        self.elements.iter().filter(|x| x.is_linear())
    }

    fn generating_set(&self) -> Vec<AffineLift> {
        generating_set(&self.group, self.q)
    }
}

fn generating_set(group: &MultiplierSubgroup, q: u64) -> Vec<AffineLift> {
    let field = group.flow.field();
    let n = group.flow.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        let c = (0..n)
            .map(|j| {
                let v = if i == j {
                    Rational::new(BigInt::from(1), BigInt::from(q))
                } else {
                    Rational::from_integer(BigInt::from(0))
                };
                AlgebraicNumber::from_rational(field, v)
            })
            .collect();
        gens.push(AffineLift::translation_by(c).expect("identity is unimodular"));
    }
    for (_, matrix) in group.letters() {
        gens.push(AffineLift::linear(matrix, field).expect("witnesses are unimodular"));
    }
    gens
}

/// Closes `(1/q)Z^n/Z^n` together with `h_Λ` of the generators under
/// composition, keeping linear parts reachable by words of length at most
/// `word_length_bound`.
pub fn build_torsion_model(
    group: &MultiplierSubgroup,
    q: u64,
    word_length_bound: usize,
    cap: usize,
) -> Result<TorsionModel> {
    if q == 0 {
        return Err(Error::InvalidArgument("q must be positive"));
    }
    let n = group.flow.dim();
    let (words, truncated) = group.words(word_length_bound);
    let expected = u32::try_from(n)
        .ok()
        .and_then(|n| (q as usize).checked_pow(n))
        .and_then(|t| t.checked_mul(words.len()));
    match expected {
        Some(size) if size <= cap => {}
        other => {
            return Err(Error::ModelTooLarge {
                size: other.unwrap_or(usize::MAX),
                cap,
            })
        }
    }
    let linear_parts: BTreeMap<IntMatrix, (AlgebraicNumber, usize)> = words
        .into_iter()
        .map(|w| (w.matrix, (w.value, w.length)))
        .collect();

    let gens = generating_set(group, q);
    let identity = AffineLift::identity(n, group.flow.field());
    let mut elements = BTreeSet::new();
    elements.insert(identity.clone());
    let mut queue = vec![identity];
    while let Some(x) = queue.pop() {
        for s in &gens {
            let y = s.compose(&x)?;
            if !linear_parts.contains_key(y.matrix()) || elements.contains(&y) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::ModelTooLarge {
                    size: elements.len() + 1,
                    cap,
                });
            }
            elements.insert(y.clone());
            queue.push(y);
        }
    }
    Ok(TorsionModel {
        q,
        word_length_bound,
        group: group.clone(),
        linear_parts,
        truncated,
        elements,
    })
}

/// Outcome of the exhaustive structure checks on a torsion model.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureCertificate {
    /// `h_Λ` is a homomorphism and a section on the model's linear parts.
    pub split_verified: bool,
    /// Translations are normal in the model.
    pub kernel_normal: bool,
    /// Translations meet `h_Λ(Λ)` only in the identity.
    pub trivial_intersection: bool,
    /// Every element is `t ∘ h_Λ(α)` for exactly one pair.
    pub factorization_unique: bool,
    /// A non-commuting pair was found.
    pub nonabelian: bool,
    pub noncommuting_pair: Option<(AffineLift, AffineLift)>,
    pub word_length_bound: usize,
    pub q: u64,
    pub size: usize,
}

impl StructureCertificate {
    /// Named flags in report order.
    pub fn checks(&self) -> [(&'static str, bool); 5] {
        [
            ("split_verified", self.split_verified),
            ("kernel_normal", self.kernel_normal),
            ("trivial_intersection", self.trivial_intersection),
            ("factorization_unique", self.factorization_unique),
            ("nonabelian", self.nonabelian),
        ]
    }
}

/// Runs every structure check by enumeration over the model.
///
/// Fails with [`Error::NotClosed`] if composing an element with a generator
/// leaves the model while staying inside its word bound, or if an inverse
/// is missing.
pub fn certify_structure(model: &TorsionModel) -> Result<StructureCertificate> {
    let gens = model.generating_set();
    for x in &model.elements {
        if !model.contains(&x.invert()) {
            return Err(Error::NotClosed);
        }
        for s in &gens {
            let y = x.compose(s)?;
            if model.linear_parts.contains_key(y.matrix()) && !model.contains(&y) {
                return Err(Error::NotClosed);
            }
        }
    }

    let translations: Vec<&AffineLift> = model.translations().collect();
    let linear: Vec<&AffineLift> = model.linear_elements().collect();

    let mut kernel_normal = true;
    'normal: for g in &model.elements {
        let g_inv = g.invert();
        for t in &translations {
            let conj = g.compose(t)?.compose(&g_inv)?;
            if !(conj.is_translation() && model.contains(&conj)) {
                kernel_normal = false;
                break 'normal;
            }
        }
    }

    let trivial_intersection = translations
        .iter()
        .filter(|t| t.is_linear())
        .all(|t| t.is_identity())
        && translations.iter().any(|t| t.is_identity());

    let mut products: BTreeMap<AffineLift, usize> = BTreeMap::new();
    for t in &translations {
        for h in &linear {
            *products.entry(t.compose(h)?).or_default() += 1;
        }
    }
    let factorization_unique =
        products.len() == model.len() && model.elements.iter().all(|g| products.get(g) == Some(&1));

    let mut split_verified = true;
    'split: for h in &linear {
        let Some(alpha) = model.multiplier_of(h) else {
            split_verified = false;
            break;
        };
        match multiplier_from_matrix(h.matrix(), model.group.flow()) {
            Ok(m) if &m.value == alpha => {}
            _ => {
                split_verified = false;
                break;
            }
        }
        for k in &linear {
            let product = h.compose(k)?;
            if !model.linear_parts.contains_key(product.matrix()) {
                continue;
            }
            let beta = model.multiplier_of(k).expect("linear part in model");
            match splitting_map(&(alpha * beta), &model.group) {
                Ok(v) if v == product => {}
                _ => {
                    split_verified = false;
                    break 'split;
                }
            }
        }
    }

    let mut noncommuting_pair = None;
    'pairs: for (i, x) in model.elements.iter().enumerate() {
        for y in model.elements.iter().skip(i + 1) {
            if x.compose(y)? != y.compose(x)? {
                noncommuting_pair = Some((x.clone(), y.clone()));
                break 'pairs;
            }
        }
    }

    Ok(StructureCertificate {
        split_verified,
        kernel_normal,
        trivial_intersection,
        factorization_unique,
        nonabelian: noncommuting_pair.is_some(),
        noncommuting_pair,
        word_length_bound: model.word_length_bound,
        q: model.q,
        size: model.len(),
    })
}
