//! Flow spec files.
//!
//! ```text
//! # golden-mean flow
//! min_poly = -1 -1 1
//! root = 1 2
//! n = 2
//! a1 = 1 0
//! a2 = 0 1
//! ```
//!
//! Polynomial coefficients run low-to-high; `a_i` are power-basis coordinates.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use quasiflow_core::flow::check_rational_independence;
use quasiflow_core::{AlgebraicNumber, Field, FieldSpec, FrequencyVector, Rational};

use crate::error::{parse_err, CliError, CliResult};

/// The syntactic content of a flow file, before any field validation.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowSpec {
    pub min_poly: Vec<BigInt>,
    pub root: (Rational, Rational),
    pub frequencies: Vec<Vec<Rational>>,
}

pub fn parse_rational(tok: &str) -> CliResult<Rational> {
    tok.parse::<Rational>()
        .map_err(|_| parse_err(format!("not a rational: {tok:?}")))
}

fn parse_int(tok: &str) -> CliResult<BigInt> {
    tok.parse::<BigInt>()
        .map_err(|_| parse_err(format!("not an integer: {tok:?}")))
}

impl FlowSpec {
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut entries: BTreeMap<String, (usize, Vec<String>)> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| parse_err(format!("line {}: expected `key = value`", lineno + 1)))?;
            let key = key.trim().to_string();
            let values = value.split_whitespace().map(str::to_string).collect();
            if entries.insert(key.clone(), (lineno + 1, values)).is_some() {
                return Err(parse_err(format!(
                    "line {}: duplicate key `{key}`",
                    lineno + 1
                )));
            }
        }

        let mut take = |key: &str| {
            entries
                .remove(key)
                .ok_or_else(|| parse_err(format!("missing `{key} =` line")))
        };
        let (line, poly) = take("min_poly")?;
        let min_poly = poly
            .iter()
            .map(|t| parse_int(t))
            .collect::<CliResult<Vec<_>>>()?;
        if min_poly.len() < 2 {
            return Err(parse_err(format!(
                "line {line}: min_poly needs degree at least 1"
            )));
        }
        if min_poly.last() != Some(&BigInt::from(1)) {
            return Err(parse_err(format!("line {line}: min_poly must be monic")));
        }
        let degree = min_poly.len() - 1;

        let (line, root) = take("root")?;
        let [lo, hi] = root.as_slice() else {
            return Err(parse_err(format!(
                "line {line}: root needs exactly two endpoints"
            )));
        };
        let root = (parse_rational(lo)?, parse_rational(hi)?);

        let (line, n) = take("n")?;
        let n: usize = match n.as_slice() {
            [tok] => tok
                .parse()
                .map_err(|_| parse_err(format!("line {line}: n must be a positive integer")))?,
            _ => return Err(parse_err(format!("line {line}: n takes one value"))),
        };
        if n == 0 {
            return Err(parse_err(format!(
                "line {line}: n must be a positive integer"
            )));
        }

        let mut frequencies = Vec::with_capacity(n);
        for i in 1..=n {
            let (line, coords) = take(&format!("a{i}"))?;
            if coords.len() != degree {
                return Err(parse_err(format!(
                    "line {line}: a{i} needs {degree} coordinates, found {}",
                    coords.len()
                )));
            }
            frequencies.push(
                coords
                    .iter()
                    .map(|t| parse_rational(t))
                    .collect::<CliResult<_>>()?,
            );
        }
        if let Some((key, (line, _))) = entries.into_iter().next() {
            return Err(parse_err(format!("line {line}: unknown key `{key}`")));
        }
        Ok(FlowSpec {
            min_poly,
            root,
            frequencies,
        })
    }

    pub fn field(&self) -> CliResult<Field> {
        FieldSpec::new(
            self.min_poly.clone(),
            self.root.0.clone(),
            self.root.1.clone(),
        )
        .map_err(|e| CliError::InvalidFlow(e.to_string()))
    }

    pub fn numbers(&self, field: &Field) -> CliResult<Vec<AlgebraicNumber>> {
        self.frequencies
            .iter()
            .map(|c| AlgebraicNumber::new(field, c.clone()))
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::InvalidFlow(e.to_string()))
    }

    /// Validated frequency vector.
    pub fn flow(&self) -> CliResult<FrequencyVector> {
        let field = self.field()?;
        FrequencyVector::new(&field, self.numbers(&field)?)
            .map_err(|e| CliError::InvalidFlow(e.to_string()))
    }

    pub fn is_independent(&self, field: &Field) -> CliResult<bool> {
        Ok(check_rational_independence(&self.numbers(field)?))
    }
}

pub fn load(path: &std::path::Path) -> CliResult<FlowSpec> {
    FlowSpec::parse(&std::fs::read_to_string(path)?)
}
