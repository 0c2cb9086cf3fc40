//! Matrix and vector arguments: `"0,1;1,1"` and `"1/3,0|0,0"`.

use num_bigint::BigInt;
use quasiflow_core::{AlgebraicNumber, Field, IntMatrix};

use crate::error::{parse_err, CliResult};
use crate::flowfile::parse_rational;

/// Row-major integer matrix, rows split by `;` and entries by `,`.
pub fn parse_matrix(s: &str) -> CliResult<IntMatrix> {
    let rows: Vec<Vec<BigInt>> = s
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<BigInt>()
                        .map_err(|_| parse_err(format!("bad matrix entry {:?}", t.trim())))
                })
                .collect()
        })
        .collect::<CliResult<_>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(parse_err(format!("matrix {s:?} is not square")));
    }
    IntMatrix::new(n, rows.into_iter().flatten().collect()).map_err(|e| parse_err(e.to_string()))
}

/// Field elements given as `|`-separated groups of comma-separated
/// power-basis coordinates.
pub fn parse_vectors(s: &str, field: &Field) -> CliResult<Vec<AlgebraicNumber>> {
    s.split('|')
        .map(|group| {
            let coords = group
                .split(',')
                .map(|t| parse_rational(t.trim()))
                .collect::<CliResult<Vec<_>>>()?;
            if coords.len() != field.degree() {
                return Err(parse_err(format!(
                    "{group:?} needs {} coordinates",
                    field.degree()
                )));
            }
            AlgebraicNumber::new(field, coords).map_err(|e| parse_err(e.to_string()))
        })
        .collect()
}
