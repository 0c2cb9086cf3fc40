//! Search results files: one `MULT <coeffs> MATRIX <rows> DET <±1>` line
//! per multiplier, tab-separated.

use quasiflow_core::flow::multiplier_from_matrix;
use quasiflow_core::{FrequencyVector, Multiplier};

use crate::args::{parse_matrix, parse_vectors};
use crate::error::{parse_err, CliResult};

pub fn format_line(m: &Multiplier) -> String {
    format!(
        "MULT\t{}\tMATRIX\t{}\tDET\t{}",
        m.value,
        m.witness,
        m.witness.det()
    )
}

pub fn save(results: &[Multiplier]) -> String {
    results.iter().map(|m| format_line(m) + "\n").collect()
}

/// Reads a results file back, re-checking each line against `flow`.
pub fn load(text: &str, flow: &FrequencyVector) -> CliResult<Vec<Multiplier>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let ["MULT", coeffs, "MATRIX", rows, "DET", det] = fields.as_slice() else {
            return Err(parse_err(format!("results line {}: malformed", k + 1)));
        };
        let value = parse_vectors(coeffs, flow.field())?
            .pop()
            .ok_or_else(|| parse_err("empty coefficient list"))?;
        let witness = parse_matrix(rows)?;
        if witness.det().to_string() != *det {
            return Err(parse_err(format!(
                "results line {}: determinant mismatch",
                k + 1
            )));
        }
        let checked = multiplier_from_matrix(&witness, flow)
            .map_err(|e| parse_err(format!("results line {}: {e}", k + 1)))?;
        if checked.value != value {
            return Err(parse_err(format!(
                "results line {}: multiplier mismatch",
                k + 1
            )));
        }
        out.push(checked);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use quasiflow_core::search::search_multipliers;
    use quasiflow_core::{ratio, FieldSpec};

    fn golden_flow() -> FrequencyVector {
        let f = FieldSpec::new(
            vec![BigInt::from(-1), BigInt::from(-1), BigInt::from(1)],
            ratio(1, 1),
            ratio(2, 1),
        )
        .unwrap();
        FrequencyVector::power_basis(&f).unwrap()
    }

    #[test]
    fn round_trip() {
        let a = golden_flow();
        let found = search_multipliers(&a, 3);
        let text = save(&found);
        assert_eq!(load(&text, &a).unwrap(), found);
        assert_eq!(save(&load(&text, &a).unwrap()), text);
    }

    #[test]
    fn line_format() {
        let a = golden_flow();
        let phi = search_multipliers(&a, 1)
            .into_iter()
            .find(|m| m.value.coords()[1] == ratio(1, 1) && m.value.coords()[0] == ratio(0, 1))
            .unwrap();
        assert_eq!(format_line(&phi), "MULT\t0,1\tMATRIX\t0,1;1,1\tDET\t-1");
    }

    #[test]
    fn rejects_tampering() {
        let a = golden_flow();
        assert!(load("MULT\t0,1\tMATRIX\t0,1;1,1\tDET\t1\n", &a).is_err());
        assert!(load("MULT\t1,1\tMATRIX\t0,1;1,1\tDET\t-1\n", &a).is_err());
        assert!(load("MULT\t0,1\tMATRIX\t1,1;0,1\tDET\t1\n", &a).is_err());
        assert!(load("MULT 0,1 MATRIX 0,1;1,1 DET -1\n", &a).is_err());
    }
}
