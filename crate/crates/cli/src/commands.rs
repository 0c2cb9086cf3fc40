//! Subcommand bodies. Machine-readable lines go to `out`, prose to `err`.

use std::io::Write;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use quasiflow_core::analysis::{
    decompose_lift, density_covering_radius, density_gap, pde_residual,
};
use quasiflow_core::flow::multiplier_from_matrix;
use quasiflow_core::group::{
    build_torsion_model, certify_structure, reversing_group, verify_splitting, MultiplierSubgroup,
};
use quasiflow_core::search::search_multipliers;
use quasiflow_core::{AffineLift, AlgebraicNumber, Error, FrequencyVector, Rational};

use crate::args::{parse_matrix, parse_vectors};
use crate::error::{parse_err, CliError, CliResult};
use crate::flowfile::{self, FlowSpec};
use crate::results;

/// Precision of every density value the CLI reports.
pub const DENSITY_EPS_DIGITS: u32 = 12;

fn load_flow(path: &Path) -> CliResult<FrequencyVector> {
    flowfile::load(path)?.flow()
}

fn symmetry_err(e: Error) -> CliError {
    match e {
        Error::NotAnEigenvector | Error::NotUnimodular | Error::NoIntegerSolution => {
            CliError::NotASymmetry(e.to_string())
        }
        Error::ModelTooLarge { .. } | Error::NotClosed => CliError::Resource(e.to_string()),
        Error::DimensionMismatch { .. } | Error::InvalidArgument(_) => parse_err(e.to_string()),
        other => CliError::InvalidFlow(other.to_string()),
    }
}

pub fn check(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let spec: FlowSpec = flowfile::load(path)?;
    let field = spec.field()?;
    writeln!(out, "DEGREE\t{}", field.degree())?;
    writeln!(out, "DIM\t{}", spec.frequencies.len())?;
    let independent = spec.is_independent(&field)?;
    writeln!(
        out,
        "INDEPENDENT\t{}",
        if independent { "yes" } else { "no" }
    )?;
    let flow = spec.flow()?;
    writeln!(
        err,
        "valid flow with {} frequencies over a degree {} field",
        flow.dim(),
        field.degree()
    )?;
    Ok(())
}

pub fn search(
    path: &Path,
    height: u64,
    results_path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let flow = load_flow(path)?;
    let found = search_multipliers(&flow, height);
    let text = results::save(&found);
    out.write_all(text.as_bytes())?;
    if let Some(p) = results_path {
        std::fs::write(p, &text)?;
        writeln!(err, "wrote {} multipliers to {}", found.len(), p.display())?;
    } else {
        writeln!(
            err,
            "found {} multipliers with height at most {height}",
            found.len()
        )?;
    }
    Ok(())
}

pub fn verify(
    path: &Path,
    matrix: &str,
    translation: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let flow = load_flow(path)?;
    let b = parse_matrix(matrix)?;
    if b.dim() != flow.dim() {
        return Err(parse_err(format!(
            "matrix is {0}x{0} but the flow has {1} frequencies",
            b.dim(),
            flow.dim()
        )));
    }
    let c = match translation {
        Some(t) => parse_vectors(t, flow.field())?,
        None => vec![AlgebraicNumber::zero(flow.field()); flow.dim()],
    };
    if c.len() != flow.dim() {
        return Err(parse_err(format!(
            "translation needs {} components",
            flow.dim()
        )));
    }
    let m = match multiplier_from_matrix(&b, &flow) {
        Ok(m) => m,
        Err(e @ (Error::NotAnEigenvector | Error::NotUnimodular)) => {
            writeln!(out, "NOT_A_SYMMETRY")?;
            return Err(CliError::NotASymmetry(e.to_string()));
        }
        Err(e) => return Err(symmetry_err(e)),
    };
    let lift = AffineLift::new(b, c).map_err(|e| parse_err(e.to_string()))?;
    let class = lift.classify(&flow).map_err(symmetry_err)?;
    let form = decompose_lift(&lift, &flow).map_err(symmetry_err)?;
    let residual = pde_residual(&lift, &form.alpha, &flow).map_err(symmetry_err)?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "ALPHA\t{}", m.value)?;
    writeln!(out, "CLASS\t{}", class.name())?;
    writeln!(out, "CHARPOLY_ROOT\t{}", yes_no(m.is_char_poly_root()))?;
    let zero = residual.iter().all(AlgebraicNumber::is_zero);
    writeln!(
        out,
        "PDE_RESIDUAL\t{}",
        if zero { "zero" } else { "nonzero" }
    )?;
    writeln!(
        err,
        "lift {lift}: class {}, multiplier {}",
        class.name(),
        m.value
    )?;
    Ok(())
}

pub struct GroupOptions<'a> {
    pub gens: Option<&'a str>,
    pub q: u64,
    pub words: usize,
    pub cap: usize,
}

pub fn group(
    path: &Path,
    opts: &GroupOptions<'_>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let flow = load_flow(path)?;
    let subgroup = match opts.gens {
        None => reversing_group(&flow),
        Some(g) => {
            let gens = parse_vectors(g, flow.field())?;
            MultiplierSubgroup::new(&flow, &gens).map_err(symmetry_err)?
        }
    };
    let model =
        build_torsion_model(&subgroup, opts.q, opts.words, opts.cap).map_err(symmetry_err)?;
    let cert = certify_structure(&model).map_err(symmetry_err)?;
    let splitting = verify_splitting(&subgroup, opts.words);

    let mut checks: Vec<(&str, bool)> = cert
        .checks()
        .into_iter()
        .filter(|(name, _)| *name != "nonabelian")
        .collect();
    checks.push(("splitting", splitting));
    for (name, ok) in &checks {
        writeln!(out, "CHECK\t{name}\t{}", if *ok { "PASS" } else { "FAIL" })?;
    }
    writeln!(
        out,
        "NONABELIAN\t{}",
        if cert.nonabelian { "yes" } else { "no" }
    )?;
    if let Some((x, y)) = &cert.noncommuting_pair {
        writeln!(out, "WITNESS\tnoncommute\t{x}\t{y}")?;
    }
    writeln!(out, "SIZE\t{}", cert.size)?;
    if model.is_truncated() {
        writeln!(err, "linear parts truncated at word length {}", opts.words)?;
    }
    let failed = checks.iter().filter(|(_, ok)| !ok).count();
    if failed > 0 {
        return Err(CliError::ChecksFailed(failed));
    }
    writeln!(err, "model of {} elements certified", cert.size)?;
    Ok(())
}

/// `M/100, M/10, M`, floored, at least 1, without repeats.
pub fn density_levels(max_m: u64) -> Vec<u64> {
    let mut levels: Vec<u64> = [max_m / 100, max_m / 10, max_m]
        .into_iter()
        .map(|m| m.max(1))
        .collect();
    levels.dedup();
    levels
}

/// `r` rounded down to `digits` decimal places.
pub fn decimal(r: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (r * Rational::from_integer(scale.clone()))
        .floor()
        .to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let scaled = scaled.abs();
    let int = &scaled / &scale;
    let frac = (&scaled % &scale).to_string();
    format!("{sign}{int}.{frac:0>width$}", width = digits as usize)
}

pub fn density(
    path: &Path,
    max_m: u64,
    grid: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let flow = load_flow(path)?;
    let eps = Rational::new(BigInt::from(1), BigInt::from(10u32).pow(DENSITY_EPS_DIGITS));
    for m in density_levels(max_m) {
        if flow.dim() == 2 {
            let gap = density_gap(&flow, m, &eps).map_err(symmetry_err)?;
            debug_assert!(!gap.is_zero());
            writeln!(
                out,
                "DENSITY\tM={m}\tGAP={gap}\tAPPROX={}",
                decimal(&gap, DENSITY_EPS_DIGITS)
            )?;
        } else {
            let r = density_covering_radius(&flow, m, grid, &eps).map_err(symmetry_err)?;
            writeln!(
                out,
                "DENSITY\tM={m}\tRADIUS={r}\tAPPROX={}",
                decimal(&r, DENSITY_EPS_DIGITS)
            )?;
        }
    }
    if flow.dim() > 2 {
        writeln!(
            err,
            "covering radius probed on a {grid}-point grid per axis"
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use quasiflow_core::ratio;

    #[test]
    fn levels() {
        assert_eq!(density_levels(1000), vec![10, 100, 1000]);
        assert_eq!(density_levels(50), vec![1, 5, 50]);
        assert_eq!(density_levels(1), vec![1]);
        assert_eq!(density_levels(0), vec![1]);
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(&ratio(1, 3), 4), "0.3333");
        assert_eq!(decimal(&ratio(5, 2), 2), "2.50");
        assert_eq!(decimal(&ratio(1, 100), 3), "0.010");
        assert_eq!(decimal(&ratio(-1, 4), 2), "-0.25");
    }
}
