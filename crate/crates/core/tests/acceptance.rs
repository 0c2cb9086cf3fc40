//! Acceptance suite. Every criterion runs exactly; each prints one
//! PASS/FAIL line and the process exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{el, flow, golden, plastic, sqrt2};
use quasiflow_core::analysis::{density_covering_radius, density_gap, pde_residual};
use quasiflow_core::flow::{matrix_from_multiplier, multiplier_from_matrix};
use quasiflow_core::group::{
    build_torsion_model, certify_structure, reversing_group, verify_splitting, MultiplierSubgroup,
    DEFAULT_ELEMENT_CAP,
};
use quasiflow_core::search::search_multipliers;
use quasiflow_core::{ratio, AffineLift, AlgebraicNumber, Field, IntMatrix, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rational_close(x: &Rational, target: f64, tol: f64) -> bool {
    let num: f64 = x.numer().to_string().parse().unwrap();
    let den: f64 = x.denom().to_string().parse().unwrap();
    (num / den - target).abs() <= tol
}

/// Brute-force unit oracle for Z[φ]: α = x − yφ has norm x² − xy − y².
fn golden_pell_oracle(bound: i64, height: i64) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            let norm = x * x - x * y - y * y;
            if norm.abs() == 1 {
                // power-basis coordinates of x − yφ
                let (c0, c1) = (x, -y);
                if c0.abs() <= height && c1.abs() <= height {
                    out.insert((c0, c1));
                }
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let f = golden();
    let a = flow(&f);
    let found = search_multipliers(&a, 1);
    let got: BTreeSet<(i64, i64)> = found
        .iter()
        .map(|m| {
            let c = m.value.coords();
            (
                c[0].to_integer().try_into().unwrap(),
                c[1].to_integer().try_into().unwrap(),
            )
        })
        .collect();
    let oracle = golden_pell_oracle(2, 1);
    let expected: BTreeSet<(i64, i64)> = [
        (1, 0),
        (-1, 0),
        (0, 1),
        (0, -1),
        (-1, 1),
        (1, -1),
        (1, 1),
        (-1, -1),
    ]
    .into_iter()
    .collect();
    ensure(got == expected, format!("search returned {got:?}"))?;
    ensure(
        oracle == expected,
        format!("Pell oracle disagrees: {oracle:?}"),
    )?;
    ensure(found.len() == 8, "duplicate multipliers")?;
    for m in &found {
        ensure(
            m.witness.is_unimodular(),
            format!("witness {} not unimodular", m.witness),
        )?;
    }
    Ok(format!("{} multipliers = Pell oracle", found.len()))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for f in [golden(), sqrt2(), plastic()] {
        let a = flow(&f);
        for m in search_multipliers(&a, 2) {
            let back = multiplier_from_matrix(&m.witness, &a).map_err(|e| e.to_string())?;
            ensure(
                back.value == m.value,
                format!("multiplier mismatch for {}", m.value),
            )?;
            let again = matrix_from_multiplier(&back.value, &a).map_err(|e| e.to_string())?;
            ensure(
                again == m.witness,
                format!("matrix round trip failed for {}", m.witness),
            )?;
            ensure(
                m.is_char_poly_root(),
                format!("char poly of {} misses α", m.witness),
            )?;
            ensure(
                m.value.degree_over_q() <= a.dim(),
                format!("degree of {} exceeds n", m.value),
            )?;
            checked += 1;
        }
    }
    ensure(checked > 0, "no multipliers found")?;
    Ok(format!("{checked} multipliers round-trip exactly"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let f = golden();
    let a = flow(&f);
    let one = el(&f, &[1, 0]);
    let minus_one = el(&f, &[-1, 0]);
    let mut unimodular = 0;
    let mut symmetric = 0;
    for b00 in -3..=3i64 {
        for b01 in -3..=3i64 {
            for b10 in -3..=3i64 {
                for b11 in -3..=3i64 {
                    let b = IntMatrix::from_rows(&[&[b00, b01], &[b10, b11]]);
                    if !b.is_unimodular() {
                        continue;
                    }
                    unimodular += 1;
                    let Ok(m) = multiplier_from_matrix(&b, &a) else {
                        continue;
                    };
                    symmetric += 1;
                    if m.value == one {
                        ensure(b.is_identity(), format!("{b} has multiplier 1"))?;
                    } else if m.value == minus_one {
                        ensure(
                            b == IntMatrix::identity(2).neg(),
                            format!("{b} has multiplier -1"),
                        )?;
                    } else {
                        ensure(
                            m.value.as_rational().is_none(),
                            format!("{b} has rational multiplier {}", m.value),
                        )?;
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 10.0, format!("took {elapsed:?}"))?;
    Ok(format!(
        "{unimodular} unimodular matrices, {symmetric} symmetries, {:.2}s",
        elapsed.as_secs_f64()
    ))
}

fn random_torsion(f: &Field, rng: &mut ChaCha8Rng, max_q: i64) -> Vec<AlgebraicNumber> {
    (0..2)
        .map(|_| {
            let q = rng.gen_range(1..=max_q);
            let k = rng.gen_range(-3 * q..=3 * q);
            AlgebraicNumber::from_rational(f, ratio(k, q))
        })
        .collect()
}

fn random_lift(f: &Field, rng: &mut ChaCha8Rng) -> AffineLift {
    let phi = IntMatrix::from_rows(&[&[0, 1], &[1, 1]]);
    let k = rng.gen_range(-4..=4);
    let mut b = phi.pow(k).unwrap();
    if rng.gen_bool(0.5) {
        b = b.neg();
    }
    AffineLift::new(b, random_torsion(f, rng, 12)).unwrap()
}

fn criterion_4() -> Outcome {
    let f = golden();
    let a = flow(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let lf = random_lift(&f, &mut rng);
        let lg = random_lift(&f, &mut rng);
        let prod = lf.compose(&lg).map_err(|e| e.to_string())?;
        let mf = lf.multiplier(&a).map_err(|e| e.to_string())?;
        let mg = lg.multiplier(&a).map_err(|e| e.to_string())?;
        let mp = prod.multiplier(&a).map_err(|e| e.to_string())?;
        ensure(mp.value == &mf.value * &mg.value, format!("{lf} ∘ {lg}"))?;
        // Shift g by a deck transformation before composing.
        let shift: Vec<AlgebraicNumber> = lg
            .translation()
            .iter()
            .map(|c| c + &AlgebraicNumber::from_int(&f, rng.gen_range(-5..=5)))
            .collect();
        let shifted = AffineLift::new(lg.matrix().clone(), shift).unwrap();
        ensure(shifted == lg, "deck shift changed the lift")?;
        ensure(
            lf.compose(&shifted).unwrap() == prod,
            "deck shift changed the product",
        )?;
    }
    Ok("500 random pairs".into())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let f = golden();
    let a = flow(&f);
    let rev = reversing_group(&a);
    let model = build_torsion_model(&rev, 3, 2, DEFAULT_ELEMENT_CAP).map_err(|e| e.to_string())?;
    ensure(
        model.len() == 18,
        format!("<-1>, q=3 model has {} elements", model.len()),
    )?;
    let cert = certify_structure(&model).map_err(|e| e.to_string())?;
    for (name, ok) in cert.checks() {
        ensure(ok, format!("<-1>, q=3: {name} failed"))?;
    }
    ensure(verify_splitting(&rev, 2), "<-1>: splitting failed")?;

    let phi = MultiplierSubgroup::new(&a, &[el(&f, &[0, 1])]).map_err(|e| e.to_string())?;
    let model = build_torsion_model(&phi, 5, 3, DEFAULT_ELEMENT_CAP).map_err(|e| e.to_string())?;
    ensure(
        model.len() == 175,
        format!("<φ>, q=5 model has {} elements", model.len()),
    )?;
    let cert = certify_structure(&model).map_err(|e| e.to_string())?;
    for (name, ok) in cert.checks() {
        ensure(ok, format!("<φ>, q=5: {name} failed"))?;
    }
    let (x, y) = cert.noncommuting_pair.clone().ok_or("no witness pair")?;
    ensure(
        x.compose(&y).unwrap() != y.compose(&x).unwrap(),
        "witness pair commutes",
    )?;
    ensure(verify_splitting(&phi, 3), "<φ>: splitting failed")?;
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 30.0, format!("took {elapsed:?}"))?;
    Ok(format!("witness {x} / {y}, {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_6() -> Outcome {
    let f = golden();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let c = random_torsion(&f, &mut rng, 50);
        let r = AffineLift::new(IntMatrix::identity(2).neg(), c).unwrap();
        ensure(
            r.compose(&r).unwrap().is_identity(),
            format!("{r} squared is not the identity"),
        )?;
    }
    Ok("100 reversing involutions".into())
}

/// Gap values from an independent 50-digit brute force over |m| ≤ M.
const GOLDEN_GAPS: [(u64, f64); 3] = [
    (10, 0.055_728_090_000_841_21),
    (100, 0.008_130_618_755_783_349),
    (1000, 0.000_733_137_435_857_404_8),
];
/// Covering radius of the plastic flow, M = 100, 20×20 probes, max metric.
const PLASTIC_RADIUS_M100: f64 = 0.04127767201557386;
const PLASTIC_RADIUS_THRESHOLD: f64 = 0.05;

fn criterion_7() -> Outcome {
    let eps = ratio(1, 1_000_000_000);
    let tol = 2e-9 + 1e-12;
    let a = flow(&golden());
    let mut prev: Option<Rational> = None;
    for (m, oracle) in GOLDEN_GAPS {
        let gap = density_gap(&a, m, &eps).map_err(|e| e.to_string())?;
        ensure(
            rational_close(&gap, oracle, tol),
            format!("gap at M={m}: {gap}"),
        )?;
        if let Some(p) = &prev {
            ensure(&gap < p, format!("gap did not decrease at M={m}"))?;
        }
        prev = Some(gap);
    }
    let p = flow(&plastic());
    let radius = density_covering_radius(&p, 100, 20, &eps).map_err(|e| e.to_string())?;
    ensure(
        rational_close(&radius, PLASTIC_RADIUS_M100, tol + 1e-9),
        format!("plastic radius {radius}"),
    )?;
    ensure(
        radius < Rational::new(BigInt::from(5), BigInt::from(100)),
        "plastic radius above threshold",
    )?;
    Ok(format!(
        "gaps match oracle; plastic radius < {PLASTIC_RADIUS_THRESHOLD}"
    ))
}

fn criterion_8() -> Outcome {
    let mut valid = 0;
    for f in [golden(), sqrt2(), plastic()] {
        let a = flow(&f);
        let mut lifts: Vec<AffineLift> = search_multipliers(&a, 2)
            .into_iter()
            .map(|m| AffineLift::linear(m.witness, &f).unwrap())
            .collect();
        if a.dim() == 2 {
            let rev = reversing_group(&a);
            let model = build_torsion_model(&rev, 3, 2, DEFAULT_ELEMENT_CAP).unwrap();
            lifts.extend(model.elements().cloned());
        }
        for l in &lifts {
            let alpha = l.multiplier(&a).map_err(|e| e.to_string())?.value;
            let r = pde_residual(l, &alpha, &a).map_err(|e| e.to_string())?;
            ensure(
                r.iter().all(AlgebraicNumber::is_zero),
                format!("residual of {l} nonzero"),
            )?;
            valid += 1;
        }
    }
    let f = golden();
    let a = flow(&f);
    let phi = MultiplierSubgroup::new(&a, &[el(&f, &[0, 1])]).unwrap();
    let model = build_torsion_model(&phi, 5, 3, DEFAULT_ELEMENT_CAP).unwrap();
    for l in model.elements() {
        let alpha = model.multiplier_of(l).unwrap();
        let r = pde_residual(l, alpha, &a).map_err(|e| e.to_string())?;
        ensure(
            r.iter().all(AlgebraicNumber::is_zero),
            format!("residual of {l} nonzero"),
        )?;
        valid += 1;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut invalid = 0;
    while invalid < 100 {
        let rows: Vec<i64> = (0..4).map(|_| rng.gen_range(-3..=3)).collect();
        let b = IntMatrix::from_rows(&[&rows[..2], &rows[2..]]);
        if !b.is_unimodular() {
            continue;
        }
        let alpha = el(&f, &[rng.gen_range(-3..=3), rng.gen_range(-3..=3)]);
        if multiplier_from_matrix(&b, &a).is_ok_and(|m| m.value == alpha) {
            continue;
        }
        let lift = AffineLift::linear(b, &f).unwrap();
        let r = pde_residual(&lift, &alpha, &a).map_err(|e| e.to_string())?;
        ensure(
            !r.iter().all(AlgebraicNumber::is_zero),
            format!("{lift} with α={alpha}"),
        )?;
        invalid += 1;
    }
    Ok(format!(
        "{valid} valid lifts zero, {invalid} invalid pairs nonzero"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("golden search matches Pell oracle", criterion_1),
        ("matrix/multiplier round trip", criterion_2),
        ("multiplier ±1 forces ±I", criterion_3),
        ("multiplier homomorphism and deck invariance", criterion_4),
        ("semidirect product certification", criterion_5),
        ("reversing symmetries are involutions", criterion_6),
        ("density of J", criterion_7),
        ("lifted symmetry equation residual", criterion_8),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("CRITERION {} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("CRITERION {} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
