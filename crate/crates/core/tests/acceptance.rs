//! Runs every acceptance criterion at its stated tolerance and prints one
//! PASS/FAIL line per criterion. Exits non-zero if any criterion fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_complex::Complex64;
use qball_core::algebra::{confluence_probe, preset_by_name, unsound_relations};
use qball_core::boundary::{
    annihilation_report, fock_dominance_check, gamma_bound_check, general_samples,
    holomorphic_samples, isometry_check, IsometryParams, PolySample,
};
use qball_core::dilation::{egervary_unitary, psi_compression_check, PsiStep};
use qball_core::fockops::{build_factor, c_formula_check, FactorKind};
use qball_core::homs::{build_hom, check_hom, induced_chi, induced_fock, theta_gamma_bridge};
use qball_core::reps::{
    build_rep, coherent_check, gram_equivalence, joint_spectrum_check, relation_residuals, Family,
    FamilySpec,
};
use qball_core::{CheckReport, Result};

const Q: f64 = 0.5;
const SEED: u64 = 42;

struct Outcome {
    pass: bool,
    summary: String,
}

fn outcome(pass: bool, summary: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass, summary: summary.into() })
}

fn failures(r: &CheckReport) -> usize {
    r.failures().count()
}

fn polmat_families() -> Vec<(FamilySpec, usize)> {
    vec![
        (FamilySpec::new(Family::PiF), 10),
        (FamilySpec::new(Family::Tau).phi(0.7), 16),
        (FamilySpec::new(Family::Nu1).phi(1.9), 16),
        (FamilySpec::new(Family::Nu2).phi(4.1), 16),
        (FamilySpec::new(Family::Rho).phis(0.4, 5.0), 16),
        (FamilySpec::new(Family::Theta).phi(3.0), 16),
        (FamilySpec::new(Family::Gamma).phis(2.2, 0.9), 16),
        (FamilySpec::induced_fock(PI / 3.0), 16),
        (FamilySpec::induced_chi(0.8, 2.2), 16),
    ]
}

fn c1_symbolic_soundness() -> Result<Outcome> {
    let start = Instant::now();
    let mut unsound = 0;
    let mut conf = 0;
    let mut relations = 0;
    for name in ["polC(1)", "polC(2)", "polC(3)", "csu2", "polMat2"] {
        let p = preset_by_name(name)?;
        relations += p.relations.len();
        unsound += unsound_relations(&p).len();
        conf += confluence_probe(&p, 1000, SEED).failures();
    }
    let t = start.elapsed();
    outcome(
        unsound == 0 && conf == 0 && t < Duration::from_secs(30),
        format!("{unsound}/{relations} relations nonzero, {conf} confluence failures over 5x1000 triples"),
    )
}

fn c2_homomorphisms() -> Result<Outcome> {
    let start = Instant::now();
    let d = check_hom(&build_hom("D")?)?;
    let t = start.elapsed();
    let pi = check_hom(&build_hom("Pi")?)?;
    let zeros = d.per_item.iter().filter(|i| i.pass).count();
    outcome(
        d.passed() && d.per_item.len() == 28 && pi.passed() && t < Duration::from_secs(60),
        format!("D: {zeros}/{} exact zeros in {:.2}s; Pi: {} failures", d.per_item.len(), t.as_secs_f64(), failures(&pi)),
    )
}

fn c3_family_relations() -> Result<Outcome> {
    let mut specs = polmat_families();
    specs.extend([
        (FamilySpec::new(Family::PolCFock).with_n(1), 16),
        (FamilySpec::new(Family::PolCFock).with_n(2), 16),
        (FamilySpec::new(Family::PolCFock).with_n(3), 16),
        (FamilySpec::new(Family::PolCOnedim).with_n(3).phi(1.2), 16),
        (FamilySpec::new(Family::Csu2Xi).phi(0.9), 16),
        (FamilySpec::new(Family::Csu2Pi).phi(0.2), 16),
    ]);
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for (spec, n) in &specs {
        let r = relation_residuals(&build_rep(spec, *n, Q)?, 4, 200, SEED, 1e-10)?;
        worst = worst.max(r.max_defect());
        if !r.passed() {
            bad.push(spec.to_string());
        }
    }
    outcome(bad.is_empty(), format!("{} families, max residual {worst:.2e}, failing: {bad:?}", specs.len()))
}

fn c4_annihilation() -> Result<Outcome> {
    let mut ok = true;
    let mut notes = Vec::new();
    for (spec, n) in polmat_families() {
        if spec.induced == Some(qball_core::reps::InducedKind::Fock) {
            continue;
        }
        let rep = build_rep(&spec, n, Q)?;
        let r = annihilation_report(&rep, 4, 200, SEED, 1e-10)?;
        let expect = matches!(spec.family, Family::Rho | Family::Gamma) || spec.induced.is_some();
        let good = if expect { r.passed() } else { r.max_defect() >= 0.1 };
        ok &= good;
        notes.push(format!("{}={:.1e}", spec.family.name(), r.max_defect()));
        if spec.family == Family::PiF {
            let v = r.item("g22 vacuum").map(|i| i.defect).unwrap_or(f64::NAN);
            ok &= (v - 1.0).abs() <= 1e-12;
            notes.push(format!("|g22 Omega|={v}"));
        }
    }
    let chi = annihilation_report(&induced_chi(0.8, 2.2, 16, Q)?, 4, 200, SEED, 1e-10)?;
    ok &= chi.passed();
    outcome(ok, notes.join(" "))
}

fn c5_gamma_bound() -> Result<Outcome> {
    let samples: Vec<PolySample> = general_samples(50, 3, SEED)?
        .into_iter()
        .enumerate()
        .map(|(i, p)| PolySample::scalar(i, p))
        .collect();
    let r = gamma_bound_check(&samples, 16, 48, Q, 1e-8, SEED)?;
    let mut bridge_ok = true;
    for (a, b) in [(0.0, 0.0), (0.3, 1.1), (2.5, 4.0), (PI, PI / 2.0)] {
        bridge_ok &= theta_gamma_bridge(a, b, Q)?.passed();
    }
    let worst = r.failures().map(|i| i.defect).fold(0.0, f64::max);
    outcome(
        r.passed() && bridge_ok,
        format!(
            "{}/50 samples exceed the bound (worst excess {worst:.2e}); bridge exact: {bridge_ok}",
            failures(&r)
        ),
    )
}

fn isometry_run(samples: &[PolySample], grid: usize, n_rho: usize) -> Result<(CheckReport, f64)> {
    let p = IsometryParams { grid, n_fock: 10, n_rho, q: Q, slack: 0.05, seed: SEED };
    let (r, rows) = isometry_check(samples, p)?;
    let mean = rows.iter().map(|r| r.defect).sum::<f64>() / rows.len() as f64;
    Ok((r, mean))
}

fn c6_isometry() -> Result<Outcome> {
    let start = Instant::now();
    let mut samples = holomorphic_samples(20, 1, 3, SEED)?;
    samples.extend(holomorphic_samples(20, 2, 3, SEED)?.into_iter().map(|mut s| {
        s.id += 20;
        s
    }));
    let (base, base_mean) = isometry_run(&samples, 16, 48)?;
    let (fine, fine_mean) = isometry_run(&samples, 32, 64)?;
    let t = start.elapsed();
    let decreases = fine_mean < base_mean && fine.max_defect() <= base.max_defect();
    outcome(
        base.passed() && decreases && t < Duration::from_secs(600),
        format!(
            "{}/40 outside 5% (max defect {:.3}, mean {:.4}); refined grid 32/N_rho 64: max {:.3}, mean {:.4}; {:.0}s",
            failures(&base),
            base.max_defect(),
            base_mean,
            fine.max_defect(),
            fine_mean,
            t.as_secs_f64()
        ),
    )
}

fn c7_fock_dominance() -> Result<Outcome> {
    let polys = general_samples(30, 3, SEED)?;
    let families: Vec<FamilySpec> = polmat_families().into_iter().map(|(s, _)| s).collect();
    let r = fock_dominance_check(&polys, &families, 16, 10, Q, 0.05, SEED)?;
    let worst = r.per_item.iter().map(|i| i.defect).fold(0.0, f64::max);
    outcome(
        r.passed(),
        format!("{}/{} pairs above 1.05 x Fock norm (worst ratio {:.4})", failures(&r), r.per_item.len(), 1.0 + worst),
    )
}

fn c8_dilation() -> Result<Outcome> {
    let cs = {
        let s = build_factor(FactorKind::S, 16, Q)?;
        build_factor(FactorKind::C, 16, Q)?.mul(&s).matrix().clone()
    };
    let scalars = [0.0, 0.5, -0.8, 1.0].map(|x| DMatrix::from_element(1, 1, Complex64::new(x, 0.3 * x)));
    let mut worst = 0.0f64;
    let mut ok = true;
    for t in scalars.iter().chain([&cs]) {
        let t = if t.nrows() == 1 && t[(0, 0)].norm() > 1.0 { t / Complex64::new(t[(0, 0)].norm(), 0.0) } else { t.clone() };
        for m in 1..=6 {
            let r = egervary_unitary(&t, m)?.check(1e-12);
            worst = worst.max(r.max_defect());
            ok &= r.passed();
        }
    }
    let mut psi = Vec::new();
    for (step, n) in [(PsiStep::FockLastSlot, 10), (PsiStep::InducedFirstSlot, 16)] {
        let r = psi_compression_check(step, PI / 3.0, 3, 3, 20, SEED, n, Q, 1e-10)?;
        ok &= r.passed();
        let control = r.per_item.iter().find(|i| i.id.starts_with("starred")).map(|i| i.defect).unwrap_or(0.0);
        psi.push(format!("{step}: {} words ok, starred control defect {control:.2}", r.per_item.len() - 2));
    }
    outcome(ok, format!("max unitarity/power defect {worst:.1e}; {}", psi.join("; ")))
}

fn c9_equivalence() -> Result<Outcome> {
    let mut ok = true;
    let mut worst = 0.0f64;
    for phi in [0.0, PI / 3.0, PI] {
        let tau = build_rep(&FamilySpec::new(Family::Tau).phi(phi), 32, Q)?;
        let ind = induced_fock(phi, 32, Q)?;
        ok &= coherent_check(&tau, 1e-12)?.passed() && coherent_check(&ind, 1e-12)?.passed();
        let g = gram_equivalence(&tau, &ind, 2, 1e-8)?;
        worst = worst.max(g.max_defect());
        ok &= g.passed();
    }
    outcome(ok, format!("phi in {{0, pi/3, pi}} at N=32: max Gram difference {worst:.1e}"))
}

fn c10_joint_spectrum() -> Result<Outcome> {
    let mut ok = true;
    let mut worst = 0.0f64;
    for (a, b) in [(0.0, 0.0), (0.4, 5.0), (PI, 1.0)] {
        let r = joint_spectrum_check(&build_rep(&FamilySpec::new(Family::Rho).phis(a, b), 48, Q)?, 10, 1e-12)?;
        ok &= r.passed();
        worst = worst.max(r.max_defect());
    }
    outcome(ok, format!("k <= 10 at three angle pairs, max defect {worst:.1e}"))
}

fn c11_c_formula() -> Result<Outcome> {
    let mut ok = true;
    let mut notes = Vec::new();
    for k in [5, 10, 20] {
        let r = c_formula_check(32, Q, k)?;
        ok &= r.passed();
        notes.push(format!("K={k}: {:.1e}", r.per_item[0].lhs.as_f64().unwrap_or(f64::NAN)));
    }
    outcome(ok, notes.join(", "))
}

fn main() {
    type Criterion = (&'static str, fn() -> Result<Outcome>);
    let criteria: [Criterion; 11] = [
        ("symbolic soundness", c1_symbolic_soundness),
        ("D and Pi homomorphisms", c2_homomorphisms),
        ("family relations", c3_family_relations),
        ("boundary annihilation", c4_annihilation),
        ("gamma bound", c5_gamma_bound),
        ("complete isometry", c6_isometry),
        ("Fock dominance", c7_fock_dominance),
        ("dilation", c8_dilation),
        ("coherent states and Gram equivalence", c9_equivalence),
        ("joint spectrum", c10_joint_spectrum),
        ("C-formula", c11_c_formula),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, summary) = match run() {
            Ok(o) => (o.pass, o.summary),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "{} criterion {:>2} {name}: {summary} [{:.1}s]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
