//! The verification suites run by the command-line front end.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{confluence_probe, preset_by_name, relation_report};
use crate::boundary::{
    annihilation_report, fock_dominance_check, gamma_bound_check, general_samples,
    holomorphic_samples, isometry_check, IsometryParams, PolySample,
};
use crate::config::RunConfig;
use crate::dilation::{egervary_unitary, psi_compression_check, PsiStep};
use crate::error::{Error, Result};
use crate::fockops::{build_factor, c_formula_check, FactorKind};
use crate::homs::{build_hom, check_hom, closed_form_check, induced_fock, theta_gamma_bridge};
use crate::params;
use crate::report::{CheckReport, ItemResult, Verdict};
use crate::reps::{
    build_rep, coherent_check, gram_equivalence, joint_spectrum_check, relation_residuals, Family,
    FamilySpec, InducedKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Reps,
    Homs,
    Boundary,
    Isometry,
    Dilation,
    Spectrum,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Relations,
        Suite::Reps,
        Suite::Homs,
        Suite::Boundary,
        Suite::Isometry,
        Suite::Dilation,
        Suite::Spectrum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Reps => "reps",
            Suite::Homs => "homs",
            Suite::Boundary => "boundary",
            Suite::Isometry => "isometry",
            Suite::Dilation => "dilation",
            Suite::Spectrum => "spectrum",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

/// A CSV-ready table of norms.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn from_report(name: &str, r: &CheckReport) -> Self {
        let cell = |v: &serde_json::Value| match v {
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        Table {
            name: name.into(),
            header: ["id", "lhs", "rhs", "defect", "pass"].map(String::from).to_vec(),
            rows: r
                .per_item
                .iter()
                .map(|i| vec![i.id.clone(), cell(&i.lhs), cell(&i.rhs), i.defect.to_string(), i.pass.to_string()])
                .collect(),
        }
    }
}

/// Result of one suite. Wall time and tables are kept out of the JSON so that
/// equal configurations give byte-identical reports.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub config: RunConfig,
    pub reports: Vec<CheckReport>,
    pub verdict: Verdict,
    #[serde(skip)]
    pub wall_time: Duration,
    #[serde(skip)]
    pub tables: Vec<Table>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Serialization(e.to_string()))
    }
}

/// Runs `suite` under `config`. Configuration errors come back as `Err`.
pub fn run_suite(suite: Suite, config: &RunConfig) -> Result<SuiteReport> {
    config.validate()?;
    let start = Instant::now();
    let mut out = Output::default();
    match suite {
        Suite::All => {
            for s in Suite::ALL {
                run_one(s, config, &mut out)?;
            }
        }
        s => run_one(s, config, &mut out)?,
    }
    let verdict = Verdict::from_bool(out.reports.iter().all(CheckReport::passed));
    Ok(SuiteReport {
        suite,
        config: config.clone(),
        reports: out.reports,
        verdict,
        wall_time: start.elapsed(),
        tables: out.tables,
    })
}

#[derive(Default)]
struct Output {
    reports: Vec<CheckReport>,
    tables: Vec<Table>,
}

fn run_one(suite: Suite, c: &RunConfig, out: &mut Output) -> Result<()> {
    match suite {
        Suite::Relations => relations(c, out),
        Suite::Reps => reps(c, out),
        Suite::Homs => homs(c, out),
        Suite::Boundary => boundary(c, out),
        Suite::Isometry => isometry(c, out),
        Suite::Dilation => dilation(c, out),
        Suite::Spectrum => spectrum(c, out),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

/// `k` angles in `[0, 2π)` drawn from `seed`, shared by all suites.
pub fn seeded_angles(seed: u64, k: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x000A_11A5);
    (0..k).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect()
}

/// Every built representation family with seeded angles.
pub fn default_families(seed: u64) -> Vec<FamilySpec> {
    let a = seeded_angles(seed, 12);
    vec![
        FamilySpec::new(Family::PiF),
        FamilySpec::new(Family::Tau).phi(a[0]),
        FamilySpec::new(Family::Nu1).phi(a[1]),
        FamilySpec::new(Family::Nu2).phi(a[2]),
        FamilySpec::new(Family::Rho).phis(a[3], a[4]),
        FamilySpec::new(Family::Theta).phi(a[5]),
        FamilySpec::new(Family::Gamma).phis(a[6], a[7]),
        FamilySpec::new(Family::PolCFock).with_n(1),
        FamilySpec::new(Family::PolCFock).with_n(2),
        FamilySpec::new(Family::PolCFock).with_n(3),
        FamilySpec::new(Family::PolCOnedim).with_n(1).phi(a[8]),
        FamilySpec::new(Family::PolCOnedim).with_n(3).phi(a[8]),
        FamilySpec::new(Family::Csu2Xi).phi(a[9]),
        FamilySpec::new(Family::Csu2Pi).phi(a[9]),
        FamilySpec::induced_fock(a[10]),
        FamilySpec::induced_chi(a[10], a[11]),
    ]
}

/// Per-slot truncation for a family: `n_fock` for the four-slot Fock space.
pub fn truncation_for(spec: &FamilySpec, c: &RunConfig) -> usize {
    if spec.family == Family::PiF { c.n_fock } else { c.n }
}

fn selected_families(c: &RunConfig) -> Result<Vec<FamilySpec>> {
    match &c.family {
        Some(f) => Ok(vec![f.parse()?]),
        None => Ok(default_families(c.seed)),
    }
}

fn relations(c: &RunConfig, out: &mut Output) -> Result<()> {
    let names = match &c.preset {
        Some(p) => vec![p.clone()],
        None => ["polC(1)", "polC(2)", "polC(3)", "csu2", "polMat2"].map(String::from).to_vec(),
    };
    for name in names {
        let preset = preset_by_name(&name)?;
        out.reports.push(relation_report(&preset));
        out.reports.push(confluence_probe(&preset, c.samples_or(1000), c.seed).to_check_report(c.seed));
    }
    Ok(())
}

fn reps(c: &RunConfig, out: &mut Output) -> Result<()> {
    for spec in selected_families(c)? {
        let rep = build_rep(&spec, truncation_for(&spec, c), c.q)?;
        out.reports.push(relation_residuals(&rep, c.pad, c.samples_or(200), c.seed, c.tol)?);
    }
    if c.family.is_none() {
        let phi = seeded_angles(c.seed, 13)[12];
        let tau = build_rep(&FamilySpec::new(Family::Tau).phi(phi), c.n, c.q)?;
        let ind = induced_fock(phi, c.n, c.q)?;
        out.reports.push(coherent_check(&tau, c.tol)?);
        out.reports.push(coherent_check(&ind, c.tol)?);
        out.reports.push(gram_equivalence(&tau, &ind, 2, c.tol)?);
    }
    Ok(())
}

fn homs(c: &RunConfig, out: &mut Output) -> Result<()> {
    out.reports.push(check_hom(&build_hom("D")?)?);
    out.reports.push(check_hom(&build_hom("Pi")?)?);
    let a = seeded_angles(c.seed, 12);
    out.reports.push(theta_gamma_bridge(a[3], a[4], c.q)?);
    out.reports.push(closed_form_check(&FamilySpec::induced_fock(a[10]), c.n, c.q, c.tol)?);
    out.reports.push(closed_form_check(&FamilySpec::induced_chi(a[10], a[11]), c.n, c.q, c.tol)?);
    Ok(())
}

/// Which families are expected to annihilate the ideal J.
fn expect_annihilation(spec: &FamilySpec) -> bool {
    matches!(spec.family, Family::Rho | Family::Gamma) || spec.induced == Some(InducedKind::Chi)
}

fn boundary(c: &RunConfig, out: &mut Output) -> Result<()> {
    let polmat: Vec<FamilySpec> = default_families(c.seed)
        .into_iter()
        .filter(|f| Family::POLMAT2.contains(&f.family) || f.family == Family::Induced)
        .collect();
    let mut items = Vec::new();
    for spec in &polmat {
        let rep = build_rep(spec, truncation_for(spec, c), c.q)?;
        let r = annihilation_report(&rep, c.pad, c.samples_or(200), c.seed, c.tol)?;
        let expected = expect_annihilation(spec);
        let worst = r.max_defect();
        let ok = if expected { r.passed() } else { worst >= 0.1 };
        let describe = |a: bool| if a { "annihilates" } else { "violates" };
        items.push(ItemResult::symbolic(
            format!("{} (max residual {worst:.3e})", rep.label()),
            describe(r.passed()).into(),
            describe(expected).into(),
            ok,
        ));
    }
    out.reports.push(CheckReport::new(
        "annihilation_matrix",
        params! {"pad" => c.pad, "samples" => c.samples_or(200), "seed" => c.seed, "tol" => c.tol, "violation_floor" => 0.1},
        items,
    ));

    let scalars: Vec<PolySample> = general_samples(c.samples_or(50), c.deg, c.seed)?
        .into_iter()
        .enumerate()
        .map(|(i, p)| PolySample::scalar(i, p))
        .collect();
    let g = gamma_bound_check(&scalars, c.grid, c.n_rho, c.q, 1e-8, c.seed)?;
    out.tables.push(Table::from_report("gamma_bound", &g));
    out.reports.push(g);

    let polys = general_samples(c.samples_or(30), c.deg, c.seed.wrapping_add(1))?;
    let families: Vec<FamilySpec> = default_families(c.seed)
        .into_iter()
        .filter(|f| Family::POLMAT2.contains(&f.family) || f.family == Family::Induced)
        .collect();
    let d = fock_dominance_check(&polys, &families, c.n, c.n_fock, c.q, c.slack, c.seed)?;
    out.tables.push(Table::from_report("fock_dominance", &d));
    out.reports.push(d);
    Ok(())
}

fn isometry(c: &RunConfig, out: &mut Output) -> Result<()> {
    let samples = holomorphic_samples(c.samples_or(20), c.matrix_size, c.deg, c.seed)?;
    let p = IsometryParams { grid: c.grid, n_fock: c.n_fock, n_rho: c.n_rho, q: c.q, slack: c.slack, seed: c.seed };
    let (report, rows) = isometry_check(&samples, p)?;
    out.tables.push(Table {
        name: "isometry".into(),
        header: ["sample", "F", "Q", "defect"].map(String::from).to_vec(),
        rows: rows
            .iter()
            .map(|r| vec![r.sample.to_string(), r.f.to_string(), r.q.to_string(), r.defect.to_string()])
            .collect(),
    });
    out.reports.push(report);
    Ok(())
}

fn dilation(c: &RunConfig, out: &mut Output) -> Result<()> {
    let m = c.m();
    let half = nalgebra::DMatrix::from_element(1, 1, num_complex::Complex64::new(0.5, 0.0));
    let cs = {
        let s = build_factor(FactorKind::S, c.n, c.q)?;
        build_factor(FactorKind::C, c.n, c.q)?.mul(&s).matrix().clone()
    };
    for (label, t) in [("scalar 0.5", &half), ("CS", &cs)] {
        for order in 1..=m {
            let mut r = egervary_unitary(t, order)?.check(1e-12);
            r.params.insert("input".into(), label.into());
            out.reports.push(r);
        }
    }
    let phi = seeded_angles(c.seed, 13)[12];
    let samples = c.samples_or(20);
    out.reports.push(psi_compression_check(PsiStep::FockLastSlot, 0.0, m, c.deg, samples, c.seed, c.n_fock, c.q, c.tol)?);
    out.reports.push(psi_compression_check(PsiStep::InducedFirstSlot, phi, m, c.deg, samples, c.seed, c.n, c.q, c.tol)?);
    Ok(())
}

fn spectrum(c: &RunConfig, out: &mut Output) -> Result<()> {
    let a = seeded_angles(c.seed, 12);
    let rho = build_rep(&FamilySpec::new(Family::Rho).phis(a[3], a[4]), c.n_rho, c.q)?;
    out.reports.push(joint_spectrum_check(&rho, 10.min(c.n_rho - 1), 1e-12)?);
    for k in [5, 10, 20].into_iter().filter(|&k| k < c.n_rho) {
        out.reports.push(c_formula_check(c.n_rho, c.q, k)?);
    }
    Ok(())
}
