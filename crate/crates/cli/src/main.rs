use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qball_core::suites::Table;
use qball_core::{run_suite, OutputFormat, RunConfig, Suite, SuiteReport};

/// Verification suites for the quantum matrix ball algebra.
#[derive(Parser, Debug)]
#[command(name = "qball", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Symbolic relation soundness and confluence probes.
    Relations,
    /// Relation residuals, coherent states and Gram equivalence.
    Reps,
    /// The D and Pi homomorphisms, closed forms and the Θ/γ bridge.
    Homs,
    /// Annihilation of J, the γ-bound and Fock dominance.
    Boundary,
    /// Fock norm against quotient norm on holomorphic samples.
    Isometry,
    /// Unitary power dilations and the Ψ compressions.
    Dilation,
    /// Joint spectrum of ρ and the C-formula series.
    Spectrum,
    /// Every suite above.
    All,
}

impl From<Command> for Suite {
    fn from(c: Command) -> Suite {
        match c {
            Command::Relations => Suite::Relations,
            Command::Reps => Suite::Reps,
            Command::Homs => Suite::Homs,
            Command::Boundary => Suite::Boundary,
            Command::Isometry => Suite::Isometry,
            Command::Dilation => Suite::Dilation,
            Command::Spectrum => Suite::Spectrum,
            Command::All => Suite::All,
        }
    }
}

#[derive(Args, Debug)]
struct Flags {
    #[arg(long, global = true, default_value_t = 0.5)]
    q: f64,
    /// Per-slot truncation.
    #[arg(long = "n", global = true, default_value_t = 16)]
    n: usize,
    /// Per-slot truncation of the four-slot Fock representation.
    #[arg(long, global = true, default_value_t = 10)]
    n_fock: usize,
    /// Truncation for ρ norms and other single-slot checks.
    #[arg(long, global = true, default_value_t = 48)]
    n_rho: usize,
    #[arg(long, global = true, default_value_t = 4)]
    pad: usize,
    /// Angle points per axis.
    #[arg(long, global = true, default_value_t = 16)]
    grid: usize,
    /// Sample count (suite-specific default).
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long, global = true, default_value_t = 3)]
    deg: usize,
    #[arg(long, global = true, default_value_t = 2)]
    matrix_size: usize,
    /// Dilation order (defaults to --deg).
    #[arg(long, global = true)]
    m: Option<usize>,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 0.05)]
    slack: f64,
    /// Directory for report files.
    #[arg(long, global = true, default_value = "reports")]
    out: PathBuf,
    /// Standard output format: json or csv.
    #[arg(long, global = true, default_value = "json")]
    format: OutputFormat,
    /// Restrict `relations` to one preset, e.g. polMat2, csu2, polC(2).
    #[arg(long, global = true)]
    preset: Option<String>,
    /// Restrict `reps` to one family, e.g. rho:phi1=0.25pi,phi2=pi.
    #[arg(long, global = true)]
    family: Option<String>,
}

impl From<Flags> for RunConfig {
    fn from(f: Flags) -> RunConfig {
        RunConfig {
            q: f.q,
            n: f.n,
            n_fock: f.n_fock,
            n_rho: f.n_rho,
            pad: f.pad,
            grid: f.grid,
            samples: f.samples,
            deg: f.deg,
            matrix_size: f.matrix_size,
            m: f.m,
            seed: f.seed,
            tol: f.tol,
            slack: f.slack,
            out: f.out,
            format: f.format,
            preset: f.preset,
            family: f.family,
        }
    }
}

fn write_table(dir: &Path, t: &Table) -> Result<(), Box<dyn std::error::Error>> {
    let mut w = csv::Writer::from_path(dir.join(format!("{}.csv", t.name)))?;
    w.write_record(&t.header)?;
    for row in &t.rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn write_files(report: &SuiteReport) -> Result<(), Box<dyn std::error::Error>> {
    let dir = &report.config.out;
    fs::create_dir_all(dir)?;
    fs::write(dir.join(format!("{}.json", report.suite)), report.to_json()? + "\n")?;
    for t in &report.tables {
        write_table(dir, t)?;
    }
    Ok(())
}

fn print_stdout(report: &SuiteReport) -> Result<(), Box<dyn std::error::Error>> {
    let mut out = std::io::stdout().lock();
    match report.config.format {
        OutputFormat::Json => writeln!(out, "{}", report.to_json()?)?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["check", "id", "lhs", "rhs", "defect", "pass"])?;
            for r in &report.reports {
                for i in &r.per_item {
                    let cell = |v: &serde_json::Value| v.as_str().map(str::to_owned).unwrap_or_else(|| v.to_string());
                    w.write_record([
                        r.check.clone(),
                        i.id.clone(),
                        cell(&i.lhs),
                        cell(&i.rhs),
                        i.defect.to_string(),
                        i.pass.to_string(),
                    ])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let suite = Suite::from(cli.command);
    let config = RunConfig::from(cli.flags);
    let report = match run_suite(suite, &config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = write_files(&report).and_then(|_| print_stdout(&report)) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let failed: Vec<&str> = report.reports.iter().filter(|r| !r.passed()).map(|r| r.check.as_str()).collect();
    eprintln!(
        "{suite}: {} ({}/{} checks passed, {:.1}s)",
        report.verdict,
        report.reports.len() - failed.len(),
        report.reports.len(),
        report.wall_time.as_secs_f64()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("failed checks: {}", failed.join(", "));
        ExitCode::from(1)
    }
}
