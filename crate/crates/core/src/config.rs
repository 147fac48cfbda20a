use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::InvalidArgument(format!("unknown format `{s}` (json or csv)"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

/// Parameters shared by every suite. Echoed verbatim into each report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub q: f64,
    /// Per-slot truncation.
    pub n: usize,
    /// Per-slot truncation for the four-slot Fock representation.
    pub n_fock: usize,
    /// Truncation for single-slot checks (ρ norms, spectra, series).
    pub n_rho: usize,
    pub pad: usize,
    pub grid: usize,
    /// Sample count; each suite has its own default when unset.
    pub samples: Option<usize>,
    pub deg: usize,
    pub matrix_size: usize,
    /// Dilation order; defaults to `deg`.
    pub m: Option<usize>,
    pub seed: u64,
    pub tol: f64,
    pub slack: f64,
    pub out: PathBuf,
    pub format: OutputFormat,
    pub preset: Option<String>,
    pub family: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            q: 0.5,
            n: 16,
            n_fock: 10,
            n_rho: 48,
            pad: 4,
            grid: 16,
            samples: None,
            deg: 3,
            matrix_size: 2,
            m: None,
            seed: 42,
            tol: 1e-10,
            slack: 0.05,
            out: PathBuf::from("reports"),
            format: OutputFormat::Json,
            preset: None,
            family: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if !(self.q > 0.0 && self.q < 1.0) {
            return Err(Error::InvalidQ(self.q));
        }
        for (name, v) in [("n", self.n), ("n-fock", self.n_fock), ("n-rho", self.n_rho)] {
            if v < 2 {
                return bad(format!("{name} must be >= 2, got {v}"));
            }
            if self.pad >= v {
                return Err(Error::PadTooLarge { n: v, pad: self.pad });
            }
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return bad(format!("tol must be positive, got {}", self.tol));
        }
        if self.slack.is_nan() || self.slack < 0.0 {
            return bad(format!("slack must be non-negative, got {}", self.slack));
        }
        if self.grid == 0 || self.deg == 0 || self.matrix_size == 0 {
            return bad("grid, deg and matrix-size must be >= 1".into());
        }
        if self.samples == Some(0) {
            return bad("samples must be >= 1".into());
        }
        if self.m() < self.deg {
            return Err(Error::DegreeExceedsOrder { deg: self.deg, m: self.m() });
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m.unwrap_or(self.deg)
    }

    pub fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}
