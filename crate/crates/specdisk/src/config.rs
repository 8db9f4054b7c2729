//! Run configuration: a single versioned JSON document describing the
//! equation, the μ grid, truncation sizes, and output options.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::dispersion::{DispersionRelation, EquationFamily, MeanPolicy, SpectralProblem};
use crate::disks;
use crate::error::{Error, Result};
use crate::potentials::{self, PeriodicPotential, WaveFamilyParams};

pub const SCHEMA_VERSION: u32 = 1;

/// Equation selection. The wave families mirror
/// [`WaveFamilyParams`]; `gkdv_zero` is a zero-potential control problem
/// used for figures and negative controls.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum EquationConfig {
    MkdvCnoidal {
        amplitude: f64,
        m: f64,
    },
    BbmCnoidal {
        m: f64,
    },
    KawaharaCnQuartic {
        alpha: f64,
        /// Scaling of the cnoidal argument; fitted by residual
        /// minimization when omitted.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sigma: Option<f64>,
        m: f64,
        a1: f64,
        a2: f64,
        a3: f64,
    },
    BoRational {
        c: f64,
        period: f64,
    },
    GkdvZero {
        c: f64,
        period: f64,
    },
}

/// Either an explicit list of μ values or an inclusive linear range.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MuGrid {
    List(Vec<f64>),
    Range { start: f64, stop: f64, count: usize },
}

impl MuGrid {
    pub fn values(&self) -> Vec<f64> {
        match self {
            MuGrid::List(v) => v.clone(),
            MuGrid::Range { start, stop, count } => {
                if *count <= 1 {
                    vec![*start]
                } else {
                    (0..*count)
                        .map(|i| start + (stop - start) * i as f64 / (*count as f64 - 1.0))
                        .collect()
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("out")
}

/// Default μ grid: 201 points covering `(-1/2, 1/2]`. The density is a
/// tooling choice for resolving the essential spectrum, not a derived
/// value.
fn default_mu_grid() -> MuGrid {
    MuGrid::List((1..=201).map(|i| -0.5 + i as f64 / 201.0).collect())
}

fn default_formats() -> Vec<OutputFormat> {
    vec![OutputFormat::Csv, OutputFormat::Json]
}

fn default_homotopy_steps() -> usize {
    20
}

/// The full run configuration (schema version 1).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub schema_version: u32,
    pub equation: EquationConfig,
    /// Defaults to 201 points covering the whole Floquet interval.
    #[serde(default = "default_mu_grid")]
    pub mu_grid: MuGrid,
    /// Hill truncation half-width `N`.
    pub n: usize,
    /// Disk window for component analysis; defaults to the analytic tail
    /// bound plus a margin.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window_n: Option<usize>,
    /// Potential truncation order `M`; family-dependent default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub potential_m: Option<usize>,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    #[serde(default = "default_formats")]
    pub formats: Vec<OutputFormat>,
    /// τ steps for the homotopy check inside `verify`; 0 disables it.
    #[serde(default = "default_homotopy_steps")]
    pub homotopy_steps: usize,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: RunConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(format!("bad schema: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Config(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let mu_values = self.mu_grid.values();
        if mu_values.is_empty() {
            return Err(Error::Config("mu grid must contain at least one value".into()));
        }
        for &mu in &mu_values {
            if !(mu > -0.5 && mu <= 0.5) {
                return Err(Error::Config(format!(
                    "mu = {mu} outside the Floquet interval (-1/2, 1/2]"
                )));
            }
        }
        if self.n < 16 {
            return Err(Error::Config(format!("n = {} below the minimum of 16", self.n)));
        }
        if self.formats.is_empty() {
            return Err(Error::Config("at least one output format is required".into()));
        }
        Ok(())
    }

    pub fn mu_values(&self) -> Vec<f64> {
        self.mu_grid.values()
    }

    /// Resolves the equation into wave-family parameters, fitting the
    /// Kawahara σ when it is not given. Returns `None` for the
    /// zero-potential control.
    pub fn wave_params(&self) -> Result<Option<WaveFamilyParams>> {
        Ok(Some(match self.equation {
            EquationConfig::MkdvCnoidal { amplitude, m } => {
                WaveFamilyParams::MKdVCnoidal { amplitude, m }
            }
            EquationConfig::BbmCnoidal { m } => WaveFamilyParams::BBMCnoidal { m },
            EquationConfig::KawaharaCnQuartic {
                alpha,
                sigma,
                m,
                a1,
                a2,
                a3,
            } => {
                let sigma = match sigma {
                    Some(s) => s,
                    None => potentials::fit_kawahara_sigma(alpha, m, a1, a2, a3, 512)?.0,
                };
                WaveFamilyParams::KawaharaCnQuartic {
                    alpha,
                    sigma,
                    m,
                    a1,
                    a2,
                    a3,
                }
            }
            EquationConfig::BoRational { c, period } => {
                WaveFamilyParams::BORational { c, period }
            }
            EquationConfig::GkdvZero { .. } => return Ok(None),
        }))
    }

    /// Builds the spectral problem this configuration describes.
    pub fn build_problem(&self) -> Result<SpectralProblem> {
        match self.wave_params()? {
            Some(params) => {
                let m = self
                    .potential_m
                    .unwrap_or_else(|| params.default_truncation());
                potentials::build_problem(&params, m)
            }
            None => {
                let EquationConfig::GkdvZero { c, period } = self.equation else {
                    unreachable!()
                };
                if !(period > 0.0) {
                    return Err(Error::Config("gkdv_zero period must be positive".into()));
                }
                let m = self.potential_m.unwrap_or(16);
                SpectralProblem::new(
                    DispersionRelation::new(EquationFamily::GKdv),
                    c,
                    PeriodicPotential::zero(period, m),
                    MeanPolicy::Absorbed,
                )
            }
        }
    }

    /// Disk window: the configured value, or the tail bound plus a margin
    /// (a fixed default for Benjamin–Ono, which has none).
    pub fn window(&self, problem: &SpectralProblem) -> usize {
        if let Some(w) = self.window_n {
            return w;
        }
        match disks::tail_index_bound(problem) {
            Ok(bound) => bound.k_star.unsigned_abs() as usize + 2,
            Err(_) => 10,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = r#"{
        "schema_version": 1,
        "equation": {"family": "mkdv_cnoidal", "amplitude": 1.0, "m": 0.5},
        "mu_grid": {"start": 0.0, "stop": 0.5, "count": 6},
        "n": 48,
        "formats": ["csv", "json"]
    }"#;

    #[test]
    fn parses_and_validates_the_example() {
        let config = RunConfig::from_json(EXAMPLE).unwrap();
        assert_eq!(config.mu_values().len(), 6);
        assert_eq!(config.mu_values()[5], 0.5);
        assert_eq!(config.window(&config.build_problem().unwrap()), 5);
    }

    #[test]
    fn rejects_bad_mu_and_small_n() {
        let bad_mu = EXAMPLE.replace("\"stop\": 0.5", "\"stop\": 0.7");
        assert!(matches!(RunConfig::from_json(&bad_mu), Err(Error::Config(_))));
        let bad_n = EXAMPLE.replace("\"n\": 48", "\"n\": 8");
        assert!(matches!(RunConfig::from_json(&bad_n), Err(Error::Config(_))));
    }

    #[test]
    fn rejects_unknown_fields_and_wrong_version() {
        let unknown = EXAMPLE.replace("\"n\": 48", "\"n\": 48, \"bogus\": 1");
        assert!(RunConfig::from_json(&unknown).is_err());
        let version = EXAMPLE.replace("\"schema_version\": 1", "\"schema_version\": 9");
        assert!(RunConfig::from_json(&version).is_err());
    }

    #[test]
    fn explicit_mu_list_round_trips() {
        let json = r#"{
            "schema_version": 1,
            "equation": {"family": "bo_rational", "c": 5.0, "period": 3.0},
            "mu_grid": [0.0, 0.25, 0.5],
            "n": 64
        }"#;
        let config = RunConfig::from_json(json).unwrap();
        assert_eq!(config.mu_values(), vec![0.0, 0.25, 0.5]);
        let text = config.to_json();
        let again = RunConfig::from_json(&text).unwrap();
        assert_eq!(again.mu_values(), config.mu_values());
    }

    #[test]
    fn mu_grid_defaults_to_201_points() {
        let json = r#"{
            "schema_version": 1,
            "equation": {"family": "mkdv_cnoidal", "amplitude": 1.0, "m": 0.5},
            "n": 48
        }"#;
        let config = RunConfig::from_json(json).unwrap();
        let grid = config.mu_values();
        assert_eq!(grid.len(), 201);
        assert!(grid[0] > -0.5);
        assert_eq!(*grid.last().unwrap(), 0.5);
    }

    #[test]
    fn zero_potential_control_builds() {
        let json = r#"{
            "schema_version": 1,
            "equation": {"family": "gkdv_zero", "c": 1.0, "period": 6.2831853},
            "mu_grid": [0.1],
            "n": 16
        }"#;
        let config = RunConfig::from_json(json).unwrap();
        let problem = config.build_problem().unwrap();
        assert_eq!(problem.potential().l1_with_mean(), 0.0);
    }
}
