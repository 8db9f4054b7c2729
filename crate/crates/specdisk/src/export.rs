//! CSV and JSON serialization of potentials, disks, spectra, and
//! verification reports.
//!
//! Floating-point values are written with Rust's shortest round-trip
//! formatting, so re-ingesting a table reproduces the in-memory values
//! bit for bit, and identical inputs yield byte-identical files.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::SCHEMA_VERSION;
use crate::disks::{ComponentReport, GershgorinDisk, TailBound};
use crate::error::{Error, Result};
use crate::hill::SpectrumResult;
use crate::potentials::PeriodicPotential;
use crate::verify::VerificationReport;

// ---------------------------------------------------------------------
// Potentials
// ---------------------------------------------------------------------

/// CSV table of Fourier coefficients: `k,re_qhat,im_qhat`.
pub fn potential_csv(potential: &PeriodicPotential) -> String {
    let mut out = String::from("k,re_qhat,im_qhat\n");
    let m = potential.max_harmonic() as i64;
    for k in -m..=m {
        let c = potential.coefficient(k);
        out.push_str(&format!("{k},{},{}\n", c.re, c.im));
    }
    out
}

/// Re-ingests a coefficient CSV written by [`potential_csv`].
pub fn parse_potential_csv(text: &str, period: f64) -> Result<PeriodicPotential> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            if line != "k,re_qhat,im_qhat" {
                return Err(Error::Config(format!("unexpected CSV header: {line}")));
            }
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Config(format!("bad CSV row: {line}")));
        }
        let k: i64 = fields[0]
            .parse()
            .map_err(|e| Error::Config(format!("bad index in {line}: {e}")))?;
        let re: f64 = fields[1]
            .parse()
            .map_err(|e| Error::Config(format!("bad value in {line}: {e}")))?;
        let im: f64 = fields[2]
            .parse()
            .map_err(|e| Error::Config(format!("bad value in {line}: {e}")))?;
        rows.push((k, Complex64::new(re, im)));
    }
    rows.sort_by_key(|r| r.0);
    let coefficients: Vec<Complex64> = rows.iter().map(|r| r.1).collect();
    PeriodicPotential::from_coefficients(period, coefficients)
}

#[derive(Serialize, Deserialize)]
struct PotentialJson {
    schema_version: u32,
    period: f64,
    mean: [f64; 2],
    l1_no_mean: f64,
    l1_with_mean: f64,
    coefficients: Vec<CoefficientJson>,
}

#[derive(Serialize, Deserialize)]
struct CoefficientJson {
    k: i64,
    re: f64,
    im: f64,
}

/// JSON document with period, mean, norms, and the coefficient table.
pub fn potential_json(potential: &PeriodicPotential) -> String {
    let m = potential.max_harmonic() as i64;
    let doc = PotentialJson {
        schema_version: SCHEMA_VERSION,
        period: potential.period(),
        mean: [potential.mean().re, potential.mean().im],
        l1_no_mean: potential.l1_no_mean(),
        l1_with_mean: potential.l1_with_mean(),
        coefficients: (-m..=m)
            .map(|k| {
                let c = potential.coefficient(k);
                CoefficientJson { k, re: c.re, im: c.im }
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("potential serializes")
}

/// Re-ingests [`potential_json`] output.
pub fn parse_potential_json(text: &str) -> Result<PeriodicPotential> {
    let doc: PotentialJson = serde_json::from_str(text)?;
    let mut rows: Vec<(i64, Complex64)> = doc
        .coefficients
        .iter()
        .map(|c| (c.k, Complex64::new(c.re, c.im)))
        .collect();
    rows.sort_by_key(|r| r.0);
    PeriodicPotential::from_coefficients(doc.period, rows.into_iter().map(|r| r.1).collect())
}

// ---------------------------------------------------------------------
// Disks and components
// ---------------------------------------------------------------------

/// CSV table of disks: `k,mu,center_im,radius`.
pub fn disks_csv(disks: &[GershgorinDisk]) -> String {
    let mut out = String::from("k,mu,center_im,radius\n");
    for d in disks {
        out.push_str(&format!("{},{},{},{}\n", d.k, d.mu, d.center.im, d.radius));
    }
    out
}

#[derive(Serialize)]
struct DiskAnalysisJson<'a> {
    schema_version: u32,
    tail_bound: Option<&'a TailBound>,
    reports: &'a [ComponentReport],
}

/// JSON document with the tail bound and per-μ component reports.
pub fn components_json(tail: Option<&TailBound>, reports: &[ComponentReport]) -> String {
    let doc = DiskAnalysisJson {
        schema_version: SCHEMA_VERSION,
        tail_bound: tail,
        reports,
    };
    serde_json::to_string_pretty(&doc).expect("component report serializes")
}

// ---------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------

/// CSV table of eigenvalues: `mu,re_lambda,im_lambda,trusted`.
pub fn spectra_csv(spectra: &[SpectrumResult]) -> String {
    let mut out = String::from("mu,re_lambda,im_lambda,trusted\n");
    for s in spectra {
        for l in &s.eigenvalues {
            out.push_str(&format!(
                "{},{},{},{}\n",
                s.mu,
                l.re,
                l.im,
                s.is_trusted(*l)
            ));
        }
    }
    out
}

/// Parsed row of a spectra CSV: `(mu, eigenvalue, trusted)`.
pub fn parse_spectra_csv(text: &str) -> Result<Vec<(f64, Complex64, bool)>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            if line != "mu,re_lambda,im_lambda,trusted" {
                return Err(Error::Config(format!("unexpected CSV header: {line}")));
            }
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::Config(format!("bad CSV row: {line}")));
        }
        let parse = |s: &str| -> Result<f64> {
            s.parse()
                .map_err(|e| Error::Config(format!("bad value in {line}: {e}")))
        };
        rows.push((
            parse(fields[0])?,
            Complex64::new(parse(fields[1])?, parse(fields[2])?),
            fields[3] == "true",
        ));
    }
    Ok(rows)
}

#[derive(Serialize)]
struct SpectrumJson {
    mu: f64,
    truncation: usize,
    /// Absent when the whole spectrum is certified (infinite band).
    #[serde(skip_serializing_if = "Option::is_none")]
    trusted_band: Option<f64>,
    eigenvalues: Vec<EigenvalueJson>,
}

#[derive(Serialize)]
struct EigenvalueJson {
    re: f64,
    im: f64,
    trusted: bool,
}

#[derive(Serialize)]
struct SpectraJson {
    schema_version: u32,
    results: Vec<SpectrumJson>,
}

/// JSON document for a μ sweep.
pub fn spectra_json(spectra: &[SpectrumResult]) -> String {
    let doc = SpectraJson {
        schema_version: SCHEMA_VERSION,
        results: spectra
            .iter()
            .map(|s| SpectrumJson {
                mu: s.mu,
                truncation: s.truncation,
                trusted_band: s.trusted_band.is_finite().then_some(s.trusted_band),
                eigenvalues: s
                    .eigenvalues
                    .iter()
                    .map(|l| EigenvalueJson {
                        re: l.re,
                        im: l.im,
                        trusted: s.is_trusted(*l),
                    })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("spectra serialize")
}

// ---------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------

#[derive(Serialize)]
struct VerificationJson<'a> {
    schema_version: u32,
    passed: bool,
    reports: &'a [VerificationReport],
}

/// Machine-readable verification summary with per-check margins.
pub fn verification_json(reports: &[VerificationReport]) -> String {
    let doc = VerificationJson {
        schema_version: SCHEMA_VERSION,
        passed: reports.iter().all(|r| r.passed()),
        reports,
    };
    serde_json::to_string_pretty(&doc).expect("verification report serializes")
}
