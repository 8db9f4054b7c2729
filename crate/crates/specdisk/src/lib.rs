//! Gershgorin-disk spectral bounds for quasi-periodic eigenvalue problems.
//!
//! This crate studies the spectral stability of periodic traveling waves
//! of dispersive Hamiltonian PDEs (generalized KdV, Kawahara, BBM,
//! Benjamin–Ono). For each Floquet exponent μ it
//!
//! * builds the Gershgorin disks that are guaranteed to contain the
//!   eigenvalues of the linearized operator ([`disks`]),
//! * computes the actual spectrum of the Fourier-truncated operator —
//!   Hill's method — with a dense complex eigensolver ([`hill`]), and
//! * verifies the containment, per-component counting, symmetry, and
//!   purely-imaginary certificates numerically ([`verify`]).
//!
//! The [`potentials`] module constructs the explicit traveling-wave
//! potentials (cnoidal and rational profiles through Jacobi elliptic
//! functions), and [`cli`] drives everything from a JSON run
//! configuration, exporting CSV/JSON tables and SVG figures.
//!
//! Everything is pure and deterministic: the same inputs produce
//! byte-identical outputs.

pub mod cli;
pub mod config;
pub mod dispersion;
pub mod disks;
mod dd;
mod eigen;
pub mod elliptic;
pub mod error;
pub mod export;
mod fourier;
pub mod hill;
pub mod potentials;
pub mod svg;
pub mod verify;

pub use dispersion::{DispersionRelation, EquationFamily, MeanPolicy, SpectralProblem};
pub use disks::{ComponentReport, GershgorinDisk, TailBound};
pub use error::{Error, Result};
pub use hill::{HillMatrix, SpectrumResult};
pub use potentials::{PeriodicPotential, WaveFamilyParams};
pub use verify::{Check, VerificationReport};
