//! Core library for a driven, dissipative pair of coupled optical resonators
//! with a two-level atom attached to the first resonator.
//!
//! The crate provides:
//!
//! - dense complex linear algebra sized for small Hilbert spaces
//!   ([`linalg`]), including a general eigensolver and an LU solver;
//! - operator construction on a fixed subsystem ordering
//!   (resonator 1, resonator 2, atom) with Kronecker embedding and
//!   partial traces ([`hilbert`]);
//! - rotating-frame, effective non-Hermitian, and Jaynes-Cummings
//!   Hamiltonian builders ([`model`]);
//! - Liouvillian assembly, steady states, and fixed-step time evolution
//!   of the master equation ([`lindblad`]);
//! - closed-form weak-drive amplitudes, resonance conditions, and optimal
//!   couplings ([`analytic`]);
//! - bipartite/tripartite entanglement measures: Wootters concurrence,
//!   one-vs-rest concurrences, and the concurrence fill ([`entanglement`]);
//! - a deterministic parameter-sweep engine with figure presets ([`sweep`]).
//!
//! All rates and detunings are dimensionless, expressed in units of the
//! resonator decay rate kappa. The crate is `no_std` (alloc required); IO,
//! file formats, and the CLI live in the companion `trion-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analytic;
pub mod entanglement;
pub mod error;
pub mod hilbert;
pub mod linalg;
pub mod lindblad;
pub mod model;
pub mod sweep;

pub use error::Error;
pub use linalg::matrix::{ComplexMatrix, C64};

/// Relative tolerance treating an eigenvalue as zero, fixed crate-wide.
pub const EIG_ZERO_TOL: f64 = 1e-10;
