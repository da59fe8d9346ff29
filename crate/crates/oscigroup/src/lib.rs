//! Finite-rank standard oscillator groups and their complex semigroups.
//!
//! An oscillator group is a semidirect product `Heis(V, ω) ⋊ ℝ` of a
//! Heisenberg group with a one-parameter group of symplectomorphisms. The
//! *standard* ones are built from a positive injective operator `A` via
//! `ω_A(x,y) = Im⟨Ax,y⟩` and `γ(t) = e^{itA}`. At finite rank everything is
//! diagonal in the eigenbasis of `A`, so the whole structure — group law,
//! exponential map, adjoint/coadjoint actions, the complexified group, its
//! open subsemigroup of elements with `Im s > 0`, the polar decomposition,
//! the invariant-cone family `W_d`, and the truncated bosonic Fock
//! representations — reduces to per-mode scalar calculus. This crate realises
//! all of it numerically and ships a verification harness that checks the
//! closed-form identities against independent oracles (quadrature, finite
//! differences, series expansions, brute-force eigenvalue computations).
//!
//! Modules mirror the mathematical layers:
//!
//! * [`spectral`] — the spectrum of `A`, scalar holomorphic kernels and their
//!   functional calculus, seminorms, the Fourier-transform oracle.
//! * [`group_real`] — arithmetic of `G_A` and `g_A`.
//! * [`group_complex`] — the complexification `G_{A,ℂ}` with two-unit
//!   bookkeeping (internal `i` vs. external `ε`).
//! * [`cones`] — invariant cones `W_d`, the defining function `f_d`, the
//!   Cartan projection `F`, barrier functions `h_d`.
//! * [`semigroup`] — the open semigroup `S_A`, polar decomposition `ψ/ψ⁻¹`,
//!   involution, closure evidence, the absolute value `α_a`.
//! * [`fock`] — truncated bosonic Fock space, Weyl operators, the derived
//!   representation, the holomorphic extension and its norm law.
//! * [`report`] / [`verify`] — machine-readable verification suites.
//!
//! Run `cargo run -- verify --suite all` for the full check, or see the
//! `examples/` directory for one runnable walkthrough per capability.

pub mod cones;
pub mod fock;
pub mod group_complex;
pub mod group_real;
pub mod report;
pub mod sample;
pub mod semigroup;
pub mod spectral;
pub mod verify;

use thiserror::Error;

/// Errors surfaced by the library.
///
/// Domain violations (evaluating a kernel at a pole, projecting with `s = 0`,
/// decomposing an element outside the semigroup) are reported as values; index
/// or length mismatches are programmer errors and panic.
#[derive(Debug, Error)]
pub enum Error {
    /// Kernel argument within `1e-12` of a non-removable singularity `πik`.
    #[error("singular kernel argument: {z} is within 1e-12 of πi·{k}")]
    SingularArgument { z: num_complex::Complex64, k: i64 },

    /// A spectrum eigenvalue was zero, negative or non-finite.
    #[error("invalid spectrum: eigenvalue {value} at index {index} (must be finite and > 0)")]
    InvalidSpectrum { index: usize, value: f64 },

    /// Empty spectrum.
    #[error("invalid spectrum: need at least one eigenvalue")]
    EmptySpectrum,

    /// An operation required `s > 0` (or `s ≠ 0`) and the input violated it.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input lies outside the open cone required by the operation.
    #[error("not in cone: margin {margin}")]
    NotInCone { margin: f64 },

    /// The element is not in the semigroup `S_A` (needs `Im s > 0`).
    #[error("not in S_A: Im(s) = {im_s} must exceed 1e-14")]
    NotInSemigroup { im_s: f64 },

    /// Polar decomposition produced realness residuals above the hard bound.
    #[error("polar decomposition residual {residual} exceeds 1e-7")]
    DecompositionResidual { residual: f64 },

    /// The logarithmic-derivative base point has a nonzero vector slot.
    #[error("unsupported direction: logarithmic derivative requires a Cartan base point")]
    UnsupportedDirection,

    /// Zero vector where a state was required.
    #[error("zero vector")]
    ZeroVector,

    /// Unknown verification suite name.
    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    /// Malformed JSON input.
    #[error("invalid JSON: {0}")]
    InvalidJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
