//! Verification suites: randomized checks of every closed-form identity
//! against independent oracles, aggregated into machine-readable reports.
//!
//! Each suite resolves its own calibrated default spectrum and trial count;
//! `--spectrum`/`--trials`/`--tol` override them globally. Default spectra
//! differ per suite because quadrature and truncation errors scale
//! exponentially with `a_max`; the calibrated values are:
//!
//! * `exp`, `group`, `cones`, `polar`, `semigroup`, `fourier`: `(1, 2.5)`
//! * `complex`: `(0.5, 1)` — keeps `e^{2·|Im s|·a_max}` tame for the
//!   double-integral oracle at `|s| ≤ 3`
//! * `fock`: `(1, 1.5)` — keeps boundary leakage of the cutoff below the
//!   `1e-6` homomorphism tolerance at `N = 30`

use crate::report::{Recorder, SuiteConfig, VerificationReport};
use crate::spectral::Spectrum;
use crate::{Error, Result};

mod complexified;
mod cones_suite;
mod exp;
mod fock_suite;
mod fourier;
mod group;
mod polar;
mod semigroup_suite;

pub const SUITE_NAMES: [&str; 9] = [
    "exp",
    "group",
    "complex",
    "cones",
    "polar",
    "semigroup",
    "fock",
    "fourier",
    "all",
];

fn suite_sampler_seed(cfg: &SuiteConfig, suite: &str) -> u64 {
    let idx = SUITE_NAMES
        .iter()
        .position(|&s| s == suite)
        .expect("known suite") as u64;
    cfg.seed ^ (idx + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn resolve_spectrum(cfg: &SuiteConfig, default_eigs: &[f64]) -> Spectrum {
    cfg.spectrum
        .clone()
        .unwrap_or_else(|| Spectrum::new(default_eigs.to_vec()).expect("valid default"))
}

struct SuiteRun {
    spectrum: Spectrum,
    sampler: crate::sample::Sampler,
    recorder: Recorder,
    started: std::time::Instant,
}

impl SuiteRun {
    fn start(cfg: &SuiteConfig, suite: &str, default_eigs: &[f64]) -> Self {
        SuiteRun {
            spectrum: resolve_spectrum(cfg, default_eigs),
            sampler: crate::sample::Sampler::new(suite_sampler_seed(cfg, suite)),
            recorder: Recorder::new(cfg.tol),
            started: std::time::Instant::now(),
        }
    }

    fn finish(self, suite: &str, cfg: &SuiteConfig, truncation: Option<usize>) -> VerificationReport {
        let wall_ms = self.started.elapsed().as_millis() as u64;
        self.recorder
            .finish(suite, cfg.seed, &self.spectrum, truncation, wall_ms)
    }
}

/// Closure evidence for a single cone; backs the `semigroup-verify`
/// subcommand.
pub fn run_closure_suite(cfg: &SuiteConfig, d: crate::cones::ConeD) -> Result<VerificationReport> {
    semigroup_suite::run_closure(cfg, d)
}

/// Runs one suite (or `all`) and aggregates the result.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<VerificationReport> {
    match name {
        "exp" => exp::run(cfg),
        "group" => group::run(cfg),
        "complex" => complexified::run(cfg),
        "cones" => cones_suite::run(cfg),
        "polar" => polar::run(cfg),
        "semigroup" => semigroup_suite::run(cfg),
        "fock" => fock_suite::run(cfg),
        "fourier" => fourier::run(cfg),
        "all" => run_all(cfg),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

fn run_all(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = std::time::Instant::now();
    let mut trials = 0;
    let mut tolerance = 0.0f64;
    let mut max_abs_err = 0.0f64;
    let mut failures = Vec::new();
    let mut executed = Vec::new();
    let mut spectrum_echo = Vec::new();
    let mut truncation = None;
    for name in SUITE_NAMES.iter().take(SUITE_NAMES.len() - 1) {
        let sub = run_suite(name, cfg)?;
        trials += sub.trials;
        tolerance = tolerance.max(sub.tolerance);
        max_abs_err = max_abs_err.max(sub.max_abs_err);
        executed.extend(sub.executed.iter().map(|id| format!("{name}:{id}")));
        for mut f in sub.failures {
            f.case_id = format!("{name}:{}", f.case_id);
            failures.push(f);
        }
        if *name == "fock" {
            truncation = sub.truncation;
        }
        spectrum_echo = sub.spectrum;
    }
    failures.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    Ok(VerificationReport {
        suite: "all".to_string(),
        trials,
        tolerance,
        max_abs_err,
        passed: failures.is_empty(),
        failures,
        seed: cfg.seed,
        spectrum: cfg
            .spectrum
            .as_ref()
            .map(|s| s.eigs().to_vec())
            .unwrap_or(spectrum_echo),
        truncation,
        wall_ms: started.elapsed().as_millis() as u64,
        executed,
    })
}
