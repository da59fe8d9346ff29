//! Suite `fourier`: the Fourier-transform identity for the kernel `f̃`,
//! checked by composite-Simpson quadrature of `∫ f̂(t)e^{ixt} dt` on a grid.

use serde_json::json;

use crate::report::{SuiteConfig, VerificationReport};
use crate::spectral::{fourier_fhat, fourier_fhat_check};
use crate::Result;

use super::SuiteRun;

/// Truncation half-width; the tail beyond 40 is ~1e-54.
pub const FOURIER_T: f64 = 40.0;

/// Step count giving quadrature error well under the 1e-8 tolerance.
pub const FOURIER_STEPS: usize = 80_000;

pub(super) fn run(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut run = SuiteRun::start(cfg, "fourier", &[1.0, 2.5]);

    // f̂(0) = π/4
    let at_zero = (fourier_fhat(0.0) - std::f64::consts::FRAC_PI_4).abs();
    run.recorder.check(
        "fhat_at_zero/0000".to_string(),
        at_zero,
        1e-14,
        || json!({"t": 0.0}),
        || json!(std::f64::consts::FRAC_PI_4),
        || json!(fourier_fhat(0.0)),
    );

    // grid x ∈ {−3, −2.5, …, 3}: quadrature reproduces f̃(x)
    for k in 0..=12 {
        let x = -3.0 + 0.5 * k as f64;
        let (quad, exact) = fourier_fhat_check(x, FOURIER_T, FOURIER_STEPS)?;
        let err = (quad - exact).abs();
        run.recorder.check(
            format!("fourier_identity/{k:04}"),
            err,
            1e-8,
            || json!({"x": x, "T": FOURIER_T, "steps": FOURIER_STEPS}),
            || json!(exact),
            || json!(quad),
        );
    }

    Ok(run.finish("fourier", cfg, None))
}
