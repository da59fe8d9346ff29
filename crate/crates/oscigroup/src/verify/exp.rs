//! Suite `exp`: scalar kernels and the exponential map of `G_A` against the
//! double-integral quadrature oracle.

use num_complex::Complex64;
use serde_json::json;

use crate::group_real::{exp, exp_quadrature, mul};
use crate::report::{SuiteConfig, VerificationReport};
use crate::sample::boxes;
use crate::spectral::{kernel_b, kernel_f, kernel_g, KERNEL_SERIES_RADIUS};
use crate::Result;

use super::SuiteRun;

/// Simpson step count for the oracle; calibrated so the quadrature error
/// stays an order under the 1e-9 comparison tolerance on the sampling box.
pub const EXP_QUAD_STEPS: usize = 800;

pub(super) fn run(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut run = SuiteRun::start(cfg, "exp", &[1.0, 2.5]);
    let trials = cfg.trials_or(100);

    kernel_checks(&mut run, 10 * trials);
    straddle_checks(&mut run);
    calculus_checks(&mut run, trials);
    exp_vs_quadrature(&mut run, trials)?;
    one_parameter_law(&mut run, trials.clamp(3, 10))?;

    Ok(run.finish("exp", cfg, None))
}

fn kernel_checks(run: &mut SuiteRun, count: usize) {
    for i in 0..count {
        let mut z = run.sampler.complex_box(3.0);
        if z.re.abs() <= 1e-3 {
            z.re += 2e-3_f64.copysign(z.re + f64::MIN_POSITIVE);
        }
        let f_even = (kernel_f(-z).unwrap() - kernel_f(z).unwrap()).norm();
        run.recorder.check(
            format!("kernel_f_even/{i:04}"),
            f_even,
            1e-13,
            || json!({"z": [z.re, z.im]}),
            || json!(0.0),
            || json!(f_even),
        );
        let g_odd = (kernel_g(-z).unwrap() + kernel_g(z).unwrap()).norm();
        run.recorder.check(
            format!("kernel_g_odd/{i:04}"),
            g_odd,
            1e-13,
            || json!({"z": [z.re, z.im]}),
            || json!(0.0),
            || json!(g_odd),
        );
        let lhs = Complex64::i() * kernel_g(z).unwrap() * (z.exp() - (-z).exp());
        let rhs = z.exp() + (-z).exp() - 2.0;
        run.recorder.check(
            format!("kernel_g_identity/{i:04}"),
            (lhs - rhs).norm(),
            1e-12,
            || json!({"z": [z.re, z.im]}),
            || json!([rhs.re, rhs.im]),
            || json!([lhs.re, lhs.im]),
        );
    }
}

fn straddle_checks(run: &mut SuiteRun) {
    // series branch agrees with the closed forms at the switch radius: no
    // evaluation cliff
    for k in 0..64 {
        let theta = k as f64 * std::f64::consts::TAU / 64.0;
        let z = Complex64::from_polar(KERNEL_SERIES_RADIUS * 0.999, theta);
        let f_direct = 2.0 * z / (z.exp() - (-z).exp());
        let g_direct = (z.exp() + (-z).exp() - 2.0) / (Complex64::i() * (z.exp() - (-z).exp()));
        let b_direct = (z.exp() - 1.0) / z;
        for (name, df) in [
            ("f", (kernel_f(z).unwrap() - f_direct).norm()),
            ("g", (kernel_g(z).unwrap() - g_direct).norm()),
            ("b", (kernel_b(z) - b_direct).norm()),
        ] {
            run.recorder.check(
                format!("straddle_{name}/{k:04}"),
                df,
                1e-12,
                || json!({"theta": theta}),
                || json!(0.0),
                || json!(df),
            );
        }
    }
}

fn calculus_checks(run: &mut SuiteRun, trials: usize) {
    let spec = run.spectrum.clone();
    for i in 0..trials {
        let v = run.sampler.mode_vector(&spec, 2.0);
        let s = Complex64::new(run.sampler.uniform(-5.0, 5.0), 0.0);
        let roundtrip = spec
            .apply_f(s, &spec.apply_f_inv(s, &v).unwrap())
            .unwrap()
            .max_abs_diff(&v);
        run.recorder.check(
            format!("f_inverse_roundtrip/{i:04}"),
            roundtrip,
            1e-12,
            || json!({"s": s.re, "v": v}),
            || json!(0.0),
            || json!(roundtrip),
        );
        let t = run.sampler.uniform(-3.0, 3.0);
        let commute = spec
            .apply_f(s, &spec.apply_gamma(t, &v))
            .unwrap()
            .max_abs_diff(&spec.apply_gamma(t, &spec.apply_f(s, &v).unwrap()));
        run.recorder.check(
            format!("f_gamma_commute/{i:04}"),
            commute,
            1e-13,
            || json!({"s": s.re, "t": t, "v": v}),
            || json!(0.0),
            || json!(commute),
        );
    }
}

fn exp_vs_quadrature(run: &mut SuiteRun, trials: usize) -> Result<()> {
    let spec = run.spectrum.clone();
    for i in 0..trials {
        let x = run.sampler.algebra_element(&spec, boxes::EXP_X_NORM);
        let closed = exp(&spec, &x);
        let quad = exp_quadrature(&spec, &x, EXP_QUAD_STEPS)?;
        let err = closed.max_abs_diff(&quad);
        run.recorder.check(
            format!("exp_vs_quadrature/{i:04}"),
            err,
            1e-9,
            || serde_json::to_value(&x).unwrap(),
            || serde_json::to_value(&quad).unwrap(),
            || serde_json::to_value(&closed).unwrap(),
        );
    }
    Ok(())
}

fn one_parameter_law(run: &mut SuiteRun, trials: usize) -> Result<()> {
    let spec = run.spectrum.clone();
    for i in 0..trials {
        let x = run.sampler.algebra_element(&spec, boxes::EXP_X_NORM);
        let (k1, k2) = (run.sampler.uniform(-1.0, 1.0), run.sampler.uniform(-1.0, 1.0));
        let lhs = mul(
            &spec,
            &exp_quadrature(&spec, &x.scale(k1), EXP_QUAD_STEPS)?,
            &exp_quadrature(&spec, &x.scale(k2), EXP_QUAD_STEPS)?,
        );
        let rhs = exp_quadrature(&spec, &x.scale(k1 + k2), EXP_QUAD_STEPS)?;
        let err = lhs.max_abs_diff(&rhs);
        run.recorder.check(
            format!("one_parameter_law/{i:04}"),
            err,
            1e-8,
            || json!({"x": x, "k1": k1, "k2": k2}),
            || serde_json::to_value(&rhs).unwrap(),
            || serde_json::to_value(&lhs).unwrap(),
        );
    }
    Ok(())
}
