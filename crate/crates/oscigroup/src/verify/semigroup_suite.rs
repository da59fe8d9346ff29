//! Suite `semigroup`: closure evidence for `S_d` under multiplication and
//! monotonicity of the barrier along right-translated one-parameter curves.

use serde_json::json;

use crate::cones::{ConeD, ConeParameter};
use crate::report::{SuiteConfig, VerificationReport};
use crate::semigroup::{curve_monotone_check, mul_s, polar_compose, sd_membership, in_sd};
use crate::Result;

use super::SuiteRun;

const CURVE_STEPS: usize = 24;

pub(super) fn run(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut run = SuiteRun::start(cfg, "semigroup", &[1.0, 2.5]);
    let trials = cfg.trials_or(200);
    let spec = run.spectrum.clone();

    let ds = [
        ConeD::Finite(-1.0),
        ConeD::Finite(0.0),
        ConeD::Finite(1.0),
        ConeD::Infinite,
    ];

    // closure: products of S_d elements stay in S_d (margin-aware)
    for d in ds {
        closure_checks(&mut run, d, trials)?;
    }

    // every S_A element lies in S_∞
    let inf = ConeParameter::positive(ConeD::Infinite);
    for i in 0..trials {
        let g = run.sampler.group_element(&spec);
        let w = run
            .sampler
            .polar_part(&spec, 3.0, 0.1, 3.0);
        let e = polar_compose(&spec, &g, &w)?;
        let member = in_sd(&spec, &e, &inf)?;
        run.recorder.require(
            format!("s_infinity_contains_sa/{i:04}"),
            member,
            1.0,
            || json!({"g": g, "w": w}),
            || json!(true),
            || json!(member),
        );
    }

    // barrier monotonicity along c(τ) = exp_ℂ(ix)·exp_ℂ(τ·iy)
    for i in 0..100.min(trials) {
        let d = [ConeD::Finite(-1.0), ConeD::Finite(0.0), ConeD::Finite(1.0)][i % 3];
        let cone = ConeParameter::positive(d);
        let x = run.sampler.cone_point(&spec, &cone, 1e-3);
        let y = run.sampler.cone_point(&spec, &cone, 1e-3);
        let values = curve_monotone_check(&spec, &x, &y, &cone, CURVE_STEPS)?;
        let worst_increase = values
            .windows(2)
            .map(|p| p[1] - p[0])
            .fold(0.0f64, f64::max);
        run.recorder.check(
            format!("curve_monotone_d_{d}/{i:04}"),
            worst_increase.max(0.0),
            1e-9,
            || json!({"x": x, "y": y, "d": d.to_string()}),
            || json!("nonincreasing barrier"),
            || json!({"values": values, "worst_increase": worst_increase}),
        );
    }

    Ok(run.finish("semigroup", cfg, None))
}

/// Closure evidence for a single cone (the `semigroup-verify` subcommand).
pub(super) fn run_closure(cfg: &SuiteConfig, d: ConeD) -> Result<VerificationReport> {
    let mut run = SuiteRun::start(cfg, "semigroup", &[1.0, 2.5]);
    closure_checks(&mut run, d, cfg.trials_or(200))?;
    Ok(run.finish("semigroup", cfg, None))
}

fn closure_checks(run: &mut SuiteRun, d: ConeD, trials: usize) -> Result<()> {
    let spec = run.spectrum.clone();
    let cone = ConeParameter::positive(d);
    for i in 0..trials {
        let g1 = run.sampler.group_element(&spec);
        let w1 = run.sampler.cone_point(&spec, &cone, 1e-6);
        let g2 = run.sampler.group_element(&spec);
        let w2 = run.sampler.cone_point(&spec, &cone, 1e-6);
        let product = mul_s(
            &spec,
            &polar_compose(&spec, &g1, &w1)?,
            &polar_compose(&spec, &g2, &w2)?,
        );
        let query = sd_membership(&spec, &product, &cone)?;
        run.recorder.check(
            format!("closure_d_{d}/{i:04}"),
            (-query.margin).max(0.0),
            1e-12,
            || json!({"g1": g1, "w1": w1, "g2": g2, "w2": w2, "d": d.to_string()}),
            || json!("margin > -1e-12"),
            || json!({"margin": query.margin, "member": query.member}),
        );
    }
    Ok(())
}
