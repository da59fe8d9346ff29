//! Suite `group`: group axioms, adjoint action against the finite-difference
//! conjugation oracle, coadjoint duality, bracket axioms.

use serde_json::json;

use crate::group_real::{ad, bracket, coad, exp, inv, mul, AlgebraElement};
use crate::report::{SuiteConfig, VerificationReport};
use crate::Result;

use super::SuiteRun;

/// Central step for the finite-difference conjugation oracle.
const FD_STEP: f64 = 1e-5;

pub(super) fn run(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut run = SuiteRun::start(cfg, "group", &[1.0, 2.5]);
    let trials = cfg.trials_or(1000);
    let spec = run.spectrum.clone();

    for i in 0..trials {
        let g = run.sampler.group_element(&spec);
        let h = run.sampler.group_element(&spec);
        let k = run.sampler.group_element(&spec);
        let assoc = mul(&spec, &mul(&spec, &g, &h), &k)
            .max_abs_diff(&mul(&spec, &g, &mul(&spec, &h, &k)));
        run.recorder.check(
            format!("associativity/{i:04}"),
            assoc,
            1e-12,
            || json!({"g": g, "h": h, "k": k}),
            || json!(0.0),
            || json!(assoc),
        );

        let x = run.sampler.algebra_element(&spec, 3.0);
        let hom = ad(&spec, &mul(&spec, &g, &h), &x)
            .max_abs_diff(&ad(&spec, &g, &ad(&spec, &h, &x)));
        run.recorder.check(
            format!("ad_homomorphism/{i:04}"),
            hom,
            1e-11,
            || json!({"g": g, "h": h, "x": x}),
            || json!(0.0),
            || json!(hom),
        );

        let lam = run.sampler.coalgebra_element(&spec);
        let duality =
            (coad(&spec, &g, &lam).pair(&x) - lam.pair(&ad(&spec, &inv(&spec, &g), &x))).abs();
        run.recorder.check(
            format!("coad_duality/{i:04}"),
            duality,
            1e-11,
            || json!({"g": g, "lambda": lam, "x": x}),
            || json!(0.0),
            || json!(duality),
        );
        let tstar_drift = (coad(&spec, &g, &lam).tstar - lam.tstar).abs();
        run.recorder.check(
            format!("coad_tstar_fixed/{i:04}"),
            tstar_drift,
            0.0,
            || json!({"g": g, "lambda": lam}),
            || json!(lam.tstar),
            || json!(coad(&spec, &g, &lam).tstar),
        );

        let y = run.sampler.algebra_element(&spec, 3.0);
        let z = run.sampler.algebra_element(&spec, 3.0);
        let jacobi = bracket(&spec, &x, &bracket(&spec, &y, &z))
            .add(&bracket(&spec, &y, &bracket(&spec, &z, &x)))
            .add(&bracket(&spec, &z, &bracket(&spec, &x, &y)))
            .max_abs_diff(&AlgebraElement::zero(&spec));
        run.recorder.check(
            format!("jacobi/{i:04}"),
            jacobi,
            1e-12,
            || json!({"x": x, "y": y, "z": z}),
            || json!(0.0),
            || json!(jacobi),
        );
    }

    // Ad vs. the finite-difference conjugation (d/dτ)|₀ g·exp(τX)·g⁻¹
    for i in 0..200.min(trials) {
        let g = run.sampler.group_element(&spec);
        let x = run.sampler.algebra_element(&spec, 2.0);
        let conj = |tau: f64| {
            let gexp = mul(&spec, &g, &exp(&spec, &x.scale(tau)));
            mul(&spec, &gexp, &inv(&spec, &g))
        };
        let (plus, minus) = (conj(FD_STEP), conj(-FD_STEP));
        let fd = AlgebraElement::new(
            (plus.t - minus.t) / (2.0 * FD_STEP),
            plus.x.sub(&minus.x).scale_re(1.0 / (2.0 * FD_STEP)),
            (plus.s - minus.s) / (2.0 * FD_STEP),
        );
        let err = ad(&spec, &g, &x).max_abs_diff(&fd);
        run.recorder.check(
            format!("ad_vs_finite_difference/{i:04}"),
            err,
            1e-6,
            || json!({"g": g, "x": x}),
            || serde_json::to_value(&fd).unwrap(),
            || serde_json::to_value(ad(&spec, &g, &x)).unwrap(),
        );
    }

    Ok(run.finish("group", cfg, None))
}
