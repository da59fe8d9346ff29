//! Suite `cones`: superadditivity defect of `f_d`, Ad-invariance of
//! membership, of the Cartan projection `F` and of the barrier `h_d`,
//! boundary blow-up, and cone axioms under scaling and convex combination.

use serde_json::json;

use crate::cones::{f_d, f_project, h_d, in_cone, membership, ConeD, ConeParameter};
use crate::group_real::AlgebraElement;
use crate::report::{SuiteConfig, VerificationReport};
use crate::Result;

use super::SuiteRun;

const FINITE_DS: [f64; 3] = [-1.0, 0.0, 1.0];

pub(super) fn run(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut run = SuiteRun::start(cfg, "cones", &[1.0, 2.5]);
    let trials = cfg.trials_or(1000);
    let spec = run.spectrum.clone();

    for i in 0..trials {
        let d = FINITE_DS[i % 3];
        let cone = ConeParameter::positive(ConeD::Finite(d));

        // superadditivity of f_d on W_d
        let a1 = run.sampler.cone_point(&spec, &cone, 1e-9);
        let a2 = run.sampler.cone_point(&spec, &cone, 1e-9);
        let defect = f_d(&a1.add(&a2), d).unwrap() - f_d(&a1, d).unwrap() - f_d(&a2, d).unwrap();
        run.recorder.check(
            format!("f_d_superadditive/{i:04}"),
            (-defect).max(0.0),
            1e-12,
            || json!({"a1": a1, "a2": a2, "d": d}),
            || json!(0.0),
            || json!(defect),
        );

        // membership is Ad-invariant away from the boundary
        let g = run.sampler.group_element(&spec);
        let x = sample_near_cone(&mut run, &spec, d);
        let cone_or_inf = if i % 4 == 3 {
            ConeParameter::positive(ConeD::Infinite)
        } else {
            cone
        };
        let before = in_cone(&x, &cone_or_inf);
        let after = in_cone(&crate::group_real::ad(&spec, &g, &x), &cone_or_inf);
        run.recorder.require(
            format!("membership_ad_invariant/{i:04}"),
            before == after,
            1.0,
            || json!({"g": g, "x": x, "d": cone_or_inf.d.to_string()}),
            || json!(before),
            || json!(after),
        );

        // F is Ad-invariant and compatible with the Cartan slice
        let y = run.sampler.polar_part(&spec, 3.0, 0.1, 3.0);
        let f_inv = f_project(&crate::group_real::ad(&spec, &g, &y))
            .unwrap()
            .max_abs_diff(&f_project(&y).unwrap());
        run.recorder.check(
            format!("f_project_ad_invariant/{i:04}"),
            f_inv,
            1e-11,
            || json!({"g": g, "y": y}),
            || json!(0.0),
            || json!(f_inv),
        );
        let full = membership(&x, &cone);
        let cartan = membership(&f_project(&x).unwrap(), &cone);
        let compatible =
            full.member == cartan.member || full.margin.abs().min(cartan.margin.abs()) <= 1e-12;
        run.recorder.require(
            format!("f_project_membership_compat/{i:04}"),
            compatible,
            (full.margin - cartan.margin).abs(),
            || json!({"x": x, "d": d}),
            || json!(full.member),
            || json!(cartan.member),
        );

        // barrier: Ad-invariance and monotonicity under cone addition.
        // The margin floor keeps 1/f_d well-conditioned: the invariance is
        // exact, but a margin of m amplifies rounding by 1/m².
        let w = run.sampler.cone_point(&spec, &cone, 0.1);
        let h_inv = (h_d(&crate::group_real::ad(&spec, &g, &w), &cone).unwrap()
            - h_d(&w, &cone).unwrap())
        .abs();
        run.recorder.check(
            format!("h_d_ad_invariant/{i:04}"),
            h_inv,
            1e-11,
            || json!({"g": g, "w": w, "d": d}),
            || json!(0.0),
            || json!(h_inv),
        );
        let wp = run.sampler.cone_point(&spec, &cone, 0.1);
        let increase = h_d(&w.add(&wp), &cone).unwrap() - h_d(&w, &cone).unwrap();
        run.recorder.check(
            format!("h_d_monotone/{i:04}"),
            increase.max(0.0),
            1e-12,
            || json!({"w": w, "wp": wp, "d": d}),
            || json!(0.0),
            || json!(increase),
        );

        // positive scaling and convex combinations stay in the cone
        let lambda = run.sampler.uniform(0.1, 10.0);
        run.recorder.require(
            format!("cone_scaling/{i:04}"),
            in_cone(&w.scale(lambda), &cone),
            1.0,
            || json!({"w": w, "lambda": lambda, "d": d}),
            || json!(true),
            || json!(in_cone(&w.scale(lambda), &cone)),
        );
        let theta = run.sampler.uniform(0.0, 1.0);
        let combo = w.scale(theta).add(&wp.scale(1.0 - theta));
        run.recorder.require(
            format!("cone_convex/{i:04}"),
            membership(&combo, &cone).margin > -1e-12,
            -membership(&combo, &cone).margin,
            || json!({"w": w, "wp": wp, "theta": theta, "d": d}),
            || json!(true),
            || json!(membership(&combo, &cone).member),
        );
    }

    boundary_blowup(&mut run);

    Ok(run.finish("cones", cfg, None))
}

/// Point with `s > 0` and `|f_d|` bounded away from zero, on either side of
/// the cone boundary.
fn sample_near_cone(run: &mut SuiteRun, spec: &crate::spectral::Spectrum, d: f64) -> AlgebraElement {
    loop {
        let s = run.sampler.uniform(0.2, 2.5);
        let x = run.sampler.mode_vector(spec, 2.0);
        let t = run.sampler.uniform(-4.0, 4.0) + x.norm_sqr() / (2.0 * s) - d * s;
        let elem = AlgebraElement::new(t, x, s);
        if f_d(&elem, d).unwrap().abs() > 1e-6 {
            return elem;
        }
    }
}

fn boundary_blowup(run: &mut SuiteRun) {
    let spec = run.spectrum.clone();
    for i in 0..10 {
        let d = FINITE_DS[i % 3];
        let cone = ConeParameter::positive(ConeD::Finite(d));
        let interior = run.sampler.cone_point(&spec, &cone, 0.5);
        // slide to the f_d = 0 face by lowering the central coordinate
        let boundary = AlgebraElement::new(
            interior.t - f_d(&interior, d).unwrap(),
            interior.x.clone(),
            interior.s,
        );
        let mut exceeded = false;
        for k in 0..60 {
            let lambda = 1.0 - 10f64.powf(-(k as f64) / 4.0);
            if lambda >= 1.0 - 1e-7 {
                break;
            }
            let point = interior.scale(1.0 - lambda).add(&boundary.scale(lambda));
            match h_d(&point, &cone) {
                Ok(value) if value > 1e6 => {
                    exceeded = true;
                    break;
                }
                Ok(_) => {}
                Err(_) => break,
            }
        }
        run.recorder.require(
            format!("h_d_boundary_blowup/{i:04}"),
            exceeded,
            1.0,
            || json!({"interior": interior, "boundary": boundary, "d": d}),
            || json!("h_d > 1e6 before lambda = 1 - 1e-7"),
            || json!(exceeded),
        );
    }
}
