//! Suite `polar`: the `θ` factorisation identity, both polar-decomposition
//! roundtrips with realness residuals, the semigroup involution, and the
//! absolute value `α_a`.

use num_complex::Complex64;
use serde_json::json;

use crate::group_complex::{exp_c, inv_c, mul_c, ComplexAlgebraElement, ComplexGroupElement, CVector};
use crate::group_real::ad;
use crate::report::{SuiteConfig, VerificationReport};
use crate::sample::boxes;
use crate::semigroup::{
    alpha_a, mul_s, polar_compose, polar_decompose, polar_decompose_full, star_s, theta,
    SemigroupElement, RESIDUAL_SOFT,
};
use crate::Result;

use super::SuiteRun;

pub(super) fn run(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut run = SuiteRun::start(cfg, "polar", &[1.0, 2.5]);
    let trials = cfg.trials_or(200);
    let spec = run.spectrum.clone();

    // θ factorisation: exp_ℂ(0,ix,is)·exp_ℂ(0,0,−is) = θ(f_s(A)⁻¹x, s)⁻¹
    for i in 0..trials {
        let x = run.sampler.mode_vector(&spec, boxes::X_NORM);
        let s = run.sampler.uniform(-3.0, 3.0);
        let lhs = mul_c(
            &spec,
            &exp_c(
                &spec,
                &ComplexAlgebraElement {
                    z: Complex64::ZERO,
                    v: CVector::embed_imag(&x),
                    s: Complex64::new(0.0, s),
                },
            ),
            &exp_c(
                &spec,
                &ComplexAlgebraElement {
                    z: Complex64::ZERO,
                    v: CVector::zeros(spec.n()),
                    s: Complex64::new(0.0, -s),
                },
            ),
        );
        let finv = spec.apply_f_inv(Complex64::new(s, 0.0), &x).unwrap();
        let rhs = inv_c(&spec, &theta(&spec, &finv, s));
        let err = lhs.max_abs_diff(&rhs);
        run.recorder.check(
            format!("theta_identity/{i:04}"),
            err,
            1e-10,
            || json!({"x": x, "s": s}),
            || serde_json::to_value(&rhs).unwrap(),
            || serde_json::to_value(&lhs).unwrap(),
        );
    }

    // ψ⁻¹∘ψ = id together with the realness residuals of the chain
    for i in 0..trials {
        let g = run.sampler.group_element(&spec);
        let w = run
            .sampler
            .polar_part(&spec, boxes::X_NORM, boxes::POLAR_S_LO, boxes::POLAR_S_HI);
        let composed = polar_compose(&spec, &g, &w)?;
        let (polar, residuals) = polar_decompose_full(&spec, &composed)?;
        let err = polar.g.max_abs_diff(&g).max(polar.w.max_abs_diff(&w));
        run.recorder.check(
            format!("polar_roundtrip_gw/{i:04}"),
            err,
            1e-8,
            || json!({"g": g, "w": w}),
            || json!({"g": g, "w": w}),
            || serde_json::to_value(&polar).unwrap(),
        );
        run.recorder.check(
            format!("polar_realness_residual/{i:04}"),
            residuals.max(),
            RESIDUAL_SOFT,
            || json!({"g": g, "w": w}),
            || json!(0.0),
            || serde_json::to_value(residuals).unwrap(),
        );
        let im_s = (composed.as_complex().s.im - w.s).abs();
        run.recorder.check(
            format!("polar_im_s_exact/{i:04}"),
            im_s,
            0.0,
            || json!({"g": g, "w": w}),
            || json!(w.s),
            || json!(composed.as_complex().s.im),
        );
    }

    // ψ∘ψ⁻¹ = id on raw S_A elements
    for i in 0..trials {
        let elem = SemigroupElement::new(ComplexGroupElement {
            z: run.sampler.complex_box(boxes::T),
            v: run.sampler.cvector(&spec, boxes::X_NORM),
            s: Complex64::new(
                run.sampler.uniform(-3.0, 3.0),
                run.sampler.uniform(boxes::POLAR_S_LO, boxes::POLAR_S_HI),
            ),
        })?;
        let polar = polar_decompose(&spec, &elem)?;
        let recomposed = polar_compose(&spec, &polar.g, &polar.w)?;
        let err = recomposed.max_abs_diff(&elem);
        run.recorder.check(
            format!("polar_roundtrip_sa/{i:04}"),
            err,
            1e-8,
            || serde_json::to_value(elem.as_complex()).unwrap(),
            || serde_json::to_value(elem.as_complex()).unwrap(),
            || serde_json::to_value(recomposed.as_complex()).unwrap(),
        );
    }

    involution_checks(&mut run, trials)?;
    alpha_checks(&mut run, trials)?;

    Ok(run.finish("polar", cfg, None))
}

fn involution_checks(run: &mut SuiteRun, trials: usize) -> Result<()> {
    let spec = run.spectrum.clone();
    for i in 0..trials {
        let g = run.sampler.group_element(&spec);
        let w = run.sampler.polar_part(&spec, 2.0, 0.2, 2.5);
        let e = polar_compose(&spec, &g, &w)?;

        let via_polar = star_s(&spec, &e)?;
        let ambient = crate::group_complex::star(&spec, e.as_complex());
        let agree = via_polar.as_complex().max_abs_diff(&ambient);
        run.recorder.check(
            format!("star_s_matches_ambient/{i:04}"),
            agree,
            1e-11,
            || json!({"g": g, "w": w}),
            || serde_json::to_value(&ambient).unwrap(),
            || serde_json::to_value(via_polar.as_complex()).unwrap(),
        );

        let invol = star_s(&spec, &via_polar)?.max_abs_diff(&e);
        run.recorder.check(
            format!("star_s_involutive/{i:04}"),
            invol,
            1e-10,
            || json!({"g": g, "w": w}),
            || json!(0.0),
            || json!(invol),
        );

        // polar part of the star is Ad(g)·w
        let starred_polar = polar_decompose(&spec, &via_polar)?;
        let moved = ad(&spec, &g, &w);
        let polar_err = starred_polar.w.max_abs_diff(&moved);
        run.recorder.check(
            format!("star_s_polar_part/{i:04}"),
            polar_err,
            1e-8,
            || json!({"g": g, "w": w}),
            || serde_json::to_value(&moved).unwrap(),
            || serde_json::to_value(&starred_polar.w).unwrap(),
        );

        // the product's polar s adds, and decomposition amplifies rounding by
        // sinh(s·a_max)/(s·a_max); sample so the product stays conditioned
        let e_small = polar_compose(&spec, &g, &run.sampler.polar_part(&spec, 2.0, 0.2, 1.2))?;
        let g2 = run.sampler.group_element(&spec);
        let w2 = run.sampler.polar_part(&spec, 2.0, 0.2, 1.2);
        let f = polar_compose(&spec, &g2, &w2)?;
        let anti = star_s(&spec, &mul_s(&spec, &e_small, &f))?
            .max_abs_diff(&mul_s(&spec, &star_s(&spec, &f)?, &star_s(&spec, &e_small)?));
        run.recorder.check(
            format!("star_s_antiautomorphism/{i:04}"),
            anti,
            1e-10,
            || json!({"e": e_small.as_complex(), "f": f.as_complex()}),
            || json!(0.0),
            || json!(anti),
        );
    }
    Ok(())
}

fn alpha_checks(run: &mut SuiteRun, trials: usize) -> Result<()> {
    let spec = run.spectrum.clone();
    for i in 0..trials {
        let g = run.sampler.group_element(&spec);
        let w = run.sampler.polar_part(&spec, 1.5, 0.5, 2.0);
        let e = polar_compose(&spec, &g, &w)?;
        let g2 = run.sampler.group_element(&spec);
        let w2 = run.sampler.polar_part(&spec, 1.5, 0.5, 2.0);
        let f = polar_compose(&spec, &g2, &w2)?;

        let (ae, af) = (alpha_a(&spec, &e, 0.0)?, alpha_a(&spec, &f, 0.0)?);
        let aef = alpha_a(&spec, &mul_s(&spec, &e, &f), 0.0)?;
        let submult = ((aef - ae * af) / (ae * af)).max(0.0);
        run.recorder.check(
            format!("alpha_submultiplicative/{i:04}"),
            submult,
            1e-9,
            || json!({"e": e.as_complex(), "f": f.as_complex()}),
            || json!(ae * af),
            || json!(aef),
        );

        let astar = alpha_a(&spec, &star_s(&spec, &e)?, 0.0)?;
        let star_inv = ((astar - ae) / ae).abs();
        run.recorder.check(
            format!("alpha_star_invariant/{i:04}"),
            star_inv,
            1e-10,
            || json!({"e": e.as_complex()}),
            || json!(ae),
            || json!(astar),
        );
    }
    Ok(())
}
