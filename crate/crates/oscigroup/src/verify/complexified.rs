//! Suite `complex`: the complexified group law, `exp_ℂ` against the
//! double-integral oracle, the involution, the `B_{is}` kernel identity and
//! the seminorm growth bound.

use num_complex::Complex64;
use serde_json::json;

use crate::group_complex::{
    b_c, exp_c, exp_c_quadrature, gamma_c, inner_c, inv_c, log_derivative, mul_c, qn_seminorm_c,
    ComplexAlgebraElement, ComplexGroupElement, CVector,
};
use crate::group_real::{inv, mul};
use crate::report::{SuiteConfig, VerificationReport};
use crate::Result;

use super::SuiteRun;

/// Step count for the `exp_ℂ` oracle; the integrand grows like
/// `e^{2·|Im s|·a_max}`, so the default spectrum keeps `a_max = 1`.
pub const EXPC_QUAD_STEPS: usize = 800;

pub(super) fn run(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut run = SuiteRun::start(cfg, "complex", &[0.5, 1.0]);
    let trials = cfg.trials_or(1000);
    let spec = run.spectrum.clone();

    // exp_ℂ closed form vs the defining double integral, |s| ≤ 3
    for i in 0..trials.min(100) {
        let x = run.sampler.complex_algebra(&spec, 1.0, 3.0);
        let closed = exp_c(&spec, &x);
        let quad = exp_c_quadrature(&spec, &x, EXPC_QUAD_STEPS)?;
        let err = closed.max_abs_diff(&quad);
        run.recorder.check(
            format!("expc_vs_quadrature/{i:04}"),
            err,
            1e-8,
            || serde_json::to_value(&x).unwrap(),
            || serde_json::to_value(&quad).unwrap(),
            || serde_json::to_value(&closed).unwrap(),
        );
    }

    // B_{is}(ix) = g_s(A)f_s(A)⁻¹x + i·f_s(A)⁻¹x and skew-symmetry of g_s f_s⁻¹
    for i in 0..trials.min(200) {
        let x = run.sampler.mode_vector(&spec, 2.0);
        let s = run.sampler.uniform(-3.0, 3.0);
        let s_re = Complex64::new(s, 0.0);
        let lhs = b_c(&spec, Complex64::new(0.0, s), &CVector::embed_imag(&x));
        let finv = spec.apply_f_inv(s_re, &x).unwrap();
        let rhs = CVector { p: spec.apply_g(s_re, &finv).unwrap(), q: finv };
        let err = lhs.max_abs_diff(&rhs);
        run.recorder.check(
            format!("b_kernel_identity/{i:04}"),
            err,
            1e-11,
            || json!({"x": x, "s": s}),
            || serde_json::to_value(&rhs).unwrap(),
            || serde_json::to_value(&lhs).unwrap(),
        );

        let y = run.sampler.mode_vector(&spec, 2.0);
        let gx = spec.apply_g(s_re, &spec.apply_f_inv(s_re, &x).unwrap()).unwrap();
        let gy = spec.apply_g(s_re, &spec.apply_f_inv(s_re, &y).unwrap()).unwrap();
        let skew = (gx.b_inner(&y) + x.b_inner(&gy)).abs();
        run.recorder.check(
            format!("gf_inv_skew/{i:04}"),
            skew,
            1e-12,
            || json!({"x": x, "y": y, "s": s}),
            || json!(0.0),
            || json!(skew),
        );
    }

    algebraic_identities(&mut run, trials);
    log_derivative_checks(&mut run, trials.min(50))?;
    growth_bound(&mut run, trials);

    Ok(run.finish("complex", cfg, None))
}

fn algebraic_identities(run: &mut SuiteRun, trials: usize) {
    let spec = run.spectrum.clone();
    for i in 0..trials {
        let g = ComplexGroupElement {
            z: run.sampler.complex_box(3.0),
            v: run.sampler.cvector(&spec, 2.0),
            s: run.sampler.complex_box(2.0),
        };
        let h = ComplexGroupElement {
            z: run.sampler.complex_box(3.0),
            v: run.sampler.cvector(&spec, 2.0),
            s: run.sampler.complex_box(2.0),
        };
        let anti = crate::group_complex::star(&spec, &mul_c(&spec, &g, &h)).max_abs_diff(&mul_c(
            &spec,
            &crate::group_complex::star(&spec, &h),
            &crate::group_complex::star(&spec, &g),
        ));
        run.recorder.check(
            format!("star_antiautomorphism/{i:04}"),
            anti,
            1e-11,
            || json!({"g": g, "h": h}),
            || json!(0.0),
            || json!(anti),
        );
        let invol = crate::group_complex::star(&spec, &crate::group_complex::star(&spec, &g))
            .max_abs_diff(&g);
        run.recorder.check(
            format!("star_involutive/{i:04}"),
            invol,
            1e-12,
            || serde_json::to_value(&g).unwrap(),
            || json!(0.0),
            || json!(invol),
        );

        let v = run.sampler.cvector(&spec, 2.0);
        let (z1, z2) = (run.sampler.complex_box(1.5), run.sampler.complex_box(1.5));
        let action = gamma_c(&spec, z1, &gamma_c(&spec, z2, &v))
            .max_abs_diff(&gamma_c(&spec, z1 + z2, &v));
        run.recorder.check(
            format!("gamma_c_action/{i:04}"),
            action,
            1e-12,
            || json!({"z1": [z1.re, z1.im], "z2": [z2.re, z2.im], "v": v}),
            || json!(0.0),
            || json!(action),
        );
        let moved = gamma_c(&spec, z1, &v);
        let pairing = (inner_c(&moved, &moved) - inner_c(&v, &v)).norm();
        run.recorder.check(
            format!("gamma_c_sigma_pairing/{i:04}"),
            pairing,
            1e-11,
            || json!({"z": [z1.re, z1.im], "v": v}),
            || json!(0.0),
            || json!(pairing),
        );

        // restriction of the complex law to real points
        let gr = run.sampler.group_element(&spec);
        let hr = run.sampler.group_element(&spec);
        let restrict = mul_c(
            &spec,
            &ComplexGroupElement::embed(&gr),
            &ComplexGroupElement::embed(&hr),
        )
        .max_abs_diff(&ComplexGroupElement::embed(&mul(&spec, &gr, &hr)));
        run.recorder.check(
            format!("mulc_restricts/{i:04}"),
            restrict,
            1e-13,
            || json!({"g": gr, "h": hr}),
            || json!(0.0),
            || json!(restrict),
        );

        // (g·exp_ℂ(iw))* = exp_ℂ(iw)·g⁻¹ in the ambient group
        let w = run.sampler.polar_part(&spec, 2.0, 0.2, 2.0);
        let eiw = exp_c(&spec, &ComplexAlgebraElement::embed_times_i(&w));
        let ge = ComplexGroupElement::embed(&gr);
        let starred = crate::group_complex::star(&spec, &mul_c(&spec, &ge, &eiw)).max_abs_diff(
            &mul_c(&spec, &eiw, &ComplexGroupElement::embed(&inv(&spec, &gr))),
        );
        run.recorder.check(
            format!("star_polar_identity/{i:04}"),
            starred,
            1e-11,
            || json!({"g": gr, "w": w}),
            || json!(0.0),
            || json!(starred),
        );
    }
}

fn log_derivative_checks(run: &mut SuiteRun, trials: usize) -> Result<()> {
    let spec = run.spectrum.clone();
    let h = 1e-5;
    for i in 0..trials {
        let base = ComplexAlgebraElement {
            z: run.sampler.complex_box(1.5),
            v: CVector::zeros(spec.n()),
            s: run.sampler.complex_box(1.5),
        };
        let dir = ComplexAlgebraElement {
            z: run.sampler.complex_box(1.5),
            v: run.sampler.cvector(&spec, 1.5),
            s: run.sampler.complex_box(1.5),
        };
        let curve = |tau: f64| {
            mul_c(
                &spec,
                &inv_c(&spec, &exp_c(&spec, &base)),
                &exp_c(&spec, &base.add(&dir.scale_re(tau))),
            )
        };
        let (plus, minus) = (curve(h), curve(-h));
        let fd = ComplexAlgebraElement {
            z: (plus.z - minus.z) / (2.0 * h),
            v: plus.v.sub(&minus.v).scale_ext(Complex64::new(1.0 / (2.0 * h), 0.0)),
            s: (plus.s - minus.s) / (2.0 * h),
        };
        let closed = log_derivative(&spec, &base, &dir)?;
        let err = closed.max_abs_diff(&fd);
        run.recorder.check(
            format!("log_derivative_fd/{i:04}"),
            err,
            1e-6,
            || json!({"base": base, "dir": dir}),
            || serde_json::to_value(&fd).unwrap(),
            || serde_json::to_value(&closed).unwrap(),
        );
    }
    Ok(())
}

fn growth_bound(run: &mut SuiteRun, trials: usize) {
    let spec = run.spectrum.clone();
    for i in 0..trials {
        let v = run.sampler.mode_vector(&spec, 2.0);
        let z = {
            let raw = run.sampler.complex_in_disc(2.5);
            if raw.norm() < 0.05 {
                raw + Complex64::new(0.1, 0.0)
            } else {
                raw
            }
        };
        let m = 1 + (i % 3) as u32;
        let shift = z.norm().ceil() as u32;
        let lhs = qn_seminorm_c(&spec, &gamma_c(&spec, z, &CVector::embed(&v)), m);
        let rhs = spec.qn_seminorm(&v, m + shift);
        run.recorder.require(
            format!("qn_growth_bound/{i:04}"),
            lhs <= rhs,
            (lhs - rhs).max(0.0),
            || json!({"v": v, "z": [z.re, z.im], "m": m}),
            || json!(rhs),
            || json!(lhs),
        );
    }
}
