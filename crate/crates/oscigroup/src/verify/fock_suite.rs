//! Suite `fock`: CCR, homomorphism and covariance of the truncated
//! representation, the holomorphic-extension norm law, semigroup property,
//! *-compatibility, truncation convergence, and the momentum map.
//!
//! Expensive checks (eigendecompositions at the full two-mode dimension) run
//! a handful of times; the single-mode subspectrum carries the bulk of the
//! randomized trials at the same cutoff.

use nalgebra::DVector;
use num_complex::Complex64;
use serde_json::json;

use crate::fock::{support_function, FockSpace, FockVector};
use crate::group_real::{exp, mul, AlgebraElement, GroupElement};
use crate::report::{SuiteConfig, VerificationReport};
use crate::sample::boxes;
use crate::semigroup::{mul_s, polar_compose, star_s};
use crate::spectral::{ModeVector, Spectrum};
use crate::Result;

use super::SuiteRun;

pub(super) fn run(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let mut run = SuiteRun::start(cfg, "fock", &[1.0, 1.5]);
    let cutoff = cfg.truncation.unwrap_or(30);
    let spec_full = run.spectrum.clone();
    let spec_one = Spectrum::new(vec![spec_full.eigs()[0]])?;

    let fs1 = FockSpace::new(spec_one.clone(), cutoff);
    let fs2 = FockSpace::new(spec_full.clone(), cutoff);

    structural_checks(&mut run, &fs1, &fs2);
    ccr_checks(&mut run, &fs2, 1);
    ccr_checks(&mut run, &fs1, 3);
    finite_difference_checks(&mut run, &spec_one)?;

    let trials = cfg.trials_or(20);
    homomorphism_checks(&mut run, &fs1, trials.min(30), "n1")?;
    homomorphism_checks(&mut run, &fs2, 1, "n2")?;
    covariance_checks(&mut run, &fs1, 10);
    covariance_checks(&mut run, &fs2, 1);
    norm_law_checks(&mut run, &fs1, 20, "n1")?;
    norm_law_checks(&mut run, &fs2, 1, "n2")?;
    semigroup_law_checks(&mut run, &fs1, trials.min(10), "n1")?;
    semigroup_law_checks(&mut run, &fs2, 1, "n2")?;
    star_compat_checks(&mut run, &fs1, 10, "n1")?;
    star_compat_checks(&mut run, &fs2, 1, "n2")?;
    truncation_convergence(&mut run, &spec_one, &[25, 30], "n1")?;
    momentum_checks(&mut run, &fs2, cfg.trials_or(50).min(50))?;

    Ok(run.finish("fock", cfg, Some(cutoff)))
}

fn structural_checks(run: &mut SuiteRun, fs1: &FockSpace, fs2: &FockSpace) {
    for (tag, fs) in [("n1", fs1), ("n2", fs2)] {
        // −i·dπ(0,0,1) = dΓ is bounded below by zero, exactly
        let min_energy = fs.energies().iter().cloned().fold(f64::INFINITY, f64::min);
        run.recorder.require(
            format!("dgamma_nonnegative_{tag}/0000"),
            min_energy == 0.0 && fs.energies().iter().all(|&e| e >= 0.0),
            min_energy.abs(),
            || json!({"cutoff": fs.cutoff()}),
            || json!(0.0),
            || json!(min_energy),
        );
        // central character π(t,0,0) = e^{it}·Id
        let t = 0.9;
        let central = fs.pi(&GroupElement::new(t, ModeVector::zeros(fs.spectrum().n()), 0.0));
        let expected = fs.identity().scale(Complex64::from_polar(1.0, t));
        let err = central.sub(&expected).max_abs_entry();
        run.recorder.check(
            format!("central_character_{tag}/0000"),
            err,
            1e-13,
            || json!({"t": t}),
            || json!("e^{it}·Id"),
            || json!(err),
        );
    }

    // dπ is real-linear
    let spec = fs2.spectrum().clone();
    for i in 0..10usize {
        let x = run.sampler.algebra_element(&spec, 1.0);
        let y = run.sampler.algebra_element(&spec, 1.0);
        let (a, b) = (run.sampler.uniform(-2.0, 2.0), run.sampler.uniform(-2.0, 2.0));
        let lin = fs2
            .dpi(&x.scale(a).add(&y.scale(b)))
            .sub(&fs2.dpi(&x).scale(Complex64::new(a, 0.0)))
            .sub(&fs2.dpi(&y).scale(Complex64::new(b, 0.0)))
            .max_abs_entry();
        run.recorder.check(
            format!("dpi_linear/{i:04}"),
            lin,
            1e-12,
            || json!({"x": x, "y": y, "a": a, "b": b}),
            || json!(0.0),
            || json!(lin),
        );
    }
}

fn ccr_checks(run: &mut SuiteRun, fs: &FockSpace, count: usize) {
    let spec = fs.spectrum().clone();
    let tag = if spec.n() == 1 { "n1" } else { "n2" };
    for i in 0..count {
        let x = run.sampler.mode_vector(&spec, boxes::FOCK_X_NORM);
        let y = run.sampler.mode_vector(&spec, boxes::FOCK_X_NORM);
        let phix = fs.field_phi(&x);
        let phiy = fs.field_phi(&y);
        let comm = phix.mul(&phiy).sub(&phiy.mul(&phix));
        let expected = fs.identity().scale(Complex64::new(0.0, -spec.omega(&x, &y)));
        let defect = comm
            .sub(&expected)
            .compress(fs.dim_at(fs.cutoff().saturating_sub(2)))
            .max_abs_entry();
        run.recorder.check(
            format!("ccr_{tag}/{i:04}"),
            defect,
            1e-11,
            || json!({"x": x, "y": y}),
            || json!(-spec.omega(&x, &y)),
            || json!(defect),
        );
    }
}

fn finite_difference_checks(run: &mut SuiteRun, spec_one: &Spectrum) -> Result<()> {
    // first-order convergence of (π(exp(τX))v − v)/τ to dπ(X)v
    let fs = FockSpace::new(spec_one.clone(), 20);
    for i in 0..2usize {
        let x = run.sampler.algebra_element(spec_one, 1.0);
        let mut amps = DVector::zeros(fs.dim());
        for k in 0..fs.dim_at(fs.cutoff() - 4) {
            amps[k] = run.sampler.complex_box(1.0);
        }
        let v = FockVector(amps);
        let dv = fs.dpi(&x).apply(&v);
        let defect = |tau: f64| {
            let moved = fs.pi(&exp(spec_one, &x.scale(tau))).apply(&v);
            moved
                .sub(&v)
                .scale(Complex64::new(1.0 / tau, 0.0))
                .sub(&dv)
                .norm()
        };
        let (e3, e4) = (defect(1e-3), defect(1e-4));
        let ratio = e3 / e4;
        run.recorder.require(
            format!("dpi_finite_difference/{i:04}"),
            e4 < e3 && (4.0..25.0).contains(&ratio),
            ratio,
            || json!({"x": x}),
            || json!("first-order decay, ratio near 10"),
            || json!({"err_1e3": e3, "err_1e4": e4, "ratio": ratio}),
        );
    }
    Ok(())
}

fn sample_group_small(run: &mut SuiteRun, spec: &Spectrum) -> GroupElement {
    GroupElement::new(
        run.sampler.uniform(-boxes::T, boxes::T),
        run.sampler.mode_vector(spec, boxes::FOCK_X_NORM),
        run.sampler.uniform(-boxes::S, boxes::S),
    )
}

fn homomorphism_checks(run: &mut SuiteRun, fs: &FockSpace, count: usize, tag: &str) -> Result<()> {
    let spec = fs.spectrum().clone();
    let block = fs.dim_at(fs.cutoff() / 2);
    for i in 0..count {
        let g = sample_group_small(run, &spec);
        let h = sample_group_small(run, &spec);
        let defect = fs
            .pi(&g)
            .mul(&fs.pi(&h))
            .sub(&fs.pi(&mul(&spec, &g, &h)))
            .compress(block)
            .norm();
        run.recorder.check(
            format!("pi_homomorphism_{tag}/{i:04}"),
            defect,
            1e-6,
            || json!({"g": g, "h": h}),
            || json!(0.0),
            || json!(defect),
        );
    }
    Ok(())
}

fn covariance_checks(run: &mut SuiteRun, fs: &FockSpace, count: usize) {
    let spec = fs.spectrum().clone();
    let tag = if spec.n() == 1 { "n1" } else { "n2" };
    let block = fs.dim_at(fs.cutoff() - 1);
    for i in 0..count {
        let x = run.sampler.mode_vector(&spec, boxes::FOCK_X_NORM);
        let s = run.sampler.uniform(-boxes::S, boxes::S);
        let zero = ModeVector::zeros(spec.n());
        let rot = fs.pi(&GroupElement::new(0.0, zero.clone(), s));
        let rot_inv = fs.pi(&GroupElement::new(0.0, zero, -s));
        let defect = rot
            .mul(&fs.field_phi(&x))
            .mul(&rot_inv)
            .sub(&fs.field_phi(&spec.apply_gamma(s, &x)))
            .compress(block)
            .max_abs_entry();
        run.recorder.check(
            format!("pi_covariance_{tag}/{i:04}"),
            defect,
            1e-9,
            || json!({"x": x, "s": s}),
            || json!(0.0),
            || json!(defect),
        );
    }
}

fn sample_polar_small(run: &mut SuiteRun, spec: &Spectrum) -> AlgebraElement {
    AlgebraElement::new(
        run.sampler.uniform(-2.0, 2.0),
        run.sampler.mode_vector(spec, boxes::FOCK_X_NORM),
        run.sampler.uniform(boxes::FOCK_S_LO, boxes::FOCK_S_HI),
    )
}

fn norm_law_checks(run: &mut SuiteRun, fs: &FockSpace, count: usize, tag: &str) -> Result<()> {
    let spec = fs.spectrum().clone();
    for i in 0..count {
        let w = sample_polar_small(run, &spec);
        let g = if i % 2 == 0 {
            GroupElement::identity(&spec)
        } else {
            sample_group_small(run, &spec)
        };
        let e = polar_compose(&spec, &g, &w)?;
        let norm = fs.pi_hat(&e)?.norm();
        let expected = support_function(&w)?.exp();
        let err = (norm - expected).abs();
        run.recorder.check(
            format!("pi_hat_norm_law_{tag}/{i:04}"),
            err,
            1e-6,
            || json!({"g": g, "w": w}),
            || json!(expected),
            || json!(norm),
        );
        // α_0 dominates the truncated norm up to 1e-6 relative slack
        let alpha = crate::semigroup::alpha_a(&spec, &e, 0.0)?;
        let excess = (norm - alpha * (1.0 + 1e-6)).max(0.0);
        run.recorder.check(
            format!("pi_hat_alpha_bound_{tag}/{i:04}"),
            excess,
            0.0,
            || json!({"g": g, "w": w}),
            || json!(alpha),
            || json!(norm),
        );
    }
    Ok(())
}

fn semigroup_law_checks(run: &mut SuiteRun, fs: &FockSpace, count: usize, tag: &str) -> Result<()> {
    let spec = fs.spectrum().clone();
    let block = fs.dim_at(fs.cutoff() / 2);
    for i in 0..count {
        let e1 = polar_compose(&spec, &sample_group_small(run, &spec), &sample_polar_small(run, &spec))?;
        let e2 = polar_compose(&spec, &sample_group_small(run, &spec), &sample_polar_small(run, &spec))?;
        let defect = fs
            .pi_hat(&e1)?
            .mul(&fs.pi_hat(&e2)?)
            .sub(&fs.pi_hat(&mul_s(&spec, &e1, &e2))?)
            .compress(block)
            .norm();
        run.recorder.check(
            format!("pi_hat_semigroup_{tag}/{i:04}"),
            defect,
            1e-6,
            || json!({"e1": e1.as_complex(), "e2": e2.as_complex()}),
            || json!(0.0),
            || json!(defect),
        );
    }
    Ok(())
}

fn star_compat_checks(run: &mut SuiteRun, fs: &FockSpace, count: usize, tag: &str) -> Result<()> {
    let spec = fs.spectrum().clone();
    // like the homomorphism/semigroup checks, measured on the occupation
    // ≤ N/2 compression: the identity is exact in the full space and the
    // defect is pure cutoff leakage
    let block = fs.dim_at(fs.cutoff() / 2);
    for i in 0..count {
        let e = polar_compose(&spec, &sample_group_small(run, &spec), &sample_polar_small(run, &spec))?;
        let defect = fs
            .pi_hat(&star_s(&spec, &e)?)?
            .sub(&fs.pi_hat(&e)?.adjoint())
            .compress(block)
            .norm();
        run.recorder.check(
            format!("pi_hat_star_compat_{tag}/{i:04}"),
            defect,
            1e-7,
            || serde_json::to_value(e.as_complex()).unwrap(),
            || json!(0.0),
            || json!(defect),
        );
    }
    Ok(())
}

fn truncation_convergence(
    run: &mut SuiteRun,
    spec: &Spectrum,
    base_cutoffs: &[usize],
    tag: &str,
) -> Result<()> {
    let g = sample_group_small(run, spec);
    let w = sample_polar_small(run, spec);
    let e = polar_compose(spec, &g, &w)?;
    let alpha = crate::semigroup::alpha_a(spec, &e, 0.0)?;
    let mut previous_gap: Option<f64> = None;
    for (i, &n0) in base_cutoffs.iter().enumerate() {
        let norm_lo = FockSpace::new(spec.clone(), n0).pi_hat(&e)?.norm();
        let norm_hi = FockSpace::new(spec.clone(), n0 + 5).pi_hat(&e)?.norm();
        let drift = (norm_hi - norm_lo).abs();
        run.recorder.check(
            format!("truncation_drift_{tag}/{i:04}"),
            drift,
            1e-8,
            || json!({"g": g, "w": w, "cutoff": n0}),
            || json!(norm_lo),
            || json!(norm_hi),
        );
        // relative gap to α₀ shrinks (or stays at noise level) as N grows
        let gap = ((alpha - norm_hi) / alpha).abs();
        if let Some(prev) = previous_gap {
            run.recorder.check(
                format!("alpha_gap_trend_{tag}/{i:04}"),
                (gap - prev).max(0.0),
                1e-9,
                || json!({"g": g, "w": w, "cutoff": n0}),
                || json!(prev),
                || json!(gap),
            );
        }
        previous_gap = Some(gap);
    }
    Ok(())
}

fn momentum_checks(run: &mut SuiteRun, fs: &FockSpace, count: usize) -> Result<()> {
    let spec = fs.spectrum().clone();
    let vac = fs.vacuum();
    let block = fs.dim_at(fs.cutoff() / 2);
    for i in 0..count {
        let x = run.sampler.algebra_element(&spec, boxes::FOCK_X_NORM);
        // vacuum momentum is the central coordinate
        let vac_value = fs.momentum(&vac, &x)?;
        run.recorder.check(
            format!("momentum_vacuum/{i:04}"),
            (vac_value - x.t).abs(),
            1e-12,
            || json!({"x": x}),
            || json!(x.t),
            || json!(vac_value),
        );

        let mut amps = DVector::zeros(fs.dim());
        for k in 0..block {
            amps[k] = run.sampler.complex_box(1.0);
        }
        let v = FockVector(amps);
        let scaled = v.scale(run.sampler.complex_box(2.0) + Complex64::new(3.0, 0.0));
        let plain = fs.momentum(&v, &x)?;
        let rescaled = fs.momentum(&scaled, &x)?;
        run.recorder.check(
            format!("momentum_scaling/{i:04}"),
            (plain - rescaled).abs(),
            1e-10,
            || json!({"x": x}),
            || json!(plain),
            || json!(rescaled),
        );

        // momentum-set bound: Φ([v])(w) ≥ −s_π(w) for w ∈ W_∞
        let w = sample_polar_small(run, &spec);
        let value = fs.momentum(&v, &w)?;
        let s_pi = support_function(&w)?;
        let violation = (-(value + s_pi)).max(0.0);
        run.recorder.check(
            format!("momentum_support_bound/{i:04}"),
            violation,
            1e-9 * (1.0 + s_pi.abs()),
            || json!({"w": w}),
            || json!(-s_pi),
            || json!(value),
        );
    }
    Ok(())
}
