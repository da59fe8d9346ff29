//! Arithmetic of the real oscillator group `G_A` and its Lie algebra `g_A`.
//!
//! Elements are triples `(t, x, s)`: central coordinate, Heisenberg vector,
//! time coordinate. The semidirect convention `(h,s)(h',s') = (h·γ(s)h',
//! s+s')` is not assumed but pinned by regression tests: it is the unique
//! convention under which the left-translation derivative of the exponential
//! map and the adjoint-action formula hold simultaneously.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::spectral::{kernel_b, ModeVector, Spectrum};
use crate::{Error, Result};

/// Group element `(t, x, s)` of `G_A`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupElement {
    pub t: f64,
    pub x: ModeVector,
    pub s: f64,
}

/// Lie algebra element `(t, x, s)` of `g_A`.
///
/// Shares the layout of [`GroupElement`] but is a distinct type so that
/// exponential/polar plumbing cannot confuse the two.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraElement {
    pub t: f64,
    pub x: ModeVector,
    pub s: f64,
}

/// Functional `λ = (t*, α, s*)` with `α(x) = Re⟨a, x⟩` in Riesz form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoAlgebraElement {
    pub tstar: f64,
    pub a: ModeVector,
    pub sstar: f64,
}

impl GroupElement {
    pub fn new(t: f64, x: ModeVector, s: f64) -> Self {
        GroupElement { t, x, s }
    }

    pub fn identity(spec: &Spectrum) -> Self {
        GroupElement::new(0.0, spec.zero_vector(), 0.0)
    }

    /// Component-wise max-abs distance (scale-free across the three slots).
    pub fn max_abs_diff(&self, other: &GroupElement) -> f64 {
        (self.t - other.t)
            .abs()
            .max(self.x.max_abs_diff(&other.x))
            .max((self.s - other.s).abs())
    }
}

impl AlgebraElement {
    pub fn new(t: f64, x: ModeVector, s: f64) -> Self {
        AlgebraElement { t, x, s }
    }

    pub fn zero(spec: &Spectrum) -> Self {
        AlgebraElement::new(0.0, spec.zero_vector(), 0.0)
    }

    pub fn scale(&self, k: f64) -> Self {
        AlgebraElement::new(k * self.t, self.x.scale_re(k), k * self.s)
    }

    pub fn add(&self, other: &AlgebraElement) -> Self {
        AlgebraElement::new(self.t + other.t, self.x.add(&other.x), self.s + other.s)
    }

    pub fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    pub fn max_abs_diff(&self, other: &AlgebraElement) -> f64 {
        (self.t - other.t)
            .abs()
            .max(self.x.max_abs_diff(&other.x))
            .max((self.s - other.s).abs())
    }
}

impl CoAlgebraElement {
    pub fn new(tstar: f64, a: ModeVector, sstar: f64) -> Self {
        CoAlgebraElement { tstar, a, sstar }
    }

    /// Dual pairing `λ(X) = t*·t + Re⟨a, x⟩ + s*·s`.
    pub fn pair(&self, x: &AlgebraElement) -> f64 {
        self.tstar * x.t + self.a.b_inner(&x.x) + self.sstar * x.s
    }

    pub fn max_abs_diff(&self, other: &CoAlgebraElement) -> f64 {
        (self.tstar - other.tstar)
            .abs()
            .max(self.a.max_abs_diff(&other.a))
            .max((self.sstar - other.sstar).abs())
    }
}

/// Symplectic form `ω_A(x,y) = Im⟨Ax,y⟩`.
pub fn omega(spec: &Spectrum, x: &ModeVector, y: &ModeVector) -> f64 {
    spec.omega(x, y)
}

/// `D = iA` applied per mode.
pub fn apply_d(spec: &Spectrum, x: &ModeVector) -> ModeVector {
    ModeVector(
        x.0.iter()
            .zip(spec.eigs())
            .map(|(&xj, &aj)| Complex64::i() * aj * xj)
            .collect(),
    )
}

fn d_norm_sqr(spec: &Spectrum, x: &ModeVector) -> f64 {
    x.0.iter()
        .zip(spec.eigs())
        .map(|(&xj, &aj)| aj * aj * xj.norm_sqr())
        .sum()
}

/// Group law `(t,x,s)(t',x',s') = (t+t'+½ω(x, γ(s)x'), x+γ(s)x', s+s')`.
pub fn mul(spec: &Spectrum, g: &GroupElement, h: &GroupElement) -> GroupElement {
    let twisted = spec.apply_gamma(g.s, &h.x);
    GroupElement::new(
        g.t + h.t + 0.5 * spec.omega(&g.x, &twisted),
        g.x.add(&twisted),
        g.s + h.s,
    )
}

/// Inverse `(t,x,s)⁻¹ = (−t, −γ(−s)x, −s)`.
pub fn inv(spec: &Spectrum, g: &GroupElement) -> GroupElement {
    GroupElement::new(-g.t, spec.apply_gamma(-g.s, &g.x).neg(), -g.s)
}

/// Closed-form exponential map of `G_A`.
///
/// For `s ≠ 0` the vector slot is `B_s x` with per-mode scalar `b̃(i s a_j)`
/// and the central slot picks up `(Re⟨x, B_s x⟩ − ‖x‖²)/(2s)`; for `s = 0`
/// the integrand is constant and `exp(t,x,0) = (t,x,0)`.
pub fn exp(spec: &Spectrum, x: &AlgebraElement) -> GroupElement {
    if x.s == 0.0 {
        return GroupElement::new(x.t, x.x.clone(), 0.0);
    }
    let bsx = ModeVector(
        x.x.0
            .iter()
            .zip(spec.eigs())
            .map(|(&xj, &aj)| xj * kernel_b(Complex64::new(0.0, x.s * aj)))
            .collect(),
    );
    let central = x.t + (x.x.b_inner(&bsx) - x.x.norm_sqr()) / (2.0 * x.s);
    GroupElement::new(central, bsx, x.s)
}

/// Quadrature oracle for the exponential map: nested composite Simpson on
/// `exp(t,x,s) = (t + ½∫₀¹∫₀¹ ω(γ(stt')x, γ(st)x)·t dt'dt, ∫₀¹γ(st)x dt, s)`.
///
/// Deliberately evaluates the double integral from the definition instead of
/// reusing any closed form, so it can serve as an independent oracle.
pub fn exp_quadrature(spec: &Spectrum, x: &AlgebraElement, steps: usize) -> Result<GroupElement> {
    if steps < 200 {
        return Err(Error::Domain(format!("exp quadrature needs steps >= 200, got {steps}")));
    }
    let n = steps + steps % 2;
    let h = 1.0 / n as f64;
    let simpson_weight = |k: usize| -> f64 {
        if k == 0 || k == n {
            1.0
        } else if k % 2 == 1 {
            4.0
        } else {
            2.0
        }
    };

    let mut vector_acc = spec.zero_vector();
    let mut central_acc = 0.0f64;
    for k in 0..=n {
        let t = h * k as f64;
        let wk = simpson_weight(k);
        let outer = spec.apply_gamma(x.s * t, &x.x);
        vector_acc = vector_acc.add(&outer.scale_re(wk));

        let mut inner_acc = 0.0f64;
        for l in 0..=n {
            let tp = h * l as f64;
            // ω(γ(stt')x, outer) accumulated per mode without materialising
            // the rotated vector
            let mut om = 0.0f64;
            for ((&xj, &oj), &aj) in x.x.0.iter().zip(&outer.0).zip(spec.eigs()) {
                let rotated = xj * Complex64::from_polar(1.0, x.s * t * tp * aj);
                om += aj * (rotated * oj.conj()).im;
            }
            inner_acc += simpson_weight(l) * om;
        }
        central_acc += wk * t * (inner_acc * h / 3.0);
    }
    let vector = vector_acc.scale_re(h / 3.0);
    let central = x.t + 0.5 * (central_acc * h / 3.0);
    Ok(GroupElement::new(central, vector, x.s))
}

/// Adjoint action
/// `Ad(t',x',s')(t,x,s) = (t − Re⟨Dx', γ(s')x⟩ + ½‖Dx'‖²s, γ(s')x − sDx', s)`.
pub fn ad(spec: &Spectrum, g: &GroupElement, x: &AlgebraElement) -> AlgebraElement {
    let dxp = apply_d(spec, &g.x);
    let rotated = spec.apply_gamma(g.s, &x.x);
    AlgebraElement::new(
        x.t - dxp.b_inner(&rotated) + 0.5 * d_norm_sqr(spec, &g.x) * x.s,
        rotated.sub(&dxp.scale_re(x.s)),
        x.s,
    )
}

/// Coadjoint action in Riesz form: the `t*` slot is fixed, the vector slot
/// becomes `γ(s')a + t*·Dx'` and the `s*` slot gains
/// `t*/2·‖Dx'‖² + Re⟨a, Dγ(−s')x'⟩`.
pub fn coad(spec: &Spectrum, g: &GroupElement, lambda: &CoAlgebraElement) -> CoAlgebraElement {
    let dxp = apply_d(spec, &g.x);
    let a_new = spec
        .apply_gamma(g.s, &lambda.a)
        .add(&dxp.scale_re(lambda.tstar));
    let d_gamma_xp = apply_d(spec, &spec.apply_gamma(-g.s, &g.x));
    CoAlgebraElement::new(
        lambda.tstar,
        a_new,
        0.5 * lambda.tstar * d_norm_sqr(spec, &g.x) + lambda.a.b_inner(&d_gamma_xp) + lambda.sstar,
    )
}

/// Lie bracket `[(t,v,s),(t',v',s')] = (ω(v,v'), sDv' − s'Dv, 0)`.
pub fn bracket(spec: &Spectrum, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let dv2 = apply_d(spec, &y.x);
    let dv1 = apply_d(spec, &x.x);
    AlgebraElement::new(
        spec.omega(&x.x, &y.x),
        dv2.scale_re(x.s).sub(&dv1.scale_re(y.s)),
        0.0,
    )
}
