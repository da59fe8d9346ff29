//! The open semigroup `S_A ⊂ G_{A,ℂ}` of elements with `Im s > 0`, its polar
//! decomposition `ψ(g,w) = g·exp_ℂ(iw)`, the involution, the subsemigroups
//! `S_d`, and the absolute value `α_a`.
//!
//! The inverse `ψ⁻¹` follows the factorisation
//! `g·(it,0,0) = (z,y,0)·θ(Im y, Im r)·(0,0,Re r)`: it is evaluated exactly
//! as written as a right-multiplication chain, after which realness of `g` is
//! *asserted* rather than assumed. The realness residuals double as a
//! continuous integrity check of the complex group law, `θ`, and the scalar
//! kernels.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cones::{self, ConeParameter, ConeQuery};
use crate::group_complex::{exp_c, mul_c, ComplexAlgebraElement, ComplexGroupElement, CVector};
use crate::group_real::{self, AlgebraElement, GroupElement};
use crate::spectral::{ModeVector, Spectrum};
use crate::{Error, Result};

/// Elements with `Im s` at or below this are rejected instead of attempting
/// the `s → 0` limit; the boundary is outside `S_A`.
pub const MIN_IM_S: f64 = 1e-14;

/// Soft bound for the realness residuals of the decomposition chain.
pub const RESIDUAL_SOFT: f64 = 1e-9;

/// Hard bound; beyond it the decomposition is reported as failed.
pub const RESIDUAL_HARD: f64 = 1e-7;

/// An element of `S_A`: a complexified group element with `Im s > 0`.
///
/// Serialises like the underlying element; deserialisation revalidates the
/// invariant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ComplexGroupElement", into = "ComplexGroupElement")]
pub struct SemigroupElement(ComplexGroupElement);

impl TryFrom<ComplexGroupElement> for SemigroupElement {
    type Error = Error;

    fn try_from(elem: ComplexGroupElement) -> Result<Self> {
        SemigroupElement::new(elem)
    }
}

impl From<SemigroupElement> for ComplexGroupElement {
    fn from(e: SemigroupElement) -> Self {
        e.0
    }
}

impl SemigroupElement {
    pub fn new(elem: ComplexGroupElement) -> Result<Self> {
        if elem.s.im <= MIN_IM_S {
            return Err(Error::NotInSemigroup { im_s: elem.s.im });
        }
        Ok(SemigroupElement(elem))
    }

    pub fn as_complex(&self) -> &ComplexGroupElement {
        &self.0
    }

    pub fn into_complex(self) -> ComplexGroupElement {
        self.0
    }

    pub fn max_abs_diff(&self, other: &SemigroupElement) -> f64 {
        self.0.max_abs_diff(&other.0)
    }
}

/// Semigroup multiplication (the restriction of the `G_{A,ℂ}` law; `Im s`
/// adds, so the product stays in `S_A`).
pub fn mul_s(spec: &Spectrum, a: &SemigroupElement, b: &SemigroupElement) -> SemigroupElement {
    SemigroupElement(mul_c(spec, &a.0, &b.0))
}

/// Polar pair `(g, w)` with `w ∈ W_∞`; `ψ(g,w)` reproduces the source.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolarForm {
    pub g: GroupElement,
    pub w: AlgebraElement,
}

/// Realness residuals of the decomposition chain (both must vanish for a
/// genuine `S_A` element; soft bound 1e-9, hard bound 1e-7).
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct PolarResiduals {
    /// Max-abs of the `ε`-part left in the vector slot of `g`.
    pub vector_imag: f64,
    /// Imaginary part left in the time slot of `g`.
    pub time_imag: f64,
}

impl PolarResiduals {
    pub fn max(&self) -> f64 {
        self.vector_imag.max(self.time_imag)
    }
}

/// The Heisenberg-valued map `θ`:
/// `θ(v,s) = ( ε·(‖f_s(A)v‖² − Re⟨f_s(A)v, v⟩)/(2s), −g_s(A)v − εv, 0 )`
/// for `s ≠ 0`, and `θ(v,0) = (0, −εv, 0)`.
pub fn theta(spec: &Spectrum, v: &ModeVector, s: f64) -> ComplexGroupElement {
    if s == 0.0 {
        return ComplexGroupElement {
            z: Complex64::ZERO,
            v: CVector::embed_imag(&v.neg()),
            s: Complex64::ZERO,
        };
    }
    let s_c = Complex64::new(s, 0.0);
    // real s·a_j never meets the pole set of the kernels
    let fv = spec.apply_f(s_c, v).expect("real kernel argument");
    let gv = spec.apply_g(s_c, v).expect("real kernel argument");
    let central = Complex64::new(0.0, (fv.norm_sqr() - fv.b_inner(v)) / (2.0 * s));
    ComplexGroupElement {
        z: central,
        v: CVector { p: gv.neg(), q: v.neg() },
        s: Complex64::ZERO,
    }
}

/// `ψ(g, w) = g·exp_ℂ(iw)`, defined for `w ∈ W_∞` (i.e. `w.s > 0`).
pub fn polar_compose(spec: &Spectrum, g: &GroupElement, w: &AlgebraElement) -> Result<SemigroupElement> {
    if w.s <= 0.0 {
        return Err(Error::Domain(format!("polar part needs s > 0, got s = {}", w.s)));
    }
    let eiw = exp_c(spec, &ComplexAlgebraElement::embed_times_i(w));
    SemigroupElement::new(mul_c(spec, &ComplexGroupElement::embed(g), &eiw))
}

/// `ψ⁻¹`, returning the polar pair together with the realness residuals.
pub fn polar_decompose_full(
    spec: &Spectrum,
    e: &SemigroupElement,
) -> Result<(PolarForm, PolarResiduals)> {
    let elem = &e.0;
    let s = elem.s.im;
    let re_r = elem.s.re;
    // x = γ(−Re r)·f_s(A)·Im(y)
    let x = spec.apply_gamma(
        -re_r,
        &spec
            .apply_f(Complex64::new(s, 0.0), &elem.v.q)
            .expect("real kernel argument"),
    );
    // g·(it,0,0) = (z,y,0)·θ(Im y, s)·(0,0,Re r)
    let head = ComplexGroupElement { z: elem.z, v: elem.v.clone(), s: Complex64::ZERO };
    let tail = ComplexGroupElement {
        z: Complex64::ZERO,
        v: CVector::zeros(spec.n()),
        s: Complex64::new(re_r, 0.0),
    };
    let chain = mul_c(spec, &mul_c(spec, &head, &theta(spec, &elem.v.q, s)), &tail);
    let residuals = PolarResiduals {
        vector_imag: chain.v.q.max_abs(),
        time_imag: chain.s.im.abs(),
    };
    if residuals.max() > RESIDUAL_HARD {
        return Err(Error::DecompositionResidual { residual: residuals.max() });
    }
    let g = GroupElement::new(chain.z.re, chain.v.p.clone(), chain.s.re);
    let w = AlgebraElement::new(chain.z.im, x, s);
    Ok((PolarForm { g, w }, residuals))
}

/// `ψ⁻¹` without the residual report.
pub fn polar_decompose(spec: &Spectrum, e: &SemigroupElement) -> Result<PolarForm> {
    polar_decompose_full(spec, e).map(|(p, _)| p)
}

/// Cone membership of the polar part: `S_d = G_A·exp_ℂ(i·W_d)`.
pub fn sd_membership(spec: &Spectrum, e: &SemigroupElement, cone: &ConeParameter) -> Result<ConeQuery> {
    let polar = polar_decompose(spec, e)?;
    Ok(cones::membership(&polar.w, cone))
}

/// Whether `e ∈ S_d`.
pub fn in_sd(spec: &Spectrum, e: &SemigroupElement, cone: &ConeParameter) -> Result<bool> {
    Ok(sd_membership(spec, e, cone)?.member)
}

/// The involution on `S_A`: `g·exp_ℂ(iw) ↦ g⁻¹·exp_ℂ(i·Ad(g)w)`.
///
/// Agrees with the ambient `(z,v,s) ↦ (z̄,σv,s̄)⁻¹` involution; going through
/// the polar pair keeps the polar part explicit.
pub fn star_s(spec: &Spectrum, e: &SemigroupElement) -> Result<SemigroupElement> {
    let polar = polar_decompose(spec, e)?;
    let moved = group_real::ad(spec, &polar.g, &polar.w);
    polar_compose(spec, &group_real::inv(spec, &polar.g), &moved)
}

/// Absolute value `α_a(g·exp_ℂ(iw)) = e^{‖x‖²/(2s) − t − s·a}` from the polar
/// part `w = (t,x,s)`.
pub fn alpha_a(spec: &Spectrum, e: &SemigroupElement, a: f64) -> Result<f64> {
    let polar = polar_decompose(spec, e)?;
    let w = &polar.w;
    Ok((w.x.norm_sqr() / (2.0 * w.s) - w.t - w.s * a).exp())
}

/// Barrier values along the curve `c(τ) = exp_ℂ(ix)·exp_ℂ(τ·iy)`, `τ` uniform
/// on `[0,1]`; the list is nonincreasing (up to per-step slack) when `x, y`
/// lie strictly in `W_d`.
pub fn curve_monotone_check(
    spec: &Spectrum,
    x: &AlgebraElement,
    y: &AlgebraElement,
    cone: &ConeParameter,
    steps: usize,
) -> Result<Vec<f64>> {
    if steps == 0 {
        return Err(Error::Domain("curve check needs at least one step".into()));
    }
    for (name, elem) in [("x", x), ("y", y)] {
        let query = cones::membership(elem, cone);
        if name == "x" && query.margin <= 0.0 {
            return Err(Error::NotInCone { margin: query.margin });
        }
        // y may sit on the closure boundary only if it is exactly zero
        if name == "y" && query.margin <= 0.0 && !(elem.t == 0.0 && elem.s == 0.0 && elem.x.max_abs() == 0.0)
        {
            return Err(Error::NotInCone { margin: query.margin });
        }
    }
    let base = exp_c(spec, &ComplexAlgebraElement::embed_times_i(x));
    let mut values = Vec::with_capacity(steps + 1);
    for k in 0..=steps {
        let tau = k as f64 / steps as f64;
        let tail = exp_c(spec, &ComplexAlgebraElement::embed_times_i(&y.scale(tau)));
        let elem = SemigroupElement::new(mul_c(spec, &base, &tail))?;
        let polar = polar_decompose(spec, &elem)?;
        values.push(cones::h_d(&polar.w, cone)?);
    }
    Ok(values)
}
