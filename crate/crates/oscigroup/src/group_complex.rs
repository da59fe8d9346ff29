//! The complexification `G_{A,ℂ}`: doubled vectors, `γ_ℂ`, bilinear forms,
//! complex group law, closed-form `exp_ℂ`, involution, logarithmic
//! derivative.
//!
//! Two-unit bookkeeping. The *internal* unit `i` (the complex structure of
//! `H_A`) lives inside [`ModeVector`] entries. The *external* unit `ε` (the
//! complexification) is the `(p, q)` pair structure of [`CVector`]: a vector
//! is `p + εq` and `ε` never appears as a scalar inside an entry. The two
//! units commute and `(εi)² = +1`, so per mode everything diagonalises over
//! the split `h± = p ∓ iq`, on which `ε` acts as `∓i`. All per-mode operators
//! below are computed through that split; the public contract stays `(p, q)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::group_real::{AlgebraElement, GroupElement};
use crate::spectral::{kernel_b, ModeVector, Spectrum, QN_TERM_THRESHOLD};
use crate::{Error, Result};

/// `p + εq ∈ V_ℂ`; `σ(p + εq) = p − εq` is the canonical conjugation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CVector {
    pub p: ModeVector,
    pub q: ModeVector,
}

/// Element `(z, v, s)` of `G_{A,ℂ}` with external-complex central and time
/// slots.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexGroupElement {
    pub z: Complex64,
    pub v: CVector,
    pub s: Complex64,
}

/// Complexified algebra element; same layout, distinct type.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexAlgebraElement {
    pub z: Complex64,
    pub v: CVector,
    pub s: Complex64,
}

impl CVector {
    pub fn zeros(n: usize) -> Self {
        CVector { p: ModeVector::zeros(n), q: ModeVector::zeros(n) }
    }

    /// Embeds a real vector `x ↦ x + ε·0`.
    pub fn embed(x: &ModeVector) -> Self {
        CVector { p: x.clone(), q: ModeVector::zeros(x.len()) }
    }

    /// `ε·x` for real `x`: the vector `0 + εx`.
    pub fn embed_imag(x: &ModeVector) -> Self {
        CVector { p: ModeVector::zeros(x.len()), q: x.clone() }
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn add(&self, other: &CVector) -> CVector {
        CVector { p: self.p.add(&other.p), q: self.q.add(&other.q) }
    }

    pub fn sub(&self, other: &CVector) -> CVector {
        CVector { p: self.p.sub(&other.p), q: self.q.sub(&other.q) }
    }

    pub fn neg(&self) -> CVector {
        CVector { p: self.p.neg(), q: self.q.neg() }
    }

    /// External scalar multiplication: `(α + εβ)(p + εq) = (αp − βq) + ε(βp + αq)`.
    pub fn scale_ext(&self, c: Complex64) -> CVector {
        CVector {
            p: self.p.scale_re(c.re).sub(&self.q.scale_re(c.im)),
            q: self.p.scale_re(c.im).add(&self.q.scale_re(c.re)),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.p.max_abs().max(self.q.max_abs())
    }

    pub fn max_abs_diff(&self, other: &CVector) -> f64 {
        self.p.max_abs_diff(&other.p).max(self.q.max_abs_diff(&other.q))
    }
}

impl ComplexGroupElement {
    pub fn identity(spec: &Spectrum) -> Self {
        ComplexGroupElement { z: Complex64::ZERO, v: CVector::zeros(spec.n()), s: Complex64::ZERO }
    }

    /// Embeds `G_A ⊂ G_{A,ℂ}`.
    pub fn embed(g: &GroupElement) -> Self {
        ComplexGroupElement {
            z: Complex64::new(g.t, 0.0),
            v: CVector::embed(&g.x),
            s: Complex64::new(g.s, 0.0),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.z - other.z)
            .norm()
            .max(self.v.max_abs_diff(&other.v))
            .max((self.s - other.s).norm())
    }
}

impl ComplexAlgebraElement {
    pub fn zero(spec: &Spectrum) -> Self {
        ComplexAlgebraElement { z: Complex64::ZERO, v: CVector::zeros(spec.n()), s: Complex64::ZERO }
    }

    /// Embeds `g_A ⊂ g_{A,ℂ}`.
    pub fn embed(x: &AlgebraElement) -> Self {
        ComplexAlgebraElement {
            z: Complex64::new(x.t, 0.0),
            v: CVector::embed(&x.x),
            s: Complex64::new(x.s, 0.0),
        }
    }

    /// `i·w` for real `w = (t,x,s)`: the element `(it, εx, is)`.
    pub fn embed_times_i(w: &AlgebraElement) -> Self {
        ComplexAlgebraElement {
            z: Complex64::new(0.0, w.t),
            v: CVector::embed_imag(&w.x),
            s: Complex64::new(0.0, w.s),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ComplexAlgebraElement {
            z: self.z + other.z,
            v: self.v.add(&other.v),
            s: self.s + other.s,
        }
    }

    pub fn scale_re(&self, k: f64) -> Self {
        ComplexAlgebraElement {
            z: k * self.z,
            v: CVector { p: self.v.p.scale_re(k), q: self.v.q.scale_re(k) },
            s: k * self.s,
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.z - other.z)
            .norm()
            .max(self.v.max_abs_diff(&other.v))
            .max((self.s - other.s).norm())
    }
}

/// Canonical conjugation `σ(p + εq) = p − εq`; internal entries untouched.
pub fn sigma(v: &CVector) -> CVector {
    CVector { p: v.p.clone(), q: v.q.neg() }
}

/// Applies the entire scalar kernel `h` to the per-mode generator `z·D_ℂ`.
///
/// On the split `h± = p ∓ iq` the element `z·D` acts as the ordinary complex
/// scalar `i·a_j·z̄` resp. `i·a_j·z`, so `h(zD)` is diagonal there.
fn apply_entire(
    spec: &Spectrum,
    z: Complex64,
    v: &CVector,
    h: impl Fn(Complex64) -> Complex64,
) -> CVector {
    assert_eq!(v.len(), spec.n());
    let i = Complex64::i();
    let mut p = Vec::with_capacity(spec.n());
    let mut q = Vec::with_capacity(spec.n());
    for ((&pj, &qj), &aj) in v.p.0.iter().zip(&v.q.0).zip(spec.eigs()) {
        let hp = (pj - i * qj) * h(i * aj * z.conj());
        let hm = (pj + i * qj) * h(i * aj * z);
        p.push(0.5 * (hp + hm));
        q.push(0.5 * i * (hp - hm));
    }
    CVector { p: ModeVector(p), q: ModeVector(q) }
}

/// Holomorphic action `γ_ℂ(z)v = Σ z^k D_ℂ^k v / k!`.
///
/// For `z = u + εb` this is per mode: multiply both `p_j, q_j` by `e^{iua_j}`,
/// then `(p_j, q_j) ↦ (cosh(ba_j)p_j − i·sinh(ba_j)q_j, i·sinh(ba_j)p_j +
/// cosh(ba_j)q_j)`.
pub fn gamma_c(spec: &Spectrum, z: Complex64, v: &CVector) -> CVector {
    apply_entire(spec, z, v, |w| w.exp())
}

/// `B_z = (γ_ℂ(z) − 1)/(D_ℂ z)` via the scalar kernel `b̃(w) = (e^w − 1)/w`.
pub fn b_c(spec: &Spectrum, z: Complex64, v: &CVector) -> CVector {
    apply_entire(spec, z, v, kernel_b)
}

/// `D_ℂ(p + εq) = Dp + εDq`.
pub fn d_c(spec: &Spectrum, v: &CVector) -> CVector {
    CVector {
        p: crate::group_real::apply_d(spec, &v.p),
        q: crate::group_real::apply_d(spec, &v.q),
    }
}

/// Complex-bilinear extension of `b(x,y) = Re⟨x,y⟩`:
/// `⟨p+εq, p'+εq'⟩_ℂ = b(p,p') − b(q,q') + ε(b(p,q') + b(q,p'))`.
///
/// This bilinear form coincides with the *sesquilinear* inner product of the
/// complexified Hilbert space paired against a conjugated second argument:
/// `inner_c(u, v) = ⟨u, σv⟩`. Formulas written with an explicit `σ` in the
/// second slot therefore drop it when expressed through `inner_c`.
pub fn inner_c(v: &CVector, w: &CVector) -> Complex64 {
    Complex64::new(
        v.p.b_inner(&w.p) - v.q.b_inner(&w.q),
        v.p.b_inner(&w.q) + v.q.b_inner(&w.p),
    )
}

/// Complex-bilinear extension of `ω_A`.
pub fn omega_c(spec: &Spectrum, v: &CVector, w: &CVector) -> Complex64 {
    Complex64::new(
        spec.omega(&v.p, &w.p) - spec.omega(&v.q, &w.q),
        spec.omega(&v.p, &w.q) + spec.omega(&v.q, &w.p),
    )
}

/// Group law of `G_{A,ℂ}` with `ω_ℂ` and `γ_ℂ` substituted.
pub fn mul_c(
    spec: &Spectrum,
    g: &ComplexGroupElement,
    h: &ComplexGroupElement,
) -> ComplexGroupElement {
    let twisted = gamma_c(spec, g.s, &h.v);
    ComplexGroupElement {
        z: g.z + h.z + 0.5 * omega_c(spec, &g.v, &twisted),
        v: g.v.add(&twisted),
        s: g.s + h.s,
    }
}

pub fn inv_c(spec: &Spectrum, g: &ComplexGroupElement) -> ComplexGroupElement {
    ComplexGroupElement {
        z: -g.z,
        v: gamma_c(spec, -g.s, &g.v).neg(),
        s: -g.s,
    }
}

/// Closed-form exponential of `G_{A,ℂ}`:
/// `exp_ℂ(z,x,s) = (z + (1/2s)⟨x, σ(B_s x − x)⟩, B_s x, s)` for `s ≠ 0`
/// and `(z, x, 0)` otherwise. The `σ` is absorbed by [`inner_c`].
pub fn exp_c(spec: &Spectrum, x: &ComplexAlgebraElement) -> ComplexGroupElement {
    if x.s == Complex64::ZERO {
        return ComplexGroupElement { z: x.z, v: x.v.clone(), s: x.s };
    }
    let bsx = b_c(spec, x.s, &x.v);
    let central = x.z + inner_c(&x.v, &bsx.sub(&x.v)) / (2.0 * x.s);
    ComplexGroupElement { z: central, v: bsx, s: x.s }
}

/// Quadrature oracle for `exp_ℂ`, evaluating the defining double integral by
/// nested composite Simpson; independent of the closed form above.
pub fn exp_c_quadrature(
    spec: &Spectrum,
    x: &ComplexAlgebraElement,
    steps: usize,
) -> Result<ComplexGroupElement> {
    if steps < 200 {
        return Err(Error::Domain(format!("exp_C quadrature needs steps >= 200, got {steps}")));
    }
    let n = steps + steps % 2;
    let h = 1.0 / n as f64;
    let weight = |k: usize| -> f64 {
        if k == 0 || k == n {
            1.0
        } else if k % 2 == 1 {
            4.0
        } else {
            2.0
        }
    };
    let i = Complex64::i();
    let mut vector_acc = CVector::zeros(spec.n());
    let mut central_acc = Complex64::ZERO;
    for k in 0..=n {
        let t = h * k as f64;
        let wk = weight(k);
        let outer = gamma_c(spec, x.s * t, &x.v);
        vector_acc = vector_acc.add(&outer.scale_ext(Complex64::new(wk, 0.0)));
        let mut inner_acc = Complex64::ZERO;
        for l in 0..=n {
            let tp = h * l as f64;
            let z = x.s * (t * tp);
            // ω_ℂ(γ_ℂ(stt')v, outer) accumulated per mode through the h±
            // split without materialising the rotated vector
            let mut om = Complex64::ZERO;
            for (j, &aj) in spec.eigs().iter().enumerate() {
                let (pj, qj) = (x.v.p.0[j], x.v.q.0[j]);
                let hp = (pj - i * qj) * (i * aj * z.conj()).exp();
                let hm = (pj + i * qj) * (i * aj * z).exp();
                let p_in = 0.5 * (hp + hm);
                let q_in = 0.5 * i * (hp - hm);
                let (op, oq) = (outer.p.0[j], outer.q.0[j]);
                om += aj
                    * Complex64::new(
                        (p_in * op.conj()).im - (q_in * oq.conj()).im,
                        (p_in * oq.conj()).im + (q_in * op.conj()).im,
                    );
            }
            inner_acc += weight(l) * om;
        }
        central_acc += wk * t * (inner_acc * h / 3.0);
    }
    Ok(ComplexGroupElement {
        z: x.z + 0.5 * (central_acc * h / 3.0),
        v: vector_acc.scale_ext(Complex64::new(h / 3.0, 0.0)),
        s: x.s,
    })
}

/// The involution `(z,v,s)* = (z̄, σ(v), s̄)⁻¹`, an antiholomorphic
/// antiautomorphism restricting to the identity on the real points.
pub fn star(spec: &Spectrum, g: &ComplexGroupElement) -> ComplexGroupElement {
    let tau = ComplexGroupElement { z: g.z.conj(), v: sigma(&g.v), s: g.s.conj() };
    inv_c(spec, &tau)
}

/// Logarithmic derivative of `exp_ℂ` at a Cartan base point:
/// `δ(exp_ℂ)_X(Y) = ∫₀¹ Ad(−tX)Y dt = (Y_z, B_{−X_s}Y_v, Y_s)`.
///
/// Only base points with zero vector slot are supported; the closed form for
/// general base points is not available.
pub fn log_derivative(
    spec: &Spectrum,
    base: &ComplexAlgebraElement,
    dir: &ComplexAlgebraElement,
) -> Result<ComplexAlgebraElement> {
    if base.v.max_abs() != 0.0 {
        return Err(Error::UnsupportedDirection);
    }
    Ok(ComplexAlgebraElement {
        z: dir.z,
        v: b_c(spec, -base.s, &dir.v),
        s: dir.s,
    })
}

/// Seminorm `q_m` on the complexification, with `‖p + εq‖² = ‖p‖² + ‖q‖²`.
pub fn qn_seminorm_c(spec: &Spectrum, v: &CVector, m: u32) -> f64 {
    assert_eq!(v.len(), spec.n());
    let mut weights = vec![1.0; spec.n()];
    let mut coeff = 1.0f64;
    let mut total = 0.0f64;
    for k in 0..10_000 {
        let norm_sq: f64 = v
            .p
            .0
            .iter()
            .zip(&v.q.0)
            .zip(&weights)
            .map(|((&pj, &qj), &wj)| wj * wj * (pj.norm_sqr() + qj.norm_sqr()))
            .sum();
        let term = coeff * norm_sq.sqrt();
        total += term;
        if k > 0 && term < QN_TERM_THRESHOLD * total {
            break;
        }
        for (w, &a) in weights.iter_mut().zip(spec.eigs()) {
            *w *= a;
        }
        coeff *= f64::from(m) / (k as f64 + 1.0);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_real;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn spec2() -> Spectrum {
        Spectrum::new(vec![1.0, 2.5]).unwrap()
    }

    fn sample_cv(seed: f64) -> CVector {
        CVector {
            p: ModeVector(vec![c(0.4 * seed, -0.2), c(0.3, 0.6 * seed)]),
            q: ModeVector(vec![c(-0.1, 0.5 * seed), c(0.25 * seed, 0.15)]),
        }
    }

    /// Truncated power series Σ z^k D_ℂ^k v / k!, the definitional oracle
    /// for `γ_ℂ`.
    fn gamma_c_series(spec: &Spectrum, z: Complex64, v: &CVector, terms: usize) -> CVector {
        let mut acc = CVector::zeros(spec.n());
        let mut term = v.clone();
        for k in 0..terms {
            acc = acc.add(&term);
            term = d_c(spec, &term).scale_ext(z / (k as f64 + 1.0));
        }
        acc
    }

    #[test]
    fn sigma_fixes_real_points_and_is_involutive() {
        let x = ModeVector(vec![c(0.7, -0.4), c(0.1, 0.9)]);
        let real = CVector::embed(&x);
        assert_eq!(sigma(&real), real);
        let v = sample_cv(1.0);
        assert_eq!(sigma(&sigma(&v)), v);
        // ⟨x, σx⟩ for a real-embedded x is the real ‖x‖² of b; the σ is
        // already absorbed by inner_c
        let got = inner_c(&real, &real);
        assert!((got - c(x.norm_sqr(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn gamma_c_extends_gamma_and_matches_series() {
        let spec = spec2();
        let x = ModeVector(vec![c(0.8, 0.2), c(-0.5, 0.3)]);
        let real = CVector::embed(&x);
        let rotated = gamma_c(&spec, c(0.73, 0.0), &real);
        assert!(rotated.p.max_abs_diff(&spec.apply_gamma(0.73, &x)) < 1e-14);
        assert!(rotated.q.max_abs() < 1e-14);

        // n = 1, a = 1, z = ε·ln 2, v = (1, 0) → (cosh ln2, i sinh ln2) = (1.25, 0.75i)
        let one = Spectrum::new(vec![1.0]).unwrap();
        let v = CVector::embed(&ModeVector(vec![c(1.0, 0.0)]));
        let got = gamma_c(&one, c(0.0, 2.0f64.ln()), &v);
        assert!((got.p.0[0] - c(1.25, 0.0)).norm() < 1e-14);
        assert!((got.q.0[0] - c(0.0, 0.75)).norm() < 1e-14);

        let z = c(0.4, -0.9);
        let w = sample_cv(0.7);
        let series = gamma_c_series(&spec, z, &w, 60);
        assert!(gamma_c(&spec, z, &w).max_abs_diff(&series) < 1e-12);
    }

    #[test]
    fn sigma_intertwines_gamma_c() {
        // σγ_ℂ(z) = γ_ℂ(z̄)σ
        let spec = spec2();
        for k in 0..8 {
            let z = c(0.4 * k as f64 - 1.2, 0.7 - 0.3 * k as f64);
            let v = sample_cv(0.9 - 0.25 * k as f64);
            let lhs = sigma(&gamma_c(&spec, z, &v));
            let rhs = gamma_c(&spec, z.conj(), &sigma(&v));
            assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        }
    }

    #[test]
    fn exp_c_central_slot_on_imaginary_vectors() {
        // the central slot of exp_ℂ(0, ix, is) collapses to
        // (i/2s)(Re⟨x, f_s(A)⁻¹x⟩ − ‖x‖²) for real x, s
        let spec = spec2();
        let x = ModeVector(vec![c(0.7, -0.4), c(0.3, 0.9)]);
        for &s in &[0.6, -1.3, 2.1] {
            let got = exp_c(
                &spec,
                &ComplexAlgebraElement {
                    z: Complex64::ZERO,
                    v: CVector::embed_imag(&x),
                    s: c(0.0, s),
                },
            )
            .z;
            let finv = spec.apply_f_inv(c(s, 0.0), &x).unwrap();
            let expected = c(0.0, (x.b_inner(&finv) - x.norm_sqr()) / (2.0 * s));
            assert!((got - expected).norm() < 1e-13, "defect {:e}", (got - expected).norm());
        }
    }

    #[test]
    fn gamma_c_preserves_the_sigma_pairing() {
        let spec = spec2();
        for k in 0..8 {
            let z = c(0.3 * k as f64 - 1.0, 0.45 * k as f64 - 1.5);
            let x = sample_cv(0.2 * k as f64 + 0.3);
            let moved = gamma_c(&spec, z, &x);
            let lhs = inner_c(&moved, &moved);
            let rhs = inner_c(&x, &x);
            assert!((lhs - rhs).norm() < 1e-11, "pairing drift {:e}", (lhs - rhs).norm());
        }
    }

    #[test]
    fn gamma_c_is_an_action() {
        let spec = spec2();
        let v = sample_cv(1.3);
        let (z1, z2) = (c(0.7, -0.2), c(-0.4, 0.9));
        let lhs = gamma_c(&spec, z1, &gamma_c(&spec, z2, &v));
        let rhs = gamma_c(&spec, z1 + z2, &v);
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn bilinear_forms_extend_the_real_ones() {
        let spec = spec2();
        let x = ModeVector(vec![c(0.2, 0.6), c(-0.7, 0.1)]);
        let y = ModeVector(vec![c(0.9, -0.3), c(0.4, 0.8)]);
        let (xe, ye) = (CVector::embed(&x), CVector::embed(&y));
        assert!((inner_c(&xe, &ye) - c(x.b_inner(&y), 0.0)).norm() < 1e-14);
        assert!((omega_c(&spec, &xe, &ye) - c(spec.omega(&x, &y), 0.0)).norm() < 1e-14);
        let v = sample_cv(0.8);
        assert!(omega_c(&spec, &v, &v).norm() < 1e-14);
        // ω_ℂ(x,y) = −⟨D_ℂ x, σy⟩, the σ absorbed by inner_c
        for k in 0..6 {
            let v = sample_cv(0.3 * k as f64 - 0.7);
            let w = sample_cv(1.1 - 0.4 * k as f64);
            let lhs = omega_c(&spec, &v, &w);
            let rhs = -inner_c(&d_c(&spec, &v), &w);
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn complex_group_law_restricts_and_inverts() {
        let spec = spec2();
        let g = GroupElement::new(0.4, ModeVector(vec![c(0.3, 0.5), c(-0.2, 0.1)]), -0.9);
        let h = GroupElement::new(-0.7, ModeVector(vec![c(0.6, -0.4), c(0.15, 0.8)]), 1.3);
        let real = group_real::mul(&spec, &g, &h);
        let lifted = mul_c(
            &spec,
            &ComplexGroupElement::embed(&g),
            &ComplexGroupElement::embed(&h),
        );
        assert!(lifted.max_abs_diff(&ComplexGroupElement::embed(&real)) < 1e-13);

        let gc = ComplexGroupElement { z: c(0.2, -0.8), v: sample_cv(0.5), s: c(0.9, 0.4) };
        let prod = mul_c(&spec, &gc, &inv_c(&spec, &gc));
        assert!(prod.max_abs_diff(&ComplexGroupElement::identity(&spec)) < 1e-12);
    }

    #[test]
    fn complex_associativity() {
        let spec = spec2();
        let mk = |k: f64| ComplexGroupElement {
            z: c(0.3 * k, -0.1 * k),
            v: sample_cv(k),
            s: c(0.2 - 0.3 * k, 0.5 * k),
        };
        let (g, h, f) = (mk(0.4), mk(-0.9), mk(1.2));
        let lhs = mul_c(&spec, &mul_c(&spec, &g, &h), &f);
        let rhs = mul_c(&spec, &g, &mul_c(&spec, &h, &f));
        assert!(lhs.max_abs_diff(&rhs) < 1e-11);
    }

    #[test]
    fn exp_c_abelian_directions() {
        let spec = spec2();
        let x = ComplexAlgebraElement {
            z: c(0.7, -0.3),
            v: CVector::zeros(2),
            s: c(1.1, 0.4),
        };
        let got = exp_c(&spec, &x);
        assert!((got.z - x.z).norm() < 1e-15);
        assert!(got.v.max_abs() < 1e-15);
        assert_eq!(got.s, x.s);
        // i·(t,0,s) exponentiates to (it, 0, is)
        let w = AlgebraElement::new(0.6, spec.zero_vector(), -1.4);
        let got = exp_c(&spec, &ComplexAlgebraElement::embed_times_i(&w));
        assert!((got.z - c(0.0, 0.6)).norm() < 1e-15);
        assert!((got.s - c(0.0, -1.4)).norm() < 1e-15);
    }

    #[test]
    fn b_is_identity_on_imaginary_vectors() {
        // B_{is}(ix) = g_s(A)f_s(A)⁻¹x + i·f_s(A)⁻¹x as a CVector identity
        let spec = spec2();
        let x = ModeVector(vec![c(0.9, -0.2), c(0.35, 0.55)]);
        for &s in &[0.7, -1.9, 2.4] {
            let lhs = b_c(&spec, c(0.0, s), &CVector::embed_imag(&x));
            let finv = spec.apply_f_inv(c(s, 0.0), &x).unwrap();
            let expected = CVector {
                p: spec.apply_g(c(s, 0.0), &finv).unwrap(),
                q: finv,
            };
            assert!(lhs.max_abs_diff(&expected) < 1e-11);
        }
    }

    #[test]
    fn star_properties() {
        let spec = spec2();
        // on real-embedded elements * is the inverse
        let g = GroupElement::new(0.8, ModeVector(vec![c(0.2, 0.7), c(-0.5, 0.3)]), -1.2);
        let ge = ComplexGroupElement::embed(&g);
        assert!(star(&spec, &ge).max_abs_diff(&inv_c(&spec, &ge)) < 1e-13);

        let gc = ComplexGroupElement { z: c(0.3, 0.9), v: sample_cv(0.6), s: c(-0.4, 1.1) };
        assert!(star(&spec, &star(&spec, &gc)).max_abs_diff(&gc) < 1e-12);

        // (g·exp_ℂ(iw))* = exp_ℂ(iw)·g⁻¹
        let w = AlgebraElement::new(0.5, ModeVector(vec![c(0.4, -0.1), c(0.2, 0.6)]), 0.9);
        let eiw = exp_c(&spec, &ComplexAlgebraElement::embed_times_i(&w));
        let lhs = star(&spec, &mul_c(&spec, &ge, &eiw));
        let rhs = mul_c(&spec, &eiw, &ComplexGroupElement::embed(&group_real::inv(&spec, &g)));
        assert!(lhs.max_abs_diff(&rhs) < 1e-11);
    }

    #[test]
    fn star_is_an_antiautomorphism() {
        let spec = spec2();
        let g = ComplexGroupElement { z: c(0.3, -0.2), v: sample_cv(0.9), s: c(0.5, 0.7) };
        let h = ComplexGroupElement { z: c(-0.6, 0.4), v: sample_cv(-0.4), s: c(0.8, -0.3) };
        let lhs = star(&spec, &mul_c(&spec, &g, &h));
        let rhs = mul_c(&spec, &star(&spec, &h), &star(&spec, &g));
        assert!(lhs.max_abs_diff(&rhs) < 1e-11);
    }

    #[test]
    fn exp_c_restricts_to_real_exponential() {
        let spec = spec2();
        let x = crate::group_real::AlgebraElement::new(
            0.7,
            ModeVector(vec![c(0.5, -0.3), c(0.2, 0.8)]),
            -1.1,
        );
        let real = crate::group_real::exp(&spec, &x);
        let lifted = exp_c(&spec, &ComplexAlgebraElement::embed(&x));
        assert!(lifted.max_abs_diff(&ComplexGroupElement::embed(&real)) < 1e-14);
        assert!(lifted.v.q.max_abs() < 1e-15);
    }

    #[test]
    fn exp_c_matches_quadrature() {
        let spec = Spectrum::new(vec![0.5, 1.0]).unwrap();
        let x = ComplexAlgebraElement {
            z: c(0.2, -0.5),
            v: sample_cv(0.8),
            s: c(0.9, 1.4),
        };
        let closed = exp_c(&spec, &x);
        let quad = exp_c_quadrature(&spec, &x, 800).unwrap();
        assert!(closed.max_abs_diff(&quad) < 1e-8, "defect {:e}", closed.max_abs_diff(&quad));
    }

    #[test]
    fn log_derivative_cases() {
        let spec = spec2();
        // Cartan base point i·(x0, 0, x2)
        let base = ComplexAlgebraElement::embed_times_i(&AlgebraElement::new(
            0.7,
            spec.zero_vector(),
            1.3,
        ));
        // central directions pass through unchanged
        let dir = ComplexAlgebraElement {
            z: c(0.4, 0.2),
            v: CVector::zeros(2),
            s: c(-0.6, 0.9),
        };
        let got = log_derivative(&spec, &base, &dir).unwrap();
        assert!(got.max_abs_diff(&dir) < 1e-15);

        // non-Cartan base points are rejected
        let bad = ComplexAlgebraElement {
            z: Complex64::ZERO,
            v: sample_cv(0.4),
            s: c(0.0, 1.0),
        };
        assert!(matches!(
            log_derivative(&spec, &bad, &dir),
            Err(Error::UnsupportedDirection)
        ));

        // finite-difference logarithmic derivative oracle
        let dir = ComplexAlgebraElement {
            z: c(0.3, -0.4),
            v: sample_cv(1.1),
            s: c(0.5, 0.2),
        };
        let h = 1e-5;
        let curve = |tau: f64| {
            let shifted = base.add(&dir.scale_re(tau));
            mul_c(
                &spec,
                &inv_c(&spec, &exp_c(&spec, &base)),
                &exp_c(&spec, &shifted),
            )
        };
        let (plus, minus) = (curve(h), curve(-h));
        let fd = ComplexAlgebraElement {
            z: (plus.z - minus.z) / (2.0 * h),
            v: plus.v.sub(&minus.v).scale_ext(c(1.0 / (2.0 * h), 0.0)),
            s: (plus.s - minus.s) / (2.0 * h),
        };
        let closed = log_derivative(&spec, &base, &dir).unwrap();
        assert!(closed.max_abs_diff(&fd) < 1e-6, "defect {:e}", closed.max_abs_diff(&fd));
    }

    #[test]
    fn log_derivative_correction_lands_in_real_part() {
        // choosing a₁ = f_{−x₂}(A)y₁ − y₁ makes δ(exp_ℂ)_{ix}(i(y+a)) − iy real
        let spec = spec2();
        let x2 = 0.9;
        let base = ComplexAlgebraElement::embed_times_i(&AlgebraElement::new(
            0.3,
            spec.zero_vector(),
            x2,
        ));
        let y = AlgebraElement::new(0.8, ModeVector(vec![c(0.5, 0.1), c(-0.3, 0.7)]), -0.4);
        let a1 = spec
            .apply_f(c(-x2, 0.0), &y.x)
            .unwrap()
            .sub(&y.x);
        let y_plus_a = AlgebraElement::new(y.t, y.x.add(&a1), y.s);
        let out = log_derivative(
            &spec,
            &base,
            &ComplexAlgebraElement::embed_times_i(&y_plus_a),
        )
        .unwrap();
        // out − iy must be a real algebra element: q-slot equal to y.x, real slots zero
        assert!((out.z - c(0.0, y.t)).norm() < 1e-13);
        assert!((out.s - c(0.0, y.s)).norm() < 1e-13);
        assert!(out.v.q.max_abs_diff(&y.x) < 1e-12);
    }

    #[test]
    fn seminorm_growth_bound_sample() {
        let spec = spec2();
        let v = ModeVector(vec![c(0.6, -0.3), c(0.2, 0.4)]);
        for k in 1..8 {
            let z = c(0.3 * k as f64, -0.25 * k as f64);
            let c_shift = z.norm().ceil() as u32;
            let moved = gamma_c(&spec, z, &CVector::embed(&v));
            let lhs = qn_seminorm_c(&spec, &moved, 2);
            let rhs = spec.qn_seminorm(&v, 2 + c_shift);
            assert!(lhs <= rhs, "q_m growth bound violated: {lhs} > {rhs}");
        }
    }
}
