//! Two-unit bookkeeping in the complexified group: the holomorphic action
//! γ_ℂ, the closed-form exp_ℂ against its quadrature oracle, the involution,
//! and the kernel identity behind the polar machinery.
//!
//! ```bash
//! cargo run --release --example complexified_group
//! ```

use num_complex::Complex64;
use oscigroup::group_complex::{
    b_c, exp_c, exp_c_quadrature, gamma_c, mul_c, star, ComplexAlgebraElement,
    ComplexGroupElement, CVector,
};
use oscigroup::group_real::{inv, GroupElement};
use oscigroup::spectral::{ModeVector, Spectrum};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    // one mode, a = 1: γ_ℂ(ε·ln 2) maps (1, 0) to (cosh ln2, i·sinh ln2)
    let one = Spectrum::new(vec![1.0]).unwrap();
    let v = CVector::embed(&ModeVector(vec![c(1.0, 0.0)]));
    let moved = gamma_c(&one, c(0.0, 2.0f64.ln()), &v);
    println!(
        "γ_ℂ(ε·ln2)(1 + ε·0) = ({:+.4}{:+.4}i) + ε({:+.4}{:+.4}i)",
        moved.p.0[0].re, moved.p.0[0].im, moved.q.0[0].re, moved.q.0[0].im
    );

    let spec = Spectrum::new(vec![0.5, 1.0]).unwrap();
    let x = ComplexAlgebraElement {
        z: c(0.2, -0.5),
        v: CVector {
            p: ModeVector(vec![c(0.4, -0.2), c(0.3, 0.6)]),
            q: ModeVector(vec![c(-0.1, 0.5), c(0.25, 0.15)]),
        },
        s: c(0.9, 1.4),
    };
    let closed = exp_c(&spec, &x);
    let quad = exp_c_quadrature(&spec, &x, 800).unwrap();
    println!(
        "exp_ℂ closed form vs 800-step double-integral oracle: defect {:.3e}",
        closed.max_abs_diff(&quad)
    );

    // (g·exp_ℂ(iw))* = exp_ℂ(iw)·g⁻¹
    let g = GroupElement::new(0.8, ModeVector(vec![c(0.2, 0.7), c(-0.5, 0.3)]), -1.2);
    let w = oscigroup::group_real::AlgebraElement::new(
        0.5,
        ModeVector(vec![c(0.4, -0.1), c(0.2, 0.6)]),
        0.9,
    );
    let eiw = exp_c(&spec, &ComplexAlgebraElement::embed_times_i(&w));
    let lhs = star(&spec, &mul_c(&spec, &ComplexGroupElement::embed(&g), &eiw));
    let rhs = mul_c(&spec, &eiw, &ComplexGroupElement::embed(&inv(&spec, &g)));
    println!("(g·exp_ℂ(iw))* vs exp_ℂ(iw)·g⁻¹: defect {:.3e}", lhs.max_abs_diff(&rhs));

    // B_{is}(ix) = g_s(A)f_s(A)⁻¹x + i·f_s(A)⁻¹x, the hinge of ψ⁻¹
    let xv = ModeVector(vec![c(0.9, -0.2), c(0.35, 0.55)]);
    let s = 1.7;
    let lhs = b_c(&spec, c(0.0, s), &CVector::embed_imag(&xv));
    let finv = spec.apply_f_inv(c(s, 0.0), &xv).unwrap();
    let rhs = CVector { p: spec.apply_g(c(s, 0.0), &finv).unwrap(), q: finv };
    println!("B kernel identity at s = {s}: defect {:.3e}", lhs.max_abs_diff(&rhs));
}
