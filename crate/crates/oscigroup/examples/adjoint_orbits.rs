//! Adjoint and coadjoint actions: the finite-difference conjugation oracle,
//! duality of the pairing, and the orbit invariant `F`.
//!
//! ```bash
//! cargo run --release --example adjoint_orbits
//! ```

use num_complex::Complex64;
use oscigroup::cones::f_project;
use oscigroup::group_real::{ad, coad, exp, inv, mul, AlgebraElement, CoAlgebraElement, GroupElement};
use oscigroup::spectral::{ModeVector, Spectrum};

fn main() {
    let spec = Spectrum::new(vec![1.0, 2.5]).unwrap();
    let g = GroupElement::new(
        0.3,
        ModeVector(vec![Complex64::new(0.5, -0.2), Complex64::new(0.1, 0.7)]),
        -0.9,
    );
    let x = AlgebraElement::new(
        0.8,
        ModeVector(vec![Complex64::new(0.4, 0.6), Complex64::new(-0.3, 0.2)]),
        1.5,
    );

    // Ad(g)X against (d/dτ)|₀ g·exp(τX)·g⁻¹
    let moved = ad(&spec, &g, &x);
    let h = 1e-5;
    let conj = |tau: f64| mul(&spec, &mul(&spec, &g, &exp(&spec, &x.scale(tau))), &inv(&spec, &g));
    let (plus, minus) = (conj(h), conj(-h));
    let fd = AlgebraElement::new(
        (plus.t - minus.t) / (2.0 * h),
        plus.x.sub(&minus.x).scale_re(1.0 / (2.0 * h)),
        (plus.s - minus.s) / (2.0 * h),
    );
    println!("Ad(g)X          = ({:+.9}, x, {:+.9})", moved.t, moved.s);
    println!("finite diff     = ({:+.9}, x, {:+.9})", fd.t, fd.s);
    println!("defect          = {:.3e}", moved.max_abs_diff(&fd));

    // coadjoint duality: Ad*(g)λ paired with X equals λ paired with Ad(g⁻¹)X
    let lam = CoAlgebraElement::new(
        1.4,
        ModeVector(vec![Complex64::new(0.2, -0.8), Complex64::new(0.6, 0.1)]),
        -0.5,
    );
    let lhs = coad(&spec, &g, &lam).pair(&x);
    let rhs = lam.pair(&ad(&spec, &inv(&spec, &g), &x));
    println!("duality pairing = {lhs:+.12} vs {rhs:+.12} (residual {:.3e})", (lhs - rhs).abs());

    // F(t,x,s) = (t − ‖x‖²/2s, 0, s) is constant along adjoint orbits
    let before = f_project(&x).unwrap();
    let after = f_project(&ad(&spec, &g, &x)).unwrap();
    println!(
        "orbit invariant F: ({:+.9}, 0, {:+.9}), drift under Ad = {:.3e}",
        before.t,
        before.s,
        before.max_abs_diff(&after)
    );
}
