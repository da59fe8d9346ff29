//! The invariant cone family W_d: the defining function f_d, tri-state
//! membership, superadditivity, and barrier blow-up at the boundary.
//!
//! ```bash
//! cargo run --release --example cone_membership
//! ```

use num_complex::Complex64;
use oscigroup::cones::{f_d, h_d, membership, ConeD, ConeParameter};
use oscigroup::group_real::AlgebraElement;
use oscigroup::spectral::ModeVector;

fn main() {
    let x = AlgebraElement::new(
        3.0,
        ModeVector(vec![Complex64::new(2.0, 0.0)]), // ‖x‖ = 2
        1.0,
    );
    println!("element (t, x, s) = (3, ‖x‖=2, 1)");
    for d in [-1.0, 0.0, 1.0] {
        let cone = ConeParameter::positive(ConeD::Finite(d));
        let q = membership(&x, &cone);
        println!(
            "  d = {d:+}: f_d = {:+.6}, member = {}, margin = {:+.3e}, state = {:?}",
            f_d(&x, d).unwrap(),
            q.member,
            q.margin,
            q.state
        );
    }
    let inf = ConeParameter::positive(ConeD::Infinite);
    let q = membership(&x, &inf);
    println!("  d = inf: member = {}, margin = {:+.3e}", q.member, q.margin);

    // superadditivity: f_d(a+b) ≥ f_d(a) + f_d(b)
    let y = AlgebraElement::new(1.5, ModeVector(vec![Complex64::new(0.4, 0.9)]), 0.7);
    let d = 0.0;
    let defect = f_d(&x.add(&y), d).unwrap() - f_d(&x, d).unwrap() - f_d(&y, d).unwrap();
    println!("superadditivity defect at d=0: {defect:+.6e} (must be ≥ 0)");

    // the barrier h_d blows up along a segment to the f_d = 0 face
    let cone = ConeParameter::positive(ConeD::Finite(0.0));
    let boundary = AlgebraElement::new(x.t - f_d(&x, 0.0).unwrap(), x.x.clone(), x.s);
    println!("barrier along the segment interior -> boundary:");
    for k in [0.0, 0.9, 0.99, 0.999, 0.999999, 1.0 - 1e-8] {
        let p = x.scale(1.0 - k).add(&boundary.scale(k));
        match h_d(&p, &cone) {
            Ok(v) => println!("  λ = {k:<12} h_d = {v:.6e}"),
            Err(e) => println!("  λ = {k:<12} {e}"),
        }
    }
}
