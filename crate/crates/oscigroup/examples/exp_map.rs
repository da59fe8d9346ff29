//! The exponential map of a standard oscillator group: closed form against
//! the defining double-integral quadrature, plus the one-parameter law.
//!
//! ```bash
//! cargo run --release --example exp_map
//! ```

use num_complex::Complex64;
use oscigroup::group_real::{exp, exp_quadrature, mul, AlgebraElement};
use oscigroup::spectral::{ModeVector, Spectrum};

fn main() {
    let spec = Spectrum::new(vec![1.0, 2.5]).unwrap();
    let x = AlgebraElement::new(
        0.4,
        ModeVector(vec![
            Complex64::new(0.8, -0.1),
            Complex64::new(0.3, 0.5),
        ]),
        1.2,
    );

    let closed = exp(&spec, &x);
    println!("exp(0.4, x, 1.2) closed form:");
    println!("  t = {:+.12}", closed.t);
    for (j, c) in closed.x.0.iter().enumerate() {
        println!("  x[{j}] = {:+.12} {:+.12}i", c.re, c.im);
    }
    println!("  s = {:+.12}", closed.s);

    for steps in [200, 400, 800] {
        let quad = exp_quadrature(&spec, &x, steps).unwrap();
        println!(
            "quadrature oracle, {steps:4} Simpson steps: max-abs defect {:.3e}",
            closed.max_abs_diff(&quad)
        );
    }

    // exp(k₁X)·exp(k₂X) = exp((k₁+k₂)X)
    let lhs = mul(&spec, &exp(&spec, &x.scale(0.6)), &exp(&spec, &x.scale(0.7)));
    let rhs = exp(&spec, &x.scale(1.3));
    println!(
        "one-parameter law residual at k1=0.6, k2=0.7: {:.3e}",
        lhs.max_abs_diff(&rhs)
    );
}
