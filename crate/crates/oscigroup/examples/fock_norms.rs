//! The holomorphic extension on the truncated Fock space: its operator norm
//! follows e^{‖x‖²/(2s) − t} (the absolute value α₀), with truncation drift
//! vanishing as the cutoff grows.
//!
//! ```bash
//! cargo run --release --example fock_norms
//! ```

use num_complex::Complex64;
use oscigroup::fock::{support_function, FockSpace};
use oscigroup::group_real::{AlgebraElement, GroupElement};
use oscigroup::semigroup::{alpha_a, polar_compose};
use oscigroup::spectral::{ModeVector, Spectrum};

fn main() {
    let spec = Spectrum::new(vec![1.0]).unwrap();
    let w = AlgebraElement::new(
        -0.3,
        ModeVector(vec![Complex64::new(0.6, 0.8)]), // ‖x‖ = 1
        1.0,
    );
    let g = GroupElement::new(0.7, ModeVector(vec![Complex64::new(0.2, -0.4)]), 0.9);
    let e = polar_compose(&spec, &g, &w).unwrap();

    let s_pi = support_function(&w).unwrap();
    let alpha0 = alpha_a(&spec, &e, 0.0).unwrap();
    println!("polar part w = (t={}, ‖x‖=1, s={})", w.t, w.s);
    println!("support function s_π(w) = {s_pi:.9}");
    println!("absolute value α₀(e)   = {alpha0:.9} (= e^{{s_π}})");
    println!();
    println!("cutoff N    dim   ‖π̂(e)‖            gap to α₀");
    for cutoff in [10, 15, 20, 25, 30, 35] {
        let fs = FockSpace::new(spec.clone(), cutoff);
        let norm = fs.pi_hat(&e).unwrap().norm();
        println!(
            "  {cutoff:>3}     {dim:>4}   {norm:.12}   {gap:+.3e}",
            dim = fs.dim(),
            gap = alpha0 - norm
        );
    }

    // the semigroup law of π̂, measured on the occupation ≤ N/2 compression
    let fs = FockSpace::new(spec.clone(), 30);
    let w2 = AlgebraElement::new(0.4, ModeVector(vec![Complex64::new(-0.5, 0.1)]), 0.8);
    let e2 = polar_compose(&spec, &GroupElement::identity(&spec), &w2).unwrap();
    let product = oscigroup::semigroup::mul_s(&spec, &e, &e2);
    let defect = fs
        .pi_hat(&e)
        .unwrap()
        .mul(&fs.pi_hat(&e2).unwrap())
        .sub(&fs.pi_hat(&product).unwrap())
        .compress(fs.dim_at(15))
        .norm();
    println!();
    println!("semigroup law defect at N = 30 (compressed): {defect:.3e}");
}
