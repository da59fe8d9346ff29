//! The momentum map of the Fock representation: values on vacuum and
//! excited states, and the support-function bound Φ([v])(w) ≥ −s_π(w).
//!
//! ```bash
//! cargo run --release --example momentum_map
//! ```

use nalgebra::DVector;
use num_complex::Complex64;
use oscigroup::fock::{support_function, FockSpace, FockVector};
use oscigroup::group_real::AlgebraElement;
use oscigroup::spectral::{ModeVector, Spectrum};

fn main() {
    let spec = Spectrum::new(vec![1.0, 1.5]).unwrap();
    let fs = FockSpace::new(spec.clone(), 12);
    println!("2 modes (a = 1, 1.5), cutoff N = 12, dim = {}", fs.dim());

    let x = AlgebraElement::new(
        1.3,
        ModeVector(vec![Complex64::new(0.4, 0.2), Complex64::new(-0.6, 0.1)]),
        0.7,
    );
    println!("Φ([Ω])(t=1.3, x, s=0.7) = {:.12} (vacuum sees only t)", fs.momentum(&fs.vacuum(), &x).unwrap());

    // one quantum in each mode
    for j in 0..2 {
        let mut amps = DVector::zeros(fs.dim());
        let target: Vec<usize> = (0..2).map(|k| usize::from(k == j)).collect();
        let idx = fs.basis().iter().position(|m| *m == target).unwrap();
        amps[idx] = Complex64::ONE;
        let v = FockVector(amps);
        println!(
            "Φ([|mode {j}⟩])(X) = {:.12} (adds s·a_{j} = {:.2})",
            fs.momentum(&v, &x).unwrap(),
            x.s * spec.eigs()[j]
        );
    }

    // the momentum set lies above −s_π on W_∞
    let w = AlgebraElement::new(
        0.2,
        ModeVector(vec![Complex64::new(0.5, -0.3), Complex64::new(0.1, 0.6)]),
        0.9,
    );
    let s_pi = support_function(&w).unwrap();
    let mut amps = DVector::zeros(fs.dim());
    for k in 0..fs.dim_at(6) {
        amps[k] = Complex64::new(0.1 * (k as f64).sin(), 0.05 * (k as f64).cos());
    }
    let v = FockVector(amps);
    let value = fs.momentum(&v, &w).unwrap();
    println!();
    println!("support bound on W_∞: Φ([v])(w) = {value:+.9} ≥ −s_π(w) = {:+.9}", -s_pi);
    assert!(value >= -s_pi - 1e-9);
}
