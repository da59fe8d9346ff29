//! The Fourier representation of the kernel f̃: composite-Simpson quadrature
//! of ∫ f̂(t)e^{ixt} dt against the closed form 2x/(e^x − e^{−x}).
//!
//! ```bash
//! cargo run --release --example fourier_kernel
//! ```

use oscigroup::spectral::{fourier_fhat, fourier_fhat_check};

fn main() {
    println!("f̂(0) = {:.12} (π/4 = {:.12})", fourier_fhat(0.0), std::f64::consts::FRAC_PI_4);
    println!();
    println!("   x     quadrature          closed form         |difference|");
    for k in 0..=12 {
        let x = -3.0 + 0.5 * k as f64;
        let (quad, exact) = fourier_fhat_check(x, 40.0, 80_000).unwrap();
        println!("{x:+5.1}   {quad:.15}   {exact:.15}   {:.3e}", (quad - exact).abs());
    }
    println!();
    for steps in [4000, 20_000, 80_000] {
        let (quad, exact) = fourier_fhat_check(2.0, 40.0, steps).unwrap();
        println!("x = 2, {steps:>6} steps: error {:.3e}", (quad - exact).abs());
    }
}
