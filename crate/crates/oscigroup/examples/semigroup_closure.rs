//! Closure evidence for the subsemigroups S_d: products of random elements
//! keep a positive cone margin, and the barrier decreases along
//! right-translated one-parameter curves.
//!
//! ```bash
//! cargo run --release --example semigroup_closure
//! ```

use oscigroup::cones::{ConeD, ConeParameter};
use oscigroup::sample::Sampler;
use oscigroup::semigroup::{curve_monotone_check, mul_s, polar_compose, sd_membership};
use oscigroup::spectral::Spectrum;

fn main() {
    let spec = Spectrum::new(vec![1.0, 2.5]).unwrap();
    let mut sampler = Sampler::new(2024);

    for d in [ConeD::Finite(-1.0), ConeD::Finite(0.0), ConeD::Finite(1.0), ConeD::Infinite] {
        let cone = ConeParameter::positive(d);
        let mut min_margin = f64::INFINITY;
        let trials = 200;
        for _ in 0..trials {
            let e1 = polar_compose(
                &spec,
                &sampler.group_element(&spec),
                &sampler.cone_point(&spec, &cone, 1e-6),
            )
            .unwrap();
            let e2 = polar_compose(
                &spec,
                &sampler.group_element(&spec),
                &sampler.cone_point(&spec, &cone, 1e-6),
            )
            .unwrap();
            let q = sd_membership(&spec, &mul_s(&spec, &e1, &e2), &cone).unwrap();
            min_margin = min_margin.min(q.margin);
        }
        println!("d = {d:>4}: {trials} random products, min polar margin = {min_margin:+.6e}");
    }

    // h_d along c(τ) = exp_ℂ(ix)·exp_ℂ(τ·iy) is nonincreasing
    let cone = ConeParameter::positive(ConeD::Finite(0.0));
    let x = sampler.cone_point(&spec, &cone, 0.5);
    let y = sampler.cone_point(&spec, &cone, 0.5);
    let values = curve_monotone_check(&spec, &x, &y, &cone, 8).unwrap();
    println!("barrier along the curve (9 samples):");
    for (k, v) in values.iter().enumerate() {
        println!("  τ = {:.3}: h_d = {v:.9}", k as f64 / 8.0);
    }
}
