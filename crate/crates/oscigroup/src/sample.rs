//! Deterministic random sampling for the verification suites.
//!
//! All randomness flows through a seeded ChaCha8 stream, so a report is a
//! pure function of `(seed, spectrum, trials, tolerance, truncation)`. The
//! sampling boxes below are the documented desk-scale defaults; tolerances
//! quoted by the suites are calibrated against them.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cones::{ConeD, ConeParameter, Sign};
use crate::group_complex::{CVector, ComplexAlgebraElement};
use crate::group_real::{AlgebraElement, CoAlgebraElement, GroupElement};
use crate::spectral::{ModeVector, Spectrum};

/// Sampling boxes shared by suites and documented in the README.
pub mod boxes {
    /// Central coordinate box `|t| ≤ 3`.
    pub const T: f64 = 3.0;
    /// Vector norm bound for group/polar sampling.
    pub const X_NORM: f64 = 3.0;
    /// Time coordinate box `|s| ≤ 3`.
    pub const S: f64 = 3.0;
    /// Polar `s`-part range `[0.1, 3]`.
    pub const POLAR_S_LO: f64 = 0.1;
    pub const POLAR_S_HI: f64 = 3.0;
    /// Vector norm bound for the exponential-map quadrature suite.
    pub const EXP_X_NORM: f64 = 2.0;
    /// Vector norm bound and `s`-part floor for Fock-representation checks.
    pub const FOCK_X_NORM: f64 = 1.0;
    pub const FOCK_S_LO: f64 = 0.5;
    pub const FOCK_S_HI: f64 = 2.0;
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn complex_box(&mut self, r: f64) -> Complex64 {
        Complex64::new(self.uniform(-r, r), self.uniform(-r, r))
    }

    /// Uniform point of the closed disc `|z| ≤ r`.
    pub fn complex_in_disc(&mut self, r: f64) -> Complex64 {
        loop {
            let z = self.complex_box(r);
            if z.norm() <= r {
                return z;
            }
        }
    }

    /// Random direction scaled to a norm uniform in `(0, max_norm]`.
    pub fn mode_vector(&mut self, spec: &Spectrum, max_norm: f64) -> ModeVector {
        loop {
            let raw = ModeVector(
                (0..spec.n()).map(|_| self.complex_box(1.0)).collect(),
            );
            let norm = raw.norm();
            if norm > 1e-6 {
                let target = self.uniform(1e-3, max_norm.max(2e-3));
                return raw.scale_re(target / norm);
            }
        }
    }

    pub fn group_element(&mut self, spec: &Spectrum) -> GroupElement {
        GroupElement::new(
            self.uniform(-boxes::T, boxes::T),
            self.mode_vector(spec, boxes::X_NORM),
            self.uniform(-boxes::S, boxes::S),
        )
    }

    pub fn algebra_element(&mut self, spec: &Spectrum, x_norm: f64) -> AlgebraElement {
        AlgebraElement::new(
            self.uniform(-boxes::T, boxes::T),
            self.mode_vector(spec, x_norm),
            self.uniform(-boxes::S, boxes::S),
        )
    }

    pub fn coalgebra_element(&mut self, spec: &Spectrum) -> CoAlgebraElement {
        CoAlgebraElement::new(
            self.uniform(-boxes::T, boxes::T),
            self.mode_vector(spec, boxes::X_NORM),
            self.uniform(-boxes::S, boxes::S),
        )
    }

    pub fn cvector(&mut self, spec: &Spectrum, max_norm: f64) -> CVector {
        CVector {
            p: self.mode_vector(spec, max_norm),
            q: self.mode_vector(spec, max_norm),
        }
    }

    /// Complexified algebra element with `|s| ≤ s_max` (uniform in the disc).
    pub fn complex_algebra(
        &mut self,
        spec: &Spectrum,
        x_norm: f64,
        s_max: f64,
    ) -> ComplexAlgebraElement {
        ComplexAlgebraElement {
            z: self.complex_box(boxes::T),
            v: self.cvector(spec, x_norm),
            s: self.complex_in_disc(s_max),
        }
    }

    /// Polar part strictly inside `W_∞`: `s ∈ [s_lo, s_hi]`, `‖x‖ ≤ x_norm`.
    pub fn polar_part(&mut self, spec: &Spectrum, x_norm: f64, s_lo: f64, s_hi: f64) -> AlgebraElement {
        AlgebraElement::new(
            self.uniform(-boxes::T, boxes::T),
            self.mode_vector(spec, x_norm),
            self.uniform(s_lo, s_hi),
        )
    }

    /// Element strictly inside `sign·W_d` with `f_d`-margin at least `margin`.
    pub fn cone_point(&mut self, spec: &Spectrum, cone: &ConeParameter, margin: f64) -> AlgebraElement {
        let s = self.uniform(0.3, 2.5);
        let x = self.mode_vector(spec, 2.0);
        let t = match cone.d {
            ConeD::Infinite => self.uniform(-boxes::T, boxes::T),
            ConeD::Finite(d) => {
                margin + self.uniform(0.0, 2.0) + x.norm_sqr() / (2.0 * s) - d * s
            }
        };
        let point = AlgebraElement::new(t, x, s);
        match cone.sign {
            Sign::Plus => point,
            Sign::Minus => point.neg(),
        }
    }
}
