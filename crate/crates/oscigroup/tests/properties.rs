//! Property-based invariants over random spectra and elements.

use num_complex::Complex64;
use proptest::prelude::*;

use oscigroup::cones::{membership, ConeD, ConeParameter};
use oscigroup::group_complex::{gamma_c, mul_c, star, ComplexGroupElement, CVector};
use oscigroup::group_real::{ad, coad, exp, inv, mul, AlgebraElement, CoAlgebraElement, GroupElement};
use oscigroup::spectral::{ModeVector, Spectrum};

fn spectrum_strategy() -> impl Strategy<Value = Spectrum> {
    prop::collection::vec(0.3f64..3.0, 1..=3).prop_map(|eigs| Spectrum::new(eigs).unwrap())
}

fn complex_entry() -> impl Strategy<Value = Complex64> {
    (-1.5f64..1.5, -1.5f64..1.5).prop_map(|(re, im)| Complex64::new(re, im))
}

fn mode_vector(n: usize) -> impl Strategy<Value = ModeVector> {
    prop::collection::vec(complex_entry(), n).prop_map(ModeVector)
}

fn group_element(n: usize) -> impl Strategy<Value = GroupElement> {
    (-2.0f64..2.0, mode_vector(n), -2.0f64..2.0).prop_map(|(t, x, s)| GroupElement::new(t, x, s))
}

fn algebra_element(n: usize) -> impl Strategy<Value = AlgebraElement> {
    (-2.0f64..2.0, mode_vector(n), -2.0f64..2.0).prop_map(|(t, x, s)| AlgebraElement::new(t, x, s))
}

fn coalgebra_element(n: usize) -> impl Strategy<Value = CoAlgebraElement> {
    (-2.0f64..2.0, mode_vector(n), -2.0f64..2.0)
        .prop_map(|(t, a, s)| CoAlgebraElement::new(t, a, s))
}

fn with_spectrum<G, S>(g: G) -> impl Strategy<Value = (Spectrum, S::Value)>
where
    G: Fn(usize) -> S,
    S: Strategy,
{
    spectrum_strategy().prop_flat_map(move |spec| {
        let n = spec.n();
        (Just(spec), g(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms((spec, (g, h, k)) in with_spectrum(|n| (group_element(n), group_element(n), group_element(n)))) {
        let assoc = mul(&spec, &mul(&spec, &g, &h), &k)
            .max_abs_diff(&mul(&spec, &g, &mul(&spec, &h, &k)));
        prop_assert!(assoc < 1e-12);
        let e = GroupElement::identity(&spec);
        prop_assert!(mul(&spec, &g, &inv(&spec, &g)).max_abs_diff(&e) < 1e-13);
        prop_assert!(inv(&spec, &inv(&spec, &g)).max_abs_diff(&g) < 1e-13);
    }

    #[test]
    fn exp_one_parameter_group((spec, (x, k1, k2)) in with_spectrum(|n| (algebra_element(n), -1.5f64..1.5, -1.5f64..1.5))) {
        let lhs = mul(&spec, &exp(&spec, &x.scale(k1)), &exp(&spec, &x.scale(k2)));
        let rhs = exp(&spec, &x.scale(k1 + k2));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-11);
    }

    #[test]
    fn adjoint_is_action((spec, (g, h, x)) in with_spectrum(|n| (group_element(n), group_element(n), algebra_element(n)))) {
        let lhs = ad(&spec, &mul(&spec, &g, &h), &x);
        let rhs = ad(&spec, &g, &ad(&spec, &h, &x));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-11);
    }

    #[test]
    fn coadjoint_duality((spec, (g, lam, x)) in with_spectrum(|n| (group_element(n), coalgebra_element(n), algebra_element(n)))) {
        let lhs = coad(&spec, &g, &lam).pair(&x);
        let rhs = lam.pair(&ad(&spec, &inv(&spec, &g), &x));
        prop_assert!((lhs - rhs).abs() < 1e-10, "duality residual {:e}", (lhs - rhs).abs());
    }

    #[test]
    fn omega_gamma_invariance((spec, (x, y, t)) in with_spectrum(|n| (mode_vector(n), mode_vector(n), -4.0f64..4.0))) {
        let lhs = spec.omega(&spec.apply_gamma(t, &x), &spec.apply_gamma(t, &y));
        prop_assert!((lhs - spec.omega(&x, &y)).abs() < 1e-12);
        prop_assert!((spec.omega(&x, &y) + spec.omega(&y, &x)).abs() < 1e-12);
    }

    #[test]
    fn star_involutive_and_gamma_action((spec, (z1, z2, p, q)) in with_spectrum(|n| (complex_entry(), complex_entry(), mode_vector(n), mode_vector(n)))) {
        let v = CVector { p, q };
        let action = gamma_c(&spec, z1, &gamma_c(&spec, z2, &v))
            .max_abs_diff(&gamma_c(&spec, z1 + z2, &v));
        prop_assert!(action < 1e-11);

        let g = ComplexGroupElement { z: z1, v, s: z2 };
        prop_assert!(star(&spec, &star(&spec, &g)).max_abs_diff(&g) < 1e-11);
    }

    #[test]
    fn complex_law_restricts_to_real((spec, (g, h)) in with_spectrum(|n| (group_element(n), group_element(n)))) {
        let lifted = mul_c(
            &spec,
            &ComplexGroupElement::embed(&g),
            &ComplexGroupElement::embed(&h),
        );
        let real = ComplexGroupElement::embed(&mul(&spec, &g, &h));
        prop_assert!(lifted.max_abs_diff(&real) < 1e-12);
    }

    #[test]
    fn cone_scaling_is_exact((spec, (x, lambda, d)) in with_spectrum(|n| (algebra_element(n), 0.05f64..20.0, -1.5f64..1.5))) {
        let _ = &spec;
        let cone = ConeParameter::positive(ConeD::Finite(d));
        let query = membership(&x, &cone);
        // only test away from the boundary band, where scaling cannot flip
        if query.margin.abs() > 1e-9 {
            let scaled = membership(&x.scale(lambda), &cone);
            prop_assert_eq!(query.member, scaled.member);
        }
    }

    #[test]
    fn element_json_roundtrip((spec, g) in with_spectrum(group_element)) {
        let _ = &spec;
        let text = serde_json::to_string(&g).unwrap();
        let back: GroupElement = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn complex_element_json_roundtrip((spec, (z, s, p, q)) in with_spectrum(|n| (complex_entry(), complex_entry(), mode_vector(n), mode_vector(n)))) {
        let _ = &spec;
        let e = ComplexGroupElement { z, v: CVector { p, q }, s };
        let text = serde_json::to_string(&e).unwrap();
        let back: ComplexGroupElement = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, e);
    }
}
