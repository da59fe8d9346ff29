//! Acceptance gate: every headline identity of the library, one test per
//! criterion, each printing a pass/fail line. All criteria share a single
//! full verification run at the calibrated defaults; a criterion passes when
//! its named checks executed and produced zero failures at their pinned
//! tolerances.

use std::sync::OnceLock;

use oscigroup::report::{SuiteConfig, VerificationReport};
use oscigroup::verify;

static REPORT: OnceLock<VerificationReport> = OnceLock::new();

fn full_report() -> &'static VerificationReport {
    REPORT.get_or_init(|| {
        verify::run_suite("all", &SuiteConfig::default()).expect("verification suites run")
    })
}

/// Asserts that every check with one of the given case-id prefixes ran and
/// produced no failures, then prints one line for the criterion.
fn assert_criterion(criterion: &str, prefixes: &[&str]) {
    let report = full_report();
    let mut executed = 0usize;
    for prefix in prefixes {
        let count = report
            .executed
            .iter()
            .filter(|id| id.starts_with(prefix))
            .count();
        assert!(count > 0, "{criterion}: no cases executed for prefix {prefix}");
        executed += count;
    }
    let failing: Vec<_> = report
        .failures
        .iter()
        .filter(|f| prefixes.iter().any(|p| f.case_id.starts_with(p)))
        .collect();
    if failing.is_empty() {
        println!("PASS {criterion} ({executed} cases)");
    } else {
        println!("FAIL {criterion} ({} failing of {executed})", failing.len());
        for f in failing.iter().take(5) {
            println!("  {} abs_err={:e} input={}", f.case_id, f.abs_err, f.input);
        }
        panic!("{criterion}: {} failing cases", failing.len());
    }
}

#[test]
fn criterion_01_exponential_closed_form_vs_quadrature() {
    // closed form vs double-integral quadrature < 1e-9 on 100 elements;
    // one-parameter law residual < 1e-8
    assert_criterion(
        "criterion 1: exponential map vs quadrature oracle",
        &["exp:exp_vs_quadrature", "exp:one_parameter_law"],
    );
}

#[test]
fn criterion_02_adjoint_and_coadjoint() {
    // Ad vs finite-difference conjugation < 1e-6 on 200 samples; coadjoint
    // duality pairing < 1e-11
    assert_criterion(
        "criterion 2: adjoint oracle and coadjoint duality",
        &["group:ad_vs_finite_difference", "group:coad_duality"],
    );
}

#[test]
fn criterion_03_kernel_identity() {
    // B_{is}(ix) = g_s f_s⁻¹x + i f_s⁻¹x < 1e-11 on 200 samples;
    // skew-symmetry of g_s f_s⁻¹ < 1e-12
    assert_criterion(
        "criterion 3: B kernel identity and skew symmetry",
        &["complex:b_kernel_identity", "complex:gf_inv_skew"],
    );
}

#[test]
fn criterion_04_fourier_identity() {
    // |quadrature − f̃(x)| < 1e-8 on the grid x ∈ {−3,…,3}, T = 40
    assert_criterion("criterion 4: Fourier identity", &["fourier:fourier_identity"]);
}

#[test]
fn criterion_05_polar_decomposition() {
    // both roundtrips < 1e-8 on 200 samples; θ identity < 1e-10; realness
    // residuals < 1e-9
    assert_criterion(
        "criterion 5: polar decomposition",
        &[
            "polar:polar_roundtrip_gw",
            "polar:polar_roundtrip_sa",
            "polar:theta_identity",
            "polar:polar_realness_residual",
            "polar:polar_im_s_exact",
        ],
    );
}

#[test]
fn criterion_06_involution() {
    // antiautomorphism, involutivity, and (g·exp_ℂ(iw))* = exp_ℂ(iw)·g⁻¹,
    // all < 1e-10
    assert_criterion(
        "criterion 6: involution",
        &[
            "polar:star_s_antiautomorphism",
            "polar:star_s_involutive",
            "polar:star_s_matches_ambient",
            "polar:star_s_polar_part",
            "complex:star_polar_identity",
            "complex:star_antiautomorphism",
            "complex:star_involutive",
        ],
    );
}

#[test]
fn criterion_07_semigroup_closure() {
    // 200 random products per d ∈ {−1,0,1,∞} stay in S_d beyond the 1e-12
    // band; barrier monotone along curves with 1e-9 per-step slack
    assert_criterion(
        "criterion 7: semigroup closure and barrier monotonicity",
        &["semigroup:closure_d_", "semigroup:curve_monotone_"],
    );
}

#[test]
fn criterion_08_cone_calculus() {
    // superadditivity defect ≥ −1e-12; Ad-invariance of membership, F and
    // h_d < 1e-11
    assert_criterion(
        "criterion 8: cone calculus",
        &[
            "cones:f_d_superadditive",
            "cones:membership_ad_invariant",
            "cones:f_project_ad_invariant",
            "cones:f_project_membership_compat",
            "cones:h_d_ad_invariant",
            "cones:h_d_monotone",
            "cones:h_d_boundary_blowup",
        ],
    );
}

#[test]
fn criterion_09_fock_representation() {
    // CCR within 1e-11 on the compressed block; homomorphism and covariance
    // < 1e-6 at N = 30; −i·dπ(0,0,1) ≥ 0 exactly
    assert_criterion(
        "criterion 9: Fock representation",
        &[
            "fock:ccr_",
            "fock:pi_homomorphism_",
            "fock:pi_covariance_",
            "fock:dgamma_nonnegative_",
            "fock:central_character_",
        ],
    );
}

#[test]
fn criterion_10_holomorphic_extension_norm_law() {
    // ‖π̂(exp_ℂ(iw))‖ = e^{‖x‖²/(2s)−t} within 1e-6 at N = 30; semigroup
    // property and *-compatibility < 1e-6; truncation drift < 1e-8 at N ≥ 25
    assert_criterion(
        "criterion 10: holomorphic extension norm law",
        &[
            "fock:pi_hat_norm_law_",
            "fock:pi_hat_alpha_bound_",
            "fock:pi_hat_semigroup_",
            "fock:pi_hat_star_compat_",
            "fock:truncation_drift_",
            "fock:alpha_gap_trend_",
        ],
    );
}

#[test]
fn criterion_11_seminorm_growth_bound() {
    // q_m(γ_ℂ(z)v) ≤ q_{m+⌈|z|⌉}(v): zero violations on 10³ samples
    assert_criterion(
        "criterion 11: seminorm growth bound",
        &["complex:qn_growth_bound"],
    );
}

#[test]
fn criterion_12_determinism_and_full_pass() {
    // identical reports for identical seeds, and the full run exits clean
    let cheap = ["group", "cones", "polar", "semigroup", "fourier"];
    for suite in cheap {
        let cfg = SuiteConfig { seed: 20_260_810, ..SuiteConfig::default() };
        let a = verify::run_suite(suite, &cfg).unwrap();
        let b = verify::run_suite(suite, &cfg).unwrap();
        assert_eq!(
            a.canonical_json(),
            b.canonical_json(),
            "suite {suite} not byte-identical across runs"
        );
    }
    // the randomized-heavy suites with reduced workloads
    let small = SuiteConfig {
        seed: 7,
        trials: Some(5),
        truncation: Some(10),
        ..SuiteConfig::default()
    };
    for suite in ["exp", "fock"] {
        let a = verify::run_suite(suite, &small).unwrap();
        let b = verify::run_suite(suite, &small).unwrap();
        assert_eq!(
            a.canonical_json(),
            b.canonical_json(),
            "suite {suite} not byte-identical across runs"
        );
    }

    let report = full_report();
    assert!(
        report.passed,
        "full verification reports {} failures",
        report.failures.len()
    );
    println!(
        "PASS criterion 12: determinism and full pass ({} cases, max_abs_err {:e})",
        report.trials, report.max_abs_err
    );
}
