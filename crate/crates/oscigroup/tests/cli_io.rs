//! End-to-end tests of the CLI binary: JSON schemas, exit codes, and the
//! documented element formats.

use std::path::PathBuf;
use std::process::{Command, Output};

use num_complex::Complex64;
use oscigroup::group_complex::{exp_c, ComplexAlgebraElement};
use oscigroup::group_real::AlgebraElement;
use oscigroup::spectral::{ModeVector, Spectrum};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oscigroup"))
}

fn write_tmp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("oscigroup-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON document")
}

#[test]
fn exp_fixes_cartan_elements() {
    let elem = write_tmp("cartan.json", r#"{"t": 1.0, "x": [[0.0, 0.0]], "s": 1.0}"#);
    let out = bin()
        .args(["exp", "--elem", elem.to_str().unwrap(), "--spectrum", "1"])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["t"], 1.0);
    assert_eq!(v["s"], 1.0);
    assert_eq!(v["x"][0][0], 0.0);
    assert_eq!(v["x"][0][1], 0.0);
}

#[test]
fn mul_with_identity() {
    let e = write_tmp("id.json", r#"{"t": 0.0, "x": [[0.0, 0.0], [0.0, 0.0]], "s": 0.0}"#);
    let g = write_tmp("g.json", r#"{"t": 0.4, "x": [[0.3, -0.2], [0.1, 0.5]], "s": -0.7}"#);
    let out = bin()
        .args([
            "mul",
            "--lhs",
            e.to_str().unwrap(),
            "--rhs",
            g.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["t"], 0.4);
    assert_eq!(v["s"], -0.7);
    assert_eq!(v["x"][1][1], 0.5);
}

#[test]
fn ad_and_coad_at_identity() {
    let e = write_tmp("e.json", r#"{"t": 0.0, "x": [[0.0, 0.0], [0.0, 0.0]], "s": 0.0}"#);
    let x = write_tmp("x.json", r#"{"t": 0.2, "x": [[0.7, 0.1], [-0.4, 0.3]], "s": 1.1}"#);
    let out = bin()
        .args([
            "ad",
            "--group",
            e.to_str().unwrap(),
            "--alg",
            x.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["t"], 0.2);
    assert_eq!(v["x"][0][0], 0.7);

    let lam = write_tmp(
        "lam.json",
        r#"{"tstar": 1.5, "a": [[0.2, -0.8], [0.6, 0.1]], "sstar": -0.5}"#,
    );
    let out = bin()
        .args([
            "coad",
            "--group",
            e.to_str().unwrap(),
            "--coalg",
            lam.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["tstar"], 1.5);
    assert_eq!(v["sstar"], -0.5);
}

#[test]
fn polar_decompose_cartan_point() {
    // (0, 0, i) decomposes into the identity and w = (0,0,1)
    let elem = write_tmp(
        "sa.json",
        r#"{"z": [0.0, 0.0], "v": {"p": [[0.0, 0.0]], "q": [[0.0, 0.0]]}, "s": [0.0, 1.0]}"#,
    );
    let out = bin()
        .args([
            "polar",
            "--decompose",
            "--elem",
            elem.to_str().unwrap(),
            "--spectrum",
            "1",
        ])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["g"]["t"], 0.0);
    assert_eq!(v["g"]["s"], 0.0);
    assert_eq!(v["w"]["t"], 0.0);
    assert_eq!(v["w"]["s"], 1.0);
    assert!(v["residuals"]["vector_imag"].as_f64().unwrap() < 1e-12);
}

#[test]
fn polar_compose_then_decompose_roundtrip() {
    let pair = write_tmp(
        "pair.json",
        r#"{"g": {"t": 0.9, "x": [[0.5, -0.2]], "s": 1.4},
            "w": {"t": 1.0, "x": [[0.6, 0.3]], "s": 2.0}}"#,
    );
    let out = bin()
        .args([
            "polar",
            "--compose",
            "--elem",
            pair.to_str().unwrap(),
            "--spectrum",
            "1",
        ])
        .output()
        .unwrap();
    let composed = stdout_json(&out);
    assert!((composed["s"][1].as_f64().unwrap() - 2.0).abs() < 1e-15);

    let back = write_tmp("back.json", &composed.to_string());
    let out = bin()
        .args([
            "polar",
            "--decompose",
            "--elem",
            back.to_str().unwrap(),
            "--spectrum",
            "1",
        ])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert!((v["g"]["t"].as_f64().unwrap() - 0.9).abs() < 1e-8);
    assert!((v["w"]["t"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert!((v["w"]["s"].as_f64().unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn cone_query_schema() {
    let elem = write_tmp("cone.json", r#"{"t": 1.0, "x": [[0.0, 0.0]], "s": 1.0}"#);
    let out = bin()
        .args(["cone", "--elem", elem.to_str().unwrap(), "--d", "0"])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["member"], true);
    assert!((v["f_d"].as_f64().unwrap() - 1.0).abs() < 1e-15);
    assert!(v["margin"].as_f64().unwrap() > 0.0);

    // d = inf: f_d is null, membership is s > 0
    let out = bin()
        .args(["cone", "--elem", elem.to_str().unwrap(), "--d", "inf"])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["member"], true);
    assert!(v["f_d"].is_null());
}

#[test]
fn rep_norm_matches_displaced_ground_energy() {
    // exp_ℂ(i(0, x, 1)) with ‖x‖ = 1 has norm e^{1/2} ≈ 1.648721
    let spec = Spectrum::new(vec![1.0]).unwrap();
    let w = AlgebraElement::new(0.0, ModeVector(vec![Complex64::new(0.6, 0.8)]), 1.0);
    let e = exp_c(&spec, &ComplexAlgebraElement::embed_times_i(&w));
    let elem = write_tmp("repnorm.json", &serde_json::to_string(&e).unwrap());
    let out = bin()
        .args([
            "rep-norm",
            "--elem",
            elem.to_str().unwrap(),
            "--truncation",
            "30",
            "--spectrum",
            "1",
        ])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    let norm = v["norm"].as_f64().unwrap();
    assert!((norm - 1.648721).abs() < 1e-5, "norm {norm}");
    assert!((v["alpha0"].as_f64().unwrap() - 0.5f64.exp()).abs() < 1e-9);
    assert!(v["rel_gap"].as_f64().unwrap().abs() < 1e-6);
}

#[test]
fn momentum_of_vacuum_is_central_coordinate() {
    // 1 mode at cutoff 8: 9 amplitudes, vacuum state
    let mut amps = vec![[0.0, 0.0]; 9];
    amps[0] = [1.0, 0.0];
    let state = write_tmp("vac.json", &serde_json::to_string(&amps).unwrap());
    let elem = write_tmp("alg.json", r#"{"t": 1.3, "x": [[0.0, 0.0]], "s": 0.7}"#);
    let out = bin()
        .args([
            "momentum",
            "--state",
            state.to_str().unwrap(),
            "--elem",
            elem.to_str().unwrap(),
            "--truncation",
            "8",
            "--spectrum",
            "1",
        ])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert!((v["value"].as_f64().unwrap() - 1.3).abs() < 1e-12);
}

#[test]
fn verify_exp_suite_report() {
    // the documented example: exp suite at seed 42, eigs (1, 2.5), 100 trials
    let out = bin()
        .args([
            "verify", "--suite", "exp", "--seed", "42", "--spectrum", "1,2.5", "--trials", "100",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["max_abs_err"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["seed"], 42);
    assert_eq!(v["spectrum"], serde_json::json!([1.0, 2.5]));
}

#[test]
fn semigroup_verify_closure() {
    let out = bin()
        .args(["semigroup-verify", "--d", "0", "--trials", "25"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["trials"], 25);
}

#[test]
fn bad_inputs_exit_2() {
    // eigenvalue 0 violates ker A = 0
    let out = bin()
        .args(["verify", "--suite", "exp", "--spectrum", "1,0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["verify", "--suite", "nonsense"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let garbled = write_tmp("bad.json", "{not json");
    let out = bin()
        .args(["exp", "--elem", garbled.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // boundary element is outside S_A
    let boundary = write_tmp(
        "boundary.json",
        r#"{"z": [0.0, 0.0], "v": {"p": [[0.0, 0.0]], "q": [[0.0, 0.0]]}, "s": [1.0, 0.0]}"#,
    );
    let out = bin()
        .args([
            "polar",
            "--decompose",
            "--elem",
            boundary.to_str().unwrap(),
            "--spectrum",
            "1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // element dimensions must match the spectrum
    let two_modes = write_tmp(
        "two_modes.json",
        r#"{"t": 1.0, "x": [[0.0, 0.0], [0.0, 0.0]], "s": 1.0}"#,
    );
    let out = bin()
        .args(["exp", "--elem", two_modes.to_str().unwrap(), "--spectrum", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_files_are_deterministic() {
    let p1 = write_tmp("r1.json", "");
    let p2 = write_tmp("r2.json", "");
    for path in [&p1, &p2] {
        let out = bin()
            .args([
                "verify",
                "--suite",
                "cones",
                "--seed",
                "99",
                "--json",
                path.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
    }
    let mut a: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&p1).unwrap()).unwrap();
    let mut b: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&p2).unwrap()).unwrap();
    a["wall_ms"] = 0.into();
    b["wall_ms"] = 0.into();
    assert_eq!(a.to_string(), b.to_string());
}
