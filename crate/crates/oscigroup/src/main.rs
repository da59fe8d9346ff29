//! Thin command-line front door: element I/O and suite verification with
//! machine-readable JSON reports. Exit codes: 0 success, 1 verification
//! failure, 2 bad input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::json;

use oscigroup::cones::{membership, ConeD, ConeParameter, Sign};
use oscigroup::fock::{FockSpace, FockVector};
use oscigroup::group_complex::ComplexGroupElement;
use oscigroup::group_real::{self, AlgebraElement, CoAlgebraElement, GroupElement};
use oscigroup::report::SuiteConfig;
use oscigroup::semigroup::{polar_compose, polar_decompose_full, SemigroupElement};
use oscigroup::spectral::Spectrum;
use oscigroup::verify;
use oscigroup::Error;

#[derive(Parser)]
#[command(
    name = "oscigroup",
    about = "Standard oscillator groups, their complex semigroups, and truncated Fock representations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its JSON report
    Verify {
        /// One of: exp, group, complex, cones, polar, semigroup, fock, fourier, all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Comma-separated eigenvalues (or JSON array); default: per-suite calibrated
        #[arg(long)]
        spectrum: Option<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Trial count for the suite's randomized checks
        #[arg(long)]
        trials: Option<usize>,
        /// Override every per-check tolerance
        #[arg(long)]
        tol: Option<f64>,
        /// Fock cutoff N
        #[arg(long)]
        truncation: Option<usize>,
        /// Write the report to a file instead of standard output
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Exponential map: algebra element file -> group element
    Exp {
        #[arg(long)]
        elem: PathBuf,
        #[arg(long, default_value = "1,2.5")]
        spectrum: String,
    },
    /// Group multiplication of two element files
    Mul {
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        #[arg(long, default_value = "1,2.5")]
        spectrum: String,
    },
    /// Adjoint action Ad(g)X
    Ad {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        alg: PathBuf,
        #[arg(long, default_value = "1,2.5")]
        spectrum: String,
    },
    /// Coadjoint action Ad*(g)λ
    Coad {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        coalg: PathBuf,
        #[arg(long, default_value = "1,2.5")]
        spectrum: String,
    },
    /// Polar decomposition (default) or composition (--compose)
    Polar {
        /// Decompose: complexified element {z,v,s}; compose: {"g":…, "w":…}
        #[arg(long)]
        elem: PathBuf,
        #[arg(long, conflicts_with = "decompose")]
        compose: bool,
        #[arg(long)]
        decompose: bool,
        #[arg(long, default_value = "1,2.5")]
        spectrum: String,
    },
    /// Cone membership query for an algebra element
    Cone {
        #[arg(long)]
        elem: PathBuf,
        /// Cone parameter d: a number or "inf"
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        /// Test the opposite cone −W_d
        #[arg(long)]
        minus: bool,
        #[arg(long, default_value = "1,2.5")]
        spectrum: String,
    },
    /// Closure evidence for S_d: random products stay in S_d
    SemigroupVerify {
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value = "1,2.5")]
        spectrum: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Norm of the holomorphic extension against the absolute value α₀
    RepNorm {
        /// Complexified element with Im s > 0
        #[arg(long)]
        elem: PathBuf,
        #[arg(long, default_value_t = 30)]
        truncation: usize,
        #[arg(long, default_value = "1,1.5")]
        spectrum: String,
    },
    /// Momentum map value Φ([v])(X)
    Momentum {
        /// JSON array of [re,im] amplitudes on the truncated basis
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        elem: PathBuf,
        #[arg(long, default_value_t = 30)]
        truncation: usize,
        #[arg(long, default_value = "1,1.5")]
        spectrum: String,
    },
}

fn parse_spectrum(text: &str) -> oscigroup::Result<Spectrum> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let eigs: Vec<f64> = serde_json::from_str(trimmed)
            .map_err(|e| Error::InvalidJson(format!("spectrum: {e}")))?;
        Spectrum::new(eigs)
    } else {
        Spectrum::parse(trimmed)
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> oscigroup::Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidJson(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidJson(format!("{}: {e}", path.display())))
}

fn check_modes(spec: &Spectrum, lens: &[usize]) -> oscigroup::Result<()> {
    for &len in lens {
        if len != spec.n() {
            return Err(Error::InvalidJson(format!(
                "element has {len} modes but the spectrum has {}",
                spec.n()
            )));
        }
    }
    Ok(())
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serialisable"));
}

fn run(cli: Cli) -> oscigroup::Result<u8> {
    match cli.command {
        Command::Verify { suite, spectrum, seed, trials, tol, truncation, json } => {
            let cfg = SuiteConfig {
                seed,
                spectrum: spectrum.as_deref().map(parse_spectrum).transpose()?,
                trials,
                tol,
                truncation,
            };
            let report = verify::run_suite(&suite, &cfg)?;
            let text = report.json();
            match json {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Error::InvalidJson(format!("{}: {e}", path.display())))?,
                None => println!("{text}"),
            }
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Exp { elem, spectrum } => {
            let spec = parse_spectrum(&spectrum)?;
            let x: AlgebraElement = read_json(&elem)?;
            check_modes(&spec, &[x.x.len()])?;
            emit(&serde_json::to_value(group_real::exp(&spec, &x)).unwrap());
            Ok(0)
        }
        Command::Mul { lhs, rhs, spectrum } => {
            let spec = parse_spectrum(&spectrum)?;
            let g: GroupElement = read_json(&lhs)?;
            let h: GroupElement = read_json(&rhs)?;
            check_modes(&spec, &[g.x.len(), h.x.len()])?;
            emit(&serde_json::to_value(group_real::mul(&spec, &g, &h)).unwrap());
            Ok(0)
        }
        Command::Ad { group, alg, spectrum } => {
            let spec = parse_spectrum(&spectrum)?;
            let g: GroupElement = read_json(&group)?;
            let x: AlgebraElement = read_json(&alg)?;
            check_modes(&spec, &[g.x.len(), x.x.len()])?;
            emit(&serde_json::to_value(group_real::ad(&spec, &g, &x)).unwrap());
            Ok(0)
        }
        Command::Coad { group, coalg, spectrum } => {
            let spec = parse_spectrum(&spectrum)?;
            let g: GroupElement = read_json(&group)?;
            let lam: CoAlgebraElement = read_json(&coalg)?;
            check_modes(&spec, &[g.x.len(), lam.a.len()])?;
            emit(&serde_json::to_value(group_real::coad(&spec, &g, &lam)).unwrap());
            Ok(0)
        }
        Command::Polar { elem, compose, decompose: _, spectrum } => {
            let spec = parse_spectrum(&spectrum)?;
            if compose {
                #[derive(serde::Deserialize)]
                struct Pair {
                    g: GroupElement,
                    w: AlgebraElement,
                }
                let pair: Pair = read_json(&elem)?;
                check_modes(&spec, &[pair.g.x.len(), pair.w.x.len()])?;
                let composed = polar_compose(&spec, &pair.g, &pair.w)?;
                emit(&serde_json::to_value(composed.as_complex()).unwrap());
            } else {
                let raw: ComplexGroupElement = read_json(&elem)?;
                check_modes(&spec, &[raw.v.p.len(), raw.v.q.len()])?;
                let e = SemigroupElement::new(raw)?;
                let (polar, residuals) = polar_decompose_full(&spec, &e)?;
                emit(&json!({
                    "g": polar.g,
                    "w": polar.w,
                    "residuals": residuals,
                }));
            }
            Ok(0)
        }
        Command::Cone { elem, d, minus, spectrum } => {
            let _spec = parse_spectrum(&spectrum)?;
            let x: AlgebraElement = read_json(&elem)?;
            let cone = ConeParameter {
                d: ConeD::parse(&d)?,
                sign: if minus { Sign::Minus } else { Sign::Plus },
            };
            let query = membership(&x, &cone);
            emit(&json!({
                "member": query.member,
                "margin": query.margin,
                "f_d": query.f_d,
            }));
            Ok(0)
        }
        Command::SemigroupVerify { d, trials, seed, spectrum, json } => {
            let cfg = SuiteConfig {
                seed,
                spectrum: Some(parse_spectrum(&spectrum)?),
                trials: Some(trials),
                tol: None,
                truncation: None,
            };
            let report = verify::run_closure_suite(&cfg, ConeD::parse(&d)?)?;
            let text = report.json();
            match json {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Error::InvalidJson(format!("{}: {e}", path.display())))?,
                None => println!("{text}"),
            }
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::RepNorm { elem, truncation, spectrum } => {
            let spec = parse_spectrum(&spectrum)?;
            let raw: ComplexGroupElement = read_json(&elem)?;
            check_modes(&spec, &[raw.v.p.len(), raw.v.q.len()])?;
            let e = SemigroupElement::new(raw)?;
            let fs = FockSpace::new(spec.clone(), truncation);
            let norm = fs.pi_hat(&e)?.norm();
            let alpha0 = oscigroup::semigroup::alpha_a(&spec, &e, 0.0)?;
            emit(&json!({
                "norm": norm,
                "alpha0": alpha0,
                "rel_gap": (alpha0 - norm) / alpha0,
            }));
            Ok(0)
        }
        Command::Momentum { state, elem, truncation, spectrum } => {
            let spec = parse_spectrum(&spectrum)?;
            let amps: Vec<[f64; 2]> = read_json(&state)?;
            let x: AlgebraElement = read_json(&elem)?;
            check_modes(&spec, &[x.x.len()])?;
            let fs = FockSpace::new(spec, truncation);
            if amps.len() != fs.dim() {
                return Err(Error::InvalidJson(format!(
                    "state has {} amplitudes but the truncated space has dimension {}",
                    amps.len(),
                    fs.dim()
                )));
            }
            let v = FockVector(nalgebra::DVector::from_iterator(
                amps.len(),
                amps.iter().map(|&[re, im]| num_complex::Complex64::new(re, im)),
            ));
            emit(&json!({"value": fs.momentum(&v, &x)?}));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Error::DecompositionResidual { residual }) => {
            eprintln!("error: polar decomposition residual {residual}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
