//! Machine-readable verification reports.
//!
//! A report is deterministic given `(seed, spectrum, trials, tolerance,
//! truncation)`; `wall_ms` is the single nondeterministic field and is zeroed
//! by [`VerificationReport::canonical_json`], which is what byte-identity
//! checks compare. Failures carry the full input of the offending case so a
//! single case can be replayed through the CLI.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::spectral::Spectrum;

/// One failed check case.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FailureRecord {
    pub case_id: String,
    pub input: Value,
    pub expected: Value,
    pub got: Value,
    pub abs_err: f64,
}

/// Aggregated result of one suite run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    /// Number of executed check cases.
    pub trials: usize,
    /// Loosest tolerance among the executed checks (or the override).
    pub tolerance: f64,
    pub max_abs_err: f64,
    pub failures: Vec<FailureRecord>,
    pub passed: bool,
    pub seed: u64,
    pub spectrum: Vec<f64>,
    pub truncation: Option<usize>,
    pub wall_ms: u64,
    /// Executed case ids; in-process bookkeeping for the acceptance gate,
    /// not part of the JSON schema.
    #[serde(skip)]
    pub executed: Vec<String>,
}

impl VerificationReport {
    /// Pretty JSON with `wall_ms` zeroed; byte-identical across runs for
    /// identical `(seed, config)`.
    pub fn canonical_json(&self) -> String {
        let mut clone = self.clone();
        clone.wall_ms = 0;
        serde_json::to_string_pretty(&clone).expect("report serialises")
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Suite configuration; `None` fields fall back to per-suite defaults.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub spectrum: Option<Spectrum>,
    pub trials: Option<usize>,
    /// Overrides every per-check tolerance when set.
    pub tol: Option<f64>,
    pub truncation: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 42, spectrum: None, trials: None, tol: None, truncation: None }
    }
}

impl SuiteConfig {
    pub fn trials_or(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }
}

/// Accumulates check results for one suite.
pub struct Recorder {
    tol_override: Option<f64>,
    cases: usize,
    tolerance: f64,
    max_abs_err: f64,
    failures: Vec<FailureRecord>,
    executed: Vec<String>,
}

impl Recorder {
    pub fn new(tol_override: Option<f64>) -> Self {
        Recorder {
            tol_override,
            cases: 0,
            tolerance: 0.0,
            max_abs_err: 0.0,
            failures: Vec::new(),
            executed: Vec::new(),
        }
    }

    /// Records one case: `abs_err` against the check tolerance (or the
    /// global override). `input`/`expected`/`got` are only materialised into
    /// the report if the case fails.
    pub fn check(
        &mut self,
        case_id: String,
        abs_err: f64,
        tol: f64,
        input: impl FnOnce() -> Value,
        expected: impl FnOnce() -> Value,
        got: impl FnOnce() -> Value,
    ) {
        let tol = self.tol_override.unwrap_or(tol);
        self.cases += 1;
        self.executed.push(case_id.clone());
        self.tolerance = self.tolerance.max(tol);
        if abs_err.is_finite() {
            self.max_abs_err = self.max_abs_err.max(abs_err);
        }
        // NaN errors must count as failures, hence the negated comparison
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(abs_err <= tol) {
            self.failures.push(FailureRecord {
                case_id,
                input: input(),
                expected: expected(),
                got: got(),
                abs_err,
            });
        }
    }

    /// Boolean predicate check; failures are recorded with `abs_err = ∞`
    /// unless a meaningful residual is supplied.
    pub fn require(
        &mut self,
        case_id: String,
        ok: bool,
        residual: f64,
        input: impl FnOnce() -> Value,
        expected: impl FnOnce() -> Value,
        got: impl FnOnce() -> Value,
    ) {
        self.cases += 1;
        self.executed.push(case_id.clone());
        if !ok {
            self.failures.push(FailureRecord {
                case_id,
                input: input(),
                expected: expected(),
                got: got(),
                abs_err: residual,
            });
        }
    }

    pub fn finish(
        mut self,
        suite: &str,
        seed: u64,
        spectrum: &Spectrum,
        truncation: Option<usize>,
        wall_ms: u64,
    ) -> VerificationReport {
        self.failures.sort_by(|a, b| a.case_id.cmp(&b.case_id));
        VerificationReport {
            suite: suite.to_string(),
            trials: self.cases,
            tolerance: self.tolerance,
            max_abs_err: self.max_abs_err,
            passed: self.failures.is_empty(),
            failures: self.failures,
            seed,
            spectrum: spectrum.eigs().to_vec(),
            truncation,
            wall_ms,
            executed: self.executed,
        }
    }
}
