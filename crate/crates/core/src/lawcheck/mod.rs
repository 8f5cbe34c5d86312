//! Randomized checking of the theorems on seeded instances, and the
//! explorer for the open conjecture on `det(A) f_{A^∇}`.
//!
//! Every trial draws its inputs from its own ChaCha8 stream, so a report is
//! a pure function of `(check, config, trials)` no matter how the trials are
//! scheduled across threads.

mod checks;
mod gen;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;

pub use checks::{conjecture_62_coefficients, CheckId, Inputs, Verdict};
pub use gen::{gen_matrix, Constraint, GenConfig, RETRY_BUDGET};

/// A trial that failed, or produced a finding, with everything needed to
/// replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub inputs: Inputs,
    pub details: Vec<String>,
}

impl TrialRecord {
    /// Re-runs `check` on the recorded inputs.
    pub fn replay(&self, check: CheckId) -> Verdict {
        check.evaluate(&self.inputs)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: CheckId,
    pub seed: u64,
    pub config: GenConfig,
    pub trials: u64,
    pub passes: u64,
    pub failures: Vec<TrialRecord>,
    /// Violations that do not count as failures, e.g. counterexamples in the
    /// open range of the conjecture.
    pub findings: Vec<TrialRecord>,
    /// Wall-clock time; left out unless asked for so reports stay
    /// byte-identical across runs.
    pub elapsed_ms: Option<u64>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Runs `trials` independent trials of `check`. The constraint in `cfg`
/// narrows the primary input; the check's own requirement applies when it
/// is `None`.
pub fn run_check(check: CheckId, cfg: &GenConfig, trials: u64) -> Result<CheckReport> {
    cfg.validate()?;
    let cfg = GenConfig { constraint: check.effective_constraint(cfg.constraint)?, ..cfg.clone() };
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let inputs = check.sample(&cfg, &mut cfg.trial_rng(trial))?;
            let verdict = check.evaluate(&inputs);
            Ok((trial, inputs, verdict))
        })
        .filter(|r| !matches!(r, Ok((_, _, v)) if v.failures.is_empty() && v.findings.is_empty()))
        .collect::<Result<Vec<_>>>()?;

    let mut failures = Vec::new();
    let mut findings = Vec::new();
    for (trial, inputs, verdict) in outcomes {
        if !verdict.findings.is_empty() {
            findings.push(TrialRecord { trial, inputs: inputs.clone(), details: verdict.findings });
        }
        if !verdict.failures.is_empty() {
            failures.push(TrialRecord { trial, inputs, details: verdict.failures });
        }
    }
    Ok(CheckReport {
        check_id: check,
        seed: cfg.seed,
        passes: trials - failures.len() as u64,
        trials,
        config: cfg,
        failures,
        findings,
        elapsed_ms: None,
    })
}

/// Searches for counterexamples to the conjecture among non-singular (or,
/// with [`Constraint::Triangular`], triangular) samples. Counterexamples in
/// the unproven range land in `findings`.
pub fn explore_conjecture(cfg: &GenConfig, trials: u64) -> Result<CheckReport> {
    run_check(CheckId::Conjecture62, cfg, trials)
}
