//! Cross-checks between the integer-side oracles and the automata layer.
//!
//! Every theorem the crate encodes is re-verified two ways where possible:
//! by brute-force scan over the representation-based oracles in
//! [`crate::numeration`], and by compiling an equivalent sentence with the
//! decision engine in [`crate::logic`]. Each check produces a
//! [`CheckReport`]; [`verify_all`] runs the whole suite.

mod oracle;
mod props;

pub use oracle::{
    check_avoid_sets, check_cg_suite, check_complement, check_least_term_sets,
    check_offset_forms, check_prefix_sets, check_shift_identities, check_zero_prefix_sets,
    perturbed_fixture,
};
pub use props::{check_propositions, definitions, propositions, Proposition};

use std::fmt;
use std::time::{Duration, Instant};

/// How a check decided its verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Oracle,
    Automata,
    Both,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Oracle => "ORACLE",
            Mode::Automata => "AUTOMATA",
            Mode::Both => "BOTH",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// The configured ranges were empty, so nothing was actually verified.
    PassVacuous,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::PassVacuous => "PASS-VACUOUS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// Result of one check. `verdict == Fail` guarantees a counterexample, and
/// the counterexample is the first one in scan order.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub id: String,
    pub mode: Mode,
    pub range: String,
    pub verdict: Verdict,
    pub counterexample: Option<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    fn finish(
        id: &str,
        mode: Mode,
        range: String,
        start: Instant,
        scanned: u64,
        counterexample: Option<String>,
    ) -> Self {
        let verdict = if counterexample.is_some() {
            Verdict::Fail
        } else if scanned == 0 {
            Verdict::PassVacuous
        } else {
            Verdict::Pass
        };
        CheckReport {
            id: id.to_string(),
            mode,
            range,
            verdict,
            counterexample,
            elapsed: start.elapsed(),
        }
    }
}

/// Bounds for [`verify_all`]. The defaults keep the full suite to a few
/// minutes on ordinary hardware.
#[derive(Debug, Clone)]
pub struct Config {
    /// Upper end of single-integer oracle scans.
    pub max_n: u64,
    /// Upper end of exhaustive pair scans.
    pub pair_n: u64,
    /// Largest set index `k` exercised.
    pub max_k: u32,
    /// Longest prefix word exercised.
    pub max_len: usize,
    /// Largest Fibonacci index `m` in the shift identities.
    pub max_m: usize,
    /// Upper end of per-integer scans inside the shift identities.
    pub shift_n: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: 50_000,
            pair_n: 2_000,
            max_k: 12,
            max_len: 18,
            max_m: 25,
            shift_n: 10_000,
        }
    }
}

/// Run every check with the configured bounds. Reports come back sorted by
/// check id, so the output is deterministic regardless of execution order.
pub fn verify_all(config: &Config) -> Vec<CheckReport> {
    let mut reports = vec![
        check_complement(config.max_n),
        check_least_term_sets(config.max_k, config.max_n),
        check_zero_prefix_sets(config.max_k, config.max_n),
        check_avoid_sets(config.max_k, config.max_n),
        check_prefix_sets(config.max_len.min(14), config.max_n),
        check_offset_forms(config.max_len),
    ];
    reports.extend(check_shift_identities(config.max_m, config.shift_n));
    reports.extend(check_cg_suite(config.max_k, config.max_n, config.pair_n));
    reports.extend(check_propositions());
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}

pub fn has_failure(reports: &[CheckReport]) -> bool {
    reports.iter().any(|r| r.verdict == Verdict::Fail)
}

/// Human-readable table.
pub fn render_table(reports: &[CheckReport]) -> String {
    let id_w = reports.iter().map(|r| r.id.len()).max().unwrap_or(5).max(5);
    let mut out = format!(
        "{:<id_w$}  {:<8}  {:<12}  {:>8}  range\n",
        "check", "mode", "verdict", "elapsed"
    );
    for r in reports {
        out.push_str(&format!(
            "{:<id_w$}  {:<8}  {:<12}  {:>7.2}s  {}\n",
            r.id,
            r.mode.to_string(),
            r.verdict.to_string(),
            r.elapsed.as_secs_f64(),
            r.range
        ));
        if let Some(cex) = &r.counterexample {
            out.push_str(&format!("{:id_w$}  counterexample: {cex}\n", ""));
        }
    }
    out
}

/// Line-oriented machine format: `check_id<TAB>verdict<TAB>range<TAB>counterexample`.
pub fn render_machine(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            r.id,
            r.verdict,
            r.range,
            r.counterexample.as_deref().unwrap_or("-")
        ));
    }
    out
}
