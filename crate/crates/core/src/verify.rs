//! Verification sweeps: brute-force maj distributions against the closed
//! forms, and the structural checks on the depth-pivot bijection.
//!
//! Every sweep walks its parameter cells in a fixed canonical order (n
//! ascending, then l, then the step orderings), so two runs of the same
//! sweep produce byte-identical reports.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bijections;
use crate::closedform::{mbdel_closed, mdel_closed, msch_closed};
use crate::error::{Error, Result};
use crate::paths::{LatticeWord, PathFamily};
use crate::qpoly::QPoly;
use crate::stats::{maj, maj_distribution, StepOrder};

/// Which check families a sweep runs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifyScope {
    /// Brute-force Schröder distributions against the closed form.
    Theorem,
    /// Brute-force bad-path distributions against the closed form.
    Lemma,
    /// Structural bijection checks plus the per-element maj shift.
    Bijection,
    /// Everything above, plus the Delannoy q-multinomial cross-check.
    All,
}

impl FromStr for VerifyScope {
    type Err = Error;

    fn from_str(text: &str) -> Result<VerifyScope> {
        match text {
            "theorem" => Ok(VerifyScope::Theorem),
            "lemma" => Ok(VerifyScope::Lemma),
            "bijection" => Ok(VerifyScope::Bijection),
            "all" => Ok(VerifyScope::All),
            other => Err(Error::InvalidFamily(format!(
                "unknown scope \"{other}\" (expected theorem|lemma|bijection|all)"
            ))),
        }
    }
}

impl fmt::Display for VerifyScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyScope::Theorem => write!(f, "theorem"),
            VerifyScope::Lemma => write!(f, "lemma"),
            VerifyScope::Bijection => write!(f, "bijection"),
            VerifyScope::All => write!(f, "all"),
        }
    }
}

/// One verified identity instance.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: String,
    pub pass: bool,
    pub expected: QPoly,
    pub actual: QPoly,
}

/// Parameter ranges a report covers.
#[derive(Clone, Debug, Serialize)]
pub struct SweepScope {
    pub scope: String,
    pub n_max: i64,
    pub description: String,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

/// Outcome of a verification sweep.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub scope: SweepScope,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// One line per failing check, then the pass/fail counts.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        for check in self.checks.iter().filter(|c| !c.pass) {
            out.push_str(&format!(
                "FAIL {} {}: expected {}, got {}\n",
                check.name, check.params, check.expected, check.actual
            ));
        }
        out.push_str(&format!(
            "scope {} (n <= {}): {} passed, {} failed\n",
            self.scope.scope, self.scope.n_max, self.summary.passed, self.summary.failed
        ));
        out
    }
}

/// Runs the requested sweep up to `n_max` with the library's own bijection.
pub fn run(scope: VerifyScope, n_max: i64) -> VerificationReport {
    run_with_forward_map(scope, n_max, bijections::phi)
}

/// Runs the requested sweep with a caller-supplied forward map in place of
/// the bijection. The map is exercised by the `bijection` checks only;
/// swapping in a broken map is how the test suite proves these sweeps can
/// actually fail.
pub fn run_with_forward_map<F>(scope: VerifyScope, n_max: i64, forward: F) -> VerificationReport
where
    F: Fn(&LatticeWord, StepOrder) -> Result<LatticeWord>,
{
    let mut checks = Vec::new();
    let include = |s: VerifyScope| scope == VerifyScope::All || scope == s;
    if include(VerifyScope::Theorem) {
        check_theorem(n_max, &mut checks);
    }
    if include(VerifyScope::Lemma) {
        check_lemma(n_max, &mut checks);
    }
    if include(VerifyScope::Bijection) {
        check_bijection(n_max, &forward, &mut checks);
    }
    if scope == VerifyScope::All {
        check_macmahon(n_max, &mut checks);
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let failed = checks.len() - passed;
    VerificationReport {
        scope: SweepScope {
            scope: scope.to_string(),
            n_max,
            description: format!(
                "n <= {n_max}, n <= l <= 2n, all 6 step orderings{}",
                if scope == VerifyScope::All {
                    format!("; Delannoy cross-check over m, n <= {n_max}")
                } else {
                    String::new()
                }
            ),
        },
        checks,
        summary: Summary { passed, failed },
    }
}

fn square_cells(n_max: i64) -> impl Iterator<Item = (i64, i64, StepOrder)> {
    (0..=n_max).flat_map(|n| {
        (n..=2 * n).flat_map(move |l| StepOrder::ALL.into_iter().map(move |o| (n, l, o)))
    })
}

fn check_theorem(n_max: i64, checks: &mut Vec<CheckResult>) {
    for (n, l, order) in square_cells(n_max) {
        let brute = maj_distribution(&PathFamily::Sch { n, l }, order)
            .expect("square family parameters are valid");
        let closed = msch_closed(n, l, order).unwrap_or_else(|_| QPoly::zero());
        checks.push(CheckResult {
            name: "theorem".into(),
            params: format!("n={n} l={l} order={order}"),
            pass: brute == closed,
            expected: brute,
            actual: closed,
        });
    }
}

fn check_lemma(n_max: i64, checks: &mut Vec<CheckResult>) {
    for (n, l, order) in square_cells(n_max) {
        let brute = maj_distribution(&PathFamily::BDel { n, l }, order)
            .expect("square family parameters are valid");
        let closed = mbdel_closed(n, l, order);
        checks.push(CheckResult {
            name: "lemma".into(),
            params: format!("n={n} l={l} order={order}"),
            pass: brute == closed,
            expected: brute,
            actual: closed,
        });
    }
}

fn check_bijection<F>(n_max: i64, forward: &F, checks: &mut Vec<CheckResult>)
where
    F: Fn(&LatticeWord, StepOrder) -> Result<LatticeWord>,
{
    for (n, l, order) in square_cells(n_max) {
        let bad: Vec<LatticeWord> = PathFamily::BDel { n, l }
            .words()
            .expect("square family parameters are valid")
            .collect();
        let target_count = PathFamily::Del { m: n + 1, n: n - 1, l }.count();
        let shift = u64::from(order.e_before_n());

        let mut structural_ok = true;
        let mut images = BTreeSet::new();
        let mut shifted = QPoly::zero();
        for w in &bad {
            let Ok(image) = forward(w, order) else {
                structural_ok = false;
                continue;
            };
            if image.endpoint() != ((n + 1) as u64, (n - 1).max(0) as u64)
                || image.len() != w.len()
            {
                structural_ok = false;
            }
            if maj(w, order) != maj(&image, order) + shift {
                structural_ok = false;
            }
            if bijections::phi_inverse(&image, order).ok().as_ref() != Some(w) {
                structural_ok = false;
            }
            shifted = shifted.add(&QPoly::monomial((maj(&image, order) + shift) as usize));
            images.insert(image);
        }
        // Injective onto the target family: no collisions, full coverage.
        if images.len() != bad.len() || images.len() != target_count {
            structural_ok = false;
        }

        let brute = maj_distribution(&PathFamily::BDel { n, l }, order)
            .expect("square family parameters are valid");
        checks.push(CheckResult {
            name: "bijection".into(),
            params: format!("n={n} l={l} order={order}"),
            pass: structural_ok && brute == shifted,
            expected: brute,
            actual: shifted,
        });
    }
}

fn check_macmahon(n_max: i64, checks: &mut Vec<CheckResult>) {
    for m in 0..=n_max {
        for n in 0..=n_max {
            for l in m.max(n)..=m + n {
                for order in StepOrder::ALL {
                    let brute = maj_distribution(&PathFamily::Del { m, n, l }, order)
                        .expect("in-range family parameters are valid");
                    let closed = mdel_closed(m, n, l);
                    checks.push(CheckResult {
                        name: "macmahon".into(),
                        params: format!("m={m} n={n} l={l} order={order}"),
                        pass: brute == closed,
                        expected: brute,
                        actual: closed,
                    });
                }
            }
        }
    }
}
