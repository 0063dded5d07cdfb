//! Executable checks of the structural theorems, grouped into suites that
//! produce pass/fail reports with witnesses.

mod composition;
mod hopf;
mod kac;
mod pairing;
mod sv;

use std::fmt;

use serde::Serialize;

use crate::hallhopf::{AlgElt, BasisSym, HallAlgebra};
use crate::repcat::ClassId;

pub use composition::suite_composition;
pub use hopf::suite_hopf;
pub use kac::{indecomposable_counts, suite_character, suite_kac};
pub use pairing::suite_pairing;
pub use sv::suite_sv;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    /// Pass iff no check failed; skipped checks do not count against it.
    pub fn overall(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.overall() == Status::Pass
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(Check {
            name: name.into(),
            status: Status::Pass,
            witness: None,
        });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(Check {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        });
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.push(Check {
            name: name.into(),
            status: Status::Skipped,
            witness: Some(reason.into()),
        });
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness());
        }
    }

    /// Appends the checks of `other`, prefixing their names with its suite.
    pub fn absorb(&mut self, other: CheckReport) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.checks.push(c);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, prefix: &str) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.name.starts_with(prefix)).collect()
    }
}

/// Folds many instances of one property into a single check, keeping the
/// first failure as witness.
pub(crate) struct Tally {
    name: String,
    count: usize,
    failures: usize,
    witness: Option<String>,
}

impl Tally {
    pub(crate) fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            count: 0,
            failures: 0,
            witness: None,
        }
    }

    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub(crate) fn elt(&mut self, what: impl FnOnce() -> String, lhs: &AlgElt, rhs: &AlgElt) {
        self.record(lhs == rhs, || format!("{}: lhs = {lhs}, rhs = {rhs}", what()));
    }

    pub(crate) fn finish(self, report: &mut CheckReport) {
        let name = format!("{} ({} instances)", self.name, self.count);
        match self.witness {
            None => report.pass(name),
            Some(w) => report.fail(name, format!("{} failing; first: {w}", self.failures)),
        }
    }
}

/// Torus parts used when a property is quantified over all basis symbols:
/// zero, the first unit vector and minus the all-ones vector.
pub(crate) fn torus_samples(n: usize) -> Vec<Vec<i64>> {
    let mut e = vec![0; n];
    e[0] = 1;
    vec![vec![0; n], e, vec![-1; n]]
}

pub(crate) fn positive_symbols(alg: &HallAlgebra) -> Vec<BasisSym> {
    let mut out = Vec::new();
    for c in alg.table().classes() {
        for t in torus_samples(alg.rank()) {
            out.push(BasisSym::positive(t, c.id));
        }
    }
    out
}

pub(crate) fn negative_symbols(alg: &HallAlgebra) -> Vec<BasisSym> {
    positive_symbols(alg)
        .into_iter()
        .map(|s| BasisSym::negative(s.plus, s.torus))
        .collect()
}

pub(crate) fn class_dim_sum_fits(alg: &HallAlgebra, a: ClassId, b: ClassId) -> bool {
    let t = alg.table();
    t.covers(&t.class(a).dim.add(&t.class(b).dim))
}

/// Runs a named suite or all of them on one configuration.
pub fn run_suite(name: &str, alg: &HallAlgebra, height: Option<u32>) -> crate::error::Result<CheckReport> {
    let table = alg.table();
    let bound = table.bound().clone();
    let h = height.unwrap_or_else(|| bound.total());
    Ok(match name {
        "hopf" => suite_hopf(alg)?,
        "pairing" => suite_pairing(alg)?,
        "composition" => suite_composition(alg)?,
        "sv" => suite_sv(alg, &bound)?,
        "kac" => suite_kac(table, h),
        "character" => suite_character(table, &bound),
        "all" => {
            let mut all = CheckReport::new("all");
            for s in SUITES {
                all.absorb(run_suite(s, alg, height)?);
            }
            all
        }
        other => {
            return Err(crate::error::Error::domain(format!(
                "unknown suite {other}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    })
}

pub const SUITES: [&str; 6] = ["hopf", "pairing", "composition", "sv", "kac", "character"];
