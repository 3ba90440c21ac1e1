//! Named suites of checks over one `n`, with a deterministic JSON report.

mod session;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

pub use session::{check_size, Session, DEFAULT_CAP, LARGE_CAP};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Dims,
    Duality,
    OperatorTheorem,
    Cogeneration,
    Hamiltonian,
    Lefschetz,
    Phi,
    Vanishing,
    Differentials,
    OracleCatalan,
    Figure1,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Dims,
        Suite::Duality,
        Suite::OperatorTheorem,
        Suite::Cogeneration,
        Suite::Hamiltonian,
        Suite::Lefschetz,
        Suite::Phi,
        Suite::Vanishing,
        Suite::Differentials,
        Suite::OracleCatalan,
        Suite::Figure1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dims => "dims",
            Suite::Duality => "duality",
            Suite::OperatorTheorem => "operator-theorem",
            Suite::Cogeneration => "cogeneration",
            Suite::Hamiltonian => "hamiltonian",
            Suite::Lefschetz => "lefschetz",
            Suite::Phi => "phi",
            Suite::Vanishing => "vanishing",
            Suite::Differentials => "differentials",
            Suite::OracleCatalan => "oracle-catalan",
            Suite::Figure1 => "figure1",
        }
    }

    /// Parses a suite name, or `all` for every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.parse().map(|x| vec![x])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::InvalidArgument(format!(
                    "unknown suite {s:?}; expected all or one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Outcome of one named check. `witness` describes the observed value on
/// success and the first counterexample on failure.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: String,
    /// Wall time, only recorded on request so that reports stay reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub n: usize,
    pub suite: String,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Collects checks, turning computation errors into failed checks.
pub(crate) struct Recorder {
    prefix: String,
    timings: bool,
    checks: Vec<Check>,
}

impl Recorder {
    pub(crate) fn check(
        &mut self,
        name: impl Into<String>,
        f: impl FnOnce() -> Result<(bool, String)>,
    ) {
        let start = Instant::now();
        let (passed, witness) = match f() {
            Ok(x) => x,
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(Check {
            name: format!("{}{}", self.prefix, name.into()),
            passed,
            witness,
            seconds: self.timings.then(|| start.elapsed().as_secs_f64()),
        });
    }
}

/// Runs `suites` in order. Check names are prefixed with the suite name
/// when more than one suite runs.
pub fn run(session: &Session, suites: &[Suite], timings: bool) -> Report {
    let label = if suites.len() == Suite::ALL.len()
        && suites.iter().zip(Suite::ALL).all(|(a, b)| *a == b)
    {
        "all".to_string()
    } else {
        suites
            .iter()
            .map(|s| s.name())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut checks = Vec::new();
    for &suite in suites {
        let mut rec = Recorder {
            prefix: if suites.len() > 1 {
                format!("{suite}: ")
            } else {
                String::new()
            },
            timings,
            checks: Vec::new(),
        };
        suites::run_suite(suite, session, &mut rec);
        checks.extend(rec.checks);
    }
    Report {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        n: session.n(),
        suite: label,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}
