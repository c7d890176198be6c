//! Oracle-grounded verification harness.
//!
//! Diagram checks compare every route around the projection diagrams with
//! the complex-vector oracle and gate on a tolerance. Claims compare printed
//! closed forms and invariance statements with the oracle and are classified
//! CONFIRMED or DEVIATING; only claims marked `forced` affect the exit code.

mod claims;
mod diagrams;
pub mod printed;
mod sampling;
mod scans;

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use claims::claims_report;
pub use diagrams::{
    check_diagram_1q, check_diagram_1q_with, check_diagram_2q, check_diagram_2q_with,
    check_diagram_3q, check_diagram_3q_with, check_diagram_sp2, check_diagram_sp2_with,
    check_hadamard, check_sp2_embedding, ThreeQubitPaths, UnitaryFamily,
};
pub use sampling::{nan_max, sample_max, Sampled, MAX_ATTEMPTS, NEAR_INFINITY};
pub use scans::{invariance_scan, separability_scan};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagramCheck {
    pub name: String,
    pub sample_count: usize,
    pub max_chordal_error: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip)]
    pub resampled: u64,
}

impl DiagramCheck {
    pub fn new(name: &str, sample_count: usize, max_chordal_error: f64, tolerance: f64) -> Self {
        DiagramCheck {
            name: name.into(),
            sample_count,
            max_chordal_error,
            tolerance,
            pass: max_chordal_error < tolerance,
            resampled: 0,
        }
    }

    fn with_resampled(mut self, resampled: u64) -> Self {
        self.resampled = resampled;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Confirmed,
    Deviating,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimStatus {
    pub claim_id: String,
    pub location: String,
    pub verdict: Verdict,
    pub max_error: f64,
    pub tolerance: f64,
    pub forced: bool,
    pub notes: String,
    #[serde(skip)]
    pub resampled: u64,
}

impl ClaimStatus {
    pub fn new(
        claim_id: &str,
        location: &str,
        max_error: f64,
        tolerance: f64,
        forced: bool,
    ) -> Self {
        ClaimStatus {
            claim_id: claim_id.into(),
            location: location.into(),
            verdict: if max_error < tolerance {
                Verdict::Confirmed
            } else {
                Verdict::Deviating
            },
            max_error,
            tolerance,
            forced,
            notes: String::new(),
            resampled: 0,
        }
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    fn with_resampled(mut self, resampled: u64) -> Self {
        self.resampled = resampled;
        self
    }

    pub fn confirmed(&self) -> bool {
        self.verdict == Verdict::Confirmed
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Diagrams,
    Claims,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "diagrams" => Ok(Suite::Diagrams),
            "claims" => Ok(Suite::Claims),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<DiagramCheck>,
    pub claims: Vec<ClaimStatus>,
    pub seed: u64,
    pub n: usize,
    pub resampled_near_infinity: u64,
}

impl Report {
    /// Names of failed diagram checks and forced claims.
    pub fn forced_failures(&self) -> Vec<&str> {
        let checks = self
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str());
        let claims = self
            .claims
            .iter()
            .filter(|c| c.forced && !c.confirmed())
            .map(|c| c.claim_id.as_str());
        checks.chain(claims).collect()
    }

    /// 0 when every forced check passes, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.forced_failures().is_empty() {
            0
        } else {
            2
        }
    }
}

/// All diagram checks: the one-qubit, Hadamard, two-qubit, Sp(2) and the
/// forced three-qubit routes.
pub fn diagram_checks(seed: u64, n: usize) -> Vec<DiagramCheck> {
    let mut checks = vec![check_diagram_1q(seed, n)];
    checks.extend(check_hadamard());
    checks.push(check_diagram_2q(seed, n));
    checks.push(check_diagram_sp2(seed, n));
    checks.push(check_sp2_embedding(seed, n));
    checks.extend(check_diagram_3q(seed, n).checks);
    checks
}

/// Every claim: printed expansions, the OMT paths, and both scans.
pub fn all_claims(seed: u64, n: usize) -> Vec<ClaimStatus> {
    let mut claims = claims_report(seed, n);
    claims.push(separability_scan(seed, n));
    claims.extend(invariance_scan(seed, n));
    claims
}

pub fn run(suite: Suite, seed: u64, n: usize) -> Report {
    let checks = match suite {
        Suite::Claims => Vec::new(),
        _ => diagram_checks(seed, n),
    };
    let claims = match suite {
        Suite::Diagrams => Vec::new(),
        _ => all_claims(seed, n),
    };
    let resampled_near_infinity = checks.iter().map(|c| c.resampled).sum::<u64>()
        + claims.iter().map(|c| c.resampled).sum::<u64>();
    Report {
        checks,
        claims,
        seed,
        n,
        resampled_near_infinity,
    }
}
