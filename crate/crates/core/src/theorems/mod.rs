//! Falsification harness: each statement about Γ_G(N) becomes an implication
//! evaluated on one (G, N) pair, classified as vacuous (hypothesis fails or the
//! quantification is empty), holds, or violated with a re-checkable witness.

mod checks;
mod frobenius;
mod suite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::PrimePower;
use crate::error::Error;
use crate::graph::CDGraph;

pub use checks::{
    check_element_power_lemma, check_lemma_key, check_main_theorem, check_main_theorem_decomposition,
    check_theorem_two_primes, check_two_component_characterization, regular_disconnected_warning,
    reverify, LemmaKeyOutcome,
};
pub use frobenius::{is_frobenius, is_quasi_frobenius_abelian, FrobeniusData};
pub use suite::{run_suite, SuiteOptions, SweepPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StatementId {
    ElementPowerLemma,
    LemmaKeyA,
    LemmaKeyB,
    TheoremTwoPrimes,
    MainTheorem,
    MainTheoremDecomposition,
    TwoComponentCharacterization,
}

impl StatementId {
    pub const ALL: [StatementId; 7] = [
        StatementId::ElementPowerLemma,
        StatementId::LemmaKeyA,
        StatementId::LemmaKeyB,
        StatementId::TheoremTwoPrimes,
        StatementId::MainTheorem,
        StatementId::MainTheoremDecomposition,
        StatementId::TwoComponentCharacterization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatementId::ElementPowerLemma => "ElementPowerLemma",
            StatementId::LemmaKeyA => "LemmaKeyA",
            StatementId::LemmaKeyB => "LemmaKeyB",
            StatementId::TheoremTwoPrimes => "TheoremTwoPrimes",
            StatementId::MainTheorem => "MainTheorem",
            StatementId::MainTheoremDecomposition => "MainTheoremDecomposition",
            StatementId::TwoComponentCharacterization => "TwoComponentCharacterization",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownStatement(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Vacuous,
    Holds,
    Violated,
}

/// The commuting cross-prime configuration (x0, y0) with class sizes
/// v0 = |x0^G|, w0 = |y0^G|, z0 = |(x0·y0)^G|, plus the witnesses v1, w1 when
/// they were found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossPrimeScenario {
    pub p1: u64,
    pub p2: u64,
    pub x0: usize,
    pub y0: usize,
    pub v0: u64,
    pub w0: u64,
    pub z0: u64,
    pub v1: Option<u64>,
    pub w1: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Why the hypothesis did not apply.
    Vacuous { reason: String },
    /// Number of hypothesis instances that were checked.
    Checked { instances: u64 },
    ElementPower {
        x: usize,
        exponent: u64,
        y: usize,
        size_x: u64,
        size_y: u64,
        neighborhood_x: Vec<u64>,
        neighborhood_y: Vec<u64>,
    },
    Scenario {
        scenario: CrossPrimeScenario,
        neighborhood_z0: Vec<u64>,
        vertices: Vec<u64>,
    },
    /// Hypothesis-guard failure: connected and incomplete on fewer than 3 vertices.
    Guard { vertices: Vec<u64> },
    MainTheorem {
        vertices: Vec<u64>,
        central_quotient_order: u64,
        prime: Option<PrimePower>,
        center_of_normal_order: usize,
        normal_cap_center_order: usize,
    },
    Decomposition {
        prime: u64,
        normal_order: usize,
        p_part_order: usize,
        p_prime_part_order: usize,
        failure: Option<String>,
        element: Option<usize>,
    },
    TwoComponent {
        component_count: usize,
        quasi_frobenius: bool,
        frobenius_kernel_order: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    pub statement: StatementId,
    pub status: Status,
    pub witness: Witness,
    pub notes: String,
}

impl VerificationOutcome {
    pub(crate) fn vacuous(statement: StatementId, reason: impl Into<String>) -> Self {
        let reason = reason.into();
        VerificationOutcome {
            statement,
            status: Status::Vacuous,
            notes: reason.clone(),
            witness: Witness::Vacuous { reason },
        }
    }

    pub(crate) fn new(statement: StatementId, ok: bool, witness: Witness, notes: impl Into<String>) -> Self {
        VerificationOutcome {
            statement,
            status: if ok { Status::Holds } else { Status::Violated },
            witness,
            notes: notes.into(),
        }
    }
}

/// Knobs shared by every check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOptions {
    /// Fault injection: negate the completeness predicate everywhere the checks
    /// consult it.
    pub flip_completeness: bool,
}

impl CheckOptions {
    pub fn is_complete(&self, g: &CDGraph) -> bool {
        g.is_complete() != self.flip_completeness
    }
}
