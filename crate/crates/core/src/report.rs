//! JSON documents: the sweep report and the single-graph export.
//!
//! Every document carries `"schema": 1`. Field order is fixed by the struct
//! definitions and records are sorted, so serialization is byte-reproducible.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::CDGraph;
use crate::theorems::{StatementId, Status, VerificationOutcome};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: Vec<u64>,
    pub degrees: Vec<usize>,
    pub component_count: usize,
    pub regular: bool,
    pub complete: bool,
    pub connected: bool,
}

impl From<&CDGraph> for GraphSummary {
    fn from(g: &CDGraph) -> Self {
        GraphSummary {
            vertices: g.vertices().to_vec(),
            degrees: g.degrees(),
            component_count: g.component_count(),
            regular: g.is_regular(),
            complete: g.is_complete(),
            connected: g.is_connected(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub group: String,
    pub group_index: usize,
    /// Position of N in the sorted normal-subgroup list of G.
    pub normal_index: usize,
    pub subgroup: String,
    pub group_order: usize,
    pub normal_order: usize,
    pub normal_cap_center_order: usize,
    pub center_of_normal_order: usize,
    pub class_sizes: Vec<u64>,
    pub graph: GraphSummary,
    pub outcomes: Vec<VerificationOutcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairError {
    pub group: String,
    pub subgroup: String,
    pub message: String,
    pub resource: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusCounts {
    pub vacuous: u64,
    pub holds: u64,
    pub violated: u64,
}

impl StatusCounts {
    pub fn add(&mut self, s: Status) {
        match s {
            Status::Vacuous => self.vacuous += 1,
            Status::Holds => self.holds += 1,
            Status::Violated => self.violated += 1,
        }
    }

    pub fn non_vacuous(&self) -> u64 {
        self.holds + self.violated
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub tool_version: String,
    pub statements: Vec<StatementId>,
    pub fault_injection: bool,
    pub pair_count: usize,
    pub total_violations: u64,
    pub counts: BTreeMap<StatementId, StatusCounts>,
    pub warnings: Vec<String>,
    pub errors: Vec<PairError>,
    pub records: Vec<PairRecord>,
}

impl SuiteReport {
    pub fn new(statements: Vec<StatementId>, fault_injection: bool) -> Self {
        SuiteReport {
            schema: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            counts: statements.iter().map(|&s| (s, StatusCounts::default())).collect(),
            statements,
            fault_injection,
            pair_count: 0,
            total_violations: 0,
            warnings: Vec::new(),
            errors: Vec::new(),
            records: Vec::new(),
        }
    }

    /// Sorts records and recomputes the aggregate counts from them.
    pub fn finalize(&mut self) {
        self.records
            .sort_by(|a, b| (a.group_index, a.normal_index).cmp(&(b.group_index, b.normal_index)));
        for c in self.counts.values_mut() {
            *c = StatusCounts::default();
        }
        for r in &self.records {
            for o in &r.outcomes {
                self.counts.entry(o.statement).or_default().add(o.status);
            }
        }
        self.total_violations = self.counts.values().map(|c| c.violated).sum();
        self.pair_count = self.records.len() + self.errors.len();
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn violations(&self) -> impl Iterator<Item = (&PairRecord, &VerificationOutcome)> {
        self.records.iter().flat_map(|r| {
            r.outcomes
                .iter()
                .filter(|o| o.status == Status::Violated)
                .map(move |o| (r, o))
        })
    }

    /// One line per statement plus the violation total.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<30} {:>8} {:>8} {:>8}\n",
            "statement", "vacuous", "holds", "violated"
        ));
        for (id, c) in &self.counts {
            out.push_str(&format!(
                "{:<30} {:>8} {:>8} {:>8}\n",
                id.name(),
                c.vacuous,
                c.holds,
                c.violated
            ));
        }
        out.push_str(&format!(
            "pairs: {}  errors: {}  warnings: {}\n",
            self.pair_count,
            self.errors.len(),
            self.warnings.len()
        ));
        if self.total_violations > 0 {
            out.push_str(&format!("VIOLATIONS: {}\n", self.total_violations));
            for (r, o) in self.violations() {
                out.push_str(&format!(
                    "  {} / {}: {} ({})\n",
                    r.group, r.subgroup, o.statement, o.notes
                ));
            }
        } else {
            out.push_str("violations: 0\n");
        }
        out
    }
}

/// JSON form of a single common-divisor graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub schema: u32,
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
    pub degrees: Vec<usize>,
    pub regular: bool,
    pub complete: bool,
    pub connected: bool,
    pub components: Vec<Vec<u64>>,
}

impl From<&CDGraph> for GraphDocument {
    fn from(g: &CDGraph) -> Self {
        GraphDocument {
            schema: SCHEMA_VERSION,
            vertices: g.vertices().to_vec(),
            edges: g.edges(),
            degrees: g.degrees(),
            regular: g.is_regular(),
            complete: g.is_complete(),
            connected: g.is_connected(),
            components: g.components(),
        }
    }
}

/// DOT rendering: one node per vertex, one undirected edge per adjacent pair,
/// both in ascending order.
pub fn to_dot(g: &CDGraph) -> String {
    let mut out = String::from("graph cs_graph {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    out.push_str("}\n");
    out
}
