use std::sync::Arc;

use rayon::prelude::*;

use crate::classes::ClassData;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::report::{GraphSummary, PairError, PairRecord, SuiteReport};
use crate::subgroup::Subgroup;

use super::checks::*;
use super::{CheckOptions, StatementId, Status, VerificationOutcome};

/// One (G, N) instance for the sweep.
#[derive(Clone, Debug)]
pub struct SweepPair {
    pub group_name: String,
    pub group_index: usize,
    pub group: Arc<FiniteGroup>,
    pub normal: Subgroup,
    pub normal_index: usize,
}

impl SweepPair {
    pub fn descriptor(&self) -> String {
        format!("N[{}] order {}", self.normal_index, self.normal.order())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub statements: Vec<StatementId>,
    pub check: CheckOptions,
    pub parallel: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            statements: StatementId::ALL.to_vec(),
            check: CheckOptions::default(),
            parallel: true,
        }
    }
}

/// Runs every selected statement on every pair. Per-pair failures are
/// recorded in the report rather than aborting the run.
pub fn run_suite(pairs: &[SweepPair], options: &SuiteOptions) -> SuiteReport {
    let eval = |p: &SweepPair| evaluate(p, options);
    let results: Vec<(Result<PairRecord>, Vec<String>)> = if options.parallel {
        pairs.par_iter().map(eval).collect()
    } else {
        pairs.iter().map(eval).collect()
    };
    let mut report = SuiteReport::new(options.statements.clone(), options.check.flip_completeness);
    for (pair, (result, warnings)) in pairs.iter().zip(results) {
        report.warnings.extend(warnings);
        match result {
            Ok(rec) => report.records.push(rec),
            Err(e) => report.errors.push(PairError {
                group: pair.group_name.clone(),
                subgroup: pair.descriptor(),
                resource: e.is_resource(),
                message: e.to_string(),
            }),
        }
    }
    report.finalize();
    report
}

fn evaluate(pair: &SweepPair, options: &SuiteOptions) -> (Result<PairRecord>, Vec<String>) {
    let mut warnings = Vec::new();
    let rec = evaluate_inner(pair, options, &mut warnings);
    (rec, warnings)
}

fn evaluate_inner(pair: &SweepPair, options: &SuiteOptions, warnings: &mut Vec<String>) -> Result<PairRecord> {
    let g = pair.group.as_ref();
    let cd = ClassData::compute(g, &pair.normal)?;
    let graph = cd.graph();
    let opts = &options.check;
    let wants = |id| options.statements.contains(&id);
    let mut outcomes: Vec<VerificationOutcome> = Vec::new();

    if wants(StatementId::ElementPowerLemma) {
        outcomes.push(check_element_power_lemma(&cd, opts));
    }
    if wants(StatementId::LemmaKeyA) || wants(StatementId::LemmaKeyB) {
        let lk = check_lemma_key(&cd, opts);
        if wants(StatementId::LemmaKeyA) {
            outcomes.push(lk.part_a);
        }
        if wants(StatementId::LemmaKeyB) {
            outcomes.push(lk.part_b);
        }
    }
    if wants(StatementId::TheoremTwoPrimes) {
        outcomes.push(check_theorem_two_primes(&cd, opts));
    }
    if wants(StatementId::MainTheorem) {
        outcomes.push(check_main_theorem(&cd, opts));
    }
    if wants(StatementId::MainTheoremDecomposition) {
        outcomes.push(check_main_theorem_decomposition(&cd, opts));
    }
    if wants(StatementId::TwoComponentCharacterization) {
        let n = g.subgroup_as_group(&pair.normal);
        outcomes.push(check_two_component_characterization(&n)?);
    }

    let tag = format!("{} / {}", pair.group_name, pair.descriptor());
    if let Some(w) = regular_disconnected_warning(&graph) {
        warnings.push(format!("{tag}: {w}"));
    }
    let status_of = |id| outcomes.iter().find(|o| o.statement == id).map(|o| o.status);
    if matches!(status_of(StatementId::MainTheorem), Some(Status::Holds | Status::Violated)) {
        for id in [StatementId::LemmaKeyA, StatementId::LemmaKeyB, StatementId::TheoremTwoPrimes] {
            if status_of(id) == Some(Status::Violated) {
                warnings.push(format!("{tag}: {id} violated on a pair meeting the main hypothesis"));
            }
        }
    }
    for o in outcomes.iter().filter(|o| o.status == Status::Violated) {
        if o.statement != StatementId::TwoComponentCharacterization && !reverify(&cd, o, opts) {
            warnings.push(format!("{tag}: {} witness did not re-verify", o.statement));
        }
    }

    Ok(PairRecord {
        group: pair.group_name.clone(),
        group_index: pair.group_index,
        normal_index: pair.normal_index,
        subgroup: pair.descriptor(),
        group_order: g.order(),
        normal_order: pair.normal.order(),
        normal_cap_center_order: cd.normal_cap_center().order(),
        center_of_normal_order: cd.center_of_normal().order(),
        class_sizes: cd.cs_values().to_vec(),
        graph: GraphSummary::from(&graph),
        outcomes,
    })
}
