mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ccsgraph::catalog::{default_catalog, Family};
use ccsgraph::cli::{run, EXIT_OK, EXIT_VIOLATIONS};
use ccsgraph::report::SuiteReport;
use ccsgraph::theorems::{is_quasi_frobenius_abelian, StatementId};
use ccsgraph::{CDGraph, ClassData, FiniteGroup, Subgroup, DEFAULT_ORDER_CAP};
use common::*;

type Outcome = Result<String, String>;

fn build(name: &str) -> FiniteGroup {
    Family::parse(name).unwrap().build(DEFAULT_ORDER_CAP).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("ccsgraph").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn class_sizes() -> Outcome {
    let cases: [(&str, Option<usize>, &[u64]); 4] = [
        ("S3", None, &[1, 2, 3]),
        ("S4", Some(12), &[1, 3, 8]),
        ("D8", None, &[1, 2]),
        ("Aff5", None, &[1, 4, 5]),
    ];
    for (name, n_order, expected) in cases {
        let start = Instant::now();
        let g = build(name);
        let n = match n_order {
            Some(k) => g.normal_subgroups().into_iter().find(|s| s.order() == k).unwrap(),
            None => Subgroup::whole(g.order()),
        };
        let cd = ClassData::compute(&g, &n).map_err(|e| e.to_string())?;
        let mut lib: Vec<usize> = cd.classes().iter().map(|c| c.size as usize).collect();
        lib.sort_unstable();
        within(start, Duration::from_secs(1), name)?;

        let elems = raw_elements(&g);
        let whole: BTreeSet<Raw> = elems.iter().cloned().collect();
        let raw_n: BTreeSet<Raw> = n.members().iter().map(|&i| elems[i].clone()).collect();
        let oracle = raw_class_sizes(&whole, &raw_n);
        ensure(lib == oracle, || format!("{name}: library {lib:?}, oracle {oracle:?}"))?;
        ensure(cd.cs_values() == expected, || format!("{name}: cs {:?}", cd.cs_values()))?;
        if name == "D8" {
            ensure(lib == [1, 1, 2, 2, 2], || format!("D8 class multiset {lib:?}"))?;
        }
    }
    Ok("S3, A4 in S4, D8, Aff5 match the oracle".into())
}

fn orbit_stabilizer() -> Outcome {
    let mut checked = 0;
    for f in default_catalog(false).into_iter().filter(|f| f.expected_order().unwrap() <= 1000) {
        let g = f.build(DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
        let cd = ClassData::compute(&g, &Subgroup::whole(g.order())).map_err(|e| e.to_string())?;
        for x in 0..g.order() {
            let size = cd.class_size(x).unwrap() as usize;
            let cent = g.centralizer(x).order();
            ensure(size * cent == g.order(), || format!("{f}: element {x}: {size} * {cent} != {}", g.order()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} elements"))
}

fn graph_predicates() -> Outcome {
    let g = CDGraph::build(&[2, 3]).map_err(|e| e.to_string())?;
    ensure(!g.is_connected() && g.component_count() == 2 && g.edges().is_empty(), || "{2,3}".into())?;
    let g = CDGraph::build(&[4, 6, 9]).map_err(|e| e.to_string())?;
    ensure(
        g.edges() == [(4, 6), (6, 9)] && g.is_connected() && !g.is_regular() && !g.is_complete(),
        || "{4,6,9}".into(),
    )?;
    let g = CDGraph::build(&[6, 10, 15]).map_err(|e| e.to_string())?;
    ensure(g.is_complete() && g.is_regular() && g.edges().len() == 3, || "{6,10,15}".into())?;
    let g = CDGraph::build(&[2, 4]).map_err(|e| e.to_string())?;
    ensure(g.partner_classes() == [vec![2, 4]], || format!("{{2,4}} partners {:?}", g.partner_classes()))?;
    Ok("exact".into())
}

fn two_components() -> Outcome {
    let start = Instant::now();
    let mut positives = BTreeSet::new();
    let mut count = 0;
    for f in default_catalog(false).into_iter().filter(|f| f.expected_order().unwrap() <= 200) {
        let g = f.build(DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
        let cd = ClassData::compute(&g, &Subgroup::whole(g.order())).map_err(|e| e.to_string())?;
        let two = cd.graph().component_count() == 2;
        let qf = is_quasi_frobenius_abelian(&g).map_err(|e| e.to_string())?;
        ensure(two == qf, || format!("{f}: two components {two}, quasi-Frobenius {qf}"))?;
        if two {
            positives.insert(f.to_string());
        }
        count += 1;
    }
    within(start, Duration::from_secs(60), "sweep")?;
    for p in ["S3", "A4", "D10", "Aff5", "Aff7"] {
        ensure(positives.contains(p), || format!("{p} expected positive"))?;
    }
    for n in ["C1", "C2", "C7", "C12", "C24", "D8", "Q8", "S4"] {
        ensure(!positives.contains(n), || format!("{n} expected negative"))?;
    }
    Ok(format!("{count} groups, {} positive", positives.len()))
}

fn theorem_sweep() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("r.json");
    let start = Instant::now();
    let (code, _) = cli(&["verify", "--max-order", "384", "--out", path.to_str().unwrap()]);
    within(start, Duration::from_secs(600), "verify")?;
    let report: SuiteReport =
        serde_json::from_str(&std::fs::read_to_string(&path).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(code == EXIT_OK && report.total_violations == 0, || {
        format!("exit {code}, {} violations", report.total_violations)
    })?;
    ensure(report.errors.is_empty(), || format!("{} pair errors", report.errors.len()))?;
    let epl = report.counts[&StatementId::ElementPowerLemma].non_vacuous();
    ensure(epl > 0, || "no non-vacuous ElementPowerLemma evaluations".into())?;
    Ok(format!("{} pairs, 0 violations, {epl} non-vacuous ElementPowerLemma", report.pair_count))
}

fn normal_subgroups() -> Outcome {
    let mut count = 0;
    for f in default_catalog(false).into_iter().filter(|f| f.expected_order().unwrap() <= 48) {
        let g = f.build(DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
        let lib: Vec<Vec<usize>> = g.normal_subgroups().iter().map(|s| s.members().to_vec()).collect();
        let brute = brute_normal_subgroups(&g);
        ensure(lib == brute, || format!("{f}: {} vs {} normal subgroups", lib.len(), brute.len()))?;
        count += 1;
    }
    let s4 = build("S4").normal_subgroups().len();
    ensure(s4 == 4, || format!("S4 has {s4} normal subgroups"))?;
    Ok(format!("{count} groups"))
}

fn mutation() -> Outcome {
    let (code, json) = cli(&["verify", "--max-order", "120", "--inject-fault", "flip-complete"]);
    let report: SuiteReport = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    ensure(code == EXIT_VIOLATIONS && report.total_violations > 0, || format!("exit {code}"))?;
    Ok(format!("exit 1, {} violations", report.total_violations))
}

fn performance() -> Outcome {
    let start = Instant::now();
    let g = build("S7");
    let cd = ClassData::compute(&g, &Subgroup::whole(g.order())).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    within(start, Duration::from_secs(10), "S7")?;
    ensure(g.order() == 5040 && cd.classes().len() == 15, || format!("order {}, {} classes", g.order(), cd.classes().len()))?;
    Ok(format!("{t:.2?}"))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        cli(&["verify", "--max-order", "120", "--out", p.to_str().unwrap()]);
    }
    let (x, y) = (std::fs::read(&a).map_err(|e| e.to_string())?, std::fs::read(&b).map_err(|e| e.to_string())?);
    ensure(!x.is_empty() && x == y, || "reports differ".into())?;
    Ok(format!("{} bytes identical", x.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("class-size ground truth", class_sizes),
        ("orbit-stabilizer consistency", orbit_stabilizer),
        ("graph predicates", graph_predicates),
        ("two-component biconditional", two_components),
        ("theorem sweep", theorem_sweep),
        ("normal-subgroup enumeration", normal_subgroups),
        ("mutation sensitivity", mutation),
        ("performance", performance),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
