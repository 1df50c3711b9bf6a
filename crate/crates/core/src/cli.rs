//! Command-line front end. The binary only forwards `std::env::args` here, so
//! tests drive the same code through [`run`].
//!
//! Exit codes: 0 success / no violations, 1 violations found, 2 usage or parse
//! error, 3 resource cap exceeded.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{default_catalog, Family};
use crate::classes::ClassData;
use crate::error::{Error, Result};
use crate::group::{order_cap_from_env, FiniteGroup};
use crate::report::{to_dot, GraphDocument, SCHEMA_VERSION};
use crate::sweep::{search, select_catalog, sweep_pairs, GroupFilter, NormalSelector};
use crate::theorems::{run_suite, CheckOptions, StatementId, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ccsgraph", version, about = "Common-divisor graphs on G-class sizes of normal subgroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the G-conjugacy classes of N.
    Classes {
        /// Catalog name (e.g. S4, D8xC3) or file:<path>.
        group: String,
        /// self | auto | <index> | file:<path>
        #[arg(long, default_value = "self")]
        normal: String,
        /// Emit JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Export the common-divisor graph on cs_G(N) \ {1}.
    Graph {
        group: String,
        #[arg(long, default_value = "self")]
        normal: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Run the theorem checks over the catalog.
    Verify {
        #[arg(long, default_value_t = 120)]
        max_order: usize,
        /// Comma-separated statement names.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Write the JSON report here and print a summary to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated group names; a trailing `*` matches a prefix.
        #[arg(long)]
        groups: Option<String>,
        /// Include S7.
        #[arg(long)]
        large: bool,
        /// Evaluate pairs on one thread.
        #[arg(long)]
        sequential: bool,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Find pairs whose graph is connected, incomplete and regular.
    Search {
        #[arg(long, default_value_t = 120)]
        max_order: usize,
        #[arg(long)]
        groups: Option<String>,
        #[arg(long)]
        large: bool,
        #[arg(long)]
        json: bool,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Print every default-catalog entry with its order.
    List {
        #[arg(long)]
        large: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Negate the completeness predicate inside the checks.
    FlipComplete,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::UnknownStatement(_) = e {
                let names: Vec<&str> = StatementId::ALL.iter().map(|s| s.name()).collect();
                let _ = writeln!(err, "usage: ccsgraph verify --only STMT[,STMT...]");
                let _ = writeln!(err, "statements: {}", names.join(", "));
            }
            if e.is_resource() {
                EXIT_RESOURCE
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn load_group(spec: &str, cap: usize) -> Result<FiniteGroup> {
    Family::parse(spec)?.build(cap)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let cap = order_cap_from_env();
    match command {
        Command::Classes { group, normal, json } => {
            let g = load_group(&group, cap)?;
            let selector: NormalSelector = normal.parse()?;
            cmd_classes(&group, &g, &selector, json, out)?;
            Ok(EXIT_OK)
        }
        Command::Graph { group, normal, format } => {
            let g = load_group(&group, cap)?;
            let selector: NormalSelector = normal.parse()?;
            cmd_graph(&g, &selector, format, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            max_order,
            only,
            out: out_path,
            groups,
            large,
            sequential,
            inject_fault,
        } => {
            if max_order > cap {
                return Err(Error::InvalidParameter(format!(
                    "--max-order {max_order} exceeds the order cap {cap}"
                )));
            }
            let statements = if only.is_empty() {
                StatementId::ALL.to_vec()
            } else {
                only.iter().map(|s| s.parse()).collect::<Result<Vec<StatementId>>>()?
            };
            let filter = GroupFilter::parse(groups.as_deref().unwrap_or(""));
            let pairs = sweep_pairs(&select_catalog(&filter, max_order, large), cap)?;
            let options = SuiteOptions {
                statements,
                check: CheckOptions {
                    flip_completeness: inject_fault == Some(Fault::FlipComplete),
                },
                parallel: !sequential,
            };
            let report = run_suite(&pairs, &options);
            let json = report.to_json()?;
            match out_path {
                Some(path) => {
                    std::fs::write(&path, json)?;
                    out.write_all(report.summary().as_bytes())?;
                }
                None => {
                    out.write_all(json.as_bytes())?;
                    err.write_all(report.summary().as_bytes())?;
                }
            }
            Ok(if report.total_violations > 0 {
                EXIT_VIOLATIONS
            } else if report.errors.iter().any(|e| e.resource) {
                EXIT_RESOURCE
            } else {
                EXIT_OK
            })
        }
        Command::Search {
            max_order,
            groups,
            large,
            json,
        } => {
            if max_order > cap {
                return Err(Error::InvalidParameter(format!(
                    "--max-order {max_order} exceeds the order cap {cap}"
                )));
            }
            let filter = GroupFilter::parse(groups.as_deref().unwrap_or(""));
            let pairs = sweep_pairs(&select_catalog(&filter, max_order, large), cap)?;
            let hits = search(&pairs)?;
            if json {
                #[derive(Serialize)]
                struct Doc<'a> {
                    schema: u32,
                    pairs_searched: usize,
                    hits: &'a [crate::sweep::SearchHit],
                }
                let doc = Doc {
                    schema: SCHEMA_VERSION,
                    pairs_searched: pairs.len(),
                    hits: &hits,
                };
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else if hits.is_empty() {
                writeln!(out, "searched {} pairs", pairs.len())?;
                writeln!(out, "no instances found")?;
            } else {
                writeln!(out, "searched {} pairs, {} hits", pairs.len(), hits.len())?;
                for h in &hits {
                    writeln!(
                        out,
                        "{} / {}: cs = {:?}, vertices = {:?}, main theorem {:?}, p = {}, Z(N) != N∩Z(G): {}",
                        h.group,
                        h.subgroup,
                        h.class_sizes,
                        h.vertices,
                        h.main_theorem,
                        h.prime.map_or("none".to_string(), |p| p.to_string()),
                        h.centers_differ
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Catalog {
            action: CatalogAction::List { large },
        } => {
            for f in default_catalog(large) {
                writeln!(out, "{:<12} {}", f.to_string(), f.expected_order().unwrap_or(0))?;
            }
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct ClassRow {
    representative: String,
    size: u64,
}

#[derive(Serialize)]
struct ClassesDocument {
    schema: u32,
    group: String,
    subgroup: String,
    group_order: usize,
    normal_order: usize,
    normal_cap_center_order: usize,
    center_of_normal_order: usize,
    classes: Vec<ClassRow>,
    class_sizes: Vec<u64>,
    vertices: Vec<u64>,
}

fn fmt_set(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn cmd_classes(name: &str, g: &FiniteGroup, sel: &NormalSelector, json: bool, out: &mut dyn Write) -> Result<()> {
    let mut docs = Vec::new();
    for (k, n) in sel.resolve(g)? {
        let cd = ClassData::compute(g, &n)?;
        docs.push(ClassesDocument {
            schema: SCHEMA_VERSION,
            group: name.to_string(),
            subgroup: format!("N[{k}] order {}", n.order()),
            group_order: g.order(),
            normal_order: n.order(),
            normal_cap_center_order: cd.normal_cap_center().order(),
            center_of_normal_order: cd.center_of_normal().order(),
            classes: cd
                .classes()
                .iter()
                .map(|c| ClassRow {
                    representative: g.label(c.representative),
                    size: c.size,
                })
                .collect(),
            class_sizes: cd.cs_values().to_vec(),
            vertices: cd.vertex_sizes().to_vec(),
        });
    }
    if json {
        let text = if docs.len() == 1 {
            serde_json::to_string_pretty(&docs[0])?
        } else {
            serde_json::to_string_pretty(&docs)?
        };
        writeln!(out, "{text}")?;
        return Ok(());
    }
    for d in &docs {
        writeln!(out, "group {} (order {}), {}", d.group, d.group_order, d.subgroup)?;
        writeln!(
            out,
            "|N ∩ Z(G)| = {}, |Z(N)| = {}",
            d.normal_cap_center_order, d.center_of_normal_order
        )?;
        let width = d.classes.iter().map(|c| c.representative.len()).max().unwrap_or(0).max(14);
        writeln!(out, "  {:<width$}  size", "representative")?;
        for c in &d.classes {
            writeln!(out, "  {:<width$}  {}", c.representative, c.size)?;
        }
        writeln!(out, "cs_G(N) = {}", fmt_set(&d.class_sizes))?;
        if d.vertices.is_empty() {
            writeln!(out, "graph empty: every element of N is central in G")?;
        } else {
            writeln!(out, "vertices = {}", fmt_set(&d.vertices))?;
        }
    }
    Ok(())
}

fn cmd_graph(g: &FiniteGroup, sel: &NormalSelector, format: GraphFormat, out: &mut dyn Write) -> Result<()> {
    let graphs = sel
        .resolve(g)?
        .into_iter()
        .map(|(_, n)| ClassData::compute(g, &n).map(|cd| cd.graph()))
        .collect::<Result<Vec<_>>>()?;
    match format {
        GraphFormat::Dot => {
            for gr in &graphs {
                out.write_all(to_dot(gr).as_bytes())?;
            }
        }
        GraphFormat::Json => {
            let docs: Vec<GraphDocument> = graphs.iter().map(GraphDocument::from).collect();
            let text = if docs.len() == 1 {
                serde_json::to_string_pretty(&docs[0])?
            } else {
                serde_json::to_string_pretty(&docs)?
            };
            writeln!(out, "{text}")?;
        }
    }
    Ok(())
}
