//! `gspline`: verify, construct and analyse generalized splines from JSON files.
//!
//! Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on
//! any input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gspline::analysis::{self, CheckMode, DEFAULT_BUDGET};
use gspline::construct;
use gspline::gkm;
use gspline::io::{emit_dot, json};
use gspline::{EdgeLabeledGraph, Error, GeneratingFamily, Spline, TreeSkeleton};
use serde_json::Value;

/// Enumerations with more members than this print only their count.
const MAX_LISTED: usize = 1000;

#[derive(Parser, Debug)]
#[command(name = "gspline", version, about = "Generalized splines on edge-labeled graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the GKM condition for a spline; exit 1 if it fails.
    Check { graph: PathBuf, spline: PathBuf },
    /// Flow-up family from a BFS tree at the root.
    Flowup {
        graph: PathBuf,
        #[arg(long)]
        root: Option<String>,
    },
    /// Tree (or path) generating family.
    Treefam {
        graph: PathBuf,
        #[arg(long)]
        root: Option<String>,
    },
    /// Cycle generating family with canonical generators as choices.
    Cyclefam { graph: PathBuf },
    /// GKM matrix, optionally row-reduced along a spanning tree.
    Matrix {
        graph: PathBuf,
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        root: Option<String>,
    },
    /// Every spline over Z/m.
    Enumerate {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Split a spline as r·1 + p' with p' vanishing at the root.
    Decompose {
        graph: PathBuf,
        spline: PathBuf,
        #[arg(long)]
        root: Option<String>,
    },
    /// Check the intersection decompositions of R_G; exit 1 if any fails.
    Selfcheck {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Graphviz rendering, with spline values when a spline is given.
    Dot { graph: PathBuf, spline: Option<PathBuf> },
}

/// An input error; always exit status 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

struct Outcome {
    document: String,
    verdict: bool,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<EdgeLabeledGraph, Failure> {
    json::parse_graph(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_spline(path: &Path, g: &EdgeLabeledGraph) -> Result<Spline, Failure> {
    json::parse_spline(&read(path)?, g).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn root_index(g: &EdgeLabeledGraph, root: Option<&str>, fallback: usize) -> Result<usize, Failure> {
    match root {
        Some(r) => g
            .vertex_index(r)
            .ok_or_else(|| Failure(format!("unknown root vertex `{r}`"))),
        None if g.vertex_count() == 0 => Err(Failure("graph has no vertices".into())),
        None => Ok(fallback),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn tuple(p: &Spline) -> String {
    let parts: Vec<String> = p.values().iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn no_dot(cmd: &str) -> Failure {
    Failure(format!("`{cmd}` has no dot output; use --format json or text"))
}

fn family_text(f: &GeneratingFamily) -> String {
    let mut out = String::new();
    let ids = |vs: &[usize]| vs.iter().map(|&v| f.host.vertex_id(v)).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "vertex order: {}", ids(&f.vertex_order));
    for (i, m) in f.members.iter().enumerate() {
        let flag = if f.flagged[i] { "  [zero factor]" } else { "" };
        let _ = writeln!(
            out,
            "{} @ {}  N = {}{}",
            tuple(m),
            f.host.vertex_id(f.pivots[i]),
            f.scaling_factors[i],
            flag
        );
    }
    let _ = writeln!(out, "triangular: {}", f.is_triangular());
    out
}

fn emit_family(f: &GeneratingFamily, format: Format, cmd: &str) -> Result<Outcome, Failure> {
    let document = match format {
        Format::Json => pretty(&json::family_to_value(f)),
        Format::Text => family_text(f),
        Format::Dot => return Err(no_dot(cmd)),
    };
    Ok(Outcome {
        document,
        verdict: true,
    })
}

fn matrix_text(columns: &[String], rows: &[(Vec<i64>, String)]) -> String {
    let width = rows
        .iter()
        .flat_map(|(c, _)| c.iter().map(|x| x.to_string().len()))
        .chain(columns.iter().map(String::len))
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    let header: Vec<String> = columns.iter().map(|c| format!("{c:>width$}")).collect();
    let _ = writeln!(out, "[ {} | rhs ]", header.join(" "));
    for (coeffs, rhs) in rows {
        let cells: Vec<String> = coeffs.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "[ {} | {} ]", cells.join(" "), rhs);
    }
    out
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Check { graph, spline } => {
            let g = load_graph(&graph)?;
            let p = load_spline(&spline, &g)?;
            let report = gspline::verify(&g, &p)?;
            let document = match format {
                Format::Json => pretty(&json::report_to_value(&g, &report)),
                Format::Dot => emit_dot(&g, Some(&p)),
                Format::Text => {
                    let mut out = String::new();
                    if report.ok {
                        out.push_str("ok\n");
                    } else {
                        let _ = writeln!(out, "not a spline: {} violated edge(s)", report.violations.len());
                        for v in &report.violations {
                            let (a, b) = g.edge_ids(v.edge);
                            let label = g.edges()[v.edge].label();
                            let _ = writeln!(out, "  {a}-{b}: {} not in {label}", v.difference);
                        }
                    }
                    out
                }
            };
            Ok(Outcome {
                document,
                verdict: report.ok,
            })
        }
        Command::Flowup { graph, root } => {
            let g = load_graph(&graph)?;
            let r = root_index(&g, root.as_deref(), 0)?;
            emit_family(&construct::flow_up_family(&g, r)?, format, "flowup")
        }
        Command::Treefam { graph, root } => {
            let g = load_graph(&graph)?;
            let fallback = g.path_order().and_then(|o| o.last().copied()).unwrap_or(0);
            let r = root_index(&g, root.as_deref(), fallback)?;
            emit_family(&construct::tree_generating_family(&g, r, None)?, format, "treefam")
        }
        Command::Cyclefam { graph } => {
            let g = load_graph(&graph)?;
            emit_family(&construct::cycle_generating_family(&g, None)?, format, "cyclefam")
        }
        Command::Matrix { graph, reduced, root } => {
            let g = load_graph(&graph)?;
            let m = gkm::build_gkm_matrix(&g, None)?;
            let (value, rows): (Value, Vec<(Vec<i64>, String)>) = if !reduced {
                let rows = m.rows().iter().map(|r| (r.coeffs.clone(), m.render_rhs(r))).collect();
                (json::matrix_to_value(&m), rows)
            } else {
                let sys = if g.path_order().is_some() && root.is_none() {
                    gkm::path_reduced_form(&m)?
                } else {
                    let r = root_index(&g, root.as_deref(), 0)?;
                    gkm::reduce_via_tree(&m, &TreeSkeleton::bfs_from(&g, r)?)?
                };
                let rows = sys.rows().map(|r| (r.coeffs.clone(), sys.render_rhs(r))).collect();
                (json::reduced_to_value(&sys), rows)
            };
            let document = match format {
                Format::Json => pretty(&value),
                Format::Text => matrix_text(g.vertices(), &rows),
                Format::Dot => return Err(no_dot("matrix")),
            };
            Ok(Outcome {
                document,
                verdict: true,
            })
        }
        Command::Enumerate { graph, budget } => {
            let g = load_graph(&graph)?;
            let set = analysis::enumerate_splines(&g, budget)?;
            let document = match format {
                Format::Json => pretty(&json::spline_set_to_value(&g, &set, MAX_LISTED)),
                Format::Text => {
                    let mut out = format!("count: {}\n", set.count());
                    if set.count() <= MAX_LISTED {
                        for i in 0..set.count() {
                            let _ = writeln!(out, "{}", tuple(&set.spline(i)));
                        }
                    }
                    out
                }
                Format::Dot => return Err(no_dot("enumerate")),
            };
            Ok(Outcome {
                document,
                verdict: true,
            })
        }
        Command::Decompose { graph, spline, root } => {
            let g = load_graph(&graph)?;
            let p = load_spline(&spline, &g)?;
            let r = root_index(&g, root.as_deref(), 0)?;
            let (c, part) = gspline::spline::decompose_at_vertex(&g, &p, g.vertex_id(r))?;
            let document = match format {
                Format::Json => pretty(&serde_json::json!({
                    "vertex": g.vertex_id(r),
                    "constant": json::element_to_value(&c),
                    "anchored": json::spline_to_value(&g, &part),
                })),
                Format::Text => format!("{c}·1 + {}\n", tuple(&part)),
                Format::Dot => return Err(no_dot("decompose")),
            };
            Ok(Outcome {
                document,
                verdict: true,
            })
        }
        Command::Selfcheck {
            graph,
            seed,
            samples,
            budget,
        } => {
            let g = load_graph(&graph)?;
            let mode = CheckMode::auto(g.ring(), seed, samples, budget);
            let tree = TreeSkeleton::bfs(&g)?;
            let reports = vec![
                analysis::check_union_decomposition(&g, &analysis::edge_cover(&g), mode)?,
                analysis::check_spanning_tree_decomposition(&g, mode)?,
                analysis::check_cycle_decomposition(&g, &tree, mode)?,
            ];
            let verdict = reports.iter().all(|r| r.verdict);
            let document = match format {
                Format::Json => pretty(&Value::Array(
                    reports.iter().map(|r| json::decomposition_to_value(&g, r)).collect(),
                )),
                Format::Text => {
                    let mut out = String::new();
                    for r in &reports {
                        let _ = writeln!(out, "{}: {} ({} checked)", r.claim.name(), r.verdict, r.checked);
                        if let Some(c) = &r.counterexample {
                            let _ = writeln!(out, "  counterexample {}", tuple(c));
                        }
                    }
                    out
                }
                Format::Dot => return Err(no_dot("selfcheck")),
            };
            Ok(Outcome { document, verdict })
        }
        Command::Dot { graph, spline } => {
            let g = load_graph(&graph)?;
            let p = spline.map(|s| load_spline(&s, &g)).transpose()?;
            // Always DOT: `--format` does not apply to this subcommand.
            Ok(Outcome {
                document: emit_dot(&g, p.as_ref()),
                verdict: true,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.document);
            if out.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
