//! The `listchoose` command-line tool.
//!
//! Exit codes: 0 yes/feasible/pass, 1 no/infeasible/fail, 2 usage or data
//! error, 3 assignment budget exceeded. Machine-readable JSON goes to
//! stdout, diagnostics to stderr; output is byte-identical across runs and
//! `--jobs` settings.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use listchoose::choosability::{
    decide_23_3_ch_bipartite, is_critical, is_fk_choosable, recognize_23_choosable,
    recognize_2_choosable, ChooseError, ChooseOptions, Verdict23,
};
use listchoose::gadgets::{
    bipartite_critical_gadget, c6_preext_reduction, forall_variable_gadget, gadget_g, gadget_g3,
    gadget_h, hypergraph_reduction, listcol_reduction_34, pad_subgrid_to_grid, path_transmitter,
    GadgetWithRoles, GlueSpec,
};
use listchoose::graph::{block_decomposition, compute_core, graph_to_dot, graph_to_json};
use listchoose::listcolor::{solve, ListAssignment, SizeFunction};
use listchoose_cli::facts::{run_facts, FactContext, FactStatus};
use listchoose_cli::load_graph;

#[derive(Parser)]
#[command(
    name = "listchoose",
    version,
    about = "List coloring and bounded-palette choosability"
)]
struct Cli {
    /// Worker threads for the exhaustive deciders.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Cap on enumerated list assignments before giving up (exit 3).
    #[arg(long, global = true, default_value_t = 100_000_000)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy)]
enum Problem {
    /// 2-choosability (core in {K1, even cycles, theta_{2,2,2m}}).
    #[value(name = "2ch")]
    TwoCh,
    /// [2,3]-choosability (additionally K_{2,m}, m >= 4).
    #[value(name = "23ch")]
    TwoThreeCh,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a list-coloring instance; prints the canonical coloring.
    Color {
        /// Graph JSON file or descriptor (e.g. chocolate, theta:2,2,4).
        graph: String,
        /// List assignment JSON file.
        lists: PathBuf,
        /// Pins v=c (repeatable).
        #[arg(long = "pin")]
        pins: Vec<String>,
    },
    /// Decide [f,k]-choosability exhaustively.
    Choosable {
        graph: String,
        /// Uniform list size.
        #[arg(long, conflicts_with = "sizes")]
        uniform: Option<u8>,
        /// Size-function JSON file ({"sizes": {...}}).
        #[arg(long)]
        sizes: Option<PathBuf>,
        #[arg(long)]
        palette: u8,
        /// Disable canonical-representative pruning under palette permutations.
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Check ([f,k], V')-criticality.
    Critical {
        graph: String,
        sizes: PathBuf,
        #[arg(long)]
        palette: u8,
        /// Comma-separated vertices of V'.
        #[arg(long)]
        subset: String,
    },
    /// Run a polynomial recognizer.
    Recognize {
        graph: String,
        #[arg(long)]
        problem: Problem,
        /// For 23ch with designated 2-list vertices (comma-separated):
        /// run the bipartite [{2,3},3] decision procedure instead.
        #[arg(long)]
        two_lists: Option<String>,
    },
    /// Print the core (after repeated degree-1 deletion).
    Core { graph: String },
    /// Print the block decomposition.
    Blocks { graph: String },
    /// Build a named gadget and write its graph (and lists/sizes).
    Gadget {
        /// forall | transmitter | H | G3 | G | bipcrit | hyperred |
        /// c6preext | padgrid | listcol34
        name: String,
        #[arg(long)]
        out: PathBuf,
        /// Where to write the canonical list assignment, if the gadget has one.
        #[arg(long)]
        lists: Option<PathBuf>,
        /// Where to write the gadget's size function.
        #[arg(long)]
        sizes_out: Option<PathBuf>,
        /// Input graph (file or descriptor) for c6preext/padgrid/listcol34,
        /// or hypergraph JSON file for hyperred.
        #[arg(long)]
        input: Option<String>,
        /// Input list assignment (listcol34).
        #[arg(long)]
        lists_in: Option<PathBuf>,
        /// Input size function (padgrid).
        #[arg(long)]
        sizes: Option<PathBuf>,
        /// Transmitter path length.
        #[arg(long)]
        length: Option<u32>,
        /// Transmitter target color (0..=2, pre-shift).
        #[arg(long)]
        target: Option<u8>,
        /// Bipartite critical gadget parameter l >= 2.
        #[arg(long)]
        ell: Option<u8>,
        /// Spine vertices v1,v2,v3 for c6preext.
        #[arg(long)]
        spine: Option<String>,
    },
    /// Run the registered paper facts and print one line per fact.
    VerifyPaper {
        /// Only run facts whose id contains this pattern.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Print the graph in DOT format.
    ExportDot { graph: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = ChooseOptions {
        symmetry: true,
        budget: cli.budget,
        jobs: cli.jobs.max(1),
    };
    match run(cli.command, opts) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_lists(path: &PathBuf) -> Result<ListAssignment, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_sizes(path: &PathBuf) -> Result<SizeFunction, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_pins(pins: &[String]) -> Result<Vec<(String, u8)>, String> {
    pins.iter()
        .map(|p| {
            let (v, c) = p
                .split_once('=')
                .ok_or_else(|| format!("bad pin {p:?}, expected v=c"))?;
            let color: u8 = c.parse().map_err(|_| format!("bad pin color in {p:?}"))?;
            Ok((v.to_string(), color))
        })
        .collect()
}

fn budget_exit(e: &ChooseError) -> Option<ExitCode> {
    match e {
        ChooseError::BudgetExceeded { examined } => {
            eprintln!("budget exceeded after {examined} assignments");
            Some(ExitCode::from(3))
        }
        _ => None,
    }
}

fn run(command: Command, opts: ChooseOptions) -> Result<ExitCode, String> {
    match command {
        Command::Color { graph, lists, pins } => {
            let g = load_graph(&graph)?;
            let l = read_lists(&lists)?;
            let pins = parse_pins(&pins)?;
            let pin_refs: Vec<(&str, u8)> = pins.iter().map(|(v, c)| (v.as_str(), *c)).collect();
            match solve(&g, &l, &pin_refs).map_err(|e| e.to_string())? {
                Some(coloring) => {
                    println!(
                        "{}",
                        serde_json::to_string(&coloring).expect("serializable")
                    );
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    eprintln!("infeasible");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Choosable {
            graph,
            uniform,
            sizes,
            palette,
            no_symmetry,
        } => {
            let g = load_graph(&graph)?;
            let f = match (uniform, sizes) {
                (Some(s), None) => SizeFunction::uniform(&g, s),
                (None, Some(path)) => read_sizes(&path)?,
                _ => return Err("exactly one of --uniform and --sizes is required".into()),
            };
            let opts = ChooseOptions {
                symmetry: !no_symmetry,
                ..opts
            };
            match is_fk_choosable(&g, &f, palette, &opts) {
                Ok(verdict) if verdict.choosable => {
                    println!("{}", serde_json::to_string(&verdict).expect("serializable"));
                    Ok(ExitCode::SUCCESS)
                }
                Ok(verdict) => {
                    println!(
                        "{}",
                        serde_json::to_string(verdict.witness.as_ref().expect("witness"))
                            .expect("serializable")
                    );
                    Ok(ExitCode::from(1))
                }
                Err(e) => budget_exit(&e)
                    .map(Ok)
                    .unwrap_or_else(|| Err(e.to_string())),
            }
        }
        Command::Critical {
            graph,
            sizes,
            palette,
            subset,
        } => {
            let g = load_graph(&graph)?;
            let f = read_sizes(&sizes)?;
            let vprime: Vec<String> = subset.split(',').map(|s| s.trim().to_string()).collect();
            match is_critical(&g, &f, palette, &vprime, &opts) {
                Ok(report) => {
                    let code = if report.is_critical { 0 } else { 1 };
                    println!("{}", serde_json::to_string(&report).expect("serializable"));
                    Ok(ExitCode::from(code))
                }
                Err(e) => budget_exit(&e)
                    .map(Ok)
                    .unwrap_or_else(|| Err(e.to_string())),
            }
        }
        Command::Recognize {
            graph,
            problem,
            two_lists,
        } => {
            let g = load_graph(&graph)?;
            let verdict = match (problem, two_lists) {
                (Problem::TwoCh, None) => recognize_2_choosable(&g),
                (Problem::TwoThreeCh, None) => recognize_23_choosable(&g),
                (Problem::TwoThreeCh, Some(spec)) => {
                    let set: Vec<String> = spec.split(',').map(|s| s.trim().to_string()).collect();
                    match decide_23_3_ch_bipartite(&g, &set, &opts) {
                        Ok(v) => {
                            let label = match v {
                                Verdict23::Choosable => "choosable",
                                Verdict23::NotChoosable => "notChoosable",
                                Verdict23::ResolvedByEnumeration(_) => "resolvedByEnumeration",
                            };
                            println!(
                                "{}",
                                serde_json::json!({"choosable": v.choosable(), "via": label})
                            );
                            return Ok(ExitCode::from(if v.choosable() { 0 } else { 1 }));
                        }
                        Err(e) => {
                            return budget_exit(&e)
                                .map(Ok)
                                .unwrap_or_else(|| Err(e.to_string()))
                        }
                    }
                }
                (Problem::TwoCh, Some(_)) => {
                    return Err("--two-lists applies to --problem 23ch only".into())
                }
            };
            println!("{}", serde_json::json!({ "choosable": verdict }));
            Ok(ExitCode::from(if verdict { 0 } else { 1 }))
        }
        Command::Core { graph } => {
            let g = load_graph(&graph)?;
            println!("{}", graph_to_json(&compute_core(&g).core));
            Ok(ExitCode::SUCCESS)
        }
        Command::Blocks { graph } => {
            let g = load_graph(&graph)?;
            let d = block_decomposition(&g, None);
            let doc = serde_json::json!({
                "blocks": d.blocks,
                "cutVertices": d.cut_vertices,
                "blockTree": d.block_tree,
                "bfsOrder": d.bfs_order,
                "attach": d.attach,
            });
            println!("{doc}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Gadget {
            name,
            out,
            lists,
            sizes_out,
            input,
            lists_in,
            sizes,
            length,
            target,
            ell,
            spine,
        } => {
            let built = build_gadget(&name, input, lists_in, sizes, length, target, ell, spine)?;
            std::fs::write(&out, graph_to_json(&built.graph) + "\n")
                .map_err(|e| format!("{}: {e}", out.display()))?;
            if let Some(path) = lists {
                match &built.canonical_assignment {
                    Some(assignment) => {
                        let text = serde_json::to_string(assignment).expect("serializable");
                        std::fs::write(&path, text + "\n")
                            .map_err(|e| format!("{}: {e}", path.display()))?;
                    }
                    None => return Err(format!("gadget {name} has no canonical assignment")),
                }
            }
            if let Some(path) = sizes_out {
                let text = serde_json::to_string(&built.sizes).expect("serializable");
                std::fs::write(&path, text + "\n")
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { filter } => {
            let ctx = FactContext { opts };
            let results = run_facts(filter.as_deref(), &ctx);
            if results.is_empty() {
                eprintln!("warning: no facts match the filter");
                return Ok(ExitCode::SUCCESS);
            }
            let mut any_fail = false;
            let mut any_budget = false;
            for (id, description, status) in &results {
                let label = match status {
                    FactStatus::Pass => "PASS",
                    FactStatus::Budget => {
                        any_budget = true;
                        "BUDGET"
                    }
                    FactStatus::Fail(_) => {
                        any_fail = true;
                        "FAIL"
                    }
                };
                println!("{id} {label} {description}");
                if let FactStatus::Fail(msg) = status {
                    eprintln!("{id}: {msg}");
                }
            }
            if any_fail {
                Ok(ExitCode::from(1))
            } else if any_budget {
                Ok(ExitCode::from(3))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::ExportDot { graph } => {
            let g = load_graph(&graph)?;
            print!("{}", graph_to_dot(&g));
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn build_gadget(
    name: &str,
    input: Option<String>,
    lists_in: Option<PathBuf>,
    sizes: Option<PathBuf>,
    length: Option<u32>,
    target: Option<u8>,
    ell: Option<u8>,
    spine: Option<String>,
) -> Result<GadgetWithRoles, String> {
    let need = |opt: Option<String>, what: &str| -> Result<String, String> {
        opt.ok_or_else(|| format!("{name} requires {what}"))
    };
    match name {
        "forall" => Ok(forall_variable_gadget()),
        "transmitter" => {
            let p = length.ok_or("transmitter requires --length")?;
            let i = target.ok_or("transmitter requires --target")?;
            path_transmitter(p, i).map_err(|e| e.to_string())
        }
        "H" => Ok(gadget_h()),
        "G3" => Ok(gadget_g3()),
        "G" => gadget_g(&GlueSpec::default()).map_err(|e| e.to_string()),
        "bipcrit" => {
            let l = ell.ok_or("bipcrit requires --ell")?;
            bipartite_critical_gadget(l).map_err(|e| e.to_string())
        }
        "hyperred" => {
            let path = need(input, "--input (hypergraph JSON)")?;
            let text = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
            let doc: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
            let x: Vec<String> =
                serde_json::from_value(doc.get("X").cloned().ok_or("hypergraph JSON needs \"X\"")?)
                    .map_err(|e| e.to_string())?;
            let f: Vec<Vec<String>> =
                serde_json::from_value(doc.get("F").cloned().ok_or("hypergraph JSON needs \"F\"")?)
                    .map_err(|e| e.to_string())?;
            hypergraph_reduction(&x, &f)
                .map(|r| r.gadget)
                .map_err(|e| e.to_string())
        }
        "c6preext" => {
            let g = load_graph(&need(input, "--input")?)?;
            let spec = spine.ok_or("c6preext requires --spine v1,v2,v3")?;
            let verts: Vec<&str> = spec.split(',').map(|s| s.trim()).collect();
            if verts.len() != 3 {
                return Err("c6preext needs exactly three spine vertices".into());
            }
            c6_preext_reduction(&g, verts[0], verts[1], verts[2]).map_err(|e| e.to_string())
        }
        "padgrid" => {
            let g = load_graph(&need(input, "--input")?)?;
            let f = read_sizes(&sizes.ok_or("padgrid requires --sizes")?)?;
            let padded = pad_subgrid_to_grid(&g, &f).map_err(|e| e.to_string())?;
            let mut gadget = GadgetWithRoles {
                graph: padded.grid.graph().clone(),
                roles: BTreeMap::new(),
                sizes: padded.sizes,
                canonical_assignment: None,
                palette: 5,
            };
            let embedded: Vec<String> = padded.vertex_map.values().cloned().collect();
            gadget.roles.insert("embedded".to_string(), embedded);
            Ok(gadget)
        }
        "listcol34" => {
            let g = load_graph(&need(input, "--input")?)?;
            let l = read_lists(&lists_in.ok_or("listcol34 requires --lists-in")?)?;
            let red = listcol_reduction_34(&g, &l).map_err(|e| e.to_string())?;
            let mut sizes = SizeFunction::new();
            for v in red.graph.vertices() {
                sizes.set(v, red.lists.get(v).map_or(3, |list| list.len() as u8));
            }
            Ok(GadgetWithRoles {
                graph: red.graph,
                roles: BTreeMap::new(),
                sizes,
                canonical_assignment: Some(red.lists),
                palette: 4,
            })
        }
        other => Err(format!("unknown gadget {other:?}")),
    }
}
