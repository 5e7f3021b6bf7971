//! `semireg`: find, check and explore semiregular automorphisms from the
//! command line.
//!
//! Exit codes: 0 success, 1 parse or I/O error, 2 precondition failure,
//! 3 invariant violation, 4 certificate rejected.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use semireg::actions::{local_action, quotient_graph};
use semireg::alternets::{alternet_digraph, alternet_partition};
use semireg::finder::{
    find_semiregular_8valent, find_semiregular_digraph4, Certificate, FinderConfig,
};
use semireg::graphs::{is_arc_transitive, standard_group, Family};
use semireg::io;
use semireg::oracle::{brute_force_semiregular, verify_certificate, Structure};
use semireg::permcore::{PermGroup, DEFAULT_BUDGET};
use semireg::Error;

#[derive(Parser)]
#[command(
    name = "semireg",
    version,
    about = "Certified semiregular automorphisms of arc-transitive graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the main result to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Upper bound on group elements enumerated by any single step.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Find a certified semiregular automorphism of an 8-valent graph, or of
    /// an out-valence-4 digraph with --digraph.
    Find {
        #[arg(long, conflicts_with = "digraph", required_unless_present = "digraph")]
        graph: Option<PathBuf>,
        #[arg(long)]
        digraph: Option<PathBuf>,
        #[arg(long)]
        group: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Write a corpus graph and its group: FAMILY is paley:q, complete:n,
    /// blowup:ck,m or circulant:n,offsets.
    Gen {
        family: String,
        /// Output prefix; writes PREFIX.g and PREFIX.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search for a semiregular element.
    Oracle {
        #[arg(long)]
        group: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Re-check a certificate against a group and optionally a graph.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        group: PathBuf,
        #[arg(long, conflicts_with = "digraph")]
        graph: Option<PathBuf>,
        #[arg(long)]
        digraph: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Alternet classes of a digraph and their digraph.
    Alternets {
        #[arg(long)]
        digraph: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Quotient of a graph by the orbits of a normal subgroup.
    Quotient {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        group: PathBuf,
        /// Group file of the normal subgroup.
        #[arg(long)]
        normal: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// The action of a vertex stabiliser on the neighbourhood.
    LocalAction {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Error(Error),
    Rejected,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(Error::Io(e))
    }
}

type Outcome = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvariantViolation(_) => 3,
        Error::Parse(_)
        | Error::Io(_)
        | Error::Json(_)
        | Error::InvalidPermutation(_)
        | Error::InvalidGraph(_)
        | Error::UnknownFamily(_)
        | Error::InvalidParams(_)
        | Error::InvalidOffsets(_)
        | Error::BadModulus(_) => 1,
        _ => 2,
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_group(path: &Path) -> Result<PermGroup, Error> {
    io::group_from_json(&read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        Error::Json(j) => Error::Parse(format!("{}: {j}", path.display())),
        other => other,
    }
}

/// Prints `text` and writes `file_text` to `out` when given.
fn emit(text: &str, out: Option<&Path>, file_text: &str) -> Outcome {
    println!("{}", text.trim_end());
    if let Some(path) = out {
        fs::write(path, file_text)?;
    }
    Ok(())
}

fn certificate_text(c: &Certificate) -> String {
    let trace: Vec<String> = c.branch_trace.iter().map(ToString::to_string).collect();
    format!(
        "element: {}\norder: {}\ncycle_length: {}\nbranch_trace: {}\nverified: {}",
        c.element,
        c.order,
        c.cycle_length,
        trace.join(" > "),
        c.verified
    )
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Find {
            graph,
            digraph,
            group,
            common,
        } => {
            let group = read_group(&group)?;
            let config = FinderConfig {
                budget: common.budget,
            };
            let cert = match (graph, digraph) {
                (Some(path), _) => {
                    let graph = io::parse_graph(&read(&path)?).map_err(|e| in_file(&path, e))?;
                    find_semiregular_8valent(&graph, &group, &config)?
                }
                (None, Some(path)) => {
                    let digraph =
                        io::parse_digraph(&read(&path)?).map_err(|e| in_file(&path, e))?;
                    find_semiregular_digraph4(&digraph, &group, config.budget)?
                }
                (None, None) => unreachable!("clap requires one of --graph, --digraph"),
            };
            let json = io::certificate_to_json(&cert);
            let text = if common.json {
                json.clone()
            } else {
                certificate_text(&cert)
            };
            emit(&text, common.out.as_deref(), &json)
        }
        Command::Gen { family, out } => {
            let family: Family = family.parse()?;
            let graph = family.graph()?;
            let group = standard_group(&family)?;
            if !is_arc_transitive(&graph, &group)? {
                return Err(Error::InvariantViolation(format!(
                    "{family} group is not arc-transitive"
                ))
                .into());
            }
            let prefix =
                out.unwrap_or_else(|| PathBuf::from(family.to_string().replace([':', ','], "_")));
            let graph_path = prefix.with_extension("g");
            let group_path = prefix.with_extension("json");
            fs::write(&graph_path, io::graph_to_string(&graph))?;
            fs::write(&group_path, io::group_to_json(&group))?;
            println!(
                "{family}: {} vertices, valency {}, group order {}",
                graph.n(),
                graph.valency().unwrap_or(0),
                group.order()
            );
            println!(
                "wrote {} and {}",
                graph_path.display(),
                group_path.display()
            );
            Ok(())
        }
        Command::Oracle { group, common } => {
            let group = read_group(&group)?;
            let report = brute_force_semiregular(&group, common.budget);
            let json = io::report_to_json(&report);
            let text = if common.json {
                json.clone()
            } else {
                let found = report
                    .found
                    .as_ref()
                    .map_or("none".to_string(), ToString::to_string);
                format!(
                    "found: {found}\nelements_scanned: {}\nexhausted: {}\nbudget_exceeded: {}",
                    report.elements_scanned,
                    report.exhausted,
                    report.budget_exceeded()
                )
            };
            emit(&text, common.out.as_deref(), &json)
        }
        Command::Verify {
            cert,
            group,
            graph,
            digraph,
            json,
        } => {
            let group = read_group(&group)?;
            let cert = io::certificate_from_json(&read(&cert)?, Some(group.degree()))
                .map_err(|e| in_file(&cert, e))?;
            let graph = graph
                .map(|p| io::parse_graph(&read(&p)?).map_err(|e| in_file(&p, e)))
                .transpose()?;
            let digraph = digraph
                .map(|p| io::parse_digraph(&read(&p)?).map_err(|e| in_file(&p, e)))
                .transpose()?;
            let structure = match (&graph, &digraph) {
                (Some(g), _) => Structure::Graph(g),
                (None, Some(d)) => Structure::Digraph(d),
                (None, None) => Structure::None,
            };
            let verdict = verify_certificate(&cert, structure, &group);
            if json {
                let doc = match verdict {
                    Ok(()) => serde_json::json!({"format": io::FORMAT_VERSION, "verified": true}),
                    Err(r) => {
                        serde_json::json!({"format": io::FORMAT_VERSION, "verified": false, "reason": r})
                    }
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serialisable")
                );
            }
            match verdict {
                Ok(()) => {
                    if !json {
                        println!("verified: true");
                    }
                    Ok(())
                }
                Err(r) => {
                    if !json {
                        println!("verified: false ({r})");
                    }
                    Err(Failure::Rejected)
                }
            }
        }
        Command::Alternets { digraph, common } => {
            let d = io::parse_digraph(&read(&digraph)?).map_err(|e| in_file(&digraph, e))?;
            let partition = alternet_partition(&d)?;
            let degenerate = partition.has_degenerate_class();
            let loose = if degenerate {
                None
            } else {
                Some(partition.is_loosely_attached()?)
            };
            let alg = if degenerate {
                None
            } else {
                Some(alternet_digraph(&d, &partition)?)
            };
            let alg_text = alg.as_ref().map(|a| io::digraph_to_string(&a.digraph));
            let text = if common.json {
                let classes: Vec<_> = partition
                    .classes()
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "index": c.index,
                            "sources": c.sources,
                            "sinks": c.sinks,
                            "arcs": c.arcs.len(),
                            "degenerate": c.is_degenerate(),
                        })
                    })
                    .collect();
                let doc = serde_json::json!({
                    "format": io::FORMAT_VERSION,
                    "classes": classes,
                    "loosely_attached": loose,
                    "alternet_digraph": alg_text,
                });
                serde_json::to_string_pretty(&doc).expect("serialisable")
            } else {
                let mut text = format!("{} alternet classes\n", partition.num_classes());
                for c in partition.classes() {
                    text.push_str(&format!(
                        "class {}: sources {:?} sinks {:?} arcs {}{}\n",
                        c.index,
                        c.sources,
                        c.sinks,
                        c.arcs.len(),
                        if c.is_degenerate() { " degenerate" } else { "" }
                    ));
                }
                match loose {
                    Some(l) => text.push_str(&format!("loosely attached: {l}\n")),
                    None => text.push_str("loosely attached: undefined (degenerate class)\n"),
                }
                if let Some(a) = &alg_text {
                    text.push_str("alternet digraph:\n");
                    text.push_str(a);
                }
                text
            };
            emit(
                &text,
                common.out.as_deref(),
                alg_text.as_deref().unwrap_or(""),
            )
        }
        Command::Quotient {
            graph,
            group,
            normal,
            common,
        } => {
            let g = io::parse_graph(&read(&graph)?).map_err(|e| in_file(&graph, e))?;
            let group = read_group(&group)?;
            let normal = read_group(&normal)?;
            if !normal.is_subgroup_of(&group) || !group.is_normal_subgroup(&normal) {
                return Err(Error::NotNormal.into());
            }
            let data = quotient_graph(&g, &group, &normal)?;
            let file = io::graph_to_string(data.quotient());
            let orbits = data.orbit_partition().blocks();
            let text = if common.json {
                let doc = serde_json::json!({
                    "format": io::FORMAT_VERSION,
                    "orbits": orbits,
                    "quotient": file,
                    "valency": data.quotient().valency(),
                    "induced_group": serde_json::from_str::<serde_json::Value>(&io::group_to_json(data.induced_group())).expect("valid json"),
                    "kernel_order": data.kernel().order().to_string(),
                });
                serde_json::to_string_pretty(&doc).expect("serialisable")
            } else {
                let mut text = format!(
                    "{} orbits, quotient valency {:?}, induced group order {}, kernel order {}\n",
                    orbits.len(),
                    data.quotient().valency(),
                    data.induced_group().order(),
                    data.kernel().order()
                );
                for (i, o) in orbits.iter().enumerate() {
                    text.push_str(&format!("orbit {i}: {o:?}\n"));
                }
                text.push_str(&file);
                text
            };
            emit(&text, common.out.as_deref(), &file)
        }
        Command::LocalAction {
            graph,
            group,
            vertex,
            common,
        } => {
            let g = io::parse_graph(&read(&graph)?).map_err(|e| in_file(&graph, e))?;
            let group = read_group(&group)?;
            if vertex >= g.n() {
                return Err(Error::Precondition(format!("vertex {vertex} out of range")).into());
            }
            let local = local_action(&g, &group, vertex)?;
            let json = io::group_to_json(&local);
            let text = if common.json {
                json.clone()
            } else {
                format!(
                    "neighbours of {vertex}: {:?}\nlocal action of degree {} and order {}, transitive: {}",
                    g.neighbors(vertex),
                    local.degree(),
                    local.order(),
                    local.is_transitive()
                )
            };
            emit(&text, common.out.as_deref(), &json)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected) => ExitCode::from(4),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
