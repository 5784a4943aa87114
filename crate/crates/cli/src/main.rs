use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use eihyper::format::{parse_digraph, parse_hypergraph, render_hypergraph};
use eihyper::generators::{catalog_realization, catalog_tree, CatalogKey};
use eihyper::laws::{sweep, LawId};
use eihyper::suite::run_suite;
use eihyper::{
    check_neighborhood_identity, decide_3uniform_with, decide_exhaustive, ei_iterate, ei_number,
    generate, is_helly, is_helly_bruteforce, neighborhood_hypergraph, realize_tree, DeciderConfig,
    Error, Execution, Family, FamilySpec, Graph, Hypergraph, NeighborhoodKind, Verdict,
};

#[derive(Parser)]
#[command(
    name = "eihyper",
    version,
    about = "Edge intersection hypergraph toolkit"
)]
struct Cli {
    /// Run every data-parallel step on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the EI hypergraph (or its k-th iterate) of a hypergraph file.
    Ei {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the EI number of a hypergraph file.
    EiNumber { input: PathBuf },
    /// Write a family member or a catalog tree.
    Generate {
        #[arg(long, conflicts_with = "catalog", required_unless_present = "catalog")]
        family: Option<Family>,
        #[arg(long, requires = "family")]
        n: Option<usize>,
        #[arg(long, requires = "family")]
        d: Option<usize>,
        /// Atlas id of a tree on at most eight vertices.
        #[arg(long)]
        catalog: Option<u32>,
        /// With --catalog, write the 3-uniform realization instead of the tree.
        #[arg(long, requires = "catalog")]
        realization: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Sweep closed-form laws over their parameter ranges.
    Laws {
        /// Restrict to one law; all of them by default.
        #[arg(long)]
        law: Option<LawId>,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        max_d: usize,
    },
    /// Neighborhood hypergraphs of a digraph file.
    Digraph {
        input: PathBuf,
        #[arg(long, required_unless_present = "check_identity")]
        kind: Option<NeighborhoodKind>,
        /// Compare both sides of the neighborhood identity instead.
        #[arg(long, conflicts_with = "kind")]
        check_identity: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Test the Helly property; exit status 1 when it fails.
    Helly {
        input: PathBuf,
        /// Use subfamily enumeration (at most 20 edges).
        #[arg(long)]
        bruteforce: bool,
    },
    /// Build a 3-uniform hypergraph whose EI hypergraph is the given tree.
    RealizeTree {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a graph is the EI hypergraph of a 3-uniform hypergraph.
    Decide {
        input: PathBuf,
        /// Try every family of triples instead of searching (at most 6 vertices).
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, env = "EIHYPER_NODE_BUDGET")]
        node_budget: Option<u64>,
        /// Where to write the witness, if one is found.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check every shipped fixture and law; one line per item.
    #[command(name = "verify-paper")]
    VerifyFixtures,
}

enum Status {
    Positive,
    Negative,
}

fn read_input(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, String> {
    parse_hypergraph(&read_input(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    Graph::try_from(read_hypergraph(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_output(output: Option<&Path>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("stdout: {e}")),
    }
}

fn lib(e: Error) -> String {
    e.to_string()
}

fn run(cli: Cli) -> Result<Status, String> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match cli.command {
        Command::Ei {
            input,
            iterate,
            output,
        } => {
            let h = read_hypergraph(&input)?;
            write_output(
                output.as_deref(),
                &render_hypergraph(&ei_iterate(&h, iterate)),
            )?;
        }
        Command::EiNumber { input } => {
            println!("{}", ei_number(&read_hypergraph(&input)?));
        }
        Command::Generate {
            family,
            n,
            d,
            catalog,
            realization,
            output,
        } => {
            let h = match (family, catalog) {
                (Some(family), _) => {
                    let n = n.ok_or("--family needs --n")?;
                    let d = match family {
                        Family::Hypercycle | Family::Hyperpath | Family::CompleteUniform => {
                            d.ok_or_else(|| format!("--family {family} needs --d"))?
                        }
                        _ => 2,
                    };
                    generate(FamilySpec { family, n, d }).map_err(lib)?
                }
                (None, Some(id)) if realization => {
                    catalog_realization(CatalogKey::Atlas(id)).map_err(lib)?
                }
                (None, Some(id)) => catalog_tree(id).map_err(lib)?.into_hypergraph(),
                (None, None) => return Err("give --family or --catalog".into()),
            };
            write_output(output.as_deref(), &render_hypergraph(&h))?;
        }
        Command::Laws { law, max_n, max_d } => {
            let laws = match law {
                Some(l) => vec![l],
                None => LawId::SWEEPABLE.to_vec(),
            };
            let mut all_agree = true;
            for law in laws {
                for report in sweep(law, max_n, max_d, exec).map_err(lib)? {
                    all_agree &= report.agrees;
                    println!("{report}");
                }
            }
            if !all_agree {
                return Ok(Status::Negative);
            }
        }
        Command::Digraph {
            input,
            kind,
            check_identity,
            output,
        } => {
            let d = parse_digraph(&read_input(&input)?)
                .map_err(|e| format!("{}: {e}", input.display()))?;
            if check_identity {
                let report = check_neighborhood_identity(&d);
                println!("{report}");
                if !report.agrees {
                    return Ok(Status::Negative);
                }
            } else {
                let kind = kind.ok_or("give --kind or --check-identity")?;
                let h = neighborhood_hypergraph(&d, kind);
                write_output(output.as_deref(), &render_hypergraph(&h))?;
            }
        }
        Command::Helly { input, bruteforce } => {
            let h = read_hypergraph(&input)?;
            let helly = if bruteforce {
                is_helly_bruteforce(&h).map_err(lib)?
            } else {
                is_helly(&h)
            };
            println!("{}", if helly { "helly" } else { "not-helly" });
            if !helly {
                return Ok(Status::Negative);
            }
        }
        Command::RealizeTree { input, output } => {
            let t = read_graph(&input)?;
            match realize_tree(&t) {
                Ok(cert) => {
                    eprintln!(
                        "verified: {} triples, {} inductive steps, {} backtracks",
                        cert.witness.edge_count(),
                        cert.stats.inductive_steps,
                        cert.stats.backtracks
                    );
                    write_output(output.as_deref(), &render_hypergraph(&cert.witness))?;
                }
                Err(Error::KnownUnrealizable { catalog_id, name }) => {
                    println!("unrealizable: {name} (atlas T{catalog_id})");
                    return Ok(Status::Negative);
                }
                Err(e) => return Err(lib(e)),
            }
        }
        Command::Decide {
            input,
            exhaustive,
            node_budget,
            output,
        } => {
            let g = read_graph(&input)?;
            let outcome = if exhaustive {
                decide_exhaustive(&g)
            } else {
                let config = DeciderConfig {
                    node_budget,
                    execution: exec,
                    ..DeciderConfig::default()
                };
                decide_3uniform_with(&g, &config)
            }
            .map_err(lib)?;
            let witness_path = match (&outcome.witness, &output) {
                (Some(w), Some(path)) => {
                    write_output(Some(path), &render_hypergraph(w))?;
                    path.display().to_string()
                }
                _ => "-".to_string(),
            };
            println!(
                "verdict={} nodes={} useful={} witness={}",
                outcome.verdict, outcome.explored, outcome.useful_count, witness_path
            );
            if outcome.verdict == Verdict::Unrealizable {
                return Ok(Status::Negative);
            }
        }
        Command::VerifyFixtures => {
            let items = run_suite(exec);
            let failed = items.iter().filter(|i| !i.passed).count();
            for item in &items {
                println!("{item}");
            }
            println!("{} of {} items passed", items.len() - failed, items.len());
            if failed > 0 {
                return Ok(Status::Negative);
            }
        }
    }
    Ok(Status::Positive)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Status::Positive) => ExitCode::SUCCESS,
        Ok(Status::Negative) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
