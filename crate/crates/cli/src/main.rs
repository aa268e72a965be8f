use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rc2::generators::parse_params;
use rc2::{
    brute_force_rc2, build_ear_decomposition, census_small_graphs, color_rc2, generate_family,
    is_rainbow_two_connected_with, parse_edge_list, spanning_minimally_two_connected, to_dot,
    ColoringJson, Error, Family, Graph, Rc2Bound, VerifyLimits, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "rc2",
    version,
    about = "Rainbow 2-connected edge colorings of 2-connected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a 2-connected graph and print the color count and strategy.
    Color {
        /// Edge-list file; stdin when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Write the coloring as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a Graphviz rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Include the decomposition and per-step trace in the JSON.
        #[arg(long)]
        trace: bool,
    },
    /// Check that a coloring JSON makes the graph rainbow 2-connected.
    Verify {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, default_value_t = VerifyLimits::default().max_vertices)]
        max_vertices: usize,
        #[arg(long, default_value_t = VerifyLimits::default().max_edges)]
        max_edges: usize,
    },
    /// Print a spanning minimally 2-connected subgraph as an edge list.
    Minimalize {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print the ear decomposition of a minimally 2-connected graph as JSON.
    Decompose {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Exact rc2 by exhaustive search.
    Oracle {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        max_colors: Option<usize>,
        /// Maximum number of colorings to check.
        #[arg(long, env = "RC2_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exact and constructive rc2 for every 2-connected graph on n vertices, as CSV.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "RC2_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Generate a graph family member as an edge list.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    /// Exit 1.
    Rejected(String),
    /// Exit 2.
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Rejected(format!("{}: {e}", e.kind())),
            _ => Failure::Invalid(format!("{}: {e}", e.kind())),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Invalid(format!("{}: {e}", path.display()))
}

fn read_text(input: Option<&Path>) -> Result<String, Failure> {
    match input {
        Some(path) => fs::read_to_string(path).map_err(|e| io_failure(path, e)),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Invalid(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn read_graph(input: Option<&Path>) -> Result<Graph, Failure> {
    Ok(parse_edge_list(&read_text(input)?)?)
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// Writes to stdout; a closed pipe (as with `| head`) is not an error.
fn emit(text: &str) -> Result<(), Failure> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            Err(Failure::Invalid(format!("stdout: {e}")))
        }
        _ => Ok(()),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Color {
            input,
            out,
            dot,
            trace,
        } => {
            let g = read_graph(input.as_deref())?;
            let result = color_rc2(&g)?;
            if let Some(path) = out {
                let json = serde_json::to_string_pretty(&result.to_json(trace))
                    .expect("plain data serializes");
                write(&path, &(json + "\n"))?;
            }
            if let Some(path) = dot {
                write(&path, &to_dot(&g, &result.coloring))?;
            }
            emit(&format!(
                "colors={} strategy={}\n",
                result.color_count(),
                result.strategy
            ))?;
        }
        Command::Verify {
            input,
            coloring,
            max_vertices,
            max_edges,
        } => {
            let g = read_graph(input.as_deref())?;
            let text = fs::read_to_string(&coloring).map_err(|e| io_failure(&coloring, e))?;
            let json: ColoringJson = serde_json::from_str(&text)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", coloring.display())))?;
            let limits = VerifyLimits {
                max_vertices,
                max_edges,
            };
            let report = is_rainbow_two_connected_with(&g, &json.edge_coloring(), &limits);
            emit(&(to_json(&report) + "\n"))?;
            if !report.passed {
                let why = if report.skipped {
                    "verification skipped"
                } else {
                    "verification failed"
                };
                return Err(Failure::Rejected(why.into()));
            }
        }
        Command::Minimalize { input } => {
            let g = read_graph(input.as_deref())?;
            emit(&spanning_minimally_two_connected(&g)?.to_edge_list())?;
        }
        Command::Decompose { input } => {
            let g = read_graph(input.as_deref())?;
            emit(&(to_json(&build_ear_decomposition(&g)?) + "\n"))?;
        }
        Command::Oracle {
            input,
            max_colors,
            budget,
        } => {
            let g = read_graph(input.as_deref())?;
            let k_max = max_colors.unwrap_or(g.edge_count());
            match brute_force_rc2(&g, k_max, budget)? {
                Rc2Bound::Exact { k, calls, .. } => emit(&format!("rc2={k} calls={calls}\n"))?,
                Rc2Bound::Unbounded { k_max, calls } => {
                    emit(&format!("rc2>{k_max} calls={calls}\n"))?
                }
            }
        }
        Command::Census { n, budget } => {
            let census = census_small_graphs(n, budget)?;
            emit(&census.to_csv())?;
            let violations = census.violations();
            if !violations.is_empty() {
                return Err(Failure::Rejected(violations.join("\n")));
            }
        }
        Command::Gen {
            family,
            params,
            seed,
        } => {
            let fam = Family::from_name(&family, &parse_params(&params)?)?;
            emit(&generate_family(&fam, seed)?.to_edge_list())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
