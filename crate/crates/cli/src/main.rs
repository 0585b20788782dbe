//! `mvgraph`: finite MV-algebras and their zero-divisor graphs from the command line.
//!
//! Exit status: 0 on success, 1 when `verify` finds a failure or an
//! isomorphism search is inconclusive, 2 on bad input.

mod spec;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mvgraph_core::json::{algebra_to_json, ideals_to_json, parse_index_list, quotient_to_json};
use mvgraph_core::{
    algebra_isomorphic, all_ideals, enumerate_algebras, graph_isomorphic, ideal_based_graph,
    metrics, quotient, run_all, zero_divisor_graph, Error, Ideal, MvAlgebra, SimpleGraph,
};

#[derive(Parser)]
#[command(
    name = "mvgraph",
    version,
    about = "Finite MV-algebras, ideals and zero-divisor graphs"
)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra and print it as JSON.
    Algebra { spec: String },
    /// List every ideal as a sorted index array.
    Ideals { spec: String },
    /// Print the quotient by an ideal, with its classes.
    Quotient {
        spec: String,
        #[arg(long, value_name = "CSV")]
        ideal: String,
    },
    /// Print Γ(A), or Γ_I(A) when an ideal is given.
    Graph {
        spec: String,
        #[arg(long, value_name = "CSV")]
        ideal: Option<String>,
        #[command(flatten)]
        format: Format,
    },
    /// Diameter and girth of Γ(A) or Γ_I(A).
    Metrics {
        spec: String,
        #[arg(long, value_name = "CSV")]
        ideal: Option<String>,
    },
    /// Decide isomorphism of two algebras, or of their graphs.
    Iso {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Kind::Algebra)]
        kind: Kind,
        /// Ideal of the first algebra (graph kind only).
        #[arg(long, value_name = "CSV")]
        ideal_a: Option<String>,
        /// Ideal of the second algebra (graph kind only).
        #[arg(long, value_name = "CSV")]
        ideal_b: Option<String>,
    },
    /// Check every theorem on all algebras up to the given order.
    Verify(OrderArg),
    /// List one algebra per isomorphism class up to the given order.
    Enumerate(OrderArg),
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    /// Graphviz output.
    #[arg(long)]
    dot: bool,
    /// JSON output (the default).
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OrderArg {
    #[arg(value_name = "MAX_ORDER", conflicts_with = "max_order")]
    order: Option<usize>,
    #[arg(long, value_name = "N")]
    max_order: Option<usize>,
}

impl OrderArg {
    fn get(&self) -> usize {
        self.order.or(self.max_order).unwrap_or(7)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Algebra,
    Graph,
}

/// Why a command stopped early.
enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Check(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command);
    let (text, ok) = match result {
        Ok(v) => v,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Check(msg)) => {
            eprintln!("inconclusive: {msg}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &text).map_err(|e| format!("cannot write {path}: {e}")),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn load(spec: &str) -> Result<MvAlgebra, Failure> {
    spec::load(spec).map_err(Failure::Input)
}

fn load_ideal(a: &MvAlgebra, csv: &str) -> Result<Ideal, Failure> {
    Ok(Ideal::from_indices(a, &parse_index_list(csv)?)?)
}

fn graph_of(a: &MvAlgebra, ideal: Option<&str>) -> Result<SimpleGraph, Failure> {
    Ok(match ideal {
        Some(csv) => ideal_based_graph(a, &load_ideal(a, csv)?)?,
        None => zero_divisor_graph(a)?,
    })
}

fn line(s: String) -> String {
    s + "\n"
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Algebra { spec } => Ok((line(algebra_to_json(&load(&spec)?)), true)),
        Command::Ideals { spec } => Ok((line(ideals_to_json(&all_ideals(&load(&spec)?)?)), true)),
        Command::Quotient { spec, ideal } => {
            let a = load(&spec)?;
            let q = quotient(&a, &load_ideal(&a, &ideal)?)?;
            Ok((line(quotient_to_json(&q)), true))
        }
        Command::Graph {
            spec,
            ideal,
            format,
        } => {
            let g = graph_of(&load(&spec)?, ideal.as_deref())?;
            let text = if format.dot {
                g.to_dot()
            } else {
                line(serde_json::to_string(&g.to_export()).expect("graph export serializes"))
            };
            Ok((text, true))
        }
        Command::Metrics { spec, ideal } => {
            let m = metrics(&graph_of(&load(&spec)?, ideal.as_deref())?);
            Ok((
                line(json!({ "diameter": m.diameter, "girth": m.girth }).to_string()),
                true,
            ))
        }
        Command::Iso {
            a,
            b,
            kind,
            ideal_a,
            ideal_b,
        } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let witness = match kind {
                Kind::Algebra => {
                    if ideal_a.is_some() || ideal_b.is_some() {
                        return Err(Failure::Input(
                            "--ideal-a/--ideal-b need --kind graph".into(),
                        ));
                    }
                    algebra_isomorphic(&a, &b)?
                }
                Kind::Graph => graph_isomorphic(
                    &graph_of(&a, ideal_a.as_deref())?,
                    &graph_of(&b, ideal_b.as_deref())?,
                )?,
            };
            let value = match witness {
                Some(w) => json!({ "isomorphic": true, "mapping": w.mapping }),
                None => json!({ "isomorphic": false }),
            };
            Ok((line(value.to_string()), true))
        }
        Command::Verify(order) => {
            let started = Instant::now();
            let report = run_all(order.get())?;
            eprintln!(
                "checked {} algebras and {} instances in {:.2?}",
                report.algebras,
                report.instances,
                started.elapsed()
            );
            Ok((report.to_json_lines(), report.is_success()))
        }
        Command::Enumerate(order) => {
            let mut out = String::new();
            for e in enumerate_algebras(order.get())? {
                out.push_str(&line(
                    json!({ "order": e.order(), "chains": e.orders, "descriptor": e.descriptor })
                        .to_string(),
                ));
            }
            Ok((out, true))
        }
    }
}
