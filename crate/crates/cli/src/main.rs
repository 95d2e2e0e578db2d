use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dihedral_core::algebra::{
    automorphism_group, distance_regularity_check, distinct_eigenvalue_count_vs_diameter,
    integer_spectrum,
};
use dihedral_core::claims::{run_example, verify_claims, ClaimReport, DEFAULT_EXHAUSTIVE_CAP};
use dihedral_core::metric::{
    metric_dimension, min_doubly_resolving, strong_metric_dimension, DimensionResult,
    ResolutionKind,
};
use dihedral_core::{
    circulant, cocktail_circulant_set, cocktail_party, dihedral_cayley, dihedral_toeplitz_window,
    profile, toeplitz, Graph,
};

const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "dihedral", version, about = "Exact invariants of dihedral Cayley / Toeplitz graphs")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Cay(D_2n, Ψ) on 2n vertices.
    Dihedral,
    /// T_N<W>; defaults to the odd offsets plus N/2.
    Toeplitz,
    /// Cay(Z_n, S); defaults to S = {1, n-1, ..., n/2-1, n/2+1}.
    Circulant,
    /// CP(m) on 2m vertices.
    Cocktail,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Dot,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Beta,
    Psi,
    Sdim,
    Spectrum,
    Aut,
    Drg,
    Profile,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a graph and print it.
    Build {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        window: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "json")]
        out: OutFormat,
    },
    /// Compute one invariant of a constructed graph.
    Invariants {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        window: Option<Vec<usize>>,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Run every claim about Cay(D_2n, Ψ) with certificates.
    VerifyPaper {
        #[arg(long)]
        n: usize,
        /// Largest candidate-set count an exhaustive search may enumerate.
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        cap: u64,
        /// Also write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Include per-claim wall-clock times (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Reproduce a worked example on Cay(D_12, Ψ).
    Examples {
        #[arg(long, value_parser = ["3.4", "3.5"])]
        id: String,
    },
}

fn build_graph(family: Family, n: usize, window: Option<Vec<usize>>) -> dihedral_core::Result<Graph> {
    match family {
        Family::Dihedral => dihedral_cayley(n),
        Family::Toeplitz => {
            let w = window.unwrap_or_else(|| dihedral_toeplitz_window(n / 2));
            toeplitz(n, &w)
        }
        Family::Circulant => {
            let s = window.unwrap_or_else(|| cocktail_circulant_set(n));
            circulant(n, &s)
        }
        Family::Cocktail => cocktail_party(n),
    }
}

fn dimension_json(g: &Graph, kind: ResolutionKind, r: &DimensionResult) -> Value {
    let mut v = json!(r.to_report_json(kind));
    let labels: Vec<&str> = r.optimal_set.members().iter().map(|&u| g.label(u)).collect();
    v["set_labels"] = json!(labels);
    v
}

fn invariant(g: &Graph, which: Which) -> dihedral_core::Result<Value> {
    Ok(match which {
        Which::Beta => dimension_json(g, ResolutionKind::Resolving, &metric_dimension(g)?),
        Which::Psi => dimension_json(g, ResolutionKind::Doubly, &min_doubly_resolving(g)?),
        Which::Sdim => dimension_json(g, ResolutionKind::Strong, &strong_metric_dimension(g)?),
        Which::Spectrum => json!(integer_spectrum(g)),
        Which::Aut => json!(automorphism_group(g)),
        Which::Drg => {
            let mut v = json!(distance_regularity_check(g)?);
            v["eigenvalues_vs_diameter"] = json!(distinct_eigenvalue_count_vs_diameter(g)?);
            v
        }
        Which::Profile => json!(profile(g)),
    })
}

fn pretty_value(v: &Value) -> String {
    match v.as_object() {
        Some(map) => map
            .iter()
            .map(|(k, x)| format!("{k:<24} {x}"))
            .collect::<Vec<_>>()
            .join("\n"),
        None => v.to_string(),
    }
}

fn pretty_claims(r: &ClaimReport) -> String {
    let mut out = format!("n = {}, exhaustive cap = {}\n", r.n, r.exhaustive_cap);
    for c in &r.claims {
        let verdict = serde_json::to_value(c.verdict).unwrap();
        out.push_str(&format!(
            "{:<20} {:<8} {:>7} ms  {}\n",
            c.claim_id,
            verdict.as_str().unwrap_or("?"),
            c.elapsed_ms,
            c.statement
        ));
    }
    out
}

fn run(cli: Cli) -> Result<u8, String> {
    let err = |e: dihedral_core::Error| e.to_string();
    match cli.command {
        Command::Build { family, n, window, out } => {
            let g = build_graph(family, n, window).map_err(err)?;
            match out {
                OutFormat::Json => println!("{}", g.to_json()),
                OutFormat::Dot => print!("{}", g.to_dot()),
                OutFormat::Edges => print!("{}", g.to_edge_list()),
            }
            Ok(0)
        }
        Command::Invariants { family, n, window, which } => {
            let g = build_graph(family, n, window).map_err(err)?;
            let v = invariant(&g, which).map_err(err)?;
            if cli.pretty {
                println!("{}", pretty_value(&v));
            } else {
                println!("{v}");
            }
            Ok(0)
        }
        Command::VerifyPaper { n, cap, json, timings } => {
            let report = verify_claims(n, cap).map_err(err)?;
            let doc = serde_json::to_string_pretty(&report.to_json(timings)).unwrap();
            if let Some(path) = json {
                fs::write(&path, format!("{doc}\n"))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            if cli.pretty {
                print!("{}", pretty_claims(&report));
            } else {
                println!("{doc}");
            }
            Ok(report.exit_code() as u8)
        }
        Command::Examples { id } => {
            let rep = run_example(&id).map_err(err)?;
            if cli.pretty {
                println!("example {}: R = {{{}}}", rep.id, rep.set_labels.join(", "));
                println!("resolving: {}", rep.report.verdict);
                if let Some([u, v]) = &rep.witness_labels {
                    println!("collision: {u} and {v}");
                }
                for lv in &rep.vectors {
                    let coords: Vec<String> = lv.vector.0.iter().map(u32::to_string).collect();
                    println!("  r({} | R) = ({})", lv.vertex, coords.join(", "));
                }
            } else {
                println!("{}", serde_json::to_string(&rep).unwrap());
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
