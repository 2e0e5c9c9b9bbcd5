//! `orientdia`: strong orientations of bridgeless multigraphs with diameter
//! guarantees, driven from edge-list files.
//!
//! Every subcommand prints exactly one JSON object (single line, keys sorted,
//! newline-terminated) to stdout on success. Exit codes: 0 success, 1 input
//! error, 2 the input has a bridge (no strong orientation exists), 3 an
//! internal guarantee was violated.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use orientdia_core::decompose::{decompose, decompose_report};
use orientdia_core::exact::DEFAULT_EDGE_BUDGET;
use orientdia_core::families::{bounds, Family, FamilySpec};
use orientdia_core::format::{
    digraph_to_dot, is_orientation_of, parse_digraph, parse_multigraph, write_digraph,
    write_multigraph,
};
use orientdia_core::orient::{blockgraph_orientation, robbins_with_report, theorem1_orientation};
use orientdia_core::{
    oriented_diameter_bruteforce, oriented_diameter_decomposed, Error, MultiGraph,
};

#[derive(Parser)]
#[command(
    name = "orientdia",
    version,
    about = "Strong orientations of bridgeless multigraphs with diameter guarantees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the block decomposition of a graph as JSON.
    Decompose {
        /// Edge-list file ("n m" header, then one "u v" line per edge).
        path: PathBuf,
    },
    /// Print the closed-form diameter bounds implied by a graph's block
    /// structure.
    Bounds {
        /// Edge-list file.
        path: PathBuf,
    },
    /// Construct a strong orientation and report the achieved diameter
    /// against the strategy's guarantee.
    Orient {
        /// Edge-list file; must be connected and bridgeless.
        path: PathBuf,
        /// Which construction to run.
        #[arg(long, value_enum)]
        strategy: Strategy,
        /// Write the arcs of the orientation to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the orientation in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Compute the exact oriented diameter, with a witness orientation.
    Exact {
        /// Edge-list file; must be connected and bridgeless.
        path: PathBuf,
        /// Search over all orientations, or block by block.
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// Generate a graph from a named family and write it to a file.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Number of blocks (required by gnp and random-bridgeless).
        #[arg(long)]
        p: Option<usize>,
        /// Seed for the random families; ignored by the deterministic ones.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the edge list.
        #[arg(long)]
        out: PathBuf,
        /// Also write the family's canonical orientation (arc list) here.
        #[arg(long)]
        emit_orientation: Option<PathBuf>,
    },
    /// Check that an arc file is a strong orientation of a graph file,
    /// optionally comparing its diameter against a named bound.
    Verify {
        /// Edge-list file.
        graph: PathBuf,
        /// Arc-list file (same format; "u v" means u -> v).
        arcs: PathBuf,
        /// Bound to compare the achieved diameter against.
        #[arg(long, value_enum)]
        bound: Option<BoundName>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    /// Any strong orientation (diameter at most n - 1).
    #[value(name = "robbins")]
    Robbins,
    /// Diameter at most n - floor(p/2), p = number of blocks.
    #[value(name = "theorem1")]
    Theorem1,
    /// For block graphs: diameter at most floor(3n/4) (n even) or
    /// floor(3(n+1)/4) (n odd).
    #[value(name = "blockgraph")]
    Blockgraph,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    #[value(name = "brute")]
    Brute,
    #[value(name = "decomposed")]
    Decomposed,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Extremal family: oriented diameter exactly n - floor(p/2).
    #[value(name = "gnp")]
    Gnp,
    /// Extremal block graph: oriented diameter meets the parity bound.
    #[value(name = "block")]
    Block,
    /// Random bridgeless graph with exactly p blocks.
    #[value(name = "random-bridgeless")]
    RandomBridgeless,
    /// Random block graph (every block a clique).
    #[value(name = "random-block-graph")]
    RandomBlockGraph,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Gnp => Family::GnpExtremal,
            FamilyArg::Block => Family::BlockExtremal,
            FamilyArg::RandomBridgeless => Family::RandomBridgeless,
            FamilyArg::RandomBlockGraph => Family::RandomBlockGraph,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundName {
    /// n - floor(p/2), p = number of blocks.
    #[value(name = "theorem1")]
    Theorem1,
    /// n - floor((s+1)/2), s = number of cut vertices.
    #[value(name = "corollary")]
    Corollary,
    /// floor(3n/4) for even n, floor(3(n+1)/4) for odd n.
    #[value(name = "blockgraph")]
    Blockgraph,
}

impl BoundName {
    fn as_str(self) -> &'static str {
        match self {
            BoundName::Theorem1 => "theorem1",
            BoundName::Corollary => "corollary",
            BoundName::Blockgraph => "blockgraph",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = init_threads().and_then(|()| run(cli.command)) {
        eprintln!("error: {e}");
        return ExitCode::from(match e {
            Error::Bridge { .. } => 2,
            Error::ContractViolation(_) => 3,
            _ => 1,
        });
    }
    ExitCode::SUCCESS
}

/// ORIENTDIA_THREADS caps the worker count for the parallel exact solver;
/// unset means available parallelism.
fn init_threads() -> Result<(), Error> {
    match std::env::var("ORIENTDIA_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) => {
            let count: usize = raw.parse().map_err(|_| {
                Error::invalid(format!("ORIENTDIA_THREADS must be a positive integer, got '{raw}'"))
            })?;
            if count == 0 {
                return Err(Error::invalid("ORIENTDIA_THREADS must be at least 1"));
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(count)
                .build_global()
                .map_err(|e| Error::invalid(format!("cannot configure thread pool: {e}")))
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Decompose { path } => {
            let g = read_graph(&path)?;
            print_json(&decompose_report(&g)?)
        }
        Command::Bounds { path } => {
            let g = read_graph(&path)?;
            let dec = decompose(&g)?;
            print_json(&bounds(g.vertex_count(), dec.block_count(), dec.cut_count())?)
        }
        Command::Orient {
            path,
            strategy,
            out,
            dot,
        } => run_orient(&path, strategy, out.as_deref(), dot.as_deref()),
        Command::Exact { path, method } => {
            let g = read_graph(&path)?;
            let cert = match method {
                Method::Brute => oriented_diameter_bruteforce(&g, DEFAULT_EDGE_BUDGET)?,
                Method::Decomposed => oriented_diameter_decomposed(&g)?,
            };
            print_json(&cert.report())
        }
        Command::Generate {
            family,
            n,
            p,
            seed,
            out,
            emit_orientation,
        } => run_generate(family, n, p, seed, &out, emit_orientation.as_deref()),
        Command::Verify { graph, arcs, bound } => run_verify(&graph, &arcs, bound),
    }
}

fn run_orient(
    path: &Path,
    strategy: Strategy,
    out: Option<&Path>,
    dot: Option<&Path>,
) -> Result<(), Error> {
    let g = read_graph(path)?;
    let (d, report) = match strategy {
        Strategy::Robbins => robbins_with_report(&g)?,
        Strategy::Theorem1 => theorem1_orientation(&g)?,
        Strategy::Blockgraph => blockgraph_orientation(&g)?,
    };
    if let Some(target) = out {
        write_file(target, &write_digraph(&d))?;
    }
    if let Some(target) = dot {
        write_file(target, &digraph_to_dot(&d))?;
    }
    print_json(&report)
}

fn run_generate(
    family: FamilyArg,
    n: usize,
    p: Option<usize>,
    seed: u64,
    out: &Path,
    emit: Option<&Path>,
) -> Result<(), Error> {
    let spec = FamilySpec {
        family: family.into(),
        n,
        p,
        seed,
    };
    let (g, canonical) = spec.generate()?;
    write_file(out, &write_multigraph(&g))?;
    let orientation_file = match emit {
        None => None,
        Some(target) => {
            let d = canonical.ok_or_else(|| {
                Error::invalid(format!(
                    "family {} has no canonical orientation",
                    spec.family.as_str()
                ))
            })?;
            write_file(target, &write_digraph(&d))?;
            Some(target.display().to_string())
        }
    };
    let summary = json!({
        "edge_count": g.edge_count(),
        "family": spec.family.as_str(),
        "graph_file": out.display().to_string(),
        "n": g.vertex_count(),
        "orientation_file": orientation_file,
        "p": p,
        "seed": seed,
    });
    println!("{summary}");
    Ok(())
}

fn run_verify(graph: &Path, arcs: &Path, bound: Option<BoundName>) -> Result<(), Error> {
    let g = read_graph(graph)?;
    let d = parse_digraph(&read_to_string(arcs)?)?;
    if !is_orientation_of(&d, &g) {
        return Err(Error::invalid(
            "arc file is not an orientation of the graph file",
        ));
    }
    let strong = d.is_strongly_connected();
    let diameter = d.diameter().finite();
    let mut report = json!({
        "arc_count": d.arc_count(),
        "diameter": diameter,
        "n": g.vertex_count(),
        "strong": strong,
    });
    let mut ok = strong;
    if let Some(name) = bound {
        let dec = decompose(&g)?;
        let set = bounds(g.vertex_count(), dec.block_count(), dec.cut_count())?;
        let value = match name {
            BoundName::Theorem1 => set.theorem1_bound,
            BoundName::Corollary => set.corollary_bound,
            BoundName::Blockgraph => set.blockgraph_bound,
        };
        let within = diameter.is_some_and(|diam| diam <= value);
        report["bound"] = json!(value);
        report["bound_name"] = json!(name.as_str());
        report["within_bound"] = json!(within);
        ok = ok && within;
    }
    println!("{report}");
    if ok {
        Ok(())
    } else if strong {
        Err(Error::invalid("orientation exceeds the requested bound"))
    } else {
        Err(Error::NotStronglyConnected)
    }
}

fn read_to_string(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<MultiGraph, Error> {
    parse_multigraph(&read_to_string(path)?)
}

fn write_file(path: &Path, content: &str) -> Result<(), Error> {
    fs::write(path, content)
        .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
}

/// Single-object, key-sorted, newline-terminated JSON on stdout.
fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Error> {
    let value = serde_json::to_value(value)
        .map_err(|e| Error::contract(format!("report serialization failed: {e}")))?;
    println!("{value}");
    Ok(())
}
