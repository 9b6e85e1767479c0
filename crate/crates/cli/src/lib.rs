//! Command-line front end. [`run`] parses arguments, writes to `out`, and
//! returns the process exit code: 0 on success, 1 when a check fails, 2 for
//! bad usage or unreadable input.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use tubings::coxeter::{
    blown_up_points, min_building_elements_type_a, CoxeterGroup, CoxeterSystem, GroupLimits, TiledComplex,
};
use tubings::graph::enumerate_tubes;
use tubings::lattice::{enumerate_tubings_with, face_poset_with, facet_product_check, Connectivity};
use tubings::promotion::build_by_promotion;
use tubings::realization::{export_polytope, verify_realization, ExportFormat};
use tubings::{catalog, Graph};

#[derive(Parser, Debug)]
#[command(name = "tubings", version, about = "Graph-associahedra and blown-up Coxeter complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphArg {
    /// `path:k`, `cycle:k`, `complete:k`, `star:k`, a Coxeter name such as
    /// `A3`, or a graph file (`n <count>` then `e <u> <v>` lines)
    graph: String,
    /// Admit graphs with several components
    #[arg(long)]
    allow_disconnected: bool,
}

impl GraphArg {
    fn mode(&self) -> Connectivity {
        if self.allow_disconnected {
            Connectivity::AllowDisconnected
        } else {
            Connectivity::RequireConnected
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the tubes, one per line
    Tubes(GraphArg),
    /// List the tubings, one per line
    Tubings(GraphArg),
    /// Face counts by dimension, vertices first
    Fvector(GraphArg),
    /// The face poset, as text, DOT or JSON
    Poset {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Verify facet products, promotion and the realization
    Check {
        /// Graph spec; connected graphs only
        graph: String,
    },
    /// Realize the polytope with exact coordinates
    Realize {
        graph: String,
        #[arg(long, conflicts_with = "json")]
        off: bool,
        #[arg(long)]
        json: bool,
        /// Decimal places in OFF output
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
    /// Print the Coxeter graph of a system in the graph text format
    Coxgraph { system: String },
    /// Build and verify the tiled complex of a finite Coxeter system
    Tile {
        system: String,
        #[arg(long)]
        json: bool,
    },
    /// Euler characteristic of the tiled complex
    Euler { system: String },
    /// Exceptional divisor circles of a rank-3 complex
    Divisors { system: String },
    /// Minimal building set counts for A_n
    #[command(name = "minA")]
    MinA { n: usize },
}

struct Failure {
    code: i32,
    message: String,
}

type CmdResult = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

fn check_failed(message: String) -> Failure {
    Failure { code: 1, message }
}

fn io(e: std::io::Error) -> Failure {
    usage(format!("write failed: {e}"))
}

/// Catalog family, then Coxeter name, then a file path.
pub fn resolve_graph(spec: &str) -> Result<Graph, String> {
    if let Some(g) = catalog::parse_family(spec) {
        return g.map_err(|e| e.to_string());
    }
    if let Ok(sys) = CoxeterSystem::parse(spec) {
        return Ok(sys.coxeter_graph());
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| format!("{spec:?} is not a catalog graph, Coxeter system or readable file: {e}"))?;
    Graph::parse_text(&text).map_err(|e| format!("{spec}: {e}"))
}

fn graph_of(spec: &str) -> Result<Graph, Failure> {
    resolve_graph(spec).map_err(usage)
}

fn system_of(spec: &str) -> Result<CoxeterSystem, Failure> {
    CoxeterSystem::parse(spec).map_err(usage)
}

fn limits() -> Result<GroupLimits, Failure> {
    GroupLimits::from_env().map_err(usage)
}

fn complex_of(spec: &str) -> Result<TiledComplex, Failure> {
    TiledComplex::build_with(&system_of(spec)?, limits()?).map_err(usage)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn check(g: &Graph, out: &mut dyn Write) -> CmdResult {
    let mut failures = Vec::new();
    let lattice = face_poset_with(g, Connectivity::RequireConnected).map_err(usage)?;
    for t in enumerate_tubes(g) {
        let fp = facet_product_check(g, t).map_err(usage)?;
        if !fp.is_isomorphism {
            failures.push(format!("facet {t}: {}", fp.failure.unwrap_or_default()));
        }
    }
    let line = |ok: bool| if ok { "PASS" } else { "FAIL" };
    writeln!(out, "{} facet products", line(failures.is_empty())).map_err(io)?;

    let promoted = build_by_promotion(g).map_err(usage)?;
    let same = promoted.to_poset().isomorphism(&lattice.to_poset()).is_some();
    writeln!(out, "{} promotion", line(same)).map_err(io)?;
    if !same {
        failures.push("promotion poset differs from the face poset".into());
    }

    let report = verify_realization(g).map_err(usage)?;
    writeln!(out, "{} realization f-vector {}", line(report.ok()), join(&report.f_vector)).map_err(io)?;
    failures.extend(report.failures.iter().cloned());
    if !report.ok() && report.failures.is_empty() {
        failures.push("realization does not match the face lattice".into());
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(check_failed(failures.join("\n")))
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Tubes(arg) => {
            let g = graph_of(&arg.graph)?;
            for t in enumerate_tubes(&g) {
                writeln!(out, "{t}").map_err(io)?;
            }
        }
        Command::Tubings(arg) => {
            let g = graph_of(&arg.graph)?;
            for t in enumerate_tubings_with(&g, arg.mode()).map_err(usage)? {
                writeln!(out, "{t}").map_err(io)?;
            }
        }
        Command::Fvector(arg) => {
            let g = graph_of(&arg.graph)?;
            let lat = face_poset_with(&g, arg.mode()).map_err(usage)?;
            writeln!(out, "{}", join(&lat.f_vector())).map_err(io)?;
        }
        Command::Poset { graph, dot, json } => {
            let g = graph_of(&graph.graph)?;
            let lat = face_poset_with(&g, graph.mode()).map_err(usage)?;
            if dot {
                write!(out, "{}", lat.to_dot()).map_err(io)?;
            } else if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&lat.to_json()).expect("json")).map_err(io)?;
            } else {
                for (i, face) in lat.faces().iter().enumerate() {
                    writeln!(out, "{i} dim {} : {face}", lat.dim(i)).map_err(io)?;
                }
                for &(lo, hi) in lat.covers() {
                    writeln!(out, "{lo} < {hi}").map_err(io)?;
                }
            }
        }
        Command::Check { graph } => {
            let g = graph_of(&graph)?;
            check(&g, out)?;
        }
        Command::Realize { graph, off, json, digits } => {
            let g = graph_of(&graph)?;
            // OFF is the default; --off only documents the choice
            let format = if json && !off { ExportFormat::Json } else { ExportFormat::Off { digits } };
            let text = export_polytope(&g, format).map_err(usage)?;
            write!(out, "{text}").map_err(io)?;
            if !text.ends_with('\n') {
                writeln!(out).map_err(io)?;
            }
        }
        Command::Coxgraph { system } => {
            write!(out, "{}", system_of(&system)?.coxeter_graph().to_text()).map_err(io)?;
        }
        Command::Tile { system, json } => {
            let c = complex_of(&system)?;
            let report = c.verify();
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&c.to_json()).expect("json")).map_err(io)?;
            } else {
                writeln!(out, "system {}", c.group().system().label()).map_err(io)?;
                writeln!(out, "order {}", c.group().order()).map_err(io)?;
                writeln!(out, "cells {}", join(&report.counts)).map_err(io)?;
                writeln!(out, "euler {}", report.euler_characteristic).map_err(io)?;
                writeln!(out, "{}", if report.ok() { "PASS" } else { "FAIL" }).map_err(io)?;
            }
            if !report.ok() {
                return Err(check_failed(report.failures.join("\n")));
            }
        }
        Command::Euler { system } => {
            writeln!(out, "{}", complex_of(&system)?.euler_characteristic()).map_err(io)?;
        }
        Command::Divisors { system } => {
            let sys = system_of(&system)?;
            let group = CoxeterGroup::enumerate(&sys, limits()?).map_err(usage)?;
            let points = blown_up_points(&group).map_err(usage)?;
            let c = TiledComplex::from_group(group).map_err(usage)?;
            let comps = c.exceptional_divisors().map_err(usage)?;
            writeln!(out, "components {}", comps.len()).map_err(io)?;
            writeln!(out, "blown-up points {points}").map_err(io)?;
            for comp in &comps {
                writeln!(out, "tube {} edges {}", comp.tube, comp.edges.len()).map_err(io)?;
            }
        }
        Command::MinA { n } => {
            writeln!(out, "k block_size blocks sphere_components projective formula discrepancy").map_err(io)?;
            for row in min_building_elements_type_a(n).map_err(usage)? {
                writeln!(
                    out,
                    "{} {} {} {} {} {} {}",
                    row.k,
                    row.block_size,
                    row.blocks,
                    row.sphere_components,
                    row.projective,
                    row.formula,
                    if row.discrepancy { "DISCREPANCY" } else { "-" }
                )
                .map_err(io)?;
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
