use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use secluded::io::{format_candidate, parse_family, parse_vertex_list, parse_weights, read_graph};
use secluded::oracle;
use secluded::solvers::scattered_deletion;
use secluded::{
    enumerate, filter_seclusion_maximal, max_weight_secluded, Candidate, EnumParams, Error,
    ForbiddenFamily, Graph, Lambda, ScatteredInstance, VertexSet, WeightedInstance,
};
use serde_json::json;

/// Enumerate seclusion-maximal connected F-free subgraphs and solve the
/// problems built on them.
#[derive(Parser)]
#[command(name = "secluded", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream connected F-free sets C with S ⊆ C, C ∩ T = ∅, |N(C)| ≤ k.
    Enumerate(EnumerateArgs),
    /// Heaviest connected F-free set with at most k neighbors.
    MaxWeight(MaxWeightArgs),
    /// At most k deletions so that every component avoids one of the families.
    Scattered(ScatteredArgs),
    /// Brute-force reference answers for small graphs (n ≤ 20).
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Seclusion-maximal sets, printed like `enumerate --maximal-only`.
    Enum(EnumerateArgs),
    /// Minimum size of a separator avoiding S, and every minimum one.
    Seps(SepsArgs),
    MaxWeight(MaxWeightArgs),
    Scattered(ScatteredArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    graph: String,
    /// Comma-separated vertex ids.
    #[arg(long)]
    s: String,
    #[arg(long, default_value = "")]
    t: String,
    #[arg(long)]
    k: usize,
    /// Preset names and @file patterns, comma-separated, or "empty".
    #[arg(long)]
    family: String,
    /// Keep only seclusion-maximal sets, sorted (buffers the whole stream).
    #[arg(long)]
    maximal_only: bool,
    #[arg(long)]
    json: bool,
    /// Recursion statistics on stderr.
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct SepsArgs {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    s: String,
    #[arg(long, default_value = "")]
    t: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MaxWeightArgs {
    #[arg(long)]
    graph: String,
    /// Lines "v w"; unlisted vertices weigh 1.
    #[arg(long)]
    weights: Option<String>,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    family: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScatteredArgs {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    k: usize,
    /// One class per occurrence.
    #[arg(long, required = true)]
    family: Vec<String>,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = BufWriter::new(io::stdout().lock());
    let result = match cli.command {
        Command::Enumerate(a) => cmd_enumerate(&a, &mut out),
        Command::MaxWeight(a) => cmd_max_weight(&a, false, &mut out),
        Command::Scattered(a) => cmd_scattered(&a, false, &mut out),
        Command::Oracle { command } => match command {
            OracleCommand::Enum(a) => cmd_oracle_enum(&a, &mut out),
            OracleCommand::Seps(a) => cmd_oracle_seps(&a, &mut out),
            OracleCommand::MaxWeight(a) => cmd_max_weight(&a, true, &mut out),
            OracleCommand::Scattered(a) => cmd_scattered(&a, true, &mut out),
        },
    };
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type Out<'a> = dyn Write + 'a;

fn write_err(e: io::Error) -> Error {
    Error::InvalidInput(format!("cannot write output: {e}"))
}

fn emit_candidate(c: &Candidate, json: bool, out: &mut Out) -> Result<(), Error> {
    let line = if json {
        serde_json::to_string(c).expect("candidates serialize")
    } else {
        format_candidate(c)
    };
    writeln!(out, "{line}").map_err(write_err)
}

struct EnumInput {
    graph: Graph,
    s: VertexSet,
    t: VertexSet,
    family: ForbiddenFamily,
}

fn load_enum_input(a: &EnumerateArgs) -> Result<EnumInput, Error> {
    let graph = read_graph(&a.graph)?;
    let s = parse_vertex_list(&a.s)?;
    let t = parse_vertex_list(&a.t)?;
    let family = parse_family(&a.family)?;
    EnumParams::new(&graph, &s, &t, a.k, &family).validate()?;
    Ok(EnumInput {
        graph,
        s,
        t,
        family,
    })
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut Out) -> Result<(), Error> {
    let input = load_enum_input(a)?;
    let params = EnumParams::new(&input.graph, &input.s, &input.t, a.k, &input.family);
    let mut buffered = Vec::new();
    let mut failure = None;
    let stats = enumerate(params, |c| {
        if a.maximal_only {
            buffered.push(c);
            return ControlFlow::Continue(());
        }
        match emit_candidate(&c, a.json, out) {
            Ok(()) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    for c in filter_seclusion_maximal(&buffered) {
        emit_candidate(&c, a.json, out)?;
    }
    if a.stats {
        eprintln!(
            "nodes={} leaves={} max_depth={} emitted={}",
            stats.nodes, stats.leaves, stats.max_depth, stats.emitted
        );
    }
    Ok(())
}

fn cmd_oracle_enum(a: &EnumerateArgs, out: &mut Out) -> Result<(), Error> {
    let input = load_enum_input(a)?;
    let sets = oracle::brute_enum(&input.graph, &input.s, &input.t, a.k, &input.family)?;
    for members in sets {
        emit_candidate(&Candidate::new(&input.graph, members)?, a.json, out)?;
    }
    Ok(())
}

fn cmd_oracle_seps(a: &SepsArgs, out: &mut Out) -> Result<(), Error> {
    let graph = read_graph(&a.graph)?;
    let s = parse_vertex_list(&a.s)?;
    let t = parse_vertex_list(&a.t)?;
    let (lambda, seps) = oracle::brute_min_separators(&graph, &s, &t)?;
    if a.json {
        let value = match lambda {
            Lambda::Finite(x) => json!(x),
            other => json!(other.to_string()),
        };
        let doc = json!({ "lambda": value, "separators": seps });
        writeln!(out, "{doc}").map_err(write_err)
    } else {
        writeln!(out, "LAMBDA={lambda}").map_err(write_err)?;
        for p in seps {
            writeln!(out, "P={p}").map_err(write_err)?;
        }
        Ok(())
    }
}

fn cmd_max_weight(a: &MaxWeightArgs, brute: bool, out: &mut Out) -> Result<(), Error> {
    let graph = read_graph(&a.graph)?;
    let weights = match &a.weights {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
            parse_weights(&text, &graph).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?
        }
        None => graph.vertices().map(|v| (v, 1)).collect(),
    };
    let family = parse_family(&a.family)?;
    let inst = WeightedInstance::new(graph, weights, a.k, family)?;
    let best = if brute {
        oracle::brute_max_weight(&inst)?
    } else {
        max_weight_secluded(&inst)?
    };
    let text = match (&best, a.json) {
        (Some((c, w)), true) => json!({ "weight": w, "members": c }).to_string(),
        (None, true) => "null".to_string(),
        (Some((c, w)), false) => format!("WEIGHT={w}\nC={c}"),
        (None, false) => "NONE".to_string(),
    };
    writeln!(out, "{text}").map_err(write_err)
}

fn cmd_scattered(a: &ScatteredArgs, brute: bool, out: &mut Out) -> Result<(), Error> {
    let graph = read_graph(&a.graph)?;
    let families = a
        .family
        .iter()
        .map(|spec| parse_family(spec))
        .collect::<Result<Vec<_>, _>>()?;
    let inst = ScatteredInstance::new(graph, a.k, families)?;
    let x = if brute {
        oracle::brute_scattered(&inst)?
    } else {
        scattered_deletion(&inst)?
    };
    let text = match (&x, a.json) {
        (Some(x), true) => json!({ "deletion": x }).to_string(),
        (None, true) => "null".to_string(),
        (Some(x), false) => format!("X={x}"),
        (None, false) => "NONE".to_string(),
    };
    writeln!(out, "{text}").map_err(write_err)
}
