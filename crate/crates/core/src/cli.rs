//! The `alliance` command-line tool.
//!
//! Exit codes: 0 on success, 1 when a solve finds no satisfying set, 2 on
//! usage, parse or input errors. The worker count for parallel searches is
//! read from `ALLIANCE_THREADS` (default: available parallelism).

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::alliance::{catalog_spec, check_alliance, AllianceSpec, CatalogEntry};
use crate::direct::{propagate_with_rule, MajorityRule, Rounds, ThresholdMap};
use crate::error::{Error, Result};
use crate::graph::{generate, parse_edge_list, serialize_edge_list, Family, Graph, VertexSet};
use crate::harness::{
    errata_scan, render_summary, verify_characterization, GraphFamily, PropositionId,
};
use crate::intset::parse_intset;
use crate::solvers::{bb_min_alliance, solve_extremal, Objective, SolveResult};

pub const THREADS_VAR: &str = "ALLIANCE_THREADS";

#[derive(Parser, Debug)]
#[command(name = "alliance", version, about = "(D,O)-alliances in graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test whether a vertex set satisfies a parameter.
    Check(CheckArgs),
    /// Find a minimum or maximum set satisfying a parameter.
    Solve(SolveArgs),
    /// Run majority or threshold diffusion from a seed set.
    Propagate(PropagateArgs),
    /// Compare the alliance characterisations with the direct definitions.
    Verify(VerifyArgs),
    /// Print a generated graph in edge-list format.
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
struct SpecArgs {
    /// Catalog parameter name, e.g. `powerful` or `monopoly`.
    #[arg(long, conflicts_with_all = ["d", "o", "global", "nonempty", "neutrals"])]
    name: Option<String>,
    /// Catalog parameter value as `key=value`; repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE", value_parser = parse_param, requires = "name")]
    params: Vec<(String, i64)>,
    /// Raw D condition set, e.g. `>=0`, `{1,3}`, `all`.
    #[arg(
        long = "D",
        id = "d",
        value_name = "SET",
        allow_hyphen_values = true,
        requires = "o"
    )]
    d: Option<String>,
    /// Raw O condition set.
    #[arg(
        long = "O",
        id = "o",
        value_name = "SET",
        allow_hyphen_values = true,
        requires = "d"
    )]
    o: Option<String>,
    /// Require the set to dominate the graph.
    #[arg(long)]
    global: bool,
    /// Reject the empty set.
    #[arg(long)]
    nonempty: bool,
    /// Neutral vertices, e.g. `3,4`.
    #[arg(long, value_name = "VERTICES")]
    neutrals: Option<String>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Edge-list file, or `-` for standard input.
    #[arg(long)]
    graph: PathBuf,
    /// Candidate set, e.g. `0,2`.
    #[arg(long, allow_hyphen_values = true)]
    set: String,
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Branch and bound for global minimum problems, exhaustive otherwise.
    #[default]
    Auto,
    Exhaustive,
    Bb,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, default_value = "min", value_parser = ["min", "max"])]
    objective: String,
    #[arg(long, value_enum, default_value_t)]
    method: Method,
    /// Also report the number of subsets examined and the elapsed time.
    #[arg(long)]
    stats: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct PropagateArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Initially active vertices.
    #[arg(long)]
    seeds: String,
    /// A round count or `unbounded`.
    #[arg(long, default_value = "unbounded", value_parser = parse_rounds)]
    rounds: Rounds,
    /// Per-vertex thresholds `v:t,...`; unlisted vertices use ⌈δ(v)/2⌉.
    #[arg(long, conflicts_with = "strict")]
    thresholds: Option<String>,
    /// Activate only on a strict majority of active neighbours.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Largest graph order to enumerate.
    #[arg(long, default_value_t = 4)]
    nmax: usize,
    /// Restrict to one proposition, e.g. `monopoly-paper`.
    #[arg(long)]
    prop: Option<String>,
    /// Restrict to one family, e.g. `cycles`.
    #[arg(long)]
    family: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// path, cycle, complete, complete-bipartite, star or random-gnp.
    family: String,
    /// Family parameters, e.g. `5` or `3 4`.
    #[arg(allow_negative_numbers = true)]
    params: Vec<i64>,
    /// Seed for random families.
    #[arg(long)]
    seed: Option<u64>,
}

fn parse_param(text: &str) -> std::result::Result<(String, i64), String> {
    let (k, v) = text
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=VALUE, got {text:?}"))?;
    let v = v
        .trim()
        .parse()
        .map_err(|_| format!("not an integer: {v:?}"))?;
    Ok((k.trim().to_string(), v))
}

fn parse_rounds(text: &str) -> std::result::Result<Rounds, String> {
    if text == "unbounded" {
        return Ok(Rounds::Unbounded);
    }
    text.parse()
        .map(Rounds::Bounded)
        .map_err(|_| format!("expected a count or `unbounded`, got {text:?}"))
}

/// What a `check` or `solve` is evaluated against.
enum Selection {
    Catalog(CatalogEntry),
    Raw(AllianceSpec),
}

impl Selection {
    fn holds(&self, g: &Graph, s: &VertexSet) -> Result<bool> {
        match self {
            Selection::Catalog(entry) => entry.holds(g, s),
            Selection::Raw(spec) => check_alliance(g, s, spec),
        }
    }

    /// The spec branch and bound can search directly, if any.
    fn plain_spec(&self) -> Option<&AllianceSpec> {
        match self {
            Selection::Catalog(e) if !e.on_complement && !e.existential_neutrals => Some(&e.spec),
            Selection::Catalog(_) => None,
            Selection::Raw(spec) => Some(spec),
        }
    }
}

fn selection(args: &SpecArgs, g: &Graph) -> Result<Selection> {
    if let Some(name) = &args.name {
        return Ok(Selection::Catalog(catalog_spec(name, &args.params)?));
    }
    let (Some(d), Some(o)) = (&args.d, &args.o) else {
        return Err(Error::BadParams(
            "give either --name or both --D and --O".into(),
        ));
    };
    let mut spec = AllianceSpec::new(parse_intset(d)?, parse_intset(o)?);
    spec.global = args.global;
    spec.require_nonempty = args.nonempty;
    if let Some(n) = &args.neutrals {
        spec = spec.with_neutrals(VertexSet::parse(g.n(), n)?);
    }
    Ok(Selection::Raw(spec))
}

fn read_graph(path: &PathBuf) -> std::result::Result<Graph, String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading standard input: {e}"))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| format!("reading {}: {e}", path.display()))?;
    }
    parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Result of one subcommand: text for standard output and the exit code.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn json_line(value: &serde_json::Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}

fn run_check(args: CheckArgs) -> std::result::Result<Outcome, String> {
    let g = read_graph(&args.graph)?;
    let sel = selection(&args.spec, &g).map_err(|e| e.to_string())?;
    let s = VertexSet::parse(g.n(), &args.set).map_err(|e| e.to_string())?;
    let result = sel.holds(&g, &s).map_err(|e| e.to_string())?;
    Ok(Outcome::ok(match args.format {
        Format::Text => format!("{result}\n"),
        Format::Json => json_line(&json!({ "result": result })),
    }))
}

fn run_solve(args: SolveArgs) -> std::result::Result<Outcome, String> {
    let g = read_graph(&args.graph)?;
    let sel = selection(&args.spec, &g).map_err(|e| e.to_string())?;
    let objective: Objective = args.objective.parse().map_err(|e: Error| e.to_string())?;
    let use_bb = match args.method {
        Method::Exhaustive => false,
        Method::Bb => {
            if objective == Objective::Max {
                return Err("branch and bound only minimises".into());
            }
            true
        }
        Method::Auto => {
            objective == Objective::Min
                && sel
                    .plain_spec()
                    .is_some_and(|s| s.global && s.neutrals.is_none())
        }
    };
    let result: SolveResult = if use_bb {
        let spec = sel
            .plain_spec()
            .ok_or("this parameter cannot be solved by branch and bound")?;
        bb_min_alliance(&g, spec)
    } else {
        solve_extremal(&g, |s| sel.holds(&g, s).unwrap_or(false), objective)
    }
    .map_err(|e| e.to_string())?;

    let code = if result.feasible { 0 } else { 1 };
    let stdout = match args.format {
        Format::Json => {
            let mut v = json!({
                "feasible": result.feasible,
                "size": result.size,
                "witness": result.witness,
            });
            if args.stats {
                v["subsets_examined"] = json!(result.subsets_examined);
                v["elapsed_ms"] = json!(result.elapsed.as_secs_f64() * 1e3);
            }
            json_line(&v)
        }
        Format::Text => {
            let mut s = match &result.witness {
                Some(w) => format!("size {}\nwitness {w}\n", w.len()),
                None => "infeasible\n".to_string(),
            };
            if args.stats {
                s.push_str(&format!(
                    "subsets_examined {}\nelapsed_ms {:.3}\n",
                    result.subsets_examined,
                    result.elapsed.as_secs_f64() * 1e3
                ));
            }
            s
        }
    };
    Ok(Outcome { stdout, code })
}

fn run_propagate(args: PropagateArgs) -> std::result::Result<Outcome, String> {
    let g = read_graph(&args.graph)?;
    let seeds = VertexSet::parse(g.n(), &args.seeds).map_err(|e| e.to_string())?;
    let thresholds = args
        .thresholds
        .as_deref()
        .map(|t| ThresholdMap::parse(&g, t))
        .transpose()
        .map_err(|e| e.to_string())?;
    let rule = if args.strict {
        MajorityRule::MoreThanHalf
    } else {
        MajorityRule::AtLeastHalf
    };
    let p = propagate_with_rule(&g, &seeds, args.rounds, thresholds.as_ref(), rule)
        .map_err(|e| e.to_string())?;
    Ok(Outcome::ok(match args.format {
        Format::Text => format!(
            "active {}\nrounds {}\nall_active {}\n",
            p.active,
            p.rounds_used,
            p.active.is_full()
        ),
        Format::Json => json_line(&json!({
            "active": p.active,
            "rounds": p.rounds_used,
            "all_active": p.active.is_full(),
        })),
    }))
}

fn run_verify(args: VerifyArgs) -> std::result::Result<Outcome, String> {
    let reports = if args.prop.is_none() && args.family.is_none() {
        errata_scan(args.nmax)
    } else {
        (|| {
            let props = match &args.prop {
                Some(p) => vec![p.parse::<PropositionId>()?],
                None => PropositionId::all(),
            };
            let families = match &args.family {
                Some(f) => vec![f.parse::<GraphFamily>()?],
                None => vec![GraphFamily::AllLabeledMinDegreeOne, GraphFamily::AllLabeled],
            };
            let mut out = Vec::new();
            for family in families {
                for &prop in &props {
                    out.push(verify_characterization(prop, family, args.nmax)?);
                }
            }
            Ok(out)
        })()
    }
    .map_err(|e: Error| e.to_string())?;
    Ok(Outcome::ok(match args.format {
        Format::Text => render_summary(&reports),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?;
            s.push('\n');
            s
        }
    }))
}

fn run_generate(args: GenerateArgs) -> std::result::Result<Outcome, String> {
    let family: Family = args.family.parse().map_err(|e: Error| e.to_string())?;
    let g = generate(family, &args.params, args.seed).map_err(|e| e.to_string())?;
    Ok(Outcome::ok(serialize_edge_list(&g)))
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let outcome = match cli.command {
        Command::Check(a) => run_check(a),
        Command::Solve(a) => run_solve(a),
        Command::Propagate(a) => run_propagate(a),
        Command::Verify(a) => run_verify(a),
        Command::Generate(a) => run_generate(a),
    };
    match outcome {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            o.code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Entry point for the binary: sizes the worker pool, then runs with the
/// process arguments and standard streams.
pub fn main_from_env() -> i32 {
    let stderr = std::io::stderr();
    if let Ok(value) = std::env::var(THREADS_VAR) {
        match value.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                let _ = writeln!(
                    stderr.lock(),
                    "error: {THREADS_VAR} must be a positive integer, got {value:?}"
                );
                return 2;
            }
        }
    }
    let mut out = std::io::stdout().lock();
    let mut err = stderr.lock();
    let code = run(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("alliance").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn generate_prints_edge_list() {
        let (code, out, _) = run_str(&["generate", "cycle", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "4 4\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        let (code, _, err) = run_str(&["generate", "hypercube", "3"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
        assert_eq!(run_str(&["verify", "--prop", "nope"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("solve"));
    }

    #[test]
    fn params_and_rounds() {
        assert_eq!(parse_param("r=-2"), Ok(("r".to_string(), -2)));
        assert!(parse_param("r").is_err());
        assert_eq!(parse_rounds("3"), Ok(Rounds::Bounded(3)));
        assert_eq!(parse_rounds("unbounded"), Ok(Rounds::Unbounded));
    }
}
