//! Command-line front end.
//!
//! Exit codes: 0 yes (or success), 1 no, 2 unknown, 64 usage error,
//! 65 unreadable or malformed input, 70 internal invariant failure.

use std::io::Read;
use std::process::ExitCode;

use antidirected::bipartite::{
    chvatal_condition_holds, two_factor_condition_holds, BipartiteInstance, DeficiencyMode, HamiltonSearch,
};
use antidirected::classical::classical_conditions;
use antidirected::conjecture::conjecture_scan;
use antidirected::counting::{ratio_base_case, ratio_recursion_check, scan_count_bound, verify_count_bound};
use antidirected::cover::validate_anti_directed_cover;
use antidirected::gen::{dn, named_cubic, random_cubic, random_min_degree, random_regular, stream_rng};
use antidirected::graph::{Digraph, SimpleGraph};
use antidirected::reduction::{adf_to_coloring, three_edge_color_direct, three_edge_colorable_via_adf};
use antidirected::solver::{
    decide, directed_two_factor, equipartition_census, CensusMode, Certificate, Decision, SolverConfig, Strategy,
    Target,
};
use antidirected::threshold::{threshold, Variant, DEFAULT_DIGITS};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

#[derive(Parser)]
#[command(name = "antidirected", version, about = "Anti-directed 2-factors and Hamilton cycles in digraphs")]
struct Cli {
    /// Worker threads for parallel searches and scans (results do not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a property of a digraph.
    #[command(subcommand)]
    Check(Check),
    /// Count good and bad source sets of a digraph.
    Census {
        file: String,
        #[arg(long, value_enum, default_value_t = TargetArg::TwoFactor)]
        target: TargetArg,
        #[arg(long, value_enum, default_value_t = CensusModeArg::Exhaustive)]
        mode: CensusModeArg,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Bipartite instance tools (files carry an "X: ..." partition line).
    #[command(subcommand)]
    Bipartite(Bip),
    /// Reductions.
    #[command(subcommand)]
    Reduce(Reduce),
    /// Exact counting and thresholds.
    #[command(subcommand)]
    Count(Count),
    /// Graph generators; output goes to stdout in the graph file format.
    #[command(subcommand)]
    Gen(Gen),
    /// Search for digraphs with delta >= n/2 and no anti-directed 2-factor.
    #[command(subcommand)]
    Conjecture(Conjecture),
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Sampled,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    #[value(name = "two_factor")]
    TwoFactor,
    Hamilton,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusModeArg {
    Exhaustive,
    Sample,
}

#[derive(clap::Args)]
struct SolveArgs {
    /// Digraph file, or - for stdin.
    file: String,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    /// Largest order accepted by the exhaustive strategy.
    #[arg(long, default_value_t = 24)]
    max_exhaustive: usize,
    /// Node budget for each Hamilton search.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
}

#[derive(Subcommand)]
enum Check {
    /// Anti-directed 2-factor.
    Adf(SolveArgs),
    /// Anti-directed Hamilton cycle.
    Adhc(SolveArgs),
    /// Directed 2-factor.
    D2f { file: String },
    /// Minimum-degree sufficient conditions met by the digraph.
    Classical { file: String },
}

#[derive(Subcommand)]
enum Bip {
    /// 2-factor of the instance; exit 0 if found, 1 if none.
    TwoFactor { file: String },
    /// Deficient set; exit 0 if one exists, 1 if none.
    Deficient {
        file: String,
        #[arg(long, value_enum, default_value_t = DeficiencyArg::Minimal)]
        mode: DeficiencyArg,
    },
    /// Hamilton cycle; exit 0 found, 1 absent, 2 budget exhausted.
    Hamilton {
        file: String,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Necessary degree conditions for lacking a 2-factor or Hamilton cycle.
    Conditions { file: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum DeficiencyArg {
    Exhaustive,
    Minimal,
}

#[derive(Subcommand)]
enum Reduce {
    /// Decide 3-edge-colourability of a cubic graph through the digraph.
    #[command(name = "3ec")]
    ThreeEdgeColor {
        file: String,
        /// Also run the direct colourer and require agreement.
        #[arg(long)]
        cross_validate: bool,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
        strategy: StrategyArg,
    },
}

#[derive(Subcommand)]
enum Count {
    /// Exact N, S and the verdict of N > S.
    Verify { n: u64, delta: u64 },
    /// CSV of N > S for every even 12 <= n < nmax at the smallest delta > 24n/46.
    Scan {
        #[arg(long, default_value_t = 1420)]
        nmax: u64,
    },
    /// Certified integer bracket of the threshold at p = a/b.
    Threshold {
        p: String,
        #[arg(long, value_enum, default_value_t = VariantArg::TwoFactor)]
        variant: VariantArg,
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: u32,
    },
    /// Ratio recursion checks for n = 0 mod 4 and even delta > n/2.
    Ratio { n: u64, delta: u64 },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Hamilton,
    #[value(name = "two_factor")]
    TwoFactor,
}

#[derive(Subcommand)]
enum Gen {
    /// Two disjoint complete digraphs on n/2 vertices.
    Dn { n: usize },
    /// Complete digraph.
    Complete { n: usize },
    /// Random digraph with minimum semi-degree delta.
    Random {
        n: usize,
        delta: usize,
        /// Every in- and outdegree exactly delta.
        #[arg(long)]
        regular: bool,
    },
    /// Cubic graph: k4, k33, prism, petersen, mobius-kantor, gp:N:K, or random.
    Cubic {
        name: String,
        /// Order for random cubic graphs.
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum Conjecture {
    Scan {
        /// Orders as a range "a..b" (inclusive) or a single value.
        #[arg(long, default_value = "8..14")]
        n: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
    },
}

/// Global options handed to each subcommand.
struct Opts {
    pretty: bool,
    seed: u64,
}

enum Failure {
    Usage(String),
    Data(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 64,
            Failure::Data(_) => 65,
            Failure::Internal(_) => 70,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) | Failure::Internal(m) => m,
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Data(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Data(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn read_digraph(path: &str) -> Result<Digraph, Failure> {
    Digraph::parse(&read_input(path)?).map_err(|e| Failure::Data(format!("{path}: {e}")))
}

fn read_simple(path: &str) -> Result<SimpleGraph, Failure> {
    SimpleGraph::parse(&read_input(path)?).map_err(|e| Failure::Data(format!("{path}: {e}")))
}

fn read_bipartite(path: &str) -> Result<BipartiteInstance, Failure> {
    BipartiteInstance::parse(&read_input(path)?).map_err(|e| Failure::Data(format!("{path}: {e}")))
}

fn emit(value: &serde_json::Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    println!("{}", text.expect("json value serializes"));
}

fn decision_code(d: Decision) -> u8 {
    match d {
        Decision::Yes => 0,
        Decision::No => 1,
        Decision::Unknown => 2,
    }
}

fn strategy(arg: StrategyArg, samples: u64, seed: u64) -> Strategy {
    match arg {
        StrategyArg::Exhaustive => Strategy::Exhaustive,
        StrategyArg::Sampled => Strategy::Sampled { samples, seed },
        StrategyArg::Auto => Strategy::Auto { seed },
    }
}

fn witness_check(d: &Digraph, cert: &Certificate) -> Result<(), Failure> {
    if let Some(w) = &cert.witness {
        validate_anti_directed_cover(d, &w.cover)
            .map_err(|e| Failure::Internal(format!("produced witness fails validation: {e}")))?;
    }
    Ok(())
}

fn check(cmd: Check, cli: &Opts) -> Outcome {
    match cmd {
        Check::Adf(args) => solve(args, Target::TwoFactor, cli),
        Check::Adhc(args) => solve(args, Target::Hamilton, cli),
        Check::D2f { file } => {
            let d = read_digraph(&file)?;
            let factor = directed_two_factor(&d);
            emit(
                &json!({ "directed_two_factor": factor.is_some(), "successor": factor.clone() }),
                cli.pretty,
            );
            Ok(if factor.is_some() { 0 } else { 1 })
        }
        Check::Classical { file } => {
            let d = read_digraph(&file)?;
            emit(&serde_json::to_value(classical_conditions(&d)).expect("report"), cli.pretty);
            Ok(0)
        }
    }
}

fn solve(args: SolveArgs, target: Target, cli: &Opts) -> Outcome {
    let d = read_digraph(&args.file)?;
    let config = SolverConfig {
        max_exhaustive_order: args.max_exhaustive,
        hamilton_budget: args.budget,
        ..SolverConfig::default()
    };
    let cert = decide(&d, target, strategy(args.strategy, args.samples, cli.seed), &config)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    witness_check(&d, &cert)?;
    println!("{}", cert.to_json(cli.pretty));
    Ok(decision_code(cert.decision))
}

fn census(cmd: Command, cli: &Opts) -> Outcome {
    let Command::Census {
        file,
        target,
        mode,
        samples,
        budget,
    } = cmd
    else {
        unreachable!()
    };
    let d = read_digraph(&file)?;
    let target = match target {
        TargetArg::TwoFactor => Target::TwoFactor,
        TargetArg::Hamilton => Target::Hamilton,
    };
    let mode = match mode {
        CensusModeArg::Exhaustive => CensusMode::Exhaustive,
        CensusModeArg::Sample => CensusMode::Sample { samples, seed: cli.seed },
    };
    let config = SolverConfig {
        hamilton_budget: budget,
        ..SolverConfig::default()
    };
    let report = equipartition_census(&d, mode, target, &config).map_err(|e| Failure::Usage(e.to_string()))?;
    println!("{}", report.to_json(cli.pretty));
    Ok(0)
}

fn bipartite(cmd: Bip, cli: &Opts) -> Outcome {
    match cmd {
        Bip::TwoFactor { file } => {
            let g = read_bipartite(&file)?;
            let f = g.two_factor();
            emit(
                &json!({ "two_factor": f.is_some(), "cycles": f.as_ref().map(|c| &c.cycles) }),
                cli.pretty,
            );
            Ok(if f.is_some() { 0 } else { 1 })
        }
        Bip::Deficient { file, mode } => {
            let g = read_bipartite(&file)?;
            let mode = match mode {
                DeficiencyArg::Exhaustive => DeficiencyMode::Exhaustive,
                DeficiencyArg::Minimal => DeficiencyMode::Minimal,
            };
            let w = g.find_deficient_set(mode).map_err(|e| Failure::Usage(e.to_string()))?;
            emit(&json!({ "deficient": w.is_some(), "witness": w }), cli.pretty);
            Ok(if w.is_some() { 0 } else { 1 })
        }
        Bip::Hamilton { file, budget } => {
            let g = read_bipartite(&file)?;
            let (status, cycle, code) = match g.hamilton_cycle(budget).map_err(|e| Failure::Usage(e.to_string()))? {
                HamiltonSearch::Found(c) => ("yes", Some(c), 0),
                HamiltonSearch::Absent => ("no", None, 1),
                HamiltonSearch::Unknown { .. } => ("unknown", None, 2),
            };
            emit(&json!({ "decision": status, "cycle": cycle }), cli.pretty);
            Ok(code)
        }
        Bip::Conditions { file } => {
            let g = read_bipartite(&file)?;
            let seq = g.degree_sequence();
            let n = g.order();
            let two = two_factor_condition_holds(&seq, n).map(|r| r.map_err(|e| Failure::Internal(e.to_string())));
            let chvatal = chvatal_condition_holds(&seq, n).map_err(|e| Failure::Internal(e.to_string()))?;
            let two = two.transpose()?;
            emit(
                &json!({ "degree_sequence": seq, "two_factor_condition": two, "hamilton_condition": chvatal }),
                cli.pretty,
            );
            Ok(0)
        }
    }
}

fn reduce(cmd: Reduce, cli: &Opts) -> Outcome {
    let Reduce::ThreeEdgeColor {
        file,
        cross_validate,
        strategy: strat,
    } = cmd;
    let g = read_simple(&file)?;
    let config = SolverConfig::default();
    let outcome = three_edge_colorable_via_adf(&g, strategy(strat, 1000, cli.seed), &config)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let coloring = match &outcome.certificate.witness {
        Some(w) => Some(adf_to_coloring(&g, &w.cover).map_err(|e| Failure::Internal(e.to_string()))?),
        None => None,
    };
    let mut out = json!({
        "colorable": outcome.colorable,
        "certificate": serde_json::from_str::<serde_json::Value>(&outcome.certificate.to_json(false)).expect("json"),
        "coloring": coloring,
    });
    if cross_validate {
        let direct = three_edge_color_direct(&g).map_err(|e| Failure::Usage(e.to_string()))?;
        out["direct_colorable"] = json!(direct.is_some());
        if let Some(c) = outcome.colorable {
            if c != direct.is_some() {
                emit(&out, cli.pretty);
                return Err(Failure::Internal("reduction and direct colourer disagree".into()));
            }
        }
    }
    emit(&out, cli.pretty);
    Ok(decision_code(outcome.certificate.decision))
}

/// Accepts `a/b`, an integer, or a terminating decimal such as `0.6`.
fn parse_p(p: &str) -> Result<BigRational, Failure> {
    let bad = || Failure::Usage(format!("cannot parse {p:?} as a fraction a/b or a decimal"));
    let p = p.trim();
    if let Some((int, frac)) = p.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: num_bigint::BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let scale = num_bigint::BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(BigRational::new(digits, scale));
    }
    p.parse::<BigRational>().map_err(|_| bad())
}

fn count(cmd: Count, cli: &Opts) -> Outcome {
    match cmd {
        Count::Verify { n, delta } => {
            let report = verify_count_bound(n, delta).map_err(|e| Failure::Usage(e.to_string()))?;
            println!("{}", report.to_json(cli.pretty));
            Ok(0)
        }
        Count::Scan { nmax } => {
            print!("{}", scan_count_bound(nmax).to_csv());
            Ok(0)
        }
        Count::Threshold { p, variant, digits } => {
            let variant = match variant {
                VariantArg::Hamilton => Variant::Hamilton,
                VariantArg::TwoFactor => Variant::TwoFactor,
            };
            let t = threshold(&parse_p(&p)?, variant, digits).map_err(|e| Failure::Usage(e.to_string()))?;
            println!("{t}");
            Ok(0)
        }
        Count::Ratio { n, delta } => {
            let base = ratio_base_case(n, delta).map_err(|e| Failure::Usage(e.to_string()))?;
            let steps: Vec<_> = (0..(n / 4).saturating_sub(3))
                .map(|k| {
                    let c = ratio_recursion_check(n, delta, k).expect("regime checked by the base case");
                    json!({
                        "k": k,
                        "a_closed_form": c.a_closed_form,
                        "b_closed_form": c.b_closed_form,
                        "s_form": c.s_form,
                        "inequality": c.inequality,
                    })
                })
                .collect();
            emit(&json!({ "n": n, "delta": delta, "base_case": base, "steps": steps }), cli.pretty);
            Ok(0)
        }
    }
}

fn generate(cmd: Gen, cli: &Opts) -> Outcome {
    let mut rng = stream_rng(cli.seed, 0);
    let text = match cmd {
        Gen::Dn { n } => dn(n).map_err(|e| Failure::Usage(e.to_string()))?.to_text(),
        Gen::Complete { n } => Digraph::complete(n).map_err(|e| Failure::Usage(e.to_string()))?.to_text(),
        Gen::Random { n, delta, regular } => {
            let d = if regular {
                random_regular(n, delta, &mut rng)
            } else {
                random_min_degree(n, delta, &mut rng)
            };
            d.map_err(|e| Failure::Usage(e.to_string()))?.to_text()
        }
        Gen::Cubic { name, n } => {
            let g = if name == "random" {
                random_cubic(n, &mut rng)
            } else {
                named_cubic(&name)
            };
            g.map_err(|e| Failure::Usage(e.to_string()))?.to_text()
        }
    };
    print!("{text}");
    Ok(0)
}

fn parse_orders(spec: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Usage(format!("cannot parse order range {spec:?}"));
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim_start_matches('=').trim().parse().map_err(|_| bad())?),
        None => {
            let v: usize = spec.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    Ok((lo..=hi).filter(|n| n % 2 == 0).collect())
}

fn conjecture(cmd: Conjecture, cli: &Opts) -> Outcome {
    let Conjecture::Scan { n, trials } = cmd;
    let orders = parse_orders(&n)?;
    let report = conjecture_scan(&orders, trials, cli.seed, &SolverConfig::default())
        .map_err(|e| Failure::Usage(e.to_string()))?;
    println!("{}", report.to_json(cli.pretty));
    Ok(0)
}

fn run(cli: Cli) -> Outcome {
    let Cli {
        jobs,
        pretty,
        seed,
        command,
    } = cli;
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| Failure::Internal(e.to_string()))?;
    }
    let shell = Opts { pretty, seed };
    match command {
        Command::Check(c) => check(c, &shell),
        c @ Command::Census { .. } => census(c, &shell),
        Command::Bipartite(c) => bipartite(c, &shell),
        Command::Reduce(c) => reduce(c, &shell),
        Command::Count(c) => count(c, &shell),
        Command::Gen(c) => generate(c, &shell),
        Command::Conjecture(c) => conjecture(c, &shell),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
