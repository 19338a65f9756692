//! `tripts`: generate point sets, build empty-triangle graphs, check their
//! structure, compute matchings and render drawings.
//!
//! Exit codes: 0 success, 1 an asserted check failed, 2 usage error,
//! 3 invalid input (unparsable, duplicate or non-general-position points),
//! 4 I/O failure.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use tripts_core::analysis::{analyze, AnalyzeOptions, Check};
use tripts_core::generators::{random_general_position, reflect_x, three_connected_family, tight_family};
use tripts_core::io::{export_graph, parse_points, serialize_points};
use tripts_core::matching::{down_graph_matching_bound, half_floor, BRUTE_FORCE_LIMIT};
use tripts_core::render::{render_svg, RenderOptions};
use tripts_core::report::RunReport;
use tripts_core::structure::embed;
use tripts_core::sweep::{conjecture_search, CorpusSpec, DEFAULT_RESOLUTION};
use tripts_core::{
    augment, brute_force_matching, build_flavor, check_nishizeki, max_matching, verify_augmented, Error, Flavor,
    PointSet,
};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BAD_INPUT: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "tripts", version, about = "Empty-triangle graphs on planar point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a point set: random, tight family or 3-connected family.
    Generate(GenerateArgs),
    /// Build graphs for a points file and run structural checks.
    Analyze(AnalyzeArgs),
    /// Maximum matching of one graph flavor.
    Match(MatchArgs),
    /// Extend the down graph to a 2-connected graph of minimum degree 3.
    Augment(AugmentArgs),
    /// Search random Θ6 graphs for instances without a ⌊n/2⌋ matching.
    ConjectureSearch(ConjectureArgs),
    /// Draw a graph, its maximum matching and optionally its empty triangles as SVG.
    Render(RenderArgs),
}

#[derive(Args, Debug)]
#[group(id = "kind", required = true, multiple = false)]
struct GeneratorKind {
    /// Uniform grid points in general position (needs -n).
    #[arg(long)]
    random: bool,
    /// 3m points with down-graph matching exactly ⌈(n−2)/3⌉ (needs -m).
    #[arg(long)]
    tight: bool,
    /// 3m+3 points with a 3-connected down graph and matching ⌈(n+5)/3⌉ (needs -m).
    #[arg(long)]
    three_connected: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Drop {
    /// Remove a_0.
    A0,
    /// Remove a_0 and b_0.
    A0B0,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    kind: GeneratorKind,
    #[arg(short = 'n', long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short = 'm', long)]
    m: Option<usize>,
    /// Grid resolution for --random.
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    resolution: u64,
    /// Drop points from a family instance.
    #[arg(long, value_enum)]
    drop: Option<Drop>,
    /// Mirror the set in the x axis.
    #[arg(long)]
    reflect: bool,
    /// Output file (stdout if omitted).
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleMode {
    On,
    Off,
    /// On when n is at most TRIPTS_ORACLE_LIMIT.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    Down,
    Up,
    Union,
    Intersection,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Down => Flavor::Down,
            FlavorArg::Up => Flavor::Up,
            FlavorArg::Union => Flavor::Union,
            FlavorArg::Intersection => Flavor::Intersection,
        }
    }
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Points file.
    input: PathBuf,
    /// `all` or a comma-separated list of check names.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Half graphs the per-graph checks run on (down and/or up).
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [FlavorArg::Down, FlavorArg::Up])]
    flavor: Vec<FlavorArg>,
    #[arg(long, value_enum, default_value_t = OracleMode::Auto)]
    oracle: OracleMode,
    #[arg(long, env = "TRIPTS_ORACLE_LIMIT", default_value_t = 200)]
    oracle_limit: usize,
    /// Generator name recorded in the report (defaults to the file stem).
    #[arg(long)]
    generator: Option<String>,
    /// Seed recorded in the report.
    #[arg(long)]
    seed: Option<u64>,
    /// Write the machine-readable key=value report here.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MatchArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = FlavorArg::Down)]
    flavor: FlavorArg,
    /// Cross-check against exhaustive search (small graphs only).
    #[arg(long)]
    brute: bool,
    /// Write the graph edge list here.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AugmentArgs {
    input: PathBuf,
    /// Write the augmented edge list here; ids from n on are added vertices.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ConjectureArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 40)]
    n_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    resolution: u64,
    /// Directory for counterexample points files.
    #[arg(long, default_value = "counterexamples")]
    dump_dir: PathBuf,
    /// Write the summary here as well as to stdout.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = FlavorArg::Down)]
    flavor: FlavorArg,
    /// Do not draw the maximum matching.
    #[arg(long)]
    no_matching: bool,
    /// Shade the empty triangle of every edge.
    #[arg(long)]
    show_triangles: bool,
    #[arg(long)]
    no_labels: bool,
    #[arg(long, default_value_t = 800.0)]
    size: f64,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn io(error: anyhow::Error) -> Self {
        Self { code: EXIT_IO, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::DuplicatePoint(..) | Error::NotGeneralPosition(..) | Error::EmptyPointSet => {
                EXIT_BAD_INPUT
            }
            Error::InvalidArgument(_) | Error::SamplingBudgetExhausted { .. } | Error::TooLargeForBruteForce(..) => {
                EXIT_USAGE
            }
            _ => EXIT_CHECK_FAILED,
        };
        Self { code, error: e.into() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        error: anyhow::anyhow!(msg.into()),
    }
}

type CmdResult = Result<bool, Failure>;

fn read_points(path: &Path) -> Result<Arc<PointSet>, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::io)?;
    let ps = parse_points(&text)?;
    ps.require_general_position()?;
    Ok(Arc::new(ps))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)
            .with_context(|| format!("writing {}", p.display()))
            .map_err(Failure::io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_generate(a: &GenerateArgs) -> CmdResult {
    let k = &a.kind;
    let need_m = || a.m.ok_or_else(|| usage("--tight and --three-connected need -m"));
    let mut ps = if k.random {
        if a.m.is_some() || a.drop.is_some() {
            return Err(usage("--random takes -n, not -m or --drop"));
        }
        let n = a.n.ok_or_else(|| usage("--random needs -n"))?;
        random_general_position(n, a.seed, a.resolution)?
    } else {
        if a.n.is_some() {
            return Err(usage("family generators take -m, not -n"));
        }
        let m = need_m()?;
        let ps = if k.tight {
            tight_family(m)?
        } else {
            three_connected_family(m)?
        };
        match a.drop {
            None => ps,
            Some(Drop::A0) => ps.without(&[0])?,
            Some(Drop::A0B0) => ps.without(&[0, 1])?,
        }
    };
    if a.reflect {
        ps = reflect_x(&ps);
    }
    write_out(a.output.as_deref(), &serialize_points(&ps)?)?;
    Ok(true)
}

fn cmd_analyze(a: &AnalyzeArgs) -> CmdResult {
    let start = Instant::now();
    let ps = read_points(&a.input)?;
    let mut halves: Vec<Flavor> = Vec::new();
    for f in &a.flavor {
        match f {
            FlavorArg::Down | FlavorArg::Up => halves.push((*f).into()),
            _ => return Err(usage("--flavor for analyze selects half graphs: down, up")),
        }
    }
    halves.dedup();
    let oracle = match a.oracle {
        OracleMode::On => true,
        OracleMode::Off => false,
        OracleMode::Auto => ps.len() <= a.oracle_limit,
    };
    let opts = AnalyzeOptions {
        checks: Check::parse_list(&a.checks)?,
        halves,
        oracle,
        ..AnalyzeOptions::default()
    };
    let checks = analyze(&ps, &opts)?;
    let generator = a.generator.clone().unwrap_or_else(|| {
        a.input
            .file_stem()
            .map_or_else(|| "file".to_string(), |s| s.to_string_lossy().into_owned())
    });
    let report = RunReport {
        generator,
        seed: a.seed,
        n: ps.len(),
        checks,
        wall_time: start.elapsed(),
    };
    println!("{report}");
    if let Some(p) = &a.output {
        write_out(Some(p), &report.to_kv())?;
    }
    Ok(report.passed())
}

fn cmd_match(a: &MatchArgs) -> CmdResult {
    let ps = read_points(&a.input)?;
    let g = build_flavor(&ps, a.flavor.into())?;
    let m = max_matching(g.graph());
    let n = ps.len();
    let mut out = String::new();
    writeln!(out, "flavor={}", g.flavor()).unwrap();
    writeln!(out, "n={n}").unwrap();
    writeln!(out, "edges={}", g.edge_count()).unwrap();
    writeln!(out, "matching={}", m.size()).unwrap();
    writeln!(out, "down_bound={}", down_graph_matching_bound(n)).unwrap();
    writeln!(out, "half_floor={}", half_floor(n)).unwrap();
    let mut ok = m.is_valid_in(g.graph());
    if g.flavor() == Flavor::Down {
        ok &= m.size() >= down_graph_matching_bound(n);
    }
    if a.brute {
        if n > BRUTE_FORCE_LIMIT {
            return Err(usage(format!("--brute supports at most {BRUTE_FORCE_LIMIT} points")));
        }
        let b = brute_force_matching(g.graph())?.size();
        writeln!(out, "brute_force={b}").unwrap();
        ok &= b == m.size();
    }
    let pairs: Vec<String> = m.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    writeln!(out, "matched={}", pairs.join(" ")).unwrap();
    print!("{out}");
    if let Some(p) = &a.output {
        write_out(Some(p), &export_graph(&g))?;
    }
    Ok(ok)
}

fn cmd_augment(a: &AugmentArgs) -> CmdResult {
    let ps = read_points(&a.input)?;
    let g = build_flavor(&ps, Flavor::Down)?;
    let e = embed(&g)?;
    let aug = augment(&g, &e)?;
    let report = verify_augmented(&aug, &e);
    println!("{report}");
    let base = max_matching(g.graph()).size();
    let m = max_matching(&aug.graph);
    let transferred = aug.transfer_matching(&m);
    let transfer_ok = transferred.is_valid_in(g.graph()) && base + aug.added_vertices.len() >= m.size();
    println!("matching.base={base}");
    println!("matching.augmented={}", m.size());
    println!("matching.transfer={}", if transfer_ok { "ok" } else { "FAIL" });
    let nishizeki_ok = match check_nishizeki(&aug.graph) {
        Ok(r) => {
            println!("nishizeki.case={:?}", r.case);
            println!("nishizeki.bound={}", r.bound);
            println!("nishizeki={}", if r.holds() { "ok" } else { "FAIL" });
            r.holds()
        }
        Err(err) => {
            println!("nishizeki=FAIL ({err})");
            false
        }
    };
    if let Some(p) = &a.output {
        let mut text = format!("# augmented down graph; vertices {} and up are added\n", aug.base_len());
        for (u, v) in aug.graph.edges() {
            writeln!(text, "{u} {v}").unwrap();
        }
        write_out(Some(p), &text)?;
    }
    Ok(report.passed() && transfer_ok && nishizeki_ok)
}

fn cmd_conjecture(a: &ConjectureArgs) -> CmdResult {
    if a.n_min == 0 || a.n_min > a.n_max {
        return Err(usage("need 1 <= --n-min <= --n-max"));
    }
    let spec = CorpusSpec {
        count: a.trials,
        n: a.n_min..=a.n_max,
        seed: a.seed,
        resolution: a.resolution,
    };
    let report = conjecture_search(&spec)?;
    let mut text = format!("seed={}\nn_range={}..={}\n{report}\n", a.seed, a.n_min, a.n_max);
    if !report.counterexamples.is_empty() {
        fs::create_dir_all(&a.dump_dir)
            .with_context(|| format!("creating {}", a.dump_dir.display()))
            .map_err(Failure::io)?;
        for c in &report.counterexamples {
            let path = a.dump_dir.join(c.file_name());
            write_out(Some(&path), &c.points_file)?;
            writeln!(
                text,
                "COUNTEREXAMPLE n={} matching={} file={}",
                c.n,
                c.matching,
                path.display()
            )
            .unwrap();
        }
    }
    print!("{text}");
    if let Some(p) = &a.output {
        write_out(Some(p), &text)?;
    }
    // a counterexample is a finding, not a failure
    Ok(true)
}

fn cmd_render(a: &RenderArgs) -> CmdResult {
    let ps = read_points(&a.input)?;
    let g = build_flavor(&ps, a.flavor.into())?;
    let m = (!a.no_matching).then(|| max_matching(g.graph()));
    let opts = RenderOptions {
        size: a.size,
        labels: !a.no_labels,
        show_triangles: a.show_triangles,
        ..RenderOptions::default()
    };
    write_out(a.output.as_deref(), &render_svg(&g, m.as_ref(), &opts))?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Match(a) => cmd_match(a),
        Command::Augment(a) => cmd_augment(a),
        Command::ConjectureSearch(a) => cmd_conjecture(a),
        Command::Render(a) => cmd_render(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
