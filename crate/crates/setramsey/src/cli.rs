//! The `setramsey` command line.

use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use setramsey_core::bounds::{
    best_upper, first_moment_lower, hypergraph_upper, lefmann_product, lower_bound_plan,
    plan_lower, simple_upper, trivial_value, turan_upper, upper_s_large, BoundReport, Direction,
    Rounding, DEFAULT_DIGIT_BUDGET, TURAN_SCAN_LIMIT,
};
use setramsey_core::codes::{
    code_partition_family, code_to_coloring, coloring_to_code, greedy_gv_code,
    partition_color_classes, PartitionOutcome, DEFAULT_ENUMERATION_LIMIT,
};
use setramsey_core::constructions::{
    affine_partition_family, default_abc, default_d1_d2, partitions_to_coloring, product_coloring,
    step_up_3_to_4, step_up_graph_to_3, step_up_k, AffineParams, StepUpLimits,
};
use setramsey_core::solver::{extract_clique_process, solve_exact, SolveConfig};
use setramsey_core::{Budget, ColorSet, SetColoring};

use crate::error::AppError;
use crate::format::{
    read_code, read_coloring, read_partitions, write_code, write_coloring, write_partitions,
};
use crate::report;
use crate::verify::find_mono_clique_parallel;

#[derive(Debug, Parser)]
#[command(
    name = "setramsey",
    version,
    about = "Set-coloring Ramsey numbers: constructions, verification, exact values and bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a coloring (or code) and write it in the canonical format.
    Construct(ConstructArgs),
    /// Search a coloring file for a monochromatic K_n; exits 1 if one exists.
    Verify(VerifyArgs),
    /// Compute R(n; r, s) for graphs.
    Solve(SolveArgs),
    /// Evaluate bound formulas.
    Bound(BoundArgs),
    /// Best known lower and upper bounds over a parameter grid.
    Table(TableArgs),
    /// Translate between codes and colorings.
    Convert(ConvertArgs),
}

#[derive(Debug, Args)]
#[command(group(
    ArgGroup::new("kind")
        .required(true)
        .args(["affine", "pentagon", "product", "step_up", "step_up_k", "step_up_34", "gv_code", "random"])
))]
pub struct ConstructArgs {
    /// Affine-geometry coloring, e.g. `--affine q=2 d=2 k=1`.
    #[arg(long, num_args = 3, value_name = "KEY=VALUE")]
    pub affine: Option<Vec<String>>,
    /// The (2,1)-coloring of K_5 by pentagon and pentagram.
    #[arg(long)]
    pub pentagon: bool,
    /// Product of `--base` with the code in `--code`.
    #[arg(long, requires_all = ["base", "code"])]
    pub product: bool,
    /// Graph to 3-uniform step-up of `--base`.
    #[arg(long = "step-up", requires = "base")]
    pub step_up: bool,
    /// k to k+1 step-up of a `--base` with k >= 3 (uses `--d1`, `--d2`).
    #[arg(long = "step-up-k", requires = "base")]
    pub step_up_k: bool,
    /// 3 to 4 step-up of `--base` (uses `--set-a`, `--set-b`, `--set-c`).
    #[arg(long = "step-up-34", requires = "base")]
    pub step_up_34: bool,
    /// Greedy Gilbert–Varshamov code, e.g. `--gv-code q=2 m=3 d=2`.
    #[arg(long = "gv-code", num_args = 3, value_name = "KEY=VALUE")]
    pub gv_code: Option<Vec<String>>,
    /// Uniformly random coloring, e.g. `--random k=2 N=200 r=10 s=9`.
    #[arg(long, num_args = 4, value_name = "KEY=VALUE")]
    pub random: Option<Vec<String>>,
    #[arg(long)]
    pub base: Option<PathBuf>,
    #[arg(long)]
    pub code: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    pub d1: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    pub d2: Option<Vec<usize>>,
    #[arg(long = "set-a", value_delimiter = ',')]
    pub set_a: Option<Vec<usize>>,
    #[arg(long = "set-b", value_delimiter = ',')]
    pub set_b: Option<Vec<usize>>,
    #[arg(long = "set-c", value_delimiter = ',')]
    pub set_c: Option<Vec<usize>>,
    /// Cap on output edges for step-ups.
    #[arg(long, default_value_t = StepUpLimits::default().max_output_edges)]
    pub max_edges: u128,
    /// Keep the s smallest colors of every edge of a slack result.
    #[arg(long)]
    pub trim: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when absent.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    /// Where the affine partition family goes (default: `<out>.partitions.json`).
    #[arg(long)]
    pub partitions_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Also run the on/off color process and print its trace.
    #[arg(long)]
    pub process: bool,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub r: u64,
    #[arg(long)]
    pub s: u64,
    #[arg(long = "max-N", default_value_t = 16)]
    pub max_vertices: u64,
    #[arg(long, default_value_t = 5_000_000)]
    pub budget: u64,
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    All,
    SimpleUpper,
    UpperSLarge,
    FirstMoment,
    Plan,
    PlanLower,
    Turan,
    Trivial,
    Lefmann,
    Hypergraph,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    pub kind: BoundKind,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub s: Option<u64>,
    /// Uniformity for `hypergraph`.
    #[arg(long)]
    pub k: Option<u64>,
    /// Certified upper bound on R_{k-1}(n-1; r, s) for `hypergraph`.
    #[arg(long)]
    pub base_value: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_DIGIT_BUDGET)]
    pub digit_budget: u64,
    #[arg(long, default_value_t = TURAN_SCAN_LIMIT)]
    pub scan_limit: u64,
    /// Palette sizes and certified lower bounds for `lefmann` (s = 1).
    #[arg(long)]
    pub r1: Option<u64>,
    #[arg(long)]
    pub r2: Option<u64>,
    #[arg(long)]
    pub v1: Option<u64>,
    #[arg(long)]
    pub v2: Option<u64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 3)]
    pub n_min: u64,
    #[arg(long, default_value_t = 5)]
    pub n_max: u64,
    #[arg(long, default_value_t = 6)]
    pub r_max: u64,
    /// Solver node budget per cell.
    #[arg(long, default_value_t = 20_000)]
    pub budget: u64,
    #[arg(long = "max-N", default_value_t = 12)]
    pub max_vertices: u64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["code_to_coloring", "coloring_to_code"])))]
pub struct ConvertArgs {
    #[arg(long)]
    pub code_to_coloring: Option<PathBuf>,
    #[arg(long)]
    pub coloring_to_code: Option<PathBuf>,
    /// Clique size n; color classes are split into n-1 parts.
    #[arg(long)]
    pub n: Option<usize>,
    /// Partition family JSON to use instead of searching for one.
    #[arg(long)]
    pub partitions: Option<PathBuf>,
    #[arg(long, default_value_t = 1_000_000)]
    pub budget: u64,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

/// Where command output goes. Standard output carries JSON lines or file contents,
/// standard error carries human-readable summaries.
pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

impl Io<'_> {
    fn json(&mut self, value: &Value) -> Result<(), AppError> {
        writeln!(self.out, "{value}").map_err(stdout_error)
    }

    fn raw(&mut self, text: &str) -> Result<(), AppError> {
        self.out.write_all(text.as_bytes()).map_err(stdout_error)
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.err, "{text}");
    }
}

fn stdout_error(e: std::io::Error) -> AppError {
    AppError::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

fn read_text(path: &Path) -> Result<String, AppError> {
    fs::read_to_string(path).map_err(|e| AppError::Io {
        path: path.into(),
        source: e,
    })
}

fn write_text(path: &Path, text: &str) -> Result<(), AppError> {
    fs::write(path, text).map_err(|e| AppError::Io {
        path: path.into(),
        source: e,
    })
}

fn load_coloring(path: &Path) -> Result<SetColoring, AppError> {
    let file = fs::File::open(path).map_err(|e| AppError::Io {
        path: path.into(),
        source: e,
    })?;
    read_coloring(BufReader::new(file))
}

/// Values of `key=value` tokens, in the order of `keys`.
fn key_values(tokens: &[String], keys: &[&str]) -> Result<Vec<u64>, AppError> {
    let mut values = vec![None; keys.len()];
    for token in tokens {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| AppError::Usage(format!("expected KEY=VALUE, got {token:?}")))?;
        let slot = keys.iter().position(|k| *k == key).ok_or_else(|| {
            AppError::Usage(format!("unknown key {key:?}; expected {}", keys.join(", ")))
        })?;
        let parsed = value.parse().map_err(|_| {
            AppError::Usage(format!(
                "{key} must be a non-negative integer, got {value:?}"
            ))
        })?;
        values[slot] = Some(parsed);
    }
    keys.iter()
        .zip(values)
        .map(|(k, v)| v.ok_or_else(|| AppError::Usage(format!("missing {k}="))))
        .collect()
}

fn color_set(colors: &Option<Vec<usize>>, default: ColorSet) -> ColorSet {
    colors
        .as_ref()
        .map_or(default, |c| ColorSet::from_colors(c.iter().copied()))
}

pub fn run(cli: Cli, io: &mut Io) -> Result<i32, AppError> {
    match cli.command {
        Command::Construct(args) => construct(args, io),
        Command::Verify(args) => verify(args, io),
        Command::Solve(args) => solve(args, io),
        Command::Bound(args) => bound(args, io),
        Command::Table(args) => table(args, io),
        Command::Convert(args) => convert(args, io),
    }
}

fn emit_coloring(
    c: &SetColoring,
    kind: &str,
    out: &Option<PathBuf>,
    io: &mut Io,
) -> Result<(), AppError> {
    let text = write_coloring(c);
    match out {
        Some(path) => {
            write_text(path, &text)?;
            io.json(&json!({
                "constructed": kind, "k": c.uniformity(), "N": c.num_vertices(),
                "r": c.num_colors(), "s": c.colors_per_edge(), "slack": c.is_slack(),
                "out": path.display().to_string(),
            }))?;
        }
        None => io.raw(&text)?,
    }
    io.note(&format!(
        "{kind}: {}-uniform ({}, {}) coloring on {} vertices{}",
        c.uniformity(),
        c.num_colors(),
        c.colors_per_edge(),
        c.num_vertices(),
        if c.is_slack() { " (slack)" } else { "" }
    ));
    Ok(())
}

fn construct(args: ConstructArgs, io: &mut Io) -> Result<i32, AppError> {
    let limits = StepUpLimits {
        max_output_edges: args.max_edges,
    };
    let base = || -> Result<SetColoring, AppError> {
        load_coloring(args.base.as_deref().expect("clap requires --base"))
    };
    let (kind, coloring) = if let Some(kv) = &args.affine {
        let v = key_values(kv, &["q", "d", "k"])?;
        let to_u32 =
            |x: u64| u32::try_from(x).map_err(|_| AppError::Usage(format!("{x} is too large")));
        let p = AffineParams::new(to_u32(v[0])?, to_u32(v[1])?, to_u32(v[2])?)?;
        let pf = affine_partition_family(&p)?;
        let partitions_path = args.partitions_out.clone().or_else(|| {
            args.out
                .as_ref()
                .map(|o| PathBuf::from(format!("{}.partitions.json", o.display())))
        });
        if let Some(path) = partitions_path {
            write_text(&path, &write_partitions(&pf))?;
        }
        ("affine", partitions_to_coloring(&pf)?)
    } else if args.pentagon {
        ("pentagon", SetColoring::pentagon())
    } else if args.product {
        let code = read_code(BufReader::new(
            read_text(args.code.as_deref().expect("clap requires --code"))?.as_bytes(),
        ))?;
        ("product", product_coloring(&base()?, &code)?)
    } else if args.step_up {
        ("step-up", step_up_graph_to_3(&base()?, limits)?)
    } else if args.step_up_k {
        let b = base()?;
        let (d1, d2) = default_d1_d2(b.num_colors(), b.colors_per_edge())
            .unwrap_or((ColorSet::EMPTY, ColorSet::EMPTY));
        let (d1, d2) = (color_set(&args.d1, d1), color_set(&args.d2, d2));
        ("step-up-k", step_up_k(&b, d1, d2, limits)?)
    } else if args.step_up_34 {
        let b = base()?;
        let (a, bb, c) = default_abc(b.num_colors(), b.colors_per_edge()).unwrap_or((
            ColorSet::EMPTY,
            ColorSet::EMPTY,
            ColorSet::EMPTY,
        ));
        let sets = (
            color_set(&args.set_a, a),
            color_set(&args.set_b, bb),
            color_set(&args.set_c, c),
        );
        (
            "step-up-34",
            step_up_3_to_4(&b, sets.0, sets.1, sets.2, limits)?,
        )
    } else if let Some(kv) = &args.gv_code {
        let v = key_values(kv, &["q", "m", "d"])?;
        let code = greedy_gv_code(
            v[0] as u32,
            v[1] as usize,
            v[2] as usize,
            DEFAULT_ENUMERATION_LIMIT,
        )?;
        let text = write_code(&code);
        match &args.out {
            Some(path) => {
                write_text(path, &text)?;
                io.json(&json!({ "constructed": "gv-code", "q": v[0], "m": v[1], "d": v[2], "size": code.len(), "out": path.display().to_string() }))?;
            }
            None => io.raw(&text)?,
        }
        io.note(&format!(
            "gv-code: {} words of length {} over {} symbols, distance {}",
            code.len(),
            v[1],
            v[0],
            v[2]
        ));
        return Ok(0);
    } else if let Some(kv) = &args.random {
        let v = key_values(kv, &["k", "N", "r", "s"])?;
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        (
            "random",
            SetColoring::random(
                v[0] as usize,
                v[1] as usize,
                v[2] as usize,
                v[3] as usize,
                &mut rng,
            )?,
        )
    } else {
        unreachable!("clap enforces one construction")
    };
    let coloring = if args.trim && coloring.is_slack() {
        coloring.trim_to_exact()?
    } else {
        coloring
    };
    emit_coloring(&coloring, kind, &args.out, io)?;
    Ok(0)
}

fn verify(args: VerifyArgs, io: &mut Io) -> Result<i32, AppError> {
    let c = load_coloring(&args.file)?;
    let budget = args.budget.map_or(Budget::UNLIMITED, Budget::nodes);
    let found = find_mono_clique_parallel(&c, args.n, budget, args.threads.max(1))?;
    let mut code = 0;
    match &found {
        Some(w) => {
            io.json(&json!({ "n": args.n, "monochromatic": true, "witness": report::witness(w) }))?;
            io.note(&format!(
                "monochromatic K_{} in color {} on {:?}",
                args.n, w.color, w.vertices
            ));
            code = 1;
        }
        None => {
            io.json(&json!({ "n": args.n, "monochromatic": false }))?;
            io.note(&format!("no monochromatic K_{}", args.n));
        }
    }
    if args.process {
        let outcome = extract_clique_process(&c, args.n, budget)?;
        if let Some(w) = &outcome.witness {
            if !w.holds(&c) {
                return Err(AppError::Usage(
                    "process witness failed re-verification".into(),
                ));
            }
        }
        io.json(&report::process(&outcome))?;
    }
    Ok(code)
}

fn solve(args: SolveArgs, io: &mut Io) -> Result<i32, AppError> {
    let start = Instant::now();
    let config = SolveConfig::new(args.max_vertices, Budget::nodes(args.budget));
    let res = solve_exact(args.n, args.r, args.s, config)?;
    if let (Some(path), Some(w)) = (&args.witness_out, &res.witness) {
        write_text(path, &write_coloring(w))?;
    }
    io.json(&report::solve(&res))?;
    let range = match (res.value(), res.upper) {
        (Some(v), _) => format!("= {v}"),
        (None, Some(u)) => format!("in [{}, {u}]", res.lower),
        (None, None) => format!(">= {}", res.lower),
    };
    io.note(&format!(
        "R({}; {}, {}) {range} ({} nodes, {:.3} s)",
        args.n,
        args.r,
        args.s,
        res.stats.nodes,
        start.elapsed().as_secs_f64()
    ));
    Ok(0)
}

fn need(value: Option<u64>, name: &str) -> Result<u64, AppError> {
    value.ok_or_else(|| AppError::Usage(format!("--{name} is required for this bound")))
}

fn bound(args: BoundArgs, io: &mut Io) -> Result<i32, AppError> {
    let n = args.n;
    let rs = || -> Result<(u64, u64), AppError> { Ok((need(args.r, "r")?, need(args.s, "s")?)) };
    match args.kind {
        BoundKind::SimpleUpper => {
            let (r, s) = rs()?;
            io.json(&report::bound(&simple_upper(n, r, s)?))?;
        }
        BoundKind::UpperSLarge => {
            let (r, s) = rs()?;
            io.json(&report::bound(&upper_s_large(n, r, s)?))?;
        }
        BoundKind::FirstMoment => {
            let (r, s) = rs()?;
            io.json(&report::bound(&first_moment_lower(n, r, s)?))?;
        }
        BoundKind::Plan => {
            let (r, s) = rs()?;
            io.json(&report::plan(&lower_bound_plan(n, r, s)?))?;
        }
        BoundKind::PlanLower => {
            let (r, s) = rs()?;
            io.json(&report::bound(&plan_lower(n, r, s)?))?;
        }
        BoundKind::Turan => {
            let (r, s) = rs()?;
            match turan_upper(n, r, s, args.scan_limit)? {
                Some(rep) => io.json(&report::bound(&rep))?,
                None => io.json(&json!({ "name": "turan_upper", "direction": "upper", "value": null, "scan_limit": args.scan_limit }))?,
            }
        }
        BoundKind::Trivial => {
            let (r, s) = rs()?;
            io.json(&json!({ "name": "trivial_value", "params": { "n": n, "r": r, "s": s }, "value": trivial_value(n, r, s) }))?;
        }
        BoundKind::Lefmann => {
            let lower = |r: u64, v: u64| BoundReport {
                name: "given".into(),
                direction: Direction::Lower,
                params: [
                    ("n".to_string(), n),
                    ("r".to_string(), r),
                    ("s".to_string(), 1),
                ]
                .into(),
                value: BigUint::from(v),
                rounding: Rounding::Exact,
                provenance: "caller".into(),
            };
            let a = lower(need(args.r1, "r1")?, need(args.v1, "v1")?);
            let b = lower(need(args.r2, "r2")?, need(args.v2, "v2")?);
            io.json(&report::bound(&lefmann_product(&a, &b)?))?;
        }
        BoundKind::Hypergraph => {
            let (r, s) = rs()?;
            let h = hypergraph_upper(
                n,
                need(args.k, "k")?,
                r,
                s,
                need(args.base_value, "base-value")?,
                args.digit_budget,
            )?;
            io.json(&report::hypergraph(&h))?;
        }
        BoundKind::All => {
            let (r, s) = rs()?;
            if let Some(v) = trivial_value(n, r, s) {
                io.json(&json!({ "name": "trivial_value", "params": { "n": n, "r": r, "s": s }, "value": v }))?;
            }
            let reports = [
                simple_upper(n, r, s).ok(),
                upper_s_large(n, r, s).ok(),
                turan_upper(n, r, s, args.scan_limit).ok().flatten(),
                first_moment_lower(n, r, s).ok(),
                plan_lower(n, r, s).ok(),
            ];
            for rep in reports.iter().flatten() {
                io.json(&report::bound(rep))?;
            }
            if let Ok(p) = lower_bound_plan(n, r, s) {
                io.json(&report::plan(&p))?;
            }
        }
    }
    Ok(0)
}

fn table(args: TableArgs, io: &mut Io) -> Result<i32, AppError> {
    io.json(&json!({
        "table": "set-coloring Ramsey bounds",
        "versions": { "setramsey": env!("CARGO_PKG_VERSION"), "setramsey-core": setramsey_core::VERSION },
        "grid": {
            "n": [args.n_min, args.n_max], "r_max": args.r_max,
            "budget": args.budget, "max_N": args.max_vertices,
        },
    }))?;
    for n in args.n_min.max(2)..=args.n_max {
        for r in 1..=args.r_max {
            for s in 1..=r {
                io.json(&table_row(n, r, s, &args)?)?;
            }
        }
    }
    Ok(0)
}

fn table_row(n: u64, r: u64, s: u64, args: &TableArgs) -> Result<Value, AppError> {
    let mut lower = (BigUint::from(n), "trivial");
    let mut upper: Option<(BigUint, String)> = None;
    let mut consider_upper = |value: BigUint, source: String| {
        if upper.as_ref().map_or(true, |(u, _)| value < *u) {
            upper = Some((value, source));
        }
    };
    if let Some(rep) = best_upper(n, r, s) {
        consider_upper(rep.value, rep.name);
    }
    let config = SolveConfig::new(args.max_vertices, Budget::nodes(args.budget));
    match solve_exact(n, r, s, config) {
        Ok(res) => {
            if BigUint::from(res.lower) > lower.0 {
                lower = (BigUint::from(res.lower), "solver");
            }
            if let Some(u) = res.upper {
                consider_upper(BigUint::from(u), "solver".into());
            }
        }
        Err(setramsey_core::Error::ResourceLimit { .. }) => {}
        Err(e) => return Err(e.into()),
    }
    if let Ok(rep) = plan_lower(n, r, s) {
        if rep.value > lower.0 {
            lower = (rep.value, "plan_lower");
        }
    }
    let exact = upper.as_ref().is_some_and(|(u, _)| *u == lower.0);
    Ok(json!({
        "n": n, "r": r, "s": s,
        "lower": lower.0.to_string(), "lower_source": lower.1,
        "upper": upper.as_ref().map(|(u, _)| u.to_string()),
        "upper_source": upper.as_ref().map(|(_, src)| src.clone()),
        "exact": exact,
    }))
}

fn convert(args: ConvertArgs, io: &mut Io) -> Result<i32, AppError> {
    if let Some(path) = &args.code_to_coloring {
        let code = read_code(BufReader::new(read_text(path)?.as_bytes()))?;
        let c = code_to_coloring(&code)?;
        if let Some(out) = &args.out {
            let pf_path = PathBuf::from(format!("{}.partitions.json", out.display()));
            write_text(&pf_path, &write_partitions(&code_partition_family(&code)))?;
        }
        emit_coloring(&c, "code-to-coloring", &args.out, io)?;
        return Ok(0);
    }
    let path = args
        .coloring_to_code
        .as_ref()
        .expect("clap requires one direction");
    let c = load_coloring(path)?;
    let pf = match (&args.partitions, args.n) {
        (Some(pf_path), _) => read_partitions(&read_text(pf_path)?)?,
        (None, Some(n)) if n >= 3 => {
            match partition_color_classes(&c, n - 1, Budget::nodes(args.budget))? {
                PartitionOutcome::Partitioned(pf) => pf,
                PartitionOutcome::NotPartite { color } => {
                    return Err(AppError::Core(setramsey_core::Error::Precondition(
                        format!("color class {color} is not {}-partite", n - 1),
                    )))
                }
            }
        }
        _ => {
            return Err(AppError::Usage(
                "give --partitions FILE or --n (at least 3)".into(),
            ))
        }
    };
    let code = coloring_to_code(&c, &pf)?;
    let text = write_code(&code);
    match &args.out {
        Some(out) => {
            write_text(out, &text)?;
            io.json(&json!({
                "converted": "coloring-to-code", "q": code.alphabet_size(), "m": code.length(),
                "d": code.claimed_distance(), "size": code.len(), "out": out.display().to_string(),
            }))?;
        }
        None => io.raw(&text)?,
    }
    io.note(&format!(
        "code of {} words, length {}, distance >= {} over {} symbols",
        code.len(),
        code.length(),
        code.claimed_distance(),
        code.alphabet_size()
    ));
    Ok(0)
}
