//! Command-line front end: `friezeforge rho | pi | verify | frieze-check`.
//!
//! Exit status is 0 on success, 1 when a verification fails, 2 on
//! configuration or usage errors. `FRIEZEFORGE_THREADS` sets the worker
//! count for enumeration sweeps.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{parse_arc_flag, ConfigFile};
use crate::engine::CCContext;
use crate::error::{Error, Result};
use crate::frieze::{DiamondRule, FriezeGrid};
use crate::harness::{self, Suite};
use crate::laurent::LaurentPoly;
use crate::polygon::{arc_at, Arc};

#[derive(Parser)]
#[command(
    name = "friezeforge",
    version,
    about = "Friezes and the modified Caldero-Chapoton map on polygon models of type-A cluster categories"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the Laurent-valued map ρ
    Rho(RhoArgs),
    /// Evaluate the integer map π (submodule counts)
    Pi(PiArgs),
    /// Run invariant suites on a configuration or an enumeration sweep
    Verify(VerifyArgs),
    /// Check a frieze grid file against the determinant rule
    FriezeCheck(FriezeCheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Mult,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RhoFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PiFormat {
    Text,
    Json,
    Grid,
}

#[derive(Args)]
struct RhoArgs {
    /// JSON configuration file
    #[arg(long)]
    config: PathBuf,
    /// A single arc, written "i,j"
    #[arg(long, conflicts_with = "all")]
    arc: Option<String>,
    /// Every diagonal, rendered on the AR-quiver strip
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t = Method::Direct)]
    method: Method,
    #[arg(long, value_enum, default_value_t = RhoFormat::Text)]
    format: RhoFormat,
}

#[derive(Args)]
struct PiArgs {
    /// JSON configuration file
    #[arg(long)]
    config: PathBuf,
    /// A single arc, written "i,j"
    #[arg(long, conflicts_with = "all")]
    arc: Option<String>,
    /// Every diagonal
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t = PiFormat::Text)]
    format: PiFormat,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true)))]
struct VerifyArgs {
    /// JSON configuration file to verify
    #[arg(long, group = "source")]
    config: Option<PathBuf>,
    /// Enumerate all configurations up to this rank instead
    #[arg(long, group = "source", value_name = "N_MAX")]
    enumerate: Option<usize>,
    /// Comma-separated subset of category,ktheory,friezes,conditionF,multiplication
    #[arg(long)]
    suite: Option<String>,
    /// Samples per rank beyond the exhaustive range (default 100)
    #[arg(long)]
    sample: Option<usize>,
    /// Seed for sampled ranks
    #[arg(long, default_value_t = harness::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct FriezeCheckArgs {
    /// Grid file: offset rows, top first, `.` marking half-cell shifts
    #[arg(long)]
    file: PathBuf,
    /// Accept determinants in {0,1} instead of exactly 1
    #[arg(long)]
    generalized: bool,
}

pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Cmd::Rho(args) => cmd_rho(args),
        Cmd::Pi(args) => cmd_pi(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::FriezeCheck(args) => cmd_frieze_check(args),
    }
}

/// Diagonals of the strip in reading order: top row first, left to right,
/// including the duplicated boundary column.
fn strip_rows(ctx: &CCContext) -> Vec<Vec<(usize, usize, Arc)>> {
    let size = usize::from(ctx.polygon_size());
    let n = ctx.n();
    let mut rows = Vec::new();
    for y in (0..n).rev() {
        let mut row = Vec::new();
        let mut x = y % 2;
        while x <= size {
            let (xx, yy) = if x == size { (0, n - 1 - y) } else { (x, y) };
            row.push((x, y, arc_at(ctx.polygon_size(), xx, yy)));
            x += 2;
        }
        rows.push(row);
    }
    rows
}

fn render_strip_table(rows: &[Vec<(usize, usize, String)>]) -> String {
    let cell = rows
        .iter()
        .flatten()
        .map(|(_, _, s)| s.len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let offset = row.first().map_or(0, |(x, _, _)| x % 2);
        if offset == 1 {
            out.push_str(&" ".repeat(cell / 2 + 1));
        }
        let line: Vec<String> = row.iter().map(|(_, _, s)| format!("{s:>cell$}")).collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

fn cmd_rho(args: RhoArgs) -> Result<ExitCode> {
    let ctx = ConfigFile::from_path(&args.config)?.context()?;
    if args.all {
        return cmd_rho_all(&ctx, args.method, args.format);
    }
    let Some(spec) = args.arc.as_deref() else {
        return Err(Error::InvalidConfig("pass --arc i,j or --all".into()));
    };
    let arc = parse_arc_flag(&ctx, spec)?;
    if arc.is_edge() {
        return Err(Error::InvalidConfig(format!("{arc} is an edge of the polygon, not a diagonal")));
    }
    let direct = (args.method != Method::Mult).then(|| ctx.rho_direct(&arc)).transpose()?;
    let mult = (args.method != Method::Direct)
        .then(|| ctx.rho_multiplicative(&arc))
        .transpose()?;
    match args.format {
        RhoFormat::Text => match (direct, mult) {
            (Some(d), None) => println!("{d}"),
            (None, Some(m)) => println!("{m}"),
            (Some(d), Some(m)) => {
                println!("direct: {d}");
                println!("mult:   {m}");
                println!("agree:  {}", d == m);
            }
            (None, None) => unreachable!(),
        },
        RhoFormat::Json => {
            let mut obj = serde_json::Map::new();
            let (i, j) = arc.endpoints();
            obj.insert("arc".into(), serde_json::json!([i, j]));
            match (direct, mult) {
                (Some(d), None) => {
                    obj.insert("display".into(), serde_json::json!(d.to_string()));
                    obj.insert("method".into(), serde_json::json!("direct"));
                    obj.insert("value".into(), d.to_json());
                }
                (None, Some(m)) => {
                    obj.insert("display".into(), serde_json::json!(m.to_string()));
                    obj.insert("method".into(), serde_json::json!("mult"));
                    obj.insert("value".into(), m.to_json());
                }
                (Some(d), Some(m)) => {
                    obj.insert("agree".into(), serde_json::json!(d == m));
                    obj.insert("direct".into(), d.to_json());
                    obj.insert("method".into(), serde_json::json!("both"));
                    obj.insert("mult".into(), m.to_json());
                }
                (None, None) => unreachable!(),
            }
            println!("{}", serde_json::Value::Object(obj));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_rho_all(ctx: &CCContext, method: Method, format: RhoFormat) -> Result<ExitCode> {
    let rows = strip_rows(ctx);
    let eval = |arc: &Arc| -> Result<LaurentPoly> {
        match method {
            Method::Mult => ctx.rho_multiplicative(arc),
            _ => ctx.rho_direct(arc),
        }
    };
    match format {
        RhoFormat::Text => {
            let mut rendered = Vec::new();
            for row in &rows {
                let mut line = Vec::new();
                for (x, y, arc) in row {
                    line.push((*x, *y, eval(arc)?.to_string()));
                }
                rendered.push(line);
            }
            print!("{}", render_strip_table(&rendered));
            if method == Method::Both {
                let mut disagreements = Vec::new();
                for c in ctx.diagonals() {
                    if ctx.rho_direct(&c)? != ctx.rho_multiplicative(&c)? {
                        disagreements.push(c);
                    }
                }
                if disagreements.is_empty() {
                    println!("evaluators agree on all {} diagonals", ctx.diagonals().len());
                } else {
                    for c in &disagreements {
                        println!("evaluators disagree at {c}");
                    }
                    return Ok(ExitCode::from(1));
                }
            }
        }
        RhoFormat::Json => {
            let mut entries = Vec::new();
            for row in rows.iter().rev() {
                for (x, y, arc) in row {
                    if *x == usize::from(ctx.polygon_size()) {
                        continue; // glide duplicate
                    }
                    let (i, j) = arc.endpoints();
                    let mut obj = serde_json::Map::new();
                    obj.insert("arc".into(), serde_json::json!([i, j]));
                    obj.insert("pos".into(), serde_json::json!([x, y]));
                    match method {
                        Method::Both => {
                            let d = ctx.rho_direct(arc)?;
                            let m = ctx.rho_multiplicative(arc)?;
                            obj.insert("agree".into(), serde_json::json!(d == m));
                            obj.insert("direct".into(), d.to_json());
                            obj.insert("mult".into(), m.to_json());
                        }
                        _ => {
                            let v = eval(arc)?;
                            obj.insert("display".into(), serde_json::json!(v.to_string()));
                            obj.insert("value".into(), v.to_json());
                        }
                    }
                    entries.push(serde_json::Value::Object(obj));
                }
            }
            let method_name = match method {
                Method::Direct => "direct",
                Method::Mult => "mult",
                Method::Both => "both",
            };
            let out = serde_json::json!({
                "entries": entries,
                "method": method_name,
                "n": ctx.n(),
            });
            println!("{out}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_pi(args: PiArgs) -> Result<ExitCode> {
    let ctx = ConfigFile::from_path(&args.config)?.context()?;
    if let PiFormat::Grid = args.format {
        print!("{}", ctx.pi_grid()?.render());
        return Ok(ExitCode::SUCCESS);
    }
    if args.all {
        let rows = strip_rows(&ctx);
        match args.format {
            PiFormat::Text => {
                let mut rendered = Vec::new();
                for row in &rows {
                    let mut line = Vec::new();
                    for (x, y, arc) in row {
                        line.push((*x, *y, ctx.pi(arc)?.to_string()));
                    }
                    rendered.push(line);
                }
                print!("{}", render_strip_table(&rendered));
            }
            PiFormat::Json => {
                let mut entries = Vec::new();
                for row in rows.iter().rev() {
                    for (x, y, arc) in row {
                        if *x == usize::from(ctx.polygon_size()) {
                            continue;
                        }
                        let (i, j) = arc.endpoints();
                        entries.push(serde_json::json!({
                            "arc": [i, j],
                            "pos": [x, y],
                            "value": ctx.pi(arc)?,
                        }));
                    }
                }
                println!("{}", serde_json::json!({ "entries": entries, "n": ctx.n() }));
            }
            PiFormat::Grid => unreachable!(),
        }
        return Ok(ExitCode::SUCCESS);
    }
    let Some(spec) = args.arc.as_deref() else {
        return Err(Error::InvalidConfig("pass --arc i,j or --all".into()));
    };
    let arc = parse_arc_flag(&ctx, spec)?;
    let value = ctx.pi(&arc)?;
    match args.format {
        PiFormat::Text => println!("{value}"),
        PiFormat::Json => {
            let (i, j) = arc.endpoints();
            println!("{}", serde_json::json!({ "arc": [i, j], "value": value }));
        }
        PiFormat::Grid => unreachable!(),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_suites(spec: Option<&str>) -> Result<Vec<Suite>> {
    let Some(spec) = spec else {
        return Ok(Suite::ALL.to_vec());
    };
    spec.split(',')
        .map(|name| {
            Suite::parse(name).ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "unknown suite {name:?}; choose from category,ktheory,friezes,conditionF,multiplication"
                ))
            })
        })
        .collect()
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let suites = parse_suites(args.suite.as_deref())?;
    let threads = harness::threads_from_env();
    let report = if let Some(path) = &args.config {
        let ctx = ConfigFile::from_path(path)?.context()?;
        harness::run_suites_on_context(&ctx, &suites)
    } else {
        let n_max = args.enumerate.expect("clap enforces the source group");
        if n_max < 2 {
            return Err(Error::InvalidConfig("--enumerate needs a rank of at least 2".into()));
        }
        let enumeration = harness::enumerate_configs(n_max, args.sample, args.seed);
        harness::run_suites(&enumeration, &suites, threads)
    };
    print!("{}", report.render());
    Ok(if report.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_frieze_check(args: FriezeCheckArgs) -> Result<ExitCode> {
    let text = std::fs::read_to_string(&args.file)?;
    let grid = FriezeGrid::parse(&text)?;
    let rule = if args.generalized { DiamondRule::Generalized } else { DiamondRule::Strict };
    let report = grid.check(rule);
    if report.pass() {
        println!(
            "frieze check: PASS ({} diamonds, {} rows, width {})",
            report.diamonds_checked,
            grid.row_count(),
            grid.width()
        );
        Ok(ExitCode::SUCCESS)
    } else {
        for (x, y) in &report.identification_failures {
            println!("boundary identification broken at x={x}, y={y}");
        }
        if let Some(f) = report.diamond_failures.first() {
            println!(
                "frieze check: FAIL at diamond x={}, y={}: β={} η={} α={} δ={} gives determinant {}",
                f.x,
                f.y,
                f.beta,
                f.eta,
                f.alpha.map_or("-".to_string(), |v| v.to_string()),
                f.delta.map_or("-".to_string(), |v| v.to_string()),
                f.det
            );
        }
        println!(
            "{} of {} diamonds failed",
            report.diamond_failures.len(),
            report.diamonds_checked
        );
        Ok(ExitCode::from(1))
    }
}
