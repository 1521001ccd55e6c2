//! Command-line front end.
//!
//! Exit codes: 0 success (no refutation for `verify`), 1 domain error from
//! the library, 2 refutation (`verify`), 3 discrepancy-only (`verify`),
//! 64 usage error, 65 unreadable or unparseable input file.

use crate::json::{coeffs_to_strings, TopologyJson};
use crate::run::{enumerate_topologies, EnumConfig, EnumStats, StrategyChoice};
use crate::verify::{self, Verdict, VerifyContext};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use topolab_core::families;
use topolab_core::{PartitionType, Topology};

#[derive(Parser)]
#[command(
    name = "topolab",
    version,
    about = "Construct, enumerate and analyze topologies on small finite sets via their open-set polynomials"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that a JSON file holds a valid topology and normalize it.
    Validate(ValidateArgs),
    /// Print the open-set polynomial of a topology file.
    Poly(PolyArgs),
    /// Evaluate properties of a topology and its polynomial.
    Check(CheckArgs),
    /// Build a catalog family (or a partition topology) and adjudicate its
    /// claimed polynomial and cardinality.
    Construct(ConstructArgs),
    /// Stream all topologies on n points as JSONL.
    Enumerate(EnumerateArgs),
    /// Run named theorem checks over exhaustive enumeration.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ValidateArgs {
    /// Topology JSON file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Also render opens as element lists on stderr (never parsed back).
    #[arg(long)]
    pretty: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Comma-separated property list: unimodal, log-concave, slc, niz,
    /// newton, real-rooted, dmax, t0, minimal, partition.
    #[arg(long)]
    props: String,
}

#[derive(Args)]
struct ConstructArgs {
    /// Catalog family key (see the library catalog).
    #[arg(long, conflicts_with = "partition")]
    family: Option<String>,
    /// Partition type as a CSV of block counts, e.g. `1,2` for one
    /// singleton and two 2-blocks.
    #[arg(long)]
    partition: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    /// Family parameter `l`.
    #[arg(long, conflicts_with_all = ["j", "i"])]
    l: Option<u32>,
    /// Family parameter `j`.
    #[arg(long, conflicts_with = "i")]
    j: Option<u32>,
    /// Family parameter `i`.
    #[arg(long)]
    i: Option<u32>,
    /// Write the topology JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also render opens as element lists on stderr (never parsed back).
    #[arg(long)]
    pretty: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Closure,
    Preorder,
    Both,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: u32,
    #[arg(long = "min-card")]
    min_card: Option<u64>,
    /// Keep only T0 topologies.
    #[arg(long = "t0")]
    t0: bool,
    /// One canonical representative per homeomorphism class.
    #[arg(long)]
    iso: bool,
    #[arg(long, value_enum, default_value_t = StrategyArg::Preorder)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Output JSONL path; a `.gz` suffix enables gzip. Defaults to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write run statistics JSON to this sidecar file.
    #[arg(long)]
    stats: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One registered theorem key.
    #[arg(long, conflicts_with = "all")]
    theorem: Option<String>,
    /// Run every registered check.
    #[arg(long)]
    all: bool,
    #[arg(long = "n-max")]
    n_max: u32,
    #[arg(long)]
    seed: Option<u64>,
    /// Write the report array to this file as well as stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

enum AppError {
    Usage(String),
    File(String),
    Domain(String),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Usage(_) => 64,
            AppError::File(_) => 65,
            AppError::Domain(_) => 1,
        }
    }
    fn message(&self) -> &str {
        match self {
            AppError::Usage(m) | AppError::File(m) | AppError::Domain(m) => m,
        }
    }
}

impl From<topolab_core::Error> for AppError {
    fn from(e: topolab_core::Error) -> AppError {
        AppError::Domain(e.to_string())
    }
}

impl From<crate::run::RunError> for AppError {
    fn from(e: crate::run::RunError) -> AppError {
        AppError::Domain(e.to_string())
    }
}

impl From<verify::VerifyError> for AppError {
    fn from(e: verify::VerifyError) -> AppError {
        AppError::Domain(e.to_string())
    }
}

/// Parses argv and dispatches; returns the process exit code.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(64);
        }
    };
    let outcome = match cli.cmd {
        Cmd::Validate(args) => cmd_validate(&args),
        Cmd::Poly(args) => cmd_poly(&args),
        Cmd::Check(args) => cmd_check(&args),
        Cmd::Construct(args) => cmd_construct(&args),
        Cmd::Enumerate(args) => cmd_enumerate(&args),
        Cmd::Verify(args) => cmd_verify(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("topolab: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn read_topology_json(path: &Path) -> Result<TopologyJson, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::File(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| AppError::File(format!("{}: {e}", path.display())))
}

fn load_topology(path: &Path) -> Result<Topology, AppError> {
    let raw = read_topology_json(path)?;
    raw.into_topology().map_err(AppError::from)
}

fn pretty_opens(t: &Topology) -> String {
    let names: Vec<String> = t
        .opens()
        .iter()
        .map(|m| {
            let elems: Vec<String> = m.elements().map(|e| format!("x{}", e + 1)).collect();
            format!("{{{}}}", elems.join(","))
        })
        .collect();
    names.join(" ")
}

fn cmd_validate(args: &ValidateArgs) -> Result<u8, AppError> {
    let raw = read_topology_json(&args.input)?;
    match raw.into_topology() {
        Ok(t) => {
            println!(
                "{}",
                serde_json::to_string(&TopologyJson::from(&t)).expect("serializable")
            );
            if args.pretty {
                eprintln!("opens: {}", pretty_opens(&t));
            }
            Ok(0)
        }
        Err(e) => {
            println!("{}", json!({"valid": false, "error": e.to_string()}));
            Ok(1)
        }
    }
}

fn cmd_poly(args: &PolyArgs) -> Result<u8, AppError> {
    let t = load_topology(&args.input)?;
    let poly = t.open_polynomial();
    match args.format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string(&coeffs_to_strings(&poly)).expect("serializable")
        ),
        OutputFormat::Text => println!("{}", coeffs_to_strings(&poly).join(" ")),
    }
    Ok(0)
}

fn cmd_check(args: &CheckArgs) -> Result<u8, AppError> {
    let t = load_topology(&args.input)?;
    let poly = t.open_polynomial();
    let mut out = serde_json::Map::new();
    for prop in args.props.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let value = match prop {
            "unimodal" => json!(poly.is_unimodal()),
            "log-concave" => json!(poly.is_log_concave()),
            "slc" => json!(poly.is_slc()),
            "niz" => json!(poly.is_niz()),
            "newton" => match poly.newton_check() {
                Ok(v) => json!(v),
                Err(_) => Value::Null, // degree too small
            },
            "real-rooted" => json!(poly.is_real_rooted().map_err(AppError::from)?),
            "dmax" => match poly.max_lc_ratio() {
                Some(d) => json!(d.to_string()),
                None => json!("inf"),
            },
            "t0" => json!(t.is_t0()),
            "minimal" => json!(t
                .minimal_open_sets()
                .iter()
                .map(|m| m.bits())
                .collect::<Vec<u32>>()),
            "partition" => match t.induced_partition() {
                Some(ty) => json!(ty.counts()),
                None => Value::Null,
            },
            other => {
                return Err(AppError::Usage(format!(
                    "unknown property `{other}` (expected unimodal, log-concave, slc, niz, \
                     newton, real-rooted, dmax, t0, minimal, partition)"
                )))
            }
        };
        out.insert(prop.to_string(), value);
    }
    println!("{}", Value::Object(out));
    Ok(0)
}

fn parse_partition_csv(csv: &str) -> Result<PartitionType, AppError> {
    let alpha: Vec<u32> = csv
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|e| AppError::Usage(format!("bad partition count `{s}`: {e}")))
        })
        .collect::<Result<_, _>>()?;
    PartitionType::new(alpha).map_err(AppError::from)
}

fn cmd_construct(args: &ConstructArgs) -> Result<u8, AppError> {
    let inst = if let Some(csv) = &args.partition {
        let ty = parse_partition_csv(csv)?;
        if let Some(n) = args.n {
            if n != ty.ground_size() {
                return Err(AppError::Usage(format!(
                    "--n {n} disagrees with the partition type (ground size {})",
                    ty.ground_size()
                )));
            }
        }
        families::instantiate_partition(&ty)?
    } else if let Some(key) = &args.family {
        let n = args
            .n
            .ok_or_else(|| AppError::Usage("--family requires --n".into()))?;
        let param = args.l.or(args.j).or(args.i);
        families::instantiate(key, n, param)?
    } else {
        return Err(AppError::Usage(
            "construct needs either --family <key> or --partition <csv>".into(),
        ));
    };

    let report = families::check(&inst);
    let topology_json =
        serde_json::to_string(&TopologyJson::from(&inst.topology)).expect("serializable");
    match &args.out {
        Some(path) => std::fs::write(path, format!("{topology_json}\n"))
            .map_err(|e| AppError::File(format!("{}: {e}", path.display())))?,
        None => println!("{topology_json}"),
    }
    if args.pretty {
        eprintln!("opens: {}", pretty_opens(&inst.topology));
    }

    let mut doc = serde_json::Map::new();
    doc.insert("family".into(), json!(inst.key));
    doc.insert("n".into(), json!(inst.n));
    if let Some(p) = inst.param {
        doc.insert("param".into(), json!(p));
    }
    if let Some(ty) = &inst.alpha {
        doc.insert("alpha".into(), json!(ty.counts()));
    }
    doc.insert("claimed".into(), json!(coeffs_to_strings(&inst.claimed_poly)));
    doc.insert(
        "computed".into(),
        json!(coeffs_to_strings(&report.computed_poly)),
    );
    doc.insert("claimed_card".into(), json!(inst.claimed_card));
    doc.insert("computed_card".into(), json!(report.computed_card));
    doc.insert("card_match".into(), json!(report.card_match));
    doc.insert("poly_match".into(), json!(report.poly_match));
    doc.insert("diff_positions".into(), json!(report.diff_positions));
    doc.insert("unimodal".into(), json!(report.unimodal));
    doc.insert("log_concave".into(), json!(report.log_concave));
    if let Some(alt) = &inst.alt_claimed_poly {
        doc.insert("alt_claimed".into(), json!(coeffs_to_strings(alt)));
        doc.insert("alt_poly_match".into(), json!(report.alt_poly_match));
    }
    if inst.alt_claimed_card.is_some() {
        doc.insert("alt_claimed_card".into(), json!(inst.alt_claimed_card));
        doc.insert("alt_card_match".into(), json!(report.alt_card_match));
    }
    println!("{}", Value::Object(doc));
    Ok(0)
}

fn stats_json(stats: &EnumStats) -> Value {
    json!({
        "total": stats.total,
        "by_cardinality": stats
            .by_cardinality
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect::<serde_json::Map<String, Value>>(),
        "elapsed_ms": stats.elapsed.as_millis() as u64,
    })
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<u8, AppError> {
    let threads = NonZeroUsize::new(args.threads)
        .ok_or_else(|| AppError::Usage("--threads must be positive".into()))?;
    let cfg = EnumConfig {
        n: args.n,
        min_card: args.min_card,
        require_t0: args.t0,
        up_to_iso: args.iso,
        strategy: match args.strategy {
            StrategyArg::Closure => StrategyChoice::ClosureBrute,
            StrategyArg::Preorder => StrategyChoice::PreorderBacktrack,
            StrategyArg::Both => StrategyChoice::Both,
        },
        threads,
    };

    let mut sink: Box<dyn Write + Send> = match &args.out {
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| AppError::File(format!("{}: {e}", path.display())))?;
            if path.extension().is_some_and(|e| e == "gz") {
                Box::new(flate2::write::GzEncoder::new(
                    file,
                    flate2::Compression::default(),
                ))
            } else {
                Box::new(std::io::BufWriter::new(file))
            }
        }
    };

    let mut write_error: Option<std::io::Error> = None;
    let stats = enumerate_topologies(&cfg, |t| {
        if write_error.is_some() {
            return;
        }
        let line = serde_json::to_string(&TopologyJson::from(t)).expect("serializable");
        if let Err(e) = writeln!(sink, "{line}") {
            write_error = Some(e);
        }
    })?;
    sink.flush()
        .map_err(|e| AppError::File(format!("flush: {e}")))?;
    drop(sink);
    if let Some(e) = write_error {
        return Err(AppError::File(format!("write: {e}")));
    }

    eprintln!(
        "enumerated {} topologies on n={} in {:?}",
        stats.total, args.n, stats.elapsed
    );
    if let Some(path) = &args.stats {
        std::fs::write(path, format!("{}\n", stats_json(&stats)))
            .map_err(|e| AppError::File(format!("{}: {e}", path.display())))?;
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, AppError> {
    let threads = NonZeroUsize::new(args.threads)
        .ok_or_else(|| AppError::Usage("--threads must be positive".into()))?;
    let mut ctx = VerifyContext::new(args.n_max);
    ctx.threads = threads;
    if let Some(seed) = args.seed {
        ctx.seed = seed;
    }

    let reports = if args.all {
        verify::run_all(&ctx)?
    } else if let Some(key) = &args.theorem {
        vec![verify::run(key, &ctx)?]
    } else {
        return Err(AppError::Usage(
            "verify needs either --theorem <key> or --all".into(),
        ));
    };

    for r in &reports {
        eprintln!(
            "{:28} {:11} checked={} witnesses={} ({} ms)",
            r.id,
            format!("{:?}", r.verdict).to_lowercase(),
            r.checked_count,
            r.witnesses.len(),
            r.elapsed_ms
        );
    }
    let body = serde_json::to_string_pretty(&reports).expect("serializable");
    println!("{body}");
    if let Some(path) = &args.json {
        std::fs::write(path, format!("{body}\n"))
            .map_err(|e| AppError::File(format!("{}: {e}", path.display())))?;
    }

    Ok(match verify::overall_verdict(&reports) {
        Verdict::Verified => 0,
        Verdict::Refuted => 2,
        Verdict::Discrepancy => 3,
    })
}
