//! The `severi` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 internal invariant
//! violation, 3 reference-table mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::config::{CurveConfig, MultiplicityProfile};
use crate::engine::{Engine, EngineOptions};
use crate::error::{Error, Result};
use crate::memo::{EngineTag, MemoStore};
use crate::seqcomb::TangencySeq;
use crate::surfaces::{gw_cubic_conjectural, gw_delpezzo, BlowupClass};
use crate::table1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Environment variable naming a default cache file.
pub const CACHE_ENV: &str = "SEVERI_CACHE";

#[derive(Debug, Parser)]
#[command(
    name = "severi",
    version,
    about = "Counts plane curves with contact conditions along a conic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,

    /// Load counts from and save them to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,

    /// Ignore --cache and $SEVERI_CACHE.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Worker threads for table1 (default: one per core).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreducible curves of geometric genus g.
    CountIrr(CountArgs),
    /// Possibly reducible curves of arithmetic genus g.
    CountAll(CountArgs),
    /// Recompute the reference table of N^g_{d,s} for d <= 5.
    Table1(Table1Args),
    /// Gromov-Witten invariant of the plane blown up at up to 5 points.
    Gw(ClassArgs),
    /// Conjectural Gromov-Witten invariant of the cubic surface.
    GwCubic(ClassArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub g: i64,
    /// Fixed tangencies, e.g. `2,0,1`.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Moving tangencies. If neither alpha nor beta is given,
    /// beta = (2d - |s|) e_1.
    #[arg(long)]
    pub beta: Option<String>,
    /// Multiplicities of fixed multiple points on the conic.
    #[arg(long, default_value = "")]
    pub s: String,
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub d: i64,
    /// Coefficients m_i of D = dH - sum m_i E_i.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub m: String,
    #[arg(long, allow_negative_numbers = true)]
    pub g: i64,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakdownRow {
    pub j: u32,
    pub attach_count: String,
    pub core_count: String,
}

/// One answer, as printed by the count and gw commands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub d: u32,
    pub g: i64,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub s: Vec<u32>,
    pub engine: String,
    pub upsilon: i64,
    pub count: String,
    pub conjectural: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<Vec<BreakdownRow>>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl OutputRecord {
    fn from_config(c: &CurveConfig, engine: &str, count: String) -> Self {
        OutputRecord {
            d: c.d,
            g: c.g,
            alpha: c.alpha.entries().to_vec(),
            beta: c.beta.entries().to_vec(),
            s: c.s.mults().to_vec(),
            engine: engine.to_string(),
            upsilon: c.upsilon(),
            count,
            conjectural: false,
            class: None,
            breakdown: None,
            elapsed: Duration::ZERO,
        }
    }

    /// The echoed configuration.
    pub fn config(&self) -> CurveConfig {
        CurveConfig {
            d: self.d,
            g: self.g,
            alpha: TangencySeq::new(self.alpha.clone()),
            beta: TangencySeq::new(self.beta.clone()),
            s: MultiplicityProfile::new(self.s.clone()),
        }
    }

    fn write_pretty(&self, out: &mut dyn Write) -> std::io::Result<()> {
        if self.conjectural {
            writeln!(out, "CONJECTURAL: assumes the cubic-surface degeneration conjecture")?;
        }
        if let Some(class) = &self.class {
            writeln!(out, "class: {class}")?;
        }
        let name = if self.engine == "reducible" { "N" } else { "N_irr" };
        writeln!(out, "{name}({}) = {}", self.config(), self.count)?;
        writeln!(out, "point conditions: {}", self.upsilon)?;
        if let Some(rows) = &self.breakdown {
            for r in rows {
                writeln!(
                    out,
                    "  j={} attachments={} core={}",
                    r.j, r.attach_count, r.core_count
                )?;
            }
        }
        writeln!(out, "elapsed: {:.3?}", self.elapsed)
    }

    fn write_csv(&self, out: &mut dyn Write) -> Result<()> {
        let join = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut w = csv::Writer::from_writer(out);
        let fail = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record(["d", "g", "alpha", "beta", "s", "engine", "upsilon", "count", "conjectural"])
            .map_err(fail)?;
        w.write_record([
            self.d.to_string(),
            self.g.to_string(),
            join(&self.alpha),
            join(&self.beta),
            join(&self.s),
            self.engine.clone(),
            self.upsilon.to_string(),
            self.count.clone(),
            self.conjectural.to_string(),
        ])
        .map_err(fail)?;
        w.flush()?;
        Ok(())
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_invariant_violation() {
                EXIT_INVARIANT
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    if cli.no_cache {
        return None;
    }
    cli.cache
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let memo = Arc::new(MemoStore::new());
    let path = cache_path(cli);
    if let Some(p) = &path {
        if p.exists() {
            memo.load(p)?;
        }
    }
    let options = EngineOptions {
        inject_binomial_fault: matches!(&cli.command, Command::Table1(t) if t.inject_fault),
        ..EngineOptions::default()
    };
    let engine = Engine::with_memo(memo.clone()).with_options(options);

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n);
    }
    let pool = pool
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(cli, &engine, &mut buf));
    out.write_all(&buf)?;
    let code = result?;

    // a fault-injected run must not poison the cache
    if let (Some(p), false) = (&path, engine.options().inject_binomial_fault) {
        memo.save(p)?;
    }
    Ok(code)
}

fn dispatch(cli: &Cli, engine: &Engine, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::CountIrr(args) => {
            let c = count_config(args)?;
            if c.g < 0 {
                return Err(Error::InvalidInput(
                    "genus must be nonnegative for irreducible counts".into(),
                ));
            }
            let rec = cmd_count(engine, &c, EngineTag::Irreducible)?;
            emit(&rec, cli.format, out)
        }
        Command::CountAll(args) => {
            let c = count_config(args)?;
            let rec = cmd_count(engine, &c, EngineTag::Reducible)?;
            emit(&rec, cli.format, out)
        }
        Command::Gw(args) => {
            let rec = cmd_gw(engine, &class_of(args)?)?;
            emit(&rec, cli.format, out)
        }
        Command::GwCubic(args) => {
            let rec = cmd_gw_cubic(engine, &class_of(args)?)?;
            emit(&rec, cli.format, out)
        }
        Command::Table1(_) => cmd_table1(engine, cli.format, out),
    }
}

fn emit(rec: &OutputRecord, format: Format, out: &mut dyn Write) -> Result<i32> {
    match format {
        Format::Pretty => rec.write_pretty(out)?,
        Format::Json => {
            serde_json::to_writer(&mut *out, rec).map_err(|e| Error::Io(e.into()))?;
            writeln!(out)?;
        }
        Format::Csv => rec.write_csv(out)?,
    }
    Ok(EXIT_OK)
}

/// Builds the configuration named by the count flags.
pub fn count_config(args: &CountArgs) -> Result<CurveConfig> {
    let s: MultiplicityProfile = args.s.parse()?;
    if args.alpha.is_none() && args.beta.is_none() {
        return CurveConfig::plane(args.d, args.g, s.clone()).ok_or_else(|| {
            Error::InvalidInput(format!(
                "multiplicities sum to {}, more than 2d = {}",
                s.total(),
                2 * args.d
            ))
        });
    }
    let alpha: TangencySeq = args.alpha.as_deref().unwrap_or("").parse()?;
    let beta: TangencySeq = args.beta.as_deref().unwrap_or("").parse()?;
    Ok(CurveConfig {
        d: args.d,
        g: args.g,
        alpha,
        beta,
        s,
    })
}

fn class_of(args: &ClassArgs) -> Result<BlowupClass> {
    let m = args
        .m
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<i64>().map_err(|_| Error::Parse {
                input: args.m.clone(),
                reason: format!("{x:?} is not an integer"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BlowupClass::new(args.d, m, args.g))
}

pub fn cmd_count(engine: &Engine, c: &CurveConfig, tag: EngineTag) -> Result<OutputRecord> {
    if c.d == 0 {
        return Err(Error::NonPositiveDegree(0));
    }
    let start = Instant::now();
    let count = match tag {
        EngineTag::Irreducible => engine.count_irreducible(c)?,
        EngineTag::Reducible => engine.count_reducible(c)?,
    };
    let mut rec = OutputRecord::from_config(&c.normalize(), tag.as_str(), count.to_string());
    rec.elapsed = start.elapsed();
    Ok(rec)
}

pub fn cmd_gw(engine: &Engine, class: &BlowupClass) -> Result<OutputRecord> {
    let start = Instant::now();
    let v = gw_delpezzo(engine, class)?;
    let mut rec = match &v.config {
        Some(c) => OutputRecord::from_config(&c.normalize(), "irreducible", v.count.to_string()),
        None => OutputRecord {
            d: class.d.max(0) as u32,
            g: class.g,
            alpha: vec![],
            beta: vec![],
            s: vec![],
            engine: "rigid".into(),
            upsilon: v.point_conditions,
            count: v.count.to_string(),
            conjectural: false,
            class: None,
            breakdown: None,
            elapsed: Duration::ZERO,
        },
    };
    rec.class = Some(class.to_string());
    rec.elapsed = start.elapsed();
    Ok(rec)
}

pub fn cmd_gw_cubic(engine: &Engine, class: &BlowupClass) -> Result<OutputRecord> {
    let start = Instant::now();
    let v = gw_cubic_conjectural(engine, class)?;
    let mut rec = match v.breakdown.first() {
        Some(t) => OutputRecord::from_config(&t.core.normalize(), "conjectural-cubic", v.total.to_string()),
        None => OutputRecord {
            d: class.d.max(0) as u32,
            g: class.g,
            alpha: vec![],
            beta: vec![],
            s: vec![],
            engine: "conjectural-cubic".into(),
            upsilon: v.point_conditions,
            count: v.total.to_string(),
            conjectural: true,
            class: None,
            breakdown: None,
            elapsed: Duration::ZERO,
        },
    };
    rec.upsilon = v.point_conditions;
    rec.conjectural = true;
    rec.class = Some(class.to_string());
    rec.breakdown = Some(
        v.breakdown
            .iter()
            .map(|t| BreakdownRow {
                j: t.j,
                attach_count: t.attach_count.to_string(),
                core_count: t.core_count.to_string(),
            })
            .collect(),
    );
    rec.elapsed = start.elapsed();
    Ok(rec)
}

#[derive(Serialize)]
struct Table1Json<'a> {
    label: String,
    d: u32,
    g: i64,
    s: &'a [u32],
    expected: String,
    computed: String,
    matches: bool,
}

pub fn cmd_table1(engine: &Engine, format: Format, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let rows = table1::recompute(engine)?;
    let matched = rows.iter().filter(|r| r.matches()).count();
    match format {
        Format::Pretty => {
            for r in &rows {
                writeln!(
                    out,
                    "{:<16} expected {:>7}  computed {:>7}  {}",
                    r.entry.label(),
                    r.entry.expected,
                    r.computed,
                    if r.matches() { "ok" } else { "MISMATCH" }
                )?;
            }
            writeln!(out, "{matched}/{} match ({:.2?})", rows.len(), start.elapsed())?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let fail = |e: csv::Error| Error::Io(std::io::Error::other(e));
            w.write_record(["label", "d", "g", "s", "expected", "computed", "match"])
                .map_err(fail)?;
            for r in &rows {
                let s: Vec<String> = r.entry.s.iter().map(|x| x.to_string()).collect();
                w.write_record([
                    r.entry.label(),
                    r.entry.d.to_string(),
                    r.entry.g.to_string(),
                    s.join(","),
                    r.entry.expected.to_string(),
                    r.computed.to_string(),
                    r.matches().to_string(),
                ])
                .map_err(fail)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let items: Vec<Table1Json> = rows
                .iter()
                .map(|r| Table1Json {
                    label: r.entry.label(),
                    d: r.entry.d,
                    g: r.entry.g,
                    s: r.entry.s,
                    expected: r.entry.expected.to_string(),
                    computed: r.computed.to_string(),
                    matches: r.matches(),
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &items).map_err(|e| Error::Io(e.into()))?;
            writeln!(out)?;
        }
    }
    Ok(if matched == rows.len() { EXIT_OK } else { EXIT_MISMATCH })
}
