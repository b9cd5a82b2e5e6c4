//! The `twistspin` command line.
//!
//! [`run`] takes the arguments and returns the exit code with everything the
//! process would print, so commands can be tested without spawning.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::closed_forms::{default_k_max, distinguish, Distinction};
use crate::enumerate::{count_reps, CountReport, SearchConfig, Strategy};
use crate::error::{EnumerationError, GroupError};
use crate::group::{CayleyTable, GroupDescriptor, TargetGroup};
use crate::presentation::{build_bts, catalog, parse_knot_file, WirtingerPresentation};
use crate::verify::{run_suite, Report, Status, Suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

/// Overrides the worker thread count.
pub const THREADS_ENV: &str = "TWISTSPIN_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "twistspin",
    version,
    about = "Representation counts for branched twist spins"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count representations with a fixed image of h.
    Count(CountArgs),
    /// Print every representation in canonical order.
    Enumerate(CountArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Find the least k whose dihedral counts separate m1 from m2.
    Distinguish(DistinguishArgs),
    /// Built-in knot diagrams.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// List the built-in knots.
    List {
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Debug, Args)]
struct CountArgs {
    /// Catalog name or path to a knot file.
    #[arg(long)]
    knot: String,
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    n: i64,
    /// sl2z3, d2k:<k>, or table:<path>.
    #[arg(long)]
    group: String,
    /// auto, or an element rendering such as [[-1,0],[0,-1]], r^3 or g5.
    #[arg(long, default_value = "auto")]
    h_image: String,
    #[arg(long, value_enum, default_value_t = Engine::Backtracking)]
    engine: Engine,
    /// Maximum number of witnesses to print.
    #[arg(long, default_value_t = 1024)]
    witnesses: usize,
    /// Include the runtime in the output.
    #[arg(long)]
    timing: bool,
    /// Human-readable output instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum Engine {
    Oracle,
    Backtracking,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value = "-12..12", allow_hyphen_values = true)]
    m_range: String,
    #[arg(long, default_value = "1..12")]
    k_range: String,
    #[arg(long, default_value_t = 6)]
    n_max: i64,
    /// `all`, or a comma-separated list of catalog names and knot files.
    #[arg(long, default_value = "all")]
    knots: String,
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    pretty: bool,
}

#[derive(Debug, Args)]
struct DistinguishArgs {
    #[arg(long, allow_negative_numbers = true)]
    m1: i64,
    #[arg(long, allow_negative_numbers = true)]
    m2: i64,
    /// Defaults to max(|m1|, |m2|, 2).
    #[arg(long)]
    kmax: Option<u64>,
}

/// What a command printed and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn err(code: i32, message: impl std::fmt::Display) -> Outcome {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Count(a) => cmd_count(&a, false),
        Command::Enumerate(a) => cmd_count(&a, true),
        Command::Verify(a) => cmd_verify(&a),
        Command::Distinguish(a) => cmd_distinguish(&a),
        Command::Catalog {
            action: CatalogAction::List { pretty },
        } => cmd_catalog(pretty),
    }
}

/// Sizes the global thread pool from [`THREADS_ENV`] if it is set.
pub fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

/// A catalog name, or failing that a path to a knot file.
pub fn resolve_knot(spec: &str) -> Result<WirtingerPresentation, String> {
    if let Ok(k) = catalog::lookup(spec) {
        return Ok(k);
    }
    let path = Path::new(spec);
    if !path.is_file() {
        return Err(format!(
            "unknown knot `{spec}` (not a catalog name or a file)"
        ));
    }
    let text = std::fs::read_to_string(path).map_err(|e| format!("{spec}: {e}"))?;
    parse_knot_file(&text).map_err(|e| format!("{spec}: {e}"))
}

/// Reads a Cayley table: one row of element indices per line, `#` comments.
pub fn read_table(path: &str) -> Result<CayleyTable, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<u16>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("{path}:{}: {e}", i + 1))?;
        rows.push(row);
    }
    let label = Path::new(path)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string());
    CayleyTable::new(label, rows).map_err(|e| format!("{path}: {e}"))
}

fn resolve_group(spec: &str) -> Result<TargetGroup, Outcome> {
    if let Some(path) = spec.strip_prefix("table:") {
        return read_table(path)
            .map(|t| TargetGroup::Table(Arc::new(t)))
            .map_err(|e| Outcome::err(EXIT_USAGE, e));
    }
    let d = GroupDescriptor::parse(spec).map_err(|e| Outcome::err(EXIT_USAGE, e))?;
    TargetGroup::from_descriptor(&d).map_err(group_error)
}

fn group_error(e: GroupError) -> Outcome {
    match e {
        GroupError::TooLarge { .. } => Outcome::err(EXIT_RESOURCE, e),
        _ => Outcome::err(EXIT_USAGE, e),
    }
}

fn enumeration_error(e: EnumerationError) -> Outcome {
    match e {
        EnumerationError::OracleGuard { .. } => {
            Outcome::err(EXIT_RESOURCE, format!("{e}; use --engine backtracking"))
        }
        EnumerationError::Group(g) => group_error(g),
        EnumerationError::Unassigned(_) => Outcome::err(EXIT_USAGE, e),
    }
}

fn cmd_count(a: &CountArgs, everything: bool) -> Outcome {
    let knot = match resolve_knot(&a.knot) {
        Ok(k) => k,
        Err(e) => return Outcome::err(EXIT_USAGE, e),
    };
    let bts = match build_bts(&knot, a.m, a.n) {
        Ok(b) => b,
        Err(e) => return Outcome::err(EXIT_USAGE, e),
    };
    let group = match resolve_group(&a.group) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let h = if a.h_image == "auto" {
        group.default_h_image()
    } else {
        group.parse_element(&a.h_image)
    };
    let h = match h {
        Ok(h) => h,
        Err(e) => return Outcome::err(EXIT_USAGE, e),
    };
    let mut cfg =
        SearchConfig::new(h).witness_limit(if everything { usize::MAX } else { a.witnesses });
    cfg.strategy = match a.engine {
        Engine::Oracle => Strategy::Oracle,
        Engine::Backtracking => Strategy::Backtracking,
    };
    let mut report = match count_reps(&bts, &group, &cfg) {
        Ok(r) => r,
        Err(e) => return enumeration_error(e),
    };
    if !a.timing {
        report.runtime_us = None;
    }
    Outcome::ok(if a.pretty {
        pretty_count(&report)
    } else {
        to_json(&report)
    })
}

fn pretty_count(r: &CountReport) -> String {
    let mut s = String::new();
    let beta = r.beta.map_or("-".to_string(), |b| b.to_string());
    for (k, v) in [
        ("knot", r.knot.clone()),
        ("m", r.m.to_string()),
        ("n", r.n.to_string()),
        ("beta", beta),
        ("group", r.group.clone()),
        ("h", r.h_image.clone()),
        ("engine", r.engine.to_string()),
        ("count", r.count.to_string()),
    ] {
        writeln!(s, "{k:<8}{v}").unwrap();
    }
    if let Some(us) = r.runtime_us {
        writeln!(s, "{:<8}{us} us", "time").unwrap();
    }
    for (i, w) in r.witnesses.iter().enumerate() {
        let images: Vec<String> = w
            .iter()
            .enumerate()
            .map(|(j, x)| format!("x{}={x}", j + 1))
            .collect();
        writeln!(s, "#{:<7}{}", i + 1, images.join(" ")).unwrap();
    }
    if r.witnesses_truncated {
        writeln!(s, "({} more not shown)", r.count - r.witnesses.len() as u64).unwrap();
    }
    s
}

/// Parses `a..b` or `a..=b`, both inclusive.
pub fn parse_range(text: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || format!("bad range `{text}` (expected a..b)");
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty range `{text}`"));
    }
    Ok(lo..=hi)
}

fn verify_config(a: &VerifyArgs) -> Result<VerifyConfig, String> {
    let m_range = parse_range(&a.m_range)?;
    let k = parse_range(&a.k_range)?;
    if *k.start() < 1 {
        return Err(format!(
            "k range must start at 1 or above, got `{}`",
            a.k_range
        ));
    }
    if a.n_max < 1 {
        return Err("--n-max must be positive".to_string());
    }
    let knots = if a.knots == "all" {
        VerifyConfig::default().knots
    } else {
        a.knots
            .split(',')
            .map(|s| resolve_knot(s.trim()))
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(VerifyConfig {
        m_range,
        k_range: (*k.start() as u64)..=(*k.end() as u64),
        n_max: a.n_max,
        knots,
    })
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let cfg = match verify_config(a) {
        Ok(c) => c,
        Err(e) => return Outcome::err(EXIT_USAGE, e),
    };
    let mut report = run_suite(a.suite, &cfg);
    if !a.timing {
        report = report.without_timing();
    }
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    };
    let stdout = if a.pretty {
        pretty_report(&report)
    } else {
        to_json(&report)
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn pretty_report(r: &Report) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let time = c
            .runtime_us
            .map_or(String::new(), |us| format!("  ({us} us)"));
        writeln!(s, "{:<24}{:<30}{time}", c.status.to_string(), c.id).unwrap();
        let shown = if c.status == Status::Pass {
            1
        } else {
            usize::MAX
        };
        for line in c.details.iter().take(shown) {
            writeln!(s, "    {line}").unwrap();
        }
    }
    writeln!(
        s,
        "{} pass, {} fail, {} discrepancy-documented",
        r.summary.pass, r.summary.fail, r.summary.discrepancy_documented
    )
    .unwrap();
    s
}

#[derive(Serialize)]
struct DistinguishReport {
    m1: i64,
    m2: i64,
    k_max: u64,
    #[serde(flatten)]
    result: Distinction,
}

fn cmd_distinguish(a: &DistinguishArgs) -> Outcome {
    let k_max = a.kmax.unwrap_or_else(|| default_k_max(a.m1, a.m2));
    if k_max == 0 {
        return Outcome::err(EXIT_USAGE, "--kmax must be positive");
    }
    Outcome::ok(to_json(&DistinguishReport {
        m1: a.m1,
        m2: a.m2,
        k_max,
        result: distinguish(a.m1, a.m2, k_max),
    }))
}

#[derive(Serialize)]
struct CatalogRow {
    name: &'static str,
    aliases: &'static [&'static str],
    generators: usize,
    relators: usize,
    source: &'static str,
}

fn cmd_catalog(pretty: bool) -> Outcome {
    let rows: Vec<CatalogRow> = catalog::entries()
        .into_iter()
        .map(|e| CatalogRow {
            name: e.name,
            aliases: e.aliases,
            generators: e.presentation.generators(),
            relators: e.presentation.relators().len(),
            source: e.citation,
        })
        .collect();
    if !pretty {
        return Outcome::ok(to_json(&rows));
    }
    let mut s = format!("{:<14}{:>4}{:>4}  {}\n", "name", "l", "r", "aliases");
    for r in &rows {
        writeln!(
            s,
            "{:<14}{:>4}{:>4}  {}",
            r.name,
            r.generators,
            r.relators,
            r.aliases.join(", ")
        )
        .unwrap();
    }
    Outcome::ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-6..6"), Ok(-6..=6));
        assert_eq!(parse_range("1..=8"), Ok(1..=8));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("1-8").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn negative_m_is_accepted() {
        let o = run([
            "twistspin",
            "count",
            "--knot",
            "trefoil",
            "--m",
            "-3",
            "--group",
            "d2k:3",
        ]);
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
        assert!(o.stdout.contains("\"m\":-3"));
    }

    #[test]
    fn clap_errors_are_usage() {
        assert_eq!(run(["twistspin", "count"]).code, EXIT_USAGE);
        assert_eq!(run(["twistspin", "--help"]).code, EXIT_OK);
    }
}
