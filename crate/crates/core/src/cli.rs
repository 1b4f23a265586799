//! Command-line front end: `stats`, `verify`, `spectrum`, `bench`, `export`
//! and `convention`.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or
//! configuration error. [`run`] takes explicit writers so the whole front
//! end can be driven in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::convention::{self, Convention, Side};
use crate::error::Error;
use crate::groupalg::{GroupConfig, SymmetricGroup};
use crate::perm::{self, StatKind};
use crate::skewrep::{self, SkewMatrix};
use crate::solomon::{self, Composition};
use crate::spectra::{self, BenchRecord};
use crate::verify::{self, SuiteOptions};
use crate::{fmt_ratio, GAElement};

/// Environment variable overriding the convention cache path.
pub const CACHE_ENV: &str = "PERMREP_CONVENTION_CACHE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "permrep",
    version,
    about = "Exact group-algebra models of maj, des and inv"
)]
struct Cli {
    /// Composition convention: auto (oracle, cached), variantA or variantB.
    #[arg(long, global = true, default_value = "auto")]
    convention: String,
    /// Largest degree accepted.
    #[arg(long, global = true, default_value_t = perm::DEFAULT_DEGREE_CAP)]
    cap: usize,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(flatten)]
    select: Select,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Select {
    /// Single degree.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Inclusive degree range `A..B`.
    #[arg(long = "n-range", global = true)]
    n_range: Option<String>,
    /// Comma-separated statistics, or `all`.
    #[arg(long, global = true)]
    stat: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Statistic values, sums or generating polynomials.
    Stats {
        #[arg(long)]
        sums: bool,
        #[arg(long)]
        poly: bool,
    },
    /// Run verification suites.
    Verify {
        /// Comma-separated suites, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        cpd_trials: usize,
    },
    /// Verify the spectrum of multiplication by a statistic.
    Spectrum,
    /// Time naive against structured multiplication.
    Bench {
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
    /// Serialize an object.
    Export {
        /// h_des, h_maj, h_inv, p1_h_<stat>, p2_h_<stat>, toeplitz_a,
        /// toeplitz_b, projected_delta, u_<stat>, u_<stat>_centered,
        /// unit:<i>,<j>, b:<parts>, gram.
        #[arg(long)]
        object: String,
    },
    /// Run the convention oracle and refresh the cache.
    Convention,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Validated invocation settings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub degrees: Vec<usize>,
    pub stats: Vec<StatKind>,
    pub seed: u64,
    pub convention: ConventionChoice,
    pub cap: usize,
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConventionChoice {
    Auto,
    Fixed(Convention),
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::UnknownStat(_)
            | Error::UnsupportedStat(_)
            | Error::DegreeTooLarge { .. }
            | Error::DegreeTooSmall { .. }
            | Error::InvalidPair { .. }
            | Error::IndexOutOfRange { .. } => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Cached oracle outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedConvention {
    pub convention: Convention,
    pub ideal_side: Side,
    pub oracle_degree: usize,
}

pub fn cache_path() -> PathBuf {
    if let Some(p) = std::env::var_os(CACHE_ENV) {
        return PathBuf::from(p);
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("permrep").join("convention.json")
}

fn read_cache(path: &Path) -> Option<CachedConvention> {
    let text = std::fs::read_to_string(path).ok()?;
    let c: CachedConvention = serde_json::from_str(&text).ok()?;
    (c.ideal_side == c.convention.ideal_side()).then_some(c)
}

/// Runs the oracle at `n = 3` and stores the outcome at `path`.
pub fn bootstrap_and_cache(path: &Path) -> crate::Result<(CachedConvention, Option<String>)> {
    let outcome = convention::bootstrap(3)?;
    let cached = CachedConvention {
        convention: outcome.convention,
        ideal_side: outcome.ideal_side,
        oracle_degree: outcome.n,
    };
    let write = || -> std::io::Result<()> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, serde_json::to_string_pretty(&cached)? + "\n")
    };
    let warning = write()
        .err()
        .map(|e| format!("could not write {}: {e}", path.display()));
    Ok((cached, warning))
}

fn resolve_convention(choice: ConventionChoice, err: &mut dyn Write) -> CliResult<Convention> {
    match choice {
        ConventionChoice::Fixed(c) => Ok(c),
        ConventionChoice::Auto => {
            let path = cache_path();
            if let Some(c) = read_cache(&path) {
                let _ = writeln!(
                    err,
                    "convention {} (ideal side {}), cached at {}",
                    c.convention,
                    c.ideal_side,
                    path.display()
                );
                return Ok(c.convention);
            }
            let (c, warning) = bootstrap_and_cache(&path)?;
            if let Some(w) = warning {
                let _ = writeln!(err, "warning: {w}");
            }
            let _ = writeln!(
                err,
                "convention oracle pinned {} (ideal side {}); cached at {}",
                c.convention,
                c.ideal_side,
                path.display()
            );
            Ok(c.convention)
        }
    }
}

fn parse_degrees(select: &Select, default: usize) -> CliResult<Vec<usize>> {
    match (select.n, &select.n_range) {
        (Some(_), Some(_)) => Err(CliError::Usage("use either --n or --n-range".into())),
        (Some(n), None) => Ok(vec![n]),
        (None, Some(r)) => {
            let bad = || CliError::Usage(format!("bad --n-range {r:?}, expected A..B"));
            let (a, b) = r.split_once("..").ok_or_else(bad)?;
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        (None, None) => Ok(vec![default]),
    }
}

fn parse_stats(s: Option<&str>, default: &[StatKind]) -> CliResult<Vec<StatKind>> {
    let Some(s) = s else {
        return Ok(default.to_vec());
    };
    if s == "all" {
        return Ok(default.to_vec());
    }
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let k: StatKind = part
            .parse()
            .map_err(|e: Error| CliError::Usage(e.to_string()))?;
        if !out.contains(&k) {
            out.push(k);
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("no statistic selected".into()));
    }
    Ok(out)
}

fn build_config(
    cli: &Cli,
    default_n: usize,
    min_n: usize,
    stats_default: &[StatKind],
) -> CliResult<RunConfig> {
    let degrees = parse_degrees(&cli.select, default_n)?;
    if cli.cap > perm::MAX_DEGREE {
        return Err(CliError::Usage(format!(
            "--cap must be at most {}",
            perm::MAX_DEGREE
        )));
    }
    for &n in &degrees {
        if n < min_n || n > cli.cap {
            return Err(CliError::Usage(format!(
                "degree {n} outside {min_n}..={}",
                cli.cap
            )));
        }
    }
    let convention = match cli.convention.as_str() {
        "auto" => ConventionChoice::Auto,
        other => ConventionChoice::Fixed(
            other
                .parse()
                .map_err(|e: Error| CliError::Usage(e.to_string()))?,
        ),
    };
    Ok(RunConfig {
        degrees,
        stats: parse_stats(cli.select.stat.as_deref(), stats_default)?,
        seed: cli.seed,
        convention,
        cap: cli.cap,
        out: cli.out.clone(),
    })
}

fn require_skew(stats: &[StatKind]) -> CliResult<()> {
    match stats.iter().find(|k| !StatKind::SKEW.contains(k)) {
        Some(k) => Err(CliError::Usage(format!(
            "statistic {k} is not one of maj, des, inv"
        ))),
        None => Ok(()),
    }
}

fn group(config: &RunConfig, n: usize, convention: Convention) -> CliResult<SymmetricGroup> {
    Ok(SymmetricGroup::with_config(
        n,
        GroupConfig {
            convention,
            degree_cap: config.cap,
        },
    )?)
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, err) {
        Ok((text, ok)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            if ok {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Failed(m)) => {
            let _ = writeln!(err, "failure: {m}");
            EXIT_FAILURE
        }
    }
}

/// Returns the rendered output and whether everything verified.
fn dispatch(cli: &Cli, err: &mut dyn Write) -> CliResult<(String, bool)> {
    match &cli.command {
        Command::Stats { sums, poly } => {
            let config = build_config(cli, 4, 1, &StatKind::ALL)?;
            let format = cli.format.unwrap_or(Format::Text);
            Ok((cmd_stats(&config, *sums, *poly, format)?, true))
        }
        Command::Verify { suite, cpd_trials } => {
            let suites = verify::parse_suites(suite).map_err(|e| CliError::Usage(e.to_string()))?;
            let config = build_config(cli, 4, 2, &StatKind::SKEW)?;
            let convention = resolve_convention(config.convention, err)?;
            let options = SuiteOptions {
                seed: config.seed,
                cpd_trials: *cpd_trials,
                ..SuiteOptions::default()
            };
            let gc = GroupConfig {
                convention,
                degree_cap: config.cap,
            };
            let report = verify::run(&suites, &config.degrees, gc, options)?;
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&report)?,
                Format::Text => report.to_string(),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["id", "anchor", "expected", "computed", "passed"])
                        .map_err(csv_err)?;
                    for c in &report.claims {
                        w.write_record([
                            &c.id,
                            &c.anchor,
                            &c.expected,
                            &c.computed,
                            &c.passed.to_string(),
                        ])
                        .map_err(csv_err)?;
                    }
                    csv_string(w)?
                }
            };
            Ok((text, report.passed))
        }
        Command::Spectrum => {
            let config = build_config(cli, 4, 2, &StatKind::SKEW)?;
            require_skew(&config.stats)?;
            let convention = resolve_convention(config.convention, err)?;
            let mut reports = Vec::new();
            for &n in &config.degrees {
                let g = group(&config, n, convention)?;
                for &k in &config.stats {
                    reports.push(spectra::verify_spectrum(&g, k)?);
                }
            }
            let ok = reports.iter().all(|r| r.passed);
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&reports)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record([
                        "stat",
                        "n",
                        "subspace",
                        "eigenvalue",
                        "predicted_multiplicity",
                        "verified_multiplicity",
                    ])
                    .map_err(csv_err)?;
                    for r in &reports {
                        for e in &r.eigenvalues {
                            w.write_record([
                                r.stat.to_string(),
                                r.n.to_string(),
                                e.subspace.clone(),
                                fmt_ratio(&e.value),
                                e.predicted_multiplicity.to_string(),
                                e.verified_multiplicity.to_string(),
                            ])
                            .map_err(csv_err)?;
                        }
                        w.write_record([
                            r.stat.to_string(),
                            r.n.to_string(),
                            "kernel".into(),
                            "0/1".into(),
                            r.predicted_kernel_dim.to_string(),
                            r.kernel_dim.to_string(),
                        ])
                        .map_err(csv_err)?;
                    }
                    csv_string(w)?
                }
                Format::Text => {
                    let mut s = String::new();
                    for r in &reports {
                        let _ = writeln!(
                            s,
                            "{} n={} {}",
                            r.stat,
                            r.n,
                            if r.passed { "PASS" } else { "FAIL" }
                        );
                        for e in &r.eigenvalues {
                            let _ = writeln!(
                                s,
                                "  {:<9} eigenvalue {:>10}  multiplicity {} (predicted {})",
                                e.subspace,
                                fmt_ratio(&e.value),
                                e.verified_multiplicity,
                                e.predicted_multiplicity
                            );
                        }
                        let _ = writeln!(
                            s,
                            "  kernel    dimension {} (predicted {})",
                            r.kernel_dim, r.predicted_kernel_dim
                        );
                        let _ = writeln!(
                            s,
                            "  kernel is orthogonal complement of the ideal: {}",
                            r.kernel_is_orthogonal_complement
                        );
                        if let Some(w) = &r.witness {
                            let _ = writeln!(s, "  witness: {w}");
                        }
                    }
                    s
                }
            };
            Ok((text, ok))
        }
        Command::Bench { reps } => {
            let config = build_config(cli, 6, 2, &StatKind::SKEW)?;
            require_skew(&config.stats)?;
            let convention = resolve_convention(config.convention, err)?;
            let mut records = Vec::new();
            for &n in &config.degrees {
                let g = group(&config, n, convention)?;
                for &k in &config.stats {
                    records.push(spectra::benchmark(&g, k, *reps, config.seed)?);
                }
            }
            let text = match cli.format.unwrap_or(Format::Csv) {
                Format::Json => to_json(&records)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(BenchRecord::CSV_HEADER).map_err(csv_err)?;
                    for r in &records {
                        w.write_record(r.csv_row()).map_err(csv_err)?;
                    }
                    csv_string(w)?
                }
                Format::Text => {
                    let mut s = String::new();
                    for r in &records {
                        let measured = r.naive_ns as f64 / r.structured_ns.max(1) as f64;
                        let _ = writeln!(
                            s,
                            "{} n={}: naive {} ns, structured {} ns, measured speedup {:.1}x, op ratio {}",
                            r.kind,
                            r.n,
                            r.naive_ns,
                            r.structured_ns,
                            measured,
                            fmt_ratio(&r.op_ratio)
                        );
                    }
                    s
                }
            };
            Ok((text, true))
        }
        Command::Export { object } => {
            let config = build_config(cli, 4, 2, &StatKind::SKEW)?;
            let convention = resolve_convention(config.convention, err)?;
            let format = cli.format.unwrap_or(Format::Json);
            let mut text = String::new();
            for &n in &config.degrees {
                let g = group(&config, n, convention)?;
                text.push_str(&export(&g, object, format)?);
            }
            Ok((text, true))
        }
        Command::Convention => {
            let outcome = convention::bootstrap(cli.select.n.unwrap_or(3))?;
            let path = cache_path();
            let (_, warning) = bootstrap_and_cache(&path)?;
            if let Some(w) = warning {
                let _ = writeln!(err, "warning: {w}");
            }
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&outcome)?,
                _ => {
                    let mut s = String::new();
                    let _ = writeln!(s, "oracle at n={}", outcome.n);
                    for c in &outcome.candidates {
                        let _ = writeln!(
                            s,
                            "  {} / {:<5} span dim {:>2}  centered in span {:<5}  identities {:<5}  {}",
                            c.convention,
                            c.side.to_string(),
                            c.translate_span_dim,
                            c.centered_in_span,
                            c.identities_hold,
                            if c.accepted(outcome.n) { "accepted" } else { "rejected" }
                        );
                    }
                    let _ = writeln!(
                        s,
                        "pinned {} ({}), ideal side {}; cached at {}",
                        outcome.convention,
                        outcome.convention.describe(),
                        outcome.ideal_side,
                        path.display()
                    );
                    s
                }
            };
            Ok((text, true))
        }
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Failed(e.to_string())
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> CliResult<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Failed(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Failed(e.to_string()))
}

fn to_json<T: Serialize>(v: &T) -> CliResult<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Failed(e.to_string()))
}

fn cmd_stats(config: &RunConfig, sums: bool, poly: bool, format: Format) -> CliResult<String> {
    if sums && poly {
        return Err(CliError::Usage("use either --sums or --poly".into()));
    }
    let (header, rows, json): (Vec<String>, Vec<Vec<String>>, serde_json::Value) = if sums {
        let mut rows = Vec::new();
        let mut js = Vec::new();
        for &n in &config.degrees {
            for &k in &config.stats {
                let total = perm::stat_sum(k, n)?;
                rows.push(vec![k.to_string(), n.to_string(), total.to_string()]);
                js.push(json!({"stat": k, "n": n, "sum": total}));
            }
        }
        (
            vec!["stat".into(), "n".into(), "sum".into()],
            rows,
            json!(js),
        )
    } else if poly {
        let mut rows = Vec::new();
        let mut js = Vec::new();
        for &n in &config.degrees {
            for &k in &config.stats {
                let c = perm::generating_polynomial(k, n)?;
                let joined = c.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
                rows.push(vec![k.to_string(), n.to_string(), joined]);
                js.push(json!({"stat": k, "n": n, "coefficients": c}));
            }
        }
        (
            vec!["stat".into(), "n".into(), "coefficients".into()],
            rows,
            json!(js),
        )
    } else {
        let mut header = vec!["n".to_string(), "index".into(), "permutation".into()];
        header.extend(config.stats.iter().map(ToString::to_string));
        let mut rows = Vec::new();
        let mut js = Vec::new();
        for &n in &config.degrees {
            for (idx, p) in perm::all_permutations_capped(n, config.cap)?
                .iter()
                .enumerate()
            {
                let values: Vec<usize> = config.stats.iter().map(|&k| p.stat(k)).collect();
                let mut row = vec![n.to_string(), idx.to_string(), p.to_string()];
                row.extend(values.iter().map(ToString::to_string));
                rows.push(row);
                let stats: serde_json::Map<String, serde_json::Value> = config
                    .stats
                    .iter()
                    .zip(&values)
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect();
                js.push(json!({"n": n, "index": idx, "permutation": p.one_line(), "stats": stats}));
            }
        }
        (header, rows, json!(js))
    };
    match format {
        Format::Json => to_json(&json),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).map_err(csv_err)?;
            for r in &rows {
                w.write_record(r).map_err(csv_err)?;
            }
            csv_string(w)
        }
        Format::Text => Ok(text_table(&header, &rows)),
    }
}

fn text_table(header: &[String], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .map(|r| r[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut s = String::new();
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(s, "{}", cells.join("  ").trim_end());
    }
    s
}

fn export(g: &SymmetricGroup, object: &str, format: Format) -> CliResult<String> {
    let n = g.degree();
    let stat = |name: &str| -> CliResult<StatKind> {
        name.parse()
            .map_err(|e: Error| CliError::Usage(e.to_string()))
    };
    enum Obj {
        Matrix(SkewMatrix),
        Element(GAElement),
        Gram(crate::groupalg::PseudounitGram),
    }
    let obj = if let Some(rest) = object.strip_prefix("unit:") {
        let idx: Vec<usize> = rest
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad unit indices {rest:?}")))
            })
            .collect::<CliResult<_>>()?;
        match idx.as_slice() {
            [i, j] => Obj::Element(g.pseudounit(*i, *j)?),
            _ => return Err(CliError::Usage("unit:<i>,<j> needs two indices".into())),
        }
    } else if let Some(rest) = object.strip_prefix("b:") {
        let parts: Vec<usize> = rest
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad composition {rest:?}")))
            })
            .collect::<CliResult<_>>()?;
        Obj::Element(solomon::b_element(g, &Composition::new(parts)?)?)
    } else if object == "gram" {
        Obj::Gram(g.gram_pseudounits()?)
    } else if object == "toeplitz_a" {
        Obj::Matrix(skewrep::toeplitz_a(n))
    } else if object == "toeplitz_b" {
        Obj::Matrix(skewrep::toeplitz_b(n))
    } else if object == "projected_delta" {
        Obj::Matrix(skewrep::projected_delta(g)?)
    } else if let Some(k) = object.strip_prefix("h_") {
        Obj::Matrix(skewrep::h_matrix(stat(k)?, n)?)
    } else if let Some(k) = object.strip_prefix("p1_h_") {
        Obj::Matrix(skewrep::p1(&skewrep::h_matrix(stat(k)?, n)?))
    } else if let Some(k) = object.strip_prefix("p2_h_") {
        Obj::Matrix(skewrep::p2(&skewrep::h_matrix(stat(k)?, n)?))
    } else if let Some(k) = object.strip_prefix("u_") {
        match k.strip_suffix("_centered") {
            Some(k) => Obj::Element(g.from_stat(stat(k)?, true)),
            None => Obj::Element(g.from_stat(stat(k)?, false)),
        }
    } else {
        return Err(CliError::Usage(format!("unknown object {object:?}")));
    };
    match (obj, format) {
        (Obj::Matrix(m), Format::Json) => to_json(&m),
        (Obj::Element(e), Format::Json) => to_json(&e),
        (Obj::Gram(gr), Format::Json) => to_json(&json!({
            "n": n,
            "pairs": gr.pairs,
            "entries": gr.entries.iter().map(|r| r.iter().map(fmt_ratio).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })),
        (Obj::Matrix(m), Format::Csv) => {
            let mut buf = Vec::new();
            m.write_csv(&mut buf)?;
            String::from_utf8(buf).map_err(|e| CliError::Failed(e.to_string()))
        }
        (Obj::Element(e), Format::Csv) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["index", "permutation", "coefficient"])
                .map_err(csv_err)?;
            for (k, (p, c)) in g.elements().iter().zip(e.coeffs()).enumerate() {
                w.write_record([k.to_string(), p.to_string(), fmt_ratio(c)])
                    .map_err(csv_err)?;
            }
            csv_string(w)
        }
        (Obj::Gram(gr), Format::Csv) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["i", "j", "k", "l", "value"])
                .map_err(csv_err)?;
            for (a, row) in gr.pairs.iter().zip(&gr.entries) {
                for (b, x) in gr.pairs.iter().zip(row) {
                    w.write_record([
                        a.0.to_string(),
                        a.1.to_string(),
                        b.0.to_string(),
                        b.1.to_string(),
                        fmt_ratio(x),
                    ])
                    .map_err(csv_err)?;
                }
            }
            csv_string(w)
        }
        (Obj::Matrix(m), Format::Text) => Ok(format!("{object} n={n}\n{m}")),
        (Obj::Element(e), Format::Text) => {
            let mut s = format!("{object} n={n}\n");
            for (p, c) in g.elements().iter().zip(e.coeffs()) {
                let _ = writeln!(s, "{p} {}", fmt_ratio(c));
            }
            Ok(s)
        }
        (Obj::Gram(gr), Format::Text) => {
            let mut s = format!("gram n={n}\n");
            for (a, row) in gr.pairs.iter().zip(&gr.entries) {
                let cells: Vec<String> = row.iter().map(fmt_ratio).collect();
                let _ = writeln!(s, "{a:?} {}", cells.join(" "));
            }
            Ok(s)
        }
    }
}
