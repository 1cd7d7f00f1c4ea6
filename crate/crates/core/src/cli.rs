//! The `weary` command line: codecs, parking simulations with traces,
//! statistic tables, family counts and the verification suite.
//!
//! Objects use the canonical text forms: a tree is `n p_1 … p_n`, a record
//! code `n c_1 … c_{n−1}`, a parking function `n a_1 … a_n`. They are given
//! inline or, with `--input`, one per line (blank lines and `#` comments are
//! skipped).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::codec::{decode, encode, RecordCode};
use crate::error::Error;
use crate::families::{
    cayley_count, factorial, family_predicate, forest_count, sequence_at, sequence_count, tree_at,
    FamilyKind, FamilySpec, Object, Side,
};
use crate::parking::{classical_park_traced, weary_permutation_traced, ParkingFunction};
use crate::stats::{hexad_pf, hexad_tree, join, pf_stats, tree_stats, Histogram, StatHexad};
use crate::tree::CayleyTree;
use crate::verify::{
    finalize, run_shard, verify, ShardId, ShardReport, VerifyReport, DEFAULT_MAX_N,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "weary",
    version,
    about = "Record codes of Cayley trees and the weary-parking bijection with parking functions"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tree (`n p_1 … p_n`) to record code.
    Encode(ObjectArgs),
    /// Record code (`n c_1 … c_{n−1}`) to tree.
    Decode(ObjectArgs),
    /// Classical parking of `n a_1 … a_n`; prints the bird's-eye permutation.
    Park {
        #[command(flatten)]
        input: ObjectArgs,
        /// Show every car's attempts.
        #[arg(long)]
        trace: bool,
    },
    /// Weary parking on a tree; prints the weary permutation.
    Weary {
        #[command(flatten)]
        input: ObjectArgs,
        /// Show the frontier before every visit.
        #[arg(long)]
        trace: bool,
    },
    /// All statistics of one object.
    Stats {
        /// `tree` or `pf`.
        #[arg(long, default_value = "tree")]
        side: Side,
        #[command(flatten)]
        input: ObjectArgs,
    },
    /// Joint hexad distribution over all objects of order `n`.
    Dist {
        n: usize,
        /// `tree` or `pf`; defaults to the family's side.
        #[arg(long)]
        side: Option<Side>,
        /// Restrict to a family, e.g. `catalan` or `kary:3`.
        #[arg(long)]
        family: Option<FamilyKind>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Size of a family at order `n`, against its closed form and its dual.
    Count {
        n: usize,
        #[arg(long, default_value = "all")]
        family: FamilyKind,
        #[arg(long)]
        side: Option<Side>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Run every check for all orders up to `n`.
    Verify {
        n: usize,
        /// Run only shard `i` of `t` and print its partial report (always JSON).
        #[arg(long)]
        shard: Option<ShardId>,
        /// Refuse orders above this.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Merge shard reports written by `verify --shard` into the final report.
    VerifyMerge {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ObjectArgs {
    /// The object, inline.
    #[arg(required_unless_present = "input", allow_negative_numbers = true)]
    pub values: Vec<String>,

    /// Read objects from a file, one per line.
    #[arg(long, short, conflicts_with = "values")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(#[from] Error),

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Error },

    #[error("{path}: {message}")]
    File { path: String, message: String },

    #[error("order {n} is above the ceiling {max}; raise it with --max-n")]
    Ceiling { n: usize, max: usize },

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (program name first), runs the command, and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<u8> {
    let format = cli.format;
    match &cli.command {
        Command::Encode(input) => {
            let trees = read_objects(input, parse_tree)?;
            let mut rows = Vec::new();
            for (line, tree) in trees {
                let code = encode(&tree).map_err(|source| CliError::AtLine { line, source })?;
                rows.push((tree.to_string(), code.to_string()));
            }
            emit_pairs(out, format, ["tree", "code"], &rows, |(_, code)| {
                code.clone()
            })?;
        }
        Command::Decode(input) => {
            let codes = read_objects(input, parse_code)?;
            let rows: Vec<_> = codes
                .into_iter()
                .map(|(_, code)| (code.to_string(), decode(&code).to_string()))
                .collect();
            emit_pairs(out, format, ["code", "tree"], &rows, |(_, tree)| {
                tree.clone()
            })?;
        }
        Command::Park { input, trace } => {
            park(out, format, read_objects(input, parse_values)?, *trace)?
        }
        Command::Weary { input, trace } => {
            weary(out, format, read_objects(input, parse_tree)?, *trace)?
        }
        Command::Stats { side, input } => match side {
            Side::Tree => {
                let objects = read_objects(input, parse_tree)?;
                let rows: Vec<_> = objects
                    .iter()
                    .map(|(_, t)| {
                        let stats = serde_json::to_value(tree_stats(t)).expect("plain data");
                        (t.to_string(), stats, hexad_tree(t))
                    })
                    .collect();
                emit_stats(out, format, &rows)?;
            }
            Side::Parking => {
                let objects = read_objects(input, parse_pf)?;
                let rows: Vec<_> = objects
                    .iter()
                    .map(|(_, pf)| {
                        let stats = serde_json::to_value(pf_stats(pf)).expect("plain data");
                        (pf.to_string(), stats, hexad_pf(pf))
                    })
                    .collect();
                emit_stats(out, format, &rows)?;
            }
        },
        Command::Dist {
            n,
            side,
            family,
            max_n,
        } => {
            check_ceiling(*n, *max_n)?;
            let spec = resolve_family(family.unwrap_or(FamilyKind::All), *side)?;
            emit_dist(out, format, *n, &spec, &distribution(*n, &spec))?;
        }
        Command::Count {
            n,
            family,
            side,
            max_n,
        } => {
            check_ceiling(*n, *max_n)?;
            let spec = resolve_family(*family, *side)?;
            let report = count(*n, &spec)?;
            let ok = report["match"] == Value::Bool(true);
            emit_count(out, format, &report)?;
            return Ok(if ok { EXIT_OK } else { EXIT_FAILED });
        }
        Command::Verify { n, shard, max_n } => {
            check_ceiling(*n, *max_n)?;
            if let Some(shard) = shard {
                let report = run_shard(*n, *shard);
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("plain data")
                )?;
                let failed = report.checks.values().any(|t| t.failed > 0);
                return Ok(if failed { EXIT_FAILED } else { EXIT_OK });
            }
            let report = verify(*n);
            emit_report(out, format, &report)?;
            return Ok(if report.passed { EXIT_OK } else { EXIT_FAILED });
        }
        Command::VerifyMerge { files } => {
            let mut shards = Vec::with_capacity(files.len());
            for path in files {
                shards.push(read_shard(path)?);
            }
            let report = finalize(shards)?;
            emit_report(out, format, &report)?;
            return Ok(if report.passed { EXIT_OK } else { EXIT_FAILED });
        }
    }
    Ok(EXIT_OK)
}

fn check_ceiling(n: usize, max: usize) -> CliResult<()> {
    if n > max {
        return Err(CliError::Ceiling { n, max });
    }
    Ok(())
}

fn read_shard(path: &Path) -> CliResult<ShardReport> {
    let file_error = |message: String| CliError::File {
        path: path.display().to_string(),
        message,
    };
    let text = fs::read_to_string(path).map_err(|e| file_error(e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| file_error(e.to_string()))
}

/// Whitespace-separated nonnegative integers on one line.
pub fn parse_values(line: &str, line_no: usize) -> crate::Result<Vec<usize>> {
    line.split_whitespace()
        .enumerate()
        .map(|(idx, token)| {
            token.parse().map_err(|_| Error::Parse {
                line: line_no,
                position: idx + 1,
                message: format!("{token:?} is not a nonnegative integer"),
            })
        })
        .collect()
}

/// Splits `n v_1 … v_m` into `n` and the `m = expected(n)` values.
fn split_order(
    values: &[usize],
    line: usize,
    expected: impl Fn(usize) -> usize,
) -> crate::Result<(usize, Vec<usize>)> {
    let Some((&n, rest)) = values.split_first() else {
        return Err(Error::Parse {
            line,
            position: 1,
            message: "empty object".into(),
        });
    };
    let want = expected(n);
    if rest.len() != want {
        return Err(Error::Parse {
            line,
            position: want.min(rest.len()) + 2,
            message: format!(
                "order {n} needs {want} values after it, found {}",
                rest.len()
            ),
        });
    }
    Ok((n, rest.to_vec()))
}

pub fn parse_tree(line: &str, line_no: usize) -> crate::Result<CayleyTree> {
    let (_, parents) = split_order(&parse_values(line, line_no)?, line_no, |n| n)?;
    CayleyTree::from_parents(parents)
}

pub fn parse_code(line: &str, line_no: usize) -> crate::Result<RecordCode> {
    let (n, entries) = split_order(&parse_values(line, line_no)?, line_no, |n| {
        n.saturating_sub(1)
    })?;
    RecordCode::new(n, entries)
}

pub fn parse_pf(line: &str, line_no: usize) -> crate::Result<ParkingFunction> {
    let (_, prefs) = split_order(&parse_values(line, line_no)?, line_no, |n| n)?;
    ParkingFunction::new(prefs)
}

/// Inline values form line 1; a file contributes one object per
/// non-blank, non-comment line.
fn read_objects<T>(
    args: &ObjectArgs,
    parse: impl Fn(&str, usize) -> crate::Result<T>,
) -> CliResult<Vec<(usize, T)>> {
    let lines: Vec<(usize, String)> = match &args.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::File {
                path: path.display().to_string(),
                message: e.to_string(),
            })?
            .lines()
            .enumerate()
            .map(|(idx, l)| (idx + 1, l.to_string()))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .collect(),
        None => vec![(1, args.values.join(" "))],
    };
    lines
        .into_iter()
        .map(|(line, text)| match parse(&text, line) {
            Ok(object) => Ok((line, object)),
            Err(e @ Error::Parse { .. }) => Err(e.into()),
            Err(source) => Err(CliError::AtLine { line, source }),
        })
        .collect()
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

fn emit_pairs(
    out: &mut dyn Write,
    format: Format,
    header: [&str; 2],
    rows: &[(String, String)],
    text: impl Fn(&(String, String)) -> String,
) -> CliResult<()> {
    match format {
        Format::Text => {
            for row in rows {
                writeln!(out, "{}", text(row))?;
            }
        }
        Format::Json => {
            for (a, b) in rows {
                writeln!(out, "{}", json!({ header[0]: a, header[1]: b }))?;
            }
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(header).map_err(csv_error)?;
            for (a, b) in rows {
                w.write_record([a, b]).map_err(csv_error)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn park(
    out: &mut dyn Write,
    format: Format,
    objects: Vec<(usize, Vec<usize>)>,
    trace: bool,
) -> CliResult<()> {
    let mut csv_rows: Vec<Vec<String>> = Vec::new();
    for (line, values) in objects {
        let (_, prefs) = split_order(&values, line, |n| n)?;
        let (omega, steps) =
            classical_park_traced(&prefs).map_err(|source| CliError::AtLine { line, source })?;
        let object = ParkingFunction::new(prefs).expect("parked").to_string();
        match format {
            Format::Text => {
                if trace {
                    for s in &steps {
                        writeln!(
                            out,
                            "car {} prefers {}: tries {}, parks in {}",
                            s.car,
                            s.preference,
                            join(&s.attempts, " "),
                            s.spot
                        )?;
                    }
                }
                writeln!(out, "{omega}")?;
            }
            Format::Json => {
                let mut v = json!({ "parking_function": object, "birds_eye": omega.to_string() });
                if trace {
                    v["trace"] = serde_json::to_value(&steps).expect("plain data");
                }
                writeln!(out, "{v}")?;
            }
            Format::Csv if trace => csv_rows.extend(steps.iter().map(|s| {
                vec![
                    object.clone(),
                    s.car.to_string(),
                    s.preference.to_string(),
                    join(&s.attempts, " "),
                    s.spot.to_string(),
                ]
            })),
            Format::Csv => csv_rows.push(vec![object, omega.to_string()]),
        }
    }
    if format == Format::Csv {
        let header: &[&str] = if trace {
            &["parking_function", "car", "preference", "attempts", "spot"]
        } else {
            &["parking_function", "birds_eye"]
        };
        write_csv(out, header, &csv_rows)?;
    }
    Ok(())
}

fn weary(
    out: &mut dyn Write,
    format: Format,
    objects: Vec<(usize, CayleyTree)>,
    trace: bool,
) -> CliResult<()> {
    let mut csv_rows: Vec<Vec<String>> = Vec::new();
    for (_, tree) in objects {
        let (omega, steps) = weary_permutation_traced(&tree);
        let object = tree.to_string();
        match format {
            Format::Text => {
                if trace {
                    for s in &steps {
                        writeln!(
                            out,
                            "step {}: frontier {{{}}}, visits {}",
                            s.step,
                            join(&s.frontier, ","),
                            s.visited
                        )?;
                    }
                }
                writeln!(out, "{omega}")?;
            }
            Format::Json => {
                let mut v = json!({ "tree": object, "weary_permutation": omega.to_string() });
                if trace {
                    v["trace"] = serde_json::to_value(&steps).expect("plain data");
                }
                writeln!(out, "{v}")?;
            }
            Format::Csv if trace => csv_rows.extend(steps.iter().map(|s| {
                vec![
                    object.clone(),
                    s.step.to_string(),
                    join(&s.frontier, " "),
                    s.visited.to_string(),
                ]
            })),
            Format::Csv => csv_rows.push(vec![object, omega.to_string()]),
        }
    }
    if format == Format::Csv {
        let header: &[&str] = if trace {
            &["tree", "step", "frontier", "visited"]
        } else {
            &["tree", "weary_permutation"]
        };
        write_csv(out, header, &csv_rows)?;
    }
    Ok(())
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> CliResult<()> {
    let mut w = csv_writer(out);
    w.write_record(header).map_err(csv_error)?;
    for row in rows {
        w.write_record(row).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

fn hexad_json(h: &StatHexad) -> Value {
    json!([h.rec_set, h.stat2, h.stat3, h.stat4, h.seq5, h.stat6])
}

/// A scalar or a sequence (space-joined), for text and CSV cells.
fn cell(v: &Value) -> String {
    match v {
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn emit_stats(
    out: &mut dyn Write,
    format: Format,
    rows: &[(String, Value, StatHexad)],
) -> CliResult<()> {
    match format {
        Format::Text => {
            for (idx, (object, stats, hexad)) in rows.iter().enumerate() {
                if idx > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "object {object}")?;
                for (name, value) in stats.as_object().expect("struct") {
                    writeln!(out, "{name} {}", cell(value))?;
                }
                writeln!(out, "hexad {hexad}")?;
            }
        }
        Format::Json => {
            for (object, stats, hexad) in rows {
                writeln!(
                    out,
                    "{}",
                    json!({ "object": object, "stats": stats, "hexad": hexad_json(hexad) })
                )?;
            }
        }
        Format::Csv => {
            let Some((_, first, _)) = rows.first() else {
                return Ok(());
            };
            let mut header = vec!["object".to_string()];
            header.extend(first.as_object().expect("struct").keys().cloned());
            let mut w = csv_writer(out);
            w.write_record(&header).map_err(csv_error)?;
            for (object, stats, _) in rows {
                let mut record = vec![object.clone()];
                record.extend(stats.as_object().expect("struct").values().map(cell));
                w.write_record(&record).map_err(csv_error)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// The family's own side unless `side` says otherwise.
fn resolve_family(kind: FamilyKind, side: Option<Side>) -> CliResult<FamilySpec> {
    let side = side.unwrap_or(if kind.allowed_on(Side::Tree) {
        Side::Tree
    } else {
        Side::Parking
    });
    Ok(FamilySpec::new(side, kind)?)
}

fn distribution(n: usize, spec: &FamilySpec) -> Histogram {
    let fold = |ranks: u64, visit: &(dyn Fn(u64) -> Option<StatHexad> + Sync)| {
        (0..ranks)
            .into_par_iter()
            .fold(Histogram::default, |mut h, rank| {
                if let Some(hexad) = visit(rank) {
                    h.add(hexad);
                }
                h
            })
            .reduce(Histogram::default, |mut a, b| {
                a.merge(b);
                a
            })
    };
    match spec.side() {
        Side::Tree => fold(cayley_count(n), &|rank| {
            let t = tree_at(n, rank);
            let keep = family_predicate(spec, Object::Tree(&t)).expect("tree side");
            keep.then(|| hexad_tree(&t))
        }),
        Side::Parking => fold(sequence_count(n), &|rank| {
            let pf = ParkingFunction::new(sequence_at(n, rank)).ok()?;
            let keep = family_predicate(spec, Object::Parking(&pf)).expect("parking side");
            keep.then(|| hexad_pf(&pf))
        }),
    }
}

fn hexad_columns(side: Side) -> [&'static str; 7] {
    match side {
        Side::Tree => [
            "records", "wait", "psa", "deg_root", "chseq", "ord", "count",
        ],
        Side::Parking => ["records", "probes", "lucky", "ones", "mult", "len", "count"],
    }
}

fn hexad_cells(h: &StatHexad, count: u64, sep: &str) -> [String; 7] {
    [
        join(&h.rec_set, sep),
        h.stat2.to_string(),
        h.stat3.to_string(),
        h.stat4.to_string(),
        join(&h.seq5, sep),
        h.stat6.to_string(),
        count.to_string(),
    ]
}

fn emit_dist(
    out: &mut dyn Write,
    format: Format,
    n: usize,
    spec: &FamilySpec,
    hist: &Histogram,
) -> CliResult<()> {
    let columns = hexad_columns(spec.side());
    match format {
        Format::Text => {
            writeln!(
                out,
                "# n={n} side={} family={} total={} distinct={}",
                spec.side(),
                spec.kind(),
                hist.total(),
                hist.distinct()
            )?;
            writeln!(out, "{}", columns.join("\t"))?;
            for (h, &count) in &hist.0 {
                writeln!(out, "{}", hexad_cells(h, count, ",").join("\t"))?;
            }
        }
        Format::Json => {
            let rows: Vec<Value> = hist
                .0
                .iter()
                .map(|(h, &count)| {
                    json!({
                        columns[0]: h.rec_set, columns[1]: h.stat2, columns[2]: h.stat3,
                        columns[3]: h.stat4, columns[4]: h.seq5, columns[5]: h.stat6,
                        "count": count,
                    })
                })
                .collect();
            let v = json!({
                "n": n,
                "side": spec.side().to_string(),
                "family": spec.kind().to_string(),
                "total": hist.total(),
                "rows": rows,
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&v).expect("plain data")
            )?;
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = hist
                .0
                .iter()
                .map(|(h, &count)| hexad_cells(h, count, " ").to_vec())
                .collect();
            write_csv(out, &columns, &rows)?;
        }
    }
    Ok(())
}

/// Closed-form size of a family at order `n`, where one is known.
pub fn family_formula(kind: FamilyKind, n: usize) -> Option<u64> {
    use FamilyKind::*;
    match kind {
        All => Some(cayley_count(n)),
        Increasing | Subexceedant | Path | Permutation => Some(factorial(n)),
        FirstRecords(k) => Some(if (1..=n).contains(&k) {
            forest_count(n, k) as u64
        } else {
            0
        }),
        // (n − 1)!! Stirling words of length n = 2m
        Stirling => Some(if n.is_multiple_of(2) {
            (1..n as u64).step_by(2).product()
        } else {
            0
        }),
        Catalan | Pf02 | Kary(_) | PfLe(_) => None,
    }
}

fn count(n: usize, spec: &FamilySpec) -> CliResult<Value> {
    let count = distribution(n, spec).total();
    let formula = family_formula(spec.kind(), n);
    let dual = spec.dual().map(|d| distribution(n, &d).total());
    let matches = formula.is_none_or(|f| f == count) && dual.is_none_or(|d| d == count);
    let k = match spec.kind() {
        FamilyKind::Kary(k) | FamilyKind::PfLe(k) | FamilyKind::FirstRecords(k) => Some(k),
        _ => None,
    };
    let mut v = json!({
        "n": n,
        "family": spec.kind().to_string(),
        "side": spec.side().to_string(),
        "count": count,
        "formula_value": formula,
        "dual_count": dual,
        "match": matches,
    });
    if let Some(k) = k {
        v["k"] = json!(k);
    }
    Ok(v)
}

fn emit_count(out: &mut dyn Write, format: Format, v: &Value) -> CliResult<()> {
    let fields = [
        "n",
        "k",
        "family",
        "side",
        "count",
        "formula_value",
        "dual_count",
        "match",
    ];
    let text = |key: &str| match &v[key] {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    };
    match format {
        Format::Json => writeln!(out, "{v}")?,
        Format::Text => {
            for key in fields {
                if !v[key].is_null() {
                    writeln!(out, "{key} {}", text(key))?;
                }
            }
        }
        Format::Csv => {
            let row: Vec<String> = fields.iter().map(|k| text(k)).collect();
            write_csv(out, &fields, &[row])?;
        }
    }
    Ok(())
}

fn emit_report(out: &mut dyn Write, format: Format, report: &VerifyReport) -> CliResult<()> {
    match format {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Text => {
            for c in &report.checks {
                write!(
                    out,
                    "{} {} checked={} failed={}",
                    if c.passed { "pass" } else { "FAIL" },
                    c.name,
                    c.checked,
                    c.failed
                )?;
                match &c.first_failure {
                    Some(detail) => writeln!(out, " first: {detail}")?,
                    None => writeln!(out)?,
                }
            }
            let failed = report.failures().count();
            writeln!(
                out,
                "verify n<={}: {} checks, {failed} failed: {}",
                report.n_max,
                report.checks.len(),
                if report.passed { "PASS" } else { "FAIL" }
            )?;
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.clone(),
                        c.checked.to_string(),
                        c.failed.to_string(),
                        c.passed.to_string(),
                        c.first_failure.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            write_csv(
                out,
                &["name", "checked", "failed", "passed", "first_failure"],
                &rows,
            )?;
        }
    }
    Ok(())
}
