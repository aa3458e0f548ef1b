//! Command-line front end.
//!
//! Exit codes: 0 success, 1 computational or identity failure, 2 argument
//! error. Machine-readable output (`--format json`) is an envelope with a
//! `schema_version`; integers are emitted as decimal strings so arbitrary
//! precision survives JSON.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::cayley::{ch_coefficients, verify_ch_identities};
use crate::error::Error;
use crate::genfunc::build_ogf;
use crate::oeis::{self, ANumber, BFile, Offset};
use crate::order::Order;
use crate::polymatrix::{InversePolymatrix, Polymatrix};
use crate::roots::{dominant_root, find_roots};
use crate::selftest::{self, Bounds, SelfTestReport};
use crate::sequences::{Kind, SequenceFamily};

pub const SCHEMA_VERSION: u32 = 1;
/// Largest order accepted on the command line.
pub const MAX_CLI_ORDER: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "polynacci", version, about = "Polymatrix powers, Polynacci sequences and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Standard,
    Reflected,
    Inverted,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Standard => Kind::Standard,
            KindArg::Reflected => Kind::Reflected,
            KindArg::Inverted => Kind::Inverted,
        }
    }
}

#[derive(Debug, Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_order(s: &str) -> Result<Order, String> {
    let m: usize = s.parse().map_err(|_| format!("{s:?} is not a non-negative integer"))?;
    if m > MAX_CLI_ORDER {
        return Err(format!("orders above {MAX_CLI_ORDER} are rejected"));
    }
    Order::new(m).map_err(|e| e.to_string())
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("{s:?} is not a positive tolerance")),
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print consecutive terms of a sequence family (negative indices allowed)
    Terms {
        #[arg(long, value_parser = parse_order)]
        m: Order,
        #[arg(long, value_enum, default_value_t = KindArg::Standard)]
        kind: KindArg,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Print A_m^power, or B_m^power with --inverse
    Matrix {
        #[arg(long, value_parser = parse_order)]
        m: Order,
        #[arg(long, default_value_t = 1)]
        power: u64,
        #[arg(long)]
        inverse: bool,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Print a closed-form generating function and its first coefficients
    Ogf {
        #[arg(long, value_parser = parse_order)]
        m: Order,
        #[arg(long, value_enum, default_value_t = KindArg::Standard)]
        kind: KindArg,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Cayley–Hamilton coefficients of A_m^n and their identities
    Chcoeffs {
        #[arg(long, value_parser = parse_order)]
        m: Order,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Numeric roots of the characteristic polynomial and the dominant root
    Roots {
        #[arg(long, value_parser = parse_order)]
        m: Order,
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
        tol: f64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Verify a family against an OEIS b-file
    VerifyOeis {
        /// A-number of a bundled fixture (or of a file in the fixtures directory)
        #[arg(long, required_unless_present = "bfile")]
        anumber: Option<String>,
        /// Path to a b-file, e.g. one freshly downloaded from OEIS
        #[arg(long)]
        bfile: Option<PathBuf>,
        /// Directory of bNNNNNN.txt files overriding the bundled ones
        /// (defaults to $POLYNACCI_FIXTURES)
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, value_parser = parse_order)]
        m: Option<Order>,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// "auto" or a fixed index shift
        #[arg(long, default_value = "auto", allow_hyphen_values = true)]
        offset: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Run the full identity suite over a grid of orders and indices
    Selftest {
        #[arg(long, default_value = "8", value_parser = parse_order)]
        max_m: Order,
        #[arg(long, default_value_t = 30)]
        max_n: u64,
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
        tol: f64,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::UnsupportedOrder(_) | Error::Io(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            2
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Terms { m, kind, from, count, fmt } => cmd_terms(m, kind.into(), from, count, fmt.format, out),
        Command::Matrix { m, power, inverse, fmt } => cmd_matrix(m, power, inverse, fmt.format, out),
        Command::Ogf { m, kind, count, fmt } => cmd_ogf(m, kind.into(), count, fmt.format, out),
        Command::Chcoeffs { m, n, fmt } => cmd_chcoeffs(m, n, fmt.format, out),
        Command::Roots { m, tol, fmt } => cmd_roots(m, tol, fmt.format, out),
        Command::VerifyOeis { anumber, bfile, fixtures, m, kind, offset, fmt } => {
            let offset: Offset = offset.parse()?;
            cmd_verify_oeis(anumber, bfile, fixtures, m, kind.map(Kind::from), offset, fmt.format, out)
        }
        Command::Selftest { max_m, max_n, tol, fmt } => {
            let report = selftest::run(Bounds { max_m: max_m.get(), max_n, tol })?;
            emit_selftest(&report, fmt.format, out)
        }
    }
}

fn envelope(command: &str, parameters: Map<String, Value>, payload: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "payload": payload,
    })
}

fn write_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| Failure::Compute(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn write_csv<R, S>(out: &mut dyn Write, header: &[&str], rows: R) -> Result<(), Failure>
where
    R: IntoIterator<Item = Vec<S>>,
    S: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Failure::Compute(e.to_string());
    if !header.is_empty() {
        w.write_record(header).map_err(csv_err)?;
    }
    for row in rows {
        w.write_record(row).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn cmd_terms(m: Order, kind: Kind, from: i64, count: u64, format: Format, out: &mut dyn Write) -> CmdResult {
    let family = SequenceFamily::new(m, kind);
    let rows: Vec<(i64, BigInt)> = (0..count as i64).map(|k| (from + k, family.term(from + k))).collect();
    match format {
        Format::Text => {
            for (_, v) in &rows {
                writeln!(out, "{v}")?;
            }
        }
        Format::Csv => write_csv(out, &["index", "value"], rows.iter().map(|(i, v)| vec![i.to_string(), v.to_string()]))?,
        Format::Json => {
            let terms: Vec<Value> = rows
                .iter()
                .map(|(i, v)| json!({ "index": i, "value": v.to_string() }))
                .collect();
            let p = params(&[
                ("m", json!(m.get())),
                ("kind", json!(kind)),
                ("from", json!(from)),
                ("count", json!(count)),
            ]);
            write_json(out, &envelope("terms", p, json!({ "terms": terms })))?;
        }
    }
    Ok(0)
}

fn cmd_matrix(m: Order, power: u64, inverse: bool, format: Format, out: &mut dyn Write) -> CmdResult {
    let mat = if inverse {
        InversePolymatrix::new(m).pow(power)
    } else {
        Polymatrix::new(m).pow(power)
    };
    match format {
        Format::Text => writeln!(out, "{mat}")?,
        Format::Csv => write_csv::<_, String>(out, &[], mat.rows().map(strings))?,
        Format::Json => {
            let rows: Vec<Vec<String>> = mat.rows().map(strings).collect();
            let p = params(&[("m", json!(m.get())), ("power", json!(power)), ("inverse", json!(inverse))]);
            let payload = json!({ "dim": mat.dim(), "trace": mat.trace().to_string(), "rows": rows });
            write_json(out, &envelope("matrix", p, payload))?;
        }
    }
    Ok(0)
}

fn cmd_ogf(m: Order, kind: Kind, count: usize, format: Format, out: &mut dyn Write) -> CmdResult {
    let ogf = build_ogf(m, kind);
    let coeffs = ogf.function.expand(count)?;
    match format {
        Format::Text => {
            writeln!(out, "{}", ogf.function)?;
            writeln!(out, "{}", strings(&coeffs).join(", "))?;
        }
        Format::Csv => write_csv(
            out,
            &["index", "value"],
            coeffs.iter().enumerate().map(|(i, v)| vec![i.to_string(), v.to_string()]),
        )?,
        Format::Json => {
            let p = params(&[("m", json!(m.get())), ("kind", json!(kind)), ("count", json!(count))]);
            let payload = json!({
                "numerator": strings(ogf.function.num().coeffs()),
                "denominator": strings(ogf.function.den().coeffs()),
                "display": ogf.function.to_string(),
                "coefficients": strings(&coeffs),
            });
            write_json(out, &envelope("ogf", p, payload))?;
        }
    }
    Ok(0)
}

fn cmd_chcoeffs(m: Order, n: u64, format: Format, out: &mut dyn Write) -> CmdResult {
    let ch = ch_coefficients(m, n);
    let report = verify_ch_identities(m, n);
    let status = |ok: bool| if ok { "pass" } else { "FAIL" };
    match format {
        Format::Text => {
            for (i, c) in ch.c.iter().enumerate() {
                writeln!(out, "c_{} = {c}", i + 1)?;
            }
            writeln!(out, "c_1 = U_n: {}", status(report.trace.holds))?;
            writeln!(out, "c_m = det(A_m)^n: {}", status(report.determinant.holds))?;
            writeln!(out, "c_(m-1) = (-1)^((m+1)n) reflected_n: {}", status(report.reflected.holds))?;
            if report.degenerate_overlap {
                writeln!(out, "note: at m=2, c_1 and c_(m-1) are the same coefficient")?;
            }
        }
        Format::Csv => write_csv(
            out,
            &["i", "c"],
            ch.c.iter().enumerate().map(|(i, c)| vec![(i + 1).to_string(), c.to_string()]),
        )?,
        Format::Json => {
            let p = params(&[("m", json!(m.get())), ("n", json!(n))]);
            let payload = json!({ "c": strings(&ch.c), "identities": to_value(&report)? });
            write_json(out, &envelope("chcoeffs", p, payload))?;
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, Failure> {
    serde_json::to_value(v).map_err(|e| Failure::Compute(e.to_string()))
}

fn cmd_roots(m: Order, tol: f64, format: Format, out: &mut dyn Write) -> CmdResult {
    let rs = find_roots(m, tol)?;
    let rho = dominant_root(m, tol)?;
    match format {
        Format::Text => {
            for r in rs.roots() {
                writeln!(out, "{:+.15e} {:+.15e}i", r.re, r.im)?;
            }
            writeln!(out, "residual {:e}", rs.residual())?;
            let digits = (-tol.log10()).ceil().clamp(1.0, 15.0) as usize;
            writeln!(out, "dominant root {rho:.digits$}")?;
        }
        Format::Csv => write_csv(
            out,
            &["index", "re", "im"],
            rs.roots()
                .iter()
                .enumerate()
                .map(|(i, r)| vec![i.to_string(), r.re.to_string(), r.im.to_string()]),
        )?,
        Format::Json => {
            let p = params(&[("m", json!(m.get())), ("tol", json!(tol))]);
            let roots: Vec<Value> = rs.roots().iter().map(|r| json!({ "re": r.re, "im": r.im })).collect();
            let payload = json!({ "roots": roots, "residual": rs.residual(), "dominant_root": rho });
            write_json(out, &envelope("roots", p, payload))?;
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify_oeis(
    anumber: Option<String>,
    bfile: Option<PathBuf>,
    fixtures: Option<PathBuf>,
    m: Option<Order>,
    kind: Option<Kind>,
    offset: Offset,
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let anumber: Option<ANumber> = anumber.as_deref().map(str::parse).transpose()?;
    let file = match (&bfile, &anumber) {
        (Some(path), _) => {
            let mut b = BFile::read(path).map_err(|e| match e {
                Error::Io(io) => Failure::Usage(format!("{}: {io}", path.display())),
                other => other.into(),
            })?;
            if let Some(a) = &anumber {
                b.anumber = Some(a.clone());
            }
            b
        }
        (None, Some(a)) => oeis::load_fixture_from(a, fixtures.or_else(oeis::fixtures_override).as_deref())?,
        (None, None) => return Err(Failure::Usage("give --anumber or --bfile".into())),
    };
    let cited = file.anumber.as_ref().and_then(oeis::citation);
    let (order, kind) = match (m, kind, cited) {
        (Some(m), Some(k), _) => (m, k),
        (m, k, Some(c)) => (m.unwrap_or(Order::new(c.order)?), k.unwrap_or(c.kind)),
        _ => return Err(Failure::Usage("--m and --kind are required for an uncited b-file".into())),
    };
    let family = SequenceFamily::new(order, kind);
    let report = oeis::verify_against(&family, &file, offset)?;
    match format {
        Format::Text => {
            let name = report.anumber.as_ref().map_or("b-file".to_string(), ToString::to_string);
            match &report.first_mismatch {
                None => writeln!(
                    out,
                    "{name} (m={}, {}): {} terms match, shift {}",
                    report.order, report.kind, report.compared, report.shift
                )?,
                Some(mm) => writeln!(
                    out,
                    "{name} (m={}, {}): mismatch at index {} (b-file {}, computed {}), shift {}",
                    report.order, report.kind, mm.index, mm.expected, mm.actual, report.shift
                )?,
            }
        }
        Format::Csv => {
            let mm = report.first_mismatch.as_ref();
            let rows = vec![
                vec!["anumber".to_string(), report.anumber.as_ref().map(ToString::to_string).unwrap_or_default()],
                vec!["m".into(), report.order.to_string()],
                vec!["kind".into(), report.kind.to_string()],
                vec!["shift".into(), report.shift.to_string()],
                vec!["compared".into(), report.compared.to_string()],
                vec!["mismatch_index".into(), mm.map(|x| x.index.to_string()).unwrap_or_default()],
            ];
            write_csv(out, &["field", "value"], rows)?;
        }
        Format::Json => {
            let p = params(&[
                ("anumber", json!(anumber.as_ref().map(ToString::to_string))),
                ("bfile", json!(bfile.as_ref().map(|p| p.display().to_string()))),
                ("m", json!(order.get())),
                ("kind", json!(kind)),
                ("offset", json!(match offset { Offset::Auto => "auto".to_string(), Offset::Fixed(s) => s.to_string() })),
            ]);
            write_json(out, &envelope("verify-oeis", p, to_value(&report)?))?;
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn emit_selftest(report: &SelfTestReport, format: Format, out: &mut dyn Write) -> CmdResult {
    match format {
        Format::Text => {
            for c in &report.checks {
                match &c.counterexample {
                    None => writeln!(out, "PASS {:<28} {} cases", c.name, c.cases)?,
                    Some(cx) => writeln!(out, "FAIL {:<28} {cx}", c.name)?,
                }
            }
            for n in &report.notes {
                writeln!(out, "note: {n}")?;
            }
            match report.first_failure() {
                None => writeln!(out, "all identities hold")?,
                Some((name, cx)) => writeln!(out, "first counterexample ({name}): {cx}")?,
            }
        }
        Format::Csv => write_csv(
            out,
            &["check", "cases", "status", "counterexample"],
            report.checks.iter().map(|c| {
                vec![
                    c.name.to_string(),
                    c.cases.to_string(),
                    if c.passed() { "pass" } else { "fail" }.to_string(),
                    c.counterexample.as_ref().map(ToString::to_string).unwrap_or_default(),
                ]
            }),
        )?,
        Format::Json => {
            let b = report.bounds;
            let p = params(&[("max_m", json!(b.max_m)), ("max_n", json!(b.max_n)), ("tol", json!(b.tol))]);
            write_json(out, &envelope("selftest", p, to_value(report)?))?;
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}
