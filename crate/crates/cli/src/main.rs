mod args;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use cyclic_derangements::analysis::{
    default_tolerance, exc_derangement_root_report, root_report, RootReport,
};
use cyclic_derangements::counting::{
    self, published_value, qt_bruteforce_with_order, table_discrepancies, CountMethod, Domain,
};
use cyclic_derangements::stats::StatRecord;
use cyclic_derangements::verify::{self, Report, Status, VerifyConfig};
use cyclic_derangements::wreath::enumerate_group_bounded;
use cyclic_derangements::{BivariatePolynomial, Error};
use serde::Serialize;
use serde_json::json;

use args::{Cli, Command, DumpArgs, Format, PolyArgs, PolyKind, RootsArgs, TableArgs, VerifyArgs};

/// Exit status for usage and configuration errors.
const USAGE: u8 = 2;

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.bound == 0 {
        eprintln!("error: --bound must be at least 1");
        return ExitCode::from(USAGE);
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Table(a) => table(a, cli.bound, &mut out).map(|_| true),
        Command::Poly(a) => poly(a, cli.bound, &mut out).map(|_| true),
        Command::Verify(a) => run_verify(a, cli.bound, &mut out),
        Command::Roots(a) => roots(a, &mut out),
        Command::Dump(a) => dump(a, cli.bound, &mut out).map(|_| true),
    };
    let result = result.and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        // A closed pipe downstream is not an error of ours.
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

#[derive(Serialize)]
struct TableRow {
    r: u32,
    /// Decimal strings; `null` where enumeration was refused.
    values: Vec<Option<String>>,
}

fn table(a: &TableArgs, bound: u64, out: &mut impl Write) -> Result<(), Failure> {
    if a.method == CountMethod::Transform && *a.r.start() < 2 {
        return Err(Failure::Usage("the transform route needs r >= 2".into()));
    }
    let rows: Vec<TableRow> =
        a.r.clone()
            .map(|r| TableRow {
                r,
                values: a
                    .n
                    .clone()
                    .map(|n| a.method.count(r, n, bound).ok().map(|v| v.to_string()))
                    .collect(),
            })
            .collect();
    let discrepancies = if a.compare_published {
        table_discrepancies(CountMethod::OneTerm, bound)
            .map_err(Error::from)?
            .into_iter()
            .filter(|d| a.r.contains(&d.r) && a.n.contains(&d.n))
            .collect()
    } else {
        Vec::new()
    };
    let published: Vec<TableRow> =
        a.r.clone()
            .map(|r| TableRow {
                r,
                values: a
                    .n
                    .clone()
                    .map(|n| published_value(r, n).map(|v| v.to_string()))
                    .collect(),
            })
            .collect();
    let cell = |v: &Option<String>| v.clone().unwrap_or_else(|| "refused".into());
    match a.format {
        Format::Json => {
            let mut doc = json!({
                "method": a.method,
                "n": a.n.clone().collect::<Vec<_>>(),
                "rows": rows,
            });
            if a.compare_published {
                doc["published"] = json!(published);
                doc["discrepancies"] = json!(discrepancies);
            }
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let header = |w: &mut csv::Writer<_>| {
                w.write_record(
                    std::iter::once("r".to_string()).chain(a.n.clone().map(|n| n.to_string())),
                )
            };
            header(&mut w)?;
            for row in &rows {
                w.write_record(
                    std::iter::once(row.r.to_string()).chain(row.values.iter().map(cell)),
                )?;
            }
            if a.compare_published {
                w.flush()?;
                drop(w);
                writeln!(out)?;
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(["r", "n", "published", "computed"])?;
                for d in &discrepancies {
                    w.write_record([
                        d.r.to_string(),
                        d.n.to_string(),
                        d.published.to_string(),
                        d.computed.to_string(),
                    ])?;
                }
                w.flush()?;
            } else {
                w.flush()?;
            }
        }
        Format::Pretty => {
            let grid: Vec<Vec<String>> = rows
                .iter()
                .map(|row| row.values.iter().map(cell).collect())
                .collect();
            write_grid(
                out,
                &a.n.clone().collect::<Vec<_>>(),
                &rows.iter().map(|r| r.r).collect::<Vec<_>>(),
                &grid,
            )?;
            if a.compare_published {
                writeln!(out, "\npublished:")?;
                let grid: Vec<Vec<String>> = published
                    .iter()
                    .map(|row| {
                        row.values
                            .iter()
                            .map(|v| v.clone().unwrap_or_else(|| "-".into()))
                            .collect()
                    })
                    .collect();
                write_grid(
                    out,
                    &a.n.clone().collect::<Vec<_>>(),
                    &rows.iter().map(|r| r.r).collect::<Vec<_>>(),
                    &grid,
                )?;
                writeln!(out, "\ndiscrepancies: {}", discrepancies.len())?;
                for d in &discrepancies {
                    writeln!(
                        out,
                        "  r={} n={}: published {}, computed {}",
                        d.r, d.n, d.published, d.computed
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn write_grid(
    out: &mut impl Write,
    ns: &[usize],
    rs: &[u32],
    grid: &[Vec<String>],
) -> io::Result<()> {
    let width = grid
        .iter()
        .flatten()
        .map(String::len)
        .chain(ns.iter().map(|n| n.to_string().len()))
        .max()
        .unwrap_or(1);
    write!(out, "r\\n")?;
    for n in ns {
        write!(out, " {n:>width$}")?;
    }
    writeln!(out)?;
    for (r, row) in rs.iter().zip(grid) {
        write!(out, "{r:>3}")?;
        for v in row {
            write!(out, " {v:>width$}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn poly(a: &PolyArgs, bound: u64, out: &mut impl Write) -> Result<(), Failure> {
    let (r, n) = (a.r, a.n);
    if r == 0 {
        return Err(Failure::Usage("r must be at least 1".into()));
    }
    let p: BivariatePolynomial = match (a.kind, a.brute_force) {
        (PolyKind::QtDerangement, false) => counting::qt_formula(r, n).map_err(Error::from)?,
        (PolyKind::QtDerangement, true) => {
            qt_bruteforce_with_order(r, n, a.order, Domain::Derangements, bound)
                .map_err(Error::from)?
        }
        (PolyKind::GroupTotal, false) => counting::group_total_qt(r, n),
        (PolyKind::GroupTotal, true) => {
            qt_bruteforce_with_order(r, n, a.order, Domain::Group, bound).map_err(Error::from)?
        }
        (PolyKind::Eulerian, false) => counting::eulerian_from_exc(r, n),
        (PolyKind::Eulerian, true) => counting::eulerian_poly(r, n, bound).map_err(Error::from)?,
        (PolyKind::ExcDerangement, false) => counting::exc_derangement_poly(r, n),
        (PolyKind::ExcDerangement, true) => {
            counting::exc_derangement_bruteforce(r, n, bound).map_err(Error::from)?
        }
    };
    match a.format {
        Format::Json => {
            let doc = json!({
                "kind": format!("{:?}", a.kind),
                "r": r,
                "n": n,
                "polynomial": p.to_string(),
                "terms": p,
            });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["q", "t", "coefficient"])?;
            for ((q, t), c) in p.terms() {
                w.write_record([q.to_string(), t.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
        Format::Pretty => writeln!(out, "{p}")?,
    }
    Ok(())
}

fn run_verify(a: &VerifyArgs, bound: u64, out: &mut impl Write) -> Result<bool, Failure> {
    let cfg = VerifyConfig {
        r: a.r.clone(),
        n: a.n.clone(),
        order: a.order,
        bound,
        tolerance: a.tolerance.clone().unwrap_or_else(default_tolerance),
    };
    if *cfg.r.start() == 0 {
        return Err(Failure::Usage("r must be at least 1".into()));
    }
    let report = verify::run(a.suite, &cfg);
    if let Some(path) = &a.output {
        let mut f = BufWriter::new(std::fs::File::create(path)?);
        serde_json::to_writer_pretty(&mut f, &report)?;
        writeln!(f)?;
        f.flush()?;
    }
    match a.format {
        Format::Pretty => write_verify_summary(out, &report)?,
        _ => {
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
        }
    }
    Ok(report.pass)
}

fn write_verify_summary(out: &mut impl Write, report: &Report) -> io::Result<()> {
    for c in &report.checks {
        let tag = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Skipped => "skip",
        };
        write!(
            out,
            "{tag:<12} {:<10} r={} n={} {}",
            c.suite, c.r, c.n, c.identity
        )?;
        if c.status != Status::Pass && !c.detail.is_empty() {
            write!(out, ": {}", c.detail)?;
        }
        writeln!(out)?;
    }
    for d in &report.discrepancies {
        writeln!(
            out,
            "documented   published table r={} n={}: printed {}, computed {}",
            d.r, d.n, d.published, d.computed
        )?;
    }
    let s = &report.summary;
    writeln!(
        out,
        "{}: {} passed, {} failed, {} inconclusive, {} skipped",
        if report.pass { "PASS" } else { "FAIL" },
        s.passed,
        s.failed,
        s.inconclusive,
        s.skipped
    )
}

fn roots(a: &RootsArgs, out: &mut impl Write) -> Result<bool, Failure> {
    let tol = a.tolerance.clone().unwrap_or_else(default_tolerance);
    let report: RootReport = match (&a.coeffs, a.r, a.n) {
        (Some(c), _, _) => {
            let p = BivariatePolynomial::from_q_coeffs(c.iter().map(|&x| x.into()));
            if p.is_zero() {
                return Err(Failure::Usage(
                    "the zero polynomial has no roots to report".into(),
                ));
            }
            root_report(&p, &tol)?
        }
        (None, Some(r), Some(n)) if r >= 1 => exc_derangement_root_report(r, n, &tol)?,
        _ => {
            return Err(Failure::Usage(
                "give --r (at least 1) and --n, or --coeffs".into(),
            ))
        }
    };
    match a.format {
        Format::Pretty => {
            writeln!(out, "{}", report.polynomial)?;
            writeln!(
                out,
                "degree {}, real roots {}",
                report.degree, report.real_roots
            )?;
            for x in &report.isolation.exact_roots {
                writeln!(out, "  root {x}")?;
            }
            for (lo, hi) in &report.isolation.intervals {
                writeln!(out, "  root in ({lo}, {hi})")?;
            }
            let v = &report.verdicts;
            writeln!(
                out,
                "negative and distinct: {}, log-concave: {}, unimodal: {}",
                v.negative_distinct, v.log_concave, v.unimodal
            )?;
            if let Some(i) = &v.interlaces_next {
                write!(out, "interlaces the next polynomial: {:?}", i.verdict)?;
                if i.reason.is_empty() {
                    writeln!(out)?;
                } else {
                    writeln!(out, " ({})", i.reason)?;
                }
            }
        }
        _ => {
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
        }
    }
    Ok(report.verdicts.passed())
}

#[derive(Serialize)]
struct DumpLine<'a> {
    element: String,
    #[serde(flatten)]
    stats: &'a StatRecord,
}

fn dump(a: &DumpArgs, bound: u64, out: &mut impl Write) -> Result<(), Failure> {
    let elements = enumerate_group_bounded(a.r, a.n, bound).map_err(Error::from)?;
    for s in elements.filter(|s| !a.derangements || s.is_derangement()) {
        let stats = StatRecord::of(&s, a.order);
        serde_json::to_writer(
            &mut *out,
            &DumpLine {
                element: s.to_string(),
                stats: &stats,
            },
        )?;
        writeln!(out)?;
    }
    Ok(())
}
