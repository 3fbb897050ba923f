use std::io::Write;

use anyhow::{Context, Result};
use polite_core::render::{render_decomposition, render_transformation};
use polite_core::{
    classify, decomposition_from_odd_divisor, factor_odd, find_spectrum_witness, length_spectrum,
    max_possible_length, validate_spectrum, Decomposition, Kind, SpectrumCheck,
};
use serde::Serialize;

use crate::args::{Command, Format, SortBy};
use crate::table::{Align, Table};
use crate::{scan, verify, Env, EXIT_OK};

/// Longest run printed term by term in table output without `--expand`.
const TABLE_TERMS: u64 = 12;

pub fn dispatch(cmd: Command, env: Env, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Decompose { n, nontrivial, expand, sort, format } => {
            decompose(n, nontrivial, expand, sort, format, out)?
        }
        Command::Spectrum { n, format } => spectrum(n, format, out)?,
        Command::Count { n, format } => count(n, format, out)?,
        Command::Classify { n, format } => classify_cmd(n, format, out)?,
        Command::Scan { to, format, out: path, chunk, summary } => {
            let format = format.unwrap_or(if env.stdout_is_terminal && path.is_none() {
                Format::Table
            } else {
                Format::Csv
            });
            scan::run(to, usize::try_from(chunk)?, format, path.as_deref(), summary, out, err)?;
        }
        Command::Verify { to } => return verify::run(to, env.oracle_limit, out),
        Command::Witness { spectrum, limit, format } => witness(&spectrum.0, limit, format, out)?,
        Command::Diagram { n, k, transform } => diagram(n, k, transform, out)?,
    }
    Ok(EXIT_OK)
}

fn join(xs: impl IntoIterator<Item = u64>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_csv<R: Serialize>(out: &mut dyn Write, rows: &[R]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct DecompositionRow {
    pub k: u64,
    pub start: u64,
    pub length: u64,
    pub parity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<u64>>,
}

#[derive(Debug, Serialize)]
pub struct DecomposeOutput {
    pub n: u64,
    pub count: u64,
    pub nontrivial_only: bool,
    pub decompositions: Vec<DecompositionRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Serialize)]
struct DecompositionCsvRow {
    k: u64,
    start: u64,
    length: u64,
    parity: &'static str,
    terms: String,
}

fn table_terms(dec: &Decomposition, expand: bool) -> String {
    if expand || dec.length() <= TABLE_TERMS {
        dec.to_string()
    } else {
        format!("({}, {}, ..., {})", dec.start(), dec.start() + 1, dec.end())
    }
}

fn decompose(n: u64, nontrivial: bool, expand: bool, sort: SortBy, format: Format, out: &mut dyn Write) -> Result<()> {
    let f = factor_odd(n)?;
    let mut rows: Vec<(u64, Decomposition)> = f
        .odd_divisors()
        .iter()
        .map(|&k| Ok((k, decomposition_from_odd_divisor(n, k)?)))
        .collect::<polite_core::Result<_>>()?;
    if nontrivial {
        rows.retain(|(_, d)| !d.is_trivial());
    }
    if sort == SortBy::Length {
        rows.sort_by_key(|(_, d)| d.length());
    }
    let note = (nontrivial && rows.is_empty())
        .then(|| format!("{n} is a power of two and has no nontrivial decomposition"));

    match format {
        Format::Table => {
            let mut t = Table::new(&[
                ("k", Align::Right),
                ("(k-1)/2", Align::Right),
                ("n/k", Align::Right),
                ("decomposition", Align::Left),
                ("length", Align::Right),
                ("parity", Align::Left),
            ]);
            for (k, d) in &rows {
                t.push(vec![
                    k.to_string(),
                    ((k - 1) / 2).to_string(),
                    (n / k).to_string(),
                    table_terms(d, expand),
                    d.length().to_string(),
                    d.parity().to_string(),
                ]);
            }
            t.write_to(out)?;
            if let Some(note) = &note {
                writeln!(out, "note: {note}")?;
            }
        }
        Format::Json => {
            let decompositions = rows
                .iter()
                .map(|(k, d)| DecompositionRow {
                    k: *k,
                    start: d.start(),
                    length: d.length(),
                    parity: d.parity().as_str(),
                    terms: expand.then(|| d.terms().collect()),
                })
                .collect();
            let count = f.divisor_count() as u64;
            write_json(out, &DecomposeOutput { n, count, nontrivial_only: nontrivial, decompositions, note })?;
        }
        Format::Csv => {
            let csv_rows: Vec<_> = rows
                .iter()
                .map(|(k, d)| DecompositionCsvRow {
                    k: *k,
                    start: d.start(),
                    length: d.length(),
                    parity: d.parity().as_str(),
                    terms: if expand { join(d.terms(), " ") } else { String::new() },
                })
                .collect();
            if csv_rows.is_empty() {
                writeln!(out, "k,start,length,parity,terms")?;
            } else {
                write_csv(out, &csv_rows)?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct SpectrumOutput {
    pub n: u64,
    pub d: u32,
    pub odd: Vec<u64>,
    pub even: Vec<u64>,
    pub size: usize,
    pub longest: u64,
    pub shortest_nontrivial: Option<u64>,
    pub max_possible_length: u64,
}

fn spectrum(n: u64, format: Format, out: &mut dyn Write) -> Result<()> {
    let s = length_spectrum(n)?;
    let o = SpectrumOutput {
        n,
        d: s.d(),
        odd: s.odd_lengths().to_vec(),
        even: s.even_lengths().to_vec(),
        size: s.len(),
        longest: s.max(),
        shortest_nontrivial: s.min_nontrivial(),
        max_possible_length: max_possible_length(n)?,
    };
    match format {
        Format::Table => {
            writeln!(out, "n: {}", o.n)?;
            writeln!(out, "d: {}", o.d)?;
            writeln!(out, "{}", format!("odd: {}", join(o.odd.iter().copied(), " ")).trim_end())?;
            writeln!(out, "{}", format!("even: {}", join(o.even.iter().copied(), " ")).trim_end())?;
            writeln!(out, "size: {}", o.size)?;
            writeln!(out, "longest: {}", o.longest)?;
            writeln!(out, "shortest_nontrivial: {}", o.shortest_nontrivial.map_or("-".into(), |v| v.to_string()))?;
            writeln!(out, "max_possible_length: {}", o.max_possible_length)?;
        }
        Format::Json => write_json(out, &o)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                n: u64,
                d: u32,
                odd: String,
                even: String,
                size: usize,
                longest: u64,
                shortest_nontrivial: Option<u64>,
                max_possible_length: u64,
            }
            write_csv(
                out,
                &[Row {
                    n: o.n,
                    d: o.d,
                    odd: join(o.odd.iter().copied(), " "),
                    even: join(o.even.iter().copied(), " "),
                    size: o.size,
                    longest: o.longest,
                    shortest_nontrivial: o.shortest_nontrivial,
                    max_possible_length: o.max_possible_length,
                }],
            )?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct CountOutput {
    pub n: u64,
    pub d: u32,
    pub count: u64,
    pub odd_divisors: Vec<u64>,
    pub odd_prime_exponents: Vec<PrimePower>,
}

#[derive(Debug, Serialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

fn count(n: u64, format: Format, out: &mut dyn Write) -> Result<()> {
    let f = factor_odd(n)?;
    let count = polite_core::count_decompositions(n)?;
    match format {
        Format::Table => {
            writeln!(out, "n: {n}")?;
            writeln!(out, "count: {count}")?;
        }
        Format::Json => {
            let o = CountOutput {
                n,
                d: f.d(),
                count,
                odd_divisors: f.odd_divisors().to_vec(),
                odd_prime_exponents: f
                    .odd_prime_exponents()
                    .iter()
                    .map(|(&prime, &exponent)| PrimePower { prime, exponent })
                    .collect(),
            };
            write_json(out, &o)?;
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                n: u64,
                d: u32,
                count: u64,
            }
            write_csv(out, &[Row { n, d: f.d(), count }])?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct ClassifyOutput {
    pub n: u64,
    pub kind: &'static str,
    pub d: u32,
    pub odd_part: u64,
    /// `n = 2^d * k`, present for UNIQUE_NONTRIVIAL.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
}

fn classify_cmd(n: u64, format: Format, out: &mut dyn Write) -> Result<()> {
    let c = classify(n)?;
    let d = n.trailing_zeros();
    let o = ClassifyOutput {
        n,
        kind: c.kind.as_str(),
        d,
        odd_part: n >> d,
        k: c.detail.map(|(_, k)| k),
    };
    match format {
        Format::Table => {
            writeln!(out, "n: {n}")?;
            writeln!(out, "kind: {}", o.kind)?;
            if c.kind == Kind::UniqueNontrivial {
                let (d, k) = c.detail.expect("set for unique nontrivial");
                writeln!(out, "d: {d}")?;
                writeln!(out, "k: {k}")?;
            }
        }
        Format::Json => write_json(out, &o)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                n: u64,
                kind: &'static str,
                d: u32,
                odd_part: u64,
            }
            write_csv(out, &[Row { n, kind: o.kind, d, odd_part: o.odd_part }])?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct CheckOutput {
    pub condition: &'static str,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct WitnessOutput {
    pub spectrum: Vec<u64>,
    pub checks: Vec<CheckOutput>,
    pub necessary_conditions_pass: bool,
    pub limit: u64,
    pub witness: Option<u64>,
}

fn witness(spectrum: &[u64], limit: u64, format: Format, out: &mut dyn Write) -> Result<()> {
    let report = validate_spectrum(spectrum)?;
    let found = find_spectrum_witness(spectrum, limit);
    let o = WitnessOutput {
        spectrum: report.members.clone(),
        checks: SpectrumCheck::ALL
            .iter()
            .map(|&c| CheckOutput { condition: c.name(), passed: report.passed(c) })
            .collect(),
        necessary_conditions_pass: report.passes(),
        limit,
        witness: found,
    };
    match format {
        Format::Json => write_json(out, &o)?,
        Format::Table | Format::Csv => {
            writeln!(out, "spectrum: {}", join(o.spectrum.iter().copied(), ","))?;
            for c in &o.checks {
                writeln!(out, "{}: {}", c.condition, if c.passed { "pass" } else { "FAIL" })?;
            }
            match found {
                Some(n) => writeln!(out, "witness: {n}")?,
                None => writeln!(out, "witness: none <= {limit}")?,
            }
        }
    }
    Ok(())
}

fn diagram(n: u64, k: u64, transform: bool, out: &mut dyn Write) -> Result<()> {
    if transform {
        let (_, text) = render_transformation(n, k).with_context(|| format!("diagram {n} {k}"))?;
        out.write_all(text.as_bytes())?;
    } else {
        let dec = decomposition_from_odd_divisor(n, k)?;
        out.write_all(render_decomposition(&dec).as_bytes())?;
    }
    Ok(())
}
