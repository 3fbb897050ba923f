//! `scan` output: CSV, JSON or an aligned table, streamed chunk by chunk.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use polite_core::sieve::{aggregate_records, scan, Aggregate, ScanRecord};
use serde::Serialize;

use crate::args::Format;

/// CSV header, in column order.
pub const CSV_HEADER: &str = "n,total,odd,even,longest,shortest_nontrivial,is_power_of_two";

#[derive(Debug, Serialize)]
struct Row {
    n: u64,
    total: u64,
    odd: u64,
    even: u64,
    longest: u64,
    shortest_nontrivial: Option<u64>,
    is_power_of_two: bool,
}

impl From<&ScanRecord> for Row {
    fn from(r: &ScanRecord) -> Self {
        Row {
            n: r.n,
            total: r.total_count,
            odd: r.odd_count,
            even: r.even_count,
            longest: r.longest,
            shortest_nontrivial: r.shortest_nontrivial,
            is_power_of_two: r.is_power_of_two,
        }
    }
}

/// Writes `1..=limit` as CSV with [`CSV_HEADER`]; an absent shortest length is an empty field.
pub fn write_csv(limit: u64, chunk: usize, out: &mut dyn Write) -> Result<Aggregate> {
    let records = scan(limit, chunk)?;
    let mut w = csv::WriterBuilder::new().has_headers(true).from_writer(out);
    let mut agg = Folder::new(limit);
    for r in records {
        agg.add(&r);
        w.serialize(Row::from(&r))?;
    }
    w.flush()?;
    Ok(agg.finish())
}

/// Writes `{"limit":..,"records":[..],"aggregate":{..}}`.
pub fn write_json(limit: u64, chunk: usize, out: &mut dyn Write) -> Result<Aggregate> {
    let records = scan(limit, chunk)?;
    let mut agg = Folder::new(limit);
    write!(out, "{{\"limit\":{limit},\"records\":[")?;
    for (i, r) in records.enumerate() {
        agg.add(&r);
        if i > 0 {
            out.write_all(b",")?;
        }
        serde_json::to_writer(&mut *out, &Row::from(&r))?;
    }
    let agg = agg.finish();
    let mean = agg.mean_count();
    let summary = serde_json::json!({
        "impolite_count": agg.impolite_count,
        "mean_count": { "num": mean.num, "den": mean.den },
        "max_count": { "n": agg.max_count.0, "count": agg.max_count.1 },
    });
    write!(out, "],\"aggregate\":{summary}}}")?;
    writeln!(out)?;
    Ok(agg)
}

/// Right-aligned columns; widths come from `limit` so rows stream without buffering.
pub fn write_table(limit: u64, chunk: usize, out: &mut dyn Write) -> Result<Aggregate> {
    let records = scan(limit, chunk)?;
    let w = limit.to_string().len().max(5);
    writeln!(
        out,
        "{:>w$}  {:>5}  {:>5}  {:>5}  {:>7}  {:>8}  power_of_two",
        "n", "total", "odd", "even", "longest", "shortest"
    )?;
    let mut agg = Folder::new(limit);
    for r in records {
        agg.add(&r);
        let shortest = r.shortest_nontrivial.map_or_else(|| "-".to_string(), |s| s.to_string());
        writeln!(
            out,
            "{:>w$}  {:>5}  {:>5}  {:>5}  {:>7}  {:>8}  {}",
            r.n, r.total_count, r.odd_count, r.even_count, r.longest, shortest, r.is_power_of_two
        )?;
    }
    Ok(agg.finish())
}

/// Incremental [`Aggregate`], matching [`aggregate_records`] without holding records.
struct Folder {
    agg: Aggregate,
}

impl Folder {
    fn new(limit: u64) -> Self {
        Folder { agg: aggregate_records(limit, std::iter::empty()).expect("limit already validated") }
    }

    fn add(&mut self, r: &ScanRecord) {
        let a = &mut self.agg;
        a.impolite_count += u64::from(r.total_count == 1);
        a.count_sum += r.total_count;
        if r.total_count > a.max_count.1 {
            a.max_count = (r.n, r.total_count);
        }
    }

    fn finish(self) -> Aggregate {
        self.agg
    }
}

pub fn run(
    limit: u64,
    chunk: usize,
    format: Format,
    path: Option<&Path>,
    summary: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<()> {
    let mut file;
    let sink: &mut dyn Write = match path {
        Some(p) => {
            file = BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?);
            &mut file
        }
        None => out,
    };
    let agg = match format {
        Format::Csv => write_csv(limit, chunk, sink)?,
        Format::Json => write_json(limit, chunk, sink)?,
        Format::Table => write_table(limit, chunk, sink)?,
    };
    sink.flush().context("flushing scan output")?;
    if summary {
        let mean = agg.mean_count();
        writeln!(
            err,
            "limit={} impolite={} mean={}/{} (~{:.6}) max_count={} at n={}",
            agg.limit,
            agg.impolite_count,
            mean.num,
            mean.den,
            mean.to_f64(),
            agg.max_count.1,
            agg.max_count.0
        )?;
    }
    Ok(())
}
