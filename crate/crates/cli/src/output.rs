//! CSV and JSON rendering. Everything is rendered into memory first so a
//! failed write never leaves a partial file behind a successful exit code.

use std::io::Write;
use std::path::Path;

use dipcorr::analysis::{EventSet, TimeSeries};
use serde::Serialize;

use crate::error::CliError;

pub const SERIES_COLUMNS: [&str; 13] = [
    "tau",
    "a",
    "b",
    "c",
    "mutual_info",
    "discord",
    "discord_branch",
    "mid",
    "mid_degenerate",
    "classical",
    "concurrence",
    "pop_sym",
    "pop_antisym",
];

/// Twelve significant digits; negative zero prints as zero.
pub fn num(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

fn opt_num(x: Option<f64>) -> String {
    x.map_or_else(|| "none".to_string(), num)
}

#[derive(Serialize)]
struct SeriesRow {
    tau: f64,
    a: f64,
    b: f64,
    c: f64,
    mutual_info: f64,
    discord: f64,
    discord_branch: Option<String>,
    mid: f64,
    mid_degenerate: bool,
    classical: f64,
    concurrence: f64,
    pop_sym: f64,
    pop_antisym: f64,
}

fn rows(series: &TimeSeries) -> impl Iterator<Item = SeriesRow> + '_ {
    (0..series.len()).map(|k| {
        let (co, r, p) = (&series.coefficients[k], &series.reports[k], &series.populations[k]);
        SeriesRow {
            tau: series.taus[k],
            a: co.a,
            b: co.b,
            c: co.c,
            mutual_info: r.mutual_info,
            discord: r.discord,
            discord_branch: r.discord_branch.map(|b| b.to_string()),
            mid: r.mid,
            mid_degenerate: r.mid_degenerate,
            classical: r.classical,
            concurrence: r.concurrence,
            pop_sym: p.symmetric,
            pop_antisym: p.antisymmetric,
        }
    })
}

/// Coupling constants echoed above the data when they were derived from
/// geometry.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Derived {
    pub gamma: f64,
    pub omega: f64,
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<Vec<u8>, CliError> {
    w.into_inner().map_err(|e| CliError::Io(e.to_string()))
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Io(e.to_string())
}

pub fn series_csv(series: &TimeSeries, derived: Option<Derived>) -> Result<Vec<u8>, CliError> {
    let mut out = Vec::new();
    if let Some(d) = derived {
        writeln!(out, "# gamma={} omega={}", num(d.gamma), num(d.omega)).map_err(|e| CliError::Io(e.to_string()))?;
    }
    let mut w = csv_writer();
    w.write_record(SERIES_COLUMNS).map_err(csv_err)?;
    for r in rows(series) {
        w.write_record([
            num(r.tau),
            num(r.a),
            num(r.b),
            num(r.c),
            num(r.mutual_info),
            num(r.discord),
            r.discord_branch.unwrap_or_default(),
            num(r.mid),
            r.mid_degenerate.to_string(),
            num(r.classical),
            num(r.concurrence),
            num(r.pop_sym),
            num(r.pop_antisym),
        ])
        .map_err(csv_err)?;
    }
    out.extend(finish(w)?);
    Ok(out)
}

pub fn series_json(series: &TimeSeries, derived: Option<Derived>) -> Result<Vec<u8>, CliError> {
    #[derive(Serialize)]
    struct Doc {
        gamma: f64,
        #[serde(skip_serializing_if = "Option::is_none")]
        derived: Option<Derived>,
        rows: Vec<SeriesRow>,
    }
    let doc = Doc {
        gamma: series.gamma,
        derived,
        rows: rows(series).collect(),
    };
    json(&doc)
}

pub fn json<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut out = serde_json::to_vec_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

pub fn onset_csv(table: &[(f64, Option<f64>)]) -> Result<Vec<u8>, CliError> {
    let mut w = csv_writer();
    w.write_record(["gamma", "tau_e"]).map_err(csv_err)?;
    for &(gamma, tau) in table {
        w.write_record([num(gamma), opt_num(tau)]).map_err(csv_err)?;
    }
    finish(w)
}

pub fn coupling_csv(d: Derived) -> Result<Vec<u8>, CliError> {
    let mut w = csv_writer();
    w.write_record(["gamma", "omega"]).map_err(csv_err)?;
    w.write_record([num(d.gamma), num(d.omega)]).map_err(csv_err)?;
    finish(w)
}

pub fn events_csv(events: &[EventSet]) -> Result<Vec<u8>, CliError> {
    let mut w = csv_writer();
    w.write_record([
        "gamma",
        "onset_tau",
        "degeneracy_tau",
        "mid_discord_start",
        "mid_discord_end",
        "decay_rate",
    ])
    .map_err(csv_err)?;
    for e in events {
        w.write_record([
            num(e.gamma),
            opt_num(e.onset_tau),
            num(e.degeneracy_tau),
            opt_num(e.mid_discord.map(|r| r.start())),
            opt_num(e.mid_discord.map(|r| r.end())),
            opt_num(e.decay_rate),
        ])
        .map_err(csv_err)?;
    }
    finish(w)
}

/// Writes `bytes` to `path`, or to stdout when no path is given.
pub fn emit(bytes: &[u8], path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}
