//! The run-record CSV format.
//!
//! ```text
//! variant,run,seed,evaluations,best_fitness,success,runtime_ms
//! RS,0,1234,4000,0.0097159098,0,12.5
//! ```
//!
//! Reals are written with Rust's shortest round-trip formatting, so
//! reading a file back yields bit-identical values.

use std::io::{Read, Write};

use psolab_core::experiment::{table1_column, TABLE1_BUDGET};
use psolab_core::{ExperimentResult, RunRecord, SampleGroup, Variant};
use thiserror::Error;

pub const HEADER: [&str; 7] = [
    "variant",
    "run",
    "seed",
    "evaluations",
    "best_fitness",
    "success",
    "runtime_ms",
];

#[derive(Debug, Error)]
pub enum RecordError {
    #[error("line {line}: {message}")]
    Malformed { line: u64, message: String },
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunCsvRow {
    pub variant: String,
    pub run: usize,
    pub seed: u64,
    pub evaluations: u64,
    pub best_fitness: f64,
    pub success: bool,
    pub runtime_ms: f64,
}

impl From<&RunRecord> for RunCsvRow {
    fn from(r: &RunRecord) -> Self {
        RunCsvRow {
            variant: r.variant.label().to_string(),
            run: r.run_index,
            seed: r.seed,
            evaluations: r.evaluations,
            best_fitness: r.best_fitness,
            success: r.success,
            runtime_ms: r.runtime.as_secs_f64() * 1e3,
        }
    }
}

pub fn rows_from_experiment(result: &ExperimentResult) -> Vec<RunCsvRow> {
    result.records().map(RunCsvRow::from).collect()
}

/// The published fixture as rows. Fitness and runtime are not part of the
/// fixture and are written as 0; success means the run ended under budget.
pub fn fixture_rows() -> Vec<RunCsvRow> {
    Variant::ALL
        .iter()
        .flat_map(|&v| {
            table1_column(v)
                .into_iter()
                .enumerate()
                .map(move |(run, evals)| RunCsvRow {
                    variant: v.label().to_string(),
                    run,
                    seed: 0,
                    evaluations: u64::from(evals),
                    best_fitness: 0.0,
                    success: evals < TABLE1_BUDGET,
                    runtime_ms: 0.0,
                })
        })
        .collect()
}

pub fn write_rows<W: Write>(out: W, rows: &[RunCsvRow]) -> Result<(), RecordError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        w.write_record([
            r.variant.clone(),
            r.run.to_string(),
            r.seed.to_string(),
            r.evaluations.to_string(),
            r.best_fitness.to_string(),
            u8::from(r.success).to_string(),
            r.runtime_ms.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_rows<R: Read>(input: R) -> Result<Vec<RunCsvRow>, RecordError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(input);
    let mut records = reader.records();

    match records.next() {
        None => {
            return Err(RecordError::Malformed {
                line: 1,
                message: "empty file, expected header".into(),
            })
        }
        Some(header) => {
            let header = header?;
            if header.iter().ne(HEADER) {
                return Err(RecordError::Malformed {
                    line: 1,
                    message: format!("expected header '{}'", HEADER.join(",")),
                });
            }
        }
    }

    let mut rows = Vec::new();
    for rec in records {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line());
        let bad = |message: String| RecordError::Malformed { line, message };
        if rec.len() != HEADER.len() {
            return Err(bad(format!(
                "expected {} fields, found {}",
                HEADER.len(),
                rec.len()
            )));
        }
        fn field<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize) -> Result<T, String> {
            rec[i]
                .trim()
                .parse()
                .map_err(|_| format!("invalid {} '{}'", HEADER[i], &rec[i]))
        }
        let success = match rec[5].trim() {
            "0" => false,
            "1" => true,
            other => return Err(bad(format!("invalid success '{other}' (expected 0 or 1)"))),
        };
        let variant = rec[0].trim().to_string();
        if variant.is_empty() {
            return Err(bad("empty variant".into()));
        }
        rows.push(RunCsvRow {
            variant,
            run: field(&rec, 1).map_err(bad)?,
            seed: field(&rec, 2).map_err(bad)?,
            evaluations: field(&rec, 3).map_err(bad)?,
            best_fitness: field(&rec, 4).map_err(bad)?,
            success,
            runtime_ms: field(&rec, 6).map_err(bad)?,
        });
    }
    Ok(rows)
}

/// Evaluation counts grouped by variant label, in order of first
/// appearance. Groups with fewer than two rows are reported as errors.
pub fn sample_groups(rows: &[RunCsvRow]) -> Result<Vec<SampleGroup>, psolab_core::StatsError> {
    let mut labels: Vec<&str> = Vec::new();
    let mut values: Vec<Vec<f64>> = Vec::new();
    for r in rows {
        let idx = match labels.iter().position(|l| *l == r.variant) {
            Some(i) => i,
            None => {
                labels.push(&r.variant);
                values.push(Vec::new());
                labels.len() - 1
            }
        };
        values[idx].push(r.evaluations as f64);
    }
    labels
        .into_iter()
        .zip(values)
        .map(|(l, v)| SampleGroup::new(l, v))
        .collect()
}
