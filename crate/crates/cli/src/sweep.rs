//! Sweep execution and its CSV / manifest output.
//!
//! Rows are computed on a worker pool but collected in grid order, and every
//! float is written in shortest round-trip form, so the CSV is a pure
//! function of the spec. Wall time is the only nondeterministic quantity and
//! is written only on request.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use isac_rates::quadrature::QuadratureConfig;
use isac_rates::rates::{compute_rates, RateBreakdown, RateFailure, RateOptions};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::spec::{GridPoint, SweepSpec};
use crate::CliError;

pub const CSV_HEADER: [&str; 17] = [
    "rho2",
    "sn1",
    "sn2",
    "ss1",
    "ss2",
    "power",
    "part_a",
    "part_b",
    "part_b_ub",
    "r_beta",
    "r_alpha",
    "r_alpha_ub",
    "achievable",
    "achievable_ub",
    "status",
    "err_est",
    "ms",
];

/// Bumped whenever the column set or its meaning changes.
pub const CSV_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub point: GridPoint,
    pub outcome: Result<RateBreakdown, RateFailure>,
    pub ms: Option<f64>,
}

impl SweepRow {
    pub fn status(&self) -> &'static str {
        match &self.outcome {
            Ok(r) if r.degraded => "ok",
            Ok(_) => "ok_nondegraded",
            Err(f) => match f.error {
                isac_rates::rates::RateError::NotDegraded { .. } => "not_degraded",
                ref e if e.is_domain() => "domain_error",
                _ => "numerical_error",
            },
        }
    }

    pub fn failed(&self) -> bool {
        self.outcome.is_err()
    }

    fn record(&self) -> Vec<String> {
        let p = &self.point;
        let mut rec: Vec<String> = [p.rho2, p.sn1, p.sn2, p.ss1, p.ss2, p.power]
            .iter()
            .map(|v| num(Some(*v)))
            .collect();
        let cols = match &self.outcome {
            Ok(r) => [
                Some(r.part_a),
                r.part_b,
                Some(r.part_b_ub),
                Some(r.r_beta),
                r.r_alpha,
                Some(r.r_alpha_ub),
                r.achievable,
                Some(r.achievable_ub),
            ],
            Err(f) => {
                let q = f.partial;
                [
                    q.part_a,
                    q.part_b,
                    q.part_b_ub,
                    q.part_c,
                    None,
                    None,
                    None,
                    None,
                ]
            }
        };
        rec.extend(cols.iter().map(|v| num(*v)));
        rec.push(self.status().to_string());
        rec.push(num(self.outcome.as_ref().ok().map(|r| r.err_est)));
        rec.push(num(self.ms));
        rec
    }
}

/// Shortest representation that parses back to the same `f64`.
fn num(v: Option<f64>) -> String {
    v.map(|x| format!("{x:?}")).unwrap_or_default()
}

pub fn rate_options(spec: &SweepSpec) -> RateOptions {
    RateOptions {
        mode: spec.mode,
        with_part_b: spec.with_part_b,
        allow_nondegraded: spec.allow_nondegraded,
    }
}

/// Evaluates every point on `pool`; the result is in input order.
pub fn run_points(
    points: &[GridPoint],
    cfg: &QuadratureConfig,
    opts: &RateOptions,
    pool: &rayon::ThreadPool,
    record_timing: bool,
) -> Vec<SweepRow> {
    pool.install(|| {
        points
            .par_iter()
            .map(|point| {
                let start = Instant::now();
                // grid points were validated when the spec was resolved
                let c = point.channel().expect("resolved points are valid");
                let outcome = compute_rates(&c, cfg, opts);
                let ms = record_timing.then(|| start.elapsed().as_secs_f64() * 1e3);
                SweepRow {
                    point: point.clone(),
                    outcome,
                    ms,
                }
            })
            .collect()
    })
}

pub fn write_csv<W: Write>(out: W, rows: &[SweepRow]) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let io = |e: csv::Error| CliError::io("writing CSV", e.into());
    w.write_record(CSV_HEADER).map_err(io)?;
    for row in rows {
        w.write_record(row.record()).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::io("writing CSV", e))?;
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FailureNote {
    pub row: usize,
    pub point: String,
    pub status: String,
    pub error: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResolvedGrid {
    pub rho2: Vec<f64>,
    pub sn1: Vec<f64>,
    pub sn2: Vec<f64>,
    pub ss1: Vec<f64>,
    pub ss2_rules: Vec<String>,
    pub power: Vec<f64>,
    pub rows: usize,
}

/// Companion record of a sweep. Holds the full spec, so feeding the
/// manifest back to `sweep --spec` reproduces the CSV.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub csv_schema_version: u32,
    pub csv_header: String,
    pub seed: u64,
    pub mode: String,
    pub with_part_b: bool,
    pub tolerances: QuadratureConfig,
    pub grid: ResolvedGrid,
    pub spec: SweepSpec,
    pub failures: Vec<FailureNote>,
}

impl Manifest {
    pub fn new(spec: &SweepSpec, rows: &[SweepRow]) -> Result<Self, CliError> {
        let failures = rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                r.outcome.as_ref().err().map(|f| FailureNote {
                    row: i,
                    point: r.point.label(),
                    status: r.status().to_string(),
                    error: f.error.to_string(),
                })
            })
            .collect();
        Ok(Self {
            tool: "isac-rates".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            csv_schema_version: CSV_SCHEMA_VERSION,
            csv_header: CSV_HEADER.join(","),
            seed: spec.seed,
            mode: spec.mode.to_string(),
            with_part_b: spec.with_part_b,
            tolerances: spec.quadrature,
            grid: ResolvedGrid {
                rho2: spec.rho2.clone(),
                sn1: spec.sn1.clone(),
                sn2: spec.sn2.clone(),
                ss1: spec.ss1.clone(),
                ss2_rules: spec.ss2.iter().map(|r| r.to_string()).collect(),
                power: spec.power.resolve()?,
                rows: rows.len(),
            },
            spec: spec.clone(),
            failures,
        })
    }
}

/// `results.csv` -> `results.manifest.json`.
pub fn manifest_path(csv: &Path) -> PathBuf {
    csv.with_extension("manifest.json")
}

pub struct SweepSummary {
    pub rows: usize,
    pub failed: usize,
    pub numerical_failures: usize,
}

/// Resolves `spec`, runs it and writes the CSV plus manifest. Returns an
/// error (with the files still written) if any row failed.
pub fn cmd_sweep(
    spec: &SweepSpec,
    out_csv: &Path,
    pool: &rayon::ThreadPool,
    record_timing: bool,
) -> Result<SweepSummary, CliError> {
    let points = spec.resolve()?;
    let rows = run_points(
        &points,
        &spec.quadrature,
        &rate_options(spec),
        pool,
        record_timing,
    );

    let file = std::fs::File::create(out_csv)
        .map_err(|e| CliError::io(format!("creating {}", out_csv.display()), e))?;
    write_csv(std::io::BufWriter::new(file), &rows)?;
    let manifest = Manifest::new(spec, &rows)?;
    let mpath = manifest_path(out_csv);
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    std::fs::write(&mpath, json + "\n")
        .map_err(|e| CliError::io(format!("writing {}", mpath.display()), e))?;

    let failed = rows.iter().filter(|r| r.failed()).count();
    let numerical = rows
        .iter()
        .filter(|r| r.status() == "numerical_error")
        .count();
    let summary = SweepSummary {
        rows: rows.len(),
        failed,
        numerical_failures: numerical,
    };
    if numerical > 0 {
        Err(CliError::Numerical(format!(
            "{failed} of {} rows failed ({numerical} numerical); see {}",
            rows.len(),
            mpath.display()
        )))
    } else if failed > 0 {
        Err(CliError::Domain(format!(
            "{failed} of {} rows failed; see {}",
            rows.len(),
            mpath.display()
        )))
    } else {
        Ok(summary)
    }
}
