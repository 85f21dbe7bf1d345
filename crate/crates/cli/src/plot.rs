//! Splits a sweep CSV into one file per subfigure: a fixed `(rho2, ss1, sn2)`
//! with one series per `ss2` over the power axis.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::sweep::CSV_HEADER;
use crate::CliError;

pub const PLOT_HEADER: [&str; 5] = ["ss2", "power", "r_alpha", "r_alpha_ub", "r_beta"];

/// Optional filters on the subfigure keys; `None` matches everything.
#[derive(Debug, Clone, Copy, Default)]
pub struct Selector {
    pub rho2: Option<f64>,
    pub ss1: Option<f64>,
    pub sn2: Option<f64>,
}

impl std::fmt::Display for Selector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = [("rho2", self.rho2), ("ss1", self.ss1), ("sn2", self.sn2)]
            .iter()
            .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
            .collect();
        if parts.is_empty() {
            f.write_str("(all)")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

fn matches(want: Option<f64>, got: f64) -> bool {
    want.is_none_or(|w| (w - got).abs() <= 1e-12 * w.abs().max(got.abs()))
}

struct Row {
    fields: Vec<String>,
    ss2: f64,
    power: f64,
}

fn col(name: &str) -> usize {
    CSV_HEADER
        .iter()
        .position(|h| *h == name)
        .expect("known column")
}

fn parse(field: &str, what: &str, line: usize) -> Result<f64, CliError> {
    field
        .parse()
        .map_err(|_| CliError::Usage(format!("line {line}: {what} = {field:?} is not a number")))
}

/// Writes the selected subfigure files into `out_dir` and returns their
/// paths in key order.
/// Raw (rho2, ss1, sn2) text plus the subfigure's rows.
type Group = (String, String, String, Vec<Row>);

pub fn cmd_plotdata(input: &Path, out_dir: &Path, sel: Selector) -> Result<Vec<PathBuf>, CliError> {
    let mut rdr = csv::Reader::from_path(input)
        .map_err(|e| CliError::io(format!("reading {}", input.display()), e.into()))?;
    let header = rdr
        .headers()
        .map_err(|e| CliError::io(format!("reading {}", input.display()), e.into()))?;
    if header.iter().collect::<Vec<_>>() != CSV_HEADER {
        return Err(CliError::Usage(format!(
            "{} is not a sweep CSV (unexpected header)",
            input.display()
        )));
    }

    // keyed by the raw text of (rho2, ss1, sn2) so file names reuse the
    // sweep's own number formatting
    let mut groups: BTreeMap<(u64, u64, u64), Group> = BTreeMap::new();
    for (i, rec) in rdr.records().enumerate() {
        let line = i + 2;
        let rec = rec.map_err(|e| CliError::Usage(format!("line {line}: {e}")))?;
        let get = |name: &str| rec.get(col(name)).unwrap_or("").to_string();
        let rho2 = parse(&get("rho2"), "rho2", line)?;
        let ss1 = parse(&get("ss1"), "ss1", line)?;
        let sn2 = parse(&get("sn2"), "sn2", line)?;
        if !(matches(sel.rho2, rho2) && matches(sel.ss1, ss1) && matches(sel.sn2, sn2)) {
            continue;
        }
        let row = Row {
            fields: PLOT_HEADER.iter().map(|h| get(h)).collect(),
            ss2: parse(&get("ss2"), "ss2", line)?,
            power: parse(&get("power"), "power", line)?,
        };
        groups
            .entry((rho2.to_bits(), ss1.to_bits(), sn2.to_bits()))
            .or_insert_with(|| (get("rho2"), get("ss1"), get("sn2"), Vec::new()))
            .3
            .push(row);
    }
    if groups.is_empty() {
        return Err(CliError::Domain(format!(
            "selector {sel} matches no rows of {}",
            input.display()
        )));
    }

    std::fs::create_dir_all(out_dir)
        .map_err(|e| CliError::io(format!("creating {}", out_dir.display()), e))?;
    let mut written = Vec::new();
    for (rho2, ss1, sn2, mut rows) in groups.into_values() {
        rows.sort_by(|a, b| a.ss2.total_cmp(&b.ss2).then(a.power.total_cmp(&b.power)));
        let path = out_dir.join(format!("rho2_{rho2}_ss1_{ss1}_sn2_{sn2}.csv"));
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_path(&path)
            .map_err(|e| CliError::io(format!("creating {}", path.display()), e.into()))?;
        let io = |e: csv::Error| CliError::io("writing plot data", e.into());
        w.write_record(PLOT_HEADER).map_err(io)?;
        for r in &rows {
            w.write_record(&r.fields).map_err(io)?;
        }
        w.flush()
            .map_err(|e| CliError::io("writing plot data", e))?;
        written.push(path);
    }
    Ok(written)
}
