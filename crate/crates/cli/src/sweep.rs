//! Parameter sweep tables, one file per sweep kind under `<out>/sweeps/`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use quandary::evolution::{run_sweep_cells, EvolutionError, SweepKind};

use crate::error::CliError;
use crate::plan::Plan;
use crate::results::{condition_fields, fmt_float, write_atomic};

pub const SWEEP_COLUMNS: &[&str] = &[
    "kind",
    "condition_id",
    "attack_kind",
    "start_scheme",
    "friendly_fire",
    "origin",
    "regime",
    "rate",
    "generations",
    "trial",
    "gene_count",
    "restarts",
];

pub fn parse_kind(s: &str) -> Option<SweepKind> {
    match s {
        "gene_event_rate" => Some(SweepKind::GeneEventRate),
        "point_rate" => Some(SweepKind::PointRate),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub kind: String,
    /// The six condition columns, comma-joined.
    pub condition_fields: String,
    pub rate: String,
    pub generations: usize,
    pub trial: usize,
    pub gene_count: usize,
}

pub fn parse_sweep(text: &str) -> Result<Vec<SweepRow>, String> {
    let mut lines = text.lines();
    if lines.next() != Some(SWEEP_COLUMNS.join(",").as_str()) {
        return Err("header does not match the sweep schema".into());
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let f: Vec<&str> = line.split(',').collect();
            let bad = || format!("row {}: malformed", i + 1);
            if f.len() != SWEEP_COLUMNS.len() || parse_kind(f[0]).is_none() {
                return Err(bad());
            }
            Ok(SweepRow {
                kind: f[0].to_string(),
                condition_fields: f[1..7].join(","),
                rate: f[7].to_string(),
                generations: f[8].parse().map_err(|_| bad())?,
                trial: f[9].parse().map_err(|_| bad())?,
                gene_count: f[10].parse().map_err(|_| bad())?,
            })
        })
        .collect()
}

/// Runs the sweep grid of `kind` for every condition of the plan with
/// `plan.trials_per_condition` trials per cell.
pub fn sweep_table(plan: &Plan, kind: SweepKind) -> Result<String, CliError> {
    let mut out = SWEEP_COLUMNS.join(",");
    out.push('\n');
    let mut stuck = Vec::new();
    for condition in plan.conditions() {
        let base = plan.trial_config(condition, 0)?;
        let table = match run_sweep_cells(kind, &base, &kind.grid(), plan.trials_per_condition, plan.master_seed) {
            Ok(t) => t,
            Err(EvolutionError::StuckBudgetExceeded { .. }) => {
                stuck.push(condition.id());
                continue;
            }
            Err(e) => return Err(CliError::Data(format!("{}: {e}", condition.id()))),
        };
        let fields = condition_fields(&condition).join(",");
        for cell in &table.cells {
            for (trial, g) in cell.gene_counts.iter().enumerate() {
                writeln!(
                    out,
                    "{},{fields},{},{},{trial},{g},{}",
                    kind.name(),
                    fmt_float(cell.rate),
                    cell.generations,
                    cell.restarts
                )
                .expect("writing to a String");
            }
        }
    }
    if !stuck.is_empty() {
        return Err(CliError::Stuck(stuck));
    }
    Ok(out)
}

pub fn sweep_path(root: &Path, kind: SweepKind) -> PathBuf {
    root.join("sweeps").join(format!("{}.csv", kind.name()))
}

pub fn write_sweep(root: &Path, plan: &Plan, kind: SweepKind) -> Result<PathBuf, CliError> {
    let text = sweep_table(plan, kind)?;
    let path = sweep_path(root, kind);
    let dir = path.parent().expect("sweep files live in a directory");
    std::fs::create_dir_all(dir).map_err(CliError::io(dir))?;
    write_atomic(&path, text.as_bytes())?;
    Ok(path)
}
