//! Running, resuming and replaying result sets.

use std::fs;

use rayon::prelude::*;

use quandary::evolution::{run_trial, Condition, EvolutionError, TrialRecord};
use quandary::engine::SessionTrace;

use crate::error::CliError;
use crate::results::{trial_csv, write_atomic, ResultSet};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunSummary {
    pub total: usize,
    pub already_done: usize,
    pub completed: usize,
}

fn evolve(rs: &ResultSet, condition: Condition, trial: usize) -> Result<TrialRecord, CliError> {
    let config = rs.plan.trial_config(condition, trial)?;
    run_trial(&config).map_err(|e| match e {
        EvolutionError::StuckBudgetExceeded { .. } => CliError::Stuck(vec![format!("{} trial {trial}", condition.id())]),
        other => CliError::Data(format!("{} trial {trial}: {other}", condition.id())),
    })
}

/// Prepares the output directory: stores the plan, or checks that the
/// stored one matches, and checks any existing manifest.
pub fn prepare(rs: &ResultSet) -> Result<(), CliError> {
    fs::create_dir_all(&rs.root).map_err(CliError::io(&rs.root))?;
    let text = rs.plan.to_text();
    match fs::read_to_string(rs.plan_path()) {
        Ok(existing) if existing == text => {}
        Ok(_) => {
            return Err(CliError::Data(format!(
                "{}: result set was produced by a different plan; use a fresh output directory",
                rs.plan_path().display()
            )))
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => write_atomic(&rs.plan_path(), text.as_bytes())?,
        Err(e) => return Err(CliError::io(rs.plan_path())(e)),
    }
    rs.verify_manifest()?;
    Ok(())
}

/// Runs every cell without a shard, then rewrites the manifest from disk.
/// `limit` caps how many new cells are run in this call.
pub fn run(rs: &ResultSet, limit: Option<usize>) -> Result<RunSummary, CliError> {
    prepare(rs)?;
    let cells = rs.cells();
    let mut pending = Vec::new();
    for &(condition, trial) in &cells {
        if rs.read_cell(&condition, trial)?.is_none() {
            pending.push((condition, trial));
        }
    }
    let already_done = cells.len() - pending.len();
    pending.truncate(limit.unwrap_or(usize::MAX));
    let results: Vec<Result<(), CliError>> = pending
        .par_iter()
        .map(|&(condition, trial)| {
            let record = evolve(rs, condition, trial)?;
            rs.write_cell(&record, trial)
        })
        .collect();
    let manifest = rs.scan_manifest()?;
    write_atomic(&rs.manifest_path(), manifest.to_text().as_bytes())?;

    let mut stuck = Vec::new();
    let mut completed = 0;
    for r in results {
        match r {
            Ok(()) => completed += 1,
            Err(CliError::Stuck(cells)) => stuck.extend(cells),
            Err(e) => return Err(e),
        }
    }
    if !stuck.is_empty() {
        return Err(CliError::Stuck(stuck));
    }
    Ok(RunSummary {
        total: cells.len(),
        already_done,
        completed,
    })
}

pub struct Replay {
    pub record: TrialRecord,
    pub csv: String,
    pub trace: Option<SessionTrace>,
}

/// Regenerates one cell from its derived seed.
pub fn replay(rs: &ResultSet, condition: Condition, trial: usize, with_trace: bool) -> Result<Replay, CliError> {
    if !rs.plan.conditions().contains(&condition) || trial >= rs.plan.trials_per_condition {
        return Err(CliError::Data(format!("unknown cell: {} trial {trial}", condition.id())));
    }
    let record = evolve(rs, condition, trial)?;
    let csv = trial_csv(&record, trial);
    let trace = if with_trace {
        let scenario = rs.plan.trial_config(condition, trial)?.scenario;
        Some(scenario.trace(&record.final_genome).map_err(|e| CliError::Data(e.to_string()))?)
    } else {
        None
    };
    Ok(Replay { record, csv, trace })
}
