//! Solution-space sampling tables.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use quandary::evolution::Condition;
use quandary::sampling::{sample_cells, SampleSpec};
use quandary::seed::derive_seed;

use crate::error::CliError;
use crate::plan::Plan;
use crate::results::{condition_fields, fmt_float};

pub const SAMPLE_COLUMNS: &[&str] = &[
    "game_id",
    "attack_kind",
    "start_scheme",
    "friendly_fire",
    "origin",
    "gene_count",
    "samples",
    "qualifying",
    "threshold",
    "rate",
    "wilson_low",
    "wilson_high",
];

pub const DEFAULT_SAMPLES: usize = 1 << 16;

/// One representative condition per game (regime is irrelevant here).
pub fn games(plan: &Plan) -> Vec<Condition> {
    let mut seen = BTreeSet::new();
    plan.conditions().into_iter().filter(|c| seen.insert(c.game_id())).collect()
}

/// Samples every game in the plan and returns the CSV text.
pub fn sample_table(plan: &Plan, gene_counts: &[usize], samples: usize, thresholds: &[f64]) -> Result<String, CliError> {
    if gene_counts.is_empty() || gene_counts.contains(&0) {
        return Err(CliError::Usage("gene counts must be a non-empty list of positive integers".into()));
    }
    if samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    if thresholds.is_empty() || thresholds.iter().any(|t| !(0.0..=1.0).contains(t)) {
        return Err(CliError::Usage("thresholds must lie in [0, 1]".into()));
    }
    let mut out = SAMPLE_COLUMNS.join(",");
    out.push('\n');
    for game in games(plan) {
        let spec = SampleSpec {
            scenario: plan.scenario(game.attack_kind, game.friendly_fire, 0)?,
            start_scheme: game.start_scheme,
            origin: game.origin,
            gene_length: plan.gene_length,
        };
        let seed = derive_seed(plan.master_seed, &format!("sample-{}", game.game_id()), 0);
        let cells = sample_cells(&spec, gene_counts, samples, thresholds, seed).map_err(|e| CliError::Data(e.to_string()))?;
        let f = condition_fields(&game);
        for c in cells {
            let (low, high) = c.wilson95();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                game.game_id(),
                f[1],
                f[2],
                f[3],
                f[4],
                c.gene_count,
                c.samples,
                c.qualifying,
                fmt_float(c.threshold),
                fmt_float(c.rate()),
                fmt_float(low),
                fmt_float(high)
            )
            .expect("writing to a String");
        }
    }
    Ok(out)
}
