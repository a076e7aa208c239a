//! Complexity and capability measurements on genomes.
//!
//! The last-on-the-bus (LotB) contribution of a gene is the score of the
//! whole team minus the score of the team without that gene's character.
//! Removal keeps every other character's start position and relative
//! priority, and the session is replayed from scratch.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arena::Scenario;
use crate::engine::{Direction, EngineError, GridConfig, OpponentConfig, OpponentSpec, Position, Score};
use crate::evolution::{next_generation, EvolutionError, Individual, Phase, TrialConfig};
use crate::genome::Genome;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricsError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Evolution(#[from] EvolutionError),
    #[error("gene index {index} out of range for {len} genes")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("cannot place {count} opponents: only {free} free squares")]
    Capacity { count: usize, free: usize },
    #[error("{0} must be at least 1")]
    NonPositive(&'static str),
    #[error("no opponent configurations given")]
    NoConfigs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneContribution {
    pub gene_index: usize,
    pub lotb: Score,
    pub essential: bool,
}

fn score_without(genome: &Genome, index: usize, scenario: &Scenario) -> Result<Score, EngineError> {
    scenario.score_genes(
        genome
            .genes()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, g)| g),
    )
}

pub fn lotb(genome: &Genome, gene_index: usize, scenario: &Scenario) -> Result<Score, MetricsError> {
    if gene_index >= genome.len() {
        return Err(MetricsError::IndexOutOfRange {
            index: gene_index,
            len: genome.len(),
        });
    }
    let full = scenario.score(genome)?;
    Ok(full - score_without(genome, gene_index, scenario)?)
}

/// LotB of every gene given an already computed full-team score.
pub fn contributions_with_score(
    genome: &Genome,
    full_score: Score,
    scenario: &Scenario,
) -> Result<Vec<GeneContribution>, EngineError> {
    (0..genome.len())
        .map(|i| {
            let lotb = full_score - score_without(genome, i, scenario)?;
            Ok(GeneContribution {
                gene_index: i,
                lotb,
                essential: lotb > 0,
            })
        })
        .collect()
}

pub fn contributions(genome: &Genome, scenario: &Scenario) -> Result<Vec<GeneContribution>, MetricsError> {
    let full = scenario.score(genome)?;
    Ok(contributions_with_score(genome, full, scenario)?)
}

pub fn mean_lotb(genome: &Genome, scenario: &Scenario) -> Result<f64, MetricsError> {
    let c = contributions(genome, scenario)?;
    Ok(c.iter().map(|c| c.lotb as f64).sum::<f64>() / c.len() as f64)
}

/// Number of genes with a strictly positive LotB contribution.
pub fn essential_count(genome: &Genome, scenario: &Scenario) -> Result<usize, MetricsError> {
    Ok(contributions(genome, scenario)?.iter().filter(|c| c.essential).count())
}

/// Mean score over `reps` independently point-mutated copies.
pub fn robustness<R: Rng + ?Sized>(
    genome: &Genome,
    scenario: &Scenario,
    point_rate: f64,
    reps: usize,
    rng: &mut R,
) -> Result<f64, MetricsError> {
    if reps == 0 {
        return Err(MetricsError::NonPositive("reps"));
    }
    let mut total = 0.0;
    for _ in 0..reps {
        let mut copy = genome.clone();
        copy.mutate(point_rate, rng);
        total += scenario.score(&copy)? as f64;
    }
    Ok(total / reps as f64)
}

/// Mean score across a shared batch of opponent configurations.
pub fn plasticity(genome: &Genome, configs: &[OpponentConfig], scenario: &Scenario) -> Result<f64, MetricsError> {
    if configs.is_empty() {
        return Err(MetricsError::NoConfigs);
    }
    let mut total = 0.0;
    for opponents in configs {
        total += scenario.with_opponents(opponents.clone()).score(genome)? as f64;
    }
    Ok(total / configs.len() as f64)
}

/// Evolves `rounds` independent lineages for `horizon` neutral generations
/// under the trial's own regime and gene events, then averages the
/// plasticity of the endpoints.
pub fn evolvability<R: Rng + ?Sized>(
    genome: &Genome,
    config: &TrialConfig,
    configs: &[OpponentConfig],
    rounds: usize,
    horizon: usize,
    rng: &mut R,
) -> Result<f64, MetricsError> {
    if rounds == 0 {
        return Err(MetricsError::NonPositive("rounds"));
    }
    let score = config.scenario.score(genome)?;
    let mut total = 0.0;
    for _ in 0..rounds {
        let mut lineage_rng = ChaCha8Rng::seed_from_u64(rng.random());
        let mut population = vec![Individual {
            genome: genome.clone(),
            score,
        }];
        for generation in 1..=horizon {
            population = next_generation(&population, config, Phase::Neutral, generation, &mut lineage_rng)?;
        }
        total += plasticity(&population[0].genome, configs, &config.scenario)?;
    }
    Ok(total / rounds as f64)
}

/// Uniform opponents off the numbered start corners, with uniform fire
/// directions. Positions may coincide.
pub fn random_opponents<R: Rng + ?Sized>(
    count: usize,
    grid: &GridConfig,
    health: u32,
    rng: &mut R,
) -> Result<OpponentConfig, MetricsError> {
    if count == 0 {
        return Err(MetricsError::NonPositive("count"));
    }
    let corners = grid.corners();
    let free = grid.size * grid.size - 4;
    if count > free {
        return Err(MetricsError::Capacity { count, free });
    }
    let n = grid.size as i32;
    let mut opponents = Vec::with_capacity(count);
    while opponents.len() < count {
        let position = Position::new(rng.random_range(0..n), rng.random_range(0..n));
        if corners.contains(&position) {
            continue;
        }
        let fire_direction = Direction::ALL[rng.random_range(0..4)];
        opponents.push(OpponentSpec {
            position,
            fire_direction,
            health,
        });
    }
    Ok(OpponentConfig::new(opponents))
}

/// A batch of random configurations from a dedicated seed, shared across
/// every genome in one analysis so comparisons are paired.
pub fn opponent_batch(
    seed: u64,
    batch: usize,
    count: usize,
    grid: &GridConfig,
    health: u32,
) -> Result<Vec<OpponentConfig>, MetricsError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..batch).map(|_| random_opponents(count, grid, health, &mut rng)).collect()
}
