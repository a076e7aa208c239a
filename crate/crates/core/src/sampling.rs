//! Random sampling of sequence space by gene count.
//!
//! For each gene count `k`, random `k`-gene genomes are scored and the ones
//! reaching `threshold × max score` are counted. Under duplication a single
//! random gene is copied `k` times, matching how duplicated genomes arise
//! during evolution; the copies share one start position under the random
//! scheme because duplicates inherit their source's position.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arena::Scenario;
use crate::engine::{EngineError, Score};
use crate::genome::{resolve_start, Gene, GeneOrigin, Genome, StartScheme};
use crate::seed::derive_seed;
use crate::stats::{ks_two_sample, wilson_interval, StatResult, StatsError, Z_95};

#[derive(Clone, Debug, PartialEq)]
pub struct SampleSpec {
    pub scenario: Scenario,
    pub start_scheme: StartScheme,
    pub origin: GeneOrigin,
    pub gene_length: usize,
}

/// Draws one random `k`-gene genome.
pub fn random_genome<R: Rng + ?Sized>(spec: &SampleSpec, k: usize, rng: &mut R) -> Genome {
    assert!(k >= 1, "gene count must be positive");
    let grid = spec.scenario.rules.grid;
    let mut genes = Vec::with_capacity(k);
    match spec.origin {
        GeneOrigin::Duplication => {
            let first = Gene::random(spec.gene_length, resolve_start(spec.start_scheme, 0, &grid, rng), rng);
            for i in 1..k {
                let start = match spec.start_scheme {
                    StartScheme::Random => first.start(),
                    scheme => resolve_start(scheme, i, &grid, rng),
                };
                genes.push(Gene::new(first.sequence(), start).expect("copied from a valid gene"));
            }
            genes.insert(0, first);
        }
        GeneOrigin::DeNovo => {
            for i in 0..k {
                let start = resolve_start(spec.start_scheme, i, &grid, rng);
                genes.push(Gene::random(spec.gene_length, start, rng));
            }
        }
    }
    Genome::new(genes).expect("k >= 1")
}

const CHUNK: usize = 1024;

/// Scores of `samples` random `k`-gene genomes. Chunks are seeded from
/// `(seed, k, chunk)`, so the result does not depend on thread count.
pub fn sample_scores(spec: &SampleSpec, k: usize, samples: usize, seed: u64) -> Result<Vec<Score>, EngineError> {
    let chunks = samples.div_ceil(CHUNK);
    let parts: Result<Vec<Vec<Score>>, EngineError> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &format!("sample-k{k}"), c as u64));
            let n = CHUNK.min(samples - c * CHUNK);
            (0..n).map(|_| spec.scenario.score(&random_genome(spec, k, &mut rng))).collect()
        })
        .collect();
    Ok(parts?.concat())
}

pub fn qualifies(score: Score, threshold: f64, max_score: Score) -> bool {
    score as f64 >= threshold * max_score as f64
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleCell {
    pub gene_count: usize,
    pub samples: u64,
    pub qualifying: u64,
    pub threshold: f64,
}

impl SampleCell {
    pub fn rate(&self) -> f64 {
        self.qualifying as f64 / self.samples as f64
    }

    pub fn wilson95(&self) -> (f64, f64) {
        wilson_interval(self.qualifying, self.samples, Z_95)
    }
}

/// Qualifying counts at several thresholds from one shared set of samples.
pub fn sample_cells(
    spec: &SampleSpec,
    gene_counts: &[usize],
    samples: usize,
    thresholds: &[f64],
    seed: u64,
) -> Result<Vec<SampleCell>, EngineError> {
    let max = spec.scenario.max_score();
    let mut out = Vec::new();
    for &k in gene_counts {
        let scores = sample_scores(spec, k, samples, seed)?;
        for &threshold in thresholds {
            let qualifying = scores.iter().filter(|&&s| qualifies(s, threshold, max)).count() as u64;
            out.push(SampleCell {
                gene_count: k,
                samples: samples as u64,
                qualifying,
                threshold,
            });
        }
    }
    Ok(out)
}

pub fn sample_solution_counts(
    spec: &SampleSpec,
    gene_counts: &[usize],
    samples: usize,
    threshold: f64,
    seed: u64,
) -> Result<Vec<SampleCell>, EngineError> {
    sample_cells(spec, gene_counts, samples, &[threshold], seed)
}

/// Two-sided K-S between the raw sampled gene counts (each qualifying
/// sample contributes its `k` once) and evolved gene counts.
pub fn compare_distributions(cells: &[SampleCell], evolved: &[usize]) -> Result<StatResult, StatsError> {
    let sampled: Vec<f64> = cells
        .iter()
        .flat_map(|c| std::iter::repeat_n(c.gene_count as f64, c.qualifying as usize))
        .collect();
    let evolved: Vec<f64> = evolved.iter().map(|&g| g as f64).collect();
    ks_two_sample(&sampled, &evolved)
}

/// Per-`k` counts rescaled so each distribution sums to `total`, for plots.
pub fn rescale(counts: &[(usize, u64)], total: f64) -> Vec<(usize, f64)> {
    let sum: u64 = counts.iter().map(|c| c.1).sum();
    counts
        .iter()
        .map(|&(k, c)| (k, if sum == 0 { 0.0 } else { c as f64 * total / sum as f64 }))
        .collect()
}
