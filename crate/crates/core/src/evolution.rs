//! The generational loop.
//!
//! A trial starts from one random gene and hill-climbs (offspring must score
//! at least as well as their parent) until a genome reaches the maximum
//! score. From there the neutral phase begins: gene addition and removal are
//! switched on and each generation is produced either under purifying
//! selection (CNE: score-lowering offspring are discarded) or with no
//! selection at all (ZFEL: every offspring is kept).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::arena::Scenario;
use crate::engine::{AttackKind, EngineError, Score};
use crate::genome::{Gene, GeneOrigin, Genome, StartScheme, DEFAULT_GENE_LENGTH};
use crate::genome::resolve_start;
use crate::metrics;
use crate::seed::derive_seed;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvolutionError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("no viable offspring after {attempts} attempts at generation {generation}")]
    Stuck { generation: usize, attempts: usize },
    #[error("bootstrap found no maximum-score genome within {generations} generations")]
    BootstrapBudget { generations: usize },
    #[error("trial stuck {restarts} times; giving up")]
    StuckBudgetExceeded { restarts: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl EvolutionError {
    fn is_stuck(&self) -> bool {
        matches!(self, EvolutionError::Stuck { .. } | EvolutionError::BootstrapBudget { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    Cne,
    Zfel,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Cne => "cne",
            Regime::Zfel => "zfel",
        }
    }
}

/// One cell of the condition matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Condition {
    pub attack_kind: AttackKind,
    pub start_scheme: StartScheme,
    pub friendly_fire: bool,
    pub origin: GeneOrigin,
    pub regime: Regime,
}

impl Condition {
    /// Stable identifier, e.g. `ranged-same-ff-duplication-cne`.
    pub fn id(&self) -> String {
        format!(
            "{}-{}-{}-{}-{}",
            self.attack_kind.name(),
            self.start_scheme.name(),
            if self.friendly_fire { "ff" } else { "safe" },
            self.origin.name(),
            self.regime.name()
        )
    }

    /// Identifier of the condition with the regime dropped; CNE and ZFEL
    /// runs of the same game share it.
    pub fn game_id(&self) -> String {
        format!(
            "{}-{}-{}-{}",
            self.attack_kind.name(),
            self.start_scheme.name(),
            if self.friendly_fire { "ff" } else { "safe" },
            self.origin.name()
        )
    }

    /// All 24 game conditions crossed with the given regimes.
    pub fn matrix(regimes: &[Regime]) -> Vec<Condition> {
        let mut out = Vec::new();
        for attack_kind in [AttackKind::Melee, AttackKind::Ranged] {
            for friendly_fire in [false, true] {
                for start_scheme in [StartScheme::Same, StartScheme::Corners, StartScheme::Random] {
                    for origin in [GeneOrigin::Duplication, GeneOrigin::DeNovo] {
                        for &regime in regimes {
                            out.push(Condition {
                                attack_kind,
                                start_scheme,
                                friendly_fire,
                                origin,
                                regime,
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Budgets that turn a runaway trial into a restart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub attempts_per_generation: usize,
    pub bootstrap_generations: usize,
    pub max_restarts: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            attempts_per_generation: 100_000,
            bootstrap_generations: 200_000,
            max_restarts: 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Checkpoints {
    None,
    /// Generation 0, every power of two, and the final generation.
    PowersOfTwo,
    Every(usize),
}

impl Checkpoints {
    fn wants(&self, generation: usize, last: usize) -> bool {
        match *self {
            Checkpoints::None => false,
            Checkpoints::PowersOfTwo => generation == 0 || generation == last || generation.is_power_of_two(),
            Checkpoints::Every(k) => generation == last || (k > 0 && generation % k == 0),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialConfig {
    pub condition: Condition,
    pub scenario: Scenario,
    pub point_rate: f64,
    /// Used for both addition and removal.
    pub gene_event_rate: f64,
    pub population_size: usize,
    pub neutral_generations: usize,
    /// Fraction of the maximum score an offspring needs under CNE.
    pub viability_threshold: f64,
    pub fixed_gene_count: Option<usize>,
    pub gene_length: usize,
    /// LotB and essential counts are measured every `metric_stride`
    /// generations (and at the last one); 0 disables them.
    pub metric_stride: usize,
    pub checkpoints: Checkpoints,
    pub limits: Limits,
    pub seed: u64,
}

impl TrialConfig {
    /// Paper-style defaults for a condition in the standard arena.
    pub fn new(condition: Condition, seed: u64) -> Self {
        let mut scenario = Scenario::new(
            crate::engine::SessionRules::default(),
            crate::engine::OpponentConfig::default_ring(),
            condition.attack_kind,
        );
        scenario.rules.friendly_fire = condition.friendly_fire;
        TrialConfig {
            condition,
            scenario,
            point_rate: 0.01,
            gene_event_rate: 0.01,
            population_size: 1,
            neutral_generations: 4096,
            viability_threshold: 1.0,
            fixed_gene_count: None,
            gene_length: DEFAULT_GENE_LENGTH,
            metric_stride: 1,
            checkpoints: Checkpoints::PowersOfTwo,
            limits: Limits::default(),
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), EvolutionError> {
        let bad = |m: &str| Err(EvolutionError::Config(m.to_string()));
        if !(0.0..=1.0).contains(&self.point_rate) || !(0.0..=1.0).contains(&self.gene_event_rate) {
            return bad("rates must lie in [0, 1]");
        }
        if !(0.0..=1.0).contains(&self.viability_threshold) {
            return bad("viability_threshold must lie in [0, 1]");
        }
        if self.population_size == 0 {
            return bad("population_size must be positive");
        }
        if self.fixed_gene_count == Some(0) {
            return bad("fixed_gene_count must be positive");
        }
        if self.gene_length < 2 {
            return bad("gene_length must be at least 2");
        }
        if self.condition.friendly_fire != self.scenario.rules.friendly_fire
            || self.condition.attack_kind != self.scenario.attack_kind
        {
            return bad("scenario disagrees with condition");
        }
        self.scenario.rules.grid.validate()?;
        Ok(())
    }

    fn gene_events_enabled(&self) -> bool {
        self.fixed_gene_count.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Individual {
    pub genome: Genome,
    pub score: Score,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    /// Hill climbing towards the maximum score; no gene events.
    Bootstrap,
    Neutral,
}

/// Produces the next population. Parents are drawn uniformly; each
/// offspring gets point mutations on every gene and, in the neutral phase,
/// gene events. Acceptance depends on phase and regime.
pub fn next_generation<R: Rng + ?Sized>(
    population: &[Individual],
    config: &TrialConfig,
    phase: Phase,
    generation: usize,
    rng: &mut R,
) -> Result<Vec<Individual>, EvolutionError> {
    assert!(!population.is_empty(), "population must be non-empty");
    let scenario = &config.scenario;
    let floor = config.viability_threshold * scenario.max_score() as f64;
    let mut next = Vec::with_capacity(config.population_size);
    let mut attempts = 0usize;
    while next.len() < config.population_size {
        if attempts >= config.limits.attempts_per_generation {
            return Err(EvolutionError::Stuck { generation, attempts });
        }
        attempts += 1;
        let parent = &population[rng.random_range(0..population.len())];
        let mut genome = parent.genome.clone();
        genome.mutate(config.point_rate, rng);
        if phase == Phase::Neutral && config.gene_events_enabled() {
            genome.apply_gene_events(
                config.gene_event_rate,
                config.gene_event_rate,
                config.condition.origin,
                config.condition.start_scheme,
                &scenario.rules.grid,
                config.gene_length,
                rng,
            );
        }
        let score = scenario.score(&genome)?;
        let keep = match (phase, config.condition.regime) {
            (Phase::Bootstrap, _) => score >= parent.score,
            (Phase::Neutral, Regime::Cne) => score as f64 >= (parent.score as f64).min(floor),
            (Phase::Neutral, Regime::Zfel) => true,
        };
        if keep {
            next.push(Individual { genome, score });
        }
    }
    Ok(next)
}

/// Hill-climbs from `start` until some individual reaches the maximum score.
pub fn bootstrap_from<R: Rng + ?Sized>(
    start: Genome,
    config: &TrialConfig,
    rng: &mut R,
) -> Result<(Individual, usize), EvolutionError> {
    let max = config.scenario.max_score();
    let score = config.scenario.score(&start)?;
    let mut population = vec![Individual { genome: start, score }];
    let mut generations = 0;
    loop {
        if let Some(best) = population.iter().find(|i| i.score >= max) {
            return Ok((best.clone(), generations));
        }
        if generations >= config.limits.bootstrap_generations {
            return Err(EvolutionError::BootstrapBudget { generations });
        }
        generations += 1;
        population = next_generation(&population, config, Phase::Bootstrap, generations, rng)?;
    }
}

/// Bootstrap from a single random gene.
pub fn bootstrap<R: Rng + ?Sized>(config: &TrialConfig, rng: &mut R) -> Result<(Individual, usize), EvolutionError> {
    let grid = config.scenario.rules.grid;
    let start = resolve_start(config.condition.start_scheme, 0, &grid, rng);
    let genome = Genome::single(Gene::random(config.gene_length, start, rng));
    bootstrap_from(genome, config, rng)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenerationRow {
    pub generation: usize,
    pub score: Score,
    pub gene_count: usize,
    pub essential_count: Option<usize>,
    pub mean_lotb: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialRecord {
    pub condition: Condition,
    pub seed: u64,
    pub bootstrap_generations: usize,
    pub restarts: usize,
    pub rows: Vec<GenerationRow>,
    pub checkpoints: Vec<(usize, Genome)>,
    pub final_genome: Genome,
}

fn record_row(config: &TrialConfig, generation: usize, ind: &Individual) -> Result<GenerationRow, EvolutionError> {
    let last = config.neutral_generations;
    let measure = config.metric_stride > 0 && (generation % config.metric_stride == 0 || generation == last);
    let (essential_count, mean_lotb) = if measure {
        let contributions = metrics::contributions_with_score(&ind.genome, ind.score, &config.scenario)?;
        let essential = contributions.iter().filter(|c| c.essential).count();
        let mean = contributions.iter().map(|c| c.lotb as f64).sum::<f64>() / contributions.len() as f64;
        (Some(essential), Some(mean))
    } else {
        (None, None)
    };
    Ok(GenerationRow {
        generation,
        score: ind.score,
        gene_count: ind.genome.len(),
        essential_count,
        mean_lotb,
    })
}

/// Builds the neutral-phase founder, including the fixed-gene-count setup
/// (k−1 consecutive additions by the configured origin).
fn founder<R: Rng + ?Sized>(
    solution: Individual,
    config: &TrialConfig,
    rng: &mut R,
) -> Result<Individual, EvolutionError> {
    let Some(k) = config.fixed_gene_count else {
        return Ok(solution);
    };
    let mut genome = solution.genome;
    while genome.len() < k {
        genome.add_gene(
            config.condition.origin,
            config.condition.start_scheme,
            &config.scenario.rules.grid,
            config.gene_length,
            rng,
        );
    }
    let score = config.scenario.score(&genome)?;
    Ok(Individual { genome, score })
}

fn run_attempt<R: Rng + ?Sized>(config: &TrialConfig, rng: &mut R) -> Result<(usize, Vec<GenerationRow>, Vec<(usize, Genome)>, Genome), EvolutionError> {
    let (solution, bootstrap_generations) = bootstrap(config, rng)?;
    let founder = founder(solution, config, rng)?;
    let last = config.neutral_generations;
    let mut rows = Vec::with_capacity(last + 1);
    let mut checkpoints = Vec::new();
    rows.push(record_row(config, 0, &founder)?);
    if config.checkpoints.wants(0, last) {
        checkpoints.push((0, founder.genome.clone()));
    }
    let mut population = vec![founder];
    for generation in 1..=last {
        population = next_generation(&population, config, Phase::Neutral, generation, rng)?;
        let rep = &population[0];
        rows.push(record_row(config, generation, rep)?);
        if config.checkpoints.wants(generation, last) {
            checkpoints.push((generation, rep.genome.clone()));
        }
    }
    let final_genome = population.swap_remove(0).genome;
    Ok((bootstrap_generations, rows, checkpoints, final_genome))
}

/// Runs one full trial. Stuck attempts restart from a derived seed.
/// Rows describe the first individual of each population.
pub fn run_trial(config: &TrialConfig) -> Result<TrialRecord, EvolutionError> {
    config.validate()?;
    let mut restarts = 0;
    loop {
        let seed = if restarts == 0 {
            config.seed
        } else {
            derive_seed(config.seed, "restart", restarts as u64)
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match run_attempt(config, &mut rng) {
            Ok((bootstrap_generations, rows, checkpoints, final_genome)) => {
                return Ok(TrialRecord {
                    condition: config.condition,
                    seed: config.seed,
                    bootstrap_generations,
                    restarts,
                    rows,
                    checkpoints,
                    final_genome,
                });
            }
            Err(e) if e.is_stuck() => {
                restarts += 1;
                if restarts > config.limits.max_restarts {
                    return Err(EvolutionError::StuckBudgetExceeded { restarts: restarts - 1 });
                }
            }
            Err(e) => return Err(e),
        }
    }
}

/// Runs `trials` seeded trials of one configuration in parallel. Trial `i`
/// uses `derive_seed(master, condition id, i)`.
pub fn run_trials(base: &TrialConfig, master: u64, trials: usize) -> Vec<Result<TrialRecord, EvolutionError>> {
    let id = base.condition.id();
    (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut cfg = base.clone();
            cfg.seed = derive_seed(master, &id, i as u64);
            run_trial(&cfg)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SweepKind {
    GeneEventRate,
    PointRate,
}

impl SweepKind {
    pub fn name(self) -> &'static str {
        match self {
            SweepKind::GeneEventRate => "gene_event_rate",
            SweepKind::PointRate => "point_rate",
        }
    }

    /// (rate, neutral generations) cells.
    pub fn grid(self) -> Vec<(f64, usize)> {
        match self {
            SweepKind::GeneEventRate => vec![(0.01, 100), (0.005, 200), (0.001, 1000), (0.0005, 2000), (0.0001, 10000)],
            SweepKind::PointRate => [0.05, 0.01, 0.005, 0.001, 0.0005].iter().map(|&r| (r, 1024)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepCell {
    pub rate: f64,
    pub generations: usize,
    pub gene_counts: Vec<usize>,
    pub restarts: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable {
    pub kind: SweepKind,
    pub condition: Condition,
    pub cells: Vec<SweepCell>,
}

impl SweepTable {
    pub fn anova(&self) -> Result<crate::stats::StatResult, crate::stats::StatsError> {
        let groups: Vec<Vec<f64>> = self
            .cells
            .iter()
            .map(|c| c.gene_counts.iter().map(|&g| g as f64).collect())
            .collect();
        crate::stats::anova_oneway(&groups)
    }
}

/// Runs the given (rate, generations) cells; gene counts are read at the
/// final generation of each trial.
pub fn run_sweep_cells(
    kind: SweepKind,
    base: &TrialConfig,
    cells: &[(f64, usize)],
    trials: usize,
    master: u64,
) -> Result<SweepTable, EvolutionError> {
    let mut out = Vec::with_capacity(cells.len());
    for (ci, &(rate, generations)) in cells.iter().enumerate() {
        let mut cfg = base.clone();
        match kind {
            SweepKind::GeneEventRate => cfg.gene_event_rate = rate,
            SweepKind::PointRate => cfg.point_rate = rate,
        }
        cfg.neutral_generations = generations;
        cfg.metric_stride = 0;
        cfg.checkpoints = Checkpoints::None;
        let label = format!("sweep-{}-{}-{ci}", kind.name(), base.condition.id());
        let results: Vec<_> = (0..trials)
            .into_par_iter()
            .map(|t| {
                let mut c = cfg.clone();
                c.seed = derive_seed(master, &label, t as u64);
                run_trial(&c)
            })
            .collect();
        let mut gene_counts = Vec::with_capacity(trials);
        let mut restarts = 0;
        for r in results {
            let r = r?;
            restarts += r.restarts;
            gene_counts.push(r.final_genome.len());
        }
        out.push(SweepCell {
            rate,
            generations,
            gene_counts,
            restarts,
        });
    }
    Ok(SweepTable {
        kind,
        condition: base.condition,
        cells: out,
    })
}

pub fn run_parameter_sweep(
    kind: SweepKind,
    base: &TrialConfig,
    trials: usize,
    master: u64,
) -> Result<SweepTable, EvolutionError> {
    run_sweep_cells(kind, base, &kind.grid(), trials, master)
}
