//! Experiment plan files.
//!
//! A plan is a flat `key = value` text file. The first non-blank line must
//! be the header `quandary-plan 1`; `#` starts a comment. Keys not listed in
//! [`KEYS`] are rejected. Any key left out keeps the value of the selected
//! profile.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quandary::engine::{GridConfig, OpponentConfig, SessionRules, DEFAULT_OPPONENT_HEALTH, DEFAULT_PLAYER_HEALTH};
use quandary::evolution::{Checkpoints, Condition, Regime, TrialConfig};
use quandary::genome::{GeneOrigin, StartScheme, DEFAULT_GENE_LENGTH};
use quandary::metrics::random_opponents;
use quandary::seed::derive_seed;
use quandary::{AttackKind, Scenario};

use crate::error::CliError;

pub const HEADER: &str = "quandary-plan 1";

pub const KEYS: &[&str] = &[
    "name",
    "master_seed",
    "attack_kinds",
    "start_schemes",
    "friendly_fire",
    "origins",
    "regimes",
    "trials_per_condition",
    "neutral_generations",
    "metric_stride",
    "checkpoints",
    "point_rate",
    "gene_event_rate",
    "population_size",
    "viability_threshold",
    "fixed_gene_count",
    "gene_length",
    "grid_size",
    "max_ticks",
    "player_health",
    "opponent_health",
    "opponents",
    "opponent_count",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Profile {
    /// 16 trials per condition, 1,024 generations, metrics every 8.
    Desk,
    /// 64 trials per condition, 4,096 generations, metrics every generation.
    Paper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpponentSource {
    /// The fixed four-opponent ring.
    Default,
    /// A distinct random configuration per trial index, shared across
    /// conditions.
    Random,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Plan {
    pub name: String,
    pub master_seed: u64,
    pub attack_kinds: Vec<AttackKind>,
    pub start_schemes: Vec<StartScheme>,
    pub friendly_fire: Vec<bool>,
    pub origins: Vec<GeneOrigin>,
    pub regimes: Vec<Regime>,
    pub trials_per_condition: usize,
    pub neutral_generations: usize,
    pub metric_stride: usize,
    pub checkpoints: Checkpoints,
    pub point_rate: f64,
    pub gene_event_rate: f64,
    pub population_size: usize,
    pub viability_threshold: f64,
    pub fixed_gene_count: Option<usize>,
    pub gene_length: usize,
    pub grid_size: usize,
    pub max_ticks: usize,
    pub player_health: u32,
    pub opponent_health: u32,
    pub opponents: OpponentSource,
    pub opponent_count: usize,
}

impl Plan {
    pub fn profile(profile: Profile) -> Plan {
        let (trials, generations, stride) = match profile {
            Profile::Desk => (16, 1024, 8),
            Profile::Paper => (64, 4096, 1),
        };
        Plan {
            name: match profile {
                Profile::Desk => "desk".into(),
                Profile::Paper => "paper".into(),
            },
            master_seed: 0,
            attack_kinds: vec![AttackKind::Melee, AttackKind::Ranged],
            start_schemes: vec![StartScheme::Same, StartScheme::Corners, StartScheme::Random],
            friendly_fire: vec![false, true],
            origins: vec![GeneOrigin::Duplication, GeneOrigin::DeNovo],
            regimes: vec![Regime::Cne, Regime::Zfel],
            trials_per_condition: trials,
            neutral_generations: generations,
            metric_stride: stride,
            checkpoints: Checkpoints::PowersOfTwo,
            point_rate: 0.01,
            gene_event_rate: 0.01,
            population_size: 1,
            viability_threshold: 1.0,
            fixed_gene_count: None,
            gene_length: DEFAULT_GENE_LENGTH,
            grid_size: 8,
            max_ticks: 256,
            player_health: DEFAULT_PLAYER_HEALTH,
            opponent_health: DEFAULT_OPPONENT_HEALTH,
            opponents: OpponentSource::Default,
            opponent_count: 4,
        }
    }

    /// Parses plan text over the defaults of `profile`.
    pub fn parse(text: &str, profile: Profile) -> Result<Plan, CliError> {
        let mut plan = Plan::profile(profile);
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, HEADER)) => {}
            Some((n, other)) => return Err(CliError::Plan(format!("line {n}: expected header `{HEADER}`, found `{other}`"))),
            None => return Err(CliError::Plan(format!("empty plan; expected header `{HEADER}`"))),
        }
        let mut seen = Vec::new();
        for (n, line) in lines {
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| CliError::Plan(format!("line {n}: expected `key = value`")))?;
            if !KEYS.contains(&key) {
                return Err(CliError::Plan(format!("line {n}: unknown key `{key}`")));
            }
            if seen.contains(&key) {
                return Err(CliError::Plan(format!("line {n}: duplicate key `{key}`")));
            }
            seen.push(key);
            plan.set(key, value).map_err(|e| CliError::Plan(format!("line {n}: {key}: {e}")))?;
        }
        plan.validate()?;
        Ok(plan)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "name" => {
                if value.is_empty() || value.contains(char::is_whitespace) {
                    return Err("must be a single word".into());
                }
                self.name = value.to_string();
            }
            "master_seed" => self.master_seed = number(value)?,
            "attack_kinds" => self.attack_kinds = list(value, parse_attack_kind)?,
            "start_schemes" => self.start_schemes = list(value, parse_start_scheme)?,
            "friendly_fire" => self.friendly_fire = list(value, parse_friendly_fire)?,
            "origins" => self.origins = list(value, parse_origin)?,
            "regimes" => self.regimes = list(value, parse_regime)?,
            "trials_per_condition" => self.trials_per_condition = number(value)?,
            "neutral_generations" => self.neutral_generations = number(value)?,
            "metric_stride" => self.metric_stride = number(value)?,
            "checkpoints" => self.checkpoints = parse_checkpoints(value)?,
            "point_rate" => self.point_rate = number(value)?,
            "gene_event_rate" => self.gene_event_rate = number(value)?,
            "population_size" => self.population_size = number(value)?,
            "viability_threshold" => self.viability_threshold = number(value)?,
            "fixed_gene_count" => {
                self.fixed_gene_count = match value {
                    "none" => None,
                    v => Some(number(v)?),
                }
            }
            "gene_length" => self.gene_length = number(value)?,
            "grid_size" => self.grid_size = number(value)?,
            "max_ticks" => self.max_ticks = number(value)?,
            "player_health" => self.player_health = number(value)?,
            "opponent_health" => self.opponent_health = number(value)?,
            "opponents" => {
                self.opponents = match value {
                    "default" => OpponentSource::Default,
                    "random" => OpponentSource::Random,
                    other => return Err(format!("expected `default` or `random`, got `{other}`")),
                }
            }
            "opponent_count" => self.opponent_count = number(value)?,
            _ => unreachable!("keys are checked against KEYS"),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: &str| Err(CliError::Plan(m.to_string()));
        if self.attack_kinds.is_empty()
            || self.start_schemes.is_empty()
            || self.friendly_fire.is_empty()
            || self.origins.is_empty()
            || self.regimes.is_empty()
        {
            return bad("every condition axis needs at least one value");
        }
        if self.trials_per_condition == 0 {
            return bad("trials_per_condition must be positive");
        }
        if self.gene_length % 2 != 0 {
            return bad("gene_length must be even");
        }
        if self.player_health == 0 || self.opponent_health == 0 {
            return bad("health values must be positive");
        }
        if self.opponents == OpponentSource::Random && self.opponent_count == 0 {
            return bad("opponent_count must be positive");
        }
        let cond = self.conditions()[0];
        self.trial_config(cond, 0)?.validate().map_err(|e| CliError::Plan(e.to_string()))?;
        Ok(())
    }

    /// Cross product of the condition axes, in axis order.
    pub fn conditions(&self) -> Vec<Condition> {
        let mut out = Vec::new();
        for &attack_kind in &self.attack_kinds {
            for &friendly_fire in &self.friendly_fire {
                for &start_scheme in &self.start_schemes {
                    for &origin in &self.origins {
                        for &regime in &self.regimes {
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

    pub fn rules(&self, friendly_fire: bool) -> SessionRules {
        SessionRules {
            grid: GridConfig {
                size: self.grid_size,
                max_ticks: self.max_ticks,
            },
            friendly_fire,
            player_health: self.player_health,
        }
    }

    /// Opponents faced by trial `trial`.
    pub fn opponents_for(&self, trial: usize) -> Result<OpponentConfig, CliError> {
        match self.opponents {
            OpponentSource::Default => Ok(OpponentConfig::default_ring().with_health(self.opponent_health)),
            OpponentSource::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(self.master_seed, "opponents", trial as u64));
                random_opponents(self.opponent_count, &self.rules(false).grid, self.opponent_health, &mut rng)
                    .map_err(|e| CliError::Plan(e.to_string()))
            }
        }
    }

    pub fn scenario(&self, attack_kind: AttackKind, friendly_fire: bool, trial: usize) -> Result<Scenario, CliError> {
        Ok(Scenario::new(self.rules(friendly_fire), self.opponents_for(trial)?, attack_kind))
    }

    pub fn trial_seed(&self, condition: &Condition, trial: usize) -> u64 {
        derive_seed(self.master_seed, &condition.id(), trial as u64)
    }

    pub fn trial_config(&self, condition: Condition, trial: usize) -> Result<TrialConfig, CliError> {
        let mut cfg = TrialConfig::new(condition, self.trial_seed(&condition, trial));
        cfg.scenario = self.scenario(condition.attack_kind, condition.friendly_fire, trial)?;
        cfg.point_rate = self.point_rate;
        cfg.gene_event_rate = self.gene_event_rate;
        cfg.population_size = self.population_size;
        cfg.neutral_generations = self.neutral_generations;
        cfg.viability_threshold = self.viability_threshold;
        cfg.fixed_gene_count = self.fixed_gene_count;
        cfg.gene_length = self.gene_length;
        cfg.metric_stride = self.metric_stride;
        cfg.checkpoints = self.checkpoints;
        Ok(cfg)
    }

    /// Canonical text with every key spelled out. Equal plans give equal
    /// text.
    pub fn to_text(&self) -> String {
        let join = |names: Vec<&str>| names.join(", ");
        let mut s = String::new();
        let mut kv = |k: &str, v: String| writeln!(s, "{k} = {v}").expect("writing to a String");
        kv("name", self.name.clone());
        kv("master_seed", self.master_seed.to_string());
        kv("attack_kinds", join(self.attack_kinds.iter().map(|a| a.name()).collect()));
        kv("start_schemes", join(self.start_schemes.iter().map(|a| a.name()).collect()));
        kv(
            "friendly_fire",
            join(self.friendly_fire.iter().map(|&f| if f { "ff" } else { "safe" }).collect()),
        );
        kv("origins", join(self.origins.iter().map(|a| a.name()).collect()));
        kv("regimes", join(self.regimes.iter().map(|a| a.name()).collect()));
        kv("trials_per_condition", self.trials_per_condition.to_string());
        kv("neutral_generations", self.neutral_generations.to_string());
        kv("metric_stride", self.metric_stride.to_string());
        kv(
            "checkpoints",
            match self.checkpoints {
                Checkpoints::None => "none".into(),
                Checkpoints::PowersOfTwo => "powers_of_two".into(),
                Checkpoints::Every(k) => format!("every:{k}"),
            },
        );
        kv("point_rate", self.point_rate.to_string());
        kv("gene_event_rate", self.gene_event_rate.to_string());
        kv("population_size", self.population_size.to_string());
        kv("viability_threshold", self.viability_threshold.to_string());
        kv(
            "fixed_gene_count",
            self.fixed_gene_count.map_or("none".into(), |k| k.to_string()),
        );
        kv("gene_length", self.gene_length.to_string());
        kv("grid_size", self.grid_size.to_string());
        kv("max_ticks", self.max_ticks.to_string());
        kv("player_health", self.player_health.to_string());
        kv("opponent_health", self.opponent_health.to_string());
        kv(
            "opponents",
            match self.opponents {
                OpponentSource::Default => "default".into(),
                OpponentSource::Random => "random".into(),
            },
        );
        kv("opponent_count", self.opponent_count.to_string());
        format!("{HEADER}\n{s}")
    }
}

fn number<T: std::str::FromStr>(value: &str) -> Result<T, String> {
    value.parse().map_err(|_| format!("cannot parse `{value}`"))
}

fn list<T>(value: &str, parse: fn(&str) -> Option<T>) -> Result<Vec<T>, String> {
    let items: Result<Vec<T>, String> = value
        .split(',')
        .map(str::trim)
        .map(|v| parse(v).ok_or_else(|| format!("unknown value `{v}`")))
        .collect();
    let items = items?;
    if items.is_empty() {
        return Err("empty list".into());
    }
    Ok(items)
}

pub fn parse_attack_kind(s: &str) -> Option<AttackKind> {
    [AttackKind::Melee, AttackKind::Ranged].into_iter().find(|a| a.name() == s)
}

pub fn parse_start_scheme(s: &str) -> Option<StartScheme> {
    [StartScheme::Same, StartScheme::Corners, StartScheme::Random]
        .into_iter()
        .find(|a| a.name() == s)
}

pub fn parse_origin(s: &str) -> Option<GeneOrigin> {
    [GeneOrigin::Duplication, GeneOrigin::DeNovo].into_iter().find(|a| a.name() == s)
}

pub fn parse_regime(s: &str) -> Option<Regime> {
    [Regime::Cne, Regime::Zfel].into_iter().find(|a| a.name() == s)
}

pub fn parse_friendly_fire(s: &str) -> Option<bool> {
    match s {
        "ff" => Some(true),
        "safe" => Some(false),
        _ => None,
    }
}

fn parse_checkpoints(s: &str) -> Result<Checkpoints, String> {
    match s {
        "none" => Ok(Checkpoints::None),
        "powers_of_two" => Ok(Checkpoints::PowersOfTwo),
        _ => match s.strip_prefix("every:").map(str::parse) {
            Some(Ok(k)) if k > 0 => Ok(Checkpoints::Every(k)),
            _ => Err(format!("expected `none`, `powers_of_two` or `every:N`, got `{s}`")),
        },
    }
}

/// Parses a condition identifier such as `melee-same-ff-duplication-cne`.
pub fn parse_condition(id: &str) -> Option<Condition> {
    let parts: Vec<&str> = id.split('-').collect();
    let [attack, start, ff, origin, regime] = parts[..] else {
        return None;
    };
    Some(Condition {
        attack_kind: parse_attack_kind(attack)?,
        start_scheme: parse_start_scheme(start)?,
        friendly_fire: parse_friendly_fire(ff)?,
        origin: parse_origin(origin)?,
        regime: parse_regime(regime)?,
    })
}
