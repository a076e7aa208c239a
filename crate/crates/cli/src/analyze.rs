//! Tidy analysis tables consumed by the plotting scripts.
//!
//! Every analysis writes `<name>.csv` (summaries) and `<name>_tests.csv`
//! (hypothesis tests with raw and Bonferroni-adjusted p-values and a
//! `significant` flag at adjusted p < 0.05).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use quandary::evolution::{Condition, Regime};
use quandary::metrics::{evolvability, opponent_batch, plasticity, robustness};
use quandary::seed::derive_seed;
use quandary::stats::{bonferroni, least_squares, mean_ci95, spearman, welch_t, Df, StatResult};

use crate::error::CliError;
use crate::plan::{parse_attack_kind, parse_friendly_fire, parse_origin, parse_start_scheme};
use crate::results::{condition_fields, fmt_float, write_atomic, ResultSet, Shard};

pub const ALPHA: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Analysis {
    GenesOverTime,
    LotbOverTime,
    EssentialOverTime,
    GeneCountDist,
    RobustnessByGenes,
    PlasticityByGenes,
    EvolvabilityByGenes,
    Sweeps,
}

impl Analysis {
    pub fn name(self) -> &'static str {
        match self {
            Analysis::GenesOverTime => "genes_over_time",
            Analysis::LotbOverTime => "lotb_over_time",
            Analysis::EssentialOverTime => "essential_over_time",
            Analysis::GeneCountDist => "gene_count_dist",
            Analysis::RobustnessByGenes => "robustness_by_genes",
            Analysis::PlasticityByGenes => "plasticity_by_genes",
            Analysis::EvolvabilityByGenes => "evolvability_by_genes",
            Analysis::Sweeps => "sweeps",
        }
    }
}

/// Knobs for the genome-level capability measurements.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbeSettings {
    pub reps: usize,
    pub configs: usize,
    pub rounds: usize,
    pub horizon: usize,
    pub seed: u64,
}

impl Default for ProbeSettings {
    fn default() -> Self {
        ProbeSettings {
            reps: 64,
            configs: 32,
            rounds: 32,
            horizon: 64,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Tables {
    pub summary: String,
    pub tests: String,
}

impl Tables {
    pub fn write(&self, dir: &Path, name: &str) -> Result<(PathBuf, PathBuf), CliError> {
        let a = dir.join(format!("{name}.csv"));
        let b = dir.join(format!("{name}_tests.csv"));
        write_atomic(&a, self.summary.as_bytes())?;
        write_atomic(&b, self.tests.as_bytes())?;
        Ok((a, b))
    }
}

const TEST_COLUMNS: &str = "test,statistic,df,p,p_adjusted,significant,note";

struct TestRow {
    key: String,
    result: Option<StatResult>,
    note: String,
}

fn df_text(df: Df) -> String {
    match df {
        Df::None => String::new(),
        Df::One(d) => fmt_float(d),
        Df::Two(a, b) => format!("{} {}", fmt_float(a), fmt_float(b)),
    }
}

/// Appends test rows with Bonferroni adjustment over every defined test.
fn test_table(header: &str, rows: &[TestRow]) -> String {
    let defined: Vec<f64> = rows.iter().filter_map(|r| r.result.map(|s| s.p_value)).collect();
    let adjusted = bonferroni(&defined, defined.len().max(1));
    let mut adjusted = adjusted.into_iter();
    let mut out = format!("{header},{TEST_COLUMNS}\n");
    for r in rows {
        match r.result {
            Some(s) => {
                let adj = adjusted.next().expect("one adjustment per defined test");
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.key,
                    s.test.name(),
                    fmt_float(s.statistic),
                    df_text(s.df),
                    fmt_float(s.p_value),
                    fmt_float(adj),
                    adj < ALPHA,
                    r.note
                )
            }
            None => writeln!(out, "{},,,,,,false,{}", r.key, r.note),
        }
        .expect("writing to a String");
    }
    out
}

fn game_fields(c: &Condition) -> String {
    let f = condition_fields(c);
    format!("{},{},{},{},{}", c.game_id(), f[1], f[2], f[3], f[4])
}

const GAME_HEADER: &str = "game_id,attack_kind,start_scheme,friendly_fire,origin";
const CONDITION_HEADER: &str = "condition_id,attack_kind,start_scheme,friendly_fire,origin,regime";

fn group_by_condition(shards: &[Shard]) -> BTreeMap<Condition, Vec<&Shard>> {
    let mut m: BTreeMap<Condition, Vec<&Shard>> = BTreeMap::new();
    for s in shards {
        m.entry(s.condition).or_default().push(s);
    }
    m
}

fn as_f64(xs: &[usize]) -> Vec<f64> {
    xs.iter().map(|&x| x as f64).collect()
}

fn mean_row(values: &[f64]) -> String {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    match mean_ci95(values) {
        Ok(ci) => format!("{},{},{},{}", values.len(), fmt_float(ci.mean), fmt_float(ci.low), fmt_float(ci.high)),
        Err(_) => format!("{},{},,", values.len(), fmt_float(mean)),
    }
}

fn compare(a: &[f64], b: &[f64]) -> (Option<StatResult>, String) {
    match welch_t(a, b) {
        Ok(r) => (Some(r), String::new()),
        Err(e) => (None, e.to_string()),
    }
}

/// Mean and 95% interval per (condition, generation), plus a Welch t test at
/// the final generation: CNE against ZFEL for each game when both regimes
/// are present, otherwise each condition against all others pooled.
pub fn over_time(shards: &[Shard], value: fn(&quandary::evolution::GenerationRow) -> Option<f64>) -> Tables {
    let groups = group_by_condition(shards);
    let mut summary = format!("{CONDITION_HEADER},generation,n,mean,ci_low,ci_high\n");
    let mut finals: BTreeMap<Condition, (usize, Vec<f64>)> = BTreeMap::new();
    for (condition, trials) in &groups {
        let fields = condition_fields(condition).join(",");
        let last = trials.iter().map(|s| s.rows.len()).min().unwrap_or(0);
        for g in 0..last {
            let values: Vec<f64> = trials.iter().filter_map(|s| value(&s.rows[g])).collect();
            if values.is_empty() {
                continue;
            }
            writeln!(summary, "{fields},{g},{}", mean_row(&values)).expect("writing to a String");
            finals.insert(*condition, (g, values));
        }
    }

    let both = finals.keys().any(|c| c.regime == Regime::Cne) && finals.keys().any(|c| c.regime == Regime::Zfel);
    let mut rows = Vec::new();
    let header;
    if both {
        header = format!("{GAME_HEADER},generation");
        for (c, (g, cne)) in finals.iter().filter(|(c, _)| c.regime == Regime::Cne) {
            let zfel_cond = Condition { regime: Regime::Zfel, ..*c };
            if let Some((_, zfel)) = finals.get(&zfel_cond) {
                let (result, note) = compare(cne, zfel);
                rows.push(TestRow {
                    key: format!("{},{g}", game_fields(c)),
                    result,
                    note,
                });
            }
        }
    } else {
        header = format!("{CONDITION_HEADER},generation");
        for (c, (g, values)) in &finals {
            let rest: Vec<f64> = finals
                .iter()
                .filter(|(o, _)| *o != c)
                .flat_map(|(_, (_, v))| v.iter().copied())
                .collect();
            let (result, note) = compare(values, &rest);
            rows.push(TestRow {
                key: format!("{},{g}", condition_fields(c).join(",")),
                result,
                note,
            });
        }
    }
    Tables {
        summary,
        tests: test_table(&header, &rows),
    }
}

/// One row of a sampler CSV.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleRow {
    pub game_id: String,
    pub gene_count: usize,
    pub samples: u64,
    pub qualifying: u64,
    pub threshold: f64,
}

pub fn parse_samples(text: &str) -> Result<Vec<SampleRow>, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty sample table")?;
    if header != crate::sample::SAMPLE_COLUMNS.join(",") {
        return Err("header does not match the sample schema".into());
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let f: Vec<&str> = line.split(',').collect();
            let bad = || format!("row {}: malformed", i + 1);
            if f.len() != crate::sample::SAMPLE_COLUMNS.len() {
                return Err(bad());
            }
            Ok(SampleRow {
                game_id: f[0].to_string(),
                gene_count: f[5].parse().map_err(|_| bad())?,
                samples: f[6].parse().map_err(|_| bad())?,
                qualifying: f[7].parse().map_err(|_| bad())?,
                threshold: f[8].parse().map_err(|_| bad())?,
            })
        })
        .collect()
}

/// Sampled against evolved gene-count distributions per game condition.
/// Counts are rescaled to proportions for plotting; the K-S test uses the
/// raw samples.
pub fn gene_count_dist(shards: &[Shard], samples: &[SampleRow], threshold: f64) -> Result<Tables, CliError> {
    let groups = group_by_condition(shards);
    let mut summary = format!("{GAME_HEADER},regime,threshold,source,gene_count,count,rescaled\n");
    let mut rows = Vec::new();
    for (c, trials) in &groups {
        let cells: Vec<quandary::sampling::SampleCell> = samples
            .iter()
            .filter(|s| s.game_id == c.game_id() && (s.threshold - threshold).abs() < 1e-12)
            .map(|s| quandary::sampling::SampleCell {
                gene_count: s.gene_count,
                samples: s.samples,
                qualifying: s.qualifying,
                threshold: s.threshold,
            })
            .collect();
        if cells.is_empty() {
            return Err(CliError::Data(format!(
                "sample table has no rows for {} at threshold {}",
                c.game_id(),
                fmt_float(threshold)
            )));
        }
        let evolved: Vec<usize> = trials.iter().map(|s| s.final_row().gene_count).collect();
        let mut evolved_hist: BTreeMap<usize, u64> = BTreeMap::new();
        for &g in &evolved {
            *evolved_hist.entry(g).or_default() += 1;
        }
        let sampled_hist: Vec<(usize, u64)> = cells.iter().map(|c| (c.gene_count, c.qualifying)).collect();
        let evolved_hist: Vec<(usize, u64)> = evolved_hist.into_iter().collect();
        let prefix = format!("{},{},{}", game_fields(c), c.regime.name(), fmt_float(threshold));
        for (source, hist) in [("sampled", &sampled_hist), ("evolved", &evolved_hist)] {
            let scaled = quandary::sampling::rescale(hist, 1.0);
            for (&(k, n), (_, r)) in hist.iter().zip(scaled) {
                writeln!(summary, "{prefix},{source},{k},{n},{}", fmt_float(r)).expect("writing to a String");
            }
        }
        let (result, note) = match quandary::sampling::compare_distributions(&cells, &evolved) {
            Ok(r) => (Some(r), String::new()),
            Err(e) => (None, e.to_string()),
        };
        rows.push(TestRow {
            key: prefix,
            result,
            note,
        });
    }
    Ok(Tables {
        summary,
        tests: test_table(&format!("{GAME_HEADER},regime,threshold"), &rows),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Capability {
    Robustness,
    Plasticity,
    Evolvability,
}

impl Capability {
    fn label(self) -> &'static str {
        match self {
            Capability::Robustness => "robustness",
            Capability::Plasticity => "plasticity",
            Capability::Evolvability => "evolvability",
        }
    }
}

/// Measures a capability on every checkpointed genome and fits it against
/// gene count per condition (least-squares slope and Spearman rho).
pub fn by_genes(rs: &ResultSet, shards: &[Shard], capability: Capability, settings: &ProbeSettings) -> Result<Tables, CliError> {
    let plan = &rs.plan;
    let grid = plan.rules(false).grid;
    let count = match plan.opponents {
        crate::plan::OpponentSource::Default => plan.opponents_for(0)?.len(),
        crate::plan::OpponentSource::Random => plan.opponent_count,
    };
    let configs = opponent_batch(
        derive_seed(settings.seed, "plasticity-configs", 0),
        settings.configs,
        count,
        &grid,
        plan.opponent_health,
    )
    .map_err(|e| CliError::Data(e.to_string()))?;

    let mut jobs = Vec::new();
    for s in shards {
        let (_, genomes) = rs.read_genomes(&s.condition, s.trial)?;
        for (generation, genome) in genomes {
            jobs.push((s.condition, s.trial, generation, genome));
        }
    }
    let label = capability.label();
    let measured: Vec<Result<(Condition, usize, usize, usize, f64), CliError>> = jobs
        .par_iter()
        .map(|(condition, trial, generation, genome)| {
            let config = plan.trial_config(*condition, *trial)?;
            let seed = derive_seed(
                settings.seed,
                &format!("{label}-{}-{trial}", condition.id()),
                *generation as u64,
            );
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let value = match capability {
                Capability::Robustness => robustness(genome, &config.scenario, config.point_rate, settings.reps, &mut rng),
                Capability::Plasticity => plasticity(genome, &configs, &config.scenario),
                Capability::Evolvability => {
                    evolvability(genome, &config, &configs, settings.rounds, settings.horizon, &mut rng)
                }
            }
            .map_err(|e| CliError::Data(format!("{} trial {trial}: {e}", condition.id())))?;
            Ok((*condition, *trial, *generation, genome.len(), value))
        })
        .collect();

    let mut summary = format!("{CONDITION_HEADER},trial,generation,gene_count,{label}\n");
    let mut per_condition: BTreeMap<Condition, (Vec<f64>, Vec<f64>)> = BTreeMap::new();
    for m in measured {
        let (c, trial, generation, genes, value) = m?;
        writeln!(
            summary,
            "{},{trial},{generation},{genes},{}",
            condition_fields(&c).join(","),
            fmt_float(value)
        )
        .expect("writing to a String");
        let e = per_condition.entry(c).or_default();
        e.0.push(genes as f64);
        e.1.push(value);
    }
    let mut tests = format!("{CONDITION_HEADER},n,slope,intercept,spearman_rho\n");
    for (c, (x, y)) in &per_condition {
        let fit = least_squares(x, y);
        let rho = spearman(x, y);
        writeln!(
            tests,
            "{},{},{},{},{}",
            condition_fields(c).join(","),
            x.len(),
            fit.map_or(String::new(), |f| fmt_float(f.slope)),
            fit.map_or(String::new(), |f| fmt_float(f.intercept)),
            rho.map_or(String::new(), fmt_float)
        )
        .expect("writing to a String");
    }
    Ok(Tables { summary, tests })
}

/// Reads every `sweeps/*.csv` table under `root` and runs one ANOVA per
/// (sweep kind, condition) across the rate cells.
pub fn sweeps(root: &Path) -> Result<Tables, CliError> {
    let dir = root.join("sweeps");
    let mut files: Vec<PathBuf> = fs::read_dir(&dir)
        .map_err(|e| CliError::Data(format!("{}: no sweep tables ({e}); run `quandary sweep` first", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "csv"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(CliError::Data(format!("{}: no sweep tables; run `quandary sweep` first", dir.display())));
    }
    // (kind, condition) -> (rate, generations) -> gene counts
    let mut cells: BTreeMap<(String, String), BTreeMap<(String, usize), Vec<usize>>> = BTreeMap::new();
    for path in &files {
        let text = fs::read_to_string(path).map_err(CliError::io(path))?;
        let rows = crate::sweep::parse_sweep(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        for r in rows {
            cells
                .entry((r.kind.clone(), r.condition_fields.clone()))
                .or_default()
                .entry((r.rate.clone(), r.generations))
                .or_default()
                .push(r.gene_count);
        }
    }
    let mut summary = format!("kind,{CONDITION_HEADER},rate,generations,n,mean,ci_low,ci_high\n");
    let mut rows = Vec::new();
    for ((kind, fields), by_rate) in &cells {
        let mut groups = Vec::new();
        for ((rate, generations), counts) in by_rate {
            let values = as_f64(counts);
            writeln!(summary, "{kind},{fields},{rate},{generations},{}", mean_row(&values)).expect("writing to a String");
            groups.push(values);
        }
        let (result, note) = match quandary::stats::anova_oneway(&groups) {
            Ok(r) => (Some(r), String::new()),
            Err(e) => (None, e.to_string()),
        };
        rows.push(TestRow {
            key: format!("{kind},{fields}"),
            result,
            note,
        });
    }
    Ok(Tables {
        summary,
        tests: test_table(&format!("kind,{CONDITION_HEADER}"), &rows),
    })
}

/// Runs one analysis over the result set at `root`.
pub fn analyze(
    root: &Path,
    analysis: Analysis,
    samples: Option<&Path>,
    settings: &ProbeSettings,
) -> Result<Tables, CliError> {
    if analysis == Analysis::Sweeps {
        return sweeps(root);
    }
    let rs = ResultSet::open(root)?;
    rs.verify_manifest()?;
    let shards = rs.load_shards()?;
    match analysis {
        Analysis::GenesOverTime => Ok(over_time(&shards, |r| Some(r.gene_count as f64))),
        Analysis::LotbOverTime => Ok(over_time(&shards, |r| r.mean_lotb)),
        Analysis::EssentialOverTime => Ok(over_time(&shards, |r| r.essential_count.map(|e| e as f64))),
        Analysis::GeneCountDist => {
            let path = samples.ok_or_else(|| {
                CliError::Usage("gene_count_dist needs the sampler table: pass --samples <file>".into())
            })?;
            let text = fs::read_to_string(path).map_err(CliError::io(path))?;
            let rows = parse_samples(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
            gene_count_dist(&shards, &rows, rs.plan.viability_threshold)
        }
        Analysis::RobustnessByGenes => by_genes(&rs, &shards, Capability::Robustness, settings),
        Analysis::PlasticityByGenes => by_genes(&rs, &shards, Capability::Plasticity, settings),
        Analysis::EvolvabilityByGenes => by_genes(&rs, &shards, Capability::Evolvability, settings),
        Analysis::Sweeps => unreachable!("handled above"),
    }
}

/// Parses the game part of a condition id, e.g. `ranged-same-ff-de_novo`.
pub fn parse_game_id(id: &str) -> Option<(quandary::AttackKind, quandary::StartScheme, bool, quandary::GeneOrigin)> {
    let parts: Vec<&str> = id.split('-').collect();
    let [a, s, f, o] = parts[..] else { return None };
    Some((parse_attack_kind(a)?, parse_start_scheme(s)?, parse_friendly_fire(f)?, parse_origin(o)?))
}
