//! On-disk result sets: trial shards, genome checkpoints and the manifest.
//!
//! ```text
//! <out>/plan.txt
//! <out>/manifest.txt
//! <out>/shards/<condition_id>/trial_007.csv
//! <out>/shards/<condition_id>/trial_007.genomes
//! ```
//!
//! A shard CSV only ever appears complete: it is written to a temporary
//! file and renamed into place after its genome file.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use quandary::evolution::{Condition, GenerationRow, TrialRecord};
use quandary::Genome;

use crate::error::CliError;
use crate::plan::{parse_condition, Plan};

pub const TRIAL_COLUMNS: &[&str] = &[
    "condition_id",
    "attack_kind",
    "start_scheme",
    "friendly_fire",
    "origin",
    "regime",
    "trial",
    "generation",
    "score",
    "gene_count",
    "essential_count",
    "mean_lotb",
    "restarts",
];

pub const MANIFEST_HEADER: &str = "quandary-manifest 1";

/// `%.9g`-style formatting: 9 significant digits, trailing zeros dropped.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..9).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (8 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn condition_fields(c: &Condition) -> [String; 6] {
    [
        c.id(),
        c.attack_kind.name().into(),
        c.start_scheme.name().into(),
        if c.friendly_fire { "ff" } else { "safe" }.into(),
        c.origin.name().into(),
        c.regime.name().into(),
    ]
}

pub fn trial_csv(record: &TrialRecord, trial: usize) -> String {
    let mut out = TRIAL_COLUMNS.join(",");
    out.push('\n');
    let fields = condition_fields(&record.condition).join(",");
    for row in &record.rows {
        writeln!(
            out,
            "{fields},{trial},{},{},{},{},{},{}",
            row.generation,
            row.score,
            row.gene_count,
            row.essential_count.map_or(String::new(), |e| e.to_string()),
            row.mean_lotb.map_or(String::new(), fmt_float),
            record.restarts
        )
        .expect("writing to a String");
    }
    out
}

pub fn genomes_text(record: &TrialRecord) -> String {
    let mut out = format!("# bootstrap_generations {}\n", record.bootstrap_generations);
    for (generation, genome) in &record.checkpoints {
        writeln!(out, "# generation {generation}").expect("writing to a String");
        out.push_str(&genome.to_text());
        if !out.ends_with('\n') {
            out.push('\n');
        }
    }
    out
}

/// A trial shard read back from disk.
#[derive(Clone, Debug, PartialEq)]
pub struct Shard {
    pub condition: Condition,
    pub trial: usize,
    pub restarts: usize,
    pub rows: Vec<GenerationRow>,
}

impl Shard {
    pub fn final_row(&self) -> &GenerationRow {
        self.rows.last().expect("shards have at least one row")
    }
}

pub fn parse_shard(text: &str) -> Result<Shard, String> {
    let mut lines = text.lines();
    if lines.next() != Some(TRIAL_COLUMNS.join(",").as_str()) {
        return Err("header does not match the trial schema".into());
    }
    let mut shard: Option<Shard> = None;
    for (i, line) in lines.enumerate() {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != TRIAL_COLUMNS.len() {
            return Err(format!("row {}: expected {} fields", i + 1, TRIAL_COLUMNS.len()));
        }
        let bad = |what: &str| format!("row {}: bad {what}", i + 1);
        let condition = parse_condition(f[0]).ok_or_else(|| bad("condition_id"))?;
        if condition_fields(&condition).iter().zip(&f[..6]).any(|(a, b)| a != b) {
            return Err(bad("condition fields"));
        }
        let int = |s: &str, what: &str| s.parse::<usize>().map_err(|_| bad(what));
        let trial = int(f[6], "trial")?;
        let restarts = int(f[12], "restarts")?;
        let row = GenerationRow {
            generation: int(f[7], "generation")?,
            score: f[8].parse().map_err(|_| bad("score"))?,
            gene_count: int(f[9], "gene_count")?,
            essential_count: match f[10] {
                "" => None,
                s => Some(int(s, "essential_count")?),
            },
            mean_lotb: match f[11] {
                "" => None,
                s => Some(s.parse().map_err(|_| bad("mean_lotb"))?),
            },
        };
        let s = shard.get_or_insert_with(|| Shard {
            condition,
            trial,
            restarts,
            rows: Vec::new(),
        });
        if s.condition != condition || s.trial != trial || s.restarts != restarts {
            return Err(bad("cell fields (they change between rows)"));
        }
        if row.generation != s.rows.len() {
            return Err(bad("generation (rows must be consecutive from 0)"));
        }
        s.rows.push(row);
    }
    shard.ok_or_else(|| "no rows".into())
}

/// Checkpointed genomes keyed by generation, plus the bootstrap length.
pub fn parse_genomes(text: &str) -> Result<(usize, Vec<(usize, Genome)>), String> {
    let mut bootstrap = None;
    let mut out: Vec<(usize, String)> = Vec::new();
    for line in text.lines() {
        if let Some(v) = line.strip_prefix("# bootstrap_generations ") {
            bootstrap = Some(v.parse().map_err(|_| "bad bootstrap_generations")?);
        } else if let Some(v) = line.strip_prefix("# generation ") {
            out.push((v.parse().map_err(|_| "bad generation marker")?, String::new()));
        } else if let Some((_, body)) = out.last_mut() {
            body.push_str(line);
            body.push('\n');
        } else if !line.trim().is_empty() {
            return Err("genome line before any generation marker".into());
        }
    }
    let genomes = out
        .into_iter()
        .map(|(g, body)| body.parse::<Genome>().map(|genome| (g, genome)).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((bootstrap.ok_or("missing bootstrap_generations")?, genomes))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::with_capacity(64), |mut s, b| {
        write!(s, "{b:02x}").expect("writing to a String");
        s
    })
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().expect("result paths have a parent");
    fs::create_dir_all(dir).map_err(CliError::io(dir))?;
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents).map_err(CliError::io(&tmp))?;
    fs::rename(&tmp, path).map_err(CliError::io(path))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestCell {
    pub condition_id: String,
    pub trial: usize,
    pub seed: u64,
    pub restarts: usize,
    pub bootstrap_generations: usize,
    pub shard_sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub software: String,
    pub plan_sha256: String,
    pub cells: Vec<ManifestCell>,
}

pub fn software_version() -> String {
    format!("quandary {}", env!("CARGO_PKG_VERSION"))
}

impl Manifest {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{MANIFEST_HEADER}\nsoftware = {}\nplan = sha256:{}\ncells = {}\n",
            self.software,
            self.plan_sha256,
            self.cells.len()
        );
        for c in &self.cells {
            writeln!(
                s,
                "{} {} seed={} restarts={} bootstrap={} shard=sha256:{}",
                c.condition_id, c.trial, c.seed, c.restarts, c.bootstrap_generations, c.shard_sha256
            )
            .expect("writing to a String");
        }
        s
    }

    pub fn parse(text: &str) -> Result<Manifest, String> {
        let mut lines = text.lines();
        if lines.next() != Some(MANIFEST_HEADER) {
            return Err(format!("missing header `{MANIFEST_HEADER}`"));
        }
        let mut field = |key: &str| -> Result<String, String> {
            lines
                .next()
                .and_then(|l| l.strip_prefix(key)?.strip_prefix(" = ").map(str::to_string))
                .ok_or_else(|| format!("missing `{key}` line"))
        };
        let software = field("software")?;
        let plan_sha256 = field("plan")?
            .strip_prefix("sha256:")
            .ok_or("plan hash must be sha256")?
            .to_string();
        let count: usize = field("cells")?.parse().map_err(|_| "bad cell count")?;
        let mut cells = Vec::with_capacity(count);
        for (i, line) in lines.enumerate() {
            let bad = || format!("cell line {}: malformed", i + 1);
            let parts: Vec<&str> = line.split(' ').collect();
            let [id, trial, seed, restarts, bootstrap, shard] = parts[..] else {
                return Err(bad());
            };
            let kv = |s: &str, k: &str| s.strip_prefix(k).map(str::to_string).ok_or_else(bad);
            cells.push(ManifestCell {
                condition_id: id.to_string(),
                trial: trial.parse().map_err(|_| bad())?,
                seed: kv(seed, "seed=")?.parse().map_err(|_| bad())?,
                restarts: kv(restarts, "restarts=")?.parse().map_err(|_| bad())?,
                bootstrap_generations: kv(bootstrap, "bootstrap=")?.parse().map_err(|_| bad())?,
                shard_sha256: kv(shard, "shard=sha256:")?,
            });
        }
        if cells.len() != count {
            return Err(format!("manifest lists {} cells but declares {count}", cells.len()));
        }
        Ok(Manifest {
            software,
            plan_sha256,
            cells,
        })
    }
}

/// Paths and plan of one result set.
#[derive(Clone, Debug)]
pub struct ResultSet {
    pub root: PathBuf,
    pub plan: Plan,
}

impl ResultSet {
    pub fn new(root: impl Into<PathBuf>, plan: Plan) -> Self {
        ResultSet { root: root.into(), plan }
    }

    /// Opens an existing result set using its stored plan.
    pub fn open(root: impl Into<PathBuf>) -> Result<Self, CliError> {
        let root = root.into();
        let plan_path = root.join("plan.txt");
        let text = fs::read_to_string(&plan_path).map_err(|e| {
            CliError::Data(format!("{}: missing or unreadable plan ({e}); is this a result set?", plan_path.display()))
        })?;
        let plan = Plan::parse(&text, crate::plan::Profile::Desk)?;
        Ok(ResultSet { root, plan })
    }

    pub fn plan_path(&self) -> PathBuf {
        self.root.join("plan.txt")
    }

    pub fn manifest_path(&self) -> PathBuf {
        self.root.join("manifest.txt")
    }

    pub fn shard_path(&self, condition: &Condition, trial: usize) -> PathBuf {
        self.root
            .join("shards")
            .join(condition.id())
            .join(format!("trial_{trial:03}.csv"))
    }

    pub fn genomes_path(&self, condition: &Condition, trial: usize) -> PathBuf {
        self.shard_path(condition, trial).with_extension("genomes")
    }

    pub fn plan_sha256(&self) -> String {
        sha256_hex(self.plan.to_text().as_bytes())
    }

    /// Every (condition, trial) cell of the plan, in manifest order.
    pub fn cells(&self) -> Vec<(Condition, usize)> {
        self.plan
            .conditions()
            .into_iter()
            .flat_map(|c| (0..self.plan.trials_per_condition).map(move |t| (c, t)))
            .collect()
    }

    /// Writes the genome checkpoints, then the shard.
    pub fn write_cell(&self, record: &TrialRecord, trial: usize) -> Result<(), CliError> {
        write_atomic(&self.genomes_path(&record.condition, trial), genomes_text(record).as_bytes())?;
        write_atomic(&self.shard_path(&record.condition, trial), trial_csv(record, trial).as_bytes())
    }

    /// Reads and checks one completed cell; `Ok(None)` if it has no shard.
    pub fn read_cell(&self, condition: &Condition, trial: usize) -> Result<Option<(Shard, Vec<u8>)>, CliError> {
        let path = self.shard_path(condition, trial);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(CliError::io(&path)(e)),
        };
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| CliError::Data(format!("{}: not UTF-8", path.display())))?;
        let shard = parse_shard(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        if shard.condition != *condition || shard.trial != trial {
            return Err(CliError::Data(format!("{}: shard belongs to another cell", path.display())));
        }
        Ok(Some((shard, bytes)))
    }

    pub fn read_genomes(&self, condition: &Condition, trial: usize) -> Result<(usize, Vec<(usize, Genome)>), CliError> {
        let path = self.genomes_path(condition, trial);
        let text = fs::read_to_string(&path).map_err(CliError::io(&path))?;
        parse_genomes(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
    }

    /// Builds the manifest from the shards on disk.
    pub fn scan_manifest(&self) -> Result<Manifest, CliError> {
        let mut cells = Vec::new();
        for (condition, trial) in self.cells() {
            if let Some((shard, bytes)) = self.read_cell(&condition, trial)? {
                let (bootstrap_generations, _) = self.read_genomes(&condition, trial)?;
                cells.push(ManifestCell {
                    condition_id: condition.id(),
                    trial,
                    seed: self.plan.trial_seed(&condition, trial),
                    restarts: shard.restarts,
                    bootstrap_generations,
                    shard_sha256: sha256_hex(&bytes),
                });
            }
        }
        Ok(Manifest {
            software: software_version(),
            plan_sha256: self.plan_sha256(),
            cells,
        })
    }

    /// Loads the manifest and checks it against the plan and the shards.
    pub fn verify_manifest(&self) -> Result<Option<Manifest>, CliError> {
        let path = self.manifest_path();
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(CliError::io(&path)(e)),
        };
        let corrupt = |why: String| CliError::Data(format!("{}: corrupt manifest: {why}", path.display()));
        let manifest = Manifest::parse(&text).map_err(corrupt)?;
        if manifest.plan_sha256 != self.plan_sha256() {
            return Err(corrupt("plan hash does not match plan.txt".into()));
        }
        for cell in &manifest.cells {
            let condition =
                parse_condition(&cell.condition_id).ok_or_else(|| corrupt(format!("unknown condition {}", cell.condition_id)))?;
            let shard_path = self.shard_path(&condition, cell.trial);
            let bytes = fs::read(&shard_path)
                .map_err(|_| corrupt(format!("listed shard {} is missing", shard_path.display())))?;
            if sha256_hex(&bytes) != cell.shard_sha256 {
                return Err(corrupt(format!("hash mismatch for {}", shard_path.display())));
            }
            if cell.seed != self.plan.trial_seed(&condition, cell.trial) {
                return Err(corrupt(format!("seed mismatch for {} trial {}", cell.condition_id, cell.trial)));
            }
        }
        Ok(Some(manifest))
    }

    /// All completed shards, in manifest order. Fails on an empty set.
    pub fn load_shards(&self) -> Result<Vec<Shard>, CliError> {
        let mut out = Vec::new();
        for (condition, trial) in self.cells() {
            if let Some((shard, _)) = self.read_cell(&condition, trial)? {
                out.push(shard);
            }
        }
        if out.is_empty() {
            return Err(CliError::Data(format!("{}: result set has no completed trials", self.root.display())));
        }
        Ok(out)
    }
}
