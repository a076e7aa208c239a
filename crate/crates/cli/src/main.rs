use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use quandary_cli::analyze::{analyze, Analysis, ProbeSettings};
use quandary_cli::plan::parse_condition;
use quandary_cli::results::write_atomic;
use quandary_cli::run::{replay, run};
use quandary_cli::sample::{sample_table, DEFAULT_SAMPLES};
use quandary_cli::sweep::{parse_kind, write_sweep};
use quandary_cli::{CliError, Plan, Profile, ResultSet};

/// Quandary Den experiment runner.
#[derive(Parser, Debug)]
#[command(name = "quandary", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct PlanArgs {
    /// Plan file; keys left out take the profile's values.
    #[arg(long)]
    plan: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "desk")]
    profile: Profile,
}

impl PlanArgs {
    fn load(&self) -> Result<Plan, CliError> {
        let plan = match &self.plan {
            Some(path) => Plan::parse(&fs::read_to_string(path).map_err(CliError::io(path))?, self.profile)?,
            None => Plan::profile(self.profile),
        };
        plan.validate()?;
        Ok(plan)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run (or resume) every cell of a plan.
    Run {
        #[command(flatten)]
        plan: PlanArgs,
        #[arg(long)]
        out: PathBuf,
        /// Stop after this many new cells.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Write an analysis table pair into <out>/analysis/.
    Analyze {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        analysis: Analysis,
        /// Sampler table for gene_count_dist (default: <out>/samples.csv).
        #[arg(long)]
        samples: Option<PathBuf>,
        /// Seed for robustness, plasticity and evolvability measurements.
        #[arg(long, default_value_t = 0)]
        probe_seed: u64,
        #[arg(long, default_value_t = 64)]
        reps: usize,
        #[arg(long, default_value_t = 32)]
        configs: usize,
        #[arg(long, default_value_t = 32)]
        rounds: usize,
        #[arg(long, default_value_t = 64)]
        horizon: usize,
    },
    /// Regenerate one cell and print its shard CSV.
    Replay {
        /// Result set whose stored plan is used (alternative to --plan).
        #[arg(long, conflicts_with = "plan")]
        out: Option<PathBuf>,
        #[command(flatten)]
        plan: PlanArgs,
        #[arg(long)]
        condition: String,
        #[arg(long)]
        trial: usize,
        #[arg(long)]
        master_seed: Option<u64>,
        /// Write the engine trace of the final genome to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write the final genome to this file.
        #[arg(long)]
        genome: Option<PathBuf>,
    },
    /// Count threshold-meeting random genomes per gene count.
    Sample {
        #[command(flatten)]
        plan: PlanArgs,
        /// Output file (default: <out>/samples.csv).
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16")]
        gene_counts: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,0.5")]
        thresholds: Vec<f64>,
    },
    /// Run a rate sweep for every condition of a plan.
    Sweep {
        #[command(flatten)]
        plan: PlanArgs,
        #[arg(long)]
        out: PathBuf,
        /// gene_event_rate or point_rate.
        #[arg(long)]
        kind: String,
    },
}

fn execute(cli: Cli) -> Result<(), CliError> {
    if let Some(n) = cli.workers {
        if n == 0 {
            return Err(CliError::Usage("--workers must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Run { plan, out, limit } => {
            let rs = ResultSet::new(out, plan.load()?);
            let s = run(&rs, limit)?;
            println!(
                "{} cells: {} already done, {} completed",
                s.total, s.already_done, s.completed
            );
        }
        Command::Analyze {
            out,
            analysis,
            samples,
            probe_seed,
            reps,
            configs,
            rounds,
            horizon,
        } => {
            let settings = ProbeSettings {
                reps,
                configs,
                rounds,
                horizon,
                seed: probe_seed,
            };
            let default_samples = out.join("samples.csv");
            let samples = samples.or_else(|| default_samples.exists().then_some(default_samples));
            let tables = analyze(&out, analysis, samples.as_deref(), &settings)?;
            let dir = out.join("analysis");
            fs::create_dir_all(&dir).map_err(CliError::io(&dir))?;
            let (a, b) = tables.write(&dir, analysis.name())?;
            println!("{}\n{}", a.display(), b.display());
        }
        Command::Replay {
            out,
            plan,
            condition,
            trial,
            master_seed,
            trace,
            genome,
        } => {
            let mut rs = match out {
                Some(root) => ResultSet::open(root)?,
                None => ResultSet::new(PathBuf::new(), plan.load()?),
            };
            if let Some(seed) = master_seed {
                rs.plan.master_seed = seed;
            }
            let condition =
                parse_condition(&condition).ok_or_else(|| CliError::Usage(format!("unknown condition id: {condition}")))?;
            let r = replay(&rs, condition, trial, trace.is_some())?;
            if let (Some(path), Some(t)) = (trace, r.trace) {
                write_atomic(&path, t.to_string().as_bytes())?;
            }
            if let Some(path) = genome {
                write_atomic(&path, r.record.final_genome.to_text().as_bytes())?;
            }
            eprintln!(
                "seed {} bootstrap_generations {} restarts {}",
                r.record.seed, r.record.bootstrap_generations, r.record.restarts
            );
            print!("{}", r.csv);
        }
        Command::Sample {
            plan,
            out,
            gene_counts,
            samples,
            thresholds,
        } => {
            let text = sample_table(&plan.load()?, &gene_counts, samples, &thresholds)?;
            let path = if out.extension().is_some_and(|e| e == "csv") {
                out
            } else {
                out.join("samples.csv")
            };
            ensure_parent(&path)?;
            write_atomic(&path, text.as_bytes())?;
            println!("{}", path.display());
        }
        Command::Sweep { plan, out, kind } => {
            let kind = parse_kind(&kind)
                .ok_or_else(|| CliError::Usage(format!("unknown sweep kind {kind:?}; use gene_event_rate or point_rate")))?;
            let path = write_sweep(&out, &plan.load()?, kind)?;
            println!("{}", path.display());
        }
    }
    Ok(())
}

fn ensure_parent(path: &Path) -> Result<(), CliError> {
    match path.parent() {
        Some(dir) if !dir.as_os_str().is_empty() => fs::create_dir_all(dir).map_err(CliError::io(dir)),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("quandary: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
