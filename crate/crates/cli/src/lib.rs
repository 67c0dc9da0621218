//! Command implementations behind the `psolab` binary.
//!
//! Exit statuses: 0 on success, 1 for I/O or data errors, 2 for usage or
//! configuration errors.

pub mod records;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use psolab_core::stats::{anova_one_way, compare_means, AnovaReport, MeanComparison};
use psolab_core::swarm::Bounds;
use psolab_core::{
    constriction_coefficient, run_experiment, Model, Objective, SwarmConfig, SwarmError, Variant,
};
use serde::Serialize;
use thiserror::Error;

use records::{fixture_rows, read_rows, rows_from_experiment, sample_groups, write_rows};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("{context}: {source}")]
    Io { context: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) | CliError::Io { .. } => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "psolab",
    version,
    about = "Particle swarm experiments and their statistics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run seeded PSO campaigns and write one CSV row per run.
    Run(RunArgs),
    /// ANOVA across groups plus F-gated t-tests for chosen pairs.
    Stats(StatsArgs),
    /// Write the published 30-run evaluation counts as run-record CSV.
    Fixture(FixtureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantChoice {
    Rs,
    Ra,
    Ss,
    Sa,
    All,
}

impl VariantChoice {
    fn variants(self) -> Vec<Variant> {
        match self {
            VariantChoice::Rs => vec![Variant::RS],
            VariantChoice::Ra => vec![Variant::RA],
            VariantChoice::Ss => vec![Variant::SS],
            VariantChoice::Sa => vec![Variant::SA],
            VariantChoice::All => Variant::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelChoice {
    Full,
    Cognition,
    Social,
    Selfless,
}

impl From<ModelChoice> for Model {
    fn from(m: ModelChoice) -> Self {
        match m {
            ModelChoice::Full => Model::Full,
            ModelChoice::Cognition => Model::Cognition,
            ModelChoice::Social => Model::Social,
            ModelChoice::Selfless => Model::Selfless,
        }
    }
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub variant: VariantChoice,
    #[arg(long, value_enum, default_value = "full")]
    pub model: ModelChoice,
    /// schaffer_f6 or sphere
    #[arg(long, default_value = "schaffer_f6")]
    pub objective: String,
    #[arg(long, default_value_t = 30)]
    pub runs: usize,
    #[arg(long, default_value_t = 30)]
    pub particles: usize,
    #[arg(long, default_value_t = 4000)]
    pub budget: u64,
    /// Cognition learning rate [default: 2.05, or 0 for social/selfless]
    #[arg(long)]
    pub phi1: Option<f64>,
    /// Social learning rate [default: 2.05, or 0 for cognition]
    #[arg(long)]
    pub phi2: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    /// A run succeeds once some evaluation is at or below this fitness.
    #[arg(long, default_value_t = 0.001)]
    pub threshold: f64,
    #[arg(long, default_value_t = 2)]
    pub dimension: usize,
    #[arg(long, default_value_t = -100.0, allow_negative_numbers = true)]
    pub lower: f64,
    #[arg(long, default_value_t = 100.0, allow_negative_numbers = true)]
    pub upper: f64,
    /// Base seed; derived from the clock and echoed when omitted.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output CSV path; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "fixture"])))]
pub struct StatsArgs {
    /// Run-record CSV to analyze.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Analyze the embedded published dataset.
    #[arg(long)]
    pub fixture: bool,
    /// One-way ANOVA across all groups (the default when no --ttest is given).
    #[arg(long)]
    pub anova: bool,
    /// Pair of group labels to compare, e.g. SS,SA. Repeatable.
    #[arg(long, value_name = "A,B")]
    pub ttest: Vec<String>,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    /// Output CSV path; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Fixture(args) => cmd_fixture(args),
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    match path {
        Some(p) => {
            let f = File::create(p).map_err(|source| CliError::Io {
                context: format!("cannot write {}", p.display()),
                source,
            })?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn write_csv(path: &Option<PathBuf>, rows: &[records::RunCsvRow]) -> Result<(), CliError> {
    let out = open_output(path)?;
    write_rows(out, rows).map_err(|e| CliError::Io {
        context: "cannot write CSV".into(),
        source: io::Error::other(e.to_string()),
    })
}

/// Builds and validates the swarm configuration described by `args`.
pub fn run_config(args: &RunArgs) -> Result<SwarmConfig, CliError> {
    let usage = |e: &dyn std::fmt::Display| CliError::Usage(e.to_string());
    let objective: Objective = args.objective.parse().map_err(|e| usage(&e))?;
    let model = Model::from(args.model);
    let (default1, default2) = match model {
        Model::Full => (2.05, 2.05),
        Model::Cognition => (2.05, 0.0),
        Model::Social | Model::Selfless => (0.0, 2.05),
    };
    let phi1 = args.phi1.unwrap_or(default1);
    let phi2 = args.phi2.unwrap_or(default2);
    if model == Model::Full {
        // the full model always runs constricted
        constriction_coefficient(phi1, phi2).map_err(|e| usage(&e))?;
    }
    if args.runs == 0 {
        return Err(CliError::Usage("--runs must be at least 1".into()));
    }
    let cfg = SwarmConfig {
        model,
        objective,
        phi1,
        phi2,
        omega: args.omega,
        swarm_size: args.particles,
        dimension: args.dimension,
        bounds: vec![Bounds::new(args.lower, args.upper); args.dimension],
        budget: args.budget,
        success_threshold: args.threshold,
        ..SwarmConfig::default()
    };
    for v in args.variant.variants() {
        v.apply(&cfg).validate().map_err(|e| usage(&e))?;
    }
    Ok(cfg)
}

pub fn cmd_run(args: RunArgs) -> Result<(), CliError> {
    let cfg = run_config(&args)?;
    let seed = args.seed.unwrap_or_else(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_nanos() as u64)
            .unwrap_or(0)
    });
    let variants = args.variant.variants();
    let result = run_experiment(&cfg, &variants, args.runs, seed).map_err(|e| match e {
        SwarmError::Config(c) => CliError::Usage(c.to_string()),
        other => CliError::Data(other.to_string()),
    })?;
    write_csv(&args.out, &rows_from_experiment(&result))?;

    let mut summary = String::new();
    summary.push_str(&format!(
        "seed {seed}  model {}  objective {}  particles {}  budget {}  success threshold {}  phi1 {}  phi2 {}  omega {}  chi {:.10}\n",
        cfg.model, cfg.objective, cfg.swarm_size, cfg.budget, cfg.success_threshold,
        cfg.phi1, cfg.phi2, cfg.omega, cfg.chi()
    ));
    summary.push_str("variant  runs  successes  mean evaluations\n");
    for (v, s) in &result.summaries {
        summary.push_str(&format!(
            "{:<7}  {:>4}  {:>9}  {:>16.4}\n",
            v.label(),
            s.runs,
            s.successes,
            s.mean_evaluations
        ));
    }
    if args.out.is_some() {
        print!("{summary}");
    } else {
        eprint!("{summary}");
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct StatsOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anova: Option<AnovaReport>,
    pub comparisons: Vec<MeanComparison>,
}

/// Runs the requested analyses without printing.
pub fn analyze(args: &StatsArgs) -> Result<StatsOutput, CliError> {
    let rows = match &args.input {
        Some(path) => {
            let f = File::open(path).map_err(|source| CliError::Io {
                context: format!("cannot read {}", path.display()),
                source,
            })?;
            read_rows(BufReader::new(f)).map_err(|e| CliError::Data(e.to_string()))?
        }
        None => fixture_rows(),
    };
    if !(args.alpha > 0.0 && args.alpha < 1.0) {
        return Err(CliError::Usage(format!(
            "--alpha must lie in (0, 1), got {}",
            args.alpha
        )));
    }

    let mut pairs = Vec::new();
    for spec in &args.ttest {
        match spec.split_once(',') {
            Some((a, b)) if !a.trim().is_empty() && !b.trim().is_empty() => {
                pairs.push((a.trim().to_string(), b.trim().to_string()))
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "--ttest expects A,B, got '{spec}'"
                )))
            }
        }
    }

    let groups = sample_groups(&rows).map_err(|e| CliError::Data(e.to_string()))?;
    let find = |label: &str| {
        groups.iter().find(|g| g.label() == label).ok_or_else(|| {
            let known: Vec<&str> = groups.iter().map(|g| g.label()).collect();
            CliError::Usage(format!(
                "unknown group '{label}' (have: {})",
                known.join(", ")
            ))
        })
    };
    let pair_groups = pairs
        .iter()
        .map(|(a, b)| Ok((find(a)?, find(b)?)))
        .collect::<Result<Vec<_>, CliError>>()?;

    let run_anova = args.anova || pairs.is_empty();
    let anova = if run_anova {
        Some(anova_one_way(&groups, args.alpha).map_err(|e| CliError::Data(e.to_string()))?)
    } else {
        None
    };
    let comparisons = pair_groups
        .into_iter()
        .map(|(a, b)| compare_means(a, b, args.alpha).map_err(|e| CliError::Data(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StatsOutput { anova, comparisons })
}

pub fn render_stats(out: &StatsOutput, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(out).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut parts = Vec::new();
            if let Some(a) = &out.anova {
                parts.push(a.to_string());
            }
            parts.extend(out.comparisons.iter().map(ToString::to_string));
            parts.join("\n")
        }
    }
}

pub fn cmd_stats(args: StatsArgs) -> Result<(), CliError> {
    let out = analyze(&args)?;
    print!("{}", render_stats(&out, args.format));
    Ok(())
}

pub fn cmd_fixture(args: FixtureArgs) -> Result<(), CliError> {
    write_csv(&args.out, &fixture_rows())
}
