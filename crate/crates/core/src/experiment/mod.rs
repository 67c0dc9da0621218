//! Seeded multi-run campaigns over the four topology/schedule variants.

mod fixture;

pub use fixture::{table1_column, table1_fixture, TABLE1, TABLE1_BUDGET};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::objective::{BudgetedEvaluator, Halt};
use crate::swarm::{ConfigError, Schedule, Swarm, SwarmConfig, SwarmError, Topology};

/// A topology × schedule pairing. Declaration order (RS, RA, SS, SA) is the
/// column order of the fixture and of every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Variant {
    RS,
    RA,
    SS,
    SA,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::RS, Variant::RA, Variant::SS, Variant::SA];

    pub fn label(self) -> &'static str {
        match self {
            Variant::RS => "RS",
            Variant::RA => "RA",
            Variant::SS => "SS",
            Variant::SA => "SA",
        }
    }

    pub fn topology(self) -> Topology {
        match self {
            Variant::RS | Variant::RA => Topology::Ring,
            Variant::SS | Variant::SA => Topology::Star,
        }
    }

    pub fn schedule(self) -> Schedule {
        match self {
            Variant::RS | Variant::SS => Schedule::Synchronous,
            Variant::RA | Variant::SA => Schedule::Asynchronous,
        }
    }

    pub fn from_parts(topology: Topology, schedule: Schedule) -> Self {
        match (topology, schedule) {
            (Topology::Ring, Schedule::Synchronous) => Variant::RS,
            (Topology::Ring, Schedule::Asynchronous) => Variant::RA,
            (Topology::Star, Schedule::Synchronous) => Variant::SS,
            (Topology::Star, Schedule::Asynchronous) => Variant::SA,
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    /// `base` with this variant's topology and schedule.
    pub fn apply(self, base: &SwarmConfig) -> SwarmConfig {
        SwarmConfig {
            topology: self.topology(),
            schedule: self.schedule(),
            ..base.clone()
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Variant {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "RS" => Ok(Variant::RS),
            "RA" => Ok(Variant::RA),
            "SS" => Ok(Variant::SS),
            "SA" => Ok(Variant::SA),
            _ => Err(ConfigError::Unknown {
                kind: "variant",
                value: s.to_string(),
            }),
        }
    }
}

/// Outcome of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub variant: Variant,
    pub run_index: usize,
    pub seed: u64,
    /// Evaluations consumed, initialization included.
    pub evaluations: u64,
    pub best_fitness: f64,
    pub success: bool,
    pub runtime: Duration,
}

impl RunRecord {
    /// Equality on everything except wall-clock runtime.
    pub fn same_outcome(&self, other: &RunRecord) -> bool {
        self.variant == other.variant
            && self.run_index == other.run_index
            && self.seed == other.seed
            && self.evaluations == other.evaluations
            && self.best_fitness.to_bits() == other.best_fitness.to_bits()
            && self.success == other.success
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariantSummary {
    pub runs: usize,
    pub successes: usize,
    pub mean_evaluations: f64,
}

impl VariantSummary {
    pub fn from_records(records: &[RunRecord]) -> Self {
        let total: u64 = records.iter().map(|r| r.evaluations).sum();
        VariantSummary {
            runs: records.len(),
            successes: records.iter().filter(|r| r.success).count(),
            mean_evaluations: total as f64 / records.len() as f64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentResult {
    /// Base configuration; each variant overrides topology and schedule.
    pub config: SwarmConfig,
    pub base_seed: u64,
    pub runs: BTreeMap<Variant, Vec<RunRecord>>,
    pub summaries: BTreeMap<Variant, VariantSummary>,
}

impl ExperimentResult {
    /// All records ordered by (variant, run index).
    pub fn records(&self) -> impl Iterator<Item = &RunRecord> {
        self.runs.values().flatten()
    }
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-run seed: `splitmix64(splitmix64(base ^ fnv1a(label)) ^ run_index)`.
///
/// Any single run can be replayed from `(base_seed, label, run_index)`
/// alone.
pub fn derive_seed(base_seed: u64, label: &str, run_index: usize) -> u64 {
    let label_hash = label.bytes().fold(FNV_OFFSET, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(FNV_PRIME)
    });
    splitmix64(splitmix64(base_seed ^ label_hash) ^ run_index as u64)
}

/// Runs one seeded swarm of `variant` until some evaluation reaches the
/// success threshold or the budget is spent.
pub fn run_single(
    config: &SwarmConfig,
    variant: Variant,
    run_index: usize,
    seed: u64,
) -> Result<RunRecord, SwarmError> {
    let cfg = variant.apply(config);
    cfg.validate()?;
    let start = Instant::now();
    let mut ev =
        BudgetedEvaluator::new(cfg.objective, cfg.budget).with_target(cfg.success_threshold);

    match Swarm::init(cfg, seed, &mut ev) {
        Ok(mut swarm) => loop {
            if swarm.step(&mut ev)?.halt.is_some() {
                break;
            }
        },
        Err(SwarmError::HaltedDuringInit(_)) => {}
        Err(e) => return Err(e),
    }

    let success = ev.halt() == Some(Halt::TargetReached);
    Ok(RunRecord {
        variant,
        run_index,
        seed,
        evaluations: ev.used(),
        best_fitness: ev.best_seen(),
        success,
        runtime: start.elapsed(),
    })
}

/// `runs` seeded runs of each variant, executed in parallel. Output order
/// and contents do not depend on scheduling.
pub fn run_experiment(
    config: &SwarmConfig,
    variants: &[Variant],
    runs: usize,
    base_seed: u64,
) -> Result<ExperimentResult, SwarmError> {
    let mut variants = variants.to_vec();
    variants.sort();
    variants.dedup();
    for v in &variants {
        v.apply(config).validate()?;
    }

    let jobs: Vec<(Variant, usize)> = variants
        .iter()
        .flat_map(|&v| (0..runs).map(move |r| (v, r)))
        .collect();
    let records = jobs
        .par_iter()
        .map(|&(v, r)| run_single(config, v, r, derive_seed(base_seed, v.label(), r)))
        .collect::<Result<Vec<_>, _>>()?;

    let mut by_variant: BTreeMap<Variant, Vec<RunRecord>> = BTreeMap::new();
    for rec in records {
        by_variant.entry(rec.variant).or_default().push(rec);
    }
    let summaries = by_variant
        .iter()
        .map(|(&v, recs)| (v, VariantSummary::from_records(recs)))
        .collect();
    Ok(ExperimentResult {
        config: config.clone(),
        base_seed,
        runs: by_variant,
        summaries,
    })
}
