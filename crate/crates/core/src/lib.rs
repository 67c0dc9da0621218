//! Particle swarm optimization with ring/star neighborhoods and
//! synchronous/asynchronous updates under a hard evaluation budget, plus
//! the statistics needed to compare the variants.
//!
//! ```
//! use psolab_core::{run_single, SwarmConfig, Variant};
//!
//! let record = run_single(&SwarmConfig::default(), Variant::SA, 0, 42).unwrap();
//! assert!(record.evaluations <= 4000);
//! ```

pub mod experiment;
pub mod objective;
pub mod stats;
pub mod swarm;

pub use experiment::{
    derive_seed, run_experiment, run_single, table1_fixture, ExperimentResult, RunRecord, Variant,
    VariantSummary,
};
pub use objective::{BudgetedEvaluator, EvalError, Halt, Objective, ObjectiveFn, Point};
pub use stats::{
    anova_one_way, compare_means, f_test_variance_ratio, t_test_pooled, t_test_welch, AnovaReport,
    FTestReport, SampleGroup, StatsError, TTestReport,
};
pub use swarm::{
    constriction_coefficient, ConfigError, Model, Schedule, Swarm, SwarmConfig, SwarmError,
    Topology,
};
