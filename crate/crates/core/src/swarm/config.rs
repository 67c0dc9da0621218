use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::objective::Objective;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("constriction requires phi1 + phi2 > 4, got {0}")]
    ConstrictionDomain(f64),
    #[error("{model} model requires {requirement} (phi1 = {phi1}, phi2 = {phi2})")]
    ModelConstraint {
        model: Model,
        requirement: &'static str,
        phi1: f64,
        phi2: f64,
    },
    #[error("ring topology needs at least 3 particles, got {0}")]
    RingTooSmall(usize),
    #[error("swarm needs at least {min} particles, got {got}")]
    SwarmTooSmall { min: usize, got: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("expected {expected} bounds, got {actual}")]
    BoundsLength { expected: usize, actual: usize },
    #[error("invalid bounds [{low}, {high}] in dimension {dim}")]
    InvalidBounds { dim: usize, low: f64, high: f64 },
    #[error("{objective} requires dimension {required}, got {actual}")]
    ObjectiveDimension {
        objective: Objective,
        required: usize,
        actual: usize,
    },
    #[error("budget {budget} is smaller than the swarm size {swarm_size}")]
    BudgetTooSmall { budget: u64, swarm_size: usize },
    #[error("parameter {name} must be finite and non-negative, got {value}")]
    BadParameter { name: &'static str, value: f64 },
    #[error("unknown {kind} '{value}'")]
    Unknown { kind: &'static str, value: String },
}

/// Clerc–Kennedy constriction factor `2 / |2 − φ − √(φ² − 4φ)|` with
/// `φ = phi1 + phi2`.
pub fn constriction_coefficient(phi1: f64, phi2: f64) -> Result<f64, ConfigError> {
    let phi = phi1 + phi2;
    if phi.is_nan() || phi <= 4.0 {
        return Err(ConfigError::ConstrictionDomain(phi));
    }
    Ok(2.0 / (2.0 - phi - (phi * phi - 4.0 * phi).sqrt()).abs())
}

/// Which memories drive a particle's velocity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Personal and neighborhood best.
    Full,
    /// Personal best only.
    Cognition,
    /// Neighborhood best only.
    Social,
    /// Neighborhood best, never counting the particle itself.
    Selfless,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    /// Fixed neighborhood `{i-1, i, i+1}` with wraparound.
    Ring,
    /// The whole swarm.
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Schedule {
    Synchronous,
    Asynchronous,
}

macro_rules! named_enum {
    ($ty:ident, $kind:literal, $($var:ident => $name:literal),+) => {
        impl $ty {
            pub fn name(self) -> &'static str {
                match self { $($ty::$var => $name),+ }
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
        impl FromStr for $ty {
            type Err = ConfigError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s.to_ascii_lowercase().as_str() {
                    $($name => Ok($ty::$var),)+
                    _ => Err(ConfigError::Unknown { kind: $kind, value: s.to_string() }),
                }
            }
        }
    };
}

named_enum!(Model, "model", Full => "full", Cognition => "cognition", Social => "social", Selfless => "selfless");
named_enum!(Topology, "topology", Ring => "ring", Star => "star");
named_enum!(Schedule, "schedule", Synchronous => "synchronous", Asynchronous => "asynchronous");

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub low: f64,
    pub high: f64,
}

impl Bounds {
    pub const fn new(low: f64, high: f64) -> Self {
        Bounds { low, high }
    }
}

/// Everything needed to build and run one swarm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwarmConfig {
    pub model: Model,
    pub topology: Topology,
    pub schedule: Schedule,
    pub objective: Objective,
    pub phi1: f64,
    pub phi2: f64,
    pub omega: f64,
    pub swarm_size: usize,
    pub dimension: usize,
    pub bounds: Vec<Bounds>,
    pub budget: u64,
    pub success_threshold: f64,
}

impl Default for SwarmConfig {
    /// Full model, star topology, synchronous updates, φ₁ = φ₂ = 2.05,
    /// ω = 1, 30 particles on Schaffer F6 over [−100, 100]², 4000
    /// evaluations, success at fitness ≤ 0.001.
    fn default() -> Self {
        SwarmConfig {
            model: Model::Full,
            topology: Topology::Star,
            schedule: Schedule::Synchronous,
            objective: Objective::SchafferF6,
            phi1: 2.05,
            phi2: 2.05,
            omega: 1.0,
            swarm_size: 30,
            dimension: 2,
            bounds: vec![Bounds::new(-100.0, 100.0); 2],
            budget: 4000,
            success_threshold: 0.001,
        }
    }
}

impl SwarmConfig {
    /// Constriction factor in force: the closed form when φ₁ + φ₂ > 4,
    /// otherwise 1.
    pub fn chi(&self) -> f64 {
        constriction_coefficient(self.phi1, self.phi2).unwrap_or(1.0)
    }

    /// Replaces the bounds with the same interval in every dimension.
    pub fn with_uniform_bounds(mut self, low: f64, high: f64) -> Self {
        self.bounds = vec![Bounds::new(low, high); self.dimension];
        self
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, value) in [("phi1", self.phi1), ("phi2", self.phi2)] {
            if !value.is_finite() || value < 0.0 {
                return Err(ConfigError::BadParameter { name, value });
            }
        }
        if !self.omega.is_finite() {
            return Err(ConfigError::BadParameter {
                name: "omega",
                value: self.omega,
            });
        }

        let (phi1, phi2) = (self.phi1, self.phi2);
        let violated = match self.model {
            Model::Full if !(phi1 > 0.0 && phi2 > 0.0) => Some("phi1 > 0 and phi2 > 0"),
            Model::Cognition if !(phi1 > 0.0 && phi2 == 0.0) => Some("phi1 > 0 and phi2 = 0"),
            Model::Social | Model::Selfless if !(phi1 == 0.0 && phi2 > 0.0) => {
                Some("phi1 = 0 and phi2 > 0")
            }
            _ => None,
        };
        if let Some(requirement) = violated {
            return Err(ConfigError::ModelConstraint {
                model: self.model,
                requirement,
                phi1,
                phi2,
            });
        }

        if self.topology == Topology::Ring && self.swarm_size < 3 {
            return Err(ConfigError::RingTooSmall(self.swarm_size));
        }
        // Selfless needs at least one other particle to learn from.
        let min = if self.model == Model::Selfless { 2 } else { 1 };
        if self.swarm_size < min {
            return Err(ConfigError::SwarmTooSmall {
                min,
                got: self.swarm_size,
            });
        }

        if self.dimension == 0 {
            return Err(ConfigError::ZeroDimension);
        }
        if let Some(required) = self.objective.fixed_dimension() {
            if required != self.dimension {
                return Err(ConfigError::ObjectiveDimension {
                    objective: self.objective,
                    required,
                    actual: self.dimension,
                });
            }
        }
        if self.bounds.len() != self.dimension {
            return Err(ConfigError::BoundsLength {
                expected: self.dimension,
                actual: self.bounds.len(),
            });
        }
        for (dim, b) in self.bounds.iter().enumerate() {
            if !(b.low.is_finite() && b.high.is_finite() && b.low < b.high) {
                return Err(ConfigError::InvalidBounds {
                    dim,
                    low: b.low,
                    high: b.high,
                });
            }
        }
        if self.budget < self.swarm_size as u64 {
            return Err(ConfigError::BudgetTooSmall {
                budget: self.budget,
                swarm_size: self.swarm_size,
            });
        }
        Ok(())
    }
}
