//! Benchmark objectives and the budget-enforcing evaluator.
//!
//! Every fitness value a swarm sees passes through a [`BudgetedEvaluator`].
//! The evaluator owns the evaluation counter, so no stepping schedule can
//! overspend the budget or miscount. All objectives are minimized.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ObjectiveError {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("point must have at least one coordinate")]
    EmptyPoint,
    #[error("non-finite coordinate at index {0}")]
    NonFinite(usize),
    #[error("unknown objective '{0}' (expected schaffer_f6 or sphere)")]
    Unknown(String),
}

/// A position in the search space. Coordinates are finite and the length
/// is fixed at construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self, ObjectiveError> {
        if coords.is_empty() {
            return Err(ObjectiveError::EmptyPoint);
        }
        if let Some(i) = coords.iter().position(|c| !c.is_finite()) {
            return Err(ObjectiveError::NonFinite(i));
        }
        Ok(Point(coords))
    }

    pub fn origin(dimension: usize) -> Self {
        assert!(dimension > 0, "dimension must be positive");
        Point(vec![0.0; dimension])
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// Adds `delta` component-wise. Panics if the dimensions differ.
    pub(crate) fn translate(&mut self, delta: &[f64]) {
        assert_eq!(self.0.len(), delta.len(), "dimension mismatch in translate");
        for (x, d) in self.0.iter_mut().zip(delta) {
            *x += d;
        }
    }
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Self {
        p.0
    }
}

/// Schaffer's F6: `0.5 + (sin²(√(x²+y²)) − 0.5) / (1 + 0.001(x²+y²))²`.
///
/// Defined on two dimensions only; values lie in `[0, 1)` with the global
/// minimum 0 at the origin.
pub fn schaffer_f6(p: &Point) -> Result<f64, ObjectiveError> {
    let c = p.coords();
    if c.len() != 2 {
        return Err(ObjectiveError::DimensionMismatch {
            expected: 2,
            actual: c.len(),
        });
    }
    let r2 = c[0] * c[0] + c[1] * c[1];
    let s = r2.sqrt().sin();
    let denom = 1.0 + 0.001 * r2;
    Ok(0.5 + (s * s - 0.5) / (denom * denom))
}

pub fn sphere(p: &Point) -> f64 {
    p.coords().iter().map(|c| c * c).sum()
}

/// Anything that maps a point to a fitness value.
///
/// Implemented by [`Objective`]; tests implement it to instrument calls.
pub trait ObjectiveFn {
    fn value(&self, p: &Point) -> Result<f64, ObjectiveError>;
}

impl<F: ObjectiveFn + ?Sized> ObjectiveFn for &F {
    fn value(&self, p: &Point) -> Result<f64, ObjectiveError> {
        (**self).value(p)
    }
}

/// The built-in objectives, selectable by string identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    SchafferF6,
    Sphere,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::SchafferF6 => "schaffer_f6",
            Objective::Sphere => "sphere",
        }
    }

    /// The dimension the objective requires, if any.
    pub fn fixed_dimension(self) -> Option<usize> {
        match self {
            Objective::SchafferF6 => Some(2),
            Objective::Sphere => None,
        }
    }
}

impl ObjectiveFn for Objective {
    fn value(&self, p: &Point) -> Result<f64, ObjectiveError> {
        match self {
            Objective::SchafferF6 => schaffer_f6(p),
            Objective::Sphere => Ok(sphere(p)),
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Objective {
    type Err = ObjectiveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "schaffer_f6" => Ok(Objective::SchafferF6),
            "sphere" => Ok(Objective::Sphere),
            other => Err(ObjectiveError::Unknown(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("evaluation budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },
    #[error(transparent)]
    Objective(#[from] ObjectiveError),
}

/// Why a run must stop evaluating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Halt {
    /// Some evaluation reached the target fitness.
    TargetReached,
    /// Every evaluation in the budget has been spent.
    BudgetExhausted,
}

/// Counts evaluations against a hard budget and remembers the best value
/// seen. An optional target turns the first evaluation at or below it into
/// a halt condition.
#[derive(Debug, Clone)]
pub struct BudgetedEvaluator<F = Objective> {
    objective: F,
    used: u64,
    budget: u64,
    target: Option<f64>,
    best_seen: f64,
    target_hit_at: Option<u64>,
}

impl<F: ObjectiveFn> BudgetedEvaluator<F> {
    pub fn new(objective: F, budget: u64) -> Self {
        BudgetedEvaluator {
            objective,
            used: 0,
            budget,
            target: None,
            best_seen: f64::INFINITY,
            target_hit_at: None,
        }
    }

    pub fn with_target(mut self, target: f64) -> Self {
        self.target = Some(target);
        self
    }

    /// Evaluates `p`, consuming exactly one unit of budget.
    pub fn evaluate(&mut self, p: &Point) -> Result<f64, EvalError> {
        if self.used >= self.budget {
            return Err(EvalError::BudgetExhausted {
                budget: self.budget,
            });
        }
        let value = self.objective.value(p)?;
        self.used += 1;
        if value < self.best_seen {
            self.best_seen = value;
        }
        if self.target_hit_at.is_none() && self.target.is_some_and(|t| value <= t) {
            self.target_hit_at = Some(self.used);
        }
        Ok(value)
    }

    /// The reason to stop, if any. Target success takes precedence over an
    /// exhausted budget when both apply.
    pub fn halt(&self) -> Option<Halt> {
        if self.target_hit_at.is_some() {
            Some(Halt::TargetReached)
        } else if self.used >= self.budget {
            Some(Halt::BudgetExhausted)
        } else {
            None
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn remaining(&self) -> u64 {
        self.budget - self.used
    }

    pub fn best_seen(&self) -> f64 {
        self.best_seen
    }

    pub fn target_hit_at(&self) -> Option<u64> {
        self.target_hit_at
    }

    pub fn objective(&self) -> &F {
        &self.objective
    }
}
