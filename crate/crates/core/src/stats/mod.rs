//! Hypothesis tests for comparing optimizer variants.
//!
//! Everything here is computed from first principles: the t and F
//! distribution functions sit on the regularized incomplete beta, and
//! critical values come from bisection on those CDFs. No lookup tables.
//!
//! [`compare_means`] runs the two-sample procedure used when comparing two
//! variants: an F-test on the variances picks the pooled or the Welch
//! t-test.

mod anova;
mod descriptive;
mod distribution;
mod report;
mod special;
mod ttest;

pub use anova::{anova_one_way, AnovaReport};
pub use descriptive::{mean_and_variance, GroupSummary, SampleGroup};
pub use distribution::{f_cdf, f_critical, f_sf, t_cdf, t_critical, t_sf, CRITICAL_TOLERANCE};
pub use special::{ln_beta, ln_gamma, regularized_incomplete_beta, BETA_CF_TOLERANCE};
pub use ttest::{
    f_test_variance_ratio, t_test_pooled, t_test_welch, Decision, FTestReport, TTestKind,
    TTestReport,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("group '{label}' has {len} observations; at least 2 are required")]
    InsufficientData { label: String, len: usize },
    #[error("group '{0}' contains a non-finite value")]
    NonFinite(String),
    #[error("need at least 2 groups, got {0}")]
    TooFewGroups(usize),
    #[error("undefined {0}")]
    Undefined(&'static str),
    #[error("alpha must lie in (0, 1), got {0}")]
    InvalidAlpha(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("incomplete beta continued fraction did not converge (a = {a}, b = {b}, x = {x})")]
    NoConvergence { a: f64, b: f64, x: f64 },
}

/// Variance gate followed by the t-test it selects.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeanComparison {
    pub f_test: FTestReport,
    pub t_test: TTestReport,
}

pub fn compare_means(
    a: &SampleGroup,
    b: &SampleGroup,
    alpha: f64,
) -> Result<MeanComparison, StatsError> {
    let f_test = f_test_variance_ratio(a, b, alpha)?;
    let t_test = if f_test.equal_variances {
        t_test_pooled(a, b, alpha)?
    } else {
        t_test_welch(a, b, alpha)?
    };
    Ok(MeanComparison { f_test, t_test })
}
