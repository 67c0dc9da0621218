use serde::{Deserialize, Serialize};

use super::descriptive::SampleGroup;
use super::distribution::{f_cdf, t_critical, t_sf};
use super::StatsError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TTestKind {
    /// Two-sample, equal variances assumed.
    Pooled,
    /// Two-sample, unequal variances (Welch–Satterthwaite df).
    Welch,
}

/// Outcome for the null hypothesis of equal means. `AcceptNull` is what a
/// careful write-up calls "fail to reject".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    AcceptNull,
    RejectNull,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TTestReport {
    pub kind: TTestKind,
    pub labels: (String, String),
    pub means: (f64, f64),
    pub variances: (f64, f64),
    pub observations: (usize, usize),
    pub pooled_variance: Option<f64>,
    pub hypothesized_mean_difference: f64,
    pub df: f64,
    pub t_stat: f64,
    /// `P(T > |t|)`.
    pub p_one_tail: f64,
    pub t_critical_one_tail: f64,
    pub p_two_tail: f64,
    pub t_critical_two_tail: f64,
    pub alpha: f64,
    pub decision: Decision,
}

struct Pair {
    means: (f64, f64),
    variances: (f64, f64),
    n: (f64, f64),
}

fn describe(a: &SampleGroup, b: &SampleGroup) -> Pair {
    let (ma, va) = a.mean_and_variance();
    let (mb, vb) = b.mean_and_variance();
    Pair {
        means: (ma, mb),
        variances: (va, vb),
        n: (a.len() as f64, b.len() as f64),
    }
}

#[allow(clippy::too_many_arguments)]
fn finish(
    kind: TTestKind,
    a: &SampleGroup,
    b: &SampleGroup,
    pair: Pair,
    pooled_variance: Option<f64>,
    t_stat: f64,
    df: f64,
    alpha: f64,
) -> Result<TTestReport, StatsError> {
    let p_one_tail = t_sf(t_stat.abs(), df)?;
    let t_critical_two_tail = t_critical(df, alpha, 2)?;
    let decision = if t_stat.abs() < t_critical_two_tail {
        Decision::AcceptNull
    } else {
        Decision::RejectNull
    };
    Ok(TTestReport {
        kind,
        labels: (a.label().to_string(), b.label().to_string()),
        means: pair.means,
        variances: pair.variances,
        observations: (a.len(), b.len()),
        pooled_variance,
        hypothesized_mean_difference: 0.0,
        df,
        t_stat,
        p_one_tail,
        t_critical_one_tail: t_critical(df, alpha, 1)?,
        p_two_tail: 2.0 * p_one_tail,
        t_critical_two_tail,
        alpha,
        decision,
    })
}

/// Two-sample t-test assuming equal variances.
pub fn t_test_pooled(
    a: &SampleGroup,
    b: &SampleGroup,
    alpha: f64,
) -> Result<TTestReport, StatsError> {
    let pair = describe(a, b);
    let (na, nb) = pair.n;
    let df = na + nb - 2.0;
    let pooled = ((na - 1.0) * pair.variances.0 + (nb - 1.0) * pair.variances.1) / df;
    let diff = pair.means.0 - pair.means.1;
    let t_stat = if pooled == 0.0 {
        if diff == 0.0 {
            return Err(StatsError::Undefined(
                "t statistic: zero variance and equal means",
            ));
        }
        diff.signum() * f64::INFINITY
    } else {
        diff / (pooled * (1.0 / na + 1.0 / nb)).sqrt()
    };
    finish(
        TTestKind::Pooled,
        a,
        b,
        pair,
        Some(pooled),
        t_stat,
        df,
        alpha,
    )
}

/// Welch's unequal-variance t-test.
pub fn t_test_welch(
    a: &SampleGroup,
    b: &SampleGroup,
    alpha: f64,
) -> Result<TTestReport, StatsError> {
    let pair = describe(a, b);
    let (na, nb) = pair.n;
    let (qa, qb) = (pair.variances.0 / na, pair.variances.1 / nb);
    if qa + qb == 0.0 {
        return Err(StatsError::Undefined(
            "Welch t statistic: both variances are zero",
        ));
    }
    let t_stat = (pair.means.0 - pair.means.1) / (qa + qb).sqrt();
    let df = (qa + qb).powi(2) / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
    finish(TTestKind::Welch, a, b, pair, None, t_stat, df, alpha)
}

/// Two-sided variance-ratio test with the larger variance in the numerator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FTestReport {
    pub numerator: String,
    pub denominator: String,
    pub variances: (f64, f64),
    pub f_stat: f64,
    pub df: (usize, usize),
    /// `2·min(P(F ≤ f), P(F ≥ f))`, capped at 1.
    pub p_value: f64,
    pub alpha: f64,
    pub equal_variances: bool,
}

pub fn f_test_variance_ratio(
    a: &SampleGroup,
    b: &SampleGroup,
    alpha: f64,
) -> Result<FTestReport, StatsError> {
    let (_, va) = a.mean_and_variance();
    let (_, vb) = b.mean_and_variance();
    if va == 0.0 || vb == 0.0 {
        return Err(StatsError::Undefined("F ratio: a sample variance is zero"));
    }
    let (num, den, vn, vd) = if va >= vb {
        (a, b, va, vb)
    } else {
        (b, a, vb, va)
    };
    let f_stat = vn / vd;
    let df = (num.len() - 1, den.len() - 1);
    let lower = f_cdf(f_stat, df.0 as f64, df.1 as f64)?;
    let p_value = (2.0 * lower.min(1.0 - lower)).min(1.0);
    Ok(FTestReport {
        numerator: num.label().to_string(),
        denominator: den.label().to_string(),
        variances: (vn, vd),
        f_stat,
        df,
        p_value,
        alpha,
        equal_variances: p_value >= alpha,
    })
}
