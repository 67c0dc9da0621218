use serde::{Deserialize, Serialize};

use super::descriptive::{GroupSummary, SampleGroup};
use super::distribution::{f_critical, f_sf};
use super::StatsError;

/// Single-factor ANOVA: group summaries plus the between/within
/// decomposition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnovaReport {
    pub groups: Vec<GroupSummary>,
    pub ss_between: f64,
    pub ss_within: f64,
    pub ss_total: f64,
    pub df_between: usize,
    pub df_within: usize,
    pub df_total: usize,
    pub ms_between: f64,
    pub ms_within: f64,
    pub f_stat: f64,
    pub p_value: f64,
    pub f_critical: f64,
    pub alpha: f64,
}

impl AnovaReport {
    /// True when the group means differ significantly at `alpha`.
    pub fn significant(&self) -> bool {
        self.p_value < self.alpha
    }
}

pub fn anova_one_way(groups: &[SampleGroup], alpha: f64) -> Result<AnovaReport, StatsError> {
    if groups.len() < 2 {
        return Err(StatsError::TooFewGroups(groups.len()));
    }
    let summaries: Vec<GroupSummary> = groups.iter().map(GroupSummary::from).collect();
    let n_total: usize = summaries.iter().map(|g| g.count).sum();
    let grand_mean = summaries.iter().map(|g| g.sum).sum::<f64>() / n_total as f64;

    let ss_between: f64 = summaries
        .iter()
        .map(|g| g.count as f64 * (g.average - grand_mean).powi(2))
        .sum();
    let ss_within: f64 = summaries
        .iter()
        .map(|g| (g.count - 1) as f64 * g.variance)
        .sum();
    if ss_within == 0.0 {
        return Err(StatsError::Undefined(
            "F statistic: within-group variation is zero",
        ));
    }

    let df_between = groups.len() - 1;
    let df_within = n_total - groups.len();
    let ms_between = ss_between / df_between as f64;
    let ms_within = ss_within / df_within as f64;
    let f_stat = ms_between / ms_within;
    let (d1, d2) = (df_between as f64, df_within as f64);

    Ok(AnovaReport {
        groups: summaries,
        ss_between,
        ss_within,
        ss_total: ss_between + ss_within,
        df_between,
        df_within,
        df_total: n_total - 1,
        ms_between,
        ms_within,
        f_stat,
        p_value: f_sf(f_stat, d1, d2)?,
        f_critical: f_critical(d1, d2, alpha)?,
        alpha,
    })
}
