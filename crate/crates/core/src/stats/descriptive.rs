use serde::{Deserialize, Serialize};

use super::StatsError;

/// A labeled sample with at least two finite observations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleGroup {
    label: String,
    values: Vec<f64>,
}

impl SampleGroup {
    pub fn new(label: impl Into<String>, values: Vec<f64>) -> Result<Self, StatsError> {
        let label = label.into();
        if values.len() < 2 {
            return Err(StatsError::InsufficientData {
                label,
                len: values.len(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(StatsError::NonFinite(label));
        }
        Ok(SampleGroup { label, values })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn mean_and_variance(&self) -> (f64, f64) {
        mean_and_variance(&self.values).expect("groups hold at least two values")
    }
}

/// Mean and sample variance (`n − 1` denominator), two-pass.
pub fn mean_and_variance(values: &[f64]) -> Result<(f64, f64), StatsError> {
    let n = values.len();
    if n < 2 {
        return Err(StatsError::InsufficientData {
            label: String::new(),
            len: n,
        });
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    Ok((mean, ss / (n - 1) as f64))
}

/// One row of the per-group summary table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub label: String,
    pub count: usize,
    pub sum: f64,
    pub average: f64,
    pub variance: f64,
}

impl From<&SampleGroup> for GroupSummary {
    fn from(g: &SampleGroup) -> Self {
        let (average, variance) = g.mean_and_variance();
        GroupSummary {
            label: g.label.clone(),
            count: g.len(),
            sum: g.sum(),
            average,
            variance,
        }
    }
}
