//! Aligned plain-text tables in the familiar spreadsheet layout.

use std::fmt;

use super::anova::AnovaReport;
use super::ttest::{Decision, FTestReport, TTestKind, TTestReport};
use super::MeanComparison;

/// Renders `rows` as space-padded columns, first column left-aligned.
fn table(f: &mut fmt::Formatter<'_>, rows: &[Vec<String>]) -> fmt::Result {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c == 0 {
                line.push_str(&format!("{cell:<w$}", w = widths[0]));
            } else {
                line.push_str(&format!("  {cell:>w$}", w = widths[c]));
            }
        }
        writeln!(f, "{}", line.trim_end())?;
    }
    Ok(())
}

fn num(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{v:.0}")
    } else {
        format!("{v:.4}")
    }
}

impl fmt::Display for AnovaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Anova: Single Factor")?;
        writeln!(f)?;
        writeln!(f, "SUMMARY")?;
        let mut rows = vec![vec![
            "Groups".to_string(),
            "Count".into(),
            "Sum".into(),
            "Average".into(),
            "Variance".into(),
        ]];
        for g in &self.groups {
            rows.push(vec![
                g.label.clone(),
                g.count.to_string(),
                num(g.sum),
                format!("{:.4}", g.average),
                format!("{:.3}", g.variance),
            ]);
        }
        table(f, &rows)?;
        writeln!(f)?;
        writeln!(f, "ANOVA")?;
        let rows = vec![
            vec![
                "Source of Variation".to_string(),
                "SS".into(),
                "df".into(),
                "MS".into(),
                "F".into(),
                "P-value".into(),
                "F crit".into(),
            ],
            vec![
                "Between Groups".to_string(),
                format!("{:.3}", self.ss_between),
                self.df_between.to_string(),
                format!("{:.3}", self.ms_between),
                format!("{:.4}", self.f_stat),
                format!("{:.4}", self.p_value),
                format!("{:.4}", self.f_critical),
            ],
            vec![
                "Within Groups".to_string(),
                format!("{:.3}", self.ss_within),
                self.df_within.to_string(),
                format!("{:.3}", self.ms_within),
            ],
            vec![
                "Total".to_string(),
                format!("{:.3}", self.ss_total),
                self.df_total.to_string(),
            ],
        ];
        table(f, &rows)?;
        writeln!(f)?;
        let verdict = if self.significant() {
            "group means differ"
        } else {
            "no significant difference between group means"
        };
        writeln!(f, "alpha = {}: {verdict}", self.alpha)
    }
}

impl fmt::Display for TTestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let title = match self.kind {
            TTestKind::Pooled => "t-Test: Two-Sample Assuming Equal Variances",
            TTestKind::Welch => "t-Test: Two-Sample Assuming Unequal Variances",
        };
        writeln!(f, "{title}")?;
        writeln!(f)?;
        let pair = |name: &str, a: String, b: String| vec![name.to_string(), a, b];
        let single = |name: &str, a: String| vec![name.to_string(), a, String::new()];
        let mut rows = vec![
            pair("", self.labels.0.clone(), self.labels.1.clone()),
            pair(
                "Mean",
                format!("{:.3}", self.means.0),
                format!("{:.3}", self.means.1),
            ),
            pair(
                "Variance",
                format!("{:.3}", self.variances.0),
                format!("{:.3}", self.variances.1),
            ),
            pair(
                "Observations",
                self.observations.0.to_string(),
                self.observations.1.to_string(),
            ),
        ];
        if let Some(pv) = self.pooled_variance {
            rows.push(single("Pooled Variance", format!("{pv:.3}")));
        }
        rows.extend([
            single(
                "Hypothesized Mean Difference",
                num(self.hypothesized_mean_difference),
            ),
            single("df", num(self.df)),
            single("t Stat", format!("{:.4}", self.t_stat)),
            single("P(T<=t) one-tail", format!("{:.4}", self.p_one_tail)),
            single(
                "t Critical one-tail",
                format!("{:.4}", self.t_critical_one_tail),
            ),
            single("P(T<=t) two-tail", format!("{:.4}", self.p_two_tail)),
            single(
                "t Critical two-tail",
                format!("{:.4}", self.t_critical_two_tail),
            ),
        ]);
        table(f, &rows)?;
        writeln!(f)?;
        let verdict = match self.decision {
            Decision::AcceptNull => {
                "|t Stat| < t Critical two-tail: null hypothesis accepted (fail to reject)"
            }
            Decision::RejectNull => "|t Stat| >= t Critical two-tail: null hypothesis rejected",
        };
        writeln!(f, "alpha = {}: {verdict}", self.alpha)
    }
}

impl fmt::Display for FTestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "F-Test Two-Sample for Variances (larger variance in numerator)"
        )?;
        writeln!(f)?;
        let rows = vec![
            vec![
                String::new(),
                self.numerator.clone(),
                self.denominator.clone(),
            ],
            vec![
                "Variance".to_string(),
                format!("{:.3}", self.variances.0),
                format!("{:.3}", self.variances.1),
            ],
            vec![
                "df".to_string(),
                self.df.0.to_string(),
                self.df.1.to_string(),
            ],
            vec![
                "F".to_string(),
                format!("{:.4}", self.f_stat),
                String::new(),
            ],
            vec![
                "P two-tail".to_string(),
                format!("{:.4}", self.p_value),
                String::new(),
            ],
        ];
        table(f, &rows)?;
        writeln!(f)?;
        let verdict = if self.equal_variances {
            "variances equal, pooled t-test selected"
        } else {
            "variances differ, Welch t-test selected"
        };
        writeln!(f, "alpha = {}: {verdict}", self.alpha)
    }
}

impl fmt::Display for MeanComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.f_test)?;
        writeln!(f)?;
        write!(f, "{}", self.t_test)
    }
}
