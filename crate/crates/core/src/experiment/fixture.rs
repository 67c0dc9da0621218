//! The published 30-run evaluation counts for the four variants.

use crate::stats::SampleGroup;

use super::Variant;

/// Evaluation counts per run, columns in [`Variant::ALL`] order
/// (RS, RA, SS, SA). A value of 4000 means the run used its whole budget.
pub const TABLE1: [[u32; 4]; 30] = [
    [4000, 77, 129, 75],
    [4000, 71, 57, 72],
    [82, 82, 82, 65],
    [62, 60, 4000, 71],
    [4000, 72, 49, 56],
    [72, 4000, 48, 4000],
    [95, 4000, 83, 189],
    [45, 4000, 4000, 4000],
    [71, 54, 4000, 4000],
    [61, 68, 91, 4000],
    [4000, 66, 38, 89],
    [50, 4000, 71, 4000],
    [4000, 4000, 4000, 4000],
    [4000, 72, 4000, 4000],
    [4000, 65, 4000, 4000],
    [4000, 57, 4000, 146],
    [54, 69, 58, 4000],
    [76, 81, 65, 53],
    [58, 77, 47, 4000],
    [4000, 95, 4000, 4000],
    [55, 4000, 89, 56],
    [90, 65, 51, 4000],
    [4000, 72, 4000, 4000],
    [4000, 4000, 4000, 73],
    [90, 4000, 55, 52],
    [55, 4000, 4000, 4000],
    [4000, 58, 61, 40],
    [65, 4000, 47, 4000],
    [62, 4000, 110, 4000],
    [68, 4000, 68, 64],
];

/// Budget the fixture runs were capped at.
pub const TABLE1_BUDGET: u32 = 4000;

/// One column of [`TABLE1`].
pub fn table1_column(variant: Variant) -> Vec<u32> {
    let col = variant.index();
    TABLE1.iter().map(|row| row[col]).collect()
}

/// The fixture as one sample group per variant, labeled RS, RA, SS, SA.
pub fn table1_fixture() -> Vec<SampleGroup> {
    Variant::ALL
        .iter()
        .map(|&v| {
            let values = table1_column(v).into_iter().map(f64::from).collect();
            SampleGroup::new(v.label(), values).expect("fixture columns are valid samples")
        })
        .collect()
}
