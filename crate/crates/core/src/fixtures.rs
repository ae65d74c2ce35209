//! Published tables shipped with the crate.

use crate::partition::Partition;

const HOOK_TABLE: &str = include_str!("../data/hook_table.csv");
const GOLDEN: &str = include_str!("../data/golden_rows.csv");

/// The raw CSV of the `(3,3)⊕{i}{j}` grid, `0 ≤ i, j ≤ 9`.
pub fn hook_table_csv() -> &'static str {
    HOOK_TABLE
}

/// The `(3,3)⊕{i}{j}` grid, indexed `[i][j]`.
pub fn hook_table() -> Vec<Vec<u128>> {
    HOOK_TABLE
        .lines()
        .skip(1)
        .map(|line| {
            line.split(',')
                .skip(1)
                .map(|c| c.parse().expect("table entries are integers"))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub hook_stable: u128,
    pub a: i64,
    /// `B_{α,β,γ}`, `B_{β,α,γ}`, `B_{γ,α,β}`.
    pub b: [i64; 3],
    pub c: i64,
}

/// Every row of the coefficient tables for weights at most three.
pub fn golden_rows() -> Vec<GoldenRow> {
    GOLDEN
        .lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(';').collect();
            let p = |s: &str| s.parse::<Partition>().expect("fixture partition");
            let i = |s: &str| s.parse::<i64>().expect("fixture integer");
            GoldenRow {
                alpha: p(f[0]),
                beta: p(f[1]),
                gamma: p(f[2]),
                hook_stable: f[3].parse().expect("fixture integer"),
                a: i(f[4]),
                b: [i(f[5]), i(f[6]), i(f[7])],
                c: i(f[8]),
            }
        })
        .collect()
}
