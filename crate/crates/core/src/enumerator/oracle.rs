//! Exhaustive scan over bounded integer tuples. Deliberately written without
//! the solved formulas used by [`super::classify_order8`].

use super::tables::order4_rows;
use super::{sort_canonical, EigenRankVector, FixedLocusProfile, PointCounts, H2_RANK};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_k: u32,
    pub max_a: u32,
    /// Upper bound for each of r, l, m, m1.
    pub max_rank: u32,
    /// Upper bound for each of n27, n36, n45.
    pub max_points: u32,
    /// Require the induced σ² invariants to appear in the order-4 table.
    pub order4_filter: bool,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_k: 12,
            max_a: 12,
            max_rank: H2_RANK,
            max_points: 80,
            order4_filter: true,
        }
    }
}

impl SearchBounds {
    pub fn without_order4_filter(self) -> Self {
        SearchBounds {
            order4_filter: false,
            ..self
        }
    }
}

pub fn brute_force_classify(bounds: &SearchBounds) -> Vec<FixedLocusProfile> {
    let rows = order4_rows();
    let mut found = Vec::new();
    let top = bounds.max_rank;
    let pts = bounds.max_points as i64;
    for k in 0..=bounds.max_k {
        let alpha = k as i64;
        for r in 1..=top {
            for l in 0..=top {
                for m in 0..=top {
                    for m1 in 0..=top {
                        if r + l + 2 * m + 4 * m1 != H2_RANK {
                            continue;
                        }
                        for n27 in 0..=pts {
                            for n36 in 0..=pts {
                                if n27 + n36 != 2 + 4 * alpha || n27 != n36 {
                                    continue;
                                }
                                for n45 in 0..=pts {
                                    if n45 + n27 - n36 != 2 + 2 * alpha
                                        || n27 + n36 + n45 != 2 + r as i64 - l as i64 - 2 * alpha
                                        || n45 % 2 != 0
                                        || (n27 + n36 + n45) % 2 != 0
                                    {
                                        continue;
                                    }
                                    let (r2, l2, m2) = (r + l, 2 * m, 2 * m1);
                                    if l2 % 2 != 0 || m2 % 2 != 0 {
                                        continue;
                                    }
                                    for a in 0..=bounds.max_a {
                                        let k2 = k + (n45 / 2) as u32 + 2 * a;
                                        let compatible = !bounds.order4_filter
                                            || rows.iter().any(|row| {
                                                row.m % 2 == 0
                                                    && row.r == r2
                                                    && row.l == l2
                                                    && row.m == m2
                                                    && row.k == k2
                                            });
                                        if compatible {
                                            found.push(FixedLocusProfile {
                                                ranks: EigenRankVector { r, l, m, m1 },
                                                points: PointCounts::new(n27 as u32, n36 as u32, n45 as u32),
                                                k,
                                                a,
                                                alpha,
                                            });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    sort_canonical(&mut found);
    found
}
