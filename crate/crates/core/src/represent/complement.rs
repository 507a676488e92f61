//! Representations of the complement graph built from one of the graph.

use super::{ensure_verified, Representation};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::scalar::RankScalar;

/// Prepends a threshold below every pair sum and below `θ1`, shifting every
/// region index by one. Uses `k + 1` thresholds.
pub fn complement_representation<S: RankScalar>(g: &Graph, rep: &Representation<S>) -> Result<Representation<S>> {
    ensure_verified(g, rep)?;
    let one = S::from_i64(1).expect("small integers embed");
    let min_rank = rep.ranks().iter().fold(None::<&S>, |m, r| match m {
        Some(m) if m <= r => Some(m),
        _ => Some(r),
    });
    let mut floor = min_rank.map(|m| m.clone() + m.clone());
    if let Some(t1) = rep.thresholds().first() {
        floor = Some(match floor {
            Some(f) if f <= *t1 => f,
            _ => t1.clone(),
        });
    }
    let sentinel = floor.unwrap_or_else(S::zero) - one;
    let mut thresholds = Vec::with_capacity(rep.k() + 1);
    thresholds.push(sentinel);
    thresholds.extend(rep.thresholds().iter().cloned());
    let out = Representation::new(rep.ranks().to_vec(), thresholds)?;
    ensure_verified(&g.complement(), &out)?;
    Ok(out)
}

/// For an odd threshold count: negates every rank and reflects the thresholds,
/// `θ'j = -θ(k+1-j) + η`, with `η` half the smallest positive gap from a pair
/// sum up to a threshold. Region indices become `k - region`, which flips
/// parity when `k` is odd, so the complement is realized with the same `k`.
pub fn mirrored_complement_representation<S: RankScalar>(
    g: &Graph,
    rep: &Representation<S>,
) -> Result<Representation<S>> {
    if rep.k().is_multiple_of(2) {
        return Err(Error::OutOfRange(format!(
            "mirroring needs an odd threshold count, got {}",
            rep.k()
        )));
    }
    ensure_verified(g, rep)?;
    let mut gap: Option<S> = None;
    for (u, v) in g.pairs() {
        let s = rep.pair_sum(u, v);
        for t in rep.thresholds() {
            if s < *t {
                let d = t.clone() - s.clone();
                if gap.as_ref().is_none_or(|g| d < *g) {
                    gap = Some(d);
                }
            }
        }
    }
    let eta = gap
        .unwrap_or_else(|| S::from_i64(1).expect("small integers embed"))
        .halve();
    let ranks = rep.ranks().iter().map(|r| -r.clone()).collect();
    let thresholds = rep.thresholds().iter().rev().map(|t| eta.clone() - t.clone()).collect();
    let out = Representation::new(ranks, thresholds)?;
    ensure_verified(&g.complement(), &out)?;
    Ok(out)
}
