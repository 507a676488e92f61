//! Linear forests, ladders and tents.

use super::Construction;
use crate::error::{Error, Result};
use crate::exactnum::ExactReal;
use crate::graphs::{build_family, FamilySpec};
use crate::represent::Representation;

fn int(n: i64) -> ExactReal {
    ExactReal::from_integer(n)
}

fn outer_thresholds() -> Vec<ExactReal> {
    vec![ExactReal::ratio(-3, 2), ExactReal::ratio(3, 2)]
}

/// Path ranks alternate in sign and grow by one in magnitude, so every edge
/// sums to `±1`; each new path starts two above the previous magnitude.
pub fn linear_forest(counts: &[usize]) -> Result<Construction> {
    let spec = FamilySpec::LinearForest(counts.to_vec());
    if counts.iter().sum::<usize>() == 0 {
        return Err(Error::InvalidSpec("linear forest needs at least one path".into()));
    }
    let graph = build_family(&spec)?;
    let mut ranks = Vec::with_capacity(graph.order());
    let mut start = 1i64;
    for (i, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            let mut last = start;
            for t in 0..=i as i64 {
                last = start + t;
                ranks.push(int(if t % 2 == 0 { last } else { -last }));
            }
            start = last + 2;
        }
    }
    Construction::checked(&spec, graph, Representation::new(ranks, outer_thresholds())?, None)
}

/// Ranks `u_i = (-1)^i (i+1)` on one rail and `-u_i` on the other.
pub fn ladder(n: usize) -> Result<Construction> {
    let spec = FamilySpec::Ladder(n);
    let graph = build_family(&spec)?;
    let u: Vec<i64> = (0..n as i64)
        .map(|i| if i % 2 == 0 { i + 1 } else { -(i + 1) })
        .collect();
    let ranks = u.iter().map(|&x| int(x)).chain(u.iter().map(|&x| int(-x))).collect();
    Construction::checked(&spec, graph, Representation::new(ranks, outer_thresholds())?, None)
}

/// Path ranks `(-1)^(i-1) i`, apex `6n`, with a third threshold at `5n`
/// separating the apex sums from everything else.
pub fn tent(n: usize) -> Result<Construction> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("tent construction needs n >= 2, got {n}")));
    }
    let spec = FamilySpec::Tent(n);
    let graph = build_family(&spec)?;
    let n = n as i64;
    let mut ranks: Vec<ExactReal> = (1..=n).map(|i| int(if i % 2 == 1 { i } else { -i })).collect();
    ranks.push(int(6 * n));
    let mut thresholds = outer_thresholds();
    thresholds.push(int(5 * n));
    Construction::checked(&spec, graph, Representation::new(ranks, thresholds)?, None)
}

/// One-threshold ranks (threshold 2) for a path on at most three vertices.
fn short_path(n: usize) -> Vec<i64> {
    match n {
        1 => vec![0],
        2 => vec![1, 1],
        _ => vec![0, 2, 0],
    }
}

/// Linear forests with at most one path of order two or three use a single
/// threshold; everything else gets [`linear_forest`].
pub(super) fn forest(spec: &FamilySpec, counts: &[usize]) -> Result<Construction> {
    let nontrivial: usize = counts.iter().skip(1).sum();
    let longest = counts.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
    let graph = build_family(spec)?;
    if nontrivial >= 2 || longest >= 4 {
        let c = linear_forest(counts)?;
        return Construction::checked(spec, graph, c.representation, None);
    }
    let mut ranks = Vec::with_capacity(graph.order());
    let mut thresholds = vec![];
    for (i, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            if i == 0 {
                ranks.push(int(-2));
            } else {
                ranks.extend(short_path(i + 1).into_iter().map(int));
                thresholds = vec![int(2)];
            }
        }
    }
    Construction::checked(spec, graph, Representation::new(ranks, thresholds)?, None)
}

/// Tents on at most three path vertices are threshold graphs.
pub(super) fn any_tent(n: usize) -> Result<Construction> {
    if n >= 4 {
        return tent(n);
    }
    let spec = FamilySpec::Tent(n);
    let mut ranks: Vec<ExactReal> = short_path(n).into_iter().map(int).collect();
    ranks.push(int(4));
    Construction::checked(
        &spec,
        build_family(&spec)?,
        Representation::new(ranks, vec![int(2)])?,
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &Construction) -> Vec<i64> {
        c.representation
            .ranks()
            .iter()
            .map(|r| r.as_rational().unwrap().to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn forest_examples() {
        assert_eq!(ints(&linear_forest(&[0, 0, 0, 0, 1]).unwrap()), vec![1, -2, 3, -4, 5]);
        assert_eq!(ints(&linear_forest(&[0, 2]).unwrap()), vec![1, -2, 4, -5]);
        let c = linear_forest(&[0, 1, 1]).unwrap();
        assert_eq!(ints(&c), vec![1, -2, 4, -5, 6]);
        assert!(c.tight);
        assert!(!linear_forest(&[0, 1]).unwrap().tight);
        assert!(linear_forest(&[0, 0]).is_err());
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(ints(&ladder(3).unwrap()), vec![1, -2, 3, -1, 2, -3]);
        assert_eq!(ints(&ladder(2).unwrap()), vec![1, -2, -1, 2]);
        assert!(!ladder(1).unwrap().tight);
        for n in 2..20 {
            assert!(ladder(n).unwrap().tight);
        }
        assert!(ladder(0).is_err());
    }

    #[test]
    fn tent_examples() {
        let t = tent(4).unwrap();
        assert_eq!(ints(&t), vec![1, -2, 3, -4, 24]);
        assert_eq!(t.representation.thresholds()[2], int(20));
        assert!(t.tight);
        assert_eq!(ints(&tent(5).unwrap())[5], 30);
        assert!(!tent(2).unwrap().tight);
        assert!(tent(1).is_err());
        for n in 1..12 {
            assert!(any_tent(n).unwrap().tight, "tent {n}");
        }
    }

    #[test]
    fn short_forests_are_tight() {
        for counts in [vec![3], vec![2, 1], vec![1, 0, 1], vec![0, 0, 0, 1], vec![2, 3, 1]] {
            let spec = FamilySpec::LinearForest(counts.clone());
            assert!(forest(&spec, &counts).unwrap().tight, "{counts:?}");
        }
    }
}
