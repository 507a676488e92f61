//! Multithreshold representations and their verification.
//!
//! A representation assigns a rank to every vertex and fixes thresholds
//! `θ1 < … < θk`. A pair `uv` is an edge exactly when `r(u) + r(v) >= θi` holds
//! for an odd number of `i`, i.e. when its region index is odd.

mod coloring;
mod complement;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::ExactReal;
use crate::graphs::Graph;
use crate::scalar::RankScalar;

pub use coloring::{check_coloring_lemmas, color_triangles, LemmaViolation, TriangleColoring};
pub use complement::{complement_representation, mirrored_complement_representation};

/// Vertex ranks plus a strictly increasing threshold list.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Representation<S = ExactReal> {
    ranks: Vec<S>,
    thresholds: Vec<S>,
}

impl<S: RankScalar> Representation<S> {
    pub fn new(ranks: Vec<S>, thresholds: Vec<S>) -> Result<Self> {
        if let Some(i) = thresholds
            .windows(2)
            .position(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
        {
            return Err(Error::ThresholdsNotIncreasing(i + 1));
        }
        Ok(Self { ranks, thresholds })
    }

    pub fn ranks(&self) -> &[S] {
        &self.ranks
    }

    pub fn thresholds(&self) -> &[S] {
        &self.thresholds
    }

    /// Number of thresholds.
    pub fn k(&self) -> usize {
        self.thresholds.len()
    }

    pub fn pair_sum(&self, u: usize, v: usize) -> S {
        self.ranks[u].clone() + self.ranks[v].clone()
    }

    /// `|{i : θi <= s}|`.
    pub fn region_index(&self, s: &S) -> usize {
        self.thresholds.partition_point(|t| t <= s)
    }

    /// Restriction to the given vertices (ascending order), as for induced subgraphs.
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        Self {
            ranks: vs.iter().map(|&v| self.ranks[v].clone()).collect(),
            thresholds: self.thresholds.clone(),
        }
    }

    pub fn map<T: RankScalar>(&self, mut f: impl FnMut(&S) -> T) -> Result<Representation<T>> {
        Representation::new(
            self.ranks.iter().map(&mut f).collect(),
            self.thresholds.iter().map(&mut f).collect(),
        )
    }
}

#[derive(Deserialize)]
struct RepresentationRepr {
    ranks: Vec<ExactReal>,
    thresholds: Vec<ExactReal>,
}

impl<'de> Deserialize<'de> for Representation<ExactReal> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RepresentationRepr::deserialize(deserializer)?;
        Representation::new(repr.ranks, repr.thresholds).map_err(D::Error::custom)
    }
}

/// Required parity of a pair's region index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// A pair whose region parity disagrees with the graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation<S = ExactReal> {
    pub pair: (usize, usize),
    pub sum: S,
    pub region: usize,
    pub expected: Parity,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport<S = ExactReal> {
    pub ok: bool,
    pub violations: Vec<Violation<S>>,
}

/// Checks every unordered pair and reports each one whose region parity is wrong.
pub fn verify<S: RankScalar>(g: &Graph, rep: &Representation<S>) -> Result<VerifyReport<S>> {
    if rep.ranks.len() != g.order() {
        return Err(Error::SizeMismatch {
            ranks: rep.ranks.len(),
            vertices: g.order(),
        });
    }
    let mut violations = Vec::new();
    for (u, v) in g.pairs() {
        let sum = rep.pair_sum(u, v);
        let region = rep.region_index(&sum);
        let edge = g.has_edge(u, v);
        if (region % 2 == 1) != edge {
            violations.push(Violation {
                pair: (u, v),
                sum,
                region,
                expected: if edge { Parity::Odd } else { Parity::Even },
            });
        }
    }
    Ok(VerifyReport {
        ok: violations.is_empty(),
        violations,
    })
}

/// [`verify`], turning any violation into [`Error::VerificationFailed`].
pub fn ensure_verified<S: RankScalar>(g: &Graph, rep: &Representation<S>) -> Result<()> {
    let report = verify(g, rep)?;
    if report.ok {
        Ok(())
    } else {
        Err(Error::VerificationFailed(report.violations.len()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_family, parse_family_spec};

    fn ex(xs: &[(i64, i64)]) -> Vec<ExactReal> {
        xs.iter().map(|&(n, d)| ExactReal::ratio(n, d)).collect()
    }

    fn ints(xs: &[i64]) -> Vec<ExactReal> {
        xs.iter().map(|&n| ExactReal::from_integer(n)).collect()
    }

    fn half_pair() -> Vec<ExactReal> {
        ex(&[(-1, 2), (1, 2)])
    }

    fn build(s: &str) -> Graph {
        build_family(&parse_family_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn thresholds_must_increase() {
        assert!(matches!(
            Representation::new(ints(&[0]), ints(&[1, 1])),
            Err(Error::ThresholdsNotIncreasing(1))
        ));
    }

    #[test]
    fn region_index_examples() {
        let rep = Representation::new(vec![], half_pair()).unwrap();
        assert_eq!(rep.region_index(&ExactReal::zero()), 1);
        assert_eq!(rep.region_index(&ExactReal::ratio(1, 2)), 2);
        let empty = Representation::<ExactReal>::new(vec![], vec![]).unwrap();
        assert_eq!(empty.region_index(&ExactReal::from_integer(100)), 0);
    }

    #[test]
    fn cycle_representation_verifies() {
        let c4 = build("cycle:4");
        let rep = Representation::new(ints(&[1, -1, 1, -1]), half_pair()).unwrap();
        assert!(verify(&c4, &rep).unwrap().ok);
    }

    #[test]
    fn two_k2_candidate_from_hand_check() {
        // edge sums 0, 0; nonedge sums 3, -1, 1, -3 land in regions 2, 0, 2, 0
        let g = build("cluster:0,2,0");
        let rep = Representation::new(ints(&[1, -1, 2, -2]), half_pair()).unwrap();
        let report = verify(&g, &rep).unwrap();
        assert!(report.ok, "{report:?}");
    }

    #[test]
    fn path_candidate_reports_the_bad_pair() {
        let p4 = build("path:4");
        let rep = Representation::new(ints(&[1, -1, 1, -1]), half_pair()).unwrap();
        let report = verify(&p4, &rep).unwrap();
        assert!(!report.ok);
        assert_eq!(report.violations.len(), 1);
        let v = &report.violations[0];
        assert_eq!(v.pair, (0, 3));
        assert_eq!(v.sum, ExactReal::zero());
        assert_eq!(v.region, 1);
        assert_eq!(v.expected, Parity::Even);
    }

    #[test]
    fn size_mismatch() {
        let rep = Representation::new(ints(&[0]), vec![]).unwrap();
        assert!(matches!(
            verify(&build("path:2"), &rep),
            Err(Error::SizeMismatch { ranks: 1, vertices: 2 })
        ));
    }

    #[test]
    fn json_round_trip() {
        let rep = Representation::new(ints(&[1, -1]), half_pair()).unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["thresholds"][0]["unit"], "-1/2");
        let back: Representation = serde_json::from_value(v).unwrap();
        assert_eq!(back, rep);
        let unsorted = serde_json::json!({"ranks": [], "thresholds": [{"unit": "1"}, {"unit": "0"}]});
        assert!(serde_json::from_value::<Representation>(unsorted).is_err());
    }

    #[test]
    fn generic_over_rationals_and_floats() {
        let c4 = build("cycle:4");
        let rep = Representation::new(ints(&[1, -1, 1, -1]), half_pair()).unwrap();
        let rat = rep.map(|x| x.as_rational().unwrap().clone()).unwrap();
        assert!(verify(&c4, &rat).unwrap().ok);
        let float = Representation::new(vec![1.0, -1.0, 1.0, -1.0], vec![-0.5, 0.5]).unwrap();
        assert!(verify(&c4, &float).unwrap().ok);
    }
}
