//! Edge coloring of triangle clusters and the two coloring lemmas.
//!
//! An edge whose rank sum lies in `[θ(2i-1), θ(2i))` gets color `i`; with an
//! odd threshold count the top color also covers `[θk, ∞)`. Both cases are
//! "region index `2i - 1`", so color = `(region + 1) / 2`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::Representation;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::scalar::RankScalar;

/// One sorted color multiset per triangle cluster, in input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleColoring {
    pub colors: usize,
    pub multisets: Vec<[usize; 3]>,
}

pub fn color_triangles<S: RankScalar>(
    g: &Graph,
    rep: &Representation<S>,
    triangles: &[[usize; 3]],
) -> Result<TriangleColoring> {
    let mut multisets = Vec::with_capacity(triangles.len());
    for &t in triangles {
        let [a, b, c] = t;
        let mut ms = [0usize; 3];
        for (slot, (u, v)) in ms.iter_mut().zip([(a, b), (a, c), (b, c)]) {
            if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
                return Err(Error::NotATriangle(t));
            }
            let region = rep.region_index(&rep.pair_sum(u, v));
            if region.is_multiple_of(2) {
                return Err(Error::EvenRegionEdge((u.min(v), u.max(v))));
            }
            *slot = region.div_ceil(2);
        }
        ms.sort_unstable();
        multisets.push(ms);
    }
    Ok(TriangleColoring {
        colors: rep.k().div_ceil(2),
        multisets,
    })
}

/// A breach of one of the two triangle-coloring constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaViolation {
    /// The same color multiset occurs on two triangles.
    Repeated {
        multiset: [usize; 3],
        first: usize,
        second: usize,
    },
    /// Triangles colored `i j j` and `i l l` with `j != l`.
    SharedSingleton { first: [usize; 3], second: [usize; 3] },
}

impl fmt::Display for LemmaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaViolation::Repeated {
                multiset,
                first,
                second,
            } => write!(
                f,
                "color multiset {multiset:?} appears on triangles {first} and {second}"
            ),
            LemmaViolation::SharedSingleton { first, second } => {
                write!(f, "multisets {first:?} and {second:?} have shapes ijj and ill")
            }
        }
    }
}

/// Reads a multiset as `{i, j, j}`: returns `(i, j)` when some color repeats.
fn ijj_reading(ms: &[usize; 3]) -> Option<(usize, usize)> {
    let [a, b, c] = *ms;
    if a == b && b == c {
        Some((a, a))
    } else if a == b {
        Some((c, a))
    } else if b == c {
        Some((a, b))
    } else {
        None
    }
}

pub fn check_coloring_lemmas(coloring: &TriangleColoring) -> std::result::Result<(), LemmaViolation> {
    let mut first_seen: BTreeMap<[usize; 3], usize> = BTreeMap::new();
    for (idx, ms) in coloring.multisets.iter().enumerate() {
        if let Some(&first) = first_seen.get(ms) {
            return Err(LemmaViolation::Repeated {
                multiset: *ms,
                first,
                second: idx,
            });
        }
        first_seen.insert(*ms, idx);
    }
    let mut by_single: BTreeMap<usize, [usize; 3]> = BTreeMap::new();
    for ms in first_seen.keys() {
        if let Some((i, _)) = ijj_reading(ms) {
            if let Some(prev) = by_single.insert(i, *ms) {
                return Err(LemmaViolation::SharedSingleton {
                    first: prev,
                    second: *ms,
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ExactReal;

    fn coloring(ms: &[[usize; 3]]) -> TriangleColoring {
        TriangleColoring {
            colors: 3,
            multisets: ms.to_vec(),
        }
    }

    #[test]
    fn lemma_examples() {
        assert!(check_coloring_lemmas(&coloring(&[[1, 1, 1], [2, 2, 2], [1, 2, 3]])).is_ok());
        assert!(matches!(
            check_coloring_lemmas(&coloring(&[[1, 2, 2], [1, 3, 3]])),
            Err(LemmaViolation::SharedSingleton { .. })
        ));
        assert!(matches!(
            check_coloring_lemmas(&coloring(&[[1, 2, 3], [1, 2, 3]])),
            Err(LemmaViolation::Repeated {
                first: 0,
                second: 1,
                ..
            })
        ));
        // i = j reading: {1,1,1} with {1,2,2}
        assert!(check_coloring_lemmas(&coloring(&[[1, 1, 1], [1, 2, 2]])).is_err());
        // {1,1,2} reads as i = 2, j = 1; {2,3,3} as i = 2, j = 3
        assert!(check_coloring_lemmas(&coloring(&[[1, 1, 2], [2, 3, 3]])).is_err());
        assert!(check_coloring_lemmas(&coloring(&[[1, 1, 2], [1, 3, 3]])).is_ok());
    }

    #[test]
    fn single_threshold_triangle() {
        let g = Graph::complete(3);
        let one = ExactReal::from_integer(1);
        let rep = Representation::new(vec![one.clone(); 3], vec![one]).unwrap();
        let c = color_triangles(&g, &rep, &[[0, 1, 2]]).unwrap();
        assert_eq!(c.multisets, vec![[1, 1, 1]]);
        assert_eq!(c.colors, 1);
    }

    #[test]
    fn rejects_non_triangles() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let rep = Representation::new(vec![ExactReal::zero(); 3], vec![ExactReal::zero()]).unwrap();
        assert!(matches!(
            color_triangles(&g, &rep, &[[0, 1, 2]]),
            Err(Error::NotATriangle(_))
        ));
    }

    #[test]
    fn even_region_edge_is_an_inconsistency() {
        let g = Graph::complete(3);
        let rep = Representation::new(vec![ExactReal::zero(); 3], vec![ExactReal::from_integer(5)]).unwrap();
        assert!(matches!(
            color_triangles(&g, &rep, &[[0, 1, 2]]),
            Err(Error::EvenRegionEdge((0, 1)))
        ));
    }
}
