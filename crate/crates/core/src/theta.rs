//! Closed-form threshold numbers and the capacity sequences behind them.
//!
//! `q_m = m + C(m,3) + 1` and `p_m = q_m + 1` govern unions of triangles and
//! complete multipartite graphs with parts of size three; `t_m` and `s_m`
//! (with the binomials split over `⌊m/2⌋` and `⌈m/2⌉`) do the same for cliques
//! and parts of size four.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::FamilySpec;

pub fn binom3(a: usize) -> usize {
    if a < 3 {
        0
    } else {
        a * (a - 1) * (a - 2) / 6
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceValues {
    pub m: usize,
    pub q: usize,
    pub p: usize,
    pub s: usize,
    pub t: usize,
}

pub fn qp_values(m: usize) -> SequenceValues {
    let q = m + binom3(m) + 1;
    let s = m + binom3(m / 2) + binom3(m.div_ceil(2)) + 2;
    SequenceValues {
        m,
        q,
        p: q + 1,
        s,
        t: s - 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    Q,
    P,
    S,
    T,
}

impl Sequence {
    pub fn at(self, m: usize) -> usize {
        let v = qp_values(m);
        match self {
            Sequence::Q => v.q,
            Sequence::P => v.p,
            Sequence::S => v.s,
            Sequence::T => v.t,
        }
    }
}

/// The unique `m >= 1` with `seq(m-1) <= n <= seq(m) - 1`, and whether `n`
/// sits on the boundary `n = seq(m-1)`.
pub fn m_from_count(n: usize, seq: Sequence) -> Result<(usize, bool)> {
    let start = seq.at(0);
    if n < start {
        return Err(Error::OutOfRange(format!(
            "count {n} is below the sequence start {start}"
        )));
    }
    let mut m = 1;
    while seq.at(m) <= n {
        m += 1;
    }
    Ok((m, n == seq.at(m - 1)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ThetaValue {
    Exact { value: usize },
    Bounds { lo: usize, hi: usize },
}

impl ThetaValue {
    pub fn exact(self) -> Option<usize> {
        match self {
            ThetaValue::Exact { value } => Some(value),
            ThetaValue::Bounds { .. } => None,
        }
    }

    pub fn range(self) -> (usize, usize) {
        match self {
            ThetaValue::Exact { value } => (value, value),
            ThetaValue::Bounds { lo, hi } => (lo, hi),
        }
    }
}

impl fmt::Display for ThetaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThetaValue::Exact { value } => write!(f, "{value}"),
            ThetaValue::Bounds { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// Which result a threshold number comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Edgeless,
    Complete,
    Path,
    SmallCycle,
    LinearForest,
    Ladder,
    Tent,
    /// Cliques of order at most two plus at most one triangle.
    ClusterSmall,
    /// Cliques of order at most three, two or more triangles.
    ClusterTriangles,
    /// Parts of size at most three, at most two of size three.
    MultipartiteSmall,
    MultipartiteTriangles,
    CliquesOfFour,
    PartsOfFour,
    /// Larger cliques each given a dedicated color.
    ClusterGeneral,
    /// Only bounds: induced triangles below, a colored construction above.
    ClusterGeneralBounds,
    /// Only bounds: the complement differs by at most one, with parity refinement.
    ComplementBounds,
    /// Exhaustive search on the graph itself.
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaResult {
    pub value: ThetaValue,
    pub source: Source,
    pub boundary: bool,
}

impl ThetaResult {
    fn exact(value: usize, source: Source) -> Self {
        Self {
            value: ThetaValue::Exact { value },
            source,
            boundary: false,
        }
    }

    fn bounds(lo: usize, hi: usize, source: Source) -> Self {
        debug_assert!(lo <= hi);
        Self {
            value: ThetaValue::Bounds { lo, hi },
            source,
            boundary: false,
        }
    }

    fn on_boundary(mut self, boundary: bool) -> Self {
        self.boundary = boundary;
        self
    }
}

fn path_theta(n: usize) -> usize {
    match n {
        0 | 1 => 0,
        2 | 3 => 1,
        _ => 2,
    }
}

/// `0 / 1 / 2` by the number of cliques with an edge, when at most one
/// clique has three or more vertices.
fn few_triangles(edged: usize) -> usize {
    edged.min(2)
}

fn triangles_theta(n3: usize) -> Result<(usize, bool)> {
    let (m, boundary) = m_from_count(n3, Sequence::Q)?;
    Ok((if boundary { 2 * m - 1 } else { 2 * m }, boundary))
}

fn counts_at(c: &[usize], size: usize) -> usize {
    c.get(size - 1).copied().unwrap_or(0)
}

fn sum_from(c: &[usize], size: usize) -> usize {
    c.iter().skip(size - 1).sum()
}

fn only_size(c: &[usize], size: usize) -> bool {
    c.iter().enumerate().all(|(i, &x)| i + 1 == size || x == 0)
}

fn cluster_theta(c: &[usize]) -> Result<ThetaResult> {
    if c.iter().sum::<usize>() < 1 {
        return Err(Error::OutOfRange("cluster graph needs at least one clique".into()));
    }
    let n4 = counts_at(c, 4);
    if n4 >= 1 && only_size(c, 4) {
        let (m, boundary) = m_from_count(n4, Sequence::T)?;
        let v = if boundary { 2 * m - 1 } else { 2 * m };
        return Ok(ThetaResult::exact(v, Source::CliquesOfFour).on_boundary(boundary));
    }
    let big = sum_from(c, 3);
    let larger = sum_from(c, 4);
    if big <= 1 {
        let source = if larger == 0 {
            Source::ClusterSmall
        } else {
            Source::ClusterGeneral
        };
        return Ok(ThetaResult::exact(few_triangles(sum_from(c, 2)), source));
    }
    let (v, boundary) = triangles_theta(big)?;
    let (m, _) = m_from_count(big, Sequence::Q)?;
    if larger == 0 {
        Ok(ThetaResult::exact(v, Source::ClusterTriangles).on_boundary(boundary))
    } else if larger <= m {
        Ok(ThetaResult::exact(v, Source::ClusterGeneral).on_boundary(boundary))
    } else {
        // the colored construction still works with max(m, larger) colors
        Ok(ThetaResult::bounds(v, 2 * m.max(larger), Source::ClusterGeneralBounds).on_boundary(boundary))
    }
}

fn complement_bounds(inner: ThetaResult) -> ThetaResult {
    let (lo, hi) = match inner.value {
        ThetaValue::Exact { value } if value % 2 == 1 => (value - 1, value),
        ThetaValue::Exact { value } => (value, value + 1),
        ThetaValue::Bounds { lo, hi } => (lo.saturating_sub(1), hi + 1),
    };
    ThetaResult::bounds(lo, hi, Source::ComplementBounds)
}

fn multipartite_theta(c: &[usize]) -> Result<ThetaResult> {
    let parts: usize = c.iter().sum();
    if parts < 2 {
        return Err(Error::OutOfRange(
            "complete multipartite graph needs at least two parts".into(),
        ));
    }
    let n4 = counts_at(c, 4);
    if n4 >= 2 && only_size(c, 4) {
        let (m, boundary) = m_from_count(n4, Sequence::S)?;
        let v = if boundary { 2 * m } else { 2 * m + 1 };
        return Ok(ThetaResult::exact(v, Source::PartsOfFour).on_boundary(boundary));
    }
    if sum_from(c, 4) > 0 {
        return Ok(complement_bounds(cluster_theta(c)?));
    }
    let (n2, n3) = (counts_at(c, 2), counts_at(c, 3));
    if n3 <= 2 {
        let v = match n2 + n3 {
            0 | 1 => 1,
            2 => 2,
            _ => 3,
        };
        return Ok(ThetaResult::exact(v, Source::MultipartiteSmall));
    }
    let (m, boundary) = m_from_count(n3, Sequence::P)?;
    let v = if boundary { 2 * m } else { 2 * m + 1 };
    Ok(ThetaResult::exact(v, Source::MultipartiteTriangles).on_boundary(boundary))
}

/// Flattens a union into cluster counts (all members complete or cluster
/// graphs) or linear forest counts (all members paths or linear forests).
pub fn flatten_union(parts: &[FamilySpec]) -> Option<FamilySpec> {
    fn bump(c: &mut Vec<usize>, size: usize, by: usize) {
        if c.len() < size {
            c.resize(size, 0);
        }
        c[size - 1] += by;
    }
    let mut cluster = Vec::new();
    let mut forest = Vec::new();
    let (mut cliques_ok, mut paths_ok) = (true, true);
    for p in parts {
        match p {
            FamilySpec::Complete(n) => {
                bump(&mut cluster, *n, 1);
                paths_ok &= *n <= 2;
                if *n <= 2 {
                    bump(&mut forest, *n, 1);
                }
            }
            FamilySpec::Cluster(c) => {
                paths_ok &= c.iter().skip(2).all(|&x| x == 0);
                for (i, &x) in c.iter().enumerate() {
                    bump(&mut cluster, i + 1, x);
                    if i < 2 {
                        bump(&mut forest, i + 1, x);
                    }
                }
            }
            FamilySpec::Path(n) => {
                bump(&mut forest, *n, 1);
                cliques_ok &= *n <= 2;
                if *n <= 2 {
                    bump(&mut cluster, *n, 1);
                }
            }
            FamilySpec::LinearForest(c) => {
                cliques_ok &= c.iter().skip(2).all(|&x| x == 0);
                for (i, &x) in c.iter().enumerate() {
                    bump(&mut forest, i + 1, x);
                    if i < 2 {
                        bump(&mut cluster, i + 1, x);
                    }
                }
            }
            FamilySpec::UnionOf(inner) => match flatten_union(inner)? {
                FamilySpec::Cluster(c) => {
                    paths_ok &= c.iter().skip(2).all(|&x| x == 0);
                    for (i, &x) in c.iter().enumerate() {
                        bump(&mut cluster, i + 1, x);
                        if i < 2 {
                            bump(&mut forest, i + 1, x);
                        }
                    }
                }
                FamilySpec::LinearForest(c) => {
                    cliques_ok &= c.iter().skip(2).all(|&x| x == 0);
                    for (i, &x) in c.iter().enumerate() {
                        bump(&mut forest, i + 1, x);
                        if i < 2 {
                            bump(&mut cluster, i + 1, x);
                        }
                    }
                }
                _ => return None,
            },
            _ => return None,
        }
    }
    if cliques_ok {
        Some(FamilySpec::Cluster(cluster))
    } else if paths_ok {
        Some(FamilySpec::LinearForest(forest))
    } else {
        None
    }
}

/// Threshold number of a family instance from the known closed forms.
pub fn theta_formula(spec: &FamilySpec) -> Result<ThetaResult> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Path(n) => ThetaResult::exact(path_theta(*n), Source::Path),
        FamilySpec::Cycle(3) => ThetaResult::exact(1, Source::SmallCycle),
        FamilySpec::Cycle(4) => ThetaResult::exact(2, Source::SmallCycle),
        FamilySpec::Cycle(_) => return Err(Error::UncoveredFamily(spec.to_string())),
        FamilySpec::Complete(1) => ThetaResult::exact(0, Source::Edgeless),
        FamilySpec::Complete(_) => ThetaResult::exact(1, Source::Complete),
        FamilySpec::Ladder(1) => ThetaResult::exact(1, Source::Path),
        FamilySpec::Ladder(_) => ThetaResult::exact(2, Source::Ladder),
        FamilySpec::Tent(n) => ThetaResult::exact(if *n >= 4 { 3 } else { 1 }, Source::Tent),
        FamilySpec::LinearForest(c) => {
            let nontrivial: usize = c.iter().skip(1).sum();
            match nontrivial {
                0 => ThetaResult::exact(0, Source::Edgeless),
                1 => {
                    let order = c.iter().enumerate().skip(1).find(|(_, &x)| x > 0).map(|(i, _)| i + 1);
                    ThetaResult::exact(path_theta(order.unwrap_or(1)), Source::Path)
                }
                _ => ThetaResult::exact(2, Source::LinearForest),
            }
        }
        FamilySpec::Cluster(c) => cluster_theta(c)?,
        FamilySpec::Multipartite(c) => multipartite_theta(c)?,
        FamilySpec::ComplementOf(inner) => {
            let resolved = (**inner).clone().complement();
            if !matches!(resolved, FamilySpec::ComplementOf(_)) {
                // double complement or a cluster/multipartite duality
                theta_formula(&resolved.complement().complement())?
            } else {
                complement_bounds(theta_formula(inner)?)
            }
        }
        FamilySpec::UnionOf(parts) => match flatten_union(parts) {
            Some(flat) => theta_formula(&flat)?,
            None => return Err(Error::UncoveredFamily(spec.to_string())),
        },
    })
}
