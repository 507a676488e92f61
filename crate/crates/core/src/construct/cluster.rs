//! Cluster graphs and their complements, the complete multipartite graphs.
//!
//! The colored construction gives every clique of order three or more a
//! color multiset over `[m]`: a clique of color `i` puts all its edge sums at
//! `ai`, a triangle `{i, j, l}` puts its three edge sums at `ai`, `aj`, `al`.
//! Thresholds `ai` and `ai + ε` then make exactly those sums odd. With the
//! `ai` square roots of distinct primes no other pair sum lands on an `ai`,
//! and `ε` is taken small enough that none lands in `[ai, ai + ε)` either.

use std::collections::HashSet;

use num_bigint::BigInt;

use super::{complement_construction, ClusterPlan, Construction};
use crate::error::{Error, Result};
use crate::exactnum::primes::{nth_prime, prime_at_least};
use crate::exactnum::{min_positive_gap, ExactReal};
use crate::graphs::{build_family, FamilySpec};
use crate::represent::Representation;
use crate::theta::{m_from_count, qp_values, Sequence};
use crate::Rational;

fn count(c: &[usize], size: usize) -> usize {
    c.get(size - 1).copied().unwrap_or(0)
}

/// All `m` pure triples, then mixed triples in lexicographic order: over
/// `[m - 1]` on the boundary, otherwise over `[m]` cut off at `total`.
fn pick_triples(m: usize, total: usize, boundary: bool) -> Result<Vec<[usize; 3]>> {
    let span = if boundary { m - 1 } else { m };
    let mut out: Vec<[usize; 3]> = (1..=m).map(|i| [i, i, i]).collect();
    let mixed = (1..=span).flat_map(|i| (i + 1..=span).flat_map(move |j| (j + 1..=span).map(move |l| [i, j, l])));
    out.extend(mixed.take(total.saturating_sub(m)));
    if out.len() != total {
        return Err(Error::OutOfRange(format!("{m} colors cannot hold {total} cliques")));
    }
    Ok(out)
}

/// Color multisets for `n3` triangles with `m` colors.
pub fn select_triples(m: usize, n3: usize) -> Result<Vec<[usize; 3]>> {
    if m == 0 || n3 < 2 {
        return Err(Error::OutOfRange(format!(
            "select_triples needs m >= 1 and n3 >= 2, got ({m}, {n3})"
        )));
    }
    let lo = qp_values(m - 1).q;
    let hi = qp_values(m).q - 1;
    if !(lo..=hi).contains(&n3) {
        return Err(Error::OutOfRange(format!(
            "n3 = {n3} is outside [{lo}, {hi}] for m = {m}"
        )));
    }
    pick_triples(m, n3, n3 == lo)
}

/// `ai = √(i-th prime)`, except that on the boundary `am` jumps to the first
/// prime root at least twice `a(m-1)`.
fn color_values(m: usize, boundary: bool) -> Result<Vec<ExactReal>> {
    let mut a = (1..=m)
        .map(|i| ExactReal::sqrt_prime(nth_prime(i)))
        .collect::<Result<Vec<_>>>()?;
    if boundary && m >= 2 {
        a[m - 1] = ExactReal::sqrt_prime(prime_at_least(4 * nth_prime(m - 1)))?;
        if a[m - 2].try_compare(&a[m - 1].half())?.is_gt() {
            return Err(Error::OutOfRange("boundary color is too small".into()));
        }
    }
    Ok(a)
}

fn rational_eps(n: usize, eps: &Rational) -> ExactReal {
    ExactReal::from_rational(eps * Rational::from_integer(BigInt::from(n)))
}

fn dedup(values: impl IntoIterator<Item = ExactReal>) -> Vec<ExactReal> {
    let mut seen = HashSet::new();
    values.into_iter().filter(|v| seen.insert(v.clone())).collect()
}

/// The colored construction with `m` colors. Cliques of order four or more
/// take colors `1, 2, …` in order; triangles take the remaining multisets.
fn colored(counts: &[usize], m: usize, boundary: bool) -> Result<Construction> {
    let spec = FamilySpec::Cluster(counts.to_vec());
    let graph = build_family(&spec)?;
    let (n1, n2) = (count(counts, 1), count(counts, 2));
    let big: Vec<usize> = counts
        .iter()
        .enumerate()
        .skip(2)
        .flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c))
        .collect();
    let larger = big.iter().filter(|&&s| s >= 4).count();
    if larger > m {
        return Err(Error::OutOfRange(format!(
            "{larger} large cliques need more than {m} colors"
        )));
    }
    let triples = pick_triples(m, big.len(), boundary)?;
    let a = color_values(m, boundary)?;

    // ranks of the cliques of order >= 3, in vertex order
    let mut big_ranks = Vec::new();
    let mut clique_colors = Vec::new();
    let mut triangle_triples = Vec::new();
    let mut free = triples[larger..].iter();
    for &size in &big {
        if size >= 4 {
            let c = clique_colors.len() + 1;
            clique_colors.push(c);
            big_ranks.extend(std::iter::repeat_n(a[c - 1].half(), size));
            continue;
        }
        let t = *free.next().expect("one multiset per triangle");
        triangle_triples.push(t);
        let [i, j, l] = t.map(|x| &a[x - 1]);
        if t[0] == t[2] {
            big_ranks.extend(std::iter::repeat_n(i.half(), 3));
        } else {
            big_ranks.push((i + j - l).half());
            big_ranks.push((i + l - j).half());
            big_ranks.push((j + l - i).half());
        }
    }

    // distance from the anchors to every nonedge sum, including sums against
    // the base rank a1/2 that the K1 and K2 ranks are perturbed from
    let base = a[0].half();
    let mut owner = Vec::with_capacity(big_ranks.len());
    for (c, &s) in big.iter().enumerate() {
        owner.extend(std::iter::repeat_n(c, s));
    }
    let mut values = Vec::new();
    for x in 0..big_ranks.len() {
        for y in x + 1..big_ranks.len() {
            if owner[x] != owner[y] {
                values.push(&big_ranks[x] + &big_ranks[y]);
            }
        }
    }
    if n1 + n2 > 0 {
        values.extend(big_ranks.iter().map(|r| &base + r).filter(|s| *s != a[0]));
    }
    let mut delta_lb = min_positive_gap(&dedup(values), &a)?;
    for w in a.windows(2) {
        delta_lb = delta_lb.min(min_positive_gap(&w[1..], &w[..1])?);
    }
    let eps = &delta_lb / Rational::from_integer(BigInt::from(2 * (n1 + n2).max(1)));

    let mut ranks = Vec::with_capacity(graph.order());
    for i in 1..=n1 {
        ranks.push(&base + &rational_eps(i, &eps));
    }
    for j in 1..=n2 {
        let off = rational_eps(n1 + j, &eps);
        ranks.push(&base + &off);
        ranks.push(&base - &off);
    }
    ranks.extend(big_ranks);

    let eps_real = ExactReal::from_rational(eps.clone());
    let mut thresholds = Vec::with_capacity(2 * m);
    for (i, ai) in a.iter().enumerate() {
        thresholds.push(ai.clone());
        if !(boundary && i + 1 == m) {
            thresholds.push(ai + &eps_real);
        }
    }
    let plan = ClusterPlan {
        m,
        a,
        triples: triangle_triples,
        clique_colors,
        delta_lb,
        eps,
        boundary_case: boundary,
    };
    Construction::checked(&spec, graph, Representation::new(ranks, thresholds)?, Some(plan))
}

/// Cluster graphs with at most one clique of order three or more.
fn small(counts: &[usize]) -> Result<Construction> {
    let spec = FamilySpec::Cluster(counts.to_vec());
    let graph = build_family(&spec)?;
    let (n1, n2) = (count(counts, 1), count(counts, 2));
    let big: usize = counts.iter().skip(2).sum();
    if big > 1 {
        return Err(Error::OutOfRange("more than one clique of order three or more".into()));
    }
    let int = ExactReal::from_integer;
    let n = graph.order();
    let rep = match n2 + big {
        0 => Representation::new(vec![ExactReal::zero(); n], vec![])?,
        1 => {
            let ranks = (0..n).map(|v| if v < n1 { int(-2) } else { int(1) }).collect();
            Representation::new(ranks, vec![ExactReal::zero()])?
        }
        _ => {
            let mut ranks: Vec<ExactReal> = (1..=n1 as i64).map(int).collect();
            for j in 1..=n2 as i64 {
                ranks.push(int(n1 as i64 + j));
                ranks.push(int(-(n1 as i64) - j));
            }
            ranks.resize(n, ExactReal::zero());
            Representation::new(ranks, vec![ExactReal::ratio(-1, 2), ExactReal::ratio(1, 2)])?
        }
    };
    Construction::checked(&spec, graph, rep, None)
}

/// `n1 K1 ∪ n2 K2 ∪ n3 K3` with `n3 <= 1`: zero, one or two thresholds.
pub fn cluster_small(n1: usize, n2: usize, n3: usize) -> Result<Construction> {
    if n3 > 1 || n1 + n2 + n3 == 0 {
        return Err(Error::OutOfRange(format!(
            "cluster_small needs n3 <= 1 and a vertex, got ({n1}, {n2}, {n3})"
        )));
    }
    small(&[n1, n2, n3])
}

/// `n1 K1 ∪ n2 K2 ∪ n3 K3` with `n3 >= 2`.
pub fn cluster_main(n1: usize, n2: usize, n3: usize) -> Result<Construction> {
    if n3 < 2 {
        return Err(Error::OutOfRange(format!("cluster_main needs n3 >= 2, got {n3}")));
    }
    let (m, boundary) = m_from_count(n3, Sequence::Q)?;
    colored(&[n1, n2, n3], m, boundary)
}

/// Cluster graphs with two or more cliques of order three or more, at most
/// `m` of them larger than triangles.
pub fn cluster_general(counts: &[usize]) -> Result<Construction> {
    let big: usize = counts.iter().skip(2).sum();
    let larger: usize = counts.iter().skip(3).sum();
    if big < 2 {
        return Err(Error::OutOfRange(
            "needs at least two cliques of order three or more".into(),
        ));
    }
    let (m, boundary) = m_from_count(big, Sequence::Q)?;
    if larger > m {
        return Err(Error::OutOfRange(format!(
            "{larger} cliques of order four or more exceed m = {m}"
        )));
    }
    colored(counts, m, boundary)
}

/// Any cluster graph. Past the color budget the large cliques get one color
/// each, which is valid but may not be minimal.
pub(super) fn any_cluster(counts: &[usize]) -> Result<Construction> {
    let big: usize = counts.iter().skip(2).sum();
    if big <= 1 {
        return small(counts);
    }
    let larger: usize = counts.iter().skip(3).sum();
    let (m, boundary) = m_from_count(big, Sequence::Q)?;
    if larger <= m {
        colored(counts, m, boundary)
    } else {
        colored(counts, larger, false)
    }
}

/// Complement of a cluster construction: mirrored when its threshold count
/// is odd (same count), otherwise with a sentinel threshold (one more).
fn via_complement(counts: &[usize]) -> Result<Construction> {
    let spec = FamilySpec::Multipartite(counts.to_vec());
    complement_construction(&spec, &any_cluster(counts)?)
}

/// `K(n1 x 1, n2 x 2, n3 x 3)`. Not tight when `n3` sits on a boundary of the
/// `p` sequence with `n3 >= 3`.
pub fn multipartite(n1: usize, n2: usize, n3: usize) -> Result<Construction> {
    let counts = [n1, n2, n3];
    let spec = FamilySpec::Multipartite(counts.to_vec());
    if n1 + n2 + n3 < 2 {
        return Err(Error::OutOfRange(
            "complete multipartite graph needs at least two parts".into(),
        ));
    }
    let graph = build_family(&spec)?;
    let int = ExactReal::from_integer;
    let rep = match n2 + n3 {
        0 => Representation::new(vec![ExactReal::zero(); n1], vec![ExactReal::zero()])?,
        1 => {
            let ranks = (0..graph.order())
                .map(|v| if v < n1 { int(1) } else { int(-1) })
                .collect();
            Representation::new(ranks, vec![ExactReal::zero()])?
        }
        2 => {
            // the two large parts at 1 and -1, singletons at 0
            let mut ranks = vec![ExactReal::zero(); n1];
            let rest = graph.order() - n1;
            let first = if n2 >= 1 { 2 } else { 3 };
            ranks.extend((0..rest).map(|i| if i < first { int(1) } else { int(-1) }));
            Representation::new(ranks, vec![ExactReal::ratio(-3, 2), ExactReal::ratio(3, 2)])?
        }
        _ => return via_complement(&counts),
    };
    Construction::checked(&spec, graph, rep, None)
}

/// Any complete multipartite graph.
pub(super) fn any_multipartite(counts: &[usize]) -> Result<Construction> {
    if counts.len() <= 3 || counts.iter().skip(3).all(|&c| c == 0) {
        multipartite(count(counts, 1), count(counts, 2), count(counts, 3))
    } else {
        if counts.iter().sum::<usize>() < 2 {
            return Err(Error::OutOfRange(
                "complete multipartite graph needs at least two parts".into(),
            ));
        }
        via_complement(counts)
    }
}
