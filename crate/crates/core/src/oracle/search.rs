//! Exhaustive search for a representation with a given threshold count.
//!
//! Pairs get region indices one at a time (edges odd, nonedges even) and the
//! simplex is re-checked after every assignment, so a branch dies as soon as
//! its constraints become infeasible. `θ1` is pinned to 0, which loses nothing
//! because adding `c` to every rank and `2c` to every threshold changes no
//! region.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use serde::Serialize;

use super::simplex::{DeltaValue, Simplex};
use crate::error::{Error, Result};
use crate::exactnum::ExactReal;
use crate::graphs::Graph;
use crate::represent::{ensure_verified, Representation};
use crate::theta::{Source, ThetaResult, ThetaValue};
use crate::Rational;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub timeout: Option<Duration>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: Budget,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: Budget::default(),
            workers: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Decision {
    Yes(Representation<Rational>),
    No,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome {
    pub decision: Decision,
    /// Region assignments tried.
    pub nodes: u64,
}

/// Edges first, then nonedges by decreasing degree sum.
fn pair_order(g: &Graph) -> Vec<(usize, usize)> {
    let mut nonedges: Vec<(usize, usize)> = g.pairs().filter(|&(u, v)| !g.has_edge(u, v)).collect();
    nonedges.sort_by_key(|&(u, v)| std::cmp::Reverse(g.degree(u) + g.degree(v)));
    g.edges().chain(nonedges).collect()
}

struct Problem {
    n: usize,
    k: usize,
    choices: Vec<Vec<usize>>,
    base: Simplex<Rational>,
}

impl Problem {
    fn new(g: &Graph, k: usize) -> Self {
        let (n, pairs) = (g.order(), pair_order(g));
        let q = |x: i64| Rational::from_integer(x.into());
        let mut forms = Vec::with_capacity(pairs.len() * k + k);
        for &(u, v) in &pairs {
            for j in 0..k {
                let mut f = vec![Rational::zero(); n + k];
                f[u] += q(1);
                f[v] += q(1);
                f[n + j] = q(-1);
                forms.push(f);
            }
        }
        for j in 1..k {
            let mut f = vec![Rational::zero(); n + k];
            f[n + j] = q(1);
            f[n + j - 1] = q(-1);
            forms.push(f);
        }
        let mut base = Simplex::new(n + k, &forms);
        if k >= 1 {
            base.assert_lower(n, DeltaValue::exact(Rational::zero()));
            base.assert_upper(n, DeltaValue::exact(Rational::zero()));
        }
        for j in 1..k {
            let s = base.slack(pairs.len() * k + j - 1);
            base.assert_lower(s, DeltaValue::above(Rational::zero()));
        }
        let choices = pairs
            .iter()
            .map(|&(u, v)| {
                let parity = usize::from(g.has_edge(u, v));
                (0..=k).filter(|r| r % 2 == parity).collect()
            })
            .collect();
        Self { n, k, choices, base }
    }

    /// Bounds for "pair `p` lies in region `r`": `θr <= sum < θ(r+1)`.
    fn assign(&self, s: &mut Simplex<Rational>, p: usize, r: usize) -> bool {
        let k = self.k;
        if r >= 1 && !s.assert_lower(s.slack(p * k + r - 1), DeltaValue::exact(Rational::zero())) {
            return false;
        }
        if r < k && !s.assert_upper(s.slack(p * k + r), DeltaValue::below(Rational::zero())) {
            return false;
        }
        true
    }

    /// Region prefixes for the first pairs, enough to keep `workers` busy.
    fn prefixes(&self, workers: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        let mut depth = 0;
        while workers > 1 && out.len() < 4 * workers && depth < self.choices.len() {
            out = out
                .into_iter()
                .flat_map(|pre| {
                    self.choices[depth].iter().map(move |&r| {
                        let mut next = pre.clone();
                        next.push(r);
                        next
                    })
                })
                .collect();
            depth += 1;
        }
        out
    }
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    exhausted: AtomicBool,
    found: Mutex<Option<Vec<Rational>>>,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Shared {
    /// Counts one node; `false` once the search should unwind.
    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.max_nodes.is_some_and(|m| used > m);
        let over_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

fn dfs(problem: &Problem, shared: &Shared, s: &mut Simplex<Rational>, p: usize) {
    if p == problem.choices.len() {
        let model = s.model();
        let mut found = shared.found.lock().expect("no panics while holding the lock");
        if found.is_none() {
            *found = Some(model);
        }
        shared.stop.store(true, Ordering::Relaxed);
        return;
    }
    for &r in &problem.choices[p] {
        if !shared.tick() {
            return;
        }
        s.push();
        if problem.assign(s, p, r) && s.check() {
            dfs(problem, shared, s, p + 1);
        }
        s.pop();
        if shared.stop.load(Ordering::Relaxed) {
            return;
        }
    }
}

fn worker(problem: &Problem, shared: &Shared, prefixes: &[Vec<usize>], next: &AtomicUsize) {
    let mut s = problem.base.clone();
    loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= prefixes.len() || shared.stop.load(Ordering::Relaxed) {
            return;
        }
        let prefix = &prefixes[i];
        s.push();
        let mut alive = true;
        for (p, &r) in prefix.iter().enumerate() {
            if !shared.tick() || !problem.assign(&mut s, p, r) || !s.check() {
                alive = false;
                break;
            }
        }
        if alive {
            dfs(problem, shared, &mut s, prefix.len());
        }
        s.pop();
    }
}

/// Decides whether `g` has a representation with exactly `k` thresholds.
/// A `Yes` witness has rational entries and has been verified on `g`.
pub fn exists_representation(g: &Graph, k: usize, options: &SearchOptions) -> Result<SearchOutcome> {
    if k == 0 {
        let decision = if g.size() == 0 {
            Decision::Yes(Representation::new(vec![Rational::zero(); g.order()], vec![])?)
        } else {
            Decision::No
        };
        return Ok(SearchOutcome { decision, nodes: 0 });
    }
    let problem = Problem::new(g, k);
    let shared = Shared {
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        exhausted: AtomicBool::new(false),
        found: Mutex::new(None),
        max_nodes: options.budget.max_nodes,
        deadline: options.budget.timeout.map(|t| Instant::now() + t),
    };
    let workers = options.workers.max(1);
    let prefixes = problem.prefixes(workers);
    let next = AtomicUsize::new(0);
    if workers == 1 {
        worker(&problem, &shared, &prefixes, &next);
    } else {
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| worker(&problem, &shared, &prefixes, &next));
            }
        });
    }
    let nodes = shared.nodes.load(Ordering::Relaxed);
    let found = shared.found.into_inner().expect("workers finished");
    let decision = match found {
        Some(x) => {
            let rep = Representation::new(x[..problem.n].to_vec(), x[problem.n..].to_vec())?;
            ensure_verified(g, &rep)?;
            Decision::Yes(rep)
        }
        None if shared.exhausted.load(Ordering::Relaxed) => Decision::BudgetExceeded,
        None => Decision::No,
    };
    Ok(SearchOutcome { decision, nodes })
}

/// Ranks `2^v` make all pair sums distinct; a threshold at every sum where
/// adjacency flips (in sorted order) then realizes the graph.
pub fn distinct_sums_representation(g: &Graph) -> Result<Representation<Rational>> {
    let ranks: Vec<Rational> = (0..g.order())
        .map(|v| Rational::from_integer(num_bigint::BigInt::one() << v))
        .collect();
    let mut sums: Vec<(Rational, bool)> = g
        .pairs()
        .map(|(u, v)| (&ranks[u] + &ranks[v], g.has_edge(u, v)))
        .collect();
    sums.sort_by(|a, b| a.0.cmp(&b.0));
    let mut thresholds = Vec::new();
    let mut inside = false;
    for (s, edge) in sums {
        if edge != inside {
            thresholds.push(s);
            inside = edge;
        }
    }
    let rep = Representation::new(ranks, thresholds)?;
    ensure_verified(g, &rep)?;
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KStep {
    pub k: usize,
    pub verdict: Verdict,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThetaSearch {
    pub result: ThetaResult,
    pub witness: Option<Representation>,
    pub steps: Vec<KStep>,
}

impl ThetaSearch {
    pub fn budget_exceeded(&self) -> bool {
        self.steps.last().is_some_and(|s| s.verdict == Verdict::Budget)
    }
}

fn to_exact(rep: &Representation<Rational>) -> Result<Representation> {
    rep.map(|q| ExactReal::from_rational(q.clone()))
}

/// Smallest `k <= k_max` with a representation. Without one the result is a
/// lower bound `k_max + 1`, or `k` when the budget ran out at `k`.
pub fn theta_search(g: &Graph, k_max: usize, options: &SearchOptions) -> Result<ThetaSearch> {
    let oracle = |value| ThetaResult {
        value,
        source: Source::Oracle,
        boundary: false,
    };
    if g.size() == 0 {
        return Ok(ThetaSearch {
            result: oracle(ThetaValue::Exact { value: 0 }),
            witness: Some(Representation::new(vec![ExactReal::zero(); g.order()], vec![])?),
            steps: vec![],
        });
    }
    let upper = distinct_sums_representation(g)?.k();
    let start = Instant::now();
    let mut nodes_left = options.budget.max_nodes;
    let mut steps = Vec::new();
    for k in 1..=k_max {
        let remaining = match options.budget.timeout {
            Some(t) => match t.checked_sub(start.elapsed()) {
                Some(r) => Some(r),
                None => Some(Duration::ZERO),
            },
            None => None,
        };
        let opts = SearchOptions {
            budget: Budget {
                max_nodes: nodes_left,
                timeout: remaining,
            },
            workers: options.workers,
        };
        let out = exists_representation(g, k, &opts)?;
        nodes_left = nodes_left.map(|n| n.saturating_sub(out.nodes));
        match out.decision {
            Decision::Yes(rep) => {
                steps.push(KStep {
                    k,
                    verdict: Verdict::Yes,
                    nodes: out.nodes,
                });
                return Ok(ThetaSearch {
                    result: oracle(ThetaValue::Exact { value: k }),
                    witness: Some(to_exact(&rep)?),
                    steps,
                });
            }
            Decision::No => steps.push(KStep {
                k,
                verdict: Verdict::No,
                nodes: out.nodes,
            }),
            Decision::BudgetExceeded => {
                steps.push(KStep {
                    k,
                    verdict: Verdict::Budget,
                    nodes: out.nodes,
                });
                return Ok(ThetaSearch {
                    result: oracle(ThetaValue::Bounds {
                        lo: k,
                        hi: upper.max(k),
                    }),
                    witness: None,
                    steps,
                });
            }
        }
    }
    if k_max >= upper {
        return Err(Error::Inconsistent(format!(
            "search refuted every k <= {k_max} but {upper} thresholds suffice"
        )));
    }
    Ok(ThetaSearch {
        result: oracle(ThetaValue::Bounds {
            lo: k_max + 1,
            hi: upper,
        }),
        witness: None,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_family, parse_family_spec};

    fn build(s: &str) -> Graph {
        build_family(&parse_family_spec(s).unwrap()).unwrap()
    }

    fn yes(g: &Graph, k: usize) -> bool {
        match exists_representation(g, k, &SearchOptions::default()).unwrap().decision {
            Decision::Yes(_) => true,
            Decision::No => false,
            Decision::BudgetExceeded => panic!("no budget was set"),
        }
    }

    fn theta(s: &str) -> ThetaValue {
        theta_search(&build(s), 6, &SearchOptions::default())
            .unwrap()
            .result
            .value
    }

    #[test]
    fn decision_examples() {
        let c4 = build("cycle:4");
        assert!(!yes(&c4, 1));
        assert!(yes(&c4, 2));
        assert!(yes(&build("complete:3"), 1));
        assert!(!yes(&build("tent:4"), 2));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta("path:4"), ThetaValue::Exact { value: 2 });
        assert_eq!(theta("tent:4"), ThetaValue::Exact { value: 3 });
        assert_eq!(theta("complete:1"), ThetaValue::Exact { value: 0 });
        assert_eq!(theta("cluster:0,0,2"), ThetaValue::Exact { value: 3 });
    }

    #[test]
    fn budget_and_bounds() {
        let g = build("tent:4");
        let opts = SearchOptions {
            budget: Budget {
                max_nodes: Some(3),
                timeout: None,
            },
            workers: 1,
        };
        let r = theta_search(&g, 5, &opts).unwrap();
        assert!(r.budget_exceeded());
        assert!(matches!(r.result.value, ThetaValue::Bounds { lo: 1, .. }));
        let capped = theta_search(&g, 2, &SearchOptions::default()).unwrap();
        assert!(matches!(capped.result.value, ThetaValue::Bounds { lo: 3, .. }));
    }

    #[test]
    fn workers_agree() {
        let opts = SearchOptions {
            budget: Budget::default(),
            workers: 4,
        };
        for s in ["tent:4", "ladder:3", "cluster:0,0,2", "path:5"] {
            let g = build(s);
            let a = theta_search(&g, 5, &opts).unwrap();
            let b = theta_search(&g, 5, &SearchOptions::default()).unwrap();
            assert_eq!(a.result, b.result, "{s}");
        }
    }

    #[test]
    fn distinct_sums_upper_bound() {
        for s in ["path:6", "cycle:7", "tent:5", "cluster:1,2,2"] {
            let g = build(s);
            let rep = distinct_sums_representation(&g).unwrap();
            assert!(rep.k() <= 2 * g.size());
        }
    }
}
