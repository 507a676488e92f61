//! Explicit representations for the covered families.
//!
//! Every constructor checks its output with [`crate::represent::verify`]
//! before returning it, so a returned [`Construction`] is always valid. It is
//! `tight` when its threshold count meets the best known lower bound from
//! [`crate::theta::theta_formula`].

mod cluster;
mod paths;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, ExactReal};
use crate::graphs::{build_family, FamilySpec, Graph};
use crate::represent::{complement_representation, ensure_verified, mirrored_complement_representation, verify};
use crate::represent::{Representation, VerifyReport};
use crate::theta::{theta_formula, ThetaResult};
use crate::Rational;

pub use cluster::{cluster_general, cluster_main, cluster_small, multipartite, select_triples};
pub use paths::{ladder, linear_forest, tent};

fn ser_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

/// Parameters of a colored cluster construction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClusterPlan {
    pub m: usize,
    /// `a1 < … < am`, square roots of distinct primes.
    pub a: Vec<ExactReal>,
    /// Color multiset of each triangle cluster, in vertex order.
    pub triples: Vec<[usize; 3]>,
    /// Color of each clique of order four or more, in vertex order.
    pub clique_colors: Vec<usize>,
    #[serde(serialize_with = "ser_rational")]
    pub delta_lb: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub eps: Rational,
    pub boundary_case: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Construction {
    pub graph: Graph,
    pub representation: Representation,
    pub plan: Option<ClusterPlan>,
    pub tight: bool,
}

impl Construction {
    /// Verifies `rep` on `graph` and measures it against the formula for `spec`.
    fn checked(spec: &FamilySpec, graph: Graph, rep: Representation, plan: Option<ClusterPlan>) -> Result<Self> {
        ensure_verified(&graph, &rep)?;
        let tight = match theta_formula(spec) {
            Ok(r) => rep.k() == r.value.range().0,
            Err(_) => false,
        };
        Ok(Self {
            graph,
            representation: rep,
            plan,
            tight,
        })
    }

    pub fn threshold_count(&self) -> usize {
        self.representation.k()
    }

    /// Self-contained record of the construction, re-verified.
    pub fn certificate(&self, spec: &FamilySpec) -> Result<Certificate> {
        Ok(Certificate {
            spec: spec.to_string(),
            graph: self.graph.clone(),
            representation: self.representation.clone(),
            plan: self.plan.clone(),
            report: verify(&self.graph, &self.representation)?,
            threshold_count: self.threshold_count(),
            formula: theta_formula(spec).ok(),
            tight: self.tight,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub spec: String,
    pub graph: Graph,
    pub representation: Representation,
    pub plan: Option<ClusterPlan>,
    pub report: VerifyReport,
    pub threshold_count: usize,
    pub formula: Option<ThetaResult>,
    pub tight: bool,
}

/// Representation of the complement with one extra threshold, or none when
/// the count is odd.
pub fn complement_construction(spec: &FamilySpec, inner: &Construction) -> Result<Construction> {
    let rep = if inner.representation.k() % 2 == 1 {
        mirrored_complement_representation(&inner.graph, &inner.representation)?
    } else {
        complement_representation(&inner.graph, &inner.representation)?
    };
    Construction::checked(spec, inner.graph.complement(), rep, None)
}

/// Moves a representation of a disjoint union onto another layout of the same
/// components, matching components of equal order in vertex order.
fn transplant(spec: &FamilySpec, target: Graph, source: &Construction) -> Result<Construction> {
    let mut pool: Vec<Option<Vec<usize>>> = source.graph.components().into_iter().map(Some).collect();
    let ranks = source.representation.ranks();
    let mut mapped = vec![ExactReal::zero(); target.order()];
    for comp in target.components() {
        let slot = pool
            .iter_mut()
            .find(|c| c.as_ref().is_some_and(|c| c.len() == comp.len()))
            .and_then(Option::take)
            .ok_or_else(|| Error::InvalidGraph("component layouts differ".into()))?;
        for (&t, &s) in comp.iter().zip(&slot) {
            mapped[t] = ranks[s].clone();
        }
    }
    let rep = Representation::new(mapped, source.representation.thresholds().to_vec())?;
    Construction::checked(spec, target, rep, None)
}

fn complete(spec: &FamilySpec, n: usize) -> Result<Construction> {
    let thresholds = if n >= 2 { vec![ExactReal::zero()] } else { vec![] };
    let rep = Representation::new(vec![ExactReal::zero(); n], thresholds)?;
    Construction::checked(spec, Graph::complete(n), rep, None)
}

fn cycle4(spec: &FamilySpec) -> Result<Construction> {
    let ranks = [1, -1, 1, -1].into_iter().map(ExactReal::from_integer).collect();
    let rep = Representation::new(ranks, vec![ExactReal::ratio(-1, 2), ExactReal::ratio(1, 2)])?;
    Construction::checked(spec, build_family(spec)?, rep, None)
}

/// Picks a constructor for any covered family instance.
pub fn construct_family(spec: &FamilySpec) -> Result<Construction> {
    spec.validate()?;
    match spec {
        FamilySpec::Path(n) => {
            let mut counts = vec![0; *n];
            counts[n - 1] = 1;
            paths::forest(spec, &counts)
        }
        FamilySpec::Cycle(3) => complete(spec, 3),
        FamilySpec::Cycle(4) => cycle4(spec),
        FamilySpec::Cycle(_) => Err(Error::UncoveredFamily(spec.to_string())),
        FamilySpec::Complete(n) => complete(spec, *n),
        FamilySpec::Ladder(n) => ladder(*n),
        FamilySpec::Tent(n) => paths::any_tent(*n),
        FamilySpec::LinearForest(c) => paths::forest(spec, c),
        FamilySpec::Cluster(c) => cluster::any_cluster(c),
        FamilySpec::Multipartite(c) => cluster::any_multipartite(c),
        FamilySpec::ComplementOf(inner) => {
            let resolved = (**inner).clone().complement();
            if matches!(resolved, FamilySpec::ComplementOf(_)) {
                complement_construction(spec, &construct_family(inner)?)
            } else {
                let c = construct_family(&resolved.complement().complement())?;
                Construction::checked(spec, build_family(spec)?, c.representation, c.plan)
            }
        }
        FamilySpec::UnionOf(parts) => {
            let flat = crate::theta::flatten_union(parts).ok_or_else(|| Error::UncoveredFamily(spec.to_string()))?;
            let c = construct_family(&flat)?;
            transplant(spec, build_family(spec)?, &c)
        }
    }
}
