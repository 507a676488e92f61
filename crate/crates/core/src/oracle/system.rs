//! Explicit strict/weak linear systems and the region systems of a graph.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::simplex::{DeltaValue, Simplex};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
}

/// `Σ coeffs[i] · x_i  (< or <=)  rhs`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn holds(&self, x: &[Rational]) -> bool {
        let lhs = self
            .coeffs
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (c, v)| acc + c * v);
        match self.relation {
            Relation::Lt => lhs < self.rhs,
            Relation::Le => lhs <= self.rhs,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct LinearSystem {
    pub variables: Vec<String>,
    pub constraints: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(variables: Vec<String>) -> Self {
        Self {
            variables,
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    /// Adds `terms < rhs` or `terms <= rhs` from sparse `(variable, coefficient)` terms.
    pub fn push_terms(&mut self, terms: &[(usize, i64)], relation: Relation, rhs: i64) {
        let mut coeffs = vec![Rational::zero(); self.variables.len()];
        for &(v, c) in terms {
            coeffs[v] += Rational::from_integer(c.into());
        }
        self.push(coeffs, relation, Rational::from_integer(rhs.into()));
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "lowercase")]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Decides real feasibility; a returned witness has been substituted back
/// into every constraint.
pub fn feasible_linear_system(sys: &LinearSystem) -> Result<Feasibility> {
    let n = sys.variables.len();
    if let Some(i) = sys.constraints.iter().position(|c| c.coeffs.len() != n) {
        return Err(Error::MalformedSystem(format!(
            "constraint {i} has {} coefficients for {n} variables",
            sys.constraints[i].coeffs.len()
        )));
    }
    let forms: Vec<Vec<Rational>> = sys.constraints.iter().map(|c| c.coeffs.clone()).collect();
    let mut simplex = Simplex::new(n, &forms);
    for (i, c) in sys.constraints.iter().enumerate() {
        let bound = match c.relation {
            Relation::Lt => DeltaValue::below(c.rhs.clone()),
            Relation::Le => DeltaValue::exact(c.rhs.clone()),
        };
        if !simplex.assert_upper(simplex.slack(i), bound) {
            return Ok(Feasibility::Infeasible);
        }
    }
    if !simplex.check() {
        return Ok(Feasibility::Infeasible);
    }
    let x = simplex.model();
    if let Some(i) = sys.constraints.iter().position(|c| !c.holds(&x)) {
        return Err(Error::WitnessRejected(i));
    }
    Ok(Feasibility::Feasible(x))
}

/// Region index of each assigned pair, for a fixed threshold count `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RegionAssignment {
    pub k: usize,
    pub regions: BTreeMap<(usize, usize), usize>,
}

impl RegionAssignment {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            regions: BTreeMap::new(),
        }
    }

    /// Records the region of `uv`; the parity must match the graph.
    pub fn assign(&mut self, g: &Graph, u: usize, v: usize, region: usize) -> Result<()> {
        let (u, v) = (u.min(v), u.max(v));
        if region > self.k || (region % 2 == 1) != g.has_edge(u, v) {
            return Err(Error::OutOfRange(format!("region {region} for pair ({u}, {v})")));
        }
        self.regions.insert((u, v), region);
        Ok(())
    }
}

/// Variables `r0 … r(n-1), θ1 … θk`; `θ1 = 0`, thresholds strictly
/// increasing, and each assigned pair sum inside its region.
pub fn region_system(g: &Graph, assignment: &RegionAssignment) -> LinearSystem {
    let (n, k) = (g.order(), assignment.k);
    let mut vars: Vec<String> = (0..n).map(|v| format!("r{v}")).collect();
    vars.extend((1..=k).map(|j| format!("theta{j}")));
    let mut sys = LinearSystem::new(vars);
    let theta = |j: usize| n + j - 1;
    if k >= 1 {
        sys.push_terms(&[(theta(1), 1)], Relation::Le, 0);
        sys.push_terms(&[(theta(1), -1)], Relation::Le, 0);
    }
    for j in 1..k {
        sys.push_terms(&[(theta(j), 1), (theta(j + 1), -1)], Relation::Lt, 0);
    }
    for (&(u, v), &region) in &assignment.regions {
        if region >= 1 {
            // θ(region) <= r_u + r_v
            sys.push_terms(&[(theta(region), 1), (u, -1), (v, -1)], Relation::Le, 0);
        }
        if region < k {
            // r_u + r_v < θ(region + 1)
            sys.push_terms(&[(u, 1), (v, 1), (theta(region + 1), -1)], Relation::Lt, 0);
        }
    }
    sys
}

/// Every parity-consistent full assignment for `k` thresholds with its
/// feasibility verdict. Refuses more than `limit` assignments.
pub fn enumerate_assignments(g: &Graph, k: usize, limit: usize) -> Result<Vec<(RegionAssignment, bool)>> {
    let choices: Vec<((usize, usize), Vec<usize>)> = g
        .pairs()
        .map(|(u, v)| {
            let parity = usize::from(g.has_edge(u, v));
            ((u, v), (0..=k).filter(|r| r % 2 == parity).collect())
        })
        .collect();
    let mut total = 1usize;
    for (_, c) in &choices {
        total = total.saturating_mul(c.len());
    }
    if total > limit {
        return Err(Error::OutOfRange(format!(
            "{total} assignments exceed the limit {limit}"
        )));
    }
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0usize; choices.len()];
    if total == 0 {
        return Ok(out);
    }
    loop {
        let mut a = RegionAssignment::new(k);
        for (((u, v), c), &i) in choices.iter().zip(&idx) {
            a.regions.insert((*u, *v), c[i]);
        }
        let ok = feasible_linear_system(&region_system(g, &a))?.is_feasible();
        out.push((a, ok));
        // odometer over the choice lists
        let mut p = choices.len();
        loop {
            if p == 0 {
                return Ok(out);
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < choices[p].1.len() {
                break;
            }
            idx[p] = 0;
        }
    }
}
