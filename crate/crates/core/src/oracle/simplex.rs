//! Incremental bounded simplex over an ordered field.
//!
//! Every row defines a slack variable as a linear form of the original
//! variables; constraints are bounds on variables. Strict bounds use values
//! `c + kδ` for an infinitesimal `δ > 0`, so `x < c` becomes `x <= c - δ`.
//! Bounds can be pushed and popped, which is what a depth-first search needs.
//! Pivoting follows Bland's rule, so `check` always terminates.

use std::cmp::Ordering;

use crate::scalar::OrderedField;

/// `c + kδ`, ordered lexicographically.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct DeltaValue<F> {
    pub c: F,
    pub k: F,
}

impl<F: OrderedField> DeltaValue<F> {
    pub fn exact(c: F) -> Self {
        Self { c, k: F::zero() }
    }

    pub fn below(c: F) -> Self {
        Self { c, k: -F::one() }
    }

    pub fn above(c: F) -> Self {
        Self { c, k: F::one() }
    }

    fn zero() -> Self {
        Self::exact(F::zero())
    }

    fn add_scaled(&mut self, other: &Self, f: &F) {
        self.c = self.c.clone() + other.c.clone() * f.clone();
        self.k = self.k.clone() + other.k.clone() * f.clone();
    }

    fn sub(&self, other: &Self) -> Self {
        Self {
            c: self.c.clone() - other.c.clone(),
            k: self.k.clone() - other.k.clone(),
        }
    }

    fn div(&self, f: &F) -> Self {
        Self {
            c: self.c.clone() / f.clone(),
            k: self.k.clone() / f.clone(),
        }
    }

    fn cmp(&self, other: &Self) -> Ordering {
        match self.c.partial_cmp(&other.c).expect("ordered field") {
            Ordering::Equal => self.k.partial_cmp(&other.k).expect("ordered field"),
            o => o,
        }
    }

    /// The largest `δ` in `(0, cap]` keeping `self >= other` after substitution,
    /// given that it holds symbolically.
    fn delta_room(&self, other: &Self, cap: F) -> F {
        let dc = self.c.clone() - other.c.clone();
        let dk = other.k.clone() - self.k.clone();
        if dk > F::zero() && dc > F::zero() {
            let room = dc / dk;
            if room < cap {
                return room;
            }
        }
        cap
    }
}

#[derive(Clone, Debug)]
struct Saved<F> {
    var: usize,
    lower: Option<DeltaValue<F>>,
    upper: Option<DeltaValue<F>>,
}

#[derive(Clone, Debug)]
pub(crate) struct Simplex<F> {
    /// Dense rows: `basic[r] = Σ rows[r][j] · x_j` over nonbasic `j`.
    rows: Vec<Vec<F>>,
    basic: Vec<usize>,
    row_of: Vec<Option<usize>>,
    lower: Vec<Option<DeltaValue<F>>>,
    upper: Vec<Option<DeltaValue<F>>>,
    value: Vec<DeltaValue<F>>,
    trail: Vec<Saved<F>>,
    marks: Vec<usize>,
    originals: usize,
}

impl<F: OrderedField> Simplex<F> {
    /// `originals` free variables plus one slack per row; slack `i` has
    /// index `originals + i`.
    pub fn new(originals: usize, forms: &[Vec<F>]) -> Self {
        let total = originals + forms.len();
        let rows = forms
            .iter()
            .map(|f| {
                let mut row = vec![F::zero(); total];
                row[..originals].clone_from_slice(f);
                row
            })
            .collect();
        let mut row_of = vec![None; total];
        for (i, slot) in row_of.iter_mut().enumerate().skip(originals) {
            *slot = Some(i - originals);
        }
        Self {
            rows,
            basic: (originals..total).collect(),
            row_of,
            lower: vec![None; total],
            upper: vec![None; total],
            value: vec![DeltaValue::zero(); total],
            trail: Vec::new(),
            marks: Vec::new(),
            originals,
        }
    }

    pub fn slack(&self, row: usize) -> usize {
        self.originals + row
    }

    pub fn push(&mut self) {
        self.marks.push(self.trail.len());
    }

    pub fn pop(&mut self) {
        let mark = self.marks.pop().expect("pop without push");
        while self.trail.len() > mark {
            let s = self.trail.pop().expect("trail entry");
            self.lower[s.var] = s.lower;
            self.upper[s.var] = s.upper;
        }
    }

    fn save(&mut self, var: usize) {
        self.trail.push(Saved {
            var,
            lower: self.lower[var].clone(),
            upper: self.upper[var].clone(),
        });
    }

    /// Tightens `var <= bound`; `false` on an immediate bound conflict.
    pub fn assert_upper(&mut self, var: usize, bound: DeltaValue<F>) -> bool {
        if self.upper[var].as_ref().is_some_and(|u| u.cmp(&bound).is_le()) {
            return true;
        }
        if self.lower[var].as_ref().is_some_and(|l| bound.cmp(l).is_lt()) {
            return false;
        }
        self.save(var);
        if self.row_of[var].is_none() && self.value[var].cmp(&bound).is_gt() {
            self.update(var, bound.clone());
        }
        self.upper[var] = Some(bound);
        true
    }

    /// Tightens `var >= bound`; `false` on an immediate bound conflict.
    pub fn assert_lower(&mut self, var: usize, bound: DeltaValue<F>) -> bool {
        if self.lower[var].as_ref().is_some_and(|l| l.cmp(&bound).is_ge()) {
            return true;
        }
        if self.upper[var].as_ref().is_some_and(|u| bound.cmp(u).is_gt()) {
            return false;
        }
        self.save(var);
        if self.row_of[var].is_none() && self.value[var].cmp(&bound).is_lt() {
            self.update(var, bound.clone());
        }
        self.lower[var] = Some(bound);
        true
    }

    fn update(&mut self, var: usize, v: DeltaValue<F>) {
        let diff = v.sub(&self.value[var]);
        for (r, row) in self.rows.iter().enumerate() {
            let a = &row[var];
            if !a.is_zero() {
                let b = self.basic[r];
                self.value[b].add_scaled(&diff, a);
            }
        }
        self.value[var] = v;
    }

    fn pivot(&mut self, r: usize, entering: usize) {
        let leaving = self.basic[r];
        let a = self.rows[r][entering].clone();
        {
            let row = &mut self.rows[r];
            for x in row.iter_mut() {
                *x = -x.clone() / a.clone();
            }
            row[entering] = F::zero();
            row[leaving] = F::one() / a;
        }
        let pivot_row = self.rows[r].clone();
        for (k, row) in self.rows.iter_mut().enumerate() {
            if k == r {
                continue;
            }
            let f = row[entering].clone();
            if f.is_zero() {
                continue;
            }
            row[entering] = F::zero();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.clone() + f.clone() * p.clone();
                }
            }
        }
        self.basic[r] = entering;
        self.row_of[leaving] = None;
        self.row_of[entering] = Some(r);
    }

    fn pivot_and_update(&mut self, r: usize, entering: usize, v: DeltaValue<F>) {
        let b = self.basic[r];
        let a = self.rows[r][entering].clone();
        let theta = v.sub(&self.value[b]).div(&a);
        self.value[b] = v;
        let mut ev = self.value[entering].clone();
        ev.add_scaled(&theta, &F::one());
        self.value[entering] = ev;
        for (k, row) in self.rows.iter().enumerate() {
            if k == r {
                continue;
            }
            let f = &row[entering];
            if !f.is_zero() {
                let bk = self.basic[k];
                self.value[bk].add_scaled(&theta, f);
            }
        }
        self.pivot(r, entering);
    }

    fn below_lower(&self, x: usize) -> bool {
        self.lower[x].as_ref().is_some_and(|l| self.value[x].cmp(l).is_lt())
    }

    fn above_upper(&self, x: usize) -> bool {
        self.upper[x].as_ref().is_some_and(|u| self.value[x].cmp(u).is_gt())
    }

    /// Restores every bound, or reports that the current bounds are infeasible.
    pub fn check(&mut self) -> bool {
        loop {
            let violated = (0..self.value.len())
                .filter(|&x| self.row_of[x].is_some())
                .find(|&x| self.below_lower(x) || self.above_upper(x));
            let Some(b) = violated else {
                return true;
            };
            let r = self.row_of[b].expect("basic variable");
            let increase = self.below_lower(b);
            let entering = (0..self.value.len()).find(|&j| {
                let a = &self.rows[r][j];
                if self.row_of[j].is_some() || a.is_zero() {
                    return false;
                }
                let can_rise = self.upper[j].as_ref().is_none_or(|u| self.value[j].cmp(u).is_lt());
                let can_fall = self.lower[j].as_ref().is_none_or(|l| self.value[j].cmp(l).is_gt());
                let positive = *a > F::zero();
                if increase == positive {
                    can_rise
                } else {
                    can_fall
                }
            });
            let Some(j) = entering else {
                return false;
            };
            let target = if increase {
                self.lower[b].clone().expect("violated lower bound")
            } else {
                self.upper[b].clone().expect("violated upper bound")
            };
            self.pivot_and_update(r, j, target);
        }
    }

    /// Concrete values of the original variables after a successful
    /// [`Simplex::check`], choosing `δ` small enough for every bound.
    pub fn model(&self) -> Vec<F> {
        let mut delta = F::one();
        for x in 0..self.value.len() {
            if let Some(l) = &self.lower[x] {
                delta = self.value[x].delta_room(l, delta);
            }
            if let Some(u) = &self.upper[x] {
                delta = u.delta_room(&self.value[x], delta);
            }
        }
        self.value[..self.originals]
            .iter()
            .map(|v| v.c.clone() + v.k.clone() * delta.clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn strict_interval() {
        // 0 < x < 1
        let mut s = Simplex::new(1, &[]);
        assert!(s.assert_lower(0, DeltaValue::above(q(0))));
        assert!(s.assert_upper(0, DeltaValue::below(q(1))));
        assert!(s.check());
        let x = &s.model()[0];
        assert!(*x > q(0) && *x < q(1));
    }

    #[test]
    fn contradiction_and_pop() {
        // x + y < 0, x > 0, y > 0
        let mut s = Simplex::new(2, &[vec![q(1), q(1)]]);
        let slack = s.slack(0);
        assert!(s.assert_upper(slack, DeltaValue::below(q(0))));
        s.push();
        assert!(s.assert_lower(0, DeltaValue::above(q(0))));
        assert!(s.check());
        assert!(s.assert_lower(1, DeltaValue::above(q(0))));
        assert!(!s.check());
        s.pop();
        assert!(s.check());
        let m = s.model();
        assert!(m[0].clone() + m[1].clone() < q(0));
    }
}
