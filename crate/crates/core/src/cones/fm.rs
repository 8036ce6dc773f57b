//! Fourier–Motzkin elimination, used as an independent oracle for the
//! double description engine.
//!
//! A system has `nvars` variables and one trailing constant column. Each row
//! `(c, c0)` means `<c, x> + c0 = 0` or `<c, x> + c0 ≥ 0`.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::arith::{is_zero_vec, primitive, Int};

#[derive(Clone, Debug, Default)]
pub struct System {
    pub nvars: usize,
    pub equalities: Vec<Vec<Int>>,
    pub inequalities: Vec<Vec<Int>>,
}

fn lincomb(a: &Int, x: &[Int], b: &Int, y: &[Int]) -> Vec<Int> {
    primitive(x.iter().zip(y).map(|(p, q)| a * p - b * q).collect())
}

fn normalize_ineqs(rows: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    let set: BTreeSet<Vec<Int>> = rows.into_iter().map(primitive).collect();
    set.into_iter().collect()
}

impl System {
    pub fn new(nvars: usize) -> Self {
        System { nvars, ..Default::default() }
    }

    /// Remove variable `j` (its column becomes zero).
    pub fn eliminate(&mut self, j: usize) {
        if let Some(pos) = self.equalities.iter().position(|e| !e[j].is_zero()) {
            let mut e = self.equalities.remove(pos);
            if e[j].is_negative() {
                e = e.into_iter().map(|x| -x).collect();
            }
            let pivot = e[j].clone();
            for r in self.equalities.iter_mut().chain(self.inequalities.iter_mut()) {
                if !r[j].is_zero() {
                    let c = r[j].clone();
                    *r = lincomb(&pivot, r, &c, &e);
                }
            }
            self.equalities.retain(|r| !is_zero_vec(r));
            self.inequalities = normalize_ineqs(std::mem::take(&mut self.inequalities));
            return;
        }
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in std::mem::take(&mut self.inequalities) {
            if r[j].is_positive() {
                pos.push(r);
            } else if r[j].is_negative() {
                neg.push(r);
            } else {
                rest.push(r);
            }
        }
        for p in &pos {
            for n in &neg {
                rest.push(lincomb(&p[j], n, &n[j], p));
            }
        }
        self.inequalities = normalize_ineqs(rest);
    }

    /// Eliminate the given variables, cheapest first.
    pub fn eliminate_all(&mut self, vars: &[usize]) {
        let mut left: Vec<usize> = vars.to_vec();
        while !left.is_empty() {
            let cost = |j: usize| {
                if self.equalities.iter().any(|e| !e[j].is_zero()) {
                    return 0;
                }
                let p = self.inequalities.iter().filter(|r| r[j].is_positive()).count();
                let n = self.inequalities.iter().filter(|r| r[j].is_negative()).count();
                p * n + 1
            };
            let (k, _) = left.iter().enumerate().min_by_key(|(_, &j)| cost(j)).expect("nonempty");
            let j = left.remove(k);
            self.eliminate(j);
        }
    }

    /// After all variables are gone: every row is a constant condition.
    pub fn constants_feasible(&self) -> bool {
        let c = self.nvars;
        self.equalities.iter().all(|r| r[c].is_zero()) && self.inequalities.iter().all(|r| !r[c].is_negative())
    }
}

/// Inequalities and equations cutting out `cone(gens)` in `Q^dim`, by
/// eliminating the multipliers from `x = Σ μ_j g_j`, `μ ≥ 0`.
pub fn v_to_h(dim: usize, gens: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let m = gens.len();
    let nvars = dim + m;
    let mut sys = System::new(nvars);
    for i in 0..dim {
        let mut row = vec![Int::zero(); nvars + 1];
        row[i] = Int::from(1);
        for (j, g) in gens.iter().enumerate() {
            row[dim + j] = -g[i].clone();
        }
        sys.equalities.push(row);
    }
    for j in 0..m {
        let mut row = vec![Int::zero(); nvars + 1];
        row[dim + j] = Int::from(1);
        sys.inequalities.push(row);
    }
    let mus: Vec<usize> = (dim..nvars).collect();
    sys.eliminate_all(&mus);
    let cut = |r: &Vec<Int>| r[..dim].to_vec();
    let ineqs = sys.inequalities.iter().map(cut).filter(|r| !is_zero_vec(r)).collect();
    let eqs = sys.equalities.iter().map(cut).filter(|r| !is_zero_vec(r)).collect();
    (ineqs, eqs)
}

/// Whether `v` is a nonnegative combination of `gens`.
pub fn in_cone(gens: &[Vec<Int>], v: &[Int]) -> bool {
    let m = gens.len();
    let mut sys = System::new(m);
    for (i, vi) in v.iter().enumerate() {
        let mut row: Vec<Int> = gens.iter().map(|g| g[i].clone()).collect();
        row.push(-vi.clone());
        sys.equalities.push(row);
    }
    for j in 0..m {
        let mut row = vec![Int::zero(); m + 1];
        row[j] = Int::from(1);
        sys.inequalities.push(row);
    }
    let all: Vec<usize> = (0..m).collect();
    sys.eliminate_all(&all);
    sys.constants_feasible()
}
