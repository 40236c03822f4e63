//! Exact extremal extensions from the difference-constraint formulation.
//!
//! An order-preserving `K`-Lipschitz `F` is precisely a solution of
//!
//! ```text
//! F(v) − F(u) ≤ K·d(u, v)   for all u ≠ v
//! F(v) − F(u) ≤ 0           for all u ≽ v
//! ```
//!
//! Reading `F(v) − F(u) ≤ c` as an arc `u → v` of cost `c`, every arc cost is
//! nonnegative, so shortest paths exist and
//!
//! ```text
//! Fmax(x) = min_{s ∈ S} f(s) + sp(s → x)
//! Fmin(x) = max_{s ∈ S} f(s) − sp(x → s)
//! ```
//!
//! are the pointwise largest and smallest solutions agreeing with `f` on `S`
//! whenever any solution exists. This module shares no code with
//! [`crate::extension`] and serves as its ground truth.

use crate::error::{Error, Result};
use crate::function::PartialFunction;
use crate::poset::MetricPoset;
use crate::Context;

/// All-pairs shortest paths of the constraint graph at budget `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintGraph {
    n: usize,
    sp: Vec<f64>,
}

impl ConstraintGraph {
    pub fn new(poset: &MetricPoset, k: f64) -> Self {
        let n = poset.len();
        let mut sp = vec![0.0; n * n];
        for u in 0..n {
            for v in 0..n {
                sp[u * n + v] = if poset.geq(u, v) { 0.0 } else { k * poset.d(u, v) };
            }
        }
        // Floyd–Warshall; costs are nonnegative so no negative cycles.
        for w in 0..n {
            for u in 0..n {
                let uw = sp[u * n + w];
                for v in 0..n {
                    let through = uw + sp[w * n + v];
                    if through < sp[u * n + v] {
                        sp[u * n + v] = through;
                    }
                }
            }
        }
        Self { n, sp }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Tightest implied bound on `F(v) − F(u)`.
    #[inline]
    pub fn shortest(&self, u: usize, v: usize) -> f64 {
        self.sp[u * self.n + v]
    }

    /// Largest value at `x` compatible with the fixed `(point, value)` pairs.
    pub fn upper(&self, x: usize, fixed: impl IntoIterator<Item = (usize, f64)>) -> f64 {
        fixed
            .into_iter()
            .map(|(s, v)| v + self.shortest(s, x))
            .fold(f64::INFINITY, f64::min)
    }

    /// Smallest value at `x` compatible with the fixed `(point, value)` pairs.
    pub fn lower(&self, x: usize, fixed: impl IntoIterator<Item = (usize, f64)>) -> f64 {
        fixed
            .into_iter()
            .map(|(s, v)| v - self.shortest(x, s))
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleSolution {
    pub feasible: bool,
    /// One row per point, one column per coordinate.
    pub fmin: Vec<Vec<f64>>,
    pub fmax: Vec<Vec<f64>>,
    /// Coordinates whose constraint system has no solution.
    pub infeasible_coords: Vec<usize>,
}

/// Solves the difference-constraint system of `f` on `poset`, coordinate by coordinate.
pub fn oracle_solve(poset: &MetricPoset, f: &PartialFunction, ctx: &Context) -> Result<OracleSolution> {
    if let Some(index) = f.domain().iter().find(|&p| p >= poset.len()) {
        return Err(Error::IndexOutOfRange { index, n: poset.len() });
    }
    let graph = ConstraintGraph::new(poset, f.k());
    Ok(solve_with(&graph, f, ctx))
}

pub(crate) fn solve_with(graph: &ConstraintGraph, f: &PartialFunction, ctx: &Context) -> OracleSolution {
    let n = graph.len();
    let m = f.width();
    let eps = ctx.epsilon;
    let mut fmin = vec![vec![0.0; m]; n];
    let mut fmax = vec![vec![0.0; m]; n];
    let mut infeasible_coords = Vec::new();
    for t in 0..m {
        let fixed = || f.iter().map(move |(s, v)| (s, v[t]));
        for x in 0..n {
            fmin[x][t] = graph.lower(x, fixed());
            fmax[x][t] = graph.upper(x, fixed());
        }
        let respects_fixed = fixed().all(|(s, v)| fmax[s][t] >= v - eps && fmin[s][t] <= v + eps);
        let ordered = (0..n).all(|x| fmin[x][t] <= fmax[x][t] + eps);
        if !(respects_fixed && ordered) {
            infeasible_coords.push(t);
        }
    }
    OracleSolution {
        feasible: infeasible_coords.is_empty(),
        fmin,
        fmax,
        infeasible_coords,
    }
}
