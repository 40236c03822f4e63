//! Order-preserving `K`-Lipschitz extension, one point at a time.
//!
//! For a point `x` outside the current domain `A` and a coordinate `t`, the values
//! compatible with monotonicity form `[a, b]` with
//!
//! ```text
//! a = sup { F(z)(t) : z ∈ A, x ≽ z }      (−∞ if empty)
//! b = inf { F(y)(t) : y ∈ A, y ≽ x }      (+∞ if empty)
//! ```
//!
//! and the values compatible with the budget form `[α, β]` with
//!
//! ```text
//! α = sup { F(z)(t) − K·d(x, z) : z ∈ A }
//! β = inf { F(y)(t) + K·d(x, y) : y ∈ A }
//! ```
//!
//! On a radial poset `α ≤ b` and `a ≤ β`, so `[max(a, α), min(b, β)]` is never
//! empty. Picking the lower end at every step yields the smallest extension,
//! the upper end the largest.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{validate_input_function, PartialFunction};
use crate::poset::MetricPoset;
use crate::Context;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Selector {
    /// Lower end `max(a, α)`.
    Min,
    /// Upper end `min(b, β)`.
    Max,
    /// Midpoint of the interval.
    Mid,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointOrder {
    #[default]
    Ascending,
    Descending,
    /// A permutation of all points; points of the domain are skipped.
    Custom(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionPolicy {
    pub selector: Selector,
    pub point_order: PointOrder,
}

impl ExtensionPolicy {
    pub fn new(selector: Selector) -> Self {
        Self {
            selector,
            point_order: PointOrder::Ascending,
        }
    }

    pub fn with_order(mut self, point_order: PointOrder) -> Self {
        self.point_order = point_order;
        self
    }
}

impl Default for ExtensionPolicy {
    fn default() -> Self {
        Self::new(Selector::Min)
    }
}

/// The four bounds at one point and coordinate. Infinite bounds are ±∞.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdmissibleInterval {
    pub point: usize,
    pub coord: usize,
    #[serde(with = "crate::io::extended_real")]
    pub a: f64,
    #[serde(with = "crate::io::extended_real")]
    pub b: f64,
    #[serde(with = "crate::io::extended_real")]
    pub alpha: f64,
    #[serde(with = "crate::io::extended_real")]
    pub beta: f64,
}

impl AdmissibleInterval {
    pub fn lo(&self) -> f64 {
        self.a.max(self.alpha)
    }

    pub fn hi(&self) -> f64 {
        self.b.min(self.beta)
    }

    pub fn is_empty(&self, eps: f64) -> bool {
        self.lo() > self.hi() + eps
    }

    fn unbounded(point: usize, coord: usize) -> Self {
        Self {
            point,
            coord,
            a: f64::NEG_INFINITY,
            b: f64::INFINITY,
            alpha: f64::NEG_INFINITY,
            beta: f64::INFINITY,
        }
    }

    fn absorb(&mut self, poset: &MetricPoset, k: f64, z: usize, value: f64) {
        let x = self.point;
        if poset.geq(x, z) {
            self.a = self.a.max(value);
        }
        if poset.geq(z, x) {
            self.b = self.b.min(value);
        }
        let reach = k * poset.d(x, z);
        self.alpha = self.alpha.max(value - reach);
        self.beta = self.beta.min(value + reach);
    }
}

/// Bounds on the value of coordinate `t` at a point `x` outside the domain of `f`.
pub fn admissible_interval(poset: &MetricPoset, f: &PartialFunction, x: usize, t: usize) -> Result<AdmissibleInterval> {
    if x >= poset.len() {
        return Err(Error::IndexOutOfRange { index: x, n: poset.len() });
    }
    if f.domain().contains(x) {
        return Err(Error::PointInDomain(x));
    }
    if t >= f.width() {
        return Err(Error::WidthMismatch {
            expected: f.width(),
            got: t + 1,
        });
    }
    let mut interval = AdmissibleInterval::unbounded(x, t);
    for (z, v) in f.iter() {
        interval.absorb(poset, f.k(), z, v[t]);
    }
    Ok(interval)
}

/// Midpoint of `[lo, hi]`, kept finite when an end is infinite.
pub fn midpoint(lo: f64, hi: f64) -> f64 {
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) => lo + (hi - lo) / 2.0,
        (false, true) => hi - 1.0,
        (true, false) => lo + 1.0,
        (false, false) => 0.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtensionOutcome {
    pub status: Status,
    /// One row per point of the poset. Rows of domain points are copies of `f`.
    pub values: Vec<Vec<f64>>,
    /// Intervals found empty, in visiting order.
    pub infeasible: Vec<AdmissibleInterval>,
    pub policy: ExtensionPolicy,
    /// Points outside the domain, in the order they were assigned.
    pub visit_order: Vec<usize>,
    #[serde(rename = "K")]
    pub k: f64,
}

impl ExtensionOutcome {
    pub fn is_feasible(&self) -> bool {
        self.status == Status::Feasible
    }

    /// Scalar view; panics unless the width is 1.
    pub fn scalar_values(&self) -> Vec<f64> {
        self.values
            .iter()
            .map(|v| {
                assert_eq!(v.len(), 1, "scalar_values on a vector outcome");
                v[0]
            })
            .collect()
    }
}

fn visit_order(policy: &PointOrder, n: usize) -> Result<Vec<usize>> {
    match policy {
        PointOrder::Ascending => Ok((0..n).collect()),
        PointOrder::Descending => Ok((0..n).rev().collect()),
        PointOrder::Custom(perm) => {
            let mut seen = vec![false; n];
            if perm.len() != n {
                return Err(Error::InvalidPermutation(n));
            }
            for &p in perm {
                if p >= n || seen[p] {
                    return Err(Error::InvalidPermutation(n));
                }
                seen[p] = true;
            }
            Ok(perm.clone())
        }
    }
}

/// Extends `f` to every point of `poset`.
///
/// Points outside the domain are visited in `policy.point_order`; each assigned
/// point joins the working domain before the next one is visited. An empty
/// interval does not stop the run: it is recorded, the midpoint of the
/// reversed interval is used, and the outcome is marked infeasible.
pub fn extend(poset: &MetricPoset, f: &PartialFunction, policy: &ExtensionPolicy, ctx: &Context) -> Result<ExtensionOutcome> {
    let report = validate_input_function(poset, f, ctx)?;
    if !report.is_valid() {
        return Err(Error::InvalidFunction(Box::new(report)));
    }
    let n = poset.len();
    let m = f.width();
    let k = f.k();
    let eps = ctx.epsilon;

    let mut values = vec![Vec::new(); n];
    let mut assigned: Vec<usize> = Vec::with_capacity(n);
    for (p, v) in f.iter() {
        values[p] = v.to_vec();
        assigned.push(p);
    }

    let order: Vec<usize> = visit_order(&policy.point_order, n)?
        .into_iter()
        .filter(|&p| !f.domain().contains(p))
        .collect();
    let mut infeasible = Vec::new();

    for &x in &order {
        let mut intervals: Vec<AdmissibleInterval> = (0..m).map(|t| AdmissibleInterval::unbounded(x, t)).collect();
        for &z in &assigned {
            for (t, interval) in intervals.iter_mut().enumerate() {
                interval.absorb(poset, k, z, values[z][t]);
            }
        }
        let mut row = Vec::with_capacity(m);
        for interval in intervals {
            let (lo, hi) = (interval.lo(), interval.hi());
            let theta = if interval.is_empty(eps) {
                infeasible.push(interval);
                midpoint(hi, lo)
            } else {
                let theta = match policy.selector {
                    Selector::Min => lo,
                    Selector::Max => hi,
                    Selector::Mid => midpoint(lo, hi),
                };
                // Rounding may leave lo a hair above hi; order constraints win.
                theta.min(interval.b).max(interval.a)
            };
            row.push(theta);
        }
        values[x] = row;
        assigned.push(x);
    }

    Ok(ExtensionOutcome {
        status: if infeasible.is_empty() {
            Status::Feasible
        } else {
            Status::Infeasible
        },
        values,
        infeasible,
        policy: policy.clone(),
        visit_order: order,
        k,
    })
}

/// Pointwise `max(min(F, hi), lo)` on every coordinate.
pub fn clamp_to_range(values: &[Vec<f64>], lo: f64, hi: f64) -> Result<Vec<Vec<f64>>> {
    if lo.is_nan() || hi.is_nan() || lo > hi {
        return Err(Error::InvertedRange { lo, hi });
    }
    Ok(values
        .iter()
        .map(|row| row.iter().map(|&v| v.min(hi).max(lo)).collect())
        .collect())
}

/// Per-coordinate `(min, max)` of `f` over its domain.
pub fn value_range(f: &PartialFunction) -> Vec<(f64, f64)> {
    (0..f.width())
        .map(|t| {
            f.values().iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v[t]), hi.max(v[t]))
            })
        })
        .collect()
}

/// Clamps each coordinate of an extension of `f` into the range `f` takes on its domain.
pub fn clamp_to_data_range(values: &[Vec<f64>], f: &PartialFunction) -> Result<Vec<Vec<f64>>> {
    let ranges = value_range(f);
    values
        .iter()
        .map(|row| {
            if row.len() != ranges.len() {
                return Err(Error::WidthMismatch {
                    expected: ranges.len(),
                    got: row.len(),
                });
            }
            Ok(row
                .iter()
                .zip(&ranges)
                .map(|(&v, &(lo, hi))| v.min(hi).max(lo))
                .collect())
        })
        .collect()
}
