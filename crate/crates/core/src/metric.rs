//! Finite metric spaces stored as dense distance matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Context;

/// A single failed metric axiom.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum MetricViolation {
    NonFinite { i: usize, j: usize },
    NegativeEntry { i: usize, j: usize, value: f64 },
    NonZeroDiagonal { i: usize, value: f64 },
    /// Two distinct points at distance zero.
    CoincidentPoints { i: usize, j: usize },
    Asymmetric { i: usize, j: usize },
    /// `d(i, j) > d(i, k) + d(k, j)`.
    TriangleViolation { i: usize, j: usize, k: usize },
}

impl fmt::Display for MetricViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonFinite { i, j } => write!(f, "d({i},{j}) is not finite"),
            Self::NegativeEntry { i, j, value } => write!(f, "d({i},{j}) = {value} < 0"),
            Self::NonZeroDiagonal { i, value } => write!(f, "d({i},{i}) = {value} != 0"),
            Self::CoincidentPoints { i, j } => write!(f, "d({i},{j}) = 0 for distinct points"),
            Self::Asymmetric { i, j } => write!(f, "d({i},{j}) != d({j},{i})"),
            Self::TriangleViolation { i, j, k } => write!(f, "d({i},{j}) > d({i},{k}) + d({k},{j})"),
        }
    }
}

/// A validated finite metric.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMetric {
    n: usize,
    dist: Vec<f64>,
}

impl FiniteMetric {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn d(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.dist.chunks(self.n.max(1)).take(self.n).map(<[f64]>::to_vec).collect()
    }

    pub fn diameter(&self) -> f64 {
        self.dist.iter().copied().fold(0.0, f64::max)
    }

    /// Distances among the given points, in the given order.
    pub fn submatrix(&self, points: &[usize]) -> Vec<Vec<f64>> {
        points
            .iter()
            .map(|&i| points.iter().map(|&j| self.d(i, j)).collect())
            .collect()
    }

    /// The induced metric on `points`; axioms are inherited from `self`.
    pub(crate) fn restrict(&self, points: &[usize]) -> FiniteMetric {
        FiniteMetric {
            n: points.len(),
            dist: points
                .iter()
                .flat_map(|&i| points.iter().map(move |&j| (i, j)))
                .map(|(i, j)| self.d(i, j))
                .collect(),
        }
    }
}

pub(crate) fn check_square<T>(rows: &[Vec<T>]) -> Result<usize> {
    let n = rows.len();
    for (row, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NonSquare {
                row,
                len: r.len(),
                expected: n,
            });
        }
    }
    Ok(n)
}

/// Checks every metric axiom and returns the validated metric, or the list of
/// violations (truncated at `ctx.violation_limit`).
///
/// Symmetry, positivity and the triangle inequality are checked up to
/// `ctx.epsilon`; the diagonal must be exactly zero.
pub fn validate_metric(rows: &[Vec<f64>], ctx: &Context) -> Result<FiniteMetric> {
    let n = check_square(rows)?;
    let eps = ctx.epsilon;
    let limit = ctx.violation_limit.max(1);
    let mut violations = Vec::new();
    let mut push = |v: MetricViolation| {
        if violations.len() < limit {
            violations.push(v);
        }
    };

    let mut finite = true;
    for i in 0..n {
        for j in 0..n {
            let v = rows[i][j];
            if !v.is_finite() {
                finite = false;
                push(MetricViolation::NonFinite { i, j });
            } else if i == j {
                if v != 0.0 {
                    push(MetricViolation::NonZeroDiagonal { i, value: v });
                }
            } else if v < 0.0 {
                push(MetricViolation::NegativeEntry { i, j, value: v });
            } else if v == 0.0 && i < j {
                push(MetricViolation::CoincidentPoints { i, j });
            }
            if i < j && (v - rows[j][i]).abs() > eps {
                push(MetricViolation::Asymmetric { i, j });
            }
        }
    }
    if finite {
        for i in 0..n {
            for j in (i + 1)..n {
                let dij = rows[i][j];
                for k in 0..n {
                    if k != i && k != j && dij > rows[i][k] + rows[k][j] + eps {
                        push(MetricViolation::TriangleViolation { i, j, k });
                    }
                }
            }
        }
    }

    if violations.is_empty() {
        Ok(FiniteMetric {
            n,
            dist: rows.iter().flatten().copied().collect(),
        })
    } else {
        Err(Error::InvalidMetric(violations))
    }
}
