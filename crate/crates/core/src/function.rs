//! Partial functions `f: S → ℝ^m` with a Lipschitz budget, and their validation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{MetricPoset, PointSet};
use crate::Context;

/// Values on a subset `S` of the points. Width `m = 1` is the scalar case; wider
/// values are vectors in the sup-norm, ordered coordinatewise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "crate::io::FunctionFile", into = "crate::io::FunctionFile")]
pub struct PartialFunction {
    domain: PointSet,
    /// `values[k]` belongs to `domain.as_slice()[k]`.
    values: Vec<Vec<f64>>,
    k: f64,
}

impl PartialFunction {
    /// Pairs up `domain` and `values` (in any order) and sorts them by point.
    pub fn new(domain: Vec<usize>, values: Vec<Vec<f64>>, k: f64) -> Result<Self> {
        if domain.is_empty() {
            return Err(Error::EmptyDomain);
        }
        if !(k >= 0.0 && k.is_finite()) {
            return Err(Error::NegativeK(k));
        }
        if values.len() != domain.len() {
            return Err(Error::InvalidParameter(format!(
                "{} values for {} domain points",
                values.len(),
                domain.len()
            )));
        }
        let width = values[0].len();
        if width == 0 {
            return Err(Error::WidthMismatch { expected: 1, got: 0 });
        }
        if let Some(v) = values.iter().find(|v| v.len() != width) {
            return Err(Error::WidthMismatch {
                expected: width,
                got: v.len(),
            });
        }
        let mut pairs: Vec<(usize, Vec<f64>)> = domain.into_iter().zip(values).collect();
        pairs.sort_by_key(|(p, _)| *p);
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateIndex(w[0].0));
        }
        if let Some((point, _)) = pairs.iter().find(|(_, v)| v.iter().any(|x| !x.is_finite())) {
            return Err(Error::NonFiniteValue { point: *point });
        }
        let (points, values): (Vec<usize>, Vec<Vec<f64>>) = pairs.into_iter().unzip();
        let n = points.last().map_or(0, |&p| p + 1);
        Ok(Self {
            domain: PointSet::new(n, points)?,
            values,
            k,
        })
    }

    pub fn scalar(domain: Vec<usize>, values: Vec<f64>, k: f64) -> Result<Self> {
        Self::new(domain, values.into_iter().map(|v| vec![v]).collect(), k)
    }

    /// The restriction of a total function (one row per point) to `domain`.
    pub fn from_total(total: &[Vec<f64>], domain: &PointSet, k: f64) -> Result<Self> {
        if let Some(index) = domain.iter().find(|&p| p >= total.len()) {
            return Err(Error::IndexOutOfRange { index, n: total.len() });
        }
        Self::new(
            domain.as_slice().to_vec(),
            domain.iter().map(|p| total[p].clone()).collect(),
            k,
        )
    }

    pub fn domain(&self) -> &PointSet {
        &self.domain
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn width(&self) -> usize {
        self.values[0].len()
    }

    pub fn get(&self, point: usize) -> Option<&[f64]> {
        self.domain
            .as_slice()
            .binary_search(&point)
            .ok()
            .map(|i| self.values[i].as_slice())
    }

    /// `(point, value)` pairs in increasing point order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &[f64])> + '_ {
        self.domain.iter().zip(self.values.iter().map(Vec::as_slice))
    }

    /// Same values with a different budget.
    pub fn with_k(&self, k: f64) -> Result<Self> {
        if !(k >= 0.0 && k.is_finite()) {
            return Err(Error::NegativeK(k));
        }
        Ok(Self { k, ..self.clone() })
    }

    /// Coordinate `t` as a scalar function.
    pub fn coordinate(&self, t: usize) -> Result<Self> {
        if t >= self.width() {
            return Err(Error::WidthMismatch {
                expected: self.width(),
                got: t + 1,
            });
        }
        Ok(Self {
            domain: self.domain.clone(),
            values: self.values.iter().map(|v| vec![v[t]]).collect(),
            k: self.k,
        })
    }

    /// Every value multiplied by `factor`, budget unchanged.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            domain: self.domain.clone(),
            values: self
                .values
                .iter()
                .map(|v| v.iter().map(|x| x * factor).collect())
                .collect(),
            k: self.k,
        }
    }

    /// True when every domain point carries the same value.
    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|v| v == &self.values[0])
    }
}

/// `upper ≽ lower` but `f(upper)(coord) < f(lower)(coord)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonotonicityViolation {
    pub upper: usize,
    pub lower: usize,
    pub coord: usize,
}

/// `|f(x)(coord) − f(y)(coord)| > K·d(x, y)`; `ratio` is the observed slope.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LipschitzViolation {
    pub x: usize,
    pub y: usize,
    pub coord: usize,
    pub ratio: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct FunctionReport {
    pub monotonicity: Vec<MonotonicityViolation>,
    pub lipschitz: Vec<LipschitzViolation>,
}

impl FunctionReport {
    pub fn is_valid(&self) -> bool {
        self.monotonicity.is_empty() && self.lipschitz.is_empty()
    }
}

impl std::fmt::Display for FunctionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} monotonicity and {} Lipschitz violations",
            self.monotonicity.len(),
            self.lipschitz.len()
        )?;
        if let Some(v) = self.monotonicity.first() {
            write!(f, "; {} >= {} but coordinate {} decreases", v.upper, v.lower, v.coord)?;
        }
        if let Some(v) = self.lipschitz.first() {
            write!(f, "; slope {} between {} and {} (coordinate {})", v.ratio, v.x, v.y, v.coord)?;
        }
        Ok(())
    }
}

/// Lists every pair on which `f` fails to be order-preserving or `K`-Lipschitz,
/// up to `ctx.epsilon`.
pub fn validate_input_function(poset: &MetricPoset, f: &PartialFunction, ctx: &Context) -> Result<FunctionReport> {
    if let Some(index) = f.domain().iter().find(|&p| p >= poset.len()) {
        return Err(Error::IndexOutOfRange { index, n: poset.len() });
    }
    Ok(check_values(poset, f.iter().collect::<Vec<_>>().as_slice(), f.k(), ctx))
}

/// Same checks for a total function given as one row per point.
pub fn validate_total(poset: &MetricPoset, values: &[Vec<f64>], k: f64, ctx: &Context) -> Result<FunctionReport> {
    if values.len() != poset.len() {
        return Err(Error::InvalidParameter(format!(
            "{} rows for {} points",
            values.len(),
            poset.len()
        )));
    }
    let rows: Vec<(usize, &[f64])> = values.iter().map(Vec::as_slice).enumerate().collect();
    Ok(check_values(poset, &rows, k, ctx))
}

fn check_values(poset: &MetricPoset, rows: &[(usize, &[f64])], k: f64, ctx: &Context) -> FunctionReport {
    let eps = ctx.epsilon;
    let limit = ctx.violation_limit;
    let mut report = FunctionReport::default();
    for (a, &(x, fx)) in rows.iter().enumerate() {
        for &(y, fy) in &rows[a + 1..] {
            let d = poset.d(x, y);
            for (t, (&u, &v)) in fx.iter().zip(fy).enumerate() {
                if poset.geq(x, y) && u < v - eps && report.monotonicity.len() < limit {
                    report.monotonicity.push(MonotonicityViolation { upper: x, lower: y, coord: t });
                }
                if poset.geq(y, x) && v < u - eps && report.monotonicity.len() < limit {
                    report.monotonicity.push(MonotonicityViolation { upper: y, lower: x, coord: t });
                }
                let gap = (u - v).abs();
                if gap > k * d + eps && report.lipschitz.len() < limit {
                    report.lipschitz.push(LipschitzViolation {
                        x,
                        y,
                        coord: t,
                        ratio: gap / d,
                    });
                }
            }
        }
    }
    report
}
