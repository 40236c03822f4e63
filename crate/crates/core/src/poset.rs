//! Metric posets: a finite metric and a partial order on the same points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{validate_metric, FiniteMetric};
use crate::order::{validate_order, OrderRelation};
use crate::Context;

/// A sorted, duplicate-free set of point indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointSet(Vec<usize>);

impl PointSet {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Sorts and dedups `points`, checking every index against `n`.
    pub fn new(n: usize, points: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = points.into_iter().collect();
        if let Some(&index) = members.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self(members))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, point: usize) -> bool {
        self.0.binary_search(&point).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.iter().all(|p| other.contains(p))
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        PointSet(self.iter().filter(|&p| other.contains(p)).collect())
    }

    /// Points of `0..n` not in the set.
    pub fn complement(&self, n: usize) -> PointSet {
        PointSet((0..n).filter(|&p| !self.contains(p)).collect())
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Down,
    Up,
}

/// A partially ordered metric space on the points `0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricPoset {
    metric: FiniteMetric,
    order: OrderRelation,
    labels: Option<Vec<String>>,
}

impl MetricPoset {
    pub fn new(metric: FiniteMetric, order: OrderRelation) -> Result<Self> {
        if metric.len() != order.len() {
            return Err(Error::SizeMismatch {
                metric: metric.len(),
                order: order.len(),
            });
        }
        Ok(Self {
            metric,
            order,
            labels: None,
        })
    }

    /// Validates a distance matrix and a list of `i ≽ j` assertions, closing the latter.
    pub fn from_parts(dist: &[Vec<f64>], pairs: &[(usize, usize)], ctx: &Context) -> Result<Self> {
        let metric = validate_metric(dist, ctx)?;
        let order = OrderRelation::from_pairs(metric.len(), pairs)?;
        Self::new(metric, order)
    }

    /// Validates a distance matrix and a full `geq` matrix.
    pub fn from_matrices(dist: &[Vec<f64>], geq: &[Vec<bool>], close: bool, ctx: &Context) -> Result<Self> {
        let metric = validate_metric(dist, ctx)?;
        let order = validate_order(geq, close)?;
        Self::new(metric, order)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} points",
                labels.len(),
                self.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.metric.len()
    }

    pub fn is_empty(&self) -> bool {
        self.metric.is_empty()
    }

    pub fn metric(&self) -> &FiniteMetric {
        &self.metric
    }

    pub fn order(&self) -> &OrderRelation {
        &self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `i`, falling back to its index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    #[inline]
    pub fn d(&self, i: usize, j: usize) -> f64 {
        self.metric.d(i, j)
    }

    #[inline]
    pub fn geq(&self, i: usize, j: usize) -> bool {
        self.order.geq(i, j)
    }

    #[inline]
    pub fn gt(&self, i: usize, j: usize) -> bool {
        self.order.gt(i, j)
    }

    #[inline]
    pub fn bullet(&self, i: usize, j: usize) -> bool {
        self.order.bullet(i, j)
    }

    pub fn diameter(&self) -> f64 {
        self.metric.diameter()
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, n: self.len() })
        }
    }

    /// The principal down-set `{z : x ≽ z}` and up-set `{z : z ≽ x}`.
    pub fn principal_sets(&self, x: usize) -> Result<(PointSet, PointSet)> {
        self.check_index(x)?;
        let n = self.len();
        let down = PointSet((0..n).filter(|&z| self.geq(x, z)).collect());
        let up = PointSet((0..n).filter(|&z| self.geq(z, x)).collect());
        Ok((down, up))
    }

    /// Union of the principal down-sets (or up-sets) over `set`.
    pub fn monotone_closure(&self, set: &PointSet, direction: Direction) -> PointSet {
        let n = self.len();
        PointSet(
            (0..n)
                .filter(|&z| {
                    set.iter().any(|s| match direction {
                        Direction::Down => self.geq(s, z),
                        Direction::Up => self.geq(z, s),
                    })
                })
                .collect(),
        )
    }

    /// The sub-poset on `set` with induced metric and order; point `k` of the
    /// result is `set.as_slice()[k]` of `self`.
    pub fn restrict(&self, set: &PointSet) -> Result<MetricPoset> {
        if set.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&last) = set.as_slice().last() {
            self.check_index(last)?;
        }
        let points = set.as_slice();
        let metric = self.metric.restrict(points);
        let order = self.order.restrict(points);
        let labels = self
            .labels
            .as_ref()
            .map(|l| points.iter().map(|&i| l[i].clone()).collect());
        Ok(MetricPoset {
            metric,
            order,
            labels,
        })
    }

    /// Same order, new distances.
    pub(crate) fn with_metric(&self, metric: FiniteMetric) -> Result<MetricPoset> {
        let mut out = MetricPoset::new(metric, self.order.clone())?;
        out.labels = self.labels.clone();
        Ok(out)
    }
}
