//! Partial orders on `0..n`, stored as dense `geq` matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::check_square;
use crate::DEFAULT_VIOLATION_LIMIT;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum OrderViolation {
    NotReflexive { i: usize },
    NotAntisymmetric { i: usize, j: usize },
    /// `i ≽ j` and `j ≽ k` but not `i ≽ k`.
    NotTransitive { i: usize, j: usize, k: usize },
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotReflexive { i } => write!(f, "{i} is not related to itself"),
            Self::NotAntisymmetric { i, j } => write!(f, "{i} and {j} are mutually related"),
            Self::NotTransitive { i, j, k } => {
                write!(f, "{i} >= {j} >= {k} but not {i} >= {k}")
            }
        }
    }
}

/// A validated partial order. `geq(i, j)` reads "point i is above or equal to point j".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    n: usize,
    geq: Vec<bool>,
}

impl OrderRelation {
    /// The equality order on `n` points.
    pub fn equality(n: usize) -> Self {
        let mut geq = vec![false; n * n];
        for i in 0..n {
            geq[i * n + i] = true;
        }
        Self { n, geq }
    }

    /// Closes the assertions `i ≽ j` reflexively and transitively, then checks antisymmetry.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rows = vec![vec![false; n]; n];
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            rows[i][j] = true;
        }
        validate_order(&rows, true)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn geq(&self, i: usize, j: usize) -> bool {
        self.geq[i * self.n + j]
    }

    /// Strict part: `i ≻ j`.
    #[inline]
    pub fn gt(&self, i: usize, j: usize) -> bool {
        i != j && self.geq(i, j)
    }

    /// `i ≽• j`, i.e. `j ≽ i` fails.
    #[inline]
    pub fn bullet(&self, i: usize, j: usize) -> bool {
        !self.geq(j, i)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.geq(i, j) || self.geq(j, i)
    }

    pub fn is_total(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.comparable(i, j)))
    }

    pub fn rows(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.geq(i, j)).collect())
            .collect()
    }

    /// Covering pairs `(i, j)`: `i ≻ j` with nothing strictly between.
    pub fn hasse_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.gt(i, j) && !(0..n).any(|k| k != i && k != j && self.gt(i, k) && self.gt(k, j)) {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    /// The induced order on `points`, reindexed to `0..points.len()`.
    pub fn restrict(&self, points: &[usize]) -> Self {
        let m = points.len();
        let mut geq = vec![false; m * m];
        for (a, &i) in points.iter().enumerate() {
            for (b, &j) in points.iter().enumerate() {
                geq[a * m + b] = self.geq(i, j);
            }
        }
        Self { n: m, geq }
    }
}

/// The `≽•` relation as a matrix: `result[i][j] = !geq[j][i]`.
pub fn bullet_relation(order: &OrderRelation) -> Vec<Vec<bool>> {
    let n = order.len();
    (0..n)
        .map(|i| (0..n).map(|j| order.bullet(i, j)).collect())
        .collect()
}

/// Validates a `geq` matrix as a partial order. With `close`, the
/// reflexive-transitive closure is taken first and only antisymmetry can fail.
pub fn validate_order(rows: &[Vec<bool>], close: bool) -> Result<OrderRelation> {
    let n = check_square(rows)?;
    let mut geq: Vec<bool> = rows.iter().flatten().copied().collect();
    if close {
        for i in 0..n {
            geq[i * n + i] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if i != k && geq[i * n + k] {
                    for j in 0..n {
                        if geq[k * n + j] {
                            geq[i * n + j] = true;
                        }
                    }
                }
            }
        }
    }

    let mut violations = Vec::new();
    for i in 0..n {
        if !geq[i * n + i] {
            violations.push(OrderViolation::NotReflexive { i });
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if geq[i * n + j] && geq[j * n + i] {
                violations.push(OrderViolation::NotAntisymmetric { i, j });
            }
        }
    }
    'outer: for i in 0..n {
        for j in 0..n {
            if i == j || !geq[i * n + j] {
                continue;
            }
            for k in 0..n {
                if geq[j * n + k] && !geq[i * n + k] {
                    violations.push(OrderViolation::NotTransitive { i, j, k });
                    if violations.len() >= DEFAULT_VIOLATION_LIMIT {
                        break 'outer;
                    }
                }
            }
        }
    }
    violations.truncate(DEFAULT_VIOLATION_LIMIT);

    if violations.is_empty() {
        Ok(OrderRelation { n, geq })
    } else {
        Err(Error::InvalidOrder(violations))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: bool = true;
    const F: bool = false;

    fn violations(rows: &[Vec<bool>], close: bool) -> Vec<OrderViolation> {
        match validate_order(rows, close) {
            Err(Error::InvalidOrder(v)) => v,
            other => panic!("expected order violations, got {other:?}"),
        }
    }

    #[test]
    fn identity_is_the_equality_order() {
        let rows = vec![vec![T, F, F], vec![F, T, F], vec![F, F, T]];
        let order = validate_order(&rows, false).unwrap();
        assert_eq!(order, OrderRelation::equality(3));
        assert!(!order.is_total());
    }

    #[test]
    fn two_chain() {
        let order = validate_order(&[vec![T, T], vec![F, T]], false).unwrap();
        assert!(order.gt(0, 1));
        assert!(!order.gt(1, 0));
        assert!(order.is_total());
    }

    #[test]
    fn mutual_relation_is_not_antisymmetric() {
        assert_eq!(
            violations(&[vec![T, T], vec![T, T]], false),
            vec![OrderViolation::NotAntisymmetric { i: 0, j: 1 }]
        );
        // Closure cannot repair a cycle.
        assert_eq!(
            violations(&[vec![F, T], vec![T, F]], true),
            vec![OrderViolation::NotAntisymmetric { i: 0, j: 1 }]
        );
    }

    #[test]
    fn missing_reflexivity_and_transitivity() {
        let rows = vec![vec![T, T, F], vec![F, F, T], vec![F, F, T]];
        let v = violations(&rows, false);
        assert!(v.contains(&OrderViolation::NotReflexive { i: 1 }));
        assert!(v.contains(&OrderViolation::NotTransitive { i: 0, j: 1, k: 2 }));
        // The same relation closes to a valid chain.
        let closed = validate_order(&rows, true).unwrap();
        assert!(closed.geq(0, 2));
    }

    #[test]
    fn hasse_pairs_round_trip() {
        // Diamond: 0 > 1 > 3, 0 > 2 > 3.
        let order = OrderRelation::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(order.geq(0, 3));
        assert!(!order.comparable(1, 2));
        assert_eq!(order.hasse_pairs(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(OrderRelation::from_pairs(4, &order.hasse_pairs()).unwrap(), order);
    }

    #[test]
    fn bullet_of_equality_and_chain() {
        let eq = bullet_relation(&OrderRelation::equality(2));
        assert_eq!(eq, vec![vec![F, T], vec![T, F]]);
        let chain = OrderRelation::from_pairs(2, &[(0, 1)]).unwrap();
        let b = bullet_relation(&chain);
        assert!(b[0][1]);
        assert!(!b[1][0]);
    }

    #[test]
    fn bullet_on_incomparable_pair_of_diamond() {
        let order = OrderRelation::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let b = bullet_relation(&order);
        assert!(b[1][2] && b[2][1]);
        let count = b.iter().flatten().filter(|&&x| x).count();
        assert_eq!(count, 7);
    }

    #[test]
    fn out_of_range_pair() {
        assert_eq!(
            OrderRelation::from_pairs(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, n: 2 })
        );
    }
}
