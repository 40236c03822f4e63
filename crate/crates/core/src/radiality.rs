//! Radial convexity and radiality of finite metric posets.
//!
//! * radially convex: `x ≻ y ≻ z` implies `d(x, z) ≥ max(d(x, y), d(y, z))`;
//! * (d1): `x ≽• y ≻ z` implies `d(x, z) ≥ d(x, y)`;
//! * (d2): `x ≻ y ≽• z` implies `d(x, z) ≥ d(y, z)`;
//! * radial: (d1) and (d2).
//!
//! Inequalities are checked with slack `ε`: a triple violates a condition only
//! when `lhs < rhs − ε`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::PartialFunction;
use crate::poset::{MetricPoset, PointSet};
use crate::Context;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ViolationKind {
    #[serde(rename = "RC")]
    RadialConvexity,
    D1,
    D2,
}

/// A triple `(x, y, z)` on which a condition fails: `lhs = d(x, z) < rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ViolationWitness {
    pub kind: ViolationKind,
    pub triple: [usize; 3],
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialityReport {
    pub radially_convex: bool,
    #[serde(rename = "d1")]
    pub d1_holds: bool,
    #[serde(rename = "d2")]
    pub d2_holds: bool,
    pub radial: bool,
    pub violations: Vec<ViolationWitness>,
}

impl RadialityReport {
    /// The first (d1) or (d2) violation, if any.
    pub fn first_radial_violation(&self) -> Option<&ViolationWitness> {
        self.violations
            .iter()
            .find(|w| matches!(w.kind, ViolationKind::D1 | ViolationKind::D2))
    }
}

/// Re-derives a witness for `(x, y, z)`, if the triple really fails `kind`.
pub fn witness(poset: &MetricPoset, kind: ViolationKind, [x, y, z]: [usize; 3], eps: f64) -> Option<ViolationWitness> {
    let n = poset.len();
    if x >= n || y >= n || z >= n {
        return None;
    }
    let lhs = poset.d(x, z);
    let (pattern, rhs) = match kind {
        ViolationKind::RadialConvexity => (
            poset.gt(x, y) && poset.gt(y, z),
            poset.d(x, y).max(poset.d(y, z)),
        ),
        ViolationKind::D1 => (poset.bullet(x, y) && poset.gt(y, z), poset.d(x, y)),
        ViolationKind::D2 => (poset.gt(x, y) && poset.bullet(y, z), poset.d(y, z)),
    };
    (pattern && lhs < rhs - eps).then_some(ViolationWitness {
        kind,
        triple: [x, y, z],
        lhs,
        rhs,
    })
}

/// Checks `x ≻ y ≻ z ⇒ d(x, z) ≥ max(d(x, y), d(y, z))` over all strict chains.
pub fn check_radial_convexity(poset: &MetricPoset, ctx: &Context) -> (bool, Vec<ViolationWitness>) {
    let n = poset.len();
    let mut holds = true;
    let mut violations = Vec::new();
    for x in 0..n {
        for y in (0..n).filter(|&y| poset.gt(x, y)) {
            for z in (0..n).filter(|&z| poset.gt(y, z)) {
                if let Some(w) = witness(poset, ViolationKind::RadialConvexity, [x, y, z], ctx.epsilon) {
                    holds = false;
                    if violations.len() < ctx.violation_limit {
                        violations.push(w);
                    }
                }
            }
        }
    }
    (holds, violations)
}

/// Exhaustive scan of all triples for radial convexity, (d1) and (d2).
pub fn check_radiality(poset: &MetricPoset, ctx: &Context) -> RadialityReport {
    let n = poset.len();
    let (radially_convex, mut violations) = check_radial_convexity(poset, ctx);
    let mut d1_holds = true;
    let mut d2_holds = true;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for kind in [ViolationKind::D1, ViolationKind::D2] {
                    if let Some(w) = witness(poset, kind, [x, y, z], ctx.epsilon) {
                        match kind {
                            ViolationKind::D1 => d1_holds = false,
                            _ => d2_holds = false,
                        }
                        if violations.len() < ctx.violation_limit {
                            violations.push(w);
                        }
                    }
                }
            }
        }
    }
    RadialityReport {
        radially_convex,
        d1_holds,
        d2_holds,
        radial: d1_holds && d2_holds,
        violations,
    }
}

pub fn is_radial(poset: &MetricPoset, ctx: &Context) -> bool {
    check_radiality(poset, &Context {
        violation_limit: 0,
        ..*ctx
    })
    .radial
}

/// An increasing 1-Lipschitz function on two points that has no increasing
/// 1-Lipschitz extension to the whole poset.
///
/// * (d1) failure `x ≽• y ≻ z`: `S = {x, y}`, `f(x) = d(x, y)`, `f(y) = 0`; any
///   1-Lipschitz extension has `F(z) ≥ f(x) − d(x, z) > 0 = F(y)`.
/// * (d2) failure `x ≻ y ≽• z`: `S = {y, z}`, `f(y) = d(y, z)`, `f(z) = 0`; any
///   1-Lipschitz extension has `F(x) ≤ d(x, z) < F(y)`.
///
/// A radial-convexity failure is also a (d1) or (d2) failure and is converted.
pub fn inextensible_instance(poset: &MetricPoset, w: &ViolationWitness, ctx: &Context) -> Result<(PointSet, PartialFunction)> {
    let eps = ctx.epsilon;
    let [x, y, z] = w.triple;
    let kind = match w.kind {
        ViolationKind::RadialConvexity => {
            if witness(poset, ViolationKind::D1, w.triple, eps).is_some() {
                ViolationKind::D1
            } else {
                ViolationKind::D2
            }
        }
        kind => kind,
    };
    if witness(poset, kind, w.triple, eps).is_none() {
        return Err(Error::NotAViolation);
    }
    let (top, bottom) = match kind {
        ViolationKind::D1 => (x, y),
        _ => (y, z),
    };
    let f = PartialFunction::scalar(vec![top, bottom], vec![poset.d(top, bottom), 0.0], 1.0)?;
    Ok((f.domain().clone(), f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_solve;

    fn ctx() -> Context {
        Context::default()
    }

    fn four_point(a: f64, b: f64) -> MetricPoset {
        let dist = vec![
            vec![0.0, a, a, 1.0],
            vec![a, 0.0, b, 1.0 - a],
            vec![a, b, 0.0, 1.0 - a],
            vec![1.0, 1.0 - a, 1.0 - a, 0.0],
        ];
        MetricPoset::from_parts(&dist, &[(0, 1), (0, 2), (1, 3), (2, 3)], &ctx()).unwrap()
    }

    /// Points of the plane under the coordinatewise order.
    fn plane(points: &[(f64, f64)]) -> MetricPoset {
        let dist: Vec<Vec<f64>> = points
            .iter()
            .map(|p| points.iter().map(|q| (p.0 - q.0).hypot(p.1 - q.1)).collect())
            .collect();
        let geq: Vec<Vec<bool>> = points
            .iter()
            .map(|p| points.iter().map(|q| p.0 >= q.0 && p.1 >= q.1).collect())
            .collect();
        MetricPoset::from_matrices(&dist, &geq, false, &ctx()).unwrap()
    }

    #[test]
    fn equality_order_is_radial() {
        let dist = vec![vec![0.0, 1.0, 5.0], vec![1.0, 0.0, 4.5], vec![5.0, 4.5, 0.0]];
        let p = MetricPoset::from_parts(&dist, &[], &ctx()).unwrap();
        let r = check_radiality(&p, &ctx());
        assert!(r.radially_convex && r.radial);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn vertical_segment_is_radially_convex() {
        let p = plane(&[(0.0, 0.0), (0.0, 1.0), (0.0, 2.0)]);
        assert!(check_radial_convexity(&p, &ctx()).0);
    }

    #[test]
    fn four_point_regimes() {
        let r = check_radiality(&four_point(0.6, 0.3), &ctx());
        assert!(r.radial && r.radially_convex);

        let r = check_radiality(&four_point(0.7, 0.4), &ctx());
        assert!(r.radially_convex);
        assert!(r.d2_holds);
        assert!(!r.d1_holds);
        assert!(!r.radial);

        let r = check_radiality(&four_point(0.3, 0.4), &ctx());
        assert!(r.d1_holds && !r.d2_holds);
    }

    #[test]
    fn plane_witness() {
        let p = plane(&[(1.0, -1.0), (0.0, 0.0), (0.0, -1.0)]);
        let r = check_radiality(&p, &ctx());
        assert!(r.radially_convex);
        assert!(!r.d1_holds);
        let w = r.first_radial_violation().unwrap();
        assert_eq!(w.kind, ViolationKind::D1);
        assert_eq!(w.triple, [0, 1, 2]);
        assert_eq!(w.lhs, 1.0);
        assert_eq!(w.rhs, 2f64.sqrt());
    }

    #[test]
    fn plane_witness_is_inextensible() {
        let p = plane(&[(1.0, -1.0), (0.0, 0.0), (0.0, -1.0)]);
        let r = check_radiality(&p, &ctx());
        let (s, f) = inextensible_instance(&p, r.first_radial_violation().unwrap(), &ctx()).unwrap();
        assert_eq!(s.as_slice(), &[0, 1]);
        assert_eq!(f.get(0), Some(&[2f64.sqrt()][..]));
        assert_eq!(f.get(1), Some(&[0.0][..]));
        assert!(!oracle_solve(&p, &f, &ctx()).unwrap().feasible);
    }

    #[test]
    fn four_point_d1_failure_is_inextensible() {
        let p = four_point(0.7, 0.4);
        let r = check_radiality(&p, &ctx());
        for w in r.violations.iter().filter(|w| w.kind == ViolationKind::D1) {
            let (_, f) = inextensible_instance(&p, w, &ctx()).unwrap();
            assert!(crate::function::validate_input_function(&p, &f, &ctx()).unwrap().is_valid());
            assert!(!oracle_solve(&p, &f, &ctx()).unwrap().feasible);
        }
    }

    #[test]
    fn radial_poset_has_no_witness() {
        let p = four_point(0.6, 0.3);
        let fake = ViolationWitness {
            kind: ViolationKind::D1,
            triple: [2, 1, 3],
            lhs: 0.0,
            rhs: 1.0,
        };
        assert_eq!(inextensible_instance(&p, &fake, &ctx()), Err(Error::NotAViolation));
    }

    #[test]
    fn violation_list_is_truncated_but_verdict_is_not() {
        let p = four_point(0.7, 0.4);
        let limited = Context {
            violation_limit: 0,
            ..ctx()
        };
        let r = check_radiality(&p, &limited);
        assert!(r.violations.is_empty());
        assert!(!r.d1_holds);
        assert!(!is_radial(&p, &ctx()));
    }

    #[test]
    fn report_json_shape() {
        let p = plane(&[(1.0, -1.0), (0.0, 0.0), (0.0, -1.0)]);
        let v = serde_json::to_value(check_radiality(&p, &ctx())).unwrap();
        assert_eq!(v["radial"], false);
        assert_eq!(v["d1"], false);
        assert_eq!(v["violations"][0]["kind"], "D1");
        assert_eq!(v["violations"][0]["triple"], serde_json::json!([0, 1, 2]));
    }
}
