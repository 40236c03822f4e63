//! Families of increasing 1-Lipschitz functions that represent a radial order,
//! and strictly increasing Lipschitz maps built from them.
//!
//! For every pair with `x ≽• y`, the two-point function `x ↦ d(x, y)`, `y ↦ 0`
//! is increasing and 1-Lipschitz, so on a radial poset it extends to some
//! `F_{x,y}`. The family `{F_{x,y}}` represents the order: `x ≽ y` holds iff
//! every member satisfies `F(x) ≥ F(y)`, because `F_{y,x}` separates any pair
//! with `x ≽ y` failing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::{extend, ExtensionPolicy, Selector};
use crate::function::PartialFunction;
use crate::poset::MetricPoset;
use crate::radiality::is_radial;
use crate::Context;

/// Where a family member came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTag", into = "RawTag")]
pub enum MemberTag {
    /// Extension of the two-point function on `(x, y)` with `x ≽• y`.
    Pair(usize, usize),
    Derived,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawTag {
    Pair([usize; 2]),
    Word(String),
}

impl TryFrom<RawTag> for MemberTag {
    type Error = String;

    fn try_from(raw: RawTag) -> std::result::Result<Self, String> {
        match raw {
            RawTag::Pair([x, y]) => Ok(MemberTag::Pair(x, y)),
            RawTag::Word(w) if w == "derived" => Ok(MemberTag::Derived),
            RawTag::Word(w) => Err(format!("unknown member tag {w:?}")),
        }
    }
}

impl From<MemberTag> for RawTag {
    fn from(tag: MemberTag) -> Self {
        match tag {
            MemberTag::Pair(x, y) => RawTag::Pair([x, y]),
            MemberTag::Derived => RawTag::Word("derived".into()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct FunctionFamily {
    /// Each member is a total function, one value per point.
    pub members: Vec<Vec<f64>>,
    pub tags: Vec<MemberTag>,
}

impl FunctionFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// One member per pair `x ≽• y`, in lexicographic pair order, each the smallest
/// increasing 1-Lipschitz extension of `x ↦ d(x, y)`, `y ↦ 0`.
pub fn representing_family(poset: &MetricPoset, ctx: &Context) -> Result<FunctionFamily> {
    if !is_radial(poset, ctx) {
        return Err(Error::NotRadial);
    }
    let n = poset.len();
    let policy = ExtensionPolicy::new(Selector::Min);
    let mut family = FunctionFamily::default();
    for x in 0..n {
        for y in (0..n).filter(|&y| poset.bullet(x, y)) {
            let f = PartialFunction::scalar(vec![x, y], vec![poset.d(x, y), 0.0], 1.0)?;
            let out = extend(poset, &f, &policy, ctx)?;
            if !out.is_feasible() {
                return Err(Error::NotRadial);
            }
            family.members.push(out.scalar_values());
            family.tags.push(MemberTag::Pair(x, y));
        }
    }
    Ok(family)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "failure", rename_all = "snake_case")]
pub enum RepresentationFailure {
    /// `x ≽ y`, yet `member` decreases from `x` to `y`.
    NotIncreasing { x: usize, y: usize, member: usize },
    /// `x ≽ y` fails, yet no member has `F(x) < F(y)`.
    Unseparated { x: usize, y: usize },
    /// `member` does not have one value per point.
    Malformed { member: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationCheck {
    pub represents: bool,
    pub failure: Option<RepresentationFailure>,
}

/// Checks `x ≽ y ⇔ F(x) ≥ F(y) − ε for every member`, returning the first
/// offending pair in lexicographic order.
pub fn verify_representation(poset: &MetricPoset, family: &FunctionFamily, ctx: &Context) -> RepresentationCheck {
    let n = poset.len();
    let eps = ctx.epsilon;
    let fail = |failure| RepresentationCheck {
        represents: false,
        failure: Some(failure),
    };
    if let Some(member) = family.members.iter().position(|m| m.len() != n) {
        return fail(RepresentationFailure::Malformed { member });
    }
    for x in 0..n {
        for y in 0..n {
            let below = family.members.iter().position(|m| m[x] < m[y] - eps);
            match (poset.geq(x, y), below) {
                (true, Some(member)) => return fail(RepresentationFailure::NotIncreasing { x, y, member }),
                (false, None) => return fail(RepresentationFailure::Unseparated { x, y }),
                _ => {}
            }
        }
    }
    RepresentationCheck {
        represents: true,
        failure: None,
    }
}

/// Shifts every member to vanish at `base`: `H = K·(F − F(base))/K` with `K = diam(X)`,
/// so that `‖H‖∞ ≤ diam(X)` for 1-Lipschitz members.
pub fn normalize_family(poset: &MetricPoset, family: &FunctionFamily, base: usize) -> Result<FunctionFamily> {
    let diam = poset.diameter();
    if poset.len() < 2 || diam <= 0.0 {
        return Err(Error::DegenerateDiameter);
    }
    if base >= poset.len() {
        return Err(Error::IndexOutOfRange {
            index: base,
            n: poset.len(),
        });
    }
    let members = family
        .members
        .iter()
        .map(|m| {
            if m.len() != poset.len() {
                return Err(Error::WidthMismatch {
                    expected: poset.len(),
                    got: m.len(),
                });
            }
            let anchor = m[base];
            Ok(m.iter().map(|v| diam * ((v - anchor) / diam)).collect())
        })
        .collect::<Result<_>>()?;
    Ok(FunctionFamily {
        members,
        tags: family.tags.clone(),
    })
}

/// How the members of a representing family are weighted in a strict map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Weighting {
    /// `1/N` for each of the `N` members.
    #[default]
    Uniform,
    /// `2^{-k}` for the `k`-th member (1-based). Gaps carried only by late
    /// members fall below `f64` resolution once `N` exceeds about 50.
    Geometric,
}

impl Weighting {
    pub fn weights(self, count: usize) -> Vec<f64> {
        match self {
            Weighting::Uniform => vec![1.0 / count as f64; count],
            Weighting::Geometric => (1..=count).map(|k| 0.5f64.powi(k as i32)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrictMap {
    /// One value per point.
    pub values: Vec<f64>,
    pub weights: Vec<f64>,
    /// Smallest `G(x) − G(y)` over `x ≻ y`, as computed; `+∞` when `≻` is empty.
    #[serde(with = "crate::io::extended_real")]
    pub margin: f64,
    /// `min over x ≻ y of max_k w_k·(F_k(x) − F_k(y))`, a lower bound on the exact gap.
    #[serde(with = "crate::io::extended_real")]
    pub certified_margin: f64,
}

/// `G = Σ_k w_k H_k` over the representing family normalized at point 0, with uniform weights.
pub fn strict_monotone_map(poset: &MetricPoset, ctx: &Context) -> Result<StrictMap> {
    strict_monotone_map_weighted(poset, Weighting::Uniform, ctx)
}

pub fn strict_monotone_map_weighted(poset: &MetricPoset, weighting: Weighting, ctx: &Context) -> Result<StrictMap> {
    let n = poset.len();
    let family = representing_family(poset, ctx)?;
    let family = if n >= 2 {
        normalize_family(poset, &family, 0)?
    } else {
        family
    };
    let weights = weighting.weights(family.len());
    let mut values = vec![0.0; n];
    for (w, member) in weights.iter().zip(&family.members) {
        for (g, v) in values.iter_mut().zip(member) {
            *g += w * v;
        }
    }
    let mut margin = f64::INFINITY;
    let mut certified_margin = f64::INFINITY;
    for x in 0..n {
        for y in (0..n).filter(|&y| poset.gt(x, y)) {
            margin = margin.min(values[x] - values[y]);
            let best = weights
                .iter()
                .zip(&family.members)
                .map(|(w, m)| w * (m[x] - m[y]))
                .fold(0.0, f64::max);
            certified_margin = certified_margin.min(best);
        }
    }
    Ok(StrictMap {
        values,
        weights,
        margin,
        certified_margin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::validate_total;

    fn ctx() -> Context {
        Context::default()
    }

    fn chain2() -> MetricPoset {
        MetricPoset::from_parts(&[vec![0.0, 1.0], vec![1.0, 0.0]], &[(0, 1)], &ctx()).unwrap()
    }

    fn four_point() -> MetricPoset {
        let (a, b) = (0.6, 0.3);
        let dist = vec![
            vec![0.0, a, a, 1.0],
            vec![a, 0.0, b, 1.0 - a],
            vec![a, b, 0.0, 1.0 - a],
            vec![1.0, 1.0 - a, 1.0 - a, 0.0],
        ];
        MetricPoset::from_parts(&dist, &[(0, 1), (0, 2), (1, 3), (2, 3)], &ctx()).unwrap()
    }

    #[test]
    fn single_point_has_empty_family() {
        let p = MetricPoset::from_parts(&[vec![0.0]], &[], &ctx()).unwrap();
        let fam = representing_family(&p, &ctx()).unwrap();
        assert!(fam.is_empty());
        assert!(verify_representation(&p, &fam, &ctx()).represents);
        assert_eq!(strict_monotone_map(&p, &ctx()).unwrap().values, vec![0.0]);
    }

    #[test]
    fn two_chain_family() {
        let fam = representing_family(&chain2(), &ctx()).unwrap();
        assert_eq!(fam.members, vec![vec![1.0, 0.0]]);
        assert_eq!(fam.tags, vec![MemberTag::Pair(0, 1)]);
    }

    #[test]
    fn four_point_family() {
        let p = four_point();
        let fam = representing_family(&p, &ctx()).unwrap();
        // Ordered pairs with x ≽• y: (x1; x2, x3, x4), (x2; x3, x4), (x3; x2, x4).
        assert_eq!(fam.len(), 7);
        assert!(verify_representation(&p, &fam, &ctx()).represents);
        for m in &fam.members {
            let rows: Vec<Vec<f64>> = m.iter().map(|&v| vec![v]).collect();
            assert!(validate_total(&p, &rows, 1.0, &ctx()).unwrap().is_valid());
        }
    }

    #[test]
    fn constants_do_not_represent() {
        let fam = FunctionFamily {
            members: vec![vec![0.0, 0.0]],
            tags: vec![MemberTag::Derived],
        };
        assert_eq!(
            verify_representation(&chain2(), &fam, &ctx()).failure,
            Some(RepresentationFailure::Unseparated { x: 1, y: 0 })
        );
        let fam = FunctionFamily {
            members: vec![vec![0.0, 1.0]],
            tags: vec![MemberTag::Derived],
        };
        assert_eq!(
            verify_representation(&chain2(), &fam, &ctx()).failure,
            Some(RepresentationFailure::NotIncreasing { x: 0, y: 1, member: 0 })
        );
    }

    #[test]
    fn normalization() {
        let fam = FunctionFamily {
            members: vec![vec![1.0, 0.0], vec![3.0, 3.0]],
            tags: vec![MemberTag::Pair(0, 1), MemberTag::Derived],
        };
        let out = normalize_family(&chain2(), &fam, 1).unwrap();
        assert_eq!(out.members, vec![vec![1.0, 0.0], vec![0.0, 0.0]]);
        assert_eq!(out.tags, fam.tags);
        let single = MetricPoset::from_parts(&[vec![0.0]], &[], &ctx()).unwrap();
        assert_eq!(normalize_family(&single, &fam, 0), Err(Error::DegenerateDiameter));
    }

    #[test]
    fn strict_map_on_two_chain() {
        let g = strict_monotone_map_weighted(&chain2(), Weighting::Geometric, &ctx()).unwrap();
        assert_eq!(g.values[0] - g.values[1], 0.5);
        assert_eq!(g.margin, 0.5);
        assert_eq!(g.certified_margin, 0.5);
    }

    #[test]
    fn strict_map_on_four_point_poset() {
        let g = strict_monotone_map(&four_point(), &ctx()).unwrap().values;
        assert!(g[0] > g[1] && g[1] > g[3]);
        assert!(g[0] > g[2] && g[2] > g[3]);
    }

    #[test]
    fn not_radial_is_rejected() {
        let r2 = 2f64.sqrt();
        let dist = vec![vec![0.0, r2, 1.0], vec![r2, 0.0, 1.0], vec![1.0, 1.0, 0.0]];
        let p = MetricPoset::from_parts(&dist, &[(0, 2), (1, 2)], &ctx()).unwrap();
        assert_eq!(representing_family(&p, &ctx()), Err(Error::NotRadial));
        assert_eq!(strict_monotone_map(&p, &ctx()), Err(Error::NotRadial));
    }

    #[test]
    fn tags_serialize_as_pairs_or_derived() {
        let fam = FunctionFamily {
            members: vec![vec![1.0, 0.0], vec![0.0, 0.0]],
            tags: vec![MemberTag::Pair(0, 1), MemberTag::Derived],
        };
        let json = serde_json::to_string(&fam).unwrap();
        assert_eq!(json, r#"{"members":[[1.0,0.0],[0.0,0.0]],"tags":[[0,1],"derived"]}"#);
        assert_eq!(serde_json::from_str::<FunctionFamily>(&json).unwrap(), fam);
    }
}
