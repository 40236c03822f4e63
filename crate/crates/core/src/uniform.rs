//! Increasing extensions of bounded increasing functions via concave remetrization.
//!
//! Given `f` on `S`, its modulus of continuity `ω(t) = max{|f(x) − f(y)| : d(x, y) ≤ t}`
//! is dominated by the pointwise infimum `φ` of all nondecreasing affine maps
//! `h ≥ ω` on `[0, ∞)`. `φ` is nondecreasing, concave and vanishes at 0, so
//! `D = φ ∘ d` is a metric with the same order. Since `φ` is nondecreasing,
//! `(X, D, ≽)` stays radial, and `f` is 1-Lipschitz for `D`. Any increasing
//! 1-Lipschitz extension `F` in `(X, D)` then satisfies
//! `|F(x) − F(y)| ≤ φ(d(x, y))`.
//!
//! On a finite space `ω` is a step function that only changes at realized
//! distances, so `φ` is the upper concave hull of `(0, 0)` and the points
//! `(t_i, ω(t_i))`, and is constant past the largest realized distance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::{extend, ExtensionOutcome, ExtensionPolicy, Status};
use crate::function::PartialFunction;
use crate::metric::validate_metric;
use crate::poset::MetricPoset;
use crate::radiality::is_radial;
use crate::Context;

/// `ω` sampled at `0` and at every distinct distance realized in `X`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModulusSample {
    pub breakpoints: Vec<f64>,
    pub omega: Vec<f64>,
}

impl ModulusSample {
    /// `ω(t)`: the value at the largest breakpoint not exceeding `t`.
    pub fn at(&self, t: f64) -> f64 {
        match self.breakpoints.partition_point(|&b| b <= t) {
            0 => 0.0,
            i => self.omega[i - 1],
        }
    }
}

/// Exact modulus of continuity of a scalar `f` over pairs of its domain.
pub fn modulus_of_continuity(poset: &MetricPoset, f: &PartialFunction) -> Result<ModulusSample> {
    if f.width() != 1 {
        return Err(Error::VectorNotSupported(f.width()));
    }
    if f.domain().len() < 2 {
        return Err(Error::TooFewPoints(f.domain().len()));
    }
    if let Some(index) = f.domain().iter().find(|&p| p >= poset.len()) {
        return Err(Error::IndexOutOfRange { index, n: poset.len() });
    }
    let n = poset.len();
    let mut breakpoints: Vec<f64> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .map(|(i, j)| poset.d(i, j))
        .collect();
    breakpoints.push(0.0);
    breakpoints.sort_by(f64::total_cmp);
    breakpoints.dedup();

    let points: Vec<(usize, f64)> = f.iter().map(|(p, v)| (p, v[0])).collect();
    let mut gaps: Vec<(f64, f64)> = Vec::new();
    for (a, &(x, fx)) in points.iter().enumerate() {
        for &(y, fy) in &points[a + 1..] {
            gaps.push((poset.d(x, y), (fx - fy).abs()));
        }
    }
    gaps.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut omega = Vec::with_capacity(breakpoints.len());
    let mut running = 0.0f64;
    let mut next = 0;
    for &t in &breakpoints {
        while next < gaps.len() && gaps[next].0 <= t {
            running = running.max(gaps[next].1);
            next += 1;
        }
        omega.push(running);
    }
    Ok(ModulusSample { breakpoints, omega })
}

/// Piecewise-linear, nondecreasing, concave `φ` with `φ(0) = 0`, given by its
/// vertices and constant after the last one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConcaveMajorant {
    pub vertices: Vec<(f64, f64)>,
    /// Set when `ω ≡ 0`; `φ` is then identically zero.
    pub degenerate: bool,
}

impl ConcaveMajorant {
    pub fn zero() -> Self {
        Self {
            vertices: vec![(0.0, 0.0)],
            degenerate: true,
        }
    }

    pub fn identity(upto: f64) -> Self {
        Self {
            vertices: vec![(0.0, 0.0), (upto, upto)],
            degenerate: false,
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let v = &self.vertices;
        if t <= 0.0 {
            return 0.0;
        }
        let i = v.partition_point(|&(s, _)| s <= t);
        if i == v.len() {
            return v[v.len() - 1].1;
        }
        let (t0, p0) = v[i - 1];
        let (t1, p1) = v[i];
        p0 + (p1 - p0) * (t - t0) / (t1 - t0)
    }

    /// Segment slopes, left to right.
    pub fn slopes(&self) -> Vec<f64> {
        self.vertices
            .windows(2)
            .map(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0))
            .collect()
    }

    /// The line through the last segment, `t ↦ a·t + b` with `a, b ≥ 0`. It
    /// dominates `φ` everywhere, so `|f(x) − f(y)| ≤ (a + b/δ)·d(x, y)`
    /// whenever `d(x, y) ≥ δ`.
    pub fn affine_majorant(&self) -> (f64, f64) {
        let v = &self.vertices;
        if v.len() < 2 {
            return (0.0, 0.0);
        }
        let (t1, p1) = v[v.len() - 1];
        let a = self.slopes()[v.len() - 2];
        (a, (p1 - a * t1).max(0.0))
    }

    /// `K_δ = a + b/δ` from [`Self::affine_majorant`].
    pub fn large_distance_constant(&self, delta: f64) -> f64 {
        let (a, b) = self.affine_majorant();
        a + b / delta
    }

    /// For each vertex, a nondecreasing affine `(slope, intercept)` that touches
    /// `φ` there and dominates it everywhere.
    pub fn supporting_lines(&self) -> Vec<(f64, f64)> {
        let slopes = self.slopes();
        self.vertices
            .iter()
            .enumerate()
            .map(|(i, &(t, p))| {
                let a = match slopes.get(i) {
                    Some(&a) => a,
                    None => 0.0,
                };
                (a, p - a * t)
            })
            .collect()
    }
}

/// Upper concave hull of `(0, 0)` and the samples of `ω`.
pub fn concave_affine_envelope(ms: &ModulusSample) -> ConcaveMajorant {
    if ms.omega.iter().all(|&w| w == 0.0) {
        return ConcaveMajorant::zero();
    }
    let mut hull: Vec<(f64, f64)> = vec![(0.0, 0.0)];
    for (&t, &w) in ms.breakpoints.iter().zip(&ms.omega) {
        if t <= 0.0 {
            continue;
        }
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (w - o.1) - (a.1 - o.1) * (t - o.0);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((t, w));
    }
    ConcaveMajorant {
        vertices: hull,
        degenerate: false,
    }
}

/// The same poset with distances `φ(d(x, y))`.
pub fn remetrize(poset: &MetricPoset, phi: &ConcaveMajorant, ctx: &Context) -> Result<MetricPoset> {
    if phi.degenerate || phi.vertices.len() < 2 {
        return Err(Error::DegenerateMajorant);
    }
    let rows: Vec<Vec<f64>> = poset
        .metric()
        .rows()
        .iter()
        .map(|r| r.iter().map(|&d| phi.eval(d)).collect())
        .collect();
    poset.with_metric(validate_metric(&rows, ctx)?)
}

/// Largest excess of `|F(x) − F(y)|` over `φ(d(x, y))` across all pairs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModulusCertificate {
    pub holds: bool,
    pub max_violation: f64,
    pub argmax: Option<(usize, usize)>,
}

pub fn modulus_certificate(poset: &MetricPoset, values: &[f64], phi: &ConcaveMajorant, ctx: &Context) -> ModulusCertificate {
    let n = poset.len();
    let mut max_violation = f64::NEG_INFINITY;
    let mut argmax = None;
    for x in 0..n {
        for y in (x + 1)..n {
            let excess = (values[x] - values[y]).abs() - phi.eval(poset.d(x, y));
            if excess > max_violation {
                max_violation = excess;
                argmax = Some((x, y));
            }
        }
    }
    ModulusCertificate {
        holds: argmax.is_none() || max_violation <= ctx.epsilon,
        max_violation: if argmax.is_none() { 0.0 } else { max_violation },
        argmax,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct UniformExtension {
    pub outcome: ExtensionOutcome,
    /// Absent only when the domain has a single point.
    pub modulus: Option<ModulusSample>,
    pub majorant: ConcaveMajorant,
    /// Absent when `f` is constant.
    pub remetrized: Option<MetricPoset>,
    pub certificate: ModulusCertificate,
}

/// Extends an increasing scalar `f` (its budget is ignored) to an increasing
/// `F` with `|F(x) − F(y)| ≤ φ(d(x, y))` on all pairs.
pub fn extend_uniform(poset: &MetricPoset, f: &PartialFunction, policy: &ExtensionPolicy, ctx: &Context) -> Result<UniformExtension> {
    if f.width() != 1 {
        return Err(Error::VectorNotSupported(f.width()));
    }
    if !is_radial(poset, ctx) {
        return Err(Error::NotRadial);
    }
    let modulus = if f.domain().len() >= 2 {
        Some(modulus_of_continuity(poset, f)?)
    } else {
        None
    };

    if f.is_constant() {
        let c = f.values()[0][0];
        let values = vec![vec![c]; poset.len()];
        let phi = ConcaveMajorant::zero();
        let certificate = modulus_certificate(poset, &vec![c; poset.len()], &phi, ctx);
        return Ok(UniformExtension {
            outcome: ExtensionOutcome {
                status: Status::Feasible,
                values,
                infeasible: Vec::new(),
                policy: policy.clone(),
                visit_order: f.domain().complement(poset.len()).as_slice().to_vec(),
                k: 0.0,
            },
            modulus,
            majorant: phi,
            remetrized: None,
            certificate,
        });
    }

    let modulus = modulus.expect("non-constant f has two domain points");
    let phi = concave_affine_envelope(&modulus);
    let remetrized = remetrize(poset, &phi, ctx)?;
    let outcome = extend(&remetrized, &f.with_k(1.0)?, policy, ctx)?;
    let certificate = modulus_certificate(poset, &outcome.scalar_values(), &phi, ctx);
    Ok(UniformExtension {
        outcome,
        modulus: Some(modulus),
        majorant: phi,
        remetrized: Some(remetrized),
        certificate,
    })
}
