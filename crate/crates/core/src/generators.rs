//! Constructors for the standard example families and seeded random instances.
//!
//! Every random generator is a pure function of its parameters and a 64-bit
//! seed, driven by ChaCha8.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::PartialFunction;
use crate::metric::validate_metric;
use crate::oracle::ConstraintGraph;
use crate::order::OrderRelation;
use crate::poset::{MetricPoset, PointSet};
use crate::radiality::{check_radial_convexity, check_radiality, ViolationWitness};
use crate::Context;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Four points `x1 ≻ x2, x3 ≻ x4` with `x2 ∥ x3`, `d(x1, x2) = d(x1, x3) = a`,
/// `d(x2, x3) = b`, `d(x2, x4) = d(x3, x4) = 1 − a` and `d(x1, x4) = 1`.
///
/// This is a metric exactly when `min{a, 1 − a} ≥ b/2`, radial when
/// `min{a, 1 − a} ≥ b`.
pub fn gen_example1(a: f64, b: f64, ctx: &Context) -> Result<MetricPoset> {
    if !(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0) {
        return Err(Error::InvalidMetricParams { a, b });
    }
    let c = 1.0 - a;
    let dist = vec![
        vec![0.0, a, a, 1.0],
        vec![a, 0.0, b, c],
        vec![a, b, 0.0, c],
        vec![1.0, c, c, 0.0],
    ];
    let metric = validate_metric(&dist, ctx).map_err(|_| Error::InvalidMetricParams { a, b })?;
    let order = OrderRelation::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])?;
    MetricPoset::new(metric, order)?.with_labels((1..=4).map(|i| format!("x{i}")).collect())
}

/// Parent of every vertex in the tree rooted at `root`, with `parent[root] = root`.
fn tree_parents(vertex_count: usize, edges: &[(usize, usize)], root: usize) -> Result<Vec<usize>> {
    if root >= vertex_count {
        return Err(Error::RootMissing {
            root,
            vertices: vertex_count,
        });
    }
    if edges.len() + 1 != vertex_count {
        return Err(Error::NotATree(format!(
            "{} vertices need {} edges, got {}",
            vertex_count,
            vertex_count - 1,
            edges.len()
        )));
    }
    let mut adjacency = vec![Vec::new(); vertex_count];
    for &(u, v) in edges {
        if u >= vertex_count || v >= vertex_count {
            return Err(Error::NotATree(format!("edge ({u}, {v}) leaves the vertex set")));
        }
        if u == v {
            return Err(Error::NotATree(format!("self-loop at {u}")));
        }
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let mut parent = vec![usize::MAX; vertex_count];
    parent[root] = root;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        for &v in &adjacency[u] {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    if let Some(v) = parent.iter().position(|&p| p == usize::MAX) {
        return Err(Error::NotATree(format!("vertex {v} is not connected to the root")));
    }
    Ok(parent)
}

/// A rooted tree under the ancestor order (`x ≽ y` iff `y` lies on the path
/// from the root to `x`), once with the path-length metric `ρ_T` and once with
/// `d_T`, which is `min{ρ_T, 2}` on comparable pairs and 1 otherwise.
pub fn gen_example2(vertex_count: usize, edges: &[(usize, usize)], root: usize, ctx: &Context) -> Result<(MetricPoset, MetricPoset)> {
    let parent = tree_parents(vertex_count, edges, root)?;
    let n = vertex_count;
    let ancestors: Vec<Vec<usize>> = (0..n)
        .map(|mut v| {
            let mut path = vec![v];
            while parent[v] != v {
                v = parent[v];
                path.push(v);
            }
            path
        })
        .collect();
    let depth: Vec<usize> = ancestors.iter().map(|a| a.len() - 1).collect();
    let mut rho = vec![vec![0.0; n]; n];
    let mut dt = vec![vec![0.0; n]; n];
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            // Depth of the deepest common ancestor.
            let common = ancestors[x].iter().filter(|a| ancestors[y].contains(a)).map(|&a| depth[a]).max().unwrap_or(0);
            let length = (depth[x] + depth[y] - 2 * common) as f64;
            rho[x][y] = length;
            let comparable = ancestors[x].contains(&y) || ancestors[y].contains(&x);
            dt[x][y] = if x == y {
                0.0
            } else if comparable {
                length.min(2.0)
            } else {
                1.0
            };
        }
        if parent[x] != x {
            pairs.push((x, parent[x]));
        }
    }
    let order = OrderRelation::from_pairs(n, &pairs)?;
    let names = labels("v", n);
    let rho = MetricPoset::new(validate_metric(&rho, ctx)?, order.clone())?.with_labels(names.clone())?;
    let dt = MetricPoset::new(validate_metric(&dt, ctx)?, order)?.with_labels(names)?;
    Ok((rho, dt))
}

/// Disjoint sum of two radially convex losets: distances are kept inside each
/// part and equal `θ/2` across, and no point of one part is comparable with
/// a point of the other.
pub fn gen_example3(a: &MetricPoset, b: &MetricPoset, theta: f64, ctx: &Context) -> Result<MetricPoset> {
    for part in [a, b] {
        if !part.order().is_total() {
            return Err(Error::NotTotal);
        }
        if !check_radial_convexity(part, &Context { violation_limit: 0, ..*ctx }).0 {
            return Err(Error::NotRadiallyConvex);
        }
    }
    let diameter = a.diameter().max(b.diameter());
    if theta.is_nan() || theta < diameter {
        return Err(Error::ThetaTooSmall { theta, diameter });
    }
    let (na, n) = (a.len(), a.len() + b.len());
    let mut dist = vec![vec![0.5 * theta; n]; n];
    let mut geq = vec![vec![false; n]; n];
    for (part, offset) in [(a, 0), (b, na)] {
        for i in 0..part.len() {
            for j in 0..part.len() {
                dist[offset + i][offset + j] = part.d(i, j);
                geq[offset + i][offset + j] = part.geq(i, j);
            }
        }
    }
    let names = (0..na)
        .map(|i| format!("A.{}", a.label(i)))
        .chain((0..b.len()).map(|i| format!("B.{}", b.label(i))))
        .collect();
    MetricPoset::from_matrices(&dist, &geq, false, ctx)?.with_labels(names)
}

/// Reals with the usual order and distance.
pub fn real_loset(samples: &[f64], ctx: &Context) -> Result<MetricPoset> {
    let dist: Vec<Vec<f64>> = samples.iter().map(|s| samples.iter().map(|t| (s - t).abs()).collect()).collect();
    let geq: Vec<Vec<bool>> = samples.iter().map(|s| samples.iter().map(|t| s >= t).collect()).collect();
    MetricPoset::from_matrices(&dist, &geq, false, ctx)
}

/// Finitely many points of `[0, 1]` below an antichain of `m` extra points.
///
/// Distances are `|s − t|` inside the interval, 1 between distinct antichain
/// points, and `2 − s` from an antichain point to `s`.
pub fn gen_example4(samples: &[f64], antichain: usize, ctx: &Context) -> Result<MetricPoset> {
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateSamples(w[0]));
    }
    if let Some(&s) = samples.iter().find(|s| !(0.0..=1.0).contains(*s)) {
        return Err(Error::InvalidParameter(format!("interval sample {s} is outside [0, 1]")));
    }
    let k = samples.len();
    let n = k + antichain;
    let mut dist = vec![vec![0.0; n]; n];
    let mut geq = vec![vec![false; n]; n];
    for x in 0..n {
        for y in 0..n {
            let (xi, yi) = (x < k, y < k);
            dist[x][y] = match (xi, yi) {
                (true, true) => (samples[x] - samples[y]).abs(),
                (false, false) => f64::from(u8::from(x != y)),
                (false, true) => 2.0 - samples[y],
                (true, false) => 2.0 - samples[x],
            };
            geq[x][y] = match (xi, yi) {
                (true, true) => samples[x] >= samples[y],
                (false, true) => true,
                (true, false) => false,
                (false, false) => x == y,
            };
        }
    }
    let names = samples
        .iter()
        .map(|s| format!("i{s}"))
        .chain((0..antichain).map(|j| format!("j{j}")))
        .collect();
    MetricPoset::from_matrices(&dist, &geq, false, ctx)?.with_labels(names)
}

/// Which metric an [`GeneratorSpec::Example2Tree`] instance carries.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeMetric {
    PathLength,
    #[default]
    Truncated,
}

fn default_density() -> f64 {
    0.3
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GeneratorSpec {
    Example1 {
        a: f64,
        b: f64,
    },
    Example2Tree {
        vertices: usize,
        edges: Vec<(usize, usize)>,
        root: usize,
        #[serde(default)]
        metric: TreeMetric,
    },
    /// Two loset parts given as real samples under the usual order; `θ`
    /// defaults to the larger diameter.
    Example3Sum {
        a: Vec<f64>,
        b: Vec<f64>,
        #[serde(default)]
        theta: Option<f64>,
    },
    Example4Mixed {
        samples: Vec<f64>,
        antichain: usize,
    },
    /// Random partial order with the discrete metric.
    RandomDiscrete {
        n: usize,
        #[serde(default = "default_density")]
        density: f64,
    },
    /// Uniform points of the unit square, coordinatewise order.
    RandomEuclidean { n: usize },
    /// Uniform reals in `[0, 1]`, usual order.
    RandomLoset { n: usize },
}

/// Builds the instance described by `spec`; the seed only affects random kinds.
pub fn random_instance(spec: &GeneratorSpec, seed: u64, ctx: &Context) -> Result<MetricPoset> {
    match spec {
        GeneratorSpec::Example1 { a, b } => gen_example1(*a, *b, ctx),
        GeneratorSpec::Example2Tree {
            vertices,
            edges,
            root,
            metric,
        } => {
            let (rho, dt) = gen_example2(*vertices, edges, *root, ctx)?;
            Ok(match metric {
                TreeMetric::PathLength => rho,
                TreeMetric::Truncated => dt,
            })
        }
        GeneratorSpec::Example3Sum { a, b, theta } => {
            let (pa, pb) = (real_loset(a, ctx)?, real_loset(b, ctx)?);
            let theta = theta.unwrap_or(pa.diameter().max(pb.diameter()));
            gen_example3(&pa, &pb, theta, ctx)
        }
        GeneratorSpec::Example4Mixed { samples, antichain } => gen_example4(samples, *antichain, ctx),
        GeneratorSpec::RandomDiscrete { n, density } => {
            if !(0.0..=1.0).contains(density) {
                return Err(Error::InvalidParameter(format!("density {density} is outside [0, 1]")));
            }
            random_discrete(*n, *density, seed, ctx)
        }
        GeneratorSpec::RandomEuclidean { n } => random_euclidean(*n, seed, ctx),
        GeneratorSpec::RandomLoset { n } => {
            let mut r = rng(seed);
            let samples: Vec<f64> = (0..*n).map(|_| r.gen::<f64>()).collect();
            real_loset(&samples, ctx)
        }
    }
}

/// A random order (each `i > j` is related with probability `density`, then
/// closed) carrying the discrete metric.
pub fn random_discrete(n: usize, density: f64, seed: u64, ctx: &Context) -> Result<MetricPoset> {
    let mut r = rng(seed);
    // Relabel so that the order is not always aligned with the indices.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..i {
            if r.gen_bool(density) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    let dist: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| f64::from(u8::from(i != j))).collect()).collect();
    MetricPoset::from_parts(&dist, &pairs, ctx)
}

/// Points of the plane under the coordinatewise order and Euclidean distance.
pub fn plane_poset(points: &[(f64, f64)], ctx: &Context) -> Result<MetricPoset> {
    let dist: Vec<Vec<f64>> = points
        .iter()
        .map(|p| points.iter().map(|q| (p.0 - q.0).hypot(p.1 - q.1)).collect())
        .collect();
    let geq: Vec<Vec<bool>> = points
        .iter()
        .map(|p| points.iter().map(|q| p.0 >= q.0 && p.1 >= q.1).collect())
        .collect();
    MetricPoset::from_matrices(&dist, &geq, false, ctx)
}

pub fn random_euclidean(n: usize, seed: u64, ctx: &Context) -> Result<MetricPoset> {
    let mut r = rng(seed);
    let points: Vec<(f64, f64)> = (0..n).map(|_| (r.gen(), r.gen())).collect();
    plane_poset(&points, ctx)
}

/// A total order on points of the plane scattered around a line: the order
/// follows the first coordinate, the metric is Euclidean. Small scatter gives
/// radially convex losets, large scatter typically does not.
pub fn random_metric_loset(n: usize, seed: u64, ctx: &Context) -> Result<MetricPoset> {
    let mut r = rng(seed);
    let scatter: f64 = r.gen_range(0.0..0.6);
    let mut xs: Vec<f64> = (0..n).map(|i| i as f64 + r.gen_range(0.0..0.5)).collect();
    xs.shuffle(&mut r);
    let points: Vec<(f64, f64)> = xs.iter().map(|&x| (x, r.gen_range(-scatter..=scatter) * n as f64)).collect();
    let dist: Vec<Vec<f64>> = points
        .iter()
        .map(|p| points.iter().map(|q| (p.0 - q.0).hypot(p.1 - q.1)).collect())
        .collect();
    let geq: Vec<Vec<bool>> = xs.iter().map(|a| xs.iter().map(|b| a >= b).collect()).collect();
    MetricPoset::from_matrices(&dist, &geq, false, ctx)
}

/// Edges of a uniformly grown random tree on `n` vertices rooted at 0.
pub fn random_tree(n: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut r = rng(seed);
    (1..n).map(|v| (r.gen_range(0..v), v)).collect()
}

/// A nonempty random subset, each point kept with probability one half.
pub fn random_subset(n: usize, seed: u64) -> PointSet {
    let mut r = rng(seed);
    let mut points: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.5)).collect();
    if points.is_empty() && n > 0 {
        points.push(r.gen_range(0..n));
    }
    PointSet::new(n, points).expect("indices are in range")
}

/// A total increasing `K`-Lipschitz function of the given width.
///
/// Points are fixed one at a time in random order, each at a uniform value
/// between the tightest bounds implied by the points fixed so far. Because
/// difference constraints are globally consistent once their shortest-path
/// closure is, every intermediate assignment stays extendable, on any poset.
pub fn random_total_function(poset: &MetricPoset, k: f64, width: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut r = rng(seed);
    let n = poset.len();
    let graph = ConstraintGraph::new(poset, k);
    let mut values = vec![vec![0.0; width]; n];
    for t in 0..width {
        let mut visit: Vec<usize> = (0..n).collect();
        visit.shuffle(&mut r);
        let mut fixed: Vec<(usize, f64)> = Vec::with_capacity(n);
        for &x in &visit {
            let v = if fixed.is_empty() {
                r.gen_range(-1.0..=1.0)
            } else {
                let lo = graph.lower(x, fixed.iter().copied());
                let hi = graph.upper(x, fixed.iter().copied());
                if hi > lo {
                    r.gen_range(lo..=hi)
                } else {
                    lo
                }
            };
            values[x][t] = v;
            fixed.push((x, v));
        }
    }
    values
}

/// A random valid partial function on a random nonempty subset.
pub fn random_function(poset: &MetricPoset, k: f64, width: usize, seed: u64) -> Result<PartialFunction> {
    let total = random_total_function(poset, k, width, seed);
    let domain = random_subset(poset.len(), seed.wrapping_add(0x9e37_79b9_7f4a_7c15));
    PartialFunction::from_total(&total, &domain, k)
}

/// A random bounded increasing scalar function on a random nonempty subset,
/// with no regard for any Lipschitz budget: `f(x)` is the largest of random
/// weights in `[0, scale]` attached to the domain points below `x`.
pub fn random_monotone_function(poset: &MetricPoset, scale: f64, seed: u64) -> Result<PartialFunction> {
    let mut r = rng(seed);
    let domain = random_subset(poset.len(), seed.wrapping_add(1));
    let weights: Vec<f64> = domain.iter().map(|_| r.gen_range(0.0..=scale)).collect();
    let values = domain
        .iter()
        .map(|x| {
            domain
                .iter()
                .zip(&weights)
                .filter(|&(z, _)| poset.geq(x, z))
                .map(|(_, &w)| w)
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    PartialFunction::scalar(domain.as_slice().to_vec(), values, 1.0)
}

/// Tree edges together with a failing triple of its path-length poset.
pub type TreeWitness = (Vec<(usize, usize)>, ViolationWitness);

/// First rooted tree, in order of size and then of parent arrays, whose
/// path-length poset fails (d1) or (d2).
pub fn search_tree_violation(max_vertices: usize, ctx: &Context) -> Result<Option<TreeWitness>> {
    for n in 1..=max_vertices {
        // parent[v] < v enumerates every rooted tree on 0..n up to relabeling.
        let mut parent = vec![0usize; n];
        loop {
            let edges: Vec<(usize, usize)> = (1..n).map(|v| (parent[v], v)).collect();
            let (rho, _) = gen_example2(n, &edges, 0, ctx)?;
            if let Some(w) = check_radiality(&rho, ctx).first_radial_violation() {
                return Ok(Some((edges, *w)));
            }
            let Some(v) = (1..n).rev().find(|&v| parent[v] + 1 < v) else {
                break;
            };
            parent[v] += 1;
            parent[v + 1..].fill(0);
        }
    }
    Ok(None)
}
