use thiserror::Error;

use crate::function::FunctionReport;
use crate::metric::MetricViolation;
use crate::order::OrderViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NonSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("distance matrix violates the metric axioms ({} violations, first: {})", .0.len(), .0[0])]
    InvalidMetric(Vec<MetricViolation>),
    #[error("relation is not a partial order ({} violations, first: {})", .0.len(), .0[0])]
    InvalidOrder(Vec<OrderViolation>),
    #[error("metric has {metric} points but order has {order}")]
    SizeMismatch { metric: usize, order: usize },
    #[error("point index {index} out of range for {n} points")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("duplicate point index {0}")]
    DuplicateIndex(usize),
    #[error("subset is empty")]
    EmptySubset,
    #[error("partial function has an empty domain")]
    EmptyDomain,
    #[error("Lipschitz budget must be nonnegative and finite, got {0}")]
    NegativeK(f64),
    #[error("value width mismatch: expected {expected}, got {got}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("value at point {point} is not finite")]
    NonFiniteValue { point: usize },
    #[error("partial function is not order-preserving and K-Lipschitz: {0}")]
    InvalidFunction(Box<FunctionReport>),
    #[error("point {0} already belongs to the domain")]
    PointInDomain(usize),
    #[error("point order is not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("inverted range: {lo} > {hi}")]
    InvertedRange { lo: f64, hi: f64 },
    #[error("triple does not witness a radiality violation of this poset")]
    NotAViolation,
    #[error("poset is not radial")]
    NotRadial,
    #[error("poset is not radially convex")]
    NotRadiallyConvex,
    #[error("order is not total")]
    NotTotal,
    #[error("diameter is zero; need at least two points")]
    DegenerateDiameter,
    #[error("need at least two domain points, got {0}")]
    TooFewPoints(usize),
    #[error("vector-valued functions are not supported here (width {0})")]
    VectorNotSupported(usize),
    #[error("majorant vanishes identically and cannot remetrize")]
    DegenerateMajorant,
    #[error("d_{{a,b}} is not a metric for a={a}, b={b}: need min(a, 1-a) >= b/2")]
    InvalidMetricParams { a: f64, b: f64 },
    #[error("edge list does not form a tree: {0}")]
    NotATree(String),
    #[error("root {root} is not a vertex of the tree ({vertices} vertices)")]
    RootMissing { root: usize, vertices: usize },
    #[error("theta {theta} is below the larger diameter {diameter}")]
    ThetaTooSmall { theta: f64, diameter: f64 },
    #[error("interval samples contain the duplicate value {0}")]
    DuplicateSamples(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
