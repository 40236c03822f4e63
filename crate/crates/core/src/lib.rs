//! Order-preserving Lipschitz extensions on finite partially ordered metric spaces.
//!
//! A metric poset `(X, d, ≽)` is *radial* when
//!
//! * `x ≽• y ≻ z` implies `d(x, z) ≥ d(x, y)`, and
//! * `x ≻ y ≽• z` implies `d(x, z) ≥ d(y, z)`,
//!
//! where `x ≽• y` means that `y ≽ x` fails. Radial posets are exactly the ones in which
//! every order-preserving `K`-Lipschitz function on a subset extends to the whole
//! space with the same constant. This crate decides radiality, computes such
//! extensions (smallest, largest, or midpoint), certifies them against an
//! independent difference-constraint solver, and builds on them:
//!
//! * [`radiality`]: radial convexity and radiality checks, plus inextensible
//!   witnesses for non-radial posets.
//! * [`extension`]: the one-point-at-a-time extension and range clamping.
//! * [`oracle`]: extremal solutions of the difference-constraint system.
//! * [`representation`]: families of increasing 1-Lipschitz functions that
//!   represent the order, and strictly increasing Lipschitz maps.
//! * [`uniform`]: extension of bounded increasing functions through a concave
//!   remetrization of the space.
//! * [`generators`]: the classical example families and seeded random instances.
//! * [`io`]: JSON file formats.
//!
//! ```
//! use monolip::{Context, MetricPoset, PartialFunction};
//! use monolip::extension::{extend, ExtensionPolicy, Selector};
//!
//! let ctx = Context::default();
//! // Two points, 0 above 1, at distance 1. Fix the value 0 at the bottom point.
//! let poset = MetricPoset::from_parts(&[vec![0.0, 1.0], vec![1.0, 0.0]], &[(0, 1)], &ctx).unwrap();
//! let f = PartialFunction::scalar(vec![1], vec![0.0], 1.0).unwrap();
//! let low = extend(&poset, &f, &ExtensionPolicy::new(Selector::Min), &ctx).unwrap();
//! let high = extend(&poset, &f, &ExtensionPolicy::new(Selector::Max), &ctx).unwrap();
//! assert_eq!(low.values[0][0], 0.0);
//! assert_eq!(high.values[0][0], 1.0);
//! ```

pub mod error;
pub mod extension;
pub mod function;
pub mod generators;
pub mod io;
pub mod metric;
pub mod oracle;
pub mod order;
pub mod poset;
pub mod radiality;
pub mod representation;
pub mod uniform;

pub use error::{Error, Result};
pub use function::PartialFunction;
pub use metric::{validate_metric, FiniteMetric};
pub use order::{bullet_relation, validate_order, OrderRelation};
pub use poset::{Direction, MetricPoset, PointSet};

pub const DEFAULT_EPSILON: f64 = 1e-9;
pub const DEFAULT_VIOLATION_LIMIT: usize = 100;

/// Numeric tolerance and reporting limits shared by every check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Context {
    /// Slack allowed in every non-strict inequality.
    pub epsilon: f64,
    /// Maximum number of violations collected by a single check.
    pub violation_limit: usize,
}

impl Default for Context {
    fn default() -> Self {
        Self {
            epsilon: DEFAULT_EPSILON,
            violation_limit: DEFAULT_VIOLATION_LIMIT,
        }
    }
}

impl Context {
    pub fn with_epsilon(epsilon: f64) -> Self {
        Self {
            epsilon,
            ..Self::default()
        }
    }
}
