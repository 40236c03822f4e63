//! JSON file formats and TSV tables.
//!
//! Instances are stored as `{"labels": [...], "dist": [[...]], "order": {"pairs": [[i, j], ...], "closure": true}}`
//! where each pair asserts `i ≽ j`. Partial functions are stored as
//! `{"domain": [...], "values": [[...], ...], "K": 1.0}`; scalar values may be
//! written as bare numbers.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::function::PartialFunction;
use crate::metric::validate_metric;
use crate::order::validate_order;
use crate::poset::MetricPoset;
use crate::Context;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot access {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot parse {path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Invalid(#[from] Error),
}

/// Serde adapter writing `±∞` as the strings `"+inf"` and `"-inf"`.
pub mod extended_real {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if *v == f64::INFINITY {
            s.serialize_str("+inf")
        } else if *v == f64::NEG_INFINITY {
            s.serialize_str("-inf")
        } else {
            s.serialize_f64(*v)
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Number(f64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Number(v) => Ok(v),
            Raw::Text(t) => match t.as_str() {
                "+inf" | "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                other => Err(de::Error::invalid_value(de::Unexpected::Str(other), &"a number, \"+inf\" or \"-inf\"")),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FileValue {
    Scalar(f64),
    Vector(Vec<f64>),
}

fn default_k() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionFile {
    pub domain: Vec<usize>,
    pub values: Vec<FileValue>,
    #[serde(rename = "K", default = "default_k")]
    pub k: f64,
}

impl TryFrom<FunctionFile> for PartialFunction {
    type Error = Error;

    fn try_from(file: FunctionFile) -> Result<Self> {
        let values = file
            .values
            .into_iter()
            .map(|v| match v {
                FileValue::Scalar(x) => vec![x],
                FileValue::Vector(xs) => xs,
            })
            .collect();
        PartialFunction::new(file.domain, values, file.k)
    }
}

impl From<PartialFunction> for FunctionFile {
    fn from(f: PartialFunction) -> Self {
        Self {
            domain: f.domain().as_slice().to_vec(),
            values: f.values().iter().cloned().map(FileValue::Vector).collect(),
            k: f.k(),
        }
    }
}

fn default_closure() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderFile {
    pub pairs: Vec<(usize, usize)>,
    /// Close the pairs reflexively and transitively before validation.
    #[serde(default = "default_closure")]
    pub closure: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub dist: Vec<Vec<f64>>,
    pub order: OrderFile,
}

impl InstanceFile {
    /// Written with the covering pairs of the order only.
    pub fn from_poset(poset: &MetricPoset) -> Self {
        Self {
            labels: poset.labels().map(<[String]>::to_vec),
            dist: poset.metric().rows(),
            order: OrderFile {
                pairs: poset.order().hasse_pairs(),
                closure: true,
            },
        }
    }

    pub fn to_poset(&self, ctx: &Context) -> Result<MetricPoset> {
        let n = self.dist.len();
        let mut geq = vec![vec![false; n]; n];
        for (i, row) in geq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in &self.order.pairs {
            if let Some(index) = [i, j].into_iter().find(|&p| p >= n) {
                return Err(Error::IndexOutOfRange { index, n });
            }
            geq[i][j] = true;
        }
        let metric = validate_metric(&self.dist, ctx)?;
        let order = validate_order(&geq, self.order.closure)?;
        let poset = MetricPoset::new(metric, order)?;
        match &self.labels {
            Some(labels) => poset.with_labels(labels.clone()),
            None => Ok(poset),
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> std::result::Result<T, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| FileError::Json {
        path: path.to_owned(),
        source,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("in-memory values always serialize");
    text.push('\n');
    text
}

pub fn write_text(path: &Path, text: &str) -> std::result::Result<(), FileError> {
    std::fs::write(path, text).map_err(|source| FileError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn read_instance(path: &Path, ctx: &Context) -> std::result::Result<MetricPoset, FileError> {
    Ok(read_json::<InstanceFile>(path)?.to_poset(ctx)?)
}

pub fn read_function(path: &Path) -> std::result::Result<PartialFunction, FileError> {
    read_json(path)
}

/// One row per point: index, label, then one column per entry of `columns`.
pub fn point_table(poset: &MetricPoset, headers: &[String], columns: &[Vec<f64>]) -> String {
    let mut out = String::from("point\tlabel");
    for h in headers {
        out.push('\t');
        out.push_str(h);
    }
    out.push('\n');
    for x in 0..poset.len() {
        let _ = write!(out, "{x}\t{}", poset.label(x));
        for c in columns {
            let _ = write!(out, "\t{}", c[x]);
        }
        out.push('\n');
    }
    out
}

/// [`point_table`] for point-major values, with columns `f0, f1, ...`.
pub fn values_table(poset: &MetricPoset, values: &[Vec<f64>]) -> String {
    let width = values.first().map_or(0, Vec::len);
    let headers: Vec<String> = (0..width).map(|t| format!("f{t}")).collect();
    let columns: Vec<Vec<f64>> = (0..width).map(|t| values.iter().map(|v| v[t]).collect()).collect();
    point_table(poset, &headers, &columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::{extend, AdmissibleInterval, ExtensionPolicy};

    fn ctx() -> Context {
        Context::default()
    }

    #[test]
    fn instance_round_trip() {
        let json = r#"{"labels":["top","a","b","bottom"],
            "dist":[[0,1,1,2],[1,0,2,1],[1,2,0,1],[2,1,1,0]],
            "order":{"pairs":[[0,1],[0,2],[1,3],[2,3]]}}"#;
        let file: InstanceFile = serde_json::from_str(json).unwrap();
        assert!(file.order.closure);
        let p = file.to_poset(&ctx()).unwrap();
        assert!(p.geq(0, 3));
        assert_eq!(p.label(3), "bottom");
        let back = InstanceFile::from_poset(&p);
        assert_eq!(back.order.pairs, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(back.to_poset(&ctx()).unwrap(), p);
    }

    #[test]
    fn unclosed_pairs_are_rejected_without_closure() {
        let file = InstanceFile {
            labels: None,
            dist: vec![vec![0.0, 1.0, 2.0], vec![1.0, 0.0, 1.0], vec![2.0, 1.0, 0.0]],
            order: OrderFile {
                pairs: vec![(0, 1), (1, 2)],
                closure: false,
            },
        };
        assert!(matches!(file.to_poset(&ctx()), Err(Error::InvalidOrder(_))));
        let bad = InstanceFile {
            order: OrderFile {
                pairs: vec![(0, 7)],
                closure: true,
            },
            ..file
        };
        assert_eq!(bad.to_poset(&ctx()), Err(Error::IndexOutOfRange { index: 7, n: 3 }));
    }

    #[test]
    fn function_formats() {
        let f: PartialFunction = serde_json::from_str(r#"{"domain":[2,0],"values":[1.5,[0.5]],"K":2}"#).unwrap();
        assert_eq!(f.domain().as_slice(), &[0, 2]);
        assert_eq!(f.get(2), Some(&[1.5][..]));
        assert_eq!(f.k(), 2.0);
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v, serde_json::json!({"domain":[0,2],"values":[[0.5],[1.5]],"K":2.0}));
        assert!(serde_json::from_str::<PartialFunction>(r#"{"domain":[],"values":[]}"#).is_err());
    }

    #[test]
    fn infinite_endpoints_are_strings() {
        let iv = AdmissibleInterval {
            point: 0,
            coord: 0,
            a: f64::NEG_INFINITY,
            b: f64::INFINITY,
            alpha: -1.0,
            beta: 2.0,
        };
        let v = serde_json::to_value(iv).unwrap();
        assert_eq!(v["a"], "-inf");
        assert_eq!(v["b"], "+inf");
        assert_eq!(v["alpha"], -1.0);
        assert_eq!(serde_json::from_value::<AdmissibleInterval>(v).unwrap(), iv);
    }

    #[test]
    fn outcome_json_and_table() {
        let p = MetricPoset::from_parts(&[vec![0.0, 1.0], vec![1.0, 0.0]], &[(0, 1)], &ctx()).unwrap();
        let f = PartialFunction::scalar(vec![1], vec![0.0], 1.0).unwrap();
        let out = extend(&p, &f, &ExtensionPolicy::default(), &ctx()).unwrap();
        let v = serde_json::to_value(&out).unwrap();
        assert_eq!(v["status"], "Feasible");
        assert_eq!(v["K"], 1.0);
        assert_eq!(v["values"], serde_json::json!([[0.0], [0.0]]));
        assert_eq!(values_table(&p, &out.values), "point\tlabel\tf0\n0\t0\t0\n1\t1\t0\n");
    }
}
