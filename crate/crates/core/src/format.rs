//! File formats.
//!
//! Covector text: one sign vector per line written with `+`, `0`, `-`; lines
//! starting with `#` are comments; the first non-comment line may be a header
//! `elements: a,b,c`. Without a header the elements are `e1, …, en`. The empty
//! sign vector (over an empty ground set) is written `()`.
//!
//! ```text
//! # two topes
//! elements: h1,h2,h3
//! +-0
//! -+0
//! ```
//!
//! Covector JSON: `{"elements": [...], "covectors": [[-1, 0, 1], ...]}`.
//!
//! Arrangement JSON:
//! `{"dimension": 2, "hyperplanes": [{"label": "h1", "coeffs": [0, 1], "offset": 0}],
//!   "points": [[0, 4], ["0", "1.5"]]}`. Integers and strings (`"1.5"`, `"3/4"`)
//! are exact; non-integer JSON numbers such as `1.5` are floats.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arrangement::{Arrangement, Hyperplane, Number, Point};
use crate::error::{ComError, Result};
use crate::sign::SignVector;
use crate::system::{GroundSet, SignSystem};

const HEADER: &str = "elements:";

pub fn parse_covectors(text: &str) -> Result<SignSystem> {
    let mut ground: Option<GroundSet> = None;
    let mut covectors = Vec::new();
    let mut seen_content = false;
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !seen_content {
            seen_content = true;
            if let Some(rest) = line.strip_prefix(HEADER) {
                let labels: Vec<&str> = rest
                    .split(',')
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .collect();
                ground = Some(GroundSet::new(labels).map_err(|e| ComError::Parse {
                    line: line_no,
                    message: e.to_string(),
                })?);
                continue;
            }
        }
        let x = SignVector::parse(line).ok_or_else(|| ComError::Parse {
            line: line_no,
            message: format!("`{line}` is not a sign vector over `+`, `0`, `-`"),
        })?;
        let expected = ground.as_ref().map_or(x.len(), GroundSet::len);
        if x.len() != expected {
            return Err(ComError::Parse {
                line: line_no,
                message: format!("expected {expected} signs, found {}", x.len()),
            });
        }
        if ground.is_none() {
            ground = Some(GroundSet::numbered(x.len()));
        }
        covectors.push(x);
    }
    SignSystem::new(ground.unwrap_or_else(|| GroundSet::numbered(0)), covectors)
}

pub fn write_covectors(system: &SignSystem) -> String {
    let mut out = format!("{HEADER} {}\n", system.ground().labels().join(","));
    for x in system {
        out.push_str(&x.to_string());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CovectorDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    pub covectors: Vec<Vec<i8>>,
}

impl CovectorDocument {
    pub fn from_system(system: &SignSystem) -> Self {
        CovectorDocument {
            elements: Some(system.ground().labels().to_vec()),
            covectors: system.iter().map(SignVector::to_i8s).collect(),
        }
    }

    pub fn into_system(self) -> Result<SignSystem> {
        let covectors = self
            .covectors
            .iter()
            .map(|row| {
                SignVector::from_i8s(row)
                    .ok_or_else(|| ComError::Json(format!("{row:?} has entries outside -1, 0, 1")))
            })
            .collect::<Result<Vec<_>>>()?;
        let ground = match self.elements {
            Some(labels) => GroundSet::new(labels)?,
            None => GroundSet::numbered(covectors.first().map_or(0, SignVector::len)),
        };
        SignSystem::new(ground, covectors)
    }
}

pub fn parse_covectors_json(text: &str) -> Result<SignSystem> {
    let doc: CovectorDocument =
        serde_json::from_str(text).map_err(|e| ComError::Json(e.to_string()))?;
    doc.into_system()
}

pub fn write_covectors_json(system: &SignSystem) -> String {
    serde_json::to_string(&CovectorDocument::from_system(system)).expect("plain data serializes")
}

/// Accepts either covector format, deciding by the first non-blank character.
pub fn parse_covectors_any(text: &str) -> Result<SignSystem> {
    if text.trim_start().starts_with('{') {
        parse_covectors_json(text)
    } else {
        parse_covectors(text)
    }
}

/// An arrangement together with its sample points.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrangementInput {
    pub arrangement: Arrangement,
    pub points: Vec<Point>,
}

impl ArrangementInput {
    pub fn is_exact(&self) -> bool {
        self.arrangement.is_exact() && self.points.iter().all(Point::is_exact)
    }
}

pub fn parse_arrangement(text: &str) -> Result<ArrangementInput> {
    let value: Value = serde_json::from_str(text).map_err(|e| ComError::Json(e.to_string()))?;
    let object = value
        .as_object()
        .ok_or_else(|| ComError::Json("expected a JSON object".into()))?;
    let dimension = object
        .get("dimension")
        .and_then(Value::as_u64)
        .ok_or_else(|| ComError::Json("`dimension` must be a nonnegative integer".into()))?
        as usize;
    let hyperplanes = object
        .get("hyperplanes")
        .and_then(Value::as_array)
        .ok_or_else(|| ComError::Json("`hyperplanes` must be an array".into()))?
        .iter()
        .enumerate()
        .map(|(i, h)| parse_hyperplane(i, h))
        .collect::<Result<Vec<_>>>()?;
    let points = match object.get("points") {
        None => Vec::new(),
        Some(points) => points
            .as_array()
            .ok_or_else(|| ComError::Json("`points` must be an array".into()))?
            .iter()
            .map(|p| number_array(p, "point").map(Point::new))
            .collect::<Result<Vec<_>>>()?,
    };
    if let Some(p) = points.iter().find(|p| p.dimension() != dimension) {
        return Err(ComError::DimensionMismatch {
            expected: dimension,
            found: p.dimension(),
        });
    }
    Ok(ArrangementInput {
        arrangement: Arrangement::new(dimension, hyperplanes)?,
        points,
    })
}

fn parse_hyperplane(index: usize, value: &Value) -> Result<Hyperplane> {
    let label = match value.get("label") {
        None => format!("h{}", index + 1),
        Some(Value::String(s)) => s.clone(),
        Some(other) => return Err(ComError::Json(format!("label {other} is not a string"))),
    };
    let coeffs = number_array(
        value
            .get("coeffs")
            .ok_or_else(|| ComError::Json(format!("hyperplane `{label}` has no `coeffs`")))?,
        "coeffs",
    )?;
    let offset = match value.get("offset") {
        None => Number::from(0),
        Some(v) => parse_number(v)?,
    };
    Hyperplane::new(label, coeffs, offset)
}

fn number_array(value: &Value, what: &str) -> Result<Vec<Number>> {
    value
        .as_array()
        .ok_or_else(|| ComError::Json(format!("{what} must be an array of numbers")))?
        .iter()
        .map(parse_number)
        .collect()
}

fn parse_number(value: &Value) -> Result<Number> {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Number::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(format!("{u}").parse().expect("integer text"))
            } else {
                Ok(Number::Float(n.as_f64().expect("finite JSON number")))
            }
        }
        Value::String(s) => s.parse().map_err(ComError::Json),
        other => Err(ComError::Json(format!("{other} is not a number"))),
    }
}
