//! Affine hyperplane arrangements and their apartments.
//!
//! A hyperplane `a·x = b` splits ℝⁿ into `a·x < b` (sign `-`), the hyperplane
//! itself (`0`) and `a·x > b` (`+`). Sample points, one or more per chamber
//! of an apartment, give the topes; the covectors are then reconstructed from
//! those topes.
//!
//! Arithmetic is exact while every coordinate involved is a rational. As soon
//! as one value is a float, evaluation switches to `f64` and `|a·x − b| ≤ ε`
//! counts as lying on the hyperplane.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{ComError, Result};
use crate::minors;
use crate::reconstruction::{reconstruct_com, ReconstructOptions, TopeSet};
use crate::sign::{Sign, SignVector};
use crate::system::{GroundSet, SignSystem};

pub const DEFAULT_EPSILON: f64 = 1e-9;

/// A coordinate or coefficient: an exact rational or a float.
#[derive(Debug, Clone, PartialEq)]
pub enum Number {
    Exact(BigRational),
    Float(f64),
}

impl Number {
    pub fn is_exact(&self) -> bool {
        matches!(self, Number::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Number::Float(x) => *x,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Number::Exact(q) => q.is_zero(),
            Number::Float(x) => *x == 0.0,
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            Number::Exact(q) => Some(q),
            Number::Float(_) => None,
        }
    }
}

impl From<i64> for Number {
    fn from(value: i64) -> Self {
        Number::Exact(BigRational::from_integer(BigInt::from(value)))
    }
}

impl From<BigRational> for Number {
    fn from(value: BigRational) -> Self {
        Number::Exact(value)
    }
}

impl From<f64> for Number {
    fn from(value: f64) -> Self {
        Number::Float(value)
    }
}

/// Parses `"-3"`, `"1.25"`, `"2.5e-3"` or `"7/4"` exactly.
impl FromStr for Number {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, Self::Err> {
        parse_rational(text.trim())
            .map(Number::Exact)
            .ok_or_else(|| format!("`{text}` is not an integer, decimal or p/q rational"))
    }
}

fn parse_rational(text: &str) -> Option<BigRational> {
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let mut numerator: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    if negative {
        numerator = -numerator;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numerator * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numerator, num_traits::pow(ten, (-scale) as usize))
    };
    Some(value)
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Exact(q) => write!(f, "{q}"),
            Number::Float(x) => write!(f, "{x}"),
        }
    }
}

/// `{x ∈ ℝⁿ : coeffs·x = offset}` with a nonzero normal.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    label: String,
    coeffs: Vec<Number>,
    offset: Number,
}

impl Hyperplane {
    pub fn new(label: impl Into<String>, coeffs: Vec<Number>, offset: Number) -> Result<Self> {
        let label = label.into();
        if coeffs.iter().all(Number::is_zero) {
            return Err(ComError::ZeroNormal(label));
        }
        Ok(Hyperplane {
            label,
            coeffs,
            offset,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn coeffs(&self) -> &[Number] {
        &self.coeffs
    }

    pub fn offset(&self) -> &Number {
        &self.offset
    }

    pub fn dimension(&self) -> usize {
        self.coeffs.len()
    }

    fn is_exact(&self) -> bool {
        self.offset.is_exact() && self.coeffs.iter().all(Number::is_exact)
    }

    /// Side of `point` relative to this hyperplane.
    pub fn sign_at(&self, point: &Point, epsilon: f64) -> Result<Sign> {
        if point.dimension() != self.dimension() {
            return Err(ComError::DimensionMismatch {
                expected: self.dimension(),
                found: point.dimension(),
            });
        }
        if self.is_exact() && point.is_exact() {
            let mut value = -self.offset.exact().unwrap().clone();
            for (a, x) in self.coeffs.iter().zip(point.coords()) {
                value += a.exact().unwrap() * x.exact().unwrap();
            }
            return Ok(if value.is_zero() {
                Sign::Zero
            } else if value.is_positive() {
                Sign::Plus
            } else {
                Sign::Minus
            });
        }
        let value: f64 = self
            .coeffs
            .iter()
            .zip(point.coords())
            .map(|(a, x)| a.to_f64() * x.to_f64())
            .sum::<f64>()
            - self.offset.to_f64();
        Ok(if value.abs() <= epsilon {
            Sign::Zero
        } else if value > 0.0 {
            Sign::Plus
        } else {
            Sign::Minus
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<Number>,
}

impl Point {
    pub fn new(coords: Vec<Number>) -> Self {
        Point { coords }
    }

    pub fn coords(&self) -> &[Number] {
        &self.coords
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn is_exact(&self) -> bool {
        self.coords.iter().all(Number::is_exact)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Ordered hyperplanes in ℝⁿ; the order fixes covector coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Arrangement {
    dimension: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(dimension: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        if let Some(h) = hyperplanes.iter().find(|h| h.dimension() != dimension) {
            return Err(ComError::DimensionMismatch {
                expected: dimension,
                found: h.dimension(),
            });
        }
        // Label uniqueness is the ground set's invariant.
        GroundSet::new(hyperplanes.iter().map(|h| h.label.clone()))?;
        Ok(Arrangement {
            dimension,
            hyperplanes,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.hyperplanes.iter().map(|h| h.label.clone()))
            .expect("labels checked at construction")
    }

    pub fn is_exact(&self) -> bool {
        self.hyperplanes.iter().all(Hyperplane::is_exact)
    }

    /// `σ(v) = (σ_H(v))_H` in hyperplane order.
    pub fn sign_vector(&self, point: &Point, epsilon: f64) -> Result<SignVector> {
        self.hyperplanes
            .iter()
            .map(|h| h.sign_at(point, epsilon))
            .collect()
    }
}

pub fn sign_map(hyperplane: &Hyperplane, point: &Point, epsilon: f64) -> Result<Sign> {
    hyperplane.sign_at(point, epsilon)
}

pub fn arrangement_sign(
    arrangement: &Arrangement,
    point: &Point,
    epsilon: f64,
) -> Result<SignVector> {
    arrangement.sign_vector(point, epsilon)
}

/// Distinct sign vectors of points that each lie inside a chamber.
pub fn topes_from_points(
    arrangement: &Arrangement,
    points: &[Point],
    epsilon: f64,
) -> Result<TopeSet> {
    let topes = points
        .iter()
        .enumerate()
        .map(|(index, point)| {
            let tope = arrangement.sign_vector(point, epsilon)?;
            let on_plane = tope.entries().iter().position(|s| s.is_zero());
            match on_plane {
                Some(e) => Err(ComError::OnHyperplane {
                    point: index + 1,
                    hyperplane: arrangement.hyperplanes[e].label.clone(),
                }),
                None => Ok(tope),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    TopeSet::new(arrangement.ground(), topes)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApartmentOptions {
    /// Float-mode tolerance for "on the hyperplane".
    pub epsilon: f64,
    /// Delete hyperplanes that miss the apartment (constant coordinates).
    pub reduce: bool,
    pub reconstruct: ReconstructOptions,
}

impl Default for ApartmentOptions {
    fn default() -> Self {
        ApartmentOptions {
            epsilon: DEFAULT_EPSILON,
            reduce: false,
            reconstruct: ReconstructOptions::default(),
        }
    }
}

/// Covectors of the faces of the apartment sampled by `points`.
pub fn apartment_to_com(
    arrangement: &Arrangement,
    points: &[Point],
    options: ApartmentOptions,
) -> Result<SignSystem> {
    let topes = topes_from_points(arrangement, points, options.epsilon)?;
    let com = reconstruct_com(&topes, options.reconstruct)?;
    if options.reduce {
        minors::delete_positions(&com, &constant_coordinates(&com))
    } else {
        Ok(com)
    }
}

/// Positions carrying the same nonzero sign in every covector.
pub fn constant_coordinates(system: &SignSystem) -> Vec<usize> {
    let Some(first) = system.covectors().first() else {
        return Vec::new();
    };
    (0..system.ground().len())
        .filter(|&e| !first[e].is_zero() && system.iter().all(|x| x[e] == first[e]))
        .collect()
}
