//! Signs and sign vectors over `{-1, 0, +1}`.
//!
//! A [`SignVector`] is position-indexed; element labels live on the owning
//! [`GroundSet`](crate::GroundSet). Vectors order lexicographically with
//! `- < 0 < +`, which is the mixed-radix order used for all sorted output.

use std::fmt;
use std::ops::{Index, Neg};

use crate::error::{ComError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(i8)]
pub enum Sign {
    Minus = -1,
    Zero = 0,
    Plus = 1,
}

impl Sign {
    pub const ALL: [Sign; 3] = [Sign::Minus, Sign::Zero, Sign::Plus];

    pub fn from_i8(value: i8) -> Option<Sign> {
        match value {
            -1 => Some(Sign::Minus),
            0 => Some(Sign::Zero),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }

    /// Sign of an ordering result, so `Sign::of(x.cmp(&0))` works for any `Ord` scalar.
    pub fn of(ordering: std::cmp::Ordering) -> Sign {
        match ordering {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        }
    }

    #[inline]
    pub fn to_i8(self) -> i8 {
        self as i8
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    #[inline]
    fn neg(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(entries: Vec<Sign>) -> Self {
        SignVector(entries)
    }

    pub fn zero(len: usize) -> Self {
        SignVector(vec![Sign::Zero; len])
    }

    pub fn from_i8s(values: &[i8]) -> Option<Self> {
        values
            .iter()
            .map(|&v| Sign::from_i8(v))
            .collect::<Option<Vec<_>>>()
            .map(SignVector)
    }

    /// Parses the compact `+-0` notation; `()` is the empty vector.
    pub fn parse(text: &str) -> Option<Self> {
        if text == "()" {
            return Some(SignVector(Vec::new()));
        }
        text.chars()
            .map(Sign::from_char)
            .collect::<Option<Vec<_>>>()
            .map(SignVector)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Sign] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        self.0.iter().copied()
    }

    pub fn to_i8s(&self) -> Vec<i8> {
        self.0.iter().map(|s| s.to_i8()).collect()
    }

    fn check_len(&self, other: &SignVector) -> Result<()> {
        if self.len() != other.len() {
            return Err(ComError::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// `X ∘ Y`: takes `X_e` where it is nonzero, `Y_e` otherwise.
    pub fn compose(&self, other: &SignVector) -> Result<SignVector> {
        self.check_len(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &SignVector) -> SignVector {
        SignVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&x, &y)| if x.is_zero() { y } else { x })
                .collect(),
        )
    }

    /// `X ∘ -Y` without materialising `-Y`.
    pub(crate) fn compose_neg_unchecked(&self, other: &SignVector) -> SignVector {
        SignVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&x, &y)| if x.is_zero() { -y } else { x })
                .collect(),
        )
    }

    pub fn negate(&self) -> SignVector {
        SignVector(self.0.iter().map(|&s| -s).collect())
    }

    /// Positions `e` with `X_e = -Y_e ≠ 0`.
    pub fn separation(&self, other: &SignVector) -> Result<Vec<usize>> {
        self.check_len(other)?;
        Ok(self.separation_unchecked(other))
    }

    pub(crate) fn separation_unchecked(&self, other: &SignVector) -> Vec<usize> {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .filter(|(_, (&x, &y))| !x.is_zero() && x == -y)
            .map(|(e, _)| e)
            .collect()
    }

    /// The face order: `X ≼ Y` iff every nonzero entry of `X` agrees with `Y`.
    pub fn leq(&self, other: &SignVector) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.leq_unchecked(other))
    }

    #[inline]
    pub(crate) fn leq_unchecked(&self, other: &SignVector) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(&x, &y)| x.is_zero() || x == y)
    }

    pub fn support(&self) -> Vec<usize> {
        self.positions(|s| !s.is_zero())
    }

    pub fn zero_set(&self) -> Vec<usize> {
        self.positions(Sign::is_zero)
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|s| !s.is_zero()).count()
    }

    pub(crate) fn same_support(&self, other: &SignVector) -> bool {
        self.len() == other.len()
            && self
                .0
                .iter()
                .zip(&other.0)
                .all(|(x, y)| x.is_zero() == y.is_zero())
    }

    fn positions(&self, pred: impl Fn(Sign) -> bool) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| pred(s))
            .map(|(e, _)| e)
            .collect()
    }

    /// Drops the coordinates whose indices are flagged in `removed`.
    pub(crate) fn without(&self, removed: &[bool]) -> SignVector {
        SignVector(
            self.0
                .iter()
                .zip(removed)
                .filter(|(_, &r)| !r)
                .map(|(&s, _)| s)
                .collect(),
        )
    }
}

impl Index<usize> for SignVector {
    type Output = Sign;

    fn index(&self, index: usize) -> &Sign {
        &self.0[index]
    }
}

impl From<Vec<Sign>> for SignVector {
    fn from(entries: Vec<Sign>) -> Self {
        SignVector(entries)
    }
}

impl FromIterator<Sign> for SignVector {
    fn from_iter<I: IntoIterator<Item = Sign>>(iter: I) -> Self {
        SignVector(iter.into_iter().collect())
    }
}

impl Neg for &SignVector {
    type Output = SignVector;

    fn neg(self) -> SignVector {
        self.negate()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for s in &self.0 {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

/// Every sign vector of length `len`, in mixed-radix order.
pub fn all_sign_vectors(len: usize) -> impl Iterator<Item = SignVector> {
    let total = 3usize.pow(len as u32);
    (0..total).map(move |mut index| {
        let mut entries = vec![Sign::Zero; len];
        for slot in entries.iter_mut().rev() {
            *slot = Sign::ALL[index % 3];
            index /= 3;
        }
        SignVector(entries)
    })
}
