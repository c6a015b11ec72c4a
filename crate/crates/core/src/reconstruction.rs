//! Recovering a covector set from its topes.
//!
//! For a COM with tope set 𝒯 the covectors are exactly
//! `{X ∈ {-1,0,1}^E : X ∘ -T ∈ 𝒯 for all T ∈ 𝒯}`; for an oriented matroid the
//! classical form uses `X ∘ T` instead. Both scans only visit candidates whose
//! support lies inside the common tope support `F`: outside `F` every tope is
//! zero, so `(X ∘ ±T)_e = X_e` there and must vanish.
//!
//! Candidates are packed as a pair of bitmasks over `F`. Because every tope has
//! full support on `F`, `X ∘ ±T` is determined by its positive mask alone, and
//! tope membership is a hash lookup on a single `u64`.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::axioms;
use crate::error::{ComError, Result, TopeError};
use crate::sign::{Sign, SignVector};
use crate::system::{check_tope_supports, GroundSet, SignSystem};

/// Largest common support scanned without `force` (3^20 ≈ 3.5·10⁹ candidates).
pub const SUPPORT_LIMIT: usize = 20;

/// Largest support whose candidate count 3^k fits in a `u64` index.
const PACKED_LIMIT: usize = 40;

const SEQUENTIAL_CUTOFF: u64 = 1 << 14;

/// A nonempty set of sign vectors sharing one support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopeSet {
    system: SignSystem,
    common_support: Vec<usize>,
}

impl TopeSet {
    pub fn new(ground: GroundSet, topes: impl IntoIterator<Item = SignVector>) -> Result<Self> {
        Self::from_system(SignSystem::new(ground, topes)?)
    }

    /// Validates that `system` is nonempty with a single shared support.
    pub fn from_system(system: SignSystem) -> Result<Self> {
        check_tope_supports(system.covectors()).map_err(ComError::InvalidTopes)?;
        let common_support = system.covectors()[0].support();
        Ok(TopeSet {
            system,
            common_support,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        self.system.ground()
    }

    pub fn topes(&self) -> &[SignVector] {
        self.system.covectors()
    }

    pub fn len(&self) -> usize {
        self.system.len()
    }

    pub fn is_empty(&self) -> bool {
        self.system.is_empty()
    }

    pub fn common_support(&self) -> &[usize] {
        &self.common_support
    }

    pub fn as_system(&self) -> &SignSystem {
        &self.system
    }

    pub fn into_system(self) -> SignSystem {
        self.system
    }
}

/// The ≼-maximal covectors of `system`, without checking that they share a support.
pub fn maximal_elements(system: &SignSystem) -> Result<SignSystem> {
    if system.is_empty() {
        return Err(ComError::EmptySystem);
    }
    let covectors = system.covectors();
    let maximal: Vec<SignVector> = covectors
        .par_iter()
        .filter(|x| {
            let size = x.support_size();
            !covectors
                .iter()
                .any(|y| y.support_size() > size && x.leq_unchecked(y))
        })
        .cloned()
        .collect();
    Ok(SignSystem::from_sorted_unchecked(
        system.ground().clone(),
        maximal,
    ))
}

/// The topes of `system`: covectors covered by nothing.
///
/// Fails with [`ComError::InvalidTopes`] when the maximal elements do not
/// share a support, which never happens for a COM.
pub fn topes_of(system: &SignSystem) -> Result<TopeSet> {
    TopeSet::from_system(maximal_elements(system)?)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReconstructOptions {
    /// Skip the [`SUPPORT_LIMIT`] guard.
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    /// `X ∘ -T ∈ 𝒯`
    FaceSymmetry,
    /// `X ∘ T ∈ 𝒯`
    Composition,
}

/// Covectors of the COM whose topes are `topes`.
///
/// The formula is evaluated for any valid tope set; when `topes` is not the
/// tope set of some COM the result is still returned (see
/// [`verify_reconstruction`]).
pub fn reconstruct_com(topes: &TopeSet, options: ReconstructOptions) -> Result<SignSystem> {
    reconstruct(topes, options, Rule::FaceSymmetry)
}

/// Covectors of the oriented matroid whose topes are `topes`.
pub fn reconstruct_om(topes: &TopeSet, options: ReconstructOptions) -> Result<SignSystem> {
    reconstruct(topes, options, Rule::Composition)
}

fn reconstruct(topes: &TopeSet, options: ReconstructOptions, rule: Rule) -> Result<SignSystem> {
    let support = topes.common_support();
    let k = support.len();
    if k > SUPPORT_LIMIT && !options.force {
        return Err(ComError::TooLarge {
            support: k,
            limit: SUPPORT_LIMIT,
        });
    }
    if k > PACKED_LIMIT {
        return Err(ComError::TooLarge {
            support: k,
            limit: PACKED_LIMIT,
        });
    }

    let packed = PackedTopes::new(topes);
    let total = 3u64.pow(k as u32);

    let hits: Vec<(u64, u64)> = if total <= SEQUENTIAL_CUTOFF {
        packed.scan(0, total, rule)
    } else {
        let chunks = (rayon::current_num_threads() as u64 * 16).max(1);
        let chunk_len = total.div_ceil(chunks).max(SEQUENTIAL_CUTOFF);
        let starts: Vec<u64> = (0..total).step_by(chunk_len as usize).collect();
        starts
            .into_par_iter()
            .map(|start| packed.scan(start, (start + chunk_len).min(total), rule))
            .flatten_iter()
            .collect()
    };

    let n = topes.ground().len();
    let covectors = hits
        .into_iter()
        .map(|(pos, neg)| unpack(n, support, pos, neg))
        .collect();
    Ok(SignSystem::from_sorted_unchecked(
        topes.ground().clone(),
        covectors,
    ))
}

/// Topes as positive masks over the common support; bit `k-1-i` holds
/// coordinate `support[i]` so numeric order follows coordinate order.
struct PackedTopes {
    k: usize,
    full: u64,
    masks: Vec<u64>,
    members: HashSet<u64>,
}

impl PackedTopes {
    fn new(topes: &TopeSet) -> Self {
        let support = topes.common_support();
        let k = support.len();
        let masks: Vec<u64> = topes
            .topes()
            .iter()
            .map(|t| {
                support.iter().enumerate().fold(0u64, |mask, (i, &e)| {
                    if t[e] == Sign::Plus {
                        mask | bit(k, i)
                    } else {
                        mask
                    }
                })
            })
            .collect();
        let members = masks.iter().copied().collect();
        PackedTopes {
            k,
            full: (1u64 << k) - 1,
            masks,
            members,
        }
    }

    /// Candidates with mixed-radix index in `start..end`, as `(pos, neg)` masks.
    fn scan(&self, start: u64, end: u64, rule: Rule) -> Vec<(u64, u64)> {
        let mut hits = Vec::new();
        let mut digits = decode(start, self.k);
        for _ in start..end {
            let (pos, neg) = self.masks_of(&digits);
            if self.accepts(pos, neg, rule) {
                hits.push((pos, neg));
            }
            increment(&mut digits);
        }
        hits
    }

    fn masks_of(&self, digits: &[u8]) -> (u64, u64) {
        let mut pos = 0;
        let mut neg = 0;
        for (i, &d) in digits.iter().enumerate() {
            match d {
                0 => neg |= bit(self.k, i),
                2 => pos |= bit(self.k, i),
                _ => {}
            }
        }
        (pos, neg)
    }

    #[inline]
    fn accepts(&self, pos: u64, neg: u64, rule: Rule) -> bool {
        let free = self.full & !(pos | neg);
        self.masks.iter().all(|&t| {
            let filled = match rule {
                Rule::FaceSymmetry => free & !t,
                Rule::Composition => free & t,
            };
            self.members.contains(&(pos | filled))
        })
    }
}

#[inline]
fn bit(k: usize, i: usize) -> u64 {
    1u64 << (k - 1 - i)
}

/// Base-3 digits (0 = `-`, 1 = `0`, 2 = `+`), most significant first.
fn decode(mut index: u64, k: usize) -> Vec<u8> {
    let mut digits = vec![0u8; k];
    for d in digits.iter_mut().rev() {
        *d = (index % 3) as u8;
        index /= 3;
    }
    digits
}

fn increment(digits: &mut [u8]) {
    for d in digits.iter_mut().rev() {
        if *d == 2 {
            *d = 0;
        } else {
            *d += 1;
            return;
        }
    }
}

fn unpack(n: usize, support: &[usize], pos: u64, neg: u64) -> SignVector {
    let k = support.len();
    let mut entries = vec![Sign::Zero; n];
    for (i, &e) in support.iter().enumerate() {
        if pos & bit(k, i) != 0 {
            entries[e] = Sign::Plus;
        } else if neg & bit(k, i) != 0 {
            entries[e] = Sign::Minus;
        }
    }
    SignVector::new(entries)
}

/// Outcome of checking a reconstruction against its input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub is_com: bool,
    /// `topes_of(result)` equals the input tope set.
    pub topes_match: bool,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.is_com && self.topes_match
    }
}

pub fn verify_reconstruction(input: &TopeSet, result: &SignSystem) -> Verification {
    let topes_match = match topes_of(result) {
        Ok(found) => found.topes() == input.topes(),
        Err(_) => false,
    };
    Verification {
        is_com: axioms::is_com(result),
        topes_match,
    }
}

impl From<TopeError> for ComError {
    fn from(err: TopeError) -> Self {
        ComError::InvalidTopes(err)
    }
}
