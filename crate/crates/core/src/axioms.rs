//! Brute-force decision procedures for the covector axioms.
//!
//! * (FS) face symmetry: `X, Y ∈ 𝓛 ⇒ X ∘ -Y ∈ 𝓛`
//! * (SE) strong elimination
//! * (C) composition, (Sym) symmetry, (Z) zero vector
//!
//! A COM satisfies FS and SE; an oriented matroid satisfies C, Sym and SE,
//! which for a COM is the same as containing the zero vector. [`is_om`]
//! evaluates both characterisations and reports an error if they disagree.
//! The empty system satisfies C, Sym and SE vacuously; like the zero-vector
//! route, the classical route only accepts nonempty systems.
//!
//! Witnesses are the first violation in covector order, independent of how
//! the outer loop is split across threads.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{ComError, Result};
use crate::sign::SignVector;
use crate::system::SignSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    #[serde(rename = "FS")]
    FaceSymmetry,
    #[serde(rename = "SE")]
    StrongElimination,
    #[serde(rename = "C")]
    Composition,
    #[serde(rename = "Sym")]
    Symmetry,
    #[serde(rename = "Z")]
    ZeroVector,
}

impl Axiom {
    pub fn short_name(self) -> &'static str {
        match self {
            Axiom::FaceSymmetry => "FS",
            Axiom::StrongElimination => "SE",
            Axiom::Composition => "C",
            Axiom::Symmetry => "Sym",
            Axiom::ZeroVector => "Z",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// A concrete violation of one axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `X ∘ -Y` (FS) or `X ∘ Y` (C) is missing.
    Pair {
        x: SignVector,
        y: SignVector,
    },
    /// No `Z` eliminates `element` between `x` and `y`.
    Elimination {
        x: SignVector,
        y: SignVector,
        element: usize,
    },
    /// `-X` is missing.
    Single(SignVector),
    MissingZero,
}

impl Witness {
    pub fn vectors(&self) -> Vec<&SignVector> {
        match self {
            Witness::Pair { x, y } | Witness::Elimination { x, y, .. } => vec![x, y],
            Witness::Single(x) => vec![x],
            Witness::MissingZero => vec![],
        }
    }

    pub fn element(&self) -> Option<usize> {
        match self {
            Witness::Elimination { element, .. } => Some(*element),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    fn new(axiom: Axiom, witness: Option<Witness>) -> Self {
        AxiomCheck { axiom, witness }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub fs: AxiomCheck,
    pub se: AxiomCheck,
    pub c: AxiomCheck,
    pub sym: AxiomCheck,
    pub z: AxiomCheck,
    pub empty: bool,
}

impl AxiomReport {
    pub fn checks(&self) -> [&AxiomCheck; 5] {
        [&self.fs, &self.se, &self.c, &self.sym, &self.z]
    }

    pub fn is_com(&self) -> bool {
        self.fs.holds() && self.se.holds()
    }

    /// Both oriented-matroid characterisations, which must agree.
    pub fn is_om(&self) -> Result<bool> {
        om_from_parts(
            !self.empty,
            self.c.holds(),
            self.sym.holds(),
            self.se.holds(),
            self.fs.holds(),
            self.z.holds(),
        )
    }
}

pub fn check_all(system: &SignSystem) -> AxiomReport {
    AxiomReport {
        fs: check_fs(system),
        se: check_se(system),
        c: check_c(system),
        sym: check_sym(system),
        z: check_z(system),
        empty: system.is_empty(),
    }
}

/// First `(X, Y)` in covector order with `X ∘ -Y ∉ 𝓛`.
pub fn check_fs(system: &SignSystem) -> AxiomCheck {
    let witness = first_missing_pair(system, |x, y| x.compose_neg_unchecked(y));
    AxiomCheck::new(Axiom::FaceSymmetry, witness)
}

pub fn check_c(system: &SignSystem) -> AxiomCheck {
    let witness = first_missing_pair(system, |x, y| x.compose_unchecked(y));
    AxiomCheck::new(Axiom::Composition, witness)
}

fn first_missing_pair<F>(system: &SignSystem, op: F) -> Option<Witness>
where
    F: Fn(&SignVector, &SignVector) -> SignVector + Sync,
{
    let covectors = system.covectors();
    covectors.par_iter().find_map_first(|x| {
        covectors
            .iter()
            .find(|y| !system.contains(&op(x, y)))
            .map(|y| Witness::Pair {
                x: x.clone(),
                y: y.clone(),
            })
    })
}

pub fn check_sym(system: &SignSystem) -> AxiomCheck {
    let witness = system
        .iter()
        .find(|x| !system.contains(&x.negate()))
        .map(|x| Witness::Single(x.clone()));
    AxiomCheck::new(Axiom::Symmetry, witness)
}

pub fn check_z(system: &SignSystem) -> AxiomCheck {
    let zero = SignVector::zero(system.ground().len());
    let witness = (!system.contains(&zero)).then_some(Witness::MissingZero);
    AxiomCheck::new(Axiom::ZeroVector, witness)
}

/// Strong elimination, scanning 𝓛 for each required `Z`.
///
/// `S(X, Y)` is symmetric and `X ∘ Y`, `Y ∘ X` agree off it, so only pairs
/// `i < j` in covector order are examined.
pub fn check_se(system: &SignSystem) -> AxiomCheck {
    let covectors = system.covectors();
    let witness = (0..covectors.len()).into_par_iter().find_map_first(|i| {
        let x = &covectors[i];
        covectors[i + 1..].iter().find_map(|y| {
            let separation = x.separation_unchecked(y);
            if separation.is_empty() {
                return None;
            }
            let target = x.compose_unchecked(y);
            let mut off_separation = vec![true; target.len()];
            for &e in &separation {
                off_separation[e] = false;
            }
            separation
                .iter()
                .find(|&&e| !has_eliminator(covectors, &target, &off_separation, e))
                .map(|&e| Witness::Elimination {
                    x: x.clone(),
                    y: y.clone(),
                    element: e,
                })
        })
    });
    AxiomCheck::new(Axiom::StrongElimination, witness)
}

fn has_eliminator(
    covectors: &[SignVector],
    target: &SignVector,
    off_separation: &[bool],
    element: usize,
) -> bool {
    covectors.iter().any(|z| {
        z[element].is_zero()
            && off_separation
                .iter()
                .enumerate()
                .all(|(f, &off)| !off || z[f] == target[f])
    })
}

pub fn is_com(system: &SignSystem) -> bool {
    check_fs(system).holds() && check_se(system).holds()
}

/// Oriented-matroid test via `C ∧ Sym ∧ SE` and via `COM ∧ Z`.
pub fn is_om(system: &SignSystem) -> Result<bool> {
    check_all(system).is_om()
}

fn om_from_parts(nonempty: bool, c: bool, sym: bool, se: bool, fs: bool, z: bool) -> Result<bool> {
    let classical = nonempty && c && sym && se;
    let via_com = fs && se && z;
    if classical != via_com {
        return Err(ComError::Inconsistent(format!(
            "oriented matroid routes disagree: C∧Sym∧SE = {classical}, FS∧SE∧Z = {via_com}"
        )));
    }
    Ok(classical)
}
