//! Deletion and contraction of ground-set elements.
//!
//! Both minors live on `E ∖ A`, with the surviving labels in their original
//! order. Deletion restricts every covector; contraction restricts only the
//! covectors that vanish on all of `A`.

use crate::error::{ComError, Result};
use crate::sign::SignVector;
use crate::system::{GroundSet, SignSystem};

fn removal_mask(len: usize, removed: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; len];
    for &e in removed {
        *mask
            .get_mut(e)
            .ok_or_else(|| ComError::UnknownElement(format!("#{e}")))? = true;
    }
    Ok(mask)
}

/// `X ∖ A` for the positions in `removed`.
pub fn restrict(x: &SignVector, removed: &[usize]) -> Result<SignVector> {
    Ok(x.without(&removal_mask(x.len(), removed)?))
}

/// `X ∖ A` with `A` given by labels of `ground`.
pub fn restrict_labels<S: AsRef<str>>(
    ground: &GroundSet,
    x: &SignVector,
    labels: &[S],
) -> Result<SignVector> {
    if x.len() != ground.len() {
        return Err(ComError::DimensionMismatch {
            expected: ground.len(),
            found: x.len(),
        });
    }
    restrict(x, &ground.resolve(labels)?)
}

pub fn delete<S: AsRef<str>>(system: &SignSystem, labels: &[S]) -> Result<SignSystem> {
    delete_positions(system, &system.ground().resolve(labels)?)
}

pub fn contract<S: AsRef<str>>(system: &SignSystem, labels: &[S]) -> Result<SignSystem> {
    contract_positions(system, &system.ground().resolve(labels)?)
}

pub fn delete_positions(system: &SignSystem, removed: &[usize]) -> Result<SignSystem> {
    minor(system, removed, false)
}

/// May return a system with no covectors; that is not an error.
pub fn contract_positions(system: &SignSystem, removed: &[usize]) -> Result<SignSystem> {
    minor(system, removed, true)
}

fn minor(system: &SignSystem, removed: &[usize], contraction: bool) -> Result<SignSystem> {
    let mask = removal_mask(system.ground().len(), removed)?;
    let covectors = system
        .iter()
        .filter(|x| !contraction || removed.iter().all(|&e| x[e].is_zero()))
        .map(|x| x.without(&mask));
    SignSystem::new(system.ground().without(&mask), covectors)
}
