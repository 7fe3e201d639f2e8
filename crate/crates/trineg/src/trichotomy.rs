//! Crisp concepts under a genus: a species subset, its opposite, and the
//! intermediary that fills the gap between them.
//!
//! The opposite subset is always supplied by the caller. Opposition is a
//! domain-knowledge relation between concept intensions and is not
//! computable from extensions alone.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::TrichotomyError;

/// A genus universe with a species subset and its opposite species.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConceptTriple<E: Ord + Clone> {
    universe: BTreeSet<E>,
    positive: BTreeSet<E>,
    opposite: BTreeSet<E>,
}

/// Both sides of the intermediary identity, for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarIdentity<E: Ord + Clone> {
    pub holds: bool,
    pub lhs: BTreeSet<E>,
    pub rhs: BTreeSet<E>,
}

/// Set complement within a universe.
pub fn contradictory<E: Ord + Clone>(
    universe: &BTreeSet<E>,
    subset: &BTreeSet<E>,
) -> Result<BTreeSet<E>, TrichotomyError>
where
    E: std::fmt::Debug,
{
    if let Some(stray) = subset.iter().find(|e| !universe.contains(e)) {
        return Err(TrichotomyError::NotInUniverse(format!("{stray:?}")));
    }
    Ok(universe.difference(subset).cloned().collect())
}

impl<E: Ord + Clone + std::fmt::Debug> ConceptTriple<E> {
    pub fn new(
        universe: impl IntoIterator<Item = E>,
        positive: impl IntoIterator<Item = E>,
        opposite: impl IntoIterator<Item = E>,
    ) -> Result<Self, TrichotomyError> {
        let universe: BTreeSet<E> = universe.into_iter().collect();
        let positive: BTreeSet<E> = positive.into_iter().collect();
        let opposite: BTreeSet<E> = opposite.into_iter().collect();
        for e in positive.iter().chain(opposite.iter()) {
            if !universe.contains(e) {
                return Err(TrichotomyError::NotInUniverse(format!("{e:?}")));
            }
        }
        if let Some(shared) = positive.intersection(&opposite).next() {
            return Err(TrichotomyError::Overlap(format!("{shared:?}")));
        }
        Ok(ConceptTriple {
            universe,
            positive,
            opposite,
        })
    }

    pub fn universe(&self) -> &BTreeSet<E> {
        &self.universe
    }

    pub fn positive(&self) -> &BTreeSet<E> {
        &self.positive
    }

    pub fn opposite(&self) -> &BTreeSet<E> {
        &self.opposite
    }

    /// Everything in the universe outside both species: the intermediary
    /// concept between the two opposites.
    pub fn intermediary(&self) -> BTreeSet<E> {
        self.universe
            .iter()
            .filter(|e| !self.positive.contains(e) && !self.opposite.contains(e))
            .cloned()
            .collect()
    }

    /// Checks that the intermediary equals the intersection of the two
    /// contradictory negations, returning both sides.
    pub fn verify_star_identity(&self) -> StarIdentity<E> {
        let lhs = self.intermediary();
        let non_positive = contradictory(&self.universe, &self.positive)
            .expect("positive validated at construction");
        let non_opposite = contradictory(&self.universe, &self.opposite)
            .expect("opposite validated at construction");
        let rhs: BTreeSet<E> = non_positive.intersection(&non_opposite).cloned().collect();
        StarIdentity {
            holds: lhs == rhs,
            lhs,
            rhs,
        }
    }
}

/// JSON form of a triple over string identifiers.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConceptTripleData {
    pub universe: Vec<String>,
    pub positive: Vec<String>,
    pub opposite: Vec<String>,
}

impl ConceptTripleData {
    pub fn build(&self) -> Result<ConceptTriple<String>, TrichotomyError> {
        ConceptTriple::new(
            self.universe.iter().cloned(),
            self.positive.iter().cloned(),
            self.opposite.iter().cloned(),
        )
    }
}
