//! Fuzzy sets over a finite universe and their lattice operations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::degree::{con_neg, int_neg, opp_neg, NegationConfig, TruthDegree};
use crate::error::ScoiError;

/// Whether every membership value is crisp (`0` or `1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Fuzzy,
    Clear,
}

/// Which negation to lift pointwise over a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NegationKind {
    Contradictory,
    Opposite,
    Intermediary,
}

impl std::fmt::Display for NegationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NegationKind::Contradictory => write!(f, "contradictory"),
            NegationKind::Opposite => write!(f, "opposite"),
            NegationKind::Intermediary => write!(f, "intermediary"),
        }
    }
}

/// A fuzzy set: an ordered universe of element identifiers and a total
/// membership map. The kind is recomputed from the values, never trusted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawFuzzySet", into = "RawFuzzySet")]
pub struct FuzzySet {
    universe: Vec<String>,
    membership: BTreeMap<String, TruthDegree>,
    kind: SetKind,
}

#[derive(Serialize, Deserialize)]
struct RawFuzzySet {
    universe: Vec<String>,
    membership: BTreeMap<String, f64>,
    kind: SetKind,
}

impl TryFrom<RawFuzzySet> for FuzzySet {
    type Error = ScoiError;
    fn try_from(raw: RawFuzzySet) -> Result<Self, Self::Error> {
        let mut pairs = Vec::with_capacity(raw.universe.len());
        for id in &raw.universe {
            let d = raw
                .membership
                .get(id)
                .copied()
                .ok_or_else(|| ScoiError::UniverseMismatch {
                    left: vec![id.clone()],
                    right: vec![],
                })?;
            pairs.push((id.clone(), TruthDegree::new(d)?));
        }
        if raw.membership.len() != raw.universe.len() {
            let extra: Vec<String> = raw
                .membership
                .keys()
                .filter(|k| !raw.universe.contains(k))
                .cloned()
                .collect();
            return Err(ScoiError::UniverseMismatch {
                left: vec![],
                right: extra,
            });
        }
        let set = FuzzySet::new(pairs)?;
        if set.kind != raw.kind {
            return Err(ScoiError::KindMismatch {
                declared: format!("{:?}", raw.kind).to_lowercase(),
            });
        }
        Ok(set)
    }
}

impl From<FuzzySet> for RawFuzzySet {
    fn from(set: FuzzySet) -> RawFuzzySet {
        RawFuzzySet {
            universe: set.universe.clone(),
            membership: set
                .membership
                .iter()
                .map(|(k, v)| (k.clone(), v.value()))
                .collect(),
            kind: set.kind,
        }
    }
}

impl FuzzySet {
    /// Builds a set from `(element, degree)` pairs; universe order is the
    /// pair order. Duplicate elements are rejected.
    pub fn new<I, S>(pairs: I) -> Result<Self, ScoiError>
    where
        I: IntoIterator<Item = (S, TruthDegree)>,
        S: Into<String>,
    {
        let mut universe = Vec::new();
        let mut membership = BTreeMap::new();
        for (id, d) in pairs {
            let id = id.into();
            if membership.insert(id.clone(), d).is_some() {
                return Err(ScoiError::DuplicateElement(id));
            }
            universe.push(id);
        }
        let kind = if membership.values().all(|d| d.is_crisp()) {
            SetKind::Clear
        } else {
            SetKind::Fuzzy
        };
        Ok(FuzzySet {
            universe,
            membership,
            kind,
        })
    }

    /// Builds a set from raw `f64` degrees, validating each.
    pub fn from_degrees<I, S>(pairs: I) -> Result<Self, ScoiError>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: Into<String>,
    {
        let pairs: Result<Vec<_>, ScoiError> = pairs
            .into_iter()
            .map(|(id, v)| TruthDegree::new(v).map(|d| (id.into(), d)))
            .collect();
        FuzzySet::new(pairs?)
    }

    /// The empty set on the same universe (all memberships 0).
    pub fn empty_like(&self) -> FuzzySet {
        self.map(|_| TruthDegree::ZERO)
    }

    /// The whole universe as a set (all memberships 1).
    pub fn full_like(&self) -> FuzzySet {
        self.map(|_| TruthDegree::ONE)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    pub fn degree(&self, element: &str) -> Option<TruthDegree> {
        self.membership.get(element).copied()
    }

    /// Iterates `(element, degree)` in universe order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, TruthDegree)> + '_ {
        self.universe
            .iter()
            .map(move |id| (id.as_str(), self.membership[id]))
    }

    fn map(&self, f: impl Fn(TruthDegree) -> TruthDegree) -> FuzzySet {
        FuzzySet::new(
            self.universe
                .iter()
                .map(|id| (id.clone(), f(self.membership[id]))),
        )
        .expect("universe already validated")
    }

    fn check_same_universe(&self, other: &FuzzySet) -> Result<(), ScoiError> {
        if self.membership.len() == other.membership.len()
            && self.membership.keys().eq(other.membership.keys())
        {
            return Ok(());
        }
        let left: Vec<String> = self
            .membership
            .keys()
            .filter(|k| !other.membership.contains_key(*k))
            .cloned()
            .collect();
        let right: Vec<String> = other
            .membership
            .keys()
            .filter(|k| !self.membership.contains_key(*k))
            .cloned()
            .collect();
        Err(ScoiError::UniverseMismatch { left, right })
    }

    /// Applies a negation pointwise. A clear set follows the clear-set
    /// rule: the intermediary negation is `1/2` everywhere regardless of
    /// `lambda`, and the contradictory negation is `max(1 - d, 1/2)`.
    /// The result's kind is recomputed from its values.
    pub fn lift_negation(&self, which: NegationKind, cfg: NegationConfig) -> FuzzySet {
        let clear = self.kind == SetKind::Clear;
        self.map(|d| match which {
            NegationKind::Opposite => opp_neg(d),
            NegationKind::Intermediary => {
                if clear {
                    TruthDegree::HALF
                } else {
                    int_neg(d, cfg)
                }
            }
            NegationKind::Contradictory => {
                if clear {
                    let o = opp_neg(d);
                    if o.value() >= 0.5 {
                        o
                    } else {
                        TruthDegree::HALF
                    }
                } else {
                    con_neg(d, cfg)
                }
            }
        })
    }

    /// Pointwise maximum.
    pub fn union(&self, other: &FuzzySet) -> Result<FuzzySet, ScoiError> {
        self.zip_with(other, f64::max)
    }

    /// Pointwise minimum.
    pub fn intersect(&self, other: &FuzzySet) -> Result<FuzzySet, ScoiError> {
        self.zip_with(other, f64::min)
    }

    fn zip_with(
        &self,
        other: &FuzzySet,
        f: impl Fn(f64, f64) -> f64,
    ) -> Result<FuzzySet, ScoiError> {
        self.check_same_universe(other)?;
        Ok(FuzzySet::new(self.universe.iter().map(|id| {
            let x = self.membership[id].value();
            let y = other.membership[id].value();
            (id.clone(), TruthDegree::clamped(f(x, y)))
        }))
        .expect("universe already validated"))
    }

    /// `self` is included in `other` up to `tol`: `a(x) <= b(x) + tol` everywhere.
    pub fn includes_in(&self, other: &FuzzySet, tol: f64) -> Result<bool, ScoiError> {
        if tol < 0.0 || tol.is_nan() {
            return Err(ScoiError::NegativeTolerance(tol));
        }
        self.check_same_universe(other)?;
        Ok(self
            .membership
            .iter()
            .all(|(id, d)| d.value() <= other.membership[id].value() + tol))
    }

    /// `|a(x) - b(x)| <= tol` everywhere.
    pub fn equals(&self, other: &FuzzySet, tol: f64) -> Result<bool, ScoiError> {
        if tol < 0.0 || tol.is_nan() {
            return Err(ScoiError::NegativeTolerance(tol));
        }
        self.check_same_universe(other)?;
        Ok(self
            .membership
            .iter()
            .all(|(id, d)| (d.value() - other.membership[id].value()).abs() <= tol))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::{Lambda, NegationVariant};

    fn cfg(l: f64) -> NegationConfig {
        NegationConfig::new(Lambda::new(l).unwrap())
    }

    fn set(pairs: &[(&str, f64)]) -> FuzzySet {
        FuzzySet::from_degrees(pairs.iter().map(|&(id, v)| (id, v))).unwrap()
    }

    #[test]
    fn kind_is_computed() {
        assert_eq!(set(&[("x", 1.0), ("y", 0.0)]).kind(), SetKind::Clear);
        assert_eq!(set(&[("x", 1.0), ("y", 0.3)]).kind(), SetKind::Fuzzy);
    }

    #[test]
    fn clear_set_negations() {
        let s = set(&[("x", 1.0), ("y", 0.0)]);
        let inter = s.lift_negation(NegationKind::Intermediary, cfg(0.8));
        assert_eq!(inter.degree("x").unwrap().value(), 0.5);
        assert_eq!(inter.degree("y").unwrap().value(), 0.5);
        assert_eq!(inter.kind(), SetKind::Fuzzy);

        let opp = s.lift_negation(NegationKind::Opposite, cfg(0.8));
        assert_eq!(opp.degree("x").unwrap().value(), 0.0);
        assert_eq!(opp.degree("y").unwrap().value(), 1.0);
        assert_eq!(opp.kind(), SetKind::Clear);

        // contradictory of a clear 1 is max(0, 1/2) = 1/2
        let con = s.lift_negation(NegationKind::Contradictory, cfg(0.8));
        assert_eq!(con.degree("x").unwrap().value(), 0.5);
        assert_eq!(con.degree("y").unwrap().value(), 1.0);
    }

    #[test]
    fn fuzzy_set_contradictory_lift() {
        let s = set(&[("x", 0.9)]);
        let con = s.lift_negation(NegationKind::Contradictory, cfg(0.8));
        assert!((con.degree("x").unwrap().value() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn union_intersect_examples() {
        let a = set(&[("x", 0.3)]);
        let b = set(&[("x", 0.7)]);
        assert_eq!(a.union(&b).unwrap().degree("x").unwrap().value(), 0.7);
        assert_eq!(a.intersect(&b).unwrap().degree("x").unwrap().value(), 0.3);
        let same = a.union(&a).unwrap();
        assert!(same.equals(&a, 0.0).unwrap());
    }

    #[test]
    fn universe_mismatch_reports_elements() {
        let a = set(&[("x", 0.3), ("y", 0.1)]);
        let b = set(&[("x", 0.7), ("z", 0.2)]);
        match a.union(&b) {
            Err(ScoiError::UniverseMismatch { left, right }) => {
                assert_eq!(left, vec!["y".to_string()]);
                assert_eq!(right, vec!["z".to_string()]);
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
    }

    #[test]
    fn inclusion_and_equality() {
        let a = set(&[("x", 0.2)]);
        let b = set(&[("x", 0.5)]);
        assert!(a.includes_in(&b, 0.0).unwrap());
        assert!(!b.includes_in(&a, 0.0).unwrap());
        assert!(a.equals(&a, 0.0).unwrap());
        assert!(a.includes_in(&b, -0.0).is_ok());
        assert!(a.includes_in(&b, -1.0).is_err());
    }

    #[test]
    fn opposite_lift_reverses_inclusion() {
        let a = set(&[("x", 0.2), ("y", 0.6)]);
        let b = set(&[("x", 0.5), ("y", 0.9)]);
        let c = cfg(0.75);
        let an = a.lift_negation(NegationKind::Opposite, c);
        let bn = b.lift_negation(NegationKind::Opposite, c);
        assert!(a.includes_in(&b, 0.0).unwrap());
        assert!(bn.includes_in(&an, 0.0).unwrap());
    }

    #[test]
    fn serialization_round_trip() {
        let s = set(&[("x", 0.30000000000000004), ("y", 1.0)]);
        let json = serde_json::to_string(&s).unwrap();
        let back: FuzzySet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn deserialization_rejects_kind_lie() {
        let json = r#"{"universe":["x"],"membership":{"x":0.5},"kind":"clear"}"#;
        assert!(serde_json::from_str::<FuzzySet>(json).is_err());
    }

    #[test]
    fn deserialization_rejects_partial_membership() {
        let json = r#"{"universe":["x","y"],"membership":{"x":0.5},"kind":"fuzzy"}"#;
        assert!(serde_json::from_str::<FuzzySet>(json).is_err());
        let json = r#"{"universe":["x"],"membership":{"x":0.5,"y":1.0},"kind":"fuzzy"}"#;
        assert!(serde_json::from_str::<FuzzySet>(json).is_err());
    }

    #[test]
    fn symmetric_variant_affects_lift() {
        let s = set(&[("x", 0.05)]);
        let v = s.lift_negation(
            NegationKind::Intermediary,
            NegationConfig::with_variant(Lambda::new(0.8).unwrap(), NegationVariant::Verbatim),
        );
        let m = s.lift_negation(
            NegationKind::Intermediary,
            NegationConfig::with_variant(Lambda::new(0.8).unwrap(), NegationVariant::Symmetric),
        );
        assert!((v.degree("x").unwrap().value() - 0.65).abs() < 1e-9);
        assert!((m.degree("x").unwrap().value() - 0.35).abs() < 1e-9);
    }
}
