//! Membership degrees and the three pointwise negation operators.
//!
//! A degree is a real number in `[0, 1]`. Three negations act on degrees:
//!
//! * the opposite negation `1 - d`,
//! * the intermediary negation, a piecewise-linear map shaped by a
//!   threshold parameter `lambda` that folds the outer bands of `[0, 1]`
//!   into the middle band `[1-lambda, lambda]` and leaves the middle band
//!   untouched,
//! * the contradictory negation, the pointwise maximum of the other two.

use serde::{Deserialize, Serialize};

use crate::error::ScoiError;

/// A membership degree in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct TruthDegree(f64);

impl TruthDegree {
    pub const ZERO: TruthDegree = TruthDegree(0.0);
    pub const HALF: TruthDegree = TruthDegree(0.5);
    pub const ONE: TruthDegree = TruthDegree(1.0);

    pub fn new(value: f64) -> Result<Self, ScoiError> {
        if value.is_nan() || !(0.0..=1.0).contains(&value) {
            return Err(ScoiError::DegreeOutOfRange(value));
        }
        Ok(TruthDegree(value))
    }

    /// Clamps float dust from arithmetically-in-range results back into `[0, 1]`.
    pub fn clamped(value: f64) -> Self {
        TruthDegree(value.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_crisp(self) -> bool {
        self.0 == 0.0 || self.0 == 1.0
    }
}

impl TryFrom<f64> for TruthDegree {
    type Error = ScoiError;
    fn try_from(value: f64) -> Result<Self, Self::Error> {
        TruthDegree::new(value)
    }
}

impl From<TruthDegree> for f64 {
    fn from(d: TruthDegree) -> f64 {
        d.0
    }
}

/// The threshold parameter, restricted to the open interval `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Lambda(f64);

impl Lambda {
    pub fn new(value: f64) -> Result<Self, ScoiError> {
        if value.is_nan() || value <= 0.0 || value >= 1.0 {
            return Err(ScoiError::LambdaOutOfRange(value));
        }
        Ok(Lambda(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Lambda {
    type Error = ScoiError;
    fn try_from(value: f64) -> Result<Self, Self::Error> {
        Lambda::new(value)
    }
}

impl From<Lambda> for f64 {
    fn from(l: Lambda) -> f64 {
        l.0
    }
}

/// Which formula the intermediary negation uses on the low half of `[0, 1]`.
///
/// `Verbatim` evaluates the published piecewise cases exactly as printed.
/// Its low-band case is not the mirror image of the high-band case, which
/// breaks the symmetry `int_neg(d) = int_neg(1 - d)`. `Symmetric` repairs
/// that by evaluating every degree below `1/2` at its mirror image
/// `1 - d`, so the symmetry holds everywhere by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NegationVariant {
    #[default]
    Verbatim,
    Symmetric,
}

impl std::fmt::Display for NegationVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NegationVariant::Verbatim => write!(f, "verbatim"),
            NegationVariant::Symmetric => write!(f, "symmetric"),
        }
    }
}

/// Threshold plus formula variant; governs every intermediary and
/// contradictory negation evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NegationConfig {
    pub lambda: Lambda,
    #[serde(default)]
    pub variant: NegationVariant,
}

impl NegationConfig {
    pub fn new(lambda: Lambda) -> Self {
        NegationConfig {
            lambda,
            variant: NegationVariant::Verbatim,
        }
    }

    pub fn with_variant(lambda: Lambda, variant: NegationVariant) -> Self {
        NegationConfig { lambda, variant }
    }
}

/// Opposite negation: `1 - d`.
pub fn opp_neg(d: TruthDegree) -> TruthDegree {
    TruthDegree(1.0 - d.0)
}

/// Intermediary negation.
///
/// For `lambda >= 1/2` the cases are, in order of precedence:
/// (a) on `(lambda, 1]`: `lambda - ((2*lambda - 1)/(1 - lambda)) * (d - lambda)`;
/// (b) on `[0, 1 - lambda]`: `lambda - ((2*lambda - 1)/(1 - lambda)) * d`;
/// (e) identity on the residual middle band.
/// For `lambda <= 1/2`:
/// (c) on `[0, lambda]`: `(1 - lambda) - ((1 - 2*lambda)/lambda) * d`;
/// (d) on `(1 - lambda, 1]`: `(1 - lambda) - ((1 - 2*lambda)/lambda) * (d + lambda - 1)`;
/// (e) identity otherwise.
///
/// At band boundaries the adjacent formulas agree, so precedence between
/// overlapping closed endpoints is observationally irrelevant.
pub fn int_neg(d: TruthDegree, cfg: NegationConfig) -> TruthDegree {
    let x = match cfg.variant {
        NegationVariant::Verbatim => d.0,
        NegationVariant::Symmetric => d.0.max(1.0 - d.0),
    };
    let l = cfg.lambda.0;
    let value = if l >= 0.5 {
        let slope = (2.0 * l - 1.0) / (1.0 - l);
        if x > l {
            l - slope * (x - l) // (a)
        } else if x <= 1.0 - l {
            l - slope * x // (b)
        } else {
            x // (e)
        }
    } else {
        let slope = (1.0 - 2.0 * l) / l;
        if x <= l {
            (1.0 - l) - slope * x // (c)
        } else if x > 1.0 - l {
            (1.0 - l) - slope * (x + l - 1.0) // (d)
        } else {
            x // (e)
        }
    };
    TruthDegree::clamped(value)
}

/// Contradictory negation: `max(opp_neg(d), int_neg(d))`.
pub fn con_neg(d: TruthDegree, cfg: NegationConfig) -> TruthDegree {
    let o = opp_neg(d);
    let i = int_neg(d, cfg);
    if o.0 >= i.0 {
        o
    } else {
        i
    }
}

/// An evenly spaced degree grid with `points` entries covering `[0, 1]`.
///
/// The grid is mirror-closed: every point below `1/2` is stored as
/// `1 - h` for the grid point `h` at its mirror position, which makes
/// `1 - d` map grid points to grid points without rounding. On such a
/// grid `opp_neg(opp_neg(d)) == d` holds bit-exactly; on arbitrary
/// inputs below `1/2` the first subtraction may round by one ulp.
pub fn degree_grid(points: usize) -> Vec<TruthDegree> {
    assert!(points >= 2, "degree grid needs at least two points");
    let n = points - 1;
    (0..=n)
        .map(|i| {
            let v = if 2 * i >= n {
                i as f64 / n as f64
            } else {
                1.0 - (n - i) as f64 / n as f64
            };
            TruthDegree::clamped(v)
        })
        .collect()
}
