//! The `StateFileV1` JSON format.
//!
//! ```json
//! {
//!   "modes": 4,
//!   "scalar": "gaussian-rational",
//!   "terms": [
//!     { "occupied": [1, 2], "coeff": { "re": "3/2", "im": "0" } }
//!   ]
//! }
//! ```
//!
//! Modes are 1-based. With `N = 2n` modes the barred mode `ī` is `i + n`.
//! The canonical form lists terms in increasing bitmask order (mode `i` is bit `i-1`),
//! drops zero coefficients and writes reduced fractions.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use spinorlab::fock::{mask_of, modes_of};
use spinorlab::scalar::Complex64;
use spinorlab::{FockState, GaussRat, Scalar};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScalarKind {
    GaussianRational,
    ComplexFloat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffV1 {
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermV1 {
    pub occupied: Vec<usize>,
    pub coeff: CoeffV1,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFileV1 {
    pub modes: usize,
    pub scalar: ScalarKind,
    pub terms: Vec<TermV1>,
}

/// A parsed state in whichever backend the file declared.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyState {
    Exact(FockState<GaussRat>),
    Float(FockState<Complex64>),
}

/// Two-way conversion between a scalar and its pair of JSON strings.
pub trait Render: Scalar {
    const KIND: ScalarKind;
    fn render(&self) -> CoeffV1;
    fn parse(c: &CoeffV1) -> Result<Self, CliError>;
}

pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Parse(format!("not a rational p/q: {s:?}"));
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(CliError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

impl Render for GaussRat {
    const KIND: ScalarKind = ScalarKind::GaussianRational;

    fn render(&self) -> CoeffV1 {
        CoeffV1 {
            re: self.re.to_string(),
            im: self.im.to_string(),
        }
    }

    fn parse(c: &CoeffV1) -> Result<Self, CliError> {
        Ok(GaussRat::new(
            parse_rational(&c.re)?,
            parse_rational(&c.im)?,
        ))
    }
}

impl Render for Complex64 {
    const KIND: ScalarKind = ScalarKind::ComplexFloat;

    fn render(&self) -> CoeffV1 {
        CoeffV1 {
            re: self.re.to_string(),
            im: self.im.to_string(),
        }
    }

    fn parse(c: &CoeffV1) -> Result<Self, CliError> {
        let f = |s: &str| {
            s.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Parse(format!("not a finite float: {s:?}")))
        };
        Ok(Complex64::new(f(&c.re)?, f(&c.im)?))
    }
}

impl StateFileV1 {
    pub fn from_state<S: Render>(state: &FockState<S>) -> Self {
        StateFileV1 {
            modes: state.modes(),
            scalar: S::KIND,
            terms: state
                .terms()
                .iter()
                .map(|(m, c)| TermV1 {
                    occupied: modes_of(*m),
                    coeff: c.render(),
                })
                .collect(),
        }
    }

    pub fn from_any(state: &AnyState) -> Self {
        match state {
            AnyState::Exact(s) => Self::from_state(s),
            AnyState::Float(s) => Self::from_state(s),
        }
    }

    fn to_state<S: Render>(&self) -> Result<FockState<S>, CliError> {
        let mut state = FockState::zero(self.modes).map_err(|e| CliError::Parse(e.to_string()))?;
        let mut seen = BTreeSet::new();
        for t in &self.terms {
            if t.occupied.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CliError::Parse(format!(
                    "occupied modes must be strictly ascending: {:?}",
                    t.occupied
                )));
            }
            if let Some(&m) = t.occupied.iter().find(|&&m| m == 0 || m > self.modes) {
                return Err(CliError::Parse(format!(
                    "mode {m} outside 1..={}",
                    self.modes
                )));
            }
            let mask = mask_of(&t.occupied);
            if !seen.insert(mask) {
                return Err(CliError::Parse(format!(
                    "duplicate monomial {:?}",
                    t.occupied
                )));
            }
            state.add_term(mask, S::parse(&t.coeff)?);
        }
        Ok(state)
    }

    pub fn to_any(&self) -> Result<AnyState, CliError> {
        Ok(match self.scalar {
            ScalarKind::GaussianRational => AnyState::Exact(self.to_state()?),
            ScalarKind::ComplexFloat => AnyState::Float(self.to_state()?),
        })
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("state file: {e}")))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// Parses and re-serializes, giving the canonical text of a state file.
pub fn canonicalize(text: &str) -> Result<String, CliError> {
    let any = StateFileV1::parse(text)?.to_any()?;
    Ok(StateFileV1::from_any(&any).to_json())
}
