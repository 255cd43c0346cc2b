//! Exact Laurent polynomials over the Gaussian integers with an adjoined
//! square root `Y`.

mod eval;
mod monomial;
mod parse;
mod poly;
mod qbracket;
mod rational;

use thiserror::Error;

pub use eval::{crat, Assignment, CRational};
pub use monomial::{Monomial, Var, NVARS};
pub use poly::{Gauss, LaurentPoly, Replacement};
pub use qbracket::{qbracket, QExponent};
pub use rational::RationalLaurent;

/// The two variable sets used throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    /// `{p, Q, Y}`.
    Quantum,
    /// `{Q, Aa, X, Xv, Ru, Rv, Su, Sv, Y}`.
    Trig,
}

impl Regime {
    pub fn allows(self, v: Var) -> bool {
        match self {
            Regime::Quantum => matches!(v, Var::P | Var::Q | Var::Y),
            Regime::Trig => v != Var::P,
        }
    }

    pub fn vars(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.allows(*v))
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::Quantum => "quantum",
            Regime::Trig => "trig",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Regime {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, RingError> {
        match s {
            "quantum" => Ok(Regime::Quantum),
            "trig" | "trigonometric" => Ok(Regime::Trig),
            _ => Err(RingError::Parse(format!("unknown regime `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("regime mismatch: {left} vs {right}")]
    RegimeMismatch { left: Regime, right: Regime },
    #[error("variable {var} is not part of the {regime} regime")]
    VariableNotInRegime { var: Var, regime: Regime },
    #[error("negative power of Y")]
    NegativeYPower,
    #[error("Y cannot be substituted by a monomial; use substitute_y")]
    SubstituteY,
    #[error("value assigned to Y is inconsistent with its defining relation")]
    InconsistentY,
    #[error("substitution leaves a non-integer exponent of {var}")]
    NonIntegerExponent { var: Var },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor contains Y")]
    YDivisor,
    #[error("no value assigned to {0}")]
    MissingAssignment(Var),
    #[error("non-integer coefficient in q-exponent `{0}`")]
    NonIntegerQExponent(String),
    #[error("parse error: {0}")]
    Parse(String),
}
