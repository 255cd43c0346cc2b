//! State-model evaluation of (1,1)-tangle invariants from braid words.

mod represent;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use thiserror::Error;

use crate::braid::{matveev_pair, BraidWord};
use crate::ring::{LaurentPoly, Regime, Replacement, RingError, Var};
use crate::rmat::{invert, quantum_r, QOp, RmatError};

pub use represent::{represent, tangle_invariant, BraidRep, TangleInvariant, DEFAULT_MAX_TERMS};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("case {case} has no {isotopy} isotopy model")]
    Unsupported { case: u8, isotopy: Isotopy },
    #[error("closure has {0} components; only knots are supported")]
    NotAKnot(usize),
    #[error("representation needs more than {cap} stored terms")]
    MemoryCap { cap: usize },
    #[error("tangle invariant is not a scalar matrix")]
    NonScalar,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Rmat(#[from] RmatError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Isotopy {
    Ambient,
    Regular,
}

impl fmt::Display for Isotopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Isotopy::Ambient => "ambient",
            Isotopy::Regular => "regular",
        })
    }
}

impl FromStr for Isotopy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ambient" => Ok(Isotopy::Ambient),
            "regular" => Ok(Isotopy::Regular),
            _ => Err(format!("unknown isotopy `{s}`")),
        }
    }
}

/// Sign choice for the specialised ambient generators: `p = ±1` in case 2,
/// `Q = ±1` (with `p = 1`) in case 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Branch {
    #[default]
    Plus,
    Minus,
}

/// Braid generator `σ = κ·Ř`, its inverse and the diagonal left handle `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateModel {
    pub case: u8,
    pub isotopy: Isotopy,
    pub branch: Branch,
    pub kappa: LaurentPoly,
    pub sigma: QOp,
    pub sigma_inv: QOp,
    pub c: [LaurentPoly; 4],
}

fn poly(s: &str) -> LaurentPoly {
    LaurentPoly::parse(Regime::Quantum, s).expect("valid literal")
}

fn handle(scale: &str, diag: [&str; 4]) -> [LaurentPoly; 4] {
    let s = poly(scale);
    diag.map(|d| &s * &poly(d))
}

impl StateModel {
    pub fn new(case: u8, isotopy: Isotopy) -> Result<Self, EngineError> {
        Self::with_branch(case, isotopy, Branch::Plus)
    }

    pub fn with_branch(case: u8, isotopy: Isotopy, branch: Branch) -> Result<Self, EngineError> {
        let r = quantum_r(case)?;
        let sign = match branch {
            Branch::Plus => Complex::new(1, 0),
            Branch::Minus => Complex::new(-1, 0),
        };
        let (kappa, r, c) = match (case, isotopy) {
            (1, Isotopy::Ambient) => (poly("p^-2 * Q^2"), r, handle("p^-2", ["Q^2", "-Q^2", "-Q^-2", "Q^-2"])),
            (2, Isotopy::Ambient) => {
                let subs = [(Var::P, Replacement::one().times_unit(sign))];
                let y = poly("1i * Q - 1i * Q^-1");
                let r = r.try_map(Regime::Quantum, |_, v| v.specialize(&subs, &y))?;
                (poly("Q"), r, handle("1", ["Q", "-Q", "-Q^-1", "Q^-1"]))
            }
            (4, Isotopy::Ambient) => {
                let subs = [(Var::P, Replacement::one()), (Var::Q, Replacement::one().times_unit(sign))];
                let r = r.try_map(Regime::Quantum, |_, v| v.specialize(&subs, &poly("0")))?;
                (poly("1"), r, handle("1", ["1", "-1", "-1", "1"]))
            }
            (2, Isotopy::Regular) => (poly("p^-2 * Q"), r, handle("p^-1", ["Q", "-Q", "-Q^-1", "Q^-1"])),
            (3, Isotopy::Regular) => (poly("p^-2"), r, handle("1", ["1", "Q^2", "Q^-2", "1"])),
            _ => return Err(EngineError::Unsupported { case, isotopy }),
        };
        let sigma = r.scale(&kappa);
        let sigma_inv = invert(&sigma)?;
        Ok(StateModel { case, isotopy, branch, kappa, sigma, sigma_inv, c })
    }

    /// The same model with `κ` multiplied by `factor`.
    pub fn with_kappa_scaled(&self, factor: &LaurentPoly) -> Result<Self, EngineError> {
        let mut m = self.clone();
        m.kappa = &m.kappa * factor;
        m.sigma = m.sigma.scale(factor);
        m.sigma_inv = invert(&m.sigma)?;
        Ok(m)
    }

    /// The diagonal that one positive kink contributes, `diag{h₁..h₄}` with
    /// the negative kink contributing the inverse.
    pub fn expected_handle(&self) -> [LaurentPoly; 4] {
        match (self.case, self.isotopy) {
            (2, Isotopy::Regular) => ["p^-1", "p^-1", "p", "p"].map(poly),
            (3, Isotopy::Regular) => ["p^-2", "-Q^-4", "-Q^-4", "p^2"].map(poly),
            _ => ["1"; 4].map(poly),
        }
    }
}

/// Contraction `H^a_b = Σ_c C[c]·op^{ca}_{cb}` over the first factor.
pub fn handle_contraction(model: &StateModel, op: &QOp) -> [[LaurentPoly; 4]; 4] {
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            (1..=4u8).fold(LaurentPoly::zero(Regime::Quantum), |acc, c| {
                let e = op.at([c, a as u8 + 1, c, b as u8 + 1]);
                &acc + &(&model.c[c as usize - 1] * &e)
            })
        })
    })
}

/// Result of [`verify_handle`].
#[derive(Clone, Debug, PartialEq)]
pub struct HandleReport {
    pub positive: [[LaurentPoly; 4]; 4],
    pub negative: [[LaurentPoly; 4]; 4],
    pub expected: [LaurentPoly; 4],
    pub pass: bool,
}

/// Checks the kink identities for `σ` and `σ⁻¹`.
pub fn verify_handle(model: &StateModel) -> Result<HandleReport, EngineError> {
    let positive = handle_contraction(model, &model.sigma);
    let negative = handle_contraction(model, &model.sigma_inv);
    let expected = model.expected_handle();
    let mut pass = true;
    for a in 0..4 {
        let inv = crate::ring::RationalLaurent::new(LaurentPoly::one(Regime::Quantum), expected[a].clone())?;
        let inv = inv.as_poly().cloned().ok_or(RingError::NotDivisible)?;
        for b in 0..4 {
            let (want_p, want_n) = if a == b {
                (expected[a].clone(), inv.clone())
            } else {
                (LaurentPoly::zero(Regime::Quantum), LaurentPoly::zero(Regime::Quantum))
            };
            pass &= positive[a][b] == want_p && negative[a][b] == want_n;
        }
    }
    Ok(HandleReport { positive, negative, expected, pass })
}

/// Closed invariant of an ambient model; the tangle must be scalar.
pub fn ambient_invariant(b: &BraidWord, case: u8) -> Result<LaurentPoly, EngineError> {
    let model = StateModel::new(case, Isotopy::Ambient)?;
    tangle_invariant(b, &model, DEFAULT_MAX_TERMS)?.scalar().ok_or(EngineError::NonScalar)
}

/// Outcome of the Matveev test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatveevReport {
    /// Whether the model's generator separates the two braids.
    pub distinguishes: bool,
    /// For case 4, the same comparison with the unscaled, fully symbolic
    /// R-matrix.
    pub symbolic_distinguishes: Option<bool>,
}

/// Compares the representations of `σ₁σ̄₂σ₁` and `σ₂σ̄₁σ₂`.
pub fn matveev_test(model: &StateModel) -> Result<MatveevReport, EngineError> {
    let (a, b) = matveev_pair();
    let ra = represent(&a, &model.sigma, &model.sigma_inv, DEFAULT_MAX_TERMS)?;
    let rb = represent(&b, &model.sigma, &model.sigma_inv, DEFAULT_MAX_TERMS)?;
    let symbolic_distinguishes = if model.case == 4 { Some(matveev_symbolic(4)?) } else { None };
    Ok(MatveevReport { distinguishes: ra != rb, symbolic_distinguishes })
}

/// Matveev comparison for the bare R-matrix of a case with symbolic `p`, `Q`.
pub fn matveev_symbolic(case: u8) -> Result<bool, EngineError> {
    let r = quantum_r(case)?;
    let ri = invert(&r)?;
    let (a, b) = matveev_pair();
    Ok(represent(&a, &r, &ri, DEFAULT_MAX_TERMS)? != represent(&b, &r, &ri, DEFAULT_MAX_TERMS)?)
}
