use num_rational::Ratio;

use super::{Idx4, QOp, RmatError, SparseROp, TrigOp};
use crate::ring::{LaurentPoly, Monomial, RationalLaurent, Regime, Replacement, Var};

const T: Regime = Regime::Trig;

fn poly(s: &str) -> LaurentPoly {
    LaurentPoly::parse(T, s).expect("valid literal")
}

fn ratio(num: &LaurentPoly, den: &LaurentPoly) -> RationalLaurent {
    RationalLaurent::new(num.clone(), den.clone()).expect("nonzero denominator")
}

/// `[α−u]·Δ` and `[1+α−u]·Δ`, the two denominator factors.
fn den_l() -> LaurentPoly {
    poly("Aa * X^-1 - Aa^-1 * X")
}

fn den_m() -> LaurentPoly {
    poly("Q^2 * Aa * X^-1 - Q^-2 * Aa^-1 * X")
}

/// The 36 entries with gauge weights `Ru`, `Su` left symbolic.
fn trig_entries(gauged: bool) -> Vec<(Idx4, RationalLaurent)> {
    let l = den_l();
    let lm = &l * &den_m();
    // [α+u]Δ, [1+α+u]Δ, [α]Δ, [1+α]Δ, [u]Δ, [1−u]Δ
    let a_pu = poly("Aa * X - Aa^-1 * X^-1");
    let a1_pu = poly("Q^2 * Aa * X - Q^-2 * Aa^-1 * X^-1");
    let a0 = poly("Aa - Aa^-1");
    let a1 = poly("Q^2 * Aa - Q^-2 * Aa^-1");
    let bu = poly("X - X^-1");
    let b1u = poly("Q^2 * X^-1 - Q^-2 * X");
    let f_q = poly("-2 * Q^2 + Q^2 * X^2 - Q^-2 * X^2 + Q^2 * Aa^2 + Q^-2 * Aa^-2");
    let f_qb = poly("-2 * Q^-2 + Q^-2 * X^-2 - Q^2 * X^-2 + Q^-2 * Aa^-2 + Q^2 * Aa^2");
    let y = poly("Y");

    let g = |s: &str| if gauged { poly(s) } else { poly(&strip_gauge(s)) };

    let mut e: Vec<(Idx4, RationalLaurent)> = Vec::new();
    let mut put = |keys: &[Idx4], num: LaurentPoly, den: &LaurentPoly| {
        for k in keys {
            e.push((*k, ratio(&num, den)));
        }
    };
    put(&[[1, 1, 1, 1]], poly("1"), &poly("1"));
    put(&[[2, 2, 2, 2], [3, 3, 3, 3]], a_pu.clone(), &l);
    put(&[[4, 4, 4, 4]], &a_pu * &a1_pu, &lm);

    put(&[[1, 2, 1, 2]], &a0 * &g("Ru * X^-1"), &l);
    put(&[[1, 3, 1, 3]], &a0 * &g("Su * X^-1"), &l);
    put(&[[2, 1, 2, 1]], &a0 * &g("X * Ru^-1"), &l);
    put(&[[3, 1, 3, 1]], &a0 * &g("X * Su^-1"), &l);

    let c2 = &a0 * &a1;
    put(&[[1, 4, 1, 4]], &c2 * &g("X^-2 * Ru * Su"), &lm);
    put(&[[4, 1, 4, 1]], &c2 * &g("X^2 * Ru^-1 * Su^-1"), &lm);

    put(&[[2, 3, 2, 3]], &f_qb * &g("Ru^-1 * Su"), &lm);
    put(&[[3, 2, 3, 2]], &f_q * &g("Ru * Su^-1"), &lm);

    let c4 = &a1 * &a_pu;
    put(&[[2, 4, 2, 4]], &c4 * &g("Su * X^-1"), &lm);
    put(&[[3, 4, 3, 4]], &c4 * &g("Ru * X^-1"), &lm);
    put(&[[4, 2, 4, 2]], &c4 * &g("X * Su^-1"), &lm);
    put(&[[4, 3, 4, 3]], &c4 * &g("X * Ru^-1"), &lm);

    put(&[[1, 2, 2, 1], [1, 3, 3, 1], [2, 1, 1, 2], [3, 1, 1, 3]], -&bu, &l);
    put(&[[1, 4, 4, 1], [4, 1, 1, 4]], -(&b1u * &bu), &lm);
    put(&[[2, 3, 3, 2], [3, 2, 2, 3]], -(&bu * &bu), &lm);
    put(&[[2, 4, 4, 2], [3, 4, 4, 3], [4, 2, 2, 4], [4, 3, 3, 4]], &bu * &a_pu, &lm);

    let c9 = &y * &bu;
    put(&[[1, 4, 3, 2], [3, 2, 1, 4]], &c9 * &g("Q * X^-1 * Ru"), &lm);
    put(&[[4, 1, 2, 3], [2, 3, 4, 1]], -(&c9 * &g("Q^-1 * X * Ru^-1")), &lm);
    put(&[[3, 2, 4, 1], [4, 1, 3, 2]], &c9 * &g("Q * X * Su^-1"), &lm);
    put(&[[2, 3, 1, 4], [1, 4, 2, 3]], -(&c9 * &g("Q^-1 * X^-1 * Su")), &lm);
    e
}

fn strip_gauge(s: &str) -> String {
    let kept: Vec<&str> = s.split(" * ").filter(|f| !(f.starts_with("Ru") || f.starts_with("Su"))).collect();
    if kept.is_empty() {
        "1".to_string()
    } else {
        kept.join(" * ")
    }
}

/// The gauge-free trigonometric R-matrix (all 36 components, `r = s = 1`).
pub fn build_trig_gauge_free() -> TrigOp {
    SparseROp::from_entries(T, trig_entries(false))
}

/// The gauged trigonometric R-matrix with symbolic `Ru = r^u`, `Su = s^u`.
pub fn build_trig_gauged() -> TrigOp {
    SparseROp::from_entries(T, trig_entries(true))
}

/// Entries as numerators over a shared denominator, with that denominator's
/// factor list.
pub fn trig_numerators(r: &TrigOp) -> (QOp, Vec<(LaurentPoly, u32)>) {
    let lcm = r.iter().fold(Vec::new(), |acc, (_, v)| RationalLaurent::lcm_factors(&acc, v.den_factors()));
    let nums = SparseROp::from_entries(r.regime(), r.iter().map(|(k, v)| (*k, v.numerator_over(&lcm))));
    (nums, lcm)
}

/// A diagonal gauge matrix `A(u)` whose entries are monomials in the
/// spectral variables `X`, `Ru`, `Su`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeMatrix {
    pub diag: [Monomial; 4],
}

fn u_map(x: (Var, i16), r: (Var, i16), s: (Var, i16)) -> Vec<(Var, Replacement)> {
    vec![
        (Var::X, Replacement::monomial(&[(x.0, x.1 as i32)])),
        (Var::Ru, Replacement::monomial(&[(r.0, r.1 as i32)])),
        (Var::Su, Replacement::monomial(&[(s.0, s.1 as i32)])),
    ]
}

impl GaugeMatrix {
    /// `diag{1, r^u, s^u, r^u s^u}`.
    pub fn standard() -> Self {
        GaugeMatrix {
            diag: [
                Monomial::ONE,
                Monomial::var(Var::Ru),
                Monomial::var(Var::Su),
                Monomial::from_pairs(&[(Var::Ru, 1), (Var::Su, 1)]),
            ],
        }
    }

    pub fn identity() -> Self {
        GaugeMatrix { diag: [Monomial::ONE; 4] }
    }

    pub fn new(diag: [Monomial; 4]) -> Self {
        GaugeMatrix { diag }
    }

    pub fn entry(&self, i: u8) -> LaurentPoly {
        LaurentPoly::monomial(T, num_complex::Complex::new(1, 0), self.diag[i as usize - 1])
    }

    fn map(&self, subs: &[(Var, Replacement)]) -> Vec<LaurentPoly> {
        (1..=4).map(|i| self.entry(i).substitute_many(subs, T).expect("monomial substitution")).collect()
    }

    /// Entries at spectral parameter `v`.
    pub fn at_v(&self) -> Vec<LaurentPoly> {
        self.map(&u_map((Var::Xv, 1), (Var::Rv, 1), (Var::Sv, 1)))
    }

    /// Entries at `u + v`.
    pub fn at_sum(&self) -> Vec<LaurentPoly> {
        let subs = vec![
            (Var::X, Replacement::monomial(&[(Var::X, 1), (Var::Xv, 1)])),
            (Var::Ru, Replacement::monomial(&[(Var::Ru, 1), (Var::Rv, 1)])),
            (Var::Su, Replacement::monomial(&[(Var::Su, 1), (Var::Sv, 1)])),
        ];
        self.map(&subs)
    }

    /// Entries at `−u`.
    pub fn at_neg(&self) -> Vec<LaurentPoly> {
        self.map(&u_map((Var::X, -1), (Var::Ru, -1), (Var::Su, -1)))
    }

    /// Entries at `u = 0`.
    pub fn at_zero(&self) -> Vec<LaurentPoly> {
        let subs = vec![(Var::X, Replacement::one()), (Var::Ru, Replacement::one()), (Var::Su, Replacement::one())];
        self.map(&subs)
    }

    /// The gauge matrix `A(−u)`.
    pub fn negated(&self) -> Self {
        let d = self.at_neg();
        GaugeMatrix { diag: std::array::from_fn(|i| d[i].as_monomial().expect("monomial").1) }
    }
}

/// Componentwise gauge transform: the entry at `e^{ab}_{cd}` is multiplied by
/// `A(u)_{bb} · A(−u)_{cc}`.
pub fn apply_gauge(r: &TrigOp, a: &GaugeMatrix) -> TrigOp {
    let neg = a.at_neg();
    let mut out = SparseROp::new(r.regime());
    for (k, v) in r.iter() {
        let w = &a.entry(k[1]) * &neg[k[2] as usize - 1];
        out.insert(*k, v.scale_poly(&w).expect("same regime"));
    }
    out
}

/// A gauge choice whose spectral limit is one of the four constant R-matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaugeCase {
    /// `r = s = 1`.
    One,
    /// `r = 1`, `s = q`.
    Two,
    /// `r = s = q`.
    Three,
    /// `r = q^γ`, `s = q^{2−γ}` with `0 < γ < 1`.
    Four { gamma: Ratio<i32> },
}

impl GaugeCase {
    /// Case by index; case 4 uses `γ = 1/2`.
    pub fn from_index(i: u8) -> Result<Self, RmatError> {
        match i {
            1 => Ok(GaugeCase::One),
            2 => Ok(GaugeCase::Two),
            3 => Ok(GaugeCase::Three),
            4 => Ok(GaugeCase::Four { gamma: Ratio::new(1, 2) }),
            _ => Err(RmatError::BadCase(i)),
        }
    }

    pub fn four(gamma: Ratio<i32>) -> Result<Self, RmatError> {
        if gamma <= Ratio::from_integer(0) || gamma >= Ratio::from_integer(1) {
            return Err(RmatError::BadGamma);
        }
        Ok(GaugeCase::Four { gamma })
    }

    pub fn index(&self) -> u8 {
        match self {
            GaugeCase::One => 1,
            GaugeCase::Two => 2,
            GaugeCase::Three => 3,
            GaugeCase::Four { .. } => 4,
        }
    }

    /// Substitution realising the case on an `X`-grid rescaled so that every
    /// exponent is an integer: `X ↦ X^d`, `Ru ↦ X^a`, `Su ↦ X^b`.
    pub fn substitution(&self) -> Vec<(Var, Replacement)> {
        let (d, a, b) = match *self {
            GaugeCase::One => (1, 0, 0),
            GaugeCase::Two => (1, 0, 1),
            GaugeCase::Three => (1, 1, 1),
            GaugeCase::Four { gamma } => {
                let d = *gamma.denom();
                let a = *gamma.numer();
                (d, a, 2 * d - a)
            }
        };
        vec![
            (Var::X, Replacement::monomial(&[(Var::X, d)])),
            (Var::Ru, Replacement::monomial(&[(Var::X, a)])),
            (Var::Su, Replacement::monomial(&[(Var::X, b)])),
        ]
    }
}

/// Leading-coefficient limit `X → ∞` of every entry of a gauged operator,
/// returned over `{p, Q, Y}` with `Aa = p·Q̄`.
pub fn spectral_limit(r: &TrigOp, case: GaugeCase) -> Result<QOp, RmatError> {
    let subs = case.substitution();
    let to_quantum = [(Var::Alpha, Replacement::monomial(&[(Var::P, 1), (Var::Q, -1)]))];
    let mut out = SparseROp::new(Regime::Quantum);
    for (k, v) in r.iter() {
        let w = v.substitute_many(&subs, T)?;
        let (num, den) = (w.num(), w.den());
        let (_, hn) = num.degree_bounds(Var::X).expect("nonzero entry");
        let (_, hd) = den.degree_bounds(Var::X).expect("nonzero denominator");
        if hn > hd {
            return Err(RmatError::DivergentLimit(*k));
        }
        if hn < hd {
            continue;
        }
        let lead = num.coeff_of(Var::X, hn).div_exact(&den.coeff_of(Var::X, hd))?;
        out.insert(*k, lead.substitute_many(&to_quantum, Regime::Quantum)?);
    }
    Ok(out)
}
