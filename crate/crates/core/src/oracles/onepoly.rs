use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::ring::{LaurentPoly, Monomial, Regime};

/// Univariate Laurent polynomial in `t^{1/2}` with integer coefficients.
/// Exponents are stored in half-units: key `k` means `t^{k/2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OnePoly {
    terms: BTreeMap<i32, i64>,
}

impl OnePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_half_terms([(0, 1)])
    }

    /// `c · t^{k/2}` terms.
    pub fn from_half_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            *out.terms.entry(k).or_insert(0) += c;
        }
        out.terms.retain(|_, c| *c != 0);
        out
    }

    /// `c · t^k` terms with integer exponents.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        Self::from_half_terms(terms.into_iter().map(|(k, c)| (2 * k, c)))
    }

    /// `t^{k/2}`.
    pub fn half_power(k: i32) -> Self {
        Self::from_half_terms([(k, 1)])
    }

    pub fn half_terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_half_terms(self.half_terms().map(|(k, v)| (k, v * c)))
    }

    /// Multiplies by `t^{k/2}`.
    pub fn shift_half(&self, k: i32) -> Self {
        Self::from_half_terms(self.half_terms().map(|(e, v)| (e + k, v)))
    }

    /// `t ↦ t̄`.
    pub fn invert_variable(&self) -> Self {
        Self::from_half_terms(self.half_terms().map(|(e, v)| (-e, v)))
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn min_half(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_half(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Exact quotient, `None` when not divisible.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (&dk, &dc) = d.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut q = Self::zero();
        let lo = self.min_half().unwrap_or(0) - d.min_half()?;
        while let Some((&rk, &rc)) = rem.terms.iter().next_back() {
            let k = rk - dk;
            if k < lo || rc % dc != 0 {
                return None;
            }
            let c = rc / dc;
            q.terms.insert(k, c);
            rem = &rem - &d.shift_half(k).scale(c);
        }
        Some(q)
    }

    /// Substitutes `t^{1/2} ↦ m` into a polynomial of the given regime.
    pub fn substitute(&self, regime: Regime, half: Monomial) -> LaurentPoly {
        LaurentPoly::from_terms(regime, self.half_terms().map(|(k, c)| (half.pow_i(k as i16), Complex::new(c, 0))))
            .expect("monomial in regime")
    }

    /// Symmetric representative `±t^k·self` with positive value at `t = 1`.
    pub fn symmetrized(&self) -> Self {
        let (Some(lo), Some(hi)) = (self.min_half(), self.max_half()) else { return self.clone() };
        let s = self.shift_half(-(lo + hi) / 2);
        if s.at_one() < 0 {
            -s
        } else {
            s
        }
    }
}

impl Add for &OnePoly {
    type Output = OnePoly;
    fn add(self, rhs: &OnePoly) -> OnePoly {
        OnePoly::from_half_terms(self.half_terms().chain(rhs.half_terms()))
    }
}

impl Sub for &OnePoly {
    type Output = OnePoly;
    fn sub(self, rhs: &OnePoly) -> OnePoly {
        OnePoly::from_half_terms(self.half_terms().chain(rhs.half_terms().map(|(k, c)| (k, -c))))
    }
}

impl Mul for &OnePoly {
    type Output = OnePoly;
    fn mul(self, rhs: &OnePoly) -> OnePoly {
        let mut out = BTreeMap::new();
        for (a, x) in self.half_terms() {
            for (b, y) in rhs.half_terms() {
                *out.entry(a + b).or_insert(0) += x * y;
            }
        }
        OnePoly::from_half_terms(out)
    }
}

impl Neg for OnePoly {
    type Output = OnePoly;
    fn neg(self) -> OnePoly {
        self.scale(-1)
    }
}

impl fmt::Display for OnePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            match (n, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let var = match k {
                0 => String::new(),
                2 => "t".to_string(),
                k if k % 2 == 0 => format!("t^{}", k / 2),
                k => format!("t^({k}/2)"),
            };
            match (mag, var.is_empty()) {
                (m, true) => write!(f, "{m}")?,
                (1, false) => f.write_str(&var)?,
                (m, false) => write!(f, "{m}*{var}")?,
            }
        }
        Ok(())
    }
}
