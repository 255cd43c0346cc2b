use std::fmt;
use std::ops::{Div, Mul};

/// Number of variables in the shared exponent vector.
pub const NVARS: usize = 10;

/// Variables in canonical order. The derived `Ord` on [`Monomial`] is
/// lexicographic in exactly this order.
///
/// `P = q^{α+1/2}`, `Q = q^{1/2}`, `Alpha = q^α`, `X = q^u`, `Xv = q^v`,
/// `Ru = r^u`, `Rv = r^v`, `Su = s^u`, `Sv = s^v`. `Y` is the adjoined square
/// root, reduced by the regime's quadratic relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    P = 0,
    Q,
    Y,
    Alpha,
    X,
    Xv,
    Ru,
    Rv,
    Su,
    Sv,
}

impl Var {
    pub const ALL: [Var; NVARS] =
        [Var::P, Var::Q, Var::Y, Var::Alpha, Var::X, Var::Xv, Var::Ru, Var::Rv, Var::Su, Var::Sv];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::P => "p",
            Var::Q => "Q",
            Var::Y => "Y",
            Var::Alpha => "Aa",
            Var::X => "X",
            Var::Xv => "Xv",
            Var::Ru => "Ru",
            Var::Rv => "Rv",
            Var::Su => "Su",
            Var::Sv => "Sv",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A Laurent monomial: one signed exponent per variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Monomial(pub(crate) [i16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var) -> Self {
        Self::pow(v, 1)
    }

    pub fn pow(v: Var, e: i16) -> Self {
        let mut m = Self::ONE;
        m.0[v.index()] = e;
        m
    }

    /// Builds a monomial from `(var, exponent)` pairs; repeated variables add.
    pub fn from_pairs(pairs: &[(Var, i16)]) -> Self {
        let mut m = Self::ONE;
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    pub fn exp(&self, v: Var) -> i16 {
        self.0[v.index()]
    }

    pub fn with(mut self, v: Var, e: i16) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn inv(&self) -> Self {
        let mut m = *self;
        m.0.iter_mut().for_each(|e| *e = -*e);
        m
    }

    pub fn pow_i(&self, k: i16) -> Self {
        let mut m = *self;
        m.0.iter_mut().for_each(|e| *e *= k);
        m
    }

    /// Variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        Var::ALL.iter().copied().filter(move |v| self.exp(*v) != 0)
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        m
    }

    pub(crate) fn fmt_factors(&self) -> Vec<String> {
        self.support()
            .map(|v| match self.exp(v) {
                1 => v.name().to_string(),
                e => format!("{}^{}", v.name(), e),
            })
            .collect()
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(mut self, rhs: Monomial) -> Monomial {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a += *b;
        }
        self
    }
}

impl Div for Monomial {
    type Output = Monomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(mut self, rhs: Monomial) -> Monomial {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a -= *b;
        }
        self
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        f.write_str(&self.fmt_factors().join(" * "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_follows_canonical_variable_order() {
        let p = Monomial::var(Var::P);
        let q5 = Monomial::pow(Var::Q, 5);
        assert!(p > q5);
        assert!(Monomial::pow(Var::Q, -1) < Monomial::ONE);
        assert!(Monomial::var(Var::Sv) > Monomial::ONE);
    }

    #[test]
    fn mul_div_inverse() {
        let a = Monomial::from_pairs(&[(Var::P, 2), (Var::Q, -3), (Var::X, 1)]);
        let b = Monomial::from_pairs(&[(Var::Q, 1), (Var::Ru, -2)]);
        assert_eq!((a * b) / b, a);
        assert!((a * a.inv()).is_one());
        assert_eq!(a.to_string(), "p^2 * Q^-3 * X");
    }
}
