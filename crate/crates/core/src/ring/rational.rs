use std::fmt;

use num_traits::{One, Zero};

use super::monomial::{Monomial, Var};
use super::poly::{Gauss, LaurentPoly, Replacement};
use super::{Regime, RingError};

/// A quotient of Laurent polynomials with a factored, `Y`-free denominator.
///
/// Each denominator factor has its monomial content cleared and its leading
/// coefficient normalised to the associate with positive real part and
/// non-negative imaginary part; the removed unit and monomial live in the
/// numerator. Factors that divide the numerator exactly are cancelled.
#[derive(Clone, Debug)]
pub struct RationalLaurent {
    num: LaurentPoly,
    den: Vec<(LaurentPoly, u32)>,
}

fn unit_normalizer(c: Gauss) -> Gauss {
    // the unit u with c·u in the first quadrant (re > 0, im ≥ 0)
    for u in [Gauss::new(1, 0), Gauss::new(0, -1), Gauss::new(-1, 0), Gauss::new(0, 1)] {
        let v = c * u;
        if v.re > 0 && v.im >= 0 {
            return u;
        }
    }
    unreachable!("zero leading coefficient")
}

/// Splits `d` into `(unit · monomial, normalised factor)`.
fn normalize_factor(d: &LaurentPoly) -> (Gauss, Monomial, LaurentPoly) {
    let content = d.terms().iter().map(|(m, _)| *m).reduce(|a, b| a.gcd(&b)).unwrap();
    let content = content.with(Var::Y, 0);
    let f = d.mul_monomial(content.inv());
    let u = unit_normalizer(f.leading_term().unwrap().1);
    let f = f.scale(u);
    // d = f · content / u, and 1/u is the conjugate of a unit
    (u.conj(), content, f)
}

impl RationalLaurent {
    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalLaurent { num: p, den: Vec::new() }
    }

    pub fn zero(regime: Regime) -> Self {
        Self::from_poly(LaurentPoly::zero(regime))
    }

    pub fn one(regime: Regime) -> Self {
        Self::from_poly(LaurentPoly::one(regime))
    }

    /// `num / den`, rationalising any `Y` in the denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if num.regime() != den.regime() {
            return Err(RingError::RegimeMismatch { left: num.regime(), right: den.regime() });
        }
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (num, den) = if den.is_y_free() {
            (num, den)
        } else {
            let c = den.conj_y();
            let nd = &den * &c;
            if !nd.is_y_free() || nd.is_zero() {
                return Err(RingError::DivisionByZero);
            }
            (&num * &c, nd)
        };
        Self::from_factors(num, vec![(den, 1)])
    }

    fn from_factors(mut num: LaurentPoly, factors: Vec<(LaurentPoly, u32)>) -> Result<Self, RingError> {
        let mut den: Vec<(LaurentPoly, u32)> = Vec::new();
        for (f, e) in factors {
            if e == 0 {
                continue;
            }
            if f.is_zero() {
                return Err(RingError::DivisionByZero);
            }
            if !f.is_y_free() {
                return Err(RingError::YDivisor);
            }
            let (unit, mono, f) = normalize_factor(&f);
            // num / (unit·mono·f)^e
            let k = e as i16;
            let mut su = Gauss::one();
            for _ in 0..e {
                su *= unit.conj();
            }
            num = num.scale(su).mul_monomial(mono.pow_i(-k));
            if f.is_one() {
                continue;
            }
            match den.iter_mut().find(|(g, _)| *g == f) {
                Some((_, ge)) => *ge += e,
                None => den.push((f, e)),
            }
        }
        let mut out = RationalLaurent { num, den };
        out.cancel();
        Ok(out)
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.div_exact(f) {
                    Ok(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
        self.den.sort();
    }

    pub fn regime(&self) -> Regime {
        self.num.regime()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    /// Normalised denominator factors with multiplicities.
    pub fn den_factors(&self) -> &[(LaurentPoly, u32)] {
        &self.den
    }

    /// The expanded denominator.
    pub fn den(&self) -> LaurentPoly {
        let mut d = LaurentPoly::one(self.regime());
        for (f, e) in &self.den {
            d = &d * &f.pow(*e);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Least common multiple of two factor lists (maximum multiplicities).
    pub fn lcm_factors(a: &[(LaurentPoly, u32)], b: &[(LaurentPoly, u32)]) -> Vec<(LaurentPoly, u32)> {
        let mut out = a.to_vec();
        for (f, e) in b {
            match out.iter_mut().find(|(g, _)| g == f) {
                Some((_, ge)) => *ge = (*ge).max(*e),
                None => out.push((f.clone(), *e)),
            }
        }
        out.sort();
        out
    }

    /// Numerator after rescaling to the common denominator `lcm`, which must
    /// be a multiple of this value's denominator.
    pub fn numerator_over(&self, lcm: &[(LaurentPoly, u32)]) -> LaurentPoly {
        let mut n = self.num.clone();
        for (f, e) in lcm {
            let have = self.den.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
            assert!(have <= *e, "not a common denominator");
            if have < *e {
                n = &n * &f.pow(*e - have);
            }
        }
        n
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        let lcm = Self::lcm_factors(&self.den, &other.den);
        let n = self.numerator_over(&lcm).try_add(&other.numerator_over(&lcm))?;
        Self::from_factors(n, lcm)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        let n = self.num.try_mul(&other.num)?;
        let mut den = self.den.clone();
        den.extend(other.den.iter().cloned());
        Self::from_factors(n, den)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, RingError> {
        let inv = Self::new(LaurentPoly::one(other.regime()), other.num.clone())?;
        let mut den_num = LaurentPoly::one(other.regime());
        for (f, e) in &other.den {
            den_num = &den_num * &f.pow(*e);
        }
        self.try_mul(&inv)?.try_mul(&Self::from_poly(den_num))
    }

    pub fn neg(&self) -> Self {
        RationalLaurent { num: -&self.num, den: self.den.clone() }
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Result<Self, RingError> {
        let mut out = self.clone();
        out.num = out.num.try_mul(p)?;
        out.cancel();
        Ok(out)
    }

    /// Applies monomial substitutions to numerator and denominator.
    pub fn substitute_many(&self, subs: &[(Var, Replacement)], target: Regime) -> Result<Self, RingError> {
        let num = self.num.substitute_many(subs, target)?;
        let mut den = Vec::with_capacity(self.den.len());
        for (f, e) in &self.den {
            let g = f.substitute_many(subs, target)?;
            if g.is_zero() {
                return Err(RingError::DivisionByZero);
            }
            den.push((g, *e));
        }
        Self::from_factors(num, den)
    }

    pub fn substitute(&self, target: Var, replacement: &Replacement) -> Result<Self, RingError> {
        self.substitute_many(&[(target, replacement.clone())], self.regime())
    }
}

impl PartialEq for RationalLaurent {
    fn eq(&self, other: &Self) -> bool {
        if self.regime() != other.regime() {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        let lcm = Self::lcm_factors(&self.den, &other.den);
        self.numerator_over(&lcm) == other.numerator_over(&lcm)
    }
}

impl Eq for RationalLaurent {}

impl From<LaurentPoly> for RationalLaurent {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        for (k, (g, e)) in self.den.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "[{g}]")?;
            } else {
                write!(f, "[{g}]^{e}")?;
            }
        }
        f.write_str(")")
    }
}

impl Zero for RationalLaurent {
    fn zero() -> Self {
        Self::zero(Regime::Trig)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for RationalLaurent {
    type Output = RationalLaurent;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: Regime = Regime::Trig;

    fn delta() -> LaurentPoly {
        LaurentPoly::mono(T, 1, &[(Var::Q, 2)]) - LaurentPoly::mono(T, 1, &[(Var::Q, -2)])
    }

    #[test]
    fn cancels_exact_factors() {
        let a = LaurentPoly::mono(T, 1, &[(Var::Q, 4)]) - LaurentPoly::mono(T, 1, &[(Var::Q, -4)]);
        let r = RationalLaurent::new(a, delta()).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.num().to_string(), "Q^2 + Q^-2");
    }

    #[test]
    fn denominator_is_normalised() {
        let d = LaurentPoly::mono(T, -2, &[(Var::Q, 3)]) + LaurentPoly::mono(T, 2, &[(Var::Q, -1)]);
        let r = RationalLaurent::new(LaurentPoly::var(T, Var::X), d).unwrap();
        let (f, e) = &r.den_factors()[0];
        assert_eq!(*e, 1);
        let (m, c) = f.leading_term().unwrap();
        assert!(c.re > 0 && c.im >= 0);
        assert_eq!(m.exp(Var::Q), 4);
        assert_eq!(f.trailing_term().unwrap().0, Monomial::ONE);
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let x = LaurentPoly::var(T, Var::X);
        let a = RationalLaurent::new(x.clone(), delta()).unwrap();
        let b = RationalLaurent::new(&x * &delta(), &delta() * &delta()).unwrap();
        assert_eq!(a, b);
        let sum = a.try_add(&a.neg()).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn y_in_denominator_is_rationalised() {
        let y = LaurentPoly::var(T, Var::Y);
        let r = RationalLaurent::new(y.clone(), y.clone()).unwrap();
        assert_eq!(r, RationalLaurent::one(T));
    }
}
