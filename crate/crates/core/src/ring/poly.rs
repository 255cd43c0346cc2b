use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::monomial::{Monomial, Var};
use super::{Regime, RingError};

/// Gaussian integer coefficient.
pub type Gauss = Complex<i64>;

/// Exact Laurent polynomial over `Z[i]` in the variables of one [`Regime`].
///
/// Terms are kept sorted by descending monomial (leading term first), no
/// stored coefficient is zero, and the exponent of `Y` is always 0 or 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    regime: Regime,
    terms: Vec<(Monomial, Gauss)>,
}

/// Image of one variable under [`LaurentPoly::substitute`]: a Gaussian unit
/// times a product of variables raised to rational powers.
#[derive(Clone, Debug, PartialEq)]
pub struct Replacement {
    unit: Gauss,
    factors: Vec<(Var, Ratio<i32>)>,
}

impl Replacement {
    /// `v ↦ 1`.
    pub fn one() -> Self {
        Replacement { unit: Gauss::one(), factors: Vec::new() }
    }

    pub fn monomial(pairs: &[(Var, i32)]) -> Self {
        Replacement { unit: Gauss::one(), factors: pairs.iter().map(|&(v, e)| (v, Ratio::from_integer(e))).collect() }
    }

    pub fn fractional(pairs: &[(Var, Ratio<i32>)]) -> Self {
        Replacement { unit: Gauss::one(), factors: pairs.to_vec() }
    }

    /// Multiplies the image by a unit of `Z[i]` (±1, ±i).
    pub fn times_unit(mut self, unit: Gauss) -> Self {
        assert!(is_unit(unit), "replacement scale must be a unit of Z[i]");
        self.unit *= unit;
        self
    }
}

fn is_unit(c: Gauss) -> bool {
    c.re.abs() + c.im.abs() == 1
}

fn unit_pow(u: Gauss, e: i64) -> Gauss {
    // units have inverse equal to their conjugate
    let base = if e < 0 { u.conj() } else { u };
    let mut acc = Gauss::one();
    for _ in 0..e.unsigned_abs() % 4 {
        acc *= base;
    }
    acc
}

/// Exact division in `Z[i]`, `None` when the quotient is not integral.
pub(crate) fn gauss_div(a: Gauss, b: Gauss) -> Option<Gauss> {
    let n = b.norm_sqr();
    if n == 0 {
        return None;
    }
    let t = a * b.conj();
    if t.re % n == 0 && t.im % n == 0 {
        Some(Gauss::new(t.re / n, t.im / n))
    } else {
        None
    }
}

fn y_relation(regime: Regime) -> &'static [(Monomial, Gauss)] {
    static QUANTUM: OnceLock<Vec<(Monomial, Gauss)>> = OnceLock::new();
    static TRIG: OnceLock<Vec<(Monomial, Gauss)>> = OnceLock::new();
    let one = Gauss::new(1, 0);
    let neg = Gauss::new(-1, 0);
    match regime {
        // Y² = p² + p̄² − Q² − Q̄²
        Regime::Quantum => QUANTUM.get_or_init(|| {
            vec![
                (Monomial::pow(Var::P, 2), one),
                (Monomial::pow(Var::P, -2), one),
                (Monomial::pow(Var::Q, 2), neg),
                (Monomial::pow(Var::Q, -2), neg),
            ]
        }),
        // Y² = (Aα − Āα)(Aα Q² − Āα Q̄²)
        Regime::Trig => TRIG.get_or_init(|| {
            vec![
                (Monomial::from_pairs(&[(Var::Q, 2), (Var::Alpha, 2)]), one),
                (Monomial::from_pairs(&[(Var::Q, -2), (Var::Alpha, -2)]), one),
                (Monomial::pow(Var::Q, 2), neg),
                (Monomial::pow(Var::Q, -2), neg),
            ]
        }),
    }
}

impl LaurentPoly {
    pub fn zero(regime: Regime) -> Self {
        LaurentPoly { regime, terms: Vec::new() }
    }

    pub fn one(regime: Regime) -> Self {
        Self::constant(regime, Gauss::one())
    }

    pub fn constant(regime: Regime, c: Gauss) -> Self {
        Self::normalized(regime, vec![(Monomial::ONE, c)])
    }

    pub fn int(regime: Regime, c: i64) -> Self {
        Self::constant(regime, Gauss::new(c, 0))
    }

    /// The imaginary unit `i`.
    pub fn i(regime: Regime) -> Self {
        Self::constant(regime, Gauss::new(0, 1))
    }

    /// A single variable; panics if `v` is not part of the regime.
    pub fn var(regime: Regime, v: Var) -> Self {
        Self::monomial(regime, Gauss::one(), Monomial::var(v))
    }

    /// `c · m`; panics if `m` mentions a variable outside the regime.
    pub fn monomial(regime: Regime, c: Gauss, m: Monomial) -> Self {
        Self::from_terms(regime, [(m, c)]).expect("monomial outside regime")
    }

    /// Shorthand for an integer-coefficient monomial from `(var, exp)` pairs.
    pub fn mono(regime: Regime, c: i64, pairs: &[(Var, i16)]) -> Self {
        Self::monomial(regime, Gauss::new(c, 0), Monomial::from_pairs(pairs))
    }

    /// Builds a polynomial from arbitrary terms, validating the variable set
    /// and applying the `Y²` rewrite.
    pub fn from_terms(regime: Regime, terms: impl IntoIterator<Item = (Monomial, Gauss)>) -> Result<Self, RingError> {
        let terms: Vec<_> = terms.into_iter().collect();
        for (m, _) in &terms {
            for v in m.support() {
                if !regime.allows(v) {
                    return Err(RingError::VariableNotInRegime { var: v, regime });
                }
            }
            if m.exp(Var::Y) < 0 {
                return Err(RingError::NegativeYPower);
            }
        }
        Ok(Self::normalized(regime, terms))
    }

    /// Sorts, merges, drops zeros and reduces `Y` powers. Exponents of `Y`
    /// must be non-negative.
    pub(crate) fn normalized(regime: Regime, mut terms: Vec<(Monomial, Gauss)>) -> Self {
        if terms.iter().any(|(m, _)| m.exp(Var::Y) > 1) {
            let rel = y_relation(regime);
            let mut out = Vec::with_capacity(terms.len());
            while let Some((m, c)) = terms.pop() {
                let ye = m.exp(Var::Y);
                if ye <= 1 {
                    out.push((m, c));
                } else {
                    let base = m.with(Var::Y, ye - 2);
                    for &(rm, rc) in rel {
                        terms.push((base * rm, c * rc));
                    }
                }
            }
            terms = out;
        }
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        let mut merged: Vec<(Monomial, Gauss)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        LaurentPoly { regime, terms: merged }
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn terms(&self) -> &[(Monomial, Gauss)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == Gauss::one()
    }

    pub fn leading_term(&self) -> Option<(Monomial, Gauss)> {
        self.terms.first().copied()
    }

    pub fn trailing_term(&self) -> Option<(Monomial, Gauss)> {
        self.terms.last().copied()
    }

    /// `Some((c, m))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(Gauss, Monomial)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*c, *m)),
            _ => None,
        }
    }

    /// Returns the constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Gauss> {
        match self.terms.as_slice() {
            [] => Some(Gauss::zero()),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) != 0)
    }

    pub fn is_y_free(&self) -> bool {
        !self.contains_var(Var::Y)
    }

    /// True when every coefficient is a rational integer.
    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.im == 0)
    }

    fn check_regime(&self, other: &Self) -> Result<(), RingError> {
        if self.regime != other.regime {
            Err(RingError::RegimeMismatch { left: self.regime, right: other.regime })
        } else {
            Ok(())
        }
    }

    fn merge(&self, other: &Self, sign: i64) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, b[j].1 * sign));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1 + b[j].1 * sign;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(m, c)| (m, c * sign)));
        LaurentPoly { regime: self.regime, terms: out }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_regime(other)?;
        Ok(self.merge(other, 1))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check_regime(other)?;
        Ok(self.merge(other, -1))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_regime(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.regime));
        }
        if let Some((c, m)) = other.as_monomial() {
            if m.exp(Var::Y) == 0 {
                return Ok(self.scale_monomial(c, m));
            }
        }
        if let Some((c, m)) = self.as_monomial() {
            if m.exp(Var::Y) == 0 {
                return Ok(other.scale_monomial(c, m));
            }
        }
        let mut acc = Vec::with_capacity(self.len() * other.len());
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                acc.push((ma * mb, ca * cb));
            }
        }
        Ok(Self::normalized(self.regime, acc))
    }

    /// Multiplication by a `Y`-free term keeps the order, so no re-sort.
    fn scale_monomial(&self, c: Gauss, m: Monomial) -> Self {
        let terms = self.terms.iter().map(|&(tm, tc)| (tm * m, tc * c)).filter(|(_, c)| !c.is_zero()).collect();
        LaurentPoly { regime: self.regime, terms }
    }

    pub fn scale(&self, c: Gauss) -> Self {
        self.scale_monomial(c, Monomial::ONE)
    }

    /// Multiplies by `m`; `m` must not contain `Y`.
    pub fn mul_monomial(&self, m: Monomial) -> Self {
        assert_eq!(m.exp(Var::Y), 0, "mul_monomial with a Y factor");
        self.scale_monomial(Gauss::one(), m)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.regime);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Smallest and largest exponent of `v`, or `None` for the zero polynomial.
    pub fn degree_bounds(&self, v: Var) -> Option<(i16, i16)> {
        let mut it = self.terms.iter().map(|(m, _)| m.exp(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Coefficient of `v^d`, with `v` removed from the monomials.
    pub fn coeff_of(&self, v: Var, d: i16) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.exp(v) == d).map(|&(m, c)| (m.with(v, 0), c)).collect();
        Self::normalized(self.regime, terms)
    }

    /// Splits `a + b·Y` into `(a, b)`.
    pub fn split_y(&self) -> (Self, Self) {
        (self.coeff_of(Var::Y, 0), self.coeff_of(Var::Y, 1))
    }

    /// Applies `Y ↦ −Y`.
    pub fn conj_y(&self) -> Self {
        let terms = self.terms.iter().map(|&(m, c)| if m.exp(Var::Y) == 1 { (m, -c) } else { (m, c) }).collect();
        LaurentPoly { regime: self.regime, terms }
    }

    /// The quadratic relation satisfied by `Y` in this regime.
    pub fn y_square(regime: Regime) -> Self {
        LaurentPoly::normalized(regime, y_relation(regime).to_vec())
    }

    /// Simultaneous substitution of several variables by monomial images,
    /// producing a polynomial in `target`.
    ///
    /// Substituting `Y` itself is rejected; use [`Self::substitute_y`].
    pub fn substitute_many(&self, subs: &[(Var, Replacement)], target: Regime) -> Result<Self, RingError> {
        if subs.iter().any(|(v, _)| *v == Var::Y) {
            return Err(RingError::SubstituteY);
        }
        if target != self.regime && self.contains_var(Var::Y) {
            // the two Y relations agree only after Aα ↦ pQ̄
            let rel = Self::y_square(self.regime);
            let mapped = rel.map_terms(subs, target)?;
            if mapped != Self::y_square(target) {
                return Err(RingError::InconsistentY);
            }
        }
        self.map_terms(subs, target)
    }

    fn map_terms(&self, subs: &[(Var, Replacement)], target: Regime) -> Result<Self, RingError> {
        let mut out = Vec::with_capacity(self.terms.len());
        for &(m, c) in &self.terms {
            let mut exps: [Ratio<i32>; super::NVARS] = [Ratio::zero(); super::NVARS];
            for v in Var::ALL {
                exps[v.index()] = Ratio::from_integer(m.exp(v) as i32);
            }
            let mut coeff = c;
            for (v, rep) in subs {
                let e = m.exp(*v) as i32;
                if e == 0 {
                    continue;
                }
                exps[v.index()] -= Ratio::from_integer(e);
                coeff *= unit_pow(rep.unit, e as i64);
                for &(w, r) in &rep.factors {
                    exps[w.index()] += r * Ratio::from_integer(e);
                }
            }
            let mut nm = Monomial::ONE;
            for v in Var::ALL {
                let r = exps[v.index()];
                if !r.is_integer() {
                    return Err(RingError::NonIntegerExponent { var: v });
                }
                let e = r.to_integer();
                if e != 0 && !target.allows(v) {
                    return Err(RingError::VariableNotInRegime { var: v, regime: target });
                }
                nm.0[v.index()] = i16::try_from(e).map_err(|_| RingError::ExponentOverflow)?;
            }
            out.push((nm, coeff));
        }
        Ok(Self::normalized(target, out))
    }

    /// Substitutes one variable by a (possibly fractional) monomial image.
    pub fn substitute(&self, target: Var, replacement: &Replacement) -> Result<Self, RingError> {
        self.substitute_many(&[(target, replacement.clone())], self.regime)
    }

    /// Replaces `Y` by an explicit polynomial whose square matches the relation.
    pub fn substitute_y(&self, value: &LaurentPoly) -> Result<Self, RingError> {
        self.specialize(&[], value)
    }

    /// Applies monomial substitutions and eliminates `Y` in one step.
    /// `y_value` must be `Y`-free and square to the image of the relation.
    pub fn specialize(&self, subs: &[(Var, Replacement)], y_value: &LaurentPoly) -> Result<Self, RingError> {
        if subs.iter().any(|(v, _)| *v == Var::Y) {
            return Err(RingError::SubstituteY);
        }
        if y_value.regime != self.regime || y_value.contains_var(Var::Y) {
            return Err(RingError::InconsistentY);
        }
        let rel = Self::y_square(self.regime).map_terms(subs, self.regime)?;
        if rel != y_value * y_value {
            return Err(RingError::InconsistentY);
        }
        let (a, b) = self.split_y();
        let a = a.map_terms(subs, self.regime)?;
        if b.is_zero() {
            return Ok(a);
        }
        let b = b.map_terms(subs, self.regime)?;
        Ok(&a + &(&b * y_value))
    }

    /// Exact quotient `self / d`. The divisor must be `Y`-free; a non-exact
    /// division is reported as [`RingError::NotDivisible`].
    pub fn div_exact(&self, d: &Self) -> Result<Self, RingError> {
        self.check_regime(d)?;
        if d.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if !d.is_y_free() {
            return Err(RingError::YDivisor);
        }
        if let Some((c, m)) = d.as_monomial() {
            let mut terms = Vec::with_capacity(self.len());
            for &(tm, tc) in &self.terms {
                terms.push((tm / m, gauss_div(tc, c).ok_or(RingError::NotDivisible)?));
            }
            return Ok(LaurentPoly { regime: self.regime, terms });
        }
        let (a, b) = self.split_y();
        let qa = a.div_exact_y_free(d)?;
        let qb = b.div_exact_y_free(d)?;
        Ok(&qa + &qb.mul_monomial_y())
    }

    fn mul_monomial_y(&self) -> Self {
        let terms = self.terms.iter().map(|&(m, c)| (m * Monomial::var(Var::Y), c)).collect();
        Self::normalized(self.regime, terms)
    }

    fn div_exact_y_free(&self, d: &Self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        // any exact quotient has its exponents inside this box
        let mut lo = [0i16; super::NVARS];
        let mut hi = [0i16; super::NVARS];
        for v in Var::ALL {
            let (alo, ahi) = self.degree_bounds(v).unwrap();
            let (dlo, dhi) = d.degree_bounds(v).unwrap();
            lo[v.index()] = alo - dlo;
            hi[v.index()] = ahi - dhi;
            if lo[v.index()] > hi[v.index()] {
                return Err(RingError::NotDivisible);
            }
        }
        let (dm, dc) = d.leading_term().unwrap();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm / dm;
            if Var::ALL.iter().any(|v| {
                let e = m.exp(*v);
                e < lo[v.index()] || e > hi[v.index()]
            }) {
                return Err(RingError::NotDivisible);
            }
            let c = gauss_div(rc, dc).ok_or(RingError::NotDivisible)?;
            quot.push((m, c));
            rem = rem.merge(&d.scale_monomial(c, m), -1);
        }
        Ok(Self::normalized(self.regime, quot))
    }

    /// Moves the polynomial to another regime through variable images.
    pub fn change_regime(&self, target: Regime, subs: &[(Var, Replacement)]) -> Result<Self, RingError> {
        self.substitute_many(subs, target)
    }

    /// Canonical string form (see the crate README for the grammar).
    pub fn to_canonical(&self) -> String {
        self.to_string()
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.regime.cmp(&other.regime).then_with(|| {
            let key = |t: &(Monomial, Gauss)| (t.0, t.1.re, t.1.im);
            self.terms.iter().map(key).cmp(other.terms.iter().map(key))
        })
    }
}

fn fmt_coeff(c: Gauss) -> String {
    if c.im == 0 {
        c.re.to_string()
    } else if c.re == 0 {
        format!("{}i", c.im)
    } else {
        format!("({}{:+}i)", c.re, c.im)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, &(m, c)) in self.terms.iter().enumerate() {
            // real negative coefficients become a subtraction
            let (neg, c) = if c.im == 0 && c.re < 0 { (true, -c) } else { (false, c) };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts = Vec::new();
            if m.is_one() || c != Gauss::one() {
                parts.push(fmt_coeff(c));
            }
            parts.extend(m.fmt_factors());
            f.write_str(&parts.join(" * "))?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<'a> $trait<&'a LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$try(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $trait<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(Gauss::new(-1, 0))
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const QR: Regime = Regime::Quantum;

    fn v(x: Var) -> LaurentPoly {
        LaurentPoly::var(QR, x)
    }

    fn qb() -> LaurentPoly {
        LaurentPoly::mono(QR, 1, &[(Var::Q, -1)])
    }

    fn pb() -> LaurentPoly {
        LaurentPoly::mono(QR, 1, &[(Var::P, -1)])
    }

    #[test]
    fn add_examples() {
        let q = v(Var::Q);
        assert!((&q + &(-&q)).is_zero());
        assert_eq!(&(&q - &qb()) + &qb(), q);
        let p2 = v(Var::P).pow(2);
        let pb2 = pb().pow(2);
        assert_eq!((&p2 + &pb2).to_string(), "p^2 + p^-2");
    }

    #[test]
    fn mul_examples() {
        let q = v(Var::Q);
        let lhs = &(&q - &qb()) * &(&q + &qb());
        assert_eq!(lhs, LaurentPoly::mono(QR, 1, &[(Var::Q, 2)]) - LaurentPoly::mono(QR, 1, &[(Var::Q, -2)]));
        let y = v(Var::Y);
        assert_eq!(&y * &y, LaurentPoly::y_square(QR));
        // (pQ̄ − p̄Q)(pQ − p̄Q̄) written out by hand
        let p = v(Var::P);
        let a = &(&p * &qb()) - &(&pb() * &q);
        let b = &(&p * &q) - &(&pb() * &qb());
        assert_eq!(&a * &b, &y * &y);
        let i = LaurentPoly::i(QR);
        assert_eq!(&i * &i, LaurentPoly::int(QR, -1));
    }

    #[test]
    fn regime_mismatch_is_an_error() {
        let a = LaurentPoly::one(Regime::Quantum);
        let b = LaurentPoly::one(Regime::Trig);
        assert!(matches!(a.try_add(&b), Err(RingError::RegimeMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(RingError::RegimeMismatch { .. })));
    }

    #[test]
    fn variable_outside_regime_rejected() {
        let r = LaurentPoly::from_terms(QR, [(Monomial::var(Var::X), Gauss::one())]);
        assert!(matches!(r, Err(RingError::VariableNotInRegime { var: Var::X, .. })));
    }

    #[test]
    fn substitute_examples() {
        let t = Regime::Trig;
        let ru = LaurentPoly::var(t, Var::Ru);
        let x = LaurentPoly::var(t, Var::X);
        assert_eq!(ru.substitute(Var::Ru, &Replacement::monomial(&[(Var::X, 1)])).unwrap(), x);
        assert_eq!(ru.substitute(Var::Ru, &Replacement::one()).unwrap(), LaurentPoly::one(t));
        let q = LaurentPoly::var(t, Var::Q);
        assert_eq!(q.substitute(Var::Q, &Replacement::monomial(&[(Var::Q, 1)])).unwrap(), q);
        let half = Replacement::fractional(&[(Var::X, Ratio::new(1, 2))]);
        assert!(matches!(ru.substitute(Var::Ru, &half), Err(RingError::NonIntegerExponent { var: Var::X })));
        let ru2 = ru.pow(2);
        assert_eq!(ru2.substitute(Var::Ru, &half).unwrap(), x);
    }

    #[test]
    fn substitute_unit_signs() {
        let p3 = v(Var::P).pow(3) + pb();
        let r = p3.substitute(Var::P, &Replacement::one().times_unit(Gauss::new(-1, 0))).unwrap();
        assert_eq!(r, LaurentPoly::int(QR, -2));
    }

    #[test]
    fn div_exact_recovers_factor() {
        let q = v(Var::Q);
        let a = &(&q - &qb()) * &(&v(Var::P) + &LaurentPoly::int(QR, 3));
        let d = &q - &qb();
        assert_eq!(a.div_exact(&d).unwrap(), &v(Var::P) + &LaurentPoly::int(QR, 3));
        assert_eq!((&q + &qb()).div_exact(&d), Err(RingError::NotDivisible));
        let with_y = &v(Var::Y) * &d;
        assert_eq!(with_y.div_exact(&d).unwrap(), v(Var::Y));
        assert_eq!(d.div_exact(&v(Var::Y)), Err(RingError::YDivisor));
    }

    #[test]
    fn canonical_format() {
        let e = &(&v(Var::P).pow(2) * &qb().pow(2)) - &LaurentPoly::constant(QR, Gauss::new(2, 3));
        assert_eq!(e.to_string(), "p^2 * Q^-2 + (-2-3i)");
        assert_eq!((-&v(Var::Q)).to_string(), "-Q");
        assert_eq!(LaurentPoly::zero(QR).to_string(), "0");
        assert_eq!(LaurentPoly::mono(QR, -3, &[(Var::Q, -1)]).to_string(), "-3 * Q^-1");
    }
}
