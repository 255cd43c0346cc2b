use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::Var;
use super::poly::LaurentPoly;
use super::RingError;

/// Exact complex rational number.
pub type CRational = Complex<BigRational>;

pub fn crat(n: i64, d: i64) -> CRational {
    Complex::new(BigRational::new(BigInt::from(n), BigInt::from(d)), BigRational::zero())
}

fn cpow(x: &CRational, e: i32) -> Result<CRational, RingError> {
    if e < 0 && x.is_zero() {
        return Err(RingError::DivisionByZero);
    }
    let mut base = if e < 0 { CRational::one() / x } else { x.clone() };
    let mut k = e.unsigned_abs();
    let mut acc = CRational::one();
    while k > 0 {
        if k & 1 == 1 {
            acc = &acc * &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    Ok(acc)
}

/// Values for the variables of a polynomial.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Assignment {
    values: BTreeMap<Var, CRational>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, v: Var, value: CRational) -> Self {
        self.values.insert(v, value);
        self
    }

    pub fn set_int(self, v: Var, n: i64, d: i64) -> Self {
        self.set(v, crat(n, d))
    }

    pub fn get(&self, v: Var) -> Option<&CRational> {
        self.values.get(&v)
    }

    fn eval_y_free(&self, a: &LaurentPoly) -> Result<CRational, RingError> {
        let mut acc = CRational::zero();
        for (m, c) in a.terms() {
            let mut t = Complex::new(BigRational::from_integer(c.re.into()), BigRational::from_integer(c.im.into()));
            for v in m.support() {
                let x = self.values.get(&v).ok_or(RingError::MissingAssignment(v))?;
                t *= cpow(x, m.exp(v) as i32)?;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact value of `a`. When `Y` is assigned its square must equal the
    /// value of the regime's relation.
    pub fn evaluate(&self, a: &LaurentPoly) -> Result<CRational, RingError> {
        if let Some(y) = self.values.get(&Var::Y) {
            let rel = LaurentPoly::y_square(a.regime());
            if self.eval_y_free(&rel)? != y * y {
                return Err(RingError::InconsistentY);
            }
        }
        self.eval_y_free(a)
    }
}
