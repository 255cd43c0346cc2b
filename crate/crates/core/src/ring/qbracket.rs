use std::fmt;
use std::str::FromStr;

use super::monomial::{Monomial, Var};
use super::poly::LaurentPoly;
use super::rational::RationalLaurent;
use super::{Regime, RingError};

/// An integer linear combination `c + a·α + b·u + d·v` used as a q-exponent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct QExponent {
    pub constant: i32,
    pub alpha: i32,
    pub u: i32,
    pub v: i32,
}

impl QExponent {
    pub fn int(c: i32) -> Self {
        QExponent { constant: c, ..Default::default() }
    }

    pub fn new(constant: i32, alpha: i32, u: i32, v: i32) -> Self {
        QExponent { constant, alpha, u, v }
    }

    /// `q^x` as a monomial in the given regime (`q = Q²`; in the quantum
    /// regime `q^α = p·Q̄`).
    pub fn q_power(&self, regime: Regime) -> Result<Monomial, RingError> {
        let mut m = Monomial::pow(Var::Q, (2 * self.constant) as i16);
        match regime {
            Regime::Trig => {
                m = m * Monomial::from_pairs(&[
                    (Var::Alpha, self.alpha as i16),
                    (Var::X, self.u as i16),
                    (Var::Xv, self.v as i16),
                ]);
            }
            Regime::Quantum => {
                m = m * Monomial::from_pairs(&[(Var::P, self.alpha as i16), (Var::Q, -self.alpha as i16)]);
                if self.u != 0 {
                    return Err(RingError::VariableNotInRegime { var: Var::X, regime });
                }
                if self.v != 0 {
                    return Err(RingError::VariableNotInRegime { var: Var::Xv, regime });
                }
            }
        }
        Ok(m)
    }

    /// `qˣ − q̄ˣ`, i.e. `[x]·(q − q̄)`.
    pub fn bracket_numerator(&self, regime: Regime) -> Result<LaurentPoly, RingError> {
        let m = self.q_power(regime)?;
        let one = num_complex::Complex::new(1, 0);
        LaurentPoly::from_terms(regime, [(m, one), (m.inv(), -one)])
    }
}

impl fmt::Display for QExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(i32, &str)> = Vec::new();
        for (c, s) in [(self.constant, ""), (self.alpha, "α"), (self.u, "u"), (self.v, "v")] {
            if c != 0 {
                parts.push((c, s));
            }
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, s)) in parts.into_iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.abs();
            if s.is_empty() || mag != 1 {
                write!(f, "{sign}{mag}{s}")?;
            } else {
                write!(f, "{sign}{s}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for QExponent {
    type Err = RingError;

    /// Accepts forms such as `1+α-u`, `alpha + u`, `2`, `-3u+v`.
    fn from_str(s: &str) -> Result<Self, RingError> {
        let bad = || RingError::Parse(format!("malformed q-exponent `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('−', "-");
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = QExponent::default();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if rest.len() == compact.len() => (1, rest),
                _ => return Err(bad()),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let split = term.find(|c: char| !(c.is_ascii_digit() || c == '/' || c == '.')).unwrap_or(term.len());
            let (coef, sym) = term.split_at(split);
            let c: i32 = if coef.is_empty() {
                if sym.is_empty() {
                    return Err(bad());
                }
                1
            } else if coef.contains('/') || coef.contains('.') {
                return Err(RingError::NonIntegerQExponent(s.to_string()));
            } else {
                coef.parse().map_err(|_| bad())?
            };
            let slot = match sym {
                "" => &mut out.constant,
                "α" | "a" | "alpha" => &mut out.alpha,
                "u" => &mut out.u,
                "v" => &mut out.v,
                _ => return Err(bad()),
            };
            *slot += sign * c;
        }
        Ok(out)
    }
}

/// The q-bracket `[x] = (qˣ − q̄ˣ)/(q − q̄)`.
pub fn qbracket(x: &QExponent, regime: Regime) -> Result<RationalLaurent, RingError> {
    let delta = QExponent::int(1).bracket_numerator(regime)?;
    RationalLaurent::new(x.bracket_numerator(regime)?, delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_brackets_are_polynomials() {
        let t = Regime::Trig;
        assert_eq!(qbracket(&QExponent::int(1), t).unwrap(), RationalLaurent::one(t));
        let two = qbracket(&QExponent::int(2), t).unwrap();
        assert_eq!(two.as_poly().unwrap().to_string(), "Q^2 + Q^-2");
        let three = qbracket(&QExponent::int(3), t).unwrap();
        assert_eq!(three.as_poly().unwrap().to_string(), "Q^4 + 1 + Q^-4");
        assert!(qbracket(&QExponent::int(0), t).unwrap().is_zero());
    }

    #[test]
    fn alpha_bracket_is_a_ratio() {
        let t = Regime::Trig;
        let a = qbracket(&"α".parse().unwrap(), t).unwrap();
        assert!(!a.is_polynomial());
        let delta = RationalLaurent::from_poly(LaurentPoly::parse(t, "Q^2 - Q^-2").unwrap());
        assert_eq!(a.try_mul(&delta).unwrap().as_poly().unwrap().to_string(), "Aa - Aa^-1");
    }

    #[test]
    fn parse_and_display() {
        let x: QExponent = "1+α-u".parse().unwrap();
        assert_eq!(x, QExponent::new(1, 1, -1, 0));
        assert_eq!(x.to_string(), "1+α-u");
        assert_eq!("alpha + u".parse::<QExponent>().unwrap(), QExponent::new(0, 1, 1, 0));
        assert_eq!("-3u+v".parse::<QExponent>().unwrap(), QExponent::new(0, 0, -3, 1));
        assert!(matches!("1/2+u".parse::<QExponent>(), Err(RingError::NonIntegerQExponent(_))));
        assert!("u+".parse::<QExponent>().is_err());
        assert!("w".parse::<QExponent>().is_err());
    }

    #[test]
    fn quantum_regime_rejects_spectral_symbols() {
        assert!(qbracket(&"u".parse().unwrap(), Regime::Quantum).is_err());
        let a = qbracket(&"α".parse().unwrap(), Regime::Quantum).unwrap();
        let delta = RationalLaurent::from_poly(LaurentPoly::parse(Regime::Quantum, "Q^2 - Q^-2").unwrap());
        assert_eq!(a.try_mul(&delta).unwrap().as_poly().unwrap().to_string(), "p * Q^-1 - p^-1 * Q");
    }
}
