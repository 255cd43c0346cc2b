use super::monomial::{Monomial, Var};
use super::poly::{Gauss, LaurentPoly};
use super::{Regime, RingError};

fn err(msg: impl Into<String>) -> RingError {
    RingError::Parse(msg.into())
}

fn parse_coeff(tok: &str) -> Option<Gauss> {
    if let Some(inner) = tok.strip_prefix('(').and_then(|t| t.strip_suffix("i)")) {
        // (a+bi) / (a-bi)
        let cut = inner.rfind(['+', '-']).filter(|&k| k > 0)?;
        let re = inner[..cut].parse().ok()?;
        let im = match &inner[cut..] {
            "+" => 1,
            "-" => -1,
            s => s.parse().ok()?,
        };
        return Some(Gauss::new(re, im));
    }
    if let Some(im) = tok.strip_suffix('i') {
        let im = match im {
            "" => 1,
            "-" => -1,
            s => s.parse().ok()?,
        };
        return Some(Gauss::new(0, im));
    }
    tok.parse().ok().map(|re| Gauss::new(re, 0))
}

fn parse_term(regime: Regime, text: &str) -> Result<(Monomial, Gauss), RingError> {
    let mut c = Gauss::new(1, 0);
    let mut m = Monomial::ONE;
    for factor in text.split('*').map(str::trim) {
        if factor.is_empty() {
            return Err(err(format!("empty factor in `{text}`")));
        }
        if let Some(k) = parse_coeff(factor) {
            c *= k;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (n, e.parse::<i16>().map_err(|_| err(format!("bad exponent in `{factor}`")))?),
            None => (factor, 1),
        };
        let v = Var::from_name(name).ok_or_else(|| err(format!("unknown variable `{name}`")))?;
        if !regime.allows(v) {
            return Err(RingError::VariableNotInRegime { var: v, regime });
        }
        m = m * Monomial::pow(v, exp);
    }
    Ok((m, c))
}

/// Parses the canonical string form produced by `Display`.
pub fn parse(regime: Regime, text: &str) -> Result<LaurentPoly, RingError> {
    let text = text.trim().replace('−', "-");
    if text.is_empty() {
        return Err(err("empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    let mut sign = 1;
    let bytes = text.as_bytes();
    let mut k = 0;
    if bytes[0] == b'-' {
        sign = -1;
        start = 1;
        k = 1;
    }
    while k < bytes.len() {
        match bytes[k] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && k > start && bytes[k - 1] == b' ' && bytes.get(k + 1) == Some(&b' ') => {
                let (m, c) = parse_term(regime, text[start..k].trim())?;
                terms.push((m, c * sign));
                sign = if bytes[k] == b'-' { -1 } else { 1 };
                start = k + 1;
            }
            _ => {}
        }
        k += 1;
    }
    let (m, c) = parse_term(regime, text[start..].trim())?;
    terms.push((m, c * sign));
    LaurentPoly::from_terms(regime, terms)
}

impl LaurentPoly {
    pub fn parse(regime: Regime, text: &str) -> Result<Self, RingError> {
        parse(regime, text)
    }
}
