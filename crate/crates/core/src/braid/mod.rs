//! Braid words on `n` strands.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("braid must have at least one strand")]
    NoStrands,
    #[error("letter {letter} out of range for {strands} strands")]
    OutOfRange { letter: i32, strands: usize },
    #[error("zero is not a braid letter")]
    ZeroLetter,
    #[error("malformed token `{0}`")]
    Malformed(String),
    #[error("expected `n : letters`")]
    MissingColon,
}

/// A braid word: letter `k > 0` is `σ_k`, `k < 0` is `σ_|k|^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &k in &letters {
            if k == 0 {
                return Err(BraidError::ZeroLetter);
            }
            if k.unsigned_abs() as usize >= strands {
                return Err(BraidError::OutOfRange { letter: k, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses `n : k1 k2 ... km`.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let (n, rest) = text.split_once(':').ok_or(BraidError::MissingColon)?;
        let n = n.trim();
        let strands: usize = n.parse().map_err(|_| BraidError::Malformed(n.to_string()))?;
        let letters = rest
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| BraidError::Malformed(t.to_string())))
            .collect::<Result<_, _>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the letter signs.
    pub fn writhe(&self) -> i32 {
        self.letters.iter().map(|k| k.signum()).sum()
    }

    /// The same word with every crossing switched.
    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|k| -k).collect() }
    }

    /// The inverse braid.
    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|k| -k).collect() }
    }

    /// `self` followed by `other` on the larger strand count.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands.max(other.strands), letters }
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate(&self, g: &Self) -> Self {
        g.concat(self).concat(&g.inverse())
    }

    /// Markov stabilisation: one more strand and a trailing `σ_n^{±1}`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Underlying permutation: strand position `i` ends at `perm[i]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        // pos[j] is the strand now at position j
        let mut perm = vec![0; self.strands];
        for (j, &s) in pos.iter().enumerate() {
            perm[s] = j;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut j = s;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                }
            }
        }
        count
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} :", self.strands)?;
        for k in &self.letters {
            write!(f, " {k}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;
    fn from_str(s: &str) -> Result<Self, BraidError> {
        Self::parse(s)
    }
}

/// `σ₁σ̄₂σ₁` and `σ₂σ̄₁σ₂` on three strands.
pub fn matveev_pair() -> (BraidWord, BraidWord) {
    (BraidWord::new(3, vec![1, -2, 1]).expect("valid"), BraidWord::new(3, vec![2, -1, 2]).expect("valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let t = BraidWord::parse("2 : 1 1 1").unwrap();
        assert_eq!(t.writhe(), 3);
        let f = BraidWord::parse("3 : 1 -2 1 -2").unwrap();
        assert_eq!(f.writhe(), 0);
        assert_eq!(BraidWord::parse("1 :").unwrap().writhe(), 0);
        let (a, b) = matveev_pair();
        assert_eq!(a, BraidWord::parse("3 : 1 -2 1").unwrap());
        assert_eq!(b, BraidWord::parse("3 : 2 -1 2").unwrap());
        assert_eq!((a.writhe(), b.writhe()), (1, 1));
        assert_ne!(a.letters(), b.letters());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(BraidWord::parse("2 : 5"), Err(BraidError::OutOfRange { letter: 5, strands: 2 }));
        assert_eq!(BraidWord::parse("0 :"), Err(BraidError::NoStrands));
        assert!(matches!(BraidWord::parse("2 : x"), Err(BraidError::Malformed(_))));
        assert_eq!(BraidWord::parse("2 1 1"), Err(BraidError::MissingColon));
        assert_eq!(BraidWord::parse("3 : 0"), Err(BraidError::ZeroLetter));
    }

    #[test]
    fn format_round_trip() {
        for t in ["2 : 1 1 1", "3 : 1 -2 1 -2", "1 :"] {
            assert_eq!(BraidWord::parse(t).unwrap().to_string(), t);
        }
        assert_eq!(BraidWord::parse("  3:1   -2 ").unwrap().to_string(), "3 : 1 -2");
    }

    #[test]
    fn closure_components() {
        assert!(BraidWord::parse("2 : 1 1 1").unwrap().is_knot());
        assert_eq!(BraidWord::parse("2 : 1 1").unwrap().components(), 2);
        assert!(BraidWord::parse("3 : 1 -2 1 -2").unwrap().is_knot());
        assert_eq!(BraidWord::parse("3 :").unwrap().components(), 3);
        let (a, b) = matveev_pair();
        assert_eq!((a.components(), b.components()), (2, 2));
    }
}
