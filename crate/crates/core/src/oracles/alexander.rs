use super::{OnePoly, OracleError};
use crate::braid::BraidWord;

type Mat = Vec<Vec<OnePoly>>;

fn t(k: i32) -> OnePoly {
    OnePoly::from_terms([(k, 1)])
}

fn c(v: i64) -> OnePoly {
    OnePoly::from_terms([(0, v)])
}

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| if i == j { c(1) } else { OnePoly::zero() }).collect()).collect()
}

/// Reduced Burau matrix of one letter on `n` strands, size `n − 1`.
fn burau_letter(n: usize, letter: i32) -> Mat {
    let m = n - 1;
    let mut b = identity(m);
    let i = letter.unsigned_abs() as usize; // 1-based generator index
    let pos = letter > 0;
    let neg_t = if pos { -t(1) } else { -t(-1) };
    if m == 1 {
        b[0][0] = neg_t;
        return b;
    }
    let k = i - 1; // 0-based row of the generator
    b[k][k] = neg_t;
    if i > 1 {
        // entry left of the diagonal block
        b[k - 1][k] = if pos { t(1) } else { c(1) };
    }
    if i < m {
        b[k + 1][k] = if pos { c(1) } else { t(-1) };
    }
    b
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![OnePoly::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Determinant by Bareiss fraction-free elimination.
fn det(mut m: Mat) -> OnePoly {
    let n = m.len();
    if n == 0 {
        return c(1);
    }
    let mut sign = 1;
    let mut prev = c(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return OnePoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(sign)
}

/// Alexander–Conway polynomial of the closure via the reduced Burau
/// representation, normalised so that `Δ(t) = Δ(t̄)` and `Δ(1) = 1`.
pub fn alexander(b: &BraidWord) -> Result<OnePoly, OracleError> {
    if !b.is_knot() {
        return Err(OracleError::NotAKnot(b.components()));
    }
    let n = b.strands();
    if n == 1 {
        return Ok(OnePoly::one());
    }
    let mut acc = identity(n - 1);
    for &k in b.letters() {
        acc = mat_mul(&acc, &burau_letter(n, k));
    }
    let i_minus_b: Mat = acc
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, v)| if i == j { &c(1) - v } else { -v.clone() }).collect())
        .collect();
    let d = det(i_minus_b);
    let cyclo = OnePoly::from_terms((0..n as i32).map(|k| (k, 1)));
    let q = d.div_exact(&cyclo).ok_or(OracleError::Internal("Burau determinant not divisible"))?;
    let s = q.symmetrized();
    if s.at_one() != 1 {
        return Err(OracleError::Internal("Alexander polynomial with |Δ(1)| ≠ 1"));
    }
    Ok(s)
}
