use std::collections::BTreeMap;

use super::{OnePoly, OracleError};
use crate::braid::BraidWord;

/// Longest word accepted by the state sum.
pub const MAX_JONES_LETTERS: usize = 24;

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

/// Jones polynomial of the closure by the Kauffman bracket state sum,
/// normalised by `(−A³)^{−w}` and read in `t = A^{−4}`.
pub fn jones(b: &BraidWord) -> Result<OnePoly, OracleError> {
    if !b.is_knot() {
        return Err(OracleError::NotAKnot(b.components()));
    }
    let letters = b.letters();
    let len = letters.len();
    if len > MAX_JONES_LETTERS {
        return Err(OracleError::TooLong(len));
    }
    let n = b.strands();
    let levels = len.max(1);
    // point (s, j): strand position s at level j; level `len` wraps to 0
    let point = |s: usize, j: usize| s + n * (j % levels);

    // bracket as a Laurent polynomial in A
    let mut bracket: BTreeMap<i32, i64> = BTreeMap::new();
    let mut parent = vec![0; n * levels];
    for state in 0u32..(1u32 << len) {
        parent.iter_mut().enumerate().for_each(|(i, p)| *p = i);
        let mut a_minus_b = 0i32;
        for (j, &k) in letters.iter().enumerate() {
            let i = k.unsigned_abs() as usize - 1;
            for s in 0..n {
                if s != i && s != i + 1 {
                    union(&mut parent, point(s, j), point(s, j + 1));
                }
            }
            let a_smoothing = state >> j & 1 == 0;
            a_minus_b += if a_smoothing { 1 } else { -1 };
            let vertical = a_smoothing == (k > 0);
            if vertical {
                union(&mut parent, point(i, j), point(i, j + 1));
                union(&mut parent, point(i + 1, j), point(i + 1, j + 1));
            } else {
                union(&mut parent, point(i, j), point(i + 1, j));
                union(&mut parent, point(i, j + 1), point(i + 1, j + 1));
            }
        }
        let loops = (0..n * levels).filter(|&x| find(&mut parent, x) == x).count();
        // A^{a−b} · d^{loops−1}, d = −A² − A⁻²
        let mut term: BTreeMap<i32, i64> = BTreeMap::from([(a_minus_b, 1)]);
        for _ in 1..loops {
            let mut next = BTreeMap::new();
            for (e, c) in term {
                *next.entry(e + 2).or_insert(0) -= c;
                *next.entry(e - 2).or_insert(0) -= c;
            }
            term = next;
        }
        for (e, c) in term {
            *bracket.entry(e).or_insert(0) += c;
        }
    }
    // (−A³)^{−w}
    let w = b.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let mut out = Vec::new();
    for (e, c) in bracket {
        if c == 0 {
            continue;
        }
        let e = e - 3 * w;
        if e % 2 != 0 {
            return Err(OracleError::Internal("odd A-exponent in normalised bracket"));
        }
        // A^e = t^{−e/4} = (t^{1/2})^{−e/2}
        out.push((-e / 2, c * sign));
    }
    Ok(OnePoly::from_half_terms(out))
}
