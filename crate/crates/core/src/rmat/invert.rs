use super::{pair_of, QOp, RmatError, SparseROp};
use crate::ring::{Gauss, LaurentPoly, RingError};

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

/// Pivot quality: unit monomials first, then by term count.
fn pivot_cost(p: &LaurentPoly) -> (u8, usize) {
    match p.as_monomial() {
        Some((c, m)) if m.exp(crate::ring::Var::Y) == 0 && c.norm_sqr() == 1 => (0, 1),
        _ => (1, p.len()),
    }
}

/// `b / d` where `d` may contain `Y`.
fn divide(b: &LaurentPoly, d: &LaurentPoly) -> Result<LaurentPoly, RingError> {
    if d.is_y_free() {
        return b.div_exact(d);
    }
    let c = d.conj_y();
    (b * &c).div_exact(&(d * &c))
}

/// Inverts one diagonal block by fraction-free Gauss–Jordan elimination.
fn invert_block(a: Vec<Vec<LaurentPoly>>) -> Result<Vec<Vec<LaurentPoly>>, RmatError> {
    let n = a.len();
    let regime = a[0][0].regime();
    let mut rows: Vec<Vec<LaurentPoly>> = a
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| LaurentPoly::int(regime, (i == j) as i64)));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| pivot_cost(&rows[r][col]))
            .ok_or(RmatError::Singular)?;
        rows.swap(col, piv);
        let p = rows[col][col].clone();
        let unit = pivot_cost(&p).0 == 0;
        for r in 0..n {
            if r == col || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            if unit {
                // exact: subtract (f / p) · pivot row
                let (c, m) = p.as_monomial().unwrap();
                let q = f.mul_monomial(m.inv()).scale(Gauss::new(c.re, -c.im));
                let prow = rows[col].clone();
                for (x, y) in rows[r].iter_mut().zip(prow.iter()) {
                    *x = &*x - &(&q * y);
                }
            } else {
                let prow = rows[col].clone();
                for (x, y) in rows[r].iter_mut().zip(prow.iter()) {
                    *x = &(&*x * &p) - &(&f * y);
                }
            }
        }
    }
    let mut inv = vec![Vec::with_capacity(n); n];
    for (i, row) in rows.iter().enumerate() {
        let d = &row[i];
        for b in &row[n..] {
            inv[i].push(divide(b, d).map_err(|_| RmatError::NotLaurent([0; 4]))?);
        }
    }
    Ok(inv)
}

/// Exact inverse over the Laurent ring, computed block by block and checked
/// by multiplying back.
pub fn invert(r: &QOp) -> Result<QOp, RmatError> {
    let regime = r.regime();
    let dense = r.to_dense();
    let mut parent: Vec<usize> = (0..16).collect();
    for (i, row) in dense.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..16 {
        let root = find(&mut parent, i);
        blocks.entry(root).or_default().push(i);
    }
    let mut out = SparseROp::new(regime);
    for idx in blocks.values() {
        let sub: Vec<Vec<LaurentPoly>> =
            idx.iter().map(|&i| idx.iter().map(|&j| dense[i][j].clone()).collect()).collect();
        let inv = invert_block(sub).map_err(|e| match e {
            RmatError::NotLaurent(_) => {
                let (a, b) = pair_of(idx[0]);
                RmatError::NotLaurent([a, b, a, b])
            }
            e => e,
        })?;
        for (x, &i) in idx.iter().enumerate() {
            for (y, &j) in idx.iter().enumerate() {
                let (a, b) = pair_of(i);
                let (c, d) = pair_of(j);
                out.insert([a, b, c, d], inv[x][y].clone());
            }
        }
    }
    if r.product(&out) != QOp::identity(regime) {
        return Err(RmatError::Singular);
    }
    Ok(out)
}
