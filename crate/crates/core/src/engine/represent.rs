use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{EngineError, StateModel};
use crate::braid::BraidWord;
use crate::ring::{LaurentPoly, Regime, Var};
use crate::rmat::QOp;

/// Default bound on stored monomial terms across a representation.
pub const DEFAULT_MAX_TERMS: usize = 200_000_000;

/// Basis state of `n` sites, two bits per site; site `0` is the lowest pair.
type State = u64;

fn digit(s: State, site: usize) -> u8 {
    ((s >> (2 * site)) & 3) as u8
}

fn with_digits(s: State, site: usize, a: u8, b: u8) -> State {
    let mask = !(0xf << (2 * site));
    (s & mask) | ((a as u64) << (2 * site)) | ((b as u64) << (2 * site + 2))
}

/// Nonzero entries of each column `(c, d)` of a two-site operator, zero-based.
struct Columns(Vec<Vec<(u8, u8, LaurentPoly)>>);

impl Columns {
    fn new(op: &QOp) -> Self {
        let mut cols = vec![Vec::new(); 16];
        for (k, v) in op.iter() {
            cols[((k[2] - 1) * 4 + (k[3] - 1)) as usize].push((k[0] - 1, k[1] - 1, v.clone()));
        }
        Columns(cols)
    }
}

type Vector = HashMap<State, LaurentPoly>;

fn terms_of(v: &Vector) -> usize {
    v.values().map(LaurentPoly::len).sum()
}

fn apply(v: &Vector, site: usize, op: &Columns) -> Vector {
    let mut out: Vector = HashMap::with_capacity(v.len());
    for (&s, x) in v {
        let (c, d) = (digit(s, site), digit(s, site + 1));
        for (a, b, e) in &op.0[(c * 4 + d) as usize] {
            let t = x * e;
            let key = with_digits(s, site, *a, *b);
            match out.get_mut(&key) {
                Some(acc) => *acc = &*acc + &t,
                None => {
                    out.insert(key, t);
                }
            }
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

fn propagate(
    b: &BraidWord,
    start: State,
    ops: &(Columns, Columns),
    cap: usize,
    used: &AtomicUsize,
) -> Result<Vector, EngineError> {
    let mut v: Vector = HashMap::from([(start, LaurentPoly::one(Regime::Quantum))]);
    for &k in b.letters() {
        let site = k.unsigned_abs() as usize - 1;
        v = apply(&v, site, if k > 0 { &ops.0 } else { &ops.1 });
        if terms_of(&v) > cap {
            return Err(EngineError::MemoryCap { cap });
        }
    }
    let total = used.fetch_add(terms_of(&v), Ordering::Relaxed) + terms_of(&v);
    if total > cap {
        return Err(EngineError::MemoryCap { cap });
    }
    Ok(v)
}

/// Image of a braid under `σ_i ↦ σ` acting on sites `i, i+1`, stored by
/// column. Letters act in reading order, the first letter first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidRep {
    pub strands: usize,
    columns: BTreeMap<State, BTreeMap<State, LaurentPoly>>,
}

impl BraidRep {
    /// Entry with one-based site indices.
    pub fn at(&self, row: &[u8], col: &[u8]) -> LaurentPoly {
        let enc = |v: &[u8]| v.iter().enumerate().fold(0u64, |s, (i, &x)| s | ((x as u64 - 1) << (2 * i)));
        self.columns
            .get(&enc(col))
            .and_then(|c| c.get(&enc(row)))
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(Regime::Quantum))
    }

    pub fn nnz(&self) -> usize {
        self.columns.values().map(BTreeMap::len).sum()
    }
}

/// Full sparse representation of `b` on `4^n` states.
pub fn represent(b: &BraidWord, sigma: &QOp, sigma_inv: &QOp, cap: usize) -> Result<BraidRep, EngineError> {
    let n = b.strands();
    let ops = (Columns::new(sigma), Columns::new(sigma_inv));
    let used = AtomicUsize::new(0);
    let cols = (0..1u64 << (2 * n))
        .into_par_iter()
        .map(|s| propagate(b, s, &ops, cap, &used).map(|v| (s, v.into_iter().collect())))
        .collect::<Result<BTreeMap<_, _>, _>>()?;
    Ok(BraidRep { strands: n, columns: cols })
}

/// The 4×4 matrix left after closing every strand but the last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleInvariant {
    pub matrix: [[LaurentPoly; 4]; 4],
}

impl TangleInvariant {
    pub fn entry(&self, a: usize, b: usize) -> &LaurentPoly {
        &self.matrix[a - 1][b - 1]
    }

    pub fn diagonal(&self) -> [LaurentPoly; 4] {
        std::array::from_fn(|i| self.matrix[i][i].clone())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..4).all(|a| (0..4).all(|b| a == b || self.matrix[a][b].is_zero()))
    }

    /// The common diagonal entry of a scalar matrix.
    pub fn scalar(&self) -> Option<LaurentPoly> {
        let d = &self.matrix[0][0];
        (self.is_diagonal() && self.matrix.iter().enumerate().all(|(i, r)| &r[i] == d)).then(|| d.clone())
    }

    pub fn y_free(&self) -> bool {
        self.matrix.iter().flatten().all(|e| !e.contains_var(Var::Y))
    }

    pub fn is_real(&self) -> bool {
        self.matrix.iter().flatten().all(LaurentPoly::is_real)
    }
}

/// Partial trace `Σ_c ∏ C[c_j] · M^{(c,a)}_{(c,b)}` of the braid
/// representation over strands `1..n−1`; strand `n` stays open.
pub fn tangle_invariant(b: &BraidWord, model: &StateModel, cap: usize) -> Result<TangleInvariant, EngineError> {
    if !b.is_knot() {
        return Err(EngineError::NotAKnot(b.components()));
    }
    let n = b.strands();
    let closed = n - 1;
    let ops = (Columns::new(&model.sigma), Columns::new(&model.sigma_inv));
    let used = AtomicUsize::new(0);
    let open_shift = 2 * closed;
    let closed_mask = (1u64 << open_shift) - 1;
    let weight =
        |c: State| (0..closed).fold(LaurentPoly::one(Regime::Quantum), |acc, j| &acc * &model.c[digit(c, j) as usize]);
    let parts = (0..1u64 << (2 * n))
        .into_par_iter()
        .map(|start| -> Result<[[LaurentPoly; 4]; 4], EngineError> {
            let c = start & closed_mask;
            let bcol = (start >> open_shift) as usize;
            let v = propagate(b, start, &ops, cap, &used)?;
            used.fetch_sub(terms_of(&v), Ordering::Relaxed);
            let mut m: [[LaurentPoly; 4]; 4] =
                std::array::from_fn(|_| std::array::from_fn(|_| LaurentPoly::zero(Regime::Quantum)));
            let w = weight(c);
            for (s, x) in &v {
                if s & closed_mask == c {
                    let a = (s >> open_shift) as usize;
                    m[a][bcol] = &m[a][bcol] + &(&w * x);
                }
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut matrix: [[LaurentPoly; 4]; 4] =
        std::array::from_fn(|_| std::array::from_fn(|_| LaurentPoly::zero(Regime::Quantum)));
    for part in parts {
        for a in 0..4 {
            for b in 0..4 {
                if !part[a][b].is_zero() {
                    matrix[a][b] = &matrix[a][b] + &part[a][b];
                }
            }
        }
    }
    Ok(TangleInvariant { matrix })
}
