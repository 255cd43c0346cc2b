//! Two-site operators: the trigonometric R-matrix, its gauge transforms and
//! spectral limits, and the four constant R-matrices.

mod eigen;
mod invert;
mod quantum;
mod trig;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::ring::{LaurentPoly, RationalLaurent, Regime, RingError};

pub use eigen::{char_poly, eigen_check, eigenvector_deficiency, sample_points, CPoly, EigenReport, SamplePoint};
pub use invert::invert;
pub use quantum::{quantum_r, tabulated_eigenvalues};
pub use trig::{
    apply_gauge, build_trig_gauge_free, build_trig_gauged, spectral_limit, trig_numerators, GaugeCase, GaugeMatrix,
};

/// Index quadruple `[a, b, c, d]` of the matrix unit `e^{ab}_{cd}`, which maps
/// `|c⟩⊗|d⟩` to `|a⟩⊗|b⟩`. Indices run over `1..=4`.
pub type Idx4 = [u8; 4];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RmatError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("divergent spectral limit at e^{{{}{}}}_{{{}{}}}", .0[0], .0[1], .0[2], .0[3])]
    DivergentLimit(Idx4),
    #[error("operator is singular")]
    Singular,
    #[error("inverse is not a Laurent polynomial at e^{{{}{}}}_{{{}{}}}", .0[0], .0[1], .0[2], .0[3])]
    NotLaurent(Idx4),
    #[error("case index must be 1..=4, got {0}")]
    BadCase(u8),
    #[error("case 4 growth exponent must lie strictly between 0 and 1")]
    BadGamma,
    #[error("eigenvalue check failed: {0}")]
    Eigen(String),
}

/// Coefficient types that a [`SparseROp`] can carry.
pub trait Entry: Clone + PartialEq + fmt::Display + Send + Sync {
    fn zero(regime: Regime) -> Self;
    fn one(regime: Regime) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl Entry for LaurentPoly {
    fn zero(regime: Regime) -> Self {
        LaurentPoly::zero(regime)
    }
    fn one(regime: Regime) -> Self {
        LaurentPoly::one(regime)
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Entry for RationalLaurent {
    fn zero(regime: Regime) -> Self {
        RationalLaurent::zero(regime)
    }
    fn one(regime: Regime) -> Self {
        RationalLaurent::one(regime)
    }
    fn is_zero(&self) -> bool {
        RationalLaurent::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).unwrap_or_else(|e| panic!("{e}"))
    }
    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

/// Row or column position of the pair `(a, b)` in the 16-dimensional space.
pub fn pair_index(a: u8, b: u8) -> usize {
    (a as usize - 1) * 4 + (b as usize - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_of(i: usize) -> (u8, u8) {
    ((i / 4) as u8 + 1, (i % 4) as u8 + 1)
}

/// Sparse 16×16 operator on `C⁴ ⊗ C⁴` with no stored zero entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseROp<E = LaurentPoly> {
    regime: Regime,
    entries: BTreeMap<Idx4, E>,
}

/// Operator over Laurent polynomials.
pub type QOp = SparseROp<LaurentPoly>;
/// Operator over rational Laurent functions.
pub type TrigOp = SparseROp<RationalLaurent>;

#[derive(Serialize)]
struct JsonEntry {
    indices: Idx4,
    entry: String,
}

impl<E: Entry> SparseROp<E> {
    pub fn new(regime: Regime) -> Self {
        SparseROp { regime, entries: BTreeMap::new() }
    }

    pub fn identity(regime: Regime) -> Self {
        let mut op = Self::new(regime);
        for a in 1..=4 {
            for b in 1..=4 {
                op.insert([a, b, a, b], E::one(regime));
            }
        }
        op
    }

    pub fn from_entries(regime: Regime, entries: impl IntoIterator<Item = (Idx4, E)>) -> Self {
        let mut op = Self::new(regime);
        for (k, v) in entries {
            op.insert(k, v);
        }
        op
    }

    /// Sets an entry, removing it when zero.
    pub fn insert(&mut self, k: Idx4, v: E) {
        assert!(k.iter().all(|&i| (1..=4).contains(&i)), "index out of range: {k:?}");
        if v.is_zero() {
            self.entries.remove(&k);
        } else {
            self.entries.insert(k, v);
        }
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn get(&self, k: Idx4) -> Option<&E> {
        self.entries.get(&k)
    }

    /// Entry value, zero when absent.
    pub fn at(&self, k: Idx4) -> E {
        self.entries.get(&k).cloned().unwrap_or_else(|| E::zero(self.regime))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Idx4, &E)> {
        self.entries.iter()
    }

    /// Number of nonzero components.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Operator product `self · other`.
    pub fn product(&self, other: &Self) -> Self {
        type Row<'a, E> = Vec<((u8, u8), &'a E)>;
        let mut rows: BTreeMap<(u8, u8), Row<E>> = BTreeMap::new();
        for (k, v) in &other.entries {
            rows.entry((k[0], k[1])).or_default().push(((k[2], k[3]), v));
        }
        let mut acc: BTreeMap<Idx4, E> = BTreeMap::new();
        for (k, a) in &self.entries {
            if let Some(row) = rows.get(&(k[2], k[3])) {
                for &((c, d), b) in row {
                    let key = [k[0], k[1], c, d];
                    let t = a.times(b);
                    match acc.get_mut(&key) {
                        Some(s) => *s = s.plus(&t),
                        None => {
                            acc.insert(key, t);
                        }
                    }
                }
            }
        }
        Self::from_entries(self.regime, acc)
    }

    pub fn scale(&self, s: &E) -> Self {
        Self::from_entries(self.regime, self.entries.iter().map(|(k, v)| (*k, v.times(s))))
    }

    pub fn try_map<F: Entry, Err>(
        &self,
        regime: Regime,
        mut f: impl FnMut(&Idx4, &E) -> Result<F, Err>,
    ) -> Result<SparseROp<F>, Err> {
        let mut out = SparseROp::new(regime);
        for (k, v) in &self.entries {
            out.insert(*k, f(k, v)?);
        }
        Ok(out)
    }

    /// Dense 16×16 form, rows and columns ordered by [`pair_index`].
    pub fn to_dense(&self) -> Vec<Vec<E>> {
        let mut m = vec![vec![E::zero(self.regime); 16]; 16];
        for (k, v) in &self.entries {
            m[pair_index(k[0], k[1])][pair_index(k[2], k[3])] = v.clone();
        }
        m
    }

    pub fn from_dense(regime: Regime, m: &[Vec<E>]) -> Self {
        let mut op = Self::new(regime);
        for (i, row) in m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let (a, b) = pair_of(i);
                let (c, d) = pair_of(j);
                op.insert([a, b, c, d], v.clone());
            }
        }
        op
    }

    /// One line per entry: `e^{ab}_{cd} = entry`, sorted by indices.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.entries {
            s.push_str(&format!("e^{{{}{}}}_{{{}{}}} = {}\n", k[0], k[1], k[2], k[3], v));
        }
        s
    }

    /// JSON list of `{indices, entry}` objects sorted by indices.
    pub fn to_json(&self) -> String {
        let list: Vec<JsonEntry> =
            self.entries.iter().map(|(k, v)| JsonEntry { indices: *k, entry: v.to_string() }).collect();
        serde_json::to_string_pretty(&list).expect("serialisable")
    }

    /// First index quadruple where the two operators differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Idx4, E, E)> {
        let keys: std::collections::BTreeSet<_> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.at(*k), other.at(*k));
            (a != b).then_some((*k, a, b))
        })
    }
}
