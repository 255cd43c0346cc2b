//! Symbolic Yang–Baxter verifiers on the triple tensor space.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::ring::{LaurentPoly, RationalLaurent, Regime, Replacement, Var};
use crate::rmat::{trig_numerators, Entry, GaugeMatrix, QOp, SparseROp, TrigOp};

/// Index triple `(a, b, c)` of `|a⟩⊗|b⟩⊗|c⟩`.
pub type Idx3 = [u8; 3];

/// Which pair of tensor factors a two-site operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    S12,
    S23,
    S13,
}

/// Sparse 64×64 operator on `(C⁴)^{⊗3}`, stored by rows.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeSiteOp<E = LaurentPoly> {
    regime: Regime,
    rows: BTreeMap<Idx3, BTreeMap<Idx3, E>>,
}

impl<E: Entry> ThreeSiteOp<E> {
    pub fn new(regime: Regime) -> Self {
        ThreeSiteOp { regime, rows: BTreeMap::new() }
    }

    pub fn identity(regime: Regime) -> Self {
        Self::embed(&SparseROp::identity(regime), Slot::S12)
    }

    pub fn insert(&mut self, row: Idx3, col: Idx3, v: E) {
        if v.is_zero() {
            if let Some(r) = self.rows.get_mut(&row) {
                r.remove(&col);
                if r.is_empty() {
                    self.rows.remove(&row);
                }
            }
        } else {
            self.rows.entry(row).or_default().insert(col, v);
        }
    }

    pub fn get(&self, row: Idx3, col: Idx3) -> Option<&E> {
        self.rows.get(&row).and_then(|r| r.get(&col))
    }

    pub fn nnz(&self) -> usize {
        self.rows.values().map(|r| r.len()).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Idx3, Idx3, &E)> {
        self.rows.iter().flat_map(|(r, cols)| cols.iter().map(move |(c, v)| (*r, *c, v)))
    }

    /// `R` acting on the given pair of factors, identity on the third.
    pub fn embed(r: &SparseROp<E>, slot: Slot) -> Self {
        let mut out = Self::new(r.regime());
        for (k, v) in r.iter() {
            for x in 1..=4 {
                let (row, col) = match slot {
                    Slot::S12 => ([k[0], k[1], x], [k[2], k[3], x]),
                    Slot::S23 => ([x, k[0], k[1]], [x, k[2], k[3]]),
                    Slot::S13 => ([k[0], x, k[1]], [k[2], x, k[3]]),
                };
                out.insert(row, col, v.clone());
            }
        }
        out
    }

    /// Operator product `self · other`, parallel over rows.
    pub fn product(&self, other: &Self) -> Self {
        let rows: BTreeMap<Idx3, BTreeMap<Idx3, E>> = self
            .rows
            .par_iter()
            .map(|(r, cols)| {
                let mut acc: BTreeMap<Idx3, E> = BTreeMap::new();
                for (k, a) in cols {
                    if let Some(brow) = other.rows.get(k) {
                        for (c, b) in brow {
                            let t = a.times(b);
                            match acc.get_mut(c) {
                                Some(s) => *s = s.plus(&t),
                                None => {
                                    acc.insert(*c, t);
                                }
                            }
                        }
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                (*r, acc)
            })
            .filter(|(_, acc)| !acc.is_empty())
            .collect();
        ThreeSiteOp { regime: self.regime, rows }
    }

    /// First `(row, col)` where the operators differ, with both entries.
    pub fn first_difference(&self, other: &Self) -> Option<Witness> {
        let zero = E::zero(self.regime);
        let mut keys: Vec<(Idx3, Idx3)> = self.iter().chain(other.iter()).map(|(r, c, _)| (r, c)).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|(r, c)| {
            let a = self.get(r, c).unwrap_or(&zero);
            let b = other.get(r, c).unwrap_or(&zero);
            (a != b).then(|| Witness { row: r, col: c, left: a.to_string(), right: b.to_string() })
        })
    }
}

/// A differing entry of the two sides of a Yang–Baxter identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub row: Idx3,
    pub col: Idx3,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.row;
        let c = self.col;
        write!(
            f,
            "entry ({}{}{}|{}{}{}): left = {}, right = {}",
            r[0], r[1], r[2], c[0], c[1], c[2], self.left, self.right
        )
    }
}

/// Result of a Yang–Baxter check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeOutcome {
    pub witness: Option<Witness>,
}

impl YbeOutcome {
    pub fn pass(&self) -> bool {
        self.witness.is_none()
    }
}

/// Braid-form constant Yang–Baxter equation `Ř₁₂Ř₂₃Ř₁₂ = Ř₂₃Ř₁₂Ř₂₃`.
pub fn verify_qybe<E: Entry>(r: &SparseROp<E>) -> YbeOutcome {
    let r12 = ThreeSiteOp::embed(r, Slot::S12);
    let r23 = ThreeSiteOp::embed(r, Slot::S23);
    let (lhs, rhs) = rayon::join(|| r12.product(&r23).product(&r12), || r23.product(&r12).product(&r23));
    YbeOutcome { witness: lhs.first_difference(&rhs) }
}

fn substituted(op: &QOp, subs: &[(Var, Replacement)]) -> QOp {
    op.try_map(op.regime(), |_, v| v.substitute_many(subs, op.regime())).expect("monomial substitution")
}

fn at_v() -> Vec<(Var, Replacement)> {
    vec![
        (Var::X, Replacement::monomial(&[(Var::Xv, 1)])),
        (Var::Ru, Replacement::monomial(&[(Var::Rv, 1)])),
        (Var::Su, Replacement::monomial(&[(Var::Sv, 1)])),
    ]
}

fn at_sum() -> Vec<(Var, Replacement)> {
    vec![
        (Var::X, Replacement::monomial(&[(Var::X, 1), (Var::Xv, 1)])),
        (Var::Ru, Replacement::monomial(&[(Var::Ru, 1), (Var::Rv, 1)])),
        (Var::Su, Replacement::monomial(&[(Var::Su, 1), (Var::Sv, 1)])),
    ]
}

/// Additive-form TYBE `Ř₁₂(u)Ř₂₃(u+v)Ř₁₂(v) = Ř₂₃(v)Ř₁₂(u+v)Ř₂₃(u)`.
///
/// Every entry is written over one common denominator `D(u)`; both sides then
/// carry the same factor `D(u)D(u+v)D(v)`, so the identity is checked on the
/// polynomial numerators.
pub fn verify_tybe_additive(r: &TrigOp) -> YbeOutcome {
    let (nu, _) = trig_numerators(r);
    let nv = substituted(&nu, &at_v());
    let nuv = substituted(&nu, &at_sum());
    let e12 = |op: &QOp| ThreeSiteOp::embed(op, Slot::S12);
    let e23 = |op: &QOp| ThreeSiteOp::embed(op, Slot::S23);
    let (lhs, rhs) = rayon::join(
        || e12(&nu).product(&e23(&nuv)).product(&e12(&nv)),
        || e23(&nv).product(&e12(&nuv)).product(&e23(&nu)),
    );
    YbeOutcome { witness: lhs.first_difference(&rhs) }
}

/// Individual results of [`verify_gauge_properties`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeReport {
    /// `A(u)A(v) = A(u+v)`.
    pub multiplicative: bool,
    /// `A₁₁ = 1` and `A₄₄ = A₂₂·A₃₃`.
    pub structure: bool,
    /// `[R(u), A(v) ⊗ A(v)] = 0`.
    pub commutes: bool,
    /// `A(0) = I`.
    pub identity_at_zero: bool,
    /// `A(u)A(−u) = I`.
    pub inverse: bool,
}

impl GaugeReport {
    pub fn pass(&self) -> bool {
        self.multiplicative && self.structure && self.commutes && self.identity_at_zero && self.inverse
    }
}

pub fn verify_gauge_properties(a: &GaugeMatrix, r: &TrigOp) -> GaugeReport {
    let t = Regime::Trig;
    let au: Vec<LaurentPoly> = (1..=4).map(|i| a.entry(i)).collect();
    let (av, asum, aneg, azero) = (a.at_v(), a.at_sum(), a.at_neg(), a.at_zero());
    let multiplicative = (0..4).all(|i| &au[i] * &av[i] == asum[i]);
    let structure = au[0].is_one() && au[3] == &au[1] * &au[2];
    let identity_at_zero = azero.iter().all(|x| x.is_one());
    let inverse = (0..4).all(|i| (&au[i] * &aneg[i]).is_one());
    let mut d = TrigOp::new(t);
    for x in 1..=4u8 {
        for y in 1..=4u8 {
            let w = &av[x as usize - 1] * &av[y as usize - 1];
            d.insert([x, y, x, y], RationalLaurent::from_poly(w));
        }
    }
    let commutes = r.product(&d) == d.product(r);
    GaugeReport { multiplicative, structure, commutes, identity_at_zero, inverse }
}
