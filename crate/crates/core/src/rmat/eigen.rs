use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{QOp, RmatError};
use crate::ring::{crat, Assignment, CRational, LaurentPoly, Var};

/// Dense univariate polynomial over `Q(i)`, coefficients from degree 0 up.
#[derive(Clone, Debug, PartialEq)]
pub struct CPoly(pub Vec<CRational>);

impl CPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &CRational) -> CRational {
        self.0.iter().rev().fold(CRational::zero(), |acc, c| acc * x + c)
    }

    fn monic(self) -> Self {
        let s = self.trim();
        match s.0.last() {
            Some(lead) => {
                let lead = lead.clone();
                CPoly(s.0.into_iter().map(|c| c / &lead).collect())
            }
            None => s,
        }
    }

    pub fn derivative(&self) -> Self {
        CPoly(self.0.iter().enumerate().skip(1).map(|(k, c)| c * crat(k as i64, 1)).collect()).trim()
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.clone().trim();
        let mut q = vec![CRational::zero(); r.0.len().saturating_sub(dd).max(1)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = &r.0[rd] / &lead;
            for k in 0..=dd {
                let t = &c * &d.0[k];
                r.0[rd - dd + k] -= t;
            }
            q[rd - dd] = c;
            r = r.trim();
        }
        (CPoly(q).trim(), r)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone().trim(), other.clone().trim());
        while b.degree().is_some() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The product of the distinct monic linear factors.
    pub fn squarefree(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Largest `k` such that `(x − λ)^k` divides the polynomial.
    pub fn root_multiplicity(&self, lambda: &CRational) -> usize {
        let lin = CPoly(vec![-lambda.clone(), CRational::one()]);
        let mut p = self.clone().trim();
        let mut k = 0;
        while p.degree().is_some_and(|d| d > 0) {
            let (q, r) = p.div_rem(&lin);
            if r.degree().is_some() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }
}

type Dense = Vec<Vec<CRational>>;

fn mat_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut c = vec![vec![CRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    c[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    c
}

/// Characteristic polynomial `det(x·I − A)` by Faddeev–LeVerrier.
pub fn char_poly(a: &Dense) -> CPoly {
    let n = a.len();
    let mut coeffs = vec![CRational::zero(); n + 1];
    coeffs[n] = CRational::one();
    let mut m = vec![vec![CRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let am = mat_mul(a, &next);
        let tr = (0..n).fold(CRational::zero(), |acc, i| acc + &am[i][i]);
        coeffs[n - k] = -tr / crat(k as i64, 1);
        m = next;
    }
    CPoly(coeffs)
}

fn rank(mut m: Dense) -> usize {
    let (rows, cols) = (m.len(), m[0].len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            #[allow(clippy::needless_range_loop)]
            for j in c..cols {
                let t = &f * &m[r][j];
                m[i][j] -= t;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// An exact point `(p, Q, Y)` on the curve `Y² = p² + p̄² − Q² − Q̄²`.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePoint {
    pub p: BigRational,
    pub q: BigRational,
    pub y: CRational,
}

impl SamplePoint {
    pub fn assignment(&self) -> Assignment {
        let re = |x: &BigRational| Complex::new(x.clone(), BigRational::zero());
        Assignment::new().set(Var::P, re(&self.p)).set(Var::Q, re(&self.q)).set(Var::Y, self.y.clone())
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    let (n, d) = (x.numer(), x.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
}

/// Deterministic list of rational points with a rational or purely imaginary
/// `Y`, avoiding `p, Q ∈ {±1}` and `p = ±Q`.
pub fn sample_points(count: usize) -> Vec<SamplePoint> {
    let mut out = Vec::new();
    let fracs = |limit: i64| -> Vec<BigRational> {
        (3..=2 * limit)
            .flat_map(|s| (1..s).map(move |d| (s - d, d)))
            .filter(|&(n, d)| n < limit && d < limit && num_integer::gcd(n, d) == 1 && n != d)
            .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect()
    };
    let (ps, qs) = (fracs(12), fracs(48));
    for p in &ps {
        for q in &qs {
            if p == q || *p == q.recip() {
                continue;
            }
            let a = p - p.recip();
            let b = q - q.recip();
            let s = &a * &a - &b * &b;
            if s.is_zero() {
                continue;
            }
            let y = match rational_sqrt(&s.abs()) {
                Some(r) if s.is_positive() => Complex::new(r, BigRational::zero()),
                Some(r) => Complex::new(BigRational::zero(), r),
                None => continue,
            };
            out.push(SamplePoint { p: p.clone(), q: q.clone(), y });
            if out.len() == count {
                return out;
            }
        }
    }
    out
}

fn evaluate_dense(r: &QOp, at: &Assignment) -> Result<Dense, RmatError> {
    r.to_dense().iter().map(|row| row.iter().map(|v| at.evaluate(v).map_err(RmatError::from)).collect()).collect()
}

/// Outcome of [`eigen_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct EigenReport {
    /// Number of distinct eigenvalues.
    pub distinct: usize,
    /// Multiplicity of each claimed eigenvalue, in the claimed order.
    pub multiplicities: Vec<usize>,
    pub points: usize,
}

/// Checks at exact sample points that the eigenvalues of `r` are exactly the
/// claimed values. Points where claimed values coincide are skipped.
pub fn eigen_check(r: &QOp, claimed: &[LaurentPoly], points: usize) -> Result<EigenReport, RmatError> {
    let mut used = 0;
    let mut mult: Option<Vec<usize>> = None;
    for pt in sample_points(200) {
        let at = pt.assignment();
        let vals: Vec<CRational> = claimed.iter().map(|c| at.evaluate(c)).collect::<Result<_, _>>()?;
        let collide = (0..vals.len()).any(|i| (i + 1..vals.len()).any(|j| vals[i] == vals[j]));
        if collide {
            continue;
        }
        let chi = char_poly(&evaluate_dense(r, &at)?);
        let m: Vec<usize> = vals.iter().map(|v| chi.root_multiplicity(v)).collect();
        let where_ = format!("p = {}, Q = {}", pt.p, pt.q);
        if let Some(k) = m.iter().position(|&k| k == 0) {
            return Err(RmatError::Eigen(format!("{} is not an eigenvalue at {where_}", claimed[k])));
        }
        let total: usize = m.iter().sum();
        if total != 16 {
            return Err(RmatError::Eigen(format!("claimed eigenvalues cover {total} of 16 at {where_}")));
        }
        match &mult {
            Some(prev) if *prev != m => {
                return Err(RmatError::Eigen(format!("multiplicities change at {where_}")));
            }
            _ => mult = Some(m),
        }
        used += 1;
        if used == points {
            break;
        }
    }
    if used < points {
        return Err(RmatError::Eigen(format!("only {used} usable sample points")));
    }
    let multiplicities = mult.unwrap_or_default();
    Ok(EigenReport { distinct: multiplicities.len(), multiplicities, points: used })
}

/// Total dimension of the eigenspaces, `16 − rank g(R)` with `g` the
/// square-free part of the characteristic polynomial, evaluated at sample
/// points where the number of distinct eigenvalues is maximal.
pub fn eigenvector_deficiency(r: &QOp) -> Result<usize, RmatError> {
    let mut results: Vec<(usize, usize)> = Vec::new();
    for pt in sample_points(12) {
        let a = evaluate_dense(r, &pt.assignment())?;
        let g = char_poly(&a).squarefree();
        let n = a.len();
        let mut acc: Dense = vec![vec![CRational::zero(); n]; n];
        for c in g.0.iter().rev() {
            acc = mat_mul(&acc, &a);
            for (i, row) in acc.iter_mut().enumerate() {
                row[i] += c;
            }
        }
        results.push((g.degree().unwrap_or(0), n - rank(acc)));
    }
    let best = results.iter().map(|r| r.0).max().ok_or_else(|| RmatError::Eigen("no sample points".into()))?;
    let dims: Vec<usize> = results.iter().filter(|r| r.0 == best).map(|r| r.1).collect();
    if dims.len() < 3 || dims.iter().any(|&d| d != dims[0]) {
        return Err(RmatError::Eigen(format!("eigenspace dimensions disagree across points: {dims:?}")));
    }
    Ok(dims[0])
}
