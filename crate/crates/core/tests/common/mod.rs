#![allow(dead_code)]

use std::collections::HashMap;

use num_complex::Complex;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gaugeknot::braid::BraidWord;
use gaugeknot::engine::{tangle_invariant, verify_handle, Isotopy, StateModel, TangleInvariant, DEFAULT_MAX_TERMS};
use gaugeknot::harness::{parse_table, KnotRecord, BUNDLED_TABLE};
use gaugeknot::oracles::{alexander, jones};
use gaugeknot::ring::{LaurentPoly, Monomial, Regime, Var};
use gaugeknot::rmat::sample_points;

pub const MODELS: [(u8, Isotopy); 5] =
    [(1, Isotopy::Ambient), (2, Isotopy::Ambient), (4, Isotopy::Ambient), (2, Isotopy::Regular), (3, Isotopy::Regular)];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn table() -> Vec<KnotRecord> {
    parse_table(BUNDLED_TABLE).unwrap()
}

/// Random Laurent polynomial with small exponents and Gaussian coefficients.
pub fn random_poly(r: &mut ChaCha8Rng, regime: Regime) -> LaurentPoly {
    let vars: Vec<Var> = regime.vars().collect();
    let n = r.gen_range(0..5);
    let terms = (0..n).map(|_| {
        let mut m = Monomial::ONE;
        for &v in &vars {
            let e = if v == Var::Y { r.gen_range(0..3) } else { r.gen_range(-2..=2) };
            if r.gen_bool(0.5) {
                m = m.with(v, e);
            }
        }
        (m, Complex::new(r.gen_range(-3..=3), r.gen_range(-1..=1)))
    });
    LaurentPoly::from_terms(regime, terms.collect::<Vec<_>>()).unwrap()
}

/// Commutative ring axioms in both regimes, and evaluation as a ring
/// homomorphism at exact points of the `Y` curve.
#[allow(clippy::eq_op)]
pub fn ring_trials(n: usize, seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    let points = sample_points(8);
    for trial in 0..n {
        let regime = if trial % 2 == 0 { Regime::Quantum } else { Regime::Trig };
        let (a, b, c) = (random_poly(&mut r, regime), random_poly(&mut r, regime), random_poly(&mut r, regime));
        let fail = |what: &str| Err(format!("trial {trial}: {what} for a = {a}, b = {b}, c = {c}"));
        if &a + &b != &b + &a || &a * &b != &b * &a {
            return fail("commutativity");
        }
        if &(&a + &b) + &c != &a + &(&b + &c) || &(&a * &b) * &c != &a * &(&b * &c) {
            return fail("associativity");
        }
        if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
            return fail("distributivity");
        }
        let zero = LaurentPoly::zero(regime);
        if &a + &zero != a || &a * &LaurentPoly::one(regime) != a || !(&a - &a).is_zero() || &a + &(-a.clone()) != zero
        {
            return fail("identities");
        }
        if regime == Regime::Quantum {
            let at = points[trial % points.len()].assignment();
            let ev = |x: &LaurentPoly| at.evaluate(x).unwrap();
            if ev(&(&a * &b)) != ev(&a) * ev(&b) || ev(&(&a + &c)) != ev(&a) + ev(&c) {
                return fail("evaluation homomorphism");
            }
        }
    }
    Ok(())
}

fn random_letter(r: &mut ChaCha8Rng, strands: usize) -> i32 {
    let k = r.gen_range(1..strands as i32);
    if r.gen_bool(0.5) {
        k
    } else {
        -k
    }
}

fn splice(b: &BraidWord, at: usize, insert: &[i32]) -> BraidWord {
    let mut letters = b.letters().to_vec();
    letters.splice(at..at, insert.iter().copied());
    BraidWord::new(b.strands(), letters).unwrap()
}

/// One braid-group move that leaves the braid unchanged: an inserted
/// inverse pair, an inserted braid relator, a far commutation or an
/// in-place `σ_iσ_{i+1}σ_i → σ_{i+1}σ_iσ_{i+1}` rewrite.
pub fn random_braid_move(r: &mut ChaCha8Rng, b: &BraidWord) -> BraidWord {
    let n = b.strands();
    if n < 2 {
        return b.clone();
    }
    let at = r.gen_range(0..=b.len());
    let mut choices = vec![0];
    if n >= 3 {
        choices.extend([1, 3]);
    }
    if n >= 4 {
        choices.push(2);
    }
    match *choices.choose(r).unwrap() {
        0 => {
            let k = random_letter(r, n);
            splice(b, at, &[k, -k])
        }
        1 => {
            let i = r.gen_range(1..n as i32 - 1);
            let s = if r.gen_bool(0.5) { 1 } else { -1 };
            let (a, c) = (s * i, s * (i + 1));
            splice(b, at, &[a, c, a, -c, -a, -c])
        }
        2 => {
            let i = r.gen_range(1..n as i32 - 2);
            let j = r.gen_range(i + 2..n as i32);
            splice(b, at, &[i, j, -i, -j])
        }
        _ => {
            let l = b.letters();
            let spots: Vec<usize> = (0..l.len().saturating_sub(2))
                .filter(|&p| {
                    l[p] == l[p + 2] && l[p].signum() == l[p + 1].signum() && (l[p].abs() - l[p + 1].abs()).abs() == 1
                })
                .collect();
            match spots.choose(r) {
                Some(&p) => {
                    let mut v = l.to_vec();
                    let (a, c) = (l[p], l[p + 1]);
                    v[p..p + 3].copy_from_slice(&[c, a, c]);
                    BraidWord::new(n, v).unwrap()
                }
                None => {
                    let i = r.gen_range(1..n as i32 - 1);
                    splice(b, at, &[i, i + 1, i, -(i + 1), -i, -(i + 1)])
                }
            }
        }
    }
}

pub fn random_word(r: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    let len = if strands < 2 { 0 } else { r.gen_range(1..=max_len) };
    BraidWord::new(strands, (0..len).map(|_| random_letter(r, strands)).collect()).unwrap()
}

fn scaled(t: &TangleInvariant, d: &[LaurentPoly; 4]) -> TangleInvariant {
    TangleInvariant { matrix: std::array::from_fn(|a| std::array::from_fn(|b| &t.matrix[a][b] * &d[b])) }
}

/// Invariance of the tangle invariant under braid relations, conjugation
/// and Markov stabilisation, `n` trials each, rotating through the models.
pub fn engine_trials(n: usize, seed: u64) -> Result<(), String> {
    let knots: Vec<KnotRecord> = table().into_iter().filter(|k| k.crossings() <= 7 && k.strands() <= 4).collect();
    let models: Vec<StateModel> = MODELS.iter().map(|&(c, i)| StateModel::new(c, i).unwrap()).collect();
    let handles: Vec<([LaurentPoly; 4], [LaurentPoly; 4])> = models
        .iter()
        .map(|m| {
            let h = verify_handle(m).unwrap();
            (std::array::from_fn(|i| h.positive[i][i].clone()), std::array::from_fn(|i| h.negative[i][i].clone()))
        })
        .collect();
    let mut base: HashMap<(usize, usize), TangleInvariant> = HashMap::new();
    let mut r = rng(seed);
    let inv = |b: &BraidWord, m: &StateModel| tangle_invariant(b, m, DEFAULT_MAX_TERMS).map_err(|e| e.to_string());
    for trial in 0..n {
        let mi = trial % models.len();
        let ki = r.gen_range(0..knots.len());
        let (m, k) = (&models[mi], &knots[ki]);
        let t0 = &*match base.entry((mi, ki)) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(e) => e.insert(inv(&k.word, m)?),
        };
        let label = |what: &str, b: &BraidWord| {
            format!("trial {trial}: {what} changed case {} {} on {} -> {b}", m.case, m.isotopy, k.name)
        };

        let mut moved = k.word.clone();
        for _ in 0..r.gen_range(1..=2) {
            moved = random_braid_move(&mut r, &moved);
        }
        if &inv(&moved, m)? != t0 {
            return Err(label("braid move", &moved));
        }

        let g = random_word(&mut r, k.strands(), 2);
        let conj = k.word.conjugate(&g);
        if &inv(&conj, m)? != t0 {
            return Err(label("conjugation", &conj));
        }

        let positive = r.gen_bool(0.5);
        let stab = k.word.stabilize(positive);
        let want = match m.isotopy {
            Isotopy::Ambient => t0.clone(),
            Isotopy::Regular => scaled(t0, if positive { &handles[mi].0 } else { &handles[mi].1 }),
        };
        if inv(&stab, m)? != want {
            return Err(label("stabilisation", &stab));
        }
    }
    Ok(())
}

/// Markov-move invariance of the Alexander and Jones oracles.
pub fn oracle_trials(n: usize, seed: u64) -> Result<(), String> {
    let knots: Vec<KnotRecord> = table().into_iter().filter(|k| k.word.len() <= 10).collect();
    let mut r = rng(seed);
    for trial in 0..n {
        let k = knots.choose(&mut r).unwrap();
        let (a0, j0) = (alexander(&k.word).unwrap(), jones(&k.word).unwrap());
        let g = random_word(&mut r, k.strands(), 2);
        let mut w = k.word.conjugate(&g);
        if r.gen_bool(0.5) {
            w = w.stabilize(r.gen_bool(0.5));
        }
        if alexander(&w).map_err(|e| e.to_string())? != a0 || jones(&w).map_err(|e| e.to_string())? != j0 {
            return Err(format!("trial {trial}: Markov move changed an oracle on {} -> {w}", k.name));
        }
    }
    Ok(())
}
