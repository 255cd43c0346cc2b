mod common;

use gaugeknot::braid::BraidWord;
use gaugeknot::engine::*;
use gaugeknot::oracles::alexander;
use gaugeknot::ring::{LaurentPoly, Monomial, Regime, Replacement, Var};
use gaugeknot::rmat::SparseROp;

fn w(s: &str) -> BraidWord {
    BraidWord::parse(s).unwrap()
}

fn poly(s: &str) -> LaurentPoly {
    LaurentPoly::parse(Regime::Quantum, s).unwrap()
}

#[test]
fn model_examples() {
    let m1 = StateModel::new(1, Isotopy::Ambient).unwrap();
    assert_eq!(m1.kappa, poly("p^-2 * Q^2"));
    assert_eq!(m1.c.map(|c| c.to_string()), ["p^-2 * Q^2", "-p^-2 * Q^2", "-p^-2 * Q^-2", "p^-2 * Q^-2"]);
    let m2 = StateModel::new(2, Isotopy::Ambient).unwrap();
    assert_eq!(m2.sigma.at([4, 1, 2, 3]), poly("-1i * Q + 1i * Q^-1"));
    let h = verify_handle(&StateModel::new(2, Isotopy::Regular).unwrap()).unwrap();
    assert!(h.pass);
    assert_eq!(h.expected.map(|e| e.to_string()), ["p^-1", "p^-1", "p", "p"]);
}

#[test]
fn represent_examples() {
    let m = StateModel::new(2, Isotopy::Regular).unwrap();
    let id = represent(&w("1 :"), &m.sigma, &m.sigma_inv, DEFAULT_MAX_TERMS).unwrap();
    assert_eq!(id.nnz(), 4);
    assert!((1..=4).all(|a| id.at(&[a], &[a]).is_one()));
    let one = represent(&w("2 : 1"), &m.sigma, &m.sigma_inv, DEFAULT_MAX_TERMS).unwrap();
    for (k, v) in m.sigma.iter() {
        assert_eq!(&one.at(&[k[0], k[1]], &[k[2], k[3]]), v);
    }
    let pair = represent(&w("2 : 1 -1"), &m.sigma, &m.sigma_inv, DEFAULT_MAX_TERMS).unwrap();
    let ident = SparseROp::<LaurentPoly>::identity(Regime::Quantum);
    assert_eq!(pair.nnz(), ident.nnz());
    assert!(ident.iter().all(|(k, _)| pair.at(&[k[0], k[1]], &[k[2], k[3]]).is_one()));
    assert!(matches!(represent(&w("3 : 1 2 1"), &m.sigma, &m.sigma_inv, 10), Err(EngineError::MemoryCap { cap: 10 })));
}

#[test]
fn tangle_examples() {
    let m3 = StateModel::new(3, Isotopy::Regular).unwrap();
    let t = tangle_invariant(&w("2 : 1 1 1"), &m3, DEFAULT_MAX_TERMS).unwrap();
    assert!(t.is_diagonal());
    assert_eq!(t.diagonal().map(|e| e.to_string()), ["p^-6", "Q^4 - 1 - Q^-8", "Q^4 - 1 - Q^-8", "p^6"]);
    let m2 = StateModel::new(2, Isotopy::Regular).unwrap();
    let t = tangle_invariant(&w("2 : 1 1 1"), &m2, DEFAULT_MAX_TERMS).unwrap();
    let delta = |m: Monomial| alexander(&w("2 : 1 1 1")).unwrap().substitute(Regime::Quantum, m);
    let lo = &poly("p^-3") * &delta(Monomial::from_pairs(&[(Var::Q, 1), (Var::P, -1)]));
    let hi = &poly("p^3") * &delta(Monomial::from_pairs(&[(Var::Q, 1), (Var::P, 1)]));
    assert_eq!(t.diagonal(), [lo.clone(), lo, hi.clone(), hi]);
    assert!(matches!(tangle_invariant(&w("2 : 1 1"), &m2, DEFAULT_MAX_TERMS), Err(EngineError::NotAKnot(2))));
    for (c, i) in common::MODELS {
        let m = StateModel::new(c, i).unwrap();
        assert!(tangle_invariant(&w("1 :"), &m, DEFAULT_MAX_TERMS).unwrap().scalar().unwrap().is_one());
    }
}

#[test]
fn ambient_examples() {
    assert!(ambient_invariant(&w("1 :"), 1).unwrap().is_one());
    for k in common::table().iter().filter(|k| k.crossings() <= 7) {
        assert!(ambient_invariant(&k.word, 4).unwrap().is_one(), "{}", k.name);
    }
    assert_eq!(ambient_invariant(&w("2 : 1 1 1"), 2).unwrap().to_string(), "Q^2 - 1 + Q^-2");
    assert!(matches!(ambient_invariant(&w("2 : 1 1 1"), 3), Err(EngineError::Unsupported { .. })));
}

#[test]
fn branches_agree() {
    for case in [2, 4] {
        let plus = StateModel::with_branch(case, Isotopy::Ambient, Branch::Plus).unwrap();
        let minus = StateModel::with_branch(case, Isotopy::Ambient, Branch::Minus).unwrap();
        for k in common::table().iter().filter(|k| k.crossings() <= 7) {
            assert_eq!(
                tangle_invariant(&k.word, &plus, DEFAULT_MAX_TERMS).unwrap(),
                tangle_invariant(&k.word, &minus, DEFAULT_MAX_TERMS).unwrap(),
                "case {case} {}",
                k.name
            );
        }
    }
}

#[test]
fn case2_regular_at_p1_is_ambient() {
    let reg = StateModel::new(2, Isotopy::Regular).unwrap();
    let amb = StateModel::new(2, Isotopy::Ambient).unwrap();
    let p1 = [(Var::P, Replacement::one())];
    for k in common::table().iter().filter(|k| k.crossings() <= 7) {
        let r = tangle_invariant(&k.word, &reg, DEFAULT_MAX_TERMS).unwrap();
        let a = tangle_invariant(&k.word, &amb, DEFAULT_MAX_TERMS).unwrap().scalar().unwrap();
        for d in r.diagonal() {
            assert_eq!(d.substitute_many(&p1, Regime::Quantum).unwrap(), a, "{}", k.name);
        }
        assert!(a.is_real());
    }
}

#[test]
fn links_gould_at_q1_is_alexander_squared() {
    for k in common::table().iter().filter(|k| k.crossings() <= 6) {
        let lg = ambient_invariant(&k.word, 1).unwrap();
        assert!(!lg.contains_var(Var::Y));
        let d = alexander(&k.word).unwrap().substitute(Regime::Quantum, Monomial::pow(Var::P, 1));
        assert_eq!(lg.substitute(Var::Q, &Replacement::one()).unwrap(), d.pow(2), "{}", k.name);
    }
}

#[test]
fn matveev_examples() {
    let m4 = matveev_test(&StateModel::new(4, Isotopy::Ambient).unwrap()).unwrap();
    assert_eq!((m4.distinguishes, m4.symbolic_distinguishes), (false, Some(false)));
    assert!(matveev_test(&StateModel::new(2, Isotopy::Ambient).unwrap()).unwrap().distinguishes);
    assert!(matveev_test(&StateModel::new(2, Isotopy::Regular).unwrap()).unwrap().distinguishes);
    assert!(matveev_test(&StateModel::new(3, Isotopy::Regular).unwrap()).unwrap().distinguishes);
    assert!(matveev_symbolic(1).unwrap());
}

#[test]
fn scaled_kappa_breaks_handle() {
    let m = StateModel::new(1, Isotopy::Ambient).unwrap();
    let doubled = m.with_kappa_scaled(&LaurentPoly::int(Regime::Quantum, 2));
    assert!(doubled.map_or(true, |d| !verify_handle(&d).unwrap().pass));
    let m3 = StateModel::new(3, Isotopy::Regular).unwrap().with_kappa_scaled(&poly("p")).unwrap();
    assert!(!verify_handle(&m3).unwrap().pass);
}
