mod common;

use num_complex::Complex;
use proptest::prelude::*;

use gaugeknot::braid::BraidWord;
use gaugeknot::ring::{qbracket, LaurentPoly, Monomial, QExponent, Regime, Var};

fn poly_strategy(regime: Regime) -> impl Strategy<Value = LaurentPoly> {
    let vars: Vec<Var> = regime.vars().collect();
    let nv = vars.len();
    prop::collection::vec((prop::collection::vec(-2i16..=2, nv), -3i64..=3, -1i64..=1), 0..5).prop_map(move |ts| {
        let terms: Vec<_> = ts
            .into_iter()
            .map(|(es, re, im)| {
                let m = vars
                    .iter()
                    .zip(es)
                    .fold(Monomial::ONE, |m, (&v, e)| m.with(v, if v == Var::Y { e.abs() } else { e }));
                (m, Complex::new(re, im))
            })
            .collect();
        LaurentPoly::from_terms(regime, terms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn quantum_ring_axioms(a in poly_strategy(Regime::Quantum), b in poly_strategy(Regime::Quantum), c in poly_strategy(Regime::Quantum)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn trig_ring_axioms(a in poly_strategy(Regime::Trig), b in poly_strategy(Regime::Trig), c in poly_strategy(Regime::Trig)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn canonical_text_round_trips(a in poly_strategy(Regime::Quantum)) {
        prop_assert_eq!(LaurentPoly::parse(Regime::Quantum, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn y_reduction_is_confluent(a in poly_strategy(Regime::Quantum)) {
        // reducing before or after multiplying by Y² gives the same result
        let y = LaurentPoly::var(Regime::Quantum, Var::Y);
        let y2 = LaurentPoly::y_square(Regime::Quantum);
        prop_assert_eq!(&(&a * &y) * &y, &a * &y2);
    }

    #[test]
    fn qbracket_integer_identity(k in -6i32..=6) {
        // [k]·(q − q̄) = q^k − q̄^k with q = Q²
        let b = qbracket(&QExponent { constant: k, alpha: 0, u: 0, v: 0 }, Regime::Quantum).unwrap();
        let lhs = b.as_poly().unwrap() * &LaurentPoly::parse(Regime::Quantum, "Q^2 - Q^-2").unwrap();
        let rhs = &LaurentPoly::mono(Regime::Quantum, 1, &[(Var::Q, 2 * k as i16)])
            - &LaurentPoly::mono(Regime::Quantum, 1, &[(Var::Q, -2 * k as i16)]);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn braid_text_round_trips(n in 1usize..6, letters in prop::collection::vec(1i32..6, 0..12), signs in prop::collection::vec(any::<bool>(), 12)) {
        let letters: Vec<i32> = letters.iter().zip(&signs).filter(|(k, _)| (**k as usize) < n).map(|(k, s)| if *s { *k } else { -k }).collect();
        let b = BraidWord::new(n, letters).unwrap();
        prop_assert_eq!(BraidWord::parse(&b.to_string()).unwrap(), b.clone());
        prop_assert_eq!(b.inverse().inverse(), b.clone());
        prop_assert_eq!(b.writhe(), -b.mirror().writhe());
    }
}

#[test]
fn ring_trials_1000() {
    common::ring_trials(1000, 11).unwrap();
}

#[test]
fn engine_invariance_1000() {
    common::engine_trials(1000, 12).unwrap();
}

#[test]
fn oracle_markov_1000() {
    common::oracle_trials(1000, 13).unwrap();
}
