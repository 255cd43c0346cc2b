use gaugeknot::rmat::*;
use num_rational::Ratio;

#[test]
fn limits_reproduce_transcriptions() {
    let g = build_trig_gauged();
    for i in 1..=4 {
        let lim = spectral_limit(&g, GaugeCase::from_index(i).unwrap()).unwrap();
        let want = quantum_r(i).unwrap();
        assert_eq!(lim.first_difference(&want), None, "case {i}");
    }
    let a = spectral_limit(&g, GaugeCase::four(Ratio::new(1, 2)).unwrap()).unwrap();
    let b = spectral_limit(&g, GaugeCase::four(Ratio::new(2, 3)).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn tabulated_eigenvalues_hold() {
    let expected_mult: [&[usize]; 4] =
        [&[4, 8, 4], &[2, 4, 2, 2, 2, 2, 2], &[1, 4, 1, 2, 2, 2, 2, 1, 1], &[1, 3, 1, 2, 2, 2, 2, 1, 1, 1]];
    for i in 1..=4u8 {
        let claimed = tabulated_eigenvalues(i).unwrap();
        let rep = eigen_check(&quantum_r(i).unwrap(), &claimed, 5).unwrap();
        assert_eq!(rep.multiplicities, expected_mult[i as usize - 1], "case {i}");
    }
}

#[test]
fn ybe_all() {
    use gaugeknot::ybe::*;
    for i in 1..=4 {
        assert!(verify_qybe(&quantum_r(i).unwrap()).pass(), "qybe {i}");
    }
    let t = std::time::Instant::now();
    let o = verify_tybe_additive(&build_trig_gauge_free());
    println!("free {:?} {:?}", o.witness, t.elapsed());
    let t = std::time::Instant::now();
    let o2 = verify_tybe_additive(&build_trig_gauged());
    println!("gauged {:?} {:?}", o2.witness, t.elapsed());
    assert!(o.pass() && o2.pass());
    let rep = verify_gauge_properties(&GaugeMatrix::standard(), &build_trig_gauge_free());
    println!("{rep:?}");
    assert!(rep.pass());
}

#[test]
fn tybe_perturbed_fails() {
    use gaugeknot::ybe::*;
    let mut r = build_trig_gauge_free();
    let v = r.at([2, 3, 2, 3]);
    r.insert([3, 2, 3, 2], v);
    let o = verify_tybe_additive(&r);
    println!("{}", o.witness.as_ref().unwrap());
    assert!(!o.pass());
}
