use arrlab::arrangement::{cone, infinity_hyperplane, Arrangement, Hyperplane};
use arrlab::deform::{deform, EquivMult};
use arrlab::freecert::{certify, predict_cone_exponents, rank3_ziegler_pi_check, verify_pipeline, Status};
use arrlab::linalg::rat;
use arrlab::poly::IntPolynomial;
use arrlab::poset::{chambers, poincare};
use arrlab::rootsys::{build_root_system, RootSystem};

fn rs(label: &str) -> RootSystem {
    build_root_system(label.parse().unwrap()).unwrap()
}

fn m(v: &[u32]) -> EquivMult {
    EquivMult::new(v.to_vec())
}

fn lines(rows: &[(i64, i64, i64)]) -> Arrangement {
    Arrangement::from_hyperplanes(2, rows.iter().map(|&(a, b, c)| Hyperplane::new(&[a, b], rat(c)).unwrap())).unwrap()
}

#[test]
fn a3_shi_pipeline() {
    let r = rs("A3");
    let rep = verify_pipeline(&r, &m(&[0]), &m(&[1])).unwrap();
    assert_eq!(rep.predicted_exponents, [1, 4, 4, 4]);
    assert_eq!(rep.check("pi_factorization").unwrap().status, Status::Pass);
    assert_eq!(rep.check("certificate").unwrap().status, Status::Skipped);
    assert_eq!(rep.chambers.mobius, 125);
    assert!(rep.passed());
}

#[test]
fn b3_prediction_and_sum() {
    let r = rs("B3");
    let (a, b) = (m(&[1, 1]), m(&[1, 2]));
    let e = predict_cone_exponents(&r, &a, &b).unwrap();
    assert_eq!(e, [1, 11, 11, 11]);
    assert_eq!(e.iter().sum::<i64>() as usize, deform(&r, &a, &b).unwrap().len() + 1);
}

#[test]
fn a2_search_certificates() {
    let r = rs("A2");
    for (a, b, want) in [(1, 1, [1, 4, 5]), (0, 1, [1, 3, 3]), (0, 0, [1, 1, 2])] {
        let cert = certify(&r, &m(&[a]), &m(&[b])).unwrap();
        assert_eq!(cert.final_exponents, want, "a={a} b={b}");
        assert!(cert.checks().all());
        cert.require_target(&deform(&r, &m(&[a]), &m(&[b])).unwrap()).unwrap();
    }
}

#[test]
fn a2_shi_poincare_and_chambers() {
    let arr = deform(&rs("A2"), &m(&[0]), &m(&[1])).unwrap();
    assert_eq!(poincare(&arr).unwrap(), IntPolynomial::one_plus_product(&[3, 3]));
    assert_eq!(chambers(&arr).unwrap(), 16);
}

#[test]
fn triangle_cone_is_not_free() {
    let c = cone(&lines(&[(1, 0, 0), (0, 1, 0), (1, 1, 1)]));
    let check = rank3_ziegler_pi_check(&c, &infinity_hyperplane(2)).unwrap();
    assert_eq!(check.poincare, IntPolynomial::new(vec![1, 4, 6, 3]));
    assert_eq!(check.free_exponents, None);
}

#[test]
fn near_pencil_cone_is_free() {
    let c = cone(&lines(&[(1, 0, 0), (1, 0, 1), (0, 1, 0)]));
    let check = rank3_ziegler_pi_check(&c, &infinity_hyperplane(2)).unwrap();
    assert_eq!(check.free_exponents, Some(vec![1, 1, 2]));
    assert_eq!(check.poincare, IntPolynomial::one_plus_product(&[1, 1, 2]));
}
