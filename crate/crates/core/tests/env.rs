use cyalg::env::*;
use cyalg::rewrite::{check_overlaps, Strategy};
use cyalg::{NCElement, Scalar};

fn s(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

#[test]
fn systems_are_confluent() {
    for kind in [Kind::Gl, Kind::Sl] {
        for n in [2, 3] {
            for l in [1, 2, 3] {
                let env = EnvAlgebra::new(n, l, kind).unwrap();
                env.check_structure().unwrap();
                let r = check_overlaps(&env.sys, Strategy::Leftmost, 10_000).unwrap();
                assert!(r.passed(), "{kind:?} N={n} L={l}");
            }
        }
    }
}

#[test]
fn invalid_sizes() {
    assert!(EnvAlgebra::new(1, 2, Kind::Sl).is_err());
    assert!(EnvAlgebra::new(3, 0, Kind::Gl).is_err());
}

#[test]
fn basic_relations() {
    let env = sl3_squared().unwrap();
    assert_eq!(env.sys.num_generators(), 16);
    let sys = &env.sys;
    assert!(sys.commutator(&env.e(1, 1, 2), &env.e(2, 2, 3)).is_zero());
    let h1 = sys.parse_free("h1_1").unwrap();
    assert_eq!(sys.commutator(&env.e(1, 1, 2), &env.e(1, 2, 1)), h1);

    let gl2 = EnvAlgebra::new(2, 1, Kind::Gl).unwrap();
    let w = gl2.sys.parse("e21_1*e12_1").unwrap();
    let expected = gl2.sys.parse_free("e12_1*e21_1 - e11_1 + e22_1").unwrap();
    assert_eq!(w, expected);
}

#[test]
fn sl_diagonal_units_are_traceless_parts() {
    let env = EnvAlgebra::new(3, 1, Kind::Sl).unwrap();
    let sum = (1..=3).fold(NCElement::zero(), |a, p| a.add(&env.e(1, p, p)));
    assert!(sum.is_zero());
    let e11 = env.sys.parse_free("2/3*h1_1 + 1/3*h2_1").unwrap();
    assert_eq!(env.e(1, 1, 1), e11);
}

#[test]
fn traces_and_casimirs() {
    let gl = EnvAlgebra::new(3, 1, Kind::Gl).unwrap();
    let t1 = gl.polarised_trace(&[1]).unwrap();
    assert_eq!(*t1, gl.sys.parse_free("e11_1 + e22_1 + e33_1").unwrap());

    let env = sl3_squared().unwrap();
    let c2 = env.casimir(1, CasimirKind::C2).unwrap();
    let c2b = env.casimir(1, CasimirKind::C2Bar).unwrap();
    let c3 = env.casimir(1, CasimirKind::C3).unwrap();
    let c3b = env.casimir(1, CasimirKind::C3Bar).unwrap();
    assert_eq!(c2, c2b);
    let mut d = c3.sub(&c3b);
    d.add_scaled(&c2b, &s(3, 1));
    assert!(d.is_zero());
    for g in 0..8u8 {
        let e = NCElement::gen(g);
        assert!(env.sys.commutator(&c2, &e).is_zero());
        assert!(env.sys.commutator(&c3, &e).is_zero());
    }
    assert_eq!(*env.polarised_trace(&[1, 1]).unwrap(), c2);
}

#[test]
fn diagonal_map() {
    let env = sl3_squared().unwrap();
    let d = env.diagonal_map(&env.e(1, 1, 2)).unwrap();
    assert_eq!(d, env.e(1, 1, 2).add(&env.e(2, 1, 2)));
    assert_eq!(
        env.diagonal_map(&NCElement::one()).unwrap(),
        NCElement::one()
    );
    assert!(env.diagonal_map(&env.e(2, 1, 2)).is_err());
}

#[test]
fn generator_identities() {
    let env = sl3_squared().unwrap();
    let g = build_z2_generators(&env).unwrap();
    let t = |spec: &[usize]| (*env.polarised_trace(spec).unwrap()).clone();
    let [k1, k2, k3] = g.k.clone();
    let [l1, l2, l3] = g.l.clone();
    assert_eq!(k1, t(&[1, 1]));
    assert_eq!(k2, t(&[2, 2]));
    let mut k3b = t(&[1, 1]).add(&t(&[2, 2]));
    k3b.add_scaled(&t(&[1, 2]), &s(2, 1));
    assert_eq!(k3, k3b);
    let t12 = k3.sub(&k1).sub(&k2).scale(&s(1, 2));
    assert_eq!(t(&[1, 2]), t12);
    let mut l1b = t(&[1, 1, 1]);
    l1b.add_scaled(&k1, &s(3, 2));
    assert_eq!(l1, l1b);
    let mut l3b = l1.add(&l2).neg();
    l3b.add_scaled(&t(&[1, 1, 2]).add(&t(&[1, 2, 2])), &s(-3, 1));
    l3b.add_scaled(&t(&[1, 2]), &s(-9, 1));
    assert_eq!(l3, l3b);
    let mut inner = env.casimir(1, CasimirKind::C3).unwrap();
    inner.add_scaled(&env.casimir(1, CasimirKind::C2).unwrap(), &s(3, 2));
    assert_eq!(l3, env.diagonal_map(&inner).unwrap().neg());
    assert_eq!(env.sys.degree(&g.z), Some(6));
    assert!(verify_generator_properties(&env, &g).unwrap().passed());
}

#[test]
fn centraliser() {
    let env = sl3_squared().unwrap();
    let r = verify_centraliser(&env).unwrap();
    assert!(r.passed(), "{}", r.summary_line());
    assert_eq!(r.details["traces"], 29);
    let bad = env.centraliser_check("e12", &env.e(1, 1, 2)).unwrap();
    assert!(bad.failed());
    let g = build_z2_generators(&env).unwrap();
    for (name, e) in [("X", &g.x), ("Y", &g.y), ("Z", &g.z)] {
        assert!(env.centraliser_check(name, e).unwrap().passed());
    }
}

#[test]
fn trace_reduction() {
    let env = sl3_squared().unwrap();
    let r = verify_trace_reduction(&env).unwrap();
    assert!(r.passed(), "{}", r.summary_line());
    let (res, top) = trace_reduction_residual(&env, s(-15, 1)).unwrap();
    assert!(top.is_zero());
    assert!(!res.is_zero());
}

#[test]
fn phi_relations() {
    let env = sl3_squared().unwrap();
    let g = build_z2_generators(&env).unwrap();
    let r = verify_phi_relations(&env, &g).unwrap();
    assert!(r.passed(), "{}", r.summary_line());
}

#[test]
fn series() {
    let r = series_consistency();
    assert!(r.passed());
    let c = &r.details["coefficients"];
    assert_eq!(c[0], 1);
    assert_eq!(c[2], 3);
    assert_eq!(c[3], 4);
}

#[test]
fn tau_is_an_involution() {
    let env = sl3_squared().unwrap();
    let e = env.sys.parse("e12_1*e23_2 + h1_1*e31_1").unwrap();
    assert_eq!(env.tau(&env.tau(&e).unwrap()).unwrap(), e);
}

#[test]
#[ignore = "symbolic degree-12 reduction: several minutes and about 2.5 GB"]
fn omega_image_symbolic() {
    let env = sl3_squared().unwrap();
    let g = build_z2_generators(&env).unwrap();
    assert!(omega_image_residual(&env, &g).unwrap().is_zero());
}
