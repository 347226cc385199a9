use cyalg::cy::*;
use cyalg::rewrite::{check_overlaps, Strategy};
use cyalg::{NCElement, Polynomial, Scalar};

fn sym() -> AgenParams {
    AgenParams::symbolic()
}

#[test]
fn generic_system_is_confluent() {
    let sys = build_agen(&sym()).unwrap();
    let r = check_overlaps(&sys, Strategy::Leftmost, 100_000).unwrap();
    assert!(r.passed());
    assert_eq!(r.triples_checked, 1);
}

#[test]
fn basic_products() {
    let p = sym();
    let sys = build_agen(&p).unwrap();
    let ba = sys.parse("B*A").unwrap();
    assert_eq!(ba, sys.parse_free("A*B - C").unwrap());
    assert_eq!(sys.commutator(&sys.g("A"), &sys.g("B")), sys.g("C"));
    let ac = sys.commutator(&sys.g("A"), &sys.g("C"));
    let expected = sys
        .parse("a0*B^2 + a1*{A,B} + a2*A^2 + a4*B + a5*A + a8")
        .unwrap();
    assert_eq!(ac, expected);
}

#[test]
fn degenerate_parameters() {
    let p = AgenParams::zero(agen_vars());
    let sys = build_agen(&p).unwrap();
    assert_eq!(sys.parse("C*A").unwrap(), sys.parse_free("A*C").unwrap());
    assert_eq!(omega(&p), NCElement::word(&[C, C]));
    assert!(verify_omega_central(&p).unwrap().passed());
}

#[test]
fn graded_dimensions() {
    let sys = build_agen(&sym()).unwrap();
    assert_eq!(sys.graded_dim(0), 1);
    assert_eq!(sys.graded_dim(7), 1);
    assert_eq!(sys.graded_dim(12), 4);
    // Brute-force count of solutions of 3a + 4b + 6c = n.
    for n in 0..=36u32 {
        let mut count = 0;
        for a in 0..=n / 3 {
            for b in 0..=n / 4 {
                for c in 0..=n / 6 {
                    if 3 * a + 4 * b + 6 * c == n {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(sys.graded_dim(n as usize), count, "n = {n}");
    }
}

#[test]
fn cyclic_derivative_examples() {
    let mut phi = Potential::default();
    phi.add(&[A, B, C], Polynomial::one());
    assert_eq!(phi.cyclic_derivative(C), NCElement::word(&[A, B]));
    let mut a4 = Potential::default();
    a4.add(&[A, A, A, A], Polynomial::one());
    assert_eq!(
        a4.cyclic_derivative(A),
        NCElement::word(&[A, A, A]).scale(&Polynomial::int(4))
    );
    // Rotations are identified.
    let mut rot = Potential::default();
    rot.add(&[B, C, A], Polynomial::one());
    assert_eq!(rot, phi);
    let zero = potential_phi(&AgenParams::zero(agen_vars()));
    let dc = zero.cyclic_derivative(C);
    let expected = NCElement::word(&[A, B])
        .sub(&NCElement::word(&[B, A]))
        .sub(&NCElement::gen(C));
    assert_eq!(dc, expected);
    assert_eq!(zero.terms.len(), 3);
}

#[test]
fn potential_coefficients() {
    let phi = potential_phi(&sym());
    let v = agen_vars();
    assert_eq!(phi.terms[&vec![B, B, B]], v.parse("a0/3").unwrap());
    assert_eq!(
        phi.terms[&vec![C, C]],
        Polynomial::constant(Scalar::new(-1, 2))
    );
}

#[test]
fn potential_reproduces_relations() {
    let p = sym();
    let phi = potential_phi(&p);
    assert!(verify_potential_relations(&p, &phi).passed());
    let kl = kl_params();
    assert!(verify_potential_relations(kl, &potential_phi(kl)).passed());
    let mut bad = phi.clone();
    bad.add(&[C, C], Polynomial::constant(Scalar::new(-1, 2)));
    let r = verify_potential_relations(&p, &bad);
    assert!(r.failed());
    assert!(r.witness.unwrap().starts_with("dPhi/dC"));
}

#[test]
fn potential_pbw_identity() {
    let phi = potential_phi(&sym());
    let lower = phi.lower_part(13);
    assert_eq!(lower.terms.len(), phi.terms.len() - 2);
    assert!(potential_pbw_defect(&lower).is_zero());
    assert!(potential_pbw_defect(&Potential::default()).is_zero());
    let mut a4 = Potential::default();
    a4.add(&[A, A, A, A], Polynomial::one());
    assert!(potential_pbw_defect(&a4).is_zero());
}

#[test]
fn omega_coefficient_values() {
    let x = omega_coefficients();
    let v = agen_vars();
    assert_eq!(x[8], v.parse("a0'/2").unwrap());
    assert_eq!(x[7], v.parse("2*a1").unwrap());
    assert_eq!(x[9], v.parse("-2/3*a0").unwrap());
}

/// The specialised x-values, computed independently from the simplified
/// formulas, agree with the generic formulas at the specialised parameters.
#[test]
fn omega_specialises() {
    let p = kl_params();
    let x: Vec<Polynomial> = omega_coefficients().iter().map(|q| p.apply(q)).collect();
    let g = |n| p.get(n).clone();
    let i = |n| Polynomial::int(n);
    assert_eq!(
        x[0],
        g("a5")
            .scale(&Scalar::from_int(6))
            .add(&g("a9").scale(&Scalar::from_int(2)))
    );
    assert_eq!(x[1], g("a6").add(&g("a8")).scale(&Scalar::from_int(-2)));
    assert_eq!(x[2], g("a2").scale(&Scalar::from_int(6)).add(&g("a6")));
    assert_eq!(x[3], g("a5").neg());
    assert_eq!(x[4], g("a2").scale(&Scalar::from_int(8)).sub(&i(24)));
    assert!(x[5].is_zero());
    assert_eq!(x[6], g("a2").scale(&Scalar::from_int(-2)).add(&i(12)));
    assert!(x[7].is_zero());
    assert_eq!(x[8], i(-1));
    assert_eq!(x[9], i(4));
}

#[test]
fn omega_is_central_generic() {
    let r = verify_omega_central(&sym()).unwrap();
    assert!(r.passed(), "{}", r.summary_line());
}

#[test]
fn perturbed_omega_is_not_central() {
    let p = sym();
    let sys = build_agen(&p).unwrap();
    let mut om = omega(&p);
    om.add_scaled(&NCElement::word(&[B, C]), &Polynomial::one());
    let r = verify_central_in(&sys, &om).unwrap();
    assert!(r.failed());
}

#[test]
fn degree_bounds() {
    let p = sym();
    let om = omega(&p);
    let sys = build_agen(&p).unwrap();
    assert_eq!(sys.degree(&om), Some(12));
    for (got, bound) in relation_degree_bounds(&p) {
        assert!(got <= bound, "{got} > {bound}");
    }
}

#[test]
fn sym_examples() {
    let v = kl_vars();
    assert!(sym_pm(&v.var("k1"), -1).is_zero());
    let a5 = kl_params().get("a5").clone();
    let expected = v
        .parse("1/3*(k2*l1 - k1*l2 + k3*l2 - k2*l3 + k1*l3 - k3*l1)")
        .unwrap();
    assert_eq!(a5, expected);
}

#[test]
fn specialised_parameters() {
    let p = kl_params();
    assert_eq!(p.get("a0"), &Polynomial::int(-6));
    assert_eq!(p.get("a0'"), &Polynomial::int(-2));
    for n in ["a1", "a3", "a4"] {
        assert!(p.get(n).is_zero());
    }
    let at = |q: &Polynomial, vals: [i64; 6]| q.eval(&vals.map(Scalar::from_int));
    assert_eq!(at(p.get("a2"), [2, 2, 2, 0, 0, 0]), Scalar::from_int(3));
    assert!(at(p.get("a6"), [0; 6]).is_zero());
    let (sys, _) = build_a().unwrap();
    assert!(check_overlaps(&sys, Strategy::Leftmost, 100_000)
        .unwrap()
        .passed());
}

#[test]
fn a12_properties() {
    let raw = a12_unsymmetrised();
    let k1 = kl_vars().var("k1");
    assert_eq!(raw.coeff(&k1.pow(6).terms()[0].0), Scalar::new(1, 4608));
    let a = a12();
    assert_eq!(a.weighted_degree(&KL_DEGREES), Some(12));
    assert!(a.constant_term().is_zero());
    assert_eq!(&sym_pm(a, 1), a);
}

#[test]
fn aut0_maps() {
    let r = verify_aut0();
    assert!(r.passed(), "{}", r.summary_line());
    assert_eq!(r.details.len(), 12);
    // l -> -l flips the odd coefficients.
    let tau = Aut0Map {
        perm: [0, 1, 2],
        sign: 1,
        tau: true,
    };
    let p = kl_params();
    assert_eq!(tau.on_kl(p.get("a5")), p.get("a5").neg());
    assert_eq!(tau.on_kl(p.get("a9")), p.get("a9").neg());
    assert_eq!(&tau.on_kl(a12()), a12());
}

#[test]
fn hilbert_series() {
    let sys = build_agen(&sym()).unwrap();
    let (sys_kl, _) = build_a().unwrap();
    let r = verify_hilbert(&sys, &sys_kl);
    assert!(r.passed(), "{}", r.summary_line());
}
