use cyalg::cy::kl_params;
use cyalg::e6::*;
use cyalg::{Monomial, Polynomial, Scalar};
use proptest::prelude::*;

fn s(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

fn ints(v: [i64; 6]) -> [Scalar; 6] {
    v.map(Scalar::from_int)
}

#[test]
fn reflection_examples() {
    let r = simple_reflections();
    assert_eq!(
        r[0].apply(&ints([1, 0, 0, 0, 0, 0])),
        ints([-1, 1, 0, 0, 0, 0])
    );
    for i in 0..4 {
        assert_eq!(r[5].row(i), WeylMatrix::identity().row(i));
    }
    for g in r {
        assert_eq!(g.mul(&g).unwrap(), WeylMatrix::identity());
        assert_eq!(g.determinant(), Scalar::from_int(-1));
    }
    assert_eq!(r[0].mul(&r[2]), r[2].mul(&r[0]));
    let braid = |a: &WeylMatrix, b: &WeylMatrix| a.mul(b).unwrap().mul(a).unwrap();
    assert_eq!(braid(&r[2], &r[5]), braid(&r[5], &r[2]));
    assert_ne!(r[2].mul(&r[5]), r[5].mul(&r[2]));
    // s3 moves m2 by α3.
    let v = r[2].apply(&ints([3, 0, 0, 0, 0, 0]));
    assert_eq!(v, [s(3, 1), s(-1, 1), s(0, 1), s(-1, 1), s(0, 1), s(1, 1)]);
}

#[test]
fn root_identification() {
    let r = verify_root_identification();
    assert!(r.passed(), "{}", r.summary_line());
}

#[test]
fn group_orders() {
    assert_eq!(e6_group().order(), 51840);
    let r = simple_reflections();
    assert_eq!(generate_group(&r[..2], 100).unwrap().len(), 6);
    assert_eq!(generate_group(&r[3..5], 100).unwrap().len(), 6);
    let mut ext = r.to_vec();
    ext.push(WeylMatrix::central_symmetry());
    assert_eq!(generate_group(&ext, GROUP_BOUND).unwrap().len(), 103680);
    assert!(generate_group(&r, 1000).is_err());
    let report = verify_group().unwrap();
    assert!(report.passed(), "{}", report.summary_line());
}

#[test]
fn group_cache_round_trip() {
    let g = e6_group();
    let text = g.to_text();
    let back = WeylGroup::from_text(&text).unwrap();
    assert_eq!(back.elements, g.elements);
    // Dropping an element breaks closure.
    let mut lines: Vec<&str> = text.lines().collect();
    lines.pop();
    let short = lines.join("\n").replace("order 51840", "order 51839");
    assert!(WeylGroup::from_text(&short).is_err());
    assert!(WeylGroup::from_text("e6-weyl-group v0\norder 1\n").is_err());
}

#[test]
fn averaging_examples() {
    let g = e6_group();
    let m = |i: usize| Polynomial::var(i);
    assert_eq!(average(g, &Polynomial::one()).unwrap(), Polynomial::one());
    assert!(average(g, &m(0)).unwrap().is_zero());
    let sq = average(g, &m(0).mul(&m(0))).unwrap();
    assert_eq!(sq.eval(&ints([1; 6])), Scalar::from_int(2));
    // Brute-force check of the merged orbit sum at a point.
    let point = [2, -1, 3, 0, 1, 5];
    let brute = g.elements.iter().fold(Scalar::zero(), |acc, e| {
        let img = e.apply(&ints(point));
        acc.add(&img[2].mul(&img[2]).mul(&img[3]).mul(&img[4]).mul(&img[5]))
    });
    let orbit = OrbitSum::new(g, [0, 0, 2, 1, 1, 1]);
    assert_eq!(
        orbit.value_at(&point).unwrap(),
        brute.div(&Scalar::from_int(51840))
    );
    let poly = orbit.polynomial().unwrap();
    assert_eq!(poly.eval(&ints(point)), orbit.value_at(&point).unwrap());
}

#[test]
fn invariant_examples() {
    let ps = fundamental_invariants();
    for (p, d) in ps.iter().zip(INVARIANT_DEGREES) {
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(d));
    }
    assert_eq!(ps[0].eval(&ints([1; 6])), Scalar::from_int(3));
    let s1 = simple_reflections()[0];
    assert_eq!(s1.substitute(&ps[0]), ps[0]);
    let r = verify_invariants();
    assert!(r.passed(), "{}", r.summary_line());
    // Point values from the orbit agree with the polynomials.
    let point = [1, -2, 0, 3, 2, -1];
    let direct = invariants_at(&point).unwrap();
    for (p, v) in ps.iter().zip(direct) {
        assert_eq!(p.eval(&ints(point)), v);
    }
}

#[test]
fn specialisation_examples() {
    let ones = specialise_kl(&ints([1; 6]));
    assert!(ones.iter().all(|x| x.is_zero()));
    let v = specialise_kl(&ints([2, 1, 1, 1, 1, 1]));
    assert_eq!(v[0], s(8, 3));
    assert_eq!(v[3], s(20, 9));
    let sym = specialise_kl_symbolic();
    let point = ints([2, -3, 1, 4, 5, -1]);
    let num = specialise_kl(&point);
    for (p, x) in sym.iter().zip(&num) {
        assert_eq!(&p.eval(&point), x);
    }
    // a2 = (k1 + k2 + k3)/2 as a degree-2 polynomial in the m's.
    let a2 = &specialised_coefficients()[0];
    let half_sum = sym[0].add(&sym[1]).add(&sym[2]).scale(&s(1, 2));
    assert_eq!(a2, &half_sum);
    assert_eq!(a2, &kl_params().get("a2").compose(&sym));
    for (p, name) in specialised_coefficients().iter().zip(SPECIALISED_NAMES) {
        let d: u32 = name[1..].parse().unwrap();
        assert_eq!(p.degree(), Some(d), "{name}");
    }
}

#[test]
fn theorem_identities() {
    let screen = verify_theorem(7, false).unwrap();
    assert!(screen.passed());
    assert!(screen.note.as_deref().unwrap().contains("not run"));
    let r = verify_theorem(7, true).unwrap();
    assert!(r.passed(), "{}", r.summary_line());
    let ps = fundamental_invariants();
    let a = specialised_coefficients();
    assert_eq!(a[0], ps[0].sub(&Polynomial::int(3)));
    assert_eq!(a[1], ps[1].neg());
}

#[test]
fn perturbed_formula_fails_screen() {
    let formulas = invariant_formulas();
    let bad = formulas[2].add(&Polynomial::constant(s(1, 100)));
    let point = [3, 1, -2, 5, 0, 4];
    let ps = invariants_at(&point).unwrap();
    let kl = specialise_kl(&ints(point));
    assert_eq!(kl_params().get("a6").eval(&kl), formulas[2].eval(&ps));
    assert_ne!(kl_params().get("a6").eval(&kl), bad.eval(&ps));
}

#[test]
fn invariance_direct() {
    let r = verify_invariance_direct();
    assert!(r.passed(), "{}", r.summary_line());
    // a5 is odd under the central symmetry.
    let a5 = &specialised_coefficients()[1];
    assert_eq!(WeylMatrix::central_symmetry().substitute(a5), a5.neg());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn average_is_a_projector(terms in proptest::collection::vec((0usize..6, 0usize..6, -5i64..6), 1..4)) {
        let g = e6_group();
        let p = Polynomial::from_terms(terms.iter().map(|&(i, j, c)| {
            (Monomial::var(i).mul(&Monomial::var(j)), Scalar::from_int(c))
        }));
        let once = average(g, &p).unwrap();
        prop_assert_eq!(average(g, &once).unwrap(), once.clone());
        for s in simple_reflections() {
            prop_assert_eq!(s.substitute(&once), once.clone());
        }
    }

    #[test]
    fn group_elements_preserve_invariants(idx in 0usize..51840) {
        let g = e6_group().elements[idx];
        prop_assert_eq!(g.determinant().abs(), Scalar::one());
        let p2 = &fundamental_invariants()[0];
        prop_assert_eq!(&g.substitute(p2), p2);
    }
}
