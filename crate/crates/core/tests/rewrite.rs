use cyalg::env::{EnvAlgebra, Kind};
use cyalg::rewrite::{check_overlaps, reduce, Strategy as Order};
use cyalg::{NCElement, Scalar, Word};
use proptest::prelude::*;

fn element(gens: u8, max_len: usize) -> impl Strategy<Value = NCElement<Scalar>> {
    let word = prop::collection::vec(0..gens, 1..=max_len);
    prop::collection::vec((word, -5i64..6), 1..4).prop_map(|ts| {
        NCElement::from_terms(
            ts.into_iter()
                .map(|(w, c)| (Word::from_vec(w), Scalar::from_int(c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn memoised_matches_naive(e in element(4, 5), seed in any::<u64>()) {
        let env = EnvAlgebra::new(2, 1, Kind::Gl).unwrap();
        let nf = env.sys.normal_form(&e);
        prop_assert!(env.sys.is_normal(&nf));
        prop_assert_eq!(&nf, &reduce(&env.sys, &e, Order::Random(seed), 100_000).unwrap());
        prop_assert_eq!(env.sys.normal_form(&nf), nf);
    }

    #[test]
    fn product_is_associative(a in element(6, 3), b in element(6, 3), c in element(6, 3)) {
        let env = EnvAlgebra::new(2, 2, Kind::Sl).unwrap();
        let s = &env.sys;
        prop_assert_eq!(s.mul(&s.mul(&a, &b), &c), s.mul(&a, &s.mul(&b, &c)));
    }
}

#[test]
fn enveloping_algebra_has_polynomial_growth() {
    // PBW: dimensions of U(gl(2)) filtration pieces are binomial(n+3, 3).
    let env = EnvAlgebra::new(2, 1, Kind::Gl).unwrap();
    assert!(check_overlaps(&env.sys, Order::Leftmost, 10_000)
        .unwrap()
        .passed());
    let counts = env.sys.hilbert_counts(10);
    for (n, c) in counts.iter().enumerate() {
        let want = (n + 1) * (n + 2) * (n + 3) / 6;
        assert_eq!(*c as usize, want, "degree {n}");
    }
}
