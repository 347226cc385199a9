use cyalg::{Monomial, Polynomial, Scalar, VarSet};
use proptest::prelude::*;

fn vars() -> std::sync::Arc<VarSet> {
    VarSet::new(&["x", "y", "z"]).unwrap()
}

fn poly() -> impl Strategy<Value = Polynomial> {
    let term = ((0u8..3, 0u8..3, 0u8..3), -9i64..10, 1i64..4);
    prop::collection::vec(term, 0..6).prop_map(|ts| {
        Polynomial::from_terms(ts.into_iter().map(|((a, b, c), n, d)| {
            let mut e = [0u8; 16];
            e[0] = a;
            e[1] = b;
            e[2] = c;
            (Monomial(e), Scalar::new(n, d))
        }))
    })
}

fn point() -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec((-6i64..7, 1i64..4).prop_map(|(n, d)| Scalar::new(n, d)), 3)
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), x in point()) {
        prop_assert_eq!(p.mul(&q).eval(&x), p.eval(&x).mul(&q.eval(&x)));
        prop_assert_eq!(p.add(&q).eval(&x), p.eval(&x).add(&q.eval(&x)));
    }

    // Horner substitution against plain evaluation at the images.
    #[test]
    fn substitution_commutes_with_evaluation(p in poly(), a in poly(), b in poly(), x in point()) {
        let images = [a.clone(), b.clone(), Polynomial::var(2)];
        let lhs = p.compose(&images).eval(&x);
        let rhs = p.eval(&[a.eval(&x), b.eval(&x), x[2].clone()]);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_round_trip(p in poly()) {
        let v = vars();
        prop_assert_eq!(v.parse(&p.to_text(&v)).unwrap(), p);
    }
}

#[test]
fn parse_examples() {
    let v = vars();
    let p = v.parse("(x + y)^2 - x*x - 2*x*y").unwrap();
    assert_eq!(p, v.parse("y^2").unwrap());
    assert!(v.parse("w + 1").is_err());
    assert_eq!(v.parse("1/2*x - x/2").unwrap(), Polynomial::zero());
}
