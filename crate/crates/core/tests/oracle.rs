use cyalg::env::*;
use cyalg::oracle::*;
use cyalg::Scalar;
use proptest::prelude::*;

fn s(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

#[test]
fn standard_reps_are_representations() {
    let env = EnvAlgebra::new(3, 1, Kind::Sl).unwrap();
    for rep in [
        MatrixRep::fundamental(&env),
        MatrixRep::dual(&env),
        MatrixRep::adjoint(&env),
        MatrixRep::trivial(&env),
    ] {
        rep.check(&env).unwrap();
    }
    let f = MatrixRep::fundamental(&env);
    assert_eq!(f.images[0], Matrix::unit(3, 0, 1));
    assert_eq!(MatrixRep::adjoint(&env).dim, 8);
    let gl = EnvAlgebra::new(2, 1, Kind::Gl).unwrap();
    MatrixRep::fundamental(&gl).check(&gl).unwrap();
    MatrixRep::adjoint(&gl).check(&gl).unwrap();
}

#[test]
fn highest_weights() {
    let env = EnvAlgebra::new(3, 1, Kind::Sl).unwrap();
    // Highest-weight vectors: e1 for the fundamental, e3 for the dual, e13
    // (basis index 1) for the adjoint.
    for (rep, v) in [
        (MatrixRep::fundamental(&env), 0),
        (MatrixRep::dual(&env), 2),
        (MatrixRep::adjoint(&env), 1),
    ] {
        let (m1, m2) = rep.weights.unwrap();
        for raise in 0..3 {
            for i in 0..rep.dim {
                assert!(rep.images[raise].get(i, v).is_zero());
            }
        }
        assert_eq!(rep.images[6].get(v, v), &Scalar::from_int(m1 - 1));
        assert_eq!(rep.images[7].get(v, v), &Scalar::from_int(m2 - 1));
    }
}

#[test]
fn casimir_scalars() {
    let env = EnvAlgebra::new(3, 1, Kind::Sl).unwrap();
    let c2 = env.casimir(1, CasimirKind::C2).unwrap();
    let c3 = env.casimir(1, CasimirKind::C3).unwrap();
    for rep in [
        MatrixRep::fundamental(&env),
        MatrixRep::dual(&env),
        MatrixRep::adjoint(&env),
    ] {
        let (m1, m2) = rep.weights.unwrap();
        let (v2, v3) = casimir_values(&Scalar::from_int(m1), &Scalar::from_int(m2));
        let t = TensorRep::new(&env, vec![rep.clone()]).unwrap();
        assert_eq!(t.evaluate(&c2), Matrix::scalar(rep.dim, v2), "{}", rep.name);
        assert_eq!(t.evaluate(&c3), Matrix::scalar(rep.dim, v3), "{}", rep.name);
    }
    let (v2, v3) = casimir_values(&Scalar::from_int(2), &Scalar::from_int(1));
    assert_eq!(v2, s(8, 3));
    assert_eq!(v3, s(-16, 9));
    let (v2, _) = casimir_values(&Scalar::ONE, &Scalar::ONE);
    assert!(v2.is_zero());
}

#[test]
fn tensor_products() {
    let env = sl3_squared().unwrap();
    let f = MatrixRep::fundamental(&env);
    let rep = TensorRep::new(&env, vec![f.clone(), f.clone()]).unwrap();
    assert_eq!(rep.dim(), 9);
    let a = rep.letter(env.gen_index(0, 0));
    let b = rep.letter(env.gen_index(1, 3));
    assert!(a.commutator(&b).is_zero());
    let g = build_z2_generators(&env).unwrap();
    assert_eq!(rep.evaluate(&g.k[0]), Matrix::scalar(9, s(8, 3)));
    // The diagonal quadratic Casimir has eigenvalues c2(3,1) and c2(1,2).
    let k3 = rep.evaluate(&g.k[2]);
    let (c31, _) = casimir_values(&Scalar::from_int(3), &Scalar::ONE);
    let (c12, _) = casimir_values(&Scalar::ONE, &Scalar::from_int(2));
    let p = k3.sub(&Matrix::scalar(9, c31));
    let q = k3.sub(&Matrix::scalar(9, c12));
    assert!(!p.is_zero() && !q.is_zero());
    assert!(p.mul(&q).is_zero());
    let x = rep.evaluate(&g.x);
    for i in 0..8 {
        assert!(x.commutator(&rep.diagonal(i)).is_zero());
    }
    let m = RealisedMatrices::new(&rep, &g);
    assert!(m.abc[0].commutator(&m.abc[1]).sub(&m.abc[2]).is_zero());
}

#[test]
fn factorised_and_free_evaluation_agree() {
    let env = sl3_squared().unwrap();
    let rep = TensorRep::new(&env, vec![MatrixRep::adjoint(&env), MatrixRep::dual(&env)]).unwrap();
    let e = env
        .sys
        .parse_free("e12_1*e21_2*h1_1 - 3*e32_2*e13_1 + 1/2")
        .unwrap();
    let nf = env.sys.normal_form(&e);
    assert_eq!(rep.evaluate(&nf), rep.evaluate_free(&e));
    assert_eq!(rep.evaluate_free(&nf), rep.evaluate_free(&e));
}

#[test]
fn omega_oracle() {
    let env = sl3_squared().unwrap();
    let g = build_z2_generators(&env).unwrap();
    let r = verify_omega_oracle(&env, &g);
    assert!(r.passed(), "{}", r.summary_line());
}

#[test]
fn multiplicities() {
    let env = sl3_squared().unwrap();
    let f = MatrixRep::fundamental(&env);
    let d = MatrixRep::dual(&env);
    let a = MatrixRep::adjoint(&env);
    assert_eq!(lr_multiplicity(&env, &f, &f, (3, 1)).unwrap(), 1);
    assert_eq!(lr_multiplicity(&env, &f, &f, (1, 2)).unwrap(), 1);
    assert_eq!(lr_multiplicity(&env, &f, &f, (2, 1)).unwrap(), 0);
    // 3 ⊗ 3̄ = 8 ⊕ 1; 8 ⊗ 8 contains 8 twice.
    assert_eq!(lr_multiplicity(&env, &f, &d, (2, 2)).unwrap(), 1);
    assert_eq!(lr_multiplicity(&env, &f, &d, (1, 1)).unwrap(), 1);
    assert_eq!(lr_multiplicity(&env, &a, &a, (2, 2)).unwrap(), 2);
}

/// Rank by plain rational elimination.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
        .collect();
    let (m, n) = (a.len(), a[0].len());
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..m).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..m {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].div(&a[rank][c]);
                for k in 0..n {
                    let v = a[r][k].sub(&f.mul(&a[rank][k]));
                    a[r][k] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #[test]
    fn bareiss_rank_matches(rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 5), 1..7)) {
        let mut m = Matrix::zero(rows.len(), 5);
        for (i, r) in rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, Scalar::new(x, 1 + (i as i64 % 3)));
            }
        }
        prop_assert_eq!(m.rank(), rational_rank(&rows));
    }
}
