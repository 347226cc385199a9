//! Exact matrix representations of sl(3), gl(N) and their tensor products,
//! used to evaluate noncommutative elements independently of rewriting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use crate::cy::{self, PElem};
use crate::env::{Elem, EnvAlgebra, Kind, Z2Gens};
use crate::error::{usage, Result};
use crate::poly::{Monomial, Polynomial};
use crate::report::{expect_zero, Report};
use crate::rewrite::{Gen, Word};
use crate::scalar::Scalar;

/// Dense exact rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Scalar::ONE)
    }

    pub fn scalar(n: usize, s: Scalar) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = s.clone();
        }
        m
    }

    /// The matrix unit with a one at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n, n);
        m.data[i * n + j] = Scalar::ONE;
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn add_scaled(&mut self, o: &Matrix, s: &Scalar) {
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                *a = a.add(&b.mul(s));
            }
        }
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows);
        let mut r = Matrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        r.data[idx] = r.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        r
    }

    pub fn commutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn transpose(&self) -> Matrix {
        let mut r = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                r.set(j, i, self.get(i, j).clone());
            }
        }
        r
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut r = Matrix::zero(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        r.set(i * o.rows + k, j * o.cols + l, a.mul(o.get(k, l)));
                    }
                }
            }
        }
        r
    }

    /// Stacks matrices with equal column counts.
    pub fn vstack(ms: &[Matrix]) -> Matrix {
        let cols = ms[0].cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for m in ms {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Matrix { rows, cols, data }
    }

    /// Rank by fraction-free (Bareiss) elimination after clearing the
    /// denominators of each row.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(&x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        let (m, n) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..n {
            if rank == m {
                break;
            }
            let Some(p) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..m {
                for c in col + 1..n {
                    let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                    a[r][c] = v;
                }
                a[r][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn to_text(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// A representation of one copy of gl(N) or sl(N): a matrix for every basis
/// generator of the copy.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub name: String,
    pub dim: usize,
    pub images: Vec<Matrix>,
    /// Highest weight `(m1, m2)` in the shifted convention, if labelled.
    pub weights: Option<(i64, i64)>,
}

impl MatrixRep {
    /// The defining representation: each basis element is its own matrix.
    pub fn fundamental(env: &EnvAlgebra) -> Self {
        let n = env.n;
        let images = env.basis().iter().map(|b| gl_to_matrix(b, n)).collect();
        MatrixRep {
            name: "fundamental".into(),
            dim: n,
            images,
            weights: (n == 3).then_some((2, 1)),
        }
    }

    /// `x ↦ -xᵀ`.
    pub fn dual(env: &EnvAlgebra) -> Self {
        let f = Self::fundamental(env);
        MatrixRep {
            name: "dual".into(),
            dim: f.dim,
            images: f
                .images
                .iter()
                .map(|m| m.transpose().scale(&Scalar::from_int(-1)))
                .collect(),
            weights: (env.n == 3).then_some((1, 2)),
        }
    }

    /// `ad(b_x)` in the basis of one copy.
    pub fn adjoint(env: &EnvAlgebra) -> Self {
        let c = env.structure_constants();
        let per = env.per_copy();
        let images = (0..per)
            .map(|x| {
                let mut m = Matrix::zero(per, per);
                for y in 0..per {
                    for z in 0..per {
                        m.set(z, y, c[x][y][z].clone());
                    }
                }
                m
            })
            .collect();
        MatrixRep {
            name: "adjoint".into(),
            dim: per,
            images,
            weights: (env.n == 3 && env.kind == Kind::Sl).then_some((2, 2)),
        }
    }

    pub fn trivial(env: &EnvAlgebra) -> Self {
        MatrixRep {
            name: "trivial".into(),
            dim: 1,
            images: vec![Matrix::zero(1, 1); env.per_copy()],
            weights: Some((1, 1)),
        }
    }

    /// The standard sl(3) representation with highest weight `(m1, m2)`.
    pub fn standard(env: &EnvAlgebra, m: (i64, i64)) -> Result<Self> {
        match m {
            (1, 1) => Ok(Self::trivial(env)),
            (2, 1) => Ok(Self::fundamental(env)),
            (1, 2) => Ok(Self::dual(env)),
            (2, 2) => Ok(Self::adjoint(env)),
            _ => usage(format!(
                "no built-in representation with highest weight ({},{}); available: (1,1), (2,1), (1,2), (2,2)",
                m.0, m.1
            )),
        }
    }

    /// `[ρ(x), ρ(y)] = ρ([x, y])` for every pair of basis elements.
    pub fn check(&self, env: &EnvAlgebra) -> Result<(), String> {
        let c = env.structure_constants();
        for (x, cx) in c.iter().enumerate() {
            for (y, cxy) in cx.iter().enumerate() {
                let lhs = self.images[x].commutator(&self.images[y]);
                let mut rhs = Matrix::zero(self.dim, self.dim);
                for (z, k) in cxy.iter().enumerate() {
                    rhs.add_scaled(&self.images[z], k);
                }
                if lhs != rhs {
                    return Err(format!("{}: bracket of generators {x}, {y}", self.name));
                }
            }
        }
        Ok(())
    }
}

fn gl_to_matrix(b: &crate::env::GlMat, n: usize) -> Matrix {
    let mut m = Matrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, b.get(i, j).clone());
        }
    }
    m
}

/// One representation per tensor factor.
pub struct TensorRep<'a> {
    pub env: &'a EnvAlgebra,
    pub factors: Vec<MatrixRep>,
}

impl<'a> TensorRep<'a> {
    pub fn new(env: &'a EnvAlgebra, factors: Vec<MatrixRep>) -> Result<Self> {
        if factors.len() != env.l {
            return usage(format!("need {} factors, got {}", env.l, factors.len()));
        }
        Ok(TensorRep { env, factors })
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).product()
    }

    /// Full-size image of a generator: identity on every other factor.
    pub fn letter(&self, g: Gen) -> Matrix {
        let (a, i) = self.env.locate(g);
        self.factors
            .iter()
            .enumerate()
            .map(|(b, f)| {
                if b == a {
                    f.images[i].clone()
                } else {
                    Matrix::identity(f.dim)
                }
            })
            .reduce(|x, y| x.kron(&y))
            .unwrap()
    }

    /// Diagonal image of basis element `i` of one copy.
    pub fn diagonal(&self, i: usize) -> Matrix {
        (0..self.env.l)
            .map(|a| self.letter(self.env.gen_index(a, i)))
            .reduce(|x, y| x.add(&y))
            .unwrap()
    }

    /// Word by word with full-size matrices; works for any word.
    pub fn evaluate_free(&self, e: &Elem) -> Matrix {
        let letters: Vec<Matrix> = (0..self.env.sys.num_generators())
            .map(|g| self.letter(g as Gen))
            .collect();
        let n = self.dim();
        let mut out = Matrix::zero(n, n);
        for (w, c) in e.iter() {
            let m = w
                .iter()
                .fold(Matrix::identity(n), |acc, &g| acc.mul(&letters[g as usize]));
            out.add_scaled(&m, c);
        }
        out
    }

    /// Factorised evaluation: the image of a word is the Kronecker product
    /// of the images of its letters in each factor. Prefix products are
    /// shared between words.
    pub fn evaluate(&self, e: &Elem) -> Matrix {
        let n = self.dim();
        let mut caches: Vec<FxHashMap<Word, Matrix>> = vec![FxHashMap::default(); self.env.l];
        let mut out = Matrix::zero(n, n);
        for (w, c) in e.iter() {
            let mut parts: Vec<Word> = vec![Word::new(); self.env.l];
            for &g in w.iter() {
                let (a, i) = self.env.locate(g);
                parts[a].push(i as Gen);
            }
            let mut m: Option<Matrix> = None;
            for (a, part) in parts.iter().enumerate() {
                let f = self.factor_word(a, part, &mut caches[a]);
                m = Some(match m {
                    None => f,
                    Some(x) => x.kron(&f),
                });
            }
            out.add_scaled(&m.unwrap(), c);
        }
        out
    }

    fn factor_word(&self, a: usize, w: &Word, cache: &mut FxHashMap<Word, Matrix>) -> Matrix {
        if w.is_empty() {
            return Matrix::identity(self.factors[a].dim);
        }
        if let Some(m) = cache.get(w) {
            return m.clone();
        }
        let prefix: Word = Word::from_slice(&w[..w.len() - 1]);
        let p = self.factor_word(a, &prefix, cache);
        let m = p.mul(&self.factors[a].images[w[w.len() - 1] as usize]);
        cache.insert(w.clone(), m.clone());
        m
    }

    pub fn name(&self) -> String {
        self.factors
            .iter()
            .map(|f| f.name.as_str())
            .collect::<Vec<_>>()
            .join("⊗")
    }
}

/// Evaluates a commutative polynomial at pairwise commuting matrices.
pub fn eval_poly_matrix(p: &Polynomial, vals: &[Matrix]) -> Matrix {
    let n = vals[0].rows;
    let mut cache: FxHashMap<Monomial, Matrix> = FxHashMap::default();
    cache.insert(Monomial::ONE, Matrix::identity(n));
    fn value(m: &Monomial, vals: &[Matrix], cache: &mut FxHashMap<Monomial, Matrix>) -> Matrix {
        if let Some(v) = cache.get(m) {
            return v.clone();
        }
        let i = (0..vals.len()).find(|&i| m.exp(i) > 0).unwrap();
        let v = value(&m.div_var(i), vals, cache).mul(&vals[i]);
        cache.insert(*m, v.clone());
        v
    }
    let mut out = Matrix::zero(n, n);
    for (m, c) in p.terms() {
        out.add_scaled(&value(m, vals, &mut cache), c);
    }
    out
}

/// Matrices of `X, Y, Z` and `k1..l3` in a tensor representation.
pub struct RealisedMatrices {
    pub abc: [Matrix; 3],
    pub kl: Vec<Matrix>,
}

impl RealisedMatrices {
    pub fn new(rep: &TensorRep, gens: &Z2Gens) -> Self {
        RealisedMatrices {
            abc: [
                rep.evaluate(&gens.x),
                rep.evaluate(&gens.y),
                rep.evaluate(&gens.z),
            ],
            kl: gens.kl().iter().map(|e| rep.evaluate(e)).collect(),
        }
    }

    /// Image of a free-algebra element in `A, B, C` over C[k,l].
    pub fn evaluate(&self, e: &PElem) -> Matrix {
        let n = self.abc[0].rows;
        let mut out = Matrix::zero(n, n);
        for (w, c) in e.iter() {
            let word = w.iter().fold(Matrix::identity(n), |acc, &g| {
                acc.mul(&self.abc[g as usize])
            });
            out = out.add(&eval_poly_matrix(c, &self.kl).mul(&word));
        }
        out
    }
}

/// The three tensor representations used for the `Ω = a12` check.
pub fn omega_oracle_reps(env: &EnvAlgebra) -> Vec<TensorRep<'_>> {
    let f = MatrixRep::fundamental(env);
    let d = MatrixRep::dual(env);
    let a = MatrixRep::adjoint(env);
    vec![
        TensorRep::new(env, vec![f.clone(), f.clone()]).unwrap(),
        TensorRep::new(env, vec![f.clone(), d]).unwrap(),
        TensorRep::new(env, vec![a, f]).unwrap(),
    ]
}

/// `Ω - a12(k,l)` evaluated exactly in each representation; also checks
/// that the image of `Z` is the commutator of the images of `X` and `Y` and
/// that the defining relations hold as matrices.
pub fn verify_omega_oracle(env: &EnvAlgebra, gens: &Z2Gens) -> Report {
    let p = cy::kl_params();
    let om = cy::omega(p).sub(&crate::rewrite::NCElement::constant(cy::a12().clone()));
    let rels = cy::relations(p);
    let mut checks = Vec::new();
    for rep in omega_oracle_reps(env) {
        let name = rep.name();
        let m = RealisedMatrices::new(&rep, gens);
        let zc = m.abc[2].sub(&m.abc[0].commutator(&m.abc[1]));
        checks.push((
            format!("{name}: Z = [X,Y]"),
            expect_zero(zc.is_zero(), || zc.to_text()),
        ));
        for (i, r) in rels.iter().enumerate() {
            let v = m.evaluate(r);
            checks.push((
                format!("{name}: relation {}", i + 1),
                expect_zero(v.is_zero(), || v.to_text()),
            ));
        }
        let v = m.evaluate(&om);
        checks.push((
            format!("{name}: Omega = a12"),
            expect_zero(v.is_zero(), || v.to_text()),
        ));
    }
    Report::from_checks("omega-image", checks).detail("mode", "oracle")
}

/// Multiplicity of the irreducible with highest weight `target` in
/// `r1 ⊗ r2`: the dimension of the joint kernel of the diagonal raising
/// operators and of `h_p - (m_p - 1)`.
pub fn lr_multiplicity(
    env: &EnvAlgebra,
    r1: &MatrixRep,
    r2: &MatrixRep,
    target: (i64, i64),
) -> Result<usize> {
    if env.n != 3 || env.kind != Kind::Sl || env.l != 2 {
        return usage("multiplicities are computed in U(sl(3)) tensor U(sl(3))");
    }
    let rep = TensorRep::new(env, vec![r1.clone(), r2.clone()])?;
    let n = rep.dim();
    // Basis order of one copy: e12, e13, e23, e21, e31, e32, h1, h2.
    let e12 = rep.diagonal(0);
    let e23 = rep.diagonal(2);
    let h1 = rep
        .diagonal(6)
        .sub(&Matrix::scalar(n, Scalar::from_int(target.0 - 1)));
    let h2 = rep
        .diagonal(7)
        .sub(&Matrix::scalar(n, Scalar::from_int(target.1 - 1)));
    Ok(Matrix::vstack(&[e12, e23, h1, h2]).nullity())
}

/// Quadratic and cubic Casimir values `c2(m1, m2)`, `c3(m1, m2)`.
pub fn casimir_values(m1: &Scalar, m2: &Scalar) -> (Scalar, Scalar) {
    let s = |n: i64| Scalar::from_int(n);
    let c2 = Scalar::new(2, 3)
        .mul(&m1.mul(m1).add(&m2.mul(m2)).add(&m1.mul(m2)))
        .sub(&s(2));
    let c3 = Scalar::new(1, 9)
        .mul(&m1.add(&m2.mul(&s(2))).sub(&s(3)))
        .mul(&m1.mul(&s(2)).add(m2).add(&s(3)))
        .mul(&m1.sub(m2).sub(&s(3)));
    (c2, c3)
}
