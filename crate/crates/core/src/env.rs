//! Tensor powers of U(gl(N)) and U(sl(N)) as rewrite systems, polarised
//! traces, and the generators of the diagonal centraliser of sl(3) in two
//! copies.

use std::sync::Arc;

use parking_lot::Mutex;
use rustc_hash::FxHashMap;

use crate::cy::{self, AgenParams, PElem};
use crate::error::{usage, Result};
use crate::poly::{Monomial, Polynomial};
use crate::report::{expect_zero, Report};
use crate::rewrite::{Gen, NCElement, RewriteSystem, SystemBuilder};
use crate::scalar::Scalar;

pub type Elem = NCElement<Scalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Gl,
    Sl,
}

/// An `N x N` matrix of scalars standing for a linear combination of the
/// matrix units `e_pq` of gl(N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlMat {
    n: usize,
    entries: Vec<Scalar>,
}

impl GlMat {
    pub fn zero(n: usize) -> Self {
        GlMat {
            n,
            entries: vec![Scalar::ZERO; n * n],
        }
    }

    /// The matrix unit `e_pq` (0-based).
    pub fn unit(n: usize, p: usize, q: usize) -> Self {
        let mut m = Self::zero(n);
        m.entries[p * n + q] = Scalar::ONE;
        m
    }

    pub fn get(&self, p: usize, q: usize) -> &Scalar {
        &self.entries[p * self.n + q]
    }

    pub fn add_scaled(&mut self, o: &GlMat, k: &Scalar) {
        for (a, b) in self.entries.iter_mut().zip(&o.entries) {
            *a = a.add(&b.mul(k));
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.n).fold(Scalar::ZERO, |s, i| s.add(self.get(i, i)))
    }

    pub fn commutator(&self, o: &GlMat) -> GlMat {
        let n = self.n;
        let mut r = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut s = Scalar::ZERO;
                for k in 0..n {
                    s = s
                        .add(&self.get(i, k).mul(o.get(k, j)))
                        .sub(&o.get(i, k).mul(self.get(k, j)));
                }
                r.entries[i * n + j] = s;
            }
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }
}

/// U(gl(N))^{⊗L} or U(sl(N))^{⊗L} with generators `e_pq^(a)` (and
/// `h_p^(a) = e_pp^(a) - e_{p+1,p+1}^(a)` for sl).
pub struct EnvAlgebra {
    pub n: usize,
    pub l: usize,
    pub kind: Kind,
    pub sys: RewriteSystem<Scalar>,
    /// Basis of one copy as gl matrices, in generator order.
    basis: Vec<GlMat>,
    traces: Mutex<FxHashMap<Vec<usize>, Arc<Elem>>>,
}

fn basis_of(n: usize, kind: Kind) -> Vec<(String, GlMat)> {
    let mut v = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            v.push((format!("e{}{}", p + 1, q + 1), GlMat::unit(n, p, q)));
        }
    }
    for p in 0..n {
        for q in 0..p {
            v.push((format!("e{}{}", p + 1, q + 1), GlMat::unit(n, p, q)));
        }
    }
    match kind {
        Kind::Gl => {
            for p in 0..n {
                v.push((format!("e{}{}", p + 1, p + 1), GlMat::unit(n, p, p)));
            }
        }
        Kind::Sl => {
            for p in 0..n - 1 {
                let mut h = GlMat::unit(n, p, p);
                h.add_scaled(&GlMat::unit(n, p + 1, p + 1), &Scalar::from_int(-1));
                v.push((format!("h{}", p + 1), h));
            }
        }
    }
    v
}

/// Coordinates of a gl matrix in the basis; for sl the matrix must be
/// traceless.
fn coordinates(m: &GlMat, kind: Kind, basis_len: usize) -> Vec<Scalar> {
    let n = m.n;
    let mut c = Vec::with_capacity(basis_len);
    for p in 0..n {
        for q in p + 1..n {
            c.push(m.get(p, q).clone());
        }
    }
    for p in 0..n {
        for q in 0..p {
            c.push(m.get(p, q).clone());
        }
    }
    match kind {
        Kind::Gl => {
            for p in 0..n {
                c.push(m.get(p, p).clone());
            }
        }
        Kind::Sl => {
            // diag(d) = Σ_j c_j h_j with c_j = d_1 + ... + d_j.
            let mut acc = Scalar::ZERO;
            for p in 0..n - 1 {
                acc = acc.add(m.get(p, p));
                c.push(acc.clone());
            }
        }
    }
    c
}

impl EnvAlgebra {
    pub fn new(n: usize, l: usize, kind: Kind) -> Result<Self> {
        if n < 2 || l < 1 {
            return usage(format!("need N >= 2 and L >= 1, got N={n}, L={l}"));
        }
        let per = basis_of(n, kind).len();
        if per * l > 200 {
            return usage(format!("{} generators is too many", per * l));
        }
        let named = basis_of(n, kind);
        let basis: Vec<GlMat> = named.iter().map(|(_, m)| m.clone()).collect();
        let mut b = SystemBuilder::<Scalar>::new();
        for a in 0..l {
            b.next_block();
            for (name, _) in &named {
                b.generator(&format!("{name}_{}", a + 1), 1);
            }
        }
        for a in 0..l {
            for x in 0..per {
                for y in 0..x {
                    let br = basis[x].commutator(&basis[y]);
                    let mut lower = NCElement::zero();
                    for (i, c) in coordinates(&br, kind, per).into_iter().enumerate() {
                        if !c.is_zero() {
                            lower.add_term(smallvec::smallvec![(a * per + i) as Gen], &c);
                        }
                    }
                    b.swap((a * per + x) as Gen, (a * per + y) as Gen, lower);
                }
            }
            for a2 in 0..a {
                for x in 0..per {
                    for y in 0..per {
                        b.swap(
                            (a * per + x) as Gen,
                            (a2 * per + y) as Gen,
                            NCElement::zero(),
                        );
                    }
                }
            }
        }
        Ok(EnvAlgebra {
            n,
            l,
            kind,
            sys: b.build()?,
            basis,
            traces: Mutex::new(FxHashMap::default()),
        })
    }

    pub fn per_copy(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[GlMat] {
        &self.basis
    }

    /// Generator index of basis element `i` in copy `a` (0-based).
    pub fn gen_index(&self, a: usize, i: usize) -> Gen {
        (a * self.per_copy() + i) as Gen
    }

    /// Copy and basis index of a generator.
    pub fn locate(&self, g: Gen) -> (usize, usize) {
        (g as usize / self.per_copy(), g as usize % self.per_copy())
    }

    /// Structure constants: `[b_x, b_y] = Σ_z c[x][y][z] b_z`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        let per = self.per_copy();
        (0..per)
            .map(|x| {
                (0..per)
                    .map(|y| coordinates(&self.basis[x].commutator(&self.basis[y]), self.kind, per))
                    .collect()
            })
            .collect()
    }

    /// Antisymmetry and the Jacobi identity for the structure constants, and
    /// that every bracket lies in the span of the basis.
    pub fn check_structure(&self) -> Result<(), String> {
        let per = self.per_copy();
        let c = self.structure_constants();
        for x in 0..per {
            for y in 0..per {
                let br = self.basis[x].commutator(&self.basis[y]);
                let mut back = GlMat::zero(self.n);
                for (z, k) in c[x][y].iter().enumerate() {
                    back.add_scaled(&self.basis[z], k);
                }
                if back != br {
                    return Err(format!("bracket ({x},{y}) leaves the span"));
                }
                for z in 0..per {
                    if !c[x][y][z].add(&c[y][x][z]).is_zero() {
                        return Err(format!("antisymmetry fails at ({x},{y},{z})"));
                    }
                }
            }
        }
        for x in 0..per {
            for y in 0..per {
                for z in 0..per {
                    for t in 0..per {
                        let mut s = Scalar::ZERO;
                        for u in 0..per {
                            s = s
                                .add(&c[x][y][u].mul(&c[u][z][t]))
                                .add(&c[y][z][u].mul(&c[u][x][t]))
                                .add(&c[z][x][u].mul(&c[u][y][t]));
                        }
                        if !s.is_zero() {
                            return Err(format!("Jacobi fails at ({x},{y},{z})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The element of copy `a` given by a gl matrix. For sl, its traceless
    /// part is used (the quotient by `Σ e_pp`).
    pub fn from_gl(&self, a: usize, m: &GlMat) -> Elem {
        let mut m = m.clone();
        if self.kind == Kind::Sl {
            let t = m.trace().div(&Scalar::from_int(self.n as i64));
            for p in 0..self.n {
                let i = p * self.n + p;
                m.entries[i] = m.entries[i].sub(&t);
            }
        }
        let mut e = NCElement::zero();
        for (i, c) in coordinates(&m, self.kind, self.per_copy())
            .into_iter()
            .enumerate()
        {
            if !c.is_zero() {
                e.add_term(smallvec::smallvec![self.gen_index(a, i)], &c);
            }
        }
        e
    }

    /// `e_pq^(a)` with 1-based indices.
    pub fn e(&self, a: usize, p: usize, q: usize) -> Elem {
        self.from_gl(a - 1, &GlMat::unit(self.n, p - 1, q - 1))
    }

    /// The polarised trace `e_{i2 i1}^(a1) e_{i3 i2}^(a2) ... e_{i1 id}^(ad)`
    /// with 1-based copy indices.
    pub fn polarised_trace(&self, spec: &[usize]) -> Result<Arc<Elem>> {
        if spec.is_empty() || spec.iter().any(|&a| a < 1 || a > self.l) {
            return usage(format!("invalid trace indices {spec:?} for L={}", self.l));
        }
        if let Some(t) = self.traces.lock().get(spec) {
            return Ok(t.clone());
        }
        let t = Arc::new(self.matrix_trace(spec, true)?);
        self.traces.lock().insert(spec.to_vec(), t.clone());
        Ok(t)
    }

    /// `tr(M^(a1) ... M^(ad))` with `M_ij = e_ji` if `transposed`, else
    /// `M_ij = e_ij`.
    fn matrix_trace(&self, spec: &[usize], transposed: bool) -> Result<Elem> {
        let n = self.n;
        let entry = |a: usize, i: usize, j: usize| {
            if transposed {
                self.e(a, j + 1, i + 1)
            } else {
                self.e(a, i + 1, j + 1)
            }
        };
        let mut p: Vec<Elem> = (0..n * n).map(|k| entry(spec[0], k / n, k % n)).collect();
        for &a in &spec[1..] {
            let m: Vec<Elem> = (0..n * n).map(|k| entry(a, k / n, k % n)).collect();
            let mut next = Vec::with_capacity(n * n);
            for i in 0..n {
                for k in 0..n {
                    let mut s = NCElement::zero();
                    for j in 0..n {
                        s = s.add(&self.sys.try_mul(&p[i * n + j], &m[j * n + k])?);
                    }
                    next.push(s);
                }
            }
            p = next;
        }
        Ok((0..n).fold(NCElement::zero(), |s, i| s.add(&p[i * n + i])))
    }

    /// The homomorphism `e_pq ↦ Σ_a e_pq^(a)` applied to an element written
    /// in the generators of copy 1.
    pub fn diagonal_map(&self, e: &Elem) -> Result<Elem> {
        let per = self.per_copy();
        if e.iter().any(|(w, _)| w.iter().any(|&g| g as usize >= per)) {
            return usage("diagonal map needs an element of copy 1");
        }
        let img = e.map_letters(|g| {
            (0..self.l).fold(NCElement::zero(), |s, a| {
                s.add(&NCElement::gen(self.gen_index(a, g as usize)))
            })
        });
        self.sys.try_normal_form(&img)
    }

    /// Images of the basis of one copy under the diagonal map.
    pub fn diagonal_generators(&self) -> Vec<Elem> {
        (0..self.per_copy())
            .map(|i| {
                (0..self.l).fold(NCElement::zero(), |s, a| {
                    s.add(&NCElement::gen(self.gen_index(a, i)))
                })
            })
            .collect()
    }

    pub fn casimir(&self, copy: usize, kind: CasimirKind) -> Result<Elem> {
        let (d, transposed) = match kind {
            CasimirKind::C2 => (2, true),
            CasimirKind::C3 => (3, true),
            CasimirKind::C2Bar => (2, false),
            CasimirKind::C3Bar => (3, false),
        };
        if copy < 1 || copy > self.l {
            return usage(format!("copy {copy} out of range"));
        }
        self.matrix_trace(&vec![copy; d], transposed)
    }

    /// `[e, δ(g)]` for every basis element `g` of one copy; the first
    /// nonzero commutator is the witness.
    pub fn centraliser_check(&self, name: &str, e: &Elem) -> Result<Report> {
        for (i, d) in self.diagonal_generators().iter().enumerate() {
            let c = self.sys.try_commutator(e, d)?;
            if !c.is_zero() {
                let g = &self.sys.generators()[i].name;
                let g = g.trim_end_matches("_1");
                return Ok(Report::fail(
                    name,
                    format!("[e, delta({g})] = {}", self.sys.to_text(&c)),
                ));
            }
        }
        Ok(Report::pass(name).detail("commutators", self.per_copy()))
    }

    /// The automorphism `e_ij^(a) ↦ -e_ji^(a)`.
    pub fn tau(&self, e: &Elem) -> Result<Elem> {
        let images: Vec<Elem> = (0..self.sys.num_generators())
            .map(|g| {
                let (a, i) = self.locate(g as Gen);
                let m = &self.basis[i];
                let mut t = GlMat::zero(self.n);
                for p in 0..self.n {
                    for q in 0..self.n {
                        t.entries[q * self.n + p] = m.get(p, q).neg();
                    }
                }
                self.from_gl(a, &t)
            })
            .collect();
        self.sys
            .try_normal_form(&e.map_letters(|g| images[g as usize].clone()))
    }

    /// Evaluates a commutative polynomial at pairwise commuting elements.
    /// Each monomial is one product away from a smaller cached monomial.
    pub fn eval_poly(&self, p: &Polynomial, vals: &[Elem]) -> Result<Elem> {
        let mut cache: FxHashMap<Monomial, Elem> = FxHashMap::default();
        cache.insert(Monomial::ONE, NCElement::one());
        let mut out = NCElement::zero();
        for (m, c) in p.terms() {
            let v = self.monomial_value(m, vals, &mut cache)?;
            out.add_scaled(&v, c);
        }
        Ok(out)
    }

    fn monomial_value(
        &self,
        m: &Monomial,
        vals: &[Elem],
        cache: &mut FxHashMap<Monomial, Elem>,
    ) -> Result<Elem> {
        if let Some(v) = cache.get(m) {
            return Ok(v.clone());
        }
        let i = (0..vals.len())
            .find(|&i| m.exp(i) > 0)
            .expect("non-constant monomial");
        let rest = m.div_var(i);
        let r = self.monomial_value(&rest, vals, cache)?;
        let v = self.sys.try_mul(&r, &vals[i])?;
        cache.insert(*m, v.clone());
        Ok(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CasimirKind {
    /// `e_{i2 i1} e_{i1 i2}`
    C2,
    /// `e_{i2 i1} e_{i3 i2} e_{i1 i3}`
    C3,
    /// `e_{i1 i2} e_{i2 i1}`
    C2Bar,
    /// `e_{i1 i2} e_{i2 i3} e_{i3 i1}`
    C3Bar,
}

/// Generators of the diagonal centraliser in U(sl(3))⊗U(sl(3)).
pub struct Z2Gens {
    pub k: [Elem; 3],
    pub l: [Elem; 3],
    pub x: Elem,
    pub y: Elem,
    pub z: Elem,
}

impl Z2Gens {
    /// `k1, k2, k3, l1, l2, l3` in that order.
    pub fn kl(&self) -> Vec<Elem> {
        self.k.iter().chain(&self.l).cloned().collect()
    }
}

pub fn sl3_squared() -> Result<EnvAlgebra> {
    EnvAlgebra::new(3, 2, Kind::Sl)
}

fn half(e: &Elem) -> Elem {
    e.scale(&Scalar::new(1, 2))
}

/// `½(C3 + C̄3)` on a single copy.
fn cubic(env: &EnvAlgebra, copy: usize) -> Result<Elem> {
    Ok(half(
        &env.casimir(copy, CasimirKind::C3)?
            .add(&env.casimir(copy, CasimirKind::C3Bar)?),
    ))
}

pub fn build_z2_generators(env: &EnvAlgebra) -> Result<Z2Gens> {
    if env.n != 3 || env.l != 2 || env.kind != Kind::Sl {
        return usage("the centraliser generators live in U(sl(3)) tensor U(sl(3))");
    }
    let s = |n, d| Scalar::new(n, d);
    let k1 = env.casimir(1, CasimirKind::C2)?;
    let k2 = env.casimir(2, CasimirKind::C2)?;
    let k3 = env.diagonal_map(&k1)?;
    let l1 = cubic(env, 1)?;
    let l2 = cubic(env, 2)?;
    let l3 = env.diagonal_map(&l1)?.neg();
    let t = |spec: &[usize]| env.polarised_trace(spec);
    let t112 = t(&[1, 1, 2])?;
    let t122 = t(&[1, 2, 2])?;
    let t12 = t(&[1, 2])?;
    let t11 = t(&[1, 1])?;
    let t22 = t(&[2, 2])?;
    let mut x = half(&t112.sub(&t122));
    x.add_scaled(&l1.sub(&l2), &s(1, 3));
    let mut y = (*t(&[1, 1, 2, 2])?).clone();
    y.add_scaled(&t112.add(&t122), &s(3, 2));
    y.add_scaled(&env.sys.try_mul(&t12, &t12)?, &s(-1, 12));
    y.add_scaled(&env.sys.try_mul(&t11, &t22)?, &s(-5, 12));
    y.add_scaled(&t12, &s(5, 2));
    let z = env.sys.try_commutator(&x, &y)?;
    Ok(Z2Gens {
        k: [k1, k2, k3],
        l: [l1, l2, l3],
        x,
        y,
        z,
    })
}

/// Sends a free-algebra element in `A, B, C` with coefficients in
/// C[k,l] to U(sl(3))⊗U(sl(3)) via `A ↦ X, B ↦ Y, C ↦ Z`.
pub fn realise(env: &EnvAlgebra, gens: &Z2Gens, e: &PElem) -> Result<Elem> {
    let kl = gens.kl();
    let letters = [&gens.x, &gens.y, &gens.z];
    let mut words: FxHashMap<Vec<Gen>, Elem> = FxHashMap::default();
    let mut out = NCElement::zero();
    let mut terms: Vec<_> = e.iter().collect();
    terms.sort_by(|a, b| a.0.cmp(b.0));
    for (w, c) in terms {
        let key = w.to_vec();
        if !words.contains_key(&key) {
            let mut acc = NCElement::one();
            for &g in w.iter() {
                acc = env.sys.try_mul(&acc, letters[g as usize])?;
            }
            words.insert(key.clone(), acc);
        }
        let coeff = env.eval_poly(c, &kl)?;
        out = out.add(&env.sys.try_mul(&coeff, &words[&key])?);
    }
    Ok(out)
}

/// `2T^(1,1,2,2,1,2)` written through lower polarised traces: returns the
/// difference of the two sides and the degree-6 part of the left side.
pub fn trace_reduction_residual(env: &EnvAlgebra, last: Scalar) -> Result<(Elem, Elem)> {
    let t = |spec: &[usize]| env.polarised_trace(spec);
    let sys = &env.sys;
    let (t11, t22, t12) = (t(&[1, 1])?, t(&[2, 2])?, t(&[1, 2])?);
    let (t111, t222) = (t(&[1, 1, 1])?, t(&[2, 2, 2])?);
    let (t112, t122) = (t(&[1, 1, 2])?, t(&[1, 2, 2])?);
    let t1122 = t(&[1, 1, 2, 2])?;
    let t6 = t(&[1, 1, 2, 2, 1, 2])?;
    let mut lhs = t6.scale(&Scalar::from_int(2));
    lhs = lhs.add(&sys.try_commutator(&t112, &t1122)?);
    lhs.add_scaled(&sys.try_mul(&t111, &t222)?, &Scalar::new(1, 3));
    lhs = lhs.sub(&sys.try_mul(&t112, &t122)?);
    lhs = lhs.sub(&sys.try_mul(&t1122, &t12)?);
    let mut rhs = sys.try_mul(&t11, &t122)?;
    rhs = rhs.sub(&sys.try_mul(&t22, &t112)?);
    rhs.add_scaled(&t1122, &Scalar::from_int(-6));
    rhs.add_scaled(&sys.try_mul(&t11, &t22)?, &Scalar::from_int(2));
    rhs.add_scaled(&t112.add(&t122), &Scalar::from_int(-12));
    rhs.add_scaled(&t12, &last);
    let top = lhs.component(6, sys.degrees());
    Ok((lhs.sub(&rhs), top))
}

pub fn verify_trace_reduction(env: &EnvAlgebra) -> Result<Report> {
    let (res, top) = trace_reduction_residual(env, Scalar::from_int(-16))?;
    Ok(Report::from_checks(
        "trace-reduction",
        vec![
            (
                "no degree-6 part".into(),
                expect_zero(top.is_zero(), || env.sys.to_text(&top)),
            ),
            (
                "identity".into(),
                expect_zero(res.is_zero(), || env.sys.to_text(&res)),
            ),
        ],
    ))
}

/// All index sequences over `{1..l}` of length `2..=max_d`.
pub fn trace_specs(l: usize, max_d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for d in 1..=max_d {
        layer = layer
            .iter()
            .flat_map(|s| {
                (1..=l).map(move |a| {
                    let mut t = s.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
        if d >= 2 {
            out.extend(layer.iter().cloned());
        }
    }
    out
}

/// Every polarised trace of degree 2..=4 and `T^(1,1,2,2,1,2)` commutes with
/// the diagonal image of each generator.
pub fn verify_centraliser(env: &EnvAlgebra) -> Result<Report> {
    let mut specs = trace_specs(env.l, 4);
    specs.push(vec![1, 1, 2, 2, 1, 2]);
    let mut checks = Vec::new();
    for spec in &specs {
        let label = format!(
            "T^({})",
            spec.iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let t = env.polarised_trace(spec)?;
        let r = env.centraliser_check(&label, &t)?;
        checks.push((label, r.witness.map_or(Ok(()), Err)));
    }
    let n = checks.len();
    Ok(Report::from_checks("centraliser", checks)
        .detail("traces", n)
        .detail("commutators", n * env.per_copy()))
}

/// The three defining relations of the specialised algebra, realised with
/// `X, Y, Z` and `k, l` as elements.
pub fn verify_phi_relations(env: &EnvAlgebra, gens: &Z2Gens) -> Result<Report> {
    let rels = cy::relations(cy::kl_params());
    let labels = ["[X,Y] = Z", "[X,Z] relation", "[Y,Z] relation"];
    let mut checks = Vec::new();
    for (label, r) in labels.iter().zip(&rels) {
        let res = realise(env, gens, r)?;
        checks.push((
            label.to_string(),
            expect_zero(res.is_zero(), || env.sys.to_text(&res)),
        ));
    }
    Ok(Report::from_checks("phi-relations", checks))
}

/// `Ω - a12(k,l)` realised symbolically.
pub fn omega_image_residual(env: &EnvAlgebra, gens: &Z2Gens) -> Result<Elem> {
    let p: &AgenParams = cy::kl_params();
    let om = cy::omega(p).sub(&NCElement::constant(cy::a12().clone()));
    realise(env, gens, &om)
}

/// Commutation of `k, l` with `X, Y, Z`, the action of `τ`, and degrees.
pub fn verify_generator_properties(env: &EnvAlgebra, gens: &Z2Gens) -> Result<Report> {
    let sys = &env.sys;
    let mut checks = Vec::new();
    let names = ["k1", "k2", "k3", "l1", "l2", "l3"];
    for (name, c) in names.iter().zip(gens.kl()) {
        for (xn, x) in [("X", &gens.x), ("Y", &gens.y), ("Z", &gens.z)] {
            let r = sys.try_commutator(&c, x)?;
            checks.push((
                format!("[{name},{xn}]"),
                expect_zero(r.is_zero(), || sys.to_text(&r)),
            ));
        }
    }
    let tx = env.tau(&gens.x)?.add(&gens.x);
    checks.push((
        "tau(X) = -X".into(),
        expect_zero(tx.is_zero(), || sys.to_text(&tx)),
    ));
    let ty = env.tau(&gens.y)?.sub(&gens.y);
    checks.push((
        "tau(Y) = Y".into(),
        expect_zero(ty.is_zero(), || sys.to_text(&ty)),
    ));
    let degs: Vec<Option<u32>> = gens
        .kl()
        .iter()
        .chain([&gens.x, &gens.y, &gens.z])
        .map(|e| sys.degree(e))
        .collect();
    let expected: Vec<Option<u32>> = [2, 2, 2, 3, 3, 3, 3, 4, 6]
        .iter()
        .map(|&d| Some(d))
        .collect();
    checks.push((
        "degrees".into(),
        expect_zero(degs == expected, || format!("{degs:?}")),
    ));
    Ok(Report::from_checks("centraliser-generators", checks))
}

/// The bigraded series of the centraliser at `t1 = t2 = t` against the
/// series of the presentation, to order 24.
pub fn series_consistency() -> Report {
    let order = 24;
    let a = crate::series::centraliser_bigraded(order).diagonal();
    let b = crate::series::presentation_series(order);
    let r = Report::from_checks(
        "series",
        vec![(
            "diagonal specialisation".into(),
            expect_zero(a == b, || format!("{:?} vs {:?}", a.coeffs, b.coeffs)),
        )],
    );
    r.detail(
        "coefficients",
        a.coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_roundtrip() {
        let b = basis_of(3, Kind::Sl);
        for (_, m) in &b {
            let c = coordinates(m, Kind::Sl, b.len());
            let mut back = GlMat::zero(3);
            for (i, k) in c.iter().enumerate() {
                back.add_scaled(&b[i].1, k);
            }
            assert_eq!(&back, m);
        }
    }

    #[test]
    fn trace_spec_count() {
        assert_eq!(trace_specs(2, 4).len(), 4 + 8 + 16);
    }
}
