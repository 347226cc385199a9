//! The Weyl group of type E6 acting on three pairs of sl(3) highest-weight
//! parameters, its fundamental invariants, and the specialisation of the
//! central parameters k, l in terms of those highest weights.
//!
//! Parameter vectors are ordered `(m1, m2, m1', m2', m1'', m2'')`. The
//! identification with roots is
//! `m1 = α1, m2 = α2, m1' = α5, m2' = α4, m1'' = Θ, m2'' = -α6`, with the
//! Dynkin chain 1-2-3-4-5 and node 6 attached to node 3.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::{FxHashMap, FxHashSet};
use serde_json::json;

use crate::cy::{a12, kl_params, Aut0Map};
use crate::error::{usage, Error, Result};
use crate::oracle::{casimir_values, Matrix};
use crate::poly::{Monomial, Polynomial, VarSet, MAX_VARS};
use crate::report::{expect_zero, Report};
use crate::scalar::Scalar;

pub const M_NAMES: [&str; 6] = ["m1", "m2", "m1'", "m2'", "m1''", "m2''"];

/// Edges of the Dynkin diagram, 1-based.
pub const E6_EDGES: [(usize, usize); 5] = [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)];

/// Simple-root coefficients of the highest root.
pub const THETA_COEFFS: [i64; 6] = [1, 2, 3, 2, 1, 2];

pub const WEYL_E6_ORDER: usize = 51840;

/// Default bound on group generation; anything larger means the generators
/// are wrong.
pub const GROUP_BOUND: usize = 200_000;

pub fn m_vars() -> Arc<VarSet> {
    static V: OnceLock<Arc<VarSet>> = OnceLock::new();
    V.get_or_init(|| VarSet::new(&M_NAMES).expect("valid names"))
        .clone()
}

/// Simple roots as linear forms in the parameters, scaled by 3.
///
/// Only α3 needs the factor: `α3 = (m1'' + 2m2'' - (m1 + 2m2) - (m1' + 2m2'))/3`.
pub fn simple_roots_scaled() -> [[i64; 6]; 6] {
    [
        [3, 0, 0, 0, 0, 0],
        [0, 3, 0, 0, 0, 0],
        [-1, -2, -1, -2, 1, 2],
        [0, 0, 0, 3, 0, 0],
        [0, 0, 3, 0, 0, 0],
        [0, 0, 0, 0, 0, -3],
    ]
}

pub fn cartan_matrix() -> [[i64; 6]; 6] {
    let mut c = [[0i64; 6]; 6];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in E6_EDGES {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    }
    c
}

fn adjacent(i: usize, j: usize) -> bool {
    E6_EDGES
        .iter()
        .any(|&(a, b)| (a, b) == (i + 1, j + 1) || (b, a) == (i + 1, j + 1))
}

/// A linear substitution of the six parameters, stored as three times its
/// matrix so that entries are integers. Row `i` is the image of coordinate
/// `i` as a linear form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WeylMatrix(pub [i64; 36]);

impl WeylMatrix {
    pub fn identity() -> Self {
        Self::scalar(1)
    }

    /// The central symmetry `r`: every parameter changes sign.
    pub fn central_symmetry() -> Self {
        Self::scalar(-1)
    }

    fn scalar(s: i64) -> Self {
        let mut e = [0; 36];
        for i in 0..6 {
            e[7 * i] = 3 * s;
        }
        WeylMatrix(e)
    }

    pub fn from_scaled_rows(rows: [[i64; 6]; 6]) -> Self {
        let mut e = [0; 36];
        for (i, r) in rows.iter().enumerate() {
            e[6 * i..6 * i + 6].copy_from_slice(r);
        }
        WeylMatrix(e)
    }

    /// Row `i`, scaled by 3.
    pub fn row(&self, i: usize) -> [i64; 6] {
        self.0[6 * i..6 * i + 6].try_into().unwrap()
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        Scalar::new(self.0[6 * i + j], 3)
    }

    /// Matrix product, or `None` if the result leaves the lattice `Z/3`.
    pub fn mul(&self, o: &Self) -> Option<Self> {
        let mut e = [0i64; 36];
        for i in 0..6 {
            for j in 0..6 {
                let s: i64 = (0..6).map(|k| self.0[6 * i + k] * o.0[6 * k + j]).sum();
                if s % 3 != 0 {
                    return None;
                }
                e[6 * i + j] = s / 3;
            }
        }
        Some(WeylMatrix(e))
    }

    pub fn apply(&self, v: &[Scalar; 6]) -> [Scalar; 6] {
        std::array::from_fn(|i| {
            (0..6).fold(Scalar::zero(), |acc, j| {
                acc.add(&self.entry(i, j).mul(&v[j]))
            })
        })
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zero(6, 6);
        for i in 0..6 {
            for j in 0..6 {
                m.set(i, j, self.entry(i, j));
            }
        }
        m
    }

    pub fn determinant(&self) -> Scalar {
        // Fraction-free elimination on the scaled matrix, then divide by 3^6.
        let mut a: Vec<Vec<i128>> = (0..6)
            .map(|i| self.row(i).map(|x| x as i128).to_vec())
            .collect();
        let mut prev = 1i128;
        let mut sign = 1i128;
        for k in 0..6 {
            let Some(p) = (k..6).find(|&r| a[r][k] != 0) else {
                return Scalar::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..6 {
                for j in k + 1..6 {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        let d = sign * a[5][5];
        Scalar::from_big(BigRational::new(BigInt::from(d), BigInt::from(729)))
    }

    /// The polynomial `p(M v)`.
    pub fn substitute(&self, p: &Polynomial) -> Polynomial {
        let images: Vec<Polynomial> = (0..6).map(|i| linear_form(&self.row(i))).collect();
        let mut all: Vec<Polynomial> = images;
        all.extend((6..MAX_VARS).map(Polynomial::var));
        p.compose(&all)
    }
}

/// The linear polynomial with coefficients `row / 3`.
pub fn linear_form(row: &[i64; 6]) -> Polynomial {
    Polynomial::from_terms(
        row.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (Monomial::var(j), Scalar::new(c, 3))),
    )
}

/// The six simple reflections `s1..s6` as parameter substitutions.
pub fn simple_reflections() -> [WeylMatrix; 6] {
    let alpha3 = simple_roots_scaled()[2];
    let unit = |i: usize| -> [i64; 6] {
        let mut r = [0; 6];
        r[i] = 3;
        r
    };
    let add = |a: [i64; 6], b: [i64; 6]| -> [i64; 6] { std::array::from_fn(|k| a[k] + b[k]) };
    let neg = |a: [i64; 6]| -> [i64; 6] { a.map(|x| -x) };
    let with = |changes: &[(usize, [i64; 6])]| {
        let mut rows: [[i64; 6]; 6] = std::array::from_fn(unit);
        for &(i, r) in changes {
            rows[i] = r;
        }
        WeylMatrix::from_scaled_rows(rows)
    };
    [
        with(&[(0, neg(unit(0))), (1, add(unit(0), unit(1)))]),
        with(&[(0, add(unit(0), unit(1))), (1, neg(unit(1)))]),
        with(&[
            (1, add(unit(1), alpha3)),
            (3, add(unit(3), alpha3)),
            (5, add(unit(5), neg(alpha3))),
        ]),
        with(&[(2, add(unit(2), unit(3))), (3, neg(unit(3)))]),
        with(&[(2, neg(unit(2))), (3, add(unit(2), unit(3)))]),
        with(&[(4, add(unit(4), unit(5))), (5, neg(unit(5)))]),
    ]
}

/// The parameter substitution realising one of the twelve k,l maps.
///
/// Since `l3` is minus the value on `(m1'', m2'')`, the pairs that are
/// permuted are `(m1, m2)`, `(m1', m2')` and `(m2'', m1'')`.
pub fn aut0_parameter_map(a: &Aut0Map) -> WeylMatrix {
    let mut t = WeylMatrix::identity().0;
    t[6 * 4 + 4] = 0;
    t[6 * 5 + 5] = 0;
    t[6 * 4 + 5] = 3;
    t[6 * 5 + 4] = 3;
    let t = WeylMatrix(t);
    t.mul(&pair_map(a.perm, a.tau)).unwrap().mul(&t).unwrap()
}

/// Permutation of the three parameter pairs, optionally composed with the
/// swap `m_1 <-> m_2` inside every pair. `perm[k]` is the pair that pair `k`
/// is sent to.
pub fn pair_map(perm: [usize; 3], tau: bool) -> WeylMatrix {
    let mut rows = [[0i64; 6]; 6];
    for (k, &t) in perm.iter().enumerate() {
        for s in 0..2 {
            let target = if tau { 1 - s } else { s };
            rows[2 * k + s][2 * t + target] = 3;
        }
    }
    WeylMatrix::from_scaled_rows(rows)
}

/// Breadth-first closure of `gens` under right multiplication.
pub fn generate_group(gens: &[WeylMatrix], bound: usize) -> Result<Vec<WeylMatrix>> {
    let id = WeylMatrix::identity();
    let mut seen: FxHashSet<WeylMatrix> = FxHashSet::default();
    seen.insert(id);
    let mut elements = vec![id];
    let mut layer = vec![id];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for g in &layer {
            for s in gens {
                let h = g
                    .mul(s)
                    .ok_or_else(|| Error::Usage("generators do not preserve the lattice".into()))?;
                if seen.insert(h) {
                    if seen.len() > bound {
                        return Err(Error::GroupTooLarge(bound));
                    }
                    next.push(h);
                }
            }
        }
        elements.extend_from_slice(&next);
        layer = next;
    }
    Ok(elements)
}

/// The Weyl group of E6 in the parameter representation.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub elements: Vec<WeylMatrix>,
}

const CACHE_HEADER: &str = "e6-weyl-group v1";

impl WeylGroup {
    pub fn generate() -> Result<Self> {
        let elements = generate_group(&simple_reflections(), GROUP_BOUND)?;
        Ok(WeylGroup { elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &WeylMatrix) -> bool {
        self.set().contains(g)
    }

    fn set(&self) -> FxHashSet<WeylMatrix> {
        self.elements.iter().copied().collect()
    }

    /// Text form: a header, the order, then one element per line as 36
    /// exact rationals.
    pub fn to_text(&self) -> String {
        let mut s = format!("{CACHE_HEADER}\norder {}\n", self.order());
        for g in &self.elements {
            let entries: Vec<String> = (0..36).map(|k| g.entry(k / 6, k % 6).to_string()).collect();
            writeln!(s, "{}", entries.join(" ")).unwrap();
        }
        s
    }

    /// Parses the cache text and checks that it is closed under the simple
    /// reflections, so a corrupted file is rejected rather than trusted.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next() != Some(CACHE_HEADER) {
            return usage("unknown group cache format");
        }
        let order: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("order "))
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| Error::Usage("group cache: missing order".into()))?;
        let mut elements = Vec::with_capacity(order);
        for line in lines {
            let mut e = [0i64; 36];
            let mut count = 0;
            for (k, tok) in line.split_whitespace().enumerate() {
                if k >= 36 {
                    return usage("group cache: too many entries");
                }
                let v: Scalar = tok.parse()?;
                let scaled = v.mul(&Scalar::from_int(3));
                e[k] = scaled
                    .to_i64()
                    .filter(|_| scaled.is_integer())
                    .ok_or_else(|| Error::Usage("group cache: entry outside Z/3".into()))?;
                count += 1;
            }
            if count != 36 {
                return usage("group cache: short row");
            }
            elements.push(WeylMatrix(e));
        }
        let g = WeylGroup { elements };
        let set = g.set();
        if g.order() != order || set.len() != order || !set.contains(&WeylMatrix::identity()) {
            return usage("group cache: wrong element count");
        }
        for h in &g.elements {
            for s in simple_reflections() {
                if !h.mul(&s).is_some_and(|x| set.contains(&x)) {
                    return usage("group cache: not closed under the simple reflections");
                }
            }
        }
        Ok(g)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_text(&std::fs::read_to_string(path)?)
    }
}

static GROUP: OnceLock<WeylGroup> = OnceLock::new();

/// The cached group, generated on first use.
pub fn e6_group() -> &'static WeylGroup {
    GROUP.get_or_init(|| WeylGroup::generate().expect("simple reflections generate W(E6)"))
}

/// Fills the group cache from `dir` if a valid cache file is there,
/// otherwise generates the group and writes the file.
pub fn init_group_cache(dir: &Path) -> Result<&'static WeylGroup> {
    let path = dir.join("weyl-e6.txt");
    if GROUP.get().is_none() {
        let g = match WeylGroup::load(&path) {
            Ok(g) => g,
            Err(_) => {
                let g = WeylGroup::generate()?;
                std::fs::create_dir_all(dir)?;
                g.save(&path)?;
                g
            }
        };
        let _ = GROUP.set(g);
    }
    Ok(e6_group())
}

/// Checks the α3/Θ identity, that the substitution matrices are the root
/// reflections `x -> x - <x, α_j> α_j`, and the Dynkin relations.
pub fn verify_root_identification() -> Report {
    let roots = simple_roots_scaled();
    let cartan = cartan_matrix();
    let mut checks: Vec<(String, std::result::Result<(), String>)> = Vec::new();

    let theta: Vec<i64> = (0..6)
        .map(|k| (0..6).map(|i| THETA_COEFFS[i] * roots[i][k]).sum())
        .collect();
    checks.push((
        "theta = m1''".into(),
        expect_zero(theta == [0, 0, 0, 0, 3, 0], || {
            format!("theta = {theta:?}/3")
        }),
    ));
    // Θ - 2α6 - (α1 + 2α2) - (α5 + 2α4) = 3α3
    let lhs: Vec<i64> = (0..6)
        .map(|k| {
            theta[k]
                - 2 * roots[5][k]
                - roots[0][k]
                - 2 * roots[1][k]
                - roots[4][k]
                - 2 * roots[3][k]
        })
        .collect();
    let rhs: Vec<i64> = roots[2].iter().map(|x| 3 * x).collect();
    checks.push((
        "alpha3 formula".into(),
        expect_zero(lhs == rhs, || format!("{lhs:?} vs {rhs:?}")),
    ));

    // Rows of `basis` are the parameters in simple-root coordinates.
    let mut basis = Matrix::zero(6, 6);
    let unit_root =
        |m: &mut Matrix, row: usize, root: usize, c: i64| m.set(row, root, Scalar::from_int(c));
    unit_root(&mut basis, 0, 0, 1);
    unit_root(&mut basis, 1, 1, 1);
    unit_root(&mut basis, 2, 4, 1);
    unit_root(&mut basis, 3, 3, 1);
    for (i, &c) in THETA_COEFFS.iter().enumerate() {
        unit_root(&mut basis, 4, i, c);
    }
    unit_root(&mut basis, 5, 5, -1);
    let mut c = Matrix::zero(6, 6);
    for i in 0..6 {
        for j in 0..6 {
            c.set(i, j, Scalar::from_int(cartan[i][j]));
        }
    }

    // Three mutually orthogonal A2 subsystems.
    let gram = basis.mul(&c).mul(&basis.transpose());
    let mut a2 = Matrix::zero(6, 6);
    for p in 0..3 {
        a2.set(2 * p, 2 * p, Scalar::from_int(2));
        a2.set(2 * p + 1, 2 * p + 1, Scalar::from_int(2));
        a2.set(2 * p, 2 * p + 1, Scalar::from_int(-1));
        a2.set(2 * p + 1, 2 * p, Scalar::from_int(-1));
    }
    checks.push((
        "orthogonal A2 pairs".into(),
        expect_zero(gram == a2, || gram.to_text()),
    ));

    // Θ is the highest root: norm 2 and dominant.
    let theta_pairings: Vec<i64> = (0..6)
        .map(|j| (0..6).map(|i| THETA_COEFFS[i] * cartan[i][j]).sum())
        .collect();
    checks.push((
        "theta dominant of norm 2".into(),
        expect_zero(
            theta_pairings.iter().all(|&x| x >= 0)
                && (0..6)
                    .map(|i| THETA_COEFFS[i] * theta_pairings[i])
                    .sum::<i64>()
                    == 2,
            || format!("pairings {theta_pairings:?}"),
        ),
    ));

    let refl = simple_reflections();
    for (j, s) in refl.iter().enumerate() {
        let mut r = Matrix::identity(6);
        for k in 0..6 {
            r.set(k, j, r.get(k, j).sub(&Scalar::from_int(cartan[k][j])));
        }
        let lhs = s.to_matrix().mul(&basis);
        let rhs = basis.mul(&r);
        checks.push((
            format!("s{} is the root reflection", j + 1),
            expect_zero(lhs == rhs, || lhs.sub(&rhs).to_text()),
        ));
    }
    for i in 0..6 {
        for j in i..6 {
            let want = if i == j {
                1
            } else if adjacent(i, j) {
                3
            } else {
                2
            };
            let got = order_of(&refl[i].mul(&refl[j]).unwrap());
            checks.push((
                format!("order(s{}s{}) = {want}", i + 1, j + 1),
                expect_zero(got == Some(want), || format!("order {got:?}")),
            ));
        }
    }
    Report::from_checks("e6-roots", checks)
}

fn order_of(g: &WeylMatrix) -> Option<usize> {
    let id = WeylMatrix::identity();
    let mut h = *g;
    for k in 1..=12 {
        if h == id {
            return Some(k);
        }
        h = h.mul(g)?;
    }
    None
}

/// Group orders, determinants, and where the pair permutations land.
pub fn verify_group() -> Result<Report> {
    let w = e6_group();
    let refl = simple_reflections();
    let mut ext_gens = refl.to_vec();
    ext_gens.push(WeylMatrix::central_symmetry());
    let extended = generate_group(&ext_gens, GROUP_BOUND)?;
    let a2 = generate_group(&refl[..2], GROUP_BOUND)?;
    let set = w.set();
    let one = Scalar::one();
    let dets_ok = extended.iter().all(|g| g.determinant().abs() == one);
    let r = WeylMatrix::central_symmetry();

    let mut checks = vec![
        (
            "order 51840".to_string(),
            expect_zero(w.order() == WEYL_E6_ORDER, || {
                format!("order {}", w.order())
            }),
        ),
        (
            "extended order 103680".to_string(),
            expect_zero(extended.len() == 2 * WEYL_E6_ORDER, || {
                format!("order {}", extended.len())
            }),
        ),
        (
            "<s1,s2> order 6".to_string(),
            expect_zero(a2.len() == 6, || format!("order {}", a2.len())),
        ),
        (
            "determinants +-1".to_string(),
            expect_zero(dets_ok, || "determinant not +-1".into()),
        ),
        (
            "r not in W".to_string(),
            expect_zero(!set.contains(&r), || "r in W".into()),
        ),
    ];
    // The maps of Aut0 that fix X lie in W, the other six in rW.
    let images = specialise_kl_symbolic();
    for a in Aut0Map::all() {
        let g = aut0_parameter_map(&a);
        let in_w = a.a_sign() == 1;
        let ok = if in_w {
            set.contains(&g)
        } else {
            !set.contains(&g) && set.contains(&g.mul(&r).unwrap())
        };
        let label = format!("{} in {}", a.name(), if in_w { "W" } else { "rW" });
        checks.push((label, expect_zero(ok, || "membership differs".into())));
        let compatible = (0..6)
            .all(|i| g.substitute(&images[i]) == a.on_kl(&Polynomial::var(i)).compose(&images));
        checks.push((
            format!("{} matches the k,l action", a.name()),
            expect_zero(compatible, || "specialisation does not intertwine".into()),
        ));
    }
    Ok(Report::from_checks("e6-group", checks)
        .detail("order", w.order())
        .detail("extended_order", extended.len()))
}

const MAX_AVG_DEGREE: usize = 12;

/// Dense index of the monomials of each degree in six variables.
struct DenseSpace {
    mons: Vec<Vec<[u8; 6]>>,
    /// `up[d][j][v]`: index of `mons[d][j] * x_v` in degree `d + 1`.
    up: Vec<Vec<[usize; 6]>>,
}

fn dense_space() -> &'static DenseSpace {
    static D: OnceLock<DenseSpace> = OnceLock::new();
    D.get_or_init(|| {
        let mut mons: Vec<Vec<[u8; 6]>> = vec![vec![[0; 6]]];
        let mut index: Vec<FxHashMap<[u8; 6], usize>> = vec![[([0; 6], 0)].into_iter().collect()];
        let mut up = Vec::new();
        for d in 0..MAX_AVG_DEGREE {
            let mut next: Vec<[u8; 6]> = Vec::new();
            let mut next_index: FxHashMap<[u8; 6], usize> = FxHashMap::default();
            let mut links = Vec::with_capacity(mons[d].len());
            for m in &mons[d] {
                let mut link = [0usize; 6];
                for (v, l) in link.iter_mut().enumerate() {
                    let mut e = *m;
                    e[v] += 1;
                    *l = *next_index.entry(e).or_insert_with(|| {
                        next.push(e);
                        next.len() - 1
                    });
                }
                links.push(link);
            }
            up.push(links);
            mons.push(next);
            index.push(next_index);
        }
        DenseSpace { mons, up }
    })
}

/// The orbit sum `Σ_{g ∈ W} g·x^e` of one monomial, with equal images
/// merged. Each term is a product of (linear form, power) pairs, the forms
/// scaled by 3, with an integer multiplicity.
pub struct OrbitSum {
    exps: [u8; 6],
    degree: u32,
    group_order: usize,
    terms: Vec<(Vec<([i64; 6], u8)>, i128)>,
}

impl OrbitSum {
    pub fn new(group: &WeylGroup, exps: [u8; 6]) -> Self {
        let mut acc: FxHashMap<Vec<([i64; 6], u8)>, i128> = FxHashMap::default();
        for g in &group.elements {
            let mut sign = 1i128;
            let mut key: Vec<([i64; 6], u8)> = Vec::with_capacity(6);
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let mut row = g.row(i);
                // Normalise the sign so that the first non-zero entry is positive.
                if row.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                    row = row.map(|x| -x);
                    if e % 2 == 1 {
                        sign = -sign;
                    }
                }
                key.push((row, e));
            }
            key.sort_unstable_by(|a, b| (a.1, a.0).cmp(&(b.1, b.0)));
            *acc.entry(key).or_insert(0) += sign;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_unstable();
        OrbitSum {
            exps,
            degree: exps.iter().map(|&e| e as u32).sum(),
            group_order: group.order(),
            terms,
        }
    }

    pub fn distinct_images(&self) -> usize {
        self.terms.len()
    }

    fn denominator(&self) -> BigInt {
        BigInt::from(self.group_order) * BigInt::from(3).pow(self.degree)
    }

    /// The average `⟨x^e⟩` as a polynomial.
    pub fn polynomial(&self) -> Result<Polynomial> {
        let d = self.degree as usize;
        if d > MAX_AVG_DEGREE {
            return usage(format!("averaging supports degree <= {MAX_AVG_DEGREE}"));
        }
        // Every coefficient of a product is bounded by the product of the
        // row 1-norms; make sure the i128 sums cannot overflow.
        let bound: f64 = self
            .terms
            .iter()
            .map(|(k, c)| {
                let prod: f64 = k
                    .iter()
                    .map(|(r, e)| (r.iter().map(|x| x.abs()).sum::<i64>() as f64).powi(*e as i32))
                    .product();
                prod * (*c as f64).abs()
            })
            .sum();
        if bound > 1e36 {
            return Err(Error::Budget(
                "orbit sum exceeds 128-bit accumulation".into(),
            ));
        }
        let space = dense_space();
        let mut total = vec![0i128; space.mons[d].len()];
        for (key, count) in &self.terms {
            let mut cur = vec![1i128];
            let mut deg = 0;
            for (row, e) in key {
                for _ in 0..*e {
                    let mut next = vec![0i128; space.mons[deg + 1].len()];
                    for (j, &c) in cur.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        let link = &space.up[deg][j];
                        for v in 0..6 {
                            if row[v] != 0 {
                                next[link[v]] += c * row[v] as i128;
                            }
                        }
                    }
                    cur = next;
                    deg += 1;
                }
            }
            for (t, c) in total.iter_mut().zip(&cur) {
                *t += count * c;
            }
        }
        let den = self.denominator();
        Ok(Polynomial::from_terms(
            total
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(j, &c)| {
                    let mut e = [0u8; MAX_VARS];
                    e[..6].copy_from_slice(&space.mons[d][j]);
                    (
                        Monomial(e),
                        Scalar::from_big(BigRational::new(BigInt::from(c), den.clone())),
                    )
                }),
        ))
    }

    /// The average evaluated at an integer point, straight from the orbit.
    pub fn value_at(&self, point: &[i64; 6]) -> Result<Scalar> {
        let overflow = || Error::Budget("orbit sum evaluation overflow".into());
        let mut total = 0i128;
        for (key, count) in &self.terms {
            let mut t = *count;
            for (row, e) in key {
                let lin: i128 = row
                    .iter()
                    .zip(point)
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum();
                for _ in 0..*e {
                    t = t.checked_mul(lin).ok_or_else(overflow)?;
                }
            }
            total = total.checked_add(t).ok_or_else(overflow)?;
        }
        Ok(Scalar::from_big(BigRational::new(
            BigInt::from(total),
            self.denominator(),
        )))
    }

    pub fn exponents(&self) -> [u8; 6] {
        self.exps
    }
}

/// `⟨p⟩`, the average of `p` over the group.
pub fn average(group: &WeylGroup, p: &Polynomial) -> Result<Polynomial> {
    let mut acc = Polynomial::zero();
    for (m, c) in p.terms() {
        if m.0[6..].iter().any(|&e| e != 0) {
            return usage("average expects a polynomial in the six parameters");
        }
        let exps: [u8; 6] = m.0[..6].try_into().unwrap();
        acc = acc.add(&OrbitSum::new(group, exps).polynomial()?.scale(c));
    }
    Ok(acc)
}

pub const INVARIANT_NAMES: [&str; 6] = ["p2", "p5", "p6", "p8", "p9", "p12"];
pub const INVARIANT_DEGREES: [u32; 6] = [2, 5, 6, 8, 9, 12];

/// `p_i = prefactor * ⟨monomial⟩`.
pub fn invariant_definitions() -> [(Scalar, [u8; 6]); 6] {
    [
        (Scalar::new(3, 2), [2, 0, 0, 0, 0, 0]),
        (Scalar::new(8, 3), [0, 0, 2, 1, 1, 1]),
        (Scalar::from_int(10), [1, 1, 1, 1, 1, 1]),
        (Scalar::new(5, 3), [2, 1, 2, 1, 1, 1]),
        (Scalar::new(40, 27), [2, 2, 2, 1, 1, 1]),
        (Scalar::new(20, 3), [2, 2, 2, 2, 2, 2]),
    ]
}

fn orbit_sums() -> &'static [OrbitSum] {
    static S: OnceLock<Vec<OrbitSum>> = OnceLock::new();
    S.get_or_init(|| {
        invariant_definitions()
            .iter()
            .map(|(_, e)| OrbitSum::new(e6_group(), *e))
            .collect()
    })
}

/// p2, p5, p6, p8, p9, p12 as polynomials in the six parameters.
pub fn fundamental_invariants() -> &'static [Polynomial] {
    static P: OnceLock<Vec<Polynomial>> = OnceLock::new();
    P.get_or_init(|| {
        invariant_definitions()
            .iter()
            .zip(orbit_sums())
            .map(|((c, _), s)| s.polynomial().expect("degree <= 12").scale(c))
            .collect()
    })
}

/// The invariants at an integer point, computed from the orbit directly
/// rather than from the polynomials.
pub fn invariants_at(point: &[i64; 6]) -> Result<Vec<Scalar>> {
    invariant_definitions()
        .iter()
        .zip(orbit_sums())
        .map(|((c, _), s)| Ok(s.value_at(point)?.mul(c)))
        .collect()
}

/// Each p_i is homogeneous of its degree and fixed by every simple
/// reflection.
pub fn verify_invariants() -> Report {
    let ps = fundamental_invariants();
    let refl = simple_reflections();
    let mut checks = Vec::new();
    for (k, p) in ps.iter().enumerate() {
        let name = INVARIANT_NAMES[k];
        checks.push((
            format!("{name} homogeneous of degree {}", INVARIANT_DEGREES[k]),
            expect_zero(
                !p.is_zero() && p.is_homogeneous() && p.degree() == Some(INVARIANT_DEGREES[k]),
                || format!("degree {:?}", p.degree()),
            ),
        ));
        for (j, s) in refl.iter().enumerate() {
            let diff = s.substitute(p).sub(p);
            checks.push((
                format!("{name} fixed by s{}", j + 1),
                expect_zero(diff.is_zero(), || diff.to_text(&m_vars())),
            ));
        }
    }
    let mut r = Report::from_checks("e6-invariants", checks);
    for (k, p) in ps.iter().enumerate() {
        r = r.detail(&format!("{}_terms", INVARIANT_NAMES[k]), p.len());
    }
    r
}

fn c2_poly(a: usize, b: usize) -> Polynomial {
    let (x, y) = (Polynomial::var(a), Polynomial::var(b));
    x.mul(&x)
        .add(&y.mul(&y))
        .add(&x.mul(&y))
        .scale(&Scalar::new(2, 3))
        .sub(&Polynomial::int(2))
}

fn c3_poly(a: usize, b: usize) -> Polynomial {
    let (x, y) = (Polynomial::var(a), Polynomial::var(b));
    let lin = |cx: i64, cy: i64, c: i64| {
        x.scale(&Scalar::from_int(cx))
            .add(&y.scale(&Scalar::from_int(cy)))
            .add(&Polynomial::int(c))
    };
    lin(1, 2, -3)
        .mul(&lin(2, 1, 3))
        .mul(&lin(1, -1, -3))
        .scale(&Scalar::new(1, 9))
}

/// The specialisation `k_i, l_i -> polynomials in m`, in the order
/// k1, k2, k3, l1, l2, l3.
pub fn specialise_kl_symbolic() -> [Polynomial; 6] {
    let three_halves = Scalar::new(3, 2);
    let l =
        |p: usize| c3_poly(2 * p, 2 * p + 1).add(&c2_poly(2 * p, 2 * p + 1).scale(&three_halves));
    [
        c2_poly(0, 1),
        c2_poly(2, 3),
        c2_poly(4, 5),
        l(0),
        l(1),
        l(2).neg(),
    ]
}

/// The same specialisation at a point, through the Casimir values.
pub fn specialise_kl(m: &[Scalar; 6]) -> [Scalar; 6] {
    let three_halves = Scalar::new(3, 2);
    let cas: Vec<(Scalar, Scalar)> = (0..3)
        .map(|p| casimir_values(&m[2 * p], &m[2 * p + 1]))
        .collect();
    let l = |p: usize| cas[p].1.add(&cas[p].0.mul(&three_halves));
    [
        cas[0].0.clone(),
        cas[1].0.clone(),
        cas[2].0.clone(),
        l(0),
        l(1),
        l(2).neg(),
    ]
}

pub const SPECIALISED_NAMES: [&str; 6] = ["a2", "a5", "a6", "a8", "a9", "a12"];

fn kl_coefficient(name: &str) -> &'static Polynomial {
    if name == "a12" {
        a12()
    } else {
        kl_params().get(name)
    }
}

/// a2, a5, a6, a8, a9, a12 as polynomials in the six parameters.
pub fn specialised_coefficients() -> &'static [Polynomial] {
    static S: OnceLock<Vec<Polynomial>> = OnceLock::new();
    S.get_or_init(|| {
        let images = specialise_kl_symbolic();
        SPECIALISED_NAMES
            .iter()
            .map(|n| kl_coefficient(n).compose(&images))
            .collect()
    })
}

/// The claimed expressions of the specialised coefficients in the
/// fundamental invariants.
pub const INVARIANT_FORMULAS: [&str; 6] = [
    "p2 - 3",
    "-p5",
    "p6 + p2^3/9 + 2*p2^2/3 - 3*p2/2 + 1",
    "-p8 + p2^4/54 + p2*p6/12 + p2^3/18 + p6/2 + p2^2/6 - p2/4 + 1/8",
    "-p9 - p5*(p2^2/27 + p2/3 - 1/4)",
    "-p12 + 35*p6^2/12 + p2^6/36 + 17*p2^3*p6/72 - p2^2*p8/18 - 7*p2*p5^2/18 + p2^5/162 \
     - p2*p8/3 + p2^2*p6/36 - p5^2/4 - 13*p2^4/108 + 13*p8/2 - 13*p2*p6/24 - 19*p2^3/54 \
     - 3*p6 - 11*p2^2/12 + 11*p2/8 - 11/16",
];

pub fn invariant_vars() -> Arc<VarSet> {
    VarSet::new(&INVARIANT_NAMES).expect("valid names")
}

pub fn invariant_formulas() -> Vec<Polynomial> {
    let v = invariant_vars();
    INVARIANT_FORMULAS
        .iter()
        .map(|f| v.parse(f).expect("formula parses"))
        .collect()
}

pub const SCREEN_POINTS: usize = 50;
/// Integer coordinates for the random screen are drawn from this range,
/// small enough that orbit sums of degree 12 fit in 128 bits.
pub const SCREEN_RANGE: i64 = 20;

/// The identities `a_i = f_i(p2, ..., p12)`: first at seeded random integer
/// points, with the invariants evaluated from the orbit, then as polynomial
/// identities.
pub fn verify_theorem(seed: u64, symbolic: bool) -> Result<Report> {
    let formulas = invariant_formulas();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SCREEN_POINTS {
        let point: [i64; 6] = std::array::from_fn(|_| rng.gen_range(-SCREEN_RANGE..=SCREEN_RANGE));
        let m = point.map(Scalar::from_int);
        let kl = specialise_kl(&m);
        let ps = invariants_at(&point)?;
        for (k, name) in SPECIALISED_NAMES.iter().enumerate() {
            let lhs = kl_coefficient(name).eval(&kl);
            let rhs = formulas[k].eval(&ps);
            if lhs != rhs {
                return Ok(Report::fail(
                    "e6-theorem",
                    format!("{name} at m = {point:?}: {lhs} vs {rhs}"),
                )
                .with_seed(seed));
            }
        }
    }
    if !symbolic {
        return Ok(Report::pass("e6-theorem")
            .with_seed(seed)
            .detail("screen_points", SCREEN_POINTS)
            .with_note("symbolic identities not run"));
    }
    let ps = fundamental_invariants();
    let lhs = specialised_coefficients();
    let vars = m_vars();
    let mut checks = Vec::new();
    for (k, name) in SPECIALISED_NAMES.iter().enumerate() {
        let diff = lhs[k].sub(&formulas[k].compose(ps));
        checks.push((
            name.to_string(),
            expect_zero(diff.is_zero(), || diff.to_text(&vars)),
        ));
    }
    Ok(Report::from_checks("e6-theorem", checks)
        .with_seed(seed)
        .detail("screen_points", SCREEN_POINTS)
        .detail("a12_terms", json!(lhs[5].len())))
}

/// Every specialised coefficient is fixed by each simple reflection, and
/// the central symmetry multiplies `a_i` by `(-1)^i`.
pub fn verify_invariance_direct() -> Report {
    let coeffs = specialised_coefficients();
    let vars = m_vars();
    let mut checks = Vec::new();
    let r = WeylMatrix::central_symmetry();
    for (k, a) in coeffs.iter().enumerate() {
        let name = SPECIALISED_NAMES[k];
        for (j, s) in simple_reflections().iter().enumerate() {
            let diff = s.substitute(a).sub(a);
            checks.push((
                format!("{name} fixed by s{}", j + 1),
                expect_zero(diff.is_zero(), || diff.to_text(&vars)),
            ));
        }
        let odd = name[1..].parse::<u32>().unwrap() % 2 == 1;
        let expected = if odd { a.neg() } else { a.clone() };
        let diff = r.substitute(a).sub(&expected);
        checks.push((
            format!("{name} under r is {}", if odd { "odd" } else { "even" }),
            expect_zero(diff.is_zero(), || diff.to_text(&vars)),
        ));
    }
    Report::from_checks("e6-invariance", checks)
}
