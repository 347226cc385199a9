//! The three-generator Calabi-Yau algebra family: generic relations, the
//! potential and its cyclic derivatives, the degree-12 Casimir, and the
//! specialisation over C[k1,k2,k3,l1,l2,l3].

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::error::Result;
use crate::poly::{Polynomial, VarSet};
use crate::report::{expect_zero, Report};
use crate::rewrite::{Gen, NCElement, RewriteSystem, SystemBuilder, Word};
use crate::scalar::Scalar;
use crate::series::{presentation_series, Series};

pub type PElem = NCElement<Polynomial>;

pub const A: Gen = 0;
pub const B: Gen = 1;
pub const C: Gen = 2;
pub const GEN_DEGREES: [u32; 3] = [3, 4, 6];

/// Names of the ten central parameters, in order.
pub const PARAM_NAMES: [&str; 10] = ["a0", "a0'", "a1", "a2", "a3", "a4", "a5", "a6", "a8", "a9"];
/// Filtration degrees of the parameters.
pub const PARAM_DEGREES: [u32; 10] = [0, 0, 1, 2, 3, 4, 5, 6, 8, 9];

pub const KL_NAMES: [&str; 6] = ["k1", "k2", "k3", "l1", "l2", "l3"];
pub const KL_DEGREES: [u32; 6] = [2, 2, 2, 3, 3, 3];

pub fn agen_vars() -> Arc<VarSet> {
    static V: OnceLock<Arc<VarSet>> = OnceLock::new();
    V.get_or_init(|| VarSet::new(&PARAM_NAMES).unwrap()).clone()
}

pub fn kl_vars() -> Arc<VarSet> {
    static V: OnceLock<Arc<VarSet>> = OnceLock::new();
    V.get_or_init(|| VarSet::new(&KL_NAMES).unwrap()).clone()
}

/// Values of `a0, a0', a1, a2, a3, a4, a5, a6, a8, a9` in some polynomial ring.
#[derive(Clone, Debug, PartialEq)]
pub struct AgenParams {
    pub values: [Polynomial; 10],
    pub vars: Arc<VarSet>,
}

impl AgenParams {
    /// Every parameter is its own indeterminate.
    pub fn symbolic() -> Self {
        AgenParams {
            values: std::array::from_fn(Polynomial::var),
            vars: agen_vars(),
        }
    }

    pub fn zero(vars: Arc<VarSet>) -> Self {
        AgenParams {
            values: std::array::from_fn(|_| Polynomial::zero()),
            vars,
        }
    }

    pub fn get(&self, name: &str) -> &Polynomial {
        let i = PARAM_NAMES
            .iter()
            .position(|n| *n == name)
            .unwrap_or_else(|| panic!("unknown parameter `{name}`"));
        &self.values[i]
    }

    pub fn set(&mut self, name: &str, v: Polynomial) {
        let i = PARAM_NAMES.iter().position(|n| *n == name).unwrap();
        self.values[i] = v;
    }

    /// Evaluates a polynomial in the generic parameters at these values.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        p.compose(&self.values)
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        AgenParams {
            values: std::array::from_fn(|i| f(&self.values[i])),
            vars: self.vars.clone(),
        }
    }
}

fn w(letters: &[Gen]) -> PElem {
    NCElement::word(letters)
}

fn sc(n: i64, d: i64) -> Polynomial {
    Polynomial::constant(Scalar::new(n, d))
}

/// Right-hand sides of `[A,C] = ...` and `[B,C] = ...` in the free algebra.
pub fn relation_rhs(p: &AgenParams) -> (PElem, PElem) {
    let g = |n| p.get(n);
    let ab = w(&[A, B]).add(&w(&[B, A]));
    let mut rac = w(&[B, B]).scale(g("a0"));
    rac.add_scaled(&ab, g("a1"));
    rac.add_scaled(&w(&[A, A]), g("a2"));
    rac.add_scaled(&w(&[B]), g("a4"));
    rac.add_scaled(&w(&[A]), g("a5"));
    rac.add_scaled(&NCElement::one(), g("a8"));
    let mut rbc = w(&[A, A, A]).scale(g("a0'"));
    rbc.add_scaled(&w(&[B, B]), &g("a1").neg());
    rbc.add_scaled(&ab, &g("a2").neg());
    rbc.add_scaled(&w(&[A, A]), g("a3"));
    rbc.add_scaled(&w(&[B]), &g("a5").neg());
    rbc.add_scaled(&w(&[A]), g("a6"));
    rbc.add_scaled(&NCElement::one(), g("a9"));
    (rac, rbc)
}

/// Residuals `[A,B]-C`, `[A,C]-rhs`, `[B,C]-rhs` in the free algebra.
pub fn relations(p: &AgenParams) -> [PElem; 3] {
    let (rac, rbc) = relation_rhs(p);
    let comm = |x: Gen, y: Gen| w(&[x, y]).sub(&w(&[y, x]));
    [
        comm(A, B).sub(&w(&[C])),
        comm(A, C).sub(&rac),
        comm(B, C).sub(&rbc),
    ]
}

/// The rewrite system over generators `A < B < C` of degrees 3, 4, 6.
pub fn build_agen(p: &AgenParams) -> Result<RewriteSystem<Polynomial>> {
    let (rac, rbc) = relation_rhs(p);
    let mut b = SystemBuilder::new().params(p.vars.clone());
    for (name, d) in ["A", "B", "C"].iter().zip(GEN_DEGREES) {
        b.generator(name, d);
    }
    b.swap(B, A, w(&[C]).neg());
    b.swap(C, A, rac.neg());
    b.swap(C, B, rbc.neg());
    b.build()
}

/// A linear combination of cyclic words, keyed by least rotation.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Potential {
    pub terms: BTreeMap<Vec<Gen>, Polynomial>,
}

/// Lexicographically least rotation of a word.
pub fn canonical_rotation(word: &[Gen]) -> Vec<Gen> {
    (0..word.len().max(1))
        .map(|r| {
            let mut v = word[r.min(word.len())..].to_vec();
            v.extend_from_slice(&word[..r.min(word.len())]);
            v
        })
        .min()
        .unwrap_or_default()
}

impl Potential {
    pub fn add(&mut self, word: &[Gen], coeff: Polynomial) {
        let key = canonical_rotation(word);
        let e = self.terms.entry(key.clone()).or_default();
        *e = e.add(&coeff);
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `∂/∂x`: for each occurrence of `x`, the letters after it followed by
    /// the letters before it.
    pub fn cyclic_derivative(&self, x: Gen) -> PElem {
        let mut out = NCElement::zero();
        for (word, coeff) in &self.terms {
            for (s, &l) in word.iter().enumerate() {
                if l != x {
                    continue;
                }
                let mut tail = Word::from_slice(&word[s + 1..]);
                tail.extend_from_slice(&word[..s]);
                out.add_term(tail, coeff);
            }
        }
        out
    }

    /// Terms of word degree below `d`.
    pub fn lower_part(&self, d: u32) -> Potential {
        Potential {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| crate::rewrite::word_degree(w, &GEN_DEGREES) < d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

/// The potential whose cyclic derivatives give the defining relations.
pub fn potential_phi(p: &AgenParams) -> Potential {
    let g = |n| p.get(n).clone();
    let mut phi = Potential::default();
    phi.add(&[A, B, C], Polynomial::one());
    phi.add(&[B, A, C], Polynomial::int(-1));
    phi.add(&[A, A, A, A], g("a0'").scale(&Scalar::new(-1, 4)));
    phi.add(&[A, A, A], g("a3").scale(&Scalar::new(-1, 3)));
    phi.add(&[B, B, B], g("a0").scale(&Scalar::new(1, 3)));
    phi.add(&[A, A, B], g("a2"));
    phi.add(&[A, B, B], g("a1"));
    phi.add(&[A, A], g("a6").scale(&Scalar::new(-1, 2)));
    phi.add(&[A, B], g("a5"));
    phi.add(&[B, B], g("a4").scale(&Scalar::new(1, 2)));
    phi.add(&[C, C], sc(-1, 2));
    phi.add(&[A], g("a9").neg());
    phi.add(&[B], g("a8"));
    phi
}

fn free_text(e: &PElem, vars: &VarSet) -> String {
    let names = ["A", "B", "C"];
    if e.is_zero() {
        return "0".into();
    }
    e.sorted_terms(&GEN_DEGREES)
        .into_iter()
        .map(|(w, c)| {
            let ct = if let Some(k) = c.as_constant() {
                k.to_string()
            } else {
                format!("({})", c.to_text(vars))
            };
            if w.is_empty() {
                ct
            } else {
                let l: Vec<&str> = w.iter().map(|&g| names[g as usize]).collect();
                format!("{ct} * {}", l.join("."))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Checks `∂Φ/∂C = [A,B]-C`, `∂Φ/∂B = -([A,C]-rhs)`, `∂Φ/∂A = [B,C]-rhs`
/// as free-algebra elements.
pub fn verify_potential_relations(p: &AgenParams, phi: &Potential) -> Report {
    let [r1, r2, r3] = relations(p);
    let checks = vec![
        ("dPhi/dC = [A,B]-C", phi.cyclic_derivative(C).sub(&r1)),
        ("dPhi/dB = -([A,C]-rhs)", phi.cyclic_derivative(B).add(&r2)),
        ("dPhi/dA = [B,C]-rhs", phi.cyclic_derivative(A).sub(&r3)),
    ];
    Report::from_checks(
        "potential-relations",
        checks
            .into_iter()
            .map(|(l, d)| {
                let vars = p.vars.clone();
                (
                    l.to_string(),
                    expect_zero(d.is_zero(), || free_text(&d, &vars)),
                )
            })
            .collect(),
    )
}

/// `Σ x ∂Φ/∂x = Σ (∂Φ/∂x) x` in the free algebra; returns the difference.
pub fn potential_pbw_defect(phi_lower: &Potential) -> PElem {
    let mut d = NCElement::zero();
    for x in [A, B, C] {
        let dx = phi_lower.cyclic_derivative(x);
        let g = NCElement::gen(x);
        d = d.add(&g.free_mul(&dx)).sub(&dx.free_mul(&g));
    }
    d
}

pub fn check_potential_pbw_identity(phi_lower: &Potential, vars: &VarSet) -> Report {
    let d = potential_pbw_defect(phi_lower);
    Report::from_checks(
        "potential-pbw-identity",
        vec![(
            "sum x dPhi/dx = sum dPhi/dx x".into(),
            expect_zero(d.is_zero(), || free_text(&d, vars)),
        )],
    )
}

/// Coefficients `x1..x10` of the Casimir as polynomials in the generic
/// parameters.
pub fn omega_coefficients() -> Vec<Polynomial> {
    let v = agen_vars();
    [
        "1/6*(12*a9 + 3*a0*a5*a0' + 2*a4*a3 - a4*a0'*a1 - 6*a6*a1)",
        "1/3*(-6*a8 - 3*a4*a2 + a0*a4*a0' + a0*a6 + 6*a5*a1)",
        "1/6*(6*a6 + 3*a4*a0' + 3*a0*a2*a0' - 4*a3*a1 - a0'*a1^2)",
        "1/3*(-3*a5 + a0*a3 + 3*a2*a1 + a0*a0'*a1)",
        "1/3*(-3*a4 - 4*a0*a2 + a0^2*a0' + 6*a1^2)",
        "1/3*(2*a3 - a0'*a1)",
        "-2*a2 + a0*a0'",
        "2*a1",
        "1/2*a0'",
        "-2/3*a0",
    ]
    .iter()
    .map(|s| v.parse(s).expect("valid formula"))
    .collect()
}

/// The degree-12 Casimir element as a free-algebra element.
pub fn omega(p: &AgenParams) -> PElem {
    let x: Vec<Polynomial> = omega_coefficients().iter().map(|q| p.apply(q)).collect();
    let mut o = NCElement::zero();
    o.add_scaled(&w(&[A]), &x[0]);
    o.add_scaled(&w(&[B]), &x[1]);
    o.add_scaled(&w(&[A, A]), &x[2]);
    o.add_scaled(&w(&[A, B]).add(&w(&[B, A])), &x[3]);
    o.add_scaled(&w(&[B, B]), &x[4]);
    o.add_scaled(&w(&[A, A, A]), &x[5]);
    o.add_scaled(&w(&[A, B, A]), &x[6]);
    o.add_scaled(&w(&[B, C]), &x[7]);
    o.add_scaled(&w(&[A, B, B]), &x[7].neg());
    o.add_scaled(&w(&[A, A, A, A]), &x[8]);
    o.add_scaled(&w(&[B, B, B]), &x[9]);
    o.add_scaled(&w(&[C, C]), &Polynomial::one());
    o
}

/// `[Ω, A]`, `[Ω, B]`, `[Ω, C]` in normal form.
pub fn omega_commutators(sys: &RewriteSystem<Polynomial>, om: &PElem) -> Result<[PElem; 3]> {
    Ok([
        sys.try_commutator(om, &sys.g("A"))?,
        sys.try_commutator(om, &sys.g("B"))?,
        sys.try_commutator(om, &sys.g("C"))?,
    ])
}

pub fn verify_omega_central(p: &AgenParams) -> Result<Report> {
    let sys = build_agen(p)?;
    let om = omega(p);
    verify_central_in(&sys, &om)
}

pub fn verify_central_in(sys: &RewriteSystem<Polynomial>, om: &PElem) -> Result<Report> {
    let [ca, cb, cc] = omega_commutators(sys, om)?;
    let lead = |e: &PElem| {
        let (wd, co) = e.leading_term(sys.degrees()).unwrap();
        sys.to_text(&NCElement::term(wd, co))
    };
    let deg = sys.degree(&sys.normal_form(om));
    Ok(Report::from_checks(
        "omega-central",
        vec![
            ("[Omega,A]".into(), expect_zero(ca.is_zero(), || lead(&ca))),
            ("[Omega,B]".into(), expect_zero(cb.is_zero(), || lead(&cb))),
            ("[Omega,C]".into(), expect_zero(cc.is_zero(), || lead(&cc))),
            (
                "degree 12".into(),
                expect_zero(deg == Some(12), || format!("degree {deg:?}")),
            ),
        ],
    ))
}

/// Degree bookkeeping: with `deg a_i = i`, each right-hand side has weighted
/// degree at most (degree of the commutator) - 1.
pub fn relation_degree_bounds(p: &AgenParams) -> Vec<(u32, u32)> {
    let (rac, rbc) = relation_rhs(p);
    let bound = |e: &PElem| {
        e.iter()
            .map(|(w, c)| {
                crate::rewrite::word_degree(w, &GEN_DEGREES)
                    + c.weighted_degree(&PARAM_DEGREES).unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    };
    vec![
        (GEN_DEGREES[2], 6),
        (bound(&rac), 9 - 1),
        (bound(&rbc), 10 - 1),
    ]
}

/// Signed average over simultaneous permutations of `(k1,k2,k3)` and
/// `(l1,l2,l3)`.
pub fn sym_pm(p: &Polynomial, sign: i32) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (perm, sgn) in s3() {
        let full = [
            perm[0],
            perm[1],
            perm[2],
            3 + perm[0],
            3 + perm[1],
            3 + perm[2],
        ];
        let s = if sign < 0 { sgn } else { 1 };
        acc = acc.add(&p.permute_vars(&full).scale(&Scalar::from_int(s as i64)));
    }
    acc.scale(&Scalar::new(1, 6))
}

/// The six permutations of {0,1,2} with their signs.
pub fn s3() -> [([usize; 3], i32); 6] {
    [
        ([0, 1, 2], 1),
        ([1, 0, 2], -1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
    ]
}

const A6: &str =
    "1/16*(-k1^3 + 2*k1^2*k2 - 6*k1*k2*k3) + 3/8*(k1^2 - 2*k1*k2) + 1/6*l1^2 - 5/3*l1*l2";
const A8: &str = "1/128*(k1^4 - 8*k1^3*k2 + 6*k1^2*k2^2 + 4*k1^2*k2*k3) - 1/32*(3*k1^3 - 6*k1^2*k2 + 2*k1*k2*k3) - 1/24*k1*(l1^2 - 6*l2^2 + 4*l1*l2 - 26*l2*l3) + 1/2*l1^2 + l1*l2";
const A9: &str =
    "l2*(-4/9*l1^2 + 1/24*(k1^3 - 2*k1^2*k2 + k1*k2^2 + 9*k1^2*k3) + 1/2*(k1^2 - k1*k2))";
const A12: &str = "1/4608*k1^6 - 1/768*k1^5*(1 + 2*k2) \
    + 1/768*k1^4*(-39 + 6*k2 + 5*k2^2 + 3*k2*k3) \
    - 1/1152*k1^3*(-648 - 468*k2 + 6*k2^2 + 5*k2^3 - 6*k2*k3 + 6*k2^2*k3 + 2*l1^2 + 8*l1*l2 - 12*l2^2 + 140*l2*l3) \
    - 1/2304*k1^2*(2592*k2 + 702*k2^2 + 468*k2*k3 + 42*k2^2*k3 + k2^2*k3^2 - 40*l1^2 - 40*k2*l1^2 + 416*l1*l2 - 16*k2*l1*l2 + 144*k3*l1*l2 - 464*l2^2 + 56*k2*l2^2 - 360*k3*l2^2 - 560*l2*l3 - 720*k3*l2*l3) \
    - 1/288*k1*(-108*k2*k3 - 24*l1^2 + 68*k2*l1^2 + 17*k2*k3*l1^2 - 672*l1*l2 - 52*k2*l1*l2 - 296*k3*l1*l2 - 2*k2*k3*l1*l2 - 48*l2^2 - 206*k3*l2^2 + 1392*l2*l3) \
    + 1/432*l1*(-864*l1 + l1^3 - 1728*l2 + 24*l1^2*l2 - 26*l1*l2^2 + 244*l1*l2*l3)";

/// The summand inside the symmetrisation that defines `a12`.
pub fn a12_unsymmetrised() -> Polynomial {
    kl_vars().parse(A12).expect("valid formula")
}

/// Parameters of the specialised algebra over C[k,l].
pub fn kl_params() -> &'static AgenParams {
    static P: OnceLock<AgenParams> = OnceLock::new();
    P.get_or_init(|| {
        let v = kl_vars();
        let parse = |s: &str| v.parse(s).expect("valid formula");
        let mut p = AgenParams::zero(v.clone());
        p.set("a0", Polynomial::int(-6));
        p.set("a0'", Polynomial::int(-2));
        p.set("a2", parse("1/2*(k1 + k2 + k3)"));
        p.set("a5", sym_pm(&parse("2*k2*l1"), -1));
        p.set("a6", sym_pm(&parse(A6), 1));
        p.set("a8", sym_pm(&parse(A8), 1));
        p.set("a9", sym_pm(&parse(A9), -1));
        p
    })
}

/// The degree-12 polynomial in k, l equal to the image of the Casimir.
pub fn a12() -> &'static Polynomial {
    static P: OnceLock<Polynomial> = OnceLock::new();
    P.get_or_init(|| sym_pm(&a12_unsymmetrised(), 1))
}

/// The specialised algebra over C[k,l] and its parameters.
pub fn build_a() -> Result<(RewriteSystem<Polynomial>, AgenParams)> {
    let p = kl_params().clone();
    Ok((build_agen(&p)?, p))
}

/// Coefficients `a2, a5, a6, a8, a9, a12` of the specialised algebra.
pub fn kl_coefficients() -> [(&'static str, Polynomial); 6] {
    let p = kl_params();
    [
        ("a2", p.get("a2").clone()),
        ("a5", p.get("a5").clone()),
        ("a6", p.get("a6").clone()),
        ("a8", p.get("a8").clone()),
        ("a9", p.get("a9").clone()),
        ("a12", a12().clone()),
    ]
}

/// One of the twelve maps: a permutation of the indices of k and l,
/// optionally composed with `l ↦ -l`.
#[derive(Clone, Copy, Debug)]
pub struct Aut0Map {
    pub perm: [usize; 3],
    pub sign: i32,
    pub tau: bool,
}

impl Aut0Map {
    pub fn all() -> Vec<Aut0Map> {
        let mut v = Vec::new();
        for tau in [false, true] {
            for (perm, sign) in s3() {
                v.push(Aut0Map { perm, sign, tau });
            }
        }
        v
    }

    /// Sign by which `A` (and so `C`) is multiplied.
    pub fn a_sign(&self) -> i32 {
        if self.tau {
            -self.sign
        } else {
            self.sign
        }
    }

    pub fn on_kl(&self, p: &Polynomial) -> Polynomial {
        let ls = if self.tau { -1 } else { 1 };
        let images: Vec<Polynomial> = (0..6)
            .map(|i| {
                if i < 3 {
                    Polynomial::var(self.perm[i])
                } else {
                    Polynomial::var(3 + self.perm[i - 3]).scale(&Scalar::from_int(ls))
                }
            })
            .collect();
        p.compose(&images)
    }

    pub fn on_element(&self, e: &PElem) -> PElem {
        let s = Polynomial::int(self.a_sign() as i64);
        e.map_letters(|g| match g {
            B => NCElement::gen(B),
            _ => NCElement::gen(g).scale(&s),
        })
        .map_coeffs(|c| self.on_kl(c))
    }

    pub fn name(&self) -> String {
        format!(
            "perm=({},{},{}){}",
            self.perm[0] + 1,
            self.perm[1] + 1,
            self.perm[2] + 1,
            if self.tau { " with l -> -l" } else { "" }
        )
    }
}

/// Each of the twelve maps sends every defining relation of the specialised
/// algebra, and the relation Ω = a12, to ± itself.
pub fn verify_aut0() -> Report {
    let p = kl_params();
    let rels = relations(p);
    let om = omega(p).sub(&NCElement::constant(a12().clone()));
    let vars = kl_vars();
    let mut results = Vec::new();
    for m in Aut0Map::all() {
        let s = m.a_sign();
        let expected = [s, 1, s, 1];
        let items = [&rels[0], &rels[1], &rels[2], &om];
        let mut res = Ok(());
        for (k, (e, sign)) in items.iter().zip(expected).enumerate() {
            let d = m.on_element(e).sub(&e.scale(&Polynomial::int(sign as i64)));
            if !d.is_zero() {
                res = Err(format!("relation {k}: {}", free_text(&d, &vars)));
                break;
            }
        }
        results.push((m.name(), res));
    }
    Report::from_checks("aut0", results)
}

/// Counts of normal words of each degree with at most `cap` letters `g`.
pub fn capped_counts(sys: &RewriteSystem<Polynomial>, n: usize, g: Gen, cap: usize) -> Vec<u128> {
    let k = sys.num_generators();
    let deg = sys.degrees();
    // dp[d][last][count]
    let mut dp = vec![vec![vec![0u128; cap + 1]; k]; n + 1];
    let mut total = vec![0u128; n + 1];
    total[0] = 1;
    for d in 1..=n {
        for x in 0..k {
            let dx = deg[x] as usize;
            if dx > d {
                continue;
            }
            let inc = usize::from(x as Gen == g);
            for cnt in inc..=cap {
                let mut s = if dx == d && cnt == inc { 1 } else { 0 };
                for y in 0..k {
                    if sys.rule(y as Gen, x as Gen).is_none() {
                        s += dp[d - dx][y][cnt - inc];
                    }
                }
                dp[d][x][cnt] = s;
                total[d] += s;
            }
        }
    }
    total
}

fn convolve(a: &[u128], b: &Series) -> Vec<i128> {
    (0..a.len())
        .map(|n| (0..=n).map(|i| a[i] as i128 * b.coeffs[n - i]).sum())
        .collect()
}

/// Graded dimensions of the generic algebra, the specialised algebra over
/// C[k,l], and its quotient by the Casimir relation, against their series.
pub fn verify_hilbert(
    sys_gen: &RewriteSystem<Polynomial>,
    sys_kl: &RewriteSystem<Polynomial>,
) -> Report {
    let mut checks = Vec::new();
    let n_gen = 36;
    let counts = sys_gen.hilbert_counts(n_gen);
    let expected = Series::free_commutative(&[3, 4, 6], n_gen);
    let got: Vec<i128> = counts.iter().map(|&c| c as i128).collect();
    checks.push((
        "generic algebra, n <= 36".to_string(),
        expect_zero(got == expected.coeffs, || {
            format!("{got:?} vs {:?}", expected.coeffs)
        }),
    ));
    let n = 16;
    let kl = Series::free_commutative(&KL_DEGREES.map(|d| d as usize), n);
    let got = convolve(&sys_kl.hilbert_counts(n), &kl);
    let expected = Series::free_commutative(&[2, 2, 2, 3, 3, 3, 3, 4, 6], n);
    checks.push((
        "specialised algebra over C[k,l], n <= 16".to_string(),
        expect_zero(got == expected.coeffs, || {
            format!("{got:?} vs {:?}", expected.coeffs)
        }),
    ));
    let got = convolve(&capped_counts(sys_kl, n, C, 1), &kl);
    let expected = presentation_series(n);
    checks.push((
        "quotient by Casimir relation, n <= 16".to_string(),
        expect_zero(got == expected.coeffs, || {
            format!("{got:?} vs {:?}", expected.coeffs)
        }),
    ));
    Report::from_checks("hilbert-series", checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotations() {
        assert_eq!(canonical_rotation(&[2, 0, 1]), vec![0, 1, 2]);
        assert_eq!(canonical_rotation(&[1, 0, 0]), vec![0, 0, 1]);
        assert_eq!(canonical_rotation(&[]), Vec::<Gen>::new());
    }

    #[test]
    fn sym_minus_kills_k1() {
        let v = kl_vars();
        assert!(sym_pm(&v.var("k1"), -1).is_zero());
        let s = v.parse("k1 + k2 + k3").unwrap();
        assert_eq!(sym_pm(&s, 1), s);
    }
}
