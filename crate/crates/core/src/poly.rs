//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] stores variable *indices*; the names live in a [`VarSet`]
//! that is supplied when parsing or printing. Keeping names out of the value
//! keeps arithmetic allocation-free in the hot rewriting loops.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::error::{usage, Error, ParseError, Result};
use crate::expr::{Expr, Ring};
use crate::scalar::Scalar;

pub const MAX_VARS: usize = 16;

/// Exponent vector. Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u8; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn var(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut e = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.0[i]
                .checked_add(o.0[i])
                .expect("monomial exponent overflow");
        }
        Monomial(e)
    }

    /// Divides by variable `i`, which must occur.
    pub fn div_var(&self, i: usize) -> Monomial {
        let mut e = self.0;
        e[i] = e[i]
            .checked_sub(1)
            .expect("variable does not divide monomial");
        Monomial(e)
    }

    /// Graded lexicographic comparison; earlier variables dominate.
    pub fn grlex(&self, o: &Monomial) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }

    /// Weighted degree with one weight per variable.
    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        weights
            .iter()
            .zip(self.0.iter())
            .map(|(w, &e)| w * e as u32)
            .sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.0[..last])
    }
}

/// An ordered, closed list of variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        if names.len() > MAX_VARS {
            return usage(format!("at most {MAX_VARS} variables supported"));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return usage(format!("duplicate variable `{n}`"));
            }
        }
        Ok(Arc::new(VarSet { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(&self, name: &str) -> Polynomial {
        let i = self
            .index(name)
            .unwrap_or_else(|| panic!("unknown variable `{name}`"));
        Polynomial::var(i)
    }

    /// Parses an expression over these variables. Unknown names are errors.
    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        let e = Expr::parse(src)?;
        self.eval_expr(&e)
    }

    pub fn eval_expr(&self, e: &Expr) -> Result<Polynomial> {
        e.eval(&mut |name| match self.index(name) {
            Some(i) => Ok(Polynomial::var(i)),
            None => Err(Error::Parse(ParseError::new(format!(
                "unknown variable `{name}`"
            )))),
        })
    }
}

/// Canonical sparse polynomial: terms sorted by descending graded-lex order,
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Scalar)>,
}

fn sort_desc(terms: &mut [(Monomial, Scalar)]) {
    terms.sort_unstable_by(|a, b| b.0.grlex(&a.0));
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Scalar::from_int(n))
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS, "variable index out of range");
        Polynomial {
            terms: vec![(Monomial::var(i), Scalar::one())],
        }
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![(m, c)],
            }
        }
    }

    /// Collects arbitrary (possibly repeated) terms into canonical form.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(it: I) -> Self {
        let mut acc: FxHashMap<Monomial, Scalar> = FxHashMap::default();
        for (m, c) in it {
            add_into(&mut acc, m, &c);
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, Scalar>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_desc(&mut terms);
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(Scalar::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map_or_else(Scalar::zero, |(_, c)| c.clone())
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::ONE)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| m.weighted_degree(weights))
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    /// Homogeneous component of total degree `d`.
    pub fn component(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    /// Bitmask of the variables that occur.
    pub fn support(&self) -> u32 {
        let mut mask = 0u32;
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    mask |= 1 << i;
                }
            }
        }
        mask
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, c.mul(s))).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, true)
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let conv = |c: &Scalar| if negate { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.grlex(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, conv(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, conv(c))));
        Polynomial { terms: out }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let mut acc: FxHashMap<Monomial, Scalar> =
            FxHashMap::with_capacity_and_hasher(self.len() * o.len(), Default::default());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                add_into(&mut acc, m1.mul(m2), &c1.mul(c2));
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Signed exponent version of [`pow`](Self::pow) for CLI/parsing paths.
    pub fn checked_pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return usage("negative exponent");
        }
        Ok(self.pow(e as u32))
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    ///
    /// Fails if a variable that occurs in `self` has no image.
    pub fn substitute(&self, images: &[Option<Polynomial>]) -> Result<Polynomial> {
        let support = self.support();
        for i in 0..MAX_VARS {
            if support & (1 << i) != 0 && images.get(i).is_none_or(|p| p.is_none()) {
                return usage(format!("no image for variable index {i}"));
            }
        }
        // Variables whose image is themselves stay in place; the others are
        // eliminated one at a time by Horner's rule.
        let moved: Vec<usize> = (0..MAX_VARS)
            .filter(|&i| support & (1 << i) != 0)
            .filter(|&i| images[i].as_ref().unwrap() != &Polynomial::var(i))
            .collect();
        let terms: Vec<(Monomial, Scalar)> = self.terms.clone();
        Ok(horner(terms, &moved, images))
    }

    /// Substitution where every variable has an image.
    pub fn compose(&self, images: &[Polynomial]) -> Polynomial {
        let imgs: Vec<Option<Polynomial>> = images.iter().cloned().map(Some).collect();
        self.substitute(&imgs).expect("complete assignment")
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = [0u8; MAX_VARS];
            for (i, &x) in m.0.iter().enumerate() {
                if x != 0 {
                    e[perm[i]] += x;
                }
            }
            (Monomial(e), c.clone())
        }))
    }

    /// Exact value at a point. Fails if a used variable has no value.
    pub fn evaluate(&self, point: &[Option<Scalar>]) -> Result<Scalar> {
        let support = self.support();
        for i in 0..MAX_VARS {
            if support & (1 << i) != 0 && point.get(i).is_none_or(|p| p.is_none()) {
                return usage(format!("no value for variable index {i}"));
            }
        }
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    t = t.mul(&point[i].as_ref().unwrap().pow(e as u32));
                }
            }
            total = total.add(&t);
        }
        Ok(total)
    }

    /// Evaluation where every variable has a value.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let pts: Vec<Option<Scalar>> = point.iter().cloned().map(Some).collect();
        self.evaluate(&pts).expect("complete point")
    }

    /// Canonical text: `coeff * var^exp * ...` joined by ` + `.
    pub fn to_text(&self, vars: &VarSet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            out.push_str(&c.to_string());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                out.push_str(" * ");
                out.push_str(vars.names.get(i).map_or("?", |s| s.as_str()));
                if e > 1 {
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
        }
        out
    }
}

fn horner(
    terms: Vec<(Monomial, Scalar)>,
    moved: &[usize],
    images: &[Option<Polynomial>],
) -> Polynomial {
    let Some((&v, rest)) = moved.split_first() else {
        return Polynomial::from_terms(terms);
    };
    let mut by_exp: Vec<Vec<(Monomial, Scalar)>> = Vec::new();
    for (mut m, c) in terms {
        let e = m.0[v] as usize;
        m.0[v] = 0;
        if by_exp.len() <= e {
            by_exp.resize_with(e + 1, Vec::new);
        }
        by_exp[e].push((m, c));
    }
    let img = images[v].as_ref().unwrap();
    let mut acc = Polynomial::zero();
    for group in by_exp.into_iter().rev() {
        acc = acc.mul(img);
        if !group.is_empty() {
            acc = acc.add(&horner(group, rest, images));
        }
    }
    acc
}

fn add_into(acc: &mut FxHashMap<Monomial, Scalar>, m: Monomial, c: &Scalar) {
    match acc.get_mut(&m) {
        Some(v) => *v = v.add(c),
        None => {
            acc.insert(m, c.clone());
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..MAX_VARS).map(|i| format!("x{i}")).collect();
        let vs = VarSet { names };
        write!(f, "{}", self.to_text(&vs))
    }
}

impl Ring for Polynomial {
    fn from_scalar(s: Scalar) -> Self {
        Polynomial::constant(s)
    }
    fn add(&self, o: &Self) -> Self {
        Polynomial::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Polynomial::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Polynomial::mul(self, o)
    }
    fn neg(&self) -> Self {
        Polynomial::neg(self)
    }
    fn scale(&self, s: &Scalar) -> Self {
        Polynomial::scale(self, s)
    }
}

impl From<Scalar> for Polynomial {
    fn from(s: Scalar) -> Self {
        Polynomial::constant(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_and_inverse() {
        let vs = VarSet::new(&["m1", "m2"]).unwrap();
        let m1 = vs.var("m1");
        let m2 = vs.var("m2");
        assert!(m1.add(&m1.neg()).is_zero());
        let sq = m1.add(&m2).pow(2);
        assert_eq!(sq, vs.parse("m1^2 + 2*m1*m2 + m2^2").unwrap());
        assert_eq!(sq.to_text(&vs), "1 * m1^2 + 2 * m1 * m2 + 1 * m2^2");
    }

    #[test]
    fn closed_variable_set() {
        let vs = VarSet::new(&["k1"]).unwrap();
        assert!(vs.parse("k1 + k2").is_err());
        assert!(VarSet::new(&["a", "a"]).is_err());
    }

    #[test]
    fn substitution_requires_images() {
        let vs = VarSet::new(&["m1", "m2"]).unwrap();
        let p = vs.parse("m1*m2").unwrap();
        assert!(p.substitute(&[Some(vs.var("m1"))]).is_err());
        assert!(p.evaluate(&[Some(Scalar::one()), None]).is_err());
        assert!(p.checked_pow(-1).is_err());
    }
}
