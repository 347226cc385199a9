use std::fmt;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::coeff::Coeff;
use crate::expr::Ring;
use crate::scalar::Scalar;

/// Generator index within a rewrite system. Order of indices is the PBW order.
pub type Gen = u8;

/// A word in the generators.
pub type Word = SmallVec<[Gen; 24]>;

/// Finite linear combination of words, without any implicit rewriting.
///
/// Multiplication through [`Ring`] is concatenation (the free algebra); use
/// [`RewriteSystem`](super::RewriteSystem) for products in a quotient.
#[derive(Clone, PartialEq, Eq)]
pub struct NCElement<C: Coeff> {
    pub(crate) terms: FxHashMap<Word, C>,
}

impl<C: Coeff> Default for NCElement<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> NCElement<C> {
    pub fn zero() -> Self {
        NCElement {
            terms: FxHashMap::default(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Word::new(), c)
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(Word::from_slice(&[g]), C::one())
    }

    pub fn word(w: &[Gen]) -> Self {
        Self::term(Word::from_slice(w), C::one())
    }

    pub fn term(w: Word, c: C) -> Self {
        let mut e = Self::zero();
        if !c.is_zero() {
            e.terms.insert(w, c);
        }
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, C)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (w, c) in it {
            e.add_term(w, &c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Gen]) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    /// Terms sorted by (degree, word), using the given generator degrees.
    pub fn sorted_terms(&self, degrees: &[u32]) -> Vec<(&Word, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            word_degree(a.0, degrees)
                .cmp(&word_degree(b.0, degrees))
                .then_with(|| a.0.cmp(b.0))
        });
        v
    }

    pub fn add_term(&mut self, w: Word, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                v.add_assign(c);
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    /// `self += k * o`.
    pub fn add_scaled(&mut self, o: &Self, k: &C) {
        if k.is_zero() {
            return;
        }
        let one = k == &C::one();
        for (w, c) in &o.terms {
            if one {
                self.add_term(w.clone(), c);
            } else {
                self.add_term(w.clone(), &c.mul(k));
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(o, &C::one());
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(o, &C::one().neg());
        r
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|c| c.mul(k))
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                r.terms.insert(w.clone(), v);
            }
        }
        r
    }

    /// Product in the free algebra (concatenation of words).
    pub fn free_mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                r.add_term(w, &a.mul(b));
            }
        }
        r
    }

    /// Maximal word degree; `None` for zero.
    pub fn degree(&self, degrees: &[u32]) -> Option<u32> {
        self.terms.keys().map(|w| word_degree(w, degrees)).max()
    }

    /// Part of total word degree exactly `d`.
    pub fn component(&self, d: u32, degrees: &[u32]) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(w, _)| word_degree(w, degrees) == d)
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    /// The highest term in (degree, word) order, for witnesses.
    pub fn leading_term(&self, degrees: &[u32]) -> Option<(Word, C)> {
        self.sorted_terms(degrees)
            .last()
            .map(|(w, c)| ((*w).clone(), (*c).clone()))
    }

    /// Applies a letter substitution to every word (free algebra map).
    pub fn map_letters(&self, f: impl Fn(Gen) -> Self) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for &g in w.iter() {
                t = t.free_mul(&f(g));
            }
            r.add_scaled(&t, &C::one());
        }
        r
    }
}

pub fn word_degree(w: &[Gen], degrees: &[u32]) -> u32 {
    w.iter().map(|&g| degrees[g as usize]).sum()
}

/// Number of pairs `i < j` with `w[i] > w[j]`.
pub fn misordering_index(w: &[Gen]) -> usize {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                n += 1;
            }
        }
    }
    n
}

impl<C: Coeff> fmt::Debug for NCElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        write!(f, "{{")?;
        for (i, (w, c)) in v.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}: {:?}", w.as_slice(), c)?;
        }
        write!(f, "}}")
    }
}

impl<C: Coeff> Ring for NCElement<C> {
    fn from_scalar(s: Scalar) -> Self {
        Self::constant(C::from_scalar(s))
    }
    fn add(&self, o: &Self) -> Self {
        NCElement::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        NCElement::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.free_mul(o)
    }
    fn neg(&self) -> Self {
        NCElement::neg(self)
    }
    fn scale(&self, s: &Scalar) -> Self {
        NCElement::scale(self, &C::from_scalar(s.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let a: NCElement<Scalar> = NCElement::word(&[0, 1]);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.free_mul(&NCElement::gen(2)), NCElement::word(&[0, 1, 2]));
    }

    #[test]
    fn misordering() {
        assert_eq!(misordering_index(&[2, 1, 0]), 3);
        assert_eq!(misordering_index(&[0, 0, 1]), 0);
        assert_eq!(misordering_index(&[1, 0, 1]), 1);
    }
}
