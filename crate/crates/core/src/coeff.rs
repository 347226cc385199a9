//! Coefficient rings for noncommutative elements.

use std::fmt::Debug;
use std::hash::Hash;

use crate::poly::{Polynomial, VarSet};
use crate::scalar::Scalar;

/// A commutative coefficient ring with exact equality.
pub trait Coeff: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_scalar(s: Scalar) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }

    /// Canonical text; polynomials are parenthesised unless they are a
    /// single number.
    fn to_text(&self, vars: Option<&VarSet>) -> String;

    /// Parameter-space degree used for bookkeeping checks.
    fn weighted_degree(&self, weights: &[u32]) -> Option<u32>;

    /// The `i`-th central parameter, if this ring has any.
    fn param(_i: usize) -> Option<Self> {
        None
    }
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn scale(&self, s: &Scalar) -> Self {
        Scalar::mul(self, s)
    }
    fn to_text(&self, _vars: Option<&VarSet>) -> String {
        self.to_string()
    }
    fn weighted_degree(&self, _weights: &[u32]) -> Option<u32> {
        if self.is_zero() {
            None
        } else {
            Some(0)
        }
    }
}

impl Coeff for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn from_scalar(s: Scalar) -> Self {
        Polynomial::constant(s)
    }
    fn add(&self, o: &Self) -> Self {
        Polynomial::add(self, o)
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
    fn to_text(&self, vars: Option<&VarSet>) -> String {
        if let Some(c) = self.as_constant() {
            return c.to_string();
        }
        match vars {
            Some(v) => format!("({})", Polynomial::to_text(self, v)),
            None => format!("({self:?})"),
        }
    }
    fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        Polynomial::weighted_degree(self, weights)
    }
    fn param(i: usize) -> Option<Self> {
        Some(Polynomial::var(i))
    }
}
