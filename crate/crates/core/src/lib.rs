//! Exact symbolic verification of a family of Calabi-Yau algebras, the
//! diagonal centraliser of sl(3) in U(sl(3))⊗U(sl(3)), its E6 symmetry and
//! realisations by Heun-type operators in the Racah and Hahn algebras.
//!
//! Every computation is over exact rationals. Identities are checked either
//! symbolically (normal forms in a rewrite system) or by evaluation in exact
//! matrix representations.

pub mod budget;
pub mod checks;
pub mod coeff;
pub mod cy;
pub mod e6;
pub mod env;
pub mod error;
pub mod expr;
pub mod heun;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod rewrite;
pub mod scalar;
pub mod series;

pub use coeff::Coeff;
pub use error::{Error, ParseError, Result};
pub use poly::{Monomial, Polynomial, VarSet};
pub use report::{Report, Status};
pub use rewrite::{Gen, NCElement, RewriteSystem, Strategy, Word};
pub use scalar::Scalar;
