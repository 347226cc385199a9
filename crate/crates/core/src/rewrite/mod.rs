//! Noncommutative rewriting: elements, systems with adjacent-pair rules,
//! normal forms, overlap checks and graded dimensions.

mod element;
mod strategy;
mod system;

pub use element::{misordering_index, word_degree, Gen, NCElement, Word};
pub use strategy::{check_overlaps, reduce, OverlapReport, Strategy};
pub use system::{Generator, RewriteSystem, Rule, SystemBuilder};
