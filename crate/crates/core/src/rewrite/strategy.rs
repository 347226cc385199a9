//! Direct rule application, independent of the memoised product.
//!
//! Used as a second route to normal forms for differential testing and for
//! resolving overlap ambiguities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use super::element::{Gen, NCElement, Word};
use super::system::RewriteSystem;
use crate::coeff::Coeff;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Leftmost reducible pair in a highest-degree reducible word.
    Leftmost,
    /// Random reducible word, random reducible position.
    Random(u64),
}

fn reducible_positions<C: Coeff>(sys: &RewriteSystem<C>, w: &[Gen]) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&i| sys.rule(w[i], w[i + 1]).is_some())
        .collect()
}

/// Rewrites one occurrence at position `i` of `w` with coefficient `c`.
fn rewrite_at<C: Coeff>(
    sys: &RewriteSystem<C>,
    terms: &mut FxHashMap<Word, C>,
    w: &Word,
    i: usize,
    c: &C,
) {
    let rule = sys.rule(w[i], w[i + 1]).expect("reducible position");
    for (v, d) in rule.replacement.iter() {
        let mut nw = Word::from_slice(&w[..i]);
        nw.extend_from_slice(v);
        nw.extend_from_slice(&w[i + 2..]);
        let k = c.mul(d);
        match terms.get_mut(&nw) {
            Some(x) => {
                x.add_assign(&k);
                if x.is_zero() {
                    terms.remove(&nw);
                }
            }
            None => {
                if !k.is_zero() {
                    terms.insert(nw, k);
                }
            }
        }
    }
}

/// Reduces `e` by applying single rules until no word is reducible.
///
/// Fails if more than `max_steps` rewrites are needed, which for a
/// terminating system signals a bound that is too small.
pub fn reduce<C: Coeff>(
    sys: &RewriteSystem<C>,
    e: &NCElement<C>,
    strategy: Strategy,
    max_steps: usize,
) -> Result<NCElement<C>> {
    let mut terms = e.terms.clone();
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::Leftmost => None,
    };
    let degrees = sys.degrees().to_vec();
    for _ in 0..max_steps {
        let mut pending: Vec<&Word> = terms.keys().filter(|w| !sys.is_normal_word(w)).collect();
        if pending.is_empty() {
            return Ok(NCElement { terms });
        }
        let (w, pos) = match rng.as_mut() {
            None => {
                pending.sort_by(|a, b| {
                    let da: u32 = a.iter().map(|&g| degrees[g as usize]).sum();
                    let db: u32 = b.iter().map(|&g| degrees[g as usize]).sum();
                    db.cmp(&da).then_with(|| a.cmp(b))
                });
                let w = pending[0].clone();
                let pos = reducible_positions(sys, &w)[0];
                (w, pos)
            }
            Some(r) => {
                pending.sort();
                let w = pending[r.gen_range(0..pending.len())].clone();
                let ps = reducible_positions(sys, &w);
                let pos = ps[r.gen_range(0..ps.len())];
                (w, pos)
            }
        };
        let c = terms.remove(&w).expect("present");
        rewrite_at(sys, &mut terms, &w, pos, &c);
    }
    Err(Error::Budget(format!(
        "reduction did not finish within {max_steps} steps"
    )))
}

/// Outcome of checking all length-3 ambiguities.
#[derive(Clone, Debug)]
pub struct OverlapReport<C: Coeff> {
    pub triples_checked: usize,
    /// First triple whose two reductions differ, with both results.
    pub failure: Option<(Word, NCElement<C>, NCElement<C>)>,
}

impl<C: Coeff> OverlapReport<C> {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Resolves every overlap `g·h·k` where both `g·h` and `h·k` are rule left
/// sides, reducing each one-step rewrite to normal form with `strategy`.
pub fn check_overlaps<C: Coeff>(
    sys: &RewriteSystem<C>,
    strategy: Strategy,
    max_steps: usize,
) -> Result<OverlapReport<C>> {
    let n = sys.num_generators() as Gen;
    let mut checked = 0;
    for g in 0..n {
        for h in 0..n {
            let Some(r1) = sys.rule(g, h) else { continue };
            for k in 0..n {
                let Some(r2) = sys.rule(h, k) else { continue };
                checked += 1;
                let left = r1.replacement.free_mul(&NCElement::gen(k));
                let right = NCElement::gen(g).free_mul(&r2.replacement);
                let a = reduce(sys, &left, strategy, max_steps)?;
                let b = reduce(sys, &right, strategy, max_steps)?;
                if a != b {
                    return Ok(OverlapReport {
                        triples_checked: checked,
                        failure: Some((Word::from_slice(&[g, h, k]), a, b)),
                    });
                }
            }
        }
    }
    Ok(OverlapReport {
        triples_checked: checked,
        failure: None,
    })
}
