use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use parking_lot::Mutex;
use rustc_hash::FxHashMap;

use super::element::{misordering_index, word_degree, Gen, NCElement, Word};
use crate::budget::Budget;
use crate::coeff::Coeff;
use crate::error::{Error, ParseError, Result};
use crate::expr::Expr;
use crate::poly::VarSet;

type Terms<C> = Arc<Vec<(Word, C)>>;

const NO_RULE: u32 = u32::MAX;
const LETTER_MEMO_CAP: usize = 3_000_000;
const PAIR_MEMO_CAP: usize = 1_500_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    /// Tensor factor. Generators of different blocks must commute.
    pub block: u16,
}

#[derive(Clone, Debug)]
pub struct Rule<C: Coeff> {
    pub left: (Gen, Gen),
    pub replacement: NCElement<C>,
}

/// Accumulates generators and rules; [`build`](Self::build) validates them.
pub struct SystemBuilder<C: Coeff> {
    gens: Vec<Generator>,
    params: Option<Arc<VarSet>>,
    rules: Vec<Rule<C>>,
    block: u16,
}

impl<C: Coeff> Default for SystemBuilder<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coeff> SystemBuilder<C> {
    pub fn new() -> Self {
        SystemBuilder {
            gens: Vec::new(),
            params: None,
            rules: Vec::new(),
            block: 0,
        }
    }

    /// Names of the central parameters appearing in coefficients.
    pub fn params(mut self, vars: Arc<VarSet>) -> Self {
        self.params = Some(vars);
        self
    }

    /// Starts a new tensor block; later generators belong to it.
    pub fn next_block(&mut self) {
        if !self.gens.is_empty() {
            self.block += 1;
        }
    }

    pub fn generator(&mut self, name: &str, degree: u32) -> Gen {
        assert!(self.gens.len() < Gen::MAX as usize, "too many generators");
        self.gens.push(Generator {
            name: name.to_string(),
            degree,
            block: self.block,
        });
        (self.gens.len() - 1) as Gen
    }

    /// Rule `g·h → replacement`.
    pub fn rule(&mut self, g: Gen, h: Gen, replacement: NCElement<C>) {
        self.rules.push(Rule {
            left: (g, h),
            replacement,
        });
    }

    /// Swap rule `g·h → h·g + lower` for `g > h`.
    pub fn swap(&mut self, g: Gen, h: Gen, lower: NCElement<C>) {
        let mut rep = NCElement::word(&[h, g]);
        rep.add_scaled(&lower, &C::one());
        self.rule(g, h, rep);
    }

    pub fn build(self) -> Result<RewriteSystem<C>> {
        RewriteSystem::new(self.gens, self.params, self.rules)
    }
}

/// Ordered generators with rules on adjacent pairs.
///
/// Normal forms are computed by memoised insertion: the normal form of
/// `u·g` for a normal word `u` is cached, and products of normal words are
/// built letter by letter from those. When the generators split into blocks
/// that commute with one another, products are computed block by block.
pub struct RewriteSystem<C: Coeff> {
    gens: Vec<Generator>,
    degrees: Vec<u32>,
    params: Option<Arc<VarSet>>,
    rules: Vec<Rule<C>>,
    rule_idx: Vec<u32>,
    factorized: bool,
    nblocks: usize,
    rule_nf: Mutex<Vec<Option<Terms<C>>>>,
    letter_memo: Mutex<FxHashMap<(Word, Gen), Terms<C>>>,
    pair_memo: Mutex<FxHashMap<(Word, Word), Terms<C>>>,
    budget: Mutex<Option<Budget>>,
    ops: AtomicU64,
}

impl<C: Coeff> RewriteSystem<C> {
    pub fn builder() -> SystemBuilder<C> {
        SystemBuilder::new()
    }

    fn new(gens: Vec<Generator>, params: Option<Arc<VarSet>>, rules: Vec<Rule<C>>) -> Result<Self> {
        let n = gens.len();
        let sys_err = |m: String| Err(Error::System(m));
        for (i, g) in gens.iter().enumerate() {
            if g.degree == 0 {
                return sys_err(format!("generator `{}` has degree 0", g.name));
            }
            if gens[..i].iter().any(|h| h.name == g.name) {
                return sys_err(format!("duplicate generator `{}`", g.name));
            }
            if params.as_ref().is_some_and(|p| p.index(&g.name).is_some()) {
                return sys_err(format!("generator `{}` clashes with a parameter", g.name));
            }
            if i > 0 && gens[i - 1].block > g.block {
                return sys_err("blocks must be contiguous".into());
            }
        }
        let degrees: Vec<u32> = gens.iter().map(|g| g.degree).collect();
        let mut rule_idx = vec![NO_RULE; n * n];
        for (k, r) in rules.iter().enumerate() {
            let (g, h) = r.left;
            if g as usize >= n || h as usize >= n {
                return sys_err("rule mentions an unknown generator".into());
            }
            let slot = &mut rule_idx[g as usize * n + h as usize];
            if *slot != NO_RULE {
                return sys_err(format!(
                    "two rules for {}·{}",
                    gens[g as usize].name, gens[h as usize].name
                ));
            }
            *slot = k as u32;
            // termination: everything strictly below the left side in
            // (degree, misordering index)
            let left = [g, h];
            let ld = word_degree(&left, &degrees);
            let linv = misordering_index(&left);
            for (w, _) in r.replacement.iter() {
                if w.iter().any(|&x| x as usize >= n) {
                    return sys_err("replacement mentions an unknown generator".into());
                }
                let d = word_degree(w, &degrees);
                let ok = d < ld || (d == ld && w.as_slice() == [h, g] && linv > 0);
                if !ok {
                    return sys_err(format!(
                        "rule for {}·{} does not decrease (degree, misordering)",
                        gens[g as usize].name, gens[h as usize].name
                    ));
                }
            }
        }
        let nblocks = gens.last().map_or(1, |g| g.block as usize + 1);
        let mut factorized = nblocks > 1;
        if factorized {
            for r in rules.iter() {
                let (g, h) = r.left;
                let (bg, bh) = (gens[g as usize].block, gens[h as usize].block);
                if bg != bh {
                    if r.replacement != NCElement::word(&[h, g]) {
                        factorized = false;
                    }
                } else if r
                    .replacement
                    .iter()
                    .any(|(w, _)| w.iter().any(|&x| gens[x as usize].block != bg))
                {
                    factorized = false;
                }
            }
            // every cross-block inversion needs its swap rule
            for g in 0..n {
                for h in 0..g {
                    if gens[g].block != gens[h].block && rule_idx[g * n + h] == NO_RULE {
                        factorized = false;
                    }
                }
            }
        }
        let nrules = rules.len();
        Ok(RewriteSystem {
            gens,
            degrees,
            params,
            rules,
            rule_idx,
            factorized,
            nblocks,
            rule_nf: Mutex::new(vec![None; nrules]),
            letter_memo: Mutex::new(FxHashMap::default()),
            pair_memo: Mutex::new(FxHashMap::default()),
            budget: Mutex::new(None),
            ops: AtomicU64::new(0),
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn params(&self) -> Option<&Arc<VarSet>> {
        self.params.as_ref()
    }

    pub fn rules(&self) -> &[Rule<C>] {
        &self.rules
    }

    pub fn is_factorized(&self) -> bool {
        self.factorized
    }

    pub fn gen_index(&self, name: &str) -> Option<Gen> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .map(|i| i as Gen)
    }

    /// The generator called `name`. Panics if there is none.
    pub fn g(&self, name: &str) -> NCElement<C> {
        let i = self
            .gen_index(name)
            .unwrap_or_else(|| panic!("unknown generator `{name}`"));
        NCElement::gen(i)
    }

    pub fn rule(&self, g: Gen, h: Gen) -> Option<&Rule<C>> {
        let k = self.rule_idx[g as usize * self.gens.len() + h as usize];
        (k != NO_RULE).then(|| &self.rules[k as usize])
    }

    fn has_rule(&self, g: Gen, h: Gen) -> bool {
        self.rule_idx[g as usize * self.gens.len() + h as usize] != NO_RULE
    }

    pub fn is_normal_word(&self, w: &[Gen]) -> bool {
        w.windows(2).all(|p| !self.has_rule(p[0], p[1]))
    }

    pub fn is_normal(&self, e: &NCElement<C>) -> bool {
        e.iter().all(|(w, _)| self.is_normal_word(w))
    }

    pub fn word_degree(&self, w: &[Gen]) -> u32 {
        word_degree(w, &self.degrees)
    }

    pub fn degree(&self, e: &NCElement<C>) -> Option<u32> {
        e.degree(&self.degrees)
    }

    /// Installs a budget checked during heavy products.
    pub fn set_budget(&self, b: Option<Budget>) {
        *self.budget.lock() = b;
    }

    pub fn clear_caches(&self) {
        self.letter_memo.lock().clear();
        self.pair_memo.lock().clear();
    }

    pub fn cache_sizes(&self) -> (usize, usize) {
        (self.letter_memo.lock().len(), self.pair_memo.lock().len())
    }

    fn tick(&self) -> Result<()> {
        let n = self.ops.fetch_add(1, Ordering::Relaxed);
        if n % 4096 == 0 {
            if let Some(b) = self.budget.lock().as_ref() {
                b.check()?;
            }
        }
        Ok(())
    }

    fn rule_normal_form(&self, k: usize) -> Result<Terms<C>> {
        if let Some(t) = &self.rule_nf.lock()[k] {
            return Ok(t.clone());
        }
        let nf = self.try_normal_form(&self.rules[k].replacement)?;
        let t: Terms<C> = Arc::new(nf.terms.into_iter().collect());
        self.rule_nf.lock()[k] = Some(t.clone());
        Ok(t)
    }

    /// Normal form of `u·g` for a normal word `u` within one block.
    fn mul_word_letter(&self, u: &[Gen], g: Gen) -> Result<Terms<C>> {
        let Some(&x) = u.last() else {
            return Ok(Arc::new(vec![(Word::from_slice(&[g]), C::one())]));
        };
        let k = self.rule_idx[x as usize * self.gens.len() + g as usize];
        if k == NO_RULE {
            let mut w = Word::from_slice(u);
            w.push(g);
            return Ok(Arc::new(vec![(w, C::one())]));
        }
        let key = (Word::from_slice(u), g);
        if let Some(t) = self.letter_memo.lock().get(&key) {
            return Ok(t.clone());
        }
        self.tick()?;
        let rep = self.rule_normal_form(k as usize)?;
        let prefix = &u[..u.len() - 1];
        let mut acc: FxHashMap<Word, C> = FxHashMap::default();
        for (v, c) in rep.iter() {
            let part = self.mul_block(prefix, v)?;
            for (w, d) in part.iter() {
                accumulate(&mut acc, w, &c.mul(d));
            }
        }
        let t: Terms<C> = Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        let mut memo = self.letter_memo.lock();
        if memo.len() >= LETTER_MEMO_CAP {
            memo.clear();
        }
        memo.insert(key, t.clone());
        Ok(t)
    }

    /// Normal form of `u·v` for normal words `u`, `v` within one block.
    fn mul_block(&self, u: &[Gen], v: &[Gen]) -> Result<Terms<C>> {
        match (u.last(), v.first()) {
            (_, None) => return Ok(Arc::new(vec![(Word::from_slice(u), C::one())])),
            (None, Some(_)) => return Ok(Arc::new(vec![(Word::from_slice(v), C::one())])),
            (Some(&x), Some(&y)) if !self.has_rule(x, y) => {
                let mut w = Word::from_slice(u);
                w.extend_from_slice(v);
                return Ok(Arc::new(vec![(w, C::one())]));
            }
            _ => {}
        }
        if v.len() == 1 {
            return self.mul_word_letter(u, v[0]);
        }
        let key = (Word::from_slice(u), Word::from_slice(v));
        if let Some(t) = self.pair_memo.lock().get(&key) {
            return Ok(t.clone());
        }
        let first = self.mul_word_letter(u, v[0])?;
        let rest = &v[1..];
        let mut acc: FxHashMap<Word, C> = FxHashMap::default();
        for (w, c) in first.iter() {
            let part = self.mul_block(w, rest)?;
            for (x, d) in part.iter() {
                accumulate(&mut acc, x, &c.mul(d));
            }
        }
        let t: Terms<C> = Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        let mut memo = self.pair_memo.lock();
        if memo.len() >= PAIR_MEMO_CAP {
            memo.clear();
        }
        memo.insert(key, t.clone());
        Ok(t)
    }

    fn block_ranges(&self, w: &[Gen]) -> Vec<(u16, usize, usize)> {
        let mut out = Vec::new();
        let mut s = 0;
        for i in 1..=w.len() {
            if i == w.len() || self.gens[w[i] as usize].block != self.gens[w[s] as usize].block {
                out.push((self.gens[w[s] as usize].block, s, i));
                s = i;
            }
        }
        out
    }

    /// Normal form of `u·v` for normal words; adds `k·uv` into `acc`.
    fn mul_words_into(
        &self,
        u: &[Gen],
        v: &[Gen],
        k: &C,
        acc: &mut FxHashMap<Word, C>,
    ) -> Result<()> {
        if !self.factorized {
            let t = self.mul_block(u, v)?;
            for (w, c) in t.iter() {
                accumulate(acc, w, &c.mul(k));
            }
            return Ok(());
        }
        if let (Some(&x), Some(&y)) = (u.last(), v.first()) {
            if !self.has_rule(x, y) {
                let mut w = Word::from_slice(u);
                w.extend_from_slice(v);
                accumulate(acc, &w, k);
                return Ok(());
            }
        }
        let ur = self.block_ranges(u);
        let vr = self.block_ranges(v);
        let mut parts: Vec<Terms<C>> = Vec::with_capacity(self.nblocks);
        let (mut i, mut j) = (0, 0);
        while i < ur.len() || j < vr.len() {
            let bu = ur.get(i).map_or(u16::MAX, |r| r.0);
            let bv = vr.get(j).map_or(u16::MAX, |r| r.0);
            let b = bu.min(bv);
            let us: &[Gen] = if bu == b { &u[ur[i].1..ur[i].2] } else { &[] };
            let vs: &[Gen] = if bv == b { &v[vr[j].1..vr[j].2] } else { &[] };
            if bu == b {
                i += 1;
            }
            if bv == b {
                j += 1;
            }
            parts.push(self.mul_block(us, vs)?);
        }
        // tensor the block products together
        let mut cur: Vec<(Word, C)> = vec![(Word::new(), k.clone())];
        for p in &parts {
            if p.len() == 1 && p[0].1 == C::one() {
                for (w, _) in cur.iter_mut() {
                    w.extend_from_slice(&p[0].0);
                }
                continue;
            }
            let mut next = Vec::with_capacity(cur.len() * p.len());
            for (w, c) in &cur {
                for (x, d) in p.iter() {
                    let mut y = w.clone();
                    y.extend_from_slice(x);
                    next.push((y, c.mul(d)));
                }
            }
            cur = next;
        }
        for (w, c) in cur {
            accumulate(acc, &w, &c);
        }
        Ok(())
    }

    pub fn try_normal_form(&self, e: &NCElement<C>) -> Result<NCElement<C>> {
        if self.is_normal(e) {
            return Ok(e.clone());
        }
        let mut acc: FxHashMap<Word, C> = FxHashMap::default();
        for (w, c) in e.iter() {
            if self.is_normal_word(w) {
                accumulate(&mut acc, w, c);
                continue;
            }
            // fold the letters in from the left
            let mut cur: FxHashMap<Word, C> = FxHashMap::default();
            cur.insert(Word::new(), c.clone());
            for &g in w.iter() {
                let mut next = FxHashMap::default();
                for (u, d) in &cur {
                    self.mul_words_into(u, &[g], d, &mut next)?;
                }
                cur = next;
            }
            for (u, d) in cur {
                accumulate(&mut acc, &u, &d);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(NCElement { terms: acc })
    }

    pub fn normal_form(&self, e: &NCElement<C>) -> NCElement<C> {
        self.try_normal_form(e).expect("normal form")
    }

    pub fn try_mul(&self, a: &NCElement<C>, b: &NCElement<C>) -> Result<NCElement<C>> {
        let a = self.try_normal_form(a)?;
        let b = self.try_normal_form(b)?;
        let mut acc: FxHashMap<Word, C> = FxHashMap::default();
        for (u, x) in a.iter() {
            for (v, y) in b.iter() {
                self.tick()?;
                self.mul_words_into(u, v, &x.mul(y), &mut acc)?;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(NCElement { terms: acc })
    }

    pub fn mul(&self, a: &NCElement<C>, b: &NCElement<C>) -> NCElement<C> {
        self.try_mul(a, b).expect("product")
    }

    pub fn mul_all(&self, factors: &[&NCElement<C>]) -> NCElement<C> {
        let mut acc = NCElement::one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, a: &NCElement<C>, e: u32) -> NCElement<C> {
        let mut acc = NCElement::one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn try_commutator(&self, a: &NCElement<C>, b: &NCElement<C>) -> Result<NCElement<C>> {
        Ok(self.try_mul(a, b)?.sub(&self.try_mul(b, a)?))
    }

    pub fn commutator(&self, a: &NCElement<C>, b: &NCElement<C>) -> NCElement<C> {
        self.try_commutator(a, b).expect("commutator")
    }

    pub fn anticommutator(&self, a: &NCElement<C>, b: &NCElement<C>) -> NCElement<C> {
        self.mul(a, b).add(&self.mul(b, a))
    }

    /// Canonical text `coeff * g1.g2` sorted by (degree, word).
    pub fn to_text(&self, e: &NCElement<C>) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let vars = self.params.as_deref();
        let mut parts = Vec::with_capacity(e.len());
        for (w, c) in e.sorted_terms(&self.degrees) {
            let ct = c.to_text(vars);
            if w.is_empty() {
                parts.push(ct);
            } else {
                let names: Vec<&str> = w
                    .iter()
                    .map(|&g| self.gens[g as usize].name.as_str())
                    .collect();
                parts.push(format!("{ct} * {}", names.join(".")));
            }
        }
        parts.join(" + ")
    }

    /// Parses an element in the free algebra (no rewriting applied).
    pub fn parse_free(&self, src: &str) -> Result<NCElement<C>> {
        let e = Expr::parse(src)?;
        self.eval_expr(&e)
    }

    /// Evaluates an expression; generator names become letters, parameter
    /// names become coefficients. Products are free.
    pub fn eval_expr(&self, e: &Expr) -> Result<NCElement<C>> {
        e.eval(&mut |name: &str| {
            if let Some(g) = self.gen_index(name) {
                return Ok(NCElement::gen(g));
            }
            if let Some(i) = self.params.as_ref().and_then(|p| p.index(name)) {
                if let Some(c) = C::param(i) {
                    return Ok(NCElement::constant(c));
                }
            }
            Err(Error::Parse(ParseError::new(format!(
                "unknown symbol `{name}`"
            ))))
        })
    }

    /// Parses and reduces to normal form.
    pub fn parse(&self, src: &str) -> Result<NCElement<C>> {
        let e = self.parse_free(src)?;
        self.try_normal_form(&e)
    }

    /// Number of normal words of each degree `0..=n`.
    pub fn hilbert_counts(&self, n: usize) -> Vec<u128> {
        let k = self.gens.len();
        // dp[d][g]: normal words of degree d ending in g
        let mut dp = vec![vec![0u128; k]; n + 1];
        let mut total = vec![0u128; n + 1];
        total[0] = 1;
        for d in 1..=n {
            for g in 0..k {
                let dg = self.degrees[g] as usize;
                if dg > d {
                    continue;
                }
                let mut s = if dg == d { 1 } else { 0 };
                for h in 0..k {
                    if !self.has_rule(h as Gen, g as Gen) {
                        s += dp[d - dg][h];
                    }
                }
                dp[d][g] = s;
                total[d] += s;
            }
        }
        total
    }

    pub fn graded_dim(&self, n: usize) -> u128 {
        self.hilbert_counts(n)[n]
    }
}

fn accumulate<C: Coeff>(acc: &mut FxHashMap<Word, C>, w: &Word, c: &C) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(w) {
        Some(v) => v.add_assign(c),
        None => {
            acc.insert(w.clone(), c.clone());
        }
    }
}
