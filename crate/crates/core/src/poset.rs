//! The poset `P(τ)` whose linear extensions are the allowable inputs for output `τ`.
//!
//! `x ≺ y` when `x` precedes `y` in `τ` and either `x > y`, or some entry
//! between them is larger than `y`.

use alloc::vec::Vec;

use crate::machine::PermutationPair;
use crate::pattern::PatternMatcher;
use crate::perm::{Permutation, Values};

/// Square boolean matrix stored as rows of 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix { n, words, bits: alloc::vec![0; n * words] }
    }

    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    fn or_row_into(&mut self, src: usize, dst: usize) {
        for w in 0..self.words {
            let v = self.bits[src * self.words + w];
            self.bits[dst * self.words + w] |= v;
        }
    }

    fn transitive_closure(&self) -> BitMatrix {
        let mut m = self.clone();
        for k in 0..m.n {
            for i in 0..m.n {
                if m.get(i, k) {
                    m.or_row_into(k, i);
                }
            }
        }
        m
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |r| (0..self.n).filter(move |&c| self.get(r, c)).map(move |c| (r, c)))
    }

    fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// `P(τ)` over the values of `τ`.
///
/// Holds the relation as built plus its transitive closure; both are indexed
/// by value. Chain searches use the closure, extension enumeration the
/// stored relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TauPoset {
    tau: Permutation,
    direct: BitMatrix,
    closure: BitMatrix,
}

impl TauPoset {
    fn from_relation(tau: &Permutation, direct: BitMatrix) -> Self {
        let closure = direct.transitive_closure();
        TauPoset { tau: tau.clone(), direct, closure }
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    /// `x ≺ y` in the stored relation (values are 1-based).
    pub fn relates(&self, x: u8, y: u8) -> bool {
        self.direct.get(x as usize - 1, y as usize - 1)
    }

    /// `x ≺ y` after transitive closure.
    pub fn precedes(&self, x: u8, y: u8) -> bool {
        self.closure.get(x as usize - 1, y as usize - 1)
    }

    /// Stored constraints `(x, y)`, sorted by `x` then `y`.
    pub fn constraints(&self) -> Vec<(u8, u8)> {
        self.direct.pairs().map(|(r, c)| (r as u8 + 1, c as u8 + 1)).collect()
    }

    /// Constraints of the transitive closure, sorted by `x` then `y`.
    pub fn closed_constraints(&self) -> Vec<(u8, u8)> {
        self.closure.pairs().map(|(r, c)| (r as u8 + 1, c as u8 + 1)).collect()
    }

    pub fn same_closure(&self, other: &TauPoset) -> bool {
        self.closure == other.closure
    }

    pub fn is_linear_extension(&self, order: &[u8]) -> bool {
        let n = self.len();
        if order.len() != n {
            return false;
        }
        let mut rank = alloc::vec![usize::MAX; n + 1];
        for (i, &v) in order.iter().enumerate() {
            if v == 0 || v as usize > n || rank[v as usize] != usize::MAX {
                return false;
            }
            rank[v as usize] = i;
        }
        self.direct.pairs().all(|(x, y)| rank[x + 1] < rank[y + 1])
    }

    /// Every linear extension, as value sequences in lexicographic order.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions::new(self)
    }

    pub fn count_linear_extensions(&self) -> usize {
        self.linear_extensions().count()
    }

    /// True iff the closure has a chain whose values, read in chain order, form `alpha`.
    pub fn has_alpha_chain(&self, alpha: &Permutation) -> bool {
        let k = alpha.len();
        if k == 0 {
            return true;
        }
        if k > self.len() {
            return false;
        }
        let matcher = PatternMatcher::new(alpha);
        let mut chain: Values = Values::new();
        (1..=self.len() as u8).any(|start| {
            chain.clear();
            chain.push(start);
            self.extend_chain(&matcher, &mut chain)
        })
    }

    fn extend_chain(&self, matcher: &PatternMatcher, chain: &mut Values) -> bool {
        if chain.len() == matcher.len() {
            return true;
        }
        let last = *chain.last().unwrap() as usize - 1;
        let row = self.closure.row(last);
        for next in 0..self.len() {
            if row[next / 64] >> (next % 64) & 1 == 0 {
                continue;
            }
            let v = next as u8 + 1;
            if !matcher.fits_next(v, chain) {
                continue;
            }
            chain.push(v);
            if self.extend_chain(matcher, chain) {
                return true;
            }
            chain.pop();
        }
        false
    }

    /// True iff some linear extension avoids every basis element.
    ///
    /// Depth-first over extensions in lexicographic order. A prefix is
    /// abandoned as soon as it contains a basis element: only occurrences that
    /// end at the newly placed value need checking, since the shorter prefix
    /// already avoided everything.
    pub fn exists_extension_avoiding(&self, basis: &[Permutation]) -> bool {
        if basis.iter().any(Permutation::is_empty) {
            return false;
        }
        let matchers: Vec<PatternMatcher> = basis.iter().map(PatternMatcher::new).collect();
        let mut walk = Walk::new(self);
        walk.search(&mut |prefix| matchers.iter().all(|m| !m.occurs_ending_at_last(prefix)))
    }

    /// Number of stored constraints.
    pub fn relation_size(&self) -> usize {
        self.direct.count()
    }
}

/// Decides allowability: the input must be a linear extension of `P(output)`.
pub fn is_allowable_poset(p: &PermutationPair) -> bool {
    build_poset(&p.output).is_linear_extension(p.input.values())
}

/// Builds `P(τ)` from the two local rules.
pub fn build_poset(tau: &Permutation) -> TauPoset {
    let v = tau.values();
    let n = v.len();
    let mut rel = BitMatrix::new(n);
    for i in 0..n {
        let x = v[i];
        let mut between_max = 0u8;
        for &y in &v[i + 1..] {
            if x > y || between_max > y {
                rel.set(x as usize - 1, y as usize - 1);
            }
            between_max = between_max.max(y);
        }
    }
    TauPoset::from_relation(tau, rel)
}

/// Builds `P(τ)` by splitting `τ = α n β` at its maximum and recursing.
///
/// Agrees with [`build_poset`] up to transitive closure.
pub fn build_poset_recursive(tau: &Permutation) -> TauPoset {
    let mut rel = BitMatrix::new(tau.len());
    split_at_max(tau.values(), &mut rel);
    TauPoset::from_relation(tau, rel)
}

fn split_at_max(seq: &[u8], rel: &mut BitMatrix) {
    let Some(at) = seq.iter().enumerate().max_by_key(|&(_, &v)| v).map(|(i, _)| i) else {
        return;
    };
    let (before, rest) = seq.split_at(at);
    let (top, after) = rest.split_first().unwrap();
    for &b in after {
        rel.set(*top as usize - 1, b as usize - 1);
        for &a in before {
            rel.set(a as usize - 1, b as usize - 1);
        }
    }
    split_at_max(before, rel);
    split_at_max(after, rel);
}

/// Incremental depth-first state shared by enumeration and avoidance search.
struct Walk {
    n: usize,
    succ: Vec<Vec<u8>>,
    indeg: Vec<u32>,
    placed: Vec<bool>,
    prefix: Values,
}

impl Walk {
    fn new(p: &TauPoset) -> Self {
        let n = p.len();
        let mut succ = alloc::vec![Vec::new(); n + 1];
        let mut indeg = alloc::vec![0u32; n + 1];
        for (x, y) in p.direct.pairs() {
            succ[x + 1].push(y as u8 + 1);
            indeg[y + 1] += 1;
        }
        Walk { n, succ, indeg, placed: alloc::vec![false; n + 1], prefix: Values::new() }
    }

    fn available(&self, v: u8) -> bool {
        !self.placed[v as usize] && self.indeg[v as usize] == 0
    }

    fn place(&mut self, v: u8) {
        self.placed[v as usize] = true;
        for &w in &self.succ[v as usize] {
            self.indeg[w as usize] -= 1;
        }
        self.prefix.push(v);
    }

    fn unplace(&mut self) -> u8 {
        let v = self.prefix.pop().unwrap();
        self.placed[v as usize] = false;
        for &w in &self.succ[v as usize] {
            self.indeg[w as usize] += 1;
        }
        v
    }

    /// Depth-first search for a complete extension whose every prefix passes `ok`.
    fn search(&mut self, ok: &mut impl FnMut(&[u8]) -> bool) -> bool {
        if self.prefix.len() == self.n {
            return true;
        }
        for v in 1..=self.n as u8 {
            if !self.available(v) {
                continue;
            }
            self.place(v);
            if ok(&self.prefix) && self.search(ok) {
                return true;
            }
            self.unplace();
        }
        false
    }
}

/// Iterator over linear extensions; see [`TauPoset::linear_extensions`].
pub struct LinearExtensions<'a> {
    walk: Walk,
    // last value tried at each depth, 0 when none
    tried: Vec<u8>,
    started: bool,
    _poset: core::marker::PhantomData<&'a TauPoset>,
}

impl<'a> LinearExtensions<'a> {
    fn new(p: &'a TauPoset) -> Self {
        let n = p.len();
        LinearExtensions {
            walk: Walk::new(p),
            tried: alloc::vec![0; n + 1],
            started: false,
            _poset: core::marker::PhantomData,
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let n = self.walk.n;
        if self.started {
            if self.walk.prefix.is_empty() {
                return None;
            }
            self.walk.unplace();
        }
        self.started = true;
        loop {
            let d = self.walk.prefix.len();
            if d == n {
                return Some(Permutation::from_values_unchecked(self.walk.prefix.clone()));
            }
            let from = self.tried[d] + 1;
            match (from..=n as u8).find(|&v| self.walk.available(v)) {
                Some(v) => {
                    self.tried[d] = v;
                    self.tried[d + 1] = 0;
                    self.walk.place(v);
                }
                None => {
                    if d == 0 {
                        // park in a state that yields None next time
                        return None;
                    }
                    self.walk.unplace();
                }
            }
        }
    }
}
