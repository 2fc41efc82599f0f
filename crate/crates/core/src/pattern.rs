//! Pattern containment by backtracking over positions.

use smallvec::SmallVec;

use crate::perm::Permutation;

const NONE: u8 = u8::MAX;

/// A needle preprocessed for repeated containment queries.
///
/// For each needle index `k`, `lower[k]` is the earlier index holding the
/// largest needle value below `needle[k]` and `upper[k]` the earlier index
/// holding the smallest value above it. A partial match is order-isomorphic
/// iff every new entry lies strictly between the entries matched at those two
/// indices, which is what lets the search prune by value window.
#[derive(Clone, Debug)]
pub struct PatternMatcher {
    needle: SmallVec<[u8; 16]>,
    lower: SmallVec<[u8; 16]>,
    upper: SmallVec<[u8; 16]>,
}

impl PatternMatcher {
    pub fn new(needle: &Permutation) -> Self {
        let v = needle.values();
        let mut lower = SmallVec::with_capacity(v.len());
        let mut upper = SmallVec::with_capacity(v.len());
        for k in 0..v.len() {
            let mut lo = NONE;
            let mut hi = NONE;
            for j in 0..k {
                if v[j] < v[k] && (lo == NONE || v[j] > v[lo as usize]) {
                    lo = j as u8;
                }
                if v[j] > v[k] && (hi == NONE || v[j] < v[hi as usize]) {
                    hi = j as u8;
                }
            }
            lower.push(lo);
            upper.push(hi);
        }
        PatternMatcher { needle: v.into(), lower, upper }
    }

    pub fn len(&self) -> usize {
        self.needle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.needle.is_empty()
    }

    /// True if some subsequence of `hay` (distinct entries) matches the needle.
    pub fn occurs_in<T: Ord + Copy>(&self, hay: &[T]) -> bool {
        let k = self.len();
        if k == 0 {
            return true;
        }
        if k > hay.len() {
            return false;
        }
        let mut chosen: SmallVec<[T; 16]> = SmallVec::with_capacity(k);
        self.extend(hay, 0, &mut chosen, None)
    }

    /// True if an occurrence uses the last entry of `hay` as the last needle entry.
    ///
    /// When a sequence grows one entry at a time and avoided the needle before,
    /// this is exactly the question of whether it contains the needle now.
    pub fn occurs_ending_at_last<T: Ord + Copy>(&self, hay: &[T]) -> bool {
        let k = self.len();
        if k == 0 {
            return true;
        }
        let Some((&last, rest)) = hay.split_last() else {
            return false;
        };
        if k - 1 > rest.len() {
            return false;
        }
        let mut chosen: SmallVec<[T; 16]> = SmallVec::with_capacity(k);
        self.extend(rest, 0, &mut chosen, Some(last))
    }

    /// Whether `x` can extend a partial match `chosen` by one entry.
    pub(crate) fn fits_next<T: Ord + Copy>(&self, x: T, chosen: &[T]) -> bool {
        self.fits(chosen.len(), x, chosen)
    }

    fn fits<T: Ord + Copy>(&self, idx: usize, x: T, chosen: &[T]) -> bool {
        let lo = self.lower[idx];
        let hi = self.upper[idx];
        (lo == NONE || chosen[lo as usize] < x) && (hi == NONE || x < chosen[hi as usize])
    }

    /// Matches needle entries `chosen.len()..` inside `hay[from..]`. With `last`
    /// set, the final needle entry is pinned to that value and the other
    /// entries must sit on the correct side of it.
    fn extend<T: Ord + Copy>(
        &self,
        hay: &[T],
        from: usize,
        chosen: &mut SmallVec<[T; 16]>,
        last: Option<T>,
    ) -> bool {
        let idx = chosen.len();
        let k = self.len();
        let open = if last.is_some() { k - 1 } else { k };
        if idx == open {
            return match last {
                Some(x) => self.fits(k - 1, x, chosen),
                None => true,
            };
        }
        let need = open - idx;
        for i in from..=hay.len() - need {
            let x = hay[i];
            if !self.fits(idx, x, chosen) {
                continue;
            }
            if let Some(l) = last {
                if (x < l) != (self.needle[idx] < self.needle[k - 1]) {
                    continue;
                }
            }
            chosen.push(x);
            if self.extend(hay, i + 1, chosen, last) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// True iff some subsequence of `haystack` is order-isomorphic to `needle`.
pub fn contains(haystack: &Permutation, needle: &Permutation) -> bool {
    PatternMatcher::new(needle).occurs_in(haystack.values())
}

/// True iff `p` contains none of the basis elements.
pub fn avoids_all<'a, I>(p: &Permutation, basis: I) -> bool
where
    I: IntoIterator<Item = &'a Permutation>,
{
    basis.into_iter().all(|b| !contains(p, b))
}
