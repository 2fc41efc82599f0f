//! Permutations, point sequences and the constructions built from them.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use smallvec::SmallVec;

use crate::error::Error;
use crate::Result;

/// Inline storage covers every length the searches touch (family members reach 15).
pub(crate) type Values = SmallVec<[u8; 16]>;

/// Largest length representable with byte-sized values.
pub const MAX_LEN: usize = u8::MAX as usize;

/// A permutation of `1..=n` in one-line notation.
///
/// Values are 1-based. The empty permutation is a valid object and is
/// contained in every permutation. The derived `Ord` is lexicographic on the
/// one-line notation; use [`Permutation::shortlex_cmp`] to sort by length first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Values,
}

impl Permutation {
    /// Builds a permutation, checking that `values` is a rearrangement of `1..=n`.
    pub fn new<I>(values: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let raw: Vec<i64> = values.into_iter().map(Into::into).collect();
        let n = raw.len();
        if n > MAX_LEN {
            return Err(Error::TooLong(n));
        }
        let mut seen = [false; MAX_LEN + 1];
        let mut out = Values::with_capacity(n);
        for &v in &raw {
            if v < 1 || v > n as i64 {
                return Err(Error::ValueOutOfRange { value: v, len: n });
            }
            if seen[v as usize] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v as usize] = true;
            out.push(v as u8);
        }
        Ok(Permutation { values: out })
    }

    /// Callers guarantee `values` is a permutation of `1..=len`.
    pub(crate) fn from_values_unchecked(values: Values) -> Self {
        debug_assert!(is_permutation(&values));
        Permutation { values }
    }

    pub fn empty() -> Self {
        Permutation::default()
    }

    /// `12⋯n`
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Permutation { values: (1..=n as u8).collect() }
    }

    /// `n n−1 ⋯ 1`
    pub fn decreasing(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Permutation { values: (1..=n as u8).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Value at a 1-based position.
    pub fn get(&self, position: usize) -> Option<u8> {
        position.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    /// `pos[v]` is the 0-based position of value `v`; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = alloc::vec![0; self.len() + 1];
        for (i, &v) in self.values.iter().enumerate() {
            pos[v as usize] = i;
        }
        pos
    }

    pub fn inverse(&self) -> Self {
        let mut inv = Values::from_elem(0, self.len());
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { values: inv }
    }

    /// Number of position pairs `i < j` with `p[i] > p[j]`.
    pub fn inversions(&self) -> usize {
        let v = &self.values;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&y| y < v[i]).count())
            .sum()
    }

    /// Orders by length, then lexicographically.
    pub fn shortlex_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.values.cmp(&other.values))
    }

    /// True if `needle` is order-isomorphic to some subsequence of `self`.
    pub fn contains(&self, needle: &Permutation) -> bool {
        crate::pattern::contains(self, needle)
    }

    /// Removes the entry at a 1-based position and renormalizes.
    pub fn delete_point(&self, position: usize) -> Result<Permutation> {
        if position == 0 || position > self.len() {
            return Err(Error::PositionOutOfRange { position, len: self.len() });
        }
        Ok(self.delete_index(position - 1))
    }

    pub(crate) fn delete_index(&self, index: usize) -> Permutation {
        let gone = self.values[index];
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &v)| if v > gone { v - 1 } else { v })
            .collect();
        Permutation { values }
    }

    /// All distinct one-point deletions.
    pub fn deletions(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.len()).map(move |i| self.delete_index(i))
    }

    /// The subsequence made of the given values, in positional order.
    pub fn restrict_to_values(&self, value_set: &[i64]) -> Result<PointSequence> {
        let n = self.len();
        let mut keep = alloc::vec![false; n + 1];
        for &v in value_set {
            if v < 1 || v > n as i64 {
                return Err(Error::ValueOutOfRange { value: v, len: n });
            }
            keep[v as usize] = true;
        }
        let entries = self
            .values
            .iter()
            .filter(|&&v| keep[v as usize])
            .map(|&v| i64::from(v))
            .collect();
        Ok(PointSequence { entries })
    }

    /// Upper covers in the weak order: swap each adjacent ascent.
    ///
    /// Every cover has exactly one more inversion than `self`. The transitive
    /// closure of the allowable relation is this order, with the output of a
    /// priority queue lying weakly below its input.
    pub fn weak_covers_up(&self) -> Vec<Permutation> {
        let v = &self.values;
        (0..v.len().saturating_sub(1))
            .filter(|&i| v[i] < v[i + 1])
            .map(|i| {
                let mut values = v.clone();
                values.swap(i, i + 1);
                Permutation { values }
            })
            .collect()
    }

    /// `self ⊕ other`: `other` placed after and above `self`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len() as u8;
        let values = self
            .values
            .iter()
            .copied()
            .chain(other.values.iter().map(|&v| v + shift))
            .collect();
        Permutation { values }
    }

    /// `self ⊖ other`: `other` placed after and below `self`.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let shift = other.len() as u8;
        let values = self
            .values
            .iter()
            .map(|&v| v + shift)
            .chain(other.values.iter().copied())
            .collect();
        Permutation { values }
    }

    /// Lexicographic rank among permutations of the same length.
    pub fn lex_rank(&self) -> usize {
        let n = self.len();
        let v = &self.values;
        let mut rank = 0usize;
        for i in 0..n {
            let smaller_later = v[i + 1..].iter().filter(|&&y| y < v[i]).count();
            rank = rank * (n - i) + smaller_later;
        }
        rank
    }

    /// Inverse of [`Permutation::lex_rank`]. Requires `rank < n!`.
    pub fn from_lex_rank(n: usize, mut rank: usize) -> Permutation {
        let mut digits = Values::from_elem(0, n);
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = (rank % base) as u8;
            rank /= base;
        }
        let mut pool: Values = (1..=n as u8).collect();
        let values = digits.iter().map(|&d| pool.remove(d as usize)).collect();
        Permutation { values }
    }
}

pub(crate) fn is_permutation(values: &[u8]) -> bool {
    let mut seen = [false; MAX_LEN + 1];
    values.iter().all(|&v| {
        let ok = v >= 1 && (v as usize) <= values.len() && !seen[v as usize];
        seen[v as usize] = true;
        ok
    })
}

/// `n!`, saturating.
pub fn factorial(n: usize) -> usize {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)).unwrap_or(usize::MAX)
}

impl fmt::Display for Permutation {
    /// Compact digits when `n <= 9`, space separated otherwise, `()` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        let compact = self.len() <= 9;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `31524`, `3 1 5 2 4` and `()`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" {
            return Ok(Permutation::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse(String::from(s)));
        }
        let mut raw = Vec::new();
        if s.contains(char::is_whitespace) {
            for tok in s.split_whitespace() {
                let v: i64 = tok.parse().map_err(|_| Error::Parse(String::from(tok)))?;
                raw.push(v);
            }
        } else {
            for (i, c) in s.char_indices() {
                match c.to_digit(10) {
                    Some(d) if d > 0 => raw.push(i64::from(d)),
                    _ => return Err(Error::Parse(String::from(&s[i..i + c.len_utf8()]))),
                }
            }
        }
        Permutation::new(raw)
    }
}

impl TryFrom<&[u8]> for Permutation {
    type Error = Error;

    fn try_from(values: &[u8]) -> Result<Self> {
        if values.len() > MAX_LEN {
            return Err(Error::TooLong(values.len()));
        }
        if !is_permutation(values) {
            return Err(Error::NotAPermutation);
        }
        Ok(Permutation { values: values.into() })
    }
}

/// A sequence of pairwise distinct integers, not necessarily `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PointSequence {
    entries: Vec<i64>,
}

impl PointSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateValue(w[0]));
        }
        Ok(PointSequence { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn pattern(&self) -> Result<Permutation> {
        pattern_of(self)
    }
}

/// The permutation order-isomorphic to `s`.
pub fn pattern_of(s: &PointSequence) -> Result<Permutation> {
    if s.len() > MAX_LEN {
        return Err(Error::TooLong(s.len()));
    }
    Ok(pattern_of_distinct(&s.entries))
}

/// Ranks distinct entries; the caller guarantees distinctness and `len <= 255`.
pub(crate) fn pattern_of_distinct<T: Ord + Copy>(entries: &[T]) -> Permutation {
    let mut order: SmallVec<[usize; 16]> = (0..entries.len()).collect();
    order.sort_unstable_by_key(|&i| entries[i]);
    let mut values = Values::from_elem(0, entries.len());
    for (rank, &i) in order.iter().enumerate() {
        values[i] = (rank + 1) as u8;
    }
    Permutation { values }
}

/// What may replace one skeleton entry in an inflation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    /// `I`: a possibly empty increasing run of consecutive values.
    Increasing,
    /// `D`: a possibly empty decreasing run of consecutive values.
    Decreasing,
    /// `1`: exactly one entry.
    Singleton,
}

/// A skeleton permutation with one cell kind per entry, e.g. `52413[D,D,1,D,D]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InflationSkeleton {
    skeleton: Permutation,
    cells: Vec<CellKind>,
}

impl InflationSkeleton {
    pub fn new(skeleton: Permutation, cells: Vec<CellKind>) -> Result<Self> {
        if cells.len() != skeleton.len() {
            return Err(Error::LengthMismatch { left: skeleton.len(), right: cells.len() });
        }
        Ok(InflationSkeleton { skeleton, cells })
    }

    /// Every cell of the same kind.
    pub fn uniform(skeleton: Permutation, kind: CellKind) -> Self {
        let cells = alloc::vec![kind; skeleton.len()];
        InflationSkeleton { skeleton, cells }
    }

    pub fn skeleton(&self) -> &Permutation {
        &self.skeleton
    }

    pub fn cells(&self) -> &[CellKind] {
        &self.cells
    }

    fn mandatory(&self) -> usize {
        self.cells.iter().filter(|&&c| c == CellKind::Singleton).count()
    }
}

/// All length-`n` permutations obtained by inflating the skeleton.
///
/// Run cells may be empty; singleton cells hold exactly one entry. Returns the
/// empty set when `n` is smaller than the number of singleton cells.
pub fn inflation_members(s: &InflationSkeleton, n: usize) -> BTreeSet<Permutation> {
    let mut out = BTreeSet::new();
    if n < s.mandatory() || n > MAX_LEN {
        return out;
    }
    let k = s.cells.len();
    let mut sizes = alloc::vec![0usize; k];
    fill_sizes(s, n, 0, &mut sizes, &mut out);
    out
}

fn fill_sizes(
    s: &InflationSkeleton,
    left: usize,
    cell: usize,
    sizes: &mut Vec<usize>,
    out: &mut BTreeSet<Permutation>,
) {
    let k = s.cells.len();
    if cell == k {
        if left == 0 {
            out.insert(inflate(s, sizes));
        }
        return;
    }
    let remaining_mandatory =
        s.cells[cell + 1..].iter().filter(|&&c| c == CellKind::Singleton).count();
    let range = match s.cells[cell] {
        CellKind::Singleton => 1..=1,
        _ => 0..=left.saturating_sub(remaining_mandatory),
    };
    for size in range {
        if size + remaining_mandatory > left {
            break;
        }
        sizes[cell] = size;
        fill_sizes(s, left - size, cell + 1, sizes, out);
    }
}

fn inflate(s: &InflationSkeleton, sizes: &[usize]) -> Permutation {
    let skel = s.skeleton.values();
    // offset of each block = total size of blocks with smaller skeleton values
    let mut offsets = alloc::vec![0usize; skel.len()];
    for (i, &v) in skel.iter().enumerate() {
        offsets[i] = skel
            .iter()
            .zip(sizes)
            .filter(|&(&w, _)| w < v)
            .map(|(_, &sz)| sz)
            .sum();
    }
    let mut values = Values::new();
    for (i, &kind) in s.cells.iter().enumerate() {
        let lo = offsets[i] as u8;
        let sz = sizes[i] as u8;
        match kind {
            CellKind::Decreasing => values.extend((1..=sz).rev().map(|d| lo + d)),
            _ => values.extend((1..=sz).map(|d| lo + d)),
        }
    }
    Permutation::from_values_unchecked(values)
}

/// Every permutation of `1..=n` exactly once, in lexicographic order.
pub fn all_permutations(n: usize) -> AllPermutations {
    assert!(n <= MAX_LEN);
    AllPermutations { next: Some((1..=n as u8).collect()) }
}

/// Iterator returned by [`all_permutations`].
#[derive(Clone, Debug)]
pub struct AllPermutations {
    next: Option<Values>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { values: current })
    }
}

fn next_lex(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn seq(v: &[i64]) -> PointSequence {
        PointSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pattern_of_examples() {
        assert_eq!(pattern_of(&seq(&[3, 1, 5, 2, 4])).unwrap(), p("31524"));
        // ranks: 7 -> 1, 9 -> 2, 10 -> 3, 11 -> 4, 12 -> 5
        assert_eq!(pattern_of(&seq(&[10, 12, 7, 11, 9])).unwrap(), p("35142"));
        assert_eq!(pattern_of(&seq(&[])).unwrap(), Permutation::empty());
        assert_eq!(PointSequence::new(vec![4, 2, 4]), Err(Error::DuplicateValue(4)));
    }

    #[test]
    fn delete_point_examples() {
        assert_eq!(p("2431").delete_point(2).unwrap(), p("231"));
        assert_eq!(p("1").delete_point(1).unwrap(), Permutation::empty());
        // 3 1 _ 2 4 has pattern 3124
        assert_eq!(p("31524").delete_point(3).unwrap(), p("3124"));
        assert!(p("12").delete_point(0).is_err());
        assert!(p("12").delete_point(3).is_err());
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(p("231").restrict_to_values(&[2, 3]).unwrap().entries(), &[2, 3]);
        assert_eq!(p("31524").restrict_to_values(&[1, 2, 3]).unwrap().entries(), &[3, 1, 2]);
        assert!(p("31524").restrict_to_values(&[]).unwrap().is_empty());
        assert!(p("231").restrict_to_values(&[4]).is_err());
    }

    #[test]
    fn weak_cover_examples() {
        assert_eq!(p("12").weak_covers_up(), vec![p("21")]);
        assert_eq!(p("231").weak_covers_up(), vec![p("321")]);
        assert!(Permutation::decreasing(5).weak_covers_up().is_empty());
    }

    #[test]
    fn sums() {
        assert_eq!(p("1").direct_sum(&p("1")), p("12"));
        assert_eq!(p("21").skew_sum(&p("1")), p("321"));
        assert_eq!(p("12").direct_sum(&p("21")), p("1243"));
    }

    #[test]
    fn inflation_examples() {
        let i3 = InflationSkeleton::uniform(p("213"), CellKind::Increasing);
        let m = inflation_members(&i3, 3);
        assert!(m.contains(&p("213")) && m.contains(&p("123")));
        // 213[I,I,I] is Av(132, 321); compare against filtering
        for n in 0..=6 {
            let want: BTreeSet<_> = all_permutations(n)
                .filter(|q| !q.contains(&p("132")) && !q.contains(&p("321")))
                .collect();
            assert_eq!(inflation_members(&i3, n), want, "n = {n}");
        }

        let d = InflationSkeleton::uniform(p("312"), CellKind::Decreasing);
        let m = inflation_members(&d, 3);
        assert!(m.contains(&p("312")) && m.contains(&p("321")));

        use CellKind::*;
        let s = InflationSkeleton::new(
            p("52413"),
            vec![Decreasing, Decreasing, Singleton, Decreasing, Decreasing],
        )
        .unwrap();
        assert!(inflation_members(&s, 5).contains(&p("52413")));
        assert!(inflation_members(&s, 0).is_empty());
        assert_eq!(inflation_members(&s, 1).into_iter().collect::<Vec<_>>(), vec![p("1")]);
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(all_permutations(0).collect::<Vec<_>>(), vec![Permutation::empty()]);
        assert_eq!(all_permutations(3).count(), 6);
        assert_eq!(all_permutations(5).count(), 120);
        let all: Vec<_> = all_permutations(4).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (r, q) in all.iter().enumerate() {
            assert_eq!(q.lex_rank(), r);
            assert_eq!(&Permutation::from_lex_rank(4, r), q);
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("3 1 5 2 4"), p("31524"));
        assert_eq!(p("31524").to_string(), "31524");
        let long = Permutation::identity(10);
        assert_eq!(long.to_string(), "1 2 3 4 5 6 7 8 9 10");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert_eq!(Permutation::empty().to_string().parse::<Permutation>().unwrap(), Permutation::empty());
        assert_eq!("3a1".parse::<Permutation>(), Err(Error::Parse("a".to_string())));
        assert_eq!("3 1 3".parse::<Permutation>(), Err(Error::DuplicateValue(3)));
        assert!("".parse::<Permutation>().is_err());
        assert!("0".parse::<Permutation>().is_err());
    }

    #[test]
    fn constructor_rejects_non_permutations() {
        assert!(Permutation::new([1i64, 3]).is_err());
        assert!(Permutation::new([2i64, 1, 2]).is_err());
        assert!(Permutation::try_from(&[2u8, 3][..]).is_err());
    }
}
