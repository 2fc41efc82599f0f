//! Bounded search for the basis of `C·A`.

use alloc::vec::Vec;

use crate::class::{in_ca, PatternClass};
use crate::perm::{factorial, Permutation};

/// Maps a function over `0..count`, preserving order.
///
/// The core crate only ships [`Serial`]; a thread-pool implementation plugs in
/// from outside.
pub trait RankMapper {
    fn map_ranks<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send;
}

/// Runs everything on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Serial;

impl RankMapper for Serial {
    fn map_ranks<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        (0..count).map(f).collect()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Candidates looked at, over all lengths.
    pub examined: u64,
    /// Candidates settled by a deletion already outside `C·A`.
    pub pruned: u64,
    /// Candidates that needed the full extension search.
    pub full_tests: u64,
}

/// Basis elements of `C·A` found up to a length bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    /// Sorted by length, then lexicographically.
    pub class_basis_found: Vec<Permutation>,
    /// Every basis element of length `<= complete_up_to` is listed.
    pub complete_up_to: usize,
    pub search_stats: SearchStats,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Member,
    BasisElement,
    /// Some deletion is already outside the class.
    Inherited,
}

/// Serial [`basis_of_ca_with`].
pub fn basis_of_ca(c: &PatternClass, max_len: usize) -> BasisReport {
    basis_of_ca_with(c, max_len, &Serial)
}

/// Lists every `τ` with `|τ| <= max_len` outside `C·A` whose one-point
/// deletions all lie inside it.
///
/// Lengths are processed in order, keeping a membership table indexed by
/// lexicographic rank. A candidate is looked up against the previous table
/// first and only runs the extension search when all its deletions are members.
pub fn basis_of_ca_with<M: RankMapper>(c: &PatternClass, max_len: usize, mapper: &M) -> BasisReport {
    let mut stats = SearchStats::default();
    let mut found = Vec::new();
    let mut previous = alloc::vec![in_ca(&Permutation::empty(), c)];
    if !previous[0] {
        found.push(Permutation::empty());
    }
    for n in 1..=max_len {
        let count = factorial(n);
        let verdicts = mapper.map_ranks(count, |rank| {
            let tau = Permutation::from_lex_rank(n, rank);
            if !tau.deletions().all(|d| previous[d.lex_rank()]) {
                Verdict::Inherited
            } else if in_ca(&tau, c) {
                Verdict::Member
            } else {
                Verdict::BasisElement
            }
        });
        stats.examined += count as u64;
        for (rank, v) in verdicts.iter().enumerate() {
            match v {
                Verdict::Inherited => stats.pruned += 1,
                Verdict::Member => stats.full_tests += 1,
                Verdict::BasisElement => {
                    stats.full_tests += 1;
                    found.push(Permutation::from_lex_rank(n, rank));
                }
            }
        }
        previous = verdicts.into_iter().map(|v| v == Verdict::Member).collect();
    }
    BasisReport { class_basis_found: found, complete_up_to: max_len, search_stats: stats }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn av(items: &[&str]) -> PatternClass {
        PatternClass::new(items.iter().map(|s| p(s)))
    }

    #[test]
    fn principal_examples() {
        let r = basis_of_ca(&av(&["312"]), 7);
        assert_eq!(r.class_basis_found, alloc::vec![p("3142"), p("4132")]);
        assert_eq!(r.complete_up_to, 7);
        assert_eq!(basis_of_ca(&av(&["321"]), 7).class_basis_found, alloc::vec![p("321")]);
        assert_eq!(
            basis_of_ca(&av(&["123"]), 7).class_basis_found,
            alloc::vec![p("13254"), p("14253"), p("15243")]
        );
    }

    #[test]
    fn stats_add_up() {
        let r = basis_of_ca(&av(&["12"]), 6);
        assert_eq!(r.class_basis_found, alloc::vec![p("132")]);
        let s = r.search_stats;
        assert_eq!(s.examined, 1 + 2 + 6 + 24 + 120 + 720);
        assert_eq!(s.pruned + s.full_tests, s.examined);
    }

    #[test]
    fn empty_basis_element() {
        let r = basis_of_ca(&PatternClass::new([Permutation::empty()]), 3);
        assert_eq!(r.class_basis_found, alloc::vec![Permutation::empty()]);
    }
}
