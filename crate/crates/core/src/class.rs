//! Pattern classes and membership in the output class `C·A` and input class `A·C`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::machine::{all_outputs, is_allowable_sim, PermutationPair};
use crate::pattern::avoids_all;
use crate::perm::{all_permutations, pattern_of_distinct, Permutation};
use crate::poset::build_poset;
use crate::Result;

/// Largest input length [`in_ac`] will materialize output sets for.
pub const MAX_DUAL_LEN: usize = 10;

/// `Av(B)` for a finite basis `B`.
///
/// The constructor reduces `B` to an antichain by dropping every element that
/// contains another, and keeps it sorted by length then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PatternClass {
    basis: Vec<Permutation>,
}

impl PatternClass {
    pub fn new<I: IntoIterator<Item = Permutation>>(basis: I) -> Self {
        let mut all: Vec<Permutation> = basis.into_iter().collect();
        all.sort_by(Permutation::shortlex_cmp);
        all.dedup();
        let mut kept: Vec<Permutation> = Vec::with_capacity(all.len());
        for b in all {
            if kept.iter().all(|k| !b.contains(k)) {
                kept.push(b);
            }
        }
        PatternClass { basis: kept }
    }

    /// The class of all permutations.
    pub fn everything() -> Self {
        PatternClass::default()
    }

    pub fn basis(&self) -> &[Permutation] {
        &self.basis
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        class_member(p, self)
    }

    /// Members of length `n`, in lexicographic order.
    pub fn members(&self, n: usize) -> impl Iterator<Item = Permutation> + '_ {
        all_permutations(n).filter(move |p| self.contains(p))
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Av(")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

pub fn class_member(p: &Permutation, c: &PatternClass) -> bool {
    avoids_all(p, &c.basis)
}

/// `τ ∈ C·A`: some linear extension of `P(τ)` lies in `C`.
pub fn in_ca(tau: &Permutation, c: &PatternClass) -> bool {
    build_poset(tau).exists_extension_avoiding(&c.basis)
}

/// `τ ∈ C·A` by scanning every input of the same length through the machine.
///
/// Exponential on purpose; it shares nothing with [`in_ca`] beyond containment.
pub fn in_ca_oracle(tau: &Permutation, c: &PatternClass) -> bool {
    all_permutations(tau.len()).any(|sigma| {
        class_member(&sigma, c)
            && is_allowable_sim(&PermutationPair { input: sigma, output: tau.clone() })
    })
}

/// The minimal permutations `W(α)` such that `P(τ)` has an `α`-chain iff `τ`
/// contains a member of `W(α)`.
///
/// A chain `a₁ ≺ ⋯ ≺ a_k` needs, at every ascent `aᵢ < aᵢ₊₁`, a separating
/// entry `bᵢ > aᵢ₊₁` placed between them; descents need nothing. Separator
/// values only matter relative to the chain, so each separator picks a slot
/// above `aᵢ₊₁` among the chain values, and separators sharing a slot try
/// every relative order.
pub fn witness_patterns(alpha: &Permutation) -> BTreeSet<Permutation> {
    let a = alpha.values();
    let k = a.len();
    // separator i sits after chain entry i and must exceed a[i + 1]
    let ascents: Vec<usize> = (0..k.saturating_sub(1)).filter(|&i| a[i] < a[i + 1]).collect();
    let s = ascents.len();
    let mut found = BTreeSet::new();
    let mut slots = alloc::vec![0usize; s];
    loop {
        if slots.iter().zip(&ascents).all(|(&slot, &i)| slot >= a[i + 1] as usize) {
            for tie in all_permutations(s) {
                found.insert(assemble_witness(a, &ascents, &slots, tie.values()));
            }
        }
        // odometer over slots 0..=k
        let mut d = 0;
        while d < s && slots[d] == k {
            slots[d] = 0;
            d += 1;
        }
        if d == s {
            break;
        }
        slots[d] += 1;
    }
    minimal_elements(found)
}

/// Slot `j` lies between chain values `j` and `j + 1`; ties broken by `tie`.
fn assemble_witness(a: &[u8], ascents: &[usize], slots: &[usize], tie: &[u8]) -> Permutation {
    let scale = (ascents.len() + 1) as u32;
    let mut seq: Vec<u32> = Vec::with_capacity(a.len() + ascents.len());
    let mut sep = 0;
    for (i, &v) in a.iter().enumerate() {
        seq.push(u32::from(v) * scale * 2);
        if sep < ascents.len() && ascents[sep] == i {
            seq.push(slots[sep] as u32 * scale * 2 + scale + u32::from(tie[sep]) - 1);
            sep += 1;
        }
    }
    pattern_of_distinct(&seq)
}

fn minimal_elements(set: BTreeSet<Permutation>) -> BTreeSet<Permutation> {
    let all: Vec<Permutation> = set.into_iter().collect();
    all.iter()
        .filter(|p| !all.iter().any(|q| q != *p && q.len() <= p.len() && p.contains(q)))
        .cloned()
        .collect()
}

/// `true` iff `P(τ)` has no `α`-chain. Equals `τ ∈ Av(α)·A` when `|α| = 3`;
/// for longer `α` it is only a necessary condition for membership.
pub fn chain_test_member(tau: &Permutation, alpha: &Permutation) -> bool {
    !build_poset(tau).has_alpha_chain(alpha)
}

/// Bounded weak-closure test: every permutation reachable upward in the weak
/// order from a basis element of length `<= max_len` still contains a basis
/// element.
pub fn is_weak_closed(c: &PatternClass, max_len: usize) -> bool {
    for b in c.basis.iter().filter(|b| b.len() <= max_len) {
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        let mut queue = alloc::collections::VecDeque::new();
        seen.insert(b.clone());
        queue.push_back(b.clone());
        while let Some(p) = queue.pop_front() {
            if class_member(&p, c) {
                return false;
            }
            for up in p.weak_covers_up() {
                if seen.insert(up.clone()) {
                    queue.push_back(up);
                }
            }
        }
    }
    true
}

/// `σ ∈ A·C`: the queue can turn `σ` into some member of `C`.
pub fn in_ac(sigma: &Permutation, c: &PatternClass) -> Result<bool> {
    if sigma.len() > MAX_DUAL_LEN {
        return Err(Error::OutOfSupportedRange { len: sigma.len(), max: MAX_DUAL_LEN });
    }
    Ok(all_outputs(sigma).iter().any(|tau| class_member(tau, c)))
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

    fn set(items: &[&str]) -> BTreeSet<Permutation> {
        items.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn class_normalizes_to_antichain() {
        let c = av(&["1234", "21", "312", "21"]);
        assert_eq!(c.basis(), &[p("21"), p("1234")]);
        assert_eq!(alloc::format!("{c}"), "Av(21, 1234)");
    }

    #[test]
    fn membership_examples() {
        assert!(class_member(&p("2413"), &av(&["2431"])));
        assert!(!class_member(&p("13254"), &av(&["13254", "14253", "15243"])));
        assert!(class_member(&Permutation::empty(), &av(&["1"])));
    }

    #[test]
    fn ca_examples() {
        assert!(!in_ca(&p("1432"), &av(&["132"])));
        assert!(!in_ca(&p("132"), &av(&["12"])));
        for n in 0..=6 {
            assert!(in_ca(&Permutation::identity(n), &av(&["21"])));
        }
        assert!(!in_ca_oracle(&p("1432"), &av(&["132"])));
        assert!(in_ca_oracle(&p("3412"), &PatternClass::everything()));
    }

    #[test]
    fn ca_matches_oracle_for_312() {
        let c = av(&["312"]);
        for n in 0..=6 {
            for t in all_permutations(n) {
                assert_eq!(in_ca(&t, &c), in_ca_oracle(&t, &c), "{t}");
            }
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_patterns(&p("123")), set(&["13254", "14253", "15243"]));
        assert_eq!(witness_patterns(&p("321")), set(&["321"]));
        assert_eq!(witness_patterns(&p("231")), set(&["2431"]));
        assert_eq!(witness_patterns(&p("1")), set(&["1"]));
    }

    #[test]
    fn chain_member_examples() {
        assert!(!chain_test_member(&p("31524"), &p("312")));
        assert!(p("31524").contains(&p("3142")));
        assert!(chain_test_member(&Permutation::identity(7), &p("132")));
        assert!(!chain_test_member(&p("2431"), &p("231")));
    }

    #[test]
    fn weak_closure_examples() {
        assert!(is_weak_closed(&av(&["321"]), 8));
        assert!(!is_weak_closed(&av(&["12"]), 2));
        assert!(is_weak_closed(&av(&["231", "321"]), 7));
        assert!(!is_weak_closed(&av(&["132", "312"]), 7));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(in_ac(&p("123"), &av(&["123"])), Ok(false));
        assert_eq!(in_ac(&p("321"), &av(&["123"])), Ok(true));
        assert_eq!(in_ac(&p("52413"), &av(&["123", "231"])), Ok(true));
        assert!(in_ac(&Permutation::identity(11), &av(&["12"])).is_err());
    }
}
