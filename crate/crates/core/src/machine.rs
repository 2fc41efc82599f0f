//! The priority queue as a machine, and two deciders for the allowable relation.
//!
//! A third decider, through linear extensions of `P(τ)`, lives in [`crate::poset`].

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use smallvec::SmallVec;

use crate::error::Error;
use crate::perm::{pattern_of_distinct, Permutation, Values};
use crate::Result;

/// A priority-queue configuration part way through a run.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PQState {
    pub contents: BTreeSet<u8>,
    pub remaining_input: Vec<u8>,
    pub output_so_far: Vec<u8>,
}

impl PQState {
    /// Empty queue about to read `input`.
    pub fn start(input: &Permutation) -> Self {
        PQState {
            contents: BTreeSet::new(),
            remaining_input: input.values().to_vec(),
            output_so_far: Vec::new(),
        }
    }

    /// Moves the next input value into the queue.
    pub fn step_insert(&self) -> Result<PQState> {
        let (&next, rest) = self
            .remaining_input
            .split_first()
            .ok_or(Error::InvalidTransition("insert with no remaining input"))?;
        let mut s = self.clone();
        s.contents.insert(next);
        s.remaining_input = rest.to_vec();
        Ok(s)
    }

    /// Emits the smallest value in the queue.
    pub fn step_remove_min(&self) -> Result<PQState> {
        let mut s = self.clone();
        let min = s
            .contents
            .pop_first()
            .ok_or(Error::InvalidTransition("remove from an empty queue"))?;
        s.output_so_far.push(min);
        Ok(s)
    }

    pub fn is_finished(&self) -> bool {
        self.contents.is_empty() && self.remaining_input.is_empty()
    }
}

/// An (input, output) pair of equal-length permutations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationPair {
    pub input: Permutation,
    pub output: Permutation,
}

impl PermutationPair {
    pub fn new(input: Permutation, output: Permutation) -> Result<Self> {
        if input.len() != output.len() {
            return Err(Error::LengthMismatch { left: input.len(), right: output.len() });
        }
        Ok(PermutationPair { input, output })
    }

    pub fn len(&self) -> usize {
        self.input.len()
    }

    pub fn is_empty(&self) -> bool {
        self.input.is_empty()
    }
}

/// Every output a priority queue can produce from `input`.
pub fn all_outputs(input: &Permutation) -> BTreeSet<Permutation> {
    let values = input.values();
    let n = values.len();
    let mut outputs = BTreeSet::new();
    // (input position, output so far) determines the queue contents
    let mut visited: BTreeSet<(usize, Values)> = BTreeSet::new();
    let mut stack: Vec<(usize, Values)> = alloc::vec![(0, Values::new())];
    while let Some((pos, out)) = stack.pop() {
        if !visited.insert((pos, out.clone())) {
            continue;
        }
        if out.len() == n {
            outputs.insert(Permutation::from_values_unchecked(out));
            continue;
        }
        if pos < n {
            stack.push((pos + 1, out.clone()));
        }
        if let Some(min) = queue_min(&values[..pos], &out) {
            let mut next = out;
            next.push(min);
            stack.push((pos, next));
        }
    }
    outputs
}

fn queue_min(read: &[u8], emitted: &[u8]) -> Option<u8> {
    read.iter().copied().filter(|v| !emitted.contains(v)).min()
}

/// Decides allowability by running the machine towards the required output.
///
/// Removals are only explored when the queue minimum is the next value the
/// output needs; a queue whose minimum is smaller than that value can never
/// recover, so such states are dropped.
pub fn is_allowable_sim(p: &PermutationPair) -> bool {
    let input = p.input.values();
    let target = p.output.values();
    let n = input.len();
    if target.len() != n {
        return false;
    }
    // state: (input position, number emitted); the queue holds input[..pos] minus target[..emitted]
    let mut stack: SmallVec<[(usize, usize); 32]> = SmallVec::new();
    stack.push((0, 0));
    let mut seen = BTreeSet::new();
    while let Some((pos, emitted)) = stack.pop() {
        if emitted == n {
            return true;
        }
        if !seen.insert((pos, emitted)) {
            continue;
        }
        let needed = target[emitted];
        let min = queue_min(&input[..pos], &target[..emitted]);
        match min {
            Some(m) if m < needed => continue,
            Some(m) if m == needed => stack.push((pos, emitted + 1)),
            _ => {}
        }
        if pos < n {
            stack.push((pos + 1, emitted));
        }
    }
    false
}

/// True iff some value set `S` restricts `big` to a pair isomorphic to `small`.
pub fn pair_contains(big: &PermutationPair, small: &PermutationPair) -> bool {
    let n = big.len();
    let k = small.len();
    if k > n {
        return false;
    }
    if k == 0 {
        return true;
    }
    let in_pos = big.input.positions();
    let out_pos = big.output.positions();
    let mut subset: SmallVec<[usize; 16]> = (1..=k).collect();
    loop {
        if restricted_pattern(&subset, &in_pos) == small.input
            && restricted_pattern(&subset, &out_pos) == small.output
        {
            return true;
        }
        if !next_subset(&mut subset, n) {
            return false;
        }
    }
}

/// Pattern of the subsequence made of `values`, read in positional order.
fn restricted_pattern(values: &[usize], pos: &[usize]) -> Permutation {
    let mut by_pos: SmallVec<[(usize, usize); 16]> = values.iter().map(|&v| (pos[v], v)).collect();
    by_pos.sort_unstable();
    let seq: SmallVec<[usize; 16]> = by_pos.iter().map(|&(_, v)| v).collect();
    pattern_of_distinct(&seq)
}

/// Advances an increasing k-subset of `1..=n` in lexicographic order.
fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    let mut i = k;
    while i > 0 && s[i - 1] == n - (k - i) {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    s[i - 1] += 1;
    for j in i..k {
        s[j] = s[j - 1] + 1;
    }
    true
}

/// Decides allowability by the two forbidden pairs `(12, 21)` and `(321, 132)`.
pub fn is_allowable_forbidden(p: &PermutationPair) -> bool {
    if p.input.len() != p.output.len() {
        return false;
    }
    !forbidden_pairs().iter().any(|f| pair_contains(p, f))
}

fn forbidden_pairs() -> [PermutationPair; 2] {
    let mk = |a: &[u8], b: &[u8]| PermutationPair {
        input: Permutation::try_from(a).unwrap(),
        output: Permutation::try_from(b).unwrap(),
    };
    [mk(&[1, 2], &[2, 1]), mk(&[3, 2, 1], &[1, 3, 2])]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pair(a: &str, b: &str) -> PermutationPair {
        PermutationPair::new(p(a), p(b)).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Permutation> {
        items.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn machine_steps() {
        let s = PQState {
            contents: [2].into_iter().collect(),
            remaining_input: alloc::vec![1],
            output_so_far: alloc::vec![],
        };
        let s = s.step_insert().unwrap();
        assert_eq!(s.contents, [1, 2].into_iter().collect());
        let s = s.step_remove_min().unwrap();
        assert_eq!(s.output_so_far, alloc::vec![1]);
        assert!(s.step_insert().is_err());
        let empty = PQState::start(&p("1"));
        assert!(empty.step_remove_min().is_err());
        let done = empty.step_insert().unwrap().step_remove_min().unwrap();
        assert!(done.is_finished());
    }

    #[test]
    fn output_examples() {
        assert_eq!(all_outputs(&p("12")), set(&["12"]));
        assert_eq!(all_outputs(&p("21")), set(&["12", "21"]));
        let mut s3: BTreeSet<_> = all_permutations(3).collect();
        s3.remove(&p("132"));
        assert_eq!(all_outputs(&p("321")), s3);
        assert_eq!(all_outputs(&Permutation::empty()), set(&["()"]));
    }

    #[test]
    fn sim_examples() {
        for s in all_permutations(5) {
            assert!(is_allowable_sim(&PermutationPair::new(s.clone(), s).unwrap()));
        }
        assert!(!is_allowable_sim(&pair("12", "21")));
        assert!(!is_allowable_sim(&pair("321", "132")));
        assert!(is_allowable_sim(&pair("21", "12")));
    }

    #[test]
    fn pair_containment_examples() {
        assert!(pair_contains(&pair("132", "231"), &pair("12", "21")));
        assert!(!pair_contains(&pair("231", "213"), &pair("12", "21")));
        assert!(pair_contains(&pair("4132", "1432"), &pair("4132", "1432")));
        assert!(PermutationPair::new(p("12"), p("1")).is_err());
    }

    #[test]
    fn forbidden_examples() {
        assert!(!is_allowable_forbidden(&pair("12", "21")));
        assert!(is_allowable_forbidden(&pair("4132", "4132")));
        assert!(!is_allowable_forbidden(&pair("132", "231")));
    }

    #[test]
    fn sim_agrees_with_output_sets() {
        for n in 0..=5 {
            for s in all_permutations(n) {
                let outs = all_outputs(&s);
                for t in all_permutations(n) {
                    let pr = PermutationPair::new(s.clone(), t.clone()).unwrap();
                    assert_eq!(is_allowable_sim(&pr), outs.contains(&t), "{s} {t}");
                }
            }
        }
    }

    #[test]
    fn allowable_pair_counts() {
        // brute-force fixture: 1, 3, 16, 125, 1296 pairs at n = 1..5
        let counts: Vec<usize> = (1..=5)
            .map(|n| all_permutations(n).map(|s| all_outputs(&s).len()).sum())
            .collect();
        assert_eq!(counts, alloc::vec![1, 3, 16, 125, 1296]);
    }
}
