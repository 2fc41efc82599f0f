use std::collections::BTreeSet;

use pqclass_core::*;
use proptest::prelude::*;

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn perm_strategy(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn distinct_strategy(max: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::btree_set(-1000i64..1000, 0..=max)
        .prop_flat_map(|s| Just(s.into_iter().collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #[test]
    fn pattern_of_is_idempotent(v in distinct_strategy(8)) {
        let once = pattern_of(&PointSequence::new(v).unwrap()).unwrap();
        let as_seq = PointSequence::new(once.values().iter().map(|&x| i64::from(x)).collect()).unwrap();
        prop_assert_eq!(pattern_of(&as_seq).unwrap(), once);
    }

    #[test]
    fn containment_is_a_partial_order(a in perm_strategy(6), b in perm_strategy(6), c in perm_strategy(6)) {
        prop_assert!(a.contains(&a));
        if a.len() == b.len() && a.contains(&b) && b.contains(&a) {
            prop_assert_eq!(&a, &b);
        }
        if a.contains(&b) && b.contains(&c) {
            prop_assert!(a.contains(&c));
        }
    }

    #[test]
    fn sums_contain_their_parts(a in perm_strategy(5), b in perm_strategy(5)) {
        let s = a.direct_sum(&b);
        let k = a.skew_sum(&b);
        prop_assert_eq!(s.len(), a.len() + b.len());
        prop_assert_eq!(k.len(), a.len() + b.len());
        for whole in [&s, &k] {
            prop_assert!(whole.contains(&a) && whole.contains(&b));
        }
    }

    #[test]
    fn text_round_trip(q in perm_strategy(12)) {
        let text = q.to_string();
        prop_assert_eq!(text.parse::<Permutation>().unwrap(), q.clone());
        prop_assert_eq!(text.contains(' '), q.len() > 9);
    }

    #[test]
    fn covers_add_one_inversion(q in perm_strategy(8)) {
        for up in q.weak_covers_up() {
            prop_assert_eq!(up.inversions(), q.inversions() + 1);
        }
    }

    #[test]
    fn extensions_are_allowable_inputs(t in perm_strategy(7)) {
        let poset = build_poset(&t);
        for e in poset.linear_extensions().take(200) {
            let pair = PermutationPair::new(e, t.clone()).unwrap();
            prop_assert!(is_allowable_sim(&pair));
        }
    }
}

#[test]
fn deletions_are_contained() {
    for n in 1..=7 {
        for q in all_permutations(n) {
            for i in 1..=n {
                let d = q.delete_point(i).unwrap();
                assert_eq!(d.len(), n - 1);
                assert!(q.contains(&d));
            }
        }
    }
}

#[test]
fn allowable_relation_is_downward_closed() {
    for n in 1..=5 {
        for s in all_permutations(n) {
            for t in all_outputs(&s) {
                let pair = PermutationPair::new(s.clone(), t.clone()).unwrap();
                for mask in 0u32..(1 << n) {
                    let set: Vec<i64> = (1..=n as i64).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                    let small = PermutationPair::new(
                        s.restrict_to_values(&set).unwrap().pattern().unwrap(),
                        t.restrict_to_values(&set).unwrap().pattern().unwrap(),
                    )
                    .unwrap();
                    assert!(pair_contains(&pair, &small));
                    assert!(is_allowable_sim(&small), "{s} {t} restricted to {set:?}");
                }
            }
        }
    }
}

#[test]
fn outputs_contain_input() {
    for n in 0..=6 {
        for s in all_permutations(n) {
            assert!(all_outputs(&s).contains(&s));
        }
    }
}

#[test]
fn decreasing_input_behaves_like_a_stack() {
    let av132 = PatternClass::new([p("132")]);
    for n in 0..=7 {
        let outs = all_outputs(&Permutation::decreasing(n));
        let direct: BTreeSet<_> = av132.members(n).collect();
        assert_eq!(outs.len(), direct.len(), "n = {n}");
        assert_eq!(outs, direct);
    }
}

#[test]
fn extensions_equal_machine_inputs() {
    for n in 0..=6 {
        for t in all_permutations(n) {
            let ext: BTreeSet<_> = build_poset(&t).linear_extensions().collect();
            let sim: BTreeSet<_> = all_permutations(n)
                .filter(|s| is_allowable_sim(&PermutationPair::new(s.clone(), t.clone()).unwrap()))
                .collect();
            assert_eq!(ext, sim, "tau = {t}");
        }
    }
}

#[test]
fn extension_counts_match_pair_counts() {
    // frozen from brute force over all_outputs: (n + 1)^(n - 1)
    let want = [1usize, 1, 3, 16, 125, 1296];
    for (n, &count) in want.iter().enumerate() {
        let by_poset: usize =
            all_permutations(n).map(|t| build_poset(&t).count_linear_extensions()).sum();
        let by_machine: usize = all_permutations(n).map(|s| all_outputs(&s).len()).sum();
        assert_eq!(by_poset, count, "n = {n}");
        assert_eq!(by_machine, count, "n = {n}");
    }
}

#[test]
fn dual_range_is_enforced() {
    let c = PatternClass::new([p("123")]);
    assert!(in_ac(&Permutation::identity(MAX_DUAL_LEN), &c).is_ok());
    assert_eq!(
        in_ac(&Permutation::identity(MAX_DUAL_LEN + 1), &c),
        Err(Error::OutOfSupportedRange { len: MAX_DUAL_LEN + 1, max: MAX_DUAL_LEN })
    );
}
