//! One test per acceptance criterion, each printing a single PASS/FAIL line.
//! Run with `cargo test -p pqclass --test acceptance -- --nocapture` to see them.

use pqclass::{run_suite, Suite, SuiteOptions};

fn criterion(number: u32, title: &str, suite: Suite) {
    let result = run_suite(suite, &SuiteOptions::default()).expect("suite runs");
    let passed = result.checks.iter().filter(|c| c.passed).count();
    let verdict = if result.passed() { "PASS" } else { "FAIL" };
    println!(
        "{verdict} criterion {number}: {title} ({passed}/{} checks, {:.2}s)",
        result.checks.len(),
        result.elapsed.as_secs_f64()
    );
    assert!(result.passed(), "{result}");
}

#[test]
fn criterion_1_allowable_pair_equivalence() {
    criterion(1, "three allowability deciders agree", Suite::PairsEquivalence);
}

#[test]
fn criterion_2_single_pattern_bases() {
    criterion(2, "bases of Av(alpha)A for |alpha| = 3", Suite::Singles);
}

#[test]
fn criterion_3_chain_test_membership() {
    criterion(3, "alpha-chain test decides Av(alpha)A membership", Suite::Theorem6);
}

#[test]
fn criterion_4_two_element_bases() {
    criterion(4, "bases of C·A for two-element bases", Suite::Table1);
}

#[test]
fn criterion_5_three_element_bases() {
    criterion(5, "bases of C·A for three-element bases", Suite::Triples);
}

#[test]
fn criterion_6_infinite_antichain() {
    criterion(6, "Av(2431)A family members are basis elements", Suite::Family);
}

#[test]
fn criterion_7_weak_closure() {
    criterion(7, "weak-order closure and descending classes", Suite::WeakDescending);
}

#[test]
fn criterion_8_dual_classes() {
    criterion(8, "input classes A·C", Suite::Dual);
}

#[test]
fn criterion_9_structural_properties() {
    criterion(9, "closure, witness, poset and weak-order properties", Suite::Properties);
}
