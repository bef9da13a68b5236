//! Cross-module identities: every named check at the three smallest even
//! ranks, plus the identifications tying seeds, friezes, and continuants
//! together.

use qfrieze_core::frieze::frieze_of_variables;
use qfrieze_core::seed::{one_step_mutated_variable, QuantumSeed};
use qfrieze_core::verify::{run_check, run_suite, DEFAULT_CHECKS, OPTIONAL_CHECKS};

#[test]
fn default_suite_passes_at_small_even_ranks() {
    for n in [2usize, 4, 6] {
        let report = run_suite(n, None).unwrap();
        assert_eq!(report.checks().len(), DEFAULT_CHECKS.len());
        for check in report.checks() {
            assert!(
                check.passed(),
                "n = {n}, check '{}' failed: {:?}",
                check.name(),
                check.failures()
            );
        }
    }
}

#[test]
fn optional_checks_pass_at_small_even_ranks() {
    for n in [2usize, 4, 6] {
        for name in OPTIONAL_CHECKS {
            let report = run_check(n, name).unwrap();
            assert!(report.passed(), "n = {n}, check '{name}' failed: {:?}", report.failures());
        }
    }
}

#[test]
fn first_frieze_row_consists_of_one_step_mutations() {
    for n in [2usize, 4, 6] {
        let grid = frieze_of_variables(n, 0, n as i64).unwrap();
        for j in 1..=n {
            assert_eq!(
                grid.get(1, j as i64).unwrap(),
                &one_step_mutated_variable(n, j).unwrap(),
                "f(1, {j}) at n = {n}"
            );
        }
    }
}

#[test]
fn first_frieze_column_appears_along_the_standard_sequence() {
    for n in [2usize, 4, 6] {
        let grid = frieze_of_variables(n, 0, 1).unwrap();
        let seed = QuantumSeed::initial(n).unwrap();
        let mut current = seed;
        for i in 1..=n {
            current = current.mutate(i).unwrap();
            assert_eq!(
                current.variable(i),
                grid.get(i, 1).unwrap(),
                "variable {i} after μ_1…μ_{i} at n = {n}"
            );
        }
    }
}

#[test]
fn mutation_sequences_unwind_exactly() {
    let seed = QuantumSeed::initial(4).unwrap();
    let path = [1usize, 2, 3, 4, 3, 2];
    let there = seed.mutate_sequence(&path).unwrap();
    let back: Vec<usize> = path.iter().rev().copied().collect();
    assert_eq!(there.mutate_sequence(&back).unwrap(), seed);
}
