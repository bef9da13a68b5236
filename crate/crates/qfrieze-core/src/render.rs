//! Plain-text rendering of grids, seeds, continuants, and verification
//! reports.
//!
//! Both frontends (the command-line tool and the browser demo) print these
//! strings verbatim, so the same request always produces byte-identical
//! text. Torus elements render through their `Display` implementation:
//! terms in descending lexicographic order, coefficients in the `q`
//! convention with `ν² = q`.

use crate::frieze::FriezeGrid;
use crate::seed::QuantumSeed;
use crate::torus::TorusElement;
use crate::verify::VerificationReport;

/// Right-aligned bracketed rows, e.g. `[ 0  1]` over `[-1  0]`.
fn matrix_text(rows: &[Vec<i64>], indent: &str) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        out.push_str(indent);
        out.push('[');
        for (t, v) in row.iter().enumerate() {
            if t > 0 {
                out.push(' ');
            }
            out.push_str(&format!("{v:>width$}"));
        }
        out.push_str("]\n");
    }
    out
}

/// One `f(i, j) = …` line per populated entry, column-major.
pub fn frieze_text(grid: &FriezeGrid) -> String {
    let mut out = format!(
        "n = {}, columns {}..={}\n",
        grid.rank(),
        grid.j_min(),
        grid.j_max()
    );
    for (c, value) in grid.entries() {
        out.push_str(&format!("f({}, {}) = {value}\n", c.i, c.j));
    }
    out
}

/// Both matrices row by row, then the cluster.
pub fn seed_text(seed: &QuantumSeed) -> String {
    let mut out = format!("n = {}\n", seed.rank());
    out.push_str("exchange matrix:\n");
    out.push_str(&matrix_text(&seed.exchange_matrix().rows(), "  "));
    out.push_str("compatible form:\n");
    out.push_str(&matrix_text(&seed.lambda().rows(), "  "));
    out.push_str("cluster:\n");
    for (t, y) in seed.cluster().iter().enumerate() {
        out.push_str(&format!("  Y{} = {y}\n", t + 1));
    }
    out
}

/// `P(m, i) = …`.
pub fn continuant_text(m: usize, i: usize, value: &TorusElement) -> String {
    format!("P({m}, {i}) = {value}\n")
}

/// One `[pass]`/`[FAIL]` line per check, with notes in parentheses,
/// failures indented, and the summary last.
pub fn verification_text(report: &VerificationReport) -> String {
    let mut out = format!("n = {}\n", report.rank());
    for check in report.checks() {
        let mark = if check.passed() { "[pass]" } else { "[FAIL]" };
        if check.notes().is_empty() {
            out.push_str(&format!("{mark} {}\n", check.name()));
        } else {
            out.push_str(&format!("{mark} {} ({})\n", check.name(), check.notes().join("; ")));
        }
        for failure in check.failures() {
            out.push_str(&format!("  failure: {failure}\n"));
        }
    }
    out.push_str(&format!("{}\n", report.summary()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::frieze_of_variables;
    use crate::verify::run_suite;

    #[test]
    fn frieze_text_is_column_major_with_q_convention() {
        let grid = frieze_of_variables(2, 0, 1).unwrap();
        assert_eq!(
            frieze_text(&grid),
            "n = 2, columns 0..=1\n\
             f(1, 0) = X^(1,0)\n\
             f(2, 0) = X^(0,1)\n\
             f(1, 1) = X^(-1,1) + X^(-1,0)\n\
             f(2, 1) = X^(0,-1) + X^(-1,0) + X^(-1,-1)\n"
        );
    }

    #[test]
    fn seed_text_shows_matrices_and_cluster() {
        let seed = QuantumSeed::initial(2).unwrap().mutate(1).unwrap();
        assert_eq!(
            seed_text(&seed),
            "n = 2\n\
             exchange matrix:\n\
             \x20 [ 0 -1]\n\
             \x20 [ 1  0]\n\
             compatible form:\n\
             \x20 [ 0 -1]\n\
             \x20 [ 1  0]\n\
             cluster:\n\
             \x20 Y1 = X^(-1,1) + X^(-1,0)\n\
             \x20 Y2 = X^(0,1)\n"
        );
    }

    #[test]
    fn verification_text_has_summary_line() {
        let report = run_suite(2, Some(&["bijection".to_string()])).unwrap();
        let text = verification_text(&report);
        assert!(text.starts_with("n = 2\n[pass] bijection"));
        assert!(text.ends_with("1/1 checks passed\n"));
    }
}
