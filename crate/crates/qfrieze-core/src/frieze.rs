//! Quantum frieze grids of the linearly oriented `A_n` quiver.
//!
//! A frieze is an array `f(i, j)` of torus elements, rows `1 ≤ i ≤ n` and
//! integer columns `j`, bordered by rows of ones (`f(0, ·) = f(n+1, ·) = 1`)
//! and satisfying the unimodular rule
//!
//! ```text
//! f(i, j) · f(i, j+1)  −  ν · f(i−1, j+1) · f(i+1, j)  =  1
//! ```
//!
//! in the ambient quantum torus. The *frieze of variables* seeds column 0
//! with the torus generators, `f(i, 0) = X_i`, and extends in both
//! directions by exact division. The resulting grid is invariant under the
//! glide map φ, so all values are translates of the ones in a finite
//! fundamental domain Γ₀.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::torus::{left_divide, multiply, right_divide, LambdaForm, TorusElement};
use crate::verify::Report;

/// A grid position: row `i` (1-based) and column `j` (any integer).
///
/// Ordered column-major (by `j`, then `i`), the order in which grid entries
/// are listed and serialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridCoord {
    pub i: usize,
    pub j: i64,
}

impl GridCoord {
    pub fn new(i: usize, j: i64) -> Self {
        GridCoord { i, j }
    }
}

impl Ord for GridCoord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.j, self.i).cmp(&(other.j, other.i))
    }
}

impl PartialOrd for GridCoord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for GridCoord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// The glide map `φ(i, j) = (n − i + 1, j + i + 1)`. Friezes of rank `n`
/// are φ-invariant, and `φ²` is the pure column translation
/// `(i, j) ↦ (i, j + n + 3)`.
pub fn phi(n: usize, c: GridCoord) -> Result<GridCoord> {
    check_row(n, c)?;
    Ok(GridCoord::new(n - c.i + 1, c.j + c.i as i64 + 1))
}

/// Inverse of [`phi`]: `(i, j) ↦ (n − i + 1, j + i − n − 2)`.
pub fn phi_inverse(n: usize, c: GridCoord) -> Result<GridCoord> {
    check_row(n, c)?;
    Ok(GridCoord::new(n - c.i + 1, c.j + c.i as i64 - n as i64 - 2))
}

fn check_row(n: usize, c: GridCoord) -> Result<()> {
    if c.i < 1 || c.i > n {
        return Err(Error::IndexOutOfRange(format!(
            "row {} outside 1..={n}",
            c.i
        )));
    }
    Ok(())
}

/// Membership in the fundamental domain `Γ₀ = {(i, j) : j ≥ 0, i + j ≤ n + 1}`.
pub fn in_fundamental_domain(n: usize, c: GridCoord) -> bool {
    c.i >= 1 && c.i <= n && c.j >= 0 && c.i as i64 + c.j <= n as i64 + 1
}

/// The coordinates of `Γ₀` in column-major order. Its size is `n(n+3)/2`,
/// and every grid value is a φ-translate of a value on `Γ₀`.
pub fn fundamental_domain(n: usize) -> Result<Vec<GridCoord>> {
    validate_rank(n)?;
    let mut coords = Vec::new();
    for j in 0..=(n as i64) {
        for i in 1..=n {
            let c = GridCoord::new(i, j);
            if in_fundamental_domain(n, c) {
                coords.push(c);
            }
        }
    }
    Ok(coords)
}

fn validate_rank(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if n % 2 != 0 {
        return Err(Error::OddRank(n));
    }
    Ok(())
}

/// A populated window of a frieze: rows `1..=n`, columns `j_min..=j_max`
/// (rectangular when built by [`frieze_of_variables`], triangular `Γ₀` when
/// built by [`frieze_from_mouth`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriezeGrid {
    n: usize,
    j_min: i64,
    j_max: i64,
    entries: BTreeMap<GridCoord, TorusElement>,
}

impl FriezeGrid {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn j_min(&self) -> i64 {
        self.j_min
    }

    pub fn j_max(&self) -> i64 {
        self.j_max
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: i64) -> Option<&TorusElement> {
        self.entries.get(&GridCoord::new(i, j))
    }

    /// Entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (&GridCoord, &TorusElement)> {
        self.entries.iter()
    }

    /// Grid value extended by the boundary convention
    /// `f(0, ·) = f(n+1, ·) = 1`; `None` when the interior coordinate is not
    /// populated.
    fn boundary_value(&self, i: i64, j: i64) -> Option<TorusElement> {
        if i == 0 || i == self.n as i64 + 1 {
            return Some(TorusElement::one(self.n));
        }
        if i < 0 || i > self.n as i64 {
            return None;
        }
        self.get(i as usize, j).cloned()
    }

    /// The mouth: the top row `f(1, 0), …, f(1, n)` (the `Γ₀` part of
    /// row 1), which determines the whole frieze.
    pub fn mouth(&self) -> Result<Vec<TorusElement>> {
        (0..=self.n as i64)
            .map(|j| {
                self.get(1, j).cloned().ok_or_else(|| {
                    Error::IndexOutOfRange(format!(
                        "mouth needs row 1, columns 0..={}, missing column {j}",
                        self.n
                    ))
                })
            })
            .collect()
    }
}

/// The frieze of variables: `f(i, 0) = X_i`, extended to all columns of the
/// window `[j_min, j_max]` by exact division in the quantum torus. The
/// window must contain column 0.
pub fn frieze_of_variables(n: usize, j_min: i64, j_max: i64) -> Result<FriezeGrid> {
    validate_rank(n)?;
    if j_min > 0 || j_max < 0 {
        return Err(Error::InvalidWindow { j_min, j_max });
    }
    let form = LambdaForm::linear_type_a(n)?;
    let mut entries: BTreeMap<GridCoord, TorusElement> = BTreeMap::new();
    for i in 1..=n {
        entries.insert(GridCoord::new(i, 0), TorusElement::generator(n, i));
    }
    let one = TorusElement::one(n);
    let at = |entries: &BTreeMap<GridCoord, TorusElement>, i: i64, j: i64| -> TorusElement {
        if i == 0 || i == n as i64 + 1 {
            one.clone()
        } else {
            entries
                .get(&GridCoord::new(i as usize, j))
                .expect("fill order guarantees presence")
                .clone()
        }
    };
    // Forward: f(i, j+1) solves f(i, j) · Y = 1 + ν f(i−1, j+1) f(i+1, j),
    // filled with i ascending so f(i−1, j+1) is already known.
    for j in 0..j_max {
        for i in 1..=(n as i64) {
            let known = multiply(&form, &at(&entries, i - 1, j + 1), &at(&entries, i + 1, j))?;
            let rhs = &one + &known.times_nu(1);
            let value = left_divide(&form, &at(&entries, i, j), &rhs)?;
            entries.insert(GridCoord::new(i as usize, j + 1), value);
        }
    }
    // Backward: f(i, j−1) solves Y · f(i, j) = 1 + ν f(i−1, j) f(i+1, j−1),
    // filled with i descending so f(i+1, j−1) is already known.
    for j in (j_min + 1..=0).rev() {
        for i in (1..=(n as i64)).rev() {
            let known = multiply(&form, &at(&entries, i - 1, j), &at(&entries, i + 1, j - 1))?;
            let rhs = &one + &known.times_nu(1);
            let value = right_divide(&form, &rhs, &at(&entries, i, j))?;
            entries.insert(GridCoord::new(i as usize, j - 1), value);
        }
    }
    Ok(FriezeGrid { n, j_min, j_max, entries })
}

/// Rebuilds the full `Γ₀` triangle from a mouth `f(1, 0), …, f(1, n)`:
/// row `i+1` is recovered from rows `i` and `i−1` by one exact division per
/// entry. Fails with `NotDivisible`, `ZeroDivisor`, or
/// `UnimodularViolation` when the mouth is not the top row of a frieze.
pub fn frieze_from_mouth(n: usize, mouth: &[TorusElement]) -> Result<FriezeGrid> {
    validate_rank(n)?;
    if mouth.len() != n + 1 {
        return Err(Error::RankMismatch { expected: n + 1, got: mouth.len() });
    }
    for m in mouth {
        if m.rank() != n {
            return Err(Error::RankMismatch { expected: n, got: m.rank() });
        }
        if m.is_zero() {
            return Err(Error::ZeroDivisor);
        }
    }
    let form = LambdaForm::linear_type_a(n)?;
    let one = TorusElement::one(n);
    let mut entries: BTreeMap<GridCoord, TorusElement> = BTreeMap::new();
    for (j, m) in mouth.iter().enumerate() {
        entries.insert(GridCoord::new(1, j as i64), m.clone());
    }
    // f(i−1, j+1) · f(i+1, j) = ν^{−1} (f(i, j) f(i, j+1) − 1)
    for i in 1..n {
        for j in 0..=(n - i) as i64 {
            let row_i_product = multiply(
                &form,
                entries.get(&GridCoord::new(i, j)).expect("row i filled"),
                entries.get(&GridCoord::new(i, j + 1)).expect("row i filled"),
            )?;
            let target = (&row_i_product - &one).times_nu(-1);
            let value = if i == 1 {
                target
            } else {
                let above = entries.get(&GridCoord::new(i - 1, j + 1)).expect("row i−1 filled");
                left_divide(&form, above, &target)?
            };
            if value.is_zero() {
                return Err(Error::UnimodularViolation(format!(
                    "reconstructed f({}, {j}) is zero",
                    i + 1
                )));
            }
            entries.insert(GridCoord::new(i + 1, j), value);
        }
    }
    // The construction used every relation except the ones against the
    // bottom border f(n+1, ·) = 1; check those explicitly.
    let f_n0 = entries.get(&GridCoord::new(n, 0)).expect("row n filled");
    let f_n1 = entries.get(&GridCoord::new(n, 1)).expect("row n filled");
    let f_top = entries.get(&GridCoord::new(n - 1, 1)).expect("row n−1 filled");
    let lhs = &multiply(&form, f_n0, f_n1)? - &f_top.times_nu(1);
    if !lhs.is_one() {
        return Err(Error::UnimodularViolation(format!(
            "bottom-row relation fails at (i, j) = ({n}, 0)"
        )));
    }
    Ok(FriezeGrid { n, j_min: 0, j_max: n as i64, entries })
}

/// The `Γ₀` values of the frieze of variables, keyed by coordinate. These
/// are exactly the quantum cluster variables of the family, so the map has
/// `n(n+3)/2` pairwise distinct values.
pub fn cluster_variables(n: usize) -> Result<BTreeMap<GridCoord, TorusElement>> {
    let grid = frieze_of_variables(n, 0, n as i64)?;
    let mut map = BTreeMap::new();
    for c in fundamental_domain(n)? {
        map.insert(c, grid.get(c.i, c.j).expect("Γ₀ inside window").clone());
    }
    Ok(map)
}

/// Checks the unimodular rule at every position of the grid where all four
/// participants are populated (border rows count as 1).
pub fn unimodular_report(grid: &FriezeGrid) -> Report {
    let mut report = Report::new("unimodular rule");
    let form = match LambdaForm::linear_type_a(grid.rank()) {
        Ok(f) => f,
        Err(e) => {
            report.fail(format!("ambient form unavailable: {e}"));
            return report;
        }
    };
    let one = TorusElement::one(grid.rank());
    let mut checked = 0usize;
    for j in grid.j_min()..grid.j_max() {
        for i in 1..=(grid.rank() as i64) {
            let (Some(a), Some(b), Some(up), Some(down)) = (
                grid.boundary_value(i, j),
                grid.boundary_value(i, j + 1),
                grid.boundary_value(i - 1, j + 1),
                grid.boundary_value(i + 1, j),
            ) else {
                continue;
            };
            checked += 1;
            let ok = (|| -> Result<bool> {
                let lhs = &multiply(&form, &a, &b)? - &multiply(&form, &up, &down)?.times_nu(1);
                Ok(lhs == one)
            })();
            match ok {
                Ok(true) => {}
                Ok(false) => report.fail(format!("rule fails at (i, j) = ({i}, {j})")),
                Err(e) => report.fail(format!("rule cannot be evaluated at ({i}, {j}): {e}")),
            }
        }
    }
    report.note(format!("{checked} positions checked"));
    report
}

/// Checks φ-invariance `f(φ(i, j)) = f(i, j)` for every pair of populated
/// coordinates in the window.
pub fn check_periodicity(grid: &FriezeGrid) -> Report {
    let mut report = Report::new("glide periodicity");
    let n = grid.rank();
    let mut checked = 0usize;
    for (c, value) in grid.entries() {
        let image = match phi(n, *c) {
            Ok(img) => img,
            Err(e) => {
                report.fail(format!("φ undefined at {c}: {e}"));
                continue;
            }
        };
        if let Some(image_value) = grid.get(image.i, image.j) {
            checked += 1;
            if image_value != value {
                report.fail(format!("f{image} differs from f{c}"));
            }
        }
    }
    report.note(format!("{checked} φ-pairs compared"));
    report
}
