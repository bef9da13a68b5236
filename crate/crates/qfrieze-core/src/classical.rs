//! Commutative cross-check: classical frieze patterns of Laurent
//! polynomials.
//!
//! Sending `ν ↦ 1` and `X^u ↦ x^u` collapses the quantum torus onto the
//! commutative Laurent polynomial ring `Z[x_1^{±1}, …, x_n^{±1}]`, and the
//! quantum frieze onto the classical frieze of cluster variables (rule
//! `f(i,j) f(i,j+1) = 1 + f(i−1,j+1) f(i+1,j)`). This module computes the
//! classical frieze *directly*, through its own arithmetic and its own
//! division routine, so agreement with the specialized quantum grid is a
//! genuine two-implementation comparison rather than a tautology.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::frieze::GridCoord;
use crate::torus::{ExponentVector, TorusElement};
use crate::verify::Report;

/// A commutative Laurent polynomial in `x_1, …, x_n` with integer
/// coefficients. Terms are kept sorted by exponent vector; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CommLaurent {
    rank: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl CommLaurent {
    pub fn zero(rank: usize) -> Self {
        CommLaurent { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(ExponentVector::zero(rank), BigInt::one())
    }

    pub fn monomial(exp: ExponentVector, coeff: BigInt) -> Self {
        let mut p = CommLaurent { rank: exp.rank(), terms: BTreeMap::new() };
        p.add_term(exp, coeff);
        p
    }

    /// The generator `x_i`, `i` 1-based.
    pub fn generator(rank: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::basis(rank, i), BigInt::one())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ExponentVector::zero(self.rank))
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &ExponentVector) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn add_term(&mut self, exp: ExponentVector, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(exp.rank(), self.rank);
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn leading(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division: the unique `y` with `self = d · y`, or
    /// `NotDivisible`/`ZeroDivisor`. Quotient candidates are confined to
    /// the componentwise exponent box `[min(self) − min(d), max(self) −
    /// max(d)]`, which contains the quotient's support whenever the
    /// division is exact; a candidate escaping the box ends the search.
    pub fn exact_divide(&self, d: &CommLaurent) -> Result<CommLaurent> {
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.rank != d.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: d.rank });
        }
        if self.is_zero() {
            return Ok(CommLaurent::zero(self.rank));
        }
        let bounds = |p: &CommLaurent| -> (Vec<i64>, Vec<i64>) {
            let mut lo = vec![i64::MAX; p.rank];
            let mut hi = vec![i64::MIN; p.rank];
            for exp in p.terms.keys() {
                for (t, &e) in exp.as_slice().iter().enumerate() {
                    lo[t] = lo[t].min(e);
                    hi[t] = hi[t].max(e);
                }
            }
            (lo, hi)
        };
        let (p_lo, p_hi) = bounds(self);
        let (d_lo, d_hi) = bounds(d);
        let box_lo: Vec<i64> = p_lo.iter().zip(&d_lo).map(|(a, b)| a - b).collect();
        let box_hi: Vec<i64> = p_hi.iter().zip(&d_hi).map(|(a, b)| a - b).collect();
        let (d_lead_exp, d_lead_coeff) = d.leading().expect("divisor nonzero");
        let d_lead_exp = d_lead_exp.clone();
        let d_lead_coeff = d_lead_coeff.clone();

        let mut rem = self.clone();
        let mut quotient = CommLaurent::zero(self.rank);
        while let Some((r_exp, r_coeff)) = rem.leading() {
            let u = r_exp.sub(&d_lead_exp);
            let in_box = u
                .as_slice()
                .iter()
                .enumerate()
                .all(|(t, &e)| box_lo[t] <= e && e <= box_hi[t]);
            if !in_box {
                return Err(Error::NotDivisible(format!(
                    "remainder term {} cannot come from any quotient term",
                    r_exp
                )));
            }
            let (q, r) = (r_coeff / &d_lead_coeff, r_coeff % &d_lead_coeff);
            if !r.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "leading coefficient of the remainder is not a multiple at {}",
                    r_exp
                )));
            }
            let step = CommLaurent::monomial(u, q);
            rem = &rem - &(d * &step);
            quotient = &quotient + &step;
        }
        Ok(quotient)
    }
}

impl std::ops::Add for &CommLaurent {
    type Output = CommLaurent;
    fn add(self, rhs: &CommLaurent) -> CommLaurent {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (exp, coeff) in &rhs.terms {
            out.add_term(exp.clone(), coeff.clone());
        }
        out
    }
}

impl std::ops::Sub for &CommLaurent {
    type Output = CommLaurent;
    fn sub(self, rhs: &CommLaurent) -> CommLaurent {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (exp, coeff) in &rhs.terms {
            out.add_term(exp.clone(), -coeff.clone());
        }
        out
    }
}

impl std::ops::Mul for &CommLaurent {
    type Output = CommLaurent;
    fn mul(self, rhs: &CommLaurent) -> CommLaurent {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = CommLaurent::zero(self.rank);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }
}

impl std::fmt::Display for CommLaurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, coeff) in self.terms.iter().rev() {
            let mut body = String::new();
            for (t, &e) in exp.as_slice().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !body.is_empty() {
                    body.push(' ');
                }
                if e == 1 {
                    body.push_str(&format!("x{}", t + 1));
                } else {
                    body.push_str(&format!("x{}^{}", t + 1, e));
                }
            }
            let magnitude = coeff.magnitude().to_string();
            let coeff_part = if body.is_empty() {
                magnitude
            } else if magnitude == "1" {
                body
            } else {
                format!("{magnitude} {body}")
            };
            if first {
                if coeff.is_negative() {
                    write!(f, "-{coeff_part}")?;
                } else {
                    write!(f, "{coeff_part}")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - {coeff_part}")?;
            } else {
                write!(f, " + {coeff_part}")?;
            }
        }
        Ok(())
    }
}

/// Specialization `ν ↦ 1`, `X^u ↦ x^u`: a ring homomorphism onto the
/// commutative Laurent ring.
pub fn specialize(e: &TorusElement) -> CommLaurent {
    let mut out = CommLaurent::zero(e.rank());
    for (exp, coeff) in e.iter() {
        out.add_term(exp.clone(), coeff.specialize_nu_one());
    }
    out
}

/// The classical frieze of variables over the window `[j_min, j_max]`
/// (which must contain column 0): `f(i, 0) = x_i`, extended by the
/// commutative rule. Defined for every rank `n ≥ 2`, odd ranks included.
pub fn classical_frieze(
    n: usize,
    j_min: i64,
    j_max: i64,
) -> Result<BTreeMap<GridCoord, CommLaurent>> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if j_min > 0 || j_max < 0 {
        return Err(Error::InvalidWindow { j_min, j_max });
    }
    let mut entries: BTreeMap<GridCoord, CommLaurent> = BTreeMap::new();
    for i in 1..=n {
        entries.insert(GridCoord::new(i, 0), CommLaurent::generator(n, i));
    }
    let one = CommLaurent::one(n);
    let at = |entries: &BTreeMap<GridCoord, CommLaurent>, i: i64, j: i64| -> CommLaurent {
        if i == 0 || i == n as i64 + 1 {
            one.clone()
        } else {
            entries.get(&GridCoord::new(i as usize, j)).expect("fill order").clone()
        }
    };
    for j in 0..j_max {
        for i in 1..=(n as i64) {
            let rhs = &one + &(&at(&entries, i - 1, j + 1) * &at(&entries, i + 1, j));
            let value = rhs.exact_divide(&at(&entries, i, j))?;
            entries.insert(GridCoord::new(i as usize, j + 1), value);
        }
    }
    for j in (j_min + 1..=0).rev() {
        for i in (1..=(n as i64)).rev() {
            let rhs = &one + &(&at(&entries, i - 1, j) * &at(&entries, i + 1, j - 1));
            let value = rhs.exact_divide(&at(&entries, i, j))?;
            entries.insert(GridCoord::new(i as usize, j - 1), value);
        }
    }
    Ok(entries)
}

/// Compares the specialized quantum frieze with the directly computed
/// classical frieze on a window, entry by entry.
pub fn cross_check(n: usize, j_min: i64, j_max: i64) -> Result<Report> {
    let mut report = Report::new("classical specialization cross-check");
    let quantum = crate::frieze::frieze_of_variables(n, j_min, j_max)?;
    let classical = classical_frieze(n, j_min, j_max)?;
    let mut checked = 0usize;
    for (c, value) in quantum.entries() {
        let expected = classical
            .get(c)
            .ok_or_else(|| Error::IndexOutOfRange(format!("classical grid misses {c}")))?;
        checked += 1;
        if &specialize(value) != expected {
            report.fail(format!("specialization differs from classical value at {c}"));
        }
    }
    report.note(format!("{checked} entries compared"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::phi;

    fn mono(entries: &[i64]) -> CommLaurent {
        CommLaurent::monomial(ExponentVector::from_entries(entries.to_vec()), BigInt::one())
    }

    fn sum(terms: &[&[i64]]) -> CommLaurent {
        terms.iter().fold(CommLaurent::zero(terms[0].len()), |acc, t| &acc + &mono(t))
    }

    #[test]
    fn arithmetic_basics() {
        let x1 = CommLaurent::generator(2, 1);
        let x2 = CommLaurent::generator(2, 2);
        assert_eq!(&x1 * &x2, &x2 * &x1);
        assert_eq!(&(&x1 + &x2) - &x2, x1);
        assert!((&x1 - &x1).is_zero());
        assert!(CommLaurent::one(2).is_one());
    }

    #[test]
    fn exact_division() {
        let x1 = CommLaurent::generator(1, 1);
        let one = CommLaurent::one(1);
        // (x1² − 1) / (x1 − 1) = x1 + 1
        let p = &(&x1 * &x1) - &one;
        let d = &x1 - &one;
        assert_eq!(p.exact_divide(&d).unwrap(), &x1 + &one);
        // Laurent quotients reach negative exponents: (x1 + 1) / x1
        let q = (&x1 + &one).exact_divide(&x1).unwrap();
        assert_eq!(q, &one + &CommLaurent::monomial(ExponentVector::from_entries(vec![-1]), BigInt::one()));
        // 1 / (x1 − 1) must fail rather than expand a power series
        assert!(matches!(one.exact_divide(&d), Err(Error::NotDivisible(_))));
        // coefficient obstruction
        let two = CommLaurent::monomial(ExponentVector::zero(1), BigInt::from(2));
        assert_eq!((&two * &x1).exact_divide(&two).unwrap(), x1);
        assert!(matches!(x1.exact_divide(&two), Err(Error::NotDivisible(_))));
        assert!(matches!(x1.exact_divide(&CommLaurent::zero(1)), Err(Error::ZeroDivisor)));
        assert!(CommLaurent::zero(1).exact_divide(&d).unwrap().is_zero());
    }

    #[test]
    fn classical_frieze_rank_two_values() {
        let grid = classical_frieze(2, 0, 3).unwrap();
        assert_eq!(grid[&GridCoord::new(1, 1)], sum(&[&[-1, 0], &[-1, 1]]));
        assert_eq!(grid[&GridCoord::new(2, 1)], sum(&[&[-1, 0], &[-1, -1], &[0, -1]]));
        assert_eq!(grid[&GridCoord::new(2, 2)], mono(&[1, 0]));
        assert_eq!(grid[&GridCoord::new(1, 3)], mono(&[0, 1]));
    }

    #[test]
    fn classical_frieze_odd_rank() {
        // Odd ranks are meaningful classically even though the quantum
        // construction needs an even rank.
        let n = 3usize;
        let grid = classical_frieze(n, -(n as i64) - 3, 2 * (n as i64 + 3)).unwrap();
        let one = CommLaurent::one(n);
        let at = |i: i64, j: i64| -> CommLaurent {
            if i == 0 || i == n as i64 + 1 {
                one.clone()
            } else {
                grid[&GridCoord::new(i as usize, j)].clone()
            }
        };
        for j in -(n as i64) - 3..2 * (n as i64 + 3) {
            for i in 1..=(n as i64) {
                let lhs = &at(i, j) * &at(i, j + 1);
                let rhs = &one + &(&at(i - 1, j + 1) * &at(i + 1, j));
                assert_eq!(lhs, rhs, "rule at ({i}, {j})");
            }
        }
        // glide invariance holds for odd ranks too
        for (c, value) in &grid {
            let image = phi(n, *c).unwrap();
            if let Some(image_value) = grid.get(&image) {
                assert_eq!(image_value, value, "glide at {c}");
            }
        }
    }

    #[test]
    fn specialize_drops_nu() {
        let f11 = crate::frieze::frieze_of_variables(2, 0, 1)
            .unwrap()
            .get(1, 1)
            .unwrap()
            .clone();
        assert_eq!(specialize(&f11), sum(&[&[-1, 0], &[-1, 1]]));
        let twisted = TorusElement::generator(2, 1).times_nu(3);
        assert_eq!(specialize(&twisted), mono(&[1, 0]));
    }

    #[test]
    fn cross_check_small_ranks() {
        for (n, lo, hi) in [(2usize, -2i64, 4i64), (4, 0, 7)] {
            let report = cross_check(n, lo, hi).unwrap();
            assert!(report.passed(), "failures: {:?}", report.failures());
        }
    }
}
