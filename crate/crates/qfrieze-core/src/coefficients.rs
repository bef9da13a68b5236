//! Exact arithmetic in `Z[ν^{±1}]`, where `ν = q^{1/2}`.
//!
//! [`NuPoly`] is the scalar ring for everything else in the crate: every
//! `q^{a/2}` factor lives here as `ν^a`. Coefficients are arbitrary-precision
//! integers so growth with rank and window size can never overflow.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in ν with integer coefficients.
///
/// Invariants: no stored coefficient is zero; equality is structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NuPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl NuPoly {
    pub fn zero() -> Self {
        NuPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::nu_power(0)
    }

    /// The monomial `ν^k`.
    pub fn nu_power(k: i64) -> Self {
        Self::monomial(k, BigInt::one())
    }

    /// The single term `c·ν^k` (zero if `c = 0`).
    pub fn monomial(k: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        NuPoly { terms }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, BigInt::from(c))
    }

    /// Builds from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut p = NuPoly::zero();
        for (k, c) in pairs {
            p.add_term(k, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest ν-exponent; `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest ν-exponent; `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Terms in ascending ν-exponent order (the canonical order).
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    /// Multiplication by `ν^k`.
    pub fn shifted(&self, k: i64) -> Self {
        NuPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// The image under `ν ↦ ν^{-1}` (basis of the bar involution upstairs).
    pub fn bar(&self) -> Self {
        NuPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Evaluation at ν = 1: the sum of all coefficients.
    pub fn specialize_nu_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when every stored coefficient is positive.
    pub fn coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// True when the coefficient sequence reads the same in both directions:
    /// the coefficient of `ν^{lo+t}` equals the coefficient of `ν^{hi−t}`.
    pub fn is_palindromic(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return true;
        };
        self.terms.iter().all(|(e, c)| self.coeff(lo + hi - e) == *c)
    }

    /// Exact division: returns `y` with `d·y = self`, or `NotDivisible`.
    ///
    /// Long division from the lowest ν-exponent upward; any non-exact step
    /// aborts rather than returning a partial quotient.
    pub fn exact_divide(&self, d: &NuPoly) -> Result<NuPoly> {
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(NuPoly::zero());
        }
        let d_lo = d.min_exp().expect("nonzero");
        let d_lc = d.terms.get(&d_lo).expect("stored");
        // A quotient, if it exists, has top exponent max(p) − max(d).
        let q_top = self.max_exp().expect("nonzero") - d.max_exp().expect("nonzero");
        let mut r = self.clone();
        let mut q = NuPoly::zero();
        while let Some(e) = r.min_exp() {
            let qe = e - d_lo;
            if qe > q_top {
                return Err(Error::NotDivisible(format!(
                    "nu-exponent {qe} exceeds the quotient bound {q_top}"
                )));
            }
            let rc = r.terms.get(&e).expect("stored");
            if !(rc % d_lc).is_zero() {
                return Err(Error::NotDivisible(format!(
                    "coefficient {rc} not an integer multiple of {d_lc}"
                )));
            }
            let qc: BigInt = rc / d_lc;
            for (de, dc) in d.iter() {
                r.add_term(de + qe, -(dc * &qc));
            }
            q.add_term(qe, qc);
        }
        Ok(q)
    }
}

impl std::ops::Add for &NuPoly {
    type Output = NuPoly;
    fn add(self, rhs: &NuPoly) -> NuPoly {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &NuPoly {
    type Output = NuPoly;
    fn sub(self, rhs: &NuPoly) -> NuPoly {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &NuPoly {
    type Output = NuPoly;
    fn neg(self) -> NuPoly {
        NuPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl std::ops::Mul for &NuPoly {
    type Output = NuPoly;
    fn mul(self, rhs: &NuPoly) -> NuPoly {
        let mut out = NuPoly::zero();
        for (ka, ca) in self.iter() {
            for (kb, cb) in rhs.iter() {
                out.add_term(ka + kb, ca * cb);
            }
        }
        out
    }
}

/// Renders `ν^k` in the `q`-convention: even `k` collapses to an integer
/// power of `q`, odd `k` stays a half-integer power.
pub fn q_power_string(k: i64) -> String {
    if k == 0 {
        return "1".to_string();
    }
    if k % 2 == 0 {
        match k / 2 {
            1 => "q".to_string(),
            e => format!("q^{e}"),
        }
    } else {
        format!("q^({k}/2)")
    }
}

impl fmt::Display for NuPoly {
    /// Ascending ν-exponents, rendered in the `q`-convention.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.iter() {
            let mag = c.magnitude().to_string();
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let pow = q_power_string(*k);
            if mag == "1" && *k != 0 {
                write!(f, "{pow}")?;
            } else if *k == 0 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag} {pow}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu(k: i64) -> NuPoly {
        NuPoly::nu_power(k)
    }

    #[test]
    fn multiply_distributes_over_monomials() {
        // (1 + ν²)·ν⁻¹ = ν⁻¹ + ν
        let a = NuPoly::from_pairs([(0, 1), (2, 1)]);
        let product = &a * &nu(-1);
        assert_eq!(product, NuPoly::from_pairs([(-1, 1), (1, 1)]));
    }

    #[test]
    fn multiply_by_zero_annihilates() {
        let b = NuPoly::from_pairs([(1, 1), (0, 3)]);
        assert!((&NuPoly::zero() * &b).is_zero());
    }

    #[test]
    fn multiply_difference_of_squares() {
        let a = NuPoly::from_pairs([(0, 1), (1, 1)]);
        let b = NuPoly::from_pairs([(0, 1), (1, -1)]);
        assert_eq!(&a * &b, NuPoly::from_pairs([(0, 1), (2, -1)]));
    }

    #[test]
    fn exact_divide_monomial_factor() {
        // (ν + ν³)/ν = 1 + ν²
        let p = NuPoly::from_pairs([(1, 1), (3, 1)]);
        assert_eq!(p.exact_divide(&nu(1)).unwrap(), NuPoly::from_pairs([(0, 1), (2, 1)]));
    }

    #[test]
    fn exact_divide_binomial_factorization() {
        // (ν² − 1)/(ν − 1) = ν + 1
        let p = NuPoly::from_pairs([(2, 1), (0, -1)]);
        let d = NuPoly::from_pairs([(1, 1), (0, -1)]);
        assert_eq!(p.exact_divide(&d).unwrap(), NuPoly::from_pairs([(1, 1), (0, 1)]));
    }

    #[test]
    fn exact_divide_rejects_non_integer_quotient() {
        let p = NuPoly::from_pairs([(1, 1), (0, 1)]);
        let d = NuPoly::constant(2);
        assert!(matches!(p.exact_divide(&d), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn exact_divide_rejects_zero_divisor() {
        assert_eq!(NuPoly::one().exact_divide(&NuPoly::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn exact_divide_rejects_power_series_quotient() {
        // 1/(ν − 1) is a power series, not a Laurent polynomial.
        let d = NuPoly::from_pairs([(1, 1), (0, -1)]);
        assert!(NuPoly::one().exact_divide(&d).is_err());
    }

    #[test]
    fn specialize_sums_coefficients() {
        assert_eq!(NuPoly::from_pairs([(0, 1), (1, 1), (2, 1)]).specialize_nu_one(), BigInt::from(3));
        assert_eq!(NuPoly::from_pairs([(-1, 1), (1, -1)]).specialize_nu_one(), BigInt::zero());
        assert_eq!(NuPoly::zero().specialize_nu_one(), BigInt::zero());
    }

    #[test]
    fn palindromic_profile() {
        assert!(NuPoly::from_pairs([(-1, 1), (1, 1)]).is_palindromic());
        assert!(NuPoly::from_pairs([(-2, 1), (0, 3), (2, 1)]).is_palindromic());
        assert!(!NuPoly::from_pairs([(0, 1), (1, 2)]).is_palindromic());
        assert!(NuPoly::zero().is_palindromic());
    }

    #[test]
    fn q_convention_rendering() {
        assert_eq!(nu(0).to_string(), "1");
        assert_eq!(nu(1).to_string(), "q^(1/2)");
        assert_eq!(nu(2).to_string(), "q");
        assert_eq!(nu(-2).to_string(), "q^-1");
        assert_eq!(nu(-3).to_string(), "q^(-3/2)");
        assert_eq!(NuPoly::from_pairs([(0, 1), (2, -1)]).to_string(), "1 - q");
        assert_eq!(NuPoly::from_pairs([(4, 2)]).to_string(), "2 q^2");
    }
}
