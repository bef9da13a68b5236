//! The based quantum torus `T(Λ)`.
//!
//! Elements are finite `Z[ν^{±1}]`-combinations of basis monomials `X^u`,
//! `u ∈ Z^n`, multiplying by the twisted rule
//!
//! ```text
//! X^u · X^v = ν^{Λ(u,v)} X^{u+v},        ν = q^{1/2},
//! ```
//!
//! for a skew-symmetric integer form Λ. The torus is a stand-in for its skew
//! fraction field: every quotient this crate needs is torus-exact, so instead
//! of localizing we provide one-sided exact division and treat a failed
//! division as an error.

use std::collections::BTreeMap;
use std::fmt;


use crate::coefficients::NuPoly;
use crate::error::{Error, Result};

/// An exponent vector `u ∈ Z^n`.
///
/// Ordering is lexicographic (the derived order on the underlying entries),
/// which is total and translation-invariant — the properties the division
/// algorithm relies on.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The standard basis vector `e_i`, `i` 1-based. `i = 0` and `i = n+1`
    /// are accepted as the zero vector (the boundary convention `e_0 =
    /// e_{n+1} = 0` used by frieze and mutation formulas).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        if i >= 1 && i <= n {
            v[i - 1] = 1;
        }
        ExponentVector(v)
    }

    pub fn from_entries(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// The `i`-th component, 1-based.
    pub fn component(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, a) in self.0.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A skew-symmetric integer bilinear form on `Z^n`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaForm {
    n: usize,
    entries: Vec<i64>,
}

impl LambdaForm {
    /// Builds a form from row-major entries, checking skew-symmetry.
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::RankMismatch { expected: n * n, got: entries.len() });
        }
        let form = LambdaForm { n, entries };
        for i in 1..=n {
            for j in 1..=n {
                if form.entry(i, j) != -form.entry(j, i) {
                    return Err(Error::IndexOutOfRange(format!(
                        "form is not skew-symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(form)
    }

    /// The compatible form for the linearly oriented `A_n` quiver, `n` even:
    ///
    /// ```text
    /// Λ_{ij} = 1  if i odd, j even, i < j,
    ///         −1  if i even, j odd, i > j,
    ///          0  otherwise.
    /// ```
    ///
    /// This is the inverse transpose of the quiver's incidence matrix; the
    /// constructor of [`crate::seed::QuantumSeed`] re-checks that identity.
    pub fn linear_type_a(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        if n % 2 != 0 {
            return Err(Error::OddRank(n));
        }
        let mut entries = vec![0i64; n * n];
        for i in 1..=n {
            for j in 1..=n {
                let v = if i % 2 == 1 && j % 2 == 0 && i < j {
                    1
                } else if i % 2 == 0 && j % 2 == 1 && i > j {
                    -1
                } else {
                    0
                };
                entries[(i - 1) * n + (j - 1)] = v;
            }
        }
        Ok(LambdaForm { n, entries })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Matrix entry `Λ_{ij}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..=self.n).map(|i| (1..=self.n).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Evaluates the bilinear form `uᵀ Λ v`.
    pub fn eval(&self, u: &ExponentVector, v: &ExponentVector) -> Result<i64> {
        if u.rank() != self.n {
            return Err(Error::RankMismatch { expected: self.n, got: u.rank() });
        }
        if v.rank() != self.n {
            return Err(Error::RankMismatch { expected: self.n, got: v.rank() });
        }
        let mut total = 0i64;
        for i in 1..=self.n {
            let ui = u.component(i);
            if ui == 0 {
                continue;
            }
            for j in 1..=self.n {
                total += ui * self.entry(i, j) * v.component(j);
            }
        }
        Ok(total)
    }
}

/// `uᵀ Λ v` as a free function, matching the shape of the other torus ops.
pub fn lambda_eval(form: &LambdaForm, u: &ExponentVector, v: &ExponentVector) -> Result<i64> {
    form.eval(u, v)
}

/// An element of the based quantum torus: a finite sum `Σ c_u(ν) X^u`.
///
/// Invariants: no stored coefficient is zero; all keys have length `rank`.
/// The form is *not* stored — it travels as an explicit parameter, so the
/// same element can be re-read under a mutated Λ in diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusElement {
    rank: usize,
    terms: BTreeMap<ExponentVector, NuPoly>,
}

impl TorusElement {
    pub fn zero(rank: usize) -> Self {
        TorusElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::scalar(rank, NuPoly::one())
    }

    /// A scalar embedded as an `X^0` term.
    pub fn scalar(rank: usize, c: NuPoly) -> Self {
        Self::monomial(ExponentVector::zero(rank), c)
    }

    /// The single term `c·X^u` (zero element if `c = 0`).
    pub fn monomial(u: ExponentVector, c: NuPoly) -> Self {
        let rank = u.rank();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(u, c);
        }
        TorusElement { rank, terms }
    }

    /// The generator `X_i = X^{e_i}`, `i` 1-based.
    pub fn generator(rank: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::basis(rank, i), NuPoly::one())
    }

    pub fn from_terms<I>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, NuPoly)>,
    {
        let mut out = Self::zero(rank);
        for (u, c) in terms {
            out.add_term(u, c);
        }
        out
    }

    fn add_term(&mut self, u: ExponentVector, c: NuPoly) {
        debug_assert_eq!(u.rank(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(u) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
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

    pub fn coeff(&self, u: &ExponentVector) -> NuPoly {
        self.terms.get(u).cloned().unwrap_or_else(NuPoly::zero)
    }

    /// Terms in ascending lex order of exponent vectors.
    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVector, &NuPoly)> {
        self.terms.iter()
    }

    /// Terms in descending lex order (the canonical serialization order).
    pub fn iter_desc(&self) -> impl Iterator<Item = (&ExponentVector, &NuPoly)> {
        self.terms.iter().rev()
    }

    /// The lex-leading term.
    pub fn leading(&self) -> Option<(&ExponentVector, &NuPoly)> {
        self.terms.iter().next_back()
    }

    /// Multiplies every coefficient by the scalar `c` (scalars are central).
    pub fn scale(&self, c: &NuPoly) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        TorusElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(u, p)| (u.clone(), p * c)).collect(),
        }
    }

    /// Multiplication by `ν^k`.
    pub fn times_nu(&self, k: i64) -> Self {
        self.scale(&NuPoly::nu_power(k))
    }

    /// The bar image: `ν ↦ ν^{-1}` on coefficients, basis monomials fixed.
    pub fn bar(&self) -> Self {
        TorusElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(u, p)| (u.clone(), p.bar())).collect(),
        }
    }

    /// Diagnostic predicate: is this element fixed by the bar involution?
    pub fn is_bar_invariant(&self) -> bool {
        self.terms.values().all(|p| p.bar() == *p)
    }

    /// True when every coefficient of every term is a positive integer
    /// multiple of a ν-power (no negative coefficients anywhere).
    pub fn coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|p| p.coefficients_nonnegative())
    }
}

impl std::ops::Add for &TorusElement {
    type Output = TorusElement;
    fn add(self, rhs: &TorusElement) -> TorusElement {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in torus addition");
        let mut out = self.clone();
        for (u, c) in rhs.iter() {
            out.add_term(u.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &TorusElement {
    type Output = TorusElement;
    fn sub(self, rhs: &TorusElement) -> TorusElement {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in torus subtraction");
        let mut out = self.clone();
        for (u, c) in rhs.iter() {
            out.add_term(u.clone(), -c);
        }
        out
    }
}

impl std::ops::Neg for &TorusElement {
    type Output = TorusElement;
    fn neg(self) -> TorusElement {
        TorusElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(u, c)| (u.clone(), -c)).collect(),
        }
    }
}

fn check_ranks(form: &LambdaForm, a: &TorusElement, b: &TorusElement) -> Result<()> {
    if a.rank() != form.rank() {
        return Err(Error::RankMismatch { expected: form.rank(), got: a.rank() });
    }
    if b.rank() != form.rank() {
        return Err(Error::RankMismatch { expected: form.rank(), got: b.rank() });
    }
    Ok(())
}

/// The product in `T(Λ)`: bilinear extension of `X^u X^v = ν^{Λ(u,v)} X^{u+v}`.
pub fn multiply(form: &LambdaForm, a: &TorusElement, b: &TorusElement) -> Result<TorusElement> {
    check_ranks(form, a, b)?;
    let mut out = TorusElement::zero(a.rank());
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            let twist = form.eval(u, v)?;
            out.add_term(u.add(v), (cu * cv).shifted(twist));
        }
    }
    Ok(out)
}

/// Componentwise bounding box that must contain every exponent of a quotient.
///
/// For any factorization `p = d·y` (in either order), the Newton polytope of
/// `p` is the Minkowski sum of those of `d` and `y` — extreme terms cannot
/// cancel because `Z[ν^{±1}]` is a domain and the twist is a unit. Taking
/// support functions in the `±`coordinate directions bounds each coordinate
/// of `supp(y)` by `[min_t(p) − min_t(d), max_t(p) − max_t(d)]`. A candidate
/// quotient exponent outside the box proves non-divisibility, and the box is
/// finite, so the division loop always terminates.
fn quotient_box(d: &TorusElement, p: &TorusElement) -> Option<(Vec<i64>, Vec<i64>)> {
    let n = d.rank();
    let extremes = |e: &TorusElement| {
        let mut lo = vec![i64::MAX; n];
        let mut hi = vec![i64::MIN; n];
        for (u, _) in e.iter() {
            for t in 0..n {
                lo[t] = lo[t].min(u.as_slice()[t]);
                hi[t] = hi[t].max(u.as_slice()[t]);
            }
        }
        (lo, hi)
    };
    let (p_lo, p_hi) = extremes(p);
    let (d_lo, d_hi) = extremes(d);
    let lo: Vec<i64> = p_lo.iter().zip(&d_lo).map(|(a, b)| a - b).collect();
    let hi: Vec<i64> = p_hi.iter().zip(&d_hi).map(|(a, b)| a - b).collect();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        None
    } else {
        Some((lo, hi))
    }
}

fn in_box(v: &ExponentVector, lo: &[i64], hi: &[i64]) -> bool {
    v.as_slice().iter().zip(lo.iter().zip(hi)).all(|(x, (l, h))| l <= x && x <= h)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// Shared one-sided division loop. Peels the forced leading quotient term —
/// under the translation-invariant lex order the leading term of `d·y`
/// (resp. `y·d`) is the twisted product of the leading terms — subtracts,
/// and repeats. Every step is forced, so any failure proves no torus
/// quotient exists.
fn divide(form: &LambdaForm, d: &TorusElement, p: &TorusElement, side: Side) -> Result<TorusElement> {
    check_ranks(form, d, p)?;
    if d.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if p.is_zero() {
        return Ok(TorusElement::zero(p.rank()));
    }
    let Some((lo, hi)) = quotient_box(d, p) else {
        return Err(Error::NotDivisible("empty quotient support box".to_string()));
    };
    let (du, dc) = d.leading().expect("nonzero divisor");
    let du = du.clone();
    let dc = dc.clone();
    let mut r = p.clone();
    let mut y = TorusElement::zero(p.rank());
    while let Some((ru, rc)) = r.leading() {
        let v = ru.sub(&du);
        if !in_box(&v, &lo, &hi) {
            return Err(Error::NotDivisible(format!(
                "candidate quotient exponent {v} leaves the support box"
            )));
        }
        let twist = match side {
            Side::Left => form.eval(&du, &v)?,
            Side::Right => form.eval(&v, &du)?,
        };
        let qc = rc.shifted(-twist).exact_divide(&dc).map_err(|e| match e {
            Error::NotDivisible(msg) => {
                Error::NotDivisible(format!("leading coefficient at {v}: {msg}"))
            }
            other => other,
        })?;
        let q_term = TorusElement::monomial(v, qc);
        let product = match side {
            Side::Left => multiply(form, d, &q_term)?,
            Side::Right => multiply(form, &q_term, d)?,
        };
        r = &r - &product;
        y = &y + &q_term;
    }
    Ok(y)
}

/// Exact left division: the `y` with `d·y = p`, or `NotDivisible`.
pub fn left_divide(form: &LambdaForm, d: &TorusElement, p: &TorusElement) -> Result<TorusElement> {
    divide(form, d, p, Side::Left)
}

/// Exact right division: the `y` with `y·d = p`, or `NotDivisible`.
pub fn right_divide(form: &LambdaForm, p: &TorusElement, d: &TorusElement) -> Result<TorusElement> {
    divide(form, d, p, Side::Right)
}

impl fmt::Display for TorusElement {
    /// Descending lex order; coefficients rendered in the `q`-convention.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (u, c) in self.iter_desc() {
            let piece = render_term(u, c);
            if first {
                write!(f, "{piece}")?;
                first = false;
            } else if let Some(stripped) = piece.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {piece}")?;
            }
        }
        Ok(())
    }
}

fn render_term(u: &ExponentVector, c: &NuPoly) -> String {
    if u.is_zero() {
        return c.to_string();
    }
    let xs = format!("X^{u}");
    if c.is_one() {
        return xs;
    }
    let cs = c.to_string();
    if cs == "-1" {
        return format!("-{xs}");
    }
    // A single ν-monomial needs no parentheses; a sum does.
    if c.iter().count() == 1 {
        format!("{cs} {xs}")
    } else {
        format!("({cs}) {xs}")
    }
}
