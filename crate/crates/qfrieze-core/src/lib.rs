//! Exact arithmetic for quantum frieze patterns on linearly oriented type-A
//! quivers.
//!
//! Everything is computed over `Z[q^{±1/2}]` with no floating point and no
//! fraction field: ring division is attempted exactly and failures surface as
//! errors instead of approximations.
//!
//! The crate is organised bottom-up:
//!
//! - [`coefficients`] — univariate Laurent polynomials in `ν = q^{1/2}` over
//!   arbitrary-precision integers.
//! - [`torus`] — the based quantum torus `T(Λ)`: finite sums of basis
//!   monomials `X^u`, `u ∈ Z^n`, with `X^u X^v = ν^{Λ(u,v)} X^{u+v}`, plus
//!   exact one-sided division.
//! - [`seed`] — quantum seeds `(B, Λ, cluster)` for the linearly oriented
//!   `A_n` quiver (n even) and their mutations.
//! - [`frieze`] — quantum frieze patterns: grids satisfying
//!   `f(i,j) f(i,j+1) − ν f(i−1,j+1) f(i+1,j) = 1`, the glide symmetry φ and
//!   its fundamental domain, and reconstruction from the mouth row.
//! - [`continuant`] — quantum analogues of signed continuant polynomials and
//!   the identity sweeps tying them to friezes and quasi-commutation.
//! - [`classical`] — the commutative specialization `q → 1`, used as an
//!   independent cross-check.
//! - [`verify`] — named machine checks aggregated into a report.
//! - [`json`] — canonical, deterministic JSON forms for all of the above.

pub mod classical;
pub mod coefficients;
pub mod continuant;
pub mod error;
pub mod frieze;
pub mod json;
pub mod render;
pub mod seed;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
