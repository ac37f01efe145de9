//! Exact computational algebra for the symmetric group acting on polynomial
//! rings with `m` sets of `n` commuting variables and `m'` sets of `n`
//! anticommuting (Grassmann) variables.
//!
//! The library decomposes each homogeneous component of such a ring into
//! irreducible symmetric group modules by three independent methods that can
//! be cross-checked against each other:
//!
//! * counting multiset tableaux ([`tableaux`]),
//! * expanding the Frobenius image symbolically in the Schur basis
//!   ([`symfunc::module_frobenius`]),
//! * brute-force traces on an explicit monomial basis
//!   ([`superpoly::brute_multiplicity`]).
//!
//! It also implements the structure of the invariant ring: monomial and power
//! sum invariants ([`superpoly`]), the finite generating set of power sums of
//! degree at most `n`, and the rewriting rule that expresses longer power sums
//! in terms of the generators ([`invariants`]).
//!
//! All arithmetic is exact: integers are arbitrary precision and coefficients
//! are rationals. No floating point is used anywhere in the main pipeline.

pub mod combinat;
pub mod fillings;
pub mod invariants;

pub mod superpoly;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;
/// Exact integer used throughout the crate.
pub type Integer = num_bigint::BigInt;

pub(crate) fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}
