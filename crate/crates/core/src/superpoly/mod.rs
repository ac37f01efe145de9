//! Exact arithmetic in the ring of `n x m` commuting and `n x m'`
//! anticommuting variables: the ground truth the symbolic pipelines are
//! checked against.  Provides the symmetric group action, explicit component
//! bases and traces, brute-force multiplicities, and the concrete monomial
//! and power sum invariants.

mod algebra;
mod invariant_polys;
mod module;

pub use algebra::{Dims, SuperMonomial, SuperPolynomial};
pub use invariant_polys::{is_invariant, leading_monomial, monomial_sym, power_prod, power_sum};
pub use module::{
    brute_multiplicity, component_basis, component_dim, module_character, multiplicity_from_traces,
    trace_character, trace_character_capped, ComponentTooLarge, DEFAULT_BASIS_CAP,
};
