//! Structure of the invariant ring: counting invariants, the power sum
//! symbol algebra, generating function expansions, the rewrite of long power
//! sums into products of short ones, and spanning/relations verification.

mod genfun;
mod pexpr;
mod rank;
mod spanning;

pub use genfun::{
    elementary_coefficient, elementary_series_polynomial, exp_of_negated_power_series,
    expand_elementary_series, expand_power_series, exponential_coefficient, interleave_sign,
    multinomial_of_multiset, normal_form, power_series_polynomial, reduce_power_sum, MarkerSeries,
    PolynomialSeries, QzKey, ReduceError,
};
pub use pexpr::{PExpression, PWord};
pub use rank::{rank_integer, rank_of_polynomials};
pub use spanning::{
    check_relations, component_within_cap, count_invariants, invariant_dimension_reynolds,
    leading_coefficient, verify_spanning, RelationsReport, SpanningReport,
};
