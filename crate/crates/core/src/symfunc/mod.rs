//! Exact symbolic symmetric functions: the `p`/`h`/`e`/`s` bases, character
//! theory, the Hall scalar product, Pieri rule, evaluation at permutation
//! matrix eigenvalues, Frobenius images, and the plethysm pairing.

mod character;
mod expr;
mod ops;

pub use character::{character, CharacterTable, SymFuncError};
pub use expr::{Basis, SymFuncExpr};
pub use ops::{
    component_character, e_to_p, eval_at_cycle_type, frobenius_from_values, h_to_p, hall_inner,
    module_frobenius, p_to_schur, pieri, plethysm_multiplicity, power_sum_at_cycle_type,
    schur_multiplicities, schur_to_p, to_p_basis, Strip,
};
