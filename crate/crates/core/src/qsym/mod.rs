//! Quasisymmetric and symmetric function algebra over the integers: the
//! monomial, fundamental and tableau-generated bases, polynomial evaluation,
//! the coproduct, omega and antipode, skew functions, products, and the
//! R-to-F transition matrices.

mod expr;
mod matrix;
mod ops;
mod poly;

pub use expr::{Basis, QSymExpr, SymExpr, TensorExpr};
pub use matrix::{transition_matrix_r_to_f, transition_matrix_r_to_f_with, TransitionMatrix, Triangularity};
pub use ops::{
    antipode, complement_map, coproduct, coproduct_left, coproduct_right, descent_sets, expand_in_f, expand_in_f_with, f_to_m,
    generating_kind, m_to_f, omega, product_and_decompose, rearrangement_sum, refinements, schur_poly,
    schur_poly_with, schur_sums, schur_sums_with, skew_r, skew_r_with, split_kinds, sym_to_monomials, to_f, to_f_with,
    to_monomials, to_r, to_r_with, weight_sum, SkewRoute,
};
pub use poly::MonomialPoly;
