//! Insertion into SSYRT and SSRRT, lattice words, Littlewood-Richardson
//! witnesses and the double-word bijection.

mod insert;
mod lattice;
mod witness;

pub use insert::{insert, insert_word, InsertionResult};
pub use lattice::{lattice_predicates, LatticeFlags};
pub use witness::{
    double_word, double_word_insertion, is_lr_skew_ssyrt, is_reverse_lr, lr_coefficients, lr_coefficients_with,
    lr_witnesses, lr_witnesses_of_shape, lr_witnesses_with, LrWitness,
};
