//! Young row-strict quasisymmetric Schur functions: composition tableaux,
//! quasisymmetric bases and their transition matrices, the Hopf coproduct and
//! skew functions, insertion, and a Littlewood-Richardson rule.

pub mod bijections;
pub mod cli;
pub mod compositions;
pub mod error;
pub mod insertion_lr;
pub mod json;
pub mod lincomb;
pub mod par;
pub mod qsym;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
