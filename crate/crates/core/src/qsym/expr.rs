use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::compositions::{Composition, Partition};
use crate::error::{Error, Result};
use crate::lincomb::{write_terms, Coeff, LinComb};

/// Composition-indexed bases of the quasisymmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Basis {
    M,
    F,
    R,
    RS,
    S,
    QS,
}

impl Basis {
    pub const ALL: [Basis; 6] = [Basis::M, Basis::F, Basis::R, Basis::RS, Basis::S, Basis::QS];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::R => "R",
            Basis::RS => "RS",
            Basis::S => "S",
            Basis::QS => "QS",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown basis {s:?}")))
    }
}

/// A linear combination of basis elements of one composition-indexed basis.
#[derive(Clone, PartialEq, Eq)]
pub struct QSymExpr {
    basis: Basis,
    terms: LinComb<Composition>,
}

impl QSymExpr {
    pub fn zero(basis: Basis) -> Self {
        QSymExpr { basis, terms: LinComb::new() }
    }

    pub fn basis_element(basis: Basis, alpha: Composition) -> Self {
        QSymExpr { basis, terms: LinComb::single(alpha, 1) }
    }

    pub fn from_terms(basis: Basis, terms: LinComb<Composition>) -> Self {
        QSymExpr { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Composition> {
        &self.terms
    }

    pub fn into_terms(self) -> LinComb<Composition> {
        self.terms
    }

    pub fn coeff(&self, alpha: &Composition) -> Coeff {
        self.terms.coeff(alpha)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: Composition, c: Coeff) {
        self.terms.add_term(alpha, c);
    }

    /// Degrees of the indices present, deduplicated and sorted.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|a| a.weight()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn scaled(&self, c: Coeff) -> Self {
        QSymExpr { basis: self.basis, terms: self.terms.scaled(c) }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        Ok(QSymExpr { basis: self.basis, terms: &self.terms + &other.terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        Ok(QSymExpr { basis: self.basis, terms: &self.terms - &other.terms })
    }

    fn same_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::Domain(format!("cannot combine {} and {} expressions", self.basis, other.basis)));
        }
        Ok(())
    }
}

impl fmt::Display for QSymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, |a| format!("{}{a}", self.basis))
    }
}

impl fmt::Debug for QSymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A linear combination of Schur functions.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SymExpr {
    terms: LinComb<Partition>,
}

impl SymExpr {
    pub fn schur(lambda: Partition) -> Self {
        SymExpr { terms: LinComb::single(lambda, 1) }
    }

    pub fn from_terms(terms: LinComb<Partition>) -> Self {
        SymExpr { terms }
    }

    pub fn terms(&self) -> &LinComb<Partition> {
        &self.terms
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, |l| format!("s{l}"))
    }
}

impl fmt::Debug for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A linear combination of `F_β ⊗ F_γ`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TensorExpr {
    terms: LinComb<(Composition, Composition)>,
}

impl TensorExpr {
    pub fn from_terms(terms: LinComb<(Composition, Composition)>) -> Self {
        TensorExpr { terms }
    }

    pub fn terms(&self) -> &LinComb<(Composition, Composition)> {
        &self.terms
    }

    pub fn coeff(&self, left: &Composition, right: &Composition) -> Coeff {
        self.terms.coeff(&(left.clone(), right.clone()))
    }
}

fn tensor_side(a: &Composition) -> String {
    if a.is_empty() {
        "1".to_string()
    } else {
        format!("F{a}")
    }
}

impl fmt::Display for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, |(l, r)| format!("{}⊗{}", tensor_side(l), tensor_side(r)))
    }
}

impl fmt::Debug for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
