//! JSON payloads for tableaux, expressions, polynomials and matrices.
//!
//! Tableaux: `{"kind", "outer", "inner", "rows"}` with `rows` in row order
//! (row 1 first) and inner cells left out. Expressions:
//! `{"basis", "terms": [{"index", "coeff"}]}` where an index is a list of
//! parts or, for skew `R`, `{"outer", "inner"}`. Tensor terms carry `left`
//! and `right` instead of `index`.

use serde::{Deserialize, Serialize};

use crate::compositions::{Composition, Partition, SkewShape, WeakComposition};
use crate::error::{Error, Result};
use crate::insertion_lr::{InsertionResult, LrWitness};
use crate::lincomb::{Coeff, LinComb};
use crate::qsym::{expand_in_f, skew_r, Basis, MonomialPoly, QSymExpr, SkewRoute, SymExpr, TensorExpr, TransitionMatrix, Triangularity};
use crate::tableaux::{Filling, TableauKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub kind: TableauKind,
    pub outer: Vec<u32>,
    #[serde(default)]
    pub inner: Vec<u32>,
    pub rows: Vec<Vec<u32>>,
}

impl From<&Filling> for TableauJson {
    fn from(t: &Filling) -> Self {
        TableauJson {
            kind: t.kind(),
            outer: t.shape().outer().parts().to_vec(),
            inner: t.shape().inner().to_vec(),
            rows: t.labels(),
        }
    }
}

impl TableauJson {
    pub fn to_filling(&self) -> Result<Filling> {
        let shape = SkewShape::new(Composition::new(self.outer.clone())?, WeakComposition(self.inner.clone()))?;
        Filling::from_labels(self.kind, shape, &self.rows)
    }
}

/// An index: a composition, partition or weak composition as parts, or a
/// skew shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndexJson {
    Parts(Vec<u32>),
    Skew { outer: Vec<u32>, inner: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub index: IndexJson,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExprJson {
    pub basis: String,
    pub terms: Vec<TermJson>,
}

fn comp_terms(terms: &LinComb<Composition>) -> Vec<TermJson> {
    terms
        .iter()
        .map(|(a, c)| TermJson { index: IndexJson::Parts(a.parts().to_vec()), coeff: c })
        .collect()
}

impl From<&QSymExpr> for ExprJson {
    fn from(e: &QSymExpr) -> Self {
        ExprJson { basis: e.basis().name().to_string(), terms: comp_terms(e.terms()) }
    }
}

impl From<&SymExpr> for ExprJson {
    fn from(e: &SymExpr) -> Self {
        let terms = e
            .terms()
            .iter()
            .map(|(l, c)| TermJson { index: IndexJson::Parts(l.parts().to_vec()), coeff: c })
            .collect();
        ExprJson { basis: "s".to_string(), terms }
    }
}

/// What an expression payload denotes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expression {
    QSym(QSymExpr),
    Sym(SymExpr),
}

impl ExprJson {
    /// Skew `R` indices are expanded into `F`, so an `R` payload with a skew
    /// term comes back in the `F` basis.
    pub fn to_expression(&self) -> Result<Expression> {
        if self.basis == "s" {
            let mut terms = LinComb::new();
            for t in &self.terms {
                match &t.index {
                    IndexJson::Parts(p) => terms.add_term(Partition::new(p.clone())?, t.coeff),
                    IndexJson::Skew { .. } => return Err(Error::Parse("Schur terms take partition indices".into())),
                }
            }
            return Ok(Expression::Sym(SymExpr::from_terms(terms)));
        }
        let basis: Basis = self.basis.parse()?;
        let has_skew = self.terms.iter().any(|t| matches!(t.index, IndexJson::Skew { .. }));
        if has_skew && basis != Basis::R {
            return Err(Error::Parse(format!("skew indices need basis R, not {basis}")));
        }
        let mut out = QSymExpr::zero(if has_skew { Basis::F } else { basis });
        for t in &self.terms {
            match &t.index {
                IndexJson::Parts(p) if has_skew => {
                    let e = expand_in_f(Basis::R, &Composition::new(p.clone())?);
                    out = out.checked_add(&e.scaled(t.coeff))?;
                }
                IndexJson::Parts(p) => out.add_term(Composition::new(p.clone())?, t.coeff),
                IndexJson::Skew { outer, inner } => {
                    let (a, b) = (Composition::new(outer.clone())?, Composition::new(inner.clone())?);
                    out = out.checked_add(&skew_r(&a, &b, SkewRoute::Combinatorial)?.scaled(t.coeff))?;
                }
            }
        }
        Ok(Expression::QSym(out))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub basis: String,
    pub terms: Vec<TensorTermJson>,
}

impl From<&TensorExpr> for TensorJson {
    fn from(e: &TensorExpr) -> Self {
        let terms = e
            .terms()
            .iter()
            .map(|((l, r), c)| TensorTermJson { left: l.parts().to_vec(), right: r.parts().to_vec(), coeff: c })
            .collect();
        TensorJson { basis: "F".to_string(), terms }
    }
}

impl TensorJson {
    pub fn to_tensor(&self) -> Result<TensorExpr> {
        if self.basis != "F" {
            return Err(Error::Parse(format!("tensor payloads are in F, not {}", self.basis)));
        }
        let mut terms = LinComb::new();
        for t in &self.terms {
            terms.add_term((Composition::new(t.left.clone())?, Composition::new(t.right.clone())?), t.coeff);
        }
        Ok(TensorExpr::from_terms(terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub exponents: Vec<u32>,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: usize,
    pub terms: Vec<MonomialJson>,
}

impl From<&MonomialPoly> for PolyJson {
    fn from(p: &MonomialPoly) -> Self {
        let terms = p
            .terms()
            .iter()
            .map(|(e, c)| MonomialJson { exponents: e.clone(), coeff: c })
            .collect();
        PolyJson { vars: p.num_vars(), terms }
    }
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<MonomialPoly> {
        let mut p = MonomialPoly::zero(self.vars);
        for t in &self.terms {
            p.add_monomial(&t.exponents, t.coeff)?;
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: u32,
    pub rows: Vec<Vec<u32>>,
    pub cols: Vec<Vec<u32>>,
    pub entries: Vec<Vec<Coeff>>,
    pub triangularity: String,
    pub unit_diagonal: bool,
    pub determinant: Coeff,
}

impl From<&TransitionMatrix> for MatrixJson {
    fn from(m: &TransitionMatrix) -> Self {
        let tri = match m.triangularity() {
            Triangularity::Upper => "upper",
            Triangularity::Lower => "lower",
            Triangularity::Diagonal => "diagonal",
            Triangularity::Neither => "neither",
        };
        MatrixJson {
            n: m.n,
            rows: m.rows.iter().map(|c| c.parts().to_vec()).collect(),
            cols: m.cols.iter().map(|c| c.parts().to_vec()).collect(),
            entries: m.entries.clone(),
            triangularity: tri.to_string(),
            unit_diagonal: m.has_unit_diagonal(),
            determinant: m.determinant(),
        }
    }
}

/// Cells are one-based `[row, column]` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionJson {
    pub tableau: TableauJson,
    pub new_cell: [usize; 2],
    pub bump_path: Vec<[usize; 2]>,
}

impl From<&InsertionResult> for InsertionJson {
    fn from(r: &InsertionResult) -> Self {
        let one = |(a, b): (usize, usize)| [a + 1, b + 1];
        InsertionJson {
            tableau: TableauJson::from(&r.tableau),
            new_cell: one(r.new_cell),
            bump_path: r.bump_path.iter().copied().map(one).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrWitnessJson {
    pub content: Vec<u32>,
    pub gamma: Vec<u32>,
    pub filling: TableauJson,
}

impl From<&LrWitness> for LrWitnessJson {
    fn from(w: &LrWitness) -> Self {
        LrWitnessJson {
            content: w.content.parts().to_vec(),
            gamma: w.shape().inner().to_vec(),
            filling: TableauJson::from(&w.filling),
        }
    }
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("payload types always serialize")
}

pub fn from_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::{coproduct, transition_matrix_r_to_f};

    fn round_trip<T: Serialize + for<'de> Deserialize<'de>>(v: &T) {
        let s = to_string(v);
        let back: T = from_str(&s).unwrap();
        assert_eq!(to_string(&back), s);
    }

    #[test]
    fn tableau_payload() {
        let t = Filling::from_labels(
            TableauKind::Ssyrt,
            "(3,4,1,4)//(2,3)".parse().unwrap(),
            &[vec![4], vec![1], vec![1], vec![1, 2, 3, 4]],
        )
        .unwrap();
        let j = TableauJson::from(&t);
        assert_eq!(j.inner, vec![2, 3, 0, 0]);
        assert_eq!(j.to_filling().unwrap(), t);
        round_trip(&j);
        let short: TableauJson = from_str(r#"{"kind":"SSYRT","outer":[1,2],"rows":[[1],[1,2]]}"#).unwrap();
        assert_eq!(short.to_filling().unwrap().labels(), vec![vec![1], vec![1, 2]]);
        assert!(from_str::<TableauJson>(r#"{"kind":"nope","outer":[],"rows":[]}"#).is_err());
    }

    #[test]
    fn expression_payloads() {
        let e = expand_in_f(Basis::R, &Composition::from_slice(&[2, 3]));
        let j = ExprJson::from(&e);
        round_trip(&j);
        assert_eq!(j.to_expression().unwrap(), Expression::QSym(e));
        let skew: ExprJson = from_str(r#"{"basis":"R","terms":[{"index":{"outer":[2,1],"inner":[1]},"coeff":1}]}"#).unwrap();
        let Expression::QSym(f) = skew.to_expression().unwrap() else { panic!() };
        assert_eq!(f.basis(), Basis::F);
        let s = SymExpr::schur(Partition::from_slice(&[2, 1]));
        assert_eq!(ExprJson::from(&s).to_expression().unwrap(), Expression::Sym(s));
        let t = coproduct(&QSymExpr::basis_element(Basis::F, Composition::from_slice(&[2, 1]))).unwrap();
        let tj = TensorJson::from(&t);
        round_trip(&tj);
        assert_eq!(tj.to_tensor().unwrap(), t);
    }

    #[test]
    fn matrix_and_poly_payloads() {
        let m = MatrixJson::from(&*transition_matrix_r_to_f(3));
        assert!(m.unit_diagonal);
        assert_eq!(m.determinant, 1);
        round_trip(&m);
        let p = MonomialPoly::monomial_quasisymmetric(&Composition::from_slice(&[1, 2]), 3);
        let pj = PolyJson::from(&p);
        round_trip(&pj);
        assert_eq!(pj.to_poly().unwrap(), p);
    }
}
