use std::collections::BTreeSet;

use crate::compositions::{deconcatenations, Composition, Partition, SkewShape, SplitKind};
use crate::error::{Error, Result};
use crate::lincomb::{checked_mul, LinComb};
use crate::par::{self, Exec};
use crate::tableaux::{descent_data, enumerate_fillings_with, enumerate_standard_with, Filling, TableauKind};

use super::expr::{Basis, QSymExpr, SymExpr, TensorExpr};
use super::matrix::transition_matrix_r_to_f_with;
use super::poly::MonomialPoly;

/// Which descent composition a standard filling contributes.
fn descent_comp(kind: TableauKind, t: &Filling) -> Composition {
    let d = descent_data(t).expect("enumerated standard filling");
    match kind {
        TableauKind::Ssyrt => d.comp_hat,
        TableauKind::Ssrrt => d.comp_prime,
        // i with i+1 weakly left of i
        TableauKind::Ssyct => d.comp_hat.complement(),
        // i with i+1 weakly right of i
        TableauKind::Ssrct => d.comp_prime.complement(),
        _ => unreachable!("partition kinds have no composition basis"),
    }
}

fn standard_expansion(exec: Exec, kind: TableauKind, shape: &SkewShape) -> QSymExpr {
    let mut out = QSymExpr::zero(Basis::F);
    for t in enumerate_standard_with(exec, kind, shape) {
        out.add_term(descent_comp(kind, &t), 1);
    }
    out
}

pub(crate) fn expand_r_in_f(exec: Exec, alpha: &Composition) -> QSymExpr {
    standard_expansion(exec, TableauKind::Ssyrt, &SkewShape::straight(alpha.clone()))
}

/// The tableau family generating each composition-indexed basis.
pub fn generating_kind(basis: Basis) -> Option<TableauKind> {
    match basis {
        Basis::R => Some(TableauKind::Ssyrt),
        Basis::RS => Some(TableauKind::Ssrrt),
        Basis::S => Some(TableauKind::Ssyct),
        Basis::QS => Some(TableauKind::Ssrct),
        Basis::M | Basis::F => None,
    }
}

/// Compositions refining `alpha`, i.e. with a superset of its cut points.
pub fn refinements(alpha: &Composition) -> Vec<Composition> {
    let n = alpha.weight();
    let base = alpha.to_subset();
    let free: Vec<u32> = (1..n).filter(|i| !base.contains(i)).collect();
    (0u64..1 << free.len())
        .map(|mask| {
            let mut s = base.clone();
            s.extend(free.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &x)| x));
            Composition::from_subset(&s, n).expect("in range")
        })
        .collect()
}

/// Expansion of a single basis element in the fundamental basis.
pub fn expand_in_f(basis: Basis, alpha: &Composition) -> QSymExpr {
    expand_in_f_with(Exec::default(), basis, alpha)
}

pub fn expand_in_f_with(exec: Exec, basis: Basis, alpha: &Composition) -> QSymExpr {
    match basis {
        Basis::F => QSymExpr::basis_element(Basis::F, alpha.clone()),
        // M_α = Σ (-1)^{ℓ(β)-ℓ(α)} F_β over refinements β
        Basis::M => {
            let mut out = QSymExpr::zero(Basis::F);
            for beta in refinements(alpha) {
                let sign = if (beta.len() - alpha.len()) % 2 == 0 { 1 } else { -1 };
                out.add_term(beta, sign);
            }
            out
        }
        _ => standard_expansion(exec, generating_kind(basis).unwrap(), &SkewShape::straight(alpha.clone())),
    }
}

/// Rewrites any composition-indexed expression in the fundamental basis.
pub fn to_f(e: &QSymExpr) -> QSymExpr {
    to_f_with(Exec::default(), e)
}

pub fn to_f_with(exec: Exec, e: &QSymExpr) -> QSymExpr {
    if e.basis() == Basis::F {
        return e.clone();
    }
    let mut out = LinComb::new();
    for (alpha, c) in e.terms().iter() {
        out.add_scaled(expand_in_f_with(exec, e.basis(), alpha).terms(), c);
    }
    QSymExpr::from_terms(Basis::F, out)
}

/// `F_α = Σ_{β refines α} M_β`, extended linearly.
pub fn f_to_m(e: &QSymExpr) -> Result<QSymExpr> {
    expect_basis(e, Basis::F, "f_to_m")?;
    let mut out = LinComb::new();
    for (alpha, c) in e.terms().iter() {
        for beta in refinements(alpha) {
            out.add_term(beta, c);
        }
    }
    Ok(QSymExpr::from_terms(Basis::M, out))
}

/// Inverse of [`f_to_m`] by peeling off the coarsest remaining term.
pub fn m_to_f(e: &QSymExpr) -> Result<QSymExpr> {
    expect_basis(e, Basis::M, "m_to_f")?;
    let mut rest = e.terms().clone();
    let mut out = LinComb::new();
    while let Some((alpha, c)) = rest
        .iter()
        .min_by_key(|(a, _)| (a.len(), (*a).clone()))
        .map(|(a, c)| (a.clone(), c))
    {
        for beta in refinements(&alpha) {
            rest.add_term(beta, -c);
        }
        out.add_term(alpha, c);
    }
    Ok(QSymExpr::from_terms(Basis::F, out))
}

fn expect_basis(e: &QSymExpr, b: Basis, op: &str) -> Result<()> {
    if e.basis() != b {
        return Err(Error::Domain(format!("{op} expects a {b} expression, got {}", e.basis())));
    }
    Ok(())
}

/// Evaluation in `x_1, …, x_k`, routed through the M basis.
pub fn to_monomials(e: &QSymExpr, k: usize) -> MonomialPoly {
    let m = if e.basis() == Basis::M { e.clone() } else { f_to_m(&to_f(e)).expect("F expression") };
    let mut p = MonomialPoly::zero(k);
    for (beta, c) in m.terms().iter() {
        p.add_scaled(&MonomialPoly::monomial_quasisymmetric(beta, k), c);
    }
    p
}

/// Sum of the weight monomials of `fillings` in `k` variables.
pub fn weight_sum<'a>(fillings: impl IntoIterator<Item = &'a Filling>, k: usize) -> Result<MonomialPoly> {
    let mut p = MonomialPoly::zero(k);
    for f in fillings {
        p.add_monomial(&f.weight(k), 1)?;
    }
    Ok(p)
}

/// `s_{λ/μ}(x_1, …, x_k)` from semistandard Young tableaux.
pub fn schur_poly(lambda: &Partition, mu: &Partition, k: usize) -> Result<MonomialPoly> {
    schur_poly_with(Exec::default(), lambda, mu, k)
}

pub fn schur_poly_with(exec: Exec, lambda: &Partition, mu: &Partition, k: usize) -> Result<MonomialPoly> {
    if !mu.contained_in(lambda) {
        return Err(Error::Domain(format!("{mu} is not contained in {lambda}")));
    }
    let shape = SkewShape::from_compositions(&lambda.as_composition(), &mu.as_composition())?;
    let tabs = enumerate_fillings_with(exec, TableauKind::Ssyt, &shape, k as u32);
    weight_sum(&tabs, k)
}

pub fn sym_to_monomials(e: &SymExpr, k: usize) -> Result<MonomialPoly> {
    let mut p = MonomialPoly::zero(k);
    for (lambda, c) in e.terms().iter() {
        p.add_scaled(&schur_poly(lambda, &Partition::empty(), k)?, c);
    }
    Ok(p)
}

/// `ΔF_α = Σ F_β ⊗ F_γ` over the cuts of `α`, extended linearly.
pub fn coproduct(e: &QSymExpr) -> Result<TensorExpr> {
    expect_basis(e, Basis::F, "coproduct")?;
    let mut out = LinComb::new();
    for (alpha, c) in e.terms().iter() {
        for d in deconcatenations(alpha) {
            out.add_term((d.left, d.right), c);
        }
    }
    Ok(TensorExpr::from_terms(out))
}

/// `(Δ ⊗ id)` applied to a tensor, as triples.
pub fn coproduct_left(t: &TensorExpr) -> LinComb<(Composition, Composition, Composition)> {
    let mut out = LinComb::new();
    for ((l, r), c) in t.terms().iter() {
        for d in deconcatenations(l) {
            out.add_term((d.left, d.right, r.clone()), c);
        }
    }
    out
}

/// `(id ⊗ Δ)` applied to a tensor, as triples.
pub fn coproduct_right(t: &TensorExpr) -> LinComb<(Composition, Composition, Composition)> {
    let mut out = LinComb::new();
    for ((l, r), c) in t.terms().iter() {
        for d in deconcatenations(r) {
            out.add_term((l.clone(), d.left, d.right), c);
        }
    }
    out
}

/// Count of near-concatenation cuts, exposed for term-count checks.
pub fn split_kinds(alpha: &Composition) -> (usize, usize) {
    let d = deconcatenations(alpha);
    let near = d.iter().filter(|x| x.kind == SplitKind::NearConcat).count();
    (d.len() - near, near)
}

/// `ω(F_α) = (-1)^{|α|} S(F_α) = F_{rev(complement(α))}`.
pub fn omega(e: &QSymExpr) -> Result<QSymExpr> {
    expect_basis(e, Basis::F, "omega")?;
    Ok(QSymExpr::from_terms(Basis::F, e.terms().map_keys(|a| a.complement().reversed())))
}

/// `F_α ↦ F_{complement(α)}`, which agrees with [`omega`] up to reversing
/// the variables.
pub fn complement_map(e: &QSymExpr) -> Result<QSymExpr> {
    expect_basis(e, Basis::F, "complement_map")?;
    Ok(QSymExpr::from_terms(Basis::F, e.terms().map_keys(|a| a.complement())))
}

/// `S(F_α) = (-1)^{|α|} F_{rev(complement(α))}`.
pub fn antipode(e: &QSymExpr) -> Result<QSymExpr> {
    expect_basis(e, Basis::F, "antipode")?;
    let mut out = LinComb::new();
    for (a, c) in e.terms().iter() {
        let sign = if a.weight() % 2 == 0 { 1 } else { -1 };
        out.add_term(a.complement().reversed(), c * sign);
    }
    Ok(QSymExpr::from_terms(Basis::F, out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkewRoute {
    /// Descent compositions of standard skew fillings.
    Combinatorial,
    /// Coefficient extraction from the coproduct of `R_α`.
    Hopf,
}

/// `R_{α//β}` in the fundamental basis; zero unless `β ⊂ α`.
pub fn skew_r(alpha: &Composition, beta: &Composition, route: SkewRoute) -> Result<QSymExpr> {
    skew_r_with(Exec::default(), alpha, beta, route)
}

pub fn skew_r_with(exec: Exec, alpha: &Composition, beta: &Composition, route: SkewRoute) -> Result<QSymExpr> {
    if !beta.contained_in(alpha) {
        return Ok(QSymExpr::zero(Basis::F));
    }
    match route {
        SkewRoute::Combinatorial => {
            let shape = SkewShape::from_compositions(alpha, beta)?;
            Ok(standard_expansion(exec, TableauKind::Ssyrt, &shape))
        }
        SkewRoute::Hopf => {
            let delta = coproduct(&expand_r_in_f(exec, alpha))?;
            let m = transition_matrix_r_to_f_with(exec, beta.weight());
            let inv = m.inverse()?;
            let k = m.row_of(beta).expect("composition of the right weight");
            let mut out = LinComb::new();
            for ((left, right), c) in delta.terms().iter() {
                if left.weight() != beta.weight() {
                    continue;
                }
                let j = m.col_of(left).expect("composition of the right weight");
                out.add_term(right.clone(), checked_mul(inv[j][k], c));
            }
            Ok(QSymExpr::from_terms(Basis::F, out))
        }
    }
}

/// Rewrites an expression in the R basis, degree by degree.
pub fn to_r(e: &QSymExpr) -> Result<QSymExpr> {
    to_r_with(Exec::default(), e)
}

pub fn to_r_with(exec: Exec, e: &QSymExpr) -> Result<QSymExpr> {
    if e.basis() == Basis::R {
        return Ok(e.clone());
    }
    let f = to_f_with(exec, e);
    let mut out = LinComb::new();
    for n in f.degrees() {
        let m = transition_matrix_r_to_f_with(exec, n);
        let inv = m.inverse()?;
        for (beta, c) in f.terms().iter().filter(|(b, _)| b.weight() == n) {
            let j = m.col_of(beta).expect("same degree");
            for (k, alpha) in m.rows.iter().enumerate() {
                if inv[j][k] != 0 {
                    out.add_term(alpha.clone(), checked_mul(inv[j][k], c));
                }
            }
        }
    }
    Ok(QSymExpr::from_terms(Basis::R, out))
}

fn homogeneous_degree(degrees: &[u32], what: &str) -> Result<u32> {
    match degrees {
        [] => Ok(0),
        [d] => Ok(*d),
        _ => Err(Error::Domain(format!("{what} is not homogeneous"))),
    }
}

/// `a · b` computed on monomials in `deg a + deg b` variables and decomposed
/// into the R basis.
pub fn product_and_decompose(a: &QSymExpr, b: &SymExpr) -> Result<QSymExpr> {
    let da = homogeneous_degree(&a.degrees(), "left factor")?;
    let mut db: Vec<u32> = b.terms().keys().map(|l| l.weight()).collect();
    db.dedup();
    let db = homogeneous_degree(&db, "right factor")?;
    let k = (da + db) as usize;
    let pa = to_monomials(a, k);
    let pb = sym_to_monomials(b, k)?;
    let prod = pa.mul(&pb)?;
    let m = prod.to_m().map_err(|e| Error::Internal(format!("product is not quasisymmetric: {e}")))?;
    let f = m_to_f(&m)?;
    let r = to_r(&f)?;
    let back = to_monomials(&r, k);
    if back != prod {
        return Err(Error::Internal("R-decomposition does not reproduce the product".into()));
    }
    Ok(r)
}

/// `s_{λ/μ}` and `Σ R_{α//β}` over `α` rearranging `λ′` with `β = rev(μ′)`,
/// both in `k` variables. The inner shape is fixed: letting `β` range over
/// all rearrangements of `μ′` counts fillings that `h` never reaches, such as
/// the empty filling of `(2,1)//(2,1)`.
pub fn schur_sums(lambda: &Partition, mu: &Partition, k: usize) -> Result<(MonomialPoly, MonomialPoly)> {
    schur_sums_with(Exec::default(), lambda, mu, k)
}

pub fn schur_sums_with(exec: Exec, lambda: &Partition, mu: &Partition, k: usize) -> Result<(MonomialPoly, MonomialPoly)> {
    let s = schur_poly_with(exec, lambda, mu, k)?;
    let outers = Composition::rearrangements(&lambda.conjugate());
    let inner = mu.conjugate().as_composition().reversed();
    let pairs: Vec<(Composition, Composition)> = outers
        .into_iter()
        .filter(|a| inner.contained_in(a))
        .map(|a| (a, inner.clone()))
        .collect();
    let parts = par::try_map(exec, pairs, |(a, b)| {
        skew_r_with(Exec::Sequential, &a, &b, SkewRoute::Combinatorial).map(|e| to_monomials(&e, k))
    })?;
    let mut total = MonomialPoly::zero(k);
    for p in &parts {
        total.add_scaled(p, 1);
    }
    Ok((s, total))
}

/// `Σ_{shape(α)=λ} X_α` for a composition-indexed basis.
pub fn rearrangement_sum(basis: Basis, lambda: &Partition) -> QSymExpr {
    let mut out = QSymExpr::zero(basis);
    for a in Composition::rearrangements(lambda) {
        out.add_term(a, 1);
    }
    out
}

/// Descent sets of the standard fillings generating a basis element.
pub fn descent_sets(basis: Basis, alpha: &Composition) -> Vec<BTreeSet<u32>> {
    let Some(kind) = generating_kind(basis) else {
        return Vec::new();
    };
    enumerate_standard_with(Exec::default(), kind, &SkewShape::straight(alpha.clone()))
        .iter()
        .map(|t| descent_comp(kind, t).to_subset())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[u32]) -> Composition {
        Composition::from_slice(p)
    }

    #[test]
    fn r23_in_f() {
        let e = expand_in_f(Basis::R, &c(&[2, 3]));
        assert_eq!(e.to_string(), "F(2,2,1) + F(2,1,2) + F(1,2,1,1)");
    }

    #[test]
    fn row_and_column() {
        for n in 1..=6u32 {
            let row = c(&[n]);
            let col = Composition::new(vec![1; n as usize]).unwrap();
            assert_eq!(expand_in_f(Basis::R, &row), QSymExpr::basis_element(Basis::F, col.clone()));
            assert_eq!(expand_in_f(Basis::R, &col), QSymExpr::basis_element(Basis::F, row.clone()));
            assert_eq!(expand_in_f(Basis::S, &row), QSymExpr::basis_element(Basis::F, row.clone()));
            assert_eq!(expand_in_f(Basis::QS, &row), QSymExpr::basis_element(Basis::F, row.clone()));
            assert_eq!(expand_in_f(Basis::RS, &row), QSymExpr::basis_element(Basis::F, col));
        }
    }

    #[test]
    fn f_m_round_trip() {
        let f2 = QSymExpr::basis_element(Basis::F, c(&[2]));
        assert_eq!(f_to_m(&f2).unwrap().to_string(), "M(2) + M(1,1)");
        for n in 0..=5 {
            for a in Composition::all_of(n) {
                let f = QSymExpr::basis_element(Basis::F, a.clone());
                assert_eq!(m_to_f(&f_to_m(&f).unwrap()).unwrap(), f);
                let m = QSymExpr::basis_element(Basis::M, a);
                assert_eq!(f_to_m(&to_f(&m)).unwrap(), m);
            }
        }
    }

    #[test]
    fn shape_1212_polynomial() {
        let p = to_monomials(&QSymExpr::basis_element(Basis::R, c(&[1, 2, 1, 2])), 4);
        let mut want = MonomialPoly::zero(4);
        for e in [[2, 3, 1, 0], [2, 3, 0, 1], [2, 2, 1, 1], [2, 1, 2, 1], [2, 0, 3, 1], [1, 1, 3, 1], [0, 2, 3, 1]] {
            want.add_monomial(&e, 1).unwrap();
        }
        assert_eq!(p, want);
        assert!(p.is_quasisymmetric_in_vars());
        assert!(p.is_quasisymmetric().is_err());
    }

    #[test]
    fn coproduct_of_f21() {
        let d = coproduct(&QSymExpr::basis_element(Basis::F, c(&[2, 1]))).unwrap();
        assert_eq!(d.terms().len(), 4);
        for (l, r) in [(vec![], vec![2, 1]), (vec![1], vec![1, 1]), (vec![2], vec![1]), (vec![2, 1], vec![])] {
            assert_eq!(d.coeff(&c(&l), &c(&r)), 1);
        }
        let unit = coproduct(&QSymExpr::basis_element(Basis::F, Composition::empty())).unwrap();
        assert_eq!(unit.to_string(), "1⊗1");
    }

    #[test]
    fn omega_and_antipode() {
        let f = QSymExpr::basis_element(Basis::F, c(&[1, 4, 2]));
        assert_eq!(omega(&f).unwrap().to_string(), "F(1,2,1,1,2)");
        assert_eq!(complement_map(&f).unwrap().to_string(), "F(2,1,1,2,1)");
        assert_eq!(omega(&omega(&f).unwrap()).unwrap(), f);
        assert_eq!(antipode(&f).unwrap().to_string(), "-F(1,2,1,1,2)");
        assert!(omega(&QSymExpr::basis_element(Basis::R, c(&[1]))).is_err());
    }

    #[test]
    fn skew_routes_small() {
        for n in 0..=4 {
            for a in Composition::all_of(n) {
                for m in 0..=n {
                    for b in Composition::all_of(m) {
                        let x = skew_r(&a, &b, SkewRoute::Combinatorial).unwrap();
                        let y = skew_r(&a, &b, SkewRoute::Hopf).unwrap();
                        assert_eq!(x, y, "{a}//{b}");
                    }
                }
                let unit = skew_r(&a, &a, SkewRoute::Combinatorial).unwrap();
                assert_eq!(unit, QSymExpr::basis_element(Basis::F, Composition::empty()));
            }
        }
    }

    #[test]
    fn two_one_skew_sum_is_symmetric() {
        let a = skew_r(&c(&[2, 1]), &c(&[1]), SkewRoute::Combinatorial).unwrap();
        let b = skew_r(&c(&[1, 2]), &c(&[1]), SkewRoute::Combinatorial).unwrap();
        let sum = to_monomials(&a.checked_add(&b).unwrap(), 2);
        let s2 = schur_poly(&Partition::from_slice(&[2]), &Partition::empty(), 2).unwrap();
        let s11 = schur_poly(&Partition::from_slice(&[1, 1]), &Partition::empty(), 2).unwrap();
        assert_eq!(sum, s2.add(&s11).unwrap());
    }

    #[test]
    fn products() {
        let r = QSymExpr::basis_element(Basis::R, c(&[2, 1]));
        let p = product_and_decompose(&r, &SymExpr::schur(Partition::empty())).unwrap();
        assert_eq!(p, r);
        let p = product_and_decompose(&QSymExpr::basis_element(Basis::R, c(&[1])), &SymExpr::schur(Partition::from_slice(&[1]))).unwrap();
        assert!(p.terms().iter().all(|(a, c)| a.weight() == 2 && c > 0));
    }

    #[test]
    fn schur_as_r_sum() {
        let lambda = Partition::from_slice(&[2, 1]);
        let (s, sum) = schur_sums(&lambda, &Partition::empty(), 3).unwrap();
        assert_eq!(s, sum);
        let decomposed = to_r(&m_to_f(&s.to_m().unwrap()).unwrap()).unwrap();
        assert_eq!(decomposed, rearrangement_sum(Basis::R, &lambda.conjugate()));
    }

    #[test]
    fn antipode_convolution_vanishes() {
        for n in 1..=4u32 {
            for alpha in Composition::all_of(n) {
                let k = n as usize;
                let mut total = MonomialPoly::zero(k);
                for d in deconcatenations(&alpha) {
                    let s = antipode(&QSymExpr::basis_element(Basis::F, d.left.clone())).unwrap();
                    let r = to_monomials(&QSymExpr::basis_element(Basis::F, d.right.clone()), k);
                    total.add_scaled(&to_monomials(&s, k).mul(&r).unwrap(), 1);
                }
                assert!(total.is_zero(), "{alpha}");
            }
        }
    }
}
