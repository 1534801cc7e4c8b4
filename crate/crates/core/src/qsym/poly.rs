use std::collections::BTreeMap;
use std::fmt;

use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::lincomb::{checked_mul, write_terms, Coeff, LinComb};

use super::expr::{Basis, QSymExpr};

/// A polynomial in `x_1, …, x_k` with integer coefficients, stored as a map
/// from exponent vectors of length `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialPoly {
    k: usize,
    terms: LinComb<Vec<u32>>,
}

/// Increasing `l`-subsets of `0..k` in lexicographic order.
pub(crate) fn subsets(k: usize, l: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, l: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            if k - i < l - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, k, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if l <= k {
        rec(0, k, l, &mut Vec::new(), &mut out);
    }
    out
}

fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

impl MonomialPoly {
    pub fn zero(k: usize) -> Self {
        MonomialPoly { k, terms: LinComb::new() }
    }

    pub fn one(k: usize) -> Self {
        MonomialPoly { k, terms: LinComb::single(vec![0; k], 1) }
    }

    pub fn num_vars(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &LinComb<Vec<u32>> {
        &self.terms
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

    pub fn coeff(&self, exps: &[u32]) -> Coeff {
        self.terms.coeff(&exps.to_vec())
    }

    /// Adds `c · x^exps`; `exps` may be shorter than `k` (zero-padded) but
    /// must not carry a nonzero exponent past `x_k`.
    pub fn add_monomial(&mut self, exps: &[u32], c: Coeff) -> Result<()> {
        if exps.len() > self.k && exps[self.k..].iter().any(|&e| e > 0) {
            return Err(Error::Domain(format!("monomial {exps:?} uses more than {} variables", self.k)));
        }
        let mut v = exps[..exps.len().min(self.k)].to_vec();
        v.resize(self.k, 0);
        self.terms.add_term(v, c);
        Ok(())
    }

    /// `M_β(x_1, …, x_k)`.
    pub fn monomial_quasisymmetric(beta: &Composition, k: usize) -> Self {
        let mut p = Self::zero(k);
        for s in subsets(k, beta.len()) {
            let mut e = vec![0; k];
            for (&i, &b) in s.iter().zip(beta.parts()) {
                e[i] = b;
            }
            p.terms.add_term(e, 1);
        }
        p
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add_scaled(&mut self, other: &Self, c: Coeff) {
        assert_eq!(self.k, other.k, "variable counts differ");
        self.terms.add_scaled(&other.terms, c);
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        Ok(MonomialPoly { k: self.k, terms: &self.terms + &other.terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        Ok(MonomialPoly { k: self.k, terms: &self.terms - &other.terms })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = LinComb::new();
        for (a, ca) in self.terms.iter() {
            for (b, cb) in other.terms.iter() {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, checked_mul(ca, cb));
            }
        }
        Ok(MonomialPoly { k: self.k, terms: out })
    }

    /// `x_i ↦ x_{k+1-i}`.
    pub fn reverse_variables(&self) -> Self {
        MonomialPoly {
            k: self.k,
            terms: self.terms.map_keys(|e| e.iter().rev().copied().collect()),
        }
    }

    fn same_vars(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(Error::Domain(format!("polynomials in {} and {} variables", self.k, other.k)));
        }
        Ok(())
    }

    /// Groups monomials by their exponent vector with zeros removed; each
    /// group must be complete and constant.
    fn flattened_classes(&self) -> Option<BTreeMap<Composition, Coeff>> {
        let mut classes: BTreeMap<Composition, (Coeff, usize)> = BTreeMap::new();
        for (e, c) in self.terms.iter() {
            let flat = Composition::new(e.iter().copied().filter(|&x| x > 0).collect()).expect("positive");
            let slot = classes.entry(flat).or_insert((c, 0));
            if slot.0 != c {
                return None;
            }
            slot.1 += 1;
        }
        let mut out = BTreeMap::new();
        for (beta, (c, count)) in classes {
            if count != binomial(self.k, beta.len()) {
                return None;
            }
            out.insert(beta, c);
        }
        Some(out)
    }

    fn require_faithful(&self) -> Result<()> {
        let d = self.degree() as usize;
        if self.k < d {
            return Err(Error::Inconclusive(format!(
                "quasisymmetry in {} variables cannot be certified at degree {d}",
                self.k
            )));
        }
        Ok(())
    }

    /// Quasisymmetry of the polynomial itself in its `k` variables, with no
    /// claim about the function it was truncated from.
    pub fn is_quasisymmetric_in_vars(&self) -> bool {
        self.flattened_classes().is_some()
    }

    /// Needs at least as many variables as the degree.
    pub fn is_quasisymmetric(&self) -> Result<bool> {
        self.require_faithful()?;
        Ok(self.is_quasisymmetric_in_vars())
    }

    /// The M-expansion of a quasisymmetric polynomial.
    pub fn to_m(&self) -> Result<QSymExpr> {
        self.require_faithful()?;
        let classes = self
            .flattened_classes()
            .ok_or_else(|| Error::Domain("polynomial is not quasisymmetric".into()))?;
        Ok(QSymExpr::from_terms(Basis::M, classes.into_iter().collect()))
    }
}

impl fmt::Display for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, |e| {
            let parts: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{x}", i + 1) })
                .collect();
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join("*")
            }
        })
    }
}

impl fmt::Debug for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m12_in_three_vars() {
        let p = MonomialPoly::monomial_quasisymmetric(&Composition::from_slice(&[1, 2]), 3);
        assert_eq!(p.to_string(), "x1*x2^2 + x1*x3^2 + x2*x3^2");
        assert!(p.is_quasisymmetric().unwrap());
        assert_eq!(p.to_m().unwrap().to_string(), "M(1,2)");
    }

    #[test]
    fn quasisymmetry_failures() {
        let mut p = MonomialPoly::zero(3);
        p.add_monomial(&[2, 1, 0], 1).unwrap();
        assert!(!p.is_quasisymmetric().unwrap());
        let mut q = MonomialPoly::zero(2);
        q.add_monomial(&[1, 1, 1], 1).unwrap_err();
        q.add_monomial(&[2, 1], 1).unwrap();
        q.add_monomial(&[1, 0], 1).unwrap();
        assert!(matches!(q.is_quasisymmetric(), Err(Error::Inconclusive(_))));
    }

    #[test]
    fn product_and_reversal() {
        let e1 = MonomialPoly::monomial_quasisymmetric(&Composition::from_slice(&[1]), 2);
        let sq = e1.mul(&e1).unwrap();
        assert_eq!(sq.coeff(&[1, 1]), 2);
        assert_eq!(sq.degree(), 2);
        let mut x = MonomialPoly::zero(3);
        x.add_monomial(&[2, 0, 1], 1).unwrap();
        assert_eq!(x.reverse_variables().coeff(&[1, 0, 2]), 1);
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(binomial(6, 3), 20);
    }
}
