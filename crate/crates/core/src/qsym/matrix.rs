use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::compositions::{total_order_cmp, Composition};
use crate::error::{Error, Result};
use crate::lincomb::{checked, checked_mul, Coeff};
use crate::par::{self, Exec};

use super::ops::expand_r_in_f;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triangularity {
    Upper,
    Lower,
    /// Diagonal matrices are both.
    Diagonal,
    Neither,
}

/// Coefficients of `F_β` in `R_α` for `α, β ⊨ n`. Rows follow the total
/// order on compositions; column `j` is the complement of row `j`, so the
/// diagonal holds the coefficient of `F_{complement(α)}` in `R_α`.
#[derive(Debug)]
pub struct TransitionMatrix {
    pub n: u32,
    pub rows: Vec<Composition>,
    pub cols: Vec<Composition>,
    pub entries: Vec<Vec<Coeff>>,
    row_index: HashMap<Composition, usize>,
    col_index: HashMap<Composition, usize>,
    inverse: OnceLock<Result<Vec<Vec<Coeff>>>>,
}

impl TransitionMatrix {
    pub fn build(exec: Exec, n: u32) -> Self {
        let mut rows = Composition::all_of(n);
        rows.sort_by(total_order_cmp);
        let cols: Vec<Composition> = rows.iter().map(|a| a.complement()).collect();
        let col_index: HashMap<Composition, usize> = cols.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let row_index: HashMap<Composition, usize> = rows.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let entries = par::map(exec, rows.clone(), |alpha| {
            let mut row = vec![0; cols.len()];
            for (beta, c) in expand_r_in_f(Exec::Sequential, &alpha).terms().iter() {
                row[col_index[beta]] = c;
            }
            row
        });
        TransitionMatrix { n, rows, cols, entries, row_index, col_index, inverse: OnceLock::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, alpha: &Composition, beta: &Composition) -> Coeff {
        match (self.row_index.get(alpha), self.col_index.get(beta)) {
            (Some(&i), Some(&j)) => self.entries[i][j],
            _ => 0,
        }
    }

    pub fn row_of(&self, alpha: &Composition) -> Option<usize> {
        self.row_index.get(alpha).copied()
    }

    pub fn col_of(&self, beta: &Composition) -> Option<usize> {
        self.col_index.get(beta).copied()
    }

    pub fn triangularity(&self) -> Triangularity {
        let d = self.dim();
        let upper = (0..d).all(|i| (0..i).all(|j| self.entries[i][j] == 0));
        let lower = (0..d).all(|i| (i + 1..d).all(|j| self.entries[i][j] == 0));
        match (upper, lower) {
            (true, true) => Triangularity::Diagonal,
            (true, false) => Triangularity::Upper,
            (false, true) => Triangularity::Lower,
            (false, false) => Triangularity::Neither,
        }
    }

    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.dim()).all(|i| self.entries[i][i] == 1)
    }

    pub fn is_unitriangular(&self) -> bool {
        self.has_unit_diagonal() && self.triangularity() != Triangularity::Neither
    }

    /// Fraction-free Gaussian elimination.
    pub fn determinant(&self) -> Coeff {
        let d = self.dim();
        if d == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> = self.entries.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..d - 1 {
            if a[k][k] == 0 {
                match (k + 1..d).find(|&i| a[i][k] != 0) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    let num = a[i][j]
                        .checked_mul(a[k][k])
                        .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                        .expect("determinant overflow");
                    a[i][j] = num / prev;
                }
            }
            prev = a[k][k];
        }
        Coeff::try_from(sign * a[d - 1][d - 1]).expect("determinant overflow")
    }

    /// Exact integer inverse of a unitriangular matrix, indexed
    /// `[column position][row position]`.
    pub fn inverse(&self) -> Result<&Vec<Vec<Coeff>>> {
        self.inverse
            .get_or_init(|| self.compute_inverse())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn compute_inverse(&self) -> Result<Vec<Vec<Coeff>>> {
        if !self.is_unitriangular() {
            return Err(Error::Internal(format!("transition matrix for n={} is not unitriangular", self.n)));
        }
        let d = self.dim();
        let upper = self.triangularity() != Triangularity::Lower;
        let a = &self.entries;
        let mut inv = vec![vec![0; d]; d];
        for i in 0..d {
            inv[i][i] = 1;
        }
        // solve A X = I column by column with unit pivots
        for col in 0..d {
            let order: Vec<usize> = if upper { (0..d).rev().collect() } else { (0..d).collect() };
            for &i in &order {
                let mut s: Coeff = if i == col { 1 } else { 0 };
                let js: Vec<usize> = if upper { (i + 1..d).collect() } else { (0..i).collect() };
                for j in js {
                    if a[i][j] != 0 {
                        s = checked(s, -checked_mul(a[i][j], inv[j][col]));
                    }
                }
                inv[i][col] = s;
            }
        }
        Ok(inv)
    }
}

type Cache = RwLock<HashMap<u32, Arc<TransitionMatrix>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The cached transition matrix for degree `n`.
pub fn transition_matrix_r_to_f(n: u32) -> Arc<TransitionMatrix> {
    transition_matrix_r_to_f_with(Exec::default(), n)
}

pub fn transition_matrix_r_to_f_with(exec: Exec, n: u32) -> Arc<TransitionMatrix> {
    if let Some(m) = cache().read().expect("cache poisoned").get(&n) {
        return Arc::clone(m);
    }
    let built = Arc::new(TransitionMatrix::build(exec, n));
    let mut w = cache().write().expect("cache poisoned");
    Arc::clone(w.entry(n).or_insert(built))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_degrees() {
        let m1 = transition_matrix_r_to_f(1);
        assert_eq!(m1.entries, vec![vec![1]]);
        let m0 = transition_matrix_r_to_f(0);
        assert_eq!(m0.dim(), 1);
        for n in 2..=5 {
            let m = transition_matrix_r_to_f(n);
            assert_eq!(m.dim(), 1 << (n - 1));
            assert!(m.is_unitriangular(), "n={n}");
            assert_eq!(m.determinant(), 1);
        }
    }

    #[test]
    fn inverse_is_inverse() {
        let m = transition_matrix_r_to_f(4);
        let inv = m.inverse().unwrap();
        let d = m.dim();
        // inv is indexed [col][row]: Σ_j A[i][j] inv[j][k] = δ_ik
        for i in 0..d {
            for k in 0..d {
                let s: Coeff = (0..d).map(|j| m.entries[i][j] * inv[j][k]).sum();
                assert_eq!(s, (i == k) as Coeff);
            }
        }
    }

    #[test]
    fn bareiss_on_a_known_matrix() {
        let mut m = TransitionMatrix::build(Exec::Sequential, 1);
        m.entries = vec![vec![2]];
        assert_eq!(m.determinant(), 2);
    }
}
