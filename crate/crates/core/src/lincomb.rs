//! Sparse formal integer linear combinations over an ordered index set.

use std::collections::BTreeMap;
use std::fmt;

/// Coefficients are exact machine integers; every addition is overflow-checked.
pub type Coeff = i64;

#[inline]
pub(crate) fn checked(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b).expect("coefficient overflow")
}

#[inline]
pub(crate) fn checked_mul(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b).expect("coefficient overflow")
}

/// A finite sum `Σ c_k · k` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Coeff>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: Coeff) -> Self {
        let mut out = Self::new();
        out.add_term(key, coeff);
        out
    }

    pub fn add_term(&mut self, key: K, coeff: Coeff) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(key);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let c = checked(*o.get(), coeff);
                if c == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: Coeff) {
        for (k, &c) in &other.terms {
            self.add_term(k.clone(), checked_mul(c, scale));
        }
    }

    pub fn coeff(&self, key: &K) -> Coeff {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, Coeff)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> Coeff {
        self.terms.values().fold(0, |a, &b| checked(a, b))
    }

    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::new();
        for (k, &c) in &self.terms {
            out.add_term(f(k), c);
        }
        out
    }

    pub fn scaled(&self, scale: Coeff) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, scale);
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Coeff)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Coeff)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> std::ops::Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, 1);
        out
    }
}

impl<K: Ord + Clone> std::ops::Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, -1);
        out
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Writes `c·sym(k)` terms joined by ` + ` / ` - `, largest key first.
pub(crate) fn write_terms<K: Ord>(
    f: &mut fmt::Formatter<'_>,
    terms: &LinComb<K>,
    mut sym: impl FnMut(&K) -> String,
) -> fmt::Result {
    if terms.terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (k, &c)) in terms.terms.iter().rev().enumerate() {
        let body = sym(k);
        let mag = c.unsigned_abs();
        let coef = if mag == 1 { String::new() } else { format!("{mag}*") };
        match (i, c < 0) {
            (0, false) => write!(f, "{coef}{body}")?,
            (0, true) => write!(f, "-{coef}{body}")?,
            (_, false) => write!(f, " + {coef}{body}")?,
            (_, true) => write!(f, " - {coef}{body}")?,
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut a: LinComb<u32> = LinComb::single(3, 2);
        a.add_term(3, -2);
        assert!(a.is_zero());
        a.add_term(1, 0);
        assert!(a.is_zero());
    }

    #[test]
    fn add_and_sub() {
        let a: LinComb<u32> = [(1, 2), (2, 3)].into_iter().collect();
        let b: LinComb<u32> = [(2, 3), (5, 1)].into_iter().collect();
        let s = &a + &b;
        assert_eq!(s.coeff(&2), 6);
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(s.total(), 9);
    }
}
