//! Compositions, weak compositions, partitions and skew shapes, together with
//! the subset correspondence and the Young composition poset.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// A finite sequence of positive integers. The empty sequence is the unique
/// composition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return domain(format!("composition parts must be positive: {parts:?}"));
        }
        Ok(Composition(parts))
    }

    /// Panics on a zero part; for literals in tests and examples.
    pub fn from_slice(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("positive parts")
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn largest_part(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// The composition of `n` whose partial sums are the elements of `set`.
    pub fn from_subset(set: &BTreeSet<u32>, n: u32) -> Result<Self> {
        if let Some(&bad) = set.iter().find(|&&s| s == 0 || s >= n) {
            return domain(format!("{bad} is not in [1, {}]", n.saturating_sub(1)));
        }
        if n == 0 {
            return Ok(Self::empty());
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &s in set {
            parts.push(s - prev);
            prev = s;
        }
        parts.push(n - prev);
        Ok(Composition(parts))
    }

    /// Partial sums `α_1, α_1+α_2, …` excluding the total.
    pub fn to_subset(&self) -> BTreeSet<u32> {
        let mut acc = 0;
        let k = self.0.len().saturating_sub(1);
        self.0[..k]
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// The composition of the complementary subset of `[n-1]`.
    pub fn complement(&self) -> Self {
        let n = self.weight();
        let set = self.to_subset();
        let comp: BTreeSet<u32> = (1..n).filter(|i| !set.contains(i)).collect();
        Self::from_subset(&comp, n).expect("complement is in range")
    }

    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// `β ⊙ γ`: concatenation with the last part of `β` merged into the first
    /// part of `γ`. Equals plain concatenation when either side is empty.
    pub fn near_concat(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return self.concat(other);
        }
        let mut v = self.0.clone();
        *v.last_mut().unwrap() += other.0[0];
        v.extend_from_slice(&other.0[1..]);
        Composition(v)
    }

    pub fn append_one(&self) -> Self {
        let mut v = self.0.clone();
        v.push(1);
        Composition(v)
    }

    /// The parts sorted into weakly decreasing order.
    pub fn underlying_partition(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// True if `self` is obtained from `finer` by summing consecutive runs.
    pub fn is_refined_by(&self, finer: &Self) -> bool {
        self.weight() == finer.weight() && self.to_subset().is_subset(&finer.to_subset())
    }

    /// `self ⊂ other`: no longer than `other` and partwise no larger.
    pub fn contained_in(&self, other: &Self) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Upper covers in the Young composition poset: append a part 1, or add 1
    /// to the rightmost part of each size.
    pub fn lc_covers(&self) -> Vec<Self> {
        let mut out = vec![self.append_one()];
        let mut seen = HashSet::new();
        for j in (0..self.0.len()).rev() {
            if seen.insert(self.0[j]) {
                let mut v = self.0.clone();
                v[j] += 1;
                out.push(Composition(v));
            }
        }
        out
    }

    /// Lower covers in the Young composition poset.
    pub fn lc_lower_covers(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.0.last() == Some(&1) {
            out.push(Composition(self.0[..self.0.len() - 1].to_vec()));
        }
        for j in 0..self.0.len() {
            if self.0[j] < 2 {
                continue;
            }
            let mut v = self.0.clone();
            v[j] -= 1;
            let cand = Composition(v);
            if cand.lc_covers().contains(self) {
                out.push(cand);
            }
        }
        out
    }

    /// All compositions of `n`, in lexicographic order.
    pub fn all_of(n: u32) -> Vec<Self> {
        if n == 0 {
            return vec![Self::empty()];
        }
        let mut out: Vec<Self> = (0u64..1 << (n - 1))
            .map(|mask| {
                let set: BTreeSet<u32> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                Self::from_subset(&set, n).unwrap()
            })
            .collect();
        out.sort();
        out
    }

    /// All compositions whose underlying partition is `shape`.
    pub fn rearrangements(shape: &Partition) -> Vec<Self> {
        let mut parts = shape.0.clone();
        parts.sort_unstable();
        let mut out = vec![Composition(parts.clone())];
        while next_permutation(&mut parts) {
            out.push(Composition(parts.clone()));
        }
        out
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn write_seq(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

fn parse_seq(s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected parenthesised list, got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad part {p:?}: {e}")))
        })
        .collect()
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_seq(s)?)
    }
}

/// A finite sequence of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeakComposition(pub Vec<u32>);

impl WeakComposition {
    /// Removes the zero parts (`γ⁺`).
    pub fn collapse(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All weak compositions of length `len` with `collapse() == target`.
    pub fn placements(target: &Composition, len: usize) -> Vec<Self> {
        fn rec(t: &[u32], len: usize, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
            let left = len - cur.len();
            if t.len() > left {
                return;
            }
            if left == 0 {
                out.push(WeakComposition(cur.clone()));
                return;
            }
            if !t.is_empty() {
                cur.push(t[0]);
                rec(&t[1..], len, cur, out);
                cur.pop();
            }
            cur.push(0);
            rec(t, len, cur, out);
            cur.pop();
        }
        let mut out = Vec::new();
        rec(target.parts(), len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.0)
    }
}

/// A weakly decreasing composition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return domain(format!("partition parts must be positive: {parts:?}"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("partition parts must weakly decrease: {parts:?}"));
        }
        Ok(Partition(parts))
    }

    pub fn from_slice(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Transpose of the diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// `self ≤ other` in dominance order; both must have the same weight.
    pub fn dominated_by(&self, other: &Self) -> Result<bool> {
        if self.weight() != other.weight() {
            return domain(format!("dominance compares equal weights: {self} vs {other}"));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Diagram containment `μ ⊆ λ`.
    pub fn contained_in(&self, other: &Self) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n` in lexicographically descending order.
    pub fn all_of(n: u32) -> Vec<Self> {
        fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=left.min(max)).rev() {
                cur.push(p);
                rec(left - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_seq(s)?)
    }
}

/// The total order used for every triangular matrix: underlying partition in
/// lexicographically descending order, then the composition itself ascending.
pub fn total_order_cmp(a: &Composition, b: &Composition) -> Ordering {
    b.underlying_partition()
        .cmp(&a.underlying_partition())
        .then_with(|| a.cmp(b))
}

/// Relation of two compositions in the Young composition poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcRelation {
    Covers,
    StrictlyBelow,
    IncomparableOrEqual,
}

/// How `alpha` relates to `beta`: `Covers` when `beta` covers `alpha`,
/// `StrictlyBelow` when a longer saturated chain joins them.
pub fn lc_relation(alpha: &Composition, beta: &Composition) -> LcRelation {
    if alpha.lc_covers().contains(beta) {
        return LcRelation::Covers;
    }
    if alpha.weight() >= beta.weight() || !alpha.contained_in(beta) {
        return LcRelation::IncomparableOrEqual;
    }
    let steps = beta.weight() - alpha.weight();
    let mut frontier: VecDeque<(Composition, u32)> = VecDeque::from([(alpha.clone(), 0)]);
    let mut seen = HashSet::new();
    while let Some((cur, d)) = frontier.pop_front() {
        if &cur == beta {
            return LcRelation::StrictlyBelow;
        }
        if d == steps {
            continue;
        }
        for next in cur.lc_covers() {
            // every element of a chain below beta is contained in beta
            if next.contained_in(beta) && seen.insert(next.clone()) {
                frontier.push_back((next, d + 1));
            }
        }
    }
    LcRelation::IncomparableOrEqual
}

/// Whether a cut of the diagram falls on a part boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitKind {
    Concat,
    NearConcat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deconcatenation {
    pub left: Composition,
    pub right: Composition,
    pub kind: SplitKind,
}

/// The `|α|+1` ways of cutting `α` after `i` cells, `i = 0..=|α|`.
pub fn deconcatenations(alpha: &Composition) -> Vec<Deconcatenation> {
    let n = alpha.weight();
    let mut out = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let mut acc = 0;
        let mut split = None;
        for (j, &p) in alpha.parts().iter().enumerate() {
            if acc == i {
                split = Some((j, 0));
                break;
            }
            if i < acc + p {
                split = Some((j, i - acc));
                break;
            }
            acc += p;
        }
        let parts = alpha.parts();
        let d = match split {
            None => Deconcatenation {
                left: alpha.clone(),
                right: Composition::empty(),
                kind: SplitKind::Concat,
            },
            Some((j, 0)) => Deconcatenation {
                left: Composition(parts[..j].to_vec()),
                right: Composition(parts[j..].to_vec()),
                kind: SplitKind::Concat,
            },
            Some((j, t)) => {
                let mut l = parts[..j].to_vec();
                l.push(t);
                let mut r = vec![parts[j] - t];
                r.extend_from_slice(&parts[j + 1..]);
                Deconcatenation {
                    left: Composition(l),
                    right: Composition(r),
                    kind: SplitKind::NearConcat,
                }
            }
        };
        out.push(d);
    }
    out
}

/// A skew diagram `outer // inner`. The inner shape is stored zero-padded to
/// the length of the outer composition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Composition,
    inner: Vec<u32>,
}

impl SkewShape {
    pub fn new(outer: Composition, inner: WeakComposition) -> Result<Self> {
        let mut inner = inner.0;
        while inner.len() > outer.len() && inner.last() == Some(&0) {
            inner.pop();
        }
        if inner.len() > outer.len() {
            return Err(Error::Structural(format!(
                "inner shape {} is longer than outer shape {outer}",
                WeakComposition(inner)
            )));
        }
        inner.resize(outer.len(), 0);
        if let Some(i) = (0..outer.len()).find(|&i| inner[i] > outer.parts()[i]) {
            return Err(Error::Structural(format!(
                "inner part {} exceeds outer part {} in row {}",
                inner[i],
                outer.parts()[i],
                i + 1
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Composition) -> Self {
        let inner = vec![0; outer.len()];
        SkewShape { outer, inner }
    }

    /// `outer // inner` with `inner` a composition contained in `outer`.
    pub fn from_compositions(outer: &Composition, inner: &Composition) -> Result<Self> {
        Self::new(outer.clone(), WeakComposition(inner.parts().to_vec()))
    }

    pub fn outer(&self) -> &Composition {
        &self.outer
    }

    pub fn inner(&self) -> &[u32] {
        &self.inner
    }

    pub fn inner_weak(&self) -> WeakComposition {
        let mut v = self.inner.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        WeakComposition(v)
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn row_len(&self, r: usize) -> u32 {
        self.outer.parts()[r]
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&p| p == 0)
    }

    /// Number of cells of the skew part.
    pub fn size(&self) -> usize {
        (self.outer.weight() - self.inner.iter().sum::<u32>()) as usize
    }

    pub fn width(&self) -> u32 {
        self.outer.largest_part()
    }

    /// 0-based `(row, column)` pairs of the skew cells, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in 0..self.rows() {
            for c in self.inner[r]..self.outer.parts()[r] {
                out.push((r, c as usize));
            }
        }
        out
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        r < self.rows() && (c as u32) < self.outer.parts()[r]
    }

    pub fn is_inner_cell(&self, r: usize, c: usize) -> bool {
        r < self.rows() && (c as u32) < self.inner[r]
    }

    /// Row order reversed on both outer and inner shapes.
    pub fn reversed(&self) -> Self {
        SkewShape {
            outer: self.outer.reversed(),
            inner: self.inner.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}//{}", self.outer, self.inner_weak())
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once("//") {
            Some((o, i)) => SkewShape::new(o.parse()?, WeakComposition(parse_seq(i)?)),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[u32]) -> Composition {
        Composition::from_slice(p)
    }

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn subset_examples() {
        assert_eq!(Composition::from_subset(&set(&[1, 5]), 7).unwrap(), c(&[1, 4, 2]));
        assert_eq!(Composition::from_subset(&set(&[]), 5).unwrap(), c(&[5]));
        assert_eq!(Composition::from_subset(&set(&[1, 2, 3]), 4).unwrap(), c(&[1, 1, 1, 1]));
        assert!(Composition::from_subset(&set(&[4]), 4).is_err());
        assert!(Composition::from_subset(&set(&[0]), 4).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(c(&[1, 4, 2]).complement(), c(&[2, 1, 1, 2, 1]));
        assert_eq!(c(&[5]).complement(), c(&[1, 1, 1, 1, 1]));
        assert_eq!(c(&[1, 1, 2]).complement(), c(&[3, 1]));
        assert_eq!(Composition::empty().complement(), Composition::empty());
    }

    #[test]
    fn subset_roundtrip_and_complement_involution() {
        for n in 1..=10 {
            for a in Composition::all_of(n) {
                assert_eq!(Composition::from_subset(&a.to_subset(), n).unwrap(), a);
                assert_eq!(a.complement().complement(), a);
            }
            assert_eq!(Composition::all_of(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn lc_examples() {
        assert_eq!(lc_relation(&c(&[1, 2]), &c(&[1, 2, 1])), LcRelation::Covers);
        assert_eq!(lc_relation(&c(&[1]), &c(&[2, 2, 3])), LcRelation::StrictlyBelow);
        assert_eq!(lc_relation(&c(&[2, 1]), &c(&[2, 1])), LcRelation::IncomparableOrEqual);
        for n in 0..=5 {
            for a in Composition::all_of(n) {
                assert_eq!(lc_relation(&a, &a.append_one()), LcRelation::Covers);
            }
        }
    }

    /// Brute-force cover rules, transcribed directly.
    fn brute_covers(a: &Composition) -> BTreeSet<Composition> {
        let mut out = BTreeSet::new();
        out.insert(a.append_one());
        let p = a.parts();
        for j in 0..p.len() {
            if (j + 1..p.len()).all(|i| p[i] != p[j]) {
                let mut v = p.to_vec();
                v[j] += 1;
                out.insert(c(&v));
            }
        }
        out
    }

    #[test]
    fn covers_match_brute_force() {
        for n in 0..=8 {
            for a in Composition::all_of(n) {
                let fast: BTreeSet<_> = a.lc_covers().into_iter().collect();
                assert_eq!(fast, brute_covers(&a), "{a}");
                for b in &fast {
                    assert!(b.lc_lower_covers().contains(&a));
                }
            }
        }
    }

    #[test]
    fn below_implies_contained_and_converse_fails() {
        let mut witness = None;
        for n in 0..=7u32 {
            for m in n + 1..=7 {
                for a in Composition::all_of(n) {
                    for b in Composition::all_of(m) {
                        let rel = lc_relation(&a, &b);
                        if rel != LcRelation::IncomparableOrEqual {
                            assert!(a.contained_in(&b));
                        } else if a.contained_in(&b) && witness.is_none() {
                            witness = Some((a.clone(), b.clone()));
                        }
                    }
                }
            }
        }
        assert!(witness.is_some());
        // (1,1) ⊂ (2,1) but the first part of (1,1) cannot grow while a later part of size 1 exists
        assert!(c(&[1, 1]).contained_in(&c(&[2, 1])));
        assert_eq!(lc_relation(&c(&[1, 1]), &c(&[2, 1])), LcRelation::IncomparableOrEqual);
    }

    #[test]
    fn deconcatenation_examples() {
        let d = deconcatenations(&c(&[2, 1]));
        let got: Vec<_> = d.iter().map(|x| (x.left.clone(), x.right.clone(), x.kind)).collect();
        assert_eq!(
            got,
            vec![
                (Composition::empty(), c(&[2, 1]), SplitKind::Concat),
                (c(&[1]), c(&[1, 1]), SplitKind::NearConcat),
                (c(&[2]), c(&[1]), SplitKind::Concat),
                (c(&[2, 1]), Composition::empty(), SplitKind::Concat),
            ]
        );
        assert_eq!(deconcatenations(&c(&[1])).len(), 2);
        let single = deconcatenations(&c(&[5]));
        assert_eq!(single.iter().filter(|d| d.kind == SplitKind::NearConcat).count(), 4);
        assert_eq!(deconcatenations(&Composition::empty()).len(), 1);
    }

    #[test]
    fn deconcatenations_recombine() {
        for n in 0..=7 {
            for a in Composition::all_of(n) {
                let d = deconcatenations(&a);
                assert_eq!(d.len() as u32, n + 1);
                for (i, x) in d.iter().enumerate() {
                    assert_eq!(x.left.weight(), i as u32);
                    let back = match x.kind {
                        SplitKind::Concat => x.left.concat(&x.right),
                        SplitKind::NearConcat => x.left.near_concat(&x.right),
                    };
                    assert_eq!(back, a);
                }
            }
        }
    }

    #[test]
    fn partition_stats() {
        assert_eq!(c(&[1, 3, 2, 3, 2]).underlying_partition(), Partition::from_slice(&[3, 3, 2, 2, 1]));
        assert_eq!(Partition::from_slice(&[3, 3, 2, 1]).conjugate(), Partition::from_slice(&[4, 3, 2]));
        assert!(c(&[3]).is_refined_by(&c(&[1, 1, 1])));
        assert!(!c(&[1, 2]).is_refined_by(&c(&[2, 1])));
        let a = Partition::from_slice(&[2, 1]);
        assert!(a.dominated_by(&Partition::from_slice(&[3])).unwrap());
        assert!(a.dominated_by(&Partition::from_slice(&[3, 1])).is_err());
        for n in 0..=9 {
            for p in Partition::all_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn lex_descending_extends_dominance() {
        for n in 0..=9 {
            let ps = Partition::all_of(n);
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
            for l in &ps {
                for m in &ps {
                    if m.dominated_by(l).unwrap() {
                        assert!(l >= m, "{l} dominates {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!("(1,2,1,2)".parse::<Composition>().unwrap(), c(&[1, 2, 1, 2]));
        assert_eq!("()".parse::<Composition>().unwrap(), Composition::empty());
        assert_eq!(Composition::empty().to_string(), "()");
        let s: SkewShape = "(3,4,1,4)//(2,3)".parse().unwrap();
        assert_eq!(s.to_string(), "(3,4,1,4)//(2,3)");
        assert_eq!(s.size(), 7);
        assert!("(1,0)".parse::<Composition>().is_err());
        assert!("(1,2)//(2)".parse::<SkewShape>().is_err());
    }

    #[test]
    fn weak_placements() {
        let p = WeakComposition::placements(&c(&[1, 2]), 3);
        assert_eq!(p.len(), 3);
        assert!(p.iter().all(|w| w.collapse() == c(&[1, 2])));
    }
}
