use std::collections::BTreeMap;

use crate::compositions::{Composition, Partition, SkewShape, WeakComposition};
use crate::error::{Error, Result};
use crate::lincomb::Coeff;
use crate::par::{self, Exec};
use crate::tableaux::{Entry, Filling, TableauKind};

use super::insert::insert;
use super::lattice::{is_lattice, is_reverse_lattice};

/// A Littlewood-Richardson filling of `β//γ` (or a reverse one) together
/// with its content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrWitness {
    pub filling: Filling,
    pub content: Partition,
}

impl LrWitness {
    pub fn shape(&self) -> &SkewShape {
        self.filling.shape()
    }
}

/// Row index pairs `(above, below)`. French fillings draw larger indices
/// higher, English fillings smaller ones.
fn above_below_pairs(kind: TableauKind, rows: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..rows {
        for j in 0..rows {
            let above = if kind.is_french() { i > j } else { i < j };
            if above {
                out.push((i, j));
            }
        }
    }
    out
}

/// Type A and type B triples as `[a, b, c]` cells `(row, k)` with `k`
/// one-based, so `k = 0` is the virtual column.
pub(crate) fn triple_cells(shape: &SkewShape, higher_is_above: bool) -> Vec<[(usize, usize); 3]> {
    let kind = if higher_is_above { TableauKind::Ssyrt } else { TableauKind::Ssrrt };
    let mut out = Vec::new();
    for (i, j) in above_below_pairs(kind, shape.rows()) {
        let (bi, bj) = (shape.row_len(i) as usize, shape.row_len(j) as usize);
        if bi >= bj {
            for k in 1..=bj {
                out.push([(i, k - 1), (i, k), (j, k)]);
            }
        } else {
            for k in 1..=bi + 1 {
                out.push([(j, k - 1), (j, k), (i, k - 1)]);
            }
        }
    }
    out
}

/// Comparison key for a triple cell. Inner cells sit between the labels
/// and the virtual column and are ordered by column, so a row of inner
/// cells is still strictly monotone.
type Key = (u8, u32);

fn triples(t: &Filling, reverse: bool) -> Vec<(Key, Key, Key)> {
    let at = |(r, k): (usize, usize)| -> Key {
        match (k.checked_sub(1).map(|c| t.rows()[r][c]), reverse) {
            (Some(Entry::Val(v)), false) => (2, v),
            (Some(Entry::Val(v)), true) => (0, v),
            (None, false) => (0, 0),
            (None, true) => (2, 0),
            (Some(_), false) => (1, k as u32),
            (Some(_), true) => (1, u32::MAX - k as u32),
        }
    };
    triple_cells(t.shape(), t.kind().is_french())
        .into_iter()
        .map(|[a, b, c]| (at(a), at(b), at(c)))
        .collect()
}

/// Labels by columns left to right, each read upwards as drawn.
fn column_word(t: &Filling) -> Vec<u32> {
    let width = t.shape().width() as usize;
    let n = t.rows().len();
    let up: Vec<usize> = if t.kind().is_french() { (0..n).collect() } else { (0..n).rev().collect() };
    let mut w = Vec::new();
    for c in 0..width {
        for &r in &up {
            if let Some(Entry::Val(v)) = t.rows()[r].get(c) {
                w.push(*v);
            }
        }
    }
    w
}

fn labels_strict(t: &Filling, increasing: bool) -> bool {
    t.rows().iter().all(|row| {
        let vals: Vec<u32> = row.iter().filter_map(|e| e.val()).collect();
        vals.windows(2).all(|p| if increasing { p[0] < p[1] } else { p[0] > p[1] })
    })
}

/// Littlewood-Richardson skew SSYRT: rows strictly increase, the column
/// word is a lattice word and every triple has `a < b ≤ c` or `c ≤ a < b`.
/// Column 0 reads as zero and inner cells as values just above it.
pub fn is_lr_skew_ssyrt(t: &Filling) -> bool {
    t.kind() == TableauKind::Ssyrt
        && labels_strict(t, true)
        && is_lattice(&column_word(t))
        && triples(t, false).into_iter().all(|(a, b, c)| a < b && (b <= c || c <= a))
}

/// Reverse Littlewood-Richardson SSRRT: rows strictly decrease, the column
/// word is a regular reverse lattice word (or empty) and every triple has
/// `c ≤ b < a` or `b < a ≤ c`. Column 0 reads as infinity and inner cells as
/// values just below it.
pub fn is_reverse_lr(t: &Filling) -> bool {
    let w = column_word(t);
    t.kind() == TableauKind::Ssrrt
        && labels_strict(t, false)
        && is_reverse_lattice(&w)
        && (w.is_empty() || w.contains(&1))
        && triples(t, true).into_iter().all(|(a, b, c)| b < a && (c <= b || a <= c))
}

/// Strictly monotone letter sets of length `len`, within the remaining
/// content.
fn row_choices(m: u32, left: &[u32], len: u32, increasing: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() != len {
            continue;
        }
        let mut letters: Vec<u32> = (1..=m).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        if letters.iter().any(|&i| left[i as usize - 1] == 0) {
            continue;
        }
        if !increasing {
            letters.reverse();
        }
        out.push(letters);
    }
    out
}

/// All witnesses of content `λ` over `α`: LR when `reverse` is false,
/// otherwise reverse-LR of content `rev(λ)`.
pub fn lr_witnesses(alpha: &Composition, lambda: &Partition, reverse: bool) -> Vec<LrWitness> {
    lr_witnesses_with(Exec::default(), alpha, lambda, reverse)
}

pub fn lr_witnesses_with(exec: Exec, alpha: &Composition, lambda: &Partition, reverse: bool) -> Vec<LrWitness> {
    let size = lambda.weight() as usize;
    let m = lambda.len() as u32;
    let jobs: Vec<(WeakComposition, Vec<RowLen>)> = (alpha.len()..=alpha.len() + size)
        .flat_map(|l| WeakComposition::placements(alpha, l))
        .map(|g| {
            let lens = g.0.iter().map(|&x| if x == 0 { (1, m) } else { (0, m) }).collect();
            (g, lens)
        })
        .collect();
    witnesses_over(exec, jobs, lambda, reverse)
}

/// Witnesses of one outer shape `β`.
pub fn lr_witnesses_of_shape(alpha: &Composition, lambda: &Partition, beta: &Composition, reverse: bool) -> Vec<LrWitness> {
    let jobs: Vec<(WeakComposition, Vec<RowLen>)> = WeakComposition::placements(alpha, beta.len())
        .into_iter()
        .filter(|g| g.0.iter().zip(beta.parts()).all(|(a, b)| a <= b))
        .map(|g| {
            let lens = g.0.iter().zip(beta.parts()).map(|(x, b)| (b - x, b - x)).collect();
            (g, lens)
        })
        .collect();
    witnesses_over(Exec::default(), jobs, lambda, reverse)
}

/// Allowed number of labels in a row, inclusive.
type RowLen = (u32, u32);

fn witnesses_over(exec: Exec, jobs: Vec<(WeakComposition, Vec<RowLen>)>, lambda: &Partition, reverse: bool) -> Vec<LrWitness> {
    let m = lambda.len() as u32;
    let counts: Vec<u32> = if reverse {
        lambda.parts().iter().rev().copied().collect()
    } else {
        lambda.parts().to_vec()
    };
    let (kind, pad) = if reverse { (TableauKind::Ssrrt, Entry::Inf) } else { (TableauKind::Ssyrt, Entry::Zero) };
    par::flat_map(exec, jobs, |(gamma, lens)| {
        let mut found = Vec::new();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut left = counts.clone();
        extend(&lens, m, &mut left, !reverse, &mut rows, &mut |rows| {
            let entries: Vec<Vec<Entry>> = gamma
                .0
                .iter()
                .zip(rows)
                .map(|(&g, ext)| std::iter::repeat(pad).take(g as usize).chain(ext.iter().map(|&v| Entry::Val(v))).collect())
                .collect();
            let outer = Composition::new(entries.iter().map(|r| r.len() as u32).collect()).expect("nonempty rows");
            let shape = SkewShape::new(outer, gamma.clone()).expect("inner fits");
            let t = Filling::from_entries(kind, shape, entries).expect("well-formed grid");
            let ok = if reverse { is_reverse_lr(&t) } else { is_lr_skew_ssyrt(&t) };
            if ok {
                found.push(LrWitness { filling: t, content: lambda.clone() });
            }
        });
        found
    })
}

fn extend(
    lens: &[RowLen],
    m: u32,
    left: &mut Vec<u32>,
    increasing: bool,
    rows: &mut Vec<Vec<u32>>,
    emit: &mut dyn FnMut(&[Vec<u32>]),
) {
    let r = rows.len();
    if r == lens.len() {
        if left.iter().all(|&x| x == 0) {
            emit(rows);
        }
        return;
    }
    let (lo, hi) = lens[r];
    let remaining: u32 = left.iter().sum();
    for len in lo..=hi.min(remaining) {
        for letters in row_choices(m, left, len, increasing) {
            for &i in &letters {
                left[i as usize - 1] -= 1;
            }
            rows.push(letters);
            extend(lens, m, left, increasing, rows, emit);
            let letters = rows.pop().expect("pushed");
            for &i in &letters {
                left[i as usize - 1] += 1;
            }
        }
    }
}

/// `D^β_{α,λ}`: LR witnesses of content `λ` grouped by outer shape `β`,
/// summed over every placement of `α` among the rows of `β`.
pub fn lr_coefficients(alpha: &Composition, lambda: &Partition) -> BTreeMap<Composition, Coeff> {
    lr_coefficients_with(Exec::default(), alpha, lambda)
}

pub fn lr_coefficients_with(exec: Exec, alpha: &Composition, lambda: &Partition) -> BTreeMap<Composition, Coeff> {
    let mut out = BTreeMap::new();
    for w in lr_witnesses_with(exec, alpha, lambda, false) {
        *out.entry(w.shape().outer().clone()).or_insert(0) += 1;
    }
    out
}

/// Letters of `S` and of the superstandard tableau of the same shape, read
/// by columns left to right, each top to bottom as drawn. Returns
/// `(top, bottom)`.
pub fn double_word(s: &Filling) -> (Vec<u32>, Vec<u32>) {
    let width = s.shape().width() as usize;
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for c in 0..width {
        for row in s.rows().iter().rev() {
            if let Some(Entry::Val(v)) = row.get(c) {
                top.push(c as u32 + 1);
                bottom.push(*v);
            }
        }
    }
    (top, bottom)
}

/// Inserts the bottom word of `(S, S_λ)` into `U`, recording each new cell
/// with the matching top letter. Returns `(V, T)`.
pub fn double_word_insertion(u: &Filling, lambda: &Partition, s: &Filling) -> Result<(Filling, LrWitness)> {
    if u.kind() != TableauKind::Ssyrt {
        return u.kind().unsupported("double_word_insertion");
    }
    if s.kind() != TableauKind::RowStrict {
        return s.kind().unsupported("double_word_insertion");
    }
    s.validate()?;
    let conj = lambda.conjugate();
    if s.shape() != &SkewShape::straight(conj.as_composition()) {
        return Err(Error::Structural(format!("S has shape {} but the conjugate of {lambda} is {conj}", s.shape())));
    }
    let alpha = u.shape().outer().clone();
    let mut v = u.clone();
    let mut star: Vec<Vec<Entry>> = alpha.parts().iter().map(|&a| vec![Entry::Zero; a as usize]).collect();
    let mut gamma: Vec<u32> = alpha.parts().to_vec();
    let (top, bottom) = double_word(s);
    for (&t, &b) in top.iter().zip(&bottom) {
        let res = insert(&v, b)?;
        let (r, c) = res.new_cell;
        if c == 0 {
            star.insert(r, Vec::new());
            gamma.insert(r, 0);
        }
        if star[r].len() != c {
            return Err(Error::Internal(format!("new cell ({r},{c}) is not at a row end")));
        }
        star[r].push(Entry::Val(t));
        v = res.tableau;
    }
    let shape = SkewShape::new(v.shape().outer().clone(), WeakComposition(gamma))?;
    let t = Filling::from_entries(TableauKind::Ssyrt, shape, star)?;
    if !is_lr_skew_ssyrt(&t) {
        return Err(Error::Internal(format!("recording tableau is not a Littlewood-Richardson filling:\n{t}")));
    }
    Ok((v, LrWitness { filling: t, content: lambda.clone() }))
}
