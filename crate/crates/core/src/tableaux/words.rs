use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Entry, Filling, TableauKind};
use crate::compositions::{Composition, SkewShape};
use crate::error::Result;

/// A word in the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<u32>);

impl fmt::Display for Word {
    /// Letters are juxtaposed when all are single digits, else space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().all(|&x| x < 10) { "" } else { " " };
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(sep))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadingOrder {
    /// Columns right to left, each top to bottom as drawn, except the
    /// leftmost column which is read bottom to top. Partition kinds read
    /// every column bottom to top.
    Standard,
    /// Columns left to right, each bottom to top as drawn.
    Column,
}

/// Skew cells of `shape` in the given order, for a filling of `kind`.
pub fn reading_order(kind: TableauKind, shape: &SkewShape, order: ReadingOrder) -> Vec<(usize, usize)> {
    let width = shape.width() as usize;
    let column = |c: usize, upward: bool| -> Vec<(usize, usize)> {
        // rows as drawn from bottom to top
        let mut rows: Vec<usize> = (0..shape.rows()).collect();
        if !kind.is_french() {
            rows.reverse();
        }
        if !upward {
            rows.reverse();
        }
        rows.into_iter()
            .filter(|&r| shape.contains_cell(r, c) && !shape.is_inner_cell(r, c))
            .map(|r| (r, c))
            .collect()
    };
    match order {
        ReadingOrder::Standard => (0..width)
            .rev()
            .flat_map(|c| column(c, c == 0 || kind.is_partition_kind()))
            .collect(),
        ReadingOrder::Column => (0..width).flat_map(|c| column(c, true)).collect(),
    }
}

pub fn reading_word(f: &Filling, order: ReadingOrder) -> Word {
    Word(
        reading_order(f.kind(), f.shape(), order)
            .into_iter()
            .filter_map(|(r, c)| f.rows()[r][c].val())
            .collect(),
    )
}

/// Replaces the `j`-th occurrence of each value, in standard reading order,
/// by the next unused label. Defined for SSYRT and row-strict tableaux.
pub fn standardize(f: &Filling) -> Result<Filling> {
    if !matches!(f.kind(), TableauKind::Ssyrt | TableauKind::RowStrict) {
        return f.kind().unsupported("standardize");
    }
    let mut cells: Vec<(u32, usize, (usize, usize))> = reading_order(f.kind(), f.shape(), ReadingOrder::Standard)
        .into_iter()
        .enumerate()
        .map(|(i, (r, c))| (f.rows()[r][c].val().expect("skew cell"), i, (r, c)))
        .collect();
    cells.sort_unstable();
    let mut rows = f.rows().to_vec();
    for (label, &(_, _, (r, c))) in cells.iter().enumerate() {
        rows[r][c] = Entry::Val(label as u32 + 1);
    }
    Ok(Filling::from_parts_unchecked(f.kind(), f.shape().clone(), rows))
}

/// Descent sets of a standard filling, by column comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentData {
    /// `i` with `i+1` strictly right of `i`.
    pub hat: BTreeSet<u32>,
    /// `i` with `i+1` strictly left of `i`.
    pub prime: BTreeSet<u32>,
    pub comp_hat: Composition,
    pub comp_prime: Composition,
}

pub fn descent_data(f: &Filling) -> Result<DescentData> {
    let pos = f.positions()?;
    let n = f.size() as u32;
    let mut hat = BTreeSet::new();
    let mut prime = BTreeSet::new();
    for i in 1..n as usize {
        let (a, b) = (pos[i].1, pos[i + 1].1);
        if b > a {
            hat.insert(i as u32);
        } else if b < a {
            prime.insert(i as u32);
        }
    }
    Ok(DescentData {
        comp_hat: Composition::from_subset(&hat, n)?,
        comp_prime: Composition::from_subset(&prime, n)?,
        hat,
        prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::Filling;

    fn worked_row_strict() -> Filling {
        Filling::from_display(
            TableauKind::Ssyrt,
            "(4,5,4,1)".parse().unwrap(),
            &[vec![6], vec![2, 3, 5, 6], vec![1, 2, 3, 4, 6], vec![1, 4, 5, 7]],
        )
        .unwrap()
    }

    #[test]
    fn standard_reading_word() {
        let f = worked_row_strict();
        f.validate().unwrap();
        assert_eq!(reading_word(&f, ReadingOrder::Standard).to_string(), "66475353241126");
    }

    #[test]
    fn standardization_matches_worked_example() {
        let st = standardize(&worked_row_strict()).unwrap();
        let want = Filling::from_display(
            TableauKind::Ssyrt,
            "(4,5,4,1)".parse().unwrap(),
            &[vec![13], vec![4, 6, 9, 12], vec![2, 3, 5, 7, 11], vec![1, 8, 10, 14]],
        )
        .unwrap();
        assert_eq!(st, want);
        assert_eq!(standardize(&st).unwrap(), st);
    }

    #[test]
    fn row_strict_standardization() {
        let t = Filling::from_display(
            TableauKind::RowStrict,
            "(4,4,3,1)".parse().unwrap(),
            &[vec![2], vec![2, 4, 5], vec![1, 2, 4, 5], vec![1, 2, 3, 5]],
        )
        .unwrap();
        t.validate().unwrap();
        let want = Filling::from_display(
            TableauKind::RowStrict,
            "(4,4,3,1)".parse().unwrap(),
            &[vec![6], vec![5, 9, 12], vec![2, 4, 8, 11], vec![1, 3, 7, 10]],
        )
        .unwrap();
        assert_eq!(standardize(&t).unwrap(), want);
    }

    #[test]
    fn single_row_words() {
        let f = Filling::straight(TableauKind::Ssyrt, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(reading_word(&f, ReadingOrder::Standard), Word(vec![3, 2, 1]));
        assert_eq!(reading_word(&f, ReadingOrder::Column), Word(vec![1, 2, 3]));
        let d = descent_data(&f).unwrap();
        assert_eq!(d.hat, [1, 2].into_iter().collect());
        assert_eq!(d.comp_hat, Composition::from_slice(&[1, 1, 1]));
    }

    #[test]
    fn descents_need_standard() {
        assert!(descent_data(&worked_row_strict()).is_err());
        let t = Filling::straight(TableauKind::Ssrct, &[vec![2, 1]]).unwrap();
        assert!(standardize(&t).is_err());
    }
}
