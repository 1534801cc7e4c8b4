//! Weight-preserving bijections between tableau families: `ρ`, `h`, `f`,
//! `φ` and `φ̃`, with inverses where they exist.

use crate::compositions::{Composition, SkewShape, WeakComposition};
use crate::error::{domain, Error, Result};
use crate::tableaux::{Entry, Filling, TableauKind};

/// Direction of the column-by-column placement shared by `ρ`, `h`, `φ̃`
/// (`Young`) and `φ` (`Reverse`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Placement {
    /// Values ascending, each into the highest open row whose left
    /// neighbour is strictly smaller (a zero may follow a zero).
    Young,
    /// Values descending, each into the highest open row (as drawn in
    /// English) whose left neighbour is strictly larger (infinity may follow
    /// infinity).
    Reverse,
}

fn place(columns: Vec<Vec<Entry>>, how: Placement) -> Result<Vec<Vec<Entry>>> {
    let mut cols = columns.into_iter();
    let Some(mut first) = cols.next() else {
        return Ok(Vec::new());
    };
    first.sort_unstable();
    let mut rows: Vec<Vec<Entry>> = first.into_iter().map(|e| vec![e]).collect();
    for (j, mut col) in cols.enumerate().map(|(i, c)| (i + 1, c)) {
        col.sort_unstable();
        if how == Placement::Reverse {
            col.reverse();
        }
        for v in col {
            let fits = |r: &Vec<Entry>| {
                r.len() == j && {
                    let left = r[j - 1];
                    match how {
                        Placement::Young => left < v || (left == Entry::Zero && v == Entry::Zero),
                        Placement::Reverse => left > v || (left == Entry::Inf && v == Entry::Inf),
                    }
                }
            };
            let target = match how {
                Placement::Young => (0..rows.len()).rev().find(|&r| fits(&rows[r])),
                Placement::Reverse => (0..rows.len()).find(|&r| fits(&rows[r])),
            };
            let r = target.ok_or_else(|| Error::Internal(format!("no open row for {v:?} in column {}", j + 1)))?;
            rows[r].push(v);
        }
    }
    Ok(rows)
}

/// Filling whose inner shape is read off the leading sentinels of each row.
fn assemble(kind: TableauKind, rows: Vec<Vec<Entry>>) -> Result<Filling> {
    let outer = Composition::new(rows.iter().map(|r| r.len() as u32).collect())?;
    let mut inner = Vec::with_capacity(rows.len());
    for row in &rows {
        let k = row.iter().take_while(|e| e.is_sentinel()).count();
        if row[k..].iter().any(|e| e.is_sentinel()) {
            return Err(Error::Internal("sentinel after a label".into()));
        }
        inner.push(k as u32);
    }
    let shape = SkewShape::new(outer, WeakComposition(inner))?;
    Filling::from_entries(kind, shape, rows)
}

fn columns_of(t: &Filling) -> Vec<Vec<Entry>> {
    let width = t.shape().width() as usize;
    (0..width)
        .map(|c| t.rows().iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
        .collect()
}

/// Rows `r` of the result hold the `r`-th smallest entry of each column.
fn sort_columns(t: &Filling) -> Vec<Vec<Entry>> {
    let cols: Vec<Vec<Entry>> = columns_of(t)
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    let height = cols.first().map_or(0, |c| c.len());
    (0..height)
        .map(|r| cols.iter().take_while(|c| c.len() > r).map(|c| c[r]).collect())
        .collect()
}

fn expect(t: &Filling, kind: TableauKind, op: &'static str) -> Result<()> {
    if t.kind() != kind {
        return t.kind().unsupported(op);
    }
    t.validate()
}

/// Row-strict tableau of partition shape to an SSYRT with the same column
/// contents.
pub fn rho(t: &Filling) -> Result<Filling> {
    expect(t, TableauKind::RowStrict, "rho")?;
    if !t.shape().is_straight() {
        return domain("rho is defined on straight shapes");
    }
    assemble(TableauKind::Ssyrt, place(columns_of(t), Placement::Young)?)
}

pub fn rho_inverse(f: &Filling) -> Result<Filling> {
    expect(f, TableauKind::Ssyrt, "rho_inverse")?;
    if !f.shape().is_straight() {
        return domain("rho_inverse is defined on straight shapes");
    }
    assemble(TableauKind::RowStrict, sort_columns(f))
}

/// Column-strict skew tableau of shape `λ′/μ′` to a skew SSYRT whose shape
/// rearranges `λ/μ`. Rows of the input are the columns of its conjugate.
pub fn h_map(s: &Filling) -> Result<Filling> {
    expect(s, TableauKind::Ssyt, "h_map")?;
    assemble(TableauKind::Ssyrt, place(s.rows().to_vec(), Placement::Young)?)
}

/// Inverse of [`h_map`]: row `j` of the result is column `j` sorted.
pub fn h_inverse(t: &Filling) -> Result<Filling> {
    expect(t, TableauKind::Ssyrt, "h_inverse")?;
    let rows = columns_of(t)
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    assemble(TableauKind::Ssyt, rows)
}

/// The kind paired with `kind` under the reversal map.
pub fn reversed_kind(kind: TableauKind) -> Option<TableauKind> {
    match kind {
        TableauKind::Ssrrt => Some(TableauKind::Ssyrt),
        TableauKind::Ssyrt => Some(TableauKind::Ssrrt),
        TableauKind::Ssrct => Some(TableauKind::Ssyct),
        TableauKind::Ssyct => Some(TableauKind::Ssrct),
        _ => None,
    }
}

/// Reverses the order of the rows and replaces every label `v` by
/// `m + 1 - v`. Sends SSRRT to SSYRT and SSRCT to SSYCT and back.
pub fn f_map(t: &Filling, m: u32) -> Result<Filling> {
    let Some(kind) = reversed_kind(t.kind()) else {
        return t.kind().unsupported("f_map");
    };
    if let Some((r, c, v)) = t.cells().find(|&(_, _, v)| v > m) {
        return domain(format!("entry {v} at ({},{}) exceeds {m}", r + 1, c + 1));
    }
    let rows = t
        .rows()
        .iter()
        .rev()
        .map(|row| {
            row.iter()
                .map(|&e| match e {
                    Entry::Val(v) => Entry::Val(m + 1 - v),
                    _ => kind.inner_sentinel(),
                })
                .collect()
        })
        .collect();
    Filling::from_entries(kind, t.shape().reversed(), rows)
}

/// For each `j`, the `j`-th entry of every column in the order given by
/// `descending`, sentinels included.
fn ranked_columns(t: &Filling, descending: bool) -> Vec<Vec<Entry>> {
    let cols: Vec<Vec<Entry>> = columns_of(t)
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            if descending {
                c.reverse();
            }
            c
        })
        .collect();
    let depth = cols.iter().map(|c| c.len()).max().unwrap_or(0);
    (0..depth)
        .map(|j| cols.iter().filter(|c| c.len() > j).map(|c| c[j]).collect())
        .collect()
}

/// SSRCT to SSRRT: column `j` of the output collects the `j`-th largest
/// entry of every input column.
pub fn phi(t: &Filling) -> Result<Filling> {
    expect(t, TableauKind::Ssrct, "phi")?;
    assemble(TableauKind::Ssrrt, place(ranked_columns(t, true), Placement::Reverse)?)
}

/// SSYCT to SSYRT: column `j` of the output collects the `j`-th smallest
/// entry of every input column.
pub fn phi_tilde(u: &Filling) -> Result<Filling> {
    expect(u, TableauKind::Ssyct, "phi_tilde")?;
    assemble(TableauKind::Ssyrt, place(ranked_columns(u, false), Placement::Young)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn rho_example() {
        let t = Filling::from_display(
            TableauKind::RowStrict,
            shape("(5,4,4,1)"),
            &[vec![6], vec![2, 4, 5, 7], vec![1, 3, 5, 6], vec![1, 2, 3, 4, 6]],
        )
        .unwrap();
        let want = Filling::from_display(
            TableauKind::Ssyrt,
            shape("(4,5,4,1)"),
            &[vec![6], vec![2, 3, 5, 6], vec![1, 2, 3, 4, 6], vec![1, 4, 5, 7]],
        )
        .unwrap();
        let got = rho(&t).unwrap();
        assert_eq!(got, want);
        assert_eq!(rho_inverse(&got).unwrap(), t);
    }

    #[test]
    fn single_column_rho() {
        let t = Filling::straight(TableauKind::RowStrict, &[vec![1], vec![1], vec![3]]).unwrap();
        assert_eq!(rho(&t).unwrap().labels(), vec![vec![1], vec![1], vec![3]]);
    }

    #[test]
    fn h_example() {
        let s = Filling::from_labels(
            TableauKind::Ssyt,
            shape("(4,3,3,2)//(2,2,1)"),
            &[vec![1, 1], vec![2], vec![3, 4], vec![1, 4]],
        )
        .unwrap();
        let want = Filling::from_display(
            TableauKind::Ssyrt,
            shape("(3,4,1,4)//(2,3)"),
            &[vec![1, 2, 3, 4], vec![1], vec![1], vec![4]],
        )
        .unwrap();
        let got = h_map(&s).unwrap();
        assert_eq!(got, want);
        assert_eq!(h_inverse(&got).unwrap(), s);
    }

    #[test]
    fn f_example() {
        let t = Filling::from_display(
            TableauKind::Ssrrt,
            shape("(1,3,2,3,2)"),
            &[vec![2], vec![3, 2, 1], vec![3, 2], vec![4, 3, 2], vec![4, 3]],
        )
        .unwrap();
        let y = f_map(&t, 4).unwrap();
        let want = Filling::from_display(
            TableauKind::Ssyrt,
            shape("(2,3,2,3,1)"),
            &[vec![3], vec![2, 3, 4], vec![2, 3], vec![1, 2, 3], vec![1, 2]],
        )
        .unwrap();
        assert_eq!(y, want);
        assert_eq!(f_map(&y, 4).unwrap(), t);
        assert!(f_map(&t, 3).is_err());
        let one = Filling::straight(TableauKind::Ssrrt, &[vec![1]]).unwrap();
        assert_eq!(f_map(&one, 1).unwrap().labels(), vec![vec![1]]);
    }

    #[test]
    fn phi_example() {
        let t = Filling::from_display(
            TableauKind::Ssrct,
            shape("(3,4,3,2)//(0,2,2,1)"),
            &[vec![4, 2, 1], vec![4, 4], vec![3], vec![1]],
        )
        .unwrap();
        let pt = Filling::from_display(
            TableauKind::Ssrrt,
            shape("(4,1,4,3)//(0,0,3,2)"),
            &[vec![4, 3, 2, 1], vec![4], vec![4], vec![1]],
        )
        .unwrap();
        assert_eq!(phi(&t).unwrap(), pt);
        let u = f_map(&t, 4).unwrap();
        let want_u = Filling::from_display(
            TableauKind::Ssyct,
            shape("(2,3,4,3)//(1,2,2)"),
            &[vec![1, 3, 4], vec![1, 1], vec![2], vec![4]],
        )
        .unwrap();
        assert_eq!(u, want_u);
        let pu = Filling::from_display(
            TableauKind::Ssyrt,
            shape("(3,4,1,4)//(2,3)"),
            &[vec![1, 2, 3, 4], vec![1], vec![1], vec![4]],
        )
        .unwrap();
        assert_eq!(phi_tilde(&u).unwrap(), pu);
        assert_eq!(f_map(&phi(&t).unwrap(), 4).unwrap(), pu);
    }
}
