use crate::compositions::{Composition, SkewShape};
use crate::error::{domain, Error, Result};
use crate::tableaux::{Entry, Filling, TableauKind};

/// Outcome of inserting one value. Cells are `(row, column)`, zero-based,
/// in the coordinates of the result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionResult {
    pub tableau: Filling,
    pub new_cell: (usize, usize),
    pub bump_path: Vec<(usize, usize)>,
}

/// `F ← x` for SSYRT and `T ←ᴿ x` for SSRRT. After a bump the scan resumes
/// at the next cell of the reading order, moving on to the next column to
/// the left when the current one runs out.
pub fn insert(t: &Filling, x: u32) -> Result<InsertionResult> {
    let young = match t.kind() {
        TableauKind::Ssyrt => true,
        TableauKind::Ssrrt => false,
        k => return k.unsupported("insert"),
    };
    if x == 0 {
        return domain("inserted values must be positive");
    }
    if !t.shape().is_straight() {
        return domain("insertion needs a straight shape");
    }
    t.validate()?;

    let end = if young { Entry::Inf } else { Entry::Zero };
    let mut rows: Vec<Vec<Entry>> = t.rows().to_vec();
    let n = rows.len();
    for r in rows.iter_mut() {
        r.push(end);
    }
    // hit test for value x at (r, c) with c >= 1
    let hits = |rows: &Vec<Vec<Entry>>, r: usize, c: usize, x: Entry| {
        let (cur, left) = (rows[r][c], rows[r][c - 1]);
        if young {
            cur >= x && left < x
        } else {
            cur <= x && left > x
        }
    };
    // "down" is decreasing index in French, increasing in English
    let down: Vec<usize> = if young { (0..n).rev().collect() } else { (0..n).collect() };
    let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let order: Vec<(usize, usize)> = (1..width)
        .rev()
        .flat_map(|c| down.iter().map(move |&r| (r, c)))
        .filter(|&(r, c)| c < rows[r].len())
        .collect();

    let mut x = Entry::Val(x);
    let mut path = Vec::new();
    let mut pos = 0;
    let settled = loop {
        let found = order[pos..]
            .iter()
            .position(|&(r, c)| hits(&rows, r, c, x))
            .map(|i| pos + i);
        let Some(i) = found else { break None };
        let (r, c) = order[i];
        let y = rows[r][c];
        rows[r][c] = x;
        path.push((r, c));
        if y == end {
            break Some((r, c));
        }
        x = y;
        pos = i + 1;
    };

    for r in rows.iter_mut() {
        if r.last() == Some(&end) {
            r.pop();
        }
    }
    let new_cell = match settled {
        Some(cell) => cell,
        None => {
            // new row of length 1 at the unique spot in the first column
            let below = |e: Entry| if young { e < x } else { e <= x };
            let q = rows.iter().take_while(|r| below(r[0])).count();
            if rows[q..].iter().any(|r| below(r[0])) {
                return Err(Error::Internal("first column position is not unique".into()));
            }
            rows.insert(q, vec![x]);
            for cell in path.iter_mut() {
                if cell.0 >= q {
                    cell.0 += 1;
                }
            }
            path.push((q, 0));
            (q, 0)
        }
    };
    let outer = Composition::new(rows.iter().map(|r| r.len() as u32).collect())?;
    let tableau = Filling::from_entries(t.kind(), SkewShape::straight(outer), rows)?;
    tableau.validate().map_err(|e| Error::Internal(format!("insertion produced an invalid tableau: {e}")))?;
    Ok(InsertionResult { tableau, new_cell, bump_path: path })
}

/// Inserts the values left to right.
pub fn insert_word(t: &Filling, xs: &[u32]) -> Result<Vec<InsertionResult>> {
    let mut out: Vec<InsertionResult> = Vec::with_capacity(xs.len());
    for &x in xs {
        let cur = out.last().map_or(t, |r| &r.tableau);
        out.push(insert(cur, x)?);
    }
    Ok(out)
}
