//! Fillings of (skew) composition diagrams and partition diagrams for the six
//! tableau families, their validation, enumeration, reading words,
//! standardization, descent sets and the restriction/glue operators.
//!
//! Row `i` of a filling always holds part `i` of the outer composition. The
//! French kinds draw row 0 at the bottom and the English kinds at the top;
//! this only matters for rendering and for which row counts as "above".

mod enumerate;
mod restrict;
mod rules;
mod words;

pub use enumerate::{enumerate_fillings, enumerate_fillings_with, enumerate_standard, enumerate_standard_with};
pub use restrict::{chain_of_syrt, glue, restrict, syrt_of_chain};
pub use rules::Rule;
pub use words::{descent_data, reading_order, reading_word, standardize, DescentData, ReadingOrder, Word};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::compositions::{Composition, SkewShape, WeakComposition};
use crate::error::{Error, Result};

/// A cell value. Sentinels compare below and above every label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entry {
    Zero,
    Val(u32),
    Inf,
}

impl Entry {
    pub fn val(self) -> Option<u32> {
        match self {
            Entry::Val(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_sentinel(self) -> bool {
        !matches!(self, Entry::Val(_))
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Val(v) => write!(f, "{v}"),
            Entry::Zero | Entry::Inf => write!(f, "*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TableauKind {
    #[serde(rename = "SSYRT")]
    Ssyrt,
    #[serde(rename = "SSRRT")]
    Ssrrt,
    #[serde(rename = "SSRCT")]
    Ssrct,
    #[serde(rename = "SSYCT")]
    Ssyct,
    #[serde(rename = "SSYT")]
    Ssyt,
    #[serde(rename = "RowStrictSSYT")]
    RowStrict,
}

impl TableauKind {
    pub const ALL: [TableauKind; 6] = [
        TableauKind::Ssyrt,
        TableauKind::Ssrrt,
        TableauKind::Ssrct,
        TableauKind::Ssyct,
        TableauKind::Ssyt,
        TableauKind::RowStrict,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableauKind::Ssyrt => "SSYRT",
            TableauKind::Ssrrt => "SSRRT",
            TableauKind::Ssrct => "SSRCT",
            TableauKind::Ssyct => "SSYCT",
            TableauKind::Ssyt => "SSYT",
            TableauKind::RowStrict => "RowStrictSSYT",
        }
    }

    /// French kinds draw row 0 at the bottom.
    pub fn is_french(self) -> bool {
        !matches!(self, TableauKind::Ssrrt | TableauKind::Ssrct)
    }

    /// Shapes of this kind are partitions rather than compositions.
    pub fn is_partition_kind(self) -> bool {
        matches!(self, TableauKind::Ssyt | TableauKind::RowStrict)
    }

    /// Value probed in cells of the inner shape.
    pub fn inner_sentinel(self) -> Entry {
        match self {
            TableauKind::Ssrrt | TableauKind::Ssrct => Entry::Inf,
            _ => Entry::Zero,
        }
    }

    /// Value probed in cells outside the outer shape.
    pub fn outer_sentinel(self) -> Entry {
        match self {
            TableauKind::Ssrrt | TableauKind::Ssrct => Entry::Zero,
            _ => Entry::Inf,
        }
    }

    pub(crate) fn unsupported<T>(self, op: &'static str) -> Result<T> {
        Err(Error::UnsupportedKind { op, kind: self.name().to_string() })
    }
}

impl fmt::Display for TableauKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableauKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TableauKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s) || (s.eq_ignore_ascii_case("rowstrict") && *k == TableauKind::RowStrict))
            .ok_or_else(|| Error::Parse(format!("unknown tableau kind {s:?}")))
    }
}

/// A failed rule together with the cells it inspected (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub cells: Vec<(usize, usize)>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at", self.rule)?;
        for (r, c) in &self.cells {
            write!(f, " ({},{})", r + 1, c + 1)?;
        }
        Ok(())
    }
}

/// A filling of a skew diagram. `rows[i]` has one entry per cell of outer
/// part `i`; cells of the inner shape hold the kind's inner sentinel.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filling {
    kind: TableauKind,
    shape: SkewShape,
    rows: Vec<Vec<Entry>>,
}

impl Filling {
    /// Builds a filling from the labels of its skew cells, row by row. Inner
    /// cells are filled in automatically. Only the grid is checked here.
    pub fn from_labels(kind: TableauKind, shape: SkewShape, labels: &[Vec<u32>]) -> Result<Self> {
        if labels.len() != shape.rows() {
            return Err(Error::Structural(format!(
                "{} label rows for a shape with {} rows",
                labels.len(),
                shape.rows()
            )));
        }
        let mut rows = Vec::with_capacity(shape.rows());
        for (r, lab) in labels.iter().enumerate() {
            let inner = shape.inner()[r] as usize;
            let want = shape.row_len(r) as usize - inner;
            if lab.len() != want {
                return Err(Error::Structural(format!(
                    "row {} has {} labels, expected {want}",
                    r + 1,
                    lab.len()
                )));
            }
            if lab.contains(&0) {
                return Err(Error::Structural(format!("row {} contains a zero label", r + 1)));
            }
            let mut row = vec![kind.inner_sentinel(); inner];
            row.extend(lab.iter().map(|&v| Entry::Val(v)));
            rows.push(row);
        }
        Self::from_entries(kind, shape, rows)
    }

    /// Straight-shape filling from rows of labels; the shape is read off.
    pub fn straight(kind: TableauKind, labels: &[Vec<u32>]) -> Result<Self> {
        let parts: Vec<u32> = labels.iter().map(|r| r.len() as u32).collect();
        Self::from_labels(kind, SkewShape::straight(Composition::new(parts)?), labels)
    }

    /// Rows given as drawn on the page, top row first.
    pub fn from_display(kind: TableauKind, shape: SkewShape, drawn: &[Vec<u32>]) -> Result<Self> {
        let mut labels = drawn.to_vec();
        if kind.is_french() {
            labels.reverse();
        }
        Self::from_labels(kind, shape, &labels)
    }

    /// Builds a filling from full rows including inner sentinels.
    pub fn from_entries(kind: TableauKind, shape: SkewShape, rows: Vec<Vec<Entry>>) -> Result<Self> {
        let f = Filling { kind, shape, rows };
        f.check_grid()?;
        Ok(f)
    }

    pub(crate) fn from_parts_unchecked(kind: TableauKind, shape: SkewShape, rows: Vec<Vec<Entry>>) -> Self {
        Filling { kind, shape, rows }
    }

    pub fn empty(kind: TableauKind) -> Self {
        Filling { kind, shape: SkewShape::straight(Composition::empty()), rows: Vec::new() }
    }

    fn check_grid(&self) -> Result<()> {
        if self.rows.len() != self.shape.rows() {
            return Err(Error::Structural(format!(
                "{} rows for a shape with {} rows",
                self.rows.len(),
                self.shape.rows()
            )));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.row_len(r) as usize {
                return Err(Error::Structural(format!("row {} has the wrong length", r + 1)));
            }
            for (c, &e) in row.iter().enumerate() {
                let inner = self.shape.is_inner_cell(r, c);
                let ok = match e {
                    Entry::Val(v) => !inner && v > 0,
                    s => inner && s == self.kind.inner_sentinel(),
                };
                if !ok {
                    return Err(Error::Structural(format!(
                        "cell ({},{}) holds {e:?}, which does not match the shape",
                        r + 1,
                        c + 1
                    )));
                }
            }
        }
        if self.kind.is_partition_kind() {
            let outer = self.shape.outer().parts();
            let inner = self.shape.inner();
            if outer.windows(2).any(|w| w[0] < w[1]) || inner.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Structural(format!(
                    "{} needs partition shapes, got {}",
                    self.kind, self.shape
                )));
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    /// Entry at `(r, c)`, probing sentinels outside the outer shape.
    pub fn get(&self, r: usize, c: usize) -> Entry {
        self.rows
            .get(r)
            .and_then(|row| row.get(c))
            .copied()
            .unwrap_or(self.kind.outer_sentinel())
    }

    /// Labels of the skew cells, row by row.
    pub fn labels(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(|r| r.iter().filter_map(|e| e.val()).collect()).collect()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn max_entry(&self) -> u32 {
        self.cells().map(|(_, _, v)| v).max().unwrap_or(0)
    }

    /// `(row, column, label)` for every skew cell, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().filter_map(move |(c, e)| e.val().map(|v| (r, c, v))))
    }

    /// Column `c` from bottom to top as drawn.
    pub fn column_visual_up(&self, c: usize) -> Vec<Entry> {
        let mut col: Vec<Entry> = (0..self.rows.len())
            .filter(|&r| c < self.rows[r].len())
            .map(|r| self.rows[r][c])
            .collect();
        if !self.kind.is_french() {
            col.reverse();
        }
        col
    }

    /// Exponent vector of the weight monomial, of length `max(k, max entry)`.
    pub fn weight(&self, k: usize) -> Vec<u32> {
        let mut w = vec![0u32; k.max(self.max_entry() as usize)];
        for (_, _, v) in self.cells() {
            w[v as usize - 1] += 1;
        }
        w
    }

    /// Each of `1..=size` appears exactly once.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (_, _, v) in self.cells() {
            let v = v as usize;
            if v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Position of each label in a standard filling, indexed by label.
    pub(crate) fn positions(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_standard() {
            return Err(Error::Domain("filling is not standard".into()));
        }
        let mut pos = vec![(0, 0); self.size() + 1];
        for (r, c, v) in self.cells() {
            pos[v as usize] = (r, c);
        }
        Ok(pos)
    }

    /// Checks every rule of the filling's kind.
    pub fn validate(&self) -> Result<()> {
        self.check_grid()?;
        let compiled = rules::compile(self.kind, &self.shape);
        let values: Vec<Entry> = compiled.order.iter().map(|&(r, c)| self.rows[r][c]).collect();
        if let Some(rule) = compiled.rules.iter().find(|rule| !rule.holds(&values)) {
            return Err(Error::Invalid(Violation { rule: rule.name, cells: rule.cells.clone() }));
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Applies `g` to every label.
    pub fn map_labels(&self, mut g: impl FnMut(u32) -> u32) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&e| if let Entry::Val(v) = e { Entry::Val(g(v)) } else { e }).collect())
            .collect();
        Filling { kind: self.kind, shape: self.shape.clone(), rows }
    }

    /// Inner shape as a weak composition.
    pub fn inner(&self) -> WeakComposition {
        self.shape.inner_weak()
    }
}

impl fmt::Display for Filling {
    /// One line per row as drawn, top row first; sentinels print as `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.cells().map(|(_, _, v)| v.to_string().len()).max().unwrap_or(1);
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        if self.kind.is_french() {
            order.reverse();
        }
        for (line, &r) in order.iter().enumerate() {
            if line > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = self.rows[r].iter().map(|e| format!("{:>width$}", e.to_string())).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
