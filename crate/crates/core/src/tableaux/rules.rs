//! The defining conditions of each kind, compiled against a fixed shape into
//! comparisons between cell positions and sentinel constants.

use super::words::{reading_order, ReadingOrder};
use super::{Entry, TableauKind};
use crate::compositions::SkewShape;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Term {
    /// Index into the cell order of the compiled shape.
    Var(usize),
    Const(Entry),
}

/// `l < r` when `strict`, else `l <= r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Rel {
    l: Term,
    r: Term,
    strict: bool,
}

impl Rel {
    fn lt(l: Term, r: Term) -> Self {
        Rel { l, r, strict: true }
    }

    fn le(l: Term, r: Term) -> Self {
        Rel { l, r, strict: false }
    }

    fn eval(&self, values: &[Entry]) -> bool {
        let get = |t: Term| match t {
            Term::Var(i) => values[i],
            Term::Const(e) => e,
        };
        let (l, r) = (get(self.l), get(self.r));
        if self.strict {
            l < r
        } else {
            l <= r
        }
    }

    fn vars(&self) -> impl Iterator<Item = usize> {
        [self.l, self.r].into_iter().filter_map(|t| match t {
            Term::Var(i) => Some(i),
            Term::Const(_) => None,
        })
    }
}

/// One instance of a defining condition: `premise ⇒ conclusion`.
#[derive(Clone, Debug)]
pub struct Rule {
    pub name: &'static str,
    pub cells: Vec<(usize, usize)>,
    premise: Option<Rel>,
    conclusion: Rel,
}

impl Rule {
    pub(crate) fn holds(&self, values: &[Entry]) -> bool {
        self.premise.is_some_and(|p| !p.eval(values)) || self.conclusion.eval(values)
    }

    /// Last cell position the rule depends on, or `None` for a constant rule.
    pub(crate) fn last_var(&self) -> Option<usize> {
        self.premise.iter().flat_map(|p| p.vars()).chain(self.conclusion.vars()).max()
    }
}

pub(crate) struct Compiled {
    /// Skew cells in the enumeration order.
    pub order: Vec<(usize, usize)>,
    pub rules: Vec<Rule>,
}

impl Compiled {
    /// Rules bucketed by the position at which they become decidable, plus
    /// the constant rules.
    pub fn triggers(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let mut at = vec![Vec::new(); self.order.len()];
        let mut constant = Vec::new();
        for (i, rule) in self.rules.iter().enumerate() {
            match rule.last_var() {
                Some(p) => at[p].push(i),
                None => constant.push(i),
            }
        }
        (at, constant)
    }
}

pub(crate) fn compile(kind: TableauKind, shape: &SkewShape) -> Compiled {
    let order = reading_order(kind, shape, ReadingOrder::Standard);
    let rows = shape.rows();
    let mut index = vec![Vec::new(); rows];
    for r in 0..rows {
        index[r] = vec![None; shape.row_len(r) as usize];
    }
    for (p, &(r, c)) in order.iter().enumerate() {
        index[r][c] = Some(p);
    }
    let term = |r: usize, c: usize| -> Term {
        if !shape.contains_cell(r, c) {
            Term::Const(kind.outer_sentinel())
        } else if let Some(p) = index[r][c] {
            Term::Var(p)
        } else {
            Term::Const(kind.inner_sentinel())
        }
    };
    let real = |t: Term| matches!(t, Term::Var(_));
    let mut rules = Vec::new();
    let mut push = |name, cells: Vec<(usize, usize)>, premise, conclusion| {
        rules.push(Rule { name, cells, premise, conclusion });
    };

    for r in 0..rows {
        for c in 0..(shape.row_len(r) as usize).saturating_sub(1) {
            let (x, y) = (term(r, c), term(r, c + 1));
            if !(real(x) && real(y)) {
                continue;
            }
            let rel = match kind {
                TableauKind::Ssyrt | TableauKind::RowStrict => Rel::lt(x, y),
                TableauKind::Ssyt | TableauKind::Ssyct => Rel::le(x, y),
                TableauKind::Ssrrt => Rel::lt(y, x),
                TableauKind::Ssrct => Rel::le(y, x),
            };
            push("row", vec![(r, c), (r, c + 1)], None, rel);
        }
    }

    if kind.is_partition_kind() {
        for r in 0..rows.saturating_sub(1) {
            for c in 0..shape.row_len(r + 1) as usize {
                let (x, y) = (term(r, c), term(r + 1, c));
                if !(real(x) && real(y)) {
                    continue;
                }
                let rel = if kind == TableauKind::Ssyt { Rel::lt(x, y) } else { Rel::le(x, y) };
                push("column", vec![(r, c), (r + 1, c)], None, rel);
            }
        }
        return Compiled { order, rules };
    }

    for r in 0..rows.saturating_sub(1) {
        let (x, y) = (term(r, 0), term(r + 1, 0));
        if !real(x) && !real(y) {
            continue;
        }
        let rel = match kind {
            TableauKind::Ssyrt | TableauKind::Ssrrt => Rel::le(x, y),
            _ => Rel::lt(x, y),
        };
        push("first column", vec![(r, 0), (r + 1, 0)], None, rel);
    }

    let m = shape.width() as usize;
    for lo in 0..rows {
        for hi in lo + 1..rows {
            let (up, down) = if kind.is_french() { (hi, lo) } else { (lo, hi) };
            for k in 0..m.saturating_sub(1) {
                let (a, b, c) = (term(up, k), term(up, k + 1), term(down, k + 1));
                // column-strict kinds only constrain a real lower-right cell
                if matches!(kind, TableauKind::Ssyct | TableauKind::Ssrct) && !real(c) {
                    continue;
                }
                let (premise, conclusion) = match kind {
                    TableauKind::Ssyrt => (Rel::lt(a, c), Rel::le(b, c)),
                    TableauKind::Ssrrt => (Rel::lt(c, a), Rel::le(c, b)),
                    TableauKind::Ssyct => (Rel::le(a, c), Rel::lt(b, c)),
                    TableauKind::Ssrct => (Rel::le(c, a), Rel::lt(c, b)),
                    _ => unreachable!(),
                };
                let cells = vec![(up, k), (up, k + 1), (down, k + 1)];
                push("triple", cells, Some(premise), conclusion);
            }
        }
    }
    Compiled { order, rules }
}
