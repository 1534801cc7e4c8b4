//! Backtracking enumeration in standard reading order. Each compiled rule is
//! checked as soon as its last cell is assigned, and values are tried in
//! increasing order, so the output is lexicographic in the reading sequence.

use super::rules::{compile, Compiled};
use super::{Entry, Filling, TableauKind};
use crate::compositions::SkewShape;
use crate::par::{self, Exec};

struct Search<'a> {
    compiled: &'a Compiled,
    at: Vec<Vec<usize>>,
    kind: TableauKind,
    shape: &'a SkewShape,
    max: u32,
    standard: bool,
}

impl Search<'_> {
    fn run(&self, values: &mut Vec<Entry>, used: &mut Vec<bool>, out: &mut Vec<Filling>) {
        let p = values.len();
        if p == self.compiled.order.len() {
            out.push(self.build(values));
            return;
        }
        for v in 1..=self.max {
            if self.standard && used[v as usize] {
                continue;
            }
            values.push(Entry::Val(v));
            if self.at[p].iter().all(|&i| self.compiled.rules[i].holds(values)) {
                if self.standard {
                    used[v as usize] = true;
                }
                self.run(values, used, out);
                if self.standard {
                    used[v as usize] = false;
                }
            }
            values.pop();
        }
    }

    fn build(&self, values: &[Entry]) -> Filling {
        let mut rows: Vec<Vec<Entry>> = (0..self.shape.rows())
            .map(|r| vec![self.kind.inner_sentinel(); self.shape.row_len(r) as usize])
            .collect();
        for (&(r, c), &e) in self.compiled.order.iter().zip(values) {
            rows[r][c] = e;
        }
        Filling::from_parts_unchecked(self.kind, self.shape.clone(), rows)
    }
}

fn enumerate(exec: Exec, kind: TableauKind, shape: &SkewShape, max: u32, standard: bool) -> Vec<Filling> {
    if kind.is_partition_kind() {
        let o = shape.outer().parts();
        let i = shape.inner();
        if o.windows(2).any(|w| w[0] < w[1]) || i.windows(2).any(|w| w[0] < w[1]) {
            return Vec::new();
        }
    }
    let compiled = compile(kind, shape);
    let (at, constant) = compiled.triggers();
    if constant.iter().any(|&i| !compiled.rules[i].holds(&[])) {
        return Vec::new();
    }
    let search = Search { compiled: &compiled, at, kind, shape, max, standard };
    let n = compiled.order.len();
    if n == 0 {
        return vec![search.build(&[])];
    }
    // split on the first cell so branches can run independently
    let firsts: Vec<u32> = (1..=max).collect();
    par::flat_map(exec, firsts, |v| {
        let mut values = vec![Entry::Val(v)];
        let mut used = vec![false; max as usize + 1];
        let mut out = Vec::new();
        if search.at[0].iter().all(|&i| search.compiled.rules[i].holds(&values)) {
            used[v as usize] = true;
            search.run(&mut values, &mut used, &mut out);
        }
        out
    })
}

/// All valid fillings of `shape` with entries in `1..=max`.
pub fn enumerate_fillings(kind: TableauKind, shape: &SkewShape, max: u32) -> Vec<Filling> {
    enumerate_fillings_with(Exec::default(), kind, shape, max)
}

pub fn enumerate_fillings_with(exec: Exec, kind: TableauKind, shape: &SkewShape, max: u32) -> Vec<Filling> {
    enumerate(exec, kind, shape, max, false)
}

/// All valid fillings using each of `1..=size` once.
pub fn enumerate_standard(kind: TableauKind, shape: &SkewShape) -> Vec<Filling> {
    enumerate_standard_with(Exec::default(), kind, shape)
}

pub fn enumerate_standard_with(exec: Exec, kind: TableauKind, shape: &SkewShape) -> Vec<Filling> {
    enumerate(exec, kind, shape, shape.size() as u32, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{descent_data, reading_order, ReadingOrder};

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn seven_fillings_of_1212() {
        let all = enumerate_fillings(TableauKind::Ssyrt, &shape("(1,2,1,2)"), 4);
        assert_eq!(all.len(), 7);
        let drawn = [
            [[2, 3], [2, 0], [1, 2], [1, 0]],
            [[2, 4], [2, 0], [1, 2], [1, 0]],
            [[3, 4], [2, 0], [1, 2], [1, 0]],
            [[3, 4], [3, 0], [1, 2], [1, 0]],
            [[3, 4], [3, 0], [1, 3], [1, 0]],
            [[3, 4], [3, 0], [2, 3], [1, 0]],
            [[3, 4], [3, 0], [2, 3], [2, 0]],
        ];
        for d in drawn {
            let rows: Vec<Vec<u32>> = d.iter().map(|r| r.iter().copied().filter(|&x| x > 0).collect()).collect();
            let f = Filling::from_display(TableauKind::Ssyrt, shape("(1,2,1,2)"), &rows).unwrap();
            assert!(all.contains(&f), "{f}");
        }
    }

    #[test]
    fn trivial_counts() {
        assert!(enumerate_fillings(TableauKind::Ssyrt, &shape("(2)"), 1).is_empty());
        assert_eq!(enumerate_fillings(TableauKind::Ssyrt, &shape("(1,1)"), 1).len(), 1);
        assert_eq!(enumerate_standard(TableauKind::Ssyrt, &shape("(4)")).len(), 1);
        assert_eq!(enumerate_fillings(TableauKind::Ssyrt, &shape("()"), 3).len(), 1);
    }

    #[test]
    fn standard_23() {
        let all = enumerate_standard(TableauKind::Ssyrt, &shape("(2,3)"));
        assert_eq!(all.len(), 3);
        let mut sets: Vec<Vec<u32>> = all
            .iter()
            .map(|t| descent_data(t).unwrap().hat.into_iter().collect())
            .collect();
        sets.sort();
        assert_eq!(sets, vec![vec![1, 3, 4], vec![2, 3], vec![2, 4]]);
    }

    #[test]
    fn output_is_lexicographic_and_sequential_agrees() {
        let s = shape("(2,1,3)");
        let par = enumerate_fillings_with(Exec::Parallel, TableauKind::Ssyrt, &s, 4);
        let seq = enumerate_fillings_with(Exec::Sequential, TableauKind::Ssyrt, &s, 4);
        assert_eq!(par, seq);
        let order = reading_order(TableauKind::Ssyrt, &s, ReadingOrder::Standard);
        let keys: Vec<Vec<Entry>> = par.iter().map(|f| order.iter().map(|&(r, c)| f.rows()[r][c]).collect()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn non_lc_skew_is_empty() {
        // (1,1) ⊂ (2,1) but (1,1) is not below (2,1) in the poset
        assert!(enumerate_fillings(TableauKind::Ssyrt, &shape("(2,1)//(1,1)"), 3).is_empty());
        assert!(!enumerate_fillings(TableauKind::Ssyrt, &shape("(2,1)//(1)"), 3).is_empty());
    }
}
