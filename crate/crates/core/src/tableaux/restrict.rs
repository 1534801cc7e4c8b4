//! Splitting a standard SSYRT by label, gluing the pieces back, and the
//! correspondence with saturated chains of the composition poset.

use super::{Entry, Filling, TableauKind};
use crate::compositions::{lc_relation, Composition, LcRelation, SkewShape, WeakComposition};
use crate::error::{domain, Result};

fn require_ssyrt(t: &Filling, op: &'static str) -> Result<()> {
    if t.kind() != TableauKind::Ssyrt {
        return t.kind().unsupported(op);
    }
    Ok(())
}

/// Row lengths of the cells labelled `<= i` together with the inner shape.
fn shape_below(t: &Filling, i: u32) -> Result<Composition> {
    let mut parts: Vec<u32> = t
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .filter(|e| match e {
                    Entry::Val(v) => *v <= i,
                    _ => true,
                })
                .count() as u32
        })
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Composition::new(parts)
}

/// Splits a standard straight SSYRT of size `n` into the cells labelled at
/// most `i` and the skew filling of the rest, relabelled from 1.
pub fn restrict(t: &Filling, i: usize) -> Result<(Filling, Filling)> {
    require_ssyrt(t, "restrict")?;
    if !t.shape().is_straight() || !t.is_standard() {
        return domain("restrict needs a standard straight-shape filling");
    }
    let n = t.size();
    if i > n {
        return domain(format!("cut {i} exceeds size {n}"));
    }
    let i32_ = i as u32;
    let beta = shape_below(t, i32_)?;
    let lower_rows: Vec<Vec<u32>> = (0..beta.len())
        .map(|r| t.rows()[r][..beta.parts()[r] as usize].iter().filter_map(|e| e.val()).collect())
        .collect();
    let lower = Filling::from_labels(TableauKind::Ssyrt, SkewShape::straight(beta.clone()), &lower_rows)?;
    let upper_shape = SkewShape::from_compositions(t.shape().outer(), &beta)?;
    let upper_rows: Vec<Vec<u32>> = t
        .labels()
        .iter()
        .map(|row| row.iter().filter(|&&v| v > i32_).map(|v| v - i32_).collect())
        .collect();
    let upper = Filling::from_labels(TableauKind::Ssyrt, upper_shape, &upper_rows)?;
    Ok((lower, upper))
}

/// Inverse of [`restrict`]: shifts the labels of `upper` by the size of
/// `lower` and fills its inner shape with `lower`.
pub fn glue(lower: &Filling, upper: &Filling) -> Result<Filling> {
    require_ssyrt(lower, "glue")?;
    require_ssyrt(upper, "glue")?;
    if !lower.shape().is_straight() {
        return domain("lower piece must have straight shape");
    }
    let beta = lower.shape().outer();
    if upper.inner() != WeakComposition(beta.parts().to_vec()) {
        return domain(format!("inner shape {} of upper piece is not {beta}", upper.inner()));
    }
    let shift = lower.max_entry();
    let mut labels = upper.map_labels(|v| v + shift).labels();
    for (r, row) in lower.labels().into_iter().enumerate() {
        let mut joined = row;
        joined.extend_from_slice(&labels[r]);
        labels[r] = joined;
    }
    Filling::from_labels(TableauKind::Ssyrt, SkewShape::straight(upper.shape().outer().clone()), &labels)
}

/// Standard SSYRT of `α^k // α^0` whose label `i` fills the cell added at
/// step `i` of a saturated chain.
pub fn syrt_of_chain(chain: &[Composition]) -> Result<Filling> {
    let Some(first) = chain.first() else {
        return domain("empty chain");
    };
    for w in chain.windows(2) {
        if lc_relation(&w[0], &w[1]) != LcRelation::Covers {
            return domain(format!("{} is not covered by {}", w[0], w[1]));
        }
    }
    let last = chain.last().unwrap();
    let mut rows: Vec<Vec<Entry>> = last
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &p)| {
            let inner = first.parts().get(r).copied().unwrap_or(0);
            let mut row = vec![Entry::Zero; inner as usize];
            row.resize(p as usize, Entry::Inf);
            row
        })
        .collect();
    for (step, w) in chain.windows(2).enumerate() {
        let r = (0..w[1].len())
            .find(|&r| w[1].parts()[r] != w[0].parts().get(r).copied().unwrap_or(0))
            .expect("a cover adds a cell");
        let c = w[1].parts()[r] as usize - 1;
        rows[r][c] = Entry::Val(step as u32 + 1);
    }
    let shape = SkewShape::from_compositions(last, first)?;
    Filling::from_entries(TableauKind::Ssyrt, shape, rows)
}

/// The saturated chain of a standard SSYRT whose inner shape is a composition.
pub fn chain_of_syrt(t: &Filling) -> Result<Vec<Composition>> {
    require_ssyrt(t, "chain_of_syrt")?;
    if !t.is_standard() {
        return domain("chain_of_syrt needs a standard filling");
    }
    (0..=t.size() as u32).map(|i| shape_below(t, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::descent_data;

    fn c(p: &[u32]) -> Composition {
        Composition::from_slice(p)
    }

    fn worked_syrt() -> Filling {
        Filling::from_display(
            TableauKind::Ssyrt,
            "(2,4,1,3)".parse().unwrap(),
            &[vec![7, 8, 10], vec![6], vec![2, 3, 4, 9], vec![1, 5]],
        )
        .unwrap()
    }

    #[test]
    fn split_at_six() {
        let t = worked_syrt();
        t.validate().unwrap();
        let (lower, upper) = restrict(&t, 6).unwrap();
        let want_lower =
            Filling::from_display(TableauKind::Ssyrt, "(2,3,1)".parse().unwrap(), &[vec![6], vec![2, 3, 4], vec![1, 5]])
                .unwrap();
        assert_eq!(lower, want_lower);
        let want_upper = Filling::from_display(
            TableauKind::Ssyrt,
            "(2,4,1,3)//(2,3,1)".parse().unwrap(),
            &[vec![1, 2, 4], vec![], vec![3], vec![]],
        )
        .unwrap();
        assert_eq!(upper, want_upper);
        upper.validate().unwrap();
        assert_eq!(descent_data(&lower).unwrap().comp_hat, c(&[2, 1, 3]));
        assert_eq!(glue(&lower, &upper).unwrap(), t);
    }

    #[test]
    fn ends() {
        let t = worked_syrt();
        let (l, u) = restrict(&t, 0).unwrap();
        assert_eq!(l.size(), 0);
        assert_eq!(u, t);
        let (l, u) = restrict(&t, 10).unwrap();
        assert_eq!(l, t);
        assert_eq!(u.size(), 0);
        assert!(restrict(&t, 11).is_err());
        assert_eq!(glue(&Filling::empty(TableauKind::Ssyrt), &t).unwrap(), t);
    }

    #[test]
    fn chain_example() {
        let chain = [c(&[1]), c(&[1, 1]), c(&[1, 2]), c(&[1, 2, 1]), c(&[1, 2, 2]), c(&[1, 2, 3]), c(&[2, 2, 3])];
        let t = syrt_of_chain(&chain).unwrap();
        let want = Filling::from_display(
            TableauKind::Ssyrt,
            "(2,2,3)//(1)".parse().unwrap(),
            &[vec![3, 4, 5], vec![1, 2], vec![6]],
        )
        .unwrap();
        assert_eq!(t, want);
        t.validate().unwrap();
        assert_eq!(chain_of_syrt(&t).unwrap(), chain.to_vec());
        assert!(syrt_of_chain(&[c(&[1]), c(&[1, 2])]).is_err());
    }
}
