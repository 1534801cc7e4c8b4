//! Randomized invariants and the horizontal strip property of SYRT.

use proptest::prelude::*;

use yrqs::bijections::f_map;
use yrqs::compositions::{Composition, SkewShape};
use yrqs::insertion_lr::insert_word;
use yrqs::json::{self, TableauJson};
use yrqs::qsym::{to_f, to_r, Basis, QSymExpr};
use yrqs::tableaux::{descent_data, enumerate_standard, standardize, Filling, TableauKind};

/// Compositions of weight at most `max_n`.
fn composition(max_n: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=3, 0..=max_n as usize).prop_map(move |mut p| {
        while p.iter().sum::<u32>() > max_n {
            p.pop();
        }
        Composition::new(p).unwrap()
    })
}

proptest! {
    #[test]
    fn subsets_round_trip(alpha in composition(8)) {
        let n = alpha.weight();
        prop_assert_eq!(Composition::from_subset(&alpha.to_subset(), n).unwrap(), alpha.clone());
        prop_assert_eq!(alpha.complement().complement(), alpha.clone());
        if n > 0 {
            prop_assert_eq!(alpha.complement().len() + alpha.len(), n as usize + 1);
        }
    }

    #[test]
    fn r_expansion_inverts(alpha in composition(6)) {
        let r = QSymExpr::basis_element(Basis::R, alpha);
        prop_assert_eq!(to_r(&to_f(&r)).unwrap(), r);
    }

    /// Inserting a word into the empty tableau builds a valid tableau with
    /// the word's content, one cell per letter.
    #[test]
    fn words_insert_to_valid_tableaux(word in prop::collection::vec(1u32..=5, 0..9), reverse in any::<bool>()) {
        let kind = if reverse { TableauKind::Ssrrt } else { TableauKind::Ssyrt };
        let steps = insert_word(&Filling::empty(kind), &word).unwrap();
        let t = steps.last().map_or_else(|| Filling::empty(kind), |r| r.tableau.clone());
        t.validate().unwrap();
        prop_assert_eq!(t.size(), word.len());
        let mut content = vec![0u32; 5];
        for &x in &word {
            content[x as usize - 1] += 1;
        }
        prop_assert_eq!(t.weight(5), content);
        for (i, r) in steps.iter().enumerate() {
            prop_assert_eq!(r.tableau.size(), i + 1);
        }
        prop_assert_eq!(f_map(&f_map(&t, 5).unwrap(), 5).unwrap(), t.clone());
        if !reverse {
            let st = standardize(&t).unwrap();
            prop_assert!(st.is_standard());
            prop_assert_eq!(st.shape(), t.shape());
        }
    }

    /// Serializing a parsed tableau gives back the same bytes.
    #[test]
    fn tableau_json_is_stable(word in prop::collection::vec(1u32..=4, 0..8)) {
        let steps = insert_word(&Filling::empty(TableauKind::Ssyrt), &word).unwrap();
        let t = steps.last().map_or_else(|| Filling::empty(TableauKind::Ssyrt), |r| r.tableau.clone());
        let s = json::to_string(&TableauJson::from(&t));
        let back: TableauJson = json::from_str(&s).unwrap();
        prop_assert_eq!(back.to_filling().unwrap(), t);
        prop_assert_eq!(json::to_string(&back), s);
    }
}

/// Pairs `(x - 1, x)` of an SYRT with `x` strictly right of `x - 1`, as
/// `(row, column)` positions with rows counted from the bottom.
fn strip_steps(n: u32) -> Vec<((usize, usize), (usize, usize))> {
    let mut out = Vec::new();
    for alpha in Composition::all_of(n) {
        for t in enumerate_standard(TableauKind::Ssyrt, &SkewShape::straight(alpha)) {
            let mut pos = vec![(0, 0); n as usize + 1];
            for (r, c, v) in t.cells() {
                pos[v as usize] = (r, c);
            }
            let d = descent_data(&t).unwrap();
            for x in 2..=n {
                if d.hat.contains(&(x - 1)) {
                    out.push((pos[x as usize - 1], pos[x as usize]));
                }
            }
        }
    }
    out
}

/// Within a horizontal strip, a step into the next column never drops to a
/// lower row.
#[test]
fn strips_climb_between_adjacent_columns() {
    let mut seen = 0;
    for n in 1..=7 {
        for ((r0, c0), (r1, c1)) in strip_steps(n) {
            assert!(c1 > c0);
            if c1 == c0 + 1 {
                seen += 1;
                assert!(r1 >= r0, "n = {n}: ({r0},{c0}) then ({r1},{c1})");
            }
        }
    }
    assert!(seen > 0);
}

/// A step that skips columns may drop to a lower row.
#[test]
fn strips_may_drop_across_a_gap() {
    let drops = (1..=5)
        .flat_map(strip_steps)
        .filter(|&((r0, c0), (r1, c1))| c1 > c0 + 1 && r1 < r0)
        .count();
    assert!(drops > 0);
}
