//! Exhaustive verification suites. Each suite sweeps a bounded family of
//! cases and reports how many were checked together with the first
//! counterexample found.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use crate::bijections::{f_map, h_inverse, h_map, phi, phi_tilde, rho};
use crate::compositions::{Composition, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::insertion_lr::{insert, is_lr_skew_ssyrt, lr_coefficients_with, lr_witnesses_with};
use crate::par::{self, Exec};
use crate::qsym::{
    complement_map, expand_in_f, omega, product_and_decompose, rearrangement_sum, schur_poly, schur_sums_with, skew_r_with,
    to_f, to_monomials, transition_matrix_r_to_f_with, Basis, MonomialPoly, QSymExpr, SkewRoute, SymExpr,
};
use crate::tableaux::{
    descent_data, enumerate_fillings, enumerate_fillings_with, enumerate_standard_with, glue, reading_word,
    restrict, standardize, Filling, ReadingOrder, TableauKind,
};

/// Suite names in acceptance order.
pub const SUITES: [&str; 12] = [
    "shape_1212",
    "r23",
    "words",
    "insertion",
    "schur",
    "triangularity",
    "skew",
    "restrict",
    "omega",
    "lr",
    "skew_schur",
    "bijections",
];

/// Default size bound of a suite. Suites over fixed examples ignore the bound.
pub fn default_max_n(suite: &str) -> Option<u32> {
    Some(match suite {
        "shape_1212" | "r23" | "words" | "insertion" => 0,
        "triangularity" => 7,
        "skew_schur" => 5,
        "schur" | "skew" | "restrict" | "omega" | "lr" | "bijections" => 6,
        _ => return None,
    })
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub max_n: u32,
    pub passed: bool,
    pub checked: u64,
    /// First failing case, printed in full.
    pub counterexample: Option<String>,
    pub elapsed: Duration,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} (max-n {}, {} checks, {:.2}s)",
            self.name,
            self.max_n,
            self.checked,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n  counterexample: {}", c.replace('\n', "\n    "))?;
        }
        Ok(())
    }
}

/// Running tally of one suite.
#[derive(Default)]
struct Tally {
    checked: u64,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, cert: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(cert());
        }
    }

    /// An error is a failure whose certificate is the error message.
    fn check_result(&mut self, r: Result<bool>, cert: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, cert),
            Err(e) => self.check(false, || format!("{}: {e}", cert())),
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.checked += other.checked;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }
}

/// Runs `f` on every item, possibly in parallel, and merges the tallies in
/// input order.
fn sweep<T: Send>(exec: Exec, items: Vec<T>, f: impl Fn(T, &mut Tally) + Sync + Send) -> Tally {
    let parts = par::map(exec, items, |item| {
        let mut t = Tally::default();
        f(item, &mut t);
        t
    });
    let mut total = Tally::default();
    for p in parts {
        total.absorb(p);
    }
    total
}

pub fn run_suite(name: &str, max_n: Option<u32>, exec: Exec) -> Result<SuiteReport> {
    let Some(default) = default_max_n(name) else {
        return Err(Error::Domain(format!("unknown suite `{name}`; known: {}", SUITES.join(", "))));
    };
    let n = max_n.unwrap_or(default);
    let start = Instant::now();
    let tally = match name {
        "shape_1212" => shape_1212(),
        "r23" => r23(),
        "words" => words(),
        "insertion" => insertion(),
        "schur" => schur(exec, n),
        "triangularity" => triangularity(exec, n),
        "skew" => skew(exec, n),
        "restrict" => restriction(exec, n),
        "omega" => omega_suite(exec, n),
        "lr" => lr(exec, n),
        "skew_schur" => skew_schur(exec, n),
        "bijections" => bijections(exec, n),
        _ => unreachable!(),
    };
    Ok(SuiteReport {
        name: name.to_string(),
        max_n: n,
        passed: tally.failure.is_none(),
        checked: tally.checked,
        counterexample: tally.failure,
        elapsed: start.elapsed(),
    })
}

pub fn run_all(max_n: Option<u32>, exec: Exec) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s, max_n, exec).expect("known suite"))
        .collect()
}

fn c(p: &[u32]) -> Composition {
    Composition::from_slice(p)
}

fn drawn(kind: TableauKind, shape: &str, rows: &[Vec<u32>]) -> Filling {
    Filling::from_display(kind, shape.parse().expect("shape literal"), rows).expect("tableau literal")
}

fn straight_fillings(kind: TableauKind, shapes: &[Composition], max: u32) -> Vec<Filling> {
    shapes
        .iter()
        .flat_map(|a| enumerate_fillings(kind, &SkewShape::straight(a.clone()), max))
        .collect()
}

fn compositions_up_to(n: u32) -> Vec<Composition> {
    (0..=n).flat_map(Composition::all_of).collect()
}

fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(Partition::all_of).collect()
}

fn shape_1212() -> Tally {
    let mut t = Tally::default();
    let shape = SkewShape::straight(c(&[1, 2, 1, 2]));
    let all = enumerate_fillings(TableauKind::Ssyrt, &shape, 4);
    t.check(all.len() == 7, || format!("{} fillings of (1,2,1,2) with entries <= 4", all.len()));
    let pictures: [&[Vec<u32>]; 7] = [
        &[vec![2, 3], vec![2], vec![1, 2], vec![1]],
        &[vec![2, 4], vec![2], vec![1, 2], vec![1]],
        &[vec![3, 4], vec![2], vec![1, 2], vec![1]],
        &[vec![3, 4], vec![3], vec![1, 2], vec![1]],
        &[vec![3, 4], vec![3], vec![1, 3], vec![1]],
        &[vec![3, 4], vec![3], vec![2, 3], vec![1]],
        &[vec![3, 4], vec![3], vec![2, 3], vec![2]],
    ];
    for rows in pictures {
        let f = drawn(TableauKind::Ssyrt, "(1,2,1,2)", rows);
        t.check(all.contains(&f), || format!("missing filling\n{f}"));
    }
    let mut want = MonomialPoly::zero(4);
    for e in [[2, 3, 1, 0], [2, 3, 0, 1], [2, 2, 1, 1], [2, 1, 2, 1], [2, 0, 3, 1], [1, 1, 3, 1], [0, 2, 3, 1]] {
        want.add_monomial(&e, 1).expect("four variables");
    }
    let got = to_monomials(&QSymExpr::basis_element(Basis::R, c(&[1, 2, 1, 2])), 4);
    t.check(got == want, || format!("R(1,2,1,2) in 4 variables is {got}, expected {want}"));
    t
}

fn r23() -> Tally {
    let mut t = Tally::default();
    let got = expand_in_f(Basis::R, &c(&[2, 3]));
    let mut want = QSymExpr::zero(Basis::F);
    for a in [c(&[2, 2, 1]), c(&[2, 1, 2]), c(&[1, 2, 1, 1])] {
        want.add_term(a, 1);
    }
    t.check(got == want, || format!("R(2,3) = {got}, expected {want}"));
    let syrt = enumerate_standard_with(Exec::Sequential, TableauKind::Ssyrt, &SkewShape::straight(c(&[2, 3])));
    let sets: BTreeSet<Vec<u32>> = syrt
        .iter()
        .filter_map(|f| descent_data(f).ok())
        .map(|d| d.hat.into_iter().collect())
        .collect();
    let want_sets: BTreeSet<Vec<u32>> = [vec![2, 4], vec![2, 3], vec![1, 3, 4]].into_iter().collect();
    t.check(syrt.len() == 3 && sets == want_sets, || {
        format!("{} SYRT of shape (2,3) with descent sets {sets:?}", syrt.len())
    });
    t
}

fn words() -> Tally {
    let mut t = Tally::default();
    // standardization of a row-strict Young tableau
    let rs = drawn(
        TableauKind::RowStrict,
        "(4,4,3,1)",
        &[vec![2], vec![2, 4, 5], vec![1, 2, 4, 5], vec![1, 2, 3, 5]],
    );
    let rs_std = drawn(
        TableauKind::RowStrict,
        "(4,4,3,1)",
        &[vec![6], vec![5, 9, 12], vec![2, 4, 8, 11], vec![1, 3, 7, 10]],
    );
    t.check_result(standardize(&rs).map(|s| s == rs_std), || format!("std of\n{rs}"));
    // rho
    let young = drawn(
        TableauKind::RowStrict,
        "(5,4,4,1)",
        &[vec![6], vec![2, 4, 5, 7], vec![1, 3, 5, 6], vec![1, 2, 3, 4, 6]],
    );
    let f = drawn(
        TableauKind::Ssyrt,
        "(4,5,4,1)",
        &[vec![6], vec![2, 3, 5, 6], vec![1, 2, 3, 4, 6], vec![1, 4, 5, 7]],
    );
    t.check_result(rho(&young).map(|r| r == f), || format!("rho of\n{young}"));
    // reading word and standardization
    let word = reading_word(&f, ReadingOrder::Standard).to_string();
    t.check(word == "66475353241126", || format!("reading word {word}"));
    let f_std = drawn(
        TableauKind::Ssyrt,
        "(4,5,4,1)",
        &[vec![13], vec![4, 6, 9, 12], vec![2, 3, 5, 7, 11], vec![1, 8, 10, 14]],
    );
    t.check_result(standardize(&f).map(|s| s == f_std), || format!("st of\n{f}"));
    t
}

/// The insertion example: the tableau `F`, the inserted value, the reference
/// result and its bumped cells (0-based row from the bottom, column).
pub fn insertion_example() -> (Filling, u32, Filling, Vec<(usize, usize)>) {
    let f = drawn(
        TableauKind::Ssyrt,
        "(3,4,1,3)",
        &[vec![3, 4, 5], vec![2], vec![1, 2, 3, 5], vec![1, 2, 4]],
    );
    let shown = drawn(
        TableauKind::Ssyrt,
        "(3,4,1,3,1)",
        &[vec![4], vec![3, 4, 5], vec![2], vec![1, 2, 3, 5], vec![1, 2, 3]],
    );
    (f, 3, shown, vec![(0, 2), (1, 2), (3, 1), (4, 0)])
}

fn insertion() -> Tally {
    let mut t = Tally::default();
    let (f, x, shown, bold) = insertion_example();
    match insert(&f, x) {
        Ok(r) => {
            let path: BTreeSet<_> = r.bump_path.iter().copied().collect();
            let want: BTreeSet<_> = bold.iter().copied().collect();
            t.check(r.tableau == shown && path == want, || {
                format!(
                    "F <- {x} gives\n{}\nwith path {:?}; reference\n{shown}\nwith path {bold:?} (reference valid: {})",
                    r.tableau,
                    r.bump_path,
                    shown.is_valid()
                )
            });
        }
        Err(e) => t.check(false, || format!("F <- {x} failed: {e}")),
    }
    t
}

fn schur(exec: Exec, max_n: u32) -> Tally {
    sweep(exec, partitions_up_to(max_n), |lambda, t| {
        let k = lambda.weight() as usize;
        let r_sum = to_monomials(&rearrangement_sum(Basis::R, &lambda.conjugate()), k);
        t.check_result(schur_poly(&lambda, &Partition::empty(), k).map(|s| s == r_sum), || {
            format!("s_{lambda} differs from the sum of R over rearrangements of {}", lambda.conjugate())
        });
    })
}

fn triangularity(exec: Exec, max_n: u32) -> Tally {
    let mut t = Tally::default();
    for n in 0..=max_n {
        let m = transition_matrix_r_to_f_with(exec, n);
        t.check(m.is_unitriangular(), || {
            format!(
                "n = {n}: triangularity {:?}, unit diagonal {}",
                m.triangularity(),
                m.has_unit_diagonal()
            )
        });
    }
    t
}

fn skew(exec: Exec, max_n: u32) -> Tally {
    let pairs: Vec<(Composition, Composition)> = compositions_up_to(max_n)
        .into_iter()
        .flat_map(|a| {
            compositions_up_to(a.weight())
                .into_iter()
                .filter(|b| b.contained_in(&a))
                .map(|b| (a.clone(), b))
                .collect::<Vec<_>>()
        })
        .collect();
    sweep(exec, pairs, |(a, b), t| {
        let x = skew_r_with(Exec::Sequential, &a, &b, SkewRoute::Combinatorial);
        let y = skew_r_with(Exec::Sequential, &a, &b, SkewRoute::Hopf);
        match (x, y) {
            (Ok(x), Ok(y)) => t.check(x == y, || format!("R_{a}//{b}: combinatorial {x}, coproduct {y}")),
            (Err(e), _) | (_, Err(e)) => t.check(false, || format!("R_{a}//{b}: {e}")),
        }
    })
}

fn restriction(exec: Exec, max_n: u32) -> Tally {
    let syrt: Vec<Filling> = compositions_up_to(max_n)
        .into_iter()
        .flat_map(|a| enumerate_standard_with(Exec::Sequential, TableauKind::Ssyrt, &SkewShape::straight(a)))
        .collect();
    sweep(exec, syrt, |tab, t| {
        let n = tab.size();
        let whole = match descent_data(&tab) {
            Ok(d) => d,
            Err(e) => return t.check(false, || format!("descents of\n{tab}\n{e}")),
        };
        for i in 0..=n {
            let (lower, upper) = match restrict(&tab, i) {
                Ok(p) => p,
                Err(e) => return t.check(false, || format!("restrict at {i}\n{tab}\n{e}")),
            };
            t.check_result(glue(&lower, &upper).map(|g| g == tab), || format!("glue after restrict at {i}\n{tab}"));
            t.check(lower.is_valid() && upper.is_valid(), || format!("pieces at {i} invalid\n{tab}"));
            if i == 0 || i == n {
                continue;
            }
            let law = descent_data(&lower).and_then(|l| {
                let u = descent_data(&upper)?;
                Ok(if whole.hat.contains(&(i as u32)) {
                    l.comp_hat.concat(&u.comp_hat)
                } else {
                    l.comp_hat.near_concat(&u.comp_hat)
                })
            });
            t.check_result(law.map(|c| c == whole.comp_hat), || {
                format!("descent composition law at {i}\n{tab}\nlower\n{lower}\nupper\n{upper}")
            });
        }
    })
}

fn omega_suite(exec: Exec, max_n: u32) -> Tally {
    sweep(exec, compositions_up_to(max_n), |a, t| {
        let k = a.weight() as usize;
        let s = to_f(&QSymExpr::basis_element(Basis::S, a.clone()));
        let rhs = to_monomials(&QSymExpr::basis_element(Basis::R, a.clone()), k).reverse_variables();
        t.check_result(omega(&s).map(|w| to_monomials(&w, k) == rhs), || {
            format!("omega(S_{a}) in {k} variables differs from R_{a} with variables reversed")
        });
        let r = to_f(&QSymExpr::basis_element(Basis::R, a.clone()));
        t.check_result(complement_map(&s).map(|w| w == r), || {
            format!("complementing the F-expansion of S_{a} does not give R_{a}")
        });
    })
}

fn all_ssyrt_with_sizes(kind: TableauKind, max_n: u32) -> Vec<(u32, Filling)> {
    (0..=max_n)
        .flat_map(|n| {
            straight_fillings(kind, &Composition::all_of(n), n.max(1))
                .into_iter()
                .map(move |f| (n.max(1), f))
        })
        .collect()
}

fn lr(exec: Exec, max_n: u32) -> Tally {
    let half = max_n / 2;
    // product rule
    let mut cases = Vec::new();
    for alpha in compositions_up_to(half) {
        for lambda in partitions_up_to(half) {
            cases.push((alpha.clone(), lambda));
        }
    }
    let mut t = sweep(exec, cases, |(alpha, lambda), t| {
        let d = lr_coefficients_with(Exec::Sequential, &alpha, &lambda);
        let got = QSymExpr::from_terms(Basis::R, d.into_iter().collect());
        let prod = product_and_decompose(&QSymExpr::basis_element(Basis::R, alpha.clone()), &SymExpr::schur(lambda.clone()));
        t.check_result(prod.map(|p| p == got), || {
            format!("R_{alpha} s_{lambda}: witnesses give {got}")
        });
    });
    // reversal intertwines the two insertions
    let ssrrt = all_ssyrt_with_sizes(TableauKind::Ssrrt, max_n.saturating_sub(1));
    t.absorb(sweep(exec, ssrrt, |(m, tab), t| {
        for x in 1..=m {
            let lhs = f_map(&tab, m).and_then(|y| insert(&y, m + 1 - x)).map(|r| r.tableau);
            let rhs = insert(&tab, x).and_then(|r| f_map(&r.tableau, m));
            let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
            t.check(ok, || format!("f(T <- {x}) != f(T) <- {} for m = {m}\n{tab}", m + 1 - x));
        }
    }));
    // reversal of witnesses
    let mut cases = Vec::new();
    for alpha in compositions_up_to(max_n) {
        for lambda in partitions_up_to(max_n - alpha.weight()) {
            cases.push((alpha.clone(), lambda));
        }
    }
    t.absorb(sweep(exec, cases, |(alpha, lambda), t| {
        let m = lambda.len() as u32;
        let fwd: BTreeSet<Filling> = lr_witnesses_with(Exec::Sequential, &alpha, &lambda, false)
            .into_iter()
            .map(|w| w.filling)
            .collect();
        let rev = lr_witnesses_with(Exec::Sequential, &alpha.reversed(), &lambda, true);
        let mut images = BTreeSet::new();
        for w in &rev {
            match f_map(&w.filling, m) {
                Ok(img) => {
                    t.check(is_lr_skew_ssyrt(&img), || format!("f of reverse witness is not LR\n{}", w.filling));
                    images.insert(img);
                }
                Err(e) => t.check(false, || format!("f failed on\n{}\n{e}", w.filling)),
            }
        }
        t.check(images == fwd && rev.len() == fwd.len(), || {
            format!(
                "alpha = {alpha}, lambda = {lambda}: {} reverse witnesses, {} distinct images, {} witnesses",
                rev.len(),
                images.len(),
                fwd.len()
            )
        });
    }));
    t
}

fn skew_schur(exec: Exec, max_n: u32) -> Tally {
    const K: u32 = 4;
    let mut cases = Vec::new();
    for lambda in partitions_up_to(max_n + 1) {
        for mu in partitions_up_to(lambda.weight()) {
            if mu.contained_in(&lambda) && lambda.weight() - mu.weight() <= max_n {
                cases.push((lambda.clone(), mu));
            }
        }
    }
    let mut t = sweep(exec, cases, |(lambda, mu), t| {
        t.check_result(schur_sums_with(Exec::Sequential, &lambda, &mu, K as usize).map(|(s, r)| s == r), || {
            format!("s_{lambda}/{mu} in {K} variables differs from its skew R sum")
        });
        let shape = match SkewShape::from_compositions(&lambda.as_composition(), &mu.as_composition()) {
            Ok(s) => s,
            Err(e) => return t.check(false, || format!("{lambda}/{mu}: {e}")),
        };
        let inner = mu.conjugate().as_composition().reversed();
        let ssyt = enumerate_fillings(TableauKind::Ssyt, &shape, K);
        let mut images = HashSet::new();
        for s in &ssyt {
            let ok = h_map(s).and_then(|img| {
                let same = img.weight(K as usize) == s.weight(K as usize) && h_inverse(&img)? == *s;
                let placed = img.shape().outer().underlying_partition() == lambda.conjugate()
                    && img.inner().collapse() == inner;
                Ok(same && placed && images.insert(img))
            });
            t.check_result(ok, || format!("h on\n{s}"));
        }
        let mut count = 0;
        for a in Composition::rearrangements(&lambda.conjugate()) {
            if let Ok(sh) = SkewShape::from_compositions(&a, &inner) {
                count += enumerate_fillings(TableauKind::Ssyrt, &sh, K).len();
            }
        }
        t.check(count == images.len(), || {
            format!("{lambda}/{mu}: h has {} images, {count} skew SSYRT", images.len())
        });
    });
    t.absorb(sweep(exec, partitions_up_to(max_n), |lambda, t| {
        let k = lambda.weight() as usize;
        let conj = lambda.conjugate();
        let s_sum = to_monomials(&rearrangement_sum(Basis::S, &lambda), k);
        let r_sum = to_monomials(&rearrangement_sum(Basis::R, &conj), k);
        t.check(s_sum == r_sum, || format!("sum of S over {lambda} differs from sum of R over {conj}"));
        let ssyct = straight_fillings(TableauKind::Ssyct, &Composition::rearrangements(&lambda), k as u32);
        let mut images = HashSet::new();
        for u in &ssyct {
            let ok = phi_tilde(u).map(|y| {
                y.weight(k) == u.weight(k)
                    && y.shape().outer().underlying_partition() == conj
                    && images.insert(y)
            });
            t.check_result(ok, || format!("phi tilde on\n{u}"));
        }
        let target = straight_fillings(TableauKind::Ssyrt, &Composition::rearrangements(&conj), k as u32).len();
        t.check(target == images.len(), || {
            format!("{lambda}: phi tilde has {} images, {target} SSYRT", images.len())
        });
    }));
    t
}

fn bijections(exec: Exec, max_n: u32) -> Tally {
    let row_strict: Vec<Filling> = (0..=max_n)
        .flat_map(|n| {
            let shapes: Vec<Composition> = Partition::all_of(n).iter().map(|p| p.as_composition()).collect();
            straight_fillings(TableauKind::RowStrict, &shapes, n)
        })
        .collect();
    let mut t = sweep(exec, row_strict, |tab, t| {
        let lhs = standardize(&tab).and_then(|s| rho(&s));
        let rhs = rho(&tab).and_then(|r| standardize(&r));
        let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
        t.check(ok, || format!("rho and standardization do not commute on\n{tab}"));
    });
    let ssrct = all_ssyrt_with_sizes(TableauKind::Ssrct, max_n.saturating_sub(1));
    t.absorb(sweep(exec, ssrct, |(m, tab), t| {
        let lhs = phi(&tab).and_then(|p| f_map(&p, m));
        let rhs = f_map(&tab, m).and_then(|u| phi_tilde(&u));
        let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
        t.check(ok, || format!("f(phi(T)) != phi~(f(T)) for m = {m}\n{tab}"));
    }));
    // a fixed skew instance
    let skew = drawn(
        TableauKind::Ssrct,
        "(3,4,3,2)//(0,2,2,1)",
        &[vec![4, 2, 1], vec![4, 4], vec![3], vec![1]],
    );
    let shown = drawn(
        TableauKind::Ssyrt,
        "(3,4,1,4)//(2,3)",
        &[vec![1, 2, 3, 4], vec![1], vec![1], vec![4]],
    );
    let lhs = phi(&skew).and_then(|p| f_map(&p, 4));
    let rhs = f_map(&skew, 4).and_then(|u| phi_tilde(&u));
    t.check(matches!((&lhs, &rhs), (Ok(a), Ok(b)) if *a == shown && *b == shown), || {
        format!("skew phi instance: f(phi(T)) = {lhs:?}, phi~(f(T)) = {rhs:?}")
    });
    t
}

/// Number of SSYRT of each straight shape of size `n` with entries at most
/// `max`, used by the benches.
pub fn count_by_shape(exec: Exec, n: u32, max: u32) -> BTreeMap<Composition, usize> {
    Composition::all_of(n)
        .into_iter()
        .map(|a| {
            let k = enumerate_fillings_with(exec, TableauKind::Ssyrt, &SkewShape::straight(a.clone()), max).len();
            (a, k)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass() {
        for s in SUITES {
            if s == "insertion" {
                continue;
            }
            let r = run_suite(s, Some(3), Exec::Parallel).unwrap();
            assert!(r.passed, "{r}");
            assert!(r.checked > 0, "{s}");
        }
    }

    #[test]
    fn insertion_reports_the_reference_difference() {
        let r = run_suite("insertion", None, Exec::Sequential).unwrap();
        assert!(!r.passed);
        assert!(r.counterexample.unwrap().contains("reference"));
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", None, Exec::Sequential).is_err());
    }
}
