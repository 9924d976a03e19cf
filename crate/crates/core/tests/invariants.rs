use std::collections::BTreeSet;

use latticelab::classify;
use latticelab::dynamics::{pop_down, pop_up};
use latticelab::pairing::unique_pairing;
use latticelab::{Lattice, Semidistrim};
use proptest::prelude::*;

/// Bottom 0, top `n + 1`, and random relations among the middle elements
/// (only from lower to higher index).
fn bounded_poset(max_mid: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (0..=max_mid).prop_flat_map(|m| {
        let pairs: Vec<(usize, usize)> = (1..=m)
            .flat_map(|a| (a + 1..=m).map(move |b| (a, b)))
            .collect();
        let k = pairs.len();
        proptest::collection::vec(any::<bool>(), k).prop_map(move |keep| {
            let mut rel: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&p, _)| p)
                .collect();
            for x in 1..=m {
                rel.push((0, x));
                rel.push((x, m + 1));
            }
            if m == 0 {
                rel.push((0, 1));
            }
            (m + 2, rel)
        })
    })
}

fn lattice() -> impl Strategy<Value = Lattice> {
    bounded_poset(7).prop_filter_map("not a lattice", |(n, rel)| {
        Lattice::from_covers(n, &rel).ok()
    })
}

/// Reachability closure, recomputed by depth-first search.
fn reach(n: usize, rel: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut out = vec![vec![false; n]; n];
    for s in 0..n {
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            if !out[s][x] {
                out[s][x] = true;
                stack.extend(rel.iter().filter(|e| e.0 == x).map(|e| e.1));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn order_matches_reachability((n, rel) in bounded_poset(7)) {
        let r = reach(n, &rel);
        if let Ok(l) = Lattice::from_covers(n, &rel) {
            for a in 0..n {
                for b in 0..n {
                    prop_assert_eq!(l.leq(a, b), r[a][b]);
                }
            }
        }
    }

    #[test]
    fn meet_and_join_are_bounds(l in lattice()) {
        for x in 0..l.len() {
            for y in 0..l.len() {
                let (m, j) = (l.meet(x, y), l.join(x, y));
                prop_assert!(l.leq(m, x) && l.leq(m, y) && l.leq(x, j) && l.leq(y, j));
                for z in 0..l.len() {
                    if l.leq(z, x) && l.leq(z, y) {
                        prop_assert!(l.leq(z, m));
                    }
                    if l.leq(x, z) && l.leq(y, z) {
                        prop_assert!(l.leq(j, z));
                    }
                }
                prop_assert_eq!(l.meet(x, l.join(x, y)), x);
            }
        }
    }

    #[test]
    fn duality_swaps_semidistributive_halves(l in lattice()) {
        let d = l.dual();
        prop_assert_eq!(classify::is_join_semidistributive(&l), classify::is_meet_semidistributive(&d));
        prop_assert_eq!(classify::is_semidistrim(&l), classify::is_semidistrim(&d));
        prop_assert_eq!(unique_pairing(&l).is_ok(), unique_pairing(&d).is_ok());
    }

    #[test]
    fn class_containments(l in lattice()) {
        if classify::is_distributive(&l) {
            prop_assert!(classify::is_semidistributive(&l));
        }
        if classify::is_semidistributive(&l) || classify::is_trim(&l) {
            prop_assert!(classify::is_semidistrim(&l));
        }
        if classify::is_semidistrim(&l) {
            prop_assert!(classify::is_crosscut_simplicial(&l));
        }
    }

    #[test]
    fn pop_moves_monotonically(l in lattice()) {
        for x in 0..l.len() {
            prop_assert!(l.leq(pop_down(&l, x), x));
            prop_assert!(l.leq(x, pop_up(&l, x)));
        }
    }

    #[test]
    fn semidistrim_dynamics(l in lattice()) {
        if let Ok(s) = Semidistrim::new(&l) {
            let n = l.len();
            let image: BTreeSet<usize> = (0..n).map(|x| s.row(x)).collect();
            prop_assert_eq!(image.len(), n);
            for x in 0..n {
                prop_assert_eq!(s.row_inv(s.row(x)), x);
                prop_assert_eq!(s.up(s.row(x)), s.down(x));
            }
            let downs: BTreeSet<usize> = (0..n).map(|x| pop_down(&l, x)).collect();
            let ups: BTreeSet<usize> = (0..n).map(|x| pop_up(&l, x)).collect();
            prop_assert_eq!(downs.len(), ups.len());
            let p = s.pop_polynomial().unwrap();
            prop_assert_eq!(p.at_one() as usize, downs.len());
        }
    }
}
