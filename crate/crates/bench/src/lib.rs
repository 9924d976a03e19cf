//! Fixtures shared by the benchmarks.

use latticelab::generators::{tamari, weak_order, CoxeterType};
use latticelab::Lattice;

/// Weak order of type A at the given rank.
pub fn weak_a(rank: usize) -> Lattice {
    weak_order(CoxeterType::A, rank).expect("small rank")
}

pub fn tamari_lattice(n: usize) -> Lattice {
    tamari(n).expect("small n")
}
