//! Seeded random lattices.
//!
//! Inner elements get random levels; each pair on increasing levels is
//! related with a fixed probability, then a bottom and a top are added.
//! Draws that are not lattices are rejected.

use latticelab::{as_lattice, Lattice, Poset};
use rand::Rng;

#[derive(Clone, Copy, Debug)]
pub struct RandomLatticeParams {
    /// Number of elements, including bottom and top.
    pub size: usize,
    pub max_height: usize,
    pub edge_probability: f64,
}

/// One attempt; `None` if the draw is not a lattice.
pub fn try_random_lattice<R: Rng>(rng: &mut R, p: RandomLatticeParams) -> Option<Lattice> {
    let n = p.size.max(2);
    let inner = n - 2;
    let top = n - 1;
    let levels: Vec<usize> = (0..inner)
        .map(|_| rng.gen_range(1..=p.max_height.max(1)))
        .collect();
    let mut covers = Vec::new();
    for a in 0..inner {
        covers.push((0, a + 1));
        covers.push((a + 1, top));
        for b in 0..inner {
            if levels[a] < levels[b] && rng.gen_bool(p.edge_probability) {
                covers.push((a + 1, b + 1));
            }
        }
    }
    if inner == 0 {
        covers.push((0, top));
    }
    as_lattice(Poset::from_covers(n, &covers).ok()?).ok()
}

/// Retries until a lattice is drawn or `attempts` run out.
pub fn random_lattice<R: Rng>(
    rng: &mut R,
    p: RandomLatticeParams,
    attempts: usize,
) -> Option<Lattice> {
    (0..attempts).find_map(|_| try_random_lattice(rng, p))
}

/// A random poset for order-ideal experiments.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, edge_probability: f64) -> Poset {
    let mut rel = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(edge_probability) {
                rel.push((a, b));
            }
        }
    }
    Poset::from_covers(n, &rel).expect("edges go up in index")
}
