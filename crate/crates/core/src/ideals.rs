//! Distributive lattices of order ideals.

use std::collections::HashMap;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::poset::Poset;

/// Default cap on the number of ideals enumerated.
pub const DEFAULT_IDEAL_LIMIT: usize = 50_000;

/// `J(P)` together with the ideal each element stands for.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    pub lattice: Lattice,
    /// `ideals[x]` is the down-set of `P` represented by element `x`.
    pub ideals: Vec<Bits>,
    index: HashMap<Bits, usize>,
}

impl IdealLattice {
    pub fn element_of(&self, ideal: &Bits) -> Option<usize> {
        self.index.get(ideal).copied()
    }
}

pub fn order_ideal_lattice(p: &Poset) -> Result<IdealLattice> {
    order_ideal_lattice_with_limit(p, DEFAULT_IDEAL_LIMIT)
}

/// Enumerates ideals by adding one minimal element of the complement at a
/// time, deduplicating on the ideal bitmask.
pub fn order_ideal_lattice_with_limit(p: &Poset, limit: usize) -> Result<IdealLattice> {
    let n = p.len();
    let strict_down: Vec<Bits> = (0..n)
        .map(|x| {
            let mut d = p.down_set(x);
            d.remove(x);
            d
        })
        .collect();

    let mut ideals = vec![Bits::new(n)];
    let mut index: HashMap<Bits, usize> = HashMap::new();
    index.insert(Bits::new(n), 0);
    let mut edges = Vec::new();
    let mut head = 0;
    while head < ideals.len() {
        let cur = ideals[head].clone();
        for x in 0..n {
            if cur.contains(x) || !strict_down[x].is_subset(&cur) {
                continue;
            }
            let mut next = cur.clone();
            next.insert(x);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if ideals.len() >= limit {
                        return Err(Error::SizeLimitExceeded {
                            what: "order ideal lattice".into(),
                            limit,
                        });
                    }
                    let id = ideals.len();
                    index.insert(next.clone(), id);
                    ideals.push(next);
                    id
                }
            };
            edges.push((head, id));
        }
        head += 1;
    }

    let names = ideals
        .iter()
        .map(|b| {
            let parts: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let lattice = Lattice::from_covers(ideals.len(), &edges)?.with_names(names);
    Ok(IdealLattice {
        lattice,
        ideals,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_gives_boolean_square() {
        let p = Poset::from_covers(2, &[]).unwrap();
        let j = order_ideal_lattice(&p).unwrap();
        assert_eq!(j.lattice.len(), 4);
        assert_eq!(j.lattice.join_irreducibles().len(), 2);
        let full = Bits::full(2);
        assert_eq!(j.element_of(&full), Some(j.lattice.top()));
    }

    #[test]
    fn chain_gives_chain() {
        let p = Poset::from_covers(2, &[(0, 1)]).unwrap();
        let j = order_ideal_lattice(&p).unwrap();
        assert_eq!(j.lattice.len(), 3);
        assert_eq!(j.lattice.longest_chain_length(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let p = Poset::from_covers(5, &[]).unwrap();
        assert!(matches!(
            order_ideal_lattice_with_limit(&p, 10),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn meet_is_intersection() {
        let p = Poset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let j = order_ideal_lattice(&p).unwrap();
        let l = &j.lattice;
        for x in 0..l.len() {
            for y in 0..l.len() {
                assert_eq!(j.ideals[l.meet(x, y)], j.ideals[x].and(&j.ideals[y]));
                assert_eq!(j.ideals[l.join(x, y)], j.ideals[x].or(&j.ideals[y]));
            }
        }
    }
}
