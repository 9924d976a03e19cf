//! Lattice families: chains, Boolean lattices, weak orders, Tamari and
//! Cambrian lattices, root posets, and the small named lattices.

mod coxeter;
mod figures;
mod roots;
mod tamari;

pub use coxeter::{
    cambrian, cambrian_with_limit, is_c_sortable, weak_order, weak_order_i2, weak_order_with_limit,
    CoxeterElementSpec, CoxeterGroup, CoxeterPreset, CoxeterType,
};
pub use figures::{figure_lattice, FIGURE_IDS};
pub use roots::root_poset;
pub use tamari::{tamari, tamari_with_limit};

use crate::error::{Error, Result};
use crate::lattice::{as_lattice, Lattice};
use crate::poset::Poset;

/// Default cap on generated lattice sizes.
pub const DEFAULT_MAX_SIZE: usize = 50_000;

pub(crate) fn check_size(what: &str, size: Option<usize>, limit: usize) -> Result<usize> {
    match size {
        Some(s) if s <= limit => Ok(s),
        _ => Err(Error::SizeLimitExceeded {
            what: what.into(),
            limit,
        }),
    }
}

/// Builds a lattice whose indices follow a linear extension of `covers`.
pub(crate) fn relabeled(
    n: usize,
    covers: &[(usize, usize)],
    names: Vec<String>,
) -> Result<Lattice> {
    let p = Poset::from_covers(n, covers)?;
    let order = p.linear_extension().to_vec();
    let pos: Vec<usize> = (0..n).map(|x| p.position(x)).collect();
    let covers: Vec<_> = p.covers().iter().map(|&(a, b)| (pos[a], pos[b])).collect();
    let names = order.iter().map(|&x| names[x].clone()).collect();
    Ok(as_lattice(Poset::from_covers(n, &covers)?)?.with_names(names))
}

pub fn chain(k: usize) -> Result<Lattice> {
    chain_with_limit(k, DEFAULT_MAX_SIZE)
}

pub fn chain_with_limit(k: usize, limit: usize) -> Result<Lattice> {
    check_size("chain", Some(k), limit)?;
    if k == 0 {
        return Err(Error::SizeLimitExceeded {
            what: "chain needs at least one element".into(),
            limit: 0,
        });
    }
    let covers: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    let names = (0..k).map(|i| i.to_string()).collect();
    Ok(Lattice::from_covers(k, &covers)?.with_names(names))
}

/// Subsets of `{1..k}` ordered by inclusion, indexed by bitmask.
pub fn boolean(k: usize) -> Result<Lattice> {
    boolean_with_limit(k, DEFAULT_MAX_SIZE)
}

pub fn boolean_with_limit(k: usize, limit: usize) -> Result<Lattice> {
    let size = check_size("boolean lattice", 1usize.checked_shl(k as u32), limit)?;
    let mut covers = Vec::new();
    for s in 0..size {
        for i in 0..k {
            if s & (1 << i) == 0 {
                covers.push((s, s | (1 << i)));
            }
        }
    }
    let names = (0..size)
        .map(|s| {
            let elems: Vec<String> = (0..k)
                .filter(|i| s & (1 << i) != 0)
                .map(|i| (i + 1).to_string())
                .collect();
            format!("{{{}}}", elems.join(","))
        })
        .collect();
    Ok(Lattice::from_covers(size, &covers)?.with_names(names))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(chain(1).unwrap().len(), 1);
        let b = boolean(2).unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(b.covers().len(), 4);
        assert_eq!(b.name(3), "{1,2}");
        assert_eq!(boolean(0).unwrap().len(), 1);
        assert!(matches!(
            boolean_with_limit(5, 16),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
