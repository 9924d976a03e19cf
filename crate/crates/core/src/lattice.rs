//! Finite lattices on top of [`Poset`].

use std::collections::HashMap;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Lattices up to this size get materialized meet/join tables.
pub const DEFAULT_TABLE_LIMIT: usize = 4096;

#[derive(Clone, Debug)]
pub struct Lattice {
    poset: Poset,
    bottom: usize,
    top: usize,
    meet_table: Option<Vec<u16>>,
    join_table: Option<Vec<u16>>,
    names: Vec<String>,
}

/// Where an interval `[lo, hi]` sits inside its ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalEmbedding {
    pub lo: usize,
    pub hi: usize,
    /// `elements[i]` is the ambient index of interval element `i`.
    pub elements: Vec<usize>,
    index: HashMap<usize, usize>,
}

impl IntervalEmbedding {
    pub fn to_ambient(&self, i: usize) -> usize {
        self.elements[i]
    }

    pub fn from_ambient(&self, x: usize) -> Option<usize> {
        self.index.get(&x).copied()
    }
}

/// Join- and meet-irreducible elements, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducibles {
    pub joins: Vec<usize>,
    pub meets: Vec<usize>,
}

/// Checks that `p` is a lattice and wraps it.
pub fn as_lattice(p: Poset) -> Result<Lattice> {
    Lattice::from_poset_with_limit(p, DEFAULT_TABLE_LIMIT)
}

impl Lattice {
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Lattice> {
        as_lattice(Poset::from_covers(n, covers)?)
    }

    /// Like [`as_lattice`] with a custom threshold for table materialization.
    pub fn from_poset_with_limit(p: Poset, table_limit: usize) -> Result<Lattice> {
        let n = p.len();
        if n == 0 {
            return Err(Error::NotALattice(0, 0));
        }
        let mins = p.minimal_elements();
        if mins.len() > 1 {
            return Err(Error::NotALattice(mins[0], mins[1]));
        }
        let keep = n <= table_limit.min(u16::MAX as usize);
        let join_table = join_rows(&p, keep)?;
        let bottom = mins[0];
        let maxs = p.maximal_elements();
        // Pairwise joins exist, so there is a single maximal element.
        let top = maxs[0];
        let meet_table = if keep { Some(meet_rows(&p)) } else { None };
        Ok(Lattice {
            names: (0..n).map(|i| i.to_string()).collect(),
            poset: p,
            bottom,
            top,
            meet_table,
            join_table,
        })
    }

    /// Rebuilds with a different table threshold, keeping names.
    pub fn with_table_limit(self, table_limit: usize) -> Lattice {
        let names = self.names;
        Lattice::from_poset_with_limit(self.poset, table_limit)
            .expect("already a lattice")
            .with_names(names)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Lattice {
        assert_eq!(names.len(), self.len());
        self.names = names;
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn has_tables(&self) -> bool {
        self.meet_table.is_some()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.poset.lt(x, y)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        self.poset.covers()
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        self.poset.lower_covers(x)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        self.poset.upper_covers(x)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        if let Some(t) = &self.meet_table {
            return t[x * self.len() + y] as usize;
        }
        let p = &self.poset;
        let k = p.down[x].last_common(&p.down[y]).expect("bottom is common");
        p.order[k]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        if let Some(t) = &self.join_table {
            return t[x * self.len() + y] as usize;
        }
        let p = &self.poset;
        let k = p.up[x].first_common(&p.up[y]).expect("top is common");
        p.order[k]
    }

    /// Meet of a family; the empty meet is the top.
    pub fn meet_all(&self, it: impl IntoIterator<Item = usize>) -> usize {
        it.into_iter().fold(self.top, |a, b| self.meet(a, b))
    }

    /// Join of a family; the empty join is the bottom.
    pub fn join_all(&self, it: impl IntoIterator<Item = usize>) -> usize {
        it.into_iter().fold(self.bottom, |a, b| self.join(a, b))
    }

    pub fn is_join_irreducible(&self, x: usize) -> bool {
        self.lower_covers(x).len() == 1
    }

    pub fn is_meet_irreducible(&self, x: usize) -> bool {
        self.upper_covers(x).len() == 1
    }

    /// The unique element covered by a join-irreducible `j`.
    pub fn j_star(&self, j: usize) -> Option<usize> {
        match self.lower_covers(j) {
            [x] => Some(*x),
            _ => None,
        }
    }

    /// The unique element covering a meet-irreducible `m`.
    pub fn m_star(&self, m: usize) -> Option<usize> {
        match self.upper_covers(m) {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.is_join_irreducible(x))
            .collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.is_meet_irreducible(x))
            .collect()
    }

    pub fn irreducibles(&self) -> Irreducibles {
        Irreducibles {
            joins: self.join_irreducibles(),
            meets: self.meet_irreducibles(),
        }
    }

    /// Elements of `[u, v]` listed along the ambient linear extension.
    pub fn interval_elements(&self, u: usize, v: usize) -> Vec<usize> {
        let p = &self.poset;
        p.up[u].and(&p.down[v]).iter().map(|k| p.order[k]).collect()
    }

    /// The interval `[u, v]` as a lattice of its own.
    pub fn interval(&self, u: usize, v: usize) -> Result<(Lattice, IntervalEmbedding)> {
        if !self.leq(u, v) {
            return Err(Error::NotComparable(u, v));
        }
        let elements = self.interval_elements(u, v);
        let index: HashMap<usize, usize> =
            elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut covers = Vec::new();
        for (i, &x) in elements.iter().enumerate() {
            for &y in self.upper_covers(x) {
                if let Some(&k) = index.get(&y) {
                    covers.push((i, k));
                }
            }
        }
        let names = elements.iter().map(|&x| self.names[x].clone()).collect();
        let sub = Lattice::from_covers(elements.len(), &covers)
            .expect("intervals of lattices are lattices")
            .with_names(names);
        Ok((
            sub,
            IntervalEmbedding {
                lo: u,
                hi: v,
                elements,
                index,
            },
        ))
    }

    /// The order dual, with the same indexing and names.
    pub fn dual(&self) -> Lattice {
        let covers: Vec<_> = self.covers().iter().map(|&(a, b)| (b, a)).collect();
        Lattice::from_covers(self.len(), &covers)
            .expect("dual of a lattice is a lattice")
            .with_names(self.names.clone())
    }

    /// Componentwise product; `(a, b)` gets index `a * other.len() + b`.
    pub fn product(&self, other: &Lattice) -> Lattice {
        let m = other.len();
        let mut covers = Vec::new();
        for a in 0..self.len() {
            for b in 0..m {
                for &a2 in self.upper_covers(a) {
                    covers.push((a * m + b, a2 * m + b));
                }
                for &b2 in other.upper_covers(b) {
                    covers.push((a * m + b, a * m + b2));
                }
            }
        }
        let mut names = Vec::with_capacity(self.len() * m);
        for a in 0..self.len() {
            for b in 0..m {
                names.push(format!("({},{})", self.names[a], other.names[b]));
            }
        }
        Lattice::from_covers(self.len() * m, &covers)
            .expect("product of lattices is a lattice")
            .with_names(names)
    }

    /// Length of a longest maximal chain (number of covers along it).
    pub fn longest_chain_length(&self) -> usize {
        let mut best = vec![0usize; self.len()];
        for &x in self.poset.linear_extension() {
            for &y in self.upper_covers(x) {
                best[y] = best[y].max(best[x] + 1);
            }
        }
        best[self.top]
    }

    /// A maximum-length chain from bottom to top.
    pub fn longest_chain(&self) -> Vec<usize> {
        let mut best = vec![0usize; self.len()];
        let mut prev = vec![usize::MAX; self.len()];
        for &x in self.poset.linear_extension() {
            for &y in self.upper_covers(x) {
                if best[x] + 1 > best[y] {
                    best[y] = best[x] + 1;
                    prev[y] = x;
                }
            }
        }
        let mut chain = vec![self.top];
        let mut x = self.top;
        while prev[x] != usize::MAX {
            x = prev[x];
            chain.push(x);
        }
        chain.reverse();
        chain
    }

    /// `{z : z <= x}` as an element set.
    pub fn down_set(&self, x: usize) -> Bits {
        self.poset.down_set(x)
    }

    /// `{z : z >= x}` as an element set.
    pub fn up_set(&self, x: usize) -> Bits {
        self.poset.up_set(x)
    }

    pub fn maxima_of(&self, set: &Bits) -> Vec<usize> {
        self.poset.maxima_of(set)
    }

    pub fn minima_of(&self, set: &Bits) -> Vec<usize> {
        self.poset.minima_of(set)
    }
}

/// Join rows by dynamic programming over upper covers, verifying existence
/// along the way. If `y` is not below `x`, every upper bound of `{x, y}`
/// lies above some upper cover `x'` of `x`, so the join (if any) is the
/// least of the joins `x' ∨ y`, and it exists iff that least one is below
/// all the others.
fn join_rows(p: &Poset, keep: bool) -> Result<Option<Vec<u16>>> {
    let n = p.len();
    let mut rows: Vec<Option<Vec<u32>>> = vec![None; n];
    let mut pending: Vec<usize> = (0..n).map(|x| p.lower_covers(x).len()).collect();
    for &x in p.linear_extension().iter().rev() {
        let mut row = vec![0u32; n];
        let ups = p.upper_covers(x);
        for y in 0..n {
            row[y] = if p.leq(y, x) {
                x as u32
            } else if p.leq(x, y) {
                y as u32
            } else {
                let Some((&c0, rest)) = ups.split_first() else {
                    return Err(Error::NotALattice(x.min(y), x.max(y)));
                };
                let mut best = rows[c0].as_ref().unwrap()[y] as usize;
                for &c in rest {
                    let z = rows[c].as_ref().unwrap()[y] as usize;
                    if p.position(z) < p.position(best) {
                        best = z;
                    }
                }
                for &c in ups {
                    if !p.leq(best, rows[c].as_ref().unwrap()[y] as usize) {
                        return Err(Error::NotALattice(x.min(y), x.max(y)));
                    }
                }
                best as u32
            };
        }
        rows[x] = Some(row);
        if !keep {
            for &c in ups {
                pending[c] -= 1;
                if pending[c] == 0 {
                    rows[c] = None;
                }
            }
        }
    }
    if !keep {
        return Ok(None);
    }
    let mut table = Vec::with_capacity(n * n);
    for r in rows {
        table.extend(r.unwrap().into_iter().map(|v| v as u16));
    }
    Ok(Some(table))
}

/// Meet rows, assuming the lattice property: the meet of incomparable
/// `x, y` is the greatest of `x' ∧ y` over lower covers `x'` of `x`.
fn meet_rows(p: &Poset) -> Vec<u16> {
    let n = p.len();
    let mut table = vec![0u16; n * n];
    for &x in p.linear_extension() {
        for y in 0..n {
            let v = if p.leq(x, y) {
                x
            } else if p.leq(y, x) {
                y
            } else {
                p.lower_covers(x)
                    .iter()
                    .map(|&c| table[c * n + y] as usize)
                    .max_by_key(|&c| p.position(c))
                    .expect("non-bottom element has a lower cover")
            };
            table[x * n + y] = v as u16;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> Lattice {
        let covers: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Lattice::from_covers(k, &covers).unwrap()
    }

    fn diamond() -> Lattice {
        Lattice::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn hexagon() -> Lattice {
        Lattice::from_covers(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)]).unwrap()
    }

    #[test]
    fn chain_meets_are_min() {
        let c = chain(3);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(c.meet(x, y), x.min(y));
                assert_eq!(c.join(x, y), x.max(y));
            }
        }
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        // 0 < a, b < c, d < 1
        let p = Poset::from_covers(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 5),
                (4, 5),
            ],
        )
        .unwrap();
        assert_eq!(as_lattice(p).unwrap_err(), Error::NotALattice(1, 2));
        let two_mins = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(as_lattice(two_mins).unwrap_err(), Error::NotALattice(0, 1));
    }

    #[test]
    fn m3_meets() {
        let l = Lattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(2, 3), 4);
        assert_eq!((l.bottom(), l.top()), (0, 4));
    }

    #[test]
    fn irreducibles_of_small_lattices() {
        let c = chain(3);
        assert_eq!(c.join_irreducibles(), vec![1, 2]);
        assert_eq!(c.meet_irreducibles(), vec![0, 1]);
        let d = diamond();
        assert_eq!(d.join_irreducibles(), vec![1, 2]);
        assert_eq!(d.meet_irreducibles(), vec![1, 2]);
        let h = hexagon();
        assert_eq!(h.join_irreducibles().len(), 4);
        assert_eq!(h.meet_irreducibles().len(), 4);
        assert_eq!(h.j_star(3), Some(1));
        assert_eq!(h.m_star(3), Some(5));
    }

    #[test]
    fn intervals() {
        let d = diamond();
        let (full, emb) = d.interval(0, 3).unwrap();
        assert_eq!(full.len(), 4);
        assert_eq!(emb.elements, vec![0, 1, 2, 3]);
        let (c2, emb) = d.interval(0, 1).unwrap();
        assert_eq!(c2.len(), 2);
        assert_eq!(emb.from_ambient(1), Some(1));
        assert_eq!(d.interval(1, 2).unwrap_err(), Error::NotComparable(1, 2));
    }

    #[test]
    fn dual_and_product() {
        let d = chain(2).product(&chain(2));
        assert_eq!(d.len(), 4);
        assert_eq!(d.join_irreducibles(), vec![1, 2]);
        assert_eq!(d.longest_chain_length(), 2);
        let h = hexagon();
        let hd = h.dual();
        assert_eq!((hd.bottom(), hd.top()), (5, 0));
        assert_eq!(hd.dual().covers(), h.covers());
        let unit = h.product(&chain(1));
        assert_eq!(unit.covers(), h.covers());
        assert_eq!(h.longest_chain_length(), 3);
        assert_eq!(chain(5).longest_chain_length(), 4);
        assert_eq!(h.longest_chain().len(), 4);
    }

    #[test]
    fn on_demand_ops_match_tables() {
        let h = hexagon();
        let p = Poset::from_covers(6, h.covers()).unwrap();
        let lazy = Lattice::from_poset_with_limit(p, 0).unwrap();
        assert!(!lazy.has_tables());
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(lazy.meet(x, y), h.meet(x, y));
                assert_eq!(lazy.join(x, y), h.join(x, y));
            }
        }
    }
}
