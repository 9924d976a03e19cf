//! Galois graphs, independent sets and tight orthogonal pairs.
//!
//! Vertex `i` of a graph is the `i`-th join-irreducible in ascending order,
//! matching [`Pairing::joins`]. Vertex sets are [`Bits`] over those positions.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::pairing::Pairing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisGraph {
    vertices: Vec<usize>,
    out_adj: Vec<Bits>,
    in_adj: Vec<Bits>,
    /// Undirected shadow.
    adj: Vec<Bits>,
}

/// `j → j'` iff `j ≠ j'` and `j ≰ κ(j')`.
pub fn galois_graph(l: &Lattice, kappa: &Pairing) -> GaloisGraph {
    let js = kappa.joins();
    let k = js.len();
    let mut edges = Vec::new();
    for (a, &j) in js.iter().enumerate() {
        for b in 0..k {
            if a != b && !l.leq(j, kappa.kappa_at(b)) {
                edges.push((a, b));
            }
        }
    }
    GaloisGraph::from_edges(js.to_vec(), &edges)
}

impl GaloisGraph {
    /// A graph on `vertices.len()` positions with the given directed edges.
    pub fn from_edges(vertices: Vec<usize>, edges: &[(usize, usize)]) -> GaloisGraph {
        let k = vertices.len();
        let mut out_adj = vec![Bits::new(k); k];
        let mut in_adj = vec![Bits::new(k); k];
        let mut adj = vec![Bits::new(k); k];
        for &(a, b) in edges {
            debug_assert_ne!(a, b);
            out_adj[a].insert(b);
            in_adj[b].insert(a);
            adj[a].insert(b);
            adj[b].insert(a);
        }
        GaloisGraph {
            vertices,
            out_adj,
            in_adj,
            adj,
        }
    }

    /// Lattice elements labelling the vertices.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.out_adj[a].contains(b)
    }

    pub fn out_set(&self, a: usize) -> &Bits {
        &self.out_adj[a]
    }

    pub fn in_set(&self, a: usize) -> &Bits {
        &self.in_adj[a]
    }

    pub fn neighbors(&self, a: usize) -> &Bits {
        &self.adj[a]
    }

    /// Directed edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.out_adj[a].iter() {
                out.push((a, b));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.out_adj.iter().map(Bits::count).sum()
    }

    pub fn empty_set(&self) -> Bits {
        Bits::new(self.len())
    }

    pub fn is_independent(&self, s: &Bits) -> bool {
        s.iter().all(|a| !self.adj[a].intersects(s))
    }

    /// Union of `Out(a)` over `a ∈ s`.
    pub fn out_of(&self, s: &Bits) -> Bits {
        let mut r = self.empty_set();
        for a in s {
            r.union_with(&self.out_adj[a]);
        }
        r
    }

    pub fn is_orthogonal_pair(&self, x: &Bits, y: &Bits) -> bool {
        !x.intersects(y)
            && self.is_independent(x)
            && self.is_independent(y)
            && !self.out_of(x).intersects(y)
    }

    /// The subgraph induced on `keep`, with vertices renumbered in order.
    pub fn induced(&self, keep: &Bits) -> GaloisGraph {
        let idx: Vec<usize> = keep.to_vec();
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &a) in idx.iter().enumerate() {
            pos[a] = i;
        }
        let mut edges = Vec::new();
        for &a in &idx {
            for b in self.out_adj[a].and(keep).iter() {
                edges.push((pos[a], pos[b]));
            }
        }
        GaloisGraph::from_edges(idx.iter().map(|&a| self.vertices[a]).collect(), &edges)
    }
}

/// Number of independent sets, failing once the count passes `cap`.
pub fn count_independent_sets(g: &GaloisGraph, cap: usize) -> Result<usize> {
    fn go(g: &GaloisGraph, cand: &Bits, cap: usize, acc: &mut usize) -> bool {
        // Split on a vertex with a neighbor among the candidates; if none
        // is left the candidates are free and contribute a power of two.
        let Some(v) = cand.iter().find(|&v| g.adj[v].intersects(cand)) else {
            let free = cand.count();
            if free >= 63 {
                return false;
            }
            *acc = acc.saturating_add(1usize << free);
            return *acc <= cap;
        };
        let mut without = cand.clone();
        without.remove(v);
        if !go(g, &without, cap, acc) {
            return false;
        }
        let with = without.minus(&g.adj[v]);
        go(g, &with, cap, acc)
    }
    let mut acc = 0;
    if !go(g, &Bits::full(g.len()), cap, &mut acc) {
        return Err(Error::CapExceeded(cap));
    }
    Ok(acc)
}

/// All independent sets, in no particular order, failing past `cap`.
pub fn independent_sets(g: &GaloisGraph, cap: usize) -> Result<Vec<Bits>> {
    fn go(g: &GaloisGraph, cur: &mut Bits, from: usize, out: &mut Vec<Bits>, cap: usize) -> bool {
        out.push(cur.clone());
        if out.len() > cap {
            return false;
        }
        for v in from..g.len() {
            if !g.adj[v].intersects(cur) {
                cur.insert(v);
                let ok = go(g, cur, v + 1, out, cap);
                cur.remove(v);
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    let mut out = Vec::new();
    if !go(g, &mut g.empty_set(), 0, &mut out, cap) {
        return Err(Error::CapExceeded(cap));
    }
    Ok(out)
}

/// Maximal independent sets of the undirected shadow, which are exactly its
/// independent dominating sets. Bron–Kerbosch with pivoting on the
/// complement graph; results sorted lexicographically by member list.
pub fn maximal_independent_sets(g: &GaloisGraph) -> Vec<Bits> {
    let k = g.len();
    let non_nbr: Vec<Bits> = (0..k)
        .map(|v| {
            let mut s = g.adj[v].complement();
            s.remove(v);
            s
        })
        .collect();
    fn bk(non_nbr: &[Bits], r: &mut Bits, mut p: Bits, mut x: Bits, out: &mut Vec<Bits>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .or(&x)
            .iter()
            .max_by_key(|&u| non_nbr[u].and_count(&p))
            .unwrap();
        for v in p.minus(&non_nbr[pivot]).iter() {
            r.insert(v);
            bk(non_nbr, r, p.and(&non_nbr[v]), x.and(&non_nbr[v]), out);
            r.remove(v);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    bk(
        &non_nbr,
        &mut Bits::new(k),
        Bits::full(k),
        Bits::new(k),
        &mut out,
    );
    out.sort_by_key(|s| s.to_vec());
    out
}

/// Orthogonal pair that cannot be grown or improved by a single swap.
pub fn is_tight_orthogonal_pair(g: &GaloisGraph, x: &Bits, y: &Bits) -> bool {
    if !g.is_orthogonal_pair(x, y) {
        return false;
    }
    let outside = x.or(y).complement();
    for j in outside.iter() {
        let mut x2 = x.clone();
        x2.insert(j);
        let mut y2 = y.clone();
        y2.insert(j);
        if g.is_orthogonal_pair(&x2, y) || g.is_orthogonal_pair(x, &y2) {
            return false;
        }
        // j -> j' with j' in X: swap j' out of X for j.
        for jp in g.out_adj[j].and(x).iter() {
            let mut x3 = x.clone();
            x3.remove(jp);
            x3.insert(j);
            if g.is_orthogonal_pair(&x3, y) {
                return false;
            }
        }
        // j' -> j with j' in Y: swap j' out of Y for j.
        for jp in g.in_adj[j].and(y).iter() {
            let mut y3 = y.clone();
            y3.remove(jp);
            y3.insert(j);
            if g.is_orthogonal_pair(x, &y3) {
                return false;
            }
        }
    }
    true
}

/// All tight orthogonal pairs, by scanning pairs of independent sets.
/// `cap` bounds the number of independent sets considered.
pub fn enumerate_tops(g: &GaloisGraph, cap: usize) -> Result<Vec<(Bits, Bits)>> {
    let mut ind = independent_sets(g, cap)?;
    ind.sort_by_key(|s| s.to_vec());
    let mut out = Vec::new();
    for x in &ind {
        let blocked = g.out_of(x).or(x);
        for y in &ind {
            if y.intersects(&blocked) {
                continue;
            }
            if is_tight_orthogonal_pair(g, x, y) {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn graph(k: usize, edges: &[(usize, usize)]) -> GaloisGraph {
        GaloisGraph::from_edges((0..k).collect(), edges)
    }

    #[test]
    fn edgeless_counts() {
        let g = graph(5, &[]);
        assert_eq!(count_independent_sets(&g, 1000).unwrap(), 32);
        assert_eq!(maximal_independent_sets(&g), vec![Bits::full(5)]);
        assert_eq!(count_independent_sets(&g, 10), Err(Error::CapExceeded(10)));
    }

    #[test]
    fn tournament_has_singleton_maximal_sets() {
        let g = graph(3, &[(1, 0), (2, 0), (2, 1)]);
        let m = maximal_independent_sets(&g);
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|s| s.count() == 1));
        assert_eq!(count_independent_sets(&g, 100).unwrap(), 4);
    }

    #[test]
    fn isolated_vertex_breaks_tightness_of_empty_pair() {
        let g = graph(1, &[]);
        let e = g.empty_set();
        assert!(!is_tight_orthogonal_pair(&g, &e, &e));
        let tops = enumerate_tops(&g, 100).unwrap();
        assert_eq!(tops.len(), 2);
        assert_eq!(tops[0], (e.clone(), Bits::full(1)));
        assert_eq!(tops[1], (Bits::full(1), e));
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let g = graph(4, &[(0, 1), (1, 2), (3, 0)]);
        let h = g.induced(&Bits::from_indices(4, [0, 1, 3]));
        assert_eq!(h.vertices(), &[0, 1, 3]);
        assert_eq!(h.edges(), vec![(0, 1), (2, 0)]);
    }

    fn brute_maximal(g: &GaloisGraph) -> Vec<Bits> {
        let k = g.len();
        let mut out = Vec::new();
        for mask in 0u32..(1 << k) {
            let s = Bits::from_indices(k, (0..k).filter(|i| mask >> i & 1 == 1));
            if !g.is_independent(&s) {
                continue;
            }
            // Dominating: every vertex is in s or adjacent to it.
            let dominated = (0..k).all(|v| s.contains(v) || g.neighbors(v).intersects(&s));
            if dominated {
                out.push(s);
            }
        }
        out.sort_by_key(|s| s.to_vec());
        out
    }

    proptest! {
        #[test]
        fn maximal_independent_equals_independent_dominating(
            k in 1usize..=12,
            raw in prop::collection::vec((0usize..12, 0usize..12), 0..30),
        ) {
            let edges: Vec<_> = raw.into_iter()
                .filter(|&(a, b)| a < k && b < k && a != b)
                .collect();
            let g = graph(k, &edges);
            prop_assert_eq!(maximal_independent_sets(&g), brute_maximal(&g));
            let all = independent_sets(&g, 1 << 13).unwrap();
            prop_assert_eq!(count_independent_sets(&g, 1 << 13).unwrap(), all.len());
        }
    }
}
