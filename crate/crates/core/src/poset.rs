//! Finite posets stored as packed order rows.
//!
//! Rows are indexed by element but their bits are laid out by position in a
//! fixed linear extension. With that layout the greatest element of any
//! down-closed intersection is simply its highest set bit, which is what
//! makes on-demand meets and joins cheap.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::bits::Bits;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    /// `order[k]` is the element at position `k` of the linear extension.
    pub(crate) order: Vec<usize>,
    /// Inverse of `order`.
    pub(crate) pos: Vec<usize>,
    /// `down[x]` has bit `pos[z]` set iff `z <= x`.
    pub(crate) down: Vec<Bits>,
    /// `up[x]` has bit `pos[z]` set iff `z >= x`.
    pub(crate) up: Vec<Bits>,
}

impl Poset {
    /// Builds the poset generated by `covers`, dropping redundant pairs.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(a, b) in covers {
            for i in [a, b] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, n });
                }
            }
            if a == b {
                return Err(Error::CycleDetected(a));
            }
            succ[a].push(b);
            pred[b].push(a);
        }
        for v in succ.iter_mut().chain(pred.iter_mut()) {
            v.sort_unstable();
            v.dedup();
        }

        // Kahn's algorithm, smallest index first, so an input that is already
        // a linear extension keeps the identity layout.
        let mut indeg: Vec<usize> = pred.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&x| indeg[x] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(x)) = heap.pop() {
            order.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    heap.push(Reverse(y));
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&x| indeg[x] > 0).unwrap();
            return Err(Error::CycleDetected(stuck));
        }
        let mut pos = vec![0; n];
        for (k, &x) in order.iter().enumerate() {
            pos[x] = k;
        }

        let mut down = vec![Bits::new(n); n];
        for &x in &order {
            let mut row = Bits::new(n);
            row.insert(pos[x]);
            for &c in &pred[x] {
                row.union_with(&down[c]);
            }
            down[x] = row;
        }
        let mut up = vec![Bits::new(n); n];
        for &x in order.iter().rev() {
            let mut row = Bits::new(n);
            row.insert(pos[x]);
            for &c in &succ[x] {
                row.union_with(&up[c]);
            }
            up[x] = row;
        }

        // (a, b) is a cover unless some other generator c < b lies above a.
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        let mut reduced = Vec::new();
        for b in 0..n {
            for &a in &pred[b] {
                let implied = pred[b].iter().any(|&c| c != a && down[c].contains(pos[a]));
                if !implied {
                    reduced.push((a, b));
                    lower[b].push(a);
                    upper[a].push(b);
                }
            }
        }
        reduced.sort_unstable();
        for v in upper.iter_mut() {
            v.sort_unstable();
        }

        Ok(Poset {
            n,
            covers: reduced,
            lower,
            upper,
            order,
            pos,
            down,
            up,
        })
    }

    /// The induced subposet on `elems`; element `i` of the result is `elems[i]`.
    pub fn induced(&self, elems: &[usize]) -> Poset {
        let k = elems.len();
        let mask = Bits::from_indices(self.n, elems.iter().map(|&x| self.pos[x]));
        let mut covers = Vec::new();
        for (i, &a) in elems.iter().enumerate() {
            let above = self.up[a].and(&mask);
            for (j, &b) in elems.iter().enumerate() {
                if i == j || !self.lt(a, b) {
                    continue;
                }
                // Only a and b themselves lie in [a, b] among the chosen elements.
                if above.and_count(&self.down[b]) == 2 {
                    covers.push((i, j));
                }
            }
        }
        Poset::from_covers(k, &covers).expect("induced order is acyclic")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(self.pos[x])
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Cover pairs `(lower, upper)` in lexicographic order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    /// A linear extension of the order.
    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    /// Position of `x` in [`Poset::linear_extension`].
    pub fn position(&self, x: usize) -> usize {
        self.pos[x]
    }

    /// Converts a set of positions into a set of elements.
    pub(crate) fn pos_to_elems(&self, b: &Bits) -> Bits {
        let mut out = Bits::new(self.n);
        for p in b {
            out.insert(self.order[p]);
        }
        out
    }

    pub(crate) fn elems_to_pos(&self, b: &Bits) -> Bits {
        let mut out = Bits::new(self.n);
        for x in b {
            out.insert(self.pos[x]);
        }
        out
    }

    /// `{z : z <= x}` as an element set.
    pub fn down_set(&self, x: usize) -> Bits {
        self.pos_to_elems(&self.down[x])
    }

    /// `{z : z >= x}` as an element set.
    pub fn up_set(&self, x: usize) -> Bits {
        self.pos_to_elems(&self.up[x])
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.lower[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.upper[x].is_empty()).collect()
    }

    /// Maximal members of an element set.
    pub fn maxima_of(&self, set: &Bits) -> Vec<usize> {
        let p = self.elems_to_pos(set);
        set.iter()
            .filter(|&x| self.up[x].and_count(&p) == 1)
            .collect()
    }

    /// Minimal members of an element set.
    pub fn minima_of(&self, set: &Bits) -> Vec<usize> {
        let p = self.elems_to_pos(set);
        set.iter()
            .filter(|&x| self.down[x].and_count(&p) == 1)
            .collect()
    }

    /// The poset with every relation reversed, same indexing.
    pub fn dual(&self) -> Poset {
        let covers: Vec<_> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset::from_covers(self.n, &covers).expect("dual of an acyclic order is acyclic")
    }

    /// Whether `set` (an element set) is closed downward.
    pub fn is_down_set(&self, set: &Bits) -> bool {
        set.iter()
            .all(|x| self.lower[x].iter().all(|&y| set.contains(y)))
    }
}
