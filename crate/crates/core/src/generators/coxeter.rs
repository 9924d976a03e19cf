//! Weak orders of types A, B and I₂(m), and Cambrian lattices as c-sortable
//! elements.
//!
//! Generators are numbered from 1. In type A, `s_i` swaps positions `i` and
//! `i+1` of a permutation of `1..=n+1`. In type B, `s_1` changes the sign of
//! the first entry of a signed permutation and `s_{i+1}` swaps entries `i`
//! and `i+1`. In I₂(m) the generators are `s = s_1` and `t = s_2`.

use std::collections::HashMap;

use super::{check_size, DEFAULT_MAX_SIZE};
use crate::error::{Error, Result};
use crate::lattice::{as_lattice, Lattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A,
    B,
    I2,
}

/// A finite Coxeter group acting on small integer vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoxeterGroup {
    pub ty: CoxeterType,
    /// Rank for A and B, `m` for I₂(m).
    pub param: usize,
}

type Elem = Vec<i32>;

impl CoxeterGroup {
    pub fn new(ty: CoxeterType, param: usize) -> CoxeterGroup {
        CoxeterGroup { ty, param }
    }

    pub fn rank(&self) -> usize {
        match self.ty {
            CoxeterType::A | CoxeterType::B => self.param,
            CoxeterType::I2 => 2,
        }
    }

    /// `|W|`, or `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        let n = self.param;
        match self.ty {
            CoxeterType::A => (1..=n + 1).try_fold(1usize, |a, k| a.checked_mul(k)),
            CoxeterType::B => (1..=n).try_fold(1usize, |a, k| a.checked_mul(2 * k)),
            CoxeterType::I2 => n.checked_mul(2),
        }
    }

    fn identity(&self) -> Elem {
        match self.ty {
            CoxeterType::A => (1..=self.param as i32 + 1).collect(),
            CoxeterType::B => (1..=self.param as i32).collect(),
            // x ↦ x + k, or x ↦ -x + k when flipped: [k, flip]
            CoxeterType::I2 => vec![0, 0],
        }
    }

    /// `u · s_i`, with `i` counted from 0.
    fn right(&self, u: &Elem, i: usize) -> Elem {
        let mut v = u.clone();
        match self.ty {
            CoxeterType::A => v.swap(i, i + 1),
            CoxeterType::B if i == 0 => v[0] = -v[0],
            CoxeterType::B => v.swap(i - 1, i),
            CoxeterType::I2 => {
                let m = self.param as i32;
                let sign = if u[1] == 0 { 1 } else { -1 };
                v[0] = (u[0] + sign * i as i32).rem_euclid(m);
                v[1] = 1 - u[1];
            }
        }
        v
    }

    /// `s_i · u`, with `i` counted from 0.
    fn left(&self, i: usize, u: &Elem) -> Elem {
        match self.ty {
            CoxeterType::A => {
                let (a, b) = (i as i32 + 1, i as i32 + 2);
                u.iter()
                    .map(|&x| {
                        if x == a {
                            b
                        } else if x == b {
                            a
                        } else {
                            x
                        }
                    })
                    .collect()
            }
            CoxeterType::B if i == 0 => u
                .iter()
                .map(|&x| if x.abs() == 1 { -x } else { x })
                .collect(),
            CoxeterType::B => {
                let (a, b) = (i as i32, i as i32 + 1);
                u.iter()
                    .map(|&x| {
                        let s = x.signum();
                        match x.abs() {
                            v if v == a => s * b,
                            v if v == b => s * a,
                            _ => x,
                        }
                    })
                    .collect()
            }
            CoxeterType::I2 => {
                let m = self.param as i32;
                vec![(i as i32 - u[0]).rem_euclid(m), 1 - u[1]]
            }
        }
    }

    fn name(&self, u: &Elem, word: &[usize]) -> String {
        match self.ty {
            CoxeterType::A if u.len() <= 9 => u.iter().map(|x| x.to_string()).collect(),
            CoxeterType::A => u
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            CoxeterType::B => {
                let parts: Vec<String> = u.iter().map(|x| x.to_string()).collect();
                format!("[{}]", parts.join(","))
            }
            CoxeterType::I2 if word.is_empty() => "e".into(),
            CoxeterType::I2 => word
                .iter()
                .map(|&i| if i == 0 { 's' } else { 't' })
                .collect(),
        }
    }
}

/// All group elements by breadth-first search, so lengths are nondecreasing
/// along the indexing.
struct Enumeration {
    elems: Vec<Elem>,
    index: HashMap<Elem, usize>,
    length: Vec<usize>,
    words: Vec<Vec<usize>>,
}

impl Enumeration {
    fn new(g: &CoxeterGroup) -> Enumeration {
        let id = g.identity();
        let mut e = Enumeration {
            elems: vec![id.clone()],
            index: HashMap::from([(id, 0)]),
            length: vec![0],
            words: vec![Vec::new()],
        };
        let mut head = 0;
        while head < e.elems.len() {
            let u = e.elems[head].clone();
            for i in 0..g.rank() {
                let v = g.right(&u, i);
                if !e.index.contains_key(&v) {
                    e.index.insert(v.clone(), e.elems.len());
                    e.elems.push(v);
                    e.length.push(e.length[head] + 1);
                    let mut w = e.words[head].clone();
                    w.push(i);
                    e.words.push(w);
                }
            }
            head += 1;
        }
        e
    }

    fn len_of(&self, u: &Elem) -> usize {
        self.length[self.index[u]]
    }

    fn weak_covers(&self, g: &CoxeterGroup) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for (a, u) in self.elems.iter().enumerate() {
            for i in 0..g.rank() {
                let b = self.index[&g.right(u, i)];
                if self.length[b] == self.length[a] + 1 {
                    covers.push((a, b));
                }
            }
        }
        covers
    }
}

/// Right weak order on `W`: `u ⋖ u·s` whenever the length goes up by one.
pub fn weak_order(ty: CoxeterType, rank: usize) -> Result<Lattice> {
    weak_order_with_limit(ty, rank, DEFAULT_MAX_SIZE)
}

pub fn weak_order_i2(m: usize) -> Result<Lattice> {
    weak_order(CoxeterType::I2, m)
}

pub fn weak_order_with_limit(ty: CoxeterType, param: usize, limit: usize) -> Result<Lattice> {
    let g = CoxeterGroup::new(ty, param);
    check_size("weak order", g.order(), limit)?;
    let e = Enumeration::new(&g);
    let covers = e.weak_covers(&g);
    let names = e
        .elems
        .iter()
        .zip(&e.words)
        .map(|(u, w)| g.name(u, w))
        .collect();
    Ok(Lattice::from_covers(e.elems.len(), &covers)?.with_names(names))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxeterPreset {
    /// `s_1 s_2 ⋯ s_n`.
    Linear,
    /// Odd-numbered generators, then even-numbered ones.
    Bipartite,
    Custom,
}

/// A Coxeter element `c`, written as a word in the generators (from 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterElementSpec {
    pub ty: CoxeterType,
    /// Rank for A and B, `m` for I₂(m).
    pub param: usize,
    pub word: Vec<usize>,
    pub preset: CoxeterPreset,
}

impl CoxeterElementSpec {
    pub fn linear(ty: CoxeterType, param: usize) -> CoxeterElementSpec {
        let r = CoxeterGroup::new(ty, param).rank();
        CoxeterElementSpec {
            ty,
            param,
            word: (1..=r).collect(),
            preset: CoxeterPreset::Linear,
        }
    }

    pub fn bipartite(ty: CoxeterType, param: usize) -> CoxeterElementSpec {
        let r = CoxeterGroup::new(ty, param).rank();
        let word = (1..=r).step_by(2).chain((2..=r).step_by(2)).collect();
        CoxeterElementSpec {
            ty,
            param,
            word,
            preset: CoxeterPreset::Bipartite,
        }
    }

    /// Rejects words that are not permutations of the generators.
    pub fn custom(ty: CoxeterType, param: usize, word: Vec<usize>) -> Result<CoxeterElementSpec> {
        let r = CoxeterGroup::new(ty, param).rank();
        let mut sorted = word.clone();
        sorted.sort_unstable();
        if sorted != (1..=r).collect::<Vec<_>>() {
            let bad = word.iter().copied().find(|&i| i == 0 || i > r).unwrap_or(0);
            return Err(Error::IndexOutOfRange { index: bad, n: r });
        }
        Ok(CoxeterElementSpec {
            ty,
            param,
            word,
            preset: CoxeterPreset::Custom,
        })
    }

    pub fn group(&self) -> CoxeterGroup {
        CoxeterGroup::new(self.ty, self.param)
    }
}

fn sorting_supports(g: &CoxeterGroup, e: &Enumeration, c: &[usize], w: &Elem) -> Vec<u64> {
    let mut u = w.clone();
    let mut len = e.len_of(&u);
    let mut supports = Vec::new();
    while len > 0 {
        let mut support = 0u64;
        for &s in c {
            let v = g.left(s - 1, &u);
            let lv = e.len_of(&v);
            if lv < len {
                u = v;
                len = lv;
                support |= 1 << (s - 1);
            }
        }
        supports.push(support);
    }
    supports
}

fn sortable(g: &CoxeterGroup, e: &Enumeration, c: &[usize], w: &Elem) -> bool {
    sorting_supports(g, e, c, w)
        .windows(2)
        .all(|p| p[1] & !p[0] == 0)
}

/// Whether `w` (by index in the weak order of `spec.group()`) is c-sortable.
pub fn is_c_sortable(spec: &CoxeterElementSpec, w: usize) -> bool {
    let g = spec.group();
    let e = Enumeration::new(&g);
    sortable(&g, &e, &spec.word, &e.elems[w])
}

pub fn cambrian(spec: &CoxeterElementSpec) -> Result<Lattice> {
    cambrian_with_limit(spec, DEFAULT_MAX_SIZE)
}

/// The weak order restricted to c-sortable elements.
pub fn cambrian_with_limit(spec: &CoxeterElementSpec, limit: usize) -> Result<Lattice> {
    let g = spec.group();
    check_size("weak order for Cambrian lattice", g.order(), limit)?;
    let e = Enumeration::new(&g);
    let keep: Vec<usize> = (0..e.elems.len())
        .filter(|&i| sortable(&g, &e, &spec.word, &e.elems[i]))
        .collect();
    let covers = e.weak_covers(&g);
    let weak = crate::poset::Poset::from_covers(e.elems.len(), &covers)?;
    let sub = weak.induced(&keep);
    let names = keep
        .iter()
        .map(|&i| g.name(&e.elems[i], &e.words[i]))
        .collect();
    Ok(as_lattice(sub)?.with_names(names))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(weak_order(CoxeterType::A, 3).unwrap().len(), 24);
        assert_eq!(weak_order(CoxeterType::B, 3).unwrap().len(), 48);
        assert_eq!(weak_order_i2(5).unwrap().len(), 10);
    }

    #[test]
    fn hexagon_names() {
        let h = weak_order(CoxeterType::A, 2).unwrap();
        assert_eq!(h.name(h.bottom()), "123");
        assert_eq!(h.name(h.top()), "321");
        assert_eq!(h.longest_chain_length(), 3);
    }

    #[test]
    fn type_b_lengths() {
        let g = CoxeterGroup::new(CoxeterType::B, 2);
        let e = Enumeration::new(&g);
        // inversions + negative-sum pairs + negative entries
        for u in &e.elems {
            let mut l = 0;
            for i in 0..u.len() {
                l += (u[i] < 0) as usize;
                for j in i + 1..u.len() {
                    l += (u[i] > u[j]) as usize + (u[i] + u[j] < 0) as usize;
                }
            }
            assert_eq!(l, e.len_of(u));
        }
        assert_eq!(e.len_of(&vec![-1, -2]), 4);
    }

    #[test]
    fn left_and_right_agree_on_lengths() {
        for (ty, p) in [
            (CoxeterType::A, 3),
            (CoxeterType::B, 3),
            (CoxeterType::I2, 5),
        ] {
            let g = CoxeterGroup::new(ty, p);
            let e = Enumeration::new(&g);
            for u in &e.elems {
                for i in 0..g.rank() {
                    let a = e.len_of(&g.left(i, u)) as i64 - e.len_of(u) as i64;
                    assert_eq!(a.abs(), 1);
                }
            }
        }
    }

    #[test]
    fn catalan_counts() {
        for (n, cat) in [(1, 2), (2, 5), (3, 14), (4, 42)] {
            for spec in [
                CoxeterElementSpec::linear(CoxeterType::A, n),
                CoxeterElementSpec::bipartite(CoxeterType::A, n),
            ] {
                assert_eq!(cambrian(&spec).unwrap().len(), cat);
            }
        }
        for (n, cat) in [(2, 6), (3, 20)] {
            let spec = CoxeterElementSpec::linear(CoxeterType::B, n);
            assert_eq!(cambrian(&spec).unwrap().len(), cat);
        }
        let i2 = CoxeterElementSpec::linear(CoxeterType::I2, 6);
        assert_eq!(cambrian(&i2).unwrap().len(), 8);
    }

    #[test]
    fn custom_words_are_checked() {
        assert!(CoxeterElementSpec::custom(CoxeterType::A, 3, vec![2, 1, 3]).is_ok());
        assert!(CoxeterElementSpec::custom(CoxeterType::A, 3, vec![1, 1, 3]).is_err());
        assert_eq!(
            CoxeterElementSpec::bipartite(CoxeterType::A, 5).word,
            vec![1, 3, 5, 2, 4]
        );
    }
}
