//! Slow reference implementations built straight from the definitions.
//!
//! Orders are plain boolean matrices; meets and joins are found by search.
//! Nothing here shares code with the library beyond reading cover lists.

#![allow(dead_code)]

use std::collections::BTreeMap;

use latticelab::Lattice;

#[derive(Clone, Debug)]
pub struct RefLattice {
    pub n: usize,
    pub le: Vec<Vec<bool>>,
    below: Vec<usize>,
}

impl RefLattice {
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> RefLattice {
        let mut up = vec![Vec::new(); n];
        for &(a, b) in covers {
            up[a].push(b);
        }
        let mut le = vec![vec![false; n]; n];
        for s in 0..n {
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                if !le[s][x] {
                    le[s][x] = true;
                    stack.extend(&up[x]);
                }
            }
        }
        RefLattice::from_matrix(le)
    }

    pub fn of(l: &Lattice) -> RefLattice {
        RefLattice::from_covers(l.len(), l.covers())
    }

    fn from_matrix(le: Vec<Vec<bool>>) -> RefLattice {
        let n = le.len();
        let below = (0..n)
            .map(|x| (0..n).filter(|&z| le[z][x]).count())
            .collect();
        RefLattice { n, le, below }
    }

    /// The induced order on `elems`, with `elems[i]` becoming `i`.
    pub fn sub(&self, elems: &[usize]) -> RefLattice {
        let le = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| self.le[a][b]).collect())
            .collect();
        RefLattice::from_matrix(le)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.le[x][y]
    }

    /// The greatest lower bound is the lower bound with the largest down-set.
    pub fn meet(&self, x: usize, y: usize) -> usize {
        (0..self.n)
            .filter(|&z| self.le[z][x] && self.le[z][y])
            .max_by_key(|&z| self.below[z])
            .expect("bottom exists")
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        (0..self.n)
            .filter(|&z| self.le[x][z] && self.le[y][z])
            .min_by_key(|&z| self.below[z])
            .expect("top exists")
    }

    pub fn bottom(&self) -> usize {
        (0..self.n).find(|&z| self.below[z] == 1).expect("nonempty")
    }

    pub fn top(&self) -> usize {
        (0..self.n)
            .find(|&z| self.below[z] == self.n)
            .expect("nonempty")
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && !(0..self.n).any(|z| self.lt(x, z) && self.lt(z, y))
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.covers(y, x)).collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.covers(x, y)).collect()
    }

    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.lower_covers(x).len() == 1)
            .collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.upper_covers(x).len() == 1)
            .collect()
    }

    fn maxima(&self, set: &[usize]) -> Vec<usize> {
        set.iter()
            .copied()
            .filter(|&a| !set.iter().any(|&b| self.lt(a, b)))
            .collect()
    }

    fn minima(&self, set: &[usize]) -> Vec<usize> {
        set.iter()
            .copied()
            .filter(|&a| !set.iter().any(|&b| self.lt(b, a)))
            .collect()
    }

    /// `max{z : j ∧ z = j_*}`.
    pub fn meet_witnesses(&self, j: usize) -> Vec<usize> {
        let js = self.lower_covers(j)[0];
        let set: Vec<usize> = (0..self.n).filter(|&z| self.meet(j, z) == js).collect();
        self.maxima(&set)
    }

    /// `min{z : m ∨ z = m^*}`.
    pub fn join_witnesses(&self, m: usize) -> Vec<usize> {
        let ms = self.upper_covers(m)[0];
        let set: Vec<usize> = (0..self.n).filter(|&z| self.join(m, z) == ms).collect();
        self.minima(&set)
    }
}

/// Every pairing, as `(j, κ(j))` lists sorted by `j`. Bijections are scanned
/// by backtracking; the defining condition is checked pair by pair.
pub fn pairings(l: &RefLattice) -> Vec<Vec<(usize, usize)>> {
    let js = l.join_irreducibles();
    let ms = l.meet_irreducibles();
    if js.len() != ms.len() {
        return Vec::new();
    }
    let ok: Vec<Vec<bool>> = js
        .iter()
        .map(|&j| {
            let mw = l.meet_witnesses(j);
            ms.iter()
                .map(|&m| mw.contains(&m) && l.join_witnesses(m).contains(&j))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut used = vec![false; ms.len()];
    let mut cur = Vec::new();
    fn go(
        i: usize,
        js: &[usize],
        ms: &[usize],
        ok: &[Vec<bool>],
        used: &mut [bool],
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == js.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..ms.len() {
            if !used[k] && ok[i][k] {
                used[k] = true;
                cur.push((js[i], ms[k]));
                go(i + 1, js, ms, ok, used, cur, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    go(0, &js, &ms, &ok, &mut used, &mut cur, &mut out);
    out
}

fn unique_kappa(l: &RefLattice) -> Option<BTreeMap<usize, usize>> {
    let mut ps = pairings(l);
    (ps.len() == 1).then(|| ps.pop().unwrap().into_iter().collect())
}

/// Recursive compatible dismantlability, trying every prime pair.
pub fn compatibly_dismantlable(l: &RefLattice) -> bool {
    if l.n == 1 {
        return true;
    }
    let Some(kappa) = unique_kappa(l) else {
        return false;
    };
    let inv: BTreeMap<usize, usize> = kappa.iter().map(|(&j, &m)| (m, j)).collect();
    for (&j0, &m0) in &kappa {
        let prime = (0..l.n).all(|x| l.le[x][m0] != l.le[j0][x]);
        if !prime {
            continue;
        }
        let upper: Vec<usize> = (0..l.n).filter(|&x| l.le[j0][x]).collect();
        let lower: Vec<usize> = (0..l.n).filter(|&x| l.le[x][m0]).collect();
        let (lu, ll) = (l.sub(&upper), l.sub(&lower));
        if !compatibly_dismantlable(&lu) || !compatibly_dismantlable(&ll) {
            continue;
        }
        let ku = unique_kappa(&lu).expect("dismantlable implies uniquely paired");
        let kl = unique_kappa(&ll).expect("dismantlable implies uniquely paired");
        let idx = |set: &[usize], x: usize| set.iter().position(|&y| y == x);

        let dom: Vec<usize> = kappa
            .keys()
            .copied()
            .filter(|&j| l.le[j0][kappa[&j]])
            .collect();
        let mut images: Vec<usize> = Vec::new();
        let mut alpha_ok = true;
        for &j in &dom {
            let a = idx(&upper, l.join(j0, j)).expect("in upper interval");
            match ku.get(&a) {
                Some(&m) if upper[m] == kappa[&j] => images.push(a),
                _ => alpha_ok = false,
            }
        }
        images.sort_unstable();
        images.dedup();
        alpha_ok &= images.len() == dom.len() && images.len() == ku.len();

        let dom: Vec<usize> = inv.keys().copied().filter(|&m| l.le[inv[&m]][m0]).collect();
        let kl_inv: BTreeMap<usize, usize> = kl.iter().map(|(&j, &m)| (m, j)).collect();
        let mut images: Vec<usize> = Vec::new();
        let mut beta_ok = true;
        for &m in &dom {
            let b = idx(&lower, l.meet(m0, m)).expect("in lower interval");
            match kl_inv.get(&b) {
                Some(&j) if lower[j] == inv[&m] => images.push(b),
                _ => beta_ok = false,
            }
        }
        images.sort_unstable();
        images.dedup();
        beta_ok &= images.len() == dom.len() && images.len() == kl.len();

        if alpha_ok && beta_ok {
            return true;
        }
    }
    false
}

/// Compatibly dismantlable with independent label sets.
pub fn semidistrim(l: &RefLattice) -> bool {
    if !compatibly_dismantlable(l) {
        return false;
    }
    let kappa = unique_kappa(l).expect("uniquely paired");
    let label = |x: usize, y: usize| -> Option<usize> {
        let c: Vec<usize> = kappa
            .iter()
            .filter(|(&j, &m)| l.le[j][y] && l.le[x][m])
            .map(|(&j, _)| j)
            .collect();
        (c.len() == 1).then(|| c[0])
    };
    let independent = |s: &[usize]| {
        s.iter().all(|&a| {
            s.iter()
                .all(|&b| a == b || (l.le[a][kappa[&b]] && l.le[b][kappa[&a]]))
        })
    };
    for x in 0..l.n {
        let down: Option<Vec<usize>> = l.lower_covers(x).into_iter().map(|y| label(y, x)).collect();
        let up: Option<Vec<usize>> = l.upper_covers(x).into_iter().map(|y| label(x, y)).collect();
        match (down, up) {
            (Some(d), Some(u)) if independent(&d) && independent(&u) => {}
            _ => return false,
        }
    }
    true
}

/// `Pop(L; q)` as degree → coefficient: the image of pop-stack sorting,
/// each element weighted by its number of upper covers.
pub fn pop_polynomial(l: &RefLattice) -> BTreeMap<usize, u64> {
    let mut lower = vec![Vec::new(); l.n];
    let mut upper_count = vec![0usize; l.n];
    // Covers from the matrix: y covers x iff nothing sits strictly between.
    for x in 0..l.n {
        for y in 0..l.n {
            if l.lt(x, y) && l.below[y] > l.below[x] {
                let between = (0..l.n).any(|z| l.lt(x, z) && l.lt(z, y));
                if !between {
                    lower[y].push(x);
                    upper_count[x] += 1;
                }
            }
        }
    }
    let mut image = vec![false; l.n];
    for x in 0..l.n {
        let p = lower[x].iter().fold(x, |acc, &y| l.meet(acc, y));
        image[p] = true;
    }
    let mut out = BTreeMap::new();
    for b in (0..l.n).filter(|&b| image[b]) {
        *out.entry(upper_count[b]).or_insert(0) += 1;
    }
    out
}

/// Classical rowmotion as a composition of toggles, top of a linear
/// extension first. `le` is the order of the poset, `order` a linear extension.
pub fn toggle_rowmotion(le: &[Vec<bool>], order: &[usize], ideal: &[bool]) -> Vec<bool> {
    let n = le.len();
    let mut cur = ideal.to_vec();
    for &p in order.iter().rev() {
        if cur[p] {
            // Removable iff nothing above p is in the ideal.
            if !(0..n).any(|q| q != p && le[p][q] && cur[q]) {
                cur[p] = false;
            }
        } else if (0..n).all(|q| q == p || !le[q][p] || cur[q]) {
            cur[p] = true;
        }
    }
    cur
}
