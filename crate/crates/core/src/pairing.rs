//! Pairings between join- and meet-irreducibles, and prime pairs.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Matching enumeration stops after this many pairings.
pub const PAIRING_CAP: usize = 10_000;

const NONE: usize = usize::MAX;

/// A bijection `κ` from join-irreducibles to meet-irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    joins: Vec<usize>,
    meets: Vec<usize>,
    /// `kappa[i]` is `κ(joins[i])`.
    kappa: Vec<usize>,
    j_index: Vec<usize>,
    kappa_inv: Vec<usize>,
}

impl Pairing {
    /// Builds a pairing from `(j, m)` pairs. No validity checks.
    pub fn from_pairs(l: &Lattice, pairs: &[(usize, usize)]) -> Pairing {
        let joins = l.join_irreducibles();
        let meets = l.meet_irreducibles();
        let mut j_index = vec![NONE; l.len()];
        for (i, &j) in joins.iter().enumerate() {
            j_index[j] = i;
        }
        let mut kappa = vec![NONE; joins.len()];
        let mut kappa_inv = vec![NONE; l.len()];
        for &(j, m) in pairs {
            kappa[j_index[j]] = m;
            kappa_inv[m] = j;
        }
        Pairing {
            joins,
            meets,
            kappa,
            j_index,
            kappa_inv,
        }
    }

    /// Join-irreducibles, ascending.
    pub fn joins(&self) -> &[usize] {
        &self.joins
    }

    /// Meet-irreducibles, ascending.
    pub fn meets(&self) -> &[usize] {
        &self.meets
    }

    pub fn len(&self) -> usize {
        self.joins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.joins.is_empty()
    }

    /// Position of a join-irreducible in [`Pairing::joins`].
    pub fn index_of(&self, j: usize) -> Option<usize> {
        match self.j_index.get(j) {
            Some(&i) if i != NONE => Some(i),
            _ => None,
        }
    }

    pub fn kappa(&self, j: usize) -> usize {
        self.kappa[self.j_index[j]]
    }

    pub fn kappa_at(&self, i: usize) -> usize {
        self.kappa[i]
    }

    pub fn kappa_inv(&self, m: usize) -> usize {
        self.kappa_inv[m]
    }

    /// `(j, κ(j))` in ascending `j`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.joins
            .iter()
            .copied()
            .zip(self.kappa.iter().copied())
            .collect()
    }
}

/// A prime pair `(j0, m0)`, meaning `L = [0, m0] ⊔ [j0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimePair {
    pub j0: usize,
    pub m0: usize,
}

fn witness_set(l: &Lattice, j: usize) -> Bits {
    let js = l.j_star(j).expect("join-irreducible");
    Bits::from_indices(l.len(), (0..l.len()).filter(|&z| l.meet(j, z) == js))
}

/// `max{z : j ∧ z = j_*}`.
pub fn max_meet_witnesses(l: &Lattice, j: usize) -> Result<Vec<usize>> {
    if !l.is_join_irreducible(j) {
        return Err(Error::NotJoinIrreducible(j));
    }
    Ok(l.maxima_of(&witness_set(l, j)))
}

/// `min{z : m ∨ z = m^*}`.
pub fn min_join_witnesses(l: &Lattice, m: usize) -> Result<Vec<usize>> {
    if !l.is_meet_irreducible(m) {
        return Err(Error::NotMeetIrreducible(m));
    }
    let ms = l.m_star(m).unwrap();
    let set = Bits::from_indices(l.len(), (0..l.len()).filter(|&z| l.join(m, z) == ms));
    Ok(l.minima_of(&set))
}

/// For each join-irreducible (by position), the meet-irreducibles `m`
/// (by position) with `m ∈ 𝓜(j)` and `j ∈ 𝓙(m)`.
pub(crate) fn compatibility(l: &Lattice) -> (Vec<usize>, Vec<usize>, Vec<Bits>) {
    let joins = l.join_irreducibles();
    let meets = l.meet_irreducibles();
    let mut m_index = vec![NONE; l.len()];
    for (i, &m) in meets.iter().enumerate() {
        m_index[m] = i;
    }
    let mut j_index = vec![NONE; l.len()];
    for (i, &j) in joins.iter().enumerate() {
        j_index[j] = i;
    }
    let mut from_j = vec![Bits::new(meets.len()); joins.len()];
    for (a, &j) in joins.iter().enumerate() {
        for m in max_meet_witnesses(l, j).unwrap() {
            // Witness sets only contain meet-irreducibles.
            from_j[a].insert(m_index[m]);
        }
    }
    let mut graph = vec![Bits::new(meets.len()); joins.len()];
    for (b, &m) in meets.iter().enumerate() {
        for j in min_join_witnesses(l, m).unwrap() {
            let a = j_index[j];
            if from_j[a].contains(b) {
                graph[a].insert(b);
            }
        }
    }
    (joins, meets, graph)
}

/// Perfect matchings of a bipartite graph given by adjacency masks, up to `cap`.
/// Returns `Err(count)` if the cap is reached.
pub(crate) fn matchings(
    graph: &[Bits],
    right: usize,
    cap: usize,
) -> std::result::Result<Vec<Vec<usize>>, usize> {
    fn go(
        graph: &[Bits],
        assign: &mut Vec<usize>,
        used: &mut Bits,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> bool {
        // Most constrained unassigned row first.
        let mut pick = None;
        let mut best = usize::MAX;
        for (a, row) in graph.iter().enumerate() {
            if assign[a] != NONE {
                continue;
            }
            let avail = row.minus(used).count();
            if avail < best {
                best = avail;
                pick = Some(a);
            }
        }
        let Some(a) = pick else {
            out.push(assign.clone());
            return out.len() < cap;
        };
        if best == 0 {
            return true;
        }
        for b in graph[a].minus(used).iter() {
            assign[a] = b;
            used.insert(b);
            let go_on = go(graph, assign, used, out, cap);
            used.remove(b);
            assign[a] = NONE;
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    if graph.len() != right {
        return Ok(out);
    }
    let mut assign = vec![NONE; graph.len()];
    let mut used = Bits::new(right);
    if !go(graph, &mut assign, &mut used, &mut out, cap) {
        return Err(out.len());
    }
    Ok(out)
}

fn to_pairing(l: &Lattice, joins: &[usize], meets: &[usize], m: &[usize]) -> Pairing {
    let pairs: Vec<_> = joins.iter().zip(m).map(|(&j, &b)| (j, meets[b])).collect();
    Pairing::from_pairs(l, &pairs)
}

/// All pairings, via perfect matchings of the compatibility graph.
pub fn enumerate_pairings(l: &Lattice) -> Result<Vec<Pairing>> {
    enumerate_pairings_capped(l, PAIRING_CAP)
}

pub fn enumerate_pairings_capped(l: &Lattice, cap: usize) -> Result<Vec<Pairing>> {
    let (joins, meets, graph) = compatibility(l);
    match matchings(&graph, meets.len(), cap) {
        Ok(ms) => Ok(ms
            .iter()
            .map(|m| to_pairing(l, &joins, &meets, m))
            .collect()),
        Err(_) => Err(Error::SizeLimitExceeded {
            what: "pairing enumeration".into(),
            limit: cap,
        }),
    }
}

/// The pairing of a uniquely paired lattice.
pub fn unique_pairing(l: &Lattice) -> Result<Pairing> {
    if let Some(p) = extremal_pairing(l) {
        return Ok(p);
    }
    let (joins, meets, graph) = compatibility(l);
    if joins.len() != meets.len() {
        return Err(Error::NotPaired);
    }
    // Singleton rule: every join-irreducible has exactly one candidate.
    if graph.iter().all(|r| r.count() == 1) {
        let m: Vec<usize> = graph.iter().map(|r| r.first().unwrap()).collect();
        let mut seen = Bits::new(meets.len());
        m.iter().for_each(|&b| seen.insert(b));
        if seen.count() == meets.len() {
            return Ok(to_pairing(l, &joins, &meets, &m));
        }
        return Err(Error::NotPaired);
    }
    match matchings(&graph, meets.len(), PAIRING_CAP) {
        Ok(ms) if ms.is_empty() => Err(Error::NotPaired),
        Ok(ms) if ms.len() == 1 => Ok(to_pairing(l, &joins, &meets, &ms[0])),
        Ok(ms) => Err(Error::NotUniquelyPaired(ms.len())),
        Err(count) => Err(Error::NotUniquelyPaired(count)),
    }
}

/// Pairing of an extremal lattice read off a maximum-length chain
/// `x_0 ⋖ … ⋖ x_n`: `j_i` is the only join-irreducible below `x_i` and not
/// below `x_{i-1}`, `m_i` the only meet-irreducible above `x_{i-1}` and not
/// above `x_i`, and `κ(j_i) = m_i`. Returns `None` for non-extremal input.
pub fn extremal_pairing(l: &Lattice) -> Option<Pairing> {
    let joins = l.join_irreducibles();
    let meets = l.meet_irreducibles();
    let n = l.longest_chain_length();
    if joins.len() != n || meets.len() != n {
        return None;
    }
    let chain = l.longest_chain();
    let mut pairs = Vec::with_capacity(n);
    for w in chain.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let j: Vec<_> = joins
            .iter()
            .copied()
            .filter(|&j| l.leq(j, hi) && !l.leq(j, lo))
            .collect();
        let m: Vec<_> = meets
            .iter()
            .copied()
            .filter(|&m| l.leq(lo, m) && !l.leq(hi, m))
            .collect();
        debug_assert_eq!((j.len(), m.len()), (1, 1));
        pairs.push((j[0], m[0]));
    }
    Some(Pairing::from_pairs(l, &pairs))
}

/// Join-prime elements. `j` is join-prime iff the elements not above `j`
/// are closed under joins, iff they form a principal down-set.
pub fn join_primes(l: &Lattice) -> Vec<usize> {
    prime_pairs(l).into_iter().map(|p| p.j0).collect()
}

/// Meet-prime elements, dually.
pub fn meet_primes(l: &Lattice) -> Vec<usize> {
    let p = l.poset();
    let mut out = Vec::new();
    for m in l.meet_irreducibles() {
        let rest = p.down[m].complement();
        let j0 = p.order[rest.first().unwrap()];
        if p.up[j0] == rest {
            out.push(m);
        }
    }
    out
}

/// All prime pairs, ascending in `j0`.
pub fn prime_pairs(l: &Lattice) -> Vec<PrimePair> {
    let p = l.poset();
    let mut out = Vec::new();
    for j in l.join_irreducibles() {
        let rest = p.up[j].complement();
        let m0 = p.order[rest.last().unwrap()];
        if p.down[m0] == rest {
            out.push(PrimePair { j0: j, m0 });
        }
    }
    out
}

/// Whether `(j, m)` passes the three checks characterizing pairs of a pairing.
pub fn passes_pair_checks(l: &Lattice, j: usize, m: usize) -> bool {
    match (l.j_star(j), l.m_star(m)) {
        (Some(js), Some(ms)) => l.leq(js, m) && l.leq(j, ms) && !l.leq(j, m),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: usize, covers: &[(usize, usize)]) -> Lattice {
        Lattice::from_covers(n, covers).unwrap()
    }

    fn m3() -> Lattice {
        l(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    }

    // e=0, s=1, t=2, st=3, ts=4, sts=5 (right weak order: s < st, t < ts)
    fn hexagon() -> Lattice {
        l(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)])
    }

    #[test]
    fn witnesses() {
        let h = hexagon();
        assert_eq!(max_meet_witnesses(&h, 1).unwrap(), vec![4]);
        let m = m3();
        assert_eq!(max_meet_witnesses(&m, 1).unwrap(), vec![2, 3]);
        assert_eq!(min_join_witnesses(&m, 2).unwrap(), vec![1, 3]);
        assert_eq!(max_meet_witnesses(&m, 4), Err(Error::NotJoinIrreducible(4)));
        let c = l(3, &[(0, 1), (1, 2)]);
        assert_eq!(min_join_witnesses(&c, 1).unwrap(), vec![2]);
        let d = l(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(min_join_witnesses(&d, 1).unwrap(), vec![2]);
    }

    #[test]
    fn m3_has_two_pairings() {
        let m = m3();
        let ps = enumerate_pairings(&m).unwrap();
        assert_eq!(ps.len(), 2);
        for p in &ps {
            for (j, k) in p.pairs() {
                assert_ne!(j, k);
            }
        }
        assert_eq!(unique_pairing(&m), Err(Error::NotUniquelyPaired(2)));
        assert!(prime_pairs(&m).is_empty());
        assert!(join_primes(&m).is_empty());
    }

    #[test]
    fn diamond_pairing_and_primes() {
        let d = l(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let p = unique_pairing(&d).unwrap();
        assert_eq!(p.pairs(), vec![(1, 2), (2, 1)]);
        assert_eq!(enumerate_pairings(&d).unwrap().len(), 1);
        assert_eq!(
            prime_pairs(&d),
            vec![PrimePair { j0: 1, m0: 2 }, PrimePair { j0: 2, m0: 1 }]
        );
        assert_eq!(meet_primes(&d), vec![1, 2]);
    }

    #[test]
    fn hexagon_pairing() {
        let h = hexagon();
        let p = unique_pairing(&h).unwrap();
        // κ(s)=ts, κ(t)=st, κ(st)=s, κ(ts)=t
        assert_eq!(p.pairs(), vec![(1, 4), (2, 3), (3, 1), (4, 2)]);
        for (j, m) in p.pairs() {
            assert!(passes_pair_checks(&h, j, m));
        }
    }

    #[test]
    fn chain_primes_are_all_irreducibles() {
        let c = l(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(join_primes(&c), vec![1, 2, 3]);
        let p = unique_pairing(&c).unwrap();
        assert_eq!(p.pairs(), vec![(1, 0), (2, 1), (3, 2)]);
        assert_eq!(extremal_pairing(&c), Some(p));
    }
}
