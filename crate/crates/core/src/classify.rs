//! Lattice class predicates with witnesses.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bits::Bits;
use crate::dynamics::{pop_down, pop_up, EdgeLabeling};
use crate::error::{Error, Result};
use crate::galois::galois_graph;
use crate::ideals::order_ideal_lattice_with_limit;
use crate::lattice::Lattice;
use crate::pairing::{matchings, prime_pairs, unique_pairing, Pairing};

/// A predicate outcome with an optional counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn no(w: W) -> Self {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }
}

/// `(x, y, z)` with `x ∨ y = x ∨ z` but `x ∨ (y ∧ z) ≠ x ∨ y`.
pub fn join_semidistributivity(l: &Lattice) -> Verdict<(usize, usize, usize)> {
    sd_scan(l, |a, b| l.join(a, b), |a, b| l.meet(a, b))
}

/// `(x, y, z)` with `x ∧ y = x ∧ z` but `x ∧ (y ∨ z) ≠ x ∧ y`.
pub fn meet_semidistributivity(l: &Lattice) -> Verdict<(usize, usize, usize)> {
    sd_scan(l, |a, b| l.meet(a, b), |a, b| l.join(a, b))
}

// For fixed x, fold `dual` over every y with `op(x, y) = b`. If the fold
// stays inside the class of b then every pair in the class passes, since the
// fold lies below (or above) each pairwise combination.
fn sd_scan(
    l: &Lattice,
    op: impl Fn(usize, usize) -> usize,
    dual: impl Fn(usize, usize) -> usize,
) -> Verdict<(usize, usize, usize)> {
    let n = l.len();
    let mut acc = vec![usize::MAX; n];
    for x in 0..n {
        acc.iter_mut().for_each(|a| *a = usize::MAX);
        for y in 0..n {
            let b = op(x, y);
            if acc[b] == usize::MAX {
                acc[b] = y;
                continue;
            }
            let next = dual(acc[b], y);
            if op(x, next) != b {
                return Verdict::no((x, acc[b], y));
            }
            acc[b] = next;
        }
    }
    Verdict::yes()
}

pub fn is_join_semidistributive(l: &Lattice) -> bool {
    join_semidistributivity(l).holds
}

pub fn is_meet_semidistributive(l: &Lattice) -> bool {
    meet_semidistributivity(l).holds
}

pub fn is_semidistributive(l: &Lattice) -> bool {
    is_meet_semidistributive(l) && is_join_semidistributive(l)
}

/// Longest chain length equals both irreducible counts.
pub fn is_extremal(l: &Lattice) -> bool {
    let n = l.longest_chain_length();
    l.join_irreducibles().len() == n && l.meet_irreducibles().len() == n
}

/// `(y ∨ x) ∧ z = y ∨ (x ∧ z)` for all `y ≤ z`.
pub fn is_left_modular(l: &Lattice, x: usize) -> bool {
    let n = l.len();
    for z in 0..n {
        if l.leq(x, z) {
            continue;
        }
        let xz = l.meet(x, z);
        for y in l.down_set(z).iter() {
            if l.leq(y, x) {
                continue;
            }
            if l.meet(l.join(y, x), z) != l.join(y, xz) {
                return false;
            }
        }
    }
    true
}

pub fn left_modular_elements(l: &Lattice) -> Vec<usize> {
    (0..l.len()).filter(|&x| is_left_modular(l, x)).collect()
}

/// Extremal, with a maximal chain of left modular elements.
pub fn is_trim(l: &Lattice) -> bool {
    if !is_extremal(l) {
        return false;
    }
    // Depth-first search over covers, testing left modularity lazily.
    let mut state: Vec<Option<bool>> = vec![None; l.len()];
    let mut visited = vec![false; l.len()];
    let mut lm = |x: usize| *state[x].get_or_insert_with(|| is_left_modular(l, x));
    let mut stack = vec![l.bottom()];
    if !lm(l.bottom()) {
        return false;
    }
    visited[l.bottom()] = true;
    while let Some(x) = stack.pop() {
        if x == l.top() {
            return true;
        }
        for &y in l.upper_covers(x) {
            if !visited[y] && lm(y) {
                visited[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

/// `|L|` equals the number of down-sets of the join-irreducible subposet.
pub fn is_distributive(l: &Lattice) -> bool {
    let js = l.join_irreducibles();
    let sub = l.poset().induced(&js);
    match order_ideal_lattice_with_limit(&sub, l.len()) {
        Ok(ideals) => ideals.lattice.len() == l.len(),
        Err(_) => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OverlapFailure {
    NotUniquelyPaired,
    /// A cover whose label candidate set does not have one element.
    Cover {
        x: usize,
        y: usize,
        count: usize,
    },
}

pub fn overlapping(l: &Lattice) -> Verdict<OverlapFailure> {
    let Ok(kappa) = unique_pairing(l) else {
        return Verdict::no(OverlapFailure::NotUniquelyPaired);
    };
    match EdgeLabeling::new(l, &kappa) {
        Ok(_) => Verdict::yes(),
        Err(Error::NotOverlapping { x, y, count }) => {
            Verdict::no(OverlapFailure::Cover { x, y, count })
        }
        Err(e) => unreachable!("{e}"),
    }
}

pub fn is_overlapping(l: &Lattice) -> Result<bool> {
    let kappa = unique_pairing(l)?;
    Ok(EdgeLabeling::new(l, &kappa).is_ok())
}

/// A recursive split of an interval along dismantling pairs. Indices are
/// elements of the lattice passed to [`dismantle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DismantlingCertificate {
    Leaf(usize),
    Split {
        j0: usize,
        m0: usize,
        lower: Arc<DismantlingCertificate>,
        upper: Arc<DismantlingCertificate>,
    },
}

impl DismantlingCertificate {
    /// Top-level dismantling pair, if any.
    pub fn pair(&self) -> Option<(usize, usize)> {
        match self {
            DismantlingCertificate::Leaf(_) => None,
            DismantlingCertificate::Split { j0, m0, .. } => Some((*j0, *m0)),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            DismantlingCertificate::Leaf(_) => 0,
            DismantlingCertificate::Split { lower, upper, .. } => {
                1 + lower.depth().max(upper.depth())
            }
        }
    }
}

/// Unique pairing of an interval, as ambient `join → meet`.
type AmbientPairing = Option<HashMap<usize, usize>>;

struct Dismantler<'a> {
    l: &'a Lattice,
    pairings: HashMap<(usize, usize), AmbientPairing>,
    done: HashMap<(usize, usize), Option<Arc<DismantlingCertificate>>>,
}

impl Dismantler<'_> {
    fn pairing(&mut self, u: usize, v: usize) -> AmbientPairing {
        if let Some(p) = self.pairings.get(&(u, v)) {
            return p.clone();
        }
        let (sub, emb) = self.l.interval(u, v).unwrap();
        let p = unique_pairing(&sub).ok().map(|k| {
            k.pairs()
                .into_iter()
                .map(|(j, m)| (emb.to_ambient(j), emb.to_ambient(m)))
                .collect()
        });
        self.pairings.insert((u, v), p.clone());
        p
    }

    fn run(&mut self, u: usize, v: usize) -> Option<Arc<DismantlingCertificate>> {
        if let Some(c) = self.done.get(&(u, v)) {
            return c.clone();
        }
        let c = self.search(u, v).map(Arc::new);
        self.done.insert((u, v), c.clone());
        c
    }

    fn search(&mut self, u: usize, v: usize) -> Option<DismantlingCertificate> {
        if u == v {
            return Some(DismantlingCertificate::Leaf(u));
        }
        let l = self.l;
        let kappa = self.pairing(u, v)?;
        let (sub, emb) = l.interval(u, v).unwrap();
        let mut pairs: Vec<_> = prime_pairs(&sub)
            .into_iter()
            .map(|p| (emb.to_ambient(p.j0), emb.to_ambient(p.m0)))
            .collect();
        pairs.sort_unstable();
        for (j0, m0) in pairs {
            let Some(upper_kappa) = self.pairing(j0, v) else {
                continue;
            };
            let Some(lower_kappa) = self.pairing(u, m0) else {
                continue;
            };
            if !alpha_compatible(l, &kappa, &upper_kappa, j0)
                || !beta_compatible(l, &kappa, &lower_kappa, m0)
            {
                continue;
            }
            let Some(upper) = self.run(j0, v) else {
                continue;
            };
            let Some(lower) = self.run(u, m0) else {
                continue;
            };
            return Some(DismantlingCertificate::Split {
                j0,
                m0,
                lower,
                upper,
            });
        }
        None
    }
}

// α(j) = j0 ∨ j maps {j : j0 ≤ κ(j)} bijectively onto the join-irreducibles
// of [j0, v], carrying κ to the pairing of [j0, v].
fn alpha_compatible(
    l: &Lattice,
    kappa: &HashMap<usize, usize>,
    upper: &HashMap<usize, usize>,
    j0: usize,
) -> bool {
    let mut hit = 0;
    for (&j, &m) in kappa {
        if !l.leq(j0, m) {
            continue;
        }
        match upper.get(&l.join(j0, j)) {
            Some(&m2) if m2 == m => hit += 1,
            _ => return false,
        }
    }
    hit == upper.len()
}

// β(m) = m0 ∧ m maps {m : κ⁻¹(m) ≤ m0} bijectively onto the
// meet-irreducibles of [u, m0], carrying κ⁻¹ to the inverse pairing there.
fn beta_compatible(
    l: &Lattice,
    kappa: &HashMap<usize, usize>,
    lower: &HashMap<usize, usize>,
    m0: usize,
) -> bool {
    let inv: HashMap<usize, usize> = lower.iter().map(|(&j, &m)| (m, j)).collect();
    let mut hit = 0;
    for (&j, &m) in kappa {
        if !l.leq(j, m0) {
            continue;
        }
        match inv.get(&l.meet(m0, m)) {
            Some(&j2) if j2 == j => hit += 1,
            _ => return false,
        }
    }
    hit == inv.len()
}

/// Full recursive dismantling search, memoized on interval endpoints.
/// Prime pairs are tried in ascending `j0`.
pub fn dismantle(l: &Lattice) -> Option<Arc<DismantlingCertificate>> {
    let mut d = Dismantler {
        l,
        pairings: HashMap::new(),
        done: HashMap::new(),
    };
    d.run(l.bottom(), l.top())
}

/// Compatible dismantlability. Semidistributive and trim lattices are
/// accepted without a certificate.
pub fn compatibly_dismantlable(l: &Lattice) -> (bool, Option<Arc<DismantlingCertificate>>) {
    if is_semidistributive(l) || is_trim(l) {
        return (true, None);
    }
    let c = dismantle(l);
    (c.is_some(), c)
}

pub fn is_compatibly_dismantlable(l: &Lattice) -> bool {
    compatibly_dismantlable(l).0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemidistrimFailure {
    NotUniquelyPaired,
    NotCompatiblyDismantlable,
    /// An element whose downward or upward label set is not independent.
    DependentLabels(usize),
}

/// Label-set independence for an overlapping lattice.
fn labels_independent(l: &Lattice, kappa: &Pairing) -> std::result::Result<(), SemidistrimFailure> {
    let labels =
        EdgeLabeling::new(l, kappa).map_err(|_| SemidistrimFailure::NotCompatiblyDismantlable)?;
    let g = galois_graph(l, kappa);
    for x in 0..l.len() {
        if !g.is_independent(labels.down(x)) || !g.is_independent(labels.up(x)) {
            return Err(SemidistrimFailure::DependentLabels(x));
        }
    }
    Ok(())
}

pub fn semidistrim(l: &Lattice) -> Verdict<SemidistrimFailure> {
    if is_semidistributive(l) || is_trim(l) {
        return Verdict::yes();
    }
    let Ok(kappa) = unique_pairing(l) else {
        return Verdict::no(SemidistrimFailure::NotUniquelyPaired);
    };
    if dismantle(l).is_none() {
        return Verdict::no(SemidistrimFailure::NotCompatiblyDismantlable);
    }
    match labels_independent(l, &kappa) {
        Ok(()) => Verdict::yes(),
        Err(e) => Verdict::no(e),
    }
}

pub fn is_semidistrim(l: &Lattice) -> bool {
    semidistrim(l).holds
}

/// Interval `[u, v]` and an atom `a` of it such that the other atoms join to `v`.
pub fn crosscut_simpliciality(l: &Lattice) -> Verdict<(usize, usize, usize)> {
    // Joins are monotone, so a proper subset of atoms joins below v iff every
    // co-singleton subset does.
    for u in 0..l.len() {
        let ups = l.upper_covers(u);
        if ups.len() < 2 {
            continue;
        }
        for v in l.up_set(u).iter() {
            let atoms: Vec<usize> = ups.iter().copied().filter(|&a| l.leq(a, v)).collect();
            let k = atoms.len();
            if k < 2 {
                continue;
            }
            let mut prefix = vec![u; k + 1];
            for i in 0..k {
                prefix[i + 1] = l.join(prefix[i], atoms[i]);
            }
            let mut suffix = u;
            for i in (0..k).rev() {
                if l.join(prefix[i], suffix) == v {
                    return Verdict::no((u, v, atoms[i]));
                }
                suffix = l.join(suffix, atoms[i]);
            }
        }
    }
    Verdict::yes()
}

pub fn is_crosscut_simplicial(l: &Lattice) -> bool {
    crosscut_simpliciality(l).holds
}

pub const COMPLETE_PAIRING_LIMIT: usize = 2000;

/// Number of bijections `λ` with `λ(x) ∈ max{w : Pop↓(x) = x ∧ w}` and
/// `x ∈ min{w : Pop↑(λ(x)) = λ(x) ∨ w}`, stopping at `cap`.
pub fn complete_pairing_count(l: &Lattice, cap: usize) -> Result<usize> {
    let n = l.len();
    if n > COMPLETE_PAIRING_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "complete pairing".into(),
            limit: COMPLETE_PAIRING_LIMIT,
        });
    }
    let mut maxes = Vec::with_capacity(n);
    let mut mins = Vec::with_capacity(n);
    for x in 0..n {
        let pd = pop_down(l, x);
        let pu = pop_up(l, x);
        let lo = Bits::from_indices(n, (0..n).filter(|&w| l.meet(x, w) == pd));
        let hi = Bits::from_indices(n, (0..n).filter(|&w| l.join(x, w) == pu));
        maxes.push(Bits::from_indices(n, l.maxima_of(&lo)));
        mins.push(Bits::from_indices(n, l.minima_of(&hi)));
    }
    let graph: Vec<Bits> = (0..n)
        .map(|x| Bits::from_indices(n, maxes[x].iter().filter(|&z| mins[z].contains(x))))
        .collect();
    Ok(match matchings(&graph, n, cap) {
        Ok(ms) => ms.len(),
        Err(c) => c,
    })
}

pub fn is_completely_uniquely_paired(l: &Lattice) -> Result<bool> {
    Ok(complete_pairing_count(l, 2)? == 1)
}

/// Every predicate at once.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub size: usize,
    pub join_semidistributive: Verdict<(usize, usize, usize)>,
    pub meet_semidistributive: Verdict<(usize, usize, usize)>,
    pub semidistributive: bool,
    pub distributive: bool,
    pub extremal: bool,
    pub left_modular_count: Option<usize>,
    pub trim: bool,
    /// The pairing failure, if any.
    pub uniquely_paired: std::result::Result<(), Error>,
    pub overlapping: Verdict<OverlapFailure>,
    pub compatibly_dismantlable: bool,
    pub dismantling_pair: Option<(usize, usize)>,
    pub semidistrim: Verdict<SemidistrimFailure>,
    pub crosscut_simplicial: Verdict<(usize, usize, usize)>,
    /// `None` when the lattice is too large to test.
    pub completely_uniquely_paired: Option<bool>,
    pub join_primes: Vec<usize>,
    pub meet_primes: Vec<usize>,
}

/// Left modular elements are only listed up to this size.
pub const LEFT_MODULAR_LIMIT: usize = 500;

pub fn classify(l: &Lattice) -> ClassificationReport {
    let jsd = join_semidistributivity(l);
    let msd = meet_semidistributivity(l);
    let semidistributive = jsd.holds && msd.holds;
    let trim = is_trim(l);
    let (cd, cert) = compatibly_dismantlable(l);
    let dismantling_pair = match &cert {
        Some(c) => c.pair(),
        None if cd && l.len() > 1 => dismantle(l).and_then(|c| c.pair()),
        None => None,
    };
    ClassificationReport {
        size: l.len(),
        semidistributive,
        distributive: is_distributive(l),
        extremal: is_extremal(l),
        left_modular_count: (l.len() <= LEFT_MODULAR_LIMIT).then(|| left_modular_elements(l).len()),
        trim,
        uniquely_paired: unique_pairing(l).map(|_| ()),
        overlapping: overlapping(l),
        compatibly_dismantlable: cd,
        dismantling_pair,
        semidistrim: semidistrim(l),
        crosscut_simplicial: crosscut_simpliciality(l),
        completely_uniquely_paired: is_completely_uniquely_paired(l).ok(),
        join_primes: crate::pairing::join_primes(l),
        meet_primes: crate::pairing::meet_primes(l),
        join_semidistributive: jsd,
        meet_semidistributive: msd,
    }
}
