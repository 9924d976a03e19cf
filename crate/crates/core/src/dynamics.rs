//! Edge labels, rowmotion, pop-stack sorting and related operators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::bits::Bits;
use crate::classify;
use crate::error::{Error, Result};
use crate::galois::{galois_graph, maximal_independent_sets, GaloisGraph};
use crate::lattice::{IntervalEmbedding, Lattice};
use crate::pairing::{unique_pairing, Pairing};
use crate::poset::Poset;

/// For each element `x`: which join-irreducibles lie below it, and which
/// have `κ(j) ≥ x`. Sets are over positions in [`Pairing::joins`].
#[derive(Clone, Debug)]
pub struct IrreducibleSets {
    pub below: Vec<Bits>,
    pub kappa_above: Vec<Bits>,
}

impl IrreducibleSets {
    pub fn new(l: &Lattice, kappa: &Pairing) -> IrreducibleSets {
        let k = kappa.len();
        let p = l.poset();
        let mut below = vec![Bits::new(k); l.len()];
        let mut kappa_above = vec![Bits::new(k); l.len()];
        for (a, &j) in kappa.joins().iter().enumerate() {
            for q in p.up[j].iter() {
                below[p.order[q]].insert(a);
            }
            for q in p.down[kappa.kappa_at(a)].iter() {
                kappa_above[p.order[q]].insert(a);
            }
        }
        IrreducibleSets { below, kappa_above }
    }
}

/// The labelling `x ⋖ y ↦ j_xy` of an overlapping lattice.
#[derive(Clone, Debug)]
pub struct EdgeLabeling {
    covers: Vec<(usize, usize)>,
    /// Label of `covers[i]`, as a position in [`Pairing::joins`].
    labels: Vec<usize>,
    down: Vec<Bits>,
    up: Vec<Bits>,
    sets: IrreducibleSets,
    joins: Vec<usize>,
}

impl EdgeLabeling {
    pub fn new(l: &Lattice, kappa: &Pairing) -> Result<EdgeLabeling> {
        let sets = IrreducibleSets::new(l, kappa);
        let k = kappa.len();
        let covers = l.covers().to_vec();
        let mut labels = Vec::with_capacity(covers.len());
        let mut down = vec![Bits::new(k); l.len()];
        let mut up = vec![Bits::new(k); l.len()];
        for &(x, y) in &covers {
            let cand = sets.below[y].and(&sets.kappa_above[x]);
            if cand.count() != 1 {
                return Err(Error::NotOverlapping {
                    x,
                    y,
                    count: cand.count(),
                });
            }
            let a = cand.first().unwrap();
            labels.push(a);
            up[x].insert(a);
            down[y].insert(a);
        }
        Ok(EdgeLabeling {
            covers,
            labels,
            down,
            up,
            sets,
            joins: kappa.joins().to_vec(),
        })
    }

    /// Label of the cover `x ⋖ y` as a lattice element.
    pub fn label(&self, x: usize, y: usize) -> Option<usize> {
        self.label_pos(x, y).map(|a| self.joins[a])
    }

    /// Label of the cover `x ⋖ y` as a vertex position.
    pub fn label_pos(&self, x: usize, y: usize) -> Option<usize> {
        self.covers
            .binary_search(&(x, y))
            .ok()
            .map(|i| self.labels[i])
    }

    /// `𝓓(x)`: labels of covers below `x`.
    pub fn down(&self, x: usize) -> &Bits {
        &self.down[x]
    }

    /// `𝓤(x)`: labels of covers above `x`.
    pub fn up(&self, x: usize) -> &Bits {
        &self.up[x]
    }

    pub fn sets(&self) -> &IrreducibleSets {
        &self.sets
    }

    /// Maps a vertex set to lattice elements.
    pub fn elements(&self, s: &Bits) -> Vec<usize> {
        s.iter().map(|a| self.joins[a]).collect()
    }
}

pub fn edge_labeling(l: &Lattice) -> Result<EdgeLabeling> {
    let kappa = unique_pairing(l)?;
    EdgeLabeling::new(l, &kappa)
}

/// `x ∧ ⋀{y : y ⋖ x}`.
pub fn pop_down(l: &Lattice, x: usize) -> usize {
    l.lower_covers(x).iter().fold(x, |a, &y| l.meet(a, y))
}

/// `x ∨ ⋁{y : x ⋖ y}`.
pub fn pop_up(l: &Lattice, x: usize) -> usize {
    l.upper_covers(x).iter().fold(x, |a, &y| l.join(a, y))
}

/// The interval `[Pop↓(b), b]`.
pub fn face(l: &Lattice, b: usize) -> (Lattice, IntervalEmbedding) {
    l.interval(pop_down(l, b), b).expect("Pop↓(b) ≤ b")
}

/// `{j ≤ b} ∩ {j : κ(j) ≥ Pop↓(b)}`, as vertex positions.
pub fn shard_pop(l: &Lattice, kappa: &Pairing, b: usize) -> Bits {
    let pd = pop_down(l, b);
    let mut s = Bits::new(kappa.len());
    for (a, &j) in kappa.joins().iter().enumerate() {
        if l.leq(j, b) && l.leq(pd, kappa.kappa_at(a)) {
            s.insert(a);
        }
    }
    s
}

/// `Pop(L; q)` as degree → coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PopPolynomial {
    pub coeffs: BTreeMap<usize, u64>,
}

impl PopPolynomial {
    pub fn from_coeffs(pairs: &[(usize, u64)]) -> PopPolynomial {
        let mut coeffs = BTreeMap::new();
        for &(d, c) in pairs {
            if c != 0 {
                *coeffs.entry(d).or_insert(0) += c;
            }
        }
        PopPolynomial { coeffs }
    }

    pub fn add_term(&mut self, degree: usize) {
        *self.coeffs.entry(degree).or_insert(0) += 1;
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Dense coefficient list, index = degree.
    pub fn dense(&self) -> Vec<u64> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        (0..=d)
            .map(|i| self.coeffs.get(&i).copied().unwrap_or(0))
            .collect()
    }
}

/// Highest degree first, e.g. `q^4 + 22q^3 + 26q^2`.
impl fmt::Display for PopPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, &c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c == 1 && d > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coef}q")?,
                _ => write!(f, "{coef}q^{d}")?,
            }
        }
        Ok(())
    }
}

/// Parses sums of terms `c`, `cq` and `cq^d`, in any order.
impl std::str::FromStr for PopPolynomial {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<PopPolynomial, String> {
        let mut p = PopPolynomial::default();
        if s.trim() == "0" {
            return Ok(p);
        }
        for term in s.split('+').map(str::trim) {
            let bad = || format!("bad term {term:?}");
            let (coef, degree) = match term.split_once('q') {
                None => (term, "0"),
                Some((c, "")) => (c, "1"),
                Some((c, d)) => (c, d.strip_prefix('^').ok_or_else(bad)?),
            };
            let c: u64 = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| bad())?
            };
            let d: usize = degree.parse().map_err(|_| bad())?;
            if c > 0 {
                *p.coeffs.entry(d).or_insert(0) += c;
            }
        }
        Ok(p)
    }
}

/// Orbit structure of a self-map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitDecomposition {
    /// The map is a bijection; cycles sorted by least element, each
    /// starting there.
    Cycles(Vec<Vec<usize>>),
    /// The map is not injective.
    Functional {
        image_size: usize,
        /// preimage count → number of elements with that many preimages
        preimage_histogram: BTreeMap<usize, usize>,
        /// Cycles of periodic points, normalized as above.
        cycles: Vec<Vec<usize>>,
    },
}

impl OrbitDecomposition {
    pub fn of_map(f: &[usize]) -> OrbitDecomposition {
        let n = f.len();
        let mut pre = vec![0usize; n];
        for &y in f {
            pre[y] += 1;
        }
        // Periodic points: iterate n times from everywhere.
        let mut periodic = vec![false; n];
        for x in 0..n {
            let mut y = x;
            for _ in 0..n {
                y = f[y];
            }
            periodic[y] = true;
        }
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for x in 0..n {
            if !periodic[x] || seen[x] {
                continue;
            }
            let mut cyc = vec![x];
            seen[x] = true;
            let mut y = f[x];
            while y != x {
                seen[y] = true;
                cyc.push(y);
                y = f[y];
            }
            cycles.push(cyc);
        }
        if pre.iter().all(|&c| c == 1) {
            return OrbitDecomposition::Cycles(cycles);
        }
        let mut preimage_histogram = BTreeMap::new();
        for &c in &pre {
            *preimage_histogram.entry(c).or_insert(0) += 1;
        }
        OrbitDecomposition::Functional {
            image_size: pre.iter().filter(|&&c| c > 0).count(),
            preimage_histogram,
            cycles,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    Row,
    RowMeetSd,
    PopDown,
    PopUp,
}

/// Orbits of one of the operators on `l`.
pub fn orbits(l: &Lattice, op: Operator) -> Result<OrbitDecomposition> {
    let f: Vec<usize> = match op {
        Operator::Row => {
            let s = Semidistrim::new(l)?;
            (0..l.len()).map(|x| s.row(x)).collect()
        }
        Operator::RowMeetSd => {
            let r = MeetSdRowmotion::new(l)?;
            (0..l.len()).map(|x| r.apply(x)).collect::<Result<_>>()?
        }
        Operator::PopDown => (0..l.len()).map(|x| pop_down(l, x)).collect(),
        Operator::PopUp => (0..l.len()).map(|x| pop_up(l, x)).collect(),
    };
    Ok(OrbitDecomposition::of_map(&f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShardVariant {
    Pop,
    Row,
}

/// Containment preorder on shard sets.
#[derive(Clone, Debug)]
pub struct CoreLabelReport {
    /// `shards[x]` as vertex positions.
    pub shards: Vec<Bits>,
    /// Elements grouped by equal shard set, groups sorted by least element.
    pub classes: Vec<Vec<usize>>,
    /// `leq[c]` holds the classes `d` with `shard(d) ⊆ shard(c)`.
    pub leq: Vec<Bits>,
    /// Whether `x ↦ shard(x)` is injective, i.e. the preorder is an order.
    pub antisymmetric: bool,
    /// Whether the quotient order has all pairwise meets.
    pub meet_semilattice: bool,
}

/// A semidistrim lattice with its pairing, labels and Galois graph.
#[derive(Clone, Debug)]
pub struct Semidistrim<'a> {
    pub lattice: &'a Lattice,
    pub pairing: Pairing,
    pub labels: EdgeLabeling,
    pub graph: GaloisGraph,
    by_down: HashMap<Bits, usize>,
}

impl<'a> Semidistrim<'a> {
    /// Checks semidistrimness first.
    pub fn new(l: &'a Lattice) -> Result<Semidistrim<'a>> {
        if !classify::is_semidistrim(l) {
            return Err(Error::NotSemidistrim);
        }
        Semidistrim::assume(l)
    }

    /// Skips the semidistrim check; only requires an overlapping, uniquely
    /// paired lattice. Operators are meaningless otherwise.
    pub fn assume(l: &'a Lattice) -> Result<Semidistrim<'a>> {
        let pairing = unique_pairing(l)?;
        let labels = EdgeLabeling::new(l, &pairing)?;
        let graph = galois_graph(l, &pairing);
        let by_down = (0..l.len()).map(|x| (labels.down(x).clone(), x)).collect();
        Ok(Semidistrim {
            lattice: l,
            pairing,
            labels,
            graph,
            by_down,
        })
    }

    pub fn down(&self, x: usize) -> &Bits {
        self.labels.down(x)
    }

    pub fn up(&self, x: usize) -> &Bits {
        self.labels.up(x)
    }

    /// `⋀ κ(𝓓(x))`.
    pub fn row(&self, x: usize) -> usize {
        let l = self.lattice;
        let r = l.meet_all(self.down(x).iter().map(|a| self.pairing.kappa_at(a)));
        debug_assert_eq!(self.up(r), self.down(x));
        r
    }

    /// `⋁ 𝓤(x)`.
    pub fn row_inv(&self, x: usize) -> usize {
        let js = self.pairing.joins();
        self.lattice.join_all(self.up(x).iter().map(|a| js[a]))
    }

    /// The element whose downward label set is `s`, if any.
    pub fn element_with_down(&self, s: &Bits) -> Option<usize> {
        self.by_down.get(s).copied()
    }

    /// All popping pairs `(x, y)`, sorted, computed three ways.
    pub fn popping_pairs(&self) -> Result<Vec<(usize, usize)>> {
        let l = self.lattice;
        let n = l.len();
        let mut by_pop: Vec<_> = (0..n)
            .map(|x| (x, pop_up(l, x)))
            .filter(|&(x, y)| pop_down(l, y) == x)
            .collect();
        let mut by_labels: Vec<_> = (0..n)
            .filter_map(|x| {
                let y = self.element_with_down(self.up(x))?;
                l.leq(x, y).then_some((x, y))
            })
            .collect();
        let mut by_row: Vec<_> = (0..n)
            .map(|y| (self.row(y), y))
            .filter(|&(x, y)| l.leq(x, y))
            .collect();
        by_pop.sort_unstable();
        by_labels.sort_unstable();
        by_row.sort_unstable();
        if by_pop != by_labels || by_pop != by_row {
            return Err(Error::InternalMismatch(
                "popping pair characterizations disagree".into(),
            ));
        }
        Ok(by_pop)
    }

    /// `Pop(L; q)` from the image of `Pop↓`, checked against the image of `Pop↑`.
    pub fn pop_polynomial(&self) -> Result<PopPolynomial> {
        let l = self.lattice;
        let n = l.len();
        let mut seen_down = vec![false; n];
        let mut seen_up = vec![false; n];
        for x in 0..n {
            seen_down[pop_down(l, x)] = true;
            seen_up[pop_up(l, x)] = true;
        }
        let mut a = PopPolynomial::default();
        let mut b = PopPolynomial::default();
        for x in 0..n {
            if seen_down[x] {
                a.add_term(self.up(x).count());
            }
            if seen_up[x] {
                b.add_term(self.down(x).count());
            }
        }
        if a != b {
            return Err(Error::InternalMismatch(format!(
                "Pop polynomial from Pop↓ image ({a}) differs from Pop↑ image ({b})"
            )));
        }
        Ok(a)
    }

    /// `{j ≤ b} ∩ {j : κ(j) ≥ Row(b)}`.
    pub fn shard_row(&self, b: usize) -> Bits {
        let r = self.row(b);
        let s = self.labels.sets();
        s.below[b].and(&s.kappa_above[r])
    }

    pub fn shard_pop(&self, b: usize) -> Bits {
        let pd = pop_down(self.lattice, b);
        let s = self.labels.sets();
        s.below[b].and(&s.kappa_above[pd])
    }

    /// Maximal independent sets of the undirected Galois graph.
    pub fn independent_dominating_sets(&self) -> Vec<Bits> {
        maximal_independent_sets(&self.graph)
    }

    pub fn core_label_preorder(&self, variant: ShardVariant) -> CoreLabelReport {
        let n = self.lattice.len();
        let shards: Vec<Bits> = (0..n)
            .map(|b| match variant {
                ShardVariant::Pop => self.shard_pop(b),
                ShardVariant::Row => self.shard_row(b),
            })
            .collect();
        core_report(shards)
    }
}

fn core_report(shards: Vec<Bits>) -> CoreLabelReport {
    let mut class_of: HashMap<&Bits, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (x, s) in shards.iter().enumerate() {
        let c = *class_of.entry(s).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(x);
    }
    let k = classes.len();
    let rep: Vec<&Bits> = classes.iter().map(|c| &shards[c[0]]).collect();
    let leq: Vec<Bits> = (0..k)
        .map(|c| Bits::from_indices(k, (0..k).filter(|&d| rep[d].is_subset(rep[c]))))
        .collect();
    let mut meet_semilattice = true;
    'outer: for c in 0..k {
        for d in c + 1..k {
            let common = leq[c].and(&leq[d]);
            if !common.iter().any(|g| common.is_subset(&leq[g])) {
                meet_semilattice = false;
                break 'outer;
            }
        }
    }
    CoreLabelReport {
        antisymmetric: k == shards.len(),
        shards,
        classes,
        leq,
        meet_semilattice,
    }
}

/// Rowmotion on a meet-semidistributive lattice: the greatest `z` with
/// `Pop↓(x) = x ∧ z`.
pub struct MeetSdRowmotion<'a> {
    lattice: &'a Lattice,
}

impl<'a> MeetSdRowmotion<'a> {
    pub fn new(l: &'a Lattice) -> Result<MeetSdRowmotion<'a>> {
        if !classify::is_meet_semidistributive(l) {
            return Err(Error::NotMeetSemidistributive);
        }
        Ok(MeetSdRowmotion { lattice: l })
    }

    pub fn apply(&self, x: usize) -> Result<usize> {
        let l = self.lattice;
        let p = pop_down(l, x);
        let set = Bits::from_indices(l.len(), (0..l.len()).filter(|&z| l.meet(x, z) == p));
        match l.maxima_of(&set).as_slice() {
            [z] => Ok(*z),
            many => Err(Error::MultipleMaximal {
                x,
                maxima: many.to_vec(),
            }),
        }
    }
}

/// Row on a semidistrim lattice, building the context on each call.
pub fn rowmotion(l: &Lattice, x: usize) -> Result<usize> {
    Ok(Semidistrim::new(l)?.row(x))
}

pub fn rowmotion_inverse(l: &Lattice, x: usize) -> Result<usize> {
    Ok(Semidistrim::new(l)?.row_inv(x))
}

pub fn pop_polynomial(l: &Lattice) -> Result<PopPolynomial> {
    Semidistrim::new(l)?.pop_polynomial()
}

/// Classical rowmotion on order ideals: the down-closure of the minimal
/// elements outside `ideal`.
pub fn classical_ideal_rowmotion(p: &Poset, ideal: &Bits) -> Result<Bits> {
    if !p.is_down_set(ideal) {
        return Err(Error::NotADownSet);
    }
    let rest = ideal.complement();
    let mut out = Bits::new(p.len());
    for x in p.minima_of(&rest) {
        out.union_with(&p.down_set(x));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: usize, covers: &[(usize, usize)]) -> Lattice {
        Lattice::from_covers(n, covers).unwrap()
    }

    // e=0, s=1, t=2, st=3, ts=4, sts=5
    fn hexagon() -> Lattice {
        l(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)])
    }

    fn diamond() -> Lattice {
        l(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
    }

    fn chain(k: usize) -> Lattice {
        let c: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        l(k, &c)
    }

    #[test]
    fn hexagon_labels_and_row() {
        let h = hexagon();
        let s = Semidistrim::new(&h).unwrap();
        assert_eq!(s.labels.elements(s.down(5)), vec![1, 2]);
        assert_eq!(s.labels.elements(s.up(0)), vec![1, 2]);
        assert_eq!(s.row(5), 0);
        assert_eq!(pop_down(&h, 5), 0);
        assert_eq!(s.popping_pairs().unwrap().len(), 3);
        assert_eq!(s.pop_polynomial().unwrap().to_string(), "q^2 + 2q");
        let (f, _) = face(&h, 5);
        assert_eq!(f.len(), 6);
    }

    #[test]
    fn diamond_row() {
        let d = diamond();
        let s = Semidistrim::new(&d).unwrap();
        assert_eq!(s.labels.elements(s.up(1)), vec![2]);
        assert_eq!(s.labels.elements(s.down(1)), vec![1]);
        assert_eq!(s.row(1), 2);
        assert_eq!(s.row(0), 3);
        assert_eq!(s.popping_pairs().unwrap(), vec![(0, 3)]);
        assert_eq!(
            orbits(&d, Operator::Row).unwrap(),
            OrbitDecomposition::Cycles(vec![vec![0, 3], vec![1, 2]])
        );
        assert_eq!(s.shard_pop(3).to_vec(), vec![0, 1]);
        let core = s.core_label_preorder(ShardVariant::Pop);
        assert!(core.antisymmetric && core.meet_semilattice);
    }

    #[test]
    fn chain_row_is_a_cycle() {
        let c = chain(3);
        assert_eq!(
            orbits(&c, Operator::Row).unwrap(),
            OrbitDecomposition::Cycles(vec![vec![0, 2, 1]])
        );
        let s = Semidistrim::new(&c).unwrap();
        assert_eq!(s.popping_pairs().unwrap(), vec![(0, 1), (1, 2)]);
        let r = MeetSdRowmotion::new(&c).unwrap();
        for x in 0..3 {
            assert_eq!(r.apply(x).unwrap(), s.row(x));
        }
    }

    #[test]
    fn polynomial_display() {
        let p = PopPolynomial::from_coeffs(&[(4, 1), (3, 22), (2, 26)]);
        assert_eq!(p.to_string(), "q^4 + 22q^3 + 26q^2");
        assert_eq!(p.dense(), vec![0, 0, 26, 22, 1]);
        assert_eq!(p.at_one(), 49);
        assert_eq!(PopPolynomial::from_coeffs(&[(0, 1)]).to_string(), "1");
    }

    #[test]
    fn polynomial_parse() {
        for s in ["q^4 + 22q^3 + 26q^2", "q", "q^2 + 2q + 1", "0"] {
            assert_eq!(s.parse::<PopPolynomial>().unwrap().to_string(), s);
        }
        assert!("q^ + 1".parse::<PopPolynomial>().is_err());
        assert!("2x".parse::<PopPolynomial>().is_err());
    }

    #[test]
    fn ideal_rowmotion_oracle() {
        let anti = Poset::from_covers(2, &[]).unwrap();
        assert_eq!(
            classical_ideal_rowmotion(&anti, &Bits::new(2)).unwrap(),
            Bits::full(2)
        );
        assert_eq!(
            classical_ideal_rowmotion(&anti, &Bits::full(2)).unwrap(),
            Bits::new(2)
        );
        let ch = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        let i1 = Bits::from_indices(3, [0]);
        assert_eq!(
            classical_ideal_rowmotion(&ch, &i1).unwrap(),
            Bits::from_indices(3, [0, 1])
        );
        assert_eq!(
            classical_ideal_rowmotion(&ch, &Bits::from_indices(3, [1])),
            Err(Error::NotADownSet)
        );
    }

    #[test]
    fn functional_graph_summary() {
        let d = OrbitDecomposition::of_map(&[0, 0, 1]);
        match d {
            OrbitDecomposition::Functional {
                image_size, cycles, ..
            } => {
                assert_eq!(image_size, 2);
                assert_eq!(cycles, vec![vec![0]]);
            }
            _ => panic!("not a bijection"),
        }
    }
}
