//! Property checks run against a single lattice.
//!
//! Every check returns a [`Check`] whose outcome is pass, fail with a
//! witness, or skipped with a reason. Checks that only make sense for
//! semidistrim lattices are skipped with the reason "not semidistrim".

use latticelab::classify;
use latticelab::dynamics::{pop_down, pop_up, MeetSdRowmotion, ShardVariant};
use latticelab::galois::{count_independent_sets, galois_graph, is_tight_orthogonal_pair};
use latticelab::pairing::{join_primes, unique_pairing};
use latticelab::{Bits, Lattice, Semidistrim};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub outcome: Outcome,
}

impl Check {
    fn from_result(id: &'static str, r: Result<(), String>) -> Check {
        Check {
            id,
            outcome: match r {
                Ok(()) => Outcome::Pass,
                Err(w) => Outcome::Fail(w),
            },
        }
    }

    fn skip(id: &'static str, why: &str) -> Check {
        Check {
            id,
            outcome: Outcome::Skip(why.to_string()),
        }
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }
}

/// Size caps for the expensive checks.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// All intervals are examined up to this size.
    pub intervals: usize,
    pub crosscut: usize,
    pub dual: usize,
    /// Cap for tight-pair and independent-set enumeration.
    pub cap: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            intervals: 200,
            crosscut: 2000,
            dual: 2000,
            cap: 100_000,
        }
    }
}

/// Ids of the checks that need a semidistrim lattice, in run order.
pub const SEMIDISTRIM_CHECKS: &[&str] = &[
    "labels_determine_elements",
    "label_sets_biject_onto_independent_sets",
    "label_pairs_tight",
    "rowmotion_identities",
    "rowmotion_maximal",
    "pop_label_containment",
    "below_rowmotion",
    "popping_pairs",
    "pop_stabilizes",
    "pop_image_equality",
    "rowmotion_down_iff_dominating",
    "crosscut_simplicial",
    "faces_join_primes",
    "shard_sets",
    "meet_sd_rowmotion_agrees",
    "intervals",
];

fn fmt_set(l: &Lattice, js: &[usize], s: &Bits) -> String {
    let names: Vec<&str> = s.iter().map(|a| l.name(js[a])).collect();
    format!("{{{}}}", names.join(","))
}

/// Runs every check that applies to `l`.
pub fn lattice_checks(l: &Lattice, limits: Limits) -> Vec<Check> {
    let mut out = class_checks(l, limits);
    if classify::is_semidistrim(l) {
        let s = match Semidistrim::assume(l) {
            Ok(s) => s,
            Err(e) => {
                out.push(Check::from_result(
                    "semidistrim_context",
                    Err(e.to_string()),
                ));
                return out;
            }
        };
        out.extend(semidistrim_checks(&s, limits));
    } else {
        out.extend(
            SEMIDISTRIM_CHECKS
                .iter()
                .map(|id| Check::skip(id, "not semidistrim")),
        );
    }
    out
}

/// Implications between the lattice classes.
pub fn class_checks(l: &Lattice, limits: Limits) -> Vec<Check> {
    let jsd = classify::is_join_semidistributive(l);
    let msd = classify::is_meet_semidistributive(l);
    let sd = jsd && msd;
    let extremal = classify::is_extremal(l);
    let trim = classify::is_trim(l);
    let paired = unique_pairing(l);
    let overlapping = classify::overlapping(l).holds;
    let cd = classify::is_compatibly_dismantlable(l);
    let sdt = classify::semidistrim(l);
    let mut out = Vec::new();
    let implies = |a: bool, b: bool, what: &str| {
        if !a || b {
            Ok(())
        } else {
            Err(what.to_string())
        }
    };
    out.push(Check::from_result(
        "class_implications",
        implies(
            classify::is_distributive(l),
            sd,
            "distributive but not semidistributive",
        )
        .and(implies(
            sd,
            sdt.holds,
            "semidistributive but not semidistrim",
        ))
        .and(implies(trim, sdt.holds, "trim but not semidistrim"))
        .and(implies(
            sdt.holds,
            cd,
            "semidistrim but not compatibly dismantlable",
        ))
        .and(implies(
            cd,
            overlapping,
            "compatibly dismantlable but not overlapping",
        ))
        .and(implies(
            overlapping,
            paired.is_ok(),
            "overlapping but not uniquely paired",
        ))
        .and(implies(
            extremal,
            paired.is_ok(),
            "extremal but not uniquely paired",
        ))
        .and(implies(
            extremal && sd,
            trim,
            "extremal semidistributive but not trim",
        ))
        .and(implies(
            extremal && overlapping,
            trim,
            "extremal overlapping but not trim",
        ))
        .and(implies(
            msd && sdt.holds,
            sd,
            "meet-semidistributive semidistrim but not semidistributive",
        )),
    ));
    if let Ok(kappa) = &paired {
        // Each prime pair is paired by κ.
        let bad = classify_prime_pairs(l, kappa);
        out.push(Check::from_result("prime_pairs_paired", bad));
    }
    out.push(Check::from_result(
        "meet_sd_iff_singleton_witnesses",
        meet_sd_singletons(l, msd),
    ));
    if l.len() <= limits.dual {
        let dual = l.dual();
        let r = if classify::is_semidistrim(&dual) == sdt.holds {
            Ok(())
        } else {
            Err(format!("semidistrim {} but dual {}", sdt.holds, !sdt.holds))
        };
        out.push(Check::from_result("dual_semidistrim", r));
    } else {
        out.push(Check::skip("dual_semidistrim", "size limit"));
    }
    out
}

fn classify_prime_pairs(l: &Lattice, kappa: &latticelab::Pairing) -> Result<(), String> {
    for p in latticelab::pairing::prime_pairs(l) {
        if kappa.kappa(p.j0) != p.m0 {
            return Err(format!(
                "prime pair ({}, {}) not paired",
                l.name(p.j0),
                l.name(p.m0)
            ));
        }
    }
    Ok(())
}

/// Meet-semidistributive iff every join-irreducible has one maximal meet witness.
fn meet_sd_singletons(l: &Lattice, msd: bool) -> Result<(), String> {
    let all_single = l
        .join_irreducibles()
        .into_iter()
        .all(|j| latticelab::pairing::max_meet_witnesses(l, j).is_ok_and(|w| w.len() == 1));
    if all_single == msd {
        Ok(())
    } else {
        Err(format!(
            "meet-semidistributive {msd}, singleton witnesses {all_single}"
        ))
    }
}

pub fn semidistrim_checks(s: &Semidistrim<'_>, limits: Limits) -> Vec<Check> {
    let l = s.lattice;
    let mut out = vec![
        Check::from_result("labels_determine_elements", labels_determine_elements(s)),
        Check::from_result(
            "label_sets_biject_onto_independent_sets",
            label_bijection(s, limits.cap),
        ),
        Check::from_result("label_pairs_tight", label_pairs_tight(s)),
        Check::from_result("rowmotion_identities", rowmotion_identities(s)),
    ];
    out.push(Check::from_result(
        "rowmotion_maximal",
        rowmotion_maximal(s),
    ));
    out.push(Check::from_result(
        "pop_label_containment",
        pop_label_containment(s),
    ));
    out.push(Check::from_result("below_rowmotion", below_rowmotion(s)));
    out.push(Check::from_result(
        "popping_pairs",
        s.popping_pairs().map(|_| ()).map_err(|e| e.to_string()),
    ));
    out.push(Check::from_result("pop_stabilizes", pop_stabilizes(s)));
    out.push(Check::from_result(
        "pop_image_equality",
        pop_image_equality(s),
    ));
    out.push(Check::from_result(
        "rowmotion_down_iff_dominating",
        down_iff_dominating(s),
    ));
    out.push(if l.len() <= limits.crosscut {
        let v = classify::crosscut_simpliciality(l);
        Check::from_result(
            "crosscut_simplicial",
            match v.witness {
                None => Ok(()),
                Some((u, v, a)) => Err(format!(
                    "atoms of [{}, {}] minus {} join to the top",
                    l.name(u),
                    l.name(v),
                    l.name(a)
                )),
            },
        )
    } else {
        Check::skip("crosscut_simplicial", "size limit")
    });
    out.push(Check::from_result(
        "faces_join_primes",
        faces_join_primes(s),
    ));
    out.push(Check::from_result("shard_sets", shard_sets(s)));
    out.push(if classify::is_meet_semidistributive(l) {
        Check::from_result("meet_sd_rowmotion_agrees", meet_sd_agrees(s))
    } else {
        Check::skip("meet_sd_rowmotion_agrees", "not meet-semidistributive")
    });
    out.push(if l.len() <= limits.intervals {
        Check::from_result("intervals", intervals(s))
    } else {
        Check::skip("intervals", "size limit")
    });
    out
}

/// `x = ⋁𝓓(x) = ⋀κ(𝓤(x))`, so both label maps are injective.
fn labels_determine_elements(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    let js = s.pairing.joins();
    for x in 0..l.len() {
        let j = l.join_all(s.down(x).iter().map(|a| js[a]));
        let m = l.meet_all(s.up(x).iter().map(|a| s.pairing.kappa_at(a)));
        if j != x || m != x {
            return Err(format!(
                "{}: join of D is {}, meet of κ(U) is {}",
                l.name(x),
                l.name(j),
                l.name(m)
            ));
        }
    }
    Ok(())
}

/// `𝓓` and `𝓤` are bijections onto the independent sets of the Galois graph.
fn label_bijection(s: &Semidistrim<'_>, cap: usize) -> Result<(), String> {
    let l = s.lattice;
    let n = l.len();
    let count = count_independent_sets(&s.graph, cap.max(n + 1)).map_err(|e| e.to_string())?;
    if count != n {
        return Err(format!("{count} independent sets for {n} elements"));
    }
    let mut downs = std::collections::HashSet::new();
    let mut ups = std::collections::HashSet::new();
    for x in 0..n {
        if !s.graph.is_independent(s.down(x)) || !s.graph.is_independent(s.up(x)) {
            return Err(format!("label set of {} is not independent", l.name(x)));
        }
        if !downs.insert(s.down(x).clone()) || !ups.insert(s.up(x).clone()) {
            return Err(format!("label sets of {} repeat", l.name(x)));
        }
    }
    Ok(())
}

fn label_pairs_tight(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    for x in 0..l.len() {
        if !is_tight_orthogonal_pair(&s.graph, s.down(x), s.up(x)) {
            let js = s.pairing.joins();
            return Err(format!(
                "({}, {}) at {} is not tight",
                fmt_set(l, js, s.down(x)),
                fmt_set(l, js, s.up(x)),
                l.name(x)
            ));
        }
    }
    Ok(())
}

/// `Row = ⋀κ(𝓓)`, `Row⁻¹ = ⋁𝓤`, `Pop↓(x) = x ∧ Row(x)`, `Pop↑(x) = x ∨ Row⁻¹(x)`.
fn rowmotion_identities(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    for x in 0..l.len() {
        let r = s.row(x);
        if s.up(r) != s.down(x) {
            return Err(format!("U(Row({0})) ≠ D({0})", l.name(x)));
        }
        if s.row_inv(r) != x {
            return Err(format!("Row⁻¹(Row({0})) ≠ {0}", l.name(x)));
        }
        if pop_down(l, x) != l.meet(x, r) {
            return Err(format!("Pop↓({0}) ≠ {0} ∧ Row({0})", l.name(x)));
        }
        if pop_up(l, x) != l.join(x, s.row_inv(x)) {
            return Err(format!("Pop↑({0}) ≠ {0} ∨ Row⁻¹({0})", l.name(x)));
        }
    }
    Ok(())
}

/// `Row(x)` is maximal in `{z : Pop↓(x) = x ∧ z}`, and dually for `Row⁻¹`.
/// The fibre is convex above `Row(x)`, so upper covers suffice.
fn rowmotion_maximal(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    for x in 0..l.len() {
        let r = s.row(x);
        let pd = pop_down(l, x);
        if let Some(&y) = l.upper_covers(r).iter().find(|&&y| l.meet(x, y) == pd) {
            return Err(format!(
                "Row({}) = {} is below {} in the same fibre",
                l.name(x),
                l.name(r),
                l.name(y)
            ));
        }
        let ri = s.row_inv(x);
        let pu = pop_up(l, x);
        if let Some(&y) = l.lower_covers(ri).iter().find(|&&y| l.join(x, y) == pu) {
            return Err(format!(
                "Row⁻¹({}) = {} is above {} in the same fibre",
                l.name(x),
                l.name(ri),
                l.name(y)
            ));
        }
    }
    Ok(())
}

/// `𝓓(x) ⊆ 𝓤(Pop↓(x))` and `𝓤(x) ⊆ 𝓓(Pop↑(x))`.
fn pop_label_containment(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    for x in 0..l.len() {
        if !s.down(x).is_subset(s.up(pop_down(l, x))) {
            return Err(format!("D({0}) ⊄ U(Pop↓({0}))", l.name(x)));
        }
        if !s.up(x).is_subset(s.down(pop_up(l, x))) {
            return Err(format!("U({0}) ⊄ D(Pop↑({0}))", l.name(x)));
        }
    }
    Ok(())
}

/// Labels in `𝓤(Pop↓(x)) ∖ 𝓓(x)` lie below `Row(x)`.
fn below_rowmotion(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    let js = s.pairing.joins();
    for x in 0..l.len() {
        let r = s.row(x);
        for a in s.up(pop_down(l, x)).minus(s.down(x)).iter() {
            if !l.leq(js[a], r) {
                return Err(format!("{} ≰ Row({})", l.name(js[a]), l.name(x)));
            }
        }
    }
    Ok(())
}

/// Alternating `Pop↓` and `Pop↑` is constant after the first round.
fn pop_stabilizes(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    for z in 0..l.len() {
        let x1 = pop_down(l, z);
        let y1 = pop_up(l, x1);
        let x2 = pop_down(l, y1);
        let y2 = pop_up(l, x2);
        if x1 != x2 || y1 != y2 {
            return Err(format!("starting at {}", l.name(z)));
        }
        if !(l.leq(x1, z) && l.leq(z, y1)) {
            return Err(format!("{} not between its pop values", l.name(z)));
        }
    }
    Ok(())
}

fn image_size(n: usize, f: impl Fn(usize) -> usize) -> usize {
    let mut seen = vec![false; n];
    (0..n).for_each(|x| seen[f(x)] = true);
    seen.into_iter().filter(|&b| b).count()
}

/// `|{Row(x) ≤ x}| = |Pop↓(L)| = |Pop↑(L)| = #independent dominating sets`,
/// and the polynomial evaluates to the same number at 1.
fn pop_image_equality(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    let n = l.len();
    let down = (0..n).filter(|&x| l.leq(s.row(x), x)).count();
    let pd = image_size(n, |x| pop_down(l, x));
    let pu = image_size(n, |x| pop_up(l, x));
    let dom = s.independent_dominating_sets().len();
    let poly = s.pop_polynomial().map_err(|e| e.to_string())?.at_one() as usize;
    if [pd, pu, dom, poly].iter().all(|&c| c == down) {
        Ok(())
    } else {
        Err(format!(
            "Row goes down {down}, |Pop↓(L)| {pd}, |Pop↑(L)| {pu}, dominating {dom}, Pop(1) {poly}"
        ))
    }
}

/// `Row(x) ≤ x` iff `𝓓(x)` dominates the undirected Galois graph.
fn down_iff_dominating(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    let g = &s.graph;
    for x in 0..l.len() {
        let d = s.down(x);
        let mut covered = d.clone();
        for a in d.iter() {
            covered.union_with(g.neighbors(a));
        }
        let dominating = covered.count() == g.len();
        if dominating != l.leq(s.row(x), x) {
            return Err(format!("at {}: dominating {dominating}", l.name(x)));
        }
    }
    Ok(())
}

/// A join-prime labelling a cover inside `[Pop↓(b), b]` is in `𝓓(b)`
/// and in `𝓤(Pop↓(b))`.
fn faces_join_primes(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    let primes: Vec<usize> = join_primes(l)
        .into_iter()
        .filter_map(|j| s.pairing.index_of(j))
        .collect();
    if primes.is_empty() {
        return Ok(());
    }
    for b in 0..l.len() {
        let pd = pop_down(l, b);
        for &(x, y) in l.covers() {
            if !(l.leq(pd, x) && l.leq(y, b)) {
                continue;
            }
            let a = s.labels.label_pos(x, y).expect("overlapping");
            if primes.contains(&a) && !(s.down(b).contains(a) && s.up(pd).contains(a)) {
                return Err(format!(
                    "{} in the face of {}",
                    l.name(s.pairing.joins()[a]),
                    l.name(b)
                ));
            }
        }
    }
    Ok(())
}

/// The row shard set sits inside the pop shard set, and a join-irreducible's
/// pop shard set is itself.
fn shard_sets(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    for b in 0..l.len() {
        if !s.shard_row(b).is_subset(&s.shard_pop(b)) {
            return Err(format!(
                "row shard set of {} not inside pop shard set",
                l.name(b)
            ));
        }
        if let Some(a) = s.pairing.index_of(b) {
            let sp = s.shard_pop(b);
            if sp.count() != 1 || !sp.contains(a) {
                return Err(format!("pop shard set of {} is not itself", l.name(b)));
            }
        }
    }
    let report = s.core_label_preorder(ShardVariant::Pop);
    if report.classes.iter().map(Vec::len).sum::<usize>() != l.len() {
        return Err("core label classes do not partition the lattice".into());
    }
    Ok(())
}

fn meet_sd_agrees(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    let m = MeetSdRowmotion::new(l).map_err(|e| e.to_string())?;
    for x in 0..l.len() {
        let r = m.apply(x).map_err(|e| e.to_string())?;
        if r != s.row(x) {
            return Err(format!("at {}", l.name(x)));
        }
    }
    Ok(())
}

/// Every interval is semidistrim, and its pairing, Galois graph, labels and
/// (for lower intervals) rowmotion come from the ambient ones.
fn intervals(s: &Semidistrim<'_>) -> Result<(), String> {
    let l = s.lattice;
    let n = l.len();
    let js = s.pairing.joins();
    let sets = s.labels.sets();
    for u in 0..n {
        for v in 0..n {
            if !l.leq(u, v) {
                continue;
            }
            let at = || format!("[{}, {}]", l.name(u), l.name(v));
            let (sub, emb) = l.interval(u, v).map_err(|e| e.to_string())?;
            if !classify::is_semidistrim(&sub) {
                return Err(format!("{} is not semidistrim", at()));
            }
            let inner = Semidistrim::assume(&sub).map_err(|e| format!("{}: {e}", at()))?;
            let kappa = &inner.pairing;
            // α(j) = u ∨ j on J(v) ∩ M(u), as interval indices.
            let domain = sets.below[v].and(&sets.kappa_above[u]);
            let mut alpha = vec![usize::MAX; js.len()];
            for a in domain.iter() {
                let img = emb
                    .from_ambient(l.join(u, js[a]))
                    .ok_or_else(|| format!("{}: u ∨ j outside", at()))?;
                let pos = kappa.index_of(img).ok_or_else(|| {
                    format!(
                        "{}: {} ∨ {} is not join-irreducible",
                        at(),
                        l.name(u),
                        l.name(js[a])
                    )
                })?;
                if emb.to_ambient(kappa.kappa(img)) != l.meet(v, s.pairing.kappa_at(a)) {
                    return Err(format!(
                        "{}: κ does not restrict at {}",
                        at(),
                        l.name(js[a])
                    ));
                }
                alpha[a] = pos;
            }
            if domain.count() != kappa.len() {
                return Err(format!(
                    "{}: {} labels restrict to {} join-irreducibles",
                    at(),
                    domain.count(),
                    kappa.len()
                ));
            }
            for a in domain.iter() {
                for b in domain.iter() {
                    if s.graph.has_edge(a, b) != inner.graph.has_edge(alpha[a], alpha[b]) {
                        return Err(format!(
                            "{}: Galois edge {}→{} not preserved",
                            at(),
                            l.name(js[a]),
                            l.name(js[b])
                        ));
                    }
                }
            }
            for &(x, y) in sub.covers() {
                let outer = s
                    .labels
                    .label_pos(emb.to_ambient(x), emb.to_ambient(y))
                    .expect("overlapping");
                if inner.labels.label_pos(x, y) != Some(alpha[outer]) {
                    return Err(format!(
                        "{}: label of {}⋖{} not restricted",
                        at(),
                        l.name(emb.to_ambient(x)),
                        l.name(emb.to_ambient(y))
                    ));
                }
            }
            if u == l.bottom() {
                for x in 0..sub.len() {
                    let ax = emb.to_ambient(x);
                    if emb.to_ambient(inner.row(x)) != l.meet(v, s.row(ax)) {
                        return Err(format!("{}: Row({}) ≠ v ∧ Row", at(), l.name(ax)));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Products of semidistrim lattices are semidistrim, with join-irreducibles
/// adding up.
pub fn product_check(a: &Lattice, b: &Lattice) -> Check {
    let p = a.product(b);
    let r = if !classify::is_semidistrim(&p) {
        Err(format!(
            "{}×{} product is not semidistrim",
            a.len(),
            b.len()
        ))
    } else if p.join_irreducibles().len()
        != a.join_irreducibles().len() + b.join_irreducibles().len()
    {
        Err("join-irreducibles do not add up".into())
    } else {
        let ka = unique_pairing(a).map(|k| galois_graph(a, &k).edge_count());
        let kb = unique_pairing(b).map(|k| galois_graph(b, &k).edge_count());
        let kp = unique_pairing(&p).map(|k| galois_graph(&p, &k).edge_count());
        match (ka, kb, kp) {
            (Ok(x), Ok(y), Ok(z)) if x + y == z => Ok(()),
            (Ok(x), Ok(y), Ok(z)) => Err(format!("Galois edges {x} + {y} ≠ {z}")),
            _ => Err("product not uniquely paired".into()),
        }
    };
    Check::from_result("product_semidistrim", r)
}
