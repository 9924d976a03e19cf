//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero on any failure not listed in `KNOWN_TABLE_ERRATA`.

mod support;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use latticelab::dynamics::{classical_ideal_rowmotion, pop_down, pop_up, MeetSdRowmotion};
use latticelab::galois::enumerate_tops;
use latticelab::generators::{figure_lattice, FIGURE_IDS};
use latticelab::pairing::{enumerate_pairings, join_primes, unique_pairing};
use latticelab::{classify, order_ideal_lattice, Bits, Lattice, PopPolynomial, Semidistrim};
use latticelab_cli::random::{random_lattice, random_poset, RandomLatticeParams};
use latticelab_cli::tables::{bipartite_rows, tamari_rows, weak_rows, TableRow, TABLE_LIMIT};
use latticelab_cli::theorems::{Limits, Outcome};
use latticelab_cli::verify::{family_corpus, random_corpus, run_products, run_theorems};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::reference::{self, RefLattice};

/// Table entries whose printed polynomial disagrees with its own `Pop(1)`.
/// For Tamari B3 the entry `q^3 + 6q^2 + 2q` sums to 9 while the listed
/// value at one is 8; the computed `q^3 + 6q^2 + q` sums to 8.
const KNOWN_TABLE_ERRATA: &[(&str, &str)] = &[("tamari B3", "q^3 + 6q^2 + q")];

struct Verdict {
    pass: bool,
    detail: String,
    /// Failure explained by `KNOWN_TABLE_ERRATA`.
    expected: bool,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Verdict {
        Verdict {
            pass,
            detail: detail.into(),
            expected: false,
        }
    }
}

fn oracle_poly(l: &Lattice) -> PopPolynomial {
    let coeffs: Vec<(usize, u64)> = reference::pop_polynomial(&RefLattice::of(l))
        .into_iter()
        .collect();
    PopPolynomial::from_coeffs(&coeffs)
}

/// Rows whose library polynomial, oracle polynomial and listed polynomial
/// do not all agree, as `(label, computed)`.
fn table_mismatches(rows: &[TableRow]) -> Vec<(String, String)> {
    let mut bad = Vec::new();
    for row in rows {
        let label = row.label();
        let l = match row.build(TABLE_LIMIT) {
            Ok(l) => l,
            Err(e) => {
                bad.push((label, format!("build failed: {e}")));
                continue;
            }
        };
        let computed = match Semidistrim::new(&l).and_then(|s| s.pop_polynomial()) {
            Ok(p) => p,
            Err(e) => {
                bad.push((label, format!("error: {e}")));
                continue;
            }
        };
        let oracle = oracle_poly(&l);
        if l.len() != row.size || computed != oracle || computed != row.expected() {
            bad.push((
                label,
                format!("{computed} (oracle {oracle}, size {})", l.len()),
            ));
        }
    }
    bad
}

fn table_verdict(rows: &[TableRow]) -> Verdict {
    let bad = table_mismatches(rows);
    if bad.is_empty() {
        return Verdict::new(true, format!("{} rows match", rows.len()));
    }
    let listed = |b: &(String, String)| {
        KNOWN_TABLE_ERRATA.iter().any(|(label, poly)| {
            *label == b.0 && b.1.starts_with(&format!("{poly} (oracle {poly}"))
        })
    };
    let detail = bad
        .iter()
        .map(|(l, c)| format!("{l}: got {c}"))
        .collect::<Vec<_>>()
        .join("; ");
    Verdict {
        pass: false,
        expected: bad.iter().all(listed),
        detail: format!("{} of {} rows differ: {detail}", bad.len(), rows.len()),
    }
}

fn criterion_1() -> Verdict {
    table_verdict(&weak_rows())
}

fn criterion_2() -> Verdict {
    let mut v = table_verdict(&tamari_rows());
    if v.expected {
        v.detail
            .push_str(" (listed entry is inconsistent with its own Pop(1) = 8)");
    }
    v
}

fn criterion_3() -> Verdict {
    table_verdict(&bipartite_rows())
}

fn criterion_4() -> Verdict {
    let mut corpus = family_corpus(2000);
    let randoms = random_corpus(0, 200);
    let random_count = randoms.len();
    corpus.extend(randoms);
    let mut records = run_theorems(&corpus, Limits::default(), false);
    records.extend(run_products(false));
    let failed: Vec<String> = records
        .iter()
        .filter_map(|r| match &r.outcome {
            Outcome::Fail(d) => Some(format!("{} {}: {d}", r.lattice, r.check)),
            _ => None,
        })
        .collect();
    let passed = records
        .iter()
        .filter(|r| r.outcome == Outcome::Pass)
        .count();
    if random_count < 200 {
        return Verdict::new(false, format!("only {random_count} random lattices drawn"));
    }
    Verdict::new(
        failed.is_empty(),
        format!(
            "{} lattices, {passed} checks passed, {} failed{}",
            corpus.len(),
            failed.len(),
            failed
                .first()
                .map(|f| format!("; first: {f}"))
                .unwrap_or_default()
        ),
    )
}

fn criterion_5() -> Verdict {
    let fig = |id| figure_lattice(id).expect("figure");
    let mut problems = Vec::new();

    let l = fig("fig7");
    let downs: BTreeSet<usize> = (0..l.len()).map(|x| pop_down(&l, x)).collect();
    let ups: BTreeSet<usize> = (0..l.len()).map(|x| pop_up(&l, x)).collect();
    if (downs.len(), ups.len()) != (2, 1) {
        problems.push(format!(
            "fig7 |Pop↓| = {}, |Pop↑| = {}",
            downs.len(),
            ups.len()
        ));
    }

    let l = fig("fig8");
    let msd = classify::is_meet_semidistributive(&l);
    let sdt = classify::is_semidistrim(&l);
    let image: Option<BTreeSet<usize>> = MeetSdRowmotion::new(&l)
        .ok()
        .and_then(|r| (0..l.len()).map(|x| r.apply(x).ok()).collect());
    let image = image.map(|s| s.len());
    if !msd || sdt || image != Some(5) || l.len() != 7 {
        problems.push(format!(
            "fig8 meet-sd {msd}, semidistrim {sdt}, image {image:?} of {}",
            l.len()
        ));
    }

    let l = fig("fig2");
    let count = enumerate_pairings(&l).map(|p| p.len());
    if count.as_ref().ok() != Some(&2) {
        problems.push(format!("fig2 pairings {count:?}"));
    }

    let l = fig("fig6");
    match Semidistrim::new(&l) {
        Ok(s) => {
            let pairs: BTreeSet<(Vec<usize>, Vec<usize>)> = (0..l.len())
                .map(|x| (s.down(x).to_vec(), s.up(x).to_vec()))
                .collect();
            let tops = enumerate_tops(&s.graph, 100_000).unwrap_or_default();
            let extra = tops
                .iter()
                .filter(|(x, y)| !pairs.contains(&(x.to_vec(), y.to_vec())))
                .count();
            if extra == 0 {
                problems.push(format!(
                    "fig6 all {} tight pairs come from elements",
                    tops.len()
                ));
            }
        }
        Err(e) => problems.push(format!("fig6: {e}")),
    }

    let l = fig("fig13");
    let cup = classify::is_completely_uniquely_paired(&l);
    let primes = join_primes(&l);
    if !matches!(cup, Ok(true)) || !primes.is_empty() {
        problems.push(format!("fig13 cup {cup:?}, join primes {primes:?}"));
    }

    Verdict::new(
        problems.is_empty(),
        if problems.is_empty() {
            "fig7, fig8, fig2, fig6, fig13 as expected".into()
        } else {
            problems.join("; ")
        },
    )
}

fn criterion_6() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut posets = 0;
    let mut ideals = 0usize;
    let mut problems = Vec::new();
    while posets < 50 {
        let n = rng.gen_range(1..=14);
        let density = rng.gen_range(0.1..0.5);
        let p = random_poset(&mut rng, n, density);
        let Ok(j) = order_ideal_lattice(&p) else {
            continue;
        };
        if j.lattice.len() > 4096 {
            continue;
        }
        posets += 1;
        let s = match Semidistrim::new(&j.lattice) {
            Ok(s) => s,
            Err(e) => {
                problems.push(format!("poset {posets}: {e}"));
                continue;
            }
        };
        let le: Vec<Vec<bool>> = (0..n)
            .map(|a| (0..n).map(|b| p.leq(a, b)).collect())
            .collect();
        let order: Vec<usize> = (0..n).collect();
        for (x, ideal) in j.ideals.iter().enumerate() {
            ideals += 1;
            let classical = classical_ideal_rowmotion(&p, ideal).expect("down-set");
            let flags: Vec<bool> = (0..n).map(|i| ideal.contains(i)).collect();
            let toggled = reference::toggle_rowmotion(&le, &order, &flags);
            let toggled = Bits::from_indices(n, (0..n).filter(|&i| toggled[i]));
            let by_labels = &j.ideals[s.row_inv(x)];
            let round_trip = classical_ideal_rowmotion(&p, &j.ideals[s.row(x)]).expect("down-set");
            if *by_labels != classical || toggled != classical || round_trip != *ideal {
                problems.push(format!("poset {posets}, ideal {:?}", ideal.to_vec()));
            }
        }
    }
    Verdict::new(
        problems.is_empty(),
        format!(
            "{posets} posets, {ideals} ideals; label-set rowmotion is inverse to classical rowmotion{}",
            problems.first().map(|p| format!("; first mismatch: {p}")).unwrap_or_default()
        ),
    )
}

fn small_lattices() -> Vec<(String, Lattice)> {
    let mut out: Vec<(String, Lattice)> = FIGURE_IDS
        .iter()
        .map(|id| (id.to_string(), figure_lattice(id).expect("figure")))
        .collect();
    out.extend(family_corpus(10).into_iter().map(|e| (e.id, e.lattice)));
    let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for draw in 0..6000 {
        let size = 1 + draw % 10;
        let params = RandomLatticeParams {
            size,
            max_height: 1 + draw % 5,
            edge_probability: [0.2, 0.35, 0.5, 0.7][draw % 4],
        };
        if let Some(l) = random_lattice(&mut rng, params, 20) {
            if l.len() <= 10 && seen.insert(l.covers().to_vec()) {
                out.push((format!("random #{draw}"), l));
            }
        }
    }
    out
}

fn criterion_7() -> Verdict {
    let lattices = small_lattices();
    let mut problems = Vec::new();
    let mut semidistrim = 0;
    for (id, l) in &lattices {
        let r = RefLattice::of(l);
        let reference: Vec<BTreeMap<usize, usize>> = reference::pairings(&r)
            .into_iter()
            .map(|p| p.into_iter().collect())
            .collect();
        let fast = unique_pairing(l)
            .ok()
            .map(|p| p.pairs().into_iter().collect::<BTreeMap<_, _>>());
        let agree = match (&fast, reference.as_slice()) {
            (Some(f), [only]) => f == only,
            (None, refs) => refs.len() != 1,
            _ => false,
        };
        if !agree {
            problems.push(format!(
                "{id}: pairing {fast:?} vs {} reference pairings",
                reference.len()
            ));
        }
        let (fast, slow) = (classify::is_semidistrim(l), reference::semidistrim(&r));
        semidistrim += usize::from(slow);
        if fast != slow {
            problems.push(format!("{id}: semidistrim {fast} vs reference {slow}"));
        }
    }
    Verdict::new(
        problems.is_empty(),
        format!(
            "{} lattices ({semidistrim} semidistrim){}",
            lattices.len(),
            problems
                .first()
                .map(|p| format!("; first: {p}"))
                .unwrap_or_default()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 7] = [
        ("weak order pop polynomials", criterion_1),
        ("linear Cambrian pop polynomials", criterion_2),
        (
            "bipartite Cambrian and root-ideal pop polynomials",
            criterion_3,
        ),
        ("invariant suite over the corpus", criterion_4),
        ("counterexample lattices", criterion_5),
        ("rowmotion on order ideals", criterion_6),
        ("brute-force pairing and semidistrim", criterion_7),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {} {status}: {name}: {}", i + 1, v.detail);
        if !v.pass && !v.expected {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
