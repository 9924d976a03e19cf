//! The verification corpus and report.

use std::time::Instant;

use latticelab::generators::{
    boolean_with_limit, cambrian_with_limit, chain_with_limit, figure_lattice, root_poset,
    tamari_with_limit, weak_order_with_limit, CoxeterElementSpec, CoxeterType, FIGURE_IDS,
};
use latticelab::ideals::order_ideal_lattice_with_limit;
use latticelab::{classify, Lattice};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::random::{random_lattice, RandomLatticeParams};
use crate::tables::{self, RowResult};
use crate::theorems::{lattice_checks, product_check, Check, Limits, Outcome};

pub const DEFAULT_THEOREM_MAX_SIZE: usize = 2000;
pub const DEFAULT_TABLE_MAX_SIZE: usize = 6000;
pub const DEFAULT_RANDOM_COUNT: usize = 200;

pub struct CorpusEntry {
    pub id: String,
    pub lattice: Lattice,
}

fn push(out: &mut Vec<CorpusEntry>, id: String, l: latticelab::Result<Lattice>) {
    // Members over the size limit are left out.
    if let Ok(lattice) = l {
        out.push(CorpusEntry { id, lattice });
    }
}

/// Figure lattices and generated families up to `max_size` elements.
pub fn family_corpus(max_size: usize) -> Vec<CorpusEntry> {
    use CoxeterType::{A, B, I2};
    let mut out = Vec::new();
    for id in FIGURE_IDS {
        push(&mut out, id.to_string(), figure_lattice(id));
    }
    for k in 1..=10 {
        push(
            &mut out,
            format!("chain({k})"),
            chain_with_limit(k, max_size),
        );
    }
    for k in 1..=7 {
        push(
            &mut out,
            format!("boolean({k})"),
            boolean_with_limit(k, max_size),
        );
    }
    let ranks = [(A, 1..=6), (B, 2..=5), (I2, 3..=10)];
    for (ty, range) in ranks.iter().cloned() {
        for n in range {
            push(
                &mut out,
                format!("weak({ty:?},{n})"),
                weak_order_with_limit(ty, n, max_size),
            );
        }
    }
    for n in 1..=7 {
        push(
            &mut out,
            format!("tamari({n})"),
            tamari_with_limit(n, max_size),
        );
    }
    let ranks = [(A, 1..=6), (B, 2..=6), (I2, 3..=10)];
    for (ty, range) in ranks.iter().cloned() {
        for n in range {
            let lin = CoxeterElementSpec::linear(ty, n);
            let bip = CoxeterElementSpec::bipartite(ty, n);
            push(
                &mut out,
                format!("cambrian_linear({ty:?},{n})"),
                cambrian_with_limit(&lin, max_size),
            );
            push(
                &mut out,
                format!("cambrian_bipartite({ty:?},{n})"),
                cambrian_with_limit(&bip, max_size),
            );
        }
    }
    for (ty, range) in [(A, 1..=7), (B, 2..=6)] {
        for n in range {
            let l = root_poset(ty, n)
                .and_then(|(p, _)| order_ideal_lattice_with_limit(&p, max_size))
                .map(|i| i.lattice);
            push(&mut out, format!("root_ideals({ty:?},{n})"), l);
        }
    }
    out
}

/// Seeded random lattices that turn out to be semidistrim.
pub fn random_corpus(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut draws = 0usize;
    while out.len() < count && draws < count * 200 {
        draws += 1;
        let size = 4 + draws % 11;
        let params = RandomLatticeParams {
            size,
            max_height: 2 + draws % 4,
            edge_probability: 0.35,
        };
        if let Some(l) = random_lattice(&mut rng, params, 20) {
            if classify::is_semidistrim(&l) {
                out.push(CorpusEntry {
                    id: format!("random({seed},{draws})"),
                    lattice: l,
                });
            }
        }
    }
    out
}

/// Pairs of small semidistrim lattices whose products are checked.
pub fn product_pairs() -> Vec<(String, Lattice, Lattice)> {
    let get = |id: &str| figure_lattice(id).expect("figure id");
    let chain = |k| chain_with_limit(k, 10).expect("small chain");
    vec![
        ("fig1_left×chain(3)".into(), get("fig1_left"), chain(3)),
        ("fig1_mid×chain(2)".into(), get("fig1_mid"), chain(2)),
        (
            "fig1_right×fig1_left".into(),
            get("fig1_right"),
            get("fig1_left"),
        ),
        ("fig6×chain(2)".into(), get("fig6"), chain(2)),
        ("fig12×chain(2)".into(), get("fig12"), chain(2)),
        (
            "tamari(3)×fig1_mid".into(),
            tamari_with_limit(3, 100).expect("small"),
            get("fig1_mid"),
        ),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub lattice: String,
    pub check: &'static str,
    #[serde(flatten)]
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub lattices: usize,
    pub records: Vec<Record>,
    pub tables: Vec<RowResult>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl VerificationReport {
    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for r in &self.records {
            match r.outcome {
                Outcome::Pass => t.passed += 1,
                Outcome::Fail(_) => t.failed += 1,
                Outcome::Skip(_) => t.skipped += 1,
            }
        }
        for r in &self.tables {
            match (r.pass, r.computed.is_some()) {
                (true, _) => t.passed += 1,
                (false, false) if r.note.as_deref() == Some(SIZE_SKIP) => t.skipped += 1,
                _ => t.failed += 1,
            }
        }
        t
    }

    pub fn any_failed(&self) -> bool {
        self.tally().failed > 0
    }
}

const SIZE_SKIP: &str = "skipped: size limit";

/// Runs the lattice checks over `corpus` on the rayon pool.
pub fn run_theorems(corpus: &[CorpusEntry], limits: Limits, timings: bool) -> Vec<Record> {
    corpus
        .par_iter()
        .map(|e| {
            let start = Instant::now();
            let checks = lattice_checks(&e.lattice, limits);
            let ms = timings.then(|| start.elapsed().as_secs_f64() * 1000.0);
            records(&e.id, checks, ms)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn records(id: &str, checks: Vec<Check>, millis: Option<f64>) -> Vec<Record> {
    checks
        .into_iter()
        .map(|c| Record {
            lattice: id.to_string(),
            check: c.id,
            outcome: c.outcome,
            millis,
        })
        .collect()
}

pub fn run_products(timings: bool) -> Vec<Record> {
    product_pairs()
        .par_iter()
        .map(|(id, a, b)| {
            let start = Instant::now();
            let c = product_check(a, b);
            let ms = timings.then(|| start.elapsed().as_secs_f64() * 1000.0);
            records(id, vec![c], ms)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn run_tables(max_size: usize, include_a7: bool) -> Vec<RowResult> {
    let rows = tables::all_rows();
    let mut out: Vec<RowResult> = rows
        .par_iter()
        .map(|row| {
            if row.size > max_size {
                RowResult {
                    row: row.label(),
                    size: row.size,
                    expected: row.expected().to_string(),
                    expected_at_one: row.pop_at_one,
                    computed: None,
                    computed_at_one: None,
                    pass: false,
                    note: Some(SIZE_SKIP.into()),
                }
            } else {
                tables::run_row(row, max_size)
            }
        })
        .collect();
    if include_a7 {
        out.push(tables::run_weak_a7());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_corpus_is_seeded() {
        let a: Vec<_> = random_corpus(3, 5)
            .into_iter()
            .map(|e| e.lattice.covers().to_vec())
            .collect();
        let b: Vec<_> = random_corpus(3, 5)
            .into_iter()
            .map(|e| e.lattice.covers().to_vec())
            .collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
    }

    #[test]
    fn family_corpus_respects_limit() {
        let c = family_corpus(30);
        assert!(c.iter().all(|e| e.lattice.len() <= 30));
        assert!(c.iter().any(|e| e.id == "weak(A,3)"));
    }
}
