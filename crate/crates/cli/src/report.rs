//! Serializable views of library results, with elements shown by name.

use latticelab::classify::{OverlapFailure, SemidistrimFailure};
use latticelab::{ClassificationReport, Lattice};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Property {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Property {
    fn new(holds: bool, witness: Option<String>) -> Property {
        Property { holds, witness }
    }
}

#[derive(Debug, Serialize)]
pub struct Classification {
    pub size: usize,
    pub join_semidistributive: Property,
    pub meet_semidistributive: Property,
    pub semidistributive: bool,
    pub distributive: bool,
    pub extremal: bool,
    pub left_modular_count: Option<usize>,
    pub trim: bool,
    pub uniquely_paired: Property,
    pub overlapping: Property,
    pub compatibly_dismantlable: bool,
    pub dismantling_pair: Option<[String; 2]>,
    pub semidistrim: Property,
    pub crosscut_simplicial: Property,
    pub completely_uniquely_paired: Option<bool>,
    pub join_primes: Vec<String>,
    pub meet_primes: Vec<String>,
}

impl Classification {
    pub fn new(l: &Lattice, r: &ClassificationReport) -> Classification {
        let nm = |x: usize| l.name(x).to_string();
        let triple = |w: Option<(usize, usize, usize)>, fmt: fn(&str, &str, &str) -> String| {
            w.map(|(a, b, c)| fmt(l.name(a), l.name(b), l.name(c)))
        };
        Classification {
            size: r.size,
            join_semidistributive: Property::new(
                r.join_semidistributive.holds,
                triple(r.join_semidistributive.witness, |x, y, z| {
                    format!("{x} ∨ {y} = {x} ∨ {z} but {x} ∨ ({y} ∧ {z}) differs")
                }),
            ),
            meet_semidistributive: Property::new(
                r.meet_semidistributive.holds,
                triple(r.meet_semidistributive.witness, |x, y, z| {
                    format!("{x} ∧ {y} = {x} ∧ {z} but {x} ∧ ({y} ∨ {z}) differs")
                }),
            ),
            semidistributive: r.semidistributive,
            distributive: r.distributive,
            extremal: r.extremal,
            left_modular_count: r.left_modular_count,
            trim: r.trim,
            uniquely_paired: Property::new(
                r.uniquely_paired.is_ok(),
                r.uniquely_paired.as_ref().err().map(ToString::to_string),
            ),
            overlapping: Property::new(
                r.overlapping.holds,
                r.overlapping.witness.as_ref().map(|w| match w {
                    OverlapFailure::NotUniquelyPaired => "not uniquely paired".to_string(),
                    OverlapFailure::Cover { x, y, count } => {
                        format!(
                            "cover {} ⋖ {} has {count} candidate labels",
                            l.name(*x),
                            l.name(*y)
                        )
                    }
                }),
            ),
            compatibly_dismantlable: r.compatibly_dismantlable,
            dismantling_pair: r.dismantling_pair.map(|(j, m)| [nm(j), nm(m)]),
            semidistrim: Property::new(
                r.semidistrim.holds,
                r.semidistrim.witness.as_ref().map(|w| match w {
                    SemidistrimFailure::NotUniquelyPaired => "not uniquely paired".to_string(),
                    SemidistrimFailure::NotCompatiblyDismantlable => {
                        "not compatibly dismantlable".to_string()
                    }
                    SemidistrimFailure::DependentLabels(x) => {
                        format!("label sets of {} are not independent", l.name(*x))
                    }
                }),
            ),
            crosscut_simplicial: Property::new(
                r.crosscut_simplicial.holds,
                triple(r.crosscut_simplicial.witness, |u, v, a| {
                    format!("in [{u}, {v}] the atoms other than {a} join to {v}")
                }),
            ),
            completely_uniquely_paired: r.completely_uniquely_paired,
            join_primes: r.join_primes.iter().map(|&x| nm(x)).collect(),
            meet_primes: r.meet_primes.iter().map(|&x| nm(x)).collect(),
        }
    }

    /// One `key: value` line per field.
    pub fn to_text(&self) -> String {
        let prop = |p: &Property| match &p.witness {
            Some(w) => format!("{} ({w})", p.holds),
            None => p.holds.to_string(),
        };
        let opt = |o: Option<String>| o.unwrap_or_else(|| "n/a".into());
        let lines = [
            ("size", self.size.to_string()),
            ("join_semidistributive", prop(&self.join_semidistributive)),
            ("meet_semidistributive", prop(&self.meet_semidistributive)),
            ("semidistributive", self.semidistributive.to_string()),
            ("distributive", self.distributive.to_string()),
            ("extremal", self.extremal.to_string()),
            (
                "left_modular_count",
                opt(self.left_modular_count.map(|c| c.to_string())),
            ),
            ("trim", self.trim.to_string()),
            ("uniquely_paired", prop(&self.uniquely_paired)),
            ("overlapping", prop(&self.overlapping)),
            (
                "compatibly_dismantlable",
                self.compatibly_dismantlable.to_string(),
            ),
            (
                "dismantling_pair",
                opt(self
                    .dismantling_pair
                    .as_ref()
                    .map(|[j, m]| format!("({j}, {m})"))),
            ),
            ("semidistrim", prop(&self.semidistrim)),
            ("crosscut_simplicial", prop(&self.crosscut_simplicial)),
            (
                "completely_uniquely_paired",
                opt(self.completely_uniquely_paired.map(|b| b.to_string())),
            ),
            ("join_primes", format!("[{}]", self.join_primes.join(", "))),
            ("meet_primes", format!("[{}]", self.meet_primes.join(", "))),
        ];
        lines.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
    }
}
