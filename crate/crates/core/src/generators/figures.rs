//! Small named lattices, transcribed as cover lists.
//!
//! Elements carry the labels used in the drawings; an element carrying two
//! labels is named `j=m`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

pub const FIGURE_IDS: &[&str] = &[
    "fig1_left",
    "fig1_mid",
    "fig1_right",
    "fig2",
    "fig3",
    "fig4",
    "fig5",
    "fig6",
    "fig7",
    "fig8",
    "fig12",
    "fig13",
    "fig_not_intervals",
    "fig_not_sublattice",
];

fn build(names: &[&str], covers: &[(&str, &str)]) -> Lattice {
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let covers: Vec<_> = covers.iter().map(|(a, b)| (index[a], index[b])).collect();
    Lattice::from_covers(names.len(), &covers)
        .expect("figure lattices are lattices")
        .with_names(names.iter().map(|s| s.to_string()).collect())
}

/// Numbered elements `lo..=hi` minus `skip`, with covers given by number.
fn numbered(
    range: std::ops::RangeInclusive<usize>,
    skip: &[usize],
    covers: &[(usize, usize)],
) -> Lattice {
    let names: Vec<String> = range
        .filter(|i| !skip.contains(i))
        .map(|i| i.to_string())
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let covers: Vec<(String, String)> = covers
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let cov: Vec<(&str, &str)> = covers
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    build(&refs, &cov)
}

pub fn figure_lattice(id: &str) -> Result<Lattice> {
    let l = match id {
        // the hexagon
        "fig1_left" => numbered(
            0..=5,
            &[],
            &[(0, 1), (1, 3), (3, 5), (0, 2), (2, 4), (4, 5)],
        ),
        "fig1_mid" => numbered(
            0..=6,
            &[],
            &[
                (0, 1),
                (1, 5),
                (5, 6),
                (4, 6),
                (2, 4),
                (0, 2),
                (1, 3),
                (3, 4),
            ],
        ),
        "fig1_right" => numbered(
            0..=7,
            &[],
            &[
                (0, 1),
                (1, 5),
                (5, 6),
                (4, 6),
                (2, 4),
                (7, 2),
                (0, 7),
                (1, 3),
                (3, 4),
            ],
        ),
        "fig2" => build(
            &["0̂", "a", "b", "c", "1̂"],
            &[
                ("0̂", "a"),
                ("0̂", "b"),
                ("0̂", "c"),
                ("a", "1̂"),
                ("b", "1̂"),
                ("c", "1̂"),
            ],
        ),
        "fig3" => build(
            &["0̂", "j1", "j2", "j3", "m4", "j4=m3", "m2", "m1", "1̂"],
            &[
                ("0̂", "j1"),
                ("0̂", "j2"),
                ("0̂", "j3"),
                ("j1", "m4"),
                ("j2", "m4"),
                ("j2", "j4=m3"),
                ("j4=m3", "m1"),
                ("m1", "1̂"),
                ("j1", "m2"),
                ("j3", "m2"),
                ("j3", "m1"),
                ("m4", "1̂"),
                ("m2", "1̂"),
            ],
        ),
        "fig4" => build(
            &["0̂", "j0", "j1", "j2=m1", "j3=m4", "j4=m3", "m0", "m2", "1̂"],
            &[
                ("0̂", "j0"),
                ("j0", "j3=m4"),
                ("j3=m4", "m2"),
                ("m2", "1̂"),
                ("m0", "1̂"),
                ("j2=m1", "m0"),
                ("0̂", "j2=m1"),
                ("0̂", "j1"),
                ("j1", "m2"),
                ("j4=m3", "m2"),
                ("j0", "j4=m3"),
                ("j1", "m0"),
            ],
        ),
        "fig5" => build(
            &["0̂", "j2", "j4=m1", "j3=m5", "j5=m3", "j1=m2", "m4", "1̂"],
            &[
                ("0̂", "j2"),
                ("j2", "j3=m5"),
                ("j3=m5", "m4"),
                ("m4", "1̂"),
                ("j1=m2", "1̂"),
                ("0̂", "j1=m2"),
                ("j2", "j4=m1"),
                ("j4=m1", "1̂"),
                ("j2", "j5=m3"),
                ("j5=m3", "m4"),
            ],
        ),
        "fig6" => build(
            &[
                "0̂", "j1", "j2=m1", "j3=m2", "j4=m3", "m4", "x", "j5=m6", "j6=m5", "1̂",
            ],
            &[
                ("0̂", "j1"),
                ("j1", "j4=m3"),
                ("j4=m3", "x"),
                ("x", "j6=m5"),
                ("j6=m5", "1̂"),
                ("j5=m6", "1̂"),
                ("x", "j5=m6"),
                ("m4", "x"),
                ("j2=m1", "m4"),
                ("0̂", "j2=m1"),
                ("j1", "j3=m2"),
                ("j3=m2", "m4"),
            ],
        ),
        "fig7" => build(
            &["0̂", "a", "b", "c", "d", "1̂"],
            &[
                ("0̂", "a"),
                ("a", "1̂"),
                ("b", "1̂"),
                ("c", "1̂"),
                ("d", "c"),
                ("0̂", "d"),
                ("d", "b"),
            ],
        ),
        "fig8" => build(
            &["0̂", "a", "b", "c", "d", "e", "1̂"],
            &[
                ("0̂", "d"),
                ("d", "a"),
                ("a", "1̂"),
                ("b", "1̂"),
                ("d", "b"),
                ("c", "1̂"),
                ("e", "c"),
                ("0̂", "e"),
                ("e", "b"),
            ],
        ),
        "fig12" => numbered(
            1..=20,
            &[],
            &[
                (1, 2),
                (2, 4),
                (4, 9),
                (9, 10),
                (7, 10),
                (3, 7),
                (1, 3),
                (2, 5),
                (5, 8),
                (8, 9),
                (3, 6),
                (6, 8),
                (12, 11),
                (14, 12),
                (19, 14),
                (20, 19),
                (20, 17),
                (17, 13),
                (13, 11),
                (15, 12),
                (18, 15),
                (19, 18),
                (18, 16),
                (16, 13),
                (10, 20),
            ],
        ),
        "fig13" => numbered(
            1..=18,
            &[10],
            &[
                (1, 2),
                (2, 4),
                (4, 9),
                (9, 15),
                (7, 15),
                (3, 7),
                (1, 3),
                (2, 5),
                (5, 8),
                (8, 9),
                (3, 6),
                (6, 8),
                (4, 11),
                (11, 16),
                (16, 18),
                (17, 18),
                (15, 17),
                (12, 16),
                (13, 12),
                (13, 14),
                (14, 17),
                (9, 13),
            ],
        ),
        // The lower interval [0, 9] is not compatibly dismantlable.
        "fig_not_intervals" => numbered(
            0..=11,
            &[],
            &[
                (0, 2),
                (2, 4),
                (4, 8),
                (8, 11),
                (9, 11),
                (1, 4),
                (7, 10),
                (5, 8),
                (2, 10),
                (10, 11),
                (0, 1),
                (1, 5),
                (5, 9),
                (6, 9),
                (1, 6),
                (0, 3),
                (3, 6),
                (3, 7),
                (7, 9),
            ],
        ),
        // {1, 3, 4, 5, 7, 8, 11} is a sublattice that is not semidistrim.
        "fig_not_sublattice" => numbered(
            1..=11,
            &[],
            &[
                (1, 2),
                (2, 5),
                (5, 11),
                (8, 11),
                (3, 8),
                (1, 3),
                (1, 4),
                (4, 6),
                (6, 8),
                (6, 9),
                (9, 10),
                (10, 11),
                (4, 7),
                (7, 10),
                (3, 5),
                (2, 9),
            ],
        ),
        _ => return Err(Error::UnknownId(id.to_string())),
    };
    Ok(l)
}
