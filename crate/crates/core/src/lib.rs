//! Finite lattice computations: pairings of irreducibles, Galois graphs,
//! edge labelings, rowmotion and pop-stack sorting, plus generators for
//! weak orders, Tamari and Cambrian lattices and root-ideal lattices.

pub mod bits;
pub mod classify;
pub mod dynamics;
pub mod error;
pub mod galois;
pub mod generators;
pub mod ideals;
pub mod lattice;
pub mod pairing;
pub mod poset;

pub use bits::Bits;
pub use classify::{classify, ClassificationReport, DismantlingCertificate, Verdict};
pub use dynamics::{EdgeLabeling, OrbitDecomposition, PopPolynomial, Semidistrim};
pub use error::{Error, Result};
pub use galois::GaloisGraph;
pub use ideals::{order_ideal_lattice, IdealLattice};
pub use lattice::{as_lattice, IntervalEmbedding, Irreducibles, Lattice};
pub use pairing::{Pairing, PrimePair};
pub use poset::Poset;
