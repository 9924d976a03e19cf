//! The JSON lattice document.

use latticelab::{Lattice, Poset};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Lattice(#[from] latticelab::Error),
    #[error("element_names has {got} entries for {size} elements")]
    NameCount { got: usize, size: usize },
}

/// Covers are 0-based `[lower, upper]` pairs; bottom and top are derived.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDocument {
    pub name: Option<String>,
    pub size: usize,
    pub covers: Vec<[usize; 2]>,
    pub element_names: Option<Vec<String>>,
}

impl LatticeDocument {
    pub fn from_lattice(name: Option<&str>, l: &Lattice) -> LatticeDocument {
        LatticeDocument {
            name: name.map(str::to_string),
            size: l.len(),
            covers: l.covers().iter().map(|&(a, b)| [a, b]).collect(),
            element_names: Some(l.names().to_vec()),
        }
    }

    pub fn to_poset(&self) -> Result<Poset, DocumentError> {
        let covers: Vec<_> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        Ok(Poset::from_covers(self.size, &covers)?)
    }

    pub fn to_lattice(&self) -> Result<Lattice, DocumentError> {
        let l = latticelab::as_lattice(self.to_poset()?)?;
        match &self.element_names {
            Some(names) if names.len() != self.size => Err(DocumentError::NameCount {
                got: names.len(),
                size: self.size,
            }),
            Some(names) => Ok(l.with_names(names.clone())),
            None => Ok(l),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<LatticeDocument, DocumentError> {
        Ok(serde_json::from_str(s)?)
    }
}
