//! Tamari lattices on binary trees, ordered by right rotation.

use std::collections::HashMap;

use super::{check_size, relabeled, DEFAULT_MAX_SIZE};
use crate::error::Result;
use crate::lattice::Lattice;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    fn node(a: Tree, b: Tree) -> Tree {
        Tree::Node(Box::new(a), Box::new(b))
    }

    fn all(k: usize) -> Vec<Tree> {
        if k == 0 {
            return vec![Tree::Leaf];
        }
        let mut out = Vec::new();
        for i in 0..k {
            let lefts = Tree::all(i);
            let rights = Tree::all(k - 1 - i);
            for a in &lefts {
                for b in &rights {
                    out.push(Tree::node(a.clone(), b.clone()));
                }
            }
        }
        out
    }

    /// Every tree obtained by one right rotation `(A B) C → A (B C)`.
    fn rotations(&self) -> Vec<Tree> {
        let Tree::Node(l, r) = self else {
            return Vec::new();
        };
        let mut out = Vec::new();
        if let Tree::Node(a, b) = l.as_ref() {
            out.push(Tree::node(
                (**a).clone(),
                Tree::node((**b).clone(), (**r).clone()),
            ));
        }
        for t in l.rotations() {
            out.push(Tree::node(t, (**r).clone()));
        }
        for t in r.rotations() {
            out.push(Tree::node((**l).clone(), t));
        }
        out
    }

    fn render(&self, out: &mut String) {
        match self {
            Tree::Leaf => out.push('.'),
            Tree::Node(a, b) => {
                out.push('(');
                a.render(out);
                b.render(out);
                out.push(')');
            }
        }
    }
}

fn catalan(k: usize) -> Option<usize> {
    let mut c: usize = 1;
    for i in 0..k {
        c = c.checked_mul(2 * (2 * i + 1))? / (i + 2);
    }
    Some(c)
}

/// The Tamari lattice of type Aₙ: binary trees with `n + 1` internal nodes,
/// `Catalan(n + 1)` elements. The left comb is the bottom.
pub fn tamari(n: usize) -> Result<Lattice> {
    tamari_with_limit(n, DEFAULT_MAX_SIZE)
}

pub fn tamari_with_limit(n: usize, limit: usize) -> Result<Lattice> {
    check_size("Tamari lattice", catalan(n + 1), limit)?;
    let trees = Tree::all(n + 1);
    let index: HashMap<&Tree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut covers = Vec::new();
    for (i, t) in trees.iter().enumerate() {
        for r in t.rotations() {
            covers.push((i, index[&r]));
        }
    }
    let names = trees
        .iter()
        .map(|t| {
            let mut s = String::new();
            t.render(&mut s);
            s
        })
        .collect();
    relabeled(trees.len(), &covers, names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(tamari(1).unwrap().len(), 2);
        assert_eq!(tamari(2).unwrap().len(), 5);
        assert_eq!(tamari(3).unwrap().len(), 14);
        assert_eq!(catalan(7), Some(429));
    }

    #[test]
    fn pentagon_shape() {
        let t = tamari(2).unwrap();
        assert_eq!(t.covers().len(), 5);
        assert_eq!(t.longest_chain_length(), 3);
        assert_eq!(t.name(t.bottom()), "(((..).).)");
        assert_eq!(t.name(t.top()), "(.(.(..)))");
    }
}
