//! Positive root posets of types A and B.

use super::CoxeterType;
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Positive roots with names, as coefficient vectors in the simple roots.
fn positive_roots(ty: CoxeterType, n: usize) -> Result<Vec<(Vec<u8>, String)>> {
    let mut roots = Vec::new();
    match ty {
        CoxeterType::A => {
            // e_i - e_j = α_i + ⋯ + α_{j-1}
            for i in 1..=n {
                for j in i + 1..=n + 1 {
                    let c = (1..=n).map(|k| (i <= k && k < j) as u8).collect();
                    roots.push((c, format!("e{i}-e{j}")));
                }
            }
        }
        CoxeterType::B => {
            // α_k = e_k - e_{k+1} for k < n, α_n = e_n
            for i in 1..=n {
                for j in i + 1..=n {
                    let c = (1..=n).map(|k| (i <= k && k < j) as u8).collect();
                    roots.push((c, format!("e{i}-e{j}")));
                }
                let c = (1..=n).map(|k| (i <= k) as u8).collect();
                roots.push((c, format!("e{i}")));
                for j in i + 1..=n {
                    let c = (1..=n)
                        .map(|k| match k {
                            k if k < i => 0,
                            k if k < j => 1,
                            _ => 2,
                        })
                        .collect();
                    roots.push((c, format!("e{i}+e{j}")));
                }
            }
        }
        CoxeterType::I2 => {
            return Err(Error::UnknownId("root poset of type I2".into()));
        }
    }
    Ok(roots)
}

/// The positive roots ordered by `α ≤ β` iff `β - α` is a nonnegative
/// combination of simple roots. Also returns root names.
pub fn root_poset(ty: CoxeterType, n: usize) -> Result<(Poset, Vec<String>)> {
    let roots = positive_roots(ty, n)?;
    let mut rel = Vec::new();
    for (a, (ca, _)) in roots.iter().enumerate() {
        for (b, (cb, _)) in roots.iter().enumerate() {
            if a != b && ca.iter().zip(cb).all(|(x, y)| x <= y) {
                rel.push((a, b));
            }
        }
    }
    let p = Poset::from_covers(roots.len(), &rel)?;
    Ok((p, roots.into_iter().map(|(_, s)| s).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::order_ideal_lattice;

    #[test]
    fn counts() {
        let (a2, _) = root_poset(CoxeterType::A, 2).unwrap();
        assert_eq!(a2.len(), 3);
        assert_eq!(a2.maximal_elements().len(), 1);
        let (b3, names) = root_poset(CoxeterType::B, 3).unwrap();
        assert_eq!(b3.len(), 9);
        // highest root e1+e2
        let top = b3.maximal_elements();
        assert_eq!(names[top[0]], "e1+e2");
        let (a3, _) = root_poset(CoxeterType::A, 3).unwrap();
        assert_eq!(order_ideal_lattice(&a3).unwrap().lattice.len(), 14);
        assert_eq!(order_ideal_lattice(&b3).unwrap().lattice.len(), 20);
    }
}
