use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::poly::characteristic_polynomial;
use super::refine::{cell_members, find_isomorphism, individualize, refine, target_cell, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismReport {
    /// Strong generating set along the individualization chain; each entry
    /// maps vertex `v` to `perm[v]`.
    pub generators: Vec<Vec<usize>>,
    pub order: BigUint,
    pub transitive: bool,
}

impl Serialize for AutomorphismReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AutomorphismReport", 3)?;
        st.serialize_field("order", &self.order.to_string())?;
        st.serialize_field("generators", &self.generators)?;
        st.serialize_field("transitive", &self.transitive)?;
        st.end()
    }
}

/// Orbit of `v` under the group generated by `gens`.
fn orbit(v: usize, gens: &[Vec<usize>], order: usize) -> FixedBitSet {
    let mut seen = FixedBitSet::with_capacity(order);
    seen.insert(v);
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for p in gens {
            if !seen.put(p[x]) {
                stack.push(p[x]);
            }
        }
    }
    seen
}

/// Order of the stabiliser of the current colouring, by orbit–stabiliser
/// down the individualization chain. Generators found at every level are
/// appended to `gens`.
fn stabilizer_chain(g: &Graph, colors: &Coloring, gens: &mut Vec<Vec<usize>>) -> BigUint {
    let (refined, _) = refine(g, colors);
    let Some(cell) = target_cell(&refined) else {
        return BigUint::one();
    };
    let members = cell_members(&refined, cell);
    let v = members[0];
    let fixed_v = individualize(&refined, v);
    let below = stabilizer_chain(g, &fixed_v, gens);

    let mut reach = orbit(v, gens, g.order());
    for &w in &members[1..] {
        if reach.contains(w) {
            continue;
        }
        if let Some(p) = find_isomorphism(g, &fixed_v, g, &individualize(&refined, w)) {
            debug_assert!(g.is_isomorphism(g, &p));
            gens.push(p);
            reach = orbit(v, gens, g.order());
        }
    }
    below * BigUint::from(reach.count_ones(..))
}

pub fn automorphism_group(g: &Graph) -> AutomorphismReport {
    let n = g.order();
    let mut generators = Vec::new();
    let order = stabilizer_chain(g, &vec![0; n], &mut generators);
    for p in &generators {
        assert!(g.is_isomorphism(g, p), "non-automorphism produced by search");
    }
    let transitive = n == 0 || orbit(0, &generators, n).count_ones(..) == n;
    AutomorphismReport {
        generators,
        order,
        transitive,
    }
}

pub fn is_vertex_transitive(g: &Graph) -> bool {
    automorphism_group(g).transitive
}

/// Size of the group generated by `gens` by explicit enumeration, or
/// `None` once more than `limit` elements have been produced.
pub fn group_order_by_closure(order: usize, gens: &[Vec<usize>], limit: usize) -> Option<usize> {
    assert!(order <= usize::from(u16::MAX), "closure limited to order {}", u16::MAX);
    let identity: Vec<u16> = (0..order as u16).collect();
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(x) = frontier.pop() {
        for p in gens {
            let y: Vec<u16> = x.iter().map(|&i| p[usize::from(i)] as u16).collect();
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    Some(seen.len())
}

/// Counts automorphisms by testing all `order!` permutations.
pub fn automorphism_order_by_sweep(g: &Graph) -> Result<u64> {
    const MAX_SWEEP: usize = 10;
    let n = g.order();
    if n > MAX_SWEEP {
        return Err(Error::InvalidParameter(format!(
            "permutation sweep limited to order {MAX_SWEEP}, got {n}"
        )));
    }
    Ok((0..n).permutations(n).filter(|p| g.is_isomorphism(g, p)).count() as u64)
}

/// Order of `Z_2 wr Sym(n/2) wr Sym(2)`: `2 · (2^{n/2} · (n/2)!)^2`.
pub fn predicted_aut_order(n: usize) -> Result<BigUint> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "n must be an even integer >= 4, got {n}"
        )));
    }
    let m = n / 2;
    let factorial: BigUint = (1..=m).map(BigUint::from).product();
    let inner = (BigUint::one() << m) * factorial;
    Ok(BigUint::from(2u32) * &inner * &inner)
}

/// A verified isomorphism `g → h`, or `None`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh || characteristic_polynomial(g) != characteristic_polynomial(h) {
        return None;
    }
    let n = g.order();
    let perm = find_isomorphism(g, &vec![0; n], h, &vec![0; n])?;
    g.is_isomorphism(h, &perm).then_some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        cocktail_circulant_set, circulant, cocktail_party, complement, complete, cycle,
        dihedral_cayley, dihedral_toeplitz_window, disjoint_union, path, toeplitz,
    };

    #[test]
    fn predicted_orders() {
        assert_eq!(predicted_aut_order(4).unwrap(), BigUint::from(128u32));
        assert_eq!(predicted_aut_order(6).unwrap(), BigUint::from(4608u32));
        assert_eq!(predicted_aut_order(8).unwrap(), BigUint::from(294912u32));
        assert!(predicted_aut_order(5).is_err());
        assert!(predicted_aut_order(2).is_err());
    }

    #[test]
    fn small_groups() {
        for m in 1..=6 {
            let k: u64 = (1..=m as u64).product();
            assert_eq!(automorphism_group(&complete(m)).order, BigUint::from(k));
        }
        assert_eq!(automorphism_group(&cycle(7)).order, BigUint::from(14u32));
        assert_eq!(automorphism_group(&path(5)).order, BigUint::from(2u32));
        assert!(!is_vertex_transitive(&path(3)));
        assert!(is_vertex_transitive(&cocktail_party(3).unwrap()));
        assert_eq!(automorphism_group(&cocktail_party(3).unwrap()).order, BigUint::from(48u32));
    }

    #[test]
    fn dihedral_order_matches_sweep_at_4() {
        let g = dihedral_cayley(4).unwrap();
        let rep = automorphism_group(&g);
        assert_eq!(rep.order, BigUint::from(128u32));
        assert_eq!(automorphism_order_by_sweep(&g).unwrap(), 128);
        assert_eq!(group_order_by_closure(8, &rep.generators, 1_000_000), Some(128));
        assert!(rep.transitive);
    }

    #[test]
    fn sweep_agrees_on_small_graphs() {
        for g in [cycle(6), path(4), cocktail_party(2).unwrap(), complete(4)] {
            let rep = automorphism_group(&g);
            assert_eq!(rep.order, BigUint::from(automorphism_order_by_sweep(&g).unwrap()));
        }
        assert!(automorphism_order_by_sweep(&complete(11)).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        for n in [4, 6] {
            let lam = dihedral_cayley(n).unwrap();
            let t = toeplitz(2 * n, &dihedral_toeplitz_window(n)).unwrap();
            let p = are_isomorphic(&lam, &t).unwrap();
            assert!(lam.is_isomorphism(&t, &p));
            let cp = cocktail_party(n / 2).unwrap();
            assert!(are_isomorphic(&complement(&lam), &disjoint_union(&cp, &cp)).is_some());
            assert!(are_isomorphic(&cp, &circulant(n, &cocktail_circulant_set(n)).unwrap()).is_some());
        }
        assert!(are_isomorphic(&cycle(6), &disjoint_union(&cycle(3), &cycle(3))).is_none());
        assert!(are_isomorphic(&path(4), &cycle(4)).is_none());
    }

    #[test]
    fn json_shape() {
        let rep = automorphism_group(&complete(2));
        assert_eq!(
            serde_json::to_string(&rep).unwrap(),
            r#"{"order":"2","generators":[[1,0]],"transitive":true}"#
        );
    }
}
