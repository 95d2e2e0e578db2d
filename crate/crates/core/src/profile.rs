//! Structural statistics: diameter, regularity, bipartiteness, clique number.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::distance::all_pairs_distances;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphProfile {
    /// `None` when the graph is disconnected.
    pub diameter: Option<u32>,
    pub regular_valency: Option<usize>,
    pub bipartite: bool,
    pub clique_number: usize,
    pub edge_count: usize,
}

pub fn profile(g: &Graph) -> GraphProfile {
    let degrees = g.degrees();
    let regular_valency = match degrees.first() {
        Some(&d0) if degrees.iter().all(|&d| d == d0) => Some(d0),
        _ => None,
    };
    GraphProfile {
        diameter: all_pairs_distances(g).diameter(),
        regular_valency,
        bipartite: two_coloring(g).is_some(),
        clique_number: maximum_clique(g).len(),
        edge_count: g.edge_count(),
    }
}

/// A proper 2-colouring, or `None` if the graph has an odd cycle.
pub fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let cu = color[u].unwrap();
            for w in g.neighbors(u).ones() {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        stack.push(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

/// Lexicographically least triangle `(u, v, w)`, if any.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for u in 0..g.order() {
        for v in g.neighbors(u).ones().filter(|&v| v > u) {
            let mut common = g.neighbors(u).clone();
            common.intersect_with(g.neighbors(v));
            if let Some(w) = common.ones().find(|&w| w > v) {
                return Some([u, v, w]);
            }
        }
    }
    None
}

/// Exact maximum clique, sorted. Branch and bound with a greedy colouring bound.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut best = Vec::new();
    let mut current = Vec::new();
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    expand(g, &mut current, candidates, &mut best);
    best.sort_unstable();
    best
}

fn expand(g: &Graph, current: &mut Vec<usize>, mut candidates: FixedBitSet, best: &mut Vec<usize>) {
    let (order, bounds) = color_order(g, &candidates);
    // Visit vertices with the largest colour bound first; prune once the bound can't beat best.
    for (&v, &bound) in order.iter().zip(bounds.iter()).rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        let mut next = candidates.clone();
        next.intersect_with(g.neighbors(v));
        if next.count_ones(..) == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        candidates.set(v, false);
    }
}

/// Greedy sequential colouring; returns vertices in colour order with the
/// running colour count, an upper bound on the clique size among the prefix.
fn color_order(g: &Graph, candidates: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = candidates.clone();
    let mut order = Vec::with_capacity(candidates.count_ones(..));
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut color = 0;
    while uncolored.count_ones(..) > 0 {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.ones().next() {
            uncolored.set(v, false);
            avail.set(v, false);
            avail.difference_with(g.neighbors(v));
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cocktail_party, complete, cycle, dihedral_cayley, Graph};

    /// Brute force over all vertex subsets.
    fn clique_number_brute(g: &Graph) -> usize {
        let n = g.order();
        (0u32..(1 << n))
            .filter(|&mask| {
                let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.is_adjacent(u, v)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn dihedral_profile() {
        for n in (4..=12).step_by(2) {
            let p = profile(&dihedral_cayley(n).unwrap());
            assert_eq!(p.diameter, Some(2));
            assert!(!p.bipartite);
            assert_eq!(p.regular_valency, Some(n + 1));
            assert_eq!(p.clique_number, 4);
        }
    }

    #[test]
    fn small_profiles() {
        let c4 = profile(&cycle(4));
        assert_eq!((c4.diameter, c4.bipartite, c4.regular_valency, c4.clique_number), (Some(2), true, Some(2), 2));
        let oct = cocktail_party(3).unwrap();
        let p = profile(&oct);
        assert_eq!(p.diameter, Some(2));
        assert_eq!(p.clique_number, clique_number_brute(&oct));
        assert_eq!(p.clique_number, 3);
        assert_eq!(profile(&complete(5)).clique_number, 5);
    }

    #[test]
    fn clique_matches_brute_force_on_dihedral() {
        for n in [4, 6] {
            let g = dihedral_cayley(n).unwrap();
            let clique = maximum_clique(&g);
            assert_eq!(clique.len(), clique_number_brute(&g));
            for (i, &u) in clique.iter().enumerate() {
                for &v in &clique[i + 1..] {
                    assert!(g.is_adjacent(u, v));
                }
            }
        }
    }

    #[test]
    fn triangle_witness() {
        assert_eq!(find_triangle(&cycle(4)), None);
        assert_eq!(find_triangle(&complete(3)), Some([0, 1, 2]));
    }
}
