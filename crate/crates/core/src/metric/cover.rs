//! Exact minimum vertex cover by branch and bound.

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

/// A minimum vertex cover, sorted.
pub fn minimum_vertex_cover(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut best: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let mut taken = Vec::new();
    branch(g, alive, &mut taken, &mut best);
    best.sort_unstable();
    best
}

fn live_degree(g: &Graph, alive: &FixedBitSet, v: usize) -> usize {
    g.neighbors(v).intersection(alive).count()
}

/// Applies the forced moves: drop isolated vertices, take the neighbour of a
/// degree-one vertex, take `u` when `N[v] ⊆ N[u]` for adjacent `u, v`.
fn reduce(g: &Graph, alive: &mut FixedBitSet, taken: &mut Vec<usize>) {
    'outer: loop {
        let live: Vec<usize> = alive.ones().collect();
        for &v in &live {
            let nbrs: Vec<usize> = g.neighbors(v).intersection(alive).collect();
            match nbrs.len() {
                0 => {
                    alive.set(v, false);
                    continue 'outer;
                }
                1 => {
                    alive.set(nbrs[0], false);
                    alive.set(v, false);
                    taken.push(nbrs[0]);
                    continue 'outer;
                }
                _ => {
                    for &u in &nbrs {
                        let dominated = nbrs
                            .iter()
                            .all(|&w| w == u || g.is_adjacent(u, w));
                        if dominated {
                            alive.set(u, false);
                            taken.push(u);
                            continue 'outer;
                        }
                    }
                }
            }
        }
        return;
    }
}

/// Size of a greedy maximal matching; every cover needs one endpoint per matched edge.
fn matching_bound(g: &Graph, alive: &FixedBitSet) -> usize {
    let mut free = alive.clone();
    let mut size = 0;
    for u in alive.ones() {
        if !free.contains(u) {
            continue;
        }
        if let Some(w) = g.neighbors(u).intersection(&free).next() {
            free.set(u, false);
            free.set(w, false);
            size += 1;
        }
    }
    size
}

fn branch(g: &Graph, mut alive: FixedBitSet, taken: &mut Vec<usize>, best: &mut Vec<usize>) {
    let mark = taken.len();
    reduce(g, &mut alive, taken);
    let pick = alive.ones().max_by_key(|&v| (live_degree(g, &alive, v), std::cmp::Reverse(v)));
    match pick {
        None => {
            if taken.len() < best.len() {
                *best = taken.clone();
            }
        }
        Some(v) => {
            if taken.len() + matching_bound(g, &alive) < best.len() {
                let nbrs: Vec<usize> = g.neighbors(v).intersection(&alive).collect();

                let mut with_v = alive.clone();
                with_v.set(v, false);
                taken.push(v);
                branch(g, with_v, taken, best);
                taken.pop();

                // Leaving v out forces every live neighbour in.
                let mut without_v = alive;
                without_v.set(v, false);
                for &w in &nbrs {
                    without_v.set(w, false);
                }
                let before = taken.len();
                taken.extend(nbrs);
                branch(g, without_v, taken, best);
                taken.truncate(before);
            }
        }
    }
    taken.truncate(mark);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, path};

    fn is_cover(g: &Graph, c: &[usize]) -> bool {
        g.edges().iter().all(|(u, v)| c.contains(u) || c.contains(v))
    }

    fn brute_cover_size(g: &Graph) -> usize {
        let n = g.order();
        (0u32..(1 << n))
            .filter(|&m| g.edges().iter().all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn known_covers() {
        assert_eq!(minimum_vertex_cover(&complete(5)).len(), 4);
        assert_eq!(minimum_vertex_cover(&path(3)), vec![1]);
        assert_eq!(minimum_vertex_cover(&cycle(5)).len(), 3);
        let two_k8 = disjoint_union(&complete(8), &complete(8));
        assert_eq!(minimum_vertex_cover(&two_k8).len(), 14);
        assert!(minimum_vertex_cover(&Graph::with_numeric_labels(3, &[]).unwrap()).is_empty());
    }

    #[test]
    fn matches_brute_force_on_petersen() {
        let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let inner: Vec<(usize, usize)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(inner).chain(spokes).collect();
        let g = Graph::with_numeric_labels(10, &edges).unwrap();
        let c = minimum_vertex_cover(&g);
        assert!(is_cover(&g, &c));
        assert_eq!(c.len(), brute_cover_size(&g));
    }
}
