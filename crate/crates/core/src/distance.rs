//! All-pairs shortest path distances by one BFS per source.

use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    /// Sentinel for pairs in different components.
    pub const INFINITE: u32 = u32::MAX;

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&Self::INFINITE)
    }

    /// Largest finite distance, or `None` if some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        if !self.is_connected() {
            return None;
        }
        Some(self.dist.iter().copied().max().unwrap_or(0))
    }

    /// Eccentricity of `v`; `None` when `v` does not reach everything.
    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        let row = self.row(v);
        if row.contains(&Self::INFINITE) {
            None
        } else {
            row.iter().copied().max()
        }
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut dist = vec![DistanceMatrix::INFINITE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for w in g.neighbors(u).ones() {
                if row[w] == DistanceMatrix::INFINITE {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { order: n, dist }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{dihedral_cayley, disjoint_union, path, complete};

    #[test]
    fn path_distances() {
        let d = all_pairs_distances(&path(4));
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.diameter(), Some(3));
        for v in 0..4 {
            assert_eq!(d.get(v, v), 0);
        }
    }

    #[test]
    fn dihedral_a3_a6() {
        let g = dihedral_cayley(6).unwrap();
        let d = all_pairs_distances(&g);
        let a = g.vertex("a").unwrap();
        let a3 = g.vertex("a^3").unwrap();
        let a6 = g.vertex("a^6").unwrap();
        assert_eq!(d.get(a3, a6), 1);
        assert_eq!(d.get(a, a3), 2);
        assert_eq!(d.diameter(), Some(2));
    }

    #[test]
    fn disconnected_sentinel() {
        let g = disjoint_union(&complete(2), &complete(1));
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), DistanceMatrix::INFINITE);
        assert_eq!(d.diameter(), None);
        assert_eq!(d.eccentricity(0), None);
        assert!(!d.is_connected());
    }
}
