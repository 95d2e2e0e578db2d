use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `u` and `v` are mutually maximally distant when no neighbour of `v` is
/// farther from `u` than `v` is, and symmetrically.
pub fn mutually_maximally_distant(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> bool {
    let duv = d.get(u, v);
    u != v
        && g.neighbors(v).ones().all(|w| d.get(u, w) <= duv)
        && g.neighbors(u).ones().all(|w| d.get(v, w) <= duv)
}

/// Graph on the same vertices whose edges are the mutually maximally distant pairs.
/// Its minimum vertex covers are exactly the minimum strong resolving sets.
pub fn strong_resolving_graph(g: &Graph) -> Result<Graph> {
    let d = all_pairs_distances(g);
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| mutually_maximally_distant(g, &d, u, v))
        .collect();
    Graph::from_edges(n, &edges, g.labels().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, dihedral_cayley, path};

    #[test]
    fn complete_graph_is_its_own_strong_resolving_graph() {
        let k = complete(5);
        assert_eq!(strong_resolving_graph(&k).unwrap().edges(), k.edges());
    }

    #[test]
    fn path_endpoints() {
        assert_eq!(strong_resolving_graph(&path(3)).unwrap().edges(), vec![(0, 2)]);
        assert_eq!(strong_resolving_graph(&path(5)).unwrap().edges(), vec![(0, 4)]);
    }

    #[test]
    fn dihedral_strong_resolving_graph_is_two_cliques() {
        for n in [4, 6, 8] {
            let s = strong_resolving_graph(&dihedral_cayley(n).unwrap()).unwrap();
            for u in 0..2 * n {
                for v in (u + 1)..2 * n {
                    assert_eq!(s.is_adjacent(u, v), (u < n) == (v < n));
                }
            }
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::with_numeric_labels(3, &[(0, 1)]).unwrap();
        assert_eq!(strong_resolving_graph(&g), Err(Error::Disconnected));
    }
}
