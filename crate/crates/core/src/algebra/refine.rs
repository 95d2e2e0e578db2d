//! Ordered colour partitions, equitable refinement, individualization, and
//! the backtracking search for a colour-preserving isomorphism between two
//! coloured graphs. The automorphism and isomorphism routines both run on it.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use crate::graph::Graph;

/// Colour of each vertex, as ranks `0..k`. Rank order is part of the
/// partition: isomorphisms must map colour `c` onto colour `c`.
pub(crate) type Coloring = Vec<u32>;

fn compress<K: Ord + Clone>(keys: &[K]) -> (Coloring, Vec<(K, usize)>) {
    let mut classes: BTreeMap<K, usize> = BTreeMap::new();
    for k in keys {
        *classes.entry(k.clone()).or_insert(0) += 1;
    }
    let rank: BTreeMap<&K, u32> = classes.keys().enumerate().map(|(i, k)| (k, i as u32)).collect();
    let colors = keys.iter().map(|k| rank[k]).collect();
    (colors, classes.into_iter().collect())
}

pub(crate) fn color_count(c: &Coloring) -> usize {
    c.iter().max().map_or(0, |&m| m as usize + 1)
}

#[cfg(test)]
pub(crate) fn is_discrete(c: &Coloring) -> bool {
    color_count(c) == c.len()
}

/// Refines to the coarsest equitable partition below `colors`. New colours
/// are ranked by (old colour, neighbour colour counts), which is invariant
/// under relabelling, and the trace hash summarises every round so that two
/// refinements can only correspond if their traces agree.
pub(crate) fn refine(g: &Graph, colors: &Coloring) -> (Coloring, u64) {
    let mut colors = colors.clone();
    let mut hasher = DefaultHasher::new();
    let mut k = color_count(&colors);
    loop {
        let sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..g.order())
            .map(|v| {
                let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
                for w in g.neighbors(v).ones() {
                    *counts.entry(colors[w]).or_insert(0) += 1;
                }
                (colors[v], counts.into_iter().collect())
            })
            .collect();
        let (next, classes) = compress(&sigs);
        classes.hash(&mut hasher);
        let next_k = color_count(&next);
        colors = next;
        if next_k == k {
            return (colors, hasher.finish());
        }
        k = next_k;
    }
}

/// Splits the cell of `v` into `{v}` followed by the rest of the cell.
pub(crate) fn individualize(colors: &Coloring, v: usize) -> Coloring {
    let cv = colors[v];
    let keys: Vec<(u32, bool)> = colors
        .iter()
        .enumerate()
        .map(|(w, &c)| (c, c == cv && w != v))
        .collect();
    compress(&keys).0
}

/// First colour with more than one vertex.
pub(crate) fn target_cell(colors: &Coloring) -> Option<u32> {
    let mut sizes = vec![0usize; color_count(colors)];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    sizes.iter().position(|&s| s > 1).map(|c| c as u32)
}

pub(crate) fn cell_members(colors: &Coloring, c: u32) -> Vec<usize> {
    colors.iter().enumerate().filter(|&(_, &x)| x == c).map(|(v, _)| v).collect()
}

/// A bijection `p` with `colors_h[p[v]] == colors_g[v]` (after refinement)
/// that maps `g` onto `h`, or `None` if there is none.
pub(crate) fn find_isomorphism(
    g: &Graph,
    colors_g: &Coloring,
    h: &Graph,
    colors_h: &Coloring,
) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let (cg, tg) = refine(g, colors_g);
    let (ch, th) = refine(h, colors_h);
    if tg != th || color_count(&cg) != color_count(&ch) {
        return None;
    }
    match target_cell(&cg) {
        None => {
            let mut inverse_h = vec![0usize; h.order()];
            for (w, &c) in ch.iter().enumerate() {
                inverse_h[c as usize] = w;
            }
            let perm: Vec<usize> = cg.iter().map(|&c| inverse_h[c as usize]).collect();
            g.is_isomorphism(h, &perm).then_some(perm)
        }
        Some(cell) => {
            let v = cell_members(&cg, cell)[0];
            let fixed_g = individualize(&cg, v);
            cell_members(&ch, cell)
                .into_iter()
                .find_map(|w| find_isomorphism(g, &fixed_g, h, &individualize(&ch, w)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn refinement_splits_path_by_degree() {
        let (c, _) = refine(&path(4), &vec![0; 4]);
        assert_eq!(c, vec![0, 1, 1, 0]);
        let (c, _) = refine(&cycle(6), &vec![0; 6]);
        assert_eq!(c, vec![0; 6]);
    }

    #[test]
    fn individualize_places_vertex_first() {
        assert_eq!(individualize(&vec![0, 1, 1, 0], 3), vec![1, 2, 2, 0]);
        assert_eq!(target_cell(&vec![0, 1, 1, 2]), Some(1));
        assert!(is_discrete(&vec![2, 0, 1]));
    }

    #[test]
    fn finds_relabelled_copy() {
        let g = cycle(7);
        let perm = [3, 6, 0, 2, 5, 1, 4];
        let h = g.permuted(&perm);
        let p = find_isomorphism(&g, &vec![0; 7], &h, &vec![0; 7]).unwrap();
        assert!(g.is_isomorphism(&h, &p));
        assert!(find_isomorphism(&g, &vec![0; 7], &path(7), &vec![0; 7]).is_none());
    }
}
