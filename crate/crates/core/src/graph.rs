//! Simple undirected graphs stored as bit rows, plus the constructors for
//! the dihedral Cayley family and its companions.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};

/// Immutable simple graph. `adj[u]` is the neighbour row of `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)], labels: Vec<String>) -> Result<Self> {
        if labels.len() != order {
            return Err(Error::InvalidParameter(format!(
                "expected {order} labels, got {}",
                labels.len()
            )));
        }
        let mut seen = HashSet::with_capacity(order);
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut adj = vec![FixedBitSet::with_capacity(order); order];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels })
    }

    /// Same as [`Graph::from_edges`] with labels `0..order`.
    pub fn with_numeric_labels(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges(order, edges, (0..order).map(|i| i.to_string()).collect())
    }

    fn from_predicate(labels: Vec<String>, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let order = labels.len();
        let mut adj = vec![FixedBitSet::with_capacity(order); order];
        for u in 0..order {
            for v in (u + 1)..order {
                if adjacent(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Graph { adj, labels }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Index of the vertex carrying `label`.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// `N[v]`, the neighbourhood of `v` together with `v`.
    pub fn closed_neighborhood(&self, v: usize) -> FixedBitSet {
        let mut row = self.adj[v].clone();
        row.insert(v);
        row
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for w in self.adj[u].ones() {
                if !seen.put(w) {
                    stack.push(w);
                }
            }
        }
        seen.count_ones(..) == n
    }

    /// Vertex sets of the connected components, each sorted, ordered by least member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.put(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].ones() {
                    if !seen.put(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut labels = vec![String::new(); n];
        for u in 0..n {
            labels[perm[u]] = self.labels[u].clone();
            for v in self.adj[u].ones() {
                adj[perm[u]].insert(perm[v]);
            }
        }
        Graph { adj, labels }
    }

    /// True iff `perm` is a bijection mapping edges onto edges of `other`
    /// and non-edges onto non-edges.
    pub fn is_isomorphism(&self, other: &Graph, perm: &[usize]) -> bool {
        let n = self.order();
        if other.order() != n || perm.len() != n {
            return false;
        }
        let mut hit = FixedBitSet::with_capacity(n);
        for &p in perm {
            if p >= n || hit.put(p) {
                return false;
            }
        }
        (0..n).all(|u| ((u + 1)..n).all(|v| self.is_adjacent(u, v) == other.is_adjacent(perm[u], perm[v])))
    }
}

fn check_dihedral_n(n: usize) -> Result<()> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "n must be an even integer >= 4, got {n}"
        )));
    }
    Ok(())
}

/// `Cay(D_2n, Ψ)` with `Ψ = {ab, a^2b, ..., a^{n-1}b, b} ∪ {a^{n/2}}`.
///
/// Vertex `i < n` is `a^{i+1}` and vertex `n + i` is `a^{i+1}b`, so the
/// identity `a^n` sits at index `n - 1`.
pub fn dihedral_cayley(n: usize) -> Result<Graph> {
    check_dihedral_n(n)?;
    let half_turn = DihedralElement::new(n, n / 2, false);
    let in_connection_set = |g: DihedralElement| g.refl || g == half_turn;
    let elems: Vec<DihedralElement> = DihedralElement::all(n).collect();
    let labels = elems.iter().map(|e| e.to_string()).collect();
    Ok(Graph::from_predicate(labels, |u, v| {
        in_connection_set(elems[u].inverse().mul(elems[v]))
    }))
}

/// Toeplitz graph `T_N<W>`: vertices `1..=N`, `i ~ j` iff `|i - j| ∈ W`.
pub fn toeplitz(order: usize, window: &[usize]) -> Result<Graph> {
    if order < 2 {
        return Err(Error::InvalidParameter(format!("Toeplitz order must be >= 2, got {order}")));
    }
    if window.is_empty() {
        return Err(Error::InvalidParameter("Toeplitz window must be non-empty".into()));
    }
    if let Some(&w) = window.iter().find(|&&w| w == 0 || w >= order) {
        return Err(Error::InvalidParameter(format!(
            "window entry {w} outside [1, {}]",
            order - 1
        )));
    }
    let offsets: BTreeSet<usize> = window.iter().copied().collect();
    let labels = (1..=order).map(|i| i.to_string()).collect();
    Ok(Graph::from_predicate(labels, |u, v| offsets.contains(&(v - u))))
}

/// The window under which `T_2n<W>` matches the dihedral Cayley graph:
/// every odd offset in `[1, 2n-1]` plus the offset `n`.
pub fn dihedral_toeplitz_window(n: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (1..2 * n).filter(|d| d % 2 == 1).collect();
    w.push(n);
    w.sort_unstable();
    w.dedup();
    w
}

/// Circulant `Cay(Z_n, S)`. `S` must avoid 0 and be closed under negation.
pub fn circulant(n: usize, connection: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("circulant order must be >= 3, got {n}")));
    }
    let set: BTreeSet<usize> = connection.iter().copied().collect();
    if let Some(&s) = set.iter().find(|&&s| s == 0 || s >= n) {
        return Err(Error::InvalidParameter(format!("residue {s} outside [1, {}]", n - 1)));
    }
    if let Some(&s) = set.iter().find(|&&s| !set.contains(&(n - s))) {
        return Err(Error::InvalidParameter(format!(
            "connection set not closed under negation: {s} present but {} missing",
            n - s
        )));
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    Ok(Graph::from_predicate(labels, |u, v| set.contains(&(v - u))))
}

/// `S_k = {1, n-1, 2, n-2, ..., k, n-k}` with `k = n/2 - 1`.
pub fn cocktail_circulant_set(n: usize) -> Vec<usize> {
    let k = (n / 2).saturating_sub(1);
    let mut s: Vec<usize> = (1..=k).flat_map(|i| [i, n - i]).collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// Cocktail party graph `CP(m)`: `K_2m` minus the matching `{2t, 2t+1}`.
pub fn cocktail_party(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParameter("cocktail party graph needs m >= 1".into()));
    }
    let labels = (0..2 * m).map(|i| i.to_string()).collect();
    Ok(Graph::from_predicate(labels, |u, v| u / 2 != v / 2))
}

pub fn complete(m: usize) -> Graph {
    Graph::from_predicate((0..m).map(|i| i.to_string()).collect(), |_, _| true)
}

/// Path on `m` vertices labelled `1..=m`.
pub fn path(m: usize) -> Graph {
    Graph::from_predicate((1..=m).map(|i| i.to_string()).collect(), |u, v| v == u + 1)
}

pub fn cycle(m: usize) -> Graph {
    Graph::from_predicate((0..m).map(|i| i.to_string()).collect(), |u, v| {
        v == u + 1 || (u == 0 && v + 1 == m && m > 2)
    })
}

pub fn complement(g: &Graph) -> Graph {
    Graph::from_predicate(g.labels.clone(), |u, v| !g.is_adjacent(u, v))
}

/// Disjoint union; labels get `.0` / `.1` suffixes.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let offset = g.order();
    let labels = g
        .labels
        .iter()
        .map(|l| format!("{l}.0"))
        .chain(h.labels.iter().map(|l| format!("{l}.1")))
        .collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .chain(h.edges().into_iter().map(|(u, v)| (u + offset, v + offset)))
        .collect();
    Graph::from_edges(offset + h.order(), &edges, labels).expect("union of valid graphs is valid")
}

/// JSON graph document: `{"order", "labels", "edges"}` with sorted `u < v` edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub order: usize,
    pub labels: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            order: g.order(),
            labels: g.labels.clone(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(doc: GraphJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(doc.order, &edges, doc.labels)
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph json")
    }

    /// DIMACS-like text: `p <order>` then `e <u> <v>` per edge, 0-indexed.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {}\n", self.order());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {u} {v}");
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut order = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: &str| Error::Parse {
                line: line_no,
                msg: msg.to_string(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["p", n] if order.is_none() => {
                    order = Some(n.parse::<usize>().map_err(|_| parse_err("bad order"))?);
                }
                ["p", ..] => return Err(parse_err("duplicate or malformed header")),
                ["e", u, v] => {
                    if order.is_none() {
                        return Err(parse_err("edge before header"));
                    }
                    let u = u.parse().map_err(|_| parse_err("bad endpoint"))?;
                    let v = v.parse().map_err(|_| parse_err("bad endpoint"))?;
                    edges.push((u, v));
                }
                _ => return Err(parse_err("expected `p <order>` or `e <u> <v>`")),
            }
        }
        let order = order.ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        Graph::with_numeric_labels(order, &edges)
    }

    /// Graphviz DOT, undirected, labels as node names.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for l in &self.labels {
            let _ = writeln!(out, "  \"{l}\";");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.labels[u], self.labels[v]);
        }
        out.push_str("}\n");
        out
    }
}
