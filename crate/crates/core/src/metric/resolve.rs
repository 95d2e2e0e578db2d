use std::collections::HashMap;

use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};

/// Strictly increasing list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Sorts and deduplicates `members`; rejects anything outside `0..order`.
    pub fn new(order: usize, mut members: Vec<usize>) -> Result<Self> {
        if let Some(&v) = members.iter().find(|&&v| v >= order) {
            return Err(Error::VertexOutOfRange { vertex: v, order });
        }
        members.sort_unstable();
        members.dedup();
        Ok(VertexSet(members))
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn all(order: usize) -> Self {
        VertexSet((0..order).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn with(&self, v: usize) -> VertexSet {
        let mut m = self.0.clone();
        if let Err(pos) = m.binary_search(&v) {
            m.insert(pos, v);
        }
        VertexSet(m)
    }
}

/// `r(v | R)`: distances from `v` to each member of `R`, in member order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MetricVector(pub Vec<u32>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ResolutionKind {
    Resolving,
    Doubly,
    Strong,
}

impl ResolutionKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ResolutionKind::Resolving => "RESOLVING",
            ResolutionKind::Doubly => "DOUBLY",
            ResolutionKind::Strong => "STRONG",
        }
    }
}

/// Verdict for a candidate set. A failing report always names the
/// lexicographically least pair `(u, v)`, `u < v`, that the set leaves unresolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionReport {
    pub kind: ResolutionKind,
    pub set: VertexSet,
    pub verdict: bool,
    pub witness: Option<(usize, usize)>,
}

fn check_vertex(d: &DistanceMatrix, v: usize) -> Result<()> {
    if v >= d.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: d.order(),
        });
    }
    Ok(())
}

pub fn metric_vector(d: &DistanceMatrix, v: usize, set: &VertexSet) -> Result<MetricVector> {
    check_vertex(d, v)?;
    if let Some(&r) = set.members().last() {
        check_vertex(d, r)?;
    }
    Ok(MetricVector(set.members().iter().map(|&r| d.get(v, r)).collect()))
}

/// Least pair `(u, v)` whose keys coincide. Keys define an equivalence, so
/// the least pair is the two smallest members of the class holding the
/// smallest collided vertex.
fn least_collision<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Option<(usize, usize)> {
    let mut first: HashMap<K, usize> = HashMap::new();
    let mut best: Option<(usize, usize)> = None;
    for (v, k) in keys.enumerate() {
        match first.get(&k) {
            Some(&u) => {
                if best.is_none_or(|b| (u, v) < b) {
                    best = Some((u, v));
                }
            }
            None => {
                first.insert(k, v);
            }
        }
    }
    // Each class records its first member `u`; the first `v` seen for that
    // class is its second smallest, and later `v`s never beat it.
    best
}

pub fn is_resolving(d: &DistanceMatrix, set: &VertexSet) -> ResolutionReport {
    let witness = least_collision((0..d.order()).map(|v| {
        set.members().iter().map(|&r| d.get(v, r)).collect::<Vec<_>>()
    }));
    ResolutionReport {
        kind: ResolutionKind::Resolving,
        set: set.clone(),
        verdict: witness.is_none(),
        witness,
    }
}

/// `d(u,x) - d(u,y) != d(v,x) - d(v,y)`.
pub fn doubly_resolves(d: &DistanceMatrix, x: usize, y: usize, u: usize, v: usize) -> bool {
    let g = |a: usize, b: usize| i64::from(d.get(a, b));
    g(u, x) - g(u, y) != g(v, x) - g(v, y)
}

/// `u` and `v` are doubly resolved by some pair of `S` iff `d(u, s) - d(v, s)`
/// is not constant over `s ∈ S`, i.e. iff the vectors `d(·, s) - d(·, s_0)` differ.
pub fn is_doubly_resolving(d: &DistanceMatrix, set: &VertexSet) -> ResolutionReport {
    let witness = match set.members().first() {
        None => (d.order() >= 2).then_some((0, 1)),
        Some(&s0) => least_collision((0..d.order()).map(|v| {
            let base = i64::from(d.get(v, s0));
            set.members()
                .iter()
                .map(|&s| i64::from(d.get(v, s)) - base)
                .collect::<Vec<_>>()
        })),
    };
    ResolutionReport {
        kind: ResolutionKind::Doubly,
        set: set.clone(),
        verdict: witness.is_none(),
        witness,
    }
}

fn add(a: u32, b: u32) -> u32 {
    if a == DistanceMatrix::INFINITE || b == DistanceMatrix::INFINITE {
        DistanceMatrix::INFINITE
    } else {
        a + b
    }
}

/// `u` lies on a shortest `v`–`w` path or `v` on a shortest `u`–`w` path.
pub fn strongly_resolves(d: &DistanceMatrix, w: usize, u: usize, v: usize) -> bool {
    let duv = d.get(u, v);
    d.get(w, u) == add(d.get(w, v), duv) || d.get(w, v) == add(d.get(w, u), duv)
}

pub fn is_strong_resolving(d: &DistanceMatrix, set: &VertexSet) -> ResolutionReport {
    let n = d.order();
    let witness = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .find(|&(u, v)| !set.members().iter().any(|&w| strongly_resolves(d, w, u, v)));
    ResolutionReport {
        kind: ResolutionKind::Strong,
        set: set.clone(),
        verdict: witness.is_none(),
        witness,
    }
}

impl ResolutionReport {
    /// Re-derives the witness with the pairwise predicates alone. True when
    /// the report is consistent: a failing witness is genuinely unresolved.
    pub fn witness_rechecks(&self, d: &DistanceMatrix) -> bool {
        let Some((u, v)) = self.witness else {
            return self.verdict;
        };
        if self.verdict || u == v {
            return false;
        }
        let s = self.set.members();
        match self.kind {
            ResolutionKind::Resolving => s.iter().all(|&r| d.get(u, r) == d.get(v, r)),
            ResolutionKind::Doubly => s
                .iter()
                .all(|&x| s.iter().all(|&y| x == y || !doubly_resolves(d, x, y, u, v))),
            ResolutionKind::Strong => s.iter().all(|&w| !strongly_resolves(d, w, u, v)),
        }
    }
}

/// Wire form shared by verdicts and dimension results:
/// `{"kind", "verdict", "witness", "dimension", "set", "checked"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub kind: ResolutionKind,
    pub verdict: bool,
    pub witness: Option<[usize; 2]>,
    pub dimension: usize,
    pub set: Vec<usize>,
    pub checked: u64,
}

impl ResolutionReport {
    pub fn to_report_json(&self) -> ReportJson {
        ReportJson {
            kind: self.kind,
            verdict: self.verdict,
            witness: self.witness.map(|(u, v)| [u, v]),
            dimension: self.set.len(),
            set: self.set.members().to_vec(),
            checked: 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;
    use crate::graph::{complete, dihedral_cayley, Graph};

    fn set_of(g: &Graph, labels: &[&str]) -> VertexSet {
        VertexSet::new(g.order(), labels.iter().map(|l| g.vertex(l).unwrap()).collect()).unwrap()
    }

    #[test]
    fn metric_vectors_for_worked_examples() {
        let g = dihedral_cayley(6).unwrap();
        let d = all_pairs_distances(&g);
        let r = set_of(&g, &["a", "a^2", "a^3", "ab", "a^2b", "a^3b"]);
        let v = metric_vector(&d, g.vertex("a^4").unwrap(), &r).unwrap();
        assert_eq!(v.0, vec![1, 2, 2, 1, 1, 1]);
        let r = set_of(&g, &["a", "a^2", "ab", "a^2b", "a^3b", "a^4b"]);
        let v = metric_vector(&d, g.vertex("a^3").unwrap(), &r).unwrap();
        assert_eq!(v.0, vec![2, 2, 1, 1, 1, 1]);
        // own position is zero
        let v = metric_vector(&d, g.vertex("a^2").unwrap(), &r).unwrap();
        assert_eq!(v.0[1], 0);
        assert!(metric_vector(&d, 12, &r).is_err());
    }

    #[test]
    fn resolving_examples() {
        let g = dihedral_cayley(6).unwrap();
        let d = all_pairs_distances(&g);
        let bad = is_resolving(&d, &set_of(&g, &["a", "a^2", "ab", "a^2b", "a^3b", "a^4b"]));
        assert!(!bad.verdict);
        assert_eq!(bad.witness, Some((g.vertex("a^3").unwrap(), g.vertex("a^6").unwrap())));
        assert!(bad.witness_rechecks(&d));
        let good = is_resolving(&d, &set_of(&g, &["a", "a^2", "a^3", "ab", "a^2b", "a^3b"]));
        assert!(good.verdict && good.witness.is_none());
        assert!(is_resolving(&d, &VertexSet::all(12)).verdict);
    }

    #[test]
    fn least_witness_is_lexicographic() {
        // K4 with R = {3}: vertices 0,1,2 all read (1); least pair is (0,1).
        let d = all_pairs_distances(&complete(4));
        let rep = is_resolving(&d, &VertexSet::new(4, vec![3]).unwrap());
        assert_eq!(rep.witness, Some((0, 1)));
    }

    #[test]
    fn doubly_examples() {
        for n in [4, 6, 8] {
            let g = dihedral_cayley(n).unwrap();
            let d = all_pairs_distances(&g);
            let a = g.vertex("a").unwrap();
            let ah = g.vertex(&format!("a^{}", n / 2)).unwrap();
            let ab = g.vertex("ab").unwrap();
            let an = g.vertex(&format!("a^{n}")).unwrap();
            assert!(doubly_resolves(&d, a, ah, a, ab));
            assert!(doubly_resolves(&d, a, ab, a, an));
            assert!(doubly_resolves(&d, a, ab, a, ah));
        }
        let g = dihedral_cayley(6).unwrap();
        let d = all_pairs_distances(&g);
        let r = set_of(&g, &["a", "a^2", "a^3", "ab", "a^2b", "a^3b"]);
        assert!(is_doubly_resolving(&d, &r).verdict);
        let k2 = all_pairs_distances(&complete(2));
        assert!(is_doubly_resolving(&k2, &VertexSet::all(2)).verdict);
    }

    #[test]
    fn pair_doubly_resolves_itself() {
        let g = dihedral_cayley(6).unwrap();
        let d = all_pairs_distances(&g);
        for x in 0..12 {
            for y in 0..12 {
                if x != y {
                    assert!(doubly_resolves(&d, x, y, x, y));
                }
            }
        }
    }

    #[test]
    fn strong_examples() {
        let n = 6;
        let g = dihedral_cayley(n).unwrap();
        let d = all_pairs_distances(&g);
        let u = g.vertex("a^6").unwrap();
        let v = g.vertex("a^3").unwrap();
        for w in 0..2 * n {
            assert!(strongly_resolves(&d, w, w, (w + 1) % (2 * n)));
        }
        let nset = set_of(&g, &["a^6", "a^3", "a^6b", "a^3b"]);
        for w in (0..2 * n).filter(|w| !nset.contains(*w)) {
            assert!(!strongly_resolves(&d, w, u, v), "w={w}");
        }
        let r = set_of(&g, &["a", "a^2", "a^3", "ab", "a^2b", "a^3b"]);
        let rep = is_strong_resolving(&d, &r);
        assert!(!rep.verdict);
        assert!(rep.witness_rechecks(&d));
        let s = VertexSet::new(2 * n, (0..2 * n).filter(|w| !nset.contains(*w)).collect()).unwrap();
        let rep = is_strong_resolving(&d, &s);
        assert!(!rep.verdict);
        assert!(rep.witness_rechecks(&d));
        assert!(is_strong_resolving(&d, &VertexSet::all(2 * n)).verdict);
    }

    #[test]
    fn report_json_shape() {
        let d = all_pairs_distances(&complete(3));
        let rep = is_resolving(&d, &VertexSet::new(3, vec![0]).unwrap());
        assert_eq!(
            serde_json::to_string(&rep.to_report_json()).unwrap(),
            r#"{"kind":"RESOLVING","verdict":false,"witness":[1,2],"dimension":1,"set":[0],"checked":1}"#
        );
    }

    #[test]
    fn vertex_set_canonicalizes() {
        let s = VertexSet::new(5, vec![3, 1, 3, 0]).unwrap();
        assert_eq!(s.members(), &[0, 1, 3]);
        assert!(VertexSet::new(3, vec![3]).is_err());
        assert_eq!(s.with(2).members(), &[0, 1, 2, 3]);
    }
}
