use serde::Serialize;

use super::poly::integer_spectrum;
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `b_0, ..., b_{d-1}` and `c_1, ..., c_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

/// Two ordered pairs at the same distance `r` whose neighbour counts differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DrgWitness {
    pub r: u32,
    pub u: usize,
    pub v: usize,
    pub u2: usize,
    pub v2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceRegularityReport {
    pub verdict: bool,
    pub intersection_array: Option<IntersectionArray>,
    pub witness: Option<DrgWitness>,
}

/// `(|Γ_{r+1}(v) ∩ Γ_1(u)|, |Γ_{r-1}(v) ∩ Γ_1(u)|)` for `r = d(u, v)`.
pub(crate) fn step_counts(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> (usize, usize) {
    let r = d.get(u, v);
    let mut farther = 0;
    let mut closer = 0;
    for w in g.neighbors(u).ones() {
        let dw = d.get(w, v);
        if dw == r + 1 {
            farther += 1;
        } else if r > 0 && dw == r - 1 {
            closer += 1;
        }
    }
    (farther, closer)
}

/// Counts `b_r`, `c_r` over every ordered pair. An irregular graph fails
/// first, with a witness at `r = 0` (where `b_0` is the degree).
pub fn distance_regularity_check(g: &Graph) -> Result<DistanceRegularityReport> {
    let d = all_pairs_distances(g);
    let diameter = d.diameter().ok_or(Error::Disconnected)? as usize;
    let n = g.order();
    let degrees = g.degrees();
    if let Some(u2) = (1..n).find(|&v| degrees[v] != degrees[0]) {
        return Ok(DistanceRegularityReport {
            verdict: false,
            intersection_array: None,
            witness: Some(DrgWitness { r: 0, u: 0, v: 0, u2, v2: u2 }),
        });
    }
    let mut seen: Vec<Option<(usize, usize, usize, usize)>> = vec![None; diameter + 1];
    for u in 0..n {
        for v in 0..n {
            let r = d.get(u, v) as usize;
            let (b, c) = step_counts(g, &d, u, v);
            match seen[r] {
                None => seen[r] = Some((b, c, u, v)),
                Some((b0, c0, u0, v0)) if (b0, c0) != (b, c) => {
                    return Ok(DistanceRegularityReport {
                        verdict: false,
                        intersection_array: None,
                        witness: Some(DrgWitness {
                            r: r as u32,
                            u: u0,
                            v: v0,
                            u2: u,
                            v2: v,
                        }),
                    });
                }
                Some(_) => {}
            }
        }
    }
    let counts: Vec<(usize, usize)> = seen.iter().map(|s| s.map(|(b, c, _, _)| (b, c)).unwrap_or((0, 0))).collect();
    Ok(DistanceRegularityReport {
        verdict: true,
        intersection_array: Some(IntersectionArray {
            b: counts[..diameter].iter().map(|&(b, _)| b).collect(),
            c: counts[1..].iter().map(|&(_, c)| c).collect(),
        }),
        witness: None,
    })
}

impl DrgWitness {
    /// Recounts both pairs and confirms they sit at distance `r` with different counts.
    pub fn rechecks(&self, g: &Graph) -> bool {
        let d = all_pairs_distances(g);
        d.get(self.u, self.v) == self.r
            && d.get(self.u2, self.v2) == self.r
            && step_counts(g, &d, self.u, self.v) != step_counts(g, &d, self.u2, self.v2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EigenvalueDiameter {
    pub count: usize,
    pub diameter: u32,
    pub consistent_with_drg: bool,
}

/// A distance-regular graph of diameter `d` has exactly `d + 1` distinct eigenvalues.
pub fn distinct_eigenvalue_count_vs_diameter(g: &Graph) -> Result<EigenvalueDiameter> {
    let diameter = all_pairs_distances(g).diameter().ok_or(Error::Disconnected)?;
    let count = integer_spectrum(g).distinct_eigenvalues();
    Ok(EigenvalueDiameter {
        count,
        diameter,
        consistent_with_drg: count == diameter as usize + 1,
    })
}
