//! The fixed battery of claims about `Λ(n) = Cay(D_2n, Ψ)`, each run with a
//! certificate, and the two worked examples on `Λ(6)`.

use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    are_isomorphic, automorphism_group, distance_regularity_check,
    distinct_eigenvalue_count_vs_diameter, group_order_by_closure, integer_spectrum,
    predicted_aut_order,
};
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{
    circulant, cocktail_circulant_set, cocktail_party, complement, dihedral_cayley,
    dihedral_toeplitz_window, disjoint_union, toeplitz, Graph,
};
use crate::metric::{
    is_doubly_resolving, is_resolving, is_strong_resolving, metric_vector, refute_size,
    strong_metric_dimension_brute_force, strong_metric_dimension_by_cover, MetricVector,
    ReportJson, ResolutionKind, ResolutionReport, VertexSet,
};
use crate::profile::{find_triangle, maximum_clique, profile};

/// Large enough for the exhaustive lower bounds on `β` and `ψ` up to
/// `n = 8` and the brute-force strong search up to `n = 6`.
pub const DEFAULT_EXHAUSTIVE_CAP: u64 = 20_000;

/// Generator lists above this group order are not closed explicitly.
const CLOSURE_LIMIT: usize = 1_000_000;

pub const CLAIM_IDS: [&str; 16] = [
    "DIAMETER2",
    "NONBIPARTITE",
    "REGULAR",
    "CLIQUE4",
    "SPECTRUM",
    "FOUR_EIGENVALUES",
    "NOT_DRG",
    "TOEPLITZ_ISO",
    "COMPLEMENT_ISO",
    "CIRCULANT_ISO",
    "AUT_ORDER",
    "VERTEX_TRANSITIVE",
    "BETA_EQ_N",
    "PSI_EQ_N",
    "R_NOT_STRONG",
    "SDIM_EQ_2N_MINUS_2",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub claim_id: &'static str,
    pub statement: String,
    pub verdict: Verdict,
    pub certificate: Value,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub n: usize,
    pub exhaustive_cap: u64,
    pub claims: Vec<Claim>,
}

impl ClaimReport {
    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.claim_id == id)
    }

    /// 0 when everything passed, 1 on any failure, 2 when something was
    /// skipped and nothing failed.
    pub fn exit_code(&self) -> i32 {
        if self.claims.iter().any(|c| c.verdict == Verdict::Fail) {
            1
        } else if self.claims.iter().any(|c| c.verdict == Verdict::Skipped) {
            2
        } else {
            0
        }
    }

    /// JSON document. Timings are dropped unless asked for, so repeated
    /// runs produce identical bytes.
    pub fn to_json(&self, with_timings: bool) -> Value {
        let claims: Vec<Value> = self
            .claims
            .iter()
            .map(|c| {
                let mut v = json!({
                    "claim_id": c.claim_id,
                    "statement": c.statement,
                    "verdict": c.verdict,
                    "certificate": c.certificate,
                });
                if with_timings {
                    v["elapsed_ms"] = json!(c.elapsed_ms);
                }
                v
            })
            .collect();
        json!({ "n": self.n, "exhaustive_cap": self.exhaustive_cap, "claims": claims })
    }
}

/// `{a, ..., a^{n/2}; ab, ..., a^{n/2}b}`.
pub fn half_resolving_set(n: usize) -> VertexSet {
    let members = (0..n / 2).chain(n..n + n / 2).collect();
    VertexSet::new(2 * n, members).expect("indices below 2n")
}

/// `{a^n, a^{n/2}; a^n b, a^{n/2} b}`, a maximum clique of `Λ(n)`.
pub fn twin_clique(n: usize) -> VertexSet {
    VertexSet::new(2 * n, vec![n - 1, n / 2 - 1, 2 * n - 1, n + n / 2 - 1]).expect("indices below 2n")
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Worst-case candidate count of the ascending brute-force strong search.
pub fn strong_brute_force_budget(n: usize) -> u64 {
    let order = 2 * n as u64;
    (1..=order - 2).map(|k| binomial(order, k)).sum()
}

struct Outcome {
    verdict: Verdict,
    certificate: Value,
}

fn pass_if(ok: bool, certificate: Value) -> Outcome {
    Outcome {
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        certificate,
    }
}

struct Context {
    n: usize,
    cap: u64,
    graph: Graph,
    dist: DistanceMatrix,
}

fn labels(g: &Graph, s: &[usize]) -> Vec<String> {
    s.iter().map(|&v| g.label(v).to_string()).collect()
}

fn resolution_certificate(g: &Graph, rep: &ResolutionReport) -> Value {
    json!({
        "report": rep.to_report_json(),
        "set_labels": labels(g, rep.set.members()),
        "witness_labels": rep.witness.map(|(u, v)| labels(g, &[u, v])),
    })
}

fn iso_claim(g: &Graph, h: &Graph) -> Outcome {
    match are_isomorphic(g, h) {
        Some(p) => {
            let ok = g.is_isomorphism(h, &p);
            pass_if(ok, json!({ "mapping": p }))
        }
        None => pass_if(false, json!({ "mapping": null })),
    }
}

/// Lower bound by refuting every subset of size `n - 1` (supersets of a
/// passing set pass, so nothing smaller can pass either) plus the explicit
/// size-`n` set.
fn exhaustive_dimension_claim(ctx: &Context, kind: ResolutionKind) -> Outcome {
    let n = ctx.n;
    let r = half_resolving_set(n);
    let upper = match kind {
        ResolutionKind::Resolving => is_resolving(&ctx.dist, &r),
        ResolutionKind::Doubly => is_doubly_resolving(&ctx.dist, &r),
        ResolutionKind::Strong => unreachable!("strong dimension uses the cover reduction"),
    };
    let upper_cert = resolution_certificate(&ctx.graph, &upper);
    if !upper.verdict {
        return pass_if(false, json!({ "upper_bound": upper_cert }));
    }
    let budget = binomial(2 * n as u64, n as u64 - 1);
    if budget > ctx.cap {
        return Outcome {
            verdict: Verdict::Skipped,
            certificate: json!({
                "upper_bound": upper_cert,
                "skipped": { "budget": budget, "cap": ctx.cap },
            }),
        };
    }
    let refutation = refute_size(&ctx.dist, kind, n - 1);
    let ok = refutation.counterexample.is_none();
    pass_if(
        ok,
        json!({
            "upper_bound": upper_cert,
            "refuted_size": refutation.size,
            "refuted": refutation.checked,
            "counterexample": refutation.counterexample,
        }),
    )
}

fn strong_dimension_claim(ctx: &Context) -> Result<Outcome> {
    let target = 2 * ctx.n - 2;
    let cover = strong_metric_dimension_by_cover(&ctx.graph)?;
    let budget = strong_brute_force_budget(ctx.n);
    let mut cert = json!({
        "vertex_cover": {
            "dimension": cover.dimension,
            "set": cover.optimal_set,
            "set_labels": labels(&ctx.graph, cover.optimal_set.members()),
        },
    });
    let mut ok = cover.dimension == target;
    if budget <= ctx.cap {
        let brute = strong_metric_dimension_brute_force(&ctx.graph)?;
        ok &= brute.dimension == cover.dimension;
        cert["brute_force"] = json!({
            "dimension": brute.dimension,
            "set": brute.optimal_set,
            "checked": brute.search_space_checked,
        });
    } else {
        cert["brute_force"] = json!({ "skipped": { "budget": budget, "cap": ctx.cap } });
    }
    Ok(pass_if(ok, cert))
}

fn run_claim(ctx: &Context, id: &'static str) -> Result<Outcome> {
    let n = ctx.n;
    let g = &ctx.graph;
    Ok(match id {
        "DIAMETER2" => {
            let d = ctx.dist.diameter();
            pass_if(d == Some(2), json!({ "diameter": d }))
        }
        "NONBIPARTITE" => {
            let triangle = find_triangle(g);
            let ok = !profile(g).bipartite && triangle.is_some();
            pass_if(ok, json!({ "bipartite": !ok, "odd_cycle": triangle }))
        }
        "REGULAR" => {
            let degrees = g.degrees();
            let ok = degrees.iter().all(|&d| d == n + 1);
            pass_if(ok, json!({ "valency": n + 1, "min_degree": degrees.iter().min(), "max_degree": degrees.iter().max() }))
        }
        "CLIQUE4" => {
            let clique = maximum_clique(g);
            let named = twin_clique(n);
            let named_ok = named
                .members()
                .iter()
                .enumerate()
                .all(|(i, &u)| named.members()[i + 1..].iter().all(|&v| g.is_adjacent(u, v)));
            pass_if(
                clique.len() == 4 && named_ok,
                json!({ "clique_number": clique.len(), "maximum_clique": clique, "twin_clique": named, "twin_clique_is_clique": named_ok }),
            )
        }
        "SPECTRUM" => {
            let s = integer_spectrum(g);
            let (ni, one) = (n as i64, 1i64);
            let expected = vec![(ni + 1, 1), (one, n - 2), (-one, n), (1 - ni, 1)];
            let expected: Vec<(i64, usize)> = expected.into_iter().filter(|&(_, m)| m > 0).collect();
            pass_if(
                s.roots == expected && s.residual.is_empty(),
                json!({ "spectrum": s, "expected": expected.iter().map(|&(v, m)| [v, m as i64]).collect::<Vec<_>>() }),
            )
        }
        "FOUR_EIGENVALUES" => {
            let ed = distinct_eigenvalue_count_vs_diameter(g)?;
            pass_if(ed.count == 4 && !ed.consistent_with_drg, json!(ed))
        }
        "NOT_DRG" => {
            let rep = distance_regularity_check(g)?;
            let ok = !rep.verdict && rep.witness.is_some_and(|w| w.rechecks(g));
            pass_if(ok, json!(rep))
        }
        "TOEPLITZ_ISO" => iso_claim(g, &toeplitz(2 * n, &dihedral_toeplitz_window(n))?),
        "COMPLEMENT_ISO" => {
            let cp = cocktail_party(n / 2)?;
            iso_claim(&complement(g), &disjoint_union(&cp, &cp))
        }
        "CIRCULANT_ISO" => iso_claim(&cocktail_party(n / 2)?, &circulant(n, &cocktail_circulant_set(n))?),
        "AUT_ORDER" => {
            let rep = automorphism_group(g);
            let predicted = predicted_aut_order(n)?;
            let closure = if predicted <= BigUint::from(CLOSURE_LIMIT) {
                group_order_by_closure(g.order(), &rep.generators, CLOSURE_LIMIT)
            } else {
                None
            };
            let closure_ok = closure.is_none_or(|c| BigUint::from(c) == rep.order);
            pass_if(
                rep.order == predicted && closure_ok,
                json!({
                    "order": rep.order.to_string(),
                    "predicted": predicted.to_string(),
                    "closure_order": closure,
                    "generators": rep.generators,
                }),
            )
        }
        "VERTEX_TRANSITIVE" => {
            let rep = automorphism_group(g);
            pass_if(rep.transitive, json!({ "transitive": rep.transitive, "generators": rep.generators }))
        }
        "BETA_EQ_N" => exhaustive_dimension_claim(ctx, ResolutionKind::Resolving),
        "PSI_EQ_N" => exhaustive_dimension_claim(ctx, ResolutionKind::Doubly),
        "R_NOT_STRONG" => {
            let rep = is_strong_resolving(&ctx.dist, &half_resolving_set(n));
            pass_if(!rep.verdict && rep.witness_rechecks(&ctx.dist), resolution_certificate(g, &rep))
        }
        "SDIM_EQ_2N_MINUS_2" => strong_dimension_claim(ctx)?,
        other => unreachable!("unknown claim {other}"),
    })
}

fn statement(id: &str, n: usize) -> String {
    let half = n / 2;
    match id {
        "DIAMETER2" => "diameter is 2".to_string(),
        "NONBIPARTITE" => "not bipartite".to_string(),
        "REGULAR" => format!("{}-regular", n + 1),
        "CLIQUE4" => "clique number is 4".to_string(),
        "SPECTRUM" => format!("spectrum is {}^1, {}^1, 1^{}, -1^{}", n + 1, 1 - n as i64, n - 2, n),
        "FOUR_EIGENVALUES" => "4 distinct eigenvalues, not diameter + 1".to_string(),
        "NOT_DRG" => "not distance-regular".to_string(),
        "TOEPLITZ_ISO" => format!("isomorphic to T_{}<odd offsets; {n}>", 2 * n),
        "COMPLEMENT_ISO" => format!("complement is isomorphic to CP({half}) + CP({half})"),
        "CIRCULANT_ISO" => format!("CP({half}) is isomorphic to Cay(Z_{n}, S_{})", half - 1),
        "AUT_ORDER" => format!("|Aut| = 2(2^{half} {half}!)^2"),
        "VERTEX_TRANSITIVE" => "vertex-transitive".to_string(),
        "BETA_EQ_N" => format!("metric dimension is {n}"),
        "PSI_EQ_N" => format!("minimum doubly resolving set has size {n}"),
        "R_NOT_STRONG" => format!("{{a..a^{half}; ab..a^{half}b}} is not strong resolving"),
        "SDIM_EQ_2N_MINUS_2" => format!("strong metric dimension is {}", 2 * n - 2),
        _ => String::new(),
    }
}

pub fn verify_claims(n: usize, exhaustive_cap: u64) -> Result<ClaimReport> {
    let graph = dihedral_cayley(n)?;
    let dist = all_pairs_distances(&graph);
    let ctx = Context {
        n,
        cap: exhaustive_cap,
        graph,
        dist,
    };
    let mut claims = Vec::with_capacity(CLAIM_IDS.len());
    for id in CLAIM_IDS {
        let start = Instant::now();
        let outcome = run_claim(&ctx, id)?;
        claims.push(Claim {
            claim_id: id,
            statement: statement(id, n),
            verdict: outcome.verdict,
            certificate: outcome.certificate,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    Ok(ClaimReport {
        n,
        exhaustive_cap,
        claims,
    })
}

/// One of the two worked examples on `Λ(6)`, with the metric vectors of
/// every vertex outside the set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExampleReport {
    pub id: String,
    pub n: usize,
    pub set_labels: Vec<String>,
    pub report: ReportJson,
    pub witness_labels: Option<[String; 2]>,
    pub vectors: Vec<LabelledVector>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabelledVector {
    pub vertex: String,
    pub vector: MetricVector,
}

pub fn run_example(id: &str) -> Result<ExampleReport> {
    let set_labels: &[&str] = match id {
        "3.4" => &["a", "a^2", "ab", "a^2b", "a^3b", "a^4b"],
        "3.5" => &["a", "a^2", "a^3", "ab", "a^2b", "a^3b"],
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown example {other:?}; expected 3.4 or 3.5"
            )))
        }
    };
    let n = 6;
    let g = dihedral_cayley(n)?;
    let d = all_pairs_distances(&g);
    let members = set_labels
        .iter()
        .map(|l| g.vertex(l).expect("label present in Λ(6)"))
        .collect();
    let set = VertexSet::new(g.order(), members)?;
    let rep = is_resolving(&d, &set);
    let vectors = (0..g.order())
        .filter(|&v| !set.contains(v))
        .map(|v| {
            Ok(LabelledVector {
                vertex: g.label(v).to_string(),
                vector: metric_vector(&d, v, &set)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExampleReport {
        id: id.to_string(),
        n,
        set_labels: labels(&g, set.members()),
        report: rep.to_report_json(),
        witness_labels: rep
            .witness
            .map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()]),
        vectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(12, 5), 792);
        assert_eq!(binomial(16, 7), 11440);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(strong_brute_force_budget(6), 4082);
        assert_eq!(strong_brute_force_budget(8), 65518);
    }

    #[test]
    fn named_sets() {
        assert_eq!(half_resolving_set(6).members(), &[0, 1, 2, 6, 7, 8]);
        assert_eq!(twin_clique(6).members(), &[2, 5, 8, 11]);
    }

    #[test]
    fn odd_n_rejected() {
        assert!(matches!(verify_claims(5, DEFAULT_EXHAUSTIVE_CAP), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn examples() {
        let e = run_example("3.4").unwrap();
        assert!(!e.report.verdict);
        assert_eq!(e.witness_labels, Some(["a^3".to_string(), "a^6".to_string()]));
        let e = run_example("3.5").unwrap();
        assert!(e.report.verdict);
        assert!(run_example("3.6").is_err());
    }

    #[test]
    fn all_claims_pass_at_4() {
        let r = verify_claims(4, DEFAULT_EXHAUSTIVE_CAP).unwrap();
        let ids: Vec<&str> = r.claims.iter().map(|c| c.claim_id).collect();
        assert_eq!(ids, CLAIM_IDS);
        for c in &r.claims {
            assert_eq!(c.verdict, Verdict::Pass, "{} {}", c.claim_id, c.certificate);
        }
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn beta_refutation_count_at_6() {
        let r = verify_claims(6, DEFAULT_EXHAUSTIVE_CAP).unwrap();
        let beta = r.claim("BETA_EQ_N").unwrap();
        assert_eq!(beta.verdict, Verdict::Pass);
        assert_eq!(beta.certificate["refuted"], 792);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn tiny_cap_skips_exhaustive_claims() {
        let r = verify_claims(4, 10).unwrap();
        assert_eq!(r.claim("BETA_EQ_N").unwrap().verdict, Verdict::Skipped);
        assert_eq!(r.claim("PSI_EQ_N").unwrap().verdict, Verdict::Skipped);
        assert_eq!(r.claim("SDIM_EQ_2N_MINUS_2").unwrap().verdict, Verdict::Pass);
        assert_eq!(r.exit_code(), 2);
    }
}
