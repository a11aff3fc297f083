use pmcover::arrays::hexagonal_core_certificate;
use pmcover::covers::{berge_cover_defect3, four_cover_or_petersen, pmi, FourCoverVerdict};
use pmcover::cuts::cyclic_edge_connectivity;
use pmcover::io::write_cmg;
use pmcover::matching::{analyze_six_cut, SixCutAnalysis};
use pmcover::structure::{bipartite_index, oddness};
use pmcover::{arrays, CubicGraph, Vertex};
use serde_json::{json, Value};

use crate::cert::{Certificate, Claim};
use crate::validate::validate;

pub struct Options {
    pub pm_cap: usize,
    pub side: Vec<Vertex>,
}

fn matchings_json(ms: &[pmcover::matching::PerfectMatching]) -> Value {
    json!(ms.iter().map(|m| m.edges().to_vec()).collect::<Vec<_>>())
}

fn defect_part(g: &CubicGraph, opts: &Options) -> pmcover::Result<(Value, Value)> {
    let d = arrays::defect(g, opts.pm_cap)?;
    let w = json!({
        "matchings": matchings_json(&d.witness.matchings),
        "uncovered": d.uncovered,
        "pm_count": d.pm_count,
    });
    Ok((json!(d.value), w))
}

fn pmi_part(g: &CubicGraph, opts: &Options) -> pmcover::Result<(Value, Value)> {
    let r = pmi(g, opts.pm_cap)?;
    let w = json!({
        "cover": matchings_json(&r.cover.matchings),
        "exhaustive": r.exhaustive,
        "method": r.method,
        "pm_count": r.pm_count,
    });
    Ok((json!(r.value), w))
}

fn cyclic_part(g: &CubicGraph) -> pmcover::Result<(Value, Value)> {
    let c = cyclic_edge_connectivity(g)?;
    let w = json!({
        "side": c.witness.as_ref().map(|w| w.side.clone()),
        "cut": c.witness.as_ref().map(|w| w.edges.clone()),
        "cycle_rank": c.cycle_rank,
    });
    Ok((json!(c.value), w))
}

fn compute(claim: Claim, g: &CubicGraph, opts: &Options) -> pmcover::Result<(Value, Value)> {
    match claim {
        Claim::Defect => defect_part(g, opts),
        Claim::Pmi => pmi_part(g, opts),
        Claim::BergeCover => {
            let d = arrays::defect(g, opts.pm_cap)?;
            let cover = if d.value == 3 {
                berge_cover_defect3(g, opts.pm_cap)?
            } else {
                pmi(g, opts.pm_cap)?.cover
            };
            Ok((json!(cover.len()), json!({ "cover": matchings_json(&cover.matchings) })))
        }
        Claim::CoverDefect3 => {
            let cover = berge_cover_defect3(g, opts.pm_cap)?;
            Ok((json!(cover.len()), json!({ "cover": matchings_json(&cover.matchings) })))
        }
        Claim::HexCore => {
            let out = hexagonal_core_certificate(g, opts.pm_cap)?;
            let core = out.defect.witness.core(g);
            let w = json!({
                "matchings": matchings_json(&out.defect.witness.matchings),
                "core": core.edges,
                "hexagon": out.certificate.as_ref().map(|c| c.vertices.to_vec()),
                "certificate": out.certificate,
                "equivalence": out.equivalence,
            });
            Ok((json!(out.defect.value), w))
        }
        Claim::SixCut => match analyze_six_cut(g, &opts.side)? {
            SixCutAnalysis::PerfectMatching { matching } => Ok((
                json!("perfect_matching"),
                json!({ "side": opts.side, "matching": matching.edges() }),
            )),
            SixCutAnalysis::Barrier(b) => Ok((
                json!("barrier"),
                json!({ "side": opts.side, "s": b.s, "components": b.components, "cut_sizes": b.cut_sizes }),
            )),
        },
        Claim::BipartiteIndex => {
            let r = bipartite_index(g)?;
            Ok((json!(r.value), json!({ "deleted": r.deleted, "side": r.side })))
        }
        Claim::Oddness => {
            let r = oddness(g, opts.pm_cap)?;
            Ok((
                json!(r.value),
                json!({ "matching": r.matching.edges(), "circuit_lengths": r.circuit_lengths }),
            ))
        }
        Claim::CyclicConnectivity => cyclic_part(g),
        Claim::FourCover => match four_cover_or_petersen(g, opts.pm_cap)? {
            FourCoverVerdict::FourCover { cover } => {
                Ok((json!("four_cover"), json!({ "cover": matchings_json(&cover.matchings) })))
            }
            FourCoverVerdict::Petersen { isomorphism } => {
                Ok((json!("petersen"), json!({ "isomorphism": isomorphism })))
            }
            v @ FourCoverVerdict::Counterexample { .. } => Ok((json!("counterexample"), json!(v))),
        },
        Claim::JoinVerify => {
            let (d, dw) = defect_part(g, opts)?;
            let (p, pw) = pmi_part(g, opts)?;
            let (c, cw) = cyclic_part(g)?;
            Ok((
                json!({ "defect": d, "pmi": p, "cyclic_connectivity": c }),
                json!({ "defect": dw, "pmi": pw, "cyclic_connectivity": cw }),
            ))
        }
    }
}

/// Runs the search behind `claim` and re-validates its witness.
pub fn certify(claim: Claim, g: &CubicGraph, opts: &Options) -> Certificate {
    let mut cert = Certificate::new(write_cmg(g), claim);
    match compute(claim, g, opts) {
        Ok((value, witness)) => {
            cert.value = value;
            cert.witness = witness;
            match validate(&cert) {
                Ok(()) => cert.verified = expected_outcome(&cert),
                Err(e) => cert.error = Some(format!("validation failed: {e}")),
            }
        }
        Err(e) => cert.error = Some(e.to_string()),
    }
    cert
}

/// Join graphs are claimed to have defect 3, perfect matching index 5 and
/// cyclic connectivity 3; other claims are verified by their witness alone.
fn expected_outcome(cert: &Certificate) -> bool {
    match cert.claim {
        Claim::JoinVerify => cert.value == json!({ "defect": 3, "pmi": 5, "cyclic_connectivity": 3 }),
        _ => true,
    }
}

/// Re-validates a certificate read back from a file.
pub fn recheck(mut cert: Certificate) -> Certificate {
    match validate(&cert) {
        Ok(()) => {
            cert.verified = expected_outcome(&cert);
            cert.error = None;
        }
        Err(e) => {
            cert.verified = false;
            cert.error = Some(format!("validation failed: {e}"));
        }
    }
    cert
}
