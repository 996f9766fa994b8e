use serde::{Deserialize, Serialize};

use super::protrusion::Protrusion;
use super::signature::{build_test_set, signature_of, Signature};
use super::table::{representative_candidates, RepresentativeTable};
use super::ProtrusionParams;
use crate::boundaried::BoundariedGraph;
use crate::error::{Error, Result};
use crate::family::MinorFamily;
use crate::graph::Graph;
use crate::oracle::{constrained_opt, count_grouping};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    Naive,
    Fast,
}

/// Optimal interior completion of the original protrusion for one boundary
/// profile, in pre-replacement vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftEntry {
    /// Deleted boundary vertices; the rest of the boundary is kept.
    pub profile: Vec<usize>,
    pub interior: Vec<usize>,
}

/// Everything needed to map a solution of `after` back to `before`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplacementTrace {
    pub before: Graph,
    pub after: Graph,
    /// The replaced boundaried subgraph (local ids, boundary `0..t`).
    pub original: BoundariedGraph,
    /// Interior of the protrusion in `before` ids.
    pub interior: Vec<usize>,
    /// Boundary in `before` ids.
    pub boundary: Vec<usize>,
    pub representative: BoundariedGraph,
    /// Vertices of `after` created for the representative's interior.
    pub rep_interior: Vec<usize>,
    /// `kept[i]` is the `before` id of `after` vertex `i`, for `i < kept.len()`.
    pub kept: Vec<usize>,
    /// `offset(original) - offset(representative)`.
    pub delta: i64,
    pub lifting: Vec<LiftEntry>,
    pub variant: Variant,
}

/// Replaces `pr` by recomputing its class from scratch: the signatures of all
/// candidates are computed and the smallest match wins.
pub fn replace_naive(
    g: &Graph,
    pr: &Protrusion,
    f: &MinorFamily,
    p: &ProtrusionParams,
) -> Result<(Graph, ReplacementTrace)> {
    let local = pr.boundaried(g);
    let tests = build_test_set(local.t(), p.test_size)?;
    let sig = signature_of(&local, f, &tests)?;
    let mut chosen: Option<(BoundariedGraph, u32)> = None;
    for cand in representative_candidates(local.t(), p.rep_size)? {
        count_grouping();
        let cs = signature_of(&cand, f, &tests)?;
        if chosen.is_none() && cs.entries == sig.entries {
            chosen = Some((cand, cs.offset));
        }
    }
    let (rep, rep_offset) = chosen.ok_or(Error::NoRepresentative)?;
    finish(g, pr, local, &sig, rep, rep_offset, f, Variant::Naive)
}

/// Replaces `pr` by looking its signature up in a prebuilt table.
pub fn replace_fast(
    g: &Graph,
    pr: &Protrusion,
    table: &RepresentativeTable,
    f: &MinorFamily,
) -> Result<(Graph, ReplacementTrace)> {
    let local = pr.boundaried(g);
    if table.t != local.t() {
        return Err(Error::TableMismatch(format!("table t = {}, protrusion t = {}", table.t, local.t())));
    }
    if table.family_tag != f.tag() {
        return Err(Error::TableMismatch(format!("table family {}, requested {}", table.family_tag, f.tag())));
    }
    let tests = build_test_set(local.t(), table.test_size)?;
    let (class, sig) = table.find_class(&local, f, &tests)?.ok_or(Error::SignatureMiss)?;
    finish(g, pr, local, &sig, class.representative.clone(), class.offset, f, Variant::Fast)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    g: &Graph,
    pr: &Protrusion,
    local: BoundariedGraph,
    sig: &Signature,
    rep: BoundariedGraph,
    rep_offset: u32,
    f: &MinorFamily,
    variant: Variant,
) -> Result<(Graph, ReplacementTrace)> {
    let t = local.t();
    let rep_inner = rep.interior();
    if rep_inner.len() >= pr.interior.len() {
        return Err(Error::NoShrinkage);
    }
    let mut lifting = Vec::new();
    for mask in 0..1usize << t {
        let (del, keep): (Vec<usize>, Vec<usize>) = (0..t).partition(|&i| mask >> i & 1 == 1);
        if let Some(res) = constrained_opt(&local, f, &del, &keep)? {
            let interior = res.witness.iter().filter(|&&v| v >= t).map(|&v| pr.interior[v - t]).collect();
            lifting.push(LiftEntry {
                profile: del.iter().map(|&i| pr.boundary[i]).collect(),
                interior,
            });
        }
    }

    let mut gone = vec![false; g.n()];
    for &v in &pr.interior {
        gone[v] = true;
    }
    let kept: Vec<usize> = (0..g.n()).filter(|&v| !gone[v]).collect();
    let mut after = g.induced(&kept);
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let mut rep_map = vec![usize::MAX; rep.n()];
    for (i, &b) in rep.boundary.iter().enumerate() {
        rep_map[b] = index[pr.boundary[i]];
    }
    let mut rep_interior = Vec::with_capacity(rep_inner.len());
    for &v in &rep_inner {
        let id = after.add_vertex();
        rep_map[v] = id;
        rep_interior.push(id);
    }
    for (u, v) in rep.graph.edges() {
        after.add_edge(rep_map[u], rep_map[v]);
    }
    let trace = ReplacementTrace {
        before: g.clone(),
        after: after.clone(),
        original: local,
        interior: pr.interior.clone(),
        boundary: pr.boundary.clone(),
        representative: rep,
        rep_interior,
        kept,
        delta: i64::from(sig.offset) - i64::from(rep_offset),
        lifting,
        variant,
    };
    Ok((after, trace))
}
