use std::fmt;

use serde::{Deserialize, Serialize};

use super::ENUMERATION_CAP;
use crate::boundaried::{enumerate, glue_boundaried, BoundariedGraph};
use crate::error::{Error, Result};
use crate::family::MinorFamily;
use crate::oracle::constrained_opt;

/// One signature cell; `Infeasible` sorts above every value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SigEntry {
    Value(u32),
    Infeasible,
}

impl fmt::Display for SigEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigEntry::Value(v) => write!(f, "{v}"),
            SigEntry::Infeasible => f.write_str("x"),
        }
    }
}

/// Normalized behavior vector over (test, profile) pairs, test-major. Profile
/// `mask` deletes boundary labels whose bit is set and keeps the rest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub entries: Vec<SigEntry>,
    /// The subtracted minimum.
    pub offset: u32,
}

/// Test graphs for boundary size `t`: all boundaried graphs on at most `s`
/// vertices up to boundary-respecting isomorphism.
pub fn build_test_set(t: usize, s: usize) -> Result<Vec<BoundariedGraph>> {
    if s < t {
        return Err(Error::InvalidParams(format!("test size {s} below boundary size {t}")));
    }
    enumerate(t, s, ENUMERATION_CAP)
}

pub fn signature_of(b: &BoundariedGraph, f: &MinorFamily, tests: &[BoundariedGraph]) -> Result<Signature> {
    let mut raw: Vec<Option<u32>> = Vec::with_capacity(tests.len() << b.t());
    for test in tests {
        raw.extend(test_row(b, f, test)?);
    }
    let offset = raw.iter().flatten().copied().min().unwrap_or(0);
    let entries = raw
        .into_iter()
        .map(|e| e.map_or(SigEntry::Infeasible, |v| SigEntry::Value(v - offset)))
        .collect();
    Ok(Signature { entries, offset })
}

/// Unnormalized entries of `b` for one test, one per profile.
pub(crate) fn test_row(b: &BoundariedGraph, f: &MinorFamily, test: &BoundariedGraph) -> Result<Vec<Option<u32>>> {
    let t = b.t();
    if test.t() != t {
        return Err(Error::BoundaryMismatch { left: t, right: test.t() });
    }
    let glued = glue_boundaried(b, test)?;
    let mut row = Vec::with_capacity(1 << t);
    for mask in 0..1usize << t {
        let (del, keep): (Vec<usize>, Vec<usize>) = (0..t).partition(|&i| mask >> i & 1 == 1);
        let del: Vec<usize> = del.into_iter().map(|i| glued.boundary[i]).collect();
        let keep: Vec<usize> = keep.into_iter().map(|i| glued.boundary[i]).collect();
        row.push(constrained_opt(&glued, f, &del, &keep)?.map(|r| r.opt as u32));
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Preset;
    use crate::graph::Graph;
    use crate::oracle::opt_deletion;

    fn bare_vertex() -> BoundariedGraph {
        BoundariedGraph::new(Graph::new(1), vec![0]).unwrap()
    }

    fn pendant_triangle() -> BoundariedGraph {
        BoundariedGraph::new(Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]), vec![0]).unwrap()
    }

    #[test]
    fn test_set_counts() {
        assert_eq!(build_test_set(1, 1).unwrap().len(), 1);
        assert_eq!(build_test_set(1, 2).unwrap().len(), 3);
        assert_eq!(build_test_set(2, 2).unwrap().len(), 2);
        assert!(build_test_set(3, 2).is_err());
    }

    #[test]
    fn bare_vertex_signature_is_test_behavior() {
        let fvs = Preset::FeedbackVertexSet.family();
        let tests = build_test_set(1, 4).unwrap();
        let sig = signature_of(&bare_vertex(), &fvs, &tests).unwrap();
        assert_eq!(sig.entries.len(), 2 * tests.len());
        assert_eq!(sig.offset, 0);
        // Gluing a bare vertex is the identity, so each entry is the test's own
        // constrained optimum.
        for (i, test) in tests.iter().enumerate() {
            let kept = constrained_opt(test, &fvs, &[], &[0]).unwrap().unwrap().opt as u32;
            let deleted = constrained_opt(test, &fvs, &[0], &[]).unwrap().unwrap().opt as u32;
            assert_eq!(sig.entries[2 * i], SigEntry::Value(kept));
            assert_eq!(sig.entries[2 * i + 1], SigEntry::Value(deleted));
            assert_eq!(kept.min(deleted), opt_deletion(&test.graph, &fvs, None).unwrap().unwrap().opt as u32);
        }
    }

    #[test]
    fn pendant_triangle_shifts_by_one() {
        let fvs = Preset::FeedbackVertexSet.family();
        let tests = build_test_set(1, 4).unwrap();
        let a = signature_of(&bare_vertex(), &fvs, &tests).unwrap();
        let b = signature_of(&pendant_triangle(), &fvs, &tests).unwrap();
        assert_eq!(a.entries, b.entries);
        assert_eq!(b.offset, a.offset + 1);
    }

    #[test]
    fn isomorphic_copies_agree() {
        let fvs = Preset::FeedbackVertexSet.family();
        let tests = build_test_set(1, 3).unwrap();
        let a = pendant_triangle();
        let b = BoundariedGraph::new(Graph::from_edges(4, &[(3, 2), (2, 1), (1, 0), (2, 0)]), vec![3]).unwrap();
        assert_eq!(signature_of(&a, &fvs, &tests).unwrap(), signature_of(&b, &fvs, &tests).unwrap());
    }
}
