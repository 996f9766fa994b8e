use super::model::find_minimal_minor_model;
use super::{Provenance, Solution};
use crate::error::Result;
use crate::family::{is_f_minor_free, MinorFamily};
use crate::graph::Graph;

/// Model hitting: while a member remains, delete every vertex of a minimal
/// model. Redundant deletions are then dropped, largest id first.
pub fn approximate(g: &Graph, f: &MinorFamily) -> Result<Solution> {
    let mut deleted: Vec<usize> = Vec::new();
    let mut cur = g.clone();
    let mut ids: Vec<usize> = (0..g.n()).collect();
    while let Some(model) = find_minimal_minor_model(&cur, f)? {
        let hit = model.vertices();
        deleted.extend(hit.iter().map(|&v| ids[v]));
        let (next, map) = cur.remove_vertices(&hit);
        ids = map.iter().map(|&v| ids[v]).collect();
        cur = next;
    }
    deleted.sort_unstable();
    let mut i = deleted.len();
    while i > 0 {
        i -= 1;
        let mut trial = deleted.clone();
        trial.remove(i);
        if is_f_minor_free(&g.remove_vertices(&trial).0, f)? {
            deleted = trial;
        }
    }
    Ok(Solution { set: deleted, feasible: true, provenance: Provenance::Approx })
}
