use super::kernel::{kernelize_with, KernelMode, TableCache};
use super::model::find_minimal_minor_model;
use super::{Provenance, Solution};
use crate::error::{Error, Result};
use crate::family::{is_f_minor_free, MinorFamily};
use crate::graph::Graph;
use crate::replacer::{lift_through, ProtrusionParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub kernelize: bool,
    pub mode: KernelMode,
    /// Cap on branching nodes over the whole search.
    pub node_budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { kernelize: true, mode: KernelMode::Fast, node_budget: 5_000_000 }
    }
}

pub fn solve(g: &Graph, f: &MinorFamily, k: usize, p: &ProtrusionParams) -> Result<Option<Solution>> {
    solve_with(g, f, k, p, &SolveOptions::default(), &mut TableCache::new())
}

/// Minimum solution of size at most `k`, or `None`. Sizes are tried in
/// increasing order so the witness is optimal whenever one is returned.
pub fn solve_with(
    g: &Graph,
    f: &MinorFamily,
    k: usize,
    p: &ProtrusionParams,
    opts: &SolveOptions,
    tables: &mut TableCache,
) -> Result<Option<Solution>> {
    let (kernel, traces, offset) = if opts.kernelize {
        let res = kernelize_with(g, f, p, opts.mode, tables).map_err(|e| e.error)?;
        (res.kernel, res.traces, res.total_offset)
    } else {
        (g.clone(), Vec::new(), 0)
    };
    let Some(budget) = (k as i64).checked_sub(offset).filter(|&b| b >= 0) else {
        return Ok(None);
    };
    let mut nodes = 0u64;
    for size in 0..=budget as usize {
        if let Some(mut set) = branch(&kernel, f, size, &mut nodes, opts.node_budget)? {
            set.sort_unstable();
            let provenance = if traces.is_empty() { Provenance::Solver } else { Provenance::Lifted };
            if !traces.is_empty() {
                set = lift_through(&set, &traces, f)?;
            }
            if !is_f_minor_free(&g.remove_vertices(&set).0, f)? {
                return Err(Error::Internal("solver produced an infeasible set".into()));
            }
            return Ok(Some(Solution { set, feasible: true, provenance }));
        }
    }
    Ok(None)
}

/// Every solution meets every model, so branching on the vertices of one
/// minimal model is complete.
fn branch(g: &Graph, f: &MinorFamily, k: usize, nodes: &mut u64, budget: u64) -> Result<Option<Vec<usize>>> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::Resource { what: "branching nodes", limit: budget });
    }
    let Some(model) = find_minimal_minor_model(g, f)? else {
        return Ok(Some(Vec::new()));
    };
    if k == 0 {
        return Ok(None);
    }
    for v in model.vertices() {
        let (h, map) = g.remove_vertices(&[v]);
        if let Some(rest) = branch(&h, f, k - 1, nodes, budget)? {
            let mut set: Vec<usize> = rest.into_iter().map(|u| map[u]).collect();
            set.push(v);
            return Ok(Some(set));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Preset;
    use crate::generators::*;
    use crate::oracle::opt_deletion;

    #[test]
    fn petersen_fvs() {
        let fvs = Preset::FeedbackVertexSet.family();
        let p = ProtrusionParams::for_family(&fvs);
        let s = solve(&petersen(), &fvs, 3, &p).unwrap().unwrap();
        assert_eq!(s.set.len(), 3);
        assert!(solve(&petersen(), &fvs, 2, &p).unwrap().is_none());
    }

    #[test]
    fn free_input_k0() {
        let tw2 = Preset::Treewidth2.family();
        let p = ProtrusionParams::for_family(&tw2);
        let s = solve(&cycle(7), &tw2, 0, &p).unwrap().unwrap();
        assert!(s.set.is_empty());
    }

    #[test]
    fn kernel_on_and_off_agree() {
        let fvs = Preset::FeedbackVertexSet.family();
        let p = ProtrusionParams { r: 2, min_size: 2, max_interior: 3, test_size: 4, rep_size: 1, separator_budget: 1_000_000 };
        let g = triangles_on_path(4);
        let on = solve(&g, &fvs, 6, &p).unwrap().unwrap();
        let off = solve_with(&g, &fvs, 6, &p, &SolveOptions { kernelize: false, ..Default::default() }, &mut TableCache::new())
            .unwrap()
            .unwrap();
        assert_eq!(on.provenance, Provenance::Lifted);
        assert_eq!(off.provenance, Provenance::Solver);
        assert_eq!(on.set.len(), 4);
        assert_eq!(off.set.len(), opt_deletion(&g, &fvs, None).unwrap().unwrap().opt);
    }

    #[test]
    fn node_budget() {
        let fvs = Preset::FeedbackVertexSet.family();
        let p = ProtrusionParams::for_family(&fvs);
        let opts = SolveOptions { node_budget: 3, kernelize: false, ..Default::default() };
        let err = solve_with(&petersen(), &fvs, 3, &p, &opts, &mut TableCache::new()).unwrap_err();
        assert!(err.is_resource());
    }
}
