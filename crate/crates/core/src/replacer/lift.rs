use super::replace::ReplacementTrace;
use crate::error::{Error, Result};
use crate::family::{is_f_minor_free, MinorFamily};

/// Maps a solution of `trace.after` to one of `trace.before` whose size is at
/// most `|s| + delta`. The stored optimal interior for the induced boundary
/// profile is tried first; otherwise the smallest interior completion is
/// searched directly.
pub fn lift_solution(s: &[usize], trace: &ReplacementTrace, f: &MinorFamily) -> Result<Vec<usize>> {
    let after_n = trace.after.n();
    if let Some(&bad) = s.iter().find(|&&v| v >= after_n) {
        return Err(Error::InfeasibleSolution(format!("vertex {bad} not in graph of order {after_n}")));
    }
    let kept_len = trace.kept.len();
    let mut rest: Vec<usize> = s.iter().filter(|&&v| v < kept_len).map(|&v| trace.kept[v]).collect();
    rest.sort_unstable();
    rest.dedup();
    let rep_used = s.iter().filter(|&&v| v >= kept_len).count() as i64;
    let budget = rest.len() as i64 + rep_used + trace.delta;

    let profile: Vec<usize> = trace.boundary.iter().copied().filter(|b| rest.binary_search(b).is_ok()).collect();
    let feasible = |extra: &[usize]| -> Result<Option<Vec<usize>>> {
        let mut del = rest.clone();
        del.extend_from_slice(extra);
        del.sort_unstable();
        del.dedup();
        let (h, _) = trace.before.remove_vertices(&del);
        Ok(is_f_minor_free(&h, f)?.then_some(del))
    };

    if let Some(entry) = trace.lifting.iter().find(|e| e.profile == profile) {
        let size = rest.len() as i64 + entry.interior.len() as i64;
        if size <= budget.max(rest.len() as i64) {
            if let Some(sol) = feasible(&entry.interior)? {
                return Ok(sol);
            }
        }
    }

    // Interior subsets by size; the whole interior always works when the
    // kernel solution was feasible, because the rest of the graph is then an
    // induced subgraph of the kernel minus its solution.
    let x = &trace.interior;
    for size in 0..=x.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let extra: Vec<usize> = idx.iter().map(|&i| x[i]).collect();
            if let Some(sol) = feasible(&extra)? {
                return Ok(sol);
            }
            if !next_combination(&mut idx, x.len()) {
                break;
            }
        }
    }
    Err(Error::InfeasibleSolution("kernel solution does not lift".into()))
}

/// Lifts through a chain of replacements, last one first.
pub fn lift_through(s: &[usize], traces: &[ReplacementTrace], f: &MinorFamily) -> Result<Vec<usize>> {
    let mut cur = s.to_vec();
    for trace in traces.iter().rev() {
        cur = lift_solution(&cur, trace, f)?;
    }
    Ok(cur)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::{find_protrusions, replace_naive, ProtrusionParams};
    use super::*;
    use crate::family::Preset;
    use crate::generators::*;
    use crate::graph::Graph;
    use crate::oracle::opt_deletion;

    fn params() -> ProtrusionParams {
        ProtrusionParams {
            r: 2,
            min_size: 3,
            max_interior: 3,
            test_size: 4,
            rep_size: 2,
            separator_budget: 1_000_000,
        }
    }

    fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
        (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
    }

    #[test]
    fn every_kernel_solution_lifts_within_delta() {
        let fvs = Preset::FeedbackVertexSet.family();
        // Two triangles hung off a 4-cycle.
        let mut g = cycle(4);
        for at in [0, 2] {
            let a = g.add_vertex();
            let b = g.add_vertex();
            let c = g.add_vertex();
            g.add_edge(at, a);
            g.add_edge(a, b);
            g.add_edge(b, c);
            g.add_edge(a, c);
        }
        let pr = find_protrusions(&g, &params()).unwrap().into_iter().next().unwrap();
        let (after, trace) = replace_naive(&g, &pr, &fvs, &params()).unwrap();
        let mut checked = 0;
        for s in all_subsets(after.n()) {
            let (h, _) = after.remove_vertices(&s);
            if !is_f_minor_free(&h, &fvs).unwrap() {
                continue;
            }
            let lifted = lift_solution(&s, &trace, &fvs).unwrap();
            let (h, _) = g.remove_vertices(&lifted);
            assert!(is_f_minor_free(&h, &fvs).unwrap());
            assert!(lifted.len() as i64 <= s.len() as i64 + trace.delta, "{s:?} -> {lifted:?}");
            checked += 1;
        }
        assert!(checked > 0);
        let before = opt_deletion(&g, &fvs, None).unwrap().unwrap().opt as i64;
        let kernel = opt_deletion(&after, &fvs, None).unwrap().unwrap().opt as i64;
        assert_eq!(before, kernel + trace.delta);
    }

    #[test]
    fn chain_of_two() {
        let fvs = Preset::FeedbackVertexSet.family();
        let g = triangles_on_path(3);
        let p = ProtrusionParams { rep_size: 1, min_size: 2, max_interior: 3, ..params() };
        let mut traces = Vec::new();
        let mut cur = g.clone();
        for _ in 0..2 {
            let (next, trace) = find_protrusions(&cur, &p)
                .unwrap()
                .iter()
                .find_map(|pr| replace_naive(&cur, pr, &fvs, &p).ok())
                .unwrap();
            traces.push(trace);
            cur = next;
        }
        let sol = opt_deletion(&cur, &fvs, None).unwrap().unwrap();
        let lifted = lift_through(&sol.witness, &traces, &fvs).unwrap();
        let (h, _) = g.remove_vertices(&lifted);
        assert!(is_f_minor_free(&h, &fvs).unwrap());
        assert_eq!(lifted.len(), opt_deletion(&g, &fvs, None).unwrap().unwrap().opt);
    }

    #[test]
    fn rejects_out_of_range() {
        let fvs = Preset::FeedbackVertexSet.family();
        let g = attach_tree(&cycle(3), 0, &Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]));
        let p = ProtrusionParams { rep_size: 1, min_size: 2, max_interior: 3, ..params() };
        let pr = find_protrusions(&g, &p).unwrap().into_iter().next().unwrap();
        let (after, trace) = replace_naive(&g, &pr, &fvs, &p).unwrap();
        assert!(lift_solution(&[after.n()], &trace, &fvs).is_err());
    }
}
