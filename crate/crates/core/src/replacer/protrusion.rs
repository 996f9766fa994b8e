use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::ProtrusionParams;
use crate::boundaried::BoundariedGraph;
use crate::canon::CanonKey;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::treewidth::{exact_treewidth, greedy_decomposition, TreeDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Protrusion {
    /// Sorted interior `X`.
    pub interior: Vec<usize>,
    /// Sorted boundary `N(X)`.
    pub boundary: Vec<usize>,
    /// Decomposition of [`Protrusion::boundaried`] with width at most `r`.
    pub width_certificate: TreeDecomposition,
}

impl Protrusion {
    /// `G[X + N(X)]` without edges inside the boundary; local vertex `i < t`
    /// is `boundary[i]`, the rest follow `interior`. Gluing this onto `G - X`
    /// reproduces `G` exactly.
    pub fn boundaried(&self, g: &Graph) -> BoundariedGraph {
        boundaried_piece(g, &self.interior, &self.boundary)
    }

    pub fn t(&self) -> usize {
        self.boundary.len()
    }
}

pub(crate) fn boundaried_piece(g: &Graph, interior: &[usize], boundary: &[usize]) -> BoundariedGraph {
    let t = boundary.len();
    let order: Vec<usize> = boundary.iter().chain(interior).copied().collect();
    let mut local = g.induced(&order);
    local.clear_labels();
    for i in 0..t {
        for j in i + 1..t {
            if local.has_edge(i, j) {
                let mut pruned = Graph::new(local.n());
                for (u, v) in local.edges().filter(|&(u, v)| !(u < t && v < t)) {
                    pruned.add_edge(u, v);
                }
                return BoundariedGraph { graph: pruned, boundary: (0..t).collect() };
            }
        }
    }
    BoundariedGraph { graph: local, boundary: (0..t).collect() }
}

/// Preferred protrusion: largest interior, then smallest canonical form.
pub fn find_protrusion(g: &Graph, p: &ProtrusionParams) -> Result<Option<Protrusion>> {
    Ok(find_protrusions(g, p)?.into_iter().next())
}

/// Every connected protrusion with `min_size <= |X| <= max_interior` and
/// `|N(X)| <= r`, in preference order. Candidates come from the components of
/// `G - S` over all vertex sets `|S| <= r`.
pub fn find_protrusions(g: &Graph, p: &ProtrusionParams) -> Result<Vec<Protrusion>> {
    p.validate()?;
    let n = g.n();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut found: Vec<(usize, CanonKey, Protrusion)> = Vec::new();
    let mut examined = 0u64;
    for k in 0..=p.r.min(n) {
        let mut sep: Vec<usize> = (0..k).collect();
        loop {
            examined += 1;
            if examined > p.separator_budget {
                return Err(Error::Resource { what: "protrusion separator search", limit: p.separator_budget });
            }
            let (rest, map) = g.remove_vertices(&sep);
            for comp in rest.components() {
                if comp.len() < p.min_size || comp.len() > p.max_interior {
                    continue;
                }
                let interior: Vec<usize> = comp.iter().map(|&i| map[i]).collect();
                if !seen.insert(interior.clone()) {
                    continue;
                }
                if let Some(pr) = certify(g, interior, p.r) {
                    let key = pr.boundaried(g).canonical_key();
                    found.push((pr.interior.len(), key, pr));
                }
            }
            if !advance(&mut sep, n) {
                break;
            }
        }
    }
    found.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)).then_with(|| a.2.interior.cmp(&b.2.interior)));
    Ok(found.into_iter().map(|(_, _, pr)| pr).collect())
}

fn certify(g: &Graph, interior: Vec<usize>, r: usize) -> Option<Protrusion> {
    let mut inside = vec![false; g.n()];
    for &v in &interior {
        inside[v] = true;
    }
    let boundary: BTreeSet<usize> = interior
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().copied())
        .filter(|&w| !inside[w])
        .collect();
    if boundary.len() > r {
        return None;
    }
    let boundary: Vec<usize> = boundary.into_iter().collect();
    let local = boundaried_piece(g, &interior, &boundary).graph;
    let mut td = greedy_decomposition(&local);
    if td.width > r {
        match exact_treewidth(&local, r) {
            Ok(Some((_, exact))) => td = exact,
            _ => return None,
        }
    }
    Some(Protrusion { interior, boundary, width_certificate: td })
}

fn advance(idx: &mut [usize], n: usize) -> bool {
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
