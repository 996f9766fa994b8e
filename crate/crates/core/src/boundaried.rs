//! Boundaried graphs and gluing.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonKey};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph with an ordered boundary; `boundary[i]` carries label `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundariedGraph {
    pub graph: Graph,
    pub boundary: Vec<usize>,
}

impl BoundariedGraph {
    pub fn new(graph: Graph, boundary: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; graph.n()];
        for &b in &boundary {
            if b >= graph.n() {
                return Err(Error::InvalidBoundary(format!("vertex {b} not in graph")));
            }
            if seen[b] {
                return Err(Error::InvalidBoundary(format!("vertex {b} repeated")));
            }
            seen[b] = true;
        }
        Ok(BoundariedGraph { graph, boundary })
    }

    /// Boundary size `t`.
    pub fn t(&self) -> usize {
        self.boundary.len()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Non-boundary vertices in increasing order.
    pub fn interior(&self) -> Vec<usize> {
        let mut is_b = vec![false; self.n()];
        for &b in &self.boundary {
            is_b[b] = true;
        }
        (0..self.n()).filter(|&v| !is_b[v]).collect()
    }

    fn colors(&self) -> Vec<u32> {
        let t = self.t() as u32;
        let mut colors = vec![t; self.n()];
        for (i, &b) in self.boundary.iter().enumerate() {
            colors[b] = i as u32;
        }
        colors
    }

    /// Key invariant under boundary-respecting isomorphism.
    pub fn canonical_key(&self) -> CanonKey {
        let mut key = canonical_form(&self.graph, &self.colors()).key;
        key.0.insert(0, self.t() as u64);
        key
    }

    /// Canonically relabeled copy: boundary becomes `0..t`, interior follows.
    pub fn canonical(&self) -> BoundariedGraph {
        let form = canonical_form(&self.graph, &self.colors());
        let mut pos = vec![0usize; self.n()];
        for (i, &v) in form.order.iter().enumerate() {
            pos[v] = i;
        }
        let edges: Vec<_> = self.graph.edges().map(|(u, v)| (pos[u], pos[v])).collect();
        BoundariedGraph {
            graph: Graph::from_edges(self.n(), &edges),
            boundary: (0..self.t()).collect(),
        }
    }
}

/// Glues `b` onto `a`, identifying boundary label `i` of both sides. Vertices of
/// `a` keep their ids; interior vertices of `b` are appended in order. The
/// result keeps `a`'s boundary.
pub fn glue_boundaried(a: &BoundariedGraph, b: &BoundariedGraph) -> Result<BoundariedGraph> {
    if a.t() != b.t() {
        return Err(Error::BoundaryMismatch { left: a.t(), right: b.t() });
    }
    let mut g = a.graph.clone();
    let mut map = vec![usize::MAX; b.n()];
    for (i, &v) in b.boundary.iter().enumerate() {
        map[v] = a.boundary[i];
    }
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = g.add_vertex();
        }
    }
    for v in 0..b.n() {
        if !b.boundary.contains(&v) {
            g.set_label(map[v], b.graph.label(v));
        }
    }
    for (u, v) in b.graph.edges() {
        g.add_edge(map[u], map[v]);
    }
    Ok(BoundariedGraph { graph: g, boundary: a.boundary.clone() })
}

pub fn glue(a: &BoundariedGraph, b: &BoundariedGraph) -> Result<Graph> {
    glue_boundaried(a, b).map(|bg| bg.graph)
}

/// All boundaried graphs with boundary exactly `t` and at most `max_n`
/// vertices, one per boundary-respecting isomorphism class, in canonical form,
/// ordered by vertex count then canonical key.
pub fn enumerate(t: usize, max_n: usize, cap: usize) -> Result<Vec<BoundariedGraph>> {
    let mut out = Vec::new();
    for n in t..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        if pairs.len() > 24 {
            return Err(Error::Resource { what: "boundaried graph enumeration", limit: cap as u64 });
        }
        let mut classes: BTreeMap<CanonKey, BoundariedGraph> = BTreeMap::new();
        for mask in 0u64..(1u64 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let bg = BoundariedGraph {
                graph: Graph::from_edges(n, &edges),
                boundary: (0..t).collect(),
            };
            let key = bg.canonical_key();
            if !classes.contains_key(&key) {
                classes.insert(key, bg.canonical());
                if out.len() + classes.len() > cap {
                    return Err(Error::Resource { what: "boundaried graph enumeration", limit: cap as u64 });
                }
            }
        }
        out.extend(classes.into_values());
    }
    Ok(out)
}
