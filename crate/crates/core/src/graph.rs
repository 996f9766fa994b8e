//! Simple undirected graphs and the edge-list text format.
//!
//! Vertices are `0..n`. Adjacency lists are kept sorted, so iteration order
//! (and everything derived from it) is deterministic.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    /// Optional external id per vertex, carried through replacements.
    labels: Vec<Option<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: vec![None; n],
        }
    }

    /// Builds a graph from 0-based edges. Panics on self-loops or
    /// out-of-range endpoints; use [`Graph::try_from_edges`] for input data.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::try_from_edges(n, edges).expect("invalid edge list")
    }

    pub fn try_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::parse(i + 1, format!("endpoint out of range in edge {u}-{v}")));
            }
            if u == v {
                return Err(Error::parse(i + 1, format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Adds `u`-`v`; returns false if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at {u}");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                true
            }
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.labels.push(None);
        self.adj.len() - 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, v: usize) -> Option<usize> {
        self.labels[v]
    }

    pub fn set_label(&mut self, v: usize, label: Option<usize>) {
        self.labels[v] = label;
    }

    pub fn clear_labels(&mut self) {
        self.labels.iter_mut().for_each(|l| *l = None);
    }

    pub fn has_labels(&self) -> bool {
        self.labels.iter().any(Option::is_some)
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `keep`; new vertex `i` is `keep[i]`. Labels follow.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            g.labels[i] = self.labels[v];
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Removes `del` and returns the remainder plus the new-to-old vertex map.
    pub fn remove_vertices(&self, del: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n()];
        for &v in del {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        (self.induced(&keep), keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with exactly one component. The empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = self.clone();
        for _ in 0..other.n() {
            g.add_vertex();
        }
        for v in 0..other.n() {
            g.labels[off + v] = other.labels[v];
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        g
    }

    /// Neighborhood bitmask; only valid for graphs with at most 64 vertices.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adj
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &w| m | (1u64 << w)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseWarning {
    DuplicateEdge { line: usize, u: usize, v: usize },
}

/// Parses the edge-list format: a header `n m`, then `m` lines `u v` with
/// 1-based endpoints. Blank lines and `c ` comment lines are skipped; a
/// comment of the form `c label <v> <id>` attaches an external id to vertex `v`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let (g, warnings) = parse_graph_with_warnings(text)?;
    for w in &warnings {
        let ParseWarning::DuplicateEdge { line, u, v } = w;
        log::warn!("line {line}: duplicate edge {u} {v} collapsed");
    }
    Ok(g)
}

pub fn parse_graph_with_warnings(text: &str) -> Result<(Graph, Vec<ParseWarning>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::default();
    let mut edge_lines = 0usize;
    let mut warnings = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "c" || line.starts_with("c ") {
            let mut parts = line.split_whitespace().skip(1);
            if parts.next() == Some("label") {
                if let Some((n, _)) = header {
                    let v = parse_num(parts.next(), line_no)?;
                    let id = parse_num(parts.next(), line_no)?;
                    if v == 0 || v > n {
                        return Err(Error::parse(line_no, format!("label for unknown vertex {v}")));
                    }
                    graph.labels[v - 1] = Some(id);
                }
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        let a = parse_num(parts.next(), line_no)?;
        let b = parse_num(parts.next(), line_no)?;
        if parts.next().is_some() {
            return Err(Error::parse(line_no, "expected exactly two integers"));
        }
        match header {
            None => {
                header = Some((a, b));
                graph = Graph::new(a);
            }
            Some((n, m)) => {
                if a == 0 || b == 0 || a > n || b > n {
                    return Err(Error::parse(line_no, format!("endpoint out of range 1..={n}: {a} {b}")));
                }
                if a == b {
                    return Err(Error::parse(line_no, format!("self-loop at vertex {a}")));
                }
                edge_lines += 1;
                if edge_lines > m {
                    return Err(Error::parse(line_no, format!("more than the declared {m} edges")));
                }
                if !graph.add_edge(a - 1, b - 1) {
                    warnings.push(ParseWarning::DuplicateEdge { line: line_no, u: a, v: b });
                }
            }
        }
    }
    let Some((_, m)) = header else {
        return Err(Error::parse(last_line.max(1), "missing header line `n m`"));
    };
    if edge_lines != m {
        return Err(Error::parse(
            last_line.max(1),
            format!("header declares {m} edges but {edge_lines} were given"),
        ));
    }
    Ok((graph, warnings))
}

fn parse_num(tok: Option<&str>, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, "expected two integers"))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("not a nonnegative integer: {tok:?}")))
}

/// Writes the edge-list format with lexicographically sorted edges.
/// Vertex labels, if any, are emitted as `c label` comments.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for v in 0..g.n() {
        if let Some(id) = g.labels[v] {
            writeln!(out, "c label {} {}", v + 1, id).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_path() {
        let g = parse_graph("3 2\n1 2\n2 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_isolated_vertex() {
        let g = parse_graph("1 0").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn duplicate_edges_collapse_with_warning() {
        let (g, w) = parse_graph_with_warnings("3 2\n1 2\n1 2").unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(w, vec![ParseWarning::DuplicateEdge { line: 3, u: 1, v: 2 }]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("c hello\n\n2 1\nc mid\n2 1\n").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn errors_name_the_line() {
        let err = parse_graph("3 1\n1 4").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, msg: "endpoint out of range 1..=3: 1 4".into() });
        assert!(matches!(parse_graph("3 1\n\n2 2"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("x y"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("3 2\n1 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn writer_sorts_and_round_trips() {
        let mut g = Graph::new(4);
        g.add_edge(3, 1);
        g.add_edge(2, 0);
        g.add_edge(0, 1);
        g.set_label(2, Some(17));
        let text = write_graph(&g);
        assert_eq!(text, "4 3\nc label 3 17\n1 2\n1 3\n2 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn components_and_forest() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]);
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(g.is_forest());
        assert!(!Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).is_forest());
    }
}
