//! Tree decompositions: validation, exact and heuristic construction, nice form.

mod exact;
mod greedy;
mod nice;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use exact::{exact_treewidth, exact_treewidth_with, ExactConfig};
pub use greedy::{decomposition_from_ordering, greedy_decomposition, min_degree_ordering};
pub use nice::{make_nice, NiceKind, NiceNode, NiceTreeDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    /// Sorted vertex sets.
    pub bags: Vec<Vec<usize>>,
    /// Tree edges over bag indices.
    pub edges: Vec<(usize, usize)>,
    /// Largest bag size minus one (zero when all bags are empty).
    pub width: usize,
}

impl TreeDecomposition {
    pub fn new(mut bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Self {
        for b in &mut bags {
            b.sort_unstable();
            b.dedup();
        }
        let width = bag_width(&bags);
        TreeDecomposition { bags, edges, width }
    }

    pub fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            if a < adj.len() && b < adj.len() {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Tree-shape and occurrence-connectivity violations; no graph needed.
    pub fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let k = self.bags.len();
        if k == 0 {
            out.push(Violation::NoBags);
            return out;
        }
        if self.edges.iter().any(|&(a, b)| a >= k || b >= k || a == b) || self.edges.len() + 1 != k || !connected(k, &self.tree_adjacency(), |_| true) {
            out.push(Violation::NotATree);
            return out;
        }
        let adj = self.tree_adjacency();
        let max_v = self.bags.iter().flatten().copied().max().map_or(0, |v| v + 1);
        let mut holders = vec![Vec::new(); max_v];
        for (i, b) in self.bags.iter().enumerate() {
            for &v in b {
                holders[v].push(i);
            }
        }
        for (v, hs) in holders.iter().enumerate() {
            if hs.len() > 1 {
                let mut inside = vec![false; k];
                for &h in hs {
                    inside[h] = true;
                }
                if !connected_from(hs[0], hs.len(), &adj, |i| inside[i]) {
                    out.push(Violation::OccurrenceDisconnected(v));
                }
            }
        }
        let actual = bag_width(&self.bags);
        if actual != self.width {
            out.push(Violation::WidthMismatch { declared: self.width, actual });
        }
        out
    }

    pub fn violations(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut covered = vec![false; g.n()];
        for (i, b) in self.bags.iter().enumerate() {
            for &v in b {
                if v >= g.n() {
                    out.push(Violation::VertexOutOfRange { bag: i, vertex: v });
                } else {
                    covered[v] = true;
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        out.extend((0..g.n()).filter(|&v| !covered[v]).map(Violation::VertexUncovered));
        for (u, v) in g.edges() {
            let inside = self
                .bags
                .iter()
                .any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok());
            if !inside {
                out.push(Violation::EdgeUncovered(u, v));
            }
        }
        out.extend(self.structural_violations());
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    NoBags,
    NotATree,
    VertexOutOfRange { bag: usize, vertex: usize },
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    OccurrenceDisconnected(usize),
    WidthMismatch { declared: usize, actual: usize },
}

/// All decomposition conditions plus the declared width.
pub fn validate_decomposition(g: &Graph, t: &TreeDecomposition) -> bool {
    t.violations(g).is_empty()
}

fn bag_width(bags: &[Vec<usize>]) -> usize {
    bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
}

fn connected(k: usize, adj: &[Vec<usize>], member: impl Fn(usize) -> bool) -> bool {
    connected_from(0, k, adj, member)
}

fn connected_from(start: usize, expect: usize, adj: &[Vec<usize>], member: impl Fn(usize) -> bool) -> bool {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(a) = stack.pop() {
        for &b in &adj[a] {
            if !seen[b] && member(b) {
                seen[b] = true;
                count += 1;
                stack.push(b);
            }
        }
    }
    count == expect
}

/// Text form: `s td <bags> <width> <n>`, then `b <i> <v...>` lines, then tree
/// edges `<i> <j>`; all indices 1-based.
pub fn write_decomposition(t: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    writeln!(out, "s td {} {} {}", t.bags.len(), t.width, n).unwrap();
    for (i, bag) in t.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in &t.edges {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

/// Inverse of [`write_decomposition`]; returns the decomposition and `n`.
pub fn parse_decomposition(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::parse(line_no, format!("bad integer {s:?}")))
        };
        match (header, toks[0]) {
            (None, "s") => {
                if toks.len() != 5 || toks[1] != "td" {
                    return Err(Error::parse(line_no, "expected `s td <bags> <width> <n>`"));
                }
                let h = (num(toks[2])?, num(toks[3])?, num(toks[4])?);
                bags = vec![None; h.0];
                header = Some(h);
            }
            (None, _) => return Err(Error::parse(line_no, "missing `s td` header")),
            (Some((k, _, n)), "b") => {
                let i = num(toks.get(1).ok_or_else(|| Error::parse(line_no, "missing bag index"))?)?;
                if i == 0 || i > k {
                    return Err(Error::parse(line_no, format!("bag index {i} out of range")));
                }
                let mut bag = Vec::new();
                for tok in &toks[2..] {
                    let v = num(tok)?;
                    if v == 0 || v > n {
                        return Err(Error::parse(line_no, format!("vertex {v} out of range")));
                    }
                    bag.push(v - 1);
                }
                bags[i - 1] = Some(bag);
            }
            (Some((k, _, _)), _) => {
                if toks.len() != 2 {
                    return Err(Error::parse(line_no, "expected tree edge `i j`"));
                }
                let (a, b) = (num(toks[0])?, num(toks[1])?);
                if a == 0 || b == 0 || a > k || b > k {
                    return Err(Error::parse(line_no, "tree edge endpoint out of range"));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (_, width, n) = header.ok_or_else(|| Error::parse(1, "missing `s td` header"))?;
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(0, format!("bag {} missing", i + 1))))
        .collect::<Result<_>>()?;
    let mut td = TreeDecomposition::new(bags, edges);
    td.width = width;
    Ok((td, n))
}
