//! Minor containment with certificates.
//!
//! The search walks the contraction poset of the host: a pattern `H` is a
//! minor of `G` iff `H` is a subgraph of some contraction of `G`. Each state
//! is a quotient graph whose vertices carry their branch sets; failed states
//! are memoized by canonical form so isomorphic quotients are explored once.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::canon::{bounded_key, CanonKey};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEdge {
    pub pattern: (usize, usize),
    pub host: (usize, usize),
}

/// Branch set per pattern vertex plus one host edge per pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<usize>>,
    pub witnesses: Vec<WitnessEdge>,
}

impl MinorModel {
    /// All host vertices used by the model, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.branch_sets.iter().flatten().copied().collect();
        vs.sort_unstable();
        vs
    }

    /// Checks the model against `host` and `pattern`.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> std::result::Result<(), String> {
        if self.branch_sets.len() != pattern.n() {
            return Err(format!("{} branch sets for {} pattern vertices", self.branch_sets.len(), pattern.n()));
        }
        let mut owner = vec![usize::MAX; host.n()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return Err(format!("branch set {i} is empty"));
            }
            for &v in set {
                if v >= host.n() {
                    return Err(format!("vertex {v} out of range"));
                }
                if owner[v] != usize::MAX {
                    return Err(format!("vertex {v} in branch sets {} and {i}", owner[v]));
                }
                owner[v] = i;
            }
            if !host.induced(set).is_connected() {
                return Err(format!("branch set {i} is not connected"));
            }
        }
        let mut covered: HashSet<(usize, usize)> = HashSet::new();
        for w in &self.witnesses {
            let (a, b) = w.pattern;
            let (u, v) = w.host;
            if u >= host.n() || v >= host.n() || !host.has_edge(u, v) {
                return Err(format!("witness {u}-{v} is not a host edge"));
            }
            let ok = (owner[u] == a && owner[v] == b) || (owner[u] == b && owner[v] == a);
            if !ok {
                return Err(format!("witness {u}-{v} does not join branch sets {a} and {b}"));
            }
            covered.insert((a.min(b), a.max(b)));
        }
        for (a, b) in pattern.edges() {
            if !covered.contains(&(a, b)) {
                return Err(format!("pattern edge {a}-{b} has no witness"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorConfig {
    /// Maximum number of expanded quotient states.
    pub state_budget: u64,
}

impl Default for MinorConfig {
    fn default() -> Self {
        MinorConfig { state_budget: 10_000_000 }
    }
}

pub fn has_minor(host: &Graph, pattern: &Graph) -> Result<Option<MinorModel>> {
    has_minor_with(host, pattern, &MinorConfig::default())
}

pub fn has_minor_with(host: &Graph, pattern: &Graph, cfg: &MinorConfig) -> Result<Option<MinorModel>> {
    assert!(pattern.n() > 0, "pattern must be nonempty");
    if host.n() > 64 {
        return Err(Error::Resource { what: "minor test host size", limit: 64 });
    }
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Ok(None);
    }
    let mut search = Search::new(pattern, cfg.state_budget);
    search.run(Quotient::of(host))
}

/// Planarity via Wagner's theorem (no K5 and no K3,3 minor).
pub fn is_planar(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n <= 4 {
        return Ok(true);
    }
    // Euler's bound is necessary for planarity, so failing it settles the answer.
    if g.m() > 3 * n - 6 {
        return Ok(false);
    }
    let k5 = crate::generators::complete(5);
    let k33 = crate::generators::complete_bipartite(3, 3);
    Ok(has_minor(g, &k5)?.is_none() && has_minor(g, &k33)?.is_none())
}

#[derive(Clone)]
struct Quotient {
    sets: Vec<Vec<usize>>,
    adj: Vec<u64>,
    /// Host edge realizing each quotient edge.
    wit: Vec<Vec<(usize, usize)>>,
}

impl Quotient {
    fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut wit = vec![vec![(usize::MAX, usize::MAX); n]; n];
        for (u, v) in g.edges() {
            wit[u][v] = (u, v);
            wit[v][u] = (u, v);
        }
        Quotient {
            sets: (0..n).map(|v| vec![v]).collect(),
            adj: g.masks(),
            wit,
        }
    }

    fn n(&self) -> usize {
        self.sets.len()
    }

    fn m(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn keep(&self, keep: &[usize]) -> Quotient {
        let mut index = [usize::MAX; 64];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut m = 0u64;
                let mut bits = self.adj[v];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if index[w] != usize::MAX {
                        m |= 1 << index[w];
                    }
                }
                m
            })
            .collect();
        let wit = keep
            .iter()
            .map(|&v| keep.iter().map(|&w| self.wit[v][w]).collect())
            .collect();
        Quotient {
            sets: keep.iter().map(|&v| self.sets[v].clone()).collect(),
            adj,
            wit,
        }
    }

    fn without(&self, v: usize) -> Quotient {
        let keep: Vec<usize> = (0..self.n()).filter(|&w| w != v).collect();
        self.keep(&keep)
    }

    /// Merges `b` into `a`.
    fn contract(&self, a: usize, b: usize) -> Quotient {
        let mut q = self.clone();
        let moved = std::mem::take(&mut q.sets[b]);
        q.sets[a].extend(moved);
        let mut fresh = q.adj[b] & !q.adj[a] & !(1 << a);
        while fresh != 0 {
            let c = fresh.trailing_zeros() as usize;
            fresh &= fresh - 1;
            q.wit[a][c] = q.wit[b][c];
            q.wit[c][a] = q.wit[b][c];
            q.adj[a] |= 1 << c;
            q.adj[c] |= 1 << a;
        }
        q.adj[a] &= !(1 << b);
        q.without(b)
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut bits = frontier;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push((0..n).filter(|&v| comp >> v & 1 == 1).collect());
        }
        out
    }
}

struct Search<'a> {
    pattern: &'a Graph,
    pattern_order: Vec<usize>,
    pattern_connected: bool,
    min_degree: usize,
    failed: HashSet<CanonKey>,
    states: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(pattern: &'a Graph, budget: u64) -> Self {
        let min_degree = (0..pattern.n()).map(|v| pattern.degree(v)).min().unwrap_or(0);
        Search {
            pattern,
            pattern_order: embedding_order(pattern),
            pattern_connected: pattern.is_connected(),
            min_degree,
            failed: HashSet::new(),
            states: 0,
            budget,
        }
    }

    fn run(&mut self, q: Quotient) -> Result<Option<MinorModel>> {
        let q = self.reduce(q);
        if q.n() < self.pattern.n() || q.m() < self.pattern.m() {
            return Ok(None);
        }
        if self.pattern_connected {
            let comps = q.components();
            if comps.len() > 1 {
                for comp in comps {
                    if comp.len() >= self.pattern.n() {
                        if let Some(model) = self.run(q.keep(&comp))? {
                            return Ok(Some(model));
                        }
                    }
                }
                return Ok(None);
            }
        }
        let key = bounded_key(&q.adj);
        if let Some(k) = &key {
            if self.failed.contains(k) {
                return Ok(None);
            }
        }
        self.states += 1;
        if self.states > self.budget {
            return Err(Error::Resource { what: "minor search states", limit: self.budget });
        }
        if let Some(image) = self.embed(&q) {
            return Ok(Some(self.model(&q, &image)));
        }
        if q.n() > self.pattern.n() {
            let mut edges: Vec<(u32, usize, usize)> = Vec::new();
            for a in 0..q.n() {
                for b in a + 1..q.n() {
                    if q.adj[a] >> b & 1 == 1 {
                        edges.push(((q.adj[a] & q.adj[b]).count_ones(), a, b));
                    }
                }
            }
            edges.sort_unstable();
            for (_, a, b) in edges {
                if let Some(model) = self.run(q.contract(a, b))? {
                    return Ok(Some(model));
                }
            }
        }
        if let Some(k) = key {
            self.failed.insert(k);
        }
        Ok(None)
    }

    /// Deletions and suppressions that cannot destroy a model of the pattern.
    fn reduce(&self, mut q: Quotient) -> Quotient {
        if self.min_degree == 0 {
            return q;
        }
        'outer: loop {
            for v in 0..q.n() {
                let d = q.degree(v);
                if d == 0 || (d == 1 && self.min_degree >= 2) {
                    q = q.without(v);
                    continue 'outer;
                }
                if d == 2 && self.min_degree >= 3 {
                    let a = q.adj[v].trailing_zeros() as usize;
                    q = q.contract(a, v);
                    continue 'outer;
                }
            }
            return q;
        }
    }

    /// Subgraph embedding of the pattern into `q` by backtracking.
    fn embed(&self, q: &Quotient) -> Option<Vec<usize>> {
        let mut image = vec![usize::MAX; self.pattern.n()];
        let mut used = 0u64;
        if self.place(q, 0, &mut image, &mut used) {
            Some(image)
        } else {
            None
        }
    }

    fn place(&self, q: &Quotient, depth: usize, image: &mut [usize], used: &mut u64) -> bool {
        if depth == self.pattern_order.len() {
            return true;
        }
        let p = self.pattern_order[depth];
        let need = self.pattern.degree(p);
        let mut allowed = !*used & low_mask(q.n());
        for &pn in self.pattern.neighbors(p) {
            if image[pn] != usize::MAX {
                allowed &= q.adj[image[pn]];
            }
        }
        while allowed != 0 {
            let v = allowed.trailing_zeros() as usize;
            allowed &= allowed - 1;
            if q.degree(v) < need {
                continue;
            }
            image[p] = v;
            *used |= 1 << v;
            if self.place(q, depth + 1, image, used) {
                return true;
            }
            *used &= !(1 << v);
            image[p] = usize::MAX;
        }
        false
    }

    fn model(&self, q: &Quotient, image: &[usize]) -> MinorModel {
        let branch_sets = image
            .iter()
            .map(|&v| {
                let mut s = q.sets[v].clone();
                s.sort_unstable();
                s
            })
            .collect();
        let witnesses = self
            .pattern
            .edges()
            .map(|(a, b)| {
                let (u, v) = q.wit[image[a]][image[b]];
                WitnessEdge { pattern: (a, b), host: (u.min(v), u.max(v)) }
            })
            .collect();
        MinorModel { branch_sets, witnesses }
    }
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Highest degree first, then greedily the vertex with most placed neighbors.
fn embedding_order(p: &Graph) -> Vec<usize> {
    let n = p.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = p.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (links, p.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}
