//! Canonical forms for small vertex-colored graphs.
//!
//! Color refinement plus individualization: every leaf of the search tree is a
//! vertex ordering compatible with an isomorphism-invariant refinement, and the
//! canonical key is the lexicographically smallest leaf encoding. Branches on
//! twin vertices are skipped since swapping twins is a color-preserving
//! automorphism and yields identical subtrees.

use crate::graph::Graph;

/// Maximum vertex count handled by the bitmask representation.
pub const MAX_CANON_VERTICES: usize = 64;

const DEFAULT_LEAF_BUDGET: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey(pub Vec<u64>);

#[derive(Debug, Clone)]
pub struct CanonForm {
    pub key: CanonKey,
    /// `order[i]` is the input vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

/// Canonical form of `g` under the initial vertex coloring `colors`.
/// Panics if the leaf budget is exhausted; see [`try_canonical_form`].
pub fn canonical_form(g: &Graph, colors: &[u32]) -> CanonForm {
    try_canonical_form(g, colors, usize::MAX).expect("unbounded search cannot fail")
}

pub fn uncolored(g: &Graph) -> CanonForm {
    canonical_form(g, &vec![0; g.n()])
}

/// Isomorphism test through canonical keys.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && uncolored(a).key == uncolored(b).key
}

pub fn try_canonical_form(g: &Graph, colors: &[u32], leaf_budget: usize) -> Option<CanonForm> {
    assert!(g.n() <= MAX_CANON_VERTICES, "canonical form limited to 64 vertices");
    assert_eq!(colors.len(), g.n());
    canonical_from_masks(&g.masks(), colors, leaf_budget)
}

/// Canonical key if found within the default budget.
pub(crate) fn bounded_key(masks: &[u64]) -> Option<CanonKey> {
    canonical_from_masks(masks, &vec![0; masks.len()], DEFAULT_LEAF_BUDGET).map(|f| f.key)
}

pub(crate) fn canonical_from_masks(masks: &[u64], colors: &[u32], leaf_budget: usize) -> Option<CanonForm> {
    let n = masks.len();
    let mut search = Search {
        masks,
        input_colors: colors,
        best: None,
        leaves: 0,
        budget: leaf_budget,
    };
    let mut col = dense_ranks(colors);
    search.descend(&mut col);
    if search.leaves > search.budget {
        return None;
    }
    let (key, order) = search.best.unwrap_or_else(|| (CanonKey(vec![n as u64]), Vec::new()));
    Some(CanonForm { key, order })
}

struct Search<'a> {
    masks: &'a [u64],
    input_colors: &'a [u32],
    best: Option<(CanonKey, Vec<usize>)>,
    leaves: usize,
    budget: usize,
}

impl Search<'_> {
    fn descend(&mut self, col: &mut Vec<u32>) {
        if self.leaves > self.budget {
            return;
        }
        refine(self.masks, col);
        let n = col.len();
        let mut counts = vec![0usize; n];
        for &c in col.iter() {
            counts[c as usize] += 1;
        }
        // Smallest non-singleton cell, lowest color among equals.
        let target = (0..n)
            .filter(|&c| counts[c] > 1)
            .min_by_key(|&c| (counts[c], c));
        let Some(cell) = target else {
            self.leaf(col);
            return;
        };
        let cell = cell as u32;
        let members: Vec<usize> = (0..n).filter(|&v| col[v] == cell).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<u32> = col
                .iter()
                .enumerate()
                .map(|(w, &c)| 2 * c + u32::from(c == cell && w != v))
                .collect();
            self.descend(&mut next);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let bu = 1u64 << u;
        let bv = 1u64 << v;
        (self.masks[u] & !bv) == (self.masks[v] & !bu)
    }

    fn leaf(&mut self, col: &[u32]) {
        self.leaves += 1;
        let n = col.len();
        let mut order = vec![0usize; n];
        for v in 0..n {
            order[col[v] as usize] = v;
        }
        let mut key = Vec::with_capacity(2 * n + 1);
        key.push(n as u64);
        key.extend(order.iter().map(|&v| u64::from(self.input_colors[v])));
        for &v in &order {
            let row = order
                .iter()
                .enumerate()
                .fold(0u64, |acc, (j, &w)| if self.masks[v] >> w & 1 == 1 { acc | 1 << j } else { acc });
            key.push(row);
        }
        let key = CanonKey(key);
        if self.best.as_ref().map_or(true, |(b, _)| key < *b) {
            self.best = Some((key, order));
        }
    }
}

fn dense_ranks(colors: &[u32]) -> Vec<u32> {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    colors
        .iter()
        .map(|c| distinct.binary_search(c).unwrap() as u32)
        .collect()
}

/// Iterated color refinement; the new color of `v` is the rank of
/// `(color(v), sorted neighbor colors)`, so cell order is invariant.
fn refine(masks: &[u64], col: &mut Vec<u32>) {
    let n = col.len();
    let mut classes = {
        let mut c = col.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<u32> = (0..n).filter(|&w| masks[v] >> w & 1 == 1).map(|w| col[w]).collect();
                ns.sort_unstable();
                (col[v], ns)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            col[v] = distinct.binary_search(&&sigs[v]).unwrap() as u32;
        }
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
}
