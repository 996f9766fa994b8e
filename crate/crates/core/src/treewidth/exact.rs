//! Exact treewidth by dynamic programming over elimination prefixes:
//! `TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|)`, where `Q(S, v)` is the
//! set of vertices outside `S + v` reachable from `v` through `S`.

use super::{decomposition_from_ordering, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactConfig {
    /// Largest connected component the DP will accept.
    pub max_vertices: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig { max_vertices: 20 }
    }
}

pub fn exact_treewidth(g: &Graph, w_max: usize) -> Result<Option<(usize, TreeDecomposition)>> {
    exact_treewidth_with(g, w_max, &ExactConfig::default())
}

/// Exact width and an optimal decomposition, or `None` if treewidth exceeds `w_max`.
pub fn exact_treewidth_with(g: &Graph, w_max: usize, cfg: &ExactConfig) -> Result<Option<(usize, TreeDecomposition)>> {
    let comps = g.components();
    if let Some(big) = comps.iter().find(|c| c.len() > cfg.max_vertices.min(30)) {
        return Err(Error::Resource {
            what: "exact treewidth component size",
            limit: big.len().min(cfg.max_vertices) as u64,
        });
    }
    let mut order = Vec::with_capacity(g.n());
    let mut width = 0;
    for comp in &comps {
        let sub = g.induced(comp);
        match optimal_ordering(&sub, w_max) {
            Some((w, local)) => {
                width = width.max(w);
                order.extend(local.into_iter().map(|i| comp[i]));
            }
            None => return Ok(None),
        }
    }
    let td = decomposition_from_ordering(g, &order);
    debug_assert_eq!(td.width, width);
    Ok(Some((width, td)))
}

const INF: u8 = u8::MAX;

fn optimal_ordering(g: &Graph, w_max: usize) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    if n <= 1 {
        return Some((0, (0..n).collect()));
    }
    let masks: Vec<u32> = g.masks().into_iter().map(|m| m as u32).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let cap = w_max.min(INF as usize - 1) as u8;
    let mut tw = vec![INF; 1usize << n];
    let mut choice = vec![0u8; 1usize << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = INF;
        let mut best_v = 0u8;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let prev = tw[rest as usize];
            if prev == INF || prev >= best {
                continue;
            }
            let q = q_size(&masks, rest, v);
            if q > cap {
                continue;
            }
            let val = prev.max(q);
            if val < best {
                best = val;
                best_v = v as u8;
            }
        }
        tw[s as usize] = best;
        choice[s as usize] = best_v;
    }
    if tw[full as usize] == INF {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize];
        order.push(v as usize);
        s &= !(1 << v);
    }
    order.reverse();
    Some((tw[full as usize] as usize, order))
}

fn q_size(masks: &[u32], s: u32, v: usize) -> u8 {
    let mut comp = 1u32 << v;
    let mut frontier = comp;
    let mut reach = 0u32;
    while frontier != 0 {
        let mut next = 0u32;
        let mut bits = frontier;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= masks[x];
        }
        reach |= next;
        frontier = next & s & !comp;
        comp |= frontier;
    }
    (reach & !s & !(1u32 << v)).count_ones() as u8
}

#[cfg(test)]
mod tests {
    use super::super::{greedy_decomposition, validate_decomposition};
    use super::*;
    use crate::generators::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tw(g: &Graph) -> usize {
        let (w, td) = exact_treewidth(g, 30).unwrap().unwrap();
        assert!(validate_decomposition(g, &td));
        assert_eq!(td.width, w);
        w
    }

    /// Independent oracle: width of the best ordering over all permutations.
    fn permutation_oracle(g: &Graph) -> usize {
        fn rec(g: &Graph, order: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut usize) {
            if order.len() == g.n() {
                *best = (*best).min(decomposition_from_ordering(g, order).width);
                return;
            }
            for v in 0..g.n() {
                if !used[v] {
                    used[v] = true;
                    order.push(v);
                    rec(g, order, used, best);
                    order.pop();
                    used[v] = false;
                }
            }
        }
        let mut best = usize::MAX;
        rec(g, &mut Vec::new(), &mut vec![false; g.n()], &mut best);
        best
    }

    #[test]
    fn known_widths() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(tw(&random_tree(6, &mut rng)), 1);
        assert_eq!(tw(&cycle(6)), 2);
        assert_eq!(tw(&complete(4)), 3);
        assert_eq!(tw(&petersen()), 4);
        assert_eq!(tw(&grid(3, 3)), 3);
        assert_eq!(tw(&grid(4, 4)), 4);
        assert_eq!(tw(&Graph::new(3)), 0);
    }

    #[test]
    fn respects_w_max() {
        assert!(exact_treewidth(&petersen(), 3).unwrap().is_none());
        assert!(exact_treewidth(&petersen(), 4).unwrap().is_some());
        assert!(exact_treewidth(&complete(4), 2).unwrap().is_none());
    }

    #[test]
    fn budget() {
        let cfg = ExactConfig { max_vertices: 5 };
        assert!(matches!(exact_treewidth_with(&cycle(6), 3, &cfg), Err(Error::Resource { .. })));
        assert!(exact_treewidth_with(&disjoint_triangles(4), 3, &cfg).unwrap().is_some());
    }

    #[test]
    fn matches_permutation_oracle_and_minimality() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for trial in 0..60 {
            let n = 2 + trial % 6;
            let g = gnp(n, [0.3, 0.5, 0.8][trial % 3], &mut rng);
            let w = tw(&g);
            assert_eq!(w, permutation_oracle(&g));
            if w > 0 {
                assert!(exact_treewidth(&g, w - 1).unwrap().is_none());
            }
            assert!(greedy_decomposition(&g).width >= w);
        }
    }

    #[test]
    fn minimal_on_nine_vertex_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..30 {
            let g = gnp(9, 0.4, &mut rng);
            let w = tw(&g);
            if w > 0 {
                assert!(exact_treewidth(&g, w - 1).unwrap().is_none());
            }
            assert!(greedy_decomposition(&g).width >= w);
        }
    }
}
