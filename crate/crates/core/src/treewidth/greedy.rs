use std::collections::BTreeSet;

use super::TreeDecomposition;
use crate::graph::Graph;

/// Min-degree elimination ordering; ties go to the smallest vertex id.
pub fn min_degree_ordering(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (adj[v].len(), v))
            .unwrap();
        eliminate(&mut adj, v);
        alive[v] = false;
        order.push(v);
    }
    order
}

fn eliminate(adj: &mut [BTreeSet<usize>], v: usize) -> Vec<usize> {
    let ns: Vec<usize> = adj[v].iter().copied().collect();
    for (i, &a) in ns.iter().enumerate() {
        adj[a].remove(&v);
        for &b in &ns[i + 1..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    adj[v].clear();
    ns
}

/// Decomposition induced by an elimination ordering: bag `i` is the `i`-th
/// eliminated vertex plus its neighbors in the fill graph at that time, hung
/// below the bag of the earliest-eliminated of those neighbors.
pub fn decomposition_from_ordering(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    assert_eq!(order.len(), n);
    if n == 0 {
        return TreeDecomposition::new(vec![Vec::new()], Vec::new());
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n - 1);
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let higher = eliminate(&mut adj, v);
        let mut bag = higher.clone();
        bag.push(v);
        bags.push(bag);
        match higher.iter().map(|&w| pos[w]).min() {
            Some(p) => edges.push((i, p)),
            None => roots.push(i),
        }
    }
    // One tree per component; chain the roots together.
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition::new(bags, edges)
}

/// Min-degree heuristic decomposition.
pub fn greedy_decomposition(g: &Graph) -> TreeDecomposition {
    decomposition_from_ordering(g, &min_degree_ordering(g))
}
