//! Named graphs and instance generators used by tests, the CLI and benches.

use rand::Rng;

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v);
        }
    }
    g
}

pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges)
}

/// `rows x cols` grid; vertex `(r, c)` is `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut g = Graph::new(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                g.add_edge(v, v + 1);
            }
            if r + 1 < rows {
                g.add_edge(v, v + cols);
            }
        }
    }
    g
}

pub fn disjoint_triangles(k: usize) -> Graph {
    let mut g = Graph::new(3 * k);
    for i in 0..k {
        let b = 3 * i;
        g.add_edge(b, b + 1);
        g.add_edge(b + 1, b + 2);
        g.add_edge(b, b + 2);
    }
    g
}

/// Central path `0..k`; path vertex `i` additionally forms a triangle with two
/// private vertices, so every path vertex is a cut vertex hanging one triangle.
pub fn triangles_on_path(k: usize) -> Graph {
    let mut g = path(k);
    for i in 0..k {
        let a = g.add_vertex();
        let b = g.add_vertex();
        g.add_edge(i, a);
        g.add_edge(i, b);
        g.add_edge(a, b);
    }
    g
}

/// Pendant-triangle chain of length `k`: a circular ladder on `2k` vertices
/// (two `k`-cycles joined by rungs; for `k = 2` a 4-cycle) with one triangle
/// hung by an edge off each outer-cycle vertex. `OPT` for `{K3}` is `k` plus
/// the ladder's own feedback number.
pub fn pendant_triangle_chain(k: usize) -> Graph {
    assert!(k >= 2);
    let mut g = Graph::new(2 * k);
    for i in 0..k {
        let j = (i + 1) % k;
        if i != j && !(k == 2 && i == 1) {
            g.add_edge(i, j);
            g.add_edge(k + i, k + j);
        }
        g.add_edge(i, k + i);
    }
    for i in 0..k {
        let c = g.add_vertex();
        let a = g.add_vertex();
        let b = g.add_vertex();
        g.add_edge(i, c);
        g.add_edge(c, a);
        g.add_edge(a, b);
        g.add_edge(b, c);
    }
    g
}

/// Attaches `tree` to `g`, identifying tree vertex 0 with `at`.
pub fn attach_tree(g: &Graph, at: usize, tree: &Graph) -> Graph {
    let mut out = g.clone();
    let mut map = vec![at; tree.n()];
    for slot in map.iter_mut().skip(1) {
        *slot = out.add_vertex();
    }
    for (u, v) in tree.edges() {
        out.add_edge(map[u], map[v]);
    }
    out
}

/// Grid with a pendant tree of `tree_size` vertices (beyond the attachment) at
/// the corner vertex 0.
pub fn grid_with_pendant_tree<R: Rng>(rows: usize, cols: usize, tree_size: usize, rng: &mut R) -> Graph {
    let tree = random_tree(tree_size + 1, rng);
    attach_tree(&grid(rows, cols), 0, &tree)
}

/// Uniform random recursive tree.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let p = rng.gen_range(0..v);
        g.add_edge(p, v);
    }
    g
}

/// Random forest: random tree with each edge dropped with probability 1/3.
pub fn random_forest<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let p = rng.gen_range(0..v);
        if rng.gen_ratio(2, 3) {
            g.add_edge(p, v);
        }
    }
    g
}

pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(petersen().m(), 15);
        assert!(petersen().neighbors(0).len() == 3);
        assert_eq!(grid(3, 3).m(), 12);
        assert_eq!(complete(5).m(), 10);
        assert_eq!(complete_bipartite(3, 3).m(), 9);
        let chain = pendant_triangle_chain(2);
        assert_eq!((chain.n(), chain.m()), (4 + 6, 4 + 8));
        let chain = pendant_triangle_chain(5);
        assert_eq!((chain.n(), chain.m()), (10 + 15, 15 + 20));
        let tp = triangles_on_path(6);
        assert_eq!((tp.n(), tp.m()), (18, 5 + 18));
    }
}
