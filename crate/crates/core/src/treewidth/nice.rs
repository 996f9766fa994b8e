use serde::{Deserialize, Serialize};

use super::TreeDecomposition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceNode {
    pub kind: NiceKind,
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
    pub width: usize,
}

impl NiceTreeDecomposition {
    /// Plain decomposition view (child-parent edges).
    pub fn to_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|n| n.bag.clone()).collect();
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.children.iter().map(move |&c| (c, i)))
            .collect();
        TreeDecomposition::new(bags, edges)
    }

    /// Node-type constraints at every node.
    pub fn check_nodes(&self) -> std::result::Result<(), String> {
        for (i, node) in self.nodes.iter().enumerate() {
            let kids: Vec<&NiceNode> = node.children.iter().map(|&c| &self.nodes[c]).collect();
            let ok = match node.kind {
                NiceKind::Leaf => kids.is_empty() && node.bag.is_empty(),
                NiceKind::Introduce(v) => {
                    kids.len() == 1
                        && !kids[0].bag.contains(&v)
                        && with(&kids[0].bag, v) == node.bag
                }
                NiceKind::Forget(v) => {
                    kids.len() == 1 && kids[0].bag.contains(&v) && with(&node.bag, v) == kids[0].bag
                }
                NiceKind::Join => kids.len() == 2 && kids.iter().all(|k| k.bag == node.bag),
            };
            if !ok {
                return Err(format!("node {i} violates {:?} constraints", node.kind));
            }
        }
        Ok(())
    }
}

fn with(bag: &[usize], v: usize) -> Vec<usize> {
    let mut b = bag.to_vec();
    b.push(v);
    b.sort_unstable();
    b
}

/// Converts a valid decomposition into nice form rooted at bag 0. Each tree
/// edge becomes a chain of forgets then introduces, one node per vertex of
/// the bags' symmetric difference.
pub fn make_nice(t: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    let violations = t.structural_violations();
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(violations));
    }
    let adj = t.tree_adjacency();
    let mut b = Builder { t, adj: &adj, nodes: Vec::new() };
    let root = b.build(0, usize::MAX);
    Ok(NiceTreeDecomposition { nodes: b.nodes, root, width: t.width })
}

struct Builder<'a> {
    t: &'a TreeDecomposition,
    adj: &'a [Vec<usize>],
    nodes: Vec<NiceNode>,
}

impl Builder<'_> {
    fn push(&mut self, kind: NiceKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Returns a node whose bag equals bag `i`.
    fn build(&mut self, i: usize, parent: usize) -> usize {
        let target = self.t.bags[i].clone();
        let kids: Vec<usize> = self.adj[i].iter().copied().filter(|&c| c != parent).collect();
        let mut tops = Vec::new();
        if kids.is_empty() {
            let leaf = self.push(NiceKind::Leaf, Vec::new(), Vec::new());
            tops.push(self.transition(leaf, &target));
        }
        for c in kids {
            let sub = self.build(c, i);
            tops.push(self.transition(sub, &target));
        }
        let mut acc = tops[0];
        for &other in &tops[1..] {
            acc = self.push(NiceKind::Join, target.clone(), vec![acc, other]);
        }
        acc
    }

    fn transition(&mut self, mut node: usize, target: &[usize]) -> usize {
        let mut bag = self.nodes[node].bag.clone();
        let forget: Vec<usize> = bag.iter().copied().filter(|v| !target.contains(v)).collect();
        for v in forget {
            bag.retain(|&w| w != v);
            node = self.push(NiceKind::Forget(v), bag.clone(), vec![node]);
        }
        let intro: Vec<usize> = target.iter().copied().filter(|v| !bag.contains(v)).collect();
        for v in intro {
            bag = with(&bag, v);
            node = self.push(NiceKind::Introduce(v), bag.clone(), vec![node]);
        }
        node
    }
}
