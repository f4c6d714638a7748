//! Constant-time lowest common ancestor via Euler tour and a sparse table.

use crate::decomposition::DecompositionTree;

#[derive(Debug, Clone)]
pub struct LcaIndex {
    first: Vec<usize>,
    tour: Vec<usize>,
    depth: Vec<usize>,
    // table[k][i]: shallowest tour node in tour[i .. i + 2^k]
    table: Vec<Vec<usize>>,
}

impl LcaIndex {
    pub fn new(tree: &DecompositionTree) -> Self {
        let nodes = tree.nodes();
        let depth: Vec<usize> = nodes.iter().map(|n| n.depth).collect();
        let mut first = vec![usize::MAX; nodes.len()];
        let mut tour = Vec::with_capacity(2 * nodes.len());
        // (node, next child slot)
        let mut stack = vec![(tree.root(), 0usize)];
        while let Some(top) = stack.last_mut() {
            let (node, slot) = *top;
            if slot == 0 {
                first[node] = tour.len();
            }
            tour.push(node);
            match nodes[node].children {
                Some(ch) if slot < 2 => {
                    top.1 += 1;
                    stack.push((ch[slot], 0));
                }
                _ => {
                    stack.pop();
                }
            }
        }
        let len = tour.len();
        let mut table = vec![tour.clone()];
        let mut k = 1;
        while (1 << k) <= len {
            let prev = &table[k - 1];
            let half = 1 << (k - 1);
            let row: Vec<usize> = (0..=len - (1 << k))
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + half]);
                    if depth[a] <= depth[b] {
                        a
                    } else {
                        b
                    }
                })
                .collect();
            table.push(row);
            k += 1;
        }
        Self { first, tour, depth, table }
    }

    pub fn lca(&self, u: usize, v: usize) -> usize {
        let (mut l, mut r) = (self.first[u], self.first[v]);
        if l > r {
            std::mem::swap(&mut l, &mut r);
        }
        let k = (r - l + 1).ilog2() as usize;
        let (a, b) = (self.table[k][l], self.table[k][r + 1 - (1 << k)]);
        if self.depth[a] <= self.depth[b] {
            a
        } else {
            b
        }
    }

    pub fn tour_len(&self) -> usize {
        self.tour.len()
    }
}

/// Reference LCA by walking parent links.
pub fn naive_lca(tree: &DecompositionTree, mut u: usize, mut v: usize) -> usize {
    while tree.node(u).depth > tree.node(v).depth {
        u = tree.node(u).parent.unwrap();
    }
    while tree.node(v).depth > tree.node(u).depth {
        v = tree.node(v).parent.unwrap();
    }
    while u != v {
        u = tree.node(u).parent.unwrap();
        v = tree.node(v).parent.unwrap();
    }
    u
}
