//! Balanced recursive splitting of a triangulated polygon along diagonals.

use crate::geometry::IndexPair;
use crate::triangulation::Triangulation;

#[derive(Debug, Clone)]
pub struct DecompositionNode {
    pub parent: Option<usize>,
    pub children: Option<[usize; 2]>,
    /// Splitting diagonal of an internal node.
    pub splitter: Option<IndexPair>,
    /// Triangle ids of the region.
    pub triangles: Vec<usize>,
    /// Original polygon indices of the region, sorted; this is also the
    /// region's counter-clockwise boundary order.
    pub vertices: Vec<usize>,
    pub depth: usize,
}

impl DecompositionNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }
}

/// Binary region tree. Node 0 is the root (the whole polygon); every
/// diagonal of the triangulation splits exactly one node, chosen as the
/// centroid edge of the region's dual tree.
#[derive(Debug, Clone)]
pub struct DecompositionTree {
    nodes: Vec<DecompositionNode>,
    leaf_of_triangle: Vec<usize>,
    height: usize,
}

impl DecompositionTree {
    pub fn build(t: &Triangulation) -> Self {
        let m = t.triangles().len();
        let neighbors = t.neighbors();
        let mut nodes: Vec<DecompositionNode> = Vec::with_capacity(2 * m);
        let mut leaf_of_triangle = vec![usize::MAX; m];
        let mut member = vec![usize::MAX; m];
        let mut stack = vec![(None::<usize>, (0..m).collect::<Vec<usize>>(), 0usize)];

        // scratch buffers for the dual DFS
        let mut order = Vec::with_capacity(m);
        let mut dfs_parent = vec![usize::MAX; m];
        let mut size = vec![0usize; m];

        while let Some((parent, tris, depth)) = stack.pop() {
            let id = nodes.len();
            let mut vertices: Vec<usize> = tris.iter().flat_map(|&k| t.triangles()[k]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            nodes.push(DecompositionNode {
                parent,
                children: None,
                splitter: None,
                triangles: tris.clone(),
                vertices,
                depth,
            });
            if let Some(p) = parent {
                let ch = nodes[p].children.get_or_insert([usize::MAX; 2]);
                let slot = if ch[0] == usize::MAX { 0 } else { 1 };
                ch[slot] = id;
            }
            if tris.len() == 1 {
                leaf_of_triangle[tris[0]] = id;
                continue;
            }
            for &k in &tris {
                member[k] = id;
            }
            order.clear();
            order.push(tris[0]);
            dfs_parent[tris[0]] = usize::MAX;
            let mut head = 0;
            while head < order.len() {
                let cur = order[head];
                head += 1;
                for nb in neighbors[cur].iter().flatten() {
                    if member[*nb] == id && *nb != dfs_parent[cur] {
                        dfs_parent[*nb] = cur;
                        order.push(*nb);
                    }
                }
            }
            debug_assert_eq!(order.len(), tris.len());
            for &k in order.iter().rev() {
                size[k] = 1 + neighbors[k]
                    .iter()
                    .flatten()
                    .filter(|&&nb| member[nb] == id && dfs_parent[nb] == k)
                    .map(|&nb| size[nb])
                    .sum::<usize>();
            }
            let total = tris.len();
            let (_, cut, splitter) = order[1..]
                .iter()
                .map(|&k| {
                    let larger = size[k].max(total - size[k]);
                    (larger, k, shared_side(t, k, dfs_parent[k]))
                })
                .min_by_key(|&(larger, _, d)| (larger, d))
                .expect("region with two or more triangles has an internal diagonal");
            nodes[id].splitter = Some(splitter);

            let mut below = Vec::with_capacity(size[cut]);
            let mut st = vec![cut];
            while let Some(k) = st.pop() {
                below.push(k);
                for nb in neighbors[k].iter().flatten() {
                    if member[*nb] == id && dfs_parent[*nb] == k {
                        st.push(*nb);
                    }
                }
            }
            below.sort_unstable();
            let rest: Vec<usize> = tris.iter().copied().filter(|k| below.binary_search(k).is_err()).collect();
            // `rest` is popped first and becomes children[0]
            stack.push((Some(id), below, depth + 1));
            stack.push((Some(id), rest, depth + 1));
        }
        let height = nodes.iter().map(|n| n.depth).max().unwrap_or(0);
        Self { nodes, leaf_of_triangle, height }
    }

    pub fn nodes(&self) -> &[DecompositionNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &DecompositionNode {
        &self.nodes[id]
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn leaf_of_triangle(&self, t: usize) -> usize {
        self.leaf_of_triangle[t]
    }

    pub fn internal_nodes(&self) -> impl Iterator<Item = (usize, &DecompositionNode)> {
        self.nodes.iter().enumerate().filter(|(_, n)| !n.is_leaf())
    }
}

fn shared_side(t: &Triangulation, a: usize, b: usize) -> IndexPair {
    let ta = t.triangles()[a];
    let tb = t.triangles()[b];
    let common: Vec<usize> = ta.iter().copied().filter(|v| tb.contains(v)).collect();
    IndexPair::new(common[0], common[1])
}
