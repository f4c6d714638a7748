//! Shortest-path trees inside a triangulated region.
//!
//! The tree is grown through the region's dual tree with a funnel per
//! crossed diagonal. A vertex lying exactly on the continuation of a funnel
//! edge is attached to the funnel vertex it passes through, so a vertex `u`
//! has parent `source` only when the open segment from `u` to the source
//! touches no other vertex.

use crate::geometry::{orientation, Point};
use crate::triangulation::Triangulation;

struct Frame {
    /// Funnel vertices from the left end of the crossed diagonal, through
    /// the apex, to the right end.
    funnel: Vec<usize>,
    apex: usize,
    triangle: usize,
}

/// Index into `funnel` of the vertex through which the taut path reaches `z`.
fn tangent(points: &dyn Fn(usize) -> Point, funnel: &[usize], apex: usize, z: Point) -> usize {
    let edge_sign = |j: usize| orientation(points(funnel[j]), points(funnel[j + 1]), z);
    if let Some(j) = (0..apex).find(|&j| edge_sign(j) <= 0) {
        return j;
    }
    if let Some(j) = (apex..funnel.len() - 1).rev().find(|&j| edge_sign(j) <= 0) {
        return j + 1;
    }
    apex
}

/// Fills `parent[u]` for every vertex `u` of the region with the last vertex
/// before `u` on the geodesic from `source`. `in_region` selects the
/// region's triangles.
pub(crate) fn geodesic_parents(
    t: &Triangulation,
    region: &[usize],
    in_region: &dyn Fn(usize) -> bool,
    source: usize,
    parent: &mut [usize],
) {
    let tris = t.triangles();
    let nbrs = t.neighbors();
    let poly = t.polygon();
    let points = |i: usize| poly.at(i);
    let mut stack = Vec::new();
    for &k in region {
        let tri = tris[k];
        let Some(c) = tri.iter().position(|&v| v == source) else {
            continue;
        };
        let (x, y) = (tri[(c + 1) % 3], tri[(c + 2) % 3]);
        parent[x] = source;
        parent[y] = source;
        if let Some(nb) = nbrs[k][c].filter(|&nb| in_region(nb)) {
            stack.push(Frame { funnel: vec![y, source, x], apex: 1, triangle: nb });
        }
    }
    parent[source] = source;
    while let Some(Frame { funnel, apex, triangle }) = stack.pop() {
        let l = funnel[0];
        let r = *funnel.last().unwrap();
        let tri = tris[triangle];
        let cz = tri.iter().position(|&v| v != l && v != r).unwrap();
        let z = tri[cz];
        let k = tangent(&points, &funnel, apex, points(z));
        parent[z] = funnel[k];
        let corner = |v: usize| tri.iter().position(|&w| w == v).unwrap();
        // side (l, z) is opposite corner r; side (z, r) is opposite corner l
        if let Some(nb) = nbrs[triangle][corner(r)].filter(|&nb| in_region(nb)) {
            let mut f = funnel[..=k].to_vec();
            f.push(z);
            stack.push(Frame { funnel: f, apex: apex.min(k), triangle: nb });
        }
        if let Some(nb) = nbrs[triangle][corner(l)].filter(|&nb| in_region(nb)) {
            let mut f = Vec::with_capacity(funnel.len() - k + 1);
            f.push(z);
            f.extend_from_slice(&funnel[k..]);
            stack.push(Frame { funnel: f, apex: apex.max(k) - k + 1, triangle: nb });
        }
    }
}
