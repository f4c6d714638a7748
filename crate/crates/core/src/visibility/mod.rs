//! Constant-time vertex-to-vertex visibility queries in a simple polygon.
//!
//! The polygon is triangulated and recursively split along diagonals into a
//! balanced [`DecompositionTree`]. Every vertex is associated with the
//! highest node whose splitting diagonal is incident to it (or with its ear
//! triangle if it has no incident diagonal), and stores, for each splitting
//! diagonal `d` on the root path to that node, the part of `d` it sees.
//!
//! A query for `(v, w)` looks up the lowest common ancestor `R` of the two
//! associated nodes. If `R` is a leaf both vertices share a triangle. If one
//! of them is an endpoint of `R`'s splitter the other one's record answers
//! directly. Otherwise the segment `vw` must cross the splitter at a point
//! seen by both.

mod funnel;
pub mod lca;

use crate::decomposition::DecompositionTree;
use crate::error::{Error, Result};
use crate::geometry::{line_param_on_chord, orientation, IndexPair, Polygon, Rational};
use crate::triangulation::Triangulation;

pub use lca::LcaIndex;

/// The part of a splitting diagonal `d = ab` seen by a vertex of its region,
/// as parameters along `d` from `a` (0) to `b` (1).
///
/// Points strictly between `lo` and `hi` are seen through the open interior.
/// The endpoints themselves are grazing contacts and count as blocked. The
/// diagonal's own endpoints are tracked separately in `sees_a` / `sees_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChordInterval {
    pub chord: IndexPair,
    pub lo: Rational,
    pub hi: Rational,
    pub sees_a: bool,
    pub sees_b: bool,
}

impl ChordInterval {
    pub fn is_empty(&self) -> bool {
        self.lo >= self.hi
    }

    /// `lo < t < hi`, counted as two predicate evaluations.
    pub fn contains(&self, t: Rational) -> bool {
        self.lo.cmp_counted(&t).is_lt() && t.cmp_counted(&self.hi).is_lt()
    }

    /// Whether the endpoint `e` of the chord is visible.
    pub fn sees_endpoint(&self, e: usize) -> bool {
        if e == self.chord.lo() {
            self.sees_a
        } else {
            self.sees_b
        }
    }
}

#[derive(Debug, Clone)]
pub struct VertexRecord {
    pub node: usize,
    /// Interval on the splitter of the ancestor at each depth `0..depth(node)`.
    pub intervals: Vec<ChordInterval>,
}

/// Reusable membership marks for region triangles.
struct RegionMarks {
    mark: Vec<usize>,
    parent_a: Vec<usize>,
    parent_b: Vec<usize>,
}

impl RegionMarks {
    fn new(triangles: usize, n: usize) -> Self {
        Self {
            mark: vec![usize::MAX; triangles],
            parent_a: vec![usize::MAX; n],
            parent_b: vec![usize::MAX; n],
        }
    }

    fn chord_intervals(
        &mut self,
        t: &Triangulation,
        stamp: usize,
        region: &[usize],
        d: IndexPair,
    ) -> Result<Vec<(usize, ChordInterval)>> {
        for &k in region {
            self.mark[k] = stamp;
        }
        let is_split = region.iter().any(|&k| {
            let tri = t.triangles()[k];
            tri.contains(&d.lo())
                && tri.contains(&d.hi())
                && (0..3).any(|c| {
                    !d.contains(tri[c])
                        && t.neighbors()[k][c].is_some_and(|nb| self.mark[nb] == stamp)
                })
        });
        if !is_split {
            return Err(Error::NotASplitter(d.lo(), d.hi()));
        }
        let mark = &self.mark;
        let in_region = |k: usize| mark[k] == stamp;
        let (a, b) = (d.lo(), d.hi());
        funnel::geodesic_parents(t, region, &in_region, a, &mut self.parent_a);
        funnel::geodesic_parents(t, region, &in_region, b, &mut self.parent_b);
        let poly = t.polygon();
        let (pa, pb) = (poly.at(a), poly.at(b));
        let mut vertices: Vec<usize> = region.iter().flat_map(|&k| t.triangles()[k]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut out = Vec::with_capacity(vertices.len());
        for v in vertices.into_iter().filter(|&v| v != a && v != b) {
            let pv = poly.at(v);
            let (ga, gb) = (self.parent_a[v], self.parent_b[v]);
            let sees_a = ga == a;
            let sees_b = gb == b;
            let end = |g: usize, seen: bool, at: Rational| {
                if seen {
                    Some(at)
                } else {
                    line_param_on_chord(pv, poly.at(g), pa, pb)
                }
            };
            let interval = match (end(ga, sees_a, Rational::ZERO), end(gb, sees_b, Rational::ONE)) {
                (Some(lo), Some(hi)) => ChordInterval {
                    chord: d,
                    lo: lo.clamp(Rational::ZERO, Rational::ONE),
                    hi: hi.clamp(Rational::ZERO, Rational::ONE),
                    sees_a,
                    sees_b,
                },
                // a bounding ray parallel to d: nothing of d is seen
                _ => ChordInterval { chord: d, lo: Rational::ONE, hi: Rational::ZERO, sees_a, sees_b },
            };
            out.push((v, interval));
        }
        Ok(out)
    }
}

/// Visible part of the splitting diagonal `d` for every vertex of the region
/// formed by `region` (triangle ids of `t`) other than the endpoints of `d`.
pub fn compute_chord_intervals(
    t: &Triangulation,
    region: &[usize],
    d: IndexPair,
) -> Result<Vec<(usize, ChordInterval)>> {
    RegionMarks::new(t.triangles().len(), t.polygon().len()).chord_intervals(t, 0, region, d)
}

#[derive(Debug, Clone)]
pub struct VisibilityIndex {
    triangulation: Triangulation,
    tree: DecompositionTree,
    lca: LcaIndex,
    records: Vec<VertexRecord>,
}

impl VisibilityIndex {
    /// Builds the index on an ear-clipping triangulation.
    pub fn build(polygon: &Polygon) -> Self {
        Self::with_triangulation(Triangulation::ear_clipping(polygon))
    }

    pub fn with_triangulation(triangulation: Triangulation) -> Self {
        let tree = DecompositionTree::build(&triangulation);
        let lca = LcaIndex::new(&tree);
        let n = triangulation.polygon().len();
        let mut node_of = vec![usize::MAX; n];
        // internal nodes are visited parents-first, so the first hit is highest
        let mut by_depth: Vec<usize> = (0..tree.nodes().len()).collect();
        by_depth.sort_by_key(|&id| tree.node(id).depth);
        for &id in &by_depth {
            if let Some(d) = tree.node(id).splitter {
                for v in [d.lo(), d.hi()] {
                    if node_of[v] == usize::MAX {
                        node_of[v] = id;
                    }
                }
            }
        }
        for (k, tri) in triangulation.triangles().iter().enumerate() {
            for &v in tri {
                if node_of[v] == usize::MAX {
                    node_of[v] = tree.leaf_of_triangle(k);
                }
            }
        }
        let placeholder = ChordInterval {
            chord: IndexPair::new(0, 1),
            lo: Rational::ONE,
            hi: Rational::ZERO,
            sees_a: false,
            sees_b: false,
        };
        let mut records: Vec<VertexRecord> = node_of
            .iter()
            .map(|&node| VertexRecord { node, intervals: vec![placeholder; tree.node(node).depth] })
            .collect();
        let mut marks = RegionMarks::new(triangulation.triangles().len(), n);
        for (id, node) in tree.internal_nodes() {
            let d = node.splitter.unwrap();
            let intervals = marks
                .chord_intervals(&triangulation, id, &node.triangles, d)
                .expect("a node's splitter splits its region");
            for (v, iv) in intervals {
                let rec = &mut records[v];
                if tree.node(rec.node).depth > node.depth {
                    rec.intervals[node.depth] = iv;
                }
            }
        }
        Self { triangulation, tree, lca, records }
    }

    pub fn polygon(&self) -> &Polygon {
        self.triangulation.polygon()
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.triangulation
    }

    pub fn tree(&self) -> &DecompositionTree {
        &self.tree
    }

    pub fn lca_index(&self) -> &LcaIndex {
        &self.lca
    }

    pub fn record(&self, v: usize) -> &VertexRecord {
        &self.records[v]
    }

    /// Total number of stored chord intervals.
    pub fn stored_intervals(&self) -> usize {
        self.records.iter().map(|r| r.intervals.len()).sum()
    }

    /// Whether vertices `v` and `w` see each other: the open segment between
    /// them lies in the open interior, or they are joined by an edge.
    pub fn visible(&self, v: usize, w: usize) -> Result<bool> {
        let poly = self.polygon();
        poly.check_index(v)?;
        poly.check_index(w)?;
        if v == w {
            return Err(Error::SameVertex(v));
        }
        if poly.adjacent(v, w) {
            return Ok(true);
        }
        let (rv, rw) = (&self.records[v], &self.records[w]);
        let region = self.lca.lca(rv.node, rw.node);
        let node = self.tree.node(region);
        let Some(d) = node.splitter else {
            return Ok(true);
        };
        let depth = node.depth;
        match (d.contains(v), d.contains(w)) {
            (true, true) => Ok(true),
            (false, true) => Ok(rv.intervals[depth].sees_endpoint(w)),
            (true, false) => Ok(rw.intervals[depth].sees_endpoint(v)),
            (false, false) => {
                let (pa, pb) = (poly.at(d.lo()), poly.at(d.hi()));
                let (pv, pw) = (poly.at(v), poly.at(w));
                // vw must cross the open chord properly; touching an endpoint
                // of d is boundary contact
                if orientation(pv, pw, pa) * orientation(pv, pw, pb) >= 0 {
                    return Ok(false);
                }
                if orientation(pa, pb, pv) * orientation(pa, pb, pw) >= 0 {
                    return Ok(false);
                }
                let t = line_param_on_chord(pv, pw, pa, pb).expect("crossing segments are not parallel");
                Ok(rv.intervals[depth].contains(t) && rw.intervals[depth].contains(t))
            }
        }
    }
}
