//! Polygon triangulations, their dual trees and per-vertex diagonal fans.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::geometry::{orientation, IndexPair, Point, Polygon};

/// A triangulation of a simple polygon.
///
/// Triangles are stored counter-clockwise. `neighbors[t][k]` is the triangle
/// across the side opposite corner `k` of triangle `t`, if that side is a
/// diagonal.
#[derive(Debug, Clone)]
pub struct Triangulation {
    polygon: Polygon,
    diagonals: Vec<IndexPair>,
    triangles: Vec<[usize; 3]>,
    neighbors: Vec<[Option<usize>; 3]>,
}

impl Triangulation {
    /// Ear clipping, always clipping the ear whose tip has the lowest index,
    /// with vertex 0 treated as the last candidate.
    pub fn ear_clipping(polygon: &Polygon) -> Self {
        let n = polygon.len();
        let mut prev: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
        let mut next: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let mut alive = vec![true; n];
        let mut ear = vec![false; n];
        // reflex or flat vertices of the remaining chain
        let mut reflex: BTreeSet<usize> = BTreeSet::new();
        let p = |i: usize| polygon.at(i);
        for i in 0..n {
            if orientation(p(prev[i]), p(i), p(next[i])) <= 0 {
                reflex.insert(i);
            }
        }
        let is_ear = |i: usize, prev: &[usize], next: &[usize], reflex: &BTreeSet<usize>| {
            let (a, b, c) = (prev[i], i, next[i]);
            if orientation(p(a), p(b), p(c)) <= 0 {
                return false;
            }
            // only reflex vertices can block a convex corner
            !reflex.iter().any(|&r| {
                r != a && r != c && point_in_closed_triangle(p(r), p(a), p(b), p(c))
            })
        };
        for i in 0..n {
            ear[i] = is_ear(i, &prev, &next, &reflex);
        }
        let mut diagonals = Vec::with_capacity(n.saturating_sub(3));
        let mut triangles = Vec::with_capacity(n - 2);
        let mut remaining = n;
        while remaining > 3 {
            let tip = (1..n)
                .chain(std::iter::once(0))
                .find(|&i| alive[i] && ear[i])
                .expect("every simple polygon with more than 3 vertices has an ear");
            let (a, c) = (prev[tip], next[tip]);
            triangles.push([a, tip, c]);
            diagonals.push(IndexPair::new(a, c));
            alive[tip] = false;
            next[a] = c;
            prev[c] = a;
            remaining -= 1;
            for v in [a, c] {
                if reflex.contains(&v) && orientation(p(prev[v]), p(v), p(next[v])) > 0 {
                    reflex.remove(&v);
                }
            }
            for v in [a, c] {
                ear[v] = is_ear(v, &prev, &next, &reflex);
            }
        }
        let last = (0..n).find(|&i| alive[i]).unwrap();
        triangles.push([prev[last], last, next[last]]);
        diagonals.sort();
        Self::assemble(polygon.clone(), diagonals, triangles)
    }

    /// Builds a triangulation from an explicit diagonal set, checking that
    /// the set is a full non-crossing family of diagonals of `polygon`.
    pub fn from_diagonals(polygon: &Polygon, diagonals: &[IndexPair]) -> Result<Self> {
        let n = polygon.len();
        if diagonals.len() != n - 3 {
            return Err(Error::InvalidTriangulation(format!(
                "expected {} diagonals, got {}",
                n - 3,
                diagonals.len()
            )));
        }
        let mut sorted: Vec<IndexPair> = diagonals.to_vec();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTriangulation("repeated diagonal".into()));
        }
        for d in &sorted {
            polygon.check_index(d.hi())?;
            if polygon.adjacent(d.lo(), d.hi()) || !polygon.is_diagonal(d.lo(), d.hi())? {
                return Err(Error::InvalidTriangulation(format!("({d}) is not a diagonal")));
            }
        }
        for (k, d) in sorted.iter().enumerate() {
            if let Some(e) = sorted[k + 1..].iter().find(|e| d.interleaves(e)) {
                return Err(Error::InvalidTriangulation(format!("({d}) crosses ({e})")));
            }
        }
        let triangles = triangles_from_diagonals(n, &sorted);
        Ok(Self::assemble(polygon.clone(), sorted, triangles))
    }

    fn assemble(polygon: Polygon, diagonals: Vec<IndexPair>, triangles: Vec<[usize; 3]>) -> Self {
        let mut by_side: HashMap<IndexPair, Vec<(usize, usize)>> = HashMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            for k in 0..3 {
                let side = IndexPair::new(tri[(k + 1) % 3], tri[(k + 2) % 3]);
                by_side.entry(side).or_default().push((t, k));
            }
        }
        let mut neighbors = vec![[None; 3]; triangles.len()];
        for sides in by_side.values() {
            if let [(t1, k1), (t2, k2)] = sides[..] {
                neighbors[t1][k1] = Some(t2);
                neighbors[t2][k2] = Some(t1);
            }
        }
        Self { polygon, diagonals, triangles, neighbors }
    }

    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    /// Diagonals in canonical sorted order.
    pub fn diagonals(&self) -> &[IndexPair] {
        &self.diagonals
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn neighbors(&self) -> &[[Option<usize>; 3]] {
        &self.neighbors
    }

    /// Edges of the dual tree as `(triangle, triangle, shared diagonal)`.
    pub fn dual_edges(&self) -> Vec<(usize, usize, IndexPair)> {
        let mut out = Vec::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            for k in 0..3 {
                if let Some(u) = self.neighbors[t][k] {
                    if t < u {
                        out.push((t, u, IndexPair::new(tri[(k + 1) % 3], tri[(k + 2) % 3])));
                    }
                }
            }
        }
        out
    }

    /// Checks every structural invariant; used by tests and debug assertions.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.polygon.len();
        let fail = |m: String| Err(Error::InvalidTriangulation(m));
        if self.diagonals.len() != n - 3 || self.triangles.len() != n - 2 {
            return fail("wrong number of diagonals or triangles".into());
        }
        for (k, d) in self.diagonals.iter().enumerate() {
            if !self.polygon.is_diagonal(d.lo(), d.hi())? {
                return fail(format!("({d}) is not a diagonal"));
            }
            if self.diagonals[k + 1..].iter().any(|e| d.interleaves(e)) {
                return fail(format!("({d}) crosses another diagonal"));
            }
        }
        let sides: BTreeSet<IndexPair> = self.diagonals.iter().copied().collect();
        let mut area = 0i128;
        for tri in &self.triangles {
            for k in 0..3 {
                let (a, b) = (tri[k], tri[(k + 1) % 3]);
                if !self.polygon.adjacent(a, b) && !sides.contains(&IndexPair::new(a, b)) {
                    return fail(format!("triangle side ({a},{b}) is neither edge nor diagonal"));
                }
            }
            let [a, b, c] = tri.map(|i| self.polygon.at(i));
            let doubled = crate::geometry::cross(a, b, c);
            if doubled <= 0 {
                return fail(format!("triangle {tri:?} is not counter-clockwise"));
            }
            area += doubled;
        }
        if area != self.polygon.doubled_area() {
            return fail("triangles do not tile the polygon".into());
        }
        if self.dual_edges().len() != n - 3 {
            return fail("dual graph is not a tree".into());
        }
        Ok(())
    }
}

/// Triangles of a polygon on `n` vertices determined by a complete set of
/// non-crossing diagonals, in counter-clockwise corner order.
pub fn triangles_from_diagonals(n: usize, diagonals: &[IndexPair]) -> Vec<[usize; 3]> {
    let fans = DiagonalFan::from_diagonals(n, diagonals);
    let mut out = Vec::with_capacity(n - 2);
    for i in 0..n {
        let offsets = fans.with_edges(i);
        for w in offsets.windows(2) {
            let (j, k) = ((i + w[0]) % n, (i + w[1]) % n);
            if i < j && i < k {
                out.push([i, j, k]);
            }
        }
    }
    out
}

fn point_in_closed_triangle(p: Point, a: Point, b: Point, c: Point) -> bool {
    orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 && orientation(c, a, p) >= 0
}

/// Sorted offsets `1 < s_1 < ... < s_l < n - 1` of the diagonals incident to
/// each vertex; increasing offset is counter-clockwise angular order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalFan {
    n: usize,
    offsets: Vec<Vec<usize>>,
}

impl DiagonalFan {
    pub fn new(t: &Triangulation) -> Self {
        Self::from_diagonals(t.polygon().len(), t.diagonals())
    }

    pub fn from_diagonals(n: usize, diagonals: &[IndexPair]) -> Self {
        let mut offsets = vec![Vec::new(); n];
        for d in diagonals {
            let (i, j) = (d.lo(), d.hi());
            offsets[i].push(j - i);
            offsets[j].push(n - (j - i));
        }
        for f in &mut offsets {
            f.sort_unstable();
        }
        Self { n, offsets }
    }

    pub fn at(&self, i: usize) -> &[usize] {
        &self.offsets[i]
    }

    /// Fan of vertex `i` with the two edge offsets `1` and `n - 1` added.
    pub fn with_edges(&self, i: usize) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.offsets[i].len() + 2);
        v.push(1);
        v.extend_from_slice(&self.offsets[i]);
        v.push(self.n - 1);
        v
    }

    pub fn total(&self) -> usize {
        self.offsets.iter().map(Vec::len).sum()
    }
}

/// Writes diagonals one per line as `i j`, sorted canonically.
pub fn format_diagonals(diagonals: &[IndexPair]) -> String {
    let mut sorted = diagonals.to_vec();
    sorted.sort();
    sorted.iter().map(|d| format!("{d}\n")).collect()
}
