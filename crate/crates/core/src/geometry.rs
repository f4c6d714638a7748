//! Exact integer predicates and polygon validation.
//!
//! Every decision in the crate bottoms out in [`orientation`], evaluated in
//! 128-bit arithmetic on coordinates bounded by `2^30`. Rational values only
//! appear as ray-shoot hit points and as parameters along a chord.

use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible absolute coordinate.
pub const COORD_LIMIT: i64 = 1 << 30;

thread_local! {
    static PREDICATE_EVALS: Cell<u64> = const { Cell::new(0) };
}

/// Number of predicate evaluations (orientation tests and exact rational
/// comparisons) performed on this thread since the last reset.
pub fn predicate_count() -> u64 {
    PREDICATE_EVALS.with(|c| c.get())
}

pub fn reset_predicate_count() {
    PREDICATE_EVALS.with(|c| c.set(0));
}

#[inline]
fn tick() {
    PREDICATE_EVALS.with(|c| c.set(c.get() + 1));
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Cross product `(b - a) x (c - a)` in exact arithmetic.
#[inline]
pub fn cross(a: Point, b: Point, c: Point) -> i128 {
    let (bx, by) = ((b.x - a.x) as i128, (b.y - a.y) as i128);
    let (cx, cy) = ((c.x - a.x) as i128, (c.y - a.y) as i128);
    bx * cy - by * cx
}

/// Sign of the turn `a -> b -> c`: `+1` left, `0` collinear, `-1` right.
#[inline]
pub fn orientation(a: Point, b: Point, c: Point) -> i32 {
    tick();
    cross(a, b, c).signum() as i32
}

/// An exact rational number with positive denominator.
///
/// Numerators and denominators stay below `2^64` in magnitude for all values
/// produced from bounded coordinates, so comparisons by cross-multiplication
/// fit in `i128`.
#[derive(Debug, Clone, Copy)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        if den < 0 {
            Self { num: -num, den: -den }
        } else {
            Self { num, den }
        }
    }

    pub const fn integer(v: i128) -> Self {
        Self { num: v, den: 1 }
    }

    pub const ZERO: Rational = Rational::integer(0);
    pub const ONE: Rational = Rational::integer(1);

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    /// Comparison that counts as one predicate evaluation.
    pub fn cmp_counted(&self, other: &Self) -> Ordering {
        tick();
        self.cmp(other)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Rational {}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// A point with rational coordinates `(x_num / den, y_num / den)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn from_point(p: Point) -> Self {
        Self {
            x: Rational::integer(p.x as i128),
            y: Rational::integer(p.y as i128),
        }
    }
}

/// How two closed segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentRelation {
    Disjoint,
    ProperCrossing,
    /// They share exactly one point, which is an endpoint of at least one.
    EndpointTouch,
    /// Collinear with an overlap of positive length.
    CollinearOverlap,
}

/// `c` lies on the closed segment `ab`, given that the three are collinear.
fn on_segment_collinear(a: Point, b: Point, c: Point) -> bool {
    a.x.min(b.x) <= c.x && c.x <= a.x.max(b.x) && a.y.min(b.y) <= c.y && c.y <= a.y.max(b.y)
}

/// `c` lies strictly inside the segment `ab`.
pub fn strictly_between(a: Point, b: Point, c: Point) -> bool {
    orientation(a, b, c) == 0 && on_segment_collinear(a, b, c) && c != a && c != b
}

pub fn classify_segments(p: Point, q: Point, r: Point, s: Point) -> SegmentRelation {
    let o1 = orientation(p, q, r);
    let o2 = orientation(p, q, s);
    if o1 == 0 && o2 == 0 {
        // project onto the dominant axis
        let key = |a: Point| if p.x != q.x { a.x } else { a.y };
        let (a0, a1) = (key(p).min(key(q)), key(p).max(key(q)));
        let (b0, b1) = (key(r).min(key(s)), key(r).max(key(s)));
        let lo = a0.max(b0);
        let hi = a1.min(b1);
        return match lo.cmp(&hi) {
            Ordering::Less => SegmentRelation::CollinearOverlap,
            Ordering::Equal => SegmentRelation::EndpointTouch,
            Ordering::Greater => SegmentRelation::Disjoint,
        };
    }
    let o3 = orientation(r, s, p);
    let o4 = orientation(r, s, q);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return SegmentRelation::ProperCrossing;
    }
    let touches = (o1 == 0 && on_segment_collinear(p, q, r))
        || (o2 == 0 && on_segment_collinear(p, q, s))
        || (o3 == 0 && on_segment_collinear(r, s, p))
        || (o4 == 0 && on_segment_collinear(r, s, q));
    if touches {
        SegmentRelation::EndpointTouch
    } else {
        SegmentRelation::Disjoint
    }
}

/// True iff the open segments `pq` and `rs` share a point.
pub fn segments_properly_intersect(p: Point, q: Point, r: Point, s: Point) -> bool {
    matches!(
        classify_segments(p, q, r, s),
        SegmentRelation::ProperCrossing | SegmentRelation::CollinearOverlap
    )
}

/// Unordered pair of distinct vertex indices, stored with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexPair {
    i: usize,
    j: usize,
}

impl IndexPair {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "index pair needs distinct endpoints");
        if a < b {
            Self { i: a, j: b }
        } else {
            Self { i: b, j: a }
        }
    }

    pub fn lo(&self) -> usize {
        self.i
    }

    pub fn hi(&self) -> usize {
        self.j
    }

    pub fn contains(&self, v: usize) -> bool {
        self.i == v || self.j == v
    }

    /// Shift both endpoints by `s` modulo `n`.
    pub fn rotate(&self, s: usize, n: usize) -> Self {
        Self::new((self.i + s) % n, (self.j + s) % n)
    }

    /// Whether two chords of a convex cycle cross (their endpoints interleave).
    pub fn interleaves(&self, other: &IndexPair) -> bool {
        let inside = |v: usize| self.i < v && v < self.j;
        !self.contains(other.i)
            && !self.contains(other.j)
            && inside(other.i) != inside(other.j)
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.i, self.j)
    }
}

/// A validated simple polygon with counter-clockwise vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Point>,
    reversed: bool,
}

impl Polygon {
    /// Checks every polygon invariant. A clockwise input is reversed in
    /// place (vertex 0 stays first) and [`Polygon::was_reversed`] reports it.
    /// Error indices refer to the input order.
    pub fn validate(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        if let Some(i) = vertices
            .iter()
            .position(|p| p.x.abs() > COORD_LIMIT || p.y.abs() > COORD_LIMIT)
        {
            return Err(Error::CoordinateOutOfRange(i));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (vertices[i], i));
        for w in order.windows(2) {
            if vertices[w[0]] == vertices[w[1]] {
                return Err(Error::DuplicateVertex(w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        for i in 0..n {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            if orientation(prev, cur, next) == 0 {
                // collinear: folding back is a spike, going straight a flat vertex
                let dot = (cur.x - prev.x) as i128 * (next.x - cur.x) as i128
                    + (cur.y - prev.y) as i128 * (next.y - cur.y) as i128;
                return Err(if dot < 0 {
                    Error::DegenerateSpike(i)
                } else {
                    Error::CollinearVertex(i)
                });
            }
        }
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (c, d) = (vertices[j], vertices[(j + 1) % n]);
                if classify_segments(a, b, c, d) != SegmentRelation::Disjoint {
                    return Err(Error::NotSimple(i, j));
                }
            }
        }
        let mut vertices = vertices;
        let reversed = doubled_area(&vertices) < 0;
        if reversed {
            vertices[1..].reverse();
        }
        Ok(Self { vertices, reversed })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn was_reversed(&self) -> bool {
        self.reversed
    }

    /// Vertex `i` with index arithmetic modulo `n`.
    pub fn at(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    pub fn next(&self, i: usize) -> usize {
        (i + 1) % self.len()
    }

    pub fn prev(&self, i: usize) -> usize {
        (i + self.len() - 1) % self.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.next(i) == j || self.next(j) == i
    }

    pub fn doubled_area(&self) -> i128 {
        doubled_area(&self.vertices)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.len() })
        }
    }

    pub fn is_reflex(&self, i: usize) -> Result<bool> {
        self.check_index(i)?;
        match orientation(self.at(self.prev(i)), self.at(i), self.at(self.next(i))) {
            0 => Err(Error::CollinearVertex(i)),
            o => Ok(o < 0),
        }
    }

    pub fn reflex_vertices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.is_reflex(i).unwrap_or(false))
            .collect()
    }

    /// Whether the direction from vertex `i` toward `target` enters the
    /// open interior angle at `i`.
    pub fn in_cone(&self, i: usize, target: Point) -> bool {
        let a = self.at(i);
        let a0 = self.at(self.prev(i));
        let a1 = self.at(self.next(i));
        if orientation(a, a1, a0) >= 0 {
            orientation(a, target, a0) > 0 && orientation(target, a, a1) > 0
        } else {
            !(orientation(a, target, a1) >= 0 && orientation(target, a, a0) >= 0)
        }
    }

    /// Reference diagonal test: the open segment between vertices `i` and `j`
    /// lies in the open interior of the polygon.
    pub fn is_diagonal(&self, i: usize, j: usize) -> Result<bool> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(Error::SameVertex(i));
        }
        if self.adjacent(i, j) {
            return Err(Error::AdjacentPair(i.min(j), i.max(j)));
        }
        if !self.in_cone(i, self.at(j)) || !self.in_cone(j, self.at(i)) {
            return Ok(false);
        }
        let (p, q) = (self.at(i), self.at(j));
        let n = self.len();
        for k in 0..n {
            if k != i && k != j && strictly_between(p, q, self.at(k)) {
                return Ok(false);
            }
        }
        for k in 0..n {
            let k1 = self.next(k);
            if k == i || k == j || k1 == i || k1 == j {
                continue;
            }
            if classify_segments(p, q, self.at(k), self.at(k1)) != SegmentRelation::Disjoint {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First boundary edge hit by the open ray from vertex `origin` in
    /// direction `dir`. Returns the edge index `e` (edge `e -> e+1`) and the
    /// exact hit point. When the ray passes exactly through a vertex the
    /// lower-indexed of its two edges is reported.
    pub fn ray_shoot(&self, origin: usize, dir: Point) -> (usize, RationalPoint) {
        let o = self.at(origin);
        let far = Point::new(o.x + dir.x, o.y + dir.y);
        // best hit as the ray parameter s = num/den, compared exactly
        let mut best: Option<(Rational, usize)> = None;
        for e in 0..self.len() {
            let e1 = self.next(e);
            if e == origin || e1 == origin {
                continue;
            }
            let (c, d) = (self.at(e), self.at(e1));
            let oc = orientation(o, far, c);
            let od = orientation(o, far, d);
            if oc * od > 0 {
                continue;
            }
            let s = if oc == 0 && od == 0 {
                // ray runs along the edge; nearest endpoint ahead
                let along = |p: Point| {
                    (p.x - o.x) as i128 * dir.x as i128 + (p.y - o.y) as i128 * dir.y as i128
                };
                let dd = dir.x as i128 * dir.x as i128 + dir.y as i128 * dir.y as i128;
                let t = along(c).min(along(d));
                if t <= 0 {
                    continue;
                }
                Rational::new(t, dd)
            } else {
                // o + s*dir on line cd: s = cross(c - o, d - c) / cross(dir, d - c)
                let ex = (d.x - c.x) as i128;
                let ey = (d.y - c.y) as i128;
                let den = dir.x as i128 * ey - dir.y as i128 * ex;
                if den == 0 {
                    continue;
                }
                let num = (c.x - o.x) as i128 * ey - (c.y - o.y) as i128 * ex;
                let s = Rational::new(num, den);
                if s <= Rational::ZERO {
                    continue;
                }
                s
            };
            if best.is_none_or(|(b, _)| s < b) {
                best = Some((s, e));
            }
        }
        let (s, e) = best.expect("interior ray from a polygon vertex must hit the boundary");
        let point = RationalPoint {
            x: Rational::new(o.x as i128 * s.den() + dir.x as i128 * s.num(), s.den()),
            y: Rational::new(o.y as i128 * s.den() + dir.y as i128 * s.num(), s.den()),
        };
        (e, point)
    }
}

pub fn doubled_area(points: &[Point]) -> i128 {
    let n = points.len();
    (0..n)
        .map(|i| {
            let (a, b) = (points[i], points[(i + 1) % n]);
            a.x as i128 * b.y as i128 - b.x as i128 * a.y as i128
        })
        .sum()
}

/// Parameter `t` of the intersection of line `(p, q)` with the line through
/// `a + t (b - a)`; `None` when the lines are parallel.
pub fn line_param_on_chord(p: Point, q: Point, a: Point, b: Point) -> Option<Rational> {
    let dx = (q.x - p.x) as i128;
    let dy = (q.y - p.y) as i128;
    let den = dx * (b.y - a.y) as i128 - dy * (b.x - a.x) as i128;
    if den == 0 {
        return None;
    }
    let num = dx * (p.y - a.y) as i128 - dy * (p.x - a.x) as i128;
    Some(Rational::new(num, den))
}
