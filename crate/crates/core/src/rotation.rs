//! All cyclic shifts of `Q`'s numbering under which a fixed triangulation
//! of `P` is also a triangulation of `Q`.
//!
//! Rotation `s` maps `p_m` to `q_{m+s}`. At a reflex vertex `q_i` the two
//! incident edges extended into the interior bound a wedge, and any
//! triangulation of `Q` either has a diagonal at `q_i` inside the wedge or a
//! triangle at `q_i` whose far side crosses it. For every reflex vertex and
//! every rotation one of these is checked with at most three visibility
//! queries; a rotation is reported when it satisfies every reflex vertex.

use crate::error::{Error, Result};
use crate::geometry::{orientation, IndexPair, Point, Polygon, RationalPoint};
use crate::triangulation::{DiagonalFan, Triangulation};
use crate::visibility::VisibilityIndex;

/// Wedge bounds at one reflex vertex, as offsets from it: only a diagonal
/// `q_i q_{i+t}` with `sigma <= t < tau` can lie inside the wedge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wedge {
    pub vertex: usize,
    pub sigma: usize,
    pub tau: usize,
    /// Edge and point hit by the extension of `q_{i-1} q_i`.
    pub first_hit: (usize, RationalPoint),
    /// Edge and point hit by the extension of `q_{i+1} q_i`.
    pub second_hit: (usize, RationalPoint),
}

impl Wedge {
    pub fn is_empty(&self) -> bool {
        self.sigma >= self.tau
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeTable {
    n: usize,
    wedges: Vec<Wedge>,
}

fn same_point(h: &RationalPoint, p: Point) -> bool {
    h.x.num() == p.x as i128 * h.x.den() && h.y.num() == p.y as i128 * h.y.den()
}

impl WedgeTable {
    pub fn build(q: &Polygon) -> Self {
        let n = q.len();
        let off = |i: usize, v: usize| (v + n - i) % n;
        let wedges = q
            .reflex_vertices()
            .into_iter()
            .map(|i| {
                let (a, b, c) = (q.at(q.prev(i)), q.at(i), q.at(q.next(i)));
                let first_hit = q.ray_shoot(i, Point::new(b.x - a.x, b.y - a.y));
                let second_hit = q.ray_shoot(i, Point::new(b.x - c.x, b.y - c.y));
                // the first ray is met first when walking from q_{i+1}; a
                // vertex on either ray is outside the open wedge
                let (e, h) = first_hit;
                let last_before = if same_point(&h, q.at(q.next(e))) { q.next(e) } else { e };
                let (e2, h2) = second_hit;
                let first_after = if same_point(&h2, q.at(e2)) { e2 } else { q.next(e2) };
                let sigma = off(i, last_before) + 1;
                let tau = off(i, first_after).max(sigma);
                debug_assert!(2 <= sigma && tau < n, "wedge at {i} leaves the chain");
                Wedge { vertex: i, sigma, tau, first_hit, second_hit }
            })
            .collect();
        Self { n, wedges }
    }

    pub fn len(&self) -> usize {
        self.wedges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.wedges.is_empty()
    }

    pub fn wedges(&self) -> &[Wedge] {
        &self.wedges
    }

    pub fn polygon_size(&self) -> usize {
        self.n
    }
}

/// Whether `q_j` lies strictly inside the wedge at reflex vertex `q_i`.
pub fn in_wedge(q: &Polygon, i: usize, j: usize) -> bool {
    let (a, b, c) = (q.at(q.prev(i)), q.at(i), q.at(q.next(i)));
    let p = q.at(j);
    orientation(a, b, p) > 0 && orientation(c, b, p) < 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Marked,
    NotMarked,
    KillsRotation,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RotationStats {
    pub dispatches: u64,
    pub visibility_queries: u64,
    /// Merge steps of the per-vertex sweeps, summed over all vertices.
    pub merge_steps: u64,
    /// Largest per-vertex merge step count minus `r + l_m`.
    pub max_merge_excess: i64,
}

/// Per-rotation counters of satisfied reflex vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationScoreboard {
    pub counters: Vec<usize>,
    pub dead: Vec<bool>,
}

impl RotationScoreboard {
    pub fn new(n: usize) -> Self {
        Self { counters: vec![0; n], dead: vec![false; n] }
    }

    pub fn record(&mut self, s: usize, outcome: Outcome) {
        match outcome {
            Outcome::Marked => self.counters[s] += 1,
            Outcome::NotMarked => {}
            Outcome::KillsRotation => self.dead[s] = true,
        }
    }

    pub fn complete(&self, r: usize) -> Vec<usize> {
        (0..self.counters.len()).filter(|&s| self.counters[s] == r && !self.dead[s]).collect()
    }
}

/// Decides whether rotation `s` satisfies the reflex vertex of `wedge`.
/// `fan` is the fan of the `P`-vertex mapped onto it, with edge offsets,
/// and `pos` the index of its first entry `>= sigma`.
pub fn satisfies(
    wedge: &Wedge,
    fan: &[usize],
    pos: usize,
    vis: &VisibilityIndex,
    stats: &mut RotationStats,
) -> Outcome {
    let n = vis.polygon().len();
    let i = wedge.vertex;
    let at = |t: usize| (i + t) % n;
    let mut visible = |a: usize, b: usize| {
        stats.visibility_queries += 1;
        vis.visible(a, b).expect("distinct vertex indices")
    };
    stats.dispatches += 1;
    let f = fan[pos];
    if f < wedge.tau {
        return if visible(i, at(f)) { Outcome::Marked } else { Outcome::KillsRotation };
    }
    let k = fan[pos - 1];
    if visible(i, at(k)) && visible(i, at(f)) && visible(at(k), at(f)) {
        Outcome::Marked
    } else {
        Outcome::NotMarked
    }
}

#[derive(Debug, Clone)]
pub struct RotationSearch {
    n: usize,
    diagonals: Vec<IndexPair>,
    rotations: Vec<usize>,
    reflex: usize,
    stats: RotationStats,
}

impl RotationSearch {
    pub fn rotations(&self) -> &[usize] {
        &self.rotations
    }

    pub fn reflex_count(&self) -> usize {
        self.reflex
    }

    pub fn stats(&self) -> RotationStats {
        self.stats
    }

    /// The triangulation of `Q` induced by rotation `s`.
    pub fn witness(&self, s: usize) -> Vec<IndexPair> {
        let mut w: Vec<IndexPair> =
            self.diagonals.iter().map(|d| d.rotate(s, self.n)).collect();
        w.sort_unstable();
        w
    }
}

/// All rotations `s` such that `t`, shifted by `s`, triangulates `q`.
pub fn find_rotations(p: &Polygon, t: &Triangulation, q: &Polygon) -> Result<RotationSearch> {
    let n = p.len();
    if q.len() != n {
        return Err(Error::SizeMismatch(n, q.len()));
    }
    let mut stats = RotationStats::default();
    let table = WedgeTable::build(q);
    let r = table.len();
    let rotations = if r == 0 {
        (0..n).collect()
    } else {
        let vis = VisibilityIndex::build(q);
        let fans = DiagonalFan::new(t);
        let mut order: Vec<&Wedge> = table.wedges().iter().collect();
        order.sort_by_key(|w| (w.sigma, w.vertex));
        let mut board = RotationScoreboard::new(n);
        for m in 0..n {
            let fan = fans.with_edges(m);
            // fan[0] = 1 lies below every sigma
            let mut pos = 1;
            let mut steps = 0i64;
            for wedge in &order {
                while fan[pos] < wedge.sigma {
                    pos += 1;
                    steps += 1;
                }
                steps += 1;
                let s = (wedge.vertex + n - m) % n;
                let outcome = satisfies(wedge, &fan, pos, &vis, &mut stats);
                board.record(s, outcome);
            }
            stats.merge_steps += steps as u64;
            stats.max_merge_excess = stats.max_merge_excess.max(steps - (r + fans.at(m).len()) as i64);
        }
        board.complete(r)
    };
    let search = RotationSearch { n, diagonals: t.diagonals().to_vec(), rotations, reflex: r, stats };
    #[cfg(debug_assertions)]
    for &s in search.rotations() {
        for d in search.witness(s) {
            debug_assert!(q.is_diagonal(d.lo(), d.hi()).unwrap(), "witness {d} for rotation {s}");
        }
    }
    Ok(search)
}
