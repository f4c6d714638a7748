//! Seeded random simple polygons.
//!
//! Two shapes are available. The default draws random lattice points, links
//! them into a nearest-neighbour tour and removes crossings by 2-opt moves.
//! With a reflex fraction set, vertices are placed at random angles around
//! the origin on one of two radii, giving a star-shaped polygon where roughly
//! that fraction of vertices sit on the inner radius and turn reflex.

use crate::error::{Error, Result};
use crate::geometry::{classify_segments, orientation, Point, Polygon, SegmentRelation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub reflex_fraction: Option<f64>,
    /// Fresh point sets tried before giving up.
    pub max_attempts: usize,
}

impl GeneratorConfig {
    pub fn new(n: usize) -> Self {
        Self { n, reflex_fraction: None, max_attempts: 64 }
    }

    pub fn with_reflex_fraction(mut self, f: f64) -> Self {
        self.reflex_fraction = Some(f.clamp(0.0, 1.0));
        self
    }
}

/// A valid counter-clockwise polygon, identical for identical `(cfg, seed)`.
pub fn random_polygon(cfg: &GeneratorConfig, seed: u64) -> Result<Polygon> {
    if cfg.n < 3 {
        return Err(Error::TooFewVertices(cfg.n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cfg.max_attempts {
        let candidate = match cfg.reflex_fraction {
            Some(f) => star_polygon(cfg.n, f, &mut rng),
            None => untangled_tour(cfg.n, &mut rng),
        };
        if let Some(points) = candidate {
            if let Ok(p) = Polygon::validate(points) {
                return Ok(p);
            }
        }
    }
    Err(Error::InternalInconsistency(format!(
        "no simple polygon with {} vertices after {} attempts",
        cfg.n, cfg.max_attempts
    )))
}

fn distinct_points(n: usize, side: i64, rng: &mut ChaCha8Rng) -> Vec<Point> {
    let mut seen = std::collections::HashSet::with_capacity(n);
    let mut points = Vec::with_capacity(n);
    while points.len() < n {
        let p = Point::new(rng.gen_range(0..side), rng.gen_range(0..side));
        if seen.insert(p) {
            points.push(p);
        }
    }
    points
}

fn untangled_tour(n: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Point>> {
    let side = (8 * n as i64).max(32);
    let mut pool = distinct_points(n, side, rng);
    pool.shuffle(rng);
    let mut tour = vec![pool.swap_remove(0)];
    while !pool.is_empty() {
        let last = *tour.last().unwrap();
        let dist = |p: &Point| (p.x - last.x).pow(2) + (p.y - last.y).pow(2);
        let (k, _) = pool.iter().enumerate().min_by_key(|(_, p)| dist(p)).unwrap();
        tour.push(pool.swap_remove(k));
    }
    let cap = 4 * n * n + 64;
    let mut moves = 0;
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (a, b) = (tour[i], tour[i + 1]);
                let (c, d) = (tour[j], tour[(j + 1) % n]);
                match classify_segments(a, b, c, d) {
                    SegmentRelation::Disjoint => {}
                    SegmentRelation::ProperCrossing => {
                        tour[i + 1..=j].reverse();
                        changed = true;
                        moves += 1;
                    }
                    // touching or overlapping: the point set is degenerate
                    _ => return None,
                }
                if moves > cap {
                    return None;
                }
            }
        }
        if !changed {
            return Some(tour);
        }
    }
}

fn star_polygon(n: usize, fraction: f64, rng: &mut ChaCha8Rng) -> Option<Vec<Point>> {
    const OUTER: f64 = 1_000_000.0;
    let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
    angles.sort_by(f64::total_cmp);
    let points: Vec<Point> = angles
        .iter()
        .map(|&theta| {
            let r = if rng.gen_bool(fraction) { OUTER * rng.gen_range(0.2..0.5) } else { OUTER };
            Point::new((r * theta.cos()).round() as i64, (r * theta.sin()).round() as i64)
        })
        .collect();
    // each vertex must see the origin strictly, or the fan around it is not simple
    let origin = Point::new(0, 0);
    let star = (0..n).all(|i| orientation(origin, points[i], points[(i + 1) % n]) > 0);
    star.then_some(points)
}
