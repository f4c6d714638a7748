//! Brute-force reference implementations.
//!
//! Everything here is deliberately direct and slow. The fast paths are
//! tested against these, and the CLI exposes them through `--oracle`.

use crate::dp::AdjacencyMatrix;
use crate::error::{Error, Result};
use crate::geometry::{IndexPair, Point, Polygon, Rational};
use crate::triangulation::Triangulation;
use crate::visibility::ChordInterval;
use num_bigint::{BigInt, BigUint, Sign};
use std::collections::HashMap;

/// `g[i][j]` is true iff `(i, j)` is an edge or a diagonal.
pub fn visibility_graph(p: &Polygon) -> Vec<Vec<bool>> {
    let n = p.len();
    let mut g = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            g[i][j] = i != j && (p.adjacent(i, j) || p.is_diagonal(i, j).unwrap());
        }
    }
    g
}

/// Rotations `s` such that every diagonal `(i, j)` of `t` maps to a diagonal
/// `(i + s, j + s)` of `q`.
pub fn naive_rotation_set(p: &Polygon, t: &Triangulation, q: &Polygon) -> Result<Vec<usize>> {
    let n = p.len();
    if q.len() != n {
        return Err(Error::SizeMismatch(n, q.len()));
    }
    Ok((0..n)
        .filter(|&s| {
            t.diagonals()
                .iter()
                .all(|d| q.is_diagonal((d.lo() + s) % n, (d.hi() + s) % n).unwrap())
        })
        .collect())
}

/// Sequential interval DP by increasing length: `b[i][j]` is true iff
/// `(i, j)` is present and the sub-polygon `i..=j` has a triangulation.
pub fn cubic_dp(a: &AdjacencyMatrix) -> Vec<Vec<bool>> {
    let n = a.len();
    let mut b = vec![vec![false; n]; n];
    for i in 0..n.saturating_sub(1) {
        b[i][i + 1] = true;
    }
    for len in 2..n {
        for i in 0..n - len {
            let j = i + len;
            b[i][j] = a.get(i, j) && (i + 1..j).any(|k| b[i][k] && b[k][j]);
        }
    }
    b
}

/// Number of triangulations of the convex `n`-gon using only edges of `a`,
/// by memoized recursion on the triangle standing on `(i, j)`.
pub fn recursive_count(a: &AdjacencyMatrix) -> BigUint {
    fn go(a: &AdjacencyMatrix, i: usize, j: usize, memo: &mut HashMap<(usize, usize), BigUint>) -> BigUint {
        if j == i + 1 {
            return BigUint::from(1u8);
        }
        if !a.get(i, j) {
            return BigUint::ZERO;
        }
        if let Some(c) = memo.get(&(i, j)) {
            return c.clone();
        }
        let c: BigUint = (i + 1..j).map(|k| go(a, i, k, memo) * go(a, k, j, memo)).sum();
        memo.insert((i, j), c.clone());
        c
    }
    go(a, 0, a.len() - 1, &mut HashMap::new())
}

/// A point on a chord in exact scaled integer coordinates `(x, y) / den`.
#[derive(Debug, Clone)]
struct ScaledPoint {
    x: BigInt,
    y: BigInt,
}

fn scale(p: Point, den: &BigInt) -> ScaledPoint {
    ScaledPoint { x: BigInt::from(p.x) * den, y: BigInt::from(p.y) * den }
}

fn chord_point(a: Point, b: Point, t: Rational) -> (ScaledPoint, BigInt) {
    let den = BigInt::from(t.den());
    let num = BigInt::from(t.num());
    let x = BigInt::from(a.x) * &den + BigInt::from(b.x - a.x) * &num;
    let y = BigInt::from(a.y) * &den + BigInt::from(b.y - a.y) * &num;
    (ScaledPoint { x, y }, den)
}

fn orient(a: &ScaledPoint, b: &ScaledPoint, c: &ScaledPoint) -> i32 {
    let v = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    match v.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

fn on_closed_segment(p: &ScaledPoint, q: &ScaledPoint, r: &ScaledPoint) -> bool {
    orient(p, q, r) == 0
        && r.x >= p.x.clone().min(q.x.clone())
        && r.x <= p.x.clone().max(q.x.clone())
        && r.y >= p.y.clone().min(q.y.clone())
        && r.y <= p.y.clone().max(q.y.clone())
}

fn closed_segments_meet(p: &ScaledPoint, q: &ScaledPoint, r: &ScaledPoint, s: &ScaledPoint) -> bool {
    let (o1, o2) = (orient(p, q, r), orient(p, q, s));
    let (o3, o4) = (orient(r, s, p), orient(r, s, q));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_closed_segment(p, q, r) || on_closed_segment(p, q, s) || on_closed_segment(r, s, p) || on_closed_segment(r, s, q)
}

/// Whether the open segment from region vertex `v` to the point at
/// parameter `t` on chord `d` (strictly between its endpoints) lies in the
/// open interior of the region. `region` lists the region's vertices in
/// counter-clockwise boundary order and `d` must be one of its sides.
pub fn region_sees_chord_point(p: &Polygon, region: &[usize], v: usize, d: IndexPair, t: Rational) -> bool {
    assert!(Rational::ZERO < t && t < Rational::ONE);
    let (x, den) = chord_point(p.at(d.lo()), p.at(d.hi()), t);
    let at = |i: usize| scale(p.at(i), &den);
    let k = region.iter().position(|&u| u == v).expect("v is a region vertex");
    let m = region.len();
    let (prev, next) = (region[(k + m - 1) % m], region[(k + 1) % m]);
    let (pv, p0, p1) = (at(v), at(prev), at(next));
    let inside_cone = if orient(&pv, &p1, &p0) >= 0 {
        orient(&pv, &x, &p0) > 0 && orient(&x, &pv, &p1) > 0
    } else {
        !(orient(&pv, &x, &p1) >= 0 && orient(&x, &pv, &p0) >= 0)
    };
    if !inside_cone {
        return false;
    }
    (0..m).all(|e| {
        let (u, w) = (region[e], region[(e + 1) % m]);
        if u == v || w == v {
            return true;
        }
        if IndexPair::new(u, w) == d {
            // x lies on d; only a segment running along d can touch it again
            return orient(&at(u), &at(w), &pv) != 0;
        }
        !closed_segments_meet(&pv, &x, &at(u), &at(w))
    })
}

/// Whether vertices `v` and `u` of the region see each other inside it:
/// they are joined by a region side, or the open segment between them lies
/// in the region's open interior.
pub fn region_sees_vertex(p: &Polygon, region: &[usize], v: usize, u: usize) -> bool {
    let m = region.len();
    let (iv, iu) = (
        region.iter().position(|&i| i == v).unwrap(),
        region.iter().position(|&i| i == u).unwrap(),
    );
    if (iv + 1) % m == iu || (iu + 1) % m == iv {
        return true;
    }
    let (pv, pu) = (p.at(v), p.at(u));
    let one = BigInt::from(1);
    let (sv, su) = (scale(pv, &one), scale(pu, &one));
    let cone = |k: usize, target: &ScaledPoint| {
        let a = scale(p.at(region[k]), &one);
        let a0 = scale(p.at(region[(k + m - 1) % m]), &one);
        let a1 = scale(p.at(region[(k + 1) % m]), &one);
        if orient(&a, &a1, &a0) >= 0 {
            orient(&a, target, &a0) > 0 && orient(target, &a, &a1) > 0
        } else {
            !(orient(&a, target, &a1) >= 0 && orient(target, &a, &a0) >= 0)
        }
    };
    if !cone(iv, &su) || !cone(iu, &sv) {
        return false;
    }
    (0..m).all(|e| {
        let (a, b) = (region[e], region[(e + 1) % m]);
        if [a, b].contains(&v) || [a, b].contains(&u) {
            // the only contact allowed is a shared endpoint
            let other = if a == v || a == u { b } else { a };
            return [v, u].contains(&other) || !on_closed_segment(&sv, &su, &scale(p.at(other), &one));
        }
        !closed_segments_meet(&sv, &su, &scale(p.at(a), &one), &scale(p.at(b), &one))
    })
}

/// Visible part of chord `d` from `v` inside the region, computed by
/// splitting `d` at every line through `v` and a region vertex and testing
/// one interior point of every piece. Fails with `SplitInterval` when the
/// visible set is not a single interval.
pub fn brute_chord_interval(p: &Polygon, region: &[usize], v: usize, d: IndexPair) -> Result<ChordInterval> {
    let (a, b) = (p.at(d.lo()), p.at(d.hi()));
    let mut cuts = vec![Rational::ZERO, Rational::ONE];
    for &u in region {
        if u != v {
            if let Some(t) = crate::geometry::line_param_on_chord(p.at(v), p.at(u), a, b) {
                if Rational::ZERO < t && t < Rational::ONE {
                    cuts.push(t);
                }
            }
        }
    }
    cuts.sort();
    cuts.dedup();
    let mut seen: Vec<(Rational, Rational)> = Vec::new();
    for w in cuts.windows(2) {
        let mid = Rational::new(w[0].num() * w[1].den() + w[1].num() * w[0].den(), 2 * w[0].den() * w[1].den());
        if region_sees_chord_point(p, region, v, d, mid) {
            match seen.last_mut() {
                Some(last) if last.1 == w[0] => last.1 = w[1],
                _ => seen.push((w[0], w[1])),
            }
        }
    }
    // pieces separated only by an isolated point where a grazing vertex
    // blocks are still one open interval minus a point; report that as split
    if seen.len() > 1 {
        return Err(Error::SplitInterval { vertex: v, a: d.lo(), b: d.hi() });
    }
    let (lo, hi) = seen.first().copied().unwrap_or((Rational::ONE, Rational::ZERO));
    Ok(ChordInterval {
        chord: d,
        lo,
        hi,
        sees_a: region_sees_vertex(p, region, v, d.lo()),
        sees_b: region_sees_vertex(p, region, v, d.hi()),
    })
}
