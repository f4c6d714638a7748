//! Interval DP over graphs on a convex polygon, organized so that almost all
//! work happens in block matrix products.
//!
//! `b[i][j]` is 1 when `(i, j)` is an edge of the graph and the sub-polygon
//! `i, i+1, ..., j` can be triangulated with graph edges. The recursion
//! `b[i][j] = a[i][j] and OR_k b[i][k] b[k][j]` is evaluated by
//! [`DPMatrix::compute_block`], which finalizes blocks in an order where
//! every product it needs is already available.

mod kernel;
mod matrix;
pub mod reduction;

pub use kernel::{Classical, Kernel, Ring, Strassen};
pub use matrix::{AdjacencyMatrix, DPMatrix, DpStats, Mode};
pub use reduction::{build_reduction_graph, ReductionGadget};

use crate::error::{Error, Result};
use crate::geometry::{IndexPair, Polygon};
use crate::visibility::VisibilityIndex;
use num_bigint::{BigInt, BigUint};

/// Runs the decision DP with the given kernel.
pub fn decide<K: Kernel>(a: &AdjacencyMatrix, kernel: &K) -> Result<DPMatrix<i64>> {
    let mut m = DPMatrix::new(a, Mode::Decision);
    m.run(kernel)?;
    Ok(m)
}

/// Whether the graph contains a triangulation of the convex polygon.
pub fn triangulation_exists(a: &AdjacencyMatrix) -> Result<bool> {
    Ok(decide(a, &Classical)?.bit(0, a.len() - 1))
}

/// Recovers one triangulation from a finalized decision matrix: on each
/// interval `(i, j)` take the smallest `k` with `b[i][k]` and `b[k][j]`.
pub fn extract_triangulation(m: &DPMatrix<i64>, a: &AdjacencyMatrix) -> Result<Option<Vec<IndexPair>>> {
    let n = m.len();
    if !m.bit(0, n - 1) {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(n - 3);
    let mut stack = vec![(0, n - 1)];
    while let Some((i, j)) = stack.pop() {
        if j <= i + 1 {
            continue;
        }
        let k = (i + 1..j).find(|&k| m.bit(i, k) && m.bit(k, j)).ok_or_else(|| {
            Error::InternalInconsistency(format!("no split point for finalized interval ({i},{j})"))
        })?;
        for (x, y) in [(i, k), (k, j)] {
            if y > x + 1 {
                if !a.get(x, y) {
                    return Err(Error::InternalInconsistency(format!("({x},{y}) is not a graph edge")));
                }
                out.push(IndexPair::new(x, y));
            }
        }
        stack.push((k, j));
        stack.push((i, k));
    }
    out.sort_unstable();
    Ok(Some(out))
}

/// Number of triangulations using only graph edges.
pub fn count_triangulations(a: &AdjacencyMatrix) -> Result<BigUint> {
    count_with(a, &Classical)
}

pub fn count_with<K: Kernel>(a: &AdjacencyMatrix, kernel: &K) -> Result<BigUint> {
    let mut m: DPMatrix<BigInt> = DPMatrix::new(a, Mode::Counting);
    m.run(kernel)?;
    m.get(0, a.len() - 1)
        .to_biguint()
        .ok_or_else(|| Error::InternalInconsistency("negative count".into()))
}

/// Adjacency of the visibility graph of `p`, from `n^2` index queries.
pub fn visibility_adjacency(index: &VisibilityIndex) -> Result<AdjacencyMatrix> {
    let n = index.polygon().len();
    let mut diagonals = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            if !(i == 0 && j == n - 1) && index.visible(i, j)? {
                diagonals.push(IndexPair::new(i, j));
            }
        }
    }
    AdjacencyMatrix::from_diagonals(n, &diagonals)
}

/// Outcome of the fixed-correspondence decision, with its counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Compatibility {
    pub triangulation: Option<Vec<IndexPair>>,
    pub visibility_queries: u64,
    pub dp: DpStats,
}

/// A diagonal set triangulating both polygons under the identity
/// correspondence, or `None` when none exists.
pub fn compatible_fixed_correspondence(p: &Polygon, q: &Polygon) -> Result<Option<Vec<IndexPair>>> {
    Ok(compatibility(p, q)?.triangulation)
}

pub fn compatibility(p: &Polygon, q: &Polygon) -> Result<Compatibility> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch(p.len(), q.len()));
    }
    let n = p.len() as u64;
    let ap = visibility_adjacency(&VisibilityIndex::build(p))?;
    let aq = visibility_adjacency(&VisibilityIndex::build(q))?;
    let a = ap.intersect(&aq)?;
    let m = decide(&a, &Classical)?;
    let found = extract_triangulation(&m, &a)?;
    if let Some(diags) = &found {
        for d in diags {
            if !p.is_diagonal(d.lo(), d.hi())? || !q.is_diagonal(d.lo(), d.hi())? {
                return Err(Error::InternalInconsistency(format!("{d} is not a diagonal of both")));
            }
        }
    }
    Ok(Compatibility { triangulation: found, visibility_queries: n * (n - 3), dp: m.stats() })
}

#[cfg(test)]
mod tests;
