//! The Boolean matrix product gadget.
//!
//! For `m x m` matrices `M` and `N` the graph lives on the convex cycle
//! `s, x_1..x_m, u, y_1..y_m, w, z_1..z_m, t` with chords `x_i y_k` for
//! `M[i][k]`, `y_k z_j` for `N[k][j]`, and the fixed families `s x_i`,
//! `s z_j`, `x_i z_j`, `x_i u`, `u y_k`, `y_k w`, `w z_j`, `z_j t`.
//!
//! Inside the chain `x_i .. z_j` the triangle on `x_i z_j` has apex `y_k`
//! with `M[i][k] N[k][j]`, or `x_{i+1}`, or `z_{j-1}`. The last two make the
//! decision cell the dominance closure `OR_{i' >= i, j' <= j} (MN)[i'][j']`
//! rather than `(MN)[i][j]` itself. Triangulation counts separate the
//! three cases: subtracting the counts of the two shorter chains leaves
//! exactly the `y_k` apices.

use super::matrix::{AdjacencyMatrix, DPMatrix};
use crate::geometry::IndexPair;
use num_bigint::BigInt;

#[derive(Debug, Clone)]
pub struct ReductionGadget {
    m: usize,
    adjacency: AdjacencyMatrix,
}

impl ReductionGadget {
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn adjacency(&self) -> &AdjacencyMatrix {
        &self.adjacency
    }

    /// Vertex of `x_i`, `1 <= i <= m`.
    pub fn x(&self, i: usize) -> usize {
        i
    }

    pub fn u(&self) -> usize {
        self.m + 1
    }

    pub fn y(&self, k: usize) -> usize {
        self.m + 1 + k
    }

    pub fn w(&self) -> usize {
        2 * self.m + 2
    }

    pub fn z(&self, j: usize) -> usize {
        2 * self.m + 2 + j
    }

    pub fn t(&self) -> usize {
        3 * self.m + 3
    }

    /// DP cell `(x_i, z_j)` for the chain `x_i .. z_j`; indices are 1-based.
    pub fn chain_interval(&self, i: usize, j: usize) -> (usize, usize) {
        (self.x(i), self.z(j))
    }

    /// `(MN)[i][j]` recovered from a finalized counting matrix.
    pub fn chain_value(&self, counts: &DPMatrix<BigInt>, i: usize, j: usize) -> bool {
        let c = |a: usize, b: usize| counts.get(a, b).clone();
        let mut direct = c(self.x(i), self.z(j));
        if i < self.m {
            direct -= c(self.x(i + 1), self.z(j));
        }
        if j > 1 {
            direct -= c(self.x(i), self.z(j - 1));
        }
        direct.sign() == num_bigint::Sign::Plus
    }
}

/// Builds the gadget for two `m x m` Boolean matrices, `m >= 1`.
pub fn build_reduction_graph(m_left: &[Vec<bool>], m_right: &[Vec<bool>]) -> ReductionGadget {
    let m = m_left.len();
    assert!(m >= 1 && m_right.len() == m, "square matrices of equal size");
    let x = |i: usize| i;
    let u = m + 1;
    let y = |k: usize| m + 1 + k;
    let w = 2 * m + 2;
    let z = |j: usize| 2 * m + 2 + j;
    let (s, t) = (0, 3 * m + 3);
    let mut chords = Vec::new();
    for a in 1..=m {
        for b in 1..=m {
            if m_left[a - 1][b - 1] {
                chords.push((x(a), y(b)));
            }
            if m_right[a - 1][b - 1] {
                chords.push((y(a), z(b)));
            }
            chords.push((x(a), z(b)));
        }
        chords.extend([(s, x(a)), (s, z(a)), (x(a), u), (u, y(a)), (y(a), w), (w, z(a)), (z(a), t)]);
    }
    let n = 3 * m + 4;
    // some fixed-family pairs are cycle edges already
    let chords: Vec<IndexPair> = chords.into_iter().map(|(a, b)| IndexPair::new(a, b)).collect();
    let adjacency = AdjacencyMatrix::from_diagonals(n, &chords).expect("gadget indices are in range");
    ReductionGadget { m, adjacency }
}

/// Boolean product reference.
pub fn boolean_product(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let m = a.len();
    (0..m)
        .map(|i| (0..m).map(|j| (0..m).any(|k| a[i][k] && b[k][j])).collect())
        .collect()
}
