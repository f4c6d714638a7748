use super::kernel::{Kernel, Ring};
use crate::error::{Error, Result};
use crate::geometry::IndexPair;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Symmetric adjacency of a graph on the convex `n`-gon `0, 1, ..., n-1`.
/// All boundary edges are present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl AdjacencyMatrix {
    /// Boundary cycle plus the given chords.
    pub fn from_diagonals(n: usize, diagonals: &[IndexPair]) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let mut a = Self { n, bits: vec![false; n * n] };
        for i in 0..n {
            a.set(i, (i + 1) % n);
        }
        for d in diagonals {
            if d.hi() >= n {
                return Err(Error::IndexOutOfRange { index: d.hi(), n });
            }
            a.set(d.lo(), d.hi());
        }
        Ok(a)
    }

    /// From a full boolean matrix; it must be symmetric, loop-free and
    /// contain every boundary edge.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let mut bits = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch(n, row.len()));
            }
            if row[i] {
                return Err(Error::InvalidTriangulation(format!("self-loop at {i}")));
            }
            bits.extend_from_slice(row);
        }
        let a = Self { n, bits };
        for i in 0..n {
            for j in 0..i {
                if a.get(i, j) != a.get(j, i) {
                    return Err(Error::InvalidTriangulation(format!("asymmetric entry ({j},{i})")));
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| !a.get(i, (i + 1) % n)) {
            return Err(Error::MissingBoundaryEdge(i));
        }
        Ok(a)
    }

    pub fn complete(n: usize) -> Self {
        let mut a = Self { n, bits: vec![true; n * n] };
        for i in 0..n {
            a.bits[i * n + i] = false;
        }
        a
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.n + j] = true;
        self.bits[j * self.n + i] = true;
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    /// Entrywise AND.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| *a && *b).collect();
        Ok(Self { n: self.n, bits })
    }

    /// Chords present, canonical and sorted.
    pub fn diagonals(&self) -> Vec<IndexPair> {
        let n = self.n;
        (0..n)
            .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !(i == 0 && j == n - 1) && self.get(i, j))
            .map(|(i, j)| IndexPair::new(i, j))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Accumulators saturate at 2; finalized cells are 0 or 1.
    Decision,
    /// Accumulators hold exact triangulation counts.
    Counting,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DpStats {
    pub block_updates: u64,
    pub finalizations: u64,
    pub audited_cells: u64,
}

/// The strictly upper-triangular DP matrix, zero-padded to a power of two.
///
/// Each cell starts as an accumulator and is finalized exactly once by the
/// base case of [`DPMatrix::compute_block`].
#[derive(Debug, Clone)]
pub struct DPMatrix<T> {
    n: usize,
    size: usize,
    mode: Mode,
    cells: Vec<T>,
    adjacency: Vec<bool>,
    finalized: Vec<bool>,
    audit: bool,
    audit_rng: ChaCha8Rng,
    stats: DpStats,
}

impl<T: Ring> DPMatrix<T> {
    pub fn new(a: &AdjacencyMatrix, mode: Mode) -> Self {
        let n = a.len();
        let size = n.next_power_of_two();
        let mut adjacency = vec![false; size * size];
        for i in 0..n {
            for j in 0..n {
                adjacency[i * size + j] = a.get(i, j);
            }
        }
        Self {
            n,
            size,
            mode,
            cells: vec![T::zero(); size * size],
            adjacency,
            finalized: vec![false; size * size],
            audit: false,
            audit_rng: ChaCha8Rng::seed_from_u64(0),
            stats: DpStats::default(),
        }
    }

    /// On every `compute_block` entry, recompute up to 8 random cells of the
    /// block by brute force: each must already hold the sum over split
    /// points lying in blocks strictly between its row and column blocks.
    pub fn with_audit(mut self, on: bool) -> Self {
        self.audit = on;
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn padded_size(&self) -> usize {
        self.size
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn stats(&self) -> DpStats {
        self.stats
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.cells[i * self.size + j]
    }

    pub fn is_finalized(&self, i: usize, j: usize) -> bool {
        self.finalized[i * self.size + j]
    }

    /// Finalized value of `(i, j)` read as a boolean.
    pub fn bit(&self, i: usize, j: usize) -> bool {
        !self.get(i, j).is_zero()
    }

    /// Finalized `n x n` boolean matrix, without padding.
    pub fn bits(&self) -> Vec<Vec<bool>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.bit(i, j)).collect()).collect()
    }

    /// Runs `ComputeBlock(n', 0, 0)`.
    pub fn run<K: Kernel>(&mut self, kernel: &K) -> Result<()> {
        self.compute_block(kernel, self.size, 0, 0)?;
        let want = (self.size * (self.size + 1) / 2) as u64;
        if self.stats.finalizations != want {
            return Err(Error::InternalInconsistency(format!(
                "{} finalizations, expected {want}",
                self.stats.finalizations
            )));
        }
        Ok(())
    }

    pub fn compute_block<K: Kernel>(&mut self, kernel: &K, s: usize, u: usize, v: usize) -> Result<()> {
        if self.audit {
            self.audit_block(s, u, v)?;
        }
        if s == 1 {
            return self.finalize(u, v);
        }
        let h = s / 2;
        let (u0, u1, v0, v1) = (2 * u, 2 * u + 1, 2 * v, 2 * v + 1);
        if u < v {
            // alpha
            self.compute_block(kernel, h, u1, v0)?;
            // beta
            self.block_update(kernel, h, u1, v1, v0)?;
            self.compute_block(kernel, h, u1, v1)?;
            // gamma
            self.block_update(kernel, h, u0, v0, u1)?;
            self.compute_block(kernel, h, u0, v0)?;
            // delta
            self.block_update(kernel, h, u0, v1, u1)?;
            self.block_update(kernel, h, u0, v1, v0)?;
            self.compute_block(kernel, h, u0, v1)
        } else {
            self.compute_block(kernel, h, u1, u1)?;
            self.compute_block(kernel, h, u0, u0)?;
            self.compute_block(kernel, h, u0, u1)
        }
    }

    /// `B^_uv += B_uw * B_wv` for blocks of size `s`.
    pub fn block_update<K: Kernel>(&mut self, kernel: &K, s: usize, u: usize, v: usize, w: usize) -> Result<()> {
        if !(u < w && w < v && v * s < self.size) {
            return Err(Error::InvalidTriple { u, w, v });
        }
        let (left, right) = (self.block(s, u, w), self.block(s, w, v));
        if left.iter().all(T::is_zero) || right.iter().all(T::is_zero) {
            self.stats.block_updates += 1;
            return Ok(());
        }
        let product = kernel.multiply(&left, &right, s);
        let cap = T::from_u8(2);
        for i in 0..s {
            for j in 0..s {
                let p = &product[i * s + j];
                if p.is_zero() {
                    continue;
                }
                let cell = &mut self.cells[(u * s + i) * self.size + v * s + j];
                let mut acc = cell.add(p);
                if self.mode == Mode::Decision && acc > cap {
                    acc = cap.clone();
                }
                *cell = acc;
            }
        }
        self.stats.block_updates += 1;
        Ok(())
    }

    /// Copy of the finalized block `(u, v)` of size `s`.
    fn block(&self, s: usize, u: usize, v: usize) -> Vec<T> {
        let mut out = Vec::with_capacity(s * s);
        for i in u * s..(u + 1) * s {
            debug_assert!((v * s..(v + 1) * s).all(|j| self.finalized[i * self.size + j]));
            let row = i * self.size + v * s;
            out.extend_from_slice(&self.cells[row..row + s]);
        }
        out
    }

    #[cfg(test)]
    pub(crate) fn set_finalized(&mut self, i: usize, j: usize, v: u8) {
        self.cells[i * self.size + j] = T::from_u8(v);
        self.finalized[i * self.size + j] = true;
    }

    fn finalize(&mut self, i: usize, j: usize) -> Result<()> {
        let k = i * self.size + j;
        if self.finalized[k] {
            return Err(Error::InternalInconsistency(format!("cell ({i},{j}) finalized twice")));
        }
        let boundary = j == i + 1 && j < self.n;
        let edge = self.adjacency[k];
        let acc = &self.cells[k];
        self.cells[k] = match self.mode {
            _ if boundary => T::from_u8(1),
            Mode::Decision if edge && !acc.is_zero() => T::from_u8(1),
            Mode::Counting if edge => acc.clone(),
            _ => T::zero(),
        };
        self.finalized[k] = true;
        self.stats.finalizations += 1;
        Ok(())
    }

    fn audit_block(&mut self, s: usize, u: usize, v: usize) -> Result<()> {
        for _ in 0..8.min(s * s) {
            let i = u * s + self.audit_rng.gen_range(0..s);
            let j = v * s + self.audit_rng.gen_range(0..s);
            if i >= j {
                continue;
            }
            let mut want = T::zero();
            for k in i + 1..j {
                if i / s < k / s && k / s < j / s {
                    want = want.add(&self.get(i, k).mul(self.get(k, j)));
                }
            }
            if self.mode == Mode::Decision && want > T::from_u8(2) {
                want = T::from_u8(2);
            }
            self.stats.audited_cells += 1;
            if &want != self.get(i, j) {
                return Err(Error::InternalInconsistency(format!(
                    "entry invariant fails at ({i},{j}) in block ({s},{u},{v})"
                )));
            }
        }
        Ok(())
    }
}
