//! Square matrix multiplication kernels used by block updates.
//!
//! Blocks are dense row-major `s x s` slices with `s` a power of two.

use num_bigint::BigInt;
use std::fmt::Debug;

/// Integer-like values a kernel can multiply. Subtraction is needed by
/// Strassen-style kernels, so the accumulator types are signed.
pub trait Ring: Clone + Debug + PartialEq + PartialOrd {
    fn zero() -> Self;
    fn from_u8(v: u8) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn from_u8(v: u8) -> Self {
        v as i64
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        BigInt::ZERO
    }
    fn from_u8(v: u8) -> Self {
        BigInt::from(v)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        self.sign() == num_bigint::Sign::NoSign
    }
}

pub trait Kernel {
    fn name(&self) -> &'static str;
    /// Product of two `s x s` row-major matrices.
    fn multiply<T: Ring>(&self, a: &[T], b: &[T], s: usize) -> Vec<T>;
}

/// Schoolbook `i-k-j` multiplication, skipping zero entries of `a`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Classical;

impl Kernel for Classical {
    fn name(&self) -> &'static str {
        "classical"
    }

    fn multiply<T: Ring>(&self, a: &[T], b: &[T], s: usize) -> Vec<T> {
        let mut c = vec![T::zero(); s * s];
        for i in 0..s {
            for k in 0..s {
                let x = &a[i * s + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..s {
                    let y = &b[k * s + j];
                    if !y.is_zero() {
                        c[i * s + j] = c[i * s + j].add(&x.mul(y));
                    }
                }
            }
        }
        c
    }
}

/// Strassen's seven-product recursion down to `cutoff`, then schoolbook.
#[derive(Debug, Clone, Copy)]
pub struct Strassen {
    pub cutoff: usize,
}

impl Default for Strassen {
    fn default() -> Self {
        Self { cutoff: 8 }
    }
}

fn quadrant<T: Ring>(m: &[T], s: usize, qi: usize, qj: usize) -> Vec<T> {
    let h = s / 2;
    let mut out = Vec::with_capacity(h * h);
    for i in 0..h {
        let row = (qi * h + i) * s + qj * h;
        out.extend_from_slice(&m[row..row + h]);
    }
    out
}

fn zip<T: Ring>(a: &[T], b: &[T], f: impl Fn(&T, &T) -> T) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

impl Kernel for Strassen {
    fn name(&self) -> &'static str {
        "strassen"
    }

    fn multiply<T: Ring>(&self, a: &[T], b: &[T], s: usize) -> Vec<T> {
        if s <= self.cutoff.max(1) || !s.is_multiple_of(2) {
            return Classical.multiply(a, b, s);
        }
        let h = s / 2;
        let [a11, a12, a21, a22] = [(0, 0), (0, 1), (1, 0), (1, 1)].map(|(i, j)| quadrant(a, s, i, j));
        let [b11, b12, b21, b22] = [(0, 0), (0, 1), (1, 0), (1, 1)].map(|(i, j)| quadrant(b, s, i, j));
        let add = |x: &[T], y: &[T]| zip(x, y, T::add);
        let sub = |x: &[T], y: &[T]| zip(x, y, T::sub);
        let m1 = self.multiply(&add(&a11, &a22), &add(&b11, &b22), h);
        let m2 = self.multiply(&add(&a21, &a22), &b11, h);
        let m3 = self.multiply(&a11, &sub(&b12, &b22), h);
        let m4 = self.multiply(&a22, &sub(&b21, &b11), h);
        let m5 = self.multiply(&add(&a11, &a12), &b22, h);
        let m6 = self.multiply(&sub(&a21, &a11), &add(&b11, &b12), h);
        let m7 = self.multiply(&sub(&a12, &a22), &add(&b21, &b22), h);
        let c11 = add(&sub(&add(&m1, &m4), &m5), &m7);
        let c12 = add(&m3, &m5);
        let c21 = add(&m2, &m4);
        let c22 = add(&add(&sub(&m1, &m2), &m3), &m6);
        let mut c = vec![T::zero(); s * s];
        for (q, (qi, qj)) in [(c11, (0, 0)), (c12, (0, 1)), (c21, (1, 0)), (c22, (1, 1))] {
            for i in 0..h {
                let row = (qi * h + i) * s + qj * h;
                c[row..row + h].clone_from_slice(&q[i * h..(i + 1) * h]);
            }
        }
        c
    }
}
