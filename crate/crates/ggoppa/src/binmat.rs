//! Bit-packed vectors and matrices over F_2: rank, reduced row echelon form,
//! nullspace bases and systematic forms. Rows are stored as u64 words,
//! bit j of a row lives in word j/64 at position j%64.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitVec {
    len: usize,
    data: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> BitVec {
        BitVec {
            len,
            data: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_support(len: usize, support: &[usize]) -> BitVec {
        let mut v = BitVec::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.data[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if bit {
            self.data[i / 64] |= mask;
        } else {
            self.data[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.data[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.data
    }
}

fn dot(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones())
        & 1
        == 1
}

/// A dense bit matrix. Also serves as the w×n word matrix of interleaved
/// decoding (w = 1 for plain received words).
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

pub type WordMatrix = BitMatrix;

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(16) {
            for c in 0..self.cols.min(80) {
                write!(f, "{}", if self.get(r, c) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BitMatrix {
        let wpr = cols.div_ceil(64).max(1);
        BitMatrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[BitVec]) -> BitMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.set_row(i, r);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.data[r * self.wpr + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let mask = 1u64 << (c % 64);
        let w = &mut self.data[r * self.wpr + c / 64];
        if bit {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    pub fn row_vec(&self, r: usize) -> BitVec {
        BitVec {
            len: self.cols,
            data: self.row_words(r).to_vec(),
        }
    }

    pub fn set_row(&mut self, r: usize, v: &BitVec) {
        debug_assert_eq!(v.len, self.cols);
        self.data[r * self.wpr..(r + 1) * self.wpr].copy_from_slice(&v.data);
    }

    pub fn xor_row_into(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let wpr = self.wpr;
        if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * wpr);
            let d = &mut lo[dst * wpr..(dst + 1) * wpr];
            for (x, y) in d.iter_mut().zip(&hi[..wpr]) {
                *x ^= *y;
            }
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * wpr);
            let s = &lo[src * wpr..(src + 1) * wpr];
            for (x, y) in hi[..wpr].iter_mut().zip(s) {
                *x ^= *y;
            }
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.wpr {
            self.data.swap(a * self.wpr + j, b * self.wpr + j);
        }
    }

    pub fn xor_row_vec(&self, acc: &mut BitVec, r: usize) {
        debug_assert_eq!(acc.len, self.cols);
        for (a, b) in acc.data.iter_mut().zip(self.row_words(r)) {
            *a ^= b;
        }
    }

    /// A·vᵀ over F_2.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        debug_assert_eq!(v.len, self.cols);
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if dot(self.row_words(r), &v.data) {
                out.set(r, true);
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut sel = None;
            for r in row..self.rows {
                if self.get(r, col) {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            self.swap_rows(row, sel);
            for r in 0..self.rows {
                if r != row && self.get(r, col) {
                    self.xor_row_into(r, row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of {v : A·vᵀ = 0}, one row per basis vector. The zero matrix
    /// yields the n×n identity.
    pub fn nullspace(&self) -> BitMatrix {
        let mut r = self.clone();
        let pivots = r.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = BitMatrix::zeros(free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            basis.set(bi, fc, true);
            for (pi, &pc) in pivots.iter().enumerate() {
                if r.get(pi, fc) {
                    basis.set(bi, pc, true);
                }
            }
        }
        basis
    }

    /// Row-reduce towards (I | T). Errors unless the pivot columns are
    /// exactly the leftmost rank-many columns; no column permutation is done.
    pub fn systematic_t(&self) -> Result<BitMatrix> {
        let mut r = self.clone();
        let pivots = r.rref();
        let rk = pivots.len();
        if pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return Err(Error::NotSystematic);
        }
        let mut t = BitMatrix::zeros(rk, self.cols - rk);
        for i in 0..rk {
            for j in 0..self.cols - rk {
                t.set(i, j, r.get(i, rk + j));
            }
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn random_matrix(rng: &mut ChaCha12Rng, rows: usize, cols: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, rng.random_bool(0.5));
            }
        }
        m
    }

    #[test]
    fn rank_and_identity() {
        assert_eq!(BitMatrix::identity(7).rank(), 7);
        assert_eq!(BitMatrix::zeros(3, 5).rank(), 0);
        let mut m = BitMatrix::zeros(3, 4);
        // duplicate rows collapse
        m.set(0, 1, true);
        m.set(1, 1, true);
        m.set(2, 3, true);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn nullspace_is_orthogonal_and_complete() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        for _ in 0..100 {
            let rows = rng.random_range(1..10);
            let cols = rng.random_range(1..80);
            let m = random_matrix(&mut rng, rows, cols);
            let ns = m.nullspace();
            assert_eq!(ns.rows(), cols - m.rank());
            for b in 0..ns.rows() {
                assert!(m.mul_vec(&ns.row_vec(b)).is_zero());
            }
            // basis rows are independent
            assert_eq!(ns.rank(), ns.rows());
        }
    }

    #[test]
    fn nullspace_of_zero_matrix_is_identity() {
        let ns = BitMatrix::zeros(4, 6).nullspace();
        assert_eq!(ns, BitMatrix::identity(6));
    }

    #[test]
    fn systematic_roundtrip() {
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        for _ in 0..100 {
            let nk = rng.random_range(1..8);
            let k = rng.random_range(1..8);
            // build (I | T), scramble by row operations, recover T
            let mut m = BitMatrix::zeros(nk, nk + k);
            let t0 = random_matrix(&mut rng, nk, k);
            for i in 0..nk {
                m.set(i, i, true);
                for j in 0..k {
                    m.set(i, nk + j, t0.get(i, j));
                }
            }
            let mut scrambled = m.clone();
            for _ in 0..20 {
                let a = rng.random_range(0..nk);
                let b = rng.random_range(0..nk);
                if a != b {
                    scrambled.xor_row_into(a, b);
                }
            }
            assert_eq!(scrambled.systematic_t().unwrap(), t0);
            // nullspaces agree
            assert_eq!(m.nullspace(), scrambled.nullspace());
        }
    }

    #[test]
    fn systematic_rejects_singular_leading_block() {
        let mut m = BitMatrix::zeros(2, 4);
        m.set(0, 1, true); // pivot columns are {1, 2}, not {0, 1}
        m.set(1, 2, true);
        assert!(matches!(m.systematic_t(), Err(Error::NotSystematic)));
    }

    #[test]
    fn bitvec_ops() {
        let mut v = BitVec::from_support(130, &[0, 64, 129]);
        assert_eq!(v.weight(), 3);
        assert_eq!(v.support(), vec![0, 64, 129]);
        v.flip(64);
        assert!(!v.get(64));
        let w = BitVec::from_support(130, &[0, 129]);
        v.xor_assign(&w);
        assert!(v.is_zero());
    }
}
