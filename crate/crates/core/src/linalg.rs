//! Dense linear algebra over F_p.

use crate::fields::fp;

/// A row-major matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zero(p: u32, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zero(p, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, &c) in col.iter().enumerate().take(rows) {
                m.set(i, j, c % p);
            }
        }
        m
    }

    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut m = Self::zero(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &c) in row.iter().enumerate().take(cols) {
                m.set(i, j, c % p);
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64 % p).sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.p, self.rows, other.cols);
        for j in 0..other.cols {
            let col = self.mul_vec(&other.column(j));
            for (i, c) in col.into_iter().enumerate() {
                out.set(i, j, c);
            }
        }
        out
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = fp::inv(self.get(r, c), p);
            for j in 0..self.cols {
                let v = fp::mul(self.get(r, j), inv, p);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                let f = self.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = fp::sub(self.get(i, j), fp::mul(f, self.get(r, j), p), p);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of the right kernel `{x : Mx = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = fp::neg(m.get(r, f), p);
                }
                v
            })
            .collect()
    }

    /// One solution of `Mx = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        let mut aug = Matrix::zero(self.p, self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate().take(self.rows) {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, bi % self.p);
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols);
        }
        Some(x)
    }
}

/// All F_p-linear combinations of `basis`, in the order of the coefficient
/// tuple read as a base-p integer (first basis vector least significant).
pub fn span(p: u32, basis: &[Vec<u32>], len: usize) -> Vec<Vec<u32>> {
    let count = (p as usize).pow(basis.len() as u32);
    let mut out = Vec::with_capacity(count);
    for mut idx in 0..count {
        let mut v = vec![0u32; len];
        for b in basis {
            let c = (idx % p as usize) as u32;
            idx /= p as usize;
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = fp::add(*x, fp::mul(c, y, p), p);
                }
            }
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_solve() {
        // x + y + z = 0 over F_2 has a 2-dimensional kernel
        let m = Matrix::from_rows(2, 3, &[vec![1, 1, 1]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(m.mul_vec(v), vec![0]);
        }
        let x = m.solve(&[1]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![1]);
        let sing = Matrix::from_rows(3, 2, &[vec![1, 1], vec![2, 2]]);
        assert_eq!(sing.solve(&[1, 1]), None);
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn span_counts() {
        let s = span(3, &[vec![1, 0], vec![0, 1]], 2);
        assert_eq!(s.len(), 9);
        assert_eq!(s[1], vec![1, 0]);
        assert_eq!(s[3], vec![0, 1]);
    }
}
