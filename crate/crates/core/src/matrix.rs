//! Dense symmetric integer matrices and their Hermitian (complex integer)
//! extension via the real embedding.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Symmetric matrix with integer entries, stored densely.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricIntMatrix {
    n: usize,
    a: Vec<i64>,
}

impl SymmetricIntMatrix {
    pub fn zero(n: usize) -> Self {
        SymmetricIntMatrix { n, a: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.a[i * n + i] = 1;
        }
        m
    }

    /// Builds from full rows; panics if the rows are not square symmetric.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        for r in rows {
            assert_eq!(r.len(), n, "rows must form a square matrix");
        }
        for i in 0..n {
            for j in 0..i {
                assert_eq!(rows[i][j], rows[j][i], "matrix must be symmetric");
            }
        }
        let mut a = Vec::with_capacity(n * n);
        for r in rows {
            a.extend_from_slice(r);
        }
        SymmetricIntMatrix { n, a }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.n + j] = v;
        self.a[j * self.n + i] = v;
    }

    /// Adds `shift` to every diagonal entry.
    pub fn shifted(&self, shift: i64) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m.a[i * self.n + i] += shift;
        }
        m
    }

    pub fn principal_submatrix(&self, keep: &[usize]) -> Self {
        let k = keep.len();
        let mut m = Self::zero(k);
        for (i, &vi) in keep.iter().enumerate() {
            for (j, &vj) in keep.iter().enumerate() {
                m.a[i * k + j] = self.get(vi, vj);
            }
        }
        m
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) as f64).collect())
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.a[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.get(i, j))).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign < 0 { -d } else { d }
    }
}

/// Hermitian matrix with Gaussian-integer entries: `re` symmetric, `im`
/// antisymmetric (`im[i][j] = -im[j][i]`, zero diagonal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianIntMatrix {
    n: usize,
    re: Vec<i64>,
    im: Vec<i64>,
}

impl HermitianIntMatrix {
    pub fn zero(n: usize) -> Self {
        HermitianIntMatrix { n, re: vec![0; n * n], im: vec![0; n * n] }
    }

    pub fn from_real(m: &SymmetricIntMatrix) -> Self {
        let n = m.dim();
        let mut h = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                h.re[i * n + j] = m.get(i, j);
            }
        }
        h
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn re(&self, i: usize, j: usize) -> i64 {
        self.re[i * self.n + j]
    }

    pub fn im(&self, i: usize, j: usize) -> i64 {
        self.im[i * self.n + j]
    }

    /// Sets entry `(i, j)` to `re + im·i` and `(j, i)` to its conjugate.
    /// Panics on a non-real diagonal entry.
    pub fn set(&mut self, i: usize, j: usize, re: i64, im: i64) {
        if i == j {
            assert_eq!(im, 0, "diagonal entries must be real");
        }
        self.re[i * self.n + j] = re;
        self.re[j * self.n + i] = re;
        self.im[i * self.n + j] = im;
        self.im[j * self.n + i] = -im;
    }

    pub fn is_real(&self) -> bool {
        self.im.iter().all(|&x| x == 0)
    }

    /// The real-symmetric embedding `[[Re, -Im], [Im, Re]]`. Its spectrum is
    /// the spectrum of the Hermitian matrix with every multiplicity doubled,
    /// so smallest-eigenvalue questions transfer unchanged.
    pub fn real_embedding(&self) -> SymmetricIntMatrix {
        let n = self.n;
        let mut m = SymmetricIntMatrix::zero(2 * n);
        for i in 0..n {
            for j in 0..n {
                let re = self.re(i, j);
                let im = self.im(i, j);
                m.a[i * 2 * n + j] = re;
                m.a[(n + i) * 2 * n + (n + j)] = re;
                m.a[i * 2 * n + (n + j)] = -im;
                m.a[(n + i) * 2 * n + j] = im;
            }
        }
        debug_assert!((0..2 * n).all(|i| (0..i).all(|j| m.get(i, j) == m.get(j, i))));
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        let m = SymmetricIntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(m.determinant(), BigInt::from(3));
        let z = SymmetricIntMatrix::zero(3);
        assert_eq!(z.determinant(), BigInt::zero());
        let id = SymmetricIntMatrix::identity(4);
        assert_eq!(id.determinant(), BigInt::one());
    }

    #[test]
    fn determinant_with_zero_pivot() {
        let m = SymmetricIntMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]);
        assert_eq!(m.determinant(), BigInt::zero());
        let m = SymmetricIntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), BigInt::from(-1));
    }

    #[test]
    fn real_embedding_spectrum_doubles() {
        // [[0, i], [-i, 0]] has eigenvalues ±1.
        let mut h = HermitianIntMatrix::zero(2);
        h.set(0, 1, 0, 1);
        let e = h.real_embedding();
        // char poly of the embedding must be (x^2 - 1)^2; determinant = 1.
        assert_eq!(e.determinant(), BigInt::one());
        assert_eq!(e.get(0, 3), -1);
        assert_eq!(e.get(3, 0), -1);
        assert_eq!(e.get(1, 2), 1);
    }
}
