//! Small exact linear algebra kernel over the rationals: dense matrices,
//! incremental row spans and nullspace bases. Everything here is exact
//! (arbitrary precision), which the verification oracle requires; the
//! systems involved are tiny (at most a few hundred unknowns).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + a * b);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Q::is_zero)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        let a = self.get(i, j);
                        if !a.is_zero() {
                            acc += a * x;
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// Flattens to a single row vector (row-major), for treating a matrix as
    /// an element of a vector space of matrices.
    pub fn flatten(&self) -> Vec<Q> {
        self.data.clone()
    }
}

/// Incrementally built row space: rows are kept normalized with distinct
/// pivot columns, so rank, membership and span comparisons are immediate.
#[derive(Debug, Clone)]
pub struct RowSpace {
    cols: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Q]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
    }

    /// Adds a vector to the span. Returns `true` when it was independent.
    pub fn insert(&mut self, mut v: Vec<Q>) -> bool {
        assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[p].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Q::is_zero)
    }
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[Vec<Q>], cols: usize) -> usize {
    let mut sp = RowSpace::new(cols);
    for r in rows {
        sp.insert(r.clone());
    }
    sp.dim()
}

/// A basis of `{x : A x = 0}` for the constraint rows `A`.
pub fn nullspace(constraints: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    // Reduced row echelon form.
    let mut mat: Vec<Vec<Q>> = constraints
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        // pick a pivot with small numerator to limit growth
        let piv = (row..mat.len())
            .filter(|&r| !mat[r][col].is_zero())
            .min_by_key(|&r| mat[r][col].numer().abs() * mat[r][col].denom().abs());
        let Some(piv) = piv else { continue };
        mat.swap(row, piv);
        let lead = mat[row][col].clone();
        for x in mat[row].iter_mut() {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        let pivot_row = mat[row].clone();
        for (r, other) in mat.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let c = other[col].clone();
                for (x, y) in other.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == mat.len() {
            break;
        }
    }
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -mat[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn span_and_rank() {
        let mut sp = RowSpace::new(3);
        assert!(sp.insert(v(&[1, 2, 3])));
        assert!(sp.insert(v(&[0, 1, 1])));
        assert!(!sp.insert(v(&[1, 3, 4])));
        assert_eq!(sp.dim(), 2);
        assert!(sp.contains(&v(&[2, 5, 7])));
        assert!(!sp.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn nullspace_basis() {
        // x + y + z = 0, y - z = 0  =>  (x, y, z) = t(-2, 1, 1)
        let ns = nullspace(&[v(&[1, 1, 1]), v(&[0, 1, -1])], 3);
        assert_eq!(ns.len(), 1);
        let t = &ns[0];
        assert_eq!(&t[0] + &t[1] + &t[2], Q::zero());
        assert_eq!(&t[1] - &t[2], Q::zero());

        let ns = nullspace(&[v(&[1, 0]), v(&[0, 1])], 2);
        assert!(ns.is_empty());
        let ns = nullspace(&[], 2);
        assert_eq!(ns.len(), 2);
    }

    #[test]
    fn matrix_product() {
        let mut a = QMat::zero(2, 2);
        a.set(0, 0, q(1));
        a.set(0, 1, q(2));
        a.set(1, 1, q(1));
        let b = QMat::identity(2);
        assert_eq!(a.mul(&b), a);
        assert_eq!(a.apply(&v(&[1, 1])), v(&[3, 1]));
    }
}
