//! Exact dense linear algebra over a pluggable field.
//!
//! Everything in this crate that needs linear algebra (bound computation,
//! intertwiner spaces, subspace sweeps in the finite lab) funnels through the
//! small kit below.  Matrices are plain `Vec<Vec<E>>` in row-major order; the
//! sizes involved are tiny, so clarity wins over cleverness.

use num::BigRational;
use num::{One, Zero};

/// Field operations carried by a context value, so that element types without
/// an intrinsic notion of "their" field (plain `u64` residues, say) still work.
pub trait FieldOps {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; must only be called on nonzero elements.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
}

/// The rationals with arbitrary precision.
#[derive(Clone, Copy, Debug)]
pub struct QField;

impl FieldOps for QField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// A prime field `F_p` with `u64` residues, `p` small.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2, "prime field needs p >= 2");
        PrimeField { p }
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

impl FieldOps for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in F_p");
        // Fermat: a^(p-2), fine at this scale.
        self.pow(*a, self.p - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        a % self.p == 0
    }
}

pub type Matrix<E> = Vec<Vec<E>>;

pub fn identity<F: FieldOps>(f: &F, n: usize) -> Matrix<F::Elem> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { f.one() } else { f.zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul<F: FieldOps>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![f.zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if f.is_zero(&a[i][l]) {
                continue;
            }
            for j in 0..m {
                let t = f.mul(&a[i][l], &b[l][j]);
                out[i][j] = f.add(&out[i][j], &t);
            }
        }
    }
    out
}

/// Reduce `mat` to reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: FieldOps>(f: &F, mat: &mut Matrix<F::Elem>) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !f.is_zero(&mat[i][c])) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = f.inv(&mat[r][c].clone());
        for j in c..cols {
            mat[r][j] = f.mul(&mat[r][j], &inv);
        }
        for i in 0..rows {
            if i != r && !f.is_zero(&mat[i][c]) {
                let factor = mat[i][c].clone();
                for j in c..cols {
                    let t = f.mul(&factor, &mat[r][j]);
                    mat[i][j] = f.sub(&mat[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: FieldOps>(f: &F, mat: &Matrix<F::Elem>) -> usize {
    let mut m = mat.clone();
    rref(f, &mut m).len()
}

/// One solution of `A x = b`, if any.
pub fn solve<F: FieldOps>(
    f: &F,
    a: &Matrix<F::Elem>,
    b: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Matrix<F::Elem> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    // Inconsistent if a pivot landed in the augmented column.
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// A basis of the right nullspace of `A`.
pub fn nullspace<F: FieldOps>(f: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m = a.clone();
    let pivots = rref(f, &mut m);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = f.neg(&m[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a square matrix (Gaussian elimination with row swaps).
pub fn det<F: FieldOps>(f: &F, mat: &Matrix<F::Elem>) -> F::Elem {
    let n = mat.len();
    let mut m = mat.clone();
    let mut sign_flip = false;
    let mut d = f.one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !f.is_zero(&m[i][c])) else {
            return f.zero();
        };
        if pr != c {
            m.swap(c, pr);
            sign_flip = !sign_flip;
        }
        d = f.mul(&d, &m[c][c]);
        let inv = f.inv(&m[c][c].clone());
        for i in c + 1..n {
            if f.is_zero(&m[i][c]) {
                continue;
            }
            let factor = f.mul(&m[i][c], &inv);
            for j in c..n {
                let t = f.mul(&factor, &m[c][j]);
                m[i][j] = f.sub(&m[i][j], &t);
            }
        }
    }
    if sign_flip {
        f.neg(&d)
    } else {
        d
    }
}

pub fn is_invertible<F: FieldOps>(f: &F, mat: &Matrix<F::Elem>) -> bool {
    !f.is_zero(&det(f, mat))
}

/// Invert a square matrix, or `None` when it is singular.
pub fn invert<F: FieldOps>(f: &F, mat: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = mat.len();
    let mut aug: Matrix<F::Elem> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { f.one() } else { f.zero() });
            }
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Does `v` lie in the row space of the RREF matrix `basis`?
pub fn in_row_space<F: FieldOps>(f: &F, basis: &Matrix<F::Elem>, v: &[F::Elem]) -> bool {
    let mut v = v.to_vec();
    for row in basis {
        let Some(lead) = row.iter().position(|e| !f.is_zero(e)) else {
            continue;
        };
        if !f.is_zero(&v[lead]) {
            // Rows are normalized to a unit leading entry by `rref`.
            let factor = v[lead].clone();
            for j in 0..v.len() {
                let t = f.mul(&factor, &row[j]);
                v[j] = f.sub(&v[j], &t);
            }
        }
    }
    v.iter().all(|e| f.is_zero(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_nullspace_over_f2() {
        let f = PrimeField::new(2);
        // x + y = 0, y + z = 0 over F_2 has nullspace spanned by (1,1,1).
        let a = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let ns = nullspace(&f, &a);
        assert_eq!(ns, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn solve_rational_system() {
        let f = QField;
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let a = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(3, 1)]];
        let b = vec![q(5, 1), q(10, 1)];
        let x = solve(&f, &a, &b).unwrap();
        assert_eq!(x, vec![q(1, 1), q(3, 1)]);
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let f = PrimeField::new(3);
        let a = vec![vec![1, 1], vec![2, 2]];
        assert!(solve(&f, &a, &[1, 1]).is_none());
    }

    #[test]
    fn determinant_detects_singularity() {
        let f = PrimeField::new(5);
        assert_eq!(det(&f, &vec![vec![1, 2], vec![2, 4]]), 0);
        assert_eq!(det(&f, &vec![vec![1, 2], vec![3, 4]]), 3); // -2 mod 5
    }

    #[test]
    fn invert_round_trips() {
        let f = QField;
        let q = |n: i64| BigRational::from_integer(n.into());
        let m = vec![vec![q(1), q(2)], vec![q(3), q(5)]];
        let inv = invert(&f, &m).unwrap();
        assert_eq!(mat_mul(&f, &m, &inv), identity(&f, 2));
    }
}
