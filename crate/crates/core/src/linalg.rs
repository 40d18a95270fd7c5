//! Dense matrices over (possibly noncommutative) rings.
//!
//! Vectors are columns and scalars act on the right, so the row operations
//! used by the elimination routines multiply rows on the left.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::hquat::{Field, Hq, Qq, Quat, R2Quat, Rational};

pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
}

/// A scalar ring in which every nonzero element is invertible.
pub trait SkewField: Scalar {
    fn inv(&self) -> Option<Self>;
}

impl Scalar for Hq {
    fn zero() -> Self {
        Hq::ZERO
    }
    fn one() -> Self {
        Hq::ONE
    }
    fn is_zero(&self) -> bool {
        Hq::is_zero(self)
    }
    fn conj(&self) -> Self {
        Hq::conj(self)
    }
}

impl<F: Field> Scalar for Quat<F> {
    fn zero() -> Self {
        Quat::zero()
    }
    fn one() -> Self {
        Quat::one()
    }
    fn is_zero(&self) -> bool {
        Quat::is_zero(self)
    }
    fn conj(&self) -> Self {
        Quat::conj(self)
    }
}

impl<F: Field> SkewField for Quat<F> {
    fn inv(&self) -> Option<Self> {
        Quat::inv(self)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for t in 0..n {
            m[(t, t)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<T>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Mat::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> Vec<T> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Scalar>(&self, f: impl Fn(&T) -> Option<U>) -> Option<Mat<U>> {
        let data = self.data.iter().map(f).collect::<Option<Vec<U>>>()?;
        Some(Mat { rows: self.rows, cols: self.cols, data })
    }

    /// `m*`, the conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(c, r)] = self[(r, c)].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(c, r)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = &self[(r, c)];
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn block_diag(blocks: &[Mat<T>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(self.rows)
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T: Scalar> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Scalar> Mul for &Mat<T> {
    type Output = Mat<T>;
    fn mul(self, o: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Mat::<T>::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = &o[(k, c)];
                    if !b.is_zero() {
                        let cur = out[(r, c)].clone();
                        out[(r, c)] = cur + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

impl<T: Scalar> Add for &Mat<T> {
    type Output = Mat<T>;
    fn add(self, o: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Scalar> Sub for &Mat<T> {
    type Output = Mat<T>;
    fn sub(self, o: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

/// Reduced row echelon form. Returns the reduced matrix and the pivot columns.
pub fn rref<T: SkewField>(m: &Mat<T>) -> (Mat<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(piv) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        swap_rows(&mut a, row, piv);
        let inv = a[(row, col)].inv().expect("nonzero pivot");
        for c in 0..a.cols {
            a[(row, c)] = inv.clone() * a[(row, c)].clone();
        }
        for r in 0..a.rows {
            if r != row && !a[(r, col)].is_zero() {
                let f = a[(r, col)].clone();
                for c in 0..a.cols {
                    let v = a[(r, c)].clone() - f.clone() * a[(row, c)].clone();
                    a[(r, c)] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

fn swap_rows<T: Scalar>(a: &mut Mat<T>, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for c in 0..a.cols {
        a.data.swap(r1 * a.cols + c, r2 * a.cols + c);
    }
}

pub fn rank<T: SkewField>(m: &Mat<T>) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : m·x = 0}` with scalars acting on the right.
pub fn right_kernel<T: SkewField>(m: &Mat<T>) -> Vec<Vec<T>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![T::zero(); m.cols];
            x[f] = T::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -r[(i, f)].clone();
            }
            x
        })
        .collect()
}

pub fn inverse<T: SkewField>(m: &Mat<T>) -> Option<Mat<T>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows;
    let mut aug = Mat::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug[(r, c)] = m[(r, c)].clone();
        }
        aug[(r, n + r)] = T::one();
    }
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut out = Mat::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            out[(r, c)] = red[(r, n + c)].clone();
        }
    }
    Some(out)
}

/// Solves `m·x = b` for a square invertible `m`.
pub fn solve<T: SkewField>(m: &Mat<T>, b: &[T]) -> Option<Vec<T>> {
    Some(inverse(m)?.mul_vec(b))
}

pub fn hq_to_qq(m: &Mat<Hq>) -> Mat<Qq> {
    m.map(Hq::to_qq)
}

pub fn qq_to_hq(m: &Mat<Qq>) -> Option<Mat<Hq>> {
    m.try_map(Qq::to_hq)
}

pub fn qq_to_r2q(m: &Mat<Qq>) -> Mat<R2Quat> {
    m.map(Qq::to_r2q)
}

pub fn vec_hq_to_qq(v: &[Hq]) -> Vec<Qq> {
    v.iter().map(Hq::to_qq).collect()
}

pub fn vec_qq_to_hq(v: &[Qq]) -> Option<Vec<Hq>> {
    v.iter().map(Qq::to_hq).collect()
}

pub fn vec_hq_to_r2q(v: &[Hq]) -> Vec<R2Quat> {
    v.iter().map(Hq::to_r2q).collect()
}

/// Sign pattern `(positive, negative)` of a symmetric rational matrix, by
/// congruence diagonalization.
pub fn signature(m: &[Vec<Rational>]) -> (usize, usize) {
    use num_traits::Signed;
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // pick a nonzero diagonal pivot, or manufacture one
        let piv = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => {
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                let Some((i, j)) = pair else { break };
                // row_i += row_j, col_i += col_j makes a_ii = 2 a_ij + a_jj ≠ 0
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let d = a[piv][piv].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for &r in &active {
            if r == piv || a[r][piv].is_zero() {
                continue;
            }
            let f = &a[r][piv] / &d;
            for k in 0..n {
                let v = &f * &a[piv][k];
                a[r][k] -= v;
            }
            for k in 0..n {
                let v = &f * &a[k][piv];
                a[k][r] -= v;
            }
        }
        active.retain(|&x| x != piv);
    }
    (pos, neg)
}

impl<F: Field> Mat<Quat<F>> {
    pub fn scalar_mul_left(&self, s: &Quat<F>) -> Self {
        self.map(|x| s.clone() * x.clone())
    }
}
