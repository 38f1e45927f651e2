//! Exact dense linear algebra over K = Q(rho_p) and over the dual
//! numbers K[eps]/(eps^2).
//!
//! Elimination is fraction-aware Gaussian elimination with exact
//! pivoting; the pivot row is chosen by a fewest-nonzero heuristic to
//! limit coefficient blowup.  The characteristic polynomial uses the
//! Faddeev-LeVerrier recurrence, whose divisions by small integers are
//! exact in K.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};

/// A dense matrix over K, row-major.  Rows and columns are numbered
/// starting at 0.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<CycNum>>", into = "Vec<Vec<CycNum>>")]
pub struct Mat {
    p: usize,
    nrows: usize,
    ncols: usize,
    data: Vec<CycNum>,
}

impl Mat {
    pub fn from_rows(p: usize, rows: Vec<Vec<CycNum>>) -> Result<Self> {
        let nrows = rows.len();
        if nrows == 0 {
            return Err(Error::Shape("empty matrix".into()));
        }
        let ncols = rows[0].len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Shape("ragged rows".into()));
            }
            for e in row {
                if e.prime() != p {
                    return Err(Error::Shape("entry prime mismatch".into()));
                }
                data.push(e);
            }
        }
        Ok(Mat {
            p,
            nrows,
            ncols,
            data,
        })
    }

    pub fn from_fn(
        p: usize,
        nrows: usize,
        ncols: usize,
        mut f: impl FnMut(usize, usize) -> CycNum,
    ) -> Self {
        let mut data = Vec::with_capacity(nrows * ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                data.push(f(i, j));
            }
        }
        Mat {
            p,
            nrows,
            ncols,
            data,
        }
    }

    pub fn zero(p: usize, nrows: usize, ncols: usize) -> Self {
        Self::from_fn(p, nrows, ncols, |_, _| CycNum::zero(p))
    }

    pub fn identity(p: usize, n: usize) -> Self {
        Self::from_fn(p, n, n, |i, j| {
            if i == j {
                CycNum::one(p)
            } else {
                CycNum::zero(p)
            }
        })
    }

    pub fn diagonal(p: usize, entries: &[CycNum]) -> Self {
        let n = entries.len();
        Self::from_fn(p, n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                CycNum::zero(p)
            }
        })
    }

    pub fn prime(&self) -> usize {
        self.p
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        (0..self.nrows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major flattening, used when matrices are treated as vectors
    /// of the p^2-dimensional matrix space.
    pub fn flatten(&self) -> Vec<CycNum> {
        self.data.clone()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.p, self.ncols, self.nrows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        Mat { data, ..self.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        Mat { data, ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| a.neg()).collect();
        Mat { data, ..self.clone() }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        let data = self.data.iter().map(|a| a.mul(c)).collect();
        Mat { data, ..self.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ncols, other.nrows);
        let p = self.p;
        Mat::from_fn(p, self.nrows, other.ncols, |i, j| {
            let mut acc = CycNum::zero(p);
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(other.get(k, j)));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        debug_assert_eq!(self.ncols, v.len());
        (0..self.nrows)
            .map(|i| {
                let mut acc = CycNum::zero(self.p);
                for k in 0..self.ncols {
                    let a = self.get(i, k);
                    if !a.is_zero() && !v[k].is_zero() {
                        acc = acc.add(&a.mul(&v[k]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> Self {
        debug_assert!(self.is_square());
        let mut acc = Mat::identity(self.p, self.nrows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.nrows)
                .all(|i| (0..self.ncols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn trace(&self) -> CycNum {
        debug_assert!(self.is_square());
        let mut acc = CycNum::zero(self.p);
        for i in 0..self.nrows {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// Stacks `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nrows, other.nrows);
        Mat::from_fn(self.p, self.nrows, self.ncols + other.ncols, |i, j| {
            if j < self.ncols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.ncols).clone()
            }
        })
    }

    fn count_nonzero_in_row(&self, i: usize) -> usize {
        self.row(i).iter().filter(|e| !e.is_zero()).count()
    }

    /// In-place reduced row echelon form.  Returns the pivot columns
    /// and the determinant scaling factor accumulated from row swaps
    /// and pivot normalizations (det = factor^-1 * prod of pivots before
    /// normalization; callers that need the determinant use `det`).
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == self.nrows {
                break;
            }
            // pivot: among rows >= r with nonzero entry in column c,
            // take the sparsest (deterministic tie-break on index)
            let mut best: Option<(usize, usize)> = None;
            for i in r..self.nrows {
                if !self.get(i, c).is_zero() {
                    let nz = self.count_nonzero_in_row(i);
                    match best {
                        Some((_, bnz)) if bnz <= nz => {}
                        _ => best = Some((i, nz)),
                    }
                }
            }
            let Some((pi, _)) = best else { continue };
            self.swap_rows(r, pi);
            let inv = self
                .get(r, c)
                .inv()
                .expect("pivot entry is nonzero");
            self.scale_row(r, &inv);
            for i in 0..self.nrows {
                if i != r && !self.get(i, c).is_zero() {
                    let factor = self.get(i, c).clone();
                    self.row_axpy(i, r, &factor.neg());
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
        for j in 0..self.ncols {
            self.data.swap(a * self.ncols + j, b * self.ncols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: &CycNum) {
        for j in 0..self.ncols {
            let v = self.get(i, j).mul(c);
            self.set(i, j, v);
        }
    }

    /// row[i] += factor * row[src]
    fn row_axpy(&mut self, i: usize, src: usize, factor: &CycNum) {
        for j in 0..self.ncols {
            let v = self.get(i, j).add(&self.get(src, j).mul(factor));
            self.set(i, j, v);
        }
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref().len()
    }

    pub fn det(&self) -> Result<CycNum> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.nrows;
        let mut work = self.clone();
        let mut det = CycNum::one(self.p);
        for c in 0..n {
            let mut best: Option<(usize, usize)> = None;
            for i in c..n {
                if !work.get(i, c).is_zero() {
                    let nz = work.count_nonzero_in_row(i);
                    match best {
                        Some((_, bnz)) if bnz <= nz => {}
                        _ => best = Some((i, nz)),
                    }
                }
            }
            let Some((pi, _)) = best else {
                return Ok(CycNum::zero(self.p));
            };
            if pi != c {
                work.swap_rows(c, pi);
                det = det.neg();
            }
            let pivot = work.get(c, c).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("pivot entry is nonzero");
            for i in c + 1..n {
                if !work.get(i, c).is_zero() {
                    let factor = work.get(i, c).mul(&inv).neg();
                    work.row_axpy(i, c, &factor);
                }
            }
        }
        Ok(det)
    }

    pub fn inv(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.nrows;
        let mut work = self.hstack(&Mat::identity(self.p, n));
        let pivots = work.rref();
        if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
            return Err(Error::Singular);
        }
        Ok(Mat::from_fn(self.p, n, n, |i, j| {
            work.get(i, n + j).clone()
        }))
    }

    /// Basis of the right kernel, produced by the deterministic
    /// elimination order (free variables set to 1 in column order).
    pub fn kernel(&self) -> Vec<Vec<CycNum>> {
        let mut work = self.clone();
        let pivots = work.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.ncols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(r);
        }
        for free in 0..self.ncols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![CycNum::zero(self.p); self.ncols];
            v[free] = CycNum::one(self.p);
            for (c, r) in pivot_of_col.iter().enumerate() {
                if let Some(r) = r {
                    v[c] = work.get(*r, free).neg();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Any solution of self * x = b, or None if inconsistent.
    pub fn solve(&self, b: &[CycNum]) -> Option<Vec<CycNum>> {
        debug_assert_eq!(self.nrows, b.len());
        let rhs = Mat::from_fn(self.p, self.nrows, 1, |i, _| b[i].clone());
        let mut work = self.hstack(&rhs);
        let pivots = work.rref();
        if pivots.last().is_some_and(|&c| c == self.ncols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![CycNum::zero(self.p); self.ncols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = work.get(r, self.ncols).clone();
        }
        Some(x)
    }

    /// Monic characteristic polynomial coefficients [c_0, ..., c_n]
    /// with charpoly(t) = sum_k c_k t^k and c_n = 1, via the
    /// Faddeev-LeVerrier recurrence.
    pub fn charpoly(&self) -> Result<Vec<CycNum>> {
        if !self.is_square() {
            return Err(Error::Shape("charpoly of a non-square matrix".into()));
        }
        let n = self.nrows;
        let p = self.p;
        // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I,
        // c_{n-k} = -tr(A M_k)/k
        let mut coeffs = vec![CycNum::zero(p); n + 1];
        coeffs[n] = CycNum::one(p);
        let mut m = Mat::zero(p, n, n);
        for k in 1..=n {
            m = self.mul(&m).add(&Mat::identity(p, n).scale(&coeffs[n - k + 1]));
            let am = self.mul(&m);
            let inv_k = CycNum::from_int(p, k as i64).inv()?;
            coeffs[n - k] = am.trace().mul(&inv_k).neg();
        }
        Ok(coeffs)
    }

    /// Basis of the lambda-eigenspace, i.e. kernel of (self - lambda I).
    pub fn eigenspace(&self, lambda: &CycNum) -> Vec<Vec<CycNum>> {
        debug_assert!(self.is_square());
        let shifted = self.sub(&Mat::identity(self.p, self.nrows).scale(lambda));
        shifted.kernel()
    }

    /// Projective equality: equal up to one global nonzero scalar.
    pub fn eq_projective(&self, other: &Self) -> bool {
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) {
            return false;
        }
        let Some(idx) = self.data.iter().position(|e| !e.is_zero()) else {
            return other.is_zero();
        };
        if other.data[idx].is_zero() {
            return false;
        }
        let scale = other.data[idx]
            .mul(&self.data[idx].inv().expect("nonzero by position"));
        *other == self.scale(&scale)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over Q(rho_{}):", self.nrows, self.ncols, self.p)?;
        for i in 0..self.nrows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl From<Mat> for Vec<Vec<CycNum>> {
    fn from(m: Mat) -> Self {
        (0..m.nrows).map(|i| m.row(i).to_vec()).collect()
    }
}

impl TryFrom<Vec<Vec<CycNum>>> for Mat {
    type Error = Error;
    fn try_from(rows: Vec<Vec<CycNum>>) -> Result<Self> {
        let p = rows
            .first()
            .and_then(|r| r.first())
            .map(|e| e.prime())
            .ok_or_else(|| Error::Shape("empty matrix".into()))?;
        Mat::from_rows(p, rows)
    }
}

/// A matrix over the dual numbers K[eps]/(eps^2): body + eps * slope.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DualMat {
    pub body: Mat,
    pub slope: Mat,
}

impl DualMat {
    pub fn new(body: Mat, slope: Mat) -> Result<Self> {
        if (body.nrows(), body.ncols()) != (slope.nrows(), slope.ncols()) {
            return Err(Error::Shape("body/slope shape mismatch".into()));
        }
        Ok(DualMat { body, slope })
    }

    pub fn from_body(body: Mat) -> Self {
        let slope = Mat::zero(body.prime(), body.nrows(), body.ncols());
        DualMat { body, slope }
    }

    pub fn identity(p: usize, n: usize) -> Self {
        Self::from_body(Mat::identity(p, n))
    }

    pub fn add(&self, other: &Self) -> Self {
        DualMat {
            body: self.body.add(&other.body),
            slope: self.slope.add(&other.slope),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        DualMat {
            body: self.body.sub(&other.body),
            slope: self.slope.sub(&other.slope),
        }
    }

    /// (A + eps B)(C + eps D) = AC + eps(AD + BC).
    pub fn mul(&self, other: &Self) -> Self {
        DualMat {
            body: self.body.mul(&other.body),
            slope: self
                .body
                .mul(&other.slope)
                .add(&self.slope.mul(&other.body)),
        }
    }

    /// (A + eps B)^-1 = A^-1 - eps A^-1 B A^-1.
    pub fn inv(&self) -> Result<Self> {
        let binv = self.body.inv()?;
        let slope = binv.mul(&self.slope).mul(&binv).neg();
        Ok(DualMat { body: binv, slope })
    }

    pub fn pow(&self, e: usize) -> Self {
        let p = self.body.prime();
        let mut acc = DualMat::identity(p, self.body.nrows());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by the dual scalar a + eps b.
    pub fn scale_dual(&self, a: &CycNum, b: &CycNum) -> Self {
        DualMat {
            body: self.body.scale(a),
            slope: self.slope.scale(a).add(&self.body.scale(b)),
        }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        self.scale_dual(c, &CycNum::zero(c.prime()))
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero() && self.slope.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_invertible_mat, random_mat, rng_from};

    fn shift_matrix(p: usize) -> Mat {
        Mat::from_fn(p, p, p, |i, j| {
            if i == (j + 1) % p {
                CycNum::one(p)
            } else {
                CycNum::zero(p)
            }
        })
    }

    #[test]
    fn identity_inverse() {
        let id = Mat::identity(5, 5);
        assert_eq!(id.inv().unwrap(), id);
    }

    #[test]
    fn all_ones_rank() {
        for p in [3, 5, 7] {
            let m = Mat::from_fn(p, p, p, |_, _| CycNum::one(p));
            assert_eq!(m.rank(), 1);
        }
    }

    #[test]
    fn r1_det_p3() {
        // R_1 = [[rho-1, rho^2-1], [rho^2-1, rho-1]],
        // det = (rho-1)^2 - (rho^2-1)^2 = 3 rho^2 - 3 rho by hand expansion
        let p = 3;
        let e = |k: i64| CycNum::rho_pow(p, k).sub(&CycNum::one(p));
        let m = Mat::from_rows(p, vec![vec![e(1), e(2)], vec![e(2), e(1)]]).unwrap();
        let expected = CycNum::rho_pow(p, 2)
            .scale(&num::BigRational::from_integer(3.into()))
            .sub(&CycNum::rho(p).scale(&num::BigRational::from_integer(3.into())));
        assert_eq!(m.det().unwrap(), expected);
        assert!(!m.det().unwrap().is_zero());
    }

    #[test]
    fn inverse_round_trip_random() {
        let mut rng = rng_from(3);
        for p in [3, 5] {
            for _ in 0..5 {
                let m = random_invertible_mat(p, p, &mut rng).unwrap();
                assert_eq!(m.mul(&m.inv().unwrap()), Mat::identity(p, p));
            }
        }
    }

    #[test]
    fn singular_inverse_fails() {
        let m = Mat::from_fn(3, 3, 3, |_, _| CycNum::one(3));
        assert!(matches!(m.inv(), Err(Error::Singular)));
    }

    #[test]
    fn det_multiplicative() {
        let mut rng = rng_from(17);
        for _ in 0..5 {
            let a = random_mat(5, 4, &mut rng);
            let b = random_mat(5, 4, &mut rng);
            assert_eq!(
                a.mul(&b).det().unwrap(),
                a.det().unwrap().mul(&b.det().unwrap())
            );
        }
    }

    #[test]
    fn rank_invariance() {
        let mut rng = rng_from(29);
        let p = 5;
        let m = random_mat(p, p, &mut rng);
        let r = m.rank();
        let g = random_invertible_mat(p, p, &mut rng).unwrap();
        let h = random_invertible_mat(p, p, &mut rng).unwrap();
        assert_eq!(g.mul(&m).mul(&h).rank(), r);
    }

    #[test]
    fn rank_nullity() {
        let mut rng = rng_from(41);
        for _ in 0..5 {
            let m = random_mat(3, 3, &mut rng);
            assert_eq!(m.rank() + m.kernel().len(), 3);
        }
    }

    #[test]
    fn charpoly_identity_p3() {
        // (t - 1)^3 = t^3 - 3t^2 + 3t - 1
        let cp = Mat::identity(3, 3).charpoly().unwrap();
        let expect: Vec<CycNum> = [-1i64, 3, -3, 1]
            .iter()
            .map(|&n| CycNum::from_int(3, n))
            .collect();
        assert_eq!(cp, expect);
    }

    #[test]
    fn charpoly_of_root_diagonal() {
        let p = 3;
        let d = Mat::diagonal(
            p,
            &[CycNum::one(p), CycNum::rho(p), CycNum::rho_pow(p, 2)],
        );
        // eigenvalues are the cube roots of 1, so charpoly = t^3 - 1
        let cp = d.charpoly().unwrap();
        let mut expect = vec![CycNum::zero(p); 4];
        expect[0] = CycNum::from_int(p, -1);
        expect[3] = CycNum::one(p);
        assert_eq!(cp, expect);
    }

    #[test]
    fn charpoly_of_shift() {
        for p in [3, 5, 7] {
            let cp = shift_matrix(p).charpoly().unwrap();
            let mut expect = vec![CycNum::zero(p); p + 1];
            expect[0] = CycNum::from_int(p, -1);
            expect[p] = CycNum::one(p);
            assert_eq!(cp, expect, "shift charpoly != t^p - 1 for p = {p}");
        }
    }

    #[test]
    fn cayley_hamilton_spot_check() {
        let mut rng = rng_from(53);
        let p = 5;
        let m = random_mat(p, 4, &mut rng);
        let cp = m.charpoly().unwrap();
        let mut acc = Mat::zero(p, 4, 4);
        for (k, c) in cp.iter().enumerate() {
            acc = acc.add(&m.pow(k).scale(c));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn eigenspace_examples() {
        let p = 3;
        let d = Mat::diagonal(
            p,
            &[CycNum::one(p), CycNum::rho(p), CycNum::rho_pow(p, 2)],
        );
        let es = d.eigenspace(&CycNum::rho(p));
        assert_eq!(es.len(), 1);
        assert!(es[0][0].is_zero() && es[0][2].is_zero() && !es[0][1].is_zero());

        assert!(Mat::identity(p, 3).eigenspace(&CycNum::rho(p)).is_empty());

        // shift matrix at lambda = 1: span of the all-ones vector
        let es = shift_matrix(p).eigenspace(&CycNum::one(p));
        assert_eq!(es.len(), 1);
        let v = &es[0];
        assert!(v.iter().all(|c| *c == v[0]));
    }

    #[test]
    fn dual_inverse_square_zero() {
        let p = 3;
        let mut rng = rng_from(61);
        let b = random_mat(p, 3, &mut rng);
        let m = DualMat::new(Mat::identity(p, 3), b.clone()).unwrap();
        let inv = m.inv().unwrap();
        assert_eq!(inv.body, Mat::identity(p, 3));
        assert_eq!(inv.slope, b.neg());
    }

    #[test]
    fn dual_round_trip_random() {
        let mut rng = rng_from(71);
        for _ in 0..20 {
            let p = 3;
            let body = random_invertible_mat(p, 3, &mut rng).unwrap();
            let slope = random_mat(p, 3, &mut rng);
            let m = DualMat::new(body, slope).unwrap();
            assert_eq!(m.mul(&m.inv().unwrap()), DualMat::identity(p, 3));
        }
        // pure-body inverse has zero slope
        let body = Mat::diagonal(3, &vec![CycNum::from_int(3, 2); 3]);
        let m = DualMat::from_body(body.clone());
        let inv = m.inv().unwrap();
        assert_eq!(inv.body, body.inv().unwrap());
        assert!(inv.slope.is_zero());
    }

    #[test]
    fn solve_and_kernel_agree() {
        let mut rng = rng_from(83);
        let p = 3;
        let m = random_mat(p, 3, &mut rng);
        let x: Vec<CycNum> = (0..3).map(|i| CycNum::from_int(p, i as i64 - 1)).collect();
        let b = m.mul_vec(&x);
        let sol = m.solve(&b).expect("consistent by construction");
        assert_eq!(m.mul_vec(&sol), b);
    }

    #[test]
    fn mat_serde_round_trip() {
        let mut rng = rng_from(97);
        let m = random_mat(5, 3, &mut rng);
        let json = serde_json::to_string(&m).unwrap();
        let back: Mat = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }
}
