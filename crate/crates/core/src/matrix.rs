//! Dense matrices over an exact field, with reduced row echelon form and the
//! derived solvers (nullspaces, particular solutions, column-span
//! intersections).
//!
//! All routines are deterministic: pivots are always the first usable row or
//! column, so canonical forms are unique and reproducible.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::scalar::{FieldSpec, Scalar};
use crate::Error;

/// A rows x cols matrix, row-major. Zero-sized dimensions are legal and
/// behave as the corresponding empty maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    entries: Vec<Scalar>,
}

/// Result of row reduction.
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, increasing.
    pub pivots: Vec<usize>,
}

/// What `solve_space` should compute for the matrix A.
pub enum SolveMode<'a> {
    /// Basis of { x : Ax = 0 }, returned as columns.
    Nullspace,
    /// Basis of col(A) n col(B), returned as columns.
    ColumnIntersection(&'a Matrix),
    /// One particular X with AX = B; error if inconsistent.
    ParticularSolution(&'a Matrix),
}

/// Umbrella entry point for the exact solvers.
pub fn solve_space(a: &Matrix, mode: SolveMode) -> Result<Matrix, Error> {
    match mode {
        SolveMode::Nullspace => Ok(a.nullspace()),
        SolveMode::ColumnIntersection(b) => Ok(a.column_intersection(b)),
        SolveMode::ParticularSolution(b) => a.solve(b).ok_or(Error::InconsistentSystem),
    }
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            field,
            entries,
        }
    }

    /// Integer literal constructor, mostly for tests.
    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&n| field.from_int(n)).collect())
                .collect(),
        )
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut m = self.clone();
        for e in &mut m.entries {
            *e = &*e * s;
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Horizontal concatenation; all matrices must share the row count.
    pub fn hstack(field: FieldSpec, parts: &[&Matrix]) -> Matrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                for c in 0..m.cols {
                    out.set(r, off + c, m.get(r, c).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(field: FieldSpec, parts: &[&Matrix]) -> Matrix {
        let cols = parts.first().map_or(0, |m| m.cols);
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "vstack col mismatch");
            for r in 0..m.rows {
                for c in 0..cols {
                    out.set(off + r, c, m.get(r, c).clone());
                }
            }
            off += m.rows;
        }
        out
    }

    pub fn block_diag(field: FieldSpec, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for m in parts {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(ro + r, co + c, m.get(r, c).clone());
                }
            }
            ro += m.rows;
            co += m.cols;
        }
        out
    }

    /// Keeps the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.field, self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.field, rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.cols {
                out.set(i, c, self.get(r, c).clone());
            }
        }
        out
    }

    /// Gauss-Jordan elimination with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let mut pr = None;
            for r in row..m.rows {
                if !m.get(r, col).is_zero() {
                    pr = Some(r);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(pr, c).clone();
                    m.set(row, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = &*m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = &*m.get(r, c) - &(&*m.get(row, c) * &factor);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            rank: pivots.len(),
            reduced: m,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Nullspace basis as columns, one per free column of the rref, in
    /// increasing free-column order.
    pub fn nullspace(&self) -> Matrix {
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut basis = Matrix::zero(self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            basis.set(f, j, self.field.one());
            for (i, &p) in pivots.iter().enumerate() {
                basis.set(p, j, -&(reduced.get(i, f).clone()));
            }
        }
        basis
    }

    /// Reduced column echelon form with zero columns dropped: the canonical
    /// basis of the column span. Two matrices have equal column spans iff
    /// their rcef matrices are equal.
    pub fn rcef(&self) -> Matrix {
        let Rref { reduced, rank, .. } = self.transpose().rref();
        reduced.select_rows(&(0..rank).collect::<Vec<_>>()).transpose()
    }

    /// One particular solution X of AX = B (free variables zero), or `None`
    /// if the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        let aug = Matrix::hstack(self.field, &[self, b]);
        let Rref {
            reduced, pivots, ..
        } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(self.field, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, reduced.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Basis of col(self) n col(other), canonicalized.
    pub fn column_intersection(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "intersection shape mismatch");
        if self.cols == 0 || other.cols == 0 {
            return Matrix::zero(self.field, self.rows, 0);
        }
        let neg = other.scale(&(-&self.field.one()));
        let sys = Matrix::hstack(self.field, &[self, &neg]);
        let null = sys.nullspace();
        let top = null.select_rows(&(0..self.cols).collect::<Vec<_>>());
        self.mul(&top).rcef()
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "mul shape mismatch");
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = &*out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols, "pow needs a square matrix");
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        let aug = Matrix::hstack(self.field, &[self, &id]);
        let Rref { reduced, rank, .. } = aug.rref();
        if rank < self.rows {
            return None;
        }
        Some(reduced.select_columns(&(self.cols..2 * self.cols).collect::<Vec<_>>()))
    }

    /// Linear combination sum(coeffs[i] * mats[i]); all shapes must agree.
    pub fn linear_combination(mats: &[&Matrix], coeffs: &[Scalar]) -> Matrix {
        assert_eq!(mats.len(), coeffs.len());
        let first = mats.first().expect("nonempty combination");
        let mut out = Matrix::zero(first.field, first.rows, first.cols);
        for (m, c) in mats.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for idx in 0..out.entries.len() {
                out.entries[idx] = &out.entries[idx] + &(&m.entries[idx] * c);
            }
        }
        out
    }

    /// Flattens row-major into a single column vector.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = &*a + b;
        }
        out
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = &*a - b;
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = -&*a;
        }
        out
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix::mul(self, rhs)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            let row: Vec<&Scalar> = (0..self.cols).map(|c| self.get(r, c)).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(FieldSpec::Q, 2);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Matrix::zero(FieldSpec::Q, 3, 2);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_ints(FieldSpec::Q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.reduced, Matrix::from_ints(FieldSpec::Q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn nullspace_f2() {
        let f2 = FieldSpec::fp(2).unwrap();
        let m = Matrix::from_ints(f2, &[&[1, 1]]);
        let n = m.nullspace();
        assert_eq!(n, Matrix::from_ints(f2, &[&[1], &[1]]));
        assert!(m.mul(&n).is_zero());
    }

    #[test]
    fn transverse_lines_intersect_trivially() {
        let a = Matrix::from_ints(FieldSpec::Q, &[&[1], &[0]]);
        let b = Matrix::from_ints(FieldSpec::Q, &[&[0], &[1]]);
        let i = a.column_intersection(&b);
        assert_eq!(i.cols, 0);
    }

    #[test]
    fn solve_and_inconsistency() {
        let a = Matrix::from_ints(FieldSpec::Q, &[&[1, 2], &[2, 4]]);
        let b = Matrix::from_ints(FieldSpec::Q, &[&[3], &[6]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let bad = Matrix::from_ints(FieldSpec::Q, &[&[3], &[7]]);
        assert!(a.solve(&bad).is_none());
        assert!(matches!(
            solve_space(&a, SolveMode::ParticularSolution(&bad)),
            Err(Error::InconsistentSystem)
        ));
    }

    #[test]
    fn rcef_is_canonical() {
        let f2 = FieldSpec::fp(2).unwrap();
        let a = Matrix::from_ints(f2, &[&[1, 1], &[0, 1], &[1, 0]]);
        let b = Matrix::from_ints(f2, &[&[0, 1], &[1, 1], &[1, 1]]);
        // Same span, different generators.
        assert_eq!(a.rcef(), b.rcef());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_ints(FieldSpec::Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = Matrix::from_ints(FieldSpec::Q, &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn zero_dimensional_edges() {
        let m = Matrix::zero(FieldSpec::Q, 0, 3);
        assert_eq!(m.nullspace().cols, 3);
        let n = Matrix::zero(FieldSpec::Q, 3, 0);
        assert_eq!(n.nullspace().cols, 0);
        assert_eq!(n.rank(), 0);
        let id0 = Matrix::identity(FieldSpec::Q, 0);
        assert!(id0.is_identity());
        assert_eq!(id0.inverse().unwrap(), id0);
    }
}
