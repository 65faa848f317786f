//! Dense exact linear algebra over GF(q).
//!
//! Pivoting takes the first nonzero entry in column order. Column-space
//! membership of weight-one and weight-two vectors is answered from a single
//! left null space computation: a vector lies in the column space of `M` iff
//! every left null vector of `M` annihilates it.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::gf::{Elem, GaloisField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

#[derive(Clone)]
pub struct GfMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
    field: Arc<GaloisField>,
}

impl PartialEq for GfMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GfMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl GfMatrix {
    pub fn zeros(field: Arc<GaloisField>, rows: usize, cols: usize) -> Self {
        GfMatrix {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
            field,
        }
    }

    pub fn identity(field: Arc<GaloisField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_data(field: Arc<GaloisField>, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(GfMatrix {
            rows,
            cols,
            data,
            field,
        })
    }

    pub fn from_rows(field: Arc<GaloisField>, rows: &[Vec<Elem>]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(MatrixError::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::from_data(field, rows.len(), cols, data)
    }

    /// Builds a matrix column by column.
    pub fn from_columns(field: Arc<GaloisField>, rows: usize, columns: &[Vec<Elem>]) -> Result<Self, MatrixError> {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(MatrixError::DimensionMismatch {
                    expected: rows,
                    got: col.len(),
                });
            }
            for (r, &v) in col.iter().enumerate() {
                m.data[r * cols + c] = v;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> GfMatrix {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// `M · x`.
    pub fn mul_vec(&self, x: &[Elem]) -> Result<Vec<Elem>, MatrixError> {
        if x.len() != self.cols {
            return Err(MatrixError::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// `w · M`.
    pub fn left_mul_vec(&self, w: &[Elem]) -> Result<Vec<Elem>, MatrixError> {
        if w.len() != self.rows {
            return Err(MatrixError::DimensionMismatch {
                expected: self.rows,
                got: w.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.cols];
        for (r, &wr) in w.iter().enumerate() {
            if wr.is_zero() {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(wr, a));
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        eliminate(&self.field, &mut data, self.rows, self.cols, self.cols, false).len()
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> GfMatrix {
        self.rref_with_pivots().0
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref_with_pivots(&self) -> (GfMatrix, Vec<usize>) {
        let mut out = self.clone();
        let pivots = eliminate(&self.field, &mut out.data, self.rows, self.cols, self.cols, true);
        (out, pivots)
    }

    /// Some solution of `M · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Elem]) -> Result<Option<Vec<Elem>>, MatrixError> {
        if b.len() != self.rows {
            return Err(MatrixError::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let w = self.cols + 1;
        let mut aug = Vec::with_capacity(self.rows * w);
        for (r, &x) in b.iter().enumerate() {
            aug.extend_from_slice(self.row(r));
            aug.push(x);
        }
        let pivots = eliminate(&self.field, &mut aug, self.rows, w, self.cols, true);
        // inconsistent iff some row below the pivots has a nonzero right-hand side
        for r in pivots.len()..self.rows {
            if !aug[r * w + self.cols].is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec![Elem::ZERO; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[r * w + self.cols];
        }
        Ok(Some(x))
    }

    /// Basis of `{ w : w · M = 0 }`, in reduced echelon form.
    pub fn left_null_basis(&self) -> LeftNullBasis {
        let (rows, cols) = (self.rows, self.cols);
        let w = cols + rows;
        let mut aug = vec![Elem::ZERO; rows * w];
        for r in 0..rows {
            aug[r * w..r * w + cols].copy_from_slice(self.row(r));
            aug[r * w + cols + r] = Elem::ONE;
        }
        let rank = eliminate(&self.field, &mut aug, rows, w, cols, false).len();
        let basis: Vec<Vec<Elem>> = (rank..rows).map(|r| aug[r * w + cols..(r + 1) * w].to_vec()).collect();
        let nullity = basis.len();
        let mut data: Vec<Elem> = basis.into_iter().flatten().collect();
        eliminate(&self.field, &mut data, nullity, rows, rows, true);
        LeftNullBasis {
            field: self.field.clone(),
            dim: rows,
            basis: data.chunks(rows.max(1)).take(nullity).map(<[Elem]>::to_vec).collect(),
        }
    }
}

/// Gaussian elimination in place on a row-major `rows × width` buffer,
/// pivoting only within the first `pivot_cols` columns. Returns the pivot
/// columns in row order. With `reduce`, produces reduced row echelon form
/// (pivots normalized to one and cleared above).
fn eliminate(
    f: &GaloisField,
    data: &mut [Elem],
    rows: usize,
    width: usize,
    pivot_cols: usize,
    reduce: bool,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..pivot_cols {
        if pr == rows {
            break;
        }
        let Some(sel) = (pr..rows).find(|&r| !data[r * width + c].is_zero()) else {
            continue;
        };
        if sel != pr {
            for j in 0..width {
                data.swap(sel * width + j, pr * width + j);
            }
        }
        let (head, tail) = data.split_at_mut(pr * width + width);
        let prow = &mut head[pr * width..];
        if reduce {
            let inv = f.inv(prow[c]).expect("pivot is nonzero");
            for v in prow[c..].iter_mut() {
                *v = f.mul(*v, inv);
            }
        }
        let pinv_neg = f.neg(f.inv(prow[c]).expect("pivot is nonzero"));
        for row in tail.chunks_exact_mut(width) {
            axpy_from(f, row, prow, c, pinv_neg);
        }
        if reduce {
            let prow = prow.to_vec();
            for row in head[..pr * width].chunks_exact_mut(width) {
                axpy_from(f, row, &prow, c, f.neg(Elem::ONE));
            }
        }
        pivots.push(c);
        pr += 1;
    }
    pivots
}

/// `row[c..] += (row[c] * scale) * prow[c..]`; a no-op when `row[c] == 0`.
#[inline]
fn axpy_from(f: &GaloisField, row: &mut [Elem], prow: &[Elem], c: usize, scale: Elem) {
    let lead = row[c];
    if lead.is_zero() {
        return;
    }
    let factor = f.mul(lead, scale);
    for (v, &p) in row[c..].iter_mut().zip(&prow[c..]) {
        if !p.is_zero() {
            *v = f.add(*v, f.mul(factor, p));
        }
    }
}

/// A basis of the left null space of a matrix, with column-space membership
/// queries for vectors of weight one and two.
#[derive(Clone)]
pub struct LeftNullBasis {
    field: Arc<GaloisField>,
    dim: usize,
    basis: Vec<Vec<Elem>>,
}

impl fmt::Debug for LeftNullBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LeftNullBasis")
            .field("dim", &self.dim)
            .field("basis", &self.basis)
            .finish()
    }
}

impl LeftNullBasis {
    pub fn nullity(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    /// Length of each basis vector (the row count of the matrix).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of every basis vector at row `c`.
    pub fn column(&self, c: usize) -> Vec<Elem> {
        self.basis.iter().map(|w| w[c]).collect()
    }

    /// Whether the unit vector at row `c` lies in the column space.
    pub fn has_unit(&self, c: usize) -> bool {
        self.basis.iter().all(|w| w[c].is_zero())
    }

    /// Rows `c` whose unit vector lies in the column space.
    pub fn weight_one_rows(&self) -> Vec<usize> {
        (0..self.dim).filter(|&c| self.has_unit(c)).collect()
    }

    pub fn weight_one(&self) -> Option<usize> {
        (0..self.dim).find(|&c| self.has_unit(c))
    }

    /// `λ` with `column(c2) = λ · column(c1)`, when both columns are nonzero
    /// and proportional. For any left null vector `v`, `v[c2] = λ · v[c1]`.
    pub fn proportionality(&self, c1: usize, c2: usize) -> Option<Elem> {
        let f = &self.field;
        let i = self.basis.iter().position(|w| !w[c1].is_zero())?;
        let lambda = f.div(self.basis[i][c2], self.basis[i][c1]).ok()?;
        if lambda.is_zero() {
            return None;
        }
        self.basis
            .iter()
            .all(|w| w[c2] == f.mul(lambda, w[c1]))
            .then_some(lambda)
    }

    /// Nonzero `(a, b)` with `a·e_c1 + b·e_c2` in the column space, if any.
    pub fn weight_two(&self, c1: usize, c2: usize) -> Option<(Elem, Elem)> {
        let f = &self.field;
        let z1 = self.has_unit(c1);
        let z2 = self.has_unit(c2);
        match (z1, z2) {
            (true, true) => Some((Elem::ONE, Elem::ONE)),
            (false, false) => self.proportionality(c1, c2).map(|lambda| (lambda, f.neg(Elem::ONE))),
            _ => None,
        }
    }
}

/// Row index `c` such that the unit vector at `c` lies in the column space.
pub fn weight_one_in_colspace(m: &GfMatrix) -> Option<usize> {
    m.left_null_basis().weight_one()
}

/// Nonzero `(a, b)` with `a·e_c1 + b·e_c2` in the column space of `m`.
pub fn weight_two_in_colspace(m: &GfMatrix, c1: usize, c2: usize) -> Option<(Elem, Elem)> {
    assert_ne!(c1, c2, "weight-two query needs two distinct rows");
    m.left_null_basis().weight_two(c1, c2)
}
