//! Thin sparse/dense helpers shared by assembly, condensation and solvers.

use std::io::Write as _;
use std::path::Path;

use nalgebra::{DMatrix, DVector};
use sprs::{CsMat, TriMat};

use crate::error::Result;

/// Compressed sparse row matrix used for all assembled blocks.
pub type CsrMatrix = CsMat<f64>;

/// Triplet accumulator; duplicate entries are summed on conversion.
pub struct CooBuilder {
    rows: usize,
    cols: usize,
    tri: TriMat<f64>,
}

impl CooBuilder {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            tri: TriMat::new((rows, cols)),
        }
    }

    #[inline]
    pub fn push(&mut self, row: usize, col: usize, value: f64) {
        debug_assert!(row < self.rows && col < self.cols);
        self.tri.add_triplet(row, col, value);
    }

    pub fn into_csr(self) -> CsrMatrix {
        self.tri.to_csr()
    }
}

/// y += A x
pub fn matvec_acc(a: &CsrMatrix, x: &[f64], y: &mut [f64]) {
    sprs::prod::mul_acc_mat_vec_csr(a.view(), x, y);
}

/// y = A x
pub fn matvec(a: &CsrMatrix, x: &[f64]) -> Vec<f64> {
    let mut y = vec![0.0; a.rows()];
    matvec_acc(a, x, &mut y);
    y
}

pub fn dense_from_csr(a: &CsrMatrix) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(a.rows(), a.cols());
    for (value, (i, j)) in a.iter() {
        m[(i, j)] += *value;
    }
    m
}

/// Largest absolute entry-wise asymmetry |A - A^T| relative to the largest entry.
pub fn relative_asymmetry(a: &CsrMatrix) -> f64 {
    let at = a.transpose_view().to_csr();
    let mut max_diff: f64 = 0.0;
    let mut max_abs: f64 = 0.0;
    let diff = a - &at;
    for (value, _) in diff.iter() {
        max_diff = max_diff.max(value.abs());
    }
    for (value, _) in a.iter() {
        max_abs = max_abs.max(value.abs());
    }
    if max_abs == 0.0 {
        0.0
    } else {
        max_diff / max_abs
    }
}

pub fn norm2(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

pub fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Relative l2 difference between two coefficient vectors.
pub fn relative_diff(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let mut num = 0.0;
    let mut den = 0.0;
    for (a, b) in x.iter().zip(y) {
        num += (a - b) * (a - b);
        den += b * b;
    }
    if den == 0.0 {
        num.sqrt()
    } else {
        (num / den).sqrt()
    }
}

/// Writes a matrix as `row col value` lines for external verification.
pub fn export_coo(a: &CsrMatrix, path: &Path) -> Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(out, "% {} {} {}", a.rows(), a.cols(), a.nnz())?;
    for (value, (i, j)) in a.iter() {
        writeln!(out, "{} {} {:.17e}", i, j, value)?;
    }
    Ok(())
}

/// Gathers a dense submatrix A[rows, cols] from a CSR matrix.
pub fn gather_dense(a: &CsrMatrix, rows: &[usize], cols: &[usize]) -> DMatrix<f64> {
    let col_pos: std::collections::HashMap<usize, usize> =
        cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut m = DMatrix::zeros(rows.len(), cols.len());
    for (k, &r) in rows.iter().enumerate() {
        if let Some(row) = a.outer_view(r) {
            for (c, &v) in row.iter() {
                if let Some(&j) = col_pos.get(&c) {
                    m[(k, j)] += v;
                }
            }
        }
    }
    m
}

pub fn dvec(x: &[f64]) -> DVector<f64> {
    DVector::from_column_slice(x)
}
