//! Unitary 2D FFT on power-of-two grids, backed by rustfft.

use crate::{Error, Result};
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// Dense complex array with row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexGridArray {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexGridArray {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "grid dims must be positive");
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "array data length {} does not match {rows}x{cols}",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FftDirection {
    Forward,
    Inverse,
}

/// Cached 2D FFT plans for one (rows, cols) shape.
pub struct Fft2 {
    rows: usize,
    cols: usize,
    row_fwd: Arc<dyn Fft<f64>>,
    row_inv: Arc<dyn Fft<f64>>,
    col_fwd: Arc<dyn Fft<f64>>,
    col_inv: Arc<dyn Fft<f64>>,
}

impl Fft2 {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if !rows.is_power_of_two() || !cols.is_power_of_two() {
            return Err(Error::Dimension(format!(
                "fft2 requires power-of-two dims, got {rows}x{cols}"
            )));
        }
        let mut planner = FftPlanner::new();
        Ok(Self {
            rows,
            cols,
            row_fwd: planner.plan_fft_forward(cols),
            row_inv: planner.plan_fft_inverse(cols),
            col_fwd: planner.plan_fft_forward(rows),
            col_inv: planner.plan_fft_inverse(rows),
        })
    }

    /// Unitary transform: forward and inverse are exact adjoints of each
    /// other and preserve the Euclidean norm.
    pub fn transform(&self, a: &ComplexGridArray, dir: FftDirection) -> Result<ComplexGridArray> {
        let mut out = a.clone();
        self.transform_in_place(&mut out, dir)?;
        Ok(out)
    }

    pub fn transform_in_place(&self, a: &mut ComplexGridArray, dir: FftDirection) -> Result<()> {
        if a.rows != self.rows || a.cols != self.cols {
            return Err(Error::Dimension(format!(
                "fft2 plan is {}x{}, array is {}x{}",
                self.rows, self.cols, a.rows, a.cols
            )));
        }
        let (row_plan, col_plan) = match dir {
            FftDirection::Forward => (&self.row_fwd, &self.col_fwd),
            FftDirection::Inverse => (&self.row_inv, &self.col_inv),
        };

        let mut scratch =
            vec![Complex64::new(0.0, 0.0); row_plan.get_inplace_scratch_len().max(col_plan.get_inplace_scratch_len())];
        for row in a.data.chunks_exact_mut(self.cols) {
            row_plan.process_with_scratch(row, &mut scratch);
        }

        // Column pass via transpose, row FFTs, transpose back.
        let mut t = transpose(&a.data, self.rows, self.cols);
        for col in t.chunks_exact_mut(self.rows) {
            col_plan.process_with_scratch(col, &mut scratch);
        }
        let back = transpose(&t, self.cols, self.rows);
        a.data.copy_from_slice(&back);

        let scale = 1.0 / ((self.rows * self.cols) as f64).sqrt();
        for v in a.data.iter_mut() {
            *v *= scale;
        }
        Ok(())
    }
}

fn transpose(data: &[Complex64], rows: usize, cols: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); data.len()];
    for r in 0..rows {
        for c in 0..cols {
            out[c * rows + r] = data[r * cols + c];
        }
    }
    out
}

/// One-shot unitary 2D FFT. Call sites doing repeated transforms of the same
/// shape should hold a [`Fft2`] plan instead.
pub fn fft2(a: &ComplexGridArray, dir: FftDirection) -> Result<ComplexGridArray> {
    Fft2::new(a.rows, a.cols)?.transform(a, dir)
}
