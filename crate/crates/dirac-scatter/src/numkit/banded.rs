//! Banded complex LU factorization with partial pivoting (LAPACK gbtrf
//! layout) for sparse matrices whose nonzeros cluster around the diagonal.
//!
//! The Crank–Nicolson step matrix is tridiagonal after interleaving the two
//! spinor components, so every marching step reduces to one banded solve.
//! A batched solve keeps all sources in flight with contiguous access.

use crate::{Error, Result};
use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// LU factors of a square banded matrix, immutable after construction and
/// safe to share across concurrent solves.
pub struct SparseFactorization {
    n: usize,
    kl: usize,
    ku: usize,
    /// Column-major band storage with `ldab = 2*kl + ku + 1` rows; column j
    /// holds entry (i, j) at band row `kl + ku + i - j`.
    ab: Vec<Complex64>,
    ipiv: Vec<usize>,
}

impl SparseFactorization {
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    fn ldab(&self) -> usize {
        2 * self.kl + self.ku + 1
    }

    /// Solve A x = rhs for one right-hand side.
    pub fn solve(&self, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
        if rhs.len() != self.n {
            return Err(Error::Dimension(format!(
                "sparse_solve: rhs length {} != {}",
                rhs.len(),
                self.n
            )));
        }
        let mut x = rhs.to_vec();
        self.solve_batch_in_place(&mut x, 1)?;
        Ok(x)
    }

    /// Solve A X = B for `nrhs` right-hand sides stored interleaved:
    /// `data[row * nrhs + s]` is row `row` of system `s`.
    pub fn solve_batch_in_place(&self, data: &mut [Complex64], nrhs: usize) -> Result<()> {
        if nrhs == 0 || data.len() != self.n * nrhs {
            return Err(Error::Dimension(format!(
                "sparse_solve: batch buffer {} != {} x {}",
                data.len(),
                self.n,
                nrhs
            )));
        }
        let n = self.n;
        let kl = self.kl;
        let kv = self.kl + self.ku;
        let ldab = self.ldab();
        let mut pivot_row = vec![ZERO; nrhs];

        // L solve with the recorded row interchanges.
        for j in 0..n.saturating_sub(1) {
            let p = self.ipiv[j];
            if p != j {
                for s in 0..nrhs {
                    data.swap(j * nrhs + s, p * nrhs + s);
                }
            }
            let lm = kl.min(n - 1 - j);
            if lm == 0 {
                continue;
            }
            pivot_row.copy_from_slice(&data[j * nrhs..(j + 1) * nrhs]);
            let col = &self.ab[j * ldab..(j + 1) * ldab];
            for t in 1..=lm {
                let m = col[kv + t];
                if m == ZERO {
                    continue;
                }
                let row = &mut data[(j + t) * nrhs..(j + t + 1) * nrhs];
                for (r, pv) in row.iter_mut().zip(&pivot_row) {
                    *r -= m * pv;
                }
            }
        }

        // U solve; U has upper bandwidth kl + ku.
        for j in (0..n).rev() {
            let col = &self.ab[j * ldab..(j + 1) * ldab];
            let dinv = Complex64::new(1.0, 0.0) / col[kv];
            {
                let row = &mut data[j * nrhs..(j + 1) * nrhs];
                for r in row.iter_mut() {
                    *r *= dinv;
                }
            }
            pivot_row.copy_from_slice(&data[j * nrhs..(j + 1) * nrhs]);
            let lm = kv.min(j);
            for t in 1..=lm {
                let m = col[kv - t];
                if m == ZERO {
                    continue;
                }
                let row = &mut data[(j - t) * nrhs..(j - t + 1) * nrhs];
                for (r, pv) in row.iter_mut().zip(&pivot_row) {
                    *r -= m * pv;
                }
            }
        }
        Ok(())
    }
}

/// Factor a square sparse matrix given as (row, col, value) triplets.
/// Duplicate entries are summed. Fails on a pivot below `1e-14 * max|A|`.
pub fn sparse_factor(
    n: usize,
    entries: &[(usize, usize, Complex64)],
) -> Result<SparseFactorization> {
    if n == 0 {
        return Err(Error::Dimension("sparse_factor: empty matrix".into()));
    }
    let mut kl = 0usize;
    let mut ku = 0usize;
    let mut anorm = 0.0f64;
    for &(i, j, v) in entries {
        if i >= n || j >= n {
            return Err(Error::Dimension(format!(
                "sparse_factor: entry ({i},{j}) outside {n}x{n}"
            )));
        }
        if i > j {
            kl = kl.max(i - j);
        } else {
            ku = ku.max(j - i);
        }
        anorm = anorm.max(v.norm());
    }
    let kv = kl + ku;
    let ldab = 2 * kl + ku + 1;
    let mut ab = vec![ZERO; ldab * n];
    for &(i, j, v) in entries {
        ab[j * ldab + kv + i - j] += v;
    }
    let threshold = 1e-14 * anorm;

    let mut ipiv = vec![0usize; n];
    let mut ju = 0usize;
    for j in 0..n {
        let km = kl.min(n - 1 - j);
        // Pivot among rows j..=j+km of column j.
        let mut jp = 0usize;
        let mut best = ab[j * ldab + kv].norm();
        for t in 1..=km {
            let mag = ab[j * ldab + kv + t].norm();
            if mag > best {
                best = mag;
                jp = t;
            }
        }
        ipiv[j] = j + jp;
        if best <= threshold {
            return Err(Error::Singular(format!(
                "pivot {best:.3e} at column {j} below threshold {threshold:.3e}"
            )));
        }
        ju = ju.max((j + ku + jp).min(n - 1));
        if jp != 0 {
            for c in j..=ju {
                let a_idx = c * ldab + kv + j - c;
                let b_idx = c * ldab + kv + j + jp - c;
                ab.swap(a_idx, b_idx);
            }
        }
        if km > 0 {
            let pivot = ab[j * ldab + kv];
            for t in 1..=km {
                ab[j * ldab + kv + t] /= pivot;
            }
            for c in j + 1..=ju {
                let f = ab[c * ldab + kv + j - c];
                if f == ZERO {
                    continue;
                }
                for t in 1..=km {
                    let m = ab[j * ldab + kv + t];
                    ab[c * ldab + kv + j + t - c] -= m * f;
                }
            }
        }
    }

    Ok(SparseFactorization { n, kl, ku, ab, ipiv })
}

/// Convenience wrapper for a single solve.
pub fn sparse_solve(f: &SparseFactorization, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
    f.solve(rhs)
}
