//! Matrix-free Krylov solvers: Hermitian CG and restarted GMRES.
//!
//! Both solvers are deterministic: zero initial guess, fixed reduction
//! order, no randomized restarts. Non-convergence is reported through
//! [`SolveOutcome`] rather than an error so that callers can keep going with
//! the best iterate.

use super::{dot, norm};
use crate::{Error, Result};
use num_complex::Complex64;

type BoxedMap = Box<dyn Fn(&[Complex64]) -> Vec<Complex64> + Send + Sync>;

/// A linear map together with its dimensions and an optional adjoint.
pub struct LinearOperatorHandle {
    pub dim_in: usize,
    pub dim_out: usize,
    apply: BoxedMap,
    adjoint: Option<BoxedMap>,
}

impl LinearOperatorHandle {
    pub fn new<F>(dim_in: usize, dim_out: usize, apply: F) -> Self
    where
        F: Fn(&[Complex64]) -> Vec<Complex64> + Send + Sync + 'static,
    {
        Self {
            dim_in,
            dim_out,
            apply: Box::new(apply),
            adjoint: None,
        }
    }

    pub fn with_adjoint<F>(mut self, adjoint: F) -> Self
    where
        F: Fn(&[Complex64]) -> Vec<Complex64> + Send + Sync + 'static,
    {
        self.adjoint = Some(Box::new(adjoint));
        self
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        debug_assert_eq!(x.len(), self.dim_in);
        (self.apply)(x)
    }

    pub fn adjoint_apply(&self, y: &[Complex64]) -> Option<Vec<Complex64>> {
        debug_assert_eq!(y.len(), self.dim_out);
        self.adjoint.as_ref().map(|f| f(y))
    }

    pub fn has_adjoint(&self) -> bool {
        self.adjoint.is_some()
    }
}

/// Result of an iterative solve. `residual` is the final relative residual
/// ‖Ax − b‖/‖b‖ recomputed from the returned iterate.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub x: Vec<Complex64>,
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

fn true_residual(op: &LinearOperatorHandle, x: &[Complex64], b: &[Complex64], bnorm: f64) -> f64 {
    let ax = op.apply(x);
    let r: f64 = ax
        .iter()
        .zip(b)
        .map(|(a, bb)| (a - bb).norm_sqr())
        .sum::<f64>()
        .sqrt();
    r / bnorm
}

/// Conjugate gradients for a Hermitian positive (semi)definite operator,
/// typically a Tikhonov-shifted normal operator.
pub fn cg_hermitian(
    op: &LinearOperatorHandle,
    b: &[Complex64],
    tol: f64,
    max_iter: usize,
) -> Result<SolveOutcome> {
    if op.dim_in != op.dim_out || op.dim_in != b.len() {
        return Err(Error::Dimension(format!(
            "cg: operator {}x{} incompatible with rhs of length {}",
            op.dim_out,
            op.dim_in,
            b.len()
        )));
    }
    let n = b.len();
    let bnorm = norm(b);
    if bnorm == 0.0 {
        return Ok(SolveOutcome {
            x: vec![Complex64::new(0.0, 0.0); n],
            residual: 0.0,
            iterations: 0,
            converged: true,
        });
    }

    let mut x = vec![Complex64::new(0.0, 0.0); n];
    let mut r = b.to_vec();
    let mut p = r.clone();
    let mut rs_old = dot(&r, &r).re;

    let mut iterations = 0;
    for it in 1..=max_iter {
        iterations = it;
        let ap = op.apply(&p);
        let pap = dot(&p, &ap).re;
        if pap <= 0.0 {
            // Lost positivity (roundoff near convergence): stop with the
            // current iterate.
            break;
        }
        let alpha = rs_old / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        let rs_new = dot(&r, &r).re;
        if rs_new.sqrt() / bnorm <= tol {
            break;
        }
        let beta = rs_new / rs_old;
        for i in 0..n {
            p[i] = r[i] + beta * p[i];
        }
        rs_old = rs_new;
    }

    let residual = true_residual(op, &x, b, bnorm);
    Ok(SolveOutcome {
        x,
        residual,
        iterations,
        converged: residual <= tol * 10.0,
    })
}

/// Restarted GMRES with complex Givens rotations.
pub fn gmres(
    op: &LinearOperatorHandle,
    b: &[Complex64],
    tol: f64,
    max_iter: usize,
    restart: usize,
) -> Result<SolveOutcome> {
    if op.dim_in != op.dim_out || op.dim_in != b.len() {
        return Err(Error::Dimension(format!(
            "gmres: operator {}x{} incompatible with rhs of length {}",
            op.dim_out,
            op.dim_in,
            b.len()
        )));
    }
    let n = b.len();
    let m = restart.max(1);
    let bnorm = norm(b);
    if bnorm == 0.0 {
        return Ok(SolveOutcome {
            x: vec![Complex64::new(0.0, 0.0); n],
            residual: 0.0,
            iterations: 0,
            converged: true,
        });
    }

    let zero = Complex64::new(0.0, 0.0);
    let mut x = vec![zero; n];
    let mut total_iters = 0usize;

    'outer: while total_iters < max_iter {
        // r = b - A x
        let ax = op.apply(&x);
        let mut r: Vec<Complex64> = b.iter().zip(&ax).map(|(bb, a)| bb - a).collect();
        let beta = norm(&r);
        if beta / bnorm <= tol {
            break;
        }

        let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(m + 1);
        for v in r.iter_mut() {
            *v /= beta;
        }
        basis.push(r);

        // Hessenberg columns after Givens rotations, rotation coefficients,
        // and the rotated rhs.
        let mut h_cols: Vec<Vec<Complex64>> = Vec::with_capacity(m);
        let mut cs: Vec<Complex64> = Vec::with_capacity(m);
        let mut sn: Vec<Complex64> = Vec::with_capacity(m);
        let mut g = vec![zero; m + 1];
        g[0] = Complex64::new(beta, 0.0);

        let mut k_used = 0usize;
        let mut breakdown = false;
        for k in 0..m {
            if total_iters >= max_iter {
                break;
            }
            total_iters += 1;

            let mut w = op.apply(&basis[k]);
            let mut h = vec![zero; k + 2];
            for (j, vj) in basis.iter().enumerate().take(k + 1) {
                let hjk = dot(vj, &w);
                h[j] = hjk;
                for i in 0..n {
                    w[i] -= hjk * vj[i];
                }
            }
            let wn = norm(&w);
            h[k + 1] = Complex64::new(wn, 0.0);

            // Apply accumulated rotations to the new column.
            for j in 0..k {
                let t = cs[j].conj() * h[j] + sn[j].conj() * h[j + 1];
                h[j + 1] = -sn[j] * h[j] + cs[j] * h[j + 1];
                h[j] = t;
            }
            // New rotation eliminating h[k+1].
            let denom = (h[k].norm_sqr() + h[k + 1].norm_sqr()).sqrt();
            let (c, s) = if denom == 0.0 {
                (Complex64::new(1.0, 0.0), zero)
            } else {
                (h[k] / denom, h[k + 1] / denom)
            };
            h[k] = Complex64::new(denom, 0.0);
            h[k + 1] = zero;
            let gk = g[k];
            g[k] = c.conj() * gk;
            g[k + 1] = -s * gk;
            cs.push(c);
            sn.push(s);
            h_cols.push(h);
            k_used = k + 1;

            let rel = g[k + 1].norm() / bnorm;
            if wn <= 1e-14 * bnorm.max(1.0) {
                // Arnoldi breakdown: the Krylov space is invariant, so the
                // least-squares solution in it is exact.
                breakdown = true;
                break;
            }
            if rel <= tol {
                break;
            }
            for v in w.iter_mut() {
                *v /= wn;
            }
            basis.push(w);
        }

        if k_used == 0 {
            break;
        }
        // Back substitution on the rotated Hessenberg system.
        let mut y = vec![zero; k_used];
        for j in (0..k_used).rev() {
            let mut s = g[j];
            for (l, yl) in y.iter().enumerate().skip(j + 1) {
                s -= h_cols[l][j] * yl;
            }
            y[j] = s / h_cols[j][j];
        }
        for (j, yj) in y.iter().enumerate() {
            for i in 0..n {
                x[i] += yj * basis[j][i];
            }
        }

        if breakdown {
            break 'outer;
        }
        let rel = g[k_used].norm() / bnorm;
        if rel <= tol {
            break;
        }
    }

    let residual = true_residual(op, &x, b, bnorm);
    Ok(SolveOutcome {
        x,
        residual,
        iterations: total_iters,
        converged: residual <= tol * 10.0,
    })
}
