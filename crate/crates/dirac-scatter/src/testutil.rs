//! Test-only oracles kept independent of the implementation paths they
//! check: a dense complex direct solver, a Jacobi eigensolver for real
//! symmetric matrices, and a small deterministic RNG.

use num_complex::Complex64;

/// splitmix64; deterministic across platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.wrapping_add(0x9e3779b97f4a7c15))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn next_c64(&mut self) -> Complex64 {
        Complex64::new(self.next_f64() - 0.5, self.next_f64() - 0.5)
    }
}

/// Dense Gaussian elimination with partial pivoting.
pub fn dense_solve(a: &[Vec<Complex64>], b: &[Complex64]) -> Vec<Complex64> {
    let n = a.len();
    assert!(n > 0 && a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Complex64>> = a.to_vec();
    let mut x = b.to_vec();

    for col in 0..n {
        let (piv, _) = (col..n)
            .map(|r| (r, m[r][col].norm()))
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        m.swap(col, piv);
        x.swap(col, piv);
        let d = m[col][col];
        assert!(d.norm() > 1e-300, "dense_solve: singular matrix");
        for r in col + 1..n {
            let f = m[r][col] / d;
            if f.norm() == 0.0 {
                continue;
            }
            for c in col..n {
                let v = m[col][c];
                m[r][c] -= f * v;
            }
            let xv = x[col];
            x[r] -= f * xv;
        }
    }
    for col in (0..n).rev() {
        let mut s = x[col];
        for c in col + 1..n {
            s -= m[col][c] * x[c];
        }
        x[col] = s / m[col][col];
    }
    x
}

/// Eigenvalues and eigenvectors of a real symmetric matrix by cyclic Jacobi
/// rotations. Returns (eigenvalues, eigenvectors-as-columns).
pub fn jacobi_eigh(a: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += m[i][j] * m[i][j];
            }
        }
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k][p];
                    let mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p][k];
                    let mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let eig = (0..n).map(|i| m[i][i]).collect();
    (eig, v)
}
