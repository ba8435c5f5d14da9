//! Cyclic Jacobi eigensolver for dense real symmetric matrices.
//!
//! Each rotation annihilates one off-diagonal pair; sweeps visit the pairs in
//! fixed row order, so the output is a deterministic function of the input.
//! The first few sweeps skip entries below a threshold (Rutishauser's
//! variant), later sweeps zero entries that no longer affect the diagonal.

use super::{EigenError, Spectrum, SymMatrix};

#[derive(Debug, Clone, Copy)]
pub struct JacobiOptions {
    /// Convergence once the off-diagonal Frobenius norm drops to
    /// `tol * max(1, ‖M‖_F)`.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions { tol: 1e-12, max_sweeps: 100 }
    }
}

/// Full eigendecomposition with default options.
pub fn eigen_sym(m: &SymMatrix) -> Result<Spectrum, EigenError> {
    eigen_sym_with(m, JacobiOptions::default())
}

pub fn eigen_sym_with(m: &SymMatrix, opts: JacobiOptions) -> Result<Spectrum, EigenError> {
    let n = m.order();
    let mut a = m.to_dense();
    // row i of `vt` is the i-th eigenvector
    let mut vt = vec![0.0; n * n];
    for i in 0..n {
        vt[i * n + i] = 1.0;
    }
    let target = opts.tol * m.frobenius_norm().max(1.0);

    let mut row_p = vec![0.0; n];
    let mut row_q = vec![0.0; n];
    let mut converged = false;
    let mut off = off_norm(&a, n);
    for sweep in 0..opts.max_sweeps {
        if off <= target {
            converged = true;
            break;
        }
        let threshold = if sweep < 3 { 0.2 * off_abs_sum(&a, n) / (n * n) as f64 } else { 0.0 };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let g = 100.0 * apq.abs();
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                if apq == 0.0 || apq.abs() <= threshold {
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;

                row_p.copy_from_slice(&a[p * n..(p + 1) * n]);
                row_q.copy_from_slice(&a[q * n..(q + 1) * n]);
                for r in 0..n {
                    let (xp, xq) = (row_p[r], row_q[r]);
                    row_p[r] = c * xp - s * xq;
                    row_q[r] = s * xp + c * xq;
                }
                row_p[p] = app - t * apq;
                row_q[q] = aqq + t * apq;
                row_p[q] = 0.0;
                row_q[p] = 0.0;
                a[p * n..(p + 1) * n].copy_from_slice(&row_p);
                a[q * n..(q + 1) * n].copy_from_slice(&row_q);
                for r in 0..n {
                    a[r * n + p] = row_p[r];
                    a[r * n + q] = row_q[r];
                }

                let (lo, hi) = vt.split_at_mut(q * n);
                let (vp, vq) = (&mut lo[p * n..(p + 1) * n], &mut hi[..n]);
                for (xp, xq) in vp.iter_mut().zip(vq.iter_mut()) {
                    let (op, oq) = (*xp, *xq);
                    *xp = c * op - s * oq;
                    *xq = s * op + c * oq;
                }
            }
        }
        off = off_norm(&a, n);
    }
    if !converged && off > target {
        return Err(EigenError::NoConvergence { sweeps: opts.max_sweeps, off_norm: off });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &i in &order {
        let v = &vt[i * n..(i + 1) * n];
        let flip = v.iter().find(|x| x.abs() > 1e-10).is_some_and(|&x| x < 0.0);
        vectors.extend(v.iter().map(|&x| if flip { -x } else { x }));
    }
    Ok(Spectrum::from_parts(m, values, vectors))
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * sum).sqrt()
}

fn off_abs_sum(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += a[p * n + q].abs();
        }
    }
    sum
}
