//! Laplacian spectra.
//!
//! [`laplacian`] builds L = D − A, [`eigen_sym`] decomposes it by cyclic
//! Jacobi rotations, and the Rayleigh-quotient helpers work directly on the
//! edge list of a [`Graph`].

mod extremal;
mod jacobi;
mod matrix;

pub use extremal::{extremal_eigenvalues, Extremal, ExtremalOptions};
pub use jacobi::{eigen_sym, eigen_sym_with, JacobiOptions};
pub use matrix::SymMatrix;

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

/// Largest matrix order decomposed densely unless the caller raises it.
pub const DEFAULT_DENSE_CAP: usize = 3_000;

/// Absolute tolerance for comparing computed eigenvalues.
pub const SPECTRAL_TOL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EigenError {
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("iteration did not converge after {iterations} steps (residual {residual:e})")]
    IterationCap { iterations: usize, residual: f64 },
    #[error("algebraic connectivity needs at least 2 vertices")]
    TooFewVertices,
    #[error("Rayleigh quotient of the zero vector")]
    ZeroVector,
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
}

/// Ascending eigenvalues with an orthonormal eigenvector basis.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<f64>,
    // column-major: eigenvector i occupies vectors[i*n..(i+1)*n]
    vectors: Vec<f64>,
    residual: f64,
}

impl Spectrum {
    fn from_parts(m: &SymMatrix, values: Vec<f64>, vectors: Vec<f64>) -> Self {
        let n = values.len();
        let mut residual: f64 = 0.0;
        for (i, &lambda) in values.iter().enumerate() {
            let v = &vectors[i * n..(i + 1) * n];
            let mv = m.mul_vec(v);
            for (a, b) in mv.iter().zip(v) {
                residual = residual.max((a - lambda * b).abs());
            }
        }
        Spectrum { values, vectors, residual }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Unit eigenvector paired with `values()[i]`.
    pub fn vector(&self, i: usize) -> &[f64] {
        let n = self.values.len();
        &self.vectors[i * n..(i + 1) * n]
    }

    /// max_i ‖M v_i − λ_i v_i‖_∞ against the decomposed matrix.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// λ_2, or 0 for a single vertex.
    pub fn second(&self) -> f64 {
        self.values.get(1).copied().unwrap_or(0.0)
    }

    pub fn largest(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }
}

/// L(G) = D − A.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let mut l = SymMatrix::zeros(g.order());
    for v in 0..g.order() {
        l.set(v, v, g.degree(v) as f64);
    }
    for &(u, v) in g.edges() {
        l.set(u, v, -1.0);
    }
    l
}

/// Laplacian spectrum of `g`.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum, EigenError> {
    eigen_sym(&laplacian(g))
}

/// α(G) = λ_2. Disconnected graphs report exactly 0.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64, EigenError> {
    if g.order() < 2 {
        return Err(EigenError::TooFewVertices);
    }
    if !g.is_connected() {
        return Ok(0.0);
    }
    Ok(laplacian_spectrum(g)?.second())
}

/// λ_G(v) = Σ_{xy∈E} (v_x − v_y)² / Σ v_x².
pub fn rayleigh_quotient(g: &Graph, v: &[f64]) -> Result<f64, EigenError> {
    if v.len() != g.order() {
        return Err(EigenError::LengthMismatch { got: v.len(), expected: g.order() });
    }
    let norm2: f64 = v.iter().map(|x| x * x).sum();
    if norm2 == 0.0 {
        return Err(EigenError::ZeroVector);
    }
    let energy: f64 = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let d = v[a] - v[b];
            d * d
        })
        .sum();
    Ok(energy / norm2)
}

/// `|Σ v_i| ≤ tol · ‖v‖₂`.
pub fn is_embedding(v: &[f64], tol: f64) -> bool {
    let sum: f64 = v.iter().sum();
    sum.abs() <= tol * norm(v)
}

pub fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Rounds to ten decimals for display; `-0` prints as `0`.
pub fn format_value(x: f64) -> String {
    let r = (x * 1e10).round() / 1e10;
    if r == 0.0 {
        "0".to_string()
    } else {
        format!("{r}")
    }
}

/// One `index,eigenvalue` line per eigenvalue, 1-based index.
pub fn spectrum_csv(s: &Spectrum) -> String {
    let mut out = String::new();
    for (i, &v) in s.values().iter().enumerate() {
        let _ = writeln!(out, "{},{}", i + 1, format_value(v));
    }
    out
}

/// Dense eigenvector matrix: row `x` holds entry `x` of every eigenvector,
/// columns in eigenvalue order.
pub fn eigenvectors_csv(s: &Spectrum) -> String {
    let n = s.len();
    let mut out = String::new();
    for x in 0..n {
        for i in 0..n {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{:e}", s.vector(i)[x]);
        }
        out.push('\n');
    }
    out
}
