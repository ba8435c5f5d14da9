//! λ_2 and λ_N without a dense decomposition, for token graphs too large to
//! diagonalize. λ_N comes from power iteration on L; λ_2 from inverse
//! iteration on the complement of the constant vector, each inner solve done
//! by conjugate gradients.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{norm, EigenError};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy)]
pub struct ExtremalOptions {
    /// Stop once ‖Lx − μx‖₂ ≤ tol · max(1, μ).
    pub tol: f64,
    pub max_iterations: usize,
    pub seed: u64,
}

impl Default for ExtremalOptions {
    fn default() -> Self {
        ExtremalOptions { tol: 1e-9, max_iterations: 100_000, seed: 42 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremal {
    pub algebraic_connectivity: f64,
    pub largest: f64,
}

fn apply_laplacian(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (v, slot) in out.iter_mut().enumerate() {
        let mut acc = g.degree(v) as f64 * x[v];
        for &w in g.neighbors(v) {
            acc -= x[w];
        }
        *slot = acc;
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn center(x: &mut [f64]) {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    x.iter_mut().for_each(|v| *v -= mean);
}

fn normalize(x: &mut [f64]) {
    let n = norm(x);
    x.iter_mut().for_each(|v| *v /= n);
}

pub fn extremal_eigenvalues(g: &Graph, opts: ExtremalOptions) -> Result<Extremal, EigenError> {
    let n = g.order();
    if n < 2 {
        return Err(EigenError::TooFewVertices);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let start: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();

    let largest = power_iteration(g, start.clone(), opts)?;
    let algebraic_connectivity = if g.is_connected() { inverse_iteration(g, start, opts)? } else { 0.0 };
    Ok(Extremal { algebraic_connectivity, largest })
}

fn power_iteration(g: &Graph, mut x: Vec<f64>, opts: ExtremalOptions) -> Result<f64, EigenError> {
    let n = x.len();
    let mut lx = vec![0.0; n];
    normalize(&mut x);
    let mut residual = f64::INFINITY;
    for _ in 0..opts.max_iterations {
        apply_laplacian(g, &x, &mut lx);
        let mu = dot(&x, &lx);
        residual = lx.iter().zip(&x).map(|(a, b)| (a - mu * b).powi(2)).sum::<f64>().sqrt();
        if residual <= opts.tol * mu.max(1.0) {
            return Ok(mu);
        }
        let len = norm(&lx);
        if len == 0.0 {
            return Ok(0.0);
        }
        for (xi, li) in x.iter_mut().zip(&lx) {
            *xi = li / len;
        }
    }
    Err(EigenError::IterationCap { iterations: opts.max_iterations, residual })
}

fn inverse_iteration(g: &Graph, mut x: Vec<f64>, opts: ExtremalOptions) -> Result<f64, EigenError> {
    let n = x.len();
    let mut lx = vec![0.0; n];
    center(&mut x);
    normalize(&mut x);
    let mut residual = f64::INFINITY;
    for _ in 0..opts.max_iterations {
        apply_laplacian(g, &x, &mut lx);
        let mu = dot(&x, &lx);
        residual = lx.iter().zip(&x).map(|(a, b)| (a - mu * b).powi(2)).sum::<f64>().sqrt();
        if residual <= opts.tol * mu.max(1.0) {
            return Ok(mu);
        }
        let mut y = conjugate_gradient(g, &x, 1e-13, 10 * n + 100);
        center(&mut y);
        normalize(&mut y);
        x = y;
    }
    Err(EigenError::IterationCap { iterations: opts.max_iterations, residual })
}

/// Solves L y = b for b ⊥ 1 on a connected graph.
fn conjugate_gradient(g: &Graph, b: &[f64], tol: f64, max_steps: usize) -> Vec<f64> {
    let n = b.len();
    let mut y = vec![0.0; n];
    let mut r = b.to_vec();
    let mut p = r.clone();
    let mut lp = vec![0.0; n];
    let mut rr = dot(&r, &r);
    let stop = tol * tol * rr;
    for _ in 0..max_steps {
        if rr <= stop {
            break;
        }
        apply_laplacian(g, &p, &mut lp);
        let step = rr / dot(&p, &lp);
        for i in 0..n {
            y[i] += step * p[i];
            r[i] -= step * lp[i];
        }
        center(&mut r);
        let next = dot(&r, &r);
        let beta = next / rr;
        rr = next;
        for i in 0..n {
            p[i] = r[i] + beta * p[i];
        }
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::spectra::laplacian_spectrum;
    use crate::token::TokenGraph;

    #[test]
    fn agrees_with_dense_solver() {
        for g in [
            Family::Cycle(9).build().unwrap(),
            Family::Petersen.build().unwrap(),
            TokenGraph::new(&Family::Cycle(7).build().unwrap(), 3).unwrap().graph().clone(),
            Family::Star(5).build().unwrap(),
        ] {
            let dense = laplacian_spectrum(&g).unwrap();
            let ext = extremal_eigenvalues(&g, ExtremalOptions::default()).unwrap();
            assert!((ext.largest - dense.largest()).abs() < 1e-7, "{ext:?}");
            assert!((ext.algebraic_connectivity - dense.second()).abs() < 1e-7, "{ext:?}");
        }
    }

    #[test]
    fn disconnected_is_zero() {
        let g = Graph::new(5, &[(1, 2), (3, 4), (4, 5)]).unwrap();
        let ext = extremal_eigenvalues(&g, ExtremalOptions::default()).unwrap();
        assert_eq!(ext.algebraic_connectivity, 0.0);
        assert!((ext.largest - 3.0).abs() < 1e-7);
    }
}
