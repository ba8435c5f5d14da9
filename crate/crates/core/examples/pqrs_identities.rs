//! The Rayleigh quotient of a vector on F_k(G) from P, Q, R, S, the
//! recursion down to F_{k−1}, and the Q ≤ k·min(k−1, Δ)·S bound.
//!
//! cargo run --example pqrs_identities

use token_spectra::bounds::{qs_bound_factor, random_vectors, PqrsEvaluator, RecursionResiduals};
use token_spectra::graph::Family;
use token_spectra::spectra::laplacian;
use token_spectra::token::TokenGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Family::Petersen.build()?;
    let k = 3;
    let upper = PqrsEvaluator::new(&g, k)?;
    let lower = PqrsEvaluator::new(&g, k - 1)?;
    let lk = laplacian(TokenGraph::new(&g, k)?.graph());

    for v in random_vectors(7, upper.len(), 3) {
        let x = upper.eval(&v)?;
        let direct = lk.quadratic_form(&v) / x.s;
        println!("P={:.4} Q={:.4} R={:.4} S={:.4}", x.p, x.q, x.r, x.s);
        println!("  (P-Q-R)/S = {:.12}, vᵀLv/vᵀv = {direct:.12}", x.rayleigh());
        println!("  Q/S = {:.4} <= {}", x.q / x.s, qs_bound_factor(&g, k));

        let r = RecursionResiduals::compute(&upper, &lower, &v)?;
        println!("  P {:.6} = {:.6}", r.p.0, r.p.1);
        if let Some(q) = r.q {
            println!("  Q {:.6} = {:.6}", q.0, q.1);
        }
        println!("  R {:.6} = {:.6}", r.r.0, r.r.1);
        println!("  S {:.6} = {:.6}", r.s.0, r.s.1);
        println!("  λ {:.6} = {:.6}", r.split.0, r.split.1);
    }
    Ok(())
}
