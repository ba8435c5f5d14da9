//! λ_2 and λ_N of a token graph too large for the dense solver.
//!
//! cargo run --release --example extremal

use token_spectra::graph::Family;
use token_spectra::spectra::{extremal_eigenvalues, ExtremalOptions};
use token_spectra::token::TokenGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Family::Hamming { d: 3, q: 3 }.build()?;
    let t = TokenGraph::new(&g, 3)?;
    println!("F_3(H(3,3)): {} vertices, {} edges", t.graph().order(), t.graph().size());
    let e = extremal_eigenvalues(t.graph(), ExtremalOptions::default())?;
    println!("α = {:.9} (α(H(3,3)) = 3), λ_max = {:.9}", e.algebraic_connectivity, e.largest);
    Ok(())
}
