//! Splits the spectrum of F_k(G) into eigenvalues inherited from G and new
//! ones, and shows that Bᵀ carries eigenvectors down to G.
//!
//! cargo run --example spectral_inclusion

use token_spectra::graph::Family;
use token_spectra::lift::{classify_eigenvalues, spectral_inclusion_check, BinomialMatrix, MATCH_TOL};
use token_spectra::spectra::{laplacian, laplacian_spectrum, norm};
use token_spectra::token::TokenGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Family::Cycle(6).build()?;
    let base = laplacian_spectrum(&g)?;
    for k in 2..=3 {
        let t = TokenGraph::new(&g, k)?;
        let s = laplacian_spectrum(t.graph())?;
        let m = spectral_inclusion_check(base.values(), s.values(), MATCH_TOL)?;
        println!("F_{k}(C_6): spec(C_6) embeds with max gap {:.1e}", m.max_gap);

        let c = classify_eigenvalues(&t, MATCH_TOL)?;
        println!("  {} inherited, {} new: {:?}", c.inherited.len(), c.new.len(), c.new_values());

        // lift every eigenvector and measure how far it is from an eigenvector of G
        let b = BinomialMatrix::new(g.order(), k)?;
        let lg = laplacian(&g);
        let mut worst: f64 = 0.0;
        for i in 0..s.len() {
            let p = b.project(s.vector(i))?;
            if norm(&p) > 1e-6 {
                let lp = lg.mul_vec(&p);
                let r = lp.iter().zip(&p).map(|(a, x)| (a - s.values()[i] * x).abs()).fold(0.0, f64::max);
                worst = worst.max(r);
            }
        }
        println!("  largest lift residual {worst:.1e}");
    }
    Ok(())
}
