//! Laplacian spectra of a few token graphs, with algebraic connectivity
//! compared against the base graph.
//!
//! cargo run --example spectrum

use token_spectra::graph::Family;
use token_spectra::spectra::{algebraic_connectivity, format_value, laplacian_spectrum};
use token_spectra::token::TokenGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (family, k) in [(Family::Complete(4), 2), (Family::Cycle(6), 3), (Family::Petersen, 2)] {
        let g = family.build()?;
        let t = TokenGraph::new(&g, k)?;
        let s = laplacian_spectrum(t.graph())?;
        let values: Vec<String> = s.values().iter().map(|&v| format_value(v)).collect();
        println!("F_{k}({family}) on {} vertices", s.len());
        println!("  spectrum: {}", values.join(" "));
        println!(
            "  α(F_k) = {}, α(G) = {}, solver residual {:.1e}",
            format_value(s.second()),
            format_value(algebraic_connectivity(&g)?),
            s.residual()
        );
    }
    Ok(())
}
