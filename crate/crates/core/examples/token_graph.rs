//! Builds F_2(C_5), prints its size, a few subsets with their token degrees,
//! and the subgraph induced by the subsets that contain vertex 1.
//!
//! cargo run --example token_graph

use token_spectra::graph::Family;
use token_spectra::token::TokenGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Family::Cycle(5).build()?;
    let t = TokenGraph::new(&g, 2)?;
    println!("F_2(C_5): {} vertices, {} edges", t.graph().order(), t.graph().size());

    for rank in 0..t.index().len() {
        let subset = t.index().unrank(rank)?;
        println!("  rank {rank:>2}  {subset:?}  degree {}", t.token_degree(&subset)?);
    }

    let h = t.induced_token_subgraph(&[1])?;
    println!(
        "subsets containing 1: ranks {:?}, inducing {} edges (F_1(G - 1) has {})",
        h.ranks,
        h.graph.size(),
        h.reduced.graph().size()
    );
    Ok(())
}
