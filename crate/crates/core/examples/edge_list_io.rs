//! Reads a graph from edge-list text, writes F_2 of it back out in the same
//! format, and reads that again.
//!
//! cargo run --example edge_list_io

use token_spectra::graph::{parse_edge_list, write_edge_list};
use token_spectra::spectra::{laplacian_spectrum, spectrum_csv};
use token_spectra::token::TokenGraph;

const BOWTIE: &str = "\
# two triangles sharing vertex 3
5 6
1 2
1 3
2 3
3 4
3 5
4 5
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_edge_list(BOWTIE)?;
    println!("read {:?}", g);

    let t = TokenGraph::new(&g, 2)?;
    let text = write_edge_list(t.graph());
    print!("F_2 as an edge list:\n{text}");

    let back = parse_edge_list(&text)?;
    assert_eq!(back.edges(), t.graph().edges());
    print!("its spectrum:\n{}", spectrum_csv(&laplacian_spectrum(&back)?));

    match parse_edge_list("3 1\n1 4\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
