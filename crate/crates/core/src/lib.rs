//! Token graphs F_k(G), their Laplacian spectra, and executable checks of
//! the eigenvalue relations between F_k(G), F_{k−1}(G) and G.
//!
//! ```
//! use token_spectra::graph::Family;
//! use token_spectra::spectra::laplacian_spectrum;
//! use token_spectra::token::TokenGraph;
//!
//! let g = Family::Complete(4).build().unwrap();
//! let t = TokenGraph::new(&g, 2).unwrap();
//! let s = laplacian_spectrum(t.graph()).unwrap();
//! assert!((s.second() - 4.0).abs() < 1e-9);
//! ```
//!
//! * [`graph`]: simple graphs, named families, edge-list text.
//! * [`token`]: colex subset indexing and F_k(G).
//! * [`spectra`]: Laplacians, a Jacobi eigensolver, extremal eigenvalues.
//! * [`lift`]: binomial matrices and the inherited/new eigenvalue split.
//! * [`bounds`]: the check battery and P/Q/R/S decompositions.
//! * [`verify`] and [`fixtures`]: running the battery, reports.
//! * [`cli`]: the `token-spectra` command.

pub mod bounds;
pub mod cli;
pub mod fixtures;
pub mod graph;
pub mod lift;
pub mod spectra;
pub mod token;
pub mod verify;
