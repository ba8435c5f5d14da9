use crate::graph::Graph;
use crate::lift::{classify_against, BinomialMatrix, Classification, LiftError};
use crate::spectra::{algebraic_connectivity, laplacian_spectrum, Spectrum};
use crate::token::TokenGraph;

use super::BoundsError;

/// F_h(G) with its spectrum and its eigenvalues split two ways: against
/// spec(G), and against spec(F_{h−1}(G)).
#[derive(Debug, Clone)]
pub struct Level {
    pub token: TokenGraph,
    pub spectrum: Spectrum,
    pub vs_base: Result<Classification, LiftError>,
    /// `None` at h = 1.
    pub vs_previous: Option<Result<Classification, LiftError>>,
}

/// Token graphs F_1(G), ..., F_K(G) of one base graph.
#[derive(Debug, Clone)]
pub struct Ladder {
    graph: Graph,
    alpha: Option<f64>,
    levels: Vec<Level>,
}

impl Ladder {
    /// Builds every level up to `max_k`, refusing any C(n,h) above `cap`.
    pub fn new(graph: &Graph, max_k: usize, cap: usize, matching_tol: f64) -> Result<Self, BoundsError> {
        let n = graph.order();
        let alpha = if n >= 2 { Some(algebraic_connectivity(graph)?) } else { None };
        let mut levels: Vec<Level> = Vec::with_capacity(max_k);
        for h in 1..=max_k {
            let token = TokenGraph::with_cap(graph, h, cap)?;
            let spectrum = laplacian_spectrum(token.graph())?;
            let vs_base = match levels.first() {
                None => classify_against(&spectrum, &spectrum, &BinomialMatrix::new(n, 1)?, matching_tol),
                Some(first) => classify_against(&spectrum, &first.spectrum, &BinomialMatrix::new(n, h)?, matching_tol),
            };
            let vs_previous = levels.last().map(|prev| {
                BinomialMatrix::inclusion(n, h, h - 1)
                    .and_then(|b| classify_against(&spectrum, &prev.spectrum, &b, matching_tol))
            });
            levels.push(Level { token, spectrum, vs_base, vs_previous });
        }
        Ok(Ladder { graph: graph.clone(), alpha, levels })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn max_k(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, h: usize) -> Result<&Level, BoundsError> {
        h.checked_sub(1)
            .and_then(|i| self.levels.get(i))
            .ok_or(BoundsError::MissingLevel { k: h, max: self.levels.len() })
    }

    /// α(G); `None` for a single vertex.
    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    /// α(F_h(G)); exactly 0 when G is disconnected, `None` when F_h(G) is
    /// a single vertex.
    pub fn alpha_of(&self, h: usize) -> Result<Option<f64>, BoundsError> {
        let level = self.level(h)?;
        if level.spectrum.len() < 2 {
            return Ok(None);
        }
        if !self.graph.is_connected() {
            return Ok(Some(0.0));
        }
        Ok(Some(level.spectrum.second()))
    }
}
