//! k-token graphs.
//!
//! The vertices of F_k(G) are the k-subsets of V(G), numbered by colex rank;
//! two subsets are adjacent when their symmetric difference is an edge of G.

mod index;

pub use index::{binomial, elements_of, mask_of, KSubsetIndex, MAX_GROUND_SET};

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Default refusal threshold on C(n, k).
pub const DEFAULT_VERTEX_CAP: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TokenError {
    #[error("k = {k} is outside 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("token graph would have C(n,k) = {vertices} vertices, above the cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("ground set of {0} vertices exceeds the supported maximum of 63")]
    GroundSetTooLarge(usize),
    #[error("subset has {got} elements, expected {k}")]
    WrongCardinality { got: usize, k: usize },
    #[error("rank {rank} is outside 0..{count}")]
    RankOutOfRange { rank: usize, count: usize },
    #[error("element {element} is outside 1..={n}")]
    BadElement { element: usize, n: usize },
    #[error("element {0} repeated in subset")]
    DuplicateElement(usize),
    #[error("fixed set has {size} elements; it must have at most k - 1 = {max}")]
    FixedSetTooLarge { size: usize, max: usize },
    #[error("induced subgraph on S_U is not isomorphic to the reduced token graph")]
    IsomorphismBroken,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// F_k(G) together with its base graph and subset numbering.
#[derive(Debug, Clone)]
pub struct TokenGraph {
    base: Graph,
    k: usize,
    graph: Graph,
    index: KSubsetIndex,
}

impl TokenGraph {
    /// Builds F_k(G) under [`DEFAULT_VERTEX_CAP`].
    pub fn new(base: &Graph, k: usize) -> Result<Self, TokenError> {
        Self::with_cap(base, k, DEFAULT_VERTEX_CAP)
    }

    pub fn with_cap(base: &Graph, k: usize, cap: usize) -> Result<Self, TokenError> {
        let n = base.order();
        if k == 0 || k > n {
            return Err(TokenError::KOutOfRange { k, n });
        }
        if n > MAX_GROUND_SET {
            return Err(TokenError::GroundSetTooLarge(n));
        }
        let vertices = binomial(n, k);
        if vertices > cap {
            return Err(TokenError::TooLarge { vertices, cap });
        }
        let index = KSubsetIndex::new(n, k)?;
        // each edge {x,y} contributes one token edge per (k-1)-subset of the other n-2 vertices
        let rest_masks =
            if n >= 2 && k - 1 <= n - 2 { KSubsetIndex::new(n - 2, k - 1)?.masks().to_vec() } else { Vec::new() };

        let mut edges = Vec::with_capacity(rest_masks.len() * base.size());
        let mut others = Vec::with_capacity(n);
        for &(x, y) in base.edges() {
            others.clear();
            others.extend((0..n).filter(|&v| v != x && v != y));
            for &compact in &rest_masks {
                let w = deposit(compact, &others);
                let a = index.rank_mask(w | 1 << x);
                let b = index.rank_mask(w | 1 << y);
                edges.push((a, b));
            }
        }
        let graph = Graph::from_zero_based(vertices, edges);
        Ok(TokenGraph { base: base.clone(), k, graph, index })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn index(&self) -> &KSubsetIndex {
        &self.index
    }

    /// d_X = Σ_{x∈X} d_x − Σ_{x,y∈X} a_xy, the second sum over ordered pairs.
    pub fn token_degree(&self, subset: &[usize]) -> Result<usize, TokenError> {
        if subset.len() != self.k {
            return Err(TokenError::WrongCardinality { got: subset.len(), k: self.k });
        }
        Ok(token_degree_mask(&self.base, mask_of(self.base.order(), subset)?))
    }

    /// S_U: ranks of the k-subsets containing the 1-based set `fixed`, ascending.
    pub fn subsets_containing(&self, fixed: &[usize]) -> Result<Vec<usize>, TokenError> {
        let u = self.fixed_mask(fixed)?;
        Ok(self.index.masks().iter().enumerate().filter(|(_, &m)| m & u == u).map(|(r, _)| r).collect())
    }

    /// The subgraph H_U induced by S_U, with its verified identification
    /// `X ↦ X∖U` onto F_{k−|U|}(G − U).
    pub fn induced_token_subgraph(&self, fixed: &[usize]) -> Result<InducedTokenSubgraph, TokenError> {
        let u = self.fixed_mask(fixed)?;
        let ranks = self.subsets_containing(fixed)?;
        let graph = self.graph.induced(&ranks);

        let deletion = self.base.delete_vertices(&elements_of(u))?;
        let reduced = TokenGraph::with_cap(&deletion.graph, self.k - u.count_ones() as usize, usize::MAX)?;

        let mut new_label = vec![usize::MAX; self.base.order()];
        for (new, &old) in deletion.kept.iter().enumerate() {
            new_label[old] = new;
        }
        let iso: Vec<usize> = ranks
            .iter()
            .map(|&r| {
                let rest = self.index.mask(r) & !u;
                let relabeled = elements_of(rest).into_iter().fold(0u64, |acc, e| acc | 1 << new_label[e - 1]);
                reduced.index.rank_mask(relabeled)
            })
            .collect();

        let mut mapped: Vec<(usize, usize)> = graph
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (iso[a], iso[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        mapped.sort_unstable();
        let bijective = {
            let mut seen = iso.clone();
            seen.sort_unstable();
            seen.iter().copied().eq(0..reduced.graph.order())
        };
        if !bijective || mapped != reduced.graph.edges() {
            return Err(TokenError::IsomorphismBroken);
        }
        Ok(InducedTokenSubgraph { graph, ranks, iso, reduced })
    }

    fn fixed_mask(&self, fixed: &[usize]) -> Result<u64, TokenError> {
        if fixed.len() >= self.k {
            return Err(TokenError::FixedSetTooLarge { size: fixed.len(), max: self.k - 1 });
        }
        mask_of(self.base.order(), fixed)
    }
}

/// H_U and its identification with the reduced token graph.
#[derive(Debug, Clone)]
pub struct InducedTokenSubgraph {
    /// Induced subgraph; vertex `i` is the token-graph vertex `ranks[i]`.
    pub graph: Graph,
    /// S_U in ascending rank order.
    pub ranks: Vec<usize>,
    /// `iso[i]` is the rank of `ranks[i] ∖ U` in `reduced`.
    pub iso: Vec<usize>,
    /// F_{k−|U|}(G − U).
    pub reduced: TokenGraph,
}

pub(crate) fn token_degree_mask(base: &Graph, mask: u64) -> usize {
    let mut degree_sum = 0;
    let mut inside = 0;
    let mut m = mask;
    while m != 0 {
        let x = m.trailing_zeros() as usize;
        degree_sum += base.degree(x);
        inside += base.neighbors(x).iter().filter(|&&y| mask >> y & 1 == 1).count();
        m &= m - 1;
    }
    // `inside` already counts each internal edge from both ends
    degree_sum - inside
}

/// Spreads the low bits of `compact` onto the listed positions.
fn deposit(compact: u64, positions: &[usize]) -> u64 {
    let mut out = 0;
    let mut m = compact;
    while m != 0 {
        out |= 1 << positions[m.trailing_zeros() as usize];
        m &= m - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn brute_force_edges(base: &Graph, k: usize) -> Vec<(usize, usize)> {
        let idx = KSubsetIndex::new(base.order(), k).unwrap();
        let mut edges = Vec::new();
        for a in 0..idx.len() {
            for b in a + 1..idx.len() {
                let diff = idx.mask(a) ^ idx.mask(b);
                if diff.count_ones() == 2 {
                    let x = diff.trailing_zeros() as usize;
                    let y = 63 - diff.leading_zeros() as usize;
                    if base.has_edge(x, y) {
                        edges.push((a, b));
                    }
                }
            }
        }
        edges
    }

    #[test]
    fn two_token_cycle_seven() {
        let c7 = Family::Cycle(7).build().unwrap();
        let t = TokenGraph::new(&c7, 2).unwrap();
        assert_eq!(t.graph().order(), 21);
        // C(5,1)·7 edges; every adjacent pair has degree 2, every other pair degree 4
        assert_eq!(t.graph().size(), 35);
        assert_eq!(t.graph().edges(), brute_force_edges(&c7, 2).as_slice());
    }

    #[test]
    fn johnson_octahedron() {
        let k4 = Family::Complete(4).build().unwrap();
        let t = TokenGraph::new(&k4, 2).unwrap();
        assert_eq!(t.graph().order(), 6);
        assert!(t.graph().degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn one_token_is_the_base() {
        let p3 = Family::Path(3).build().unwrap();
        let t = TokenGraph::new(&p3, 1).unwrap();
        assert_eq!(t.graph(), &p3);
    }

    #[test]
    fn matches_brute_force_everywhere_small() {
        for fam in [Family::Path(5), Family::Star(4), Family::Petersen, Family::Complete(5)] {
            let g = fam.build().unwrap();
            for k in 1..=g.order() {
                let t = TokenGraph::new(&g, k).unwrap();
                assert_eq!(t.graph().edges(), brute_force_edges(&g, k).as_slice(), "{fam} k={k}");
            }
        }
    }

    #[test]
    fn token_degrees() {
        let k4 = TokenGraph::new(&Family::Complete(4).build().unwrap(), 2).unwrap();
        assert_eq!(k4.token_degree(&[1, 2]).unwrap(), 4);
        let c7 = TokenGraph::new(&Family::Cycle(7).build().unwrap(), 2).unwrap();
        assert_eq!(c7.token_degree(&[1, 2]).unwrap(), 2);
        let p3 = TokenGraph::new(&Family::Path(3).build().unwrap(), 2).unwrap();
        assert_eq!(p3.token_degree(&[1, 3]).unwrap(), 2);
        assert!(p3.token_degree(&[1]).is_err());
    }

    #[test]
    fn k_and_cap_refusals() {
        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(TokenGraph::new(&p3, 0).unwrap_err(), TokenError::KOutOfRange { k: 0, n: 3 });
        assert_eq!(TokenGraph::new(&p3, 5).unwrap_err(), TokenError::KOutOfRange { k: 5, n: 3 });
        let c7 = Family::Cycle(7).build().unwrap();
        assert_eq!(TokenGraph::with_cap(&c7, 3, 20).unwrap_err(), TokenError::TooLarge { vertices: 35, cap: 20 });
    }

    #[test]
    fn subsets_containing_fixed_sets() {
        let c4 = TokenGraph::new(&Family::Cycle(4).build().unwrap(), 2).unwrap();
        let s = c4.subsets_containing(&[1]).unwrap();
        let subsets: Vec<_> = s.iter().map(|&r| c4.index().unrank(r).unwrap()).collect();
        assert_eq!(subsets, vec![vec![1, 2], vec![1, 3], vec![1, 4]]);

        let c7 = TokenGraph::new(&Family::Cycle(7).build().unwrap(), 3).unwrap();
        assert_eq!(c7.subsets_containing(&[1, 2]).unwrap().len(), 5);

        let k4 = TokenGraph::new(&Family::Complete(4).build().unwrap(), 2).unwrap();
        assert_eq!(k4.subsets_containing(&[]).unwrap(), (0..6).collect::<Vec<_>>());
        assert!(matches!(k4.subsets_containing(&[1, 2]), Err(TokenError::FixedSetTooLarge { size: 2, max: 1 })));
    }

    #[test]
    fn induced_subgraphs() {
        let c4 = TokenGraph::new(&Family::Cycle(4).build().unwrap(), 2).unwrap();
        let h = c4.induced_token_subgraph(&[1]).unwrap();
        assert_eq!(h.graph, Family::Path(3).build().unwrap());

        let k4 = TokenGraph::new(&Family::Complete(4).build().unwrap(), 2).unwrap();
        let h = k4.induced_token_subgraph(&[4]).unwrap();
        assert_eq!(h.graph, Family::Complete(3).build().unwrap());

        let c7 = TokenGraph::new(&Family::Cycle(7).build().unwrap(), 3).unwrap();
        let h = c7.induced_token_subgraph(&[1]).unwrap();
        assert_eq!(h.graph.order(), 15);
        let p6_2 = TokenGraph::new(&Family::Path(6).build().unwrap(), 2).unwrap();
        assert_eq!(h.reduced.graph(), p6_2.graph());
        // colex order survives X ↦ X∖U, so the identification is the identity
        assert!(h.iso.iter().enumerate().all(|(i, &r)| i == r));
    }
}
