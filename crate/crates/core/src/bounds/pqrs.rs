//! The four Rayleigh components of a vector on F_k(G), computed from G and
//! subset masks alone (the token graph is never consulted):
//!
//! ```text
//! P_k(v) = Σ_X v(X)² Σ_{x∈X} d_x
//! Q_k(v) = Σ_X v(X)² Σ_{x,y∈X} a_xy          (ordered pairs)
//! R_k(v) = Σ_X Σ_{x∈X} Σ_{y∉X} a_xy v(X) v(X − x + y)
//! S_k(v) = Σ_X v(X)²
//! ```
//!
//! so that `vᵀ L_k v / vᵀ v = (P − Q − R) / S`.

use crate::graph::Graph;
use crate::token::{KSubsetIndex, TokenError};

use super::BoundsError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pqrs {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub s: f64,
}

impl Pqrs {
    pub fn rayleigh(&self) -> f64 {
        (self.p - self.q - self.r) / self.s
    }
}

/// Reusable evaluator for one `(G, k)`.
#[derive(Debug, Clone)]
pub struct PqrsEvaluator<'g> {
    graph: &'g Graph,
    index: KSubsetIndex,
    degree_sum: Vec<f64>,
    inside: Vec<f64>,
}

impl<'g> PqrsEvaluator<'g> {
    pub fn new(graph: &'g Graph, k: usize) -> Result<Self, BoundsError> {
        let n = graph.order();
        if k > n {
            return Err(TokenError::KOutOfRange { k, n }.into());
        }
        let index = KSubsetIndex::new(n, k)?;
        let mut degree_sum = Vec::with_capacity(index.len());
        let mut inside = Vec::with_capacity(index.len());
        for &mask in index.masks() {
            let mut d = 0;
            let mut a = 0;
            for x in bits(mask) {
                d += graph.degree(x);
                a += graph.neighbors(x).iter().filter(|&&y| mask >> y & 1 == 1).count();
            }
            degree_sum.push(d as f64);
            inside.push(a as f64);
        }
        Ok(PqrsEvaluator { graph, index, degree_sum, inside })
    }

    pub fn k(&self) -> usize {
        self.index.k()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn index(&self) -> &KSubsetIndex {
        &self.index
    }

    /// P, Q, R, S without rejecting the zero vector.
    fn components(&self, v: &[f64]) -> Pqrs {
        let (mut p, mut q, mut r, mut s) = (0.0, 0.0, 0.0, 0.0);
        for (rank, &mask) in self.index.masks().iter().enumerate() {
            let vx = v[rank];
            if vx == 0.0 {
                continue;
            }
            let sq = vx * vx;
            p += sq * self.degree_sum[rank];
            q += sq * self.inside[rank];
            s += sq;
            for x in bits(mask) {
                for &y in self.graph.neighbors(x) {
                    if mask >> y & 1 == 0 {
                        let moved = mask ^ (1 << x) ^ (1 << y);
                        r += vx * v[self.index.rank_mask(moved)];
                    }
                }
            }
        }
        Pqrs { p, q, r, s }
    }

    pub fn eval(&self, v: &[f64]) -> Result<Pqrs, BoundsError> {
        if v.len() != self.len() {
            return Err(BoundsError::LengthMismatch { got: v.len(), expected: self.len() });
        }
        let out = self.components(v);
        if out.s == 0.0 {
            return Err(BoundsError::ZeroVector);
        }
        Ok(out)
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// P/Q/R/S of `v` on F_k(G).
pub fn pqrs(g: &Graph, k: usize, v: &[f64]) -> Result<Pqrs, BoundsError> {
    PqrsEvaluator::new(g, k)?.eval(v)
}

/// v_z*: indexed by (k−1)-subsets Z, equal to v(Z ∪ {z}) when z ∉ Z and 0
/// otherwise. `z` is 0-based.
pub fn vz_star(upper: &KSubsetIndex, lower: &KSubsetIndex, v: &[f64], z: usize) -> Vec<f64> {
    let bit = 1u64 << z;
    lower.masks().iter().map(|&m| if m & bit != 0 { 0.0 } else { v[upper.rank_mask(m | bit)] }).collect()
}

/// `k · min{k − 1, Δ(G)}`, the coefficient bounding Q_k by S_k.
pub fn qs_bound_factor(g: &Graph, k: usize) -> f64 {
    (k * (k.saturating_sub(1)).min(g.max_degree())) as f64
}

/// Both sides of each recursion identity for one vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecursionResiduals {
    /// `(P_k(v), Σ_z P_{k−1}(v_z*) / (k−1))`
    pub p: (f64, f64),
    /// `(Q_k(v), Σ_z Q_{k−1}(v_z*) / (k−2))`, only for k > 2.
    pub q: Option<(f64, f64)>,
    /// `(R_k(v), Σ_z R_{k−1}(v_z*) / (k−1))`
    pub r: (f64, f64),
    /// `(S_k(v), Σ_z S_{k−1}(v_z*) / k)`
    pub s: (f64, f64),
    /// `(λ(v), the same quotient rebuilt from the v_z* sums)`.
    pub split: (f64, f64),
}

impl RecursionResiduals {
    /// Evaluates every identity relating level `k` to level `k − 1`.
    pub fn compute(upper: &PqrsEvaluator<'_>, lower: &PqrsEvaluator<'_>, v: &[f64]) -> Result<Self, BoundsError> {
        let k = upper.k();
        if k < 2 {
            return Err(BoundsError::NeedsTwoTokens(k));
        }
        debug_assert_eq!(lower.k(), k - 1);
        let top = upper.eval(v)?;
        let n = upper.index.ground();
        let mut sum = Pqrs { p: 0.0, q: 0.0, r: 0.0, s: 0.0 };
        for z in 0..n {
            let star = vz_star(&upper.index, &lower.index, v, z);
            let c = lower.components(&star);
            sum.p += c.p;
            sum.q += c.q;
            sum.r += c.r;
            sum.s += c.s;
        }
        let kf = k as f64;
        let q = (k > 2).then(|| (top.q, sum.q / (kf - 2.0)));
        let split = if k > 2 {
            kf / (kf - 1.0) * ((sum.p - sum.q - sum.r) - sum.q / (kf - 2.0)) / sum.s
        } else {
            2.0 * (sum.p - sum.r) / sum.s - top.q / top.s
        };
        Ok(RecursionResiduals {
            p: (top.p, sum.p / (kf - 1.0)),
            q,
            r: (top.r, sum.r / (kf - 1.0)),
            s: (top.s, sum.s / kf),
            split: (top.rayleigh(), split),
        })
    }
}
