//! Moving eigenvectors between token levels.
//!
//! The (n,k)-binomial matrix B has rows indexed by k-subsets and columns by
//! vertices, with `B[X][x] = 1` iff `x ∈ X`. `Bᵀ` carries eigenvectors of
//! F_k(G) to eigenvectors of G (or to zero), which is what lets the spectrum
//! of F_k(G) be split into eigenvalues inherited from G and new ones.
//!
//! [`BinomialMatrix::inclusion`] generalizes B to columns indexed by
//! j-subsets; with `j = k − 1` it separates what F_k(G) inherits from
//! F_{k−1}(G).

use thiserror::Error;

use crate::spectra::{eigen_sym, laplacian_spectrum, norm, EigenError, Spectrum, SymMatrix};
use crate::token::{binomial, KSubsetIndex, TokenError, TokenGraph};

/// Default absolute tolerance when pairing eigenvalues.
pub const MATCH_TOL: f64 = 1e-7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LiftError {
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("smaller spectrum has {small} values but the larger only {large}")]
    SizeOrder { small: usize, large: usize },
    #[error("column level j = {j} exceeds row level k = {k}")]
    LevelOrder { j: usize, k: usize },
    #[error(
        "spectral inclusion failed: eigenvalue {value} (index {index}) has no partner; \
         this contradicts the inclusion of token-graph spectra"
    )]
    InclusionFailed { index: usize, value: f64 },
    #[error(transparent)]
    Token(#[from] TokenError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
}

/// Implicit 0/1 inclusion matrix between k-subsets (rows) and j-subsets
/// (columns) of `[n]`. Never materialized.
#[derive(Debug, Clone)]
pub struct BinomialMatrix {
    rows: KSubsetIndex,
    cols: KSubsetIndex,
    // j-subsets of a k-set, as masks over positions 0..k
    inner: KSubsetIndex,
}

impl BinomialMatrix {
    /// The (n,k)-binomial matrix B (columns are single vertices).
    pub fn new(n: usize, k: usize) -> Result<Self, LiftError> {
        Self::inclusion(n, k, 1)
    }

    pub fn inclusion(n: usize, k: usize, j: usize) -> Result<Self, LiftError> {
        if j > k {
            return Err(LiftError::LevelOrder { j, k });
        }
        Ok(BinomialMatrix {
            rows: KSubsetIndex::new(n, k)?,
            cols: KSubsetIndex::new(n, j)?,
            inner: KSubsetIndex::new(k, j)?,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    /// Number of ones in each column: C(n − j, k − j).
    pub fn column_count(&self) -> usize {
        binomial(self.rows.ground() - self.cols.k(), self.rows.k() - self.cols.k())
    }

    fn for_each_entry(&self, mut f: impl FnMut(usize, usize)) {
        let mut positions = Vec::with_capacity(self.rows.k());
        for (r, &x) in self.rows.masks().iter().enumerate() {
            positions.clear();
            let mut m = x;
            while m != 0 {
                positions.push(m.trailing_zeros() as usize);
                m &= m - 1;
            }
            for &sub in self.inner.masks() {
                let mut u = 0u64;
                let mut s = sub;
                while s != 0 {
                    u |= 1 << positions[s.trailing_zeros() as usize];
                    s &= s - 1;
                }
                f(r, self.cols.rank_mask(u));
            }
        }
    }

    /// `Bᵀv`: entry U is `Σ_{X ⊇ U} v(X)`.
    pub fn project(&self, v: &[f64]) -> Result<Vec<f64>, LiftError> {
        if v.len() != self.rows() {
            return Err(LiftError::LengthMismatch { got: v.len(), expected: self.rows() });
        }
        let mut out = vec![0.0; self.cols()];
        self.for_each_entry(|r, c| out[c] += v[r]);
        Ok(out)
    }

    /// `Bu`: entry X is `Σ_{U ⊆ X} u(U)`.
    pub fn lift(&self, u: &[f64]) -> Result<Vec<f64>, LiftError> {
        if u.len() != self.cols() {
            return Err(LiftError::LengthMismatch { got: u.len(), expected: self.cols() });
        }
        let mut out = vec![0.0; self.rows()];
        self.for_each_entry(|r, c| out[r] += u[c]);
        Ok(out)
    }
}

/// w_U = v restricted to S_U, in S_U order (which is also the vertex order of
/// the reduced token graph H_U is identified with).
pub fn restrict(v: &[f64], ranks: &[usize]) -> Vec<f64> {
    ranks.iter().map(|&r| v[r]).collect()
}

/// Outcome of pairing a smaller spectrum into a larger one.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralMatch {
    /// `(index in small, index in large)`, increasing in both.
    pub pairs: Vec<(usize, usize)>,
    pub max_gap: f64,
    /// Unpaired indices of the larger spectrum.
    pub unmatched: Vec<usize>,
    /// First small eigenvalue that found no partner, if any.
    pub failed_at: Option<(usize, f64)>,
}

impl SpectralMatch {
    pub fn is_success(&self) -> bool {
        self.failed_at.is_none()
    }
}

/// Greedy two-pointer multiset matching of ascending lists within `tol`.
pub fn spectral_inclusion_check(small: &[f64], large: &[f64], tol: f64) -> Result<SpectralMatch, LiftError> {
    if small.len() > large.len() {
        return Err(LiftError::SizeOrder { small: small.len(), large: large.len() });
    }
    let mut pairs = Vec::with_capacity(small.len());
    let mut unmatched = Vec::with_capacity(large.len() - small.len());
    let mut max_gap: f64 = 0.0;
    let mut failed_at = None;
    let (mut i, mut j) = (0, 0);
    while i < small.len() {
        if j == large.len() || large[j] > small[i] + tol {
            failed_at = Some((i, small[i]));
            break;
        }
        let gap = (large[j] - small[i]).abs();
        if gap <= tol {
            pairs.push((i, j));
            max_gap = max_gap.max(gap);
            i += 1;
        } else {
            unmatched.push(j);
        }
        j += 1;
    }
    unmatched.extend(j..large.len());
    Ok(SpectralMatch { pairs, max_gap, unmatched, failed_at })
}

/// A new eigenvalue with a representative eigenvector annihilated by the
/// projection it was classified against.
#[derive(Debug, Clone)]
pub struct NewEigenvalue {
    /// Position in the larger spectrum.
    pub index: usize,
    pub value: f64,
    /// Unit eigenvector.
    pub vector: Vec<f64>,
    /// ‖Pᵀ v‖₂ for the projection used.
    pub projection_norm: f64,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub matching: SpectralMatch,
    /// Indices of the larger spectrum paired with the smaller one.
    pub inherited: Vec<usize>,
    pub new: Vec<NewEigenvalue>,
}

impl Classification {
    pub fn new_values(&self) -> Vec<f64> {
        self.new.iter().map(|e| e.value).collect()
    }
}

/// Splits `large` into eigenvalues paired with `small` and new ones.
///
/// Within each cluster of (numerically) equal eigenvalues of `large`, the new
/// representatives span the part of the eigenspace annihilated by
/// `projector`ᵀ, i.e. the orthogonal complement of everything lifted from the
/// smaller level. Eigensolvers return arbitrary bases for repeated
/// eigenvalues, so this is recomputed rather than read off the basis.
pub fn classify_against(
    large: &Spectrum,
    small: &Spectrum,
    projector: &BinomialMatrix,
    tol: f64,
) -> Result<Classification, LiftError> {
    if projector.rows() != large.len() {
        return Err(LiftError::LengthMismatch { got: large.len(), expected: projector.rows() });
    }
    let matching = spectral_inclusion_check(small.values(), large.values(), tol)?;
    if let Some((index, value)) = matching.failed_at {
        return Err(LiftError::InclusionFailed { index, value });
    }
    let inherited = matching.pairs.iter().map(|&(_, j)| j).collect();

    let values = large.values();
    let mut new = Vec::with_capacity(matching.unmatched.len());
    let mut start = 0;
    while start < values.len() {
        let mut end = start + 1;
        while end < values.len() && values[end] - values[end - 1] <= tol {
            end += 1;
        }
        let fresh: Vec<usize> = matching.unmatched.iter().copied().filter(|&j| j >= start && j < end).collect();
        if !fresh.is_empty() {
            let basis: Vec<&[f64]> = (start..end).map(|i| large.vector(i)).collect();
            let images = basis.iter().map(|v| projector.project(v)).collect::<Result<Vec<_>, _>>()?;
            let m = basis.len();
            let gram = SymMatrix::from_fn(m, |a, b| dot(&images[a], &images[b]));
            let directions = eigen_sym(&gram)?;
            for (slot, &index) in fresh.iter().enumerate() {
                let coeffs = directions.vector(slot);
                let mut vector = vec![0.0; large.len()];
                for (c, v) in coeffs.iter().zip(&basis) {
                    for (acc, x) in vector.iter_mut().zip(v.iter()) {
                        *acc += c * x;
                    }
                }
                let len = norm(&vector);
                vector.iter_mut().for_each(|x| *x /= len);
                let projection_norm = norm(&projector.project(&vector)?);
                new.push(NewEigenvalue { index, value: values[index], vector, projection_norm });
            }
        }
        start = end;
    }
    Ok(Classification { matching, inherited, new })
}

/// Classifies spec(F_k(G)) against spec(G), computing both spectra.
pub fn classify_eigenvalues(t: &TokenGraph, tol: f64) -> Result<Classification, LiftError> {
    let base = laplacian_spectrum(t.base())?;
    let token = laplacian_spectrum(t.graph())?;
    let projector = BinomialMatrix::new(t.base().order(), t.k())?;
    classify_against(&token, &base, &projector, tol)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
