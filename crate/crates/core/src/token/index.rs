//! Colexicographic ranking of k-subsets.
//!
//! Subsets of `[n]` are held as `u64` bitmasks (bit `i` is vertex `i + 1`).
//! Colex order on k-subsets coincides with the numeric order of their masks,
//! so enumeration is Gosper's next-combination step and the rank of
//! `x_1 < ... < x_k` is `Σ C(x_i - 1, i)`.

use super::TokenError;

/// Largest ground set a mask can hold.
pub const MAX_GROUND_SET: usize = 63;

/// `C(n, k)`, saturating at `usize::MAX`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Mask of a 1-based element list, validated against `n`.
pub fn mask_of(n: usize, elements: &[usize]) -> Result<u64, TokenError> {
    let mut mask = 0u64;
    for &e in elements {
        if e == 0 || e > n {
            return Err(TokenError::BadElement { element: e, n });
        }
        let bit = 1u64 << (e - 1);
        if mask & bit != 0 {
            return Err(TokenError::DuplicateElement(e));
        }
        mask |= bit;
    }
    Ok(mask)
}

/// Sorted 1-based elements of a mask.
pub fn elements_of(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Bijection between the k-subsets of `[n]` and `0..C(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSubsetIndex {
    n: usize,
    k: usize,
    masks: Vec<u64>,
    // pascal[m][j] = C(m, j) for m < n, j <= k
    pascal: Vec<Vec<usize>>,
}

impl KSubsetIndex {
    pub fn new(n: usize, k: usize) -> Result<Self, TokenError> {
        if n > MAX_GROUND_SET {
            return Err(TokenError::GroundSetTooLarge(n));
        }
        if k > n {
            return Err(TokenError::KOutOfRange { k, n });
        }
        let count = binomial(n, k);
        let mut masks = Vec::with_capacity(count);
        if k == 0 {
            masks.push(0);
        } else {
            let mut x = (1u64 << k) - 1;
            for i in 0..count {
                masks.push(x);
                if i + 1 < count {
                    x = next_combination(x);
                }
            }
        }
        let pascal = (0..n.max(1)).map(|m| (0..=k).map(|j| binomial(m, j)).collect()).collect();
        Ok(KSubsetIndex { n, k, masks, pascal })
    }

    pub fn ground(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Masks in rank order.
    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn mask(&self, rank: usize) -> u64 {
        self.masks[rank]
    }

    /// Rank of a mask known to hold exactly `k` elements of `[n]`.
    pub fn rank_mask(&self, mask: u64) -> usize {
        debug_assert_eq!(mask.count_ones() as usize, self.k);
        let mut rank = 0;
        let mut m = mask;
        let mut i = 1;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            rank += self.pascal[e][i];
            m &= m - 1;
            i += 1;
        }
        rank
    }

    /// Rank of a 1-based k-subset.
    pub fn rank(&self, subset: &[usize]) -> Result<usize, TokenError> {
        if subset.len() != self.k {
            return Err(TokenError::WrongCardinality { got: subset.len(), k: self.k });
        }
        Ok(self.rank_mask(mask_of(self.n, subset)?))
    }

    /// Sorted 1-based k-subset with the given rank.
    pub fn unrank(&self, rank: usize) -> Result<Vec<usize>, TokenError> {
        self.masks.get(rank).map(|&m| elements_of(m)).ok_or(TokenError::RankOutOfRange { rank, count: self.len() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(7, 2), 21);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(binomial(63, 31), 916312070471295267);
    }

    #[test]
    fn colex_extremes() {
        let idx = KSubsetIndex::new(4, 2).unwrap();
        assert_eq!(idx.rank(&[1, 2]).unwrap(), 0);
        assert_eq!(idx.rank(&[3, 4]).unwrap(), 5);
        assert_eq!(idx.rank(&[4, 3]).unwrap(), 5);
        let order: Vec<_> = (0..6).map(|r| idx.unrank(r).unwrap()).collect();
        assert_eq!(order, vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4], vec![3, 4]]);
    }

    #[test]
    fn round_trip_small() {
        let idx = KSubsetIndex::new(5, 3).unwrap();
        let r = idx.rank(&[1, 3, 5]).unwrap();
        assert_eq!(idx.unrank(r).unwrap(), vec![1, 3, 5]);
        for r in 0..idx.len() {
            assert_eq!(idx.rank(&idx.unrank(r).unwrap()).unwrap(), r);
        }
    }

    #[test]
    fn rank_formula_matches_definition() {
        // rank = Σ C(x_i - 1, i), 1-based positions
        let idx = KSubsetIndex::new(9, 4).unwrap();
        for r in 0..idx.len() {
            let xs = idx.unrank(r).unwrap();
            let direct: usize = xs.iter().enumerate().map(|(i, &x)| binomial(x - 1, i + 1)).sum();
            assert_eq!(direct, r);
        }
    }

    #[test]
    fn zero_and_full() {
        let empty = KSubsetIndex::new(4, 0).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty.unrank(0).unwrap(), Vec::<usize>::new());
        let full = KSubsetIndex::new(4, 4).unwrap();
        assert_eq!(full.unrank(0).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn errors() {
        let idx = KSubsetIndex::new(4, 2).unwrap();
        assert!(matches!(idx.rank(&[1]), Err(TokenError::WrongCardinality { .. })));
        assert!(matches!(idx.rank(&[1, 5]), Err(TokenError::BadElement { .. })));
        assert!(matches!(idx.rank(&[2, 2]), Err(TokenError::DuplicateElement(2))));
        assert!(matches!(idx.unrank(6), Err(TokenError::RankOutOfRange { .. })));
        assert!(KSubsetIndex::new(3, 4).is_err());
    }
}
