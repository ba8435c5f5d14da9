/// Real symmetric matrix, lower triangle packed row by row.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    packed: Vec<f64>,
}

#[inline]
fn slot(i: usize, j: usize) -> usize {
    let (i, j) = if i >= j { (i, j) } else { (j, i) };
    i * (i + 1) / 2 + j
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix { order, packed: vec![0.0; order * (order + 1) / 2] }
    }

    /// Builds from `f(i, j)` evaluated on `i >= j`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in 0..=i {
                m.packed[slot(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.packed[slot(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.packed[slot(i, j)] = value;
    }

    pub fn add(&mut self, i: usize, j: usize, value: f64) {
        self.packed[slot(i, j)] += value;
    }

    /// Full row-major copy.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.order;
        let mut dense = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let v = self.packed[slot(i, j)];
                dense[i * n + j] = v;
                dense[j * n + i] = v;
            }
        }
        dense
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.order);
        let mut y = vec![0.0; self.order];
        for i in 0..self.order {
            let row = &self.packed[slot(i, 0)..=slot(i, i)];
            for (j, &a) in row.iter().enumerate() {
                y[i] += a * x[j];
                if j != i {
                    y[j] += a * x[i];
                }
            }
        }
        y
    }

    /// `xᵀ M x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        self.mul_vec(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.order {
            for j in 0..=i {
                let v = self.packed[slot(i, j)];
                sum += if i == j { v * v } else { 2.0 * v * v };
            }
        }
        sum.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_access_is_symmetric() {
        let m = SymMatrix::from_fn(4, |i, j| (10 * i + j) as f64);
        assert_eq!(m.get(3, 1), 31.0);
        assert_eq!(m.get(1, 3), 31.0);
        let d = m.to_dense();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d[i * 4 + j], d[j * 4 + i]);
            }
        }
    }

    #[test]
    fn mul_vec_matches_dense() {
        let m = SymMatrix::from_fn(5, |i, j| ((i * 7 + j * 3) % 5) as f64 - 2.0);
        let d = m.to_dense();
        let x: Vec<f64> = (0..5).map(|i| i as f64 * 0.5 - 1.0).collect();
        let y = m.mul_vec(&x);
        for i in 0..5 {
            let expect: f64 = (0..5).map(|j| d[i * 5 + j] * x[j]).sum();
            assert!((y[i] - expect).abs() < 1e-12);
        }
    }
}
