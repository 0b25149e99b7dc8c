/// Flattening of multi-indices into a tensor product basis.
///
/// The first factor varies fastest: for two factors of dimensions `m, n` the
/// basis vector `e_i ⊗ e_j` (0-based) sits at `i + m·j`, i.e. `m(j−1) + i` in
/// 1-based terms. Every tensor product in the crate uses this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorIndex {
    dims: Vec<usize>,
}

impl TensorIndex {
    pub fn new(dims: Vec<usize>) -> Self {
        TensorIndex { dims }
    }

    /// `n` copies of a space of dimension `dim`.
    pub fn power(dim: usize, n: usize) -> Self {
        TensorIndex { dims: vec![dim; n] }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flatten(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.dims.len());
        let mut flat = 0;
        let mut stride = 1;
        for (&i, &d) in index.iter().zip(&self.dims) {
            debug_assert!(i < d, "index {i} out of range for factor of dimension {d}");
            flat += i * stride;
            stride *= d;
        }
        flat
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        self.dims
            .iter()
            .map(|&d| {
                let i = flat % d;
                flat /= d;
                i
            })
            .collect()
    }

    /// 1-based pair flattening `m(j−1) + i` for the two-factor case.
    pub fn flatten_pair_one_based(m: usize, i: usize, j: usize) -> usize {
        m * (j - 1) + i
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pair_convention() {
        let t = TensorIndex::new(vec![4, 4]);
        // e_x ⊗ e_x with x the second basis vector
        assert_eq!(t.flatten(&[1, 1]), 5);
        assert_eq!(TensorIndex::flatten_pair_one_based(4, 2, 2), 6);
        assert_eq!(t.flatten(&[0, 3]) + 1, TensorIndex::flatten_pair_one_based(4, 1, 4));
    }

    proptest! {
        #[test]
        fn unflatten_inverts_flatten(dims in prop::collection::vec(1usize..6, 1..5), seed in any::<u64>()) {
            let t = TensorIndex::new(dims.clone());
            let index: Vec<usize> = dims.iter().enumerate()
                .map(|(k, &d)| ((seed >> (k * 8)) as usize) % d)
                .collect();
            let flat = t.flatten(&index);
            prop_assert!(flat < t.size());
            prop_assert_eq!(t.unflatten(flat), index);
        }
    }
}
