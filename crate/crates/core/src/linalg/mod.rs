//! Exact scalars, dense matrices and the tensor-index convention shared by
//! every other module.

mod echelon;
mod lincomb;
mod matrix;
mod scalar;
mod tensor;

pub use echelon::{rank, rref, Subspace};
pub use lincomb::{tensor, LinComb, Tensor2, Vector};
pub use matrix::Matrix;
pub use scalar::{Field, Scalar};
pub use tensor::TensorIndex;

/// `A · B`, failing on a shape mismatch.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> crate::Result<Matrix> {
    a.mul(b)
}

/// Tensor product of matrices in second-factor-major order.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec((-3i64..4, 1i64..3), rows * cols).prop_map(move |v| {
            Matrix::from_entries(rows, cols, v.into_iter().map(|(n, d)| Scalar::ratio(n, d)).collect()).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn kron_is_bifunctorial(
            (a, b, c, d) in (1usize..3, 1usize..3, 1usize..3, 1usize..3, 1usize..3, 1usize..3)
                .prop_flat_map(|(m, n, p, q, r, s)| {
                    (small_matrix(m, n), small_matrix(p, q), small_matrix(n, r), small_matrix(q, s))
                })
        ) {
            let lhs = mat_mul(&kron(&a, &b), &kron(&c, &d)).unwrap();
            let rhs = kron(&mat_mul(&a, &c).unwrap(), &mat_mul(&b, &d).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn addition_cancels(n in -50i64..50, d in 1i64..20, m in -50i64..50, e in 1i64..20) {
            let a = Scalar::ratio(n, d);
            let b = Scalar::ratio(m, e);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn scaled_fractions_are_equal(p in -100i64..100, q in 1i64..100) {
            prop_assert_eq!(Scalar::ratio(p, q), Scalar::ratio(2 * p, 2 * q));
        }
    }
}
