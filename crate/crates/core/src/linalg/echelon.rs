//! Gaussian elimination over exact scalars: spans, membership, kernels.

use super::{Matrix, Scalar};

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows are removed.
pub fn rref(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// A subspace of `k^n`, stored as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut rows: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        debug_assert!(rows.iter().all(|r| r.len() == ambient));
        let pivots = rref(&mut rows, ambient);
        Subspace {
            ambient,
            basis: rows,
            pivots,
        }
    }

    /// `{ v : A v = 0 }`.
    pub fn kernel(a: &Matrix) -> Self {
        let n = a.cols();
        let mut rows: Vec<Vec<Scalar>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
        let pivots = rref(&mut rows, n);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let vectors = free.iter().map(|&f| {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        });
        Subspace::span(n, vectors.collect::<Vec<_>>())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the echelon basis; zero iff `v` lies in
    /// the subspace. The remainder is supported off the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, y) in out.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn extend(&self, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Subspace {
        Subspace::span(
            self.ambient,
            self.basis.iter().cloned().chain(vectors).collect::<Vec<_>>(),
        )
    }
}

pub fn rank(a: &Matrix) -> usize {
    Subspace::span(a.cols(), (0..a.rows()).map(|i| a.row(i).to_vec()).collect::<Vec<_>>()).dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_i64(x)).collect()
    }

    #[test]
    fn span_and_membership() {
        let s = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[2, 2, 0]), v(&[0, 1, 1])]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[1, 2, 1])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        let c = s.coordinates(&v(&[1, 2, 1])).unwrap();
        let rebuilt: Vec<Scalar> = (0..3)
            .map(|k| &(&c[0] * &s.basis()[0][k]) + &(&c[1] * &s.basis()[1][k]))
            .collect();
        assert_eq!(rebuilt, v(&[1, 2, 1]));
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = Matrix::from_i64_rows(&[&[1, 2, 3]]).unwrap();
        let k = Subspace::kernel(&a);
        assert_eq!(k.dim(), 2);
        for b in k.basis() {
            let dot = (0..3).fold(Scalar::zero(), |acc, i| &acc + &(&a[(0, i)] * &b[i]));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn rank_over_prime_field() {
        // singular mod 3, regular over Q
        let a = Matrix::from_rows(vec![
            vec![Scalar::residue(1, 3), Scalar::residue(1, 3)],
            vec![Scalar::residue(1, 3), Scalar::residue(4, 3)],
        ])
        .unwrap();
        assert_eq!(rank(&a), 1);
        assert_eq!(rank(&Matrix::from_i64_rows(&[&[1, 1], &[1, 4]]).unwrap()), 2);
    }
}
