use serde::{Deserialize, Serialize};

use super::YdModule;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Tensor2, Vector};
use crate::report::Witnesses;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YdReport {
    pub ok_eq2: bool,
    pub ok_eq3: bool,
    /// `(basis element, Hopf basis element)` pairs where the compatibility
    /// `(xh₍₂₎)₍₀₎ ⊗ h₍₁₎(xh₍₂₎)₍₁₎ = x₍₀₎h₍₁₎ ⊗ x₍₁₎h₍₂₎` fails.
    pub eq2_witnesses: Witnesses<(usize, usize)>,
    /// Pairs where `(xh)₍₀₎ ⊗ (xh)₍₁₎ = x₍₀₎h₍₂₎ ⊗ S(h₍₁₎)x₍₁₎h₍₃₎` fails.
    pub eq3_witnesses: Witnesses<(usize, usize)>,
}

impl YdReport {
    pub fn ok(&self) -> bool {
        self.ok_eq2 && self.ok_eq3
    }
}

/// Checks both forms of the Yetter-Drinfel'd compatibility on every pair of
/// a basis element of `M` and a generator of `H`. The condition is
/// multiplicative in `h`, so generators suffice.
pub fn check_yd(m: &YdModule) -> Result<YdReport> {
    let hopf = m.hopf();
    let mut eq2_witnesses = Witnesses::default();
    let mut eq3_witnesses = Witnesses::default();
    for x in 0..m.dim() {
        let ex = Vector::basis(x);
        let dx = m.coact(&ex);
        for h in hopf.generators() {
            let dh = hopf.coproduct_basis(h);

            let mut lhs = Tensor2::zero();
            for ((h1, h2), c) in dh.iter() {
                let y = m.act_basis(&ex, *h2);
                for ((y0, k), b) in m.coact(&y).iter() {
                    let t = hopf.mul_basis(*h1, *k)?;
                    for (j, a) in t.iter() {
                        lhs.add_term((*y0, *j), &(c * b) * a);
                    }
                }
            }
            let mut rhs = Tensor2::zero();
            for ((x0, k), b) in dx.iter() {
                for ((h1, h2), c) in dh.iter() {
                    let left = m.act_basis(&Vector::basis(*x0), *h1);
                    let right = hopf.mul_basis(*k, *h2)?;
                    rhs.add_scaled(&crate::linalg::tensor(&left, &right), &(b * c));
                }
            }
            if lhs != rhs {
                eq2_witnesses.push((x, h));
            }

            let lhs3 = m.coact(&m.act_basis(&ex, h));
            let mut rhs3 = Tensor2::zero();
            for ((h1, h2, h3), c) in hopf.coproduct2_basis(h).iter() {
                for ((x0, k), b) in dx.iter() {
                    let left = m.act_basis(&Vector::basis(*x0), *h2);
                    let right = hopf.mul(
                        &hopf.mul(&hopf.antipode_basis(*h1), &Vector::basis(*k))?,
                        &Vector::basis(*h3),
                    )?;
                    rhs3.add_scaled(&crate::linalg::tensor(&left, &right), &(b * c));
                }
            }
            if lhs3 != rhs3 {
                eq3_witnesses.push((x, h));
            }
        }
    }
    Ok(YdReport {
        ok_eq2: eq2_witnesses.is_empty(),
        ok_eq3: eq3_witnesses.is_empty(),
        eq2_witnesses,
        eq3_witnesses,
    })
}

/// The matrix of a map `M ⊗ M → M ⊗ M` with basis `e_i ⊗ e_j` at index
/// `i + n·j` (second-factor-major).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidingMatrix {
    pub factor_basis: Vec<String>,
    pub matrix: Matrix,
}

pub const BASIS_ORDER: &str = "second-factor-major";

#[derive(Serialize, Deserialize)]
struct BraidingJson {
    basis_order: String,
    factor_basis: Vec<String>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Scalar>>,
}

impl Serialize for BraidingMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m = &self.matrix;
        BraidingJson {
            basis_order: BASIS_ORDER.into(),
            factor_basis: self.factor_basis.clone(),
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows()).map(|i| m.row(i).to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BraidingMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = BraidingJson::deserialize(d)?;
        if j.basis_order != BASIS_ORDER {
            return Err(D::Error::custom(format!("unsupported basis order {:?}", j.basis_order)));
        }
        if j.entries.len() != j.rows || j.entries.iter().any(|r| r.len() != j.cols) {
            return Err(D::Error::custom("entries do not match rows/cols"));
        }
        let matrix = Matrix::from_rows(j.entries).map_err(D::Error::custom)?;
        let n = j.factor_basis.len();
        if matrix.rows() != n * n || matrix.cols() != n * n {
            return Err(D::Error::custom("matrix size is not (dim M)² × (dim M)²"));
        }
        Ok(BraidingMatrix {
            factor_basis: j.factor_basis,
            matrix,
        })
    }
}

impl BraidingMatrix {
    pub fn from_matrix(matrix: Matrix) -> Result<Self> {
        let n = factor_dim(&matrix)?;
        Ok(BraidingMatrix {
            factor_basis: (0..n).map(|i| format!("e{}", i + 1)).collect(),
            matrix,
        })
    }

    pub fn factor_dim(&self) -> usize {
        self.factor_basis.len()
    }

    /// The flip `x ⊗ y ↦ y ⊗ x` on `k^n ⊗ k^n`.
    pub fn flip(n: usize) -> Self {
        let mut matrix = Matrix::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                matrix[(j + n * i, i + n * j)] = Scalar::one();
            }
        }
        BraidingMatrix {
            factor_basis: (0..n).map(|i| format!("e{}", i + 1)).collect(),
            matrix,
        }
    }

    /// `τ(u ⊗ v)` written as a combination of pairs `(a, b)` for `e_a ⊗ e_b`.
    pub fn apply(&self, u: &Vector, v: &Vector) -> Tensor2 {
        let n = self.factor_dim();
        let mut out = Tensor2::zero();
        for ((i, j), c) in crate::linalg::tensor(u, v).iter() {
            let col = i + n * j;
            for r in 0..n * n {
                let e = &self.matrix[(r, col)];
                if !e.is_zero() {
                    out.add_term((r % n, r / n), c * e);
                }
            }
        }
        out
    }
}

fn factor_dim(t: &Matrix) -> Result<usize> {
    if !t.is_square() {
        return Err(Error::Shape(format!(
            "braiding must be square, got {}x{}",
            t.rows(),
            t.cols()
        )));
    }
    let n = (t.rows() as f64).sqrt().round() as usize;
    if n * n != t.rows() {
        return Err(Error::Shape(format!("size {} is not a perfect square", t.rows())));
    }
    Ok(n)
}

/// `τ(x ⊗ y) = y₍₀₎ ⊗ x y₍₁₎`.
pub fn braiding(m: &YdModule) -> BraidingMatrix {
    let n = m.dim();
    let mut matrix = Matrix::zeros(n * n, n * n);
    for j in 0..n {
        let dy = m.coact(&Vector::basis(j));
        for i in 0..n {
            let col = i + n * j;
            for ((j0, h), c) in dy.iter() {
                for (k, a) in m.act_basis(&Vector::basis(i), *h).iter() {
                    let e = &mut matrix[(j0 + n * k, col)];
                    *e = &*e + &(c * a);
                }
            }
        }
    }
    BraidingMatrix {
        factor_basis: m.labels().to_vec(),
        matrix,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YbeReport {
    pub ok: bool,
    /// `(T⊗1)(1⊗T)(T⊗1) − (1⊗T)(T⊗1)(1⊗T)` when nonzero and `dim M ≤ DENSE_YBE_LIMIT`.
    pub defect: Option<Matrix>,
    /// Basis triples `(a, b, c)` whose images differ.
    pub witnesses: Witnesses<(usize, usize, usize)>,
}

/// Largest factor dimension for which the braid relation is checked with
/// dense Kronecker products.
pub const DENSE_YBE_LIMIT: usize = 9;

/// Braid relation on `M^{⊗3}`.
pub fn check_ybe(t: &Matrix) -> Result<YbeReport> {
    let n = factor_dim(t)?;
    if n <= DENSE_YBE_LIMIT {
        let id = Matrix::identity(n);
        let t1 = t.kron(&id);
        let t2 = id.kron(t);
        let lhs = t1.mul(&t2)?.mul(&t1)?;
        let rhs = t2.mul(&t1)?.mul(&t2)?;
        let defect = lhs.sub(&rhs)?;
        let mut witnesses = Witnesses::default();
        for col in 0..n * n * n {
            if (0..n * n * n).any(|row| !defect[(row, col)].is_zero()) {
                witnesses.push((col % n, (col / n) % n, col / (n * n)));
            }
        }
        let ok = witnesses.is_empty();
        return Ok(YbeReport {
            ok,
            defect: (!ok).then_some(defect),
            witnesses,
        });
    }
    Ok(sparse_ybe(t, n))
}

/// Column-by-column evaluation of both sides on basis triples.
fn sparse_ybe(t: &Matrix, n: usize) -> YbeReport {
    let cols: Vec<Vector> = (0..n * n).map(|j| Vector::from_dense(&t.column(j))).collect();
    let first = |v: &Vector| v.map_linear(|&i| cols[i % (n * n)].map_keys(|&p| p + n * n * (i / (n * n))));
    let second = |v: &Vector| v.map_linear(|&i| cols[i / n].map_keys(|&p| i % n + n * p));
    let mut witnesses = Witnesses::default();
    for idx in 0..n * n * n {
        let e = Vector::basis(idx);
        if first(&second(&first(&e))) != second(&first(&second(&e))) {
            witnesses.push((idx % n, (idx / n) % n, idx / (n * n)));
        }
    }
    YbeReport {
        ok: witnesses.is_empty(),
        defect: None,
        witnesses,
    }
}

pub fn is_involutive(t: &Matrix) -> Result<bool> {
    if !t.is_square() {
        return Err(Error::Shape(format!("{}x{} is not square", t.rows(), t.cols())));
    }
    Ok(t.mul(t)?.is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scrambled(n: usize) -> Matrix {
        // flip with one extra entry, which breaks the braid relation
        let mut t = BraidingMatrix::flip(n).matrix;
        t[(0, 1)] = Scalar::from_i64(2);
        t
    }

    #[test]
    fn dense_and_sparse_agree() {
        for n in 1..=4 {
            for t in [
                BraidingMatrix::flip(n).matrix,
                Matrix::identity(n * n),
                scrambled(n.max(2)),
            ] {
                let dense = check_ybe(&t).unwrap();
                let sparse = sparse_ybe(&t, factor_dim(&t).unwrap());
                assert_eq!(dense.ok, sparse.ok);
                assert_eq!(dense.witnesses, sparse.witnesses);
            }
        }
        assert!(!check_ybe(&scrambled(2)).unwrap().ok);
    }

    #[test]
    fn large_flip_uses_sparse_path() {
        let r = check_ybe(&BraidingMatrix::flip(DENSE_YBE_LIMIT + 2).matrix).unwrap();
        assert!(r.ok && r.defect.is_none());
    }

    #[test]
    fn non_square_sizes_are_rejected() {
        assert!(check_ybe(&Matrix::identity(3)).is_err());
        assert!(is_involutive(&Matrix::zeros(2, 3)).is_err());
    }
}
