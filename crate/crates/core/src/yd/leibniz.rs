use serde::{Deserialize, Serialize};

use super::{braiding, check_yd, BraidingMatrix, YdModule};
use crate::error::{Error, Result};
use crate::group_hopf::HElem;
use crate::linalg::{tensor, Matrix, Tensor2, Vector};
use crate::report::Witnesses;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QReport {
    /// `h₍₁₎ q(xh₍₂₎) = q(x)h` on basis elements and generators.
    pub equivariance: bool,
    /// `q(x)₍₁₎ ⊗ q(x)₍₂₎ = 1 ⊗ q(x) + q(x₍₀₎) ⊗ x₍₁₎` on basis elements.
    pub coderivation_condition: bool,
    /// `q(xh) = S(h₍₁₎) q(x) h₍₂₎`: linearity for the adjoint action.
    pub adjoint_linear: bool,
    /// `Δ̃(q(x)) = q(x₍₀₎) ⊗ x₍₁₎`: colinearity into `ker ε`.
    pub colinear: bool,
    pub equivariance_witnesses: Witnesses<(usize, usize)>,
    pub coderivation_witnesses: Witnesses<usize>,
}

impl QReport {
    pub fn ok(&self) -> bool {
        self.equivariance && self.coderivation_condition
    }
}

fn require_q_shape(m: &YdModule, q: &[HElem]) -> Result<()> {
    if q.len() != m.dim() {
        return Err(Error::Validation(format!(
            "q has {} values, expected {}",
            q.len(),
            m.dim()
        )));
    }
    if q.iter().any(|v| v.keys().any(|&h| h >= m.hopf().dim())) {
        return Err(Error::Validation("q value out of range".into()));
    }
    if let Some(i) = (0..q.len()).find(|&i| !m.hopf().counit(&q[i]).is_zero()) {
        return Err(Error::Validation(format!("q({}) is not in ker ε", m.labels()[i])));
    }
    Ok(())
}

fn q_of(q: &[HElem], v: &Vector) -> HElem {
    v.map_linear(|&i| q[i].clone())
}

/// The two conditions on `q: M → H` under which `x ◁ y = x q(y)` is a
/// braided Leibniz bracket, together with their adjoint-linear and
/// `Δ̃`-colinear phrasings.
pub fn check_q_conditions(m: &YdModule, q: &[HElem]) -> Result<QReport> {
    require_q_shape(m, q)?;
    let hopf = m.hopf();
    let mut equivariance_witnesses = Witnesses::default();
    let mut adjoint_ok = true;
    let mut coderivation_witnesses = Witnesses::default();
    let mut colinear_ok = true;
    for x in 0..m.dim() {
        let ex = Vector::basis(x);
        for h in hopf.generators() {
            let dh = hopf.coproduct_basis(h);
            let mut lhs = HElem::zero();
            for ((h1, h2), c) in dh.iter() {
                let t = hopf.mul(&HElem::basis(*h1), &q_of(q, &m.act_basis(&ex, *h2)))?;
                lhs.add_scaled(&t, c);
            }
            if lhs != hopf.mul(&q[x], &HElem::basis(h))? {
                equivariance_witnesses.push((x, h));
            }
            if q_of(q, &m.act_basis(&ex, h)) != hopf.adjoint(&q[x], &HElem::basis(h))? {
                adjoint_ok = false;
            }
        }
        let mut rhs = Tensor2::zero();
        for ((x0, k), c) in m.coact(&ex).iter() {
            rhs.add_scaled(&tensor(&q[*x0], &HElem::basis(*k)), c);
        }
        let reduced = hopf.reduced_coproduct(&q[x]);
        let full = &rhs + &tensor(&hopf.one(), &q[x]);
        if hopf.coproduct(&q[x]) != full {
            coderivation_witnesses.push(x);
        }
        if reduced != rhs {
            colinear_ok = false;
        }
    }
    Ok(QReport {
        equivariance: equivariance_witnesses.is_empty(),
        coderivation_condition: coderivation_witnesses.is_empty(),
        adjoint_linear: adjoint_ok,
        colinear: colinear_ok,
        equivariance_witnesses,
        coderivation_witnesses,
    })
}

/// A bilinear bracket and a map `τ` on `M ⊗ M`. The bracket matrix has one
/// row per basis element and the column `i + n·j` holds `e_i ◁ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidedLeibnizData {
    pub labels: Vec<String>,
    pub bracket: Matrix,
    pub tau: BraidingMatrix,
}

impl BraidedLeibnizData {
    pub fn new(labels: Vec<String>, bracket: Matrix, tau: BraidingMatrix) -> Result<Self> {
        let n = labels.len();
        if bracket.rows() != n || bracket.cols() != n * n {
            return Err(Error::Shape(format!("bracket must be {n}x{}", n * n)));
        }
        if tau.factor_dim() != n || tau.matrix.rows() != n * n || tau.matrix.cols() != n * n {
            return Err(Error::Shape(format!("tau must be {0}x{0}", n * n)));
        }
        Ok(BraidedLeibnizData { labels, bracket, tau })
    }

    /// Builds the bracket matrix from `table[i][j] = e_i ◁ e_j`.
    pub fn from_table(labels: Vec<String>, table: &[Vec<Vector>], tau: BraidingMatrix) -> Result<Self> {
        let n = labels.len();
        let mut bracket = Matrix::zeros(n, n * n);
        for (i, row) in table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                for (k, c) in v.iter() {
                    bracket[(*k, i + n * j)] = c.clone();
                }
            }
        }
        BraidedLeibnizData::new(labels, bracket, tau)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        Vector::from_dense(&self.bracket.column(i + n * j))
    }

    pub fn bracket_vec(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                out.add_scaled(&self.bracket_basis(*i, *j), &(a * b));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidedLeibnizReport {
    pub ok: bool,
    /// Basis triples where `(x◁y)◁z ≠ x◁(y◁z) + (x◁z⟨1⟩)◁y⟨2⟩`.
    pub witnesses: Witnesses<(usize, usize, usize)>,
}

/// The braided Leibniz identity on all basis triples. Every term is
/// trilinear in `(x, y, z)` since `τ` is applied to `y ⊗ z`.
pub fn check_braided_leibniz(d: &BraidedLeibnizData) -> BraidedLeibnizReport {
    let n = d.dim();
    let mut witnesses = Witnesses::default();
    let basis: Vec<Vector> = (0..n).map(Vector::basis).collect();
    for x in 0..n {
        for y in 0..n {
            let xy = d.bracket_basis(x, y);
            for z in 0..n {
                let lhs = d.bracket_vec(&xy, &basis[z]);
                let mut rhs = d.bracket_vec(&basis[x], &d.bracket_basis(y, z));
                for ((a, b), c) in d.tau.apply(&basis[y], &basis[z]).iter() {
                    rhs.add_scaled(&d.bracket_vec(&d.bracket_basis(x, *a), &basis[*b]), c);
                }
                if lhs != rhs {
                    witnesses.push((x, y, z));
                }
            }
        }
    }
    BraidedLeibnizReport {
        ok: witnesses.is_empty(),
        witnesses,
    }
}

/// `τ(x⊗y) = y₍₀₎ ⊗ xy₍₁₎` and `x ◁ y = x q(y)`, after checking the
/// Yetter-Drinfel'd condition and both conditions on `q`.
pub fn braided_leibniz_from_q(m: &YdModule, q: &[HElem]) -> Result<BraidedLeibnizData> {
    let yd = check_yd(m)?;
    if let Some(&(x, h)) = yd.eq2_witnesses.first() {
        return Err(Error::Validation(format!(
            "not a Yetter-Drinfel'd module at ({}, {})",
            m.labels()[x],
            m.hopf().label(h)
        )));
    }
    let qr = check_q_conditions(m, q)?;
    if let Some(&(x, h)) = qr.equivariance_witnesses.first() {
        return Err(Error::Validation(format!(
            "q is not equivariant at ({}, {})",
            m.labels()[x],
            m.hopf().label(h)
        )));
    }
    if let Some(&x) = qr.coderivation_witnesses.first() {
        return Err(Error::Validation(format!(
            "q fails the coderivation condition at {}",
            m.labels()[x]
        )));
    }
    Ok(braided_leibniz_unchecked(m, q))
}

/// The same data without checking preconditions. Used for negative
/// controls.
pub fn braided_leibniz_unchecked(m: &YdModule, q: &[HElem]) -> BraidedLeibnizData {
    let n = m.dim();
    let table: Vec<Vec<Vector>> = (0..n)
        .map(|i| (0..n).map(|j| m.act(&Vector::basis(i), &q[j])).collect())
        .collect();
    BraidedLeibnizData::from_table(m.labels().to_vec(), &table, braiding(m)).expect("shapes agree")
}
