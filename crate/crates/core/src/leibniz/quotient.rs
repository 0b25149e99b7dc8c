use super::{jacobi_failures, LeibnizAlgebra, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace, Vector};

/// The smallest two-sided bracket-closed subspace containing every square
/// `[v, v]`, as an echelon basis.
pub fn squares_ideal(l: &LeibnizAlgebra) -> Subspace {
    let n = l.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        gens.push(l.bracket(i, i).to_dense(n));
        for j in i + 1..n {
            gens.push((l.bracket(i, j) + l.bracket(j, i)).to_dense(n));
        }
    }
    let mut ideal = Subspace::span(n, gens);
    loop {
        let mut grown = ideal.clone();
        for b in ideal.basis() {
            let v = Vector::from_dense(b);
            for k in 0..n {
                let e = Vector::basis(k);
                grown = grown.extend([l.bracket_vec(&v, &e).to_dense(n), l.bracket_vec(&e, &v).to_dense(n)]);
            }
        }
        if grown.dim() == ideal.dim() {
            return ideal;
        }
        ideal = grown;
    }
}

/// The Lie quotient `π: g → g_Lie` by the squares ideal, with a section and
/// the right action of `g_Lie` on `g` lifted through the section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieQuotientData {
    pub ideal: Subspace,
    /// Coordinates of `g` kept by the quotient; `section(w̄_t) = e_{kept[t]}`.
    pub kept: Vec<usize>,
    /// `π` as a `dim g_Lie × dim g` matrix.
    pub projection: Matrix,
    /// The section as a `dim g × dim g_Lie` matrix.
    pub section: Matrix,
    pub quotient: StructureConstants,
    /// `lifted_action[t]` is the matrix of `v ↦ [v, section(w̄_t)]` on `g`.
    pub lifted_action: Vec<Matrix>,
}

impl LieQuotientData {
    pub fn quotient_dim(&self) -> usize {
        self.kept.len()
    }

    pub fn project(&self, v: &Vector) -> Vector {
        let n = self.projection.cols();
        let r = self.ideal.reduce(&v.to_dense(n));
        self.kept.iter().enumerate().map(|(t, &c)| (t, r[c].clone())).collect()
    }

    pub fn lift(&self, w: &Vector) -> Vector {
        w.map_keys(|&t| self.kept[t])
    }
}

pub fn lie_quotient(l: &LeibnizAlgebra) -> Result<LieQuotientData> {
    let n = l.dim();
    let ideal = squares_ideal(l);
    let kept: Vec<usize> = (0..n).filter(|c| !ideal.pivots().contains(c)).collect();
    let q = kept.len();

    for i in ideal.basis() {
        let iv = Vector::from_dense(i);
        if let Some(k) = (0..n).find(|&k| !l.bracket_vec(&Vector::basis(k), &iv).is_zero()) {
            return Err(Error::Consistency(format!(
                "right bracket with the squares ideal is nonzero at {}; lifted action depends on the lift",
                l.labels()[k]
            )));
        }
    }

    let mut data = LieQuotientData {
        ideal,
        kept: kept.clone(),
        projection: Matrix::zeros(q, n),
        section: Matrix::zeros(n, q),
        quotient: StructureConstants::zero(kept.iter().map(|&c| l.labels()[c].clone()).collect()),
        lifted_action: Vec::new(),
    };
    for k in 0..n {
        for (t, c) in data.project(&Vector::basis(k)).iter() {
            data.projection[(*t, k)] = c.clone();
        }
    }
    for (t, &c) in kept.iter().enumerate() {
        data.section[(c, t)] = Scalar::one();
    }
    let entries = (0..q)
        .flat_map(|s| (0..q).map(move |t| (s, t)))
        .map(|(s, t)| (s, t, data.project(l.bracket(kept[s], kept[t]))));
    data.quotient = StructureConstants::from_entries(data.quotient.labels().to_vec(), entries.collect::<Vec<_>>())?;
    data.lifted_action = kept
        .iter()
        .map(|&c| {
            let mut m = Matrix::zeros(n, n);
            for v in 0..n {
                for (k, x) in l.bracket(v, c).iter() {
                    m[(*k, v)] = x.clone();
                }
            }
            m
        })
        .collect();

    if !data.quotient.is_antisymmetric() {
        return Err(Error::Consistency("quotient bracket is not antisymmetric".into()));
    }
    if let Some(&(x, y, z)) = jacobi_failures(&data.quotient).first() {
        return Err(Error::Consistency(format!(
            "quotient bracket fails Jacobi at ({x}, {y}, {z})"
        )));
    }
    Ok(data)
}

/// The bilinear operation `(a + u) ◁ (a′ + v) = aa′ + a′u + [u, v]` on
/// `k ⊕ g`, with basis `(1, e_1, …, e_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalShelf {
    pub labels: Vec<String>,
    /// `table[i][j] = b_i ◁ b_j`
    pub table: Vec<Vec<Vector>>,
}

impl UnitalShelf {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn op(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                out.add_scaled(&self.table[*i][*j], &(a * b));
            }
        }
        out
    }

    /// `out[k][(i, j)]` is the coefficient of `s_i s′_j` in the `b_k`
    /// component of `(Σ s_i b_i) ◁ (Σ s′_j b_j)`.
    pub fn symbolic(&self) -> Vec<crate::linalg::Tensor2> {
        let n = self.dim();
        let mut out = vec![crate::linalg::Tensor2::zero(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.table[i][j].iter() {
                    out[*k].add_term((i, j), c.clone());
                }
            }
        }
        out
    }

    /// Renders [`UnitalShelf::symbolic`] with coefficient names `a, b, c, …`
    /// for the first argument and primed names for the second, one line per
    /// basis component.
    pub fn symbolic_display(&self) -> Vec<String> {
        let name = |i: usize| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("s{i}")
            }
        };
        self.symbolic()
            .iter()
            .zip(&self.labels)
            .map(|(poly, label)| {
                let mut s = String::new();
                for ((i, j), c) in poly.iter() {
                    let mono = format!("{}{}'", name(*i), name(*j));
                    let (sign, mag) = if *c < Scalar::zero() {
                        ("-", -c)
                    } else {
                        ("+", c.clone())
                    };
                    if s.is_empty() {
                        if sign == "-" {
                            s.push('-');
                        }
                    } else {
                        s.push_str(&format!(" {sign} "));
                    }
                    if !mag.is_one() {
                        s.push_str(&mag.to_string());
                    }
                    s.push_str(&mono);
                }
                if s.is_empty() {
                    s.push('0');
                }
                format!("{label}: {s}")
            })
            .collect()
    }
}

pub fn unital_shelf(l: &LeibnizAlgebra) -> UnitalShelf {
    let n = l.dim();
    let mut labels = vec!["1".to_string()];
    labels.extend(l.labels().iter().cloned());
    let mut table = vec![vec![Vector::zero(); n + 1]; n + 1];
    table[0][0] = Vector::basis(0);
    for (i, row) in table.iter_mut().enumerate().skip(1) {
        row[0] = Vector::basis(i);
        for (j, cell) in row.iter_mut().enumerate().skip(1) {
            *cell = l.bracket(i - 1, j - 1).map_keys(|k| k + 1);
        }
    }
    UnitalShelf { labels, table }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::{abelian, heisenberg_voros, nonabelian_2d, sl2, square_extension};

    #[test]
    fn squares_ideals() {
        for l in [abelian(3), nonabelian_2d(), sl2()] {
            assert_eq!(squares_ideal(&l).dim(), 0);
        }
        let hv = squares_ideal(&heisenberg_voros());
        assert_eq!(hv.dim(), 1);
        assert_eq!(hv.basis()[0], vec![Scalar::zero(), Scalar::zero(), Scalar::one()]);
        let sq = squares_ideal(&square_extension());
        assert_eq!(sq.basis(), &[vec![Scalar::zero(), Scalar::one()]]);
    }

    #[test]
    fn closure_adds_brackets_with_squares() {
        // [x,x] = y, [y,x] = w: the square y forces w into the ideal
        let c = StructureConstants::from_i64(&["x", "y", "w"], &[(0, 0, 1, 1), (1, 0, 2, 1)]).unwrap();
        let l = LeibnizAlgebra::new(c).unwrap();
        assert_eq!(squares_ideal(&l).dim(), 2);
    }

    #[test]
    fn lie_input_is_its_own_quotient() {
        for l in [nonabelian_2d(), sl2(), abelian(1)] {
            let q = lie_quotient(&l).unwrap();
            assert_eq!(&q.quotient, l.constants());
            assert!(q.projection.is_identity());
        }
    }

    #[test]
    fn heisenberg_voros_quotient_is_abelian_plane() {
        let q = lie_quotient(&heisenberg_voros()).unwrap();
        assert_eq!(q.quotient_dim(), 2);
        assert_eq!(q.quotient.nonzero().count(), 0);
        assert_eq!(q.quotient.labels(), &["x".to_string(), "y".to_string()]);
        assert!(q.projection.mul(&q.section).unwrap().is_identity());
        assert!(q.project(&Vector::basis(2)).is_zero());
        // squares of the quotient vanish
        let ql = LeibnizAlgebra::new(q.quotient.clone()).unwrap();
        assert_eq!(squares_ideal(&ql).dim(), 0);
        // lifted action of x̄ sends x to [x,x] = z
        assert_eq!(q.lifted_action[0][(2, 0)], Scalar::one());
    }

    #[test]
    fn shelf_display_for_heisenberg_voros() {
        let s = unital_shelf(&heisenberg_voros());
        assert_eq!(
            s.symbolic_display(),
            vec!["1: aa'", "x: ba'", "y: ca'", "z: bb' + bc' - cb' + cc' + da'"]
        );
    }

    #[test]
    fn shelf_units() {
        let s = unital_shelf(&heisenberg_voros());
        let one = Vector::basis(0);
        let x = Vector::basis(1);
        assert!(s.op(&one, &x).is_zero());
        assert_eq!(s.op(&x, &one), x);
    }
}
