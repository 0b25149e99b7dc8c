use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar, Vector};
use crate::report::Witnesses;

/// Structure constants of a bilinear bracket: `[e_i, e_j] = brackets[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    labels: Vec<String>,
    brackets: Vec<Vec<Vector>>,
}

impl StructureConstants {
    pub fn zero(labels: Vec<String>) -> Self {
        let n = labels.len();
        StructureConstants {
            labels,
            brackets: vec![vec![Vector::zero(); n]; n],
        }
    }

    /// Sparse constructor: `entries` lists `(i, j, [e_i, e_j])`; repeated
    /// pairs are summed.
    pub fn from_entries(
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self> {
        let mut c = StructureConstants::zero(labels);
        let n = c.dim();
        for (i, j, v) in entries {
            if i >= n || j >= n || v.keys().any(|&k| k >= n) {
                return Err(Error::Validation(format!(
                    "bracket entry ({i},{j}) out of range for dim {n}"
                )));
            }
            c.brackets[i][j] = &c.brackets[i][j] + &v;
        }
        Ok(c)
    }

    /// Convenience for tests and fixtures: `(i, j, k, c)` means
    /// `[e_i, e_j] += c·e_k`.
    pub fn from_i64(labels: &[&str], entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        StructureConstants::from_entries(
            labels.iter().map(|s| s.to_string()).collect(),
            entries
                .iter()
                .map(|&(i, j, k, c)| (i, j, Vector::term(k, Scalar::from_i64(c)))),
        )
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bracket(&self, i: usize, j: usize) -> &Vector {
        &self.brackets[i][j]
    }

    /// Bilinear extension of the bracket.
    pub fn bracket_vec(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                out.add_scaled(&self.brackets[*i][*j], &(a * b));
            }
        }
        out
    }

    /// Nonzero brackets in `(i, j)` order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &Vector)> + '_ {
        self.brackets.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(j, v)| (i, j, v))
        })
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (&self.brackets[i][j] + &self.brackets[j][i]).is_zero()))
    }

    pub fn over_field(&self, field: &Field) -> Result<Self> {
        let brackets = self
            .brackets
            .iter()
            .map(|row| row.iter().map(|v| v.try_map_coeffs(|c| field.convert(c))).collect())
            .collect::<Result<_>>()?;
        Ok(StructureConstants {
            labels: self.labels.clone(),
            brackets,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeibnizReport {
    pub ok: bool,
    /// Basis triples where `[[x,y],z] ≠ [x,[y,z]] + [[x,z],y]`.
    pub witnesses: Witnesses<(usize, usize, usize)>,
}

/// The right Leibniz identity on all basis triples.
pub fn check_leibniz(c: &StructureConstants) -> LeibnizReport {
    let n = c.dim();
    let mut witnesses = Witnesses::default();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ex = Vector::basis(x);
                let ez = Vector::basis(z);
                let lhs = c.bracket_vec(c.bracket(x, y), &ez);
                let rhs = &c.bracket_vec(&ex, c.bracket(y, z)) + &c.bracket_vec(c.bracket(x, z), &Vector::basis(y));
                if lhs != rhs {
                    witnesses.push((x, y, z));
                }
            }
        }
    }
    LeibnizReport {
        ok: witnesses.is_empty(),
        witnesses,
    }
}

/// Jacobi in the form `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` on basis triples.
pub fn jacobi_failures(c: &StructureConstants) -> Witnesses<(usize, usize, usize)> {
    let n = c.dim();
    let mut out = Witnesses::default();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t = &(&c.bracket_vec(c.bracket(x, y), &Vector::basis(z))
                    + &c.bracket_vec(c.bracket(y, z), &Vector::basis(x)))
                    + &c.bracket_vec(c.bracket(z, x), &Vector::basis(y));
                if !t.is_zero() {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// A structure-constant table that satisfies the right Leibniz identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    constants: StructureConstants,
}

impl LeibnizAlgebra {
    pub fn new(constants: StructureConstants) -> Result<Self> {
        let report = check_leibniz(&constants);
        if let Some(&(x, y, z)) = report.witnesses.first() {
            let l = constants.labels();
            return Err(Error::Validation(format!(
                "Leibniz identity fails at ({}, {}, {})",
                l[x], l[y], l[z]
            )));
        }
        Ok(LeibnizAlgebra { constants })
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.constants.labels()
    }

    pub fn bracket(&self, i: usize, j: usize) -> &Vector {
        self.constants.bracket(i, j)
    }

    pub fn bracket_vec(&self, u: &Vector, v: &Vector) -> Vector {
        self.constants.bracket_vec(u, v)
    }

    pub fn over_field(&self, field: &Field) -> Result<Self> {
        LeibnizAlgebra::new(self.constants.over_field(field)?)
    }
}

/// Basis `(x, y, z)` with `[x,x] = [y,y] = [x,y] = z`, `[y,x] = −z`.
pub fn heisenberg_voros() -> LeibnizAlgebra {
    let c = StructureConstants::from_i64(
        &["x", "y", "z"],
        &[(0, 0, 2, 1), (1, 1, 2, 1), (0, 1, 2, 1), (1, 0, 2, -1)],
    )
    .expect("in range");
    LeibnizAlgebra::new(c).expect("Heisenberg-Voros is Leibniz")
}

/// Abelian algebra of dimension `n` with basis `e1..en`.
pub fn abelian(n: usize) -> LeibnizAlgebra {
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    LeibnizAlgebra::new(StructureConstants::zero(labels)).expect("abelian")
}

/// `[e1, e2] = e1 = −[e2, e1]`.
pub fn nonabelian_2d() -> LeibnizAlgebra {
    let c = StructureConstants::from_i64(&["e1", "e2"], &[(0, 1, 0, 1), (1, 0, 0, -1)]).expect("in range");
    LeibnizAlgebra::new(c).expect("Lie")
}

/// `sl₂` on `(e, f, h)`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2() -> LeibnizAlgebra {
    let c = StructureConstants::from_i64(
        &["e", "f", "h"],
        &[
            (2, 0, 0, 2),
            (0, 2, 0, -2),
            (2, 1, 1, -2),
            (1, 2, 1, 2),
            (0, 1, 2, 1),
            (1, 0, 2, -1),
        ],
    )
    .expect("in range");
    LeibnizAlgebra::new(c).expect("Lie")
}

/// `[x, x] = y`, everything else zero.
pub fn square_extension() -> LeibnizAlgebra {
    let c = StructureConstants::from_i64(&["x", "y"], &[(0, 0, 1, 1)]).expect("in range");
    LeibnizAlgebra::new(c).expect("Leibniz")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_algebras_are_leibniz() {
        for l in [
            heisenberg_voros(),
            abelian(2),
            nonabelian_2d(),
            sl2(),
            square_extension(),
        ] {
            assert!(check_leibniz(l.constants()).ok);
        }
        for l in [abelian(2), nonabelian_2d(), sl2()] {
            assert!(l.constants().is_antisymmetric());
            assert!(jacobi_failures(l.constants()).is_empty());
        }
    }

    #[test]
    fn heisenberg_voros_brackets() {
        let hv = heisenberg_voros();
        assert_eq!(hv.bracket(0, 1), &Vector::basis(2));
        assert_eq!(hv.bracket(1, 0), &Vector::term(2, Scalar::from_i64(-1)));
        for k in 0..3 {
            assert!(hv.bracket(2, k).is_zero());
            assert!(hv.bracket(k, 2).is_zero());
        }
        assert_eq!(hv.constants().nonzero().count(), 4);
    }

    #[test]
    fn xx_equals_x_fails() {
        let c = StructureConstants::from_i64(&["x"], &[(0, 0, 0, 1)]).unwrap();
        let r = check_leibniz(&c);
        assert!(!r.ok);
        assert_eq!(r.witnesses.first(), Some(&(0, 0, 0)));
        // [[x,x],x] = x while [x,[x,x]] + [[x,x],x] = 2x
        let x = Vector::basis(0);
        let lhs = c.bracket_vec(&c.bracket_vec(&x, &x), &x);
        assert_eq!(lhs, x);
        assert!(LeibnizAlgebra::new(c).is_err());
    }

    #[test]
    fn out_of_range_entries() {
        assert!(StructureConstants::from_i64(&["x"], &[(0, 1, 0, 1)]).is_err());
        assert!(StructureConstants::from_i64(&["x"], &[(0, 0, 3, 1)]).is_err());
    }
}
