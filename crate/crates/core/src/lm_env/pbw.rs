//! Degree-truncated enveloping algebras in a PBW basis.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::leibniz::{jacobi_failures, StructureConstants};
use crate::linalg::{Field, LinComb, Scalar, Tensor2, Vector};

/// Structure constants that are antisymmetric and satisfy Jacobi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    constants: StructureConstants,
}

impl LieAlgebra {
    pub fn new(constants: StructureConstants) -> Result<Self> {
        if !constants.is_antisymmetric() {
            return Err(Error::Validation("Lie bracket is not antisymmetric".into()));
        }
        if let Some(&(x, y, z)) = jacobi_failures(&constants).first() {
            let l = constants.labels();
            return Err(Error::Validation(format!(
                "Jacobi fails at ({}, {}, {})",
                l[x], l[y], l[z]
            )));
        }
        Ok(LieAlgebra { constants })
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

    pub fn over_field(&self, field: &Field) -> Result<Self> {
        LieAlgebra::new(self.constants.over_field(field)?)
    }
}

/// `U(g)` truncated at total degree `d`, with basis the sorted monomials
/// `x_{i1} x_{i2} ⋯ x_{ik}`, `i1 ≤ ⋯ ≤ ik`, `k ≤ d`, ordered by degree and
/// then lexicographically. Index 0 is the unit and indices `1..=dim g` are
/// the generators (when `d ≥ 1`).
///
/// Products are straightened exactly and then projected to degree `≤ d`.
#[derive(Clone, Debug)]
pub struct TruncatedPBW {
    lie: LieAlgebra,
    degree: usize,
    monomials: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    /// `products[a][b] = (projected product, whether anything was dropped)`
    products: Vec<Vec<(Vector, bool)>>,
}

impl PartialEq for TruncatedPBW {
    fn eq(&self, other: &Self) -> bool {
        self.lie == other.lie && self.degree == other.degree
    }
}

impl Eq for TruncatedPBW {}

impl TruncatedPBW {
    pub fn new(lie: LieAlgebra, degree: usize) -> Self {
        let n = lie.dim();
        let mut monomials = vec![Vec::new()];
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..degree {
            let mut next = Vec::new();
            for m in &layer {
                let start = m.last().copied().unwrap_or(0);
                for a in start..n {
                    let mut w = m.clone();
                    w.push(a);
                    next.push(w);
                }
            }
            monomials.extend(next.iter().cloned());
            layer = next;
        }
        let index: HashMap<Vec<usize>, usize> = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut straightener = Straightener {
            lie: &lie,
            memo: HashMap::new(),
        };
        let products = monomials
            .iter()
            .map(|a| {
                monomials
                    .iter()
                    .map(|b| {
                        let word: Vec<usize> = a.iter().chain(b).copied().collect();
                        let full = straightener.normal_form(&word);
                        let mut out = Vector::zero();
                        let mut overflow = false;
                        for (m, c) in full.iter() {
                            match index.get(m) {
                                Some(&i) => out.add_term(i, c.clone()),
                                None => overflow = true,
                            }
                        }
                        (out, overflow)
                    })
                    .collect()
            })
            .collect();
        TruncatedPBW {
            lie,
            degree,
            monomials,
            index,
            products,
        }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn degree_bound(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn unit(&self) -> usize {
        0
    }

    pub fn monomial(&self, i: usize) -> &[usize] {
        &self.monomials[i]
    }

    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.monomials[i].len()
    }

    /// Basis index of the generator `x_a`, if `d ≥ 1`.
    pub fn generator(&self, a: usize) -> Option<usize> {
        self.index_of(&[a])
    }

    pub fn generators(&self) -> Vec<usize> {
        (0..self.lie.dim()).filter_map(|a| self.generator(a)).collect()
    }

    pub fn label(&self, i: usize) -> String {
        let m = &self.monomials[i];
        if m.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut k = 0;
        while k < m.len() {
            let mut e = 1;
            while k + e < m.len() && m[k + e] == m[k] {
                e += 1;
            }
            let l = &self.lie.labels()[m[k]];
            parts.push(if e == 1 { l.clone() } else { format!("{l}^{e}") });
            k += e;
        }
        parts.join(" ")
    }

    /// Embeds a vector of `g` as a degree-one element.
    pub fn from_lie(&self, v: &Vector) -> Vector {
        v.map_keys(|&a| self.generator(a).expect("degree bound ≥ 1"))
    }

    /// Truncated product of basis elements and whether any term of degree
    /// `> d` was dropped.
    pub fn mul_basis(&self, a: usize, b: usize) -> (&Vector, bool) {
        let (v, o) = &self.products[a][b];
        (v, *o)
    }

    /// Truncated product.
    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        self.mul_checked(u, v).0
    }

    /// Truncated product and whether anything was dropped.
    pub fn mul_checked(&self, u: &Vector, v: &Vector) -> (Vector, bool) {
        let mut out = Vector::zero();
        let mut overflow = false;
        for (a, x) in u.iter() {
            for (b, y) in v.iter() {
                let (p, o) = &self.products[*a][*b];
                overflow |= *o;
                out.add_scaled(p, &(x * y));
            }
        }
        (out, overflow)
    }

    /// Product that fails instead of truncating.
    pub fn mul_exact(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        let (p, overflow) = self.mul_checked(u, v);
        if overflow {
            return Err(Error::DegreeOverflow(format!(
                "product leaves degree ≤ {}",
                self.degree
            )));
        }
        Ok(p)
    }

    /// `Δ` on a basis monomial: the sum over all ways to split the sorted
    /// word into two complementary subsequences.
    pub fn coproduct_basis(&self, i: usize) -> Tensor2 {
        let m = &self.monomials[i];
        let k = m.len();
        let mut out = Tensor2::zero();
        for mask in 0u32..(1 << k) {
            let (left, right): (Vec<_>, Vec<_>) = (0..k).partition(|&t| mask & (1 << t) != 0);
            let l: Vec<usize> = left.iter().map(|&t| m[t]).collect();
            let r: Vec<usize> = right.iter().map(|&t| m[t]).collect();
            out.add_term((self.index[&l], self.index[&r]), Scalar::one());
        }
        out
    }

    pub fn coproduct(&self, u: &Vector) -> Tensor2 {
        u.map_linear(|&i| self.coproduct_basis(i))
    }

    pub fn counit_basis(&self, i: usize) -> Scalar {
        if i == 0 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    pub fn counit(&self, u: &Vector) -> Scalar {
        u.coeff(&0)
    }

    /// `S(x_{i1} ⋯ x_{ik}) = (−1)^k x_{ik} ⋯ x_{i1}`, straightened. Never
    /// truncates since straightening does not raise degree.
    pub fn antipode_basis(&self, i: usize) -> Vector {
        let m = &self.monomials[i];
        let mut out = Vector::basis(0);
        for &a in m.iter().rev() {
            out = self.mul(&out, &Vector::basis(self.index[&vec![a]]));
        }
        if m.len() % 2 == 1 {
            out = -&out;
        }
        out
    }

    pub fn antipode(&self, u: &Vector) -> Vector {
        u.map_linear(|&i| self.antipode_basis(i))
    }

    /// Right adjoint action `S(h₍₁₎) u h₍₂₎`, truncated.
    pub fn adjoint(&self, u: &Vector, h: &Vector) -> Vector {
        let mut out = Vector::zero();
        for ((h1, h2), c) in self.coproduct(h).iter() {
            let t = self.mul(&self.mul(&self.antipode_basis(*h1), u), &Vector::basis(*h2));
            out.add_scaled(&t, c);
        }
        out
    }

    pub fn over_field(&self, field: &Field) -> Result<Self> {
        Ok(TruncatedPBW::new(self.lie.over_field(field)?, self.degree))
    }
}

struct Straightener<'a> {
    lie: &'a LieAlgebra,
    memo: HashMap<Vec<usize>, LinComb<Vec<usize>>>,
}

impl Straightener<'_> {
    /// Exact PBW normal form of a word, using `x_a x_b = x_b x_a + [x_a, x_b]`
    /// at the first descent.
    fn normal_form(&mut self, word: &[usize]) -> LinComb<Vec<usize>> {
        if let Some(v) = self.memo.get(word) {
            return v.clone();
        }
        let out = match (1..word.len()).find(|&i| word[i - 1] > word[i]) {
            None => LinComb::basis(word.to_vec()),
            Some(i) => {
                let mut swapped = word.to_vec();
                swapped.swap(i - 1, i);
                let mut out = self.normal_form(&swapped);
                let bracket = self.lie.bracket(word[i - 1], word[i]).clone();
                for (k, c) in bracket.iter() {
                    let mut w = word[..i - 1].to_vec();
                    w.push(*k);
                    w.extend_from_slice(&word[i + 1..]);
                    out.add_scaled(&self.normal_form(&w), c);
                }
                out
            }
        };
        self.memo.insert(word.to_vec(), out.clone());
        out
    }
}
