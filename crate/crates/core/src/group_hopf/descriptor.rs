use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar, Tensor2, Vector};
use crate::lm_env::TruncatedPBW;
use crate::rack::FiniteGroup;
use crate::report::Witnesses;

/// Elements of a Hopf algebra, as combinations of its basis.
pub type HElem = Vector;

/// The Hopf algebras that Yetter-Drinfel'd modules are built over.
///
/// For the enveloping variant the basis is a truncated PBW basis; products
/// that would leave it are errors here, never silent truncations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfDescriptor {
    GroupAlgebra(FiniteGroup),
    FirstOrderEnveloping(TruncatedPBW),
}

impl HopfDescriptor {
    pub fn dim(&self) -> usize {
        match self {
            HopfDescriptor::GroupAlgebra(g) => g.order(),
            HopfDescriptor::FirstOrderEnveloping(u) => u.dim(),
        }
    }

    pub fn label(&self, i: usize) -> String {
        match self {
            HopfDescriptor::GroupAlgebra(g) => g.label(i).to_string(),
            HopfDescriptor::FirstOrderEnveloping(u) => u.label(i),
        }
    }

    pub fn unit(&self) -> usize {
        match self {
            HopfDescriptor::GroupAlgebra(g) => g.identity(),
            HopfDescriptor::FirstOrderEnveloping(u) => u.unit(),
        }
    }

    pub fn one(&self) -> HElem {
        HElem::basis(self.unit())
    }

    /// Basis indices of the algebra generators that module structures are
    /// checked on. For a group algebra every group element is a generator.
    pub fn generators(&self) -> Vec<usize> {
        match self {
            HopfDescriptor::GroupAlgebra(g) => (0..g.order()).collect(),
            HopfDescriptor::FirstOrderEnveloping(u) => u.generators(),
        }
    }

    /// The basis element as a product of generators, given as positions in
    /// [`HopfDescriptor::generators`], applied left to right.
    pub fn word(&self, i: usize) -> Vec<usize> {
        match self {
            HopfDescriptor::GroupAlgebra(g) => {
                if i == g.identity() {
                    Vec::new()
                } else {
                    vec![i]
                }
            }
            HopfDescriptor::FirstOrderEnveloping(u) => u.monomial(i).to_vec(),
        }
    }

    /// Polynomial degree of a basis element (0 for group elements).
    pub fn degree(&self, i: usize) -> usize {
        match self {
            HopfDescriptor::GroupAlgebra(_) => 0,
            HopfDescriptor::FirstOrderEnveloping(u) => u.degree(i),
        }
    }

    pub fn mul_basis(&self, a: usize, b: usize) -> Result<HElem> {
        match self {
            HopfDescriptor::GroupAlgebra(g) => Ok(HElem::basis(g.mul(a, b))),
            HopfDescriptor::FirstOrderEnveloping(u) => {
                let (p, overflow) = u.mul_basis(a, b);
                if overflow {
                    return Err(Error::DegreeOverflow(format!(
                        "{} · {} leaves degree ≤ {}",
                        u.label(a),
                        u.label(b),
                        u.degree_bound()
                    )));
                }
                Ok(p.clone())
            }
        }
    }

    pub fn mul(&self, x: &HElem, y: &HElem) -> Result<HElem> {
        let mut out = HElem::zero();
        for (a, s) in x.iter() {
            for (b, t) in y.iter() {
                out.add_scaled(&self.mul_basis(*a, *b)?, &(s * t));
            }
        }
        Ok(out)
    }

    pub fn coproduct_basis(&self, i: usize) -> Tensor2 {
        match self {
            HopfDescriptor::GroupAlgebra(_) => Tensor2::basis((i, i)),
            HopfDescriptor::FirstOrderEnveloping(u) => u.coproduct_basis(i),
        }
    }

    pub fn coproduct(&self, x: &HElem) -> Tensor2 {
        x.map_linear(|&i| self.coproduct_basis(i))
    }

    /// `(Δ ⊗ id)Δ` on a basis element.
    pub fn coproduct2_basis(&self, i: usize) -> crate::linalg::LinComb<(usize, usize, usize)> {
        let mut out = crate::linalg::LinComb::zero();
        for ((a, b), c) in self.coproduct_basis(i).iter() {
            for ((a1, a2), d) in self.coproduct_basis(*a).iter() {
                out.add_term((*a1, *a2, *b), c * d);
            }
        }
        out
    }

    pub fn counit_basis(&self, i: usize) -> Scalar {
        match self {
            HopfDescriptor::GroupAlgebra(_) => Scalar::one(),
            HopfDescriptor::FirstOrderEnveloping(u) => u.counit_basis(i),
        }
    }

    pub fn counit(&self, x: &HElem) -> Scalar {
        x.iter()
            .fold(Scalar::zero(), |acc, (i, c)| &acc + &(c * &self.counit_basis(*i)))
    }

    pub fn antipode_basis(&self, i: usize) -> HElem {
        match self {
            HopfDescriptor::GroupAlgebra(g) => HElem::basis(g.inv(i)),
            HopfDescriptor::FirstOrderEnveloping(u) => u.antipode_basis(i),
        }
    }

    pub fn antipode(&self, x: &HElem) -> HElem {
        x.map_linear(|&i| self.antipode_basis(i))
    }

    /// Right adjoint action `S(h₍₁₎) x h₍₂₎`.
    pub fn adjoint(&self, x: &HElem, h: &HElem) -> Result<HElem> {
        let mut out = HElem::zero();
        for ((h1, h2), c) in self.coproduct(h).iter() {
            let t = self.mul(&self.mul(&self.antipode_basis(*h1), x)?, &HElem::basis(*h2))?;
            out.add_scaled(&t, c);
        }
        Ok(out)
    }

    /// `Δ̃(h) = h₍₁₎ ⊗ h₍₂₎ − 1 ⊗ h`.
    pub fn reduced_coproduct(&self, x: &HElem) -> Tensor2 {
        let mut out = self.coproduct(x);
        for (i, c) in x.iter() {
            out.add_term((self.unit(), *i), -c);
        }
        out
    }

    pub fn is_cocommutative(&self) -> bool {
        match self {
            HopfDescriptor::GroupAlgebra(_) => true,
            HopfDescriptor::FirstOrderEnveloping(_) => true,
        }
    }

    pub fn over_field(&self, field: &Field) -> Result<Self> {
        Ok(match self {
            HopfDescriptor::GroupAlgebra(g) => HopfDescriptor::GroupAlgebra(g.clone()),
            HopfDescriptor::FirstOrderEnveloping(u) => HopfDescriptor::FirstOrderEnveloping(u.over_field(field)?),
        })
    }

    /// Bialgebra and antipode axioms on every basis element (and pair, for
    /// multiplicativity of `Δ`) whose products stay representable.
    pub fn check_axioms(&self) -> HopfAxiomReport {
        let n = self.dim();
        let mut report = HopfAxiomReport::default();
        for i in 0..n {
            let d = self.coproduct_basis(i);
            // coassociativity
            let mut right = crate::linalg::LinComb::zero();
            for ((a, b), c) in d.iter() {
                for ((b1, b2), e) in self.coproduct_basis(*b).iter() {
                    right.add_term((*a, *b1, *b2), c * e);
                }
            }
            if self.coproduct2_basis(i) != right {
                report.coassociativity.push(i);
            }
            // counit laws
            let left: HElem = d.iter().map(|((a, b), c)| (*b, c * &self.counit_basis(*a))).collect();
            let rightc: HElem = d.iter().map(|((a, b), c)| (*a, c * &self.counit_basis(*b))).collect();
            if left != HElem::basis(i) || rightc != HElem::basis(i) {
                report.counit.push(i);
            }
            // antipode convolution and ε∘S = ε
            let mut conv = HElem::zero();
            let mut ok = true;
            for ((a, b), c) in d.iter() {
                match self.mul(&self.antipode_basis(*a), &HElem::basis(*b)) {
                    Ok(p) => conv.add_scaled(&p, c),
                    Err(_) => ok = false,
                }
            }
            let eps = self.counit_basis(i);
            if !ok || conv != HElem::term(self.unit(), eps.clone()) || self.counit(&self.antipode_basis(i)) != eps {
                report.antipode.push(i);
            }
        }
        for a in 0..n {
            for b in 0..n {
                let Ok(ab) = self.mul_basis(a, b) else { continue };
                let mut rhs = Tensor2::zero();
                for ((a1, a2), x) in self.coproduct_basis(a).iter() {
                    for ((b1, b2), y) in self.coproduct_basis(b).iter() {
                        let (Ok(l), Ok(r)) = (self.mul_basis(*a1, *b1), self.mul_basis(*a2, *b2)) else {
                            continue;
                        };
                        rhs.add_scaled(&crate::linalg::tensor(&l, &r), &(x * y));
                    }
                }
                if self.coproduct(&ab) != rhs {
                    report.multiplicativity.push((a, b));
                }
            }
        }
        report.ok = report.coassociativity.is_empty()
            && report.counit.is_empty()
            && report.antipode.is_empty()
            && report.multiplicativity.is_empty();
        report
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HopfAxiomReport {
    pub ok: bool,
    pub coassociativity: Witnesses<usize>,
    pub counit: Witnesses<usize>,
    pub antipode: Witnesses<usize>,
    pub multiplicativity: Witnesses<(usize, usize)>,
}
