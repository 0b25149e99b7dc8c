use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Scalar, Tensor2, Vector};
use crate::rack::FiniteGroup;

/// An element `Σ c_g g` of the group algebra `kG`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    pub group: FiniteGroup,
    pub coeffs: Vector,
}

impl GroupAlgebraElement {
    pub fn new(group: FiniteGroup, coeffs: Vector) -> Result<Self> {
        if let Some(k) = coeffs.keys().find(|&&k| k >= group.order()) {
            return Err(Error::Validation(format!("group element index {k} out of range")));
        }
        Ok(GroupAlgebraElement { group, coeffs })
    }

    pub fn basis(group: &FiniteGroup, g: usize) -> Self {
        GroupAlgebraElement {
            group: group.clone(),
            coeffs: Vector::basis(g),
        }
    }

    pub fn counit(&self) -> Scalar {
        self.coeffs.iter().fold(Scalar::zero(), |acc, (_, c)| &acc + c)
    }

    pub fn antipode(&self) -> Self {
        let coeffs = self.coeffs.map_keys(|&g| self.group.inv(g));
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs,
        }
    }

    pub fn coproduct(&self) -> Tensor2 {
        self.coeffs.map_keys(|&g| (g, g))
    }

    pub fn mul(&self, other: &Self) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: group_mul(&self.group, &self.coeffs, &other.coeffs),
        }
    }

    /// `self ⊳ h = S(h₍₁₎) self h₍₂₎`.
    pub fn adjoint(&self, h: &Self) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: adjoint_action(&self.group, &self.coeffs, &h.coeffs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfOps {
    pub coproduct: Tensor2,
    pub counit: Scalar,
    pub antipode: Vector,
}

/// `Δg = g ⊗ g`, `εg = 1`, `Sg = g⁻¹`.
pub fn hopf_ops(group: &FiniteGroup, g: usize) -> HopfOps {
    HopfOps {
        coproduct: Tensor2::basis((g, g)),
        counit: Scalar::one(),
        antipode: Vector::basis(group.inv(g)),
    }
}

pub fn group_mul(group: &FiniteGroup, x: &Vector, y: &Vector) -> Vector {
    let mut out = Vector::zero();
    for (a, s) in x.iter() {
        for (b, t) in y.iter() {
            out.add_term(group.mul(*a, *b), s * t);
        }
    }
    out
}

/// Bilinear extension of `g ⊳ h = h⁻¹ g h`.
pub fn adjoint_action(group: &FiniteGroup, x: &Vector, h: &Vector) -> Vector {
    let mut out = Vector::zero();
    for (g, s) in x.iter() {
        for (k, t) in h.iter() {
            out.add_term(group.conj(*g, *k), s * t);
        }
    }
    out
}
