use super::{HElem, HopfDescriptor};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Tensor2, Vector};
use crate::rack::{check_augmented, AugmentedRack, FiniteGroup};
use crate::yd::YdModule;

/// `ker ε ⊂ kG` with basis `g − 1`, `g ≠ e`, the adjoint action and the
/// coaction `Δ̃`.
pub fn ker_eps_yd(group: &FiniteGroup) -> YdModule {
    let hopf = HopfDescriptor::GroupAlgebra(group.clone());
    let e = group.identity();
    let elems: Vec<usize> = (0..group.order()).filter(|&g| g != e).collect();
    let pos = |g: usize| elems.iter().position(|&x| x == g);
    let basis_elem = |g: usize| &HElem::basis(g) - &HElem::basis(e);

    // Coordinates in the basis {g − 1}: drop the identity coefficient. Valid
    // because the coefficients of an element of ker ε sum to zero.
    let to_ker = |v: &Vector| -> Vector {
        debug_assert!(hopf.counit(v).is_zero());
        v.iter()
            .filter(|(g, _)| **g != e)
            .map(|(g, c)| (pos(*g).expect("non-identity"), c.clone()))
            .collect()
    };

    let labels = elems.iter().map(|&g| format!("{}-1", group.label(g))).collect();
    let action = elems
        .iter()
        .map(|&g| {
            (0..group.order())
                .map(|h| to_ker(&hopf.adjoint(&basis_elem(g), &HElem::basis(h)).expect("group products")))
                .collect()
        })
        .collect();
    let coaction = elems
        .iter()
        .map(|&g| {
            let d = hopf.reduced_coproduct(&basis_elem(g));
            let mut out = Tensor2::zero();
            for k in 0..group.order() {
                let first: Vector = d
                    .iter()
                    .filter(|((_, b), _)| *b == k)
                    .map(|((a, _), c)| (*a, c.clone()))
                    .collect();
                for (m, c) in to_ker(&first).iter() {
                    out.add_term((*m, k), c.clone());
                }
            }
            out
        })
        .collect();
    YdModule::new(hopf, labels, action, coaction).expect("ker ε is a module and comodule")
}

/// The linearization `kX` with action from the table and coaction
/// `x ↦ x ⊗ p(x)`, without checking the augmentation identity.
pub fn permutation_module(a: &AugmentedRack) -> YdModule {
    let g = a.group();
    let action = (0..a.len())
        .map(|x| (0..g.order()).map(|h| Vector::basis(a.act(x, h))).collect())
        .collect();
    let coaction = (0..a.len()).map(|x| Tensor2::basis((x, a.p(x)))).collect();
    YdModule::new(
        HopfDescriptor::GroupAlgebra(g.clone()),
        a.carrier().to_vec(),
        action,
        coaction,
    )
    .expect("a right G-set linearizes to a module and comodule")
}

/// A linearized augmented rack and the linear map `p: kX → kG`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linearized {
    pub module: YdModule,
    /// `|G| × |X|` matrix of `p`.
    pub p: Matrix,
}

impl Linearized {
    pub fn p_of(&self, x: usize) -> usize {
        (0..self.p.rows())
            .find(|&g| !self.p[(g, x)].is_zero())
            .expect("p is a map of sets")
    }

    /// `(p⊗1)Δ_r x = p(x)⊗p(x)` and `p(x·g) = g⁻¹p(x)g` on basis elements.
    pub fn morphism_checks(&self) -> bool {
        let HopfDescriptor::GroupAlgebra(g) = self.module.hopf() else {
            return false;
        };
        (0..self.module.dim()).all(|x| {
            let pushed: Tensor2 = self
                .module
                .coact(&Vector::basis(x))
                .map_keys(|&(y, h)| (self.p_of(y), h));
            let px = self.p_of(x);
            pushed == Tensor2::basis((px, px))
                && (0..g.order()).all(|h| {
                    let xh = self.module.act_basis(&Vector::basis(x), h);
                    let y = *xh.keys().next().expect("permutation action");
                    self.p_of(y) == g.conj(px, h)
                })
        })
    }
}

pub fn linearize_augmented(a: &AugmentedRack) -> Result<Linearized> {
    let report = check_augmented(a);
    if let Some(&(x, g)) = report.witnesses.first() {
        return Err(Error::Validation(format!(
            "not an augmented rack: p(x·g) ≠ g⁻¹p(x)g at ({}, {})",
            a.carrier()[x],
            a.group().label(g)
        )));
    }
    let mut p = Matrix::zeros(a.group().order(), a.len());
    for x in 0..a.len() {
        p[(a.p(x), x)] = Scalar::one();
    }
    Ok(Linearized {
        module: permutation_module(a),
        p,
    })
}

/// `q(x) = p(x) − 1`.
pub fn rack_q(a: &AugmentedRack) -> Vec<HElem> {
    let e = a.group().identity();
    (0..a.len()).map(|x| &HElem::basis(a.p(x)) - &HElem::basis(e)).collect()
}

/// The inclusion `ker ε → kG` for [`ker_eps_yd`].
pub fn ker_eps_inclusion(group: &FiniteGroup) -> Vec<HElem> {
    let e = group.identity();
    (0..group.order())
        .filter(|&g| g != e)
        .map(|g| &HElem::basis(g) - &HElem::basis(e))
        .collect()
}
