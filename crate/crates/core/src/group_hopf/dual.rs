//! Functions on a finite augmented rack: the pullback `p*: k[G] → k[X]`.

use serde::Serialize;

use crate::linalg::{Scalar, Tensor2, Vector};
use crate::rack::AugmentedRack;
use crate::report::Witnesses;

pub const MODULE_READING: &str =
    "module structures read as pointwise multiplication on k[X] and k[G]; comodule structures checked as stated";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualReport {
    /// `ρ_X ∘ p* = (p* ⊗ id) ∘ ad` on every delta function of `G`.
    pub p_star_right_colinear: bool,
    /// `p*` preserves the unit and pointwise products.
    pub p_star_bimodule: bool,
    /// Delta functions `δ_g` where the colinearity square fails.
    pub colinear_witnesses: Witnesses<usize>,
    /// Pairs `(g, h)` where `p*(δ_g δ_h) ≠ p*(δ_g) p*(δ_h)`.
    pub bimodule_witnesses: Witnesses<(usize, usize)>,
    pub interpretation: &'static str,
}

/// Works on delta bases of `k[X]` and `k[G]`. The right coaction on `k[X]`
/// is `ρ(f)(x, g) = f(x·g)`; the coaction on `k[G]` is the adjoint one,
/// `f ↦ f₍₂₎ ⊗ S(f₍₁₎) f₍₃₎`, expanded literally from the coproduct
/// `Δδ_g = Σ_{ab=g} δ_a ⊗ δ_b`, antipode `Sδ_a = δ_{a⁻¹}` and pointwise
/// products.
pub fn function_dual_check(a: &AugmentedRack) -> DualReport {
    let g = a.group();
    let order = g.order();
    let p_star = |f: &Vector| -> Vector { (0..a.len()).map(|x| (x, f.coeff(&a.p(x)))).collect() };
    let rho_x = |f: &Vector| -> Tensor2 {
        let mut out = Tensor2::zero();
        for x in 0..a.len() {
            for k in 0..order {
                out.add_term((x, k), f.coeff(&a.act(x, k)));
            }
        }
        out
    };
    let pointwise = |u: &Vector, v: &Vector| -> Vector { u.iter().map(|(i, c)| (*i, c * &v.coeff(i))).collect() };
    let adjoint = |target: usize| -> Tensor2 {
        let mut out = Tensor2::zero();
        for x in 0..order {
            for y in 0..order {
                let z = g.mul(g.inv(g.mul(x, y)), target);
                // δ_x ⊗ δ_y ⊗ δ_z with xyz = target
                let s = Vector::basis(g.inv(x));
                let prod = pointwise(&s, &Vector::basis(z));
                for (k, c) in prod.iter() {
                    out.add_term((y, *k), c.clone());
                }
            }
        }
        out
    };

    let mut colinear_witnesses = Witnesses::default();
    for t in 0..order {
        let delta = Vector::basis(t);
        let lhs = rho_x(&p_star(&delta));
        let mut rhs = Tensor2::zero();
        for ((b, k), c) in adjoint(t).iter() {
            for (x, d) in p_star(&Vector::basis(*b)).iter() {
                rhs.add_term((*x, *k), c * d);
            }
        }
        if lhs != rhs {
            colinear_witnesses.push(t);
        }
    }

    let mut bimodule_witnesses = Witnesses::default();
    let one_g: Vector = (0..order).map(|h| (h, Scalar::one())).collect();
    let one_x: Vector = (0..a.len()).map(|x| (x, Scalar::one())).collect();
    let unit_ok = p_star(&one_g) == one_x;
    for s in 0..order {
        for t in 0..order {
            let (ds, dt) = (Vector::basis(s), Vector::basis(t));
            if p_star(&pointwise(&ds, &dt)) != pointwise(&p_star(&ds), &p_star(&dt)) {
                bimodule_witnesses.push((s, t));
            }
        }
    }
    DualReport {
        p_star_right_colinear: colinear_witnesses.is_empty(),
        p_star_bimodule: unit_ok && bimodule_witnesses.is_empty(),
        colinear_witnesses,
        bimodule_witnesses,
        interpretation: MODULE_READING,
    }
}
