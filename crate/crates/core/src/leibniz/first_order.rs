use super::{heisenberg_voros, lie_quotient, LeibnizAlgebra, LieQuotientData};
use crate::error::Result;
use crate::group_hopf::{HElem, HopfDescriptor};
use crate::linalg::{Tensor2, Vector};
use crate::lm_env::{LieAlgebra, TruncatedPBW};
use crate::yd::{braiding, BraidingMatrix, YdModule};

/// Degree bound of the enveloping algebra behind [`first_order_yd`]; every
/// product formed by the checks on it has degree at most 2.
pub const FIRST_ORDER_DEGREE: usize = 3;

/// `M = k ⊕ g` over the truncated enveloping algebra of `g_Lie`, with
/// `δ(1) = 1⊗1`, `δ(v) = v⊗1 + 1⊗π(v)`, `1·w̄ = 0` and `v·w̄ = [v, w]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstOrder {
    pub module: YdModule,
    pub quotient: LieQuotientData,
    /// `q(1) = 0`, `q(v) = π(v)`.
    pub q: Vec<HElem>,
}

impl FirstOrder {
    /// `x ◁ y = x·(ε̂(y) + π(y))`, where `ε̂` takes the scalar part.
    pub fn shelf_table(&self) -> Vec<Vec<Vector>> {
        let n = self.module.dim();
        let unit = self.module.hopf().one();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let h = if j == 0 { unit.clone() } else { self.q[j].clone() };
                        self.module.act(&Vector::basis(i), &h)
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn first_order(l: &LeibnizAlgebra) -> Result<FirstOrder> {
    let quotient = lie_quotient(l)?;
    let lie = LieAlgebra::new(quotient.quotient.clone())?;
    let pbw = TruncatedPBW::new(lie, FIRST_ORDER_DEGREE);
    let gens = pbw.generators();
    let n = l.dim();

    let mut labels = vec!["1".to_string()];
    labels.extend(l.labels().iter().cloned());

    let mut action = vec![vec![Vector::zero(); gens.len()]];
    for i in 0..n {
        action.push(
            quotient
                .kept
                .iter()
                .map(|&c| l.bracket(i, c).map_keys(|k| k + 1))
                .collect(),
        );
    }

    let mut coaction = vec![Tensor2::basis((0, pbw.unit()))];
    let mut q = vec![HElem::zero()];
    for i in 0..n {
        let pi = quotient.project(&Vector::basis(i));
        let mut d = Tensor2::basis((i + 1, pbw.unit()));
        for (t, c) in pi.iter() {
            d.add_term((0, gens[*t]), c.clone());
        }
        coaction.push(d);
        q.push(pbw.from_lie(&pi));
    }
    let module = YdModule::new(HopfDescriptor::FirstOrderEnveloping(pbw), labels, action, coaction)?;
    Ok(FirstOrder { module, quotient, q })
}

pub fn first_order_yd(l: &LeibnizAlgebra) -> Result<YdModule> {
    Ok(first_order(l)?.module)
}

/// The braiding of [`first_order_yd`] on the Heisenberg-Voros algebra, a
/// 16×16 integer matrix.
pub fn hv_rmatrix() -> BraidingMatrix {
    braiding(&first_order_yd(&heisenberg_voros()).expect("Heisenberg-Voros first-order data"))
}
