use crate::error::{Error, Result};
use crate::group_hopf::{HElem, HopfDescriptor};
use crate::linalg::{Field, LinComb, Tensor2, Vector};

/// A right module and right comodule over a [`HopfDescriptor`].
///
/// `action[m][k]` is `e_m · g_k` for the `k`-th generator of the descriptor,
/// and `coaction[m]` is `δ(e_m) = Σ e_{m₀} ⊗ h` keyed by `(m₀, h)`.
/// Construction checks that the action respects the descriptor's relations,
/// that the coaction is counital and coassociative, and that coaction values
/// are representable (degree ≤ 1 for enveloping descriptors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdModule {
    hopf: HopfDescriptor,
    labels: Vec<String>,
    action: Vec<Vec<Vector>>,
    coaction: Vec<Tensor2>,
}

impl YdModule {
    pub fn new(
        hopf: HopfDescriptor,
        labels: Vec<String>,
        action: Vec<Vec<Vector>>,
        coaction: Vec<Tensor2>,
    ) -> Result<Self> {
        let n = labels.len();
        let gens = hopf.generators();
        if action.len() != n || action.iter().any(|r| r.len() != gens.len()) {
            return Err(Error::Validation(format!(
                "action table must be {n} x {} (basis x generators)",
                gens.len()
            )));
        }
        if coaction.len() != n {
            return Err(Error::Validation(format!(
                "coaction has {} entries, expected {n}",
                coaction.len()
            )));
        }
        if action.iter().flatten().any(|v| v.keys().any(|&k| k >= n)) {
            return Err(Error::Validation("action value out of range".into()));
        }
        for (m, c) in coaction.iter().enumerate() {
            if let Some((k, h)) = c.keys().find(|(k, h)| *k >= n || *h >= hopf.dim()) {
                return Err(Error::Validation(format!(
                    "coaction of {} has entry ({k}, {h}) out of range",
                    labels[m]
                )));
            }
            if let Some((_, h)) = c.keys().find(|(_, h)| hopf.degree(*h) > 1) {
                return Err(Error::DegreeOverflow(format!(
                    "coaction of {} uses {}, outside the degree ≤ 1 part",
                    labels[m],
                    hopf.label(*h)
                )));
            }
        }
        let module = YdModule {
            hopf,
            labels,
            action,
            coaction,
        };
        module.validate_module()?;
        module.validate_comodule()?;
        Ok(module)
    }

    fn validate_module(&self) -> Result<()> {
        let n = self.dim();
        match &self.hopf {
            HopfDescriptor::GroupAlgebra(g) => {
                for m in 0..n {
                    let e = Vector::basis(m);
                    if self.act_generator(&e, g.identity()) != e {
                        return Err(Error::Validation(format!(
                            "{} · e ≠ {}",
                            self.labels[m], self.labels[m]
                        )));
                    }
                    for a in 0..g.order() {
                        for b in 0..g.order() {
                            let lhs = self.act_generator(&self.act_generator(&e, a), b);
                            if lhs != self.act_generator(&e, g.mul(a, b)) {
                                return Err(Error::Validation(format!(
                                    "not a right module: ({} · {}) · {}",
                                    self.labels[m],
                                    g.label(a),
                                    g.label(b)
                                )));
                            }
                        }
                    }
                }
            }
            HopfDescriptor::FirstOrderEnveloping(u) => {
                // m·[x_a, x_b] = (m·x_a)·x_b − (m·x_b)·x_a
                let k = u.generators().len();
                for m in 0..n {
                    let e = Vector::basis(m);
                    for a in 0..k {
                        for b in 0..k {
                            let lhs = u.lie().bracket(a, b).iter().fold(Vector::zero(), |mut acc, (c, s)| {
                                acc.add_scaled(&self.act_generator(&e, *c), s);
                                acc
                            });
                            let rhs = &self.act_generator(&self.act_generator(&e, a), b)
                                - &self.act_generator(&self.act_generator(&e, b), a);
                            if lhs != rhs {
                                return Err(Error::Validation(format!(
                                    "not a right Lie module at ({}, {}, {})",
                                    self.labels[m],
                                    u.lie().labels()[a],
                                    u.lie().labels()[b]
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_comodule(&self) -> Result<()> {
        for m in 0..self.dim() {
            let delta = &self.coaction[m];
            let counit: Vector = delta
                .iter()
                .map(|((k, h), c)| (*k, c * &self.hopf.counit_basis(*h)))
                .collect();
            if counit != Vector::basis(m) {
                return Err(Error::Validation(format!(
                    "coaction is not counital at {}",
                    self.labels[m]
                )));
            }
            let mut left = LinComb::zero();
            let mut right = LinComb::zero();
            for ((k, h), c) in delta.iter() {
                for ((k2, h2), d) in self.coaction[*k].iter() {
                    left.add_term((*k2, *h2, *h), c * d);
                }
                for ((h1, h2), d) in self.hopf.coproduct_basis(*h).iter() {
                    right.add_term((*k, *h1, *h2), c * d);
                }
            }
            if left != right {
                return Err(Error::Validation(format!(
                    "coaction is not coassociative at {}",
                    self.labels[m]
                )));
            }
        }
        Ok(())
    }

    pub fn hopf(&self) -> &HopfDescriptor {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn action_table(&self) -> &[Vec<Vector>] {
        &self.action
    }

    pub fn coaction_table(&self) -> &[Tensor2] {
        &self.coaction
    }

    /// `v · g_k` for the generator at position `k`.
    pub fn act_generator(&self, v: &Vector, k: usize) -> Vector {
        v.map_linear(|&m| self.action[m][k].clone())
    }

    /// `v · b_i` for a basis element of the Hopf algebra.
    pub fn act_basis(&self, v: &Vector, i: usize) -> Vector {
        self.hopf
            .word(i)
            .into_iter()
            .fold(v.clone(), |acc, k| self.act_generator(&acc, k))
    }

    pub fn act(&self, v: &Vector, h: &HElem) -> Vector {
        let mut out = Vector::zero();
        for (i, c) in h.iter() {
            out.add_scaled(&self.act_basis(v, *i), c);
        }
        out
    }

    pub fn coact(&self, v: &Vector) -> Tensor2 {
        v.map_linear(|&m| self.coaction[m].clone())
    }

    pub fn has_trivial_coaction(&self) -> bool {
        let one = self.hopf.unit();
        (0..self.dim()).all(|m| self.coaction[m] == Tensor2::basis((m, one)))
    }

    pub fn over_field(&self, field: &Field) -> Result<Self> {
        let action = self
            .action
            .iter()
            .map(|row| row.iter().map(|v| v.try_map_coeffs(|c| field.convert(c))).collect())
            .collect::<Result<_>>()?;
        let coaction = self
            .coaction
            .iter()
            .map(|t| t.try_map_coeffs(|c| field.convert(c)))
            .collect::<Result<_>>()?;
        YdModule::new(self.hopf.over_field(field)?, self.labels.clone(), action, coaction)
    }
}
