//! The enveloping tetramodule `U(g) ⊗ M` of a Lie algebra object
//! `f: M → g`, truncated at a fixed degree.

use serde::Serialize;

use super::{LieAlgebra, TruncatedPBW};
use crate::error::{Error, Result};
use crate::group_hopf::HopfDescriptor;
use crate::leibniz::{lie_quotient, LeibnizAlgebra};
use crate::linalg::{tensor, LinComb, Matrix, Subspace, Tensor2, Vector};
use crate::report::Witnesses;
use crate::yd::{braided_leibniz_from_q, BraidedLeibnizData, YdModule};

/// A right `g`-module `M` with an equivariant map `f: M → g`,
/// `f(m·x) = [f(m), x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieObject {
    lie: LieAlgebra,
    labels: Vec<String>,
    /// `action[m][a] = m · x_a`
    action: Vec<Vec<Vector>>,
    f: Vec<Vector>,
}

impl LieObject {
    pub fn new(lie: LieAlgebra, labels: Vec<String>, action: Vec<Vec<Vector>>, f: Vec<Vector>) -> Result<Self> {
        let (n, k) = (labels.len(), lie.dim());
        if action.len() != n || action.iter().any(|r| r.len() != k) || f.len() != n {
            return Err(Error::Validation(format!(
                "module tables must be {n} x {k} with {n} values of f"
            )));
        }
        if action.iter().flatten().any(|v| v.keys().any(|&i| i >= n)) || f.iter().any(|v| v.keys().any(|&i| i >= k)) {
            return Err(Error::Validation("module table entry out of range".into()));
        }
        let obj = LieObject { lie, labels, action, f };
        for m in 0..n {
            let e = Vector::basis(m);
            for a in 0..k {
                for b in 0..k {
                    let lhs = obj.act(&e, obj.lie.bracket(a, b));
                    let rhs = &obj.act_gen(&obj.act_gen(&e, a), b) - &obj.act_gen(&obj.act_gen(&e, b), a);
                    if lhs != rhs {
                        return Err(Error::Validation(format!(
                            "not a right Lie action at ({}, {}, {})",
                            obj.labels[m],
                            obj.lie.labels()[a],
                            obj.lie.labels()[b]
                        )));
                    }
                }
                let fx = obj.f_of(&obj.act_gen(&e, a));
                if fx != obj.lie.constants().bracket_vec(&obj.f[m], &Vector::basis(a)) {
                    return Err(Error::Validation(format!(
                        "f is not equivariant at ({}, {})",
                        obj.labels[m],
                        obj.lie.labels()[a]
                    )));
                }
            }
        }
        Ok(obj)
    }

    /// `π: g → g_Lie` with `g` acting on itself through lifts.
    pub fn from_leibniz(l: &LeibnizAlgebra) -> Result<Self> {
        let q = lie_quotient(l)?;
        let lie = LieAlgebra::new(q.quotient.clone())?;
        let action = (0..l.dim())
            .map(|m| q.kept.iter().map(|&c| l.bracket(m, c).clone()).collect())
            .collect();
        let f = (0..l.dim()).map(|m| q.project(&Vector::basis(m))).collect();
        LieObject::new(lie, l.labels().to_vec(), action, f)
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn f(&self, m: usize) -> &Vector {
        &self.f[m]
    }

    pub fn f_of(&self, v: &Vector) -> Vector {
        v.map_linear(|&m| self.f[m].clone())
    }

    pub fn act_gen(&self, v: &Vector, a: usize) -> Vector {
        v.map_linear(|&m| self.action[m][a].clone())
    }

    /// Action of an element of `g`.
    pub fn act(&self, v: &Vector, x: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (a, c) in x.iter() {
            out.add_scaled(&self.act_gen(v, *a), c);
        }
        out
    }
}

/// `U(g) ⊗ M` truncated at degree `d`. The carrier basis element `u ⊗ m`
/// has index `u·dim M + m`, so `1 ⊗ M` comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvTetramodule {
    pbw: TruncatedPBW,
    object: LieObject,
}

pub fn build_env(object: &LieObject, degree: usize) -> EnvTetramodule {
    EnvTetramodule {
        pbw: TruncatedPBW::new(object.lie.clone(), degree),
        object: object.clone(),
    }
}

impl EnvTetramodule {
    pub fn pbw(&self) -> &TruncatedPBW {
        &self.pbw
    }

    pub fn object(&self) -> &LieObject {
        &self.object
    }

    pub fn degree(&self) -> usize {
        self.pbw.degree_bound()
    }

    pub fn dim(&self) -> usize {
        self.pbw.dim() * self.object.dim()
    }

    pub fn index(&self, u: usize, m: usize) -> usize {
        u * self.object.dim() + m
    }

    pub fn split(&self, i: usize) -> (usize, usize) {
        (i / self.object.dim(), i % self.object.dim())
    }

    pub fn label(&self, i: usize) -> String {
        let (u, m) = self.split(i);
        format!("{}⊗{}", self.pbw.label(u), self.object.labels[m])
    }

    fn pair(&self, u: &Vector, m: usize) -> Vector {
        u.map_keys(|&w| self.index(w, m))
    }

    /// `(u ⊗ m)·x_a = u x_a ⊗ m + u ⊗ m·x_a`, truncated.
    pub fn right_act_gen(&self, v: &Vector, a: usize) -> Vector {
        let x = Vector::basis(self.pbw.generator(a).expect("degree bound ≥ 1"));
        v.map_linear(|&i| {
            let (u, m) = self.split(i);
            let mut out = self.pair(&self.pbw.mul(&Vector::basis(u), &x), m);
            for (m2, c) in self.object.act_gen(&Vector::basis(m), a).iter() {
                out.add_term(self.index(u, *m2), c.clone());
            }
            out
        })
    }

    pub fn right_act(&self, v: &Vector, h: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (b, c) in h.iter() {
            let w = self
                .pbw
                .monomial(*b)
                .iter()
                .fold(v.clone(), |acc, &a| self.right_act_gen(&acc, a));
            out.add_scaled(&w, c);
        }
        out
    }

    /// `h·(u ⊗ m) = hu ⊗ m`, truncated.
    pub fn left_act(&self, h: &Vector, v: &Vector) -> Vector {
        v.map_linear(|&i| {
            let (u, m) = self.split(i);
            self.pair(&self.pbw.mul(h, &Vector::basis(u)), m)
        })
    }

    /// `u ⊗ m ↦ u₍₁₎ ⊗ (u₍₂₎ ⊗ m)`, keyed `(h, carrier)`.
    pub fn left_coaction(&self, v: &Vector) -> Tensor2 {
        v.map_linear(|&i| {
            let (u, m) = self.split(i);
            self.pbw.coproduct_basis(u).map_keys(|&(a, b)| (a, self.index(b, m)))
        })
    }

    /// `u ⊗ m ↦ (u₍₁₎ ⊗ m) ⊗ u₍₂₎`, keyed `(carrier, h)`.
    pub fn right_coaction(&self, v: &Vector) -> Tensor2 {
        v.map_linear(|&i| {
            let (u, m) = self.split(i);
            self.pbw.coproduct_basis(u).map_keys(|&(a, b)| (self.index(a, m), b))
        })
    }

    /// `φ(u ⊗ m) = u f(m)`, truncated.
    pub fn phi(&self, v: &Vector) -> Vector {
        v.map_linear(|&i| {
            let (u, m) = self.split(i);
            self.pbw.mul(&Vector::basis(u), &self.pbw.from_lie(self.object.f(m)))
        })
    }

    /// `S(h₍₁₎) v h₍₂₎`.
    pub fn adjoint(&self, v: &Vector, h: &Vector) -> Vector {
        let mut out = Vector::zero();
        for ((h1, h2), c) in self.pbw.coproduct(h).iter() {
            let w = self.right_act(&self.left_act(&self.pbw.antipode_basis(*h1), v), &Vector::basis(*h2));
            out.add_scaled(&w, c);
        }
        out
    }

    /// `T(n) = −S(n₍₋₁₎) n₍₀₎ S(n₍₁₎)`.
    pub fn antipode_t(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for ((c, hr), s) in self.right_coaction(v).iter() {
            for ((hl, c2), t) in self.left_coaction(&Vector::basis(*c)).iter() {
                let w = self.right_act(
                    &self.left_act(&self.pbw.antipode_basis(*hl), &Vector::basis(*c2)),
                    &self.pbw.antipode_basis(*hr),
                );
                out.add_scaled(&w, &-(s * t));
            }
        }
        out
    }

    /// Carrier basis elements `u ⊗ m` with `deg u ≤ k`.
    fn basis_up_to(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(move |&i| self.pbw.degree(self.split(i).0) <= k)
    }
}

/// `T` on `1 ⊗ m`.
pub fn antipode_t(e: &EnvTetramodule, m: usize) -> Vector {
    e.antipode_t(&Vector::basis(e.index(0, m)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBoundedReport {
    pub ok: bool,
    /// Largest degree of the `U(g)` factor in the checked basis elements.
    pub checked_degree: usize,
    pub witnesses: Witnesses<usize>,
}

/// `f ∘ T = S ∘ f` on carrier basis elements of degree `≤ d − 1`.
pub fn check_antipode_t(e: &EnvTetramodule) -> DegreeBoundedReport {
    let k = e.degree().saturating_sub(1);
    let mut witnesses = Witnesses::default();
    for i in e.basis_up_to(k) {
        let v = Vector::basis(i);
        if e.phi(&e.antipode_t(&v)) != e.pbw.antipode(&e.phi(&v)) {
            witnesses.push(i);
        }
    }
    DegreeBoundedReport {
        ok: witnesses.is_empty(),
        checked_degree: k,
        witnesses,
    }
}

/// `Δφ(v) = v₍₋₁₎ ⊗ φ(v₍₀₎) + φ(v₍₀₎) ⊗ v₍₁₎` on carrier basis elements of
/// degree `≤ d − 1`.
pub fn check_coderivation(e: &EnvTetramodule) -> DegreeBoundedReport {
    let k = e.degree().saturating_sub(1);
    let mut witnesses = Witnesses::default();
    for i in e.basis_up_to(k) {
        let v = Vector::basis(i);
        let lhs = e.pbw.coproduct(&e.phi(&v));
        let mut rhs = Tensor2::zero();
        for ((h, c), s) in e.left_coaction(&v).iter() {
            rhs.add_scaled(&tensor(&Vector::basis(*h), &e.phi(&Vector::basis(*c))), s);
        }
        for ((c, h), s) in e.right_coaction(&v).iter() {
            rhs.add_scaled(&tensor(&e.phi(&Vector::basis(*c)), &Vector::basis(*h)), s);
        }
        if lhs != rhs {
            witnesses.push(i);
        }
    }
    DegreeBoundedReport {
        ok: witnesses.is_empty(),
        checked_degree: k,
        witnesses,
    }
}

/// `φ(x·v) = xφ(v)` and `φ(v·x) = φ(v)x` for generators `x` and carrier
/// basis elements of degree `≤ d − 2`.
pub fn check_bimodule(e: &EnvTetramodule) -> DegreeBoundedReport {
    let Some(k) = e.degree().checked_sub(2) else {
        return DegreeBoundedReport {
            ok: true,
            checked_degree: 0,
            witnesses: Witnesses::default(),
        };
    };
    let mut witnesses = Witnesses::default();
    for i in e.basis_up_to(k) {
        let v = Vector::basis(i);
        let fails = (0..e.object.lie.dim()).any(|a| {
            let x = Vector::basis(e.pbw.generator(a).expect("degree ≥ 2"));
            e.phi(&e.left_act(&x, &v)) != e.pbw.mul(&x, &e.phi(&v))
                || e.phi(&e.right_act_gen(&v, a)) != e.pbw.mul(&e.phi(&v), &x)
        });
        if fails {
            witnesses.push(i);
        }
    }
    DegreeBoundedReport {
        ok: witnesses.is_empty(),
        checked_degree: k,
        witnesses,
    }
}

/// The left-coinvariant part `{n : n₍₋₁₎ ⊗ n₍₀₎ = 1 ⊗ n}` as a
/// Yetter-Drinfel'd module under the adjoint action and the inherited right
/// coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvPart {
    pub subspace: Subspace,
    pub module: YdModule,
}

impl InvPart {
    pub fn vector(&self, r: usize) -> Vector {
        Vector::from_dense(&self.subspace.basis()[r])
    }
}

pub fn inv_part(e: &EnvTetramodule) -> Result<InvPart> {
    let dim = e.dim();
    let hd = e.pbw.dim();
    let mut a = Matrix::zeros(hd * dim, dim);
    for i in 0..dim {
        let mut d = e.left_coaction(&Vector::basis(i));
        d.add_term((e.pbw.unit(), i), -crate::linalg::Scalar::one());
        for ((h, c), s) in d.iter() {
            a[(h * dim + c, i)] = s.clone();
        }
    }
    let subspace = Subspace::kernel(&a);
    let coords = |v: &Vector| -> Result<Vector> {
        subspace
            .coordinates(&v.to_dense(dim))
            .map(|c| Vector::from_dense(&c))
            .ok_or_else(|| Error::Consistency("invariant part is not closed under the structure maps".into()))
    };
    let basis: Vec<Vector> = subspace.basis().iter().map(|b| Vector::from_dense(b)).collect();
    let labels = basis
        .iter()
        .enumerate()
        .map(|(r, b)| match b.iter().next() {
            Some((&i, c)) if b.len() == 1 && c.is_one() && i < e.object.dim() => e.object.labels[i].clone(),
            _ => format!("n{}", r + 1),
        })
        .collect();
    let gens = e.pbw.generators();
    let action = basis
        .iter()
        .map(|b| {
            gens.iter()
                .map(|&g| coords(&e.adjoint(b, &Vector::basis(g))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let coaction = basis
        .iter()
        .map(|b| {
            let rho = e.right_coaction(b);
            let mut by_h: std::collections::BTreeMap<usize, Vector> = Default::default();
            for ((c, h), s) in rho.iter() {
                by_h.entry(*h).or_default().add_term(*c, s.clone());
            }
            let mut out = Tensor2::zero();
            for (h, v) in by_h {
                for (r, s) in coords(&v)?.iter() {
                    out.add_term((*r, h), s.clone());
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let module = YdModule::new(
        HopfDescriptor::FirstOrderEnveloping(e.pbw.clone()),
        labels,
        action,
        coaction,
    )?;
    Ok(InvPart { subspace, module })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FTildeReport {
    /// `ε(f̃(n)) = 0`.
    pub im_in_ker_eps: bool,
    /// `Δ̃(f̃(n)) = f̃(n₍₀₎) ⊗ n₍₁₎`.
    pub colinear: bool,
    /// `f̃(n ⊳ h) = S(h₍₁₎) f̃(n) h₍₂₎` for PBW monomials `h` of degree `≤ d − 1`.
    pub yd_morphism: bool,
    /// Checks (1) and (2) are exact; (3) is exact up to the stated degree.
    pub checked_degree: usize,
    pub ker_eps_witnesses: Witnesses<usize>,
    pub colinear_witnesses: Witnesses<usize>,
    pub yd_morphism_witnesses: Witnesses<(usize, usize)>,
}

impl FTildeReport {
    pub fn ok(&self) -> bool {
        self.im_in_ker_eps && self.colinear && self.yd_morphism
    }
}

/// The three properties of `f̃ = φ|_{inv}` on every basis element of the
/// invariant part.
pub fn f_tilde_checks(e: &EnvTetramodule) -> Result<FTildeReport> {
    let inv = inv_part(e)?;
    let k = e.degree().saturating_sub(1);
    let mut ker_eps_witnesses = Witnesses::default();
    let mut colinear_witnesses = Witnesses::default();
    let mut yd_morphism_witnesses = Witnesses::default();
    for r in 0..inv.subspace.dim() {
        let n = inv.vector(r);
        let fn_ = e.phi(&n);
        if !e.pbw.counit(&fn_).is_zero() {
            ker_eps_witnesses.push(r);
        }
        let mut lhs = e.pbw.coproduct(&fn_);
        for (h, c) in fn_.iter() {
            lhs.add_term((e.pbw.unit(), *h), -c);
        }
        let mut rhs = Tensor2::zero();
        for ((c, h), s) in e.right_coaction(&n).iter() {
            rhs.add_scaled(&tensor(&e.phi(&Vector::basis(*c)), &Vector::basis(*h)), s);
        }
        if lhs != rhs {
            colinear_witnesses.push(r);
        }
        for h in (0..e.pbw.dim()).filter(|&h| e.pbw.degree(h) <= k) {
            let hv = Vector::basis(h);
            if e.phi(&e.adjoint(&n, &hv)) != e.pbw.adjoint(&fn_, &hv) {
                yd_morphism_witnesses.push((r, h));
            }
        }
    }
    Ok(FTildeReport {
        im_in_ker_eps: ker_eps_witnesses.is_empty(),
        colinear: colinear_witnesses.is_empty(),
        yd_morphism: yd_morphism_witnesses.is_empty(),
        checked_degree: k,
        ker_eps_witnesses,
        colinear_witnesses,
        yd_morphism_witnesses,
    })
}

/// `x ◁ y = x f̃(y)` on the invariant part together with its
/// Yetter-Drinfel'd braiding. Needs degree ≥ 2 so that the checks on `H`
/// stay exact.
pub fn theorem1_bracket(e: &EnvTetramodule) -> Result<BraidedLeibnizData> {
    if e.degree() < 2 {
        return Err(Error::Validation(format!(
            "degree {} is too small; need at least 2",
            e.degree()
        )));
    }
    let report = f_tilde_checks(e)?;
    if !report.ok() {
        return Err(Error::Validation("f̃ fails the checks required for the bracket".into()));
    }
    let inv = inv_part(e)?;
    let q: Vec<Vector> = (0..inv.subspace.dim()).map(|r| e.phi(&inv.vector(r))).collect();
    braided_leibniz_from_q(&inv.module, &q)
}

/// Checks that the two coactions of `U(g) ⊗ M` commute.
pub fn check_bicomodule(e: &EnvTetramodule) -> bool {
    (0..e.dim()).all(|i| {
        let v = Vector::basis(i);
        let mut a: LinComb<(usize, usize, usize)> = LinComb::zero();
        for ((h, c), s) in e.left_coaction(&v).iter() {
            for ((c2, h2), t) in e.right_coaction(&Vector::basis(*c)).iter() {
                a.add_term((*h, *c2, *h2), s * t);
            }
        }
        let mut b: LinComb<(usize, usize, usize)> = LinComb::zero();
        for ((c, h2), s) in e.right_coaction(&v).iter() {
            for ((h, c2), t) in e.left_coaction(&Vector::basis(*c)).iter() {
                b.add_term((*h, *c2, *h2), s * t);
            }
        }
        a == b
    })
}
