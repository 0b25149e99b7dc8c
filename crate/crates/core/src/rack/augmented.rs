use serde::Serialize;

use super::{check_shelf, FiniteGroup, FiniteShelf, Perm};
use crate::error::{Error, Result};
use crate::report::Witnesses;

/// A right `G`-set `X` with a map `p: X → G`. Construction checks that the
/// action is a right action; the augmentation identity is checked by
/// [`check_augmented`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedRack {
    carrier: Vec<String>,
    group: FiniteGroup,
    action: Vec<Vec<usize>>,
    p: Vec<usize>,
}

impl AugmentedRack {
    pub fn new(carrier: Vec<String>, group: FiniteGroup, action: Vec<Vec<usize>>, p: Vec<usize>) -> Result<Self> {
        let n = carrier.len();
        let order = group.order();
        if action.len() != n || action.iter().any(|r| r.len() != order) {
            return Err(Error::Validation(format!("action table is not {n}x{order}")));
        }
        if p.len() != n {
            return Err(Error::Validation(format!("p has {} entries, expected {n}", p.len())));
        }
        if let Some(x) = p.iter().position(|&g| g >= order) {
            return Err(Error::Validation(format!("p({}) out of range", carrier[x])));
        }
        for (x, row) in action.iter().enumerate() {
            if let Some(g) = row.iter().position(|&y| y >= n) {
                return Err(Error::Validation(format!("action entry ({x},{g}) out of range")));
            }
            if row[group.identity()] != x {
                return Err(Error::Validation(format!("{}·e ≠ {}", carrier[x], carrier[x])));
            }
        }
        for x in 0..n {
            for g in 0..order {
                for h in 0..order {
                    if action[action[x][g]][h] != action[x][group.mul(g, h)] {
                        return Err(Error::Validation(format!(
                            "not a right action: ({}·{})·{} ≠ {}·({}{})",
                            carrier[x],
                            group.label(g),
                            group.label(h),
                            carrier[x],
                            group.label(g),
                            group.label(h)
                        )));
                    }
                }
            }
        }
        Ok(AugmentedRack {
            carrier,
            group,
            action,
            p,
        })
    }

    /// `X = G`, `p = id`, `x·g = g⁻¹xg`.
    pub fn conjugation(group: &FiniteGroup) -> Self {
        let n = group.order();
        let action = (0..n).map(|x| (0..n).map(|g| group.conj(x, g)).collect()).collect();
        AugmentedRack::new(group.elements().to_vec(), group.clone(), action, (0..n).collect())
            .expect("conjugation is a right action")
    }

    /// Trivial action of `group` on `carrier` with the given `p`.
    pub fn trivial_action(carrier: Vec<String>, group: &FiniteGroup, p: Vec<usize>) -> Result<Self> {
        let action = (0..carrier.len()).map(|x| vec![x; group.order()]).collect();
        AugmentedRack::new(carrier, group.clone(), action, p)
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn action_table(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn p_table(&self) -> &[usize] {
        &self.p
    }

    /// `x·g`
    pub fn act(&self, x: usize, g: usize) -> usize {
        self.action[x][g]
    }

    pub fn p(&self, x: usize) -> usize {
        self.p[x]
    }

    /// Replaces `p`, keeping the action. Used to build non-equivariant
    /// controls.
    pub fn with_p(&self, p: Vec<usize>) -> Result<Self> {
        AugmentedRack::new(self.carrier.clone(), self.group.clone(), self.action.clone(), p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugmentedReport {
    pub ok: bool,
    /// Pairs `(x, g)` with `p(x·g) ≠ g⁻¹ p(x) g`.
    pub witnesses: Witnesses<(usize, usize)>,
}

pub fn check_augmented(a: &AugmentedRack) -> AugmentedReport {
    let g = a.group();
    let mut witnesses = Witnesses::default();
    for x in 0..a.len() {
        for h in 0..g.order() {
            if a.p(a.act(x, h)) != g.conj(a.p(x), h) {
                witnesses.push((x, h));
            }
        }
    }
    AugmentedReport {
        ok: witnesses.is_empty(),
        witnesses,
    }
}

fn require_augmented(a: &AugmentedRack) -> Result<()> {
    let report = check_augmented(a);
    match report.witnesses.first() {
        None => Ok(()),
        Some(&(x, g)) => Err(Error::Validation(format!(
            "augmentation identity fails at (x, g) = ({}, {})",
            a.carrier[x],
            a.group.label(g)
        ))),
    }
}

/// `x ◁ y = x·p(y)`.
pub fn induced_rack(a: &AugmentedRack) -> Result<FiniteShelf> {
    require_augmented(a)?;
    let n = a.len();
    let op = (0..n).map(|x| (0..n).map(|y| a.act(x, a.p(y))).collect()).collect();
    FiniteShelf::new(a.carrier.clone(), op)
}

/// Augments a rack over its inner group, the subgroup of `Sym(X)` generated
/// by the right translations, with `p(y)` the translation by `y`.
pub fn inner_augmentation(s: &FiniteShelf) -> Result<AugmentedRack> {
    let report = check_shelf(s);
    if !report.is_rack {
        return Err(Error::Validation("inner augmentation needs a rack".into()));
    }
    let n = s.len();
    let columns: Vec<Perm> = (0..n)
        .map(|y| Perm::from_images(s.column(y)).expect("rack columns are bijections"))
        .collect();
    let (group, perms) = FiniteGroup::generated_by(s.elements(), &columns)?;
    let p = columns
        .iter()
        .map(|c| perms.iter().position(|q| q == c).expect("generator is in the group"))
        .collect();
    let action = (0..n).map(|x| perms.iter().map(|g| g.apply(x)).collect()).collect();
    AugmentedRack::new(s.elements().to_vec(), group, action, p)
}

/// Set-level braiding `c(x, y) = (y, x·p₂(y))` from `X × Y` to `Y × X`.
/// Pairs are indexed `x + |X|·y`, first factor fastest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RackBraiding {
    pub left_size: usize,
    pub right_size: usize,
    /// `map[x + |X|·y] = (y, x·p₂(y))`
    pub map: Vec<(usize, usize)>,
}

impl RackBraiding {
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.map[x + self.left_size * y]
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.map.len()];
        for &(y, x) in &self.map {
            // image lives in Y × X
            hit[y + self.right_size * x] = true;
        }
        !hit.contains(&false)
    }
}

/// The tensor product `X × Y` with diagonal action and `p(x, y) = p₁(x)p₂(y)`,
/// together with the braiding `c_{X,Y}`.
pub fn rack_tensor_and_braiding(a1: &AugmentedRack, a2: &AugmentedRack) -> Result<(AugmentedRack, RackBraiding)> {
    if a1.group != a2.group {
        return Err(Error::Argument("augmented racks are over different groups".into()));
    }
    let g = &a1.group;
    let (nx, ny) = (a1.len(), a2.len());
    let mut carrier = Vec::with_capacity(nx * ny);
    let mut action = Vec::with_capacity(nx * ny);
    let mut p = Vec::with_capacity(nx * ny);
    for y in 0..ny {
        for x in 0..nx {
            carrier.push(format!("({},{})", a1.carrier[x], a2.carrier[y]));
            action.push((0..g.order()).map(|h| a1.act(x, h) + nx * a2.act(y, h)).collect());
            p.push(g.mul(a1.p(x), a2.p(y)));
        }
    }
    let tensor = AugmentedRack::new(carrier, g.clone(), action, p)?;
    let map = (0..ny)
        .flat_map(|y| (0..nx).map(move |x| (x, y)))
        .map(|(x, y)| (y, a1.act(x, a2.p(y))))
        .collect();
    Ok((
        tensor,
        RackBraiding {
            left_size: nx,
            right_size: ny,
            map,
        },
    ))
}

/// Triples of `X³` where `(c×id)(id×c)(c×id) ≠ (id×c)(c×id)(id×c)` for the
/// self-braiding of `a`.
pub fn set_ybe_failures(a: &AugmentedRack) -> Witnesses<(usize, usize, usize)> {
    let c = |x: usize, y: usize| (y, a.act(x, a.p(y)));
    let c12 = |(x, y, z): (usize, usize, usize)| {
        let (u, v) = c(x, y);
        (u, v, z)
    };
    let c23 = |(x, y, z): (usize, usize, usize)| {
        let (u, v) = c(y, z);
        (x, u, v)
    };
    let mut out = Witnesses::default();
    let n = a.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t = (x, y, z);
                if c12(c23(c12(t))) != c23(c12(c23(t))) {
                    out.push(t);
                }
            }
        }
    }
    out
}
