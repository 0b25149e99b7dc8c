//! JSON file formats. Indices in files are 0-based; scalars are strings
//! `"n"` or `"n/d"` (plain JSON integers are accepted on input).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::group_hopf::{GroupAlgebraElement, HopfDescriptor};
use crate::leibniz::StructureConstants;
use crate::linalg::{Matrix, Scalar, Tensor2, Vector};
use crate::lm_env::{LieAlgebra, TruncatedPBW};
use crate::rack::{AugmentedRack, FiniteGroup, FiniteShelf};
use crate::yd::{BraidedLeibnizData, BraidingMatrix, YdModule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RackJson {
    pub elements: Vec<String>,
    pub op: Vec<Vec<usize>>,
}

impl From<&FiniteShelf> for RackJson {
    fn from(s: &FiniteShelf) -> Self {
        RackJson {
            elements: s.elements().to_vec(),
            op: s.table().to_vec(),
        }
    }
}

impl TryFrom<RackJson> for FiniteShelf {
    type Error = Error;
    fn try_from(j: RackJson) -> Result<Self> {
        FiniteShelf::new(j.elements, j.op)
    }
}

/// A group either by Cayley table or by name (`"S3"`, `"Z4"`, `"trivial"`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupJson {
    Named(String),
    Table {
        elements: Vec<String>,
        mul: Vec<Vec<usize>>,
    },
}

impl From<&FiniteGroup> for GroupJson {
    fn from(g: &FiniteGroup) -> Self {
        GroupJson::Table {
            elements: g.elements().to_vec(),
            mul: g.table().to_vec(),
        }
    }
}

impl TryFrom<GroupJson> for FiniteGroup {
    type Error = Error;
    fn try_from(j: GroupJson) -> Result<Self> {
        match j {
            GroupJson::Named(name) => FiniteGroup::named(&name),
            GroupJson::Table { elements, mul } => FiniteGroup::from_table(elements, mul),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentedJson {
    pub rack_elements: Vec<String>,
    pub group: GroupJson,
    pub action: Vec<Vec<usize>>,
    pub p: Vec<usize>,
}

impl From<&AugmentedRack> for AugmentedJson {
    fn from(a: &AugmentedRack) -> Self {
        AugmentedJson {
            rack_elements: a.carrier().to_vec(),
            group: a.group().into(),
            action: a.action_table().to_vec(),
            p: a.p_table().to_vec(),
        }
    }
}

impl TryFrom<AugmentedJson> for AugmentedRack {
    type Error = Error;
    fn try_from(j: AugmentedJson) -> Result<Self> {
        AugmentedRack::new(j.rack_elements, j.group.try_into()?, j.action, j.p)
    }
}

fn vector_to_map(v: &Vector) -> BTreeMap<String, Scalar> {
    v.iter().map(|(k, c)| (k.to_string(), c.clone())).collect()
}

fn map_to_vector(m: &BTreeMap<String, Scalar>, dim: usize) -> Result<Vector> {
    m.iter()
        .map(|(k, c)| {
            let i: usize = k.parse().map_err(|_| Error::Parse(format!("bad basis index {k:?}")))?;
            if i >= dim {
                return Err(Error::Validation(format!("basis index {i} out of range for dim {dim}")));
            }
            Ok((i, c.clone()))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub out: BTreeMap<String, Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeibnizJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

impl From<&StructureConstants> for LeibnizJson {
    fn from(c: &StructureConstants) -> Self {
        LeibnizJson {
            dim: c.dim(),
            basis: c.labels().to_vec(),
            brackets: c
                .nonzero()
                .map(|(i, j, v)| BracketEntry {
                    i,
                    j,
                    out: vector_to_map(v),
                })
                .collect(),
        }
    }
}

impl TryFrom<LeibnizJson> for StructureConstants {
    type Error = Error;
    fn try_from(j: LeibnizJson) -> Result<Self> {
        if j.dim != j.basis.len() {
            return Err(Error::Validation(format!(
                "dim {} but {} basis labels",
                j.dim,
                j.basis.len()
            )));
        }
        let entries = j
            .brackets
            .iter()
            .map(|b| Ok((b.i, b.j, map_to_vector(&b.out, j.dim)?)))
            .collect::<Result<Vec<_>>>()?;
        StructureConstants::from_entries(j.basis, entries)
    }
}

/// `{"group": ..., "coeffs": {"<element label>": "num/den"}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupElementJson {
    pub group: GroupJson,
    pub coeffs: BTreeMap<String, Scalar>,
}

impl From<&GroupAlgebraElement> for GroupElementJson {
    fn from(x: &GroupAlgebraElement) -> Self {
        GroupElementJson {
            group: (&x.group).into(),
            coeffs: x
                .coeffs
                .iter()
                .map(|(g, c)| (x.group.label(*g).to_string(), c.clone()))
                .collect(),
        }
    }
}

impl TryFrom<GroupElementJson> for GroupAlgebraElement {
    type Error = Error;
    fn try_from(j: GroupElementJson) -> Result<Self> {
        let group: FiniteGroup = j.group.try_into()?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|(l, c)| {
                let g = group
                    .index_of(l)
                    .ok_or_else(|| Error::Validation(format!("unknown group element {l:?}")))?;
                Ok((g, c.clone()))
            })
            .collect::<Result<Vector>>()?;
        GroupAlgebraElement::new(group, coeffs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HopfJson {
    Group(GroupJson),
    Enveloping { lie: LeibnizJson, degree: usize },
}

impl From<&HopfDescriptor> for HopfJson {
    fn from(h: &HopfDescriptor) -> Self {
        match h {
            HopfDescriptor::GroupAlgebra(g) => HopfJson::Group(g.into()),
            HopfDescriptor::FirstOrderEnveloping(u) => HopfJson::Enveloping {
                lie: u.lie().constants().into(),
                degree: u.degree_bound(),
            },
        }
    }
}

impl TryFrom<HopfJson> for HopfDescriptor {
    type Error = Error;
    fn try_from(j: HopfJson) -> Result<Self> {
        Ok(match j {
            HopfJson::Group(g) => HopfDescriptor::GroupAlgebra(g.try_into()?),
            HopfJson::Enveloping { lie, degree } => {
                HopfDescriptor::FirstOrderEnveloping(TruncatedPBW::new(LieAlgebra::new(lie.try_into()?)?, degree))
            }
        })
    }
}

/// A module-comodule over a Hopf descriptor. `action[m][k]` is `m` times the
/// `k`-th generator (every group element, or the Lie generators); `coaction[m]`
/// lists `[m0, h, c]` for the terms `c · m0 ⊗ h`, `h` a basis index of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YdJson {
    pub hopf: HopfJson,
    pub basis: Vec<String>,
    pub action: Vec<Vec<BTreeMap<String, Scalar>>>,
    pub coaction: Vec<Vec<(usize, usize, Scalar)>>,
}

impl From<&YdModule> for YdJson {
    fn from(m: &YdModule) -> Self {
        YdJson {
            hopf: m.hopf().into(),
            basis: m.labels().to_vec(),
            action: m
                .action_table()
                .iter()
                .map(|r| r.iter().map(vector_to_map).collect())
                .collect(),
            coaction: m
                .coaction_table()
                .iter()
                .map(|d| d.iter().map(|((a, h), c)| (*a, *h, c.clone())).collect())
                .collect(),
        }
    }
}

impl TryFrom<YdJson> for YdModule {
    type Error = Error;
    fn try_from(j: YdJson) -> Result<Self> {
        let hopf: HopfDescriptor = j.hopf.try_into()?;
        let n = j.basis.len();
        let action = j
            .action
            .iter()
            .map(|r| r.iter().map(|v| map_to_vector(v, n)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let coaction = j
            .coaction
            .iter()
            .map(|terms| {
                let mut d = Tensor2::zero();
                for (a, h, c) in terms {
                    if *a >= n || *h >= hopf.dim() {
                        return Err(Error::Validation(format!("coaction term ({a}, {h}) out of range")));
                    }
                    d.add_term((*a, *h), c.clone());
                }
                Ok(d)
            })
            .collect::<Result<Vec<_>>>()?;
        YdModule::new(hopf, j.basis, action, coaction)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KerEpsJson {
    pub ker_eps: GroupJson,
}

/// Any input file, recognised by its keys.
#[derive(Clone, Debug)]
pub enum Input {
    Rack(FiniteShelf),
    Group(FiniteGroup),
    Augmented(AugmentedRack),
    Leibniz(StructureConstants),
    KerEps(FiniteGroup),
    Yd(YdModule),
    BraidedLeibniz(BraidedLeibnizData),
    Braiding(BraidingMatrix),
    Matrix(Matrix),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Rack(_) => "rack",
            Input::Group(_) => "group",
            Input::Augmented(_) => "augmented rack",
            Input::Leibniz(_) => "Leibniz algebra",
            Input::KerEps(_) => "ker ε module",
            Input::Yd(_) => "Yetter-Drinfel'd module",
            Input::BraidedLeibniz(_) => "braided Leibniz data",
            Input::Braiding(_) => "braiding matrix",
            Input::Matrix(_) => "matrix",
        }
    }
}

pub fn parse_input(text: &str) -> Result<Input> {
    let v: Value = serde_json::from_str(text)?;
    let Value::Object(map) = &v else {
        return Err(Error::Parse("expected a JSON object".into()));
    };
    let has = |k: &str| map.contains_key(k);
    let input = if has("rack_elements") {
        Input::Augmented(serde_json::from_value::<AugmentedJson>(v)?.try_into()?)
    } else if has("brackets") {
        Input::Leibniz(serde_json::from_value::<LeibnizJson>(v)?.try_into()?)
    } else if has("ker_eps") {
        Input::KerEps(serde_json::from_value::<KerEpsJson>(v)?.ker_eps.try_into()?)
    } else if has("hopf") {
        Input::Yd(serde_json::from_value::<YdJson>(v)?.try_into()?)
    } else if has("bracket") && has("tau") {
        Input::BraidedLeibniz(serde_json::from_value(v)?)
    } else if has("factor_basis") {
        Input::Braiding(serde_json::from_value(v)?)
    } else if has("entries") {
        Input::Matrix(serde_json::from_value(v)?)
    } else if has("op") {
        Input::Rack(serde_json::from_value::<RackJson>(v)?.try_into()?)
    } else if has("mul") {
        Input::Group(serde_json::from_value::<GroupJson>(v)?.try_into()?)
    } else {
        return Err(Error::Parse("unrecognised input: no known top-level keys".into()));
    };
    Ok(input)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::{first_order_yd, heisenberg_voros};
    use crate::rack::dihedral_quandle;

    #[test]
    fn leibniz_format_round_trip() {
        let text = r#"{"dim":3,"basis":["x","y","z"],"brackets":[
            {"i":0,"j":0,"out":{"2":"1"}},{"i":1,"j":1,"out":{"2":"1"}},
            {"i":0,"j":1,"out":{"2":"1"}},{"i":1,"j":0,"out":{"2":"-1"}}]}"#;
        let Input::Leibniz(c) = parse_input(text).unwrap() else {
            panic!("kind")
        };
        assert_eq!(&c, heisenberg_voros().constants());
        let back: StructureConstants = LeibnizJson::from(&c).try_into().unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn rack_and_group_formats() {
        let s = dihedral_quandle(3).unwrap();
        let text = serde_json::to_string(&RackJson::from(&s)).unwrap();
        let Input::Rack(back) = parse_input(&text).unwrap() else {
            panic!("kind")
        };
        assert_eq!(back, s);
        let Input::Group(g) = parse_input(r#"{"elements":["e","s"],"mul":[[0,1],[1,0]]}"#).unwrap() else {
            panic!("kind")
        };
        assert_eq!(g.order(), 2);
        assert!(parse_input(r#"{"elements":["e","s"],"mul":[[0,1],[1,1]]}"#).is_err());
        assert!(parse_input(r#"{"foo":1}"#).is_err());
        assert!(parse_input("[1]").is_err());
    }

    #[test]
    fn group_element_format() {
        let text = r#"{"group":"S3","coeffs":{"(12)":"1/2","()":"-1"}}"#;
        let x: GroupAlgebraElement = serde_json::from_str::<GroupElementJson>(text)
            .unwrap()
            .try_into()
            .unwrap();
        assert_eq!(x.counit(), Scalar::ratio(-1, 2));
        let back: GroupAlgebraElement = GroupElementJson::from(&x).try_into().unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn yd_format_round_trip() {
        let m = first_order_yd(&heisenberg_voros()).unwrap();
        let text = serde_json::to_string(&YdJson::from(&m)).unwrap();
        let Input::Yd(back) = parse_input(&text).unwrap() else {
            panic!("kind")
        };
        assert_eq!(back, m);
    }
}
