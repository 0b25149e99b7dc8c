//! Inputs shared by the benchmarks.

use leibrack::group_hopf::ker_eps_yd;
use leibrack::leibniz::sl2;
use leibrack::rack::{dihedral_quandle, inner_augmentation};
use leibrack::{AugmentedRack, FiniteGroup, LieObject, YdModule};

pub fn ker_eps_s4() -> YdModule {
    ker_eps_yd(&FiniteGroup::symmetric(4).unwrap())
}

pub fn dihedral_augmented(n: usize) -> AugmentedRack {
    inner_augmentation(&dihedral_quandle(n).unwrap()).unwrap()
}

pub fn sl2_object() -> LieObject {
    LieObject::from_leibniz(&sl2()).unwrap()
}
