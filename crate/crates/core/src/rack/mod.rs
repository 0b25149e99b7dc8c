//! Finite shelves, racks, quandles and augmented racks.

mod augmented;
mod group;
mod perm;
mod shelf;

pub use augmented::{
    check_augmented, induced_rack, inner_augmentation, rack_tensor_and_braiding, set_ybe_failures, AugmentedRack,
    AugmentedReport, RackBraiding,
};
pub use group::FiniteGroup;
pub use perm::Perm;
pub use shelf::{check_shelf, conjugation_rack, dihedral_quandle, trivial_quandle, FiniteShelf, ShelfReport};
