//! Group algebras, the Hopf descriptors used by Yetter-Drinfel'd modules,
//! the module `ker ε`, linearized augmented racks and the function-algebra
//! picture.

mod constructions;
mod descriptor;
mod dual;
mod group_algebra;

pub use constructions::{ker_eps_inclusion, ker_eps_yd, linearize_augmented, permutation_module, rack_q, Linearized};
pub use descriptor::{HElem, HopfAxiomReport, HopfDescriptor};
pub use dual::{function_dual_check, DualReport, MODULE_READING};
pub use group_algebra::{adjoint_action, group_mul, hopf_ops, GroupAlgebraElement, HopfOps};
