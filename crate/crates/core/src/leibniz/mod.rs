//! Finite-dimensional right Leibniz algebras, the squares ideal and the Lie
//! quotient, the unital shelf on `k ⊕ g` and first-order Yetter-Drinfel'd
//! data.

mod first_order;
mod quotient;
mod structure;

pub use first_order::{first_order, first_order_yd, hv_rmatrix, FirstOrder, FIRST_ORDER_DEGREE};
pub use quotient::{lie_quotient, squares_ideal, unital_shelf, LieQuotientData, UnitalShelf};
pub use structure::{
    abelian, check_leibniz, heisenberg_voros, jacobi_failures, nonabelian_2d, sl2, square_extension, LeibnizAlgebra,
    LeibnizReport, StructureConstants,
};
