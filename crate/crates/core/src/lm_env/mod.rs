//! Truncated enveloping algebras and the enveloping tetramodule of a Lie
//! algebra object `f: M → g`.
//!
//! Everything here truncates at a degree bound `d` by design; checks state
//! the degree up to which they are exact.

mod env;
mod pbw;

pub use env::{
    antipode_t, build_env, check_antipode_t, check_bicomodule, check_bimodule, check_coderivation, f_tilde_checks,
    inv_part, theorem1_bracket, DegreeBoundedReport, EnvTetramodule, FTildeReport, InvPart, LieObject,
};
pub use pbw::{LieAlgebra, TruncatedPBW};
