//! Yetter-Drinfel'd modules, their braiding, the braid relation and braided
//! Leibniz brackets.

mod checks;
mod leibniz;
mod module;

pub use checks::{
    braiding, check_ybe, check_yd, is_involutive, BraidingMatrix, YbeReport, YdReport, BASIS_ORDER, DENSE_YBE_LIMIT,
};
pub use leibniz::{
    braided_leibniz_from_q, braided_leibniz_unchecked, check_braided_leibniz, check_q_conditions, BraidedLeibnizData,
    BraidedLeibnizReport, QReport,
};
pub use module::YdModule;
