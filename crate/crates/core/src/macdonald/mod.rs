//! Macdonald symmetric functions through the Pieri coefficients, the
//! operators `G⁺`, `G⁻` and `D`, and an independent power-sum oracle.

mod eval;
mod identities;
pub mod oracle;
mod pieri;
mod symfunc;

pub use eval::{eval_p_at_monomials, eval_q_at_monomials, Evaluator};
pub use identities::{
    alphabet, cauchy, gn_generating_function, lemma2, schur_littlewood, symbol_a,
    symfunc_comparisons, warnaar, warnaar_rescaled, WarnaarParam,
};
pub use oracle::Oracle;
pub use pieri::{phi_minus, phi_plus};
pub use symfunc::{operator_word, operator_word_eval, operator_word_eval_bounded, SymFunc};
