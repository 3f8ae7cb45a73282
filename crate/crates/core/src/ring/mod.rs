//! Exact scalars: integer Laurent polynomials in up to four variables, and
//! determinants of matrices over them.

mod coeff;
mod matrix;
mod parse;
mod poly;

pub use coeff::Coeff;
pub use matrix::{det_bareiss, det_cofactor, PolyMatrix};
pub use poly::{
    equal_up_to_unit, q_to_t_half, quantum_int, quantum_int_in, Exps, LaurentPoly, UnitPattern, Vars, MAX_VARS,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("variable sets differ: {0} vs {1}")]
    VarMismatch(String, String),
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVar(String),
    #[error("a ring needs 1 to 4 variables, got {0}")]
    VarCount(usize),
    #[error("substitution target `{0}` is not a unit monomial")]
    NonMonomial(String),
    #[error("`{0}` is not invertible")]
    NotInvertible(String),
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("q-exponents of mixed parity cannot be halved")]
    MixedParity,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[cfg(test)]
mod tests;
