//! Virtual and semi-welded `U_q(gl(m|n))` Reshetikhin–Turaev invariants.
//!
//! Scalars are exact Laurent polynomials in `q` (and `w` for semi-welded
//! evaluation). Tangles are evaluated column by column, streaming sparse
//! vectors through local generator operators, so no Kronecker product is
//! ever built.

pub mod ac;
pub mod burau;
pub mod engine;
pub mod generators;
pub mod ring;
pub mod schema;
pub mod tangle;
pub mod zh;

#[cfg(test)]
mod testutil;

pub use ac::{ac_obstruction, ac_obstruction_braid, build_arc_graph, build_arc_graph_braid, solve_numbering, AcError, Numbering, Verdict};
pub use burau::{alexander, gap, recover_gap_via_trace, BurauError};
pub use engine::{closure_trace, evaluate, partial_closure_trace, EngineError, EvalOptions};
pub use generators::{Morphism, Sign};
pub use ring::{det_bareiss, equal_up_to_unit, quantum_int, Coeff, LaurentPoly, PolyMatrix, RingError, UnitPattern, Vars};
pub use schema::{BasisWord, SignSeq, SuperDim};
pub use tangle::{
    closure, closure_with_curls, parse_braid, parse_gauss, parse_gauss_document, parse_tangle, partial_closure, BraidWord,
    GaussCode, GaussDiagram, TangleError, TangleExpr,
};
pub use zh::{zh_braid, zh_tangle};
