//! The Zh construction as a source-to-source rewrite.
//!
//! Every classical crossing is flanked by two over-crossings of the ω
//! component on the left tensor factor: `ω⁻` below the crossing and `ω⁺`
//! above it, giving `(D ⊗ I) Ř^± (D⁻¹ ⊗ I)` with `D = diag(1,…,1,w,…,w)`.
//! The ω strand itself is never materialized; its crossings with α strands
//! are the elided one-strand generators `oxp`/`oxm`. Crossings with a
//! down-oriented strand are first rotated into an up-up crossing with cups
//! and caps, and the flanking is applied to that up-up crossing.

use crate::engine::{evaluate, EngineError, EvalOptions};
use crate::generators::{rotate_crossing, Morphism, Sign};
use crate::schema::{Orient, SignSeq, Strand, SuperDim};
use crate::tangle::{BraidWord, Gen, GenKind, LetterKind, Placed, TangleExpr};

fn omega_gen(sign: Sign, orient: Orient) -> Gen {
    Gen::new(GenKind::OmegaOver(sign), &SignSeq(vec![Strand { orient, omega: false }])).expect("one α strand")
}

/// Zh of a braid word as an upward tangle on `N` strands.
pub fn zh_braid(beta: &BraidWord) -> TangleExpr {
    let n = beta.strands;
    let mut placed = Vec::new();
    for l in beta.letters.iter().rev() {
        let pos = l.pos - 1;
        match l.kind {
            LetterKind::Sigma(s) => {
                placed.push(Placed { gen: omega_gen(Sign::Minus, Orient::Up), pos });
                placed.push(Placed { gen: Gen::new(GenKind::Cross(s), &SignSeq::ups(2)).expect("uu"), pos });
                placed.push(Placed { gen: omega_gen(Sign::Plus, Orient::Up), pos });
            }
            LetterKind::Chi => {
                placed.push(Placed { gen: Gen::new(GenKind::Virtual, &SignSeq::ups(2)).expect("uu"), pos })
            }
        }
    }
    TangleExpr::from_placed(&SignSeq::ups(n), &placed).expect("braid slices are well typed")
}

/// Zh of an arbitrary virtual tangle without ω generators.
pub fn zh_tangle(t: &TangleExpr) -> TangleExpr {
    let mut placed = Vec::new();
    for p in t.linearize() {
        match p.gen.kind {
            GenKind::Cross(s) if p.gen.is_classical() => {
                let (a, b) = (p.gen.dom.0[0].orient, p.gen.dom.0[1].orient);
                for inner in rotate_crossing(GenKind::Cross(s), a, b).linearize() {
                    let pos = p.pos + inner.pos;
                    if matches!(inner.gen.kind, GenKind::Cross(_)) {
                        placed.push(Placed { gen: omega_gen(Sign::Minus, Orient::Up), pos });
                        placed.push(Placed { gen: inner.gen, pos });
                        placed.push(Placed { gen: omega_gen(Sign::Plus, Orient::Up), pos });
                    } else {
                        placed.push(Placed { gen: inner.gen, pos });
                    }
                }
            }
            _ => placed.push(p),
        }
    }
    TangleExpr::from_placed(&t.dom(), &placed).expect("rewrite preserves boundaries")
}

/// The generalized representation `ρ̃_N(β)` on `V^{⊗N}`.
pub fn gen_rep(beta: &BraidWord, d: SuperDim) -> Result<Morphism, EngineError> {
    evaluate(&zh_braid(beta), &EvalOptions::new(d).semiwelded(true))
}

/// The representation `ρ_N(β)` on `V^{⊗N}` (no ω flanking).
pub fn rep(beta: &BraidWord, d: SuperDim) -> Result<Morphism, EngineError> {
    evaluate(&beta.to_tangle(), &EvalOptions::new(d))
}
