//! Burau and generalized Burau matrices, the determinant formulas for the
//! Alexander and generalized Alexander polynomials, and exterior powers
//! linking them to the `1|1` functors.

use thiserror::Error;

use crate::engine::{closure_trace, EngineError, EvalOptions};
use crate::generators::{GenError, Morphism, Sign};
use crate::ring::{det_bareiss, equal_up_to_unit, Coeff, UnitPattern, LaurentPoly, PolyMatrix, RingError, Vars};
use crate::schema::{exterior_word_codec, BasisWord, SignSeq, SuperDim};
use crate::tangle::{BraidWord, Letter, LetterKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurauError {
    #[error("determinant route gives {det}, trace route gives {trace}")]
    Mismatch { det: LaurentPoly, trace: LaurentPoly },
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Presentation of the Burau representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BurauForm {
    /// Over `ℤ[t^{±1}]`.
    Classical,
    /// After `t → q⁻²` and the diagonal change of basis `diag(q^{i-1})`.
    Q,
}

/// Presentation of the generalized Burau representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenBurauForm {
    /// Over `ℤ[s^{±1}, t^{±1}]`.
    Classical,
    /// After `s → w⁻¹q⁻²`, `t → w` and the same change of basis.
    Qw,
}

fn block(vars: &Vars, rows: [[&str; 2]; 2]) -> [[LaurentPoly; 2]; 2] {
    let p = |s: &str| LaurentPoly::parse(vars, s).expect("static block entry");
    [[p(rows[0][0]), p(rows[0][1])], [p(rows[1][0]), p(rows[1][1])]]
}

fn product(n: usize, vars: &Vars, letters: &[Letter], blk: impl Fn(LetterKind) -> [[LaurentPoly; 2]; 2]) -> PolyMatrix {
    let mut acc = PolyMatrix::identity(vars, n);
    for l in letters {
        let b = blk(l.kind);
        let i = l.pos - 1;
        let mut g = PolyMatrix::identity(vars, n);
        for (r, row) in b.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                g.set(i + r, i + c, e.clone());
            }
        }
        acc = acc.checked_mul(&g).expect("same ring");
    }
    acc
}

/// The Burau matrix `ρ_N(β)`: the product of the generator blocks in written order.
pub fn burau(beta: &BraidWord, form: BurauForm) -> PolyMatrix {
    let vars = match form {
        BurauForm::Classical => Vars::t(),
        BurauForm::Q => Vars::q(),
    };
    product(beta.strands, &vars, &beta.letters, |k| match (form, k) {
        (BurauForm::Classical, LetterKind::Sigma(Sign::Plus)) => block(&vars, [["1-t", "t"], ["1", "0"]]),
        (BurauForm::Classical, LetterKind::Sigma(Sign::Minus)) => block(&vars, [["0", "1"], ["1/t", "1-1/t"]]),
        (BurauForm::Classical, LetterKind::Chi) => block(&vars, [["0", "1"], ["1", "0"]]),
        (BurauForm::Q, LetterKind::Sigma(Sign::Plus)) => block(&vars, [["1-q^-2", "q^-1"], ["q^-1", "0"]]),
        (BurauForm::Q, LetterKind::Sigma(Sign::Minus)) => block(&vars, [["0", "q"], ["q", "1-q^2"]]),
        (BurauForm::Q, LetterKind::Chi) => block(&vars, [["0", "q"], ["q^-1", "0"]]),
    })
}

/// The generalized Burau matrix `ρ̃_N(β)`.
pub fn gen_burau(beta: &BraidWord, form: GenBurauForm) -> PolyMatrix {
    let vars = match form {
        GenBurauForm::Classical => Vars::st(),
        GenBurauForm::Qw => Vars::qw(),
    };
    product(beta.strands, &vars, &beta.letters, |k| match (form, k) {
        (GenBurauForm::Classical, LetterKind::Sigma(Sign::Plus)) => block(&vars, [["1-s*t", "s"], ["t", "0"]]),
        (GenBurauForm::Classical, LetterKind::Sigma(Sign::Minus)) => {
            block(&vars, [["0", "1/t"], ["1/s", "1-1/(s*t)"]])
        }
        (GenBurauForm::Classical, LetterKind::Chi) => block(&vars, [["0", "1"], ["1", "0"]]),
        (GenBurauForm::Qw, LetterKind::Sigma(Sign::Plus)) => block(&vars, [["1-q^-2", "1/(w*q)"], ["w/q", "0"]]),
        (GenBurauForm::Qw, LetterKind::Sigma(Sign::Minus)) => block(&vars, [["0", "q/w"], ["w*q", "1-q^2"]]),
        (GenBurauForm::Qw, LetterKind::Chi) => block(&vars, [["0", "q"], ["1/q", "0"]]),
    })
}

/// `det(ρ̃_N(β) − I_N)` in `(s, t)`, exactly as computed.
pub fn gap_raw(beta: &BraidWord) -> LaurentPoly {
    let m = gen_burau(beta, GenBurauForm::Classical);
    let id = PolyMatrix::identity(m.vars(), m.rows());
    det_bareiss(&m.checked_sub(&id).expect("same shape")).expect("same ring")
}

/// The generalized Alexander polynomial, unit-normalized: exponents shifted
/// to start at zero and the first term positive.
pub fn gap(beta: &BraidWord) -> LaurentPoly {
    gap_raw(beta).normalize_unit()
}

/// `det(A₁₁ − I_{N−1})`, where `A₁₁` deletes the last row and column of the
/// Burau matrix, unit-normalized. The empty determinant is 1.
pub fn alexander(beta: &BraidWord) -> LaurentPoly {
    let a = burau(beta, BurauForm::Classical);
    let n = a.rows();
    let keep: Vec<usize> = (0..n.saturating_sub(1)).collect();
    let a11 = a.select(&keep, &keep);
    let id = PolyMatrix::identity(a.vars(), keep.len());
    det_bareiss(&a11.checked_sub(&id).expect("same shape")).expect("same ring").normalize_unit()
}

/// `σ_i ↦ σ_{N−i}`, `χ_i ↦ χ_{N−i}`: the braid seen from behind.
pub fn reverse_braid(beta: &BraidWord) -> BraidWord {
    let n = beta.strands;
    BraidWord { strands: n, letters: beta.letters.iter().map(|l| Letter { kind: l.kind, pos: n - l.pos }).collect() }
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect()).collect()
}

/// `⋀*M` on `V^{⊗N}` (`V = ℂ^{1|1}`), with `u_S` identified with basis words by `codec`.
pub fn exterior_all_with(m: &PolyMatrix, codec: fn(usize, &[usize]) -> BasisWord) -> Result<Morphism, BurauError> {
    if !m.is_square() {
        return Err(RingError::Shape(format!("{}x{} matrix has no exterior power", m.rows(), m.cols())).into());
    }
    let n = m.rows();
    let d = SuperDim::new(1, 1).expect("1|1");
    let space = SignSeq::ups(n);
    let mut out = Morphism::zero(&space, &space, d, m.vars())?;
    let all = subsets(n);
    for s in &all {
        let col = codec(n, s).flat_index(d);
        let s0: Vec<usize> = s.iter().map(|i| i - 1).collect();
        let mut entries = Vec::new();
        for t in all.iter().filter(|t| t.len() == s.len()) {
            let t0: Vec<usize> = t.iter().map(|i| i - 1).collect();
            let v = det_bareiss(&m.select(&t0, &s0))?;
            entries.push((codec(n, t).flat_index(d), v));
        }
        out.set_column(col, entries);
    }
    Ok(out)
}

/// `⋀*M` with the standard identification of `u_{i₁}∧…∧u_{i_k}`.
pub fn exterior_all(m: &PolyMatrix) -> Result<Morphism, BurauError> {
    exterior_all_with(m, exterior_word_codec)
}

/// The generalized Alexander polynomial of `β` by the determinant route,
/// after `s → w⁻¹q⁻²`, `t → w`. Not unit-normalized.
pub fn gap_qw(beta: &BraidWord) -> Result<LaurentPoly, BurauError> {
    let qw = Vars::qw();
    let s = LaurentPoly::parse(&qw, "w^-1*q^-2")?;
    let t = LaurentPoly::parse(&qw, "w")?;
    Ok(gap_raw(beta).substitute(&[("s", s), ("t", t)], &qw)?)
}

/// The generalized Alexander polynomial after `s → w⁻¹q⁻²`, `t → w`,
/// computed as `(−1)^N q^{−N−wr} Q̃^{1|1}(Zh(β̂))`.
///
/// The trace route must equal the determinant of the reversed braid exactly
/// and the determinant of `β` up to a unit `±q^{2j}w^k` (the image of
/// `±s^j t^k`); either failure is an error.
pub fn recover_gap_via_trace(beta: &BraidWord) -> Result<LaurentPoly, BurauError> {
    let qw = Vars::qw();
    let opts = EvalOptions::new(SuperDim::new(1, 1).expect("1|1")).semiwelded(true);
    let n = beta.strands as i32;
    let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
    let pre = LaurentPoly::var_pow(&qw, "q", -n - beta.writhe() as i32)?.scale(&Coeff::from(sign));
    let trace = pre.checked_mul(&closure_trace(beta, &opts)?)?;
    let rev = gap_qw(&reverse_braid(beta))?;
    if rev != trace {
        return Err(BurauError::Mismatch { det: rev, trace });
    }
    let det = gap_qw(beta)?;
    let unit = equal_up_to_unit(&det, &trace, &UnitPattern::signed(&qw, &["q", "w"]));
    match unit {
        Some(u) if u.terms().iter().all(|(e, _)| e[0] % 2 == 0) => Ok(trace),
        _ => Err(BurauError::Mismatch { det, trace }),
    }
}

#[cfg(test)]
mod tests;
