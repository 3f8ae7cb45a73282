//! Column-streaming evaluation of tangles.
//!
//! A tangle is flattened into a list of local steps. Each dom basis word is
//! seeded as a sparse vector and pushed through the steps; a step touches
//! only the tensor factors its generator acts on, so no Kronecker product is
//! ever formed. Columns are independent and are evaluated in parallel, then
//! collected in column order.
//!
//! Deframing corrects the classical writhe only. Virtual curls are left
//! alone, so for `d ≠ 1|1` the values are invariants of rotational
//! equivalence.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::generators::{gen_morphism, mu_entry, GenError, Morphism};
use crate::ring::{LaurentPoly, RingError, Vars};
use crate::schema::{packed, BasisWord, Packed, SignSeq, SuperDim, MAX_WIDTH};
use crate::tangle::{BraidWord, Gen, TangleExpr};
use crate::zh::zh_braid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("ω generators need semi-welded evaluation")]
    OmegaWithoutSemiWelded,
    #[error("intermediate width {0} exceeds {MAX_WIDTH} tensor factors")]
    TooWide(usize),
    #[error("expected a tangle of type u -> u, found {0} -> {1}")]
    NotOneOne(SignSeq, SignSeq),
    #[error("boundary mismatch: operator expects {expected}, state has {found}")]
    Mismatch { expected: SignSeq, found: SignSeq },
    #[error("value is not diagonal: {0}")]
    NotDiagonal(String),
    #[error("trace and direct evaluation disagree: {0} vs {1}")]
    Inconsistent(LaurentPoly, LaurentPoly),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Evaluation settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalOptions {
    pub d: SuperDim,
    /// Coefficients in `(q, w)` and ω generators allowed.
    pub semiwelded: bool,
    /// Multiply results by `q^{(n-m)·wr}`.
    pub deframe: bool,
    /// Minimum number of columns per parallel work unit.
    pub chunk: usize,
    /// For `1|1` one-one tangles, also evaluate the `x₂` column and compare.
    pub check_scalar: bool,
}

impl EvalOptions {
    pub fn new(d: SuperDim) -> EvalOptions {
        EvalOptions { d, semiwelded: false, deframe: false, chunk: 16, check_scalar: true }
    }

    pub fn semiwelded(mut self, on: bool) -> EvalOptions {
        self.semiwelded = on;
        self
    }

    pub fn deframe(mut self, on: bool) -> EvalOptions {
        self.deframe = on;
        self
    }

    pub fn vars(&self) -> Vars {
        if self.semiwelded {
            Vars::qw()
        } else {
            Vars::q()
        }
    }
}

/// A sparse combination of basis words of one space.
#[derive(Clone, Debug)]
pub struct SparseVec {
    space: SignSeq,
    d: SuperDim,
    vars: Vars,
    terms: FxHashMap<Packed, LaurentPoly>,
}

impl SparseVec {
    pub fn zero(space: &SignSeq, d: SuperDim, vars: &Vars) -> Result<SparseVec, EngineError> {
        if space.alpha_count() > MAX_WIDTH {
            return Err(EngineError::TooWide(space.alpha_count()));
        }
        Ok(SparseVec { space: space.clone(), d, vars: vars.clone(), terms: FxHashMap::default() })
    }

    pub fn basis(space: &SignSeq, d: SuperDim, vars: &Vars, word: &BasisWord) -> Result<SparseVec, EngineError> {
        let mut v = Self::zero(space, d, vars)?;
        word.validate(d).map_err(GenError::from)?;
        if word.len() != space.alpha_count() {
            return Err(EngineError::Mismatch { expected: space.clone(), found: SignSeq::ups(word.len()) });
        }
        v.terms.insert(word.pack(), LaurentPoly::one(vars));
        Ok(v)
    }

    pub fn space(&self) -> &SignSeq {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, word: &BasisWord) -> LaurentPoly {
        self.terms.get(&word.pack()).cloned().unwrap_or_else(|| LaurentPoly::zero(&self.vars))
    }

    /// Terms sorted by flat index.
    pub fn entries(&self) -> Vec<(BasisWord, LaurentPoly)> {
        let k = self.space.alpha_count();
        let r = self.d.dim() as u64;
        let mut v: Vec<(u64, Packed, &LaurentPoly)> =
            self.terms.iter().map(|(w, c)| (packed::flat(*w, k, r), *w, c)).collect();
        v.sort_by_key(|e| e.0);
        v.into_iter().map(|(_, w, c)| (BasisWord::unpack(w, k), c.clone())).collect()
    }
}

impl PartialEq for SparseVec {
    fn eq(&self, other: &SparseVec) -> bool {
        self.space == other.space && self.d == other.d && self.terms == other.terms
    }
}

/// A generator's matrix indexed by its packed local input word.
#[derive(Debug)]
struct LocalOp {
    win: usize,
    wout: usize,
    table: Vec<Vec<(Packed, LaurentPoly)>>,
}

impl LocalOp {
    fn from_morphism(m: &Morphism) -> LocalOp {
        let d = m.superdim();
        let r = d.dim() as u64;
        let (win, wout) = (m.dom().alpha_count(), m.cod().alpha_count());
        let mut table = vec![Vec::new(); 1 << (4 * win)];
        for c in 0..m.ncols() as u64 {
            let local_in = packed::from_flat(c, win, r) as usize;
            table[local_in] =
                m.column(c).iter().map(|(row, v)| (packed::from_flat(*row, wout, r), v.clone())).collect();
        }
        LocalOp { win, wout, table }
    }
}

#[derive(Debug, Clone)]
struct Step {
    op: Arc<LocalOp>,
    /// Tensor-factor index of the first factor acted on.
    factor: usize,
}

/// A tangle flattened into local steps.
#[derive(Debug, Clone)]
struct Program {
    dom: SignSeq,
    cod: SignSeq,
    steps: Vec<Step>,
}

fn compile(t: &TangleExpr, opts: &EvalOptions, vars: &Vars) -> Result<Program, EngineError> {
    let dom = t.dom();
    let mut cur = dom.clone();
    let mut cache: HashMap<Gen, Option<Arc<LocalOp>>> = HashMap::new();
    let mut steps = Vec::new();
    for p in t.linearize() {
        let g = &p.gen;
        let k = g.dom.len();
        if p.pos + k > cur.len() || cur.0[p.pos..p.pos + k] != g.dom.0[..] {
            let found = SignSeq(cur.0[p.pos.min(cur.len())..(p.pos + k).min(cur.len())].to_vec());
            return Err(EngineError::Mismatch { expected: g.dom.clone(), found });
        }
        if !opts.semiwelded && (g.kind.is_omega() || g.dom.has_omega() || g.cod.has_omega()) {
            return Err(EngineError::OmegaWithoutSemiWelded);
        }
        let factor = cur.alpha_index(p.pos);
        let entry = match cache.get(g) {
            Some(e) => e.clone(),
            None => {
                let m = gen_morphism(g, opts.d, vars)?;
                let trivial = m.dom().alpha_count() == m.cod().alpha_count() && m.is_identity();
                let e = (!trivial).then(|| Arc::new(LocalOp::from_morphism(&m)));
                cache.insert(g.clone(), e.clone());
                e
            }
        };
        if let Some(op) = entry {
            steps.push(Step { op, factor });
        }
        let mut next = cur.0[..p.pos].to_vec();
        next.extend_from_slice(&g.cod.0);
        next.extend_from_slice(&cur.0[p.pos + k..]);
        cur = SignSeq(next);
        if cur.alpha_count() > MAX_WIDTH {
            return Err(EngineError::TooWide(cur.alpha_count()));
        }
    }
    if !opts.semiwelded && dom.has_omega() {
        return Err(EngineError::OmegaWithoutSemiWelded);
    }
    Ok(Program { dom, cod: cur, steps })
}

type Terms = FxHashMap<Packed, LaurentPoly>;

fn apply_step(op: &LocalOp, factor: usize, state: Terms) -> Terms {
    let mut out: Terms = FxHashMap::with_capacity_and_hasher(state.len(), Default::default());
    for (word, coeff) in state {
        let local = packed::extract(word, factor, op.win) as usize;
        for (image, c) in &op.table[local] {
            let next = packed::splice(word, factor, op.win, *image, op.wout);
            let term = if c.is_one() {
                coeff.clone()
            } else if c.len() == 1 {
                let (e, k) = &c.terms()[0];
                coeff.mul_term(e, k)
            } else {
                &coeff * c
            };
            match out.entry(next) {
                std::collections::hash_map::Entry::Occupied(mut o) => {
                    o.get_mut().add_assign_ref(&term);
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(term);
                }
            }
        }
    }
    out
}

fn run(program: &Program, mut state: Terms) -> Terms {
    for step in &program.steps {
        state = apply_step(&step.op, step.factor, state);
        if state.is_empty() {
            break;
        }
    }
    state
}

fn seed(word: Packed, vars: &Vars) -> Terms {
    let mut t = FxHashMap::default();
    t.insert(word, LaurentPoly::one(vars));
    t
}

/// Apply `op` to the factors starting at the 1-based strand `pos` of `state`.
pub fn apply_local(op: &Morphism, pos: usize, state: &SparseVec) -> Result<SparseVec, EngineError> {
    let k = op.dom().len();
    let start = pos.checked_sub(1).unwrap_or(usize::MAX);
    if start == usize::MAX || start + k > state.space.len() || state.space.0[start..start + k] != op.dom().0[..] {
        let found = SignSeq(state.space.0[start.min(state.space.len())..(start.saturating_add(k)).min(state.space.len())].to_vec());
        return Err(EngineError::Mismatch { expected: op.dom().clone(), found });
    }
    if op.superdim() != state.d || op.vars() != &state.vars {
        return Err(GenError::DimMismatch(op.superdim(), state.d).into());
    }
    let local = LocalOp::from_morphism(op);
    let factor = state.space.alpha_index(start);
    let mut space = state.space.0[..start].to_vec();
    space.extend_from_slice(&op.cod().0);
    space.extend_from_slice(&state.space.0[start + k..]);
    let space = SignSeq(space);
    if space.alpha_count() > MAX_WIDTH {
        return Err(EngineError::TooWide(space.alpha_count()));
    }
    let terms = apply_step(&local, factor, state.terms.clone());
    Ok(SparseVec { space, d: state.d, vars: state.vars.clone(), terms })
}

fn deframe_factor(opts: &EvalOptions, writhe: i64, vars: &Vars) -> Result<LaurentPoly, EngineError> {
    let e = (opts.d.n as i64 - opts.d.m as i64) * writhe;
    Ok(LaurentPoly::var_pow(vars, "q", e as i32)?)
}

/// Multiply by the deframing factor `q^{(n-m)·wr}`.
pub fn deframe(value: &LaurentPoly, writhe: i64, d: SuperDim) -> Result<LaurentPoly, EngineError> {
    let e = (d.n as i64 - d.m as i64) * writhe;
    Ok(value * &LaurentPoly::var_pow(value.vars(), "q", e as i32)?)
}

fn columns(program: &Program, opts: &EvalOptions, vars: &Vars, cols: &[u64]) -> Vec<Terms> {
    let r = opts.d.dim() as u64;
    let k = program.dom.alpha_count();
    cols.par_iter()
        .with_min_len(opts.chunk.max(1))
        .map(|&c| run(program, seed(packed::from_flat(c, k, r), vars)))
        .collect()
}

fn terms_to_column(terms: Terms, width: usize, radix: u64) -> Vec<(u64, LaurentPoly)> {
    terms.into_iter().map(|(w, v)| (packed::flat(w, width, radix), v)).collect()
}

/// The matrix of `Q(T)` (or `Q̃(T)` in semi-welded mode), deframed if requested.
pub fn evaluate(t: &TangleExpr, opts: &EvalOptions) -> Result<Morphism, EngineError> {
    let vars = opts.vars();
    let program = compile(t, opts, &vars)?;
    let mut out = Morphism::zero(&program.dom, &program.cod, opts.d, &vars)?;
    let all: Vec<u64> = (0..out.ncols() as u64).collect();
    let width = program.cod.alpha_count();
    let r = opts.d.dim() as u64;
    for (c, terms) in columns(&program, opts, &vars, &all).into_iter().enumerate() {
        out.set_column(c as u64, terms_to_column(terms, width, r));
    }
    if opts.deframe {
        out = out.scale(&deframe_factor(opts, t.writhe(), &vars)?);
    }
    Ok(out)
}

/// The image of one dom basis word.
pub fn evaluate_column(t: &TangleExpr, opts: &EvalOptions, word: &BasisWord) -> Result<SparseVec, EngineError> {
    let vars = opts.vars();
    let program = compile(t, opts, &vars)?;
    let start = SparseVec::basis(&program.dom, opts.d, &vars, word)?;
    let terms = run(&program, start.terms);
    Ok(SparseVec { space: program.cod.clone(), d: opts.d, vars, terms })
}

/// Value of a one-one tangle, which is always a diagonal matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OneOneValue {
    /// `λ·I` (the `1|1` shortcut).
    Scalar(LaurentPoly),
    Diagonal(Vec<LaurentPoly>),
}

impl OneOneValue {
    /// The common diagonal value, if all entries agree.
    pub fn scalar(&self) -> Option<LaurentPoly> {
        match self {
            OneOneValue::Scalar(s) => Some(s.clone()),
            OneOneValue::Diagonal(v) => v.first().filter(|f| v.iter().all(|x| x == *f)).cloned(),
        }
    }
}

/// Evaluate a `u → u` tangle. For `1|1` only the `x₁` column is needed
/// (the `x₂` column is compared unless `check_scalar` is off).
pub fn evaluate_11(t: &TangleExpr, opts: &EvalOptions) -> Result<OneOneValue, EngineError> {
    let (dom, cod) = (t.dom(), t.cod());
    if dom != SignSeq::ups(1) || cod != SignSeq::ups(1) {
        return Err(EngineError::NotOneOne(dom, cod));
    }
    let vars = opts.vars();
    let program = compile(t, opts, &vars)?;
    let dim = opts.d.dim();
    let scale = if opts.deframe { Some(deframe_factor(opts, t.writhe(), &vars)?) } else { None };
    let diag_entry = |c: usize, terms: Terms| -> Result<LaurentPoly, EngineError> {
        let mut v = LaurentPoly::zero(&vars);
        for (w, val) in terms {
            if w as usize != c {
                return Err(EngineError::NotDiagonal(format!("x{} -> x{}", c + 1, w + 1)));
            }
            v = val;
        }
        Ok(match &scale {
            Some(s) => &v * s,
            None => v,
        })
    };
    let want: Vec<u64> = if opts.d == SuperDim::new(1, 1).expect("1|1") && !opts.check_scalar {
        vec![0]
    } else {
        (0..dim as u64).collect()
    };
    let cols = columns(&program, opts, &vars, &want);
    let entries = cols.into_iter().enumerate().map(|(c, t)| diag_entry(c, t)).collect::<Result<Vec<_>, _>>()?;
    if opts.d.m == 1 && opts.d.n == 1 {
        if entries.len() == 2 && entries[0] != entries[1] {
            return Err(EngineError::NotDiagonal(format!("x1 -> {}, x2 -> {}", entries[0], entries[1])));
        }
        return Ok(OneOneValue::Scalar(entries[0].clone()));
    }
    Ok(OneOneValue::Diagonal(entries))
}

/// `μ^{⊗k}` at one packed word.
fn mu_word(word: Packed, k: usize, mus: &[LaurentPoly], vars: &Vars) -> LaurentPoly {
    let mut acc = LaurentPoly::one(vars);
    for i in 0..k {
        acc = &acc * &mus[packed::get(word, i) as usize];
    }
    acc
}

fn mu_table(d: SuperDim, vars: &Vars) -> Vec<LaurentPoly> {
    (1..=d.dim() as u8).map(|k| mu_entry(d, k, vars)).collect()
}

/// `tr(ρ(β) ∘ μ^{⊗N})` for a braid tangle `β: u^N → u^N`, deframed if requested.
fn braid_trace(braid: &TangleExpr, opts: &EvalOptions) -> Result<LaurentPoly, EngineError> {
    let vars = opts.vars();
    let program = compile(braid, opts, &vars)?;
    let n = program.dom.alpha_count();
    let r = opts.d.dim() as u64;
    let total = r.pow(n as u32);
    let mus = mu_table(opts.d, &vars);
    let parts: Vec<LaurentPoly> = (0..total as usize)
        .into_par_iter()
        .with_min_len(opts.chunk.max(1))
        .map(|c| {
            let w = packed::from_flat(c as u64, n, r);
            let out = run(&program, seed(w, &vars));
            match out.get(&w) {
                Some(v) => v * &mu_word(w, n, &mus, &vars),
                None => LaurentPoly::zero(&vars),
            }
        })
        .collect();
    let mut acc = LaurentPoly::zero(&vars);
    for p in &parts {
        acc.add_assign_ref(p);
    }
    if opts.deframe {
        acc = &acc * &deframe_factor(opts, braid.writhe(), &vars)?;
    }
    Ok(acc)
}

/// `tr₂ ∘ … ∘ tr_N (ρ(β) ∘ (id ⊗ μ^{⊗N-1}))` for a braid tangle, deframed if requested.
fn braid_partial_trace(braid: &TangleExpr, opts: &EvalOptions) -> Result<Morphism, EngineError> {
    let vars = opts.vars();
    let program = compile(braid, opts, &vars)?;
    let n = program.dom.alpha_count();
    let r = opts.d.dim() as u64;
    let mus = mu_table(opts.d, &vars);
    let rest = r.pow(n as u32 - 1);
    let mut out = Morphism::zero(&SignSeq::ups(1), &SignSeq::ups(1), opts.d, &vars)?;
    for a in 0..r {
        let parts: Vec<Vec<(u64, LaurentPoly)>> = (0..rest as usize)
            .into_par_iter()
            .with_min_len(opts.chunk.max(1))
            .map(|y| {
                let yw = packed::from_flat(y as u64, n - 1, r);
                let w = (a as Packed) | (yw << 4);
                let weight = mu_word(yw, n - 1, &mus, &vars);
                run(&program, seed(w, &vars))
                    .into_iter()
                    .filter(|(ow, _)| ow >> 4 == yw)
                    .map(|(ow, v)| ((ow & 0xF) as u64, &v * &weight))
                    .collect()
            })
            .collect();
        out.set_column(a, parts.into_iter().flatten().collect());
    }
    if opts.deframe {
        out = out.scale(&deframe_factor(opts, braid.writhe(), &vars)?);
    }
    Ok(out)
}

fn braid_tangle(beta: &BraidWord, opts: &EvalOptions) -> TangleExpr {
    if opts.semiwelded {
        zh_braid(beta)
    } else {
        beta.to_tangle()
    }
}

/// The closure value by the trace formula: `tr(ρ(β) ∘ μ^{⊗N})`, using the
/// Zh image of `β` in semi-welded mode. Agrees with `evaluate(closure(β))`.
pub fn closure_trace(beta: &BraidWord, opts: &EvalOptions) -> Result<LaurentPoly, EngineError> {
    braid_trace(&braid_tangle(beta, opts), opts)
}

/// The partial-closure value by iterated partial traces. Agrees with
/// `evaluate(partial_closure(β))`.
pub fn partial_closure_trace(beta: &BraidWord, opts: &EvalOptions) -> Result<Morphism, EngineError> {
    braid_partial_trace(&braid_tangle(beta, opts), opts)
}
