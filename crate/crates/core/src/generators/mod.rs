//! Matrices assigned to the elementary (semi-welded) tangles.
//!
//! All constructors take the coefficient ring explicitly; it must contain
//! `q`, and the ω-crossing maps additionally need `w`.

mod morphism;

pub use morphism::Morphism;

use thiserror::Error;

use crate::ring::{Coeff, LaurentPoly, RingError, Vars, MAX_VARS};
use crate::schema::{BasisWord, Orient, SchemaError, SignSeq, Strand, SuperDim};
use crate::tangle::{Gen, GenKind, TangleExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("boundary mismatch: expected {expected}, found {found}")]
    Mismatch { expected: SignSeq, found: SignSeq },
    #[error("super dimensions differ: {0} vs {1}")]
    DimMismatch(SuperDim, SuperDim),
    #[error("space with {0} tensor factors is too large to materialize")]
    TooLarge(usize),
    #[error("ring {0} lacks variable `{1}`")]
    MissingVar(String, &'static str),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Schema(#[from] SchemaError),
}

/// Sign of a classical crossing (its local writhe).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Which way a cup or cap turns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

fn mono(vars: &Vars, qe: i32, we: i32, c: i64) -> Result<LaurentPoly, GenError> {
    let mut e = [0; MAX_VARS];
    let qi = vars.index_of("q").ok_or_else(|| GenError::MissingVar(vars.to_string(), "q"))?;
    e[qi] = qe;
    if we != 0 {
        let wi = vars.index_of("w").ok_or_else(|| GenError::MissingVar(vars.to_string(), "w"))?;
        e[wi] = we;
    }
    Ok(LaurentPoly::monomial(vars, e, Coeff::from(c)))
}

fn q(vars: &Vars, e: i32, c: i64) -> LaurentPoly {
    mono(vars, e, 0, c).expect("ring checked by caller")
}

fn require_q(vars: &Vars) -> Result<(), GenError> {
    mono(vars, 0, 0, 1).map(|_| ())
}

fn seq(s: &str) -> SignSeq {
    SignSeq::parse(s).expect("static sign sequence")
}

/// `Ř` (`sign = Plus`) or `Ř⁻¹` on `V ⊗ V`.
pub fn rmatrix(d: SuperDim, sign: Sign, vars: &Vars) -> Result<Morphism, GenError> {
    require_q(vars)?;
    let m = d.m as u8;
    Morphism::from_fn(&seq("uu"), &seq("uu"), d, vars, |w| {
        let (i, j) = (w.0[0], w.0[1]);
        let swapped = BasisWord(vec![j, i]);
        let s = if d.is_odd(i) && d.is_odd(j) { -1 } else { 1 };
        let qmq = &q(vars, 1, 1) - &q(vars, -1, 1);
        match (sign, i.cmp(&j)) {
            (Sign::Plus, std::cmp::Ordering::Equal) if i <= m => vec![(w.clone(), q(vars, 1, 1))],
            (Sign::Plus, std::cmp::Ordering::Equal) => vec![(w.clone(), q(vars, -1, -1))],
            (Sign::Plus, std::cmp::Ordering::Less) => vec![(swapped, q(vars, 0, s)), (w.clone(), qmq)],
            (Sign::Plus, std::cmp::Ordering::Greater) => vec![(swapped, q(vars, 0, s))],
            (Sign::Minus, std::cmp::Ordering::Equal) if i <= m => vec![(w.clone(), q(vars, -1, 1))],
            (Sign::Minus, std::cmp::Ordering::Equal) => vec![(w.clone(), q(vars, 1, -1))],
            (Sign::Minus, std::cmp::Ordering::Less) => vec![(swapped, q(vars, 0, s))],
            (Sign::Minus, std::cmp::Ordering::Greater) => vec![(swapped, q(vars, 0, s)), (w.clone(), qmq.neg())],
        }
    })
}

/// The q-deformed graded switch assigned to a virtual crossing.
pub fn tau_q(d: SuperDim, vars: &Vars) -> Result<Morphism, GenError> {
    require_q(vars)?;
    Morphism::from_fn(&seq("uu"), &seq("uu"), d, vars, |w| {
        let (i, j) = (w.0[0], w.0[1]);
        let c = match (d.is_odd(i), d.is_odd(j)) {
            (false, false) => q(vars, 0, 1),
            (true, false) => q(vars, 1, 1),
            (false, true) => q(vars, -1, 1),
            (true, true) => q(vars, 0, -1),
        };
        vec![(BasisWord(vec![j, i]), c)]
    })
}

/// `μ_k`: the right-cap value, equivalently the diagonal of `μ`.
pub fn mu_entry(d: SuperDim, k: u8, vars: &Vars) -> LaurentPoly {
    let (m, n, k) = (d.m as i32, d.n as i32, k as i32);
    if k <= m {
        q(vars, -m + n - 1 + 2 * k, 1)
    } else {
        q(vars, 3 * m + n + 1 - 2 * k, -1)
    }
}

/// Coefficient of `x_k* ⊗ x_k` in the left cup.
fn left_cup_entry(d: SuperDim, k: u8, vars: &Vars) -> LaurentPoly {
    let (m, n, k) = (d.m as i32, d.n as i32, k as i32);
    if k <= m {
        q(vars, m - n + 1 - 2 * k, 1)
    } else {
        q(vars, m - n - 4 * m - 1 + 2 * k, -1)
    }
}

/// Coevaluation: right cup `∅ → V ⊗ V*`, left cup `∅ → V* ⊗ V`.
pub fn cup(d: SuperDim, side: Side, vars: &Vars) -> Result<Morphism, GenError> {
    require_q(vars)?;
    let cod = match side {
        Side::Right => seq("ud"),
        Side::Left => seq("du"),
    };
    Morphism::from_fn(&SignSeq::empty(), &cod, d, vars, |_| {
        (1..=d.dim() as u8)
            .map(|k| {
                let c = match side {
                    Side::Right => LaurentPoly::one(vars),
                    Side::Left => left_cup_entry(d, k, vars),
                };
                (BasisWord(vec![k, k]), c)
            })
            .collect()
    })
}

/// Evaluation: left cap `V* ⊗ V → ∅`, right cap `V ⊗ V* → ∅`.
pub fn cap(d: SuperDim, side: Side, vars: &Vars) -> Result<Morphism, GenError> {
    require_q(vars)?;
    let dom = match side {
        Side::Right => seq("ud"),
        Side::Left => seq("du"),
    };
    Morphism::from_fn(&dom, &SignSeq::empty(), d, vars, |w| {
        if w.0[0] != w.0[1] {
            return Vec::new();
        }
        let c = match side {
            Side::Left => LaurentPoly::one(vars),
            Side::Right => mu_entry(d, w.0[0], vars),
        };
        vec![(BasisWord(vec![]), c)]
    })
}

/// `w`-exponent applied to odd basis vectors by an ω-over-α crossing.
pub fn omega_exponent(sign: Sign, orient: Orient) -> i32 {
    let e = sign.value() as i32;
    match orient {
        Orient::Up => e,
        Orient::Down => -e,
    }
}

fn omega_diag(d: SuperDim, e: i32, orient: Orient, vars: &Vars) -> Result<Morphism, GenError> {
    mono(vars, 0, 1, 1)?;
    let s = SignSeq(vec![Strand { orient, omega: false }]);
    Morphism::from_fn(&s, &s, d, vars, |w| {
        let c = if d.is_odd(w.0[0]) { mono(vars, 0, e, 1).expect("ring has w") } else { LaurentPoly::one(vars) };
        vec![(w.clone(), c)]
    })
}

/// The ω strand passing over one α strand: odd vectors scale by `w^{±1}`.
pub fn omega_over(d: SuperDim, sign: Sign, orient: Orient, vars: &Vars) -> Result<Morphism, GenError> {
    omega_diag(d, omega_exponent(sign, orient), orient, vars)
}

/// An α strand passing over the ω strand: the inverse of `omega_over`.
pub fn alpha_over(d: SuperDim, sign: Sign, orient: Orient, vars: &Vars) -> Result<Morphism, GenError> {
    omega_diag(d, -omega_exponent(sign, orient), orient, vars)
}

/// `X = diag(1,…,1,w,…,w)` raised to the power `k`.
pub fn x_power(d: SuperDim, k: i32, vars: &Vars) -> Result<Morphism, GenError> {
    omega_diag(d, k, Orient::Up, vars)
}

/// The diagonal map `μ: V → V`.
pub fn mu(d: SuperDim, vars: &Vars) -> Result<Morphism, GenError> {
    require_q(vars)?;
    Morphism::from_fn(&seq("u"), &seq("u"), d, vars, |w| vec![(w.clone(), mu_entry(d, w.0[0], vars))])
}

fn gen(kind: GenKind, dom: &SignSeq) -> TangleExpr {
    TangleExpr::Gen(Gen::new(kind, dom).expect("well-typed rotation"))
}

fn id(s: &str) -> TangleExpr {
    TangleExpr::Id(seq(s))
}

fn orient_seq(a: Orient, b: Orient) -> SignSeq {
    SignSeq(vec![Strand { orient: a, omega: false }, Strand { orient: b, omega: false }])
}

/// Express a classical or virtual crossing whose dom is `(a, b)` through an
/// up-up crossing of the same kind, bending down-oriented strands with cups and caps.
pub fn rotate_crossing(kind: GenKind, a: Orient, b: Orient) -> TangleExpr {
    use Orient::{Down, Up};
    match (a, b) {
        (Up, Up) => gen(kind, &orient_seq(Up, Up)),
        (Down, _) => {
            let bottom = TangleExpr::Tensor(
                Box::new(TangleExpr::Id(orient_seq(Down, b))),
                Box::new(gen(GenKind::Cup(Side::Right), &SignSeq::empty())),
            );
            let middle = TangleExpr::tensor_all(vec![id("d"), rotate_crossing(kind, b, Up), id("d")]);
            let top = TangleExpr::Tensor(
                Box::new(gen(GenKind::Cap(Side::Left), &seq("du"))),
                Box::new(TangleExpr::Id(orient_seq(b, Down))),
            );
            TangleExpr::compose_all(vec![top, middle, bottom])
        }
        (Up, Down) => {
            let bottom = TangleExpr::Tensor(
                Box::new(gen(GenKind::Cup(Side::Left), &SignSeq::empty())),
                Box::new(id("ud")),
            );
            let middle = TangleExpr::tensor_all(vec![id("d"), gen(kind, &seq("uu")), id("d")]);
            let top = TangleExpr::Tensor(Box::new(id("du")), Box::new(gen(GenKind::Cap(Side::Right), &seq("ud"))));
            TangleExpr::compose_all(vec![top, middle, bottom])
        }
    }
}

fn relabel(m: &Morphism, dom: &SignSeq, cod: &SignSeq) -> Result<Morphism, GenError> {
    let d = m.superdim();
    let mut out = Morphism::zero(dom, cod, d, m.vars())?;
    for c in 0..m.ncols() as u64 {
        out.set_column(c, m.column(c).to_vec());
    }
    Ok(out)
}

/// The morphism of one elementary tangle, with ω positions contributing no factor.
///
/// Crossings with a down-oriented α strand are evaluated through `rotate_crossing`.
pub fn gen_morphism(g: &Gen, d: SuperDim, vars: &Vars) -> Result<Morphism, GenError> {
    match g.kind {
        GenKind::Cup(side) => cup(d, side, vars),
        GenKind::Cap(side) => cap(d, side, vars),
        GenKind::Cross(_) | GenKind::Virtual if g.dom.has_omega() => {
            relabel(&Morphism::identity(&g.dom, d, vars)?, &g.dom, &g.cod)
        }
        GenKind::Cross(_) | GenKind::Virtual => {
            let (a, b) = (g.dom.0[0].orient, g.dom.0[1].orient);
            if (a, b) == (Orient::Up, Orient::Up) {
                match g.kind {
                    GenKind::Cross(s) => rmatrix(d, s, vars),
                    _ => tau_q(d, vars),
                }
            } else {
                evaluate_dense(&rotate_crossing(g.kind, a, b), d, vars)
            }
        }
        GenKind::OmegaOver(s) | GenKind::AlphaOver(s) => {
            let alpha = g.dom.0.iter().find(|x| !x.omega).expect("one α strand");
            let m = match g.kind {
                GenKind::OmegaOver(_) => omega_over(d, s, alpha.orient, vars)?,
                _ => alpha_over(d, s, alpha.orient, vars)?,
            };
            relabel(&m, &g.dom, &g.cod)
        }
    }
}

/// Reference evaluation by explicit composition and Kronecker products.
///
/// Exponential in the width; used as an oracle for the streaming engine.
pub fn evaluate_dense(t: &TangleExpr, d: SuperDim, vars: &Vars) -> Result<Morphism, GenError> {
    match t {
        TangleExpr::Id(s) => Morphism::identity(s, d, vars),
        TangleExpr::Gen(g) => gen_morphism(g, d, vars),
        TangleExpr::Tensor(a, b) => evaluate_dense(a, d, vars)?.tensor(&evaluate_dense(b, d, vars)?),
        TangleExpr::Compose(upper, lower) => evaluate_dense(upper, d, vars)?.compose(&evaluate_dense(lower, d, vars)?),
    }
}

#[cfg(test)]
mod tests;
