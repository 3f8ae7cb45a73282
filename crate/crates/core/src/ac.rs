//! Almost-classical certification and obstruction.
//!
//! Certification looks for a conservative Alexander numbering of the given
//! diagram: short arcs get integer labels, and at every classical crossing
//! the two short arcs on the left are labelled one more than the two on the
//! right. Crossings with a down-oriented strand are read through their
//! rotation to an up-up crossing, so "left" always means left of the
//! upward-pointing picture.
//!
//! Obstruction compares `Q̃(Zh(T))` with `Q(T)`: on an almost classical
//! diagram they differ by conjugation with `X^{ε₁k₁} ⊗ … ⊗ X^{ε_r k_r}`, so
//! every entry quotient must be a power of `w` that is a fixed integer linear
//! form in the `k_i`. Failure proves the tangle is not almost classical;
//! success proves nothing.

use rustc_hash::FxHashSet;
use thiserror::Error;

use crate::engine::{evaluate, EngineError, EvalOptions};
use crate::generators::rotate_crossing;
use crate::ring::{equal_up_to_unit, UnitPattern, Vars};
use crate::schema::{BasisWord, Orient, SuperDim};
use crate::tangle::{BraidWord, GenKind, Placed, TangleExpr};
use crate::zh::zh_tangle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AcError {
    #[error("tangle is {dom} -> {cod}; the obstruction needs T: a -> a")]
    NotEndomorphism { dom: String, cod: String },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// `Γ(a) − Γ(b) = delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub a: usize,
    pub b: usize,
    pub delta: i64,
}

/// Short arcs of a diagram and the difference relations imposed by its classical crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcGraph {
    pub arcs: usize,
    pub constraints: Vec<Constraint>,
    /// `ι_i`: the short arc at the `i`-th α end of the domain.
    pub initial: Vec<usize>,
    /// `τ_i`: the short arc at the `i`-th α end of the codomain.
    pub terminal: Vec<usize>,
    pub crossings: usize,
}

struct Builder {
    parent: Vec<usize>,
    constraints: Vec<Constraint>,
    crossings: usize,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = x;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }

    fn place(&mut self, state: &mut Vec<usize>, p: &Placed) {
        let g = &p.gen;
        let pos = p.pos;
        match g.kind {
            GenKind::Cup(_) => {
                let a = self.fresh();
                state.splice(pos..pos, [a, a]);
            }
            GenKind::Cap(_) => {
                self.merge(state[pos], state[pos + 1]);
                state.drain(pos..pos + 2);
            }
            GenKind::Cross(s) if g.is_classical() => {
                let (a, b) = (g.dom.0[0].orient, g.dom.0[1].orient);
                if (a, b) != (Orient::Up, Orient::Up) {
                    for inner in rotate_crossing(GenKind::Cross(s), a, b).linearize() {
                        self.place(state, &Placed { gen: inner.gen, pos: pos + inner.pos });
                    }
                    return;
                }
                let (bl, br) = (state[pos], state[pos + 1]);
                let (tl, tr) = (self.fresh(), self.fresh());
                self.constraints.push(Constraint { a: bl, b: br, delta: 1 });
                self.constraints.push(Constraint { a: tl, b: tr, delta: 1 });
                self.constraints.push(Constraint { a: tl, b: bl, delta: 0 });
                state[pos] = tl;
                state[pos + 1] = tr;
                self.crossings += 1;
            }
            _ if g.dom.len() == 2 => state.swap(pos, pos + 1),
            _ => {}
        }
    }
}

/// Short arcs and crossing relations of a diagram. Virtual crossings and
/// ω generators pass arcs through unbroken.
pub fn build_arc_graph(t: &TangleExpr) -> ArcGraph {
    let dom = t.dom();
    let mut b = Builder { parent: Vec::new(), constraints: Vec::new(), crossings: 0 };
    let mut state: Vec<usize> = (0..dom.len()).map(|_| b.fresh()).collect();
    let initial_raw: Vec<usize> = state.clone();
    for p in t.linearize() {
        b.place(&mut state, &p);
    }
    let cod = t.cod();
    let alpha = |seq: &crate::schema::SignSeq, arcs: &[usize]| -> Vec<usize> {
        seq.0.iter().zip(arcs).filter(|(s, _)| !s.omega).map(|(_, &a)| a).collect()
    };
    let initial_raw = alpha(&dom, &initial_raw);
    let terminal_raw = alpha(&cod, &state);

    let mut index = vec![usize::MAX; b.parent.len()];
    let mut arcs = 0;
    for x in 0..b.parent.len() {
        let r = b.find(x);
        if index[r] == usize::MAX {
            index[r] = arcs;
            arcs += 1;
        }
    }
    let raw = std::mem::take(&mut b.constraints);
    let mut id = |x: usize| index[b.find(x)];
    let constraints = raw
        .into_iter()
        .map(|c| Constraint { a: id(c.a), b: id(c.b), delta: c.delta })
        .collect();
    let initial = initial_raw.into_iter().map(&mut id).collect();
    let terminal = terminal_raw.into_iter().map(&mut id).collect();
    ArcGraph { arcs, constraints, initial, terminal, crossings: b.crossings }
}

/// The arc graph of a braid diagram.
pub fn build_arc_graph_braid(beta: &BraidWord) -> ArcGraph {
    build_arc_graph(&beta.to_tangle())
}

/// An Alexander numbering of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numbering {
    pub labels: Vec<i64>,
    pub conservative: bool,
    /// `(Γ(ι₁), …, Γ(ι_r))` when conservative.
    pub potential: Option<Vec<i64>>,
}

/// Union-find with offsets: `value(x) = value(root) + offset(x)`.
struct Potentials {
    parent: Vec<usize>,
    offset: Vec<i64>,
}

impl Potentials {
    fn new(n: usize) -> Potentials {
        Potentials { parent: (0..n).collect(), offset: vec![0; n] }
    }

    fn find(&mut self, x: usize) -> (usize, i64) {
        let p = self.parent[x];
        if p == x {
            return (x, 0);
        }
        let (r, off) = self.find(p);
        self.parent[x] = r;
        self.offset[x] += off;
        (r, self.offset[x])
    }

    /// Impose `value(a) − value(b) = delta`; false on contradiction.
    fn relate(&mut self, a: usize, b: usize, delta: i64) -> bool {
        let (ra, oa) = self.find(a);
        let (rb, ob) = self.find(b);
        if ra == rb {
            return oa - ob == delta;
        }
        self.parent[ra] = rb;
        self.offset[ra] = delta + ob - oa;
        true
    }

    fn solve(mut self, base: Option<usize>) -> Vec<i64> {
        let n = self.parent.len();
        let mut labels: Vec<i64> = (0..n).map(|x| self.find(x).1).collect();
        if let Some(b) = base {
            let shift = labels[b];
            let root = self.find(b).0;
            for x in 0..n {
                if self.find(x).0 == root {
                    labels[x] -= shift;
                }
            }
        }
        labels
    }
}

fn constrained(g: &ArcGraph, conservative: bool) -> Option<Potentials> {
    let mut p = Potentials::new(g.arcs);
    for c in &g.constraints {
        if !p.relate(c.a, c.b, c.delta) {
            return None;
        }
    }
    if conservative {
        for (&i, &t) in g.initial.iter().zip(&g.terminal) {
            if !p.relate(i, t, 0) {
                return None;
            }
        }
    }
    Some(p)
}

/// Solve the crossing relations, preferring a conservative numbering.
///
/// Every component is pinned so its root carries label 0, except that the
/// component of `ι₁` is pinned at `Γ(ι₁) = 0`. Returns `None` when the
/// diagram is not Alexander numerable.
pub fn solve_numbering(g: &ArcGraph) -> Option<Numbering> {
    let base = g.initial.first().copied();
    if let Some(p) = constrained(g, true) {
        let labels = p.solve(base);
        let potential = g.initial.iter().map(|&i| labels[i]).collect();
        return Some(Numbering { labels, conservative: true, potential: Some(potential) });
    }
    let p = constrained(g, false)?;
    Some(Numbering { labels: p.solve(base), conservative: false, potential: None })
}

impl Numbering {
    /// Whether every constraint of `g` holds.
    pub fn satisfies(&self, g: &ArcGraph) -> bool {
        g.constraints.iter().all(|c| self.labels[c.a] - self.labels[c.b] == c.delta)
    }
}

/// Which comparison in the obstruction failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// One side vanishes at this entry and the other does not.
    Support { row: BasisWord, col: BasisWord },
    /// The entry quotient is not a power of `w`.
    NotWPower { row: BasisWord, col: BasisWord },
    /// The exponents admit no integer `k`.
    Inconsistent,
}

/// `Σ_i coeffs[i]·k_i = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearEquation {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
}

/// All integer `k` with `k = particular + Σ c_j kernel[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KFamily {
    pub equations: Vec<LinearEquation>,
    pub particular: Vec<i64>,
    pub kernel: Vec<Vec<i64>>,
}

impl KFamily {
    pub fn contains(&self, k: &[i64]) -> bool {
        self.equations.iter().all(|e| e.coeffs.iter().zip(k).map(|(a, b)| a * b).sum::<i64>() == e.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Proof that the tangle is not almost classical.
    Obstructed(Obstruction),
    /// The entries are compatible with conjugation for these `k`.
    Consistent(KFamily),
}

impl Verdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, Verdict::Obstructed(_))
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        return if a < 0 { (-a, -1, 0) } else { (a, 1, 0) };
    }
    let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
    (g, y, x - a.div_euclid(b) * y)
}

/// Integer solutions of `A k = b` via column Hermite reduction `A U = H`.
fn solve_integer(equations: &[LinearEquation], nvars: usize) -> Option<(Vec<i64>, Vec<Vec<i64>>)> {
    let mut h: Vec<Vec<i128>> = equations.iter().map(|e| e.coeffs.iter().map(|&c| c as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..nvars).map(|i| (0..nvars).map(|j| (i == j) as i128).collect()).collect();
    let combine = |m: &mut Vec<Vec<i128>>, c: usize, j: usize, coef: [i128; 4]| {
        for row in m.iter_mut() {
            let (x, y) = (row[c], row[j]);
            row[c] = coef[0] * x + coef[1] * y;
            row[j] = coef[2] * x + coef[3] * y;
        }
    };
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut col = 0;
    for r in 0..h.len() {
        if col == nvars {
            break;
        }
        for j in col + 1..nvars {
            let (a, b) = (h[r][col], h[r][j]);
            if b == 0 {
                continue;
            }
            let (g, x, y) = ext_gcd(a, b);
            let coef = [x, y, -b / g, a / g];
            combine(&mut h, col, j, coef);
            combine(&mut u, col, j, coef);
        }
        if h[r][col] != 0 {
            pivots.push((r, col));
            col += 1;
        }
    }
    let mut y = vec![0i128; nvars];
    let mut next = 0;
    for (r, e) in equations.iter().enumerate() {
        let s: i128 = (0..nvars).map(|j| h[r][j] * y[j]).sum();
        let rest = e.rhs as i128 - s;
        if next < pivots.len() && pivots[next].0 == r {
            let c = pivots[next].1;
            if rest % h[r][c] != 0 {
                return None;
            }
            y[c] = rest / h[r][c];
            next += 1;
        } else if rest != 0 {
            return None;
        }
    }
    let particular = (0..nvars).map(|i| (0..nvars).map(|j| u[i][j] * y[j]).sum::<i128>() as i64).collect();
    let kernel = (pivots.len()..nvars).map(|j| (0..nvars).map(|i| u[i][j] as i64).collect()).collect();
    Some((particular, kernel))
}

/// Compare `Q̃^{m|n}(Zh(T))` with `Q^{m|n}(T)` for `T: a → a`.
pub fn ac_obstruction(t: &TangleExpr, d: SuperDim) -> Result<Verdict, AcError> {
    let (dom, cod) = (t.dom(), t.cod());
    if dom != cod {
        return Err(AcError::NotEndomorphism { dom: dom.to_string(), cod: cod.to_string() });
    }
    let qw = Vars::qw();
    let semi = EvalOptions::new(d).semiwelded(true);
    let (a, b) = rayon::join(|| evaluate(&zh_tangle(t), &semi), || evaluate(t, &EvalOptions::new(d)));
    let (a, b) = (a?, b?.map_entries(&qw, |e| e.clone().with_vars(&qw)).map_err(EngineError::from)?);
    let eps: Vec<i64> = dom.0.iter().map(|s| if s.orient == Orient::Up { 1 } else { -1 }).collect();
    let n = dom.len();
    let odd = |w: &BasisWord| -> Vec<i64> { w.0.iter().map(|&x| d.is_odd(x) as i64).collect() };
    let pattern = UnitPattern::positive(&qw, &["w"]);
    let wi = qw.index_of("w").expect("qw has w");
    let mut equations = FxHashSet::default();
    for c in 0..a.ncols() as u64 {
        let col = BasisWord::from_flat(c, n, d);
        let mut rows: Vec<u64> = a.column(c).iter().chain(b.column(c)).map(|(r, _)| *r).collect();
        rows.sort_unstable();
        rows.dedup();
        for r in rows {
            let row = BasisWord::from_flat(r, n, d);
            let (x, y) = (a.entry_flat(r, c), b.entry_flat(r, c));
            if x.is_zero() != y.is_zero() {
                return Ok(Verdict::Obstructed(Obstruction::Support { row, col }));
            }
            let Some(unit) = equal_up_to_unit(&x, &y, &pattern) else {
                return Ok(Verdict::Obstructed(Obstruction::NotWPower { row, col }));
            };
            let rhs = unit.terms()[0].0[wi] as i64;
            let (or, oc) = (odd(&row), odd(&col));
            let coeffs: Vec<i64> = (0..n).map(|i| eps[i] * (or[i] - oc[i])).collect();
            equations.insert(LinearEquation { coeffs, rhs });
        }
    }
    let mut equations: Vec<LinearEquation> = equations.into_iter().collect();
    equations.sort_by(|x, y| (&x.coeffs, x.rhs).cmp(&(&y.coeffs, y.rhs)));
    Ok(match solve_integer(&equations, n) {
        None => Verdict::Obstructed(Obstruction::Inconsistent),
        Some((particular, kernel)) => Verdict::Consistent(KFamily { equations, particular, kernel }),
    })
}

/// The obstruction for a braid, compared as an `N`-strand endomorphism.
pub fn ac_obstruction_braid(beta: &BraidWord, d: SuperDim) -> Result<Verdict, AcError> {
    ac_obstruction(&beta.to_tangle(), d)
}
