//! Tangle expressions and braid words: syntax trees, parsers, renderers,
//! closures and skein triples.

use std::fmt;

use thiserror::Error;

use crate::generators::{Side, Sign};
use crate::schema::{Orient, SchemaError, SignSeq, Strand};

mod gauss;
pub use gauss::{parse_gauss, parse_gauss_document, GaussCode, GaussDiagram, Pass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("line {line}: unknown token `{token}`")]
    UnknownToken { line: usize, token: String },
    #[error("line {line}: position {pos} out of range for {strands} strands")]
    BadPosition { line: usize, pos: usize, strands: usize },
    #[error("line {line}: generators overlap at position {pos}")]
    Overlap { line: usize, pos: usize },
    #[error("line {line}: boundary mismatch for `{gen}`: expected {expected}, found {actual}")]
    Boundary { line: usize, gen: String, expected: String, actual: SignSeq },
    #[error("missing `N=<strands>` header")]
    MissingHeader,
    #[error("missing `signs:` line")]
    MissingSigns,
    #[error("cannot compose: upper dom {upper} does not match lower cod {lower}")]
    Compose { upper: SignSeq, lower: SignSeq },
    #[error("crossing site {0} is not a classical crossing")]
    NotClassical(usize),
    #[error("crossing site {0} does not exist")]
    NoSuchSite(usize),
    #[error("gauss code: {0}")]
    Gauss(String),
    #[error("{curls} curl counts for {strands} strands")]
    CurlCount { curls: usize, strands: usize },
    #[error(transparent)]
    Schema(#[from] SchemaError),
}

/// Kinds of elementary tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// Classical crossing with the given local writhe.
    Cross(Sign),
    Virtual,
    Cup(Side),
    Cap(Side),
    /// The ω strand crossing over an α strand.
    OmegaOver(Sign),
    /// An α strand crossing over the ω strand.
    AlphaOver(Sign),
}

impl GenKind {
    pub fn name(self) -> &'static str {
        match self {
            GenKind::Cross(Sign::Plus) => "xp",
            GenKind::Cross(Sign::Minus) => "xm",
            GenKind::Virtual => "v",
            GenKind::Cup(Side::Left) => "cupL",
            GenKind::Cup(Side::Right) => "cupR",
            GenKind::Cap(Side::Left) => "capL",
            GenKind::Cap(Side::Right) => "capR",
            GenKind::OmegaOver(Sign::Plus) => "oxp",
            GenKind::OmegaOver(Sign::Minus) => "oxm",
            GenKind::AlphaOver(Sign::Plus) => "xop",
            GenKind::AlphaOver(Sign::Minus) => "xom",
        }
    }

    pub fn from_name(s: &str) -> Option<GenKind> {
        Some(match s {
            "xp" => GenKind::Cross(Sign::Plus),
            "xm" => GenKind::Cross(Sign::Minus),
            "v" => GenKind::Virtual,
            "cupL" => GenKind::Cup(Side::Left),
            "cupR" => GenKind::Cup(Side::Right),
            "capL" => GenKind::Cap(Side::Left),
            "capR" => GenKind::Cap(Side::Right),
            "oxp" => GenKind::OmegaOver(Sign::Plus),
            "oxm" => GenKind::OmegaOver(Sign::Minus),
            "xop" => GenKind::AlphaOver(Sign::Plus),
            "xom" => GenKind::AlphaOver(Sign::Minus),
            _ => return None,
        })
    }

    pub fn is_omega(self) -> bool {
        matches!(self, GenKind::OmegaOver(_) | GenKind::AlphaOver(_))
    }
}

/// A typed elementary tangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gen {
    pub kind: GenKind,
    pub dom: SignSeq,
    pub cod: SignSeq,
}

fn swapped(dom: &SignSeq) -> SignSeq {
    SignSeq(vec![dom.0[1], dom.0[0]])
}

impl Gen {
    /// Type-check `kind` against `dom` and compute the codomain.
    ///
    /// The error string describes the expected boundary.
    pub fn new(kind: GenKind, dom: &SignSeq) -> Result<Gen, String> {
        let alpha = |s: &Strand| !s.omega;
        let cod = match kind {
            GenKind::Cross(_) => {
                if dom.len() != 2 || dom.0[0].omega != dom.0[1].omega {
                    return Err("two α strands or two ω strands".into());
                }
                swapped(dom)
            }
            GenKind::Virtual => {
                if dom.len() != 2 {
                    return Err("two strands".into());
                }
                swapped(dom)
            }
            GenKind::Cup(side) => {
                if !dom.is_empty() {
                    return Err("no strands".into());
                }
                match side {
                    Side::Right => SignSeq(vec![Strand::UP, Strand::DOWN]),
                    Side::Left => SignSeq(vec![Strand::DOWN, Strand::UP]),
                }
            }
            GenKind::Cap(side) => {
                let want = match side {
                    Side::Right => [Strand::UP, Strand::DOWN],
                    Side::Left => [Strand::DOWN, Strand::UP],
                };
                if dom.0 != want {
                    return Err(SignSeq(want.to_vec()).to_string());
                }
                SignSeq::empty()
            }
            GenKind::OmegaOver(_) | GenKind::AlphaOver(_) => match dom.len() {
                1 if alpha(&dom.0[0]) => dom.clone(),
                2 if dom.0[0].omega != dom.0[1].omega => swapped(dom),
                _ => return Err("one α strand, or one α and one ω strand".into()),
            },
        };
        Ok(Gen { kind, dom: dom.clone(), cod })
    }

    /// True for a classical crossing between two α strands.
    pub fn is_classical(&self) -> bool {
        matches!(self.kind, GenKind::Cross(_)) && !self.dom.0[0].omega
    }
}

/// A virtual or semi-welded tangle diagram built from elementary pieces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TangleExpr {
    Id(SignSeq),
    Gen(Gen),
    Tensor(Box<TangleExpr>, Box<TangleExpr>),
    /// `Compose(upper, lower)`: `lower` first, then `upper`.
    Compose(Box<TangleExpr>, Box<TangleExpr>),
}

/// One generator together with its 0-based strand offset at the moment it applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placed {
    pub gen: Gen,
    pub pos: usize,
}

impl TangleExpr {
    pub fn dom(&self) -> SignSeq {
        match self {
            TangleExpr::Id(s) => s.clone(),
            TangleExpr::Gen(g) => g.dom.clone(),
            TangleExpr::Tensor(a, b) => a.dom().concat(&b.dom()),
            TangleExpr::Compose(_, lower) => lower.dom(),
        }
    }

    pub fn cod(&self) -> SignSeq {
        match self {
            TangleExpr::Id(s) => s.clone(),
            TangleExpr::Gen(g) => g.cod.clone(),
            TangleExpr::Tensor(a, b) => a.cod().concat(&b.cod()),
            TangleExpr::Compose(upper, _) => upper.cod(),
        }
    }

    /// Checked composition `upper ∘ lower`.
    pub fn compose(upper: TangleExpr, lower: TangleExpr) -> Result<TangleExpr, TangleError> {
        let (u, l) = (upper.dom(), lower.cod());
        if u != l {
            return Err(TangleError::Compose { upper: u, lower: l });
        }
        Ok(TangleExpr::Compose(Box::new(upper), Box::new(lower)))
    }

    /// Compose a list given top first. Panics on an empty list.
    pub fn compose_all(mut parts: Vec<TangleExpr>) -> TangleExpr {
        let mut acc = parts.pop().expect("at least one part");
        while let Some(upper) = parts.pop() {
            acc = TangleExpr::Compose(Box::new(upper), Box::new(acc));
        }
        acc
    }

    /// Tensor a list left to right, dropping empty identities. Panics on an empty list.
    pub fn tensor_all(parts: Vec<TangleExpr>) -> TangleExpr {
        let mut kept: Vec<TangleExpr> =
            parts.into_iter().filter(|p| !matches!(p, TangleExpr::Id(s) if s.is_empty())).collect();
        if kept.is_empty() {
            return TangleExpr::Id(SignSeq::empty());
        }
        let mut acc = kept.remove(0);
        for p in kept {
            acc = TangleExpr::Tensor(Box::new(acc), Box::new(p));
        }
        acc
    }

    /// Verify every composition boundary.
    pub fn check(&self) -> Result<(), TangleError> {
        match self {
            TangleExpr::Id(_) | TangleExpr::Gen(_) => Ok(()),
            TangleExpr::Tensor(a, b) => {
                a.check()?;
                b.check()
            }
            TangleExpr::Compose(upper, lower) => {
                upper.check()?;
                lower.check()?;
                let (u, l) = (upper.dom(), lower.cod());
                if u != l {
                    return Err(TangleError::Compose { upper: u, lower: l });
                }
                Ok(())
            }
        }
    }

    /// Generators in application order (bottom to top; left to right within a tensor).
    pub fn linearize(&self) -> Vec<Placed> {
        let mut out = Vec::new();
        self.linearize_into(0, &mut out);
        out
    }

    fn linearize_into(&self, offset: usize, out: &mut Vec<Placed>) {
        match self {
            TangleExpr::Id(_) => {}
            TangleExpr::Gen(g) => out.push(Placed { gen: g.clone(), pos: offset }),
            TangleExpr::Compose(upper, lower) => {
                lower.linearize_into(offset, out);
                upper.linearize_into(offset, out);
            }
            TangleExpr::Tensor(a, b) => {
                a.linearize_into(offset, out);
                b.linearize_into(offset + a.cod().len(), out);
            }
        }
    }

    /// Rebuild a slice-per-generator expression from a placement list.
    pub fn from_placed(dom: &SignSeq, placed: &[Placed]) -> Result<TangleExpr, TangleError> {
        let mut cur = dom.clone();
        let mut slices = Vec::with_capacity(placed.len());
        for (i, p) in placed.iter().enumerate() {
            let k = p.gen.dom.len();
            if p.pos + k > cur.len() || cur.0[p.pos..p.pos + k] != p.gen.dom.0[..] {
                return Err(TangleError::Boundary {
                    line: i + 1,
                    gen: p.gen.kind.name().into(),
                    expected: p.gen.dom.to_string(),
                    actual: SignSeq(cur.0[p.pos.min(cur.len())..(p.pos + k).min(cur.len())].to_vec()),
                });
            }
            let left = SignSeq(cur.0[..p.pos].to_vec());
            let right = SignSeq(cur.0[p.pos + k..].to_vec());
            slices.push(TangleExpr::tensor_all(vec![
                TangleExpr::Id(left.clone()),
                TangleExpr::Gen(p.gen.clone()),
                TangleExpr::Id(right.clone()),
            ]));
            cur = left.concat(&p.gen.cod).concat(&right);
        }
        if slices.is_empty() {
            return Ok(TangleExpr::Id(dom.clone()));
        }
        slices.reverse();
        Ok(TangleExpr::compose_all(slices))
    }

    /// Classical writhe: signed count of α–α classical crossings.
    pub fn writhe(&self) -> i64 {
        self.linearize()
            .iter()
            .filter(|p| p.gen.is_classical())
            .map(|p| match p.gen.kind {
                GenKind::Cross(s) => s.value(),
                _ => 0,
            })
            .sum()
    }

    pub fn has_omega(&self) -> bool {
        self.linearize().iter().any(|p| p.gen.kind.is_omega() || p.gen.dom.has_omega() || p.gen.cod.has_omega())
            || self.dom().has_omega()
    }

    /// Render as a tangle document with one generator per line.
    pub fn render(&self) -> String {
        let mut out = format!("signs: {}\n", render_signs(&self.dom()));
        for p in self.linearize() {
            out.push_str(&format!("{} {}\n", p.gen.kind.name(), p.pos + 1));
        }
        out
    }
}

fn render_signs(s: &SignSeq) -> String {
    if s.is_empty() {
        String::new()
    } else {
        s.to_string()
    }
}

/// Parse a tangle document.
///
/// The first non-blank line is `signs: <u|d|U|D…>`; each further line is one
/// slice listing `<gen> <pos>` items separated by commas. Positions are
/// 1-based indices into the slice's incoming strands; a cup at position `p`
/// is inserted just before incoming strand `p` (`p = len+1` appends). Lines
/// starting with `#` are comments.
pub fn parse_tangle(doc: &str) -> Result<TangleExpr, TangleError> {
    let mut lines = doc
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, first) = lines.next().ok_or(TangleError::MissingSigns)?;
    let signs = first.strip_prefix("signs:").ok_or(TangleError::MissingSigns)?;
    let dom = SignSeq::parse(signs.trim())?;
    let mut cur = dom.clone();
    let mut slices = Vec::new();
    for (lineno, line) in lines {
        let mut items = Vec::new();
        for item in line.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let mut parts = item.split_whitespace();
            let name = parts.next().unwrap_or("");
            let kind = GenKind::from_name(name)
                .ok_or_else(|| TangleError::UnknownToken { line: lineno, token: name.to_string() })?;
            let pos_tok = parts.next().unwrap_or("");
            let pos: usize = pos_tok
                .parse()
                .map_err(|_| TangleError::UnknownToken { line: lineno, token: item.to_string() })?;
            if parts.next().is_some() {
                return Err(TangleError::UnknownToken { line: lineno, token: item.to_string() });
            }
            if pos == 0 {
                return Err(TangleError::BadPosition { line: lineno, pos, strands: cur.len() });
            }
            items.push((kind, pos - 1));
        }
        let (slice, next) = build_slice(&cur, &items, lineno)?;
        slices.push(slice);
        cur = next;
    }
    if slices.is_empty() {
        return Ok(TangleExpr::Id(dom));
    }
    slices.reverse();
    Ok(TangleExpr::compose_all(slices))
}

fn arity(kind: GenKind, cur: &SignSeq, pos: usize) -> usize {
    match kind {
        GenKind::Cup(_) => 0,
        GenKind::OmegaOver(_) | GenKind::AlphaOver(_) => {
            let here = cur.0.get(pos).is_some_and(|s| s.omega);
            let next = cur.0.get(pos + 1).is_some_and(|s| s.omega);
            if here || next {
                2
            } else {
                1
            }
        }
        _ => 2,
    }
}

fn build_slice(cur: &SignSeq, items: &[(GenKind, usize)], line: usize) -> Result<(TangleExpr, SignSeq), TangleError> {
    let mut spans: Vec<(usize, usize, GenKind)> = items.iter().map(|&(k, p)| (p, arity(k, cur, p), k)).collect();
    spans.sort_by_key(|s| (s.0, s.1));
    let mut parts = Vec::new();
    let mut next = Vec::new();
    let mut at = 0;
    for &(pos, k, kind) in &spans {
        let limit = if k == 0 { cur.len() + 1 } else { cur.len() };
        if pos + k > limit || (k == 0 && pos > cur.len()) {
            return Err(TangleError::BadPosition { line, pos: pos + 1, strands: cur.len() });
        }
        if pos < at {
            return Err(TangleError::Overlap { line, pos: pos + 1 });
        }
        let gap = SignSeq(cur.0[at..pos].to_vec());
        next.extend_from_slice(&gap.0);
        parts.push(TangleExpr::Id(gap));
        let dom = SignSeq(cur.0[pos..pos + k].to_vec());
        let g = Gen::new(kind, &dom).map_err(|expected| TangleError::Boundary {
            line,
            gen: kind.name().into(),
            expected,
            actual: dom.clone(),
        })?;
        next.extend_from_slice(&g.cod.0);
        parts.push(TangleExpr::Gen(g));
        at = pos + k;
    }
    let rest = SignSeq(cur.0[at..].to_vec());
    next.extend_from_slice(&rest.0);
    parts.push(TangleExpr::Id(rest));
    Ok((TangleExpr::tensor_all(parts), SignSeq(next)))
}

/// Braid generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LetterKind {
    /// `σ_i` or `σ_i⁻¹`.
    Sigma(Sign),
    /// The virtual generator `χ_i`.
    Chi,
}

/// A generator acting on strands `pos` and `pos + 1` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub kind: LetterKind,
    pub pos: usize,
}

impl Letter {
    pub fn sigma(pos: usize) -> Letter {
        Letter { kind: LetterKind::Sigma(Sign::Plus), pos }
    }

    pub fn sigma_inv(pos: usize) -> Letter {
        Letter { kind: LetterKind::Sigma(Sign::Minus), pos }
    }

    pub fn chi(pos: usize) -> Letter {
        Letter { kind: LetterKind::Chi, pos }
    }

    pub fn inverse(self) -> Letter {
        match self.kind {
            LetterKind::Sigma(s) => Letter { kind: LetterKind::Sigma(s.flip()), pos: self.pos },
            LetterKind::Chi => self,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            LetterKind::Sigma(Sign::Plus) => 's',
            LetterKind::Sigma(Sign::Minus) => 'S',
            LetterKind::Chi => 'v',
        };
        write!(f, "{c}{}", self.pos)
    }
}

/// A virtual braid word; the matrix of the word is the product of its letters in written order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord, TangleError> {
        if strands == 0 {
            return Err(TangleError::BadPosition { line: 1, pos: 0, strands });
        }
        for l in &letters {
            if l.pos == 0 || l.pos >= strands {
                return Err(TangleError::BadPosition { line: 1, pos: l.pos, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn writhe(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l.kind {
                LetterKind::Sigma(s) => s.value(),
                LetterKind::Chi => 0,
            })
            .sum()
    }

    pub fn classical_count(&self) -> usize {
        self.letters.iter().filter(|l| matches!(l.kind, LetterKind::Sigma(_))).count()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands.max(other.strands), letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// The braid as an `N → N` tangle of upward strands.
    pub fn to_tangle(&self) -> TangleExpr {
        let n = self.strands;
        let slices: Vec<TangleExpr> = self
            .letters
            .iter()
            .map(|l| {
                let kind = match l.kind {
                    LetterKind::Sigma(s) => GenKind::Cross(s),
                    LetterKind::Chi => GenKind::Virtual,
                };
                let g = Gen::new(kind, &SignSeq::ups(2)).expect("up-up crossing");
                TangleExpr::tensor_all(vec![
                    TangleExpr::Id(SignSeq::ups(l.pos - 1)),
                    TangleExpr::Gen(g),
                    TangleExpr::Id(SignSeq::ups(n - l.pos - 1)),
                ])
            })
            .collect();
        if slices.is_empty() {
            return TangleExpr::Id(SignSeq::ups(n));
        }
        TangleExpr::compose_all(slices)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={}", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Parse `N=<k>` followed by whitespace-separated `sK`, `SK`, `vK` tokens.
pub fn parse_braid(text: &str) -> Result<BraidWord, TangleError> {
    let mut tokens = text.split_whitespace().filter(|t| !t.is_empty());
    let head = tokens.next().ok_or(TangleError::MissingHeader)?;
    let strands: usize = head
        .strip_prefix("N=")
        .and_then(|s| s.parse().ok())
        .ok_or(TangleError::MissingHeader)?;
    let mut letters = Vec::new();
    for tok in tokens {
        let mut chars = tok.chars();
        let kind = match chars.next() {
            Some('s') => LetterKind::Sigma(Sign::Plus),
            Some('S') => LetterKind::Sigma(Sign::Minus),
            Some('v') => LetterKind::Chi,
            _ => return Err(TangleError::UnknownToken { line: 1, token: tok.to_string() }),
        };
        let pos: usize = chars
            .as_str()
            .parse()
            .map_err(|_| TangleError::UnknownToken { line: 1, token: tok.to_string() })?;
        letters.push(Letter { kind, pos });
    }
    BraidWord::new(strands, letters)
}

fn cups_then(n_up: usize, open: usize) -> Vec<TangleExpr> {
    // slices bottom first: cup k creates the k-th up/down pair
    (open + 1..=n_up)
        .map(|k| {
            TangleExpr::tensor_all(vec![
                TangleExpr::Id(SignSeq::ups(k - 1)),
                TangleExpr::Gen(Gen::new(GenKind::Cup(Side::Right), &SignSeq::empty()).expect("cup")),
                TangleExpr::Id(SignSeq(vec![Strand::DOWN; k - 1 - open])),
            ])
        })
        .collect()
}

fn closing(beta: &BraidWord, open: usize) -> TangleExpr {
    closing_body(beta.to_tangle(), beta.strands, open)
}

fn closing_body(body: TangleExpr, n: usize, open: usize) -> TangleExpr {
    let downs = SignSeq(vec![Strand::DOWN; n - open]);
    let mut bottom_up = cups_then(n, open);
    bottom_up.push(TangleExpr::tensor_all(vec![body, TangleExpr::Id(downs)]));
    for k in (open + 1..=n).rev() {
        bottom_up.push(TangleExpr::tensor_all(vec![
            TangleExpr::Id(SignSeq::ups(k - 1)),
            TangleExpr::Gen(
                Gen::new(GenKind::Cap(Side::Right), &SignSeq(vec![Strand::UP, Strand::DOWN])).expect("cap"),
            ),
            TangleExpr::Id(SignSeq(vec![Strand::DOWN; k - 1 - open])),
        ]));
    }
    bottom_up.reverse();
    TangleExpr::compose_all(bottom_up)
}

/// The closure `β̂`: every strand closed on the right.
pub fn closure(beta: &BraidWord) -> TangleExpr {
    closing(beta, 0)
}

/// The partial closure `β′`: strands `2..N` closed, strand 1 left open.
pub fn partial_closure(beta: &BraidWord) -> TangleExpr {
    closing(beta, 1)
}

fn placed(before: SignSeq, kind: GenKind, dom: SignSeq, after: SignSeq) -> TangleExpr {
    let g = Gen::new(kind, &dom).expect("well-typed curl slice");
    TangleExpr::tensor_all(vec![TangleExpr::Id(before), TangleExpr::Gen(g), TangleExpr::Id(after)])
}

/// One virtual curl on upward strand `p` (0-based) of `n`, as slices top
/// first. Positive curls turn clockwise, closing to the right.
fn curl_slices(n: usize, p: usize, sign: Sign) -> Vec<TangleExpr> {
    let ups = SignSeq::ups;
    let ud = SignSeq(vec![Strand::UP, Strand::DOWN]);
    let du = SignSeq(vec![Strand::DOWN, Strand::UP]);
    let down = SignSeq(vec![Strand::DOWN]);
    let rest = n - p - 1;
    let bottom_up = match sign {
        Sign::Plus => vec![
            placed(ups(p + 1), GenKind::Cup(Side::Right), SignSeq::empty(), ups(rest)),
            placed(ups(p), GenKind::Virtual, ups(2), down.concat(&ups(rest))),
            placed(ups(p + 1), GenKind::Cap(Side::Right), ud, ups(rest)),
        ],
        Sign::Minus => vec![
            placed(ups(p), GenKind::Cup(Side::Left), SignSeq::empty(), ups(rest + 1)),
            placed(ups(p).concat(&down), GenKind::Virtual, ups(2), ups(rest)),
            placed(ups(p), GenKind::Cap(Side::Left), du, ups(rest + 1)),
        ],
    };
    bottom_up.into_iter().rev().collect()
}

/// The closure `β̂` with `curls[p]` virtual curls (negative for
/// counterclockwise) on the closing arc of strand `p + 1`. Curls change the
/// rotational class but not the virtual knot.
pub fn closure_with_curls(beta: &BraidWord, curls: &[i32]) -> Result<TangleExpr, TangleError> {
    let n = beta.strands;
    if curls.len() != n {
        return Err(TangleError::CurlCount { curls: curls.len(), strands: n });
    }
    let mut slices = Vec::new();
    for (p, &r) in curls.iter().enumerate() {
        let sign = if r > 0 { Sign::Plus } else { Sign::Minus };
        for _ in 0..r.unsigned_abs() {
            slices.extend(curl_slices(n, p, sign));
        }
    }
    slices.push(beta.to_tangle());
    Ok(closing_body(TangleExpr::compose_all(slices), n, 0))
}

/// A classical crossing in a braid word (1-based letter index) or in a
/// tangle (1-based index into `linearize`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingSite {
    Letter(usize),
    Gen(usize),
}

/// `(β₊, β₋, β₀)` differing only at the given letter.
pub fn skein_triple_braid(beta: &BraidWord, letter: usize) -> Result<(BraidWord, BraidWord, BraidWord), TangleError> {
    let idx = letter.checked_sub(1).filter(|&i| i < beta.letters.len()).ok_or(TangleError::NoSuchSite(letter))?;
    let l = beta.letters[idx];
    if l.kind == LetterKind::Chi {
        return Err(TangleError::NotClassical(letter));
    }
    let with = |kind: Option<LetterKind>| {
        let mut letters = beta.letters.clone();
        match kind {
            Some(k) => letters[idx].kind = k,
            None => {
                letters.remove(idx);
            }
        }
        BraidWord { strands: beta.strands, letters }
    };
    Ok((with(Some(LetterKind::Sigma(Sign::Plus))), with(Some(LetterKind::Sigma(Sign::Minus))), with(None)))
}

/// `(T₊, T₋, T₀)` differing only at the given classical crossing.
pub fn skein_triple(t: &TangleExpr, site: usize) -> Result<(TangleExpr, TangleExpr, TangleExpr), TangleError> {
    let placed = t.linearize();
    let idx = site.checked_sub(1).filter(|&i| i < placed.len()).ok_or(TangleError::NoSuchSite(site))?;
    let target = &placed[idx];
    if !target.gen.is_classical() {
        return Err(TangleError::NotClassical(site));
    }
    let dom = t.dom();
    let swap_sign = |s: Sign| {
        let mut p = placed.clone();
        p[idx].gen = Gen::new(GenKind::Cross(s), &target.gen.dom).expect("same boundary");
        TangleExpr::from_placed(&dom, &p)
    };
    let plus = swap_sign(Sign::Plus)?;
    let minus = swap_sign(Sign::Minus)?;
    let (a, b) = (target.gen.dom.0[0].orient, target.gen.dom.0[1].orient);
    let mut p0: Vec<Placed> = placed[..idx].to_vec();
    if a != b {
        // oriented smoothing of a crossing with opposite orientations: cap below, cup above
        let (cap_side, cup_side) = if a == Orient::Up { (Side::Right, Side::Left) } else { (Side::Left, Side::Right) };
        p0.push(Placed { gen: Gen::new(GenKind::Cap(cap_side), &target.gen.dom).expect("cap"), pos: target.pos });
        p0.push(Placed { gen: Gen::new(GenKind::Cup(cup_side), &SignSeq::empty()).expect("cup"), pos: target.pos });
    }
    p0.extend_from_slice(&placed[idx + 1..]);
    let zero = TangleExpr::from_placed(&dom, &p0)?;
    Ok((plus, minus, zero))
}
