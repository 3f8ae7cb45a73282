//! Gauss codes of virtual knots and their closed-braid realizations.
//!
//! A Gauss code lists the passes of a knot through its classical crossings
//! in order of travel, e.g. `O1- O2- U1- U2- U3+ U4+ O3+ O4+`. Each crossing
//! appears once over and once under with the same sign.
//!
//! A Gauss document adds virtual curls per arc, which fix a rotational class:
//!
//! ```text
//! # comment
//! gauss: U1- U2- U3- O1- O2- O3-
//! curls: -4 0 0 -2 0 0
//! ```

use std::fmt;

use super::{BraidWord, Letter, LetterKind, TangleError, TangleExpr};
use crate::generators::Sign;

/// One pass through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pass {
    /// 0-based crossing label.
    pub crossing: usize,
    pub over: bool,
}

/// A Gauss code with crossing labels `0..c` in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode {
    pub passes: Vec<Pass>,
    pub signs: Vec<Sign>,
}

fn gauss_err(msg: impl Into<String>) -> TangleError {
    TangleError::Gauss(msg.into())
}

/// Parse whitespace- or comma-separated tokens `O<k><±>` / `U<k><±>`.
pub fn parse_gauss(text: &str) -> Result<GaussCode, TangleError> {
    let mut raw: Vec<(usize, bool, Sign)> = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let bad = || TangleError::UnknownToken { line: 1, token: tok.to_string() };
        let over = match tok.chars().next() {
            Some('O') => true,
            Some('U') => false,
            _ => return Err(bad()),
        };
        let body = &tok[1..];
        let (num, sign) = match body.chars().last() {
            Some('+') => (&body[..body.len() - 1], Sign::Plus),
            Some('-') => (&body[..body.len() - 1], Sign::Minus),
            _ => return Err(bad()),
        };
        let k: usize = num.parse().map_err(|_| bad())?;
        raw.push((k, over, sign));
    }
    let mut labels: Vec<usize> = Vec::new();
    let mut signs = Vec::new();
    let mut seen: Vec<(bool, bool)> = Vec::new();
    let mut passes = Vec::with_capacity(raw.len());
    for &(k, over, sign) in &raw {
        let idx = match labels.iter().position(|&l| l == k) {
            Some(i) => {
                if signs[i] != sign {
                    return Err(gauss_err(format!("crossing {k} has inconsistent signs")));
                }
                i
            }
            None => {
                labels.push(k);
                signs.push(sign);
                seen.push((false, false));
                labels.len() - 1
            }
        };
        let slot = if over { &mut seen[idx].0 } else { &mut seen[idx].1 };
        if *slot {
            return Err(gauss_err(format!("crossing {k} passed {} twice", if over { "over" } else { "under" })));
        }
        *slot = true;
        passes.push(Pass { crossing: idx, over });
    }
    if let Some(i) = seen.iter().position(|&(o, u)| !(o && u)) {
        return Err(gauss_err(format!("crossing {} is not passed both over and under", labels[i])));
    }
    Ok(GaussCode { passes, signs })
}

/// A Gauss code together with the virtual curls on each arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussDiagram {
    pub code: GaussCode,
    pub curls: Vec<i32>,
}

impl GaussDiagram {
    pub fn closure(&self) -> Result<TangleExpr, TangleError> {
        self.code.closure_with_curls(&self.curls)
    }
}

/// Parse a `gauss:` line and an optional `curls:` line (default all zero).
pub fn parse_gauss_document(doc: &str) -> Result<GaussDiagram, TangleError> {
    let mut code = None;
    let mut curls = None;
    for (i, raw) in doc.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("gauss:") {
            code = Some(parse_gauss(rest)?);
        } else if let Some(rest) = line.strip_prefix("curls:") {
            let v: Result<Vec<i32>, _> = rest.split_whitespace().map(str::parse).collect();
            curls = Some(v.map_err(|_| gauss_err(format!("line {}: bad curl count", i + 1)))?);
        } else {
            return Err(TangleError::UnknownToken { line: i + 1, token: line.to_string() });
        }
    }
    let code = code.ok_or_else(|| gauss_err("missing `gauss:` line"))?;
    let curls = curls.unwrap_or_else(|| vec![0; code.passes.len()]);
    if curls.len() != code.passes.len() {
        return Err(gauss_err(format!("{} curl counts for {} arcs", curls.len(), code.passes.len())));
    }
    Ok(GaussDiagram { code, curls })
}

impl GaussCode {
    pub fn crossings(&self) -> usize {
        self.signs.len()
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|s| s.value()).sum()
    }

    /// Bottom (entry) and top (exit) strand positions of pass `j`, 0-based.
    ///
    /// Crossing `k` sits on strands `2k, 2k+1` with both strands upward; the
    /// over strand of a positive crossing runs from bottom left to top right.
    fn ports(&self, j: usize) -> (usize, usize) {
        let p = self.passes[j];
        let (l, r) = (2 * p.crossing, 2 * p.crossing + 1);
        let rising = (self.signs[p.crossing] == Sign::Plus) == p.over;
        if rising {
            (l, r)
        } else {
            (r, l)
        }
    }

    /// Closure strand carrying arc `j`, the arc leaving pass `j`.
    pub fn arc_strand(&self, j: usize) -> usize {
        self.ports((j + 1) % self.passes.len()).0
    }

    /// A closed virtual braid whose closure has this Gauss code: every
    /// crossing side by side at the bottom, then a virtual permutation
    /// routing each exit to the next entry. The unknot gives `N=1`.
    pub fn braid(&self) -> BraidWord {
        let c = self.crossings();
        if c == 0 {
            return BraidWord { strands: 1, letters: Vec::new() };
        }
        let n = 2 * c;
        let m = self.passes.len();
        // dest[p]: where the strand leaving the crossings at p must arrive
        let mut dest = vec![0usize; n];
        for j in 0..m {
            dest[self.ports(j).1] = self.arc_strand(j);
        }
        let mut swaps = Vec::new();
        let mut sorted = false;
        while !sorted {
            sorted = true;
            for i in 0..n - 1 {
                if dest[i] > dest[i + 1] {
                    dest.swap(i, i + 1);
                    swaps.push(Letter::chi(i + 1));
                    sorted = false;
                }
            }
        }
        // written order is top first
        let mut letters: Vec<Letter> = swaps.into_iter().rev().collect();
        for k in 0..c {
            letters.push(match self.signs[k] {
                Sign::Plus => Letter::sigma(2 * k + 1),
                Sign::Minus => Letter::sigma_inv(2 * k + 1),
            });
        }
        BraidWord { strands: n, letters }
    }

    /// The closure of [`GaussCode::braid`] with `arc_curls[j]` virtual curls
    /// on arc `j`.
    pub fn closure_with_curls(&self, arc_curls: &[i32]) -> Result<TangleExpr, TangleError> {
        if arc_curls.len() != self.passes.len() {
            return Err(gauss_err(format!("{} curl counts for {} arcs", arc_curls.len(), self.passes.len())));
        }
        let beta = self.braid();
        let mut curls = vec![0; beta.strands];
        for (j, &r) in arc_curls.iter().enumerate() {
            curls[self.arc_strand(j)] += r;
        }
        super::closure_with_curls(&beta, &curls)
    }

    /// Equal up to where the code starts and how crossings are labelled.
    pub fn same_diagram(&self, other: &GaussCode) -> bool {
        self.canonical() == other.canonical()
    }

    fn canonical(&self) -> (Vec<Pass>, Vec<Sign>) {
        let m = self.passes.len();
        let c = self.crossings();
        (0..m.max(1))
            .map(|start| {
                let mut map = vec![usize::MAX; c];
                let mut next = 0;
                let passes: Vec<Pass> = (0..m)
                    .map(|i| {
                        let p = self.passes[(start + i) % m];
                        if map[p.crossing] == usize::MAX {
                            map[p.crossing] = next;
                            next += 1;
                        }
                        Pass { crossing: map[p.crossing], over: p.over }
                    })
                    .collect();
                let mut signs = vec![Sign::Plus; c];
                for k in 0..c {
                    signs[map[k]] = self.signs[k];
                }
                (passes, signs)
            })
            .min_by(|a, b| (&a.0, sign_key(&a.1)).cmp(&(&b.0, sign_key(&b.1))))
            .unwrap_or_default()
    }
}

fn sign_key(s: &[Sign]) -> Vec<i64> {
    s.iter().map(|x| x.value()).collect()
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.passes.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let s = if self.signs[p.crossing] == Sign::Plus { '+' } else { '-' };
            write!(f, "{}{}{s}", if p.over { 'O' } else { 'U' }, p.crossing + 1)?;
        }
        Ok(())
    }
}

impl BraidWord {
    /// The Gauss code of the closure, read by travelling upward from the
    /// bottom of strand 1. `None` when the closure has several components.
    pub fn gauss_code(&self) -> Option<GaussCode> {
        let n = self.strands;
        let mut label: Vec<Option<usize>> = vec![None; self.letters.len()];
        let mut signs = Vec::new();
        let mut passes = Vec::new();
        let mut pos = 0;
        let mut visited = vec![false; n];
        loop {
            if visited[pos] {
                break;
            }
            visited[pos] = true;
            for (idx, l) in self.letters.iter().enumerate().rev() {
                let i = l.pos - 1;
                if pos != i && pos != i + 1 {
                    continue;
                }
                let from_left = pos == i;
                pos = if from_left { i + 1 } else { i };
                if let LetterKind::Sigma(s) = l.kind {
                    let k = *label[idx].get_or_insert_with(|| {
                        signs.push(s);
                        signs.len() - 1
                    });
                    passes.push(Pass { crossing: k, over: from_left == (s == Sign::Plus) });
                }
            }
        }
        if pos != 0 || visited.iter().any(|v| !v) {
            return None;
        }
        Some(GaussCode { passes, signs })
    }
}
