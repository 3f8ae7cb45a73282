//! Multivariate Laurent polynomials over the integers.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::coeff::Coeff;
use super::RingError;

/// Maximum number of variables a ring may declare.
pub const MAX_VARS: usize = 4;

/// Exponent vector; slots past the declared variable count stay zero.
pub type Exps = [i32; MAX_VARS];

/// An ordered, shared list of variable names.
#[derive(Clone, Debug)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new(names: &[&str]) -> Result<Vars, RingError> {
        if names.is_empty() || names.len() > MAX_VARS {
            return Err(RingError::VarCount(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(RingError::DuplicateVar(n.to_string()));
            }
        }
        Ok(Vars(names.iter().map(|s| s.to_string()).collect()))
    }

    fn cached(cell: &'static OnceLock<Vars>, names: &[&str]) -> Vars {
        cell.get_or_init(|| Vars::new(names).expect("static variable list"))
            .clone()
    }

    /// The ring ℤ[q^±1].
    pub fn q() -> Vars {
        static CELL: OnceLock<Vars> = OnceLock::new();
        Self::cached(&CELL, &["q"])
    }

    /// The ring ℤ[q^±1, w^±1].
    pub fn qw() -> Vars {
        static CELL: OnceLock<Vars> = OnceLock::new();
        Self::cached(&CELL, &["q", "w"])
    }

    /// The ring ℤ[s^±1, t^±1].
    pub fn st() -> Vars {
        static CELL: OnceLock<Vars> = OnceLock::new();
        Self::cached(&CELL, &["s", "t"])
    }

    /// The ring ℤ[t^±1].
    pub fn t() -> Vars {
        static CELL: OnceLock<Vars> = OnceLock::new();
        Self::cached(&CELL, &["t"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(","))
    }
}

/// A Laurent polynomial with terms kept in ascending lexicographic exponent order.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    vars: Vars,
    terms: Vec<(Exps, Coeff)>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl std::hash::Hash for LaurentPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn sub_exps(a: &Exps, b: &Exps) -> Exps {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

/// Sort and merge raw terms, dropping zeros.
fn canonicalize(mut raw: Vec<(Exps, Coeff)>) -> Vec<(Exps, Coeff)> {
    raw.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(Exps, Coeff)> = Vec::with_capacity(raw.len());
    for (e, c) in raw {
        match out.last_mut() {
            Some(last) if last.0 == e => last.1.add_assign(&c),
            _ => out.push((e, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> LaurentPoly {
        LaurentPoly { vars: vars.clone(), terms: Vec::new() }
    }

    pub fn one(vars: &Vars) -> LaurentPoly {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &Vars, c: i64) -> LaurentPoly {
        Self::monomial(vars, [0; MAX_VARS], Coeff::from(c))
    }

    pub fn monomial(vars: &Vars, exps: Exps, c: Coeff) -> LaurentPoly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(exps, c)] };
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// The monomial `c·v^e` for a single named variable.
    pub fn var_pow(vars: &Vars, name: &str, e: i32) -> Result<LaurentPoly, RingError> {
        let i = vars.index_of(name).ok_or_else(|| RingError::UnknownVar(name.to_string()))?;
        let mut exps = [0; MAX_VARS];
        exps[i] = e;
        Ok(Self::monomial(vars, exps, Coeff::ONE))
    }

    /// Build from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(vars: &Vars, terms: I) -> LaurentPoly
    where
        I: IntoIterator<Item = (Exps, Coeff)>,
    {
        LaurentPoly { vars: vars.clone(), terms: canonicalize(terms.into_iter().collect()) }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> &[(Exps, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0; MAX_VARS] && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Coefficient of the given exponent vector.
    pub fn coeff(&self, exps: &Exps) -> Coeff {
        match self.terms.binary_search_by(|t| t.0.cmp(exps)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coeff::ZERO,
        }
    }

    /// Move to another variable list, matching variables by name.
    ///
    /// Fails if a variable that actually occurs is missing from `vars`.
    pub fn with_vars(self, vars: &Vars) -> Result<LaurentPoly, RingError> {
        if self.vars == *vars {
            return Ok(LaurentPoly { vars: vars.clone(), terms: self.terms });
        }
        let mut map = [usize::MAX; MAX_VARS];
        for (i, name) in self.vars.names().iter().enumerate() {
            if let Some(j) = vars.index_of(name) {
                map[i] = j;
            }
        }
        let mut raw = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms {
            let mut ne = [0; MAX_VARS];
            for i in 0..self.vars.len() {
                if e[i] != 0 {
                    if map[i] == usize::MAX {
                        return Err(RingError::UnknownVar(self.vars.names()[i].clone()));
                    }
                    ne[map[i]] = e[i];
                }
            }
            raw.push((ne, c));
        }
        Ok(LaurentPoly { vars: vars.clone(), terms: canonicalize(raw) })
    }

    fn check(&self, other: &LaurentPoly) -> Result<(), RingError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(RingError::VarMismatch(self.vars.to_string(), other.vars.to_string()))
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let conv = |c: &Coeff| if negate { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, conv(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (t.0, conv(&t.1))));
        LaurentPoly { vars: self.vars.clone(), terms: out }
    }

    /// In-place `self += other`.
    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        if self.terms.is_empty() {
            self.terms = other.terms.clone();
            return;
        }
        if other.terms.is_empty() {
            return;
        }
        *self = self.merge(other, false);
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.terms.is_empty() || other.terms.is_empty() {
            return LaurentPoly::zero(&self.vars);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                raw.push((add_exps(ea, eb), ca.mul(cb)));
            }
        }
        LaurentPoly { vars: self.vars.clone(), terms: canonicalize(raw) }
    }

    /// Multiply by the single term `c·x^e`; preserves term order.
    pub fn mul_term(&self, e: &Exps, c: &Coeff) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(ea, ca)| (add_exps(ea, e), ca.mul(c))).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &Coeff) -> LaurentPoly {
        self.mul_term(&[0; MAX_VARS], c)
    }

    pub fn neg(&self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (*e, c.neg())).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Integer power; negative exponents require a unit monomial.
    pub fn pow(&self, e: i32) -> Result<LaurentPoly, RingError> {
        if e < 0 {
            let inv = self.inverse_unit().ok_or_else(|| RingError::NotInvertible(self.to_string()))?;
            return inv.pow(-e);
        }
        let mut acc = LaurentPoly::one(&self.vars);
        let mut base = self.clone();
        let mut k = e as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(acc)
    }

    /// Inverse of a monomial with coefficient ±1.
    pub fn inverse_unit(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 || !self.terms[0].1.is_unit() {
            return None;
        }
        let (e, c) = &self.terms[0];
        let neg = [-e[0], -e[1], -e[2], -e[3]];
        Some(LaurentPoly::monomial(&self.vars, neg, c.clone()))
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<&(Exps, Coeff)> {
        self.terms.last()
    }

    /// Lexicographically smallest term.
    pub fn trailing(&self) -> Option<&(Exps, Coeff)> {
        self.terms.first()
    }

    /// Componentwise minimum exponent (zero for the zero polynomial).
    pub fn min_exps(&self) -> Exps {
        let mut m = [0; MAX_VARS];
        if let Some((first, _)) = self.terms.first() {
            m = *first;
            for (e, _) in &self.terms {
                for k in 0..MAX_VARS {
                    m[k] = m[k].min(e[k]);
                }
            }
        }
        m
    }

    /// Componentwise maximum exponent (zero for the zero polynomial).
    pub fn max_exps(&self) -> Exps {
        let mut m = [0; MAX_VARS];
        if let Some((first, _)) = self.terms.first() {
            m = *first;
            for (e, _) in &self.terms {
                for k in 0..MAX_VARS {
                    m[k] = m[k].max(e[k]);
                }
            }
        }
        m
    }

    /// Exact division in the Laurent ring.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        self.check(d)?;
        if d.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(&self.vars));
        }
        let (de, dc) = d.leading().cloned().expect("nonzero");
        if d.terms.len() == 1 {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                let q = c.div_exact(&dc).ok_or(RingError::InexactDivision)?;
                terms.push((sub_exps(e, &de), q));
            }
            return Ok(LaurentPoly { vars: self.vars.clone(), terms });
        }
        // Newton polytopes add, so quotient exponents lie in this box
        let lo = sub_exps(&self.min_exps(), &d.min_exps());
        let hi = sub_exps(&self.max_exps(), &d.max_exps());
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((re, rc)) = rem.leading().cloned() {
            let qe = sub_exps(&re, &de);
            if (0..MAX_VARS).any(|k| qe[k] < lo[k] || qe[k] > hi[k]) {
                return Err(RingError::InexactDivision);
            }
            let qc = rc.div_exact(&dc).ok_or(RingError::InexactDivision)?;
            rem = rem.merge(&d.mul_term(&qe, &qc), true);
            quot.push((qe, qc));
        }
        quot.reverse();
        Ok(LaurentPoly { vars: self.vars.clone(), terms: quot })
    }

    /// Apply a ring homomorphism sending each variable to a unit monomial in `target`.
    ///
    /// Variables absent from `assign` must not occur in `self`.
    pub fn substitute(&self, assign: &[(&str, LaurentPoly)], target: &Vars) -> Result<LaurentPoly, RingError> {
        let mut images: Vec<Option<(Exps, i32)>> = vec![None; self.vars.len()];
        for (name, img) in assign {
            let i = self.vars.index_of(name).ok_or_else(|| RingError::UnknownVar(name.to_string()))?;
            if img.vars != *target {
                return Err(RingError::VarMismatch(img.vars.to_string(), target.to_string()));
            }
            if img.terms.len() != 1 || !img.terms[0].1.is_unit() {
                return Err(RingError::NonMonomial(img.to_string()));
            }
            images[i] = Some((img.terms[0].0, img.terms[0].1.signum()));
        }
        let mut raw = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut ne = [0; MAX_VARS];
            let mut neg = false;
            for (k, &ek) in e.iter().enumerate().take(self.vars.len()) {
                if ek == 0 {
                    continue;
                }
                let (ie, sign) = images[k]
                    .ok_or_else(|| RingError::UnknownVar(self.vars.names()[k].clone()))?;
                for j in 0..MAX_VARS {
                    ne[j] += ie[j] * ek;
                }
                if sign < 0 && ek % 2 != 0 {
                    neg = !neg;
                }
            }
            raw.push((ne, if neg { c.neg() } else { c.clone() }));
        }
        Ok(LaurentPoly { vars: target.clone(), terms: canonicalize(raw) })
    }

    /// Set one variable to 1, keeping the variable list.
    pub fn at_one(&self, name: &str) -> Result<LaurentPoly, RingError> {
        let i = self.vars.index_of(name).ok_or_else(|| RingError::UnknownVar(name.to_string()))?;
        let raw = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = *e;
                ne[i] = 0;
                (ne, c.clone())
            })
            .collect();
        Ok(LaurentPoly { vars: self.vars.clone(), terms: canonicalize(raw) })
    }

    /// True if no term has a nonzero exponent in the named variable.
    pub fn free_of(&self, name: &str) -> bool {
        match self.vars.index_of(name) {
            Some(i) => self.terms.iter().all(|(e, _)| e[i] == 0),
            None => true,
        }
    }

    /// Canonical representative up to `±x^e`: minimum exponents shifted to zero,
    /// lexicographically first coefficient positive.
    pub fn normalize_unit(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let m = self.min_exps();
        let flip = self.terms[0].1.signum() < 0;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (sub_exps(e, &m), if flip { c.neg() } else { c.clone() }))
            .collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Evaluate with integer values for all variables; `None` if a value of zero
    /// meets a negative exponent.
    pub fn eval_i128(&self, values: &[i128]) -> Option<i128> {
        let mut total: i128 = 0;
        for (e, c) in &self.terms {
            let mut num: i128 = c.as_i64()? as i128;
            let mut den: i128 = 1;
            for (k, &v) in values.iter().enumerate().take(self.vars.len()) {
                let ek = e[k];
                if ek >= 0 {
                    num = num.checked_mul(v.checked_pow(ek as u32)?)?;
                } else {
                    den = den.checked_mul(v.checked_pow((-ek) as u32)?)?;
                }
            }
            if den == 0 || num % den != 0 {
                return None;
            }
            total = total.checked_add(num / den)?;
        }
        Some(total)
    }
}

/// Which units `±x^e` an equality test may absorb.
#[derive(Clone, Debug)]
pub struct UnitPattern {
    /// Allow a factor of −1.
    pub sign: bool,
    /// Per-variable: whether that variable may carry a nonzero exponent.
    pub vars: [bool; MAX_VARS],
}

impl UnitPattern {
    /// `±x^e` for every variable.
    pub fn any() -> UnitPattern {
        UnitPattern { sign: true, vars: [true; MAX_VARS] }
    }

    /// `±v^k` for the named variables only.
    pub fn signed(ring: &Vars, names: &[&str]) -> UnitPattern {
        let mut vars = [false; MAX_VARS];
        for n in names {
            if let Some(i) = ring.index_of(n) {
                vars[i] = true;
            }
        }
        UnitPattern { sign: true, vars }
    }

    /// `v^k` (no sign) for the named variables only.
    pub fn positive(ring: &Vars, names: &[&str]) -> UnitPattern {
        UnitPattern { sign: false, ..Self::signed(ring, names) }
    }
}

/// The unit `u` with `a = u·b`, if one matching `pattern` exists.
pub fn equal_up_to_unit(a: &LaurentPoly, b: &LaurentPoly, pattern: &UnitPattern) -> Option<LaurentPoly> {
    if a.vars != b.vars {
        return None;
    }
    if a.is_zero() && b.is_zero() {
        return Some(LaurentPoly::one(&a.vars));
    }
    if a.terms.len() != b.terms.len() || a.is_zero() {
        return None;
    }
    let (ea, ca) = &a.terms[0];
    let (eb, cb) = &b.terms[0];
    let shift = sub_exps(ea, eb);
    if (0..MAX_VARS).any(|k| shift[k] != 0 && !pattern.vars[k]) {
        return None;
    }
    let sign = if ca == cb {
        Coeff::ONE
    } else if *ca == cb.neg() && pattern.sign {
        Coeff::Small(-1)
    } else {
        return None;
    };
    let u = LaurentPoly::monomial(&a.vars, shift, sign);
    if u.mul_unchecked(b) == *a {
        Some(u)
    } else {
        None
    }
}

/// The quantum integer `[z]_q = (q^z − q^−z)/(q − q^−1)` over `ring`, which must contain `q`.
pub fn quantum_int_in(ring: &Vars, z: i64) -> LaurentPoly {
    let qi = ring.index_of("q").expect("ring contains q");
    let (sign, n) = if z < 0 { (-1, -z) } else { (1, z) };
    let terms = (0..n).map(|k| {
        let mut e = [0; MAX_VARS];
        e[qi] = (n - 1 - 2 * k) as i32;
        (e, Coeff::from(sign))
    });
    LaurentPoly::from_terms(ring, terms)
}

/// The quantum integer `[z]_q` in ℤ[q^±1].
pub fn quantum_int(z: i64) -> LaurentPoly {
    quantum_int_in(&Vars::q(), z)
}

/// Rewrite a polynomial in `q` (and possibly other, absent variables) as one in
/// `t` under `q = t^{-1/2}`, after factoring out `q^e` with `e` of the common
/// parity. Returns the `t` polynomial and `e`.
pub fn q_to_t_half(p: &LaurentPoly) -> Result<(LaurentPoly, i32), RingError> {
    let qi = p.vars.index_of("q").ok_or_else(|| RingError::UnknownVar("q".into()))?;
    for (k, name) in p.vars.names().iter().enumerate() {
        if k != qi && !p.free_of(name) {
            return Err(RingError::UnknownVar(name.clone()));
        }
    }
    let t = Vars::t();
    if p.is_zero() {
        return Ok((LaurentPoly::zero(&t), 0));
    }
    let parity = p.terms[0].0[qi].rem_euclid(2);
    if p.terms.iter().any(|(e, _)| e[qi].rem_euclid(2) != parity) {
        return Err(RingError::MixedParity);
    }
    let terms = p.terms.iter().map(|(e, c)| {
        let mut ne = [0; MAX_VARS];
        ne[0] = -(e[qi] - parity) / 2;
        (ne, c.clone())
    });
    Ok((LaurentPoly::from_terms(&t, terms), parity))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.signum() < 0;
            if neg {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            let abs = if neg { c.neg() } else { c.clone() };
            let mut factors = Vec::new();
            for (k, name) in self.vars.names().iter().enumerate() {
                match e[k] {
                    0 => {}
                    1 => factors.push(name.clone()),
                    x => factors.push(format!("{name}^{x}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("variable sets agree")
            }
        }
        impl std::ops::$trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$checked(&rhs).expect("variable sets agree")
            }
        }
        impl std::ops::$trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$checked(rhs).expect("variable sets agree")
            }
        }
    };
}

impl_binop!(Add, add, checked_add);
impl_binop!(Sub, sub, checked_sub);
impl_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(&self)
    }
}
