//! Sparse matrices between tensor powers of `V` and `V*`.

use std::fmt;

use crate::ring::{LaurentPoly, PolyMatrix, RingError, Vars};
use crate::schema::{enumerate_basis, parity, BasisWord, SignSeq, SuperDim};

use super::GenError;

/// A linear map `Q(dom) → Q(cod)` stored column by column.
///
/// Rows and columns are flat basis indices (leftmost letter most
/// significant); each column holds its nonzero entries sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    dom: SignSeq,
    cod: SignSeq,
    d: SuperDim,
    vars: Vars,
    cols: Vec<Vec<(u64, LaurentPoly)>>,
}

fn space_dim(s: &SignSeq, d: SuperDim) -> Result<u64, GenError> {
    (d.dim() as u64)
        .checked_pow(s.alpha_count() as u32)
        .filter(|&x| x <= u32::MAX as u64)
        .ok_or(GenError::TooLarge(s.alpha_count()))
}

impl Morphism {
    pub fn zero(dom: &SignSeq, cod: &SignSeq, d: SuperDim, vars: &Vars) -> Result<Morphism, GenError> {
        let nc = space_dim(dom, d)?;
        space_dim(cod, d)?;
        Ok(Morphism { dom: dom.clone(), cod: cod.clone(), d, vars: vars.clone(), cols: vec![Vec::new(); nc as usize] })
    }

    /// Build from a rule giving the image of each dom basis word.
    pub fn from_fn<F>(dom: &SignSeq, cod: &SignSeq, d: SuperDim, vars: &Vars, mut f: F) -> Result<Morphism, GenError>
    where
        F: FnMut(&BasisWord) -> Vec<(BasisWord, LaurentPoly)>,
    {
        let mut m = Self::zero(dom, cod, d, vars)?;
        for (c, w) in enumerate_basis(dom, d).iter().enumerate() {
            let col = f(w).into_iter().map(|(r, v)| (r.flat_index(d), v)).collect();
            m.set_column(c as u64, col);
        }
        Ok(m)
    }

    pub fn identity(s: &SignSeq, d: SuperDim, vars: &Vars) -> Result<Morphism, GenError> {
        Self::from_fn(s, s, d, vars, |w| vec![(w.clone(), LaurentPoly::one(vars))])
    }

    /// Replace a column; entries are merged, zeros dropped, rows sorted.
    pub(crate) fn set_column(&mut self, col: u64, mut entries: Vec<(u64, LaurentPoly)>) {
        entries.sort_by_key(|e| e.0);
        let mut merged: Vec<(u64, LaurentPoly)> = Vec::with_capacity(entries.len());
        for (r, v) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == r => last.1.add_assign_ref(&v),
                _ => merged.push((r, v)),
            }
        }
        merged.retain(|e| !e.1.is_zero());
        self.cols[col as usize] = merged;
    }

    pub fn dom(&self) -> &SignSeq {
        &self.dom
    }

    pub fn cod(&self) -> &SignSeq {
        &self.cod
    }

    pub fn superdim(&self) -> SuperDim {
        self.d
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nrows(&self) -> usize {
        (self.d.dim() as u64).pow(self.cod.alpha_count() as u32) as usize
    }

    /// Nonzero entries of one column, sorted by row.
    pub fn column(&self, col: u64) -> &[(u64, LaurentPoly)] {
        &self.cols[col as usize]
    }

    pub fn entry_flat(&self, row: u64, col: u64) -> LaurentPoly {
        let c = &self.cols[col as usize];
        match c.binary_search_by_key(&row, |e| e.0) {
            Ok(i) => c[i].1.clone(),
            Err(_) => LaurentPoly::zero(&self.vars),
        }
    }

    pub fn entry(&self, row: &BasisWord, col: &BasisWord) -> LaurentPoly {
        self.entry_flat(row.flat_index(self.d), col.flat_index(self.d))
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// `self ∘ lower`.
    pub fn compose(&self, lower: &Morphism) -> Result<Morphism, GenError> {
        if lower.cod != self.dom {
            return Err(GenError::Mismatch { expected: self.dom.clone(), found: lower.cod.clone() });
        }
        self.check_ring(lower)?;
        let mut out = Self::zero(&lower.dom, &self.cod, self.d, &self.vars)?;
        for (c, col) in lower.cols.iter().enumerate() {
            let mut acc = Vec::new();
            for (mid, a) in col {
                for (r, b) in &self.cols[*mid as usize] {
                    acc.push((*r, b * a));
                }
            }
            out.set_column(c as u64, acc);
        }
        Ok(out)
    }

    /// Plain (sign-free) tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &Morphism) -> Result<Morphism, GenError> {
        self.check_ring(other)?;
        let dom = self.dom.concat(&other.dom);
        let cod = self.cod.concat(&other.cod);
        let mut out = Self::zero(&dom, &cod, self.d, &self.vars)?;
        let (oc, orows) = (other.ncols() as u64, other.nrows() as u64);
        for (ca, cola) in self.cols.iter().enumerate() {
            for (cb, colb) in other.cols.iter().enumerate() {
                let mut acc = Vec::with_capacity(cola.len() * colb.len());
                for (ra, a) in cola {
                    for (rb, b) in colb {
                        acc.push((ra * orows + rb, a * b));
                    }
                }
                out.set_column(ca as u64 * oc + cb as u64, acc);
            }
        }
        Ok(out)
    }

    fn check_ring(&self, other: &Morphism) -> Result<(), GenError> {
        if self.d != other.d {
            return Err(GenError::DimMismatch(self.d, other.d));
        }
        if self.vars != other.vars {
            return Err(RingError::VarMismatch(self.vars.to_string(), other.vars.to_string()).into());
        }
        Ok(())
    }

    /// Apply `f` to every entry, retagging with `vars`.
    pub fn map_entries<F>(&self, vars: &Vars, f: F) -> Result<Morphism, GenError>
    where
        F: Fn(&LaurentPoly) -> Result<LaurentPoly, RingError>,
    {
        let mut out = Self::zero(&self.dom, &self.cod, self.d, vars)?;
        for (c, col) in self.cols.iter().enumerate() {
            let mapped = col.iter().map(|(r, v)| Ok((*r, f(v)?))).collect::<Result<Vec<_>, RingError>>()?;
            out.set_column(c as u64, mapped);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &LaurentPoly) -> Morphism {
        let mut out = self.clone();
        for col in out.cols.iter_mut() {
            for e in col.iter_mut() {
                e.1 = &e.1 * s;
            }
            col.retain(|e| !e.1.is_zero());
        }
        out
    }

    /// The single entry of a map `∅ → ∅`.
    pub fn scalar(&self) -> Option<LaurentPoly> {
        if self.dom.alpha_count() == 0 && self.cod.alpha_count() == 0 {
            Some(self.entry_flat(0, 0))
        } else {
            None
        }
    }

    /// `λ` if the map equals `λ·id`.
    pub fn as_scalar_identity(&self) -> Option<LaurentPoly> {
        if self.dom != self.cod {
            return None;
        }
        let lambda = self.entry_flat(0, 0);
        for (c, col) in self.cols.iter().enumerate() {
            if lambda.is_zero() {
                if !col.is_empty() {
                    return None;
                }
            } else if col.len() != 1 || col[0].0 != c as u64 || col[0].1 != lambda {
                return None;
            }
        }
        Some(lambda)
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar_identity().is_some_and(|l| l.is_one())
    }

    /// Diagonal entries, if every off-diagonal entry vanishes.
    pub fn diagonal(&self) -> Option<Vec<LaurentPoly>> {
        if self.dom != self.cod {
            return None;
        }
        let mut out = Vec::with_capacity(self.cols.len());
        for (c, col) in self.cols.iter().enumerate() {
            match col.as_slice() {
                [] => out.push(LaurentPoly::zero(&self.vars)),
                [(r, v)] if *r == c as u64 => out.push(v.clone()),
                _ => return None,
            }
        }
        Some(out)
    }

    /// True if every stored entry joins words of equal parity.
    pub fn is_parity_preserving(&self) -> bool {
        let (dk, ck) = (self.dom.alpha_count(), self.cod.alpha_count());
        self.cols.iter().enumerate().all(|(c, col)| {
            let pc = parity(&BasisWord::from_flat(c as u64, dk, self.d), self.d).unwrap_or(2);
            col.iter().all(|(r, _)| parity(&BasisWord::from_flat(*r, ck, self.d), self.d).unwrap_or(3) == pc)
        })
    }

    pub fn trace(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero(&self.vars);
        for c in 0..self.cols.len() as u64 {
            acc.add_assign_ref(&self.entry_flat(c, c));
        }
        acc
    }

    pub fn to_matrix(&self) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(&self.vars, self.nrows(), self.ncols());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r as usize, c, v.clone());
            }
        }
        m
    }

    pub fn from_matrix(dom: &SignSeq, cod: &SignSeq, d: SuperDim, m: &PolyMatrix) -> Result<Morphism, GenError> {
        let mut out = Self::zero(dom, cod, d, m.vars())?;
        if m.rows() != out.nrows() || m.cols() != out.ncols() {
            return Err(RingError::Shape(format!(
                "{}x{} matrix for a {}x{} morphism",
                m.rows(),
                m.cols(),
                out.nrows(),
                out.ncols()
            ))
            .into());
        }
        for c in 0..m.cols() {
            let col = (0..m.rows()).map(|r| (r as u64, m.get(r, c).clone())).collect();
            out.set_column(c as u64, col);
        }
        Ok(out)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.scalar() {
            return write!(f, "{s}");
        }
        let (dk, ck) = (self.dom.alpha_count(), self.cod.alpha_count());
        for (c, col) in self.cols.iter().enumerate() {
            let cw = BasisWord::from_flat(c as u64, dk, self.d);
            for (r, v) in col {
                let rw = BasisWord::from_flat(*r, ck, self.d);
                writeln!(f, "{}\t{}\t{}", compact(&rw), compact(&cw), v)?;
            }
        }
        Ok(())
    }
}

fn compact(w: &BasisWord) -> String {
    if w.is_empty() {
        return "-".into();
    }
    w.0.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
}
