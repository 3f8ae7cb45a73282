//! Dense matrices of Laurent polynomials and their determinants.

use std::fmt;

use super::coeff::Coeff;
use super::poly::{LaurentPoly, Vars, MAX_VARS};
use super::RingError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: Vars,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(vars: &Vars, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { rows, cols, vars: vars.clone(), entries: vec![LaurentPoly::zero(vars); rows * cols] }
    }

    pub fn identity(vars: &Vars, n: usize) -> PolyMatrix {
        let mut m = Self::zeros(vars, n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(vars));
        }
        m
    }

    /// Build from row vectors; all rows must share one length and ring.
    pub fn from_rows(vars: &Vars, rows: Vec<Vec<LaurentPoly>>) -> Result<PolyMatrix, RingError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(RingError::Shape(format!("ragged row of length {} (expected {c})", row.len())));
            }
            for e in row {
                entries.push(e.with_vars(vars)?);
            }
        }
        Ok(PolyMatrix { rows: r, cols: c, vars: vars.clone(), entries })
    }

    /// Parse a matrix given as rows of expression strings.
    pub fn parse(vars: &Vars, rows: &[&[&str]]) -> Result<PolyMatrix, RingError> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| LaurentPoly::parse(vars, s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(vars, parsed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn checked_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, RingError> {
        if self.cols != other.rows {
            return Err(RingError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.vars != other.vars {
            return Err(RingError::VarMismatch(self.vars.to_string(), other.vars.to_string()));
        }
        let mut out = Self::zeros(&self.vars, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    let prod = a * b;
                    out.entries[idx].add_assign_ref(&prod);
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &PolyMatrix, sub: bool) -> Result<PolyMatrix, RingError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(RingError::Shape("operand shapes differ".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| if sub { a.checked_sub(b) } else { a.checked_add(b) })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, vars: self.vars.clone(), entries })
    }

    pub fn checked_add(&self, other: &PolyMatrix) -> Result<PolyMatrix, RingError> {
        self.zip(other, false)
    }

    pub fn checked_sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, RingError> {
        self.zip(other, true)
    }

    /// Apply a function to every entry.
    pub fn map<F>(&self, vars: &Vars, f: F) -> Result<PolyMatrix, RingError>
    where
        F: Fn(&LaurentPoly) -> Result<LaurentPoly, RingError>,
    {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, vars: vars.clone(), entries })
    }

    /// Entrywise substitution of unit monomials.
    pub fn substitute(&self, assign: &[(&str, LaurentPoly)], target: &Vars) -> Result<PolyMatrix, RingError> {
        self.map(target, |p| p.substitute(assign, target))
    }

    /// Drop row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> PolyMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { rows: self.rows - 1, cols: self.cols - 1, vars: self.vars.clone(), entries }
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { rows: rows.len(), cols: cols.len(), vars: self.vars.clone(), entries }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = Self::zeros(&self.vars, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero(&self.vars);
        for i in 0..self.rows.min(self.cols) {
            acc.add_assign_ref(self.get(i, i));
        }
        acc
    }
}

/// Determinant by fraction-free elimination.
///
/// Each row is first multiplied by a monomial that moves it into the
/// polynomial ring; Bareiss' exact divisions then stay inside that ring, and
/// the accumulated monomial is divided back out at the end.
pub fn det_bareiss(m: &PolyMatrix) -> Result<LaurentPoly, RingError> {
    if !m.is_square() {
        return Err(RingError::Shape(format!("determinant of {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let vars = m.vars.clone();
    if n == 0 {
        return Ok(LaurentPoly::one(&vars));
    }
    let mut a: Vec<Vec<LaurentPoly>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut cleared = [0i32; MAX_VARS];
    for row in a.iter_mut() {
        let mut lo = [i32::MAX; MAX_VARS];
        let mut any = false;
        for e in row.iter().filter(|e| !e.is_zero()) {
            any = true;
            let me = e.min_exps();
            for k in 0..MAX_VARS {
                lo[k] = lo[k].min(me[k]);
            }
        }
        if !any {
            return Ok(LaurentPoly::zero(&vars));
        }
        let shift = [-lo[0], -lo[1], -lo[2], -lo[3]];
        for e in row.iter_mut() {
            *e = e.mul_term(&shift, &Coeff::ONE);
        }
        for k in 0..MAX_VARS {
            cleared[k] += shift[k];
        }
    }
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one(&vars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(LaurentPoly::zero(&vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
            a[i][k] = LaurentPoly::zero(&vars);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    let restore = [-cleared[0], -cleared[1], -cleared[2], -cleared[3]];
    Ok(det.mul_term(&restore, &Coeff::from(sign)))
}

/// Determinant by Laplace expansion along the first row; exponential time, kept as an oracle.
pub fn det_cofactor(m: &PolyMatrix) -> Result<LaurentPoly, RingError> {
    if !m.is_square() {
        return Err(RingError::Shape(format!("determinant of {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(LaurentPoly::one(&m.vars));
    }
    if n == 1 {
        return Ok(m.get(0, 0).clone());
    }
    let mut acc = LaurentPoly::zero(&m.vars);
    for j in 0..n {
        let e = m.get(0, j);
        if e.is_zero() {
            continue;
        }
        let sub = det_cofactor(&m.minor(0, j))?;
        let term = e * &sub;
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    Ok(acc)
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
