//! Graded basis bookkeeping: super dimensions, sign sequences, basis words
//! and their flat-index codecs.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("super dimension {m}|{n} is not supported (need 1 <= m+n <= 15)")]
    BadDim { m: usize, n: usize },
    #[error("letter {letter} out of range 1..={max}")]
    BadLetter { letter: u8, max: usize },
    #[error("unknown strand symbol `{0}` (expected u, d, U or D)")]
    BadSign(char),
    #[error("{0} tensor factors exceed the supported width of {MAX_WIDTH}")]
    TooWide(usize),
}

/// Largest number of tensor factors a packed word can hold.
pub const MAX_WIDTH: usize = 32;

/// `C^{m|n}`: `m` even basis vectors followed by `n` odd ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SuperDim {
    pub m: usize,
    pub n: usize,
}

impl SuperDim {
    pub fn new(m: usize, n: usize) -> Result<SuperDim, SchemaError> {
        if m + n == 0 || m + n > 15 {
            return Err(SchemaError::BadDim { m, n });
        }
        Ok(SuperDim { m, n })
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Grading `|x_i|` of the 1-based letter `i`.
    pub fn grading(&self, letter: u8) -> u8 {
        u8::from(letter as usize > self.m)
    }

    pub fn is_odd(&self, letter: u8) -> bool {
        letter as usize > self.m
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub fn flip(self) -> Orient {
        match self {
            Orient::Up => Orient::Down,
            Orient::Down => Orient::Up,
        }
    }
}

/// One boundary point: orientation plus whether it belongs to the ω component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Strand {
    pub orient: Orient,
    pub omega: bool,
}

impl Strand {
    pub const UP: Strand = Strand { orient: Orient::Up, omega: false };
    pub const DOWN: Strand = Strand { orient: Orient::Down, omega: false };

    fn symbol(&self) -> char {
        match (self.orient, self.omega) {
            (Orient::Up, false) => 'u',
            (Orient::Down, false) => 'd',
            (Orient::Up, true) => 'U',
            (Orient::Down, true) => 'D',
        }
    }
}

/// An object of the tangle category: an ordered list of boundary points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SignSeq(pub Vec<Strand>);

impl SignSeq {
    pub fn empty() -> SignSeq {
        SignSeq(Vec::new())
    }

    pub fn ups(n: usize) -> SignSeq {
        SignSeq(vec![Strand::UP; n])
    }

    /// Parse a string over `u`, `d` (α) and `U`, `D` (ω).
    pub fn parse(text: &str) -> Result<SignSeq, SchemaError> {
        text.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'u' => Ok(Strand::UP),
                'd' => Ok(Strand::DOWN),
                'U' => Ok(Strand { orient: Orient::Up, omega: true }),
                'D' => Ok(Strand { orient: Orient::Down, omega: true }),
                other => Err(SchemaError::BadSign(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignSeq)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of α positions, i.e. tensor factors.
    pub fn alpha_count(&self) -> usize {
        self.0.iter().filter(|s| !s.omega).count()
    }

    /// Tensor-factor index of the α strand at `pos`, or of the next α strand to its right.
    pub fn alpha_index(&self, pos: usize) -> usize {
        self.0[..pos].iter().filter(|s| !s.omega).count()
    }

    pub fn has_omega(&self) -> bool {
        self.0.iter().any(|s| s.omega)
    }

    pub fn concat(&self, other: &SignSeq) -> SignSeq {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignSeq(v)
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        for s in &self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

/// A tensor basis word `x_{i1} ⊗ … ⊗ x_{ik}` with 1-based letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisWord(pub Vec<u8>);

impl BasisWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self, d: SuperDim) -> Result<(), SchemaError> {
        match self.0.iter().find(|&&l| l == 0 || l as usize > d.dim()) {
            Some(&letter) => Err(SchemaError::BadLetter { letter, max: d.dim() }),
            None => Ok(()),
        }
    }

    /// Mixed-radix index with the leftmost letter most significant.
    pub fn flat_index(&self, d: SuperDim) -> u64 {
        let r = d.dim() as u64;
        self.0.iter().fold(0, |acc, &l| acc * r + (l as u64 - 1))
    }

    pub fn from_flat(index: u64, len: usize, d: SuperDim) -> BasisWord {
        let r = d.dim() as u64;
        let mut letters = vec![0u8; len];
        let mut x = index;
        for slot in letters.iter_mut().rev() {
            *slot = (x % r) as u8 + 1;
            x /= r;
        }
        BasisWord(letters)
    }

    pub(crate) fn pack(&self) -> Packed {
        packed::from_letters(self.0.iter().map(|&l| l - 1))
    }

    pub(crate) fn unpack(w: Packed, len: usize) -> BasisWord {
        BasisWord((0..len).map(|i| packed::get(w, i) + 1).collect())
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| format!("x{l}")).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// All `(m+n)^k` words on the α positions of `s`, in flat-index order.
pub fn enumerate_basis(s: &SignSeq, d: SuperDim) -> Vec<BasisWord> {
    let k = s.alpha_count();
    let total = (d.dim() as u64).pow(k as u32);
    (0..total).map(|i| BasisWord::from_flat(i, k, d)).collect()
}

/// Sum of letter gradings mod 2.
pub fn parity(w: &BasisWord, d: SuperDim) -> Result<u8, SchemaError> {
    w.validate(d)?;
    Ok(w.0.iter().map(|&l| d.grading(l)).sum::<u8>() % 2)
}

/// Word identified with `u_{i1} ∧ … ∧ u_{ik}`: `x_2` at position `i_j + 1 (mod N)`, `x_1` elsewhere.
pub fn exterior_word_codec(n: usize, subset: &[usize]) -> BasisWord {
    let mut letters = vec![1u8; n];
    for &i in subset {
        letters[i % n] = 2;
    }
    BasisWord(letters)
}

/// Mirror-image identification: `x_2` at position `N + 1 − i_j`.
///
/// With this layout the wedge-power identities hold at every width once the
/// braid is index-reversed (see `burau::reverse_braid`).
pub fn exterior_word_codec_reversed(n: usize, subset: &[usize]) -> BasisWord {
    let mut letters = vec![1u8; n];
    for &i in subset {
        letters[n - i] = 2;
    }
    BasisWord(letters)
}

/// Words packed four bits per letter, position 0 in the lowest bits, letters 0-based.
pub(crate) type Packed = u128;

pub(crate) mod packed {
    use super::Packed;

    #[inline]
    pub fn get(w: Packed, i: usize) -> u8 {
        ((w >> (4 * i)) & 0xF) as u8
    }

    #[inline]
    pub fn low_mask(k: usize) -> Packed {
        if k >= 32 {
            Packed::MAX
        } else {
            (1u128 << (4 * k)) - 1
        }
    }

    pub fn from_letters<I: IntoIterator<Item = u8>>(letters: I) -> Packed {
        letters.into_iter().enumerate().fold(0, |acc, (i, l)| acc | ((l as Packed) << (4 * i)))
    }

    /// Replace the `width_in` letters at `pos` by `width_out` letters `local`.
    #[inline]
    pub fn splice(w: Packed, pos: usize, width_in: usize, local: Packed, width_out: usize) -> Packed {
        let low = w & low_mask(pos);
        let high = if pos + width_in >= 32 { 0 } else { w >> (4 * (pos + width_in)) };
        let shifted_high = if pos + width_out >= 32 { 0 } else { high << (4 * (pos + width_out)) };
        low | (local << (4 * pos)) | shifted_high
    }

    #[inline]
    pub fn extract(w: Packed, pos: usize, width: usize) -> Packed {
        (w >> (4 * pos)) & low_mask(width)
    }

    /// Flat mixed-radix index, leftmost most significant.
    pub fn flat(w: Packed, len: usize, radix: u64) -> u64 {
        (0..len).fold(0, |acc, i| acc * radix + get(w, i) as u64)
    }

    pub fn from_flat(mut index: u64, len: usize, radix: u64) -> Packed {
        let mut w: Packed = 0;
        for i in (0..len).rev() {
            w |= ((index % radix) as Packed) << (4 * i);
            index /= radix;
        }
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn d(m: usize, n: usize) -> SuperDim {
        SuperDim::new(m, n).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let s = SignSeq::parse("uu").unwrap();
        let words: Vec<Vec<u8>> = enumerate_basis(&s, d(1, 1)).into_iter().map(|w| w.0).collect();
        assert_eq!(words, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(enumerate_basis(&SignSeq::empty(), d(1, 1)), vec![BasisWord(vec![])]);
        let single: Vec<Vec<u8>> = enumerate_basis(&SignSeq::parse("u").unwrap(), d(2, 1)).into_iter().map(|w| w.0).collect();
        assert_eq!(single, vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn omega_positions_add_no_factor() {
        let s = SignSeq::parse("uUd").unwrap();
        assert_eq!(s.alpha_count(), 2);
        assert_eq!(enumerate_basis(&s, d(1, 1)).len(), 4);
        assert_eq!(s.alpha_index(2), 1);
        assert_eq!(s.to_string(), "uUd");
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity(&BasisWord(vec![1, 1]), d(1, 1)), Ok(0));
        assert_eq!(parity(&BasisWord(vec![1, 2]), d(1, 1)), Ok(1));
        assert_eq!(parity(&BasisWord(vec![2, 2]), d(1, 1)), Ok(0));
        assert!(parity(&BasisWord(vec![3]), d(1, 1)).is_err());
    }

    #[test]
    fn exterior_codec_examples() {
        assert_eq!(exterior_word_codec(2, &[1]).0, vec![1, 2]);
        assert_eq!(exterior_word_codec(2, &[2]).0, vec![2, 1]);
        assert_eq!(exterior_word_codec(3, &[]).0, vec![1, 1, 1]);
    }

    fn subsets(n: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n).map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect()).collect()
    }

    #[test]
    fn exterior_codecs_are_bijective() {
        for n in 1..=6 {
            for codec in [exterior_word_codec, exterior_word_codec_reversed] {
                let images: BTreeSet<Vec<u8>> = subsets(n).iter().map(|s| codec(n, s).0).collect();
                assert_eq!(images.len(), 1 << n);
                assert!(images.iter().all(|w| w.iter().all(|&l| l == 1 || l == 2)));
            }
        }
    }

    #[test]
    fn flat_codec_round_trips() {
        for dim in 1..=4 {
            let sd = d(dim, 0);
            for len in 0..=6 {
                let total = (dim as u64).pow(len as u32);
                for i in 0..total {
                    let w = BasisWord::from_flat(i, len, sd);
                    assert_eq!(w.flat_index(sd), i);
                    let p = w.pack();
                    assert_eq!(BasisWord::unpack(p, len), w);
                    assert_eq!(packed::flat(p, len, dim as u64), i);
                    assert_eq!(packed::from_flat(i, len, dim as u64), p);
                }
            }
        }
    }

    #[test]
    fn splice_inserts_and_removes() {
        let w = packed::from_letters([1, 2, 3]);
        let ins = packed::splice(w, 1, 0, packed::from_letters([7, 8]), 2);
        assert_eq!(BasisWord::unpack(ins, 5).0, vec![2, 8, 9, 3, 4]);
        let del = packed::splice(ins, 1, 2, 0, 0);
        assert_eq!(del, w);
    }

    #[test]
    fn bad_inputs() {
        assert!(SuperDim::new(0, 0).is_err());
        assert_eq!(SignSeq::parse("ux"), Err(SchemaError::BadSign('x')));
    }
}
