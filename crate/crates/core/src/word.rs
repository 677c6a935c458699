//! Words in the generators and the monomials `c * S_mu S_nu^*` built from them.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest supported generator count.
pub const MAX_N: usize = 64;

pub(crate) fn check_n(n: usize) -> Result<u8> {
    if (2..=MAX_N).contains(&n) {
        Ok(n as u8)
    } else {
        Err(Error::InvalidN(n))
    }
}

/// A word `mu = mu_1 ... mu_k` in the letters `1..=n`, standing for the
/// isometry `S_mu = S_{mu_1} ... S_{mu_k}`. The empty word is the identity.
///
/// Words order lexicographically on their letters, which fixes every matrix
/// layout in the crate.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word, checking every letter against `n`.
    pub fn new(letters: impl IntoIterator<Item = usize>, n: u8) -> Result<Self> {
        letters
            .into_iter()
            .map(|l| {
                if l >= 1 && l <= n as usize {
                    Ok(l as u8)
                } else {
                    Err(Error::InvalidLetter { letter: l, n })
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// `letter` repeated `k` times.
    pub fn repeat(letter: u8, k: usize) -> Self {
        Word(vec![letter; k])
    }

    pub(crate) fn from_raw(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&self, letter: u8) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(letter);
        Word(v)
    }

    pub fn prepend(&self, letter: u8) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    /// If `self = prefix . rest`, returns `rest`.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0.strip_prefix(prefix.0.as_slice()).map(|r| Word(r.to_vec()))
    }

    /// All words of length `len` over `1..=n`, in lexicographic order.
    pub fn all(n: u8, len: usize) -> impl Iterator<Item = Word> {
        let total = (n as usize).pow(len as u32);
        (0..total).map(move |idx| Word::from_index(idx, n, len))
    }

    /// Position of this word in [`Word::all`] for its length.
    pub fn index(&self, n: u8) -> usize {
        self.0
            .iter()
            .fold(0usize, |acc, &l| acc * n as usize + (l as usize - 1))
    }

    pub fn from_index(mut idx: usize, n: u8, len: usize) -> Word {
        let mut v = vec![0u8; len];
        for slot in v.iter_mut().rev() {
            *slot = (idx % n as usize) as u8 + 1;
            idx /= n as usize;
        }
        Word(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let sep = if self.0.iter().any(|&l| l > 9) { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// `coeff * S_mu S_nu^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Scalar,
    pub mu: Word,
    pub nu: Word,
}

impl Monomial {
    pub fn new(coeff: Scalar, mu: Word, nu: Word) -> Self {
        Monomial { coeff, mu, nu }
    }

    /// Gauge degree `|mu| - |nu|`.
    pub fn degree(&self) -> i64 {
        self.mu.len() as i64 - self.nu.len() as i64
    }

    /// `min(|mu|, |nu|)`: the matrix level this monomial lives at.
    pub fn level(&self) -> usize {
        self.mu.len().min(self.nu.len())
    }
}

/// Reduces `(S_a S_b^*)(S_c S_d^*)` by prefix comparison of `b` and `c`.
/// Returns the words of the surviving monomial, or `None` when the product
/// vanishes.
pub(crate) fn reduce_pair(a: &Word, b: &Word, c: &Word, d: &Word) -> Option<(Word, Word)> {
    if b.len() <= c.len() {
        // c = b . gamma  ->  S_{a gamma} S_d^*
        let gamma = c.strip_prefix(b)?;
        Some((a.concat(&gamma), d.clone()))
    } else {
        // b = c . delta  ->  S_a S_{d delta}^*
        let delta = b.strip_prefix(c)?;
        Some((a.clone(), d.concat(&delta)))
    }
}
