//! Finite-level matrix models of homogeneous elements.
//!
//! At level `m` the degree-0 words `S_mu S_nu^*` with `|mu| = |nu| = m` are
//! the matrix units of `M_{n^m}`. A degree-`d` component at level `m` is a
//! rectangle: rows are words of length `m + d` and columns words of length
//! `m` when `d >= 0`; for `d < 0` rows have length `m` and columns `m - d`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::element::{Builder, Element};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::word::{check_n, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelMatrix {
    n: u8,
    degree: i64,
    level: usize,
    entries: BTreeMap<(Word, Word), Scalar>,
}

/// Row and column word lengths of a degree-`d` rectangle at level `m`.
pub fn shape(degree: i64, level: usize) -> (usize, usize) {
    if degree >= 0 {
        (level + degree as usize, level)
    } else {
        (level, level + degree.unsigned_abs() as usize)
    }
}

impl LevelMatrix {
    /// Matrix model of the degree-`d` component of `x` at level `m`.
    pub fn from_element(x: &Element, degree: i64, level: usize) -> Result<Self> {
        let padded = x.pad_to_level(degree, level)?;
        let entries = padded
            .component_terms(degree)
            .map(|(_, t)| t.clone())
            .unwrap_or_default();
        Ok(LevelMatrix {
            n: x.n8(),
            degree,
            level,
            entries,
        })
    }

    /// Builds a matrix from explicit entries, validating word lengths and letters.
    pub fn new(
        n: usize,
        degree: i64,
        level: usize,
        entries: impl IntoIterator<Item = ((Word, Word), Scalar)>,
    ) -> Result<Self> {
        let n8 = check_n(n)?;
        let (rl, cl) = shape(degree, level);
        let mut map = BTreeMap::new();
        for ((r, c), v) in entries {
            if r.len() != rl || c.len() != cl {
                return Err(Error::Level(format!(
                    "entry ({r}, {c}) does not fit a {rl}x{cl}-word rectangle"
                )));
            }
            if r.max_letter() > n8 || c.max_letter() > n8 {
                return Err(Error::InvalidLetter {
                    letter: r.max_letter().max(c.max_letter()) as usize,
                    n: n8,
                });
            }
            if !v.is_zero() {
                map.insert((r, c), v);
            }
        }
        Ok(LevelMatrix {
            n: n8,
            degree,
            level,
            entries: map,
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn shape(&self) -> (usize, usize) {
        shape(self.degree, self.level)
    }

    /// Number of rows and columns.
    pub fn dims(&self) -> (usize, usize) {
        let (rl, cl) = self.shape();
        let n = self.n as usize;
        (n.pow(rl as u32), n.pow(cl as u32))
    }

    pub fn entries(&self) -> &BTreeMap<(Word, Word), Scalar> {
        &self.entries
    }

    pub fn get(&self, row: &Word, col: &Word) -> Scalar {
        self.entries
            .get(&(row.clone(), col.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The element `sum entries[(mu, nu)] S_mu S_nu^*`.
    pub fn to_element(&self) -> Element {
        let mut b = Builder::new(self.n);
        for ((r, c), v) in &self.entries {
            b.push(r.clone(), c.clone(), v.clone());
        }
        b.finish()
    }

    /// Dense row-major copy, rows and columns in lexicographic word order.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let (rows, cols) = self.dims();
        let mut out = vec![vec![Scalar::zero(); cols]; rows];
        for ((r, c), v) in &self.entries {
            out[r.index(self.n)][c.index(self.n)] = v.clone();
        }
        out
    }

    /// Flat coordinate `row_index * cols + col_index` of each nonzero entry.
    pub fn coordinates(&self) -> BTreeMap<usize, Scalar> {
        let (_, cols) = self.dims();
        self.entries
            .iter()
            .map(|((r, c), v)| (r.index(self.n) * cols + c.index(self.n), v.clone()))
            .collect()
    }

    /// Inverse of [`LevelMatrix::coordinates`].
    pub fn from_coordinates(
        n: usize,
        degree: i64,
        level: usize,
        coords: &BTreeMap<usize, Scalar>,
    ) -> Result<Self> {
        let n8 = check_n(n)?;
        let (rl, cl) = shape(degree, level);
        let cols = n.pow(cl as u32);
        let entries = coords.iter().map(|(&idx, v)| {
            (
                (
                    Word::from_index(idx / cols, n8, rl),
                    Word::from_index(idx % cols, n8, cl),
                ),
                v.clone(),
            )
        });
        Self::new(n, degree, level, entries)
    }

    /// Level-`(m+1)` model: each `E_{mu,nu}` becomes `sum_i E_{mu i, nu i}`.
    pub fn expand(&self) -> LevelMatrix {
        let mut entries = BTreeMap::new();
        for ((r, c), v) in &self.entries {
            for i in 1..=self.n {
                entries.insert((r.push(i), c.push(i)), v.clone());
            }
        }
        LevelMatrix {
            n: self.n,
            degree: self.degree,
            level: self.level + 1,
            entries,
        }
    }
}

/// Checks the symbolic product of two degree-0 elements against the product
/// of their level-`m` matrix models.
pub fn oracle_mul_check(x: &Element, y: &Element, m: usize) -> Result<bool> {
    if !x.is_in_core() || !y.is_in_core() {
        return Err(Error::Argument("oracle check needs degree-0 operands".into()));
    }
    let a = LevelMatrix::from_element(x, 0, m)?.to_dense();
    let b = LevelMatrix::from_element(y, 0, m)?.to_dense();
    let size = a.len();
    let mut prod = vec![vec![Scalar::zero(); size]; size];
    for i in 0..size {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..size {
                if !b[k][j].is_zero() {
                    prod[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    let symbolic = LevelMatrix::from_element(&x.try_mul(y)?, 0, m)?.to_dense();
    Ok(symbolic == prod)
}
