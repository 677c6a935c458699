//! Oracles built on explicit matrix models, sharing no code with the solver.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use cuntz_core::{Element, Scalar, Word};
use num_traits::{ToPrimitive, Zero};

/// Index of a word among all words of its length, first letter most significant.
pub fn word_index(w: &Word, n: usize) -> usize {
    w.letters().iter().fold(0, |acc, &l| acc * n + (l as usize - 1))
}

pub type Sparse = HashMap<(usize, usize), Scalar>;

/// A degree-0 element of level at most `m` as an `n^m x n^m` matrix.
pub fn dense_core(x: &Element, n: usize, m: usize) -> Sparse {
    let mut out = Sparse::new();
    for t in x.monomials() {
        assert_eq!(t.mu.len(), t.nu.len(), "not in the core");
        let tail = n.pow((m - t.mu.len()) as u32);
        let (r, c) = (word_index(&t.mu, n), word_index(&t.nu, n));
        for s in 0..tail {
            *out.entry((r * tail + s, c * tail + s)).or_insert_with(Scalar::zero) += &t.coeff;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

pub fn mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut by_row: HashMap<usize, Vec<(usize, &Scalar)>> = HashMap::new();
    for ((r, c), v) in b {
        by_row.entry(*r).or_default().push((*c, v));
    }
    let mut out = Sparse::new();
    for ((i, k), v) in a {
        if let Some(row) = by_row.get(k) {
            for (j, w) in row {
                *out.entry((*i, *j)).or_insert_with(Scalar::zero) += v * *w;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn sub(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = a.clone();
    for (k, v) in b {
        *out.entry(*k).or_insert_with(Scalar::zero) -= v;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `y ⊗ 1` with the identity on `t` trailing letters.
fn pad(y: &Sparse, n: usize, t: usize) -> Sparse {
    let big = n.pow(t as u32);
    let mut out = Sparse::new();
    for ((r, c), v) in y {
        for s in 0..big {
            out.insert((r * big + s, c * big + s), v.clone());
        }
    }
    out
}

/// `1 ⊗ y` with the identity on `t` leading letters, for `y` of size `n^m`.
fn lead(y: &Sparse, n: usize, m: usize, t: usize) -> Sparse {
    let size = n.pow(m as u32);
    let mut out = Sparse::new();
    for s in 0..n.pow(t as u32) {
        for ((r, c), v) in y {
            out.insert((s * size + r, s * size + c), v.clone());
        }
    }
    out
}

/// Degree-`k` intertwiner problem at level `m` for an algebra given by
/// corners of level-`m` words: unknowns are the level-`m` matrices `x` with
/// `x = x S_1^k S_1^{*k}` (or `x = S_1^{|k|} S_1^{*|k|} x`), subject to
/// `a x = x phi^k(a)` (or `x a = phi^{|k|}(a) x`) for `a` in the corner sum.
pub struct Problem {
    pub n: usize,
    pub m: usize,
    pub k: i64,
    pub corners: Vec<Vec<usize>>,
}

impl Problem {
    /// Matrix units `E_{w0 w}` and `E_{w w0}` generate each corner as an algebra.
    fn generators(&self) -> Vec<Sparse> {
        let one = Scalar::from_integer(1.into());
        let mut gens = Vec::new();
        for corner in &self.corners {
            let w0 = corner[0];
            for &w in corner {
                gens.push(HashMap::from([((w0, w), one.clone())]));
                gens.push(HashMap::from([((w, w0), one.clone())]));
            }
        }
        gens
    }

    pub fn unknowns(&self) -> Vec<(usize, usize)> {
        let size = self.n.pow(self.m as u32);
        let t = self.k.unsigned_abs() as usize;
        if t > self.m {
            return Vec::new();
        }
        let prefixed = self.n.pow((self.m - t) as u32);
        let mut out = Vec::new();
        for r in 0..size {
            for c in 0..size {
                let ok = match self.k {
                    0 => true,
                    k if k > 0 => c < prefixed,
                    _ => r < prefixed,
                };
                if ok {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// The relation defects of `x` against every generator.
    pub fn defects(&self, x: &Sparse) -> Vec<Sparse> {
        let t = self.k.unsigned_abs() as usize;
        self.generators()
            .iter()
            .map(|a| {
                let (pa, px) = (pad(a, self.n, t), pad(x, self.n, t));
                let shifted = lead(a, self.n, self.m, t);
                match self.k {
                    0 => sub(&mul(a, x), &mul(x, a)),
                    k if k > 0 => sub(&mul(&pa, &px), &mul(&px, &shifted)),
                    _ => sub(&mul(&px, &pa), &mul(&shifted, &px)),
                }
            })
            .collect()
    }

    pub fn satisfied_by(&self, x: &Sparse) -> bool {
        let support_ok = {
            let allowed: std::collections::HashSet<_> = self.unknowns().into_iter().collect();
            x.keys().all(|rc| allowed.contains(rc))
        };
        support_ok && self.defects(x).iter().all(|d| d.is_empty())
    }

    /// Dimension of the solution space, by exact integer elimination.
    pub fn dimension(&self) -> usize {
        let unknowns = self.unknowns();
        if unknowns.is_empty() {
            return 0;
        }
        let mut rows: BTreeMap<(usize, usize, usize), BTreeMap<usize, i128>> = BTreeMap::new();
        for (u, rc) in unknowns.iter().enumerate() {
            let x = HashMap::from([(*rc, Scalar::from_integer(1.into()))]);
            for (g, d) in self.defects(&x).into_iter().enumerate() {
                for ((r, c), v) in d {
                    let v = v.to_integer().to_i128().expect("integer defect");
                    rows.entry((g, r, c)).or_default().insert(u, v);
                }
            }
        }
        unknowns.len() - integer_rank(rows.into_values(), unknowns.len())
    }
}

/// Rank over the rationals of integer rows, by fraction-free elimination.
pub fn integer_rank(rows: impl IntoIterator<Item = BTreeMap<usize, i128>>, width: usize) -> usize {
    let mut basis: BTreeMap<usize, Vec<i128>> = BTreeMap::new();
    let mut seen = std::collections::HashSet::new();
    for sparse in rows {
        if !seen.insert(sparse.clone()) {
            continue;
        }
        let mut row = vec![0i128; width];
        for (c, v) in sparse {
            row[c] = v;
        }
        for (&p, b) in &basis {
            if row[p] != 0 {
                let (bp, rp) = (b[p], row[p]);
                for c in 0..width {
                    row[c] = bp
                        .checked_mul(row[c])
                        .and_then(|x| x.checked_sub(rp.checked_mul(b[c])?))
                        .expect("entries stay small");
                }
                let g = row.iter().fold(0i128, |g, &v| gcd(g, v.abs()));
                if g > 1 {
                    row.iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        if let Some(p) = row.iter().position(|&v| v != 0) {
            for b in basis.values_mut() {
                if b[p] != 0 {
                    let (rp, bp) = (row[p], b[p]);
                    for c in 0..width {
                        b[c] = rp
                            .checked_mul(b[c])
                            .and_then(|x| x.checked_sub(bp.checked_mul(row[c])?))
                            .expect("entries stay small");
                    }
                    let g = b.iter().fold(0i128, |g, &v| gcd(g, v.abs()));
                    if g > 1 {
                        b.iter_mut().for_each(|v| *v /= g);
                    }
                }
            }
            basis.insert(p, row);
        }
    }
    basis.len()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Level-`m` words whose first letters are `prefix`.
pub fn corner_words(n: usize, m: usize, prefix: &[usize]) -> Vec<usize> {
    let size = n.pow(m as u32);
    let block = n.pow((m - prefix.len()) as u32);
    let start = prefix.iter().fold(0, |acc, &l| acc * n + (l - 1)) * block;
    (start..start + block).filter(|&w| w < size).collect()
}
