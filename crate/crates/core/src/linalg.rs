//! Exact null spaces over the rationals.
//!
//! Rows are cleared to primitive integer vectors and reduced by fraction-free
//! Gauss-Jordan elimination: `r <- a*r - b*p` followed by division by the row
//! content. The pivot for each column is the candidate row whose entry has
//! the largest magnitude. Since the reduced echelon form is unique, the
//! returned basis (one vector per free column, with a 1 in that column) does
//! not depend on pivot choice.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{denominator_lcm, Scalar};

/// Sparse vector keyed by column index.
pub type SparseVec = BTreeMap<usize, Scalar>;

type IntRow = BTreeMap<usize, BigInt>;

fn primitive(row: &mut IntRow) {
    let g = row
        .values()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

fn to_integer_row(row: &SparseVec) -> IntRow {
    let lcm = denominator_lcm(row.values());
    let mut out: IntRow = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(&c, v)| (c, (v * Scalar::from_integer(lcm.clone())).to_integer()))
        .collect();
    primitive(&mut out);
    out
}

/// Basis of `{x : row . x = 0 for every row}` for sparse rows of the given width.
pub fn null_space_sparse(rows: &[SparseVec], width: usize) -> Vec<SparseVec> {
    let mut store: Vec<IntRow> = rows
        .iter()
        .map(to_integer_row)
        .filter(|r| !r.is_empty())
        .collect();
    // column -> rows with a nonzero entry there
    let mut by_col: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (i, r) in store.iter().enumerate() {
        for &c in r.keys() {
            by_col.entry(c).or_default().insert(i);
        }
    }
    let mut used = vec![false; store.len()];
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    let columns: Vec<usize> = by_col.keys().copied().collect();
    for col in columns {
        let Some(holders) = by_col.get(&col) else { continue };
        let pivot = holders
            .iter()
            .copied()
            .filter(|&i| !used[i])
            .max_by(|&a, &b| {
                store[a][&col]
                    .abs()
                    .cmp(&store[b][&col].abs())
                    .then(b.cmp(&a))
            });
        let Some(p) = pivot else { continue };
        used[p] = true;
        pivots.push((col, p));
        let others: Vec<usize> = holders.iter().copied().filter(|&i| i != p).collect();
        let prow = store[p].clone();
        let pv = prow[&col].clone();
        for i in others {
            let rv = store[i][&col].clone();
            let g = pv.gcd(&rv);
            let a = &pv / &g;
            let b = &rv / &g;
            let mut row = std::mem::take(&mut store[i]);
            for v in row.values_mut() {
                *v *= &a;
            }
            for (c, v) in &prow {
                let entry = row.entry(*c).or_insert_with(BigInt::zero);
                *entry -= &b * v;
            }
            let before: Vec<usize> = row.keys().copied().collect();
            row.retain(|_, v| !v.is_zero());
            primitive(&mut row);
            for c in before {
                let set = by_col.entry(c).or_default();
                if row.contains_key(&c) {
                    set.insert(i);
                } else {
                    set.remove(&i);
                }
            }
            store[i] = row;
        }
    }

    let pivot_cols: BTreeSet<usize> = pivots.iter().map(|&(c, _)| c).collect();
    let mut basis: BTreeMap<usize, SparseVec> = (0..width)
        .filter(|c| !pivot_cols.contains(c))
        .map(|c| (c, SparseVec::from([(c, Scalar::one())])))
        .collect();
    for &(pc, pr) in &pivots {
        let row = &store[pr];
        let lead = &row[&pc];
        for (&c, v) in row {
            if c == pc {
                continue;
            }
            if let Some(vec) = basis.get_mut(&c) {
                vec.insert(pc, -Scalar::new(v.clone(), lead.clone()));
            }
        }
    }
    basis.into_values().collect()
}

/// Dense front end to [`null_space_sparse`]. All rows must share one width.
pub fn null_space(rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    null_space_with_width(rows, width)
}

/// As [`null_space`], for callers that know the width even with no rows.
pub fn null_space_with_width(rows: &[Vec<Scalar>], width: usize) -> Vec<Vec<Scalar>> {
    let sparse: Vec<SparseVec> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), width, "inconsistent row widths");
            r.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect()
        })
        .collect();
    null_space_sparse(&sparse, width)
        .into_iter()
        .map(|v| {
            let mut dense = vec![Scalar::zero(); width];
            for (i, x) in v {
                dense[i] = x;
            }
            dense
        })
        .collect()
}

/// Rank of a family of sparse vectors.
pub fn rank(vectors: &[SparseVec], width: usize) -> usize {
    width - null_space_sparse(vectors, width).len()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(v: &SparseVec, basis: &[SparseVec], width: usize) -> bool {
    if v.values().all(|x| x.is_zero()) {
        return true;
    }
    let mut with = basis.to_vec();
    with.push(v.clone());
    rank(&with, width) == rank(basis, width)
}
