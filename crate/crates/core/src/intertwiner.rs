//! Intertwiner spaces: the Fourier-coefficient spaces of a relative commutant.
//!
//! For `X` in `A' ∩ O_n` the coefficients `x_k = E(X S_1^{*k})` and
//! `x_{-k} = E(S_1^k X)` satisfy `a x_k = x_k phi^k(a)` and
//! `x_{-k} a = phi^k(a) x_{-k}`. Conversely every `x` of that form with
//! `x = x S_1^k S_1^{*k}` (resp. `x = S_1^k S_1^{*k} x`) lifts to the
//! degree-`k` commutant element `x S_1^k` (resp. `S_1^{*k} x`).
//!
//! A space at level `M` holds coefficients `x` in `F^(M)`. Such an `x` with
//! the support condition above lifts to `X` at level `M - |k|`, so the
//! unknowns are the degree-`k` matrix units at that level and the relations
//! are imposed on `x` entrywise at level `max(M, level(phi^|k|(a)))`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::level::{shape, LevelMatrix};
use crate::linalg::{null_space_sparse, SparseVec};
use crate::scalar::Scalar;
use crate::word::Word;

/// Exact basis of the degree-`k` Fourier-coefficient space at level `M`.
#[derive(Clone, Debug)]
pub struct IntertwinerSpace {
    pub generators: Vec<Element>,
    pub k: i64,
    pub level: usize,
    /// Coefficients `x`, degree 0 at level `M`.
    pub basis: Vec<LevelMatrix>,
}

impl IntertwinerSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Basis as elements of F_n.
    pub fn coefficient_elements(&self) -> Vec<Element> {
        self.basis.iter().map(LevelMatrix::to_element).collect()
    }

    /// The degree-`k` elements of `A' ∩ O_n` the basis lifts to.
    pub fn commutant_elements(&self) -> Vec<Element> {
        self.coefficient_elements()
            .iter()
            .map(|x| lift_coefficient(x, self.k))
            .collect()
    }
}

/// `x S_1^k` for `k >= 0`, `S_1^{*|k|} x` for `k < 0`.
pub fn lift_coefficient(x: &Element, k: i64) -> Element {
    let s1k = Element::s1_power(x.n8(), k.unsigned_abs() as usize);
    if k >= 0 {
        x * &s1k
    } else {
        &s1k.adjoint() * x
    }
}

/// `X S_1^{*k}` for `k >= 0`, `S_1^{|k|} X` for `k < 0`.
pub fn coefficient_of(x: &Element, k: i64) -> Element {
    let s1k = Element::s1_power(x.n8(), k.unsigned_abs() as usize);
    if k >= 0 {
        x * &s1k.adjoint()
    } else {
        &s1k * x
    }
}

/// The relation defect `a x - x phi^k(a)` (`k > 0`), `x a - phi^{|k|}(a) x`
/// (`k < 0`) or `a x - x a` (`k = 0`).
pub fn relation_defect(a: &Element, x: &Element, k: i64) -> Element {
    match k {
        0 => a * x - x * a,
        k if k > 0 => a * x - x * &a.shift_by(k as usize),
        k => x * a - &a.shift_by(k.unsigned_abs() as usize) * x,
    }
}

/// Whether `x` satisfies the degree-`k` relation against every generator.
pub fn check_intertwiner_relations(gens: &[Element], x: &Element, k: i64) -> bool {
    gens.iter().all(|a| relation_defect(a, x, k).is_zero())
}

fn validate(gens: &[Element], level: usize) -> Result<()> {
    let n = gens.first().map(Element::n);
    for (i, g) in gens.iter().enumerate() {
        if Some(g.n()) != n {
            return Err(Error::AmbientMismatch {
                left: n.unwrap_or(0) as u8,
                right: g.n() as u8,
            });
        }
        if !g.is_in_core() {
            return Err(Error::Argument(format!(
                "generator {i} is not degree 0 (support {:?})",
                g.degree_support()
            )));
        }
        if g.level() > level {
            return Err(Error::Level(format!(
                "generator {i} lives at level {} above the requested level {level}",
                g.level()
            )));
        }
    }
    Ok(())
}

/// Computes the degree-`k` intertwiner space of `gens` at level `M`.
///
/// `n` is taken from the generators; an empty generator list needs
/// [`intertwiner_space_in`].
pub fn intertwiner_space(gens: &[Element], k: i64, level: usize) -> Result<IntertwinerSpace> {
    let n = gens
        .first()
        .map(Element::n)
        .ok_or_else(|| Error::Argument("empty generator list; use intertwiner_space_in".into()))?;
    intertwiner_space_in(n, gens, k, level)
}

pub fn intertwiner_space_in(
    n: usize,
    gens: &[Element],
    k: i64,
    level: usize,
) -> Result<IntertwinerSpace> {
    validate(gens, level)?;
    if let Some(g) = gens.first() {
        if g.n() != n {
            return Err(Error::AmbientMismatch {
                left: n as u8,
                right: g.n() as u8,
            });
        }
    }
    let n8 = crate::word::check_n(n)?;
    let shift = k.unsigned_abs() as usize;
    if shift > level {
        return Ok(IntertwinerSpace {
            generators: gens.to_vec(),
            k,
            level,
            basis: Vec::new(),
        });
    }
    let lift_level = level - shift;
    let (rl, cl) = shape(k, lift_level);
    let cols = n.pow(cl as u32);
    let width = n.pow(rl as u32) * cols;
    let out_level = gens
        .iter()
        .map(|g| g.level() + shift)
        .max()
        .unwrap_or(0)
        .max(level);

    let candidate = |j: usize| -> Element {
        let mu = Word::from_index(j / cols, n8, rl);
        let nu = Word::from_index(j % cols, n8, cl);
        let lift = Element::matrix_unit(n, &mu, &nu).expect("valid word");
        coefficient_of(&lift, k)
    };

    // Successive kernels: restrict the current basis by one generator at a time.
    let mut basis: Vec<SparseVec> = (0..width)
        .map(|j| SparseVec::from([(j, Scalar::from_integer(1.into()))]))
        .collect();

    for a in gens {
        if basis.is_empty() {
            break;
        }
        let mut images: HashMap<usize, BTreeMap<usize, Scalar>> = HashMap::new();
        for v in &basis {
            for &j in v.keys() {
                images.entry(j).or_insert_with(|| {
                    let d = relation_defect(a, &candidate(j), k);
                    LevelMatrix::from_element(&d, 0, out_level)
                        .expect("defect fits the output level")
                        .coordinates()
                });
            }
        }
        if images.values().all(|m| m.is_empty()) {
            continue;
        }
        // rows: output coordinate -> (basis index -> value)
        let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (b, v) in basis.iter().enumerate() {
            for (j, c) in v {
                for (coord, val) in &images[j] {
                    let slot = rows.entry(*coord).or_default().entry(b).or_insert_with(Scalar::zero);
                    *slot += c * val;
                }
            }
        }
        let rows: Vec<SparseVec> = rows
            .into_values()
            .map(|mut r| {
                r.retain(|_, v| !v.is_zero());
                r
            })
            .filter(|r| !r.is_empty())
            .collect();
        let kernel = null_space_sparse(&rows, basis.len());
        basis = kernel
            .iter()
            .map(|combo| {
                let mut acc = SparseVec::new();
                for (b, c) in combo {
                    for (j, x) in &basis[*b] {
                        *acc.entry(*j).or_insert_with(Scalar::zero) += c * x;
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                acc
            })
            .collect();
    }

    let basis = basis
        .iter()
        .map(|coords| {
            let lift = LevelMatrix::from_coordinates(n, k, lift_level, coords)?.to_element();
            LevelMatrix::from_element(&coefficient_of(&lift, k), 0, level)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(IntertwinerSpace {
        generators: gens.to_vec(),
        k,
        level,
        basis,
    })
}
