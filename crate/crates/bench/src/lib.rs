//! Fixtures shared by the benchmarks.

use cuntz_core::subalgebra::CornerSumAlgebra;
use cuntz_core::{Element, Monomial, Scalar, Word};

/// All `S_mu S_nu^*` with `|mu|, |nu| <= len`, with coefficients `1..`.
pub fn dense_element(n: usize, len: usize) -> Element {
    let words: Vec<Word> = (0..=len).flat_map(|l| Word::all(n as u8, l)).collect();
    let count = words.len();
    let words = &words;
    let monos = words.iter().enumerate().flat_map(|(i, mu)| {
        words.iter().enumerate().map(move |(j, nu)| {
            Monomial::new(
                Scalar::from_integer((i * count + j + 1).into()),
                mu.clone(),
                nu.clone(),
            )
        })
    });
    Element::from_monomials(n, monos).expect("valid words")
}

/// The two-corner algebra `eF_ne ⊕ (1-e)F_n(1-e)` with `e = S_1 S_1^*`.
pub fn two_corners(n: usize) -> CornerSumAlgebra {
    let w = Word::new([1], n as u8).expect("letter 1");
    let e = Element::matrix_unit(n, &w, &w).expect("valid unit");
    let rest = &Element::one(n).expect("valid n") - &e;
    CornerSumAlgebra::new(vec![e, rest]).expect("corner sum")
}
