#![allow(dead_code)]

use cuntz_core::scalar::ratio;
use cuntz_core::{Element, Monomial, Word};
use proptest::prelude::*;

pub fn word(n: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=n, 0..=max_len)
}

pub fn monomial(n: usize, max_len: usize) -> impl Strategy<Value = Monomial> {
    (-3i64..=3, 1i64..=3, word(n, max_len), word(n, max_len)).prop_map(move |(p, q, mu, nu)| {
        Monomial::new(
            ratio(p, q),
            Word::new(mu, n as u8).unwrap(),
            Word::new(nu, n as u8).unwrap(),
        )
    })
}

/// Random finite combinations of `S_mu S_nu^*`.
pub fn element(n: usize, max_len: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec(monomial(n, max_len), 0..=4)
        .prop_map(move |ms| Element::from_monomials(n, ms).unwrap())
}

/// Random elements of F_n at level `m` or below.
pub fn core_element(n: usize, max_len: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec(
        (-3i64..=3, 1i64..=3, 0..=max_len).prop_flat_map(move |(p, q, len)| {
            (Just(ratio(p, q)), prop::collection::vec(1..=n, len), prop::collection::vec(1..=n, len))
        }),
        0..=4,
    )
    .prop_map(move |terms| {
        Element::from_monomials(
            n,
            terms.into_iter().map(|(c, mu, nu)| {
                Monomial::new(c, Word::new(mu, n as u8).unwrap(), Word::new(nu, n as u8).unwrap())
            }),
        )
        .unwrap()
    })
}
