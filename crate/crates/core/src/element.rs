//! Elements of the dense *-subalgebra of O_n spanned by the words
//! `S_mu S_nu^*`, stored graded by gauge degree.
//!
//! Each degree component is kept at a single level (`min(|mu|, |nu|)` is the
//! same for every term), with zero coefficients pruned. At a fixed level and
//! degree the monomials are linearly independent, so this storage decides
//! equality after padding both sides to a common level.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::word::{check_n, reduce_pair, Monomial, Word};

type Terms = BTreeMap<(Word, Word), Scalar>;

#[derive(Clone, Debug)]
struct Component {
    level: usize,
    terms: Terms,
}

impl Component {
    fn padded(&self, n: u8, level: usize) -> Terms {
        if level == self.level {
            return self.terms.clone();
        }
        let extra = level - self.level;
        let mut out = Terms::new();
        for ((mu, nu), c) in &self.terms {
            for w in Word::all(n, extra) {
                out.insert((mu.concat(&w), nu.concat(&w)), c.clone());
            }
        }
        out
    }
}

/// A finite rational combination of monomials `S_mu S_nu^*` in O_n.
#[derive(Clone, Debug)]
pub struct Element {
    n: u8,
    components: BTreeMap<i64, Component>,
}

/// Collects monomials of arbitrary levels and normalizes them into an [`Element`].
pub(crate) struct Builder {
    n: u8,
    raw: BTreeMap<i64, Vec<(Word, Word, Scalar)>>,
}

impl Builder {
    pub(crate) fn new(n: u8) -> Self {
        Builder {
            n,
            raw: BTreeMap::new(),
        }
    }

    pub(crate) fn push(&mut self, mu: Word, nu: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let d = mu.len() as i64 - nu.len() as i64;
        self.raw.entry(d).or_default().push((mu, nu, c));
    }

    pub(crate) fn finish(self) -> Element {
        let n = self.n;
        let mut components = BTreeMap::new();
        for (d, terms) in self.raw {
            let level = terms
                .iter()
                .map(|(mu, nu, _)| mu.len().min(nu.len()))
                .max()
                .unwrap_or(0);
            let mut acc = Terms::new();
            for (mu, nu, c) in terms {
                let extra = level - mu.len().min(nu.len());
                if extra == 0 {
                    add_into(&mut acc, (mu, nu), c);
                } else {
                    for w in Word::all(n, extra) {
                        add_into(&mut acc, (mu.concat(&w), nu.concat(&w)), c.clone());
                    }
                }
            }
            acc.retain(|_, c| !c.is_zero());
            if !acc.is_empty() {
                components.insert(d, Component { level, terms: acc });
            }
        }
        Element { n, components }
    }
}

fn add_into(terms: &mut Terms, key: (Word, Word), c: Scalar) {
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
        }
    }
}

impl Element {
    pub fn zero(n: usize) -> Result<Self> {
        Ok(Element {
            n: check_n(n)?,
            components: BTreeMap::new(),
        })
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, c: Scalar) -> Result<Self> {
        let n = check_n(n)?;
        let mut b = Builder::new(n);
        b.push(Word::empty(), Word::empty(), c);
        Ok(b.finish())
    }

    /// The isometry `S_i`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        let n8 = check_n(n)?;
        Self::monomial(n, Scalar::one(), Word::new([i], n8)?, Word::empty())
    }

    /// `coeff * S_mu S_nu^*`.
    pub fn monomial(n: usize, coeff: Scalar, mu: Word, nu: Word) -> Result<Self> {
        Self::from_monomials(n, [Monomial::new(coeff, mu, nu)])
    }

    /// The matrix unit `E_{mu,nu} = S_mu S_nu^*`.
    pub fn matrix_unit(n: usize, mu: &Word, nu: &Word) -> Result<Self> {
        Self::monomial(n, Scalar::one(), mu.clone(), nu.clone())
    }

    /// `S_w` for a word `w`.
    pub fn isometry(n: usize, w: &Word) -> Result<Self> {
        Self::monomial(n, Scalar::one(), w.clone(), Word::empty())
    }

    pub fn from_monomials(n: usize, monos: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let n8 = check_n(n)?;
        let mut b = Builder::new(n8);
        for m in monos {
            for w in [&m.mu, &m.nu] {
                if w.max_letter() > n8 {
                    return Err(Error::InvalidLetter {
                        letter: w.max_letter() as usize,
                        n: n8,
                    });
                }
            }
            b.push(m.mu, m.nu, m.coeff);
        }
        Ok(b.finish())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub(crate) fn n8(&self) -> u8 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Degrees with a nonzero component. `x` lies in F_n iff this is a subset of `{0}`.
    pub fn degree_support(&self) -> BTreeSet<i64> {
        self.components.keys().copied().collect()
    }

    pub fn is_in_core(&self) -> bool {
        self.components.keys().all(|&d| d == 0)
    }

    /// Stored level of the degree-`d` component, if nonzero.
    pub fn level_of(&self, d: i64) -> Option<usize> {
        self.components.get(&d).map(|c| c.level)
    }

    /// Largest stored level over all components (0 for zero).
    pub fn level(&self) -> usize {
        self.components.values().map(|c| c.level).max().unwrap_or(0)
    }

    /// Length of the longest word appearing in the stored form.
    pub fn max_word_len(&self) -> usize {
        self.components
            .iter()
            .map(|(&d, c)| c.level + d.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Number of stored monomials.
    pub fn term_count(&self) -> usize {
        self.components.values().map(|c| c.terms.len()).sum()
    }

    /// Stored monomials, ordered by degree then lexicographically by `(mu, nu)`.
    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.components.values().flat_map(|c| {
            c.terms
                .iter()
                .map(|((mu, nu), k)| Monomial::new(k.clone(), mu.clone(), nu.clone()))
        })
    }

    pub(crate) fn component_terms(&self, d: i64) -> Option<(usize, &Terms)> {
        self.components.get(&d).map(|c| (c.level, &c.terms))
    }

    fn ensure_same(&self, other: &Element) -> Result<()> {
        if self.n != other.n {
            Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            })
        } else {
            Ok(())
        }
    }

    /// The homogeneous degree-`d` part.
    pub fn component(&self, d: i64) -> Element {
        let mut components = BTreeMap::new();
        if let Some(c) = self.components.get(&d) {
            components.insert(d, c.clone());
        }
        Element {
            n: self.n,
            components,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        if s.is_zero() {
            return Element {
                n: self.n,
                components: BTreeMap::new(),
            };
        }
        let mut out = self.clone();
        for c in out.components.values_mut() {
            for v in c.terms.values_mut() {
                *v *= s;
            }
        }
        out
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.ensure_same(other)?;
        let mut components = self.components.clone();
        for (&d, oc) in &other.components {
            match components.remove(&d) {
                None => {
                    components.insert(d, oc.clone());
                }
                Some(sc) => {
                    let level = sc.level.max(oc.level);
                    let mut terms = sc.padded(self.n, level);
                    for (k, v) in oc.padded(self.n, level) {
                        add_into(&mut terms, k, v);
                    }
                    terms.retain(|_, c| !c.is_zero());
                    if !terms.is_empty() {
                        components.insert(d, Component { level, terms });
                    }
                }
            }
        }
        Ok(Element {
            n: self.n,
            components,
        })
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.try_add(&-other)
    }

    /// Product, reduced with the Cuntz relations `S_i^* S_j = delta_ij`.
    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.ensure_same(other)?;
        let mut b = Builder::new(self.n);
        for yc in other.components.values() {
            // Index the right factor by its `mu` words; they share one length.
            let mut by_mu: BTreeMap<&Word, Vec<(&Word, &Scalar)>> = BTreeMap::new();
            for ((mu, nu), c) in &yc.terms {
                by_mu.entry(mu).or_default().push((nu, c));
            }
            let mu_len = by_mu.keys().next().map(|w| w.len()).unwrap_or(0);
            for xc in self.components.values() {
                for ((a, bw), xc) in &xc.terms {
                    if bw.len() <= mu_len {
                        let hits = by_mu
                            .range::<&Word, _>(bw..)
                            .take_while(|(c, _)| c.starts_with(bw));
                        for (c, rest) in hits {
                            for (d, yc) in rest {
                                let (m, v) = reduce_pair(a, bw, c, d).expect("prefix match");
                                b.push(m, v, xc * *yc);
                            }
                        }
                    } else {
                        let prefix = Word::from_raw(bw.letters()[..mu_len].to_vec());
                        if let Some(rest) = by_mu.get(&prefix) {
                            for (d, yc) in rest {
                                let (m, v) = reduce_pair(a, bw, &prefix, d).expect("prefix match");
                                b.push(m, v, xc * *yc);
                            }
                        }
                    }
                }
            }
        }
        Ok(b.finish())
    }

    /// `(S_mu S_nu^*)^* = S_nu S_mu^*`; rational coefficients are self-conjugate.
    pub fn adjoint(&self) -> Element {
        let mut components = BTreeMap::new();
        for (&d, c) in &self.components {
            let terms = c
                .terms
                .iter()
                .map(|((mu, nu), k)| ((nu.clone(), mu.clone()), k.clone()))
                .collect();
            components.insert(
                -d,
                Component {
                    level: c.level,
                    terms,
                },
            );
        }
        Element {
            n: self.n,
            components,
        }
    }

    /// Rewrites the degree-`d` component at level `m` using
    /// `S_mu S_nu^* = sum_i S_{mu i} S_{nu i}^*`.
    pub fn pad_to_level(&self, d: i64, m: usize) -> Result<Element> {
        let Some(c) = self.components.get(&d) else {
            return Ok(self.clone());
        };
        if m < c.level {
            return Err(Error::Level(format!(
                "degree {d} component is supported at level {}, cannot express at level {m}",
                c.level
            )));
        }
        let mut out = self.clone();
        out.components.insert(
            d,
            Component {
                level: m,
                terms: c.padded(self.n, m),
            },
        );
        Ok(out)
    }

    /// Conditional expectation onto F_n: the degree-0 component.
    pub fn expectation(&self) -> Element {
        self.component(0)
    }

    /// The canonical shift applied `k` times, `phi(x) = sum_i S_i x S_i^*`.
    pub fn shift_phi(&self, k: i64) -> Result<Element> {
        if k <= 0 {
            return Err(Error::Argument(format!(
                "shift power must be positive, got {k}"
            )));
        }
        Ok(self.shift_by(k as usize))
    }

    pub(crate) fn shift_by(&self, k: usize) -> Element {
        if k == 0 {
            return self.clone();
        }
        let mut components = BTreeMap::new();
        for (&d, c) in &self.components {
            let mut terms = Terms::new();
            for w in Word::all(self.n, k) {
                for ((mu, nu), v) in &c.terms {
                    terms.insert((w.concat(mu), w.concat(nu)), v.clone());
                }
            }
            components.insert(
                d,
                Component {
                    level: c.level + k,
                    terms,
                },
            );
        }
        Element {
            n: self.n,
            components,
        }
    }

    /// `tau(E(x))`, with `tau(S_mu S_nu^*) = [mu = nu] n^{-|mu|}` on F_n.
    pub fn trace(&self) -> Scalar {
        let Some(c) = self.components.get(&0) else {
            return Scalar::zero();
        };
        let diag: Scalar = c
            .terms
            .iter()
            .filter(|((mu, nu), _)| mu == nu)
            .map(|(_, v)| v.clone())
            .fold(Scalar::zero(), |a, b| a + b);
        diag * crate::scalar::inverse_power(self.n as u32, c.level as u32)
    }

    /// Fourier coefficient: `E(x S_1^{*k})` for `k > 0`, `E(S_1^{-k} x)` for
    /// `k < 0`, `E(x)` for `k = 0`.
    pub fn fourier_coeff(&self, k: i64) -> Element {
        let s1k = Element::s1_power(self.n, k.unsigned_abs() as usize);
        let part = self.component(k);
        let prod = match k.cmp(&0) {
            std::cmp::Ordering::Greater => part.try_mul(&s1k.adjoint()),
            std::cmp::Ordering::Less => s1k.try_mul(&part),
            std::cmp::Ordering::Equal => Ok(part),
        };
        prod.expect("same ambient").expectation()
    }

    /// `sum_{k=1}^N S_1^{*k} x_{-k} + x_0 + sum_{k=1}^N x_k S_1^k`.
    pub fn fourier_reconstruct(&self, bound: u32) -> Element {
        let mut acc = self.fourier_coeff(0);
        for k in 1..=bound as i64 {
            let s1k = Element::s1_power(self.n, k as usize);
            let pos = self.fourier_coeff(k).try_mul(&s1k).expect("same ambient");
            let neg = s1k
                .adjoint()
                .try_mul(&self.fourier_coeff(-k))
                .expect("same ambient");
            acc = &(&acc + &pos) + &neg;
        }
        acc
    }

    /// `S_1^k`.
    pub(crate) fn s1_power(n: u8, k: usize) -> Element {
        let mut b = Builder::new(n);
        b.push(Word::repeat(1, k), Word::empty(), Scalar::one());
        b.finish()
    }

    /// `a x a^*`-style compression helper: `p x p`.
    pub fn compress(&self, p: &Element) -> Result<Element> {
        p.try_mul(self)?.try_mul(p)
    }

    /// Commutator `x y - y x`.
    pub fn commutator(&self, other: &Element) -> Result<Element> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn is_projection(&self) -> bool {
        self.adjoint() == *self && (self * self) == *self
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n || self.components.len() != other.components.len() {
            return false;
        }
        self.components
            .iter()
            .zip(other.components.iter())
            .all(|((da, ca), (db, cb))| {
                if da != db {
                    return false;
                }
                if ca.level == cb.level {
                    return ca.terms == cb.terms;
                }
                let level = ca.level.max(cb.level);
                ca.padded(self.n, level) == cb.padded(self.n, level)
            })
    }
}

impl Eq for Element {}

impl Add for &Element {
    type Output = Element;
    /// Panics on ambient mismatch; use [`Element::try_add`] for a checked sum.
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("ambient mismatch in +")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("ambient mismatch in -")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("ambient mismatch in *")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Scalar::one())
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

fn fmt_word_product(w: &Word) -> String {
    w.letters()
        .iter()
        .map(|l| format!("S{l}"))
        .collect::<Vec<_>>()
        .join("*")
}

/// Renders in the expression syntax of the command line front end, e.g.
/// `1/2*S1*adj(S2) - I`. The output re-parses to an equal element.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, m) in self.monomials().enumerate() {
            let neg = m.coeff.is_negative();
            let mag = m.coeff.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() {
                factors.push(format!("{mag}"));
            }
            if !m.mu.is_empty() {
                factors.push(fmt_word_product(&m.mu));
            }
            if !m.nu.is_empty() {
                factors.push(format!("adj({})", fmt_word_product(&m.nu)));
            }
            if m.mu.is_empty() && m.nu.is_empty() && mag.is_one() {
                factors.push("I".into());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn s(n: usize, i: usize) -> Element {
        Element::generator(n, i).unwrap()
    }

    fn mono(n: usize, mu: &[usize], nu: &[usize]) -> Element {
        let n8 = n as u8;
        Element::monomial(
            n,
            Scalar::one(),
            Word::new(mu.iter().copied(), n8).unwrap(),
            Word::new(nu.iter().copied(), n8).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn monomial_products() {
        let n = 4;
        assert_eq!(&mono(n, &[1], &[2]) * &mono(n, &[2], &[3]), mono(n, &[1], &[3]));
        assert!((&mono(n, &[1], &[2]) * &mono(n, &[3], &[1])).is_zero());
        assert_eq!(&s(n, 1).adjoint() * &mono(n, &[1, 2], &[]), s(n, 2));
    }

    #[test]
    fn ambient_mismatch() {
        let err = s(2, 1).try_mul(&s(3, 1)).unwrap_err();
        assert_eq!(err, Error::AmbientMismatch { left: 2, right: 3 });
        assert!(s(2, 1).try_add(&s(3, 1)).is_err());
    }

    #[test]
    fn n_bounds() {
        assert!(Element::one(1).is_err());
        assert!(Element::one(65).is_err());
        assert!(Element::one(64).is_ok());
        assert!(Element::generator(2, 3).is_err());
    }

    #[test]
    fn cuntz_relations() {
        for n in [2, 3, 5] {
            let one = Element::one(n).unwrap();
            let mut sum = Element::zero(n).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    let p = &s(n, i).adjoint() * &s(n, j);
                    if i == j {
                        assert_eq!(p, one);
                    } else {
                        assert!(p.is_zero());
                    }
                }
                sum = &sum + &(&s(n, i) * &s(n, i).adjoint());
            }
            assert_eq!(sum, one);
        }
    }

    #[test]
    fn cuntz_sum_is_left_identity() {
        let x = mono(2, &[1], &[2]);
        let sum = &mono(2, &[1], &[1]) + &mono(2, &[2], &[2]);
        assert_eq!(&sum * &x, x);
        assert_eq!(&x * &Element::one(2).unwrap(), x);
    }

    #[test]
    fn padding() {
        let one = Element::one(2).unwrap();
        let padded = one.pad_to_level(0, 1).unwrap();
        assert_eq!(padded.level_of(0), Some(1));
        assert_eq!(padded.term_count(), 2);
        assert_eq!(padded, &mono(2, &[1], &[1]) + &mono(2, &[2], &[2]));

        let e = mono(2, &[1], &[1]);
        let p2 = e.pad_to_level(0, 2).unwrap();
        assert_eq!(p2, &mono(2, &[1, 1], &[1, 1]) + &mono(2, &[1, 2], &[1, 2]));
        assert!(matches!(p2.pad_to_level(0, 1), Err(Error::Level(_))));

        // negative degree: level is |mu|
        let x = mono(2, &[2], &[1, 1]);
        assert_eq!(x.level_of(-1), Some(1));
        let px = x.pad_to_level(-1, 3).unwrap();
        assert_eq!(px.term_count(), 4);
        assert_eq!(px, x);
    }

    #[test]
    fn expectation_examples() {
        assert!(s(2, 1).expectation().is_zero());
        let e = mono(2, &[1], &[1]);
        assert_eq!(e.expectation(), e);
        let x = mono(8, &[1, 2], &[3, 8, 8, 5]);
        assert_eq!(x.degree_support(), BTreeSet::from([-2]));
        assert!(x.expectation().is_zero());
    }

    #[test]
    fn shift_examples() {
        let one = Element::one(2).unwrap();
        assert_eq!(one.shift_phi(1).unwrap(), one);
        let e = mono(2, &[1], &[1]);
        assert_eq!(&e.shift_phi(1).unwrap() * &e, mono(2, &[1, 1], &[1, 1]));
        assert!(e.shift_phi(0).is_err());
        assert!(e.shift_phi(-1).is_err());
    }

    #[test]
    fn trace_examples() {
        assert_eq!(Element::one(3).unwrap().trace(), int(1));
        let p = mono(2, &[1, 1, 1], &[1, 1, 1]);
        assert_eq!(p.trace(), ratio(1, 8));
        let e = mono(2, &[1], &[1]);
        assert_eq!((&e.shift_phi(1).unwrap() * &e).trace(), ratio(1, 4));
        assert_eq!(s(2, 1).trace(), int(0));
    }

    #[test]
    fn fourier_examples() {
        let x = mono(8, &[1, 2], &[3, 8, 8, 5]);
        let s1sq = &s(8, 1) * &s(8, 1);
        let c = x.fourier_coeff(-2);
        assert_eq!(c, &s1sq * &x);
        assert!(c.is_in_core());
        assert_eq!(&s1sq.adjoint() * &c, x);
        assert!(Element::one(2).unwrap().fourier_coeff(1).is_zero());
        assert!(s(2, 1).fourier_reconstruct(0).is_zero());
    }

    #[test]
    fn degree_support_examples() {
        assert_eq!(mono(2, &[1], &[2]).degree_support(), BTreeSet::from([0]));
        let x = &s(2, 1) + &s(2, 1).adjoint();
        assert_eq!(x.degree_support(), BTreeSet::from([-1, 1]));
    }

    #[test]
    fn zero_pruning() {
        let x = &mono(2, &[1], &[1]) + &mono(2, &[2], &[2]);
        let y = &x - &Element::one(2).unwrap();
        assert!(y.is_zero());
        assert!(y.degree_support().is_empty());
    }

    #[test]
    fn display_is_readable() {
        let x = &mono(2, &[1], &[2]).scale(&ratio(-1, 2)) + &Element::one(2).unwrap();
        let shown = x.to_string();
        assert!(shown.contains("adj(S2)"), "{shown}");
        assert_eq!(Element::zero(2).unwrap().to_string(), "0");
        assert_eq!(Element::one(2).unwrap().to_string(), "I");
    }
}
