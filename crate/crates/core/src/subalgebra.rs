//! Subalgebras of F_n, their relative commutants, the Fourier cutoff and
//! gauge spectral data.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::One;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::intertwiner::{intertwiner_space_in, IntertwinerSpace};
use crate::level::LevelMatrix;
use crate::linalg::{in_span, rank, SparseVec};
use crate::scalar::{inverse_power, Scalar};
use crate::word::{check_n, Word};

/// `e_1 F_n e_1 ⊕ ... ⊕ e_l F_n e_l` for orthogonal projections summing to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerSumAlgebra {
    n: usize,
    level: usize,
    projections: Vec<Element>,
}

impl CornerSumAlgebra {
    /// Validates the projections and presents the corner sum at the level
    /// of its deepest projection.
    pub fn new(projections: Vec<Element>) -> Result<Self> {
        let level = projections.iter().map(Element::level).max().unwrap_or(0);
        Self::with_level(projections, level)
    }

    pub fn with_level(projections: Vec<Element>, level: usize) -> Result<Self> {
        let first = projections
            .first()
            .ok_or_else(|| Error::Presentation("empty projection list".into()))?;
        let n = first.n();
        for (i, e) in projections.iter().enumerate() {
            if e.n() != n {
                return Err(Error::AmbientMismatch {
                    left: n as u8,
                    right: e.n() as u8,
                });
            }
            if !e.is_in_core() {
                return Err(Error::Presentation(format!("e_{} is not in F_n", i + 1)));
            }
            if e.level() > level {
                return Err(Error::Presentation(format!(
                    "e_{} needs level {} > presentation level {level}",
                    i + 1,
                    e.level()
                )));
            }
            if e.is_zero() {
                return Err(Error::Presentation(format!("e_{} is zero", i + 1)));
            }
            if e.adjoint() != *e {
                return Err(Error::Presentation(format!("e_{} is not self-adjoint", i + 1)));
            }
            if &(e * e) != e {
                return Err(Error::Presentation(format!("e_{} is not idempotent", i + 1)));
            }
        }
        for i in 0..projections.len() {
            for j in 0..projections.len() {
                if i != j && !(&projections[i] * &projections[j]).is_zero() {
                    return Err(Error::Presentation(format!(
                        "orthogonality fails: e_{} e_{} != 0",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let mut sum = Element::zero(n)?;
        for e in &projections {
            sum = &sum + e;
        }
        if sum != Element::one(n)? {
            return Err(Error::Presentation(
                "projections do not sum to the identity".into(),
            ));
        }
        Ok(CornerSumAlgebra {
            n,
            level,
            projections,
        })
    }

    /// F_n itself, presented by its level-1 matrix units.
    pub fn uhf_core(n: usize) -> Result<Self> {
        check_n(n)?;
        Self::with_level(vec![Element::one(n)?], 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn projections(&self) -> &[Element] {
        &self.projections
    }

    pub fn len(&self) -> usize {
        self.projections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projections.is_empty()
    }

    /// `{ e_i E_{mu,nu} e_i : |mu| = |nu| = M }` without zeros, ordered by
    /// `(i, mu, nu)`.
    pub fn generators_at(&self, level: usize) -> Result<Vec<Element>> {
        if level < self.level {
            return Err(Error::Level(format!(
                "level {level} below the presentation level {}",
                self.level
            )));
        }
        let n8 = self.n as u8;
        let words: Vec<Word> = Word::all(n8, level).collect();
        let mut out = Vec::new();
        for e in &self.projections {
            let support = LevelMatrix::from_element(e, 0, level)?;
            // rows/columns of E_{mu,nu} survive only where e has entries
            let rows: BTreeSet<&Word> = support.entries().keys().map(|(r, _)| r).collect();
            let cols: BTreeSet<&Word> = support.entries().keys().map(|(_, c)| c).collect();
            for mu in &words {
                if !cols.contains(mu) {
                    continue;
                }
                for nu in &words {
                    if !rows.contains(nu) {
                        continue;
                    }
                    let g = Element::matrix_unit(self.n, mu, nu)?.compress(e)?;
                    if !g.is_zero() {
                        out.push(g);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Whether `x` lies in the corner sum: degree 0 and `sum_i e_i x e_i = x`.
    pub fn contains(&self, x: &Element) -> Result<bool> {
        if x.n() != self.n {
            return Err(Error::AmbientMismatch {
                left: self.n as u8,
                right: x.n() as u8,
            });
        }
        if !x.is_in_core() {
            return Ok(false);
        }
        let mut acc = Element::zero(self.n)?;
        for e in &self.projections {
            acc = &acc + &x.compress(e)?;
        }
        Ok(acc == *x)
    }
}

pub fn make_corner_sum(projections: Vec<Element>) -> Result<CornerSumAlgebra> {
    CornerSumAlgebra::new(projections)
}

pub fn membership(x: &Element, algebra: &CornerSumAlgebra) -> Result<bool> {
    algebra.contains(x)
}

/// A subalgebra given by an explicit finite generating set of degree-0 elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedAlgebra {
    n: usize,
    generators: Vec<Element>,
}

impl GeneratedAlgebra {
    pub fn new(n: usize, generators: Vec<Element>) -> Result<Self> {
        check_n(n)?;
        for (i, g) in generators.iter().enumerate() {
            if g.n() != n {
                return Err(Error::AmbientMismatch {
                    left: n as u8,
                    right: g.n() as u8,
                });
            }
            if !g.is_in_core() {
                return Err(Error::Presentation(format!("generator {} is not in F_n", i + 1)));
            }
        }
        Ok(GeneratedAlgebra { n, generators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn level(&self) -> usize {
        self.generators.iter().map(Element::level).max().unwrap_or(0)
    }
}

/// The presentations a commutant can be computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subalgebra {
    CornerSum(CornerSumAlgebra),
    Generated(GeneratedAlgebra),
}

impl From<CornerSumAlgebra> for Subalgebra {
    fn from(a: CornerSumAlgebra) -> Self {
        Subalgebra::CornerSum(a)
    }
}

impl From<GeneratedAlgebra> for Subalgebra {
    fn from(a: GeneratedAlgebra) -> Self {
        Subalgebra::Generated(a)
    }
}

impl Subalgebra {
    pub fn n(&self) -> usize {
        match self {
            Subalgebra::CornerSum(a) => a.n(),
            Subalgebra::Generated(a) => a.n(),
        }
    }

    pub fn level(&self) -> usize {
        match self {
            Subalgebra::CornerSum(a) => a.level(),
            Subalgebra::Generated(a) => a.level(),
        }
    }

    pub fn generators_at(&self, level: usize) -> Result<Vec<Element>> {
        match self {
            Subalgebra::CornerSum(a) => a.generators_at(level),
            Subalgebra::Generated(a) => {
                if level < a.level() {
                    return Err(Error::Level(format!(
                        "level {level} below the generator level {}",
                        a.level()
                    )));
                }
                Ok(a.generators().to_vec())
            }
        }
    }

    /// Certified Fourier cutoff; only corner sums have one.
    pub fn cutoff(&self) -> Option<u32> {
        match self {
            Subalgebra::CornerSum(a) => Some(fourier_cutoff(a)),
            Subalgebra::Generated(_) => None,
        }
    }

    pub fn as_corner_sum(&self) -> Option<&CornerSumAlgebra> {
        match self {
            Subalgebra::CornerSum(a) => Some(a),
            Subalgebra::Generated(_) => None,
        }
    }
}

/// Degree-0 commutant `A' ∩ F^(M)`.
pub fn relative_commutant_f(algebra: &Subalgebra, level: usize) -> Result<IntertwinerSpace> {
    let gens = algebra.generators_at(level)?;
    intertwiner_space_in(algebra.n(), &gens, 0, level)
}

/// Least `N >= 1` with `n^-N < min_i tau(e_i)`.
pub fn fourier_cutoff(algebra: &CornerSumAlgebra) -> u32 {
    let c = algebra
        .projections
        .iter()
        .map(Element::trace)
        .min()
        .unwrap_or_else(Scalar::one);
    let mut big_n = 1;
    while inverse_power(algebra.n as u32, big_n) >= c {
        big_n += 1;
    }
    big_n
}

/// Per-degree commutant data for a window of gauge degrees.
#[derive(Clone, Debug)]
pub struct CommutantReport {
    pub algebra: Subalgebra,
    pub level: usize,
    /// Window actually used, `max(requested, cutoff)`.
    pub window: u32,
    pub requested_window: u32,
    pub cutoff: Option<u32>,
    /// One space per degree in `-window..=window`, in increasing degree.
    pub spaces: Vec<IntertwinerSpace>,
}

impl CommutantReport {
    pub fn degrees(&self) -> Vec<i64> {
        self.spaces.iter().map(|s| s.k).collect()
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.spaces.iter().map(IntertwinerSpace::dimension).collect()
    }

    pub fn space(&self, k: i64) -> Option<&IntertwinerSpace> {
        self.spaces.iter().find(|s| s.k == k)
    }

    pub fn dimension(&self, k: i64) -> Option<usize> {
        self.space(k).map(IntertwinerSpace::dimension)
    }

    /// Degree-`k` elements of `A' ∩ O_n` found in the window.
    pub fn commutant_basis(&self, k: i64) -> Vec<Element> {
        self.space(k)
            .map(IntertwinerSpace::commutant_elements)
            .unwrap_or_default()
    }

    /// Degrees at or beyond the cutoff with a nonzero space.
    pub fn cutoff_violations(&self) -> Vec<i64> {
        match self.cutoff {
            None => Vec::new(),
            Some(c) => self
                .spaces
                .iter()
                .filter(|s| s.k.unsigned_abs() >= c as u64 && s.dimension() > 0)
                .map(|s| s.k)
                .collect(),
        }
    }

    pub fn cutoff_sound(&self) -> bool {
        self.cutoff_violations().is_empty()
    }
}

/// Intertwiner spaces for every degree in `[-D, D]` at level `M`, with `D`
/// raised to the Fourier cutoff when one is known.
pub fn relative_commutant_on(
    algebra: &Subalgebra,
    level: usize,
    window: u32,
) -> Result<CommutantReport> {
    let cutoff = algebra.cutoff();
    let used = window.max(cutoff.unwrap_or(0));
    let gens = algebra.generators_at(level)?;
    let n = algebra.n();
    let degrees: Vec<i64> = (-(used as i64)..=used as i64).collect();
    let spaces = std::thread::scope(|scope| {
        let handles: Vec<_> = degrees
            .iter()
            .map(|&k| {
                let gens = &gens;
                scope.spawn(move || intertwiner_space_in(n, gens, k, level))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("degree solve panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(CommutantReport {
        algebra: algebra.clone(),
        level,
        window: used,
        requested_window: window,
        cutoff,
        spaces,
    })
}

/// The finite-level instance of `A' ∩ O_n = C`: degree-0 dimension 1 and
/// nothing in the other degrees of the window.
pub fn check_irreducibility_instance(algebra: &Subalgebra, level: usize, window: u32) -> Result<bool> {
    let report = relative_commutant_on(algebra, level, window)?;
    Ok(report
        .spaces
        .iter()
        .all(|s| s.dimension() == usize::from(s.k == 0)))
}

/// Minimal projections with integer labels, encoding `u_z = sum_i z^{k_i} e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeSpectralData {
    pub projections: Vec<Element>,
    pub labels: Vec<i64>,
    /// `(i, j, d)`: some degree-`d` basis element has `e_i x e_j != 0`.
    pub edges: Vec<(usize, usize, i64)>,
}

impl GaugeSpectralData {
    /// `e_i x e_j != 0` implies `k_i - k_j = d` for every degree-`d` basis element.
    pub fn edge_condition_holds(&self, report: &CommutantReport) -> Result<bool> {
        for space in &report.spaces {
            for x in space.commutant_elements() {
                for (i, ei) in self.projections.iter().enumerate() {
                    for (j, ej) in self.projections.iter().enumerate() {
                        let block = &(ei * &x) * ej;
                        if !block.is_zero() && self.labels[i] - self.labels[j] != space.k {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

fn coords_at(x: &Element, degree: i64, level: usize) -> Result<SparseVec> {
    Ok(LevelMatrix::from_element(x, degree, level)?.coordinates())
}

fn common_level(xs: &[Element], degree: i64) -> usize {
    xs.iter()
        .filter_map(|x| x.level_of(degree))
        .max()
        .unwrap_or(0)
}

fn width_at(n: usize, degree: i64, level: usize) -> usize {
    let (r, c) = crate::level::shape(degree, level);
    n.pow((r + c) as u32)
}

/// Dimension of the span of homogeneous degree-`d` elements.
pub fn span_dimension(xs: &[Element], degree: i64) -> Result<usize> {
    let Some(n) = xs.first().map(Element::n) else {
        return Ok(0);
    };
    let level = common_level(xs, degree);
    let vecs = xs
        .iter()
        .map(|x| coords_at(x, degree, level))
        .collect::<Result<Vec<_>>>()?;
    Ok(rank(&vecs, width_at(n, degree, level)))
}

/// Whether homogeneous `x` of degree `d` lies in the span of `basis`.
pub fn span_contains(basis: &[Element], x: &Element, degree: i64) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    let mut all = basis.to_vec();
    all.push(x.clone());
    let level = common_level(&all, degree);
    let vecs = basis
        .iter()
        .map(|b| coords_at(b, degree, level))
        .collect::<Result<Vec<_>>>()?;
    let target = coords_at(x, degree, level)?;
    Ok(in_span(&target, &vecs, width_at(x.n(), degree, level)))
}

fn check_minimal(report: &CommutantReport, projections: &[Element]) -> Result<()> {
    let zero_basis = report.commutant_basis(0);
    for (i, e) in projections.iter().enumerate() {
        let corner = zero_basis
            .iter()
            .map(|b| b.compress(e))
            .collect::<Result<Vec<_>>>()?;
        let dim = span_dimension(&corner, 0)?;
        if dim != 1 {
            return Err(Error::Argument(format!(
                "e_{} is not minimal in the degree-0 commutant (corner dimension {dim})",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Assigns integer labels `k_i` with `k_i - k_j = d` along every edge
/// `e_i x e_j != 0` of a degree-`d` basis element. The smallest label in
/// each connected component is 0.
pub fn derive_gauge_labels(report: &CommutantReport, projections: &[Element]) -> Result<GaugeSpectralData> {
    check_minimal(report, projections)?;
    let l = projections.len();
    let mut edges = Vec::new();
    for space in &report.spaces {
        for x in space.commutant_elements() {
            for (i, ei) in projections.iter().enumerate() {
                let left = ei * &x;
                if left.is_zero() {
                    continue;
                }
                for (j, ej) in projections.iter().enumerate() {
                    if !(&left * ej).is_zero() {
                        edges.push((i, j, space.k));
                    }
                }
            }
        }
    }
    edges.sort();
    edges.dedup();

    // adjacency with signed differences: label[j] = label[i] - d for edge (i, j, d)
    let mut adj: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
    for &(i, j, d) in &edges {
        adj.entry(i).or_default().push((j, -d));
        adj.entry(j).or_default().push((i, d));
    }
    let mut labels: Vec<Option<i64>> = vec![None; l];
    for start in 0..l {
        if labels[start].is_some() {
            continue;
        }
        labels[start] = Some(0);
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let lv = labels[v].expect("visited");
            for &(w, delta) in adj.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                match labels[w] {
                    None => {
                        labels[w] = Some(lv + delta);
                        component.push(w);
                        queue.push_back(w);
                    }
                    Some(lw) if lw != lv + delta => {
                        return Err(Error::Structural(format!(
                            "inconsistent gauge labels: e_{} needs {} and {}",
                            w + 1,
                            lw,
                            lv + delta
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let min = component
            .iter()
            .map(|&v| labels[v].expect("labelled"))
            .min()
            .unwrap_or(0);
        for &v in &component {
            labels[v] = labels[v].map(|x| x - min);
        }
    }
    Ok(GaugeSpectralData {
        projections: projections.to_vec(),
        labels: labels.into_iter().map(|x| x.expect("all labelled")).collect(),
        edges,
    })
}

/// Multiplicity-one shape of the inclusion `A' ∩ F_n ⊂ A' ∩ O_n`: each
/// projection's corner of the computed commutant is one-dimensional and of
/// degree 0, so exactly one edge leaves each vertex of the Bratteli diagram.
pub fn bratteli_shape_check(report: &CommutantReport, projections: &[Element]) -> Result<bool> {
    for e in projections {
        let mut zero_corner = Vec::new();
        for space in &report.spaces {
            for x in space.commutant_elements() {
                let c = x.compress(e)?;
                if space.k != 0 && !c.is_zero() {
                    return Ok(false);
                }
                if space.k == 0 {
                    zero_corner.push(c);
                }
            }
        }
        if span_dimension(&zero_corner, 0)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
