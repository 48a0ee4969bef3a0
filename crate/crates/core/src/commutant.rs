//! Subalgebra closure, commutants and certified ranks for matrix algebras.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{nullspace, EchelonSpan, SparseVec};
use crate::matrix::OperatorMatrix;
use crate::qfield::{Field, Rational, RationalFunction, SpecializationPoint};

/// A linearly independent family of `dim x dim` matrices together with the
/// echelon form of its span.
#[derive(Clone)]
pub struct AlgebraBasis<F> {
    dim: usize,
    elements: Vec<OperatorMatrix<F>>,
    closed: bool,
    span: EchelonSpan<F>,
}

impl<F: Field> std::fmt::Debug for AlgebraBasis<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AlgebraBasis(dim {}, {} elements, closed {})", self.dim, self.len(), self.closed)
    }
}

impl<F: Field> AlgebraBasis<F> {
    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            elements: Vec::new(),
            closed: false,
            span: EchelonSpan::new(dim * dim),
        }
    }

    /// Keeps the matrices that are independent of the ones before them.
    pub fn spanned_by(dim: usize, mats: &[OperatorMatrix<F>]) -> Result<Self> {
        let mut b = Self::empty(dim);
        for m in mats {
            b.try_insert(m)?;
        }
        Ok(b)
    }

    /// Adds `m` if it is outside the span; returns whether it was added.
    pub fn try_insert(&mut self, m: &OperatorMatrix<F>) -> Result<bool> {
        if m.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: m.dim(),
            });
        }
        if self.span.insert(&m.flatten()).is_some() {
            self.elements.push(m.clone());
            Ok(true)
        } else {
            Ok(false)
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of basis elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[OperatorMatrix<F>] {
        &self.elements
    }

    /// Set once product closure has been reached, or for commutants.
    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn contains(&self, m: &OperatorMatrix<F>) -> bool {
        m.dim() == self.dim && self.span.contains(&m.flatten())
    }

    /// Whether the span of `self` lies inside the span of `other`.
    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.elements.iter().all(|m| other.contains(m))
    }

    /// Checks that every product of two basis elements stays in the span.
    pub fn is_product_closed(&self) -> Result<bool> {
        for a in &self.elements {
            for b in &self.elements {
                if !self.contains(&a.mul(b)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Both inclusions, each decided by membership of every basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpanComparison {
    pub left_in_right: bool,
    pub right_in_left: bool,
}

impl SpanComparison {
    pub fn equal(&self) -> bool {
        self.left_in_right && self.right_in_left
    }
}

pub fn span_equal<F: Field>(a: &AlgebraBasis<F>, b: &AlgebraBasis<F>) -> SpanComparison {
    SpanComparison {
        left_in_right: a.is_subspace_of(b),
        right_in_left: b.is_subspace_of(a),
    }
}

/// Basis of the unital algebra generated by `generators`.
///
/// Starting from the identity, each round multiplies the elements added in
/// the previous round by every generator on the right and keeps the
/// products that are new. Aborts after `dim^2` rounds without stabilizing.
pub fn span_closure<F: Field>(dim: usize, generators: &[OperatorMatrix<F>]) -> Result<AlgebraBasis<F>> {
    span_closure_with_words(dim, generators).map(|(b, _)| b)
}

/// [`span_closure`] together with, for each basis element, the generator
/// indices (from 0) whose product in that order gives it.
pub fn span_closure_with_words<F: Field>(
    dim: usize,
    generators: &[OperatorMatrix<F>],
) -> Result<(AlgebraBasis<F>, Vec<Vec<usize>>)> {
    let mut basis = AlgebraBasis::empty(dim);
    for g in generators {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: g.dim(),
            });
        }
    }
    basis.try_insert(&OperatorMatrix::identity(dim))?;
    let mut words = vec![Vec::new()];
    let mut frontier = vec![(OperatorMatrix::identity(dim), Vec::new())];
    let max_rounds = dim * dim;
    let mut rounds = 0;
    while !frontier.is_empty() {
        if rounds >= max_rounds {
            return Err(Error::ClosureDidNotStabilize { rounds });
        }
        rounds += 1;
        let mut next = Vec::new();
        for (x, w) in &frontier {
            for (k, g) in generators.iter().enumerate() {
                let y = x.mul(g)?;
                if basis.try_insert(&y)? {
                    let mut wy: Vec<usize> = w.clone();
                    wy.push(k);
                    words.push(wy.clone());
                    next.push((y, wy));
                }
            }
        }
        frontier = next;
    }
    basis.closed = true;
    Ok((basis, words))
}

/// Linear constraints on the entries of `X` expressing `XY - sYX = 0`.
fn twisted_constraints<F: Field>(y: &OperatorMatrix<F>, s: &F) -> Vec<SparseVec<F>> {
    let dim = y.dim();
    let yt = y.transpose();
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            // (XY)_{ij} = Σ_k X_{ik} Y_{kj};  (YX)_{ij} = Σ_k Y_{ik} X_{kj}
            let mut row: BTreeMap<usize, F> = BTreeMap::new();
            for (k, v) in yt.row(j) {
                row.insert(i * dim + k, v.clone());
            }
            for (k, v) in y.row(i) {
                let e = row.entry(k * dim + j).or_insert_with(F::zero_value);
                *e = e.minus(&s.times(v));
            }
            let row: SparseVec<F> = row.into_iter().filter(|(_, v)| !v.is_zero_value()).collect();
            if !row.is_empty() {
                out.push(row);
            }
        }
    }
    out
}

/// `XY - sYX` flattened.
fn twisted_image<F: Field>(x: &OperatorMatrix<F>, y: &OperatorMatrix<F>, s: &F) -> Result<SparseVec<F>> {
    Ok(x.mul(y)?.sub(&y.mul(x)?.scale(s))?.flatten())
}

/// Solves against the first generator directly, then restricts the current
/// solution space one generator at a time: for a basis `N_k` the next
/// constraint is a small system in the coefficients of `Σ c_k N_k`.
fn solve_twisted<F: Field>(dim: usize, gens: &[OperatorMatrix<F>], s: F) -> Result<AlgebraBasis<F>> {
    for g in gens {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: g.dim(),
            });
        }
    }
    let mut sols: Vec<OperatorMatrix<F>> = match gens.first() {
        None => (0..dim * dim)
            .map(|k| OperatorMatrix::from_entries(dim, [(k / dim, k % dim, F::one_value())]))
            .collect(),
        Some(g) => nullspace(dim * dim, twisted_constraints(g, &s))
            .iter()
            .map(|v| OperatorMatrix::unflatten(dim, v))
            .collect(),
    };
    for g in gens.iter().skip(1) {
        if sols.is_empty() {
            break;
        }
        let mut by_pos: BTreeMap<usize, SparseVec<F>> = BTreeMap::new();
        for (k, x) in sols.iter().enumerate() {
            for (p, v) in twisted_image(x, g, &s)? {
                by_pos.entry(p).or_default().push((k, v));
            }
        }
        if by_pos.is_empty() {
            continue;
        }
        let coeffs = nullspace(sols.len(), by_pos.into_values());
        sols = coeffs
            .iter()
            .map(|c| {
                c.iter().try_fold(OperatorMatrix::zero(dim), |acc, (k, v)| acc.add(&sols[*k].scale(v)))
            })
            .collect::<Result<_>>()?;
    }
    AlgebraBasis::spanned_by(dim, &sols)
}

/// `{X : XY = YX for every generator Y}`. Commuting with generators is
/// enough to commute with the algebra they generate.
pub fn commutant_basis<F: Field>(dim: usize, gens: &[OperatorMatrix<F>]) -> Result<AlgebraBasis<F>> {
    let mut b = solve_twisted(dim, gens, F::one_value())?;
    b.closed = true;
    Ok(b)
}

/// `{X : YX = -XY for every generator Y}`.
pub fn anticommutant_basis<F: Field>(dim: usize, gens: &[OperatorMatrix<F>]) -> Result<AlgebraBasis<F>> {
    solve_twisted(dim, gens, F::one_value().negate())
}

/// Whether `whole = part1 ⊕ part2`: dimensions add up, and the concatenated
/// family is independent and spans `whole`.
pub fn direct_sum_check<F: Field>(whole: &AlgebraBasis<F>, part1: &AlgebraBasis<F>, part2: &AlgebraBasis<F>) -> Result<bool> {
    if part1.len() + part2.len() != whole.len() {
        return Ok(false);
    }
    let joined: Vec<OperatorMatrix<F>> = part1.elements().iter().chain(part2.elements()).cloned().collect();
    let sum = AlgebraBasis::spanned_by(whole.dim(), &joined)?;
    Ok(sum.len() == joined.len() && span_equal(&sum, whole).equal())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMode {
    Exact,
    Specialized,
}

impl std::str::FromStr for RankMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Self::Exact),
            "specialized" => Ok(Self::Specialized),
            _ => Err(Error::Parse(format!("unknown rank mode {s:?}"))),
        }
    }
}

impl std::fmt::Display for RankMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Exact => "exact",
            Self::Specialized => "specialized",
        })
    }
}

/// A rank value with the specialization points that reproduced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank: usize,
    pub points: Vec<SpecializationPoint>,
    /// Whether the rank was confirmed by elimination over `Q(q)`.
    pub exact: bool,
}

/// Where specialization points come from.
#[derive(Clone, Debug)]
pub enum PointSource {
    /// Draws from a ChaCha8 stream seeded with this value.
    Seeded(u64),
    Explicit(Vec<SpecializationPoint>),
}

const MAX_DRAWS: usize = 64;

/// Draws `t = a/b` with small `a, b`, avoiding `0` and `±1`.
fn draw_point(rng: &mut ChaCha8Rng) -> SpecializationPoint {
    loop {
        let a: i64 = rng.gen_range(-12..=12);
        let b: i64 = rng.gen_range(1..=7);
        let t = Rational::new(a.into(), b.into());
        let abs = if t < Rational::from_integer(0.into()) { -t.clone() } else { t.clone() };
        if a != 0 && abs != Rational::from_integer(1.into()) {
            return SpecializationPoint::new(t).expect("nonzero");
        }
    }
}

fn specialize_all(
    mats: &[OperatorMatrix<RationalFunction>],
    t: &SpecializationPoint,
) -> Result<Vec<OperatorMatrix<Rational>>> {
    mats.iter().map(|m| m.specialize(t)).collect()
}

/// `count` distinct pole-free points, or the explicit ones (which must be pole-free).
pub fn choose_points(
    mats: &[OperatorMatrix<RationalFunction>],
    source: &PointSource,
    count: usize,
) -> Result<Vec<SpecializationPoint>> {
    match source {
        PointSource::Explicit(points) => {
            for t in points {
                specialize_all(mats, t)?;
            }
            Ok(points.clone())
        }
        PointSource::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut out: Vec<SpecializationPoint> = Vec::new();
            let mut attempts = 0;
            while out.len() < count {
                if attempts >= MAX_DRAWS {
                    return Err(Error::NoPoleFreePoint { attempts });
                }
                attempts += 1;
                let t = draw_point(&mut rng);
                if out.contains(&t) || specialize_all(mats, &t).is_err() {
                    continue;
                }
                out.push(t);
            }
            Ok(out)
        }
    }
}

pub fn exact_rank<F: Field>(mats: &[OperatorMatrix<F>]) -> usize {
    let Some(first) = mats.first() else {
        return 0;
    };
    let n = first.dim() * first.dim();
    let mut span = EchelonSpan::new(n);
    for m in mats {
        span.insert(&m.flatten());
    }
    span.rank()
}

/// Rank of the span of `mats`.
///
/// Specialized mode evaluates at two or more points and fails on
/// disagreement. Exact mode eliminates over `Q(q)` and also records the
/// specialized ranks, failing if any of them differs from the exact one.
pub fn rank_with_certificate(
    mats: &[OperatorMatrix<RationalFunction>],
    mode: RankMode,
    source: &PointSource,
) -> Result<RankCertificate> {
    if mats.is_empty() {
        return Err(Error::Empty("rank of an empty family"));
    }
    let points = choose_points(mats, source, 2)?;
    let mut ranks = Vec::new();
    for t in &points {
        ranks.push(exact_rank(&specialize_all(mats, t)?));
    }
    let exact = match mode {
        RankMode::Exact => Some(exact_rank(mats)),
        RankMode::Specialized => None,
    };
    let reference = exact.unwrap_or(ranks[0]);
    if ranks.iter().any(|&r| r != reference) {
        let detail = points
            .iter()
            .zip(&ranks)
            .map(|(t, r)| format!("rank {r} at q={t}"))
            .collect::<Vec<_>>()
            .join(", ");
        let detail = match exact {
            Some(e) => format!("{detail}; exact rank {e}"),
            None => format!("{detail}; rerun in exact mode"),
        };
        return Err(Error::RankDisagreement(detail));
    }
    Ok(RankCertificate {
        rank: reference,
        points,
        exact: exact.is_some(),
    })
}

/// Specialized certificate, falling back to exact elimination when the
/// points disagree.
pub fn arbitrated_rank(mats: &[OperatorMatrix<RationalFunction>], source: &PointSource) -> Result<RankCertificate> {
    match rank_with_certificate(mats, RankMode::Specialized, source) {
        Err(Error::RankDisagreement(_)) => {
            let points = choose_points(mats, source, 2)?;
            Ok(RankCertificate {
                rank: exact_rank(mats),
                points,
                exact: true,
            })
        }
        other => other,
    }
}

/// Closure of the generators specialized at `t`, over `Q`.
pub fn specialized_closure(
    dim: usize,
    generators: &[OperatorMatrix<RationalFunction>],
    t: &SpecializationPoint,
) -> Result<AlgebraBasis<Rational>> {
    span_closure(dim, &specialize_all(generators, t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{HeckeElement, NormalFormWord};
    use crate::tensor::{pi_generators, pi_t, pi_tprime_generators, represent, GradedSpace};

    type RM = OperatorMatrix<Rational>;

    fn space(m: usize, n: usize, r: usize) -> GradedSpace {
        GradedSpace::new(m, n, r).unwrap()
    }

    /// Commutant by brute force: test every matrix unit combination via the
    /// dense linear map X -> [X, Y] over Q.
    fn brute_commutant_dim(gens: &[RM]) -> usize {
        let d = gens[0].dim();
        let mut images: Vec<SparseVec<Rational>> = Vec::new();
        for a in 0..d {
            for b in 0..d {
                let unit = RM::from_entries(d, [(a, b, Rational::from_integer(1.into()))]);
                let mut v = Vec::new();
                for (gi, g) in gens.iter().enumerate() {
                    for (k, c) in unit.commutator(g).unwrap().flatten() {
                        v.push((gi * d * d + k, c));
                    }
                }
                images.push(v);
            }
        }
        d * d - crate::linalg::rank(gens.len() * d * d, &images)
    }

    #[test]
    fn closure_examples() {
        let id = OperatorMatrix::<RationalFunction>::identity(4);
        assert_eq!(span_closure(4, &[id]).unwrap().len(), 1);
        let s = space(1, 1, 2);
        let t1 = pi_t(&s, 1).unwrap();
        let a = span_closure(4, &[t1]).unwrap();
        assert_eq!(a.len(), 2);
        assert!(a.closed() && a.is_product_closed().unwrap());
        let (_, words) = span_closure_with_words(4, &pi_generators(&s).unwrap()).unwrap();
        assert_eq!(words, vec![vec![], vec![0]]);
        let again = span_closure(4, a.elements()).unwrap();
        assert!(span_equal(&a, &again).equal());
        assert!(span_closure(3, &pi_generators(&s).unwrap()).is_err());
    }

    #[test]
    fn commutant_examples() {
        let s = space(1, 1, 2);
        let id = OperatorMatrix::<RationalFunction>::identity(4);
        assert_eq!(commutant_basis(4, &[id]).unwrap().len(), 16);
        let gens = pi_generators(&s).unwrap();
        let a = span_closure(4, &gens).unwrap();
        let b = commutant_basis(4, &gens).unwrap();
        assert_eq!(b.len(), 8);
        assert!(b.is_product_closed().unwrap());
        let t = SpecializationPoint::from_int(3).unwrap();
        let sp: Vec<RM> = gens.iter().map(|g| g.specialize(&t).unwrap()).collect();
        assert_eq!(brute_commutant_dim(&sp), 8);
        let aa = commutant_basis(4, b.elements()).unwrap();
        assert!(span_equal(&aa, &a).equal());
    }

    #[test]
    fn anticommutant_examples() {
        let s = space(1, 1, 2);
        let tp = pi_tprime_generators(&s).unwrap();
        let bd = anticommutant_basis(4, &tp).unwrap();
        assert_eq!(bd.len(), 8);
        for x in bd.elements() {
            assert!(x.anticommutator(&tp[0]).unwrap().is_zero());
        }
        let s = space(1, 0, 2);
        let tp = pi_tprime_generators(&s).unwrap();
        // π(T′_1) is the identity on a 1-dimensional even space: only 0 anticommutes.
        assert_eq!(anticommutant_basis(1, &tp).unwrap().len(), 0);
    }

    #[test]
    fn direct_sum_examples() {
        let s = space(1, 1, 2);
        let gens = pi_generators(&s).unwrap();
        let a = span_closure(4, &gens).unwrap();
        let empty = AlgebraBasis::empty(4);
        assert!(direct_sum_check(&a, &a, &empty).unwrap());
        assert!(!direct_sum_check(&a, &a, &a).unwrap());
        let id = AlgebraBasis::spanned_by(4, &[OperatorMatrix::identity(4)]).unwrap();
        let t = AlgebraBasis::spanned_by(4, &[gens[0].clone()]).unwrap();
        assert!(direct_sum_check(&a, &id, &t).unwrap());
    }

    #[test]
    fn rank_certificates() {
        let id = OperatorMatrix::<RationalFunction>::identity(3);
        let two = id.scale(&RationalFunction::from_int(2));
        let c = rank_with_certificate(&[id, two], RankMode::Exact, &PointSource::Seeded(0)).unwrap();
        assert_eq!(c.rank, 1);
        assert_eq!(c.points.len(), 2);
        assert_ne!(c.points[0], c.points[1]);

        for (m, n, expected) in [(1, 1, 6), (1, 0, 1)] {
            let s = space(m, n, 3);
            let mats: Vec<_> = NormalFormWord::all(3)
                .unwrap()
                .into_iter()
                .map(|w| represent(&HeckeElement::basis(w).unwrap(), &s).unwrap())
                .collect();
            let ex = rank_with_certificate(&mats, RankMode::Exact, &PointSource::Seeded(1)).unwrap();
            let sp = rank_with_certificate(&mats, RankMode::Specialized, &PointSource::Seeded(2)).unwrap();
            assert_eq!(ex.rank, sp.rank);
            assert_eq!(ex.rank, expected);
            assert!(ex.exact && !sp.exact);
        }
    }

    #[test]
    fn disagreement_is_reported() {
        // (q - 1) I vanishes at q = 1 only.
        let q1 = &RationalFunction::q() - &RationalFunction::one();
        let m = OperatorMatrix::<RationalFunction>::identity(2).scale(&q1);
        let pts = PointSource::Explicit(vec![SpecializationPoint::one(), SpecializationPoint::from_int(2).unwrap()]);
        let err = rank_with_certificate(std::slice::from_ref(&m), RankMode::Specialized, &pts).unwrap_err();
        assert!(matches!(err, Error::RankDisagreement(_)));
        let arb = arbitrated_rank(&[m], &pts).unwrap();
        assert_eq!(arb.rank, 1);
        assert!(arb.exact);
    }

    #[test]
    fn seeded_points_are_deterministic_and_generic() {
        let id = [OperatorMatrix::<RationalFunction>::identity(1)];
        let a = choose_points(&id, &PointSource::Seeded(9), 4).unwrap();
        let b = choose_points(&id, &PointSource::Seeded(9), 4).unwrap();
        assert_eq!(a, b);
        for t in &a {
            let v = t.value();
            assert!(*v != Rational::from_integer(1.into()) && *v != Rational::from_integer((-1).into()));
        }
    }
}
