//! End-to-end verification suites. Each suite builds the relevant algebras,
//! runs named checks and returns a [`SuiteReport`].

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::alt::{b_relations, enumerate_even_basis, is_in_alt, odd_words, verify_crossed_product_h, x_generator};
use crate::combinatorics::{hook_classify, predicted_dimensions, d_lambda};
use crate::commutant::{
    anticommutant_basis, choose_points, commutant_basis, direct_sum_check, rank_with_certificate, span_closure,
    span_closure_with_words,
    span_equal, AlgebraBasis, PointSource, RankMode,
};
use crate::crossed::{crossed_system_checks, CrossedSystem, Z2};
use crate::error::{Error, Result};
use crate::hecke::relations::{t_relations, tprime_relations, RelationInstance};
use crate::hecke::{HeckeElement, NormalFormWord, ScaledTPrime};
use crate::matrix::OperatorMatrix;
use crate::qfield::{Field, Rational, RationalFunction, SpecializationPoint};
use crate::report::{Check, SuiteReport, WITNESS_LIMIT};
use crate::tensor::{phi_square_sign, phi_tensor, pi_t, rho_generators, sign_permutation, GradedSpace, Matrix};

/// Largest rank accepted by the Hecke and alternating suites unless overridden.
pub const DEFAULT_RANK_BOUND: usize = 6;
/// Largest `(m+n)^r` accepted in exact mode unless overridden.
pub const EXACT_DIM_BOUND: usize = 64;
pub const SPECIALIZED_DIM_BOUND: usize = 256;

/// The even closure is checked on every pair up to this rank, on samples above.
const EXHAUSTIVE_CLOSURE_RANK: usize = 5;
const CLOSURE_SAMPLES: usize = 64;
const MEMBERSHIP_SAMPLES: usize = 8;
const MATRIX_CROSSED_SAMPLES: usize = 6;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub mode: RankMode,
    /// Explicit specialization points; drawn from `seed` when absent.
    pub points: Option<Vec<SpecializationPoint>>,
    /// Overrides the rank bound (Hecke suites) or the dimension bound (matrix suites).
    pub bound: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            mode: RankMode::Specialized,
            points: None,
            bound: None,
        }
    }
}

impl SuiteOptions {
    pub fn exact() -> Self {
        Self {
            mode: RankMode::Exact,
            ..Self::default()
        }
    }

    fn point_source(&self) -> PointSource {
        match &self.points {
            Some(p) => PointSource::Explicit(p.clone()),
            None => PointSource::Seeded(self.seed),
        }
    }

    pub fn dim_bound(&self) -> usize {
        self.bound.unwrap_or(match self.mode {
            RankMode::Exact => EXACT_DIM_BOUND,
            RankMode::Specialized => SPECIALIZED_DIM_BOUND,
        })
    }

    pub fn rank_bound(&self) -> usize {
        self.bound.unwrap_or(DEFAULT_RANK_BOUND)
    }

    fn report(&self, suite: &str) -> SuiteReport {
        let mut rep = SuiteReport::new(suite).param("seed", self.seed).param("mode", self.mode);
        if let Some(b) = self.bound {
            rep = rep.param("bound", b);
        }
        rep
    }
}

fn check_rank(r: usize, opts: &SuiteOptions) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidRank {
            rank: r,
            reason: "suites need r >= 2",
        });
    }
    if r > opts.rank_bound() {
        return Err(Error::SizeBound {
            required: r,
            bound: opts.rank_bound(),
        });
    }
    Ok(())
}

fn check_space(m: usize, n: usize, r: usize, opts: &SuiteOptions) -> Result<GradedSpace> {
    let space = GradedSpace::new(m, n, r)?;
    if space.dim() > opts.dim_bound() {
        return Err(Error::SizeBound {
            required: space.dim(),
            bound: opts.dim_bound(),
        });
    }
    Ok(space)
}

/// One check per relation, in order of first appearance.
fn relation_checks(instances: Vec<RelationInstance>) -> Vec<Check> {
    let mut names: Vec<&'static str> = Vec::new();
    for inst in &instances {
        if !names.contains(&inst.relation) {
            names.push(inst.relation);
        }
    }
    names
        .into_iter()
        .map(|name| {
            let of_kind: Vec<&RelationInstance> = instances.iter().filter(|i| i.relation == name).collect();
            let fail = of_kind.iter().filter(|i| !i.holds).map(|i| i.label.clone()).collect();
            Check::all_hold(name, of_kind.len(), fail)
        })
        .collect()
}

fn factorial(r: usize) -> usize {
    (1..=r).product()
}

fn basis_count_checks(r: usize) -> Result<Vec<Check>> {
    Ok(vec![
        Check::equal("number of even basis words", factorial(r) / 2, enumerate_even_basis(r)?.len()),
        Check::equal("number of odd basis words", factorial(r) / 2, odd_words(r)?.len()),
    ])
}

fn closure_check(r: usize, seed: u64) -> Result<Check> {
    let words = enumerate_even_basis(r)?.words().to_vec();
    let pairs: Vec<(usize, usize)> = if r <= EXHAUSTIVE_CLOSURE_RANK {
        (0..words.len()).flat_map(|i| (0..words.len()).map(move |j| (i, j))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all: Vec<(usize, usize)> = (0..words.len()).flat_map(|i| (0..words.len()).map(move |j| (i, j))).collect();
        let mut picked: Vec<(usize, usize)> = all.choose_multiple(&mut rng, CLOSURE_SAMPLES).copied().collect();
        picked.sort();
        picked
    };
    let mut fail = Vec::new();
    for &(i, j) in &pairs {
        let mut letters = words[i].letters();
        letters.extend(words[j].letters());
        if !ScaledTPrime::letters(r, &letters)?.odd_support().is_empty() {
            fail.push(format!("T'[{}] * T'[{}]", words[i], words[j]));
        }
    }
    Ok(Check::all_hold("even basis is closed under multiplication", pairs.len(), fail))
}

fn sampled_words(words: &[NormalFormWord], count: usize, seed: u64) -> Vec<NormalFormWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w: Vec<NormalFormWord> = words.choose_multiple(&mut rng, count).cloned().collect();
    w.sort();
    w
}

/// Goldman fixes the X generators and sampled even words, and negates sampled odd words.
fn membership_checks(r: usize, seed: u64) -> Result<Vec<Check>> {
    let mut fail = Vec::new();
    let mut total = 0;
    for i in 1..=r.saturating_sub(2) {
        total += 1;
        if !is_in_alt(&x_generator(r, i)?) {
            fail.push(format!("X{i}"));
        }
    }
    let even = sampled_words(enumerate_even_basis(r)?.words(), MEMBERSHIP_SAMPLES, seed);
    for w in &even {
        total += 1;
        if !is_in_alt(&HeckeElement::tprime_word(r, &w.letters())?) {
            fail.push(format!("T'[{w}]"));
        }
    }
    let fixed = Check::all_hold("Goldman involution fixes X generators and even words", total, fail);

    let odd = sampled_words(&odd_words(r)?, MEMBERSHIP_SAMPLES, seed);
    let mut fail = Vec::new();
    for w in &odd {
        let x = HeckeElement::tprime_word(r, &w.letters())?;
        if x.goldman() != -&x {
            fail.push(format!("T'[{w}]"));
        }
    }
    let negated = Check::all_hold("Goldman involution negates odd words", odd.len(), fail);
    Ok(vec![fixed, negated])
}

/// Relations of the Hecke algebra in both generating sets, the relations of
/// the alternating subalgebra, basis counts, even closure and the
/// crossed-product structure.
pub fn suite_hecke(r: usize, opts: &SuiteOptions) -> Result<SuiteReport> {
    check_rank(r, opts)?;
    let mut rep = opts.report("hecke").param("r", r);
    rep.extend(relation_checks(t_relations(r)?));
    rep.extend(relation_checks(tprime_relations(r)?));
    if r >= 3 {
        rep.extend(relation_checks(b_relations(r)?));
    }
    rep.extend(basis_count_checks(r)?);
    rep.push(closure_check(r, opts.seed)?);
    rep.extend(verify_crossed_product_h(r, opts.seed)?);
    Ok(rep)
}

/// The alternating subalgebra on its own: basis counts, closure, relations
/// of the X generators and membership via the Goldman involution.
pub fn suite_alt(r: usize, opts: &SuiteOptions) -> Result<SuiteReport> {
    check_rank(r, opts)?;
    let mut rep = opts.report("alt").param("r", r);
    rep.extend(basis_count_checks(r)?);
    rep.push(closure_check(r, opts.seed)?);
    if r >= 3 {
        rep.extend(relation_checks(b_relations(r)?));
    } else {
        rep.push(Check::info("X generators", "none for r = 2; the even part is the scalars"));
    }
    rep.extend(membership_checks(r, opts.seed)?);
    Ok(rep)
}

/// Generator matrices on `V^{⊗r}` over a field.
struct Ingredients<F> {
    dim: usize,
    r: usize,
    t: Vec<OperatorMatrix<F>>,
    /// `(q + q^-1) π(T′_i) = 2π(T_i) - (q - q^-1)`. Nonzero scalar multiples
    /// generate the same algebras and have the same (anti)commutants, and
    /// Laurent entries keep the elimination cheap.
    tprime: Vec<OperatorMatrix<F>>,
    /// `(q + q^-1)^2 π(T′_1 T′_{i+1})`.
    x: Vec<OperatorMatrix<F>>,
    rho: Vec<(String, OperatorMatrix<F>)>,
    phi: Option<OperatorMatrix<F>>,
}

impl Ingredients<RationalFunction> {
    fn build(space: &GradedSpace) -> Result<Self> {
        let r = space.r();
        let t = (1..r).map(|i| pi_t(space, i)).collect::<Result<Vec<_>>>()?;
        let two = RationalFunction::from_int(2);
        let shift = OperatorMatrix::scalar(space.dim(), RationalFunction::q_minus_qinv());
        let tprime = t.iter().map(|m| m.scale(&two).sub(&shift)).collect::<Result<Vec<_>>>()?;
        let x = (2..r).map(|i| tprime[0].mul(&tprime[i - 1])).collect::<Result<Vec<_>>>()?;
        let rho = rho_generators(space)?.into_iter().map(|(g, m)| (g.label(), m)).collect();
        let phi = if space.m() == space.n() {
            Some(phi_tensor(space)?)
        } else {
            None
        };
        Ok(Self {
            dim: space.dim(),
            r,
            t,
            tprime,
            x,
            rho,
            phi,
        })
    }

    fn all_matrices(&self) -> Vec<OperatorMatrix<RationalFunction>> {
        let mut out: Vec<_> = self.t.iter().chain(&self.tprime).cloned().collect();
        out.extend(self.rho.iter().map(|(_, m)| m.clone()));
        out.extend(self.phi.clone());
        out
    }

    fn specialize(&self, pt: &SpecializationPoint) -> Result<Ingredients<Rational>> {
        let sp = |v: &[OperatorMatrix<RationalFunction>]| v.iter().map(|m| m.specialize(pt)).collect::<Result<Vec<_>>>();
        Ok(Ingredients {
            dim: self.dim,
            r: self.r,
            t: sp(&self.t)?,
            tprime: sp(&self.tprime)?,
            x: sp(&self.x)?,
            rho: self
                .rho
                .iter()
                .map(|(l, m)| Ok((l.clone(), m.specialize(pt)?)))
                .collect::<Result<Vec<_>>>()?,
            phi: self.phi.as_ref().map(|p| p.specialize(pt)).transpose()?,
        })
    }
}

impl<F: Field> Ingredients<F> {
    fn rho_matrices(&self) -> Vec<OperatorMatrix<F>> {
        self.rho.iter().map(|(_, m)| m.clone()).collect()
    }
}

/// Product of generator matrices along `word` (indices from 0).
fn word_matrix<F: Field>(gens: &[OperatorMatrix<F>], dim: usize, word: &[usize]) -> Result<OperatorMatrix<F>> {
    word.iter()
        .try_fold(OperatorMatrix::identity(dim), |acc, &i| acc.mul(&gens[i]))
}

fn word_family(gens: &[Matrix], dim: usize, words: &[Vec<usize>]) -> Result<Vec<Matrix>> {
    words.iter().map(|w| word_matrix(gens, dim, w)).collect()
}

fn matrix_witness<F: Field>(label: &str, m: &OperatorMatrix<F>) -> Vec<String> {
    m.entries()
        .take(WITNESS_LIMIT)
        .map(|(i, j, v)| format!("{label}: {i} {j} {v}"))
        .collect()
}

fn span_check<F: Field>(name: &str, left: &AlgebraBasis<F>, right: &AlgebraBasis<F>) -> Check {
    let cmp = span_equal(left, right);
    Check::equal(name, "equal spans".to_string(), describe_spans(&cmp, left.len(), right.len()))
}

fn describe_spans(cmp: &crate::commutant::SpanComparison, l: usize, r: usize) -> String {
    if cmp.equal() {
        return "equal spans".into();
    }
    format!(
        "left (dim {l}) inside right: {}; right (dim {r}) inside left: {}",
        cmp.left_in_right, cmp.right_in_left
    )
}

fn is_scalar<F: Field>(m: &OperatorMatrix<F>, c: F) -> Result<bool> {
    Ok(m.sub(&OperatorMatrix::scalar(m.dim(), c))?.is_zero())
}

/// Checks plus the dimensions they observed, keyed by algebra name.
struct Outcome {
    checks: Vec<Check>,
    dims: Vec<(&'static str, usize)>,
    /// Generator words of the closure bases, keyed like `dims`.
    words: Vec<(&'static str, Vec<Vec<usize>>)>,
}

impl Outcome {
    fn dim(&self, key: &str) -> Option<usize> {
        self.dims.iter().find(|(k, _)| *k == key).map(|(_, d)| *d)
    }

    fn words(&self, key: &str) -> &[Vec<usize>] {
        self.words
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, w)| w.as_slice())
            .unwrap_or(&[])
    }

    fn same_as(&self, other: &Self) -> bool {
        self.dims == other.dims
            && self.checks.len() == other.checks.len()
            && self
                .checks
                .iter()
                .zip(&other.checks)
                .all(|(a, b)| a.name == b.name && a.status == b.status && a.actual == b.actual)
    }
}

/// Runs `body` exactly, or at each specialization point with exact
/// arbitration when the points disagree.
fn run_in_mode(
    ing: &Ingredients<RationalFunction>,
    mode: RankMode,
    points: &[SpecializationPoint],
    exact: impl Fn(&Ingredients<RationalFunction>) -> Result<Outcome>,
    special: impl Fn(&Ingredients<Rational>) -> Result<Outcome>,
) -> Result<Outcome> {
    if mode == RankMode::Exact {
        return exact(ing);
    }
    let runs = points
        .iter()
        .map(|t| special(&ing.specialize(t)?))
        .collect::<Result<Vec<_>>>()?;
    let agree = runs.windows(2).all(|w| w[0].same_as(&w[1]));
    let labels: Vec<String> = points.iter().map(|t| t.to_string()).collect();
    if agree {
        let mut out = runs.into_iter().next().expect("at least one point");
        out.checks.push(Check::info(
            "specialized runs agree",
            format!("q = {}", labels.join(", ")),
        ));
        Ok(out)
    } else {
        let mut out = exact(ing)?;
        out.checks.push(Check::info(
            "specialized runs disagree; exact arbitration used",
            format!("q = {}", labels.join(", ")),
        ));
        Ok(out)
    }
}

fn rank_certificate_check(name: &str, family: &[OperatorMatrix<RationalFunction>], expected: usize, mode: RankMode, points: &[SpecializationPoint]) -> Check {
    match rank_with_certificate(family, mode, &PointSource::Explicit(points.to_vec())) {
        Ok(cert) => Check::equal(name, expected, cert.rank),
        Err(e) => Check::error(name, e),
    }
}

fn commutation_check<F: Field>(ing: &Ingredients<F>) -> Result<Check> {
    let mut fail = Vec::new();
    let mut witness = Vec::new();
    let mut total = 0;
    for (i, t) in ing.t.iter().enumerate() {
        for (label, x) in &ing.rho {
            total += 1;
            let c = t.commutator(x)?;
            if !c.is_zero() {
                let l = format!("[T{}, {label}]", i + 1);
                witness.extend(matrix_witness(&l, &c));
                fail.push(l);
            }
        }
    }
    let mut c = Check::all_hold("Hecke generators commute with superalgebra generators", total, fail);
    if !witness.is_empty() {
        c = c.with_witness(witness);
    }
    Ok(c)
}

fn schur_weyl_body<F: Field>(ing: &Ingredients<F>, predicted_a: usize) -> Result<Outcome> {
    let dim = ing.dim;
    let mut checks = vec![commutation_check(ing)?];
    let rho = ing.rho_matrices();
    let (a, a_words) = span_closure_with_words(dim, &ing.t)?;
    let b = span_closure(dim, &rho)?;
    let ca = commutant_basis(dim, &ing.t)?;
    let cb = commutant_basis(dim, &rho)?;
    checks.push(span_check("commutant of the Hecke image equals the superalgebra image", &ca, &b));
    checks.push(span_check("commutant of the superalgebra image equals the Hecke image", &cb, &a));
    checks.push(Check::equal("dimension of the Hecke image matches the hook formula", predicted_a, a.len()));
    checks.push(Check::info("dimension of the superalgebra image", b.len()));
    Ok(Outcome {
        checks,
        dims: vec![("A", a.len()), ("B", b.len())],
        words: vec![("A", a_words)],
    })
}

fn points_for(ing: &Ingredients<RationalFunction>, opts: &SuiteOptions) -> Result<Vec<SpecializationPoint>> {
    choose_points(&ing.all_matrices(), &opts.point_source(), 2)
}

fn join_points(points: &[SpecializationPoint]) -> String {
    points.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
}

/// The Hecke image and the superalgebra image are each other's commutants,
/// and the Hecke image has the dimension predicted by the hook shapes.
pub fn suite_schur_weyl(m: usize, n: usize, r: usize, opts: &SuiteOptions) -> Result<SuiteReport> {
    let space = check_space(m, n, r, opts)?;
    let ing = Ingredients::build(&space)?;
    let points = points_for(&ing, opts)?;
    let predicted_a: u128 = hook_classify(m, n, r)?.hooks.iter().map(|l| d_lambda(l).pow(2)).sum();
    let predicted_a = predicted_a as usize;
    let out = run_in_mode(
        &ing,
        opts.mode,
        &points,
        |i| schur_weyl_body(i, predicted_a),
        |i| schur_weyl_body(i, predicted_a),
    )?;
    let mut rep = opts
        .report("schur-weyl")
        .param("m", m)
        .param("n", n)
        .param("r", r)
        .param("points", join_points(&points));
    rep.extend(out.checks.iter().cloned());
    if let Some(a) = out.dim("A") {
        rep.push(rank_certificate_check(
            "rank certificate of the Hecke image",
            &word_family(&ing.t, ing.dim, out.words("A"))?,
            a,
            opts.mode,
            &points,
        ));
    }
    Ok(rep)
}

/// `ψ(-1) = ω`, `α(-1,-1) = (-1)^{r(r-1)/2}` and `u_{-1} ↦ φ^{⊗r}` over the
/// commutant of the Hecke image.
struct MatrixCrossedSystem<'a, F> {
    phi: OperatorMatrix<F>,
    sign: F,
    base: &'a AlgebraBasis<F>,
}

impl<F: Field> MatrixCrossedSystem<'_, F> {
    fn omega(&self, a: &OperatorMatrix<F>) -> OperatorMatrix<F> {
        self.phi
            .mul(a)
            .and_then(|x| x.mul(&self.phi))
            .expect("same dimension")
            .scale(&self.sign)
    }
}

impl<F: Field> CrossedSystem for MatrixCrossedSystem<'_, F> {
    type Elem = OperatorMatrix<F>;

    fn one(&self) -> OperatorMatrix<F> {
        OperatorMatrix::identity(self.phi.dim())
    }

    fn mul(&self, a: &OperatorMatrix<F>, b: &OperatorMatrix<F>) -> OperatorMatrix<F> {
        a.mul(b).expect("same dimension")
    }

    fn equal(&self, a: &OperatorMatrix<F>, b: &OperatorMatrix<F>) -> bool {
        a.sub(b).map(|d| d.is_zero()).unwrap_or(false)
    }

    fn in_base(&self, a: &OperatorMatrix<F>) -> bool {
        self.base.contains(a)
    }

    fn psi(&self, s: Z2, a: &OperatorMatrix<F>) -> OperatorMatrix<F> {
        match s {
            Z2::One => a.clone(),
            Z2::MinusOne => self.omega(a),
        }
    }

    fn alpha(&self, s: Z2, t: Z2) -> OperatorMatrix<F> {
        if s == Z2::MinusOne && t == Z2::MinusOne {
            OperatorMatrix::scalar(self.phi.dim(), self.sign.clone())
        } else {
            self.one()
        }
    }

    // the sign squares to one
    fn alpha_inverse(&self, s: Z2, t: Z2) -> OperatorMatrix<F> {
        self.alpha(s, t)
    }

    fn unit(&self, s: Z2) -> OperatorMatrix<F> {
        match s {
            Z2::One => self.one(),
            Z2::MinusOne => self.phi.clone(),
        }
    }
}

/// The equal-grading structure: `D = B ⊕ φB` as a crossed product over `B`.
fn equal_grading_checks<F: Field>(ing: &Ingredients<F>, d: &AlgebraBasis<F>, seed: u64) -> Result<Vec<Check>> {
    let dim = ing.dim;
    let phi = ing.phi.clone().expect("m = n");
    let sign = F::from_int(phi_square_sign(ing.r));
    let mut checks = Vec::new();

    let sq = phi.mul(&phi)?;
    checks.push(Check::equal(
        "phi tensor power squares to the sign",
        true,
        is_scalar(&sq, sign.clone())?,
    ));

    let mut fail = Vec::new();
    let mut witness = Vec::new();
    for (i, tp) in ing.tprime.iter().enumerate() {
        let ac = phi.anticommutator(tp)?;
        if !ac.is_zero() {
            let l = format!("{{phi, T'{}}}", i + 1);
            witness.extend(matrix_witness(&l, &ac));
            fail.push(l);
        }
    }
    checks.push(Check::all_hold("phi anticommutes with every T'", ing.tprime.len(), fail).with_witness(witness));

    let b = commutant_basis(dim, &ing.tprime)?;
    let bdag = anticommutant_basis(dim, &ing.tprime)?;
    checks.push(Check::equal("anticommutant has the dimension of the commutant", b.len(), bdag.len()));

    let phi_b: Vec<OperatorMatrix<F>> = b.elements().iter().map(|x| phi.mul(x)).collect::<Result<_>>()?;
    let fail = phi_b
        .iter()
        .enumerate()
        .filter(|(_, x)| !bdag.contains(x))
        .map(|(k, _)| format!("basis element {k}"))
        .collect();
    checks.push(Check::all_hold("phi maps the commutant into the anticommutant", b.len(), fail));

    let phib = AlgebraBasis::spanned_by(dim, &phi_b)?;
    checks.push(Check::equal(
        "alternating commutant is the commutant plus its phi translate",
        true,
        direct_sum_check(d, &b, &phib)?,
    ));
    checks.push(Check::equal(
        "alternating commutant has twice the dimension of the commutant",
        2 * b.len(),
        d.len(),
    ));

    let sys = MatrixCrossedSystem {
        phi: phi.clone(),
        sign,
        base: &b,
    };
    let mut preserve = Vec::new();
    let mut involution = Vec::new();
    for (k, x) in b.elements().iter().enumerate() {
        let w = sys.omega(x);
        if !b.contains(&w) {
            preserve.push(format!("basis element {k}"));
        }
        if !sys.equal(&sys.omega(&w), x) {
            involution.push(format!("basis element {k}"));
        }
    }
    checks.push(Check::all_hold("omega preserves the commutant", b.len(), preserve));
    checks.push(Check::all_hold("omega squares to the identity on the commutant", b.len(), involution));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idx: Vec<usize> = (0..b.len()).collect::<Vec<_>>().choose_multiple(&mut rng, MATRIX_CROSSED_SAMPLES).copied().collect();
    idx.sort_unstable();
    let samples: Vec<(String, OperatorMatrix<F>)> = idx
        .iter()
        .map(|&k| (format!("commutant basis element {k}"), b.elements()[k].clone()))
        .collect();
    let n = samples.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    checks.extend(crossed_system_checks(&sys, &samples, &pairs));
    Ok(checks)
}

fn alt_centralizer_body<F: Field>(ing: &Ingredients<F>, m: usize, n: usize, seed: u64) -> Result<Outcome> {
    let dim = ing.dim;
    let report = predicted_dimensions(m, n, ing.r)?;
    let mut checks = Vec::new();
    let (c, c_words) = span_closure_with_words(dim, &ing.x)?;
    let d = commutant_basis(dim, &ing.x)?;
    let (a, a_words) = span_closure_with_words(dim, &ing.t)?;
    checks.push(Check::equal(
        "dimension of the alternating image matches the hook formula",
        report.dim_c as usize,
        c.len(),
    ));
    checks.push(Check::equal(
        "dimension of the Hecke image matches the hook formula",
        report.dim_a as usize,
        a.len(),
    ));
    checks.push(Check::equal("predicted dimensions satisfy the pairing identities", true, report.consistent()));
    checks.push(Check::equal(
        "Hecke image exceeds the alternating image by the paired part",
        report.dim_c0 as usize,
        a.len().saturating_sub(c.len()),
    ));
    checks.push(Check::equal("alternating image lies in the Hecke image", true, c.is_subspace_of(&a)));
    let dd = commutant_basis(dim, d.elements())?;
    checks.push(span_check(
        "commutant of the alternating commutant equals the alternating image",
        &dd,
        &c,
    ));
    if m == n {
        checks.extend(equal_grading_checks(ing, &d, seed)?);
    } else {
        checks.push(Check::info("dimension of the alternating commutant", d.len()));
        let b = commutant_basis(dim, &ing.t)?;
        checks.push(Check::info("dimension of the commutant of the Hecke image", b.len()));
    }
    if n == 0 && m * m < ing.r {
        checks.push(span_check("Hecke image equals the alternating image", &a, &c));
    }
    Ok(Outcome {
        checks,
        dims: vec![("A", a.len()), ("C", c.len()), ("D", d.len())],
        words: vec![("A", a_words), ("C", c_words)],
    })
}

/// The alternating image `C` (generated by `π(T′_1 T′_{i+1})`) and its
/// commutant `D`: double commutant, predicted dimensions, and for `m = n`
/// the crossed-product structure of `D` over the commutant of the Hecke image.
pub fn suite_alt_centralizer(m: usize, n: usize, r: usize, opts: &SuiteOptions) -> Result<SuiteReport> {
    let space = check_space(m, n, r, opts)?;
    if r < 2 {
        return Err(Error::InvalidRank {
            rank: r,
            reason: "the alternating image needs r >= 2",
        });
    }
    let ing = Ingredients::build(&space)?;
    let points = points_for(&ing, opts)?;
    let seed = opts.seed;
    let out = run_in_mode(
        &ing,
        opts.mode,
        &points,
        |i| alt_centralizer_body(i, m, n, seed),
        |i| alt_centralizer_body(i, m, n, seed),
    )?;
    let report = predicted_dimensions(m, n, r)?;
    let mut rep = opts
        .report("alt-centralizer")
        .param("m", m)
        .param("n", n)
        .param("r", r)
        .param("points", join_points(&points));
    rep.extend(out.checks.iter().cloned());
    for (name, value) in [
        ("predicted dimension A0", report.dim_a0),
        ("predicted dimension A1", report.dim_a1),
        ("predicted dimension C0", report.dim_c0),
        ("predicted dimension C1", report.dim_c1),
    ] {
        rep.push(Check::info(name, value));
    }
    if let Some(c) = out.dim("C") {
        rep.push(rank_certificate_check(
            "rank certificate of the alternating image",
            &word_family(&ing.x, ing.dim, out.words("C"))?,
            c,
            opts.mode,
            &points,
        ));
    }
    if let Some(a) = out.dim("A") {
        rep.push(rank_certificate_check(
            "rank certificate of the Hecke image",
            &word_family(&ing.t, ing.dim, out.words("A"))?,
            a,
            opts.mode,
            &points,
        ));
    }
    Ok(rep)
}

/// Specialized images against generic ones, and the classical limit `q = 1`.
pub fn suite_specialization(m: usize, n: usize, r: usize, opts: &SuiteOptions) -> Result<SuiteReport> {
    let space = check_space(m, n, r, opts)?;
    if r < 2 {
        return Err(Error::InvalidRank {
            rank: r,
            reason: "specialization checks need r >= 2",
        });
    }
    let ing = Ingredients::build(&space)?;
    let points = points_for(&ing, opts)?;
    let dim = space.dim();
    let mut rep = opts
        .report("specialize")
        .param("m", m)
        .param("n", n)
        .param("r", r)
        .param("points", join_points(&points));

    let one = SpecializationPoint::one();
    let classical = ing.specialize(&one)?;
    let mut fail = Vec::new();
    let mut witness = Vec::new();
    for (k, t) in classical.t.iter().enumerate() {
        let diff = t.sub(&sign_permutation(&space, k + 1)?)?;
        if !diff.is_zero() {
            let l = format!("T{}", k + 1);
            witness.extend(matrix_witness(&l, &diff));
            fail.push(l);
        }
    }
    rep.push(
        Check::all_hold("T generators at q=1 are signed permutations", classical.t.len(), fail).with_witness(witness),
    );
    let mut fail = Vec::new();
    for (k, t) in classical.t.iter().enumerate() {
        if !is_scalar(&t.mul(t)?, Rational::from_integer(1.into()))? {
            fail.push(format!("T{}", k + 1));
        }
    }
    rep.push(Check::all_hold("T generators at q=1 square to one", classical.t.len(), fail));

    let (a, a_words) = span_closure_with_words(dim, &ing.t)?;
    let (c, c_words) = span_closure_with_words(dim, &ing.x)?;
    let (generic_a, generic_c) = (a.len(), c.len());
    rep.push(Check::info("generic dimension of the Hecke image", generic_a));
    rep.push(Check::info("generic dimension of the alternating image", generic_c));
    for t in &points {
        let sp = ing.specialize(t)?;
        rep.push(Check::equal(
            format!("dimension of the Hecke image at q={t}"),
            generic_a,
            span_closure(dim, &sp.t)?.len(),
        ));
        rep.push(Check::equal(
            format!("dimension of the alternating image at q={t}"),
            generic_c,
            span_closure(dim, &sp.x)?.len(),
        ));
    }
    // q = 1 is not generic, so a drop there is only reported.
    rep.push(Check::info(
        "dimension of the Hecke image at q=1",
        span_closure(dim, &classical.t)?.len(),
    ));
    rep.push(Check::info(
        "dimension of the alternating image at q=1",
        span_closure(dim, &classical.x)?.len(),
    ));
    rep.push(rank_certificate_check(
        "rank certificate of the Hecke image",
        &word_family(&ing.t, dim, &a_words)?,
        generic_a,
        opts.mode,
        &points,
    ));
    rep.push(rank_certificate_check(
        "rank certificate of the alternating image",
        &word_family(&ing.x, dim, &c_words)?,
        generic_c,
        opts.mode,
        &points,
    ));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_pass(rep: &SuiteReport) {
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn scaled_tprime_is_a_multiple_of_tprime() {
        let space = GradedSpace::new(1, 1, 3).unwrap();
        let ing = Ingredients::build(&space).unwrap();
        for i in 1..3 {
            let expected = crate::tensor::pi_tprime(&space, i)
                .unwrap()
                .scale(&RationalFunction::q_plus_qinv());
            assert!(ing.tprime[i - 1].sub(&expected).unwrap().is_zero());
        }
    }

    #[test]
    fn hecke_small_ranks() {
        for r in 2..=4 {
            let rep = suite_hecke(r, &SuiteOptions::default()).unwrap();
            assert_pass(&rep);
            assert_eq!(rep.check("number of even basis words").unwrap().actual, (factorial(r) / 2).to_string());
        }
        assert!(matches!(
            suite_hecke(7, &SuiteOptions::default()),
            Err(Error::SizeBound { required: 7, bound: 6 })
        ));
    }

    #[test]
    fn alt_small_ranks() {
        for r in 2..=4 {
            assert_pass(&suite_alt(r, &SuiteOptions::default()).unwrap());
        }
    }

    #[test]
    fn schur_weyl_examples() {
        let rep = suite_schur_weyl(1, 1, 2, &SuiteOptions::exact()).unwrap();
        assert_pass(&rep);
        assert_eq!(rep.check("dimension of the Hecke image matches the hook formula").unwrap().actual, "2");
        assert_eq!(rep.check("dimension of the superalgebra image").unwrap().actual, "8");
        let rep = suite_schur_weyl(1, 0, 2, &SuiteOptions::default()).unwrap();
        assert_pass(&rep);
        assert_eq!(rep.check("dimension of the Hecke image matches the hook formula").unwrap().actual, "1");
    }

    #[test]
    fn alt_centralizer_equal_grading() {
        let rep = suite_alt_centralizer(1, 1, 2, &SuiteOptions::exact()).unwrap();
        assert_pass(&rep);
        assert_eq!(rep.check("alternating commutant has twice the dimension of the commutant").unwrap().actual, "16");
        assert!(rep.check("multiplication law u_-1 * u_-1").is_some());
    }

    #[test]
    fn alt_centralizer_general_case() {
        let rep = suite_alt_centralizer(2, 0, 3, &SuiteOptions::exact()).unwrap();
        assert_pass(&rep);
        assert_eq!(rep.check("dimension of the alternating image matches the hook formula").unwrap().actual, "3");
        assert_eq!(rep.check("predicted dimension A0").unwrap().actual, "4");
    }

    #[test]
    fn specialization_small() {
        assert_pass(&suite_specialization(1, 1, 3, &SuiteOptions::default()).unwrap());
    }

    #[test]
    fn size_bounds_are_enforced() {
        let err = suite_schur_weyl(2, 2, 4, &SuiteOptions::exact()).unwrap_err();
        assert!(matches!(err, Error::SizeBound { required: 256, bound: 64 }));
        let opts = SuiteOptions {
            bound: Some(4),
            ..SuiteOptions::default()
        };
        assert!(suite_alt_centralizer(1, 1, 3, &opts).is_err());
    }

    #[test]
    fn specialized_mode_matches_exact() {
        let ex = suite_alt_centralizer(1, 1, 2, &SuiteOptions::exact()).unwrap();
        let sp = suite_alt_centralizer(1, 1, 2, &SuiteOptions::default()).unwrap();
        assert!(sp.check("specialized runs agree").is_some());
        for c in &ex.checks {
            if let Some(s) = sp.check(&c.name) {
                assert_eq!(c.actual, s.actual, "{}", c.name);
            }
        }
    }
}
