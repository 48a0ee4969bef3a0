//! The q-analogue `H¹` of the alternating group: the +1 eigenspace of the
//! Goldman involution, spanned by products of an even number of `T′_i`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::crossed::{crossed_system_checks, CrossedSystem, Z2};
use crate::error::{Error, Result};
use crate::hecke::relations::{correction_coefficient, RelationInstance};
use crate::hecke::{HeckeElement, NormalFormWord, ScaledTPrime};
use crate::linalg::{self, SparseVec};
use crate::qfield::RationalFunction;
use crate::report::Check;

/// The T′ normal-form words of even length, a basis of `H¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenBasis {
    rank: usize,
    words: Vec<NormalFormWord>,
}

impl EvenBasis {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn words(&self) -> &[NormalFormWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn check_alt_rank(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidRank {
            rank: r,
            reason: "the alternating subalgebra needs rank at least 2",
        });
    }
    Ok(())
}

pub fn enumerate_even_basis(r: usize) -> Result<EvenBasis> {
    check_alt_rank(r)?;
    let words = NormalFormWord::all(r)?.into_iter().filter(|w| w.is_even()).collect();
    Ok(EvenBasis { rank: r, words })
}

pub fn odd_words(r: usize) -> Result<Vec<NormalFormWord>> {
    check_alt_rank(r)?;
    Ok(NormalFormWord::all(r)?.into_iter().filter(|w| !w.is_even()).collect())
}

/// Membership in `H¹`, decided by the Goldman involution.
pub fn is_in_alt(x: &HeckeElement) -> bool {
    x.goldman() == *x
}

/// `X_i = T′_1 T′_{i+1}` for `1 <= i <= r - 2`.
pub fn x_generator(r: usize, i: usize) -> Result<HeckeElement> {
    if r < 3 || i == 0 || i > r - 2 {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: r.saturating_sub(2),
        });
    }
    HeckeElement::tprime_word(r, &[1, i + 1])
}

pub const X_CUBIC: &str = "X1 cubic relation";
pub const X_INVOLUTION: &str = "X squares to one";
pub const X_PAIR_CUBIC: &str = "adjacent X pair cubic relation";
pub const X_FAR_PAIR: &str = "far X pair squares to one";

fn letters_of_x(xs: &[usize]) -> Vec<usize> {
    xs.iter().flat_map(|&i| [1, i + 1]).collect()
}

/// Checks `y^3 = -c^2 (y^2 - y) + 1` where `y` is the product of the listed X's.
fn cubic_holds(r: usize, xs: &[usize]) -> Result<bool> {
    let y = letters_of_x(xs);
    let pow = |k: usize| HeckeElement::tprime_word(r, &y.repeat(k));
    let (y1, y2) = (pow(1)?, pow(2)?);
    let rhs = y2
        .subtract(&y1)?
        .scale(&-correction_coefficient())
        .add(&HeckeElement::one(r)?)?;
    Ok(pow(3)? == rhs)
}

/// Instances of the four defining relations of `H¹` in the X generators.
pub fn b_relations(r: usize) -> Result<Vec<RelationInstance>> {
    check_alt_rank(r)?;
    let mut out = Vec::new();
    if r < 3 {
        return Ok(out);
    }
    let one = HeckeElement::one(r)?;
    let squares_to_one = |xs: &[usize]| -> Result<bool> {
        Ok(HeckeElement::tprime_word(r, &letters_of_x(&xs.repeat(2)))? == one)
    };
    out.push(RelationInstance::new(X_CUBIC, "i=1".into(), cubic_holds(r, &[1])?));
    for i in 2..=r - 2 {
        out.push(RelationInstance::new(X_INVOLUTION, format!("i={i}"), squares_to_one(&[i])?));
    }
    for i in 2..=r - 2 {
        out.push(RelationInstance::new(
            X_PAIR_CUBIC,
            format!("i={i}"),
            cubic_holds(r, &[i - 1, i])?,
        ));
    }
    for i in 1..=r - 2 {
        for j in i + 2..=r - 2 {
            out.push(RelationInstance::new(
                X_FAR_PAIR,
                format!("i={i} j={j}"),
                squares_to_one(&[i, j])?,
            ));
        }
    }
    Ok(out)
}

/// Pairs of even basis words whose product has odd support. Empty iff the
/// even span is closed under multiplication.
pub fn even_closure_failures(r: usize) -> Result<Vec<(NormalFormWord, NormalFormWord)>> {
    let basis = enumerate_even_basis(r)?;
    let mut bad = Vec::new();
    for a in basis.words() {
        for b in basis.words() {
            let mut letters = a.letters();
            letters.extend(b.letters());
            if !ScaledTPrime::letters(r, &letters)?.odd_support().is_empty() {
                bad.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(bad)
}

fn tprime_coords(x: &ScaledTPrime) -> SparseVec<RationalFunction> {
    let mut v: SparseVec<RationalFunction> = x
        .to_tprime_expansion()
        .terms()
        .map(|(w, c)| (w.index(), c.clone()))
        .collect();
    v.sort_by_key(|(k, _)| *k);
    v
}

/// Ranks of the even part `H¹` and of `H¹ T′_1` in T′ coordinates, and
/// whether every `T′_w T′_1` (w even) is odd-supported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub even_rank: usize,
    pub odd_rank: usize,
    pub total_rank: usize,
    pub odd_part_is_odd: bool,
}

pub fn decomposition(r: usize) -> Result<Decomposition> {
    let basis = enumerate_even_basis(r)?;
    let n: usize = (1..=r).product();
    let even: Vec<ScaledTPrime> = basis.words().iter().map(ScaledTPrime::word).collect::<Result<_>>()?;
    let t1 = ScaledTPrime::letters(r, &[1])?;
    let odd: Vec<ScaledTPrime> = even.iter().map(|x| x.multiply(&t1)).collect::<Result<_>>()?;
    let ev: Vec<_> = even.iter().map(tprime_coords).collect();
    let od: Vec<_> = odd.iter().map(tprime_coords).collect();
    let all: Vec<_> = ev.iter().chain(&od).cloned().collect();
    Ok(Decomposition {
        even_rank: linalg::rank(n, &ev),
        odd_rank: linalg::rank(n, &od),
        total_rank: linalg::rank(n, &all),
        odd_part_is_odd: odd.iter().all(|x| x.even_support().is_empty()),
    })
}

/// `H = H¹ ⊕ H¹ T′_1` as the crossed product with `ψ(-1)(a) = T′_1 a T′_1`,
/// trivial cocycle and `u_{-1} ↦ T′_1`.
pub struct HeckeCrossedSystem {
    rank: usize,
    t1: ScaledTPrime,
}

impl HeckeCrossedSystem {
    pub fn new(r: usize) -> Result<Self> {
        check_alt_rank(r)?;
        Ok(Self {
            rank: r,
            t1: ScaledTPrime::letters(r, &[1])?,
        })
    }
}

impl CrossedSystem for HeckeCrossedSystem {
    type Elem = ScaledTPrime;

    fn one(&self) -> ScaledTPrime {
        ScaledTPrime::one(self.rank).expect("valid rank")
    }

    fn mul(&self, a: &ScaledTPrime, b: &ScaledTPrime) -> ScaledTPrime {
        a.multiply(b).expect("same rank")
    }

    fn equal(&self, a: &ScaledTPrime, b: &ScaledTPrime) -> bool {
        a.equals(b)
    }

    fn in_base(&self, a: &ScaledTPrime) -> bool {
        a.odd_support().is_empty()
    }

    fn psi(&self, s: Z2, a: &ScaledTPrime) -> ScaledTPrime {
        match s {
            Z2::One => a.clone(),
            Z2::MinusOne => self.mul(&self.mul(&self.t1, a), &self.t1),
        }
    }

    fn alpha(&self, _: Z2, _: Z2) -> ScaledTPrime {
        self.one()
    }

    fn alpha_inverse(&self, _: Z2, _: Z2) -> ScaledTPrime {
        self.one()
    }

    fn unit(&self, s: Z2) -> ScaledTPrime {
        match s {
            Z2::One => self.one(),
            Z2::MinusOne => self.t1.clone(),
        }
    }
}

/// Ranks up to this value check the crossed-product laws on every pair of
/// even basis words; larger ranks use seeded samples.
pub const EXHAUSTIVE_CROSSED_RANK: usize = 4;
const SAMPLED_WORDS: usize = 6;

/// Checks the decomposition `H = H¹ ⊕ H¹ T′_1` and the crossed-product laws.
pub fn verify_crossed_product_h(r: usize, seed: u64) -> Result<Vec<Check>> {
    let basis = enumerate_even_basis(r)?;
    let half = basis.len();
    let mut checks = Vec::new();

    let d = decomposition(r)?;
    checks.push(Check::equal("dimension of even part", half, d.even_rank));
    checks.push(Check::equal("dimension of even part times T'1", half, d.odd_rank));
    checks.push(Check::equal(
        "even part and its T'1 translate span the algebra",
        2 * half,
        d.total_rank,
    ));
    checks.push(Check::equal("even part times T'1 is odd-supported", true, d.odd_part_is_odd));

    let words: Vec<NormalFormWord> = if r <= EXHAUSTIVE_CROSSED_RANK {
        basis.words().to_vec()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut w: Vec<NormalFormWord> = basis
            .words()
            .choose_multiple(&mut rng, SAMPLED_WORDS)
            .cloned()
            .collect();
        w.sort();
        w
    };
    let samples: Vec<(String, ScaledTPrime)> = words
        .iter()
        .map(|w| Ok((format!("T'[{w}]"), ScaledTPrime::word(w)?)))
        .collect::<Result<_>>()?;
    let n = samples.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let sys = HeckeCrossedSystem::new(r)?;
    checks.extend(crossed_system_checks(&sys, &samples, &pairs));
    Ok(checks)
}
