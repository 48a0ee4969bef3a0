use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use super::table::{q_plus_qinv, table, Coefficient, RankTable, Side};
use super::{check_generator, check_rank, NormalFormWord};
use crate::error::{Error, Result};
use crate::qfield::{LaurentPolynomial, Rational, RationalFunction};

/// An element of `H_{K,r}(q)` in the T normal-form basis.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    rank: usize,
    coeffs: BTreeMap<NormalFormWord, RationalFunction>,
}

/// Coordinates of an element in the T′ normal-form basis.
#[derive(Clone, PartialEq, Eq)]
pub struct TPrimeExpansion {
    rank: usize,
    coeffs: BTreeMap<NormalFormWord, RationalFunction>,
}

fn from_dense(r: usize, tab: &RankTable, dense: Vec<RationalFunction>) -> BTreeMap<NormalFormWord, RationalFunction> {
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            debug_assert_eq!(tab.words[k].rank(), r);
            (tab.words[k].clone(), c)
        })
        .collect()
}

fn dense_of(tab: &RankTable, coeffs: &BTreeMap<NormalFormWord, RationalFunction>) -> Vec<RationalFunction> {
    let mut d = vec![RationalFunction::zero(); tab.size()];
    for (w, c) in coeffs {
        d[w.index()] = c.clone();
    }
    d
}

fn same_rank(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RankMismatch { left: a, right: b })
    }
}

impl HeckeElement {
    pub fn zero(r: usize) -> Result<Self> {
        check_rank(r)?;
        Ok(Self {
            rank: r,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn one(r: usize) -> Result<Self> {
        Self::basis(NormalFormWord::identity(r))
    }

    pub fn basis(w: NormalFormWord) -> Result<Self> {
        Self::from_terms(w.rank(), [(w, RationalFunction::one())])
    }

    pub fn from_terms<I>(r: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NormalFormWord, RationalFunction)>,
    {
        check_rank(r)?;
        let mut coeffs: BTreeMap<NormalFormWord, RationalFunction> = BTreeMap::new();
        for (w, c) in terms {
            same_rank(r, w.rank())?;
            let entry = coeffs.entry(w).or_insert_with(RationalFunction::zero);
            *entry = &*entry + &c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(Self { rank: r, coeffs })
    }

    pub fn scalar(r: usize, c: RationalFunction) -> Result<Self> {
        Self::from_terms(r, [(NormalFormWord::identity(r), c)])
    }

    /// The generator `T_i`.
    pub fn generator(r: usize, i: usize) -> Result<Self> {
        check_generator(r, i)?;
        let mut d = vec![0u8; r - 1];
        d[i - 1] = 1;
        Self::basis(NormalFormWord::new(d)?)
    }

    /// `T′_i = (2 T_i - (q - q^-1)) / (q + q^-1)`.
    pub fn tprime(r: usize, i: usize) -> Result<Self> {
        let t = Self::generator(r, i)?;
        let a = RationalFunction::q_minus_qinv();
        let b_inv = RationalFunction::q_plus_qinv().inverse()?;
        let two_t = t.scale(&RationalFunction::from_int(2));
        Ok((&two_t - &Self::scalar(r, a)?).scale(&b_inv))
    }

    /// Product of generators `T_{g_1} ... T_{g_k}`.
    pub fn t_word(r: usize, letters: &[usize]) -> Result<Self> {
        let mut x = Self::one(r)?;
        for &g in letters {
            x = x.multiply(&Self::generator(r, g)?)?;
        }
        Ok(x)
    }

    /// Product of generators `T′_{g_1} ... T′_{g_k}`.
    pub fn tprime_word(r: usize, letters: &[usize]) -> Result<Self> {
        let mut x = Self::one(r)?;
        for &g in letters {
            x = x.multiply(&Self::tprime(r, g)?)?;
        }
        Ok(x)
    }

    /// A random element with up to `terms` nonzero coefficients of the form
    /// `a q + b + c q^-1` with small integers.
    pub fn random<R: Rng>(r: usize, terms: usize, rng: &mut R) -> Result<Self> {
        let words = NormalFormWord::all(r)?;
        let picks = (0..terms).map(|_| {
            let w = words[rng.gen_range(0..words.len())].clone();
            let c = LaurentPolynomial::from_terms((-1..=1).map(|e| {
                (e, Rational::from_integer(rng.gen_range(-3i64..=3).into()))
            }));
            (w, RationalFunction::from_laurent(c))
        });
        Self::from_terms(r, picks.collect::<Vec<_>>())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalFormWord, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, w: &NormalFormWord) -> RationalFunction {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self {
                rank: self.rank,
                coeffs: BTreeMap::new(),
            };
        }
        Self {
            rank: self.rank,
            coeffs: self.coeffs.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_rank(self.rank, other.rank)?;
        let mut coeffs = self.coeffs.clone();
        for (w, c) in &other.coeffs {
            let entry = coeffs.entry(w.clone()).or_insert_with(RationalFunction::zero);
            *entry = &*entry + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(Self {
            rank: self.rank,
            coeffs,
        })
    }

    pub fn subtract(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&RationalFunction::from_int(-1)))
    }

    /// Exact product, re-expanded in the normal-form basis. Each basis word
    /// of `self` acts on `other` letter by letter through the length rule.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        same_rank(self.rank, other.rank)?;
        let tab = table(self.rank)?;
        let y = dense_of(&tab, &other.coeffs);
        let one = RationalFunction::one();
        let zero = RationalFunction::zero();
        let mut acc = vec![RationalFunction::zero(); tab.size()];
        for (w, c) in &self.coeffs {
            let mut z = y.clone();
            for g in w.letters().into_iter().rev() {
                z = tab.apply_letter(Side::Left, g, &one, &zero, &z);
            }
            for (a, zk) in acc.iter_mut().zip(&z) {
                if !zk.is_zero() {
                    *a = &*a + &(c * zk);
                }
            }
        }
        Ok(Self {
            rank: self.rank,
            coeffs: from_dense(self.rank, &tab, acc),
        })
    }

    /// The algebra involution `T_i ↦ (q - q^-1) - T_i`.
    pub fn goldman(&self) -> Self {
        let tab = table(self.rank).expect("valid rank");
        let images = tab.goldman_images();
        let mut acc = vec![RationalFunction::zero(); tab.size()];
        for (w, c) in &self.coeffs {
            for (j, p) in &images[w.index()] {
                acc[*j] = &acc[*j] + &c.scale_laurent(p);
            }
        }
        Self {
            rank: self.rank,
            coeffs: from_dense(self.rank, &tab, acc),
        }
    }

    /// `(x + sign · goldman(x)) / 2`.
    pub fn goldman_eigenproject(&self, sign: i8) -> Self {
        let g = self.goldman().scale(&RationalFunction::from_int(sign.signum() as i64));
        let half = RationalFunction::from_rational(Rational::new(1.into(), 2.into()));
        self.add(&g).expect("same rank").scale(&half)
    }

    pub fn to_tprime_basis(&self) -> TPrimeExpansion {
        let tab = table(self.rank).expect("valid rank");
        let s = tab.t_to_s(dense_of(&tab, &self.coeffs));
        let b = q_plus_qinv();
        let dense = s
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                let mut c = c;
                for _ in 0..tab.lengths[k] {
                    c = c.scale_laurent(&b);
                }
                c
            })
            .collect();
        TPrimeExpansion {
            rank: self.rank,
            coeffs: from_dense(self.rank, &tab, dense),
        }
    }

    pub fn from_tprime_basis(y: &TPrimeExpansion) -> Self {
        let tab = table(y.rank).expect("valid rank");
        let b_inv = RationalFunction::q_plus_qinv().inverse().expect("nonzero");
        let mut s = dense_of(&tab, &y.coeffs);
        for (k, c) in s.iter_mut().enumerate() {
            for _ in 0..tab.lengths[k] {
                *c = &*c * &b_inv;
            }
        }
        Self {
            rank: y.rank,
            coeffs: from_dense(y.rank, &tab, tab.s_to_t(&s)),
        }
    }
}

impl TPrimeExpansion {
    pub fn from_terms<I>(r: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NormalFormWord, RationalFunction)>,
    {
        let h = HeckeElement::from_terms(r, terms)?;
        Ok(Self {
            rank: h.rank,
            coeffs: h.coeffs,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalFormWord, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, w: &NormalFormWord) -> RationalFunction {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Words of odd parity carrying a nonzero coefficient.
    pub fn odd_support(&self) -> Vec<NormalFormWord> {
        self.coeffs.keys().filter(|w| !w.is_even()).cloned().collect()
    }

    pub fn is_even_supported(&self) -> bool {
        self.coeffs.keys().all(|w| w.is_even())
    }
}

fn fmt_terms(
    f: &mut fmt::Formatter<'_>,
    coeffs: &BTreeMap<NormalFormWord, RationalFunction>,
    prime: bool,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    for (k, (w, c)) in coeffs.iter().enumerate() {
        if k > 0 {
            write!(f, " + ")?;
        }
        let word = w.to_string();
        let word = if prime { word.replace('T', "T'") } else { word };
        write!(f, "{c}*{word}")?;
    }
    Ok(())
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, false)
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}[{self}]", self.rank)
    }
}

impl fmt::Display for TPrimeExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, true)
    }
}

impl fmt::Debug for TPrimeExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}'[{self}]", self.rank)
    }
}

// The operator impls panic on rank mismatch; the named methods return errors.

impl Add<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        HeckeElement::add(self, rhs).expect("rank mismatch")
    }
}

impl Sub<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self.subtract(rhs).expect("rank mismatch")
    }
}

impl Mul<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn mul(self, rhs: &HeckeElement) -> HeckeElement {
        self.multiply(rhs).expect("rank mismatch")
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        self.scale(&RationalFunction::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(r: usize, i: usize) -> HeckeElement {
        HeckeElement::generator(r, i).unwrap()
    }

    fn tp(r: usize, i: usize) -> HeckeElement {
        HeckeElement::tprime(r, i).unwrap()
    }

    fn k(c: RationalFunction, r: usize) -> HeckeElement {
        HeckeElement::scalar(r, c).unwrap()
    }

    fn a() -> RationalFunction {
        RationalFunction::q_minus_qinv()
    }

    fn b() -> RationalFunction {
        RationalFunction::q_plus_qinv()
    }

    #[test]
    fn quadratic_relation_example() {
        let t1 = t(2, 1);
        let lhs = &t1 * &t1;
        let rhs = &t1.scale(&a()) + &HeckeElement::one(2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn relations_a_hold_up_to_rank_6() {
        for r in 2..=6 {
            let one = HeckeElement::one(r).unwrap();
            for i in 1..r {
                let ti = t(r, i);
                assert_eq!(&ti * &ti, &ti.scale(&a()) + &one, "A1 r={r} i={i}");
                if i + 1 < r {
                    let tj = t(r, i + 1);
                    assert_eq!(&(&ti * &tj) * &ti, &(&tj * &ti) * &tj, "A2 r={r} i={i}");
                }
                for j in i + 2..r {
                    let tj = t(r, j);
                    assert_eq!(&ti * &tj, &tj * &ti, "A3 r={r} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn relations_a_prime_hold_up_to_rank_6() {
        let c = &a() / &b();
        let c2 = &c * &c;
        for r in 2..=6 {
            let one = HeckeElement::one(r).unwrap();
            for i in 1..r {
                let ti = tp(r, i);
                assert_eq!(&ti * &ti, one, "A'1 r={r} i={i}");
                if i + 1 < r {
                    let tj = tp(r, i + 1);
                    let lhs = &(&ti * &tj) * &ti;
                    let rhs = &(&(&tj * &ti) * &tj) - &(&ti - &tj).scale(&c2);
                    assert_eq!(lhs, rhs, "A'2 r={r} i={i}");
                }
                for j in i + 2..r {
                    let tj = tp(r, j);
                    assert_eq!(&ti * &tj, &tj * &ti, "A'3 r={r} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn tprime_rank_two_coefficients() {
        let x = tp(2, 1);
        let id = NormalFormWord::identity(2);
        let s1 = NormalFormWord::new(vec![1]).unwrap();
        assert_eq!(x.coefficient(&id), -(&a() / &b()));
        assert_eq!(x.coefficient(&s1), &RationalFunction::from_int(2) / &b());
        let back = (&x.scale(&b()) + &k(a(), 2)).scale(&RationalFunction::from_rational(
            Rational::new(1.into(), 2.into()),
        ));
        assert_eq!(back, t(2, 1));
    }

    #[test]
    fn goldman_examples() {
        for r in 2..=4 {
            for i in 1..r {
                assert_eq!(t(r, i).goldman(), &k(a(), r) - &t(r, i));
                assert_eq!(tp(r, i).goldman(), -&tp(r, i));
            }
        }
        assert!(tp(3, 1).goldman_eigenproject(1).is_zero());
        let one = HeckeElement::one(3).unwrap();
        assert_eq!(one.goldman_eigenproject(1), one);
    }

    #[test]
    fn tprime_basis_examples() {
        let t1 = t(2, 1).to_tprime_basis();
        let half = Rational::new(1.into(), 2.into());
        let id = NormalFormWord::identity(2);
        let s1 = NormalFormWord::new(vec![1]).unwrap();
        assert_eq!(t1.coefficient(&id), a().scale(&half));
        assert_eq!(t1.coefficient(&s1), b().scale(&half));
        let one = HeckeElement::one(4).unwrap().to_tprime_basis();
        assert_eq!(one.terms().count(), 1);
        assert_eq!(one.coefficient(&NormalFormWord::identity(4)), RationalFunction::one());
    }

    #[test]
    fn tprime_basis_round_trip_on_full_basis() {
        for r in 1..=5 {
            for w in NormalFormWord::all(r).unwrap() {
                let x = HeckeElement::basis(w.clone()).unwrap();
                assert_eq!(HeckeElement::from_tprime_basis(&x.to_tprime_basis()), x);
                // and the T′ word itself is a unit vector in T′ coordinates
                let y = HeckeElement::tprime_word(r, &w.letters()).unwrap();
                let e = y.to_tprime_basis();
                assert_eq!(e.terms().count(), 1, "word {w}");
                assert_eq!(e.coefficient(&w), RationalFunction::one());
            }
        }
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let x = HeckeElement::one(2).unwrap();
        let y = HeckeElement::one(3).unwrap();
        assert_eq!(x.multiply(&y), Err(Error::RankMismatch { left: 2, right: 3 }));
        assert!(HeckeElement::tprime(3, 3).is_err());
        assert!(HeckeElement::generator(3, 0).is_err());
    }

    #[test]
    fn unit_law_and_random_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for r in 2..=5 {
            let one = HeckeElement::one(r).unwrap();
            for _ in 0..4 {
                let x = HeckeElement::random(r, 5, &mut rng).unwrap();
                assert_eq!(&one * &x, x);
                assert_eq!(&x * &one, x);
                assert_eq!(HeckeElement::from_tprime_basis(&x.to_tprime_basis()), x);
                assert_eq!(x.goldman().goldman(), x);
                let p = x.goldman_eigenproject(1);
                let m = x.goldman_eigenproject(-1);
                assert_eq!(&p + &m, x);
                assert!(p.to_tprime_basis().is_even_supported());
            }
        }
    }

    fn arb_element(r: usize) -> impl Strategy<Value = HeckeElement> {
        any::<u64>().prop_map(move |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            HeckeElement::random(r, 3, &mut rng).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn multiply_is_associative(x in arb_element(4), y in arb_element(4), z in arb_element(4)) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn goldman_is_multiplicative(x in arb_element(4), y in arb_element(4)) {
            prop_assert_eq!((&x * &y).goldman(), &x.goldman() * &y.goldman());
        }

        #[test]
        fn eigenprojections_sum_to_element(x in arb_element(3)) {
            prop_assert_eq!(&x.goldman_eigenproject(1) + &x.goldman_eigenproject(-1), x);
        }
    }
}
