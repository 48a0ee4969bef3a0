use std::fmt;

use super::element::{HeckeElement, TPrimeExpansion};
use super::table::{q_plus_qinv, table, Coefficient};
use super::{check_generator, check_rank, NormalFormWord};
use crate::error::{Error, Result};
use crate::qfield::{LaurentPolynomial, RationalFunction, Ring};

/// An element `(Σ_w c_w S_w) / (q + q^-1)^k` of the Hecke algebra, where
/// `S_w = (q + q^-1)^{ℓ(w)} T′_w` and the `c_w` are Laurent polynomials.
///
/// Products of T′ letters stay inside Laurent arithmetic in this form,
/// which keeps long products and parity checks cheap.
#[derive(Clone)]
pub struct ScaledTPrime {
    rank: usize,
    coords: Vec<LaurentPolynomial>,
    bpow: u32,
}

impl ScaledTPrime {
    pub fn one(r: usize) -> Result<Self> {
        Self::word(&NormalFormWord::identity(r))
    }

    /// The basis element `T′_w`.
    pub fn word(w: &NormalFormWord) -> Result<Self> {
        let tab = table(w.rank())?;
        let mut coords = vec![LaurentPolynomial::zero(); tab.size()];
        coords[w.index()] = LaurentPolynomial::one();
        Ok(Self {
            rank: w.rank(),
            coords,
            bpow: w.length() as u32,
        })
    }

    /// The product `T′_{g_1} ... T′_{g_k}` of arbitrary letters.
    pub fn letters(r: usize, letters: &[usize]) -> Result<Self> {
        check_rank(r)?;
        for &g in letters {
            check_generator(r, g)?;
        }
        let mut x = Self::one(r)?;
        for &g in letters.iter().rev() {
            x = x.left_letter(g);
        }
        Ok(x)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn left_letter(&self, g: usize) -> Self {
        let tab = table(self.rank).expect("valid rank");
        let cols = &tab.s_left()[g - 1];
        let mut out = vec![LaurentPolynomial::zero(); self.coords.len()];
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, p) in &cols[k] {
                out[*j] = &out[*j] + &(c * p);
            }
        }
        Self {
            rank: self.rank,
            coords: out,
            bpow: self.bpow + 1,
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let tab = table(self.rank)?;
        let mut acc = vec![LaurentPolynomial::zero(); self.coords.len()];
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut z = other.clone();
            z.bpow = 0;
            for g in tab.words[k].letters().into_iter().rev() {
                z = z.left_letter(g);
            }
            for (a, zk) in acc.iter_mut().zip(&z.coords) {
                if !zk.is_zero() {
                    *a = &*a + &(c * zk);
                }
            }
        }
        Ok(Self {
            rank: self.rank,
            coords: acc,
            bpow: self.bpow + other.bpow,
        })
    }

    fn raised(&self, bpow: u32) -> Vec<LaurentPolynomial> {
        let mut f = LaurentPolynomial::one();
        for _ in self.bpow..bpow {
            f = &f * &q_plus_qinv();
        }
        self.coords.iter().map(|c| c * &f).collect()
    }

    fn combine(&self, other: &Self, subtract: bool) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let bpow = self.bpow.max(other.bpow);
        let x = self.raised(bpow);
        let y = other.raised(bpow);
        let coords = x
            .iter()
            .zip(&y)
            .map(|(a, b)| if subtract { a - b } else { a + b })
            .collect();
        Ok(Self {
            rank: self.rank,
            coords,
            bpow,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn subtract(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    pub fn scale(&self, c: &LaurentPolynomial) -> Self {
        Self {
            rank: self.rank,
            coords: self.coords.iter().map(|x| x * c).collect(),
            bpow: self.bpow,
        }
    }

    pub fn negate(&self) -> Self {
        self.scale(&LaurentPolynomial::from_int(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Field equality, after bringing both sides to a common power of `q + q^-1`.
    pub fn equals(&self, other: &Self) -> bool {
        self.rank == other.rank && {
            let bpow = self.bpow.max(other.bpow);
            self.raised(bpow) == other.raised(bpow)
        }
    }

    /// Odd-parity words with a nonzero coordinate.
    pub fn odd_support(&self) -> Vec<NormalFormWord> {
        let tab = table(self.rank).expect("valid rank");
        self.coords
            .iter()
            .enumerate()
            .filter(|(k, c)| !c.is_zero() && tab.lengths[*k] % 2 == 1)
            .map(|(k, _)| tab.words[k].clone())
            .collect()
    }

    pub fn even_support(&self) -> Vec<NormalFormWord> {
        let tab = table(self.rank).expect("valid rank");
        self.coords
            .iter()
            .enumerate()
            .filter(|(k, c)| !c.is_zero() && tab.lengths[*k].is_multiple_of(2))
            .map(|(k, _)| tab.words[k].clone())
            .collect()
    }

    pub fn to_tprime_expansion(&self) -> TPrimeExpansion {
        let tab = table(self.rank).expect("valid rank");
        let b = RationalFunction::q_plus_qinv();
        let terms = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let e = tab.lengths[k] as i32 - self.bpow as i32;
                let scale = b.pow(e).expect("q + q^-1 is nonzero");
                (tab.words[k].clone(), &RationalFunction::from_laurent(c.clone()) * &scale)
            });
        TPrimeExpansion::from_terms(self.rank, terms.collect::<Vec<_>>()).expect("valid rank")
    }

    pub fn to_hecke(&self) -> HeckeElement {
        let tab = table(self.rank).expect("valid rank");
        let t = tab.s_to_t(&self.coords);
        let scale = RationalFunction::q_plus_qinv()
            .pow(-(self.bpow as i32))
            .expect("q + q^-1 is nonzero");
        let terms = t
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero_value())
            .map(|(k, c)| (tab.words[k].clone(), scale.scale_laurent(&c)));
        HeckeElement::from_terms(self.rank, terms.collect::<Vec<_>>()).expect("valid rank")
    }
}

impl fmt::Debug for ScaledTPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_tprime_expansion())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_products_agree_with_hecke_multiplication() {
        let samples: [&[usize]; 5] = [&[1], &[1, 1], &[2, 1, 2], &[1, 3, 2, 1], &[3, 2, 1, 2, 3, 1]];
        for letters in samples {
            let s = ScaledTPrime::letters(4, letters).unwrap();
            let h = HeckeElement::tprime_word(4, letters).unwrap();
            assert_eq!(s.to_hecke(), h, "{letters:?}");
            assert_eq!(s.to_tprime_expansion(), h.to_tprime_basis());
        }
    }

    #[test]
    fn square_of_letter_is_one() {
        let x = ScaledTPrime::letters(3, &[2, 2]).unwrap();
        assert!(x.equals(&ScaledTPrime::one(3).unwrap()));
    }

    #[test]
    fn multiply_matches_concatenation() {
        let a = ScaledTPrime::letters(4, &[1, 2]).unwrap();
        let b = ScaledTPrime::letters(4, &[3, 1, 2]).unwrap();
        let ab = ScaledTPrime::letters(4, &[1, 2, 3, 1, 2]).unwrap();
        assert!(a.multiply(&b).unwrap().equals(&ab));
    }
}
