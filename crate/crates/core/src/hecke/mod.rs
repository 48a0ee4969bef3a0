//! The Iwahori-Hecke algebra of type A over `K = Q(q)`.
//!
//! Basis words are descent vectors `(c_1, ..., c_{r-1})` with `0 <= c_i <= i`;
//! the word stands for `M_1 M_2 ... M_{r-1}` with
//! `M_i = T_i T_{i-1} ... T_{i-c_i+1}`.

mod element;
pub mod relations;
mod sbasis;
mod table;

use std::fmt;

use crate::error::{Error, Result};

pub use element::{HeckeElement, TPrimeExpansion};
pub use sbasis::ScaledTPrime;

/// A permutation of `{1..r}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Self((1..=r as u8).collect())
    }

    /// Builds a permutation from one-line notation `[w(1), ..., w(r)]`.
    pub fn from_one_line(values: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; values.len()];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > values.len() || seen[v - 1] {
                return Err(Error::InvalidWord(values));
            }
            seen[v - 1] = true;
        }
        Ok(Self(values))
    }

    /// The simple transposition `s_i` in `S_r`.
    pub fn transposition(r: usize, i: usize) -> Result<Self> {
        check_generator(r, i)?;
        let mut p = Self::identity(r);
        p.0.swap(i - 1, i);
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&j| self.0[j as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = pos as u8 + 1;
        }
        Self(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn check_generator(r: usize, i: usize) -> Result<()> {
    if r < 2 || i == 0 || i >= r {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: r.saturating_sub(1),
        });
    }
    Ok(())
}

pub(crate) fn check_rank(r: usize) -> Result<()> {
    if r == 0 {
        Err(Error::InvalidRank {
            rank: r,
            reason: "rank must be at least 1",
        })
    } else if r > 8 {
        Err(Error::InvalidRank {
            rank: r,
            reason: "ranks above 8 are not supported",
        })
    } else {
        Ok(())
    }
}

/// A normal-form basis word, ordered lexicographically by descent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalFormWord {
    descents: Vec<u8>,
}

impl NormalFormWord {
    pub fn new(descents: Vec<u8>) -> Result<Self> {
        check_rank(descents.len() + 1)?;
        if descents.iter().enumerate().any(|(k, &c)| c as usize > k + 1) {
            return Err(Error::InvalidWord(descents));
        }
        Ok(Self { descents })
    }

    pub fn identity(r: usize) -> Self {
        Self {
            descents: vec![0; r.saturating_sub(1)],
        }
    }

    /// All `r!` words in lexicographic order.
    pub fn all(r: usize) -> Result<Vec<Self>> {
        check_rank(r)?;
        let mut out = vec![Self::identity(r)];
        for i in 1..r {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..=i as u8).map(move |c| {
                        let mut d = w.descents.clone();
                        d[i - 1] = c;
                        Self { descents: d }
                    })
                })
                .collect();
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.descents.len() + 1
    }

    pub fn descents(&self) -> &[u8] {
        &self.descents
    }

    /// `Σ c_i`, which is also the Coxeter length of the permutation.
    pub fn length(&self) -> usize {
        self.descents.iter().map(|&c| c as usize).sum()
    }

    pub fn is_even(&self) -> bool {
        self.length().is_multiple_of(2)
    }

    /// The generator indices of `M_1 M_2 ... M_{r-1}`, left to right.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length());
        for (k, &c) in self.descents.iter().enumerate() {
            let i = k + 1;
            for j in 0..c as usize {
                out.push(i - j);
            }
        }
        out
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.rank());
        for g in self.letters() {
            p.0.swap(g - 1, g);
        }
        p
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        let r = p.rank();
        let mut rest = p.0.clone();
        let mut descents = vec![0u8; r.saturating_sub(1)];
        for k in (2..=r).rev() {
            let pos = rest.iter().position(|&v| v as usize == k).unwrap();
            descents[k - 2] = (k - 1 - pos) as u8;
            rest.remove(pos);
        }
        Self { descents }
    }

    /// Position in [`NormalFormWord::all`].
    pub fn index(&self) -> usize {
        self.descents
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &c)| acc * (k + 2) + c as usize)
    }
}

/// Generator letters, e.g. `T2T1` or `1` for the identity.
impl fmt::Display for NormalFormWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.letters();
        if letters.is_empty() {
            return write!(f, "1");
        }
        for g in letters {
            write!(f, "T{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NormalFormWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.descents)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_product(r: usize, letters: &[usize]) -> Permutation {
        letters.iter().fold(Permutation::identity(r), |acc, &g| {
            acc.compose(&Permutation::transposition(r, g).unwrap())
        })
    }

    #[test]
    fn word_to_permutation_examples() {
        assert_eq!(
            NormalFormWord::identity(4).to_permutation(),
            Permutation::identity(4)
        );
        let s1 = NormalFormWord::new(vec![1]).unwrap();
        assert_eq!(s1.to_permutation(), Permutation::transposition(2, 1).unwrap());
        let longest = NormalFormWord::new(vec![1, 2]).unwrap();
        assert_eq!(longest.to_permutation(), brute_product(3, &[1, 2, 1]));
        assert_eq!(longest.to_permutation().one_line(), &[3, 2, 1]);
    }

    #[test]
    fn words_biject_onto_symmetric_group() {
        for r in 1..=6 {
            let words = NormalFormWord::all(r).unwrap();
            assert_eq!(words.len(), (1..=r).product::<usize>());
            let mut perms: Vec<_> = words.iter().map(|w| w.to_permutation()).collect();
            for (k, w) in words.iter().enumerate() {
                assert_eq!(w.index(), k);
                assert_eq!(perms[k], brute_product(r, &w.letters()));
                assert_eq!(perms[k].length(), w.length(), "reduced word {w}");
                assert_eq!(&NormalFormWord::from_permutation(&perms[k]), w);
            }
            perms.sort();
            perms.dedup();
            assert_eq!(perms.len(), words.len());
        }
    }

    #[test]
    fn invalid_words_rejected() {
        assert!(NormalFormWord::new(vec![2]).is_err());
        assert!(NormalFormWord::new(vec![1, 3]).is_err());
        assert!(Permutation::from_one_line(vec![1, 1]).is_err());
        assert!(Permutation::transposition(3, 3).is_err());
    }

    #[test]
    fn display_letters() {
        let w = NormalFormWord::new(vec![1, 2]).unwrap();
        assert_eq!(w.to_string(), "T1T2T1");
        assert_eq!(NormalFormWord::identity(3).to_string(), "1");
    }
}
