use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use once_cell::sync::{Lazy, OnceCell};

use super::{check_rank, NormalFormWord, Permutation};
use crate::error::Result;
use crate::qfield::{LaurentPolynomial, Rational, RationalFunction, Ring};

pub(crate) type SparseLaurent = Vec<(usize, LaurentPolynomial)>;

/// Scalars that basis vectors of the Hecke algebra can carry.
pub(crate) trait Coefficient: Ring {
    fn lift(p: &LaurentPolynomial) -> Self;
    fn scale_laurent(&self, p: &LaurentPolynomial) -> Self;
    fn scale_rational(&self, c: &Rational) -> Self;
}

impl Coefficient for LaurentPolynomial {
    fn lift(p: &LaurentPolynomial) -> Self {
        p.clone()
    }
    fn scale_laurent(&self, p: &LaurentPolynomial) -> Self {
        self * p
    }
    fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Coefficient for RationalFunction {
    fn lift(p: &LaurentPolynomial) -> Self {
        RationalFunction::from_laurent(p.clone())
    }
    fn scale_laurent(&self, p: &LaurentPolynomial) -> Self {
        self * &RationalFunction::from_laurent(p.clone())
    }
    fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    Left,
    Right,
}

pub(crate) fn q_minus_qinv() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(1, Rational::from_integer(1.into())), (-1, Rational::from_integer((-1).into()))])
}

pub(crate) fn q_plus_qinv() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(1, Rational::from_integer(1.into())), (-1, Rational::from_integer(1.into()))])
}

/// Per-rank lookup data: the basis, the length rule for multiplying by a
/// generator on either side, and lazily built expansions.
pub(crate) struct RankTable {
    pub r: usize,
    pub words: Vec<NormalFormWord>,
    pub lengths: Vec<usize>,
    // [g-1][k] = (index of s_g w_k or w_k s_g, length increases)
    left: Vec<Vec<(usize, bool)>>,
    right: Vec<Vec<(usize, bool)>>,
    // word with its last letter removed, and that letter
    prefix: Vec<Option<(usize, usize)>>,
    by_length_desc: Vec<usize>,
    s_expansion: OnceCell<Vec<SparseLaurent>>,
    goldman_images: OnceCell<Vec<SparseLaurent>>,
    s_left: OnceCell<Vec<Vec<SparseLaurent>>>,
}

static TABLES: Lazy<Mutex<HashMap<usize, Arc<RankTable>>>> = Lazy::new(Default::default);

pub(crate) fn table(r: usize) -> Result<Arc<RankTable>> {
    check_rank(r)?;
    let mut cache = TABLES.lock().expect("table cache poisoned");
    Ok(cache
        .entry(r)
        .or_insert_with(|| Arc::new(RankTable::build(r)))
        .clone())
}

impl RankTable {
    fn build(r: usize) -> Self {
        let words = NormalFormWord::all(r).expect("rank checked");
        let perms: Vec<Permutation> = words.iter().map(|w| w.to_permutation()).collect();
        let perm_index: HashMap<Permutation, usize> =
            perms.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        let lengths = words.iter().map(|w| w.length()).collect();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for g in 1..r {
            let mut l = Vec::with_capacity(perms.len());
            let mut rt = Vec::with_capacity(perms.len());
            for p in &perms {
                let line = p.one_line();
                let pos_g = line.iter().position(|&v| v as usize == g).unwrap();
                let pos_h = line.iter().position(|&v| v as usize == g + 1).unwrap();
                let mut sw = line.to_vec();
                sw.swap(pos_g, pos_h);
                l.push((perm_index[&Permutation(sw)], pos_g < pos_h));
                let mut ws = line.to_vec();
                ws.swap(g - 1, g);
                rt.push((perm_index[&Permutation(ws)], line[g - 1] < line[g]));
            }
            left.push(l);
            right.push(rt);
        }
        let prefix = words
            .iter()
            .map(|w| {
                let d = w.descents();
                let j = d.iter().rposition(|&c| c > 0)?;
                let letter = j + 1 + 1 - d[j] as usize;
                let mut shorter = d.to_vec();
                shorter[j] -= 1;
                Some((NormalFormWord { descents: shorter }.index(), letter))
            })
            .collect();
        let mut by_length_desc: Vec<usize> = (0..words.len()).collect();
        by_length_desc.sort_by_key(|&k| std::cmp::Reverse(words[k].length()));
        Self {
            r,
            words,
            lengths,
            left,
            right,
            prefix,
            by_length_desc,
            s_expansion: OnceCell::new(),
            goldman_images: OnceCell::new(),
            s_left: OnceCell::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// `(alpha T_g + beta) x` or `x (alpha T_g + beta)` on dense coordinates.
    pub fn apply_letter<C: Coefficient>(
        &self,
        side: Side,
        g: usize,
        alpha: &C,
        beta: &C,
        x: &[C],
    ) -> Vec<C> {
        let rule = match side {
            Side::Left => &self.left[g - 1],
            Side::Right => &self.right[g - 1],
        };
        let a = C::lift(&q_minus_qinv());
        let down_diag = beta.plus(&alpha.times(&a));
        let mut out = vec![C::zero_value(); x.len()];
        for (k, xk) in x.iter().enumerate() {
            if xk.is_zero_value() {
                continue;
            }
            let (t, up) = rule[k];
            let diag = if up { beta } else { &down_diag };
            if !diag.is_zero_value() {
                out[k] = out[k].plus(&diag.times(xk));
            }
            out[t] = out[t].plus(&alpha.times(xk));
        }
        out
    }

    fn expand_by_prefix(&self, alpha: &LaurentPolynomial, beta: &LaurentPolynomial) -> Vec<SparseLaurent> {
        let n = self.size();
        let mut out: Vec<SparseLaurent> = Vec::with_capacity(n);
        for k in 0..n {
            match self.prefix[k] {
                None => out.push(vec![(k, LaurentPolynomial::one())]),
                Some((p, g)) => {
                    let dense = to_dense(&out[p], n);
                    let prod = self.apply_letter(Side::Right, g, alpha, beta, &dense);
                    out.push(to_sparse(prod));
                }
            }
        }
        out
    }

    /// `S_w = Π (2T_g - (q - q^-1))` over the letters of each word, in the
    /// T basis. Its leading term is `2^ℓ T_w`.
    pub fn s_expansion(&self) -> &[SparseLaurent] {
        self.s_expansion.get_or_init(|| {
            self.expand_by_prefix(&LaurentPolynomial::from_int(2), &-q_minus_qinv())
        })
    }

    /// Goldman images `Π ((q - q^-1) - T_g)` of each basis word.
    pub fn goldman_images(&self) -> &[SparseLaurent] {
        self.goldman_images.get_or_init(|| {
            self.expand_by_prefix(&LaurentPolynomial::from_int(-1), &q_minus_qinv())
        })
    }

    /// Rewrites T-basis coordinates in the basis `{S_w}` by back substitution
    /// from the longest words down.
    pub fn t_to_s<C: Coefficient>(&self, mut x: Vec<C>) -> Vec<C> {
        let sexp = self.s_expansion();
        let mut s = vec![C::zero_value(); x.len()];
        for &k in &self.by_length_desc {
            if x[k].is_zero_value() {
                continue;
            }
            let inv = Rational::new(BigInt::from(1), BigInt::from(2).pow(self.lengths[k] as u32));
            let c = x[k].scale_rational(&inv);
            for (j, p) in &sexp[k] {
                x[*j] = x[*j].minus(&c.scale_laurent(p));
            }
            debug_assert!(x[k].is_zero_value());
            s[k] = c;
        }
        s
    }

    pub fn s_to_t<C: Coefficient>(&self, s: &[C]) -> Vec<C> {
        let sexp = self.s_expansion();
        let mut x = vec![C::zero_value(); s.len()];
        for (k, c) in s.iter().enumerate() {
            if c.is_zero_value() {
                continue;
            }
            for (j, p) in &sexp[k] {
                x[*j] = x[*j].plus(&c.scale_laurent(p));
            }
        }
        x
    }

    /// Left multiplication by `S_g` written in the S basis:
    /// `[g-1][k]` holds the S coordinates of `S_g S_{w_k}`.
    pub fn s_left(&self) -> &[Vec<SparseLaurent>] {
        self.s_left.get_or_init(|| {
            let n = self.size();
            let two = LaurentPolynomial::from_int(2);
            let shift = -q_minus_qinv();
            (1..self.r)
                .map(|g| {
                    (0..n)
                        .map(|k| {
                            let dense = to_dense(&self.s_expansion()[k], n);
                            let t = self.apply_letter(Side::Left, g, &two, &shift, &dense);
                            to_sparse(self.t_to_s(t))
                        })
                        .collect()
                })
                .collect()
        })
    }
}

pub(crate) fn to_dense<C: Ring>(sparse: &[(usize, C)], n: usize) -> Vec<C> {
    let mut d = vec![C::zero_value(); n];
    for (k, c) in sparse {
        d[*k] = c.clone();
    }
    d
}

pub(crate) fn to_sparse<C: Ring>(dense: Vec<C>) -> Vec<(usize, C)> {
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero_value())
        .collect()
}
