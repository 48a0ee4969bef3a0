//! The Z2-graded tensor space `V^{⊗r}` and the exact matrices of the
//! q-permutation action of the Hecke algebra, the vector representation of
//! the quantum superalgebra, and the signed flip `φ^{⊗r}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::matrix::OperatorMatrix;
use crate::qfield::{LaurentPolynomial, Rational, RationalFunction};

pub type Matrix = OperatorMatrix<RationalFunction>;

/// `V = V_0 ⊕ V_1` with `dim V_0 = m`, `dim V_1 = n`, and its `r`-th tensor power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    m: usize,
    n: usize,
    r: usize,
}

impl GradedSpace {
    pub fn new(m: usize, n: usize, r: usize) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::InvalidSpace("m + n must be at least 1".into()));
        }
        if r == 0 {
            return Err(Error::InvalidSpace("r must be at least 1".into()));
        }
        let s = Self { m, n, r };
        if (m + n).checked_pow(r as u32).is_none_or(|d| d > 1 << 16) {
            return Err(Error::InvalidSpace(format!("(m+n)^r too large for m={m} n={n} r={r}")));
        }
        Ok(s)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `m + n`.
    pub fn local_dim(&self) -> usize {
        self.m + self.n
    }

    /// `(m + n)^r`.
    pub fn dim(&self) -> usize {
        self.local_dim().pow(self.r as u32)
    }

    /// Degree of the basis vector `v_k`, `k` counted from 1.
    pub fn degree(&self, k: usize) -> usize {
        usize::from(k > self.m)
    }

    /// Lexicographic position of `v_{k_1} ⊗ ... ⊗ v_{k_r}`.
    pub fn index_of(&self, letters: &[usize]) -> usize {
        letters.iter().fold(0, |acc, &k| acc * self.local_dim() + (k - 1))
    }

    /// The letters `(k_1, ..., k_r)` of the basis tensor at `index`.
    pub fn letters_of(&self, mut index: usize) -> Vec<usize> {
        let d = self.local_dim();
        let mut out = vec![0; self.r];
        for slot in out.iter_mut().rev() {
            *slot = index % d + 1;
            index /= d;
        }
        out
    }

    fn same_r(&self, x: &HeckeElement) -> Result<()> {
        if x.rank() != self.r {
            return Err(Error::RankMismatch {
                left: x.rank(),
                right: self.r,
            });
        }
        Ok(())
    }

    fn check_site(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.r {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 1,
                max: self.r.saturating_sub(1),
            });
        }
        Ok(())
    }
}

impl fmt::Display for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={} r={}", self.m, self.n, self.r)
    }
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

fn rf(n: i64) -> RationalFunction {
    RationalFunction::from_int(n)
}

/// Operator acting on sites `i, i+1` through `local(k, l)`, which lists the
/// image of `v_k ⊗ v_l` as `((k', l'), coefficient)` pairs.
fn two_site<F, L>(space: &GradedSpace, i: usize, local: L) -> OperatorMatrix<F>
where
    F: crate::qfield::Field,
    L: Fn(usize, usize) -> Vec<((usize, usize), F)>,
{
    let mut entries = Vec::new();
    for col in 0..space.dim() {
        let letters = space.letters_of(col);
        let (k, l) = (letters[i - 1], letters[i]);
        for ((k2, l2), c) in local(k, l) {
            let mut out = letters.clone();
            out[i - 1] = k2;
            out[i] = l2;
            entries.push((space.index_of(&out), col, c));
        }
    }
    OperatorMatrix::from_entries(space.dim(), entries)
}

/// `π_r(T_i)`.
pub fn pi_t(space: &GradedSpace, i: usize) -> Result<Matrix> {
    space.check_site(i)?;
    let a = RationalFunction::q_minus_qinv();
    let b = RationalFunction::q_plus_qinv();
    let half = RationalFunction::from_rational(Rational::new(1.into(), 2.into()));
    Ok(two_site(space, i, |k, l| {
        let (dk, dl) = (space.degree(k), space.degree(l));
        let swap_sign = rf(sign(dk * dl == 1));
        if k == l {
            let diag = &(&(&b * &rf(sign(dk == 1))) + &a) * &half;
            vec![((k, l), diag)]
        } else if k < l {
            vec![((l, k), swap_sign), ((k, l), a.clone())]
        } else {
            vec![((l, k), swap_sign)]
        }
    }))
}

/// `π_r(T′_i)` from its own closed form.
pub fn pi_tprime(space: &GradedSpace, i: usize) -> Result<Matrix> {
    space.check_site(i)?;
    let b = RationalFunction::q_plus_qinv();
    let c = &RationalFunction::q_minus_qinv() / &b;
    let two_over_b = &rf(2) / &b;
    Ok(two_site(space, i, |k, l| {
        let (dk, dl) = (space.degree(k), space.degree(l));
        let swap = &two_over_b * &rf(sign(dk * dl == 1));
        if k == l {
            vec![((k, l), rf(sign(dk == 1)))]
        } else if k < l {
            vec![((l, k), swap), ((k, l), c.clone())]
        } else {
            vec![((l, k), swap), ((k, l), -&c)]
        }
    }))
}

/// The `q = 1` operator `v_k ⊗ v_l ↦ (-1)^{|v_k||v_l|} v_l ⊗ v_k` on sites
/// `i, i+1`, built directly with rational entries.
pub fn sign_permutation(space: &GradedSpace, i: usize) -> Result<OperatorMatrix<Rational>> {
    space.check_site(i)?;
    Ok(two_site(space, i, |k, l| {
        let s = sign(space.degree(k) * space.degree(l) == 1);
        vec![((l, k), Rational::from_integer(s.into()))]
    }))
}

pub fn pi_generators(space: &GradedSpace) -> Result<Vec<Matrix>> {
    (1..space.r).map(|i| pi_t(space, i)).collect()
}

pub fn pi_tprime_generators(space: &GradedSpace) -> Result<Vec<Matrix>> {
    (1..space.r).map(|i| pi_tprime(space, i)).collect()
}

/// `π_r(x)`: each normal-form word maps to the product of its generator matrices.
pub fn represent(x: &HeckeElement, space: &GradedSpace) -> Result<Matrix> {
    space.same_r(x)?;
    let gens = pi_generators(space)?;
    let mut acc = Matrix::zero(space.dim());
    for (w, c) in x.terms() {
        let mut m = Matrix::identity(space.dim());
        for g in w.letters() {
            m = m.mul(&gens[g - 1])?;
        }
        acc = acc.add(&m.scale(c))?;
    }
    Ok(acc)
}

/// Root data of `gl(m|n)`: simple roots `α_i = ε_i - ε_{i+1}` for
/// `1 <= i < m + n`, with the single odd root at `i = m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootDatum {
    m: usize,
    n: usize,
}

impl RootDatum {
    pub fn new(m: usize, n: usize) -> Self {
        Self { m, n }
    }

    pub fn simple_roots(&self) -> std::ops::Range<usize> {
        1..self.m + self.n
    }

    /// `p(i)`: 1 for the odd simple root.
    pub fn parity(&self, i: usize) -> usize {
        usize::from(i == self.m)
    }

    /// `ℓ_i`.
    pub fn ell(&self, i: usize) -> i64 {
        if i <= self.m {
            1
        } else {
            -1
        }
    }

    /// `(ε_a, ε_b)`.
    pub fn form(&self, a: usize, b: usize) -> i64 {
        match (a == b, a <= self.m) {
            (false, _) => 0,
            (true, true) => 1,
            (true, false) => -1,
        }
    }

    /// `(α_i, ε_j)`, the exponent of `q^{ℓ_i h_i}` on `v_j`.
    pub fn root_pairing(&self, i: usize, j: usize) -> i64 {
        self.form(i, j) - self.form(i + 1, j)
    }
}

/// Generators of the quantum superalgebra acting on `V^{⊗r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RhoGenerator {
    Sigma,
    /// `q^h` for `h` with `ε_j(h) = weights[j-1]`.
    Qh(Vec<i64>),
    E(usize),
    F(usize),
}

impl RhoGenerator {
    /// `q^h` for the dual basis element `h` with `ε_j(h) = δ_{jb}`.
    pub fn qh_basis(space: &GradedSpace, b: usize) -> Result<Self> {
        let d = space.local_dim();
        if b == 0 || b > d {
            return Err(Error::IndexOutOfRange { index: b, min: 1, max: d });
        }
        let mut w = vec![0; d];
        w[b - 1] = 1;
        Ok(Self::Qh(w))
    }

    pub fn label(&self) -> String {
        match self {
            Self::Sigma => "sigma".into(),
            Self::Qh(w) => match w.iter().position(|&x| x != 0) {
                Some(p) if w[p] == 1 && w.iter().filter(|&&x| x != 0).count() == 1 => format!("qh{}", p + 1),
                _ => format!("qh{w:?}"),
            },
            Self::E(i) => format!("e{i}"),
            Self::F(i) => format!("f{i}"),
        }
    }
}

fn diag_local(d: usize, f: impl Fn(usize) -> RationalFunction) -> Matrix {
    Matrix::from_entries(d, (1..=d).map(|j| (j - 1, j - 1, f(j))))
}

fn q_pow(e: i64) -> RationalFunction {
    RationalFunction::from_laurent(LaurentPolynomial::q_pow(e))
}

fn tensor_power(m: &Matrix, k: usize) -> Matrix {
    (0..k).fold(Matrix::identity(1), |acc, _| acc.kron(m))
}

/// `ρ_r(g)` via the closed r-site formulas of the iterated coproduct.
pub fn rho_generator(space: &GradedSpace, g: &RhoGenerator) -> Result<Matrix> {
    let d = space.local_dim();
    let r = space.r;
    let datum = RootDatum::new(space.m, space.n);
    let sigma = diag_local(d, |j| rf(sign(space.degree(j) == 1)));
    match g {
        RhoGenerator::Sigma => Ok(tensor_power(&sigma, r)),
        RhoGenerator::Qh(w) => {
            if w.len() != d {
                return Err(Error::InvalidGenerator(format!("weight vector {w:?} needs {d} entries")));
            }
            Ok(tensor_power(&diag_local(d, |j| q_pow(w[j - 1])), r))
        }
        RhoGenerator::E(i) | RhoGenerator::F(i) => {
            let i = *i;
            if !datum.simple_roots().contains(&i) {
                return Err(Error::InvalidGenerator(g.label()));
            }
            let sigma_p = if datum.parity(i) == 1 { sigma } else { Matrix::identity(d) };
            let mut acc = Matrix::zero(space.dim());
            if let RhoGenerator::E(_) = g {
                let e = Matrix::from_entries(d, [(i - 1, i, rf(1))]);
                let k_inv = diag_local(d, |j| q_pow(-datum.root_pairing(i, j)));
                for k in 1..=r {
                    let term = tensor_power(&sigma_p, k - 1).kron(&e).kron(&tensor_power(&k_inv, r - k));
                    acc = acc.add(&term)?;
                }
            } else {
                let f = Matrix::from_entries(d, [(i, i - 1, rf(1))]);
                let k = diag_local(d, |j| q_pow(datum.root_pairing(i, j)));
                let left = sigma_p.mul(&k)?;
                for s in 1..=r {
                    let term = tensor_power(&left, s - 1).kron(&f).kron(&Matrix::identity(d.pow((r - s) as u32)));
                    acc = acc.add(&term)?;
                }
            }
            Ok(acc)
        }
    }
}

/// `σ`, `q^{h_b}` for each dual basis element, and every `e_i`, `f_i`.
pub fn rho_generator_list(space: &GradedSpace) -> Result<Vec<RhoGenerator>> {
    let mut out = vec![RhoGenerator::Sigma];
    for b in 1..=space.local_dim() {
        out.push(RhoGenerator::qh_basis(space, b)?);
    }
    for i in RootDatum::new(space.m, space.n).simple_roots() {
        out.push(RhoGenerator::E(i));
        out.push(RhoGenerator::F(i));
    }
    Ok(out)
}

pub fn rho_generators(space: &GradedSpace) -> Result<Vec<(RhoGenerator, Matrix)>> {
    rho_generator_list(space)?
        .into_iter()
        .map(|g| rho_generator(space, &g).map(|m| (g, m)))
        .collect()
}

/// `φ^{⊗r}` for `φ(v_i) = v_{2m-i+1}`, with the Koszul sign
/// `(-1)^{Σ_{i≥2} Σ_{j<i} |u_j|}`. Requires `m = n`.
pub fn phi_tensor(space: &GradedSpace) -> Result<Matrix> {
    if space.m != space.n {
        return Err(Error::UnequalGrading {
            m: space.m,
            n: space.n,
        });
    }
    let r = space.r;
    let flip = 2 * space.m + 1;
    let entries = (0..space.dim()).map(|col| {
        let letters = space.letters_of(col);
        let exponent: usize = letters
            .iter()
            .enumerate()
            .map(|(j, &k)| space.degree(k) * (r - 1 - j))
            .sum();
        let image: Vec<usize> = letters.iter().map(|&k| flip - k).collect();
        (space.index_of(&image), col, rf(sign(exponent % 2 == 1)))
    });
    Ok(Matrix::from_entries(space.dim(), entries))
}

/// `(-1)^{r(r-1)/2}`.
pub fn phi_square_sign(r: usize) -> i64 {
    sign((r * (r.saturating_sub(1)) / 2) % 2 == 1)
}

/// Names accepted by [`generator_matrix`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorLabel {
    T(usize),
    TPrime(usize),
    Rho(RhoGenerator),
    Phi,
}

impl FromStr for GeneratorLabel {
    type Err = Error;

    /// `T1`, `Tprime2`, `sigma`, `qh1`, `e1`, `f1` or `phi`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGenerator(s.to_string());
        let num = |rest: &str| rest.parse::<usize>().map_err(|_| bad());
        if s == "sigma" {
            Ok(Self::Rho(RhoGenerator::Sigma))
        } else if s == "phi" {
            Ok(Self::Phi)
        } else if let Some(rest) = s.strip_prefix("Tprime") {
            Ok(Self::TPrime(num(rest)?))
        } else if let Some(rest) = s.strip_prefix('T') {
            Ok(Self::T(num(rest)?))
        } else if let Some(rest) = s.strip_prefix("qh") {
            Ok(Self::Rho(RhoGenerator::Qh(vec![num(rest)? as i64])))
        } else if let Some(rest) = s.strip_prefix('e') {
            Ok(Self::Rho(RhoGenerator::E(num(rest)?)))
        } else if let Some(rest) = s.strip_prefix('f') {
            Ok(Self::Rho(RhoGenerator::F(num(rest)?)))
        } else {
            Err(bad())
        }
    }
}

/// The matrix of a generator named by a label such as `T1` or `e2`.
pub fn generator_matrix(space: &GradedSpace, label: &str) -> Result<Matrix> {
    match label.parse::<GeneratorLabel>()? {
        GeneratorLabel::T(i) => pi_t(space, i),
        GeneratorLabel::TPrime(i) => pi_tprime(space, i),
        GeneratorLabel::Phi => phi_tensor(space),
        // the parser stores the basis index of `qhB` as a one-entry vector
        GeneratorLabel::Rho(RhoGenerator::Qh(b)) => {
            rho_generator(space, &RhoGenerator::qh_basis(space, b[0] as usize)?)
        }
        GeneratorLabel::Rho(g) => rho_generator(space, &g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::relations::correction_coefficient;
    use crate::qfield::SpecializationPoint;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn space(m: usize, n: usize, r: usize) -> GradedSpace {
        GradedSpace::new(m, n, r).unwrap()
    }

    fn small_spaces(max_dim: usize, max_r: usize) -> Vec<GradedSpace> {
        let mut out = Vec::new();
        for m in 0..=2usize {
            for n in 0..=2 {
                for r in 1..=max_r {
                    if m + n > 0 && (m + n).pow(r as u32) <= max_dim {
                        out.push(space(m, n, r));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn index_round_trip() {
        let s = space(2, 1, 3);
        for k in 0..s.dim() {
            assert_eq!(s.index_of(&s.letters_of(k)), k);
        }
        assert_eq!(s.letters_of(0), vec![1, 1, 1]);
        assert_eq!(s.letters_of(s.dim() - 1), vec![3, 3, 3]);
        assert!(GradedSpace::new(0, 0, 2).is_err());
        assert!(GradedSpace::new(1, 0, 0).is_err());
    }

    #[test]
    fn t_diagonal_examples() {
        let even = pi_t(&space(1, 0, 2), 1).unwrap();
        assert_eq!(even.get(0, 0), RationalFunction::q());
        let odd = pi_t(&space(0, 1, 2), 1).unwrap();
        assert_eq!(odd.get(0, 0), -&RationalFunction::q().inverse().unwrap());
        let tp = pi_tprime(&space(1, 1, 2), 1).unwrap();
        let s = space(1, 1, 2);
        let v22 = s.index_of(&[2, 2]);
        assert_eq!(tp.get(v22, v22), rf(-1));
    }

    #[test]
    fn hecke_relations_on_matrices() {
        let a = RationalFunction::q_minus_qinv();
        let c2 = correction_coefficient();
        for s in small_spaces(256, 4) {
            let id = Matrix::identity(s.dim());
            let t = pi_generators(&s).unwrap();
            let tp = pi_tprime_generators(&s).unwrap();
            let b_inv = RationalFunction::q_plus_qinv().inverse().unwrap();
            for i in 0..t.len() {
                let quad = t[i].scale(&a).add(&id).unwrap();
                assert_eq!(t[i].mul(&t[i]).unwrap(), quad, "{s} quadratic i={}", i + 1);
                let affine = t[i].scale(&rf(2)).sub(&id.scale(&a)).unwrap().scale(&b_inv);
                assert_eq!(tp[i], affine, "{s} T' formula i={}", i + 1);
                assert_eq!(tp[i].mul(&tp[i]).unwrap(), id);
                if i + 1 < t.len() {
                    let (x, y) = (&t[i], &t[i + 1]);
                    let lhs = x.mul(y).unwrap().mul(x).unwrap();
                    assert_eq!(lhs, y.mul(x).unwrap().mul(y).unwrap(), "{s} braid");
                    let (x, y) = (&tp[i], &tp[i + 1]);
                    let lhs = x.mul(y).unwrap().mul(x).unwrap();
                    let rhs = y
                        .mul(x)
                        .unwrap()
                        .mul(y)
                        .unwrap()
                        .sub(&x.sub(y).unwrap().scale(&c2))
                        .unwrap();
                    assert_eq!(lhs, rhs, "{s} T' braid");
                }
                for j in i + 2..t.len() {
                    assert!(t[i].commutator(&t[j]).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn rho_one_site_examples() {
        let s = space(2, 1, 1);
        let e1 = rho_generator(&s, &RhoGenerator::E(1)).unwrap();
        assert_eq!(e1, Matrix::from_entries(3, [(0, 1, rf(1))]));
        let f2 = rho_generator(&s, &RhoGenerator::F(2)).unwrap();
        assert_eq!(f2, Matrix::from_entries(3, [(2, 1, rf(1))]));
        assert!(rho_generator(&s, &RhoGenerator::E(3)).is_err());
    }

    #[test]
    fn sigma_is_graded_sign() {
        for s in small_spaces(64, 3) {
            let sig = rho_generator(&s, &RhoGenerator::Sigma).unwrap();
            for k in 0..s.dim() {
                let deg: usize = s.letters_of(k).iter().map(|&j| s.degree(j)).sum();
                assert_eq!(sig.get(k, k), rf(sign(deg % 2 == 1)));
            }
            assert_eq!(sig.nnz(), s.dim());
            assert_eq!(sig.mul(&sig).unwrap(), Matrix::identity(s.dim()));
        }
    }

    #[test]
    fn rho_commutes_with_pi() {
        for s in small_spaces(64, 3) {
            let t = pi_generators(&s).unwrap();
            for (g, m) in rho_generators(&s).unwrap() {
                for (i, ti) in t.iter().enumerate() {
                    assert!(ti.commutator(&m).unwrap().is_zero(), "{s} {} T{}", g.label(), i + 1);
                }
            }
        }
    }

    #[test]
    fn rho_satisfies_superalgebra_relations() {
        // [e_i, f_i] = (K_i - K_i^-1)/(q^ℓ - q^-ℓ) with K_i = q^{ℓ_i h_i},
        // and e_i σ = (-1)^{p(i)} σ e_i.
        for s in small_spaces(27, 3) {
            let datum = RootDatum::new(s.m(), s.n());
            let sig = rho_generator(&s, &RhoGenerator::Sigma).unwrap();
            for i in datum.simple_roots() {
                let e = rho_generator(&s, &RhoGenerator::E(i)).unwrap();
                let f = rho_generator(&s, &RhoGenerator::F(i)).unwrap();
                let p = datum.parity(i);
                let ef = e.mul(&f).unwrap();
                let fe = f.mul(&e).unwrap();
                let bracket = if p == 1 { ef.add(&fe).unwrap() } else { ef.sub(&fe).unwrap() };
                let l = datum.ell(i);
                let k = tensor_power(&diag_local(s.local_dim(), |j| q_pow(datum.root_pairing(i, j))), s.r());
                let kinv = tensor_power(&diag_local(s.local_dim(), |j| q_pow(-datum.root_pairing(i, j))), s.r());
                let denom = &q_pow(l) - &q_pow(-l);
                let rhs = k.sub(&kinv).unwrap().scale(&denom.inverse().unwrap());
                assert_eq!(bracket, rhs, "{s} i={i}");
                let es = e.mul(&sig).unwrap();
                let se = sig.mul(&e).unwrap().scale(&rf(sign(p == 1)));
                assert_eq!(es, se);
            }
        }
    }

    #[test]
    fn phi_properties() {
        for m in 1..=2usize {
            for r in 1..=4 {
                if (2 * m).pow(r as u32) > 256 {
                    continue;
                }
                let s = space(m, m, r);
                let phi = phi_tensor(&s).unwrap();
                let id = Matrix::identity(s.dim());
                assert_eq!(phi.mul(&phi).unwrap(), id.scale(&rf(phi_square_sign(r))));
                for tp in pi_tprime_generators(&s).unwrap() {
                    assert!(tp.anticommutator(&phi).unwrap().is_zero());
                }
            }
        }
        let s = space(1, 1, 1);
        assert_eq!(phi_tensor(&s).unwrap(), Matrix::from_entries(2, [(1, 0, rf(1)), (0, 1, rf(1))]));
        assert!(phi_tensor(&space(2, 1, 2)).is_err());
    }

    #[test]
    fn represent_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for s in [space(1, 1, 3), space(2, 0, 3), space(1, 1, 2)] {
            let r = s.r();
            assert_eq!(represent(&HeckeElement::one(r).unwrap(), &s).unwrap(), Matrix::identity(s.dim()));
            for _ in 0..4 {
                let x = HeckeElement::random(r, 3, &mut rng).unwrap();
                let y = HeckeElement::random(r, 3, &mut rng).unwrap();
                let lhs = represent(&(&x * &y), &s).unwrap();
                let rhs = represent(&x, &s).unwrap().mul(&represent(&y, &s).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
            for i in 1..r {
                assert_eq!(represent(&HeckeElement::tprime(r, i).unwrap(), &s).unwrap(), pi_tprime(&s, i).unwrap());
            }
        }
    }

    #[test]
    fn even_elements_commute_with_phi_conjugation() {
        // φ π(x) φ^-1 = π(goldman(x)) restricted to the T′ letters: for x in the
        // even part the conjugate equals π(x) itself.
        let s = space(1, 1, 3);
        let phi = phi_tensor(&s).unwrap();
        let phi_inv = phi.scale(&rf(phi_square_sign(3)));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..3 {
            let x = HeckeElement::random(3, 4, &mut rng).unwrap();
            let px = represent(&x, &s).unwrap();
            let conj = phi.mul(&px).unwrap().mul(&phi_inv).unwrap();
            assert_eq!(conj, represent(&x.goldman(), &s).unwrap());
            let even = x.goldman_eigenproject(1);
            let pe = represent(&even, &s).unwrap();
            assert!(pe.commutator(&phi).unwrap().is_zero());
        }
    }

    #[test]
    fn q_one_gives_sign_permutations() {
        for s in small_spaces(64, 3) {
            for i in 1..s.r() {
                let t = pi_t(&s, i).unwrap().specialize(&SpecializationPoint::one()).unwrap();
                let tp = pi_tprime(&s, i).unwrap().specialize(&SpecializationPoint::one()).unwrap();
                let direct = sign_permutation(&s, i).unwrap();
                assert_eq!(t, direct);
                assert_eq!(tp, direct);
            }
        }
    }

    #[test]
    fn labels_parse() {
        let s = space(1, 1, 2);
        assert_eq!(generator_matrix(&s, "T1").unwrap(), pi_t(&s, 1).unwrap());
        assert_eq!(generator_matrix(&s, "Tprime1").unwrap(), pi_tprime(&s, 1).unwrap());
        assert_eq!(
            generator_matrix(&s, "qh2").unwrap(),
            rho_generator(&s, &RhoGenerator::Qh(vec![0, 1])).unwrap()
        );
        for bad in ["T", "x1", "T9", "e0", "qh3"] {
            assert!(generator_matrix(&s, bad).is_err(), "{bad}");
        }
    }
}
