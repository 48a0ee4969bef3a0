//! Square sparse matrices over a field, stored row by row.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{scale, sub_scaled, SparseVec};
use crate::qfield::{Field, Rational, RationalFunction, SpecializationPoint};

#[derive(Clone, PartialEq, Eq)]
pub struct OperatorMatrix<F> {
    dim: usize,
    rows: Vec<SparseVec<F>>,
}

impl<F: Field> OperatorMatrix<F> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, F::one_value())
    }

    pub fn scalar(dim: usize, c: F) -> Self {
        if c.is_zero_value() {
            return Self::zero(dim);
        }
        Self {
            dim,
            rows: (0..dim).map(|k| vec![(k, c.clone())]).collect(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions add up.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, F)>) -> Self {
        let mut rows: Vec<SparseVec<F>> = vec![Vec::new(); dim];
        for (i, j, v) in entries {
            assert!(i < dim && j < dim, "entry ({i}, {j}) outside {dim}x{dim}");
            rows[i].push((j, v));
        }
        for row in &mut rows {
            row.sort_by_key(|(j, _)| *j);
            let mut merged: SparseVec<F> = Vec::with_capacity(row.len());
            for (j, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((k, acc)) if *k == j => *acc = acc.plus(&v),
                    _ => merged.push((j, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero_value());
            *row = merged;
        }
        Self { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[(usize, F)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        match self.rows[i].binary_search_by_key(&j, |(k, _)| *k) {
            Ok(p) => self.rows[i][p].1.clone(),
            Err(_) => F::zero_value(),
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let minus_one = F::one_value().negate();
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| sub_scaled(a, &minus_one, b))
            .collect();
        Ok(Self { dim: self.dim, rows })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let one = F::one_value();
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| sub_scaled(a, &one, b))
            .collect();
        Ok(Self { dim: self.dim, rows })
    }

    pub fn scale(&self, c: &F) -> Self {
        Self {
            dim: self.dim,
            rows: self.rows.iter().map(|r| scale(r, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut acc: Vec<Option<F>> = vec![None; self.dim];
        let mut touched = Vec::new();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (j, b) in &other.rows[*k] {
                        let p = a.times(b);
                        match &mut acc[*j] {
                            Some(v) => *v = v.plus(&p),
                            slot @ None => {
                                *slot = Some(p);
                                touched.push(*j);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let out: SparseVec<F> = touched
                    .drain(..)
                    .filter_map(|j| acc[j].take().filter(|v| !v.is_zero_value()).map(|v| (j, v)))
                    .collect();
                out
            })
            .collect();
        Ok(Self { dim: self.dim, rows })
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    /// Kronecker product; the left factor indexes the most significant digit.
    pub fn kron(&self, other: &Self) -> Self {
        let d = other.dim;
        let mut rows = Vec::with_capacity(self.dim * d);
        for ra in &self.rows {
            for rb in &other.rows {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        row.push((ja * d + jb, a.times(b)));
                    }
                }
                rows.push(row);
            }
        }
        Self {
            dim: self.dim * d,
            rows,
        }
    }

    /// Entries as one vector of length `dim^2`, indexed by `row * dim + col`.
    pub fn flatten(&self) -> SparseVec<F> {
        self.entries().map(|(i, j, v)| (i * self.dim + j, v.clone())).collect()
    }

    pub fn unflatten(dim: usize, v: &[(usize, F)]) -> Self {
        Self::from_entries(dim, v.iter().map(|(k, c)| (k / dim, k % dim, c.clone())))
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(self.dim, self.entries().map(|(i, j, v)| (j, i, v.clone())))
    }

    /// Applies `f` to every entry, dropping results that vanish.
    pub fn try_map<G: Field>(&self, mut f: impl FnMut(usize, usize, &F) -> Result<G>) -> Result<OperatorMatrix<G>> {
        let mut rows = Vec::with_capacity(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, v) in row {
                let g = f(i, *j, v)?;
                if !g.is_zero_value() {
                    out.push((*j, g));
                }
            }
            rows.push(out);
        }
        Ok(OperatorMatrix { dim: self.dim, rows })
    }
}

impl OperatorMatrix<RationalFunction> {
    pub fn from_rational(m: &OperatorMatrix<Rational>) -> Self {
        m.try_map(|_, _, v| Ok(RationalFunction::from_rational(v.clone())))
            .expect("infallible")
    }

    /// Entrywise evaluation at `q = t`.
    pub fn specialize(&self, t: &SpecializationPoint) -> Result<OperatorMatrix<Rational>> {
        self.try_map(|i, j, v| {
            v.specialize(t).map_err(|_| Error::MatrixPole {
                row: i,
                col: j,
                point: t.to_string(),
            })
        })
    }

    /// One line per nonzero entry, `row col (num)/(den)`, in row-major order.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (i, j, v) in self.entries() {
            s.push_str(&format!("{i} {j} {v}\n"));
        }
        s
    }
}

impl<F: Field> fmt::Debug for OperatorMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OperatorMatrix {}x{} [", self.dim, self.dim)?;
        for (i, j, v) in self.entries() {
            writeln!(f, "  ({i}, {j}) {v}")?;
        }
        write!(f, "]")
    }
}

pub fn specialize_matrix(m: &OperatorMatrix<RationalFunction>, t: &SpecializationPoint) -> Result<OperatorMatrix<Rational>> {
    m.specialize(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type M = OperatorMatrix<Rational>;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn dense(rows: &[&[i64]]) -> M {
        let d = rows.len();
        M::from_entries(
            d,
            rows.iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &v)| (i, j, r(v)))),
        )
    }

    #[test]
    fn small_products() {
        let a = dense(&[&[1, 2], &[3, 4]]);
        let b = dense(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), dense(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.commutator(&a).unwrap(), M::zero(2));
        assert_eq!(b.mul(&b).unwrap(), M::identity(2));
        assert_eq!(a.get(1, 0), r(3));
        assert_eq!(a.transpose().get(0, 1), r(3));
    }

    #[test]
    fn kron_matches_index_convention() {
        let a = dense(&[&[1, 2], &[3, 4]]);
        let b = dense(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        for (i1, i2, j1, j2) in index_quads() {
            assert_eq!(k.get(i1 * 2 + i2, j1 * 2 + j2), a.get(i1, j1) * b.get(i2, j2));
        }
    }

    fn index_quads() -> Vec<(usize, usize, usize, usize)> {
        let mut v = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        v.push((a, b, c, d));
                    }
                }
            }
        }
        v
    }

    #[test]
    fn flatten_round_trip_and_dump() {
        let a = dense(&[&[1, 0], &[0, -2]]);
        assert_eq!(M::unflatten(2, &a.flatten()), a);
        let q = OperatorMatrix::from_entries(
            2,
            [(0, 1, RationalFunction::q()), (1, 0, RationalFunction::from_int(-3))],
        );
        assert_eq!(q.dump(), "0 1 (q)/(1)\n1 0 (-3)/(1)\n");
    }

    #[test]
    fn specialization_reports_pole() {
        let m = OperatorMatrix::from_entries(
            2,
            [(1, 1, RationalFunction::q_minus_qinv().inverse().unwrap())],
        );
        let err = m.specialize(&SpecializationPoint::one()).unwrap_err();
        assert!(matches!(err, Error::MatrixPole { row: 1, col: 1, .. }));
        let id = OperatorMatrix::<RationalFunction>::identity(3);
        let t = SpecializationPoint::from_int(5).unwrap();
        assert_eq!(id.specialize(&t).unwrap(), M::identity(3));
    }

    fn arb(d: usize) -> impl Strategy<Value = M> {
        prop::collection::vec(-2i64..=2, d * d).prop_map(move |v| {
            M::from_entries(d, v.iter().enumerate().map(|(k, &x)| (k / d, k % d, r(x))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn product_is_associative_and_distributive(a in arb(3), b in arb(3), c in arb(3)) {
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kron_is_multiplicative(a in arb(2), b in arb(2), c in arb(2), d in arb(2)) {
            let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
            let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
