//! Sparse exact linear algebra over any [`Field`].

use std::collections::BTreeMap;

use crate::qfield::Field;

/// Sorted `(index, value)` pairs with no zero values.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_from_dense<F: Field>(d: &[F]) -> SparseVec<F> {
    d.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero_value())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// `y - a x`.
pub fn sub_scaled<F: Field>(y: &[(usize, F)], a: &F, x: &[(usize, F)]) -> SparseVec<F> {
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        if j == x.len() || (i < y.len() && y[i].0 < x[j].0) {
            out.push(y[i].clone());
            i += 1;
        } else if i == y.len() || x[j].0 < y[i].0 {
            out.push((x[j].0, a.times(&x[j].1).negate()));
            j += 1;
        } else {
            let v = y[i].1.minus(&a.times(&x[j].1));
            if !v.is_zero_value() {
                out.push((y[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(x: &[(usize, F)], a: &F) -> SparseVec<F> {
    if a.is_zero_value() {
        return Vec::new();
    }
    x.iter().map(|(k, v)| (*k, v.times(a))).collect()
}

/// A subspace of `F^len` held as rows keyed by pivot, the first nonzero
/// position, each normalized to 1 at its pivot.
///
/// Candidates are reduced by repeatedly clearing their leading entry
/// against the row with that pivot, so the basis produced depends only on
/// the order of insertion.
#[derive(Clone, Debug)]
pub struct EchelonSpan<F> {
    len: usize,
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> EchelonSpan<F> {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: BTreeMap::new(),
        }
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Residual of `v` after clearing leading entries; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[(usize, F)]) -> SparseVec<F> {
        let mut v = v.to_vec();
        while let Some((p, c)) = v.first().cloned() {
            match self.rows.get(&p) {
                Some(row) => v = sub_scaled(&v, &c, row),
                None => break,
            }
        }
        v
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns the new pivot, or `None` if `v` was
    /// already in the span.
    pub fn insert(&mut self, v: &[(usize, F)]) -> Option<usize> {
        debug_assert!(v.iter().all(|(k, _)| *k < self.len));
        let r = self.reduce(v);
        let (p, lead) = r.first()?.clone();
        let row = scale(&r, &lead.inverse());
        self.rows.insert(p, row);
        Some(p)
    }

    /// Fully reduced rows: each pivot column is zero in every other row.
    pub fn reduced_rows(&self) -> Vec<(usize, SparseVec<F>)> {
        let mut rows: Vec<(usize, SparseVec<F>)> =
            self.rows.iter().map(|(p, r)| (*p, r.clone())).collect();
        for i in (0..rows.len()).rev() {
            let (p, row) = rows[i].clone();
            for other in rows.iter_mut().take(i) {
                if let Ok(pos) = other.1.binary_search_by_key(&p, |(k, _)| *k) {
                    let c = other.1[pos].1.clone();
                    other.1 = sub_scaled(&other.1, &c, &row);
                }
            }
        }
        rows
    }
}

/// Rank of a family of vectors.
pub fn rank<F: Field>(len: usize, vectors: &[SparseVec<F>]) -> usize {
    let mut span = EchelonSpan::new(len);
    for v in vectors {
        span.insert(v);
    }
    span.rank()
}

/// Basis of `{x : c · x = 0 for every constraint row c}` in `F^len`.
/// Basis vectors are indexed by free columns in increasing order, each with
/// a 1 in its own free column.
pub fn nullspace<F: Field>(len: usize, constraints: impl IntoIterator<Item = SparseVec<F>>) -> Vec<SparseVec<F>> {
    let mut span = EchelonSpan::new(len);
    for c in constraints {
        span.insert(&c);
    }
    let rows = span.reduced_rows();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; len];
        for (p, _) in &rows {
            v[*p] = true;
        }
        v
    };
    // column -> list of (pivot, coefficient) for the rows that mention it
    let mut by_col: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
    for (p, row) in &rows {
        for (k, c) in row {
            if *k != *p {
                by_col.entry(*k).or_default().push((*p, c.clone()));
            }
        }
    }
    (0..len)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v: SparseVec<F> = by_col
                .get(&f)
                .map(|entries| entries.iter().map(|(p, c)| (*p, c.negate())).collect())
                .unwrap_or_default();
            v.push((f, F::one_value()));
            v.sort_by_key(|(k, _)| *k);
            v
        })
        .collect()
}
