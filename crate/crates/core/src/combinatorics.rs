//! Partitions, (m,n)-hooks, tableau counts and predicted centralizer dimensions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Self { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Whether `λ_j ≤ n` for every row `j > m`.
    pub fn is_hook(&self, m: usize, n: usize) -> bool {
        self.parts.iter().skip(m).all(|&p| p <= n)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(", "))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All partitions of `r`, largest first in lexicographic order.
pub fn enumerate_partitions(r: usize) -> Result<Vec<Partition>> {
    if r == 0 {
        return Err(Error::InvalidRank {
            rank: r,
            reason: "partitions need r >= 1",
        });
    }
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Number of standard Young tableaux of shape `λ`, by the hook-length formula.
pub fn d_lambda(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let n = lambda.size() as u128;
    let mut num: u128 = (1..=n).product();
    let mut hooks: Vec<u128> = Vec::new();
    for (i, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts[j] - i - 1;
            hooks.push((arm + leg + 1) as u128);
        }
    }
    // Reduce by the gcd as we go so intermediate values stay small.
    let mut den: u128 = 1;
    for h in hooks {
        den *= h;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The hook partitions of `r` and their split by whether the conjugate is a hook too.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookClassification {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub hooks: Vec<Partition>,
    /// Hooks whose conjugate is a hook.
    pub h0: Vec<Partition>,
    pub h1: Vec<Partition>,
}

pub fn hook_classify(m: usize, n: usize, r: usize) -> Result<HookClassification> {
    if m + n == 0 {
        return Err(Error::InvalidSpace("m + n must be positive".into()));
    }
    let hooks: Vec<Partition> = enumerate_partitions(r)?.into_iter().filter(|l| l.is_hook(m, n)).collect();
    let (h0, h1) = hooks.iter().cloned().partition(|l| l.conjugate().is_hook(m, n));
    Ok(HookClassification { m, n, r, hooks, h0, h1 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HookClass {
    /// In `h0` with a conjugate distinct from itself.
    H0Pair,
    H0Selfconj,
    H1,
}

impl fmt::Display for HookClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::H0Pair => "h0-pair",
            Self::H0Selfconj => "h0-selfconj",
            Self::H1 => "h1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeRecord {
    pub shape: Partition,
    pub degree: u128,
    pub class: HookClass,
}

/// Predicted dimensions of the Hecke image and of the alternating centralizer.
///
/// The `0` parts come from shapes in `h0`, the `1` parts from `h1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub shapes: Vec<ShapeRecord>,
    pub dim_a: u128,
    pub dim_a0: u128,
    pub dim_a1: u128,
    pub dim_c: u128,
    pub dim_c0: u128,
    pub dim_c1: u128,
}

impl DimensionReport {
    /// The identities tying the two algebras together.
    pub fn consistent(&self) -> bool {
        self.dim_a == self.dim_a0 + self.dim_a1
            && self.dim_c == self.dim_c0 + self.dim_c1
            && self.dim_a0 == 2 * self.dim_c0
            && self.dim_a1 == self.dim_c1
    }
}

/// `dim A = Σ d²` over hooks. For the centralizer, a pair `{λ, λ′}` inside
/// `h0` contributes one `d²`, a self-conjugate shape splits into two halves
/// contributing `2 (d/2)²`, and each shape in `h1` contributes `d²`.
pub fn predicted_dimensions(m: usize, n: usize, r: usize) -> Result<DimensionReport> {
    if r < 2 {
        return Err(Error::InvalidRank {
            rank: r,
            reason: "the alternating centralizer needs r >= 2",
        });
    }
    let hc = hook_classify(m, n, r)?;
    let mut shapes = Vec::new();
    let (mut a0, mut a1, mut c0, mut c1) = (0u128, 0u128, 0u128, 0u128);
    for l in &hc.hooks {
        let d = d_lambda(l);
        let class = if !hc.h0.contains(l) {
            HookClass::H1
        } else if l.is_self_conjugate() {
            HookClass::H0Selfconj
        } else {
            HookClass::H0Pair
        };
        match class {
            HookClass::H1 => {
                a1 += d * d;
                c1 += d * d;
            }
            HookClass::H0Selfconj => {
                if !d.is_multiple_of(2) {
                    return Err(Error::OddSelfConjugateDegree {
                        partition: l.to_string(),
                        degree: d,
                    });
                }
                a0 += d * d;
                c0 += 2 * (d / 2) * (d / 2);
            }
            HookClass::H0Pair => {
                a0 += d * d;
                // Count each pair once, at its lexicographically larger member.
                if *l > l.conjugate() {
                    c0 += d * d;
                }
            }
        }
        shapes.push(ShapeRecord {
            shape: l.clone(),
            degree: d,
            class,
        });
    }
    Ok(DimensionReport {
        m,
        n,
        r,
        shapes,
        dim_a: a0 + a1,
        dim_a0: a0,
        dim_a1: a1,
        dim_c: c0 + c1,
        dim_c0: c0,
        dim_c1: c1,
    })
}
