//! Z2 crossed systems `(A, Z2, ψ, α)` and the checks that a graded algebra
//! is the crossed product built from one.

use std::fmt;

use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Z2 {
    One,
    MinusOne,
}

impl Z2 {
    pub const ALL: [Z2; 2] = [Z2::One, Z2::MinusOne];
}

impl std::ops::Mul for Z2 {
    type Output = Z2;

    fn mul(self, other: Z2) -> Z2 {
        if self == other {
            Z2::One
        } else {
            Z2::MinusOne
        }
    }
}

impl fmt::Display for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Z2::One => write!(f, "1"),
            Z2::MinusOne => write!(f, "-1"),
        }
    }
}

/// A weak action `ψ` and cocycle `α` on a base algebra `A`, together with
/// the images `ι(u_σ)` of the crossed-product basis in the target algebra.
pub trait CrossedSystem {
    type Elem: Clone;

    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    /// Membership in the base algebra `A`.
    fn in_base(&self, a: &Self::Elem) -> bool;
    fn psi(&self, s: Z2, a: &Self::Elem) -> Self::Elem;
    fn alpha(&self, s: Z2, t: Z2) -> Self::Elem;
    fn alpha_inverse(&self, s: Z2, t: Z2) -> Self::Elem;
    /// `ι(u_σ)`.
    fn unit(&self, s: Z2) -> Self::Elem;
}

fn mul3<S: CrossedSystem>(sys: &S, a: &S::Elem, b: &S::Elem, c: &S::Elem) -> S::Elem {
    sys.mul(&sys.mul(a, b), c)
}

/// Runs every crossed-system check on labelled elements of the base algebra.
///
/// Single-element checks use every sample; two-element checks use `pairs`
/// (indices into `samples`).
pub fn crossed_system_checks<S: CrossedSystem>(
    sys: &S,
    samples: &[(String, S::Elem)],
    pairs: &[(usize, usize)],
) -> Vec<Check> {
    let mut checks = Vec::new();
    let one = sys.one();

    let mut fail = Vec::new();
    let mut total = 0;
    for (label, a) in samples {
        if !sys.in_base(a) {
            fail.push(format!("sample {label} is not in the base algebra"));
        }
        for s in Z2::ALL {
            total += 1;
            if !sys.in_base(&sys.psi(s, a)) {
                fail.push(format!("psi({s})({label})"));
            }
        }
    }
    checks.push(Check::all_hold("psi maps the base algebra into itself", total, fail));

    let mut fail = Vec::new();
    let mut total = 0;
    for s in Z2::ALL {
        total += 1;
        if !sys.equal(&sys.psi(s, &one), &one) {
            fail.push(format!("psi({s})(1) != 1"));
        }
        for &(i, j) in pairs {
            let (la, a) = &samples[i];
            let (lb, b) = &samples[j];
            total += 1;
            let lhs = sys.psi(s, &sys.mul(a, b));
            let rhs = sys.mul(&sys.psi(s, a), &sys.psi(s, b));
            if !sys.equal(&lhs, &rhs) {
                fail.push(format!("psi({s})({la} * {lb})"));
            }
        }
    }
    checks.push(Check::all_hold("psi is multiplicative and unital", total, fail));

    let fail: Vec<String> = samples
        .iter()
        .filter(|(_, a)| {
            let twice = sys.psi(Z2::MinusOne, &sys.psi(Z2::MinusOne, a));
            !sys.equal(&twice, a)
        })
        .map(|(l, _)| l.clone())
        .collect();
    checks.push(Check::all_hold("psi(-1) has order at most 2", samples.len(), fail));

    // ψ(σ)(ψ(τ)(a)) = α(σ,τ) ψ(στ)(a) α(σ,τ)^-1
    let mut fail = Vec::new();
    let mut total = 0;
    for s in Z2::ALL {
        for t in Z2::ALL {
            for (label, a) in samples {
                total += 1;
                let lhs = sys.psi(s, &sys.psi(t, a));
                let rhs = mul3(sys, &sys.alpha(s, t), &sys.psi(s * t, a), &sys.alpha_inverse(s, t));
                if !sys.equal(&lhs, &rhs) {
                    fail.push(format!("sigma={s} tau={t} a={label}"));
                }
            }
        }
    }
    checks.push(Check::all_hold("crossed system: twisted action", total, fail));

    // ψ(σ1)(α(σ2,σ3)) α(σ1,σ2σ3) = α(σ1,σ2) α(σ1σ2,σ3)
    let mut fail = Vec::new();
    for s1 in Z2::ALL {
        for s2 in Z2::ALL {
            for s3 in Z2::ALL {
                let lhs = sys.mul(&sys.psi(s1, &sys.alpha(s2, s3)), &sys.alpha(s1, s2 * s3));
                let rhs = sys.mul(&sys.alpha(s1, s2), &sys.alpha(s1 * s2, s3));
                if !sys.equal(&lhs, &rhs) {
                    fail.push(format!("({s1}, {s2}, {s3})"));
                }
            }
        }
    }
    checks.push(Check::all_hold("crossed system: cocycle identity", 8, fail));

    let mut fail = Vec::new();
    for s in Z2::ALL {
        if !sys.equal(&sys.alpha(s, Z2::One), &one) || !sys.equal(&sys.alpha(Z2::One, s), &one) {
            fail.push(format!("sigma={s}"));
        }
    }
    checks.push(Check::all_hold("crossed system: normalized cocycle", 2, fail));

    let mut fail = Vec::new();
    for s in Z2::ALL {
        for t in Z2::ALL {
            let a = sys.alpha(s, t);
            let ok = sys.in_base(&a)
                && sys.equal(&sys.mul(&a, &sys.alpha_inverse(s, t)), &one)
                && sys.equal(&sys.mul(&sys.alpha_inverse(s, t), &a), &one);
            if !ok {
                fail.push(format!("alpha({s}, {t})"));
            }
        }
    }
    checks.push(Check::all_hold("cocycle values are units of the base algebra", 4, fail));

    // ι(a1 u_σ) ι(a2 u_τ) = ι(a1 ψ(σ)(a2) α(σ,τ) u_στ)
    for s in Z2::ALL {
        for t in Z2::ALL {
            let mut fail = Vec::new();
            for &(i, j) in pairs {
                let (l1, a1) = &samples[i];
                let (l2, a2) = &samples[j];
                let lhs = sys.mul(&sys.mul(a1, &sys.unit(s)), &sys.mul(a2, &sys.unit(t)));
                let coeff = mul3(sys, a1, &sys.psi(s, a2), &sys.alpha(s, t));
                let rhs = sys.mul(&coeff, &sys.unit(s * t));
                if !sys.equal(&lhs, &rhs) {
                    fail.push(format!("a1={l1} a2={l2}"));
                }
            }
            checks.push(Check::all_hold(
                format!("multiplication law u_{s} * u_{t}"),
                pairs.len(),
                fail,
            ));
        }
    }
    checks
}
