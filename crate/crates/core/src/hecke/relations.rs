use super::HeckeElement;
use crate::error::Result;
use crate::qfield::RationalFunction;

/// One instance of a defining relation, e.g. the braid relation at `i = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub relation: &'static str,
    pub label: String,
    pub holds: bool,
}

impl RelationInstance {
    pub fn new(relation: &'static str, label: String, holds: bool) -> Self {
        Self {
            relation,
            label,
            holds,
        }
    }
}

pub const QUADRATIC: &str = "T quadratic relation";
pub const BRAID: &str = "T braid relation";
pub const FAR_COMMUTE: &str = "T far commutation";
pub const PRIME_INVOLUTION: &str = "T' squares to one";
pub const PRIME_BRAID: &str = "T' braid relation with correction";
pub const PRIME_FAR_COMMUTE: &str = "T' far commutation";

/// `((q - q^-1)/(q + q^-1))^2`.
pub fn correction_coefficient() -> RationalFunction {
    let c = &RationalFunction::q_minus_qinv() / &RationalFunction::q_plus_qinv();
    &c * &c
}

/// `T_i^2 = (q - q^-1) T_i + 1`, `T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}` and
/// `T_i T_j = T_j T_i` for `|i - j| > 1`.
pub fn t_relations(r: usize) -> Result<Vec<RelationInstance>> {
    let one = HeckeElement::one(r)?;
    let a = RationalFunction::q_minus_qinv();
    let t: Vec<HeckeElement> = (1..r)
        .map(|i| HeckeElement::generator(r, i))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in 1..r {
        let ti = &t[i - 1];
        let rhs = ti.scale(&a).add(&one)?;
        out.push(RelationInstance::new(QUADRATIC, format!("i={i}"), ti.multiply(ti)? == rhs));
        if i + 1 < r {
            let tj = &t[i];
            let lhs = ti.multiply(tj)?.multiply(ti)?;
            let rhs = tj.multiply(ti)?.multiply(tj)?;
            out.push(RelationInstance::new(BRAID, format!("i={i}"), lhs == rhs));
        }
        for j in i + 2..r {
            let tj = &t[j - 1];
            let holds = ti.multiply(tj)? == tj.multiply(ti)?;
            out.push(RelationInstance::new(FAR_COMMUTE, format!("i={i} j={j}"), holds));
        }
    }
    Ok(out)
}

/// `T′_i^2 = 1`, the corrected braid relation
/// `T′_i T′_{i+1} T′_i = T′_{i+1} T′_i T′_{i+1} - c^2 (T′_i - T′_{i+1})` with
/// `c = (q - q^-1)/(q + q^-1)`, and far commutation.
pub fn tprime_relations(r: usize) -> Result<Vec<RelationInstance>> {
    let one = HeckeElement::one(r)?;
    let c2 = correction_coefficient();
    let t: Vec<HeckeElement> = (1..r)
        .map(|i| HeckeElement::tprime(r, i))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in 1..r {
        let ti = &t[i - 1];
        out.push(RelationInstance::new(PRIME_INVOLUTION, format!("i={i}"), ti.multiply(ti)? == one));
        if i + 1 < r {
            let tj = &t[i];
            let lhs = ti.multiply(tj)?.multiply(ti)?;
            let rhs = tj
                .multiply(ti)?
                .multiply(tj)?
                .subtract(&ti.subtract(tj)?.scale(&c2))?;
            out.push(RelationInstance::new(PRIME_BRAID, format!("i={i}"), lhs == rhs));
        }
        for j in i + 2..r {
            let tj = &t[j - 1];
            let holds = ti.multiply(tj)? == tj.multiply(ti)?;
            out.push(RelationInstance::new(PRIME_FAR_COMMUTE, format!("i={i} j={j}"), holds));
        }
    }
    Ok(out)
}
