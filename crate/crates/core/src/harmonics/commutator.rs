use num_bigint::BigInt;
use num_rational::BigRational;

use super::xpoly::{Row, XPoly};
use super::HarmonicsError;

/// Checks `[P_α(∂X), E_uv^(k)] p = α_u · P_β(∂X) p` with `β = α − e_u + k·e_v`.
pub fn commutator_check(alpha: [u32; 3], k: u32, u: Row, v: Row, p: &XPoly) -> Result<bool, HarmonicsError> {
    if u == v {
        return Err(HarmonicsError::SameRow(u.name()));
    }
    let au = alpha[u.index()];
    if au == 0 || k == 0 {
        return Err(HarmonicsError::CommutatorPrecondition { alpha, row: u.name() });
    }
    let lhs = p.e_op_apply(u, v, k)?.p_alpha_apply(alpha).sub(&p.p_alpha_apply(alpha).e_op_apply(u, v, k)?);
    let mut beta = alpha;
    beta[u.index()] -= 1;
    beta[v.index()] += k;
    let rhs = p.p_alpha_apply(beta).scale(&BigRational::from_integer(BigInt::from(au)));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::rat;

    #[test]
    fn commutator_examples() {
        let p = XPoly::var(2, Row::X, 0).mul(&XPoly::var(2, Row::X, 1));
        assert!(commutator_check([0, 1, 0], 1, Row::Y, Row::X, &p).unwrap());
        assert!(commutator_check([1, 2, 0], 2, Row::Y, Row::X, &XPoly::one(2).scale(&rat(3))).unwrap());
        assert!(commutator_check([1, 0, 0], 1, Row::Y, Row::X, &p).is_err());
        assert!(commutator_check([0, 1, 0], 1, Row::Y, Row::Y, &p).is_err());
    }
}
