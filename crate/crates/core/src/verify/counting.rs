use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

use super::{interval_data, VerificationReport, VerifyError};
use crate::util::{binomial, multinomial, rat_pow};

/// `(r+1) / (n(rn+1)) · C((r+1)²n + r, n−1)`.
pub fn interval_formula_rhs(n: usize, r: u32) -> BigRational {
    let (nn, rr) = (n as u64, r as u64);
    BigRational::new(
        BigInt::from(rr + 1) * binomial((rr + 1) * (rr + 1) * nn + rr, nn - 1),
        BigInt::from(nn * (rr * nn + 1)),
    )
}

/// Brute-force interval count against the closed form.
pub fn interval_formula_check(n: usize, r: u32, cache: Option<&Path>) -> Result<VerificationReport, VerifyError> {
    let (_, polys) = interval_data(n, r, cache)?;
    let lhs = BigRational::from_integer(polys.iter().map(|p| BigInt::from(p.at_one())).sum());
    Ok(VerificationReport::new("intervals", &[("n", json!(n)), ("r", json!(r))])
        .compare(&lhs, &interval_formula_rhs(n, r)))
}

/// `Σ_β i_β · C(n; co(β)) = (r+1)^n (rn+1)^{n−2}`.
pub fn dimension_identity(n: usize, r: u32, cache: Option<&Path>) -> Result<VerificationReport, VerifyError> {
    let (poset, polys) = interval_data(n, r, cache)?;
    let mut lhs = BigInt::zero();
    for (beta, p) in poset.elements().iter().zip(&polys) {
        lhs += BigInt::from(p.at_one()) * multinomial(beta.co().parts());
    }
    let lhs = BigRational::from_integer(lhs);
    let a = BigRational::from_integer(BigInt::from(r as u64 * n as u64 + 1));
    let rhs = rat_pow(&BigRational::from_integer(BigInt::from(r + 1)), n as i64) * rat_pow(&a, n as i64 - 2);
    Ok(VerificationReport::new("dimension", &[("n", json!(n)), ("r", json!(r))]).compare(&lhs, &rhs))
}

/// Intervals below strictly increasing `r`-paths against all `(r−1)`-intervals.
pub fn trivial_part_check(n: usize, r: u32, cache: Option<&Path>) -> Result<VerificationReport, VerifyError> {
    if r < 2 {
        return Err(VerifyError::BadParameters(format!("trivial_part needs r >= 2, got {r}")));
    }
    let (poset, polys) = interval_data(n, r, cache)?;
    let lhs: u64 = poset
        .elements()
        .iter()
        .zip(&polys)
        .filter(|(beta, _)| beta.co().parts().iter().all(|&c| c == 1))
        .map(|(_, p)| p.at_one())
        .sum();
    let (_, lower) = interval_data(n, r - 1, cache)?;
    let rhs: u64 = lower.iter().map(|p| p.at_one()).sum();
    Ok(VerificationReport::new("trivial_part", &[("n", json!(n)), ("r", json!(r))]).compare(&lhs, &rhs))
}
