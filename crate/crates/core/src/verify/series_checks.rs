use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use super::{rat_json, VerificationReport, VerifyError};
use crate::series::Series;
use crate::symcore::{partitions_of, plethystic_point_eval, z_of, Basis, Partition, QPoly3, SymFunc};
use crate::util::{binomial, factorial, sign};

fn ri(k: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(k.into())
}

/// `exp(−a Σ_{k>=1} C(bk,k) (−t)^k / k)` to order `order`.
fn exp_side(a: &BigRational, b: u32, order: usize) -> Series {
    let inner = Series::from_coeffs(
        order,
        (0..=order).map(|k| {
            if k == 0 {
                return BigRational::zero();
            }
            ri(binomial(b as u64 * k as u64, k as u64) * sign(k)) / ri(k as u64)
        }),
    );
    inner.scale(&-a.clone()).exp()
}

/// `1 + Σ_{m>=1} ((a−m)b+1)^{(m−1)} · ab · t^m / m!`.
fn pochhammer_side(a: &BigRational, b: u32, order: usize) -> Series {
    let bb = ri(b);
    Series::from_coeffs(
        order,
        (0..=order).map(|m| {
            if m == 0 {
                return BigRational::one();
            }
            let base = (a - ri(m as u64)) * &bb + BigRational::one();
            let mut rising = BigRational::one();
            for i in 0..m - 1 {
                rising *= &base + ri(i as u64);
            }
            rising * a * &bb / ri(factorial(m as u64))
        }),
    )
}

/// The exponential identity plus the algebraic and differential equations of its `a = 1` case.
pub fn gen_series_identity(a: &BigRational, b: u32, order: usize) -> VerificationReport {
    let params = [("a", rat_json(a)), ("b", json!(b)), ("order", json!(order))];
    let lhs = exp_side(a, b, order);
    let rhs = pochhammer_side(a, b, order);
    let mut rep = VerificationReport::new("gen_series", &params).compare(&lhs, &rhs);
    if b < 2 {
        return rep.fail("b must be at least 2");
    }
    let z = pochhammer_side(&BigRational::one(), b, order);
    let t = Series::t(order);
    if z.pow(b - 1) != z.sub(&t).pow(b) {
        rep = rep.fail("Z^(b-1) != (Z - t)^b");
    }
    let low = order.saturating_sub(1);
    let dz = z.derivative();
    let bt = t.scale(&ri(b - 1));
    if dz.mul(&z.add(&bt)).truncate(low) != z.scale(&ri(b)).truncate(low) {
        rep = rep.fail("Z'(Z + (b-1)t) != bZ");
    }
    let dlog = Series::from_coeffs(order, (0..=order).map(|k| ri(binomial(b as u64 * (k as u64 + 1), k as u64 + 1) * sign(k))));
    if dz.truncate(low) != z.mul(&dlog).truncate(low) {
        rep = rep.fail("Z' != Z · Σ C(bk,k)(-t)^(k-1)");
    }
    rep.note("checked: exponential form, Z^(b-1) = (Z-t)^b, Z'/Z = b/(Z+(b-1)t), logarithmic derivative")
}

/// `(rn+1)/(rn−k+1) · C(r((r+1)n−k+1), k)`.
pub fn subste_image(n: usize, r: u32, k: usize) -> BigRational {
    let (nn, rr, kk) = (n as u64, r as u64, k as u64);
    BigRational::new(
        BigInt::from(rr * nn + 1) * binomial(rr * ((rr + 1) * nn - kk + 1), kk),
        BigInt::from(rr * nn - kk + 1),
    )
}

/// Image of `e_k` under `p_j ↦ (rn+1) C((r+1)j, j)`, for `1 <= k <= n`, three ways.
pub fn subste_check(n: usize, r: u32) -> Result<VerificationReport, VerifyError> {
    let a = ri(r as u64 * n as u64 + 1);
    let series = exp_side(&a, r + 1, n);
    let phi = |j: u32| Some(&a * ri(binomial((r as u64 + 1) * j as u64, j as u64)));
    let mut pleth = Vec::new();
    let mut formula = Vec::new();
    let mut rep = VerificationReport::new("subste", &[("n", json!(n)), ("r", json!(r))]);
    for k in 1..=n {
        let ek = SymFunc::<BigRational>::basis_element(Basis::Elementary, &Partition::new(vec![k as u32]));
        let v: BigRational = plethystic_point_eval(&ek, phi)?;
        let f = subste_image(n, r, k);
        if series.coeff(k) != &f {
            rep = rep.fail(format!("series coefficient of t^{k} is {} but the image is {f}", series.coeff(k)));
        }
        pleth.push(v);
        formula.push(f);
    }
    let show = |v: &[BigRational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    let pass = pleth == formula && rep.witness.is_none();
    rep.lhs = json!(show(&pleth));
    rep.rhs = json!(show(&formula));
    rep.pass = pass;
    if pleth != formula && rep.witness.is_none() {
        rep.witness = pleth
            .iter()
            .zip(&formula)
            .position(|(x, y)| x != y)
            .map(|i| format!("e_{}: {} vs {}", i + 1, pleth[i], formula[i]));
    }
    Ok(rep.note("image of e_k with n fixed; series coefficients agree"))
}

fn u_power_sum(k: u32) -> QPoly3 {
    let mut p = QPoly3::new();
    for i in 0..3 {
        let mut e = [0; 3];
        e[i] = k;
        p.add_term(e, BigRational::one());
    }
    p
}

fn u_elementary(k: u32) -> QPoly3 {
    let mut p = QPoly3::new();
    match k {
        0 => p.add_term([0, 0, 0], BigRational::one()),
        1 => return u_power_sum(1),
        2 => {
            for e in [[1, 1, 0], [1, 0, 1], [0, 1, 1]] {
                p.add_term(e, BigRational::one());
            }
        }
        3 => p.add_term([1, 1, 1], BigRational::one()),
        _ => {}
    }
    p
}

/// `Σ_λ (−1)^{n−ℓ} p_λ(u) p_λ(w)/z_λ = Σ_λ e_λ(u) m_λ(w)` with three letters `u`.
pub fn cauchy_check(n: usize) -> Result<VerificationReport, VerifyError> {
    let lhs_terms = partitions_of(n).into_iter().map(|l| {
        let mut c = QPoly3::constant(BigRational::new(BigInt::from(sign(n - l.len())), z_of(&l)));
        for &k in l.parts() {
            c = &c * &u_power_sum(k);
        }
        (l, c)
    });
    let lhs = SymFunc::<QPoly3>::from_basis(Basis::PowerSum, n, lhs_terms)?;
    let rhs_terms = partitions_of(n).into_iter().map(|l| {
        let c = l.parts().iter().fold(QPoly3::constant(BigRational::one()), |acc, &k| &acc * &u_elementary(k));
        (l, c)
    });
    let rhs = SymFunc::<QPoly3>::from_basis(Basis::Monomial, n, rhs_terms)?;
    let mut rep = VerificationReport::new("cauchy", &[("n", json!(n)), ("letters", json!(3))]);
    rep.lhs = lhs.to_json();
    rep.rhs = rhs.to_json();
    rep.pass = lhs == rhs;
    if let Some((l, a, b)) = lhs.first_difference(&rhs, Basis::Monomial) {
        rep.witness = Some(format!("coefficient of m[{l}]: {a} vs {b}"));
    }
    Ok(rep)
}
