use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{tables, VerificationReport, VerifyError};
use crate::harmonics::{
    closure_space, commutator_check, higher_space, kernel_space, kernel_space_up_to, GradedSpace, Mono, Row, XPoly,
};
use crate::symcore::{is_schur_positive, render_schur_q3, schur_decompose_q3, Partition, QPoly3};

fn schur_string(p: &QPoly3) -> Result<String, VerifyError> {
    Ok(render_schur_q3(&schur_decompose_q3(p)?))
}

fn frobenius_string(f: &BTreeMap<Partition, QPoly3>) -> Result<String, VerifyError> {
    let mut rows = Vec::new();
    for (l, p) in f.iter().rev() {
        if !p.is_zero() {
            rows.push(format!("({})S{l}", schur_string(p)?));
        }
    }
    Ok(rows.join(" + "))
}

fn ones() -> [BigRational; 3] {
    [BigRational::one(), BigRational::one(), BigRational::one()]
}

/// The kernel `DH_n` against the printed tables, dimension counts and the alternating part.
pub fn kernel_table_check(n: usize) -> Result<VerificationReport, VerifyError> {
    let space = kernel_space(n)?;
    let frob = space.frobenius()?;
    let hilbert = space.hilbert_series();
    let mut rep = VerificationReport::new("harmonics", &[("n", json!(n))]);
    rep.lhs = json!({"hilbert": schur_string(&hilbert)?, "frobenius": frobenius_string(&frob)?});
    match (tables::hilbert(n), tables::frobenius(n)) {
        (Some(h), Some(f)) => {
            rep.rhs = json!({"hilbert": schur_string(&h)?, "frobenius": frobenius_string(&f)?});
            rep.pass = h == hilbert && f == frob;
            if h != hilbert {
                rep.witness = Some("Hilbert series differs from the table".into());
            } else if f != frob {
                let l = f.keys().chain(frob.keys()).find(|l| f.get(*l) != frob.get(*l)).cloned();
                rep.witness = l.map(|l| format!("coefficient of S{l} differs"));
            }
        }
        _ => {
            rep.rhs = json!("no table");
            rep.pass = true;
            rep.notes.push(format!("no printed table for n = {n}; structural checks only"));
        }
    }
    let nn = n as u64;
    let dim = BigInt::from(space.dim());
    let want_dim = BigInt::from(2u32).pow(n as u32) * BigInt::from(nn + 1).pow((n as u32).saturating_sub(2));
    let want_dim = if n == 1 { BigInt::one() } else { want_dim };
    if dim != want_dim {
        rep = rep.fail(format!("dimension {dim}, expected 2^n (n+1)^(n-2) = {want_dim}"));
    }
    let mut bivariate = BigInt::zero();
    for (d, k) in space.dims() {
        if d[2] == 0 {
            bivariate += k;
        }
    }
    let want_bi = BigInt::from(nn + 1).pow((n as u32).saturating_sub(1));
    if bivariate != want_bi {
        rep = rep.fail(format!("z-free part has dimension {bivariate}, expected (n+1)^(n-1) = {want_bi}"));
    }
    let alt = frob.get(&Partition::new(vec![1; n])).map(|p| p.eval(&ones())).unwrap_or_default();
    let intervals = super::interval_formula_rhs(n, 1);
    if alt != intervals {
        rep = rep.fail(format!("alternating part has dimension {alt}, interval count is {intervals}"));
    }
    if !is_schur_positive(&schur_decompose_q3(&hilbert)?) {
        rep = rep.fail("Hilbert series is not Schur positive");
    }
    for (l, p) in &frob {
        if !p.is_symmetric() || !is_schur_positive(&schur_decompose_q3(p)?) {
            rep = rep.fail(format!("coefficient of S{l} is not Schur positive"));
        }
    }
    if !space.is_stable() {
        rep = rep.fail("kernel is not stable under the diagonal action");
    }
    rep.notes.push(format!("dimension {dim}, z-free dimension {bivariate}, alternating dimension {alt}"));
    Ok(rep)
}

/// Components of total degree `C(n,2)+1` and `C(n,2)+2` vanish.
pub fn degree_bound_check(n: usize) -> Result<VerificationReport, VerifyError> {
    let top = (n * (n - 1) / 2) as u32;
    let space = kernel_space_up_to(n, top + 2)?;
    let above: usize = space.dims().iter().filter(|(d, _)| d.iter().sum::<u32>() > top).map(|(_, k)| *k).sum();
    let at_top: usize = space.dims().iter().filter(|(d, _)| d.iter().sum::<u32>() == top).map(|(_, k)| *k).sum();
    let mut rep = VerificationReport::new("degree_bound", &[("n", json!(n)), ("checked_up_to", json!(top + 2))])
        .compare(&above, &0);
    if at_top == 0 {
        rep = rep.fail(format!("no component in total degree {top}"));
    }
    Ok(rep.note(format!("total degree {top} has dimension {at_top}")))
}

/// Closure of `Δ_n(x)` under derivatives and polarizations equals the kernel.
pub fn closure_check(n: usize) -> Result<VerificationReport, VerifyError> {
    let closure = closure_space(n)?;
    let kernel = kernel_space(n)?;
    let mut rep = VerificationReport::new("closure", &[("n", json!(n))]);
    rep.lhs = json!(schur_string(&closure.hilbert_series())?);
    rep.rhs = json!(schur_string(&kernel.hilbert_series())?);
    rep.pass = closure.hilbert_series() == kernel.hilbert_series();
    if !rep.pass {
        rep.witness = Some("Hilbert series differ".into());
    }
    if let Some(d) = first_escape(&closure, &kernel) {
        rep = rep.fail(format!("closure element of degree {d:?} is not harmonic"));
    }
    Ok(rep)
}

fn first_escape(inner: &GradedSpace, outer: &GradedSpace) -> Option<[u32; 3]> {
    inner.degrees().find(|&d| inner.component(d).iter().any(|v| !outer.contains(v)))
}

/// `H^(r)_2` with cutoff `r+1`: dimension `(r+1)²`, Hilbert series `s_{r−1} + s_r`.
pub fn higher_space_check(r: u32) -> Result<VerificationReport, VerifyError> {
    let h = higher_space(2, r, r + 1)?;
    let (inv, alt) = h.invariant_alternant_dims()?;
    let hilbert = h.space.hilbert_series();
    let (rr, r1) = (r as usize, r as usize + 1);
    let lhs = format!("dim {}, split ({inv}, {alt}), Hilbert {}", h.space.dim(), schur_string(&hilbert)?);
    let mut want = BTreeMap::new();
    if r >= 2 {
        want.insert(Partition::new(vec![r - 1]), BigRational::one());
    } else {
        want.insert(Partition::new(vec![]), BigRational::one());
    }
    want.insert(Partition::new(vec![r]), BigRational::one());
    let rhs = format!("dim {}, split ({}, {}), Hilbert {}", r1 * r1, rr * r1 / 2, r1 * (rr + 2) / 2, render_schur_q3(&want));
    let mut rep = VerificationReport::new("higher", &[("n", json!(2)), ("r", json!(r)), ("cutoff", json!(r + 1))])
        .compare(&lhs, &rhs);
    if h.top_degree_nonzero {
        rep = rep.fail(format!("non-zero component in total degree {}", r + 1));
    }
    if h.space.sign_twist() {
        rep.notes.push("diagonal action twisted by the sign".into());
    }
    Ok(rep)
}

fn random_poly<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> XPoly {
    let mut p = XPoly::zero(n);
    for _ in 0..rng.random_range(1..=4) {
        let mut m = Mono::one();
        let mut budget = rng.random_range(0..=max_deg);
        while budget > 0 {
            let row = Row::ALL[rng.random_range(0..3)];
            let col = rng.random_range(0..n);
            m.set(row, col, m.get(row, col) + 1);
            budget -= 1;
        }
        p.add_term(m, BigRational::from_integer(BigInt::from(rng.random_range(-5i32..=5))));
    }
    p
}

/// `[P_α(∂), E_uv^(k)] = α_u P_β(∂)` on `count` random polynomials in three columns.
pub fn commutator_random_check(count: usize, seed: u64) -> Result<VerificationReport, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut tried = 0usize;
    while tried < count {
        let u = Row::ALL[rng.random_range(0..3)];
        let v = Row::ALL[(u.index() + rng.random_range(1..3)) % 3];
        let mut alpha = [0u32; 3];
        for a in &mut alpha {
            *a = rng.random_range(0..=2);
        }
        alpha[u.index()] = alpha[u.index()].max(1);
        let k = rng.random_range(1..=2);
        let p = random_poly(&mut rng, 3, 5);
        tried += 1;
        if !commutator_check(alpha, k, u, v, &p)? {
            failures.push(format!("alpha={alpha:?} k={k} E_{}{} on {p}", u.name(), v.name()));
        }
    }
    let mut rep = VerificationReport::new("commutator", &[("count", json!(count)), ("seed", json!(seed))])
        .compare(&(count - failures.len()), &count);
    if let Some(f) = failures.first() {
        rep.witness = Some(f.clone());
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        for n in 1..=3 {
            let r = kernel_table_check(n).unwrap();
            assert!(r.pass, "n = {n}: {:?}", r.witness);
        }
        assert_eq!(kernel_table_check(2).unwrap().lhs["hilbert"], json!("1 + s1"));
    }

    #[test]
    fn closure_and_bound() {
        assert!(closure_check(3).unwrap().pass);
        assert!(degree_bound_check(3).unwrap().pass);
    }

    #[test]
    fn higher_small() {
        for r in 1..=3 {
            let rep = higher_space_check(r).unwrap();
            assert!(rep.pass, "{}", rep.summary());
        }
    }

    #[test]
    fn commutator_random() {
        assert!(commutator_random_check(40, 7).unwrap().pass);
    }
}
