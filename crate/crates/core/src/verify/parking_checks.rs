use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::json;

use super::{VerificationReport, VerifyError};
use crate::harmonics::kernel_space;
use crate::parking::{for_each_of_shape, for_each_parking, ParkingFunction};
use crate::symcore::{expand_symmetric, fundamental, Basis, Partition, QuasiSym, SymFunc};
use crate::tamari::{enumerate_paths, fuss_catalan, DyckPath};

type Sf = SymFunc<BigRational>;

/// `|D^(r)_n|` against Fuss–Catalan and `|PF^(r)_n|` against `(rn+1)^{n−1}`.
pub fn parking_count_check(n: usize, r: u32) -> Result<VerificationReport, VerifyError> {
    let paths = BigInt::from(enumerate_paths(n, r).len());
    let mut pf = 0u64;
    for_each_parking(n, r, |_| pf += 1);
    let lhs = format!("{paths} paths, {pf} parking functions");
    let want_pf = BigInt::from(r as u64 * n as u64 + 1).pow(n as u32 - 1);
    let rhs = format!("{} paths, {want_pf} parking functions", fuss_catalan(n, r));
    Ok(VerificationReport::new("counts", &[("n", json!(n)), ("r", json!(r))]).compare(&lhs, &rhs))
}

/// `Σ_{f ∈ PF(β)} Q_{co(f)}` as a quasisymmetric polynomial in `n` letters.
pub fn shape_fundamental_sum(beta: &DyckPath, cache: &mut HashMap<Vec<u32>, QuasiSym<BigRational>>) -> QuasiSym<BigRational> {
    let n = beta.n();
    let mut sum = QuasiSym::zero(n);
    for_each_of_shape(beta, |f| {
        let pf = ParkingFunction::new(f.to_vec(), beta.r()).expect("shape enumeration yields parking functions");
        let co = pf.descent_composition();
        let q = cache
            .entry(co.parts().to_vec())
            .or_insert_with(|| fundamental(&co).expect("non-empty"));
        sum.add_scaled(q, &BigRational::one());
    });
    sum
}

/// `Σ_{f ∈ PF(β)} Q_{co(f)} = h_{co(β)}` for every `β ∈ D^(r)_n`.
pub fn pf_fundamental_sum_check(n: usize, r: u32) -> Result<VerificationReport, VerifyError> {
    let mut cache = HashMap::new();
    let mut rep = VerificationReport::new("fundamental", &[("n", json!(n)), ("r", json!(r))]);
    let paths = enumerate_paths(n, r);
    let mut failures = 0;
    for beta in &paths {
        let lhs = shape_fundamental_sum(beta, &mut cache);
        let h = Sf::basis_element(Basis::Homogeneous, &beta.co().sorted());
        if lhs != expand_symmetric(&h, n) {
            failures += 1;
            if rep.witness.is_none() {
                rep.witness = Some(format!("shape {beta}"));
            }
        }
    }
    rep.lhs = json!(format!("{} shapes with Σ Q_co(f) = h_co(β)", paths.len() - failures));
    rep.rhs = json!(format!("{} shapes", paths.len()));
    rep.pass = failures == 0;
    Ok(rep)
}

/// `Σ_β e_{co(β)}` over Dyck paths against the harmonic Frobenius characteristic at `q = (1,1,0)`.
pub fn fundamental_sum_total_check(n: usize) -> Result<VerificationReport, VerifyError> {
    let mut coeffs: HashMap<Partition, BigRational> = HashMap::new();
    for beta in enumerate_paths(n, 1) {
        *coeffs.entry(beta.co().sorted()).or_default() += BigRational::one();
    }
    let lhs = Sf::from_basis(Basis::Elementary, n, coeffs)?;
    let frob = kernel_space(n)?.frobenius()?;
    let point = [BigRational::one(), BigRational::one(), BigRational::from_integer(0.into())];
    let rhs = Sf::from_basis(Basis::Schur, n, frob.iter().map(|(l, p)| (l.clone(), p.eval(&point))))?;
    Ok(VerificationReport::new("fundamental_total", &[("n", json!(n))])
        .compare_sym(&lhs, &rhs)
        .note("harmonic side specialized at q = (1, 1, 0)"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_shapes() {
        let mut cache = HashMap::new();
        let beta = DyckPath::parse("01", 1).unwrap();
        let s = shape_fundamental_sum(&beta, &mut cache).to_symmetric().unwrap();
        assert_eq!(s, Sf::basis_element(Basis::Homogeneous, &Partition::new(vec![1, 1])));
        assert!(pf_fundamental_sum_check(3, 2).unwrap().pass);
        assert!(parking_count_check(3, 2).unwrap().pass);
    }

    #[test]
    fn total_at_three() {
        let r = fundamental_sum_total_check(3).unwrap();
        assert!(r.pass, "{:?}", r.witness);
        assert_eq!(r.lhs, json!({"S[3]": "1", "S[21]": "5", "S[111]": "5"}));
    }
}
