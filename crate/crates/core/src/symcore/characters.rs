use num_bigint::BigInt;

use super::partition::Partition;
use super::SymError;

/// Irreducible character `χ^λ` of the symmetric group on the class of cycle type `μ`.
///
/// Murnaghan–Nakayama recursion on beta-sets: removing a rim hook of length `k`
/// moves one bead from `b` to `b - k`, with sign `(-1)` to the number of beads
/// strictly between.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<BigInt, SymError> {
    if lambda.weight() != mu.weight() {
        return Err(SymError::WeightMismatch {
            expected: lambda.weight(),
            found: mu.weight(),
        });
    }
    let l = lambda.len();
    let beads: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i) as u32)
        .collect();
    Ok(BigInt::from(mn(&beads, mu.parts())))
}

fn mn(beads: &[u32], cycles: &[u32]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beads.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beads.contains(&target) {
            continue;
        }
        let between = beads.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beads.to_vec();
        next[idx] = target;
        let s = if between % 2 == 0 { 1 } else { -1 };
        total += s * mn(&next, rest);
    }
    total
}

/// Number of standard Young tableaux of shape `λ`, i.e. `χ^λ(1^n)`.
pub fn standard_tableaux_count(lambda: &Partition) -> BigInt {
    character_value(lambda, &Partition::column(lambda.weight())).expect("same weight")
}

/// Cycle-type representative: consecutive cycles `(0 1 .. μ_1-1)(μ_1 ..)...` as an image list.
pub fn class_representative(mu: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(mu.weight());
    let mut start = 0;
    for &k in mu.parts() {
        let k = k as usize;
        for i in 0..k {
            perm.push(start + (i + 1) % k);
        }
        start += k;
    }
    perm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::partition::{partitions_of, z_of};
    use crate::symcore::{Basis, SymFunc};
    use crate::util::{factorial, sign};
    use num_rational::BigRational;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                assert_eq!(character_value(&p(&[n as u32]), &mu).unwrap(), BigInt::from(1));
                let s = sign(n - mu.len());
                assert_eq!(character_value(&Partition::column(n), &mu).unwrap(), BigInt::from(s));
            }
        }
        assert_eq!(character_value(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn weight_mismatch_rejected() {
        assert!(character_value(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn hook_length_oracle() {
        for n in 1..=7 {
            for lambda in partitions_of(n) {
                let conj = lambda.conjugate();
                let mut hooks = BigInt::from(1);
                for (i, &row) in lambda.parts().iter().enumerate() {
                    for j in 0..row as usize {
                        let arm = row as usize - j - 1;
                        let leg = conj.part(j) as usize - i - 1;
                        hooks *= arm + leg + 1;
                    }
                }
                assert_eq!(standard_tableaux_count(&lambda), factorial(n as u64) / hooks);
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                let sum: BigInt = partitions_of(n)
                    .iter()
                    .map(|l| {
                        let c = character_value(l, &mu).unwrap();
                        &c * &c
                    })
                    .sum();
                assert_eq!(sum, z_of(&mu));
            }
        }
    }

    #[test]
    fn power_sums_expand_by_characters() {
        // Independent route: p_μ = Σ_λ χ^λ(μ) s_λ via the basis conversions.
        for n in 1..=5 {
            for mu in partitions_of(n) {
                let pm = SymFunc::<BigRational>::basis_element(Basis::PowerSum, &mu);
                let schur = pm.coefficients(Basis::Schur);
                for lambda in partitions_of(n) {
                    let expected = character_value(&lambda, &mu).unwrap();
                    let got = schur.get(&lambda).cloned().unwrap_or_default();
                    assert_eq!(got, BigRational::from_integer(expected));
                }
            }
        }
    }

    #[test]
    fn class_representatives_have_cycle_type() {
        assert_eq!(class_representative(&p(&[2, 1])), vec![1, 0, 2]);
        assert_eq!(class_representative(&p(&[3])), vec![1, 2, 0]);
    }
}
