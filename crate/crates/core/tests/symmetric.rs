use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rtamari::symcore::{
    character_value, expand_symmetric, fundamental, kostka, partitions_of, schur_decompose_q3, schur_recompose_q3,
    standard_tableaux_count, z_of, Basis, Composition, Partition, SymFunc,
};
use rtamari::util::factorial;

type Sf = SymFunc<BigRational>;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn arb_coeffs(n: usize) -> impl Strategy<Value = BTreeMap<Partition, BigRational>> {
    let parts = partitions_of(n);
    proptest::collection::vec(-6i64..=6, parts.len()).prop_map(move |cs| {
        parts.iter().cloned().zip(cs).filter(|(_, c)| *c != 0).map(|(l, c)| (l, q(c))).collect()
    })
}

fn arb_basis() -> impl Strategy<Value = Basis> {
    proptest::sample::select(Basis::ALL.to_vec())
}

proptest! {
    #[test]
    fn basis_round_trip(n in 1usize..6, basis in arb_basis(), seed in arb_coeffs(5)) {
        let coeffs: BTreeMap<Partition, BigRational> = if n == 5 { seed } else {
            partitions_of(n).into_iter().enumerate().map(|(i, l)| (l, q(i as i64 - 1))).filter(|(_, c)| !c.is_zero()).collect()
        };
        let f = Sf::from_basis(basis, n, coeffs.clone()).unwrap();
        prop_assert_eq!(f.coefficients(basis), coeffs);
    }

    #[test]
    fn omega_is_an_involution(coeffs in arb_coeffs(5), basis in arb_basis()) {
        let f = Sf::from_basis(basis, 5, coeffs).unwrap();
        prop_assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn json_round_trip(coeffs in arb_coeffs(4)) {
        let f = Sf::from_basis(Basis::Schur, 4, coeffs).unwrap();
        prop_assert_eq!(Sf::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn schur_q3_round_trip(cs in proptest::collection::vec(0i64..4, 10)) {
        let shapes: Vec<Vec<u32>> = vec![vec![], vec![1], vec![2], vec![1, 1], vec![3], vec![2, 1], vec![1, 1, 1], vec![4], vec![3, 1], vec![2, 2]];
        let coeffs: BTreeMap<Partition, BigRational> = shapes
            .into_iter()
            .zip(cs)
            .filter(|(_, c)| *c != 0)
            .map(|(s, c)| (Partition::new(s), q(c)))
            .collect();
        prop_assert_eq!(schur_decompose_q3(&schur_recompose_q3(&coeffs)).unwrap(), coeffs);
    }
}

#[test]
fn omega_swaps_e_and_h_and_conjugates_schur() {
    for n in 1..=6 {
        for l in partitions_of(n) {
            let e = Sf::basis_element(Basis::Elementary, &l);
            assert_eq!(e.omega(), Sf::basis_element(Basis::Homogeneous, &l));
            let s = Sf::basis_element(Basis::Schur, &l);
            assert_eq!(s.omega(), Sf::basis_element(Basis::Schur, &l.conjugate()));
        }
    }
}

#[test]
fn character_orthogonality() {
    for n in 1..=6 {
        let parts = partitions_of(n);
        for a in &parts {
            for b in &parts {
                let mut sum = BigRational::zero();
                for mu in &parts {
                    let x = character_value(a, mu).unwrap() * character_value(b, mu).unwrap();
                    sum += BigRational::new(x, z_of(mu));
                }
                let want = if a == b { BigRational::one() } else { BigRational::zero() };
                assert_eq!(sum, want, "{a} {b}");
            }
        }
        let squares: BigInt = parts.iter().map(|l| standard_tableaux_count(l).pow(2)).sum();
        assert_eq!(squares, factorial(n as u64));
    }
}

#[test]
fn power_sums_expand_by_characters() {
    for n in 1..=5 {
        for mu in partitions_of(n) {
            let p = Sf::basis_element(Basis::PowerSum, &mu).coefficients(Basis::Schur);
            for l in partitions_of(n) {
                let c = p.get(&l).cloned().unwrap_or_default();
                assert_eq!(c, BigRational::from_integer(character_value(&l, &mu).unwrap()), "p{mu} s{l}");
            }
        }
    }
}

#[test]
fn complete_expands_by_kostka() {
    for n in 1..=5 {
        for mu in partitions_of(n) {
            let h = Sf::basis_element(Basis::Homogeneous, &mu).coefficients(Basis::Schur);
            for l in partitions_of(n) {
                let c = h.get(&l).cloned().unwrap_or_default();
                assert_eq!(c, BigRational::from_integer(kostka(&l, mu.parts())));
            }
        }
    }
}

#[test]
fn fundamentals_over_permutations_give_h1_power() {
    use itertools::Itertools;
    for n in 1..=5usize {
        let mut total = expand_symmetric(&Sf::zero(n), n);
        for sigma in (0..n).permutations(n) {
            let descents: Vec<usize> = (1..n).filter(|&i| sigma[i - 1] > sigma[i]).collect();
            let c = Composition::from_descent_set(n, &descents);
            total.add_scaled(&fundamental(&c).unwrap(), &BigRational::one());
        }
        let h1n = Sf::basis_element(Basis::Homogeneous, &Partition::new(vec![1; n]));
        assert_eq!(total.to_symmetric().unwrap(), h1n);
    }
}
