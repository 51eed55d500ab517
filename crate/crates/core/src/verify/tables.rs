//! Printed harmonic tables, as Schur expansions in the `q` parameters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::symcore::{schur_recompose_q3, Partition, QPoly3};

/// `(μ, c)` pairs of a Schur expansion `Σ c s_μ(q)`.
pub type SchurTerms = &'static [(&'static [u32], i64)];

/// Hilbert series of the harmonics for `n = 1..=4`.
pub const HILBERT: [SchurTerms; 4] = [
    &[(&[], 1)],
    &[(&[], 1), (&[1], 1)],
    &[(&[], 1), (&[1], 2), (&[2], 2), (&[1, 1], 1), (&[3], 1)],
    &[
        (&[], 1),
        (&[1], 3),
        (&[2], 5),
        (&[1, 1], 3),
        (&[3], 6),
        (&[2, 1], 5),
        (&[1, 1, 1], 1),
        (&[4], 5),
        (&[3, 1], 4),
        (&[5], 3),
        (&[4, 1], 1),
        (&[6], 1),
    ],
];

/// Graded Frobenius characteristic for `n = 1..=4`: `(λ, coefficient of S_λ)`.
pub const FROBENIUS: [&[(&[u32], SchurTerms)]; 4] = [
    &[(&[1], &[(&[], 1)])],
    &[(&[2], &[(&[], 1)]), (&[1, 1], &[(&[1], 1)])],
    &[
        (&[3], &[(&[], 1)]),
        (&[2, 1], &[(&[1], 1), (&[2], 1)]),
        (&[1, 1, 1], &[(&[1, 1], 1), (&[3], 1)]),
    ],
    &[
        (&[4], &[(&[], 1)]),
        (&[3, 1], &[(&[1], 1), (&[2], 1), (&[3], 1)]),
        (&[2, 2], &[(&[2], 1), (&[2, 1], 1), (&[4], 1)]),
        (&[2, 1, 1], &[(&[1, 1], 1), (&[3], 1), (&[2, 1], 1), (&[4], 1), (&[3, 1], 1), (&[5], 1)]),
        (&[1, 1, 1, 1], &[(&[1, 1, 1], 1), (&[3, 1], 1), (&[4, 1], 1), (&[6], 1)]),
    ],
];

pub fn schur_terms(t: SchurTerms) -> BTreeMap<Partition, BigRational> {
    t.iter()
        .map(|(mu, c)| (Partition::new(mu.to_vec()), BigRational::from_integer(BigInt::from(*c))))
        .collect()
}

/// Printed Hilbert series as a polynomial, for `1 <= n <= 4`.
pub fn hilbert(n: usize) -> Option<QPoly3> {
    HILBERT.get(n.checked_sub(1)?).map(|t| schur_recompose_q3(&schur_terms(t)))
}

/// Printed Frobenius characteristic, for `1 <= n <= 4`.
pub fn frobenius(n: usize) -> Option<BTreeMap<Partition, QPoly3>> {
    FROBENIUS.get(n.checked_sub(1)?).map(|rows| {
        rows.iter()
            .map(|(l, t)| (Partition::new(l.to_vec()), schur_recompose_q3(&schur_terms(t))))
            .collect()
    })
}
