use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rtamari::harmonics::{
    alphas, commutator_check, frobenius_coefficient, kernel_space, vandermonde, GradedSpace, Mono, Row, SpanBasis,
    TriDegree, XPoly,
};
use rtamari::symcore::{partitions_of, standard_tableaux_count};
use Row::{X, Y, Z};

fn kernel3() -> &'static GradedSpace {
    static K: OnceLock<GradedSpace> = OnceLock::new();
    K.get_or_init(|| kernel_space(3).unwrap())
}

fn d(p: &XPoly, row: Row, col: usize) -> XPoly {
    p.differentiate(row, col, 1)
}

fn e(p: &XPoly, u: Row, v: Row, k: u32) -> XPoly {
    p.e_op_apply(u, v, k).unwrap()
}

/// The listed bases of the tri-degree components for three columns.
fn b_table() -> Vec<(TriDegree, Vec<XPoly>)> {
    let mut out = Vec::new();
    for (row, slot) in [(X, 0), (Y, 1), (Z, 2)] {
        let delta = vandermonde(3, row);
        let deg = |k: u32| {
            let mut t = [0; 3];
            t[slot] = k;
            t
        };
        out.push((deg(3), vec![delta.clone()]));
        out.push((deg(2), vec![d(&delta, row, 0), d(&delta, row, 1)]));
        // The printed B_001 has ∂x1 ∂z2; the degree forces ∂z1 ∂z2.
        out.push((deg(1), vec![d(&d(&delta, row, 0), row, 0), d(&d(&delta, row, 0), row, 1)]));
    }
    let dx = vandermonde(3, X);
    let dy = vandermonde(3, Y);
    out.push(([2, 1, 0], vec![e(&dx, Y, X, 1)]));
    out.push(([1, 2, 0], vec![e(&e(&dx, Y, X, 1), Y, X, 1)]));
    out.push(([2, 0, 1], vec![e(&dx, Z, X, 1)]));
    out.push(([1, 0, 2], vec![e(&e(&dx, Z, X, 1), Z, X, 1)]));
    out.push(([0, 2, 1], vec![e(&dy, Z, Y, 1)]));
    out.push(([0, 1, 2], vec![e(&e(&dy, Z, Y, 1), Z, Y, 1)]));
    for (deg, u, v, delta) in [([1, 1, 0], Y, X, &dx), ([1, 0, 1], Z, X, &dx), ([0, 1, 1], Z, Y, &dy)] {
        out.push((
            deg,
            vec![e(&d(delta, v, 0), u, v, 1), e(&d(delta, v, 1), u, v, 1), e(delta, u, v, 2)],
        ));
    }
    out.push(([0, 0, 0], vec![XPoly::one(3)]));
    out.push(([1, 1, 1], vec![e(&e(&dx, Y, X, 1), Z, X, 1)]));
    out
}

#[test]
fn listed_bases_span_each_component() {
    let k = kernel3();
    let table = b_table();
    assert_eq!(table.len(), 20);
    for (deg, elems) in &table {
        let mut span = SpanBasis::new(3);
        for p in elems {
            assert_eq!(p.tdeg(), Some(*deg), "{p}");
            assert!(k.contains(p), "{p} not harmonic");
            span.insert(p);
        }
        assert_eq!(span.dim(), elems.len(), "degree {deg:?}: listed elements dependent");
        assert_eq!(k.component(*deg).len(), elems.len(), "degree {deg:?}");
    }
    let listed: usize = table.iter().map(|(_, e)| e.len()).sum();
    assert_eq!(listed, k.dim());
    assert_eq!(k.dim(), 32);
    let printed_b001 = d(&d(&vandermonde(3, Z), X, 0), Z, 1);
    assert!(printed_b001.is_zero());
}

#[test]
fn two_columns_basis_degrees() {
    let k = kernel_space(2).unwrap();
    let degs: Vec<TriDegree> = k.dims().into_iter().map(|(d, n)| {
        assert_eq!(n, 1);
        d
    }).collect();
    assert_eq!(degs, [[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0]]);
}

#[test]
fn z_free_part_is_classical() {
    for n in 1..=3usize {
        let k = kernel_space(n).unwrap();
        let bi: usize = k.dims().iter().filter(|(d, _)| d[2] == 0).map(|(_, m)| m).sum();
        assert_eq!(bi, (n + 1).pow(n as u32 - 1), "n = {n}");
    }
}

#[test]
fn frobenius_evaluates_to_dimension() {
    for n in 1..=3usize {
        let k = kernel_space(n).unwrap();
        let f = k.frobenius().unwrap();
        let mut total = BigRational::zero();
        for l in partitions_of(n) {
            let m = frobenius_coefficient(&f, l.parts()).eval_ones();
            total += m * BigRational::from_integer(standard_tableaux_count(&l));
        }
        assert_eq!(total, BigRational::from_integer(BigInt::from(k.dim())));
    }
}

fn arb_poly(n: usize, max_exp: u8) -> impl Strategy<Value = XPoly> {
    proptest::collection::vec((proptest::collection::vec(0..=max_exp, 3 * n), -4i64..=4), 1..5).prop_map(move |terms| {
        let mut p = XPoly::zero(n);
        for (exps, c) in terms {
            let cols: Vec<[u8; 3]> = exps.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
            p.add_term(Mono::from_columns(&cols), BigRational::from_integer(BigInt::from(c)));
        }
        p
    })
}

fn arb_kernel_element() -> impl Strategy<Value = XPoly> {
    let degrees: Vec<TriDegree> = kernel3().degrees().collect();
    proptest::sample::select(degrees).prop_flat_map(|d| {
        let len = kernel3().component(d).len();
        proptest::collection::vec(-3i64..=3, len).prop_map(move |cs| {
            let mut p = XPoly::zero(3);
            for (b, c) in kernel3().component(d).iter().zip(cs) {
                p.add_scaled(b, &BigRational::from_integer(BigInt::from(c)));
            }
            p
        })
    })
}

fn arb_perm3() -> impl Strategy<Value = Vec<usize>> {
    Just(vec![0usize, 1, 2]).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_product_is_operator_pairing(f in arb_poly(3, 2), g in arb_poly(3, 2)) {
        prop_assert_eq!(f.scalar_product(&g), f.apply_as_operator_at_zero(&g));
        prop_assert_eq!(f.scalar_product(&g), g.scalar_product(&f));
    }

    #[test]
    fn kernel_is_stable(p in arb_kernel_element(), sigma in arb_perm3()) {
        prop_assert!(kernel3().contains(&p.diagonal_action(&sigma)));
    }

    #[test]
    fn kernel_elements_are_harmonic(p in arb_kernel_element()) {
        for alpha in alphas(1, 3) {
            prop_assert!(p.p_alpha_apply(alpha).is_zero(), "alpha {:?}", alpha);
        }
    }

    #[test]
    fn derivatives_and_polarizations_stay_in_kernel(p in arb_kernel_element(), col in 0usize..3, u in 0usize..3, dv in 1usize..3) {
        let row = Row::ALL[u];
        let other = Row::ALL[(u + dv) % 3];
        prop_assert!(kernel3().contains(&d(&p, row, col)));
        prop_assert!(kernel3().contains(&e(&p, other, row, 1)));
    }

    #[test]
    fn commutator_identity(p in arb_poly(3, 2), a in proptest::collection::vec(0u32..3, 3), k in 1u32..3, u in 0usize..3, dv in 1usize..3) {
        let (u, v) = (Row::ALL[u], Row::ALL[(u + dv) % 3]);
        let mut alpha = [a[0], a[1], a[2]];
        alpha[u.index()] = alpha[u.index()].max(1);
        prop_assert!(commutator_check(alpha, k, u, v, &p).unwrap());
    }

    #[test]
    fn diagonal_action_composes(p in arb_poly(3, 2), s in arb_perm3(), t in arb_perm3()) {
        let st: Vec<usize> = (0..3).map(|i| s[t[i]]).collect();
        prop_assert_eq!(p.diagonal_action(&t).diagonal_action(&s), p.diagonal_action(&st));
        let one = XPoly::one(3);
        prop_assert_eq!(one.diagonal_action(&s), one);
        prop_assert!(BigRational::one() == XPoly::one(3).constant_term());
    }
}
