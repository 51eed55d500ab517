//! Harmonic kernels, solved in translation-reduced coordinates.
//!
//! Every harmonic polynomial is killed by `Σ_j ∂x_j` (and the `y`, `z` analogues),
//! so it is a polynomial in `u_j = x_j − x_n`, `j < n`. In those coordinates
//! `∂x_j = ∂u_j` for `j < n` and `∂x_n = −D` with `D = Σ_j ∂u_j`, which removes
//! the `|α| = 1` equations and a third of the unknowns.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::linalg::{Echelon, SparseRow, SpanBasis};
use super::space::{GradedSpace, TriDegree};
use super::xpoly::{alphas, Mono, Row, XPoly, MAX_COLS};
use super::HarmonicsError;
use crate::util::binomial;

/// Monomials of tri-degree `d` in the first `ncols` columns.
pub fn monomials_of_degree(ncols: usize, d: TriDegree) -> Vec<Mono> {
    fn spread(total: u32, ncols: usize) -> Vec<Vec<u8>> {
        if ncols == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in (0..=total).rev() {
            for mut rest in spread(total - first, ncols - 1) {
                rest.insert(0, first as u8);
                out.push(rest);
            }
        }
        out
    }
    let rows: Vec<Vec<Vec<u8>>> = d.iter().map(|&t| spread(t, ncols)).collect();
    let mut out = Vec::new();
    for a in &rows[0] {
        for b in &rows[1] {
            for c in &rows[2] {
                let mut m = Mono::one();
                for j in 0..ncols {
                    m.set(Row::X, j, a[j]);
                    m.set(Row::Y, j, b[j]);
                    m.set(Row::Z, j, c[j]);
                }
                out.push(m);
            }
        }
    }
    out.sort_unstable();
    out
}

/// All tri-degrees with `|d| <= total`.
pub fn degrees_up_to(total: u32) -> Vec<TriDegree> {
    let mut out = Vec::new();
    for t in 0..=total {
        for a in (0..=t).rev() {
            for b in (0..=t - a).rev() {
                out.push([a, b, t - a - b]);
            }
        }
    }
    out
}

/// `P_α(∂X)` written in `u`-coordinates over `n − 1` columns.
fn p_alpha_u(p: &XPoly, alpha: [u32; 3]) -> XPoly {
    let m = p.n();
    let mut out = XPoly::zero(m);
    for j in 0..m {
        let mut a = Mono::one();
        for row in Row::ALL {
            a.set(row, j, alpha[row.index()] as u8);
        }
        out.add_scaled(&p.differentiate_mono(&a), &BigRational::one());
    }
    let mut d = p.clone();
    for row in Row::ALL {
        for _ in 0..alpha[row.index()] {
            let mut next = XPoly::zero(m);
            for j in 0..m {
                next.add_scaled(&d.differentiate(row, j, 1), &BigRational::one());
            }
            d = next;
        }
    }
    let sign = if alpha.iter().sum::<u32>() % 2 == 0 { 1 } else { -1 };
    out.add_scaled(&d, &BigRational::from_integer(BigInt::from(sign)));
    out
}

/// Substitutes `u_j = x_j − x_n`.
pub fn expand_translation(q: &XPoly, n: usize) -> XPoly {
    let m = n - 1;
    let mut out = XPoly::zero(n);
    for (mono, c) in q.terms() {
        // Choose, per variable u_j of each row, how much of (x_j − x_n)^e goes to x_j.
        let mut partial: Vec<(Mono, BigInt)> = vec![(Mono::one(), BigInt::one())];
        for row in Row::ALL {
            for j in 0..m {
                let e = mono.get(row, j);
                if e == 0 {
                    continue;
                }
                let mut next = Vec::with_capacity(partial.len() * (e as usize + 1));
                for (pm, pc) in &partial {
                    for k in 0..=e {
                        let mut nm = *pm;
                        nm.set(row, j, k);
                        nm.set(row, n - 1, pm.get(row, n - 1) + (e - k));
                        let mut nc = pc * binomial(e as u64, k as u64);
                        if (e - k) % 2 == 1 {
                            nc = -nc;
                        }
                        next.push((nm, nc));
                    }
                }
                partial = next;
            }
        }
        for (pm, pc) in partial {
            out.add_term(pm, c * BigRational::from_integer(pc));
        }
    }
    out
}

/// Kernel basis of tri-degree `d` in `u`-coordinates.
fn kernel_u(n: usize, d: TriDegree) -> Vec<XPoly> {
    let m = n - 1;
    let cols = monomials_of_degree(m, d);
    if cols.is_empty() {
        return Vec::new();
    }
    let index: BTreeMap<Mono, usize> = cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let total: u32 = d.iter().sum();
    let ops: Vec<[u32; 3]> = alphas(2, n as u32)
        .into_iter()
        .filter(|a| (0..3).all(|i| a[i] <= d[i]))
        .collect();
    let mut ech = Echelon::new();
    if total > 0 {
        for alpha in ops {
            let mut rows: BTreeMap<Mono, SparseRow> = BTreeMap::new();
            for (k, c) in cols.iter().enumerate() {
                let img = p_alpha_u(&XPoly::monomial(m, *c, BigRational::one()), alpha);
                for (t, v) in img.terms() {
                    rows.entry(*t).or_default().push((k, v.to_integer()));
                }
            }
            for row in rows.into_values() {
                ech.insert(row);
                if ech.rank() == cols.len() {
                    return Vec::new();
                }
            }
        }
    }
    ech.kernel(cols.len())
        .into_iter()
        .map(|v| {
            let mut terms = BTreeMap::new();
            for (k, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    terms.insert(cols[k], BigRational::from_integer(c));
                }
            }
            debug_assert!(terms.keys().all(|t| index.contains_key(t)));
            XPoly::from_terms(m, terms)
        })
        .collect()
}

/// Harmonic component of tri-degree `d`, certified against every `P_α`, `1 <= |α| <= n`.
pub fn kernel_component(n: usize, d: TriDegree) -> Result<SpanBasis, HarmonicsError> {
    if n == 0 || n > MAX_COLS {
        return Err(HarmonicsError::BadParameters(format!("n = {n} outside 1..={MAX_COLS}")));
    }
    let mut basis = SpanBasis::new(n);
    if n == 1 {
        if d == [0, 0, 0] {
            basis.insert(&XPoly::one(1));
        }
        return Ok(basis);
    }
    for q in kernel_u(n, d) {
        let f = expand_translation(&q, n);
        for alpha in alphas(1, n as u32) {
            if !f.p_alpha_apply(alpha).is_zero() {
                return Err(HarmonicsError::Certificate { degree: d, alpha });
            }
        }
        basis.insert(&f);
    }
    Ok(basis)
}

/// Harmonics in every tri-degree with `|d| <= max_total`, solved in parallel.
pub fn kernel_space_up_to(n: usize, max_total: u32) -> Result<GradedSpace, HarmonicsError> {
    let degrees = degrees_up_to(max_total);
    let parts: Vec<(TriDegree, SpanBasis)> = degrees
        .into_par_iter()
        .map(|d| kernel_component(n, d).map(|b| (d, b)))
        .collect::<Result<_, _>>()?;
    let mut space = GradedSpace::new(n, false);
    for (d, b) in parts {
        space.set_component(d, b);
    }
    Ok(space)
}

/// The space of diagonal harmonics in three rows of `n` variables.
pub fn kernel_space(n: usize) -> Result<GradedSpace, HarmonicsError> {
    kernel_space_up_to(n, (n * n.saturating_sub(1) / 2) as u32)
}
