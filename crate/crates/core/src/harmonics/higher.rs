use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::kernel::{degrees_up_to, monomials_of_degree};
use super::linalg::{nullspace, SpanBasis};
use super::space::{GradedSpace, TriDegree};
use super::xpoly::{alphas, antisymmetrize, p_alpha_poly, Row, XPoly};
use super::HarmonicsError;

/// `H^(r)` truncated at total degree `cutoff`, with a flag for a non-zero top degree.
#[derive(Clone, Debug)]
pub struct HigherSpace {
    pub r: u32,
    pub cutoff: u32,
    pub space: GradedSpace,
    /// Set when some component of total degree `cutoff` is non-zero.
    pub top_degree_nonzero: bool,
}

impl HigherSpace {
    /// Dimensions of the trivial and sign isotypic parts under the twisted action.
    pub fn invariant_alternant_dims(&self) -> Result<(usize, usize), HarmonicsError> {
        let n = self.space.n() as u32;
        let f = self.space.frobenius()?;
        let count = |parts: Vec<u32>| -> usize {
            f.get(&crate::symcore::Partition::new(parts))
                .map_or(0, |p| p.eval_ones().to_integer().try_into().unwrap_or(0))
        };
        Ok((count(vec![n]), count(vec![1; n as usize])))
    }
}

fn sub_degree(d: TriDegree, e: TriDegree) -> Option<TriDegree> {
    (0..3).all(|i| e[i] <= d[i]).then(|| [d[0] - e[0], d[1] - e[1], d[2] - e[2]])
}

fn total(d: TriDegree) -> u32 {
    d.iter().sum()
}

/// Column vectors in `N^3` of total degree at most `t`.
fn columns_up_to(t: u32) -> Vec<[u8; 3]> {
    degrees_up_to(t).into_iter().map(|d| d.map(|x| x as u8)).collect()
}

/// Alternants `R^±(X^A)` with strictly lex-decreasing columns, by tri-degree.
fn alternant_generators(n: usize, cutoff: u32) -> BTreeMap<TriDegree, SpanBasis> {
    let cols = columns_up_to(cutoff);
    let mut out: BTreeMap<TriDegree, SpanBasis> = BTreeMap::new();
    fn go(
        n: usize,
        cols: &[[u8; 3]],
        cutoff: u32,
        chosen: &mut Vec<[u8; 3]>,
        out: &mut BTreeMap<TriDegree, SpanBasis>,
    ) {
        let used: u32 = chosen.iter().map(|c| c.iter().map(|&x| x as u32).sum::<u32>()).sum();
        if chosen.len() == n {
            let p = antisymmetrize(chosen);
            if let Some(d) = p.tdeg() {
                out.entry(d).or_insert_with(|| SpanBasis::new(n)).insert(&p);
            }
            return;
        }
        for c in cols {
            let w: u32 = c.iter().map(|&x| x as u32).sum();
            if used + w > cutoff {
                continue;
            }
            if chosen.last().is_some_and(|last| c >= last) {
                continue;
            }
            chosen.push(*c);
            go(n, cols, cutoff, chosen, out);
            chosen.pop();
        }
    }
    go(n, &cols, cutoff, &mut Vec::new(), &mut out);
    out
}

/// Degree-wise spans of products of `k` generators.
fn powers(gens: &BTreeMap<TriDegree, SpanBasis>, k: u32, n: usize, cutoff: u32) -> BTreeMap<TriDegree, SpanBasis> {
    let mut acc = gens.clone();
    for _ in 1..k {
        let mut next: BTreeMap<TriDegree, SpanBasis> = BTreeMap::new();
        for (e, ge) in gens {
            for (f, af) in &acc {
                let d = [e[0] + f[0], e[1] + f[1], e[2] + f[2]];
                if total(d) > cutoff {
                    continue;
                }
                let slot = next.entry(d).or_insert_with(|| SpanBasis::new(n));
                for a in ge.basis() {
                    for b in af.basis() {
                        slot.insert(&a.mul(b));
                    }
                }
            }
        }
        acc = next;
    }
    acc
}

/// `H^(r)_n = A^(r−1) ∩ (A^(r−1) I_n)^⊥`, computed for `|d| <= cutoff`.
///
/// For `r` even the diagonal action is twisted by the sign.
pub fn higher_space(n: usize, r: u32, cutoff: u32) -> Result<HigherSpace, HarmonicsError> {
    if n < 2 || r == 0 {
        return Err(HarmonicsError::BadParameters(format!("higher space needs n >= 2 and r >= 1, got n={n} r={r}")));
    }
    let staircase = r * (n * (n - 1) / 2) as u32;
    if cutoff < staircase {
        return Err(HarmonicsError::BadParameters(format!("cutoff {cutoff} below r·C(n,2) = {staircase}")));
    }
    let degrees = degrees_up_to(cutoff);
    let ideal_gens = if r == 1 {
        BTreeMap::new()
    } else {
        let gens = alternant_generators(n, cutoff);
        powers(&gens, r - 1, n, cutoff)
    };
    // J_d = (A^(r−1))_d, built upward: products of generators plus variable multiples.
    let mut ideal: BTreeMap<TriDegree, SpanBasis> = BTreeMap::new();
    for &d in &degrees {
        let mut span = SpanBasis::new(n);
        if r == 1 {
            for m in monomials_of_degree(n, d) {
                span.insert(&XPoly::monomial(n, m, BigRational::from_integer(1.into())));
            }
        } else {
            if let Some(g) = ideal_gens.get(&d) {
                for b in g.basis() {
                    span.insert(b);
                }
            }
            for row in Row::ALL {
                let mut e = [0; 3];
                e[row.index()] = 1;
                let Some(lower) = sub_degree(d, e).and_then(|l| ideal.get(&l)) else { continue };
                for j in 0..n {
                    let x = XPoly::var(n, row, j);
                    for b in lower.basis() {
                        span.insert(&x.mul(b));
                    }
                }
            }
        }
        ideal.insert(d, span);
    }
    let mut space = GradedSpace::new(n, r % 2 == 0);
    let mut top_degree_nonzero = false;
    for &d in &degrees {
        let j = &ideal[&d];
        if j.dim() == 0 {
            continue;
        }
        let mut w = SpanBasis::new(n);
        for alpha in alphas(1, n as u32) {
            let Some(lower) = sub_degree(d, alpha).and_then(|l| ideal.get(&l)) else { continue };
            let p = p_alpha_poly(n, alpha);
            for b in lower.basis() {
                w.insert(&p.mul(b));
            }
        }
        let gram: Vec<Vec<BigRational>> = w
            .basis()
            .iter()
            .map(|wi| j.basis().iter().map(|bj| wi.scalar_product(bj)).collect())
            .collect();
        let mut comp = SpanBasis::new(n);
        for c in nullspace(&gram, j.dim()) {
            let mut v = XPoly::zero(n);
            for (cj, bj) in c.iter().zip(j.basis()) {
                if !cj.is_zero() {
                    v.add_scaled(bj, &BigRational::from_integer(cj.clone()));
                }
            }
            comp.insert(&v);
        }
        if comp.dim() > 0 && total(d) == cutoff {
            top_degree_nonzero = true;
        }
        space.set_component(d, comp);
    }
    if top_degree_nonzero {
        log::warn!("higher space n={n} r={r}: top degree {cutoff} is non-zero; raise the cutoff");
    }
    Ok(HigherSpace {
        r,
        cutoff,
        space,
        top_degree_nonzero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_higher_space_is_the_kernel() {
        let h = higher_space(2, 1, 2).unwrap();
        assert_eq!(h.space.dim(), 4);
        assert!(!h.top_degree_nonzero);
    }

    #[test]
    fn generators_two_columns() {
        let g = alternant_generators(2, 1);
        assert_eq!(g.len(), 3);
        assert!(g.values().all(|b| b.dim() == 1));
    }
}
