use std::collections::BTreeMap;

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::One;

use super::partition::{Composition, Partition};
use super::ring::Coeff;
use super::symfunc::SymFunc;
use super::SymError;

/// A quasisymmetric polynomial in `n` indeterminates, stored as coefficients on
/// exponent vectors (weak compositions of length `n`).
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiSym<C> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> QuasiSym<C> {
    pub fn zero(nvars: usize) -> Self {
        QuasiSym {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeff(&self, exponents: &[u32]) -> C {
        self.terms.get(exponents).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        assert_eq!(self.nvars, other.nvars, "alphabet sizes differ");
        for (e, a) in &other.terms {
            self.add_term(e.clone(), a.clone() * c.clone());
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> QuasiSym<D> {
        let mut out = QuasiSym::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Converts to a symmetric function of degree `nvars`, failing when the
    /// polynomial is not symmetric.
    pub fn to_symmetric(&self) -> Result<SymFunc<C>, SymError> {
        let n = self.nvars;
        let mut monomial = Vec::new();
        for (e, c) in &self.terms {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                let lambda = Partition::new(e.clone());
                if lambda.weight() != n {
                    return Err(SymError::WeightMismatch {
                        expected: n,
                        found: lambda.weight(),
                    });
                }
                monomial.push((lambda, c.clone()));
            }
        }
        let f = SymFunc::from_basis(super::Basis::Monomial, n, monomial)?;
        if expand_symmetric(&f, n) != *self {
            return Err(SymError::NotSymmetric);
        }
        Ok(f)
    }
}

/// Expansion of a symmetric function into `nvars` indeterminates.
pub fn expand_symmetric<C: Coeff>(f: &SymFunc<C>, nvars: usize) -> QuasiSym<C> {
    let mut out = QuasiSym::zero(nvars);
    for (lambda, c) in f.terms() {
        if lambda.len() > nvars {
            continue;
        }
        let mut padded: Vec<u32> = lambda.parts().to_vec();
        padded.resize(nvars, 0);
        for perm in padded.iter().copied().permutations(nvars).unique() {
            out.add_term(perm, c.clone());
        }
    }
    out
}

/// The fundamental quasisymmetric polynomial `Q_c` in `|c|` indeterminates.
///
/// `Q_c` is the sum of `x_{i_1} ... x_{i_n}` over weakly increasing index words
/// that strictly increase at each proper partial sum of `c`.
pub fn fundamental(c: &Composition) -> Result<QuasiSym<BigRational>, SymError> {
    let n = c.weight();
    if n == 0 {
        return Err(SymError::EmptyComposition);
    }
    let strict: Vec<bool> = {
        let mut v = vec![false; n];
        for d in c.descent_set() {
            v[d] = true;
        }
        v
    };
    let mut out = QuasiSym::zero(n);
    let mut exps = vec![0u32; n];
    fn go(
        pos: usize,
        min: usize,
        n: usize,
        strict: &[bool],
        exps: &mut Vec<u32>,
        out: &mut QuasiSym<BigRational>,
    ) {
        if pos == n {
            out.add_term(exps.clone(), BigRational::one());
            return;
        }
        let start = if pos > 0 && strict[pos] { min + 1 } else { min };
        for letter in start..n {
            exps[letter] += 1;
            go(pos + 1, letter, n, strict, exps, out);
            exps[letter] -= 1;
        }
    }
    go(0, 0, n, &strict, &mut exps, &mut out);
    Ok(out)
}
