use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::Coeff;
use crate::util::{fmt_rational, fmt_rational_short};

/// Sparse exact polynomial in `N` commuting parameters.
///
/// Used with `N = 1` for `q`, `N = 2` for `(q1, q2)` and `N = 3` for
/// `(q1, q2, q3)`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly<const N: usize> {
    terms: BTreeMap<[u32; N], BigRational>,
}

pub type QPoly1 = QPoly<1>;
pub type QPoly2 = QPoly<2>;
pub type QPoly3 = QPoly<3>;

impl<const N: usize> QPoly<N> {
    pub fn new() -> Self {
        QPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial([0; N], c)
    }

    pub fn monomial(exp: [u32; N], c: BigRational) -> Self {
        let mut p = Self::new();
        p.add_term(exp, c);
        p
    }

    /// The `i`-th parameter (zero-based).
    pub fn var(i: usize) -> Self {
        let mut exp = [0; N];
        exp[i] = 1;
        Self::monomial(exp, BigRational::one())
    }

    pub fn add_term(&mut self, exp: [u32; N], c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32; N]) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn eval(&self, point: &[BigRational; N]) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Value at the all-ones point.
    pub fn eval_ones(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, b| a + b)
    }

    /// Substitutes `value` for parameter `var`; the exponent slot is kept at zero.
    pub fn specialize(&self, var: usize, value: &BigRational) -> Self {
        let mut out = Self::new();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = std::mem::replace(&mut e2[var], 0);
            out.add_term(e2, c * num_traits::pow(value.clone(), k as usize));
        }
        out
    }

    /// Re-indexes exponents into another parameter count.
    pub fn map_exponents<const M: usize>(&self, f: impl Fn(&[u32; N]) -> [u32; M]) -> QPoly<M> {
        let mut out = QPoly::<M>::new();
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// Swaps two parameters.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        self.map_exponents(|e| {
            let mut e2 = *e;
            e2.swap(i, j);
            e2
        })
    }

    /// True when invariant under every permutation of the parameters.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            e.iter().permutations(N).all(|perm| {
                let mut e2 = [0; N];
                for (slot, v) in e2.iter_mut().zip(perm) {
                    *slot = *v;
                }
                &self.coeff(&e2) == c
            })
        })
    }

    /// Homogeneous components keyed by total degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(e.iter().sum())
                .or_default()
                .add_term(*e, c.clone());
        }
        out
    }

    /// True when every coefficient is a non-negative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    fn var_name(i: usize) -> String {
        if N == 1 {
            "q".to_string()
        } else {
            format!("q{}", i + 1)
        }
    }

    /// Terms ordered by total degree, then by decreasing exponent vector.
    fn display_order(&self) -> Vec<(&[u32; N], &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        v
    }
}

impl<const N: usize> Default for QPoly<N> {
    fn default() -> Self {
        Self::new()
    }
}

impl<const N: usize> fmt::Display for QPoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.display_order().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        Self::var_name(i)
                    } else {
                        format!("{}^{}", Self::var_name(i), k)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", fmt_rational_short(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational_short(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<const N: usize> Add for QPoly<N> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<const N: usize> Sub for QPoly<N> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
        self
    }
}

impl<const N: usize> Neg for QPoly<N> {
    type Output = Self;

    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<const N: usize> Mul for QPoly<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a, const N: usize> Mul<&'a QPoly<N>> for &'a QPoly<N> {
    type Output = QPoly<N>;

    fn mul(self, rhs: &QPoly<N>) -> QPoly<N> {
        let mut out = QPoly::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = [0; N];
                for i in 0..N {
                    e[i] = e1[i] + e2[i];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl<const N: usize> Zero for QPoly<N> {
    fn zero() -> Self {
        Self::new()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<const N: usize> One for QPoly<N> {
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
}

impl<const N: usize> Coeff for QPoly<N> {
    fn from_rational(q: &BigRational) -> Self {
        Self::constant(q.clone())
    }

    fn scale(&self, q: &BigRational) -> Self {
        let mut out = Self::new();
        for (e, c) in &self.terms {
            out.add_term(*e, c * q);
        }
        out
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| {
                    serde_json::json!({
                        "exponents": e.to_vec(),
                        "coeff": fmt_rational(c),
                    })
                })
                .collect(),
        )
    }

    fn render(&self) -> String {
        self.to_string()
    }
}
