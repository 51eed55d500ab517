use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::HarmonicsError;
use crate::util::{factorial, fmt_rational_short, permutations_with_sign};

/// Largest supported number of columns.
pub const MAX_COLS: usize = 6;

/// One of the three rows of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    X,
    Y,
    Z,
}

impl Row {
    pub const ALL: [Row; 3] = [Row::X, Row::Y, Row::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }

    pub fn from_name(c: char) -> Option<Row> {
        match c {
            'x' => Some(Row::X),
            'y' => Some(Row::Y),
            'z' => Some(Row::Z),
            _ => None,
        }
    }
}

/// Exponent matrix `A` with rows `x, y, z`; unused columns stay zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono([u8; 3 * MAX_COLS]);

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    pub fn get(&self, row: Row, col: usize) -> u8 {
        self.0[row.index() * MAX_COLS + col]
    }

    pub fn set(&mut self, row: Row, col: usize, e: u8) {
        self.0[row.index() * MAX_COLS + col] = e;
    }

    /// Column `j` as `(a, b, c)`.
    pub fn column(&self, col: usize) -> [u8; 3] {
        [self.get(Row::X, col), self.get(Row::Y, col), self.get(Row::Z, col)]
    }

    pub fn from_columns(cols: &[[u8; 3]]) -> Self {
        let mut m = Mono::one();
        for (j, c) in cols.iter().enumerate() {
            for row in Row::ALL {
                m.set(row, j, c[row.index()]);
            }
        }
        m
    }

    /// Row sums.
    pub fn tdeg(&self) -> [u32; 3] {
        Row::ALL.map(|row| {
            self.0[row.index() * MAX_COLS..(row.index() + 1) * MAX_COLS]
                .iter()
                .map(|&e| e as u32)
                .sum()
        })
    }

    /// `A! = Π a_ij!`.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&e| factorial(e as u64)).product()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        out
    }

    /// Moves column `i` to column `σ(i)`.
    pub fn permute(&self, sigma: &[usize]) -> Mono {
        let mut out = Mono::one();
        for (i, &s) in sigma.iter().enumerate() {
            for row in Row::ALL {
                out.set(row, s, self.get(row, i));
            }
        }
        out
    }
}

/// A sparse polynomial in `x_i, y_i, z_i` for `1 <= i <= n` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    n: usize,
    terms: BTreeMap<Mono, BigRational>,
}

impl XPoly {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_COLS, "at most {MAX_COLS} columns");
        XPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, Mono::one(), BigRational::one())
    }

    pub fn monomial(n: usize, m: Mono, c: BigRational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(m, c);
        p
    }

    /// The variable of `row` in 0-based column `col`.
    pub fn var(n: usize, row: Row, col: usize) -> Self {
        let mut m = Mono::one();
        m.set(row, col, 1);
        Self::monomial(n, m, BigRational::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn coeff_ref(&self, m: &Mono) -> Option<&BigRational> {
        self.terms.get(m)
    }

    /// Largest monomial and its coefficient.
    pub fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &XPoly, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(*m, a * c);
        }
    }

    pub fn scale(&self, c: &BigRational) -> XPoly {
        let mut out = XPoly::zero(self.n);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        }
        out
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        let mut out = self.clone();
        out.add_scaled(other, &BigRational::one());
        out
    }

    pub fn sub(&self, other: &XPoly) -> XPoly {
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one());
        out
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        let mut out = XPoly::zero(self.n.max(other.n));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> XPoly {
        (0..k).fold(XPoly::one(self.n), |acc, _| acc.mul(self))
    }

    /// Tri-degree when homogeneous; `None` for zero or mixed polynomials.
    pub fn tdeg(&self) -> Option<[u32; 3]> {
        let mut it = self.terms.keys().map(Mono::tdeg);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Mono::one())
    }

    /// `∂^k / ∂(row_col)^k`.
    pub fn differentiate(&self, row: Row, col: usize, k: u32) -> XPoly {
        let mut out = XPoly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.get(row, col) as u32;
            if e < k {
                continue;
            }
            let falling: BigInt = ((e - k + 1)..=e).map(BigInt::from).product();
            let mut m2 = *m;
            m2.set(row, col, (e - k) as u8);
            out.add_term(m2, c * BigRational::from_integer(falling));
        }
        out
    }

    /// `∂X^A` applied to `self`.
    pub fn differentiate_mono(&self, a: &Mono) -> XPoly {
        let mut out = XPoly::zero(self.n);
        'terms: for (m, c) in &self.terms {
            let mut coeff = BigInt::one();
            let mut m2 = *m;
            for (slot, &k) in m2.0.iter_mut().zip(a.0.iter()) {
                if *slot < k {
                    continue 'terms;
                }
                for t in (*slot - k + 1)..=*slot {
                    coeff *= t;
                }
                *slot -= k;
            }
            out.add_term(m2, c * BigRational::from_integer(coeff));
        }
        out
    }

    /// `P_α(∂X) = Σ_j ∂x_j^a ∂y_j^b ∂z_j^c`.
    pub fn p_alpha_apply(&self, alpha: [u32; 3]) -> XPoly {
        let mut out = XPoly::zero(self.n);
        for j in 0..self.n {
            let mut a = Mono::one();
            for row in Row::ALL {
                a.set(row, j, alpha[row.index()] as u8);
            }
            let d = self.differentiate_mono(&a);
            out.add_scaled(&d, &BigRational::one());
        }
        out
    }

    /// `E_uv^(k) = Σ_i u_i ∂v_i^k`.
    pub fn e_op_apply(&self, u: Row, v: Row, k: u32) -> Result<XPoly, HarmonicsError> {
        if u == v {
            return Err(HarmonicsError::SameRow(u.name()));
        }
        let mut out = XPoly::zero(self.n);
        for i in 0..self.n {
            let d = self.differentiate(v, i, k);
            for (m, c) in d.terms {
                let mut m2 = m;
                m2.set(u, i, m.get(u, i) + 1);
                out.add_term(m2, c);
            }
        }
        Ok(out)
    }

    /// `σ · f`, replacing each variable of column `i` by the one of column `σ(i)`.
    pub fn diagonal_action(&self, sigma: &[usize]) -> XPoly {
        assert_eq!(sigma.len(), self.n, "permutation size");
        let mut out = XPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.permute(sigma), c.clone());
        }
        out
    }

    /// `⟨X^A, X^B⟩ = A!` when `A = B`, zero otherwise.
    pub fn scalar_product(&self, other: &XPoly) -> BigRational {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small
            .terms
            .iter()
            .filter_map(|(m, a)| {
                large
                    .terms
                    .get(m)
                    .map(|b| a * b * BigRational::from_integer(m.factorial()))
            })
            .fold(BigRational::zero(), |x, y| x + y)
    }

    /// `f(∂X) g(X)` evaluated at `X = 0`, by explicit differentiation.
    pub fn apply_as_operator_at_zero(&self, g: &XPoly) -> BigRational {
        self.terms
            .iter()
            .map(|(m, c)| c * g.differentiate_mono(m).constant_term())
            .fold(BigRational::zero(), |x, y| x + y)
    }

    /// Multiplication by the invariant `P_α(X) = Σ_j X_j^α`.
    pub fn times_p_alpha(&self, alpha: [u32; 3]) -> XPoly {
        self.mul(&p_alpha_poly(self.n, alpha))
    }

    pub fn variables_used(&self) -> Vec<(Row, usize)> {
        let mut out = Vec::new();
        for row in Row::ALL {
            for j in 0..self.n {
                if self.terms.keys().any(|m| m.get(row, j) > 0) {
                    out.push((row, j));
                }
            }
        }
        out
    }

    /// Largest exponent of any variable of `row`.
    pub fn max_row_exponent(&self, row: Row) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| (0..self.n).map(move |j| m.get(row, j) as u32))
            .max()
            .unwrap_or(0)
    }

    /// Divides by the leading coefficient.
    pub fn normalized(&self) -> XPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Re-embeds into `n` columns; panics when a dropped column is used.
    pub fn with_columns(&self, n: usize) -> XPoly {
        assert!(n <= MAX_COLS);
        for m in self.terms.keys() {
            for j in n..self.n {
                assert!(m.column(j) == [0; 3], "column {j} in use");
            }
        }
        XPoly {
            n,
            terms: self.terms.clone(),
        }
    }

    pub(crate) fn from_terms(n: usize, terms: BTreeMap<Mono, BigRational>) -> XPoly {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        XPoly { n, terms }
    }
}

/// `P_α(X) = Σ_j X_j^α` as a polynomial.
pub fn p_alpha_poly(n: usize, alpha: [u32; 3]) -> XPoly {
    let mut out = XPoly::zero(n);
    for j in 0..n {
        let mut m = Mono::one();
        for row in Row::ALL {
            m.set(row, j, alpha[row.index()] as u8);
        }
        out.add_term(m, BigRational::one());
    }
    out
}

/// `det(u_i^j)` for `1 <= i <= n`, `0 <= j < n`.
pub fn vandermonde(n: usize, row: Row) -> XPoly {
    let mut out = XPoly::zero(n);
    for (sigma, s) in permutations_with_sign(n) {
        let mut m = Mono::one();
        for (i, &e) in sigma.iter().enumerate() {
            m.set(row, i, e as u8);
        }
        out.add_term(m, BigRational::from_integer(BigInt::from(s)));
    }
    out
}

/// `R^±(X^A) = Σ_σ sign(σ) σ·X^A` for the exponent matrix with the given columns.
pub fn antisymmetrize(cols: &[[u8; 3]]) -> XPoly {
    let n = cols.len();
    let base = Mono::from_columns(cols);
    let mut out = XPoly::zero(n);
    for (sigma, s) in permutations_with_sign(n) {
        out.add_term(base.permute(&sigma), BigRational::from_integer(BigInt::from(s)));
    }
    out
}

/// All `α = (a, b, c)` with `lo <= |α| <= hi`.
pub fn alphas(lo: u32, hi: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for total in lo..=hi {
        for a in (0..=total).rev() {
            for b in (0..=total - a).rev() {
                out.push([a, b, total - a - b]);
            }
        }
    }
    out
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut vars = Vec::new();
            for row in Row::ALL {
                for j in 0..self.n {
                    match m.get(row, j) {
                        0 => {}
                        1 => vars.push(format!("{}{}", row.name(), j + 1)),
                        e => vars.push(format!("{}{}^{}", row.name(), j + 1, e)),
                    }
                }
            }
            let abs = c.abs();
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::rat;

    fn x(n: usize, j: usize) -> XPoly {
        XPoly::var(n, Row::X, j)
    }

    #[test]
    fn derivatives() {
        let p = x(2, 0).pow(2);
        assert_eq!(p.differentiate(Row::X, 0, 1), x(2, 0).scale(&rat(2)));
        assert!(XPoly::var(2, Row::Y, 1).differentiate(Row::X, 0, 1).is_zero());
    }

    #[test]
    fn vandermonde_small() {
        assert_eq!(vandermonde(2, Row::X), x(2, 1).sub(&x(2, 0)));
        let v = vandermonde(3, Row::Y);
        assert_eq!(v.len(), 6);
        assert_eq!(v.tdeg(), Some([0, 3, 0]));
        let d = vandermonde(3, Row::X).differentiate(Row::X, 0, 1).differentiate(Row::X, 1, 1);
        assert_eq!(d.tdeg(), Some([1, 0, 0]));
        // Δ3 = (x2-x1)(x3-x1)(x3-x2), so ∂x1∂x2 Δ3 = 2(x2 - x1).
        let expect = x(3, 1).sub(&x(3, 0)).scale(&rat(2));
        assert_eq!(d, expect);
    }

    #[test]
    fn power_sum_operators() {
        let d2 = x(2, 1).sub(&x(2, 0));
        assert!(d2.p_alpha_apply([1, 0, 0]).is_zero());
        assert!(x(2, 0).p_alpha_apply([0, 1, 0]).is_zero());
        for n in 1..=4 {
            let v = vandermonde(n, Row::X);
            for a in alphas(1, n as u32) {
                assert!(v.p_alpha_apply(a).is_zero(), "n={n} α={a:?}");
            }
        }
    }

    #[test]
    fn polarization_operators() {
        let e = x(2, 0).e_op_apply(Row::Y, Row::X, 1).unwrap();
        assert_eq!(e, XPoly::var(2, Row::Y, 0));
        assert!(x(2, 0).e_op_apply(Row::Z, Row::X, 2).unwrap().is_zero());
        assert!(x(2, 0).e_op_apply(Row::X, Row::X, 1).is_err());
    }

    #[test]
    fn scalar_product_basics() {
        assert_eq!(x(2, 0).scalar_product(&x(2, 0)), rat(1));
        assert_eq!(x(2, 0).pow(2).scalar_product(&x(2, 0).pow(2)), rat(2));
        let a = x(2, 0).mul(&XPoly::var(2, Row::Y, 1));
        let b = x(2, 1).mul(&XPoly::var(2, Row::Y, 0));
        assert_eq!(a.scalar_product(&b), rat(0));
    }

    #[test]
    fn alternation() {
        assert_eq!(antisymmetrize(&[[1, 0, 0], [0, 0, 0]]), x(2, 0).sub(&x(2, 1)));
        assert!(antisymmetrize(&[[1, 1, 0], [1, 1, 0]]).is_zero());
        let e = antisymmetrize(&[[1, 0, 0], [0, 1, 0]]);
        let want = x(2, 0).mul(&XPoly::var(2, Row::Y, 1)).sub(&x(2, 1).mul(&XPoly::var(2, Row::Y, 0)));
        assert_eq!(e, want);
        for n in 1..=4 {
            let v = vandermonde(n, Row::X);
            for (sigma, s) in permutations_with_sign(n) {
                assert_eq!(v.diagonal_action(&sigma), v.scale(&rat(s)));
            }
        }
        assert_eq!(x(2, 0).diagonal_action(&[1, 0]), x(2, 1));
    }

    #[test]
    fn display() {
        assert_eq!(vandermonde(2, Row::X).to_string(), "-x1 + x2");
        assert_eq!(alphas(1, 2).len(), 9);
    }
}
