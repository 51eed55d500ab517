//! The nabla operator for `n = 3` as a 3×3 matrix over the two-row Schur ring.
//!
//! Elements of the ring are integer combinations of `s_{ab}` with `a >= b >= 0`;
//! products drop every Schur function with three or more rows. In this
//! quotient `s_{ab} = e_2^b s_{a-b}`, so products follow the two-letter
//! Clebsch–Gordan rule.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::symcore::{schur_q3, two_row_at_ones, Partition, QPoly3};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoRowElem {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl TwoRowElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::s(0, 0)
    }

    /// The Schur function `s_{ab}`; requires `a >= b`.
    pub fn s(a: u32, b: u32) -> Self {
        assert!(a >= b, "s_({a},{b}) is not a partition");
        let mut out = Self::zero();
        out.add_term(a, b, BigInt::one());
        out
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, c * k);
        }
        out
    }

    /// Image in `Z[q1,q2,q3]` through `s_{ab} ↦ s_{ab}(q1,q2,q3)`.
    pub fn to_qpoly3(&self) -> QPoly3 {
        self.terms.iter().fold(QPoly3::new(), |acc, (&(a, b), c)| {
            acc + &schur_q3(&Partition::new(vec![a, b])) * &QPoly3::constant(BigRational::from_integer(c.clone()))
        })
    }

    /// Value at `q1 = q2 = q3 = 1` via the two-row product formula.
    pub fn at_ones(&self) -> BigInt {
        self.terms.iter().map(|(&(a, b), c)| c * two_row_at_ones(a, b)).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .rev()
                .map(|(&(a, b), c)| serde_json::json!({"partition": [a, b], "coeff": c.to_string()}))
                .collect(),
        )
    }
}

fn label(a: u32, b: u32) -> String {
    match (a, b) {
        (a, 0) if a < 10 => format!("s{a}"),
        (a, b) if a < 10 => format!("s{a}{b}"),
        (a, b) => format!("s({a},{b})"),
    }
}

impl fmt::Display for TwoRowElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Degree first, then the longer first row.
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|(&(a, b), _)| (a + b, std::cmp::Reverse(a)));
        for (i, (&(a, b), c)) in keys.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let name = if (a, b) == (0, 0) { String::new() } else { label(a, b) };
            match (abs.is_one(), name.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => write!(f, "{name}")?,
                (false, false) => write!(f, "{abs}{name}")?,
            }
        }
        Ok(())
    }
}

impl Add for &TwoRowElem {
    type Output = TwoRowElem;

    fn add(self, rhs: &TwoRowElem) -> TwoRowElem {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &TwoRowElem {
    type Output = TwoRowElem;

    fn sub(self, rhs: &TwoRowElem) -> TwoRowElem {
        self + &(-rhs)
    }
}

impl Neg for &TwoRowElem {
    type Output = TwoRowElem;

    fn neg(self) -> TwoRowElem {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &TwoRowElem {
    type Output = TwoRowElem;

    /// `s_{ab} s_{cd} = Σ_{j=0}^{min(a-b, c-d)} s_{(a-b)+(c-d)-j+b+d, j+b+d}`.
    fn mul(self, rhs: &TwoRowElem) -> TwoRowElem {
        let mut out = TwoRowElem::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                let (m, k, e) = (a - b, c - d, b + d);
                let xy = x * y;
                for j in 0..=m.min(k) {
                    out.add_term(m + k - j + e, j + e, xy.clone());
                }
            }
        }
        out
    }
}

/// Coefficients of `S_3(w)`, `S_21(w)`, `S_111(w)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrobVector3 {
    pub c3: TwoRowElem,
    pub c21: TwoRowElem,
    pub c111: TwoRowElem,
}

impl FrobVector3 {
    pub fn new(c3: TwoRowElem, c21: TwoRowElem, c111: TwoRowElem) -> Self {
        FrobVector3 { c3, c21, c111 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis_s3() -> Self {
        Self::new(TwoRowElem::one(), TwoRowElem::zero(), TwoRowElem::zero())
    }

    pub fn basis_s21() -> Self {
        Self::new(TwoRowElem::zero(), TwoRowElem::one(), TwoRowElem::zero())
    }

    pub fn basis_s111() -> Self {
        Self::new(TwoRowElem::zero(), TwoRowElem::zero(), TwoRowElem::one())
    }

    pub fn is_zero(&self) -> bool {
        self.c3.is_zero() && self.c21.is_zero() && self.c111.is_zero()
    }

    pub fn components(&self) -> [&TwoRowElem; 3] {
        [&self.c3, &self.c21, &self.c111]
    }

    /// Multiplies every coefficient by a ring element.
    pub fn times(&self, x: &TwoRowElem) -> Self {
        Self::new(x * &self.c3, x * &self.c21, x * &self.c111)
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self::new(&self.c3 + &other.c3, &self.c21 + &other.c21, &self.c111 + &other.c111)
    }

    pub fn minus(&self, other: &Self) -> Self {
        Self::new(&self.c3 - &other.c3, &self.c21 - &other.c21, &self.c111 - &other.c111)
    }

    pub fn to_qpoly3(&self) -> [QPoly3; 3] {
        [self.c3.to_qpoly3(), self.c21.to_qpoly3(), self.c111.to_qpoly3()]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "S3": self.c3.to_json(),
            "S21": self.c21.to_json(),
            "S111": self.c111.to_json(),
        })
    }
}

impl fmt::Display for FrobVector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*S3 + ({})*S21 + ({})*S111", self.c3, self.c21, self.c111)
    }
}

fn s(a: u32, b: u32) -> TwoRowElem {
    TwoRowElem::s(a, b)
}

/// One application of nabla.
///
/// The coefficient vector `(c3, c21, c111)` is multiplied by
/// ```text
/// [ 0     0      1       ]
/// [ s22  -s21    s1+s2   ]
/// [ s32  -s31    s11+s3  ]
/// ```
/// so that `∇(S_111) = S_3 + (s1+s2) S_21 + (s11+s3) S_111`.
pub fn nabla_apply(v: &FrobVector3) -> FrobVector3 {
    let c3 = v.c111.clone();
    let c21 = &(&(&s(2, 2) * &v.c3) - &(&s(2, 1) * &v.c21)) + &(&(&s(1, 0) + &s(2, 0)) * &v.c111);
    let c111 = &(&(&s(3, 2) * &v.c3) - &(&s(3, 1) * &v.c21)) + &(&(&s(1, 1) + &s(3, 0)) * &v.c111);
    FrobVector3::new(c3, c21, c111)
}

/// `∇^r(S_111)`.
pub fn h3(r: u32) -> FrobVector3 {
    (0..r).fold(FrobVector3::basis_s111(), |v, _| nabla_apply(&v))
}

/// `T_{mk} = Σ_{j=0}^{k} s_{m-2j, j}`, keeping only terms with `m - 2j >= j`.
pub fn t_poly(m: u32, k: u32) -> TwoRowElem {
    let mut out = TwoRowElem::zero();
    for j in 0..=k {
        if 2 * j > m || m - 2 * j < j {
            continue;
        }
        out.add_term(m - 2 * j, j, BigInt::one());
    }
    out
}

/// Closed form of `∇^r(S_111)` for `r >= 1`.
pub fn h3_closed(r: u32) -> FrobVector3 {
    assert!(r >= 1, "closed form starts at r = 1");
    FrobVector3::new(
        t_poly(3 * (r - 1), r - 1),
        &t_poly(3 * r - 2, r - 1) + &t_poly(3 * r - 1, r - 1),
        t_poly(3 * r, r),
    )
}

/// Applies `∇³ − (s3−s21+s11)∇² + (s41+s33−s32)∇ − s44` to each basis vector.
pub fn charpoly_residual() -> [FrobVector3; 3] {
    let trace = &(&s(3, 0) - &s(2, 1)) + &s(1, 1);
    let middle = &(&s(4, 1) + &s(3, 3)) - &s(3, 2);
    let det = s(4, 4);
    [FrobVector3::basis_s3(), FrobVector3::basis_s21(), FrobVector3::basis_s111()].map(|v| {
        let v1 = nabla_apply(&v);
        let v2 = nabla_apply(&v1);
        let v3 = nabla_apply(&v2);
        v3.minus(&v2.times(&trace)).plus(&v1.times(&middle)).minus(&v.times(&det))
    })
}

/// `S_3 + s_1 S_21 + s_11 S_111`.
pub fn eigenvector() -> FrobVector3 {
    FrobVector3::new(TwoRowElem::one(), s(1, 0), s(1, 1))
}

/// True when `∇ v = s_11 · v`.
pub fn is_s11_eigenvector(v: &FrobVector3) -> bool {
    nabla_apply(v) == v.times(&s(1, 1))
}

pub fn eigen_check() -> bool {
    is_s11_eigenvector(&eigenvector())
}

/// `(c3, c21, c111)` at `q1 = q2 = q3 = 1`.
pub fn specialize_q111(v: &FrobVector3) -> [BigInt; 3] {
    [v.c3.at_ones(), v.c21.at_ones(), v.c111.at_ones()]
}

/// `T_{nk}(1,1,1)` by summing the product formula over the valid terms.
pub fn t_at_ones_direct(n: u32, k: u32) -> BigInt {
    t_poly(n, k).at_ones()
}

/// The printed polynomial `(k+1)(k+2)(k² − (13+10n)k + 3(n+1)(n+2))/12`.
pub fn t_at_ones_printed(n: u32, k: u32) -> BigRational {
    let (n, k) = (BigInt::from(n), BigInt::from(k));
    let inner = &k * &k - (BigInt::from(13) + BigInt::from(10) * &n) * &k + BigInt::from(3) * (&n + 1) * (&n + 2);
    BigRational::new((&k + 1) * (&k + 2) * inner, BigInt::from(12))
}

/// Comparison of the printed `T_{nk}(1,1,1)` polynomial against direct summation.
#[derive(Clone, Debug, Serialize)]
pub struct TnkErratum {
    pub n: u32,
    pub k: u32,
    pub direct: String,
    pub printed: String,
    pub agree: bool,
}

/// Evaluates both sides on `0 <= k <= n/3`, `n <= max_n`.
pub fn t_erratum_report(max_n: u32) -> Vec<TnkErratum> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n / 3 {
            let direct = t_at_ones_direct(n, k);
            let printed = t_at_ones_printed(n, k);
            out.push(TnkErratum {
                n,
                k,
                agree: BigRational::from_integer(direct.clone()) == printed,
                direct: direct.to_string(),
                printed: crate::util::fmt_rational_short(&printed),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::schur_decompose_q3;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn products_match_truncated_three_letter_expansion() {
        // Oracle: multiply in Z[q1,q2,q3], decompose into Schur polynomials and
        // drop the three-row terms.
        for a in 0..5 {
            for b in 0..=a {
                for c in 0..4 {
                    for d in 0..=c {
                        let got = &s(a, b) * &s(c, d);
                        let prod = &schur_q3(&Partition::new(vec![a, b])) * &schur_q3(&Partition::new(vec![c, d]));
                        let mut want = TwoRowElem::zero();
                        for (mu, coeff) in schur_decompose_q3(&prod).unwrap() {
                            if mu.len() <= 2 {
                                want.add_term(mu.part(0), mu.part(1), coeff.to_integer());
                            }
                        }
                        assert_eq!(got, want, "s{a}{b} * s{c}{d}");
                    }
                }
            }
        }
    }

    #[test]
    fn small_products() {
        assert_eq!(&s(1, 0) * &s(1, 0), &s(2, 0) + &s(1, 1));
        assert_eq!(&s(1, 0) * &s(1, 1), s(2, 1));
        let v = &s(3, 1) + &s(2, 2).scale(&big(-4));
        assert_eq!(&TwoRowElem::one() * &v, v);
    }

    #[test]
    fn first_iterates() {
        assert_eq!(h3(0), FrobVector3::basis_s111());
        let one = h3(1);
        assert_eq!(one.c3, TwoRowElem::one());
        assert_eq!(one.c21, &s(2, 0) + &s(1, 0));
        assert_eq!(one.c111, &s(3, 0) + &s(1, 1));
        let two = h3(2);
        assert_eq!(two.c3, &s(1, 1) + &s(3, 0));
        assert_eq!(two.c21, &(&(&s(2, 1) + &s(4, 0)) + &s(3, 1)) + &s(5, 0));
        assert_eq!(two.c111, &(&s(2, 2) + &s(4, 1)) + &s(6, 0));
    }

    #[test]
    fn t_polynomials() {
        assert_eq!(t_poly(5, 0), s(5, 0));
        assert_eq!(t_poly(3, 1), &s(3, 0) + &s(1, 1));
        assert_eq!(t_poly(6, 2), &(&s(6, 0) + &s(4, 1)) + &s(2, 2));
        assert_eq!(t_poly(4, 2), &s(4, 0) + &s(2, 1));
    }

    #[test]
    fn closed_form_and_specialization() {
        for r in 1..=5 {
            assert_eq!(h3(r), h3_closed(r), "r = {r}");
        }
        assert_eq!(specialize_q111(&h3(0)), [big(0), big(0), big(1)]);
        assert_eq!(specialize_q111(&h3(1)), [big(1), big(9), big(13)]);
        assert_eq!(specialize_q111(&h3(2)), [big(13), big(59), big(58)]);
    }

    #[test]
    fn cayley_hamilton_and_eigenvector() {
        assert!(charpoly_residual().iter().all(FrobVector3::is_zero));
        assert!(eigen_check());
        assert!(is_s11_eigenvector(&eigenvector().times(&s(1, 0))));
        let mut broken = eigenvector();
        broken.c111 = TwoRowElem::zero();
        assert!(!is_s11_eigenvector(&broken));
    }

    #[test]
    fn printed_t_polynomial_erratum() {
        assert_eq!(t_at_ones_direct(3, 1), big(13));
        assert_eq!(t_at_ones_printed(3, 1), BigRational::from_integer(big(9)));
        for n in 0..10 {
            assert_eq!(BigRational::from_integer(t_at_ones_direct(n, 0)), t_at_ones_printed(n, 0));
        }
        let report = t_erratum_report(6);
        assert!(report.iter().any(|e| e.n == 3 && e.k == 1 && !e.agree));
    }

    #[test]
    fn display() {
        assert_eq!(h3(1).c111.to_string(), "s11 + s3");
        assert_eq!((-&s(2, 1)).to_string(), "-s21");
        assert_eq!(s(12, 3).to_string(), "s(12,3)");
    }
}
