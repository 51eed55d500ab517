use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::partition::{partitions_of, z_of, Partition};
use super::ring::Coeff;
use super::SymError;
use crate::util::{parse_rational, rat, rat_big, sign};

/// The classical bases of the ring of symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "h")]
    Homogeneous,
    #[serde(rename = "p")]
    PowerSum,
    #[serde(rename = "s")]
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Monomial,
        Basis::Elementary,
        Basis::Homogeneous,
        Basis::PowerSum,
        Basis::Schur,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::PowerSum => "p",
            Basis::Schur => "s",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Basis::ALL.into_iter().find(|b| b.tag() == tag)
    }
}

/// Sparse polynomial in a fixed number of indeterminates with integer coefficients,
/// used only to expand products of e/h/p generators.
type WordPoly = HashMap<Vec<u8>, BigInt>;

fn word_mul(a: &WordPoly, b: &WordPoly) -> WordPoly {
    let mut out = WordPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn generator_poly(basis: Basis, k: u32, vars: usize) -> WordPoly {
    let mut out = WordPoly::new();
    match basis {
        Basis::Elementary => {
            // 0/1 exponent vectors with k ones.
            for mask in 0u32..(1 << vars) {
                if mask.count_ones() == k {
                    let e = (0..vars).map(|i| ((mask >> i) & 1) as u8).collect();
                    out.insert(e, BigInt::one());
                }
            }
        }
        Basis::Homogeneous => {
            fn go(i: usize, rest: u32, cur: &mut Vec<u8>, out: &mut WordPoly) {
                if i + 1 == cur.len() {
                    cur[i] = rest as u8;
                    out.insert(cur.clone(), BigInt::one());
                    return;
                }
                for v in 0..=rest {
                    cur[i] = v as u8;
                    go(i + 1, rest - v, cur, out);
                }
            }
            go(0, k, &mut vec![0; vars], &mut out);
        }
        Basis::PowerSum => {
            for i in 0..vars {
                let mut e = vec![0u8; vars];
                e[i] = k as u8;
                out.insert(e, BigInt::one());
            }
        }
        Basis::Monomial | Basis::Schur => unreachable!("not a multiplicative basis"),
    }
    out
}

/// Parts-by-parts horizontal strips: all `ν ⊆ λ` with `λ/ν` a horizontal strip of `size` cells.
pub(crate) fn horizontal_strips(lambda: &[u32], size: u32) -> Vec<Vec<u32>> {
    fn go(lambda: &[u32], i: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == lambda.len() {
            if rest == 0 {
                let mut nu = cur.clone();
                while nu.last() == Some(&0) {
                    nu.pop();
                }
                out.push(nu);
            }
            return;
        }
        let lower = lambda.get(i + 1).copied().unwrap_or(0);
        let upper = lambda[i];
        for nu_i in (lower..=upper).rev() {
            let removed = upper - nu_i;
            if removed > rest {
                continue;
            }
            cur.push(nu_i);
            go(lambda, i + 1, rest - removed, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, size, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard tableaux of shape `lambda` and content `content`.
pub fn kostka(lambda: &Partition, content: &[u32]) -> BigInt {
    fn go(shape: &[u32], content: &[u32]) -> BigInt {
        match content.split_last() {
            None => {
                if shape.is_empty() {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Some((&last, rest)) => horizontal_strips(shape, last)
                .iter()
                .map(|nu| go(nu, rest))
                .fold(BigInt::zero(), |a, b| a + b),
        }
    }
    if lambda.weight() != content.iter().map(|&c| c as usize).sum::<usize>() {
        return BigInt::zero();
    }
    go(lambda.parts(), content)
}

/// Monomial expansion of a single basis element.
pub fn basis_to_monomial(basis: Basis, lambda: &Partition) -> SymFunc<BigRational> {
    let d = lambda.weight();
    let mut out = SymFunc::zero(d);
    match basis {
        Basis::Monomial => out.add_term(lambda.clone(), BigRational::one()),
        Basis::Schur => {
            for mu in partitions_of(d) {
                out.add_term(mu.clone(), rat_big(kostka(lambda, mu.parts())));
            }
        }
        Basis::Elementary | Basis::Homogeneous | Basis::PowerSum => {
            let mut poly = WordPoly::new();
            poly.insert(vec![0u8; d], BigInt::one());
            for &k in lambda.parts() {
                poly = word_mul(&poly, &generator_poly(basis, k, d));
            }
            for mu in partitions_of(d) {
                let mut e: Vec<u8> = mu.parts().iter().map(|&p| p as u8).collect();
                e.resize(d, 0);
                if let Some(c) = poly.get(&e) {
                    out.add_term(mu, rat_big(c.clone()));
                }
            }
        }
    }
    out
}

/// Rational Gauss–Jordan inverse of a square matrix; `None` when singular.
pub(crate) fn invert(mut m: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..n {
            m[col][j] = &m[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..n {
                    let a = &m[col][j] * &f;
                    m[r][j] -= a;
                    let b = &inv[col][j] * &f;
                    inv[r][j] -= b;
                }
            }
        }
    }
    Some(inv)
}

/// Transition data for one degree: `b_λ = Σ_μ forward[λ][μ] m_μ`.
struct Transition {
    index: Vec<Partition>,
    inverse: Vec<Vec<BigRational>>,
}

impl Transition {
    fn new(basis: Basis, degree: usize) -> Self {
        let index = partitions_of(degree);
        let pos: HashMap<&Partition, usize> = index.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let forward: Vec<Vec<BigRational>> = index
            .iter()
            .map(|lambda| {
                let mut row = vec![BigRational::zero(); index.len()];
                for (mu, c) in basis_to_monomial(basis, lambda).terms() {
                    row[pos[mu]] = c.clone();
                }
                row
            })
            .collect();
        let inverse = invert(forward).expect("classical bases are invertible");
        Transition { index, inverse }
    }
}

/// A homogeneous symmetric function of fixed degree, canonically stored in the
/// monomial basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFunc<C> {
    degree: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> SymFunc<C> {
    pub fn zero(degree: usize) -> Self {
        SymFunc {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, lambda: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&lambda) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(lambda, sum);
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    /// Monomial-basis terms in ascending `Partition` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    /// Monomial-basis terms in canonical reverse-lexicographic order.
    pub fn terms_reverse_lex(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter().rev()
    }

    pub fn monomial_coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    /// Builds `Σ c_λ b_λ` for the given basis.
    pub fn from_basis(
        basis: Basis,
        degree: usize,
        coeffs: impl IntoIterator<Item = (Partition, C)>,
    ) -> Result<Self, SymError> {
        let mut out = Self::zero(degree);
        let mut cache: HashMap<Partition, SymFunc<BigRational>> = HashMap::new();
        for (lambda, c) in coeffs {
            if lambda.weight() != degree {
                return Err(SymError::WeightMismatch {
                    expected: degree,
                    found: lambda.weight(),
                });
            }
            if c.is_zero() {
                continue;
            }
            if basis == Basis::Monomial {
                out.add_term(lambda, c);
                continue;
            }
            let expansion = cache
                .entry(lambda.clone())
                .or_insert_with(|| basis_to_monomial(basis, &lambda));
            for (mu, q) in expansion.terms() {
                out.add_term(mu.clone(), c.scale(q));
            }
        }
        Ok(out)
    }

    /// One basis element with unit coefficient.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        Self::from_basis(basis, lambda.weight(), [(lambda.clone(), C::one())])
            .expect("weight matches by construction")
    }

    /// Coefficients of `self` in the requested basis.
    pub fn coefficients(&self, basis: Basis) -> BTreeMap<Partition, C> {
        if basis == Basis::Monomial {
            return self.terms.clone();
        }
        let t = Transition::new(basis, self.degree);
        let pos: HashMap<&Partition, usize> =
            t.index.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut out = BTreeMap::new();
        for (j, lambda) in t.index.iter().enumerate() {
            let mut acc = C::zero();
            for (mu, c) in &self.terms {
                let w = &t.inverse[pos[mu]][j];
                if !w.is_zero() {
                    acc = acc + c.scale(w);
                }
            }
            if !acc.is_zero() {
                out.insert(lambda.clone(), acc);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, SymError> {
        if self.degree != other.degree {
            return Err(SymError::WeightMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SymError> {
        self.add(&other.scale_rational(&rat(-1)))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.degree);
        for (lambda, a) in &self.terms {
            out.add_term(lambda.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        let mut out = Self::zero(self.degree);
        for (lambda, a) in &self.terms {
            out.add_term(lambda.clone(), a.scale(q));
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SymFunc<D> {
        let mut out = SymFunc::zero(self.degree);
        for (lambda, a) in &self.terms {
            out.add_term(lambda.clone(), f(a));
        }
        out
    }

    /// The involution `ω`, acting by `p_k ↦ (-1)^{k-1} p_k`.
    pub fn omega(&self) -> Self {
        let p = self.coefficients(Basis::PowerSum);
        let twisted = p.into_iter().map(|(lambda, c)| {
            let s = sign(lambda.weight() - lambda.len());
            (lambda, c.scale(&rat(s)))
        });
        Self::from_basis(Basis::PowerSum, self.degree, twisted).expect("same degree")
    }

    /// First partition (reverse-lex) at which `self` and `other` differ in `basis`.
    pub fn first_difference(&self, other: &Self, basis: Basis) -> Option<(Partition, C, C)> {
        let a = self.coefficients(basis);
        let b = other.coefficients(basis);
        let keys: std::collections::BTreeSet<Partition> = a.keys().chain(b.keys()).cloned().collect();
        keys.into_iter().rev().find_map(|lambda| {
            let x = a.get(&lambda).cloned().unwrap_or_else(C::zero);
            let y = b.get(&lambda).cloned().unwrap_or_else(C::zero);
            (x != y).then_some((lambda, x, y))
        })
    }

    /// Human-readable expansion in `basis`, e.g. `S[3] + 9*S[21]`.
    pub fn render_in(&self, basis: Basis) -> String {
        let coeffs = self.coefficients(basis);
        if coeffs.is_empty() {
            return "0".to_string();
        }
        let letter = match basis {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::PowerSum => "p",
            Basis::Schur => "S",
        };
        coeffs
            .iter()
            .rev()
            .map(|(lambda, c)| {
                let r = c.render();
                if r == "1" {
                    format!("{letter}[{lambda}]")
                } else {
                    format!("({r})*{letter}[{lambda}]")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// `{"degree": d, "basis": "m", "terms": [...]}` with terms in reverse-lex order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms_reverse_lex()
            .map(|(lambda, c)| {
                serde_json::json!({
                    "partition": lambda.parts(),
                    "coeff": c.to_json(),
                })
            })
            .collect();
        serde_json::json!({
            "degree": self.degree,
            "basis": "m",
            "terms": terms,
        })
    }
}

impl SymFunc<BigRational> {
    /// Parses the JSON form written by [`SymFunc::to_json`].
    pub fn from_json(value: &serde_json::Value) -> Result<Self, SymError> {
        let bad = |why: &str| SymError::Json(why.to_string());
        let degree = value["degree"].as_u64().ok_or_else(|| bad("missing degree"))? as usize;
        let basis = value["basis"]
            .as_str()
            .and_then(Basis::from_tag)
            .ok_or_else(|| bad("missing or unknown basis"))?;
        let mut coeffs = Vec::new();
        for term in value["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let parts: Vec<u32> = serde_json::from_value(term["partition"].clone())
                .map_err(|e| bad(&e.to_string()))?;
            let lambda = Partition::try_from(parts)?;
            let c = term["coeff"]
                .as_str()
                .and_then(parse_rational)
                .ok_or_else(|| bad("bad coefficient"))?;
            coeffs.push((lambda, c));
        }
        Self::from_basis(basis, degree, coeffs)
    }
}

impl<C: Coeff> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_in(Basis::Monomial))
    }
}

/// Expands `f` in power sums and substitutes `p_k ↦ φ(k)`.
pub fn plethystic_point_eval<C: Coeff>(
    f: &SymFunc<BigRational>,
    phi: impl Fn(u32) -> Option<C>,
) -> Result<C, SymError> {
    let mut acc = C::zero();
    for (lambda, c) in f.coefficients(Basis::PowerSum) {
        let mut term = C::from_rational(&c);
        for &k in lambda.parts() {
            term = term * phi(k).ok_or(SymError::MissingSubstitution(k))?;
        }
        acc = acc + term;
    }
    Ok(acc)
}

/// Centralizer weight `1/z_λ` as a rational.
pub fn inverse_z(lambda: &Partition) -> BigRational {
    BigRational::new(BigInt::one(), z_of(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    type Sf = SymFunc<BigRational>;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn small_expansions() {
        assert_eq!(basis_to_monomial(Basis::Elementary, &p(&[2])), Sf::basis_element(Basis::Monomial, &p(&[1, 1])));
        assert_eq!(basis_to_monomial(Basis::PowerSum, &p(&[2])), Sf::basis_element(Basis::Monomial, &p(&[2])));
        let s21 = basis_to_monomial(Basis::Schur, &p(&[2, 1]));
        assert_eq!(s21.monomial_coeff(&p(&[2, 1])), rat(1));
        assert_eq!(s21.monomial_coeff(&p(&[1, 1, 1])), rat(2));
        assert_eq!(s21.monomial_coeff(&p(&[3])), rat(0));
    }

    #[test]
    fn schur_expansion_matches_tableau_brute_force() {
        // Oracle: fill the cells of the diagram with values in 1..=d and keep
        // the row-weak, column-strict fillings with the requested content.
        fn brute(shape: &[u32], content: &[u32]) -> i64 {
            let cells: Vec<(usize, usize)> = shape
                .iter()
                .enumerate()
                .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
                .collect();
            let letters = content.len() as u32;
            let mut fill = vec![0u32; cells.len()];
            let mut count = 0;
            loop {
                let get = |r: usize, c: usize| {
                    cells.iter().position(|&x| x == (r, c)).map(|i| fill[i])
                };
                let ok = cells.iter().enumerate().all(|(i, &(r, c))| {
                    (c == 0 || get(r, c - 1).unwrap() <= fill[i])
                        && (r == 0 || get(r - 1, c).unwrap() < fill[i])
                });
                let mut cont = vec![0u32; letters as usize];
                for &v in &fill {
                    cont[v as usize] += 1;
                }
                if ok && cont == content {
                    count += 1;
                }
                let mut i = 0;
                loop {
                    if i == fill.len() {
                        return count;
                    }
                    fill[i] += 1;
                    if fill[i] < letters {
                        break;
                    }
                    fill[i] = 0;
                    i += 1;
                }
            }
        }
        for d in 1..=5 {
            for lambda in partitions_of(d) {
                for mu in partitions_of(d) {
                    assert_eq!(
                        kostka(&lambda, mu.parts()),
                        BigInt::from(brute(lambda.parts(), mu.parts())),
                        "K[{lambda},{mu}]"
                    );
                }
            }
        }
    }

    #[test]
    fn conversions_round_trip() {
        for d in 0..=6 {
            for b1 in Basis::ALL {
                for lambda in partitions_of(d) {
                    let f = Sf::basis_element(b1, &lambda);
                    for b2 in Basis::ALL {
                        let c = f.coefficients(b2);
                        let back = Sf::from_basis(b2, d, c).unwrap();
                        assert_eq!(back, f, "{b1:?}[{lambda}] via {b2:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn omega_swaps_h_and_e() {
        for d in 1..=6 {
            for lambda in partitions_of(d) {
                let h = Sf::basis_element(Basis::Homogeneous, &lambda);
                let e = Sf::basis_element(Basis::Elementary, &lambda);
                assert_eq!(h.omega(), e);
                assert_eq!(e.omega().omega(), e);
            }
        }
        let p2 = Sf::basis_element(Basis::PowerSum, &p(&[2]));
        assert_eq!(p2.omega(), p2.scale_rational(&rat(-1)));
    }

    #[test]
    fn plethystic_examples() {
        let p2 = Sf::basis_element(Basis::PowerSum, &p(&[2]));
        assert_eq!(plethystic_point_eval(&p2, |k| Some(rat(k as i64))).unwrap(), rat(2));
        let e1 = Sf::basis_element(Basis::Elementary, &p(&[1]));
        let phi = |k: u32| Some(rat(4) * rat_big(crate::util::binomial(2 * k as u64, k as u64)));
        assert_eq!(plethystic_point_eval(&e1, phi).unwrap(), rat(8));
        let e3 = Sf::basis_element(Basis::Elementary, &p(&[3]));
        assert!(matches!(
            plethystic_point_eval(&e3, |k| (k < 3).then(|| rat(1))),
            Err(SymError::MissingSubstitution(3))
        ));
    }

    #[test]
    fn json_shape() {
        let f = Sf::basis_element(Basis::Schur, &p(&[2, 1]));
        let j = f.to_json();
        assert_eq!(j["basis"], "m");
        assert_eq!(j["terms"][0]["partition"], serde_json::json!([2, 1]));
        assert_eq!(j["terms"][0]["coeff"], "1/1");
        assert_eq!(j["terms"][1]["coeff"], "2/1");
        assert_eq!(Sf::from_json(&j).unwrap(), f);
    }
}
