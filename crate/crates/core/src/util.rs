//! Small exact-arithmetic helpers shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Binomial coefficient `C(n, k)` as an arbitrary precision integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient with a signed top argument, `C(n, k) = n(n-1)...(n-k+1)/k!`.
pub fn binomial_signed(n: i64, k: u64) -> BigInt {
    if n >= 0 {
        return binomial(n as u64, k);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i as i64;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Multinomial coefficient `(Σ parts)! / Π parts!`.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let n: u64 = parts.iter().map(|&p| p as u64).sum();
    parts
        .iter()
        .fold(factorial(n), |acc, &p| acc / factorial(p as u64))
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `(-1)^k`.
pub fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Integer power of a rational, allowing negative exponents.
pub fn rat_pow(base: &BigRational, exp: i64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Canonical `num/den` rendering; the denominator is always printed.
pub fn fmt_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Returns the integer value of `q` when it has denominator one.
pub fn as_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Short human-readable form: integers without a denominator.
pub fn fmt_rational_short(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        let s = if q.is_negative() { "-" } else { "" };
        format!("{s}{}/{}", q.numer().abs(), q.denom())
    }
}

/// All permutations of `0..n` in lexicographic order, paired with their signs.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i64)> {
    use itertools::Itertools;
    (0..n)
        .permutations(n)
        .map(|p| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let s = sign(inversions);
            (p, s)
        })
        .collect()
}

/// Sign of a permutation given by its images.
pub fn permutation_sign(p: &[usize]) -> i64 {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut transpositions = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    sign(transpositions)
}
