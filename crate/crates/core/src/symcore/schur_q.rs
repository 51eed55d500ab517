use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::Partition;
use super::qpoly::QPoly3;
use super::symfunc::horizontal_strips;
use super::SymError;

/// `s_μ(q1, q2, q3)`, built by peeling horizontal strips letter by letter.
///
/// Partitions with more than three parts give the zero polynomial.
pub fn schur_q3(mu: &Partition) -> QPoly3 {
    if mu.len() > 3 {
        return QPoly3::new();
    }
    let mut out = QPoly3::new();
    fn go(shape: &[u32], letter: usize, exps: [u32; 3], out: &mut QPoly3) {
        if letter == 0 {
            if shape.is_empty() {
                out.add_term(exps, BigRational::one());
            }
            return;
        }
        // Letter `letter` (1-based) fills a horizontal strip of the outer shape.
        if shape.len() > letter {
            return;
        }
        let weight: u32 = shape.iter().sum();
        for k in 0..=weight {
            for nu in horizontal_strips(shape, k) {
                let mut e = exps;
                e[letter - 1] = k;
                go(&nu, letter - 1, e, out);
            }
        }
    }
    go(mu.parts(), 3, [0; 3], &mut out);
    out
}

/// Schur expansion `p = Σ c_μ s_μ(q)` of a symmetric polynomial in three parameters.
///
/// Each homogeneous part is peeled by its lex-leading exponent, which is a
/// partition and the leading monomial of the matching Schur polynomial.
pub fn schur_decompose_q3(p: &QPoly3) -> Result<BTreeMap<Partition, BigRational>, SymError> {
    if !p.is_symmetric() {
        return Err(SymError::NotSymmetric);
    }
    let mut out = BTreeMap::new();
    for (_, mut part) in p.homogeneous_parts() {
        while let Some((e, c)) = part.terms().last().map(|(e, c)| (*e, c.clone())) {
            let mu = Partition::new(e.to_vec());
            let s = schur_q3(&mu);
            part = part - s_scaled(&s, &c);
            out.insert(mu, c);
        }
    }
    Ok(out)
}

fn s_scaled(s: &QPoly3, c: &BigRational) -> QPoly3 {
    s * &QPoly3::constant(c.clone())
}

/// Re-expands a Schur decomposition into a polynomial.
pub fn schur_recompose_q3(coeffs: &BTreeMap<Partition, BigRational>) -> QPoly3 {
    coeffs
        .iter()
        .fold(QPoly3::new(), |acc, (mu, c)| acc + s_scaled(&schur_q3(mu), c))
}

/// `Σ c_μ s_μ` as text, smallest degree first; `s_∅` is written `1`.
pub fn render_schur_q3(c: &BTreeMap<Partition, BigRational>) -> String {
    if c.is_empty() {
        return "0".into();
    }
    let mut parts: Vec<(Partition, BigRational)> = c.iter().map(|(m, v)| (m.clone(), v.clone())).collect();
    parts.sort_by_key(|(m, _)| (m.weight(), std::cmp::Reverse(m.clone())));
    parts
        .iter()
        .map(|(m, v)| {
            let base = if m.weight() == 0 { String::new() } else { format!("s{m}") };
            match (v.is_one(), base.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => base,
                (false, true) => v.to_string(),
                (false, false) => format!("{v}{base}"),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// True when every Schur coefficient is a non-negative integer.
pub fn is_schur_positive(coeffs: &BTreeMap<Partition, BigRational>) -> bool {
    coeffs
        .values()
        .all(|c| c.is_integer() && c >= &BigRational::zero())
}

/// `s_{ab}(1,1,1) = (b+1)(a+2)(a-b+1)/2`.
pub fn two_row_at_ones(a: u32, b: u32) -> BigInt {
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    (&b + 1) * (&a + 2) * (a - b + 1) / 2
}
