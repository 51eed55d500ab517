use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::SymError;
use crate::util::factorial;

/// An integer partition, stored as weakly decreasing positive parts.
///
/// The derived ordering is lexicographic on the parts; the canonical listing
/// order used throughout the crate is the reverse of it, so `(3)` comes before
/// `(2,1)` which comes before `(1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1,1,...,1)` of weight `n`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Part `i` (zero-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = SymError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&p| p < 10) {
            for p in &self.0 {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// An ordered list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SymError> {
        Self::try_from(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::new(self.0.clone())
    }

    /// Builds the composition of `n` whose proper partial sums are `positions`.
    ///
    /// `positions` must be strictly increasing and lie in `1..n`.
    pub fn from_descent_set(n: usize, positions: &[usize]) -> Self {
        let mut parts = Vec::with_capacity(positions.len() + 1);
        let mut last = 0;
        for &p in positions.iter().chain(std::iter::once(&n)) {
            parts.push((p - last) as u32);
            last = p;
        }
        Composition(parts)
    }

    /// Proper partial sums `c_1, c_1 + c_2, ...` excluding the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let k = self.0.len();
        self.0[..k.saturating_sub(1)]
            .iter()
            .map(|&p| {
                acc += p as usize;
                acc
            })
            .collect()
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = SymError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        if parts.iter().any(|&p| p == 0) {
            return Err(SymError::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&p| p < 10) {
            for p in &self.0 {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with at most `max_len` parts, reverse-lexicographic.
pub fn partitions_with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

/// Centralizer order `z_λ = Π i^{d_i} d_i!`.
pub fn z_of(lambda: &Partition) -> BigInt {
    let mut z = BigInt::from(1);
    let mut i = 0;
    let parts = lambda.parts();
    while i < parts.len() {
        let p = parts[i];
        let mut d = 0;
        while i < parts.len() && parts[i] == p {
            d += 1;
            i += 1;
        }
        z *= BigInt::from(p).pow(d as u32) * factorial(d as u64);
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn partition_counts_match_brute_force() {
        // Oracle: count weakly decreasing sequences by filtering all tuples.
        fn brute(n: u32) -> usize {
            fn go(rest: u32, max: u32) -> usize {
                if rest == 0 {
                    return 1;
                }
                (1..=max.min(rest)).map(|p| go(rest - p, p)).sum()
            }
            go(n, n)
        }
        for n in 0..=10 {
            assert_eq!(partitions_of(n).len(), brute(n as u32));
        }
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn reverse_lex_order() {
        let ps = partitions_of(6);
        for w in ps.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&Partition::column(5)), BigInt::from(120));
        assert_eq!(z_of(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(z_of(&p(&[3])), BigInt::from(3));
        assert_eq!(z_of(&p(&[2, 2, 1])), BigInt::from(8));
    }

    #[test]
    fn invalid_parts_rejected() {
        assert!(Partition::try_from(vec![1, 2]).is_err());
        assert!(Partition::try_from(vec![2, 0]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn descent_sets_round_trip() {
        let c = Composition::new(vec![2, 2, 1]).unwrap();
        assert_eq!(c.descent_set(), vec![2, 4]);
        assert_eq!(Composition::from_descent_set(5, &[2, 4]), c);
        assert_eq!(Composition::from_descent_set(3, &[]).parts(), &[3]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }
}
