//! r-Dyck paths and the r-Tamari poset.
//!
//! A path of height `n` is stored by its left-boundary sequence
//! `a_1 <= ... <= a_n` with `a_i <= r(i-1)`. The top of the poset is `0...0`
//! and every cover strictly lowers `Σ a_i`.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};

use bitvec::prelude::*;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::symcore::Composition;
use crate::util::binomial;

#[derive(Debug, thiserror::Error)]
pub enum TamariError {
    #[error("invalid {r}-Dyck path {a:?}")]
    InvalidPath { r: u32, a: Vec<u32> },
    #[error("cannot parse path {0:?}")]
    Parse(String),
    #[error("n and r must be at least 1")]
    BadParameters,
    #[error("path {0} is not in the poset")]
    NotInPoset(String),
    #[error("{0} and {1} are not comparable")]
    NotComparable(String, String),
    #[error("index {0} out of range")]
    OutOfRange(usize),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DyckPath {
    r: u32,
    a: Vec<u32>,
}

impl DyckPath {
    pub fn new(r: u32, a: Vec<u32>) -> Result<Self, TamariError> {
        let ok = r >= 1
            && !a.is_empty()
            && a.windows(2).all(|w| w[0] <= w[1])
            && a.iter().enumerate().all(|(i, &x)| x as u64 <= r as u64 * i as u64);
        if ok {
            Ok(DyckPath { r, a })
        } else {
            Err(TamariError::InvalidPath { r, a })
        }
    }

    /// Parses `"00367"` or `"0,0,3,6,7"`.
    pub fn parse(s: &str, r: u32) -> Result<Self, TamariError> {
        let s = s.trim();
        let a: Option<Vec<u32>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        let a = a.filter(|v| !v.is_empty()).ok_or_else(|| TamariError::Parse(s.to_string()))?;
        Self::new(r, a)
    }

    /// The top element `0...0`.
    pub fn top(n: usize, r: u32) -> Self {
        DyckPath { r, a: vec![0; n] }
    }

    /// The bottom element `a_i = r(i-1)`.
    pub fn bottom(n: usize, r: u32) -> Self {
        DyckPath {
            r,
            a: (0..n as u32).map(|i| r * i).collect(),
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.a
    }

    pub fn sum(&self) -> u64 {
        self.a.iter().map(|&x| x as u64).sum()
    }

    /// `r·C(n,2) − Σ a_i`.
    pub fn area(&self) -> u64 {
        let n = self.n() as u64;
        self.r as u64 * n * n.saturating_sub(1) / 2 - self.sum()
    }

    /// Lengths of the maximal runs of equal values.
    pub fn co(&self) -> Composition {
        let runs: Vec<u32> = self
            .a
            .chunk_by(|x, y| x == y)
            .map(|c| c.len() as u32)
            .collect();
        Composition::new(runs).expect("runs are non-empty")
    }

    /// End `k` (1-based) of the primitive subsequence starting at 1-based `i`.
    pub fn primitive_end(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.n(), "index {i} out of 1..={}", self.n());
        let (r, ai) = (self.r as u64, self.a[i - 1] as u64);
        let mut k = i;
        while k < self.n() && (self.a[k] as u64) - ai < r * (k + 1 - i) as u64 {
            k += 1;
        }
        k
    }

    /// Paths covering `self`: for each rise `a_{i-1} < a_i`, decrement the primitive
    /// subsequence starting at `i`.
    pub fn up_covers(&self) -> Vec<DyckPath> {
        (2..=self.n())
            .filter(|&i| self.a[i - 2] < self.a[i - 1])
            .map(|i| {
                let k = self.primitive_end(i);
                let mut a = self.a.clone();
                for v in &mut a[i - 1..k] {
                    *v -= 1;
                }
                DyckPath { r: self.r, a }
            })
            .collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.iter().all(|&x| x <= 9) {
            for x in &self.a {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.a.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// All r-Dyck paths of height `n` in lexicographic order.
pub fn enumerate_paths(n: usize, r: u32) -> Vec<DyckPath> {
    let mut out = Vec::new();
    for_each_path(n, r, |a| out.push(DyckPath { r, a: a.to_vec() }));
    out
}

/// Visits every path's value sequence in lexicographic order without allocating paths.
pub fn for_each_path(n: usize, r: u32, mut visit: impl FnMut(&[u32])) {
    fn go(i: usize, n: usize, r: u32, cur: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if i == n {
            visit(cur);
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=r * i as u32 {
            cur.push(v);
            go(i + 1, n, r, cur, visit);
            cur.pop();
        }
    }
    if n == 0 || r == 0 {
        return;
    }
    go(0, n, r, &mut Vec::with_capacity(n), &mut visit);
}

/// `1/(rn+1) · C((r+1)n, n)`.
pub fn fuss_catalan(n: usize, r: u32) -> BigInt {
    let (n, r) = (n as u64, r as u64);
    binomial((r + 1) * n, n) / BigInt::from(r * n + 1)
}

/// A polynomial in `q` with non-negative integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalPoly(pub Vec<u64>);

impl IntervalPoly {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn at_one(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn at_zero(&self) -> u64 {
        self.0.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for IntervalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().filter(|(_, &c)| c > 0) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{c}q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{c}q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema_version: u32,
    n: usize,
    r: u32,
    covers: Vec<[usize; 2]>,
}

/// The r-Tamari poset on all paths of height `n`.
#[derive(Clone, Debug)]
pub struct TamariPoset {
    n: usize,
    r: u32,
    elements: Vec<DyckPath>,
    index: HashMap<Vec<u32>, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    /// Element indices sorted by decreasing `Σ a_i`, so every cover goes forward.
    bottom_up: Vec<usize>,
    downsets: Vec<BitVec>,
}

impl TamariPoset {
    pub fn build(n: usize, r: u32) -> Result<Self, TamariError> {
        if n == 0 || r == 0 {
            return Err(TamariError::BadParameters);
        }
        let elements = enumerate_paths(n, r);
        let index: HashMap<Vec<u32>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.a.clone(), i))
            .collect();
        let covers: Vec<[usize; 2]> = elements
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                let index = &index;
                p.up_covers().into_iter().map(move |q| [i, index[&q.a]])
            })
            .collect();
        Ok(Self::from_covers(n, r, elements, index, &covers))
    }

    fn from_covers(
        n: usize,
        r: u32,
        elements: Vec<DyckPath>,
        index: HashMap<Vec<u32>, usize>,
        covers: &[[usize; 2]],
    ) -> Self {
        let len = elements.len();
        let mut up = vec![Vec::new(); len];
        let mut down = vec![Vec::new(); len];
        for &[lo, hi] in covers {
            up[lo].push(hi);
            down[hi].push(lo);
        }
        let mut bottom_up: Vec<usize> = (0..len).collect();
        bottom_up.sort_by_key(|&i| (std::cmp::Reverse(elements[i].sum()), i));
        let mut downsets: Vec<BitVec> = vec![bitvec![0; len]; len];
        for &i in &bottom_up {
            let mut d = bitvec![0; len];
            d.set(i, true);
            for &lo in &down[i] {
                d |= &downsets[lo];
            }
            downsets[i] = d;
        }
        TamariPoset {
            n,
            r,
            elements,
            index,
            up,
            down,
            bottom_up,
            downsets,
        }
    }

    /// Loads covers from `dir` when a matching cache file exists, otherwise builds
    /// the poset and writes the cache.
    pub fn load_or_build(n: usize, r: u32, dir: Option<&Path>) -> Result<Self, TamariError> {
        let Some(dir) = dir else {
            return Self::build(n, r);
        };
        let file = Self::cache_path(dir, n, r);
        if file.exists() {
            match Self::read_cache(&file, n, r) {
                Ok(p) => return Ok(p),
                Err(e) => log::warn!("ignoring cache {}: {e}", file.display()),
            }
        }
        let p = Self::build(n, r)?;
        p.write_cache(dir)?;
        Ok(p)
    }

    pub fn cache_path(dir: &Path, n: usize, r: u32) -> PathBuf {
        dir.join(format!("tamari_n{n}_r{r}.json"))
    }

    fn read_cache(file: &Path, n: usize, r: u32) -> Result<Self, TamariError> {
        let text = std::fs::read_to_string(file)?;
        let c: CacheFile = serde_json::from_str(&text).map_err(|e| TamariError::Cache(e.to_string()))?;
        if c.schema_version != 1 || c.n != n || c.r != r {
            return Err(TamariError::Cache("header mismatch".into()));
        }
        let elements = enumerate_paths(n, r);
        let len = elements.len();
        for &[lo, hi] in &c.covers {
            if lo >= len || hi >= len || elements[hi].sum() >= elements[lo].sum() {
                return Err(TamariError::Cache(format!("bad cover [{lo},{hi}]")));
            }
        }
        let index = elements.iter().enumerate().map(|(i, p)| (p.a.clone(), i)).collect();
        Ok(Self::from_covers(n, r, elements, index, &c.covers))
    }

    pub fn write_cache(&self, dir: &Path) -> Result<PathBuf, TamariError> {
        std::fs::create_dir_all(dir)?;
        let file = Self::cache_path(dir, self.n, self.r);
        let c = CacheFile {
            schema_version: 1,
            n: self.n,
            r: self.r,
            covers: self.covers(),
        };
        let text = serde_json::to_string(&c).map_err(|e| TamariError::Cache(e.to_string()))?;
        std::fs::write(&file, text)?;
        Ok(file)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[DyckPath] {
        &self.elements
    }

    pub fn index_of(&self, p: &DyckPath) -> Result<usize, TamariError> {
        if p.r != self.r {
            return Err(TamariError::NotInPoset(p.to_string()));
        }
        self.index
            .get(&p.a)
            .copied()
            .ok_or_else(|| TamariError::NotInPoset(p.to_string()))
    }

    /// Cover pairs `[lower, upper]` sorted by lower then upper index.
    pub fn covers(&self) -> Vec<[usize; 2]> {
        let mut out: Vec<[usize; 2]> = self
            .up
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| [i, j]))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn up_cover_indices(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn down_cover_indices(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn downset(&self, i: usize) -> &BitSlice {
        &self.downsets[i]
    }

    /// `α ≤ β` by index.
    pub fn leq(&self, alpha: usize, beta: usize) -> bool {
        self.downsets[beta][alpha]
    }

    /// `i_β = #{α ≤ β}`.
    pub fn downset_size(&self, beta: usize) -> usize {
        self.downsets[beta].count_ones()
    }

    /// Longest-chain distances `d(α, β)` for every `α ≤ β`; `None` outside the downset.
    pub fn distances_to(&self, beta: usize) -> Vec<Option<u32>> {
        let mut dist: Vec<Option<u32>> = vec![None; self.len()];
        dist[beta] = Some(0);
        let ds = &self.downsets[beta];
        // Reverse of bottom-up visits each element after everything above it.
        for &i in self.bottom_up.iter().rev() {
            if i == beta || !ds[i] {
                continue;
            }
            dist[i] = self.up[i].iter().filter_map(|&j| dist[j]).max().map(|d| d + 1);
        }
        dist
    }

    pub fn longest_chain_length(&self, alpha: &DyckPath, beta: &DyckPath) -> Result<u32, TamariError> {
        let (a, b) = (self.index_of(alpha)?, self.index_of(beta)?);
        if !self.leq(a, b) {
            return Err(TamariError::NotComparable(alpha.to_string(), beta.to_string()));
        }
        Ok(self.distances_to(b)[a].expect("α in downset of β"))
    }

    /// `i_β(q) = Σ_{α ≤ β} q^{d(α,β)}`.
    pub fn interval_poly(&self, beta: usize) -> IntervalPoly {
        let mut coeffs: Vec<u64> = Vec::new();
        for d in self.distances_to(beta).into_iter().flatten() {
            let d = d as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += 1;
        }
        IntervalPoly(coeffs)
    }

    /// Interval polynomials of all elements, computed in parallel, in element order.
    pub fn interval_polys(&self) -> Vec<IntervalPoly> {
        (0..self.len()).into_par_iter().map(|b| self.interval_poly(b)).collect()
    }

    /// `Σ_β i_β`, the number of intervals.
    pub fn interval_count(&self) -> u64 {
        (0..self.len()).map(|b| self.downset_size(b) as u64).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn path(s: &str, r: u32) -> DyckPath {
        DyckPath::parse(s, r).unwrap()
    }

    #[test]
    fn validation_and_display() {
        assert!(DyckPath::new(1, vec![0, 2]).is_err());
        assert!(DyckPath::new(1, vec![0, 1, 0]).is_err());
        assert!(DyckPath::new(1, vec![1]).is_err());
        let p = path("00367", 2);
        assert_eq!(p.to_string(), "00367");
        assert_eq!(p.area(), 4);
        let wide = DyckPath::new(5, vec![0, 5, 10]).unwrap();
        assert_eq!(wide.to_string(), "0,5,10");
        assert_eq!(DyckPath::parse("0,5,10", 5).unwrap(), wide);
    }

    #[test]
    fn co_and_primitive_end() {
        assert_eq!(path("00112", 1).co().parts(), &[2, 2, 1]);
        assert_eq!(path("000", 1).co().parts(), &[3]);
        assert_eq!(path("0011", 1).primitive_end(3), 4);
        assert_eq!(path("0123", 1).primitive_end(2), 2);
        assert_eq!(path("0123", 1).primitive_end(4), 4);
    }

    #[test]
    fn covers_of_small_paths() {
        let got: Vec<String> = path("0011", 1).up_covers().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["0000"]);
        let got: BTreeSet<String> = path("0123", 1).up_covers().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["0023", "0113", "0122"].iter().map(|s| s.to_string()).collect());
        assert!(path("0000", 1).up_covers().is_empty());
    }

    #[test]
    fn poset_3_1() {
        let p = TamariPoset::build(3, 1).unwrap();
        let named: BTreeSet<(String, String)> = p
            .covers()
            .iter()
            .map(|&[lo, hi]| (p.elements()[lo].to_string(), p.elements()[hi].to_string()))
            .collect();
        let expected: BTreeSet<(String, String)> = [("012", "002"), ("012", "011"), ("002", "001"), ("001", "000"), ("011", "000")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(named, expected);
        let top = p.index_of(&path("000", 1)).unwrap();
        assert_eq!(p.interval_poly(top), IntervalPoly(vec![1, 2, 1, 1]));
        assert_eq!(p.interval_poly(top).to_string(), "1 + 2q + q^2 + q^3");
        assert_eq!(p.longest_chain_length(&path("012", 1), &path("000", 1)).unwrap(), 3);
        assert!(p.longest_chain_length(&path("002", 1), &path("011", 1)).is_err());
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let built = TamariPoset::load_or_build(4, 2, Some(dir.path())).unwrap();
        assert!(TamariPoset::cache_path(dir.path(), 4, 2).exists());
        let loaded = TamariPoset::load_or_build(4, 2, Some(dir.path())).unwrap();
        assert_eq!(built.covers(), loaded.covers());
        assert_eq!(built.interval_count(), loaded.interval_count());
        std::fs::write(TamariPoset::cache_path(dir.path(), 4, 2), "{\"schema_version\":1,\"n\":4,\"r\":2,\"covers\":[[0,999]]}").unwrap();
        let rebuilt = TamariPoset::load_or_build(4, 2, Some(dir.path())).unwrap();
        assert_eq!(rebuilt.covers(), built.covers());
    }
}
