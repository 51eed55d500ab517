//! r-parking functions, their shapes and the dinv statistic.
//!
//! Values are 0-based; positions in `α(f)` are 1-based.

use serde::Serialize;

use crate::symcore::Composition;
use crate::tamari::{for_each_path, DyckPath, TamariError};

#[derive(Debug, thiserror::Error)]
pub enum ParkingError {
    #[error("{f:?} is not a {r}-parking function")]
    NotParking { r: u32, f: Vec<u32> },
    #[error(transparent)]
    Path(#[from] TamariError),
}

/// Lex-increasing rearrangement of `(position, value)` pairs, ordered by value
/// first and position second.
pub fn rearrange(f: &[u32]) -> (Vec<usize>, Vec<u32>) {
    let mut pairs: Vec<(u32, usize)> = f.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
    pairs.sort_unstable();
    pairs.into_iter().map(|(v, i)| (i, v)).unzip()
}

/// True when the sorted values satisfy `b_k <= r(k-1)`.
pub fn is_parking(f: &[u32], r: u32) -> bool {
    let mut b = f.to_vec();
    b.sort_unstable();
    b.iter().enumerate().all(|(k, &v)| v as u64 <= r as u64 * k as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParkingFunction {
    r: u32,
    f: Vec<u32>,
    alpha: Vec<usize>,
    beta: Vec<u32>,
}

impl ParkingFunction {
    pub fn new(f: Vec<u32>, r: u32) -> Result<Self, ParkingError> {
        if r == 0 || f.is_empty() || !is_parking(&f, r) {
            return Err(ParkingError::NotParking { r, f });
        }
        let (alpha, beta) = rearrange(&f);
        Ok(ParkingFunction { r, f, alpha, beta })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn values(&self) -> &[u32] {
        &self.f
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn shape(&self) -> DyckPath {
        DyckPath::new(self.r, self.beta.clone()).expect("sorted parking values form a path")
    }

    /// Cars of `α(f)` ordered by offset `c_i`, ties by row.
    pub fn reading_word(&self) -> Vec<usize> {
        let c = self.offsets();
        let mut rows: Vec<usize> = (0..self.alpha.len()).collect();
        rows.sort_by_key(|&i| (c[i], i));
        rows.into_iter().map(|i| self.alpha[i]).collect()
    }

    /// Composition whose partial sums are the inverse descents of the reading
    /// word: values `i` with `i+1` to the left of `i`.
    ///
    /// Within one shape the `q^dinv`-weighted sum of `Q_co(f)` is symmetric only
    /// for this order; on runs of equal offsets it agrees with `α(f)`.
    pub fn descent_composition(&self) -> Composition {
        descent_composition_of(&self.reading_word())
    }

    /// Diagonal offsets `c_i = r·i − b_i` (1-based `i`).
    pub fn offsets(&self) -> Vec<i64> {
        offsets(self.r, &self.beta)
    }

    pub fn dinv(&self) -> u64 {
        dinv_raw(self.r, &self.alpha, &self.beta)
    }
}

fn offsets(r: u32, beta: &[u32]) -> Vec<i64> {
    beta.iter()
        .enumerate()
        .map(|(i, &b)| r as i64 * (i as i64 + 1) - b as i64)
        .collect()
}

fn descent_composition_of(alpha: &[usize]) -> Composition {
    let base = alpha.iter().copied().min().unwrap_or(0);
    let mut pos = vec![0; alpha.len()];
    for (i, &a) in alpha.iter().enumerate() {
        pos[a - base] = i;
    }
    let descents: Vec<usize> = (1..alpha.len()).filter(|&i| pos[i] < pos[i - 1]).collect();
    Composition::from_descent_set(alpha.len(), &descents)
}

/// Counts triples `(i < j, 0 <= d < r)` with `t = c_i − c_j + d` satisfying
/// `t = 0 ∧ a_i < a_j`, or `1 <= t <= r−1`, or `t = r ∧ a_i > a_j`.
fn dinv_raw(r: u32, alpha: &[usize], beta: &[u32]) -> u64 {
    let c = offsets(r, beta);
    let r = r as i64;
    let n = alpha.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            for d in 0..r {
                let t = c[i] - c[j] + d;
                if (t == 0 && alpha[i] < alpha[j]) || (1..r).contains(&t) || (t == r && alpha[i] > alpha[j]) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Calls `visit` with each value sequence of shape `beta`.
///
/// Positions are distributed over the runs of `beta` in lexicographic order of
/// the position sets, so the count is the multinomial of `co(β)`.
pub fn for_each_of_shape(beta: &DyckPath, mut visit: impl FnMut(&[u32])) {
    let runs: Vec<(u32, usize)> = beta
        .values()
        .chunk_by(|x, y| x == y)
        .map(|c| (c[0], c.len()))
        .collect();
    let n = beta.n();
    let mut f = vec![u32::MAX; n];
    fn go(runs: &[(u32, usize)], start: usize, left: usize, f: &mut [u32], visit: &mut dyn FnMut(&[u32])) {
        let Some(&(value, _)) = runs.first() else {
            visit(f);
            return;
        };
        if left == 0 {
            go(&runs[1..], 0, runs.get(1).map_or(0, |r| r.1), f, visit);
            return;
        }
        for pos in start..f.len() {
            if f[pos] != u32::MAX {
                continue;
            }
            f[pos] = value;
            go(runs, pos + 1, left - 1, f, visit);
            f[pos] = u32::MAX;
        }
    }
    let first = runs.first().map_or(0, |r| r.1);
    go(&runs, 0, first, &mut f, &mut visit);
}

/// All parking functions of shape `beta`.
pub fn pf_of_shape(beta: &DyckPath) -> Vec<ParkingFunction> {
    let mut out = Vec::new();
    for_each_of_shape(beta, |f| {
        out.push(ParkingFunction::new(f.to_vec(), beta.r()).expect("shape enumeration yields parking functions"))
    });
    out
}

/// Calls `visit` with every r-parking function of length `n`, shape by shape.
pub fn for_each_parking(n: usize, r: u32, mut visit: impl FnMut(&[u32])) {
    for_each_path(n, r, |a| {
        let beta = DyckPath::new(r, a.to_vec()).expect("enumerated path is valid");
        for_each_of_shape(&beta, &mut visit);
    });
}

/// All r-parking functions of length `n`.
pub fn all_parking(n: usize, r: u32) -> Vec<ParkingFunction> {
    let mut out = Vec::new();
    for_each_parking(n, r, |f| out.push(ParkingFunction::new(f.to_vec(), r).expect("valid")));
    out
}

/// One row of a parking-function report.
#[derive(Clone, Debug, Serialize)]
pub struct ParkingRow {
    pub f: Vec<u32>,
    pub shape: Vec<u32>,
    pub co: Vec<u32>,
    pub dinv: u64,
}

impl From<&ParkingFunction> for ParkingRow {
    fn from(p: &ParkingFunction) -> Self {
        ParkingRow {
            f: p.f.clone(),
            shape: p.beta.clone(),
            co: p.descent_composition().parts().to_vec(),
            dinv: p.dinv(),
        }
    }
}
