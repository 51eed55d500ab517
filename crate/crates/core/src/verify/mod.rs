//! Identity harness: both sides of each identity are computed independently and
//! compared exactly.

mod counting;
mod frobenius;
mod harmonic_checks;
mod parking_checks;
mod series_checks;
mod nabla_checks;
pub mod tables;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::harmonics::HarmonicsError;
use crate::symcore::{Basis, Coeff, SymError, SymFunc};
use crate::tamari::{IntervalPoly, TamariError, TamariPoset};

pub use counting::{dimension_identity, interval_formula_check, interval_formula_rhs, trivial_part_check};
pub use frobenius::{
    conjecture1_check, conjecture1_rhs, frob_111, frob_chain_check, frob_m, frob_p, polya_h, tableau_evaluation,
    Convention, QAssignment,
};
pub use nabla_checks::nabla3_reports;
pub use harmonic_checks::{
    closure_check, commutator_random_check, degree_bound_check, higher_space_check, kernel_table_check,
};
pub use parking_checks::{fundamental_sum_total_check, parking_count_check, pf_fundamental_sum_check};
pub use series_checks::{cauchy_check, gen_series_identity, subste_check, subste_image};

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Tamari(#[from] TamariError),
    #[error(transparent)]
    Harmonics(#[from] HarmonicsError),
    #[error(transparent)]
    Parking(#[from] crate::parking::ParkingError),
}

/// Result of one exact comparison.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
    pub pass: bool,
    /// First differing coefficient when `pass` is false.
    pub witness: Option<String>,
    /// Conventions and warnings that qualify the result.
    pub notes: Vec<String>,
    /// Wall-clock seconds, only filled when timings are requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime: Option<f64>,
}

impl VerificationReport {
    pub fn new(identity: &str, params: &[(&str, serde_json::Value)]) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            lhs: serde_json::Value::Null,
            rhs: serde_json::Value::Null,
            pass: false,
            witness: None,
            notes: Vec::new(),
            runtime: None,
        }
    }

    /// Sets both sides and the verdict from a plain equality.
    pub fn compare<T: PartialEq + ToString>(mut self, lhs: &T, rhs: &T) -> Self {
        self.lhs = serde_json::Value::String(lhs.to_string());
        self.rhs = serde_json::Value::String(rhs.to_string());
        self.pass = lhs == rhs;
        if !self.pass {
            self.witness = Some(format!("{} != {}", lhs.to_string(), rhs.to_string()));
        }
        self
    }

    /// Compares two symmetric functions, rendering both in the Schur basis.
    pub fn compare_sym<C: Coeff>(mut self, lhs: &SymFunc<C>, rhs: &SymFunc<C>) -> Self {
        self.lhs = schur_json(lhs);
        self.rhs = schur_json(rhs);
        self.pass = lhs == rhs;
        if let Some((lambda, a, b)) = lhs.first_difference(rhs, Basis::Schur) {
            self.witness = Some(format!("coefficient of S[{lambda}]: {} vs {}", a.render(), b.render()));
        }
        self
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    /// Marks a failure discovered outside the main comparison.
    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.pass = false;
        self.witness = Some(witness.into());
        self
    }

    /// One-line summary for text output.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let side = |v: &serde_json::Value| match v {
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{verdict} {} [{}] {} = {}",
            self.identity,
            params.join(" "),
            side(&self.lhs),
            side(&self.rhs)
        );
        if let Some(w) = &self.witness {
            line.push_str(&format!(" (witness: {w})"));
        }
        line
    }
}

/// Schur expansion as an object from partition strings to rendered coefficients.
pub fn schur_json<C: Coeff>(f: &SymFunc<C>) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = f
        .coefficients(Basis::Schur)
        .into_iter()
        .rev()
        .map(|(lambda, c)| (format!("S[{lambda}]"), serde_json::Value::String(c.render())))
        .collect();
    serde_json::Value::Object(map)
}

/// Interval polynomials of the r-Tamari poset, optionally through the on-disk cache.
pub fn interval_data(
    n: usize,
    r: u32,
    cache_dir: Option<&std::path::Path>,
) -> Result<(TamariPoset, Vec<IntervalPoly>), VerifyError> {
    let poset = TamariPoset::load_or_build(n, r, cache_dir)?;
    let polys = poset.interval_polys();
    Ok((poset, polys))
}

pub(crate) fn rat_json(q: &BigRational) -> serde_json::Value {
    serde_json::Value::String(crate::util::fmt_rational_short(q))
}

/// Identity names accepted by [`run_all`].
pub const IDENTITY_NAMES: [&str; 16] = [
    "counts",
    "intervals",
    "dimension",
    "trivial_part",
    "frobenius",
    "polya",
    "fundamental",
    "gen_series",
    "cauchy",
    "subste",
    "harmonics",
    "degree_bound",
    "closure",
    "higher",
    "nabla3",
    "conjecture1",
];

/// Which identities to run and at which sizes.
#[derive(Clone, Debug, Default)]
pub struct VerifyConfig {
    /// Empty means every identity.
    pub names: Vec<String>,
    /// Restricts size-indexed identities to this `n`.
    pub n: Option<usize>,
    /// Restricts size-indexed identities to this `r`.
    pub r: Option<u32>,
    pub cache_dir: Option<PathBuf>,
    pub timings: bool,
}

impl VerifyConfig {
    fn sizes(&self, ns: std::ops::RangeInclusive<usize>, rs: std::ops::RangeInclusive<u32>) -> Vec<(usize, u32)> {
        let ns: Vec<usize> = match self.n {
            Some(n) => vec![n],
            None => ns.collect(),
        };
        let rs: Vec<u32> = match self.r {
            Some(r) => vec![r],
            None => rs.collect(),
        };
        ns.iter().flat_map(|&n| rs.iter().map(move |&r| (n, r))).collect()
    }
}

type Job = Box<dyn Fn() -> Result<Vec<VerificationReport>, VerifyError> + Send + Sync>;

fn jobs_for(name: &str, cfg: &VerifyConfig) -> Result<Vec<Job>, VerifyError> {
    let cache = cfg.cache_dir.clone();
    let mut jobs: Vec<Job> = Vec::new();
    macro_rules! per_size {
        ($ns:expr, $rs:expr, $f:expr) => {
            for (n, r) in cfg.sizes($ns, $rs) {
                let cache = cache.clone();
                jobs.push(Box::new(move || Ok(vec![$f(n, r, cache.as_deref())?])));
            }
        };
    }
    match name {
        "counts" => per_size!(1..=6, 1..=3, |n, r, _c: Option<&std::path::Path>| parking_count_check(n, r)),
        "intervals" => per_size!(1..=5, 1..=2, interval_formula_check),
        "dimension" => per_size!(1..=5, 1..=2, dimension_identity),
        "trivial_part" => per_size!(1..=5, 2..=3, trivial_part_check),
        "frobenius" => per_size!(1..=5, 1..=3, frob_chain_check),
        "polya" => per_size!(1..=5, 1..=2, polya_h),
        "fundamental" => {
            per_size!(1..=5, 1..=2, |n, r, _c: Option<&std::path::Path>| pf_fundamental_sum_check(n, r));
            jobs.push(Box::new(|| Ok(vec![fundamental_sum_total_check(3)?])));
        }
        "gen_series" => {
            for b in [2u32, 3, 4] {
                for a in [1i64, 4, 7] {
                    jobs.push(Box::new(move || Ok(vec![gen_series_identity(&BigRational::from_integer(a.into()), b, 12)])));
                }
            }
        }
        "cauchy" => per_size!(1..=5, 1..=1, |n, _r, _c: Option<&std::path::Path>| cauchy_check(n)),
        "subste" => per_size!(1..=6, 1..=3, |n, r, _c: Option<&std::path::Path>| subste_check(n, r)),
        "harmonics" => {
            let ns: Vec<usize> = cfg.n.map_or(vec![2, 3], |n| vec![n]);
            for n in ns {
                jobs.push(Box::new(move || Ok(vec![kernel_table_check(n)?])));
            }
        }
        "degree_bound" => jobs.push(Box::new(|| Ok(vec![degree_bound_check(3)?]))),
        "closure" => {
            let ns: Vec<usize> = cfg.n.map_or(vec![2, 3], |n| vec![n]);
            for n in ns {
                jobs.push(Box::new(move || Ok(vec![closure_check(n)?])));
            }
        }
        "higher" => {
            let rs: Vec<u32> = cfg.r.map_or((1..=4).collect(), |r| vec![r]);
            for r in rs {
                jobs.push(Box::new(move || Ok(vec![higher_space_check(r)?])));
            }
        }
        "nabla3" => jobs.push(Box::new(|| Ok(nabla_checks::nabla3_reports()))),
        "conjecture1" => {
            let cache = cache.clone();
            jobs.push(Box::new(move || conjecture1_check(cache.as_deref())));
        }
        other => return Err(VerifyError::UnknownIdentity(other.to_string())),
    }
    Ok(jobs)
}

/// Runs the selected identities in parallel; output order follows the request order.
pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<VerificationReport>, VerifyError> {
    let names: Vec<String> = if cfg.names.is_empty() || cfg.names.iter().any(|n| n == "all") {
        IDENTITY_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        cfg.names.clone()
    };
    let mut jobs = Vec::new();
    for name in &names {
        jobs.extend(jobs_for(name, cfg)?);
    }
    let timings = cfg.timings;
    let results: Vec<Result<Vec<VerificationReport>, VerifyError>> = jobs
        .par_iter()
        .map(|job| {
            let start = Instant::now();
            let mut reports = job()?;
            if timings {
                let secs = start.elapsed().as_secs_f64();
                for r in &mut reports {
                    r.runtime = Some(secs);
                }
            }
            Ok(reports)
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}
