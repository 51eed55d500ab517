//! Truncated formal power series in one variable `t` with rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients of `t^0 .. t^N`; everything beyond `N` is discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    c: Vec<BigRational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            c: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigRational::one())
    }

    pub fn constant(order: usize, a: BigRational) -> Self {
        let mut s = Self::zero(order);
        s.c[0] = a;
        s
    }

    /// `t` truncated at `order`.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.c[1] = BigRational::one();
        }
        s
    }

    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut s = Self::zero(order);
        for (i, a) in coeffs.into_iter().take(order + 1).enumerate() {
            s.c[i] = a;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.c[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn add(&self, o: &Series) -> Series {
        Series {
            c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Series) -> Series {
        Series {
            c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, a: &BigRational) -> Series {
        Series {
            c: self.c.iter().map(|x| x * a).collect(),
        }
    }

    pub fn mul(&self, o: &Series) -> Series {
        let n = self.order().min(o.order());
        let mut out = Series::zero(n);
        for (i, a) in self.c.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate().take(n + 1 - i) {
                out.c[i + j] += a * b;
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Series {
        (0..k).fold(Series::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Formal derivative; the top coefficient becomes zero.
    pub fn derivative(&self) -> Series {
        let n = self.order();
        let mut out = Series::zero(n);
        for k in 1..=n {
            out.c[k - 1] = &self.c[k] * BigRational::from_integer(BigInt::from(k));
        }
        out
    }

    /// `exp(self)`; requires a zero constant term.
    pub fn exp(&self) -> Series {
        assert!(self.c[0].is_zero(), "exp needs a zero constant term");
        // E' = f' E, solved coefficient by coefficient.
        let n = self.order();
        let d = self.derivative();
        let mut e = Series::zero(n);
        e.c[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 0..k {
                acc += &d.c[j] * &e.c[k - 1 - j];
            }
            e.c[k] = acc / BigRational::from_integer(BigInt::from(k));
        }
        e
    }

    /// Multiplicative inverse; requires a non-zero constant term.
    pub fn inverse(&self) -> Series {
        assert!(!self.c[0].is_zero(), "inverse needs a unit constant term");
        let n = self.order();
        let inv0 = self.c[0].recip();
        let mut out = Series::zero(n);
        out.c[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.c[j] * &out.c[k - j];
            }
            out.c[k] = -acc * &inv0;
        }
        out
    }

    /// Keeps coefficients up to `order`.
    pub fn truncate(&self, order: usize) -> Series {
        Series {
            c: self.c.iter().take(order + 1).cloned().collect(),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, a)| match k {
                0 => crate::util::fmt_rational_short(a),
                1 => format!("{}*t", crate::util::fmt_rational_short(a)),
                _ => format!("{}*t^{k}", crate::util::fmt_rational_short(a)),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{} + O(t^{})", parts.join(" + "), self.order() + 1)
        }
    }
}
