use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::linalg::SpanBasis;
use super::xpoly::XPoly;
use super::HarmonicsError;
use crate::symcore::{character_value, class_representative, partitions_of, z_of, Partition, QPoly3};
use crate::util::permutation_sign;

/// Row degrees `(d1, d2, d3)` in `x, y, z`.
pub type TriDegree = [u32; 3];

/// A finite-dimensional `S_n`-stable space of polynomials, graded by tri-degree.
///
/// Each component is kept as a reduced echelon basis. With `sign_twist` the
/// diagonal action is multiplied by the sign character.
#[derive(Clone, Debug)]
pub struct GradedSpace {
    n: usize,
    sign_twist: bool,
    components: BTreeMap<TriDegree, SpanBasis>,
}

impl GradedSpace {
    pub fn new(n: usize, sign_twist: bool) -> Self {
        GradedSpace {
            n,
            sign_twist,
            components: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sign_twist(&self) -> bool {
        self.sign_twist
    }

    /// Adds `v` to the component of its tri-degree; `v` must be homogeneous.
    pub fn insert(&mut self, v: &XPoly) -> Result<bool, HarmonicsError> {
        let Some(d) = v.tdeg() else {
            return if v.is_zero() { Ok(false) } else { Err(HarmonicsError::NotHomogeneous) };
        };
        let n = self.n;
        Ok(self
            .components
            .entry(d)
            .or_insert_with(|| SpanBasis::new(n))
            .insert(v)
            .is_some())
    }

    pub(crate) fn set_component(&mut self, d: TriDegree, basis: SpanBasis) {
        if basis.dim() > 0 {
            self.components.insert(d, basis);
        } else {
            self.components.remove(&d);
        }
    }

    pub fn component(&self, d: TriDegree) -> &[XPoly] {
        self.components.get(&d).map_or(&[], |b| b.basis())
    }

    pub fn contains(&self, v: &XPoly) -> bool {
        match v.tdeg() {
            None => v.is_zero(),
            Some(d) => self.components.get(&d).is_some_and(|b| b.contains(v)),
        }
    }

    pub fn degrees(&self) -> impl Iterator<Item = TriDegree> + '_ {
        self.components.keys().copied()
    }

    pub fn dims(&self) -> BTreeMap<TriDegree, usize> {
        self.components.iter().map(|(d, b)| (*d, b.dim())).collect()
    }

    pub fn dim(&self) -> usize {
        self.components.values().map(SpanBasis::dim).sum()
    }

    /// `Σ_d dim(V_d) q^d`.
    pub fn hilbert_series(&self) -> QPoly3 {
        let mut out = QPoly3::new();
        for (d, b) in &self.components {
            out.add_term(*d, BigRational::from_integer(BigInt::from(b.dim())));
        }
        out
    }

    /// Trace of `σ` on the component of degree `d`.
    ///
    /// Uses the pivot coefficients: `tr σ = Σ_i b_i[σ⁻¹·m_i]`.
    pub fn trace(&self, d: TriDegree, sigma: &[usize]) -> BigRational {
        let Some(basis) = self.components.get(&d) else {
            return BigRational::zero();
        };
        let mut inv = vec![0; sigma.len()];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i;
        }
        let mut t = BigRational::zero();
        for (b, m) in basis.basis().iter().zip(basis.pivot_monomials()) {
            if let Some(c) = b.coeff_ref(&m.permute(&inv)) {
                t += c;
            }
        }
        if self.sign_twist && permutation_sign(sigma) < 0 {
            -t
        } else {
            t
        }
    }

    /// Multiplicity of each irreducible `S^λ` in each component.
    pub fn multiplicities(&self) -> Result<BTreeMap<TriDegree, BTreeMap<Partition, BigInt>>, HarmonicsError> {
        let classes: Vec<(Partition, Vec<usize>, BigInt)> = partitions_of(self.n)
            .into_iter()
            .map(|mu| {
                let rep = class_representative(&mu);
                let z = z_of(&mu);
                (mu, rep, z)
            })
            .collect();
        let lambdas = partitions_of(self.n);
        let mut chars = BTreeMap::new();
        for l in &lambdas {
            for (mu, _, _) in &classes {
                chars.insert((l.clone(), mu.clone()), character_value(l, mu)?);
            }
        }
        let mut out = BTreeMap::new();
        for &d in self.components.keys() {
            let traces: Vec<BigRational> = classes.iter().map(|(_, rep, _)| self.trace(d, rep)).collect();
            let mut row = BTreeMap::new();
            for l in &lambdas {
                let mut m = BigRational::zero();
                for ((mu, _, z), t) in classes.iter().zip(&traces) {
                    let chi = &chars[&(l.clone(), mu.clone())];
                    m += t * BigRational::new(chi.clone(), z.clone());
                }
                if !m.is_integer() || m < BigRational::zero() {
                    return Err(HarmonicsError::BadMultiplicity {
                        degree: d,
                        lambda: l.clone(),
                        value: m.to_string(),
                    });
                }
                if !m.is_zero() {
                    row.insert(l.clone(), m.to_integer());
                }
            }
            out.insert(d, row);
        }
        Ok(out)
    }

    /// Graded Frobenius characteristic `Σ_λ (Σ_d m_λ(d) q^d) S_λ`.
    pub fn frobenius(&self) -> Result<BTreeMap<Partition, QPoly3>, HarmonicsError> {
        let mut out: BTreeMap<Partition, QPoly3> = BTreeMap::new();
        for (d, row) in self.multiplicities()? {
            for (l, m) in row {
                out.entry(l).or_default().add_term(d, BigRational::from_integer(m));
            }
        }
        Ok(out)
    }

    /// Multiplicity of the trivial representation, as a polynomial in `q`.
    pub fn trivial_part(&self) -> Result<QPoly3, HarmonicsError> {
        Ok(self.frobenius()?.remove(&Partition::new(vec![self.n as u32])).unwrap_or_default())
    }

    /// True when every component is mapped into itself by every transposition `(i i+1)`.
    pub fn is_stable(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| {
            let mut s: Vec<usize> = (0..self.n).collect();
            s.swap(i, i + 1);
            self.components
                .values()
                .all(|b| b.basis().iter().all(|v| b.contains(&v.diagonal_action(&s))))
        })
    }
}

/// Coefficient of `S_λ`, zero when absent.
pub fn frobenius_coefficient(f: &BTreeMap<Partition, QPoly3>, lambda: &[u32]) -> QPoly3 {
    f.get(&Partition::new(lambda.to_vec())).cloned().unwrap_or_default()
}
