use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::xpoly::{Mono, XPoly};

/// Sparse integer row, strictly increasing column indices, no zero entries.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Fraction-free row echelon form over the integers.
///
/// Stored rows are primitive with a positive leading entry.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseRow>,
}

fn make_primitive(row: &mut SparseRow) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let flip = row[0].1.is_negative();
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    if flip {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
}

/// `a·x − b·y` on sparse rows.
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Adds a row; returns true when the rank grows.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        make_primitive(&mut row);
        while let Some((c, lead)) = row.first().cloned() {
            match self.rows.get(&c) {
                None => {
                    self.rows.insert(c, row);
                    return true;
                }
                Some(p) => {
                    let plead = &p[0].1;
                    let g = plead.gcd(&lead);
                    row = combine(&(plead / &g), &row, &(&lead / &g), p);
                    make_primitive(&mut row);
                }
            }
        }
        false
    }

    /// Back-substitutes so each pivot column is zero outside its own row.
    pub fn reduce_fully(&mut self) {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        for &c in pivots.iter().rev() {
            let mut row = self.rows.remove(&c).expect("pivot row");
            let mut k = 1;
            while k < row.len() {
                let col = row[k].0;
                if let Some(p) = self.rows.get(&col) {
                    let lead = &p[0].1;
                    let v = row[k].1.clone();
                    let g = lead.gcd(&v);
                    row = combine(&(lead / &g), &row, &(&v / &g), p);
                    make_primitive(&mut row);
                } else {
                    k += 1;
                }
            }
            self.rows.insert(c, row);
        }
    }

    /// Primitive integer basis of the null space in `ncols` unknowns.
    pub fn kernel(&mut self, ncols: usize) -> Vec<Vec<BigInt>> {
        self.reduce_fully();
        let mut out = Vec::new();
        for f in (0..ncols).filter(|c| !self.rows.contains_key(c)) {
            let mut v: Vec<BigRational> = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (&c, row) in &self.rows {
                if let Ok(k) = row.binary_search_by_key(&f, |e| e.0) {
                    v[c] = -BigRational::new(row[k].1.clone(), row[0].1.clone());
                }
            }
            out.push(clear_denominators(&v));
        }
        out
    }
}

/// Smallest primitive integer multiple with the same direction.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Null space of a dense rational matrix with `ncols` columns.
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut ech = Echelon::new();
    for r in rows {
        let ints = clear_denominators(r);
        let sparse: SparseRow = ints.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        ech.insert(sparse);
        if ech.rank() == ncols {
            return Vec::new();
        }
    }
    ech.kernel(ncols)
}

/// Reduced echelon basis of a space of polynomials.
///
/// Each row has leading coefficient 1 at its pivot monomial, and no other row
/// involves that monomial.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    n: usize,
    rows: Vec<XPoly>,
    pivots: BTreeMap<Mono, usize>,
}

impl SpanBasis {
    pub fn new(n: usize) -> Self {
        SpanBasis {
            n,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[XPoly] {
        &self.rows
    }

    pub fn into_basis(self) -> Vec<XPoly> {
        self.rows
    }

    /// Pivot monomial of each basis row, in row order.
    pub fn pivot_monomials(&self) -> Vec<Mono> {
        self.rows
            .iter()
            .map(|r| *r.leading().expect("rows are non-zero").0)
            .collect()
    }

    /// `v` minus its projection on the span along pivot coordinates.
    pub fn reduce(&self, v: &XPoly) -> XPoly {
        let hits: Vec<(usize, BigRational)> = v
            .terms()
            .filter_map(|(m, c)| self.pivots.get(m).map(|&i| (i, c.clone())))
            .collect();
        let mut out = v.clone();
        for (i, c) in hits {
            out.add_scaled(&self.rows[i], &-c);
        }
        out
    }

    pub fn contains(&self, v: &XPoly) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns the new basis row when the dimension grows.
    pub fn insert(&mut self, v: &XPoly) -> Option<XPoly> {
        let r = self.reduce(v);
        if r.is_zero() {
            return None;
        }
        let r = r.normalized();
        let (&lead, _) = r.leading().expect("non-zero");
        for row in &mut self.rows {
            if let Some(c) = row.coeff_ref(&lead).cloned() {
                row.add_scaled(&r, &-c);
            }
        }
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(r.clone());
        Some(r)
    }

    /// Coordinates of `v` in the basis, or `None` outside the span.
    pub fn coordinates(&self, v: &XPoly) -> Option<Vec<BigRational>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.rows
                .iter()
                .map(|r| v.coeff(r.leading().expect("non-zero").0))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonics::xpoly::Row;
    use crate::util::rat;

    fn ri(v: &[i64]) -> SparseRow {
        v.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, BigInt::from(x)))
            .collect()
    }

    #[test]
    fn echelon_rank_and_kernel() {
        let mut e = Echelon::new();
        assert!(e.insert(ri(&[2, 4, 6])));
        assert!(!e.insert(ri(&[1, 2, 3])));
        assert!(e.insert(ri(&[0, 3, 3])));
        let k = e.kernel(3);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        // 2a + 4b + 6c = 0 and b + c = 0.
        assert_eq!(BigInt::from(2) * &v[0] + BigInt::from(4) * &v[1] + BigInt::from(6) * &v[2], BigInt::zero());
        assert_eq!(&v[1] + &v[2], BigInt::zero());
    }

    #[test]
    fn dense_nullspace() {
        let rows = vec![vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(1), rat(-1)]];
        let k = nullspace(&rows, 3);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].iter().map(|x| x.abs()).collect::<Vec<_>>(), vec![BigInt::one(); 3]);
        assert!(nullspace(&[vec![rat(1)]], 1).is_empty());
    }

    #[test]
    fn span_basis() {
        let x1 = XPoly::var(2, Row::X, 0);
        let x2 = XPoly::var(2, Row::X, 1);
        let mut s = SpanBasis::new(2);
        assert!(s.insert(&x1.add(&x2)).is_some());
        assert!(s.insert(&x1.add(&x2).scale(&rat(3))).is_none());
        assert!(s.insert(&x1.sub(&x2)).is_some());
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&x1));
        let c = s.coordinates(&x1.scale(&rat(5))).unwrap();
        let rebuilt = s.basis().iter().zip(&c).fold(XPoly::zero(2), |acc, (b, c)| acc.add(&b.scale(c)));
        assert_eq!(rebuilt, x1.scale(&rat(5)));
    }
}
