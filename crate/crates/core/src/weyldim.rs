//! Weyl's dimension formula in shifted coordinates.
//!
//! With `lambda + rho = sum_j c_j varpi_j` and the positive coroots written as
//! `beta_i^vee = sum_j a_ij alpha_j^vee`, the degree of the irreducible
//! character is `prod_i (sum_j a_ij c_j) / (sum_j a_ij)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystemData, RootSystemId};
use crate::zetabounds::ExponentProfile;

/// Shifted highest-weight coordinates `c_j = m_j + 1`; all entries are `>= 1`
/// and the all-ones vector is the trivial character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct CVector(Vec<u64>);

impl CVector {
    pub fn new(c: Vec<u64>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::Domain("c-vector must be non-empty".into()));
        }
        if let Some(pos) = c.iter().position(|&x| x == 0) {
            return Err(Error::Domain(format!(
                "c-vector entries must be >= 1 (entry {} is 0)",
                pos + 1
            )));
        }
        Ok(CVector(c))
    }

    pub fn ones(rank: usize) -> Self {
        CVector(vec![1; rank])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&x| x == 1)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    /// Highest weight `lambda` in fundamental-weight coordinates.
    pub fn highest_weight(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x as i64 - 1).collect()
    }
}

impl TryFrom<Vec<u64>> for CVector {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        CVector::new(v)
    }
}

impl From<CVector> for Vec<u64> {
    fn from(c: CVector) -> Self {
        c.0
    }
}

impl fmt::Display for CVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for CVector {
    type Err = Error;
    /// Comma-separated positive integers, e.g. `2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<u64>, _> =
            s.split(',').map(|p| p.trim().parse::<u64>()).collect();
        let parts = parts.map_err(|_| {
            Error::Domain(format!("cannot parse c-vector {s:?}; expected e.g. 2,1"))
        })?;
        CVector::new(parts)
    }
}

/// Coefficients of the positive coroots in the basis of simple coroots, one
/// row per coroot, stored densely with a column index for sparse evaluation.
#[derive(Clone, Debug)]
pub struct DualCoefficientMatrix {
    rank: usize,
    coeffs: Vec<u8>,
    row_sums: Vec<u64>,
    col_rows: Vec<Vec<u32>>,
}

impl DualCoefficientMatrix {
    pub fn from_data(data: &RootSystemData) -> Self {
        let rank = data.rank();
        let coroots = data.coroots();
        let mut coeffs = Vec::with_capacity(coroots.len() * rank);
        let mut row_sums = Vec::with_capacity(coroots.len());
        let mut col_rows = vec![Vec::new(); rank];
        for (i, root) in coroots.iter().enumerate() {
            for (j, &a) in root.coeffs.iter().enumerate() {
                coeffs.push(u8::try_from(a).expect("coroot coefficients are small"));
                if a > 0 {
                    col_rows[j].push(i as u32);
                }
            }
            row_sums.push(root.height() as u64);
        }
        DualCoefficientMatrix {
            rank,
            coeffs,
            row_sums,
            col_rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_rows(&self) -> usize {
        self.row_sums.len()
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.coeffs[i * self.rank..(i + 1) * self.rank]
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        self.row_sums[i]
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> u64 {
        self.coeffs[i * self.rank + j] as u64
    }

    /// Calls `f(numerator, denominator)` for each row whose factor differs from 1.
    /// A row contributes `(h_i + s_i) / h_i` with `s_i = sum_j a_ij (c_j - 1)`;
    /// rows meeting no coordinate with `c_j > 1` contribute exactly 1.
    fn for_each_factor<F>(&self, c: &[u64], mut f: F) -> bool
    where
        F: FnMut(u64, u64) -> bool,
    {
        let active: Vec<usize> = (0..self.rank).filter(|&j| c[j] > 1).collect();
        for (k, &j) in active.iter().enumerate() {
            'rows: for &i in &self.col_rows[j] {
                let i = i as usize;
                // count each row once, under its first active column
                for &prev in &active[..k] {
                    if self.at(i, prev) > 0 {
                        continue 'rows;
                    }
                }
                let s: u64 = active[k..]
                    .iter()
                    .map(|&jj| self.at(i, jj) * (c[jj] - 1))
                    .sum();
                let h = self.row_sums[i];
                if !f(h + s, h) {
                    return false;
                }
            }
        }
        true
    }
}

/// Dimension evaluator for one root system.
#[derive(Clone, Debug)]
pub struct WeylDimension {
    id: RootSystemId,
    matrix: DualCoefficientMatrix,
    dual_profile: Vec<f64>,
}

impl WeylDimension {
    pub fn new(id: RootSystemId) -> Self {
        WeylDimension::from_data(&RootSystemData::build(id))
    }

    pub fn from_data(data: &RootSystemData) -> Self {
        let matrix = DualCoefficientMatrix::from_data(data);
        let dual_profile = ExponentProfile::from_coefficient_rows(
            data.id.dual(),
            (0..matrix.num_rows()).map(|i| matrix.row(i).iter().map(|&a| a as u64)),
        )
        .to_f64();
        WeylDimension {
            id: data.id,
            matrix,
            dual_profile,
        }
    }

    pub fn id(&self) -> RootSystemId {
        self.id
    }

    pub fn matrix(&self) -> &DualCoefficientMatrix {
        &self.matrix
    }

    fn check(&self, c: &CVector) -> Result<()> {
        if c.len() != self.id.rank() {
            return Err(Error::Domain(format!(
                "c-vector has {} entries but {} has rank {}",
                c.len(),
                self.id,
                self.id.rank()
            )));
        }
        Ok(())
    }

    /// Exact degree of the irreducible character with shifted coordinates `c`.
    pub fn dimension(&self, c: &CVector) -> Result<BigUint> {
        self.check(c)?;
        Ok(self.dimension_unchecked(c.as_slice()))
    }

    pub(crate) fn dimension_unchecked(&self, c: &[u64]) -> BigUint {
        let mut num = Product::default();
        let mut den = Product::default();
        self.matrix.for_each_factor(c, |n, d| {
            num.mul(n);
            den.mul(d);
            true
        });
        let (num, den) = (num.finish(), den.finish());
        let (q, rem) = num.div_rem(&den);
        debug_assert!(rem == BigUint::from(0u32), "Weyl quotient must be exact");
        q
    }

    /// The degree when it is at most `limit`, `None` otherwise. Every factor is
    /// at least 1, so the running product only grows and the scan stops as soon
    /// as it passes the limit.
    pub fn dimension_at_most(&self, c: &[u64], limit: u64) -> Option<u64> {
        debug_assert_eq!(c.len(), self.id.rank());
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        let mut overflow = false;
        let within = self.matrix.for_each_factor(c, |n, d| {
            let g = n.gcd(&d);
            let (n, d) = ((n / g) as u128, (d / g) as u128);
            let g1 = n.gcd(&den);
            let g2 = d.gcd(&num);
            match (
                (num / g2).checked_mul(n / g1),
                (den / g1).checked_mul(d / g2),
            ) {
                (Some(a), Some(b)) => {
                    num = a;
                    den = b;
                }
                _ => {
                    overflow = true;
                    return false;
                }
            }
            match (limit as u128).checked_mul(den) {
                Some(cap) => num <= cap,
                None => true,
            }
        });
        if overflow {
            let dim = self.dimension_unchecked(c);
            return if dim <= BigUint::from(limit) {
                Some(u64::try_from(dim).expect("bounded by limit"))
            } else {
                None
            };
        }
        if !within {
            return None;
        }
        debug_assert_eq!(den, 1);
        Some(num as u64)
    }

    /// `prod_j c_j^{v_j}` with `v_j` the exponent profile of the coroot system.
    pub fn lower_bound(&self, c: &CVector) -> Result<f64> {
        self.check(c)?;
        Ok(c.as_slice()
            .iter()
            .zip(&self.dual_profile)
            .map(|(&cj, &vj)| (cj as f64).powf(vj))
            .product())
    }
}

/// Product of many small factors, folded into a big integer in word-sized chunks.
#[derive(Default)]
struct Product {
    acc: Option<BigUint>,
    chunk: u128,
}

impl Product {
    fn mul(&mut self, x: u64) {
        if self.chunk == 0 {
            self.chunk = 1;
        }
        match self.chunk.checked_mul(x as u128) {
            Some(v) if v < (1u128 << 120) => self.chunk = v,
            _ => {
                self.flush();
                self.chunk = x as u128;
            }
        }
    }

    fn flush(&mut self) {
        if self.chunk > 1 {
            let chunk = BigUint::from(self.chunk);
            self.acc = Some(match self.acc.take() {
                Some(a) => a * chunk,
                None => chunk,
            });
        }
        self.chunk = 1;
    }

    fn finish(mut self) -> BigUint {
        self.flush();
        self.acc.unwrap_or_else(|| BigUint::from(1u32))
    }
}

type Cache = RwLock<HashMap<RootSystemId, Arc<WeylDimension>>>;

/// Shared evaluator for `id`, built on first use.
pub fn evaluator(id: RootSystemId) -> Arc<WeylDimension> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(e) = cache.read().expect("cache lock").get(&id) {
        return Arc::clone(e);
    }
    let built = Arc::new(WeylDimension::new(id));
    let mut guard = cache.write().expect("cache lock");
    Arc::clone(guard.entry(id).or_insert(built))
}

pub fn dimension(id: RootSystemId, c: &CVector) -> Result<BigUint> {
    evaluator(id).dimension(c)
}

pub fn dimension_lower_bound(id: RootSystemId, c: &CVector) -> Result<f64> {
    evaluator(id).lower_bound(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> RootSystemId {
        s.parse().unwrap()
    }

    fn c(v: &[u64]) -> CVector {
        CVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(dimension(id("A1"), &c(&[7])).unwrap(), BigUint::from(7u32));
        assert_eq!(
            dimension(id("A2"), &c(&[2, 1])).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            dimension(id("A2"), &c(&[2, 2])).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(
            dimension(id("E8"), &CVector::ones(8)).unwrap(),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn fundamental_representations_of_exceptional_groups() {
        let cases: &[(&str, &[u64], u64)] = &[
            ("G2", &[2, 1], 7),
            ("G2", &[1, 2], 14),
            ("F4", &[1, 1, 1, 2], 26),
            ("F4", &[2, 1, 1, 1], 52),
            ("E6", &[2, 1, 1, 1, 1, 1], 27),
            ("E6", &[1, 2, 1, 1, 1, 1], 78),
            ("E7", &[1, 1, 1, 1, 1, 1, 2], 56),
            ("E7", &[2, 1, 1, 1, 1, 1, 1], 133),
            ("E8", &[1, 1, 1, 1, 1, 1, 1, 2], 248),
            ("B3", &[2, 1, 1], 7),
            ("B3", &[1, 1, 2], 8),
            ("C3", &[2, 1, 1], 6),
            ("C3", &[1, 1, 2], 14),
            ("D4", &[1, 2, 1, 1], 28),
            ("D5", &[1, 1, 1, 1, 2], 16),
        ];
        for &(s, cv, want) in cases {
            assert_eq!(
                dimension(id(s), &c(cv)).unwrap(),
                BigUint::from(want),
                "{s} {cv:?}"
            );
        }
    }

    #[test]
    fn bounded_evaluation_agrees() {
        let e = WeylDimension::new(id("E6"));
        assert_eq!(e.dimension_at_most(&[2, 1, 1, 1, 1, 1], 27), Some(27));
        assert_eq!(e.dimension_at_most(&[2, 1, 1, 1, 1, 1], 26), None);
        assert_eq!(e.dimension_at_most(&[1; 6], 1), Some(1));
        let e8 = WeylDimension::new(id("E8"));
        let big = [5, 4, 3, 2, 3, 4, 5, 6];
        let exact = e8.dimension_unchecked(&big);
        assert_eq!(
            e8.dimension_at_most(&big, u64::MAX),
            u64::try_from(exact).ok()
        );
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(dimension_lower_bound(id("A2"), &c(&[1, 1])).unwrap(), 1.0);
        let lb = dimension_lower_bound(id("A2"), &c(&[2, 1])).unwrap();
        assert!((lb - 2f64.powf(1.5)).abs() < 1e-12);
        assert!(lb <= 3.0);
        let lb = dimension_lower_bound(id("A1"), &c(&[10])).unwrap();
        assert!((lb - 10.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_vectors() {
        assert!(dimension(id("A2"), &c(&[1])).is_err());
        assert!(CVector::new(vec![1, 0]).is_err());
        assert!("2,x".parse::<CVector>().is_err());
        assert_eq!("2, 1".parse::<CVector>().unwrap(), c(&[2, 1]));
    }
}
