//! Exponent profiles of root systems and the product-of-zeta bound on the
//! Witten zeta function.
//!
//! Each positive root `beta = sum_j a_j alpha_j` of height `h` spreads a unit
//! weight over the simple roots as `a_j / h`; the profile entry `v_j` is the
//! total weight received by `alpha_j`. The bound is
//! `Z(s) = prod_j zeta(v_j s)`, finite when every `v_j s > 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystemData, RootSystemId};

/// Exact exponent profile `v_1, ..., v_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentProfile {
    pub id: RootSystemId,
    pub v: Vec<BigRational>,
}

impl ExponentProfile {
    /// Builds the profile from non-negative coefficient rows, one per positive root.
    pub fn from_coefficient_rows<R, I>(id: RootSystemId, rows: R) -> Self
    where
        R: IntoIterator<Item = I>,
        I: IntoIterator<Item = u64>,
    {
        let r = id.rank();
        // per column, indexed by row height: summed coefficient
        let mut buckets: Vec<Vec<u64>> = vec![Vec::new(); r];
        let mut row = Vec::with_capacity(r);
        for coeffs in rows {
            row.clear();
            row.extend(coeffs);
            let h = row.iter().sum::<u64>() as usize;
            for (bucket, &a) in buckets.iter_mut().zip(&row) {
                if a > 0 {
                    if bucket.len() <= h {
                        bucket.resize(h + 1, 0);
                    }
                    bucket[h] += a;
                }
            }
        }
        let max_h = buckets.iter().map(Vec::len).max().unwrap_or(1);
        let mut used = vec![false; max_h];
        for bucket in &buckets {
            for (h, &a) in bucket.iter().enumerate() {
                used[h] |= a > 0;
            }
        }
        // common denominator: lcm of all heights that occur
        let lcm = (1..max_h)
            .filter(|&h| used[h])
            .fold(BigInt::one(), |acc, h| acc.lcm(&BigInt::from(h)));
        let share: Vec<BigInt> = (0..max_h)
            .map(|h| {
                if used[h] {
                    &lcm / BigInt::from(h)
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        let v = buckets
            .into_iter()
            .map(|bucket| {
                let num = bucket
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, a)| a > 0)
                    .fold(BigInt::zero(), |acc, (h, a)| acc + &share[h] * a);
                BigRational::new(num, lcm.clone())
            })
            .collect();
        ExponentProfile { id, v }
    }

    pub fn from_data(data: &RootSystemData) -> Self {
        ExponentProfile::from_coefficient_rows(
            data.id,
            data.positive_roots
                .iter()
                .map(|root| root.coeffs.iter().map(|&k| k as u64)),
        )
    }

    pub fn total(&self) -> BigRational {
        self.v.iter().fold(BigRational::zero(), |acc, x| acc + x)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.v.iter().map(rational_to_f64).collect()
    }

    pub fn min_f64(&self) -> f64 {
        self.to_f64().into_iter().fold(f64::INFINITY, f64::min)
    }
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("profile entries are finite")
}

/// Exponent profile computed from the positive roots of `id` itself. For the
/// bound on the Witten zeta function of a group with root system `id`, use
/// the profile of `id.dual()`.
pub fn v_profile(id: RootSystemId) -> ExponentProfile {
    ExponentProfile::from_data(&RootSystemData::build(id))
}

/// Profile of the coroot system of `data`, taken from the actual coroots.
pub fn coroot_profile(data: &RootSystemData) -> ExponentProfile {
    ExponentProfile::from_coefficient_rows(
        data.id.dual(),
        data.coroots()
            .into_iter()
            .map(|root| root.coeffs.into_iter().map(|k| k as u64)),
    )
}

/// Closed form for type `A_r`: `v_j = sum_{i<=j} sum_{k>=j} 1/(1+k-i)`.
pub fn v_closed_form_a(r: usize, j: usize) -> Result<BigRational> {
    if j == 0 || j > r {
        return Err(Error::Domain(format!(
            "index {j} out of range 1..={r} for A{r}"
        )));
    }
    // terms depend only on the length 1+k-i; count them per length
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for i in 1..=j {
        for k in j..=r {
            *counts.entry(1 + k - i).or_insert(0) += 1;
        }
    }
    let lcm = counts
        .keys()
        .fold(BigInt::one(), |acc, &len| acc.lcm(&BigInt::from(len)));
    let num = counts.into_iter().fold(BigInt::zero(), |acc, (len, n)| {
        acc + &lcm / BigInt::from(len) * n
    });
    Ok(BigRational::new(num, lcm))
}

pub const DEFAULT_ZETA_TOL: f64 = 1e-10;

const EM_CUTOFF: u64 = 25;
/// `B_{2k} / (2k)!` for k = 1..=4.
const EM_COEFFS: [f64; 4] = [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30_240.0, -1.0 / 1_209_600.0];
/// `|B_10| / 10!`, the size of the first omitted correction.
const EM_NEXT_COEFF: f64 = 5.0 / 66.0 / 3_628_800.0;

/// Riemann zeta for real `s > 1` by Euler-Maclaurin summation, with
/// `|result - zeta(s)| <= abs_tol` up to floating-point rounding.
pub fn riemann_zeta(s: f64, abs_tol: f64) -> Result<f64> {
    if s.is_nan() || s <= 1.0 {
        return Err(Error::Divergent { arg: s });
    }
    if abs_tol.is_nan() || abs_tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {abs_tol}"
        )));
    }
    if s > 64.0 {
        return Ok(1.0 + 2f64.powf(-s) + 3f64.powf(-s));
    }
    let mut m = EM_CUTOFF;
    while em_remainder_bound(s, m) > abs_tol * 0.5 {
        m *= 2;
    }
    Ok(euler_maclaurin(s, m))
}

/// Zeta at the default tolerance.
pub fn zeta(s: f64) -> Result<f64> {
    riemann_zeta(s, DEFAULT_ZETA_TOL)
}

fn em_remainder_bound(s: f64, m: u64) -> f64 {
    let rising: f64 = (0..9).map(|k| s + k as f64).product();
    EM_NEXT_COEFF * rising * (m as f64).powf(-s - 9.0)
}

fn euler_maclaurin(s: f64, m: u64) -> f64 {
    let mut head = 0.0;
    for n in (1..m).rev() {
        head += (n as f64).powf(-s);
    }
    let mf = m as f64;
    let mut tail = mf.powf(1.0 - s) / (s - 1.0) + 0.5 * mf.powf(-s);
    // rising factorial s (s+1) ... (s+2k-2) times m^(-s-2k+1)
    let mut rising = s;
    let mut power = mf.powf(-s - 1.0);
    for (k, coeff) in EM_COEFFS.iter().enumerate() {
        if k > 0 {
            let a = s + (2 * k - 1) as f64;
            rising *= a * (a + 1.0);
            power /= mf * mf;
        }
        tail += coeff * rising * power;
    }
    head + tail
}

/// `prod_j zeta(v_j s)` for an explicit profile.
pub fn z_bound_profile(profile: &ExponentProfile, s: f64) -> Result<f64> {
    let mut product = 1.0;
    for v in profile.to_f64() {
        let arg = v * s;
        if arg.is_nan() || arg <= 1.0 {
            return Err(Error::Divergent { arg });
        }
        product *= zeta(arg)?;
    }
    Ok(product)
}

/// `Z(s) = prod_j zeta(v_j(id) s)`.
pub fn z_bound(id: RootSystemId, s: f64) -> Result<f64> {
    z_bound_profile(&v_profile(id), s)
}

/// Upper bound on the Witten zeta function of the simply connected group
/// with root system `id`, i.e. `Z` of the dual system.
pub fn witten_zeta_bound(id: RootSystemId, s: f64) -> Result<f64> {
    z_bound(id.dual(), s)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub id: RootSystemId,
    pub value: f64,
}

pub fn table1_ids() -> Vec<RootSystemId> {
    let mut ids: Vec<RootSystemId> = (9..=20).map(RootSystemId::a).collect();
    ids.extend((5..=10).map(|r| format!("D{r}").parse::<RootSystemId>().expect("valid")));
    ids.extend((6..=8).map(|r| format!("E{r}").parse::<RootSystemId>().expect("valid")));
    ids
}

pub fn table2_ids() -> Vec<RootSystemId> {
    let mut ids: Vec<RootSystemId> = (2..=8).map(RootSystemId::a).collect();
    ids.push("D4".parse::<RootSystemId>().expect("valid"));
    ids
}

/// `Z(1)` for `A9..A20`, `D5..D10`, `E6..E8`.
pub fn table1() -> Vec<TableRow> {
    table1_ids()
        .into_iter()
        .map(|id| TableRow {
            id,
            value: z_bound(id, 1.0).expect("all table 1 systems converge at s = 1"),
        })
        .collect()
}

/// `Z(3/4)^4` for `A2..A8`, `D4`.
pub fn table2() -> Vec<TableRow> {
    table2_ids()
        .into_iter()
        .map(|id| TableRow {
            id,
            value: z_bound(id, 0.75)
                .expect("all table 2 systems converge at s = 3/4")
                .powi(4),
        })
        .collect()
}
