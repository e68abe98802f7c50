//! Weight multiplicities, the weight-space bound `1 + dim/h`, and eigenspace
//! profiles of regular torus elements of finite order.
//!
//! Weights are written in fundamental-weight coordinates. Dominant
//! multiplicities come from Freudenthal's recursion
//!
//! ```text
//! m(mu) [(lambda+rho, lambda+rho) - (mu+rho, mu+rho)]
//!     = 2 sum_{alpha > 0} sum_{k >= 1} m(mu + k alpha) (mu + k alpha, alpha)
//! ```
//!
//! evaluated with integer-scaled inner products; the diagram is then filled in
//! by expanding each dominant weight to its Weyl orbit.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystemData, RootSystemId};
use crate::weyldim::{CVector, WeylDimension};

pub const DEFAULT_WEIGHT_CAP: u64 = 1_000_000;

/// All weights of one irreducible representation with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightDiagram {
    pub id: RootSystemId,
    pub highest: Vec<i64>,
    pub mults: BTreeMap<Vec<i64>, u64>,
}

impl WeightDiagram {
    pub fn total(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn max_mult(&self) -> u64 {
        self.mults.values().copied().max().unwrap_or(0)
    }

    pub fn dominant(&self) -> impl Iterator<Item = (&Vec<i64>, &u64)> {
        self.mults.iter().filter(|(w, _)| w.iter().all(|&m| m >= 0))
    }
}

/// Dominant weights of the representation with highest weight `highest`,
/// each with its depth `lambda - mu` in simple-root coordinates, ordered by
/// the height of that depth. Every dominant weight below `lambda` is reached
/// from a dominant weight above it by subtracting one positive root.
fn dominant_weights(data: &RootSystemData, highest: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let r = data.rank();
    let root_weights: Vec<Vec<i64>> = data
        .positive_roots
        .iter()
        .map(|a| data.pairings(&a.coeffs))
        .collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut out = vec![(highest.to_vec(), vec![0i64; r])];
    seen.insert(highest.to_vec());
    let mut next = 0;
    while next < out.len() {
        let (mu, depth) = out[next].clone();
        next += 1;
        for (root, b) in data.positive_roots.iter().zip(&root_weights) {
            let nu: Vec<i64> = mu.iter().zip(b).map(|(m, x)| m - x).collect();
            if nu.iter().all(|&m| m >= 0) && seen.insert(nu.clone()) {
                let d: Vec<i64> = depth
                    .iter()
                    .zip(&root.coeffs)
                    .map(|(n, &k)| n + k as i64)
                    .collect();
                out.push((nu, d));
            }
        }
    }
    out.sort_by_key(|(mu, depth)| (depth.iter().sum::<i64>(), std::cmp::Reverse(mu.clone())));
    out
}

/// Multiplicities of the dominant weights of `V(lambda)`, `lambda = c - 1`.
pub fn dominant_multiplicities(data: &RootSystemData, c: &CVector) -> BTreeMap<Vec<i64>, u64> {
    let highest = c.highest_weight();
    let gram_diag = data.simple_norms();
    let r = data.rank();
    // integer Gram matrix of simple roots: (alpha_i, alpha_j) = cartan[i][j] d_i / 2
    let gram: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| data.cartan[i][j] * gram_diag[i] / 2)
                .collect()
        })
        .collect();
    let roots: Vec<(Vec<i64>, Vec<i64>)> = data
        .positive_roots
        .iter()
        .map(|a| {
            let weight = data.pairings(&a.coeffs);
            // 2 (w, alpha) = sum_j a_j d_j w_j
            let scale = a
                .coeffs
                .iter()
                .zip(gram_diag)
                .map(|(&k, &d)| k as i64 * d)
                .collect();
            (weight, scale)
        })
        .collect();
    let cvals: Vec<i64> = c.as_slice().iter().map(|&x| x as i64).collect();

    let mut mults: HashMap<Vec<i64>, u64> = HashMap::new();
    // per root: w -> sum_{k >= 0} m(w + k alpha) (w + k alpha, alpha), scaled
    let mut tails: Vec<HashMap<Vec<i64>, i128>> = vec![HashMap::new(); roots.len()];
    for (mu, depth) in dominant_weights(data, &highest) {
        if depth.iter().all(|&n| n == 0) {
            mults.insert(mu, 1);
            continue;
        }
        let lhs: i64 = (0..r)
            .map(|i| depth[i] * cvals[i] * gram_diag[i])
            .sum::<i64>()
            - (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| depth[i] * gram[i][j] * depth[j])
                        .sum::<i64>()
                })
                .sum::<i64>();
        let mut rhs: i128 = 0;
        for ((b, scale), tails) in roots.iter().zip(&mut tails) {
            let start: Vec<i64> = mu.iter().zip(b).map(|(x, y)| x + y).collect();
            rhs += string_tail(data, &mults, tails, start, b, scale);
        }
        assert!(
            lhs > 0,
            "Casimir difference must be positive below the highest weight"
        );
        assert_eq!(rhs % lhs as i128, 0, "Freudenthal quotient must be exact");
        mults.insert(mu, (rhs / lhs as i128) as u64);
    }
    mults.into_iter().collect()
}

/// Tail sum of the `alpha`-string starting at `start`. Every weight on the
/// string lies above the dominant weight being processed, so its
/// multiplicity is already final and cached sums stay valid.
fn string_tail(
    data: &RootSystemData,
    mults: &HashMap<Vec<i64>, u64>,
    tails: &mut HashMap<Vec<i64>, i128>,
    start: Vec<i64>,
    step: &[i64],
    scale: &[i64],
) -> i128 {
    let mut chain: Vec<(Vec<i64>, i128)> = Vec::new();
    let mut w = start;
    let mut acc = loop {
        if let Some(&t) = tails.get(&w) {
            break t;
        }
        let Some(&m) = mults.get(&data.to_dominant(&w)) else {
            break 0;
        };
        let pairing: i64 = w.iter().zip(scale).map(|(x, y)| x * y).sum();
        let next: Vec<i64> = w.iter().zip(step).map(|(x, y)| x + y).collect();
        chain.push((std::mem::replace(&mut w, next), m as i128 * pairing as i128));
    };
    for (w, term) in chain.into_iter().rev() {
        acc += term;
        tails.insert(w, acc);
    }
    acc
}

/// Full weight diagram, refusing representations larger than `cap`.
pub fn weight_diagram_with(
    data: &RootSystemData,
    eval: &WeylDimension,
    c: &CVector,
    cap: u64,
) -> Result<WeightDiagram> {
    let dim = eval.dimension(c)?;
    if dim > BigUint::from(cap) {
        return Err(Error::ResourceLimit { dim, cap });
    }
    let mut mults = BTreeMap::new();
    for (mu, m) in dominant_multiplicities(data, c) {
        for w in data.weyl_orbit(&mu) {
            mults.insert(w, m);
        }
    }
    Ok(WeightDiagram {
        id: data.id,
        highest: c.highest_weight(),
        mults,
    })
}

pub fn weight_diagram(id: RootSystemId, c: &CVector) -> Result<WeightDiagram> {
    let data = RootSystemData::build(id);
    let eval = WeylDimension::from_data(&data);
    weight_diagram_with(&data, &eval, c, DEFAULT_WEIGHT_CAP)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeitzReport {
    pub max_mult: u64,
    pub dim: u64,
    pub coxeter_number: u64,
    /// `1 + dim / h`
    pub bound: f64,
    pub pass: bool,
}

/// Largest weight multiplicity against `1 + dim/h`, compared exactly.
pub fn seitz_report(data: &RootSystemData, diagram: &WeightDiagram) -> SeitzReport {
    let dim = diagram.total();
    let h = data.coxeter_number;
    let max_mult = diagram.max_mult();
    SeitzReport {
        max_mult,
        dim,
        coxeter_number: h,
        bound: 1.0 + dim as f64 / h as f64,
        pass: max_mult as u128 * h as u128 <= h as u128 + dim as u128,
    }
}

pub fn seitz_check(id: RootSystemId, c: &CVector) -> Result<SeitzReport> {
    let data = RootSystemData::build(id);
    let eval = WeylDimension::from_data(&data);
    let diagram = weight_diagram_with(&data, &eval, c, DEFAULT_WEIGHT_CAP)?;
    Ok(seitz_report(&data, &diagram))
}

/// Torus element `exp(2 pi i t / p)` for a cocharacter `t` in the simple-coroot
/// basis; a weight `m` takes the eigenvalue `exp(2 pi i <m, t> / p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusElement {
    pub order: u64,
    pub cochar: Vec<u64>,
}

impl TorusElement {
    pub fn new(order: u64, cochar: Vec<u64>) -> Result<Self> {
        if order < 2 {
            return Err(Error::Domain(format!(
                "order must be at least 2, got {order}"
            )));
        }
        let cochar = cochar.into_iter().map(|t| t % order).collect();
        Ok(TorusElement { order, cochar })
    }

    /// Residue class of the eigenvalue exponent of a weight.
    pub fn exponent(&self, weight: &[i64]) -> u64 {
        let p = self.order as i128;
        let e: i128 = weight
            .iter()
            .zip(&self.cochar)
            .map(|(&m, &t)| m as i128 * t as i128)
            .sum();
        e.rem_euclid(p) as u64
    }

    /// No positive root pairs to 0 mod p.
    pub fn is_regular(&self, data: &RootSystemData) -> bool {
        self.cochar.len() == data.rank()
            && data
                .positive_roots
                .iter()
                .all(|a| self.exponent(&data.pairings(&a.coeffs)) != 0)
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// First regular cocharacter in lexicographic order over `[0, p-1]^r`.
pub fn find_regular_cocharacter(id: RootSystemId, p: u64) -> Result<TorusElement> {
    find_regular_in(&RootSystemData::build(id), p)
}

pub fn find_regular_in(data: &RootSystemData, p: u64) -> Result<TorusElement> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("order {p} is not prime")));
    }
    let r = data.rank();
    let root_weights: Vec<Vec<i64>> = data
        .positive_roots
        .iter()
        .map(|a| {
            data.pairings(&a.coeffs)
                .iter()
                .map(|&b| b.rem_euclid(p as i64))
                .collect()
        })
        .collect();
    let mut t = vec![0u64; r];
    loop {
        let regular = root_weights
            .iter()
            .all(|b| b.iter().zip(&t).map(|(&x, &y)| x as u64 * y).sum::<u64>() % p != 0);
        if regular {
            return TorusElement::new(p, t);
        }
        // odometer, last coordinate fastest
        let mut k = r;
        loop {
            if k == 0 {
                return Err(Error::NoRegularElement { id: data.id, p });
            }
            k -= 1;
            t[k] += 1;
            if t[k] < p {
                break;
            }
            t[k] = 0;
        }
    }
}

/// Histogram of eigenvalue exponents, weighted by multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenProfile {
    pub counts: Vec<u64>,
    pub w_max: u64,
}

pub fn eigen_profile_of(
    data: &RootSystemData,
    diagram: &WeightDiagram,
    g: &TorusElement,
) -> Result<EigenProfile> {
    if g.cochar.len() != data.rank() {
        return Err(Error::Domain(format!(
            "cocharacter has {} entries but {} has rank {}",
            g.cochar.len(),
            data.id,
            data.rank()
        )));
    }
    if !g.is_regular(data) {
        return Err(Error::Precondition(format!(
            "cocharacter {:?} of order {} is not regular in {}",
            g.cochar, g.order, data.id
        )));
    }
    let mut counts = vec![0u64; g.order as usize];
    for (w, &m) in &diagram.mults {
        counts[g.exponent(w) as usize] += m;
    }
    let w_max = counts.iter().copied().max().unwrap_or(0);
    Ok(EigenProfile { counts, w_max })
}

pub fn eigen_profile(id: RootSystemId, c: &CVector, g: &TorusElement) -> Result<EigenProfile> {
    let data = RootSystemData::build(id);
    let eval = WeylDimension::from_data(&data);
    let diagram = weight_diagram_with(&data, &eval, c, DEFAULT_WEIGHT_CAP)?;
    eigen_profile_of(&data, &diagram, g)
}

/// Largest eigenspace against `dim/p <= w <= dim/p + (p-1) K / p` with
/// `K = |W| / (2 sin(pi/p))^{|Phi+|}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenBoundReport {
    pub p: u64,
    pub dim: u64,
    pub w_max: u64,
    pub lower: f64,
    pub character_bound: f64,
    pub upper: f64,
    pub pass: bool,
}

pub const UPPER_SLACK: f64 = 1e-9;

pub fn eigen_bounds(
    data: &RootSystemData,
    profile: &EigenProfile,
    p: u64,
) -> Result<EigenBoundReport> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("order {p} is not prime")));
    }
    let dim: u64 = profile.counts.iter().sum();
    let pf = p as f64;
    let log_w = num_traits::ToPrimitive::to_f64(&data.weyl_order)
        .expect("finite")
        .ln();
    let log_k = log_w - data.num_positive as f64 * (2.0 * (std::f64::consts::PI / pf).sin()).ln();
    let character_bound = log_k.exp();
    let lower = dim as f64 / pf;
    let upper = lower + (pf - 1.0) * character_bound / pf;
    let pass = profile.w_max as u128 * p as u128 >= dim as u128
        && profile.w_max as f64 <= upper + UPPER_SLACK;
    Ok(EigenBoundReport {
        p,
        dim,
        w_max: profile.w_max,
        lower,
        character_bound,
        upper,
        pass,
    })
}

pub fn danny_bounds(id: RootSystemId, c: &CVector, g: &TorusElement) -> Result<EigenBoundReport> {
    let data = RootSystemData::build(id);
    let eval = WeylDimension::from_data(&data);
    let diagram = weight_diagram_with(&data, &eval, c, DEFAULT_WEIGHT_CAP)?;
    let profile = eigen_profile_of(&data, &diagram, g)?;
    eigen_bounds(&data, &profile, g.order)
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
    fn a1_strings() {
        for n in 1..8u64 {
            let d = weight_diagram(id("A1"), &c(&[n])).unwrap();
            let want: BTreeMap<Vec<i64>, u64> = (0..n as i64)
                .map(|k| (vec![n as i64 - 1 - 2 * k], 1))
                .collect();
            assert_eq!(d.mults, want);
        }
    }

    #[test]
    fn a2_adjoint() {
        let d = weight_diagram(id("A2"), &c(&[2, 2])).unwrap();
        assert_eq!(d.mults.len(), 7);
        assert_eq!(d.mults[&vec![0, 0]], 2);
        assert_eq!(d.mults.values().filter(|&&m| m == 1).count(), 6);
        assert_eq!(d.total(), 8);
    }

    #[test]
    fn a3_defining() {
        let d = weight_diagram(id("A3"), &c(&[2, 1, 1])).unwrap();
        assert_eq!(d.mults.len(), 4);
        assert!(d.mults.values().all(|&m| m == 1));
    }

    #[test]
    fn cap_is_enforced() {
        let data = RootSystemData::build(id("A2"));
        let eval = WeylDimension::from_data(&data);
        let err = weight_diagram_with(&data, &eval, &c(&[2, 2]), 7).unwrap_err();
        assert_eq!(
            err,
            Error::ResourceLimit {
                dim: BigUint::from(8u32),
                cap: 7
            }
        );
    }

    #[test]
    fn seitz_examples() {
        let s = seitz_check(id("A2"), &c(&[2, 2])).unwrap();
        assert_eq!((s.max_mult, s.dim, s.coxeter_number), (2, 8, 3));
        assert!(s.pass);
        let s = seitz_check(id("A1"), &c(&[9])).unwrap();
        assert_eq!(s.max_mult, 1);
        assert!((s.bound - 5.5).abs() < 1e-12);
        let s = seitz_check(id("A3"), &c(&[2, 2, 2])).unwrap();
        assert_eq!(s.dim, 64);
        assert!(s.pass);
    }

    #[test]
    fn regular_elements() {
        let g = find_regular_cocharacter(id("A1"), 5).unwrap();
        assert_eq!(g.cochar, vec![1]);
        assert!(matches!(
            find_regular_cocharacter(id("A2"), 2),
            Err(Error::NoRegularElement { .. })
        ));
        let a2 = RootSystemData::build(id("A2"));
        let g = find_regular_in(&a2, 7).unwrap();
        assert!(g.is_regular(&a2));
        for a in &a2.positive_roots {
            assert_ne!(g.exponent(&a2.pairings(&a.coeffs)), 0);
        }
        assert!(find_regular_cocharacter(id("A2"), 6).is_err());
    }

    #[test]
    fn eigen_profiles() {
        let g = TorusElement::new(5, vec![1]).unwrap();
        let e = eigen_profile(id("A1"), &c(&[5]), &g).unwrap();
        assert_eq!(e.counts, vec![1; 5]);
        assert_eq!(e.w_max, 1);
        let e = eigen_profile(id("A1"), &c(&[7]), &g).unwrap();
        assert_eq!(e.counts, vec![1, 2, 1, 1, 2]);
        assert_eq!(e.w_max, 2);
        let e = eigen_profile(id("A1"), &c(&[1]), &g).unwrap();
        assert_eq!(e.counts, vec![1, 0, 0, 0, 0]);
        let bad = TorusElement::new(5, vec![0]).unwrap();
        assert!(matches!(
            eigen_profile(id("A1"), &c(&[3]), &bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn eigen_bound_examples() {
        let g = TorusElement::new(5, vec![1]).unwrap();
        let b = danny_bounds(id("A1"), &c(&[5]), &g).unwrap();
        assert_eq!(b.w_max, 1);
        assert!((b.lower - 1.0).abs() < 1e-12);
        assert!((b.upper - 2.36104).abs() < 1e-4, "{}", b.upper);
        assert!(b.pass);
        let b = danny_bounds(id("A1"), &c(&[7]), &g).unwrap();
        assert_eq!(b.w_max, 2);
        assert!((b.lower - 1.4).abs() < 1e-12);
        assert!((b.upper - 2.76104).abs() < 1e-4, "{}", b.upper);
        assert!(b.pass);
        let b = danny_bounds(id("A1"), &c(&[1]), &g).unwrap();
        assert!(b.pass);
        let g4 = TorusElement::new(4, vec![1]).unwrap();
        assert!(matches!(
            danny_bounds(id("A1"), &c(&[3]), &g4),
            Err(Error::Precondition(_))
        ));
    }
}
