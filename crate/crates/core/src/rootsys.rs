//! Irreducible reduced root systems: identifiers, Cartan matrices, positive
//! roots and the handful of constants derived from them.
//!
//! Conventions: simple roots are numbered as in Bourbaki's Planches, and the
//! Cartan matrix entry `(i, j)` is `<alpha_j, alpha_i^vee>`. Positive roots are
//! stored by their coefficients in the basis of simple roots.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// Type and rank of an irreducible root system, restricted to the canonical
/// ranges `A1+, B2+, C2+, D4+, E6-8, F4, G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemId {
    family: Family,
    rank: usize,
}

impl RootSystemId {
    /// Strict constructor: low-rank coincidences are rejected with the name of
    /// the canonical id to use instead.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let given = format!("{}{}", family.letter(), rank);
        let invalid = |reason: String| Error::InvalidId {
            given: given.clone(),
            reason,
        };
        if rank == 0 {
            return Err(invalid("rank must be positive".into()));
        }
        match (family, rank) {
            (Family::A, _) => {}
            (Family::B | Family::C | Family::D, 1) => {
                return Err(invalid("coincides with A1; use A1".into()))
            }
            (Family::B | Family::C, _) => {}
            (Family::D, 2) => return Err(invalid("D2 = A1 x A1 is not simple".into())),
            (Family::D, 3) => return Err(invalid("coincides with A3; use A3".into())),
            (Family::D, _) => {}
            (Family::E, 6..=8) => {}
            (Family::E, _) => return Err(invalid("type E requires rank 6, 7 or 8".into())),
            (Family::F, 4) => {}
            (Family::F, _) => return Err(invalid("type F requires rank 4".into())),
            (Family::G, 2) => {}
            (Family::G, _) => return Err(invalid("type G requires rank 2".into())),
        }
        Ok(RootSystemId { family, rank })
    }

    /// Like [`RootSystemId::new`] but maps the low-rank aliases `B1, C1, D1 -> A1`
    /// and `D3 -> A3` onto their canonical ids. `D2` is still rejected.
    pub fn canonical(family: Family, rank: usize) -> Result<Self> {
        match (family, rank) {
            (Family::B | Family::C | Family::D, 1) => RootSystemId::new(Family::A, 1),
            (Family::D, 3) => RootSystemId::new(Family::A, 3),
            _ => RootSystemId::new(family, rank),
        }
    }

    pub fn a(rank: usize) -> Self {
        RootSystemId::new(Family::A, rank).expect("A_r is valid for r >= 1")
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// The id of the dual (coroot) system: `B_r <-> C_r`, all others fixed.
    pub fn dual(self) -> Self {
        match self.family {
            Family::B => RootSystemId {
                family: Family::C,
                rank: self.rank,
            },
            Family::C => RootSystemId {
                family: Family::B,
                rank: self.rank,
            },
            _ => self,
        }
    }

    /// `B2` and `C2` have isomorphic compact groups; returns the preferred
    /// representative when `self` is the non-preferred one.
    pub fn group_isomorphic_to(self) -> Option<Self> {
        match (self.family, self.rank) {
            (Family::B, 2) => Some(RootSystemId {
                family: Family::C,
                rank: 2,
            }),
            _ => None,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> BigUint {
        let r = self.rank as u64;
        let fact = |n: u64| (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k);
        match self.family {
            Family::A => fact(r + 1),
            Family::B | Family::C => fact(r) << r,
            Family::D => fact(r) << (r - 1),
            Family::E => BigUint::from(match r {
                6 => 51_840u64,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Family::F => BigUint::from(1152u32),
            Family::G => BigUint::from(12u32),
        }
    }

    /// Number of positive roots from the classification.
    pub fn expected_num_positive(self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B | Family::C => r * r,
            Family::D => r * (r - 1),
            Family::E => match r {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Symmetric matrix of inner products `(alpha_i, alpha_j)` of the simple
    /// roots, scaled to integers.
    fn gram(self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut g = vec![vec![0i64; r]; r];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 1..r {
                    link(&mut g, i - 1, i, -1);
                }
            }
            Family::B => {
                g[r - 1][r - 1] = 1;
                for i in 1..r {
                    link(&mut g, i - 1, i, -1);
                }
            }
            Family::C => {
                g[r - 1][r - 1] = 4;
                for i in 1..r - 1 {
                    link(&mut g, i - 1, i, -1);
                }
                link(&mut g, r - 2, r - 1, -2);
            }
            Family::D => {
                for i in 1..r - 1 {
                    link(&mut g, i - 1, i, -1);
                }
                link(&mut g, r - 3, r - 1, -1);
            }
            Family::E => {
                // 1-3-4-5-6(-7-8) with 2 attached to 4
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 3..r {
                    link(&mut g, i - 1, i, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }

    /// Node permutations of the Dynkin diagram (identity first). Only `A_r`
    /// (r >= 2), `D_r` and `E_6` have non-trivial ones.
    pub fn diagram_automorphisms(self) -> Vec<Vec<usize>> {
        let r = self.rank;
        let id: Vec<usize> = (0..r).collect();
        match self.family {
            Family::A if r >= 2 => vec![id, (0..r).rev().collect()],
            Family::D if r == 4 => {
                // outer nodes 0, 2, 3 around the centre 1
                let outer = [0usize, 2, 3];
                let perms = [
                    [0usize, 1, 2],
                    [0, 2, 1],
                    [1, 0, 2],
                    [1, 2, 0],
                    [2, 0, 1],
                    [2, 1, 0],
                ];
                perms
                    .iter()
                    .map(|p| {
                        let mut sigma = id.clone();
                        for (k, &src) in outer.iter().enumerate() {
                            sigma[src] = outer[p[k]];
                        }
                        sigma
                    })
                    .collect()
            }
            Family::D => {
                let mut swap = id.clone();
                swap.swap(r - 2, r - 1);
                vec![id, swap]
            }
            Family::E if r == 6 => vec![id, vec![5, 1, 4, 3, 2, 0]],
            _ => vec![id],
        }
    }
}

impl fmt::Display for RootSystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemId {
    type Err = Error;

    /// Parses ids such as `A2`, `D10` or `e_8`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidId {
            given: s.to_string(),
            reason: "expected a family letter A-G followed by a rank, e.g. A2 or D10".into(),
        };
        let mut chars = s.trim().chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let rest = chars.as_str();
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = rest.parse().map_err(|_| bad())?;
        RootSystemId::new(family, rank)
    }
}

impl Serialize for RootSystemId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootSystemId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of the root lattice, in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    pub coeffs: Vec<i32>,
}

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root { coeffs }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().map(|&k| k as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&k| k >= 0) && self.coeffs.iter().any(|&k| k > 0)
    }
}

/// Immutable combinatorial data of one irreducible root system.
#[derive(Clone, Debug, Serialize)]
pub struct RootSystemData {
    pub id: RootSystemId,
    pub cartan: Vec<Vec<i64>>,
    /// Ordered by height, then by coefficient vector in decreasing
    /// lexicographic order (so the simple roots come out as alpha_1, alpha_2, ...).
    pub positive_roots: Vec<Root>,
    pub coxeter_number: u64,
    #[serde(serialize_with = "serialize_decimal")]
    pub weyl_order: BigUint,
    pub num_positive: usize,
    #[serde(skip)]
    simple_norms: Vec<i64>,
    #[serde(skip)]
    root_norms: Vec<i64>,
}

fn serialize_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Builds the root system data for `id` by root-string closure.
pub fn build(id: RootSystemId) -> RootSystemData {
    RootSystemData::build(id)
}

/// The id of the dual root system.
pub fn dual(id: RootSystemId) -> RootSystemId {
    id.dual()
}

struct Closure {
    roots: Vec<Root>,
    norms: Vec<i64>,
}

/// Simple index and parent position of a step up the closure.
type Edge = (usize, usize);

/// Generates all positive roots from the simple ones. For each root `beta` and
/// simple root `alpha_i` the `alpha_i`-string through `beta` runs from
/// `beta - p alpha_i` to `beta + q alpha_i` with `p - q = <beta, alpha_i^vee>`,
/// so `beta + alpha_i` is a root exactly when `q > 0`. The downward extent `p`
/// is inherited from the predecessors recorded while building each level.
fn positive_root_closure(cartan: &[Vec<i64>], gram: &[Vec<i64>]) -> Closure {
    let r = cartan.len();
    // per root: fundamental coordinates <beta, alpha_j^vee> and downward string lengths
    let mut roots: Vec<Root> = Vec::new();
    let mut norms: Vec<i64> = Vec::new();
    let mut fund: Vec<Vec<i32>> = Vec::new();
    let mut down: Vec<Vec<u8>> = Vec::new();

    for i in 0..r {
        roots.push(Root::simple(r, i));
        norms.push(gram[i][i]);
        fund.push((0..r).map(|j| cartan[j][i] as i32).collect());
        down.push(vec![0; r]);
    }
    let mut level = 0..r;

    loop {
        let mut index: HashMap<Vec<i32>, usize> = HashMap::new();
        let mut fresh: Vec<(Vec<i32>, Vec<Edge>)> = Vec::new();
        for g in level.clone() {
            for i in 0..r {
                let q = down[g][i] as i32 - fund[g][i];
                if q <= 0 {
                    continue;
                }
                let mut coeffs = roots[g].coeffs.clone();
                coeffs[i] += 1;
                match index.get(&coeffs) {
                    Some(&k) => fresh[k].1.push((i, g)),
                    None => {
                        index.insert(coeffs.clone(), fresh.len());
                        fresh.push((coeffs, vec![(i, g)]));
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        fresh.sort_by(|a, b| b.0.cmp(&a.0));
        let start = roots.len();
        for (coeffs, preds) in fresh {
            let (i0, g0) = preds[0];
            let f: Vec<i32> = (0..r).map(|j| fund[g0][j] + cartan[j][i0] as i32).collect();
            let norm = norms[g0] + fund[g0][i0] as i64 * gram[i0][i0] + gram[i0][i0];
            let mut d = vec![0u8; r];
            for &(i, g) in &preds {
                d[i] = down[g][i] + 1;
            }
            roots.push(Root::new(coeffs));
            norms.push(norm);
            fund.push(f);
            down.push(d);
        }
        level = start..roots.len();
    }
    Closure { roots, norms }
}

impl RootSystemData {
    pub fn build(id: RootSystemId) -> Self {
        let gram = id.gram();
        let r = id.rank();
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let Closure { roots, norms } = positive_root_closure(&cartan, &gram);
        let u = roots.len();
        RootSystemData {
            id,
            cartan,
            coxeter_number: (2 * u / r) as u64,
            weyl_order: id.weyl_order(),
            num_positive: u,
            positive_roots: roots,
            simple_norms: (0..r).map(|i| gram[i][i]).collect(),
            root_norms: norms,
        }
    }

    pub fn rank(&self) -> usize {
        self.id.rank()
    }

    /// Squared lengths of the simple roots in the integer-scaled form.
    pub fn simple_norms(&self) -> &[i64] {
        &self.simple_norms
    }

    /// Squared lengths of the positive roots, aligned with `positive_roots`.
    pub fn root_norms(&self) -> &[i64] {
        &self.root_norms
    }

    /// `<beta, alpha_j^vee>` for every `j`, without membership check.
    pub fn pairings(&self, coeffs: &[i32]) -> Vec<i64> {
        let r = self.rank();
        (0..r)
            .map(|j| {
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| k as i64 * self.cartan[j][i])
                    .sum()
            })
            .collect()
    }

    /// Fundamental-weight coordinates `b_j = alpha_j^vee(root)` of a root.
    pub fn fundamental_coords(&self, root: &Root) -> Result<Vec<i64>> {
        if root.coeffs.len() != self.rank() {
            return Err(Error::Domain(format!(
                "root has {} coordinates, {} has rank {}",
                root.coeffs.len(),
                self.id,
                self.rank()
            )));
        }
        if !self.contains(root) {
            return Err(Error::Domain(format!(
                "{:?} is not a root of {}",
                root.coeffs, self.id
            )));
        }
        Ok(self.pairings(&root.coeffs))
    }

    /// Membership in the full root system (positive or negative roots).
    pub fn contains(&self, root: &Root) -> bool {
        if root.coeffs.len() != self.rank() {
            return false;
        }
        let positive = if root.coeffs.iter().all(|&k| k <= 0) {
            Root::new(root.coeffs.iter().map(|&k| -k).collect())
        } else {
            root.clone()
        };
        self.position(&positive).is_some()
    }

    /// Index of a positive root in `positive_roots`.
    pub fn position(&self, root: &Root) -> Option<usize> {
        if !root.is_positive() {
            return None;
        }
        let key = (root.height(), std::cmp::Reverse(&root.coeffs));
        self.positive_roots
            .binary_search_by(|p| (p.height(), std::cmp::Reverse(&p.coeffs)).cmp(&key))
            .ok()
    }

    /// Positive coroots `beta^vee = 2 beta / (beta, beta)` written in the basis
    /// of simple coroots, aligned with `positive_roots`.
    pub fn coroots(&self) -> Vec<Root> {
        self.positive_roots
            .iter()
            .zip(&self.root_norms)
            .map(|(root, &norm)| {
                Root::new(
                    root.coeffs
                        .iter()
                        .zip(&self.simple_norms)
                        .map(|(&k, &d)| {
                            let num = k as i64 * d;
                            debug_assert_eq!(num % norm, 0);
                            (num / norm) as i32
                        })
                        .collect(),
                )
            })
            .collect()
    }

    /// Fundamental-weight coordinates of the simple root `alpha_i`.
    pub fn simple_root_weight(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|j| self.cartan[j][i]).collect()
    }

    /// Simple reflection `s_i` acting on a weight in fundamental coordinates.
    pub fn reflect(&self, weight: &mut [i64], i: usize) {
        let m = weight[i];
        if m == 0 {
            return;
        }
        for (j, w) in weight.iter_mut().enumerate() {
            *w -= m * self.cartan[j][i];
        }
    }

    /// The dominant weight in the Weyl orbit of `weight`.
    pub fn to_dominant(&self, weight: &[i64]) -> Vec<i64> {
        let mut w = weight.to_vec();
        while let Some(i) = w.iter().position(|&m| m < 0) {
            self.reflect(&mut w, i);
        }
        w
    }

    /// The full Weyl orbit of a dominant weight, reached by descending along
    /// simple reflections.
    pub fn weyl_orbit(&self, dominant: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(dominant.to_vec());
        queue.push_back(dominant.to_vec());
        let mut orbit = Vec::new();
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                if w[i] > 0 {
                    let mut next = w.clone();
                    self.reflect(&mut next, i);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            orbit.push(w);
        }
        orbit
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> RootSystemId {
        s.parse().unwrap()
    }

    #[test]
    fn a1_single_root() {
        let d = build(id("A1"));
        assert_eq!(d.num_positive, 1);
        assert_eq!(d.coxeter_number, 2);
        assert_eq!(d.weyl_order, BigUint::from(2u32));
    }

    #[test]
    fn a2_roots() {
        let d = build(id("A2"));
        let roots: Vec<Vec<i32>> = d.positive_roots.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(d.coxeter_number, 3);
        assert_eq!(d.weyl_order, BigUint::from(6u32));
    }

    #[test]
    fn e8_counts() {
        let d = build(id("E8"));
        assert_eq!(d.num_positive, 120);
        assert_eq!(d.coxeter_number, 30);
        assert_eq!(d.weyl_order, BigUint::from(696_729_600u64));
        // highest root of E8 in Bourbaki numbering
        assert_eq!(
            d.positive_roots.last().unwrap().coeffs,
            vec![2, 3, 4, 6, 5, 4, 3, 2]
        );
    }

    #[test]
    fn aliases_are_rejected_with_their_canonical_name() {
        let err = "D3".parse::<RootSystemId>().unwrap_err();
        assert!(err.to_string().contains("A3"), "{err}");
        let err = "B1".parse::<RootSystemId>().unwrap_err();
        assert!(err.to_string().contains("A1"), "{err}");
        assert!("D2".parse::<RootSystemId>().is_err());
        assert!("E5".parse::<RootSystemId>().is_err());
        assert!("F3".parse::<RootSystemId>().is_err());
        assert!("A0".parse::<RootSystemId>().is_err());
        assert!("X3".parse::<RootSystemId>().is_err());
        assert!("A".parse::<RootSystemId>().is_err());
        assert_eq!(RootSystemId::canonical(Family::D, 3).unwrap(), id("A3"));
        assert_eq!(RootSystemId::canonical(Family::C, 1).unwrap(), id("A1"));
        assert!(RootSystemId::canonical(Family::D, 2).is_err());
        assert_eq!(id("e_8"), id("E8"));
        assert_eq!(id("B2").group_isomorphic_to(), Some(id("C2")));
    }

    #[test]
    fn duals() {
        assert_eq!(dual(id("A5")), id("A5"));
        assert_eq!(dual(id("B3")), id("C3"));
        assert_eq!(dual(id("C3")), id("B3"));
        assert_eq!(dual(id("G2")), id("G2"));
        assert_eq!(dual(id("F4")), id("F4"));
    }

    #[test]
    fn fundamental_coordinates() {
        let a2 = build(id("A2"));
        assert_eq!(
            a2.fundamental_coords(&Root::new(vec![1, 0])).unwrap(),
            vec![2, -1]
        );
        assert_eq!(
            a2.fundamental_coords(&Root::new(vec![1, 1])).unwrap(),
            vec![1, 1]
        );
        assert_eq!(
            a2.fundamental_coords(&Root::new(vec![-1, -1])).unwrap(),
            vec![-1, -1]
        );
        assert!(matches!(
            a2.fundamental_coords(&Root::new(vec![2, 1])),
            Err(Error::Domain(_))
        ));
        assert!(a2.fundamental_coords(&Root::new(vec![1])).is_err());
        let a3 = build(id("A3"));
        assert_eq!(
            a3.fundamental_coords(&Root::new(vec![1, 1, 1])).unwrap(),
            vec![1, 0, 1]
        );
    }

    #[test]
    fn cartan_entries() {
        for s in ["A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let d = build(id(s));
            for (i, row) in d.cartan.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(v, 2);
                    } else {
                        assert!((-3..=0).contains(&v), "{s} ({i},{j}) = {v}");
                    }
                }
            }
        }
        // B_r: short simple root is last
        let b3 = build(id("B3"));
        assert_eq!(b3.cartan[2][1], -2);
        assert_eq!(b3.cartan[1][2], -1);
        let g2 = build(id("G2"));
        assert_eq!(g2.cartan[0][1], -3);
    }

    #[test]
    fn b3_coroots_are_c3_roots() {
        let b3 = build(id("B3"));
        let mut coroots = b3.coroots();
        coroots.sort();
        let mut c3 = build(id("C3")).positive_roots;
        c3.sort();
        assert_eq!(coroots, c3);
    }

    #[test]
    fn orbit_and_dominant() {
        let a2 = build(id("A2"));
        let orbit = a2.weyl_orbit(&[1, 1]);
        assert_eq!(orbit.len(), 6);
        for w in &orbit {
            assert_eq!(a2.to_dominant(w), vec![1, 1]);
        }
        assert_eq!(a2.weyl_orbit(&[1, 0]).len(), 3);
        assert_eq!(a2.weyl_orbit(&[0, 0]).len(), 1);
    }

    #[test]
    fn diagram_automorphism_groups() {
        assert_eq!(id("A1").diagram_automorphisms().len(), 1);
        assert_eq!(id("A4").diagram_automorphisms().len(), 2);
        assert_eq!(id("D4").diagram_automorphisms().len(), 6);
        assert_eq!(id("D6").diagram_automorphisms().len(), 2);
        assert_eq!(id("E6").diagram_automorphisms().len(), 2);
        assert_eq!(id("E7").diagram_automorphisms().len(), 1);
        assert_eq!(id("B3").diagram_automorphisms().len(), 1);
    }

    #[test]
    fn serializes_named_fields() {
        let v = serde_json::to_value(build(id("A2"))).unwrap();
        assert_eq!(v["id"], "A2");
        assert_eq!(v["num_positive"], 3);
        assert_eq!(v["coxeter_number"], 3);
        assert_eq!(v["weyl_order"], "6");
        assert_eq!(v["positive_roots"][2], serde_json::json!([1, 1]));
        assert_eq!(v["cartan"][0], serde_json::json!([2, -1]));
    }
}
