//! Counting pairs `(G, V)` with `G` compact semisimple and `V` faithful
//! irreducible of a given dimension.
//!
//! Such a pair is a tensor product `V_1 x ... x V_k` of non-trivial
//! irreducibles of simply connected simple factors, taken up to reordering of
//! the factors and up to outer (diagram) automorphisms of each factor. The
//! count is assembled from the table of simple pairs by running over
//! factorizations `n = d_1 ... d_k` with `1 < d_1 <= ... <= d_k`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumerate::irreps_with;
use crate::rootsys::{Family, RootSystemData, RootSystemId};
use crate::weyldim::{CVector, WeylDimension};

/// Canonical simple factor: an id and the lexicographically least c-vector of
/// its diagram-automorphism orbit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SimplePair {
    pub id: RootSystemId,
    pub c: CVector,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub factors: Vec<SimplePair>,
    pub n: u64,
}

/// Distinct images of `c` under the diagram automorphisms of `id`.
pub fn orbit(id: RootSystemId, c: &CVector) -> Vec<CVector> {
    let mut out: Vec<CVector> = id
        .diagram_automorphisms()
        .iter()
        .map(|sigma| {
            let mut image = vec![0; c.len()];
            for (i, &x) in c.as_slice().iter().enumerate() {
                image[sigma[i]] = x;
            }
            CVector::new(image).expect("permutation keeps entries >= 1")
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn canonical_orbit_rep(id: RootSystemId, c: &CVector) -> CVector {
    orbit(id, c).into_iter().next().expect("orbit contains c")
}

/// Smallest degree of a non-trivial irreducible representation.
pub fn min_nontrivial_dim(id: RootSystemId) -> u64 {
    let r = id.rank() as u64;
    match id.family() {
        Family::A => r + 1,
        Family::B => 2 * r + 1,
        Family::C | Family::D => 2 * r,
        Family::E => match r {
            6 => 27,
            7 => 56,
            _ => 248,
        },
        Family::F => 26,
        Family::G => 7,
    }
}

/// Canonical ids with a non-trivial irreducible of degree `<= max_dim`. `B2` is
/// left out in favour of `C2`, which has the same compact group.
pub fn census_ids(max_dim: u64) -> Vec<RootSystemId> {
    let mut ids = Vec::new();
    for family in Family::ALL {
        let ranks: Vec<usize> = match family {
            Family::A | Family::B | Family::C | Family::D => (1..)
                .take_while(|&r| {
                    RootSystemId::new(family, r)
                        .map_or(r < 4, |id| min_nontrivial_dim(id) <= max_dim)
                })
                .collect(),
            Family::E => vec![6, 7, 8],
            Family::F => vec![4],
            Family::G => vec![2],
        };
        for r in ranks {
            if let Ok(id) = RootSystemId::new(family, r) {
                if id.group_isomorphic_to().is_none() && min_nontrivial_dim(id) <= max_dim {
                    ids.push(id);
                }
            }
        }
    }
    ids
}

/// All canonical simple pairs of degree `<= max_dim`, bucketed by degree.
#[derive(Clone, Debug)]
pub struct PairTable {
    max_dim: u64,
    by_dim: BTreeMap<u64, Vec<SimplePair>>,
}

impl PairTable {
    pub fn build(max_dim: u64) -> Self {
        let mut by_dim: BTreeMap<u64, Vec<SimplePair>> = BTreeMap::new();
        if max_dim >= 2 {
            for id in census_ids(max_dim) {
                let eval = WeylDimension::from_data(&RootSystemData::build(id));
                for rec in irreps_with(&eval, max_dim) {
                    if rec.c.is_trivial() || canonical_orbit_rep(id, &rec.c) != rec.c {
                        continue;
                    }
                    let dim = u64::try_from(&rec.dim).expect("bounded by max_dim");
                    by_dim
                        .entry(dim)
                        .or_default()
                        .push(SimplePair { id, c: rec.c, dim });
                }
            }
        }
        for pairs in by_dim.values_mut() {
            pairs.sort();
        }
        PairTable { max_dim, by_dim }
    }

    pub fn max_dim(&self) -> u64 {
        self.max_dim
    }

    pub fn pairs(&self, n: u64) -> &[SimplePair] {
        assert!(n <= self.max_dim, "table built only up to {}", self.max_dim);
        self.by_dim.get(&n).map_or(&[], Vec::as_slice)
    }

    /// Every pair in the table, ordered by degree.
    pub fn all(&self) -> impl Iterator<Item = &SimplePair> {
        self.by_dim.values().flatten()
    }

    pub fn census_count(&self, n: u64) -> u64 {
        if n <= 1 {
            return 0;
        }
        self.count_from(n, 2)
    }

    fn count_from(&self, n: u64, min_part: u64) -> u64 {
        if n == 1 {
            return 1;
        }
        let mut total = 0;
        for d in min_part..=n {
            if !n.is_multiple_of(d) {
                continue;
            }
            let a = self.pairs(d).len() as u64;
            if a == 0 {
                continue;
            }
            let mut rest = n;
            let mut m = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                m += 1;
                total += multichoose(a, m) * self.count_from(rest, d + 1);
            }
        }
        total
    }

    pub fn census_list(&self, n: u64) -> Vec<CensusRecord> {
        let mut out = Vec::new();
        if n > 1 {
            self.list_from(n, 2, &mut Vec::new(), &mut out);
        }
        out
    }

    fn list_from(
        &self,
        n: u64,
        min_part: u64,
        acc: &mut Vec<SimplePair>,
        out: &mut Vec<CensusRecord>,
    ) {
        if n == 1 {
            out.push(CensusRecord {
                factors: acc.clone(),
                n: acc.iter().map(|p| p.dim).product(),
            });
            return;
        }
        for d in min_part..=n {
            if !n.is_multiple_of(d) {
                continue;
            }
            let pairs = self.pairs(d);
            if pairs.is_empty() {
                continue;
            }
            let mut rest = n;
            let mut m = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                m += 1;
                for choice in multisets(pairs.len(), m) {
                    let base = acc.len();
                    acc.extend(choice.iter().map(|&k| pairs[k].clone()));
                    self.list_from(rest, d + 1, acc, out);
                    acc.truncate(base);
                }
            }
        }
    }
}

/// Multisets of size `m` drawn from `a` kinds.
fn multichoose(a: u64, m: u64) -> u64 {
    // C(a + m - 1, m), built incrementally so every step is exact
    (1..=m).fold(1u64, |acc, k| acc * (a + k - 1) / k)
}

/// Non-decreasing index sequences of length `m` over `0..kinds`.
fn multisets(kinds: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; m];
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..m).rev().find(|&i| cur[i] + 1 < kinds) else {
            return out;
        };
        let v = cur[pos] + 1;
        for x in &mut cur[pos..] {
            *x = v;
        }
    }
}

/// Simple pairs of degree exactly `n`.
pub fn simple_pairs(n: u64) -> Vec<SimplePair> {
    if n < 2 {
        return Vec::new();
    }
    PairTable::build(n).pairs(n).to_vec()
}

pub fn census_count(n: u64) -> u64 {
    PairTable::build(n).census_count(n)
}

pub fn census_list(n: u64) -> Vec<CensusRecord> {
    PairTable::build(n).census_list(n)
}
