mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{id, oracle};
use liegrowth::census::{
    canonical_orbit_rep, census_count, census_list, orbit, simple_pairs, PairTable,
};
use liegrowth::{CVector, Family, RootSystemId};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Swaps that generate the diagram symmetries, written out by hand.
fn symmetric_images(sys: RootSystemId, c: &[u64]) -> BTreeSet<Vec<u64>> {
    let r = c.len();
    let mut seen = BTreeSet::from([c.to_vec()]);
    let gens: Vec<Vec<usize>> = match (sys.family(), r) {
        (Family::A, _) if r > 1 => vec![(0..r).rev().collect()],
        (Family::D, 4) => vec![vec![2, 1, 0, 3], vec![0, 1, 3, 2]],
        (Family::D, _) => {
            let mut p: Vec<usize> = (0..r).collect();
            p.swap(r - 2, r - 1);
            vec![p]
        }
        (Family::E, 6) => vec![vec![5, 1, 4, 3, 2, 0]],
        _ => vec![],
    };
    let mut frontier = vec![c.to_vec()];
    while let Some(v) = frontier.pop() {
        for g in &gens {
            let w: Vec<u64> = g.iter().map(|&i| v[i]).collect();
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    seen
}

/// Simple pairs of degree `2..=max`, keyed by degree, by scanning boxes for
/// every canonical id whose rank allows such a degree.
fn brute_simple_pairs(max: u64) -> BTreeMap<u64, BTreeSet<(String, Vec<u64>)>> {
    let mut out: BTreeMap<u64, BTreeSet<_>> = BTreeMap::new();
    let mut ids = Vec::new();
    for r in 1..max as usize {
        ids.push(RootSystemId::a(r));
        if r >= 3 {
            ids.push(RootSystemId::new(Family::B, r).unwrap());
        }
        if r >= 2 {
            ids.push(RootSystemId::new(Family::C, r).unwrap());
        }
        if r >= 4 {
            ids.push(RootSystemId::new(Family::D, r).unwrap());
        }
    }
    ids.extend(["G2", "F4", "E6", "E7", "E8"].map(id));
    let limit = BigUint::from(max);
    for sys in ids {
        let rank = sys.rank();
        let dimension = oracle(sys);
        let mut c = vec![1u64; rank];
        loop {
            let d = u64::try_from(&dimension(&c)).unwrap();
            if d >= 2 {
                let rep = symmetric_images(sys, &c).into_iter().next().unwrap();
                out.entry(d).or_default().insert((sys.to_string(), rep));
            }
            // odometer; a coordinate whose bump already exceeds the limit resets
            let mut k = 0;
            while k < rank {
                c[k] += 1;
                if dimension(&c) <= limit {
                    break;
                }
                c[k] = 1;
                k += 1;
            }
            if k == rank {
                break;
            }
        }
    }
    out
}

#[test]
fn simple_pairs_match_box_search() {
    let max = 60;
    let brute = brute_simple_pairs(max);
    let table = PairTable::build(max);
    for n in 2..=max {
        let got: BTreeSet<(String, Vec<u64>)> = table
            .pairs(n)
            .iter()
            .map(|p| {
                assert_eq!(p.dim, n);
                (p.id.to_string(), p.c.clone().into_inner())
            })
            .collect();
        assert_eq!(got, brute.get(&n).cloned().unwrap_or_default(), "n={n}");
        assert_eq!(simple_pairs(n).len(), got.len());
    }
}

#[test]
fn census_at_a_prime_is_the_simple_count() {
    for p in [
        2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
    ] {
        assert_eq!(census_count(p), simple_pairs(p).len() as u64, "p={p}");
    }
}

#[test]
fn listings_agree_with_counts() {
    let table = PairTable::build(256);
    for n in 1..=256 {
        let list = table.census_list(n);
        assert_eq!(list.len() as u64, table.census_count(n), "n={n}");
        let mut seen = BTreeSet::new();
        for rec in &list {
            assert_eq!(rec.n, n);
            assert_eq!(rec.factors.iter().map(|f| f.dim).product::<u64>(), n);
            assert!(rec.factors.iter().all(|f| f.dim >= 2));
            assert!(
                rec.factors
                    .windows(2)
                    .all(|w| (w[0].dim, &w[0]) <= (w[1].dim, &w[1])),
                "unsorted {rec:?}"
            );
            assert!(seen.insert(rec.factors.clone()), "duplicate {rec:?}");
        }
    }
    assert_eq!(census_list(12).len() as u64, census_count(12));
}

#[test]
fn small_counts() {
    assert_eq!(census_count(1), 0);
    // SU(2) on C^2
    assert_eq!(census_count(2), 1);
    // SU(3) with its dual identified, and SU(2) on C^3
    assert_eq!(census_count(3), 2);
    // SU(4), Sp(4), SU(2) on C^4, SU(2) x SU(2)
    assert_eq!(census_count(4), 4);
}

#[test]
fn d4_orbits() {
    let sys = id("D4");
    let sizes = |c: &str| orbit(sys, &c.parse().unwrap()).len();
    assert_eq!(sizes("2,1,1,1"), 3);
    assert_eq!(sizes("1,1,2,1"), 3);
    assert_eq!(sizes("1,2,1,1"), 1);
    assert_eq!(sizes("2,1,3,1"), 6);
    assert_eq!(sizes("2,1,2,2"), 1);
    assert_eq!(sys.diagram_automorphisms().len(), 6);
}

proptest! {
    #[test]
    fn canonical_rep_is_idempotent_and_least(
        pick in 0usize..6,
        c in proptest::collection::vec(1u64..6, 8),
    ) {
        let sys = ["A5", "D4", "D6", "E6", "B3", "E7"].map(id)[pick];
        let c = CVector::new(c[..sys.rank()].to_vec()).unwrap();
        let rep = canonical_orbit_rep(sys, &c);
        prop_assert_eq!(canonical_orbit_rep(sys, &rep), rep.clone());
        let images = symmetric_images(sys, c.as_slice());
        prop_assert_eq!(rep.as_slice(), images.iter().next().unwrap().as_slice());
        let lib: BTreeSet<Vec<u64>> = orbit(sys, &c).into_iter().map(CVector::into_inner).collect();
        prop_assert_eq!(lib, images);
    }
}
