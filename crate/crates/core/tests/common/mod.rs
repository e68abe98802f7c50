//! Oracles shared by the integration tests. Classical root systems are built
//! here from orthonormal coordinates, independently of the library's
//! Cartan-matrix closure.

#![allow(dead_code)]

use std::collections::BTreeSet;

use liegrowth::{Family, RootSystemData, RootSystemId};
use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{One, Zero};

/// A positive root given by simple-root coefficients and its squared length.
#[derive(Clone, Debug)]
pub struct OracleRoot {
    pub coeffs: Vec<i64>,
    pub norm: i64,
}

pub struct OracleSystem {
    pub rank: usize,
    pub simple_norms: Vec<i64>,
    pub positive: Vec<OracleRoot>,
}

fn unit(n: usize, i: usize, x: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = x;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves `sum_j k_j simple_j = v` over the rationals.
fn coordinates(simple: &[Vec<i64>], v: &[i64]) -> Option<Vec<Rational64>> {
    let r = simple.len();
    let n = v.len();
    // augmented n x (r+1) system, columns are simple roots
    let mut m: Vec<Vec<Rational64>> = (0..n)
        .map(|row| {
            let mut line: Vec<Rational64> =
                simple.iter().map(|s| Rational64::from(s[row])).collect();
            line.push(Rational64::from(v[row]));
            line
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..r {
        let Some(p) = (pivot_row..n).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = Rational64::one() / m[pivot_row][col];
        for x in &mut m[pivot_row] {
            *x *= inv;
        }
        for i in 0..n {
            if i != pivot_row && !m[i][col].is_zero() {
                let f = m[i][col];
                let pivot = m[pivot_row].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot) {
                    *x -= y * f;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|line| !line[r].is_zero()) {
        return None;
    }
    let mut k = vec![Rational64::zero(); r];
    for (row, &col) in pivots.iter().enumerate() {
        k[col] = m[row][r];
    }
    Some(k)
}

/// Classical root system from orthonormal coordinates with Bourbaki's simple roots.
pub fn classical(family: Family, r: usize) -> OracleSystem {
    let n = if family == Family::A { r + 1 } else { r };
    let e = |i: usize, x: i64| unit(n, i, x);
    let mut simple: Vec<Vec<i64>> = (0..r.min(n - 1))
        .map(|i| add(&e(i, 1), &e(i + 1, -1)))
        .collect();
    match family {
        Family::A => {}
        Family::B => simple.push(e(r - 1, 1)),
        Family::C => simple.push(e(r - 1, 2)),
        Family::D => {
            simple.truncate(r - 1);
            simple.push(add(&e(r - 2, 1), &e(r - 1, 1)));
        }
        _ => panic!("not classical"),
    }
    assert_eq!(simple.len(), r);
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            all.insert(add(&e(i, 1), &e(j, -1)));
            if family != Family::A {
                for s in [1, -1] {
                    all.insert(add(&e(i, s), &e(j, s)));
                }
            }
        }
        for s in [1, -1] {
            match family {
                Family::B => {
                    all.insert(e(i, s));
                }
                Family::C => {
                    all.insert(e(i, 2 * s));
                }
                _ => {}
            }
        }
    }
    let mut positive = Vec::new();
    for v in &all {
        let k = coordinates(&simple, v).expect("root lies in the span");
        assert!(k.iter().all(|x| x.is_integer()));
        let k: Vec<i64> = k.iter().map(|x| x.to_integer()).collect();
        if k.iter().all(|&x| x >= 0) {
            positive.push(OracleRoot {
                coeffs: k,
                norm: dot(v, v),
            });
        } else {
            assert!(k.iter().all(|&x| x <= 0));
        }
    }
    positive.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
    OracleSystem {
        rank: r,
        simple_norms: simple.iter().map(|s| dot(s, s)).collect(),
        positive,
    }
}

impl OracleSystem {
    /// Coroot coefficients `k_j |alpha_j|^2 / |beta|^2` in the simple-coroot basis.
    pub fn coroot_rows(&self) -> Vec<Vec<u64>> {
        self.positive
            .iter()
            .map(|root| {
                root.coeffs
                    .iter()
                    .zip(&self.simple_norms)
                    .map(|(&k, &d)| {
                        assert_eq!((k * d) % root.norm, 0);
                        (k * d / root.norm) as u64
                    })
                    .collect()
            })
            .collect()
    }

    pub fn dimension(&self, c: &[u64]) -> BigUint {
        product_dimension(&self.coroot_rows(), c)
    }
}

/// `prod_i (sum_j a_ij c_j) / prod_i (sum_j a_ij)`, asserting exact division.
pub fn product_dimension(rows: &[Vec<u64>], c: &[u64]) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for row in rows {
        num *= row.iter().zip(c).map(|(a, x)| a * x).sum::<u64>();
        den *= row.iter().sum::<u64>();
    }
    assert!((&num % &den).is_zero(), "Weyl quotient not integral");
    num / den
}

/// Coroot rows taken from the library's coroots; a second route for the
/// exceptional types.
pub fn library_coroot_rows(id: RootSystemId) -> Vec<Vec<u64>> {
    RootSystemData::build(id)
        .coroots()
        .into_iter()
        .map(|r| r.coeffs.into_iter().map(|k| k as u64).collect())
        .collect()
}

/// Every `c` with `dim(c) <= limit`, by nested loops that stop each
/// coordinate once the value with all later coordinates at 1 exceeds the limit.
pub fn nested_walk(
    rank: usize,
    limit: u64,
    dim: &dyn Fn(&[u64]) -> BigUint,
) -> Vec<(Vec<u64>, u64)> {
    fn go(
        k: usize,
        c: &mut Vec<u64>,
        limit: u64,
        dim: &dyn Fn(&[u64]) -> BigUint,
        out: &mut Vec<(Vec<u64>, u64)>,
    ) {
        if k == c.len() {
            let d = dim(c);
            if d <= BigUint::from(limit) {
                out.push((c.clone(), u64::try_from(&d).unwrap()));
            }
            return;
        }
        loop {
            if dim(c) > BigUint::from(limit) {
                break;
            }
            go(k + 1, c, limit, dim, out);
            c[k] += 1;
        }
        c[k] = 1;
    }
    let mut out = Vec::new();
    go(0, &mut vec![1; rank], limit, dim, &mut out);
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    out
}

pub fn id(s: &str) -> RootSystemId {
    s.parse().unwrap()
}

/// Canonical ids for every family with rank in `ranks` (B2 included).
pub fn ids_with_ranks(max_classical: usize) -> Vec<RootSystemId> {
    let mut ids = Vec::new();
    for family in Family::ALL {
        for r in 1..=max_classical.max(8) {
            if matches!(family, Family::A | Family::B | Family::C | Family::D) && r > max_classical
            {
                continue;
            }
            if let Ok(id) = RootSystemId::new(family, r) {
                ids.push(id);
            }
        }
    }
    ids
}

pub type DimensionFn = Box<dyn Fn(&[u64]) -> BigUint>;

/// Independent degree formula: the orthonormal model for classical families,
/// the library coroot rows otherwise.
pub fn oracle(sys: RootSystemId) -> DimensionFn {
    match sys.family() {
        f @ (Family::A | Family::B | Family::C | Family::D) => {
            let model = classical(f, sys.rank());
            Box::new(move |c| model.dimension(c))
        }
        _ => {
            let rows = library_coroot_rows(sys);
            Box::new(move |c| product_dimension(&rows, c))
        }
    }
}
