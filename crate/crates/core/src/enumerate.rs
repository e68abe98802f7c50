//! Exhaustive enumeration of irreducible characters of bounded degree.
//!
//! The degree is strictly increasing in every shifted coordinate, so a search
//! that starts at the all-ones vector, only ever increments coordinates, and
//! drops a branch once it exceeds the bound visits every character of degree
//! `<= N` exactly once. Each vector is generated by incrementing coordinates in
//! non-decreasing index order, which makes the search tree duplicate-free.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystemId};
use crate::weyldim::{evaluator, CVector, WeylDimension};
use crate::zetabounds::witten_zeta_bound;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepRecord {
    pub c: CVector,
    #[serde(with = "crate::bigdec")]
    pub dim: BigUint,
}

/// Truncation of the Witten zeta function at degree `cutoff`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WittenPartial {
    pub s: f64,
    pub cutoff: u64,
    pub partial_sum: f64,
    /// `R_cutoff`, trivial character included.
    pub count: u64,
}

struct Node {
    c: Vec<u64>,
    from: usize,
    dim: u64,
}

fn children(eval: &WeylDimension, node: &Node, limit: u64, out: &mut Vec<Node>) {
    for k in node.from..node.c.len() {
        let mut c = node.c.clone();
        c[k] += 1;
        if let Some(dim) = eval.dimension_at_most(&c, limit) {
            out.push(Node { c, from: k, dim });
        }
    }
}

fn search(eval: &WeylDimension, limit: u64, start: Vec<Node>, out: &mut Vec<(Vec<u64>, u64)>) {
    let mut stack = start;
    while let Some(node) = stack.pop() {
        children(eval, &node, limit, &mut stack);
        out.push((node.c, node.dim));
    }
}

fn finish(mut raw: Vec<(Vec<u64>, u64)>) -> Vec<IrrepRecord> {
    raw.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    raw.into_iter()
        .map(|(c, dim)| IrrepRecord {
            c: CVector::new(c).expect("search keeps entries >= 1"),
            dim: BigUint::from(dim),
        })
        .collect()
}

fn check_limit(limit: u64) -> Result<()> {
    if limit == 0 {
        return Err(Error::Domain("degree bound must be at least 1".into()));
    }
    Ok(())
}

/// All irreducible characters of degree `<= limit`, sorted by `(dim, c)`.
pub fn irreps_up_to(id: RootSystemId, limit: u64) -> Result<Vec<IrrepRecord>> {
    check_limit(limit)?;
    Ok(irreps_with(&evaluator(id), limit))
}

/// Same as [`irreps_up_to`] with an explicit evaluator.
pub fn irreps_with(eval: &WeylDimension, limit: u64) -> Vec<IrrepRecord> {
    let mut raw = Vec::new();
    search(eval, limit, vec![root_node(eval)], &mut raw);
    finish(raw)
}

fn root_node(eval: &WeylDimension) -> Node {
    Node {
        c: vec![1; eval.id().rank()],
        from: 0,
        dim: 1,
    }
}

/// Parallel variant: the upper levels of the search tree are expanded until
/// there is enough work, then subtrees are dealt round-robin to `threads`
/// workers. The merged output is identical to the sequential one.
pub fn irreps_up_to_parallel(
    id: RootSystemId,
    limit: u64,
    threads: usize,
) -> Result<Vec<IrrepRecord>> {
    check_limit(limit)?;
    let eval = evaluator(id);
    if threads <= 1 {
        return Ok(irreps_with(&eval, limit));
    }
    let mut raw = Vec::new();
    let mut frontier = vec![root_node(&eval)];
    while !frontier.is_empty() && frontier.len() < 8 * threads {
        let mut next = Vec::new();
        for node in frontier {
            children(&eval, &node, limit, &mut next);
            raw.push((node.c, node.dim));
        }
        frontier = next;
    }
    let mut shares: Vec<Vec<Node>> = (0..threads).map(|_| Vec::new()).collect();
    for (k, node) in frontier.into_iter().enumerate() {
        shares[k % threads].push(node);
    }
    let eval = &*eval;
    let parts: Vec<Vec<(Vec<u64>, u64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = shares
            .into_iter()
            .map(|share| {
                scope.spawn(move || {
                    let mut out = Vec::new();
                    search(eval, limit, share, &mut out);
                    out
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    for part in parts {
        raw.extend(part);
    }
    Ok(finish(raw))
}

/// `R_n`: number of irreducible characters of degree `<= n`, trivial included.
pub fn r_n(id: RootSystemId, n: u64) -> Result<u64> {
    Ok(irreps_up_to(id, n)?.len() as u64)
}

/// `sum_{dim <= cutoff} dim^{-s}`.
pub fn witten_partial(id: RootSystemId, s: f64, cutoff: u64) -> Result<WittenPartial> {
    if s.is_nan() || s <= 0.0 {
        return Err(Error::Domain(format!("s must be positive, got {s}")));
    }
    let records = irreps_up_to(id, cutoff)?;
    // smallest terms first
    let partial_sum = records
        .iter()
        .rev()
        .map(|rec| dim_f64(&rec.dim).powf(-s))
        .sum();
    Ok(WittenPartial {
        s,
        cutoff,
        partial_sum,
        count: records.len() as u64,
    })
}

fn dim_f64(d: &BigUint) -> f64 {
    num_traits::ToPrimitive::to_f64(d).expect("finite")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: u64,
    pub r_n: u64,
}

/// Outcome of checking `R_n <= n` for all `n <= max_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm1Report {
    pub id: RootSystemId,
    pub max_n: u64,
    /// Number of characters of degree `<= max_n`.
    pub count: u64,
    /// All `n <= max_n` with `R_n = n`.
    pub equalities: Vec<u64>,
    pub expected_equalities: Vec<u64>,
    pub violation: Option<Violation>,
    pub pass: bool,
}

/// Equality cases allowed by the bound `R_n <= n`: every `n` for `A1`,
/// `n in {1, 3}` for `A2`, and only `n = 1` otherwise.
pub fn expected_equalities(id: RootSystemId, max_n: u64) -> Vec<u64> {
    match (id.family(), id.rank()) {
        (Family::A, 1) => (1..=max_n).collect(),
        (Family::A, 2) => [1, 3].into_iter().filter(|&n| n <= max_n).collect(),
        _ => vec![1],
    }
}

/// Checks `d_k >= k` for the sorted degrees `d_1 <= d_2 <= ...` up to `max_n`,
/// which is equivalent to `R_n <= n` for every `n <= max_n`.
pub fn verify_thm1(id: RootSystemId, max_n: u64) -> Result<Thm1Report> {
    let records = irreps_up_to(id, max_n)?;
    let dims: Vec<u64> = records
        .iter()
        .map(|r| u64::try_from(&r.dim).expect("bounded by max_n"))
        .collect();
    Ok(thm1_from_dims(id, max_n, &dims))
}

pub fn thm1_from_dims(id: RootSystemId, max_n: u64, dims: &[u64]) -> Thm1Report {
    let mut violation = None;
    let mut equalities = Vec::new();
    for (k, &d) in dims.iter().enumerate() {
        let k = k as u64 + 1;
        if d < k {
            let r_n = dims.iter().take_while(|&&x| x <= d).count() as u64;
            violation = Some(Violation { n: d, r_n });
            break;
        }
        // R_d = d happens exactly at the last record of degree d with index d
        let last_of_its_degree = dims.get(k as usize).is_none_or(|&next| next > d);
        if last_of_its_degree && d == k {
            equalities.push(d);
        }
    }
    let expected = expected_equalities(id, max_n);
    let distinct: BTreeSet<u64> = equalities.iter().copied().collect();
    let pass = violation.is_none() && distinct.iter().copied().eq(expected.iter().copied());
    Thm1Report {
        id,
        max_n,
        count: dims.len() as u64,
        equalities,
        expected_equalities: expected,
        violation,
        pass,
    }
}

/// Search range from the bound `n <= Z(3/4)^4` on a hypothetical equality,
/// with `Z` taken over the dual system. `None` when the bound diverges.
pub fn thm1_search_bound(id: RootSystemId) -> Option<u64> {
    witten_zeta_bound(id, 0.75)
        .ok()
        .map(|z| z.powi(4).floor() as u64)
}
