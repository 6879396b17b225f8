//! The explicit lattice Taylor complex on an order ideal of cosets.
//!
//! In coset `alpha` the generators of homological degree `i - 1` are the
//! `i`-subsets of `fiber(alpha)` whose gcd is `1`. The boundary of `I` drops
//! one monomial `m` at a time with the alternating sign of its position in
//! `I`, divides the rest by their gcd `g`, and multiplies by `x^g`.

use std::collections::{BTreeMap, HashMap};

use super::{LatticeData, QuotientFreeComplex};
use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::resolution::Entry;

/// Largest fiber whose subsets are enumerated.
pub const MAX_FIBER: usize = 20;

fn meet_all(vs: &[ExponentVector]) -> ExponentVector {
    let mut m = vs[0].clone();
    for v in &vs[1..] {
        m = m.meet_unchecked(v);
    }
    m
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// The lattice Taylor complex restricted to the order ideal `q` of cosets
/// (given by nonnegative representatives).
pub fn lattice_taylor(lattice: &LatticeData, q: &[ExponentVector]) -> Result<QuotientFreeComplex> {
    lattice.check_downward_closed(q)?;
    let n = lattice.ambient_dim();
    let mut cosets: BTreeMap<ExponentVector, Vec<ExponentVector>> = BTreeMap::new();
    for a in q {
        cosets.entry(lattice.canonical(a)).or_insert_with(|| lattice.fiber(a));
    }
    if let Some(f) = cosets.values().find(|f| f.len() > MAX_FIBER) {
        return Err(Error::TooLarge(format!("fiber of {} monomials", f.len())));
    }
    let top = cosets.values().map(Vec::len).max().unwrap_or(0);
    let mut degrees: Vec<Vec<ExponentVector>> = vec![Vec::new(); top];
    let mut members: Vec<Vec<Vec<ExponentVector>>> = vec![Vec::new(); top];
    let mut index: Vec<HashMap<Vec<ExponentVector>, usize>> = vec![HashMap::new(); top];
    for fiber in cosets.values() {
        for k in 1..=fiber.len() {
            for s in subsets_of_size(fiber.len(), k) {
                let set: Vec<ExponentVector> = s.iter().map(|&i| fiber[i].clone()).collect();
                if !meet_all(&set).is_zero() {
                    continue;
                }
                index[k - 1].insert(set.clone(), degrees[k - 1].len());
                degrees[k - 1].push(fiber[0].clone());
                members[k - 1].push(set);
            }
        }
    }
    while degrees.last().is_some_and(Vec::is_empty) {
        degrees.pop();
        members.pop();
    }
    let mut differentials = vec![Vec::new(); degrees.len()];
    for h in 1..degrees.len() {
        for (col, set) in members[h].iter().enumerate() {
            for j in 0..set.len() {
                let mut rest = set.clone();
                rest.remove(j);
                let g = meet_all(&rest);
                let reduced: Vec<ExponentVector> = rest.iter().map(|v| v - &g).collect();
                let row = *index[h - 1].get(&reduced).ok_or_else(|| {
                    Error::NotDownwardClosed((&set[0] - &g).into_coords())
                })?;
                differentials[h].push(Entry {
                    row,
                    col,
                    coeff: if j % 2 == 0 { 1 } else { -1 },
                    exponent: g,
                });
            }
        }
    }
    Ok(QuotientFreeComplex { ambient_dim: n, degrees, differentials })
}

/// Number of `k`-subsets of lattice points below `b` whose join is exactly
/// `b`: the rank of the Taylor complex of `M_L` in degree `b`, counted on
/// the finite window under `b`.
pub fn taylor_count_unrolled(lattice: &LatticeData, b: &ExponentVector, k: usize) -> Result<usize> {
    let pts: Vec<ExponentVector> = lattice.fiber(b).into_iter().map(|f| b - &f).collect();
    if pts.len() > MAX_FIBER {
        return Err(Error::TooLarge(format!("{} lattice points below {b}", pts.len())));
    }
    Ok(subsets_of_size(pts.len(), k)
        .into_iter()
        .filter(|s| {
            let mut j = pts[s[0]].clone();
            for &i in &s[1..] {
                j = j.join_unchecked(&pts[i]);
            }
            &j == b
        })
        .count())
}
