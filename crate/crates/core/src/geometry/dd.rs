//! Double description method over the integers.
//!
//! [`cone_from_inequalities`] converts `{x : a_k . x >= 0 for all k}` into a
//! lineality basis plus extreme rays. Constraints are inserted in input order;
//! new rays are built from adjacent pairs by exact integer combinations and
//! reduced to coprime entries, so output is reproducible bit for bit.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::bitset::BitSet;
use crate::linalg::{dot, normalize_content};

/// A polyhedral cone `lin(lineality) + cone(rays)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub dim: usize,
    pub lineality: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

impl Cone {
    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: BitSet,
}

/// Generators of `{x in Q^dim : a . x >= 0 for every constraint a}`.
pub fn cone_from_inequalities(constraints: &[Vec<BigInt>], dim: usize) -> Cone {
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from((i == j) as i32)).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in constraints.iter().enumerate() {
        debug_assert_eq!(a.len(), dim);
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.remove(pos);
            let mut al0 = dot(a, &l0);
            if al0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -x.clone());
                al0 = -al0;
            }
            for l in lineality.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    *l = normalize_content(combine(&al0, l, &al, &l0));
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = normalize_content(combine(&al0, &r.v, &ar, &l0));
                }
                r.zeros.insert(k);
            }
            let mut zeros = BitSet::new(constraints.len());
            for j in 0..k {
                zeros.insert(j);
            }
            rays.push(Ray { v: l0, zeros });
            continue;
        }

        let signs: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        if signs.iter().all(|s| !s.is_negative()) {
            for (r, s) in rays.iter_mut().zip(&signs) {
                if s.is_zero() {
                    r.zeros.insert(k);
                }
            }
            continue;
        }

        let pos: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_negative()).collect();
        // combinatorial adjacency: the common zero set of (p, q) is not
        // contained in the zero set of any third ray
        let min_common = dim.saturating_sub(lineality.len() + 2);
        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.intersection(&rays[q].zeros);
                if common.count() < min_common {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&r| r != p && r != q)
                    .all(|r| !common.is_subset(&rays[r].zeros));
                if !adjacent {
                    continue;
                }
                // (a.p) q - (a.q) p, both coefficients positive
                let v = normalize_content(combine(&signs[p], &rays[q].v, &signs[q], &rays[p].v));
                let mut zeros = common;
                zeros.insert(k);
                created.push(Ray { v, zeros });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if signs[i].is_negative() {
                continue;
            }
            if signs[i].is_zero() {
                r.zeros.insert(k);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }

    Cone {
        dim,
        lineality,
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}

/// `c1 * u - c2 * w`.
fn combine(c1: &BigInt, u: &[BigInt], c2: &BigInt, w: &[BigInt]) -> Vec<BigInt> {
    u.iter().zip(w).map(|(x, y)| c1 * x - c2 * y).collect()
}

/// Facet normals of `cone(generators)` for a full-dimensional cone: the
/// extreme rays of the dual cone, sorted lexicographically. Returns `None`
/// when the generated cone is not full-dimensional.
pub fn facet_normals(generators: &[Vec<BigInt>], dim: usize) -> Option<Vec<Vec<BigInt>>> {
    let dual = cone_from_inequalities(generators, dim);
    if !dual.is_pointed() {
        return None;
    }
    let mut normals = dual.rays;
    normals.sort();
    Some(normals)
}
