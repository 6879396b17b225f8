//! Primitive vectors of a lattice by completion, and a brute-force check.

use std::collections::{BTreeSet, VecDeque};

use super::LatticeData;
use crate::monomial::ExponentVector;

/// `u` is conformally below `v`: `u+ <= v+` and `u- <= v-`.
fn conformal_le(u: &ExponentVector, v: &ExponentVector) -> bool {
    u.iter().zip(v.iter()).all(|(&a, &b)| if a > 0 { b >= a } else if a < 0 { b <= a } else { true })
}

fn normal_form(mut s: ExponentVector, g: &[ExponentVector]) -> ExponentVector {
    'outer: while !s.is_zero() {
        for h in g {
            if conformal_le(h, &s) {
                s = &s - h;
                continue 'outer;
            }
        }
        break;
    }
    s
}

/// All primitive vectors of `L`, sorted and closed under negation.
///
/// Completion: starting from `+-basis`, every pairwise sum is reduced by
/// conformal subtraction against the current set; nonzero remainders join
/// the set and spawn new sums. The conformally minimal elements of the
/// final set are the primitive vectors.
pub fn graver_basis(lattice: &LatticeData) -> Vec<ExponentVector> {
    let mut g: Vec<ExponentVector> = Vec::new();
    for b in lattice.basis() {
        g.push(b.clone());
        g.push(-b);
    }
    let mut queue: VecDeque<ExponentVector> = VecDeque::new();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            queue.push_back(&g[i] + &g[j]);
        }
    }
    while let Some(s) = queue.pop_front() {
        let f = normal_form(s, &g);
        if f.is_zero() {
            continue;
        }
        for h in &g {
            queue.push_back(&f + h);
        }
        g.push(f);
    }
    let set: BTreeSet<ExponentVector> = g.into_iter().collect();
    let all: Vec<&ExponentVector> = set.iter().collect();
    all.iter()
        .filter(|v| !all.iter().any(|u| u != *v && conformal_le(u, v)))
        .map(|v| (*v).clone())
        .collect()
}

/// No other nonzero lattice vector lies conformally below `v`; decided by
/// searching the box spanned by `v`.
pub fn is_primitive(lattice: &LatticeData, v: &ExponentVector) -> bool {
    if v.is_zero() || !lattice.contains(v) {
        return false;
    }
    !lattice
        .points_in_box(v.max_norm())
        .iter()
        .any(|u| !u.is_zero() && u != v && conformal_le(u, v))
}

/// Primitive vectors with max-norm at most `radius`, by exhaustive search.
pub fn graver_brute_force(lattice: &LatticeData, radius: i64) -> Vec<ExponentVector> {
    let pts = lattice.points_in_box(radius);
    pts.iter()
        .filter(|v| !v.is_zero())
        .filter(|v| !pts.iter().any(|u| !u.is_zero() && u != *v && conformal_le(u, v)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::tests::{a2, quartic, rank_one};
    use super::*;

    fn within(g: &[ExponentVector], r: i64) -> Vec<ExponentVector> {
        g.iter().filter(|v| v.max_norm() <= r).cloned().collect()
    }

    #[test]
    fn a2_graver() {
        let g = graver_basis(&a2());
        let expect: Vec<ExponentVector> = vec![
            [-1, 0, 1], [-1, 1, 0], [0, -1, 1], [0, 1, -1], [1, -1, 0], [1, 0, -1],
        ]
        .into_iter()
        .map(ExponentVector::from)
        .collect();
        assert_eq!(g, expect);
        assert_eq!(graver_brute_force(&a2(), 2), expect);
    }

    #[test]
    fn rank_one_graver() {
        let g = graver_basis(&rank_one());
        assert_eq!(g, vec![ExponentVector::from([-2, 3]), ExponentVector::from([2, -3])]);
    }

    #[test]
    fn quartic_graver_contains_known_relations() {
        let l = quartic();
        let g = graver_basis(&l);
        for v in &g {
            assert!(g.contains(&-v));
        }
        // x3 x4^2 - x1 x5^2 and x2^2 x3 - x1^2 x5
        assert!(g.contains(&ExponentVector::from([-1, 0, 1, 2, -2])));
        assert!(g.contains(&ExponentVector::from([-2, 2, 1, 0, -1])));
        assert!(g.contains(&ExponentVector::from([1, -2, 1, 0, 0])));
        assert_eq!(within(&g, 3), graver_brute_force(&l, 3));
    }

    #[test]
    fn primitivity() {
        let l = a2();
        assert!(is_primitive(&l, &ExponentVector::from([1, -1, 0])));
        assert!(!is_primitive(&l, &ExponentVector::from([2, -1, -1])));
        assert!(!is_primitive(&l, &ExponentVector::from([1, 0, 0])));
    }
}
