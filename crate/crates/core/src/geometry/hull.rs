//! The polyhedron `P_t = conv{t^a} + R^n_+` through its homogenizing cone
//! `C_t`, and the poset of (bounded) faces.
//!
//! `C_t` is spanned by the lifted generators `(t^a, 1)` followed by the unit
//! rays `(e_i, 0)`. Faces of `P_t` are the faces of `C_t` that contain at
//! least one lifted generator; a face is bounded iff it contains no unit ray.
//! Faces are encoded by the set of ray indices lying on them.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use super::dd::facet_normals;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::linalg::{dot, rank_bigint};
use crate::monomial::{ExponentVector, GeneratorSet};

/// Largest ambient dimension accepted by the hull construction.
pub const MAX_DIM: usize = 8;
/// Largest number of generators accepted by the hull construction.
pub const MAX_GENERATORS: usize = 64;

/// `(n+1)! + 1`, the smallest integer above the bound that makes the face
/// poset of `P_t` independent of `t`.
pub fn choose_t(n: usize) -> BigInt {
    let f: BigInt = (1..=n as u64 + 1).map(BigInt::from).product();
    f + 1
}

/// `t^a` coordinatewise, exact.
pub fn lift(a: &ExponentVector, t: &BigRational) -> Vec<BigRational> {
    a.iter().map(|&e| pow_rational(t, e)).collect()
}

fn pow_rational(t: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        Pow::pow(t, e as u64)
    } else {
        Pow::pow(t.recip(), (-e) as u64)
    }
}

fn pow_int(t: &BigInt, e: i64) -> BigInt {
    debug_assert!(e >= 0);
    Pow::pow(t, e as u64)
}

/// The cone `C_t` with its facets and ray/facet incidences.
#[derive(Clone, Debug)]
pub struct ConeDescription {
    pub ambient_dim: usize,
    pub t: BigInt,
    /// Nonnegative shift added to every exponent before lifting; scales the
    /// first `n` coordinates by `t^shift`, which preserves all combinatorics.
    pub shift: ExponentVector,
    /// Lifted generators first, then the `n` unit rays.
    pub rays: Vec<Vec<BigInt>>,
    pub num_lifted: usize,
    /// Primitive integer inner normals, sorted.
    pub facet_normals: Vec<Vec<BigInt>>,
    /// `incidence[r][f]` iff ray `r` lies on facet `f`.
    pub incidence: Vec<Vec<bool>>,
}

impl ConeDescription {
    pub fn is_unit_ray(&self, r: usize) -> bool {
        r >= self.num_lifted
    }
}

pub(crate) fn check_guardrails(n: usize, m: usize) -> Result<()> {
    if n > MAX_DIM {
        return Err(Error::TooLarge(format!("ambient dimension {n} exceeds {MAX_DIM}")));
    }
    if m > MAX_GENERATORS {
        return Err(Error::TooLarge(format!("{m} generators exceed {MAX_GENERATORS}")));
    }
    Ok(())
}

/// Builds `C_t` for a finite minimal generating set.
pub fn build_cone(gens: &GeneratorSet, t: &BigInt) -> Result<ConeDescription> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if t <= &BigInt::one() {
        return Err(Error::Invalid("t must exceed 1".into()));
    }
    let n = gens.ambient_dim();
    check_guardrails(n, gens.len())?;
    let shift = ExponentVector::new(
        (0..n)
            .map(|i| gens.gens().iter().map(|a| -a[i]).max().unwrap().max(0))
            .collect(),
    );
    let mut rays: Vec<Vec<BigInt>> = gens
        .gens()
        .iter()
        .map(|a| {
            let mut r: Vec<BigInt> = a.iter().zip(shift.iter()).map(|(e, s)| pow_int(t, e + s)).collect();
            r.push(BigInt::one());
            r
        })
        .collect();
    for i in 0..n {
        rays.push((0..=n).map(|j| BigInt::from((i == j) as i32)).collect());
    }
    let normals = facet_normals(&rays, n + 1)
        .ok_or_else(|| Error::Invalid("cone C_t is not full-dimensional".into()))?;
    let incidence = rays
        .iter()
        .map(|r| normals.iter().map(|f| dot(f, r).is_zero()).collect())
        .collect();
    Ok(ConeDescription {
        ambient_dim: n,
        t: t.clone(),
        shift,
        rays,
        num_lifted: gens.len(),
        facet_normals: normals,
        incidence,
    })
}

/// A face of `P_t`, given by the rays of `C_t` lying on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyFace {
    pub dim: usize,
    pub rays: Vec<usize>,
    pub bounded: bool,
}

/// Faces of `P_t` sorted by dimension and then by ray-index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePoset {
    pub faces: Vec<PolyFace>,
}

impl FacePoset {
    /// Number of faces in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.faces.iter().map(|f| f.dim).max().map_or(0, |d| d + 1);
        let mut f = vec![0; top];
        for face in &self.faces {
            f[face.dim] += 1;
        }
        f
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// Every face of `C_t` not contained in the hyperplane at infinity, as a
/// face of `P_t`.
pub fn face_poset(cone: &ConeDescription) -> FacePoset {
    let nrays = cone.rays.len();
    let facet_sets: Vec<BitSet> = (0..cone.facet_normals.len())
        .map(|f| {
            let mut s = BitSet::new(nrays);
            for r in 0..nrays {
                if cone.incidence[r][f] {
                    s.insert(r);
                }
            }
            s
        })
        .collect();
    let lifted = {
        let mut s = BitSet::new(nrays);
        for r in 0..cone.num_lifted {
            s.insert(r);
        }
        s
    };
    let sets = enumerate_faces(BitSet::full(nrays), &facet_sets, |s| !s.intersection(&lifted).is_empty());
    let mut faces: Vec<PolyFace> = sets
        .into_iter()
        .map(|s| {
            let rays: Vec<usize> = s.iter().collect();
            let vecs: Vec<Vec<BigInt>> = rays.iter().map(|&r| cone.rays[r].clone()).collect();
            PolyFace {
                dim: rank_bigint(&vecs) - 1,
                bounded: rays.iter().all(|&r| !cone.is_unit_ray(r)),
                rays,
            }
        })
        .collect();
    faces.sort();
    FacePoset { faces }
}

/// All intersections of facet ray-sets reachable from `top`, restricted to
/// sets accepted by `keep` (which must be closed upward).
fn enumerate_faces(top: BitSet, facet_sets: &[BitSet], keep: impl Fn(&BitSet) -> bool) -> Vec<BitSet> {
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut queue = VecDeque::new();
    let top = top.canonical();
    if keep(&top) {
        seen.insert(top.clone());
        queue.push_back(top);
    }
    while let Some(face) = queue.pop_front() {
        for fs in facet_sets {
            if face.is_subset(fs) {
                continue;
            }
            let sub = face.intersection(fs).canonical();
            if keep(&sub) && seen.insert(sub.clone()) {
                queue.push_back(sub);
            }
        }
    }
    seen.into_iter().collect()
}

/// Restriction to bounded faces: the combinatorics of the hull complex.
pub fn bounded_faces(poset: &FacePoset) -> FacePoset {
    FacePoset {
        faces: poset.faces.iter().filter(|f| f.bounded).cloned().collect(),
    }
}

/// Bounded faces of `P_t` for the generating set at the default `t`.
pub fn hull_faces(gens: &GeneratorSet, t: Option<&BigInt>) -> Result<FacePoset> {
    let t = t.cloned().unwrap_or_else(|| choose_t(gens.ambient_dim()));
    Ok(bounded_faces(&face_poset(&build_cone(gens, &t)?)))
}

/// Recomputes the face poset at `t = (n+1)!+1` and `(n+1)!+2` and compares
/// the ray-index sets.
pub fn t_independence_check(gens: &GeneratorSet) -> Result<bool> {
    let t0 = choose_t(gens.ambient_dim());
    let t1 = &t0 + 1;
    Ok(face_poset(&build_cone(gens, &t0)?) == face_poset(&build_cone(gens, &t1)?))
}

/// Bounded faces of `conv{t^p : p in points} + R^n_+` that contain
/// `points[0]`, computed from the tangent cone at that vertex. Each face is
/// returned as a sorted list of point indices (always including 0) together
/// with its dimension.
///
/// Assumes `points[0]` is a vertex and no point is dominated by another.
pub fn bounded_faces_at_vertex(points: &[ExponentVector], t: &BigInt) -> Result<Vec<(Vec<usize>, usize)>> {
    let Some(apex) = points.first() else {
        return Err(Error::EmptyGenerators);
    };
    let n = apex.dim();
    let shift: Vec<i64> = (0..n)
        .map(|i| points.iter().map(|p| -p[i]).max().unwrap().max(0))
        .collect();
    let apex_lift: Vec<BigInt> = (0..n).map(|i| pow_int(t, apex[i] + shift[i])).collect();
    let mut gens: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| (0..n).map(|i| pow_int(t, p[i] + shift[i]) - &apex_lift[i]).collect())
        .collect();
    let num_points = gens.len();
    for i in 0..n {
        gens.push((0..n).map(|j| BigInt::from((i == j) as i32)).collect());
    }
    let normals = facet_normals(&gens, n)
        .ok_or_else(|| Error::Invalid("tangent cone is not full-dimensional".into()))?;
    let facet_sets: Vec<BitSet> = normals
        .iter()
        .map(|f| {
            let mut s = BitSet::new(gens.len());
            for (r, g) in gens.iter().enumerate() {
                if dot(f, g).is_zero() {
                    s.insert(r);
                }
            }
            s
        })
        .collect();
    let units = {
        let mut s = BitSet::new(gens.len());
        for r in num_points..gens.len() {
            s.insert(r);
        }
        s
    };
    // keep faces containing a unit ray only while descending; bounded ones
    // are exactly those without unit rays
    let sets = enumerate_faces(BitSet::full(gens.len()), &facet_sets, |_| true);
    let mut out: BTreeSet<(Vec<usize>, usize)> = BTreeSet::new();
    for s in sets {
        if !s.intersection(&units).is_empty() {
            continue;
        }
        let rays: Vec<Vec<BigInt>> = s.iter().map(|r| gens[r].clone()).collect();
        let mut face = vec![0];
        face.extend(s.iter().map(|r| r + 1));
        out.insert((face, rank_bigint(&rays)));
    }
    debug_assert!(gens.iter().all(|g| g.iter().any(|x| !x.is_zero())));
    debug_assert!(normals.iter().all(|f| gens.iter().all(|g| !dot(f, g).is_negative())));
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn gens(n: usize, rows: &[&[i64]]) -> GeneratorSet {
        GeneratorSet::from_rows(n, rows).unwrap()
    }

    #[test]
    fn t_choices() {
        assert_eq!(choose_t(3), BigInt::from(25));
        assert_eq!(choose_t(1), BigInt::from(3));
        assert_eq!(choose_t(5), BigInt::from(721));
    }

    #[test]
    fn lift_examples() {
        let t = BigRational::from_i64(25).unwrap();
        let l = lift(&ExponentVector::from([2, 1, 0]), &t);
        assert_eq!(l, vec![625, 25, 1].into_iter().map(|x| BigRational::from_i64(x).unwrap()).collect::<Vec<_>>());
        let t3 = BigRational::from_i64(3).unwrap();
        let l = lift(&ExponentVector::from([-1, 1]), &t3);
        assert_eq!(l[0], BigRational::new(1.into(), 3.into()));
        assert_eq!(l[1], BigRational::from_i64(3).unwrap());
        let z = lift(&ExponentVector::zero(3), &t);
        assert!(z.iter().all(|x| x.is_one()));
    }

    #[test]
    fn one_dimensional_single_generator() {
        let g = gens(1, &[&[0]]);
        let cone = build_cone(&g, &choose_t(1)).unwrap();
        assert_eq!(cone.rays.len(), 2);
        assert_eq!(cone.facet_normals.len(), 2);
        let poset = face_poset(&cone);
        assert_eq!(poset.faces.len(), 2);
        assert_eq!(poset.faces[0], PolyFace { dim: 0, rays: vec![0], bounded: true });
        assert_eq!(poset.faces[1], PolyFace { dim: 1, rays: vec![0, 1], bounded: false });
        assert_eq!(bounded_faces(&poset).faces.len(), 1);
    }

    #[test]
    fn two_variables_segment() {
        let g = gens(2, &[&[1, 0], &[0, 1]]);
        let cone = build_cone(&g, &choose_t(2)).unwrap();
        // the two lifted points and both unit rays are extreme; 4 facets
        assert_eq!(cone.facet_normals.len(), 4);
        for r in 0..cone.rays.len() {
            assert!(cone.incidence[r].iter().any(|&b| b));
        }
        let b = bounded_faces(&face_poset(&cone));
        assert_eq!(b.f_vector(), vec![2, 1]);
    }

    #[test]
    fn normals_are_inner_and_primitive() {
        let g = gens(3, &[&[2, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 2]]);
        let cone = build_cone(&g, &choose_t(3)).unwrap();
        for f in &cone.facet_normals {
            assert!(cone.rays.iter().all(|r| !dot(f, r).is_negative()));
            let g = f.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
            assert!(g.is_one());
        }
    }

    #[test]
    fn example_16_bounded_complex() {
        let g = gens(3, &[&[2, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 2]]);
        let b = hull_faces(&g, None).unwrap();
        assert_eq!(b.f_vector(), vec![4, 5, 2]);
        assert!(t_independence_check(&g).unwrap());
    }

    #[test]
    fn negative_exponents_are_shifted() {
        let g = gens(2, &[&[-1, 1], &[1, -1]]);
        let cone = build_cone(&g, &choose_t(2)).unwrap();
        assert_eq!(cone.shift, ExponentVector::from([1, 1]));
        assert_eq!(bounded_faces(&face_poset(&cone)).f_vector(), vec![2, 1]);
    }

    #[test]
    fn guardrails() {
        let g = GeneratorSet::new(9, vec![ExponentVector::zero(9)]).unwrap();
        assert!(matches!(build_cone(&g, &choose_t(9)), Err(Error::TooLarge(_))));
        let e = GeneratorSet::new(2, vec![]).unwrap();
        assert!(matches!(build_cone(&e, &choose_t(2)), Err(Error::EmptyGenerators)));
    }

    #[test]
    fn vertex_cone_agrees_with_full_hull() {
        let g = gens(3, &[&[2, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 2]]);
        let full = hull_faces(&g, None).unwrap();
        for v in 0..g.len() {
            // reorder so that v comes first
            let mut order = vec![v];
            order.extend((0..g.len()).filter(|&i| i != v));
            let pts: Vec<ExponentVector> = order.iter().map(|&i| g.gens()[i].clone()).collect();
            let local = bounded_faces_at_vertex(&pts, &choose_t(3)).unwrap();
            let mut local: Vec<(Vec<usize>, usize)> = local
                .into_iter()
                .map(|(f, d)| {
                    let mut f: Vec<usize> = f.into_iter().map(|i| order[i]).collect();
                    f.sort();
                    (f, d)
                })
                .collect();
            local.sort();
            let mut expect: Vec<(Vec<usize>, usize)> =
                full.faces.iter().filter(|f| f.rays.contains(&v)).map(|f| (f.rays.clone(), f.dim)).collect();
            expect.sort();
            assert_eq!(local, expect);
        }
    }
}
