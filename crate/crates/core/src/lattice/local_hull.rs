//! Faces of the hull of the lattice module that contain the vertex `0`,
//! computed on growing finite windows of lattice points.

use std::collections::BTreeSet;

use super::LatticeData;
use crate::error::{Error, Result};
use crate::geometry::hull::{bounded_faces_at_vertex, check_guardrails, choose_t};
use crate::monomial::{join_all, ExponentVector};

/// Windows stop doubling after this many multiples of the initial radius.
pub const RADIUS_CAP_FACTOR: i64 = 64;
/// Largest number of window points handed to the convex hull after pruning.
pub const MAX_WINDOW_POINTS: usize = 4000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeFace {
    pub dim: usize,
    /// Lattice points, sorted lexicographically.
    pub vertices: Vec<ExponentVector>,
    pub label: ExponentVector,
}

impl LatticeFace {
    pub fn new(mut vertices: Vec<ExponentVector>, dim: usize) -> Self {
        vertices.sort();
        let label = join_all(vertices.iter()).expect("face without vertices");
        LatticeFace { dim, vertices, label }
    }

    pub fn translate(&self, b: &ExponentVector) -> LatticeFace {
        LatticeFace {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v + b).collect(),
            label: &self.label + b,
        }
    }

    /// The lexicographically least translate containing `0`, and the shift
    /// `v` with `self = rep + v`.
    pub fn orbit_representative(&self) -> (LatticeFace, ExponentVector) {
        self.vertices
            .iter()
            .map(|v| (self.translate(&-v), v.clone()))
            .min_by(|a, b| a.0.vertices.cmp(&b.0.vertices))
            .unwrap()
    }
}

/// The faces at `0` of a stable window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalHull {
    /// Box radius at which the faces stabilized.
    pub radius: i64,
    /// Faces containing `0`, sorted by dimension and vertex list.
    pub faces: Vec<LatticeFace>,
}

impl LocalHull {
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.faces.iter().map(|f| f.dim + 1).max().unwrap_or(0)];
        for face in &self.faces {
            f[face.dim] += 1;
        }
        f
    }

    /// Nonzero endpoints of the edges at `0`.
    pub fn edge_directions(&self) -> Vec<ExponentVector> {
        let mut e: Vec<ExponentVector> = self
            .faces
            .iter()
            .filter(|f| f.dim == 1)
            .flat_map(|f| f.vertices.iter().filter(|v| !v.is_zero()).cloned())
            .collect();
        e.sort();
        e
    }

    fn max_vertex_norm(&self) -> i64 {
        self.faces.iter().flat_map(|f| f.vertices.iter()).map(|v| v.max_norm()).max().unwrap_or(0)
    }
}

/// Window points `a` that lie on no face with `0`: some window point sits
/// strictly below `a+` in every coordinate, so every face containing `0`
/// and `a` would have a lattice point strictly below its label.
fn prune(points: Vec<ExponentVector>) -> Vec<ExponentVector> {
    let keep: Vec<bool> = points
        .iter()
        .map(|a| {
            let bound = a.positive_part();
            !points.iter().any(|c| c.lt_all(&bound))
        })
        .collect();
    points.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect()
}

fn faces_at_zero(lattice: &LatticeData, radius: i64) -> Result<Vec<LatticeFace>> {
    let n = lattice.ambient_dim();
    let pts = prune(lattice.points_in_box(radius).into_iter().filter(|p| !p.is_zero()).collect());
    if pts.len() > MAX_WINDOW_POINTS {
        return Err(Error::TooLarge(format!("{} window points at radius {radius}", pts.len())));
    }
    let mut all = vec![ExponentVector::zero(n)];
    all.extend(pts);
    let faces = bounded_faces_at_vertex(&all, &choose_t(n))?;
    let mut out: Vec<LatticeFace> = faces
        .into_iter()
        .map(|(idx, dim)| LatticeFace::new(idx.into_iter().map(|i| all[i].clone()).collect(), dim))
        .collect();
    out.sort();
    Ok(out)
}

/// Doubles the window radius from `initial_radius` until two consecutive
/// radii give the same faces at `0` and every vertex of those faces has
/// max-norm below half the radius.
pub fn local_hull(lattice: &LatticeData, initial_radius: i64) -> Result<LocalHull> {
    check_guardrails(lattice.ambient_dim(), 0)?;
    let r0 = initial_radius.max(1);
    let mut radius = r0;
    let mut prev: Option<Vec<LatticeFace>> = None;
    loop {
        let faces = faces_at_zero(lattice, radius)?;
        let hull = LocalHull { radius, faces };
        if prev.as_ref() == Some(&hull.faces) && 2 * hull.max_vertex_norm() < radius {
            return Ok(hull);
        }
        if radius >= r0 * RADIUS_CAP_FACTOR {
            return Err(Error::NoStabilization(radius));
        }
        prev = Some(hull.faces);
        radius *= 2;
    }
}

/// One face per lattice orbit: the lexicographically least translate
/// containing `0`. Sorted by dimension and vertex list.
pub fn orbit_representatives(hull: &LocalHull) -> Vec<LatticeFace> {
    let reps: BTreeSet<LatticeFace> = hull.faces.iter().map(|f| f.orbit_representative().0).collect();
    reps.into_iter().collect()
}

/// Every edge at `0` points along a vector of `graver`.
pub fn edges_are_primitive_check(hull: &LocalHull, graver: &[ExponentVector]) -> bool {
    let g: BTreeSet<&ExponentVector> = graver.iter().collect();
    hull.edge_directions().iter().all(|e| g.contains(e))
}

#[cfg(test)]
mod tests {
    use super::super::graver::graver_basis;
    use super::super::tests::{a2, rank_one};
    use super::*;

    fn orbit_counts(h: &LocalHull) -> Vec<usize> {
        let reps = orbit_representatives(h);
        let mut c = vec![0; h.f_vector().len()];
        for r in reps {
            c[r.dim] += 1;
        }
        c
    }

    #[test]
    fn a2_local_hull() {
        let l = a2();
        let h = local_hull(&l, 3).unwrap();
        assert_eq!(h.f_vector(), vec![1, 6, 6]);
        assert_eq!(h.edge_directions(), graver_basis(&l));
        assert!(edges_are_primitive_check(&h, &graver_basis(&l)));
        assert_eq!(orbit_counts(&h), vec![1, 3, 2]);
    }

    #[test]
    fn rank_one_local_hull() {
        let l = rank_one();
        let h = local_hull(&l, 3).unwrap();
        assert_eq!(h.f_vector(), vec![1, 2]);
        assert_eq!(orbit_counts(&h), vec![1, 1]);
        assert!(edges_are_primitive_check(&h, &graver_basis(&l)));
    }

    #[test]
    fn representatives_contain_zero() {
        let h = local_hull(&a2(), 3).unwrap();
        for r in orbit_representatives(&h) {
            assert!(r.vertices.contains(&ExponentVector::zero(3)));
            assert!(h.faces.contains(&r));
        }
    }

    #[test]
    fn pruning_keeps_graver_directions() {
        let l = a2();
        let pts: Vec<ExponentVector> = l.points_in_box(3).into_iter().filter(|p| !p.is_zero()).collect();
        let kept = prune(pts);
        for g in graver_basis(&l) {
            assert!(kept.contains(&g));
        }
        // (2,-1,-1) lies strictly below (3,0,0)
        assert!(!kept.contains(&ExponentVector::from([3, -3, 0])));
    }
}
