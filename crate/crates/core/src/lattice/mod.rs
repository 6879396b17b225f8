//! Pointed lattices `L` in `Z^n`, cosets `Z^n / L`, fibers, and the
//! resolutions of lattice ideals built from the hull of the lattice module.

mod equivariant;
mod graver;
mod local_hull;
mod taylor;

pub use equivariant::{equivariant_complex, quotient_resolution, EqEntry, EquivariantFreeComplex, QuotientFreeComplex};
pub use graver::{graver_basis, graver_brute_force, is_primitive};
pub use local_hull::{edges_are_primitive_check, local_hull, orbit_representatives, LatticeFace, LocalHull};
pub use taylor::{lattice_taylor, taylor_count_unrolled};

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::dd::cone_from_inequalities;
use crate::linalg::{hermite_normal_form, integer_kernel, nullspace_rational, rank, Field};
use crate::monomial::ExponentVector;

/// A pointed lattice with a Hermite basis and a strictly positive integer
/// functional vanishing on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeData {
    ambient_dim: usize,
    basis: Vec<ExponentVector>,
    pivots: Vec<usize>,
    functional: Vec<i64>,
}

/// Outcome of [`pointedness_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pointedness {
    /// A strictly positive functional vanishing on the lattice.
    Pointed(Vec<i64>),
    /// A nonzero nonnegative lattice vector.
    NotPointed(ExponentVector),
}

/// Decides whether `L = span_Z(basis)` meets the nonnegative orthant only in
/// `0`. The witness is an integer combination of the basis.
pub fn pointedness_check(basis: &[ExponentVector], n: usize) -> Pointedness {
    let r = basis.len();
    // lambda with lambda . B >= 0: one inequality per coordinate
    let cols: Vec<Vec<BigInt>> = (0..n).map(|j| basis.iter().map(|b| BigInt::from(b[j])).collect()).collect();
    let cone = cone_from_inequalities(&cols, r);
    let candidates = cone.lineality.iter().chain(cone.rays.iter());
    for lambda in candidates {
        let v: Vec<BigInt> = (0..n).map(|j| (0..r).map(|k| &lambda[k] * basis[k][j]).sum()).collect();
        if v.iter().any(|x| !x.is_zero()) {
            let v = if v.iter().any(|x| x.is_negative()) { v.into_iter().map(|x| -x).collect() } else { v };
            return Pointedness::NotPointed(ExponentVector::new(v.iter().map(|x| x.to_i64().unwrap()).collect()));
        }
    }
    // sum of the extreme rays of L^perp meeting the orthant
    let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.coords().to_vec()).collect();
    let perp: Vec<Vec<BigInt>> = if r == 0 {
        (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i32)).collect()).collect()
    } else {
        nullspace_rational(&rows, n)
    };
    let k = perp.len();
    let cols: Vec<Vec<BigInt>> = (0..n).map(|j| perp.iter().map(|p| p[j].clone()).collect()).collect();
    let cone = cone_from_inequalities(&cols, k);
    let mut w = vec![BigInt::zero(); n];
    for mu in &cone.rays {
        for (j, wj) in w.iter_mut().enumerate() {
            *wj += (0..k).map(|i| &mu[i] * &perp[i][j]).sum::<BigInt>();
        }
    }
    let w = crate::linalg::normalize_content(w);
    debug_assert!(w.iter().all(|x| x.is_positive()));
    Pointedness::Pointed(w.iter().map(|x| x.to_i64().unwrap()).collect())
}

impl LatticeData {
    /// The lattice spanned by linearly independent integer vectors.
    pub fn from_basis(n: usize, basis: Vec<ExponentVector>) -> Result<Self> {
        for b in &basis {
            if b.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: b.dim() });
            }
        }
        let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.coords().to_vec()).collect();
        if rank(&rows, Field::Rational) != rows.len() {
            return Err(Error::Dependent);
        }
        Self::from_spanning_rows(n, rows)
    }

    /// `ker_Z(A)` for an integer matrix with `n` columns.
    pub fn from_kernel(a: &[Vec<i64>], n: usize) -> Result<Self> {
        for row in a {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
        }
        Self::from_spanning_rows(n, integer_kernel(a, n)?)
    }

    fn from_spanning_rows(n: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        let hnf = hermite_normal_form(&rows)?;
        let basis: Vec<ExponentVector> = hnf.into_iter().map(ExponentVector::new).collect();
        let pivots = basis.iter().map(|b| b.iter().position(|&x| x != 0).unwrap()).collect();
        match pointedness_check(&basis, n) {
            Pointedness::NotPointed(v) => Err(Error::NotPointed(v.into_coords())),
            Pointedness::Pointed(functional) => Ok(LatticeData { ambient_dim: n, basis, pivots, functional }),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Hermite normal form basis.
    pub fn basis(&self) -> &[ExponentVector] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Strictly positive `w` with `w . v = 0` for all `v` in the lattice.
    pub fn functional(&self) -> &[i64] {
        &self.functional
    }

    pub fn weight(&self, v: &ExponentVector) -> i64 {
        v.iter().zip(&self.functional).map(|(a, w)| a * w).sum()
    }

    /// Canonical representative of `v + L`: the pivot coordinates of the
    /// Hermite basis are reduced into `[0, pivot)`.
    pub fn canonical(&self, v: &ExponentVector) -> ExponentVector {
        let mut c = v.coords().to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let q = c[p].div_euclid(b[p]);
            if q != 0 {
                for (x, y) in c.iter_mut().zip(b.iter()) {
                    *x -= q * y;
                }
            }
        }
        ExponentVector::new(c)
    }

    pub fn contains(&self, v: &ExponentVector) -> bool {
        self.canonical(v).is_zero()
    }

    pub fn same_coset(&self, a: &ExponentVector, b: &ExponentVector) -> bool {
        self.contains(&(a - b))
    }

    /// All nonnegative vectors in `alpha + L`, sorted.
    pub fn fiber(&self, alpha: &ExponentVector) -> Vec<ExponentVector> {
        let target = self.weight(alpha);
        let key = self.canonical(alpha);
        let mut out = Vec::new();
        if target < 0 {
            return out;
        }
        let mut cur = vec![0i64; self.ambient_dim];
        self.compositions(0, target, &mut cur, &mut |v| {
            let v = ExponentVector::new(v.to_vec());
            if self.canonical(&v) == key {
                out.push(v);
            }
        });
        out.sort();
        out
    }

    fn compositions(&self, i: usize, rest: i64, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        let w = self.functional[i];
        if i + 1 == self.ambient_dim {
            if rest % w == 0 {
                cur[i] = rest / w;
                f(cur);
            }
            return;
        }
        for k in 0..=rest / w {
            cur[i] = k;
            self.compositions(i + 1, rest - k * w, cur, f);
        }
        cur[i] = 0;
    }

    /// Lattice points with every coordinate in `[-radius, radius]`, sorted.
    pub fn points_in_box(&self, radius: i64) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.ambient_dim];
        self.box_rec(0, radius, &mut cur, &mut out);
        out.sort();
        out
    }

    fn box_rec(&self, k: usize, radius: i64, cur: &mut Vec<i64>, out: &mut Vec<ExponentVector>) {
        // columns before the next pivot are final once rows 0..k are chosen
        let settled = self.pivots.get(k).copied().unwrap_or(self.ambient_dim);
        if cur[..settled].iter().any(|x| x.abs() > radius) {
            return;
        }
        if k == self.basis.len() {
            out.push(ExponentVector::new(cur.clone()));
            return;
        }
        let b = &self.basis[k];
        let p = self.pivots[k];
        let h = b[p];
        let lo = (-radius - cur[p]).div_euclid(h) + ((-radius - cur[p]).rem_euclid(h) != 0) as i64;
        let hi = (radius - cur[p]).div_euclid(h);
        for lambda in lo..=hi {
            for (x, y) in cur.iter_mut().zip(b.iter()) {
                *x += lambda * y;
            }
            self.box_rec(k + 1, radius, cur, out);
            for (x, y) in cur.iter_mut().zip(b.iter()) {
                *x -= lambda * y;
            }
        }
    }

    /// Cosets `beta` with `beta <= alpha` for some generator `alpha`, as
    /// canonical representatives of nonnegative vectors, sorted.
    pub fn order_ideal_closure(&self, generators: &[ExponentVector]) -> Vec<ExponentVector> {
        let mut seen: BTreeSet<ExponentVector> = BTreeSet::new();
        let mut reps: Vec<ExponentVector> = Vec::new();
        for a in generators {
            for f in self.fiber(a) {
                let mut cur = vec![0i64; self.ambient_dim];
                below(f.coords(), 0, &mut cur, &mut |g| {
                    let g = ExponentVector::new(g.to_vec());
                    if seen.insert(self.canonical(&g)) {
                        reps.push(g);
                    }
                });
            }
        }
        reps.sort();
        reps
    }

    /// Checks that the cosets of `q` form an order ideal of `N^n / L`.
    pub fn check_downward_closed(&self, q: &[ExponentVector]) -> Result<()> {
        let keys: BTreeSet<ExponentVector> = q.iter().map(|a| self.canonical(a)).collect();
        for a in q {
            let fiber = self.fiber(a);
            if fiber.is_empty() {
                return Err(Error::Invalid(format!("coset of {a} has no nonnegative member")));
            }
            for f in &fiber {
                for i in 0..self.ambient_dim {
                    if f[i] > 0 {
                        let g = f - &ExponentVector::unit(self.ambient_dim, i);
                        if !keys.contains(&self.canonical(&g)) {
                            return Err(Error::NotDownwardClosed(g.into_coords()));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn below(f: &[i64], i: usize, cur: &mut Vec<i64>, out: &mut impl FnMut(&[i64])) {
    if i == f.len() {
        out(cur);
        return;
    }
    for k in 0..=f[i] {
        cur[i] = k;
        below(f, i + 1, cur, out);
    }
}
