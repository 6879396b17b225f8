//! The `L`-equivariant cellular complex of the hull of `M_L`, its quotient
//! `pi` resolving `S / I_L`, and its expansion over `S` on finite windows.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::local_hull::{orbit_representatives, LatticeFace, LocalHull};
use super::LatticeData;
use crate::complex::LabeledCellComplex;
use crate::error::{Error, Result};
use crate::homology::{homology_ranks, ChainComplex};
use crate::linalg::{rank, Field};
use crate::monomial::ExponentVector;
use crate::resolution::{BettiTable, Entry, FreeComplex};

/// A term `coeff * x^exponent * z^shift` of a differential over `S[L]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqEntry {
    pub row: usize,
    pub col: usize,
    pub coeff: i64,
    pub exponent: ExponentVector,
    /// Lattice element: the facet is the row's representative moved by it.
    pub shift: ExponentVector,
}

/// Free `S[L]`-complex with one generator per orbit of cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantFreeComplex {
    pub ambient_dim: usize,
    /// Orbit representatives by homological degree.
    pub generators: Vec<Vec<LatticeFace>>,
    pub differentials: Vec<Vec<EqEntry>>,
}

/// A `Z^n / L`-graded free `S`-complex; generator degrees are any vectors
/// in the coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientFreeComplex {
    pub ambient_dim: usize,
    pub degrees: Vec<Vec<ExponentVector>>,
    pub differentials: Vec<Vec<Entry>>,
}

/// All cells of the closed star of `0`: faces at `0` and their faces,
/// which are translates of faces at `0`.
fn closed_star(hull: &LocalHull) -> BTreeSet<LatticeFace> {
    let mut star = BTreeSet::new();
    for f in &hull.faces {
        let set: BTreeSet<&ExponentVector> = f.vertices.iter().collect();
        for v in &f.vertices {
            for g in &hull.faces {
                if g.vertices.len() > f.vertices.len() {
                    continue;
                }
                let moved = g.translate(v);
                if moved.vertices.iter().all(|p| set.contains(p)) {
                    star.insert(moved);
                }
            }
        }
    }
    star
}

/// The equivariant complex: representatives with signs read from the
/// closed star of `0`, whose vertices are numbered in lexicographic order so
/// that the canonical signs are invariant under translation.
pub fn equivariant_complex(hull: &LocalHull, lattice: &LatticeData) -> Result<EquivariantFreeComplex> {
    let n = lattice.ambient_dim();
    let star = closed_star(hull);
    let points: Vec<ExponentVector> =
        star.iter().flat_map(|f| f.vertices.iter().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
    let id: HashMap<&ExponentVector, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let cells: Vec<(Vec<usize>, usize)> =
        star.iter().map(|f| (f.vertices.iter().map(|p| id[p]).collect(), f.dim)).collect();
    let x = LabeledCellComplex::from_cells(n, points.clone(), cells)?;

    let reps = orbit_representatives(hull);
    let top = reps.iter().map(|r| r.dim + 1).max().unwrap_or(0);
    let mut generators: Vec<Vec<LatticeFace>> = vec![Vec::new(); top];
    for r in reps {
        generators[r.dim].push(r);
    }
    let index: Vec<HashMap<Vec<ExponentVector>, usize>> = generators
        .iter()
        .map(|g| g.iter().enumerate().map(|(i, f)| (f.vertices.clone(), i)).collect())
        .collect();
    let mut differentials = vec![Vec::new(); top];
    for d in 1..top {
        for (col, rep) in generators[d].iter().enumerate() {
            let ids: Vec<usize> = rep.vertices.iter().map(|p| id[p]).collect();
            let cell = x.find(&ids).ok_or_else(|| Error::NotExact("representative missing from star".into()))?;
            for &(f, s) in &x.cell(cell).facets {
                let facet = LatticeFace::new(x.cell(f).vertices.iter().map(|&v| points[v].clone()).collect(), d - 1);
                let (frep, shift) = facet.orbit_representative();
                let row = *index[d - 1]
                    .get(&frep.vertices)
                    .ok_or_else(|| Error::NotExact(format!("facet orbit of {:?} has no representative", frep.vertices)))?;
                differentials[d].push(EqEntry {
                    row,
                    col,
                    coeff: s as i64,
                    exponent: &rep.label - &facet.label,
                    shift,
                });
            }
        }
    }
    Ok(EquivariantFreeComplex { ambient_dim: n, generators, differentials })
}

impl EquivariantFreeComplex {
    pub fn ranks(&self) -> Vec<usize> {
        self.generators.iter().map(Vec::len).collect()
    }

    fn degree(&self, i: usize, j: usize) -> &ExponentVector {
        &self.generators[i][j].label
    }

    /// Every term satisfies `deg(col) = deg(row) + exponent + shift` with a
    /// nonnegative exponent and a lattice shift.
    pub fn is_homogeneous(&self, lattice: &LatticeData) -> bool {
        self.differentials.iter().enumerate().skip(1).all(|(i, d)| {
            d.iter().all(|e| {
                e.exponent.is_nonnegative()
                    && lattice.contains(&e.shift)
                    && &(self.degree(i - 1, e.row) + &e.exponent) + &e.shift == *self.degree(i, e.col)
            })
        })
    }

    /// Symbolic `d o d = 0` over `S[L]`.
    pub fn is_complex(&self) -> bool {
        for i in 2..self.differentials.len() {
            let mut lower: HashMap<usize, Vec<&EqEntry>> = HashMap::new();
            for e in &self.differentials[i - 1] {
                lower.entry(e.col).or_default().push(e);
            }
            let mut acc: HashMap<(usize, usize, ExponentVector, ExponentVector), i64> = HashMap::new();
            for e in &self.differentials[i] {
                for f in lower.get(&e.row).into_iter().flatten() {
                    *acc.entry((e.col, f.row, &e.exponent + &f.exponent, &e.shift + &f.shift)).or_default() +=
                        e.coeff * f.coeff;
                }
            }
            if acc.values().any(|&c| c != 0) {
                return false;
            }
        }
        true
    }

    /// No two terms of a differential share row, column and shift, i.e.
    /// distinct facets of a cell are distinct translates.
    pub fn terms_are_distinct(&self) -> bool {
        self.differentials.iter().all(|d| {
            let mut seen = BTreeSet::new();
            d.iter().all(|e| seen.insert((e.row, e.col, e.shift.clone())))
        })
    }

    /// `pi`: forget the lattice shifts.
    pub fn pi(&self) -> QuotientFreeComplex {
        QuotientFreeComplex {
            ambient_dim: self.ambient_dim,
            degrees: self.generators.iter().map(|g| g.iter().map(|f| f.label.clone()).collect()).collect(),
            differentials: self
                .differentials
                .iter()
                .map(|d| {
                    d.iter()
                        .map(|e| Entry { row: e.row, col: e.col, coeff: e.coeff, exponent: e.exponent.clone() })
                        .collect()
                })
                .collect(),
        }
    }

    /// The `S`-free complex on generators `(g, b)`, `b` in `L`, with degree
    /// `deg(g) + b <= hi`; this is `F_X` for the finite subcomplex
    /// `X_{<= hi}`.
    pub fn unroll(&self, lattice: &LatticeData, hi: &ExponentVector) -> FreeComplex {
        let mut degrees: Vec<Vec<ExponentVector>> = Vec::new();
        let mut pos: Vec<HashMap<(usize, ExponentVector), usize>> = Vec::new();
        for gens in &self.generators {
            let mut degs = Vec::new();
            let mut p = HashMap::new();
            for (j, g) in gens.iter().enumerate() {
                let room = hi - &g.label;
                for f in lattice.fiber(&room) {
                    let b = &room - &f;
                    p.insert((j, b.clone()), degs.len());
                    degs.push(&g.label + &b);
                }
            }
            degrees.push(degs);
            pos.push(p);
        }
        let mut differentials = vec![Vec::new(); self.generators.len()];
        for i in 1..self.generators.len() {
            for ((j, b), &col) in &pos[i] {
                for e in self.differentials[i].iter().filter(|e| e.col == *j) {
                    let row = pos[i - 1][&(e.row, b + &e.shift)];
                    differentials[i].push(Entry { row, col, coeff: e.coeff, exponent: e.exponent.clone() });
                }
            }
            differentials[i].sort_by_key(|e| (e.col, e.row));
        }
        FreeComplex { ambient_dim: self.ambient_dim, degrees, differentials }
    }

    /// First `b` (in the given order) for which `X_{<= b}` is not acyclic.
    pub fn first_nonacyclic_window(
        &self,
        lattice: &LatticeData,
        bs: &[ExponentVector],
        field: Field,
    ) -> Option<ExponentVector> {
        bs.iter()
            .find(|b| !homology_ranks(&self.unroll(lattice, b).strand(b, field)).is_zero())
            .cloned()
    }
}

impl QuotientFreeComplex {
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    fn as_free_complex(&self) -> FreeComplex {
        FreeComplex {
            ambient_dim: self.ambient_dim,
            degrees: self.degrees.clone(),
            differentials: self.differentials.clone(),
        }
    }

    /// Every term carries the row degree into the column coset.
    pub fn is_homogeneous(&self, lattice: &LatticeData) -> bool {
        self.differentials.iter().enumerate().skip(1).all(|(i, d)| {
            d.iter().all(|e| {
                e.exponent.is_nonnegative()
                    && lattice.same_coset(&(&self.degrees[i - 1][e.row] + &e.exponent), &self.degrees[i][e.col])
            })
        })
    }

    pub fn is_complex(&self) -> bool {
        self.as_free_complex().is_complex()
    }

    /// The coset-`alpha` strand augmented by `F_0 -> (S / I_L)_alpha`; basis
    /// of `F_i` is `(g, u)` with `x^u` in the fiber of `alpha - deg g`.
    pub fn strand(&self, lattice: &LatticeData, alpha: &ExponentVector, field: Field) -> ChainComplex {
        let mut pos: Vec<HashMap<(usize, ExponentVector), usize>> = Vec::new();
        let mut dims = vec![(!lattice.fiber(alpha).is_empty()) as usize];
        for degs in &self.degrees {
            let mut p = HashMap::new();
            for (j, d) in degs.iter().enumerate() {
                for u in lattice.fiber(&(alpha - d)) {
                    let k = p.len();
                    p.insert((j, u), k);
                }
            }
            dims.push(p.len());
            pos.push(p);
        }
        let mut boundaries: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
        boundaries.push(vec![vec![1; dims.get(1).copied().unwrap_or(0)]; dims[0]]);
        for i in 1..self.degrees.len() {
            let mut m = vec![vec![0i64; dims[i + 1]]; dims[i]];
            for ((j, u), &c) in &pos[i] {
                for e in self.differentials[i].iter().filter(|e| e.col == *j) {
                    let r = pos[i - 1][&(e.row, u + &e.exponent)];
                    m[r][c] += e.coeff;
                }
            }
            boundaries.push(m);
        }
        ChainComplex { field, min_degree: -1, dims, boundaries }
    }

    pub fn is_exact_at(&self, lattice: &LatticeData, alpha: &ExponentVector, field: Field) -> bool {
        homology_ranks(&self.strand(lattice, alpha, field)).is_zero()
    }

    /// Sum of the constant terms at each position.
    fn constant_part(&self, i: usize) -> BTreeMap<(usize, usize), i64> {
        let mut m = BTreeMap::new();
        for e in &self.differentials[i] {
            if e.exponent.is_zero() {
                *m.entry((e.row, e.col)).or_insert(0) += e.coeff;
            }
        }
        m.retain(|_, v| *v != 0);
        m
    }

    /// No differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        (1..self.differentials.len()).all(|i| self.constant_part(i).is_empty())
    }

    /// Smallest nonnegative member of the coset, used to name it.
    pub fn coset_name(lattice: &LatticeData, a: &ExponentVector) -> ExponentVector {
        lattice.fiber(a).into_iter().next().unwrap_or_else(|| lattice.canonical(a))
    }

    /// Minimal Betti numbers of the resolved module: homology of the
    /// complex reduced modulo the variables, per coset.
    pub fn betti(&self, lattice: &LatticeData, field: Field) -> BettiTable {
        let keys: Vec<Vec<ExponentVector>> = self
            .degrees
            .iter()
            .map(|degs| degs.iter().map(|d| lattice.canonical(d)).collect())
            .collect();
        let mut cosets: BTreeMap<ExponentVector, ExponentVector> = BTreeMap::new();
        for (degs, ks) in self.degrees.iter().zip(&keys) {
            for (d, k) in degs.iter().zip(ks) {
                cosets.entry(k.clone()).or_insert_with(|| Self::coset_name(lattice, d));
            }
        }
        let ranks: Vec<BTreeMap<ExponentVector, usize>> = (0..self.degrees.len())
            .map(|i| {
                if i == 0 {
                    return BTreeMap::new();
                }
                let c = self.constant_part(i);
                let mut by_coset: BTreeMap<ExponentVector, Vec<((usize, usize), i64)>> = BTreeMap::new();
                for ((r, col), v) in c {
                    by_coset.entry(keys[i][col].clone()).or_default().push(((r, col), v));
                }
                by_coset
                    .into_iter()
                    .map(|(k, entries)| {
                        let rows: BTreeSet<usize> = entries.iter().map(|((r, _), _)| *r).collect();
                        let cols: BTreeSet<usize> = entries.iter().map(|((_, c), _)| *c).collect();
                        let ri: HashMap<usize, usize> = rows.iter().enumerate().map(|(a, &b)| (b, a)).collect();
                        let ci: HashMap<usize, usize> = cols.iter().enumerate().map(|(a, &b)| (b, a)).collect();
                        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
                        for ((r, c), v) in entries {
                            m[ri[&r]][ci[&c]] = v;
                        }
                        (k, rank(&m, field))
                    })
                    .collect()
            })
            .collect();
        let mut table = BettiTable::new();
        for (i, ks) in keys.iter().enumerate() {
            let mut count: BTreeMap<&ExponentVector, usize> = BTreeMap::new();
            for k in ks {
                *count.entry(k).or_default() += 1;
            }
            for (k, c) in count {
                let out = ranks[i].get(k).copied().unwrap_or(0);
                let inc = ranks.get(i + 1).and_then(|r| r.get(k)).copied().unwrap_or(0);
                table.set(i, cosets[k].clone(), c - out - inc);
            }
        }
        table
    }

    /// Text export: per differential, `row col coeff exponent` lines.
    pub fn to_text(&self) -> String {
        self.as_free_complex().to_text()
    }
}

/// Builds the equivariant hull complex from a stable local hull, checks
/// homogeneity and `d o d = 0`, and certifies exactness on the cosets of
/// the representative degrees and on the windows `X_{<= a_F}` for every
/// face `F` at `0`. Returns the equivariant complex and its image under `pi`.
pub fn quotient_resolution(
    hull: &LocalHull,
    lattice: &LatticeData,
    field: Field,
) -> Result<(EquivariantFreeComplex, QuotientFreeComplex)> {
    let eq = equivariant_complex(hull, lattice)?;
    if !eq.is_homogeneous(lattice) {
        return Err(Error::NotExact("equivariant complex is not homogeneous".into()));
    }
    if !eq.is_complex() {
        return Err(Error::NotExact("differentials do not compose to zero".into()));
    }
    let labels: Vec<ExponentVector> =
        hull.faces.iter().map(|f| f.label.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    if let Some(b) = eq.first_nonacyclic_window(lattice, &labels, field) {
        return Err(Error::NotExact(format!("window below {b} is not acyclic")));
    }
    let q = eq.pi();
    for degs in &q.degrees {
        for a in degs {
            if !q.is_exact_at(lattice, a, field) {
                return Err(Error::NotExact(format!("coset of {a} is not exact")));
            }
        }
    }
    Ok((eq, q))
}

#[cfg(test)]
mod tests {
    use super::super::local_hull::local_hull;
    use super::super::tests::{a2, rank_one};
    use super::*;

    #[test]
    fn a2_resolution() {
        let l = a2();
        let h = local_hull(&l, 3).unwrap();
        let (eq, q) = quotient_resolution(&h, &l, Field::Rational).unwrap();
        assert_eq!(eq.ranks(), vec![1, 3, 2]);
        assert!(eq.terms_are_distinct());
        assert!(q.is_homogeneous(&l) && q.is_complex());
        assert!(!q.is_minimal());
        assert_eq!(q.betti(&l, Field::Rational).totals(), vec![1, 2, 1]);
    }

    #[test]
    fn rank_one_binomial() {
        let l = rank_one();
        let h = local_hull(&l, 3).unwrap();
        let (_, q) = quotient_resolution(&h, &l, Field::Rational).unwrap();
        assert_eq!(q.ranks(), vec![1, 1]);
        let mut terms: Vec<(i64, Vec<i64>)> =
            q.differentials[1].iter().map(|e| (e.coeff, e.exponent.coords().to_vec())).collect();
        terms.sort();
        // y^3 - x^2
        assert_eq!(terms, vec![(-1, vec![2, 0]), (1, vec![0, 3])]);
        assert!(q.is_minimal());
    }

    #[test]
    fn unrolled_window() {
        let l = a2();
        let h = local_hull(&l, 3).unwrap();
        let eq = equivariant_complex(&h, &l).unwrap();
        let hi = ExponentVector::from([1, 1, 0]);
        let f = eq.unroll(&l, &hi);
        // the six lattice points below (1,1,0) form a side-2 triangle of the
        // A2 tiling: 6 vertices, 9 edges, 4 triangles
        assert_eq!(f.ranks(), vec![6, 9, 4]);
        assert!(f.is_homogeneous() && f.is_complex());
        assert!(homology_ranks(&f.strand(&hi, Field::Rational)).is_zero());
        let empty = eq.unroll(&l, &ExponentVector::from([-1, 0, 0]));
        assert!(empty.ranks().iter().all(|&r| r == 0));
    }

    #[test]
    fn star_signs_are_translation_invariant() {
        let l = a2();
        let h = local_hull(&l, 3).unwrap();
        let star: Vec<LatticeFace> = closed_star(&h).into_iter().collect();
        let points: Vec<ExponentVector> =
            star.iter().flat_map(|f| f.vertices.iter().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
        let id: HashMap<&ExponentVector, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let x = LabeledCellComplex::from_cells(
            3,
            points.clone(),
            star.iter().map(|f| (f.vertices.iter().map(|p| id[p]).collect(), f.dim)).collect(),
        )
        .unwrap();
        let lookup = |f: &LatticeFace| -> Option<usize> {
            let ids: Option<Vec<usize>> = f.vertices.iter().map(|p| id.get(p).copied()).collect();
            ids.and_then(|ids| x.find(&ids))
        };
        let mut compared = 0;
        for f in &star {
            let i = lookup(f).unwrap();
            for &(g, s) in &x.cell(i).facets {
                let gf = LatticeFace::new(x.cell(g).vertices.iter().map(|&v| points[v].clone()).collect(), f.dim - 1);
                for v in &f.vertices {
                    let (ft, gt) = (f.translate(&-v), gf.translate(&-v));
                    if let (Some(a), Some(b)) = (lookup(&ft), lookup(&gt)) {
                        assert_eq!(x.incidence(a, b), s);
                        compared += 1;
                    }
                }
            }
        }
        assert!(compared > 0);
    }
}
