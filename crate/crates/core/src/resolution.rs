//! Cellular free complexes, the acyclicity criterion for resolutions, and
//! Betti numbers with two independent oracles.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};

use crate::complex::{LabeledCellComplex, OrderIdealSpec};
use crate::error::{Error, Result};
use crate::homology::{homology_ranks, reduced_homology, ChainComplex};
use crate::linalg::Field;
use crate::monomial::{ExponentVector, GeneratorSet};

/// One term `coeff * x^exponent` of a differential matrix entry. Several
/// terms may share a `(row, col)` position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub coeff: i64,
    pub exponent: ExponentVector,
}

/// A `Z^n`-graded complex of free `S`-modules `F_top -> ... -> F_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    pub ambient_dim: usize,
    /// Generator degrees of `F_i`.
    pub degrees: Vec<Vec<ExponentVector>>,
    /// `differentials[i]` maps `F_i` to `F_{i-1}`; `differentials[0]` is empty.
    pub differentials: Vec<Vec<Entry>>,
}

impl FreeComplex {
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    /// Every term has a nonnegative exponent carrying the row degree to the
    /// column degree.
    pub fn is_homogeneous(&self) -> bool {
        self.differentials.iter().enumerate().skip(1).all(|(i, d)| {
            d.iter().all(|e| {
                e.exponent.is_nonnegative()
                    && &self.degrees[i - 1][e.row] + &e.exponent == self.degrees[i][e.col]
            })
        })
    }

    /// Symbolic check that consecutive differentials compose to zero.
    pub fn is_complex(&self) -> bool {
        for i in 2..self.differentials.len() {
            let mut lower: HashMap<usize, Vec<&Entry>> = HashMap::new();
            for e in &self.differentials[i - 1] {
                lower.entry(e.col).or_default().push(e);
            }
            let mut acc: HashMap<(usize, usize, ExponentVector), i128> = HashMap::new();
            for e in &self.differentials[i] {
                for f in lower.get(&e.row).into_iter().flatten() {
                    *acc.entry((e.col, f.row, &e.exponent + &f.exponent)).or_default() +=
                        e.coeff as i128 * f.coeff as i128;
                }
            }
            if acc.values().any(|&c| c != 0) {
                return false;
            }
        }
        true
    }

    /// The degree-`b` strand augmented by `F_0 -> S_b`: basis elements are
    /// the generators of degree `<= b`, and the augmentation sends each
    /// generator of `F_0` to `1`.
    pub fn strand(&self, b: &ExponentVector, field: Field) -> ChainComplex {
        let mut pos: Vec<HashMap<usize, usize>> = Vec::new();
        let mut dims = vec![0usize];
        for degs in &self.degrees {
            let mut m = HashMap::new();
            for (j, d) in degs.iter().enumerate() {
                if d.le_all(b) {
                    m.insert(j, m.len());
                }
            }
            dims.push(m.len());
            pos.push(m);
        }
        dims[0] = (dims.get(1).copied().unwrap_or(0) > 0) as usize;
        let mut boundaries: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
        boundaries.push(vec![vec![1; dims[1]]; dims[0]]);
        for i in 1..self.degrees.len() {
            let mut m = vec![vec![0i64; dims[i + 1]]; dims[i]];
            for e in &self.differentials[i] {
                if let (Some(&c), Some(&r)) = (pos[i].get(&e.col), pos[i - 1].get(&e.row)) {
                    m[r][c] += e.coeff;
                }
            }
            boundaries.push(m);
        }
        ChainComplex { field, min_degree: -1, dims, boundaries }
    }

    /// First degree among `degrees` where the augmented strand has homology.
    pub fn first_inexact_degree(&self, degrees: &[ExponentVector], field: Field) -> Option<ExponentVector> {
        degrees.iter().find(|b| !homology_ranks(&self.strand(b, field)).is_zero()).cloned()
    }

    /// Text export: for each differential, `# d_i` followed by lines
    /// `row col coeff exponent`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, d) in self.differentials.iter().enumerate().skip(1) {
            let _ = writeln!(out, "# d_{i}: {} <- {}", self.degrees[i - 1].len(), self.degrees[i].len());
            for e in d {
                let _ = writeln!(out, "{} {} {} {}", e.row, e.col, e.coeff, e.exponent);
            }
        }
        out
    }
}

/// `F_X`: one generator per nonempty cell in degree `a_F`, with
/// differential `epsilon(F, F') x^{a_F - a_F'}`.
pub fn cellular_free_complex(x: &LabeledCellComplex) -> FreeComplex {
    let top = x.dim().map_or(0, |d| d + 1);
    let mut degrees = vec![Vec::new(); top];
    let mut pos = vec![0usize; x.num_cells()];
    for (i, c) in x.cells().iter().enumerate() {
        pos[i] = degrees[c.dim].len();
        degrees[c.dim].push(c.label.clone());
    }
    let mut differentials = vec![Vec::new(); top];
    for (i, c) in x.cells().iter().enumerate() {
        for &(f, s) in &c.facets {
            differentials[c.dim].push(Entry {
                row: pos[f],
                col: pos[i],
                coeff: s as i64,
                exponent: &c.label - &x.cell(f).label,
            });
        }
    }
    FreeComplex { ambient_dim: x.ambient_dim(), degrees, differentials }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Resolution,
    /// `X_{<= witness}` is not acyclic, and no smaller lcm-lattice degree
    /// fails.
    Fails { witness: ExponentVector },
}

impl Verdict {
    pub fn is_resolution(&self) -> bool {
        matches!(self, Verdict::Resolution)
    }
}

fn vertex_labels_match(x: &LabeledCellComplex, gens: &GeneratorSet) -> Result<()> {
    if x.ambient_dim() != gens.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: gens.ambient_dim(), found: x.ambient_dim() });
    }
    let mut have: Vec<&ExponentVector> = x.cells_of_dim(0).map(|(_, c)| &c.label).collect();
    let min = gens.minimalize();
    let mut want: Vec<&ExponentVector> = min.gens().iter().collect();
    have.sort();
    want.sort();
    if have != want {
        return Err(Error::Invalid("vertex labels of the complex differ from the minimal generators".into()));
    }
    Ok(())
}

/// Checks that `X_{<= b}` is acyclic for every `b` in the lcm lattice.
/// On failure the witness is a minimal failing degree (lexicographically
/// first among minimal ones).
pub fn verify_resolution(x: &LabeledCellComplex, gens: &GeneratorSet, field: Field) -> Result<Verdict> {
    vertex_labels_match(x, gens)?;
    let failing: Vec<ExponentVector> = gens
        .minimalize()
        .lcm_lattice()
        .into_iter()
        .filter(|b| !reduced_homology(&x.subcomplex(&OrderIdealSpec::Below(b.clone())), field).is_zero())
        .collect();
    let minimal = failing
        .iter()
        .find(|b| !failing.iter().any(|c| c != *b && c.le_all(b)));
    Ok(match minimal {
        None => Verdict::Resolution,
        Some(b) => Verdict::Fails { witness: b.clone() },
    })
}

/// No cell shares its degree with one of its facets.
pub fn is_minimal(x: &LabeledCellComplex) -> bool {
    x.cells()
        .iter()
        .all(|c| c.facets.iter().all(|&(f, _)| x.cell(f).label != c.label))
}

/// Multigraded Betti numbers `beta_{i,b}`, zeros omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, ExponentVector), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, i: usize, b: ExponentVector, value: usize) {
        if value == 0 {
            self.entries.remove(&(i, b));
        } else {
            self.entries.insert((i, b), value);
        }
    }

    pub fn get(&self, i: usize, b: &ExponentVector) -> usize {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &ExponentVector, usize)> {
        self.entries.iter().map(|((i, b), v)| (*i, b, *v))
    }

    /// `sum_b beta_{i,b}` for each `i`.
    pub fn totals(&self) -> Vec<usize> {
        let mut t = Vec::new();
        for ((i, _), v) in &self.entries {
            if t.len() <= *i {
                t.resize(i + 1, 0);
            }
            t[*i] += v;
        }
        t
    }

    /// Degrees carrying some nonzero Betti number.
    pub fn support(&self) -> Vec<ExponentVector> {
        let mut s: Vec<ExponentVector> = self.entries.keys().map(|(_, b)| b.clone()).collect();
        s.sort();
        s.dedup();
        s
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b, v) in self.entries() {
            writeln!(f, "{i}  {b}  {v}")?;
        }
        Ok(())
    }
}

fn table_from_strict_subcomplexes(
    x: &LabeledCellComplex,
    degrees: Vec<ExponentVector>,
    field: Field,
) -> BettiTable {
    let mut t = BettiTable::new();
    for b in degrees {
        let h = reduced_homology(&x.subcomplex(&OrderIdealSpec::StrictlyBelow(b.clone())), field);
        for i in 0..=h.ranks.len() {
            t.set(i, b.clone(), h.get(i as i64 - 1));
        }
    }
    t
}

/// `beta_{i,b} = dim H~_{i-1}(X_{< b})` over the lcm lattice; refuses
/// complexes that do not support a resolution.
pub fn betti_numbers(x: &LabeledCellComplex, gens: &GeneratorSet, field: Field) -> Result<BettiTable> {
    if let Verdict::Fails { witness } = verify_resolution(x, gens, field)? {
        return Err(Error::NotAResolution(witness.into_coords()));
    }
    Ok(table_from_strict_subcomplexes(x, gens.minimalize().lcm_lattice(), field))
}

/// Betti numbers from the full Taylor simplex.
pub fn betti_taylor_oracle(gens: &GeneratorSet, field: Field) -> Result<BettiTable> {
    let min = gens.minimalize();
    let taylor = LabeledCellComplex::taylor(&min)?;
    Ok(table_from_strict_subcomplexes(&taylor, min.lcm_lattice(), field))
}

/// The complex `K_b = {sigma : some generator divides x^{b - sigma}}` on the
/// variables, as subsets of `0..n`.
pub fn hochster_complex(gens: &GeneratorSet, b: &ExponentVector) -> Result<Vec<Vec<usize>>> {
    let n = gens.ambient_dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.dim() });
    }
    if n > 20 {
        return Err(Error::TooLarge(format!("{n} variables")));
    }
    Ok((0u64..(1 << n))
        .filter(|&mask| {
            let shifted = ExponentVector::new((0..n).map(|i| b[i] - (mask >> i & 1) as i64).collect());
            gens.gens().iter().any(|g| g.le_all(&shifted))
        })
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect())
}

/// `beta_{i,b} = dim H~_{i-1}(K_b)` for `i = 0..=n`.
pub fn betti_hochster_oracle(gens: &GeneratorSet, b: &ExponentVector, field: Field) -> Result<Vec<usize>> {
    let n = gens.ambient_dim();
    let faces = hochster_complex(gens, b)?;
    let has_empty = faces.iter().any(|f| f.is_empty());
    let nonempty: Vec<Vec<usize>> = faces.into_iter().filter(|f| !f.is_empty()).collect();
    let k = LabeledCellComplex::simplicial_closed(n, vec![ExponentVector::zero(n); n], nonempty, has_empty)?;
    let h = reduced_homology(&k, field);
    Ok((0..=n).map(|i| h.get(i as i64 - 1)).collect())
}

/// The full table from [`betti_hochster_oracle`] over the lcm lattice.
pub fn betti_hochster_table(gens: &GeneratorSet, field: Field) -> Result<BettiTable> {
    let min = gens.minimalize();
    let mut t = BettiTable::new();
    for b in min.lcm_lattice() {
        for (i, v) in betti_hochster_oracle(&min, &b, field)?.into_iter().enumerate() {
            t.set(i, b.clone(), v);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> GeneratorSet {
        GeneratorSet::from_rows(3, &[&[2, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 2]]).unwrap()
    }

    fn y_complex() -> LabeledCellComplex {
        let g = two_triangles();
        // 0 = a^2b, 1 = ac, 2 = b^2, 3 = bc^2
        LabeledCellComplex::from_cells(
            3,
            g.gens().to_vec(),
            vec![(vec![0, 1, 3], 2), (vec![0, 2, 3], 2), (vec![0, 1], 1), (vec![0, 2], 1),
                 (vec![0, 3], 1), (vec![1, 3], 1), (vec![2, 3], 1)],
        )
        .unwrap()
    }

    #[test]
    fn hull_of_example_is_minimal_resolution() {
        let g = two_triangles();
        let x = LabeledCellComplex::hull(&g).unwrap();
        assert!(verify_resolution(&x, &g, Field::Rational).unwrap().is_resolution());
        assert!(is_minimal(&x));
        let f = cellular_free_complex(&x);
        assert_eq!(f.ranks(), vec![4, 5, 2]);
        assert!(f.is_homogeneous() && f.is_complex());
        let t = betti_numbers(&x, &g, Field::Rational).unwrap();
        assert_eq!(t.totals(), vec![4, 5, 2]);
        assert_eq!(t.get(1, &ExponentVector::from([2, 1, 1])), 1);
    }

    #[test]
    fn y_fails_at_121() {
        let g = two_triangles();
        let y = y_complex();
        assert_eq!(
            verify_resolution(&y, &g, Field::Rational).unwrap(),
            Verdict::Fails { witness: ExponentVector::from([1, 2, 1]) }
        );
        assert!(matches!(betti_numbers(&y, &g, Field::Rational), Err(Error::NotAResolution(_))));
        let below = y.subcomplex(&OrderIdealSpec::Below(ExponentVector::from([1, 2, 1])));
        assert_eq!(below.vertices(), vec![1, 2]);
        assert_eq!(below.f_vector(), vec![2]);
    }

    #[test]
    fn taylor_not_minimal() {
        let t = LabeledCellComplex::taylor(&two_triangles()).unwrap();
        assert!(!is_minimal(&t));
        assert!(verify_resolution(&t, &two_triangles(), Field::Prime(2)).unwrap().is_resolution());
    }

    #[test]
    fn koszul_entries() {
        let g = GeneratorSet::from_rows(2, &[&[1, 0], &[0, 1]]).unwrap();
        let f = cellular_free_complex(&LabeledCellComplex::taylor(&g).unwrap());
        let mut terms: Vec<(i64, Vec<i64>)> =
            f.differentials[1].iter().map(|e| (e.coeff, e.exponent.coords().to_vec())).collect();
        terms.sort();
        assert_eq!(terms, vec![(-1, vec![0, 1]), (1, vec![1, 0])]);
        let t = betti_taylor_oracle(&g, Field::Rational).unwrap();
        assert_eq!(t.get(1, &ExponentVector::from([1, 1])), 1);
        assert_eq!(t.totals(), vec![2, 1]);
    }

    #[test]
    fn oracles_agree_on_example() {
        let g = two_triangles();
        let x = LabeledCellComplex::hull(&g).unwrap();
        for field in [Field::Rational, Field::Prime(2)] {
            let a = betti_numbers(&x, &g, field).unwrap();
            assert_eq!(a, betti_taylor_oracle(&g, field).unwrap());
            assert_eq!(a, betti_hochster_table(&g, field).unwrap());
        }
    }

    #[test]
    fn hochster_at_211() {
        let g = two_triangles();
        let b = ExponentVector::from([2, 1, 1]);
        let mut k = hochster_complex(&g, &b).unwrap();
        k.sort();
        assert_eq!(k, vec![vec![], vec![0], vec![0, 1], vec![1], vec![2]]);
        assert_eq!(betti_hochster_oracle(&g, &b, Field::Rational).unwrap(), vec![0, 1, 0, 0]);
        let low = ExponentVector::from([0, 0, 0]);
        assert!(betti_hochster_oracle(&g, &low, Field::Rational).unwrap().iter().all(|&v| v == 0));
        let gen = ExponentVector::from([1, 0, 1]);
        assert_eq!(betti_hochster_oracle(&g, &gen, Field::Rational).unwrap()[0], 1);
    }

    #[test]
    fn principal_ideal() {
        let g = GeneratorSet::from_rows(2, &[&[2, 3]]).unwrap();
        let t = betti_taylor_oracle(&g, Field::Rational).unwrap();
        assert_eq!(t.totals(), vec![1]);
        let f = cellular_free_complex(&LabeledCellComplex::taylor(&g).unwrap());
        assert_eq!(f.ranks(), vec![1]);
    }

    #[test]
    fn strands_of_hull_are_exact() {
        let g = two_triangles();
        let f = cellular_free_complex(&LabeledCellComplex::hull(&g).unwrap());
        assert_eq!(f.first_inexact_degree(&g.lcm_lattice(), Field::Rational), None);
        let fy = cellular_free_complex(&y_complex());
        assert_eq!(
            fy.first_inexact_degree(&[ExponentVector::from([1, 2, 1])], Field::Rational),
            Some(ExponentVector::from([1, 2, 1]))
        );
    }

    #[test]
    fn betti_text() {
        let g = GeneratorSet::from_rows(2, &[&[1, 0], &[0, 1]]).unwrap();
        let t = betti_taylor_oracle(&g, Field::Rational).unwrap();
        assert_eq!(t.to_string(), "0  0 1  1\n0  1 0  1\n1  1 1  1\n");
    }
}
