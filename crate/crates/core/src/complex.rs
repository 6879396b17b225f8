//! Regular cell complexes with `Z^n` degree labels and incidence signs.
//!
//! Cells are identified by their vertex sets, which is enough for simplicial
//! and polytopal complexes. Nonempty cells are kept sorted by dimension and
//! then lexicographically by vertex set; the empty cell is a flag.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::geometry::hull::hull_faces;
use crate::linalg::nullspace_rational;
use crate::monomial::{join_all, ExponentVector, GeneratorSet};

/// Refuse Taylor and Scarf constructions above this many generators.
pub const MAX_TAYLOR_GENERATORS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub vertices: Vec<usize>,
    pub dim: usize,
    pub label: ExponentVector,
    /// `(cell index, sign)` for each facet. Vertices list nothing here;
    /// their single facet is the empty cell with sign `+1`.
    pub facets: Vec<(usize, i8)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledCellComplex {
    ambient_dim: usize,
    vertex_labels: Vec<ExponentVector>,
    cells: Vec<Cell>,
    has_empty: bool,
}

/// Which degrees a subcomplex keeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderIdealSpec {
    /// `X_{<= b}`.
    Below(ExponentVector),
    /// `X_{< b}`: `X_{<= b}` without the cells of degree exactly `b`.
    StrictlyBelow(ExponentVector),
    /// Degrees below some element of a finite antichain.
    Generated(Vec<ExponentVector>),
}

impl OrderIdealSpec {
    pub fn contains(&self, a: &ExponentVector) -> bool {
        match self {
            OrderIdealSpec::Below(b) => a.le_all(b),
            OrderIdealSpec::StrictlyBelow(b) => a.le_all(b) && a != b,
            OrderIdealSpec::Generated(qs) => qs.iter().any(|q| a.le_all(q)),
        }
    }

    /// Whether a vertex of this degree puts the empty cell into the
    /// subcomplex. The empty cell sits in `X_{< b}` exactly when it sits in
    /// `X_{<= b}`.
    fn keeps_empty_for(&self, a: &ExponentVector) -> bool {
        match self {
            OrderIdealSpec::StrictlyBelow(b) => a.le_all(b),
            _ => self.contains(a),
        }
    }
}

impl LabeledCellComplex {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &Cell {
        &self.cells[i]
    }

    pub fn has_empty(&self) -> bool {
        self.has_empty
    }

    pub fn vertex_labels(&self) -> &[ExponentVector] {
        &self.vertex_labels
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    /// Dimension of the complex; `None` when there are no nonempty cells.
    pub fn dim(&self) -> Option<usize> {
        self.cells.last().map(|c| c.dim)
    }

    /// Vertex ids present as 0-cells.
    pub fn vertices(&self) -> Vec<usize> {
        self.cells.iter().take_while(|c| c.dim == 0).map(|c| c.vertices[0]).collect()
    }

    /// Counts of nonempty cells by dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim().map_or(0, |d| d + 1)];
        for c in &self.cells {
            f[c.dim] += 1;
        }
        f
    }

    pub fn cells_of_dim(&self, d: usize) -> impl Iterator<Item = (usize, &Cell)> {
        self.cells.iter().enumerate().filter(move |(_, c)| c.dim == d)
    }

    pub fn find(&self, vertices: &[usize]) -> Option<usize> {
        self.cells.iter().position(|c| c.vertices == vertices)
    }

    /// `epsilon(F, F')` for cell indices, `0` when `F'` is not a facet of `F`.
    pub fn incidence(&self, cell: usize, facet: usize) -> i8 {
        self.cells[cell]
            .facets
            .iter()
            .find(|(f, _)| *f == facet)
            .map_or(0, |(_, s)| *s)
    }

    /// Largest number of vertices on a single cell.
    pub fn max_cell_size(&self) -> usize {
        self.cells.iter().map(|c| c.vertices.len()).max().unwrap_or(0)
    }

    fn empty(ambient_dim: usize, vertex_labels: Vec<ExponentVector>) -> Self {
        LabeledCellComplex { ambient_dim, vertex_labels, cells: Vec::new(), has_empty: false }
    }

    fn check_labels(ambient_dim: usize, labels: &[ExponentVector]) -> Result<()> {
        for l in labels {
            if l.dim() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: l.dim() });
            }
        }
        Ok(())
    }

    fn sorted_cells(
        vertex_labels: &[ExponentVector],
        faces: impl IntoIterator<Item = (Vec<usize>, usize)>,
    ) -> Result<Vec<Cell>> {
        let mut set: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for (mut vs, d) in faces {
            vs.sort_unstable();
            vs.dedup();
            if vs.is_empty() {
                continue;
            }
            if let Some(&v) = vs.iter().find(|&&v| v >= vertex_labels.len()) {
                return Err(Error::Invalid(format!("vertex id {v} has no label")));
            }
            for &v in &vs {
                set.insert((0, vec![v]));
            }
            set.insert((d, vs));
        }
        Ok(set
            .into_iter()
            .map(|(dim, vertices)| Cell {
                label: join_all(vertices.iter().map(|&v| &vertex_labels[v])).unwrap(),
                vertices,
                dim,
                facets: Vec::new(),
            })
            .collect())
    }

    /// A regular complex given by vertex sets and dimensions; the facet
    /// relation is read off from containment and signs come from
    /// [`build_incidence`]. Vertices are added automatically.
    pub fn from_cells(
        ambient_dim: usize,
        vertex_labels: Vec<ExponentVector>,
        faces: Vec<(Vec<usize>, usize)>,
    ) -> Result<Self> {
        Self::check_labels(ambient_dim, &vertex_labels)?;
        let mut cells = Self::sorted_cells(&vertex_labels, faces)?;
        let mut start = 0;
        while start < cells.len() {
            let d = cells[start].dim;
            let end = start + cells[start..].iter().take_while(|c| c.dim == d).count();
            if d > 0 {
                let lower: Vec<usize> = (0..start).filter(|&j| cells[j].dim == d - 1).collect();
                for i in start..end {
                    let facets: Vec<(usize, i8)> = lower
                        .iter()
                        .filter(|&&j| is_subset(&cells[j].vertices, &cells[i].vertices))
                        .map(|&j| (j, 0))
                        .collect();
                    cells[i].facets = facets;
                }
            }
            start = end;
        }
        let has_empty = !cells.is_empty();
        let mut x = LabeledCellComplex { ambient_dim, vertex_labels, cells, has_empty };
        build_incidence(&mut x)?;
        Ok(x)
    }

    /// The simplicial complex generated by `faces` (closed under nonempty
    /// subsets), oriented as [`build_incidence`] would.
    pub fn simplicial(
        ambient_dim: usize,
        vertex_labels: Vec<ExponentVector>,
        faces: &[Vec<usize>],
    ) -> Result<Self> {
        Self::check_labels(ambient_dim, &vertex_labels)?;
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in faces {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if f.len() > 63 {
                return Err(Error::TooLarge("simplex with more than 63 vertices".into()));
            }
            if all.contains(&f) {
                continue;
            }
            for mask in 1u64..(1u64 << f.len()) {
                let sub: Vec<usize> =
                    f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
                all.insert(sub);
            }
        }
        let nonvoid = !all.is_empty();
        Self::simplicial_closed(ambient_dim, vertex_labels, all.into_iter().collect(), nonvoid)
    }

    /// `faces` must already be closed under nonempty subsets.
    pub(crate) fn simplicial_closed(
        ambient_dim: usize,
        vertex_labels: Vec<ExponentVector>,
        faces: Vec<Vec<usize>>,
        has_empty: bool,
    ) -> Result<Self> {
        let mut cells =
            Self::sorted_cells(&vertex_labels, faces.into_iter().map(|f| { let d = f.len() - 1; (f, d) }))?;
        let index: HashMap<Vec<usize>, usize> =
            cells.iter().enumerate().map(|(i, c)| (c.vertices.clone(), i)).collect();
        for c in cells.iter_mut() {
            if c.dim == 0 {
                continue;
            }
            c.facets = (0..c.vertices.len())
                .map(|j| {
                    let mut sub = c.vertices.clone();
                    sub.remove(j);
                    // orientations flipped so the lex-first facet of a cell of
                    // dimension >= 2 gets +1, as in build_incidence
                    let flip = if c.dim >= 2 { c.dim } else { 0 };
                    (index[&sub], if (j + flip) % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            c.facets.sort_unstable();
        }
        Ok(LabeledCellComplex { ambient_dim, vertex_labels, cells, has_empty })
    }

    /// The full simplex on the generators.
    pub fn taylor(gens: &GeneratorSet) -> Result<Self> {
        let m = gens.len();
        if m > MAX_TAYLOR_GENERATORS {
            return Err(Error::TooLarge(format!("{m} generators exceed {MAX_TAYLOR_GENERATORS}")));
        }
        let faces: Vec<Vec<usize>> = (1u64..(1u64 << m)).map(|mask| mask_to_set(mask, m)).collect();
        Self::simplicial_closed(gens.ambient_dim(), gens.gens().to_vec(), faces, m > 0)
    }

    /// Faces of the Taylor simplex whose label no other face shares.
    pub fn scarf(gens: &GeneratorSet) -> Result<Self> {
        let m = gens.len();
        if m > MAX_TAYLOR_GENERATORS {
            return Err(Error::TooLarge(format!("{m} generators exceed {MAX_TAYLOR_GENERATORS}")));
        }
        let mut labels: Vec<ExponentVector> = vec![ExponentVector::zero(gens.ambient_dim()); 1 << m];
        let mut count: HashMap<ExponentVector, usize> = HashMap::new();
        for mask in 1usize..(1 << m) {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            labels[mask] = if rest == 0 {
                gens.gens()[low].clone()
            } else {
                labels[rest].join_unchecked(&gens.gens()[low])
            };
            *count.entry(labels[mask].clone()).or_default() += 1;
        }
        let faces: Vec<Vec<usize>> = (1usize..(1 << m))
            .filter(|&mask| count[&labels[mask]] == 1)
            .map(|mask| mask_to_set(mask as u64, m))
            .collect();
        Self::simplicial_closed(gens.ambient_dim(), gens.gens().to_vec(), faces, m > 0)
    }

    /// The complex of bounded faces of `P_t`; vertex ids are generator
    /// indices.
    pub fn hull(gens: &GeneratorSet) -> Result<Self> {
        Self::hull_at(gens, None)
    }

    /// The hull complex computed at a given `t` instead of the default.
    pub fn hull_at(gens: &GeneratorSet, t: Option<&BigInt>) -> Result<Self> {
        let poset = hull_faces(gens, t)?;
        let faces = poset.faces.into_iter().map(|f| (f.rays, f.dim)).collect();
        Self::from_cells(gens.ambient_dim(), gens.gens().to_vec(), faces)
    }

    /// Cells whose degree lies in the order ideal, with inherited signs.
    /// The empty cell is kept iff some vertex qualifies (for `X_{< b}`: iff
    /// some vertex has degree `<= b`), so a subcomplex without vertices is
    /// void unless it is `X_{< b}` at a generator degree `b`.
    pub fn subcomplex(&self, spec: &OrderIdealSpec) -> LabeledCellComplex {
        let keep: Vec<bool> = self.cells.iter().map(|c| spec.contains(&c.label)).collect();
        let mut new_index = vec![usize::MAX; self.cells.len()];
        let mut cells = Vec::new();
        for (i, c) in self.cells.iter().enumerate() {
            if keep[i] {
                new_index[i] = cells.len();
                cells.push(Cell {
                    vertices: c.vertices.clone(),
                    dim: c.dim,
                    label: c.label.clone(),
                    facets: c.facets.iter().map(|&(f, s)| (new_index[f], s)).collect(),
                });
            }
        }
        let has_empty = self.has_empty
            && self.cells.iter().take_while(|c| c.dim == 0).any(|c| spec.keeps_empty_for(&c.label));
        LabeledCellComplex { ambient_dim: self.ambient_dim, vertex_labels: self.vertex_labels.clone(), cells, has_empty }
    }

    /// Whether every cell of `self` is a cell of `other` of the same dimension.
    pub fn is_subcomplex_of(&self, other: &LabeledCellComplex) -> bool {
        let index: HashMap<&[usize], usize> = other.cells.iter().map(|c| (c.vertices.as_slice(), c.dim)).collect();
        (!self.has_empty || other.has_empty)
            && self.cells.iter().all(|c| index.get(c.vertices.as_slice()) == Some(&c.dim))
    }

    /// Text export: one nonempty cell per line as
    /// `dim | vertex ids | label | signed facet indices`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cells {
            let vs: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
            let fs: Vec<String> =
                c.facets.iter().map(|&(f, s)| format!("{}{}", if s > 0 { '+' } else { '-' }, f)).collect();
            let _ = writeln!(out, "{} | {} | {} | {}", c.dim, vs.join(" "), c.label, fs.join(" "));
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. Vertex labels come from the
    /// 0-cell lines; other labels are recomputed and must agree. When no
    /// line carries facets the signs are rebuilt from scratch.
    pub fn from_text(text: &str) -> Result<Self> {
        struct Line {
            dim: usize,
            vertices: Vec<usize>,
            label: Vec<i64>,
            facets: Vec<(usize, i8)>,
        }
        let mut lines = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let raw = raw.split('#').next().unwrap().trim();
            if raw.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: no + 1, msg: msg.to_string() };
            let parts: Vec<&str> = raw.split('|').map(str::trim).collect();
            if parts.len() < 3 || parts.len() > 4 {
                return Err(err("expected `dim | vertices | label | facets`"));
            }
            let dim = parts[0].parse().map_err(|_| err("bad dimension"))?;
            let vertices = parse_list::<usize>(parts[1]).ok_or_else(|| err("bad vertex list"))?;
            let label = parse_list::<i64>(parts[2]).ok_or_else(|| err("bad label"))?;
            let mut facets = Vec::new();
            if parts.len() == 4 {
                for tok in parts[3].split_whitespace() {
                    let (s, rest) = match tok.as_bytes()[0] {
                        b'+' => (1, &tok[1..]),
                        b'-' => (-1, &tok[1..]),
                        _ => return Err(err("facet entries need a sign")),
                    };
                    facets.push((rest.parse().map_err(|_| err("bad facet index"))?, s));
                }
            }
            if vertices.is_empty() || (dim == 0 && vertices.len() != 1) {
                return Err(err("bad cell"));
            }
            lines.push(Line { dim, vertices, label, facets });
        }
        let Some(n) = lines.first().map(|l| l.label.len()) else {
            return Ok(Self::empty(0, Vec::new()));
        };
        let max_id = lines.iter().flat_map(|l| l.vertices.iter()).copied().max().unwrap();
        let mut labels: Vec<Option<ExponentVector>> = vec![None; max_id + 1];
        for l in lines.iter().filter(|l| l.dim == 0) {
            if l.label.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: l.label.len() });
            }
            labels[l.vertices[0]] = Some(ExponentVector::new(l.label.clone()));
        }
        if let Some(v) = labels.iter().position(Option::is_none) {
            if lines.iter().any(|l| l.vertices.contains(&v)) {
                return Err(Error::Invalid(format!("vertex {v} has no 0-cell line")));
            }
        }
        let labels: Vec<ExponentVector> =
            labels.into_iter().map(|l| l.unwrap_or_else(|| ExponentVector::zero(n))).collect();
        for l in &lines {
            let a = join_all(l.vertices.iter().map(|&v| &labels[v])).unwrap();
            if a.coords() != l.label.as_slice() {
                return Err(Error::Invalid(format!("label of cell {:?} should be {a}", l.vertices)));
            }
        }
        if lines.iter().all(|l| l.facets.is_empty()) {
            return Self::from_cells(n, labels, lines.into_iter().map(|l| (l.vertices, l.dim)).collect());
        }
        let cells: Vec<Cell> = lines
            .into_iter()
            .map(|l| Cell {
                label: join_all(l.vertices.iter().map(|&v| &labels[v])).unwrap(),
                vertices: l.vertices,
                dim: l.dim,
                facets: {
                    let mut f = l.facets;
                    f.sort_unstable();
                    f
                },
            })
            .collect();
        let sorted = cells.windows(2).all(|w| (w[0].dim, &w[0].vertices) < (w[1].dim, &w[1].vertices));
        if !sorted {
            return Err(Error::Invalid("cells must be sorted by dimension, then vertex set".into()));
        }
        for (i, c) in cells.iter().enumerate() {
            for &(f, _) in &c.facets {
                if f >= cells.len() || cells[f].dim + 1 != c.dim || !is_subset(&cells[f].vertices, &c.vertices) {
                    return Err(Error::InvalidIncidence(format!("cell {i} lists {f} as a facet")));
                }
            }
        }
        let x = LabeledCellComplex { ambient_dim: n, vertex_labels: labels, has_empty: !cells.is_empty(), cells };
        if !check_incidence(&x) {
            return Err(Error::InvalidIncidence("incidence axioms fail".into()));
        }
        Ok(x)
    }
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Option<Vec<T>> {
    s.split_whitespace().map(|t| t.parse().ok()).collect()
}

fn mask_to_set(mask: u64, m: usize) -> Vec<usize> {
    (0..m).filter(|i| mask >> i & 1 == 1).collect()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// Assigns signs to every facet pair: edges get `+1` at the larger endpoint
/// and `-1` at the smaller; a `d`-cell with `d >= 2` gets the kernel vector
/// of the boundary map restricted to its facets, scaled so the first facet
/// has sign `+1`.
pub fn build_incidence(x: &mut LabeledCellComplex) -> Result<()> {
    for i in 0..x.cells.len() {
        let d = x.cells[i].dim;
        if d == 0 {
            continue;
        }
        let facets: Vec<usize> = x.cells[i].facets.iter().map(|&(f, _)| f).collect();
        if d == 1 {
            if facets.len() != 2 {
                return Err(Error::InvalidIncidence(format!(
                    "edge {:?} has {} endpoints",
                    x.cells[i].vertices,
                    facets.len()
                )));
            }
            // facets are sorted, so the first endpoint is the smaller vertex
            x.cells[i].facets = vec![(facets[0], -1), (facets[1], 1)];
            continue;
        }
        let mut ridges: Vec<usize> =
            facets.iter().flat_map(|&f| x.cells[f].facets.iter().map(|&(r, _)| r)).collect();
        ridges.sort_unstable();
        ridges.dedup();
        let rows: Vec<Vec<i64>> = ridges
            .iter()
            .map(|&r| facets.iter().map(|&f| x.incidence(f, r) as i64).collect())
            .collect();
        let kernel = nullspace_rational(&rows, facets.len());
        let bad = || Error::InvalidIncidence(format!("cell {:?} does not have a spherical boundary", x.cells[i].vertices));
        if kernel.len() != 1 {
            return Err(bad());
        }
        let mut v = kernel.into_iter().next().unwrap();
        if !v.iter().all(|e| e.abs().is_one()) {
            return Err(bad());
        }
        if v[0].is_negative() {
            v.iter_mut().for_each(|e| *e = -e.clone());
        }
        x.cells[i].facets = facets.iter().zip(&v).map(|(&f, s)| (f, s.to_i8().unwrap())).collect();
    }
    Ok(())
}

/// Checks the incidence axioms: signs are `+-1` on facet pairs only, every
/// codimension-2 face of a cell lies on exactly two of its facets, and the
/// augmented boundary squares to zero.
pub fn check_incidence(x: &LabeledCellComplex) -> bool {
    for c in &x.cells {
        if c.dim == 0 {
            if !c.facets.is_empty() {
                return false;
            }
            continue;
        }
        if c.facets.iter().any(|&(_, s)| s != 1 && s != -1) {
            return false;
        }
        let mut seen = BTreeSet::new();
        if !c.facets.iter().all(|&(f, _)| seen.insert(f)) {
            return false;
        }
        for &(f, _) in &c.facets {
            let fc = &x.cells[f];
            if fc.dim + 1 != c.dim || !is_subset(&fc.vertices, &c.vertices) {
                return false;
            }
        }
        // boundary of the boundary, with the empty cell as ridge of edges
        let mut acc: HashMap<Option<usize>, (i64, usize)> = HashMap::new();
        for &(f, s) in &c.facets {
            if c.dim == 1 {
                let e = acc.entry(None).or_default();
                e.0 += s as i64;
                e.1 += 1;
            } else {
                for &(r, t) in &x.cells[f].facets {
                    let e = acc.entry(Some(r)).or_default();
                    e.0 += (s * t) as i64;
                    e.1 += 1;
                }
            }
        }
        if acc.values().any(|&(sum, count)| sum != 0 || count != 2) {
            return false;
        }
    }
    true
}
