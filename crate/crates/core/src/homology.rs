//! Cellular chain complexes over `Q` or `F_p` and their homology ranks.

use std::collections::HashMap;

use crate::complex::LabeledCellComplex;
use crate::error::{Error, Result};
use crate::linalg::{rank, Field};

/// A bounded chain complex `C_top -> ... -> C_min`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub field: Field,
    /// Homological degree of `dims[0]`; `-1` for augmented complexes.
    pub min_degree: i64,
    pub dims: Vec<usize>,
    /// `boundaries[k]` maps degree `min_degree + k` to the degree below, as a
    /// dense matrix with one row per target basis element. `boundaries[0]`
    /// is empty.
    pub boundaries: Vec<Vec<Vec<i64>>>,
}

/// Homology ranks indexed from `min_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub min_degree: i64,
    pub ranks: Vec<usize>,
}

impl Homology {
    pub fn get(&self, degree: i64) -> usize {
        let k = degree - self.min_degree;
        if k < 0 {
            return 0;
        }
        self.ranks.get(k as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

impl ChainComplex {
    fn boundary_rank(&self, k: usize) -> usize {
        match self.boundaries.get(k) {
            Some(m) if k > 0 && !m.is_empty() => rank(m, self.field),
            _ => 0,
        }
    }

    /// Whether each composite of consecutive boundaries vanishes.
    pub fn is_complex(&self) -> bool {
        (2..self.boundaries.len()).all(|k| {
            let upper = &self.boundaries[k];
            let lower = &self.boundaries[k - 1];
            lower.iter().all(|row| {
                (0..self.dims[k]).all(|col| {
                    let s: i128 = row.iter().enumerate().map(|(j, &a)| a as i128 * upper[j][col] as i128).sum();
                    match self.field {
                        Field::Rational => s == 0,
                        Field::Prime(p) => s.rem_euclid(p as i128) == 0,
                    }
                })
            })
        })
    }
}

/// Chain complex of `x`. The augmented variant places the empty cell (if
/// present) in degree `-1`.
pub fn chain_complex(x: &LabeledCellComplex, field: Field, augmented: bool) -> ChainComplex {
    let cells: Vec<usize> = (0..x.num_cells()).collect();
    chain_complex_of(x, &cells, augmented && x.has_empty(), field, augmented)
}

fn chain_complex_of(
    x: &LabeledCellComplex,
    cells: &[usize],
    with_empty: bool,
    field: Field,
    augmented: bool,
) -> ChainComplex {
    let top = cells.iter().map(|&c| x.cell(c).dim + 1).max().unwrap_or(0);
    let offset = augmented as usize;
    let mut dims = vec![0usize; top + offset];
    let mut pos: HashMap<usize, usize> = HashMap::new();
    for &c in cells {
        let k = x.cell(c).dim + offset;
        pos.insert(c, dims[k]);
        dims[k] += 1;
    }
    if augmented {
        dims[0] = with_empty as usize;
    }
    let mut boundaries: Vec<Vec<Vec<i64>>> = dims
        .iter()
        .enumerate()
        .map(|(k, &d)| if k == 0 { Vec::new() } else { vec![vec![0; d]; dims[k - 1]] })
        .collect();
    for &c in cells {
        let cell = x.cell(c);
        let k = cell.dim + offset;
        let col = pos[&c];
        if cell.dim == 0 {
            if augmented && with_empty {
                boundaries[k][0][col] = 1;
            }
            continue;
        }
        for &(f, s) in &cell.facets {
            if let Some(&row) = pos.get(&f) {
                boundaries[k][row][col] = s as i64;
            }
        }
    }
    ChainComplex { field, min_degree: -(augmented as i64), dims, boundaries }
}

pub fn homology_ranks(c: &ChainComplex) -> Homology {
    let ranks: Vec<usize> = (0..c.dims.len()).map(|k| c.boundary_rank(k)).collect();
    Homology {
        min_degree: c.min_degree,
        ranks: (0..c.dims.len())
            .map(|k| c.dims[k] - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
            .collect(),
    }
}

/// Reduced homology `H~_i(x)`, starting at `i = -1`.
pub fn reduced_homology(x: &LabeledCellComplex, field: Field) -> Homology {
    homology_ranks(&chain_complex(x, field, true))
}

/// Whether every reduced homology group vanishes. The void complex is
/// acyclic; the complex `{empty}` is not.
pub fn is_acyclic(x: &LabeledCellComplex, field: Field) -> bool {
    reduced_homology(x, field).is_zero()
}

/// `H_i(x, a)` from the chain complex of cells of `x` not in `a`, starting
/// at `i = -1` (nonzero there only if `x` has the empty cell and `a` does
/// not).
pub fn relative_homology_ranks(x: &LabeledCellComplex, a: &LabeledCellComplex, field: Field) -> Result<Homology> {
    if !a.is_subcomplex_of(x) {
        return Err(Error::NotSubcomplex("cells of A missing from X".into()));
    }
    let in_a: std::collections::HashSet<&[usize]> = a.cells().iter().map(|c| c.vertices.as_slice()).collect();
    let cells: Vec<usize> = (0..x.num_cells()).filter(|&i| !in_a.contains(x.cell(i).vertices.as_slice())).collect();
    let with_empty = x.has_empty() && !a.has_empty();
    Ok(homology_ranks(&chain_complex_of(x, &cells, with_empty, field, true)))
}
