//! Exponent vectors, the divisibility order on them, and finite generating
//! sets of monomial modules.
//!
//! An [`ExponentVector`] is a point of `Z^n`: the exponent of a Laurent
//! monomial, the degree label of a cell, or an element of a lattice. The
//! coordinatewise order `a <= b` is divisibility of monomials, the join is the
//! exponent of the least common multiple and the meet that of the gcd.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(coords: Vec<i64>) -> Self {
        ExponentVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The `i`-th unit vector in dimension `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    /// Coordinatewise maximum (exponent of the lcm).
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.join_unchecked(other))
    }

    /// Coordinatewise minimum (exponent of the gcd).
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.meet_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub(crate) fn meet_unchecked(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self <= other` coordinatewise, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.le_all(other))
    }

    /// `self < other` in every coordinate.
    pub fn strictly_divides(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.lt_all(other))
    }

    pub(crate) fn le_all(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn lt_all(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Positive part `a^+` with `a = a^+ - a^-`.
    pub fn positive_part(&self) -> Self {
        ExponentVector(self.0.iter().map(|&a| a.max(0)).collect())
    }

    /// Negative part `a^-` with `a = a^+ - a^-`.
    pub fn negative_part(&self) -> Self {
        ExponentVector(self.0.iter().map(|&a| (-a).max(0)).collect())
    }

    /// Maximum absolute value of a coordinate.
    pub fn max_norm(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn scale(&self, k: i64) -> Self {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for ExponentVector {
    fn from(v: [i64; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl Index<usize> for ExponentVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

// The operator impls panic on dimension mismatch; use the checked methods at
// API boundaries.
impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        assert_eq!(self.dim(), rhs.dim());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        assert_eq!(self.dim(), rhs.dim());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Join of a nonempty family; `None` for the empty family.
pub fn join_all<'a, I>(vectors: I) -> Option<ExponentVector>
where
    I: IntoIterator<Item = &'a ExponentVector>,
{
    let mut it = vectors.into_iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, v| acc.join_unchecked(v)))
}

/// A finite ordered list of generators of a monomial module.
///
/// Order is preserved from construction; vertex indices of every complex
/// built from the set refer to positions in this list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    ambient_dim: usize,
    gens: Vec<ExponentVector>,
}

impl GeneratorSet {
    /// Builds a generating set, dropping repeated vectors (first occurrence
    /// wins).
    pub fn new(ambient_dim: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::Invalid("ambient dimension must be positive".into()));
        }
        let mut seen = HashSet::new();
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: g.dim(),
                });
            }
            if seen.insert(g.clone()) {
                kept.push(g);
            }
        }
        Ok(GeneratorSet { ambient_dim, gens: kept })
    }

    /// Convenience constructor from rows of integers.
    pub fn from_rows(ambient_dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            ambient_dim,
            rows.iter().map(|r| ExponentVector::new(r.to_vec())).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Keeps only generators not divisible by another generator.
    pub fn minimalize(&self) -> GeneratorSet {
        let gens = self
            .gens
            .iter()
            .enumerate()
            .filter(|(i, a)| {
                !self
                    .gens
                    .iter()
                    .enumerate()
                    .any(|(j, b)| j != *i && b.le_all(a))
            })
            .map(|(_, a)| a.clone())
            .collect();
        GeneratorSet { ambient_dim: self.ambient_dim, gens }
    }

    pub fn is_minimal(&self) -> bool {
        self.minimalize().len() == self.len()
    }

    /// Generators of degree `<= b`, in input order.
    pub fn truncate(&self, b: &ExponentVector) -> Result<GeneratorSet> {
        if b.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: b.dim(),
            });
        }
        Ok(GeneratorSet {
            ambient_dim: self.ambient_dim,
            gens: self.gens.iter().filter(|a| a.le_all(b)).cloned().collect(),
        })
    }

    /// All joins of nonempty subsets of the generators, by fixpoint
    /// join-closure. Returned sorted.
    pub fn lcm_lattice(&self) -> Vec<ExponentVector> {
        let mut closed: BTreeSet<ExponentVector> = self.gens.iter().cloned().collect();
        let mut frontier: Vec<ExponentVector> = closed.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for f in &frontier {
                for g in &self.gens {
                    let j = f.join_unchecked(g);
                    if !closed.contains(&j) {
                        closed.insert(j.clone());
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        closed.into_iter().collect()
    }

    /// Pairwise full-support test: every two generators differ in every
    /// coordinate. Sufficient for genericity, not necessary.
    pub fn is_pairwise_generic(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| {
            self.gens[i + 1..]
                .iter()
                .all(|b| a.iter().zip(b.iter()).all(|(x, y)| x != y))
        })
    }

    /// Join of all generators, `None` when empty.
    pub fn total_join(&self) -> Option<ExponentVector> {
        join_all(&self.gens)
    }
}
