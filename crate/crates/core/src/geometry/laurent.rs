//! Laurent polynomials in one variable `t` and the sign of `det(t^{a_ij})`
//! for all sufficiently large `t`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Sparse Laurent polynomial `sum c_k t^k` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigInt> {
        &self.terms
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let e = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    /// Highest-degree term, `None` for the zero polynomial.
    pub fn leading(&self) -> Option<(i64, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Sign of the polynomial for all large `t`: the sign of the leading
    /// coefficient.
    pub fn eventual_sign(&self) -> i8 {
        match self.leading() {
            None => 0,
            Some((_, c)) if c.is_positive() => 1,
            Some(_) => -1,
        }
    }
}

/// Expands `det((t^{a_ij}))` by the Leibniz formula.
pub fn det_laurent(exponents: &[Vec<i64>]) -> LaurentPoly {
    let r = exponents.len();
    let mut out = LaurentPoly::zero();
    let mut perm: Vec<usize> = (0..r).collect();
    permutations(&mut perm, 0, &mut |p, parity| {
        let e: i64 = p.iter().enumerate().map(|(i, &j)| exponents[i][j]).sum();
        out.add_term(e, BigInt::from(if parity { -1 } else { 1 }));
    });
    out
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize], bool)) {
    fn go(p: &mut Vec<usize>, k: usize, odd: bool, f: &mut impl FnMut(&[usize], bool)) {
        if k == p.len() {
            f(p, odd);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(p, k + 1, odd ^ (i != k), f);
            p.swap(k, i);
        }
    }
    go(p, k, false, f)
}

/// Sign of `det((t^{a_ij}))` valid for every `t > r!`; 0 iff the
/// determinant vanishes identically.
pub fn det_sign_laurent(exponents: &[Vec<i64>]) -> i8 {
    det_laurent(exponents).eventual_sign()
}
