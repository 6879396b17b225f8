//! Exact linear algebra: ranks over `Q` and `F_p`, rational null spaces,
//! integer kernels and Hermite normal forms.
//!
//! Nothing here touches floating point. Ranks over `Q` use fraction-free
//! integer elimination in `i128` and restart in `BigInt` on overflow.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field: `Q` or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Field of the given characteristic (0 for `Q`).
    pub fn from_characteristic(p: u64) -> Result<Field> {
        if p == 0 {
            return Ok(Field::Rational);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of an integer matrix (rows of equal length) over `field`.
pub fn rank(rows: &[Vec<i64>], field: Field) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match field {
        Field::Prime(p) => rank_mod_p(rows, p),
        Field::Rational => rank_rational(rows),
    }
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&a| a.rem_euclid(p as i64) as u64).collect())
        .collect();
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][col], p);
        for c in col..ncols {
            m[rank][c] = ((m[rank][c] as u128 * inv as u128) % p as u128) as u64;
        }
        for r in rank + 1..m.len() {
            let f = m[r][col];
            if f == 0 {
                continue;
            }
            for c in col..ncols {
                let sub = (f as u128 * m[rank][c] as u128 % p as u128) as u64;
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let (g, x, _) = ext_gcd(a as i128, p as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(p as i128) as u64
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&a| a as i128).collect()).collect();
    match rank_i128(m) {
        Some(r) => r,
        None => {
            let big: Vec<Vec<BigInt>> =
                rows.iter().map(|r| r.iter().map(|&a| BigInt::from(a)).collect()).collect();
            rank_bigint(&big)
        }
    }
}

/// Fraction-free elimination with row content removal; `None` on overflow.
fn rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        // prefer a unit pivot to keep entries small
        let candidates = (rank..m.len()).filter(|&r| m[r][col] != 0);
        let Some(piv) = candidates.min_by_key(|&r| m[r][col].unsigned_abs()) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][col];
        for r in rank + 1..m.len() {
            let f = m[r][col];
            if f == 0 {
                continue;
            }
            let g = p.gcd(&f);
            let (pm, fm) = (p / g, f / g);
            let mut content = 0i128;
            for c in col..ncols {
                let v = m[r][c].checked_mul(pm)?.checked_sub(m[rank][c].checked_mul(fm)?)?;
                m[r][c] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for c in col..ncols {
                    m[r][c] /= content;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Some(rank)
}

/// Rank of a `BigInt` matrix over `Q` by fraction-free elimination.
pub fn rank_bigint(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let mut m = rows.to_vec();
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][col].clone();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..ncols {
                let v = &m[r][c] * &p - &m[rank][c] * &f;
                m[r][c] = v;
            }
            let content = m[r][col..].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if content > BigInt::one() {
                for c in col..ncols {
                    m[r][c] /= &content;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Basis of the right null space `{x : M x = 0}` over `Q`, each vector
/// scaled to coprime integers.
pub fn nullspace_rational(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&a| BigRational::from_integer(a.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][col].recip();
        for c in 0..ncols {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let sub = &f * &m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); ncols];
            v[fc] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][fc].clone();
            }
            primitive_integer_vector(&v)
        })
        .collect()
}

/// Scales a rational vector to a coprime integer vector with the same
/// direction.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    normalize_content(ints)
}

/// Divides an integer vector by the gcd of its entries (sign preserved).
pub fn normalize_content(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Row-style Hermite normal form of an integer matrix: nonzero rows in
/// echelon form with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    if rows.is_empty() {
        return Ok(vec![]);
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&a| a as i128).collect()).collect();
    let mut r0 = 0;
    for col in 0..ncols {
        if r0 == m.len() {
            break;
        }
        // Euclid on column `col` among rows r0..
        loop {
            let nz: Vec<usize> = (r0..m.len()).filter(|&r| m[r][col] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let piv = *nz.iter().min_by_key(|&&r| m[r][col].abs()).unwrap();
            m.swap(r0, piv);
            let mut done = true;
            for r in r0 + 1..m.len() {
                if m[r][col] != 0 {
                    let q = m[r][col].div_euclid(m[r0][col]);
                    for c in 0..ncols {
                        m[r][c] = m[r][c]
                            .checked_sub(q.checked_mul(m[r0][c]).ok_or(Error::Overflow)?)
                            .ok_or(Error::Overflow)?;
                    }
                    if m[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[r0][col] == 0 {
            continue;
        }
        if m[r0][col] < 0 {
            for c in 0..ncols {
                m[r0][c] = -m[r0][c];
            }
        }
        let p = m[r0][col];
        for r in 0..r0 {
            let q = m[r][col].div_euclid(p);
            if q != 0 {
                for c in 0..ncols {
                    m[r][c] = m[r][c]
                        .checked_sub(q.checked_mul(m[r0][c]).ok_or(Error::Overflow)?)
                        .ok_or(Error::Overflow)?;
                }
            }
        }
        r0 += 1;
    }
    m.truncate(r0);
    m.into_iter()
        .map(|r| r.into_iter().map(|a| i64::try_from(a).map_err(|_| Error::Overflow)).collect())
        .collect()
}

/// Basis of the integer kernel `{x in Z^n : A x = 0}` of an `m x n` matrix,
/// returned in Hermite normal form.
pub fn integer_kernel(a: &[Vec<i64>], n: usize) -> Result<Vec<Vec<i64>>> {
    // Row-reduce [A^T | I_n]; rows whose A^T part vanishes span the kernel.
    let m = a.len();
    let mut rows: Vec<Vec<i128>> = (0..n)
        .map(|j| {
            let mut r: Vec<i128> = a.iter().map(|row| row[j] as i128).collect();
            r.extend((0..n).map(|k| (k == j) as i128));
            r
        })
        .collect();
    let width = m + n;
    let mut r0 = 0;
    for col in 0..m {
        loop {
            let nz: Vec<usize> = (r0..n).filter(|&r| rows[r][col] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let piv = *nz.iter().min_by_key(|&&r| rows[r][col].abs()).unwrap();
            rows.swap(r0, piv);
            let mut done = true;
            for r in r0 + 1..n {
                if rows[r][col] != 0 {
                    let q = rows[r][col].div_euclid(rows[r0][col]);
                    for c in 0..width {
                        rows[r][c] = rows[r][c]
                            .checked_sub(q.checked_mul(rows[r0][c]).ok_or(Error::Overflow)?)
                            .ok_or(Error::Overflow)?;
                    }
                    if rows[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows.get(r0).is_some_and(|r| r[col] != 0) {
            r0 += 1;
        }
        if r0 == n {
            break;
        }
    }
    let kernel: Vec<Vec<i64>> = rows[r0..]
        .iter()
        .map(|r| r[m..].iter().map(|&x| i64::try_from(x).map_err(|_| Error::Overflow)).collect())
        .collect::<Result<_>>()?;
    hermite_normal_form(&kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(101));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(91));
        assert!(Field::from_characteristic(4).is_err());
        assert_eq!(Field::from_characteristic(0).unwrap(), Field::Rational);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2: full rank over Q, rank 1 over F_2
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&m, Field::Rational), 2);
        assert_eq!(rank(&m, Field::Prime(2)), 1);
        assert_eq!(rank(&m, Field::Prime(3)), 2);
    }

    #[test]
    fn rank_bigint_matches() {
        let m = vec![vec![2, 4, 6], vec![1, 2, 3], vec![0, 1, 1]];
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(rank(&m, Field::Rational), 2);
        assert_eq!(rank_bigint(&big), 2);
    }

    #[test]
    fn nullspace_of_cycle() {
        // boundary of a square: 4 vertices x 4 edges
        let m = vec![
            vec![-1, 0, 0, 1],
            vec![1, -1, 0, 0],
            vec![0, 1, -1, 0],
            vec![0, 0, 1, -1],
        ];
        let ns = nullspace_rational(&m, 4);
        assert_eq!(ns.len(), 1);
        assert!(ns[0].iter().all(|x| x.abs() == BigInt::one()));
    }

    #[test]
    fn hnf_basic() {
        let h = hermite_normal_form(&[vec![2, 4], vec![3, 1]]).unwrap();
        assert_eq!(h, vec![vec![1, 7], vec![0, 10]]);
    }

    #[test]
    fn kernel_of_all_ones() {
        let k = integer_kernel(&[vec![1, 1, 1]], 3).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(v.iter().sum::<i64>(), 0);
        }
        // the kernel must be saturated: determinant of HNF pivots is 1
        assert_eq!(k, vec![vec![1, 0, -1], vec![0, 1, -1]]);
    }

    #[test]
    fn kernel_of_quartic_matrix() {
        let a = vec![vec![0, 1, 2, 3, 4], vec![4, 3, 2, 1, 0]];
        let k = integer_kernel(&a, 5).unwrap();
        assert_eq!(k.len(), 3);
        for v in &k {
            for row in &a {
                assert_eq!(row.iter().zip(v).map(|(x, y)| x * y).sum::<i64>(), 0);
            }
        }
    }
}
