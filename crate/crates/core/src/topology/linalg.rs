//! Rank of sparse integer matrices over a field, by incremental row echelon
//! reduction. Two fields are provided: exact rationals and integers modulo
//! the Mersenne prime `2^31 - 1`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub const MODULUS: u64 = (1 << 31) - 1;

pub trait Scalar: Clone {
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `self - factor * other`
    fn sub_mul(&self, factor: &Self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
}

impl Scalar for BigRational {
    fn from_i64(x: i64) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sub_mul(&self, factor: &Self, other: &Self) -> Self {
        self - factor * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

/// An element of `Z / (2^31 - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModP(pub u64);

impl ModP {
    fn pow(self, mut e: u64) -> ModP {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % MODULUS;
            }
            base = base * base % MODULUS;
            e >>= 1;
        }
        ModP(acc)
    }
}

impl Scalar for ModP {
    fn from_i64(x: i64) -> Self {
        ModP(x.rem_euclid(MODULUS as i64) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn sub_mul(&self, factor: &Self, other: &Self) -> Self {
        let prod = factor.0 * other.0 % MODULUS;
        ModP((self.0 + MODULUS - prod) % MODULUS)
    }
    fn div(&self, other: &Self) -> Self {
        assert!(other.0 != 0, "division by zero mod p");
        ModP(self.0 * other.pow(MODULUS - 2).0 % MODULUS)
    }
}

type SparseVec<S> = Vec<(usize, S)>;

/// `a - factor * b` for sorted sparse vectors.
fn sub_scaled<S: Scalar>(a: &[(usize, S)], factor: &S, b: &[(usize, S)]) -> SparseVec<S> {
    let zero = S::from_i64(0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                i += 1;
                j += 1;
                (x.0, x.1.sub_mul(factor, &y.1))
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                i += 1;
                x.clone()
            }
            (Some(x), None) => {
                i += 1;
                x.clone()
            }
            (_, Some(y)) => {
                j += 1;
                (y.0, zero.sub_mul(factor, &y.1))
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

/// Rank of the matrix whose rows are the given sparse integer vectors
/// (entries `(column, value)`, any order, no duplicate columns).
pub fn rank<S: Scalar>(rows: &[Vec<(usize, i64)>]) -> usize {
    let mut pivots: HashMap<usize, SparseVec<S>> = HashMap::new();
    for row in rows {
        let mut r: SparseVec<S> = row
            .iter()
            .filter(|(_, v)| *v != 0)
            .map(|&(c, v)| (c, S::from_i64(v)))
            .collect();
        r.sort_by_key(|e| e.0);
        while let Some((lead, lead_val)) = r.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => r = sub_scaled(&r, &lead_val, p),
                None => {
                    let normalised = r.iter().map(|(c, v)| (*c, v.div(&lead_val))).collect();
                    pivots.insert(lead, normalised);
                    break;
                }
            }
        }
    }
    pivots.len()
}

pub fn rank_exact(rows: &[Vec<(usize, i64)>]) -> usize {
    rank::<BigRational>(rows)
}

pub fn rank_mod_p(rows: &[Vec<(usize, i64)>]) -> usize {
    rank::<ModP>(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<Vec<(usize, i64)>> {
        rows.iter()
            .map(|r| r.iter().copied().enumerate().filter(|e| e.1 != 0).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_exact(&m), 2);
        assert_eq!(rank_mod_p(&m), 2);
        let id = dense(&[&[1, 0], &[0, 1]]);
        assert_eq!(rank_exact(&id), 2);
        assert_eq!(rank_exact(&[]), 0);
    }

    #[test]
    fn rank_drops_modulo_the_prime() {
        // det = 2^31 - 1: full rank over Q, singular mod p.
        let p = MODULUS as i64;
        let m = dense(&[&[1, 1], &[1, 1 + p]]);
        assert_eq!(rank_exact(&m), 2);
        assert_eq!(rank_mod_p(&m), 1);
    }

    #[test]
    fn mod_p_inverse() {
        let x = ModP(12345);
        let one = ModP(1);
        assert_eq!(one.div(&x).0 * x.0 % MODULUS, 1);
        assert_eq!(ModP::from_i64(-1).0, MODULUS - 1);
    }
}
