#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use regcd_core::{Field, Monomial, Polynomial, Ring, RingSpec, Scalar};

/// Rank over the rationals by fraction-free elimination.
pub fn rank_q(a: Vec<Vec<i128>>) -> usize {
    let mut a: Vec<Vec<BigInt>> = a.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                a[r][k] = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]) / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn rank_mod(mut a: Vec<Vec<i128>>, p: i128) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let inv = |x: i128| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let iv = inv(a[rank][c]);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c] * iv % p;
                for k in 0..cols {
                    a[r][k] = (a[r][k] - f * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank(field: Field, a: Vec<Vec<i128>>) -> usize {
    match field {
        Field::Rationals => rank_q(a),
        f => rank_mod(a, f.characteristic() as i128),
    }
}

/// `dim H^i` of the Čech complex of `k[z]/I` on the monomials `f` in fine
/// degree `u`, built directly: `(M_{f_sigma})_u` is the direct limit of
/// `M_{u + N deg f_sigma}` under multiplication by `f_sigma`, evaluated at
/// `N` equal to twice the stabilization bound.
pub fn brute_cech(field: Field, ideal: &[Vec<u32>], f: &[Vec<u32>], i: usize, u: &[i64]) -> usize {
    let n = u.len();
    let s = f.len();
    let top = ideal.iter().flatten().copied().max().unwrap_or(0) as i64;
    let k = top + u.iter().map(|x| x.abs()).max().unwrap_or(0) + 1;
    let big = 2 * k;
    let alive = |mask: usize| -> bool {
        let v: Vec<i64> = (0..n)
            .map(|j| {
                let d: i64 = (0..s).filter(|l| mask >> l & 1 == 1).map(|l| f[l][j] as i64).sum();
                u[j] + big * d
            })
            .collect();
        if v.iter().any(|&x| x < 0) {
            return false;
        }
        !ideal.iter().any(|g| g.iter().zip(&v).all(|(&a, &b)| a as i64 <= b))
    };
    let of_size = |j: usize| -> Vec<usize> {
        (0..1usize << s)
            .filter(|m| m.count_ones() as usize == j && alive(*m))
            .collect()
    };
    let diff = |j: usize| -> Vec<Vec<i128>> {
        let src = of_size(j);
        let dst = of_size(j + 1);
        dst.iter()
            .map(|&t| {
                src.iter()
                    .map(|&sm| {
                        if sm & t != sm {
                            return 0;
                        }
                        let added = (t & !sm).trailing_zeros();
                        let before = (sm & ((1 << added) - 1)).count_ones();
                        if before % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let dim = of_size(i).len();
    let out = if i < s { rank(field, diff(i)) } else { 0 };
    let inc = if i > 0 { rank(field, diff(i - 1)) } else { 0 };
    dim - out - inc
}

pub fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rationals),
        Just(Field::prime(2).unwrap()),
        Just(Field::prime(3).unwrap()),
        Just(Field::prime(5).unwrap()),
        Just(Field::prime(32003).unwrap()),
    ]
}

pub fn ring(field: Field, m: usize, t: usize) -> Ring {
    RingSpec::standard(field, m, t).unwrap()
}

/// Homogeneous polynomial of degree `d` in `n` variables with up to four terms.
pub fn homogeneous(n: usize, d: u32) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=d, n), -4i64..=4), 1..=4).prop_map(move |ts| {
        ts.into_iter()
            .map(|(e, c)| (spread(&e, d), c))
            .collect()
    })
}

/// Rescales an exponent draft to total degree `d`.
fn spread(e: &[u32], d: u32) -> Vec<u32> {
    let mut out = vec![0u32; e.len()];
    let weights: u32 = e.iter().sum::<u32>().max(1);
    let mut left = d;
    for (j, &w) in e.iter().enumerate() {
        let take = (w * d / weights).min(left);
        out[j] = take;
        left -= take;
    }
    out[0] += left;
    out
}

pub fn poly(ring: &Ring, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(
        ring,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exps(e), ring.field.from_i64(*c)))
            .collect(),
    )
}

pub fn scalar(field: Field, num: i64, den: i64) -> Scalar {
    match field {
        Field::Rationals => Scalar::rational(num, den).unwrap(),
        f => {
            let d = f.from_i64(den);
            if d.is_zero() {
                f.from_i64(num)
            } else {
                &f.from_i64(num) * &d.inv()
            }
        }
    }
}
