//! Exact Gaussian elimination over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::Rational;

/// Rank of a dense rational matrix given as rows.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let prow: Vec<Rational> = rows[r].iter().map(|x| x / &pivot).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow).skip(c) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        rows[r] = prow;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Determinant of a square rational matrix.
pub fn det(mut rows: Vec<Vec<Rational>>) -> Rational {
    let n = rows.len();
    let mut acc = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            rows.swap(c, p);
            acc = -acc;
        }
        let pivot = rows[c][c].clone();
        acc *= &pivot;
        for i in c + 1..n {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] / &pivot;
            let (top, bottom) = rows.split_at_mut(i);
            for (x, y) in bottom[0].iter_mut().zip(&top[c]).skip(c) {
                *x -= &factor * y;
            }
        }
    }
    acc
}

/// Dimension of the right kernel of an `nrows x ncols` matrix.
pub fn nullity(rows: Vec<Vec<Rational>>, ncols: usize) -> usize {
    ncols - rank(rows)
}

/// Rank of the reduction mod `p`, or `None` if some denominator vanishes
/// mod `p`. Never exceeds the rational rank.
pub fn rank_mod_p(rows: &[Vec<Rational>], p: u64) -> Option<usize> {
    let big_p = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|q| {
                    let num = q.numer().mod_floor(&big_p).to_u64()?;
                    let den = q.denom().mod_floor(&big_p).to_u64()?;
                    (den != 0).then(|| mul_mod(num, inv_mod(den, p), p))
                })
                .collect::<Option<Vec<u64>>>()
        })
        .collect::<Option<_>>()?;
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&prow).skip(c) {
                *x = (*x + p - mul_mod(factor, y, p)) % p;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    Some(r)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut acc, mut b, mut e) = (1, a, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(m(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])), 2);
        assert_eq!(nullity(m(&[&[1, 1, 1]]), 3), 2);
        assert_eq!(rank(Vec::new()), 0);
        assert_eq!(det(m(&[&[0, 1], &[1, 0]])), rat(-1));
        assert_eq!(det(m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]])), rat(18));
        assert_eq!(det(Vec::new()), rat(1));
        // rank drops mod 5 but not over Q
        let a = m(&[&[1, 2], &[3, 1]]);
        assert_eq!(rank(a.clone()), 2);
        assert_eq!(rank_mod_p(&a, 5), Some(1));
        assert_eq!(rank_mod_p(&a, 7), Some(2));
    }
}
