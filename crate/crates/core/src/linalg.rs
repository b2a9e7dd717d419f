//! Exact dense linear algebra over `ℚ` and `ℚ(q, t)`.

use num_traits::Zero;

use crate::scalars::{Rational, ScalarQT};

/// Rank by Gaussian elimination over `ℚ`.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let pivot_row: Vec<Rational> = rows[r].iter().map(|x| x / &pivot).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &f * y;
            }
        }
        rows[r] = pivot_row;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// `x · y`, skipping zero entries of `x`.
pub fn mat_mul(x: &[Vec<ScalarQT>], y: &[Vec<ScalarQT>]) -> Vec<Vec<ScalarQT>> {
    let cols = y.first().map_or(0, Vec::len);
    x.iter()
        .map(|row| {
            let mut out = vec![ScalarQT::zero(); cols];
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (o, b) in out.iter_mut().zip(&y[k]) {
                    if !b.is_zero() {
                        *o += &(a * b);
                    }
                }
            }
            out
        })
        .collect()
}

pub fn transpose(x: &[Vec<ScalarQT>]) -> Vec<Vec<ScalarQT>> {
    let cols = x.first().map_or(0, Vec::len);
    (0..cols).map(|j| x.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn is_identity(x: &[Vec<ScalarQT>]) -> bool {
    x.iter().enumerate().all(|(i, row)| {
        row.len() == x.len() && row.iter().enumerate().all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    #[test]
    fn rank_of_small_matrices() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(rank(m), 1);
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)], vec![int(1), int(1)]];
        assert_eq!(rank(m), 2);
        assert_eq!(rank(Vec::new()), 0);
    }

    #[test]
    fn identity_products() {
        let q = ScalarQT::q();
        let x = vec![vec![q.clone(), ScalarQT::zero()], vec![ScalarQT::one(), ScalarQT::one()]];
        let inv = vec![vec![q.recip().unwrap(), ScalarQT::zero()], vec![-&q.recip().unwrap(), ScalarQT::one()]];
        assert!(is_identity(&mat_mul(&x, &inv)));
        assert!(!is_identity(&x));
    }
}
