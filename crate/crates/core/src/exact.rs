//! Exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn pow3(k: usize) -> BigRational {
    BigRational::from_integer(num_traits::pow(BigInt::from(3), k))
}

/// Row-reduces `rows` in place and returns the rank.
pub fn row_reduce(rows: &mut [Vec<BigRational>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..width {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    row_reduce(&mut rows.to_vec())
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "solve expects a square system");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    // reduce only the coefficient columns
    let mut rank = 0;
    for col in 0..n {
        let pivot = (rank..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(rank, pivot);
        let inv = aug[rank][col].recip();
        for x in aug[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != rank && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &aug[rank][c];
                    aug[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Dimension of the affine hull of `points`; `None` for no points.
pub fn affine_dimension(points: &[&[BigRational]]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let rows: Vec<Vec<BigRational>> = rest
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    Some(rank(&rows))
}

/// Renders `r` in decimal with exactly `digits` fractional digits, rounding
/// half away from zero.
pub fn to_decimal(r: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = r.abs() * BigRational::from_integer(scale.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let rounded = (scaled + half).floor().to_integer();
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    let sign = if r.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn solves_and_detects_singular() {
        let a = vec![vec![int(1), int(0), int(0)], vec![int(1), int(1), int(0)], vec![int(1), int(1), int(1)]];
        let x = solve(&a, &[int(3), int(9), int(27)]).unwrap();
        assert_eq!(x, vec![int(3), int(6), int(18)]);
        let singular = vec![vec![int(1), int(1)], vec![int(2), int(2)]];
        assert!(solve(&singular, &[int(1), int(2)]).is_none());
    }

    #[test]
    fn ranks() {
        let rows = vec![vec![int(1), int(2)], vec![int(2), int(4)], vec![int(0), int(1)]];
        assert_eq!(rank(&rows), 2);
        let p: Vec<Vec<BigRational>> = vec![vec![int(0), int(0)], vec![int(1), int(1)], vec![int(2), int(2)]];
        let refs: Vec<&[BigRational]> = p.iter().map(Vec::as_slice).collect();
        assert_eq!(affine_dimension(&refs), Some(1));
    }

    #[test]
    fn decimals() {
        assert_eq!(to_decimal(&q(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&q(2, 3), 4), "0.6667");
        assert_eq!(to_decimal(&q(-5, 2), 0), "-3");
        assert_eq!(to_decimal(&q(-1, 1000), 2), "0.00");
        assert_eq!(to_decimal(&int(27), 2), "27.00");
        assert_eq!(to_decimal(&q(-7, 4), 3), "-1.750");
    }
}
