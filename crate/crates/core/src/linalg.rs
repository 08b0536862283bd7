//! Exact elimination. Rational matrices go through fraction-free (Bareiss)
//! elimination on integer rows; number-field matrices use plain Gauss.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{int, Field, Rat};

/// Echelon data from fraction-free elimination.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let den = row.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    row.iter().map(|c| (c * int(&den)).to_integer()).collect()
}

/// Bareiss elimination. Pivot per column: the entry of largest absolute
/// value among the remaining rows, ties to the lowest row index.
pub fn bareiss(rows: &[Vec<Rat>], ncols: usize) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "row length");
            integer_row(r)
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut k = 0;
    for c in 0..ncols {
        if k == a.len() {
            break;
        }
        let mut best: Option<usize> = None;
        for i in k..a.len() {
            if !a[i][c].is_zero() && best.is_none_or(|b| a[i][c].abs() > a[b][c].abs()) {
                best = Some(i);
            }
        }
        let Some(b) = best else { continue };
        a.swap(k, b);
        for i in k + 1..a.len() {
            for j in c + 1..ncols {
                let v = &a[k][c] * &a[i][j] - &a[i][c] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[k][c].clone();
        pivots.push(c);
        k += 1;
    }
    a.truncate(k);
    Echelon { rows: a, pivots, ncols }
}

pub fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    bareiss(rows, ncols).pivots.len()
}

/// Primitive integer multiple with positive first nonzero entry.
pub fn content_normalize(v: &[Rat]) -> Vec<Rat> {
    let ints = integer_row(v);
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return v.to_vec();
    }
    let first_neg = ints.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
    let g = if first_neg { -g } else { g };
    ints.iter().map(|c| Rat::from_integer(c / &g)).collect()
}

/// Kernel basis: one vector per free column, content-normalized.
pub fn kernel(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let e = bareiss(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); ncols];
            x[f] = Rat::one();
            for (r, &pc) in e.pivots.iter().enumerate().rev() {
                let mut acc = Rat::zero();
                for j in pc + 1..ncols {
                    if !e.rows[r][j].is_zero() && !x[j].is_zero() {
                        acc += int(&e.rows[r][j]) * &x[j];
                    }
                }
                x[pc] = -acc / int(&e.rows[r][pc]);
            }
            content_normalize(&x)
        })
        .collect()
}

/// Some solution of `A x = b`, if one exists.
pub fn solve(rows: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let n = rows.first().map_or(0, |r| r.len());
    let aug: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(-b.clone());
            r
        })
        .collect();
    kernel(&aug, n + 1)
        .into_iter()
        .rev()
        .find(|v| !v[n].is_zero())
        .map(|v| {
            let s = v[n].clone();
            v[..n].iter().map(|c| c / &s).collect()
        })
}

/// Kernel over an arbitrary exact field (Gauss-Jordan, first nonzero pivot).
pub fn kernel_field<F: Field>(rows: &[Vec<F>], ncols: usize, zero: &F) -> Vec<Vec<F>> {
    let mut a: Vec<Vec<F>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut k = 0;
    for c in 0..ncols {
        let Some(b) = (k..a.len()).find(|&i| !a[i][c].is_zero_elem()) else { continue };
        a.swap(k, b);
        let inv = a[k][c].inverse().unwrap();
        for j in 0..ncols {
            a[k][j] = a[k][j].clone() * inv.clone();
        }
        for i in 0..a.len() {
            if i != k && !a[i][c].is_zero_elem() {
                let f = a[i][c].clone();
                for j in 0..ncols {
                    a[i][j] = a[i][j].clone() - f.clone() * a[k][j].clone();
                }
            }
        }
        pivots.push(c);
        k += 1;
        if k == a.len() {
            break;
        }
    }
    let one = zero.one_like();
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut x = vec![zero.clone(); ncols];
            x[f] = one.clone();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -a[r][f].clone();
            }
            x
        })
        .collect()
}

pub fn rank_field<F: Field>(rows: &[Vec<F>], ncols: usize, zero: &F) -> usize {
    ncols - kernel_field(rows, ncols, zero).len()
}

/// Determinant over an arbitrary exact field (plain Gaussian elimination).
pub fn det_field<F: Field>(m: &[Vec<F>], one: &F) -> F {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut acc = one.clone();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero_elem()) else { return one.zero_like() };
        if p != k {
            a.swap(p, k);
            acc = -acc;
        }
        let inv = a[k][k].inverse().unwrap();
        for i in k + 1..n {
            let f = a[i][k].clone() * inv.clone();
            for j in k..n {
                a[i][j] = a[i][j].clone() - f.clone() * a[k][j].clone();
            }
        }
        acc = acc * a[k][k].clone();
    }
    acc
}

/// Determinant of a square rational matrix by fraction-free elimination.
pub fn det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    // Bareiss with row swaps tracked
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut sign = Rat::one();
    let mut prev = Rat::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return Rat::zero() };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Inverse of a square rational matrix.
pub fn inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Rat> = (0..n).map(|i| if i == j { Rat::one() } else { Rat::zero() }).collect();
        cols.push(solve(m, &e)?);
    }
    if rank(m, n) < n {
        return None;
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let m = b[0].len();
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| row.iter().zip(b).fold(Rat::zero(), |acc, (x, brow)| acc + x * &brow[j]))
                .collect()
        })
        .collect()
}

pub fn mat_vec<F: Field>(a: &[Vec<Rat>], v: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(v[0].zero_like(), |acc, (x, y)| acc + y.embed(x) * y.clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    /// Textbook rational Gauss elimination, used as an oracle.
    pub(crate) fn naive_rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
        let mut a = rows.to_vec();
        let mut r = 0;
        for c in 0..ncols {
            if let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) {
                a.swap(r, p);
                for i in 0..a.len() {
                    if i != r && !a[i][c].is_zero() {
                        let f = &a[i][c] / &a[r][c];
                        for j in 0..ncols {
                            let v = &f * &a[r][j];
                            a[i][j] -= v;
                        }
                    }
                }
                r += 1;
            }
        }
        r
    }

    #[test]
    fn small_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&a, 3), 1);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                assert!(row.iter().zip(v).fold(Rat::zero(), |acc, (x, y)| acc + x * y).is_zero());
            }
        }
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 0, 1], &[1, 3, 0], &[0, 1, 1]]);
        assert_eq!(det(&a), rat(7));
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&a, &[rat(1), rat(3)]).is_none());
        let x = solve(&a, &[rat(1), rat(2)]).unwrap();
        assert_eq!(&x[0] + &x[1], rat(1));
    }

    #[test]
    fn field_kernel_agrees() {
        let a = vec![vec![ratio(1, 2), rat(1), rat(0)], vec![rat(1), rat(2), rat(0)]];
        assert_eq!(rank_field(&a, 3, &rat(0)), rank(&a, 3));
    }

    proptest! {
        #[test]
        fn bareiss_matches_naive(rows in 1usize..12, cols in 1usize..15, seed in prop::collection::vec(-3i64..4, 180)) {
            let a: Vec<Vec<Rat>> = (0..rows).map(|i| (0..cols).map(|j| ratio(seed[i * 15 + j] % 3, 1 + (seed[(i + j) % 180].abs() % 2))).collect()).collect();
            prop_assert_eq!(rank(&a, cols), naive_rank(&a, cols));
            for v in kernel(&a, cols) {
                for row in &a {
                    prop_assert!(row.iter().zip(&v).fold(Rat::zero(), |acc, (x, y)| acc + x * y).is_zero());
                }
            }
        }
    }
}
