//! Small dense integer matrices and their characteristic polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;

pub type IntMatrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for (k, &aik) in a[i].iter().enumerate() {
            if aik == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn mat_add(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

pub fn trace(a: &IntMatrix) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

/// `det(xI − A)` by the division-free Berkowitz algorithm.
pub fn charpoly(a: &IntMatrix) -> IntPoly {
    let n = a.len();
    let big: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    // Coefficients highest degree first.
    let mut v: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        // Leading (r+1)×(r+1) block: A_r, column C = A[0..r][r], row R = A[r][0..r].
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-big[r][r].clone());
        let mut w: Vec<BigInt> = (0..r).map(|i| big[i][r].clone()).collect();
        for _ in 0..r {
            let rw: BigInt = (0..r).map(|j| &big[r][j] * &w[j]).sum();
            t.push(-rw);
            w = (0..r)
                .map(|i| (0..r).map(|j| &big[i][j] * &w[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate().take(i + 1) {
                *slot += &t[i - j] * vj;
            }
        }
        v = next;
    }
    IntPoly::from_high_first(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let a = vec![vec![1, 2], vec![3, 4]];
        // x² − 5x − 2
        assert_eq!(charpoly(&a), IntPoly::from_i64(&[-2, -5, 1]));
    }

    #[test]
    fn identity_and_empty() {
        assert_eq!(charpoly(&identity(3)), IntPoly::from_i64(&[-1, 3, -3, 1]));
        assert_eq!(charpoly(&vec![]), IntPoly::one());
    }

    #[test]
    fn cayley_hamilton_on_a_three_by_three() {
        let a = vec![vec![2, -1, 0], vec![4, 0, 3], vec![1, 1, -2]];
        let p = charpoly(&a);
        let mut acc = vec![vec![0i64; 3]; 3];
        let mut pow = identity(3);
        for c in p.coeffs() {
            let c: i64 = c.try_into().unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    acc[i][j] += c * pow[i][j];
                }
            }
            pow = mat_mul(&pow, &a);
        }
        assert!(acc.iter().flatten().all(|&x| x == 0));
    }
}
