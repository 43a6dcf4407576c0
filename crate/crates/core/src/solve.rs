//! Exact integer linear algebra on very small systems.
//!
//! Everything here works over `i128` with checked arithmetic.  Inputs are
//! bounded by [`ENTRY_LIMIT`] before any elimination runs, which keeps every
//! intermediate value (Bareiss minors of at most 6x6 matrices) well inside
//! the `i128` range.

use crate::error::{Error, Result};

/// Largest absolute value admitted into an exact elimination.
pub(crate) const ENTRY_LIMIT: i128 = 1 << 20;

pub(crate) const MAX_K: usize = 6;

fn overflow() -> Error {
    Error::TooLarge("integer overflow in exact linear solve".into())
}

/// Fraction-free (Bareiss) determinant of the leading k x k block.
pub(crate) fn det(a: &mut [[i128; MAX_K]; MAX_K], k: usize) -> Result<i128> {
    debug_assert!(k <= MAX_K);
    if k == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for col in 0..k {
        let pivot = (col..k).find(|&r| a[r][col] != 0);
        let Some(pivot) = pivot else {
            return Ok(0);
        };
        if pivot != col {
            a.swap(pivot, col);
            sign = -sign;
        }
        for r in col + 1..k {
            for c in col + 1..k {
                let hi = a[col][col].checked_mul(a[r][c]).ok_or_else(overflow)?;
                let lo = a[r][col].checked_mul(a[col][c]).ok_or_else(overflow)?;
                // exact division by the previous pivot (Bareiss identity)
                a[r][c] = hi.checked_sub(lo).ok_or_else(overflow)? / prev;
            }
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    Ok(sign * a[k - 1][k - 1])
}

/// Solves `A x = b` by Cramer's rule; returns `(det A, [det A_i])`.
///
/// The caller interprets `x_i = det A_i / det A`.  Returns `det A = 0`
/// without the numerators when the system is singular.
pub(crate) fn cramer(
    a: &[[i128; MAX_K]; MAX_K],
    b: &[i128; MAX_K],
    k: usize,
) -> Result<(i128, [i128; MAX_K])> {
    let mut work = *a;
    let d = det(&mut work, k)?;
    let mut nums = [0i128; MAX_K];
    if d == 0 {
        return Ok((0, nums));
    }
    for i in 0..k {
        let mut m = *a;
        for r in 0..k {
            m[r][i] = b[r];
        }
        nums[i] = det(&mut m, k)?;
    }
    Ok((d, nums))
}

/// Calls `f` with every k-subset of `0..n` (as a slice of indices) until it
/// reports success or the subsets are exhausted.
pub(crate) fn any_combination<F>(n: usize, k: usize, mut f: F) -> Result<bool>
where
    F: FnMut(&[usize]) -> Result<bool>,
{
    if k > n {
        return Ok(false);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx)? {
            return Ok(true);
        }
        // advance to the next combination
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return Ok(false);
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i128]]) -> [[i128; MAX_K]; MAX_K] {
        let mut m = [[0; MAX_K]; MAX_K];
        for (i, r) in rows.iter().enumerate() {
            m[i][..r.len()].copy_from_slice(r);
        }
        m
    }

    #[test]
    fn det_small() {
        let mut m = mat(&[&[2, 1], &[1, 2]]);
        assert_eq!(det(&mut m, 2).unwrap(), 3);
        let mut m = mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(det(&mut m, 3).unwrap(), 0);
        let mut m = mat(&[&[3, 0, 0], &[0, 0, 5], &[0, 2, 0]]);
        assert_eq!(det(&mut m, 3).unwrap(), -30);
    }

    #[test]
    fn cramer_solves() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let a = mat(&[&[1, 1], &[1, -1]]);
        let b = {
            let mut b = [0; MAX_K];
            b[0] = 3;
            b[1] = 1;
            b
        };
        let (d, nums) = cramer(&a, &b, 2).unwrap();
        assert_eq!(nums[0] / d, 2);
        assert_eq!(nums[1] / d, 1);
    }

    #[test]
    fn combinations_visit_all() {
        let mut seen = Vec::new();
        any_combination(4, 2, |s| {
            seen.push(s.to_vec());
            Ok(false)
        })
        .unwrap();
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
    }
}
