//! Exact nilpotency test for square rational matrices.
//!
//! `X` is nilpotent iff `X^n = 0`. Instead of forming `X^n` by squaring,
//! the test scales `X` to an integer matrix and walks the powers `X, X², …`
//! using sparse-times-dense products. It stops as soon as a power vanishes
//! (nilpotent) or a power has nonzero trace (a nilpotent matrix has
//! nilpotent powers, all of trace zero). Entries are kept in `i128` with
//! overflow checks and the walk is repeated over `BigInt` on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Matrix;

trait Entry: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `acc += a·b`; `false` on overflow.
    fn mul_add(acc: &mut Self, a: &Self, b: &Self) -> bool;
    fn add(acc: &mut Self, b: &Self) -> bool;
}

impl Entry for i128 {
    fn zero() -> Self {
        0
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn mul_add(acc: &mut Self, a: &Self, b: &Self) -> bool {
        match a.checked_mul(*b).and_then(|p| acc.checked_add(p)) {
            Some(v) => {
                *acc = v;
                true
            }
            None => false,
        }
    }

    fn add(acc: &mut Self, b: &Self) -> bool {
        match acc.checked_add(*b) {
            Some(v) => {
                *acc = v;
                true
            }
            None => false,
        }
    }
}

impl Entry for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn mul_add(acc: &mut Self, a: &Self, b: &Self) -> bool {
        *acc += a * b;
        true
    }

    fn add(acc: &mut Self, b: &Self) -> bool {
        *acc += b;
        true
    }
}

/// `None` on overflow.
fn walk_powers<T: Entry>(n: usize, sparse_rows: &[Vec<(usize, T)>]) -> Option<bool> {
    let mut power = vec![T::zero(); n * n];
    for (i, row) in sparse_rows.iter().enumerate() {
        for (k, v) in row {
            power[i * n + k] = v.clone();
        }
    }
    for exponent in 1..=n {
        if power.iter().all(T::is_zero) {
            return Some(true);
        }
        let mut trace = T::zero();
        for i in 0..n {
            if !T::add(&mut trace, &power[i * n + i]) {
                return None;
            }
        }
        if !trace.is_zero() || exponent == n {
            return Some(false);
        }
        let mut next = vec![T::zero(); n * n];
        for (i, row) in sparse_rows.iter().enumerate() {
            for (k, v) in row {
                let src = &power[k * n..(k + 1) * n];
                let dst = &mut next[i * n..(i + 1) * n];
                for (d, s) in dst.iter_mut().zip(src) {
                    if !s.is_zero() && !T::mul_add(d, v, s) {
                        return None;
                    }
                }
            }
        }
        power = next;
    }
    Some(true)
}

/// True iff the square matrix `m` is nilpotent (`m^n = 0` for side `n`).
///
/// Panics on a non-square matrix.
pub fn is_nilpotent(m: &Matrix) -> bool {
    assert!(m.is_square(), "nilpotency is defined for square matrices");
    let n = m.rows();
    if n == 0 || m.is_zero() {
        return true;
    }
    let scale = m
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let big_rows: Vec<Vec<(usize, BigInt)>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, x.numer() * (&scale / x.denom())))
                .collect()
        })
        .collect();
    let small_rows: Option<Vec<Vec<(usize, i128)>>> = big_rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|(k, v)| v.to_i128().map(|x| (*k, x)))
                .collect()
        })
        .collect();
    if let Some(rows) = small_rows {
        if let Some(answer) = walk_powers(n, &rows) {
            return answer;
        }
    }
    walk_powers(n, &big_rows).expect("BigInt arithmetic does not overflow")
}
