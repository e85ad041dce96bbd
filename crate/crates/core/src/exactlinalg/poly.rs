use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Matrix, Scalar};
use crate::error::Result;

/// Largest integer-root candidate magnitude examined by [`rational_roots`].
const ROOT_SEARCH_LIMIT: u64 = 1_000_000;

/// Characteristic polynomial `det(t·I − m)`, coefficients from degree 0 up.
///
/// Reduces to upper Hessenberg form by exact similarity transforms and then
/// expands the determinant by the Hessenberg recurrence, O(n³).
pub fn characteristic_polynomial(m: &Matrix) -> Result<Vec<Scalar>> {
    let n = m.ensure_square()?;
    let mut h = m.clone();
    for col in 0..n.saturating_sub(2) {
        let target = col + 1;
        let Some(p) = (target..n).find(|&i| !h[(i, col)].is_zero()) else {
            continue;
        };
        if p != target {
            for j in 0..n {
                let t = h[(p, j)].clone();
                h[(p, j)] = h[(target, j)].clone();
                h[(target, j)] = t;
            }
            for i in 0..n {
                let t = h[(i, p)].clone();
                h[(i, p)] = h[(i, target)].clone();
                h[(i, target)] = t;
            }
        }
        let pivot = h[(target, col)].clone();
        for i in target + 1..n {
            if h[(i, col)].is_zero() {
                continue;
            }
            let u = &h[(i, col)] / &pivot;
            for j in 0..n {
                if !h[(target, j)].is_zero() {
                    h[(i, j)] = &h[(i, j)] - &u * &h[(target, j)];
                }
            }
            for r in 0..n {
                if !h[(r, i)].is_zero() {
                    h[(r, target)] = &h[(r, target)] + &u * &h[(r, i)];
                }
            }
        }
    }

    // p[k] is the characteristic polynomial of the leading k×k block.
    let mut p: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]];
    for k in 1..=n {
        let prev = &p[k - 1];
        let mut next = vec![Scalar::zero(); k + 1];
        for (d, c) in prev.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= &h[(k - 1, k - 1)] * c;
        }
        let mut t = Scalar::one();
        for i in (1..k).rev() {
            t *= &h[(i, i - 1)];
            if t.is_zero() {
                break;
            }
            let coeff = &t * &h[(i - 1, k - 1)];
            if coeff.is_zero() {
                continue;
            }
            for (d, c) in p[i - 1].iter().enumerate() {
                next[d] -= &coeff * c;
            }
        }
        p.push(next);
    }
    Ok(p.pop().expect("at least the constant polynomial"))
}

fn eval_int(coeffs: &[BigInt], y: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * y + c)
}

/// Distinct rational roots of a polynomial (coefficients from degree 0 up),
/// in increasing order.
///
/// Roots are found through the rational root theorem after scaling to a
/// monic integer polynomial. Integer candidates larger than one million in
/// magnitude are not examined, so the result is sound but may be incomplete
/// for polynomials with enormous roots.
pub fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut coeffs: Vec<Scalar> = coeffs.to_vec();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let lead = coeffs.last().cloned().expect("non-empty");
    let mut monic: Vec<Scalar> = coeffs.iter().map(|c| c / &lead).collect();
    if monic[0].is_zero() {
        roots.push(Scalar::zero());
        while monic.len() > 1 && monic[0].is_zero() {
            monic.remove(0);
        }
    }
    let degree = monic.len() - 1;
    if degree == 0 {
        return roots;
    }
    // x = y / d turns the monic rational polynomial into a monic integer one.
    let d = monic
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut scaled = Vec::with_capacity(degree + 1);
    let mut power = BigInt::one();
    for i in (0..=degree).rev() {
        let c = &monic[i] * Scalar::from_integer(power.clone());
        debug_assert!(c.is_integer());
        scaled.push(c.to_integer());
        power *= &d;
    }
    scaled.reverse();
    let constant = scaled[0].abs();
    let bound = scaled
        .iter()
        .take(degree)
        .map(|c| c.abs())
        .max()
        .unwrap_or_default()
        + 1u32;
    let limit = bound.to_u64().unwrap_or(u64::MAX).min(ROOT_SEARCH_LIMIT);
    for k in 1..=limit {
        let kb = BigInt::from(k);
        if !(&constant % &kb).is_zero() {
            continue;
        }
        for y in [-kb.clone(), kb] {
            if eval_int(&scaled, &y).is_zero() {
                roots.push(Scalar::new(y, d.clone()));
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Distinct rational eigenvalues of a square matrix, increasing.
pub fn rational_eigenvalues(m: &Matrix) -> Result<Vec<Scalar>> {
    Ok(rational_roots(&characteristic_polynomial(m)?))
}
