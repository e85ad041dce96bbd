//! Exact rational linear algebra.
//!
//! Everything here works over `BigRational`; no operation rounds. Subspaces
//! are kept in reduced row-echelon form so that equal subspaces compare equal
//! structurally.

mod matrix;
mod nilpotent;
mod poly;
mod subspace;

pub use matrix::Matrix;
pub use nilpotent::is_nilpotent;
pub use poly::{characteristic_polynomial, rational_eigenvalues, rational_roots};
pub use subspace::Subspace;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{ensure_len, Result};

/// Ground-field element: an arbitrary-precision rational in lowest terms.
pub type Scalar = BigRational;

/// Integer-valued scalar.
pub fn int(x: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(x))
}

/// The rational `p/q`. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn int_vec(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| int(x)).collect()
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// `a + c·b`.
pub fn axpy(a: &[Scalar], c: &Scalar, b: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .zip(b)
        .map(|(x, y)| if y.is_zero() { x.clone() } else { x + c * y })
        .collect()
}

/// Reduced row-echelon form together with the pivot columns.
pub(crate) fn rref_with_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            if !a[(r, j)].is_zero() {
                a[(r, j)] = &a[(r, j)] * &inv;
            }
        }
        let pivot_row: Vec<Scalar> = a.row(r).to_vec();
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    a[(i, j)] = &a[(i, j)] - &factor * &pivot_row[j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Reduced row-echelon form of `m` and its rank.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let (reduced, pivots) = rref_with_pivots(m);
    (reduced, pivots.len())
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1
}

/// Solves `a·x = b`. Returns the particular solution with every free
/// variable set to zero, or `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    ensure_len(a.rows(), b.len())?;
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let (reduced, pivots) = rref_with_pivots(&aug);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = reduced[(r, n)].clone();
    }
    Ok(Some(x))
}

/// Kernel and column space of `a`, both canonical.
pub fn kernel_image(a: &Matrix) -> (Subspace, Subspace) {
    let (reduced, pivots) = rref_with_pivots(a);
    let n = a.cols();
    let mut kernel = Vec::new();
    let mut pivot_iter = pivots.iter().peekable();
    for f in 0..n {
        if pivot_iter.peek() == Some(&&f) {
            pivot_iter.next();
            continue;
        }
        let mut x = vec![Scalar::zero(); n];
        x[f] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = -reduced[(r, f)].clone();
        }
        kernel.push(x);
    }
    let kernel = Subspace::span(n, kernel).expect("kernel vectors have ambient length");
    let image =
        Subspace::span(a.rows(), (0..n).map(|j| a.column(j))).expect("columns have ambient length");
    (kernel, image)
}

pub fn kernel(a: &Matrix) -> Subspace {
    kernel_image(a).0
}

pub fn image(a: &Matrix) -> Subspace {
    kernel_image(a).1
}

/// Root subspace of `x` for `lambda`: the kernel of `(x − λ·I)^n`.
pub fn generalized_eigenspace(x: &Matrix, lambda: &Scalar) -> Result<Subspace> {
    let n = x.ensure_square()?;
    let shifted = x.sub(&Matrix::scalar(n, lambda))?;
    Ok(kernel(&shifted.pow(n as u64)?))
}

/// Plain eigenspace `ker(x − λ·I)`.
pub fn eigenspace(x: &Matrix, lambda: &Scalar) -> Result<Subspace> {
    let n = x.ensure_square()?;
    Ok(kernel(&x.sub(&Matrix::scalar(n, lambda))?))
}
