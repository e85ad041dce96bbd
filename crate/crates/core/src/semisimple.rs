//! Killing form, solvable radical and nilpotency criteria for elements.

use num_traits::Zero;

use crate::error::{ensure_len, Error, Result};
use crate::exactlinalg::{
    dot, generalized_eigenspace, kernel, rank, solve, Matrix, Scalar, Subspace,
};
use crate::liecore::{Element, LieAlgebra};

/// Gram matrix of the Killing form `κ(x, y) = tr(ad x · ad y)` in the
/// stored basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingForm {
    gram: Matrix,
}

impl KillingForm {
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        Ok(dot(x, &self.gram.mul_vec(y)?))
    }

    pub fn rank(&self) -> usize {
        rank(&self.gram)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.gram.rows()
    }
}

pub fn killing_matrix(l: &LieAlgebra) -> KillingForm {
    let n = l.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| l.ad_basis(i)).collect();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            // tr(A·B) = Σ_{k,m} A[k][m]·B[m][k]
            let mut t = Scalar::zero();
            for k in 0..n {
                for m in 0..n {
                    let a = &ads[i][(k, m)];
                    if a.is_zero() {
                        continue;
                    }
                    let b = &ads[j][(m, k)];
                    if !b.is_zero() {
                        t += a * b;
                    }
                }
            }
            gram[(j, i)] = t.clone();
            gram[(i, j)] = t;
        }
    }
    KillingForm { gram }
}

/// `{ x : κ(x, v) = 0 for every basis vector v of s }`.
pub fn killing_orth(l: &LieAlgebra, s: &Subspace) -> Result<Subspace> {
    ensure_len(l.dim(), s.ambient_dim())?;
    orth_with(&killing_matrix(l), s)
}

fn orth_with(kf: &KillingForm, s: &Subspace) -> Result<Subspace> {
    let n = kf.gram.rows();
    if s.is_zero() {
        return Ok(Subspace::full(n));
    }
    let rows = s
        .basis()
        .iter()
        .map(|v| kf.gram.mul_vec(v))
        .collect::<Result<Vec<_>>>()?;
    Ok(kernel(&Matrix::from_rows(rows)?))
}

/// The solvable radical, as the Killing-orthogonal of `[g, g]`.
///
/// The result is checked before returning: it must be a solvable ideal
/// whose quotient has nondegenerate Killing form. A failed check yields
/// [`Error::Internal`].
pub fn radical(l: &LieAlgebra) -> Result<Subspace> {
    let rad = orth_with(&killing_matrix(l), &l.derived_algebra())?;
    if !l.is_ideal(&rad)? {
        return Err(Error::Internal("radical is not an ideal".into()));
    }
    if !l.restrict(&rad)?.is_solvable() {
        return Err(Error::Internal("radical is not solvable".into()));
    }
    let q = l.quotient(&rad)?;
    if !killing_matrix(q.target()).is_nondegenerate() {
        return Err(Error::Internal(
            "quotient by the radical has degenerate Killing form".into(),
        ));
    }
    Ok(rad)
}

/// Semisimplicity, decided both by a zero radical and by nondegeneracy of
/// the Killing form; the two must agree.
pub fn is_semisimple(l: &LieAlgebra) -> Result<bool> {
    let by_radical = radical(l)?.is_zero();
    let by_killing = killing_matrix(l).is_nondegenerate();
    if by_radical != by_killing {
        return Err(Error::Internal(
            "radical and Killing-form semisimplicity tests disagree".into(),
        ));
    }
    Ok(by_radical)
}

/// `ad(e)^dim = 0`.
pub fn is_nilpotent_element_power(l: &LieAlgebra, e: &Element) -> Result<bool> {
    Ok(l.ad(e)?.pow(l.dim() as u64)?.is_zero())
}

/// On a semisimple algebra, `e` is nilpotent iff `e ∈ [e, g]`, i.e. `e` lies
/// in the image of `ad(e)`. One linear solve.
///
/// Semisimplicity is checked through nondegeneracy of the Killing form.
pub fn is_nilpotent_element_image(l: &LieAlgebra, e: &Element) -> Result<bool> {
    ensure_len(l.dim(), e.dim())?;
    if !killing_matrix(l).is_nondegenerate() {
        return Err(Error::NotSemisimple);
    }
    Ok(solve(&l.ad(e)?, e.coords())?.is_some())
}

/// For a derivation `d`, a nonzero `λ` and `a` in the root subspace of `d`
/// for `λ`, the left and right multiplications by `a` must be nilpotent.
/// Returns whether they are; `false` would falsify that statement.
pub fn shift_nilpotence_check(
    l: &LieAlgebra,
    d: &Matrix,
    lambda: &Scalar,
    a: &Element,
) -> Result<bool> {
    ensure_len(l.dim(), a.dim())?;
    if !l.is_derivation(d)? {
        return Err(Error::NotDerivation);
    }
    if lambda.is_zero() {
        return Err(Error::ZeroEigenvalue);
    }
    if !generalized_eigenspace(d, lambda)?.contains(a.coords())? {
        return Err(Error::OutsideRootSpace(lambda.to_string()));
    }
    let n = l.dim() as u64;
    let left = l.ad(a)?;
    let right = left.scale(&Scalar::from_integer((-1).into()));
    Ok(left.pow(n)?.is_zero() && right.pow(n)?.is_zero())
}
