use super::{Element, LieAlgebra};
use crate::error::{ensure_len, Error, Result};
use crate::exactlinalg::{kernel, rank, Matrix, Subspace};

/// A surjective Lie algebra homomorphism `source → target`, given by its
/// matrix (target_dim × source_dim).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    source: LieAlgebra,
    target: LieAlgebra,
    matrix: Matrix,
}

impl QuotientMap {
    pub(crate) fn new_unchecked(source: LieAlgebra, target: LieAlgebra, matrix: Matrix) -> Self {
        debug_assert!(Self::check(&source, &target, &matrix));
        Self {
            source,
            target,
            matrix,
        }
    }

    /// Wraps an explicit homomorphism after checking full row rank and
    /// bracket compatibility on all basis pairs.
    pub fn from_homomorphism(
        source: LieAlgebra,
        target: LieAlgebra,
        matrix: Matrix,
    ) -> Result<Self> {
        ensure_len(target.dim(), matrix.rows())?;
        ensure_len(source.dim(), matrix.cols())?;
        if !Self::check(&source, &target, &matrix) {
            return Err(Error::NotHomomorphism);
        }
        Ok(Self {
            source,
            target,
            matrix,
        })
    }

    /// The identity map of an algebra.
    pub fn identity(algebra: &LieAlgebra) -> Self {
        let n = algebra.dim();
        Self::new_unchecked(algebra.clone(), algebra.clone(), Matrix::identity(n))
    }

    fn check(source: &LieAlgebra, target: &LieAlgebra, matrix: &Matrix) -> bool {
        if rank(matrix) != target.dim() {
            return false;
        }
        let n = source.dim();
        let cols: Vec<_> = (0..n).map(|j| matrix.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = matrix
                    .mul_vec(&source.bracket_basis(i, j))
                    .expect("matrix width equals source dimension");
                let rhs = target
                    .bracket_coords(&cols[i], &cols[j])
                    .expect("matrix height equals target dimension");
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        Ok(Element::new(self.matrix.mul_vec(x.coords())?))
    }

    pub fn kernel(&self) -> Subspace {
        kernel(&self.matrix)
    }
}
