use num_traits::Zero;

use super::{axpy, is_zero_vec, kernel, rref_with_pivots, unit_vec, Matrix, Scalar};
use crate::error::{ensure_len, Result};

/// A linear subspace of `Q^n` stored by its reduced row-echelon basis.
///
/// The basis is canonical: two values are equal exactly when they describe
/// the same subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            ensure_len(ambient, v.len())?;
            if !is_zero_vec(&v) {
                rows.push(v);
            }
        }
        if rows.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let (reduced, pivots) = rref_with_pivots(&Matrix::from_rows(rows)?);
        let basis = (0..pivots.len()).map(|r| reduced.row(r).to_vec()).collect();
        Ok(Self {
            ambient,
            basis,
            pivots,
        })
    }

    /// Span of a subset of the coordinate axes.
    pub fn coordinate(ambient: usize, axes: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut vectors = Vec::new();
        for i in axes {
            if i >= ambient {
                return Err(crate::Error::IndexOutOfRange {
                    index: i,
                    dim: ambient,
                });
            }
            vectors.push(unit_vec(ambient, i));
        }
        Self::span(ambient, vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinate directions not used as pivots; they span a complement.
    pub fn complement_axes(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|i| !self.pivots.contains(i))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// `v` minus its components along the echelon basis. Zero exactly when
    /// `v` lies in the subspace; the pivot coordinates of the result vanish.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        ensure_len(self.ambient, v.len())?;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let c = -out[p].clone();
                out = axpy(&out, &c, row);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(is_zero_vec(&self.reduce(v)?))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Vector with the given coordinates in the stored basis.
    pub fn combine(&self, coords: &[Scalar]) -> Result<Vec<Scalar>> {
        ensure_len(self.dim(), coords.len())?;
        let mut out = vec![Scalar::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = axpy(&out, c, row);
            }
        }
        Ok(out)
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        ensure_len(self.ambient, other.ambient)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        ensure_len(self.ambient, other.ambient)?;
        Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Intersection, via the kernel of `[S | −T]`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        ensure_len(self.ambient, other.ambient)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let a = self.dim();
        let mut columns: Vec<Vec<Scalar>> = self.basis.clone();
        columns.extend(
            other
                .basis
                .iter()
                .map(|v| v.iter().map(|x| -x.clone()).collect()),
        );
        let system = Matrix::from_columns(self.ambient, &columns)?;
        let relations = kernel(&system);
        let vectors = relations
            .basis()
            .iter()
            .map(|rel| self.combine(&rel[..a]))
            .collect::<Result<Vec<_>>>()?;
        Self::span(self.ambient, vectors)
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Result<Self> {
        ensure_len(self.ambient, m.cols())?;
        let images = self
            .basis
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Self::span(m.rows(), images)
    }

    /// True when `m` maps the subspace into itself.
    pub fn is_invariant_under(&self, m: &Matrix) -> Result<bool> {
        self.map(m)?.is_subspace_of(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::int_vec;

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::span(n, vs.iter().map(|v| int_vec(v))).unwrap()
    }

    #[test]
    fn contains_examples() {
        assert!(Subspace::zero(2).contains(&int_vec(&[0, 0])).unwrap());
        assert!(!span(2, &[&[1, 0]]).contains(&int_vec(&[0, 1])).unwrap());
        assert!(span(2, &[&[1, 2]]).contains(&int_vec(&[2, 4])).unwrap());
        assert!(span(2, &[&[1, 2]]).contains(&int_vec(&[1])).is_err());
    }

    #[test]
    fn sum_examples() {
        let s = span(2, &[&[1, 1]]);
        assert_eq!(s.sum(&Subspace::zero(2)).unwrap(), s);
        assert!(span(2, &[&[1, 0]])
            .sum(&span(2, &[&[0, 1]]))
            .unwrap()
            .is_full());
        assert_eq!(
            span(3, &[&[1, 1, 0]])
                .sum(&span(3, &[&[1, -1, 0]]))
                .unwrap(),
            span(3, &[&[1, 0, 0], &[0, 1, 0]])
        );
        assert!(s.sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn intersect_examples() {
        let s = span(3, &[&[1, 2, 3], &[0, 1, 1]]);
        assert_eq!(s.intersect(&Subspace::full(3)).unwrap(), s);
        assert!(span(2, &[&[1, 0]])
            .intersect(&span(2, &[&[0, 1]]))
            .unwrap()
            .is_zero());
        let z0 = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let y0 = span(3, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(z0.intersect(&y0).unwrap(), span(3, &[&[1, 0, 0]]));
    }

    #[test]
    fn canonical_form_identifies_equal_spans() {
        assert_eq!(
            span(3, &[&[1, 1, 0], &[1, -1, 0]]),
            span(3, &[&[2, 0, 0], &[0, 3, 0]])
        );
        assert_eq!(span(2, &[&[0, 0]]), Subspace::zero(2));
    }

    #[test]
    fn coordinates_and_combine() {
        let s = span(3, &[&[1, 0, 2], &[0, 1, -1]]);
        let v = int_vec(&[3, -2, 8]);
        let c = s.coordinates(&v).unwrap().unwrap();
        assert_eq!(s.combine(&c).unwrap(), v);
        assert_eq!(s.coordinates(&int_vec(&[0, 0, 1])).unwrap(), None);
    }
}
