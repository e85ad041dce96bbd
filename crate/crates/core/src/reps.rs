//! Representations as one matrix per basis element, the standard
//! constructions on them, and weight spaces.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{ensure_len, Error, Result};
use crate::exactlinalg::{
    dot, is_nilpotent, kernel, rational_eigenvalues, Matrix, Scalar, Subspace,
};
use crate::liecore::{Element, LieAlgebra, QuotientMap};

/// A homomorphism `ρ: g → gl(V)`, stored as `ρ(b_i)` for each basis
/// element `b_i` of `g`.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<LieAlgebra>,
    dim_v: usize,
    matrices: Vec<Matrix>,
    label: String,
}

impl PartialEq for Representation {
    /// Exact equality of the matrices over equal algebras; labels ignored.
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra)
            && self.dim_v == other.dim_v
            && self.matrices == other.matrices
    }
}

impl Eq for Representation {}

fn same_algebra(a: &Arc<LieAlgebra>, b: &Arc<LieAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A basis pair on which `ρ([b_i,b_j]) ≠ [ρ(b_i), ρ(b_j)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismViolation {
    pub pair: (usize, usize),
    pub residual: Matrix,
}

impl Representation {
    /// Wraps matrices without checking the homomorphism law; see
    /// [`validate_rep`].
    pub fn new(
        algebra: Arc<LieAlgebra>,
        dim_v: usize,
        matrices: Vec<Matrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        ensure_len(algebra.dim(), matrices.len())?;
        for m in &matrices {
            ensure_len(dim_v, m.rows())?;
            ensure_len(dim_v, m.cols())?;
        }
        Ok(Self {
            algebra,
            dim_v,
            matrices,
            label: label.into(),
        })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim_v
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `ρ(a) = Σ a_i ρ(b_i)`.
    pub fn action_coords(&self, a: &[Scalar]) -> Result<Matrix> {
        ensure_len(self.algebra.dim(), a.len())?;
        let mut out = Matrix::zeros(self.dim_v, self.dim_v);
        for (c, m) in a.iter().zip(&self.matrices) {
            out.add_scaled(c, m)?;
        }
        Ok(out)
    }

    pub fn action(&self, a: &Element) -> Result<Matrix> {
        self.action_coords(a.coords())
    }

    fn ensure_same_algebra(&self, other: &Self) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }
}

/// Every basis pair `i < j` violating the homomorphism law.
pub fn validate_rep(rho: &Representation) -> Vec<HomomorphismViolation> {
    let n = rho.algebra.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = rho
                .action_coords(&rho.algebra.bracket_basis(i, j))
                .expect("bracket has algebra dimension");
            let rhs = rho.matrices[i]
                .commutator(&rho.matrices[j])
                .expect("square matrices of equal size");
            let residual = lhs.sub(&rhs).expect("equal shapes");
            if !residual.is_zero() {
                out.push(HomomorphismViolation {
                    pair: (i, j),
                    residual,
                });
            }
        }
    }
    out
}

/// The zero representation on an `n`-dimensional space.
pub fn trivial(algebra: &Arc<LieAlgebra>, n: usize) -> Representation {
    let matrices = vec![Matrix::zeros(n, n); algebra.dim()];
    Representation::new(algebra.clone(), n, matrices, format!("trivial({n})"))
        .expect("shapes agree")
}

pub fn adjoint_rep(algebra: &Arc<LieAlgebra>) -> Representation {
    let n = algebra.dim();
    let matrices = (0..n).map(|i| algebra.ad_basis(i)).collect();
    Representation::new(algebra.clone(), n, matrices, "adjoint").expect("shapes agree")
}

/// `ρ ∘ π` for a representation `ρ` of the target of `π`.
pub fn pullback(rho: &Representation, q: &QuotientMap) -> Result<Representation> {
    if rho.algebra.as_ref() != q.target() {
        return Err(Error::AlgebraMismatch);
    }
    let source = Arc::new(q.source().clone());
    let matrices = (0..source.dim())
        .map(|i| rho.action_coords(&q.matrix().column(i)))
        .collect::<Result<Vec<_>>>()?;
    Representation::new(
        source,
        rho.dim_v,
        matrices,
        format!("pullback({})", rho.label),
    )
}

/// Block-diagonal sum.
pub fn direct_sum(a: &Representation, b: &Representation) -> Result<Representation> {
    a.ensure_same_algebra(b)?;
    let matrices = a
        .matrices
        .iter()
        .zip(&b.matrices)
        .map(|(x, y)| x.block_diag(y))
        .collect();
    Representation::new(
        a.algebra.clone(),
        a.dim_v + b.dim_v,
        matrices,
        format!("direct_sum({}, {})", a.label, b.label),
    )
}

/// `ρ(x) = ρ₁(x) ⊗ I + I ⊗ ρ₂(x)`.
pub fn tensor(a: &Representation, b: &Representation) -> Result<Representation> {
    a.ensure_same_algebra(b)?;
    let ia = Matrix::identity(a.dim_v);
    let ib = Matrix::identity(b.dim_v);
    let matrices = a
        .matrices
        .iter()
        .zip(&b.matrices)
        .map(|(x, y)| x.kronecker(&ib).add(&ia.kronecker(y)))
        .collect::<Result<Vec<_>>>()?;
    Representation::new(
        a.algebra.clone(),
        a.dim_v * b.dim_v,
        matrices,
        format!("tensor({}, {})", a.label, b.label),
    )
}

/// `ρ*(x) = −ρ(x)ᵀ`.
pub fn dual(rho: &Representation) -> Representation {
    let minus_one = -Scalar::one();
    let matrices = rho
        .matrices
        .iter()
        .map(|m| m.transpose().scale(&minus_one))
        .collect();
    Representation::new(
        rho.algebra.clone(),
        rho.dim_v,
        matrices,
        format!("dual({})", rho.label),
    )
    .expect("shapes agree")
}

/// The one-dimensional representation `x ↦ ξ(x)`, for a functional
/// vanishing on the derived algebra.
pub fn one_dim_rep(algebra: &Arc<LieAlgebra>, xi: &[Scalar]) -> Result<Representation> {
    ensure_len(algebra.dim(), xi.len())?;
    let derived = algebra.derived_algebra();
    if derived.basis().iter().any(|v| !dot(xi, v).is_zero()) {
        return Err(Error::FunctionalNotVanishing);
    }
    let matrices = xi.iter().map(|c| Matrix::scalar(1, c)).collect();
    let coords: Vec<String> = xi.iter().map(ToString::to_string).collect();
    Representation::new(
        algebra.clone(),
        1,
        matrices,
        format!("one_dim({})", coords.join(",")),
    )
}

/// `(Σ a_i ρ(b_i))^dim_v = 0`.
pub fn acts_nilpotently(rho: &Representation, a: &Element) -> Result<bool> {
    Ok(is_nilpotent(&rho.action(a)?))
}

/// A linear function on a subspace, given by its values on the subspace's
/// echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub subalgebra: Subspace,
    pub values: Vec<Scalar>,
}

impl Weight {
    /// Value on an arbitrary vector of the subalgebra.
    pub fn eval(&self, v: &[Scalar]) -> Result<Option<Scalar>> {
        Ok(self
            .subalgebra
            .coordinates(v)?
            .map(|c| dot(&c, &self.values)))
    }
}

/// `V_ξ(A) = { v : x·v = ξ(x)·v for all x ∈ A }`.
pub fn weight_space(rho: &Representation, a: &Subspace, xi: &Weight) -> Result<Subspace> {
    if &xi.subalgebra != a {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: xi.subalgebra.dim(),
        });
    }
    ensure_len(a.dim(), xi.values.len())?;
    ensure_len(rho.algebra.dim(), a.ambient_dim())?;
    let n = rho.dim_v;
    if a.is_zero() {
        return Ok(Subspace::full(n));
    }
    let mut stacked = Matrix::zeros(n * a.dim(), n);
    for (j, (v, value)) in a.basis().iter().zip(&xi.values).enumerate() {
        let shifted = rho.action_coords(v)?.sub(&Matrix::scalar(n, value))?;
        for r in 0..n {
            for c in 0..n {
                stacked[(j * n + r, c)] = shifted[(r, c)].clone();
            }
        }
    }
    Ok(kernel(&stacked))
}

/// All weights of `A` with rational values whose weight space is nonzero,
/// for `A` spanning a solvable subalgebra.
///
/// Candidate values come from the rational eigenvalues of `ρ(v_j)` for the
/// basis vectors `v_j` of `A`; simultaneous eigenspaces are intersected
/// depth-first. Weights taking irrational values are not found.
pub fn rational_weights(rho: &Representation, a: &Subspace) -> Result<Vec<Weight>> {
    ensure_len(rho.algebra.dim(), a.ambient_dim())?;
    if !rho.algebra.is_subalgebra(a)? {
        return Err(Error::NotSubalgebra);
    }
    if !rho.algebra.restrict(a)?.is_solvable() {
        return Err(Error::NotSolvable);
    }
    let n = rho.dim_v;
    if n == 0 {
        return Ok(Vec::new());
    }
    let actions = a
        .basis()
        .iter()
        .map(|v| rho.action_coords(v))
        .collect::<Result<Vec<_>>>()?;
    let spectra = actions
        .iter()
        .map(rational_eigenvalues)
        .collect::<Result<Vec<_>>>()?;

    let mut found = Vec::new();
    let mut stack: Vec<(usize, Subspace, Vec<Scalar>)> = vec![(0, Subspace::full(n), Vec::new())];
    while let Some((depth, space, prefix)) = stack.pop() {
        if depth == actions.len() {
            found.push(Weight {
                subalgebra: a.clone(),
                values: prefix,
            });
            continue;
        }
        // pushed in reverse so the output is in increasing lexicographic order
        for lambda in spectra[depth].iter().rev() {
            let eig = kernel(&actions[depth].sub(&Matrix::scalar(n, lambda))?);
            let next = space.intersect(&eig)?;
            if !next.is_zero() {
                let mut values = prefix.clone();
                values.push(lambda.clone());
                stack.push((depth + 1, next, values));
            }
        }
    }
    Ok(found)
}
