//! Lie algebras given by structure constants.

mod element;
mod quotient;

pub use element::Element;
pub use quotient::QuotientMap;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::Zero;

use crate::error::{ensure_len, Error, Result};
use crate::exactlinalg::{is_zero_vec, kernel, Matrix, Scalar, Subspace};

/// Sparse bracket table entry: `[b_i, b_j] = Σ c·b_k` for `i < j`.
pub type Terms = Vec<(usize, Scalar)>;

/// A finite-dimensional Lie algebra over the rationals.
///
/// Only brackets `[b_i, b_j]` with `i < j` are stored; `[b_j, b_i]` is the
/// negation and diagonal brackets are zero, so antisymmetry holds by
/// construction. Terms are sorted by basis index with zero coefficients
/// dropped, which makes structural equality meaningful.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    names: Vec<String>,
    table: BTreeMap<(usize, usize), Terms>,
}

/// A basis triple on which the Jacobi identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Scalar>,
}

impl LieAlgebra {
    /// Builds an algebra from basis names and bracket entries.
    ///
    /// An entry for `(j, i)` with `j > i` is stored negated under `(i, j)`.
    /// Diagonal entries and entries given twice for the same unordered pair
    /// are rejected. The Jacobi identity is not checked here; see
    /// [`LieAlgebra::validate`].
    pub fn new<I>(names: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Terms)>,
    {
        let dim = names.len();
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        let mut table = BTreeMap::new();
        let mut given = BTreeSet::new();
        for ((i, j), terms) in brackets {
            for index in [i, j] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if i == j {
                return Err(Error::DiagonalBracket(i));
            }
            let (key, negate) = if i < j {
                ((i, j), false)
            } else {
                ((j, i), true)
            };
            if !given.insert(key) {
                return Err(Error::DuplicateBracket(key.0, key.1));
            }
            let mut merged: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, c) in terms {
                if k >= dim {
                    return Err(Error::IndexOutOfRange { index: k, dim });
                }
                let c = if negate { -c } else { c };
                *merged.entry(k).or_insert_with(Scalar::zero) += c;
            }
            let terms: Terms = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !terms.is_empty() {
                table.insert(key, terms);
            }
        }
        Ok(Self { names, table })
    }

    /// Builds an algebra from a dense bracket function on basis pairs `i < j`.
    pub(crate) fn from_dense<F>(names: Vec<String>, mut bracket: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<Vec<Scalar>>,
    {
        let n = names.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = bracket(i, j)?;
                ensure_len(n, v.len())?;
                let terms: Terms = v
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    entries.push(((i, j), terms));
                }
            }
        }
        Self::new(names, entries)
    }

    /// The abelian algebra on the given names.
    pub fn abelian_on(names: Vec<String>) -> Result<Self> {
        Self::new(names, std::iter::empty())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Stored brackets `(i, j) → terms`, `i < j`, in increasing key order.
    pub fn brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Terms)> {
        self.table.iter()
    }

    /// Same table under new basis names.
    pub fn with_names(&self, names: Vec<String>) -> Result<Self> {
        ensure_len(self.dim(), names.len())?;
        Self::new(names, self.table.clone())
    }

    /// True when both algebras have identical structure constants,
    /// regardless of basis names.
    pub fn same_table(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.table == other.table
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element> {
        ensure_len(self.dim(), coords.len())?;
        Ok(Element::new(coords))
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    /// Basis element by name. Panics on an unknown name.
    pub fn named(&self, name: &str) -> Element {
        let i = self
            .index_of(name)
            .unwrap_or_else(|| panic!("no basis element named `{name}`"));
        self.basis_element(i)
    }

    /// `[b_i, b_j]` as a dense coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        let (key, sign) = match i.cmp(&j) {
            std::cmp::Ordering::Less => ((i, j), false),
            std::cmp::Ordering::Greater => ((j, i), true),
            std::cmp::Ordering::Equal => return out,
        };
        if let Some(terms) = self.table.get(&key) {
            for (k, c) in terms {
                out[*k] = if sign { -c.clone() } else { c.clone() };
            }
        }
        out
    }

    fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (&(i, j), terms) in &self.table {
            let mut coef = Scalar::zero();
            if !x[i].is_zero() && !y[j].is_zero() {
                coef += &x[i] * &y[j];
            }
            if !x[j].is_zero() && !y[i].is_zero() {
                coef -= &x[j] * &y[i];
            }
            if coef.is_zero() {
                continue;
            }
            for (k, c) in terms {
                out[*k] += &coef * c;
            }
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        ensure_len(self.dim(), x.dim())?;
        ensure_len(self.dim(), y.dim())?;
        Ok(Element::new(self.bracket_vec(x.coords(), y.coords())))
    }

    /// Bracket of raw coordinate vectors.
    pub fn bracket_coords(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        ensure_len(self.dim(), x.len())?;
        ensure_len(self.dim(), y.len())?;
        Ok(self.bracket_vec(x, y))
    }

    /// Reports every basis triple `i < j < k` violating the Jacobi identity.
    ///
    /// Triples with a repeated index satisfy it automatically because the
    /// bracket is alternating by construction.
    pub fn validate(&self) -> Vec<JacobiViolation> {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let bij = self.bracket_basis(i, j);
                for k in j + 1..n {
                    let bjk = self.bracket_basis(j, k);
                    let bki = self.bracket_basis(k, i);
                    let ek = crate::exactlinalg::unit_vec(n, k);
                    let ei = crate::exactlinalg::unit_vec(n, i);
                    let ej = crate::exactlinalg::unit_vec(n, j);
                    let mut residual = self.bracket_vec(&bij, &ek);
                    for (a, b) in [(&bjk, &ei), (&bki, &ej)] {
                        let term = self.bracket_vec(a, b);
                        residual = residual.iter().zip(&term).map(|(x, y)| x + y).collect();
                    }
                    if !is_zero_vec(&residual) {
                        violations.push(JacobiViolation {
                            triple: (i, j, k),
                            residual,
                        });
                    }
                }
            }
        }
        violations
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &Element) -> Result<Matrix> {
        ensure_len(self.dim(), x.dim())?;
        Ok(self.ad_coords(x.coords()))
    }

    pub(crate) fn ad_coords(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (&(i, j), terms) in &self.table {
            // [x, b_j] picks up x_i·[b_i,b_j]; [x, b_i] picks up −x_j·[b_i,b_j].
            for (k, c) in terms {
                if !x[i].is_zero() {
                    m[(*k, j)] += &x[i] * c;
                }
                if !x[j].is_zero() {
                    m[(*k, i)] -= &x[j] * c;
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad_coords(self.basis_element(i).coords())
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// Span of `[u, v]` over basis vectors `u` of `s` and `v` of `t`.
    pub fn product_space(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        ensure_len(self.dim(), s.ambient_dim())?;
        ensure_len(self.dim(), t.ambient_dim())?;
        let mut vectors = Vec::new();
        for u in s.basis() {
            for v in t.basis() {
                vectors.push(self.bracket_vec(u, v));
            }
        }
        Subspace::span(self.dim(), vectors)
    }

    /// The derived algebra `[g, g]`.
    pub fn derived_algebra(&self) -> Subspace {
        let all = (0..self.dim())
            .flat_map(|i| (i + 1..self.dim()).map(move |j| (i, j)))
            .map(|(i, j)| self.bracket_basis(i, j));
        Subspace::span(self.dim(), all).expect("bracket vectors have ambient length")
    }

    fn series<F>(&self, mut step: F) -> Vec<Subspace>
    where
        F: FnMut(&Subspace) -> Subspace,
    {
        let mut terms = vec![self.full()];
        loop {
            let current = terms.last().expect("non-empty");
            if current.is_zero() {
                break;
            }
            let next = step(current);
            let stable = &next == current;
            terms.push(next);
            if stable {
                break;
            }
        }
        terms
    }

    /// `g ⊇ [g,g] ⊇ …`, ending at the first zero term or the first term
    /// equal to its predecessor (which is included).
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.series(|s| self.product_space(s, s).expect("same ambient"))
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …`, with the same termination rule as
    /// [`LieAlgebra::derived_series`].
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = self.full();
        self.series(|s| self.product_space(&full, s).expect("same ambient"))
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    /// Nilpotency of the algebra itself (lower central series reaches 0).
    pub fn is_nilpotent_algebra(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// Kernel of `ad(a)`.
    pub fn centralizer(&self, a: &Element) -> Result<Subspace> {
        Ok(kernel(&self.ad(a)?))
    }

    /// The center, kernel of all `ad(b_i)` stacked.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut stacked = Matrix::zeros(n * n, n);
        for i in 0..n {
            let ad = self.ad_basis(i);
            for r in 0..n {
                for c in 0..n {
                    stacked[(i * n + r, c)] = ad[(r, c)].clone();
                }
            }
        }
        kernel(&stacked)
    }

    /// True iff `[g, s] ⊆ s`.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        ensure_len(self.dim(), s.ambient_dim())?;
        for i in 0..self.dim() {
            let bi = self.basis_element(i);
            for v in s.basis() {
                if !s.contains(&self.bracket_vec(bi.coords(), v))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff `[s, s] ⊆ s`.
    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.product_space(s, s)?.is_subspace_of(s)
    }

    /// The subalgebra `s` as an algebra in its echelon basis (`u0, u1, …`).
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        ensure_len(self.dim(), s.ambient_dim())?;
        let names = (0..s.dim()).map(|i| format!("u{i}")).collect();
        let basis = s.basis();
        Self::from_dense(names, |i, j| {
            let v = self.bracket_vec(&basis[i], &basis[j]);
            s.coordinates(&v)?.ok_or(Error::NotSubalgebra)
        })
    }

    /// Quotient by an ideal, on the complement spanned by the basis
    /// directions that are not pivots of the ideal's echelon basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientMap> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let n = self.dim();
        let complement = ideal.complement_axes();
        let mut matrix = Matrix::zeros(complement.len(), n);
        for k in 0..n {
            let reduced = ideal.reduce(&crate::exactlinalg::unit_vec(n, k))?;
            for (r, &c) in complement.iter().enumerate() {
                matrix[(r, k)] = reduced[c].clone();
            }
        }
        let names = complement.iter().map(|&c| self.names[c].clone()).collect();
        let target = Self::from_dense(names, |a, b| {
            let v = self.bracket_basis(complement[a], complement[b]);
            matrix.mul_vec(&v)
        })?;
        Ok(QuotientMap::new_unchecked(self.clone(), target, matrix))
    }

    /// True iff `d[x,y] = [dx,y] + [x,dy]` on all basis pairs.
    pub fn is_derivation(&self, d: &Matrix) -> Result<bool> {
        let n = d.ensure_square()?;
        ensure_len(self.dim(), n)?;
        for i in 0..n {
            let di = d.column(i);
            for j in i + 1..n {
                let dj = d.column(j);
                let lhs = d.mul_vec(&self.bracket_basis(i, j))?;
                let ei = crate::exactlinalg::unit_vec(n, i);
                let ej = crate::exactlinalg::unit_vec(n, j);
                let a = self.bracket_vec(&di, &ej);
                let b = self.bracket_vec(&ei, &dj);
                let rhs: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Structure constants in the basis given by the columns of `p`.
    /// Basis names are kept positionally.
    pub fn change_of_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        let n = p.ensure_square()?;
        ensure_len(self.dim(), n)?;
        let inv = p.inverse()?;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| p.column(j)).collect();
        Self::from_dense(self.names.clone(), |i, j| {
            inv.mul_vec(&self.bracket_vec(&cols[i], &cols[j]))
        })
    }

    /// Direct sum `self ⊕ other`. Clashing names in `other` get primes.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let offset = self.dim();
        let mut names = self.names.clone();
        for name in &other.names {
            let mut candidate = name.clone();
            while names.contains(&candidate) || self.names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let mut table = self.table.clone();
        for (&(i, j), terms) in &other.table {
            let shifted = terms.iter().map(|(k, c)| (k + offset, c.clone())).collect();
            table.insert((i + offset, j + offset), shifted);
        }
        Self { names, table }
    }
}
