//! Built-in algebras with independently stated structural data.
//!
//! Each [`builtin`] entry records its radical, derived algebra and
//! semisimplicity by hand; the constructor recomputes all three and fails
//! with [`Error::Internal`] on any disagreement.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlinalg::{frac, int, solve, unit_vec, Matrix, Scalar, Subspace};
use crate::liecore::{LieAlgebra, QuotientMap, Terms};
use crate::reps::{adjoint_rep, one_dim_rep, pullback, validate_rep, Representation};
use crate::semisimple::{is_semisimple, radical};

/// Catalog names accepted by [`builtin`]; `n` is a positive integer.
pub const NAMES: &[&str] = &[
    "abelian(n)",
    "nonabelian2",
    "heisenberg",
    "sl2",
    "sl3",
    "gl2",
    "so3",
    "borel2",
    "upper_triangular(n)",
    "strictly_upper(n)",
];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub known_radical: Subspace,
    pub known_derived: Subspace,
    pub known_semisimple: bool,
    /// Representations irreducible by construction.
    pub irreducibles: Vec<Representation>,
    /// A surjection onto a semisimple algebra with kernel the radical, when
    /// one is known explicitly.
    pub projection: Option<QuotientMap>,
}

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

type IntTable<'a> = [((usize, usize), &'a [(usize, i64)])];

fn table(ns: &[&str], entries: &IntTable) -> LieAlgebra {
    let brackets = entries.iter().map(|&(key, terms)| {
        let terms: Terms = terms.iter().map(|&(k, c)| (k, int(c))).collect();
        (key, terms)
    });
    LieAlgebra::new(names(ns), brackets).expect("catalog table is well formed")
}

/// Algebra spanned by the given matrices under the commutator; the span
/// must be closed.
pub fn from_matrix_basis(basis_names: Vec<String>, basis: &[Matrix]) -> Result<LieAlgebra> {
    let side = basis.first().map_or(0, Matrix::rows);
    let columns: Vec<Vec<Scalar>> = basis.iter().map(|m| m.entries().to_vec()).collect();
    let flat = Matrix::from_columns(side * side, &columns)?;
    LieAlgebra::from_dense(basis_names, |i, j| {
        let c = basis[i].commutator(&basis[j])?;
        solve(&flat, c.entries())?.ok_or(Error::NotSubalgebra)
    })
}

fn unit_matrix(side: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(side, side);
    m[(i, j)] = int(1);
    m
}

fn unit_name(side: usize, i: usize, j: usize) -> String {
    if side < 10 {
        format!("E{}{}", i + 1, j + 1)
    } else {
        format!("E{}_{}", i + 1, j + 1)
    }
}

pub fn abelian(n: usize) -> LieAlgebra {
    let ns = (1..=n).map(|i| format!("x{i}")).collect();
    LieAlgebra::abelian_on(ns).expect("distinct names")
}

/// Basis `(a, b)` with `[a, b] = b`.
pub fn nonabelian2() -> LieAlgebra {
    table(&["a", "b"], &[((0, 1), &[(1, 1)])])
}

/// Basis `(x, y, z)` with `[x, y] = z`.
pub fn heisenberg() -> LieAlgebra {
    table(&["x", "y", "z"], &[((0, 1), &[(2, 1)])])
}

/// Basis `(e, h, f)` with `[h, e] = 2e`, `[h, f] = −2f`, `[e, f] = h`.
pub fn sl2() -> LieAlgebra {
    table(
        &["e", "h", "f"],
        &[
            ((0, 1), &[(0, -2)]),
            ((0, 2), &[(1, 1)]),
            ((1, 2), &[(2, -2)]),
        ],
    )
}

/// Basis `(h1, h2, e1, e2, e3, f1, f2, f3)`: `h1 = E11 − E22`,
/// `h2 = E22 − E33`, `e1 = E12`, `e2 = E23`, `e3 = E13` and `f_i` the
/// transposes.
pub fn sl3() -> LieAlgebra {
    let e = |i, j| unit_matrix(3, i, j);
    let basis = [
        e(0, 0).sub(&e(1, 1)).expect("same shape"),
        e(1, 1).sub(&e(2, 2)).expect("same shape"),
        e(0, 1),
        e(1, 2),
        e(0, 2),
        e(1, 0),
        e(2, 1),
        e(2, 0),
    ];
    from_matrix_basis(
        names(&["h1", "h2", "e1", "e2", "e3", "f1", "f2", "f3"]),
        &basis,
    )
    .expect("sl3 is closed")
}

/// Matrix units `(E11, E12, E21, E22)`.
pub fn gl2() -> LieAlgebra {
    let basis = [(0, 0), (0, 1), (1, 0), (1, 1)].map(|(i, j)| unit_matrix(2, i, j));
    from_matrix_basis(names(&["E11", "E12", "E21", "E22"]), &basis).expect("gl2 is closed")
}

/// Basis `(x, y, z)` with `[x, y] = z`, `[y, z] = x`, `[z, x] = y`.
pub fn so3() -> LieAlgebra {
    table(
        &["x", "y", "z"],
        &[
            ((0, 1), &[(2, 1)]),
            ((0, 2), &[(1, -1)]),
            ((1, 2), &[(0, 1)]),
        ],
    )
}

/// Basis `(h, e)` with `[h, e] = 2e`.
pub fn borel2() -> LieAlgebra {
    table(&["h", "e"], &[((0, 1), &[(1, 2)])])
}

fn matrix_units(n: usize, keep: impl Fn(usize, usize) -> bool) -> (Vec<String>, Vec<Matrix>) {
    let mut ns = Vec::new();
    let mut ms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if keep(i, j) {
                ns.push(unit_name(n, i, j));
                ms.push(unit_matrix(n, i, j));
            }
        }
    }
    (ns, ms)
}

/// Upper-triangular `n×n` matrices, basis `E_ij` (`i ≤ j`) row by row.
pub fn upper_triangular(n: usize) -> LieAlgebra {
    let (ns, ms) = matrix_units(n, |i, j| i <= j);
    from_matrix_basis(ns, &ms).expect("closed")
}

/// Strictly upper-triangular `n×n` matrices, basis `E_ij` (`i < j`).
pub fn strictly_upper(n: usize) -> LieAlgebra {
    let (ns, ms) = matrix_units(n, |i, j| i < j);
    from_matrix_basis(ns, &ms).expect("closed")
}

/// The `(m+1)`-dimensional irreducible representation of the catalog sl2.
pub fn sl2_irrep(m: usize) -> Representation {
    sl2_irrep_on(&Arc::new(sl2()), m)
}

/// [`sl2_irrep`] over a given algebra whose table is that of sl2.
///
/// On the basis `v_0, …, v_m`: `h·v_j = (m − 2j)·v_j`,
/// `e·v_j = (m − j + 1)·v_{j−1}`, `f·v_j = (j + 1)·v_{j+1}`.
pub fn sl2_irrep_on(algebra: &Arc<LieAlgebra>, m: usize) -> Representation {
    let d = m + 1;
    let mut e = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    for j in 0..d {
        h[(j, j)] = int(m as i64 - 2 * j as i64);
        if j >= 1 {
            e[(j - 1, j)] = int((m - j + 1) as i64);
        }
        if j + 1 < d {
            f[(j + 1, j)] = int(j as i64 + 1);
        }
    }
    Representation::new(algebra.clone(), d, vec![e, h, f], format!("sl2_irrep({m})"))
        .expect("three square matrices")
}

/// The surjection `gl2 → sl2`, `x ↦ x − tr(x)/2·I`, in the catalog bases.
pub fn gl2_to_sl2() -> QuotientMap {
    let half = frac(1, 2);
    let mut m = Matrix::zeros(3, 4);
    m[(1, 0)] = half.clone();
    m[(0, 1)] = int(1);
    m[(2, 2)] = int(1);
    m[(1, 3)] = -half;
    QuotientMap::from_homomorphism(gl2(), sl2(), m).expect("traceless projection is a homomorphism")
}

/// Irreducible representations the catalog knows for an algebra with the
/// table of sl2, sl3 or so3 (matched by structure constants, not names).
pub fn attached_irreducibles(algebra: &Arc<LieAlgebra>) -> Vec<Representation> {
    if algebra.same_table(&sl2()) {
        let mut out: Vec<_> = (0..=4).map(|m| sl2_irrep_on(algebra, m)).collect();
        out.push(adjoint_rep(algebra));
        out
    } else if algebra.same_table(&sl3()) || algebra.same_table(&so3()) {
        vec![adjoint_rep(algebra)]
    } else {
        Vec::new()
    }
}

fn parse_indexed(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?
        .trim()
        .parse()
        .ok()
}

fn coordinate(n: usize, axes: impl IntoIterator<Item = usize>) -> Subspace {
    Subspace::coordinate(n, axes).expect("axes in range")
}

fn span(n: usize, vectors: Vec<Vec<Scalar>>) -> Subspace {
    Subspace::span(n, vectors).expect("vectors of ambient length")
}

/// Looks up a catalog algebra and verifies its recorded structure.
pub fn builtin(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownCatalogName(name.to_string());
    let name = name.trim();
    let (algebra, known_radical, known_derived, known_semisimple) = match name {
        "nonabelian2" => (
            nonabelian2(),
            coordinate(2, 0..2),
            coordinate(2, [1]),
            false,
        ),
        "heisenberg" => (heisenberg(), coordinate(3, 0..3), coordinate(3, [2]), false),
        "sl2" => (sl2(), Subspace::zero(3), Subspace::full(3), true),
        "sl3" => (sl3(), Subspace::zero(8), Subspace::full(8), true),
        "so3" => (so3(), Subspace::zero(3), Subspace::full(3), true),
        "gl2" => {
            let identity = vec![int(1), int(0), int(0), int(1)];
            let traceless = vec![int(1), int(0), int(0), int(-1)];
            let derived = span(4, vec![traceless, unit_vec(4, 1), unit_vec(4, 2)]);
            (gl2(), span(4, vec![identity]), derived, false)
        }
        "borel2" => (borel2(), coordinate(2, 0..2), coordinate(2, [1]), false),
        _ => {
            if let Some(n) = parse_indexed(name, "abelian") {
                (abelian(n), Subspace::full(n), Subspace::zero(n), n == 0)
            } else if let Some(n) = parse_indexed(name, "upper_triangular").filter(|&n| n >= 1) {
                let l = upper_triangular(n);
                let dim = l.dim();
                let strict = units_where(n, |i, j| i <= j, |i, j| i < j);
                (l, Subspace::full(dim), coordinate(dim, strict), false)
            } else if let Some(n) = parse_indexed(name, "strictly_upper").filter(|&n| n >= 1) {
                let l = strictly_upper(n);
                let dim = l.dim();
                let far = units_where(n, |i, j| i < j, |i, j| j >= i + 2);
                (l, Subspace::full(dim), coordinate(dim, far), dim == 0)
            } else {
                return Err(unknown());
            }
        }
    };
    let shared = Arc::new(algebra.clone());
    let (irreducibles, projection) = match name {
        "sl2" | "sl3" | "so3" => (attached_irreducibles(&shared), None),
        "gl2" => {
            let q = gl2_to_sl2();
            let mut irr = (0..=4)
                .map(|m| {
                    pullback(&sl2_irrep(m), &q)
                        .map(|r| r.with_label(format!("pullback(sl2_irrep({m}))")))
                })
                .collect::<Result<Vec<_>>>()?;
            irr.push(one_dim_rep(&shared, &[int(1), int(0), int(0), int(1)])?.with_label("trace"));
            (irr, Some(q))
        }
        _ => (Vec::new(), None),
    };
    let entry = CatalogEntry {
        name: name.to_string(),
        algebra,
        known_radical,
        known_derived,
        known_semisimple,
        irreducibles,
        projection,
    };
    verify(&entry)?;
    Ok(entry)
}

/// Positions (within the basis filtered by `basis`) of the units selected
/// by `select`.
fn units_where(
    n: usize,
    basis: impl Fn(usize, usize) -> bool,
    select: impl Fn(usize, usize) -> bool,
) -> Vec<usize> {
    let mut out = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in 0..n {
            if basis(i, j) {
                if select(i, j) {
                    out.push(k);
                }
                k += 1;
            }
        }
    }
    out
}

fn verify(entry: &CatalogEntry) -> Result<()> {
    let l = &entry.algebra;
    if !l.validate().is_empty() {
        return Err(Error::Internal(format!(
            "{} fails the Jacobi identity",
            entry.name
        )));
    }
    if radical(l)? != entry.known_radical {
        return Err(Error::Internal(format!(
            "{}: radical differs from the recorded one",
            entry.name
        )));
    }
    if l.derived_algebra() != entry.known_derived {
        return Err(Error::Internal(format!(
            "{}: derived algebra differs from the recorded one",
            entry.name
        )));
    }
    if is_semisimple(l)? != entry.known_semisimple {
        return Err(Error::Internal(format!(
            "{}: semisimplicity differs",
            entry.name
        )));
    }
    for rho in &entry.irreducibles {
        if !validate_rep(rho).is_empty() {
            return Err(Error::Internal(format!(
                "{}: {} is not a representation",
                entry.name,
                rho.label()
            )));
        }
    }
    Ok(())
}

/// The semidirect product `s ⋉ V` for a representation `ρ` of `s` on `V`:
/// brackets of `s` unchanged, `[x, v] = ρ(x)v`, `[v, w] = 0`.
///
/// The recorded radical is `rad(s) ⊕ V` and the recorded derived algebra
/// `[s, s] ⊕ Σ ρ(s)V`, both assembled from `s` and `ρ` directly.
pub fn semidirect(s: &LieAlgebra, rho: &Representation) -> Result<CatalogEntry> {
    if rho.algebra().as_ref() != s {
        return Err(Error::AlgebraMismatch);
    }
    let violations = validate_rep(rho).len();
    if violations > 0 {
        return Err(Error::InvalidRepresentation(violations));
    }
    let k = s.dim();
    let d = rho.dim();
    let n = k + d;
    let mut ns: Vec<String> = s.names().to_vec();
    for i in 0..d {
        let mut candidate = format!("v{i}");
        while ns.contains(&candidate) {
            candidate.push('\'');
        }
        ns.push(candidate);
    }
    let mut entries: Vec<((usize, usize), Terms)> = s
        .brackets()
        .map(|(&key, terms)| (key, terms.clone()))
        .collect();
    for (i, m) in rho.matrices().iter().enumerate() {
        for col in 0..d {
            let terms: Terms = (0..d)
                .filter(|&row| !num_traits::Zero::is_zero(&m[(row, col)]))
                .map(|row| (k + row, m[(row, col)].clone()))
                .collect();
            if !terms.is_empty() {
                entries.push(((i, k + col), terms));
            }
        }
    }
    let algebra = LieAlgebra::new(ns, entries)?;

    let embed = |v: &[Scalar]| {
        let mut out = v.to_vec();
        out.resize(n, int(0));
        out
    };
    let module = coordinate(n, k..n);
    let known_radical =
        span(n, radical(s)?.basis().iter().map(|v| embed(v)).collect()).sum(&module)?;
    let mut derived_vectors: Vec<Vec<Scalar>> = s
        .derived_algebra()
        .basis()
        .iter()
        .map(|v| embed(v))
        .collect();
    for m in rho.matrices() {
        for col in 0..d {
            let mut v = vec![int(0); n];
            for row in 0..d {
                v[k + row] = m[(row, col)].clone();
            }
            derived_vectors.push(v);
        }
    }
    let known_derived = span(n, derived_vectors);
    let s_semisimple = is_semisimple(s)?;

    let mut proj = Matrix::zeros(k, n);
    for i in 0..k {
        proj[(i, i)] = int(1);
    }
    let projection = QuotientMap::from_homomorphism(algebra.clone(), s.clone(), proj)?;
    if !algebra.quotient(&module)?.target().same_table(s) {
        return Err(Error::Internal(
            "quotient by the module differs from the base".into(),
        ));
    }
    let irreducibles = if s_semisimple {
        attached_irreducibles(&Arc::new(s.clone()))
            .iter()
            .map(|r| pullback(r, &projection))
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    let entry = CatalogEntry {
        name: format!("semidirect({})", rho.label()),
        algebra,
        known_radical,
        known_derived,
        known_semisimple: s_semisimple && d == 0,
        irreducibles,
        projection: s_semisimple.then_some(projection),
    };
    verify(&entry)?;
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::int_vec;
    use crate::reps::trivial;

    #[test]
    fn every_builtin_verifies() {
        for name in [
            "abelian(0)",
            "abelian(1)",
            "abelian(3)",
            "nonabelian2",
            "heisenberg",
            "sl2",
            "sl3",
            "gl2",
            "so3",
            "borel2",
            "upper_triangular(1)",
            "upper_triangular(2)",
            "upper_triangular(3)",
            "strictly_upper(2)",
            "strictly_upper(4)",
        ] {
            builtin(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert_eq!(
            builtin("e8").unwrap_err(),
            Error::UnknownCatalogName("e8".into())
        );
        assert!(builtin("abelian(x)").is_err());
    }

    #[test]
    fn builtin_examples() {
        let sl2 = builtin("sl2").unwrap();
        assert_eq!(sl2.algebra.dim(), 3);
        assert!(sl2.known_radical.is_zero() && sl2.known_derived.is_full());
        assert_eq!(sl2.irreducibles.len(), 6);
        let ab = builtin("abelian(2)").unwrap();
        assert!(ab.known_radical.is_full() && ab.known_derived.is_zero());
        let b2 = builtin("upper_triangular(2)").unwrap();
        assert!(b2.algebra.is_solvable());
        // basis (E11, E12, E22): derived = span(E12)
        assert_eq!(b2.known_derived, Subspace::coordinate(3, [1]).unwrap());
        assert_eq!(builtin("sl3").unwrap().irreducibles.len(), 1);
    }

    #[test]
    fn sl3_table_spot_checks() {
        let l = sl3();
        // [e1, e2] = e3, [e1, f1] = h1, [h1, e1] = 2 e1, [h2, e1] = −e1
        assert_eq!(
            l.bracket(&l.named("e1"), &l.named("e2")).unwrap(),
            l.named("e3")
        );
        assert_eq!(
            l.bracket(&l.named("e1"), &l.named("f1")).unwrap(),
            l.named("h1")
        );
        assert_eq!(
            l.bracket(&l.named("h1"), &l.named("e1")).unwrap(),
            l.named("e1").scale(&int(2))
        );
        assert_eq!(
            l.bracket(&l.named("h2"), &l.named("e1")).unwrap(),
            l.named("e1").scale(&int(-1))
        );
    }

    #[test]
    fn sl2_irrep_examples() {
        let r0 = sl2_irrep(0);
        assert_eq!(r0.dim(), 1);
        assert!(r0.matrices().iter().all(Matrix::is_zero));
        let r1 = sl2_irrep(1);
        assert_eq!(r1.matrices()[0], Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert_eq!(r1.matrices()[1], Matrix::from_i64(&[&[1, 0], &[0, -1]]));
        assert_eq!(r1.matrices()[2], Matrix::from_i64(&[&[0, 0], &[1, 0]]));
        let r2 = sl2_irrep(2);
        assert_eq!(
            r2.matrices()[1],
            Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]])
        );
        for m in 0..=6 {
            assert!(validate_rep(&sl2_irrep(m)).is_empty(), "m = {m}");
        }
    }

    #[test]
    fn semidirect_examples() {
        let s = sl2();
        let triv = trivial(&Arc::new(s.clone()), 1);
        let e = semidirect(&s, &triv).unwrap();
        assert_eq!(e.algebra.dim(), 4);
        assert_eq!(e.known_radical, Subspace::coordinate(4, [3]).unwrap());
        assert_eq!(e.irreducibles.len(), 6);

        let e = semidirect(&s, &sl2_irrep(1)).unwrap();
        assert_eq!(e.algebra.dim(), 5);
        assert_eq!(e.known_radical, Subspace::coordinate(5, [3, 4]).unwrap());
        assert!(e.known_derived.is_full());

        let a1 = Arc::new(abelian(1));
        let lam =
            Representation::new(a1.clone(), 1, vec![Matrix::from_i64(&[&[1]])], "lambda").unwrap();
        let e = semidirect(&a1, &lam).unwrap();
        assert!(e.algebra.same_table(&nonabelian2()));
        let zero = Representation::new(a1.clone(), 1, vec![Matrix::zeros(1, 1)], "zero").unwrap();
        assert!(semidirect(&a1, &zero)
            .unwrap()
            .algebra
            .same_table(&abelian(2)));

        let bad = Representation::new(
            Arc::new(s.clone()),
            2,
            vec![
                sl2_irrep(1).matrices()[2].clone(),
                sl2_irrep(1).matrices()[1].clone(),
                sl2_irrep(1).matrices()[0].clone(),
            ],
            "bad",
        )
        .unwrap();
        assert!(matches!(
            semidirect(&s, &bad),
            Err(Error::InvalidRepresentation(_))
        ));
        assert_eq!(
            semidirect(&heisenberg(), &triv).unwrap_err(),
            Error::AlgebraMismatch
        );
    }

    #[test]
    fn gl2_projection_kills_identity() {
        let q = gl2_to_sl2();
        assert!(q.kernel() == Subspace::span(4, [int_vec(&[1, 0, 0, 1])]).unwrap());
    }
}
