#![allow(dead_code)]

use lienil::catalog;
use lienil::exactlinalg::{frac, int};
use lienil::{Element, LieAlgebra, Matrix, Scalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    frac(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

pub fn random_element(l: &LieAlgebra, rng: &mut ChaCha8Rng) -> Element {
    Element::new((0..l.dim()).map(|_| small_rational(rng)).collect())
}

/// Unit lower times unit upper triangular, so the determinant is one.
pub fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = int(rng.gen_range(-2..=2));
            upper[(j, i)] = int(rng.gen_range(-2..=2));
        }
    }
    lower.mul(&upper).unwrap()
}

/// Coordinates of `a` in the basis given by the columns of `p`.
pub fn transport(p: &Matrix, a: &Element) -> Element {
    Element::new(p.inverse().unwrap().mul_vec(a.coords()).unwrap())
}

/// Concrete instances of every catalog family.
pub const CATALOG: &[&str] = &[
    "abelian(3)",
    "nonabelian2",
    "heisenberg",
    "sl2",
    "sl3",
    "gl2",
    "so3",
    "borel2",
    "upper_triangular(3)",
    "strictly_upper(4)",
];

pub fn catalog_algebras() -> Vec<(String, LieAlgebra)> {
    CATALOG
        .iter()
        .map(|n| (n.to_string(), catalog::builtin(n).unwrap().algebra))
        .collect()
}

pub fn semisimple_algebras() -> Vec<(String, LieAlgebra)> {
    vec![
        ("sl2".into(), catalog::sl2()),
        ("sl3".into(), catalog::sl3()),
        ("so3".into(), catalog::so3()),
        ("sl2+sl2".into(), catalog::sl2().direct_sum(&catalog::sl2())),
    ]
}

/// Basis elements followed by all sums of two distinct basis elements.
pub fn basis_and_pairs(l: &LieAlgebra) -> Vec<Element> {
    let n = l.dim();
    let mut out: Vec<Element> = (0..n).map(|i| l.basis_element(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(l.basis_element(i).add(&l.basis_element(j)));
        }
    }
    out
}
