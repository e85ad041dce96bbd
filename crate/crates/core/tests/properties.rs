mod common;

use std::sync::Arc;

use common::*;
use lienil::catalog;
use lienil::exactlinalg::{
    generalized_eigenspace, image, int, kernel, rank, rational_eigenvalues, rref, solve,
};
use lienil::oracle::nilpotent_in_all_reps;
use lienil::reps::{
    acts_nilpotently, adjoint_rep, direct_sum, dual, one_dim_rep, pullback, rational_weights,
    tensor, trivial, validate_rep, weight_space,
};
use lienil::semisimple::{is_nilpotent_element_power, is_semisimple, killing_matrix, radical};
use lienil::{Matrix, Subspace};
use proptest::prelude::*;
use rand::Rng;

fn random_matrix(rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut r = rng(seed);
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            // sparse enough that kernels are often nontrivial
            if r.gen_bool(0.6) {
                m[(i, j)] = small_rational(&mut r);
            }
        }
    }
    m
}

fn random_subspace(n: usize, k: usize, seed: u64) -> Subspace {
    Subspace::span(n, random_matrix(k, n, seed).row_vectors()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(rows in 1usize..6, cols in 1usize..6, seed: u64) {
        let (r, _) = rref(&random_matrix(rows, cols, seed));
        prop_assert_eq!(rref(&r).0, r);
    }

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..6, seed: u64) {
        let m = random_matrix(rows, cols, seed);
        prop_assert_eq!(kernel(&m).dim() + image(&m).dim(), cols);
        prop_assert_eq!(image(&m).dim(), rank(&m));
    }

    #[test]
    fn grassmann(n in 1usize..6, k1 in 0usize..5, k2 in 0usize..5, seed: u64) {
        let s = random_subspace(n, k1, seed);
        let t = random_subspace(n, k2, seed ^ 0x5555);
        let sum = s.sum(&t).unwrap();
        let meet = s.intersect(&t).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), s.dim() + t.dim());
        prop_assert!(meet.is_subspace_of(&s).unwrap() && s.is_subspace_of(&sum).unwrap());
    }

    #[test]
    fn solve_is_sound(rows in 1usize..6, cols in 1usize..6, seed: u64) {
        let m = random_matrix(rows, cols, seed);
        let b = random_matrix(rows, 1, seed.wrapping_add(1)).column(0);
        if let Some(x) = solve(&m, &b).unwrap() {
            prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
        }
        // a vector in the image is always solvable
        let x0 = random_matrix(cols, 1, seed.wrapping_add(2)).column(0);
        prop_assert!(solve(&m, &m.mul_vec(&x0).unwrap()).unwrap().is_some());
    }

    #[test]
    fn generalized_eigenspaces_are_invariant(n in 1usize..6, seed: u64) {
        let mut r = rng(seed);
        // triangular conjugated by an invertible matrix, so eigenvalues are rational
        let mut t = random_matrix(n, n, seed);
        for i in 0..n {
            t[(i, i)] = int(r.gen_range(-2..=2));
            for j in 0..i {
                t[(i, j)] = int(0);
            }
        }
        let p = random_invertible(n, &mut r);
        let x = p.mul(&t).unwrap().mul(&p.inverse().unwrap()).unwrap();
        let mut total = 0;
        for lambda in rational_eigenvalues(&x).unwrap() {
            let v = generalized_eigenspace(&x, &lambda).unwrap();
            prop_assert!(v.is_invariant_under(&x).unwrap());
            total += v.dim();
        }
        prop_assert_eq!(total, n);
    }

    #[test]
    fn bracket_is_antisymmetric(idx in 0usize..10, seed: u64) {
        let l = catalog::builtin(CATALOG[idx]).unwrap().algebra;
        let mut r = rng(seed);
        let (x, y) = (random_element(&l, &mut r), random_element(&l, &mut r));
        prop_assert_eq!(l.bracket(&x, &y).unwrap(), l.bracket(&y, &x).unwrap().scale(&int(-1)));
    }

    #[test]
    fn verdict_survives_change_of_basis(idx in 0usize..10, seed: u64) {
        let l = catalog::builtin(CATALOG[idx]).unwrap().algebra;
        let mut r = rng(seed);
        let p = random_invertible(l.dim(), &mut r);
        let moved = l.change_of_basis(&p).unwrap();
        prop_assert!(moved.is_valid());
        prop_assert_eq!(moved.is_solvable(), l.is_solvable());
        prop_assert_eq!(moved.is_nilpotent_algebra(), l.is_nilpotent_algebra());
        let a = random_element(&l, &mut r);
        let before = nilpotent_in_all_reps(&l, &a).unwrap();
        let after = nilpotent_in_all_reps(&moved, &transport(&p, &a)).unwrap();
        prop_assert_eq!(before, after);
    }
}

#[test]
fn ad_is_a_homomorphism() {
    for (name, l) in catalog_algebras() {
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                let lhs = l.ad(&lienil::Element::new(l.bracket_basis(i, j))).unwrap();
                let rhs = l.ad_basis(i).commutator(&l.ad_basis(j)).unwrap();
                assert_eq!(lhs, rhs, "{name} ({i},{j})");
            }
        }
    }
}

#[test]
fn series_are_decreasing_chains_of_ideals() {
    for (name, l) in catalog_algebras() {
        for series in [l.derived_series(), l.lower_central_series()] {
            assert!(series[0].is_full(), "{name}");
            for w in series.windows(2) {
                assert!(w[1].is_subspace_of(&w[0]).unwrap(), "{name}");
            }
            for s in &series {
                assert!(l.is_ideal(s).unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn quotients_are_homomorphisms() {
    for (name, l) in catalog_algebras() {
        for ideal in [l.derived_algebra(), radical(&l).unwrap(), l.center()] {
            let q = l.quotient(&ideal).unwrap();
            let pi = q.matrix();
            assert_eq!(rank(pi), pi.rows(), "{name}");
            assert_eq!(q.target().dim(), l.dim() - ideal.dim(), "{name}");
            for i in 0..l.dim() {
                for j in 0..l.dim() {
                    let x = l.basis_element(i);
                    let y = l.basis_element(j);
                    let lhs = q.apply(&l.bracket(&x, &y).unwrap()).unwrap();
                    let rhs = q
                        .target()
                        .bracket(&q.apply(&x).unwrap(), &q.apply(&y).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs, "{name}");
                }
            }
        }
    }
}

#[test]
fn killing_form_is_symmetric_and_invariant() {
    for (name, l) in catalog_algebras() {
        let k = killing_matrix(&l);
        assert_eq!(k.gram().transpose(), *k.gram(), "{name}");
        let n = l.dim();
        for a in 0..n {
            for x in 0..n {
                for y in 0..n {
                    let ax = l.bracket_basis(a, x);
                    let ay = l.bracket_basis(a, y);
                    let lhs = k.eval(&ax, l.basis_element(y).coords()).unwrap()
                        + k.eval(l.basis_element(x).coords(), &ay).unwrap();
                    assert_eq!(lhs, int(0), "{name} ({a},{x},{y})");
                }
            }
        }
        // the radical is orthogonal to the derived algebra
        let rad = radical(&l).unwrap();
        for r in rad.basis() {
            for d in l.derived_algebra().basis() {
                assert_eq!(k.eval(r, d).unwrap(), int(0), "{name}");
            }
        }
    }
}

#[test]
fn constructions_are_representations() {
    for (name, l) in catalog_algebras() {
        let g = Arc::new(l.clone());
        let adj = adjoint_rep(&g);
        let triv = trivial(&g, 2);
        let q = l.quotient(&radical(&l).unwrap()).unwrap();
        let pulled = pullback(&adjoint_rep(&Arc::new(q.target().clone())), &q).unwrap();
        let mut seeds = vec![adj.clone(), triv, pulled];
        let derived = l.derived_algebra();
        if let Some(&axis) = derived.complement_axes().first() {
            let q = l.quotient(&derived).unwrap();
            let pos = derived
                .complement_axes()
                .iter()
                .position(|&a| a == axis)
                .unwrap();
            seeds.push(one_dim_rep(&g, q.matrix().row(pos)).unwrap());
        }
        let mut all = seeds.clone();
        for a in &seeds {
            all.push(dual(a));
            for b in &seeds {
                all.push(direct_sum(a, b).unwrap());
                if a.dim() * b.dim() <= 64 {
                    all.push(tensor(a, b).unwrap());
                }
            }
        }
        for rho in &all {
            assert!(validate_rep(rho).is_empty(), "{name}: {}", rho.label());
        }
        for i in 0..l.dim() {
            let e = l.basis_element(i);
            assert_eq!(
                acts_nilpotently(&adj, &e).unwrap(),
                is_nilpotent_element_power(&l, &e).unwrap(),
                "{name}"
            );
        }
    }
}

#[test]
fn nilpotent_actions_are_closed_under_sum_and_tensor() {
    let entry = catalog::builtin("sl2").unwrap();
    let l = &entry.algebra;
    let reps = &entry.irreducibles;
    for a in basis_and_pairs(l) {
        for r1 in reps {
            for r2 in reps {
                if acts_nilpotently(r1, &a).unwrap() && acts_nilpotently(r2, &a).unwrap() {
                    assert!(acts_nilpotently(&direct_sum(r1, r2).unwrap(), &a).unwrap());
                    assert!(acts_nilpotently(&tensor(r1, r2).unwrap(), &a).unwrap());
                }
            }
        }
    }
}

#[test]
fn weights_of_ideals() {
    for (name, l) in catalog_algebras() {
        let g = Arc::new(l.clone());
        let rho = adjoint_rep(&g);
        let rad = radical(&l).unwrap();
        if rad.is_zero() {
            continue;
        }
        let bracket = l.product_space(&l.full(), &rad).unwrap();
        for xi in rational_weights(&rho, &rad).unwrap() {
            let v = weight_space(&rho, &rad, &xi).unwrap();
            assert!(!v.is_zero(), "{name}");
            for m in rho.matrices() {
                assert!(v.is_invariant_under(m).unwrap(), "{name}");
            }
            for b in bracket.basis() {
                assert_eq!(xi.eval(b).unwrap(), Some(int(0)), "{name}");
            }
        }
    }
}

#[test]
fn oracle_special_cases() {
    for (name, l) in catalog_algebras() {
        let semisimple = is_semisimple(&l).unwrap();
        let solvable = radical(&l).unwrap().is_full();
        let mut r = rng(7);
        let mut elements = basis_and_pairs(&l);
        elements.extend((0..5).map(|_| random_element(&l, &mut r)));
        for a in elements {
            let v = nilpotent_in_all_reps(&l, &a).unwrap();
            if semisimple {
                assert_eq!(
                    v.answer,
                    is_nilpotent_element_power(&l, &a).unwrap(),
                    "{name}"
                );
            }
            if solvable {
                assert_eq!(
                    v.answer,
                    l.derived_algebra().contains(a.coords()).unwrap(),
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn semidirect_products_validate() {
    let mut checked = 0;
    for s_name in ["sl2", "sl3", "so3"] {
        let entry = catalog::builtin(s_name).unwrap();
        let g = Arc::new(entry.algebra.clone());
        let mut reps = entry.irreducibles.clone();
        reps.push(trivial(&g, 1));
        for rho in reps.iter().filter(|r| r.dim() <= 10) {
            let sd = catalog::semidirect(&entry.algebra, rho).unwrap();
            assert!(sd.algebra.is_valid(), "{s_name} ⋉ {}", rho.label());
            assert_eq!(radical(&sd.algebra).unwrap(), sd.known_radical);
            assert_eq!(sd.algebra.derived_algebra(), sd.known_derived);
            checked += 1;
        }
    }
    assert!(checked >= 8);
}

#[test]
fn sl2_irreps_are_representations() {
    for m in 0..=6 {
        let rho = catalog::sl2_irrep(m);
        assert_eq!(rho.dim(), m + 1);
        assert!(validate_rep(&rho).is_empty(), "m = {m}");
    }
}
