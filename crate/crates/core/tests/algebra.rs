use num_complex::Complex64;
use proptest::prelude::*;
use qwl_core::matrix::{c64, expm_hermitian, hermitian_eig, ComplexMatrix};
use qwl_core::register::{
    build_x_family, build_z_family, verify_pairing, verify_power_identity, verify_quantum_plane,
};
use qwl_core::weyl::relation_report;
use qwl_core::{build_weyl, weyl_monomial, RandomSource};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), rows * cols).prop_map(move |v| {
        ComplexMatrix::from_vec(rows, cols, v.into_iter().map(|(r, i)| c64(r, i)).collect())
            .unwrap()
    })
}

fn hermitian(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    matrix(n, n).prop_map(|a| &(&a + &a.dagger()) * 0.5)
}

/// Gaussian-integer entries, so products are exact in floating point.
fn integer_matrix(rows: usize, cols: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-8i32..8, -8i32..8), rows * cols).prop_map(move |v| {
        ComplexMatrix::from_vec(
            rows,
            cols,
            v.into_iter()
                .map(|(r, i)| c64(r as f64, i as f64))
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn tensor_is_associative(a in integer_matrix(2, 3), b in integer_matrix(2, 2), c in integer_matrix(3, 1)) {
        prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
    }

    #[test]
    fn dagger_reverses_products(a in matrix(3, 4), b in matrix(4, 2)) {
        let lhs = (&a * &b).dagger();
        let rhs = &b.dagger() * &a.dagger();
        prop_assert!(lhs.distance(&rhs) <= 1e-14);
    }

    #[test]
    fn exponential_inverts(h in hermitian(4), tau in -3.0f64..3.0) {
        let g = expm_hermitian(&h, tau).unwrap();
        let back = expm_hermitian(&h, -tau).unwrap();
        prop_assert!((&g * &back).distance(&ComplexMatrix::identity(4)) <= 1e-10);
        prop_assert!(g.unitarity_deviation() <= 1e-10);
    }

    #[test]
    fn hermitian_eig_reconstructs(h in hermitian(5)) {
        let e = hermitian_eig(&h).unwrap();
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(e.vectors.unitarity_deviation() <= 1e-10);
        let lam: Vec<Complex64> = e.values.iter().map(|&x| c64(x, 0.0)).collect();
        let rec = &(&e.vectors * &ComplexMatrix::diag(&lam)) * &e.vectors.dagger();
        prop_assert!(rec.distance(&h) <= 1e-10 * h.frobenius_norm().max(1.0));
    }
}

#[test]
fn weyl_relations_and_unitarity_up_to_16() {
    for d in 2..=16 {
        let w = build_weyl(d).unwrap();
        let r = relation_report(&w);
        assert!(r.uv <= 1e-12 && r.powers <= 1e-12, "d={d}: {r:?}");
        assert!(r.max() <= 1e-12, "d={d}: {r:?}");
        for m in [w.u(), w.v(), w.x(), w.y(), w.z()] {
            assert!(m.unitarity_deviation() <= 1e-12);
        }
    }
}

#[test]
fn any_root_phase_on_y_keeps_commutation() {
    let w = build_weyl(5).unwrap();
    for k in 0..5 {
        let y = w.y() * w.zeta_pow(k);
        assert!((w.x() * &y).distance(&(&(&y * w.x()) * w.zeta())) <= 1e-12);
        assert!((&y * w.z()).distance(&(&(w.z() * &y) * w.zeta())) <= 1e-12);
    }
}

#[test]
fn monomials_are_hs_orthogonal() {
    let w = build_weyl(3).unwrap();
    let monos: Vec<ComplexMatrix> = (0..3)
        .flat_map(|a| (0..3).map(move |b| (a, b)))
        .map(|(a, b)| weyl_monomial(&w, a, b).unwrap())
        .collect();
    for (i, a) in monos.iter().enumerate() {
        for (j, b) in monos.iter().enumerate() {
            let want = if i == j { 3.0 } else { 0.0 };
            assert!((a.hs_inner(b).unwrap() - c64(want, 0.0)).norm() <= 1e-12);
        }
    }
}

#[test]
fn family_members_are_hs_orthogonal() {
    for (d, n) in [(2, 2), (3, 2), (2, 3)] {
        let f = build_x_family(d, n).unwrap();
        for (j, a) in f.iter().enumerate() {
            for b in &f[j + 1..] {
                assert!(a.matrix.hs_inner(&b.matrix).unwrap().norm() <= 1e-12);
            }
        }
    }
}

#[test]
fn qubit_pair_family_matches_tensor() {
    let w = build_weyl(2).unwrap();
    assert_eq!(build_x_family(2, 2).unwrap()[2].matrix, w.z().tensor(w.x()));
}

#[test]
fn quantum_plane_and_power_identity() {
    let mut rng = RandomSource::new(8);
    for (d, n) in [(2, 3), (3, 2), (5, 2)] {
        for family in [build_x_family(d, n).unwrap(), build_z_family(d, n).unwrap()] {
            assert!(verify_quantum_plane(&family, d).unwrap() <= 1e-12);
            for _ in 0..20 {
                let coeffs: Vec<Complex64> = (0..2 * n).map(|_| rng.complex_normal()).collect();
                assert!(verify_power_identity(&family, &coeffs, d).unwrap() <= 1e-9);
            }
        }
    }
}

#[test]
fn pairing_identities() {
    for (d, n) in [(2, 2), (3, 2), (3, 3)] {
        assert!(verify_pairing(d, n).unwrap() <= 1e-12);
    }
}
