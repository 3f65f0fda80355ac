use qwl_core::universality::{
    is_universal, lie_closure, qutrit_example_set, theorem1_set, theorem2_set, theorem3_set,
    HamiltonianSet, DEFAULT_CLOSURE_TOL,
};

fn dim(set: &HamiltonianSet) -> usize {
    let n = set.generators[0].matrix.rows();
    let r = lie_closure(set, DEFAULT_CLOSURE_TOL, n * n).unwrap();
    assert!(r.converged);
    r.dimension
}

#[test]
fn theorem1_quadratic_dimension() {
    for n in [2usize, 3] {
        assert_eq!(dim(&theorem1_set(n).unwrap()), n * (2 * n - 1));
    }
}

#[test]
fn theorem2_full_su() {
    assert_eq!(dim(&theorem2_set(2).unwrap()), 15);
    assert_eq!(dim(&theorem2_set(3).unwrap()), 63);
}

#[test]
fn qutrit_sets_reach_su9() {
    let r = is_universal(&theorem3_set(3, 2).unwrap(), DEFAULT_CLOSURE_TOL).unwrap();
    assert_eq!((r.traceless_dimension, r.universal), (80, true));
    let r = is_universal(&qutrit_example_set(2).unwrap(), DEFAULT_CLOSURE_TOL).unwrap();
    assert_eq!((r.traceless_dimension, r.universal), (80, true));
}

#[test]
fn closure_dimension_is_invariant_under_reparametrization() {
    let base = theorem2_set(2).unwrap();
    // (a) permutation
    let mut permuted = base.clone();
    permuted.generators.reverse();
    permuted.generators.rotate_left(2);
    assert_eq!(dim(&permuted), 15);
    // (b) nonzero real rescaling
    let mut scaled = base.clone();
    for (i, g) in scaled.generators.iter_mut().enumerate() {
        g.matrix = &g.matrix * (if i % 2 == 0 { -3.5 } else { 0.25 });
    }
    assert_eq!(dim(&scaled), 15);
    // (c) add a real combination of the others
    let mut mixed = base.clone();
    let extra = &(&base.generators[1].matrix * 0.7) + &(&base.generators[4].matrix * -1.3);
    mixed.generators[0].matrix = &mixed.generators[0].matrix + &extra;
    assert_eq!(dim(&mixed), 15);
}

#[test]
fn converged_basis_is_anti_hermitian() {
    let r = lie_closure(&qutrit_example_set(2).unwrap(), DEFAULT_CLOSURE_TOL, 81).unwrap();
    assert!(r.converged);
    for b in &r.basis {
        assert!((b + &b.dagger()).frobenius_norm() <= 1e-8);
    }
}
