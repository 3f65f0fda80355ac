//! Hamiltonian sets for one- and two-qudit gates, and the Lie-closure
//! certificate of (non-)universality.
//!
//! A set of Hermitian generators `{H}` gives gates `e^{−iHτ}`; the group they
//! generate is dense in `SU(dⁿ)` exactly when the real Lie algebra spanned by
//! `{iH}` and all nested commutators has traceless dimension `d^{2n} − 1`.
//! [`lie_closure`] computes that span numerically.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{c64, expm_hermitian, ComplexMatrix, CONTRACT_TOL};
use crate::register::{embed_pair, embed_site, register_dim};
use crate::weyl::build_weyl;

/// Cap on `dⁿ` for sets intended for Lie closure.
pub const MAX_CLOSURE_DIM: usize = 81;

/// Default relative residual for accepting a new Lie-algebra direction.
pub const DEFAULT_CLOSURE_TOL: f64 = 1e-8;

/// Candidates with norm below this are treated as zero.
const ZERO_NORM: f64 = 1e-12;

#[derive(Debug, Clone, Serialize)]
pub struct Generator {
    pub label: String,
    pub matrix: ComplexMatrix,
}

/// Named list of Hermitian generators on an `n`-qudit register.
#[derive(Debug, Clone, Serialize)]
pub struct HamiltonianSet {
    pub d: usize,
    pub n: usize,
    pub name: String,
    pub generators: Vec<Generator>,
}

impl HamiltonianSet {
    pub fn new(d: usize, n: usize, name: impl Into<String>) -> Self {
        Self {
            d,
            n,
            name: name.into(),
            generators: Vec::new(),
        }
    }

    /// Appends a generator; a numerically zero matrix is dropped with a log note.
    pub fn push(&mut self, label: impl Into<String>, matrix: ComplexMatrix) {
        let label = label.into();
        if matrix.frobenius_norm() < ZERO_NORM {
            log::info!("{}: dropping zero generator {label}", self.name);
            return;
        }
        self.generators.push(Generator { label, matrix });
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.label.as_str()).collect()
    }

    pub fn get(&self, label: &str) -> Option<&ComplexMatrix> {
        self.generators
            .iter()
            .find(|g| g.label == label)
            .map(|g| &g.matrix)
    }

    /// Checks dimensions, Hermiticity and that every generator acts on a
    /// single site or on one neighbouring pair.
    pub fn validate(&self) -> Result<()> {
        let dim = register_dim(self.d, self.n, usize::MAX)?;
        for g in &self.generators {
            if g.matrix.rows() != dim || g.matrix.cols() != dim {
                return Err(Error::Shape(format!(
                    "generator {} is {}x{}, register dimension is {dim}",
                    g.label,
                    g.matrix.rows(),
                    g.matrix.cols()
                )));
            }
            let dev = g.matrix.hermiticity_deviation();
            if dev > CONTRACT_TOL {
                return Err(Error::Contract(format!(
                    "generator {} is not Hermitian (‖H − H†‖_F = {dev:.3e})",
                    g.label
                )));
            }
            let sites = support(&g.matrix, self.d, self.n);
            let local = match sites.as_slice() {
                [] | [_] => true,
                [a, b] => b - a == 1,
                _ => false,
            };
            if !local {
                return Err(Error::Contract(format!(
                    "generator {} acts on sites {sites:?}, not on a neighbouring pair",
                    g.label
                )));
            }
        }
        Ok(())
    }
}

/// 1-based sites on which `m` acts non-trivially, i.e. sites `s` for which
/// `m` is not of the form `R ⊗ I_s` (up to ordering).
pub fn support(m: &ComplexMatrix, d: usize, n: usize) -> Vec<usize> {
    let dim = m.rows();
    (0..n)
        .filter(|&s| {
            let right = d.pow((n - s - 1) as u32);
            let digit = |i: usize| (i / right) % d;
            let strip = |i: usize| i - digit(i) * right;
            for i in 0..dim {
                for j in 0..dim {
                    let v = m[(i, j)];
                    let (a, b) = (digit(i), digit(j));
                    let expected = if a != b {
                        Complex64::new(0.0, 0.0)
                    } else {
                        m[(strip(i), strip(j))]
                    };
                    if (v - expected).norm() > 1e-12 {
                        return true;
                    }
                }
            }
            false
        })
        .map(|s| s + 1)
        .collect()
}

fn ensure_closure_cap(d: usize, n: usize) -> Result<usize> {
    register_dim(d, n, MAX_CLOSURE_DIM)
}

/// Qubit Hamiltonians `X_k` and `Z_k Z_{k+1}`. They generate only a
/// `Spin(2n)` subgroup of dimension `n(2n − 1)`.
pub fn theorem1_set(n: usize) -> Result<HamiltonianSet> {
    if n < 2 {
        return Err(Error::Domain(format!("need n ≥ 2 qubits, got {n}")));
    }
    ensure_closure_cap(2, n)?;
    let w = build_weyl(2)?;
    let mut set = HamiltonianSet::new(2, n, "theorem1");
    for k in 1..=n {
        set.push(format!("X_{k}"), embed_site(w.x(), 2, n, k)?);
    }
    let zz = w.z().tensor(w.z());
    for k in 1..n {
        set.push(format!("Z_{k} Z_{}", k + 1), embed_pair(&zz, 2, n, k)?);
    }
    Ok(set)
}

/// [`theorem1_set`] plus the single-qubit `Z_1` and `Z_2`; universal.
pub fn theorem2_set(n: usize) -> Result<HamiltonianSet> {
    let mut set = theorem1_set(n)?;
    set.name = "theorem2".into();
    let w = build_weyl(2)?;
    set.push("Z_1", embed_site(w.z(), 2, n, 1)?);
    set.push("Z_2", embed_site(w.z(), 2, n, 2)?);
    Ok(set)
}

/// Hermitian parts `A + A†` and `i(A − A†)`.
fn hermitian_parts(a: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
    let ad = a.dagger();
    (a + &ad, &(a - &ad) * c64(0.0, 1.0))
}

/// Qudit set: Hermitian parts of `Z_1`, of every `X_k`, and of every
/// neighbouring `Z_k Z†_{k+1}`. The pair generators are diagonal.
pub fn theorem3_set(d: usize, n: usize) -> Result<HamiltonianSet> {
    if n < 2 {
        return Err(Error::Domain(format!("need n ≥ 2 qudits, got {n}")));
    }
    ensure_closure_cap(d, n)?;
    let w = build_weyl(d)?;
    let mut set = HamiltonianSet::new(d, n, "theorem3");
    let (p, q) = hermitian_parts(&embed_site(w.z(), d, n, 1)?);
    set.push("Z_1+Z_1^dag", p);
    set.push("i(Z_1-Z_1^dag)", q);
    for k in 1..=n {
        let (p, q) = hermitian_parts(&embed_site(w.x(), d, n, k)?);
        set.push(format!("X_{k}+X_{k}^dag"), p);
        set.push(format!("i(X_{k}-X_{k}^dag)"), q);
    }
    let pair = w.z().tensor(&w.z().dagger());
    for k in 1..n {
        let (p, q) = hermitian_parts(&embed_pair(&pair, d, n, k)?);
        let l = k + 1;
        set.push(format!("Z_{k}Z_{l}^dag+Z_{l}Z_{k}^dag"), p);
        set.push(format!("i(Z_{k}Z_{l}^dag-Z_{l}Z_{k}^dag)"), q);
    }
    Ok(set)
}

/// The four displayed one-qutrit Hamiltonians.
pub fn qutrit_one_site_hamiltonians() -> [ComplexMatrix; 4] {
    let i = c64(0.0, 1.0);
    let o = c64(0.0, 0.0);
    [
        ComplexMatrix::from_real_rows(&[&[1.0, 0.0, 0.0], &[0.0, -1.0, 0.0], &[0.0, 0.0, 0.0]]),
        ComplexMatrix::from_real_rows(&[&[1.0, 0.0, 0.0], &[0.0, 0.0, 0.0], &[0.0, 0.0, -1.0]]),
        ComplexMatrix::from_real_rows(&[&[0.0, 1.0, 1.0], &[1.0, 0.0, 1.0], &[1.0, 1.0, 0.0]]),
        ComplexMatrix::from_rows(&[vec![o, i, -i], vec![-i, o, i], vec![i, -i, o]]),
    ]
}

/// `Σ_k |k⟩⟨k| ⊗ |k⟩⟨k|` on two qutrits.
pub fn qutrit_pair_projector() -> ComplexMatrix {
    ComplexMatrix::diag(
        &(0..9)
            .map(|i| {
                if i / 3 == i % 3 {
                    c64(1.0, 0.0)
                } else {
                    c64(0.0, 0.0)
                }
            })
            .collect::<Vec<_>>(),
    )
}

/// Qutrit register: the four one-qutrit Hamiltonians and the Hermitian parts
/// of `X` at every site, plus the diagonal projector Hamiltonian on every
/// neighbouring pair.
pub fn qutrit_example_set(n: usize) -> Result<HamiltonianSet> {
    if n < 2 {
        return Err(Error::Domain(format!("need n ≥ 2 qutrits, got {n}")));
    }
    ensure_closure_cap(3, n)?;
    let w = build_weyl(3)?;
    let mut set = HamiltonianSet::new(3, n, "qutrit-example");
    let singles = qutrit_one_site_hamiltonians();
    let (xp, xq) = hermitian_parts(w.x());
    for k in 1..=n {
        for (idx, h) in singles.iter().enumerate() {
            set.push(format!("G{}_{k}", idx + 1), embed_site(h, 3, n, k)?);
        }
        set.push(format!("X_{k}+X_{k}^dag"), embed_site(&xp, 3, n, k)?);
        set.push(format!("i(X_{k}-X_{k}^dag)"), embed_site(&xq, 3, n, k)?);
    }
    let hd = qutrit_pair_projector();
    for k in 1..n {
        set.push(format!("H_d({k},{})", k + 1), embed_pair(&hd, 3, n, k)?);
    }
    Ok(set)
}

/// Outcome of [`lie_closure`].
#[derive(Debug, Clone)]
pub struct LieClosureResult {
    /// Real dimension of the span (identity direction included if present).
    pub dimension: usize,
    /// Dimension after projecting out the identity direction.
    pub traceless_dimension: usize,
    /// Orthonormal (under `Re Tr(A†B)`) anti-Hermitian basis.
    pub basis: Vec<ComplexMatrix>,
    /// Commutator sweeps performed.
    pub iterations: usize,
    pub converged: bool,
}

/// Real vector view of a matrix: interleaved real and imaginary parts, so the
/// Euclidean dot product equals `Re Tr(A†B)`.
fn flatten(m: &ComplexMatrix) -> Vec<f64> {
    m.as_slice().iter().flat_map(|z| [z.re, z.im]).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Orthonormal set of real vectors, grown by Gram–Schmidt.
struct RealSpan {
    vectors: Vec<Vec<f64>>,
    tol: f64,
}

impl RealSpan {
    fn new(tol: f64) -> Self {
        Self {
            vectors: Vec::new(),
            tol,
        }
    }

    /// Residual of `v` orthogonal to the span, as a unit vector, when its
    /// relative norm exceeds `tol`.
    fn new_direction(&self, v: &[f64]) -> Option<Vec<f64>> {
        let n0 = norm(v);
        if n0 < ZERO_NORM {
            return None;
        }
        let mut r: Vec<f64> = v.iter().map(|x| x / n0).collect();
        // Two passes of modified Gram–Schmidt.
        for _ in 0..2 {
            for q in &self.vectors {
                let c = dot(q, &r);
                r.iter_mut().zip(q).for_each(|(x, y)| *x -= c * y);
            }
        }
        let nr = norm(&r);
        if nr > self.tol {
            r.iter_mut().for_each(|x| *x /= nr);
            Some(r)
        } else {
            None
        }
    }

    fn try_push(&mut self, v: &[f64]) -> bool {
        match self.new_direction(v) {
            Some(r) => {
                self.vectors.push(r);
                true
            }
            None => false,
        }
    }

    fn len(&self) -> usize {
        self.vectors.len()
    }
}

fn unflatten(v: &[f64], dim: usize) -> ComplexMatrix {
    let data = v.chunks_exact(2).map(|p| c64(p[0], p[1])).collect();
    ComplexMatrix::from_vec(dim, dim, data).expect("square")
}

/// Real Lie algebra generated by `{iH}`.
///
/// Starting from the generators, every pair of current basis elements is
/// commuted once, in lexicographic order of `(j, i)` with `i < j`; each
/// commutator is orthogonalized against the basis and its residual appended
/// when the relative norm exceeds `tol`. Sweeps repeat over the pairs that
/// involve newly added elements until a sweep adds nothing, or the dimension
/// reaches `max_dim`. In the latter case the remaining pairs are still
/// checked, and any further direction marks the result as not converged.
pub fn lie_closure(set: &HamiltonianSet, tol: f64, max_dim: usize) -> Result<LieClosureResult> {
    if set.is_empty() {
        return Err(Error::Domain("empty generator set".into()));
    }
    let dim = set.generators[0].matrix.rows();
    for g in &set.generators {
        if g.matrix.rows() != dim || !g.matrix.is_square() {
            return Err(Error::Shape(format!(
                "generator {} has inconsistent shape",
                g.label
            )));
        }
        let dev = g.matrix.hermiticity_deviation();
        if dev > CONTRACT_TOL {
            return Err(Error::Contract(format!(
                "generator {} is not Hermitian (‖H − H†‖_F = {dev:.3e})",
                g.label
            )));
        }
    }

    let mut span = RealSpan::new(tol);
    let mut basis: Vec<ComplexMatrix> = Vec::new();
    let mut overflow = false;
    for g in &set.generators {
        let ih = &g.matrix * c64(0.0, 1.0);
        if let Some(r) = span.new_direction(&flatten(&ih)) {
            if span.len() >= max_dim {
                overflow = true;
                break;
            }
            basis.push(unflatten(&r, dim));
            span.vectors.push(r);
        }
    }

    let mut done = 0;
    let mut iterations = 0;
    while !overflow && done < basis.len() {
        iterations += 1;
        let end = basis.len();
        for j in done..end {
            for i in 0..j {
                let c = basis[i].commutator(&basis[j]);
                let Some(r) = span.new_direction(&flatten(&c)) else {
                    continue;
                };
                if span.len() >= max_dim {
                    overflow = true;
                    break;
                }
                basis.push(unflatten(&r, dim));
                span.vectors.push(r);
            }
            if overflow {
                break;
            }
        }
        done = end;
    }

    let traceless_dimension = traceless_rank(&basis, tol);
    Ok(LieClosureResult {
        dimension: basis.len(),
        traceless_dimension,
        basis,
        iterations,
        converged: !overflow,
    })
}

/// Rank of the basis after removing each element's trace part.
fn traceless_rank(basis: &[ComplexMatrix], tol: f64) -> usize {
    let mut span = RealSpan::new(tol);
    for b in basis {
        let dim = b.rows();
        let shift = b.trace() / dim as f64;
        let t = b - &(&ComplexMatrix::identity(dim) * shift);
        span.try_push(&flatten(&t));
    }
    span.len()
}

/// Universality verdict for a Hamiltonian set.
#[derive(Debug, Clone, Serialize)]
pub struct UniversalityReport {
    pub dimension: usize,
    pub traceless_dimension: usize,
    /// `d^{2n} − 1 = dim su(dⁿ)`.
    pub target: usize,
    pub universal: bool,
    pub iterations: usize,
    pub converged: bool,
}

/// True iff the traceless part of the closure has dimension `d^{2n} − 1`.
pub fn is_universal(set: &HamiltonianSet, tol: f64) -> Result<UniversalityReport> {
    let dim = set
        .generators
        .first()
        .map(|g| g.matrix.rows())
        .ok_or_else(|| Error::Domain("empty generator set".into()))?;
    let closure = lie_closure(set, tol, dim * dim)?;
    let target = dim * dim - 1;
    Ok(UniversalityReport {
        dimension: closure.dimension,
        traceless_dimension: closure.traceless_dimension,
        target,
        universal: closure.converged && closure.traceless_dimension >= target,
        iterations: closure.iterations,
        converged: closure.converged,
    })
}

/// `e^{−iHτ}`.
pub fn gate(h: &ComplexMatrix, tau: f64) -> Result<ComplexMatrix> {
    expm_hermitian(h, tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pauli() -> (ComplexMatrix, ComplexMatrix) {
        let w = build_weyl(2).unwrap();
        (w.x().clone(), w.z().clone())
    }

    fn closure_dim(set: &HamiltonianSet) -> usize {
        let dim = set.generators[0].matrix.rows();
        let r = lie_closure(set, DEFAULT_CLOSURE_TOL, dim * dim).unwrap();
        assert!(r.converged);
        r.dimension
    }

    #[test]
    fn abelian_and_su2() {
        let (x, z) = pauli();
        let mut s = HamiltonianSet::new(2, 1, "z");
        s.push("Z", z.clone());
        assert_eq!(closure_dim(&s), 1);
        s.push("X", x);
        assert_eq!(closure_dim(&s), 3);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut s = HamiltonianSet::new(3, 1, "bad");
        s.push("X", build_weyl(3).unwrap().x().clone());
        assert!(matches!(lie_closure(&s, 1e-8, 9), Err(Error::Contract(_))));
    }

    #[test]
    fn theorem1_generators() {
        let s = theorem1_set(2).unwrap();
        let (x, z) = pauli();
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(s.len(), 3);
        assert_eq!(s.generators[0].matrix, x.tensor(&i2));
        assert_eq!(s.generators[1].matrix, i2.tensor(&x));
        assert_eq!(s.generators[2].matrix, z.tensor(&z));
        assert_eq!(theorem1_set(3).unwrap().len(), 5);
        assert!(matches!(theorem1_set(1), Err(Error::Domain(_))));
        s.validate().unwrap();
    }

    #[test]
    fn theorem1_spin_dimension() {
        assert_eq!(closure_dim(&theorem1_set(2).unwrap()), 6);
        assert_eq!(closure_dim(&theorem1_set(3).unwrap()), 15);
    }

    #[test]
    fn theorem2_is_universal_for_two_qubits() {
        let s = theorem2_set(2).unwrap();
        assert_eq!(s.len(), 5);
        let r = is_universal(&s, DEFAULT_CLOSURE_TOL).unwrap();
        assert_eq!(r.dimension, 15);
        assert!(r.universal);
        assert!(
            !is_universal(&theorem1_set(2).unwrap(), DEFAULT_CLOSURE_TOL)
                .unwrap()
                .universal
        );
    }

    #[test]
    fn theorem3_qubit_degenerates() {
        // At d = 2 every i(A − A†) vanishes and is dropped, leaving the
        // theorem1_set generators plus Z_1 (each doubled).
        let s = theorem3_set(2, 2).unwrap();
        assert_eq!(s.len(), 4);
        let t1 = theorem1_set(2).unwrap();
        let w = build_weyl(2).unwrap();
        let mut expected: Vec<ComplexMatrix> = vec![embed_site(w.z(), 2, 2, 1).unwrap()];
        expected.extend(t1.generators.iter().map(|g| g.matrix.clone()));
        for g in &s.generators {
            assert!(
                expected
                    .iter()
                    .any(|e| (&g.matrix * 0.5).distance(e) < 1e-15),
                "{}",
                g.label
            );
        }
        // Spin(4) extended by one linear Clifford generator closes on so(5).
        assert_eq!(closure_dim(&s), 10);
    }

    #[test]
    fn theorem3_qutrit_structure() {
        let s = theorem3_set(3, 2).unwrap();
        assert_eq!(s.len(), 8);
        s.validate().unwrap();
        for g in &s.generators {
            if g.label.starts_with("Z_1Z_2") || g.label.starts_with("i(Z_1Z_2") {
                assert!(g.matrix.is_diagonal(), "{}", g.label);
                assert_eq!(support(&g.matrix, 3, 2), vec![1, 2]);
            }
        }
    }

    #[test]
    fn qutrit_example_matrices() {
        let [g1, _, g3, g4] = qutrit_one_site_hamiltonians();
        assert_eq!(
            g1,
            ComplexMatrix::diag(&[c64(1.0, 0.0), c64(-1.0, 0.0), c64(0.0, 0.0)])
        );
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 0.0 } else { 1.0 };
                assert_eq!(g3[(i, j)], c64(want, 0.0));
            }
        }
        assert_eq!(g4.hermiticity_deviation(), 0.0);
        let hd = qutrit_pair_projector();
        let diag: Vec<f64> = (0..9).map(|i| hd[(i, i)].re).collect();
        assert_eq!(diag, vec![1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]);
        assert!(hd.is_diagonal());
        qutrit_example_set(2).unwrap().validate().unwrap();
    }

    #[test]
    fn support_detects_locality() {
        let w = build_weyl(2).unwrap();
        let xzx = w.x().tensor(w.z()).tensor(w.x());
        assert_eq!(support(&xzx, 2, 3), vec![1, 2, 3]);
        let mut s = HamiltonianSet::new(2, 3, "nonlocal");
        s.push(
            "XIX",
            w.x().tensor(&ComplexMatrix::identity(2)).tensor(w.x()),
        );
        assert!(matches!(s.validate(), Err(Error::Contract(_))));
    }

    #[test]
    fn closure_basis_is_orthonormal_anti_hermitian_and_closed() {
        let s = theorem1_set(3).unwrap();
        let r = lie_closure(&s, DEFAULT_CLOSURE_TOL, 64).unwrap();
        for (i, a) in r.basis.iter().enumerate() {
            assert!((a + &a.dagger()).frobenius_norm() <= 1e-8);
            for (j, b) in r.basis.iter().enumerate() {
                let ip = a.hs_inner(b).unwrap().re;
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((ip - want).abs() <= 1e-8);
            }
        }
        let mut span = RealSpan::new(0.0);
        for b in &r.basis {
            span.vectors.push(flatten(b));
        }
        for a in &r.basis {
            for b in &r.basis {
                let c = flatten(&a.commutator(b));
                let n0 = norm(&c);
                if n0 < ZERO_NORM {
                    continue;
                }
                let mut res = c.clone();
                for q in &span.vectors {
                    let k = dot(q, &res);
                    res.iter_mut().zip(q).for_each(|(x, y)| *x -= k * y);
                }
                assert!(norm(&res) <= 1e-6 * n0.max(1.0));
            }
        }
    }

    #[test]
    fn max_dim_hit_reports_not_converged() {
        let r = lie_closure(&theorem2_set(2).unwrap(), DEFAULT_CLOSURE_TOL, 8).unwrap();
        assert!(!r.converged);
        assert_eq!(r.dimension, 8);
    }

    #[test]
    fn identity_direction_is_excluded_from_count() {
        let (x, z) = pauli();
        let mut s = HamiltonianSet::new(2, 1, "u2");
        s.push("X", x);
        s.push("Z", z);
        s.push("I", ComplexMatrix::identity(2));
        let r = is_universal(&s, DEFAULT_CLOSURE_TOL).unwrap();
        assert_eq!(r.dimension, 4);
        assert_eq!(r.traceless_dimension, 3);
        assert!(r.universal);
    }

    #[test]
    fn gates() {
        let z = ComplexMatrix::zeros(4, 4);
        assert!(gate(&z, 1.0).unwrap().distance(&ComplexMatrix::identity(4)) < 1e-15);
        let g = gate(&qutrit_pair_projector(), PI).unwrap();
        let want: Vec<Complex64> = (0..9)
            .map(|i| {
                if i / 3 == i % 3 {
                    c64(-1.0, 0.0)
                } else {
                    c64(1.0, 0.0)
                }
            })
            .collect();
        assert!(g.distance(&ComplexMatrix::diag(&want)) < 1e-14);
        let (x, _) = pauli();
        let g = gate(&x, PI / 2.0).unwrap();
        assert!(g.unitarity_deviation() <= 1e-10);
        assert!(g.distance(&(&x * c64(0.0, -1.0))) < 1e-14);
    }
}
