//! Mutually unbiased bases for prime `d` and state reconstruction from
//! projective measurement counts.
//!
//! For prime `d` the eigenbases of `Z, X, XZ, …, XZ^{d−1}` are mutually
//! unbiased. Measuring every basis gives `d(d+1)` outcome frequencies, which
//! over-determine the `d² − 1` real parameters of a density matrix; the
//! estimate is the least-squares solution over Hermitian unit-trace matrices,
//! followed by a clip-and-renormalize projection onto the positive cone.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{
    c64, fix_phase, hermitian_eig, unitary_eig, vec_inner, vec_norm, ComplexMatrix, CONTRACT_TOL,
};
use crate::rng::RandomSource;
use crate::weyl::{build_weyl, root_of_unity, weyl_monomial};

/// Largest prime accepted by [`mub_prime`].
pub const MAX_MUB_DIM: usize = 31;

/// Hermitian, unit-trace, positive semidefinite `d×d` matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityMatrix {
    d: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates the density-matrix invariants at tolerance `1e-10`.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Shape(format!(
                "{}x{} is not square",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let d = matrix.rows();
        let herm = matrix.hermiticity_deviation();
        if herm > CONTRACT_TOL {
            return Err(Error::Contract(format!(
                "state is not Hermitian (deviation {herm:.3e})"
            )));
        }
        let tr = matrix.trace();
        if (tr - c64(1.0, 0.0)).norm() > CONTRACT_TOL {
            return Err(Error::Contract(format!("state trace is {tr}, expected 1")));
        }
        let min = hermitian_eig(&matrix)?.values[0];
        if min < -CONTRACT_TOL {
            return Err(Error::Contract(format!(
                "state has negative eigenvalue {min:.3e}"
            )));
        }
        Ok(Self { d, matrix })
    }

    /// `|ψ⟩⟨ψ|` for a unit vector.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        check_unit(psi)?;
        let d = psi.len();
        Self::new(ComplexMatrix::from_fn(d, d, |i, j| psi[i] * psi[j].conj()))
    }

    /// `I/d`.
    pub fn maximally_mixed(d: usize) -> Self {
        Self {
            d,
            matrix: &ComplexMatrix::identity(d) * (1.0 / d as f64),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }
}

fn check_unit(v: &[Complex64]) -> Result<()> {
    let n = vec_norm(v);
    if (n - 1.0).abs() > CONTRACT_TOL {
        return Err(Error::Contract(format!("vector norm is {n}, expected 1")));
    }
    Ok(())
}

/// `d + 1` mutually unbiased bases, one `d×d` matrix of column vectors each.
#[derive(Debug, Clone, Serialize)]
pub struct MubSet {
    pub d: usize,
    pub bases: Vec<ComplexMatrix>,
    pub labels: Vec<String>,
}

/// Outcome counts for one basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeasurementRecord {
    pub basis: usize,
    pub counts: Vec<u64>,
    pub shots: u64,
}

/// Trial division.
pub fn is_prime(d: usize) -> bool {
    if d < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// MUBs from the eigenbases of `Z` and `XZ^m`, `m = 0..d`.
///
/// Basis 0 is the computational basis; basis `m + 1` holds the eigenvectors
/// of `XZ^m` ordered by eigenvalue phase, each with its first component real
/// and positive.
pub fn mub_prime(d: usize) -> Result<MubSet> {
    if !is_prime(d) {
        return Err(Error::Domain(format!(
            "d must be prime (Galois-field construction out of scope), got {d}"
        )));
    }
    if d > MAX_MUB_DIM {
        return Err(Error::Capacity(format!(
            "d = {d} exceeds the cap of {MAX_MUB_DIM}"
        )));
    }
    let w = build_weyl(d)?;
    let mut bases = vec![ComplexMatrix::identity(d)];
    let mut labels = vec!["Z".to_string()];
    for m in 0..d {
        let op = weyl_monomial(&w, 1, m)?;
        bases.push(unitary_eig(&op)?.vectors);
        labels.push(match m {
            0 => "X".to_string(),
            1 => "XZ".to_string(),
            _ => format!("XZ^{m}"),
        });
    }
    Ok(MubSet { d, bases, labels })
}

/// Mutual-unbiasedness and orthonormality deviations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MubReport {
    /// `max | |⟨φ|ψ⟩|² − 1/d |` over vectors in different bases.
    pub cross: f64,
    /// `max |⟨φ_i|φ_j⟩ − δ_ij|` within each basis.
    pub orthonormality: f64,
}

impl MubReport {
    pub fn max(&self) -> f64 {
        self.cross.max(self.orthonormality)
    }
}

pub fn mub_report(set: &MubSet) -> MubReport {
    let inv_d = 1.0 / set.d as f64;
    let cols: Vec<Vec<Vec<Complex64>>> = set.bases.iter().map(|b| b.columns()).collect();
    let mut cross: f64 = 0.0;
    let mut ortho: f64 = 0.0;
    for (a, ba) in cols.iter().enumerate() {
        for (i, u) in ba.iter().enumerate() {
            for (j, v) in ba.iter().enumerate() {
                let want = if i == j { c64(1.0, 0.0) } else { c64(0.0, 0.0) };
                ortho = ortho.max((vec_inner(u, v) - want).norm());
            }
            for bb in &cols[a + 1..] {
                for v in bb {
                    cross = cross.max((vec_inner(u, v).norm_sqr() - inv_d).abs());
                }
            }
        }
    }
    MubReport {
        cross,
        orthonormality: ortho,
    }
}

/// Largest deviation from mutual unbiasedness or orthonormality.
pub fn verify_mub(set: &MubSet) -> f64 {
    mub_report(set).max()
}

/// Closed-form vector `(1/√d) e^{2πi(a k² + b k)/d}`, `k = 0..d`.
pub fn quadratic_phase_vector(d: usize, a: usize, b: usize) -> Vec<Complex64> {
    let s = 1.0 / (d as f64).sqrt();
    (0..d)
        .map(|k| root_of_unity(((a * k * k + b * k) % d) as i64, d as u64) * s)
        .collect()
}

/// Finds `(a, b)` with `v` equal to [`quadratic_phase_vector`] up to a global
/// phase; returns the match and its deviation.
pub fn match_quadratic_phase(v: &[Complex64]) -> (usize, usize, f64) {
    let d = v.len();
    let mut target = v.to_vec();
    fix_phase(&mut target);
    let mut best = (0, 0, f64::INFINITY);
    for a in 0..d {
        for b in 0..d {
            let mut c = quadratic_phase_vector(d, a, b);
            fix_phase(&mut c);
            let dev = c
                .iter()
                .zip(&target)
                .map(|(x, y)| (x - y).norm_sqr())
                .sum::<f64>()
                .sqrt();
            if dev < best.2 {
                best = (a, b, dev);
            }
        }
    }
    best
}

/// `⟨φ|ρ|φ⟩`, clamped to `[0, 1]`.
pub fn born_probability(rho: &DensityMatrix, phi: &[Complex64]) -> Result<f64> {
    check_unit(phi)?;
    if phi.len() != rho.d {
        return Err(Error::Shape(format!(
            "vector of length {} for d = {}",
            phi.len(),
            rho.d
        )));
    }
    let p = vec_inner(phi, &rho.matrix.apply(phi)).re;
    Ok(p.clamp(0.0, 1.0))
}

/// Outcome probabilities of every basis.
pub fn exact_probabilities(rho: &DensityMatrix, set: &MubSet) -> Result<Vec<Vec<f64>>> {
    set.bases
        .iter()
        .map(|b| {
            b.columns()
                .iter()
                .map(|phi| born_probability(rho, phi))
                .collect()
        })
        .collect()
}

/// Multinomial counts for each basis. Basis `i` draws from its own stream
/// seeded with `seed ^ i`, so results do not depend on evaluation order.
pub fn simulate_measurements(
    rho: &DensityMatrix,
    set: &MubSet,
    shots: u64,
    rng: &RandomSource,
) -> Result<Vec<MeasurementRecord>> {
    if shots == 0 {
        return Err(Error::Domain("shots must be at least 1".into()));
    }
    let probs = exact_probabilities(rho, set)?;
    Ok(probs
        .iter()
        .enumerate()
        .map(|(i, p)| MeasurementRecord {
            basis: i,
            counts: rng.derive(i as u64).multinomial(shots, p),
            shots,
        })
        .collect())
}

/// Orthonormal basis of traceless Hermitian `d×d` matrices (generalized
/// Gell-Mann, normalized to `Tr(G_i G_j) = δ_ij`).
fn traceless_hermitian_basis(d: usize) -> Vec<ComplexMatrix> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut out = Vec::with_capacity(d * d - 1);
    for j in 0..d {
        for k in j + 1..d {
            let mut sym = ComplexMatrix::zeros(d, d);
            sym[(j, k)] = c64(s, 0.0);
            sym[(k, j)] = c64(s, 0.0);
            out.push(sym);
            let mut anti = ComplexMatrix::zeros(d, d);
            anti[(j, k)] = c64(0.0, -s);
            anti[(k, j)] = c64(0.0, s);
            out.push(anti);
        }
    }
    for l in 1..d {
        let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let diag: Vec<Complex64> = (0..d)
            .map(|i| match i.cmp(&l) {
                std::cmp::Ordering::Less => c64(norm, 0.0),
                std::cmp::Ordering::Equal => c64(-(l as f64) * norm, 0.0),
                std::cmp::Ordering::Greater => c64(0.0, 0.0),
            })
            .collect();
        out.push(ComplexMatrix::diag(&diag));
    }
    out
}

/// Diagnostics of [`reconstruct`].
#[derive(Debug, Clone, Serialize)]
pub struct ReconstructionDiagnostics {
    /// Euclidean norm of the least-squares residual before projection.
    pub residual: f64,
    /// Smallest eigenvalue of the linear-inversion estimate.
    pub min_eigenvalue: f64,
    /// Number of negative eigenvalues clipped to zero.
    pub clipped: usize,
    /// `‖ρ_projected − ρ_linear‖_F`
    pub projection_shift: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Reconstruction {
    pub state: DensityMatrix,
    /// Linear-inversion estimate before positivity repair.
    pub linear: ComplexMatrix,
    pub diagnostics: ReconstructionDiagnostics,
}

/// Least-squares estimate of `ρ` from the frequencies `counts/shots` of every
/// basis, with `ρ = I/d + Σ c_j G_j` over an orthonormal traceless Hermitian
/// basis, then clip-and-renormalize positivity repair.
pub fn reconstruct(records: &[MeasurementRecord], set: &MubSet) -> Result<Reconstruction> {
    let d = set.d;
    let nb = set.bases.len();
    let mut seen = vec![false; nb];
    for r in records {
        if r.basis >= nb {
            return Err(Error::Domain(format!(
                "record for unknown basis {}",
                r.basis
            )));
        }
        if r.counts.len() != d {
            return Err(Error::Shape(format!(
                "basis {} has {} outcomes, expected {d}",
                r.basis,
                r.counts.len()
            )));
        }
        if r.shots == 0 || r.counts.iter().sum::<u64>() != r.shots {
            return Err(Error::Contract(format!(
                "counts of basis {} do not sum to shots",
                r.basis
            )));
        }
        seen[r.basis] = true;
    }
    let missing: Vec<usize> = (0..nb).filter(|&i| !seen[i]).collect();
    if !missing.is_empty() {
        return Err(Error::Underdetermined(format!(
            "no measurements for bases {missing:?}"
        )));
    }

    let rows: Vec<(Vec<Complex64>, f64)> = records
        .iter()
        .flat_map(|r| {
            let cols = set.bases[r.basis].columns();
            cols.into_iter()
                .zip(&r.counts)
                .map(move |(phi, &c)| (phi, c as f64 / r.shots as f64))
                .collect::<Vec<_>>()
        })
        .collect();
    invert(&rows, d)
}

/// [`reconstruct`] from outcome probabilities instead of counts:
/// `probabilities[b][k]` belongs to vector `k` of basis `b`, every basis given.
pub fn reconstruct_from_probabilities(
    probabilities: &[Vec<f64>],
    set: &MubSet,
) -> Result<Reconstruction> {
    let d = set.d;
    if probabilities.len() != set.bases.len() {
        return Err(Error::Underdetermined(format!(
            "{} probability vectors for {} bases",
            probabilities.len(),
            set.bases.len()
        )));
    }
    for (b, p) in probabilities.iter().enumerate() {
        if p.len() != d {
            return Err(Error::Shape(format!(
                "basis {b} has {} outcomes, expected {d}",
                p.len()
            )));
        }
        let total: f64 = p.iter().sum();
        if p.iter().any(|x| !x.is_finite() || *x < -CONTRACT_TOL) || (total - 1.0).abs() > 1e-8 {
            return Err(Error::Contract(format!(
                "basis {b} is not a probability vector"
            )));
        }
    }
    let rows: Vec<(Vec<Complex64>, f64)> = set
        .bases
        .iter()
        .zip(probabilities)
        .flat_map(|(basis, p)| basis.columns().into_iter().zip(p.iter().copied()))
        .collect();
    invert(&rows, d)
}

/// Least squares over `(vector, frequency)` rows, then positivity repair.
fn invert(rows: &[(Vec<Complex64>, f64)], d: usize) -> Result<Reconstruction> {
    let gens = traceless_hermitian_basis(d);
    let a = DMatrix::from_fn(rows.len(), gens.len(), |i, j| {
        let phi = &rows[i].0;
        vec_inner(phi, &gens[j].apply(phi)).re
    });
    let rhs = DVector::from_fn(rows.len(), |i, _| rows[i].1 - 1.0 / d as f64);
    let svd = a.clone().svd(true, true);
    let coeffs = svd
        .solve(&rhs, 1e-12)
        .map_err(|e| Error::Underdetermined(e.to_string()))?;
    let residual = (&a * &coeffs - &rhs).norm();

    let mut linear = &ComplexMatrix::identity(d) * (1.0 / d as f64);
    for (g, c) in gens.iter().zip(coeffs.iter()) {
        linear += &(g * *c);
    }
    let (state, min_eigenvalue, clipped) = project_to_state(&linear)?;
    let projection_shift = state.matrix.distance(&linear);
    Ok(Reconstruction {
        state,
        linear,
        diagnostics: ReconstructionDiagnostics {
            residual,
            min_eigenvalue,
            clipped,
            projection_shift,
        },
    })
}

/// Clips negative eigenvalues to zero and renormalizes the trace.
fn project_to_state(h: &ComplexMatrix) -> Result<(DensityMatrix, f64, usize)> {
    let eig = hermitian_eig(h)?;
    let min = eig.values[0];
    if min >= 0.0 {
        let sym = &(h + &h.dagger()) * 0.5;
        let tr = sym.trace().re;
        return Ok((DensityMatrix::new(&sym * (1.0 / tr))?, min, 0));
    }
    let clipped = eig.values.iter().filter(|&&v| v < 0.0).count();
    let kept: Vec<f64> = eig.values.iter().map(|&v| v.max(0.0)).collect();
    let total: f64 = kept.iter().sum();
    let w = &eig.vectors;
    let d = h.rows();
    let m = ComplexMatrix::from_fn(d, d, |i, j| {
        (0..d)
            .map(|k| w[(i, k)] * w[(j, k)].conj() * kept[k])
            .sum::<Complex64>()
            / total
    });
    let m = &(&m + &m.dagger()) * 0.5;
    Ok((DensityMatrix::new(m)?, min, clipped))
}

/// `AA†/Tr(AA†)` with `A` a matrix of independent complex Gaussians.
pub fn random_density(d: usize, rng: &mut RandomSource) -> Result<DensityMatrix> {
    if d < 2 {
        return Err(Error::Domain(format!("d must be at least 2, got {d}")));
    }
    let a = ComplexMatrix::from_fn(d, d, |_, _| rng.complex_normal());
    let g = &a * &a.dagger();
    let g = &(&g + &g.dagger()) * 0.5;
    let tr = g.trace().re;
    DensityMatrix::new(&g * (1.0 / tr))
}
