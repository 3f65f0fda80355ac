//! Operator families on an `n`-qudit register.
//!
//! The x-family is the Jordan–Wigner-style string
//! `𝔵_{2k−1} = Z^{⊗(k−1)} ⊗ X ⊗ I^{⊗(n−k)}`, `𝔵_{2k} = Z^{⊗(k−1)} ⊗ Y ⊗ I^{⊗(n−k)}`.
//! The z-family is obtained by exchanging `X ↔ Z†`:
//! `𝔷†_{2k−1} = X^{⊗(k−1)} ⊗ Z ⊗ I^{⊗(n−k)}`, `𝔷†_{2k} = X^{⊗(k−1)} ⊗ Y ⊗ I^{⊗(n−k)}`.
//!
//! Both families `q`-commute: `a_j a_k = q a_k a_j` for `j < k`, with
//! `q = ζ` for the x-family and `q = ζ^{−1}` for the z-family (the exchange
//! reverses the twist).

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::weyl::{build_weyl, WeylOperators};

/// Largest register dimension `dⁿ` materialized as a dense matrix.
pub const MAX_REGISTER_DIM: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    XFamily,
    ZFamily,
}

impl FamilyKind {
    /// Twist `q` in `a_j a_k = q a_k a_j` (`j < k`).
    pub fn twist(self, w: &WeylOperators) -> Complex64 {
        match self {
            FamilyKind::XFamily => w.zeta(),
            FamilyKind::ZFamily => w.zeta().conj(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RegisterOperator {
    pub d: usize,
    pub n: usize,
    /// 1-based position in the family, `1..=2n`.
    pub index: usize,
    pub kind: FamilyKind,
    pub matrix: ComplexMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SiteLabel {
    X,
    Y,
    Z,
}

/// A single-qudit operator embedded at one site: `I^{⊗(k−1)} ⊗ op ⊗ I^{⊗(n−k)}`.
#[derive(Debug, Clone)]
pub struct SiteOperator {
    pub d: usize,
    pub n: usize,
    /// 1-based site.
    pub site: usize,
    pub label: SiteLabel,
    pub matrix: ComplexMatrix,
}

/// `dⁿ`, or a capacity error above `cap`.
pub fn register_dim(d: usize, n: usize, cap: usize) -> Result<usize> {
    if d < 2 {
        return Err(Error::Domain(format!(
            "qudit dimension must be at least 2, got {d}"
        )));
    }
    if n < 1 {
        return Err(Error::Domain("register needs at least one qudit".into()));
    }
    let mut dim: usize = 1;
    for _ in 0..n {
        dim = dim.saturating_mul(d);
        if dim > cap {
            return Err(Error::Capacity(format!(
                "d^n = {d}^{n} exceeds the cap of {cap}"
            )));
        }
    }
    Ok(dim)
}

/// Tensor product of `n` single-site factors.
pub(crate) fn kron_sites(factors: &[&ComplexMatrix]) -> ComplexMatrix {
    ComplexMatrix::tensor_all(factors.iter().copied()).expect("at least one site")
}

/// `I^{⊗(k−1)} ⊗ op ⊗ I^{⊗(n−k)}` for an arbitrary `d×d` operator, `k` 1-based.
pub fn embed_site(op: &ComplexMatrix, d: usize, n: usize, k: usize) -> Result<ComplexMatrix> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!("site {k} outside 1..={n}")));
    }
    let id = ComplexMatrix::identity(d);
    let factors: Vec<&ComplexMatrix> = (1..=n).map(|s| if s == k { op } else { &id }).collect();
    Ok(kron_sites(&factors))
}

/// Embeds a two-site operator (`d²×d²`) on the neighbouring pair `(k, k+1)`.
pub fn embed_pair(op: &ComplexMatrix, d: usize, n: usize, k: usize) -> Result<ComplexMatrix> {
    if k == 0 || k + 1 > n {
        return Err(Error::Domain(format!(
            "pair ({k}, {}) outside 1..={n}",
            k + 1
        )));
    }
    let left = ComplexMatrix::identity(d.pow((k - 1) as u32));
    let right = ComplexMatrix::identity(d.pow((n - k - 1) as u32));
    Ok(left.tensor(op).tensor(&right))
}

fn string_operator(
    string: &ComplexMatrix,
    end: &ComplexMatrix,
    id: &ComplexMatrix,
    n: usize,
    k: usize,
) -> ComplexMatrix {
    let factors: Vec<&ComplexMatrix> = (1..=n)
        .map(|s| match s.cmp(&k) {
            std::cmp::Ordering::Less => string,
            std::cmp::Ordering::Equal => end,
            std::cmp::Ordering::Greater => id,
        })
        .collect();
    kron_sites(&factors)
}

pub fn build_x_family(d: usize, n: usize) -> Result<Vec<RegisterOperator>> {
    register_dim(d, n, MAX_REGISTER_DIM)?;
    let w = build_weyl(d)?;
    let id = ComplexMatrix::identity(d);
    let mut out = Vec::with_capacity(2 * n);
    for k in 1..=n {
        for (offset, end) in [(1, w.x()), (0, w.y())] {
            out.push(RegisterOperator {
                d,
                n,
                index: 2 * k - offset,
                kind: FamilyKind::XFamily,
                matrix: string_operator(w.z(), end, &id, n, k),
            });
        }
    }
    Ok(out)
}

/// The z-family operators `𝔷_k` (the adjoints of the displayed strings).
pub fn build_z_family(d: usize, n: usize) -> Result<Vec<RegisterOperator>> {
    register_dim(d, n, MAX_REGISTER_DIM)?;
    let w = build_weyl(d)?;
    let id = ComplexMatrix::identity(d);
    let mut out = Vec::with_capacity(2 * n);
    for k in 1..=n {
        for (offset, end) in [(1, w.z()), (0, w.y())] {
            out.push(RegisterOperator {
                d,
                n,
                index: 2 * k - offset,
                kind: FamilyKind::ZFamily,
                matrix: string_operator(w.x(), end, &id, n, k).dagger(),
            });
        }
    }
    Ok(out)
}

pub fn site_operator(d: usize, n: usize, site: usize, label: SiteLabel) -> Result<SiteOperator> {
    register_dim(d, n, MAX_REGISTER_DIM)?;
    let w = build_weyl(d)?;
    let op = match label {
        SiteLabel::X => w.x(),
        SiteLabel::Y => w.y(),
        SiteLabel::Z => w.z(),
    };
    Ok(SiteOperator {
        d,
        n,
        site,
        label,
        matrix: embed_site(op, d, n, site)?,
    })
}

/// Deviation report for [`verify_quantum_plane`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantumPlaneReport {
    /// `max_{j<k} ‖a_j a_k − q a_k a_j‖_F`
    pub commutation: f64,
    /// `max_j ‖a_j^d − I‖_F`
    pub power: f64,
}

impl QuantumPlaneReport {
    pub fn max(&self) -> f64 {
        self.commutation.max(self.power)
    }
}

pub fn quantum_plane_report(ops: &[RegisterOperator], d: usize) -> Result<QuantumPlaneReport> {
    let Some(first) = ops.first() else {
        return Ok(QuantumPlaneReport {
            commutation: 0.0,
            power: 0.0,
        });
    };
    if ops.iter().any(|o| o.kind != first.kind || o.d != d) {
        return Err(Error::Domain(
            "operators must come from one family with the given d".into(),
        ));
    }
    let w = build_weyl(d)?;
    let q = first.kind.twist(&w);
    let id = ComplexMatrix::identity(first.matrix.rows());
    let mut commutation: f64 = 0.0;
    for (j, a) in ops.iter().enumerate() {
        for b in &ops[j + 1..] {
            let dev = (&a.matrix * &b.matrix).distance(&(&(&b.matrix * &a.matrix) * q));
            commutation = commutation.max(dev);
        }
    }
    let power = ops
        .iter()
        .map(|o| o.matrix.pow(d as u32).distance(&id))
        .fold(0.0, f64::max);
    Ok(QuantumPlaneReport { commutation, power })
}

/// Largest deviation from the quantum-plane relations `a_j a_k = q a_k a_j`
/// (`j < k`) and `a_j^d = I`, with `q` the family's twist.
pub fn verify_quantum_plane(ops: &[RegisterOperator], d: usize) -> Result<f64> {
    Ok(quantum_plane_report(ops, d)?.max())
}

/// `‖(Σ a_j 𝔵_j)^d − (Σ a_j^d) I‖_F`.
pub fn verify_power_identity(
    ops: &[RegisterOperator],
    coeffs: &[Complex64],
    d: usize,
) -> Result<f64> {
    if ops.is_empty() || coeffs.len() != ops.len() {
        return Err(Error::Shape(format!(
            "{} coefficients for {} operators",
            coeffs.len(),
            ops.len()
        )));
    }
    let dim = ops[0].matrix.rows();
    let mut sum = ComplexMatrix::zeros(dim, dim);
    for (op, c) in ops.iter().zip(coeffs) {
        sum += &(&op.matrix * *c);
    }
    let rhs: Complex64 = coeffs.iter().map(|c| c.powu(d as u32)).sum();
    Ok(sum
        .pow(d as u32)
        .distance(&(&ComplexMatrix::identity(dim) * rhs)))
}

/// Distance between two matrices after removing the best global phase.
/// Returns `(deviation, phase)` with `a ≈ phase · b`.
pub fn phase_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> (f64, Complex64) {
    let overlap = b.hs_inner(a).expect("same shape");
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    (a.distance(&(b * phase)), phase)
}

/// One pairing identity with the phase found.
#[derive(Debug, Clone, Serialize)]
pub struct PairingCheck {
    pub identity: String,
    pub k: usize,
    pub deviation: f64,
    /// `[re, im]` of the unimodular factor relating the two sides.
    pub phase: [f64; 2],
}

/// Checks `𝔷_{2k−1}𝔷†_{2k} ∝ X_k` and `𝔷_{2k}𝔷†_{2k+1} ∝ Z_k† Z_{k+1}` for all
/// admissible `k`. With `Y = ζ^{(d−1)/2} UV` the two sides agree up to the
/// constant phases `ζ^{(d+1)/2}` and `ζ^{−(d−1)/2}` respectively, so each
/// comparison removes the global phase.
pub fn pairing_checks(d: usize, n: usize) -> Result<Vec<PairingCheck>> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "pairing identities need n ≥ 2, got {n}"
        )));
    }
    let z = build_z_family(d, n)?;
    let w = build_weyl(d)?;
    let mut out = Vec::new();
    for k in 1..=n {
        let lhs = &z[2 * k - 2].matrix * &z[2 * k - 1].matrix.dagger();
        let rhs = embed_site(w.x(), d, n, k)?;
        let (dev, ph) = phase_distance(&lhs, &rhs);
        out.push(PairingCheck {
            identity: "z_{2k-1} z_{2k}^dag = X_k".into(),
            k,
            deviation: dev,
            phase: [ph.re, ph.im],
        });
        if k < n {
            let lhs = &z[2 * k - 1].matrix * &z[2 * k].matrix.dagger();
            let rhs = &embed_site(&w.z().dagger(), d, n, k)? * &embed_site(w.z(), d, n, k + 1)?;
            let (dev, ph) = phase_distance(&lhs, &rhs);
            out.push(PairingCheck {
                identity: "z_{2k} z_{2k+1}^dag = Z_k^dag Z_{k+1}".into(),
                k,
                deviation: dev,
                phase: [ph.re, ph.im],
            });
        }
    }
    Ok(out)
}

pub fn verify_pairing(d: usize, n: usize) -> Result<f64> {
    Ok(pairing_checks(d, n)?
        .iter()
        .map(|c| c.deviation)
        .fold(0.0, f64::max))
}
