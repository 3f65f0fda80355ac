//! Search for SIC fiducial vectors in the Weyl orbit `{X^a Z^b |φ⟩}`.
//!
//! A fiducial `φ` makes all `d²` orbit vectors pairwise equiangular with
//! `|⟨φ_i|φ_j⟩|² = 1/(d+1)`. Because the orbit is a group orbit, this reduces
//! to the `d² − 1` overlaps `⟨φ|X^a Z^b|φ⟩`, `(a, b) ≠ (0, 0)`. The search
//! minimizes the frame error
//! `Σ_{(a,b)≠(0,0)} (|⟨φ|X^a Z^b|φ⟩|² − 1/(d+1))²` with restarted Nelder–Mead
//! on `2d − 2` real parameters: `φ ∝ (1, r_1 e^{iθ_1}, …, r_{d−1} e^{iθ_{d−1}})`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{c64, fix_phase, vec_inner, vec_norm, CONTRACT_TOL};
use crate::optimize::{nelder_mead, NelderMead};
use crate::rng::RandomSource;
use crate::weyl::root_of_unity;

pub const MAX_SIC_DIM: usize = 8;

/// Default success threshold on the frame error.
pub const DEFAULT_FRAME_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Serialize)]
pub struct SicCandidate {
    pub d: usize,
    pub fiducial: Vec<Complex64>,
    /// `orbit[a·d + b] = X^a Z^b φ`.
    pub orbit: Vec<Vec<Complex64>>,
    pub frame_error: f64,
}

impl SicCandidate {
    pub fn new(fiducial: Vec<Complex64>) -> Result<Self> {
        let d = fiducial.len();
        let orbit = weyl_orbit(&fiducial, d)?;
        let frame_error = frame_error(&fiducial, d)?;
        Ok(Self {
            d,
            fiducial,
            orbit,
            frame_error,
        })
    }
}

fn check_unit(phi: &[Complex64], d: usize) -> Result<()> {
    if phi.len() != d || d < 2 {
        return Err(Error::Shape(format!(
            "vector of length {} for d = {d}",
            phi.len()
        )));
    }
    let n = vec_norm(phi);
    if (n - 1.0).abs() > CONTRACT_TOL {
        return Err(Error::Contract(format!("vector norm is {n}, expected 1")));
    }
    Ok(())
}

fn roots(d: usize) -> Vec<Complex64> {
    (0..d).map(|k| root_of_unity(k as i64, d as u64)).collect()
}

/// `(X^a Z^b φ)_i = ζ^{b(i+a)} φ_{i+a}` (indices mod `d`).
fn displace(phi: &[Complex64], a: usize, b: usize, zeta: &[Complex64]) -> Vec<Complex64> {
    let d = phi.len();
    (0..d)
        .map(|i| {
            let j = (i + a) % d;
            zeta[(b * j) % d] * phi[j]
        })
        .collect()
}

/// All `d²` displaced copies `X^a Z^b φ`, lexicographic in `(a, b)`.
pub fn weyl_orbit(phi: &[Complex64], d: usize) -> Result<Vec<Vec<Complex64>>> {
    check_unit(phi, d)?;
    let zeta = roots(d);
    Ok((0..d)
        .flat_map(|a| (0..d).map(move |b| (a, b)))
        .map(|(a, b)| displace(phi, a, b, &zeta))
        .collect())
}

fn frame_error_unchecked(phi: &[Complex64], zeta: &[Complex64]) -> f64 {
    let d = phi.len();
    let target = 1.0 / (d + 1) as f64;
    let mut acc = 0.0;
    for a in 0..d {
        for b in 0..d {
            if a == 0 && b == 0 {
                continue;
            }
            let mut overlap = c64(0.0, 0.0);
            for i in 0..d {
                let j = (i + a) % d;
                overlap += phi[i].conj() * zeta[(b * j) % d] * phi[j];
            }
            let dev = overlap.norm_sqr() - target;
            acc += dev * dev;
        }
    }
    acc
}

/// `Σ_{(a,b)≠(0,0)} (|⟨φ|X^a Z^b|φ⟩|² − 1/(d+1))²`; zero exactly at a fiducial.
pub fn frame_error(phi: &[Complex64], d: usize) -> Result<f64> {
    check_unit(phi, d)?;
    Ok(frame_error_unchecked(phi, &roots(d)))
}

/// `max | |⟨φ_i|φ_j⟩|² − 1/(d+1) |` over unordered distinct orbit pairs.
pub fn verify_sic(candidate: &SicCandidate) -> f64 {
    let target = 1.0 / (candidate.d + 1) as f64;
    let orbit = &candidate.orbit;
    let mut worst: f64 = 0.0;
    for (i, u) in orbit.iter().enumerate() {
        for v in &orbit[i + 1..] {
            worst = worst.max((vec_inner(u, v).norm_sqr() - target).abs());
        }
    }
    worst
}

fn params_to_vector(p: &[f64], d: usize) -> Vec<Complex64> {
    let mut v = Vec::with_capacity(d);
    v.push(c64(1.0, 0.0));
    for k in 0..d - 1 {
        v.push(Complex64::from_polar(p[k], p[d - 1 + k]));
    }
    let n = vec_norm(&v);
    v.iter_mut().for_each(|z| *z /= n);
    v
}

fn vector_to_params(v: &[Complex64]) -> Vec<f64> {
    let d = v.len();
    let lead = v[0];
    let ratios: Vec<Complex64> = v[1..].iter().map(|z| z / lead).collect();
    let mut p = Vec::with_capacity(2 * d - 2);
    p.extend(ratios.iter().map(|z| z.norm()));
    p.extend(ratios.iter().map(|z| z.arg()));
    p
}

/// Outcome of [`search_fiducial`].
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SicSearch {
    Found {
        candidate: SicCandidate,
        restarts_used: usize,
    },
    /// No restart reached the tolerance; carries the best candidate seen.
    NotFound {
        best: SicCandidate,
        restarts_used: usize,
    },
}

impl SicSearch {
    pub fn found(&self) -> bool {
        matches!(self, SicSearch::Found { .. })
    }

    pub fn candidate(&self) -> &SicCandidate {
        match self {
            SicSearch::Found { candidate, .. } => candidate,
            SicSearch::NotFound { best, .. } => best,
        }
    }

    pub fn restarts_used(&self) -> usize {
        match self {
            SicSearch::Found { restarts_used, .. } | SicSearch::NotFound { restarts_used, .. } => {
                *restarts_used
            }
        }
    }
}

/// One local search: Nelder–Mead from `start`, re-seeded with a fresh
/// simplex around the incumbent until it stops improving.
fn local_search(start: &[Complex64], zeta: &[Complex64], tol: f64) -> (Vec<Complex64>, f64) {
    let d = start.len();
    let mut objective = |p: &[f64]| frame_error_unchecked(&params_to_vector(p, d), zeta);
    let mut x = vector_to_params(start);
    let mut fx = objective(&x);
    let mut opts = NelderMead::default();
    for _ in 0..12 {
        let m = nelder_mead(&mut objective, &x, &opts);
        let improved = m.f < fx * (1.0 - 1e-6);
        if m.f < fx {
            x = m.x;
            fx = m.f;
        }
        if fx <= tol * 1e-3 || !improved {
            break;
        }
        opts.step = (opts.step * 0.5).max(1e-4);
    }
    let mut v = params_to_vector(&x, d);
    fix_phase(&mut v);
    (v, fx)
}

/// Multi-start search for a fiducial with frame error at most `tol`.
///
/// Restart `r` starts from a Haar-random vector drawn from `rng.derive(r)`.
/// Restarts run in index order and the search stops at the first success;
/// otherwise the best candidate over all restarts is returned (ties go to the
/// lower restart index).
pub fn search_fiducial(
    d: usize,
    restarts: usize,
    rng: &RandomSource,
    tol: f64,
) -> Result<SicSearch> {
    if !(2..=MAX_SIC_DIM).contains(&d) {
        return Err(Error::Domain(format!(
            "SIC search supports 2 ≤ d ≤ {MAX_SIC_DIM}, got {d}"
        )));
    }
    if restarts == 0 {
        return Err(Error::Domain("need at least one restart".into()));
    }
    let zeta = roots(d);
    let mut best: Option<(Vec<Complex64>, f64)> = None;
    for r in 0..restarts {
        let start = rng.derive(r as u64).haar_vector(d);
        let (v, fx) = local_search(&start, &zeta, tol);
        if fx <= tol {
            let candidate = SicCandidate::new(v)?;
            return Ok(SicSearch::Found {
                candidate,
                restarts_used: r + 1,
            });
        }
        if best.as_ref().is_none_or(|(_, b)| fx < *b) {
            best = Some((v, fx));
        }
    }
    let (v, _) = best.expect("at least one restart");
    Ok(SicSearch::NotFound {
        best: SicCandidate::new(v)?,
        restarts_used: restarts,
    })
}
