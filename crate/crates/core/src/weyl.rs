//! The Weyl pair and the generalized Pauli triple for one qudit.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{c64, cis, ComplexMatrix};

/// `e^{2πi k / n}`, exact at multiples of a quarter turn and exactly
/// conjugate-symmetric (`root(n − k) == conj(root(k))`).
pub fn root_of_unity(k: i64, n: u64) -> Complex64 {
    let n_i = n as i64;
    let k = k.rem_euclid(n_i);
    if (4 * k) % n_i == 0 {
        return match 4 * k / n_i {
            0 => c64(1.0, 0.0),
            1 => c64(0.0, 1.0),
            2 => c64(-1.0, 0.0),
            _ => c64(0.0, -1.0),
        };
    }
    if 2 * k > n_i {
        return root_of_unity(n_i - k, n).conj();
    }
    cis(std::f64::consts::TAU * k as f64 / n as f64)
}

/// `U`, `V`, `X`, `Y`, `Z` and `ζ = e^{2πi/d}` for dimension `d`.
///
/// `U` is the cyclic shift with ones on the superdiagonal and in the
/// bottom-left corner, so `U e_0 = e_{d−1}`; `V = diag(1, ζ, …, ζ^{d−1})`.
/// `X = U`, `Z = V` and `Y = e^{iπ(d−1)/d} UV`, which is `σ_y` at `d = 2`
/// and satisfies `Y^d = I` for every `d`.
#[derive(Debug, Clone)]
pub struct WeylOperators {
    d: usize,
    zeta: Complex64,
    /// `ζ^k` for `k = 0..d`.
    powers: Vec<Complex64>,
    u: ComplexMatrix,
    v: ComplexMatrix,
    y: ComplexMatrix,
}

impl WeylOperators {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn zeta(&self) -> Complex64 {
        self.zeta
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Complex64 {
        self.powers[k.rem_euclid(self.d as i64) as usize]
    }

    pub fn u(&self) -> &ComplexMatrix {
        &self.u
    }

    pub fn v(&self) -> &ComplexMatrix {
        &self.v
    }

    pub fn x(&self) -> &ComplexMatrix {
        &self.u
    }

    pub fn y(&self) -> &ComplexMatrix {
        &self.y
    }

    pub fn z(&self) -> &ComplexMatrix {
        &self.v
    }

    /// Phase multiplying `UV` in `Y`.
    pub fn y_phase(&self) -> Complex64 {
        y_phase(self.d)
    }
}

fn y_phase(d: usize) -> Complex64 {
    // ζ^{(d−1)/2} taken as the principal root of order 2d.
    root_of_unity(d as i64 - 1, 2 * d as u64)
}

pub fn build_weyl(d: usize) -> Result<WeylOperators> {
    if d < 2 {
        return Err(Error::Domain(format!(
            "qudit dimension must be at least 2, got {d}"
        )));
    }
    let powers: Vec<Complex64> = (0..d).map(|k| root_of_unity(k as i64, d as u64)).collect();
    let one = c64(1.0, 0.0);
    let u = ComplexMatrix::from_fn(
        d,
        d,
        |i, j| {
            if j == (i + 1) % d {
                one
            } else {
                c64(0.0, 0.0)
            }
        },
    );
    let v = ComplexMatrix::diag(&powers);
    let y = &(&u * &v) * y_phase(d);
    Ok(WeylOperators {
        d,
        zeta: powers[1],
        powers,
        u,
        v,
        y,
    })
}

/// Frobenius deviations of the defining relations.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct WeylRelationReport {
    /// `‖UV − ζVU‖`
    pub uv: f64,
    /// `‖XY − ζYX‖`
    pub xy: f64,
    /// `‖YZ − ζZY‖`
    pub yz: f64,
    /// `‖XZ − ζZX‖`
    pub xz: f64,
    /// `‖ZX − ζ^{−1}XZ‖`
    pub zx_reversed: f64,
    /// `max(‖X^d − I‖, ‖Y^d − I‖, ‖Z^d − I‖)`
    pub powers: f64,
}

impl WeylRelationReport {
    pub fn max(&self) -> f64 {
        [
            self.uv,
            self.xy,
            self.yz,
            self.xz,
            self.zx_reversed,
            self.powers,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

fn twisted(a: &ComplexMatrix, b: &ComplexMatrix, phase: Complex64) -> f64 {
    (a * b).distance(&(&(b * a) * phase))
}

pub fn relation_report(w: &WeylOperators) -> WeylRelationReport {
    let (x, y, z) = (w.x(), w.y(), w.z());
    let zeta = w.zeta;
    let id = ComplexMatrix::identity(w.d);
    let p = w.d as u32;
    WeylRelationReport {
        uv: twisted(&w.u, &w.v, zeta),
        xy: twisted(x, y, zeta),
        yz: twisted(y, z, zeta),
        xz: twisted(x, z, zeta),
        zx_reversed: twisted(z, x, zeta.conj()),
        powers: [x, y, z]
            .into_iter()
            .map(|m| m.pow(p).distance(&id))
            .fold(0.0, f64::max),
    }
}

/// Largest deviation among the commutation relations
/// `XY = ζYX`, `YZ = ζZY`, `XZ = ζZX` and the reversed-order form
/// `ZX = ζ^{−1}XZ`.
pub fn check_weyl_relation(w: &WeylOperators) -> f64 {
    let r = relation_report(w);
    [r.uv, r.xy, r.yz, r.xz, r.zx_reversed]
        .into_iter()
        .fold(0.0, f64::max)
}

/// `X^a Z^b` for `0 ≤ a, b < d`.
pub fn weyl_monomial(w: &WeylOperators, a: usize, b: usize) -> Result<ComplexMatrix> {
    let d = w.d;
    if a >= d || b >= d {
        return Err(Error::Domain(format!(
            "monomial exponents must lie in 0..{d}, got ({a}, {b})"
        )));
    }
    // (X^a Z^b)[i, j] = ζ^{b j} if j ≡ i + a (mod d)
    Ok(ComplexMatrix::from_fn(d, d, |i, j| {
        if j == (i + a) % d {
            w.zeta_pow((b * j) as i64)
        } else {
            c64(0.0, 0.0)
        }
    }))
}
