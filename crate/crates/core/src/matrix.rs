//! Dense complex matrices.
//!
//! [`ComplexMatrix`] is the carrier for every operator in the crate. Storage
//! is row-major `Vec<Complex64>`; sizes in scope stay below a few hundred
//! rows, so everything is dense and allocation-per-op.
//!
//! Eigendecompositions are delegated to `nalgebra` and then post-processed so
//! that the output is deterministic: eigenvalues ascend, degenerate
//! eigenspaces are re-orthonormalized from the standard basis in index order,
//! and every eigenvector carries the phase convention "first non-negligible
//! component real and positive".

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance for Hermiticity / unitarity preconditions.
pub const CONTRACT_TOL: f64 = 1e-10;

/// Shorthand for a complex scalar.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// Dense complex matrix, row-major.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

/// On-disk form: `{"rows": R, "cols": C, "entries": [[re, im], ...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<[f64; 2]>,
}

impl TryFrom<MatrixJson> for ComplexMatrix {
    type Error = Error;

    fn try_from(m: MatrixJson) -> Result<Self> {
        if m.rows == 0 || m.cols == 0 {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        if m.entries.len() != m.rows * m.cols {
            return Err(Error::Shape(format!(
                "expected {}x{} = {} entries, found {}",
                m.rows,
                m.cols,
                m.rows * m.cols,
                m.entries.len()
            )));
        }
        if m.entries.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::Domain("matrix entries must be finite".into()));
        }
        let data = m.entries.into_iter().map(|[re, im]| c64(re, im)).collect();
        Ok(Self {
            rows: m.rows,
            cols: m.cols,
            data,
        })
    }
}

impl From<ComplexMatrix> for MatrixJson {
    fn from(m: ComplexMatrix) -> Self {
        Self {
            rows: m.rows,
            cols: m.cols,
            entries: m.data.iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(&vec![Complex64::new(1.0, 0.0); n])
    }

    pub fn diag(values: &[Complex64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries cannot form a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from nested rows of real-valued entries.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        Self::from_fn(r, c, |i, j| c64(rows[i][j], 0.0))
    }

    /// Builds a matrix from nested rows of complex entries.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rows[i][j])
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Complex64>]) -> Self {
        let c = cols.len();
        let r = cols[0].len();
        Self::from_fn(r, c, |i, j| cols[j][i])
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Complex64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let b_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Kronecker product `self ⊗ other`:
    /// `out[(i·rb + k, j·cb + l)] = self[(i, j)] · other[(k, l)]`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (rb, cb) = (other.rows, other.cols);
        let mut out = Self::zeros(self.rows * rb, self.cols * cb);
        let out_cols = out.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        out.data[(i * rb + k) * out_cols + j * cb + l] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Kronecker product of a sequence, left to right.
    pub fn tensor_all<'a>(factors: impl IntoIterator<Item = &'a ComplexMatrix>) -> Option<Self> {
        factors.into_iter().fold(None, |acc: Option<Self>, f| {
            Some(match acc {
                None => f.clone(),
                Some(a) => a.tensor(f),
            })
        })
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖self − other‖_F`; panics on shape mismatch.
    pub fn distance(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// Integer power of a square matrix by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `‖A − A†‖_F`, or infinity for non-square input.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// `‖A†A − I‖_F`, or infinity for non-square input.
    pub fn unitarity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        (&self.dagger() * self).distance(&Self::identity(self.rows))
    }

    /// True when every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows)
            .all(|i| (0..self.cols).all(|j| i == j || self[(i, j)] == Complex64::new(0.0, 0.0)))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Hilbert–Schmidt inner product `Tr(A†B)`.
    pub fn hs_inner(&self, other: &Self) -> Result<Complex64> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "hs_inner of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)])
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on shape mismatch; use [`ComplexMatrix::matmul`] for a `Result`.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("matrix product shape mismatch")
    }
}

impl Mul<Complex64> for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: Complex64) -> ComplexMatrix {
        self.scale(rhs)
    }
}

impl Mul<f64> for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: f64) -> ComplexMatrix {
        self.scale(c64(rhs, 0.0))
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl AddAssign<&ComplexMatrix> for ComplexMatrix {
    fn add_assign(&mut self, rhs: &ComplexMatrix) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale(c64(-1.0, 0.0))
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Result of [`hermitian_eig`].
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Eigenvectors as columns, matching `values`.
    pub vectors: ComplexMatrix,
}

/// Result of [`unitary_eig`].
#[derive(Debug, Clone)]
pub struct UnitaryEigen {
    /// Unit-modulus eigenvalues ordered by phase in `[0, 2π)`.
    pub values: Vec<Complex64>,
    /// Unit-norm eigenvectors as columns, matching `values`.
    pub vectors: ComplexMatrix,
}

/// Multiplies `v` by a unit phase so that its first component with modulus
/// above `1e-10` becomes real and positive.
pub fn fix_phase(v: &mut [Complex64]) {
    let pivot = v.iter().find(|z| z.norm() > 1e-10).copied();
    if let Some(p) = pivot {
        let phase = p.conj() / p.norm();
        for z in v.iter_mut() {
            *z *= phase;
        }
    }
}

pub fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `⟨a|b⟩`, conjugate-linear in the first argument.
pub fn vec_inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Replaces a set of orthonormal columns spanning one eigenspace by the
/// Gram–Schmidt image of the standard basis vectors projected onto that
/// space, taken in index order. The result depends only on the subspace.
fn canonical_basis(cluster: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let m = cluster.len();
    if m == 0 {
        return Vec::new();
    }
    let dim = cluster[0].len();
    let mut out: Vec<Vec<Complex64>> = Vec::with_capacity(m);
    for i in 0..dim {
        if out.len() == m {
            break;
        }
        // P e_i = Σ_c w_c conj(w_c[i])
        let mut v = vec![Complex64::new(0.0, 0.0); dim];
        for w in cluster {
            let coeff = w[i].conj();
            for (vk, wk) in v.iter_mut().zip(w) {
                *vk += wk * coeff;
            }
        }
        for _ in 0..2 {
            for q in &out {
                let proj = vec_inner(q, &v);
                for (vk, qk) in v.iter_mut().zip(q) {
                    *vk -= qk * proj;
                }
            }
        }
        let norm = vec_norm(&v);
        if norm > 1e-4 {
            v.iter_mut().for_each(|z| *z /= norm);
            out.push(v);
        }
    }
    if out.len() < m {
        // Numerically unreachable for orthonormal input; keep the solver's basis.
        return cluster.to_vec();
    }
    out
}

/// Groups indices of consecutive sorted values whose gaps stay below `tol`.
fn clusters_by<T>(values: &[T], close: impl Fn(&T, &T) -> bool) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || !close(&values[i - 1], &values[i]) {
            out.push(start..i);
            start = i;
        }
    }
    out
}

/// Eigendecomposition of a Hermitian matrix: `a = W diag(λ) W†`.
pub fn hermitian_eig(a: &ComplexMatrix) -> Result<HermitianEigen> {
    if !a.is_square() {
        return Err(Error::Shape(format!("{}x{} is not square", a.rows, a.cols)));
    }
    let dev = a.hermiticity_deviation();
    // NaN fails too
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(dev <= CONTRACT_TOL) {
        return Err(Error::Contract(format!(
            "matrix is not Hermitian (‖A − A†‖_F = {dev:.3e})"
        )));
    }
    let n = a.rows;
    // Symmetrize exactly before handing to the solver.
    let sym = &(a + &a.dagger()) * 0.5;
    let eig = nalgebra::SymmetricEigen::new(sym.to_nalgebra());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        eig.eigenvalues[i]
            .total_cmp(&eig.eigenvalues[j])
            .then(i.cmp(&j))
    });
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let raw: Vec<Vec<Complex64>> = order
        .iter()
        .map(|&i| eig.eigenvectors.column(i).iter().copied().collect())
        .collect();

    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let gap = 1e-9 * scale;
    let mut cols = Vec::with_capacity(n);
    for range in clusters_by(&values, |x, y| (y - x).abs() <= gap) {
        let block = if range.len() > 1 {
            canonical_basis(&raw[range])
        } else {
            raw[range].to_vec()
        };
        for mut v in block {
            fix_phase(&mut v);
            cols.push(v);
        }
    }
    Ok(HermitianEigen {
        values,
        vectors: ComplexMatrix::from_columns(&cols),
    })
}

/// Eigendecomposition of a unitary (hence normal) matrix.
///
/// Works through the commuting Hermitian pair `H = (A + A†)/2`,
/// `K = (A − A†)/2i`: diagonalize `H`, then split each degenerate eigenspace
/// of `H` with `K`.
pub fn unitary_eig(a: &ComplexMatrix) -> Result<UnitaryEigen> {
    if !a.is_square() {
        return Err(Error::Shape(format!("{}x{} is not square", a.rows, a.cols)));
    }
    let dev = a.unitarity_deviation();
    // NaN fails too
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(dev <= CONTRACT_TOL) {
        return Err(Error::Contract(format!(
            "matrix is not unitary (‖A†A − I‖_F = {dev:.3e})"
        )));
    }
    let n = a.rows;
    let ad = a.dagger();
    let h = &(a + &ad) * 0.5;
    let k = &(a - &ad) * c64(0.0, -0.5);
    let he = hermitian_eig(&h)?;
    let hcols = he.vectors.columns();

    let mut vectors: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for range in clusters_by(&he.values, |x, y| (y - x).abs() <= 1e-8) {
        if range.len() == 1 {
            vectors.push(hcols[range.start].clone());
            continue;
        }
        let w = ComplexMatrix::from_columns(&hcols[range]);
        let kw = &(&w.dagger() * &k) * &w;
        // kw is Hermitian up to round-off; symmetrize.
        let kw = &(&kw + &kw.dagger()) * 0.5;
        let ke = hermitian_eig(&kw)?;
        let rotated = &w * &ke.vectors;
        vectors.extend(rotated.columns());
    }

    let two_pi = std::f64::consts::TAU;
    let mut pairs: Vec<(f64, Complex64, Vec<Complex64>)> = vectors
        .into_iter()
        .map(|v| {
            let av = a.apply(&v);
            let lambda = vec_inner(&v, &av);
            let lambda = lambda / lambda.norm();
            let mut phase = lambda.arg().rem_euclid(two_pi);
            if two_pi - phase < 1e-9 {
                phase = 0.0;
            }
            (phase, lambda, v)
        })
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));

    let phases: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    let mut values = Vec::with_capacity(n);
    let mut cols = Vec::with_capacity(n);
    for range in clusters_by(&phases, |x, y| (y - x).abs() <= 1e-8) {
        let group: Vec<Vec<Complex64>> = pairs[range.clone()].iter().map(|p| p.2.clone()).collect();
        let block = if group.len() > 1 {
            canonical_basis(&group)
        } else {
            group
        };
        for (mut v, p) in block.into_iter().zip(&pairs[range]) {
            fix_phase(&mut v);
            cols.push(v);
            values.push(p.1);
        }
    }
    Ok(UnitaryEigen {
        values,
        vectors: ComplexMatrix::from_columns(&cols),
    })
}

/// `e^{−iHτ}` for Hermitian `H`, via `W diag(e^{−iλτ}) W†`.
pub fn expm_hermitian(h: &ComplexMatrix, tau: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(h)?;
    let phases: Vec<Complex64> = eig.values.iter().map(|&l| cis(-l * tau)).collect();
    let w = &eig.vectors;
    let scaled = ComplexMatrix::from_fn(w.rows, w.cols, |i, j| w[(i, j)] * phases[j]);
    Ok(&scaled * &w.dagger())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn sx() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
    }
    fn sy() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[
            vec![c64(0.0, 0.0), c64(0.0, -1.0)],
            vec![c64(0.0, 1.0), c64(0.0, 0.0)],
        ])
    }
    fn sz() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]])
    }

    #[test]
    fn matmul_examples() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(i2.matmul(&i2).unwrap(), i2);
        let expect = ComplexMatrix::from_real_rows(&[&[0.0, -1.0], &[1.0, 0.0]]);
        assert_eq!(sx().matmul(&sz()).unwrap(), expect);
    }

    #[test]
    fn matmul_shape_error() {
        let a = ComplexMatrix::zeros(2, 3);
        assert!(matches!(a.matmul(&a), Err(Error::Shape(_))));
    }

    #[test]
    fn dagger_examples() {
        assert_eq!(
            ComplexMatrix::identity(3).dagger(),
            ComplexMatrix::identity(3)
        );
        assert_eq!(sy().dagger(), sy());
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(
            ComplexMatrix::identity(2).tensor(&ComplexMatrix::identity(2)),
            ComplexMatrix::identity(4)
        );
        let t = sz().tensor(&sx());
        let expect = ComplexMatrix::from_real_rows(&[
            &[0.0, 1.0, 0.0, 0.0],
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, -1.0],
            &[0.0, 0.0, -1.0, 0.0],
        ]);
        assert_eq!(t, expect);
        let r = ComplexMatrix::zeros(2, 3).tensor(&ComplexMatrix::zeros(1, 2));
        assert_eq!((r.rows(), r.cols()), (2, 6));
    }

    #[test]
    fn hermitian_eig_diag() {
        let a = ComplexMatrix::diag(&[c64(3.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0)]);
        let e = hermitian_eig(&a).unwrap();
        assert_eq!(e.values.len(), 3);
        for (v, want) in e.values.iter().zip([1.0, 2.0, 3.0]) {
            assert!((v - want).abs() < 1e-14);
        }
        // eigenvector of 1 is e1
        assert!((e.vectors[(1, 0)] - c64(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn hermitian_eig_sigma_x() {
        let e = hermitian_eig(&sx()).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14 && (e.values[1] - 1.0).abs() < 1e-14);
        let v0 = e.vectors.column(0);
        let v1 = e.vectors.column(1);
        assert!((v0[0] - c64(FRAC_1_SQRT_2, 0.0)).norm() < 1e-12);
        assert!((v0[1] + c64(FRAC_1_SQRT_2, 0.0)).norm() < 1e-12);
        assert!((v1[1] - c64(FRAC_1_SQRT_2, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn hermitian_eig_rejects_non_hermitian() {
        let x3 =
            ComplexMatrix::from_real_rows(&[&[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0], &[1.0, 0.0, 0.0]]);
        assert!(matches!(hermitian_eig(&x3), Err(Error::Contract(_))));
    }

    #[test]
    fn degenerate_eigenspace_is_canonical() {
        // Identity: any basis is an eigenbasis; canonical choice is the standard one.
        let e = hermitian_eig(&ComplexMatrix::identity(4)).unwrap();
        assert!(e.vectors.distance(&ComplexMatrix::identity(4)) < 1e-12);
        // Rotating the input by a unitary must not change the projectors.
        let h = ComplexMatrix::diag(&[c64(1.0, 0.0), c64(1.0, 0.0), c64(-2.0, 0.0)]);
        let u = expm_hermitian(
            &ComplexMatrix::from_rows(&[
                vec![c64(0.3, 0.0), c64(0.1, 0.2), c64(0.0, -0.4)],
                vec![c64(0.1, -0.2), c64(-0.5, 0.0), c64(0.7, 0.0)],
                vec![c64(0.0, 0.4), c64(0.7, 0.0), c64(0.2, 0.0)],
            ]),
            0.9,
        )
        .unwrap();
        let rotated = &(&u * &h) * &u.dagger();
        let a = hermitian_eig(&rotated).unwrap();
        let b = hermitian_eig(&rotated).unwrap();
        assert_eq!(a.vectors, b.vectors);
        let w = &a.vectors;
        let lam = ComplexMatrix::diag(&a.values.iter().map(|&x| c64(x, 0.0)).collect::<Vec<_>>());
        assert!((&(w * &lam) * &w.dagger()).distance(&rotated) < 1e-10);
    }

    #[test]
    fn unitary_eig_identity_and_v3() {
        let e = unitary_eig(&ComplexMatrix::identity(3)).unwrap();
        for v in &e.values {
            assert!((v - c64(1.0, 0.0)).norm() < 1e-12);
        }
        let w = cis(2.0 * PI / 3.0);
        let v3 = ComplexMatrix::diag(&[c64(1.0, 0.0), w, w.conj()]);
        let e = unitary_eig(&v3).unwrap();
        // phase order: 1 (0), ω (2π/3), ω̄ (4π/3)
        assert!((e.values[0] - c64(1.0, 0.0)).norm() < 1e-12);
        assert!((e.values[1] - w).norm() < 1e-12);
        assert!((e.values[2] - w.conj()).norm() < 1e-12);
        assert!(e.vectors.distance(&ComplexMatrix::identity(3)) < 1e-12);
    }

    #[test]
    fn unitary_eig_shift_has_flat_vectors() {
        let x3 =
            ComplexMatrix::from_real_rows(&[&[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0], &[1.0, 0.0, 0.0]]);
        let e = unitary_eig(&x3).unwrap();
        for z in e.vectors.as_slice() {
            assert!((z.norm() - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        }
        for (j, lam) in e.values.iter().enumerate() {
            let v = e.vectors.column(j);
            let av = x3.apply(&v);
            for (a, b) in av.iter().zip(&v) {
                assert!((a - lam * b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn unitary_eig_rejects_non_unitary() {
        let a = ComplexMatrix::diag(&[c64(2.0, 0.0), c64(1.0, 0.0)]);
        assert!(matches!(unitary_eig(&a), Err(Error::Contract(_))));
    }

    #[test]
    fn expm_examples() {
        let z = ComplexMatrix::zeros(3, 3);
        assert!(
            expm_hermitian(&z, 1.7)
                .unwrap()
                .distance(&ComplexMatrix::identity(3))
                < 1e-15
        );
        let g = expm_hermitian(&sz(), PI).unwrap();
        assert!(g.distance(&(&ComplexMatrix::identity(2) * -1.0)) < 1e-14);
        assert!(matches!(
            expm_hermitian(&sx().matmul(&sz()).unwrap(), 1.0),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn hs_inner_examples() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(i2.hs_inner(&i2).unwrap(), c64(2.0, 0.0));
        assert_eq!(sx().hs_inner(&sz()).unwrap(), c64(0.0, 0.0));
        assert!(matches!(
            i2.hs_inner(&ComplexMatrix::identity(3)),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn json_roundtrip_and_rejection() {
        let m = sy();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(
            s,
            r#"{"rows":2,"cols":2,"entries":[[0.0,0.0],[0.0,-1.0],[0.0,1.0],[0.0,0.0]]}"#
        );
        let back: ComplexMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        let bad = r#"{"rows":2,"cols":2,"entries":[[0.0,0.0],[1.0,0.0],[1.0,0.0]]}"#;
        let err = serde_json::from_str::<ComplexMatrix>(bad).unwrap_err();
        assert!(err.to_string().contains("expected 2x2 = 4 entries"));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = &sx() + &(&sz() * c64(0.0, 0.5));
        let mut acc = ComplexMatrix::identity(2);
        for _ in 0..5 {
            acc = &acc * &a;
        }
        assert!(a.pow(5).distance(&acc) < 1e-13);
        assert_eq!(a.pow(0), ComplexMatrix::identity(2));
    }
}
