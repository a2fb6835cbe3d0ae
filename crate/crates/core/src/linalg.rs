//! Small dense complex linear algebra.
//!
//! Everything here works on matrices of dimension 2, 3 or 4, which is all a
//! two-qubit computation ever needs. Storage is a fixed 16-element array so
//! matrices are `Copy` and never allocate.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest supported dimension.
pub const MAX_DIM: usize = 4;

/// Symmetry tolerance accepted by [`herm_eigen`].
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Eigenvalues in `[-PSD_CLAMP, 0)` are treated as zero by PSD operations.
pub const PSD_CLAMP: f64 = 1e-10;

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_TOL: f64 = 1e-14;

/// Real 3x3 matrix, row-major.
pub type Mat3 = [[f64; 3]; 3];

/// Real 3-vector.
pub type Vec3 = [f64; 3];

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn r(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Dense square complex matrix of dimension 2, 3 or 4, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: [Complex64; MAX_DIM * MAX_DIM],
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(
            (2..=MAX_DIM).contains(&dim),
            "unsupported matrix dimension {dim}"
        );
        Self {
            dim,
            data: [Complex64::new(0.0, 0.0); MAX_DIM * MAX_DIM],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = r(1.0);
        }
        m
    }

    /// Builds a matrix from row-major entries. Fails on a bad entry count or
    /// a non-finite value.
    pub fn from_row_major(dim: usize, entries: &[Complex64]) -> Result<Self> {
        if !(2..=MAX_DIM).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let mut m = Self::zeros(dim);
        m.data[..dim * dim].copy_from_slice(entries);
        Ok(m)
    }

    /// Builds a matrix from real row-major entries.
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self> {
        let v: Vec<Complex64> = entries.iter().map(|&x| r(x)).collect();
        Self::from_row_major(dim, &v)
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = r(d);
        }
        m
    }

    /// `|v⟩⟨v|` for a vector of length 2..=4.
    pub fn outer(v: &[Complex64]) -> Self {
        let mut m = Self::zeros(v.len());
        for i in 0..v.len() {
            for j in 0..v.len() {
                m[(i, j)] = v[i] * v[j].conj();
            }
        }
        m
    }

    /// Real 3x3 matrix embedded as a complex matrix.
    pub fn from_mat3(t: &Mat3) -> Self {
        let mut m = Self::zeros(3);
        for i in 0..3 {
            for j in 0..3 {
                m[(i, j)] = r(t[i][j]);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.data[..self.dim * self.dim]
    }

    pub fn is_finite(&self) -> bool {
        self.entries()
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = self[(j, i)].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = self[(j, i)];
            }
        }
        m
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let mut m = *self;
        for z in m.data[..self.dim * self.dim].iter_mut() {
            *z = f(*z);
        }
        m
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_c(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `max |H - H†|`.
    pub fn hermitian_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// `(M + M†)/2`.
    pub fn hermitian_part(&self) -> Self {
        (*self + self.adjoint()).scale(0.5)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries()
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Conjugation `A M A†`.
    pub fn sandwich(&self, a: &Self) -> Self {
        a * self * a.adjoint()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    s += self[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.dim && j < self.dim, "index out of range");
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.dim && j < self.dim, "index out of range");
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    m[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        m
    }
}

impl Mul<ComplexMatrix> for &ComplexMatrix {
    type Output = ComplexMatrix;

    #[allow(clippy::op_ref)]
    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        self * &rhs
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;

    #[allow(clippy::op_ref)]
    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        &self * &rhs
    }
}

impl Mul<&ComplexMatrix> for ComplexMatrix {
    type Output = ComplexMatrix;

    #[allow(clippy::op_ref)]
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        &self * rhs
    }
}

impl Add for ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut m = self;
        for (a, b) in m.data.iter_mut().zip(rhs.data.iter()) {
            *a += b;
        }
        m
    }
}

impl Sub for ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut m = self;
        for (a, b) in m.data.iter_mut().zip(rhs.data.iter()) {
            *a -= b;
        }
        m
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:>+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

pub fn sigma_x() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 1)] = r(1.0);
    m[(1, 0)] = r(1.0);
    m
}

pub fn sigma_y() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 1)] = c(0.0, -1.0);
    m[(1, 0)] = c(0.0, 1.0);
    m
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_real_diag(&[1.0, -1.0])
}

/// The Pauli matrices `[σ_x, σ_y, σ_z]`.
pub fn paulis() -> [ComplexMatrix; 3] {
    [sigma_x(), sigma_y(), sigma_z()]
}

/// Tensor product of two 2x2 matrices. The first factor indexes the high
/// bit of the basis label, so the basis order is |00⟩, |01⟩, |10⟩, |11⟩.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: a.dim,
        });
    }
    if b.dim != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: b.dim,
        });
    }
    let mut m = ComplexMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m[(2 * i + k, 2 * j + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    Ok(m)
}

/// Eigendecomposition of a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the eigenvector for `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        (0..self.eigenvectors.dim)
            .map(|i| self.eigenvectors[(i, k)])
            .collect()
    }

    /// `V f(Λ) V†`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvectors.dim;
        let v = &self.eigenvectors;
        let mut m = ComplexMatrix::zeros(n);
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let fl = f(lambda);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] += v[(i, k)] * v[(j, k)].conj() * fl;
                }
            }
        }
        m
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.reconstruct_with(|x| x)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Eigenvalues largest first.
    pub fn descending(&self) -> Vec<f64> {
        self.eigenvalues.iter().rev().copied().collect()
    }
}

/// Diagonalizes a Hermitian matrix with cyclic complex Jacobi rotations.
///
/// Each rotation first removes the phase of the pivot `H[p][q]` and then
/// applies the classical real rotation, so the update is the unitary
/// `U = diag(1, e^{-iφ}) · [[c, s], [-s, c]]` acting on columns `p, q`.
pub fn herm_eigen(h: &ComplexMatrix) -> Result<EigenDecomposition> {
    if !h.is_finite() {
        return Err(Error::NonFinite);
    }
    let deviation = h.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NonHermitianInput { deviation });
    }
    let n = h.dim;
    let mut a = h.hermitian_part();
    for i in 0..n {
        a[(i, i)] = r(a[(i, i)].re);
    }
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off = a.off_diagonal_norm();
        if off <= JACOBI_TOL * scale.max(f64::MIN_POSITIVE) {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        let off = a.off_diagonal_norm();
        if off > JACOBI_TOL * scale.max(f64::MIN_POSITIVE) {
            return Err(Error::ConvergenceFailure {
                sweeps: JACOBI_MAX_SWEEPS,
                off_norm: off,
            });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n);
    for (col, &k) in order.iter().enumerate() {
        for i in 0..n {
            eigenvectors[(i, col)] = v[(i, k)];
        }
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.dim;
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // underflow guard: the rotation would be numerically the identity
    if g <= f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = r(0.0);
        a[(q, p)] = r(0.0);
        return;
    }
    let phase = apq / g;
    let theta = (aqq - app) / (2.0 * g);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let cs = 1.0 / (t * t + 1.0).sqrt();
    let sn = t * cs;

    // U restricted to (p, q): [[c, s], [-s e^{-iφ}, c e^{-iφ}]]
    let u_pp = r(cs);
    let u_pq = r(sn);
    let u_qp = -phase.conj() * sn;
    let u_qq = phase.conj() * cs;

    // A <- A U (columns p, q)
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * u_pp + aiq * u_qp;
        a[(i, q)] = aip * u_pq + aiq * u_qq;
    }
    // A <- U† A (rows p, q)
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = u_pp.conj() * apj + u_qp.conj() * aqj;
        a[(q, j)] = u_pq.conj() * apj + u_qq.conj() * aqj;
    }
    a[(p, q)] = r(0.0);
    a[(q, p)] = r(0.0);
    a[(p, p)] = r(a[(p, p)].re);
    a[(q, q)] = r(a[(q, q)].re);

    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * u_pp + viq * u_qp;
        v[(i, q)] = vip * u_pq + viq * u_qq;
    }
}

/// Hermitian square root of a positive semidefinite matrix.
pub fn psd_sqrt(p: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = herm_eigen(p)?;
    let min = eig.min_eigenvalue();
    if min < -PSD_CLAMP {
        return Err(Error::NotPositiveSemidefinite {
            min_eigenvalue: min,
        });
    }
    Ok(eig.reconstruct_with(|x| x.max(0.0).sqrt()))
}

pub fn mat3_transpose(t: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = t[j][i];
        }
    }
    out
}

pub fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Eigenvalues of `TᵀT`, largest first, clamped at zero.
pub fn gram_eigenvalues_3x3(t: &Mat3) -> Result<[f64; 3]> {
    let g = mat3_mul(&mat3_transpose(t), t);
    let m = ComplexMatrix::from_mat3(&g);
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let d = herm_eigen(&m)?.descending();
    Ok([d[0].max(0.0), d[1].max(0.0), d[2].max(0.0)])
}

/// Singular values of a square complex matrix, largest first.
///
/// One-sided (Hestenes) Jacobi: columns are rotated pairwise until mutually
/// orthogonal, and the singular values are the column norms. Small singular
/// values come out with absolute accuracy near machine epsilon, unlike the
/// square roots of the eigenvalues of `A†A`.
pub fn singular_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let n = a.dim;
    let mut w = *a;
    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = Complex64::new(0.0, 0.0);
                for i in 0..n {
                    alpha += w[(i, p)].norm_sqr();
                    beta += w[(i, q)].norm_sqr();
                    gamma += w[(i, p)].conj() * w[(i, q)];
                }
                let g = gamma.norm();
                if g == 0.0 || g <= JACOBI_TOL * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let theta = (beta - alpha) / (2.0 * g);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let cs = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * cs;
                let u_qp = -phase.conj() * sn;
                let u_qq = phase.conj() * cs;
                for i in 0..n {
                    let wp = w[(i, p)];
                    let wq = w[(i, q)];
                    w[(i, p)] = wp * cs + wq * u_qp;
                    w[(i, q)] = wp * sn + wq * u_qq;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure {
            sweeps: JACOBI_MAX_SWEEPS,
            off_norm: f64::NAN,
        });
    }
    let mut sv: Vec<f64> = (0..n)
        .map(|j| (0..n).map(|i| w[(i, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    Ok(sv)
}

/// Singular values of a real 3x3 matrix, largest first. These equal the
/// square roots of the eigenvalues of `TᵀT`.
pub fn singular_values_3x3(t: &Mat3) -> Result<[f64; 3]> {
    if t.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let sv = singular_values(&ComplexMatrix::from_mat3(t))?;
    Ok([sv[0], sv[1], sv[2]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_eigenvalues() {
        let e = herm_eigen(&ComplexMatrix::identity(4)).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0; 4]);
        let vtv = e.eigenvectors.adjoint() * e.eigenvectors;
        assert!(vtv.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-12);
    }

    #[test]
    fn sigma_z_eigenvalues_ascending() {
        let e = herm_eigen(&sigma_z()).unwrap();
        assert_eq!(e.eigenvalues, vec![-1.0, 1.0]);
    }

    #[test]
    fn sigma_y_eigenvectors() {
        let e = herm_eigen(&sigma_y()).unwrap();
        assert!((e.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((e.eigenvalues[1] - 1.0).abs() < 1e-14);
        assert!(e.reconstruct().max_abs_diff(&sigma_y()) < 1e-14);
    }

    #[test]
    fn choi_block_eigenvalues() {
        // [[c², c], [c, 1]] block: roots 0 and 1 + c²; the s² diagonal entry stands alone.
        for &cr in &[1.0, 0.9, 0.75, std::f64::consts::FRAC_1_SQRT_2] {
            let s2 = 1.0 - cr * cr;
            let mut m = ComplexMatrix::zeros(4);
            m[(0, 0)] = r(cr * cr);
            m[(0, 3)] = r(cr);
            m[(3, 0)] = r(cr);
            m[(3, 3)] = r(1.0);
            m[(1, 1)] = r(s2);
            let e = herm_eigen(&m).unwrap();
            let mut expected = vec![0.0, 0.0, s2, 1.0 + cr * cr];
            expected.sort_by(f64::total_cmp);
            for (a, b) in e.eigenvalues.iter().zip(&expected) {
                assert!((a - b).abs() < 1e-12, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = r(1.0);
        assert!(matches!(
            herm_eigen(&m),
            Err(Error::NonHermitianInput { .. })
        ));
    }

    #[test]
    fn rejects_non_finite() {
        let mut m = ComplexMatrix::identity(2);
        m[(0, 0)] = r(f64::NAN);
        assert_eq!(herm_eigen(&m), Err(Error::NonFinite));
        assert_eq!(
            ComplexMatrix::from_real(2, &[1.0, f64::INFINITY, 0.0, 1.0]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn from_row_major_checks_count() {
        assert_eq!(
            ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0]),
            Err(Error::DimensionMismatch {
                expected: 4,
                found: 3
            })
        );
        assert_eq!(
            ComplexMatrix::from_real(5, &[0.0; 25]),
            Err(Error::UnsupportedDimension(5))
        );
    }

    #[test]
    fn sqrt_examples() {
        let i2 = ComplexMatrix::identity(2);
        assert!(psd_sqrt(&i2).unwrap().max_abs_diff(&i2) < 1e-15);
        let s = psd_sqrt(&ComplexMatrix::from_real_diag(&[4.0, 9.0])).unwrap();
        assert!(s.max_abs_diff(&ComplexMatrix::from_real_diag(&[2.0, 3.0])) < 1e-14);

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let singlet = ComplexMatrix::outer(&[r(0.0), r(h), r(-h), r(0.0)]);
        assert!(psd_sqrt(&singlet).unwrap().max_abs_diff(&singlet) < 1e-12);
    }

    #[test]
    fn sqrt_clamps_small_negatives_and_rejects_large() {
        let tiny = ComplexMatrix::from_real_diag(&[1.0, -5e-11]);
        let s = psd_sqrt(&tiny).unwrap();
        assert_eq!(s[(1, 1)], r(0.0));
        let bad = ComplexMatrix::from_real_diag(&[1.5, -0.5]);
        assert!(matches!(
            psd_sqrt(&bad),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn singular_value_examples() {
        let id = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        assert_eq!(singular_values_3x3(&id).unwrap(), [1.0, 1.0, 1.0]);

        let t = [[0.45, 0.0, 0.0], [0.0, -0.15, 0.0], [0.0, 0.0, -0.1125]];
        let s = singular_values_3x3(&t).unwrap();
        for (a, b) in s.iter().zip([0.45, 0.15, 0.1125]) {
            assert!((a - b).abs() < 1e-15);
        }

        let phi = [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];
        assert_eq!(singular_values_3x3(&phi).unwrap(), [1.0, 1.0, 1.0]);

        let nan = [[f64::NAN, 0.0, 0.0], [0.0; 3], [0.0; 3]];
        assert_eq!(singular_values_3x3(&nan), Err(Error::NonFinite));
    }

    #[test]
    fn kron_examples() {
        let i = ComplexMatrix::identity(2);
        assert_eq!(kron(&i, &i).unwrap(), ComplexMatrix::identity(4));
        assert_eq!(
            kron(&sigma_z(), &sigma_z()).unwrap(),
            ComplexMatrix::from_real_diag(&[1.0, -1.0, -1.0, 1.0])
        );
        let xx = kron(&sigma_x(), &sigma_x()).unwrap();
        for row in 0..4 {
            for col in 0..4 {
                let expected = if row + col == 3 { 1.0 } else { 0.0 };
                assert_eq!(xx[(row, col)], r(expected));
            }
        }
        assert!(kron(&ComplexMatrix::identity(3), &i).is_err());
    }

    #[test]
    fn kron_orders_alice_first() {
        // σ_z ⊗ I flips the sign on |10⟩, |11⟩
        let zi = kron(&sigma_z(), &ComplexMatrix::identity(2)).unwrap();
        assert_eq!(zi, ComplexMatrix::from_real_diag(&[1.0, 1.0, -1.0, -1.0]));
    }
}
