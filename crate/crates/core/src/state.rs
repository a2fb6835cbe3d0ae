//! Density matrices, the three two-qubit families, and the Pauli
//! decomposition of two-qubit states.
//!
//! Conventions: σ₁ = σ_x, σ₂ = σ_y = [[0, −i], [i, 0]], σ₃ = σ_z. Two-qubit
//! basis order is |00⟩, |01⟩, |10⟩, |11⟩ with Alice as the first factor and
//! Rob as the second.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{herm_eigen, kron, paulis, r, ComplexMatrix, Mat3, Vec3};

/// Tolerance for every density-matrix invariant.
pub const STATE_TOL: f64 = 1e-10;

const TETRAHEDRON_TOL: f64 = 1e-12;

/// A validated density matrix of dimension 2 or 4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    /// Reduced state of the first (Alice's) qubit.
    pub fn reduced_first(&self) -> Result<DensityMatrix> {
        self.expect_two_qubit()?;
        let mut m = ComplexMatrix::zeros(2);
        for a in 0..2 {
            for b in 0..2 {
                m[(a, b)] = self.0[(2 * a, 2 * b)] + self.0[(2 * a + 1, 2 * b + 1)];
            }
        }
        Ok(DensityMatrix(m))
    }

    /// Reduced state of the second (Rob's) qubit.
    pub fn reduced_second(&self) -> Result<DensityMatrix> {
        self.expect_two_qubit()?;
        let mut m = ComplexMatrix::zeros(2);
        for a in 0..2 {
            for b in 0..2 {
                m[(a, b)] = self.0[(a, b)] + self.0[(2 + a, 2 + b)];
            }
        }
        Ok(DensityMatrix(m))
    }

    /// Convex combination `w·self + (1 − w)·other`.
    pub fn mix(&self, other: &DensityMatrix, w: f64) -> Result<DensityMatrix> {
        if !(0.0..=1.0).contains(&w) {
            return Err(Error::ProbabilityOutOfRange(w));
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(DensityMatrix(self.0.scale(w) + other.0.scale(1.0 - w)))
    }

    pub(crate) fn expect_two_qubit(&self) -> Result<()> {
        if self.dim() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: self.dim(),
            });
        }
        Ok(())
    }

    /// Wraps a matrix already known to be a valid state.
    pub(crate) fn from_trusted(m: ComplexMatrix) -> Self {
        DensityMatrix(m)
    }
}

/// Checks Hermiticity, unit trace and positivity, each to [`STATE_TOL`].
pub fn validate_density(m: &ComplexMatrix) -> Result<DensityMatrix> {
    if m.dim() != 2 && m.dim() != 4 {
        return Err(Error::UnsupportedDimension(m.dim()));
    }
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let deviation = m.hermitian_deviation();
    if deviation > STATE_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let trace = m.trace();
    if (trace.re - 1.0).abs() > STATE_TOL || trace.im.abs() > STATE_TOL {
        return Err(Error::TraceNotOne { trace: trace.re });
    }
    let min_eigenvalue = herm_eigen(m)?.min_eigenvalue();
    if min_eigenvalue < -STATE_TOL {
        return Err(Error::NotPositive { min_eigenvalue });
    }
    Ok(DensityMatrix(*m))
}

/// Pure qubit `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
pub fn input_qubit(theta: f64, phi: f64) -> Result<DensityMatrix> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::AngleOutOfRange {
            name: "theta",
            value: theta,
            min: 0.0,
            max: PI,
        });
    }
    if !(0.0..=2.0 * PI).contains(&phi) {
        return Err(Error::AngleOutOfRange {
            name: "phi",
            value: phi,
            min: 0.0,
            max: 2.0 * PI,
        });
    }
    let amp0 = r((theta / 2.0).cos());
    let amp1 = Complex64::from_polar((theta / 2.0).sin(), phi);
    Ok(DensityMatrix(ComplexMatrix::outer(&[amp0, amp1])))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PhiPlus,
        BellState::PhiMinus,
        BellState::PsiPlus,
        BellState::PsiMinus,
    ];

    pub fn amplitudes(self) -> [Complex64; 4] {
        let h = FRAC_1_SQRT_2;
        match self {
            BellState::PhiPlus => [r(h), r(0.0), r(0.0), r(h)],
            BellState::PhiMinus => [r(h), r(0.0), r(0.0), r(-h)],
            BellState::PsiPlus => [r(0.0), r(h), r(h), r(0.0)],
            BellState::PsiMinus => [r(0.0), r(h), r(-h), r(0.0)],
        }
    }

    /// Diagonal of the correlation matrix.
    fn correlations(self) -> Vec3 {
        match self {
            BellState::PhiPlus => [1.0, -1.0, 1.0],
            BellState::PhiMinus => [-1.0, 1.0, 1.0],
            BellState::PsiPlus => [1.0, 1.0, -1.0],
            BellState::PsiMinus => [-1.0, -1.0, -1.0],
        }
    }
}

pub fn bell_state(kind: BellState) -> DensityMatrix {
    DensityMatrix(ComplexMatrix::outer(&kind.amplitudes()))
}

/// `(1/4)(I⊗I + Σ r_i σ_i⊗σ_i)`, admitted only inside the tetrahedron of
/// valid correlation triples.
pub fn bell_diagonal(r1: f64, r2: f64, r3: f64) -> Result<DensityMatrix> {
    let rv = [r1, r2, r3];
    // weight of each Bell projector is (1 + r·t)/4 with t its correlation diagonal
    for kind in BellState::ALL {
        let t = kind.correlations();
        let w = (1.0 + rv[0] * t[0] + rv[1] * t[1] + rv[2] * t[2]) / 4.0;
        if w < -TETRAHEDRON_TOL {
            return Err(Error::OutsideTetrahedron { eigenvalue: w });
        }
    }
    let mut m = ComplexMatrix::identity(4);
    for (sigma, ri) in paulis().iter().zip(rv) {
        m = m + kron(sigma, sigma)?.scale(ri);
    }
    Ok(DensityMatrix(m.scale(0.25)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    BellDiagonal,
    Werner,
    XState,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 3] = [
        FamilyKind::BellDiagonal,
        FamilyKind::Werner,
        FamilyKind::XState,
    ];

    /// Short name used on the command line and in CSV output.
    pub fn token(self) -> &'static str {
        match self {
            FamilyKind::BellDiagonal => "bd",
            FamilyKind::Werner => "werner",
            FamilyKind::XState => "x",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "bd" | "bell-diagonal" | "bell_diagonal" | "belldiagonal" => {
                Ok(FamilyKind::BellDiagonal)
            }
            "werner" => Ok(FamilyKind::Werner),
            "x" | "x-state" | "xstate" | "x_state" => Ok(FamilyKind::XState),
            other => Err(format!(
                "unknown family '{other}' (expected bd, werner or x)"
            )),
        }
    }
}

/// One member of a one-parameter state family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateFamily {
    kind: FamilyKind,
    p: f64,
}

impl StateFamily {
    pub fn new(kind: FamilyKind, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::ProbabilityOutOfRange(p));
        }
        Ok(Self { kind, p })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// Builds the family member:
///
/// * Bell-diagonal: `p|ψ⁻⟩⟨ψ⁻| + (1−p)/2 (|ψ⁺⟩⟨ψ⁺| + |φ⁺⟩⟨φ⁺|)`, i.e. the
///   correlation triple `(1−2p, −p, −p)`.
/// * Werner: `(1−p)/4 I⊗I + p|ψ⁻⟩⟨ψ⁻|`.
/// * X-state: `(1−p)|φ⁺⟩⟨φ⁺| + p|ψ⁺⟩⟨ψ⁺|`.
pub fn family_state(f: StateFamily) -> Result<DensityMatrix> {
    let p = f.p;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    match f.kind {
        FamilyKind::BellDiagonal => bell_diagonal(1.0 - 2.0 * p, -p, -p),
        FamilyKind::Werner => {
            let singlet = bell_state(BellState::PsiMinus).into_matrix();
            let m = ComplexMatrix::identity(4).scale((1.0 - p) / 4.0) + singlet.scale(p);
            Ok(DensityMatrix(m))
        }
        FamilyKind::XState => {
            let phi = bell_state(BellState::PhiPlus).into_matrix();
            let psi = bell_state(BellState::PsiPlus).into_matrix();
            Ok(DensityMatrix(phi.scale(1.0 - p) + psi.scale(p)))
        }
    }
}

/// Pauli decomposition of a two-qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationData {
    /// `T[i][j] = tr(ρ σ_i⊗σ_j)`.
    pub t: Mat3,
    /// `tr(ρ σ_i⊗I)`.
    pub bloch_a: Vec3,
    /// `tr(ρ I⊗σ_j)`.
    pub bloch_r: Vec3,
}

impl CorrelationData {
    /// `(1/4)[I⊗I + Σ a_i σ_i⊗I + Σ b_j I⊗σ_j + Σ T_ij σ_i⊗σ_j]`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let s = paulis();
        let id = ComplexMatrix::identity(2);
        let mut m = ComplexMatrix::identity(4);
        for i in 0..3 {
            m = m + kron(&s[i], &id).unwrap().scale(self.bloch_a[i]);
            m = m + kron(&id, &s[i]).unwrap().scale(self.bloch_r[i]);
            for j in 0..3 {
                m = m + kron(&s[i], &s[j]).unwrap().scale(self.t[i][j]);
            }
        }
        m.scale(0.25)
    }
}

fn real_trace(rho: &ComplexMatrix, op: &ComplexMatrix) -> Result<f64> {
    let z = (rho * op).trace();
    if z.im.abs() >= STATE_TOL {
        return Err(Error::NonRealTrace { imag: z.im });
    }
    Ok(z.re)
}

pub fn correlation_data(rho: &DensityMatrix) -> Result<CorrelationData> {
    rho.expect_two_qubit()?;
    let m = rho.matrix();
    let s = paulis();
    let id = ComplexMatrix::identity(2);
    let mut out = CorrelationData {
        t: [[0.0; 3]; 3],
        bloch_a: [0.0; 3],
        bloch_r: [0.0; 3],
    };
    for i in 0..3 {
        out.bloch_a[i] = real_trace(m, &kron(&s[i], &id)?)?;
        out.bloch_r[i] = real_trace(m, &kron(&id, &s[i])?)?;
        for j in 0..3 {
            out.t[i][j] = real_trace(m, &kron(&s[i], &s[j])?)?;
        }
    }
    Ok(out)
}
