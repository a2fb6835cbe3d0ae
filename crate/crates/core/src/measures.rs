//! Concurrence, maximum average teleportation fidelity and the Bell-CHSH
//! maximum of an arbitrary two-qubit state, plus a partial-transpose
//! entanglement witness used as an independent check on the concurrence.

use crate::error::Error;
use crate::error::Result;
use crate::linalg::{
    gram_eigenvalues_3x3, herm_eigen, kron, sigma_y, singular_values, singular_values_3x3,
    ComplexMatrix, PSD_CLAMP,
};
use crate::state::{correlation_data, DensityMatrix};

/// Classical teleportation bound on the average fidelity.
pub const CLASSICAL_FIDELITY: f64 = 2.0 / 3.0;

/// Local-realist bound on the CHSH expectation.
pub const CHSH_BOUND: f64 = 2.0;

/// Half-width of the band around a threshold reported as "boundary".
pub const BOUNDARY_TOL: f64 = 1e-9;

/// `N(ρ) = tr √(TᵀT)`, the sum of the singular values of the correlation
/// matrix.
pub fn n_value(rho: &DensityMatrix) -> Result<f64> {
    let s = singular_values_3x3(&correlation_data(rho)?.t)?;
    Ok(s.iter().sum())
}

/// `F = 1/2 + N/6`.
pub fn avg_fidelity(rho: &DensityMatrix) -> Result<f64> {
    Ok(0.5 + n_value(rho)? / 6.0)
}

/// Spin-flipped state `(σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
pub fn spin_flip(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    rho.expect_two_qubit()?;
    let yy = kron(&sigma_y(), &sigma_y())?;
    Ok(yy * rho.matrix().conj() * yy)
}

/// Eigenvalues of ρ at or below this multiple of the largest one are rank
/// noise and are dropped before taking square roots.
const RANK_TOL: f64 = 64.0 * f64::EPSILON;

/// Wootters concurrence `max(0, λ₁ − λ₂ − λ₃ − λ₄)`.
///
/// The `λᵢ` (square roots of the eigenvalues of `√ρ ρ̃ √ρ`) are obtained
/// directly as the singular values of `√ρ √ρ̃`, with `√ρ̃ = (σ_y⊗σ_y) √ρ*
/// (σ_y⊗σ_y)`. Taking square roots of eigenvalues instead would turn
/// round-off of order 1e-17 into errors of order 1e-9 on rank-deficient
/// states.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    rho.expect_two_qubit()?;
    let eig = herm_eigen(rho.matrix())?;
    let min = eig.min_eigenvalue();
    if min < -PSD_CLAMP {
        return Err(Error::NotPositiveSemidefinite {
            min_eigenvalue: min,
        });
    }
    let cutoff = RANK_TOL * eig.descending()[0].max(0.0);
    let root = eig.reconstruct_with(|x| if x <= cutoff { 0.0 } else { x.sqrt() });
    let yy = kron(&sigma_y(), &sigma_y())?;
    let root_flipped = yy * root.conj() * yy;
    let l = singular_values(&(root * root_flipped))?;
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}

/// Eigenvalues of `TᵀT`, largest first.
pub fn bell_eigs(rho: &DensityMatrix) -> Result<[f64; 3]> {
    gram_eigenvalues_3x3(&correlation_data(rho)?.t)
}

/// `B_max = 2√(u₁ + u₂)` over the two largest eigenvalues of `TᵀT`.
pub fn bell_max(rho: &DensityMatrix) -> Result<f64> {
    Ok(bell_max_from_eigs(&bell_eigs(rho)?))
}

/// `2√(u₁ + u₂)` for the two largest entries of an arbitrary triple.
pub fn bell_max_from_eigs(u: &[f64; 3]) -> f64 {
    let mut s = *u;
    s.sort_by(|a, b| b.total_cmp(a));
    2.0 * (s[0] + s[1]).max(0.0).sqrt()
}

/// Partial transpose over Rob's (second) qubit.
pub fn partial_transpose(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    rho.expect_two_qubit()?;
    let m = rho.matrix();
    let mut out = ComplexMatrix::zeros(4);
    for a in 0..2 {
        for b in 0..2 {
            for a2 in 0..2 {
                for b2 in 0..2 {
                    out[(2 * a + b, 2 * a2 + b2)] = m[(2 * a + b2, 2 * a2 + b)];
                }
            }
        }
    }
    Ok(out)
}

/// Smallest eigenvalue of the partial transpose; negative iff entangled.
pub fn ppt_min_eigenvalue(rho: &DensityMatrix) -> Result<f64> {
    Ok(herm_eigen(&partial_transpose(rho)?)?.min_eigenvalue())
}

/// All three measures of one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureReport {
    pub n_value: f64,
    pub fidelity: f64,
    pub concurrence: f64,
    pub bell_max: f64,
    /// Largest first.
    pub bell_eigs: [f64; 3],
    /// `fidelity > 2/3`, false inside the boundary band.
    pub teleports_quantumly: bool,
    /// `bell_max > 2`, false inside the boundary band.
    pub bell_violating: bool,
    /// `|fidelity − 2/3| ≤ 1e-9`.
    pub fidelity_boundary: bool,
    /// `|bell_max − 2| ≤ 1e-9`.
    pub bell_boundary: bool,
}

pub fn measure_report(rho: &DensityMatrix) -> Result<MeasureReport> {
    let t = correlation_data(rho)?.t;
    let bell_eigs = gram_eigenvalues_3x3(&t)?;
    let n_value: f64 = singular_values_3x3(&t)?.iter().sum();
    let fidelity = 0.5 + n_value / 6.0;
    let bell_max = 2.0 * (bell_eigs[0] + bell_eigs[1]).sqrt();
    let fidelity_boundary = (fidelity - CLASSICAL_FIDELITY).abs() <= BOUNDARY_TOL;
    let bell_boundary = (bell_max - CHSH_BOUND).abs() <= BOUNDARY_TOL;
    Ok(MeasureReport {
        n_value,
        fidelity,
        concurrence: concurrence(rho)?,
        bell_max,
        bell_eigs,
        teleports_quantumly: fidelity > CLASSICAL_FIDELITY && !fidelity_boundary,
        bell_violating: bell_max > CHSH_BOUND && !bell_boundary,
        fidelity_boundary,
        bell_boundary,
    })
}
