//! The fermionic Unruh channel and its Choi–Kraus correspondence.
//!
//! Rob's detector mode, seen from his accelerated frame, undergoes the map
//! `ρ ↦ K₁ρK₁† + K₂ρK₂†` with `K₁ = diag(cos r, 1)` and `K₂ = sin r |1⟩⟨0|`,
//! where `cos r = (1 + e^{−2πω/a})^{−1/2}` (units with c = 1).

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{herm_eigen, kron, r, ComplexMatrix, PSD_CLAMP};
use crate::state::{validate_density, DensityMatrix, STATE_TOL};

/// Completeness defect above which a Kraus set is rejected.
pub const COMPLETENESS_TOL: f64 = 1e-10;

/// Eigenvalues of a Choi matrix at or below this produce no Kraus operator.
pub const KRAUS_RANK_TOL: f64 = 1e-12;

/// A uniform acceleration expressed as the dimensionless ratio `a/ω`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Acceleration {
    Finite(f64),
    Infinite,
}

impl Acceleration {
    /// Physical acceleration `a` and mode frequency `ω` combined into `a/ω`.
    pub fn from_physical(accel: Acceleration, omega: f64) -> Result<Acceleration> {
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::InvalidSweep(format!(
                "omega must be a positive finite number, got {omega}"
            )));
        }
        match accel {
            Acceleration::Infinite => Ok(Acceleration::Infinite),
            Acceleration::Finite(a) if a.is_nan() || a < 0.0 => Err(Error::NegativeAcceleration(a)),
            Acceleration::Finite(a) => Ok(Acceleration::Finite(a / omega)),
        }
    }
}

impl fmt::Display for Acceleration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Acceleration::Finite(a) => write!(f, "{a}"),
            Acceleration::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Acceleration {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") {
            return Ok(Acceleration::Infinite);
        }
        let a: f64 = t
            .parse()
            .map_err(|_| format!("invalid acceleration '{s}' (number or 'inf')"))?;
        if a.is_infinite() && a > 0.0 {
            return Ok(Acceleration::Infinite);
        }
        if a.is_nan() || a < 0.0 {
            return Err(format!("acceleration must be non-negative, got {s}"));
        }
        Ok(Acceleration::Finite(a))
    }
}

/// Channel parameter `r` with cached `cos r` and `sin r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnruhParam {
    r: f64,
    cos_r: f64,
    sin_r: f64,
}

impl UnruhParam {
    /// Accepts the abstract range `r ∈ [0, π/2]`.
    pub fn from_r(r: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&r) {
            return Err(Error::ROutOfRange { r, max: FRAC_PI_2 });
        }
        if r == FRAC_PI_4 {
            return Ok(Self::infinite_acceleration());
        }
        Ok(Self {
            r,
            cos_r: r.cos(),
            sin_r: r.sin(),
        })
    }

    /// Accepts `cos r ∈ [0, 1]`.
    pub fn from_cos(cos_r: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&cos_r) {
            return Err(Error::CosROutOfRange(cos_r));
        }
        if cos_r == FRAC_1_SQRT_2 {
            return Ok(Self::infinite_acceleration());
        }
        let sin_r = (1.0 - cos_r * cos_r).sqrt();
        Ok(Self {
            r: sin_r.atan2(cos_r),
            cos_r,
            sin_r,
        })
    }

    pub fn identity() -> Self {
        Self {
            r: 0.0,
            cos_r: 1.0,
            sin_r: 0.0,
        }
    }

    /// The `a → ∞` limit, `cos r = sin r = 2^{−1/2}` exactly.
    pub fn infinite_acceleration() -> Self {
        Self {
            r: FRAC_PI_4,
            cos_r: FRAC_1_SQRT_2,
            sin_r: FRAC_1_SQRT_2,
        }
    }

    pub fn from_acceleration(a: Acceleration) -> Result<Self> {
        match a {
            Acceleration::Infinite => Ok(Self::infinite_acceleration()),
            Acceleration::Finite(x) => r_from_acceleration(x),
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn cos_r(&self) -> f64 {
        self.cos_r
    }

    pub fn sin_r(&self) -> f64 {
        self.sin_r
    }

    /// True when the parameter can come from a real acceleration, `r ≤ π/4`.
    pub fn is_physical(&self) -> bool {
        self.cos_r >= FRAC_1_SQRT_2
    }
}

/// `cos r = (1 + exp(−2π/(a/ω)))^{−1/2}`, with `a/ω = 0` and `a/ω = ∞`
/// handled exactly.
pub fn r_from_acceleration(a_over_omega: f64) -> Result<UnruhParam> {
    if a_over_omega.is_nan() || a_over_omega < 0.0 {
        return Err(Error::NegativeAcceleration(a_over_omega));
    }
    if a_over_omega == 0.0 {
        return Ok(UnruhParam::identity());
    }
    if a_over_omega.is_infinite() {
        return Ok(UnruhParam::infinite_acceleration());
    }
    let x = (-2.0 * PI / a_over_omega).exp();
    let norm = (1.0 + x).sqrt();
    let cos_r = 1.0 / norm;
    let sin_r = (-PI / a_over_omega).exp() / norm;
    Ok(UnruhParam {
        r: sin_r.atan2(cos_r),
        cos_r,
        sin_r,
    })
}

/// Physical constants for [`unruh_temperature`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub k_b: f64,
    pub c: f64,
}

impl PhysicalConstants {
    /// CODATA 2018 values in SI units.
    pub const SI: PhysicalConstants = PhysicalConstants {
        hbar: 1.054_571_817e-34,
        k_b: 1.380_649e-23,
        c: 299_792_458.0,
    };
}

/// Unruh temperature `ħa / (2π k_B c)`.
pub fn unruh_temperature(a: f64, consts: &PhysicalConstants) -> Result<f64> {
    if a.is_nan() || a < 0.0 {
        return Err(Error::NegativeAcceleration(a));
    }
    Ok(consts.hbar * a / (2.0 * PI * consts.k_b * consts.c))
}

/// An ordered set of single-qubit Kraus operators.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    operators: Vec<ComplexMatrix>,
    label: String,
}

impl KrausSet {
    pub fn new(operators: Vec<ComplexMatrix>, label: impl Into<String>) -> Result<Self> {
        if let Some(k) = operators.iter().find(|k| k.dim() != 2) {
            return Err(Error::KrausDimension(k.dim()));
        }
        Ok(Self {
            operators,
            label: label.into(),
        })
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// `max |Σ K†K − I|`.
    pub fn completeness_defect(&self) -> f64 {
        let sum = self
            .operators
            .iter()
            .fold(ComplexMatrix::zeros(2), |acc, k| acc + k.adjoint() * k);
        sum.max_abs_diff(&ComplexMatrix::identity(2))
    }

    /// `Σ K X K†` on an arbitrary 2x2 operator.
    pub fn act(&self, x: &ComplexMatrix) -> ComplexMatrix {
        self.operators
            .iter()
            .fold(ComplexMatrix::zeros(2), |acc, k| acc + x.sandwich(k))
    }

    /// The channel `X ↦ U ε(U† X U) U†`.
    pub fn conjugated(&self, u: &ComplexMatrix) -> KrausSet {
        let ud = u.adjoint();
        KrausSet {
            operators: self.operators.iter().map(|k| u * k * ud).collect(),
            label: format!("{} (conjugated)", self.label),
        }
    }

    fn check_complete(&self) -> Result<()> {
        let defect = self.completeness_defect();
        if defect >= COMPLETENESS_TOL {
            return Err(Error::IncompleteKrausSet { defect });
        }
        Ok(())
    }
}

pub fn unruh_kraus(u: &UnruhParam) -> KrausSet {
    let k1 = ComplexMatrix::from_real_diag(&[u.cos_r, 1.0]);
    let mut k2 = ComplexMatrix::zeros(2);
    k2[(1, 0)] = r(u.sin_r);
    KrausSet {
        operators: vec![k1, k2],
        label: format!("unruh(r={})", u.r),
    }
}

/// Standard amplitude damping toward |0⟩.
pub fn amplitude_damping_kraus(gamma: f64) -> Result<KrausSet> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::GammaOutOfRange(gamma));
    }
    let k0 = ComplexMatrix::from_real_diag(&[1.0, (1.0 - gamma).sqrt()]);
    let mut k1 = ComplexMatrix::zeros(2);
    k1[(0, 1)] = r(gamma.sqrt());
    Ok(KrausSet {
        operators: vec![k0, k1],
        label: format!("amplitude-damping(gamma={gamma})"),
    })
}

pub fn apply_channel(k: &KrausSet, rho: &DensityMatrix) -> Result<DensityMatrix> {
    k.check_complete()?;
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: rho.dim(),
        });
    }
    validate_density(&k.act(rho.matrix()))
}

/// `Σ (I⊗K) ρ (I⊗K)†`: the channel acts on Rob's (second) qubit only.
pub fn apply_one_sided(k: &KrausSet, rho: &DensityMatrix) -> Result<DensityMatrix> {
    k.check_complete()?;
    rho.expect_two_qubit()?;
    let id = ComplexMatrix::identity(2);
    let mut out = ComplexMatrix::zeros(4);
    for op in k.operators() {
        out = out + rho.matrix().sandwich(&kron(&id, op)?);
    }
    validate_density(&out)
}

/// Which tensor factor of the maximally entangled state the channel acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChoiOrdering {
    /// `C = Σ |i⟩⟨j| ⊗ ε(|i⟩⟨j|)`.
    #[default]
    ChannelOnSecond,
    /// `C = Σ ε(|i⟩⟨j|) ⊗ |i⟩⟨j|`.
    ChannelOnFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChoiNormalization {
    /// Trace 2 (unnormalized sum over matrix units).
    #[default]
    TraceD,
    /// Trace 1 (a bona fide state).
    TraceOne,
}

impl ChoiNormalization {
    fn trace(self) -> f64 {
        match self {
            ChoiNormalization::TraceD => 2.0,
            ChoiNormalization::TraceOne => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChoiMatrix {
    matrix: ComplexMatrix,
    ordering: ChoiOrdering,
    normalization: ChoiNormalization,
}

impl ChoiMatrix {
    /// Validates Hermiticity, positivity and the trace implied by
    /// `normalization`.
    pub fn new(
        matrix: ComplexMatrix,
        ordering: ChoiOrdering,
        normalization: ChoiNormalization,
    ) -> Result<Self> {
        if matrix.dim() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: matrix.dim(),
            });
        }
        let deviation = matrix.hermitian_deviation();
        if deviation > STATE_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = matrix.trace().re;
        if (trace - normalization.trace()).abs() > STATE_TOL {
            return Err(Error::TraceNotOne { trace });
        }
        let min_eigenvalue = herm_eigen(&matrix)?.min_eigenvalue();
        if min_eigenvalue < -PSD_CLAMP {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
        }
        Ok(Self {
            matrix,
            ordering,
            normalization,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn ordering(&self) -> ChoiOrdering {
        self.ordering
    }

    pub fn normalization(&self) -> ChoiNormalization {
        self.normalization
    }

    /// Trace over the channel's output factor, rescaled to trace-2
    /// normalization. Equals the identity iff the channel is trace preserving.
    pub fn input_marginal(&self) -> ComplexMatrix {
        let m = self.matrix.scale(2.0 / self.normalization.trace());
        let mut out = ComplexMatrix::zeros(2);
        for i in 0..2 {
            for j in 0..2 {
                out[(i, j)] = match self.ordering {
                    ChoiOrdering::ChannelOnSecond => m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)],
                    ChoiOrdering::ChannelOnFirst => m[(i, j)] + m[(2 + i, 2 + j)],
                };
            }
        }
        out
    }
}

fn matrix_unit(i: usize, j: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2);
    m[(i, j)] = r(1.0);
    m
}

/// The four matrix units `|0⟩⟨0|, |0⟩⟨1|, |1⟩⟨0|, |1⟩⟨1|`.
pub fn matrix_units() -> [ComplexMatrix; 4] {
    [
        matrix_unit(0, 0),
        matrix_unit(0, 1),
        matrix_unit(1, 0),
        matrix_unit(1, 1),
    ]
}

pub fn choi_of(
    k: &KrausSet,
    ordering: ChoiOrdering,
    normalization: ChoiNormalization,
) -> ChoiMatrix {
    let mut c = ComplexMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            let unit = matrix_unit(i, j);
            let image = k.act(&unit);
            let term = match ordering {
                ChoiOrdering::ChannelOnSecond => kron(&unit, &image),
                ChoiOrdering::ChannelOnFirst => kron(&image, &unit),
            };
            c = c + term.expect("2x2 factors");
        }
    }
    let matrix = match normalization {
        ChoiNormalization::TraceD => c,
        ChoiNormalization::TraceOne => c.scale(0.5),
    };
    ChoiMatrix {
        matrix,
        ordering,
        normalization,
    }
}

/// Recovers a Kraus set by diagonalizing the Choi matrix: each eigenpair
/// `(λ, v)` with `λ > 1e-12` contributes `√λ · v` reshaped to 2x2.
pub fn kraus_from_choi(choi: &ChoiMatrix) -> Result<KrausSet> {
    let m = choi.matrix.scale(2.0 / choi.normalization.trace());
    let eig = herm_eigen(&m)?;
    let min_eigenvalue = eig.min_eigenvalue();
    if min_eigenvalue < -PSD_CLAMP {
        return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
    }
    let mut operators = Vec::new();
    for (idx, &lambda) in eig.eigenvalues.iter().enumerate().rev() {
        if lambda <= KRAUS_RANK_TOL {
            continue;
        }
        let v = eig.eigenvector(idx);
        let s = lambda.sqrt();
        let mut k = ComplexMatrix::zeros(2);
        for a in 0..2 {
            for i in 0..2 {
                // ChannelOnSecond: v = Σ_i |i⟩ ⊗ K|i⟩, ChannelOnFirst: v = Σ_i K|i⟩ ⊗ |i⟩
                let pos = match choi.ordering {
                    ChoiOrdering::ChannelOnSecond => 2 * i + a,
                    ChoiOrdering::ChannelOnFirst => 2 * a + i,
                };
                k[(a, i)] = v[pos] * s;
            }
        }
        operators.push(k);
    }
    Ok(KrausSet {
        operators,
        label: "from-choi".to_string(),
    })
}

/// The state Alice and Rob share after tracing out the unobservable Rindler
/// region, starting from `|Φ⁺⟩`:
/// `(1/2)[cos²r|00⟩⟨00| + cos r(|00⟩⟨11| + |11⟩⟨00|) + sin²r|01⟩⟨01| + |11⟩⟨11|]`.
pub fn rindler_shared_state(u: &UnruhParam) -> DensityMatrix {
    let mut m = ComplexMatrix::zeros(4);
    m[(0, 0)] = r(0.5 * u.cos_r * u.cos_r);
    m[(0, 3)] = r(0.5 * u.cos_r);
    m[(3, 0)] = r(0.5 * u.cos_r);
    m[(1, 1)] = r(0.5 * u.sin_r * u.sin_r);
    m[(3, 3)] = r(0.5);
    DensityMatrix::from_trusted(m)
}
