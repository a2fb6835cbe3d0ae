//! Published closed-form expressions for the three families after the
//! channel acts on Rob's qubit, transcribed literally, and a comparator that
//! measures how far each one sits from the matrix engine.
//!
//! The transcriptions are deliberately left uncorrected. Several of them
//! disagree with direct computation (missing absolute values, a stray factor
//! of two); [`compare_point`] exists to localize those gaps.

use std::fmt;

use crate::channel::{apply_one_sided, unruh_kraus, UnruhParam};
use crate::error::{Error, Result};
use crate::measures::{bell_max_from_eigs, measure_report, MeasureReport};
use crate::state::{family_state, FamilyKind, StateFamily};

/// Default agreement tolerance between a closed form and the engine.
pub const MATCH_TOL: f64 = 1e-9;

const RADICAND_TOL: f64 = 1e-12;

fn radical(value: f64) -> Result<f64> {
    if value < -RADICAND_TOL {
        return Err(Error::NegativeRadicand { value });
    }
    Ok(value.max(0.0).sqrt())
}

/// Bell-diagonal fidelity; each `√(x²)` is read as `|x|`.
pub fn bd_fidelity_cf(p: f64, u: &UnruhParam) -> f64 {
    let c = u.cos_r();
    0.5 + (p * c * c).abs() / 6.0
        + (c * (1.0 - 3.0 * p - (1.0 - p) * c)).abs() / 12.0
        + (c * (3.0 * p - 1.0 - (1.0 - p) * c)).abs() / 12.0
}

/// Bell-diagonal concurrence `2 max{0, c₁, c₂}`.
pub fn bd_concurrence_cf(p: f64, u: &UnruhParam) -> Result<f64> {
    let c = u.cos_r();
    let c2 = c * c;
    let cos2r = c2 - u.sin_r() * u.sin_r();
    let rad1 = radical((p - 1.0) * c2 * ((p + 1.0) * cos2r + p - 3.0))?;
    let rad2 = radical((p + 1.0) * c2 * ((p - 1.0) * cos2r + p + 3.0))?;
    let t1 = 0.25 * (((1.0 - 3.0 * p) * c).abs() - rad1 / std::f64::consts::SQRT_2);
    let t2 = 0.25 * (((p - 1.0) * c2).abs() - rad2 / std::f64::consts::SQRT_2);
    Ok(2.0 * t1.max(t2).max(0.0))
}

/// Bell-diagonal eigenvalue list `(u₁, u₂, u₃)` of `TᵀT`, in published order.
pub fn bd_bell_eigs_cf(p: f64, u: &UnruhParam) -> [f64; 3] {
    let c = u.cos_r();
    let c2 = c * c;
    [
        0.25 * c2 * ((p - 1.0) * c - 3.0 * p + 1.0).powi(2),
        0.25 * c2 * ((p - 1.0) * c + 3.0 * p - 1.0).powi(2),
        p * p * c2 * c2,
    ]
}

pub fn werner_fidelity_cf(p: f64, u: &UnruhParam) -> f64 {
    let c = u.cos_r();
    0.5 + p * c * c / 6.0 + p * c / 3.0
}

pub fn werner_concurrence_cf(p: f64, u: &UnruhParam) -> Result<f64> {
    let c = u.cos_r();
    let s2 = u.sin_r() * u.sin_r();
    let rad = radical((1.0 - p) / 4.0 * c * c * ((1.0 + p) / 4.0 * s2 + (1.0 - p) / 4.0))?;
    let c1 = (-p / 2.0 * c).abs() - rad;
    Ok(2.0 * c1.max(0.0))
}

/// Published Werner list, including the factor 2 on `u₃`.
pub fn werner_bell_eigs_cf(p: f64, u: &UnruhParam) -> [f64; 3] {
    let c = u.cos_r();
    let c2 = c * c;
    [p * p * c2, p * p * c2, 2.0 * p * p * c2 * c2]
}

/// X-state fidelity as published, without absolute values.
pub fn x_fidelity_cf(p: f64, u: &UnruhParam) -> f64 {
    let c = u.cos_r();
    let q = 2.0 * p - 1.0;
    0.5 + c / 6.0 + q * c / 6.0 + q * q * c * c / 6.0
}

pub fn x_bell_eigs_cf(p: f64, u: &UnruhParam) -> [f64; 3] {
    let c = u.cos_r();
    let c2 = c * c;
    let q2 = (1.0 - 2.0 * p).powi(2);
    [c2, q2 * c2, q2 * c2 * c2]
}

/// The closed forms available for one family at one point. The X-state has
/// no published concurrence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForms {
    pub fidelity: f64,
    pub concurrence: Option<f64>,
    pub bell_eigs: [f64; 3],
}

impl ClosedForms {
    /// `2√(u₁ + u₂)` with the two largest entries of the published list.
    pub fn bell_max(&self) -> f64 {
        bell_max_from_eigs(&self.bell_eigs)
    }
}

pub fn closed_forms(kind: FamilyKind, p: f64, u: &UnruhParam) -> Result<ClosedForms> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    Ok(match kind {
        FamilyKind::BellDiagonal => ClosedForms {
            fidelity: bd_fidelity_cf(p, u),
            concurrence: Some(bd_concurrence_cf(p, u)?),
            bell_eigs: bd_bell_eigs_cf(p, u),
        },
        FamilyKind::Werner => ClosedForms {
            fidelity: werner_fidelity_cf(p, u),
            concurrence: Some(werner_concurrence_cf(p, u)?),
            bell_eigs: werner_bell_eigs_cf(p, u),
        },
        FamilyKind::XState => ClosedForms {
            fidelity: x_fidelity_cf(p, u),
            concurrence: None,
            bell_eigs: x_bell_eigs_cf(p, u),
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Fidelity,
    Concurrence,
    BellEigs,
    BellMax,
}

impl Measure {
    pub const ALL: [Measure; 4] = [
        Measure::Fidelity,
        Measure::Concurrence,
        Measure::BellEigs,
        Measure::BellMax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Fidelity => "fidelity",
            Measure::Concurrence => "concurrence",
            Measure::BellEigs => "bell_eigs",
            Measure::BellMax => "bell_max",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
        })
    }
}

/// One measure's closed-form value against the engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub closed_form: f64,
    pub engine: f64,
    pub abs_diff: f64,
    pub verdict: Verdict,
}

impl Comparison {
    fn new(closed_form: f64, engine: f64, tol: f64) -> Self {
        let abs_diff = (closed_form - engine).abs();
        Self {
            closed_form,
            engine,
            abs_diff,
            verdict: verdict(abs_diff, tol),
        }
    }
}

fn verdict(abs_diff: f64, tol: f64) -> Verdict {
    if abs_diff <= tol {
        Verdict::Match
    } else {
        Verdict::Mismatch
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormReport {
    pub family: FamilyKind,
    pub p: f64,
    pub u: UnruhParam,
    pub engine: MeasureReport,
    pub cf_bell_eigs: [f64; 3],
    pub fidelity: Comparison,
    /// Absent for the X-state.
    pub concurrence: Option<Comparison>,
    pub bell_max: Comparison,
    /// Largest entrywise gap between the sorted published list and the
    /// sorted engine eigenvalues.
    pub bell_eigs_diff: f64,
    pub bell_eigs_verdict: Verdict,
}

impl ClosedFormReport {
    pub fn comparison(&self, m: Measure) -> Option<Comparison> {
        match m {
            Measure::Fidelity => Some(self.fidelity),
            Measure::Concurrence => self.concurrence,
            Measure::BellMax => Some(self.bell_max),
            Measure::BellEigs => None,
        }
    }

    /// `(abs_diff, verdict)` for any measure, when it exists for this family.
    pub fn outcome(&self, m: Measure) -> Option<(f64, Verdict)> {
        match m {
            Measure::BellEigs => Some((self.bell_eigs_diff, self.bell_eigs_verdict)),
            other => self.comparison(other).map(|c| (c.abs_diff, c.verdict)),
        }
    }

    /// Largest of the fidelity, concurrence and Bell-maximum gaps.
    pub fn max_abs_diff(&self) -> f64 {
        let mut m = self.fidelity.abs_diff.max(self.bell_max.abs_diff);
        if let Some(c) = self.concurrence {
            m = m.max(c.abs_diff);
        }
        m
    }

    pub fn all_match(&self) -> bool {
        Measure::ALL
            .iter()
            .filter_map(|&m| self.outcome(m))
            .all(|(_, v)| v == Verdict::Match)
    }
}

/// Runs the engine and the closed forms at one point with [`MATCH_TOL`].
pub fn compare_point(kind: FamilyKind, p: f64, u: &UnruhParam) -> Result<ClosedFormReport> {
    compare_point_with_tol(kind, p, u, MATCH_TOL)
}

pub fn compare_point_with_tol(
    kind: FamilyKind,
    p: f64,
    u: &UnruhParam,
    tol: f64,
) -> Result<ClosedFormReport> {
    let state = family_state(StateFamily::new(kind, p)?)?;
    let transformed = apply_one_sided(&unruh_kraus(u), &state)?;
    let engine = measure_report(&transformed)?;
    let cf = closed_forms(kind, p, u)?;

    let mut sorted_cf = cf.bell_eigs;
    sorted_cf.sort_by(|a, b| b.total_cmp(a));
    let bell_eigs_diff = sorted_cf
        .iter()
        .zip(engine.bell_eigs.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);

    Ok(ClosedFormReport {
        family: kind,
        p,
        u: *u,
        engine,
        cf_bell_eigs: cf.bell_eigs,
        fidelity: Comparison::new(cf.fidelity, engine.fidelity, tol),
        concurrence: cf
            .concurrence
            .map(|c| Comparison::new(c, engine.concurrence, tol)),
        bell_max: Comparison::new(cf.bell_max(), engine.bell_max, tol),
        bell_eigs_diff,
        bell_eigs_verdict: verdict(bell_eigs_diff, tol),
    })
}
