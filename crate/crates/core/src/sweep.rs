//! Parameter sweeps over `(p, a)`, CSV emission, closed-form validation
//! grids and threshold search.

use std::f64::consts::FRAC_PI_4;
use std::fmt::Write as _;
use std::io;

use crate::channel::{apply_one_sided, unruh_kraus, Acceleration, UnruhParam};
use crate::closed_form::{compare_point_with_tol, ClosedFormReport, Measure, Verdict};
use crate::error::{Error, Result};
use crate::measures::{measure_report, MeasureReport, CHSH_BOUND, CLASSICAL_FIDELITY};
use crate::state::{family_state, FamilyKind, StateFamily};

pub const CSV_HEADER: [&str; 13] = [
    "family",
    "p",
    "accel",
    "r",
    "cos_r",
    "n_value",
    "fidelity",
    "concurrence",
    "bell_max",
    "cf_fidelity",
    "cf_concurrence",
    "cf_bell_max",
    "max_abs_diff",
];

/// Accelerations used when none are given.
pub fn default_accels() -> Vec<Acceleration> {
    vec![
        Acceleration::Finite(0.0),
        Acceleration::Finite(1.0),
        Acceleration::Finite(3.0),
        Acceleration::Finite(10.0),
        Acceleration::Infinite,
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub families: Vec<FamilyKind>,
    pub p_min: f64,
    pub p_max: f64,
    pub p_steps: usize,
    pub accels: Vec<Acceleration>,
    pub omega: f64,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            families: FamilyKind::ALL.to_vec(),
            p_min: 0.0,
            p_max: 1.0,
            p_steps: 101,
            accels: default_accels(),
            omega: 1.0,
        }
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSweep(msg));
        if self.families.is_empty() {
            return bad("no families selected".into());
        }
        if self.p_steps < 2 {
            return bad(format!("p steps must be at least 2, got {}", self.p_steps));
        }
        if self.p_min.is_nan() || self.p_max.is_nan() || self.p_min >= self.p_max {
            return bad(format!(
                "p range must satisfy min < max, got [{}, {}]",
                self.p_min, self.p_max
            ));
        }
        if self.p_min < 0.0 || self.p_max > 1.0 {
            return bad(format!(
                "p range [{}, {}] leaves [0, 1]",
                self.p_min, self.p_max
            ));
        }
        if self.accels.is_empty() {
            return bad("no accelerations given".into());
        }
        for a in &self.accels {
            if let Acceleration::Finite(x) = a {
                if x.is_nan() || *x < 0.0 {
                    return bad(format!("acceleration must be non-negative, got {x}"));
                }
            }
        }
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return bad(format!("omega must be positive, got {}", self.omega));
        }
        Ok(())
    }

    pub fn p_grid(&self) -> Vec<f64> {
        linspace(self.p_min, self.p_max, self.p_steps)
    }
}

/// `steps` evenly spaced points with both endpoints exact.
pub fn linspace(min: f64, max: f64, steps: usize) -> Vec<f64> {
    let last = steps - 1;
    (0..steps)
        .map(|i| {
            if i == last {
                max
            } else {
                min + (max - min) * i as f64 / last as f64
            }
        })
        .collect()
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub family: FamilyKind,
    pub p: f64,
    pub accel: Acceleration,
    pub u: UnruhParam,
    pub engine: MeasureReport,
    pub closed_form: ClosedFormReport,
}

/// Channel parameter for an acceleration measured in units of `omega`.
pub fn param_for(accel: Acceleration, omega: f64) -> Result<UnruhParam> {
    UnruhParam::from_acceleration(Acceleration::from_physical(accel, omega)?)
}

pub fn evaluate_point(
    family: FamilyKind,
    p: f64,
    accel: Acceleration,
    omega: f64,
) -> Result<SweepRow> {
    let u = param_for(accel, omega)?;
    let closed_form = compare_point_with_tol(family, p, &u, crate::closed_form::MATCH_TOL)?;
    Ok(SweepRow {
        family,
        p,
        accel,
        u,
        engine: closed_form.engine,
        closed_form,
    })
}

/// Rows ordered by family, then accel-list position, then ascending p.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let grid = spec.p_grid();
    let mut rows = Vec::with_capacity(spec.families.len() * spec.accels.len() * grid.len());
    for &family in &spec.families {
        for &accel in &spec.accels {
            for &p in &grid {
                rows.push(evaluate_point(family, p, accel, spec.omega)?);
            }
        }
    }
    Ok(rows)
}

/// Shortest round-trip representation: plain decimal for magnitudes in
/// `[1e-5, 1e15)`, scientific notation otherwise. Negative zero is `0`.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if (1e-5..1e15).contains(&x.abs()) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn format_accel(a: Acceleration) -> String {
    match a {
        Acceleration::Infinite => "inf".to_string(),
        Acceleration::Finite(x) => format_float(x),
    }
}

impl SweepRow {
    pub fn csv_record(&self) -> Vec<String> {
        let cf = &self.closed_form;
        vec![
            self.family.token().to_string(),
            format_float(self.p),
            format_accel(self.accel),
            format_float(self.u.r()),
            format_float(self.u.cos_r()),
            format_float(self.engine.n_value),
            format_float(self.engine.fidelity),
            format_float(self.engine.concurrence),
            format_float(self.engine.bell_max),
            format_float(cf.fidelity.closed_form),
            cf.concurrence
                .map(|c| format_float(c.closed_form))
                .unwrap_or_default(),
            format_float(cf.bell_max.closed_form),
            format_float(cf.max_abs_diff()),
        ]
    }
}

pub fn write_csv<W: io::Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Error::Csv(e.to_string());
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for row in rows {
        w.write_record(row.csv_record()).map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::Csv(e.to_string()))?;
    Ok(())
}

pub fn sweep_csv(spec: &SweepSpec) -> Result<Vec<u8>> {
    let rows = run_sweep(spec)?;
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf)?;
    Ok(buf)
}

/// Match/mismatch tally of one measure over a validation grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureTally {
    pub measure: Measure,
    pub matches: usize,
    pub mismatches: usize,
    pub worst_diff: f64,
    /// `(p, r)` of the worst point.
    pub worst_at: (f64, f64),
}

impl MeasureTally {
    fn new(measure: Measure) -> Self {
        Self {
            measure,
            matches: 0,
            mismatches: 0,
            worst_diff: 0.0,
            worst_at: (f64::NAN, f64::NAN),
        }
    }

    pub fn total(&self) -> usize {
        self.matches + self.mismatches
    }

    pub fn match_fraction(&self) -> f64 {
        self.matches as f64 / self.total() as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationSummary {
    pub family: FamilyKind,
    pub p_steps: usize,
    pub r_steps: usize,
    pub tol: f64,
    /// Only measures with a closed form for this family.
    pub tallies: Vec<MeasureTally>,
}

impl ValidationSummary {
    pub fn tally(&self, m: Measure) -> Option<&MeasureTally> {
        self.tallies.iter().find(|t| t.measure == m)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "family: {}\ngrid: {} p-points in [0, 1] x {} r-points in [0, pi/4]\ntolerance: {:e}",
            self.family, self.p_steps, self.r_steps, self.tol
        );
        for t in &self.tallies {
            let _ = writeln!(
                s,
                "{}: {} match, {} mismatch ({:.2}% match); worst |cf - engine| = {:e} at p = {}, r = {}",
                t.measure.name(),
                t.matches,
                t.mismatches,
                100.0 * t.match_fraction(),
                t.worst_diff,
                format_float(t.worst_at.0),
                format_float(t.worst_at.1),
            );
        }
        s
    }
}

/// Compares every closed form against the engine on a `p × r` grid over
/// `[0, 1] × [0, π/4]`.
pub fn validate_family(
    family: FamilyKind,
    p_steps: usize,
    r_steps: usize,
    tol: f64,
) -> Result<ValidationSummary> {
    if p_steps < 2 || r_steps < 2 {
        return Err(Error::InvalidSweep(format!(
            "grid needs at least 2 points per axis, got {p_steps} x {r_steps}"
        )));
    }
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::InvalidSweep(format!(
            "tolerance must be non-negative, got {tol}"
        )));
    }
    let mut tallies: Vec<MeasureTally> =
        Measure::ALL.iter().map(|&m| MeasureTally::new(m)).collect();
    for &r in &linspace(0.0, FRAC_PI_4, r_steps) {
        let u = UnruhParam::from_r(r)?;
        for &p in &linspace(0.0, 1.0, p_steps) {
            let rep = compare_point_with_tol(family, p, &u, tol)?;
            for t in tallies.iter_mut() {
                if let Some((diff, verdict)) = rep.outcome(t.measure) {
                    match verdict {
                        Verdict::Match => t.matches += 1,
                        Verdict::Mismatch => t.mismatches += 1,
                    }
                    if diff > t.worst_diff || t.worst_at.0.is_nan() {
                        t.worst_diff = diff;
                        t.worst_at = (p, r);
                    }
                }
            }
        }
    }
    tallies.retain(|t| t.total() > 0);
    Ok(ValidationSummary {
        family,
        p_steps,
        r_steps,
        tol,
        tallies,
    })
}

/// Grid resolution used to bracket sign changes before bisection.
pub const THRESHOLD_SCAN_POINTS: usize = 1001;

/// Bracket width at which bisection stops.
pub const THRESHOLD_WIDTH: f64 = 1e-8;

/// `|g| ≤ ZERO_TOL` counts as touching the threshold.
pub const ZERO_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdReport {
    pub family: FamilyKind,
    pub accel: Acceleration,
    /// Values of p where `F − 2/3` changes sign or vanishes, ascending.
    pub fidelity_crossings: Vec<f64>,
    /// Values of p where `B − 2` changes sign or vanishes, ascending.
    pub bell_crossings: Vec<f64>,
}

/// Locates the p at which the fidelity and the Bell maximum cross their
/// classical bounds, by scanning and then bisecting.
pub fn find_thresholds(
    family: FamilyKind,
    accel: Acceleration,
    omega: f64,
) -> Result<ThresholdReport> {
    let u = param_for(accel, omega)?;
    let kraus = unruh_kraus(&u);
    let eval = |p: f64| -> Result<MeasureReport> {
        let rho = family_state(StateFamily::new(family, p)?)?;
        measure_report(&apply_one_sided(&kraus, &rho)?)
    };
    let fidelity = |p: f64| eval(p).map(|m| m.fidelity - CLASSICAL_FIDELITY);
    let bell = |p: f64| eval(p).map(|m| m.bell_max - CHSH_BOUND);
    Ok(ThresholdReport {
        family,
        accel,
        fidelity_crossings: crossings(fidelity)?,
        bell_crossings: crossings(bell)?,
    })
}

fn sign(g: f64) -> i8 {
    if g.abs() <= ZERO_TOL {
        0
    } else if g > 0.0 {
        1
    } else {
        -1
    }
}

/// Roots of `g` on `[0, 1]`: bisection inside every scan interval whose
/// endpoints have strictly opposite signs, plus every scan point where `g`
/// is within [`ZERO_TOL`] of zero.
pub fn crossings(g: impl Fn(f64) -> Result<f64>) -> Result<Vec<f64>> {
    let grid = linspace(0.0, 1.0, THRESHOLD_SCAN_POINTS);
    let values = grid.iter().map(|&p| g(p)).collect::<Result<Vec<f64>>>()?;
    let mut roots = Vec::new();
    for (i, (&p, &v)) in grid.iter().zip(&values).enumerate() {
        if sign(v) == 0 {
            roots.push(p);
            continue;
        }
        if let Some(&next) = values.get(i + 1) {
            if sign(v) * sign(next) < 0 {
                roots.push(bisect(&g, p, grid[i + 1], v)?);
            }
        }
    }
    Ok(roots)
}

fn bisect(g: &impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64, g_lo: f64) -> Result<f64> {
    let lo_sign = sign(g_lo);
    while hi - lo >= THRESHOLD_WIDTH {
        let mid = 0.5 * (lo + hi);
        let s = sign(g(mid)?);
        if s == 0 {
            return Ok(mid);
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

impl ThresholdReport {
    pub fn render(&self) -> String {
        let list = |v: &[f64]| {
            if v.is_empty() {
                "none".to_string()
            } else {
                v.iter()
                    .map(|&x| format_float(x))
                    .collect::<Vec<_>>()
                    .join(", ")
            }
        };
        format!(
            "family: {}\naccel: {}\nfidelity crossings (F = 2/3): {}\nbell crossings (B = 2): {}\n",
            self.family,
            format_accel(self.accel),
            list(&self.fidelity_crossings),
            list(&self.bell_crossings)
        )
    }
}
