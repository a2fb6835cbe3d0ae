//! Plain-text rendering with 12 significant digits.

use std::fmt::Write as _;

use num_complex::Complex64;
use unruh_core::closed_form::{ClosedFormReport, Comparison};
use unruh_core::{Acceleration, ComplexMatrix, KrausSet};

/// `x` rounded to 12 significant digits, printed without trailing zeros.
pub fn sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if (1e-5..1e15).contains(&rounded.abs()) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

fn complex(z: Complex64) -> String {
    if z.im == 0.0 {
        sig(z.re)
    } else if z.re == 0.0 {
        format!("{}i", sig(z.im))
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{}i", sig(z.re), sig(z.im.abs()))
    }
}

pub fn list(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| sig(v))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn matrix(m: &ComplexMatrix) -> String {
    let n = m.dim();
    let cells: Vec<String> = m.entries().iter().map(|&z| complex(z)).collect();
    let width = cells.iter().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    for row in cells.chunks(n) {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(s, "[ {} ]", line.join("  "));
    }
    s
}

pub fn kraus(k: &KrausSet) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# {}", k.label());
    for (i, op) in k.operators().iter().enumerate() {
        let _ = writeln!(s, "K{}:", i + 1);
        s.push_str(&matrix(op));
    }
    let _ = writeln!(s, "completeness defect: {:.3e}", k.completeness_defect());
    s
}

fn comparison(name: &str, c: &Comparison) -> String {
    format!(
        "{name}: closed form {}, engine {}, |diff| {:.3e}, {}\n",
        sig(c.closed_form),
        sig(c.engine),
        c.abs_diff,
        c.verdict
    )
}

pub fn measure(rep: &ClosedFormReport, accel: Option<Acceleration>) -> String {
    let e = &rep.engine;
    let mut s = String::new();
    let _ = writeln!(s, "family: {}", rep.family);
    let _ = writeln!(s, "p: {}", sig(rep.p));
    if let Some(a) = accel {
        let _ = writeln!(s, "accel: {a}");
    }
    let _ = writeln!(s, "r: {}", sig(rep.u.r()));
    let _ = writeln!(s, "cos_r: {}", sig(rep.u.cos_r()));
    let _ = writeln!(s, "n_value: {}", sig(e.n_value));
    let _ = writeln!(s, "fidelity: {}", sig(e.fidelity));
    let _ = writeln!(s, "concurrence: {}", sig(e.concurrence));
    let _ = writeln!(s, "bell_max: {}", sig(e.bell_max));
    let _ = writeln!(s, "bell_eigs: {}", list(&e.bell_eigs));
    let _ = writeln!(s, "teleports_quantumly: {}", e.teleports_quantumly);
    let _ = writeln!(s, "bell_violating: {}", e.bell_violating);
    let _ = writeln!(s, "fidelity_boundary: {}", e.fidelity_boundary);
    let _ = writeln!(s, "bell_boundary: {}", e.bell_boundary);
    s.push('\n');
    s.push_str(&comparison("cf fidelity", &rep.fidelity));
    match &rep.concurrence {
        Some(c) => s.push_str(&comparison("cf concurrence", c)),
        None => s.push_str("cf concurrence: no closed form\n"),
    }
    s.push_str(&comparison("cf bell_max", &rep.bell_max));
    let _ = writeln!(
        s,
        "cf bell_eigs: closed form {}, |diff| {:.3e}, {}",
        list(&rep.cf_bell_eigs),
        rep.bell_eigs_diff,
        rep.bell_eigs_verdict
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig_rounds_to_twelve_digits() {
        assert_eq!(sig(0.8190355937288492), "0.819035593729");
        assert_eq!(sig(2.0), "2");
        assert_eq!(sig(-0.0), "0");
        assert_eq!(sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig(1e-20), "1e-20");
        assert_eq!(sig(-8.344590972e-17), "-8.344590972e-17");
        assert_eq!(sig(2e-5), "0.00002");
    }

    #[test]
    fn complex_entries() {
        assert_eq!(complex(Complex64::new(0.5, -0.25)), "0.5-0.25i");
        assert_eq!(complex(Complex64::new(0.0, 1.0)), "1i");
        assert_eq!(complex(Complex64::new(1.0, 0.0)), "1");
    }
}
