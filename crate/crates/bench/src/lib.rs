//! Fixtures shared by the benchmarks.

use unruh_core::{
    apply_one_sided, family_state, unruh_kraus, DensityMatrix, FamilyKind, StateFamily, UnruhParam,
};

/// A Werner state at `p` after the channel at angle `r`: a generic
/// full-rank input for the measure benchmarks.
pub fn transformed_werner(p: f64, r: f64) -> DensityMatrix {
    let u = UnruhParam::from_r(r).expect("r in range");
    let rho = family_state(StateFamily::new(FamilyKind::Werner, p).expect("p in range"))
        .expect("valid state");
    apply_one_sided(&unruh_kraus(&u), &rho).expect("channel output")
}

/// The rank-deficient point where concurrence is hardest numerically.
pub fn werner_edge() -> DensityMatrix {
    transformed_werner(1.0, std::f64::consts::FRAC_PI_4)
}
