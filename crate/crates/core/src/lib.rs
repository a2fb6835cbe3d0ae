//! Fermionic Unruh channel on two-qubit states.
//!
//! The crate models what an inertial observer and a uniformly accelerated
//! partner can still do with a shared two-qubit state once the accelerated
//! side has passed through the Unruh channel: how much entanglement is left
//! (concurrence), how well the state teleports (maximum average fidelity) and
//! whether it still violates the CHSH inequality.
//!
//! * [`linalg`] small dense complex matrices and a Jacobi Hermitian eigensolver
//! * [`state`] density matrices, state families, Pauli decompositions
//! * [`channel`] the Unruh channel, its Choi matrix and the Rindler state
//! * [`measures`] concurrence, teleportation fidelity, Bell-CHSH maximum
//! * [`closed_form`] published closed forms and an engine comparator
//! * [`sweep`] grid sweeps, CSV output, validation grids, threshold search

pub mod channel;
pub mod closed_form;
pub mod error;
pub mod linalg;
pub mod measures;
pub mod state;
pub mod sweep;

pub use channel::{
    amplitude_damping_kraus, apply_channel, apply_one_sided, choi_of, kraus_from_choi,
    r_from_acceleration, rindler_shared_state, unruh_kraus, unruh_temperature, Acceleration,
    ChoiMatrix, ChoiNormalization, ChoiOrdering, KrausSet, PhysicalConstants, UnruhParam,
};
pub use closed_form::{compare_point, ClosedFormReport, Measure, Verdict};
pub use error::{Error, Result};
pub use linalg::{
    herm_eigen, kron, psd_sqrt, singular_values_3x3, ComplexMatrix, EigenDecomposition,
};
pub use measures::{
    avg_fidelity, bell_eigs, bell_max, concurrence, measure_report, n_value, ppt_min_eigenvalue,
    MeasureReport,
};
pub use state::{
    bell_diagonal, bell_state, correlation_data, family_state, input_qubit, validate_density,
    BellState, CorrelationData, DensityMatrix, FamilyKind, StateFamily,
};
pub use sweep::{find_thresholds, run_sweep, validate_family, SweepSpec, ThresholdReport};
