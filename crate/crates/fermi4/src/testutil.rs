//! Shared fixtures for unit tests.

use num_complex::Complex64;

use crate::linalg::C_ZERO;
use crate::state::FermionState;

/// Reference state with eta = 0.6: P_01 = sqrt(0.9)/2, P_23 = -sqrt(0.1)/2.
pub(crate) fn s06() -> FermionState {
    FermionState::from_pluecker(
        [
            Complex64::new(0.9f64.sqrt() / 2.0, 0.0),
            C_ZERO,
            C_ZERO,
            Complex64::new(-(0.1f64.sqrt()) / 2.0, 0.0),
            C_ZERO,
            C_ZERO,
        ],
        false,
    )
    .expect("reference state")
}
