//! Seeded state generators: generic, fixed-eta, and rank-1 (separable).
//!
//! All generators take an explicit RNG; the CLI keys a ChaCha8 stream off a
//! 64-bit seed so generated files are byte-reproducible.

use num_complex::Complex64;
use rand::Rng;

use crate::error::Result;
use crate::linalg::{random_unitary_from, standard_complex, CMatrix, C_ZERO};
use crate::measures::spectrum_closed_form;
use crate::state::FermionState;

/// Generic state: i.i.d. complex Gaussian upper triangle, antisymmetrized
/// and normalized.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R) -> FermionState {
    let m = CMatrix::from_fn(4, 4, |i, j| {
        if i < j {
            standard_complex(rng)
        } else {
            C_ZERO
        }
    });
    FermionState::from_matrix(&m - &m.transpose(), true).expect("gaussian draw is nonzero")
}

/// State with a prescribed correlation measure: the real canonical form
/// built from r_i = sqrt(lambda/2) conjugated by a Haar local unitary,
/// which leaves eta untouched.
pub fn random_fixed_eta<R: Rng + ?Sized>(rng: &mut R, eta: f64) -> Result<FermionState> {
    let spec = spectrum_closed_form(eta)?;
    let r1 = (spec.lambda_plus / 2.0).sqrt();
    let r2 = (spec.lambda_minus / 2.0).sqrt();
    let canonical = FermionState::from_pluecker(
        [
            Complex64::new(r1, 0.0),
            C_ZERO,
            C_ZERO,
            Complex64::new(r2, 0.0),
            C_ZERO,
            C_ZERO,
        ],
        false,
    )?;
    let u = random_unitary_from(rng, 4);
    canonical.local_unitary(&u)
}

/// Separable (Slater rank one) state: normalized bivector u ^ v from two
/// random complex 4-vectors.
pub fn random_rank1<R: Rng + ?Sized>(rng: &mut R) -> FermionState {
    loop {
        let u: Vec<Complex64> = (0..4).map(|_| standard_complex(rng)).collect();
        let v: Vec<Complex64> = (0..4).map(|_| standard_complex(rng)).collect();
        let m = CMatrix::from_fn(4, 4, |i, j| u[i] * v[j] - u[j] * v[i]);
        // u, v collinear is measure zero but would be a zero matrix
        if let Ok(s) = FermionState::from_matrix(m, true) {
            return s;
        }
    }
}

/// States with E = e^{i theta} conj(B): maximally entangled by construction.
pub fn random_maximal<R: Rng + ?Sized>(rng: &mut R, theta: f64) -> FermionState {
    let phase = Complex64::from_polar(1.0, theta);
    let b: [Complex64; 3] = [
        standard_complex(rng),
        standard_complex(rng),
        standard_complex(rng),
    ];
    let e = [phase * b[0].conj(), phase * b[1].conj(), phase * b[2].conj()];
    FermionState::from_fields(&crate::state::FieldPair { e, b }, true).expect("nonzero fields")
}
