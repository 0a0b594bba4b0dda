//! Two-fermion pure states with four single-particle modes.
//!
//! A state is the antisymmetric 4x4 complex amplitude matrix P with
//! normalization 2 Tr PP\u{2020} = 1. The six independent entries are the
//! Pluecker amplitudes; the (E, B) field pair and the a = E + iB,
//! b = E - iB vectors are derived views. The full matrix is the canonical
//! internal storage so congruence transforms stay one-line matrix algebra.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, kron, CMatrix, CVec3, C_I, C_ZERO};

/// Rounding below this is silently symmetrized away; anything larger is
/// rejected as genuinely non-antisymmetric input.
pub const ANTISYMMETRY_TOL: f64 = 1e-12;
/// Validation tolerance on |2 Tr PP\u{2020} - 1|.
pub const NORMALIZATION_TOL: f64 = 1e-10;
/// Acceptance tolerance on |U\u{2020}U - I| for local unitaries.
pub const UNITARITY_TOL: f64 = 1e-10;

/// Complex 3-vector pair (E, B) parametrizing P: P_0j = E_j,
/// P_jk = -eps_jkl B_l.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldPair {
    pub e: CVec3,
    pub b: CVec3,
}

/// The vectors a = E + iB and b = E - iB; for a normalized state
/// ||a||^2 + ||b||^2 = 1/2.
#[derive(Clone, Debug, PartialEq)]
pub struct ABVectors {
    pub a: CVec3,
    pub b: CVec3,
}

/// Normalized antisymmetric amplitude matrix of a two-fermion state.
#[derive(Clone, Debug, PartialEq)]
pub struct FermionState {
    p: CMatrix,
}

impl FermionState {
    /// Wraps a 4x4 amplitude matrix. With `normalize` the matrix is rescaled
    /// to 2 Tr PP\u{2020} = 1; otherwise the normalization is validated.
    pub fn from_matrix(m: CMatrix, normalize: bool) -> Result<Self> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(Error::ShapeMismatch(m.rows(), m.cols(), 4, 4));
        }
        let asym = m.max_abs_diff(&m.transpose().scale(Complex64::new(-1.0, 0.0)))?;
        let scale_ref = m.max_abs().max(1.0);
        if asym > ANTISYMMETRY_TOL * scale_ref {
            return Err(Error::NotAntisymmetric(asym));
        }
        // absorb rounding
        let p = (&m - &m.transpose()).scale(Complex64::new(0.5, 0.0));
        let norm = 2.0 * (&p * &p.dagger()).trace().re;
        if normalize {
            if norm < 1e-300 {
                return Err(Error::ZeroState);
            }
            Ok(FermionState {
                p: p.scale(Complex64::new(1.0 / norm.sqrt(), 0.0)),
            })
        } else {
            if (norm - 1.0).abs() >= NORMALIZATION_TOL {
                return Err(Error::NotNormalized(norm));
            }
            Ok(FermionState { p })
        }
    }

    /// Builds P from the six upper-triangle amplitudes
    /// (p01, p02, p03, p23, p13, p12).
    pub fn from_pluecker(amps: [Complex64; 6], normalize: bool) -> Result<Self> {
        let [p01, p02, p03, p23, p13, p12] = amps;
        let mut m = CMatrix::zeros(4, 4);
        m[(0, 1)] = p01;
        m[(0, 2)] = p02;
        m[(0, 3)] = p03;
        m[(2, 3)] = p23;
        m[(1, 3)] = p13;
        m[(1, 2)] = p12;
        for i in 0..4 {
            for j in 0..i {
                m[(i, j)] = -m[(j, i)];
            }
        }
        FermionState::from_matrix(m, normalize)
    }

    pub fn from_fields(f: &FieldPair, normalize: bool) -> Result<Self> {
        FermionState::from_pluecker(
            [f.e[0], f.e[1], f.e[2], -f.b[0], f.b[1], -f.b[2]],
            normalize,
        )
    }

    /// Single Slater determinant: P_01 = -P_10 = 1/2.
    pub fn single_slater() -> Self {
        let half = Complex64::new(0.5, 0.0);
        FermionState::from_pluecker([half, C_ZERO, C_ZERO, C_ZERO, C_ZERO, C_ZERO], false)
            .expect("reference state")
    }

    /// Maximally entangled reference: P_01 = P_23 = 1/(2 sqrt 2).
    pub fn maximal() -> Self {
        let v = Complex64::new(0.5 * std::f64::consts::FRAC_1_SQRT_2, 0.0);
        FermionState::from_pluecker([v, C_ZERO, C_ZERO, v, C_ZERO, C_ZERO], false)
            .expect("reference state")
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.p
    }

    /// The six upper-triangle amplitudes (p01, p02, p03, p23, p13, p12).
    pub fn pluecker(&self) -> [Complex64; 6] {
        [
            self.p[(0, 1)],
            self.p[(0, 2)],
            self.p[(0, 3)],
            self.p[(2, 3)],
            self.p[(1, 3)],
            self.p[(1, 2)],
        ]
    }

    pub fn to_fields(&self) -> FieldPair {
        FieldPair {
            e: [self.p[(0, 1)], self.p[(0, 2)], self.p[(0, 3)]],
            b: [-self.p[(2, 3)], self.p[(1, 3)], -self.p[(1, 2)]],
        }
    }

    pub fn ab_vectors(&self) -> ABVectors {
        let f = self.to_fields();
        let mut a = [C_ZERO; 3];
        let mut b = [C_ZERO; 3];
        for j in 0..3 {
            a[j] = f.e[j] + C_I * f.b[j];
            b[j] = f.e[j] - C_I * f.b[j];
        }
        ABVectors { a, b }
    }

    /// Local unitary action P -> U P U^T.
    pub fn local_unitary(&self, u: &CMatrix) -> Result<Self> {
        if u.rows() != 4 || u.cols() != 4 {
            return Err(Error::ShapeMismatch(u.rows(), u.cols(), 4, 4));
        }
        let defect = u.unitarity_defect();
        if defect >= UNITARITY_TOL {
            return Err(Error::NotUnitary(defect));
        }
        let p = &(u * &self.p) * &u.transpose();
        FermionState::from_matrix(p, false)
    }

    /// The magic (U-) representation P' = U P U^T with the fixed unitary.
    pub fn to_magic(&self) -> CMatrix {
        let u = linalg::magic_u();
        &(&u * &self.p) * &u.transpose()
    }

    /// Current normalization 2 Tr PP\u{2020} (1 up to rounding).
    pub fn norm_value(&self) -> f64 {
        2.0 * (&self.p * &self.p.dagger()).trace().re
    }
}

/// sum_j v_j sigma_j for a complex 3-vector.
pub fn pauli_dot(v: &CVec3) -> CMatrix {
    let mut m = CMatrix::zeros(2, 2);
    for (j, &vj) in v.iter().enumerate() {
        m = &m + &linalg::sigma(j + 1).scale(vj);
    }
    m
}

/// sum_j v_j conj(sigma_j).
pub fn pauli_bar_dot(v: &CVec3) -> CMatrix {
    let mut m = CMatrix::zeros(2, 2);
    for (j, &vj) in v.iter().enumerate() {
        m = &m + &linalg::sigma(j + 1).conj().scale(vj);
    }
    m
}

/// Closed-form magic representation
/// (1/2)(eps x eps)(I x a.sigma + b.conj(sigma) x I); equals `to_magic`.
pub fn magic_closed_form(ab: &ABVectors) -> CMatrix {
    let i2 = CMatrix::identity(2);
    let inner = &kron(&i2, &pauli_dot(&ab.a)) + &kron(&pauli_bar_dot(&ab.b), &i2);
    (&kron(&linalg::eps2(), &linalg::eps2()) * &inner).scale(Complex64::new(0.5, 0.0))
}
