//! Dualization, metric index raising, the invariant trace formula for eta,
//! the Wootters spin flip, the maximal-entanglement phase, and the
//! Pluecker / Klein-quadric separability machinery.
//!
//! Sign conventions live here and only here: eps_0123 = +1, the metric is
//! diag(1,-1,-1,-1), and raising always goes through `raise_indices`.

use num_complex::Complex64;

use crate::linalg::{self, dot3, kron, CMatrix, CVec3, C_I, C_ZERO};
use crate::state::{pauli_bar_dot, pauli_dot, FermionState};

/// The Klein-quadric coordinates (z0..z5) = (a1, a2, a3, i b1, i b2, i b3).
#[derive(Clone, Debug)]
pub struct QuadricCoords {
    pub z: [Complex64; 6],
}

/// sum z_j^2 = a.a - b.b; proportional to the Pluecker residual by the
/// fixed factor -4i (verified by `quadric_constant` below).
impl QuadricCoords {
    pub fn sum_sq(&self) -> Complex64 {
        self.z.iter().map(|z| z * z).sum()
    }

    pub fn on_quadric(&self, tol: f64) -> bool {
        self.sum_sq().norm() < tol
    }
}

/// Derived symbolically: sum z_j^2 = (a.a - b.b) = 4i (E.B)
/// = -4i (P01 P23 - P02 P13 + P03 P12).
pub const QUADRIC_RESIDUAL_FACTOR: Complex64 = Complex64::new(0.0, -4.0);

/// Self-dual / anti-self-dual split: symmetric 2x2 spinors with
/// P' = kron(eps, psi) + kron(phi, eps).
#[derive(Clone, Debug)]
pub struct SpinorForm {
    pub psi: CMatrix,
    pub phi: CMatrix,
}

impl SpinorForm {
    /// Reassembles the magic-frame matrix from the two spinors.
    pub fn reconstruct(&self) -> CMatrix {
        &kron(&linalg::eps2(), &self.psi) + &kron(&self.phi, &linalg::eps2())
    }
}

/// Both indices raised: g P g.
pub fn raise_indices(p: &CMatrix) -> CMatrix {
    let g = linalg::metric();
    &(&g * p) * &g
}

/// Hodge dual *P_mn = (1/2) eps_mnkr P^kr with indices raised by the metric.
pub fn dual_matrix(p: &CMatrix) -> CMatrix {
    let raised = raise_indices(p);
    CMatrix::from_fn(4, 4, |mu, nu| {
        let mut acc = C_ZERO;
        for ka in 0..4 {
            for rho in 0..4 {
                let sign = linalg::levi_civita4(mu, nu, ka, rho);
                if sign != 0.0 {
                    acc += raised[(ka, rho)] * Complex64::new(0.5 * sign, 0.0);
                }
            }
        }
        acc
    })
}

pub fn dual(s: &FermionState) -> CMatrix {
    dual_matrix(s.matrix())
}

/// eta through the invariant contraction 2 |Tr(*P g P g)|; an independent
/// computation path from the Pluecker product formula.
pub fn eta_invariant(s: &FermionState) -> f64 {
    let t = (&dual(s) * &raise_indices(s.matrix())).trace();
    2.0 * t.norm()
}

/// Wootters spin flip in the magic frame:
/// (sigma2 x sigma2) conj(P) (sigma2 x sigma2).
pub fn spin_flip(p_magic: &CMatrix) -> CMatrix {
    let s22 = kron(&linalg::sigma(2), &linalg::sigma(2));
    &(&s22 * &p_magic.conj()) * &s22
}

/// Outcome of the maximal-entanglement phase extraction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MaximalPhase {
    /// E = e^{i theta} conj(B) holds within tolerance; eta = 1 up to O(tol).
    Phase(f64),
    /// The best phase still misses; the state is not maximally entangled.
    NotMaximal,
    /// B (or the E-B overlap) vanishes; the condition is undecidable.
    Indeterminate,
}

/// Least-squares phase for E = e^{i theta} conj(B): theta = arg(sum E_j B_j).
pub fn maximal_phase(s: &FermionState, tol: f64) -> MaximalPhase {
    let f = s.to_fields();
    let overlap = dot3(&f.e, &f.b);
    if linalg::norm_sq3(&f.b) == 0.0 || overlap.norm() < 1e-14 {
        return MaximalPhase::Indeterminate;
    }
    let theta = overlap.arg().rem_euclid(std::f64::consts::TAU);
    let phase = Complex64::from_polar(1.0, theta);
    let miss: f64 = f
        .e
        .iter()
        .zip(&f.b)
        .map(|(e, b)| (e - phase * b.conj()).norm_sqr())
        .sum::<f64>()
        .sqrt();
    if miss < tol {
        MaximalPhase::Phase(theta)
    } else {
        MaximalPhase::NotMaximal
    }
}

/// The complex Pluecker residual P01 P23 - P02 P13 + P03 P12; its modulus
/// is eta / 8 and it vanishes exactly on separable bivectors.
pub fn pluecker_residual(s: &FermionState) -> Complex64 {
    let [p01, p02, p03, p23, p13, p12] = s.pluecker();
    p01 * p23 - p02 * p13 + p03 * p12
}

pub fn quadric_coords(s: &FermionState) -> QuadricCoords {
    let ab = s.ab_vectors();
    QuadricCoords {
        z: [
            ab.a[0],
            ab.a[1],
            ab.a[2],
            C_I * ab.b[0],
            C_I * ab.b[1],
            C_I * ab.b[2],
        ],
    }
}

/// Splits the magic representation into the self-dual spinor
/// psi = (1/2) eps (a.sigma) and the anti-self-dual phi = (1/2) eps
/// (b.conj(sigma)).
pub fn selfdual_split(s: &FermionState) -> SpinorForm {
    let ab = s.ab_vectors();
    let half = Complex64::new(0.5, 0.0);
    SpinorForm {
        psi: (&linalg::eps2() * &pauli_dot(&ab.a)).scale(half),
        phi: (&linalg::eps2() * &pauli_bar_dot(&ab.b)).scale(half),
    }
}

/// Infeld-van der Waerden conversion of a 4-vector into the spinor
/// components (a_00', a_01', a_10', a_11'); identical to multiplication by
/// the magic unitary.
pub fn vector_to_spinor(a: &[Complex64; 4]) -> [Complex64; 4] {
    let mut out = [C_ZERO; 4];
    for (mu, &amp) in a.iter().enumerate() {
        let sym = linalg::infeld(mu);
        for aa in 0..2 {
            for bb in 0..2 {
                out[2 * aa + bb] += sym[(aa, bb)] * amp;
            }
        }
    }
    out
}

/// Fields transported through the dual: a -> i a, b -> -i b.
pub fn dual_ab(ab: &crate::state::ABVectors) -> (CVec3, CVec3) {
    (
        [C_I * ab.a[0], C_I * ab.a[1], C_I * ab.a[2]],
        [-C_I * ab.b[0], -C_I * ab.b[1], -C_I * ab.b[2]],
    )
}
