//! Correlation measure eta, reduced density matrix, the magic-frame Lambda
//! matrix, the closed-form spectrum, entropies, geodesic distance, and the
//! generalized Pauli bound.
//!
//! `analyze` always cross-checks the closed-form spectrum against the
//! brute-force Jacobi eigensolver; at 4x4 the oracle is cheap and catches
//! convention bugs immediately.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, cross3, hermitian_eigensystem, kron, CMatrix, C_I};
use crate::state::{pauli_bar_dot, pauli_dot, FermionState};

/// Slack allowed when clamping eta onto [0, 1].
pub const ETA_CLAMP_TOL: f64 = 1e-9;
/// Tolerance for the closed-form vs oracle spectrum cross-check.
pub const ORACLE_TOL: f64 = 1e-9;
/// Default tolerance deciding Slater rank.
pub const RANK_TOL: f64 = 1e-8;

/// Magic-frame data: P' = UPU^T, the real vectors x = -i a x conj(a) and
/// y = i b x conj(b), and the Hermitian Lambda with
/// U rho U\u{2020} = (1/4)(1 + Lambda).
#[derive(Clone, Debug)]
pub struct MagicData {
    pub p_magic: CMatrix,
    pub x: [f64; 3],
    pub y: [f64; 3],
    pub lambda: CMatrix,
}

/// The doubly degenerate density-matrix eigenvalues
/// lambda_pm = (1 +- sqrt(1 - eta^2)) / 4.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spectrum {
    pub lambda_plus: f64,
    pub lambda_minus: f64,
}

/// Aggregate of every scalar characterization of one state.
#[derive(Clone, Debug)]
pub struct EntanglementReport {
    pub eta: f64,
    pub spectrum: Spectrum,
    pub von_neumann: f64,
    pub renyi: BTreeMap<u32, f64>,
    pub geodesic: f64,
    pub slater_rank: u8,
    pub on_quadric: bool,
}

fn clamp_eta(eta: f64) -> Result<f64> {
    if !(-ETA_CLAMP_TOL..=1.0 + ETA_CLAMP_TOL).contains(&eta) {
        return Err(Error::OutOfRange { value: eta, what: "eta" });
    }
    Ok(eta.clamp(0.0, 1.0))
}

/// The correlation measure eta = 8 |P01 P23 - P02 P13 + P03 P12| = 8 |E.B|.
pub fn eta(s: &FermionState) -> Result<f64> {
    let [p01, p02, p03, p23, p13, p12] = s.pluecker();
    clamp_eta(8.0 * (p01 * p23 - p02 * p13 + p03 * p12).norm())
}

/// Reduced one-particle density matrix rho = 2 P P\u{2020}.
pub fn density_matrix(s: &FermionState) -> CMatrix {
    (s.matrix() * &s.matrix().dagger()).scale(Complex64::new(2.0, 0.0))
}

/// Builds Lambda = 2(I x x.conj(sigma) + y.sigma x I + b.sigma x
/// conj(a.sigma) + conj(b).sigma x a.conj(sigma)) and verifies it against
/// U rho U\u{2020} = (1/4)(1 + Lambda).
pub fn lambda_matrix(s: &FermionState) -> Result<MagicData> {
    let ab = s.ab_vectors();
    let xc = cross3(&ab.a, &linalg::conj3(&ab.a));
    let yc = cross3(&ab.b, &linalg::conj3(&ab.b));
    let xv: Vec<Complex64> = xc.iter().map(|z| -C_I * z).collect();
    let yv: Vec<Complex64> = yc.iter().map(|z| C_I * z).collect();
    let im_dev = xv
        .iter()
        .chain(&yv)
        .map(|z| z.im.abs())
        .fold(0.0, f64::max);
    if im_dev >= 1e-12 {
        return Err(Error::ConsistencyFailure(format!(
            "x or y has imaginary part {im_dev:.3e}"
        )));
    }
    let x = [xv[0].re, xv[1].re, xv[2].re];
    let y = [yv[0].re, yv[1].re, yv[2].re];

    let i2 = CMatrix::identity(2);
    let xr: [Complex64; 3] = [xv[0].re.into(), xv[1].re.into(), xv[2].re.into()];
    let yr: [Complex64; 3] = [yv[0].re.into(), yv[1].re.into(), yv[2].re.into()];
    let b_conj = linalg::conj3(&ab.b);
    let lambda = (&(&kron(&i2, &pauli_bar_dot(&xr)) + &kron(&pauli_dot(&yr), &i2))
        + &(&kron(&pauli_dot(&ab.b), &pauli_dot(&ab.a).conj())
            + &kron(&pauli_dot(&b_conj), &pauli_bar_dot(&ab.a))))
        .scale(Complex64::new(2.0, 0.0));

    // internal-logic guard: the defining identity must hold
    let u = linalg::magic_u();
    let lhs = &(&u * &density_matrix(s)) * &u.dagger();
    let rhs = (&CMatrix::identity(4) + &lambda).scale(Complex64::new(0.25, 0.0));
    let dev = lhs.max_abs_diff(&rhs)?;
    if dev >= 1e-10 {
        return Err(Error::ConsistencyFailure(format!(
            "U rho U\u{2020} != (1/4)(1 + Lambda), deviation {dev:.3e}"
        )));
    }

    Ok(MagicData {
        p_magic: s.to_magic(),
        x,
        y,
        lambda,
    })
}

/// lambda_pm = (1 +- sqrt(1 - eta^2)) / 4, each doubly degenerate.
pub fn spectrum_closed_form(eta: f64) -> Result<Spectrum> {
    let eta = clamp_eta(eta)?;
    let r = (1.0 - eta * eta).max(0.0).sqrt();
    Ok(Spectrum {
        lambda_plus: 0.25 * (1.0 + r),
        lambda_minus: 0.25 * (1.0 - r),
    })
}

fn schmidt_weight(eta: f64) -> Result<f64> {
    let eta = clamp_eta(eta)?;
    Ok(0.5 * (1.0 + (1.0 - eta * eta).max(0.0).sqrt()))
}

fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// Von Neumann entropy S1(eta) = 1 - x log2 x - (1-x) log2(1-x) with
/// x = (1 + sqrt(1 - eta^2)) / 2.
pub fn von_neumann(eta: f64) -> Result<f64> {
    let x = schmidt_weight(eta)?;
    Ok(1.0 - xlog2x(x) - xlog2x(1.0 - x))
}

/// Renyi entropy S_alpha(eta) = 1 + log2(x^alpha + (1-x)^alpha) / (1-alpha),
/// integer alpha >= 2.
pub fn renyi(eta: f64, alpha: u32) -> Result<f64> {
    if alpha < 2 {
        return Err(Error::OutOfRange {
            value: alpha as f64,
            what: "renyi alpha (need >= 2)",
        });
    }
    let x = schmidt_weight(eta)?;
    let a = alpha as f64;
    Ok(1.0 + (x.powf(a) + (1.0 - x).powf(a)).log2() / (1.0 - a))
}

/// Geodesic distance to the Klein quadric: cos^2(s/2) = x, i.e.
/// s = arccos(sqrt(1 - eta^2)), in [0, pi/2].
pub fn geodesic_distance(eta: f64) -> Result<f64> {
    let eta = clamp_eta(eta)?;
    let r = (1.0 - eta * eta).max(0.0).sqrt();
    Ok(r.acos())
}

/// Generalized Pauli bound: every eigenvalue of rho in [0, 1/N].
pub fn pauli_check(rho: &CMatrix, n_particles: u32) -> Result<bool> {
    let es = hermitian_eigensystem(rho)?;
    let hi = 1.0 / n_particles as f64 + 1e-10;
    Ok(es.values.iter().all(|&l| l > -1e-10 && l < hi))
}

/// Full scalar report with the mandatory oracle cross-check of the spectrum.
pub fn analyze(s: &FermionState, alphas: &[u32]) -> Result<EntanglementReport> {
    let eta_val = eta(s)?;
    let spectrum = spectrum_closed_form(eta_val)?;

    // oracle: brute-force eigensolve of rho, sorted ascending
    let oracle = hermitian_eigensystem(&density_matrix(s))?;
    let expect = [
        spectrum.lambda_minus,
        spectrum.lambda_minus,
        spectrum.lambda_plus,
        spectrum.lambda_plus,
    ];
    let dev = oracle
        .values
        .iter()
        .zip(&expect)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if dev >= ORACLE_TOL {
        return Err(Error::OracleMismatch(dev));
    }

    let mut renyi_map = BTreeMap::new();
    for &a in alphas {
        renyi_map.insert(a, renyi(eta_val, a)?);
    }
    let rank = crate::decomposition::slater_rank(s, RANK_TOL);
    let on_quadric = crate::geometry::pluecker_residual(s).norm() < 1e-10;

    Ok(EntanglementReport {
        eta: eta_val,
        spectrum,
        von_neumann: von_neumann(eta_val)?,
        renyi: renyi_map,
        geodesic: geodesic_distance(eta_val)?,
        slater_rank: rank,
        on_quadric,
    })
}
