//! Slater canonical form with real nonnegative coefficients.
//!
//! The construction pairs eigenvectors of the Hermitian product PP\u{2020}
//! through the antisymmetric map w -> P conj(w): if u is a unit eigenvector
//! of PP\u{2020} with eigenvalue r^2 > 0, then P conj(u) / r is an
//! orthogonal eigenvector of the same eigenvalue, and the pair contributes
//! one 2x2 block with the real coefficient r. Kernel vectors (rank one
//! states) complete the basis with r = 0.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigensystem, inner, magic_u, vec_norm, CMatrix};
use crate::measures::{self, lambda_matrix};
use crate::state::FermionState;

/// Below this density-matrix eigenvalue the small coefficient is set to
/// exactly zero.
const NULL_EIGENVALUE_TOL: f64 = 1e-12;
/// Minimum distance of eta from 1 for the projector construction.
const PROJECTOR_ETA_TOL: f64 = 1e-6;
/// A projected column shorter than this forces the oracle fallback.
const PROJECTED_NORM_TOL: f64 = 1e-8;

/// Result of the real canonical decomposition R = V P V^T with
/// R = blockdiag([[0, r1], [-r1, 0]], [[0, r2], [-r2, 0]]) and r1 >= r2 >= 0.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub v: CMatrix,
    pub r1: f64,
    pub r2: f64,
    pub r: CMatrix,
}

impl CanonicalForm {
    /// Frobenius residual of the reconstruction contract ||V P V^T - R||.
    pub fn residual(&self, s: &FermionState) -> f64 {
        (&(&(&self.v * s.matrix()) * &self.v.transpose()) - &self.r).frobenius_norm()
    }
}

/// Magic-frame rank-two projectors (1/2)(1 +- Lambda / r), r = sqrt(1 - eta^2).
#[derive(Clone, Debug)]
pub struct ProjectorPair {
    pub pi_plus: CMatrix,
    pub pi_minus: CMatrix,
    pub r: f64,
}

/// Which construction produced the density-matrix eigenbasis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenPath {
    /// Projected magic-basis columns per the closed-form construction.
    Projector,
    /// Brute-force Jacobi eigensolve (degenerate fallback).
    Oracle,
}

/// Orthonormal eigenbasis of rho with eigenvalue tags, v0,v1 -> lambda_plus
/// and v2,v3 -> lambda_minus.
#[derive(Clone, Debug)]
pub struct RhoEigenbasis {
    pub vectors: CMatrix,
    pub values: [f64; 4],
    pub path: EigenPath,
}

/// Builds the magic-frame projectors onto the two Lambda eigenspaces.
pub fn projectors(s: &FermionState) -> Result<ProjectorPair> {
    let eta = measures::eta(s)?;
    if eta >= 1.0 - PROJECTOR_ETA_TOL {
        return Err(Error::MaximallyEntangled(eta));
    }
    let r = (1.0 - eta * eta).sqrt();
    let md = lambda_matrix(s)?;
    let scaled = md.lambda.scale(Complex64::new(1.0 / r, 0.0));
    let half = Complex64::new(0.5, 0.0);
    let id = CMatrix::identity(4);
    Ok(ProjectorPair {
        pi_plus: (&id + &scaled).scale(half),
        pi_minus: (&id - &scaled).scale(half),
        r,
    })
}

/// Eigenbasis of rho via projected magic-basis columns, falling back to the
/// oracle eigensolver near eta = 0 or 1 or when a projection degenerates.
pub fn rho_eigenvectors(s: &FermionState) -> Result<RhoEigenbasis> {
    let eta = measures::eta(s)?;
    let spectrum = measures::spectrum_closed_form(eta)?;
    let values = [
        spectrum.lambda_plus,
        spectrum.lambda_plus,
        spectrum.lambda_minus,
        spectrum.lambda_minus,
    ];

    if eta > PROJECTOR_ETA_TOL && eta < 1.0 - PROJECTOR_ETA_TOL {
        if let Some(vectors) = projector_basis(s)? {
            return Ok(RhoEigenbasis {
                vectors,
                values,
                path: EigenPath::Projector,
            });
        }
    }

    // Oracle path: eigensolve rho and order descending so the lambda_plus
    // pair comes first.
    let es = hermitian_eigensystem(&measures::density_matrix(s))?;
    let cols: Vec<Vec<Complex64>> = (0..4).rev().map(|k| es.vectors.col(k)).collect();
    Ok(RhoEigenbasis {
        vectors: CMatrix::from_cols(&cols),
        values,
        path: EigenPath::Oracle,
    })
}

fn projector_basis(s: &FermionState) -> Result<Option<CMatrix>> {
    let pair = projectors(s)?;
    let u = magic_u();
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(4);
    for (proj, src) in [
        (&pair.pi_plus, 0),
        (&pair.pi_plus, 1),
        (&pair.pi_minus, 2),
        (&pair.pi_minus, 3),
    ] {
        // project a magic-basis column, then return to the original frame
        let mut v = u.dagger().mul_vec(&proj.mul_vec(&u.col(src)));
        // orthogonalize inside the current pair
        if src % 2 == 1 {
            let prev = cols.last().expect("pair partner present");
            let ov = inner(prev, &v);
            for (vi, pi) in v.iter_mut().zip(prev) {
                *vi -= ov * pi;
            }
        }
        let n = vec_norm(&v);
        if n < PROJECTED_NORM_TOL {
            return Ok(None);
        }
        for z in v.iter_mut() {
            *z /= n;
        }
        cols.push(v);
    }
    Ok(Some(CMatrix::from_cols(&cols)))
}

/// Real canonical form R = V P V^T by antisymmetric pairing of PP\u{2020}
/// eigenvectors.
pub fn slater_decompose(s: &FermionState) -> CanonicalForm {
    let p = s.matrix();
    let m = p * &p.dagger();
    let es = hermitian_eigensystem(&m).expect("PP\u{2020} is Hermitian by construction");

    // descending: top eigenvalue pair first
    let candidates: Vec<(f64, Vec<Complex64>)> = (0..4)
        .rev()
        .map(|k| (es.values[k].max(0.0), es.vectors.col(k)))
        .collect();

    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(4); // w0, w1, w2, w3
    let mut coeffs: Vec<f64> = Vec::with_capacity(2);
    let mut used = [false; 4];

    while basis.len() < 4 {
        // first unused candidate with a significant component outside span(basis)
        let (idx, mut u_vec) = candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, (_, v))| {
                let mut w = v.clone();
                for b in &basis {
                    let ov = inner(b, &w);
                    for (wi, bi) in w.iter_mut().zip(b) {
                        *wi -= ov * bi;
                    }
                }
                (i, w)
            })
            .find(|(_, w)| vec_norm(w) > 0.5)
            .expect("orthonormal eigenbasis spans the space");
        used[idx] = true;
        let n = vec_norm(&u_vec);
        for z in u_vec.iter_mut() {
            *z /= n;
        }

        let rho_eig = 2.0 * candidates[idx].0; // rho = 2 PP\u{2020}
        if rho_eig < NULL_EIGENVALUE_TOL {
            // kernel pair: r = 0, any orthonormal completion works
            coeffs.push(0.0);
            basis.push(u_vec);
            continue;
        }

        let u_conj: Vec<Complex64> = u_vec.iter().map(|z| z.conj()).collect();
        let mut partner = p.mul_vec(&u_conj);
        let r = vec_norm(&partner);
        for z in partner.iter_mut() {
            *z /= r;
        }
        coeffs.push(r);
        basis.push(partner); // w_{2i}
        basis.push(u_vec); // w_{2i+1}
    }

    // basis holds pairs in descending-coefficient order; pad a lone kernel
    // vector count to full pairs (possible only via the r = 0 branch)
    debug_assert_eq!(basis.len(), 4);
    let (mut r1, mut r2) = match coeffs.len() {
        2 => (coeffs[0], coeffs[1]),
        3 => (coeffs[0], coeffs[1].max(coeffs[2])),
        4 => (coeffs[0].max(coeffs[1]), coeffs[2].max(coeffs[3])),
        _ => unreachable!("two blocks for a 4x4 matrix"),
    };
    // degenerate eigenvalues can surface the smaller partner norm first
    if r2 > r1 {
        std::mem::swap(&mut r1, &mut r2);
        basis.rotate_left(2);
    }

    let w = CMatrix::from_cols(&basis);
    let v = w.dagger();
    let mut r_mat = CMatrix::zeros(4, 4);
    r_mat[(0, 1)] = Complex64::new(r1, 0.0);
    r_mat[(1, 0)] = Complex64::new(-r1, 0.0);
    r_mat[(2, 3)] = Complex64::new(r2, 0.0);
    r_mat[(3, 2)] = Complex64::new(-r2, 0.0);

    CanonicalForm { v, r1, r2, r: r_mat }
}

/// Slater rank: 1 iff the small canonical coefficient vanishes within `tol`.
pub fn slater_rank(s: &FermionState, tol: f64) -> u8 {
    assert!(tol > 0.0);
    if slater_decompose(s).r2 < tol {
        1
    } else {
        2
    }
}
