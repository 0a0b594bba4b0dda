//! Small fixed-size complex linear algebra.
//!
//! Everything here is sized for the 4x4 problems in this crate (n <= 6):
//! a row-major complex matrix, Kronecker products, the fixed constant
//! matrices (Pauli, epsilon, Lorentzian metric, magic unitary, Infeld-van
//! der Waerden symbols), Haar-random unitaries, and a cyclic complex
//! Jacobi eigensolver. The eigensolver is the verification oracle for the
//! closed-form spectrum, so it stays independent of every other module.
//!
//! Randomness is always drawn from an explicit `Rng` value; the seeded
//! entry points use the ChaCha8 counter-based stream cipher
//! (`ChaCha8Rng::seed_from_u64`), so every Monte-Carlo figure quoted in
//! the tests is reproducible from a 64-bit seed.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const C_I: Complex64 = Complex64::new(0.0, 1.0);

/// Convergence threshold for the Jacobi sweep (off-diagonal Frobenius norm).
const JACOBI_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;
/// Eigenvalues closer than this are treated as one degenerate cluster.
const DEGENERACY_GAP: f64 = 1e-8;

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![C_ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C_ONE;
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Complex64>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut m = CMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from nested row slices; panics on ragged input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn from_cols(cols: &[Vec<Complex64>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        CMatrix::from_fn(r, c, |i, j| cols[j][i])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn dagger(&self) -> Self {
        self.transpose().conj()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &CMatrix) -> Result<f64> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn col(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Deviation from unitarity, max |U\u{2020}U - I|.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.rows;
        (&self.dagger() * self)
            .max_abs_diff(&CMatrix::identity(n))
            .expect("square")
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Complex64 {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = C_ONE;
        for k in 0..n {
            let (piv, _) = (k..n)
                .map(|i| (i, a[(i, k)].norm()))
                .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if a[(piv, k)].norm() == 0.0 {
                return C_ZERO;
            }
            if piv != k {
                for j in 0..n {
                    let tmp = a[(k, j)];
                    a[(k, j)] = a[(piv, j)];
                    a[(piv, j)] = tmp;
                }
                det = -det;
            }
            det *= a[(k, k)];
            for i in k + 1..n {
                let f = a[(i, k)] / a[(k, k)];
                for j in k..n {
                    let sub = f * a[(k, j)];
                    a[(i, j)] -= sub;
                }
            }
        }
        det
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C_ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Kronecker product, A-slot major: out[ri*br+rk][rj*bc+rl] = A[ri][rj] B[rk][rl].
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let mut out = CMatrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            for k in 0..b.rows {
                for l in 0..b.cols {
                    out[(i * b.rows + k, j * b.cols + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}

pub fn frobenius_distance(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    if a.rows != b.rows || a.cols != b.cols {
        return Err(Error::ShapeMismatch(a.rows, a.cols, b.rows, b.cols));
    }
    Ok((a - b).frobenius_norm())
}

// ---------------------------------------------------------------------------
// Fixed constants
// ---------------------------------------------------------------------------

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Pauli matrices; `sigma(0)` is the 2x2 identity.
pub fn sigma(j: usize) -> CMatrix {
    match j {
        0 => CMatrix::identity(2),
        1 => CMatrix::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]]),
        2 => CMatrix::from_rows(&[vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]]),
        3 => CMatrix::from_rows(&[vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(-1.0, 0.0)]]),
        _ => panic!("sigma index must be 0..=3"),
    }
}

/// The 2x2 antisymmetric unit, epsilon = i sigma_2 = [[0,1],[-1,0]].
pub fn eps2() -> CMatrix {
    CMatrix::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(-1.0, 0.0), c(0.0, 0.0)]])
}

/// Lorentzian metric diag(1,-1,-1,-1).
pub fn metric() -> CMatrix {
    CMatrix::from_fn(4, 4, |i, j| {
        if i != j {
            C_ZERO
        } else if i == 0 {
            C_ONE
        } else {
            -C_ONE
        }
    })
}

/// The fixed magic-basis unitary.
pub fn magic_u() -> CMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    CMatrix::from_rows(&[
        vec![c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)],
        vec![c(0.0, 0.0), c(h, 0.0), c(0.0, -h), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(h, 0.0), c(0.0, h), c(0.0, 0.0)],
        vec![c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-h, 0.0)],
    ])
}

/// Infeld-van der Waerden symbols: sigma_mu / sqrt(2), mu = 0..=3.
pub fn infeld(mu: usize) -> CMatrix {
    sigma(mu).scale(c(std::f64::consts::FRAC_1_SQRT_2, 0.0))
}

/// Rank-4 alternating symbol with eps(0,1,2,3) = +1; 0 on repeated indices.
pub fn levi_civita4(mu: usize, nu: usize, ka: usize, rho: usize) -> f64 {
    let idx = [mu, nu, ka, rho];
    let mut sign = 1.0;
    for i in 0..4 {
        for j in i + 1..4 {
            if idx[i] == idx[j] {
                return 0.0;
            }
            if idx[i] > idx[j] {
                sign = -sign;
            }
        }
    }
    sign
}

// ---------------------------------------------------------------------------
// Complex 3-vectors
// ---------------------------------------------------------------------------

pub type CVec3 = [Complex64; 3];

/// Unconjugated dot product sum_j u_j v_j.
pub fn dot3(u: &CVec3, v: &CVec3) -> Complex64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub fn cross3(u: &CVec3, v: &CVec3) -> CVec3 {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

pub fn conj3(u: &CVec3) -> CVec3 {
    [u[0].conj(), u[1].conj(), u[2].conj()]
}

pub fn norm_sq3(u: &CVec3) -> f64 {
    u.iter().map(|z| z.norm_sqr()).sum()
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver (cyclic complex Jacobi) -- the oracle
// ---------------------------------------------------------------------------

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

fn off_diag_norm(a: &CMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Each rotation phases the (p,q) block real, then applies the real Jacobi
/// angle that annihilates the off-diagonal entry. Degenerate clusters are
/// re-orthonormalized and phase-fixed so identical input yields identical
/// output.
pub fn hermitian_eigensystem(h: &CMatrix) -> Result<Eigensystem> {
    if !h.is_square() {
        return Err(Error::ShapeMismatch(h.rows(), h.cols(), h.cols(), h.rows()));
    }
    let dev = h.max_abs_diff(&h.dagger())?;
    if dev >= 1e-10 {
        return Err(Error::NotHermitian(dev));
    }
    let n = h.rows();
    // Absorb rounding: work on the Hermitian part.
    let mut a = (h + &h.dagger()).scale(c(0.5, 0.0));
    let mut v = CMatrix::identity(n);

    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diag_norm(&a) < JACOBI_TOL {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let m = apq.norm();
                if m < 1e-300 {
                    continue;
                }
                let beta = apq.arg();
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = 0.5 * (2.0 * m).atan2(app - aqq);
                let (s, co) = theta.sin_cos();
                let e = Complex64::from_polar(1.0, -beta);
                let mut j = CMatrix::identity(n);
                j[(p, p)] = c(co, 0.0);
                j[(p, q)] = c(-s, 0.0);
                j[(q, p)] = e * s;
                j[(q, q)] = e * co;
                a = &j.dagger() * &(&a * &j);
                v = &v * &j;
            }
        }
    }

    // Sort ascending; stable on ties so output is deterministic.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut cols: Vec<Vec<Complex64>> = order.iter().map(|&i| v.col(i)).collect();

    // Within each degenerate cluster: modified Gram-Schmidt, phase fix, and a
    // lexicographic ordering keyed on the components.
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[end] - values[end - 1] < DEGENERACY_GAP {
            end += 1;
        }
        if end - start > 1 {
            for k in start..end {
                for l in start..k {
                    let proj = inner(&cols[l], &cols[k]);
                    let prev = cols[l].clone();
                    for (ck, cl) in cols[k].iter_mut().zip(&prev) {
                        *ck -= proj * cl;
                    }
                }
                normalize(&mut cols[k]);
            }
            for col in cols[start..end].iter_mut() {
                fix_phase(col);
            }
            cols[start..end].sort_by(|u, v| compare_vectors(u, v));
        } else {
            fix_phase(&mut cols[start]);
        }
        start = end;
    }

    Ok(Eigensystem {
        values,
        vectors: CMatrix::from_cols(&cols),
    })
}

/// Hermitian inner product <u, v> = sum conj(u_i) v_i.
pub fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn vec_norm(u: &[Complex64]) -> f64 {
    u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn normalize(u: &mut [Complex64]) {
    let n = vec_norm(u);
    assert!(n > 1e-300, "cannot normalize a zero vector");
    for z in u.iter_mut() {
        *z /= n;
    }
}

/// Rotates the global phase so the largest-modulus component is real positive.
fn fix_phase(u: &mut [Complex64]) {
    let max = u.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if max == 0.0 {
        return;
    }
    let lead = u
        .iter()
        .find(|z| z.norm() > max - 1e-12)
        .copied()
        .expect("max attained");
    let phase = Complex64::from_polar(1.0, -lead.arg());
    for z in u.iter_mut() {
        *z *= phase;
    }
}

fn compare_vectors(u: &[Complex64], v: &[Complex64]) -> std::cmp::Ordering {
    for (a, b) in u.iter().zip(v) {
        let o = a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im));
        if o != std::cmp::Ordering::Equal {
            return o;
        }
    }
    std::cmp::Ordering::Equal
}

// ---------------------------------------------------------------------------
// Haar-random unitaries
// ---------------------------------------------------------------------------

pub fn standard_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-distributed unitary: QR of an i.i.d. complex Gaussian matrix. The
/// modified Gram-Schmidt R factor has a real positive diagonal, which is
/// exactly the phase convention that makes Q Haar.
#[allow(clippy::needless_range_loop)] // cols[k] and cols[j] alias through one Vec
pub fn random_unitary_from<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    assert!(n >= 1);
    let z = CMatrix::from_fn(n, n, |_, _| standard_complex(rng));
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| z.col(j)).collect();
    for j in 0..n {
        // two MGS passes for orthogonality near machine precision
        for _ in 0..2 {
            for k in 0..j {
                let proj = inner(&cols[k], &cols[j]);
                for i in 0..n {
                    let step = proj * cols[k][i];
                    cols[j][i] -= step;
                }
            }
        }
        normalize(&mut cols[j]);
    }
    CMatrix::from_cols(&cols)
}

/// Seeded, deterministic Haar unitary (ChaCha8 keyed by `seed`).
pub fn random_unitary(n: usize, seed: u64) -> CMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_unitary_from(&mut rng, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: &CMatrix, b: &CMatrix, tol: f64) {
        assert!(a.max_abs_diff(b).unwrap() <= tol, "matrices differ by {}", a.max_abs_diff(b).unwrap());
    }

    #[test]
    fn kron_identity() {
        let i2 = CMatrix::identity(2);
        assert_close(&kron(&i2, &i2), &CMatrix::identity(4), 0.0);
    }

    #[test]
    fn kron_eps_eps_equals_ugut() {
        let u = magic_u();
        let lhs = kron(&eps2(), &eps2());
        let rhs = &(&u * &metric()) * &u.transpose();
        assert_close(&lhs, &rhs, 1e-15);
    }

    #[test]
    fn kron_sigma1_sigma1_is_antidiagonal() {
        let k = kron(&sigma(1), &sigma(1));
        for i in 0..4 {
            for j in 0..4 {
                let want = if i + j == 3 { C_ONE } else { C_ZERO };
                assert_eq!(k[(i, j)], want);
            }
        }
    }

    #[test]
    fn kron_mixed_product_rule() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = CMatrix::from_fn(2, 2, |_, _| standard_complex(&mut rng));
            let b = CMatrix::from_fn(2, 2, |_, _| standard_complex(&mut rng));
            let cc = CMatrix::from_fn(2, 2, |_, _| standard_complex(&mut rng));
            let d = CMatrix::from_fn(2, 2, |_, _| standard_complex(&mut rng));
            let lhs = &kron(&a, &b) * &kron(&cc, &d);
            let rhs = kron(&(&a * &cc), &(&b * &d));
            assert_close(&lhs, &rhs, 1e-12);
        }
    }

    #[test]
    fn eps_sigma_eps_conjugates() {
        let e = eps2();
        for j in 1..=3 {
            let lhs = &(&e * &sigma(j)) * &e;
            assert_close(&lhs, &sigma(j).conj(), 0.0);
        }
        assert_close(&(&e * &e), &CMatrix::identity(2).scale(c(-1.0, 0.0)), 0.0);
    }

    #[test]
    fn infeld_symbols_match_pauli_over_sqrt2() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for mu in 0..4 {
            assert_close(&infeld(mu), &sigma(mu).scale(c(h, 0.0)), 0.0);
        }
    }

    #[test]
    fn magic_u_is_unitary() {
        assert!(magic_u().unitarity_defect() < 1e-15);
    }

    #[test]
    fn levi_civita_basics() {
        assert_eq!(levi_civita4(0, 1, 2, 3), 1.0);
        assert_eq!(levi_civita4(1, 0, 2, 3), -1.0);
        assert_eq!(levi_civita4(0, 0, 2, 3), 0.0);
        assert_eq!(levi_civita4(3, 2, 1, 0), 1.0);
    }

    #[test]
    fn eigensystem_identity() {
        let es = hermitian_eigensystem(&CMatrix::identity(4)).unwrap();
        for v in &es.values {
            assert!((v - 1.0).abs() < 1e-14);
        }
        assert!(es.vectors.unitarity_defect() < 1e-12);
    }

    #[test]
    fn eigensystem_sigma1() {
        let es = hermitian_eigensystem(&sigma(1)).unwrap();
        assert!((es.values[0] + 1.0).abs() < 1e-14);
        assert!((es.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eigensystem_rejects_non_hermitian() {
        let m = CMatrix::from_rows(&[vec![C_ZERO, C_ONE], vec![C_ZERO, C_ZERO]]);
        assert!(matches!(hermitian_eigensystem(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn eigensystem_reconstructs_random_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut worst = 0.0f64;
        for _ in 0..1000 {
            let z = CMatrix::from_fn(4, 4, |_, _| standard_complex(&mut rng));
            let h = (&z + &z.dagger()).scale(c(0.5, 0.0));
            let es = hermitian_eigensystem(&h).unwrap();
            let lam = CMatrix::from_fn(4, 4, |i, j| if i == j { c(es.values[i], 0.0) } else { C_ZERO });
            let rec = &(&es.vectors * &lam) * &es.vectors.dagger();
            worst = worst.max(frobenius_distance(&rec, &h).unwrap());
            assert!(es.vectors.unitarity_defect() < 1e-10);
        }
        assert!(worst < 1e-9, "worst reconstruction residual {worst}");
    }

    #[test]
    fn eigensystem_residual_and_determinism() {
        let h = {
            let z = random_unitary(4, 3);
            let d = CMatrix::from_fn(4, 4, |i, j| if i == j { c(i as f64, 0.0) } else { C_ZERO });
            &(&z * &d) * &z.dagger()
        };
        let a = hermitian_eigensystem(&h).unwrap();
        let b = hermitian_eigensystem(&h).unwrap();
        assert_eq!(a.values, b.values);
        assert_eq!(a.vectors, b.vectors);
        for k in 0..4 {
            let v = a.vectors.col(k);
            let hv = h.mul_vec(&v);
            let res: f64 = hv
                .iter()
                .zip(&v)
                .map(|(x, y)| (x - y * a.values[k]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(res < 1e-10);
        }
    }

    #[test]
    fn random_unitary_is_unitary_and_deterministic() {
        let u1 = random_unitary(4, 42);
        let u2 = random_unitary(4, 42);
        assert_eq!(u1, u2);
        assert!(u1.unitarity_defect() < 1e-12);
        assert!((u1.det().norm() - 1.0).abs() < 1e-10);
        let u3 = random_unitary(1, 5);
        assert!((u3[(0, 0)].norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn haar_first_moment() {
        // E |U_00|^2 = 1/n for Haar measure; Monte-Carlo with 10^4 samples.
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        let mut acc = 0.0;
        let samples = 10_000;
        for _ in 0..samples {
            let u = random_unitary_from(&mut rng, 4);
            acc += u[(0, 0)].norm_sqr();
        }
        let mean = acc / samples as f64;
        assert!((mean - 0.25).abs() < 0.01, "mean |U00|^2 = {mean}");
    }

    #[test]
    fn frobenius_distance_cases() {
        let i2 = CMatrix::identity(2);
        assert_eq!(frobenius_distance(&i2, &i2).unwrap(), 0.0);
        assert!((frobenius_distance(&i2, &CMatrix::zeros(2, 2)).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert!((frobenius_distance(&sigma(1), &sigma(3)).unwrap() - 2.0).abs() < 1e-15);
        assert!(matches!(
            frobenius_distance(&i2, &CMatrix::zeros(3, 3)),
            Err(Error::ShapeMismatch(..))
        ));
    }
}
