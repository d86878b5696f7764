//! Fixed-shape 3×3 complex matrices and a Hermitian eigensolver.
//!
//! Everything in this crate is 3×3, so the matrix type is a plain value on the
//! stack and the eigensolver is specialized: eigenvalues come from the analytic
//! (Cardano) solution of the characteristic cubic, eigenvectors from cross
//! products of the rows of `H − λ·1`. Near-degenerate spectra (gap below
//! [`DEGENERACY_GAP`] relative to the matrix scale) lose eigenvector accuracy
//! on the analytic route, so those inputs fall through to a cyclic Jacobi
//! sweep. The two paths are validated against each other in the tests.

use num_complex::Complex64;
use thiserror::Error;

/// Absolute tolerance for accepting a matrix as Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Default absolute tolerance for [`rank_of`]; states have unit trace, so an
/// absolute cutoff is meaningful.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Relative eigenvalue gap below which the Jacobi fallback is used.
pub const DEGENERACY_GAP: f64 = 1e-8;

#[derive(Debug, Error, PartialEq)]
pub enum Herm3Error {
    #[error("matrix is not Hermitian: max |a_ij - conj(a_ji)| = {max_asymmetry:.3e} exceeds {tol:.0e}")]
    NotHermitian { max_asymmetry: f64, tol: f64 },
}

/// A 3×3 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix3 {
    pub entries: [[Complex64; 3]; 3],
}

impl ComplexMatrix3 {
    pub fn new(entries: [[Complex64; 3]; 3]) -> Self {
        Self { entries }
    }

    pub fn zero() -> Self {
        Self::new([[Complex64::ZERO; 3]; 3])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.entries[i][i] = Complex64::ONE;
        }
        m
    }

    /// Builds a matrix from real entries.
    pub fn from_real(rows: [[f64; 3]; 3]) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] = Complex64::new(rows[i][j], 0.0);
            }
        }
        m
    }

    pub fn from_diagonal(d: [f64; 3]) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.entries[i][i] = Complex64::new(d[i], 0.0);
        }
        m
    }

    /// Projector |v⟩⟨v| / ⟨v|v⟩ onto a (not necessarily normalized) ket.
    pub fn projector(ket: &[Complex64; 3]) -> Self {
        let n2: f64 = ket.iter().map(|c| c.norm_sqr()).sum();
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] = ket[i] * ket[j].conj() / n2;
            }
        }
        m
    }

    pub fn diagonal(&self) -> [Complex64; 3] {
        [self.entries[0][0], self.entries[1][1], self.entries[2][2]]
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2]
    }

    pub fn det(&self) -> Complex64 {
        let e = &self.entries;
        e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] = self.entries[j][i].conj();
            }
        }
        m
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entry-wise deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.entries[i][j] - other.entries[i][j]).norm());
            }
        }
        worst
    }

    /// max |a_ij − conj(a_ji)|.
    pub fn hermitian_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.entries[i][j] - self.entries[j][i].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_asymmetry() <= tol
    }

    /// (A + A†)/2; removes round-off asymmetry before numerical work.
    pub fn hermitized(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] = (self.entries[i][j] + self.entries[j][i].conj()) * 0.5;
            }
        }
        m
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut m = *self;
        for row in &mut m.entries {
            for e in row {
                *e *= s;
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Complex64::ZERO;
                for k in 0..3 {
                    acc += self.entries[i][k] * other.entries[k][j];
                }
                m.entries[i][j] = acc;
            }
        }
        m
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64; 3]) -> [Complex64; 3] {
        let mut out = [Complex64::ZERO; 3];
        for i in 0..3 {
            for k in 0..3 {
                out[i] += self.entries[i][k] * v[k];
            }
        }
        out
    }
}

impl std::ops::Add for ComplexMatrix3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] += rhs.entries[i][j];
            }
        }
        m
    }
}

impl std::ops::Sub for ComplexMatrix3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] -= rhs.entries[i][j];
            }
        }
        m
    }
}

impl std::ops::Mul<f64> for ComplexMatrix3 {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

/// Eigendecomposition of a Hermitian matrix; eigenvalues ascending.
///
/// `eigenvectors[i]` is the unit eigenvector for `eigenvalues[i]`, with its
/// first component of magnitude above 1e-8 rotated to be real positive (the
/// phase convention that makes results reproducible and ties stable).
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: [f64; 3],
    pub eigenvectors: [[Complex64; 3]; 3],
}

impl Spectrum {
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[2]
    }

    /// V diag(λ) V†.
    pub fn reconstruct(&self) -> ComplexMatrix3 {
        let mut m = ComplexMatrix3::zero();
        for k in 0..3 {
            let v = &self.eigenvectors[k];
            for i in 0..3 {
                for j in 0..3 {
                    m.entries[i][j] += v[i] * v[j].conj() * self.eigenvalues[k];
                }
            }
        }
        m
    }
}

pub(crate) fn bilinear_dot(a: &[Complex64; 3], b: &[Complex64; 3]) -> Complex64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn conj_dot(a: &[Complex64; 3], b: &[Complex64; 3]) -> Complex64 {
    a[0].conj() * b[0] + a[1].conj() * b[1] + a[2].conj() * b[2]
}

pub(crate) fn vec_norm(a: &[Complex64; 3]) -> f64 {
    a.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Formal (bilinear) cross product; orthogonal to both arguments under the
/// bilinear dot, which is what annihilates rows of a rank-2 matrix.
fn cross(a: &[Complex64; 3], b: &[Complex64; 3]) -> [Complex64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn normalize(v: &mut [Complex64; 3]) {
    let n = vec_norm(v);
    if n > 0.0 {
        for c in v.iter_mut() {
            *c /= n;
        }
    }
}

/// Rotates the vector so its first component above 1e-8 in magnitude is real
/// positive. Unit-norm input guarantees such a component exists.
fn fix_phase(v: &mut [Complex64; 3]) {
    for k in 0..3 {
        let a = v[k].norm();
        if a > 1e-8 {
            let phase = v[k].conj() / a;
            for c in v.iter_mut() {
                *c *= phase;
            }
            return;
        }
    }
}

/// Analytic eigenvalues of a Hermitian matrix, ascending (Cardano).
fn eigenvalues_cardano(h: &ComplexMatrix3) -> [f64; 3] {
    let e = &h.entries;
    let p1 = e[0][1].norm_sqr() + e[0][2].norm_sqr() + e[1][2].norm_sqr();
    let d = [e[0][0].re, e[1][1].re, e[2][2].re];
    if p1 == 0.0 {
        let mut ev = d;
        ev.sort_by(f64::total_cmp);
        return ev;
    }
    let q = (d[0] + d[1] + d[2]) / 3.0;
    let p2 = (d[0] - q).powi(2) + (d[1] - q).powi(2) + (d[2] - q).powi(2) + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    let mut b = *h;
    for i in 0..3 {
        b.entries[i][i] -= Complex64::new(q, 0.0);
    }
    let b = b.scale(1.0 / p);
    let r = (b.det().re / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    let mid = 3.0 * q - hi - lo;
    [lo, mid, hi]
}

/// Eigenvector for a well-separated eigenvalue via row cross products of
/// `H − λ·1`; the largest of the three pairwise cross products is the most
/// numerically reliable null direction.
fn eigenvector_for(h: &ComplexMatrix3, lambda: f64) -> Option<[Complex64; 3]> {
    let mut m = *h;
    for i in 0..3 {
        m.entries[i][i] -= Complex64::new(lambda, 0.0);
    }
    let rows = [m.entries[0], m.entries[1], m.entries[2]];
    let mut best: Option<[Complex64; 3]> = None;
    let mut best_norm = 0.0;
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let c = cross(&rows[i], &rows[j]);
        let n = vec_norm(&c);
        if n > best_norm {
            best_norm = n;
            best = Some(c);
        }
    }
    // The cross norm scales with the product of the two nonzero shifted
    // eigenvalues; vanishing norm means the shifted matrix has rank < 2.
    let scale = h.frobenius_norm().max(1.0);
    if best_norm <= 1e-12 * scale * scale {
        return None;
    }
    let mut v = best?;
    normalize(&mut v);
    Some(v)
}

/// One complex Jacobi rotation zeroing the (p,q) entry, accumulated into `v`.
fn jacobi_rotate(a: &mut ComplexMatrix3, v: &mut ComplexMatrix3, p: usize, q: usize) {
    let apq = a.entries[p][q];
    let abs = apq.norm();
    if abs == 0.0 {
        return;
    }
    let phase = apq / abs;
    let app = a.entries[p][p].re;
    let aqq = a.entries[q][q].re;
    let theta = 0.5 * (2.0 * abs).atan2(app - aqq);
    let (s, c) = theta.sin_cos();
    // J is the identity except J[p][p]=c, J[p][q]=-s·e^{iφ}, J[q][p]=s·e^{-iφ},
    // J[q][q]=c; update A <- J† A J and V <- V J.
    let jpq = -phase * s;
    let jqp = phase.conj() * s;
    for k in 0..3 {
        let akp = a.entries[k][p];
        let akq = a.entries[k][q];
        a.entries[k][p] = akp * c + akq * jqp;
        a.entries[k][q] = akp * jpq + akq * c;
    }
    for k in 0..3 {
        let apk = a.entries[p][k];
        let aqk = a.entries[q][k];
        a.entries[p][k] = apk * c + aqk * jqp.conj();
        a.entries[q][k] = apk * jpq.conj() + aqk * c;
    }
    for k in 0..3 {
        let vkp = v.entries[k][p];
        let vkq = v.entries[k][q];
        v.entries[k][p] = vkp * c + vkq * jqp;
        v.entries[k][q] = vkp * jpq + vkq * c;
    }
}

fn offdiag_norm(a: &ComplexMatrix3) -> f64 {
    (a.entries[0][1].norm_sqr() + a.entries[0][2].norm_sqr() + a.entries[1][2].norm_sqr()).sqrt()
}

/// Full cyclic-Jacobi eigendecomposition; robust near degeneracies.
fn eigh3_jacobi(h: &ComplexMatrix3) -> Spectrum {
    let scale = h.frobenius_norm();
    let mut a = *h;
    let mut v = ComplexMatrix3::identity();
    for _ in 0..60 {
        if offdiag_norm(&a) <= 1e-15 * scale.max(f64::MIN_POSITIVE) {
            break;
        }
        for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
            jacobi_rotate(&mut a, &mut v, p, q);
        }
    }
    let mut pairs: Vec<(f64, [Complex64; 3])> = (0..3)
        .map(|k| {
            (
                a.entries[k][k].re,
                [v.entries[0][k], v.entries[1][k], v.entries[2][k]],
            )
        })
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut spectrum = Spectrum {
        eigenvalues: [pairs[0].0, pairs[1].0, pairs[2].0],
        eigenvectors: [pairs[0].1, pairs[1].1, pairs[2].1],
    };
    for vec in &mut spectrum.eigenvectors {
        normalize(vec);
        fix_phase(vec);
    }
    spectrum
}

/// Gram-Schmidt pass used to polish the analytic eigenvectors.
fn orthonormalize(vs: &mut [[Complex64; 3]; 3]) {
    for i in 0..3 {
        for j in 0..i {
            let proj = conj_dot(&vs[j], &vs[i]);
            for k in 0..3 {
                let correction = vs[j][k] * proj;
                vs[i][k] -= correction;
            }
        }
        normalize(&mut vs[i]);
    }
}

/// Eigendecomposition of a Hermitian 3×3 matrix.
///
/// Eigenvalues are sorted ascending; eigenvectors are orthonormal and
/// phase-fixed, so the result is deterministic for identical input. Returns
/// [`Herm3Error::NotHermitian`] if the input asymmetry exceeds
/// [`HERMITICITY_TOL`].
pub fn eigh3(h: &ComplexMatrix3) -> Result<Spectrum, Herm3Error> {
    let asym = h.hermitian_asymmetry();
    if asym > HERMITICITY_TOL {
        return Err(Herm3Error::NotHermitian {
            max_asymmetry: asym,
            tol: HERMITICITY_TOL,
        });
    }
    let h = h.hermitized();
    let scale = h.frobenius_norm();
    if scale == 0.0 {
        return Ok(Spectrum {
            eigenvalues: [0.0; 3],
            eigenvectors: ComplexMatrix3::identity().entries,
        });
    }
    let ev = eigenvalues_cardano(&h);
    let gap = (ev[1] - ev[0]).min(ev[2] - ev[1]);
    if gap < DEGENERACY_GAP * scale {
        return Ok(eigh3_jacobi(&h));
    }
    let mut vectors = [[Complex64::ZERO; 3]; 3];
    for (k, &lambda) in ev.iter().enumerate() {
        match eigenvector_for(&h, lambda) {
            Some(v) => vectors[k] = v,
            None => return Ok(eigh3_jacobi(&h)),
        }
    }
    orthonormalize(&mut vectors);
    for v in &mut vectors {
        fix_phase(v);
    }
    Ok(Spectrum {
        eigenvalues: ev,
        eigenvectors: vectors,
    })
}

/// Number of eigenvalues with |λ| > tol.
pub fn rank_of(h: &ComplexMatrix3, tol: f64) -> Result<usize, Herm3Error> {
    let spectrum = eigh3(h)?;
    Ok(spectrum
        .eigenvalues
        .iter()
        .filter(|l| l.abs() > tol)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_hermitian(rng: &mut ChaCha8Rng) -> ComplexMatrix3 {
        let mut g = ComplexMatrix3::zero();
        for i in 0..3 {
            for j in 0..3 {
                g.entries[i][j] = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        g.hermitized()
    }

    fn check_spectrum(h: &ComplexMatrix3, s: &Spectrum, tol: f64) {
        let scale = h.frobenius_norm().max(1.0);
        assert!(s.reconstruct().max_abs_diff(h) <= tol * scale);
        for i in 0..3 {
            for j in 0..3 {
                let d = conj_dot(&s.eigenvectors[i], &s.eigenvectors[j]);
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((d - expected).norm() <= 1e-10);
            }
        }
        assert!(s.eigenvalues[0] <= s.eigenvalues[1] && s.eigenvalues[1] <= s.eigenvalues[2]);
    }

    #[test]
    fn diagonal_matrix_eigenvalues() {
        let h = ComplexMatrix3::from_diagonal([0.1, 0.3, 0.6]);
        let s = eigh3(&h).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], 0.1, epsilon = 1e-14);
        assert_abs_diff_eq!(s.eigenvalues[1], 0.3, epsilon = 1e-14);
        assert_abs_diff_eq!(s.eigenvalues[2], 0.6, epsilon = 1e-14);
        check_spectrum(&h, &s, 1e-12);
    }

    #[test]
    fn maximally_mixed_is_fully_degenerate() {
        let h = ComplexMatrix3::identity().scale(1.0 / 3.0);
        let s = eigh3(&h).unwrap();
        for l in s.eigenvalues {
            assert_abs_diff_eq!(l, 1.0 / 3.0, epsilon = 1e-14);
        }
        check_spectrum(&h, &s, 1e-12);
    }

    #[test]
    fn rank_one_projector_spectrum() {
        let k = [Complex64::ONE, Complex64::ONE, Complex64::ONE];
        let h = ComplexMatrix3::projector(&k);
        let s = eigh3(&h).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues[1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues[2], 1.0, epsilon = 1e-12);
        check_spectrum(&h, &s, 1e-10);
    }

    #[test]
    fn frozen_generic_spectrum() {
        // Eigenvalues frozen from an independent solver.
        let h = ComplexMatrix3::new([
            [c(0.5, 0.0), c(0.1, 0.2), c(0.0, 0.0)],
            [c(0.1, -0.2), c(0.3, 0.0), c(0.0, 0.05)],
            [c(0.0, 0.0), c(0.0, -0.05), c(0.2, 0.0)],
        ]);
        let s = eigh3(&h).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], 0.12954617689353978, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues[1], 0.22383526203515988, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues[2], 0.64661856107130034, epsilon = 1e-12);
        check_spectrum(&h, &s, 1e-12);
    }

    #[test]
    fn frozen_degenerate_spectrum() {
        let h = ComplexMatrix3::new([
            [c(2.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)],
            [c(0.0, -1.0), c(2.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(3.0, 0.0)],
        ]);
        let s = eigh3(&h).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues[1], 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues[2], 3.0, epsilon = 1e-12);
        check_spectrum(&h, &s, 1e-10);
    }

    #[test]
    fn non_hermitian_rejected_with_asymmetry() {
        let mut h = ComplexMatrix3::identity();
        h.entries[0][1] = c(0.5, 0.0);
        let err = eigh3(&h).unwrap_err();
        match err {
            Herm3Error::NotHermitian { max_asymmetry, .. } => {
                assert_abs_diff_eq!(max_asymmetry, 0.5, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn rank_examples() {
        let p2 = ComplexMatrix3::from_diagonal([0.0, 0.0, 1.0]);
        assert_eq!(rank_of(&p2, DEFAULT_RANK_TOL).unwrap(), 1);
        let half = ComplexMatrix3::from_diagonal([0.5, 0.5, 0.0]);
        assert_eq!(rank_of(&half, DEFAULT_RANK_TOL).unwrap(), 2);
        let mixed = ComplexMatrix3::identity().scale(1.0 / 3.0);
        assert_eq!(rank_of(&mixed, DEFAULT_RANK_TOL).unwrap(), 3);
    }

    #[test]
    fn reconstruction_and_trace_det_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let h = random_hermitian(&mut rng);
            let s = eigh3(&h).unwrap();
            check_spectrum(&h, &s, 1e-10);
            let tr: f64 = s.eigenvalues.iter().sum();
            assert_abs_diff_eq!(tr, h.trace().re, epsilon = 1e-12 * h.frobenius_norm().max(1.0));
            let det: f64 = s.eigenvalues.iter().product();
            assert_abs_diff_eq!(det, h.det().re, epsilon = 1e-10);
        }
    }

    #[test]
    fn cardano_and_jacobi_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let h = random_hermitian(&mut rng);
            let analytic = eigh3(&h).unwrap();
            let jacobi = eigh3_jacobi(&h.hermitized());
            for k in 0..3 {
                assert_abs_diff_eq!(
                    analytic.eigenvalues[k],
                    jacobi.eigenvalues[k],
                    epsilon = 1e-10
                );
            }
            check_spectrum(&h, &jacobi, 1e-10);
        }
    }

    #[test]
    fn near_degenerate_inputs_stay_accurate() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let eps = 10f64.powf(rng.gen_range(-14.0..-6.0));
            let d = ComplexMatrix3::from_diagonal([0.5 - eps, 0.5 + eps, 0.25]);
            // Conjugate by a fixed non-trivial unitary built from a projector
            // rotation to leave the diagonal basis.
            let mut h = d;
            h.entries[0][2] += c(1e-3, 2e-3);
            h.entries[2][0] += c(1e-3, -2e-3);
            let s = eigh3(&h).unwrap();
            check_spectrum(&h, &s, 1e-9);
        }
    }

    #[test]
    fn deterministic_repeat() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let h = random_hermitian(&mut rng);
        let a = eigh3(&h).unwrap();
        let b = eigh3(&h).unwrap();
        assert_eq!(a.eigenvalues, b.eigenvalues);
        assert_eq!(a.eigenvectors, b.eigenvectors);
    }
}
