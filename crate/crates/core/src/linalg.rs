//! Dense complex matrices and the handful of spectral routines the rest of
//! the crate relies on.
//!
//! Matrices here are tiny (order at most a few dozen), so everything is a
//! plain row-major `Vec<Complex64>` and the eigensolver is a cyclic Jacobi
//! iteration rather than anything cleverer.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on `max |h - h^dag|` for inputs that must be Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Jacobi stops once the off-diagonal Frobenius norm drops below this
/// fraction of the full norm.
pub const JACOBI_OFF_DIAG_TOL: f64 = 1e-12;

/// Sweep cap for the Jacobi eigensolver.
pub const JACOBI_MAX_SWEEPS: usize = 100;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row-major data.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        Self::from_fn(n, m, |r, c| Complex64::new(rows[r][c], 0.0))
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |r, c| {
            if r == c {
                Complex64::new(values[r], 0.0)
            } else {
                ZERO
            }
        })
    }

    /// Elementary matrix `|r><c|` of order `n` (0-based offsets).
    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(r, c)] = ONE;
        m
    }

    /// `|v><w|`.
    pub fn outer(v: &[Complex64], w: &[Complex64]) -> Self {
        Self::from_fn(v.len(), w.len(), |r, c| v[r] * w[c].conj())
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

    /// Order of a square matrix.
    pub fn order(&self) -> usize {
        self.rows
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, other: &ComplexMatrix, s: Complex64) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b * s;
        }
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, other.rows, "matmul inner dimension");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == ZERO {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(orow) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `w * self * w^dag`.
    pub fn conjugate_by(&self, w: &ComplexMatrix) -> ComplexMatrix {
        w.matmul(self).matmul(&w.adjoint())
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `max |h - h^dag|` over entries; infinite for non-square input.
    pub fn hermitian_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut worst = 0.0_f64;
        for r in 0..n {
            for c in r..n {
                worst = worst.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() <= tol
    }

    /// `max |u u^dag - I|` over entries.
    pub fn unitary_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.matmul(&self.adjoint())
            .max_abs_diff(&Self::identity(self.rows))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitary_defect() <= tol
    }

    /// `(h + h^dag) / 2`.
    pub fn hermitian_part(&self) -> ComplexMatrix {
        Self::from_fn(self.rows, self.cols, |r, c| {
            (self[(r, c)] + self[(c, r)].conj()) * 0.5
        })
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let mut out = self.clone();
        out.add_scaled(rhs, ONE);
        out
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let mut out = self.clone();
        out.add_scaled(rhs, -ONE);
        out
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for z in self.row(r) {
                write!(f, "{:>9.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Dimensions `(M, N)` of a bipartite system `A (x) B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BipartiteShape {
    dim_a: usize,
    dim_b: usize,
}

impl BipartiteShape {
    pub fn new(dim_a: usize, dim_b: usize) -> Result<Self> {
        if dim_a < 2 || dim_b < 2 {
            return Err(Error::InvalidShape { dim_a, dim_b });
        }
        Ok(Self { dim_a, dim_b })
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn total(&self) -> usize {
        self.dim_a * self.dim_b
    }

    /// Flattened offset of `|i>_A (x) |l>_B` for 0-based `i`, `l`.
    pub fn index(&self, i: usize, l: usize) -> usize {
        i * self.dim_b + l
    }

    fn check(&self, m: &ComplexMatrix) -> Result<()> {
        m.require_square()?;
        if m.order() != self.total() {
            return Err(Error::DimensionMismatch {
                expected: self.total(),
                found: m.order(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for BipartiteShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.dim_a, self.dim_b)
    }
}

/// Kronecker product with system `a` as the major index.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (br, bc) = (b.rows(), b.cols());
    ComplexMatrix::from_fn(a.rows() * br, a.cols() * bc, |r, c| {
        a[(r / br, c / bc)] * b[(r % br, c % bc)]
    })
}

/// Kronecker product of two vectors, A-major.
pub fn tensor_vec(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

/// Transposes the B factor: `((i,l),(i',l')) -> ((i,l'),(i',l))`.
pub fn partial_transpose_b(rho: &ComplexMatrix, shape: BipartiteShape) -> Result<ComplexMatrix> {
    shape.check(rho)?;
    let nb = shape.dim_b();
    Ok(ComplexMatrix::from_fn(rho.rows(), rho.cols(), |r, c| {
        let (i, l) = (r / nb, r % nb);
        let (ip, lp) = (c / nb, c % nb);
        rho[(shape.index(i, lp), shape.index(ip, l))]
    }))
}

/// Eigendecomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Column `i` is the eigenvector for `values[i]`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = ComplexMatrix::diag_real(&self.values);
        self.vectors.matmul(&d).matmul(&self.vectors.adjoint())
    }
}

fn require_hermitian(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    h.require_square()?;
    let defect = h.hermitian_defect();
    if defect.is_nan() || defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian { defect });
    }
    Ok(h.hermitian_part())
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.order();
    let mut s = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s += a[(r, c)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// Each rotation first removes the phase of `a[p][q]` and then applies a
/// real Givens rotation, so `R = diag(1, e^{-i phi}) * [[c, s], [-s, c]]`
/// on the `(p, q)` plane.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<HermitianEigen> {
    let mut a = require_hermitian(h)?;
    let n = a.order();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    if scale > 0.0 {
        let mut converged = false;
        for _ in 0..JACOBI_MAX_SWEEPS {
            if off_diagonal_norm(&a) <= JACOBI_OFF_DIAG_TOL * scale {
                converged = true;
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    jacobi_rotate(&mut a, &mut v, p, q);
                }
            }
        }
        if !converged && off_diagonal_norm(&a) > JACOBI_OFF_DIAG_TOL * scale {
            return Err(Error::NoConvergence {
                sweeps: JACOBI_MAX_SWEEPS,
            });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(x, x)].re.total_cmp(&a[(y, y)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = apq / r;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // R restricted to the (p, q) plane.
    let rpp = Complex64::new(c, 0.0);
    let rpq = Complex64::new(s, 0.0);
    let rqp = -phase.conj() * s;
    let rqq = phase.conj() * c;

    let n = a.order();
    // a <- a R
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * rpp + akq * rqp;
        a[(k, q)] = akp * rpq + akq * rqq;
    }
    // a <- R^dag a
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = rpp.conj() * apk + rqp.conj() * aqk;
        a[(q, k)] = rpq.conj() * apk + rqq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
    // v <- v R
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * rpp + vkq * rqp;
        v[(k, q)] = vkp * rpq + vkq * rqq;
    }
}

pub fn min_eigenvalue(h: &ComplexMatrix) -> Result<f64> {
    let eig = hermitian_eigen(h)?;
    Ok(eig.values.first().copied().unwrap_or(0.0))
}

/// `exp(i h)` for Hermitian `h`.
pub fn unitary_exp(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(h)?;
    let phases: Vec<Complex64> = eig
        .values
        .iter()
        .map(|&x| Complex64::from_polar(1.0, x))
        .collect();
    let n = h.order();
    let vecs = &eig.vectors;
    Ok(ComplexMatrix::from_fn(n, n, |r, c| {
        (0..n)
            .map(|m| vecs[(r, m)] * phases[m] * vecs[(c, m)].conj())
            .sum()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
    }

    fn sigma_y() -> ComplexMatrix {
        ComplexMatrix::from_vec(2, 2, vec![ZERO, -I, I, ZERO]).unwrap()
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::diag_real(&[1.0, -1.0])
    }

    fn hermitian_from(n: usize, parts: &[f64]) -> ComplexMatrix {
        let g = ComplexMatrix::from_fn(n, n, |r, col| {
            c(parts[2 * (r * n + col)], parts[2 * (r * n + col) + 1])
        });
        g.hermitian_part()
    }

    fn singlet() -> ComplexMatrix {
        let s = 1.0 / 2f64.sqrt();
        let psi = vec![ZERO, c(s, 0.0), c(-s, 0.0), ZERO];
        ComplexMatrix::outer(&psi, &psi)
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let out = tensor(&ComplexMatrix::identity(2), &ComplexMatrix::identity(2));
        assert_eq!(out, ComplexMatrix::identity(4));
    }

    #[test]
    fn tensor_sigma_z_identity() {
        let out = tensor(&sigma_z(), &ComplexMatrix::identity(2));
        assert_eq!(out, ComplexMatrix::diag_real(&[1.0, 1.0, -1.0, -1.0]));
    }

    #[test]
    fn tensor_of_ketbras_places_single_entry() {
        // |1><2| (x) |2><1| = |12><21|; |12> -> 0*2+1 = 1, |21> -> 1*2+0 = 2.
        let out = tensor(&ComplexMatrix::unit(2, 0, 1), &ComplexMatrix::unit(2, 1, 0));
        for r in 0..4 {
            for col in 0..4 {
                let want = if (r, col) == (1, 2) { ONE } else { ZERO };
                assert_eq!(out[(r, col)], want);
            }
        }
    }

    #[test]
    fn partial_transpose_identity_and_shape_errors() {
        let shape = BipartiteShape::new(2, 2).unwrap();
        let id = ComplexMatrix::identity(4);
        assert_eq!(partial_transpose_b(&id, shape).unwrap(), id);
        let wrong = ComplexMatrix::identity(6);
        assert!(matches!(
            partial_transpose_b(&wrong, shape),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(BipartiteShape::new(1, 3).is_err());
    }

    #[test]
    fn singlet_partial_transpose_has_negative_half() {
        let shape = BipartiteShape::new(2, 2).unwrap();
        let pt = partial_transpose_b(&singlet(), shape).unwrap();
        let eig = hermitian_eigen(&pt).unwrap();
        assert!((eig.values[0] + 0.5).abs() < 1e-12);
        assert!((eig.values[3] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn werner_one_partial_transpose_min_eigenvalue() {
        // W(1) is the singlet; (1 - 3a)/4 at a = 1.
        let shape = BipartiteShape::new(2, 2).unwrap();
        let pt = partial_transpose_b(&singlet(), shape).unwrap();
        assert!((min_eigenvalue(&pt).unwrap() - (1.0 - 3.0) / 4.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_and_pauli_spectra() {
        let eig = hermitian_eigen(&ComplexMatrix::diag_real(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(eig.values, vec![1.0, 2.0, 3.0]);
        let eig = hermitian_eigen(&sigma_x()).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-14);
        assert!((eig.values[1] - 1.0).abs() < 1e-14);
        let eig = hermitian_eigen(&sigma_y()).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn eigen_rejects_non_hermitian() {
        let m = ComplexMatrix::unit(2, 0, 1);
        assert!(matches!(
            hermitian_eigen(&m),
            Err(Error::NotHermitian { .. })
        ));
        let rect = ComplexMatrix::zeros(2, 3);
        assert!(matches!(
            hermitian_eigen(&rect),
            Err(Error::NotSquare { .. })
        ));
        assert!(unitary_exp(&m).is_err());
    }

    #[test]
    fn eigen_of_zero_matrix() {
        let eig = hermitian_eigen(&ComplexMatrix::zeros(3, 3)).unwrap();
        assert_eq!(eig.values, vec![0.0; 3]);
        assert_eq!(eig.vectors, ComplexMatrix::identity(3));
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let u = unitary_exp(&ComplexMatrix::zeros(3, 3)).unwrap();
        assert!(u.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-15);
    }

    #[test]
    fn exp_of_sigma_y_quarter_turn() {
        // exp(i p sigma_y) = cos p I + i sin p sigma_y = [[cos p, sin p], [-sin p, cos p]].
        let u = unitary_exp(&sigma_y().scale_real(PI / 2.0)).unwrap();
        assert!(u[(0, 0)].norm() < 1e-12);
        let want = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[-1.0, 0.0]]);
        assert!(u.max_abs_diff(&want) < 1e-12);
    }

    #[test]
    fn exp_of_pi_sigma_z_is_minus_identity() {
        let u = unitary_exp(&sigma_z().scale_real(PI)).unwrap();
        assert!(u.max_abs_diff(&ComplexMatrix::identity(2).scale_real(-1.0)) < 1e-12);
    }

    #[test]
    fn eigen_handles_degenerate_complex_input() {
        // Projector plus a complex-phase rank-one piece, repeated eigenvalues.
        let v = vec![c(0.5, 0.5), c(0.0, -0.5), c(0.5, 0.0)];
        let p = ComplexMatrix::outer(&v, &v);
        let h = &ComplexMatrix::identity(3) + &p;
        let eig = hermitian_eigen(&h).unwrap();
        assert!(eig.reconstruct().max_abs_diff(&h) < 1e-12);
        assert!((eig.values[0] - 1.0).abs() < 1e-12);
        assert!((eig.values[1] - 1.0).abs() < 1e-12);
    }

    fn parts(n: usize) -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(-2.0..2.0f64, 2 * n * n)
    }

    fn int_parts(n: usize) -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec((-8i32..8).prop_map(f64::from), 2 * n * n)
    }

    proptest! {
        #[test]
        fn tensor_trace_multiplies(a in parts(2), b in parts(3)) {
            let a = hermitian_from(2, &a);
            let b = hermitian_from(3, &b);
            let t = tensor(&a, &b).trace();
            prop_assert!((t - a.trace() * b.trace()).norm() < 1e-12);
        }

        #[test]
        fn tensor_is_associative(a in int_parts(2), b in int_parts(2), c3 in int_parts(3)) {
            // Integer entries keep every product exact, so equality is bitwise.
            let (a, b, c3) = (hermitian_from(2, &a), hermitian_from(2, &b), hermitian_from(3, &c3));
            let left = tensor(&tensor(&a, &b), &c3);
            let right = tensor(&a, &tensor(&b, &c3));
            prop_assert!(left.max_abs_diff(&right) == 0.0);
        }

        #[test]
        fn partial_transpose_involution_and_trace(p in parts(6)) {
            let h = hermitian_from(6, &p);
            let shape = BipartiteShape::new(2, 3).unwrap();
            let once = partial_transpose_b(&h, shape).unwrap();
            let twice = partial_transpose_b(&once, shape).unwrap();
            prop_assert_eq!(&twice, &h);
            prop_assert_eq!(once.trace(), h.trace());
            prop_assert!(once.hermitian_defect() == 0.0);
        }

        #[test]
        fn eigen_reconstructs((n, p) in (2usize..=6).prop_flat_map(|n| (Just(n), parts(n)))) {
            let h = hermitian_from(n, &p);
            let eig = hermitian_eigen(&h).unwrap();
            let norm = h.frobenius_norm().max(1.0);
            prop_assert!(eig.reconstruct().max_abs_diff(&h) < 1e-9 * norm);
            prop_assert!(eig.vectors.is_unitary(1e-9));
            prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
            for (i, &e) in eig.values.iter().enumerate() {
                let v = eig.vectors.column(i);
                let hv = h.matvec(&v);
                let resid = hv.iter().zip(&v).map(|(a, b)| (a - b * e).norm()).fold(0.0, f64::max);
                prop_assert!(resid < 1e-9 * norm);
            }
        }

        #[test]
        fn exp_is_unitary((n, p) in (2usize..=6).prop_flat_map(|n| (Just(n), parts(n)))) {
            let h = hermitian_from(n, &p);
            let u = unitary_exp(&h).unwrap();
            prop_assert!(u.is_unitary(1e-9));
        }
    }
}
