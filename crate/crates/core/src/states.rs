//! Density matrices and the state families used throughout the crate:
//! Werner, the 2x3 isotropic-type mixture, Horodecki's 3x3 family,
//! two-term Schmidt states, and seeded random samplers.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal, Uniform};

use crate::error::{Error, Result};
use crate::ggm::GellMannBasis;
use crate::linalg::{self, hermitian_eigen, BipartiteShape, ComplexMatrix, ONE, ZERO};
use crate::rng::{substream, StreamRng};

pub const DENSITY_HERMITIAN_TOL: f64 = 1e-10;
pub const DENSITY_TRACE_TOL: f64 = 1e-10;
pub const DENSITY_MIN_EIGEN_TOL: f64 = 1e-9;

/// A validated bipartite density matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    shape: BipartiteShape,
    mat: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(shape: BipartiteShape, mat: ComplexMatrix) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::NotSquare {
                rows: mat.rows(),
                cols: mat.cols(),
            });
        }
        if mat.order() != shape.total() {
            return Err(Error::DimensionMismatch {
                expected: shape.total(),
                found: mat.order(),
            });
        }
        if !mat.is_finite() {
            return Err(Error::InvalidDensity("non-finite entry".into()));
        }
        let defect = mat.hermitian_defect();
        if defect > DENSITY_HERMITIAN_TOL {
            return Err(Error::InvalidDensity(format!(
                "not Hermitian (defect {defect:e})"
            )));
        }
        let tr = mat.trace();
        if (tr - ONE).norm() > DENSITY_TRACE_TOL {
            return Err(Error::InvalidDensity(format!(
                "trace {} + {}i is not 1",
                tr.re, tr.im
            )));
        }
        let min = linalg::min_eigenvalue(&mat)?;
        if min < -DENSITY_MIN_EIGEN_TOL {
            return Err(Error::InvalidDensity(format!(
                "negative eigenvalue {min:e}"
            )));
        }
        Ok(Self { shape, mat })
    }

    /// `|psi><psi|` for a (not necessarily normalized) vector.
    pub fn from_pure(shape: BipartiteShape, psi: &[Complex64]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidDensity("zero state vector".into()));
        }
        let unit: Vec<Complex64> = psi.iter().map(|z| z / norm).collect();
        Self::new(shape, ComplexMatrix::outer(&unit, &unit))
    }

    pub fn maximally_mixed(shape: BipartiteShape) -> Self {
        let n = shape.total();
        Self {
            shape,
            mat: ComplexMatrix::identity(n).scale_real(1.0 / n as f64),
        }
    }

    pub fn shape(&self) -> BipartiteShape {
        self.shape
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// `w^dag rho w`, re-validated.
    pub fn conjugated_by_adjoint(&self, w: &ComplexMatrix) -> Result<Self> {
        let m = w.adjoint().matmul(&self.mat).matmul(w);
        Self::new(self.shape, m)
    }
}

/// A convex combination of product pure states, `sum_i p_i |a_i b_i><a_i b_i|`.
#[derive(Clone, Debug)]
pub struct SeparableEnsemble {
    pub weights: Vec<f64>,
    pub factors: Vec<(Vec<Complex64>, Vec<Complex64>)>,
}

impl SeparableEnsemble {
    pub fn assemble(&self, shape: BipartiteShape) -> Result<ComplexMatrix> {
        let mut out = ComplexMatrix::zeros(shape.total(), shape.total());
        for (&p, (a, b)) in self.weights.iter().zip(&self.factors) {
            if a.len() != shape.dim_a() || b.len() != shape.dim_b() {
                return Err(Error::DimensionMismatch {
                    expected: shape.total(),
                    found: a.len() * b.len(),
                });
            }
            let v = linalg::tensor_vec(a, b);
            out.add_scaled(&ComplexMatrix::outer(&v, &v), Complex64::new(p, 0.0));
        }
        Ok(out)
    }
}

fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
    if !(min..=max).contains(&value) {
        return Err(Error::ParameterOutOfRange {
            name,
            value,
            min,
            max,
        });
    }
    Ok(())
}

fn basis_ket(shape: BipartiteShape, i: usize, l: usize) -> Vec<Complex64> {
    let mut v = vec![ZERO; shape.total()];
    v[shape.index(i - 1, l - 1)] = ONE;
    v
}

fn mix_with_identity(pure: &ComplexMatrix, a: f64) -> ComplexMatrix {
    let n = pure.order();
    let mut m = pure.scale_real(a);
    m.add_scaled(
        &ComplexMatrix::identity(n),
        Complex64::new((1.0 - a) / n as f64, 0.0),
    );
    m
}

/// `W(a) = a |Psi-><Psi-| + (1 - a) I/4` with `|Psi-> = (|12> - |21>)/sqrt 2`.
pub fn werner(a: f64) -> Result<DensityMatrix> {
    check_range("a", a, 0.0, 1.0)?;
    let shape = BipartiteShape::new(2, 2)?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let psi: Vec<Complex64> = basis_ket(shape, 1, 2)
        .iter()
        .zip(basis_ket(shape, 2, 1))
        .map(|(x, y)| (x - y) * s)
        .collect();
    DensityMatrix::new(
        shape,
        mix_with_identity(&ComplexMatrix::outer(&psi, &psi), a),
    )
}

/// `a |Psi+><Psi+| + (1 - a) I/6` on 2x3 with `|Psi+> = (|11> + |22>)/sqrt 2`.
pub fn iso23(a: f64) -> Result<DensityMatrix> {
    check_range("a", a, 0.0, 1.0)?;
    let shape = BipartiteShape::new(2, 3)?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let psi: Vec<Complex64> = basis_ket(shape, 1, 1)
        .iter()
        .zip(basis_ket(shape, 2, 2))
        .map(|(x, y)| (x + y) * s)
        .collect();
    DensityMatrix::new(
        shape,
        mix_with_identity(&ComplexMatrix::outer(&psi, &psi), a),
    )
}

/// Horodecki's 3x3 family
/// `sigma_alpha = 2/7 |psi+><psi+| + alpha/7 sigma_+ + (5 - alpha)/7 sigma_-`.
///
/// Separable for `2 <= alpha <= 3`, PPT-entangled for `3 < alpha <= 4`,
/// NPT for `alpha > 4`.
pub fn horodecki33(alpha: f64) -> Result<DensityMatrix> {
    check_range("alpha", alpha, 2.0, 5.0)?;
    let shape = BipartiteShape::new(3, 3)?;
    let s = 1.0 / 3f64.sqrt();
    let psi: Vec<Complex64> = (0..9)
        .map(|x| {
            if x % 4 == 0 {
                Complex64::new(s, 0.0)
            } else {
                ZERO
            }
        })
        .collect();
    let mut m = ComplexMatrix::outer(&psi, &psi).scale_real(2.0 / 7.0);
    let plus = [(1, 2), (2, 3), (3, 1)];
    let minus = [(2, 1), (3, 2), (1, 3)];
    for &(i, l) in &plus {
        let ix = shape.index(i - 1, l - 1);
        m[(ix, ix)] += alpha / 21.0;
    }
    for &(i, l) in &minus {
        let ix = shape.index(i - 1, l - 1);
        m[(ix, ix)] += (5.0 - alpha) / 21.0;
    }
    DensityMatrix::new(shape, m)
}

/// `sin(theta)|11> + cos(theta)|22>` embedded in `shape`.
pub fn schmidt_pure(theta: f64, shape: BipartiteShape) -> Result<DensityMatrix> {
    let mut psi = vec![ZERO; shape.total()];
    psi[shape.index(0, 0)] = Complex64::new(theta.sin(), 0.0);
    psi[shape.index(1, 1)] = Complex64::new(theta.cos(), 0.0);
    DensityMatrix::from_pure(shape, &psi)
}

/// `cos p (|1><1| + |2><2|) + sin p (|1><2| - |2><1|)` on levels 1, 2 of an
/// `n`-level system, identity elsewhere.
pub fn rotation_u(p: f64, n: usize) -> Result<ComplexMatrix> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let mut u = ComplexMatrix::identity(n);
    let (s, c) = p.sin_cos();
    u[(0, 0)] = Complex64::new(c, 0.0);
    u[(1, 1)] = Complex64::new(c, 0.0);
    u[(0, 1)] = Complex64::new(s, 0.0);
    u[(1, 0)] = Complex64::new(-s, 0.0);
    Ok(u)
}

fn gaussian(rng: &mut StreamRng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Normalized complex Gaussian vector of length `n`.
pub fn random_unit_vector(n: usize, rng: &mut StreamRng) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..n).map(|_| gaussian(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// Unitary `exp(i sum_a theta_a lambda_a)` with `theta_a` uniform on `[-pi, pi]`.
pub fn random_unitary_from(basis: &GellMannBasis, rng: &mut StreamRng) -> Result<ComplexMatrix> {
    let dist = Uniform::new_inclusive(-PI, PI).expect("valid range");
    let coeffs: Vec<f64> = (0..basis.len()).map(|_| dist.sample(rng)).collect();
    linalg::unitary_exp(&basis.combine(&coeffs)?)
}

pub fn random_unitary(n: usize, seed: u64) -> Result<ComplexMatrix> {
    let basis = GellMannBasis::new(n)?;
    random_unitary_from(&basis, &mut substream(seed, &[n as u64, 0x5555]))
}

/// `G G^dag / Tr(G G^dag)` with `G` standard complex Gaussian.
pub fn random_density(shape: BipartiteShape, seed: u64) -> Result<DensityMatrix> {
    let mut rng = substream(seed, &[shape.dim_a() as u64, shape.dim_b() as u64, 1]);
    let n = shape.total();
    let g = ComplexMatrix::from_fn(n, n, |_, _| gaussian(&mut rng));
    let gg = g.matmul(&g.adjoint()).hermitian_part();
    let tr = gg.trace().re;
    DensityMatrix::new(shape, gg.scale_real(1.0 / tr))
}

/// Mixture of `terms` random product pure states with Dirichlet(1) weights.
pub fn random_separable(
    shape: BipartiteShape,
    terms: usize,
    seed: u64,
) -> Result<(DensityMatrix, SeparableEnsemble)> {
    if terms == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "terms",
            value: 0.0,
            min: 1.0,
            max: f64::INFINITY,
        });
    }
    let mut rng = substream(seed, &[shape.dim_a() as u64, shape.dim_b() as u64, 2]);
    let raw: Vec<f64> = (0..terms)
        .map(|_| rng.sample::<f64, _>(Exp1) + 1e-300)
        .collect();
    let total: f64 = raw.iter().sum();
    let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
    let factors = (0..terms)
        .map(|_| {
            let a = random_unit_vector(shape.dim_a(), &mut rng);
            let b = random_unit_vector(shape.dim_b(), &mut rng);
            (a, b)
        })
        .collect();
    let ensemble = SeparableEnsemble { weights, factors };
    let rho = DensityMatrix::new(shape, ensemble.assemble(shape)?.hermitian_part())?;
    Ok((rho, ensemble))
}

/// Eigenvalues of a density matrix, ascending.
pub fn spectrum(rho: &DensityMatrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(rho.matrix())?.values)
}
