//! Witness triples `(Y1, Y2, Y3)` and the separability inequality
//! `Y3^2 >= Y1^2 + Y2^2`, plus the partial-transpose oracle used to
//! cross-check it.
//!
//! For levels `j < k` the triple is
//!
//! ```text
//! Y1 = |jk><kj| + |kj><jk|
//! Y2 = |jj><jj| - |kk><kk|
//! Y3 = |jj><jj| + |kk><kk|
//! ```
//!
//! but the builders here assemble it from Gell-Mann generators so that the
//! ket-bra form can serve as an independent check.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ggm::GellMannBasis;
use crate::linalg::{self, tensor, BipartiteShape, ComplexMatrix, I, ONE, ZERO};
use crate::states::DensityMatrix;

/// Default margin a violation must exceed before it certifies entanglement.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Unitarity tolerance for [`LocalUnitaryPair`].
pub const UNITARY_TOL: f64 = 1e-9;

/// Imaginary parts of the `Y` traces above this mean the input was corrupt.
pub const IMAG_RESIDUAL_TOL: f64 = 1e-8;

/// Partial-transpose eigenvalues below `-PPT_TOL` count as negative.
pub const PPT_TOL: f64 = 1e-10;

/// Largest `M * N` for which PPT implies separability.
pub const PPT_SUFFICIENT_MAX_DIM: usize = 6;

/// Level pair `(j, k)`, 1-based, `j < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LevelPair {
    pub j: usize,
    pub k: usize,
}

impl LevelPair {
    /// Valid pairs satisfy `1 <= j < k <= min(M, N)`; both local factors need
    /// levels `j` and `k`.
    pub fn new(j: usize, k: usize, shape: BipartiteShape) -> Result<Self> {
        let max = shape.dim_a().min(shape.dim_b());
        if j == 0 || j >= k || k > max {
            return Err(Error::InvalidLevelPair { j, k, max });
        }
        Ok(Self { j, k })
    }

    /// All valid pairs in lexicographic order.
    pub fn all(shape: BipartiteShape) -> Vec<LevelPair> {
        let max = shape.dim_a().min(shape.dim_b());
        (1..=max)
            .flat_map(|j| ((j + 1)..=max).map(move |k| LevelPair { j, k }))
            .collect()
    }
}

impl fmt::Display for LevelPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.j, self.k)
    }
}

#[derive(Clone, Debug)]
pub struct WitnessTriple {
    pub shape: BipartiteShape,
    pub levels: LevelPair,
    pub y1: ComplexMatrix,
    pub y2: ComplexMatrix,
    pub y3: ComplexMatrix,
}

fn half(m: &ComplexMatrix) -> ComplexMatrix {
    m.scale_real(0.5)
}

fn combo(terms: &[(&ComplexMatrix, Complex64)]) -> ComplexMatrix {
    let n = terms[0].0.order();
    let mut out = ComplexMatrix::zeros(n, n);
    for (m, c) in terms {
        out.add_scaled(m, *c);
    }
    out
}

fn check_basis(basis: &GellMannBasis, n: usize) -> Result<()> {
    if basis.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: basis.dim(),
        });
    }
    Ok(())
}

impl WitnessTriple {
    /// Triple for `2 x d` written out with the Pauli labels
    /// `sigma_1 = diag(1,-1)`, `sigma_2 = lambda_s^{12}`, `sigma_3 = lambda_a^{12}`
    /// on the qubit and the dimension-`d` expansions of `|1><1|`, `|2><2|`,
    /// `|1><2|`, `|2><1|` on the qudit. Levels are `(1, 2)`.
    pub fn build_2xd(d: usize, basis2: &GellMannBasis, basisd: &GellMannBasis) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidDimension(d));
        }
        check_basis(basis2, 2)?;
        check_basis(basisd, d)?;
        let shape = BipartiteShape::new(2, d)?;
        let sigma1 = basis2.diagonal(1)?;
        let sigma2 = basis2.symmetric(1, 2)?;
        let sigma3 = basis2.antisymmetric(1, 2)?;
        let id2 = ComplexMatrix::identity(2);
        let idd = ComplexMatrix::identity(d);

        // Qubit side.
        let a_raise = half(&combo(&[(sigma2, ONE), (sigma3, I)]));
        let a_lower = half(&combo(&[(sigma2, ONE), (sigma3, -I)]));
        let a_p1 = half(&combo(&[(&id2, ONE), (sigma1, ONE)]));
        let a_p2 = half(&combo(&[(&id2, ONE), (sigma1, -ONE)]));

        // Qudit side.
        let ls = basisd.symmetric(1, 2)?;
        let la = basisd.antisymmetric(1, 2)?;
        let b_lower = half(&combo(&[(ls, ONE), (la, -I)]));
        let b_raise = half(&combo(&[(ls, ONE), (la, I)]));
        let mut b_p1 = idd.scale_real(1.0 / d as f64);
        for m in 0..=(d - 2) {
            let c = 1.0 / ((2 * (m + 1) * (m + 2)) as f64).sqrt();
            b_p1.add_scaled(basisd.diagonal(m + 1)?, Complex64::new(c, 0.0));
        }
        let mut b_p2 = idd.scale_real(1.0 / d as f64);
        b_p2.add_scaled(basisd.diagonal(1)?, Complex64::new(-0.5, 0.0));
        // Sum over m = 0..=d-3 is empty for d = 2.
        for m in 0..d.saturating_sub(2) {
            let c = 1.0 / ((2 * (m + 2) * (m + 3)) as f64).sqrt();
            b_p2.add_scaled(basisd.diagonal(m + 2)?, Complex64::new(c, 0.0));
        }

        let y1 = &tensor(&a_raise, &b_lower) + &tensor(&a_lower, &b_raise);
        let t11 = tensor(&a_p1, &b_p1);
        let t22 = tensor(&a_p2, &b_p2);
        Ok(Self {
            shape,
            levels: LevelPair { j: 1, k: 2 },
            y1,
            y2: &t11 - &t22,
            y3: &t11 + &t22,
        })
    }

    /// Triple for general `M x N` at levels `(j, k)`, assembled from the
    /// generator expansions of `|j><k|`, `|k><j|`, `|j><j|` and `|k><k|` on
    /// each side.
    pub fn build_mxn(
        shape: BipartiteShape,
        levels: LevelPair,
        basis_m: &GellMannBasis,
        basis_n: &GellMannBasis,
    ) -> Result<Self> {
        check_basis(basis_m, shape.dim_a())?;
        check_basis(basis_n, shape.dim_b())?;
        let LevelPair { j, k } = LevelPair::new(levels.j, levels.k, shape)?;

        let raise = |b: &GellMannBasis| -> Result<ComplexMatrix> {
            Ok(half(&combo(&[
                (b.symmetric(j, k)?, ONE),
                (b.antisymmetric(j, k)?, I),
            ])))
        };
        let lower = |b: &GellMannBasis| -> Result<ComplexMatrix> {
            Ok(half(&combo(&[
                (b.symmetric(j, k)?, ONE),
                (b.antisymmetric(j, k)?, -I),
            ])))
        };

        let y1 = &tensor(&raise(basis_m)?, &lower(basis_n)?)
            + &tensor(&lower(basis_m)?, &raise(basis_n)?);
        let tjj = tensor(&basis_m.projector(j)?, &basis_n.projector(j)?);
        let tkk = tensor(&basis_m.projector(k)?, &basis_n.projector(k)?);
        Ok(Self {
            shape,
            levels: LevelPair { j, k },
            y1,
            y2: &tjj - &tkk,
            y3: &tjj + &tkk,
        })
    }

    /// The ket-bra form, built directly from basis vectors.
    pub fn from_ket_bras(shape: BipartiteShape, levels: LevelPair) -> Result<Self> {
        let LevelPair { j, k } = LevelPair::new(levels.j, levels.k, shape)?;
        let n = shape.total();
        let ix = |a: usize, b: usize| shape.index(a - 1, b - 1);
        let mut y1 = ComplexMatrix::zeros(n, n);
        y1[(ix(j, k), ix(k, j))] = ONE;
        y1[(ix(k, j), ix(j, k))] = ONE;
        let mut y2 = ComplexMatrix::zeros(n, n);
        y2[(ix(j, j), ix(j, j))] = ONE;
        y2[(ix(k, k), ix(k, k))] = -ONE;
        let mut y3 = ComplexMatrix::zeros(n, n);
        y3[(ix(j, j), ix(j, j))] = ONE;
        y3[(ix(k, k), ix(k, k))] = ONE;
        Ok(Self {
            shape,
            levels: LevelPair { j, k },
            y1,
            y2,
            y3,
        })
    }

    pub fn matrices(&self) -> [&ComplexMatrix; 3] {
        [&self.y1, &self.y2, &self.y3]
    }

    /// Largest entrywise difference across the three operators.
    pub fn max_abs_diff(&self, other: &WitnessTriple) -> f64 {
        self.matrices()
            .iter()
            .zip(other.matrices())
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(0.0, f64::max)
    }

    /// Conjugates every operator by `U (x) V`.
    pub fn rotate(&self, uv: &LocalUnitaryPair) -> Result<WitnessTriple> {
        uv.check_shape(self.shape)?;
        let w = uv.joint();
        Ok(WitnessTriple {
            shape: self.shape,
            levels: self.levels,
            y1: self.y1.conjugate_by(&w),
            y2: self.y2.conjugate_by(&w),
            y3: self.y3.conjugate_by(&w),
        })
    }
}

pub fn build_triple_2xd(
    d: usize,
    basis2: &GellMannBasis,
    basisd: &GellMannBasis,
) -> Result<WitnessTriple> {
    WitnessTriple::build_2xd(d, basis2, basisd)
}

pub fn build_triple_mxn(
    shape: BipartiteShape,
    j: usize,
    k: usize,
    basis_m: &GellMannBasis,
    basis_n: &GellMannBasis,
) -> Result<WitnessTriple> {
    WitnessTriple::build_mxn(shape, LevelPair::new(j, k, shape)?, basis_m, basis_n)
}

pub fn rotate_triple(t: &WitnessTriple, uv: &LocalUnitaryPair) -> Result<WitnessTriple> {
    t.rotate(uv)
}

/// Local unitaries `U` on A and `V` on B.
#[derive(Clone, Debug)]
pub struct LocalUnitaryPair {
    u: ComplexMatrix,
    v: ComplexMatrix,
}

impl LocalUnitaryPair {
    pub fn new(u: ComplexMatrix, v: ComplexMatrix) -> Result<Self> {
        for m in [&u, &v] {
            let defect = m.unitary_defect();
            if defect.is_nan() || defect > UNITARY_TOL {
                return Err(Error::NotUnitary { defect });
            }
        }
        Ok(Self { u, v })
    }

    pub fn identity(shape: BipartiteShape) -> Self {
        Self {
            u: ComplexMatrix::identity(shape.dim_a()),
            v: ComplexMatrix::identity(shape.dim_b()),
        }
    }

    pub fn u(&self) -> &ComplexMatrix {
        &self.u
    }

    pub fn v(&self) -> &ComplexMatrix {
        &self.v
    }

    /// `U (x) V`.
    pub fn joint(&self) -> ComplexMatrix {
        tensor(&self.u, &self.v)
    }

    fn check_shape(&self, shape: BipartiteShape) -> Result<()> {
        if self.u.order() != shape.dim_a() {
            return Err(Error::DimensionMismatch {
                expected: shape.dim_a(),
                found: self.u.order(),
            });
        }
        if self.v.order() != shape.dim_b() {
            return Err(Error::DimensionMismatch {
                expected: shape.dim_b(),
                found: self.v.order(),
            });
        }
        Ok(())
    }
}

/// Expectation values of the rotated triple and the violation
/// `f = Y1^2 + Y2^2 - Y3^2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct YValues {
    pub y1: f64,
    pub y2: f64,
    pub y3: f64,
    pub f: f64,
}

impl YValues {
    pub fn new(y1: f64, y2: f64, y3: f64) -> Self {
        Self {
            y1,
            y2,
            y3,
            f: y1 * y1 + y2 * y2 - y3 * y3,
        }
    }
}

/// `Tr(a b)` without forming the product.
fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    let n = a.order();
    let mut s = ZERO;
    for r in 0..n {
        for c in 0..n {
            s += a[(r, c)] * b[(c, r)];
        }
    }
    s
}

fn real_part_checked(z: Complex64) -> Result<f64> {
    if z.im.abs() > IMAG_RESIDUAL_TOL {
        return Err(Error::ImaginaryResidual(z.im));
    }
    Ok(z.re)
}

/// `Y_i = Tr(rho (U (x) V) Y_i (U (x) V)^dag)`.
pub fn evaluate(rho: &DensityMatrix, t: &WitnessTriple, uv: &LocalUnitaryPair) -> Result<YValues> {
    if rho.shape() != t.shape {
        return Err(Error::DimensionMismatch {
            expected: t.shape.total(),
            found: rho.shape().total(),
        });
    }
    let rotated = t.rotate(uv)?;
    let [y1, y2, y3] = rotated.matrices().map(|y| trace_product(rho.matrix(), y));
    Ok(YValues::new(
        real_part_checked(y1)?,
        real_part_checked(y2)?,
        real_part_checked(y3)?,
    ))
}

/// Same as [`evaluate`] for the ket-bra triple at `levels`, using only the
/// rotated product vectors `U|a> (x) V|b>` instead of full conjugations.
pub fn evaluate_levels(
    rho: &DensityMatrix,
    levels: LevelPair,
    uv: &LocalUnitaryPair,
) -> Result<YValues> {
    let shape = rho.shape();
    uv.check_shape(shape)?;
    let LevelPair { j, k } = LevelPair::new(levels.j, levels.k, shape)?;
    let (uj, uk) = (uv.u.column(j - 1), uv.u.column(k - 1));
    let (vj, vk) = (uv.v.column(j - 1), uv.v.column(k - 1));
    let x_jk = linalg::tensor_vec(&uj, &vk);
    let x_kj = linalg::tensor_vec(&uk, &vj);
    let x_jj = linalg::tensor_vec(&uj, &vj);
    let x_kk = linalg::tensor_vec(&uk, &vk);
    let m = rho.matrix();
    let form = |x: &[Complex64], y: &[Complex64]| -> Complex64 {
        let my = m.matvec(y);
        x.iter().zip(&my).map(|(a, b)| a.conj() * b).sum()
    };
    let y1 = 2.0 * form(&x_jk, &x_kj).re;
    let pjj = real_part_checked(form(&x_jj, &x_jj))?;
    let pkk = real_part_checked(form(&x_kk, &x_kk))?;
    Ok(YValues::new(y1, pjj - pkk, pjj + pkk))
}

/// Outcome of a separability test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    EntangledCertified,
    Separable,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::EntangledCertified => "entangled_certified",
            Verdict::Separable => "separable",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// The inequality only ever certifies entanglement; a non-violation says
/// nothing about separability.
pub fn check_inequality(y: &YValues, tol: f64) -> Verdict {
    if y.f > tol {
        Verdict::EntangledCertified
    } else {
        Verdict::Inconclusive
    }
}

/// Minimum eigenvalue of `rho^{T_B}`.
pub fn ppt_min_eigenvalue(rho: &DensityMatrix) -> Result<f64> {
    let pt = linalg::partial_transpose_b(rho.matrix(), rho.shape())?;
    linalg::min_eigenvalue(&pt)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PptReport {
    pub min_eigenvalue: f64,
    pub verdict: Verdict,
}

/// NPT means entangled; PPT means separable only when `M * N <= 6`.
pub fn ppt_verdict(shape: BipartiteShape, min_eigenvalue: f64) -> Verdict {
    if min_eigenvalue < -PPT_TOL {
        Verdict::EntangledCertified
    } else if shape.total() <= PPT_SUFFICIENT_MAX_DIM {
        Verdict::Separable
    } else {
        Verdict::Inconclusive
    }
}

pub fn ppt_check(rho: &DensityMatrix) -> Result<PptReport> {
    let min_eigenvalue = ppt_min_eigenvalue(rho)?;
    Ok(PptReport {
        min_eigenvalue,
        verdict: ppt_verdict(rho.shape(), min_eigenvalue),
    })
}
