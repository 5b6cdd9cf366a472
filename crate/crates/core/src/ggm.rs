//! Generalized Gell-Mann matrices: the `n^2 - 1` Hermitian traceless
//! generators of SU(n), and the expansion of `|j><k|` in terms of them.
//!
//! Level indices (`j`, `k`, `l`) are 1-based everywhere in the public API.
//!
//! For `n = 2` the basis reproduces the Pauli matrices, with one caveat
//! about naming: the inequality literature this crate follows labels the
//! diagonal Pauli matrix `sigma_1` and the off-diagonal pair `sigma_2`,
//! `sigma_3`. In terms of this basis that is
//!
//! * `sigma_1 = diagonal(1)      = diag(1, -1)`
//! * `sigma_2 = symmetric(1, 2)  = [[0, 1], [1, 0]]`
//! * `sigma_3 = antisymmetric(1, 2) = [[0, -i], [i, 0]]`
//!
//! so that `|1><2| = (sigma_2 + i sigma_3) / 2`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, I, ONE};

/// Which family a generator belongs to, with its 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Symmetric { j: usize, k: usize },
    Antisymmetric { j: usize, k: usize },
    Diagonal { l: usize },
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorKind::Symmetric { j, k } => write!(f, "s:{j},{k}"),
            GeneratorKind::Antisymmetric { j, k } => write!(f, "a:{j},{k}"),
            GeneratorKind::Diagonal { l } => write!(f, "d:{l}"),
        }
    }
}

impl std::str::FromStr for GeneratorKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (tag, rest) = s
            .split_once(':')
            .ok_or_else(|| format!("missing ':' in label `{s}`"))?;
        let nums: Vec<usize> = rest
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("bad index in `{s}`: {e}"))
            })
            .collect::<std::result::Result<_, _>>()?;
        match (tag, nums.as_slice()) {
            ("s", [j, k]) => Ok(GeneratorKind::Symmetric { j: *j, k: *k }),
            ("a", [j, k]) => Ok(GeneratorKind::Antisymmetric { j: *j, k: *k }),
            ("d", [l]) => Ok(GeneratorKind::Diagonal { l: *l }),
            _ => Err(format!("unrecognized generator label `{s}`")),
        }
    }
}

/// The GGM basis of SU(n).
///
/// Enumeration order (used by [`GellMannBasis::iter`] and by coefficient
/// vectors): symmetric generators in lexicographic `(j, k)`, then the
/// antisymmetric ones in the same order, then diagonal `l = 1..n-1`.
#[derive(Clone, Debug)]
pub struct GellMannBasis {
    dim: usize,
    symmetric: Vec<ComplexMatrix>,
    antisymmetric: Vec<ComplexMatrix>,
    diagonal: Vec<ComplexMatrix>,
}

/// Offset of `(j, k)`, `1 <= j < k <= n`, in lexicographic order.
fn pair_offset(n: usize, j: usize, k: usize) -> usize {
    // Pairs starting with 1..j-1 come first.
    (j - 1) * n - (j - 1) * j / 2 + (k - j - 1)
}

impl GellMannBasis {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        let mut symmetric = Vec::with_capacity(n * (n - 1) / 2);
        let mut antisymmetric = Vec::with_capacity(n * (n - 1) / 2);
        for j in 0..n {
            for k in (j + 1)..n {
                let mut s = ComplexMatrix::zeros(n, n);
                s[(j, k)] = ONE;
                s[(k, j)] = ONE;
                symmetric.push(s);

                let mut a = ComplexMatrix::zeros(n, n);
                a[(j, k)] = -I;
                a[(k, j)] = I;
                antisymmetric.push(a);
            }
        }
        let diagonal = (1..n)
            .map(|l| {
                let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
                let mut d = vec![0.0; n];
                for x in d.iter_mut().take(l) {
                    *x = norm;
                }
                d[l] = -(l as f64) * norm;
                ComplexMatrix::diag_real(&d)
            })
            .collect();
        Ok(Self {
            dim: n,
            symmetric,
            antisymmetric,
            diagonal,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `n^2 - 1`.
    pub fn len(&self) -> usize {
        self.dim * self.dim - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn check_pair(&self, j: usize, k: usize) -> Result<()> {
        if j == 0 || k > self.dim || j >= k {
            return Err(Error::LevelOutOfRange { j, k, n: self.dim });
        }
        Ok(())
    }

    pub fn symmetric(&self, j: usize, k: usize) -> Result<&ComplexMatrix> {
        self.check_pair(j, k)?;
        Ok(&self.symmetric[pair_offset(self.dim, j, k)])
    }

    pub fn antisymmetric(&self, j: usize, k: usize) -> Result<&ComplexMatrix> {
        self.check_pair(j, k)?;
        Ok(&self.antisymmetric[pair_offset(self.dim, j, k)])
    }

    pub fn diagonal(&self, l: usize) -> Result<&ComplexMatrix> {
        if l == 0 || l >= self.dim {
            return Err(Error::LevelOutOfRange {
                j: l,
                k: l,
                n: self.dim - 1,
            });
        }
        Ok(&self.diagonal[l - 1])
    }

    pub fn get(&self, kind: GeneratorKind) -> Result<&ComplexMatrix> {
        match kind {
            GeneratorKind::Symmetric { j, k } => self.symmetric(j, k),
            GeneratorKind::Antisymmetric { j, k } => self.antisymmetric(j, k),
            GeneratorKind::Diagonal { l } => self.diagonal(l),
        }
    }

    pub fn kinds(&self) -> Vec<GeneratorKind> {
        let n = self.dim;
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|j| ((j + 1)..=n).map(move |k| (j, k)))
            .collect();
        pairs
            .iter()
            .map(|&(j, k)| GeneratorKind::Symmetric { j, k })
            .chain(
                pairs
                    .iter()
                    .map(|&(j, k)| GeneratorKind::Antisymmetric { j, k }),
            )
            .chain((1..n).map(|l| GeneratorKind::Diagonal { l }))
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (GeneratorKind, &ComplexMatrix)> {
        self.kinds().into_iter().zip(
            self.symmetric
                .iter()
                .chain(&self.antisymmetric)
                .chain(&self.diagonal),
        )
    }

    /// `sum_a coeffs[a] * lambda_a` in enumeration order.
    pub fn combine(&self, coeffs: &[f64]) -> Result<ComplexMatrix> {
        if coeffs.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: coeffs.len(),
            });
        }
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for ((_, g), &x) in self.iter().zip(coeffs) {
            if x != 0.0 {
                out.add_scaled(g, Complex64::new(x, 0.0));
            }
        }
        Ok(out)
    }

    /// Coordinates `Tr(lambda_a h) / 2` of `h` in enumeration order.
    pub fn coefficients(&self, h: &ComplexMatrix) -> Result<Vec<f64>> {
        if h.order() != self.dim || !h.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: h.order(),
            });
        }
        Ok(self
            .iter()
            .map(|(_, g)| 0.5 * g.matmul(h).trace().re)
            .collect())
    }

    /// `|j><j|` assembled from the diagonal generators and the identity:
    ///
    /// `-sqrt((j-1)/(2j)) lambda^{j-1} + sum_{m=0}^{n-j-1} lambda^{j+m} / sqrt(2(j+m)(j+m+1)) + I/n`,
    ///
    /// with the `lambda^{j-1}` term absent at `j = 1`.
    pub fn projector(&self, j: usize) -> Result<ComplexMatrix> {
        let n = self.dim;
        if j == 0 || j > n {
            return Err(Error::LevelOutOfRange { j, k: j, n });
        }
        let mut out = ComplexMatrix::identity(n).scale_real(1.0 / n as f64);
        if j > 1 {
            let coeff = -(((j - 1) as f64) / (2 * j) as f64).sqrt();
            out.add_scaled(self.diagonal(j - 1)?, Complex64::new(coeff, 0.0));
        }
        for l in j..n {
            let coeff = 1.0 / ((2 * l * (l + 1)) as f64).sqrt();
            out.add_scaled(self.diagonal(l)?, Complex64::new(coeff, 0.0));
        }
        Ok(out)
    }

    /// `|j><k|` assembled from generators (1-based `j`, `k`).
    ///
    /// * `j < k`: `(lambda_s^{jk} + i lambda_a^{jk}) / 2`
    /// * `j > k`: `(lambda_s^{kj} - i lambda_a^{kj}) / 2`
    /// * `j = k`: see [`GellMannBasis::projector`].
    pub fn ketbra(&self, j: usize, k: usize) -> Result<ComplexMatrix> {
        let n = self.dim;
        if j == 0 || k == 0 || j > n || k > n {
            return Err(Error::LevelOutOfRange { j, k, n });
        }
        use std::cmp::Ordering;
        match j.cmp(&k) {
            Ordering::Less => {
                let mut out = self.symmetric(j, k)?.scale_real(0.5);
                out.add_scaled(self.antisymmetric(j, k)?, I * 0.5);
                Ok(out)
            }
            Ordering::Greater => {
                let mut out = self.symmetric(k, j)?.scale_real(0.5);
                out.add_scaled(self.antisymmetric(k, j)?, -I * 0.5);
                Ok(out)
            }
            Ordering::Equal => self.projector(j),
        }
    }
}

/// Free-function form of [`GellMannBasis::new`].
pub fn build_basis(n: usize) -> Result<GellMannBasis> {
    GellMannBasis::new(n)
}

/// Free-function form of [`GellMannBasis::ketbra`].
pub fn ketbra_in_ggm(j: usize, k: usize, basis: &GellMannBasis) -> Result<ComplexMatrix> {
    basis.ketbra(j, k)
}
