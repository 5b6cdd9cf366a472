//! Maximizing the inequality violation over local unitaries.
//!
//! Local unitaries are parameterized through the Gell-Mann exponential map,
//! `U = exp(i sum_a theta_a lambda_a)`, which reaches all of SU(n); global
//! phases drop out of the conjugation so nothing is lost. For every level
//! pair the search runs a Nelder-Mead ascent from `theta = 0` and from
//! `restarts` seeded random points, and keeps the best violation found.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::Uniform;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ggm::GellMannBasis;
use crate::linalg::{unitary_exp, BipartiteShape, ComplexMatrix};
use crate::rng::substream;
use crate::states::{self, DensityMatrix};
use crate::witness::{
    self, check_inequality, evaluate_levels, ppt_check, LevelPair, LocalUnitaryPair, Verdict,
    WitnessTriple, YValues, DEFAULT_TOL,
};

/// Generator coefficients for `U` (length `M^2 - 1`) and `V` (length `N^2 - 1`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitaryParams {
    pub theta_a: Vec<f64>,
    pub theta_b: Vec<f64>,
}

impl UnitaryParams {
    pub fn zeros(shape: BipartiteShape) -> Self {
        Self {
            theta_a: vec![0.0; shape.dim_a() * shape.dim_a() - 1],
            theta_b: vec![0.0; shape.dim_b() * shape.dim_b() - 1],
        }
    }

    pub fn from_flat(shape: BipartiteShape, flat: &[f64]) -> Result<Self> {
        let na = shape.dim_a() * shape.dim_a() - 1;
        let nb = shape.dim_b() * shape.dim_b() - 1;
        if flat.len() != na + nb {
            return Err(Error::DimensionMismatch {
                expected: na + nb,
                found: flat.len(),
            });
        }
        Ok(Self {
            theta_a: flat[..na].to_vec(),
            theta_b: flat[na..].to_vec(),
        })
    }

    pub fn flat(&self) -> Vec<f64> {
        self.theta_a.iter().chain(&self.theta_b).copied().collect()
    }

    pub fn to_unitaries(&self, bases: &LocalBases) -> Result<LocalUnitaryPair> {
        if self
            .theta_a
            .iter()
            .chain(&self.theta_b)
            .any(|x| !x.is_finite())
        {
            return Err(Error::InvalidGrid("non-finite unitary parameter".into()));
        }
        let u = unitary_exp(&bases.a.combine(&self.theta_a)?)?;
        let v = unitary_exp(&bases.b.combine(&self.theta_b)?)?;
        LocalUnitaryPair::new(u, v)
    }
}

/// Gell-Mann bases for both factors of a shape.
#[derive(Clone, Debug)]
pub struct LocalBases {
    pub a: GellMannBasis,
    pub b: GellMannBasis,
}

impl LocalBases {
    pub fn new(shape: BipartiteShape) -> Result<Self> {
        Ok(Self {
            a: GellMannBasis::new(shape.dim_a())?,
            b: GellMannBasis::new(shape.dim_b())?,
        })
    }
}

/// Violation `f` for `rho` at `pair` with unitaries built from `params`.
pub fn objective(rho: &DensityMatrix, pair: LevelPair, params: &UnitaryParams) -> Result<f64> {
    let bases = LocalBases::new(rho.shape())?;
    Objective::new(rho, pair, &bases)?
        .y_values(params)
        .map(|y| y.f)
}

/// The objective with its bases prebuilt, for repeated evaluation.
pub struct Objective<'a> {
    rho: &'a DensityMatrix,
    pair: LevelPair,
    bases: &'a LocalBases,
}

impl<'a> Objective<'a> {
    pub fn new(rho: &'a DensityMatrix, pair: LevelPair, bases: &'a LocalBases) -> Result<Self> {
        let pair = LevelPair::new(pair.j, pair.k, rho.shape())?;
        Ok(Self { rho, pair, bases })
    }

    pub fn y_values(&self, params: &UnitaryParams) -> Result<YValues> {
        let uv = params.to_unitaries(self.bases)?;
        evaluate_levels(self.rho, self.pair, &uv)
    }

    /// `f` at flat coordinates; non-evaluable points score `-inf`.
    pub fn value(&self, flat: &[f64]) -> f64 {
        UnitaryParams::from_flat(self.rho.shape(), flat)
            .and_then(|p| self.y_values(&p))
            .map_or(f64::NEG_INFINITY, |y| y.f)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub restarts: usize,
    pub max_iters: usize,
    pub step_tol: f64,
    pub seed: u64,
    /// Level pairs to search; every valid pair when `None`.
    pub pairs: Option<Vec<LevelPair>>,
    /// Violation margin for certification.
    pub tol: f64,
    /// Edge length of the initial simplex.
    pub initial_step: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            restarts: 16,
            max_iters: 400,
            step_tol: 1e-7,
            seed: 0,
            pairs: None,
            tol: DEFAULT_TOL,
            initial_step: 0.6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetectionReport {
    pub verdict: Verdict,
    /// Verdict from the inequality alone; never `separable`.
    pub inequality_verdict: Verdict,
    pub best_f: f64,
    pub best_pair: LevelPair,
    pub best_params: UnitaryParams,
    pub y_values: YValues,
    pub ppt_min: f64,
    pub ppt_verdict: Verdict,
    pub evaluations: usize,
}

impl DetectionReport {
    /// Recomputes `f` from the certificate without going through the search.
    pub fn recheck(&self, rho: &DensityMatrix) -> Result<f64> {
        objective(rho, self.best_pair, &self.best_params)
    }
}

fn combine_verdicts(inequality: Verdict, ppt: Verdict) -> Verdict {
    match (inequality, ppt) {
        (Verdict::EntangledCertified, _) => Verdict::EntangledCertified,
        (_, Verdict::Separable) => Verdict::Separable,
        _ => Verdict::Inconclusive,
    }
}

fn finish_report(
    rho: &DensityMatrix,
    best_pair: LevelPair,
    best_params: UnitaryParams,
    y_values: YValues,
    evaluations: usize,
    tol: f64,
) -> Result<DetectionReport> {
    let ppt = ppt_check(rho)?;
    let inequality_verdict = check_inequality(&y_values, tol);
    Ok(DetectionReport {
        verdict: combine_verdicts(inequality_verdict, ppt.verdict),
        inequality_verdict,
        best_f: y_values.f,
        best_pair,
        best_params,
        y_values,
        ppt_min: ppt.min_eigenvalue,
        ppt_verdict: ppt.verdict,
        evaluations,
    })
}

fn resolve_pairs(shape: BipartiteShape, pairs: Option<&[LevelPair]>) -> Result<Vec<LevelPair>> {
    match pairs {
        None => Ok(LevelPair::all(shape)),
        Some([]) => Err(Error::InvalidGrid("empty level pair list".into())),
        Some(ps) => ps.iter().map(|p| LevelPair::new(p.j, p.k, shape)).collect(),
    }
}

/// Evaluates identity unitaries at each pair and reports the best.
pub fn evaluate_identity(
    rho: &DensityMatrix,
    pairs: Option<&[LevelPair]>,
    tol: f64,
) -> Result<DetectionReport> {
    let shape = rho.shape();
    let pairs = resolve_pairs(shape, pairs)?;
    let uv = LocalUnitaryPair::identity(shape);
    let mut best: Option<(LevelPair, YValues)> = None;
    for &pair in &pairs {
        let y = evaluate_levels(rho, pair, &uv)?;
        if best.is_none_or(|(_, b)| y.f > b.f) {
            best = Some((pair, y));
        }
    }
    let (pair, y) = best.expect("at least one pair");
    finish_report(rho, pair, UnitaryParams::zeros(shape), y, pairs.len(), tol)
}

/// Result of a single local ascent.
#[derive(Clone, Debug)]
pub struct Ascent {
    pub x: Vec<f64>,
    pub f: f64,
    pub evaluations: usize,
    /// Best value after each iteration; nondecreasing.
    pub history: Vec<f64>,
    pub converged: bool,
}

/// Nelder-Mead maximization with the dimension-adaptive coefficients of
/// Gao and Han. Stops once every vertex is within `step_tol` (max-norm) of
/// the best one, or after `max_iters` iterations.
pub fn nelder_mead_max(
    mut f: impl FnMut(&[f64]) -> f64,
    x0: &[f64],
    initial_step: f64,
    max_iters: usize,
    step_tol: f64,
) -> Ascent {
    let n = x0.len();
    let mut evaluations = 0;
    let mut eval = |x: &[f64], evaluations: &mut usize| {
        *evaluations += 1;
        // Minimize the negation; NaN becomes +inf so it always loses.
        let v = -f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };
    if n == 0 {
        let v = eval(x0, &mut evaluations);
        return Ascent {
            x: Vec::new(),
            f: -v,
            evaluations,
            history: vec![-v],
            converged: true,
        };
    }

    let nf = n as f64;
    let alpha = 1.0;
    let gamma = 1.0 + 2.0 / nf;
    let rho = 0.75 - 1.0 / (2.0 * nf);
    let sigma = 1.0 - 1.0 / nf;

    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] += initial_step;
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex.iter().map(|x| eval(x, &mut evaluations)).collect();
    let mut history = Vec::with_capacity(max_iters);
    let mut converged = false;

    let point = |c: &[f64], w: &[f64], t: f64| -> Vec<f64> {
        c.iter().zip(w).map(|(ci, wi)| ci + t * (wi - ci)).collect()
    };

    for _ in 0..max_iters {
        // Stable sort keeps ties in vertex order, so runs are reproducible.
        let mut idx: Vec<usize> = (0..=n).collect();
        idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = idx.iter().map(|&i| simplex[i].clone()).collect();
        values = idx.iter().map(|&i| values[i]).collect();

        let spread = simplex[1..]
            .iter()
            .map(|v| {
                v.iter()
                    .zip(&simplex[0])
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if spread < step_tol {
            converged = true;
            break;
        }

        let mut centroid = vec![0.0; n];
        for v in &simplex[..n] {
            for (c, x) in centroid.iter_mut().zip(v) {
                *c += x / nf;
            }
        }
        let worst = simplex[n].clone();
        let reflected = point(&centroid, &worst, -alpha);
        let fr = eval(&reflected, &mut evaluations);

        if fr < values[0] {
            let expanded = point(&centroid, &worst, -alpha * gamma);
            let fe = eval(&expanded, &mut evaluations);
            if fe < fr {
                simplex[n] = expanded;
                values[n] = fe;
            } else {
                simplex[n] = reflected;
                values[n] = fr;
            }
        } else if fr < values[n - 1] {
            simplex[n] = reflected;
            values[n] = fr;
        } else {
            let (candidate, fc) = if fr < values[n] {
                let oc = point(&centroid, &worst, -alpha * rho);
                let f = eval(&oc, &mut evaluations);
                (oc, f)
            } else {
                let ic = point(&centroid, &worst, rho);
                let f = eval(&ic, &mut evaluations);
                (ic, f)
            };
            if fc < values[n].min(fr) {
                simplex[n] = candidate;
                values[n] = fc;
            } else {
                let best = simplex[0].clone();
                for i in 1..=n {
                    simplex[i] = point(&best, &simplex[i], sigma);
                    values[i] = eval(&simplex[i], &mut evaluations);
                }
            }
        }
        let best = values.iter().copied().fold(f64::INFINITY, f64::min);
        history.push(-best);
    }

    let (bi, bv) =
        values.iter().enumerate().fold(
            (0, f64::INFINITY),
            |acc, (i, &v)| if v < acc.1 { (i, v) } else { acc },
        );
    Ascent {
        x: simplex[bi].clone(),
        f: -bv,
        evaluations,
        history,
        converged,
    }
}

/// Starting point for `(pair_index, restart_index)`; restart 0 is the origin.
pub fn start_point(
    shape: BipartiteShape,
    seed: u64,
    pair_index: usize,
    restart: usize,
) -> Vec<f64> {
    let dim = shape.dim_a() * shape.dim_a() + shape.dim_b() * shape.dim_b() - 2;
    if restart == 0 {
        return vec![0.0; dim];
    }
    let mut rng = substream(seed, &[pair_index as u64, restart as u64]);
    let dist = Uniform::new_inclusive(-PI, PI).expect("valid range");
    (0..dim).map(|_| rng.sample(dist)).collect()
}

/// Search over level pairs and local unitaries for the largest violation.
pub fn maximize_violation(rho: &DensityMatrix, cfg: &SearchConfig) -> Result<DetectionReport> {
    if cfg.restarts == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "restarts",
            value: 0.0,
            min: 1.0,
            max: f64::INFINITY,
        });
    }
    let shape = rho.shape();
    let pairs = resolve_pairs(shape, cfg.pairs.as_deref())?;
    let bases = LocalBases::new(shape)?;
    let objectives = pairs
        .iter()
        .map(|&p| Objective::new(rho, p, &bases))
        .collect::<Result<Vec<_>>>()?;

    let jobs: Vec<(usize, usize)> = (0..pairs.len())
        .flat_map(|pi| (0..=cfg.restarts).map(move |ri| (pi, ri)))
        .collect();
    let results: Vec<Ascent> = jobs
        .par_iter()
        .map(|&(pi, ri)| {
            let x0 = start_point(shape, cfg.seed, pi, ri);
            let obj = &objectives[pi];
            nelder_mead_max(
                |x| obj.value(x),
                &x0,
                cfg.initial_step,
                cfg.max_iters,
                cfg.step_tol,
            )
        })
        .collect();

    // Merge in job order; strict improvement keeps the lowest index on ties.
    let mut best = 0;
    for (i, r) in results.iter().enumerate() {
        if r.f > results[best].f {
            best = i;
        }
    }
    let evaluations = results.iter().map(|r| r.evaluations).sum();
    let (pi, _) = jobs[best];
    let params = UnitaryParams::from_flat(shape, &results[best].x)?;
    let y = objectives[pi].y_values(&params)?;
    finish_report(rho, pairs[pi], params, y, evaluations, cfg.tol)
}

/// State families available to grid scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateFamily {
    Werner,
    Iso23,
    Horodecki33,
}

impl StateFamily {
    pub fn state(&self, param: f64) -> Result<DensityMatrix> {
        match self {
            StateFamily::Werner => states::werner(param),
            StateFamily::Iso23 => states::iso23(param),
            StateFamily::Horodecki33 => states::horodecki33(param),
        }
    }

    pub fn shape(&self) -> BipartiteShape {
        let (m, n) = match self {
            StateFamily::Werner => (2, 2),
            StateFamily::Iso23 => (2, 3),
            StateFamily::Horodecki33 => (3, 3),
        };
        BipartiteShape::new(m, n).expect("fixed shapes are valid")
    }

    /// Name of the family parameter on the command line.
    pub fn param_name(&self) -> &'static str {
        match self {
            StateFamily::Horodecki33 => "alpha",
            _ => "a",
        }
    }

    pub fn param_range(&self) -> (f64, f64) {
        match self {
            StateFamily::Horodecki33 => (2.0, 5.0),
            _ => (0.0, 1.0),
        }
    }
}

impl FromStr for StateFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "werner" => Ok(StateFamily::Werner),
            "iso23" => Ok(StateFamily::Iso23),
            "horodecki33" => Ok(StateFamily::Horodecki33),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for StateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StateFamily::Werner => "werner",
            StateFamily::Iso23 => "iso23",
            StateFamily::Horodecki33 => "horodecki33",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanRow {
    pub param: f64,
    pub p: f64,
    pub f: f64,
}

/// `f` on a grid with `U = rotation_u(p)` on A and `V = I`; family
/// parameter is the outer loop, `p` the inner one.
pub fn scan_1d(
    family: StateFamily,
    params: &[f64],
    p_grid: &[f64],
    pair: LevelPair,
) -> Result<Vec<ScanRow>> {
    let shape = family.shape();
    let pair = LevelPair::new(pair.j, pair.k, shape)?;
    let bases = LocalBases::new(shape)?;
    let triple = WitnessTriple::build_mxn(shape, pair, &bases.a, &bases.b)?;
    let v = ComplexMatrix::identity(shape.dim_b());
    let unitaries = p_grid
        .iter()
        .map(|&p| LocalUnitaryPair::new(states::rotation_u(p, shape.dim_a())?, v.clone()))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(params.len() * p_grid.len());
    for &param in params {
        let rho = family.state(param)?;
        for (&p, uv) in p_grid.iter().zip(&unitaries) {
            let y = witness::evaluate(&rho, &triple, uv)?;
            rows.push(ScanRow { param, p, f: y.f });
        }
    }
    Ok(rows)
}

/// `steps` evenly spaced points from `lo` to `hi`, both ends included.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>> {
    if steps == 0 || !lo.is_finite() || !hi.is_finite() || hi < lo {
        return Err(Error::InvalidGrid(format!(
            "{steps} steps over [{lo}, {hi}]"
        )));
    }
    if steps == 1 {
        return Ok(vec![lo]);
    }
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            if i == steps - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / last
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{iso23, werner};

    fn pair(j: usize, k: usize) -> LevelPair {
        LevelPair { j, k }
    }

    #[test]
    fn zero_params_objective() {
        let s = BipartiteShape::new(2, 2).unwrap();
        let z = UnitaryParams::zeros(s);
        assert!((objective(&werner(1.0).unwrap(), pair(1, 2), &z).unwrap() - 1.0).abs() < 1e-12);
        assert!((objective(&werner(0.0).unwrap(), pair(1, 2), &z).unwrap() + 0.25).abs() < 1e-12);
        assert!(objective(&werner(1.0).unwrap(), pair(1, 3), &z).is_err());
    }

    #[test]
    fn antisymmetric_generator_reproduces_rotation_family() {
        // exp(i p lambda_a^{12}) = rotation_u(p).
        let s = BipartiteShape::new(2, 3).unwrap();
        let mut params = UnitaryParams::zeros(s);
        params.theta_a[1] = PI / 2.0;
        let bases = LocalBases::new(s).unwrap();
        let uv = params.to_unitaries(&bases).unwrap();
        assert!(
            uv.u()
                .max_abs_diff(&states::rotation_u(PI / 2.0, 2).unwrap())
                < 1e-12
        );
        let f = objective(&iso23(1.0).unwrap(), pair(1, 2), &params).unwrap();
        assert!((f - 1.0).abs() < 1e-12);
    }

    #[test]
    fn params_flat_round_trip() {
        let s = BipartiteShape::new(3, 2).unwrap();
        let flat: Vec<f64> = (0..11).map(|i| i as f64).collect();
        let p = UnitaryParams::from_flat(s, &flat).unwrap();
        assert_eq!(p.theta_a.len(), 8);
        assert_eq!(p.flat(), flat);
        assert!(UnitaryParams::from_flat(s, &flat[..10]).is_err());
    }

    #[test]
    fn nelder_mead_finds_quadratic_peak() {
        let target = [0.3, -1.2, 2.0];
        let peak = |x: &[f64]| {
            -x.iter()
                .zip(&target)
                .map(|(a, b)| (a - b).powi(2))
                .sum::<f64>()
        };
        let run = nelder_mead_max(peak, &[0.0; 3], 0.5, 2000, 1e-9);
        assert!(run.converged);
        for (a, b) in run.x.iter().zip(&target) {
            assert!((a - b).abs() < 1e-6);
        }
        assert!(run.history.windows(2).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn nelder_mead_respects_iteration_cap() {
        let run = nelder_mead_max(|x| -x[0].powi(2) - x[1].powi(2), &[3.0, 3.0], 0.1, 5, 1e-12);
        assert_eq!(run.history.len(), 5);
        assert!(!run.converged);
    }

    #[test]
    fn identity_report() {
        let rep = evaluate_identity(&werner(0.5).unwrap(), None, DEFAULT_TOL).unwrap();
        assert!((rep.best_f - 0.1875).abs() < 1e-9);
        assert_eq!(rep.verdict, Verdict::EntangledCertified);
        let rep = evaluate_identity(&iso23(1.0).unwrap(), None, DEFAULT_TOL).unwrap();
        assert!((rep.best_f + 1.0).abs() < 1e-12);
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        assert_eq!(rep.ppt_verdict, Verdict::EntangledCertified);
    }

    #[test]
    fn separable_verdict_only_from_oracle() {
        let rho = DensityMatrix::maximally_mixed(BipartiteShape::new(2, 3).unwrap());
        let rep = evaluate_identity(&rho, None, DEFAULT_TOL).unwrap();
        assert_eq!(rep.inequality_verdict, Verdict::Inconclusive);
        assert_eq!(rep.verdict, Verdict::Separable);
    }

    #[test]
    fn optimizer_reaches_iso23_optimum() {
        let rho = iso23(1.0).unwrap();
        let cfg = SearchConfig {
            restarts: 4,
            ..SearchConfig::default()
        };
        let rep = maximize_violation(&rho, &cfg).unwrap();
        assert!(rep.best_f >= 0.9, "best_f = {}", rep.best_f);
        assert_eq!(rep.verdict, Verdict::EntangledCertified);
        assert!((rep.recheck(&rho).unwrap() - rep.best_f).abs() < 1e-10);
    }

    #[test]
    fn search_rejects_bad_config() {
        let rho = werner(0.5).unwrap();
        let cfg = SearchConfig {
            restarts: 0,
            ..SearchConfig::default()
        };
        assert!(maximize_violation(&rho, &cfg).is_err());
        let cfg = SearchConfig {
            pairs: Some(vec![pair(1, 3)]),
            ..SearchConfig::default()
        };
        assert!(maximize_violation(&rho, &cfg).is_err());
    }

    #[test]
    fn start_points_are_seeded() {
        let s = BipartiteShape::new(3, 3).unwrap();
        assert_eq!(start_point(s, 1, 0, 0), vec![0.0; 16]);
        assert_eq!(start_point(s, 1, 0, 3), start_point(s, 1, 0, 3));
        assert_ne!(start_point(s, 1, 0, 3), start_point(s, 1, 1, 3));
        assert!(start_point(s, 5, 2, 1).iter().all(|x| x.abs() <= PI));
    }

    #[test]
    fn scan_examples() {
        let rows = scan_1d(StateFamily::Iso23, &[1.0], &[PI / 2.0], pair(1, 2)).unwrap();
        assert!((rows[0].f - 1.0).abs() < 1e-12);
        let rows = scan_1d(StateFamily::Werner, &[1.0 / 3.0], &[0.0], pair(1, 2)).unwrap();
        assert!(rows[0].f.abs() < 1e-12);
        let rows = scan_1d(StateFamily::Horodecki33, &[4.0], &[PI / 2.0], pair(1, 2)).unwrap();
        assert!(rows[0].f.abs() < 1e-12);
        assert!("ghz".parse::<StateFamily>().is_err());
        let rows = scan_1d(
            StateFamily::Iso23,
            &[0.0, 1.0],
            &[0.0, 1.0, 2.0],
            pair(1, 2),
        )
        .unwrap();
        let order: Vec<(f64, f64)> = rows.iter().map(|r| (r.param, r.p)).collect();
        assert_eq!(
            order,
            vec![
                (0.0, 0.0),
                (0.0, 1.0),
                (0.0, 2.0),
                (1.0, 0.0),
                (1.0, 1.0),
                (1.0, 2.0)
            ]
        );
    }

    #[test]
    fn linspace_endpoints() {
        let g = linspace(0.0, PI, 101).unwrap();
        assert_eq!(g.len(), 101);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[100], PI);
        assert!(linspace(1.0, 0.0, 3).is_err());
        assert!(linspace(0.0, 1.0, 0).is_err());
        assert_eq!(linspace(0.5, 0.5, 1).unwrap(), vec![0.5]);
    }
}
