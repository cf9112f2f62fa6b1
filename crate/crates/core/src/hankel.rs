//! Catalecticant (Hankel) matrices of a functional on binary forms.
//!
//! A functional `c` on `W_{a+b}` (forms of degree `a + b` in two variables)
//! gives the `(a+1) x (b+1)` matrix with entry `(i, j) = c_{i+j}`. A form
//! `f in W_b` lies in `D(V) = { f : f * W_a ⊂ ker c }` exactly when the
//! matrix kills the coefficient vector of `f`, so `codim D(V)` is the rank.
//!
//! Functionals built from `ell` distinct points of the rational normal curve
//! with nonzero weights have rank `min(a+1, b+1, ell)` whenever
//! `ell <= max(a+1, b+1)` (Vandermonde factorisation). Past that range the
//! rank is only generically `min(a+1, b+1)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Coordinates and weights are drawn from `-SAMPLE_RANGE..=SAMPLE_RANGE`.
pub const SAMPLE_RANGE: i64 = 9;

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[BigInt]>::to_vec).collect()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    fn swap_rows(&mut self, r: usize, s: usize) {
        if r != s {
            for j in 0..self.cols {
                self.data.swap(r * self.cols + j, s * self.cols + j);
            }
        }
    }
}

/// Row echelon form from fraction-free elimination.
///
/// Row `r` of `rows` has its leading nonzero entry in column `pivots[r]`.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub matrix: IntMatrix,
    pub pivots: Vec<usize>,
}

/// Bareiss elimination. Every division is exact, so all intermediate entries
/// are minors of the input.
pub fn fraction_free_echelon(m: &IntMatrix) -> Echelon {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let pivot = a.get(row, col).clone();
        for i in row + 1..a.rows {
            let lead = a.get(i, col).clone();
            for j in col + 1..a.cols {
                let value = (&pivot * a.get(i, j) - &lead * a.get(row, j)).div_floor(&prev);
                debug_assert!(
                    (&value * &prev) == (&pivot * a.get(i, j) - &lead * a.get(row, j)),
                    "inexact Bareiss division"
                );
                *a.get_mut(i, j) = value;
            }
            *a.get_mut(i, col) = BigInt::zero();
        }
        prev = pivot;
        pivots.push(col);
        row += 1;
    }
    Echelon { matrix: a, pivots }
}

/// Rank over the rationals.
pub fn rank_exact(m: &IntMatrix) -> usize {
    fraction_free_echelon(m).pivots.len()
}

/// Integer basis of the right nullspace, each vector primitive with a
/// positive leading free coordinate.
pub fn nullspace(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let Echelon { matrix: ech, pivots } = fraction_free_echelon(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); m.cols];
            x[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate().rev() {
                let tail: BigRational = (p + 1..m.cols)
                    .map(|j| BigRational::from_integer(ech.get(r, j).clone()) * &x[j])
                    .sum();
                x[p] = -tail / BigRational::from_integer(ech.get(r, p).clone());
            }
            primitive(&x)
        })
        .collect()
}

fn primitive(x: &[BigRational]) -> Vec<BigInt> {
    let lcm = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = x.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &gcd).collect()
}

/// Product of binary forms given by coefficient vectors in the basis
/// `s^m, s^{m-1} t, ..., t^m`.
pub fn poly_mul(p: &[BigInt], q: &[BigInt]) -> Vec<BigInt> {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in q.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn pairing(c: &[BigInt], form: &[BigInt]) -> BigInt {
    assert_eq!(c.len(), form.len());
    c.iter().zip(form).map(|(x, y)| x * y).sum()
}

/// A nonzero functional on `W_{a+b}` together with the split `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelInstance {
    a: usize,
    b: usize,
    c: Vec<BigInt>,
}

impl HankelInstance {
    pub fn new<T: Into<BigInt>>(a: usize, b: usize, c: impl IntoIterator<Item = T>) -> Result<Self> {
        let c: Vec<BigInt> = c.into_iter().map(Into::into).collect();
        if a == 0 || b == 0 {
            return Err(Error::Parameter(format!("a and b must be positive, got a = {a}, b = {b}")));
        }
        if c.len() != a + b + 1 {
            return Err(Error::Parameter(format!(
                "functional needs a + b + 1 = {} coefficients, got {}",
                a + b + 1,
                c.len()
            )));
        }
        if c.iter().all(Zero::is_zero) {
            return Err(Error::Parameter("the zero functional defines no hyperplane".to_string()));
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.c
    }

    pub fn matrix(&self) -> IntMatrix {
        hankel_matrix(self.a, self.b, &self.c)
    }

    /// `codim D(V)`, the rank of the catalecticant matrix.
    pub fn codim_dv(&self) -> usize {
        rank_exact(&self.matrix())
    }

    /// Integer basis of `D(V) ⊂ W_b`.
    pub fn dv_basis(&self) -> Vec<Vec<BigInt>> {
        nullspace(&self.matrix())
    }

    /// Checks `f * A` pairs to zero against `c` for every monomial `A` of
    /// degree `a`, by multiplying the forms directly.
    pub fn annihilates(&self, f: &[BigInt]) -> bool {
        assert_eq!(f.len(), self.b + 1);
        (0..=self.a).all(|i| {
            let mut monomial = vec![BigInt::zero(); self.a + 1];
            monomial[i] = BigInt::one();
            pairing(&self.c, &poly_mul(&monomial, f)).is_zero()
        })
    }
}

fn hankel_matrix(a: usize, b: usize, c: &[BigInt]) -> IntMatrix {
    let mut m = IntMatrix::zeros(a + 1, b + 1);
    for i in 0..=a {
        for j in 0..=b {
            *m.get_mut(i, j) = c[i + j].clone();
        }
    }
    m
}

/// Evaluation at `[s:t]` on `W_degree`: `c_k = s^{degree-k} t^k`.
pub fn rnc_functional(degree: usize, s: i64, t: i64) -> Result<Vec<BigInt>> {
    if s == 0 && t == 0 {
        return Err(Error::Parameter("[0:0] is not a point of P^1".to_string()));
    }
    let (s, t) = (BigInt::from(s), BigInt::from(t));
    Ok((0..=degree)
        .map(|k| num_traits::pow(s.clone(), degree - k) * num_traits::pow(t.clone(), k))
        .collect())
}

/// A weighted sum of `ell` evaluation functionals at distinct points of `P^1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SecantPoint {
    points: Vec<(i64, i64)>,
    weights: Vec<i64>,
}

impl SecantPoint {
    pub fn new(points: Vec<(i64, i64)>, weights: Vec<i64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Parameter("a secant point needs ell >= 1 points".to_string()));
        }
        if points.len() != weights.len() {
            return Err(Error::Parameter("one weight per point is required".to_string()));
        }
        if let Some(w) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Parameter(format!("weight {w} is zero")));
        }
        for (i, &p) in points.iter().enumerate() {
            if p == (0, 0) {
                return Err(Error::Parameter(format!("point {i} is [0:0]")));
            }
            if let Some(j) = points[..i].iter().position(|&q| same_point(p, q)) {
                return Err(Error::Parameter(format!("points {j} and {i} coincide in P^1")));
            }
        }
        Ok(Self { points, weights })
    }

    pub fn ell(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Coefficients of the functional on `W_degree`; may be zero when
    /// `ell > degree + 1`.
    pub fn functional(&self, degree: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); degree + 1];
        for (&(s, t), &w) in self.points.iter().zip(&self.weights) {
            let eval = rnc_functional(degree, s, t).expect("points are validated");
            for (acc, x) in c.iter_mut().zip(eval) {
                *acc += x * w;
            }
        }
        c
    }

    /// Rejection-samples `ell` distinct points and nonzero weights with
    /// coordinates in `-SAMPLE_RANGE..=SAMPLE_RANGE`.
    pub fn sample<R: Rng>(rng: &mut R, ell: usize) -> Self {
        let mut points: Vec<(i64, i64)> = Vec::with_capacity(ell);
        while points.len() < ell {
            let p = (
                rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE),
                rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE),
            );
            if p != (0, 0) && !points.iter().any(|&q| same_point(p, q)) {
                points.push(p);
            }
        }
        let weights = (0..ell)
            .map(|_| loop {
                let w = rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE);
                if w != 0 {
                    break w;
                }
            })
            .collect();
        Self::new(points, weights).expect("sampler respects the invariants")
    }
}

fn same_point((s1, t1): (i64, i64), (s2, t2): (i64, i64)) -> bool {
    i128::from(s1) * i128::from(t2) == i128::from(s2) * i128::from(t1)
}

/// The instance whose functional is the secant point on `W_{a+b}`.
pub fn secant_sample(a: usize, b: usize, sp: &SecantPoint) -> Result<HankelInstance> {
    HankelInstance::new(a, b, sp.functional(a + b))
}

/// Which candidate law for `codim D(V)` matched every trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaVerdict {
    Both,
    /// Only `min{a, b, ell}` matched.
    LiteralOnly,
    /// Only `min{a+1, b+1, ell}` matched.
    ShiftedOnly,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub points: Vec<(i64, i64)>,
    pub weights: Vec<i64>,
    pub coefficients: Vec<String>,
    pub observed_codim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub a: usize,
    pub b: usize,
    pub ell: usize,
    pub trials: usize,
    pub seed: u64,
    /// Observed codimension -> number of trials.
    pub observed_codims: BTreeMap<usize, usize>,
    pub formula_min_abl: usize,
    pub formula_min_a1b1l: usize,
    pub verdict: LemmaVerdict,
    /// `ell <= max(a+1, b+1)`: every sample has rank exactly `min(a+1, b+1, ell)`.
    pub exact_regime: bool,
    pub kernel_vectors_checked: usize,
    pub kernel_failures: usize,
    /// Trials whose codimension differs from `min(a+1, b+1, ell)`.
    pub counterexamples: Vec<Counterexample>,
}

impl LemmaReport {
    pub fn matches_literal(&self) -> bool {
        matches!(self.verdict, LemmaVerdict::Both | LemmaVerdict::LiteralOnly)
    }

    pub fn matches_shifted(&self) -> bool {
        matches!(self.verdict, LemmaVerdict::Both | LemmaVerdict::ShiftedOnly)
    }

    /// The single observed codimension, if all trials agree.
    pub fn uniform_codim(&self) -> Option<usize> {
        match self.observed_codims.keys().collect::<Vec<_>>().as_slice() {
            [only] => Some(**only),
            _ => None,
        }
    }
}

struct Trial {
    sample: SecantPoint,
    coefficients: Vec<BigInt>,
    codim: usize,
    kernel_checked: usize,
    kernel_failures: usize,
}

fn trial_rng(seed: u64, a: usize, b: usize, ell: usize, trial: usize) -> ChaCha8Rng {
    // fold the shape into the seed so different (a, b, ell) never share streams
    let mut key = seed;
    for part in [a as u64, b as u64, ell as u64] {
        key = splitmix64(key ^ part);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(key);
    rng.set_stream(trial as u64);
    rng
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn run_trial(a: usize, b: usize, ell: usize, seed: u64, trial: usize) -> Trial {
    let mut rng = trial_rng(seed, a, b, ell, trial);
    let sample = SecantPoint::sample(&mut rng, ell);
    let coefficients = sample.functional(a + b);
    let m = hankel_matrix(a, b, &coefficients);
    let codim = rank_exact(&m);
    let (mut kernel_checked, mut kernel_failures) = (0, 0);
    if let Ok(h) = HankelInstance::new(a, b, coefficients.clone()) {
        for f in h.dv_basis() {
            kernel_checked += 1;
            if !h.annihilates(&f) {
                kernel_failures += 1;
            }
        }
    }
    Trial { sample, coefficients, codim, kernel_checked, kernel_failures }
}

/// Samples `trials` secant points with exactly `ell` distinct points and
/// compares the observed `codim D(V)` with both `min{a, b, ell}` and
/// `min{a+1, b+1, ell}`.
///
/// Trials use independent streams derived from `seed`, so the report does
/// not depend on scheduling.
pub fn verify_lemma(a: usize, b: usize, ell: usize, trials: usize, seed: u64) -> Result<LemmaReport> {
    if a == 0 || b == 0 {
        return Err(Error::Parameter(format!("a and b must be positive, got a = {a}, b = {b}")));
    }
    if ell == 0 || trials == 0 {
        return Err(Error::Parameter("ell and trials must be at least 1".to_string()));
    }
    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(a, b, ell, seed, t))
        .collect();

    let literal = a.min(b).min(ell);
    let shifted = (a + 1).min(b + 1).min(ell);
    let mut observed_codims = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let (mut kernel_vectors_checked, mut kernel_failures) = (0, 0);
    for (i, r) in results.iter().enumerate() {
        *observed_codims.entry(r.codim).or_insert(0) += 1;
        kernel_vectors_checked += r.kernel_checked;
        kernel_failures += r.kernel_failures;
        if r.codim != shifted {
            counterexamples.push(Counterexample {
                trial: i,
                points: r.sample.points().to_vec(),
                weights: r.sample.weights().to_vec(),
                coefficients: r.coefficients.iter().map(ToString::to_string).collect(),
                observed_codim: r.codim,
            });
        }
    }
    let all_equal = |target: usize| observed_codims.keys().all(|&k| k == target);
    let verdict = match (all_equal(literal), all_equal(shifted)) {
        (true, true) => LemmaVerdict::Both,
        (true, false) => LemmaVerdict::LiteralOnly,
        (false, true) => LemmaVerdict::ShiftedOnly,
        (false, false) => LemmaVerdict::Neither,
    };
    Ok(LemmaReport {
        a,
        b,
        ell,
        trials,
        seed,
        observed_codims,
        formula_min_abl: literal,
        formula_min_a1b1l: shifted,
        verdict,
        exact_regime: ell <= (a + 1).max(b + 1),
        kernel_vectors_checked,
        kernel_failures,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn matrix_shapes() {
        let h = HankelInstance::new(1, 2, [10, 11, 12, 13]).unwrap();
        assert_eq!(h.matrix(), mat(&[&[10, 11, 12], &[11, 12, 13]]));
        let h = HankelInstance::new(2, 2, [1, 0, 0, 0, 1]).unwrap();
        assert_eq!(h.matrix(), mat(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]));
        let h = HankelInstance::new(3, 1, [1, 2, 4, 8, 16]).unwrap();
        assert_eq!(h.matrix(), mat(&[&[1, 2], &[2, 4], &[4, 8], &[8, 16]]));
    }

    #[test]
    fn instance_errors() {
        assert!(HankelInstance::new(1, 1, [0, 0, 0]).is_err());
        assert!(HankelInstance::new(1, 1, [1, 0]).is_err());
        assert!(HankelInstance::new(0, 1, [1, 0]).is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_exact(&mat(&[&[1, 2, 4, 8], &[2, 4, 8, 16]])), 1);
        assert_eq!(rank_exact(&mat(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]])), 2);
        assert_eq!(rank_exact(&IntMatrix::zeros(3, 4)), 0);
        // pivot column skipped in the middle
        assert_eq!(rank_exact(&mat(&[&[0, 1, 2], &[0, 2, 4], &[0, 0, 3]])), 2);
    }

    #[test]
    fn rnc_points() {
        assert_eq!(rnc_functional(3, 1, 0).unwrap(), big(&[1, 0, 0, 0]));
        assert_eq!(rnc_functional(3, 1, 2).unwrap(), big(&[1, 2, 4, 8]));
        assert_eq!(rnc_functional(2, 1, 1).unwrap(), big(&[1, 1, 1]));
        assert!(rnc_functional(2, 0, 0).is_err());
    }

    #[test]
    fn secant_samples() {
        let one = SecantPoint::new(vec![(1, 0)], vec![1]).unwrap();
        let h = secant_sample(2, 2, &one).unwrap();
        assert_eq!(h.coefficients(), big(&[1, 0, 0, 0, 0]).as_slice());
        assert_eq!(h.codim_dv(), 1);

        let two = SecantPoint::new(vec![(1, 0), (0, 1)], vec![1, 1]).unwrap();
        let h = secant_sample(2, 2, &two).unwrap();
        assert_eq!(h.coefficients(), big(&[1, 0, 0, 0, 1]).as_slice());
        assert_eq!(h.codim_dv(), 2);

        let three = SecantPoint::new(vec![(1, 0), (0, 1), (1, 1)], vec![1, 1, 1]).unwrap();
        let h = secant_sample(2, 2, &three).unwrap();
        assert_eq!(h.coefficients(), big(&[2, 1, 1, 1, 2]).as_slice());
        assert_eq!(h.codim_dv(), 3);
    }

    #[test]
    fn secant_point_invariants() {
        assert!(SecantPoint::new(vec![], vec![]).is_err());
        assert!(SecantPoint::new(vec![(1, 2), (2, 4)], vec![1, 1]).is_err());
        assert!(SecantPoint::new(vec![(1, 2), (-1, -2)], vec![1, 1]).is_err());
        assert!(SecantPoint::new(vec![(1, 2)], vec![0]).is_err());
        assert!(SecantPoint::new(vec![(0, 0)], vec![1]).is_err());
    }

    #[test]
    fn kernels() {
        let h = secant_sample(1, 2, &SecantPoint::new(vec![(1, 2)], vec![1]).unwrap()).unwrap();
        assert_eq!(h.codim_dv(), 1);
        let basis = h.dv_basis();
        assert_eq!(basis.len(), 2);
        assert!(basis.iter().all(|f| h.annihilates(f)));

        let h = HankelInstance::new(2, 2, [1, 0, 0, 0, 1]).unwrap();
        assert_eq!(h.codim_dv(), 2);
        let basis = h.dv_basis();
        assert_eq!(basis, vec![big(&[0, 1, 0])]);

        let h = HankelInstance::new(2, 2, [2, 1, 1, 1, 2]).unwrap();
        assert!(h.dv_basis().is_empty());
        // a non-kernel vector fails the multiplication check
        assert!(!h.annihilates(&big(&[1, 0, 0])));
    }

    #[test]
    fn rank_drops_beyond_the_exact_regime() {
        // three distinct points on the conic combine to a single point:
        // 3(1,1,1) + (1,-1,1) - (1,2,4) = (3,0,0)
        let sp = SecantPoint::new(vec![(1, 1), (1, -1), (1, 2)], vec![3, 1, -1]).unwrap();
        let h = secant_sample(1, 1, &sp).unwrap();
        assert_eq!(h.coefficients(), big(&[3, 0, 0]).as_slice());
        assert_eq!(h.codim_dv(), 1);
    }

    #[test]
    fn lemma_reports() {
        let r = verify_lemma(1, 2, 1, 10, 3).unwrap();
        assert_eq!(r.uniform_codim(), Some(1));
        assert_eq!(r.verdict, LemmaVerdict::Both);

        let r = verify_lemma(1, 2, 2, 10, 3).unwrap();
        assert_eq!(r.uniform_codim(), Some(2));
        assert_eq!((r.formula_min_abl, r.formula_min_a1b1l), (1, 2));
        assert_eq!(r.verdict, LemmaVerdict::ShiftedOnly);

        let r = verify_lemma(3, 3, 10, 10, 3).unwrap();
        assert_eq!(r.uniform_codim(), Some(4));
        assert_eq!(r.kernel_failures, 0);
    }

    #[test]
    fn lemma_report_is_reproducible() {
        assert_eq!(verify_lemma(2, 3, 3, 20, 11).unwrap(), verify_lemma(2, 3, 3, 20, 11).unwrap());
        assert!(verify_lemma(0, 3, 3, 20, 11).is_err());
        assert!(verify_lemma(2, 3, 0, 20, 11).is_err());
    }
}
