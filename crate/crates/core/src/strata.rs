//! Dimension audit for surjectivity of
//! `W_3 x W_1^{n-2} -> W_{2d-1}`, `(A, L_3, ..., L_n) -> A G + sum L_i F_i`.
//!
//! Hyperplanes `V` of `W_{2d-1}` are stratified by secant level of the
//! rational normal curve `E`. For each stratum the fiber of the incidence
//! correspondence has a known codimension in the space of `(G, F_3, ..., F_n)`;
//! the margin `fiber_codim - stratum_dim` must be at least 2 in every case.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hankel;

/// `dim W_a = a + 1`.
pub fn dim_w(a: u32) -> u32 {
    a + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StratumDims {
    pub s1: i64,
    pub s2: i64,
    /// Upper bound 5, used as exact (the smaller margin).
    pub s3: i64,
    /// `dim P(W_{2d-1})^* = 2d - 1`.
    pub ambient: i64,
}

pub fn stratum_dims(d: i64) -> StratumDims {
    StratumDims { s1: 1, s2: 3, s3: 5, ambient: 2 * d - 1 }
}

/// Parameter count of the `ell`-th secant variety: `ell` points plus `ell`
/// weights, less one for scaling.
pub fn secant_parameter_dim(ell: i64) -> i64 {
    2 * ell - 1
}

/// Secant level of a hyperplane: 1, 2, 3, or anything past `S_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SecantLevel {
    One,
    Two,
    Three,
    Beyond,
}

impl SecantLevel {
    pub const ALL: [SecantLevel; 4] =
        [SecantLevel::One, SecantLevel::Two, SecantLevel::Three, SecantLevel::Beyond];

    /// Levels 4 and up collapse to `Beyond`.
    pub fn from_ell(ell: u32) -> Result<Self> {
        match ell {
            0 => Err(Error::Parameter("secant level starts at 1".to_string())),
            1 => Ok(SecantLevel::One),
            2 => Ok(SecantLevel::Two),
            3 => Ok(SecantLevel::Three),
            _ => Ok(SecantLevel::Beyond),
        }
    }

    /// Representative number of points; `Beyond` is represented by 4.
    pub fn ell(self) -> u32 {
        match self {
            SecantLevel::One => 1,
            SecantLevel::Two => 2,
            SecantLevel::Three => 3,
            SecantLevel::Beyond => 4,
        }
    }

    fn stratum_name(self) -> &'static str {
        match self {
            SecantLevel::One => "S1(E)",
            SecantLevel::Two => "S2(E) \\ S1(E)",
            SecantLevel::Three => "S3(E) \\ S2(E)",
            SecantLevel::Beyond => "P(W_{2d-1})* \\ S3(E)",
        }
    }
}

fn check_hypothesis(n: i64, d: i64) -> Result<()> {
    if n < 4 || d >= n {
        return Err(Error::Hypothesis(format!(
            "the multiplication audit requires n >= 4 and d < n (got n = {n}, d = {d})"
        )));
    }
    if d < 2 {
        return Err(Error::Parameter(format!("degree d must be at least 2, got {d}")));
    }
    Ok(())
}

/// Codimension of the fiber over a hyperplane of the given secant level:
/// `n - 1`, `2(n - 1)`, `2(n - 1) + 1`, `2(n - 1) + 2`.
pub fn fiber_codim(n: i64, level: SecantLevel) -> Result<i64> {
    if n < 4 {
        return Err(Error::Hypothesis(format!("fiber codimensions need n >= 4, got {n}")));
    }
    Ok(match level {
        SecantLevel::One => n - 1,
        SecantLevel::Two => 2 * (n - 1),
        SecantLevel::Three => 2 * (n - 1) + 1,
        SecantLevel::Beyond => 2 * (n - 1) + 2,
    })
}

fn stratum_dim(d: i64, level: SecantLevel) -> i64 {
    let dims = stratum_dims(d);
    match level {
        SecantLevel::One => dims.s1,
        SecantLevel::Two => dims.s2,
        SecantLevel::Three => dims.s3,
        SecantLevel::Beyond => dims.ambient,
    }
}

/// `(n - 2, 2n - 5, 2n - 6, 2n - 2d + 1)`.
pub fn case_margins(n: i64, d: i64) -> Result<[i64; 4]> {
    check_hypothesis(n, d)?;
    Ok([n - 2, 2 * n - 5, 2 * n - 6, 2 * n - 2 * d + 1])
}

/// Per-factor sums of catalecticant ranks for the `G` factor
/// (`a = 3, b = 2d - 4`) and the `n - 2` factors `F_i` (`a = 1, b = 2d - 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FactorSum {
    pub ell: u32,
    pub stated: i64,
    /// `min{4, 2d-3, ell} + (n-2) min{2, 2d-1, ell}`.
    pub shifted_sum: i64,
    /// `min{3, 2d-4, ell} + (n-2) min{1, 2d-2, ell}`.
    pub literal_sum: i64,
    pub matches_shifted: bool,
    pub matches_literal: bool,
    /// No hyperplane of `W_{2d-1}` has this secant level (`ell > d`), so the
    /// stratum is empty.
    pub vacuous: bool,
}

pub fn factor_sum(n: i64, d: i64, level: SecantLevel) -> Result<FactorSum> {
    check_hypothesis(n, d)?;
    if d < 3 {
        return Err(Error::Parameter(format!(
            "the G factor lives in W_{{2d-4}}, which needs d >= 3 (got d = {d})"
        )));
    }
    let ell = i64::from(level.ell());
    let stated = fiber_codim(n, level)?;
    let shifted_sum = 4.min(2 * d - 3).min(ell) + (n - 2) * 2.min(2 * d - 1).min(ell);
    let literal_sum = 3.min(2 * d - 4).min(ell) + (n - 2) * 1.min(2 * d - 2).min(ell);
    Ok(FactorSum {
        ell: level.ell(),
        stated,
        shifted_sum,
        literal_sum,
        matches_shifted: shifted_sum == stated,
        matches_literal: literal_sum == stated,
        // the generic secant rank for degree 2d - 1 is d
        vacuous: ell > d,
    })
}

/// The factor sum measured by sampling: catalecticant ranks from
/// [`hankel::verify_lemma`] for both factor shapes, combined as
/// `codim(G) + (n - 2) codim(F)`.
pub fn factor_sum_sampled(n: i64, d: i64, level: SecantLevel, trials: usize, seed: u64) -> Result<i64> {
    check_hypothesis(n, d)?;
    if d < 3 {
        return Err(Error::Parameter(format!("sampled factor sums need d >= 3 (got d = {d})")));
    }
    let ell = level.ell() as usize;
    let uniform = |a: usize, b: usize| -> Result<i64> {
        let report = hankel::verify_lemma(a, b, ell, trials, seed)?;
        report.uniform_codim().map(|c| c as i64).ok_or_else(|| {
            Error::Parameter(format!(
                "sampled codimensions for (a, b, ell) = ({a}, {b}, {ell}) are not uniform: {:?}",
                report.observed_codims
            ))
        })
    };
    let g = uniform(3, (2 * d - 4) as usize)?;
    let f = uniform(1, (2 * d - 2) as usize)?;
    Ok(g + (n - 2) * f)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub case: usize,
    pub stratum_name: String,
    pub stratum_dim: i64,
    pub fiber_codim: i64,
    pub margin: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrataAudit {
    pub n: i64,
    pub d: i64,
    pub cases: Vec<CaseRecord>,
    pub pass: bool,
    pub min_margin: i64,
    /// Cases (1-based) attaining the minimum margin.
    pub tight_cases: Vec<usize>,
    /// Empty when `d < 3`.
    pub factor_sums: Vec<FactorSum>,
    pub notes: Vec<String>,
}

impl StrataAudit {
    /// Factor-sum mismatches on non-empty strata.
    pub fn factor_mismatches(&self) -> Vec<&FactorSum> {
        self.factor_sums
            .iter()
            .filter(|f| !f.matches_shifted && !f.vacuous)
            .collect()
    }
}

pub fn audit(n: i64, d: i64) -> Result<StrataAudit> {
    let margins = case_margins(n, d)?;
    let mut cases = Vec::with_capacity(4);
    for (i, level) in SecantLevel::ALL.into_iter().enumerate() {
        let stratum_dim = stratum_dim(d, level);
        let fiber_codim = fiber_codim(n, level)?;
        let margin = fiber_codim - stratum_dim;
        debug_assert_eq!(margin, margins[i]);
        cases.push(CaseRecord {
            case: i + 1,
            stratum_name: level.stratum_name().to_string(),
            stratum_dim,
            fiber_codim,
            margin,
        });
    }
    let min_margin = cases.iter().map(|c| c.margin).min().expect("four cases");
    let tight_cases = cases.iter().filter(|c| c.margin == min_margin).map(|c| c.case).collect();
    let factor_sums = if d >= 3 {
        SecantLevel::ALL
            .into_iter()
            .map(|level| factor_sum(n, d, level))
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };

    let mut notes = vec![
        "fiber codimensions are measured in the (G, F_3, ..., F_n) space W_{2d-4} x W_{2d-2}^{n-2}; \
         the incidence correspondence is written over W_3 x W_1^{n-2}"
            .to_string(),
    ];
    if n == 4 && d == 3 {
        notes.push(
            "the case list contains an unfinished sentence for d = 3, n = 4; \
             the four-case audit covers this instance"
                .to_string(),
        );
    }
    for f in factor_sums.iter().filter(|f| f.vacuous && !f.matches_shifted) {
        notes.push(format!(
            "secant level {} does not occur in P(W_{}); its factor sum {} differs from the stated {}",
            f.ell,
            2 * d - 1,
            f.shifted_sum,
            f.stated
        ));
    }
    Ok(StrataAudit {
        n,
        d,
        pass: min_margin >= 2,
        cases,
        min_margin,
        tight_cases,
        factor_sums,
        notes,
    })
}

/// Audits every `4 <= n <= n_max`, `2 <= d < n`.
pub fn sweep(n_max: i64) -> Result<Vec<StrataAudit>> {
    if n_max < 4 {
        return Err(Error::Parameter(format!("sweep needs n_max >= 4, got {n_max}")));
    }
    (4..=n_max)
        .flat_map(|n| (2..n).map(move |d| (n, d)))
        .map(|(n, d)| audit(n, d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_space_dims() {
        assert_eq!(dim_w(3), 4);
        assert_eq!(dim_w(1), 2);
        assert_eq!(dim_w(2 * 3 - 1), 6);
    }

    #[test]
    fn strata() {
        let dims = stratum_dims(4);
        assert_eq!((dims.s1, dims.s2, dims.s3, dims.ambient), (1, 3, 5, 7));
        assert_eq!(secant_parameter_dim(2), 3);
        assert_eq!(secant_parameter_dim(1), dims.s1);
        assert_eq!(secant_parameter_dim(3), dims.s3);
    }

    #[test]
    fn fiber_codims() {
        assert_eq!(fiber_codim(5, SecantLevel::One).unwrap(), 4);
        assert_eq!(fiber_codim(5, SecantLevel::Two).unwrap(), 8);
        assert_eq!(fiber_codim(5, SecantLevel::Three).unwrap(), 9);
        assert_eq!(fiber_codim(5, SecantLevel::Beyond).unwrap(), 10);
        assert!(fiber_codim(3, SecantLevel::One).is_err());
        assert_eq!(SecantLevel::from_ell(7).unwrap(), SecantLevel::Beyond);
        assert!(SecantLevel::from_ell(0).is_err());
    }

    #[test]
    fn margins() {
        assert_eq!(case_margins(5, 4).unwrap(), [3, 5, 4, 3]);
        assert_eq!(case_margins(4, 3).unwrap(), [2, 3, 2, 3]);
        let err = case_margins(4, 4).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(ref m) if m.contains("d < n")));
    }

    #[test]
    fn audits() {
        let a = audit(4, 3).unwrap();
        assert!(a.pass);
        assert_eq!(a.min_margin, 2);
        assert_eq!(a.tight_cases, vec![1, 3]);
        assert!(a.notes.iter().any(|n| n.contains("d = 3, n = 4")));

        let a = audit(10, 9).unwrap();
        assert!(a.pass);
        assert_eq!(a.min_margin, 3);
        assert_eq!(a.tight_cases, vec![4]);
    }

    #[test]
    fn factor_sums_for_small_degree() {
        let sums = audit(5, 3).unwrap().factor_sums;
        // ell = 4 cannot occur for d = 3, and the sum there is 2n - 1
        let beyond = sums.iter().find(|f| f.ell == 4).unwrap();
        assert!(beyond.vacuous);
        assert_eq!(beyond.shifted_sum, 9);
        assert_eq!(beyond.stated, 10);
        assert!(sums.iter().filter(|f| f.ell < 4).all(|f| f.matches_shifted));
        assert!(audit(5, 2).unwrap().factor_sums.is_empty());
    }

    #[test]
    fn sampled_factor_sums_match_stated_codims() {
        for (n, d) in [(5, 4), (6, 5), (7, 4)] {
            for level in SecantLevel::ALL {
                let sampled = factor_sum_sampled(n, d, level, 8, 1).unwrap();
                assert_eq!(sampled, fiber_codim(n, level).unwrap(), "n={n} d={d} {level:?}");
            }
        }
    }

    #[test]
    fn sweep_passes() {
        let all = sweep(12).unwrap();
        assert!(all.iter().all(|a| a.pass));
        assert!(all.iter().all(|a| a.factor_mismatches().is_empty()));
        assert!(sweep(3).is_err());
    }
}
