//! Codimension ledger for the chain `S_1 ⊂ S_2 ⊂ ...` of hypersurfaces that
//! fail to be `e`-level, and the degree bound it produces.
//!
//! Everything is integer arithmetic. The square root in the closed-form bound
//! is never evaluated; `e < n - (1 + sqrt(R)) / 2` is decided as
//! `2n - 1 - 2e > 0 && (2n - 1 - 2e)^2 > R`.
//!
//! Parameters are limited to `|n|, |e| <= MAX_PARAM`, which keeps every
//! intermediate far inside `i64`.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::agraph::AmbientContext;
use crate::error::{Error, Result};

pub const MAX_PARAM: i64 = 1_000_000;

fn check_range(name: &str, value: i64) -> Result<()> {
    if value.abs() > MAX_PARAM {
        return Err(Error::Guard(format!("{name} = {value} exceeds {MAX_PARAM}")));
    }
    Ok(())
}

fn context(n: i64, d: i64) -> Result<AmbientContext> {
    check_range("n", n)?;
    AmbientContext::new(n, d)
}

fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// Expected fiber dimension `a = e(n - d + 1) - 2` of the evaluation map.
pub fn expected_fiber_dim(n: i64, d: i64, e: i64) -> Result<i64> {
    context(n, d)?;
    check_range("e", e)?;
    if e < 1 {
        return Err(Error::Parameter(format!("degree e must be at least 1, got {e}")));
    }
    Ok(e * (n - d + 1) - 2)
}

/// `C(n+1, 2) - 3(n - 2)` without any hypothesis check.
pub fn s1_base(n: i64) -> i64 {
    binom2(n + 1) - 3 * (n - 2)
}

/// Codimension of the non-1-level locus, valid when `7 <= d = n - 1`.
pub fn codim_s1(n: i64) -> Result<i64> {
    check_range("n", n)?;
    if n < 8 {
        return Err(Error::Hypothesis(format!(
            "codimension of the non-1-level locus requires 7 <= d = n - 1 (got n = {n}, d = {})",
            n - 1
        )));
    }
    Ok(s1_base(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComparisonConstants {
    /// `dn - 2n + 3`, codimension of hypersurfaces singular along a line.
    pub singular_line_codim: i64,
    /// `n^2 - 3n + 3`, the same count specialised to `d = n - 1`.
    pub singular_line_codim_simplified: Option<i64>,
    /// `C(n+1, 2)`, lower bound for the singular-point line-family locus.
    pub ss_codim: i64,
}

pub fn comparison_constants(n: i64, d: i64) -> Result<ComparisonConstants> {
    context(n, d)?;
    Ok(ComparisonConstants {
        singular_line_codim: d * n - 2 * n + 3,
        singular_line_codim_simplified: (d == n - 1).then(|| n * n - 3 * n + 3),
        ss_codim: binom2(n + 1),
    })
}

/// Upper bound `2n - (n - d + 1)e` on the codimension of `S_{e-1}` in `S_e`.
pub fn step_bound(n: i64, d: i64, e: i64) -> Result<i64> {
    context(n, d)?;
    check_range("e", e)?;
    if e < 2 {
        return Err(Error::Parameter(format!("step bound needs e >= 2, got {e}")));
    }
    Ok(2 * n - (n - d + 1) * e)
}

/// `(n^2 - n - 4ne + 2e^2 + 2e + 8) / 2` as an exact rational.
pub fn residual(n: i64, e: i64) -> Ratio<i128> {
    let (n, e) = (i128::from(n), i128::from(e));
    Ratio::new(n * n - n - 4 * n * e + 2 * e * e + 2 * e + 8, 2)
}

/// The same quantity by the other route: the `S_1` base minus the sum of step
/// bounds for `e' = 2..=e` at `d = n - 1`.
pub fn telescoped_codim(n: i64, e: i64) -> i64 {
    (2..=e).fold(s1_base(n), |acc, k| acc - (2 * n - 2 * k))
}

/// `3n - 3`, the dimension floor from `PGL_{n+1}`-invariance.
pub fn pgl_dim_floor(n: i64) -> i64 {
    3 * n - 3
}

/// `2n - 1`, the family dimension at which bend-and-break applies.
pub fn bendbreak_threshold(n: i64) -> i64 {
    2 * n - 1
}

/// Radicand of the stated closed-form bound.
pub fn closed_form_radicand(n: i64) -> i64 {
    n * n - n - 15
}

/// Radicand obtained by solving the residual quadratic for `e`.
pub fn quadratic_radicand(n: i64) -> i64 {
    2 * n * n - 2 * n - 15
}

/// Whether `e < n - (1 + sqrt(radicand)) / 2`, for `radicand >= 0`.
pub fn below_root_bound(n: i64, e: i64, radicand: i64) -> bool {
    let gap = 2 * n - 1 - 2 * e;
    gap > 0 && i128::from(gap) * i128::from(gap) > i128::from(radicand)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormBound {
    Value(i64),
    /// No `e >= 1` satisfies the inequality.
    NoPositive,
    /// `n^2 - n - 15 < 0`.
    IllDefined,
}

impl ClosedFormBound {
    pub fn value(self) -> Option<i64> {
        match self {
            ClosedFormBound::Value(e) => Some(e),
            _ => None,
        }
    }
}

impl Serialize for ClosedFormBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ClosedFormBound::Value(e) => s.serialize_i64(*e),
            ClosedFormBound::NoPositive => s.serialize_none(),
            ClosedFormBound::IllDefined => s.serialize_str("ill-defined (negative radicand)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `n <= 7`: degrees `e <= 2` are handled by the conic argument instead.
    ConicArgument,
    Ledger,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: i64,
    pub max_e_quadratic: Option<i64>,
    pub max_e_closed_form: ClosedFormBound,
    pub agreement: bool,
    pub closed_form_radicand: i64,
    pub quadratic_radicand: i64,
    pub regime: Regime,
}

/// Largest `e` in the run `2, 3, ...` on which the residual stays positive.
///
/// The residual opens upward and turns positive again past its larger root;
/// that tail is excluded because the scan stops at the first non-positive
/// value.
pub fn max_e_quadratic(n: i64) -> Option<i64> {
    let zero = Ratio::from_integer(0);
    let mut e = 2;
    while residual(n, e) > zero {
        e += 1;
    }
    (e > 2).then_some(e - 1)
}

/// Largest integer `e >= 1` with `e < n - (1 + sqrt(n^2 - n - 15)) / 2`.
pub fn max_e_closed_form(n: i64) -> ClosedFormBound {
    let radicand = closed_form_radicand(n);
    if radicand < 0 {
        return ClosedFormBound::IllDefined;
    }
    // the bound is below n, so scanning down from n finds the largest e
    (1..=n)
        .rev()
        .find(|&e| below_root_bound(n, e, radicand))
        .map_or(ClosedFormBound::NoPositive, ClosedFormBound::Value)
}

pub fn max_level_degree(n: i64) -> Result<BoundReport> {
    check_range("n", n)?;
    if n < 4 {
        return Err(Error::Parameter(format!("degree bound needs n >= 4, got {n}")));
    }
    let quadratic = max_e_quadratic(n);
    let closed = max_e_closed_form(n);
    Ok(BoundReport {
        n,
        max_e_quadratic: quadratic,
        max_e_closed_form: closed,
        agreement: quadratic.is_some() && quadratic == closed.value(),
        closed_form_radicand: closed_form_radicand(n),
        quadratic_radicand: quadratic_radicand(n),
        regime: if n <= 7 { Regime::ConicArgument } else { Regime::Ledger },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    S1Base,
    BbfStep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Positive,
    Zero,
    /// Negative bound; kept as is rather than clamped.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerRow {
    pub e: i64,
    pub codim_lower_bound: i64,
    pub step_bound_applied: i64,
    pub provenance: Provenance,
    pub status: RowStatus,
    /// Expected fiber dimension `a` at this degree.
    pub fiber_dim: i64,
    /// `(n - 1) + (a - 1)`, fiber-dimension threshold in the layered variant.
    pub fiber_threshold: i64,
    /// `2n - 1 - (n + a - 2)`, image dimension bound in the layered variant.
    pub image_bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodimLedger {
    pub n: i64,
    pub d: i64,
    /// `7 <= d = n - 1`, the hypothesis under which row 1 is a theorem.
    pub base_hypothesis_met: bool,
    pub pgl_dim_floor: i64,
    pub bendbreak_threshold: i64,
    pub rows: Vec<LedgerRow>,
}

impl CodimLedger {
    /// Rows `e = 1..=emax`. Row 1 is the `S_1` base; each later row subtracts
    /// the step bound from the previous one.
    pub fn build(n: i64, d: i64, emax: i64) -> Result<Self> {
        context(n, d)?;
        check_range("emax", emax)?;
        if emax < 1 {
            return Err(Error::Parameter(format!("emax must be at least 1, got {emax}")));
        }
        let mut rows = Vec::with_capacity(emax as usize);
        let mut bound = s1_base(n);
        for e in 1..=emax {
            let (step, provenance) = if e == 1 {
                (0, Provenance::S1Base)
            } else {
                (step_bound(n, d, e)?, Provenance::BbfStep)
            };
            bound -= step;
            let a = expected_fiber_dim(n, d, e)?;
            rows.push(LedgerRow {
                e,
                codim_lower_bound: bound,
                step_bound_applied: step,
                provenance,
                status: match bound.signum() {
                    1 => RowStatus::Positive,
                    0 => RowStatus::Zero,
                    _ => RowStatus::Exhausted,
                },
                fiber_dim: a,
                fiber_threshold: (n - 1) + (a - 1),
                image_bound: 2 * n - 1 - (n + a - 2),
            });
        }
        Ok(Self {
            n,
            d,
            base_hypothesis_met: d == n - 1 && d >= 7,
            pgl_dim_floor: pgl_dim_floor(n),
            bendbreak_threshold: bendbreak_threshold(n),
            rows,
        })
    }

    pub fn first_exhausted(&self) -> Option<i64> {
        self.rows
            .iter()
            .find(|r| r.status == RowStatus::Exhausted)
            .map(|r| r.e)
    }
}

pub fn sweep(n_from: i64, n_to: i64) -> Result<Vec<BoundReport>> {
    if n_from > n_to {
        return Err(Error::Parameter(format!("empty sweep range {n_from}..={n_to}")));
    }
    (n_from..=n_to).map(max_level_degree).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(r: Ratio<i128>) -> i128 {
        assert!(r.is_integer(), "{r} is not an integer");
        r.to_integer()
    }

    #[test]
    fn fiber_dims() {
        assert_eq!(expected_fiber_dim(8, 7, 2).unwrap(), 2);
        assert_eq!(expected_fiber_dim(5, 4, 1).unwrap(), 0);
        assert_eq!(expected_fiber_dim(10, 9, 5).unwrap(), 8);
        assert!(expected_fiber_dim(5, 5, 1).is_err());
        assert!(expected_fiber_dim(5, 4, 0).is_err());
    }

    #[test]
    fn s1_codims() {
        assert_eq!(codim_s1(8).unwrap(), 18);
        assert_eq!(codim_s1(10).unwrap(), 31);
        let err = codim_s1(7).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(ref m) if m.contains("7 <= d = n - 1")));
    }

    #[test]
    fn comparison() {
        let c = comparison_constants(8, 7).unwrap();
        assert_eq!((c.singular_line_codim, c.ss_codim), (43, 36));
        assert_eq!(c.singular_line_codim_simplified, Some(43));
        let c = comparison_constants(4, 3).unwrap();
        assert_eq!((c.singular_line_codim, c.ss_codim), (7, 10));
        let c = comparison_constants(3, 2).unwrap();
        assert_eq!((c.singular_line_codim, c.ss_codim), (3, 6));
        assert_eq!(comparison_constants(6, 3).unwrap().singular_line_codim_simplified, None);
    }

    #[test]
    fn step_bounds() {
        assert_eq!(step_bound(8, 7, 2).unwrap(), 12);
        assert_eq!(step_bound(8, 7, 8).unwrap(), 0);
        for n in 3..30 {
            assert_eq!(step_bound(n, n - 1, n).unwrap(), 0);
        }
        assert!(step_bound(8, 7, 1).is_err());
    }

    #[test]
    fn residual_values() {
        assert_eq!(int(residual(8, 2)), 6);
        assert_eq!(telescoped_codim(8, 2), 6);
        assert_eq!(int(residual(8, 3)), -4);
        assert_eq!(telescoped_codim(8, 3), -4);
        assert_eq!(int(residual(4, 2)), 0);
    }

    #[test]
    fn bound_examples() {
        let r = max_level_degree(10).unwrap();
        assert_eq!(int(residual(10, 3)), 1);
        assert_eq!(r.max_e_quadratic, Some(3));

        let r = max_level_degree(8).unwrap();
        assert_eq!(r.max_e_quadratic, Some(2));
        assert_eq!(r.max_e_closed_form, ClosedFormBound::Value(4));
        assert!(!r.agreement);

        let r = max_level_degree(4).unwrap();
        assert_eq!(r.max_e_closed_form, ClosedFormBound::IllDefined);
        assert_eq!(r.max_e_quadratic, None);
        assert_eq!(r.regime, Regime::ConicArgument);
        assert!(max_level_degree(3).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!((pgl_dim_floor(4), bendbreak_threshold(4)), (9, 7));
        assert_eq!((pgl_dim_floor(2), bendbreak_threshold(2)), (3, 3));
        assert_eq!((pgl_dim_floor(10), bendbreak_threshold(10)), (27, 19));
        for n in 2..100 {
            assert!(pgl_dim_floor(n) >= bendbreak_threshold(n));
        }
        assert!(pgl_dim_floor(1) < bendbreak_threshold(1));
    }

    #[test]
    fn ledger_rows_follow_the_chain() {
        let ledger = CodimLedger::build(8, 7, 4).unwrap();
        assert!(ledger.base_hypothesis_met);
        let bounds: Vec<i64> = ledger.rows.iter().map(|r| r.codim_lower_bound).collect();
        assert_eq!(bounds, vec![18, 6, -4, -12]);
        assert_eq!(ledger.rows[0].codim_lower_bound, codim_s1(8).unwrap());
        assert_eq!(ledger.rows[0].provenance, Provenance::S1Base);
        assert_eq!(ledger.rows[1].provenance, Provenance::BbfStep);
        assert_eq!(ledger.first_exhausted(), Some(3));
        // a = 2 at e = 2: threshold (n-1)+(a-1) = 8, image bound 2n-1-(n+a-2) = 7
        assert_eq!(ledger.rows[1].fiber_threshold, 8);
        assert_eq!(ledger.rows[1].image_bound, 7);

        let small = CodimLedger::build(6, 4, 2).unwrap();
        assert!(!small.base_hypothesis_met);
        assert!(CodimLedger::build(8, 7, 0).is_err());
    }

    #[test]
    fn closed_form_serializes_flat() {
        assert_eq!(serde_json::to_string(&ClosedFormBound::Value(4)).unwrap(), "4");
        assert_eq!(serde_json::to_string(&ClosedFormBound::NoPositive).unwrap(), "null");
        assert_eq!(
            serde_json::to_string(&ClosedFormBound::IllDefined).unwrap(),
            "\"ill-defined (negative radicand)\""
        );
    }
}
