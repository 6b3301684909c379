//! Comparison tables between exact counts and their asymptotic forms.

use thiserror::Error;

use crate::asymptotics::{self, AsymptoticsError};
use crate::constants::ConstantsBundle;
use crate::counts::{log_of_count, CountsError, PartitionKind, PartitionTable};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("sampling range [{n_min}, {n_max}] step {step} invalid for table with n_max={table_n_max}")]
    Range {
        n_min: usize,
        n_max: usize,
        step: usize,
        table_n_max: usize,
    },
    #[error("need at least {need} rows, got {got}")]
    TooFewRows { need: usize, got: usize },
    #[error("rows are not sorted by n")]
    Unsorted,
    #[error(transparent)]
    Counts(#[from] CountsError),
    #[error(transparent)]
    Asymptotics(#[from] AsymptoticsError),
}

/// One sampled comparison point.
///
/// For a distinct-prime table the columns hold the fermionic forms; for an
/// unrestricted table the bosonic twins land in the same columns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub n: usize,
    /// Log of the exact count.
    pub ln_exact: f64,
    /// Log of the leading-order exponential form.
    pub ln_q0: f64,
    /// Log of the fully corrected form.
    pub ln_qas: f64,
    /// `(ln_qas - ln_exact) / ln_q0`.
    pub rel_diff: f64,
}

/// Comparison rows plus the number of samples skipped because the exact
/// count was zero (log undefined; zeros only occur at n = 1, 4, 6).
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonTable {
    pub rows: Vec<ComparisonRow>,
    pub skipped_zero: usize,
}

/// Where `ln_qas - ln_exact` changes sign, reported as the bracketing sample
/// pair. No sub-sample interpolation is attempted: the exact counts are
/// integers with unit-scale noise, so polishing a root between samples would
/// be meaningless.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingReport {
    pub bracket_low: usize,
    pub bracket_high: usize,
    pub sign_low: i8,
    pub sign_high: i8,
}

/// Direction of `|rel_diff|` over the largest decade of sampled n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Shrinking,
    Growing,
    Mixed,
}

impl Trend {
    pub fn label(self) -> &'static str {
        match self {
            Trend::Shrinking => "shrinking",
            Trend::Growing => "growing",
            Trend::Mixed => "mixed",
        }
    }
}

/// Sample `n = n_min, n_min+step, ..` and tabulate exact versus asymptotic
/// logs. Samples with a zero exact count are skipped and counted.
pub fn build_comparison(
    table: &PartitionTable,
    n_min: usize,
    n_max: usize,
    step: usize,
    constants: &ConstantsBundle,
) -> Result<ComparisonTable, AnalysisError> {
    if n_min < 2 || n_min > n_max || n_max > table.n_max() || step == 0 {
        return Err(AnalysisError::Range {
            n_min,
            n_max,
            step,
            table_n_max: table.n_max(),
        });
    }
    let mut rows = Vec::new();
    let mut skipped_zero = 0usize;
    for n in (n_min..=n_max).step_by(step) {
        if table.count(n)?.bits() == 0 {
            skipped_zero += 1;
            continue;
        }
        let ln_exact = log_of_count(table, n)?;
        let x = n as f64;
        let (ln_q0, ln_qas) = match table.kind() {
            PartitionKind::DistinctPrimes => (
                asymptotics::ln_q0(x)?,
                asymptotics::ln_q_as(x, constants)?,
            ),
            PartitionKind::UnrestrictedPrimes => {
                let (exponent, ln_pre) = asymptotics::ln_p_as_parts(x, constants)?;
                let leading = 2.0 * std::f64::consts::PI * (x / (3.0 * x.ln())).sqrt();
                (leading, exponent + ln_pre)
            }
        };
        let rel_diff = (ln_qas - ln_exact) / ln_q0;
        rows.push(ComparisonRow {
            n,
            ln_exact,
            ln_q0,
            ln_qas,
            rel_diff,
        });
    }
    Ok(ComparisonTable { rows, skipped_zero })
}

fn sign_of(row: &ComparisonRow) -> i8 {
    if row.ln_qas - row.ln_exact >= 0.0 {
        1
    } else {
        -1
    }
}

/// First adjacent pair of rows where `ln_qas - ln_exact` changes sign.
pub fn find_crossing(rows: &[ComparisonRow]) -> Result<Option<CrossingReport>, AnalysisError> {
    if rows.len() < 2 {
        return Err(AnalysisError::TooFewRows {
            need: 2,
            got: rows.len(),
        });
    }
    for pair in rows.windows(2) {
        if pair[1].n <= pair[0].n {
            return Err(AnalysisError::Unsorted);
        }
        let (s_lo, s_hi) = (sign_of(&pair[0]), sign_of(&pair[1]));
        if s_lo != s_hi {
            return Ok(Some(CrossingReport {
                bracket_low: pair[0].n,
                bracket_high: pair[1].n,
                sign_low: s_lo,
                sign_high: s_hi,
            }));
        }
    }
    Ok(None)
}

/// Largest `|rel_diff|` over all rows, and the direction of `|rel_diff|`
/// across the largest decade of n: the decade's rows are split in half and
/// the halves' maxima compared, which is robust to the sign change the
/// difference goes through near its crossing.
pub fn summarize_error(rows: &[ComparisonRow]) -> Result<(f64, Trend), AnalysisError> {
    if rows.len() < 3 {
        return Err(AnalysisError::TooFewRows {
            need: 3,
            got: rows.len(),
        });
    }
    if rows.windows(2).any(|pair| pair[1].n <= pair[0].n) {
        return Err(AnalysisError::Unsorted);
    }
    let max_abs_rel = rows
        .iter()
        .map(|r| r.rel_diff.abs())
        .fold(0.0f64, f64::max);
    let n_hi = rows.last().expect("nonempty").n;
    let decade_start = n_hi / 10;
    let decade: Vec<f64> = rows
        .iter()
        .filter(|r| r.n >= decade_start)
        .map(|r| r.rel_diff.abs())
        .collect();
    let trend = if decade.len() < 2 {
        Trend::Mixed
    } else {
        let mid = decade.len() / 2;
        let first = decade[..mid].iter().copied().fold(0.0f64, f64::max);
        let second = decade[mid..].iter().copied().fold(0.0f64, f64::max);
        if second < first {
            Trend::Shrinking
        } else if second > first {
            Trend::Growing
        } else {
            Trend::Mixed
        }
    };
    Ok((max_abs_rel, trend))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::constants_bundle;
    use crate::counts::{count_distinct, count_unrestricted};

    fn bundle() -> ConstantsBundle {
        constants_bundle().unwrap()
    }

    fn synthetic(rel_diffs: &[f64]) -> Vec<ComparisonRow> {
        rel_diffs
            .iter()
            .enumerate()
            .map(|(i, &rd)| ComparisonRow {
                n: 10 * (i + 1),
                ln_exact: 1.0,
                ln_q0: 1.0,
                ln_qas: 1.0 + rd,
                rel_diff: rd,
            })
            .collect()
    }

    #[test]
    fn comparison_over_small_range() {
        let table = count_distinct(100).unwrap();
        let cmp = build_comparison(&table, 2, 100, 1, &bundle()).unwrap();
        // zeros at n = 4 and 6 are skipped
        assert_eq!(cmp.skipped_zero, 2);
        assert_eq!(cmp.rows.len(), 97);
        assert_eq!(cmp.rows[0].n, 2);
        assert_eq!(cmp.rows[0].ln_exact, 0.0);
        let ln2 = 2f64.ln();
        for n in [5usize, 7] {
            let row = cmp.rows.iter().find(|r| r.n == n).unwrap();
            assert!((row.ln_exact - ln2).abs() < 1e-15);
        }
    }

    #[test]
    fn rows_satisfy_defining_identity() {
        let table = count_distinct(300).unwrap();
        let cmp = build_comparison(&table, 2, 300, 3, &bundle()).unwrap();
        for row in &cmp.rows {
            let recomputed = (row.ln_qas - row.ln_exact) / row.ln_q0;
            assert!((recomputed - row.rel_diff).abs() < 1e-14);
        }
    }

    #[test]
    fn bosonic_tables_use_bosonic_forms() {
        let table = count_unrestricted(60).unwrap();
        let c = bundle();
        let cmp = build_comparison(&table, 2, 60, 1, &c).unwrap();
        for row in &cmp.rows {
            let x = row.n as f64;
            let leading = 2.0 * std::f64::consts::PI * (x / (3.0 * x.ln())).sqrt();
            assert_eq!(row.ln_q0, leading);
            assert_eq!(row.ln_qas, asymptotics::ln_p_as(x, &c).unwrap());
        }
        // only n = 1 and 4 would be skipped for the bosonic counts; 1 < 2
        assert_eq!(cmp.skipped_zero, 0);
    }

    #[test]
    fn range_validation() {
        let table = count_distinct(50).unwrap();
        let c = bundle();
        assert!(build_comparison(&table, 1, 50, 1, &c).is_err());
        assert!(build_comparison(&table, 2, 51, 1, &c).is_err());
        assert!(build_comparison(&table, 2, 50, 0, &c).is_err());
        assert!(build_comparison(&table, 30, 20, 1, &c).is_err());
    }

    #[test]
    fn crossing_synthetic_cases() {
        let rows = synthetic(&[0.5, -0.25]);
        let report = find_crossing(&rows).unwrap().unwrap();
        assert_eq!(
            report,
            CrossingReport {
                bracket_low: 10,
                bracket_high: 20,
                sign_low: 1,
                sign_high: -1
            }
        );

        let constant = synthetic(&[0.5, 0.25, 0.125]);
        assert_eq!(find_crossing(&constant).unwrap(), None);

        let single = synthetic(&[0.5]);
        assert!(matches!(
            find_crossing(&single),
            Err(AnalysisError::TooFewRows { need: 2, got: 1 })
        ));
    }

    #[test]
    fn crossing_requires_sorted_rows() {
        let mut rows = synthetic(&[0.5, -0.25, 0.1]);
        rows.swap(0, 2);
        assert!(matches!(find_crossing(&rows), Err(AnalysisError::Unsorted)));
    }

    #[test]
    fn summary_trends() {
        let shrinking = synthetic(&[0.4, 0.3, 0.2, 0.1, 0.05, 0.02, 0.01, 0.005]);
        let (max_abs, trend) = summarize_error(&shrinking).unwrap();
        assert_eq!(max_abs, 0.4);
        assert_eq!(trend, Trend::Shrinking);

        let growing = synthetic(&[0.01, 0.02, 0.04, 0.08, 0.16, 0.32, 0.64, 1.28]);
        assert_eq!(summarize_error(&growing).unwrap().1, Trend::Growing);

        let constant = synthetic(&[0.25; 8]);
        assert_eq!(summarize_error(&constant).unwrap().1, Trend::Mixed);

        assert!(matches!(
            summarize_error(&synthetic(&[0.1, 0.2])),
            Err(AnalysisError::TooFewRows { need: 3, got: 2 })
        ));
    }

    #[test]
    fn summary_shrinks_through_a_sign_change() {
        // magnitudes dip through zero and come back smaller, as the real
        // comparison does around its crossing
        let rows = synthetic(&[0.04, 0.02, 0.01, 0.004, -0.001, -0.002]);
        let (_, trend) = summarize_error(&rows).unwrap();
        assert_eq!(trend, Trend::Shrinking);
    }
}
