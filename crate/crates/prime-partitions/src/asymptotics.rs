//! Closed-form asymptotic counting formulas, evaluated in log space.
//!
//! The corrected forms combine a stretched-exponential leading term, two
//! corrections inside the exponent bracket, and a pre-exponential factor:
//!
//! ```text
//! ln Q_as(n) = 2 pi sqrt(n / (6 ln n)) * [1 - ln(ln n)/(2 ln n) + bF/ln n]
//!              - (1/2) ln(4 n^(3/2) sqrt(6 ln n))
//! ```
//!
//! with the bosonic twin using `3 ln n` slots and its own linear-correction
//! coefficient. Everything is computed in log space; exponentiation is a thin
//! wrapper ([`value_of`]) that reports overflow explicitly instead of leaking
//! an infinity — the corrected count near `n = 10^7` already exceeds the
//! `f64` range.

use std::f64::consts::PI;
use thiserror::Error;

use crate::constants::ConstantsBundle;

#[derive(Debug, Error)]
pub enum AsymptoticsError {
    #[error("asymptotic forms require n >= 2, got {0}")]
    Domain(f64),
}

/// Occupancy statistics selecting the formula family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistics {
    /// Distinct parts; density slot `6 ln n`.
    Fermionic,
    /// Repeated parts allowed; density slot `3 ln n`.
    Bosonic,
}

/// How much of the asymptotic series to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    /// Bare exponential `exp(2 pi sqrt(n/(c ln n)))`.
    LeadingExponential,
    /// Bracket corrections plus the pre-exponential factor.
    FullCorrected,
}

/// A fully specified asymptotic form.
#[derive(Debug, Clone)]
pub struct AsymptoticForm {
    pub statistics: Statistics,
    pub order: Order,
    pub constants: ConstantsBundle,
}

impl AsymptoticForm {
    pub fn ln_value(&self, n: f64) -> Result<f64, AsymptoticsError> {
        match (self.statistics, self.order) {
            (Statistics::Fermionic, Order::LeadingExponential) => ln_q0(n),
            (Statistics::Fermionic, Order::FullCorrected) => ln_q_as(n, &self.constants),
            (Statistics::Bosonic, Order::LeadingExponential) => leading_exponent(n, 3.0),
            (Statistics::Bosonic, Order::FullCorrected) => ln_p_as(n, &self.constants),
        }
    }
}

fn check_domain(n: f64) -> Result<(), AsymptoticsError> {
    if !(n >= 2.0) {
        return Err(AsymptoticsError::Domain(n));
    }
    Ok(())
}

/// `2 pi sqrt(n / (slot * ln n))`.
fn leading_exponent(n: f64, slot: f64) -> Result<f64, AsymptoticsError> {
    check_domain(n)?;
    Ok(2.0 * PI * (n / (slot * n.ln())).sqrt())
}

/// Exponent and log-prefactor of a corrected form; their sum is the log of
/// the corrected count. Exposed as parts so the pre-exponential factor can be
/// switched off and the bare bracket exponent recovered exactly.
fn corrected_parts(n: f64, slot: f64, coeff: f64) -> Result<(f64, f64), AsymptoticsError> {
    check_domain(n)?;
    let ln_n = n.ln();
    let bracket = 1.0 - ln_n.ln() / (2.0 * ln_n) + coeff / ln_n;
    let exponent = 2.0 * PI * (n / (slot * ln_n)).sqrt() * bracket;
    let ln_prefactor = -0.5 * (4.0 * n.powf(1.5) * (slot * ln_n).sqrt()).ln();
    Ok((exponent, ln_prefactor))
}

/// Log of the leading-order form `Q_0(n) = exp(2 pi sqrt(n/(6 ln n)))`.
pub fn ln_q0(n: f64) -> Result<f64, AsymptoticsError> {
    leading_exponent(n, 6.0)
}

/// Log of the corrected distinct-prime form.
pub fn ln_q_as(n: f64, constants: &ConstantsBundle) -> Result<f64, AsymptoticsError> {
    let (exponent, ln_prefactor) = ln_q_as_parts(n, constants)?;
    Ok(exponent + ln_prefactor)
}

/// Bracket exponent and log-prefactor of the corrected distinct-prime form.
pub fn ln_q_as_parts(n: f64, constants: &ConstantsBundle) -> Result<(f64, f64), AsymptoticsError> {
    corrected_parts(n, 6.0, constants.b_fermi)
}

/// Log of the corrected unrestricted-prime form.
///
/// The linear-correction coefficient is evaluated from the entropy
/// coefficients directly, `bose_c2/bose_c1 + ln(pi/sqrt(3))`; it equals
/// `1 + constants.b_bose`.
pub fn ln_p_as(n: f64, constants: &ConstantsBundle) -> Result<f64, AsymptoticsError> {
    let (exponent, ln_prefactor) = ln_p_as_parts(n, constants)?;
    Ok(exponent + ln_prefactor)
}

/// Bracket exponent and log-prefactor of the corrected unrestricted form.
pub fn ln_p_as_parts(n: f64, constants: &ConstantsBundle) -> Result<(f64, f64), AsymptoticsError> {
    let coeff = constants.bose_c2 / constants.bose_c1 + (PI / 3f64.sqrt()).ln();
    corrected_parts(n, 3.0, coeff)
}

/// Result of leaving log space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExpValue {
    Finite(f64),
    /// `exp(ln_value)` exceeds the `f64` range.
    Overflow,
}

impl ExpValue {
    pub fn as_finite(self) -> Option<f64> {
        match self {
            ExpValue::Finite(v) => Some(v),
            ExpValue::Overflow => None,
        }
    }

    pub fn is_overflow(self) -> bool {
        matches!(self, ExpValue::Overflow)
    }
}

impl std::fmt::Display for ExpValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExpValue::Finite(v) => write!(f, "{v:.6e}"),
            ExpValue::Overflow => write!(f, "OVERFLOW"),
        }
    }
}

/// `exp(ln_value)` with an explicit overflow marker, never a silent infinity.
pub fn value_of(ln_value: f64) -> ExpValue {
    let v = ln_value.exp();
    if v.is_infinite() {
        ExpValue::Overflow
    } else {
        ExpValue::Finite(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::constants_bundle;
    use std::f64::consts::E;

    fn bundle() -> ConstantsBundle {
        constants_bundle().unwrap()
    }

    #[test]
    fn leading_form_at_e() {
        // ln(e) = 1 exactly, so the value reduces to 2 pi sqrt(e/6)
        let expected = 2.0 * PI * (E / 6.0).sqrt();
        assert!((ln_q0(E).unwrap() - expected).abs() < 1e-12);
        assert!((expected - 4.2291343711).abs() < 1e-9);
    }

    #[test]
    fn leading_form_values() {
        assert!((ln_q0(1e5).unwrap() - 239.062466870374).abs() < 1e-8);
        assert!((ln_q0(1e4).unwrap() - 84.5213457256).abs() < 1e-8);
        assert!(ln_q0(1e4).unwrap() < ln_q0(1e5).unwrap());
    }

    #[test]
    fn domain_is_enforced() {
        assert!(ln_q0(1.9).is_err());
        assert!(ln_q0(f64::NAN).is_err());
        assert!(ln_q_as(0.0, &bundle()).is_err());
        assert!(ln_p_as(-3.0, &bundle()).is_err());
    }

    #[test]
    fn corrected_bracket_structure_at_e() {
        // at n = e the double log vanishes, so the bracket is 1 + bF
        let c = bundle();
        let (exponent, ln_pre) = ln_q_as_parts(E, &c).unwrap();
        let expected_exponent = 2.0 * PI * (E / 6.0).sqrt() * (1.0 + c.b_fermi);
        assert!((exponent - expected_exponent).abs() < 1e-12);
        let value = ln_q_as(E, &c).unwrap();
        assert_eq!(value, exponent + ln_pre);
        assert!((value - 5.31061972018).abs() < 1e-9);
    }

    #[test]
    fn corrected_values() {
        let c = bundle();
        assert!((ln_q_as(1e4, &c).unwrap() - 72.1798646337).abs() < 1e-7);
        assert!((ln_q_as(5e4, &c).unwrap() - 156.660468204).abs() < 1e-7);
        assert!((ln_q_as(1e5, &c).unwrap() - 217.901937234).abs() < 1e-7);
        assert!((ln_p_as(1e4, &c).unwrap() - 119.308324819).abs() < 1e-7);
    }

    #[test]
    fn corrections_vanish_relative_to_leading() {
        let c = bundle();
        let mut prev = f64::INFINITY;
        for exp in 3..=12 {
            let n = 10f64.powi(exp);
            let rel = (ln_q_as(n, &c).unwrap() - ln_q0(n).unwrap()).abs() / ln_q0(n).unwrap();
            assert!(rel < prev, "relative correction grew at n=1e{exp}");
            prev = rel;
        }
    }

    #[test]
    fn bosonic_coefficient_relates_to_tabulated_constant() {
        let c = bundle();
        let coeff = c.bose_c2 / c.bose_c1 + (PI / 3f64.sqrt()).ln();
        assert!((coeff - (1.0 + c.b_bose)).abs() < 1e-12);
    }

    #[test]
    fn bosonic_dominates_fermionic() {
        let c = bundle();
        for n in [2.0, 10.0, 100.0, 1e3, 1e4, 1e5] {
            assert!(ln_q_as(n, &c).unwrap() < ln_p_as(n, &c).unwrap(), "n={n}");
        }
    }

    #[test]
    fn leading_ratio_tends_to_sqrt2() {
        // bosonic leading / fermionic leading = sqrt(2) at every n
        let c = bundle();
        let bos = AsymptoticForm {
            statistics: Statistics::Bosonic,
            order: Order::LeadingExponential,
            constants: c,
        };
        for n in [100.0, 1e4, 1e8] {
            let ratio = bos.ln_value(n).unwrap() / ln_q0(n).unwrap();
            assert!((ratio - 2f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn bracket_stays_in_range() {
        let c = bundle();
        for exp in [2, 3, 4, 5, 8, 12] {
            let n = 10f64.powi(exp);
            let ln_n = n.ln();
            let bracket = 1.0 - ln_n.ln() / (2.0 * ln_n) + c.b_fermi / ln_n;
            assert!(bracket > 0.0 && bracket < 1.5, "n=1e{exp}: {bracket}");
        }
    }

    #[test]
    fn form_dispatch_matches_free_functions() {
        let c = bundle();
        let q0 = AsymptoticForm {
            statistics: Statistics::Fermionic,
            order: Order::LeadingExponential,
            constants: c.clone(),
        };
        let qas = AsymptoticForm {
            statistics: Statistics::Fermionic,
            order: Order::FullCorrected,
            constants: c.clone(),
        };
        assert_eq!(q0.ln_value(777.0).unwrap(), ln_q0(777.0).unwrap());
        assert_eq!(qas.ln_value(777.0).unwrap(), ln_q_as(777.0, &c).unwrap());
    }

    #[test]
    fn value_of_behaviour() {
        assert_eq!(value_of(0.0), ExpValue::Finite(1.0));
        assert_eq!(value_of(239.07), ExpValue::Finite(239.07f64.exp()));
        assert!(value_of(1000.0).is_overflow());
        assert!(value_of(709.0).as_finite().is_some());
        assert!(value_of(710.0).is_overflow());
        assert_eq!(format!("{}", value_of(1000.0)), "OVERFLOW");
    }

    #[test]
    fn log_space_identity() {
        for n in [2.0, 50.0, 1e4, 1e5] {
            let ln_v = ln_q0(n).unwrap();
            assert_eq!(value_of(ln_v), ExpValue::Finite(ln_v.exp()));
        }
    }
}
