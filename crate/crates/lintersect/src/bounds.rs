//! Exact evaluation of the classical upper bounds on the size of a
//! k-uniform, L-intersecting family, each with its applicability condition.
//!
//! Every value is computed in exact integer or rational arithmetic; rational
//! bounds are floored, since family sizes are integers. A bound whose
//! theorem carries an unspecified threshold `n0` is reported with
//! applicability `unknown` rather than silently asserted.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::LSpec;

/// Exact binomial coefficient `C(n, r)`; zero outside `0..=n`.
pub fn binomial(n: u64, r: i64) -> BigUint {
    if r < 0 || r as u64 > n {
        return BigUint::zero();
    }
    let r = (r as u64).min(n - r as u64);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("n must be at least 1")]
    NTooSmall,
    #[error("s must satisfy 0 < s <= n (s = {s}, n = {n})")]
    SOutOfRange { s: u64, n: u64 },
    #[error("s must satisfy 1 <= s < n (s = {s}, n = {n})")]
    SNotBelowN { s: u64, n: u64 },
    #[error("k must satisfy 0 < k <= n (k = {k}, n = {n})")]
    KOutOfRange { k: u64, n: u64 },
    #[error("t must satisfy 0 < t < k (t = {t}, k = {k})")]
    TOutOfRange { t: u64, k: u64 },
    #[error("t-intersecting bound requires k < n (k = {k}, n = {n})")]
    KNotBelowN { k: u64, n: u64 },
    #[error("lambda must satisfy 0 < lambda < k (lambda = {lambda}, k = {k})")]
    LambdaOutOfRange { lambda: u64, k: u64 },
    #[error("L must contain only positive integers")]
    LNotPositive,
    #[error("L contains {ell}, but distinct {k}-sets intersect in at most {max} elements")]
    EllTooLarge { ell: u32, k: u64, max: u64 },
    #[error("condition denominator nonpositive: n <= 2(s-1) (n = {n}, s = {s})")]
    DenominatorNonpositive { n: u64, s: u64 },
}

/// Applicability verdict for a bound report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Applicability {
    Yes,
    No,
    /// The theorem holds for `n > n0(...)` with `n0` left unspecified.
    Unknown,
}

impl fmt::Display for Applicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Applicability::Yes => write!(f, "yes"),
            Applicability::No => write!(f, "no"),
            Applicability::Unknown => write!(f, "unknown"),
        }
    }
}

/// One evaluated upper bound: exact value, applicability verdict, the
/// hypothesis that was checked, and the classical attribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    #[serde(with = "crate::serde_util::biguint_dec")]
    pub value: BigUint,
    pub applicable: Applicability,
    pub condition: String,
    pub citation: String,
}

impl BoundReport {
    fn new(
        name: &str,
        value: BigUint,
        applicable: Applicability,
        condition: String,
        citation: &str,
    ) -> Self {
        Self {
            name: name.to_string(),
            value,
            applicable,
            condition,
            citation: citation.to_string(),
        }
    }
}

/// `m <= n` for families with a constant positive pairwise intersection.
pub fn bound_bose(n: u64) -> Result<BoundReport, BoundsError> {
    if n == 0 {
        return Err(BoundsError::NTooSmall);
    }
    Ok(BoundReport::new(
        "bose",
        BigUint::from(n),
        Applicability::Yes,
        "all pairwise intersections equal a fixed lambda > 0 (no size condition)".into(),
        "Bose; Majumdar (nonuniform)",
    ))
}

/// `m <= C(n, s)` for L-intersecting k-uniform families, `|L| = s`.
pub fn bound_rw(n: u64, s: u64) -> Result<BoundReport, BoundsError> {
    if s == 0 || s > n {
        return Err(BoundsError::SOutOfRange { s, n });
    }
    Ok(BoundReport::new(
        "rw",
        binomial(n, s as i64),
        Applicability::Yes,
        "L a set of s nonnegative integers (no size condition)".into(),
        "Ray-Chaudhuri-Wilson",
    ))
}

/// `m <= sum_{i=0..s} C(n-1, i)` for families with all pairwise
/// intersections positive and in a set of s values.
pub fn bound_frankl_furedi(n: u64, s: u64) -> Result<BoundReport, BoundsError> {
    if s == 0 || s >= n {
        return Err(BoundsError::SNotBelowN { s, n });
    }
    let mut value = BigUint::zero();
    for i in 0..=s {
        value += binomial(n - 1, i as i64);
    }
    Ok(BoundReport::new(
        "frankl-furedi",
        value,
        Applicability::Yes,
        "L a set of s positive integers (no size condition)".into(),
        "Frankl-Furedi conjecture; Ramanan; Snevily",
    ))
}

/// `m <= C(n - l1, s)` for k-uniform families with positive L, applicable
/// once `n >= C(k^2, l1+1) * s + l1`.
pub fn bound_main(n: u64, k: u64, l: &LSpec) -> Result<BoundReport, BoundsError> {
    if k == 0 || k > n {
        return Err(BoundsError::KOutOfRange { k, n });
    }
    if !l.is_positive() {
        return Err(BoundsError::LNotPositive);
    }
    if l.ell_max() as u64 > k - 1 {
        return Err(BoundsError::EllTooLarge {
            ell: l.ell_max(),
            k,
            max: k - 1,
        });
    }
    let s = l.s() as u64;
    let ell1 = l.ell1() as u64;
    let threshold = binomial(k * k, ell1 as i64 + 1) * s + ell1;
    let applicable = if BigUint::from(n) >= threshold {
        Applicability::Yes
    } else {
        Applicability::No
    };
    Ok(BoundReport::new(
        "main",
        binomial(n - ell1, s as i64),
        applicable,
        format!("n >= C(k^2, l1+1)*s + l1 = {threshold}"),
        "l1-shift bound for positive L (via Ray-Chaudhuri-Wilson)",
    ))
}

/// `m <= n - lambda` for k-uniform families with constant intersection
/// `lambda`, applicable once `n >= C(k^2, lambda+1) + lambda`.
pub fn bound_fisher_uniform(n: u64, k: u64, lambda: u64) -> Result<BoundReport, BoundsError> {
    if lambda == 0 || lambda >= k {
        return Err(BoundsError::LambdaOutOfRange { lambda, k });
    }
    if k > n {
        return Err(BoundsError::KOutOfRange { k, n });
    }
    let threshold = binomial(k * k, lambda as i64 + 1) + lambda;
    let applicable = if BigUint::from(n) >= threshold {
        Applicability::Yes
    } else {
        Applicability::No
    };
    Ok(BoundReport::new(
        "fisher",
        BigUint::from(n - lambda),
        applicable,
        format!("n >= C(k^2, lambda+1) + lambda = {threshold}"),
        "Fisher-type inequality, uniform case",
    ))
}

/// `m <= C(n - t, k - t)` for t-intersecting k-uniform families, applicable
/// once `n >= (k-t) * C(k^2, t+1) + t`. The general theorem's own threshold
/// `n0(k, t)` is not specified anywhere, so only this explicit condition is
/// checked.
pub fn bound_ekr(n: u64, k: u64, t: u64) -> Result<BoundReport, BoundsError> {
    if t == 0 || t >= k {
        return Err(BoundsError::TOutOfRange { t, k });
    }
    if k >= n {
        return Err(BoundsError::KNotBelowN { k, n });
    }
    let threshold = binomial(k * k, t as i64 + 1) * (k - t) + t;
    let applicable = if BigUint::from(n) >= threshold {
        Applicability::Yes
    } else {
        Applicability::No
    };
    Ok(BoundReport::new(
        "ekr",
        binomial(n - t, (k - t) as i64),
        applicable,
        format!("n >= (k-t)*C(k^2, t+1) + t = {threshold} (threshold n0(k,t) of the general statement unspecified)"),
        "Erdos-Ko-Rado",
    ))
}

/// `m <= floor(prod_i (n - l_i)/(k - l_i))`, valid for `n > n0(k, L)` with
/// `n0` unspecified, hence always reported as `unknown`.
pub fn bound_edf(n: u64, k: u64, l: &LSpec) -> Result<BoundReport, BoundsError> {
    if k == 0 || k > n {
        return Err(BoundsError::KOutOfRange { k, n });
    }
    if l.ell_max() as u64 >= k {
        return Err(BoundsError::EllTooLarge {
            ell: l.ell_max(),
            k,
            max: k - 1,
        });
    }
    let mut value = BigRational::one();
    for &ell in l.values() {
        let num = BigInt::from(n - ell as u64);
        let den = BigInt::from(k - ell as u64);
        value *= BigRational::new(num, den);
    }
    let floored = value
        .floor()
        .to_integer()
        .to_biguint()
        .expect("product of nonnegative factors");
    Ok(BoundReport::new(
        "edf",
        floored,
        Applicability::Unknown,
        "holds for n > n0(k, L); n0 unspecified".into(),
        "Deza-Erdos-Frankl",
    ))
}

/// `m <= floor(C(n,s) - C(n,s-1) * (n-2s+3)/(n-s+2))`, applicable when the
/// exact rational condition
/// `s (k^2 - (s-1)) (2k - n/2) / (n - 2(s-1)) <= sum(L)` holds.
pub fn bound_barg_musin(n: u64, k: u64, l: &LSpec) -> Result<BoundReport, BoundsError> {
    let s = l.s() as u64;
    if n <= 2 * (s - 1) {
        return Err(BoundsError::DenominatorNonpositive { n, s });
    }
    if s > n {
        return Err(BoundsError::SOutOfRange { s, n });
    }

    // lhs = s (k^2 - (s-1)) (4k - n) / (2 (n - 2s + 2)), with 2k - n/2
    // cleared of the half.
    let num = BigInt::from(s)
        * (BigInt::from(k * k) - BigInt::from(s - 1))
        * (BigInt::from(4 * k) - BigInt::from(n));
    let den = BigInt::from(2u64) * BigInt::from(n + 2 - 2 * s);
    let lhs = BigRational::new(num, den);
    let rhs = BigRational::from_integer(BigInt::from(l.sum()));
    let applicable = if lhs <= rhs {
        Applicability::Yes
    } else {
        Applicability::No
    };

    let c_s = BigInt::from(binomial(n, s as i64));
    let c_s1 = BigInt::from(binomial(n, s as i64 - 1));
    let correction = BigRational::new(
        c_s1 * (BigInt::from(n) - BigInt::from(2 * s) + BigInt::from(3u64)),
        BigInt::from(n - s + 2),
    );
    let value = BigRational::from_integer(c_s) - correction;
    let floored = value.floor().to_integer();
    debug_assert!(!floored.is_negative());
    Ok(BoundReport::new(
        "barg-musin",
        floored.to_biguint().unwrap_or_default(),
        applicable,
        format!("s(k^2-(s-1))(2k-n/2)/(n-2(s-1)) <= sum(L): {lhs} <= {rhs}"),
        "Barg-Musin",
    ))
}

/// All bounds evaluated for one parameter triple, plus the minimum over the
/// reports whose hypotheses hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSurvey {
    pub reports: Vec<BoundReport>,
    /// Bounds whose preconditions failed outright: (name, error text).
    pub errors: Vec<(String, String)>,
    /// Minimum value among reports with `applicable = yes`; ties keep the
    /// earliest report.
    pub best: Option<BoundReport>,
}

/// Evaluates every bound whose hypotheses are meaningful for `(n, k, L)`.
/// Constituent errors are recorded per bound, never fatal.
pub fn best_bound(n: u64, k: u64, l: &LSpec) -> BoundSurvey {
    let s = l.s() as u64;
    let positive = l.is_positive();

    let mut reports = Vec::new();
    let mut errors = Vec::new();
    let mut push = |name: &str, result: Result<BoundReport, BoundsError>| match result {
        Ok(report) => reports.push(report),
        Err(e) => errors.push((name.to_string(), e.to_string())),
    };

    if positive {
        push("main", bound_main(n, k, l));
    }
    push("rw", bound_rw(n, s));
    if positive {
        push("frankl-furedi", bound_frankl_furedi(n, s));
    }
    if s == 1 && positive {
        push("bose", bound_bose(n));
        push("fisher", bound_fisher_uniform(n, k, l.ell1() as u64));
    }
    if positive {
        push("ekr", bound_ekr(n, k, l.ell1() as u64));
    }
    push("edf", bound_edf(n, k, l));
    push("barg-musin", bound_barg_musin(n, k, l));

    let mut best: Option<BoundReport> = None;
    for report in &reports {
        if report.applicable != Applicability::Yes {
            continue;
        }
        match &best {
            Some(b) if b.value <= report.value => {}
            _ => best = Some(report.clone()),
        }
    }
    BoundSurvey {
        reports,
        errors,
        best,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(values: &[u32]) -> LSpec {
        LSpec::new(values.to_vec()).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(7, 3), big(35));
        assert_eq!(binomial(5, 0), big(1));
        assert_eq!(binomial(4, 7), big(0));
        assert_eq!(binomial(4, -1), big(0));
        assert_eq!(binomial(1000, 2), big(499500));
    }

    #[test]
    fn binomial_pascal_and_symmetry_grid() {
        for n in 1..=200u64 {
            for r in 0..=n.min(12) {
                let lhs = binomial(n, r as i64);
                let rhs = binomial(n - 1, r as i64 - 1) + binomial(n - 1, r as i64);
                assert_eq!(lhs, rhs, "pascal failed at ({n},{r})");
                assert_eq!(
                    lhs,
                    binomial(n, (n - r) as i64),
                    "symmetry failed at ({n},{r})"
                );
            }
        }
    }

    #[test]
    fn rw_values() {
        assert_eq!(bound_rw(7, 1).unwrap().value, big(7));
        assert_eq!(bound_rw(10, 3).unwrap().value, big(120));
        assert_eq!(bound_rw(13, 1).unwrap().value, big(13));
        assert!(bound_rw(5, 0).is_err());
        assert!(bound_rw(5, 6).is_err());
    }

    #[test]
    fn main_bound_values_and_condition() {
        let r = bound_main(40, 3, &l(&[1])).unwrap();
        assert_eq!(r.value, big(39));
        assert_eq!(r.applicable, Applicability::Yes);

        let r = bound_main(7, 3, &l(&[1])).unwrap();
        assert_eq!(r.value, big(6));
        assert_eq!(r.applicable, Applicability::No);

        let r = bound_main(1122, 4, &l(&[2, 3])).unwrap();
        assert_eq!(r.value, big(626640));
        assert_eq!(r.applicable, Applicability::Yes);

        assert!(matches!(
            bound_main(10, 3, &l(&[3])),
            Err(BoundsError::EllTooLarge { .. })
        ));
        assert!(matches!(
            bound_main(10, 3, &l(&[0, 1])),
            Err(BoundsError::LNotPositive)
        ));
    }

    #[test]
    fn frankl_furedi_values() {
        assert_eq!(bound_frankl_furedi(7, 1).unwrap().value, big(7));
        assert_eq!(bound_frankl_furedi(10, 2).unwrap().value, big(46));
        assert_eq!(bound_frankl_furedi(13, 1).unwrap().value, big(13));
    }

    #[test]
    fn bose_values() {
        for n in [7u64, 13, 1] {
            assert_eq!(bound_bose(n).unwrap().value, big(n));
        }
        assert!(bound_bose(0).is_err());
    }

    #[test]
    fn fisher_values() {
        let r = bound_fisher_uniform(100, 3, 1).unwrap();
        assert_eq!(
            (r.value.clone(), r.applicable),
            (big(99), Applicability::Yes)
        );

        let r = bound_fisher_uniform(20, 3, 1).unwrap();
        assert_eq!(
            (r.value.clone(), r.applicable),
            (big(19), Applicability::No)
        );

        // C(9,3) = 84, threshold 86 <= 90
        let r = bound_fisher_uniform(90, 3, 2).unwrap();
        assert_eq!(
            (r.value.clone(), r.applicable),
            (big(88), Applicability::Yes)
        );

        assert!(bound_fisher_uniform(10, 3, 3).is_err());
    }

    #[test]
    fn ekr_values() {
        let r = bound_ekr(10, 4, 2).unwrap();
        assert_eq!(
            (r.value.clone(), r.applicable),
            (big(28), Applicability::No)
        );

        let r = bound_ekr(1122, 4, 2).unwrap();
        assert_eq!(
            (r.value.clone(), r.applicable),
            (big(626640), Applicability::Yes)
        );

        // t = k-1 gives C(n-k+1, 1) = n-k+1
        assert_eq!(bound_ekr(12, 5, 4).unwrap().value, big(8));
        assert!(bound_ekr(10, 4, 4).is_err());
        assert!(bound_ekr(4, 4, 2).is_err());
    }

    #[test]
    fn edf_values() {
        let r = bound_edf(100, 4, &l(&[1, 2, 3])).unwrap();
        assert_eq!(r.value, big(156849));
        assert_eq!(r.applicable, Applicability::Unknown);

        assert_eq!(bound_edf(7, 3, &l(&[1])).unwrap().value, big(3));
        // n = k+1, L = {k-1}: (k+1-(k-1))/1 = 2
        assert_eq!(bound_edf(6, 5, &l(&[4])).unwrap().value, big(2));
        assert!(bound_edf(10, 3, &l(&[3])).is_err());
    }

    #[test]
    fn barg_musin_values() {
        let r = bound_barg_musin(20, 5, &l(&[1, 2, 3])).unwrap();
        assert_eq!(
            (r.value.clone(), r.applicable),
            (big(970), Applicability::Yes)
        );

        // condition 16/3 > 3; value C(8,2) - C(8,1)*7/8 = 21
        let r = bound_barg_musin(8, 3, &l(&[1, 2])).unwrap();
        assert_eq!(
            (r.value.clone(), r.applicable),
            (big(21), Applicability::No)
        );

        // left side nonpositive when 4k <= n
        let r = bound_barg_musin(200, 5, &l(&[1, 2, 3])).unwrap();
        assert_eq!(r.applicable, Applicability::Yes);

        assert!(matches!(
            bound_barg_musin(4, 3, &l(&[1, 2, 3])),
            Err(BoundsError::DenominatorNonpositive { .. })
        ));
    }

    #[test]
    fn best_bound_examples() {
        let survey = best_bound(40, 3, &l(&[1]));
        let best = survey.best.unwrap();
        assert_eq!((best.name.as_str(), best.value), ("main", big(39)));

        let survey = best_bound(7, 3, &l(&[1]));
        let best = survey.best.unwrap();
        assert_eq!((best.name.as_str(), best.value), ("rw", big(7)));

        let survey = best_bound(100, 3, &l(&[1, 2]));
        let ff = survey
            .reports
            .iter()
            .find(|r| r.name == "frankl-furedi")
            .unwrap();
        assert_eq!(ff.value, big(4951));
        let main = survey.reports.iter().find(|r| r.name == "main").unwrap();
        assert_eq!(main.value, big(4851));
        assert_eq!(survey.best.unwrap().value, big(4851));
    }

    #[test]
    fn best_bound_with_zero_in_l_skips_positive_only_bounds() {
        let survey = best_bound(10, 3, &l(&[0, 1]));
        assert!(survey.reports.iter().all(|r| r.name != "main"));
        assert!(survey.reports.iter().any(|r| r.name == "rw"));
        assert!(survey.best.is_some());
    }

    #[test]
    fn main_never_exceeds_rw_when_applicable() {
        for n in 1..=40u64 {
            for k in 2..=6u64.min(n) {
                for ell1 in 1..k.min(4) {
                    for s in 1..=(k - ell1).min(3) {
                        let values: Vec<u32> = (0..s).map(|i| (ell1 + i) as u32).collect();
                        let spec = LSpec::new(values).unwrap();
                        let main = match bound_main(n, k, &spec) {
                            Ok(r) => r,
                            Err(_) => continue,
                        };
                        let rw = bound_rw(n, s).unwrap();
                        if main.applicable == Applicability::Yes {
                            assert!(main.value <= rw.value, "n={n} k={k} L={spec}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn frankl_furedi_dominates_top_term() {
        for n in 3..=30u64 {
            for s in 1..n.min(5) {
                let ff = bound_frankl_furedi(n, s).unwrap();
                assert!(ff.value >= binomial(n - 1, s as i64));
            }
        }
    }

    #[test]
    fn reports_serialize_with_decimal_strings() {
        let r = bound_main(1122, 4, &l(&[2, 3])).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["value"], serde_json::json!("626640"));
        let back: BoundReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }
}
