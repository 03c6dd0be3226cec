//! One verified inequality in log space, with a tolerance-classified status.

use serde::{Deserialize, Serialize};

use crate::numeric::Fix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Tight,
    Fail,
}

/// A check `lhs <= rhs` recorded as natural logs of the two sides.
///
/// `status` is derived from the stored f64 fields, so the status/margin
/// relation holds by construction: pass iff margin > eps, fail iff
/// margin < -eps, tight otherwise, with eps = 1e-9 * max(1, |lhs_log|).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: String,
    pub group: String,
    pub lhs_log: f64,
    pub rhs_log: f64,
    pub status: CheckStatus,
    pub witness: serde_json::Value,
}

impl CheckOutcome {
    pub fn epsilon(lhs_log: f64) -> f64 {
        1e-9 * lhs_log.abs().max(1.0)
    }

    pub fn status_for(lhs_log: f64, rhs_log: f64) -> CheckStatus {
        let margin = rhs_log - lhs_log;
        let eps = Self::epsilon(lhs_log);
        if margin > eps {
            CheckStatus::Pass
        } else if margin < -eps {
            CheckStatus::Fail
        } else {
            CheckStatus::Tight
        }
    }

    /// Builds an outcome from high-precision sides; the narrowed f64 values
    /// are what get stored and classified.
    pub fn classify(
        check: &str,
        group: &str,
        lhs: &Fix,
        rhs: &Fix,
        witness: serde_json::Value,
    ) -> CheckOutcome {
        let lhs_log = lhs.to_f64();
        let rhs_log = rhs.to_f64();
        CheckOutcome {
            check: check.to_string(),
            group: group.to_string(),
            lhs_log,
            rhs_log,
            status: Self::status_for(lhs_log, rhs_log),
            witness,
        }
    }

    pub fn margin(&self) -> f64 {
        self.rhs_log - self.lhs_log
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, CheckStatus::Pass | CheckStatus::Tight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Fix;

    #[test]
    fn classification_bands() {
        assert_eq!(CheckOutcome::status_for(0.0, 1.0), CheckStatus::Pass);
        assert_eq!(CheckOutcome::status_for(1.0, 0.0), CheckStatus::Fail);
        assert_eq!(CheckOutcome::status_for(1.0, 1.0 + 1e-12), CheckStatus::Tight);
        assert_eq!(CheckOutcome::status_for(1.0, 1.0 - 1e-12), CheckStatus::Tight);
        // relative band scales with |lhs|
        assert_eq!(
            CheckOutcome::status_for(100.0, 100.0 + 5e-8),
            CheckStatus::Tight
        );
    }

    #[test]
    fn status_margin_relation_by_construction() {
        for (l, r) in [(0.0, 0.5), (2.0, 2.0), (3.0, 1.0), (5.0, 5.0 + 1e-10)] {
            let o = CheckOutcome::classify(
                "c",
                "g",
                &Fix::from_ratio(
                    &num_bigint::BigInt::from((l * 1e9) as i64),
                    &num_bigint::BigInt::from(1_000_000_000u64),
                ),
                &Fix::from_ratio(
                    &num_bigint::BigInt::from((r * 1e9) as i64),
                    &num_bigint::BigInt::from(1_000_000_000u64),
                ),
                serde_json::Value::Null,
            );
            let eps = CheckOutcome::epsilon(o.lhs_log);
            match o.status {
                CheckStatus::Pass => assert!(o.margin() > eps),
                CheckStatus::Fail => assert!(o.margin() < -eps),
                CheckStatus::Tight => assert!(o.margin().abs() <= eps),
            }
        }
    }

    #[test]
    fn serialization_roundtrip_is_bit_exact() {
        let o = CheckOutcome {
            check: "demo".into(),
            group: "g1".into(),
            lhs_log: std::f64::consts::LN_2 * 17.0,
            rhs_log: 42.1234567890123456,
            status: CheckStatus::Pass,
            witness: serde_json::json!({"m": 3}),
        };
        let s = serde_json::to_string(&o).unwrap();
        let back: CheckOutcome = serde_json::from_str(&s).unwrap();
        assert_eq!(back.lhs_log.to_bits(), o.lhs_log.to_bits());
        assert_eq!(back.rhs_log.to_bits(), o.rhs_log.to_bits());
        assert_eq!(back.margin().to_bits(), o.margin().to_bits());
    }
}
