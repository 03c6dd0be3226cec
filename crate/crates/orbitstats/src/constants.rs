//! The bound constants: lambda = 24^(1/3), alpha = ln(6 lambda) / ln 3, and
//! beta = (2.25 / 3.25) alpha. All three are derived from those defining
//! expressions in 45-digit fixed point, and the two analytic identities
//! lambda^3 = 24 and 3^alpha = 6 lambda are verifiable to full working
//! precision.

use num_bigint::BigInt;
use once_cell::sync::Lazy;

use crate::numeric::{icbrt, ln_u128, Fix, FIX_DIGITS, LN2};

pub struct BoundConstants {
    pub lambda: Fix,
    pub ln_lambda: Fix,
    pub alpha: Fix,
    pub beta: Fix,
    pub ln2: Fix,
    pub ln3: Fix,
    pub ln6: Fix,
}

static CONSTANTS: Lazy<BoundConstants> = Lazy::new(|| {
    // lambda as the integer cube root of 24 * 10^(3*45), re-scaled
    let radicand = BigInt::from(24u8) * BigInt::from(10u8).pow(3 * FIX_DIGITS);
    let lambda = Fix::from_raw(icbrt(&radicand));
    let ln3 = ln_u128(3);
    let ln6 = ln_u128(6);
    let ln_lambda = ln_u128(24).div_int(3);
    let alpha = ln6.add(&ln_lambda).div(&ln3);
    let beta = alpha.mul_ratio(9, 13); // 2.25 / 3.25 = 9/13 exactly
    BoundConstants {
        lambda,
        ln_lambda,
        alpha,
        beta,
        ln2: LN2.clone(),
        ln3,
        ln6,
    }
});

pub fn constants() -> &'static BoundConstants {
    &CONSTANTS
}

impl BoundConstants {
    /// Residuals of the two analytic identities, in fixed point:
    /// |lambda^3 - 24| and |alpha ln 3 - ln(6 lambda)|. Both must vanish to
    /// working precision because the constants are computed from their
    /// definitions.
    pub fn identity_residuals(&self) -> (Fix, Fix) {
        let cube = self.lambda.mul(&self.lambda).mul(&self.lambda);
        let r1 = cube.sub(&Fix::from_int(24)).abs();
        let r2 = self
            .alpha
            .mul(&self.ln3)
            .sub(&self.ln6)
            .sub(&self.ln_lambda)
            .abs();
        (r1, r2)
    }

    /// Both identity residuals are below 10^-40.
    pub fn identities_hold(&self) -> bool {
        let bound = Fix::from_ratio(
            &BigInt::from(1),
            &BigInt::from(10u8).pow(40),
        );
        let (r1, r2) = self.identity_residuals();
        r1 < bound && r2 < bound
    }
}

/// Smallest k with order <= lambda^k, decided exactly: order^3 <= 24^k.
pub fn k_of(order: u128) -> u32 {
    assert!(order >= 1);
    let cube = BigInt::from(order).pow(3);
    let mut pow = BigInt::from(1u8);
    let mut k = 0u32;
    while pow < cube {
        pow *= 24u8;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    const LAMBDA_REF: &str = "2.884499140614816764643276621560219176783738506998";
    const ALPHA_REF: &str = "2.595192840476248207532387562018855041932504613597";
    const BETA_REF: &str = "1.796671966483556451368576004474591952107118578644";
    const LN_LAMBDA_REF: &str = "1.059351276782648539882313867099018469624663653634";

    #[test]
    fn constants_match_reference_digits() {
        let c = constants();
        assert_eq!(&c.lambda.to_decimal_string(40)[..30], &LAMBDA_REF[..30]);
        assert_eq!(&c.alpha.to_decimal_string(40)[..30], &ALPHA_REF[..30]);
        assert_eq!(&c.beta.to_decimal_string(40)[..30], &BETA_REF[..30]);
        assert_eq!(
            &c.ln_lambda.to_decimal_string(40)[..30],
            &LN_LAMBDA_REF[..30]
        );
    }

    #[test]
    fn four_decimal_approximations() {
        let c = constants();
        assert!((c.alpha.to_f64() - 2.5952).abs() < 5e-5);
        assert!((c.beta.to_f64() - 1.7967).abs() < 5e-5);
        assert!((c.lambda.to_f64() - 2.8845).abs() < 5e-5);
    }

    #[test]
    fn alpha_agrees_with_float_route() {
        // independent double-precision recomputation of the definition
        let lam = 24f64.powf(1.0 / 3.0);
        let alpha = (6.0 * lam).ln() / 3f64.ln();
        assert!((constants().alpha.to_f64() - alpha).abs() < 1e-12);
        let beta = 2.25 / 3.25 * alpha;
        assert!((constants().beta.to_f64() - beta).abs() < 1e-12);
    }

    #[test]
    fn analytic_identities() {
        let c = constants();
        assert!(c.identities_hold());
        let (r1, r2) = c.identity_residuals();
        // residuals far below any f64 comparison could see
        assert!(r1.to_f64() < 1e-40);
        assert!(r2.to_f64() < 1e-40);
    }

    #[test]
    fn k_of_examples() {
        assert_eq!(k_of(1), 0);
        assert_eq!(k_of(2), 1); // 8 <= 24
        assert_eq!(k_of(6), 2); // 216 <= 576, 216 > 24
        assert_eq!(k_of(24), 3); // boundary inclusion: 24^3 = 24^3
        assert_eq!(k_of(25), 4);
    }

    #[test]
    fn k_of_monotone() {
        let mut prev = 0;
        for order in 1..2000u128 {
            let k = k_of(order);
            assert!(k >= prev);
            prev = k;
        }
    }
}
