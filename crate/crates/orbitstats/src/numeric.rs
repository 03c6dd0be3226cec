//! Fixed-point arithmetic on big integers, scaled by 10^45 (about 149 bits of
//! fractional precision), for the natural-log comparisons behind every
//! inequality check. Logarithms of integers come from the atanh series after
//! range reduction by powers of two, so every constant is computed from its
//! defining expression rather than from a decimal literal.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

/// Decimal digits of fractional precision.
pub const FIX_DIGITS: u32 = 45;

static SCALE: Lazy<BigInt> = Lazy::new(|| BigInt::from(10u32).pow(FIX_DIGITS));

/// A real number represented as `value * 10^45`, exact arithmetic on BigInt.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Fix(BigInt);

impl Fix {
    pub fn zero() -> Fix {
        Fix(BigInt::zero())
    }

    pub fn from_int(v: i128) -> Fix {
        Fix(BigInt::from(v) * &*SCALE)
    }

    pub fn from_u128(v: u128) -> Fix {
        Fix(BigInt::from(v) * &*SCALE)
    }

    /// The rational num/den as a fixed-point value (rounded toward zero).
    pub fn from_ratio(num: &BigInt, den: &BigInt) -> Fix {
        Fix(num * &*SCALE / den)
    }

    pub fn raw(&self) -> &BigInt {
        &self.0
    }

    pub fn from_raw(v: BigInt) -> Fix {
        Fix(v)
    }

    pub fn add(&self, o: &Fix) -> Fix {
        Fix(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Fix) -> Fix {
        Fix(&self.0 - &o.0)
    }

    pub fn neg(&self) -> Fix {
        Fix(-&self.0)
    }

    pub fn abs(&self) -> Fix {
        Fix(self.0.abs())
    }

    pub fn mul(&self, o: &Fix) -> Fix {
        Fix(&self.0 * &o.0 / &*SCALE)
    }

    pub fn div(&self, o: &Fix) -> Fix {
        Fix(&self.0 * &*SCALE / &o.0)
    }

    pub fn mul_int(&self, v: i128) -> Fix {
        Fix(&self.0 * BigInt::from(v))
    }

    pub fn div_int(&self, v: i128) -> Fix {
        Fix(&self.0 / BigInt::from(v))
    }

    /// Multiplication by the exact rational num/den.
    pub fn mul_ratio(&self, num: i128, den: i128) -> Fix {
        Fix(&self.0 * BigInt::from(num) / BigInt::from(den))
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        // exact for our magnitudes: |values| are logs below ~10^3
        self.0.to_f64().expect("finite") / 10f64.powi(FIX_DIGITS as i32)
    }

    /// Decimal rendering with the given number of fractional digits
    /// (truncated).
    pub fn to_decimal_string(&self, frac_digits: u32) -> String {
        let neg = self.0.is_negative();
        let v = self.0.abs();
        let int_part = &v / &*SCALE;
        let rem = &v % &*SCALE;
        let scaled = rem * BigInt::from(10u32).pow(frac_digits) / &*SCALE;
        let frac = format!("{:0width$}", scaled, width = frac_digits as usize);
        format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac)
    }
}

/// atanh(z) for |z| < 1/2 by its power series, in fixed point.
fn atanh_fix(z: &Fix) -> Fix {
    let z2 = z.mul(z);
    let mut term = z.clone();
    let mut acc = Fix::zero();
    let mut k: i128 = 0;
    loop {
        let contrib = term.div_int(2 * k + 1);
        if contrib.0.is_zero() {
            break;
        }
        acc = acc.add(&contrib);
        term = term.mul(&z2);
        k += 1;
        debug_assert!(k < 400, "atanh series failed to converge");
    }
    acc
}

/// ln 2 = 2 atanh(1/3).
pub static LN2: Lazy<Fix> = Lazy::new(|| {
    let third = Fix::from_ratio(&BigInt::from(1), &BigInt::from(3));
    atanh_fix(&third).mul_int(2)
});

/// Natural log of a positive integer: reduce to [1, 2) by powers of two, then
/// ln(f) = 2 atanh((f-1)/(f+1)).
pub fn ln_u128(x: u128) -> Fix {
    assert!(x >= 1);
    if x == 1 {
        return Fix::zero();
    }
    let e = 127 - x.leading_zeros(); // floor(log2 x)
    let pow2 = BigInt::from(1u8) << e;
    let xb = BigInt::from(x);
    let z = Fix::from_ratio(&(&xb - &pow2), &(&xb + &pow2));
    atanh_fix(&z).mul_int(2).add(&LN2.mul_int(e as i128))
}

pub fn ln_big(x: &BigInt) -> Fix {
    assert!(x.is_positive());
    let bits = x.bits();
    if bits <= 127 {
        return ln_u128(x.to_u128().expect("fits"));
    }
    // x = m * 2^shift with m in u128 range; error from dropped low bits is
    // far below the fixed-point resolution
    let shift = bits - 100;
    let m = (x >> shift).to_u128().expect("fits after shift");
    ln_u128(m).add(&LN2.mul_int(shift as i128))
}

/// Integer cube root: largest r with r^3 <= n.
pub fn icbrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    if n.is_zero() {
        return BigInt::zero();
    }
    let bits = n.bits();
    let mut x = BigInt::from(1u8) << (bits / 3 + 1);
    loop {
        // Newton: x' = (2x + n / x^2) / 3
        let next = (&x * 2u8 + n / (&x * &x)) / 3u8;
        if next >= x {
            break;
        }
        x = next;
    }
    while &x * &x * &x > *n {
        x -= 1u8;
    }
    while (&x + 1u8) * (&x + 1u8) * (&x + 1u8) <= *n {
        x += 1u8;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    // reference digits computed independently at 60-digit precision
    const LN2_REF: &str = "0.693147180559945309417232121458176568075500134360255";
    const LN3_REF: &str = "1.098612288668109691395245236922525704647490557822749";

    fn close_to(fix: &Fix, reference: &str, tol_digits: u32) {
        let r: f64 = reference.parse().unwrap();
        assert!((fix.to_f64() - r).abs() < 10f64.powi(-(tol_digits as i32)));
        // and the decimal expansions agree to 40 digits
        let s = fix.to_decimal_string(40);
        assert_eq!(&s[..20], &reference[..20]);
    }

    #[test]
    fn ln2_matches_reference() {
        close_to(&LN2, LN2_REF, 14);
        let s = LN2.to_decimal_string(40);
        assert_eq!(s, "0.6931471805599453094172321214581765680755");
    }

    #[test]
    fn ln3_matches_reference() {
        close_to(&ln_u128(3), LN3_REF, 14);
        let s = ln_u128(3).to_decimal_string(40);
        assert_eq!(s, "1.0986122886681096913952452369225257046474");
    }

    #[test]
    fn ln_is_additive() {
        let l6 = ln_u128(6);
        let sum = LN2.add(&ln_u128(3));
        assert!(l6.sub(&sum).abs().raw() < &BigInt::from(1000u32)); // within 1e-42
    }

    #[test]
    fn ln_big_agrees_with_ln_u128() {
        let x = BigInt::from(987654321u64);
        let a = ln_big(&x);
        let b = ln_u128(987654321);
        assert!(a.sub(&b).abs().raw() < &BigInt::from(1000u32));
    }

    #[test]
    fn icbrt_exact() {
        assert_eq!(icbrt(&BigInt::from(27u8)), BigInt::from(3u8));
        assert_eq!(icbrt(&BigInt::from(26u8)), BigInt::from(2u8));
        let big = BigInt::from(10u8).pow(60);
        let r = icbrt(&big);
        assert!(&r * &r * &r <= big);
        assert!((&r + 1u8) * (&r + 1u8) * (&r + 1u8) > big);
    }
}
