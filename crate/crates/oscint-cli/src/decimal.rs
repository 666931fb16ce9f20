//! Decimal expansion of exact rationals to a fixed number of significant
//! digits, in the leading-dot style of the coefficient tables
//! (".14814814814814814814814815").

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Round-half-up expansion with `sig` significant digits. Values below one
/// print as ".ddd…" with leading zeros not counting toward significance.
pub fn decimal_expansion(r: &BigRational, sig: usize) -> String {
    if r.is_zero() {
        return format!(".{}", "0".repeat(sig));
    }
    let neg = r.is_negative();
    let r = r.abs();
    let num = r.numer().clone();
    let den = r.denom().clone();
    let int_part: BigInt = &num / &den;

    let mut leading_zeros = 0usize;
    if int_part.is_zero() {
        // count zeros between the point and the first significant digit
        let mut scaled = num.clone() * 10;
        while &scaled / &den == BigInt::zero() {
            leading_zeros += 1;
            scaled *= 10;
        }
    }
    let int_digits = if int_part.is_zero() {
        0
    } else {
        int_part.to_string().len()
    };
    let decimals = (leading_zeros + sig).saturating_sub(int_digits);
    // round half up at the last kept decimal
    let pow = BigInt::from(10u32).pow(decimals as u32);
    let scaled: BigInt = (num * &pow * 2 + &den) / (den * 2);
    let text = scaled.to_string();
    let (int_str, frac_str) = if text.len() > decimals {
        let split = text.len() - decimals;
        (text[..split].to_string(), text[split..].to_string())
    } else {
        (String::new(), format!("{:0>width$}", text, width = decimals))
    };
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if !int_str.is_empty() && int_str != "0" {
        out.push_str(&int_str);
    }
    out.push('.');
    out.push_str(&frac_str);
    out
}
