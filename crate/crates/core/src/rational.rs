//! Exact rational arithmetic helpers.
//!
//! All exact probabilities and measures in this crate are `BigRational`
//! values: arbitrary-precision, always reduced, positive denominator.

use num_bigint::{BigInt, Sign};
use num_traits::{Euclid, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for small rational literals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational from `"num/den"`, an integer, or a plain decimal
/// (`"0.25"`). Decimals are exact: `0.1` parses as `1/10`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidParams(format!("cannot parse rational from {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::InvalidParams(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let i: BigInt = if int_part.is_empty() || int_part == "-" {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let f: BigInt = frac_part.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let abs = Rational::new(i.abs() * &scale + f, scale);
        return Ok(if negative { -abs } else { abs });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from(n))
}

/// Serialize as `"num/den"` (integers render without the denominator suffix
/// stripped: `3/1` stays `3/1` so parsing round-trips uniformly).
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering with `sig` significant digits (round half away from
/// zero). Exact zero renders as `"0"`.
pub fn decimal_string(r: &Rational, sig: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    // decimal exponent e with 10^e <= a < 10^{e+1}
    let mut e = approx_log10_floor(&a);
    let ten = BigInt::from(10u32);
    loop {
        let lo = pow10_rational(e);
        let hi = &lo * Rational::from(ten.clone());
        if a < lo {
            e -= 1;
        } else if a >= hi {
            e += 1;
        } else {
            break;
        }
    }
    // digits = round(a * 10^{sig-1-e})
    let scaled = &a * pow10_rational(sig as i64 - 1 - e);
    let mut digits = round_half_up(&scaled);
    let mut digits_str = digits.to_string();
    if digits_str.len() > sig {
        // rounding overflowed to the next power of ten
        e += 1;
        digits = round_half_up(&(&a * pow10_rational(sig as i64 - 1 - e)));
        digits_str = digits.to_string();
    }
    debug_assert_eq!(digits_str.len(), sig);
    let mantissa = if sig == 1 {
        digits_str.clone()
    } else {
        format!("{}.{}", &digits_str[..1], &digits_str[1..])
    };
    let mantissa = trim_trailing_zeros(&mantissa);
    let signed = if neg { format!("-{mantissa}") } else { mantissa };
    if (-4..=(sig as i64 + 2)).contains(&e) {
        // re-render in plain positional notation
        plain_decimal(&digits.to_string(), e, neg, sig)
    } else {
        format!("{signed}e{e}")
    }
}

fn trim_trailing_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}

fn plain_decimal(digits: &str, e: i64, neg: bool, _sig: usize) -> String {
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if e >= 0 {
        let e = e as usize;
        if e + 1 >= digits.len() {
            out.push_str(digits);
            out.push_str(&"0".repeat(e + 1 - digits.len()));
        } else {
            out.push_str(&digits[..=e]);
            let frac = digits[e + 1..].trim_end_matches('0');
            if !frac.is_empty() {
                out.push('.');
                out.push_str(frac);
            }
        }
    } else {
        out.push_str("0.");
        out.push_str(&"0".repeat((-e - 1) as usize));
        out.push_str(digits.trim_end_matches('0'));
    }
    out
}

fn round_half_up(r: &Rational) -> BigInt {
    let two = BigInt::from(2);
    let num = r.numer() * &two + r.denom();
    num.div_euclid(&(r.denom() * &two))
}

fn pow10_rational(e: i64) -> Rational {
    let p = BigInt::from(10u32).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

fn approx_log10_floor(a: &Rational) -> i64 {
    let n_bits = a.numer().bits() as i64;
    let d_bits = a.denom().bits() as i64;
    (((n_bits - d_bits) as f64) * std::f64::consts::LOG10_2).floor() as i64
}

/// `exp(x)` for rational `x`, as a rational with absolute error `< err`.
///
/// Taylor series with an explicit geometric remainder bound, so the result
/// is a certified approximation. Intended for moderate arguments
/// (the `e^{−θλ}` limits); cost grows with `|x|`.
pub fn exp_rational(x: &Rational, err: &Rational) -> Rational {
    assert!(err.is_positive(), "error bound must be positive");
    let mut term = Rational::one();
    let mut sum = Rational::one();
    let mut n = BigInt::one();
    loop {
        term = &term * x / Rational::from(n.clone());
        sum += &term;
        n += 1;
        // once |x|/(n+1) <= 1/2 the tail is bounded by 2·|next term|
        let tail_small = term.abs() * rat(2, 1) < *err;
        let ratio_ok = x.abs() * rat(2, 1) < Rational::from(n.clone() + BigInt::one());
        if tail_small && ratio_ok {
            return sum;
        }
    }
}

/// Floor of a nonnegative rational as a big integer.
pub fn floor_bigint(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Convert to f64 (best effort; may overflow to inf for huge values).
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.numer().sign() == Sign::Minus {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("2").unwrap(), rat(2, 1));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("1.5").unwrap(), rat(3, 2));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn rational_round_trip() {
        let r = rat(19, 32);
        assert_eq!(parse_rational(&rational_string(&r)).unwrap(), r);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 4), 15), "0.25");
        assert_eq!(decimal_string(&rat(1, 3), 5), "0.33333");
        assert_eq!(decimal_string(&rat(-1, 2), 15), "-0.5");
        assert_eq!(decimal_string(&rat(1000, 1), 4), "1000");
        assert_eq!(decimal_string(&rat(0, 1), 15), "0");
        let tiny = Rational::new(BigInt::one(), BigInt::from(2).pow(100));
        let s = decimal_string(&tiny, 6);
        assert!(s.ends_with("e-31"), "got {s}");
        assert!(s.starts_with("7.8886"), "got {s}");
    }

    #[test]
    fn exp_certified() {
        let e = exp_rational(&rat(-1, 2), &Rational::new(BigInt::one(), BigInt::from(10u32).pow(30)));
        let expected = 0.6065306597126334f64;
        assert!((to_f64(&e) - expected).abs() < 1e-15);
    }

    #[test]
    fn floor_of_rational() {
        assert_eq!(floor_bigint(&rat(7, 2)), BigInt::from(3));
        assert_eq!(floor_bigint(&rat(4, 2)), BigInt::from(2));
    }
}
