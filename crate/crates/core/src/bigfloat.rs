//! Arbitrary-precision dyadic floating point: `value = mantissa · 2^exp`.
//!
//! Addition, subtraction and multiplication are *exact* (the mantissa grows
//! as needed), so polynomial residuals and squared magnitudes computed here
//! are exact dyadic rationals; rounding enters only through division, square
//! roots and the explicit `round_to`. The exponent is an `i64`, so values
//! like `2^{-300000}` (tail terms of the Binet decomposition) stay
//! representable.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigFloat {
    mantissa: BigInt,
    exp: i64,
}

impl BigFloat {
    pub fn new(mantissa: BigInt, exp: i64) -> Self {
        let mut x = BigFloat { mantissa, exp };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mantissa >>= tz;
            self.exp += tz as i64;
        }
    }

    pub fn zero() -> Self {
        BigFloat { mantissa: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        BigFloat::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Self {
        BigFloat::new(BigInt::from(v), 0)
    }

    pub fn from_bigint(v: BigInt) -> Self {
        BigFloat::new(v, 0)
    }

    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "cannot convert non-finite f64");
        if x == 0.0 {
            return BigFloat::zero();
        }
        let bits = x.abs().to_bits();
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074i64)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        let mut m = BigInt::from(m);
        if x < 0.0 {
            m = -m;
        }
        BigFloat::new(m, e)
    }

    /// Round a rational to `prec` significant bits.
    pub fn from_ratio(r: &Rational, prec: u32) -> Self {
        if r.is_zero() {
            return BigFloat::zero();
        }
        let n = r.numer();
        let d = r.denom();
        let shift = prec as i64 + 2 + d.bits() as i64 - n.bits() as i64;
        let (num, den) = if shift >= 0 {
            (n << shift as u64, d.clone())
        } else {
            (n.clone(), d << (-shift) as u64)
        };
        let q = &num / &den;
        BigFloat::new(q, -shift).round_to(prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn signum(&self) -> i8 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat { mantissa: self.mantissa.abs(), exp: self.exp }
    }

    pub fn neg(&self) -> Self {
        BigFloat { mantissa: -&self.mantissa, exp: self.exp }
    }

    pub fn mantissa_bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// Exponent of the leading bit: `2^{ilog2} <= |self| < 2^{ilog2+1}`.
    pub fn ilog2(&self) -> i64 {
        assert!(!self.is_zero());
        self.mantissa.bits() as i64 - 1 + self.exp
    }

    /// Multiply by `2^e` (exact).
    pub fn mul_pow2(&self, e: i64) -> Self {
        if self.is_zero() {
            return BigFloat::zero();
        }
        BigFloat { mantissa: self.mantissa.clone(), exp: self.exp + e }
    }

    /// Round to `prec` significant bits, ties away from zero.
    pub fn round_to(&self, prec: u32) -> Self {
        let bits = self.mantissa.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let half = BigInt::from(1) << (shift - 1);
        let m = if self.mantissa.is_negative() {
            -((-&self.mantissa + half) >> shift)
        } else {
            (&self.mantissa + half) >> shift
        };
        BigFloat::new(m, self.exp + shift as i64)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mantissa << (self.exp - e) as u64;
        let b = &other.mantissa << (other.exp - e) as u64;
        BigFloat::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return BigFloat::zero();
        }
        BigFloat::new(&self.mantissa * &other.mantissa, self.exp + other.exp)
    }

    pub fn mul_round(&self, other: &Self, prec: u32) -> Self {
        self.mul(other).round_to(prec)
    }

    /// Quotient with relative error below `2^{-(prec+1)}`.
    pub fn div_round(&self, other: &Self, prec: u32) -> Self {
        assert!(!other.is_zero(), "division by zero");
        if self.is_zero() {
            return BigFloat::zero();
        }
        let shift =
            prec as i64 + 3 + other.mantissa.bits() as i64 - self.mantissa.bits() as i64;
        let (num, den) = if shift >= 0 {
            (&self.mantissa << shift as u64, other.mantissa.clone())
        } else {
            (self.mantissa.clone(), &other.mantissa << (-shift) as u64)
        };
        let q = num / den;
        BigFloat::new(q, self.exp - other.exp - shift).round_to(prec)
    }

    /// Square root with relative error below `2^{-(prec+1)}`; panics on
    /// negative input.
    pub fn sqrt_round(&self, prec: u32) -> Self {
        assert!(!self.is_negative(), "sqrt of negative value");
        if self.is_zero() {
            return BigFloat::zero();
        }
        let a = self.round_to(2 * prec + 8);
        let target = 2 * (prec as u64 + 4);
        let mut t = target.saturating_sub(a.mantissa.bits()) as i64;
        if (a.exp - t) % 2 != 0 {
            t += 1;
        }
        let m = a.mantissa.magnitude() << t as u64;
        let s = m.sqrt();
        BigFloat::new(BigInt::from(s), (a.exp - t) / 2).round_to(prec)
    }

    /// `self^e` by binary exponentiation, rounding intermediates to
    /// `prec + 32` bits; relative error stays below `2^{-(prec+8)}` for
    /// exponents up to `2^20` bits.
    pub fn pow_round(&self, e: &BigUint, prec: u32) -> Self {
        let wp = prec + 32;
        if e.is_zero() {
            return BigFloat::one();
        }
        let nbits = e.bits();
        let mut result = BigFloat::one();
        let mut base = self.round_to(wp);
        for i in 0..nbits {
            if e.bit(i) {
                result = result.mul_round(&base, wp);
            }
            if i + 1 < nbits {
                base = base.mul_round(&base, wp);
            }
        }
        result.round_to(prec)
    }

    pub fn pow_round_u64(&self, e: u64, prec: u32) -> Self {
        self.pow_round(&BigUint::from(e), prec)
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let s1 = self.signum();
        let s2 = other.signum();
        if s1 != s2 {
            return s1.cmp(&s2);
        }
        if s1 == 0 {
            return Ordering::Equal;
        }
        // same nonzero sign: compare leading-bit position first
        let l1 = self.ilog2();
        let l2 = other.ilog2();
        if l1 != l2 {
            let mag = l1.cmp(&l2);
            return if s1 > 0 { mag } else { mag.reverse() };
        }
        self.sub(other).signum().cmp(&0)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mantissa.bits();
        let (top, e) = if bits > 54 {
            let shift = bits - 54;
            ((&self.mantissa >> shift).to_f64().unwrap(), self.exp + shift as i64)
        } else {
            (self.mantissa.to_f64().unwrap(), self.exp)
        };
        if e > 1200 {
            return if self.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        if e < -1200 {
            return if self.is_negative() { -0.0 } else { 0.0 };
        }
        top * 2f64.powi(e as i32)
    }

    /// Exact conversion; beware of huge negative exponents (the denominator
    /// is `2^{-exp}`).
    pub fn to_rational(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        if self.exp >= 0 {
            Rational::from(&self.mantissa << self.exp as u64)
        } else {
            Rational::new(self.mantissa.clone(), BigInt::from(1) << (-self.exp) as u64)
        }
    }

    /// Decimal scientific notation with `sig` significant digits, valid for
    /// any exponent size (used for astronomically small tail bounds).
    pub fn sci_string(&self, sig: usize) -> String {
        assert!(sig >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let a = self.abs();
        // first guess for floor(log10 |x|), then correct
        let mut d10 = (a.ilog2() as f64 * std::f64::consts::LOG10_2).floor() as i64;
        loop {
            match a.cmp_value(&pow10(d10)) {
                Ordering::Less => d10 -= 1,
                _ => {
                    if a.cmp_value(&pow10(d10 + 1)) == Ordering::Less {
                        break;
                    }
                    d10 += 1;
                }
            }
        }
        let mut digits = a.decimal_digits(d10, sig);
        let mut ds = digits.to_string();
        if ds.len() > sig {
            d10 += 1;
            digits = a.decimal_digits(d10, sig);
            ds = digits.to_string();
        }
        debug_assert_eq!(ds.len(), sig);
        let mantissa = if sig == 1 {
            ds
        } else {
            format!("{}.{}", &ds[..1], &ds[1..])
        };
        let sign = if self.is_negative() { "-" } else { "" };
        format!("{sign}{mantissa}e{d10}")
    }

    /// round(|self| / 10^{d10 - sig + 1}) as a big integer.
    fn decimal_digits(&self, d10: i64, sig: usize) -> BigUint {
        let t = d10 - sig as i64 + 1;
        // |self| * 10^{-t} = m * 2^{exp - t} * 5^{-t}
        let m = self.mantissa.magnitude().clone();
        let e2 = self.exp - t;
        let (mut num, mut den) = (m, BigUint::from(1u32));
        if t >= 0 {
            den *= BigUint::from(5u32).pow(t as u32);
        } else {
            num *= BigUint::from(5u32).pow((-t) as u32);
        }
        if e2 >= 0 {
            num <<= e2 as u64;
        } else {
            den <<= (-e2) as u64;
        }
        (num + (&den >> 1)) / den
    }
}

fn pow10(e: i64) -> BigFloat {
    let p = BigInt::from(5).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigFloat::new(p, e)
    } else {
        // 10^e = 2^e / 5^{-e}: compute with enough bits for comparisons
        BigFloat::one().mul_pow2(e).div_round(&BigFloat::new(p, 0), 128)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sci_string(20))
    }
}

/// Complex number over `BigFloat`; addition and multiplication are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigFloat) -> Self {
        BigComplex { re, im: BigFloat::zero() }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        BigComplex { re: BigFloat::from_f64(re), im: BigFloat::from_f64(im) }
    }

    pub fn zero() -> Self {
        BigComplex::from_real(BigFloat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn neg(&self) -> Self {
        BigComplex { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn add(&self, other: &Self) -> Self {
        BigComplex { re: self.re.add(&other.re), im: self.im.add(&other.im) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        BigComplex { re: self.re.sub(&other.re), im: self.im.sub(&other.im) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        BigComplex {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    pub fn mul_round(&self, other: &Self, prec: u32) -> Self {
        let p = self.mul(other);
        BigComplex { re: p.re.round_to(prec), im: p.im.round_to(prec) }
    }

    pub fn scale(&self, s: &BigFloat) -> Self {
        BigComplex { re: self.re.mul(s), im: self.im.mul(s) }
    }

    pub fn round_to(&self, prec: u32) -> Self {
        BigComplex { re: self.re.round_to(prec), im: self.im.round_to(prec) }
    }

    /// Exact `|z|^2`.
    pub fn norm_sqr(&self) -> BigFloat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    /// `|z|` with relative error below `2^{-prec}`.
    pub fn abs_round(&self, prec: u32) -> BigFloat {
        self.norm_sqr().sqrt_round(prec + 2)
    }

    pub fn div_round(&self, other: &Self, prec: u32) -> Self {
        let wp = prec + 8;
        let d = other.norm_sqr();
        let n = self.mul(&other.conj());
        BigComplex {
            re: n.re.div_round(&d, wp).round_to(prec),
            im: n.im.div_round(&d, wp).round_to(prec),
        }
    }

    pub fn pow_round(&self, e: &BigUint, prec: u32) -> Self {
        let wp = prec + 32;
        if e.is_zero() {
            return BigComplex::from_real(BigFloat::one());
        }
        let nbits = e.bits();
        let mut result = BigComplex::from_real(BigFloat::one());
        let mut base = self.round_to(wp);
        for i in 0..nbits {
            if e.bit(i) {
                result = result.mul_round(&base, wp);
            }
            if i + 1 < nbits {
                base = base.mul_round(&base, wp);
            }
        }
        result.round_to(prec)
    }

    pub fn pow_round_u64(&self, e: u64, prec: u32) -> Self {
        self.pow_round(&BigUint::from(e), prec)
    }

    pub fn to_c64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn bf(v: f64) -> BigFloat {
        BigFloat::from_f64(v)
    }

    #[test]
    fn ring_ops_exact() {
        let a = bf(1.5);
        let b = bf(-0.25);
        assert_eq!(a.add(&b), bf(1.25));
        assert_eq!(a.mul(&b), bf(-0.375));
        assert_eq!(a.sub(&a), BigFloat::zero());
        assert_eq!(a.mul_pow2(3), bf(12.0));
    }

    #[test]
    fn normalization_canonical() {
        let a = BigFloat::new(BigInt::from(8), 0);
        let b = BigFloat::new(BigInt::from(1), 3);
        assert_eq!(a, b);
    }

    #[test]
    fn division_accuracy() {
        let a = BigFloat::from_i64(1);
        let b = BigFloat::from_i64(3);
        let q = a.div_round(&b, 128);
        let err = q.mul(&b).sub(&a).abs();
        assert!(err.cmp_value(&BigFloat::new(BigInt::from(1), -120)) == Ordering::Less);
    }

    #[test]
    fn sqrt_accuracy() {
        let five = BigFloat::from_i64(5);
        let s = five.sqrt_round(128);
        let err = s.mul(&s).sub(&five).abs();
        assert!(err.cmp_value(&BigFloat::new(BigInt::from(1), -120)) == Ordering::Less);
        assert!((s.to_f64() - 5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn pow_huge_exponent_underflow_safe() {
        // (1/2)^{300000} is far below f64 range but exact here
        let half = bf(0.5);
        let p = half.pow_round_u64(300_000, 64);
        assert_eq!(p.ilog2(), -300_000);
        assert_eq!(p.to_f64(), 0.0);
        assert!(!p.is_zero());
    }

    #[test]
    fn pow_matches_f64() {
        let x = bf(0.9);
        let p = x.pow_round_u64(100, 96);
        assert!((p.to_f64() - 0.9f64.powi(100)).abs() < 1e-16);
    }

    #[test]
    fn comparisons() {
        assert_eq!(bf(1.0).cmp_value(&bf(2.0)), Ordering::Less);
        assert_eq!(bf(-1.0).cmp_value(&bf(-2.0)), Ordering::Greater);
        assert_eq!(bf(0.0).cmp_value(&bf(-2.0)), Ordering::Greater);
        assert_eq!(bf(1.75).cmp_value(&bf(1.75)), Ordering::Equal);
        // same leading bit position, different values
        assert_eq!(bf(1.5).cmp_value(&bf(1.25)), Ordering::Greater);
    }

    #[test]
    fn f64_round_trips() {
        for v in [0.0, 1.0, -1.0, 0.1, 1e300, -1e-300, 123456.789] {
            assert_eq!(BigFloat::from_f64(v).to_f64(), v);
        }
    }

    #[test]
    fn ratio_conversion() {
        let r = rat(19, 32);
        let x = BigFloat::from_ratio(&r, 64);
        assert_eq!(x.to_rational(), r); // dyadic rational is exact
        let third = BigFloat::from_ratio(&rat(1, 3), 128);
        assert!((third.to_f64() - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn sci_strings() {
        assert_eq!(bf(0.0).sci_string(5), "0");
        assert_eq!(bf(1.0).sci_string(3), "1.00e0");
        assert_eq!(bf(-12.5).sci_string(3), "-1.25e1");
        let tiny = BigFloat::new(BigInt::from(1), -1033);
        let s = tiny.sci_string(4);
        assert!(s.ends_with("e-311"), "got {s}");
        assert!(s.starts_with("1.085"), "got {s}");
    }

    #[test]
    fn complex_ops() {
        let i = BigComplex::from_f64(0.0, 1.0);
        let sq = i.mul(&i);
        assert_eq!(sq.re, bf(-1.0));
        assert!(sq.im.is_zero());
        let z = BigComplex::from_f64(3.0, 4.0);
        assert_eq!(z.norm_sqr(), bf(25.0));
        assert!((z.abs_round(64).to_f64() - 5.0).abs() < 1e-15);
        let q = z.div_round(&BigComplex::from_f64(0.0, 1.0), 64);
        assert!((q.re.to_f64() - 4.0).abs() < 1e-15);
        assert!((q.im.to_f64() + 3.0).abs() < 1e-15);
        let p = z.pow_round_u64(2, 64);
        assert!((p.re.to_f64() + 7.0).abs() < 1e-12);
        assert!((p.im.to_f64() - 24.0).abs() < 1e-12);
    }
}
