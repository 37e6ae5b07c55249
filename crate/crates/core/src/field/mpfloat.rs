//! Arbitrary-precision binary floating point and complex arithmetic.
//!
//! `MpFloat` is a mantissa/exponent pair over `BigInt`, truncated to a fixed
//! number of bits after every operation. Only the operations the engine
//! needs are provided: ring ops, division, square root, comparison and
//! decimal conversion. Rounding is truncation toward zero, which is
//! deterministic across platforms; callers are expected to carry guard
//! digits on top of their target precision.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Bits of precision for a requested number of decimal digits, with guard.
pub fn bits_for_digits(digits: u32) -> u32 {
    // log2(10) = 3.3219...; add 64 guard bits
    (digits as f64 * 3.3220).ceil() as u32 + 64
}

#[derive(Clone)]
pub struct MpFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

impl fmt::Debug for MpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

impl MpFloat {
    pub fn zero(prec: u32) -> Self {
        MpFloat { mant: BigInt::zero(), exp: 0, prec }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        MpFloat { mant: BigInt::from(v), exp: 0, prec }.normalized()
    }

    pub fn from_bigint(v: BigInt, prec: u32) -> Self {
        MpFloat { mant: v, exp: 0, prec }.normalized()
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        if r.is_zero() {
            return Self::zero(prec);
        }
        let shift = prec as i64 + 2;
        let num = r.numer() << shift;
        let q = num / r.denom();
        MpFloat { mant: q, exp: -shift, prec }.normalized()
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    fn normalized(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        let bits = self.mant.magnitude().bits() as i64;
        let excess = bits - self.prec as i64;
        if excess > 0 {
            self.mant >>= excess;
            self.exp += excess;
        }
        self
    }

    /// Approximate log2 of |x|; i64::MIN for zero. Used for threshold checks.
    pub fn log2_approx(&self) -> i64 {
        if self.mant.is_zero() {
            i64::MIN
        } else {
            self.exp + self.mant.magnitude().bits() as i64
        }
    }

    pub fn neg(&self) -> Self {
        MpFloat { mant: -&self.mant, exp: self.exp, prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        MpFloat { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = self.prec.max(o.prec);
        if self.mant.is_zero() {
            return MpFloat { prec, ..o.clone() };
        }
        if o.mant.is_zero() {
            return MpFloat { prec, ..self.clone() };
        }
        let (hi, lo) = if self.exp >= o.exp { (self, o) } else { (o, self) };
        let gap = hi.exp - lo.exp;
        if gap > prec as i64 + 4 + hi.mant.magnitude().bits() as i64 {
            return MpFloat { prec, ..hi.clone() };
        }
        let mant = (&hi.mant << gap) + &lo.mant;
        MpFloat { mant, exp: lo.exp, prec }.normalized()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let prec = self.prec.max(o.prec);
        MpFloat { mant: &self.mant * &o.mant, exp: self.exp + o.exp, prec }.normalized()
    }

    pub fn div(&self, o: &Self) -> Self {
        let prec = self.prec.max(o.prec);
        assert!(!o.mant.is_zero(), "mpfloat division by zero");
        if self.mant.is_zero() {
            return Self::zero(prec);
        }
        let shift = prec as i64 + 4;
        let num = &self.mant << shift;
        let q = num / &o.mant;
        MpFloat { mant: q, exp: self.exp - shift - o.exp, prec }.normalized()
    }

    /// Square root of a non-negative value.
    pub fn sqrt(&self) -> Self {
        assert!(!self.mant.is_negative(), "sqrt of negative mpfloat");
        if self.mant.is_zero() {
            return self.clone();
        }
        let prec = self.prec;
        // scale so the exponent is even and the mantissa has ~2*prec bits
        let mut shift = 2 * prec as i64 + 4;
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let scaled: BigUint = (self.mant.magnitude() << shift as u64).sqrt();
        MpFloat {
            mant: BigInt::from_biguint(Sign::Plus, scaled),
            exp: (self.exp - shift) / 2,
            prec,
        }
        .normalized()
    }

    pub fn cmp_abs(&self, o: &Self) -> Ordering {
        self.abs().sub(&o.abs()).mant.sign().cmp(&Sign::NoSign).reverse().reverse()
    }

    pub fn cmp_val(&self, o: &Self) -> Ordering {
        let d = self.sub(o);
        if d.mant.is_zero() {
            Ordering::Equal
        } else if d.mant.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// 10^(-k) at this value's precision.
    pub fn pow10_neg(k: u32, prec: u32) -> Self {
        let one = MpFloat::from_i64(1, prec);
        let ten = MpFloat::from_i64(10, prec);
        let mut p = one.clone();
        for _ in 0..k {
            p = p.mul(&ten);
        }
        one.div(&p)
    }

    /// Decimal string with `digits` fractional digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.mant.is_zero() {
            return "0".to_string();
        }
        let scale = BigInt::from(10u32).pow(digits);
        // value * 10^digits = mant * 2^exp * 10^digits
        let scaled = if self.exp >= 0 {
            (&self.mant * &scale) << self.exp
        } else {
            (&self.mant * &scale) >> (-self.exp) as u64
        };
        let neg = scaled.is_negative();
        let mag = scaled.magnitude().to_string();
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        let d = digits as usize;
        if mag.len() > d {
            s.push_str(&mag[..mag.len() - d]);
            let frac = &mag[mag.len() - d..];
            let frac = frac.trim_end_matches('0');
            if !frac.is_empty() {
                s.push('.');
                s.push_str(frac);
            }
        } else {
            s.push_str("0.");
            for _ in 0..d - mag.len() {
                s.push('0');
            }
            let frac = mag.trim_end_matches('0');
            s.push_str(if frac.is_empty() { "0" } else { frac });
        }
        s
    }

    /// Nearest f64 (for reporting only).
    pub fn to_f64(&self) -> f64 {
        let bits = self.mant.magnitude().bits() as i64;
        if bits == 0 {
            return 0.0;
        }
        let keep = 53.min(bits);
        let shifted: BigInt = &self.mant >> (bits - keep);
        shifted.to_f64().unwrap_or(0.0) * 2f64.powi((self.exp + bits - keep) as i32)
    }
}

/// Complex number over `MpFloat`.
#[derive(Clone)]
pub struct BigC {
    pub re: MpFloat,
    pub im: MpFloat,
}

impl fmt::Debug for BigC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}

impl BigC {
    pub fn zero(prec: u32) -> Self {
        BigC { re: MpFloat::zero(prec), im: MpFloat::zero(prec) }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        BigC { re: MpFloat::from_i64(v, prec), im: MpFloat::zero(prec) }
    }

    pub fn from_rationals(re: &BigRational, im: &BigRational, prec: u32) -> Self {
        BigC { re: MpFloat::from_rational(re, prec), im: MpFloat::from_rational(im, prec) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        BigC { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        BigC { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> Self {
        BigC { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> Self {
        BigC { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        BigC {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn norm_sqr(&self) -> MpFloat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> MpFloat {
        self.norm_sqr().sqrt()
    }

    pub fn div(&self, o: &Self) -> Self {
        let n = o.norm_sqr();
        let t = self.mul(&o.conj());
        BigC { re: t.re.div(&n), im: t.im.div(&n) }
    }

    pub fn inv(&self) -> Self {
        BigC::from_i64(1, self.prec()).div(self)
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let prec = self.prec();
        if self.is_zero() {
            return BigC::zero(prec);
        }
        let r = self.abs();
        let two = MpFloat::from_i64(2, prec);
        if self.im.is_zero() {
            if !self.re.is_negative() {
                return BigC { re: self.re.sqrt(), im: MpFloat::zero(prec) };
            }
            return BigC { re: MpFloat::zero(prec), im: self.re.neg().sqrt() };
        }
        let u = r.add(&self.re.abs()).div(&two).sqrt();
        if !self.re.is_negative() {
            let v = self.im.div(&two.mul(&u));
            BigC { re: u, im: v }
        } else {
            let v = self.im.abs().div(&two.mul(&u));
            if self.im.is_negative() {
                BigC { re: v, im: u.neg() }
            } else {
                BigC { re: v, im: u }
            }
        }
    }

    /// Lexicographic order (re, then im) for deterministic choices.
    pub fn canonical_cmp(&self, o: &Self) -> Ordering {
        match self.re.cmp_val(&o.re) {
            Ordering::Equal => self.im.cmp_val(&o.im),
            c => c,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_matches_rationals() {
        let prec = bits_for_digits(50);
        let a = MpFloat::from_rational(&r(355, 113), prec);
        let b = MpFloat::from_rational(&r(-7, 33), prec);
        let sum = a.add(&b);
        let expect = MpFloat::from_rational(&(r(355, 113) + r(-7, 33)), prec);
        let diff = sum.sub(&expect).abs();
        assert!(diff.log2_approx() < -150, "add error {:?}", diff);

        let prod = a.mul(&b);
        let expect = MpFloat::from_rational(&(r(355, 113) * r(-7, 33)), prec);
        assert!(prod.sub(&expect).abs().log2_approx() < -150);

        let q = a.div(&b);
        let expect = MpFloat::from_rational(&(r(355, 113) / r(-7, 33)), prec);
        assert!(q.sub(&expect).abs().log2_approx() < -150);
    }

    #[test]
    fn sqrt_squares_back() {
        let prec = bits_for_digits(60);
        let x = MpFloat::from_rational(&r(17, 5), prec);
        let s = x.sqrt();
        assert!(s.mul(&s).sub(&x).abs().log2_approx() < -190);
    }

    #[test]
    fn complex_sqrt_all_quadrants() {
        let prec = bits_for_digits(50);
        for (re, im) in [(3, 4), (-3, 4), (3, -4), (-3, -4), (0, 2), (-5, 0)] {
            let z = BigC::from_rationals(&r(re, 1), &r(im, 1), prec);
            let s = z.sqrt();
            let back = s.mul(&s);
            assert!(back.sub(&z).abs().log2_approx() < -140, "sqrt fail {re} {im}");
        }
    }

    #[test]
    fn decimal_output() {
        let prec = bits_for_digits(30);
        let x = MpFloat::from_rational(&r(1, 8), prec);
        assert_eq!(x.to_decimal(6), "0.125");
        let y = MpFloat::from_rational(&r(-2500, 10), prec);
        assert_eq!(y.to_decimal(4), "-250");
    }
}
