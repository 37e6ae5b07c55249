//! Exact arithmetic over prime fields, finite extensions, the rationals,
//! number fields given by a modulus, and arbitrary-precision complex numbers.
//!
//! A [`Field`] is a cheap handle (an `Arc` around the descriptor) and a
//! [`FieldElement`] carries its owning field, so mixed-field operations are
//! caught at run time. All representations are canonical: extension elements
//! are reduced modulo the modulus, rationals are in lowest terms.

pub mod factor;
mod fppoly;
pub mod mpfloat;
pub mod poly;

pub use mpfloat::{bits_for_digits, BigC, MpFloat};
pub use poly::Polynomial;

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldKind {
    PrimeFinite { p: u64 },
    ExtensionFinite { p: u64, k: usize, modulus: Vec<u64> },
    Rational,
    NumberField { modulus: Vec<BigRational> },
    BigComplex { digits: u32 },
}

/// A field descriptor. Clones are cheap and compare structurally.
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldKind>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.inner {
            FieldKind::PrimeFinite { p } => write!(f, "F{}", p),
            FieldKind::ExtensionFinite { p, k, .. } => write!(f, "F{}^{}", p, k),
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::NumberField { modulus } => write!(f, "Q[x]/deg{}", modulus.len() - 1),
            FieldKind::BigComplex { digits } => write!(f, "C({}d)", digits),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn kind(&self) -> &FieldKind {
        &self.inner
    }

    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(Field { inner: Arc::new(FieldKind::PrimeFinite { p }) })
    }

    /// Finite field F_{p^k}. With no modulus given, the deterministic
    /// canonical irreducible of degree k is used, so results are reproducible.
    pub fn make_extension(p: u64, k: usize, modulus: Option<&[u64]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidInput("extension degree must be positive".into()));
        }
        if k == 1 {
            if let Some(m) = modulus {
                if m.len() != 2 {
                    return Err(Error::InvalidInput("degree-1 modulus for prime field".into()));
                }
            }
            return Field::prime(p);
        }
        let m = match modulus {
            Some(m) => {
                let mut m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                fppoly::trim(&mut m);
                if m.len() != k + 1 || *m.last().unwrap() != 1 {
                    return Err(Error::InvalidInput(
                        "modulus must be monic of degree k".into(),
                    ));
                }
                if !fppoly::is_irreducible(&m, p) {
                    return Err(Error::ModulusNotIrreducible);
                }
                m
            }
            None => fppoly::canonical_irreducible(p, k),
        };
        Ok(Field { inner: Arc::new(FieldKind::ExtensionFinite { p, k, modulus: m }) })
    }

    pub fn rationals() -> Field {
        Field { inner: Arc::new(FieldKind::Rational) }
    }

    /// Number field Q[x]/(modulus). Only low degrees are supported; the
    /// engine itself needs just the Eisenstein field Q(eta).
    pub fn number_field(modulus: &[BigRational]) -> Result<Field> {
        let mut m = modulus.to_vec();
        while m.last().map(|c| c.is_zero()).unwrap_or(false) {
            m.pop();
        }
        let deg = m.len().saturating_sub(1);
        if deg < 2 {
            return Err(Error::InvalidInput("number field modulus must have degree >= 2".into()));
        }
        if !m.last().unwrap().is_one() {
            return Err(Error::InvalidInput("number field modulus must be monic".into()));
        }
        if deg > 3 {
            return Err(Error::UnsupportedField(
                "number fields of degree > 3 are not supported".into(),
            ));
        }
        // degree 2 or 3: irreducible over Q iff no rational root
        if rational_root_exists(&m) {
            return Err(Error::ModulusNotIrreducible);
        }
        Ok(Field { inner: Arc::new(FieldKind::NumberField { modulus: m }) })
    }

    /// The Eisenstein field Q(eta) with eta^2 + eta + 1 = 0.
    pub fn eisenstein() -> Field {
        let one = BigRational::one;
        Field::number_field(&[one(), one(), one()]).unwrap()
    }

    pub fn big_complex(digits: u32) -> Field {
        Field { inner: Arc::new(FieldKind::BigComplex { digits }) }
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.inner {
            FieldKind::PrimeFinite { p } | FieldKind::ExtensionFinite { p, .. } => *p,
            _ => 0,
        }
    }

    pub fn extension_degree(&self) -> usize {
        match &*self.inner {
            FieldKind::ExtensionFinite { k, .. } => *k,
            FieldKind::NumberField { modulus } => modulus.len() - 1,
            _ => 1,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(
            &*self.inner,
            FieldKind::PrimeFinite { .. } | FieldKind::ExtensionFinite { .. }
        )
    }

    pub fn is_big_complex(&self) -> bool {
        matches!(&*self.inner, FieldKind::BigComplex { .. })
    }

    pub fn element_count(&self) -> Option<BigUint> {
        match &*self.inner {
            FieldKind::PrimeFinite { p } => Some(BigUint::from(*p)),
            FieldKind::ExtensionFinite { p, k, .. } => Some(BigUint::from(*p).pow(*k as u32)),
            _ => None,
        }
    }

    pub fn digits(&self) -> Option<u32> {
        match &*self.inner {
            FieldKind::BigComplex { digits } => Some(*digits),
            _ => None,
        }
    }

    pub fn prec_bits(&self) -> u32 {
        match &*self.inner {
            FieldKind::BigComplex { digits } => bits_for_digits(*digits),
            _ => 64,
        }
    }

    /// Zero-comparison threshold for big-complex fields: 10^(-digits/2).
    pub fn tolerance(&self) -> Option<MpFloat> {
        match &*self.inner {
            FieldKind::BigComplex { digits } => {
                Some(MpFloat::pow10_neg(digits / 2, bits_for_digits(*digits)))
            }
            _ => None,
        }
    }

    pub fn zero(&self) -> FieldElement {
        let repr = match &*self.inner {
            FieldKind::PrimeFinite { .. } => Repr::Fp(0),
            FieldKind::ExtensionFinite { k, .. } => Repr::Ext(vec![0; *k]),
            FieldKind::Rational => Repr::Rat(BigRational::zero()),
            FieldKind::NumberField { modulus } => {
                Repr::Nf(vec![BigRational::zero(); modulus.len() - 1])
            }
            FieldKind::BigComplex { digits } => Repr::Cpx(BigC::zero(bits_for_digits(*digits))),
        };
        FieldElement { field: self.clone(), repr }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        let repr = match &*self.inner {
            FieldKind::PrimeFinite { p } => Repr::Fp(v.rem_euclid(*p as i64) as u64),
            FieldKind::ExtensionFinite { p, k, .. } => {
                let mut c = vec![0u64; *k];
                c[0] = v.rem_euclid(*p as i64) as u64;
                Repr::Ext(c)
            }
            FieldKind::Rational => Repr::Rat(BigRational::from_integer(v.into())),
            FieldKind::NumberField { modulus } => {
                let mut c = vec![BigRational::zero(); modulus.len() - 1];
                c[0] = BigRational::from_integer(v.into());
                Repr::Nf(c)
            }
            FieldKind::BigComplex { digits } => {
                Repr::Cpx(BigC::from_i64(v, bits_for_digits(*digits)))
            }
        };
        FieldElement { field: self.clone(), repr }
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<FieldElement> {
        let repr = match &*self.inner {
            FieldKind::Rational => Repr::Rat(r.clone()),
            FieldKind::NumberField { modulus } => {
                let mut c = vec![BigRational::zero(); modulus.len() - 1];
                c[0] = r.clone();
                Repr::Nf(c)
            }
            FieldKind::BigComplex { digits } => {
                Repr::Cpx(BigC::from_rationals(r, &BigRational::zero(), bits_for_digits(*digits)))
            }
            FieldKind::PrimeFinite { .. } | FieldKind::ExtensionFinite { .. } => {
                // reduce num/den mod p
                let p = self.characteristic();
                let num = rat_mod_p(r.numer(), p);
                let den = rat_mod_p(r.denom(), p);
                if den == 0 {
                    return Err(Error::InvalidInput("denominator divisible by p".into()));
                }
                return Ok(self
                    .from_i64(num as i64)
                    .mul(&self.from_i64(den as i64).inv()));
            }
        };
        Ok(FieldElement { field: self.clone(), repr })
    }

    /// Generator of the extension (the class of X); identity-like for others.
    pub fn generator(&self) -> FieldElement {
        match &*self.inner {
            FieldKind::ExtensionFinite { k, .. } => {
                let mut c = vec![0u64; *k];
                c[1] = 1;
                FieldElement { field: self.clone(), repr: Repr::Ext(c) }
            }
            FieldKind::NumberField { modulus } => {
                let mut c = vec![BigRational::zero(); modulus.len() - 1];
                c[1] = BigRational::one();
                FieldElement { field: self.clone(), repr: Repr::Nf(c) }
            }
            _ => self.one(),
        }
    }

    /// Element from base-p coefficient list (finite fields).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        match &*self.inner {
            FieldKind::PrimeFinite { p } => {
                if coeffs.len() > 1 && coeffs[1..].iter().any(|&c| c % p != 0) {
                    return Err(Error::InvalidInput("too many coefficients".into()));
                }
                Ok(FieldElement {
                    field: self.clone(),
                    repr: Repr::Fp(coeffs.first().copied().unwrap_or(0) % p),
                })
            }
            FieldKind::ExtensionFinite { p, k, .. } => {
                if coeffs.len() > *k {
                    return Err(Error::InvalidInput("too many coefficients".into()));
                }
                let mut c = vec![0u64; *k];
                for (i, &x) in coeffs.iter().enumerate() {
                    c[i] = x % p;
                }
                Ok(FieldElement { field: self.clone(), repr: Repr::Ext(c) })
            }
            _ => Err(Error::UnsupportedField("from_coeffs needs a finite field".into())),
        }
    }

    /// Iterate all elements of a finite field in the canonical counting order.
    pub fn elements(&self) -> Box<dyn Iterator<Item = FieldElement> + '_> {
        match &*self.inner {
            FieldKind::PrimeFinite { p } => {
                let f = self.clone();
                Box::new((0..*p).map(move |v| FieldElement { field: f.clone(), repr: Repr::Fp(v) }))
            }
            FieldKind::ExtensionFinite { p, k, .. } => {
                let f = self.clone();
                let (p, k) = (*p, *k);
                let total = (p as u128).pow(k as u32);
                Box::new((0..total).map(move |n| {
                    let mut c = vec![0u64; k];
                    let mut n = n;
                    for ci in c.iter_mut() {
                        *ci = (n % p as u128) as u64;
                        n /= p as u128;
                    }
                    FieldElement { field: f.clone(), repr: Repr::Ext(c) }
                }))
            }
            _ => panic!("elements() requires a finite field"),
        }
    }

    pub fn random_element<R: rand::Rng>(&self, rng: &mut R) -> FieldElement {
        match &*self.inner {
            FieldKind::PrimeFinite { p } => FieldElement {
                field: self.clone(),
                repr: Repr::Fp(rng.gen_range(0..*p)),
            },
            FieldKind::ExtensionFinite { p, k, .. } => {
                let c: Vec<u64> = (0..*k).map(|_| rng.gen_range(0..*p)).collect();
                FieldElement { field: self.clone(), repr: Repr::Ext(c) }
            }
            _ => panic!("random_element requires a finite field"),
        }
    }

    pub fn modulus_coeffs(&self) -> Vec<u64> {
        match &*self.inner {
            FieldKind::ExtensionFinite { modulus, .. } => modulus.clone(),
            FieldKind::PrimeFinite { .. } => vec![],
            _ => panic!("modulus_coeffs requires a finite field"),
        }
    }
}

fn rat_mod_p(n: &num_bigint::BigInt, p: u64) -> u64 {
    let m = n % num_bigint::BigInt::from(p);
    let m = if m.is_negative() { m + num_bigint::BigInt::from(p) } else { m };
    u64::try_from(m).unwrap()
}

fn rational_root_exists(m: &[BigRational]) -> bool {
    // monic with rational coefficients: clear denominators, rational root theorem
    use num_bigint::BigInt;
    let mut den = num_bigint::BigInt::one();
    for c in m {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let ints: Vec<BigInt> = m.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let a0 = &ints[0];
    let an = ints.last().unwrap();
    if a0.is_zero() {
        return true;
    }
    let eval = |num: &BigInt, den2: &BigInt| -> bool {
        // check m(num/den2) == 0
        let n = ints.len() - 1;
        let mut acc = BigInt::zero();
        for (i, c) in ints.iter().enumerate() {
            acc += c * num.pow(i as u32) * den2.pow((n - i) as u32);
        }
        acc.is_zero()
    };
    let divisors = |x: &BigInt| -> Vec<BigInt> {
        let x = x.abs();
        let mut out = vec![];
        let mut d = BigInt::one();
        // bounded trial division; moduli here are tiny
        while &d * &d <= x {
            if (&x % &d).is_zero() {
                out.push(d.clone());
                out.push(&x / &d);
            }
            d += 1;
        }
        out
    };
    for pn in divisors(a0) {
        for pd in divisors(an) {
            if eval(&pn, &pd) || eval(&(-&pn), &pd) {
                return true;
            }
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq)]
pub enum Repr {
    Fp(u64),
    Ext(Vec<u64>),
    Rat(BigRational),
    Nf(Vec<BigRational>),
    Cpx(BigC),
}

impl PartialEq for BigC {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

/// An element of some [`Field`]. Arithmetic panics on mixed fields; cross-field
/// movement goes through explicit embeddings in [`factor`].
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    repr: Repr,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Fp(v) => write!(f, "{}", v),
            Repr::Ext(c) => {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Repr::Rat(r) => write!(f, "{}", r),
            Repr::Nf(c) => {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Repr::Cpx(z) => write!(f, "{:?}", z),
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.repr == other.repr
    }
}

macro_rules! same_field {
    ($a:expr, $b:expr) => {
        assert!(
            $a.field == $b.field,
            "field mismatch: {:?} vs {:?}",
            $a.field,
            $b.field
        )
    };
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn repr(&self) -> &Repr {
        &self.repr
    }

    pub(crate) fn from_repr(field: Field, repr: Repr) -> Self {
        FieldElement { field, repr }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Fp(v) => *v == 0,
            Repr::Ext(c) => c.iter().all(|&x| x == 0),
            Repr::Rat(r) => r.is_zero(),
            Repr::Nf(c) => c.iter().all(|x| x.is_zero()),
            Repr::Cpx(z) => z.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    pub fn add(&self, o: &Self) -> Self {
        same_field!(self, o);
        let repr = match (&self.repr, &o.repr) {
            (Repr::Fp(a), Repr::Fp(b)) => {
                Repr::Fp(fppoly::addm(*a, *b, self.field.characteristic()))
            }
            (Repr::Ext(a), Repr::Ext(b)) => {
                let p = self.field.characteristic();
                Repr::Ext(a.iter().zip(b).map(|(&x, &y)| fppoly::addm(x, y, p)).collect())
            }
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Nf(a), Repr::Nf(b)) => Repr::Nf(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            (Repr::Cpx(a), Repr::Cpx(b)) => Repr::Cpx(a.add(b)),
            _ => unreachable!(),
        };
        FieldElement { field: self.field.clone(), repr }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        let repr = match &self.repr {
            Repr::Fp(a) => {
                let p = self.field.characteristic();
                Repr::Fp(if *a == 0 { 0 } else { p - a })
            }
            Repr::Ext(c) => {
                let p = self.field.characteristic();
                Repr::Ext(c.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect())
            }
            Repr::Rat(r) => Repr::Rat(-r),
            Repr::Nf(c) => Repr::Nf(c.iter().map(|x| -x).collect()),
            Repr::Cpx(z) => Repr::Cpx(z.neg()),
        };
        FieldElement { field: self.field.clone(), repr }
    }

    pub fn mul(&self, o: &Self) -> Self {
        same_field!(self, o);
        let repr = match (&self.repr, &o.repr) {
            (Repr::Fp(a), Repr::Fp(b)) => {
                Repr::Fp(fppoly::mulm(*a, *b, self.field.characteristic()))
            }
            (Repr::Ext(a), Repr::Ext(b)) => {
                let p = self.field.characteristic();
                let m = match self.field.kind() {
                    FieldKind::ExtensionFinite { modulus, .. } => modulus,
                    _ => unreachable!(),
                };
                let prod = fppoly::mul(a, b, p);
                let mut red = fppoly::rem(&prod, m, p);
                red.resize(m.len() - 1, 0);
                Repr::Ext(red)
            }
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Nf(a), Repr::Nf(b)) => {
                let m = match self.field.kind() {
                    FieldKind::NumberField { modulus } => modulus,
                    _ => unreachable!(),
                };
                Repr::Nf(nf_mul(a, b, m))
            }
            (Repr::Cpx(a), Repr::Cpx(b)) => Repr::Cpx(a.mul(b)),
            _ => unreachable!(),
        };
        FieldElement { field: self.field.clone(), repr }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let repr = match &self.repr {
            Repr::Fp(a) => Repr::Fp(fppoly::invm(*a, self.field.characteristic())),
            Repr::Ext(c) => {
                let p = self.field.characteristic();
                let m = match self.field.kind() {
                    FieldKind::ExtensionFinite { modulus, .. } => modulus.clone(),
                    _ => unreachable!(),
                };
                let mut inv = fppoly::invmod_poly(c, &m, p).expect("irreducible modulus");
                inv.resize(m.len() - 1, 0);
                Repr::Ext(inv)
            }
            Repr::Rat(r) => Repr::Rat(r.recip()),
            Repr::Nf(c) => {
                let m = match self.field.kind() {
                    FieldKind::NumberField { modulus } => modulus.clone(),
                    _ => unreachable!(),
                };
                Repr::Nf(nf_inv(c, &m))
            }
            Repr::Cpx(z) => Repr::Cpx(z.inv()),
        };
        FieldElement { field: self.field.clone(), repr }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, n: &BigUint) -> Self {
        let mut acc = self.field.one();
        let mut base = self.clone();
        for i in 0..n.bits() {
            if n.bit(i) {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
        }
        acc
    }

    /// Frobenius x -> x^p on finite fields.
    pub fn frobenius(&self) -> Result<Self> {
        if !self.field.is_finite() {
            return Err(Error::UnsupportedField("frobenius needs a finite field".into()));
        }
        Ok(self.pow(self.field.characteristic()))
    }

    /// The unique cube root in characteristic 3, as the inverse of Frobenius:
    /// y = x^(3^(k-1)) satisfies y^3 = x.
    pub fn frobenius_cube_root(&self) -> Result<Self> {
        let p = self.field.characteristic();
        if p != 3 || !self.field.is_finite() {
            return Err(Error::UnsupportedCharacteristic(p));
        }
        let k = self.field.extension_degree();
        let mut y = self.clone();
        for _ in 0..k.saturating_sub(1) {
            y = y.pow(3);
        }
        Ok(y)
    }

    /// Total order used for deterministic scans and canonical forms.
    pub fn canonical_cmp(&self, o: &Self) -> Ordering {
        same_field!(self, o);
        match (&self.repr, &o.repr) {
            (Repr::Fp(a), Repr::Fp(b)) => a.cmp(b),
            (Repr::Ext(a), Repr::Ext(b)) => a.iter().rev().cmp(b.iter().rev()),
            (Repr::Rat(a), Repr::Rat(b)) => a.cmp(b),
            (Repr::Nf(a), Repr::Nf(b)) => {
                for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        c => return c,
                    }
                }
                Ordering::Equal
            }
            (Repr::Cpx(a), Repr::Cpx(b)) => a.canonical_cmp(b),
            _ => unreachable!(),
        }
    }

    /// |x| as an MpFloat for threshold decisions (big-complex only).
    pub fn magnitude(&self) -> MpFloat {
        match &self.repr {
            Repr::Cpx(z) => z.abs(),
            _ => panic!("magnitude is a big-complex operation"),
        }
    }

    pub fn as_complex(&self) -> &BigC {
        match &self.repr {
            Repr::Cpx(z) => z,
            _ => panic!("not a big-complex element"),
        }
    }

    pub fn as_rational(&self) -> &BigRational {
        match &self.repr {
            Repr::Rat(r) => r,
            _ => panic!("not a rational element"),
        }
    }

    /// Coefficient vector over the base (finite/number fields).
    pub fn coeff_vec_u64(&self) -> Vec<u64> {
        match &self.repr {
            Repr::Fp(v) => vec![*v],
            Repr::Ext(c) => c.clone(),
            _ => panic!("coeff_vec_u64 needs a finite field element"),
        }
    }

    pub fn coeff_vec_rational(&self) -> Vec<BigRational> {
        match &self.repr {
            Repr::Rat(r) => vec![r.clone()],
            Repr::Nf(c) => c.clone(),
            _ => panic!("coeff_vec_rational needs a characteristic-zero exact element"),
        }
    }

    /// Canonical JSON: coefficient strings low-degree first plus the modulus list.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        match &self.repr {
            Repr::Fp(v) => json!({ "coeffs": [v.to_string()], "modulus": [] }),
            Repr::Ext(c) => {
                let m: Vec<String> =
                    self.field.modulus_coeffs().iter().map(|x| x.to_string()).collect();
                json!({
                    "coeffs": c.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "modulus": m,
                })
            }
            Repr::Rat(r) => json!({ "coeffs": [format!("{}/{}", r.numer(), r.denom())], "modulus": [] }),
            Repr::Nf(c) => {
                let m = match self.field.kind() {
                    FieldKind::NumberField { modulus } => modulus,
                    _ => unreachable!(),
                };
                json!({
                    "coeffs": c.iter().map(|x| format!("{}/{}", x.numer(), x.denom())).collect::<Vec<_>>(),
                    "modulus": m.iter().map(|x| format!("{}/{}", x.numer(), x.denom())).collect::<Vec<_>>(),
                })
            }
            Repr::Cpx(z) => {
                let d = self.field.digits().unwrap_or(30);
                json!({ "re": z.re.to_decimal(d), "im": z.im.to_decimal(d) })
            }
        }
    }
}

fn nf_mul(a: &[BigRational], b: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let deg = m.len() - 1;
    let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = x * y;
            prod[i + j] += t;
        }
    }
    // reduce modulo monic m
    for i in (deg..prod.len()).rev() {
        if prod[i].is_zero() {
            continue;
        }
        let c = prod[i].clone();
        for (j, mj) in m.iter().enumerate().take(deg) {
            let sub = &c * mj;
            prod[i - deg + j] -= sub;
        }
        prod[i] = BigRational::zero();
    }
    prod.truncate(deg);
    prod.resize(deg, BigRational::zero());
    prod
}

fn nf_inv(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    // extended euclid over Q[x]
    type QP = Vec<BigRational>;
    fn trimq(v: &mut QP) {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
    }
    fn mulq(a: &[BigRational], b: &[BigRational]) -> QP {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let t = x * y;
                out[i + j] += t;
            }
        }
        trimq(&mut out);
        out
    }
    fn divrem(a: &[BigRational], b: &[BigRational]) -> (QP, QP) {
        let mut r = a.to_vec();
        trimq(&mut r);
        let db = b.len() - 1;
        let lb = b.last().unwrap();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
        while r.len() > db {
            let c = r.last().unwrap() / lb;
            let d = r.len() - 1 - db;
            q[d] = c.clone();
            for (j, bj) in b.iter().enumerate() {
                let s = &c * bj;
                r[d + j] -= s;
            }
            trimq(&mut r);
        }
        (q, r)
    }
    let mut r0: QP = m.to_vec();
    let mut r1: QP = a.to_vec();
    trimq(&mut r1);
    let mut u0: QP = vec![];
    let mut u1: QP = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r2) = divrem(&r0, &r1);
        let qu = mulq(&q, &u1);
        let n = u0.len().max(qu.len());
        let mut u2 = vec![BigRational::zero(); n];
        for (i, c) in u0.iter().enumerate() {
            u2[i] = c.clone();
        }
        for (i, c) in qu.iter().enumerate() {
            u2[i] -= c;
        }
        trimq(&mut u2);
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
    }
    assert_eq!(r0.len(), 1, "modulus not irreducible?");
    let inv = r0[0].recip();
    let mut out: QP = u0.iter().map(|c| c * &inv).collect();
    out.resize(m.len() - 1, BigRational::zero());
    out
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}
impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}
impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}
impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_extension_examples() {
        let f3 = Field::make_extension(3, 1, None).unwrap();
        assert_eq!(f3.characteristic(), 3);
        assert_eq!(f3.extension_degree(), 1);

        let f9 = Field::make_extension(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!(f9.extension_degree(), 2);
        // i^2 = -1
        let i = f9.generator();
        assert_eq!(i.mul(&i), f9.from_i64(-1));

        assert_eq!(
            Field::make_extension(3, 2, Some(&[2, 0, 1])).unwrap_err(),
            Error::ModulusNotIrreducible
        );
    }

    #[test]
    fn frobenius_cube_root_small() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.zero().frobenius_cube_root().unwrap(), f3.zero());
        assert_eq!(f3.from_i64(2).frobenius_cube_root().unwrap(), f3.from_i64(2));

        let q = Field::rationals();
        assert!(matches!(
            q.from_i64(2).frobenius_cube_root(),
            Err(Error::UnsupportedCharacteristic(0))
        ));
    }

    #[test]
    fn frobenius_cube_root_bijective_up_to_729() {
        for k in 1..=6 {
            let f = Field::make_extension(3, k, None).unwrap();
            if f.element_count().unwrap() > BigUint::from(730u32) {
                break;
            }
            for x in f.elements() {
                let y = x.frobenius_cube_root().unwrap();
                assert_eq!(y.pow(3), x);
                assert_eq!(x.pow(3).frobenius_cube_root().unwrap(), x);
            }
        }
    }

    #[test]
    fn field_inverses() {
        let f27 = Field::make_extension(3, 3, None).unwrap();
        for x in f27.elements().skip(1) {
            assert!(x.mul(&x.inv()).is_one());
        }
        let eis = Field::eisenstein();
        let eta = eis.generator();
        // eta^3 = 1, eta^2+eta+1 = 0
        assert!(eta.pow(3).is_one());
        assert!(eta.pow(2).add(&eta).add(&eis.one()).is_zero());
        assert!(eta.mul(&eta.inv()).is_one());
    }

    #[test]
    fn eisenstein_modulus_rejects_reducible() {
        let one = BigRational::one();
        // X^2 - 1 has rational roots
        let res = Field::number_field(&[-one.clone(), BigRational::zero(), one]);
        assert_eq!(res.unwrap_err(), Error::ModulusNotIrreducible);
    }

    #[test]
    fn canonical_order_matches_counting() {
        let f9 = Field::make_extension(3, 2, None).unwrap();
        let all: Vec<_> = f9.elements().collect();
        assert_eq!(all.len(), 9);
        for w in all.windows(2) {
            assert_eq!(w[0].canonical_cmp(&w[1]), Ordering::Less);
        }
    }
}
