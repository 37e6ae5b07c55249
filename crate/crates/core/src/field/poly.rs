//! Dense univariate polynomials over any [`Field`].
//!
//! Coefficients are stored low degree first with trailing zeros trimmed;
//! the zero polynomial has an empty coefficient list and `degree() == None`.

use super::{Field, FieldElement};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({:?})x^{}", c, i))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Polynomial {
    pub fn zero(field: &Field) -> Self {
        Polynomial { field: field.clone(), coeffs: vec![] }
    }

    pub fn from_coeffs(field: &Field, coeffs: Vec<FieldElement>) -> Self {
        let mut p = Polynomial { field: field.clone(), coeffs };
        p.trim();
        p
    }

    pub fn from_i64_slice(field: &Field, coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn constant(c: FieldElement) -> Self {
        let field = c.field().clone();
        Polynomial::from_coeffs(&field, vec![c])
    }

    pub fn x(field: &Field) -> Self {
        Polynomial::from_coeffs(field, vec![field.zero(), field.one()])
    }

    /// x^n with coefficient c.
    pub fn monomial(c: FieldElement, n: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = c;
        Polynomial::from_coeffs(&field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.leading().inv();
        self.scale(&inv)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Polynomial::from_coeffs(&self.field, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&o.coeff(i)));
        }
        Polynomial::from_coeffs(&self.field, out)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial::from_coeffs(&self.field, self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Polynomial::from_coeffs(&self.field, out)
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Polynomial::constant(self.field.one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().inv();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let c = rem.last().unwrap().mul(&lead_inv);
            let pos = rem.len() - 1 - dd;
            if !c.is_zero() {
                quo[pos] = c.clone();
                for (j, djc) in d.coeffs.iter().enumerate() {
                    rem[pos + j] = rem[pos + j].sub(&c.mul(djc));
                }
            }
            rem.pop();
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
        }
        (
            Polynomial::from_coeffs(&self.field, quo),
            Polynomial::from_coeffs(&self.field, rem),
        )
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (exact fields).
    pub fn gcd(&self, o: &Self) -> Self {
        assert!(
            !self.field.is_big_complex(),
            "gcd over big-complex is not meaningful"
        );
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero(&self.field);
        }
        let out: Vec<FieldElement> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.field.from_i64(i as i64)))
            .collect();
        Polynomial::from_coeffs(&self.field, out)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// self(g(x)).
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Polynomial::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Polynomial::constant(c.clone()));
        }
        acc
    }

    /// self^n mod m with a BigUint exponent.
    pub fn powmod_big(&self, n: &num_bigint::BigUint, m: &Self) -> Self {
        let mut acc = Polynomial::constant(self.field.one()).rem(m);
        let mut base = self.rem(m);
        for i in 0..n.bits() {
            if n.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
        }
        acc
    }

    /// Resultant of self and o, via the Euclidean recurrence over a field.
    pub fn resultant(&self, o: &Self) -> FieldElement {
        fn go(f: &Polynomial, g: &Polynomial) -> FieldElement {
            let field = f.field().clone();
            let df = match f.degree() {
                Some(d) => d,
                None => return field.zero(),
            };
            let dg = match g.degree() {
                Some(d) => d,
                None => return if df == 0 { field.one() } else { field.zero() },
            };
            if df < dg {
                let s = go(g, f);
                return if (df * dg) % 2 == 1 { s.neg() } else { s };
            }
            if dg == 0 {
                return g.leading().pow(df as u64);
            }
            let r = f.rem(g);
            match r.degree() {
                None => field.zero(),
                Some(dr) => {
                    let s = go(g, &r);
                    let factor = g.leading().pow((df - dr) as u64);
                    let s = factor.mul(&s);
                    if (df * dg) % 2 == 1 {
                        s.neg()
                    } else {
                        s
                    }
                }
            }
        }
        go(self, o)
    }

    /// Discriminant with the standard normalization
    /// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
    pub fn discriminant(&self) -> Result<FieldElement> {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::DegreeTooSmall),
        };
        let res = self.resultant(&self.derivative());
        let res = res.div(&self.leading());
        Ok(if (d * (d - 1) / 2) % 2 == 1 { res.neg() } else { res })
    }

    /// Monic gcd(f, g or f'), plus whether f is squarefree (gcd(f, f') = 1).
    pub fn gcd_squarefree(&self, g: Option<&Self>) -> Result<(Self, bool)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let with_deriv = self.gcd(&self.derivative());
        let squarefree = with_deriv.degree() == Some(0);
        let gcd = match g {
            Some(g) => self.gcd(g),
            None => with_deriv,
        };
        Ok((gcd, squarefree))
    }

    /// Lagrange interpolation through (x_i, y_i) with distinct x_i.
    pub fn interpolate(field: &Field, points: &[(FieldElement, FieldElement)]) -> Self {
        let mut acc = Polynomial::zero(field);
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut num = Polynomial::constant(field.one());
            let mut den = field.one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                num = num.mul(&Polynomial::from_coeffs(
                    field,
                    vec![xj.neg(), field.one()],
                ));
                den = den.mul(&xi.sub(xj));
            }
            acc = acc.add(&num.scale(&yi.div(&den)));
        }
        acc
    }

    /// prod (x - r_i) over the given roots.
    pub fn from_roots(field: &Field, roots: &[FieldElement]) -> Self {
        let mut acc = Polynomial::constant(field.one());
        for r in roots {
            acc = acc.mul(&Polynomial::from_coeffs(field, vec![r.neg(), field.one()]));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_classical() {
        let q = Field::rationals();
        // x^2 + bx + c with b=3, c=1 -> b^2-4c = 5
        let f = Polynomial::from_i64_slice(&q, &[1, 3, 1]);
        assert_eq!(f.discriminant().unwrap(), q.from_i64(5));
        // (x-1)^2 x -> 0
        let f = Polynomial::from_i64_slice(&q, &[0, 1, -2, 1]);
        assert!(f.discriminant().unwrap().is_zero());
        // x^3 - 1 -> -27
        let f = Polynomial::from_i64_slice(&q, &[-1, 0, 0, 1]);
        assert_eq!(f.discriminant().unwrap(), q.from_i64(-27));
        // constant rejected
        let f = Polynomial::from_i64_slice(&q, &[5]);
        assert_eq!(f.discriminant().unwrap_err(), Error::DegreeTooSmall);
    }

    #[test]
    fn squarefree_detection() {
        let f3 = Field::prime(3).unwrap();
        // x^5 + x over F3: squarefree
        let f = Polynomial::from_i64_slice(&f3, &[0, 1, 0, 0, 0, 1]);
        let (_, sf) = f.gcd_squarefree(None).unwrap();
        assert!(sf);
        // (x+1)^2
        let f = Polynomial::from_i64_slice(&f3, &[1, 2, 1]);
        let (_, sf) = f.gcd_squarefree(None).unwrap();
        assert!(!sf);
        // x over Q
        let q = Field::rationals();
        let f = Polynomial::from_i64_slice(&q, &[0, 1]);
        let (_, sf) = f.gcd_squarefree(None).unwrap();
        assert!(sf);
        // zero rejected
        let z = Polynomial::zero(&q);
        assert_eq!(z.gcd_squarefree(None).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn gcd_euclid_example() {
        let f3 = Field::prime(3).unwrap();
        let f = Polynomial::from_i64_slice(&f3, &[0, 1, 0, 0, 0, 1]); // x^5+x
        let d = f.derivative(); // 2x^4+1
        assert_eq!(d, Polynomial::from_i64_slice(&f3, &[1, 0, 0, 0, 2]));
        let g = f.gcd(&d);
        assert_eq!(g.degree(), Some(0));
    }

    #[test]
    fn interpolate_roundtrip() {
        let q = Field::rationals();
        let f = Polynomial::from_i64_slice(&q, &[2, -1, 0, 7]);
        let pts: Vec<_> = (0..4)
            .map(|i| {
                let x = q.from_i64(i);
                (x.clone(), f.eval(&x))
            })
            .collect();
        assert_eq!(Polynomial::interpolate(&q, &pts), f);
    }
}
