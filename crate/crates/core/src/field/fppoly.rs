//! Dense polynomial helpers over a prime field F_p, on raw `Vec<u64>`.
//!
//! These back the deterministic modulus table and irreducibility testing.
//! Everything user-facing goes through [`crate::field::Polynomial`] instead;
//! this layer exists so that building an extension field never requires one.

use std::collections::BTreeMap;
use std::sync::Mutex;
use std::sync::OnceLock;

#[inline]
pub fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p { s - p } else { s }
}

#[inline]
pub fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b { a - b } else { a + p - b }
}

#[inline]
pub fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn invm(a: u64, p: u64) -> u64 {
    // extended euclid on integers
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible mod p");
    (t.rem_euclid(p as i128)) as u64
}

pub fn trim(c: &mut Vec<u64>) {
    while let Some(&last) = c.last() {
        if last == 0 {
            c.pop();
        } else {
            break;
        }
    }
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(x, y, p), p);
        }
    }
    trim(&mut out);
    out
}

/// Remainder of a modulo monic m.
pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (j, &mj) in m.iter().enumerate() {
                r[shift + j] = subm(r[shift + j], mulm(lead, mj, p), p);
            }
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut r);
    r
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // make b monic for rem
        let inv = invm(*b.last().unwrap(), p);
        let bm: Vec<u64> = b.iter().map(|&c| mulm(c, inv, p)).collect();
        let r = rem(&a, &bm, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let inv = invm(l, p);
        a.iter().map(|&c| mulm(c, inv, p)).collect()
    } else {
        a
    }
}

fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

/// Inverse of a modulo monic irreducible m, None if gcd != 1.
pub fn invmod_poly(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    // extended euclid: maintain r, u with u*a == r (mod m)
    let mut r0 = m.to_vec();
    let mut r1 = rem(a, m, p);
    let mut u0: Vec<u64> = vec![];
    let mut u1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        // divide r0 by r1
        let inv = invm(*r1.last().unwrap(), p);
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut rr = r0.clone();
        while rr.len() >= r1.len() && !rr.is_empty() {
            let d = rr.len() - r1.len();
            let c = mulm(*rr.last().unwrap(), inv, p);
            if c != 0 {
                q[d] = addm(q[d], c, p);
                for (j, &mj) in r1.iter().enumerate() {
                    rr[d + j] = subm(rr[d + j], mulm(c, mj, p), p);
                }
            }
            rr.pop();
            trim(&mut rr);
        }
        trim(&mut q);
        // u2 = u0 - q*u1
        let qu = mul(&q, &u1, p);
        let n = u0.len().max(qu.len());
        let mut u2 = vec![0u64; n];
        for (i, &c) in u0.iter().enumerate() {
            u2[i] = c;
        }
        for (i, &c) in qu.iter().enumerate() {
            u2[i] = subm(u2[i], c, p);
        }
        trim(&mut u2);
        r0 = r1;
        r1 = rr;
        u0 = u1;
        u1 = u2;
    }
    if r0.len() != 1 {
        return None;
    }
    let inv = invm(r0[0], p);
    Some(rem(&u0.iter().map(|&c| mulm(c, inv, p)).collect::<Vec<_>>(), m, p))
}

/// x^(p^e) mod m, by e rounds of x -> x^p.
fn frob_power_x(e: usize, m: &[u64], p: u64) -> Vec<u64> {
    let mut cur = if m.len() - 1 == 1 {
        rem(&[0, 1], m, p)
    } else {
        vec![0, 1]
    };
    for _ in 0..e {
        cur = pow_mod(&cur, p, m, p);
    }
    cur
}

fn pow_mod(a: &[u64], mut n: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut base = a.to_vec();
    let mut acc = vec![1u64];
    while n > 0 {
        if n & 1 == 1 {
            acc = mulmod(&acc, &base, m, p);
        }
        base = mulmod(&base, &base, m, p);
        n >>= 1;
    }
    acc
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin irreducibility test for a monic polynomial of degree >= 1 over F_p.
pub fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    // x^(p^k) == x mod m
    let xpk = frob_power_x(k, m, p);
    let x = rem(&[0, 1], m, p);
    if xpk != x {
        return false;
    }
    for l in prime_factors(k) {
        let e = k / l;
        let xpe = frob_power_x(e, m, p);
        // gcd(x^(p^e) - x, m) must be 1
        let mut diff = xpe.clone();
        while diff.len() < 2 {
            diff.push(0);
        }
        diff[1] = subm(diff[1], 1, p);
        trim(&mut diff);
        let g = gcd(&diff, m, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Deterministic irreducible monic polynomial of degree k over F_p: the one
/// whose non-leading coefficient tuple (c_0.., low first) is smallest in the
/// base-p counting order.
pub fn canonical_irreducible(p: u64, k: usize) -> Vec<u64> {
    static TABLE: OnceLock<Mutex<BTreeMap<(u64, usize), Vec<u64>>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(m) = table.lock().unwrap().get(&(p, k)) {
        return m.clone();
    }
    let mut digits = vec![0u64; k];
    let m = loop {
        let mut cand: Vec<u64> = digits.clone();
        cand.push(1);
        if is_irreducible(&cand, p) {
            break cand;
        }
        // increment base-p counter
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
            assert!(i < k, "no irreducible found (impossible)");
        }
    };
    table.lock().unwrap().insert((p, k), m.clone());
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli_char3() {
        assert_eq!(canonical_irreducible(3, 2), vec![1, 0, 1]); // X^2+1
        assert_eq!(canonical_irreducible(3, 3), vec![1, 2, 0, 1]); // X^3+2X+1
        let m4 = canonical_irreducible(3, 4);
        assert!(is_irreducible(&m4, 3));
        assert_eq!(m4.len(), 5);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&[1, 0, 1], 3)); // X^2+1
        assert!(!is_irreducible(&[2, 0, 1], 3)); // X^2-1=(X-1)(X+1)
        assert!(is_irreducible(&[1, 1], 3)); // X+1
        assert!(!is_irreducible(&[0, 0, 1], 3)); // X^2
    }

    #[test]
    fn canonical_irreducible_deg3_has_no_roots() {
        let m = canonical_irreducible(3, 3);
        for a in 0..3u64 {
            let mut acc = 0u64;
            for &c in m.iter().rev() {
                acc = addm(mulm(acc, a, 3), c, 3);
            }
            assert_ne!(acc, 0);
        }
    }
}
