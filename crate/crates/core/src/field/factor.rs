//! Root finding in splitting fields, deterministic field embeddings, and
//! compositum construction for finite fields.
//!
//! Strategy: squarefree-decompose (with p-th power descent), read off the
//! splitting degree from a distinct-degree profile, build the canonical
//! extension of that degree, then extract roots — exhaustively on fields of
//! at most 3^10 elements, by deterministic equal-degree splitting above that.
//! Every choice (modulus, embedding root, splitting shifts) is pinned to the
//! canonical element order so repeated runs agree bit for bit.

use super::poly::Polynomial;
use super::{Field, FieldElement, FieldKind};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

/// Field homomorphism F_{p^a} -> F_{p^b} (a | b), fixing F_p, determined by
/// the image of the generator: the canonically least root of the sub-modulus.
#[derive(Debug, Clone)]
pub struct Embedding {
    from: Field,
    to: Field,
    gen_image: FieldElement,
}

impl Embedding {
    pub fn identity(f: &Field) -> Self {
        Embedding { from: f.clone(), to: f.clone(), gen_image: f.generator() }
    }

    pub fn from_field(&self) -> &Field {
        &self.from
    }

    pub fn to_field(&self) -> &Field {
        &self.to
    }

    pub fn apply(&self, e: &FieldElement) -> FieldElement {
        assert!(e.field() == &self.from, "embedding applied to foreign element");
        if self.from == self.to {
            return e.clone();
        }
        let coeffs = e.coeff_vec_u64();
        let mut acc = self.to.zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(&self.gen_image).add(&self.to.from_i64(*c as i64));
        }
        acc
    }

    pub fn apply_poly(&self, f: &Polynomial) -> Polynomial {
        Polynomial::from_coeffs(&self.to, f.coeffs().iter().map(|c| self.apply(c)).collect())
    }
}

fn modulus_key(f: &Field) -> (u64, Vec<u64>) {
    match f.kind() {
        FieldKind::PrimeFinite { p } => (*p, vec![]),
        FieldKind::ExtensionFinite { p, modulus, .. } => (*p, modulus.clone()),
        _ => panic!("finite field expected"),
    }
}

/// Embedding of one finite field into another containing it; cached.
pub fn embed_into(from: &Field, to: &Field) -> Result<Embedding> {
    if from.characteristic() != to.characteristic() {
        return Err(Error::FieldMismatch(format!(
            "characteristics {} vs {}",
            from.characteristic(),
            to.characteristic()
        )));
    }
    if !from.is_finite() || !to.is_finite() {
        return Err(Error::UnsupportedField("embedding needs finite fields".into()));
    }
    if from == to {
        return Ok(Embedding::identity(from));
    }
    let (ka, kb) = (from.extension_degree(), to.extension_degree());
    if kb % ka != 0 {
        return Err(Error::FieldMismatch(format!("degree {} does not divide {}", ka, kb)));
    }
    if ka == 1 {
        return Ok(Embedding { from: from.clone(), to: to.clone(), gen_image: to.one() });
    }

    static CACHE: OnceLock<Mutex<BTreeMap<((u64, Vec<u64>), (u64, Vec<u64>)), Vec<u64>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let key = (modulus_key(from), modulus_key(to));
    if let Some(img) = cache.lock().unwrap().get(&key) {
        return Ok(Embedding {
            from: from.clone(),
            to: to.clone(),
            gen_image: to.from_coeffs(img)?,
        });
    }

    // image of the generator: least root of from's modulus inside `to`
    let m = from.modulus_coeffs();
    let mpoly = Polynomial::from_coeffs(
        to,
        m.iter().map(|&c| to.from_i64(c as i64)).collect(),
    );
    let mut roots = roots_in_field(&mpoly);
    if roots.is_empty() {
        return Err(Error::FieldMismatch("sub-modulus has no root in target".into()));
    }
    roots.sort_by(|a, b| a.canonical_cmp(b));
    let gen_image = roots.remove(0);
    cache
        .lock()
        .unwrap()
        .insert(key, gen_image.coeff_vec_u64());
    Ok(Embedding { from: from.clone(), to: to.clone(), gen_image })
}

/// Smallest common overfield of two finite fields plus the two embeddings.
pub fn compose_fields(e1: &Field, e2: &Field) -> Result<(Field, Embedding, Embedding)> {
    if e1.characteristic() != e2.characteristic() || e1.characteristic() == 0 {
        return Err(Error::FieldMismatch(format!(
            "cannot compose {:?} and {:?}",
            e1, e2
        )));
    }
    let p = e1.characteristic();
    let (k1, k2) = (e1.extension_degree(), e2.extension_degree());
    let l = k1.lcm(&k2);
    let target = if l == k1 {
        e1.clone()
    } else if l == k2 {
        e2.clone()
    } else {
        Field::make_extension(p, l, None)?
    };
    Ok((target.clone(), embed_into(e1, &target)?, embed_into(e2, &target)?))
}

/// Compositum of many finite fields with all the embeddings.
pub fn compose_many(fields: &[Field]) -> Result<(Field, Vec<Embedding>)> {
    assert!(!fields.is_empty());
    let mut target = fields[0].clone();
    for f in &fields[1..] {
        let (t, _, _) = compose_fields(&target, f)?;
        target = t;
    }
    let embs = fields
        .iter()
        .map(|f| embed_into(f, &target))
        .collect::<Result<Vec<_>>>()?;
    Ok((target, embs))
}

/// Coefficient-wise p-th root of a polynomial whose terms are all x^(p*i).
fn pth_root_poly(f: &Polynomial) -> Polynomial {
    let field = f.field().clone();
    let p = field.characteristic() as usize;
    let k = field.extension_degree();
    let mut out = vec![];
    for i in (0..f.coeffs().len()).step_by(p) {
        let mut c = f.coeff(i);
        // inverse Frobenius: c^(p^(k-1))
        for _ in 0..k.saturating_sub(1) {
            c = c.pow(p as u64);
        }
        out.push(c);
    }
    Polynomial::from_coeffs(&field, out)
}

/// Squarefree decomposition over a finite field: pairwise-coprime squarefree
/// g_i with f = lc * prod g_i^(m_i).
pub fn squarefree_decomposition(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    let f = f.monic();
    if f.degree().map(|d| d == 0).unwrap_or(true) {
        return vec![];
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        let h = pth_root_poly(&f);
        let p = f.field().characteristic() as usize;
        return squarefree_decomposition(&h)
            .into_iter()
            .map(|(g, m)| (g, m * p))
            .collect();
    }
    let mut result = vec![];
    let mut g = f.gcd(&deriv);
    let mut w = f.div_exact(&g);
    let mut i = 1;
    while w.degree().map(|d| d > 0).unwrap_or(false) {
        let y = w.gcd(&g);
        let z = w.div_exact(&y);
        if z.degree().map(|d| d > 0).unwrap_or(false) {
            result.push((z, i));
        }
        w = y.clone();
        g = g.div_exact(&y);
        i += 1;
    }
    if g.degree().map(|d| d > 0).unwrap_or(false) {
        let h = pth_root_poly(&g);
        let p = f.field().characteristic() as usize;
        for (q, m) in squarefree_decomposition(&h) {
            result.push((q, m * p));
        }
    }
    result
}

/// x^(q^j) mod f for j = 1.., computed by iterating x -> x^q.
struct FrobeniusChain {
    f: Polynomial,
    q: BigUint,
    cur: Polynomial,
}

impl FrobeniusChain {
    fn new(f: &Polynomial) -> Self {
        let field = f.field();
        let q = field.element_count().expect("finite field");
        let x = Polynomial::x(field);
        FrobeniusChain { f: f.clone(), q, cur: x }
    }

    fn next_power(&mut self) -> Polynomial {
        self.cur = self.cur.powmod_big(&self.q, &self.f);
        self.cur.clone()
    }
}

/// Degrees of the irreducible factors of a squarefree polynomial.
pub fn irreducible_factor_degrees(f: &Polynomial) -> Vec<usize> {
    let mut f = f.monic();
    let mut out = vec![];
    let mut chain = FrobeniusChain::new(&f);
    let x = Polynomial::x(f.field());
    let mut d = 0;
    while f.degree().map(|e| e > 0).unwrap_or(false) {
        d += 1;
        if d * 2 > f.degree().unwrap() {
            out.push(f.degree().unwrap());
            break;
        }
        let xqd = chain.next_power();
        let g = f.gcd(&xqd.sub(&x));
        if g.degree().map(|e| e > 0).unwrap_or(false) {
            for _ in 0..g.degree().unwrap() / d {
                out.push(d);
            }
            f = f.div_exact(&g);
            // keep the chain consistent with the reduced modulus
            chain.f = f.clone();
            chain.cur = chain.cur.rem(&f);
        }
    }
    out
}

const EXHAUSTIVE_LIMIT: u64 = 59049; // 3^10

/// All roots of f lying in its own coefficient field. Returns distinct roots.
pub fn roots_in_field(f: &Polynomial) -> Vec<FieldElement> {
    let field = f.field().clone();
    let count = field.element_count().expect("finite field");
    if count <= BigUint::from(EXHAUSTIVE_LIMIT) {
        let mut out: Vec<FieldElement> =
            field.elements().filter(|e| f.eval(e).is_zero()).collect();
        out.sort_by(|a, b| a.canonical_cmp(b));
        return out;
    }
    // linear part: gcd(f, x^q - x)
    let f = f.monic();
    let x = Polynomial::x(&field);
    let xq = x.powmod_big(&count, &f);
    let lin = f.gcd(&xq.sub(&x));
    let mut roots = vec![];
    split_linear_product(&lin, &mut roots);
    roots.sort_by(|a, b| a.canonical_cmp(b));
    roots
}

/// Split a product of distinct linear factors into roots, deterministically:
/// sweep shifts delta in canonical order and cut with gcd(g, (x+delta)^((q-1)/2) - 1).
fn split_linear_product(g: &Polynomial, out: &mut Vec<FieldElement>) {
    let field = g.field().clone();
    match g.degree() {
        None | Some(0) => return,
        Some(1) => {
            // monic x + c -> root -c
            let c = g.coeff(0).div(&g.coeff(1));
            out.push(c.neg());
            return;
        }
        _ => {}
    }
    let q = field.element_count().unwrap();
    let e = (&q - BigUint::one()) / BigUint::from(2u32);
    let one = Polynomial::constant(field.one());
    for delta in field_element_sequence(&field) {
        let shifted = Polynomial::from_coeffs(&field, vec![delta.clone(), field.one()]);
        let h = shifted.powmod_big(&e, g).sub(&one);
        let t = g.gcd(&h);
        if let Some(dt) = t.degree() {
            if dt > 0 && dt < g.degree().unwrap() {
                split_linear_product(&t, out);
                split_linear_product(&g.div_exact(&t), out);
                return;
            }
        }
    }
    unreachable!("splitting sweep exhausted the field");
}

/// Deterministic unbounded-ish element sequence: elements in canonical order.
fn field_element_sequence(field: &Field) -> impl Iterator<Item = FieldElement> + '_ {
    field.elements()
}

/// Minimal extension splitting f completely, with all roots and multiplicities.
/// The sum of multiplicities equals deg f; the returned field is the canonical
/// extension of degree lcm(irreducible factor degrees) over the coefficient
/// field (the coefficient field itself when that lcm is 1).
pub fn roots_in_splitting_field(
    f: &Polynomial,
) -> Result<(Field, Embedding, Vec<(FieldElement, usize)>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let base = f.field().clone();
    if !base.is_finite() {
        return Err(Error::UnsupportedField("splitting fields need a finite base".into()));
    }
    let parts = squarefree_decomposition(f);
    let mut m = 1usize;
    for (g, _) in &parts {
        for d in irreducible_factor_degrees(g) {
            m = m.lcm(&d);
        }
    }
    let p = base.characteristic();
    let k = base.extension_degree();
    let (target, emb) = if m == 1 {
        (base.clone(), Embedding::identity(&base))
    } else {
        let t = Field::make_extension(p, k * m, None)?;
        let e = embed_into(&base, &t)?;
        (t, e)
    };
    let mut roots: Vec<(FieldElement, usize)> = vec![];
    for (g, mult) in &parts {
        let gg = emb.apply_poly(g);
        for r in roots_in_field(&gg) {
            roots.push((r, *mult));
        }
    }
    roots.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok((target, emb, roots))
}
