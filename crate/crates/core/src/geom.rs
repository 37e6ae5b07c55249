//! Exact projective linear algebra: spans, hyperplanes, line meets,
//! projections from subspaces, and the rational normal curve.
//!
//! Points of the projective line are homogeneous pairs (u:v) with x = u/v and
//! infinity = (1:0); the Veronese map is evaluated homogeneously so infinity
//! needs no special-casing anywhere downstream.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::Matrix;

/// Point of the projective line over some field.
#[derive(Clone, PartialEq)]
pub struct P1Point {
    pub u: FieldElement,
    pub v: FieldElement,
}

impl std::fmt::Debug for P1Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.v.is_zero() {
            write!(f, "inf")
        } else {
            write!(f, "{:?}", self.u.div(&self.v))
        }
    }
}

impl P1Point {
    pub fn finite(x: FieldElement) -> Self {
        let one = x.field().one();
        P1Point { u: x, v: one }
    }

    pub fn infinity(field: &Field) -> Self {
        P1Point { u: field.one(), v: field.zero() }
    }

    pub fn is_infinity(&self) -> bool {
        self.v.is_zero()
    }

    pub fn finite_value(&self) -> Option<FieldElement> {
        if self.v.is_zero() {
            None
        } else {
            Some(self.u.div(&self.v))
        }
    }

    pub fn same_as(&self, o: &Self) -> bool {
        let cross = self.u.mul(&o.v).sub(&self.v.mul(&o.u));
        cross.is_zero()
    }

    /// Canonical form: (x, 1) for finite points, (1, 0) for infinity.
    pub fn canonical(&self) -> Self {
        if self.v.is_zero() {
            P1Point::infinity(self.u.field())
        } else {
            P1Point::finite(self.u.div(&self.v))
        }
    }
}

/// Point of P^n as a homogeneous coordinate vector, not all zero.
#[derive(Clone, PartialEq)]
pub struct ProjPoint {
    pub coords: Vec<FieldElement>,
}

impl std::fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| format!("{:?}", c)).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl ProjPoint {
    pub fn new(coords: Vec<FieldElement>) -> Self {
        assert!(!coords.is_empty());
        ProjPoint { coords }
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn field(&self) -> &Field {
        self.coords[0].field()
    }

    pub fn is_null(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Scale so the first nonzero coordinate is 1 (exact fields).
    pub fn canonical(&self) -> Self {
        let lead = self.coords.iter().find(|c| !c.is_zero());
        match lead {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv();
                ProjPoint::new(self.coords.iter().map(|c| c.mul(&inv)).collect())
            }
        }
    }

    /// Projective equality: the 2 x (n+1) coordinate matrix has rank <= 1.
    pub fn same_as(&self, o: &Self) -> bool {
        assert_eq!(self.coords.len(), o.coords.len());
        let field = self.field();
        if field.is_big_complex() {
            let m = Matrix::from_rows(field, vec![self.coords.clone(), o.coords.clone()]);
            return m.rank() <= 1;
        }
        for i in 0..self.coords.len() {
            for j in i + 1..self.coords.len() {
                let cross = self.coords[i]
                    .mul(&o.coords[j])
                    .sub(&self.coords[j].mul(&o.coords[i]));
                if !cross.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Linear subspace of P^n held as a reduced-row-echelon basis of its cone.
#[derive(Clone, Debug)]
pub struct LinearSubspace {
    pub ambient: usize,
    pub basis: Matrix,
    pub pivots: Vec<usize>,
}

impl LinearSubspace {
    /// Projective dimension (rows - 1).
    pub fn proj_dim(&self) -> isize {
        self.basis.rows() as isize - 1
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        reduce_against(&self.basis, &self.pivots, &p.coords)
            .iter()
            .all(|c| c.is_zero())
    }
}

fn reduce_against(basis: &Matrix, pivots: &[usize], v: &[FieldElement]) -> Vec<FieldElement> {
    let mut w = v.to_vec();
    for (i, &pc) in pivots.iter().enumerate() {
        if !w[pc].is_zero() {
            let c = w[pc].clone();
            for j in 0..w.len() {
                let t = basis.at(i, j).mul(&c);
                w[j] = w[j].sub(&t);
            }
        }
    }
    w
}

/// Span of a set of points, with its rank.
pub fn span(points: &[ProjPoint]) -> (LinearSubspace, usize) {
    assert!(!points.is_empty());
    let field = points[0].field().clone();
    let ambient = points[0].ambient_dim();
    let rows: Vec<Vec<FieldElement>> = points.iter().map(|p| p.coords.clone()).collect();
    let m = Matrix::from_rows(&field, rows);
    let (r, pivots) = m.rref();
    let rank = pivots.len();
    (LinearSubspace { ambient, basis: r, pivots }, rank)
}

/// Degree-d Veronese image of a point of the projective line:
/// (u:v) -> (v^d : u v^(d-1) : ... : u^d). Finite t gives (1, t, ..., t^d),
/// infinity gives (0, ..., 0, 1).
pub fn veronese_embed(t: &P1Point, d: usize) -> ProjPoint {
    assert!(d >= 1);
    let field = t.u.field().clone();
    let mut coords = Vec::with_capacity(d + 1);
    let mut upow = vec![field.one()];
    let mut vpow = vec![field.one()];
    for i in 0..d {
        upow.push(upow[i].mul(&t.u));
        vpow.push(vpow[i].mul(&t.v));
    }
    for i in 0..=d {
        coords.push(upow[i].mul(&vpow[d - i]));
    }
    ProjPoint::new(coords)
}

/// Tangent line to the degree-d rational normal curve at a parameter value:
/// the span of the point with the derivative direction
/// (0, 1, 2t, ..., d t^(d-1)), or (0,...,0,1,0) at infinity.
pub fn tangent_line_rnc(t: &P1Point, d: usize) -> LinearSubspace {
    assert!(d >= 2);
    let field = t.u.field().clone();
    let pt = veronese_embed(t, d);
    let dir = if t.is_infinity() {
        let mut c = vec![field.zero(); d + 1];
        c[d - 1] = field.one();
        c
    } else {
        let tv = t.finite_value().unwrap();
        let mut c = vec![field.zero(); d + 1];
        let mut pw = field.one();
        for (i, ci) in c.iter_mut().enumerate().skip(1) {
            *ci = field.from_i64(i as i64).mul(&pw);
            pw = pw.mul(&tv);
        }
        c
    };
    let (sub, rank) = span(&[pt, ProjPoint::new(dir)]);
    debug_assert_eq!(rank, 2, "tangent direction collapsed");
    sub
}

/// Secant (or tangent) line through two parameter values on the degree-d
/// rational normal curve.
pub fn secant_line_rnc(t1: &P1Point, t2: &P1Point, d: usize) -> LinearSubspace {
    if t1.same_as(t2) {
        return tangent_line_rnc(t1, d);
    }
    let (sub, rank) = span(&[veronese_embed(t1, d), veronese_embed(t2, d)]);
    debug_assert_eq!(rank, 2);
    sub
}

/// A hyperplane in P^n: its dual linear form and a spanning basis.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    pub form: Vec<FieldElement>,
    pub basis: LinearSubspace,
}

impl Hyperplane {
    pub fn eval(&self, p: &ProjPoint) -> FieldElement {
        let mut acc = self.form[0].field().zero();
        for (f, c) in self.form.iter().zip(&p.coords) {
            acc = acc.add(&f.mul(c));
        }
        acc
    }
}

/// The unique hyperplane through six points of P^6 whose coordinate matrix
/// has rank 6.
pub fn hyperplane_through_six(points: &[ProjPoint]) -> Result<Hyperplane> {
    if points.len() != 6 || points.iter().any(|p| p.ambient_dim() != 6) {
        return Err(Error::InvalidInput("need exactly 6 points of P^6".into()));
    }
    let (sub, rank) = span(points);
    if rank != 6 {
        return Err(Error::DegeneratePointSet);
    }
    let field = points[0].field().clone();
    let rows: Vec<Vec<FieldElement>> = points.iter().map(|p| p.coords.clone()).collect();
    let m = Matrix::from_rows(&field, rows);
    let kernel = m.kernel();
    if kernel.len() != 1 {
        return Err(Error::DegeneratePointSet);
    }
    Ok(Hyperplane { form: kernel.into_iter().next().unwrap(), basis: sub })
}

/// Unique intersection point of a line with a hyperplane not containing it.
pub fn line_meet_hyperplane(line: &LinearSubspace, h: &Hyperplane) -> Result<ProjPoint> {
    if line.rank() != 2 {
        return Err(Error::InvalidInput("line must have projective dimension 1".into()));
    }
    let u = line.basis.row(0);
    let v = line.basis.row(1);
    let hu = h.eval(&ProjPoint::new(u.clone()));
    let hv = h.eval(&ProjPoint::new(v.clone()));
    let field = u[0].field().clone();
    let negligible = |x: &FieldElement, other: &FieldElement| -> bool {
        if let Some(tol) = field.tolerance() {
            let scale = x.magnitude().add(&other.magnitude());
            x.magnitude().cmp_val(&tol.mul(&scale)) != std::cmp::Ordering::Greater
        } else {
            x.is_zero()
        }
    };
    if negligible(&hu, &hv) && negligible(&hv, &hu) {
        return Err(Error::LineInHyperplane);
    }
    let coords: Vec<FieldElement> = u
        .iter()
        .zip(&v)
        .map(|(ui, vi)| hv.mul(ui).sub(&hu.mul(vi)))
        .collect();
    Ok(ProjPoint::new(coords))
}

/// Projection away from a subspace, onto the deterministic complement given
/// by the coordinate axes at the non-pivot columns of its echelon basis.
pub fn project_from(center: &LinearSubspace, q: &ProjPoint) -> Result<ProjPoint> {
    let n = q.coords.len();
    assert_eq!(center.basis.cols(), n, "ambient mismatch");
    let reduced = reduce_against(&center.basis, &center.pivots, &q.coords);
    let field = q.field().clone();
    let img: Vec<FieldElement> = (0..n)
        .filter(|c| !center.pivots.contains(c))
        .map(|c| reduced[c].clone())
        .collect();
    let vanished = if let Some(tol) = field.tolerance() {
        let scale = q
            .coords
            .iter()
            .map(|c| c.magnitude())
            .fold(crate::field::MpFloat::zero(field.prec_bits()), |a, b| a.add(&b));
        let cut = tol.mul(&scale);
        img.iter()
            .all(|c| c.magnitude().cmp_val(&cut) != std::cmp::Ordering::Greater)
    } else {
        img.iter().all(|c| c.is_zero())
    };
    if vanished {
        return Err(Error::ProjectionCenter);
    }
    Ok(ProjPoint::new(img))
}

/// Coordinates of a point inside a spanned subspace, w.r.t. its echelon basis.
pub fn coords_in_subspace(sub: &LinearSubspace, q: &ProjPoint) -> Result<Vec<FieldElement>> {
    let coords: Vec<FieldElement> =
        sub.pivots.iter().map(|&c| q.coords[c].clone()).collect();
    // membership check: the residual must vanish
    let field = q.field().clone();
    let mut resid = q.coords.clone();
    for (i, coef) in coords.iter().enumerate() {
        for j in 0..resid.len() {
            let t = sub.basis.at(i, j).mul(coef);
            resid[j] = resid[j].sub(&t);
        }
    }
    let ok = if let Some(tol) = field.tolerance() {
        let scale = q
            .coords
            .iter()
            .map(|c| c.magnitude())
            .fold(crate::field::MpFloat::zero(field.prec_bits()), |a, b| a.add(&b));
        resid
            .iter()
            .all(|c| c.magnitude().cmp_val(&tol.mul(&scale)) != std::cmp::Ordering::Greater)
    } else {
        resid.iter().all(|c| c.is_zero())
    };
    if !ok {
        return Err(Error::InvalidInput("point not in subspace".into()));
    }
    Ok(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> Field {
        Field::make_extension(3, 2, None).unwrap()
    }

    #[test]
    fn veronese_examples() {
        let q = Field::rationals();
        let p = veronese_embed(&P1Point::finite(q.from_i64(0)), 6);
        assert_eq!(p.coords[0], q.one());
        assert!(p.coords[1..].iter().all(|c| c.is_zero()));

        let p = veronese_embed(&P1Point::infinity(&q), 6);
        assert!(p.coords[..6].iter().all(|c| c.is_zero()));
        assert_eq!(p.coords[6], q.one());

        let p = veronese_embed(&P1Point::finite(q.from_i64(2)), 2);
        assert_eq!(
            p.coords,
            vec![q.from_i64(1), q.from_i64(2), q.from_i64(4)]
        );
    }

    #[test]
    fn span_examples() {
        let q = Field::rationals();
        let e = |i: usize| {
            let mut c = vec![q.zero(); 4];
            c[i] = q.one();
            ProjPoint::new(c)
        };
        let (_, rank) = span(&[e(0), e(1)]);
        assert_eq!(rank, 2);
        let sum = ProjPoint::new(vec![q.one(), q.one(), q.zero(), q.zero()]);
        let (sub, rank) = span(&[e(0), e(1), sum.clone()]);
        assert_eq!(rank, 2);
        assert!(sub.contains(&sum));
    }

    #[test]
    fn six_veronese_points_have_rank_six() {
        let f = f9();
        let ts: Vec<P1Point> = f
            .elements()
            .take(5)
            .map(P1Point::finite)
            .chain(std::iter::once(P1Point::infinity(&f)))
            .collect();
        let pts: Vec<ProjPoint> = ts.iter().map(|t| veronese_embed(t, 6)).collect();
        let (_, rank) = span(&pts);
        assert_eq!(rank, 6);
        let h = hyperplane_through_six(&pts).unwrap();
        for p in &pts {
            assert!(h.eval(p).is_zero());
        }
    }

    #[test]
    fn hyperplane_standard_basis() {
        let q = Field::rationals();
        let e = |i: usize| {
            let mut c = vec![q.zero(); 7];
            c[i] = q.one();
            ProjPoint::new(c)
        };
        let pts: Vec<ProjPoint> = (0..6).map(e).collect();
        let h = hyperplane_through_six(&pts).unwrap();
        // form is x6 = 0 up to scalar
        assert!(h.form[..6].iter().all(|c| c.is_zero()));
        assert!(!h.form[6].is_zero());

        // duplicated point -> degenerate
        let mut dup = pts.clone();
        dup[5] = dup[0].clone();
        assert_eq!(hyperplane_through_six(&dup).unwrap_err(), Error::DegeneratePointSet);
    }

    #[test]
    fn line_meets() {
        let q = Field::rationals();
        let e = |i: usize| {
            let mut c = vec![q.zero(); 7];
            c[i] = q.one();
            ProjPoint::new(c)
        };
        let pts: Vec<ProjPoint> = (0..6).map(e).collect();
        let h = hyperplane_through_six(&pts).unwrap(); // x6 = 0
        let (line, _) = span(&[e(0), e(6)]);
        let meet = line_meet_hyperplane(&line, &h).unwrap();
        assert!(meet.same_as(&e(0)));

        let (line2, _) = span(&[e(0), e(1)]);
        assert_eq!(line_meet_hyperplane(&line2, &h).unwrap_err(), Error::LineInHyperplane);
    }

    #[test]
    fn tangent_char3_degree6() {
        let f = f9();
        let t = P1Point::finite(f.from_i64(2));
        let line = tangent_line_rnc(&t, 6);
        assert_eq!(line.rank(), 2);
        // derivative vector has zeros at positions 0, 3, 6 in char 3
        let tv = f.from_i64(2);
        let mut expect = vec![f.zero(); 7];
        expect[1] = f.one();
        expect[2] = f.from_i64(2).mul(&tv);
        expect[4] = tv.pow(3);
        expect[5] = f.from_i64(2).mul(&tv.pow(4));
        assert!(line.contains(&ProjPoint::new(expect)));
        assert!(line.contains(&veronese_embed(&t, 6)));
    }

    #[test]
    fn projection_complement() {
        let q = Field::rationals();
        // project P^3 from the point e3: (a,b,c,d) -> (a,b,c)
        let e3 = ProjPoint::new(vec![q.zero(), q.zero(), q.zero(), q.one()]);
        let (center, _) = span(&[e3.clone()]);
        let p = ProjPoint::new(vec![q.from_i64(1), q.from_i64(2), q.from_i64(3), q.from_i64(9)]);
        let img = project_from(&center, &p).unwrap();
        assert_eq!(
            img.coords,
            vec![q.from_i64(1), q.from_i64(2), q.from_i64(3)]
        );
        assert_eq!(project_from(&center, &e3).unwrap_err(), Error::ProjectionCenter);
    }

    #[test]
    fn projection_is_linear_on_collinear_triples() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let f = f9();
        for _ in 0..20 {
            let a: Vec<FieldElement> = (0..5).map(|_| f.random_element(&mut rng)).collect();
            let b: Vec<FieldElement> = (0..5).map(|_| f.random_element(&mut rng)).collect();
            let c: Vec<FieldElement> = a
                .iter()
                .zip(&b)
                .map(|(x, y)| x.add(y))
                .collect();
            let pa = ProjPoint::new(a);
            let pb = ProjPoint::new(b);
            let pc = ProjPoint::new(c);
            if pa.is_null() || pb.is_null() || pc.is_null() {
                continue;
            }
            let center_pt = ProjPoint::new(vec![
                f.one(),
                f.zero(),
                f.zero(),
                f.zero(),
                f.from_i64(1),
            ]);
            let (center, _) = span(&[center_pt]);
            let imgs: Vec<_> = [&pa, &pb, &pc]
                .iter()
                .map(|p| project_from(&center, p))
                .collect();
            if imgs.iter().any(|r| r.is_err()) {
                continue;
            }
            let imgs: Vec<ProjPoint> = imgs.into_iter().map(|r| r.unwrap()).collect();
            let (_, rank) = span(&imgs);
            assert!(rank <= 2, "projection broke collinearity");
        }
    }
}
