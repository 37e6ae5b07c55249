//! Matrices over any [`Field`], with exact elimination for the exact kinds
//! and threshold/SVD-based decisions for big-complex.
//!
//! Rank decisions over big-complex use the singular-value ratio against the
//! field tolerance 10^(-P/2); pivoting is deterministic (leftmost admissible
//! column, largest magnitude row), so runs reproduce exactly.

use crate::error::{Error, Result};
use crate::field::{BigC, Field, FieldElement, MpFloat};

#[derive(Clone, PartialEq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    a: Vec<FieldElement>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self.at(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            a: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut a = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            a.extend(row);
        }
        Matrix { field: field.clone(), rows: r, cols: c, a }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Matrix::new(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        &self.a[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut FieldElement {
        &mut self.a[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<FieldElement> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::new(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows);
        let mut out = Matrix::new(&self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let t = aik.mul(o.at(k, j));
                    *out.at_mut(i, j) = out.at(i, j).add(&t);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    fn max_magnitude(&self) -> MpFloat {
        let prec = self.field.prec_bits();
        let mut m = MpFloat::zero(prec);
        for e in &self.a {
            let a = e.magnitude();
            if a.cmp_val(&m) == std::cmp::Ordering::Greater {
                m = a;
            }
        }
        m
    }

    fn pivot_negligible(&self, x: &FieldElement, scale: &Option<MpFloat>) -> bool {
        match scale {
            None => x.is_zero(),
            Some(s) => {
                if x.is_zero() {
                    return true;
                }
                let tol = self.field.tolerance().unwrap();
                x.magnitude().cmp_val(&tol.mul(s)) != std::cmp::Ordering::Greater
            }
        }
    }

    /// Reduced row echelon form with its pivot columns.
    ///
    /// Exact fields: exact Gauss-Jordan. Big-complex: partial pivoting by
    /// magnitude, zero decisions against tolerance * max|entry|.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let scale = if self.field.is_big_complex() {
            let s = self.max_magnitude();
            if s.is_zero() {
                return (m, vec![]);
            }
            Some(s)
        } else {
            None
        };
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // choose pivot row
            let mut best: Option<usize> = None;
            for i in r..m.rows {
                if m.pivot_negligible(m.at(i, c), &scale) {
                    continue;
                }
                match (&scale, best) {
                    (None, _) => {
                        best = Some(i);
                        break;
                    }
                    (Some(_), None) => best = Some(i),
                    (Some(_), Some(b)) => {
                        if m.at(i, c).magnitude().cmp_val(&m.at(b, c).magnitude())
                            == std::cmp::Ordering::Greater
                        {
                            best = Some(i);
                        }
                    }
                }
            }
            let Some(pr) = best else { continue };
            if pr != r {
                for j in 0..m.cols {
                    let t = m.at(r, j).clone();
                    *m.at_mut(r, j) = m.at(pr, j).clone();
                    *m.at_mut(pr, j) = t;
                }
            }
            let inv = m.at(r, c).inv();
            for j in 0..m.cols {
                *m.at_mut(r, j) = m.at(r, j).mul(&inv);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in 0..m.cols {
                        let t = m.at(r, j).mul(&f);
                        *m.at_mut(i, j) = m.at(i, j).sub(&t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        // drop rows that became (numerically) zero
        let mut rows_kept = vec![];
        let rank = pivots.len();
        for i in 0..rank {
            rows_kept.push(m.row(i));
        }
        (
            Matrix::from_rows(&self.field, rows_kept),
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        if self.field.is_big_complex() {
            let (svals, _) = self.svd_values();
            numeric_rank(&svals, &self.field)
        } else {
            self.rref().1.len()
        }
    }

    /// Basis of the right kernel. Exact via RREF; numeric via SVD.
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        if self.field.is_big_complex() {
            let (svals, v) = self.svd_values();
            let r = numeric_rank(&svals, &self.field);
            // columns of V past the numeric rank span the kernel
            return (r..self.cols)
                .map(|j| {
                    (0..self.cols)
                        .map(|row| {
                            FieldElement::from_repr(
                                self.field.clone(),
                                crate::field::Repr::Cpx(v[row][j].clone()),
                            )
                        })
                        .collect()
                })
                .collect();
        }
        let (r, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![self.field.zero(); self.cols];
                v[fc] = self.field.one();
                for (i, &pc) in piv.iter().enumerate() {
                    v[pc] = r.at(i, fc).neg();
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> FieldElement {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let scale = if self.field.is_big_complex() {
            Some(self.max_magnitude())
        } else {
            None
        };
        let mut det = self.field.one();
        for c in 0..m.cols {
            let mut pr = None;
            for i in c..m.rows {
                if !m.pivot_negligible(m.at(i, c), &scale) {
                    match (&scale, pr) {
                        (None, _) => {
                            pr = Some(i);
                            break;
                        }
                        (Some(_), None) => pr = Some(i),
                        (Some(_), Some(b)) => {
                            if m.at(i, c).magnitude().cmp_val(&m.at(b, c).magnitude())
                                == std::cmp::Ordering::Greater
                            {
                                pr = Some(i);
                            }
                        }
                    }
                }
            }
            let Some(pr) = pr else { return self.field.zero() };
            if pr != c {
                det = det.neg();
                for j in 0..m.cols {
                    let t = m.at(c, j).clone();
                    *m.at_mut(c, j) = m.at(pr, j).clone();
                    *m.at_mut(pr, j) = t;
                }
            }
            det = det.mul(m.at(c, c));
            let inv = m.at(c, c).inv();
            for i in c + 1..m.rows {
                if !m.at(i, c).is_zero() {
                    let f = m.at(i, c).mul(&inv);
                    for j in c..m.cols {
                        let t = m.at(c, j).mul(&f);
                        *m.at_mut(i, j) = m.at(i, j).sub(&t);
                    }
                }
            }
        }
        det
    }

    /// Solve self * x = b for a unique solution.
    pub fn solve(&self, b: &[FieldElement]) -> Result<Vec<FieldElement>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::new(&self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let (r, piv) = aug.rref();
        if piv.contains(&self.cols) {
            return Err(Error::InvalidInput("inconsistent linear system".into()));
        }
        if piv.len() < self.cols {
            return Err(Error::InvalidInput("underdetermined linear system".into()));
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &pc) in piv.iter().enumerate() {
            x[pc] = r.at(i, self.cols).clone();
        }
        Ok(x)
    }

    /// Singular values (descending) and right singular vectors, by one-sided
    /// Jacobi on the columns. Big-complex only.
    pub fn svd_values(&self) -> (Vec<MpFloat>, Vec<Vec<BigC>>) {
        assert!(self.field.is_big_complex(), "svd is for big-complex matrices");
        let prec = self.field.prec_bits();
        let n = self.cols;
        let m = self.rows;
        let mut cols: Vec<Vec<BigC>> = (0..n)
            .map(|j| (0..m).map(|i| self.at(i, j).as_complex().clone()).collect())
            .collect();
        let mut v: Vec<Vec<BigC>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        if i == j {
                            BigC::from_i64(1, prec)
                        } else {
                            BigC::zero(prec)
                        }
                    })
                    .collect()
            })
            .collect();
        let eps = MpFloat::pow10_neg(
            (self.field.digits().unwrap_or(30)).saturating_sub(2),
            prec,
        );
        let max_sweeps = 40;
        for _ in 0..max_sweeps {
            let mut off = false;
            for i in 0..n {
                for j in i + 1..n {
                    let (alpha, beta, gamma) = gram(&cols[i], &cols[j], prec);
                    let g2 = gamma.norm_sqr();
                    let ab = alpha.mul(&beta);
                    if g2.cmp_val(&eps.mul(&eps).mul(&ab)) != std::cmp::Ordering::Greater
                        || g2.is_zero()
                    {
                        continue;
                    }
                    off = true;
                    let gabs = g2.sqrt();
                    let phase = BigC { re: gamma.re.div(&gabs), im: gamma.im.div(&gabs) };
                    let two = MpFloat::from_i64(2, prec);
                    let tau = beta.sub(&alpha).div(&two.mul(&gabs));
                    let one = MpFloat::from_i64(1, prec);
                    let t_abs = one.div(&tau.abs().add(&one.add(&tau.mul(&tau)).sqrt()));
                    let t = if tau.is_negative() { t_abs.neg() } else { t_abs };
                    let c = one.div(&one.add(&t.mul(&t)).sqrt());
                    let s = c.mul(&t);
                    let cs = BigC { re: c.clone(), im: MpFloat::zero(prec) };
                    let sphase = phase.mul(&BigC { re: s.clone(), im: MpFloat::zero(prec) });
                    rotate_pair(&mut cols, i, j, &cs, &sphase);
                    rotate_pair(&mut v, i, j, &cs, &sphase);
                }
            }
            if !off {
                break;
            }
        }
        let mut svals: Vec<(MpFloat, usize)> = cols
            .iter()
            .enumerate()
            .map(|(j, col)| {
                let mut acc = MpFloat::zero(prec);
                for x in col {
                    acc = acc.add(&x.norm_sqr());
                }
                (acc.sqrt(), j)
            })
            .collect();
        svals.sort_by(|a, b| b.0.cmp_val(&a.0));
        let order: Vec<usize> = svals.iter().map(|(_, j)| *j).collect();
        let sv: Vec<MpFloat> = svals.into_iter().map(|(s, _)| s).collect();
        // v as rows of right-singular-vector matrix: v[r][computed col] reordered
        let vmat: Vec<Vec<BigC>> = (0..n)
            .map(|r| order.iter().map(|&j| v[j][r].clone()).collect())
            .collect();
        (sv, vmat)
    }
}

fn gram(u: &[BigC], w: &[BigC], prec: u32) -> (MpFloat, MpFloat, BigC) {
    let mut alpha = MpFloat::zero(prec);
    let mut beta = MpFloat::zero(prec);
    let mut gamma = BigC::zero(prec);
    for (a, b) in u.iter().zip(w) {
        alpha = alpha.add(&a.norm_sqr());
        beta = beta.add(&b.norm_sqr());
        gamma = gamma.add(&a.conj().mul(b));
    }
    (alpha, beta, gamma)
}

fn rotate_pair(cols: &mut [Vec<BigC>], i: usize, j: usize, c: &BigC, s: &BigC) {
    let n = cols[i].len();
    for r in 0..n {
        let ui = cols[i][r].clone();
        let uj = cols[j][r].clone();
        // u_i' = c*u_i - conj(s) u_j ; u_j' = s*u_i + c*u_j
        cols[i][r] = c.mul(&ui).sub(&s.conj().mul(&uj));
        cols[j][r] = s.mul(&ui).add(&c.mul(&uj));
    }
}

fn numeric_rank(svals: &[MpFloat], field: &Field) -> usize {
    if svals.is_empty() || svals[0].is_zero() {
        return 0;
    }
    let tol = field.tolerance().unwrap();
    let cutoff = tol.mul(&svals[0]);
    svals
        .iter()
        .take_while(|s| s.cmp_val(&cutoff) == std::cmp::Ordering::Greater)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn rref_and_kernel_exact() {
        let q = Field::rationals();
        let m = Matrix::from_rows(
            &q,
            vec![
                vec![q.from_i64(1), q.from_i64(2), q.from_i64(3)],
                vec![q.from_i64(2), q.from_i64(4), q.from_i64(6)],
            ],
        );
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            let prod = m.mul_vec(v);
            assert!(prod.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn det_exact() {
        let q = Field::rationals();
        let m = Matrix::from_rows(
            &q,
            vec![
                vec![q.from_i64(2), q.from_i64(1)],
                vec![q.from_i64(7), q.from_i64(4)],
            ],
        );
        assert_eq!(m.det(), q.from_i64(1));
    }

    #[test]
    fn finite_field_solve() {
        let f9 = Field::make_extension(3, 2, None).unwrap();
        let g = f9.generator();
        let m = Matrix::from_rows(
            &f9,
            vec![
                vec![f9.one(), g.clone()],
                vec![g.clone(), f9.one()],
            ],
        );
        let b = vec![f9.from_i64(1), g.clone()];
        let x = m.solve(&b).unwrap();
        let back = m.mul_vec(&x);
        assert_eq!(back, b);
    }

    #[test]
    fn svd_rank_detection() {
        let c = Field::big_complex(50);
        // rank-2 3x3 matrix: third row = row0 + row1
        let r = |v: i64| c.from_i64(v);
        let m = Matrix::from_rows(
            &c,
            vec![
                vec![r(1), r(2), r(3)],
                vec![r(4), r(5), r(6)],
                vec![r(5), r(7), r(9)],
            ],
        );
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        let prod = m.mul_vec(&k[0]);
        let tol = c.tolerance().unwrap();
        for x in prod {
            assert!(x.magnitude().cmp_val(&tol) == std::cmp::Ordering::Less);
        }
    }
}
