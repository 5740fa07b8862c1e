//! Resultants and the composed resultant `h(T) = (-1)^deg g * Res_Y(g, f - T)`.
//!
//! Sign convention throughout: `Res(A, B) = lc(A)^deg B * prod B(alpha)` over
//! the roots `alpha` of `A`, which is the determinant of the Sylvester matrix
//! with the rows of `A` on top. With `g` monic this makes
//! `h = prod (T - f(y_i))` over the roots `y_i` of `g`.
//!
//! Three independent routes are provided: fraction-free Bareiss elimination
//! of the Sylvester matrix, the subresultant remainder sequence, and (over
//! `k[T]` with enough points in `k`) evaluation at scalar points followed by
//! Lagrange interpolation.

use crate::error::{Error, Result};
use crate::polynomial::{Poly, PolyRing};
use crate::ring::{Ring, Var};

/// Square Sylvester matrix of `A` and `B`: `deg B` shifted copies of the
/// coefficients of `A` (leading coefficient first), then `deg A` of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterMatrix<E> {
    rows: Vec<Vec<E>>,
}

impl<E: Clone> SylvesterMatrix<E> {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<E>> {
        self.rows
    }
}

fn degrees<E>(a: &Poly<E>, b: &Poly<E>) -> Result<(usize, usize)> {
    match (a.degree(), b.degree()) {
        (Some(m), Some(n)) if m + n > 0 => Ok((m, n)),
        (Some(_), Some(_)) => Err(Error::DegenerateResultant),
        _ => Err(Error::Undefined("Sylvester matrix of the zero polynomial")),
    }
}

pub fn sylvester_matrix<R: Ring>(
    ring: &PolyRing<R>,
    a: &Poly<R::Elem>,
    b: &Poly<R::Elem>,
) -> Result<SylvesterMatrix<R::Elem>> {
    ring.check_var(a)?;
    ring.check_var(b)?;
    let (m, n) = degrees(a, b)?;
    let dim = m + n;
    let zero = ring.base().zero();
    let mut rows = Vec::with_capacity(dim);
    for (poly, copies) in [(a, n), (b, m)] {
        for shift in 0..copies {
            let mut row = vec![zero.clone(); dim];
            for (k, c) in poly.coeffs().iter().rev().enumerate() {
                row[shift + k] = c.clone();
            }
            rows.push(row);
        }
    }
    Ok(SylvesterMatrix { rows })
}

/// Determinant by fraction-free Gaussian elimination. Every division is
/// exact in an integral domain; a zero pivot is replaced by a row swap.
pub fn det_bareiss<R: Ring>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> R::Elem {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return ring.one();
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&row[j], pivot), &ring.mul(&lead, &pivot_row[j]));
                row[j] = ring.exact_div(&num, &prev).expect("Bareiss division is exact over an integral domain");
            }
            row[k] = ring.zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        ring.neg(&d)
    } else {
        d
    }
}

/// Resultant as the Bareiss determinant of the Sylvester matrix.
pub fn resultant_bareiss<R: Ring>(ring: &PolyRing<R>, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<R::Elem> {
    if let Some(r) = trivial_cases(ring, a, b)? {
        return Ok(r);
    }
    Ok(det_bareiss(ring.base(), sylvester_matrix(ring, a, b)?.into_rows()))
}

/// Handles zero inputs; errors when both inputs are constants.
fn trivial_cases<R: Ring>(ring: &PolyRing<R>, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<Option<R::Elem>> {
    ring.check_var(a)?;
    ring.check_var(b)?;
    let (da, db) = (a.degree().unwrap_or(0), b.degree().unwrap_or(0));
    if da == 0 && db == 0 {
        return Err(Error::DegenerateResultant);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Some(ring.base().zero()));
    }
    Ok(None)
}

fn div_coeffs<R: Ring>(ring: &PolyRing<R>, a: &Poly<R::Elem>, d: &R::Elem) -> Result<Poly<R::Elem>> {
    let base = ring.base();
    let c = a
        .coeffs()
        .iter()
        .map(|x| base.exact_div(x, d))
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Undefined("inexact division in subresultant sequence"))?;
    Ok(ring.from_coeffs(c))
}

/// Resultant by the subresultant pseudo-remainder sequence (Collins/Brown).
/// Works over any integral domain with exact division.
pub fn resultant_subresultant<R: Ring>(ring: &PolyRing<R>, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<R::Elem> {
    if let Some(r) = trivial_cases(ring, a, b)? {
        return Ok(r);
    }
    let base = ring.base();
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            negate = true;
        }
    }
    let mut g = base.one();
    let mut h = base.one();
    while b.degree().unwrap() > 0 {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = ring.pseudo_rem(&a, &b)?;
        a = b;
        let denom = base.mul(&g, &base.pow(&h, delta as u64));
        b = div_coeffs(ring, &r, &denom)?;
        g = a.lead().unwrap().clone();
        if delta > 0 {
            h = base
                .exact_div(&base.pow(&g, delta as u64), &base.pow(&h, delta as u64 - 1))
                .ok_or(Error::Undefined("inexact division in subresultant sequence"))?;
        }
        if b.is_zero() {
            return Ok(base.zero());
        }
    }
    let da = a.degree().unwrap() as u64;
    let t = base
        .exact_div(&base.pow(b.lead().unwrap(), da), &base.pow(&h, da - 1))
        .ok_or(Error::Undefined("inexact division in subresultant sequence"))?;
    Ok(if negate { base.neg(&t) } else { t })
}

/// Resultant over a field via the Euclidean remainder sequence:
/// `Res(A, B) = (-1)^(deg A deg B) lc(B)^(deg A - deg R) Res(B, R)`.
pub fn resultant_euclid<R: Ring>(ring: &PolyRing<R>, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<R::Elem> {
    if !ring.base().is_field() {
        return Err(Error::UnsupportedDivision);
    }
    if let Some(r) = trivial_cases(ring, a, b)? {
        return Ok(r);
    }
    let base = ring.base();
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = base.one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        if db == 0 {
            return Ok(base.mul(&acc, &base.pow(b.lead().unwrap(), da as u64)));
        }
        if da == 0 {
            return Ok(base.mul(&acc, &base.pow(a.lead().unwrap(), db as u64)));
        }
        let r = ring.rem(&a, &b)?;
        let Some(dr) = r.degree() else {
            return Ok(base.zero());
        };
        let mut factor = base.pow(b.lead().unwrap(), (da - dr) as u64);
        if da % 2 == 1 && db % 2 == 1 {
            factor = base.neg(&factor);
        }
        acc = base.mul(&acc, &factor);
        a = b;
        b = r;
    }
}

/// Subresultant resultant; debug builds also compare against Bareiss.
pub fn resultant<R: Ring>(ring: &PolyRing<R>, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<R::Elem> {
    let r = resultant_subresultant(ring, a, b)?;
    if cfg!(debug_assertions) {
        let check = resultant_bareiss(ring, a, b)?;
        if check != r {
            return Err(Error::OracleMismatch(format!("subresultant {r:?} != Bareiss {check:?}")));
        }
    }
    Ok(r)
}

/// Lagrange interpolation in `R[var]` through `(points[i], values[i])`.
///
/// Needs the pairwise differences of the points to divide exactly in `R`.
pub fn interpolate<R: Ring>(ring: &PolyRing<R>, points: &[R::Elem], values: &[R::Elem]) -> Option<Poly<R::Elem>> {
    assert_eq!(points.len(), values.len());
    let base = ring.base();
    let mut acc = ring.zero();
    for (i, (ti, vi)) in points.iter().zip(values).enumerate() {
        if base.is_zero(vi) {
            continue;
        }
        let mut basis = ring.constant(vi.clone());
        let mut denom = base.one();
        for (j, tj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = ring.mul(&basis, &ring.from_coeffs(vec![base.neg(tj), base.one()]));
            denom = base.mul(&denom, &base.sub(ti, tj));
        }
        let c = basis.coeffs().iter().map(|x| base.exact_div(x, &denom)).collect::<Option<Vec<_>>>()?;
        acc = ring.add(&acc, &ring.from_coeffs(c));
    }
    Some(acc)
}

/// Scalar resultant over a base ring: Euclid over a field, Bareiss otherwise.
fn scalar_resultant<R: Ring>(ring: &PolyRing<R>, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<R::Elem> {
    if ring.base().is_field() {
        resultant_euclid(ring, a, b)
    } else {
        resultant_bareiss(ring, a, b)
    }
}

/// `Res_Y(A, B)` for `A, B` in `K[T][Y]` by evaluating `T` at scalar points
/// of `K` and interpolating. `None` when `K` has too few usable points.
pub fn resultant_eval_interp<R: Ring>(
    ring: &PolyRing<PolyRing<R>>,
    a: &Poly<Poly<R::Elem>>,
    b: &Poly<Poly<R::Elem>>,
) -> Result<Option<Poly<R::Elem>>> {
    if let Some(r) = trivial_cases(ring, a, b)? {
        return Ok(Some(r));
    }
    let inner = ring.base();
    let scalar = inner.base();
    let t_deg = |p: &Poly<Poly<R::Elem>>| p.coeffs().iter().filter_map(|c| c.degree()).max().unwrap_or(0);
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    let bound = da * t_deg(b) + db * t_deg(a);
    let Some(points) = scalar.sample_points(bound + 1) else {
        return Ok(None);
    };
    let flat = PolyRing::new(scalar.clone(), ring.var());
    let at =
        |p: &Poly<Poly<R::Elem>>, t: &R::Elem| flat.from_coeffs(p.coeffs().iter().map(|c| inner.eval(c, t)).collect());
    let formal = sylvester_matrix(ring, a, b)?;
    let mut values = Vec::with_capacity(points.len());
    for t in &points {
        let (at_a, at_b) = (at(a, t), at(b, t));
        if at_a.degree() == Some(da) && at_b.degree() == Some(db) {
            values.push(scalar_resultant(&flat, &at_a, &at_b)?);
        } else {
            // a leading coefficient vanishes at t: keep the formal shape
            let m = formal.rows().iter().map(|row| row.iter().map(|c| inner.eval(c, t)).collect()).collect();
            values.push(det_bareiss(scalar, m));
        }
    }
    Ok(interpolate(inner, &points, &values))
}

/// Output of [`kuo_resultant`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuoResult<E> {
    /// Monic polynomial in `T` of degree `deg g`.
    pub h: Poly<E>,
    pub g_degree: usize,
    /// `true` when `deg g` is odd, i.e. `h = -Res_Y(g, f - T)`.
    pub negated: bool,
    /// Whether the evaluation/interpolation route also ran (and agreed).
    pub interpolation_checked: bool,
}

/// `h(T) = (-1)^deg g * Res_Y(g, f - T)` over the base ring of `g` and `f`.
///
/// Computed by Bareiss over `R[T]`, cross-checked against the subresultant
/// sequence and, when `R` has more than `deg g` usable points, against
/// evaluation/interpolation. Any disagreement is reported as
/// [`Error::OracleMismatch`].
pub fn kuo_resultant<R: Ring>(base: &R, g: &Poly<R::Elem>, f: &Poly<R::Elem>) -> Result<KuoResult<R::Elem>> {
    let y = g.var();
    if f.var() != y {
        return Err(Error::VariableMismatch { expected: y, found: f.var() });
    }
    if y == Var::T {
        return Err(Error::VariableMismatch { expected: Var::Y, found: Var::T });
    }
    let m = match g.degree() {
        Some(m) if m >= 1 => m,
        _ => return Err(Error::DegenerateInput("deg g must be at least 1")),
    };
    if !g.lead().is_some_and(|c| base.is_one(c)) {
        return Err(Error::NonMonicInput);
    }
    let rt = PolyRing::new(base.clone(), Var::T);
    let ry = PolyRing::new(rt.clone(), y);
    let lift = |p: &Poly<R::Elem>| -> Poly<Poly<R::Elem>> {
        ry.from_coeffs(p.coeffs().iter().map(|c| rt.constant(c.clone())).collect())
    };
    let big_g = lift(g);
    let big_f = ry.sub(&lift(f), &ry.constant(rt.gen()));

    let res = resultant_bareiss(&ry, &big_g, &big_f)?;
    let prs = resultant_subresultant(&ry, &big_g, &big_f)?;
    if prs != res {
        return Err(Error::OracleMismatch(format!("Bareiss {res:?} != subresultant {prs:?}")));
    }
    let interpolation_checked = match resultant_eval_interp(&ry, &big_g, &big_f)? {
        Some(ei) if ei != res => return Err(Error::OracleMismatch(format!("Bareiss {res:?} != interpolation {ei:?}"))),
        Some(_) => true,
        None => false,
    };

    let negated = m % 2 == 1;
    let h = if negated { rt.neg(&res) } else { res };
    if h.degree() != Some(m) || !rt.is_monic(&h) {
        return Err(Error::OracleMismatch(format!("h = {h:?} is not monic of degree {m}")));
    }
    Ok(KuoResult { h, g_degree: m, negated, interpolation_checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr_parse::{parse_poly, print_poly};
    use crate::numeric::{PrimeField, Rational, Rationals};
    use crate::polynomial::{fp_poly, q_poly, qx_poly};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    /// Cofactor expansion along the first row.
    fn det_cofactor(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det_cofactor(&minor)
            })
            .sum()
    }

    #[test]
    fn sylvester_layout() {
        let r = q_poly(Var::Y);
        let (a, b) = (q(3), q(5));
        let s = sylvester_matrix(&r, &r.from_coeffs(vec![-a.clone(), q(1)]), &r.from_coeffs(vec![-b.clone(), q(1)]))
            .unwrap();
        assert_eq!(s.rows(), &[vec![q(1), -a.clone()], vec![q(1), -b.clone()]]);
        assert_eq!(det_bareiss(&Rationals, s.into_rows()), a - b);

        let s = sylvester_matrix(&r, &r.from_ints(&[1, 0, 1]), &r.from_ints(&[1, 1])).unwrap();
        assert_eq!(s.dim(), 3);
        let ints: Vec<Vec<i64>> = vec![vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]];
        assert_eq!(s.rows(), ints.iter().map(|row| row.iter().map(|&v| q(v)).collect()).collect::<Vec<Vec<_>>>());
        assert_eq!(det_cofactor(&ints), 2);
        assert_eq!(det_bareiss(&Rationals, s.into_rows()), q(2));

        let s = sylvester_matrix(&r, &r.from_ints(&[1, 2, 3, 4]), &r.from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(s.dim(), 5);
        assert_eq!(sylvester_matrix(&r, &r.from_ints(&[2]), &r.from_ints(&[3])), Err(Error::DegenerateResultant));
    }

    #[test]
    fn bareiss_small_cases() {
        let z = |rows: Vec<Vec<i64>>| rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect::<Vec<Vec<_>>>();
        for n in 0..5 {
            let id = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
            assert_eq!(det_bareiss(&Rationals, z(id)), q(1));
        }
        assert_eq!(det_bareiss(&Rationals, z(vec![vec![2, 3], vec![5, 7]])), q(2 * 7 - 3 * 5));
        // zero pivot forces a swap
        let m = vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]];
        assert_eq!(det_bareiss(&Rationals, z(m.clone())), q(det_cofactor(&m)));
        // zero column
        assert_eq!(det_bareiss(&Rationals, z(vec![vec![0, 1], vec![0, 4]])), q(0));
        let m = vec![vec![3, -1, 4, 1], vec![-5, 9, 2, -6], vec![5, 3, -5, 8], vec![9, -7, 9, 3]];
        assert_eq!(det_bareiss(&Rationals, z(m.clone())), q(det_cofactor(&m)));
    }

    #[test]
    fn resultant_examples() {
        let r = q_poly(Var::Y);
        let a = r.from_ints(&[-3, 1]);
        let b = r.from_ints(&[-5, 1]);
        for res in [resultant(&r, &a, &b), resultant_euclid(&r, &a, &b), resultant_bareiss(&r, &a, &b)] {
            // (3 - 5) under lc(A)^deg B * prod B(roots of A)
            assert_eq!(res.unwrap(), q(-2));
        }
        assert_eq!(resultant(&r, &r.from_ints(&[1, 0, 1]), &r.from_ints(&[1, 1])).unwrap(), q(2));
        // constant second argument
        assert_eq!(resultant(&r, &r.from_ints(&[1, 0, 1]), &r.from_ints(&[3])).unwrap(), q(9));
        assert_eq!(resultant(&r, &r.from_ints(&[3]), &r.from_ints(&[1, 0, 0, 1])).unwrap(), q(27));
        assert_eq!(resultant(&r, &r.from_ints(&[3]), &r.from_ints(&[4])), Err(Error::DegenerateResultant));
        assert_eq!(resultant(&r, &r.from_ints(&[1, 1]), &r.zero()).unwrap(), q(0));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let r = fp_poly(PrimeField::new(101).unwrap(), Var::T);
        let p = r.from_ints(&[5, -3, 0, 7]);
        let pts: Vec<u64> = (0..4).collect();
        let vals: Vec<u64> = pts.iter().map(|t| r.eval(&p, t)).collect();
        assert_eq!(interpolate(&r, &pts, &vals).unwrap(), p);
    }

    #[test]
    fn kuo_worked_examples() {
        let ry = qx_poly(Var::Y);
        let rt = qx_poly(Var::T);
        let f = parse_poly("Y^2 - X^3", &ry).unwrap();
        let g1 = parse_poly("(Y^2 - X^3)^2 - X^7", &ry).unwrap();
        let k1 = kuo_resultant(ry.base(), &g1, &f).unwrap();
        assert_eq!(k1.h, parse_poly("(T^2 - X^7)^2", &rt).unwrap());
        assert_eq!(print_poly(&rt, &k1.h), "T^4 - 2*X^7*T^2 + X^14");
        assert!(k1.interpolation_checked);

        let g2 = parse_poly("(Y^2 - X^3)^2 - X^5*Y", &ry).unwrap();
        let k2 = kuo_resultant(ry.base(), &g2, &f).unwrap();
        assert_eq!(print_poly(&rt, &k2.h), "T^4 - X^10*T - X^13");
    }

    #[test]
    fn kuo_trivial_identities() {
        let ry = q_poly(Var::Y);
        let rt = q_poly(Var::T);
        let g = ry.from_ints(&[3, -1, 2, 1]);
        // f = Y gives g(T)
        let k = kuo_resultant(&Rationals, &g, &ry.gen()).unwrap();
        assert_eq!(k.h, g.clone().rename(Var::T));
        assert!(k.negated);
        // f = c gives (T - c)^deg g
        let k = kuo_resultant(&Rationals, &g, &ry.from_ints(&[4])).unwrap();
        assert_eq!(k.h, rt.pow(&rt.from_ints(&[-4, 1]), 3));
        // g = Y - c gives T - f(c)
        let f = ry.from_ints(&[1, 1, 1]);
        let k = kuo_resultant(&Rationals, &ry.from_ints(&[-2, 1]), &f).unwrap();
        assert_eq!(k.h, rt.from_ints(&[-7, 1]));
    }

    #[test]
    fn kuo_input_errors() {
        let ry = q_poly(Var::Y);
        assert_eq!(kuo_resultant(&Rationals, &ry.from_ints(&[1, 2]), &ry.gen()), Err(Error::NonMonicInput));
        assert!(matches!(kuo_resultant(&Rationals, &ry.from_ints(&[1]), &ry.gen()), Err(Error::DegenerateInput(_))));
        assert!(matches!(
            kuo_resultant(&Rationals, &ry.gen(), &q_poly(Var::X).gen()),
            Err(Error::VariableMismatch { .. })
        ));
    }
}
