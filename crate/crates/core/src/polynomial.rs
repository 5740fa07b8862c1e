//! Dense univariate polynomials over an exact coefficient ring.
//!
//! `PolyRing<R>` is itself a [`Ring`], so bivariate views are just nested
//! descriptors: `Q[X][T]` is `PolyRing<PolyRing<Rationals>>`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::{ExtField, PrimeField, Rationals};
use crate::ring::{Field, FiniteField, Monomial, Ring, Var};

/// Coefficients low degree first; no trailing zeros, so the zero
/// polynomial is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<E> {
    var: Var,
    coeffs: Vec<E>,
}

/// A polynomial whose coefficients are themselves polynomials.
pub type BiPoly<E> = Poly<Poly<E>>;

/// Quotient and remainder.
pub type DivRem<E> = (Poly<E>, Poly<E>);

impl<E> Poly<E> {
    /// Caller guarantees the coefficient list is already canonical.
    pub(crate) fn from_raw(var: Var, coeffs: Vec<E>) -> Self {
        Poly { var, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same coefficients, different variable tag.
    pub fn rename(self, var: Var) -> Self {
        Poly { var, coeffs: self.coeffs }
    }
}

/// Descriptor for `R[var]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing<R> {
    base: R,
    var: Var,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: Var) -> Self {
        PolyRing { base, var }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Trims trailing zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { var: self.var, coeffs }
    }

    pub fn from_ints(&self, coeffs: &[i64]) -> Poly<R::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.base.from_i64(c)).collect())
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c * var^k`.
    pub fn monomial(&self, c: R::Elem, k: usize) -> Poly<R::Elem> {
        if self.base.is_zero(&c) {
            return self.zero();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.push(c);
        Poly { var: self.var, coeffs }
    }

    /// The variable itself.
    pub fn gen(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn check_var(&self, a: &Poly<R::Elem>) -> Result<()> {
        if a.var != self.var {
            return Err(Error::VariableMismatch { expected: self.var, found: a.var });
        }
        Ok(())
    }

    fn assert_var(&self, a: &Poly<R::Elem>) {
        assert!(a.var == self.var, "variable mismatch: ring is over {}, operand is in {}", self.var, a.var);
    }

    pub fn is_monic(&self, a: &Poly<R::Elem>) -> bool {
        a.lead().is_some_and(|c| self.base.is_one(c))
    }

    pub fn scale(&self, a: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.base.mul(x, c)).collect())
    }

    /// Multiplication by `var^k`.
    pub fn shift(&self, a: &Poly<R::Elem>, k: usize) -> Poly<R::Elem> {
        if a.is_zero() {
            return a.clone();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.extend(a.coeffs.iter().cloned());
        Poly { var: a.var, coeffs }
    }

    /// Image under a coefficient map into another ring.
    pub fn map_into<S: Ring>(
        &self,
        target: &PolyRing<S>,
        a: &Poly<R::Elem>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        target.from_coeffs(a.coeffs.iter().map(f).collect())
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, a: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        a.coeffs.iter().rev().fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, x), c))
    }

    /// Formal derivative; `k * c` is computed in the coefficient ring, so it
    /// vanishes when the characteristic divides `k`.
    pub fn derivative(&self, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| self.base.mul(&self.base.from_int(&BigInt::from(k)), c))
                .collect(),
        )
    }

    /// `A = Q*B + R` with `deg R < deg B`.
    ///
    /// Needs a field of coefficients, or a monic divisor.
    pub fn divrem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<DivRem<R::Elem>> {
        self.check_var(a)?;
        self.check_var(b)?;
        let lb = b.lead().ok_or(Error::DivisionByZero)?;
        let lb_inv = if self.base.is_one(lb) {
            None
        } else if self.base.is_field() {
            Some(self.base.inv(lb).ok_or(Error::DivisionByZero)?)
        } else {
            return Err(Error::UnsupportedDivision);
        };
        let db = b.coeffs.len() - 1;
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return Ok((self.zero(), a.clone()));
        }
        let mut q = vec![self.base.zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let top = &r[k + db];
            if self.base.is_zero(top) {
                continue;
            }
            let c = match &lb_inv {
                Some(inv) => self.base.mul(top, inv),
                None => top.clone(),
            };
            for (i, bi) in b.coeffs.iter().enumerate() {
                r[k + i] = self.base.sub(&r[k + i], &self.base.mul(&c, bi));
            }
            q[k] = c;
        }
        r.truncate(db);
        Ok((self.from_coeffs(q), self.from_coeffs(r)))
    }

    pub fn rem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        Ok(self.divrem(a, b)?.1)
    }

    /// Pseudo-remainder: `lc(B)^(deg A - deg B + 1) * A mod B`, valid over any
    /// integral domain. Returns `A` unchanged when `deg A < deg B`.
    pub fn pseudo_rem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        self.check_var(a)?;
        self.check_var(b)?;
        let lb = b.lead().ok_or(Error::DivisionByZero)?;
        let db = b.coeffs.len() - 1;
        if a.coeffs.len() <= db {
            return Ok(a.clone());
        }
        let mut r = a.coeffs.clone();
        while r.len() > db {
            let top = r.pop().unwrap();
            let shift = r.len() - db;
            for c in r.iter_mut() {
                *c = self.base.mul(c, lb);
            }
            if !self.base.is_zero(&top) {
                for (i, bi) in b.coeffs[..db].iter().enumerate() {
                    r[shift + i] = self.base.sub(&r[shift + i], &self.base.mul(&top, bi));
                }
            }
        }
        Ok(self.from_coeffs(r))
    }

    /// Exact power `a^e` with repeated squaring.
    pub fn pow_usize(&self, a: &Poly<R::Elem>, e: usize) -> Poly<R::Elem> {
        self.pow(a, e as u64)
    }
}

impl<R: Field> PolyRing<R> {
    /// Divides by the leading coefficient; zero stays zero.
    pub fn make_monic(&self, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        match a.lead() {
            None => a.clone(),
            Some(l) if self.base.is_one(l) => a.clone(),
            Some(l) => self.scale(a, &self.base.inv(l).expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd by Euclid's algorithm.
    pub fn gcd_monic(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        self.check_var(a)?;
        self.check_var(b)?;
        if a.is_zero() && b.is_zero() {
            return Err(Error::Undefined("gcd(0, 0)"));
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y)?;
            x = y;
            y = r;
        }
        Ok(self.make_monic(&x))
    }

    pub fn mul_mod(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>, m: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.rem(&self.mul(a, b), m).expect("nonzero modulus")
    }

    /// `a^e mod m`.
    pub fn pow_mod(&self, a: &Poly<R::Elem>, e: &BigUint, m: &Poly<R::Elem>) -> Poly<R::Elem> {
        let a = self.rem(a, m).expect("nonzero modulus");
        if e.is_zero() {
            return self.rem(&self.one(), m).expect("nonzero modulus");
        }
        let mut acc = a.clone();
        for i in (0..e.bits() - 1).rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mul_mod(&acc, &a, m);
            }
        }
        acc
    }
}

impl PolyRing<PrimeField> {
    /// Evaluates a polynomial over `F_p` at a point of an extension of `F_p`.
    pub fn eval_lifted(&self, a: &Poly<u64>, ext: &ExtField, alpha: &Poly<u64>) -> Result<Poly<u64>> {
        if ext.prime() != self.base.modulus() {
            return Err(Error::FieldMismatch(format!(
                "polynomial over F_{} evaluated in characteristic {}",
                self.base.modulus(),
                ext.prime()
            )));
        }
        self.check_var(a)?;
        Ok(a.coeffs.iter().rev().fold(ext.zero(), |acc, &c| ext.add(&ext.mul(&acc, alpha), &ext.embed(c))))
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly { var: self.var, coeffs: Vec::new() }
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.assert_var(a);
        self.assert_var(b);
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() { (a, b) } else { (b, a) };
        let mut c = long.coeffs.clone();
        for (x, y) in c.iter_mut().zip(&short.coeffs) {
            *x = self.base.add(x, y);
        }
        self.from_coeffs(c)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.assert_var(a);
        Poly { var: a.var, coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect() }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.assert_var(a);
        self.assert_var(b);
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.base.zero();
        let c = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&zero);
                let y = b.coeffs.get(i).unwrap_or(&zero);
                self.base.sub(x, y)
            })
            .collect();
        self.from_coeffs(c)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.assert_var(a);
        self.assert_var(b);
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut c = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                c[i + j] = self.base.add(&c[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(c)
    }

    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.assert_var(a);
        self.assert_var(b);
        let lb = b.lead()?;
        let db = b.coeffs.len() - 1;
        if a.is_zero() {
            return Some(self.zero());
        }
        if a.coeffs.len() <= db {
            return None;
        }
        let mut r = a.coeffs.clone();
        let mut q = vec![self.base.zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let top = &r[k + db];
            if self.base.is_zero(top) {
                continue;
            }
            let c = self.base.exact_div(top, lb)?;
            for (i, bi) in b.coeffs.iter().enumerate() {
                r[k + i] = self.base.sub(&r[k + i], &self.base.mul(&c, bi));
            }
            q[k] = c;
        }
        if r[..db].iter().any(|c| !self.base.is_zero(c)) {
            return None;
        }
        Some(self.from_coeffs(q))
    }

    fn from_int(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_int(n))
    }

    fn is_field(&self) -> bool {
        false
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn sample_points(&self, n: usize) -> Option<Vec<Self::Elem>> {
        Some(self.base.sample_points(n)?.into_iter().map(|c| self.constant(c)).collect())
    }

    fn monomials(&self, a: &Self::Elem) -> Vec<Monomial> {
        let mut out = Vec::new();
        for (k, c) in a.coeffs.iter().enumerate().rev() {
            for (s, mut vars) in self.base.monomials(c) {
                if k > 0 {
                    vars.push((a.var, k as u32));
                }
                out.push((s, vars));
            }
        }
        out
    }

    fn variable(&self, v: Var) -> Option<Self::Elem> {
        if v == self.var {
            Some(self.gen())
        } else {
            self.base.variable(v).map(|c| self.constant(c))
        }
    }

    fn variables(&self) -> Vec<Var> {
        let mut v = self.base.variables();
        v.push(self.var);
        v
    }
}

/// Domains with a computable gcd and a canonical associate.
pub trait GcdDomain: Ring {
    /// A normalized gcd; `gcd(0, 0) = 0`.
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// A unit `u` with `a / u` the canonical associate of `a`.
    fn unit_part(&self, a: &Self::Elem) -> Self::Elem;

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) {
            return a.clone();
        }
        self.exact_div(a, &self.unit_part(a)).expect("unit part divides")
    }
}

macro_rules! field_gcd_domain {
    ($t:ty) => {
        impl GcdDomain for $t {
            fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
                if self.is_zero(a) && self.is_zero(b) {
                    self.zero()
                } else {
                    self.one()
                }
            }

            fn unit_part(&self, a: &Self::Elem) -> Self::Elem {
                if self.is_zero(a) {
                    self.one()
                } else {
                    a.clone()
                }
            }
        }
    };
}

field_gcd_domain!(Rationals);
field_gcd_domain!(PrimeField);
field_gcd_domain!(ExtField);

impl<D: GcdDomain> PolyRing<D> {
    /// Normalized gcd of the coefficients.
    pub fn content(&self, a: &Poly<D::Elem>) -> D::Elem {
        a.coeffs.iter().fold(self.base.zero(), |g, c| self.base.gcd(&g, c))
    }

    pub fn primitive_part(&self, a: &Poly<D::Elem>) -> Poly<D::Elem> {
        if a.is_zero() {
            return a.clone();
        }
        let c = self.content(a);
        self.from_coeffs(a.coeffs.iter().map(|x| self.base.exact_div(x, &c).expect("content divides")).collect())
    }
}

impl<D: GcdDomain> GcdDomain for PolyRing<D> {
    /// Primitive remainder sequence.
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() {
            return self.normalize(b);
        }
        if b.is_zero() {
            return self.normalize(a);
        }
        let c = self.base.gcd(&self.content(a), &self.content(b));
        let (mut x, mut y) = (self.primitive_part(a), self.primitive_part(b));
        if x.coeffs.len() < y.coeffs.len() {
            std::mem::swap(&mut x, &mut y);
        }
        loop {
            let r = self.pseudo_rem(&x, &y).expect("same variable");
            if r.is_zero() {
                break;
            }
            if r.coeffs.len() == 1 {
                y = self.one();
                break;
            }
            x = y;
            y = self.primitive_part(&r);
        }
        self.normalize(&self.scale(&y, &c))
    }

    fn unit_part(&self, a: &Self::Elem) -> Self::Elem {
        match a.lead() {
            None => self.one(),
            Some(l) => self.constant(self.base.unit_part(l)),
        }
    }
}

/// Convenience constructors for the concrete rings used throughout.
pub fn q_poly(var: Var) -> PolyRing<Rationals> {
    PolyRing::new(Rationals, var)
}

/// `F_p[var]`.
pub fn fp_poly(field: PrimeField, var: Var) -> PolyRing<PrimeField> {
    PolyRing::new(field, var)
}

/// `Q[X][outer]`.
pub fn qx_poly(outer: Var) -> PolyRing<PolyRing<Rationals>> {
    PolyRing::new(q_poly(Var::X), outer)
}

impl<F: FiniteField> PolyRing<F> {
    /// Uniformly random monic polynomial of exact degree `n`.
    pub fn random_monic<G: rand::Rng + ?Sized>(&self, n: usize, rng: &mut G) -> Poly<F::Elem> {
        let mut c: Vec<F::Elem> = (0..n).map(|_| self.base.random_element(rng)).collect();
        c.push(self.base.one());
        self.from_coeffs(c)
    }
}
