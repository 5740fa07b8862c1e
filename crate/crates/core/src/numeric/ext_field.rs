use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;

use super::PrimeField;
use crate::error::{Error, Result};
use crate::factor_ff::is_irreducible;
use crate::polynomial::{Poly, PolyRing};
use crate::ring::{Field, FiniteField, Monomial, Ring, Var};

/// `F_{p^d} = F_p[Z]/(m(Z))` with `m` monic irreducible of degree `d`.
///
/// Elements are polynomials in `Z` of degree below `d`, stored canonically,
/// so `d = 1` behaves exactly like the prime field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtField {
    base: PrimeField,
    modulus: Poly<u64>,
}

impl ExtField {
    /// Builds the extension, rejecting a modulus that is not monic irreducible.
    pub fn new(base: PrimeField, modulus: Poly<u64>) -> Result<Self> {
        if modulus.var() != Var::Z {
            return Err(Error::VariableMismatch { expected: Var::Z, found: modulus.var() });
        }
        match modulus.degree() {
            Some(d) if d >= 1 && modulus.lead() == Some(&1) => {}
            _ => return Err(Error::ReducibleModulus),
        }
        if !is_irreducible(&base, &modulus)? {
            return Err(Error::ReducibleModulus);
        }
        Ok(ExtField { base, modulus })
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn modulus(&self) -> &Poly<u64> {
        &self.modulus
    }

    fn d(&self) -> usize {
        self.modulus.coeffs().len() - 1
    }

    /// The residue class of `Z`.
    pub fn generator(&self) -> Poly<u64> {
        self.reduce(vec![0, 1])
    }

    /// Element with the given `Z`-coefficients (low degree first).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Poly<u64> {
        let p = self.base.modulus();
        self.reduce(coeffs.iter().map(|c| c % p).collect())
    }

    /// Embeds a base-field residue.
    pub fn embed(&self, c: u64) -> Poly<u64> {
        self.from_coeffs(&[c])
    }

    /// `Some(c)` when the element lies in the prime subfield.
    pub fn as_base(&self, a: &Poly<u64>) -> Option<u64> {
        match a.coeffs().len() {
            0 => Some(0),
            1 => Some(a.coeffs()[0]),
            _ => None,
        }
    }

    fn reduce(&self, mut c: Vec<u64>) -> Poly<u64> {
        let f = &self.base;
        let m = self.modulus.coeffs();
        let d = self.d();
        while c.len() > d {
            let top = c.pop().unwrap();
            if top != 0 {
                let shift = c.len() - d;
                for (i, mi) in m[..d].iter().enumerate() {
                    c[shift + i] = f.sub(&c[shift + i], &f.mul(&top, mi));
                }
            }
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly::from_raw(Var::Z, c)
    }

    /// `a^p`.
    pub fn frobenius(&self, a: &Poly<u64>) -> Poly<u64> {
        FiniteField::frobenius(self, a)
    }
}

impl Ring for ExtField {
    type Elem = Poly<u64>;

    fn zero(&self) -> Poly<u64> {
        Poly::from_raw(Var::Z, Vec::new())
    }

    fn one(&self) -> Poly<u64> {
        Poly::from_raw(Var::Z, vec![1])
    }

    fn is_zero(&self, a: &Poly<u64>) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Poly<u64>, b: &Poly<u64>) -> Poly<u64> {
        PolyRing::new(self.base, Var::Z).add(a, b)
    }

    fn neg(&self, a: &Poly<u64>) -> Poly<u64> {
        PolyRing::new(self.base, Var::Z).neg(a)
    }

    fn sub(&self, a: &Poly<u64>, b: &Poly<u64>) -> Poly<u64> {
        PolyRing::new(self.base, Var::Z).sub(a, b)
    }

    fn mul(&self, a: &Poly<u64>, b: &Poly<u64>) -> Poly<u64> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let f = &self.base;
        let (x, y) = (a.coeffs(), b.coeffs());
        let p = f.modulus() as u128;
        let mut acc = vec![0u128; x.len() + y.len() - 1];
        // accumulate unreduced while it cannot overflow
        let limit = u128::MAX - (p - 1) * (p - 1);
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                let slot = &mut acc[i + j];
                *slot += xi as u128 * yj as u128;
                if *slot >= limit {
                    *slot %= p;
                }
            }
        }
        self.reduce(acc.into_iter().map(|v| (v % p) as u64).collect())
    }

    fn exact_div(&self, a: &Poly<u64>, b: &Poly<u64>) -> Option<Poly<u64>> {
        let inv = self.inv(b)?;
        Some(self.mul(a, &inv))
    }

    fn inv(&self, a: &Poly<u64>) -> Option<Poly<u64>> {
        if a.is_zero() {
            return None;
        }
        // extended Euclid in F_p[Z] against the modulus
        let ring = PolyRing::new(self.base, Var::Z);
        let (mut r0, mut r1) = (self.modulus.clone(), a.clone());
        let (mut s0, mut s1) = (ring.zero(), ring.one());
        while !r1.is_zero() {
            let (q, r) = ring.divrem(&r0, &r1).ok()?;
            let s = ring.sub(&s0, &ring.mul(&q, &s1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
        }
        // r0 is a nonzero constant because the modulus is irreducible
        let c = self.base.inv(r0.lead()?)?;
        Some(self.reduce(ring.scale(&s0, &c).coeffs().to_vec()))
    }

    fn from_int(&self, n: &BigInt) -> Poly<u64> {
        self.embed(self.base.from_int(n))
    }

    fn is_field(&self) -> bool {
        true
    }

    fn characteristic(&self) -> u64 {
        self.base.modulus()
    }

    fn sample_points(&self, n: usize) -> Option<Vec<Poly<u64>>> {
        let order = self.order();
        if BigInt::from(n) > BigInt::from(order) {
            return None;
        }
        // enumerate by base-p digits
        let p = self.base.modulus();
        Some(
            (0..n as u64)
                .map(|mut k| {
                    let mut c = Vec::new();
                    while k > 0 {
                        c.push(k % p);
                        k /= p;
                    }
                    self.from_coeffs(&c)
                })
                .collect(),
        )
    }

    fn monomials(&self, a: &Poly<u64>) -> Vec<Monomial> {
        PolyRing::new(self.base, Var::Z).monomials(a)
    }

    fn variable(&self, v: Var) -> Option<Poly<u64>> {
        (v == Var::Z).then(|| self.generator())
    }

    fn variables(&self) -> Vec<Var> {
        vec![Var::Z]
    }
}

impl Field for ExtField {}

impl FiniteField for ExtField {
    fn prime(&self) -> u64 {
        self.base.modulus()
    }

    fn degree(&self) -> u32 {
        self.d() as u32
    }

    fn from_prime_residue(&self, c: u64) -> Poly<u64> {
        self.embed(c)
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> Poly<u64> {
        let c: Vec<u64> = (0..self.d()).map(|_| self.base.random_element(rng)).collect();
        self.from_coeffs(&c)
    }

    fn elements(&self) -> Vec<Poly<u64>> {
        let n = self.order().to_usize().expect("field too large to enumerate");
        self.sample_points(n).expect("order elements")
    }
}
