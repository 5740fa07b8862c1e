use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;

use crate::error::{Error, Result};
use crate::ring::{Field, FiniteField, Monomial, Ring};

/// Moduli must stay strictly below this bound.
pub const MAX_MODULUS: u64 = 1 << 62;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin. The first twelve primes as witnesses are
/// sufficient for every `n < 3.3 * 10^24`, in particular all of `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Inverse of `a` modulo the prime `p`, in `[1, p)`.
pub fn mod_inverse(a: i128, p: u64) -> Result<u64> {
    let m = p as i128;
    let a = a.rem_euclid(m);
    if a == 0 {
        return Err(Error::NotInvertible(a.to_string(), p));
    }
    let (mut r0, mut r1) = (m, a);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible(a.to_string(), p));
    }
    Ok(t0.rem_euclid(m) as u64)
}

/// The prime field `F_p`; elements are residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i128(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }

    /// Residue in `[0, p)` as a canonical element.
    pub fn elem(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn exact_div(&self, a: &u64, b: &u64) -> Option<u64> {
        let inv = mod_inverse(*b as i128, self.p).ok()?;
        Some(self.mul(a, &inv))
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        mod_inverse(*a as i128, self.p).ok()
    }

    fn from_int(&self, n: &BigInt) -> u64 {
        let r = n.abs() % BigInt::from(self.p);
        let r = r.to_u64().expect("residue fits in u64");
        if n.sign() == Sign::Minus {
            self.neg(&r)
        } else {
            r
        }
    }

    fn is_field(&self) -> bool {
        true
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn sample_points(&self, n: usize) -> Option<Vec<u64>> {
        if (n as u64) <= self.p {
            Some((0..n as u64).collect())
        } else {
            None
        }
    }

    fn monomials(&self, a: &u64) -> Vec<Monomial> {
        if *a == 0 {
            Vec::new()
        } else {
            vec![(BigRational::from_integer(BigInt::from(*a)), Vec::new())]
        }
    }

    fn pow(&self, a: &u64, e: u64) -> u64 {
        pow_mod(*a, e, self.p)
    }
}

impl Field for PrimeField {}

impl FiniteField for PrimeField {
    fn prime(&self) -> u64 {
        self.p
    }

    fn degree(&self) -> u32 {
        1
    }

    fn from_prime_residue(&self, c: u64) -> u64 {
        c % self.p
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn elements(&self) -> Vec<u64> {
        (0..self.p).collect()
    }

    fn frobenius(&self, a: &u64) -> u64 {
        *a
    }

    fn pth_root(&self, a: &u64) -> u64 {
        *a
    }
}
