//! Factorization over finite fields `F_q`, `q = p^d`: squarefree
//! decomposition, distinct-degree splitting, Cantor-Zassenhaus equal-degree
//! splitting, Rabin's irreducibility test and prime-power detection.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polynomial::{Poly, PolyRing};
use crate::ring::{FiniteField, Ring};

/// `unit * prod factor^mult`, factors monic irreducible, pairwise distinct
/// and sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<(Poly<E>, usize)>,
}

impl<E: Clone + Ord> Factorization<E> {
    pub fn distinct_count(&self) -> usize {
        self.factors.len()
    }

    /// `true` when there is a single factor with multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// `Some((base, e))` with `base^e` equal to the monic input, or `None` when
/// the input has two or more distinct irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePower<E> {
    pub base: Poly<E>,
    pub exponent: usize,
}

pub type PrimePowerStructure<E> = Option<PrimePower<E>>;

/// Degree first, then coefficients compared from the leading end.
pub fn canonical_cmp<E: Ord>(a: &Poly<E>, b: &Poly<E>) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

fn require_monic<F: FiniteField>(ring: &PolyRing<F>, a: &Poly<F::Elem>) -> Result<()> {
    if a.degree().unwrap_or(0) == 0 {
        return Err(Error::DegenerateInput("polynomial must have degree at least 1"));
    }
    if !ring.is_monic(a) {
        return Err(Error::NonMonicInput);
    }
    Ok(())
}

fn ring_for<F: FiniteField>(field: &F, a: &Poly<F::Elem>) -> PolyRing<F> {
    PolyRing::new(field.clone(), a.var())
}

/// Writes the monic `a` as `prod b_i^(m_i)` with the `b_i` squarefree and
/// pairwise coprime, sorted by multiplicity.
pub fn squarefree_decomposition<F: FiniteField>(field: &F, a: &Poly<F::Elem>) -> Result<Vec<(Poly<F::Elem>, usize)>> {
    let ring = ring_for(field, a);
    require_monic(&ring, a)?;
    let mut out = Vec::new();
    sqf_rec(&ring, a, 1, &mut out);
    out.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| canonical_cmp(&x.0, &y.0)));
    // identical multiplicities from different recursion levels are merged
    let mut merged: Vec<(Poly<F::Elem>, usize)> = Vec::new();
    for (b, m) in out {
        match merged.last_mut() {
            Some((prev, pm)) if *pm == m => *prev = ring.mul(prev, &b),
            _ => merged.push((b, m)),
        }
    }
    Ok(merged)
}

fn sqf_rec<F: FiniteField>(ring: &PolyRing<F>, a: &Poly<F::Elem>, scale: usize, out: &mut Vec<(Poly<F::Elem>, usize)>) {
    let div = |x: &Poly<F::Elem>, y: &Poly<F::Elem>| ring.exact_div(x, y).expect("gcd divides");
    let mut c = ring.gcd_monic(a, &ring.derivative(a)).expect("a is nonzero");
    let mut w = div(a, &c);
    let mut i = 1;
    while w.degree() != Some(0) {
        let y = ring.gcd_monic(&w, &c).expect("w is nonzero");
        let fac = div(&w, &y);
        if fac.degree() != Some(0) {
            out.push((fac, i * scale));
        }
        w = y;
        c = div(&c, &w);
        i += 1;
    }
    if c.degree() != Some(0) {
        // every exponent of c is a multiple of p: take the p-th root
        let p = ring.base().prime() as usize;
        let root = ring.from_coeffs(c.coeffs().iter().step_by(p).map(|x| ring.base().pth_root(x)).collect());
        sqf_rec(ring, &root, scale * p, out);
    }
}

/// Splits a squarefree monic polynomial into `(product of all irreducible
/// factors of degree d, d)` pairs.
pub fn distinct_degree<F: FiniteField>(field: &F, a: &Poly<F::Elem>) -> Result<Vec<(Poly<F::Elem>, usize)>> {
    let ring = ring_for(field, a);
    require_monic(&ring, a)?;
    let q = field.order();
    let x = ring.gen();
    let mut rest = a.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap() >= 2 * d {
        h = ring.pow_mod(&h, &q, &rest);
        let g = ring.gcd_monic(&ring.sub(&h, &x), &rest)?;
        if g.degree() != Some(0) {
            rest = ring.exact_div(&rest, &g).expect("gcd divides");
            h = ring.rem(&h, &rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(n) = rest.degree().filter(|&n| n > 0) {
        out.push((rest, n));
    }
    Ok(out)
}

/// Cantor-Zassenhaus: splits a monic product of distinct irreducibles, all
/// of degree `d`, into its factors.
pub fn equal_degree<F: FiniteField, G: rand::Rng + ?Sized>(
    field: &F,
    a: &Poly<F::Elem>,
    d: usize,
    rng: &mut G,
) -> Result<Vec<Poly<F::Elem>>> {
    let ring = ring_for(field, a);
    require_monic(&ring, a)?;
    let n = a.degree().unwrap();
    if n % d != 0 {
        return Err(Error::DegenerateInput("degree is not a multiple of the factor degree"));
    }
    let mut out = Vec::new();
    let mut stack = vec![a.clone()];
    let q = field.order();
    let qd = num_traits::pow(q, d);
    let char2 = field.prime() == 2;
    let half = (&qd - BigUint::one()) >> 1;
    let trace_len = field.degree() as usize * d;
    while let Some(f) = stack.pop() {
        let m = f.degree().unwrap();
        if m == d {
            out.push(f);
            continue;
        }
        loop {
            let r = ring.from_coeffs((0..m).map(|_| field.random_element(rng)).collect());
            let w = if char2 {
                // absolute trace r + r^2 + ... + r^(2^(kd - 1))
                let mut term = ring.rem(&r, &f)?;
                let mut acc = term.clone();
                for _ in 1..trace_len {
                    term = ring.mul_mod(&term, &term, &f);
                    acc = ring.add(&acc, &term);
                }
                acc
            } else {
                ring.sub(&ring.pow_mod(&r, &half, &f), &ring.one())
            };
            if w.is_zero() {
                continue;
            }
            let g = ring.gcd_monic(&w, &f)?;
            let dg = g.degree().unwrap();
            if dg > 0 && dg < m {
                let cofactor = ring.exact_div(&f, &g).expect("gcd divides");
                stack.push(g);
                stack.push(cofactor);
                break;
            }
        }
    }
    out.sort_by(canonical_cmp);
    Ok(out)
}

/// Complete factorization of a monic polynomial, deterministic given the rng.
pub fn factor_with_rng<F: FiniteField, G: rand::Rng + ?Sized>(
    field: &F,
    a: &Poly<F::Elem>,
    rng: &mut G,
) -> Result<Factorization<F::Elem>> {
    let mut factors = Vec::new();
    for (sqf, mult) in squarefree_decomposition(field, a)? {
        for (block, d) in distinct_degree(field, &sqf)? {
            for f in equal_degree(field, &block, d, rng)? {
                factors.push((f, mult));
            }
        }
    }
    factors.sort_by(|x, y| canonical_cmp(&x.0, &y.0));
    Ok(Factorization { unit: field.one(), factors })
}

/// Complete factorization of a monic polynomial with a seeded random source.
pub fn factor<F: FiniteField>(field: &F, a: &Poly<F::Elem>, seed: u64) -> Result<Factorization<F::Elem>> {
    factor_with_rng(field, a, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Factorization of an arbitrary nonzero polynomial: the leading
/// coefficient becomes the unit.
pub fn factor_any<F: FiniteField>(field: &F, a: &Poly<F::Elem>, seed: u64) -> Result<Factorization<F::Elem>> {
    let ring = ring_for(field, a);
    let lc = a.lead().ok_or(Error::Undefined("factorization of zero"))?.clone();
    if a.degree() == Some(0) {
        return Ok(Factorization { unit: lc, factors: Vec::new() });
    }
    let mut fz = factor(field, &ring.make_monic(a), seed)?;
    fz.unit = lc;
    Ok(fz)
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

/// Rabin's test: `Y^(q^n) = Y mod A` and `gcd(Y^(q^(n/r)) - Y, A) = 1` for
/// every prime `r | n`.
pub fn is_irreducible<F: FiniteField>(field: &F, a: &Poly<F::Elem>) -> Result<bool> {
    let ring = ring_for(field, a);
    require_monic(&ring, a)?;
    let n = a.degree().unwrap();
    if n == 1 {
        return Ok(true);
    }
    let q = field.order();
    let x = ring.gen();
    // powers[k] = Y^(q^k) mod A
    let mut powers = vec![ring.rem(&x, a)?];
    for k in 1..=n {
        let next = ring.pow_mod(&powers[k - 1], &q, a);
        powers.push(next);
    }
    if powers[n] != ring.rem(&x, a)? {
        return Ok(false);
    }
    for r in prime_divisors(n) {
        let g = ring.gcd_monic(&ring.sub(&powers[n / r], &x), a)?;
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Uniformly random monic irreducible polynomial of degree `n`, determined
/// by the seed.
pub fn random_irreducible<F: FiniteField>(ring: &PolyRing<F>, n: usize, seed: u64) -> Result<Poly<F::Elem>> {
    random_irreducible_with_rng(ring, n, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_irreducible_with_rng<F: FiniteField, G: rand::Rng + ?Sized>(
    ring: &PolyRing<F>,
    n: usize,
    rng: &mut G,
) -> Result<Poly<F::Elem>> {
    if n == 0 {
        return Err(Error::DegenerateInput("irreducible polynomials have degree at least 1"));
    }
    loop {
        let cand = ring.random_monic(n, rng);
        if is_irreducible(ring.base(), &cand)? {
            return Ok(cand);
        }
    }
}

/// `Some((B, e))` iff the monic `a` equals `B^e` for one monic irreducible `B`.
pub fn prime_power_structure<F: FiniteField>(
    field: &F,
    a: &Poly<F::Elem>,
    seed: u64,
) -> Result<PrimePowerStructure<F::Elem>> {
    let fz = factor(field, a, seed)?;
    Ok(match fz.factors.as_slice() {
        [(base, e)] => Some(PrimePower { base: base.clone(), exponent: *e }),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{ExtField, PrimeField};
    use crate::polynomial::fp_poly;
    use crate::ring::Var;

    fn fp(p: u64) -> (PrimeField, PolyRing<PrimeField>) {
        let f = PrimeField::new(p).unwrap();
        (f, fp_poly(f, Var::X))
    }

    fn expand<F: FiniteField>(ring: &PolyRing<F>, fz: &Factorization<F::Elem>) -> Poly<F::Elem> {
        fz.factors.iter().fold(ring.constant(fz.unit.clone()), |acc, (f, m)| ring.mul(&acc, &ring.pow(f, *m as u64)))
    }

    #[test]
    fn squarefree_examples() {
        let (f, r) = fp(5);
        let y_minus_1 = r.from_ints(&[-1, 1]);
        let y_plus_1 = r.from_ints(&[1, 1]);
        let a = r.mul(&r.mul(&y_minus_1, &y_minus_1), &y_plus_1);
        let sqf = squarefree_decomposition(&f, &a).unwrap();
        assert_eq!(sqf, vec![(y_plus_1.clone(), 1), (y_minus_1, 2)]);
        // Y^5 - 2 = (Y - 2)^5
        let a = r.from_ints(&[-2, 0, 0, 0, 0, 1]);
        assert_eq!(squarefree_decomposition(&f, &a).unwrap(), vec![(r.from_ints(&[-2, 1]), 5)]);
        let a = r.from_ints(&[1, 0, 1]);
        assert_eq!(squarefree_decomposition(&f, &a).unwrap(), vec![(a.clone(), 1)]);
        assert_eq!(squarefree_decomposition(&f, &r.from_ints(&[1, 2])), Err(Error::NonMonicInput));
    }

    #[test]
    fn squarefree_multiplicities_past_p() {
        // (X + 1)^7 (X + 2)^2 over F_3: multiplicity 7 = 2*3 + 1 straddles p
        let (f, r) = fp(3);
        let a = r.mul(&r.pow(&r.from_ints(&[1, 1]), 7), &r.pow(&r.from_ints(&[2, 1]), 2));
        let sqf = squarefree_decomposition(&f, &a).unwrap();
        assert_eq!(sqf, vec![(r.from_ints(&[2, 1]), 2), (r.from_ints(&[1, 1]), 7)]);
    }

    #[test]
    fn squarefree_over_extension_uses_pth_root() {
        let f2 = PrimeField::new(2).unwrap();
        let k = ExtField::new(f2, Poly::from_raw(Var::Z, vec![1, 1, 1])).unwrap();
        let r = PolyRing::new(k.clone(), Var::X);
        // (X + Z)^2 = X^2 + Z^2 has zero derivative
        let lin = r.from_coeffs(vec![k.generator(), k.one()]);
        let sq = r.mul(&lin, &lin);
        assert!(r.derivative(&sq).is_zero());
        assert_eq!(squarefree_decomposition(&k, &sq).unwrap(), vec![(lin, 2)]);
    }

    #[test]
    fn factor_examples() {
        let (f, r) = fp(5);
        let fz = factor(&f, &r.from_ints(&[1, 0, 1]), 1).unwrap();
        assert_eq!(fz.factors, vec![(r.from_ints(&[2, 1]), 1), (r.from_ints(&[3, 1]), 1)]);
        let fz = factor(&f, &r.from_ints(&[-1, 0, 0, 0, 1]), 1).unwrap();
        let lin: Vec<_> = (1..5).map(|c| (r.from_ints(&[-c, 1]), 1)).collect();
        let mut sorted = lin.clone();
        sorted.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        assert_eq!(fz.factors, sorted);
        let (f3, r3) = fp(3);
        let fz = factor(&f3, &r3.from_ints(&[1, 0, 1]), 1).unwrap();
        assert!(fz.is_irreducible());
    }

    #[test]
    fn irreducibility_examples() {
        let (f, r) = fp(5);
        assert!(is_irreducible(&f, &r.from_ints(&[3, 1])).unwrap());
        assert!(!is_irreducible(&f, &r.from_ints(&[1, 0, 1])).unwrap());
        let (f2, r2) = fp(2);
        assert!(is_irreducible(&f2, &r2.from_ints(&[1, 1, 1])).unwrap());
        assert!(!is_irreducible(&f2, &r2.from_ints(&[1, 0, 1])).unwrap());
        // product of two irreducible cubics over F_2 has no roots but is reducible
        let a = r2.mul(&r2.from_ints(&[1, 1, 0, 1]), &r2.from_ints(&[1, 0, 1, 1]));
        assert!(!is_irreducible(&f2, &a).unwrap());
    }

    #[test]
    fn random_irreducible_contract() {
        let (f, r) = fp(5);
        let a = random_irreducible(&r, 3, 42).unwrap();
        assert_eq!(a.degree(), Some(3));
        assert!(is_irreducible(&f, &a).unwrap());
        assert_eq!(random_irreducible(&r, 3, 42).unwrap(), a);
        assert_eq!(random_irreducible(&r, 1, 7).unwrap().degree(), Some(1));
    }

    #[test]
    fn prime_power_examples() {
        let (f, r) = fp(5);
        let b = r.from_ints(&[1, 1]);
        let got = prime_power_structure(&f, &r.pow(&b, 3), 0).unwrap();
        assert_eq!(got, Some(PrimePower { base: b.clone(), exponent: 3 }));
        let (f3, r3) = fp(3);
        let a = r3.from_ints(&[1, 0, 1]);
        assert_eq!(prime_power_structure(&f3, &a, 0).unwrap(), Some(PrimePower { base: a, exponent: 1 }));
        assert_eq!(prime_power_structure(&f, &r.mul(&r.gen(), &b), 0).unwrap(), None);
    }

    #[test]
    fn brute_force_roots_agree_for_small_degrees() {
        for p in [2u64, 3, 5, 7] {
            let (f, r) = fp(p);
            let mut count = 0;
            // all monic polynomials of degree 1..=3
            for deg in 1..=3usize {
                for code in 0..p.pow(deg as u32) {
                    let mut c: Vec<u64> = (0..deg).map(|i| code / p.pow(i as u32) % p).collect();
                    c.push(1);
                    let a = r.from_coeffs(c);
                    let roots: Vec<u64> = (0..p).filter(|x| r.eval(&a, x) == 0).collect();
                    let fz = factor(&f, &a, code).unwrap();
                    assert_eq!(expand(&r, &fz), a);
                    let linear: Vec<u64> = fz
                        .factors
                        .iter()
                        .filter(|(g, _)| g.degree() == Some(1))
                        .map(|(g, _)| f.neg(&g.coeffs()[0]))
                        .collect();
                    let mut linear_sorted = linear.clone();
                    linear_sorted.sort();
                    assert_eq!(linear_sorted, roots, "p={p} a={a:?}");
                    // degree <= 3: irreducible iff no roots (or linear)
                    assert_eq!(is_irreducible(&f, &a).unwrap(), deg == 1 || roots.is_empty());
                    count += 1;
                }
            }
            assert!(count > 0);
        }
    }

    #[test]
    fn factoring_over_extension_field() {
        let f3 = PrimeField::new(3).unwrap();
        let k = ExtField::new(f3, Poly::from_raw(Var::Z, vec![1, 0, 1])).unwrap();
        let r = PolyRing::new(k.clone(), Var::X);
        // X^2 + 1 splits over F_9 as (X - Z)(X + Z)
        let a = r.from_ints(&[1, 0, 1]);
        let fz = factor(&k, &a, 3).unwrap();
        assert_eq!(fz.factors.len(), 2);
        assert!(fz.factors.iter().all(|(g, m)| g.degree() == Some(1) && *m == 1));
        assert_eq!(expand(&r, &fz), a);
    }

    #[test]
    fn characteristic_two_equal_degree() {
        let (f2, r2) = fp(2);
        // product of the three irreducible quartics over F_2 (with X^4+X^3+X^2+X+1 too)
        let quartics = [[1, 1, 0, 0, 1], [1, 0, 0, 1, 1], [1, 1, 1, 1, 1]];
        let a = quartics.iter().fold(r2.one(), |acc, q| r2.mul(&acc, &r2.from_ints(q)));
        let fz = factor(&f2, &a, 11).unwrap();
        assert_eq!(fz.factors.len(), 3);
        assert!(fz.factors.iter().all(|(g, _)| g.degree() == Some(4)));
        assert_eq!(expand(&r2, &fz), a);
    }
}
