//! Galois structure of polynomials over `F_p`, realized through Frobenius.
//!
//! The Galois group of `F_{p^L} / F_p` is cyclic, generated by `x -> x^p`,
//! so it is never built as an explicit group. Its action on the root set
//! is read off from Frobenius orbits: transitivity on the roots of `f`
//! means a single orbit, and minimal polynomials are products over orbits.
//! Roots are found by factoring into linear factors over the splitting
//! field, never by enumerating it.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::factor_ff::{factor, prime_power_structure, random_irreducible};
use crate::numeric::{ExtField, PrimeField};
use crate::polynomial::{fp_poly, Poly, PolyRing};
use crate::resultant::kuo_resultant;
use crate::ring::{FiniteField, Ring, Var};

/// `F_{p^L}` with `L` the lcm of the irreducible factor degrees of `f`,
/// and every root of `f` with its multiplicity.
#[derive(Clone, Debug)]
pub struct SplittingField {
    pub ext: ExtField,
    pub roots: Vec<(Poly<u64>, usize)>,
}

impl SplittingField {
    pub fn degree(&self) -> u32 {
        self.ext.degree()
    }

    pub fn distinct_roots(&self) -> impl Iterator<Item = &Poly<u64>> {
        self.roots.iter().map(|(r, _)| r)
    }
}

/// Frobenius orbits on the distinct roots; each orbit lists `x, x^p, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub orbits: Vec<Vec<Poly<u64>>>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

fn require_monic(field: &PrimeField, f: &Poly<u64>) -> Result<usize> {
    fp_poly(*field, f.var()).check_var(f)?;
    match f.degree() {
        Some(n) if n >= 1 && f.lead() == Some(&1) => Ok(n),
        Some(n) if n >= 1 => Err(Error::NonMonicInput),
        _ => Err(Error::DegenerateInput("polynomial must have degree at least 1")),
    }
}

/// Splitting field of the monic `f` with all `deg f` roots.
pub fn splitting_field(field: &PrimeField, f: &Poly<u64>, seed: u64) -> Result<SplittingField> {
    require_monic(field, f)?;
    let fz = factor(field, f, seed)?;
    let l = fz.factors.iter().map(|(g, _)| g.degree().unwrap()).fold(1usize, |acc, d| acc.lcm(&d));
    let modulus = random_irreducible(&fp_poly(*field, Var::Z), l, seed)?;
    let ext = ExtField::new(*field, modulus)?;
    let lifted = PolyRing::new(ext.clone(), f.var());
    let f_ext = lifted.from_coeffs(f.coeffs().iter().map(|&c| ext.embed(c)).collect());
    let split = factor(&ext, &f_ext, seed)?;
    let mut roots: Vec<(Poly<u64>, usize)> = split
        .factors
        .into_iter()
        .map(|(lin, m)| {
            debug_assert_eq!(lin.degree(), Some(1));
            (ext.neg(lin.coeff(0).unwrap_or(&ext.zero())), m)
        })
        .collect();
    roots.sort();
    Ok(SplittingField { ext, roots })
}

/// Orbits of `x -> x^p` on the distinct roots.
pub fn frobenius_orbits(s: &SplittingField) -> OrbitPartition {
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for r in s.distinct_roots() {
        if seen.contains(r) {
            continue;
        }
        let mut orbit = vec![r.clone()];
        seen.insert(r.clone());
        let mut x = s.ext.frobenius(r);
        while &x != r {
            seen.insert(x.clone());
            orbit.push(x.clone());
            x = s.ext.frobenius(&x);
        }
        orbits.push(orbit);
    }
    OrbitPartition { orbits }
}

/// `true` iff Frobenius is transitive on the roots of `f`. Disagreement
/// with "f is a power of one irreducible" is reported as an error.
pub fn transitivity_check(field: &PrimeField, f: &Poly<u64>, seed: u64) -> Result<bool> {
    let s = splitting_field(field, f, seed)?;
    let single_orbit = frobenius_orbits(&s).len() == 1;
    let prime_power = prime_power_structure(field, f, seed)?.is_some();
    if single_orbit != prime_power {
        return Err(Error::TheoremViolation(format!(
            "{f:?}: single orbit = {single_orbit}, prime power = {prime_power}"
        )));
    }
    Ok(single_orbit)
}

/// `prod (T - f(y_i))` over the roots of `g` with multiplicity, computed in
/// the splitting field; `None` if a coefficient falls outside `F_p`.
pub fn root_product(field: &PrimeField, g: &Poly<u64>, f: &Poly<u64>, seed: u64) -> Result<Option<Poly<u64>>> {
    let s = splitting_field(field, g, seed)?;
    let rf = fp_poly(*field, f.var());
    let rt = PolyRing::new(s.ext.clone(), Var::T);
    let mut acc = rt.one();
    for (y, m) in &s.roots {
        let fy = rf.eval_lifted(f, &s.ext, y)?;
        let lin = rt.from_coeffs(vec![s.ext.neg(&fy), s.ext.one()]);
        acc = rt.mul(&acc, &rt.pow(&lin, *m as u64));
    }
    let coeffs: Option<Vec<u64>> = acc.coeffs().iter().map(|c| s.ext.as_base(c)).collect();
    Ok(coeffs.map(|c| fp_poly(*field, Var::T).from_coeffs(c)))
}

/// `kuo_resultant(g, f) == prod (T - f(y_i))`, exactly.
pub fn product_formula_check(field: &PrimeField, g: &Poly<u64>, f: &Poly<u64>, seed: u64) -> Result<bool> {
    require_monic(field, g)?;
    let Some(product) = root_product(field, g, f, seed)? else {
        return Ok(false);
    };
    Ok(kuo_resultant(field, g, f)?.h == product)
}

/// `prod (X - c)` over the distinct conjugates `c` of `alpha`.
pub fn minimal_polynomial(ext: &ExtField, alpha: &Poly<u64>) -> Poly<u64> {
    let rx = PolyRing::new(ext.clone(), Var::X);
    let mut acc = rx.from_coeffs(vec![ext.neg(alpha), ext.one()]);
    let mut c = ext.frobenius(alpha);
    while &c != alpha {
        acc = rx.mul(&acc, &rx.from_coeffs(vec![ext.neg(&c), ext.one()]));
        c = ext.frobenius(&c);
    }
    let coeffs =
        acc.coeffs().iter().map(|c| ext.as_base(c).expect("Frobenius-stable coefficients lie in F_p")).collect();
    fp_poly(*ext.base(), Var::X).from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor_ff::is_irreducible;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fp(p: u64) -> (PrimeField, PolyRing<PrimeField>) {
        let f = PrimeField::new(p).unwrap();
        (f, fp_poly(f, Var::X))
    }

    #[test]
    fn splitting_field_examples() {
        let (f3, r3) = fp(3);
        let a = r3.from_ints(&[1, 0, 1]);
        let s = splitting_field(&f3, &a, 0).unwrap();
        assert_eq!(s.degree(), 2);
        assert_eq!(s.roots.len(), 2);
        for (root, m) in &s.roots {
            assert_eq!(*m, 1);
            assert!(r3.eval_lifted(&a, &s.ext, root).unwrap().is_zero());
            assert_eq!(s.ext.mul(root, root), s.ext.embed(2));
        }
        assert_eq!(s.ext.add(&s.roots[0].0, &s.roots[1].0), s.ext.zero());

        let (f5, r5) = fp(5);
        let s = splitting_field(&f5, &r5.from_ints(&[-1, 0, 1]), 0).unwrap();
        assert_eq!(s.degree(), 1);
        let roots: Vec<_> = s.roots.iter().map(|(r, m)| (s.ext.as_base(r).unwrap(), *m)).collect();
        assert_eq!(roots, vec![(1, 1), (4, 1)]);

        let g = r3.from_ints(&[2, 1, 0, 1]);
        let sg = splitting_field(&f3, &g, 1).unwrap();
        let sg2 = splitting_field(&f3, &r3.mul(&g, &g), 1).unwrap();
        let distinct = |s: &SplittingField| s.roots.iter().map(|(_, m)| *m).collect::<Vec<_>>();
        assert_eq!(distinct(&sg2), distinct(&sg).iter().map(|m| 2 * m).collect::<Vec<_>>());
        assert_eq!(sg.roots.len(), sg2.roots.len());
    }

    #[test]
    fn orbit_examples() {
        let (f5, r5) = fp(5);
        let cubic = random_irreducible(&r5, 3, 9).unwrap();
        let s = splitting_field(&f5, &cubic, 0).unwrap();
        assert_eq!(frobenius_orbits(&s).sizes(), vec![3]);
        let quad = random_irreducible(&r5, 2, 3).unwrap();
        let s = splitting_field(&f5, &r5.mul(&cubic, &quad), 0).unwrap();
        let mut sizes = frobenius_orbits(&s).sizes();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
        let s = splitting_field(&f5, &r5.from_ints(&[-1, 0, 0, 0, 1]), 0).unwrap();
        assert_eq!(frobenius_orbits(&s).sizes(), vec![1; 4]);
    }

    #[test]
    fn orbit_successor_is_frobenius() {
        let (f2, r2) = fp(2);
        let a = r2.mul(&r2.from_ints(&[1, 1, 0, 0, 1]), &r2.from_ints(&[1, 1, 1]));
        let s = splitting_field(&f2, &a, 5).unwrap();
        for orbit in frobenius_orbits(&s).orbits {
            for (i, x) in orbit.iter().enumerate() {
                assert_eq!(&s.ext.frobenius(x), &orbit[(i + 1) % orbit.len()]);
            }
        }
    }

    #[test]
    fn transitivity_examples() {
        let (f5, r5) = fp(5);
        let g = random_irreducible(&r5, 3, 2).unwrap();
        assert!(transitivity_check(&f5, &g, 0).unwrap());
        assert!(transitivity_check(&f5, &r5.pow(&g, 3), 0).unwrap());
        let h = random_irreducible(&r5, 2, 2).unwrap();
        assert!(!transitivity_check(&f5, &r5.mul(&g, &h), 0).unwrap());
    }

    #[test]
    fn product_formula_examples() {
        let (f5, r5) = fp(5);
        let ry = fp_poly(f5, Var::Y);
        let g = random_irreducible(&ry, 3, 4).unwrap();
        let f = ry.from_ints(&[1, 2, 3]);
        assert!(product_formula_check(&f5, &g, &f, 0).unwrap());
        let p = root_product(&f5, &g, &ry.gen(), 0).unwrap().unwrap();
        assert_eq!(p, g.clone().rename(Var::T));
        let rt = fp_poly(f5, Var::T);
        let p = root_product(&f5, &g, &ry.from_ints(&[2]), 0).unwrap().unwrap();
        assert_eq!(p, rt.pow(&rt.from_ints(&[-2, 1]), 3));
        let _ = r5;
    }

    #[test]
    fn minimal_polynomial_examples() {
        let (f2, _) = fp(2);
        let f4 = ExtField::new(f2, Poly::from_raw(Var::Z, vec![1, 1, 1])).unwrap();
        let m = minimal_polynomial(&f4, &f4.generator());
        assert_eq!(m, fp_poly(f2, Var::X).from_ints(&[1, 1, 1]));
        let m = minimal_polynomial(&f4, &f4.embed(1));
        assert_eq!(m, fp_poly(f2, Var::X).from_ints(&[-1, 1]));

        let (f3, _) = fp(3);
        let modulus = random_irreducible(&fp_poly(f3, Var::Z), 4, 1).unwrap();
        let ext = ExtField::new(f3, modulus).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let rx = fp_poly(f3, Var::X);
        for _ in 0..20 {
            let a = ext.random_element(&mut rng);
            let m = minimal_polynomial(&ext, &a);
            assert_eq!(4 % m.degree().unwrap(), 0);
            assert!(is_irreducible(&f3, &m).unwrap());
            assert!(rx.eval_lifted(&m, &ext, &a).unwrap().is_zero());
        }
    }
}
