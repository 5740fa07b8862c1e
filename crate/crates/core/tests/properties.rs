//! Randomized invariants for every module.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kuores_core::expr_parse::{parse_expr, parse_poly, print_poly};
use kuores_core::factor_ff::{factor, is_irreducible, prime_power_structure, random_irreducible};
use kuores_core::galois::{
    frobenius_orbits, minimal_polynomial, product_formula_check, splitting_field, transitivity_check,
};
use kuores_core::newton_polygon::{
    dumas_irreducible, newton_polygon, prime_power_over_series, weighted_initial_part, SeriesPrimePower, Verdict,
};
use kuores_core::numeric::{mod_inverse, ExtField, PrimeField, Rational, Rationals};
use kuores_core::polynomial::{fp_poly, q_poly, qx_poly, BiPoly};
use kuores_core::resultant::{
    kuo_resultant, resultant, resultant_bareiss, resultant_euclid, resultant_eval_interp, resultant_subresultant,
};
use kuores_core::{FiniteField, Poly, PolyRing, Ring, Var};

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..=9, 0..=max_len)
}

fn nonconst(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..=9, 2..=max_len).prop_filter("degree >= 1", |c| *c.last().unwrap() != 0)
}

fn monic(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..=9, 1..=max_deg).prop_map(|mut c| {
        c.push(1);
        c
    })
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn f5() -> PrimeField {
    PrimeField::new(5).unwrap()
}

/// Extension fields with `p^d <= 625`.
fn small_extensions() -> Vec<ExtField> {
    [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5), (7, 2), (5, 3), (5, 4)]
        .into_iter()
        .map(|(p, d)| {
            let k = PrimeField::new(p).unwrap();
            ExtField::new(k, random_irreducible(&fp_poly(k, Var::Z), d, p * 31 + d as u64).unwrap()).unwrap()
        })
        .collect()
}

mod numeric {
    use super::*;

    #[test]
    fn inverse_exhaustive_small_primes() {
        for p in (2..=101u64).filter(|&n| kuores_core::numeric::is_prime(n)) {
            for a in 1..p {
                let inv = mod_inverse(a as i128, p).unwrap();
                assert!((1..p).contains(&inv));
                assert_eq!(inv * a % p, 1);
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_prime_field() {
        for k in small_extensions() {
            let fixed = k.elements().into_iter().filter(|a| k.frobenius(a) == *a).count();
            assert_eq!(fixed as u64, k.prime(), "{k:?}");
        }
    }

    #[test]
    fn fermat_in_every_small_extension() {
        for k in small_extensions() {
            let q_minus_1 = k.order() - 1u32;
            for a in k.elements().into_iter().filter(|a| !k.is_zero(a)) {
                assert!(k.is_one(&k.pow_big(&a, &q_minus_1)));
            }
        }
    }

    #[test]
    fn frobenius_is_a_ring_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in small_extensions() {
            for _ in 0..50 {
                let (a, b) = (k.random_element(&mut rng), k.random_element(&mut rng));
                assert_eq!(k.frobenius(&k.add(&a, &b)), k.add(&k.frobenius(&a), &k.frobenius(&b)));
                assert_eq!(k.frobenius(&k.mul(&a, &b)), k.mul(&k.frobenius(&a), &k.frobenius(&b)));
            }
        }
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50, e in -50i64..50) {
            let (x, y, z) = (Rational::new(a.into(), b.into()), Rational::new(c.into(), d.into()), q(e));
            let r = Rationals;
            prop_assert_eq!(r.add(&r.add(&x, &y), &z), r.add(&x, &r.add(&y, &z)));
            prop_assert_eq!(r.mul(&r.mul(&x, &y), &z), r.mul(&x, &r.mul(&y, &z)));
            prop_assert_eq!(r.mul(&x, &r.add(&y, &z)), r.add(&r.mul(&x, &y), &r.mul(&x, &z)));
            prop_assert_eq!(r.add(&x, &y), r.add(&y, &x));
            // canonical form: equal values share one representation
            let scaled = Rational::new(BigInt::from(a) * 7, BigInt::from(b) * 7);
            prop_assert_eq!(scaled.numer(), x.numer());
            prop_assert_eq!(scaled.denom(), x.denom());
        }
    }
}

mod polynomial {
    use super::*;

    proptest! {
        #[test]
        fn ring_axioms_over_q(a in coeffs(6), b in coeffs(6), c in coeffs(6)) {
            let r = q_poly(Var::Y);
            let (a, b, c) = (r.from_ints(&a), r.from_ints(&b), r.from_ints(&c));
            prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
            prop_assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
            prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        }

        #[test]
        fn ring_axioms_over_f5(a in coeffs(6), b in coeffs(6), c in coeffs(6)) {
            let r = fp_poly(f5(), Var::Y);
            let (a, b, c) = (r.from_ints(&a), r.from_ints(&b), r.from_ints(&c));
            prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
            prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        }

        #[test]
        fn divrem_multiplies_back(a in coeffs(8), b in coeffs(5)) {
            prop_assume!(b.iter().any(|&x| x != 0));
            check_divrem(&q_poly(Var::Y), &a, &b);
            check_divrem(&fp_poly(f5(), Var::Y), &a, &b);
        }

        #[test]
        fn gcd_divides_both(a in coeffs(6), b in coeffs(6), c in coeffs(4)) {
            let r = q_poly(Var::Y);
            let (a, b, c) = (r.from_ints(&a), r.from_ints(&b), r.from_ints(&c));
            let (a, b) = (r.mul(&a, &c), r.mul(&b, &c));
            if a.is_zero() && b.is_zero() {
                return Ok(());
            }
            let g = r.gcd_monic(&a, &b).unwrap();
            prop_assert!(r.is_monic(&g));
            prop_assert!(r.rem(&a, &g).unwrap().is_zero());
            prop_assert!(r.rem(&b, &g).unwrap().is_zero());
            if !c.is_zero() {
                prop_assert!(r.rem(&g, &r.make_monic(&c)).unwrap().is_zero());
            }
        }

        #[test]
        fn degree_is_additive(a in nonconst(6), b in nonconst(6)) {
            let r = q_poly(Var::Y);
            let (a, b) = (r.from_ints(&a), r.from_ints(&b));
            prop_assert_eq!(r.mul(&a, &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }
    }

    fn check_divrem<R: kuores_core::Field>(r: &PolyRing<R>, a: &[i64], b: &[i64]) {
        let (a, b) = (r.from_ints(a), r.from_ints(b));
        if b.is_zero() {
            return;
        }
        let (quo, rem) = r.divrem(&a, &b).unwrap();
        assert_eq!(r.add(&r.mul(&quo, &b), &rem), a);
        assert!(rem.is_zero() || rem.degree() < b.degree());
    }
}

mod parsing {
    use super::*;

    fn bivariate(max_t: usize, max_x: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-30i64..=30, 0..=max_x), 0..=max_t)
    }

    fn build_qx(c: &[Vec<i64>]) -> BiPoly<Rational> {
        let r = qx_poly(Var::T);
        r.from_coeffs(c.iter().map(|inner| r.base().from_ints(inner)).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn round_trip_q(c in prop::collection::vec(-1000i64..=1000, 0..10)) {
            let r = q_poly(Var::Y);
            let a = r.from_ints(&c);
            prop_assert_eq!(parse_poly(&print_poly(&r, &a), &r).unwrap(), a);
        }

        #[test]
        fn round_trip_q_fractions(c in prop::collection::vec((-1000i64..=1000, 1i64..=50), 0..8)) {
            let r = q_poly(Var::Y);
            let a = r.from_coeffs(c.iter().map(|&(n, d)| Rational::new(n.into(), d.into())).collect());
            prop_assert_eq!(parse_poly(&print_poly(&r, &a), &r).unwrap(), a);
        }

        #[test]
        fn round_trip_fp(c in prop::collection::vec(0i64..=100, 0..10)) {
            let r = fp_poly(PrimeField::new(101).unwrap(), Var::X);
            let a = r.from_ints(&c);
            prop_assert_eq!(parse_poly(&print_poly(&r, &a), &r).unwrap(), a);
        }

        #[test]
        fn round_trip_qx(c in bivariate(6, 8)) {
            let r = qx_poly(Var::T);
            let a = build_qx(&c);
            prop_assert_eq!(parse_poly(&print_poly(&r, &a), &r).unwrap(), a);
        }

        #[test]
        fn parser_is_total(text in "\\PC{0,40}") {
            let _ = parse_poly(&text, &qx_poly(Var::Y));
        }

        #[test]
        fn parser_is_total_on_grammar_tokens(text in "[XYTZ0-9()^*+ -]{0,40}") {
            match parse_expr(&text) {
                Ok(_) => {}
                Err(e) => prop_assert!(e.pos <= text.len()),
            }
            let _ = parse_poly(&text, &fp_poly(f5(), Var::T));
        }
    }
}

mod resultants {
    use super::*;

    fn pair_strategy() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
        (coeffs(6), coeffs(6)).prop_filter("not both constant", |(a, b)| a.len() > 1 || b.len() > 1)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn swapping_arguments_changes_sign_by_degree_parity((a, b) in pair_strategy()) {
            let r = q_poly(Var::Y);
            let (a, b) = (r.from_ints(&a), r.from_ints(&b));
            prop_assume!(a.degree().unwrap_or(0) + b.degree().unwrap_or(0) > 0);
            prop_assume!(!a.is_zero() && !b.is_zero());
            let ab = resultant(&r, &a, &b).unwrap();
            let ba = resultant(&r, &b, &a).unwrap();
            let sign = if a.degree().unwrap() * b.degree().unwrap() % 2 == 1 { -q(1) } else { q(1) };
            prop_assert_eq!(ab, sign * ba);
        }

        #[test]
        fn multiplicative_in_first_argument(a in nonconst(4), b in nonconst(4), c in nonconst(4)) {
            let r = q_poly(Var::Y);
            let (a, b, c) = (r.from_ints(&a), r.from_ints(&b), r.from_ints(&c));
            let lhs = resultant(&r, &r.mul(&a, &b), &c).unwrap();
            prop_assert_eq!(lhs, resultant(&r, &a, &c).unwrap() * resultant(&r, &b, &c).unwrap());
            let k = PrimeField::new(101).unwrap();
            let rf = fp_poly(k, Var::Y);
            let map = |p: &Poly<Rational>| rf.from_coeffs(p.coeffs().iter().map(|x| k.from_int(x.numer())).collect());
            let (a, b, c) = (map(&a), map(&b), map(&c));
            prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
            prop_assume!(a.degree() > Some(0) || c.degree() > Some(0));
            prop_assume!(b.degree() > Some(0) || c.degree() > Some(0));
            let lhs = resultant(&rf, &rf.mul(&a, &b), &c).unwrap();
            prop_assert_eq!(lhs, k.mul(&resultant(&rf, &a, &c).unwrap(), &resultant(&rf, &b, &c).unwrap()));
        }

        #[test]
        fn scalar_algorithms_agree((a, b) in pair_strategy()) {
            let r = q_poly(Var::Y);
            let (a, b) = (r.from_ints(&a), r.from_ints(&b));
            if let Ok(x) = resultant_bareiss(&r, &a, &b) {
                prop_assert_eq!(&x, &resultant_subresultant(&r, &a, &b).unwrap());
                prop_assert_eq!(&x, &resultant_euclid(&r, &a, &b).unwrap());
            }
        }

        #[test]
        fn bivariate_algorithms_agree(a in prop::collection::vec(coeffs(3), 1..5), b in prop::collection::vec(coeffs(3), 1..5)) {
            let ry = PolyRing::new(q_poly(Var::T), Var::Y);
            let build = |c: &[Vec<i64>]| ry.from_coeffs(c.iter().map(|x| ry.base().from_ints(x)).collect());
            let (a, b) = (build(&a), build(&b));
            if let Ok(x) = resultant_bareiss(&ry, &a, &b) {
                prop_assert_eq!(&x, &resultant_subresultant(&ry, &a, &b).unwrap());
                prop_assert_eq!(Some(x), resultant_eval_interp(&ry, &a, &b).unwrap());
            }
        }

        #[test]
        fn kuo_is_monic_of_degree_deg_g(g in monic(5), f in coeffs(5)) {
            let ry = q_poly(Var::Y);
            let (g, f) = (ry.from_ints(&g), ry.from_ints(&f));
            let k = kuo_resultant(&Rationals, &g, &f).unwrap();
            prop_assert_eq!(k.h.degree(), g.degree());
            prop_assert!(q_poly(Var::T).is_monic(&k.h));
            let again = kuo_resultant(&Rationals, &g, &ry.gen()).unwrap();
            prop_assert_eq!(again.h, g.rename(Var::T));
        }
    }
}

mod factoring {
    use super::*;

    fn expand(ring: &PolyRing<PrimeField>, unit: u64, factors: &[(Poly<u64>, usize)]) -> Poly<u64> {
        factors.iter().fold(ring.constant(unit), |acc, (f, m)| ring.mul(&acc, &ring.pow(f, *m as u64)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn factorization_invariants(p in prop::sample::select(vec![2u64, 3, 5, 101]), c in prop::collection::vec(0i64..1000, 1..=10), seed in 0u64..1000) {
            let k = PrimeField::new(p).unwrap();
            let r = fp_poly(k, Var::X);
            let mut c = c;
            c.push(1);
            let a = r.from_ints(&c);
            let fz = factor(&k, &a, seed).unwrap();
            prop_assert_eq!(expand(&r, fz.unit, &fz.factors), a.clone());
            let degree: usize = fz.factors.iter().map(|(f, m)| m * f.degree().unwrap()).sum();
            prop_assert_eq!(Some(degree), a.degree());
            for (f, _) in &fz.factors {
                prop_assert!(is_irreducible(&k, f).unwrap());
            }
            prop_assert_eq!(&factor(&k, &a, seed).unwrap(), &fz);
            let other = factor(&k, &a, seed.wrapping_mul(7919).wrapping_add(1)).unwrap();
            let multiset = |f: &[(Poly<u64>, usize)]| f.iter().cloned().collect::<BTreeMap<_, _>>();
            prop_assert_eq!(multiset(&other.factors), multiset(&fz.factors));
        }
    }
}

mod newton {
    use super::*;

    fn bivariate() -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-5i64..=5, 0..8), 1..7)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn hull_lies_below_support(c in bivariate()) {
            let r = qx_poly(Var::T);
            let h = r.from_coeffs(c.iter().map(|x| r.base().from_ints(x)).collect());
            prop_assume!(!h.is_zero());
            let poly = newton_polygon(&r, &h).unwrap();
            for pt in &poly.support {
                prop_assert!(poly.on_or_above(*pt));
            }
            prop_assert_eq!(poly.vertices.first().unwrap().0, poly.support.first().unwrap().0);
            prop_assert_eq!(poly.vertices.last().unwrap().0, h.degree().unwrap());
            for w in poly.vertices.windows(2) {
                prop_assert!(w[0].0 < w[1].0);
            }
        }

        #[test]
        fn initial_part_is_idempotent(c in bivariate(), a in 1u64..20, b in 1u64..20) {
            let r = qx_poly(Var::T);
            let h = r.from_coeffs(c.iter().map(|x| r.base().from_ints(x)).collect());
            prop_assume!(!h.is_zero());
            let once = weighted_initial_part(&r, &h, a, b).unwrap();
            prop_assert_eq!(weighted_initial_part(&r, &once, a, b).unwrap(), once);
        }

        #[test]
        fn binomials_follow_the_gcd(n in 1usize..=9, m in 1usize..=9) {
            let r = qx_poly(Var::T);
            let h = parse_poly(&format!("T^{n} - X^{m}"), &r).unwrap();
            let v = dumas_irreducible(&r, &h).unwrap();
            let coprime = num_integer::gcd(n, m) == 1;
            prop_assert_eq!(v.verdict == Verdict::Irreducible, coprime);
        }

        #[test]
        fn perfect_powers_are_never_certified(c in prop::collection::vec(prop::collection::vec(-3i64..=3, 0..4), 1..3), e in 2u32..4) {
            let r = qx_poly(Var::T);
            let mut coeffs: Vec<_> = c.iter().map(|x| r.base().from_ints(x)).collect();
            coeffs.push(r.base().one());
            let s = r.from_coeffs(coeffs);
            let h = r.pow(&s, e as u64);
            prop_assert_eq!(dumas_irreducible(&r, &h).unwrap().verdict, Verdict::Inconclusive);
            if let SeriesPrimePower::Power { base, exponent, .. } = prime_power_over_series(&r, &h).unwrap() {
                prop_assert_eq!(r.pow(&base, exponent as u64), h);
                prop_assert!(exponent >= e as usize);
            }
        }
    }
}

mod galois_structure {
    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn single_orbit_iff_prime_power(p in prop::sample::select(vec![2u64, 3, 5, 13]), d in 1usize..=8, seed in 0u64..10_000) {
            let k = PrimeField::new(p).unwrap();
            let r = fp_poly(k, Var::X);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = r.random_monic(d, &mut rng);
            let single = transitivity_check(&k, &f, seed).unwrap();
            prop_assert_eq!(single, prime_power_structure(&k, &f, seed).unwrap().is_some());
        }

        #[test]
        fn product_formula_holds(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), dg in 1usize..=5, df in 0usize..=5, seed in 0u64..10_000) {
            let k = PrimeField::new(p).unwrap();
            let ry = fp_poly(k, Var::Y);
            let g = random_irreducible(&ry, dg, seed).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
            let f = ry.random_monic(df, &mut rng);
            prop_assert!(product_formula_check(&k, &g, &f, seed).unwrap());
        }

        #[test]
        fn irreducible_roots_form_one_full_orbit(p in prop::sample::select(vec![2u64, 3, 5, 7]), n in 1usize..=6, seed in 0u64..10_000) {
            let k = PrimeField::new(p).unwrap();
            let g = random_irreducible(&fp_poly(k, Var::X), n, seed).unwrap();
            let s = splitting_field(&k, &g, seed).unwrap();
            prop_assert_eq!(frobenius_orbits(&s).sizes(), vec![n]);
        }

        #[test]
        fn minimal_polynomials_are_irreducible_annihilators(ext in 0usize..10, seed in 0u64..10_000) {
            let k = small_extensions().swap_remove(ext);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = k.random_element(&mut rng);
            let m = minimal_polynomial(&k, &a);
            let rx = fp_poly(*k.base(), Var::X);
            prop_assert!(is_irreducible(k.base(), &m).unwrap());
            prop_assert!(rx.eval_lifted(&m, &k, &a).unwrap().is_zero());
            prop_assert_eq!(k.degree() as usize % m.degree().unwrap(), 0);
        }
    }
}
