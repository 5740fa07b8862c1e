//! Randomized verification campaigns over `F_p`.
//!
//! Trial `i` draws everything from a generator seeded with `seed + i`, so a
//! report depends only on its parameters, whatever the thread count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr_parse::print_poly;
use crate::factor_ff::{is_irreducible, prime_power_structure, random_irreducible_with_rng};
use crate::galois::{product_formula_check, transitivity_check};
use crate::numeric::PrimeField;
use crate::polynomial::{fp_poly, Poly, PolyRing};
use crate::resultant::kuo_resultant;
use crate::ring::{Ring, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// `g` irreducible implies `h` is a power of an irreducible.
    Main,
    /// `g` with two or more distinct factors gives a reducible `h`.
    Converse,
    /// Single Frobenius orbit iff power of one irreducible.
    Transitivity,
    /// `h = prod (T - f(y_i))` over the roots of `g`.
    ProductFormula,
}

impl TheoremId {
    pub const ALL: [TheoremId; 4] =
        [TheoremId::Main, TheoremId::Converse, TheoremId::Transitivity, TheoremId::ProductFormula];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Main => "main",
            TheoremId::Converse => "converse",
            TheoremId::Transitivity => "transitivity",
            TheoremId::ProductFormula => "product-formula",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown theorem {s:?}: expected main, converse, transitivity or product-formula"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: u64,
    pub seed: u64,
    pub inputs: BTreeMap<String, String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub theorem: TheoremId,
    pub field: String,
    pub max_deg: usize,
    pub trials: u64,
    pub seed: u64,
    pub pass: u64,
    pub fail: u64,
    pub counterexample: Option<Counterexample>,
    /// Filled in only when timing is requested, so reports stay reproducible.
    pub wall_time_ms: Option<u64>,
}

struct Trial {
    inputs: BTreeMap<String, String>,
    failure: Option<String>,
}

fn random_monic<G: Rng>(ring: &PolyRing<PrimeField>, max_deg: usize, rng: &mut G) -> Poly<u64> {
    let d = rng.gen_range(1..=max_deg);
    ring.random_monic(d, rng)
}

/// Product of 2 or 3 distinct monic irreducibles of total degree at most `max_deg`.
fn random_composite<G: Rng>(
    ring: &PolyRing<PrimeField>,
    max_deg: usize,
    rng: &mut G,
) -> Result<(Poly<u64>, Vec<Poly<u64>>)> {
    loop {
        let k = if max_deg >= 3 { rng.gen_range(2..=3) } else { 2 };
        let mut budget = max_deg;
        let mut parts: Vec<Poly<u64>> = Vec::with_capacity(k);
        for i in 0..k {
            let reserve = k - i - 1;
            let d = rng.gen_range(1..=budget - reserve);
            budget -= d;
            parts.push(random_irreducible_with_rng(ring, d, rng)?);
        }
        let mut sorted = parts.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() == k {
            let g = parts.iter().fold(ring.one(), |acc, q| ring.mul(&acc, q));
            return Ok((g, parts));
        }
    }
}

fn run_trial(theorem: TheoremId, field: &PrimeField, max_deg: usize, seed: u64) -> Result<Trial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ry = fp_poly(*field, Var::Y);
    let rt = fp_poly(*field, Var::T);
    let show = |r: &PolyRing<PrimeField>, a: &Poly<u64>| print_poly(r, a);
    let mut inputs = BTreeMap::new();
    let failure = match theorem {
        TheoremId::Main => {
            let d = rng.gen_range(1..=max_deg);
            let g = random_irreducible_with_rng(&ry, d, &mut rng)?;
            let f = random_monic(&ry, max_deg, &mut rng);
            inputs.insert("g".into(), show(&ry, &g));
            inputs.insert("f".into(), show(&ry, &f));
            let h = kuo_resultant(field, &g, &f)?.h;
            inputs.insert("h".into(), show(&rt, &h));
            match prime_power_structure(field, &h, seed)? {
                Some(_) => None,
                None => Some("h has two or more distinct irreducible factors".to_string()),
            }
        }
        TheoremId::Converse => {
            let (g, parts) = random_composite(&ry, max_deg, &mut rng)?;
            let f = random_monic(&ry, max_deg, &mut rng);
            inputs.insert("g".into(), show(&ry, &g));
            inputs.insert("g_factors".into(), parts.iter().map(|q| format!("({})", show(&ry, q))).collect::<String>());
            inputs.insert("f".into(), show(&ry, &f));
            let h = kuo_resultant(field, &g, &f)?.h;
            inputs.insert("h".into(), show(&rt, &h));
            if is_irreducible(field, &h)? {
                Some("h is irreducible although g is not".to_string())
            } else {
                None
            }
        }
        TheoremId::Transitivity => {
            let rx = fp_poly(*field, Var::X);
            let f = random_monic(&rx, max_deg, &mut rng);
            inputs.insert("f".into(), show(&rx, &f));
            match transitivity_check(field, &f, seed) {
                Ok(_) => None,
                Err(Error::TheoremViolation(msg)) => Some(msg),
                Err(e) => return Err(e),
            }
        }
        TheoremId::ProductFormula => {
            let d = rng.gen_range(1..=max_deg);
            let g = random_irreducible_with_rng(&ry, d, &mut rng)?;
            let f = random_monic(&ry, max_deg, &mut rng);
            inputs.insert("g".into(), show(&ry, &g));
            inputs.insert("f".into(), show(&ry, &f));
            if product_formula_check(field, &g, &f, seed)? {
                None
            } else {
                Some("resultant differs from the product over the roots of g".to_string())
            }
        }
    };
    Ok(Trial { inputs, failure })
}

/// Runs `trials` independent trials in parallel. Errors inside a trial are
/// counted as failures.
pub fn theorem_campaign(theorem: TheoremId, p: u64, max_deg: usize, trials: u64, seed: u64) -> Result<CampaignReport> {
    let field = PrimeField::new(p)?;
    if trials == 0 {
        return Err(Error::DegenerateInput("trials must be at least 1"));
    }
    let min_deg = if theorem == TheoremId::Converse { 2 } else { 1 };
    if max_deg < min_deg {
        return Err(Error::DegenerateInput("max degree too small for this theorem"));
    }
    let outcomes: Vec<(u64, Trial)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_add(i);
            let trial = run_trial(theorem, &field, max_deg, s)
                .unwrap_or_else(|e| Trial { inputs: BTreeMap::new(), failure: Some(format!("error: {e}")) });
            (i, trial)
        })
        .collect();
    let fail = outcomes.iter().filter(|(_, t)| t.failure.is_some()).count() as u64;
    let counterexample = outcomes.into_iter().find(|(_, t)| t.failure.is_some()).map(|(i, t)| Counterexample {
        trial: i,
        seed: seed.wrapping_add(i),
        inputs: t.inputs,
        detail: t.failure.unwrap(),
    });
    Ok(CampaignReport {
        theorem,
        field: format!("fp:{p}"),
        max_deg,
        trials,
        seed,
        pass: trials - fail,
        fail,
        counterexample,
        wall_time_ms: None,
    })
}
