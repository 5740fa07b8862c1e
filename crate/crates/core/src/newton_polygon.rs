//! Newton polygons of polynomials in `k[X][T]`, weighted initial parts and
//! the Eisenstein-Dumas irreducibility criterion over `k[[X]]`.
//!
//! Coefficients are polynomials in `X`; the order `ord_X` of a nonzero
//! coefficient is its lowest exponent.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{Rational, Rationals};
use crate::polynomial::{BiPoly, GcdDomain, PolyRing};
use crate::ring::Ring;

/// Support points `(j, ord_X c_j)` and the vertices of their lower hull.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub support: Vec<(usize, usize)>,
    pub vertices: Vec<(usize, usize)>,
}

impl NewtonPolygon {
    /// Consecutive vertex pairs.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), (usize, usize))> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// `true` when `(j, o)` lies on or above the hull.
    pub fn on_or_above(&self, (j, o): (usize, usize)) -> bool {
        let (j, o) = (j as i128, o as i128);
        self.vertices.windows(2).all(|w| {
            let ((x0, y0), (x1, y1)) = (w[0], w[1]);
            let (x0, y0, x1, y1) = (x0 as i128, y0 as i128, x1 as i128, y1 as i128);
            if j < x0 || j > x1 {
                return true;
            }
            // (o - y0)(x1 - x0) >= (y1 - y0)(j - x0)
            (o - y0) * (x1 - x0) >= (y1 - y0) * (j - x0)
        })
    }
}

fn support<R: Ring>(inner: &PolyRing<R>, h: &BiPoly<R::Elem>) -> Vec<(usize, usize)> {
    let base = inner.base();
    h.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j, c.coeffs().iter().position(|x| !base.is_zero(x)).expect("nonzero coefficient")))
        .collect()
}

fn cross(o: (usize, usize), a: (usize, usize), b: (usize, usize)) -> i128 {
    let (ox, oy) = (o.0 as i128, o.1 as i128);
    (a.0 as i128 - ox) * (b.1 as i128 - oy) - (a.1 as i128 - oy) * (b.0 as i128 - ox)
}

/// Lower convex hull of the support of `h` in the `(T-degree, X-order)` plane.
pub fn newton_polygon<R: Ring>(ring: &PolyRing<PolyRing<R>>, h: &BiPoly<R::Elem>) -> Result<NewtonPolygon> {
    ring.check_var(h)?;
    if h.is_zero() {
        return Err(Error::Undefined("Newton polygon of the zero polynomial"));
    }
    let support = support(ring.base(), h);
    // monotone chain; points are already sorted by j with distinct j
    let mut hull: Vec<(usize, usize)> = Vec::new();
    for &p in &support {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    Ok(NewtonPolygon { support, vertices: hull })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Irreducible,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Irreducible => "irreducible",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibilityVerdict {
    pub verdict: Verdict,
    pub reason: String,
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        self.verdict == Verdict::Irreducible
    }
}

fn require_monic_in_t<R: Ring>(ring: &PolyRing<PolyRing<R>>, h: &BiPoly<R::Elem>) -> Result<usize> {
    ring.check_var(h)?;
    match h.degree() {
        Some(n) if n >= 1 && ring.base().is_one(h.lead().unwrap()) => Ok(n),
        Some(n) if n >= 1 => Err(Error::NonMonicInput),
        _ => Err(Error::DegenerateInput("degree in T must be at least 1")),
    }
}

/// Irreducible when the polygon is one edge from `(0, m)` to `(n, 0)` with
/// `gcd(n, m) = 1`; Inconclusive otherwise.
pub fn dumas_irreducible<R: Ring>(ring: &PolyRing<PolyRing<R>>, h: &BiPoly<R::Elem>) -> Result<IrreducibilityVerdict> {
    let n = require_monic_in_t(ring, h)?;
    let poly = newton_polygon(ring, h)?;
    let inconclusive = |reason: String| Ok(IrreducibilityVerdict { verdict: Verdict::Inconclusive, reason });
    match poly.vertices.as_slice() {
        [(0, m), (j, 0)] if *j == n && *m >= 1 => {
            let g = n.gcd(m);
            if g == 1 {
                Ok(IrreducibilityVerdict {
                    verdict: Verdict::Irreducible,
                    reason: format!("single edge (0,{m})-({n},0), gcd({n},{m}) = 1"),
                })
            } else {
                inconclusive(format!("single edge (0,{m})-({n},0), gcd({n},{m}) = {g}"))
            }
        }
        [(0, m), (j, 0)] if *j == n => inconclusive(format!("edge (0,{m})-({n},0) has zero height")),
        vs => inconclusive(format!("polygon has {} edges with vertices {vs:?}", vs.len().saturating_sub(1))),
    }
}

/// Sum of the monomials `c X^i T^j` of `h` minimizing `a*i + b*j`.
pub fn weighted_initial_part<R: Ring>(
    ring: &PolyRing<PolyRing<R>>,
    h: &BiPoly<R::Elem>,
    a: u64,
    b: u64,
) -> Result<BiPoly<R::Elem>> {
    ring.check_var(h)?;
    if h.is_zero() {
        return Err(Error::Undefined("initial part of the zero polynomial"));
    }
    if a == 0 || b == 0 {
        return Err(Error::DegenerateInput("weights must be positive"));
    }
    let inner = ring.base();
    let base = inner.base();
    let weight = |i: usize, j: usize| a as u128 * i as u128 + b as u128 * j as u128;
    let min = h
        .coeffs()
        .iter()
        .enumerate()
        .flat_map(|(j, c)| {
            c.coeffs().iter().enumerate().filter(|(_, x)| !base.is_zero(x)).map(move |(i, _)| weight(i, j))
        })
        .min()
        .expect("nonzero polynomial");
    let coeffs = h
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            inner.from_coeffs(
                c.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, x)| if weight(i, j) == min { x.clone() } else { base.zero() })
                    .collect(),
            )
        })
        .collect();
    Ok(ring.from_coeffs(coeffs))
}

/// Outcome of [`prime_power_over_series`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesPrimePower<E> {
    /// `h = base^exponent` with `base` certified irreducible.
    Power {
        base: BiPoly<E>,
        exponent: usize,
        reason: String,
    },
    /// `h` has coprime factors with different multiplicities, so it is not a
    /// power of one irreducible over any extension of `Q(X)`.
    NotPrimePower(String),
    Inconclusive(String),
}

/// Over `Q[X][T]`: `s = h / gcd(h, dh/dT)`; returns `(s, e)` when `h = s^e`
/// exactly and `s` is linear in `T` or certified by the Dumas criterion.
pub fn prime_power_over_series(
    ring: &PolyRing<PolyRing<Rationals>>,
    h: &BiPoly<Rational>,
) -> Result<SeriesPrimePower<Rational>> {
    let n = require_monic_in_t(ring, h)?;
    let inner = ring.base();
    let g = ring.gcd(h, &ring.derivative(h));
    let lc = g.lead().expect("gcd with a nonzero h").clone();
    if lc.degree() != Some(0) {
        return Ok(SeriesPrimePower::Inconclusive("gcd(h, dh/dT) is not monic up to a constant".into()));
    }
    let g = ring.from_coeffs(
        g.coeffs().iter().map(|c| inner.exact_div(c, &lc).expect("division by a nonzero constant")).collect(),
    );
    let Some(s) = ring.exact_div(h, &g) else {
        return Ok(SeriesPrimePower::Inconclusive("h / gcd(h, dh/dT) is not exact".into()));
    };
    let ds = s.degree().expect("nonzero quotient");
    if n % ds != 0 || ring.pow(&s, (n / ds) as u64) != *h {
        return Ok(SeriesPrimePower::NotPrimePower("h is not a power of its squarefree part".into()));
    }
    let exponent = n / ds;
    if ds == 1 {
        return Ok(SeriesPrimePower::Power { base: s, exponent, reason: "base is linear in T".into() });
    }
    let verdict = dumas_irreducible(ring, &s)?;
    Ok(match verdict.verdict {
        Verdict::Irreducible => SeriesPrimePower::Power { base: s, exponent, reason: verdict.reason },
        Verdict::Inconclusive => {
            SeriesPrimePower::Inconclusive(format!("squarefree part not certified: {}", verdict.reason))
        }
    })
}
