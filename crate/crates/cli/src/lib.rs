//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the captured output, so the binary is a thin wrapper.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use kuores_core::campaign::{theorem_campaign, CampaignReport, TheoremId};
use kuores_core::expr_parse::{parse_expr, print_poly, PolyExpr};
use kuores_core::factor_ff::{factor_any, is_irreducible, prime_power_structure, Factorization};
use kuores_core::galois::{frobenius_orbits, splitting_field};
use kuores_core::newton_polygon::{
    dumas_irreducible, newton_polygon, prime_power_over_series, weighted_initial_part, SeriesPrimePower, Verdict,
};
use kuores_core::numeric::{PrimeField, Rational, Rationals};
use kuores_core::polynomial::{fp_poly, q_poly, qx_poly};
use kuores_core::resultant::{kuo_resultant, resultant_bareiss, resultant_subresultant};
use kuores_core::{BiPoly, Error, FieldSpec, Poly, PolyRing, Ring, Var};

#[derive(Parser, Debug)]
#[command(name = "kuores", version, about = "Composed resultants, factorization and irreducibility certificates")]
struct Cli {
    /// Coefficient domain: q, fp:<prime> or qx (coefficients in Q[X])
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: FieldSpec,
    /// Emit one JSON document instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// h(T) = (-1)^deg g * Res_Y(g, f - T) and what it says about g
    Kuo {
        #[arg(long)]
        g: String,
        #[arg(long)]
        f: String,
    },
    /// Res(A, B) in the single non-X variable of the inputs
    Resultant {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Complete factorization over F_p
    Factor {
        #[arg(long)]
        poly: String,
    },
    /// Irreducibility test (exact over F_p, certificate-based over q and qx)
    Irred {
        #[arg(long)]
        poly: String,
        /// Also certify through h = kuo(poly, f)
        #[arg(long)]
        f: Option<String>,
    },
    /// Newton polygon in the (T-degree, X-order) plane
    Newton {
        #[arg(long)]
        poly: String,
    },
    /// Monomials minimizing a*i + b*j for c X^i T^j
    InitialPart {
        #[arg(long)]
        poly: String,
        #[arg(long, value_parser = parse_weights)]
        weights: (u64, u64),
    },
    /// Splitting field, roots and Frobenius orbits over F_p
    Galois {
        #[arg(long)]
        poly: String,
    },
    /// Randomized verification campaign
    Verify {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long = "max-deg", default_value_t = 6)]
        max_deg: usize,
        /// Prime for the campaign; defaults to the prime of --field fp:<p>
        #[arg(long)]
        p: Option<u64>,
        /// Record wall time (makes the output run-dependent)
        #[arg(long)]
        timing: bool,
    },
    /// Reproduce the two worked examples end to end
    Examples,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse::<FieldSpec>().map_err(|e| e.to_string())
}

fn parse_weights(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once(',').ok_or("weights must look like a,b")?;
    let parse = |t: &str| t.trim().parse::<u64>().ok().filter(|&w| w > 0);
    match (parse(a), parse(b)) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err("weights must be positive integers".into()),
    }
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct PrimePowerDoc {
    base: String,
    exponent: usize,
}

#[derive(Serialize)]
struct Document {
    command: &'static str,
    field: String,
    inputs: BTreeMap<&'static str, String>,
    result: Value,
    verdict: Option<&'static str>,
    prime_power: Option<PrimePowerDoc>,
    report: Option<CampaignReport>,
}

struct Response {
    doc: Document,
    text: String,
    code: i32,
}

impl Response {
    fn new(command: &'static str, field: String) -> Self {
        Response {
            doc: Document {
                command,
                field,
                inputs: BTreeMap::new(),
                result: json!({}),
                verdict: None,
                prime_power: None,
                report: None,
            },
            text: String::new(),
            code: 0,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

enum CliError {
    Usage(String),
    Math(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    let mut stderr = String::new();
    match dispatch(&cli, &mut stderr) {
        Ok(resp) => {
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&resp.doc).expect("document serializes");
                s.push('\n');
                s
            } else {
                resp.text
            };
            Outcome { code: resp.code, stdout, stderr }
        }
        Err(CliError::Usage(msg)) => {
            writeln!(stderr, "error: {msg}").unwrap();
            Outcome { code: 2, stdout: String::new(), stderr }
        }
        Err(CliError::Math(e)) => {
            writeln!(stderr, "error: {e}").unwrap();
            Outcome { code: 2, stdout: String::new(), stderr }
        }
    }
}

fn dispatch(cli: &Cli, stderr: &mut String) -> CliResult<Response> {
    let field = cli.field;
    match &cli.command {
        Command::Kuo { g, f } => kuo(field, g, f, cli.seed),
        Command::Resultant { a, b } => resultant(field, a, b),
        Command::Factor { poly } => factor(field, poly, cli.seed),
        Command::Irred { poly, f } => irred(field, poly, f.as_deref()),
        Command::Newton { poly } => newton(field, poly),
        Command::InitialPart { poly, weights } => initial_part(field, poly, *weights),
        Command::Galois { poly } => galois(field, poly, cli.seed),
        Command::Verify { theorem, trials, max_deg, p, timing } => {
            let p = match (p, field) {
                (Some(p), _) => *p,
                (None, FieldSpec::Fp(k)) => k.modulus(),
                (None, _) => return Err(CliError::Usage("verify needs --p <prime> or --field fp:<p>".into())),
            };
            verify(*theorem, p, *max_deg, *trials, cli.seed, *timing, stderr)
        }
        Command::Examples => examples(),
    }
}

fn parse_input(name: &str, text: &str) -> CliResult<PolyExpr> {
    parse_expr(text).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn eval_input<R: Ring>(name: &str, expr: &PolyExpr, ring: &R) -> CliResult<R::Elem> {
    expr.eval(ring).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

/// The one variable other than `inner` used by the inputs, or `default`.
fn outer_var(exprs: &[&PolyExpr], inner: Option<Var>, default: Var) -> CliResult<Var> {
    let vars: BTreeSet<Var> = exprs.iter().flat_map(|e| e.variables()).filter(|v| Some(*v) != inner).collect();
    match vars.len() {
        0 => Ok(default),
        1 => Ok(*vars.iter().next().unwrap()),
        _ => {
            let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
            let allowed = if inner.is_some() { " besides X" } else { "" };
            Err(CliError::Usage(format!("expected one variable{allowed}, found {}", names.join(", "))))
        }
    }
}

fn inner_for(field: FieldSpec) -> Option<Var> {
    match field {
        FieldSpec::Qx => Some(Var::X),
        _ => None,
    }
}

fn series_doc(h_ring: &PolyRing<PolyRing<Rationals>>, s: &SeriesPrimePower<Rational>) -> Option<PrimePowerDoc> {
    match s {
        SeriesPrimePower::Power { base, exponent, .. } => {
            Some(PrimePowerDoc { base: print_poly(h_ring, base), exponent: *exponent })
        }
        _ => None,
    }
}

fn describe_prime_power(resp: &mut Response) {
    match &resp.doc.prime_power {
        Some(pp) => {
            let line = format!("prime power: base {}, exponent {}", pp.base, pp.exponent);
            resp.line(line)
        }
        None => resp.line("prime power: none"),
    }
}

/// Verdict on `g` read off from the structure of `h` over `Q[X][T]`.
fn series_verdict(s: &SeriesPrimePower<Rational>) -> (&'static str, String) {
    match s {
        SeriesPrimePower::Power { exponent: 1, reason, .. } => {
            ("irreducible", format!("h is irreducible ({reason}), hence so is g"))
        }
        SeriesPrimePower::Power { exponent, .. } => {
            ("inconclusive", format!("h is a power with exponent {exponent}, which does not decide g"))
        }
        SeriesPrimePower::NotPrimePower(reason) => {
            ("reducible", format!("{reason}; h is not a power of an irreducible, so g is reducible"))
        }
        SeriesPrimePower::Inconclusive(reason) => ("inconclusive", reason.clone()),
    }
}

fn embed_q(h: &Poly<Rational>) -> BiPoly<Rational> {
    let rt = qx_poly(h.var());
    rt.from_coeffs(h.coeffs().iter().map(|c| rt.base().constant(c.clone())).collect())
}

fn kuo(field: FieldSpec, g_text: &str, f_text: &str, seed: u64) -> CliResult<Response> {
    let (ge, fe) = (parse_input("g", g_text)?, parse_input("f", f_text)?);
    let v = outer_var(&[&ge, &fe], inner_for(field), Var::Y)?;
    let mut resp = Response::new("kuo", field.to_string());
    resp.doc.inputs.insert("g", g_text.to_string());
    resp.doc.inputs.insert("f", f_text.to_string());
    let (h_text, negated, g_degree, interp, verdict, reason) = match field {
        FieldSpec::Q | FieldSpec::Qx => {
            let (h, negated, g_degree, interp) = if field == FieldSpec::Q {
                let ry = q_poly(v);
                let (g, f) = (eval_input("g", &ge, &ry)?, eval_input("f", &fe, &ry)?);
                let k = kuo_resultant(&Rationals, &g, &f)?;
                (embed_q(&k.h), k.negated, k.g_degree, k.interpolation_checked)
            } else {
                let ry = qx_poly(v);
                let (g, f) = (eval_input("g", &ge, &ry)?, eval_input("f", &fe, &ry)?);
                let k = kuo_resultant(ry.base(), &g, &f)?;
                (k.h, k.negated, k.g_degree, k.interpolation_checked)
            };
            let rt = qx_poly(Var::T);
            let s = prime_power_over_series(&rt, &h)?;
            resp.doc.prime_power = series_doc(&rt, &s);
            let (verdict, reason) = series_verdict(&s);
            (print_poly(&rt, &h), negated, g_degree, interp, verdict, reason)
        }
        FieldSpec::Fp(k) => {
            let ry = fp_poly(k, v);
            let (g, f) = (eval_input("g", &ge, &ry)?, eval_input("f", &fe, &ry)?);
            let res = kuo_resultant(&k, &g, &f)?;
            let rt = fp_poly(k, Var::T);
            resp.doc.prime_power = prime_power_structure(&k, &res.h, seed)?
                .map(|pp| PrimePowerDoc { base: print_poly(&rt, &pp.base), exponent: pp.exponent });
            let (verdict, reason) = if is_irreducible(&k, &g)? {
                ("irreducible", "g passes the irreducibility test over F_p".to_string())
            } else {
                ("reducible", "g fails the irreducibility test over F_p".to_string())
            };
            (print_poly(&rt, &res.h), res.negated, res.g_degree, res.interpolation_checked, verdict, reason)
        }
    };
    resp.line(format!("h = {h_text}"));
    describe_prime_power(&mut resp);
    resp.line(format!("g: {verdict} ({reason})"));
    resp.doc.verdict = Some(verdict);
    resp.doc.result = json!({
        "h": h_text,
        "g_degree": g_degree,
        "negated": negated,
        "interpolation_checked": interp,
        "reason": reason,
    });
    Ok(resp)
}

fn check_routes<R: Ring>(ring: &PolyRing<R>, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> CliResult<R::Elem> {
    let bareiss = resultant_bareiss(ring, a, b)?;
    let prs = resultant_subresultant(ring, a, b)?;
    if bareiss != prs {
        return Err(Error::OracleMismatch(format!("Bareiss {bareiss:?} != subresultant {prs:?}")).into());
    }
    Ok(bareiss)
}

fn resultant(field: FieldSpec, a_text: &str, b_text: &str) -> CliResult<Response> {
    let (ae, be) = (parse_input("a", a_text)?, parse_input("b", b_text)?);
    let v = outer_var(&[&ae, &be], inner_for(field), Var::Y)?;
    let value = match field {
        FieldSpec::Q => {
            let r = q_poly(v);
            let res = check_routes(&r, &eval_input("a", &ae, &r)?, &eval_input("b", &be, &r)?)?;
            print_poly(&Rationals, &res)
        }
        FieldSpec::Fp(k) => {
            let r = fp_poly(k, v);
            let res = check_routes(&r, &eval_input("a", &ae, &r)?, &eval_input("b", &be, &r)?)?;
            print_poly(&k, &res)
        }
        FieldSpec::Qx => {
            let r = qx_poly(v);
            let res = check_routes(&r, &eval_input("a", &ae, &r)?, &eval_input("b", &be, &r)?)?;
            print_poly(r.base(), &res)
        }
    };
    let mut resp = Response::new("resultant", field.to_string());
    resp.doc.inputs.insert("a", a_text.to_string());
    resp.doc.inputs.insert("b", b_text.to_string());
    resp.line(format!("Res_{v}(A, B) = {value}"));
    resp.doc.result = json!({ "variable": v.to_string(), "resultant": value });
    Ok(resp)
}

fn require_fp(field: FieldSpec, command: &str) -> CliResult<PrimeField> {
    match field {
        FieldSpec::Fp(k) => Ok(k),
        _ => Err(CliError::Usage(format!("{command} requires --field fp:<p>"))),
    }
}

fn format_factorization(k: &PrimeField, ring: &PolyRing<PrimeField>, fz: &Factorization<u64>) -> String {
    let mut out = String::new();
    if fz.unit != 1 || fz.factors.is_empty() {
        out.push_str(&print_poly(k, &fz.unit));
    }
    for (f, m) in &fz.factors {
        write!(out, "({})", print_poly(ring, f)).unwrap();
        if *m > 1 {
            write!(out, "^{m}").unwrap();
        }
    }
    out
}

fn factor(field: FieldSpec, text: &str, seed: u64) -> CliResult<Response> {
    let k = require_fp(field, "factor")?;
    let e = parse_input("poly", text)?;
    let ring = fp_poly(k, outer_var(&[&e], None, Var::X)?);
    let a = eval_input("poly", &e, &ring)?;
    let fz = factor_any(&k, &a, seed)?;
    let shown = format_factorization(&k, &ring, &fz);
    let mut resp = Response::new("factor", field.to_string());
    resp.doc.inputs.insert("poly", text.to_string());
    resp.line(&shown);
    if a.degree().is_some_and(|d| d >= 1) {
        resp.doc.verdict = Some(if fz.is_irreducible() { "irreducible" } else { "reducible" });
    }
    resp.doc.result = json!({
        "factorization": shown,
        "unit": print_poly(&k, &fz.unit),
        "factors": fz.factors.iter().map(|(f, m)| json!({
            "factor": print_poly(&ring, f),
            "multiplicity": m,
        })).collect::<Vec<_>>(),
    });
    Ok(resp)
}

fn irred(field: FieldSpec, text: &str, f_text: Option<&str>) -> CliResult<Response> {
    let e = parse_input("poly", text)?;
    let fe = f_text.map(|t| parse_input("f", t)).transpose()?;
    let mut exprs = vec![&e];
    exprs.extend(fe.as_ref());
    let mut resp = Response::new("irred", field.to_string());
    resp.doc.inputs.insert("poly", text.to_string());
    if let Some(t) = f_text {
        resp.doc.inputs.insert("f", t.to_string());
    }
    let mut result = serde_json::Map::new();
    let (verdict, reason) = match field {
        FieldSpec::Fp(k) => {
            let ring = fp_poly(k, outer_var(&exprs, None, Var::Y)?);
            let a = eval_input("poly", &e, &ring)?;
            if a.degree().unwrap_or(0) == 0 {
                return Err(Error::DegenerateInput("polynomial must have degree at least 1").into());
            }
            let monic = ring.make_monic(&a);
            if let Some(fe) = &fe {
                let f = eval_input("f", fe, &ring)?;
                let h = kuo_resultant(&k, &monic, &f)?.h;
                let rt = fp_poly(k, Var::T);
                result.insert("h".into(), json!(print_poly(&rt, &h)));
                result.insert("h_irreducible".into(), json!(is_irreducible(&k, &h)?));
            }
            if is_irreducible(&k, &monic)? {
                ("irreducible", "Rabin test over F_p".to_string())
            } else {
                ("reducible", "Rabin test over F_p".to_string())
            }
        }
        FieldSpec::Q | FieldSpec::Qx => {
            let v = outer_var(&exprs, Some(Var::X), Var::Y)?;
            if field == FieldSpec::Q && v == Var::X {
                return Err(CliError::Usage("over q use a variable other than X, or --field qx".into()));
            }
            let ring = qx_poly(v);
            let g = eval_input("poly", &e, &ring)?;
            let direct = dumas_irreducible(&ring, &g)?;
            result.insert("dumas".into(), json!(direct));
            let mut outcome = match direct.verdict {
                Verdict::Irreducible => ("irreducible", format!("Dumas criterion: {}", direct.reason)),
                Verdict::Inconclusive => ("inconclusive", format!("Dumas criterion: {}", direct.reason)),
            };
            if let (Some(fe), "inconclusive") = (&fe, outcome.0) {
                let f = eval_input("f", fe, &ring)?;
                let h = kuo_resultant(ring.base(), &g, &f)?.h;
                let rt = qx_poly(Var::T);
                result.insert("h".into(), json!(print_poly(&rt, &h)));
                let s = prime_power_over_series(&rt, &h)?;
                resp.doc.prime_power = series_doc(&rt, &s);
                let (verdict, reason) = series_verdict(&s);
                outcome = (verdict, reason);
            }
            outcome
        }
    };
    result.insert("reason".into(), json!(reason));
    resp.line(format!("{verdict} ({reason})"));
    resp.doc.verdict = Some(verdict);
    resp.doc.result = Value::Object(result);
    resp.code = if verdict == "irreducible" { 0 } else { 1 };
    Ok(resp)
}

fn points(ps: &[(usize, usize)]) -> String {
    ps.iter().map(|(j, o)| format!("({j},{o})")).collect::<Vec<_>>().join(" ")
}

fn newton_on<R: Ring>(resp: &mut Response, ring: &PolyRing<PolyRing<R>>, h: &BiPoly<R::Elem>) -> CliResult<()> {
    let poly = newton_polygon(ring, h)?;
    resp.line(format!("support: {}", points(&poly.support)));
    resp.line(format!("vertices: {}", points(&poly.vertices)));
    let dumas = match dumas_irreducible(ring, h) {
        Ok(v) => Some(v),
        Err(Error::NonMonicInput) | Err(Error::DegenerateInput(_)) => None,
        Err(e) => return Err(e.into()),
    };
    match &dumas {
        Some(v) => resp.line(format!("dumas: {} ({})", v.verdict, v.reason)),
        None => resp.line(format!("dumas: not applicable (not monic of positive degree in {})", ring.var())),
    }
    resp.doc.verdict = dumas.as_ref().map(|v| match v.verdict {
        Verdict::Irreducible => "irreducible",
        Verdict::Inconclusive => "inconclusive",
    });
    resp.doc.result = json!({
        "variable": ring.var().to_string(),
        "support": poly.support,
        "vertices": poly.vertices,
        "dumas": dumas,
    });
    Ok(())
}

fn newton(field: FieldSpec, text: &str) -> CliResult<Response> {
    let e = parse_input("poly", text)?;
    let v = outer_var(&[&e], Some(Var::X), Var::T)?;
    let mut resp = Response::new("newton", field.to_string());
    resp.doc.inputs.insert("poly", text.to_string());
    match field {
        FieldSpec::Fp(k) => {
            let ring = PolyRing::new(fp_poly(k, Var::X), v);
            let h = eval_input("poly", &e, &ring)?;
            newton_on(&mut resp, &ring, &h)?;
        }
        FieldSpec::Q | FieldSpec::Qx => {
            let ring = qx_poly(v);
            let h = eval_input("poly", &e, &ring)?;
            newton_on(&mut resp, &ring, &h)?;
        }
    }
    Ok(resp)
}

fn initial_part(field: FieldSpec, text: &str, (a, b): (u64, u64)) -> CliResult<Response> {
    let e = parse_input("poly", text)?;
    let v = outer_var(&[&e], Some(Var::X), Var::T)?;
    let shown = match field {
        FieldSpec::Fp(k) => {
            let ring = PolyRing::new(fp_poly(k, Var::X), v);
            let h = eval_input("poly", &e, &ring)?;
            print_poly(&ring, &weighted_initial_part(&ring, &h, a, b)?)
        }
        FieldSpec::Q | FieldSpec::Qx => {
            let ring = qx_poly(v);
            let h = eval_input("poly", &e, &ring)?;
            print_poly(&ring, &weighted_initial_part(&ring, &h, a, b)?)
        }
    };
    let mut resp = Response::new("initial-part", field.to_string());
    resp.doc.inputs.insert("poly", text.to_string());
    resp.doc.inputs.insert("weights", format!("{a},{b}"));
    resp.line(format!("initial part: {shown}"));
    resp.doc.result = json!({ "initial_part": shown });
    Ok(resp)
}

fn galois(field: FieldSpec, text: &str, seed: u64) -> CliResult<Response> {
    let k = require_fp(field, "galois")?;
    let e = parse_input("poly", text)?;
    let ring = fp_poly(k, outer_var(&[&e], None, Var::X)?);
    let f = eval_input("poly", &e, &ring)?;
    let s = splitting_field(&k, &f, seed)?;
    let orbits = frobenius_orbits(&s);
    let show = |x: &Poly<u64>| print_poly(&s.ext, x);
    let modulus = print_poly(&fp_poly(k, Var::Z), s.ext.modulus());
    let pp = prime_power_structure(&k, &f, seed)?;
    let transitive = orbits.len() == 1;
    if transitive != pp.is_some() {
        return Err(Error::TheoremViolation(format!(
            "{text}: single orbit = {transitive}, prime power = {}",
            pp.is_some()
        ))
        .into());
    }
    let mut resp = Response::new("galois", field.to_string());
    resp.doc.inputs.insert("poly", text.to_string());
    resp.doc.prime_power = pp.map(|pp| PrimePowerDoc { base: print_poly(&ring, &pp.base), exponent: pp.exponent });
    resp.line(format!("splitting field: F_{}^{} = F_{}[Z]/({modulus})", k.modulus(), s.degree(), k.modulus()));
    let roots: Vec<String> =
        s.roots.iter().map(|(r, m)| if *m > 1 { format!("{} (x{m})", show(r)) } else { show(r) }).collect();
    resp.line(format!("roots: {}", roots.join(", ")));
    let orbit_text: Vec<String> =
        orbits.orbits.iter().map(|o| format!("[{}]", o.iter().map(show).collect::<Vec<_>>().join(" -> "))).collect();
    resp.line(format!("frobenius orbits: {}", orbit_text.join(" ")));
    resp.line(format!("transitive: {}", if transitive { "yes" } else { "no" }));
    describe_prime_power(&mut resp);
    resp.doc.result = json!({
        "extension_degree": s.degree(),
        "modulus": modulus,
        "roots": s.roots.iter().map(|(r, m)| json!({ "root": show(r), "multiplicity": m })).collect::<Vec<_>>(),
        "orbits": orbits.orbits.iter().map(|o| o.iter().map(show).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "transitive": transitive,
    });
    Ok(resp)
}

fn verify(
    theorem: TheoremId,
    p: u64,
    max_deg: usize,
    trials: u64,
    seed: u64,
    timing: bool,
    stderr: &mut String,
) -> CliResult<Response> {
    let start = Instant::now();
    let mut report = theorem_campaign(theorem, p, max_deg, trials, seed)?;
    if timing {
        let ms = start.elapsed().as_millis() as u64;
        report.wall_time_ms = Some(ms);
        writeln!(stderr, "wall time: {ms} ms").unwrap();
    }
    let mut resp = Response::new("verify", report.field.clone());
    resp.doc.inputs.insert("theorem", theorem.to_string());
    resp.doc.inputs.insert("p", p.to_string());
    resp.doc.inputs.insert("max_deg", max_deg.to_string());
    resp.doc.inputs.insert("trials", trials.to_string());
    resp.doc.inputs.insert("seed", seed.to_string());
    resp.line(format!("theorem: {theorem}"));
    resp.line(format!("field: {}", report.field));
    resp.line(format!("trials: {trials}, max degree: {max_deg}, seed: {seed}"));
    resp.line(format!("pass: {}, fail: {}", report.pass, report.fail));
    match &report.counterexample {
        None => resp.line("counterexample: none"),
        Some(c) => {
            resp.line(format!("counterexample: trial {} (seed {}): {}", c.trial, c.seed, c.detail));
            for (k, v) in &c.inputs {
                resp.line(format!("  {k} = {v}"));
            }
        }
    }
    resp.code = if report.fail == 0 { 0 } else { 1 };
    resp.doc.result = json!({ "pass": report.pass, "fail": report.fail });
    resp.doc.report = Some(report);
    Ok(resp)
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    expected: String,
    actual: String,
    ok: bool,
}

fn example_checks() -> CliResult<Vec<Check>> {
    let ry = qx_poly(Var::Y);
    let rt = qx_poly(Var::T);
    let parse = |text: &str| kuores_core::expr_parse::parse_poly(text, &ry).map_err(Error::from);
    let f = parse("Y^2 - X^3")?;
    let mut checks = Vec::new();
    let mut check = |name, expected: &str, actual: String| {
        let ok = expected == actual;
        checks.push(Check { name, expected: expected.to_string(), actual, ok });
    };

    let g1 = parse("(Y^2 - X^3)^2 - X^7")?;
    let h1 = kuo_resultant(ry.base(), &g1, &f)?.h;
    check("example 1: h", "T^4 - 2*X^7*T^2 + X^14", print_poly(&rt, &h1));
    let (base, exponent) = match prime_power_over_series(&rt, &h1)? {
        SeriesPrimePower::Power { base, exponent, .. } => (print_poly(&rt, &base), exponent.to_string()),
        other => (format!("{other:?}"), "-".into()),
    };
    check("example 1: prime power base", "T^2 - X^7", base);
    check("example 1: prime power exponent", "2", exponent);
    let b1 = kuores_core::expr_parse::parse_poly("T^2 - X^7", &rt).map_err(Error::from)?;
    check("example 1: base irreducible", "irreducible", dumas_irreducible(&rt, &b1)?.verdict.to_string());

    let g2 = parse("(Y^2 - X^3)^2 - X^5*Y")?;
    let h2 = kuo_resultant(ry.base(), &g2, &f)?.h;
    check("example 2: h", "T^4 - X^10*T - X^13", print_poly(&rt, &h2));
    check(
        "example 2: initial part for weights (4,13)",
        "T^4 - X^13",
        print_poly(&rt, &weighted_initial_part(&rt, &h2, 4, 13)?),
    );
    check("example 2: h irreducible", "irreducible", dumas_irreducible(&rt, &h2)?.verdict.to_string());
    let (verdict, _) = series_verdict(&prime_power_over_series(&rt, &h2)?);
    check("example 2: g irreducible", "irreducible", verdict.to_string());
    Ok(checks)
}

fn examples() -> CliResult<Response> {
    let checks = example_checks()?;
    let all = checks.iter().all(|c| c.ok);
    let mut resp = Response::new("examples", "qx".into());
    for c in &checks {
        let status = if c.ok { "ok" } else { "MISMATCH" };
        resp.line(format!("{}: {} [{status}]", c.name, c.actual));
        if !c.ok {
            resp.line(format!("  expected {}", c.expected));
        }
    }
    resp.line(if all { "PASS" } else { "FAIL" });
    resp.code = if all { 0 } else { 1 };
    resp.doc.result = json!({ "checks": checks, "pass": all });
    Ok(resp)
}
