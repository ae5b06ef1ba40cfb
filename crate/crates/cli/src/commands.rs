//! Dispatch from parsed commands to library calls.

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use ore_core::addpoly::{
    classify_additive, is_additive_on, linearize, minimal_annihilator, solve_p_polynomial, subgroup_to_additive,
    Classification, PPolynomial, RootSet,
};
use ore_core::fields::{FieldKind, Subfield};
use ore_core::funcfield::{frob_decompose, kphi_decompose, places_up_to, BasisIndex};
use ore_core::galois_as::{
    as_irreducible, as_shift_reduce, hilbert90_additive, p_closed_counterexample, root_from_prime_factor, trace,
    CyclicExtension,
};
use ore_core::skew::{
    gcrd, lclm, left_divmod, right_divmod, right_ore_witness, OreWitness, RightDivision, SkewPolynomial,
};
use ore_core::syntax::{
    parse_descriptor, parse_element, parse_ordinary, parse_ppolynomial, parse_series_ppolynomial, parse_skew,
};
use ore_core::valued::{
    as_root_extension, extremal_search, hensel_as_solve, image_decompose, LaurentSeries, SearchMode, Window,
    DEFAULT_BUDGET,
};
use ore_core::{Error, Field, FieldElement};

use crate::args::{AddpolyVerb, AsVerb, FfVerb, Mode, Noun, Side, SkewVerb, ValVerb};
use crate::report::Report;

/// A malformed command line: exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

type Outcome = Result<Report, Usage>;

fn operand<T>(what: &str, src: &str, r: ore_core::Result<T>) -> Result<T, Usage> {
    r.map_err(|e| match e {
        Error::Parse { position, message } => {
            Usage(format!("invalid {what} '{src}' at position {position}: {message}"))
        }
        other => Usage(format!("invalid {what} '{src}': {other}")),
    })
}

pub fn descriptor(src: &str) -> Result<Field, Usage> {
    operand("field descriptor", src, parse_descriptor(src))
}

fn domain(r: ore_core::Result<Report>) -> Report {
    r.unwrap_or_else(|e| Report::error(&e))
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

pub fn run(noun: &Noun, seed: u64) -> Outcome {
    let field = descriptor(noun.field())?;
    match noun {
        Noun::Skew(v) => skew(v, &field, seed),
        Noun::Addpoly(v) => addpoly(v, &field),
        Noun::As(v) => artin_schreier(v, &field),
        Noun::Ff(v) => function_field(v, &field),
        Noun::Val(v) => valued(v, &field),
    }
}

fn skew_operand(src: &str, field: &Field) -> Result<SkewPolynomial, Usage> {
    operand("skew polynomial", src, parse_skew(src, field))
}

fn divmod_report(q: &SkewPolynomial, r: &SkewPolynomial) -> Report {
    Report::ok().with("q", q.to_string()).with("r", r.to_string()).lines(vec![format!("q = {q}, r = {r}")])
}

fn skew(verb: &SkewVerb, field: &Field, seed: u64) -> Outcome {
    Ok(match verb {
        SkewVerb::Divmod { side, dividend, divisor, .. } => {
            let a = skew_operand(dividend, field)?;
            let b = skew_operand(divisor, field)?;
            domain(match side {
                Side::Left => left_divmod(&a, &b).map(|(q, r)| divmod_report(&q, &r)),
                Side::Right => right_divmod(&a, &b).map(|d| match d {
                    RightDivision::Quotient { q, r } => divmod_report(&q, &r),
                    RightDivision::PthRootObstruction(x) => {
                        let m = b.degree().finite().unwrap_or(0);
                        let root = if m == 1 { "p-th".to_string() } else { format!("p^{m}-th") };
                        Report::outcome()
                            .with("obstruction", x.to_string())
                            .lines(vec![format!("obstruction: {x} has no {root} root")])
                    }
                }),
            })
        }
        SkewVerb::Mul { a, b, .. } => {
            let (a, b) = (skew_operand(a, field)?, skew_operand(b, field)?);
            domain(a.mul(&b).map(|c| Report::ok().with("product", c.to_string())))
        }
        SkewVerb::Gcrd { a, b, .. } => {
            let (a, b) = (skew_operand(a, field)?, skew_operand(b, field)?);
            domain(gcrd(&a, &b).map(|g| Report::ok().with("gcrd", g.to_string())))
        }
        SkewVerb::Lclm { a, b, .. } => {
            let (a, b) = (skew_operand(a, field)?, skew_operand(b, field)?);
            domain(lclm(&a, &b).map(|m| Report::ok().with("lclm", m.to_string())))
        }
        SkewVerb::Ore { bound, c, .. } => {
            let c = operand("element", c, parse_element(c, field))?;
            domain(right_ore_witness(&c, *bound).map(|w| match w {
                OreWitness::DisjointUpToBound { bound, candidates } => {
                    Report::ok().with("witness", "disjoint").with("bound", bound).with("candidates", candidates)
                }
                OreWitness::CommonElement { u, v } => {
                    Report::ok().with("witness", "common").with("u", u.to_string()).with("v", v.to_string())
                }
            }))
        }
        SkewVerb::Demo { degree, coeff_degree, .. } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut random = |deg: usize| loop {
                let coeffs = (0..=deg).map(|_| FieldElement::random(field, &mut rng, *coeff_degree)).collect();
                let s = SkewPolynomial::new(field, coeffs).expect("same field");
                if s.degree() == deg {
                    return s;
                }
            };
            let a = random(*degree);
            let b = random(degree.div_ceil(2));
            domain(left_divmod(&a, &b).and_then(|(q, r)| {
                let holds = q.mul(&b)?.add(&r)? == a;
                Ok(Report::ok()
                    .with("seed", seed)
                    .with("a", a.to_string())
                    .with("b", b.to_string())
                    .with("q", q.to_string())
                    .with("r", r.to_string())
                    .with("identity_holds", holds))
            }))
        }
    })
}

fn roots_report(report: Report, roots: &RootSet) -> Report {
    let count = roots.len().to_string();
    match roots {
        RootSet::Affine { shift, basis } => {
            report.with("count", count).with("roots", json!({ "shift": shift.to_string(), "basis": strings(basis) }))
        }
        _ => report.with("count", count).with("roots", strings(&roots.elements())),
    }
}

fn addpoly(verb: &AddpolyVerb, field: &Field) -> Outcome {
    Ok(match verb {
        AddpolyVerb::Classify { poly, .. } => {
            let f = operand("polynomial", poly, parse_ordinary(poly, field))?;
            match classify_additive(&f) {
                Classification::Additive(a) => Report::ok()
                    .with("additive", true)
                    .with("polynomial", a.to_string())
                    .with("coefficients", strings(a.coeffs())),
                Classification::NotAdditive { exponent } => {
                    Report::ok().with("additive", false).with("exponent", exponent)
                }
            }
        }
        AddpolyVerb::Check { over, poly, .. } => {
            let f = operand("polynomial", poly, parse_ordinary(poly, field))?;
            let over = match over {
                Some(d) => descriptor(d)?,
                None => field.clone(),
            };
            domain(FieldElement::enumerate(&over).and_then(|it| {
                let elems: Vec<FieldElement> = it.collect();
                Ok(Report::ok().with("over", over.to_string()).with("additive_on", is_additive_on(&f, &elems)?))
            }))
        }
        AddpolyVerb::Solve { over, poly, .. } => {
            let f = operand("p-polynomial", poly, parse_ppolynomial(poly, field))?;
            let over = match over {
                Some(d) => descriptor(d)?,
                None => field.clone(),
            };
            domain(solve_p_polynomial(&f, &over).map(|rs| roots_report(Report::ok(), &rs)))
        }
        AddpolyVerb::Linearize { poly, .. } => {
            let f = operand("additive polynomial", poly, ore_core::syntax::parse_additive(poly, field))?;
            domain(linearize(&f, field).map(|m| {
                let n = field.degree().unwrap_or(1);
                let columns: Vec<Value> = (0..n).map(|j| json!(m.matrix().column(j))).collect();
                Report::ok().with("columns", columns)
            }))
        }
        AddpolyVerb::Subgroup { elements, .. } => {
            let w = elements
                .iter()
                .map(|e| operand("element", e, parse_element(e, field)))
                .collect::<Result<Vec<_>, _>>()?;
            domain(subgroup_to_additive(&w).map(|a| Report::ok().with("polynomial", a.to_string())))
        }
        AddpolyVerb::Annihilator { subfield_degree, element, .. } => {
            let b = operand("element", element, parse_element(element, field))?;
            domain(
                Subfield::of_degree(field, *subfield_degree)
                    .and_then(|k| minimal_annihilator(&b, &k))
                    .map(|a| Report::ok().with("polynomial", a.to_string())),
            )
        }
    })
}

fn artin_schreier(verb: &AsVerb, field: &Field) -> Outcome {
    let elem = |src: &str| operand("element", src, parse_element(src, field));
    Ok(match verb {
        AsVerb::Irred { a, .. } => {
            let a = elem(a)?;
            domain(as_irreducible(&a).map(|b| Report::ok().with("irreducible", b)))
        }
        AsVerb::Solve { a, .. } => {
            let f = PPolynomial::artin_schreier(&elem(a)?);
            domain(
                solve_p_polynomial(&f, field)
                    .map(|rs| roots_report(Report::ok().with("polynomial", f.to_string()), &rs)),
            )
        }
        AsVerb::Root { factor, poly, .. } => {
            let f = operand("p-polynomial", poly, parse_ppolynomial(poly, field))?;
            let h = operand("polynomial", factor, parse_ordinary(factor, field))?;
            domain(root_from_prime_factor(&f, &h).map(|r| Report::ok().with("root", r.to_string())))
        }
        AsVerb::Trace { base_degree, a, .. } => {
            let a = elem(a)?;
            domain(
                Subfield::of_degree(field, *base_degree)
                    .and_then(|k| trace(&a, &CyclicExtension::new(k)))
                    .map(|t| Report::ok().with("trace", t.to_string())),
            )
        }
        AsVerb::Hilbert90 { base_degree, c, .. } => {
            let c = elem(c)?;
            domain(Subfield::of_degree(field, *base_degree).and_then(|k| {
                let e = CyclicExtension::new(k);
                let theta = hilbert90_additive(&c, &e)?;
                let check = e.sigma(&theta).try_sub(&theta)?;
                Ok(Report::ok().with("theta", theta.to_string()).with("sigma_theta_minus_theta", check.to_string()))
            }))
        }
        AsVerb::Reduce { a, .. } => {
            let a = elem(a)?;
            domain(as_shift_reduce(&a).map(|r| Report::ok().with("representative", r.to_string())))
        }
        AsVerb::Counterexample { .. } => {
            domain(p_closed_counterexample(field).map(|f| Report::ok().with("polynomial", f.to_string())))
        }
    })
}

fn index_json(b: &BasisIndex) -> serde_json::Map<String, Value> {
    let (place, i, nu, m) = b.parts();
    let mut map = serde_json::Map::new();
    map.insert("place".into(), json!(place));
    map.insert("i".into(), json!(i));
    map.insert("nu".into(), json!(nu));
    map.insert("m".into(), json!(m));
    map
}

fn function_field(verb: &FfVerb, field: &Field) -> Outcome {
    let ratfn = |src: &str| -> Result<_, Usage> {
        let x = operand("rational function", src, parse_element(src, field))?;
        Ok(x.as_ratfn().cloned())
    };
    let not_ratfn = || Report::error(&Error::Unsupported(format!("{field} is not a rational function field")));
    Ok(match verb {
        FfVerb::Decompose { place_bound, f, .. } => {
            let Some(f) = ratfn(f)? else { return Ok(not_ratfn()) };
            domain(frob_decompose(&f, *place_bound).map(|d| {
                let mut terms = Vec::new();
                let mut lines = Vec::new();
                for (b, c) in d.terms() {
                    let mut t = index_json(b);
                    t.insert("coeff".into(), json!(c.to_string()));
                    terms.push(Value::Object(t));
                    lines.push(format!("{b} coeff={c}"));
                }
                if lines.is_empty() {
                    lines.push("0".into());
                }
                Report::ok().with("terms", terms).lines(lines)
            }))
        }
        FfVerb::Kphi { place_bound, f, .. } => {
            let Some(f) = ratfn(f)? else { return Ok(not_ratfn()) };
            domain(kphi_decompose(&f, *place_bound).map(|d| {
                let mut parts = Vec::new();
                let mut lines = vec![format!("constant: {}", d.constant)];
                for (b, a) in &d.parts {
                    let mut t = index_json(b);
                    t.insert("operator".into(), json!(a.to_string()));
                    parts.push(Value::Object(t));
                    lines.push(format!("{b} operator={a}"));
                }
                Report::ok().with("constant", d.constant.to_string()).with("parts", parts).lines(lines)
            }))
        }
        FfVerb::Places { degree, .. } => {
            if field.kind() != &FieldKind::RationalFunction {
                return Ok(not_ratfn());
            }
            Report::ok().with("places", strings(&places_up_to(field.p(), *degree)))
        }
    })
}

fn precision(src: &Option<String>, field: &Field) -> Result<Option<Ratio<i64>>, Usage> {
    match src {
        Some(s) => s
            .parse::<Ratio<i64>>()
            .map(Some)
            .map_err(|_| Usage(format!("invalid precision '{s}': expected an integer or n/d"))),
        None => Ok(field.laurent_precision().map(Ratio::from_integer)),
    }
}

fn valued(verb: &ValVerb, field: &Field) -> Outcome {
    if field.laurent_precision().is_none() {
        return Ok(Report::error(&Error::Unsupported(format!("{field} is not a Laurent series field"))));
    }
    let series = |src: &str| -> Result<LaurentSeries, Usage> {
        let x = operand("series", src, parse_element(src, field))?;
        Ok(x.as_series().expect("laurent field").clone())
    };
    Ok(match verb {
        ValVerb::Hensel { prec, c, .. } => {
            let c = series(c)?;
            let prec = precision(prec, field)?;
            domain(hensel_as_solve(&c, prec).map(|x| {
                let residual = x.pow(field.p() as u64).sub(&x).sub(&c);
                Report::ok().with("x", x.to_string()).with("residual", residual.to_string())
            }))
        }
        ValVerb::Asroot { e, prec, a, .. } => {
            let a = series(a)?;
            let prec = precision(prec, field)?;
            domain(as_root_extension(&a, *e, prec).map(|r| {
                let v = r.theta.valuation_bound();
                Report::ok()
                    .with("theta", r.theta.to_string())
                    .with("theta_valuation", v.to_string())
                    .with("residual", r.residual.to_string())
                    .with("residual_valuation", r.residual_valuation.to_string())
            }))
        }
        ValVerb::Image { k, x, .. } => {
            let x = series(x)?;
            domain(image_decompose(&x, *k).map(|d| {
                let mut r = Report::ok();
                for (i, xi) in d.xs.iter().enumerate() {
                    r = r.with(&format!("X{i}"), xi.to_string());
                }
                r.with("Y", d.y.to_string())
            }))
        }
        ValVerb::Extremal { lo, hi, mode, budget, poly, .. } => {
            let f = operand("p-polynomial", poly, parse_series_ppolynomial(poly, field))?;
            let mode = match mode {
                Mode::Brute => SearchMode::BruteForce,
                Mode::Greedy => SearchMode::Greedy,
            };
            domain(Window::new(*lo, *hi).and_then(|w| {
                let r = extremal_search(&f, w, mode, budget.unwrap_or(DEFAULT_BUDGET))?;
                let witness = strings(&r.witness);
                Ok(Report::ok()
                    .with("label", r.label())
                    .with("value", r.value.to_string())
                    .with("attained", r.attained.to_string())
                    .with("witness", witness.clone())
                    .lines(vec![
                        format!("{}: {}", r.label(), r.value),
                        format!("attained: {}", r.attained),
                        format!("witness: [{}]", witness.join(", ")),
                    ]))
            }))
        }
    })
}
