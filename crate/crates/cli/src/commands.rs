use num_bigint::BigInt;
use serde_json::json;
use zerocover::characterization::{psi_value, theorem41_converse, theorem41_forward};
use zerocover::covers::{cover_generator, parse_cover, serialize_cover};
use zerocover::exactmath::{indicator_sweep, parse_rational, Rational};
use zerocover::graphs::{find_regular_subgraph, CoverConstraint};
use zerocover::pgroups::{davenport_constant, egz_constant, olson_signed_count, parse_element, parse_elements};
use zerocover::zerosum::{corollary22_find, conjecture_scan, egz_exact3q_find, egz_weighted_find, ScanKind};
use zerocover::{Error, GroupShape, Multigraph, ResidueSystem, Result, ZeroSumInstance};

use crate::input::{parse_indices, Inputs};
use crate::report::Outcome;
use crate::{CharCmd, Command, CongruenceCmd, CoverCmd, GraphCmd, GroupInput, ZerosumCmd};

fn indices_text(i: &[usize]) -> String {
    format!("{{{}}}", i.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn load_cover(inputs: &mut Inputs, path: &str) -> Result<ResidueSystem> {
    parse_cover(&inputs.read(path)?)
}

fn load_group(inputs: &mut Inputs, g: &GroupInput) -> Result<(GroupShape, Vec<zerocover::GroupElement>)> {
    let shape: GroupShape = g.group.parse()?;
    let elements = parse_elements(&shape, &inputs.read(&g.elements)?)?;
    Ok((shape, elements))
}

/// Runs one command; returns the seed actually used (randomized commands
/// only) and the outcome.
pub fn run(cmd: &Command, seed: Option<u64>, inputs: &mut Inputs) -> (Option<u64>, Result<Outcome>) {
    match cmd {
        Command::Cover(CoverCmd::Gen { m, steps }) => {
            let seed = seed.unwrap_or(0);
            (Some(seed), cover_gen(*m, *steps, seed))
        }
        Command::Scan(args) => {
            let seed = seed.unwrap_or(0);
            (Some(seed), scan(&args.kind, args.budget, seed))
        }
        Command::Cover(c) => (None, cover(c, inputs)),
        Command::Zerosum(z) => (None, zerosum(z, inputs)),
        Command::Olson(a) => (None, olson(&a.group, &a.target, inputs)),
        Command::Constants(a) => (None, constants(&a.which, &a.group)),
        Command::Char(c) => (None, characterization(c, inputs)),
        Command::Graph(g) => (None, graph(g, inputs)),
        Command::Congruence(CongruenceCmd::Lemma42 { p, h, from, to }) => (None, indicator_range(*p, *h, *from, *to)),
    }
}

fn cover_gen(m: usize, steps: usize, seed: u64) -> Result<Outcome> {
    if m == 0 {
        return Err(Error::Input("m must be positive".into()));
    }
    let a = cover_generator(m, steps, seed);
    let text = serialize_cover(&a);
    Ok(Outcome::new(true, text.trim_end(), json!({ "m": m, "k": a.len(), "cover": text })))
}

fn cover(cmd: &CoverCmd, inputs: &mut Inputs) -> Result<Outcome> {
    match cmd {
        CoverCmd::Check { file, min_mult, exact, profile } => {
            let a = load_cover(inputs, file)?;
            let p = a.profile()?;
            let mut w = json!({
                "k": a.len(), "period": p.period, "min_mult": p.min_mult, "max_mult": p.max_mult,
                "reciprocal_sum": p.reciprocal_sum.to_string(),
            });
            if *profile {
                w["histogram"] = serde_json::to_value(&p.histogram).expect("plain data");
            }
            let (passed, what) = match (min_mult, exact) {
                (_, Some(m)) => (p.min_mult == *m && p.max_mult == *m, format!("exact {m}-cover")),
                (Some(m), None) => (p.min_mult >= *m, format!("{m}-cover")),
                (None, None) => (true, format!("{}-cover", p.min_mult)),
            };
            let verdict = if passed { "is" } else { "is not" };
            let summary = format!(
                "{verdict} an {what}: k = {}, period {}, multiplicity in [{}, {}], reciprocal sum {}",
                a.len(), p.period, p.min_mult, p.max_mult, p.reciprocal_sum
            );
            Ok(Outcome::new(passed, summary, w))
        }
        CoverCmd::Spectrum { file } => {
            let a = load_cover(inputs, file)?;
            let s: Vec<String> = a.subset_fraction_spectrum()?.iter().map(Rational::to_string).collect();
            Ok(Outcome::new(true, format!("|S| = {}: {}", s.len(), s.join(" ")), json!({ "size": s.len(), "spectrum": s })))
        }
        CoverCmd::Split { file, m, n } => {
            let a = load_cover(inputs, file)?;
            match a.find_exact_split(*m, *n)? {
                Some(split) => Ok(Outcome::new(
                    true,
                    format!("exact {n}-cover {} and exact {}-cover {}", indices_text(&split.part), m - n, indices_text(&split.rest)),
                    json!({ "split": split }),
                )),
                None => Ok(Outcome::new(false, format!("no split into exact {n}- and {}-covers", m - n), json!({ "split": null }))),
            }
        }
        CoverCmd::Gen { .. } => unreachable!("handled with the seed"),
    }
}

fn instance(
    inputs: &mut Inputs,
    cover: &str,
    group: &GroupInput,
    h: u32,
    alpha: Option<&str>,
    target: Option<&str>,
) -> Result<ZeroSumInstance> {
    let a = load_cover(inputs, cover)?;
    let (shape, elements) = load_group(inputs, group)?;
    let alpha = match alpha {
        Some(t) => parse_rational(t)?,
        None => Rational::from_integer(BigInt::from(0)),
    };
    let target = match target {
        Some(t) => parse_element(&shape, t)?,
        None => shape.zero(),
    };
    ZeroSumInstance::new(a, shape, elements, target, h, alpha)
}

fn zerosum(cmd: &ZerosumCmd, inputs: &mut Inputs) -> Result<Outcome> {
    match cmd {
        ZerosumCmd::Find { cover, group, h, alpha, target } => {
            let inst = instance(inputs, cover, group, *h, alpha.as_deref(), target.as_deref())?;
            match inst.find_zero_sum_subsequence()? {
                Some(i) => Ok(Outcome::new(true, format!("I = {}", indices_text(&i)), json!({ "indices": i }))),
                None => Ok(Outcome::new(false, "the family has no nonempty member", json!({ "indices": null }))),
            }
        }
        ZerosumCmd::VerifyT21 { cover, group, h, alpha, target } => {
            let inst = instance(inputs, cover, group, *h, Some(alpha), Some(target))?;
            let r = inst.theorem21_check()?;
            Ok(Outcome::new(true, format!("family size {} (not 1)", r.count), json!(r)))
        }
        ZerosumCmd::Egz { cover, group, q, exact3q } => {
            let a = load_cover(inputs, cover)?;
            let shape: GroupShape = group.group.parse()?;
            let w = if *exact3q {
                let doubled = shape.doubled()?;
                let elements = parse_elements(&doubled, &inputs.read(&group.elements)?)?;
                egz_exact3q_find(&a, &shape, &elements, *q)?
            } else {
                let elements = parse_elements(&shape, &inputs.read(&group.elements)?)?;
                egz_weighted_find(&a, &shape, &elements, *q)?
            };
            Ok(Outcome::new(true, format!("I = {}", indices_text(&w.indices)), json!(w)))
        }
        ZerosumCmd::C22 { cover, m, j } => {
            let a = load_cover(inputs, cover)?;
            let j = j.as_deref().map(parse_indices).transpose()?;
            let i = corollary22_find(&a, *m, j.as_deref())?;
            let sum = a.weighted_sum(i.iter().fold(0u64, |acc, &s| acc | 1 << (s - 1)));
            Ok(Outcome::new(
                true,
                format!("I = {}, weighted sum {sum}", indices_text(&i)),
                json!({ "indices": i, "weighted_sum": sum.to_string() }),
            ))
        }
    }
}

fn olson(group: &GroupInput, target: &str, inputs: &mut Inputs) -> Result<Outcome> {
    let (shape, elements) = load_group(inputs, group)?;
    let c = parse_element(&shape, target)?;
    let count = olson_signed_count(&shape, &c, &elements)?;
    let p = shape.prime().expect("checked by the count");
    Ok(Outcome::new(
        true,
        format!("signed count {count}, divisible by {p}"),
        json!({ "count": count, "prime": p }),
    ))
}

fn constants(which: &str, group: &str) -> Result<Outcome> {
    let shape: GroupShape = group.parse()?;
    let value = match which {
        "davenport" => davenport_constant(&shape)?,
        _ => egz_constant(&shape)?,
    };
    Ok(Outcome::new(
        true,
        format!("{which}({}) = {value}", shape.name()),
        json!({ "constant": which, "group": shape, "value": value, "d_star": shape.d_star() }),
    ))
}

fn characterization(cmd: &CharCmd, inputs: &mut Inputs) -> Result<Outcome> {
    match cmd {
        CharCmd::T41 { cover, m, converse: false } => {
            let a = load_cover(inputs, cover)?;
            let cert = theorem41_forward(&a, *m, None)?;
            Ok(Outcome::new(true, format!("all {} (theta, n) sums vanish", cert.results.len()), json!(cert)))
        }
        CharCmd::T41 { cover, m, converse: true } => {
            let a = load_cover(inputs, cover)?;
            let v = theorem41_converse(&a, *m, None)?;
            let summary = match &v.failing {
                None => format!("all sums vanish: a {m}-cover"),
                Some(f) => format!("sum at theta = {}, n = {} is nonzero: not a {m}-cover", f.theta, f.n),
            };
            Ok(Outcome::new(v.all_vanish, summary, json!(v)))
        }
        CharCmd::Psi { cover, theta } => {
            let a = load_cover(inputs, cover)?;
            let theta = parse_rational(theta)?;
            let one = zerocover::zerosum::SubsetPolynomial::constant(a.len(), Rational::from_integer(1.into()));
            let psi = psi_value(&a, &one, &theta)?;
            let coeffs: Vec<String> = psi.coeffs().iter().map(Rational::to_string).collect();
            let zero = psi.is_zero();
            Ok(Outcome::new(
                true,
                format!("psi({theta}) {} zero", if zero { "is" } else { "is not" }),
                json!({ "theta": theta.to_string(), "level": psi.level(), "coefficients": coeffs, "is_zero": zero }),
            ))
        }
    }
}

fn graph(cmd: &GraphCmd, inputs: &mut Inputs) -> Result<Outcome> {
    let GraphCmd::Regular { graph, q, cover, h } = cmd;
    let g = Multigraph::parse(&inputs.read(graph)?)?;
    let system = cover.as_deref().map(|c| load_cover(inputs, c)).transpose()?;
    let constraint = system.as_ref().map(|s| CoverConstraint { system: s, level: h.unwrap_or(0) });
    let w = find_regular_subgraph(&g, *q, constraint.as_ref())?;
    Ok(Outcome::new(true, format!("{q}-regular subgraph on edges {}", indices_text(&w.edges)), json!(w)))
}

fn indicator_range(p: u64, h: u32, from: i64, to: i64) -> Result<Outcome> {
    let r = indicator_sweep(p, h, from, to)?;
    Ok(Outcome::new(
        true,
        format!("indicator identity holds for {} values ({} cross-checked digitwise)", r.checked, r.lucas_checked),
        json!(r),
    ))
}

fn scan(kind: &str, budget: usize, seed: u64) -> Result<Outcome> {
    let kind: ScanKind = kind.parse()?;
    let r = conjecture_scan(kind, budget, seed)?;
    let found = r.counterexamples.len();
    let summary = format!("{kind}: {} instances searched, {found} counterexamples", r.searched);
    Ok(Outcome::new(found == 0, summary, json!(r)))
}

