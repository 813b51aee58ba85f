use cubica::algebra::{Field, PrimeField, RationalField};
use cubica::cubic::{
    hessian_trace, incidence_fiber, incidence_fibers_at_random_points, is_smooth, is_smooth_two_primes, line_type_oracle,
    lines_through_point, CubicThreefold, LineOnCubic,
};
use cubica::projlin::{common_transversals, transversal_count, InfiniteFamily, PluckerLine, TransversalResult};
use cubica::scheme::klein::{certify, CertificateStatus, KLEIN_TARGETS};
use cubica::specialpos::{cayley_bacharach_rank, classify, is_special_position_sampler, subspace_json, LineConfig, DEFAULT_TRIALS};
use serde_json::{json, Value};

use crate::input::{self, FieldSpec};
use crate::{Cli, CliError, Command, Report};

const DEFAULT_PRIMES: &str = "101,32003";

fn require<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    v.as_deref().ok_or_else(|| CliError::input(format!("{flag} is required")))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn ok(json: Value) -> Result<Report, CliError> {
    Ok(Report { json, text: None, code: 0 })
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let field = FieldSpec::parse(&cli.field)?;
    let name = format!("{:?}", cli.command);
    match (cli.command, field) {
        (Command::Hessian, FieldSpec::Rational) => hessian(RationalField, cli),
        (Command::Hessian, FieldSpec::Prime(p)) => hessian(PrimeField::new(p)?, cli),
        (Command::ClassifyLine, FieldSpec::Rational) => classify_line(RationalField, cli),
        (Command::ClassifyLine, FieldSpec::Prime(p)) => classify_line(PrimeField::new(p)?, cli),
        (Command::CbRank, FieldSpec::Rational) => cb_rank(RationalField, cli),
        (Command::CbRank, FieldSpec::Prime(p)) => cb_rank(PrimeField::new(p)?, cli),
        (Command::Transversals, FieldSpec::Rational) => transversals_count_only(cli),
        (Command::Transversals, FieldSpec::Prime(p)) => transversals(PrimeField::new(p)?, cli),
        (Command::KleinCertify, _) => klein_certify(cli),
        (Command::SmoothCheck, f) => smooth_check(f, cli),
        (Command::LinesThrough, f) => lines_through(f.prime_field(&name)?, cli),
        (Command::Eckardt, f) => eckardt(f.prime_field(&name)?, cli),
        (Command::Fiber, f) => fiber(f.prime_field(&name)?, cli),
        (Command::HessianTrace, f) => trace(f.prime_field(&name)?, cli),
        (Command::SpecialPosition, f) => special_position(f.prime_field(&name)?, cli),
    }
}

fn hessian<K: Field>(k: K, cli: &Cli) -> Result<Report, CliError> {
    let x = input::cubic(&k, require(&cli.cubic, "--cubic")?)?;
    let h = x.hessian();
    Ok(Report {
        json: json!({
            "field": k.descriptor().to_string(),
            "cubic": x.f().to_string(),
            "hessian": h.to_string(),
            "degree": h.homogeneous_degree(),
        }),
        text: Some(format!("{h}\n")),
        code: 0,
    })
}

fn cubic_and_line<K: Field>(k: &K, cli: &Cli) -> Result<(CubicThreefold<K>, PluckerLine<K>), CliError> {
    let x = input::cubic(k, require(&cli.cubic, "--cubic")?)?;
    let l = input::line(k, require(&cli.line, "--line")?)?;
    Ok((x, l))
}

fn classify_line<K: Field>(k: K, cli: &Cli) -> Result<Report, CliError> {
    let (x, l) = cubic_and_line(&k, cli)?;
    let on = LineOnCubic::new(&x, &l)?;
    let oracle = line_type_oracle(&x, &l)?;
    let quadrics: Vec<Vec<String>> =
        on.normal_quadrics.iter().map(|q| q.coeffs().iter().map(|c| k.format_elem(c)).collect()).collect();
    let agree = oracle == on.line_type;
    Ok(Report {
        json: json!({
            "line": l.to_json(),
            "line_type": on.line_type,
            "normal_quadrics": quadrics,
            "oracle": oracle,
            "agree": agree,
        }),
        text: None,
        code: if agree { 0 } else { 1 },
    })
}

fn lines_through(k: PrimeField, cli: &Cli) -> Result<Report, CliError> {
    let x = input::cubic(&k, require(&cli.cubic, "--cubic")?)?;
    let p = input::point(&k, require(&cli.point, "--point")?)?;
    ok(to_value(&lines_through_point(&x, &p, cli.seed)?.to_json()))
}

fn eckardt(k: PrimeField, cli: &Cli) -> Result<Report, CliError> {
    let x = input::cubic(&k, require(&cli.cubic, "--cubic")?)?;
    let p = input::point(&k, require(&cli.point, "--point")?)?;
    let r = lines_through_point(&x, &p, cli.seed)?;
    ok(json!({
        "point": p.iter().map(|c| k.format_elem(c)).collect::<Vec<_>>(),
        "eckardt": r.eckardt,
        "on_hessian": r.on_hessian,
    }))
}

/// At `--point`, or at `--trials` random points of the line (default 1).
fn fiber(k: PrimeField, cli: &Cli) -> Result<Report, CliError> {
    let (x, l) = cubic_and_line(&k, cli)?;
    let line_type = LineOnCubic::new(&x, &l)?.line_type;
    let fibers = match &cli.point {
        Some(p) => vec![incidence_fiber(&x, &l, &input::point(&k, p)?, cli.seed)?],
        None => incidence_fibers_at_random_points(&x, &l, cli.trials.unwrap_or(1), cli.seed)?,
    };
    ok(json!({
        "line": l.to_json(),
        "line_type": line_type,
        "fibers": fibers.iter().map(|f| to_value(&f.to_json())).collect::<Vec<_>>(),
    }))
}

fn trace(k: PrimeField, cli: &Cli) -> Result<Report, CliError> {
    let (x, l) = cubic_and_line(&k, cli)?;
    ok(to_value(&hessian_trace(&x, &l, cli.seed)?))
}

fn special_position(k: PrimeField, cli: &Cli) -> Result<Report, CliError> {
    let cfg = LineConfig::new(input::lines(&k, require(&cli.lines, "--lines")?)?)?;
    let trials = cli.trials.unwrap_or(DEFAULT_TRIALS);
    let class = classify(&cfg)?;
    let sampler = is_special_position_sampler(&cfg, trials, cli.seed)?;
    let cj = class.to_json();
    let code = if cli.expect_special && !class.is_special() { 1 } else { 0 };
    Ok(Report {
        json: json!({"verdict": cj.verdict, "evidence": cj.evidence, "sampler": to_value(&sampler.to_json(trials))}),
        text: None,
        code,
    })
}

fn cb_rank<K: Field>(k: K, cli: &Cli) -> Result<Report, CliError> {
    let lines = input::lines(&k, require(&cli.lines, "--lines")?)?;
    ok(to_value(&cayley_bacharach_rank(&lines)?))
}

fn family_json<K: Field>(f: &InfiniteFamily<K>) -> Value {
    match f {
        InfiniteFamily::Concurrent(p) => json!({"family": "concurrent", "point": to_value(&subspace_json(p))}),
        InfiniteFamily::Coplanar(p) => json!({"family": "coplanar", "plane": to_value(&subspace_json(p))}),
        InfiniteFamily::OneParameter => json!({"family": "one_parameter"}),
        InfiniteFamily::Pencil => json!({"family": "pencil"}),
    }
}

fn transversals(k: PrimeField, cli: &Cli) -> Result<Report, CliError> {
    let lines = input::lines(&k, require(&cli.lines, "--lines")?)?;
    ok(match common_transversals(&lines, cli.seed)? {
        TransversalResult::Finite { count, transversals } => json!({
            "count": count,
            "transversals": transversals.iter().map(|t| to_value(&t.to_json())).collect::<Vec<_>>(),
        }),
        TransversalResult::Infinite(f) => json!({"count": null, "infinite": family_json(&f)}),
    })
}

/// Over ℚ only the count is computed.
fn transversals_count_only(cli: &Cli) -> Result<Report, CliError> {
    let lines = input::lines(&RationalField, require(&cli.lines, "--lines")?)?;
    ok(match transversal_count(&lines)? {
        Ok(count) => json!({"count": count}),
        Err(f) => json!({"count": null, "infinite": family_json(&f)}),
    })
}

fn klein_certify(cli: &Cli) -> Result<Report, CliError> {
    let (p1, p2) = input::primes(cli.primes.as_deref().unwrap_or(DEFAULT_PRIMES))?;
    let x = input::cubic(&RationalField, cli.cubic.as_deref().unwrap_or("builtin:klein"))?;
    let targets = (x == CubicThreefold::klein(RationalField)?).then_some(&KLEIN_TARGETS);
    let cert = certify(&x, p1, p2, targets)?;
    let code = match cert.outcome {
        CertificateStatus::Certified | CertificateStatus::NotApplicable { .. } => 0,
        CertificateStatus::Reported if cert.consistent_across_primes => 0,
        CertificateStatus::Reported | CertificateStatus::Failed => 1,
    };
    Ok(Report { json: to_value(&cert), text: Some(cert.to_text()), code })
}

/// With `--primes` or `--field qq`, the cubic is read over ℚ and checked
/// modulo two primes; otherwise modulo the prime of `--field`.
fn smooth_check(field: FieldSpec, cli: &Cli) -> Result<Report, CliError> {
    let arg = require(&cli.cubic, "--cubic")?;
    let (primes, verdict) = match (field, &cli.primes) {
        (FieldSpec::Prime(p), None) => (vec![p], is_smooth(&input::cubic(&PrimeField::new(p)?, arg)?, p)?),
        (_, ps) => {
            let (p1, p2) = input::primes(ps.as_deref().unwrap_or(DEFAULT_PRIMES))?;
            (vec![p1, p2], is_smooth_two_primes(&input::cubic(&RationalField, arg)?, p1, p2)?)
        }
    };
    let smooth = verdict.is_smooth();
    Ok(Report {
        json: json!({"primes": primes, "smooth": smooth, "result": to_value(&verdict)}),
        text: None,
        code: if smooth { 0 } else { 1 },
    })
}

/// `key: value` lines, nested objects indented.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(a) if a.iter().all(|x| !x.is_object()) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (key, val) in o {
                match scalar(val) {
                    Some(s) => out.push_str(&format!("{pad}{key}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        render_into(val, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for (i, item) in a.iter().enumerate() {
                out.push_str(&format!("{pad}- [{i}]\n"));
                render_into(item, indent + 1, out);
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering() {
        let v = json!({"a": 1, "b": {"c": [1, 2]}, "d": [{"e": "x"}]});
        assert_eq!(render_text(&v), "a: 1\nb:\n  c: [1, 2]\nd:\n  - [0]\n    e: x\n");
    }
}
