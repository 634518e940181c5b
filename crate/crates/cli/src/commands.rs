//! The subcommands, producing text or `key=value` lines.

use std::fmt::Write as _;

use trimat::bimtri::TripleModule;
use trimat::monocat::{in_f, in_s, injective_objects_s, projective_objects_f, MonoError};
use trimat::repmod::{is_injective, is_isomorphic, is_projective};
use trimat::rss::{rss_functor, verify_rss_property, RssError};
use trimat::Field;

use crate::checks::{matches, value_text, Actual, Evaluator};
use crate::workspace::{Object, Workspace};
use crate::{Cli, CliError, Command, Format, Outcome};

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn dims<F: Field>(t: &TripleModule<F>) -> String {
    format!("({},{})", t.x.dim(), t.y.dim())
}

/// `key=value` with the value quoted when it contains spaces.
fn kv(key: &str, value: &str) -> String {
    if value.contains(char::is_whitespace) || value.is_empty() {
        format!("{key}={value:?}")
    } else {
        format!("{key}={value}")
    }
}

pub fn execute<F: Field>(cli: &Cli, ws: &Workspace<F>) -> Result<Outcome, CliError> {
    let ev = Evaluator::new(ws, cli.bound);
    match &cli.command {
        Command::Build { .. } => Ok(build(cli.format, ws)),
        Command::Check { check, targets, .. } => check_command(cli.format, &ev, check, targets),
        Command::Enumerate { lambda, .. } => enumerate(cli.format, &ev, lambda),
        Command::Report { .. } => report(cli.format, &ev),
        Command::RssMap { lambda, triples, .. } => rss_map(cli.format, &ev, lambda, triples),
        Command::RssVerify { lambda, .. } => rss_verify(&ev, lambda),
    }
}

fn build<F: Field>(format: Format, ws: &Workspace<F>) -> Outcome {
    let mut out = String::new();
    for e in &ws.entries {
        let dim = match &e.object {
            Object::Algebra(a) => a.dim(),
            Object::Bimodule(m) => m.dim(),
            Object::Lambda(l) => l.flat.dim(),
            Object::Module(m) => m.dim(),
            Object::Triple { triple, .. } => triple.dim(),
            Object::Hom { space_dim, .. } => *space_dim,
        };
        let _ = match format {
            Format::Text => writeln!(out, "{:<24} {:<9} dim {dim:<4} {}", e.id, e.kind.name(), e.source),
            Format::Machine => writeln!(
                out,
                "{} {} {} {}",
                kv("manifest", &ws.name),
                kv("id", &e.id),
                kv("kind", e.kind.name()),
                kv("dim", &dim.to_string())
            ),
        };
    }
    let _ = writeln!(out, "built {} entries over {}", ws.entries.len(), ws.field);
    Outcome::ok(out)
}

fn check_command<F: Field>(format: Format, ev: &Evaluator<F>, check: &str, targets: &[String]) -> Result<Outcome, CliError> {
    let entries: Vec<_> = if targets.is_empty() {
        ev.ws.entries.iter().filter(|e| crate::checks::known_checks(e.kind).contains(&check)).collect()
    } else {
        targets.iter().map(|t| ev.ws.entry(t).map_err(CliError::Input)).collect::<Result<_, _>>()?
    };
    if entries.is_empty() {
        return Err(CliError::Input(format!("no entry supports the check {check:?}")));
    }
    let mut out = String::new();
    let mut code = 0;
    for e in entries {
        let actual = ev.evaluate(e, check)?;
        if let Actual::Refused(why) = &actual {
            code = 3;
            let _ = match format {
                Format::Text => writeln!(out, "{:<24} {check}: refused ({why})", e.id),
                Format::Machine => writeln!(
                    out,
                    "{} {} {} actual=refused {}",
                    kv("manifest", &ev.ws.name),
                    kv("id", &e.id),
                    kv("check", check),
                    kv("reason", why)
                ),
            };
            continue;
        }
        let _ = match format {
            Format::Text => writeln!(out, "{:<24} {check}: {actual}", e.id),
            Format::Machine => writeln!(
                out,
                "{} {} {} {}",
                kv("manifest", &ev.ws.name),
                kv("id", &e.id),
                kv("check", check),
                kv("actual", &actual.to_string())
            ),
        };
    }
    Ok(Outcome { output: out, code })
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

/// Membership in a list of objects up to isomorphism, `None` when the list
/// is unavailable.
fn among<F: Field>(t: &TripleModule<F>, list: &Result<Vec<TripleModule<F>>, MonoError>) -> Result<Option<bool>, CliError> {
    let Ok(list) = list else { return Ok(None) };
    let flat = t.to_flat();
    for o in list {
        if is_isomorphic(&flat, &o.to_flat()).map_err(input)?.is_some() {
            return Ok(Some(true));
        }
    }
    Ok(Some(false))
}

fn enumerate<F: Field>(format: Format, ev: &Evaluator<F>, lambda: &str) -> Result<Outcome, CliError> {
    let lam = ev.ws.lambda(lambda).map_err(CliError::Input)?;
    let triples = ev.enumeration(lambda)?;
    let s_inj = injective_objects_s(lam);
    let f_proj = projective_objects_f(lam);
    let (mut n_s, mut n_f) = (0, 0);
    let mut out = String::new();
    if format == Format::Text {
        let _ = writeln!(out, "{:<4} {:<8} {:<4} {:<4} {:<5} {:<5} {:<7} {:<7}", "#", "dims", "S", "F", "proj", "inj", "S-inj", "F-proj");
    }
    for (i, t) in triples.iter().enumerate() {
        let flat = t.to_flat();
        let s = in_s(t);
        let f = in_f(t).map_err(input)?;
        n_s += usize::from(s);
        n_f += usize::from(f);
        let proj = is_projective(&flat).map_err(input)?;
        let inj = is_injective(&flat).map_err(input)?;
        let si = if s { among(t, &s_inj)? } else { Some(false).filter(|_| s_inj.is_ok()) };
        let fp = if f { among(t, &f_proj)? } else { Some(false).filter(|_| f_proj.is_ok()) };
        let _ = match format {
            Format::Text => writeln!(
                out,
                "{i:<4} {:<8} {:<4} {:<4} {:<5} {:<5} {:<7} {:<7}",
                dims(t),
                flag(Some(s)),
                flag(Some(f)),
                flag(Some(proj)),
                flag(Some(inj)),
                flag(si),
                flag(fp)
            ),
            Format::Machine => writeln!(
                out,
                "{} {} index={i} dims={} in_s={s} in_f={f} projective={proj} injective={inj} s_injective={} f_projective={}",
                kv("manifest", &ev.ws.name),
                kv("lambda", lambda),
                dims(t),
                flag(si),
                flag(fp)
            ),
        };
    }
    let bound = ev.bound(ev.ws.entry(lambda).map_err(CliError::Input)?)?;
    let _ = writeln!(out, "total={} in_s={n_s} in_f={n_f} bound={bound}", triples.len());
    Ok(Outcome::ok(out))
}

struct Line {
    id: String,
    check: String,
    expected: String,
    actual: String,
    status: &'static str,
}

fn report<F: Field>(format: Format, ev: &Evaluator<F>) -> Result<Outcome, CliError> {
    let mut entries: Vec<_> = ev.ws.entries.iter().filter(|e| !e.expected.is_empty()).collect();
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    let mut lines = Vec::new();
    for e in entries {
        for (check, expected) in &e.expected {
            let actual = ev.evaluate(e, check)?;
            let status = match (&actual, matches(expected, &actual)) {
                (_, true) => "pass",
                (Actual::Refused(_), false) => "refused",
                (_, false) => "FAIL",
            };
            lines.push(Line {
                id: e.id.clone(),
                check: check.clone(),
                expected: value_text(expected),
                actual: actual.to_string(),
                status,
            });
        }
    }
    lines.sort_by_key(|l| l.status == "pass");
    let failed = lines.iter().filter(|l| l.status == "FAIL").count();
    let refused = lines.iter().filter(|l| l.status == "refused").count();
    let mut out = String::new();
    for l in &lines {
        let _ = match format {
            Format::Text => writeln!(
                out,
                "{:<7} {:<24} {:<20} expected {:<10} actual {}",
                l.status, l.id, l.check, l.expected, l.actual
            ),
            Format::Machine => writeln!(
                out,
                "{} {} {} {} {} status={}",
                kv("manifest", &ev.ws.name),
                kv("id", &l.id),
                kv("check", &l.check),
                kv("expected", &l.expected),
                kv("actual", &l.actual),
                if l.status == "FAIL" { "fail" } else { l.status }
            ),
        };
    }
    let _ = writeln!(
        out,
        "{}: {} checks, {} passed, {failed} failed, {refused} refused",
        ev.ws.name,
        lines.len(),
        lines.len() - failed - refused
    );
    let code = if failed > 0 {
        1
    } else if refused > 0 {
        3
    } else {
        0
    };
    Ok(Outcome { output: out, code })
}

fn precondition(e: RssError) -> CliError {
    match e {
        RssError::NotExchangeable | RssError::NotInS | RssError::Mono(_) => CliError::Precondition(e.to_string()),
        other => input(other),
    }
}

fn rss_map<F: Field>(format: Format, ev: &Evaluator<F>, lambda: &str, triples: &[String]) -> Result<Outcome, CliError> {
    let t = ev.two_sided_t(lambda)?.map_err(precondition)?;
    let over = ev.ws.triples_over(lambda);
    let sources: Vec<(&str, &TripleModule<F>)> = if triples.is_empty() {
        over.iter().filter(|(_, t)| in_s(t)).copied().collect()
    } else {
        let mut v = Vec::new();
        for id in triples {
            let (lam_id, tr) = ev.ws.triple(id).map_err(CliError::Input)?;
            if lam_id != lambda {
                return Err(CliError::Input(format!("triple {id:?} lies over {lam_id:?}, not {lambda:?}")));
            }
            v.push((id.as_str(), tr));
        }
        v
    };
    let mut out = String::new();
    for (id, src) in sources {
        let image = rss_functor(&t, src).map_err(|e| match e {
            RssError::NotInS => CliError::Precondition(format!("triple {id:?} is not in S")),
            other => precondition(other),
        })?;
        let flat = image.to_flat();
        let mut target = "none";
        for (oid, other) in &over {
            if in_f(other).map_err(input)? && is_isomorphic(&flat, &other.to_flat()).map_err(input)?.is_some() {
                target = oid;
                break;
            }
        }
        let _ = match format {
            Format::Text => writeln!(out, "{id} {} ↦ {} {target}", dims(src), dims(&image)),
            Format::Machine => writeln!(
                out,
                "{} {} {} source_dims={} image_dims={} {}",
                kv("manifest", &ev.ws.name),
                kv("lambda", lambda),
                kv("source", id),
                dims(src),
                dims(&image),
                kv("image", target)
            ),
        };
    }
    Ok(Outcome::ok(out))
}

fn rss_verify<F: Field>(ev: &Evaluator<F>, lambda: &str) -> Result<Outcome, CliError> {
    let t = ev.two_sided_t(lambda)?.map_err(precondition)?;
    let report = verify_rss_property(&t.functor(), &*ev.corpus(lambda)?).map_err(input)?;
    Ok(Outcome { output: report.to_string(), code: if report.all_passed() { 0 } else { 1 } })
}
