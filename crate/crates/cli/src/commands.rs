use std::fmt::Write as _;

use serde_json::{json, Value};
use yangian_qchar::characters::{
    asymptotic_char, char_product, demazure_char_via_ses, kr_char, n_factors, prefundamental_char,
    sl2_asymptotic_char, sl2_kr_char, Sign,
};
use yangian_qchar::identities::{
    run_spec, run_suite, tq_lhs_direct, verify_tq_translation, IdentityKind, IdentitySpec, Outcome,
};
use yangian_qchar::rational::{fmt_q, Q};
use yangian_qchar::sl2_explicit::{
    build_module, check_relations, extract_qchar, sl2_three_term_symbolic, verify_sl2_three_term, Sl2Kind,
    MIN_MODES_FOR_EXTRACTION,
};
use yangian_qchar::{CartanData, CharacterReport, SpectralCoord, TruncatedCharacter};

use crate::args::{Cli, Command, Common, Family, Identity, RepCheck, SignArg, Target};
use crate::config::CliConfig;
use crate::{CliError, Report};

pub fn run(cli: &Cli, config: &CliConfig) -> Result<Report, CliError> {
    let c = &cli.common;
    match &cli.command {
        Command::Qchar { family } => qchar(*family, c, config),
        Command::Verify { identity: Identity::Suite, file } => suite(file.as_deref(), config),
        Command::Verify { identity, .. } => verify(*identity, c, config),
        Command::RepCheck { check, dim, modes, dump } => rep_check(*check, c, *dim, *modes, *dump),
        Command::Translate { to: Target::Multiplicative } => translate(c),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn cartan_node(c: &Common) -> Result<(CartanData, usize), CliError> {
    let ty = c.lie_type.as_deref().ok_or_else(|| usage("--type is required"))?;
    let cartan = CartanData::of(ty)?;
    let node = c.node.ok_or_else(|| usage("--node is required"))?;
    if node == 0 || node > cartan.rank() {
        return Err(usage(format!("node {node} out of range 1..={}", cartan.rank())));
    }
    Ok((cartan, node - 1))
}

fn coord(v: &Option<String>, default: Option<&str>, name: &str) -> Result<SpectralCoord, CliError> {
    let s = v
        .as_deref()
        .or(default)
        .ok_or_else(|| usage(format!("--{name} is required")))?;
    s.parse::<SpectralCoord>()
        .map_err(|e| usage(format!("--{name} {s:?}: {e}")))
}

fn rational(v: &Option<String>, default: Option<&str>, name: &str) -> Result<Q, CliError> {
    coord(v, default, name)?
        .as_rational()
        .ok_or_else(|| usage(format!("--{name} must be an exact rational here")))
}

fn order(c: &Common) -> Result<u32, CliError> {
    let s = c.k.as_deref().ok_or_else(|| usage("--k is required"))?;
    s.parse()
        .map_err(|_| usage(format!("--k {s:?} must be a non-negative integer")))
}

fn character_report(command: &str, cartan: &CartanData, input: Value, ch: &TruncatedCharacter) -> Report {
    Report {
        command: command.into(),
        exit: 0,
        json: json!({ "input": input, "character": ch.to_json(cartan) }),
        text: ch.to_table(cartan),
    }
}

fn qchar(family: Family, c: &Common, config: &CliConfig) -> Result<Report, CliError> {
    let (cartan, i) = cartan_node(c)?;
    let engine = config.engine();
    let x = coord(&c.x, Some("0"), "x")?;
    let n = c.height.unwrap_or(config.default_height_bound);
    let mut input = json!({
        "type": cartan.lie_type().to_string(),
        "node": i + 1,
        "x": x.to_string(),
        "height": c.height,
    });
    let (name, ch) = match family {
        Family::Kr => {
            let k = order(c)?;
            input["k"] = k.into();
            ("qchar kr", kr_char(&cartan, i, k, &x, c.height, &engine)?)
        }
        Family::Demazure => {
            let (k, t) = (order(c)?, c.t.unwrap_or(1));
            input["k"] = k.into();
            input["t"] = t.into();
            (
                "qchar demazure",
                demazure_char_via_ses(&cartan, i, t, k, &x, c.height, &engine)?,
            )
        }
        Family::Asymptotic => {
            let y = coord(&c.y, None, "y")?;
            input["y"] = y.to_string().into();
            input["height"] = n.into();
            ("qchar asymptotic", asymptotic_char(&cartan, i, &y, &x, n, &engine)?)
        }
        Family::Prefundamental => {
            let sign = match c.sign.ok_or_else(|| usage("--sign plus|minus is required"))? {
                SignArg::Plus => Sign::Positive,
                SignArg::Minus => Sign::Negative,
            };
            input["sign"] = format!("{sign:?}").to_lowercase().into();
            input["height"] = n.into();
            (
                "qchar prefundamental",
                prefundamental_char(&cartan, i, &x, sign, n, &engine)?,
            )
        }
        Family::M => {
            let k = order(c)?;
            input["k"] = k.into();
            input["height"] = n.into();
            ("qchar m", tq_lhs_direct(&cartan, i, k, &x, n, &engine)?)
        }
        Family::N => {
            let k = order(c)?;
            input["k"] = k.into();
            let factors = n_factors(&cartan, i, k, &x)?
                .into_iter()
                .map(|(j, l, s)| kr_char(&cartan, j, l, &s, c.height, &engine))
                .collect::<Result<Vec<_>, _>>()?;
            ("qchar n", char_product(engine.exec, &factors))
        }
    };
    Ok(character_report(name, &cartan, input, &ch))
}

fn identity_kind(identity: Identity) -> IdentityKind {
    match identity {
        Identity::Tsystem => IdentityKind::Tsystem,
        Identity::Tq => IdentityKind::Tq,
        Identity::TwoTerm => IdentityKind::TwoTerm,
        Identity::Factorization => IdentityKind::Factorization,
        Identity::KrSkeleton => IdentityKind::KrSkeleton,
        Identity::DemazureSupport => IdentityKind::DemazureSupport,
        Identity::MSupport => IdentityKind::MSupport,
        Identity::Suite => unreachable!("suites are dispatched separately"),
    }
}

fn verify(identity: Identity, c: &Common, config: &CliConfig) -> Result<Report, CliError> {
    let (cartan, i) = cartan_node(c)?;
    let kind = identity_kind(identity);
    let mut spec = IdentitySpec::new(kind, &cartan.lie_type().to_string(), i + 1);
    spec.k = c.k.as_ref().map(|_| order(c)).transpose()?;
    spec.t = c.t;
    spec.height = c.height;
    spec.x = c.x.clone();
    spec.y = c.y.clone();
    spec.a = c.a.clone();
    spec.b = c.b.clone();
    let outcome = run_spec(&spec, &config.engine())?;
    let pass = outcome.pass();
    let mut body = outcome.to_json(&cartan);
    body["pass"] = pass.into();
    Ok(Report {
        command: format!("verify {}", kind_name(kind)),
        exit: if pass { 0 } else { 1 },
        json: json!({ "spec": spec, "report": body, "pass": pass }),
        text: outcome_text(&spec.label(), &outcome),
    })
}

fn kind_name(kind: IdentityKind) -> String {
    serde_json::to_value(kind)
        .ok()
        .and_then(|v| v.as_str().map(|s| s.replace('_', "-")))
        .unwrap_or_default()
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn outcome_text(label: &str, outcome: &Outcome) -> String {
    let mut out = format!("{} {label}\n", verdict(outcome.pass()));
    match outcome {
        Outcome::Character(r) => out += &r.diff_table(),
        Outcome::Tq(r) => {
            let line = |out: &mut String, name: &str, c: &CharacterReport| {
                let _ = writeln!(out, "  {name:<22} {} heights {:?}", verdict(c.pass), c.agreeing_heights());
            };
            for case in &r.cases {
                let _ = writeln!(out, "k = {}", case.k);
                line(&mut out, "direct vs rhs", &case.direct);
                line(&mut out, "via ses vs rhs", &case.via_ses);
                line(&mut out, "direct vs via ses", &case.routes);
                line(&mut out, "lifted vs symbolic", &case.lifted);
            }
            for (a, b, c) in &r.proxy {
                line(&mut out, &format!("k = {a} vs k = {b}"), c);
            }
        }
        Outcome::Support(r) => {
            let _ = writeln!(out, "  {} terms checked", r.checked_terms);
            for v in &r.violations {
                let _ = writeln!(out, "  violation: {v}");
            }
        }
    }
    out
}

fn suite(file: Option<&std::path::Path>, config: &CliConfig) -> Result<Report, CliError> {
    let path = file.ok_or_else(|| usage("verify suite needs --file <specs.json>"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let specs: Vec<IdentitySpec> =
        serde_json::from_str(&text).map_err(|e| usage(format!("invalid suite {}: {e}", path.display())))?;
    let entries = run_suite(&specs, &config.engine());
    let (mut failed, mut limited) = (false, false);
    let mut text = String::new();
    let mut rows = Vec::new();
    for e in &entries {
        match &e.outcome {
            Ok(o) => {
                failed |= !o.pass();
                let cartan = CartanData::of(&e.spec.lie_type)?;
                let _ = writeln!(text, "{:>3} {} {}", e.index, verdict(o.pass()), e.spec.label());
                rows.push(json!({ "index": e.index, "spec": e.spec, "pass": o.pass(), "report": o.to_json(&cartan) }));
            }
            Err(err) => {
                if err.is_resource_limit() {
                    limited = true;
                } else {
                    failed = true;
                }
                let _ = writeln!(text, "{:>3} ERROR {}: {err}", e.index, e.spec.label());
                rows.push(json!({ "index": e.index, "spec": e.spec, "pass": false, "error": err.to_string() }));
            }
        }
    }
    let pass = !failed && !limited;
    Ok(Report {
        command: "verify suite".into(),
        exit: if failed { 1 } else if limited { 3 } else { 0 },
        json: json!({ "pass": pass, "entries": rows }),
        text,
    })
}

fn sl2_kind(c: &Common, dim: Option<usize>) -> Result<Sl2Kind, CliError> {
    Ok(match dim {
        None => Sl2Kind::Finite { k: order(c)? },
        Some(dim) => Sl2Kind::Truncated {
            k: rational(&c.k, None, "k")?,
            dim,
        },
    })
}

fn rep_check(check: RepCheck, c: &Common, dim: Option<usize>, modes: usize, dump: bool) -> Result<Report, CliError> {
    let x = rational(&c.x, Some("0"), "x")?;
    let a1 = CartanData::of("A1")?;
    match check {
        RepCheck::Relations => {
            let kind = sl2_kind(c, dim)?;
            let module = build_module(kind.clone(), &x, modes)?;
            let r = check_relations(&module, modes)?;
            let mut text = format!(
                "{} relations with modes <= {modes} on {} basis vectors ({} instances)\n",
                verdict(r.pass),
                r.checked_basis,
                r.checked
            );
            if let Some(f) = &r.failure {
                let _ = writeln!(text, "  {:?} m={} n={} at v_{}: {:?} vs {:?}", f.relation, f.m, f.n, f.index, f.lhs, f.rhs);
            }
            let mut body = json!({ "pass": r.pass, "module": kind, "x": fmt_q(&x), "report": r });
            if dump {
                body["matrices"] = module.to_json();
            }
            Ok(Report {
                command: "rep-check relations".into(),
                exit: if r.pass { 0 } else { 1 },
                json: body,
                text,
            })
        }
        RepCheck::Qchar => {
            let kind = sl2_kind(c, dim)?;
            let module = build_module(kind.clone(), &x, modes.max(MIN_MODES_FOR_EXTRACTION / 2))?;
            let extracted = extract_qchar(&module)?;
            let xs = SpectralCoord::rational(x);
            let oracle = match &kind {
                Sl2Kind::Finite { k } => sl2_kr_char(*k, &xs, None),
                Sl2Kind::Truncated { k, dim } => {
                    sl2_asymptotic_char(&SpectralCoord::rational(x + k), &xs, *dim as u32 - 1)
                }
            };
            let r = CharacterReport::compare(extracted.clone(), oracle);
            Ok(Report {
                command: "rep-check qchar".into(),
                exit: if r.pass { 0 } else { 1 },
                json: json!({
                    "pass": r.pass,
                    "module": kind,
                    "x": fmt_q(&x),
                    "character": extracted.to_json(&a1),
                    "oracle": r.to_json(&a1),
                }),
                text: format!("{} extracted vs closed form\n{}", verdict(r.pass), extracted.to_table(&a1)),
            })
        }
        RepCheck::ThreeTerm => {
            let y = rational(&c.y, None, "y")?;
            let m = dim.unwrap_or(8);
            let n = c.height.unwrap_or(3);
            let explicit = verify_sl2_three_term(&x, &y, m, n)?;
            let symbolic = sl2_three_term_symbolic(&x, &y, m, n)?;
            let agree = explicit == symbolic;
            let pass = explicit.pass && agree;
            Ok(Report {
                command: "rep-check three-term".into(),
                exit: if pass { 0 } else { 1 },
                json: json!({
                    "pass": pass,
                    "x": fmt_q(&x),
                    "y": fmt_q(&y),
                    "dim": m,
                    "height": n,
                    "explicit": explicit.to_json(&a1),
                    "matches_symbolic": agree,
                }),
                text: format!(
                    "{} [C^2_x][SL^x_y] = [SL^(x+1)_y] + [SL^(x-1)_y]; explicit and symbolic {}\n{}",
                    verdict(pass),
                    if agree { "agree" } else { "differ" },
                    explicit.diff_table()
                ),
            })
        }
    }
}

fn translate(c: &Common) -> Result<Report, CliError> {
    let (cartan, i) = cartan_node(c)?;
    let x = coord(&c.x, Some("x"), "x")?;
    let y = coord(&c.y, Some("y"), "y")?;
    let r = verify_tq_translation(&cartan, i, &x, &y);
    let text = format!(
        "{} translated TQ equals the quantum display\n  translated: {}\n  quantum:    {}\n",
        verdict(r.pass),
        r.translated,
        r.quantum
    );
    Ok(Report {
        command: "translate".into(),
        exit: if r.pass { 0 } else { 1 },
        json: json!({
            "pass": r.pass,
            "type": cartan.lie_type().to_string(),
            "node": i + 1,
            "translated_display": r.translated.to_string(),
            "quantum_display": r.quantum.to_string(),
            "report": r,
        }),
        text,
    })
}
